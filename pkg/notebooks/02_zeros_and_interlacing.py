"""
Zeros of the coordination polynomials
=====================================

Reading the triangles row by row gives polynomials ``c_n`` and ``d_n``.
Their zeros are real, simple, interlacing, and trapped in the interval
``(-3 - 2*sqrt 2, -3 + 2*sqrt 2)``. Here everything is certified with exact
Sturm sequences rather than floating-point root finders.
"""

from cubic_coordination import zeros

###############################################################################
# A few rows.

for n in range(1, 6):
    print(f"c_{n} = {zeros.family_poly('c', n)}    d_{n} = {zeros.family_poly('d', n)}")

###############################################################################
# A certificate: root count by Sturm, then every root's sign against
# ``x^2 + 6x + 1``.

cert = zeros.check_real_rooted_and_interval("c", 12)
print(cert)
print("enclosure widths <=", max(iv.width for iv in cert.enclosures))

###############################################################################
# Interlacing verdicts.

c, d = zeros.family_poly("c", 9), zeros.family_poly("d", 9)
print("c_8 vs c_9:", zeros.check_interlacing(zeros.family_poly("c", 8), c))
print("c_9 vs d_9:", zeros.check_interlacing(c, d))
print("d_9 vs c_9:", zeros.check_interlacing(d, c))

###############################################################################
# The Delannoy zeros have a closed trigonometric form; compare it against the
# certified enclosures.

report = zeros.verify_delannoy_zero_formula(10)
for row in report.rows[:4]:
    print(row.k, row.value, row.inside)

###############################################################################
# Pool the zeros of c_1..c_N: the largest gap across the limit interval shrinks.

for N in (5, 10, 25, 50):
    dens = zeros.empirical_zero_density(N)
    print(N, dens.pooled, round(dens.max_gap, 4))

###############################################################################
# The general family ``ell^(m)`` is still real-rooted for larger ``m``, but
# its zeros no longer stay inside the interval.

for m in (3, 5, 8):
    certs = [zeros.check_real_rooted_and_interval("ell", n, m) for n in range(1, 10)]
    print(m, all(c.real_rooted for c in certs), all(c.inside_interval for c in certs))

###############################################################################
# Where does the first zero escape to the left? An empirical table only.

for m in range(2, 8):
    print(zeros.first_left_escape(m, 30))
