"""
Total positivity, normality and moments
=======================================

Finite-window checks of the positivity properties of the coordination
matrices, the asymptotic normality of the ``c_n`` coefficients, and the
Hankel determinants behind the Stieltjes moment question.
"""

from cubic_coordination import analytics, positivity, riordan, zeros

###############################################################################
# Exhaustive TP on an 8x8 window (minors up to order 4), STP by corner
# minors, LSTP for triangles.

for name in ("S", "C", "D"):
    rep = positivity.check_tp_window(riordan.NAMED[name](10).window(8), 4)
    print(name, rep.verdict, rep.minors_checked)

print(positivity.check_stp_window(riordan.C_matrix(10).window(7)).verdict)
print(positivity.check_stp_window(riordan.S_matrix(10).window(7)))
print(positivity.check_lstp_window(riordan.c_triangle(10).window(8)).verdict)

###############################################################################
# Larger members of the ``L^(m)`` family: corner minors on a 7x7 window.
# This is evidence on a window, nothing more.

for m in range(3, 7):
    print(m, positivity.check_stp_window(riordan.lattice_square(m, 10).window(7)).verdict)

###############################################################################
# Coefficient statistics of ``c_n``: the mean approaches
# ``(n-1)/2 + 1/(2 sqrt 2)`` very quickly, the variance grows linearly.

for n in (10, 50, 200):
    s = analytics.coeff_stats(zeros.family_poly("c", n))
    print(n, float(s.mean), float(s.variance), s.modes, float(analytics.mean_drift(n)))

###############################################################################
# Normal approximation, measured as sup-distances.

for n in (25, 50, 100, 200):
    r = analytics.normality_report("c", n)
    print(n, round(r.clt_sup_error, 4), round(r.llt_sup_error, 4))

###############################################################################
# Hankel determinants. The central Delannoy numbers have closed-form Hankel
# determinants, while the central coordination numbers already fail at h_2.

print(analytics.hankel_suite("delta", 6))
print(analytics.check_sm("S", 8).sm_consistent, analytics.check_sm("C", 8).witness)
