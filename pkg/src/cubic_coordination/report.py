"""Named verification suites and the report document they produce.

Each suite is a list of checks; a check returns ``(ok, witness)`` where the
witness is any JSON-friendly value (or ``None``). Reports are ordered by
check id so that identical invocations serialise identically.
"""

import csv
import io
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import analytics, lattice, positivity, riordan, zeros
from .exact import ExactMatrix, det_fraction_free

SUITES = ("riordan", "positivity", "zeros", "normality", "hankel")
INT64_MAX = 2**63 - 1


@dataclass
class CheckResult:
    id: str
    paper_ref: str
    ok: bool
    witness: object = None
    seconds: float = None

    @property
    def verdict(self):
        return "pass" if self.ok else "fail"


@dataclass
class ReportDocument:
    suite: str
    params: dict
    seed: int
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.ok for c in self.checks)

    def to_dict(self, timing=True):
        checks = []
        for c in sorted(self.checks, key=lambda c: c.id):
            entry = {"id": c.id, "paper_ref": c.paper_ref, "verdict": c.verdict}
            if c.witness is not None:
                entry["witness"] = jsonable(c.witness)
            if timing and c.seconds is not None:
                entry["seconds"] = round(c.seconds, 6)
            checks.append(entry)
        return {"suite": self.suite, "params": jsonable(self.params), "checks": checks, "seed": self.seed}

    def to_json(self, timing=True):
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=False) + "\n"

    def to_csv(self, timing=True):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = ["id", "paper_ref", "verdict", "witness"] + (["seconds"] if timing else [])
        writer.writerow(header)
        for c in self.to_dict(timing)["checks"]:
            row = [c["id"], c["paper_ref"], c["verdict"], json.dumps(c["witness"]) if "witness" in c else ""]
            if timing:
                row.append(c.get("seconds", ""))
            writer.writerow(row)
        return buf.getvalue()

    def to_pretty(self, timing=True):
        lines = [f"suite {self.suite}  seed {self.seed}  params {json.dumps(jsonable(self.params))}"]
        for c in self.to_dict(timing)["checks"]:
            extra = f"  witness={json.dumps(c['witness'])}" if "witness" in c else ""
            secs = f"  ({c['seconds']:.3f}s)" if "seconds" in c else ""
            lines.append(f"  [{c['verdict'].upper():4}] {c['id']}  <{c['paper_ref']}>{extra}{secs}")
        failed = sum(1 for c in self.checks if not c.ok)
        lines.append(f"{len(self.checks) - failed} passed, {failed} failed")
        return "\n".join(lines) + "\n"


def jsonable(value):
    """Tuples become lists, fractions become ``"p/q"``, integers beyond 64 bits become strings."""
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > INT64_MAX else value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


class _Runner:
    def __init__(self, timing=True):
        self.results = []
        self.timing = timing

    def check(self, id, paper_ref, fn):
        start = time.perf_counter()
        outcome = fn()
        ok, witness = outcome if isinstance(outcome, tuple) else (outcome, None)
        elapsed = time.perf_counter() - start
        self.results.append(CheckResult(id, paper_ref, bool(ok), witness, elapsed))


# suites ----------------------------------------------------------------------

S_TABLE = [
    [1, 1, 1, 1, 1],
    [0, 2, 4, 6, 8],
    [0, 2, 8, 18, 32],
    [0, 2, 12, 38, 88],
    [0, 2, 16, 66, 192],
]
D_TABLE = [
    [1, 1, 1, 1, 1],
    [1, 3, 5, 7, 9],
    [1, 5, 13, 25, 41],
    [1, 7, 25, 63, 129],
    [1, 9, 41, 129, 321],
]
C_HAT_ROWS = [[1], [2, 1], [2, 4, 1], [2, 8, 6, 1], [2, 12, 18, 8, 1]]
C_HAT_INV_ROWS = [[1], [-2, 1], [6, -4, 1], [-22, 16, -6, 1], [90, -68, 30, -8, 1]]


def _table_matches(fn, expected):
    got = [[fn(n, k) for k in range(len(expected[0]))] for n in range(len(expected))]
    bad = [(n, k) for n in range(len(got)) for k in range(len(got[0])) if got[n][k] != expected[n][k]]
    return (not bad, {"first_mismatch": bad[0]} if bad else None)


def _rows_match(M, rows):
    for n, row in enumerate(rows):
        got = [M[n, k] for k in range(n + 1)]
        if got != row:
            return False, {"row": n, "got": got, "expected": row}
    return True, None


def riordan_suite(run, window=8):
    size = max(window, 6)
    order = 2 * size + 4
    c_hat = riordan.c_triangle(order)

    run.check("riordan.table.S", "coordination table S(n,k)", lambda: _table_matches(lattice.S, S_TABLE))
    run.check("riordan.table.D", "Delannoy table D(n,k)", lambda: _table_matches(lattice.D, D_TABLE))
    run.check(
        "riordan.table.S_riordan",
        "S as Riordan array R(1,(1+x)/(1-x))",
        lambda: riordan.S_matrix(order).window(size) == ExactMatrix.from_function(size, size, lattice.S),
    )
    run.check(
        "riordan.table.C_riordan",
        "C as Riordan array R((1+x)/(1-x),(1+x)/(1-x))",
        lambda: riordan.C_matrix(order).window(size) == ExactMatrix.from_function(size, size, lattice.C),
    )
    run.check("riordan.triangle.c_hat", "lower triangle c-hat display", lambda: _rows_match(c_hat.window(5), C_HAT_ROWS))
    run.check(
        "riordan.triangle.c_hat_inverse",
        "inverse of c-hat is R(r(-x), x r(-x))",
        lambda: _rows_match(c_hat.inverse().window(5), C_HAT_INV_ROWS)[0]
        and c_hat.inverse().window(size) == riordan.c_triangle_inverse_closed_form(order).window(size),
    )
    run.check(
        "riordan.group.inverse_product",
        "Riordan group law: R R^-1 = I",
        lambda: (c_hat @ c_hat.inverse()).window(size) == ExactMatrix.identity(size),
    )

    def production():
        data = riordan.extract_production(c_hat)
        r = lattice.diagonal("Schroder", 8).values
        # a_{n+1} = z_n = (-1)^n r_n for n >= 1, with a_0 = 1 and a_1 = z_0 = 2
        A_ok = data.A[0] == 1 and data.A[1] == 2 and all(data.A[n + 1] == (-1) ** n * r[n] for n in range(1, 7))
        Z_ok = data.Z[0] == 2 and all(data.Z[n] == (-1) ** n * r[n] for n in range(1, 8))
        return A_ok and Z_ok, {"A": list(data.A.coeffs[:8]), "Z": list(data.Z.coeffs[:8])}

    run.check("riordan.production.A_Z", "A- and Z-sequences of c-hat", production)
    run.check(
        "riordan.production.replay",
        "row recurrence from A/Z rebuilds c-hat",
        lambda: riordan.replay_rows(riordan.extract_production(c_hat), 11) == c_hat.window(11),
    )

    def left_products():
        for name in ("C", "c-hat", "S", "D"):
            R = riordan.NAMED[name](order)
            left, right = riordan.left_product_decompose(R, 6)
            if left @ right != R.window(6):
                return False, {"matrix": name}
        return True, None

    run.check("riordan.decomposition.left_product", "left-product factorisation R = R^L diag(1,R)", left_products)

    def ldu():
        for name in ("S", "C"):
            L, Dg, U = riordan.ldu_factors(name, 8)
            target = riordan.NAMED[name](order).window(8)
            if L @ Dg @ U != target:
                return False, {"matrix": name}
        return True, None

    run.check("riordan.decomposition.ldu", "LDU factorisation of S and C", ldu)

    def det_s():
        for n in range(8):
            d = det_fraction_free(riordan.S_matrix(order).window(n + 1))
            if d != 2 ** (n * (n + 1) // 2):
                return False, {"n": n, "det": d}
        return True, None

    run.check("riordan.det.S", "det of S windows is 2^(n(n+1)/2)", det_s)

    def central():
        N = 30
        ok = True
        for kind in ("D", "S", "C"):
            rec = list(lattice.diagonal(kind, N).values)
            ok &= rec == lattice.gf_expand(kind, N) == lattice.central_by_jacobi(kind, N)
        r = list(lattice.diagonal("Schroder", N).values)
        ok &= r == lattice.schroder_by_recurrence(N)
        Dn, Sn, Cn = (lattice.diagonal(k, N).values for k in ("D", "S", "C"))
        ok &= all(2 * Sn[n] == Dn[n] + Dn[n - 1] for n in range(1, N + 1))
        ok &= all(Cn[n] == (n + 1) * r[n] for n in range(N + 1))
        return ok

    run.check("riordan.central.agreement", "central sequences: recurrence, g.f. and Jacobi agree", central)


def positivity_suite(run, window=8, max_order=4, seed=0):
    order = window + 2
    for name in ("S", "C", "s-hat", "c-hat", "D", "d-hat"):
        M = riordan.NAMED[name](order).window(window)

        def tp(M=M):
            rep = positivity.check_tp_window(M, max_order)
            return rep.passed, {"minors": rep.minors_checked, "witness": _witness(rep)}

        run.check(f"positivity.tp.{name}", "total positivity of coordination matrices", tp)
    for name in ("C", "D"):
        M = riordan.NAMED[name](order).window(window - 1)

        def stp(M=M):
            rep = positivity.check_stp_window(M)
            return rep.passed, {"minors": rep.minors_checked, "witness": _witness(rep)}

        run.check(f"positivity.stp.{name}", "strict total positivity via corner minors", stp)
    for name in ("c-hat", "d-hat", "p-hat"):
        M = riordan.NAMED[name](order).window(window)

        def lstp(M=M):
            rep = positivity.check_lstp_window(M, seed=seed)
            return rep.passed, {"minors": rep.minors_checked, "witness": _witness(rep)}

        run.check(f"positivity.lstp.{name}", "lower strict total positivity via corner minors", lstp)
    run.check(
        "positivity.negative_control",
        "a non-TP matrix is rejected with a witness",
        lambda: not positivity.check_tp_window(ExactMatrix([[1, 2], [3, 1]]), 2).passed,
    )


def _witness(rep):
    w = rep.witness
    return None if w is None else {"rows": w.rows, "cols": w.cols, "value": w.value}


def zeros_suite(run, max_n=50):
    def certified(kind):
        bad = [n for n in range(1, max_n + 1) if not zeros.check_real_rooted_and_interval(kind, n).passed]
        return not bad, {"failed_n": bad} if bad else None

    run.check("zeros.real_rooted.c", "c_n has real simple zeros inside (-3-2sqrt2, -3+2sqrt2)", lambda: certified("c"))
    run.check("zeros.real_rooted.d", "d_n has real simple zeros inside (-3-2sqrt2, -3+2sqrt2)", lambda: certified("d"))

    def interlacing(p_kind, q_kind, shift, expected):
        start = max(1, 1 + shift)
        bad = []
        for n in range(start, max_n + 1):
            verdict = zeros.check_interlacing(zeros.family_poly(p_kind, n - shift), zeros.family_poly(q_kind, n))
            if verdict != expected:
                bad.append(n)
        return not bad, {"failed_n": bad} if bad else None

    run.check("zeros.interlace.c", "c_{n-1} interlaces c_n", lambda: interlacing("c", "c", 1, "interlaces"))
    run.check("zeros.interlace.d", "d_{n-1} interlaces d_n", lambda: interlacing("d", "d", 1, "interlaces"))
    run.check("zeros.interlace.d_c", "d_{n-1} interlaces c_n", lambda: interlacing("d", "c", 1, "interlaces"))
    run.check(
        "zeros.interlace.c_d", "c_n alternates left of d_n", lambda: interlacing("c", "d", 0, "alternates_left")
    )

    def formula():
        worst = 0.0
        for n in range(1, min(20, max_n) + 1):
            rep = zeros.verify_delannoy_zero_formula(n)
            if not rep.passed:
                return False, {"n": n}
            lead = abs(zeros.family_poly("d", n).leading)
            worst = max([worst] + [float(row.residual / lead) for row in rep.rows])
        return True, {"max_relative_residual": float(worst)}

    run.check("zeros.delannoy_formula", "explicit zeros of d_n", formula)

    def density():
        small = zeros.empirical_zero_density(5)
        large = zeros.empirical_zero_density(max(max_n, 6))
        return large.max_gap < small.max_gap and large.all_inside, {"max_gap_5": float(small.max_gap), "max_gap_N": float(large.max_gap)}

    run.check("zeros.density", "zeros of c_n are dense in the limit interval", density)


def _ladder_ok(values, allow_flat=1):
    """Nonincreasing with at most ``allow_flat`` non-strict steps."""
    flat = 0
    for a, b in zip(values, values[1:]):
        if b > a:
            return False
        if b == a:
            flat += 1
    return flat <= allow_flat


def normality_suite(run, ladder=(25, 50, 100, 200), mode_n=200, newton_n=100, logconvex_n=200):
    def modes():
        bad = [n for n in range(1, mode_n + 1) if analytics.coeff_stats(zeros.family_poly("c", n)).modes != (n // 2,)]
        return not bad, {"failed_n": bad} if bad else None

    run.check("normality.modes.c", "unique mode floor(n/2) of c_n", modes)

    def newton_darroch():
        for n in range(1, newton_n + 1):
            rep = analytics.check_logconcave_unimodal(zeros.family_poly("c", n).coeffs, real_rooted=True)
            if not (rep.logconcave and rep.newton and rep.darroch):
                return False, {"n": n}
        return True

    run.check("normality.newton_darroch.c", "Newton and Darroch inequalities for c_n", newton_darroch)

    for kind in ("D", "S", "C"):

        def lcx(kind=kind):
            rep = analytics.check_logconvex_3term(kind, logconvex_n)
            return rep.passed, {"first_failure": rep.first_failure} if rep.first_failure else None

        run.check(f"normality.logconvex.{kind}", "strict log-convexity of central sequences", lcx)

    reports = [analytics.normality_report("c", n) for n in ladder]

    def clt():
        errs = [r.clt_sup_error for r in reports]
        return _ladder_ok(errs), {"n": list(ladder), "sup_error": errs}

    def llt():
        errs = [r.llt_sup_error for r in reports]
        return _ladder_ok(errs), {"n": list(ladder), "sup_error": errs}

    def drift():
        values = [analytics.mean_drift(n) for n in ladder]
        strict = all(b < a for a, b in zip(values, values[1:]))
        return strict, {"n": list(ladder), "drift": [mpf_str(v) for v in values]}

    def variance():
        t0, t1 = Fraction(1, 6), Fraction(6)
        ok = analytics.brackets_limit_interval(t0, t1)
        bad = [n for n in range(1, max(ladder) // 2 + 1) if not analytics.variance_lower_bound_holds("c", n, t0, t1)]
        return ok and not bad, {"t0": t0, "t1": t1, "failed_n": bad} if bad or not ok else {"t0": t0, "t1": t1}

    run.check("normality.clt.c", "central limit theorem for c_n coefficients", clt)
    run.check("normality.llt.c", "local limit theorem for c_n coefficients", llt)
    run.check("normality.mean_drift.c", "mean of c_n is (n-1)/2 + 1/(2sqrt2) + o(1)", drift)
    run.check("normality.variance_bound.c", "variance of c_n grows at least linearly", variance)


def mpf_str(value):
    import mpmath

    return mpmath.nstr(value, 6)


def hankel_suite(run, N=8):
    for kind in ("delta", "delta_bar", "epsilon"):

        def closed(kind=kind):
            suite = analytics.hankel_suite(kind, N)
            return suite.closed_form_ok, {"h": suite.determinants}

        run.check(f"hankel.closed_form.{kind}", "closed-form Hankel determinants", closed)
    for kind in ("S", "D"):

        def sm(kind=kind):
            rep = analytics.check_sm(kind, N)
            return rep.sm_consistent, {"witness": rep.witness} if rep.witness else None

        run.check(f"hankel.sm.{kind}", "Stieltjes moment property of central sequences", sm)

    def not_sm():
        rep = analytics.check_sm("C", N)
        return rep.witness == (2, "h", -4), {"witness": rep.witness}

    run.check("hankel.not_sm.C", "central coordination numbers are not Stieltjes moment", not_sm)
    run.check(
        "hankel.telescoping",
        "Desnanot-Jacobi telescoping identity of the moment proof",
        lambda: all(analytics.telescoping_identity(n) for n in range(2, N + 1)),
    )


SMOKE = {
    "riordan": {"window": 6},
    "positivity": {"window": 6, "max_order": 3},
    "zeros": {"max_n": 12},
    "normality": {"ladder": (10, 20, 40, 80), "mode_n": 40, "newton_n": 30, "logconvex_n": 40},
    "hankel": {"N": 6},
}


def default_params(suite, smoke=False):
    if smoke:
        return dict(SMOKE[suite])
    return {
        "riordan": {"window": 8},
        "positivity": {"window": 8, "max_order": 4},
        "zeros": {"max_n": 50},
        "normality": {"ladder": (25, 50, 100, 200), "mode_n": 200, "newton_n": 100, "logconvex_n": 200},
        "hankel": {"N": 8},
    }[suite]


_RUNNERS = {
    "riordan": riordan_suite,
    "positivity": positivity_suite,
    "zeros": zeros_suite,
    "normality": normality_suite,
    "hankel": hankel_suite,
}


def run_suite(suite, params=None, seed=0, smoke=False):
    """Run one suite (or ``"all"``) and return its :class:`ReportDocument`."""
    names = SUITES if suite == "all" else (suite,)
    if any(n not in _RUNNERS for n in names):
        raise ValueError(f"unknown suite {suite!r}")
    run = _Runner()
    merged = {}
    for name in names:
        p = default_params(name, smoke)
        p.update({k: v for k, v in (params or {}).get(name, {}).items() if v is not None})
        if name == "positivity":
            _RUNNERS[name](run, seed=seed, **p)
        else:
            _RUNNERS[name](run, **p)
        merged[name] = p
    body = merged if suite == "all" else merged[suite]
    return ReportDocument(suite, body, seed, run.results)


__all__ = [
    "CheckResult",
    "ReportDocument",
    "SUITES",
    "default_params",
    "jsonable",
    "run_suite",
]
