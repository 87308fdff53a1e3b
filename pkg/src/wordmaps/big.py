"""Almost surjectivity from the trace map restricted to a slice t = a.

For a fixed value a of tr y the slice map (s, u) -> (P(s, a, u), Q(s, a, u))
is Big when its image misses only finitely many points.  With
C = A - 2 and D = B - a(C + 1) we set

    h1 = P(s, a, u) - 2 - C,    h2 = Q(s, a, u) - a(C + 1) - D,

eliminate u by a resultant R(s, C, D) = sum_e s^e p_e(C, D) and show that
for all but finitely many (C, D) the polynomial R(., C, D) has a usable root.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .algebra.elimination import DegenerateElimination, poly_gcd, resultant
from .algebra.poly import Poly
from .algebra.roots import complex_roots
from .fricke import SizeGuardExceeded, TraceMap, iterate_word, psi_iterate, trace_map, trace_polys
from .words import Word

SCD = ("s", "C", "D")


@dataclass
class BigReport:
    a: Fraction
    h1: Poly
    h2: Poly
    u_degrees: tuple[int, int]
    generic_u_degrees: tuple[int, int]
    R: Poly
    coeffs: list[tuple[int, Poly]]
    pairwise: list[list[Optional[bool]]]
    resultant_checks: dict
    leading_roots: list
    verdict: str
    reason: str
    notes: list[str] = field(default_factory=list)

    @property
    def levels(self) -> list[int]:
        return [e for e, _ in self.coeffs]

    @property
    def degree_drop(self) -> bool:
        return self.u_degrees != self.generic_u_degrees

    def p(self, level: int) -> Poly:
        return dict(self.coeffs)[level]

    def is_big(self) -> bool:
        return self.verdict == "BigAt"

    def to_json(self) -> dict:
        return {
            "a": str(self.a),
            "substitution": {"C": "A - 2", "D": f"B - {self.a}*(C + 1)"},
            "h1": str(self.h1),
            "h2": str(self.h2),
            "u_degrees": list(self.u_degrees),
            "degree_drop": self.degree_drop,
            "R": self.R.to_text(SCD),
            "coeffs": [[e, p.to_text(("C", "D"))] for e, p in self.coeffs],
            "pairwise_finite": self.pairwise,
            "resultant_checks": self.resultant_checks,
            "leading_coefficient_common_roots": [str(r) for r in self.leading_roots],
            "verdict": f"BigAt({self.a})" if self.is_big() else "NotEstablished",
            "reason": self.reason,
            "notes": self.notes,
        }


def slice_system(tm: TraceMap, a) -> tuple[Poly, Poly]:
    a = Fraction(a)
    vs = ("s", "u", "C", "D")
    C, D = Poly.var("C", vs), Poly.var("D", vs)
    P, Q = tm.slice(a)
    h1 = P.with_vars(vs) - 2 - C
    h2 = Q.with_vars(vs) - a * (C + 1) - D
    return h1, h2


def finite_common_zeros(p: Poly, q: Poly) -> bool:
    """Common zero set in C^2 is finite iff the gcd is a nonzero constant."""
    if not p or not q:
        return False
    return poly_gcd(p, q).is_constant()


def _leading_in_u(h: Poly) -> Poly:
    return h.coeff_split("u")[0][1].with_vars(("s",))


def _common_s_roots(polys: Sequence[Poly]) -> Optional[list]:
    """Common roots in s of the given univariate polynomials; None means all of C."""
    nz = [p for p in polys if p]
    if not nz:
        return None
    g = nz[0]
    for p in nz[1:]:
        g = poly_gcd(g, p)
    g = g.with_vars(("s",))
    if g.is_constant():
        return []
    coeffs = g.univariate_coeffs("s")
    if all(c == 0 for c in coeffs[:-1]):
        return [Fraction(0)]
    return complex_roots(coeffs)


def _family_finite(polys: Sequence[Poly]) -> tuple[bool, str]:
    """Whether the listed polynomials in C, D have finitely many common zeros."""
    if not polys:
        return False, "empty family vanishes everywhere"
    for p in polys:
        if p.is_constant() and p:
            return True, f"nonzero constant {p}"
    for p, q in combinations(polys, 2):
        if finite_common_zeros(p, q):
            return True, f"gcd({p}, {q}) is constant"
    return False, "no pair with constant gcd"


def analyze_slice(tm: TraceMap, a, generic: tuple[int, int] | None = None, max_sylvester: int = 12) -> BigReport:
    a = Fraction(a)
    h1, h2 = slice_system(tm, a)
    d1, d2 = h1.degree("u"), h2.degree("u")
    if d1 <= 0 and d2 <= 0:
        raise DegenerateElimination("both slice polynomials are free of u")
    if d1 + d2 > max_sylvester:
        raise SizeGuardExceeded(f"Sylvester matrix of size {d1 + d2} exceeds {max_sylvester}")
    generic = generic or (tm.P.degree("u"), tm.Q.degree("u"))
    R = resultant(h1, h2, "u").with_vars(SCD)
    coeffs = [(e, p.with_vars(("C", "D"))) for e, p in R.coeff_split("s")]
    ps = [p for _, p in coeffs]
    k = len(ps)
    pairwise: list[list[Optional[bool]]] = [[None] * k for _ in range(k)]
    checks = {}
    for i, j in combinations(range(k), 2):
        fin = finite_common_zeros(ps[i], ps[j])
        pairwise[i][j] = pairwise[j][i] = fin
        if fin:
            checks[f"{coeffs[i][0]},{coeffs[j][0]}"] = _dual_resultants(ps[i], ps[j])
    lead = [_leading_in_u(h) for h in (h1, h2) if h.degree("u") > 0]
    Z = _common_s_roots(lead)
    report = BigReport(a, h1, h2, (d1, d2), generic, R, coeffs, pairwise, checks, Z or [], "NotEstablished", "")
    if report.degree_drop:
        report.notes.append(f"u-degrees drop from {generic} to {(d1, d2)} at t = {a}")
    if not R:
        report.reason = "resultant vanishes identically"
        return report
    positive = [p for e, p in coeffs if e > 0]
    if Z is None:
        report.reason = "leading coefficients in u vanish identically"
    elif not Z:
        ok, why = _family_finite(positive)
        if ok:
            report.verdict, report.reason = "BigAt", f"positive s-levels have finitely many common zeros: {why}"
        else:
            report.reason = f"positive s-levels may vanish together on a curve ({why})"
    elif all(z == 0 for z in Z):
        failures = []
        for i in range(k):
            others = [p for j, p in enumerate(ps) if j != i]
            ok, _ = _family_finite(others)
            if not ok:
                failures.append(coeffs[i][0])
        if not failures:
            report.verdict = "BigAt"
            report.reason = "leading coefficients share only s = 0 and R(., C, D) has a nonzero root off a finite set"
        else:
            report.reason = f"R may reduce to a single monomial in s along a curve (levels {failures})"
    else:
        report.reason = f"leading coefficients share nonzero roots {Z}"
    return report


def _dual_resultants(p: Poly, q: Poly) -> dict:
    out = {}
    for v in ("C", "D"):
        if p.degree(v) > 0 or q.degree(v) > 0:
            r = resultant(p, q, v)
            out[f"res_{v}_nonzero"] = bool(r)
    return out


def big_slice(w: Word, a, max_sylvester: int = 12) -> BigReport:
    return analyze_slice(trace_map(w), a, max_sylvester=max_sylvester)


@dataclass(frozen=True)
class AlmostSurjectivity:
    verdict: str
    witness_a: Optional[Fraction]
    reports: tuple
    reasons: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "witness_a": str(self.witness_a) if self.witness_a is not None else None,
            "reasons": list(self.reasons),
            "slices": [r.to_json() for r in self.reports],
        }


def almost_surjectivity(w: Word, samples: Sequence) -> AlmostSurjectivity:
    reports, reasons = [], []
    for a in samples:
        try:
            rep = big_slice(w, a)
        except (DegenerateElimination, SizeGuardExceeded) as exc:
            reasons.append(f"t = {a}: {exc}")
            continue
        reports.append(rep)
        reasons.append(f"t = {a}: {rep.reason}")
        if rep.is_big():
            return AlmostSurjectivity("AlmostSurjective", Fraction(a), tuple(reports), tuple(reasons))
    return AlmostSurjectivity("NotEstablished", None, tuple(reports), tuple(reasons))


@dataclass(frozen=True)
class IterateVerdict:
    n: int
    a: Fraction
    verdict: str
    method: str
    details: dict

    def to_json(self) -> dict:
        return {"n": self.n, "a": str(self.a), "verdict": self.verdict, "method": self.method, **self.details}


def iterate_and_check(w: Word, n: int, a, max_sylvester: int = 12, max_terms: int = 200_000) -> IterateVerdict:
    """Big verdict for the slice of v_n, where v_1 = w and v_{k+1} = w(v_k, y).

    Small iterates are run through the slice pipeline directly.  Otherwise
    the verdict rests on Big for w at the same slice together with the
    exact identity psi_{v_n} = psi_w^n (t is fixed by psi_w, and a composite
    of maps with cofinite image has cofinite image).
    """
    a = Fraction(a)
    if n == 1:
        rep = big_slice(w, a, max_sylvester)
        return IterateVerdict(1, a, "BigAt" if rep.is_big() else "NotEstablished", "direct", {"report": rep.to_json()})
    tm = psi_iterate(w, n, max_terms)
    try:
        rep = analyze_slice(tm, a, max_sylvester=max_sylvester)
        return IterateVerdict(n, a, "BigAt" if rep.is_big() else "NotEstablished", "direct", {"report": rep.to_json()})
    except SizeGuardExceeded as exc:
        guard = str(exc)
    except DegenerateElimination as exc:
        return IterateVerdict(n, a, "NotEstablished", "direct", {"reason": str(exc)})
    v_n = iterate_word(w, n)
    identity = trace_polys(v_n) == (tm.P, tm.Q)
    try:
        base = big_slice(w, a, max_sylvester)
    except (DegenerateElimination, SizeGuardExceeded) as exc:
        return IterateVerdict(n, a, "NotEstablished", "propagation", {"reason": str(exc), "size_guard": guard})
    ok = identity and base.is_big()
    return IterateVerdict(
        n,
        a,
        "BigAt" if ok else "NotEstablished",
        "propagation",
        {
            "size_guard": guard,
            "composition_identity": identity,
            "base_verdict": base.to_json()["verdict"],
            "word_length": len(v_n),
        },
    )


# --- numeric soundness helpers -------------------------------------------


def common_root_gap(report: BigReport, s0, C0, D0) -> Optional[float]:
    """Smallest scaled |h2| over the u-roots of h1 at (s0, C0, D0).

    A root s0 of R(., C0, D0) should give a value near zero.  None when the
    u-degree of h1 drops at this point.
    """
    pt = {"s": s0, "C": C0, "D": D0}
    c1 = _complex_coeffs(report.h1, pt)
    c2 = _complex_coeffs(report.h2, pt)
    if len(c1) < 2 or abs(c1[-1]) < 1e-12:
        return None
    roots = np.roots(c1[::-1])
    scale = max(1.0, float(np.sum(np.abs(c2))))
    return float(min(abs(np.polyval(c2[::-1], r)) for r in roots) / scale)


def _complex_coeffs(h: Poly, pt: dict) -> list[complex]:
    out = [0j] * (max(h.degree("u"), 0) + 1)
    for e, c in h.coeff_split("u"):
        out[e] = complex(c.evaluate(pt))
    return out
