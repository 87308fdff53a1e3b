from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st
from oracles import to_sympy

from wordmaps.algebra import (
    I,
    GaussianRational,
    NotDivisible,
    Poly,
    RootConfig,
    UniQuotient,
    complex_roots,
    gcd_divides,
    parse_poly,
    poly_gcd,
    quotient_reduce,
    resultant,
    variables,
)
from wordmaps.algebra.elimination import DegenerateElimination, is_perfect_square_of

VARS = ("a", "b", "c")
SYM = {v: sp.Symbol(v) for v in VARS + ("s", "t", "u", "C", "D", "z")}

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def laurent(vars=VARS, lo=-2, hi=3, max_terms=4):
    exps = st.tuples(*[st.integers(lo, hi) for _ in vars])
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda d: Poly(vars, d))


def polys(vars=VARS, hi=3, max_terms=4):
    return laurent(vars, 0, hi, max_terms)


points = st.tuples(*[coeffs.filter(bool) for _ in VARS])


# --- ring arithmetic ------------------------------------------------------


def test_ring_examples():
    t1, lam = variables("t1 lam")
    assert (t1 + t1**-1) * t1 == t1**2 + 1
    assert (lam - 1) * (lam + 1) == lam**2 - 1
    assert (t1**-1) ** -2 == t1**2


def test_eval_examples():
    p = parse_poly("t1^-1 + t1^-2*t2^-1 - t1^-1*t2^-2 - t2^-1", ("t1", "t2"))
    assert p.evaluate({"t1": 2, "t2": 3}) == Fraction(7, 36)
    lam, mu = variables("lam mu")
    q = lam * (1 - mu**2)
    assert q.evaluate({"lam": 1, "mu": 1}) == 0
    assert q.evaluate({"lam": 1, "mu": I}) == 2


def test_coeff_split_examples():
    s, C, D = variables("s C D")
    assert (s**4 * C + s**2 * D + 1).coeff_split("s") == [(4, C), (2, D), (0, C**0)]
    lam, mu = variables("lam mu")
    assert (lam**2 * mu - lam**2).coeff_split("lam") == [(2, mu - 1)]


def test_no_zero_coefficients_stored():
    a, b = variables("a b")
    p = (a + b) - b
    assert p == a and len(p) == 1


def test_canonical_text_roundtrip():
    p = parse_poly("-s^4*C^3 + 2*s^2*D - 7/3", ("s", "C", "D"))
    assert parse_poly(p.to_text(("s", "C", "D")), ("s", "C", "D")) == p


@given(laurent(), laurent(), laurent())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p - p == 0


@given(laurent(), laurent(), points)
def test_evaluation_homomorphism(p, q, pt):
    at = dict(zip(VARS, pt))
    assert (p * q).evaluate(at) == p.evaluate(at) * q.evaluate(at)
    assert (p + q).evaluate(at) == p.evaluate(at) + q.evaluate(at)


@given(laurent(), laurent())
def test_matches_sympy(p, q):
    assert sp.expand(to_sympy(p * q, SYM) - to_sympy(p, SYM) * to_sympy(q, SYM)) == 0


@given(laurent(), points)
def test_gaussian_evaluation_consistent_with_complex(p, pt):
    at = {"a": GaussianRational(pt[0], 1), "b": pt[1], "c": pt[2]}
    exact = p.evaluate(at)
    approx = p.evaluate({"a": complex(float(pt[0]), 1.0), "b": float(pt[1]), "c": float(pt[2])})
    assert abs(complex(GaussianRational.coerce(exact)) - approx) < 1e-6 * (1 + abs(approx))


# --- elimination ----------------------------------------------------------


def test_resultant_examples():
    s, t, u = variables("s t u")
    assert resultant(u - s, u - t, "u") == s - t
    assert resultant(u**2 - s, u, "u") in (-s, s)


def test_resultant_degenerate():
    s, u = variables("s u")
    with pytest.raises(DegenerateElimination):
        resultant(s + 1, s - 1, "u")


@given(polys(("s", "t", "u"), 3, 4), polys(("s", "t", "u"), 3, 4))
def test_resultant_matches_sympy(p, q):
    if p.degree("u") <= 0 and q.degree("u") <= 0:
        return
    ours = to_sympy(resultant(p, q, "u"), SYM)
    P, Q = (sp.Poly(to_sympy(f, SYM), SYM["u"]) for f in (p, q))
    if P.is_zero or Q.is_zero:
        assert ours == 0
        return
    ref = sympy_sylvester_det(P, Q)
    assert sp.expand(ours - ref) == 0
    # sympy's own resultant agrees up to its sign convention
    alt = sp.resultant(P.as_expr(), Q.as_expr(), SYM["u"])
    assert sp.expand(ours - alt) == 0 or sp.expand(ours + alt) == 0


def sympy_sylvester_det(P, Q):
    m, n = P.degree(), Q.degree()
    pc, qc = P.all_coeffs(), Q.all_coeffs()
    rows = [[0] * i + pc + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + qc + [0] * (m - 1 - i) for i in range(m)]
    return sp.expand(sp.Matrix(rows).det(method="berkowitz"))


def test_resultant_sign_convention():
    s, u = variables("s u")
    # rows of p first: Res(u + 1, u^3) = (-1)^3
    assert resultant(u + 1, u**3, "u") == -1
    assert resultant(u**3, u + 1, "u") == 1


@given(polys(("s", "t", "u"), 3, 3), polys(("s", "t", "u"), 3, 3))
def test_resultant_antisymmetry(p, q):
    dp, dq = p.degree("u"), q.degree("u")
    if dp <= 0 or dq <= 0:
        return
    assert resultant(p, q, "u") == (-1) ** (dp * dq) * resultant(q, p, "u")


@given(polys(("s", "u"), 2, 3), polys(("s", "u"), 2, 3), polys(("s", "u"), 2, 3))
def test_resultant_vanishes_on_common_factor(f, g, h):
    if f.degree("u") < 1 or not g or not h:
        return
    assert not resultant(f * g, f * h, "u")


def test_gcd_examples():
    C, D = variables("C D")
    g = poly_gcd(C**2 - D**2, C - D)
    assert g in (C - D, D - C)
    r = gcd_divides(C - D, C**2 - D**2)
    assert r.divides and r.quotient == C + D


@given(polys(("a", "b"), 2, 3), polys(("a", "b"), 2, 3))
def test_divides_product(p, q):
    if not p:
        return
    r = gcd_divides(p, q * p)
    assert r.divides and r.quotient == q


@given(polys(("a", "b"), 2, 3), polys(("a", "b"), 2, 3), polys(("a", "b"), 2, 2))
def test_gcd_matches_sympy(p, q, f):
    P, Q = p * f, q * f
    if not P or not Q:
        return
    ours = to_sympy(poly_gcd(P, Q), SYM)
    ref = sp.gcd(to_sympy(P, SYM), to_sympy(Q, SYM))
    assert sp.simplify(ours / ref).is_constant()


def test_not_divisible():
    a, b = variables("a b")
    with pytest.raises(NotDivisible):
        (a + 1).exact_quotient(b + 1)


def test_perfect_square():
    C, D = variables("C D")
    r = C - D**2 + 4 * D
    assert is_perfect_square_of(r * r, r)
    assert not is_perfect_square_of(r * r + 1, r)


# --- quotients and roots --------------------------------------------------


def test_quotient_examples():
    m = [Fraction(1, 2), 0, 1]
    assert quotient_reduce([1, 4, 12, 8, 16], m, "t") == -1
    assert quotient_reduce([1, -4, 4, -8], m, "t") == -1
    assert quotient_reduce([0, 0, 1], m, "t") == Fraction(-1, 2)


@given(st.lists(coeffs, min_size=1, max_size=6), st.lists(coeffs, min_size=1, max_size=6))
def test_quotient_ring_homomorphism(p, q):
    mod = [1, 0, 0, 1]  # z^3 + 1
    P, Q = UniQuotient(mod, p), UniQuotient(mod, q)
    prod = [Fraction(0)] * (len(p) + len(q))
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            prod[i + j] += x * y
    assert P * Q == UniQuotient(mod, prod)


def test_quotient_inverse():
    z = UniQuotient.generator([1, 0, 0, 1])
    assert z * z.inverse() == 1
    assert z**-3 == -1


def test_roots_examples():
    r = sorted(complex_roots([1, 0, 1]), key=lambda c: c.imag)
    assert abs(r[0] + 1j) < 1e-12 and abs(r[1] - 1j) < 1e-12
    r = complex_roots([1, -2, 1])
    assert all(abs(x - 1) < 1e-6 for x in r)
    cubes = complex_roots([-1, 0, 0, 1])
    for k in range(3):
        target = np.exp(2j * np.pi * k / 3)
        assert min(abs(c - target) for c in cubes) < 1e-12


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=8).filter(lambda c: c[-1] != 0 and c[0] != 0))
def test_vieta(c):
    roots = complex_roots(c, config=RootConfig(tol=1e-10))
    assert len(roots) == len(c) - 1
    lead = c[-1]
    assert abs(sum(roots) + c[-2] / lead) < 1e-6 * (1 + sum(abs(x) for x in c))
    prod = np.prod(roots)
    assert abs(prod - (-1) ** (len(c) - 1) * c[0] / lead) < 1e-6 * max(1.0, abs(prod))
