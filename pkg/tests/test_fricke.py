import random
from fractions import Fraction

import pytest
from conftest import words
from hypothesis import given
from hypothesis import strategies as st
from oracles import eval_letters, letters_of, mmul, mtrace, random_sl2

from wordmaps.algebra import Poly, parse_poly
from wordmaps.fricke import (
    STU,
    FrickeElement,
    PreimageError,
    SizeGuardExceeded,
    TraceMap,
    fricke_of_word,
    iterate_word,
    lift_character,
    preimage_for_matrix,
    preimage_for_trace,
    psi_iterate,
    trace_map,
    trace_polys,
)
from wordmaps.matrices import Mat2, evaluate
from wordmaps.words import Word, parse_word

GOLDEN = "[y x y^-1, x^-1]"
F1 = "(s^2+t^2+u^2-u*s*t-4)*(t^2+u^2-u*s*t)+2"

s, t, u = (Poly.var(v, STU) for v in STU)


def _golden_polys():
    k = s**2 + t**2 + u**2 - u * s * t - 4
    f1 = k * (t**2 + u**2 - u * s * t) + 2
    f2 = f1 * t + (s * (s * t - u) - t) * k - t
    return f1, f2


def _traces(x, y):
    return {"s": mtrace(x), "t": mtrace(y), "u": mtrace(mmul(x, y))}


def test_basis_examples():
    one, zero = Poly.const(1, STU), Poly.const(0, STU)
    assert fricke_of_word(parse_word("x")) == FrickeElement(zero, one, zero, zero)
    assert fricke_of_word(parse_word("x y")) == FrickeElement(zero, zero, zero, one)
    assert fricke_of_word(parse_word("y x")) == FrickeElement(u - s * t, t, s, -one)


def test_golden_trace_polynomials():
    P, Q = trace_polys(parse_word(GOLDEN))
    f1, f2 = _golden_polys()
    assert P == f1 and Q == f2
    assert P == parse_poly(F1, STU)


def test_commutator_trace():
    P, _ = trace_polys(parse_word("[x,y]"))
    assert P == s**2 + t**2 + u**2 - u * s * t - 2


@pytest.mark.parametrize("seed", range(100))
def test_trace_oracle(seed):
    rng = random.Random(seed)
    x, y = random_sl2(rng), random_sl2(rng)
    pt = _traces(x, y)
    for k in range(30):
        w = Word.reduce(2, [(rng.randint(1, 2), rng.choice([-2, -1, 1, 2])) for _ in range(rng.randint(0, 7))])
        P, Q = trace_polys(w)
        m = eval_letters(letters_of(w.syllables), [x, y])
        assert P.evaluate(pt) == mtrace(m)
        assert Q.evaluate(pt) == mtrace(mmul(m, y)) == mtrace(mmul(y, m))


@given(words(2, 8), st.integers(0, 10**6))
def test_fricke_reconstruction(w, seed):
    rng = random.Random(seed)
    X0, Y0 = (Mat2.of(random_sl2(rng)) for _ in range(2))
    assert fricke_of_word(w).realize(X0, Y0) == evaluate(w, [X0, Y0])


@given(words(2, 6), st.integers(0, 10**6))
def test_commutative_diagram(w, seed):
    # pi(phi_w(x, y)) = psi_w(pi(x, y)) with phi_w(x, y) = (w(x, y), y)
    rng = random.Random(seed)
    x, y = random_sl2(rng), random_sl2(rng)
    m = eval_letters(letters_of(w.syllables), [x, y])
    lhs = (mtrace(m), mtrace(y), mtrace(mmul(m, y)))
    pt = _traces(x, y)
    assert trace_map(w)(pt["s"], pt["t"], pt["u"]) == lhs


@given(words(2, 4))
def test_composition_identity(w):
    two = psi_iterate(w, 2)
    P, Q = trace_polys(w)
    sub = {"s": P, "u": Q}
    assert two.P == P.subs(sub).with_vars(STU)
    assert two == TraceMap(*trace_polys(iterate_word(w, 2)))


def test_golden_second_iterate_numeric():
    w = parse_word(GOLDEN)
    v2 = iterate_word(w, 2)
    P, Q = trace_polys(w)
    rng = random.Random(7)
    x, y = random_sl2(rng), random_sl2(rng)
    pt = _traces(x, y)
    first = {"s": P.evaluate(pt), "t": pt["t"], "u": Q.evaluate(pt)}
    m = eval_letters(letters_of(v2.syllables), [x, y])
    assert P.evaluate(first) == mtrace(m)


def test_iterate_guard():
    with pytest.raises(SizeGuardExceeded):
        psi_iterate(parse_word(GOLDEN), 3, max_terms=50)
    with pytest.raises(ValueError):
        psi_iterate(parse_word(GOLDEN), 0)


@given(words(2, 8))
def test_degree_bound(w):
    P, _ = trace_polys(w)
    assert P.degree() <= len(w)


@pytest.mark.parametrize("pt", [(2, 2, 2), (0, 0, 2), (Fraction(1, 3), 5, Fraction(-7, 2))])
def test_lift_character_examples(pt):
    x, y = lift_character(*pt)
    got = (x.trace(), y.trace(), (x * y).trace())
    assert all(abs(complex(g) - complex(e)) < 1e-10 for g, e in zip(got, pt))
    assert abs(complex(x.det()) - 1) < 1e-10 and abs(complex(y.det()) - 1) < 1e-10


def test_lift_character_exact_when_rational():
    x, y = lift_character(2, 2, 2)
    assert x * y == Mat2(1, 0, 0, 1)
    assert (x.trace(), y.trace()) == (2, 2)


@given(st.complex_numbers(max_magnitude=20, allow_nan=False, allow_infinity=False), st.complex_numbers(max_magnitude=20, allow_nan=False, allow_infinity=False), st.complex_numbers(max_magnitude=20, allow_nan=False, allow_infinity=False))
def test_lift_character_random(s0, t0, u0):
    x, y = lift_character(s0, t0, u0)
    scale = 1 + abs(s0) + abs(t0) + abs(u0)
    for got, want in ((x.trace(), s0), (y.trace(), t0), ((x * y).trace(), u0)):
        assert abs(got - want) < 1e-10 * scale**2


def test_preimage_examples():
    pre = preimage_for_trace(parse_word("[x,y]"), 7, s0=0, t0=0)
    assert pre.point == (0, 0, 3) and pre.residual == 0
    pre = preimage_for_trace(parse_word("x"), 5)
    assert pre.residual < 1e-8
    pre = preimage_for_trace(parse_word(GOLDEN), 2 + 0j)
    assert pre.residual < 1e-8
    with pytest.raises(ValueError):
        preimage_for_trace(Word.identity(2), 3)


def test_preimage_for_matrix():
    Z = Mat2(Fraction(3), Fraction(1), Fraction(-1), Fraction(0))
    pre = preimage_for_matrix(parse_word("[x,y]"), Z)
    assert pre.residual < 1e-8
    with pytest.raises(ValueError):
        preimage_for_matrix(parse_word("[x,y]"), Mat2(1, 1, 0, 1))


@given(st.integers(-20, 20), st.integers(0, 100))
def test_preimage_soundness(A, seed):
    w = parse_word("x^2 y^-1 x y")
    try:
        pre = preimage_for_trace(w, A, seed=seed)
    except PreimageError:
        pytest.fail("no preimage found")
    assert pre.residual < 1e-8
