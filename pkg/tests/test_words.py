import random
from fractions import Fraction

import pytest
import sympy.combinatorics.free_groups as fg
from conftest import words
from hypothesis import given
from hypothesis import strategies as st
from oracles import comm_letters, eval_letters, letters_of, random_sl2, stack_reduce, sympy_word

from wordmaps.matrices import Mat2, evaluate
from wordmaps.words import (
    PurePowerError,
    TwoLetterForm,
    Word,
    WordSyntaxError,
    commutator,
    cyclic_reduce,
    cyclic_shift,
    engel_word,
    exponent_sums,
    format_word,
    normalize_two_letter,
    parse_word,
    proper_power_root,
    substitute,
    swap_generators,
    word_algebra,
)

X = [(1, 1)]
Y = [(2, 1)]


def test_parse_commutator():
    assert parse_word("[x,y]", 2) == Word(2, ((1, 1), (2, 1), (1, -1), (2, -1)))


def test_parse_reduces():
    assert parse_word("x y y^-1 x", 2) == Word(2, ((1, 2),))


def test_identity_literal_and_generators():
    assert parse_word("1").is_identity()
    assert parse_word("g3 g1^-2").n == 3
    assert format_word(Word.identity(2)) == "1"


def test_parse_errors_carry_position():
    with pytest.raises(WordSyntaxError) as err:
        parse_word("[x,y")
    assert err.value.position == 4


def test_v_word_against_letter_oracle():
    # the outer word of the F^(2) example, built letter by letter
    c = comm_letters(X, Y)
    v_letters = comm_letters(comm_letters(X, c), comm_letters(Y, c))
    expect = stack_reduce(v_letters)
    v = parse_word("[[x,[x,y]],[y,[x,y]]]")
    assert v.letters() == expect
    assert len(v) == len(expect) == 28
    # sympy's free group agrees on the reduced form
    F, x, y = fg.free_group("x y")
    ref = sympy_word(v.syllables, [x, y])
    cx = x * y * x**-1 * y**-1
    outer = (x * cx * x**-1 * cx**-1) * (y * cx * y**-1 * cx**-1)
    outer = outer * (x * cx * x**-1 * cx**-1) ** -1 * (y * cx * y**-1 * cx**-1) ** -1
    assert ref == outer
    assert len(v.syllables) == 26


def test_word_algebra_examples():
    xy = parse_word("x y")
    assert word_algebra("invert", xy) == parse_word("y^-1 x^-1")
    assert word_algebra("commutator", Word.gen(1), Word.gen(2)) == parse_word("x y x^-1 y^-1")
    assert word_algebra("power", xy, 2) == parse_word("x y x y")


def test_substitute_builds_second_iterate():
    w = parse_word("[y x y^-1, x^-1]")
    v2 = substitute(w, {1: w})
    letters = []
    for g, s in w.letters():
        if g == 1:
            letters += w.letters() if s > 0 else [(h, -t) for h, t in reversed(w.letters())]
        else:
            letters.append((g, s))
    assert v2.letters() == stack_reduce(letters)


def test_exponent_sums_examples():
    assert exponent_sums(parse_word("[x,y]")) == (0, 0)
    assert exponent_sums(parse_word("x^2 y^3 x")) == (3, 3)
    assert exponent_sums(engel_word(3)) == (0, 0)


def test_engel_words():
    assert engel_word(1) == parse_word("[x,y]")
    assert engel_word(2) == parse_word("[[x,y],y]")
    e2 = stack_reduce(comm_letters(comm_letters(X, Y), Y))
    assert engel_word(2).letters() == e2
    assert len(e2) == 8


def test_normalize_examples():
    f = normalize_two_letter(parse_word("x^2 y^3"))
    assert (f.a, f.b, f.transforms) == ((2,), (3,), ())
    f = normalize_two_letter(parse_word("y^3 x^2"))
    assert (f.a, f.b, f.transforms) == ((2,), (3,), ("cyclic_shift",))
    f = normalize_two_letter(parse_word("x^-1 y x y^-1"))
    assert (f.a, f.b) == ((-1, 1), (1, -1))


def test_normalize_pure_power():
    with pytest.raises(PurePowerError):
        normalize_two_letter(parse_word("y x^3 y^-1"))


def test_form_rejects_zero_exponent():
    with pytest.raises(ValueError):
        TwoLetterForm((1, 0), (1, 1))


def test_proper_power_examples():
    assert proper_power_root(parse_word("x y x y")) == (parse_word("x y"), 2)
    assert proper_power_root(parse_word("[x,y]")) == (parse_word("[x,y]"), 1)
    flat = parse_word("x y x^-1 y^-1 x y x^-1 y^-1 x y x^-1 y^-1")
    v, k = proper_power_root(flat)
    assert (v, k) == (parse_word("[x,y]"), 3)
    assert v ** 3 == flat


def test_evaluate_examples():
    m = Mat2(Fraction(1), Fraction(1), Fraction(0), Fraction(1))
    assert evaluate(Word.gen(1, 1), [m]) == m
    a = Fraction(5, 3)
    x = Mat2(a, Fraction(0), Fraction(0), 1 / a)
    y = Mat2(Fraction(0), Fraction(1), Fraction(-1), Fraction(0))
    assert evaluate(parse_word("[x,y]"), [x, y]) == Mat2(a**2, 0, 0, a**-2)


@given(words(2, 10))
def test_parse_format_roundtrip(w):
    assert parse_word(format_word(w), 2) == w


@given(words(3, 10))
def test_parse_format_roundtrip_three(w):
    assert parse_word(format_word(w), 3) == w


@given(st.lists(st.tuples(st.integers(1, 2), st.sampled_from([1, -1])), max_size=30), st.randoms())
def test_reduction_confluent(letters, rnd):
    # cancel adjacent inverse pairs in random order; the result is always the stack reduction
    cur = list(letters)
    while True:
        spots = [i for i in range(len(cur) - 1) if cur[i][0] == cur[i + 1][0] and cur[i][1] == -cur[i + 1][1]]
        if not spots:
            break
        i = rnd.choice(spots)
        del cur[i : i + 2]
    assert Word.reduce(2, letters).letters() == cur == stack_reduce(letters)


@given(words(2, 8))
def test_reduction_idempotent(w):
    assert Word.reduce(2, w.syllables) == w


@given(words(2, 6), words(2, 6), st.integers(0, 10**6))
def test_evaluate_homomorphism(u, v, seed):
    rng = random.Random(seed)
    imgs = [random_sl2(rng) for _ in range(2)]
    mats = [Mat2.of(m) for m in imgs]
    assert evaluate(u * v, mats) == evaluate(u, mats) * evaluate(v, mats)
    assert evaluate(u.inverse(), mats) == evaluate(u, mats).inverse()
    ref = eval_letters(stack_reduce(letters_of(u.syllables) + letters_of(v.syllables)), imgs)
    assert evaluate(u * v, mats) == Mat2.of(ref)


@given(words(2, 6), words(2, 6))
def test_exponent_sums_additive(u, v):
    assert exponent_sums(u * v) == tuple(a + b for a, b in zip(exponent_sums(u), exponent_sums(v)))


@given(words(2, 8).filter(lambda w: not w.is_identity()))
def test_proper_power_root_is_primitive(w):
    v, k = proper_power_root(w)
    assert v**k == w
    assert proper_power_root(v)[1] == 1


@given(words(2, 8).filter(lambda w: not w.is_identity()))
def test_cyclic_reduce_conjugates(w):
    core, c = cyclic_reduce(w)
    assert c * core * c.inverse() == w
    s = core.syllables
    assert len(s) <= 1 or s[0][0] != s[-1][0]


@given(words(2, 8), st.integers(0, 12))
def test_cyclic_shift_is_conjugate(w, k):
    shifted = cyclic_shift(w, k)
    # same cyclically reduced core up to rotation: equal exponent sums and equal traces oracle
    assert exponent_sums(shifted) == exponent_sums(w)
    rng = random.Random(k)
    mats = [Mat2.of(random_sl2(rng)) for _ in range(2)]
    assert evaluate(shifted, mats).trace() == evaluate(w, mats).trace()


@given(words(2, 8).filter(lambda w: not w.is_identity()), st.booleans(), st.booleans())
def test_normalize_reconstructs(w, swap, invert):
    try:
        form = normalize_two_letter(w, swap=swap, invert=invert)
    except PurePowerError:
        return
    assert form.reconstruct() == w
    assert all(form.a) and all(form.b)


def test_mismatched_generator_counts():
    with pytest.raises(ValueError):
        Word.gen(1, 2) * Word.gen(1, 3)


def test_swap_is_involution():
    w = parse_word("x^2 y^-1 x y^3")
    assert swap_generators(swap_generators(w)) == w
    assert commutator(Word.gen(1), Word.gen(2)).inverse() == commutator(Word.gen(2), Word.gen(1))
