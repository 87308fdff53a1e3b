"""Magnus-type representations of F_n into lower-triangular matrices.

``mu1`` sends g_i to [[t_i, 0], [1, t_i^-1]] over the Laurent ring in
t_1..t_n; its kernel is the second derived subgroup F^(2).  For a word in
F^(1) the image is [[1, 0], [L_w, 1]] and L_w is the obstruction polynomial.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence

from .algebra.poly import Poly
from .matrices import Mat2, evaluate
from .words import Word, exponent_sums


def t_vars(n: int) -> tuple[str, ...]:
    return tuple(f"t{i}" for i in range(1, n + 1))


def s_vars(n: int) -> tuple[str, ...]:
    return tuple(f"s{i}" for i in range(1, n + 1))


@dataclass(frozen=True)
class STMatrix:
    """[[kappa, 0], [ell, kappa^-1]] with kappa a unit monomial."""

    kappa: Poly
    ell: Poly

    def __post_init__(self):
        if not self.kappa.is_unit_monomial():
            raise ValueError(f"kappa must be a unit monomial, got {self.kappa}")

    @classmethod
    def identity(cls, vars: Sequence[str]) -> "STMatrix":
        return cls(Poly.const(1, vars), Poly.const(0, vars))

    def __mul__(self, o: "STMatrix") -> "STMatrix":
        return STMatrix(self.kappa * o.kappa, self.ell * o.kappa + self.kappa ** -1 * o.ell)

    def inverse(self) -> "STMatrix":
        return STMatrix(self.kappa ** -1, -self.ell)

    def __pow__(self, k: int) -> "STMatrix":
        base = self if k >= 0 else self.inverse()
        result = STMatrix.identity(self.kappa.vars)
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def matrix(self) -> Mat2:
        return Mat2(self.kappa, self.kappa * 0, self.ell, self.kappa ** -1)

    def is_identity(self) -> bool:
        return self.kappa == 1 and not self.ell


def mu1_image(w: Word) -> STMatrix:
    vs = t_vars(w.n)
    gens = [STMatrix(Poly.var(v, vs), Poly.const(1, vs)) for v in vs]
    out = STMatrix.identity(vs)
    for g, e in w.syllables:
        out = out * gens[g - 1] ** e
    return out


def mu_general(w: Word, b: Sequence[int] | None = None) -> Mat2:
    """Image under g_i -> [[t_i, 0], [s_i, t_i^-1]], or with s_i replaced by b_i."""
    tv = t_vars(w.n)
    if b is None:
        vs = tv + s_vars(w.n)
        lower = [Poly.var(s, vs) for s in s_vars(w.n)]
    else:
        if len(b) != w.n:
            raise ValueError(f"need {w.n} entries in b")
        if any(bi == 0 for bi in b):
            raise ValueError("b entries must be nonzero")
        vs = tv
        lower = [Poly.const(bi, vs) for bi in b]
    images = []
    for v, low in zip(tv, lower):
        t = Poly.var(v, vs)
        images.append(Mat2(t, t * 0, low, t ** -1))
    return evaluate(w, images)


class DerivedLevel(enum.Enum):
    NotInF1 = "NotInF1"
    InF1NotF2 = "InF1NotF2"
    InF2 = "InF2"


class NotInF1Error(ValueError):
    pass


def obstruction_Lw(w: Word) -> Poly:
    if any(exponent_sums(w)):
        raise NotInF1Error(f"exponent sums {exponent_sums(w)} are not all zero")
    img = mu1_image(w)
    assert img.kappa == 1
    return img.ell


def classify_derived_level(w: Word) -> DerivedLevel:
    if any(exponent_sums(w)):
        return DerivedLevel.NotInF1
    return DerivedLevel.InF1NotF2 if obstruction_Lw(w) else DerivedLevel.InF2


# --- nonvanishing points ------------------------------------------------


def rationals_by_height() -> Iterator[Fraction]:
    """1, -1, 2, 1/2, -2, -1/2, 3, 1/3, 3/2, 2/3, -3, ..."""
    yield Fraction(1)
    yield Fraction(-1)
    h = 2
    while True:
        pos = []
        for q in range(1, h + 1):
            for p in (h, q):
                if (p, q) != (h, h) and max(p, q) == h and gcd(p, q) == 1:
                    pos.append(Fraction(p, q))
                    if p != q:
                        pos.append(Fraction(q, p))
        pos = list(dict.fromkeys(pos))
        yield from pos
        yield from (-r for r in pos)
        h += 1


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def find_nonvanishing_point(L: Poly, max_points: int = 1_000_000) -> tuple[Fraction, ...]:
    """First tuple (in the diagonal height sweep) where L does not vanish.

    The tuple is indexed by ``L.vars``.
    """
    if not L:
        raise ValueError("the zero polynomial vanishes everywhere")
    n = len(L.vars)
    if n == 0 or L.is_constant():
        return tuple(Fraction(1) for _ in range(n))
    seq: list[Fraction] = []
    gen = rationals_by_height()
    tried = 0
    for total in itertools.count():
        while len(seq) <= total:
            seq.append(next(gen))
        for idx in _compositions(total, n):
            point = tuple(seq[i] for i in idx)
            if L.evaluate(dict(zip(L.vars, point))) != 0:
                return point
            tried += 1
            if tried >= max_points:
                raise RuntimeError("search budget exhausted")
    raise AssertionError("unreachable")


# --- unipotent witnesses ------------------------------------------------


@dataclass(frozen=True)
class UnipotentWitness:
    a: tuple[Fraction, ...]
    c: Fraction
    S: Mat2
    Z: tuple[Mat2, ...]

    def to_json(self) -> dict:
        return {
            "a": [str(x) for x in self.a],
            "c": str(self.c),
            "S": self.S.to_json(),
            "Z": [z.to_json() for z in self.Z],
        }


def _kernel_vector(N: Mat2) -> tuple[Fraction, Fraction]:
    if N.a or N.b:
        v = (N.b, -N.a)
    else:
        v = (N.d, -N.c)
    lead = v[0] if v[0] else v[1]
    return (Fraction(v[0]) / lead, Fraction(v[1]) / lead)


def similarity_to_lower(X: Mat2, c) -> Mat2:
    """S with S [[1, 0], [c, 1]] S^-1 = X for a unipotent X != id and c != 0."""
    N = X - Mat2.identity_like(X.a)
    s2 = _kernel_vector(N)
    s1 = (Fraction(1), Fraction(0))
    image = (N.a * s1[0] + N.b * s1[1], N.c * s1[0] + N.d * s1[1])
    if not any(image):
        s1 = (Fraction(0), Fraction(1))
        image = (N.b, N.d)
    k = 0 if s2[0] else 1
    alpha = Fraction(image[k]) / s2[k]
    scale = Fraction(c) / alpha
    s1 = (s1[0] * scale, s1[1] * scale)
    S = Mat2(s1[0], s2[0], s1[1], s2[1])
    if S.det() == 0:
        raise ArithmeticError("degenerate similarity")
    return S


def is_unipotent(X: Mat2) -> bool:
    return X.det() == 1 and X.trace() == 2


def unipotent_witness(w: Word, X: Mat2, a: Sequence | None = None) -> UnipotentWitness:
    """Matrices Z with w(Z) = X exactly, for a word in F^(1) outside F^(2)."""
    X = X.map(Fraction)
    if not is_unipotent(X):
        raise ValueError("target must have trace 2 and determinant 1")
    L = obstruction_Lw(w)
    if not L:
        raise ValueError("word lies in F^(2); its obstruction polynomial vanishes")
    one = Mat2(Fraction(1), Fraction(0), Fraction(0), Fraction(1))
    if X == one:
        return UnipotentWitness(tuple(Fraction(1) for _ in range(w.n)), Fraction(0), one, (one,) * w.n)
    vs = t_vars(w.n)
    L = L.with_vars(vs)
    point = tuple(Fraction(x) for x in a) if a is not None else find_nonvanishing_point(L)
    if any(x == 0 for x in point):
        raise ValueError("point coordinates must be nonzero")
    c = Fraction(L.evaluate(dict(zip(vs, point))))
    if not c:
        raise ValueError(f"obstruction vanishes at {point}")
    S = similarity_to_lower(X, c)
    Sinv = S.inverse()
    Z = tuple(S * Mat2(ai, Fraction(0), Fraction(1), 1 / ai) * Sinv for ai in point)
    if evaluate(w, list(Z)) != X:
        raise ArithmeticError("witness failed exact verification")
    return UnipotentWitness(point, c, S, Z)
