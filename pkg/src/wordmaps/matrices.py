"""2x2 matrices over an arbitrary commutative ring and word evaluation."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .algebra.poly import reciprocal
from .words import Word


@dataclass(frozen=True)
class Mat2:
    a: Any
    b: Any
    c: Any
    d: Any

    @classmethod
    def of(cls, rows) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def identity_like(cls, entry) -> "Mat2":
        zero = entry * 0
        one = zero + 1
        return cls(one, zero, zero, one)

    @classmethod
    def diag(cls, p, q) -> "Mat2":
        return cls(p, p * 0, p * 0, q)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def __mul__(self, o):
        if isinstance(o, Mat2):
            return Mat2(
                self.a * o.a + self.b * o.c,
                self.a * o.b + self.b * o.d,
                self.c * o.a + self.d * o.c,
                self.c * o.b + self.d * o.d,
            )
        return Mat2(self.a * o, self.b * o, self.c * o, self.d * o)

    def __rmul__(self, k):
        return Mat2(k * self.a, k * self.b, k * self.c, k * self.d)

    def __add__(self, o: "Mat2"):
        return Mat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "Mat2"):
        return Mat2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def adj(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def inverse(self) -> "Mat2":
        """Adjugate when det == 1, otherwise adjugate / det (det must be a unit)."""
        det = self.det()
        if det == 1:
            return self.adj()
        if det == 0:
            raise ZeroDivisionError("matrix is not invertible")
        return self.adj() * reciprocal(det)

    def __pow__(self, k: int) -> "Mat2":
        base = self if k >= 0 else self.inverse()
        result = Mat2.identity_like(self.a)
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def map(self, f) -> "Mat2":
        return Mat2(f(self.a), f(self.b), f(self.c), f(self.d))

    def is_identity(self) -> bool:
        return self.a == 1 and self.d == 1 and self.b == 0 and self.c == 0

    def is_minus_identity(self) -> bool:
        return self.a == -1 and self.d == -1 and self.b == 0 and self.c == 0

    def to_json(self):
        return [[_exact(self.a), _exact(self.b)], [_exact(self.c), _exact(self.d)]]

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def _exact(x):
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    return str(x)


def rational_matrix(rows) -> Mat2:
    (a, b), (c, d) = rows
    return Mat2(*(Fraction(v) if not isinstance(v, (int, Fraction)) else v for v in (a, b, c, d)))


def evaluate(w: Word, images: Sequence[Mat2]) -> Mat2:
    """w(images): the product of syllable powers, inverses computed per generator."""
    if len(images) != w.n:
        raise ValueError(f"need {w.n} images, got {len(images)}")
    if not images:
        raise ValueError("no images")
    result = Mat2.identity_like(images[0].a)
    inverses: dict[int, Mat2] = {}
    for g, e in w.syllables:
        m = images[g - 1]
        if e < 0:
            if g not in inverses:
                inverses[g] = m.inverse()
            result = result * inverses[g] ** -e
        else:
            result = result * m ** e
    return result
