"""Univariate quotient rings Q[z]/(m(z))."""
from __future__ import annotations

from fractions import Fraction

from .poly import Poly, _norm, reciprocal


def _strip(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def uni_divmod(num: list, den: list) -> tuple[list, list]:
    """Coefficient lists (low degree first) over Q."""
    den = _strip(list(den))
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    rem = _strip(list(num))
    if len(rem) < len(den):
        return [], rem
    inv = reciprocal(den[-1])
    quot = [0] * (len(rem) - len(den) + 1)
    for k in range(len(rem) - len(den), -1, -1):
        c = _norm(rem[k + len(den) - 1] * inv)
        quot[k] = c
        if c:
            for j, d in enumerate(den):
                rem[k + j] = _norm(rem[k + j] - c * d)
    return _strip(quot), _strip(rem[: len(den) - 1])


def _as_list(p, var: str) -> list:
    if isinstance(p, Poly):
        return p.univariate_coeffs(var)
    return list(p)


def quotient_reduce(value, modulus, var: str = "z") -> "UniQuotient":
    """Canonical remainder of ``value`` modulo ``modulus`` (Polys or coefficient lists)."""
    return UniQuotient(_as_list(modulus, var), _as_list(value, var), var)


class UniQuotient:
    """Element of Q[var]/(modulus); ``value`` is kept fully reduced."""

    __slots__ = ("modulus", "value", "var")

    def __init__(self, modulus, value=(), var: str = "z"):
        modulus = _strip([_norm(Fraction(c)) for c in modulus])
        if len(modulus) < 2:
            raise ValueError("modulus must have degree >= 1")
        self.modulus = tuple(modulus)
        self.var = var
        self.value = tuple(uni_divmod([_norm(Fraction(c)) for c in value], modulus)[1])

    @classmethod
    def generator(cls, modulus, var: str = "z") -> "UniQuotient":
        return cls(modulus, [0, 1], var)

    def _lift(self, other):
        if isinstance(other, UniQuotient):
            if other.modulus != self.modulus:
                raise ValueError("different moduli")
            return other
        if isinstance(other, (int, Fraction)):
            return UniQuotient(self.modulus, [other], self.var)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        n = max(len(self.value), len(o.value))
        a = list(self.value) + [0] * (n - len(self.value))
        b = list(o.value) + [0] * (n - len(o.value))
        return UniQuotient(self.modulus, [x + y for x, y in zip(a, b)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniQuotient(self.modulus, [-c for c in self.value], self.var)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not self.value or not o.value:
            return UniQuotient(self.modulus, [], self.var)
        prod = [0] * (len(self.value) + len(o.value) - 1)
        for i, x in enumerate(self.value):
            for j, y in enumerate(o.value):
                prod[i + j] += x * y
        return UniQuotient(self.modulus, prod, self.var)

    __rmul__ = __mul__

    def inverse(self) -> "UniQuotient":
        """Inverse via extended Euclid; fails when value and modulus share a factor."""
        r0, r1 = list(self.modulus), list(self.value)
        s0, s1 = [], [1]
        while _strip(r1):
            q, r = uni_divmod(r0, r1)
            prod = _mul(q, s1)
            s_new = _sub(s0, prod)
            r0, r1, s0, s1 = r1, r, s1, s_new
        if len(r0) != 1:
            raise ZeroDivisionError("element is not invertible in this quotient ring")
        inv = reciprocal(r0[0])
        return UniQuotient(self.modulus, [c * inv for c in s0], self.var)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** -k
        result = UniQuotient(self.modulus, [1], self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        o = self._lift(other)
        return self * o.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._lift(other)
        if not isinstance(other, UniQuotient):
            return NotImplemented
        return self.modulus == other.modulus and self.value == other.value

    def __hash__(self):
        return hash((self.modulus, self.value))

    def __bool__(self):
        return bool(self.value)

    def as_poly(self) -> Poly:
        return Poly.from_univariate(self.value, self.var)

    def __str__(self):
        return str(self.as_poly())

    def __repr__(self):
        return f"UniQuotient({self}, mod {Poly.from_univariate(self.modulus, self.var)})"


def _mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _strip([x - y for x, y in zip(a, b)])
