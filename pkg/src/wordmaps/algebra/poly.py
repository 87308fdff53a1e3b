"""Sparse multivariate Laurent polynomials with exact rational coefficients.

A ``Poly`` carries an ordered tuple of variable names and a dict mapping
integer exponent vectors (negative entries allowed) to nonzero coefficients.
Coefficients are Python ints when integral and ``Fraction`` otherwise.

Monomial order is graded-lex with respect to the variable tuple: the first
variable is the most significant.  ``str(p)`` gives the canonical text form
used by the golden tests, e.g. ``7/36*t1^-1*t2^2 - 1``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping


class NotDivisible(ArithmeticError):
    pass


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _scalar(c):
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, (int, Fraction)):
        return _norm(c)
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"unsupported coefficient {c!r}")


def reciprocal(x):
    """1/x staying exact for ints and Fractions."""
    if isinstance(x, (int, Fraction)):
        return _norm(Fraction(1) / x)
    return x ** -1


class Poly:
    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Iterable[str] = (), terms: Mapping | None = None):
        self.vars = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"repeated variable in {self.vars}")
        self.terms = {}
        n = len(self.vars)
        for e, c in (terms or {}).items():
            if len(e) != n:
                raise ValueError("exponent vector length does not match variables")
            c = _scalar(c)
            if c:
                self.terms[tuple(e)] = c
        self._hash = None

    @classmethod
    def _raw(cls, vars, terms):
        p = cls.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def var(cls, name: str, vars: Iterable[str] | None = None) -> "Poly":
        vs = tuple(vars) if vars is not None else (name,)
        e = tuple(1 if v == name else 0 for v in vs)
        return cls._raw(vs, {e: 1})

    @classmethod
    def const(cls, c, vars: Iterable[str] = ()) -> "Poly":
        vs = tuple(vars)
        c = _scalar(c)
        return cls._raw(vs, {(0,) * len(vs): c} if c else {})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff=1, vars: Iterable[str] | None = None):
        vs = tuple(vars) if vars is not None else tuple(exps)
        return cls(vs, {tuple(exps.get(v, 0) for v in vs): coeff})

    @classmethod
    def from_univariate(cls, coeffs: Iterable, var: str) -> "Poly":
        """Coefficients listed from degree 0 upward."""
        return cls((var,), {(i,): c for i, c in enumerate(coeffs)})

    # variable bookkeeping

    def with_vars(self, vars: Iterable[str]) -> "Poly":
        vs = tuple(vars)
        if vs == self.vars:
            return self
        missing = [v for v, _ in self._used() if v not in vs]
        if missing:
            raise ValueError(f"variables {missing} not in target ring {vs}")
        idx = [self.vars.index(v) if v in self.vars else -1 for v in vs]
        terms = {tuple(e[i] if i >= 0 else 0 for i in idx): c for e, c in self.terms.items()}
        return Poly._raw(vs, terms)

    def _used(self):
        out = []
        for i, v in enumerate(self.vars):
            for e in self.terms:
                if e[i]:
                    out.append((v, i))
                    break
        return out

    def used_vars(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self._used())

    def _align(self, other):
        if isinstance(other, Poly):
            if other.vars == self.vars:
                return self, other
            vs = self.vars + tuple(v for v in other.vars if v not in self.vars)
            return self.with_vars(vs), other.with_vars(vs)
        return self, Poly.const(other, self.vars)

    # predicates and accessors

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), 0)

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit_monomial(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms.values())) == 1

    def is_polynomial(self) -> bool:
        return all(x >= 0 for e in self.terms for x in e)

    def __len__(self):
        return len(self.terms)

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` (total degree if None); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def min_degree(self, var: str) -> int:
        if not self.terms or var not in self.vars:
            return 0
        i = self.vars.index(var)
        return min(e[i] for e in self.terms)

    def _key(self, e):
        return (sum(e), e)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: self._key(kv[0]), reverse=True)

    def leading_term(self):
        e = max(self.terms, key=self._key)
        return e, self.terms[e]

    def leading_coefficient(self):
        return self.leading_term()[1] if self.terms else 0

    # arithmetic

    def __neg__(self):
        return Poly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        a, b = self._align(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = _norm(s)
            else:
                terms.pop(e, None)
        return Poly._raw(a.vars, terms)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _scalar(other)
            if not other:
                return Poly._raw(self.vars, {})
            return Poly._raw(self.vars, {e: _norm(c * other) for e, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._align(other)
        if len(a.terms) < len(b.terms):
            a, b = b, a
        terms: dict = {}
        get = terms.get
        for e2, c2 in b.terms.items():
            for e1, c1 in a.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = get(e, 0) + c1 * c2
        return Poly._raw(a.vars, {e: _norm(c) for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * reciprocal(_scalar(other))
        if isinstance(other, Poly):
            if other.is_monomial():
                return self * other ** -1
            return self.exact_quotient(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ArithmeticError("only monomials are invertible in a Laurent ring")
            (e, c), = self.terms.items()
            return Poly._raw(self.vars, {tuple(-x * -k for x in e): _norm(reciprocal(c) ** -k)})
        if self.is_monomial():
            (e, c), = self.terms.items()
            return Poly._raw(self.vars, {tuple(x * k for x in e): _norm(c ** k)})
        result = Poly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            a, b = self._align(other)
            return a.terms == b.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            used = self.used_vars()
            p = self.with_vars(used)
            self._hash = hash((p.vars, frozenset(p.terms.items())))
        return self._hash

    # evaluation and substitution

    def evaluate(self, point: Mapping):
        """Substitute a value for every variable that occurs.

        Values may be ints, Fractions, GaussianRationals, UniQuotients,
        complex numbers or Polys; zero is rejected for variables that occur
        with negative exponents.
        """
        values = []
        for v, i in self._used():
            if v not in point:
                raise KeyError(f"no value for variable {v}")
            x = point[v]
            if x == 0 and any(e[i] < 0 for e in self.terms):
                raise ZeroDivisionError(f"zero assigned to inverted variable {v}")
            values.append((i, x))
        cache: dict = {}

        def power(i, x, k):
            key = (i, k)
            if key not in cache:
                cache[key] = x ** k if k >= 0 else reciprocal(x) ** -k
            return cache[key]

        total = 0
        for e, c in self.terms.items():
            term = c
            for i, x in values:
                if e[i]:
                    term = term * power(i, x, e[i])
            total = total + term
        return total

    def subs(self, mapping: Mapping) -> "Poly":
        """Partial substitution; values may be scalars or Polys."""
        keep = tuple(v for v in self.vars if v not in mapping)
        ki = [self.vars.index(v) for v in keep]
        si = [(self.vars.index(v), val) for v, val in mapping.items() if v in self.vars]
        cache: dict = {}

        def power(i, x, k):
            key = (i, k)
            if key not in cache:
                if isinstance(x, Poly):
                    cache[key] = x ** k
                else:
                    cache[key] = Poly.const(x ** k if k >= 0 else reciprocal(x) ** -k)
            return cache[key]

        out = Poly.const(0, keep)
        grouped: dict = {}
        for e, c in self.terms.items():
            grouped.setdefault(tuple(e[i] for i, _ in si), []).append((e, c))
        for sub_e, items in grouped.items():
            rest = Poly._raw(keep, {})
            for e, c in items:
                k = tuple(e[i] for i in ki)
                rest.terms[k] = _norm(rest.terms.get(k, 0) + c)
            rest.terms = {k: c for k, c in rest.terms.items() if c}
            factor = Poly.const(1, keep)
            for (i, x), k in zip(si, sub_e):
                if k:
                    factor = factor * power(i, x, k)
            out = out + rest * factor
        return out

    def coeff_split(self, var: str) -> list[tuple[int, "Poly"]]:
        """[(e, coeff_e)] with sum(var^e * coeff_e) == self, exponents descending."""
        if var not in self.vars:
            return [(0, self)] if self.terms else []
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        groups: dict[int, dict] = {}
        for e, c in self.terms.items():
            groups.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        return [(k, Poly._raw(rest, groups[k])) for k in sorted(groups, reverse=True)]

    def univariate_coeffs(self, var: str) -> list:
        """Scalar coefficients [c_0, ..., c_deg] of a univariate polynomial."""
        used = self.used_vars()
        if any(v != var for v in used):
            raise ValueError(f"not univariate in {var}: uses {used}")
        if not self.is_polynomial():
            raise ValueError("negative exponents present")
        deg = self.degree(var)
        out = [0] * (deg + 1)
        i = self.vars.index(var) if var in self.vars else None
        for e, c in self.terms.items():
            out[e[i] if i is not None else 0] = c
        return out

    def exact_quotient(self, other: "Poly") -> "Poly":
        """self / other for polynomials, raising NotDivisible if inexact."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        a, b = self._align(other)
        if not (a.is_polynomial() and b.is_polynomial()):
            raise ValueError("exact division needs nonnegative exponents")
        lead_e, lead_c = b.leading_term()
        inv_c = reciprocal(lead_c)
        rem = dict(a.terms)
        quot: dict = {}
        key = a._key
        bterms = list(b.terms.items())
        while rem:
            e = max(rem, key=key)
            q_e = tuple(x - y for x, y in zip(e, lead_e))
            if min(q_e, default=0) < 0:
                raise NotDivisible("leading term not divisible")
            q_c = _norm(rem[e] * inv_c)
            quot[q_e] = q_c
            for be, bc in bterms:
                t = tuple(x + y for x, y in zip(be, q_e))
                s = rem.get(t, 0) - q_c * bc
                if s:
                    rem[t] = _norm(s)
                else:
                    rem.pop(t, None)
        return Poly._raw(a.vars, quot)

    def divides(self, other: "Poly") -> bool:
        try:
            other.exact_quotient(self)
        except NotDivisible:
            return False
        return True

    def content(self) -> Fraction:
        """Positive rational c making self/c have coprime integer coefficients."""
        from math import gcd, lcm

        if not self.terms:
            return Fraction(0)
        nums = [Fraction(c).numerator for c in self.terms.values()]
        dens = [Fraction(c).denominator for c in self.terms.values()]
        g = 0
        for n in nums:
            g = gcd(g, n)
        return Fraction(g, lcm(*dens))

    def normalized(self) -> "Poly":
        """Integer-primitive with positive leading coefficient."""
        if not self.terms:
            return self
        c = self.content()
        if Fraction(self.leading_coefficient()) < 0:
            c = -c
        return self * reciprocal(c)

    def monic(self) -> "Poly":
        return self * reciprocal(self.leading_coefficient()) if self.terms else self

    def map_coeffs(self, f) -> "Poly":
        return Poly(self.vars, {e: f(c) for e, c in self.terms.items()})

    # text

    def to_text(self, order: Iterable[str] | None = None) -> str:
        p = self.with_vars(tuple(order)) if order is not None else self
        if not p.terms:
            return "0"
        parts = []
        for e, c in p.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(p.vars, e) if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Poly({self.to_text()!r}, vars={self.vars})"


def variables(names: str | Iterable[str]) -> tuple[Poly, ...]:
    """``s, t, u = variables("s t u")`` -- all sharing the same ring."""
    vs = tuple(names.split()) if isinstance(names, str) else tuple(names)
    return tuple(Poly.var(v, vs) for v in vs)


# --- text parsing -------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^(),]))")


class PolySyntaxError(ValueError):
    pass


def _split_ident(ident: str, known: tuple[str, ...] | None) -> list[str]:
    if known is None:
        parts = re.findall(r"[A-Za-z_][0-9]*", ident)
        return parts
    out = []
    i = 0
    by_len = sorted(known, key=len, reverse=True)
    while i < len(ident):
        for v in by_len:
            if ident.startswith(v, i):
                out.append(v)
                i += len(v)
                break
        else:
            raise PolySyntaxError(f"unknown variable in {ident!r} at {i}")
    return out


def parse_poly(text: str, variables: Iterable[str] | None = None) -> Poly:
    """Parse an expression such as ``(s^2+t^2+u^2-ust-4)(t^2+u^2-ust)+2``.

    Juxtaposition means multiplication.  Identifiers are split into the
    given variable names (longest match first); without a variable list each
    letter, optionally followed by digits, is one variable.
    """
    known = tuple(variables) if variables is not None else None
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolySyntaxError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        num, ident, op = m.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif ident is not None:
            for v in _split_ident(ident, known):
                toks.append(("var", v))
        else:
            toks.append(("op", "^" if op == "**" else op))
        pos = m.end()
    vs = known if known is not None else tuple(dict.fromkeys(v for k, v in toks if k == "var"))
    i = 0

    def peek():
        return toks[i] if i < len(toks) else (None, None)

    def take(kind=None, val=None):
        nonlocal i
        tok = peek()
        if tok[0] is None or (kind and tok[0] != kind) or (val and tok[1] != val):
            raise PolySyntaxError(f"expected {val or kind} at token {i}, got {tok}")
        i += 1
        return tok

    def expr():
        sign = 1
        if peek() in (("op", "-"), ("op", "+")):
            sign = -1 if take()[1] == "-" else 1
        acc = term() * sign
        while peek() in (("op", "-"), ("op", "+")):
            op = take()[1]
            t = term()
            acc = acc - t if op == "-" else acc + t
        return acc

    def starts_atom(tok):
        return tok[0] in ("num", "var") or tok == ("op", "(")

    def term():
        acc = factor()
        while True:
            tok = peek()
            if tok == ("op", "*"):
                take()
                acc = acc * factor()
            elif tok == ("op", "/"):
                take()
                d = factor()
                acc = acc / d
            elif starts_atom(tok):
                acc = acc * factor()
            else:
                return acc

    def exponent():
        if peek() == ("op", "("):
            take()
            neg = peek() == ("op", "-")
            if neg:
                take()
            k = take("num")[1]
            take("op", ")")
            return -k if neg else k
        neg = peek() == ("op", "-")
        if neg:
            take()
        k = take("num")[1]
        return -k if neg else k

    def factor():
        base = atom()
        if peek() == ("op", "^"):
            take()
            base = base ** exponent()
        return base

    def atom():
        kind, val = peek()
        if kind == "num":
            take()
            return Poly.const(val, vs)
        if kind == "var":
            take()
            return Poly.var(val, vs)
        if (kind, val) == ("op", "("):
            take()
            e = expr()
            take("op", ")")
            return e
        if (kind, val) == ("op", "-"):
            take()
            return -factor()
        raise PolySyntaxError(f"unexpected token {peek()} at {i}")

    result = expr()
    if i != len(toks):
        raise PolySyntaxError(f"trailing input at token {i}: {toks[i]}")
    return result.with_vars(vs) if set(result.vars) <= set(vs) else result
