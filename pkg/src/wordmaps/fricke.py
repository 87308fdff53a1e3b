"""Trace polynomials of two-letter words via the Fricke algebra.

For X, Y in SL(2) with s = tr X, t = tr Y, u = tr XY, the products of
1, X, Y, XY close up by Cayley-Hamilton:

    X^2 = sX - 1,  Y^2 = tY - 1,  YX = (u - st) + tX + sY - XY,
    X^-1 = s - X,  Y^-1 = t - Y.

A word therefore evaluates to c1 + cX X + cY Y + cXY XY with coefficients
in Q[s, t, u], and tr = 2 c1 + s cX + t cY + u cXY.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .algebra.poly import Poly
from .algebra.roots import RootConfig, complex_roots
from .matrices import Mat2, evaluate
from .words import Word

STU = ("s", "t", "u")
_s, _t, _u = (Poly.var(v, STU) for v in STU)
_0 = Poly.const(0, STU)
_1 = Poly.const(1, STU)


@dataclass(frozen=True)
class FrickeElement:
    c1: Poly
    cX: Poly
    cY: Poly
    cXY: Poly

    def coeffs(self) -> tuple[Poly, Poly, Poly, Poly]:
        return (self.c1, self.cX, self.cY, self.cXY)

    def __add__(self, o: "FrickeElement") -> "FrickeElement":
        return FrickeElement(*(a + b for a, b in zip(self.coeffs(), o.coeffs())))

    def scale(self, k: Poly) -> "FrickeElement":
        return FrickeElement(*(a * k for a in self.coeffs()))

    def __mul__(self, o: "FrickeElement") -> "FrickeElement":
        acc = ZERO
        for i, a in enumerate(self.coeffs()):
            if not a:
                continue
            for j, b in enumerate(o.coeffs()):
                if b:
                    acc = acc + _TABLE[i][j].scale(a * b)
        return acc

    def __pow__(self, k: int) -> "FrickeElement":
        if k < 0:
            raise ValueError("invert the generator first")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def trace(self) -> Poly:
        return 2 * self.c1 + _s * self.cX + _t * self.cY + _u * self.cXY

    def realize(self, X0: Mat2, Y0: Mat2) -> Mat2:
        """c1 I + cX X0 + cY Y0 + cXY X0 Y0 at the traces of (X0, Y0)."""
        pt = {"s": X0.trace(), "t": Y0.trace(), "u": (X0 * Y0).trace()}
        c = [p.evaluate(pt) for p in self.coeffs()]
        I = Mat2.identity_like(X0.a)
        return c[0] * I + c[1] * X0 + c[2] * Y0 + c[3] * (X0 * Y0)

    def __eq__(self, o):
        return isinstance(o, FrickeElement) and self.coeffs() == o.coeffs()

    def __hash__(self):
        return hash(self.coeffs())


def _fe(c1=_0, cX=_0, cY=_0, cXY=_0) -> FrickeElement:
    return FrickeElement(c1, cX, cY, cXY)


ZERO = _fe()
ONE = _fe(c1=_1)
X = _fe(cX=_1)
Y = _fe(cY=_1)
XY = _fe(cXY=_1)
X_INV = _fe(c1=_s, cX=-_1)
Y_INV = _fe(c1=_t, cY=-_1)

# _TABLE[i][j] = basis_i * basis_j for the basis (1, X, Y, XY)
_TABLE = [
    [ONE, X, Y, XY],
    [X, _fe(c1=-_1, cX=_s), XY, _fe(cY=-_1, cXY=_s)],
    [Y, _fe(c1=_u - _s * _t, cX=_t, cY=_s, cXY=-_1), _fe(c1=-_1, cY=_t), _fe(c1=-_s, cX=_1, cY=_u)],
    [XY, _fe(c1=-_t, cX=_u, cY=_1), _fe(cX=-_1, cXY=_t), _fe(c1=-_1, cXY=_u)],
]


def fricke_of_word(w: Word) -> FrickeElement:
    if w.n != 2:
        raise ValueError("two-letter words only")
    gens = {1: (X, X_INV), 2: (Y, Y_INV)}
    out = ONE
    for g, e in w.syllables:
        pos, neg = gens[g]
        out = out * (pos ** e if e > 0 else neg ** -e)
    return out


def trace_polys(w: Word) -> tuple[Poly, Poly]:
    f = fricke_of_word(w)
    return f.trace(), (f * Y).trace()


@dataclass(frozen=True)
class TraceMap:
    """psi(s, t, u) = (P, t, Q)."""

    P: Poly
    Q: Poly

    def __call__(self, s, t, u):
        pt = {"s": s, "t": t, "u": u}
        return (self.P.evaluate(pt), t, self.Q.evaluate(pt))

    def compose(self, inner: "TraceMap") -> "TraceMap":
        """self o inner."""
        sub = {"s": inner.P, "t": _t, "u": inner.Q}
        return TraceMap(self.P.subs(sub).with_vars(STU), self.Q.subs(sub).with_vars(STU))

    def slice(self, a) -> tuple[Poly, Poly]:
        """(P, Q) restricted to t = a, as polynomials in s, u."""
        return self.P.subs({"t": a}), self.Q.subs({"t": a})


class SizeGuardExceeded(RuntimeError):
    pass


def trace_map(w: Word) -> TraceMap:
    return TraceMap(*trace_polys(w))


def psi_iterate(w: Word, n: int, max_terms: int = 200_000) -> TraceMap:
    if n < 1:
        raise ValueError("n must be positive")
    base = trace_map(w)
    cur = base
    for _ in range(n - 1):
        cur = base.compose(cur)
        size = len(cur.P) + len(cur.Q)
        if size > max_terms:
            raise SizeGuardExceeded(f"iterate has {size} terms (limit {max_terms})")
    return cur


def iterate_word(w: Word, n: int) -> Word:
    """v_1 = w, v_{k+1} = w(v_k, y)."""
    from .words import substitute

    v = w
    for _ in range(n - 1):
        v = substitute(w, {1: v})
    return v


# --- numeric lifting ----------------------------------------------------


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    from math import isqrt

    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    return Fraction(rn, rd) if rn * rn == n and rd * rd == d else None


def lift_character(s0, t0, u0) -> tuple[Mat2, Mat2]:
    """x, y with tr x = s0, tr y = t0, tr xy = u0."""
    if all(isinstance(v, (int, Fraction)) for v in (s0, t0, u0)):
        r = _rational_sqrt(Fraction(u0) ** 2 - 4)
        if r is not None:
            eta = (Fraction(u0) + r) / 2
            s0, t0 = Fraction(s0), Fraction(t0)
            return Mat2(s0, Fraction(-1), Fraction(1), Fraction(0)), Mat2(Fraction(0), eta, -1 / eta, t0)
    s0, t0, u0 = complex(s0), complex(t0), complex(u0)
    disc = np.sqrt(u0 * u0 - 4 + 0j)
    eta = (u0 + disc) / 2
    if abs(eta) < 1e-300:
        eta = (u0 - disc) / 2
    return Mat2(s0, -1 + 0j, 1 + 0j, 0j), Mat2(0j, eta, -1 / eta, t0)


@dataclass(frozen=True)
class Preimage:
    x: Mat2
    y: Mat2
    point: tuple
    residual: float
    attempts: int


class PreimageError(RuntimeError):
    pass


def _trace_residual(w: Word, x: Mat2, y: Mat2, target) -> float:
    return abs(complex(evaluate(w, [x, y]).trace()) - complex(target))


def preimage_for_trace(
    w: Word,
    target,
    s0=None,
    t0=None,
    seed: int = 0,
    attempts: int = 50,
    tol: float = 1e-8,
    config: RootConfig = RootConfig(),
) -> Preimage:
    """(x, y) with tr w(x, y) close to target, from a root of P_w(s0, t0, u) = target."""
    if w.is_identity():
        raise ValueError("identity word has constant trace 2")
    P, _ = trace_polys(w)
    rng = random.Random(seed)
    pick = lambda: Fraction(rng.randint(-9, 9), rng.randint(1, 4))  # noqa: E731
    solve_for = next((v for v in ("u", "s", "t") if P.degree(v) > 0), None)
    if solve_for is None:
        raise PreimageError("trace polynomial is constant")
    best = None
    for k in range(attempts):
        fixed = {}
        others = [v for v in STU if v != solve_for]
        given = {"s": s0, "t": t0}
        for v in others:
            fixed[v] = Fraction(given[v]) if k == 0 and given.get(v) is not None else pick()
        uni = (P.subs(fixed) - target) if not isinstance(target, complex) else None
        if uni is not None:
            if uni.degree(solve_for) <= 0:
                continue
            roots = complex_roots(uni.with_vars((solve_for,)), solve_for, config)
        else:
            coeffs = P.subs(fixed).with_vars((solve_for,)).univariate_coeffs(solve_for)
            if len(coeffs) < 2:
                continue
            coeffs = [complex(c) for c in coeffs]
            coeffs[0] -= target
            roots = complex_roots(coeffs, config=config)
        for r in roots:
            pt = dict(fixed)
            pt[solve_for] = _snap(r)
            x, y = lift_character(pt["s"], pt["t"], pt["u"])
            res = _trace_residual(w, x, y, target)
            if best is None or res < best.residual:
                best = Preimage(x, y, (pt["s"], pt["t"], pt["u"]), res, k + 1)
            if res < tol:
                return best
    raise PreimageError(
        f"no preimage within {tol} after {attempts} attempts"
        + (f" (best residual {best.residual:.3e})" if best else "")
    )


def _snap(z: complex):
    """Use an exact rational when the root is numerically an integer or half-integer."""
    for den in (1, 2):
        q = Fraction(round(z.real * den), den)
        if abs(z - float(q)) < 1e-12:
            return q
    return z


def preimage_for_matrix(w: Word, Z: Mat2, seed: int = 0) -> Preimage:
    """Preimage of a semisimple target with trace != +-2, by conjugating a trace preimage."""
    if abs(complex(Z.det()) - 1) > 1e-12:
        raise ValueError("target must have determinant 1")
    tr = complex(Z.trace())
    if abs(tr - 2) < 1e-12 or abs(tr + 2) < 1e-12:
        raise ValueError("target trace is +-2; use the unipotent witness")
    pre = preimage_for_trace(w, Z.trace() if isinstance(Z.trace(), (int, Fraction)) else tr, seed=seed)
    M = evaluate(w, [pre.x, pre.y])
    P_M = _eigbasis(M)
    P_Z = _eigbasis(Z)
    g = P_Z @ np.linalg.inv(P_M)
    gi = np.linalg.inv(g)
    conj = lambda m: _from_np(g @ _to_np(m) @ gi)  # noqa: E731
    x, y = conj(pre.x), conj(pre.y)
    out = evaluate(w, [x, y])
    residual = float(np.max(np.abs(_to_np(out) - _to_np(Z))))
    return Preimage(x, y, pre.point, residual, pre.attempts)


def _to_np(m: Mat2) -> np.ndarray:
    return np.array([[complex(m.a), complex(m.b)], [complex(m.c), complex(m.d)]])


def _from_np(a: np.ndarray) -> Mat2:
    return Mat2(complex(a[0, 0]), complex(a[0, 1]), complex(a[1, 0]), complex(a[1, 1]))


def _eigbasis(m: Mat2) -> np.ndarray:
    vals, vecs = np.linalg.eig(_to_np(m))
    order = np.lexsort((vals.imag, vals.real))
    return vecs[:, order]
