"""Resultants, gcds and exact division for multivariate polynomials over Q.

The resultant is the Sylvester determinant with the rows of ``p`` first,
evaluated by fraction-free (Bareiss) elimination.  The gcd is computed
recursively: content in the remaining variables, then a primitive
pseudo-remainder sequence in the main variable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .poly import NotDivisible, Poly


class DegenerateElimination(ValueError):
    pass


def _coeffs_desc(p: Poly, var: str, deg: int) -> list[Poly]:
    """[c_deg, ..., c_0] as Polys in the remaining variables."""
    rest = tuple(v for v in p.vars if v != var)
    out = [Poly.const(0, rest) for _ in range(deg + 1)]
    for e, c in p.coeff_split(var):
        out[deg - e] = c
    return out


def sylvester_matrix(p: Poly, q: Poly, var: str) -> list[list[Poly]]:
    p, q = p._align(q)
    m, n = p.degree(var), q.degree(var)
    if m < 0 or n < 0:
        raise ValueError("resultant of a zero polynomial")
    if m == 0 and n == 0:
        raise DegenerateElimination(f"both polynomials are free of {var}")
    if p.min_degree(var) < 0 or q.min_degree(var) < 0:
        raise ValueError(f"negative powers of {var}")
    size = m + n
    rest = tuple(v for v in p.vars if v != var)
    zero = Poly.const(0, rest)
    pc, qc = _coeffs_desc(p, var, m), _coeffs_desc(q, var, n)
    rows = []
    for i in range(n):
        rows.append([zero] * i + pc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + qc + [zero] * (size - n - 1 - i))
    return rows


def bareiss_det(matrix: list[list[Poly]]) -> Poly:
    """Determinant by fraction-free elimination with row pivoting."""
    M = [list(r) for r in matrix]
    n = len(M)
    if n == 0:
        return Poly.const(1)
    sign = 1
    prev = None
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return M[k][k] * 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            row_i, row_k = M[i], M[k]
            for j in range(k + 1, n):
                val = row_i[j] * pivot
                if mik and row_k[j]:
                    val = val - mik * row_k[j]
                if prev is not None and val:
                    val = val.exact_quotient(prev)
                row_i[j] = val
            row_i[k] = row_i[k] * 0
        prev = pivot
    det = M[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(p: Poly, q: Poly, var: str) -> Poly:
    """Res_var(p, q): Sylvester determinant, rows of p first.  Zero if either input is zero."""
    p, q = p._align(q)
    if not p or not q:
        return Poly.const(0, tuple(v for v in p.vars if v != var))
    return bareiss_det(sylvester_matrix(p, q, var))


# --- gcd ----------------------------------------------------------------


def _main_var(*polys: Poly) -> Optional[str]:
    for p in polys:
        for v in p.used_vars():
            return v
    return None


def content_in(p: Poly, var: str) -> Poly:
    g = None
    for _, c in p.coeff_split(var):
        g = c if g is None else poly_gcd(g, c)
        if g.is_constant():
            return Poly.const(1, p.vars)
    return g if g is not None else Poly.const(0, p.vars)


def primitive_part(p: Poly, var: str) -> Poly:
    if not p:
        return p
    c = content_in(p, var)
    return p.exact_quotient(c) if not c.is_constant() else p


def pseudo_remainder(a: Poly, b: Poly, var: str) -> Poly:
    a, b = a._align(b)
    n = b.degree(var)
    lc_b = dict(b.coeff_split(var))[n]
    x = Poly.var(var, a.vars)
    r = a
    while r and r.degree(var) >= n:
        d = r.degree(var)
        lc_r = dict(r.coeff_split(var))[d]
        r = r * lc_b - lc_r * b * x ** (d - n)
    return r


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """gcd over Q, normalized to coprime integer coefficients and positive leading term."""
    p, q = p._align(q)
    if not p:
        return q.normalized()
    if not q:
        return p.normalized()
    var = _main_var(p, q)
    if var is None:
        return Poly.const(1, p.vars)
    if p.degree(var) == 0 or q.degree(var) == 0:
        # var absent from one input: gcd divides every coefficient of the other
        zero_side, other = (p, q) if p.degree(var) == 0 else (q, p)
        g = content_in(other, var)
        return poly_gcd(zero_side, g) if g else zero_side.normalized()
    cp, cq = content_in(p, var), content_in(q, var)
    g_content = poly_gcd(cp, cq)
    a, b = primitive_part(p, var), primitive_part(q, var)
    if a.degree(var) < b.degree(var):
        a, b = b, a
    while b and b.degree(var) > 0:
        r = pseudo_remainder(a, b, var)
        a, b = b, primitive_part(r, var)
    g = a if not b else Poly.const(1, p.vars)
    return (g_content * primitive_part(g, var)).normalized()


@dataclass(frozen=True)
class DivisionResult:
    gcd: Poly
    divides: bool
    quotient: Optional[Poly]


def gcd_divides(p: Poly, q: Poly) -> DivisionResult:
    """gcd(p, q) up to a unit, and whether p divides q (with the exact quotient)."""
    if not p:
        raise ZeroDivisionError("division by zero polynomial")
    g = poly_gcd(p, q)
    try:
        quo = q.exact_quotient(p)
    except NotDivisible:
        return DivisionResult(g, False, None)
    return DivisionResult(g, True, quo)


def is_perfect_square_of(p: Poly, root: Poly) -> bool:
    return p == root * root
