"""Complex roots of univariate polynomials by Durand-Kerner iteration."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .poly import Poly


@dataclass(frozen=True)
class RootConfig:
    tol: float = 1e-10
    max_iter: int = 2000
    restarts: int = 6
    seed: int = 0


class RootFindingError(ArithmeticError):
    def __init__(self, message: str, best_residual: float):
        super().__init__(f"{message} (best residual {best_residual:.3e})")
        self.best_residual = best_residual


def _as_coeffs(p, var: str | None) -> np.ndarray:
    if isinstance(p, Poly):
        used = p.used_vars()
        name = var or (used[0] if used else (p.vars[0] if p.vars else "z"))
        p = p.univariate_coeffs(name)
    c = [complex(x) for x in p]
    while c and c[-1] == 0:
        c.pop()
    return np.array(c, dtype=complex)


def scaled_residual(coeffs: np.ndarray, z: complex) -> float:
    """|p(z)| divided by sum |c_i| |z|^i, which is scale free."""
    powers = z ** np.arange(len(coeffs))
    num = abs(np.dot(coeffs, powers))
    den = float(np.dot(np.abs(coeffs), np.abs(powers)))
    return num / den if den else num


def _durand_kerner(monic: np.ndarray, start: np.ndarray, max_iter: int) -> np.ndarray:
    z = start.copy()
    n = len(z)
    rev = monic[::-1]
    for _ in range(max_iter):
        vals = np.polyval(rev, z)
        diff = z[:, None] - z[None, :]
        diff[np.arange(n), np.arange(n)] = 1
        denom = diff.prod(axis=1)
        denom[denom == 0] = 1e-300
        step = vals / denom
        z = z - step
        if np.all(np.abs(step) <= 1e-15 * np.maximum(1.0, np.abs(z))):
            break
    return z


def _polish(coeffs: np.ndarray, z: np.ndarray, rounds: int = 3) -> np.ndarray:
    rev = coeffs[::-1]
    drev = np.polyder(rev)
    out = z.copy()
    for _ in range(rounds):
        d = np.polyval(drev, out)
        ok = np.abs(d) > 1e-12 * np.maximum(1.0, np.abs(np.polyval(rev, out)))
        nz = np.where(ok, out - np.polyval(rev, out) / np.where(ok, d, 1), out)
        better = np.abs(np.polyval(rev, nz)) <= np.abs(np.polyval(rev, out))
        out = np.where(better, nz, out)
    return out


def complex_roots(p, var: str | None = None, config: RootConfig = RootConfig()) -> list[complex]:
    """All roots with multiplicity; each has scaled residual below ``config.tol``."""
    coeffs = _as_coeffs(p, var)
    if len(coeffs) < 2:
        raise ValueError("polynomial must have degree >= 1")
    zeros = 0
    while coeffs[0] == 0:
        coeffs = coeffs[1:]
        zeros += 1
    roots: list[complex] = [0j] * zeros
    if len(coeffs) == 1:
        return roots
    monic = coeffs / coeffs[-1]
    n = len(monic) - 1
    radius = 1 + float(np.max(np.abs(monic[:-1])))
    rng = np.random.default_rng(config.seed)
    best, best_res = None, np.inf
    for attempt in range(config.restarts + 1):
        angle = 0.4 + 2 * np.pi * np.arange(n) / n
        start = 0.5 * radius * np.exp(1j * angle)
        if attempt:
            start = start * (1 + 0.2 * rng.standard_normal(n)) + 0.1j * rng.standard_normal(n)
        z = _polish(coeffs, _durand_kerner(monic, start, config.max_iter))
        res = max(scaled_residual(coeffs, zi) for zi in z)
        if res < best_res:
            best, best_res = z, res
        if res <= config.tol:
            break
    if best_res > config.tol:
        raise RootFindingError("root iteration did not converge", best_res)
    return roots + [complex(x) for x in best]
