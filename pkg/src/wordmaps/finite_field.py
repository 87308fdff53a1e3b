"""Exhaustive word-map images over SL(2, p) and PSL(2, p) for small primes.

This is an exploratory oracle.  The surjectivity results proved elsewhere in
the package are over algebraically closed fields of characteristic zero, and
a finite-field image says nothing about them in either direction.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .words import Word

PRIMES = (2, 3, 5, 7, 11, 13)
DISCLAIMER = (
    "heuristic: finite-field images are exploratory and neither prove nor refute "
    "statements over algebraically closed fields of characteristic zero"
)


class BudgetExceeded(RuntimeError):
    pass


def sl2_elements(p: int) -> np.ndarray:
    """All of SL(2, p) as an (N, 2, 2) int64 array, in lexicographic order."""
    r = np.arange(p)
    a, b, c, d = (m.ravel() for m in np.meshgrid(r, r, r, r, indexing="ij"))
    keep = (a * d - b * c) % p == 1
    return np.stack([a[keep], b[keep], c[keep], d[keep]], axis=1).reshape(-1, 2, 2).astype(np.int64)


def _codes(m: np.ndarray, p: int) -> np.ndarray:
    flat = m.reshape(-1, 4)
    return ((flat[:, 0] * p + flat[:, 1]) * p + flat[:, 2]) * p + flat[:, 3]


def _projective_codes(m: np.ndarray, p: int) -> np.ndarray:
    return np.minimum(_codes(m, p), _codes((-m) % p, p))


def _mul(x: np.ndarray, y: np.ndarray, p: int) -> np.ndarray:
    return np.einsum("nij,njk->nik", x, y) % p


def _adj(x: np.ndarray, p: int) -> np.ndarray:
    out = np.empty_like(x)
    out[:, 0, 0] = x[:, 1, 1]
    out[:, 1, 1] = x[:, 0, 0]
    out[:, 0, 1] = -x[:, 0, 1]
    out[:, 1, 0] = -x[:, 1, 0]
    return out % p


def evaluate_batch(w: Word, images: list[np.ndarray], p: int) -> np.ndarray:
    """w evaluated on a batch of generator tuples; images[i] has shape (N, 2, 2)."""
    size = images[0].shape[0]
    out = np.broadcast_to(np.eye(2, dtype=np.int64), (size, 2, 2)).copy()
    inv: dict[int, np.ndarray] = {}
    for g, e in w.syllables:
        if e < 0 and g not in inv:
            inv[g] = _adj(images[g - 1], p)
        m = images[g - 1] if e > 0 else inv[g]
        for _ in range(abs(e)):
            out = _mul(out, m, p)
    return out


@dataclass
class FFImage:
    word: str
    p: int
    projective: bool
    group_order: int
    image_size: int
    surjective: bool
    trace_coverage: dict[int, tuple[int, int]]
    minus_unipotent_in_image: bool
    notes: list[str] = field(default_factory=list)
    disclaimer: str = DISCLAIMER

    def to_json(self) -> dict:
        return {
            "word": self.word,
            "p": self.p,
            "projective": self.projective,
            "group_order": self.group_order,
            "image_size": self.image_size,
            "surjective": self.surjective,
            "trace_coverage": {str(t): {"hit": h, "total": n} for t, (h, n) in sorted(self.trace_coverage.items())},
            "minus_unipotent_in_image": self.minus_unipotent_in_image,
            "notes": self.notes,
            "disclaimer": self.disclaimer,
        }


def ff_image(w: Word, p: int, projective: bool = False, max_tuples: int = 6_000_000, chunk: int = 500_000) -> FFImage:
    """Image of the word map on SL(2, p)^n (or PSL), by enumerating every tuple.

    Trace coverage is keyed by trace in SL mode and by the class {t, -t},
    represented by min(t, p - t), in projective mode.
    """
    if p not in PRIMES:
        raise ValueError(f"p must be one of {PRIMES}")
    elems = sl2_elements(p)
    if projective:
        pc = _projective_codes(elems, p)
        _, first = np.unique(pc, return_index=True)
        elems = elems[np.sort(first)]
    N = len(elems)
    n = w.n
    total = N ** n
    if total > max_tuples:
        raise BudgetExceeded(f"{N}^{n} = {total} tuples exceeds the budget {max_tuples}")

    key = _projective_codes if projective else _codes
    seen = np.zeros(p ** 4, dtype=bool)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk))
        images = []
        for _ in range(n):
            images.append(elems[idx % N])
            idx = idx // N
        seen[key(evaluate_batch(w, images[::-1], p), p)] = True

    group_codes = key(elems, p)
    hit = seen[group_codes]
    traces = (elems[:, 0, 0] + elems[:, 1, 1]) % p
    if projective:
        traces = np.minimum(traces, (p - traces) % p)
    coverage = {int(t): (int(hit[traces == t].sum()), int((traces == t).sum())) for t in np.unique(traces)}
    target = np.array([[[p - 1, 1], [0, p - 1]]], dtype=np.int64)
    target_in = bool(seen[key(target, p)][0])
    size = int(hit.sum())
    return FFImage(str(w), p, projective, N, size, size == N, coverage, target_in)
