"""Exhaustive word-map images over SL(2, p) and PSL(2, p) for a list of words.

Heuristic only: the classification results hold over C, not over finite fields.
"""
import argparse
import time
from dataclasses import dataclass, field

from wordmaps.finite_field import BudgetExceeded, ff_image
from wordmaps.words import parse_word


@dataclass
class Config:
    words: list[str] = field(default_factory=lambda: ["x^2", "x^2 y^2", "[x,y]", "[[x,y],y]", "[y x y^-1, x^-1]"])
    primes: tuple[int, ...] = (2, 3, 5, 7)
    projective: bool = False
    max_tuples: int = 6_000_000


def main(cfg: Config) -> None:
    group = "PSL" if cfg.projective else "SL"
    print(f"{'word':<22} {'p':>3} {'image':>12} {'-u in image':>12} {'secs':>6}")
    for text in cfg.words:
        w = parse_word(text)
        for p in cfg.primes:
            t0 = time.perf_counter()
            try:
                img = ff_image(w, p, cfg.projective, max_tuples=cfg.max_tuples)
            except BudgetExceeded as exc:
                print(f"{text:<22} {p:>3} skipped: {exc}")
                continue
            frac = f"{img.image_size}/{img.group_order}"
            print(f"{text:<22} {p:>3} {frac:>12} {str(img.minus_unipotent_in_image):>12} {time.perf_counter() - t0:6.2f}")
    print(f"\n{group}(2, p); -u = [[-1, 1], [0, -1]]")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("words", nargs="*")
    ap.add_argument("--primes", default="2,3,5,7")
    ap.add_argument("--projective", action="store_true")
    a = ap.parse_args()
    cfg = Config(projective=a.projective, primes=tuple(int(p) for p in a.primes.split(",")))
    if a.words:
        cfg.words = a.words
    main(cfg)
