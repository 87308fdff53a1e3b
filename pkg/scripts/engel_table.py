"""Table of Engel words e_n: basis expression, -id exponent, obstruction value."""
import argparse
from dataclasses import dataclass

from wordmaps.magnus import find_nonvanishing_point, obstruction_Lw
from wordmaps.triangular import minus_id_criterion, rewrite_basic
from wordmaps.words import engel_word


@dataclass
class Config:
    max_n: int = 8


def main(cfg: Config) -> None:
    print(f"{'n':>2} {'len':>5} {'factors':>8} {'R(1,n)':>7} {'N':>5} {'witness':>10}  L_w point")
    for n in range(1, cfg.max_n + 1):
        e = engel_word(n)
        expr = rewrite_basic(e)
        mi = minus_id_criterion(e)
        L = obstruction_Lw(e)
        pt = find_nonvanishing_point(L)
        val = L.evaluate(dict(zip(L.vars, pt)))
        wit = f"a^{mi.exponent}" if mi.applicable else "-"
        pts = ",".join(map(str, pt))
        print(f"{n:>2} {len(e):>5} {len(expr.factors):>8} {expr.R(1, n):>7} {mi.N:>5} {wit:>10}  ({pts}) -> {val}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    main(Config(ap.parse_args().max_n))
