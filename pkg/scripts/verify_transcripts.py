"""Replay the published transcripts and print the check ledger."""
import argparse
import json
import sys
import time
from dataclasses import dataclass

from wordmaps.paper_checks import verify_paper_suite


@dataclass
class Config:
    seed: int = 0
    as_json: bool = False


def main(cfg: Config) -> int:
    t0 = time.perf_counter()
    rep = verify_paper_suite(seed=cfg.seed)
    if cfg.as_json:
        print(json.dumps(rep.to_json(), indent=2))
    else:
        print(rep.to_text())
        print(f"\n{sum(c.passed for c in rep.checks)}/{len(rep.checks)} checks passed in {time.perf_counter() - t0:.2f} s")
    return 0 if rep.passed else 3


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    a = ap.parse_args()
    sys.exit(main(Config(a.seed, a.json)))
