"""Batch classification: one JSON report per line for each input word."""
import argparse
import sys
from dataclasses import dataclass, field

from wordmaps.classifier import AnalysisOptions, analyze, render_report
from wordmaps.words import WordSyntaxError, parse_word


@dataclass
class Config:
    words: list[str] = field(default_factory=list)
    big_samples: tuple = ()
    text: bool = False


def main(cfg: Config) -> int:
    status = 0
    opts = AnalysisOptions(big_samples=cfg.big_samples)
    for line in cfg.words:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            w = parse_word(line)
        except WordSyntaxError as exc:
            print(f"# skipped {line!r}: {exc}", file=sys.stderr)
            status = 1
            continue
        print(render_report(analyze(w, opts), "text" if cfg.text else "json"))
    return status


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("words", nargs="*", help="words; read stdin when empty")
    ap.add_argument("--big", default="", help="comma-separated slice values")
    ap.add_argument("--text", action="store_true")
    a = ap.parse_args()
    ws = a.words or sys.stdin.readlines()
    big = tuple(x for x in a.big.split(",") if x)
    sys.exit(main(Config(ws, big, a.text)))
