"""Verdict pipeline for a word map on SL(2, C) and PSL(2, C).

Each criterion appends an entry; verdicts only move up their lattice, so
adding criteria never weakens a conclusion.  All verdicts refer to an
algebraically closed field of characteristic zero.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence

from .big import almost_surjectivity
from .magnus import (
    DerivedLevel,
    classify_derived_level,
    find_nonvanishing_point,
    obstruction_Lw,
    t_vars,
    unipotent_witness,
)
from .matrices import Mat2
from .triangular import curve_divisibility, minus_id_criterion
from .words import PurePowerError, Word, exponent_sums, format_word, normalize_two_letter, proper_power_root

FIELD = "C (algebraically closed, characteristic 0)"

PSL2_ORDER = ("Unknown", "Surjective")
SL2_ORDER = ("Unknown", "SurjectiveOrProperPower", "AlmostSurjective", "Surjective")


@dataclass(frozen=True)
class AnalysisOptions:
    big_samples: tuple = ()
    do_ff: bool = False
    prime: int = 5
    projective: bool = True
    search_orbit: bool = True


@dataclass
class Criterion:
    name: str
    applicable: bool
    outcome: str
    certificate: Optional[dict] = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "applicable": self.applicable,
            "outcome": self.outcome,
            "certificate": self.certificate,
            "note": self.note,
        }


@dataclass
class AnalysisReport:
    word: str
    normal_form: str
    num_generators: int
    exponent_sums: tuple[int, ...]
    derived_level: str
    obstruction: Optional[str] = None
    criteria: list[Criterion] = field(default_factory=list)
    psl2_verdict: str = "Unknown"
    sl2_verdict: str = "Unknown"
    minus_id: str = "Unknown"
    certificates: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    field: str = FIELD

    def _raise(self, attr: str, order: Sequence[str], value: str, source: str) -> None:
        if order.index(value) > order.index(getattr(self, attr)):
            setattr(self, attr, value)
            self.notes.append(f"{attr} -> {value} via {source}")

    def raise_psl2(self, value: str, source: str) -> None:
        self._raise("psl2_verdict", PSL2_ORDER, value, source)

    def raise_sl2(self, value: str, source: str) -> None:
        self._raise("sl2_verdict", SL2_ORDER, value, source)
        if self.sl2_verdict == "Surjective":
            self.raise_psl2("Surjective", f"{source} (SL2 surjectivity descends to PSL2)")

    def set_minus_id(self, N: int, source: str) -> None:
        if self.minus_id == "Unknown":
            self.minus_id = f"InImage({N})"
            self.notes.append(f"minus_id -> InImage({N}) via {source}")

    def criterion(self, name: str) -> Optional[Criterion]:
        return next((c for c in self.criteria if c.name == name), None)

    def to_json(self) -> dict:
        return {
            "word": self.word,
            "normal_form": self.normal_form,
            "num_generators": self.num_generators,
            "exponent_sums": list(self.exponent_sums),
            "derived_level": self.derived_level,
            "obstruction": self.obstruction,
            "criteria": [c.to_json() for c in self.criteria],
            "psl2_verdict": self.psl2_verdict,
            "sl2_verdict": self.sl2_verdict,
            "minus_id": self.minus_id,
            "certificates": self.certificates,
            "field": self.field,
            "notes": self.notes,
        }


def _power_rule(w: Word, report: AnalysisReport) -> None:
    sums = report.exponent_sums
    nz = [(j + 1, s) for j, s in enumerate(sums) if s]
    if not nz:
        report.criteria.append(Criterion("power_rule", False, "inapplicable", note="all exponent sums vanish"))
        return
    j, S = min(nz, key=lambda p: (abs(p[1]), p[0]))
    others = ", ".join("id" if i != j else f"g{j}" for i in range(1, w.n + 1))
    cert = {"kind": "power_rule", "generator": j, "exponent": S, "specialization": f"w({others}) = g{j}^{S}"}
    report.criteria.append(Criterion("power_rule", True, "Surjective(PSL2)", cert))
    report.certificates.append(cert)
    report.raise_psl2("Surjective", "power_rule")
    report.set_minus_id(abs(S), "power_rule")
    if abs(S) == 1:
        report.raise_sl2("Surjective", "power_rule (exponent sum +-1)")


def _theorem_1_3(w: Word, report: AnalysisReport) -> None:
    if report.derived_level != DerivedLevel.InF1NotF2.value:
        report.criteria.append(
            Criterion("theorem_1_3", False, "inapplicable", note=f"derived level is {report.derived_level}")
        )
        return
    L = obstruction_Lw(w).with_vars(t_vars(w.n))
    point = find_nonvanishing_point(L)
    target = Mat2(Fraction(1), Fraction(0), Fraction(1), Fraction(1))
    wit = unipotent_witness(w, target, point)
    cert = {
        "kind": "theorem_1_3",
        "obstruction": L.to_text(),
        "point": [str(p) for p in point],
        "value": str(wit.c),
        "unipotent_witness": {"target": target.to_json(), **wit.to_json()},
    }
    report.criteria.append(Criterion("theorem_1_3", True, "Surjective(PSL2)", cert))
    report.certificates.append(cert)
    report.raise_psl2("Surjective", "theorem_1_3")


def _curve(w: Word, report: AnalysisReport) -> None:
    if w.n != 2:
        report.criteria.append(Criterion("curve_divisibility", False, "inapplicable", note="two-letter words only"))
        return
    if w.is_identity():
        report.criteria.append(Criterion("curve_divisibility", False, "inapplicable", note="identity word"))
        return
    try:
        form = normalize_two_letter(w)
    except PurePowerError as exc:
        report.criteria.append(Criterion("curve_divisibility", False, "inapplicable", note=str(exc)))
        return
    if not form.A and not form.B:
        report.criteria.append(Criterion("curve_divisibility", False, "inapplicable", note="A(w) = B(w) = 0"))
        return
    verdict = curve_divisibility(form, w)
    cert = {"kind": "curve_divisibility", **verdict.to_json()}
    report.criteria.append(
        Criterion(
            "curve_divisibility",
            True,
            verdict.kind,
            cert,
            note="surjectivity statement as published; -id is reached through the power map x^A or y^B",
        )
    )
    if verdict.kind == "SurjectiveSL2":
        report.certificates.append(cert)
        report.raise_sl2("Surjective", "curve_divisibility")
    elif verdict.kind == "SquareAlternative":
        report.certificates.append(cert)
        report.raise_sl2("SurjectiveOrProperPower", "curve_divisibility")


def _minus_id(w: Word, report: AnalysisReport, search_orbit: bool) -> None:
    if w.n != 2 or report.derived_level != DerivedLevel.InF1NotF2.value:
        report.criteria.append(
            Criterion("minus_id", False, "inapplicable", note="needs a two-letter word in F^(1) outside F^(2)")
        )
        return
    res = minus_id_criterion(w, search_orbit=search_orbit)
    cert = {"kind": "minus_id", **res.to_json()}
    # the witness may come from an orbit word, whose N can differ from w's
    N = res.exponent or res.N
    report.criteria.append(Criterion("minus_id", True, f"InImage({N})" if res.applicable else "Unknown", cert))
    if res.applicable:
        report.certificates.append(cert)
        report.set_minus_id(N, "minus_id")


def _big(w: Word, report: AnalysisReport, samples: Sequence) -> None:
    if not samples:
        return
    if w.n != 2 or w.is_identity():
        report.criteria.append(Criterion("big", False, "inapplicable", note="two-letter non-identity words only"))
        return
    res = almost_surjectivity(w, [Fraction(a) for a in samples])
    cert = {"kind": "big", **res.to_json()}
    report.criteria.append(Criterion("big", True, res.verdict, cert))
    if res.verdict == "AlmostSurjective":
        report.certificates.append(cert)
        report.raise_sl2("AlmostSurjective", f"big at t = {res.witness_a}")


def _proper_power(w: Word, report: AnalysisReport) -> None:
    if w.is_identity():
        report.criteria.append(Criterion("proper_power", False, "inapplicable", note="identity word"))
        return
    v, k = proper_power_root(w)
    report.criteria.append(
        Criterion("proper_power", True, f"power {k}", {"kind": "proper_power", "root": str(v), "power": k})
    )


def _ff(w: Word, report: AnalysisReport, p: int, projective: bool) -> None:
    from .finite_field import BudgetExceeded, ff_image

    try:
        img = ff_image(w, p, projective)
    except (BudgetExceeded, ValueError) as exc:
        report.criteria.append(Criterion("ff_image", False, "inapplicable", note=str(exc)))
        return
    note = img.disclaimer
    if report.psl2_verdict == "Surjective" and not img.surjective:
        note += f"; image over {'P' if projective else ''}SL(2, {p}) is proper although the complex verdict is Surjective"
    report.criteria.append(Criterion("ff_image", True, "exploratory", img.to_json(), note))


def analyze(w: Word, options: AnalysisOptions = AnalysisOptions()) -> AnalysisReport:
    level = classify_derived_level(w)
    report = AnalysisReport(
        word=str(w),
        normal_form=format_word(w),
        num_generators=w.n,
        exponent_sums=exponent_sums(w),
        derived_level=level.value,
    )
    if level is not DerivedLevel.NotInF1:
        L = obstruction_Lw(w)
        report.obstruction = L.to_text() if L else None
    if w.is_identity():
        report.notes.append("identity word: every criterion is inapplicable")
    _power_rule(w, report)
    _theorem_1_3(w, report)
    _curve(w, report)
    _minus_id(w, report, options.search_orbit)
    _big(w, report, options.big_samples)
    if report.sl2_verdict == "AlmostSurjective" and report.minus_id != "Unknown":
        report.raise_sl2("Surjective", "almost surjectivity together with -id in the image")
    _proper_power(w, report)
    if level is DerivedLevel.InF2 and not w.is_identity():
        report.notes.append(
            "word lies in F^(2); the general criteria do not apply. "
            "For [[x,[x,y]],[y,[x,y]]] see the verify-paper suite, which replays the special computation."
        )
    if options.do_ff:
        _ff(w, report, options.prime, options.projective)
    return report


# --- rendering ----------------------------------------------------------

REPORT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": [
        "word",
        "num_generators",
        "exponent_sums",
        "derived_level",
        "obstruction",
        "criteria",
        "psl2_verdict",
        "sl2_verdict",
        "minus_id",
        "certificates",
    ],
    "properties": {
        "word": {"type": "string"},
        "normal_form": {"type": "string"},
        "num_generators": {"type": "integer", "minimum": 1},
        "exponent_sums": {"type": "array", "items": {"type": "integer"}},
        "derived_level": {"enum": [d.value for d in DerivedLevel]},
        "obstruction": {"type": ["string", "null"]},
        "criteria": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "applicable", "outcome"],
                "properties": {
                    "name": {"type": "string"},
                    "applicable": {"type": "boolean"},
                    "outcome": {"type": "string"},
                    "certificate": {"type": ["object", "null"]},
                    "note": {"type": "string"},
                },
            },
        },
        "psl2_verdict": {"enum": list(PSL2_ORDER)},
        "sl2_verdict": {"enum": list(SL2_ORDER)},
        "minus_id": {"type": "string", "pattern": r"^(Unknown|InImage\(-?\d+\))$"},
        "certificates": {"type": "array", "items": {"type": "object", "required": ["kind"]}},
        "field": {"type": "string"},
        "notes": {"type": "array", "items": {"type": "string"}},
    },
}


def render_report(report: AnalysisReport, format: str = "json") -> str:
    if format == "json":
        return json.dumps(report.to_json(), sort_keys=True, separators=(",", ":"), default=str)
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    lines = [
        f"word:            {report.word}",
        f"generators:      {report.num_generators}",
        f"exponent sums:   {list(report.exponent_sums)}",
        f"derived level:   {report.derived_level}",
        f"obstruction:     {report.obstruction if report.obstruction is not None else '-'}",
        f"PSL(2) verdict:  {report.psl2_verdict}",
        f"SL(2) verdict:   {report.sl2_verdict}",
        f"-id:             {report.minus_id}",
        f"field:           {report.field}",
        "criteria:",
    ]
    for c in report.criteria:
        status = c.outcome if c.applicable else f"inapplicable ({c.note})"
        lines.append(f"  - {c.name}: {status}")
    for n in report.notes:
        lines.append(f"note: {n}")
    return "\n".join(lines)
