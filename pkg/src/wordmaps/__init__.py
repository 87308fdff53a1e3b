"""Exact analysis of word maps on SL(2, C) and PSL(2, C)."""
from types import ModuleType as _ModuleType

from .big import BigReport, almost_surjectivity, big_slice, iterate_and_check
from .classifier import AnalysisOptions, AnalysisReport, analyze, render_report
from .finite_field import ff_image
from .fricke import TraceMap, preimage_for_matrix, preimage_for_trace, psi_iterate, trace_map, trace_polys
from .magnus import (
    DerivedLevel,
    classify_derived_level,
    find_nonvanishing_point,
    mu1_image,
    mu_general,
    obstruction_Lw,
    unipotent_witness,
)
from .matrices import Mat2, evaluate
from .paper_checks import verify_paper_suite
from .triangular import (
    closed_form_phipsi,
    curve_divisibility,
    eval_upper,
    minus_id_criterion,
    phipsi_from_basis,
    rewrite_basic,
)
from .words import (
    Word,
    commutator,
    cyclic_reduce,
    engel_word,
    exponent_sums,
    format_word,
    normalize_two_letter,
    parse_word,
    proper_power_root,
    substitute,
)

__all__ = [n for n, v in dict(globals()).items() if not n.startswith("_") and not isinstance(v, _ModuleType)]
