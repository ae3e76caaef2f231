"""Exact curve counts on threefolds via Schubert calculus and Chern class
integrals over Grassmannians and projective bundles."""

from .chern import (
    ChernVector,
    FormalRing,
    GradedRing,
    GrassRing,
    UniversalPoly,
    direct_sum,
    dual_bundle,
    reduce_symmetric,
    segre,
    sym_power,
    tensor_line,
    universal_sym_chern,
    whitney_quotient,
)
from .dsl import DSLError, EvalError, EvalResult, ParseError, Query, evaluate, parse, render
from .projbundle import PBElement, ProjBundleRing, pb_integrate, pb_multiply, pb_pushforward
from .recipes import (
    ClemensCount,
    CountReport,
    DegenerationLedger,
    LedgerComponent,
    LedgerReport,
    NormalBundleSplit,
    builtin_ledgers,
    clemens_excess,
    conics_on_quintic_type,
    equivalence_unobstructed,
    equivalence_zero_dim,
    ledger_check,
    lines_on_complete_intersection,
    load_ledger_file,
    multiple_cover_weight,
    normal_bundle_classify,
    reference_counts,
)
from .schubert import (
    GrassCtx,
    Partition,
    SchubertCycle,
    chern_tautological,
    dual_partition,
    integrate,
    lr_coefficient,
    multiply,
    multiply_lr,
    pieri,
    schubert_class,
)
from .suites import SUITE_NAMES, CheckResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "ChernVector",
    "CheckResult",
    "ClemensCount",
    "CountReport",
    "DSLError",
    "DegenerationLedger",
    "EvalError",
    "EvalResult",
    "FormalRing",
    "GradedRing",
    "GrassCtx",
    "GrassRing",
    "LedgerComponent",
    "LedgerReport",
    "NormalBundleSplit",
    "PBElement",
    "ParseError",
    "Partition",
    "ProjBundleRing",
    "Query",
    "SchubertCycle",
    "SUITE_NAMES",
    "UniversalPoly",
    "builtin_ledgers",
    "chern_tautological",
    "clemens_excess",
    "conics_on_quintic_type",
    "direct_sum",
    "dual_bundle",
    "dual_partition",
    "equivalence_unobstructed",
    "equivalence_zero_dim",
    "evaluate",
    "integrate",
    "ledger_check",
    "lines_on_complete_intersection",
    "load_ledger_file",
    "lr_coefficient",
    "multiple_cover_weight",
    "multiply",
    "multiply_lr",
    "normal_bundle_classify",
    "parse",
    "pb_integrate",
    "pb_multiply",
    "pb_pushforward",
    "pieri",
    "reduce_symmetric",
    "reference_counts",
    "render",
    "run_suite",
    "schubert_class",
    "segre",
    "sym_power",
    "tensor_line",
    "universal_sym_chern",
    "whitney_quotient",
    "__version__",
]
