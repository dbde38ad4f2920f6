"""Exact Schur-functor calculus, Borel-Weil-Bott cohomology on Grassmannians,
and verification of exceptional / semi-orthogonal collections built from the
planar locus of the Hilbert scheme of three points."""

from .partitions import Weight, compare, from_hook, parse_weight, to_hook, transpose, weyl_vector
from .rep_ring import (
    CharPoly,
    RepElement,
    char_of,
    decompose,
    det_twist,
    dual,
    ext_power,
    sym_power,
    tensor,
    weyl_dim,
)
from .bwb import BWBOutcome, BundleExpr, GradedCohomology, bwb_single, cohomology
from .bundle_calculus import (
    NormalBundleModel,
    middle_split,
    planar_rank_identity,
    wedge2_middle,
    wedge_nprime,
)
from .soc import (
    FunctorLabel,
    VerificationReport,
    check_cotangent_simple,
    check_exceptional,
    check_fully_faithful,
    check_semiorthogonal,
    enumerate_ff,
    enumerate_sos,
    ext_decomposition,
    kummer_count,
)

__all__ = [
    "Weight",
    "compare",
    "transpose",
    "from_hook",
    "to_hook",
    "parse_weight",
    "weyl_vector",
    "RepElement",
    "CharPoly",
    "tensor",
    "dual",
    "det_twist",
    "sym_power",
    "ext_power",
    "char_of",
    "decompose",
    "weyl_dim",
    "BWBOutcome",
    "BundleExpr",
    "GradedCohomology",
    "bwb_single",
    "cohomology",
    "NormalBundleModel",
    "wedge_nprime",
    "wedge2_middle",
    "middle_split",
    "planar_rank_identity",
    "FunctorLabel",
    "VerificationReport",
    "ext_decomposition",
    "check_exceptional",
    "check_fully_faithful",
    "check_semiorthogonal",
    "check_cotangent_simple",
    "enumerate_ff",
    "enumerate_sos",
    "kummer_count",
]

__version__ = "0.1.0"
