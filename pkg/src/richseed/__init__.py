"""Initial seeds for cluster structures on open Richardson varieties."""

from .errors import (
    AmbiguousBranch,
    IllegalType,
    InvariantViolation,
    NegativeCoordinate,
    NoValidBranch,
    NotLessOrEqual,
    NotReduced,
    RichseedError,
    Unclassifiable,
)
from .rootsys import CartanData, WeylElement, cartan, element_of_word, parse_type, positive_roots
from .words import (
    ComboNumbers,
    SubwordEmbedding,
    Word,
    combo_numbers,
    left_complete,
    leftmost_subword,
    make_word,
    rightmost_subword,
)
from .deltavec import DeltaVector, delta_via_xi, in_Cv, in_Cw, initial_delta_same, initial_delta_tilde
from .quiver import ConfigLabel, Quiver, build_gamma, classify_config, classify_sawteeth, to_dot
from .mutalg import (
    AlgState,
    FinalSeed,
    cut_view,
    green_report,
    initial_state,
    run,
    schedule_tilde,
    step_hat,
    verify_equivalence,
)

__version__ = "0.1.0"

__all__ = [
    "AlgState",
    "AmbiguousBranch",
    "CartanData",
    "ComboNumbers",
    "ConfigLabel",
    "DeltaVector",
    "FinalSeed",
    "IllegalType",
    "InvariantViolation",
    "NegativeCoordinate",
    "NoValidBranch",
    "NotLessOrEqual",
    "NotReduced",
    "Quiver",
    "RichseedError",
    "SubwordEmbedding",
    "Unclassifiable",
    "WeylElement",
    "Word",
    "build_gamma",
    "cartan",
    "classify_config",
    "classify_sawteeth",
    "combo_numbers",
    "cut_view",
    "delta_via_xi",
    "element_of_word",
    "green_report",
    "in_Cv",
    "in_Cw",
    "initial_delta_same",
    "initial_delta_tilde",
    "initial_state",
    "left_complete",
    "leftmost_subword",
    "make_word",
    "parse_type",
    "positive_roots",
    "rightmost_subword",
    "run",
    "schedule_tilde",
    "step_hat",
    "to_dot",
    "verify_equivalence",
]
