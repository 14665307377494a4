"""Triple linking numbers and triple point bounds of torus-covering T^2-links.

Two independent routes are provided: the closed formula in the linking
numbers of the basis braids (:mod:`torustlk.invariants`), and explicit braid
word rewriting sequences whose R3 moves are read off as signed, typed triple
points (:mod:`torustlk.rewriting`, :mod:`torustlk.constructions`).
"""

from .artin import artin_is_identity, braid_equal, commutes
from .braid import (
    BraidWord,
    Permutation,
    compose,
    format_word,
    full_twist,
    inverse,
    is_pure,
    parse_word,
    permutation_of,
    power,
)
from .constructions import (
    SequenceBundle,
    seq_b_delta_n,
    seq_sigma_past_delta,
    seq_slide,
    seq_structured3,
    seq_wrap,
)
from .errors import (
    BraidError,
    InvariantViolation,
    MoveError,
    NotCommutingError,
    NotPureError,
    PreconditionError,
    SequenceError,
    WordParseError,
)
from .invariants import BoundReport, thm2_bound, tlk_abs_sum, tlk_b_delta, tlk_formula
from .linking import LinkingMatrix, linking_matrix
from .pairs import CommutingPair, StructuredPair3, expand_structured
from .rewriting import (
    Move,
    TransformationSequence,
    TriplePoint,
    ValidationReport,
    apply_move,
    tlk_from_sequence,
    triple_points,
    validate_sequence,
)
from .seqfile import dump_sequence, load_sequence
from .tensor import TripleLinkingTensor, admissible_triples

__version__ = "0.1.0"
