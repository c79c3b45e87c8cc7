"""Exceptional numbers for extremal Groemer (Wegner) disc packings."""

from .criteria import (
    BRWitness,
    Verdict,
    WegnerWitness,
    br_discriminant,
    check_boeroeczky_ruzsa,
    check_corrected,
    check_wegner_conjecture,
    induction_lemma_holds,
    param_discriminant,
    verdict,
)
from .params import HexParams, ceil_isqrt, decompose, p0_of_n, p0_of_params, recompose
from .search import (
    BoundarySeq,
    SearchReport,
    bounds_ok,
    canonicalize,
    complete_seq,
    cross_validate,
    enumerate_exceptional,
    find_extremal,
    n_of_seq,
    perimeter_of_seq,
)
