"""Intuitionistic fuzzy-parametrized soft sets: algebra, reduction and decisions."""

from .ifs_core import (
    TOL,
    DegreePair,
    DomainError,
    FuzzySet,
    IntuitionisticFuzzySet,
    ifs_complement,
    ifs_equal,
    ifs_intersection,
    ifs_product,
    ifs_subset,
    ifs_sum,
    ifs_union,
)
from .ifps_core import (
    Entry,
    IFPSSet,
    and_product,
    and_sum,
    check_invariants,
    empty_ifps,
    from_fp_soft,
    ifps_complement,
    ifps_equal,
    ifps_intersection,
    ifps_subset,
    ifps_union,
    make_ifps,
    or_product,
    or_sum,
    universal_ifps,
)
from .reduction import RangeWarning, ReductionRangeWarning, reduce_fuzzy, reduce_intuitionistic
from .decision import RankedDecision, aggregate_group, decide, rank
from .lawcheck import LawReport, gen_ifps, run_suite
from .document import ParseError, parse_ifps, serialize_ifps

__version__ = "0.1.0"
