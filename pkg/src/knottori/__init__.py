"""Finiteness and rank bounds for isotopy classes of knots, links and knotted tori."""

from .criteria import (
    DimTriple,
    DomainError,
    FinitenessVerdict,
    Verdict,
    connected_sum_infinite,
    framed_knot_infinite,
    knot_infinite,
    knotted_tori_infinite,
    knotted_tori_infinite_via_components,
    link_unknotted_infinite,
    link_zero_infinite,
)
from .fcs import LatticePoint, LineEquation, fcs_contains, fcs_line_witness, fcs_window, line_solutions
from .ranks import DefaultProvider, RankInterval, TableProvider, tori_rank

__version__ = "0.1.0"
