"""Uniqueness of minimum vertex covers and pre-assignment feasibility.

A pre-assignment is feasible when exactly one minimum vertex cover is
consistent with it.  Both checks reduce to bounded cover searches: a second
minimum cover avoiding v exists iff the graph minus the closed neighborhood
of v still has a cover of size tau - deg(v), and a pre-assignment pins the
instance down iff the graph minus the forced vertices has a unique minimum
cover of the matching residual size.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph, Model, PreAssignment, VertexSet, delete
from .limits import check_vertex_limit
from .vertex_cover import (
    SolveStats,
    VcSolution,
    _bits,
    _bounded_cover,
    _min_cover,
)

__all__ = [
    "Reason",
    "FeasibilityReport",
    "has_unique_min_vc",
    "is_feasible",
    "reduce_instance",
]


class Reason(str, Enum):
    """Why a pre-assignment fails to be feasible."""

    NOT_UNIQUE = "NotUnique"
    NOT_MINIMUM_CONSISTENT = "NotMinimumConsistent"
    EXCLUDE_NOT_INDEPENDENT = "ExcludeNotIndependent"
    OVERLAP = "Overlap"


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of a feasibility check.

    witness is the unique consistent minimum cover when feasible, else None;
    reason explains the failure when infeasible.
    """

    feasible: bool
    witness: VertexSet | None
    reason: Reason | None


def _unique_min_cover(
    adj: tuple[int, ...], active: int, tau: int, cover: int, stats: SolveStats
) -> bool:
    """True iff the given minimum cover of the active subgraph is unique.

    A different minimum cover avoids some v of this one, and then it must
    contain N(v); so one exists iff for some v the graph minus N[v] still
    has a cover of size tau - deg(v).
    """
    scan = cover
    while scan:
        low = scan & -scan
        scan ^= low
        v = low.bit_length() - 1
        nb = adj[v] & active
        rest = active & ~nb & ~low
        if _bounded_cover(adj, rest, tau - nb.bit_count(), stats) is not None:
            return False
    return True


def _check_pre_assignment(
    adj: tuple[int, ...],
    n: int,
    tau: int,
    inc_mask: int,
    exc_mask: int,
    stats: SolveStats,
) -> tuple[bool, int | None, Reason | None]:
    """Feasibility of (include, exclude) masks given tau of the full graph."""
    stats.uvc_calls += 1
    if inc_mask & exc_mask:
        return False, None, Reason.OVERLAP
    scan = exc_mask
    neighborhood = 0
    while scan:
        low = scan & -scan
        scan ^= low
        v = low.bit_length() - 1
        if adj[v] & exc_mask:
            return False, None, Reason.EXCLUDE_NOT_INDEPENDENT
        neighborhood |= adj[v]
    forced = inc_mask | neighborhood
    target = tau - forced.bit_count()
    if target < 0:
        return False, None, Reason.NOT_MINIMUM_CONSISTENT
    active = ((1 << n) - 1) & ~forced & ~exc_mask
    cover = _bounded_cover(adj, active, target, stats)
    if cover is None:
        return False, None, Reason.NOT_MINIMUM_CONSISTENT
    if not _unique_min_cover(adj, active, target, cover, stats):
        return False, None, Reason.NOT_UNIQUE
    return True, cover | forced, None


def has_unique_min_vc(
    g: Graph,
    *,
    vertex_limit: int | None = None,
    stats: SolveStats | None = None,
) -> tuple[bool, VcSolution]:
    """Whether g has exactly one minimum vertex cover, plus one such cover.

    When the answer is True the returned cover is the unique one.
    """
    check_vertex_limit(g.n, vertex_limit)
    st = stats if stats is not None else SolveStats()
    found = _min_cover(g.adj, g.full_mask, st)
    assert found is not None
    tau, cover = found
    unique = _unique_min_cover(g.adj, g.full_mask, tau, cover, st)
    return unique, VcSolution(tau, VertexSet.from_mask(g.n, cover))


def is_feasible(
    g: Graph,
    pa: PreAssignment,
    *,
    vertex_limit: int | None = None,
    stats: SolveStats | None = None,
) -> FeasibilityReport:
    """Check whether exactly one minimum vertex cover is consistent with pa.

    Consistent means containing every include vertex and avoiding every
    exclude vertex.  Failures carry a reason: overlapping sets, a
    non-independent exclude set (no cover can avoid both endpoints of an
    edge), no minimum cover consistent at all, or more than one.
    """
    if pa.n != g.n:
        raise ValueError("pre-assignment universe does not match graph")
    check_vertex_limit(g.n, vertex_limit)
    st = stats if stats is not None else SolveStats()
    found = _min_cover(g.adj, g.full_mask, st)
    assert found is not None
    tau, _ = found
    ok, witness, reason = _check_pre_assignment(
        g.adj, g.n, tau, pa.include.mask, pa.exclude.mask, st
    )
    return FeasibilityReport(
        ok, None if witness is None else VertexSet.from_mask(g.n, witness), reason
    )


def reduce_instance(
    g: Graph,
    pa: PreAssignment,
    *,
    vertex_limit: int | None = None,
    stats: SolveStats | None = None,
) -> tuple[Graph, int, dict[int, int]]:
    """Strip a feasible pre-assignment, leaving a unique-cover instance.

    Deletes the include vertices, the exclude vertices, and the neighbors of
    the exclude vertices (all of which are decided), and returns the reduced
    graph, its expected minimum cover size, and the id map old -> new.  The
    reduced graph has a unique minimum cover of exactly that size, which
    makes this the core of the benchmark instance generator.  Raises
    ValueError when pa is not feasible for g.
    """
    report = is_feasible(g, pa, vertex_limit=vertex_limit, stats=stats)
    if not report.feasible:
        raise ValueError(f"pre-assignment is not feasible ({report.reason.value})")
    st = stats if stats is not None else SolveStats()
    found = _min_cover(g.adj, g.full_mask, st)
    assert found is not None
    tau, _ = found
    neighborhood = 0
    for v in _bits(pa.exclude.mask):
        neighborhood |= g.neighbors_mask(v)
    decided = pa.include.mask | neighborhood
    expected_tau = tau - decided.bit_count()
    removed = VertexSet.from_mask(g.n, decided | pa.exclude.mask)
    reduced, old_to_new = delete(g, removed)
    return reduced, expected_tau, old_to_new
