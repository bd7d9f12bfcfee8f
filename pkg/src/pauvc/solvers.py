"""Solvers for minimum pre-assignments that force a unique minimum cover.

Four routes are provided.  :func:`solve_enum` tries every pre-assignment by
increasing size and is the reference oracle for everything else.  The two
fixed-parameter strategies branch the graph down to matchings first:
minimum covers survive only at leaves (forced set + isolated edges), so
include-model candidates are endpoint selections plus subsets of the forced
set, and exclude-model candidates come from a set-cover table over the
forced set (which vertices outside the cover can push a chosen subset in).
Mixed-model questions are answered in the exclude model; the two are
equivalent instance by instance.

Candidates are tested with the uniqueness probe, cheapest first; ties are
broken toward the lexicographically smallest vertex list.  The enumeration
route scans the entire space and therefore returns the global
lexicographic minimum; the fixed-parameter routes return the deterministic
minimum over their candidate spaces (the optimum size always agrees).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from .graph import Graph, Model, PreAssignment, VertexSet, classify, delete
from .limits import (
    DEFAULT_ENUM_VERTEX_LIMIT,
    DEFAULT_GROUND_LIMIT,
    check_vertex_limit,
)
from .tree import pau_tree
from .uniqueness import _check_pre_assignment, is_feasible
from .vertex_cover import (
    SolveStats,
    _bits,
    _branch_leaves,
    _enumerate_covers,
    _min_cover,
)

__all__ = [
    "PauResult",
    "SetCoverTables",
    "set_cover_dp",
    "solve_enum",
    "solve_fpt_include",
    "solve_fpt_exclude",
    "include_to_exclude",
    "mixed_to_exclude",
    "solve",
]

_INF = 1 << 30


@dataclass(frozen=True)
class PauResult:
    """A minimum feasible pre-assignment and the cover it pins down."""

    model: Model
    opt_size: int
    pre: PreAssignment
    unique_cover: VertexSet
    stats: SolveStats

    def to_json_dict(self) -> dict:
        out = self.pre.to_json_dict()
        out["opt_size"] = self.opt_size
        out["unique_cover"] = list(self.unique_cover)
        out["stats"] = self.stats.to_json_dict()
        return out


# ---------------------------------------------------------------------------
# Set cover over subsets of a small ground set.


def _sc_tables(gsize: int, sets: Sequence[int]) -> tuple[list[int], list[int]]:
    """cost[S] = fewest sets covering S, choice[S] = last set used (or -1).

    The update keeps the first set index on ties, so reconstruction is
    deterministic.  Vectorized for larger tables; both paths are identical.
    """
    size = 1 << gsize
    if gsize >= 10 and sets:
        idx = np.arange(size, dtype=np.int64)
        cost = np.full(size, _INF, dtype=np.int64)
        cost[0] = 0
        choice = np.full(size, -1, dtype=np.int64)
        for j, sm in enumerate(sets):
            touches = (idx & sm) != 0
            alt = cost[idx & ~sm] + 1
            better = touches & (alt < cost)
            cost[better] = alt[better]
            choice[better] = j
        return cost.tolist(), choice.tolist()
    cost = [_INF] * size
    cost[0] = 0
    choice = [-1] * size
    for j, sm in enumerate(sets):
        for s in range(size):
            if s & sm:
                alt = cost[s & ~sm] + 1
                if alt < cost[s]:
                    cost[s] = alt
                    choice[s] = j
    return cost, choice


class SetCoverTables:
    """Optimal covering cost of every subset of a ground vertex set.

    cost_of gives the fewest sets whose union contains the subset (inf when
    impossible); family_of returns the indices of one optimal family.
    """

    def __init__(
        self,
        ground: VertexSet,
        sets: tuple[VertexSet, ...],
        cost: list[int],
        choice: list[int],
        compact_sets: list[int],
        positions: dict[int, int],
    ) -> None:
        self.ground = ground
        self.sets = sets
        self._cost = cost
        self._choice = choice
        self._compact_sets = compact_sets
        self._positions = positions

    def _compact(self, subset: VertexSet) -> int:
        if subset.n != self.ground.n:
            raise ValueError("subset universe does not match ground set")
        if not subset <= self.ground:
            raise ValueError("subset is not contained in the ground set")
        cm = 0
        for v in _bits(subset.mask):
            cm |= 1 << self._positions[v]
        return cm

    def cost_of(self, subset: VertexSet) -> float:
        c = self._cost[self._compact(subset)]
        return float("inf") if c >= _INF else c

    def family_of(self, subset: VertexSet) -> tuple[int, ...] | None:
        cm = self._compact(subset)
        if self._cost[cm] >= _INF:
            return None
        picked = []
        while cm:
            j = self._choice[cm]
            picked.append(j)
            cm &= ~self._compact_sets[j]
        return tuple(sorted(picked))


def set_cover_dp(
    ground: VertexSet,
    sets: Sequence[VertexSet],
    *,
    ground_limit: int = DEFAULT_GROUND_LIMIT,
) -> SetCoverTables:
    """Tabulate minimum set covers for all subsets of the ground set.

    Elements of the sets outside the ground set are ignored.  The table has
    2^|ground| entries, so the ground set is capped (default 26).
    """
    check_vertex_limit(len(ground), ground_limit)
    positions = {v: i for i, v in enumerate(ground)}
    compact_sets = []
    for s in sets:
        if s.n != ground.n:
            raise ValueError("set universe does not match ground set")
        cm = 0
        for v in _bits(s.mask & ground.mask):
            cm |= 1 << positions[v]
        compact_sets.append(cm)
    cost, choice = _sc_tables(len(ground), compact_sets)
    return SetCoverTables(ground, tuple(sets), cost, choice, compact_sets, positions)


# ---------------------------------------------------------------------------
# Exhaustive search over pre-assignments, smallest first.


def _mask_of(vertices: Sequence[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _include_prefixes(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All vertex tuples of size <= k in lexicographic tuple order."""

    def rec(prefix: tuple[int, ...], start: int) -> Iterator[tuple[int, ...]]:
        yield prefix
        if len(prefix) < k:
            for v in range(start, n):
                yield from rec(prefix + (v,), v + 1)

    return rec((), 0)


def _result(
    g: Graph,
    model: Model,
    inc_mask: int,
    exc_mask: int,
    cover: int,
    stats: SolveStats,
    started: float,
) -> PauResult:
    pre = PreAssignment(
        model,
        VertexSet.from_mask(g.n, inc_mask),
        VertexSet.from_mask(g.n, exc_mask),
    )
    stats.elapsed = time.perf_counter() - started
    return PauResult(
        model,
        pre.size(),
        pre,
        VertexSet.from_mask(g.n, cover),
        stats,
    )


def solve_enum(
    g: Graph,
    model: Model | str,
    *,
    vertex_limit: int = DEFAULT_ENUM_VERTEX_LIMIT,
    deadline: float | None = None,
) -> PauResult:
    """Try every pre-assignment by increasing size; the reference oracle.

    Candidates of equal size are visited in lexicographic order (include
    set before exclude set for the mixed model), so the returned witness is
    the lexicographically smallest minimum feasible pre-assignment.
    """
    model = Model(model)
    check_vertex_limit(g.n, vertex_limit)
    stats = SolveStats(deadline)
    started = time.perf_counter()
    found = _min_cover(g.adj, g.full_mask, stats)
    assert found is not None
    tau, _ = found
    n = g.n
    for k in range(n + 1):
        if model is Model.MIXED:
            for inc in _include_prefixes(n, k):
                inc_mask = _mask_of(inc)
                rest = [v for v in range(n) if not (inc_mask >> v) & 1]
                for exc in combinations(rest, k - len(inc)):
                    exc_mask = _mask_of(exc)
                    ok, cover, _ = _check_pre_assignment(
                        g.adj, n, tau, inc_mask, exc_mask, stats
                    )
                    if ok:
                        return _result(
                            g, model, inc_mask, exc_mask, cover, stats, started
                        )
        else:
            for combo in combinations(range(n), k):
                mask = _mask_of(combo)
                inc_mask, exc_mask = (
                    (mask, 0) if model is Model.INCLUDE else (0, mask)
                )
                ok, cover, _ = _check_pre_assignment(
                    g.adj, n, tau, inc_mask, exc_mask, stats
                )
                if ok:
                    return _result(g, model, inc_mask, exc_mask, cover, stats, started)
    raise AssertionError("no feasible pre-assignment found, which cannot happen")


# ---------------------------------------------------------------------------
# Fixed-parameter strategies via branching to matchings.


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _first_feasible(
    g: Graph,
    tau: int,
    candidates: set[int],
    model: Model,
    stats: SolveStats,
) -> tuple[int, int]:
    """Probe candidate masks cheapest-first; (candidate, unique cover)."""
    by_size: dict[int, list[int]] = {}
    for m in candidates:
        by_size.setdefault(m.bit_count(), []).append(m)
    for size in sorted(by_size):
        for cand in sorted(by_size[size], key=lambda mm: tuple(_bits(mm))):
            inc, exc = (cand, 0) if model is Model.INCLUDE else (0, cand)
            ok, cover, _ = _check_pre_assignment(g.adj, g.n, tau, inc, exc, stats)
            if ok:
                return cand, cover
    raise AssertionError("candidate generation missed every feasible pre-assignment")


def _all_min_cover_masks(g: Graph, tau: int, stats: SolveStats) -> list[int]:
    masks: list[int] = []
    _enumerate_covers(g.adj, g.full_mask, 0, tau, masks, 1 << 20, stats)
    return masks


def solve_fpt_include(
    g: Graph,
    *,
    refined: bool = True,
    vertex_limit: int | None = None,
    deadline: float | None = None,
) -> PauResult:
    """Minimum include-model pre-assignment, parameterized by tau.

    A feasible include set lies inside its target cover and must pick one
    endpoint of every isolated edge of the branching leaf that cover
    extends, plus any subset of the leaf's forced set.  The unrefined
    variant enumerates whole minimum covers and all their subsets instead;
    it is kept for differential testing.
    """
    check_vertex_limit(g.n, vertex_limit)
    stats = SolveStats(deadline)
    started = time.perf_counter()
    found = _min_cover(g.adj, g.full_mask, stats)
    assert found is not None
    tau, _ = found
    candidates: set[int] = set()
    if refined:
        for forced, pairs in _branch_leaves(g.adj, g.full_mask, tau, stats):
            selections = [0]
            for a, b in pairs:
                selections = [
                    s | pick for s in selections for pick in (1 << a, 1 << b)
                ]
            for sel in selections:
                for sub in _submasks(forced):
                    candidates.add(sel | sub)
    else:
        for cover_mask in _all_min_cover_masks(g, tau, stats):
            for sub in _submasks(cover_mask):
                candidates.add(sub)
    best, cover = _first_feasible(g, tau, candidates, Model.INCLUDE, stats)
    return _result(g, Model.INCLUDE, best, 0, cover, stats, started)


def _exclude_candidates_for_leaf(
    g: Graph,
    forced: int,
    pairs: tuple[tuple[int, int], ...],
    candidates: set[int],
) -> None:
    """Add the set-cover driven exclude candidates of one branching leaf."""
    positions = {}
    for i, v in enumerate(_bits(forced)):
        positions[v] = i
    gsize = len(positions)
    matched = 0
    for a, b in pairs:
        matched |= (1 << a) | (1 << b)
    outside = g.full_mask & ~forced & ~matched
    set_vertices: list[int] = []
    set_masks: list[int] = []
    seen_sets: set[int] = set()
    for u in _bits(outside):
        cm = 0
        for w in _bits(g.neighbors_mask(u) & forced):
            cm |= 1 << positions[w]
        # Vertices with identical neighborhoods inside the forced set are
        # interchangeable; keep the lowest id.
        if cm and cm not in seen_sets:
            seen_sets.add(cm)
            set_vertices.append(u)
            set_masks.append(cm)
    cost, choice = _sc_tables(gsize, set_masks)
    family = [0] * (1 << gsize)
    for s in range(1, 1 << gsize):
        if cost[s] >= _INF:
            family[s] = -1
            continue
        j = choice[s]
        prev = family[s & ~set_masks[j]]
        family[s] = -1 if prev < 0 else prev | (1 << set_vertices[j])
    for sel in range(1 << len(pairs)):
        k2 = 0
        for i, (a, b) in enumerate(pairs):
            k2 |= 1 << (b if (sel >> i) & 1 == 0 else a)
        nk2 = 0
        for v in _bits(k2):
            nk2 |= g.neighbors_mask(v)
        wmax = 0
        for v in _bits(forced & ~nk2):
            wmax |= 1 << positions[v]
        for sub in _submasks(wmax):
            fam = family[sub]
            if fam >= 0:
                candidates.add(fam | k2)


def solve_fpt_exclude(
    g: Graph,
    *,
    refined: bool = True,
    vertex_limit: int | None = None,
    deadline: float | None = None,
) -> PauResult:
    """Minimum exclude-model pre-assignment, parameterized by tau.

    Excluding a vertex forces its whole neighborhood into the cover, so a
    cheapest exclude set pushing a chosen part of a target cover inside is
    a minimum set cover over that part.  Per branching leaf, the unmatched
    endpoints of the isolated edges must be excluded outright and the
    set-cover table handles the rest; every table value is a candidate,
    probed cheapest-first.  The unrefined variant runs one table per whole
    minimum cover instead.
    """
    check_vertex_limit(g.n, vertex_limit)
    stats = SolveStats(deadline)
    started = time.perf_counter()
    found = _min_cover(g.adj, g.full_mask, stats)
    assert found is not None
    tau, _ = found
    candidates: set[int] = set()
    if refined:
        for forced, pairs in _branch_leaves(g.adj, g.full_mask, tau, stats):
            _exclude_candidates_for_leaf(g, forced, pairs, candidates)
    else:
        for cover_mask in _all_min_cover_masks(g, tau, stats):
            positions = {v: i for i, v in enumerate(_bits(cover_mask))}
            set_vertices: list[int] = []
            set_masks: list[int] = []
            seen: set[int] = set()
            for u in _bits(g.full_mask & ~cover_mask):
                cm = 0
                for w in _bits(g.neighbors_mask(u) & cover_mask):
                    cm |= 1 << positions[w]
                if cm and cm not in seen:
                    seen.add(cm)
                    set_vertices.append(u)
                    set_masks.append(cm)
            cost, choice = _sc_tables(len(positions), set_masks)
            for sub in range(1 << len(positions)):
                if cost[sub] >= _INF:
                    continue
                fam = 0
                s = sub
                while s:
                    j = choice[s]
                    fam |= 1 << set_vertices[j]
                    s &= ~set_masks[j]
                candidates.add(fam)
    best, cover = _first_feasible(g, tau, candidates, Model.EXCLUDE, stats)
    return _result(g, Model.EXCLUDE, 0, best, cover, stats, started)


# ---------------------------------------------------------------------------
# Conversions between models.


def include_to_exclude(g: Graph, inc: VertexSet, ustar: VertexSet) -> VertexSet:
    """Turn a feasible include set into an exclude set of at most its size.

    ustar must be the minimum cover the include set pins down.  Each
    included vertex is traded for its lowest neighbor outside the cover;
    distinct vertices may share the replacement, so the result can shrink.
    """
    if inc.n != g.n or ustar.n != g.n:
        raise ValueError("vertex set universe does not match graph")
    if not inc <= ustar:
        raise ValueError("include set must be contained in the target cover")
    out = 0
    for v in _bits(inc.mask):
        options = g.neighbors_mask(v) & ~ustar.mask
        if not options:
            raise ValueError(
                f"vertex {v} has no neighbor outside the cover; "
                "the cover is not minimum"
            )
        out |= options & -options
    return VertexSet.from_mask(g.n, out)


def mixed_to_exclude(g: Graph, pa: PreAssignment, ustar: VertexSet) -> VertexSet:
    """Fold the include half of a mixed pre-assignment into its exclude half."""
    if pa.n != g.n:
        raise ValueError("pre-assignment universe does not match graph")
    swapped = include_to_exclude(g, pa.include, ustar)
    return pa.exclude | swapped


# ---------------------------------------------------------------------------
# The dispatcher.


def _trivial_result(g: Graph, model: Model, started: float) -> PauResult:
    stats = SolveStats()
    stats.elapsed = time.perf_counter() - started
    empty = VertexSet(g.n)
    return PauResult(model, 0, PreAssignment(model, empty, empty), empty, stats)


def _solve_connected(
    g: Graph,
    model: Model,
    algo: str,
    is_tree: bool,
    enum_vertex_limit: int,
    vertex_limit: int | None,
    deadline: float | None,
) -> PauResult:
    if algo == "enum":
        return solve_enum(g, model, vertex_limit=enum_vertex_limit, deadline=deadline)
    if algo == "tree" or (algo == "auto" and is_tree):
        stats = SolveStats(deadline)
        started = time.perf_counter()
        answer = pau_tree(g, model, stats=stats)
        report = is_feasible(g, answer.witness, vertex_limit=vertex_limit, stats=stats)
        if not report.feasible:
            raise AssertionError("tree solver produced an infeasible witness")
        stats.elapsed = time.perf_counter() - started
        return PauResult(model, answer.opt, answer.witness, report.witness, stats)
    if model is Model.INCLUDE:
        return solve_fpt_include(g, vertex_limit=vertex_limit, deadline=deadline)
    result = solve_fpt_exclude(g, vertex_limit=vertex_limit, deadline=deadline)
    if model is Model.EXCLUDE:
        return result
    pre = PreAssignment.mixed(VertexSet(g.n), result.pre.exclude)
    return PauResult(
        Model.MIXED, result.opt_size, pre, result.unique_cover, result.stats
    )


def solve(
    g: Graph,
    model: Model | str,
    algo: str = "auto",
    *,
    vertex_limit: int | None = None,
    enum_vertex_limit: int = DEFAULT_ENUM_VERTEX_LIMIT,
    deadline: float | None = None,
) -> PauResult:
    """Solve one instance with the chosen strategy.

    algo "auto" routes trees to the tree solver and everything else to the
    fixed-parameter solver for the model; "enum", "fpt", and "tree" force a
    strategy.  Disconnected graphs are solved per component and the
    answers concatenated (sizes add, witnesses merge).  Mixed-model
    instances are solved in the equivalent exclude model and reported with
    an empty include set.
    """
    model = Model(model)
    if algo not in ("auto", "enum", "fpt", "tree"):
        raise ValueError(f"unknown algo {algo!r}")
    started = time.perf_counter()
    if g.n == 0:
        return _trivial_result(g, model, started)
    parts = classify(g)
    if len(parts.components) == 1:
        is_tree = parts.kind.value == "tree"
        result = _solve_connected(
            g, model, algo, is_tree, enum_vertex_limit, vertex_limit, deadline
        )
        result.stats.elapsed = time.perf_counter() - started
        return result
    stats = SolveStats(deadline)
    inc_mask = 0
    exc_mask = 0
    cover_mask = 0
    opt = 0
    for comp in parts.components:
        sub, old_to_new = delete(g, comp.complement())
        new_to_old = {i: v for v, i in old_to_new.items()}
        sub_is_tree = classify(sub).kind.value == "tree"
        r = _solve_connected(
            sub, model, algo, sub_is_tree, enum_vertex_limit, vertex_limit, deadline
        )
        opt += r.opt_size
        for v in r.pre.include:
            inc_mask |= 1 << new_to_old[v]
        for v in r.pre.exclude:
            exc_mask |= 1 << new_to_old[v]
        for v in r.unique_cover:
            cover_mask |= 1 << new_to_old[v]
        stats.merge(r.stats)
    pre = PreAssignment(
        model,
        VertexSet.from_mask(g.n, inc_mask),
        VertexSet.from_mask(g.n, exc_mask),
    )
    stats.elapsed = time.perf_counter() - started
    return PauResult(model, opt, pre, VertexSet.from_mask(g.n, cover_mask), stats)
