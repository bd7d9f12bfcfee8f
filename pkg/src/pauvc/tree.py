"""Polynomial-ish solver for pre-assignments on trees.

A subtree either already has a unique minimum cover (cost 0) or some
vertex of an optimal pre-assignment can be committed first: committing v
in the include model keeps the instance minimum-consistent exactly when
the rest of the tree still covers with one vertex fewer, and in the
exclude model exactly when deleting the closed neighborhood costs |N(v)|
cover vertices.  Either commitment splits the tree into independent
components, so the optimum is 1 plus the component optima, minimized over
all admissible first commitments.  Components repeat across branches,
hence the memo on vertex subsets.

Cover counts are tracked capped at two: the solver only ever needs
"unique or not", and the cap keeps the per-subtree check linear.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphKind, Model, PreAssignment, VertexSet, classify
from .vertex_cover import SolveStats, _bits, _node

__all__ = ["TreeAnswer", "pau_tree", "count_rooted_i_subtrees"]


@dataclass(frozen=True)
class TreeAnswer:
    """Cover number of the tree, optimum pre-assignment size, one witness."""

    tau: int
    opt: int
    witness: PreAssignment


def _components(adj: tuple[int, ...], mask: int) -> list[int]:
    out = []
    rest = mask
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grown = 0
            for v in _bits(frontier):
                grown |= adj[v] & mask
            frontier = grown & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def _cover_info(adj: tuple[int, ...], mask: int) -> tuple[int, int, int]:
    """(tau, count capped at 2, one minimum cover) of a connected subtree."""
    root = (mask & -mask).bit_length() - 1
    parent = {root: -1}
    order = [root]
    for v in order:
        for w in _bits(adj[v] & mask):
            if w not in parent:
                parent[w] = v
                order.append(w)
    # inc: best cover of the subtree at v that contains v; exc: one that
    # does not (children then have no choice).
    inc: dict[int, tuple[int, int, int]] = {}
    exc: dict[int, tuple[int, int, int]] = {}
    for v in reversed(order):
        isz, icnt, imask = 1, 1, 1 << v
        esz, ecnt, emask = 0, 1, 0
        for w in _bits(adj[v] & mask):
            if w == parent[v]:
                continue
            ws, wc, wm = inc[w]
            xs, xc, xm = exc[w]
            if ws < xs:
                isz += ws
                icnt = min(2, icnt * wc)
                imask |= wm
            elif xs < ws:
                isz += xs
                icnt = min(2, icnt * xc)
                imask |= xm
            else:
                isz += ws
                icnt = 2
                imask |= wm
            esz += ws
            ecnt = min(2, ecnt * wc)
            emask |= wm
        inc[v] = (isz, icnt, imask)
        exc[v] = (esz, ecnt, emask)
    isz, icnt, imask = inc[root]
    esz, ecnt, emask = exc[root]
    if isz < esz:
        return isz, icnt, imask
    if esz < isz:
        return esz, ecnt, emask
    return isz, 2, imask


def pau_tree(
    t: Graph,
    model: Model | str,
    *,
    memoize: bool = True,
    stats: SolveStats | None = None,
) -> TreeAnswer:
    """Optimum pre-assignment for a connected tree under the given model.

    Raises ValueError when the graph is not a connected tree.  The witness
    is deterministic, preferring lexicographically smaller vertex lists
    among equal-cost branch choices.  Mixed-model instances are answered
    in the exclude model, which has the same optimum.
    """
    model = Model(model)
    if t.n == 0 or classify(t).kind is not GraphKind.TREE:
        raise ValueError("input graph is not a connected tree")
    if model is Model.MIXED:
        sub = pau_tree(t, Model.EXCLUDE, memoize=memoize, stats=stats)
        wrapped = PreAssignment.mixed(VertexSet(t.n), sub.witness.exclude)
        return TreeAnswer(sub.tau, sub.opt, wrapped)
    if stats is None:
        stats = SolveStats()
    adj = t.adj
    include = model is Model.INCLUDE
    vc_memo: dict[int, tuple[int, int, int]] = {}
    memo: dict[int, tuple[int, int]] = {}

    def cover_info(mask: int) -> tuple[int, int, int]:
        got = vc_memo.get(mask)
        if got is None:
            got = vc_memo[mask] = _cover_info(adj, mask)
        return got

    def best_for(mask: int) -> tuple[int, int]:
        """(optimum size, witness mask) for one connected subtree."""
        if memoize and mask in memo:
            return memo[mask]
        _node(stats)
        tau, count, _ = cover_info(mask)
        if count == 1:
            answer = (0, 0)
        elif mask.bit_count() == 2:
            answer = (1, mask & -mask)
        else:
            best: tuple[int, tuple[int, ...], int] | None = None
            for v in _bits(mask):
                if include:
                    rest = mask & ~(1 << v)
                    need = tau - 1
                else:
                    nv = adj[v] & mask
                    rest = mask & ~(1 << v) & ~nv
                    need = tau - nv.bit_count()
                if need < 0:
                    continue
                comps = _components(adj, rest)
                if sum(cover_info(c)[0] for c in comps) != need:
                    continue
                total = 1
                witness = 1 << v
                for c in comps:
                    sub_opt, sub_witness = best_for(c)
                    total += sub_opt
                    witness |= sub_witness
                entry = (total, tuple(_bits(witness)), witness)
                if best is None or entry[:2] < best[:2]:
                    best = entry
            assert best is not None, "every ambiguous subtree has a branch"
            answer = (best[0], best[2])
        if memoize:
            memo[mask] = answer
        return answer

    full = t.full_mask
    tau, _, _ = cover_info(full)
    opt, witness_mask = best_for(full)
    members = VertexSet.from_mask(t.n, witness_mask)
    if include:
        pre = PreAssignment.including(members)
    else:
        pre = PreAssignment.excluding(members)
    return TreeAnswer(tau, opt, pre)


def _ahu_code(adj: tuple[int, ...], mask: int, root: int) -> str:
    """Canonical form of the rooted tree induced on mask."""
    parent = {root: -1}
    order = [root]
    for v in order:
        for w in _bits(adj[v] & mask):
            if w not in parent:
                parent[w] = v
                order.append(w)
    code: dict[int, str] = {}
    for v in reversed(order):
        children = sorted(
            code[w] for w in _bits(adj[v] & mask) if w != parent[v]
        )
        code[v] = "(" + "".join(children) + ")"
    return code[root]


def count_rooted_i_subtrees(t: Graph, root: int) -> int:
    """Count induced-subtree shapes reachable by trimming around the root.

    Starting from the whole tree, any internal vertex other than the root
    may be deleted, keeping the component that still contains the root.
    Counted up to rooted isomorphism, this is exactly the number of
    distinct subproblem shapes the tree solver can meet below the root.
    """
    if t.n == 0 or classify(t).kind is not GraphKind.TREE:
        raise ValueError("input graph is not a connected tree")
    if not 0 <= root < t.n:
        raise ValueError(f"root {root} out of range")
    adj = t.adj
    full = t.full_mask
    seen = {full}
    stack = [full]
    codes = set()
    while stack:
        mask = stack.pop()
        codes.add(_ahu_code(adj, mask, root))
        for v in _bits(mask & ~(1 << root)):
            if (adj[v] & mask).bit_count() >= 2:
                rest = mask & ~(1 << v)
                comp = 1 << root
                frontier = comp
                while frontier:
                    grown = 0
                    for w in _bits(frontier):
                        grown |= adj[w] & rest
                    frontier = grown & ~comp
                    comp |= frontier
                if comp not in seen:
                    seen.add(comp)
                    stack.append(comp)
    return len(codes)
