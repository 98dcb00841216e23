"""Treewidth-2 certification and exhaustive minor containment.

Two independent routes to "no K4 minor":

* recognize_tw2   -- reduce a multigraph workspace by deleting isolated and
                     degree-1 vertices, merging parallel edges and suppressing
                     degree-2 vertices; the graph has treewidth <= 2 iff the
                     workspace empties.  A graph that gets stuck is simple
                     with minimum degree >= 3 and therefore has a K4 minor.
* elimination orders -- a perfect elimination style certificate: each
                     eliminated vertex sees at most 2 remaining neighbors
                     (clique fill-in, here at most one fill edge).

has_minor is a brute-force branch-set search, independent of both, for
patterns on at most 6 vertices.  It is exact: False means the search space
was exhausted, and running out of budget raises BudgetExhausted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExhausted, CapExceeded
from .graphs import Graph

MINOR_PATTERN_CAP = 6


# -- elimination orders --------------------------------------------------------


@dataclass(frozen=True)
class EliminationOrder:
    order: tuple[int, ...]


def elimination_steps(
    g: Graph, order: EliminationOrder
) -> list[tuple[int, tuple[int, ...]]]:
    """Per-step (vertex, remaining neighbors) trace of an elimination run.

    Eliminating a vertex adds the clique on its remaining neighbors (a single
    fill edge when two remain) and deletes it.
    """
    if sorted(order.order) != list(range(g.n)):
        raise ValueError("elimination order is not a permutation of the vertices")
    nbr = [set(row) for row in g.adj]
    steps = []
    for v in order.order:
        rem = tuple(sorted(nbr[v]))
        steps.append((v, rem))
        for u in rem:
            nbr[u].discard(v)
        for a, b in combinations(rem, 2):
            nbr[a].add(b)
            nbr[b].add(a)
        nbr[v] = set()
    return steps


def elimination_width(g: Graph, order: EliminationOrder) -> int:
    """Largest remaining-neighbor count along the order (0 for empty graphs)."""
    steps = elimination_steps(g, order)
    return max((len(rem) for _, rem in steps), default=0)


def find_elimination_order(g: Graph) -> EliminationOrder | None:
    """Greedy width-2 elimination: repeatedly take the lowest-index vertex of
    current degree <= 2.  For treewidth <= 2 graphs this always succeeds."""
    nbr = [set(row) for row in g.adj]
    alive = set(range(g.n))
    order = []
    while alive:
        v = next((v for v in sorted(alive) if len(nbr[v]) <= 2), None)
        if v is None:
            return None
        order.append(v)
        rem = sorted(nbr[v])
        for u in rem:
            nbr[u].discard(v)
        for a, b in combinations(rem, 2):
            nbr[a].add(b)
            nbr[b].add(a)
        nbr[v] = set()
        alive.discard(v)
    return EliminationOrder(tuple(order))


# -- reduction recognizer --------------------------------------------------------


@dataclass(frozen=True)
class ReductionStep:
    rule: str  # delete-isolated | delete-leaf | merge-parallel | suppress
    args: tuple[int, ...]


def _multigraph_of(g: Graph) -> dict[int, dict[int, int]]:
    return {v: {u: 1 for u in g.adj[v]} for v in range(g.n)}


def _mg_degree(mg: dict[int, dict[int, int]], v: int) -> int:
    return sum(mg[v].values())


def recognize_tw2(g: Graph) -> tuple[bool, list[ReductionStep]]:
    """Reduce to the empty multigraph; rule priority is isolated/degree-1
    deletion, then parallel-edge merge, then degree-2 suppression, always at
    the lowest vertex index.  Returns (emptied?, trace)."""
    mg = _multigraph_of(g)
    trace: list[ReductionStep] = []
    while mg:
        v = next((v for v in sorted(mg) if _mg_degree(mg, v) == 0), None)
        if v is not None:
            del mg[v]
            trace.append(ReductionStep("delete-isolated", (v,)))
            continue
        v = next((v for v in sorted(mg) if _mg_degree(mg, v) == 1), None)
        if v is not None:
            u = next(iter(mg[v]))
            del mg[u][v]
            del mg[v]
            trace.append(ReductionStep("delete-leaf", (v, u)))
            continue
        pair = next(
            (
                (v, u)
                for v in sorted(mg)
                for u in sorted(mg[v])
                if v < u and mg[v][u] >= 2
            ),
            None,
        )
        if pair is not None:
            v, u = pair
            mg[v][u] = 1
            mg[u][v] = 1
            trace.append(ReductionStep("merge-parallel", (v, u)))
            continue
        v = next((v for v in sorted(mg) if _mg_degree(mg, v) == 2), None)
        if v is not None:
            u, w = sorted(mg[v])  # distinct: a parallel pair would have merged
            del mg[u][v]
            del mg[w][v]
            del mg[v]
            mg[u][w] = mg[u].get(w, 0) + 1
            mg[w][u] = mg[w].get(u, 0) + 1
            trace.append(ReductionStep("suppress", (v, u, w)))
            continue
        break  # stuck: simple, minimum degree >= 3
    return not mg, trace


def replay_reduction_trace(
    g: Graph, trace: list[ReductionStep]
) -> tuple[bool, str | None]:
    """Re-validate a reduction trace step by step without re-searching.

    Any legal sequence that empties the workspace certifies treewidth <= 2;
    the steps need not follow recognize_tw2's scan order.
    """
    arity = {"delete-isolated": 1, "delete-leaf": 2, "merge-parallel": 2, "suppress": 3}
    mg = _multigraph_of(g)
    for k, step in enumerate(trace):
        where = f"step {k} ({step.rule} {step.args})"
        if step.rule not in arity:
            return False, f"{where}: unknown rule"
        if len(step.args) != arity[step.rule]:
            return False, f"{where}: expected {arity[step.rule]} arguments"
        if step.rule == "delete-isolated":
            (v,) = step.args
            if v not in mg or _mg_degree(mg, v) != 0:
                return False, f"{where}: vertex not isolated"
            del mg[v]
        elif step.rule == "delete-leaf":
            v, u = step.args
            if v not in mg or _mg_degree(mg, v) != 1 or u not in mg[v]:
                return False, f"{where}: vertex not a leaf on that edge"
            del mg[u][v]
            del mg[v]
        elif step.rule == "merge-parallel":
            v, u = step.args
            if v not in mg or mg[v].get(u, 0) < 2:
                return False, f"{where}: no parallel pair"
            mg[v][u] = 1
            mg[u][v] = 1
        else:
            v, u, w = step.args
            if v not in mg or sorted(mg[v]) != sorted((u, w)) or u == w:
                return False, f"{where}: vertex does not have exactly these 2 neighbors"
            if _mg_degree(mg, v) != 2:
                return False, f"{where}: vertex degree is not 2"
            del mg[u][v]
            del mg[w][v]
            del mg[v]
            mg[u][w] = mg[u].get(w, 0) + 1
            mg[w][u] = mg[w].get(u, 0) + 1
    if mg:
        return False, f"workspace not empty after replay: {sorted(mg)} remain"
    return True, None


# -- minor containment -----------------------------------------------------------


@dataclass(frozen=True)
class MinorWitness:
    """branch_sets[i] is the connected host set modeling pattern vertex i."""

    branch_sets: tuple[frozenset[int], ...]


def verify_minor_witness(
    g: Graph, pattern: Graph, witness: MinorWitness
) -> tuple[bool, str | None]:
    sets = witness.branch_sets
    if len(sets) != pattern.n:
        return False, f"witness has {len(sets)} branch sets for {pattern.n} vertices"
    seen: set[int] = set()
    for i, s in enumerate(sets):
        if not s:
            return False, f"branch set {i} is empty"
        for v in s:
            if not 0 <= v < g.n:
                return False, f"branch set {i} contains out-of-range vertex {v}"
            if v in seen:
                return False, f"vertex {v} appears in two branch sets"
        seen.update(s)
        # connectivity inside the set
        stack = [min(s)]
        reached = {min(s)}
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if u in s and u not in reached:
                    reached.add(u)
                    stack.append(u)
        if reached != s:
            return False, f"branch set {i} is not connected"
    for i, j in pattern.edges():
        if not any(u in sets[j] for v in sets[i] for u in g.adj[v]):
            return False, f"no host edge between branch sets {i} and {j}"
    return True, None


def _interchange_classes(pattern: Graph) -> list[int]:
    """class id per pattern vertex; u, v share a class iff swapping them is
    an automorphism (N(u)-v == N(v)-u).  Used to prune equivalent seeds."""
    cls = list(range(pattern.n))
    for u in range(pattern.n):
        for v in range(u + 1, pattern.n):
            nu = set(pattern.adj[u]) - {v}
            nv = set(pattern.adj[v]) - {u}
            if nu == nv:
                cls[v] = min(cls[v], cls[u])
    return cls


def has_minor(
    g: Graph, pattern: Graph, budget: int | None = None
) -> tuple[bool, MinorWitness | None]:
    """Exhaustive search for a minor model of `pattern` in `g`.

    Branch sets are grown one pattern vertex at a time: seed a vertex, then
    realize each pattern edge back to an earlier set by routing a simple path
    through unassigned host vertices and splitting it between the two sets.
    Interchangeable pattern vertices get increasing seeds.  Exact for
    pattern.n <= 6; host sizes around 20 are the practical target, with the
    node budget guarding anything bigger.
    """
    if pattern.n > MINOR_PATTERN_CAP:
        raise CapExceeded(
            f"minor patterns are capped at {MINOR_PATTERN_CAP} vertices,"
            f" got {pattern.n}"
        )
    k = pattern.n
    if k == 0:
        return True, MinorWitness(())
    if g.n < k or g.m < pattern.m:
        return False, None

    # order pattern vertices by descending degree, then index
    porder = sorted(range(k), key=lambda v: (-pattern.degree(v), v))
    back_edges: list[list[int]] = []
    for i, pv in enumerate(porder):
        back_edges.append(
            [j for j in range(i) if pattern.has_edge(pv, porder[j])]
        )
    cls = _interchange_classes(pattern)
    adjm = [0] * g.n
    for v in range(g.n):
        for u in g.adj[v]:
            adjm[v] |= 1 << u
    full = (1 << g.n) - 1
    nodes = 0
    found: list[MinorWitness] = []

    def check_budget() -> None:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExhausted(
                f"minor-search budget of {budget} nodes exhausted", nodes=nodes
            )

    def bits(mask: int):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def place(i: int, sets: tuple[int, ...], nbs: tuple[int, ...], used: int) -> bool:
        if i == k:
            branch = [frozenset()] * k
            for pos, pv in enumerate(porder):
                branch[pv] = frozenset(bits(sets[pos]))
            found.append(MinorWitness(tuple(branch)))
            return True
        lo = 0
        for j in range(i):
            if cls[porder[j]] == cls[porder[i]]:
                lo = max(lo, min(bits(sets[j])) + 1)
        free = full & ~used
        if bin(free).count("1") < k - i:
            return False
        for s in range(lo, g.n):
            sb = 1 << s
            if used & sb:
                continue
            check_budget()
            if realize(i, 0, sets + (sb,), nbs + (adjm[s],), used | sb):
                return True
        return False

    def realize(
        i: int, ei: int, sets: tuple[int, ...], nbs: tuple[int, ...], used: int
    ) -> bool:
        if ei == len(back_edges[i]):
            return place(i + 1, sets, nbs, used)
        j = back_edges[i][ei]
        if nbs[j] & sets[i]:
            return realize(i, ei + 1, sets, nbs, used)
        return route(i, ei, j, (), sets, nbs, used)

    def route(
        i: int,
        ei: int,
        j: int,
        chain: tuple[int, ...],
        sets: tuple[int, ...],
        nbs: tuple[int, ...],
        used: int,
    ) -> bool:
        # a completed chain joins set i to set j; try every split point
        if chain and adjm[chain[-1]] & sets[j]:
            for cut in range(len(chain) + 1):
                prefix, suffix = chain[:cut], chain[cut:]
                new_sets = list(sets)
                new_nbs = list(nbs)
                for v in prefix:
                    new_sets[i] |= 1 << v
                    new_nbs[i] |= adjm[v]
                for v in suffix:
                    new_sets[j] |= 1 << v
                    new_nbs[j] |= adjm[v]
                if cut == 0 and not (adjm[chain[0]] & sets[i]):
                    continue
                if cut > 0 and suffix and not (
                    adjm[prefix[-1]] >> chain[cut] & 1
                ):
                    continue
                if realize(i, ei + 1, tuple(new_sets), tuple(new_nbs), used):
                    return True
        # leave room for the unseeded pattern vertices
        free_after = g.n - bin(used).count("1")
        if free_after <= k - i - 1:
            return False
        frontier = (nbs[i] if not chain else adjm[chain[-1]]) & ~used
        for v in bits(frontier):
            check_budget()
            if route(i, ei, j, chain + (v,), sets, nbs, used | 1 << v):
                return True
        return False

    sat = place(0, (), (), 0)
    if sat:
        witness = found[0]
        ok, why = verify_minor_witness(g, pattern, witness)
        if not ok:
            raise AssertionError(f"minor search produced a bad witness: {why}")
        return True, witness
    return False, None
