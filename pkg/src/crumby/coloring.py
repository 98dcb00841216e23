"""Crumby colorings: verification, CNF encoding, and three complete solvers.

A red/blue coloring of a graph is *crumby* when

  (a) every Blue vertex has at most one Blue neighbor,
  (b) every Red vertex has at least one Red neighbor, and
  (c) no path on four vertices is entirely Red.

Equivalently: Red components are stars K_{1,m} (m >= 1) or triangles, and
Blue components have at most two vertices.

Three complete decision procedures live here and must agree everywhere:

* exhaustive_solve   -- vectorized sweep over all 2^n red-sets (n <= 24),
* backtracking_solve -- DFS over vertex colors with forced-move propagation,
* dpll_solve         -- DPLL on the clause encoding of (a)-(c).

Unsat always means the search space was exhausted.  Running out of a node
budget raises BudgetExhausted instead of returning an answer.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

import numpy as np

from .errors import BudgetExhausted, CapExceeded
from .graphs import Graph, connected_components, enumerate_p4, induced_subgraph

EXHAUSTIVE_CAP = 24
_CHUNK_BITS = 20


class Color(Enum):
    RED = "R"
    BLUE = "B"


RED = Color.RED
BLUE = Color.BLUE


@dataclass(frozen=True)
class Coloring:
    """A total red/blue assignment, vertex i at position i."""

    colors: tuple[Color, ...]

    def __len__(self) -> int:
        return len(self.colors)

    @classmethod
    def from_text(cls, text: str) -> "Coloring":
        colors = []
        for token in text.split():
            if token == "R":
                colors.append(RED)
            elif token == "B":
                colors.append(BLUE)
            else:
                raise ValueError(f"coloring token {token!r} is not 'R' or 'B'")
        return cls(tuple(colors))

    @classmethod
    def from_red_set(cls, n: int, reds: set[int] | frozenset[int]) -> "Coloring":
        return cls(tuple(RED if v in reds else BLUE for v in range(n)))

    def to_text(self) -> str:
        return " ".join(c.value for c in self.colors)

    def red_set(self) -> frozenset[int]:
        return frozenset(v for v, c in enumerate(self.colors) if c is RED)


class ViolationKind(Enum):
    BLUE_DEGREE = "blue-degree-exceeded"
    RED_ISOLATED = "red-isolated"
    RED_P4 = "red-p4"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    vertex: int | None = None
    path: tuple[int, int, int, int] | None = None

    def describe(self) -> str:
        if self.kind is ViolationKind.BLUE_DEGREE:
            return f"blue vertex {self.vertex} has two or more blue neighbors"
        if self.kind is ViolationKind.RED_ISOLATED:
            return f"red vertex {self.vertex} has no red neighbor"
        return f"all-red path {'-'.join(map(str, self.path or ()))}"


def verify_crumby(g: Graph, c: Coloring) -> tuple[bool, list[Violation]]:
    """Check (a)-(c) directly; returns all violations, deterministic order."""
    if len(c) != g.n:
        raise ValueError(f"coloring has {len(c)} entries for {g.n} vertices")
    red = c.red_set()
    violations = []
    for v in range(g.n):
        if v in red:
            if not any(u in red for u in g.adj[v]):
                violations.append(Violation(ViolationKind.RED_ISOLATED, vertex=v))
        else:
            blue_nbrs = sum(1 for u in g.adj[v] if u not in red)
            if blue_nbrs >= 2:
                violations.append(Violation(ViolationKind.BLUE_DEGREE, vertex=v))
    for path in enumerate_p4(g):
        if all(p in red for p in path):
            violations.append(Violation(ViolationKind.RED_P4, path=path))
    return not violations, violations


def verify_crumby_by_components(g: Graph, c: Coloring) -> bool:
    """Independent check via the component characterization.

    Red components must be stars K_{1,m} with m >= 1 or triangles; Blue
    components must have at most two vertices.
    """
    if len(c) != g.n:
        raise ValueError(f"coloring has {len(c)} entries for {g.n} vertices")
    red = c.red_set()
    blue = [v for v in range(g.n) if v not in red]
    blue_sub = induced_subgraph(g, blue)
    for comp in connected_components(blue_sub):
        if len(comp) > 2:
            return False
    red_list = sorted(red)
    red_sub = induced_subgraph(g, red_list)
    for comp in connected_components(red_sub):
        k = len(comp)
        degs = sorted(red_sub.degree(v) for v in comp)
        if k == 1:
            return False
        if k == 3 and degs == [2, 2, 2]:
            continue  # triangle
        if degs[:-1] == [1] * (k - 1) and degs[-1] == k - 1:
            continue  # star (k == 2 included)
        return False
    return True


# -- vectorized exhaustive core ----------------------------------------------
#
# A coloring is a red-set bitmask; vertex v sits at bit (n-1-v), so counting
# masks upward enumerates color vectors in lexicographic order with B < R.

_popcount16_table: np.ndarray | None = None


def _popcount16() -> np.ndarray:
    global _popcount16_table
    if _popcount16_table is None:
        t = np.arange(1 << 16, dtype=np.int64)
        pc = np.zeros(1 << 16, dtype=np.int64)
        for k in range(16):
            pc += (t >> k) & 1
        _popcount16_table = pc
    return _popcount16_table


def _feasible_chunks(g: Graph):
    """Yield (offset, ok) with ok[i] true iff red-mask offset+i is crumby."""
    n = g.n
    bit = [1 << (n - 1 - v) for v in range(n)]
    nbmask = [sum(bit[u] for u in g.adj[v]) for v in range(n)]
    p4masks = sorted({sum(bit[p] for p in path) for path in enumerate_p4(g)})
    pc = _popcount16()
    total = 1 << n
    chunk = 1 << min(n, _CHUNK_BITS)
    for start in range(0, total, chunk):
        red = np.arange(start, min(start + chunk, total), dtype=np.int64)
        ok = np.ones(red.shape, dtype=bool)
        for v in range(n):
            is_red = (red >> (n - 1 - v) & 1).astype(bool)
            ok &= ~is_red | ((red & nbmask[v]) != 0)
            blue_nb = ~red & nbmask[v]
            cnt = pc[blue_nb & 0xFFFF] + pc[(blue_nb >> 16) & 0xFFFF]
            ok &= is_red | (cnt <= 1)
        for m in p4masks:
            ok &= (red & m) != m
        yield start, ok


def _mask_to_coloring(n: int, mask: int) -> Coloring:
    return Coloring.from_red_set(n, {v for v in range(n) if mask >> (n - 1 - v) & 1})


def _check_exhaustive_cap(g: Graph) -> None:
    if g.n > EXHAUSTIVE_CAP:
        raise CapExceeded(
            f"exhaustive enumeration is capped at n <= {EXHAUSTIVE_CAP}, got {g.n}; "
            "use backtracking or dpll instead"
        )


def count_crumby(g: Graph) -> int:
    """Exact number of crumby colorings of g (n <= 24)."""
    _check_exhaustive_cap(g)
    return sum(int(np.count_nonzero(ok)) for _, ok in _feasible_chunks(g))


class Status(Enum):
    SAT = "sat"
    UNSAT = "unsat"


@dataclass(frozen=True)
class SolveResult:
    status: Status
    coloring: Coloring | None
    solver: str
    nodes: int
    propagations: int
    elapsed: float


def exhaustive_solve(g: Graph) -> SolveResult:
    """Sweep all 2^n colorings; first Sat hit is lexicographically least.

    Unsat is only reported after the entire space was enumerated; `nodes`
    counts colorings examined.
    """
    _check_exhaustive_cap(g)
    t0 = time.perf_counter()
    for start, ok in _feasible_chunks(g):
        hits = np.nonzero(ok)[0]
        if hits.size:
            mask = start + int(hits[0])
            return SolveResult(
                Status.SAT,
                _mask_to_coloring(g.n, mask),
                "exhaustive",
                nodes=mask + 1,
                propagations=0,
                elapsed=time.perf_counter() - t0,
            )
    return SolveResult(
        Status.UNSAT, None, "exhaustive",
        nodes=1 << g.n, propagations=0, elapsed=time.perf_counter() - t0,
    )


# -- CNF encoding ------------------------------------------------------------


@dataclass(frozen=True)
class CnfFormula:
    """CNF over variables 1..num_vars; x_v true means vertex v-1 is Red."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]


def _clause_key(clause: tuple[int, ...]):
    return tuple((abs(l), l < 0) for l in clause)


def encode_cnf(g: Graph) -> CnfFormula:
    """Clause families for (a), (b), (c), deduplicated, deterministic order.

    1. (x_v | x_u | x_w) for each v and unordered pair {u,w} of neighbors:
       a Blue vertex tolerates at most one Blue neighbor.
    2. (~x_v | x_u1 | ... ) over v's neighbors: Red needs Red support; for an
       isolated v this is the unit (~x_v).
    3. (~x_p1 | ~x_p2 | ~x_p3 | ~x_p4) per canonical 4-path: no all-Red path.

    Clause literals are sorted by variable; families appear in order 1, 2, 3,
    each family sorted lexicographically with positive before negative.
    """
    fam1 = set()
    for v in range(g.n):
        for u, w in combinations(g.adj[v], 2):
            fam1.add(tuple(sorted((v + 1, u + 1, w + 1))))
    fam2 = []
    for v in range(g.n):
        lits = [-(v + 1)] + [u + 1 for u in g.adj[v]]
        fam2.append(tuple(sorted(lits, key=abs)))
    fam3 = set()
    for path in enumerate_p4(g):
        fam3.add(tuple(sorted((-(p + 1) for p in path), key=abs)))
    clauses = (
        sorted(fam1, key=_clause_key)
        + sorted(fam2, key=_clause_key)
        + sorted(fam3, key=_clause_key)
    )
    return CnfFormula(g.n, tuple(clauses))


def emit_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    for clause in f.clauses:
        lines.append(" ".join(str(l) for l in clause) + " 0")
    return "\n".join(lines) + "\n"


# -- backtracking solver -----------------------------------------------------

_UNSET, _RED, _BLUE = 0, 1, 2


class _GraphSearch:
    """DFS over vertex colors; deterministic: lowest unassigned vertex,
    Red tried before Blue.  Propagation applies only forced moves, so a
    no-propagation run reaches identical statuses."""

    def __init__(self, g: Graph, budget: int | None, propagate: bool) -> None:
        self.g = g
        self.budget = budget
        self.propagate = propagate
        n = g.n
        self.assign = [_UNSET] * n
        self.red_nb = [0] * n
        self.blue_nb = [0] * n
        self.un_nb = [g.degree(v) for v in range(n)]
        self.p4s = enumerate_p4(g)
        self.p4_of: list[list[int]] = [[] for _ in range(n)]
        for idx, path in enumerate(self.p4s):
            for v in path:
                self.p4_of[v].append(idx)
        self.p4_red = [0] * len(self.p4s)
        self.p4_blue = [0] * len(self.p4s)
        self.trail: list[int] = []
        self.unassigned = n
        self.nodes = 0
        self.propagations = 0

    def _apply(self, v: int, color: int) -> tuple[bool, list[tuple[int, int]]]:
        """Set v, update counters fully, then report conflict and forced moves."""
        self.assign[v] = color
        self.trail.append(v)
        self.unassigned -= 1
        adj = self.g.adj[v]
        if color == _RED:
            for u in adj:
                self.red_nb[u] += 1
                self.un_nb[u] -= 1
            for i in self.p4_of[v]:
                self.p4_red[i] += 1
        else:
            for u in adj:
                self.blue_nb[u] += 1
                self.un_nb[u] -= 1
            for i in self.p4_of[v]:
                self.p4_blue[i] += 1
        forces: list[tuple[int, int]] = []
        assign = self.assign
        if color == _RED:
            if self.red_nb[v] == 0 and self.un_nb[v] == 0:
                return False, forces
            for i in self.p4_of[v]:
                if self.p4_blue[i] == 0:
                    if self.p4_red[i] == 4:
                        return False, forces
                    if self.p4_red[i] == 3:
                        for w in self.p4s[i]:
                            if assign[w] == _UNSET:
                                forces.append((w, _BLUE))
            if self.red_nb[v] == 0 and self.un_nb[v] == 1:
                for u in adj:
                    if assign[u] == _UNSET:
                        forces.append((u, _RED))
        else:
            if self.blue_nb[v] >= 2:
                return False, forces
            for u in adj:
                if assign[u] == _BLUE:
                    if self.blue_nb[u] >= 2:
                        return False, forces
                    if self.blue_nb[u] == 1:
                        for w in self.g.adj[u]:
                            if assign[w] == _UNSET:
                                forces.append((w, _RED))
                elif assign[u] == _RED and self.red_nb[u] == 0:
                    if self.un_nb[u] == 0:
                        return False, forces
                    if self.un_nb[u] == 1:
                        for w in self.g.adj[u]:
                            if assign[w] == _UNSET:
                                forces.append((w, _RED))
            if self.blue_nb[v] == 1:
                for u in adj:
                    if assign[u] == _UNSET:
                        forces.append((u, _RED))
        return True, forces

    def set_and_propagate(self, v: int, color: int) -> bool:
        queue = [(v, color)]
        first = True
        while queue:
            w, c = queue.pop(0)
            if self.assign[w] != _UNSET:
                if self.assign[w] != c:
                    return False
                continue
            ok, forces = self._apply(w, c)
            if not first:
                self.propagations += 1
            first = False
            if not ok:
                return False
            if self.propagate:
                queue.extend(forces)
        return True

    def undo_to(self, mark: int) -> None:
        while len(self.trail) > mark:
            v = self.trail.pop()
            color = self.assign[v]
            self.assign[v] = _UNSET
            self.unassigned += 1
            if color == _RED:
                for u in self.g.adj[v]:
                    self.red_nb[u] -= 1
                    self.un_nb[u] += 1
                for i in self.p4_of[v]:
                    self.p4_red[i] -= 1
            else:
                for u in self.g.adj[v]:
                    self.blue_nb[u] -= 1
                    self.un_nb[u] += 1
                for i in self.p4_of[v]:
                    self.p4_blue[i] -= 1

    def _next_vertex(self) -> int:
        for v in range(self.g.n):
            if self.assign[v] == _UNSET:
                return v
        raise AssertionError("no unassigned vertex")

    def dfs(self) -> bool:
        if self.unassigned == 0:
            return True
        v = self._next_vertex()
        for color in (_RED, _BLUE):
            self.nodes += 1
            if self.budget is not None and self.nodes > self.budget:
                raise BudgetExhausted(
                    f"backtracking budget of {self.budget} nodes exhausted",
                    nodes=self.nodes,
                )
            mark = len(self.trail)
            if self.set_and_propagate(v, color) and self.dfs():
                return True
            self.undo_to(mark)
        return False

    def solve_from(self, preset: list[tuple[int, int]]) -> tuple[bool, bool]:
        """Returns (rooted, sat): rooted is False when the preset conflicts."""
        for v, color in preset:
            self.nodes += 1
            if not self.set_and_propagate(v, color):
                return False, False
        return True, self.dfs()

    def coloring(self) -> Coloring:
        assert self.unassigned == 0
        return Coloring(tuple(RED if a == _RED else BLUE for a in self.assign))


def _finish(search: _GraphSearch, sat: bool, solver: str, t0: float) -> SolveResult:
    if sat:
        coloring = search.coloring()
        ok, _ = verify_crumby(search.g, coloring)
        if not ok:
            raise AssertionError("solver produced a non-crumby coloring")
        return SolveResult(
            Status.SAT, coloring, solver,
            search.nodes, search.propagations, time.perf_counter() - t0,
        )
    return SolveResult(
        Status.UNSAT, None, solver,
        search.nodes, search.propagations, time.perf_counter() - t0,
    )


def _solve_branch(
    g: Graph, color: int, budget: int | None, propagate: bool
) -> SolveResult:
    t0 = time.perf_counter()
    search = _GraphSearch(g, budget, propagate)
    rooted, sat = search.solve_from([(0, color)])
    return _finish(search, rooted and sat, "backtracking", t0)


def backtracking_solve(
    g: Graph,
    budget: int | None = None,
    propagate: bool = True,
    parallel: bool = False,
) -> SolveResult:
    """Complete DFS on vertex colors.

    propagate=False disables forced moves (conflicts are still detected) and
    must reach the same status.  parallel=True farms the two top-level
    branches (vertex 0 Red / Blue) out to two processes; status and coloring
    are identical to the sequential run, the budget applies per branch.
    """
    if parallel and g.n > 0:
        with ProcessPoolExecutor(max_workers=2) as pool:
            fut_red = pool.submit(_solve_branch, g, _RED, budget, propagate)
            fut_blue = pool.submit(_solve_branch, g, _BLUE, budget, propagate)
            red, blue = fut_red.result(), fut_blue.result()
        if red.status is Status.SAT:
            return red
        return SolveResult(
            blue.status, blue.coloring, "backtracking",
            red.nodes + blue.nodes,
            red.propagations + blue.propagations,
            max(red.elapsed, blue.elapsed),
        )
    t0 = time.perf_counter()
    search = _GraphSearch(g, budget, propagate)
    return _finish(search, search.dfs(), "backtracking", t0)


# -- DPLL on the clause encoding ----------------------------------------------


class _Dpll:
    def __init__(self, f: CnfFormula, budget: int | None) -> None:
        self.f = f
        self.budget = budget
        nv = f.num_vars
        self.val = [0] * (nv + 1)  # 0 unknown, 1 true, -1 false
        self.pos_occ: list[list[int]] = [[] for _ in range(nv + 1)]
        self.neg_occ: list[list[int]] = [[] for _ in range(nv + 1)]
        for ci, clause in enumerate(f.clauses):
            for lit in clause:
                (self.pos_occ if lit > 0 else self.neg_occ)[abs(lit)].append(ci)
        self.n_sat = [0] * len(f.clauses)
        self.n_free = [len(c) for c in f.clauses]
        self.trail: list[int] = []
        self.nodes = 0
        self.propagations = 0

    def _assign(self, var: int, value: bool) -> bool:
        """Counter update; returns False on an emptied clause.  Any partial
        update is still fully recorded, so undo stays symmetric."""
        self.val[var] = 1 if value else -1
        self.trail.append(var)
        sat_occ = self.pos_occ[var] if value else self.neg_occ[var]
        unsat_occ = self.neg_occ[var] if value else self.pos_occ[var]
        for ci in sat_occ:
            self.n_sat[ci] += 1
            self.n_free[ci] -= 1
        conflict = False
        for ci in unsat_occ:
            self.n_free[ci] -= 1
            if self.n_sat[ci] == 0 and self.n_free[ci] == 0:
                conflict = True
        return not conflict

    def _unit_literal(self, ci: int) -> int:
        for lit in self.f.clauses[ci]:
            if self.val[abs(lit)] == 0:
                return lit
        raise AssertionError("unit clause without a free literal")

    def _propagate_units(self, seed_vars: list[int]) -> bool:
        queue = list(seed_vars)
        while queue:
            var = queue.pop(0)
            for ci in self.pos_occ[var] + self.neg_occ[var]:
                if self.n_sat[ci] == 0 and self.n_free[ci] == 1:
                    lit = self._unit_literal(ci)
                    self.propagations += 1
                    if not self._assign(abs(lit), lit > 0):
                        return False
                    queue.append(abs(lit))
        return True

    def _initial_units(self) -> bool:
        for ci in range(len(self.f.clauses)):
            if self.n_sat[ci] == 0 and self.n_free[ci] == 1:
                lit = self._unit_literal(ci)
                self.propagations += 1
                if not self._assign(abs(lit), lit > 0):
                    return False
                if not self._propagate_units([abs(lit)]):
                    return False
        return True

    def _pure_literals(self) -> bool:
        """Assign single-polarity and unconstrained variables; sound for both
        Sat and Unsat, applied once per decision level."""
        while True:
            seen_pos = [False] * (self.f.num_vars + 1)
            seen_neg = [False] * (self.f.num_vars + 1)
            for ci, clause in enumerate(self.f.clauses):
                if self.n_sat[ci]:
                    continue
                for lit in clause:
                    if self.val[abs(lit)] == 0:
                        (seen_pos if lit > 0 else seen_neg)[abs(lit)] = True
            fixed_any = False
            for var in range(1, self.f.num_vars + 1):
                if self.val[var] != 0:
                    continue
                if seen_pos[var] and seen_neg[var]:
                    continue
                fixed_any = True
                self.propagations += 1
                # unconstrained variables default to false (Blue)
                if not self._assign(var, seen_pos[var]):
                    return False
                if not self._propagate_units([var]):
                    return False
            if not fixed_any:
                return True

    def _undo_to(self, mark: int) -> None:
        while len(self.trail) > mark:
            var = self.trail.pop()
            value = self.val[var] == 1
            self.val[var] = 0
            sat_occ = self.pos_occ[var] if value else self.neg_occ[var]
            unsat_occ = self.neg_occ[var] if value else self.pos_occ[var]
            for ci in sat_occ:
                self.n_sat[ci] -= 1
                self.n_free[ci] += 1
            for ci in unsat_occ:
                self.n_free[ci] += 1

    def dfs(self) -> bool:
        mark = len(self.trail)
        if not self._pure_literals():
            self._undo_to(mark)
            return False
        var = next((v for v in range(1, self.f.num_vars + 1) if self.val[v] == 0), None)
        if var is None:
            return True
        for value in (True, False):  # Red before Blue
            self.nodes += 1
            if self.budget is not None and self.nodes > self.budget:
                raise BudgetExhausted(
                    f"dpll budget of {self.budget} nodes exhausted", nodes=self.nodes
                )
            inner = len(self.trail)
            if self._assign(var, value) and self._propagate_units([var]) and self.dfs():
                return True
            self._undo_to(inner)
        self._undo_to(mark)
        return False


def dpll_solve(g: Graph, budget: int | None = None) -> SolveResult:
    """DPLL with unit propagation and pure-literal elimination on encode_cnf(g).

    Deterministic: lowest-index variable, True (Red) first.  Status always
    matches backtracking_solve.
    """
    t0 = time.perf_counter()
    f = encode_cnf(g)
    d = _Dpll(f, budget)
    sat = d._initial_units() and d.dfs()
    if sat:
        coloring = Coloring(
            tuple(RED if d.val[v + 1] == 1 else BLUE for v in range(g.n))
        )
        ok, _ = verify_crumby(g, coloring)
        if not ok:
            raise AssertionError("dpll produced a non-crumby coloring")
        return SolveResult(
            Status.SAT, coloring, "dpll", d.nodes, d.propagations,
            time.perf_counter() - t0,
        )
    return SolveResult(
        Status.UNSAT, None, "dpll", d.nodes, d.propagations,
        time.perf_counter() - t0,
    )


def emit_solve_certificate(result: SolveResult) -> str:
    """Small deterministic text record of a solver outcome."""
    lines = [
        f"status: {result.status.value}",
        f"solver: {result.solver}",
        f"nodes: {result.nodes}",
        f"propagations: {result.propagations}",
    ]
    if result.coloring is not None:
        lines.append(f"coloring: {result.coloring.to_text()}")
    return "\n".join(lines) + "\n"
