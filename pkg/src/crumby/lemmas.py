"""Boundary-relaxed feasibility and the mechanical gadget lemmas.

A gadget sitting inside a larger host graph sees only part of the coloring
constraints: boundary vertices may have neighbors outside, of unknown color.
The conditions below are necessary for the restriction of any crumby coloring
of the host, whatever the outside looks like:

  C1. every Blue vertex has at most 1 Blue neighbor inside;
  C2. every Red non-boundary vertex has a Red neighbor inside
      (boundary Red vertices are exempt: outside support is possible);
  C3. no path on four vertices inside is entirely Red;
  C4. a boundary Red vertex assumed to have a Red neighbor outside must not
      start a Red path v-p-q inside (the outside neighbor would extend it to
      an all-Red path on four vertices).

Enumerating every coloring that passes C1-C4 and checking a conclusion on
all of them therefore proves the conclusion for every crumby coloring of
every host.  The verify_lemma* functions run exactly such enumerations for
the bundled gadgets, and verify_theorem1_composition chains them into a
solver-free unsatisfiability proof for G18.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import (
    BLUE,
    RED,
    Color,
    Coloring,
    SolveResult,
    Status,
    backtracking_solve,
    exhaustive_solve,
    verify_crumby_by_components,
)
from .errors import BoundarySpecError, CapExceeded
from .gadgets import LabeledGraph, build_F, build_G18, build_R
from .graphs import Graph, enumerate_p4

ENUMERATION_CAP = 16


@dataclass(frozen=True)
class BoundarySpec:
    """Boundary vertices, fixed-color assumptions, and outside-red flags.

    `assumptions` is a sequence of (vertex, color) pairs; fixing one vertex
    to both colors is rejected at validation time.  `outside_red` marks
    boundary vertices assumed to have a Red neighbor outside (enables C4).
    """

    boundary: frozenset[int]
    assumptions: tuple[tuple[int, Color], ...] = ()
    outside_red: frozenset[int] = frozenset()


def _validate_spec(g: Graph, spec: BoundarySpec) -> dict[int, Color]:
    """Check `spec` against the graph; returns the fixed-color map."""
    for v in spec.boundary:
        if not 0 <= v < g.n:
            raise BoundarySpecError(f"boundary vertex {v} is not in [0, {g.n})")
    fixed: dict[int, Color] = {}
    for v, color in spec.assumptions:
        if not 0 <= v < g.n:
            raise BoundarySpecError(f"assumption vertex {v} is not in [0, {g.n})")
        if v in fixed and fixed[v] is not color:
            raise BoundarySpecError(f"vertex {v} is fixed to both colors")
        fixed[v] = color
    stray = spec.outside_red - spec.boundary
    if stray:
        raise BoundarySpecError(
            f"outside-red flags on non-boundary vertices {sorted(stray)}"
        )
    return fixed


def _red_path_from(g: Graph, red: frozenset[int], v: int) -> tuple[int, int, int] | None:
    """A Red path v-p-q on three distinct vertices, or None."""
    for p in g.adj[v]:
        if p not in red:
            continue
        for q in g.adj[p]:
            if q != v and q in red:
                return (v, p, q)
    return None


def _feasible(
    g: Graph,
    spec: BoundarySpec,
    p4s: list[tuple[int, int, int, int]],
    c: Coloring,
) -> bool:
    red = c.red_set()
    for v in range(g.n):
        if v in red:
            if v not in spec.boundary and not any(u in red for u in g.adj[v]):
                return False  # C2
        else:
            if sum(1 for u in g.adj[v] if u not in red) >= 2:
                return False  # C1
    for path in p4s:
        if all(p in red for p in path):
            return False  # C3
    for v in spec.outside_red:
        if v in red and _red_path_from(g, red, v) is not None:
            return False  # C4
    return True


def relaxed_feasible(g: Graph, spec: BoundarySpec, c: Coloring) -> bool:
    """True iff the coloring satisfies C1-C4 under `spec`.

    The coloring must agree with `spec.assumptions`.
    """
    fixed = _validate_spec(g, spec)
    if len(c) != g.n:
        raise ValueError(f"coloring has {len(c)} entries for {g.n} vertices")
    for v, color in fixed.items():
        if c.colors[v] is not color:
            raise BoundarySpecError(
                f"coloring assigns vertex {v} {c.colors[v].value},"
                f" spec fixes it to {color.value}"
            )
    return _feasible(g, spec, enumerate_p4(g), c)


@dataclass(frozen=True)
class FeasibleSet:
    """All colorings passing C1-C4, in lexicographic order (B before R)."""

    spec: BoundarySpec
    colorings: tuple[Coloring, ...]

    def __len__(self) -> int:
        return len(self.colorings)

    def __iter__(self):
        return iter(self.colorings)


def enumerate_feasible(g: Graph, spec: BoundarySpec) -> FeasibleSet:
    """Filter all colorings of the non-fixed vertices through C1-C4."""
    if g.n > ENUMERATION_CAP:
        raise CapExceeded(
            f"feasibility enumeration is capped at {ENUMERATION_CAP} vertices,"
            f" got {g.n}"
        )
    fixed = _validate_spec(g, spec)
    p4s = enumerate_p4(g)
    free = [v for v in range(g.n) if v not in fixed]
    k = len(free)
    base: list[Color] = [BLUE] * g.n
    for v, color in fixed.items():
        base[v] = color
    out = []
    for mask in range(1 << k):
        colors = list(base)
        for i, v in enumerate(free):
            if mask >> (k - 1 - i) & 1:
                colors[v] = RED
        c = Coloring(tuple(colors))
        if _feasible(g, spec, p4s, c):
            out.append(c)
    return FeasibleSet(spec, tuple(out))


# -- lemma reports --------------------------------------------------------------


@dataclass(frozen=True)
class LemmaReport:
    """Outcome of one enumeration scenario; colorings kept for cross-checks."""

    lemma: str
    scenario: str
    feasible_count: int
    passed: bool
    counterexample: Coloring | None = None
    note: str = ""
    colorings: tuple[Coloring, ...] = field(default=(), repr=False)

    def machine_lines(self) -> list[str]:
        lines = [
            f"lemma={self.lemma}",
            f"scenario={self.scenario}",
            f"feasible={self.feasible_count}",
            f"pass={'true' if self.passed else 'false'}",
            "counterexample="
            + (self.counterexample.to_text() if self.counterexample else "-"),
        ]
        if self.note:
            lines.append(f"note={self.note}")
        return lines

    def human(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        text = (
            f"lemma {self.lemma} [{self.scenario}]: {verdict}"
            f" ({self.feasible_count} feasible colorings)"
        )
        if self.counterexample is not None:
            text += f"; counterexample: {self.counterexample.to_text()}"
        if self.note:
            text += f"; {self.note}"
        return text


def _roles(lg: LabeledGraph) -> dict[str, int]:
    if lg.role_labels is None:
        raise ValueError("gadget has no role labels")
    return {role: v for v, role in lg.role_labels.items()}


def verify_lemma1_i(
    lg: LabeledGraph | None = None,
    r_role: str = "a",
    extra_boundary: tuple[str, ...] = (),
) -> LemmaReport:
    """Root Blue forces the distinguished neighbor Red with no Red support.

    Enumerates F with the root fixed Blue and boundary {root, r}; passes iff
    every feasible coloring makes r Red with no Red neighbor inside.
    """
    lg = lg or build_F()
    roles = _roles(lg)
    x, r = roles["x"], roles[r_role]
    boundary = frozenset({x, r} | {roles[role] for role in extra_boundary})
    fs = enumerate_feasible(lg.graph, BoundarySpec(boundary, ((x, BLUE),)))
    counterexample = None
    for c in fs:
        red = c.red_set()
        if r not in red or any(u in red for u in lg.graph.adj[r]):
            counterexample = c
            break
    scenario = f"x-blue r={r_role}"
    if extra_boundary:
        scenario += " boundary+" + ",".join(extra_boundary)
    return LemmaReport(
        lemma="1(i)",
        scenario=scenario,
        feasible_count=len(fs),
        passed=counterexample is None,
        counterexample=counterexample,
        colorings=fs.colorings,
    )


def verify_lemma1_ii(lg: LabeledGraph | None = None) -> list[LemmaReport]:
    """Root Red forces a or b Red, with or without an outside Red neighbor.

    Four scenarios: boundary {x,a} and {x,b}, each with the outside-red flag
    on x off and on.  The boundary choices are deliberately kept separate.
    """
    lg = lg or build_F()
    roles = _roles(lg)
    x, a, b = roles["x"], roles["a"], roles["b"]
    reports = []
    for r_role in ("a", "b"):
        for flagged in (False, True):
            spec = BoundarySpec(
                frozenset({x, roles[r_role]}),
                ((x, RED),),
                frozenset({x}) if flagged else frozenset(),
            )
            fs = enumerate_feasible(lg.graph, spec)
            counterexample = next(
                (c for c in fs if a not in c.red_set() and b not in c.red_set()),
                None,
            )
            reports.append(
                LemmaReport(
                    lemma="1(ii)",
                    scenario=(
                        f"x-red boundary=x,{r_role}"
                        f" outside-red={'yes' if flagged else 'no'}"
                    ),
                    feasible_count=len(fs),
                    passed=counterexample is None,
                    counterexample=counterexample,
                    colorings=fs.colorings,
                )
            )
    return reports


def richness_witness(
    g: Graph, c: Coloring, v: int
) -> tuple[int, int, int] | None:
    """A Red path v-p-q inside g, or None; v itself must be Red."""
    red = c.red_set()
    if v not in red:
        return None
    return _red_path_from(g, red, v)


def verify_lemma2(lg: LabeledGraph | None = None) -> list[LemmaReport]:
    """A Red s is rich inside R: some Red path s-p-q exists.

    Scenario 1: boundary {s,t}, s fixed Red, no flags; every feasible
    coloring must contain a Red path from s.  Scenario 2: same with the
    outside-red flag on s; richness contradicts C4, so the feasible set
    must be empty.
    """
    lg = lg or build_R()
    roles = _roles(lg)
    s, t = roles["s"], roles["t"]
    fs_plain = enumerate_feasible(
        lg.graph, BoundarySpec(frozenset({s, t}), ((s, RED),))
    )
    counterexample = next(
        (c for c in fs_plain if richness_witness(lg.graph, c, s) is None), None
    )
    reports = [
        LemmaReport(
            lemma="2",
            scenario="s-red rich",
            feasible_count=len(fs_plain),
            passed=counterexample is None,
            counterexample=counterexample,
            colorings=fs_plain.colorings,
        )
    ]
    fs_flagged = enumerate_feasible(
        lg.graph,
        BoundarySpec(frozenset({s, t}), ((s, RED),), frozenset({s})),
    )
    reports.append(
        LemmaReport(
            lemma="2",
            scenario="s-red outside-red expects-empty",
            feasible_count=len(fs_flagged),
            passed=len(fs_flagged) == 0,
            counterexample=fs_flagged.colorings[0] if len(fs_flagged) else None,
            colorings=fs_flagged.colorings,
        )
    )
    return reports


def verify_theorem1_composition(use_exhaustive: bool = True) -> LemmaReport:
    """Re-derive unsatisfiability of G18 from gadget enumerations alone.

    In G18 only the two roots see the other copy, so each copy's coloring
    restricts to a feasible coloring with boundary {x}.  With x Blue the
    feasible set must be empty (so both roots are Red, and each root then
    has a Red outside neighbor: the other root).  Every pair of flagged
    x-Red feasible colorings, joined along the root edge, must fail the
    crumby conditions.  The verdict is compared against a direct solver run.
    """
    lg = build_F()
    roles = _roles(lg)
    x = roles["x"]
    s_blue = enumerate_feasible(
        lg.graph, BoundarySpec(frozenset({x}), ((x, BLUE),))
    )
    s_red = enumerate_feasible(
        lg.graph, BoundarySpec(frozenset({x}), ((x, RED),), frozenset({x}))
    )
    g18 = build_G18().graph
    joined_ok = None
    pairs = 0
    for c1 in s_red:
        for c2 in s_red:
            pairs += 1
            joined = Coloring(c1.colors + c2.colors)
            if verify_crumby_by_components(g18, joined):
                joined_ok = joined
                break
        if joined_ok is not None:
            break
    result: SolveResult = (
        exhaustive_solve(g18) if use_exhaustive else backtracking_solve(g18)
    )
    passed = (
        len(s_blue) == 0
        and joined_ok is None
        and result.status is Status.UNSAT
    )
    note = (
        f"x-blue-feasible={len(s_blue)} x-red-feasible={len(s_red)}"
        f" joined-pairs={pairs} solver={result.solver}:{result.status.value}"
    )
    return LemmaReport(
        lemma="T1-composition",
        scenario="two flagged x-red copies joined at the roots",
        feasible_count=len(s_red),
        passed=passed,
        counterexample=joined_ok,
        note=note,
    )


def all_lemma_reports(use_exhaustive: bool = True) -> list[LemmaReport]:
    """Every stock scenario, in a fixed order, for the CLI and the test gate."""
    reports = [verify_lemma1_i(r_role="a"), verify_lemma1_i(r_role="b")]
    reports.extend(verify_lemma1_ii())
    reports.extend(verify_lemma2())
    reports.append(verify_theorem1_composition(use_exhaustive=use_exhaustive))
    return reports
