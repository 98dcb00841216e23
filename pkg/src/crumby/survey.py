"""Survey graph6 streams for crumby colorability.

The harness filters a stream (connectivity, max degree 3, treewidth <= 2,
optionally 2-connectivity), decides every surviving graph with the
backtracking solver, and re-confirms every Unsat with DPLL and, when the
graph is small enough, the exhaustive oracle.  Any disagreement between the
decision procedures is a fatal CrossCheckError, never a report entry.

generate_small provides a self-contained census of all connected graphs on
at most 7 vertices up to isomorphism, for tests and desk-scale runs; larger
surveys are expected to pipe in external generator output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .coloring import (
    EXHAUSTIVE_CAP,
    Status,
    backtracking_solve,
    dpll_solve,
    exhaustive_solve,
)
from .errors import CapExceeded, CrossCheckError, Graph6Error
from .graphs import (
    Graph,
    edge_bit_index,
    emit_graph6,
    graph_from_bitmask,
    is_biconnected,
    is_connected,
    parse_graph6,
)
from .minorfree import recognize_tw2

GENERATE_CAP = 7


# -- built-in census -------------------------------------------------------------


def _transposition_mask_map(n: int, i: int) -> np.ndarray:
    """Edge-bitmask image of swapping vertices i and i+1, for all masks.

    Built bytewise: each 8-bit slice of the mask has a 256-entry table of
    permuted-bit contributions.
    """
    perm = list(range(n))
    perm[i], perm[i + 1] = perm[i + 1], perm[i]
    nedges = n * (n - 1) // 2
    bit_perm = [0] * nedges
    for b in range(n):
        for a in range(b):
            pa, pb = perm[a], perm[b]
            bit_perm[edge_bit_index(a, b)] = edge_bit_index(min(pa, pb), max(pa, pb))
    total = 1 << nedges
    masks = np.arange(total, dtype=np.int64)
    out = np.zeros(total, dtype=np.int32)
    for k in range((nedges + 7) // 8):
        lut = np.zeros(256, dtype=np.int32)
        for byte in range(256):
            val = 0
            for bit in range(8):
                src = 8 * k + bit
                if src < nedges and byte >> bit & 1:
                    val |= 1 << bit_perm[src]
            lut[byte] = val
        out |= lut[(masks >> (8 * k)) & 0xFF]
    return out


def generate_small(n: int) -> list[str]:
    """All connected graphs on n vertices up to isomorphism, as graph6 lines.

    Enumerates every edge subset of K_n and keeps the orbit-minimal bitmask
    of each isomorphism class: a label array over all masks is relaxed to a
    fixpoint under the adjacent-transposition generators (involutions, so
    minima flow across the whole orbit).  Deterministic ascending-mask order.
    """
    if n > GENERATE_CAP:
        raise CapExceeded(
            f"built-in generation is capped at {GENERATE_CAP} vertices, got {n};"
            " pipe in an external graph6 stream instead"
        )
    if n < 1:
        return []
    nedges = n * (n - 1) // 2
    total = 1 << nedges
    labels = np.arange(total, dtype=np.int32)
    gmaps = [_transposition_mask_map(n, i) for i in range(n - 1)]
    changed = True
    while changed:
        changed = False
        for gm in gmaps:
            relaxed = np.minimum(labels, labels[gm])
            if not np.array_equal(relaxed, labels):
                labels = relaxed
                changed = True
    reps = np.nonzero(labels == np.arange(total, dtype=np.int32))[0]
    lines = []
    for mask in reps.tolist():
        g = graph_from_bitmask(n, int(mask))
        if is_connected(g):
            lines.append(emit_graph6(g))
    return lines


# -- survey ----------------------------------------------------------------------


@dataclass(frozen=True)
class SurveyFilters:
    connected: bool = True
    subcubic: bool = True
    tw2: bool = True
    biconnected: bool = False

    def describe(self) -> str:
        names = [
            name
            for name in ("connected", "subcubic", "tw2", "biconnected")
            if getattr(self, name)
        ]
        return ",".join(names) if names else "none"

    def accept(self, g: Graph) -> bool:
        if self.connected and not is_connected(g):
            return False
        if self.subcubic and g.max_degree() > 3:
            return False
        if self.tw2 and not recognize_tw2(g)[0]:
            return False
        if self.biconnected and not is_biconnected(g):
            return False
        return True


@dataclass(frozen=True)
class SurveyReport:
    filters: SurveyFilters
    per_n: tuple[tuple[int, int, int, int], ...]  # (n, tested, sat, unsat)
    unsat_graph6: tuple[str, ...]
    skipped: tuple[tuple[int, str], ...]  # (line number, reason)
    filtered_out: int

    @property
    def tested(self) -> int:
        return sum(row[1] for row in self.per_n)

    @property
    def sat(self) -> int:
        return sum(row[2] for row in self.per_n)

    @property
    def unsat(self) -> int:
        return sum(row[3] for row in self.per_n)

    def text_lines(self) -> list[str]:
        lines = [f"filters: {self.filters.describe()}"]
        for n, tested, sat, unsat in self.per_n:
            lines.append(f"n={n} tested={tested} sat={sat} unsat={unsat}")
        lines.append(
            f"total tested={self.tested} sat={self.sat} unsat={self.unsat}"
            f" filtered-out={self.filtered_out} skipped={len(self.skipped)}"
        )
        for line in self.unsat_graph6:
            lines.append(f"unsat-instance: {line}")
        for lineno, reason in self.skipped:
            lines.append(f"skipped line {lineno}: {reason}")
        return lines

    def machine_lines(self) -> list[str]:
        lines = [
            f"filters={self.filters.describe()}",
            f"tested={self.tested}",
            f"sat={self.sat}",
            f"unsat={self.unsat}",
            f"filtered_out={self.filtered_out}",
            f"skipped={len(self.skipped)}",
        ]
        for n, tested, sat, unsat in self.per_n:
            lines.append(f"n={n} tested={tested} sat={sat} unsat={unsat}")
        lines.extend(f"unsat_instance={line}" for line in self.unsat_graph6)
        lines.extend(
            f"skipped_line={lineno} reason={reason}" for lineno, reason in self.skipped
        )
        return lines


def survey_stream(
    lines: Iterable[str],
    filters: SurveyFilters | None = None,
    budget: int | None = None,
) -> SurveyReport:
    """Decide every filtered graph of a graph6 stream; see module docstring.

    Malformed lines are recorded and skipped.  Unsat answers that any
    cross-check contradicts raise CrossCheckError.
    """
    filters = filters if filters is not None else SurveyFilters()
    per_n: dict[int, list[int]] = {}
    unsat_lines: list[str] = []
    skipped: list[tuple[int, str]] = []
    filtered_out = 0
    for lineno, raw in enumerate(lines, 1):
        text = raw.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
        except Graph6Error as exc:
            skipped.append((lineno, str(exc)))
            continue
        if not filters.accept(g):
            filtered_out += 1
            continue
        result = backtracking_solve(g, budget=budget)
        counts = per_n.setdefault(g.n, [0, 0, 0])
        counts[0] += 1
        if result.status is Status.SAT:
            counts[1] += 1
            continue
        counts[2] += 1
        canonical = emit_graph6(g)
        second = dpll_solve(g, budget=budget)
        if second.status is not Status.UNSAT:
            raise CrossCheckError(
                f"line {lineno} ({canonical}): backtracking says unsat,"
                f" dpll says {second.status.value}"
            )
        if g.n <= EXHAUSTIVE_CAP:
            third = exhaustive_solve(g)
            if third.status is not Status.UNSAT:
                raise CrossCheckError(
                    f"line {lineno} ({canonical}): backtracking says unsat,"
                    f" the exhaustive oracle says {third.status.value}"
                )
        unsat_lines.append(canonical)
    rows = tuple(
        (n, counts[0], counts[1], counts[2]) for n, counts in sorted(per_n.items())
    )
    return SurveyReport(
        filters=filters,
        per_n=rows,
        unsat_graph6=tuple(unsat_lines),
        skipped=tuple(skipped),
        filtered_out=filtered_out,
    )
