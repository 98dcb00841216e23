"""Plain-text certificate documents and their re-validation.

Each certificate is a small "key: value" document ('#' comments and blank
lines allowed) whose first entry is its type.  Validation replays the
certificate against a graph without re-running any search:

  elimination-order   width of the given order is at most 2
  reduction-trace     the given rule applications empty the workspace
  minor-witness       branch sets model the given pattern
  ear-decomposition   cycle plus open ears cover the graph exactly
"""

from __future__ import annotations

from .errors import CertificateError, GraphError
from .graphs import EarDecomposition, Graph, graph_from_edge_list, verify_ear_decomposition
from .minorfree import (
    EliminationOrder,
    MinorWitness,
    ReductionStep,
    elimination_width,
    replay_reduction_trace,
    verify_minor_witness,
)

Certificate = (
    EliminationOrder
    | list[ReductionStep]
    | tuple[Graph, MinorWitness]
    | EarDecomposition
)


def emit_elimination_order(order: EliminationOrder) -> str:
    lines = [
        "type: elimination-order",
        f"n: {len(order.order)}",
        "order: " + " ".join(map(str, order.order)),
    ]
    return "\n".join(lines) + "\n"


def emit_reduction_trace(n: int, trace: list[ReductionStep]) -> str:
    lines = ["type: reduction-trace", f"n: {n}"]
    for step in trace:
        lines.append(f"step: {step.rule} " + " ".join(map(str, step.args)))
    return "\n".join(lines) + "\n"


def emit_minor_witness(pattern: Graph, witness: MinorWitness) -> str:
    lines = [
        "type: minor-witness",
        f"pattern-n: {pattern.n}",
        "pattern-edges: " + " ".join(f"{u}-{v}" for u, v in pattern.edges()),
    ]
    for i, branch in enumerate(witness.branch_sets):
        lines.append(f"branch-{i}: " + " ".join(map(str, sorted(branch))))
    return "\n".join(lines) + "\n"


def emit_ear_decomposition(d: EarDecomposition) -> str:
    lines = [
        "type: ear-decomposition",
        "cycle: " + " ".join(map(str, d.initial_cycle)),
    ]
    for ear in d.ears:
        lines.append("ear: " + " ".join(map(str, ear)))
    return "\n".join(lines) + "\n"


def _entries(text: str) -> list[tuple[str, str]]:
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise CertificateError(f"line {lineno}: expected 'key: value'")
        key, _, value = line.partition(":")
        entries.append((key.strip(), value.strip()))
    if not entries:
        raise CertificateError("empty certificate")
    return entries


def _ints(value: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in value.split()]
    except ValueError as exc:
        raise CertificateError(f"{what}: {exc}") from None


def _int(value: str, what: str) -> int:
    try:
        return int(value)
    except ValueError as exc:
        raise CertificateError(f"{what}: {exc}") from None


def parse_certificate(text: str) -> Certificate:
    """Parse any certificate document; the type line picks the shape."""
    entries = _entries(text)
    key, kind = entries[0]
    if key != "type":
        raise CertificateError("first entry must be 'type'")
    body = entries[1:]
    if kind == "elimination-order":
        fields = dict(body)
        if set(fields) != {"n", "order"}:
            raise CertificateError("elimination-order needs exactly n and order")
        order = _ints(fields["order"], "order")
        if len(order) != _int(fields["n"], "n"):
            raise CertificateError("order length disagrees with n")
        return EliminationOrder(tuple(order))
    if kind == "reduction-trace":
        trace = []
        n = None
        for key, value in body:
            if key == "n":
                n = _int(value, "n")
            elif key == "step":
                rule, _, args = value.partition(" ")
                trace.append(ReductionStep(rule, tuple(_ints(args, "step"))))
            else:
                raise CertificateError(f"unexpected key {key!r} in reduction-trace")
        if n is None:
            raise CertificateError("reduction-trace needs n")
        return trace
    if kind == "minor-witness":
        fields = dict(body)
        if "pattern-n" not in fields or "pattern-edges" not in fields:
            raise CertificateError("minor-witness needs pattern-n and pattern-edges")
        pn = _int(fields["pattern-n"], "pattern-n")
        edges = []
        for tok in fields["pattern-edges"].split():
            u, sep, v = tok.partition("-")
            if not sep:
                raise CertificateError(f"pattern edge {tok!r} must look like u-v")
            edges.append((_int(u, "pattern-edges"), _int(v, "pattern-edges")))
        try:
            pattern = graph_from_edge_list(pn, edges)
        except GraphError as exc:
            raise CertificateError(f"pattern: {exc}") from None
        branches = []
        for i in range(pn):
            key = f"branch-{i}"
            if key not in fields:
                raise CertificateError(f"minor-witness is missing {key}")
            branches.append(frozenset(_ints(fields[key], key)))
        return pattern, MinorWitness(tuple(branches))
    if kind == "ear-decomposition":
        cycle = None
        ears = []
        for key, value in body:
            if key == "cycle":
                cycle = tuple(_ints(value, "cycle"))
            elif key == "ear":
                ears.append(tuple(_ints(value, "ear")))
            else:
                raise CertificateError(f"unexpected key {key!r} in ear-decomposition")
        if cycle is None:
            raise CertificateError("ear-decomposition needs a cycle")
        return EarDecomposition(cycle, tuple(ears))
    raise CertificateError(f"unknown certificate type {kind!r}")


def validate_certificate(g: Graph, cert: Certificate) -> tuple[bool, str]:
    """Replay a parsed certificate against g; returns (ok, detail)."""
    if isinstance(cert, EliminationOrder):
        try:
            width = elimination_width(g, cert)
        except ValueError as exc:
            return False, str(exc)
        return width <= 2, f"width={width}"
    if isinstance(cert, EarDecomposition):
        ok, reason = verify_ear_decomposition(g, cert)
        return ok, reason or "open ear decomposition covers the graph"
    if isinstance(cert, list):
        ok, reason = replay_reduction_trace(g, cert)
        return ok, reason or f"workspace emptied in {len(cert)} steps"
    pattern, witness = cert
    ok, reason = verify_minor_witness(g, pattern, witness)
    return ok, reason or "branch sets model the pattern"
