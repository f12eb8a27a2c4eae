"""Vertex labelings by subsets of a ground set, and the class verifiers.

A labeling assigns a non-empty subset of the ground set to every vertex; an
edge inherits the sumset of its endpoint labels. The verifiers never raise on
a bad labeling: they return a report whose violations carry machine-readable
kinds (injectivity, empty-label, not-a-subset, unlabeled-vertex,
unknown-vertex, missing-edge-image, extra-edge-image, bad-edge-count, ...).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Graph
from .intsets import GroundSet, IntSet, ZERO_MASK, sumset_mask


class LabelingParseError(ValueError):
    """Malformed labeling file; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class IncompleteLabelingError(ValueError):
    """An operation needed a label for a vertex that has none."""


@dataclass(frozen=True)
class Labeling:
    """Assignment of one IntSet per vertex over a ground set.

    The container itself is permissive; whether the assignment is injective,
    non-empty and within the ground set is the verifiers' business.
    """

    ground: GroundSet
    assignment: dict

    def label(self, v: str) -> IntSet:
        return self.assignment[v]

    def emit(self) -> str:
        lines = [f"X {self.ground}"]
        lines.extend(f"{v} {s}" for v, s in self.assignment.items())
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"ground": str(self.ground),
                "assignment": {v: str(s) for v, s in self.assignment.items()}}


def parse_labeling(text: str) -> Labeling:
    """Parse the labeling file format: an ``X {...}`` header line, then one
    ``vertex {a,b,c}`` line per vertex. ``#`` comments and blanks allowed."""
    ground: Optional[GroundSet] = None
    assignment: dict[str, IntSet] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 1)
        if len(parts) != 2:
            raise LabelingParseError(lineno, "expected 'name {set literal}'")
        name, literal = parts
        if ground is None:
            if name != "X":
                raise LabelingParseError(lineno, "first line must declare the ground set: X {...}")
            try:
                ground = GroundSet.parse(literal)
            except ValueError as exc:
                raise LabelingParseError(lineno, str(exc)) from None
            continue
        if name in assignment:
            raise LabelingParseError(lineno, f"vertex {name!r} labeled twice")
        try:
            assignment[name] = IntSet.parse(literal)
        except ValueError as exc:
            raise LabelingParseError(lineno, str(exc)) from None
    if ground is None:
        raise LabelingParseError(0, "missing ground set header 'X {...}'")
    return Labeling(ground, assignment)


@dataclass(frozen=True)
class Violation:
    kind: str
    where: str
    detail: str

    def to_json(self) -> dict:
        return {"kind": self.kind, "where": self.where, "detail": self.detail}


@dataclass(frozen=True)
class VerificationReport:
    verdict: bool
    violations: list

    @classmethod
    def from_violations(cls, violations: list) -> "VerificationReport":
        return cls(verdict=not violations, violations=violations)

    def to_json(self) -> dict:
        return {"verdict": self.verdict,
                "violations": [v.to_json() for v in self.violations]}


def induced_edge_labels(g: Graph, f: Labeling) -> dict:
    """Map every edge ``(u, v)`` to ``f(u) + f(v)``, in canonical edge order."""
    out = {}
    for u, w in g.edge_names():
        try:
            a, b = f.assignment[u], f.assignment[w]
        except KeyError as exc:
            raise IncompleteLabelingError(f"vertex {exc.args[0]!r} is unlabeled") from None
        if not a.mask or not b.mask:
            raise ValueError(f"edge ({u}, {w}) touches an empty label")
        out[(u, w)] = IntSet.from_mask(sumset_mask(a.mask, b.mask))
    return out


def _iasl_violations(g: Graph, f: Labeling) -> list:
    violations = []
    xmask = f.ground.mask
    for v in g.vertices:
        if v not in f.assignment:
            violations.append(Violation("unlabeled-vertex", v, "vertex has no label"))
    for v in f.assignment:
        if not g.has_vertex(v):
            violations.append(Violation("unknown-vertex", v, "label for a vertex not in the graph"))
    for v in g.vertices:
        s = f.assignment.get(v)
        if s is None:
            continue
        if not s.mask:
            violations.append(Violation("empty-label", v, "labels must be non-empty"))
        elif s.mask & ~xmask:
            violations.append(Violation("not-a-subset", v,
                                        f"{s} is not a subset of X = {f.ground}"))
    by_mask: dict[int, list[str]] = {}
    for v in g.vertices:
        s = f.assignment.get(v)
        if s is not None:
            by_mask.setdefault(s.mask, []).append(v)
    for mask, vs in by_mask.items():
        if len(vs) > 1:
            violations.append(Violation("injectivity", ",".join(vs),
                                        f"vertices share the label {IntSet.from_mask(mask)}"))
    return violations


def _labels_usable(g: Graph, f: Labeling) -> bool:
    """True when every vertex has a non-empty label (edge sums computable)."""
    return all(v in f.assignment and f.assignment[v].mask for v in g.vertices)


def verify_iasl(g: Graph, f: Labeling) -> VerificationReport:
    """Injective, all labels non-empty subsets of X, all vertices labeled."""
    return VerificationReport.from_violations(_iasl_violations(g, f))


def verify_iasi(g: Graph, f: Labeling) -> VerificationReport:
    """An IASL whose induced edge function is injective into P(X).

    The edge labels must be pairwise distinct and stay inside the power set
    of the ground set; a sumset escaping X is reported per edge.
    """
    violations = _iasl_violations(g, f)
    if _labels_usable(g, f):
        xmask = f.ground.mask
        seen: dict[int, tuple[str, str]] = {}
        for (u, w), s in induced_edge_labels(g, f).items():
            where = f"{u} {w}"
            if s.mask & ~xmask:
                violations.append(Violation("not-a-subset", where,
                                            f"edge label {s} is not a subset of X = {f.ground}"))
            if s.mask in seen:
                pu, pw = seen[s.mask]
                violations.append(Violation("edge-image-not-injective", where,
                                            f"edge label {s} already used by {pu} {pw}"))
            else:
                seen[s.mask] = (u, w)
    return VerificationReport.from_violations(violations)


def verify_uniform(g: Graph, f: Labeling, k: int) -> VerificationReport:
    """Every edge label has exactly k elements."""
    if k < 1:
        raise ValueError("uniformity degree must be a positive integer")
    violations = _iasl_violations(g, f)
    if _labels_usable(g, f):
        for (u, w), s in induced_edge_labels(g, f).items():
            if len(s) != k:
                violations.append(Violation("bad-edge-size", f"{u} {w}",
                                            f"edge label {s} has {len(s)} elements, expected {k}"))
    return VerificationReport.from_violations(violations)


@dataclass(frozen=True)
class SetIndexingReport:
    """Cardinalities of every vertex and edge label; mono-indexed means 1."""

    vertex_numbers: dict
    edge_numbers: dict
    mono_indexed_vertices: tuple
    mono_indexed_edges: tuple


def set_indexing_numbers(g: Graph, f: Labeling) -> SetIndexingReport:
    if not verify_iasl(g, f).verdict:
        raise ValueError("set-indexing numbers require a valid IASL")
    vnum = {v: len(f.assignment[v]) for v in g.vertices}
    enum_ = {edge: len(s) for edge, s in induced_edge_labels(g, f).items()}
    return SetIndexingReport(
        vertex_numbers=vnum,
        edge_numbers=enum_,
        mono_indexed_vertices=tuple(v for v, c in vnum.items() if c == 1),
        mono_indexed_edges=tuple(e for e, c in enum_.items() if c == 1),
    )


def _iasgl_extra_violations(g: Graph, f: Labeling) -> list:
    violations = []
    x = f.ground
    required_count = (1 << x.size) - 2
    if g.m != required_count:
        violations.append(Violation(
            "bad-edge-count", "graph",
            f"{g.m} edges, but a set-graceful labeling over |X| = {x.size} needs {required_count}"))
    if _labels_usable(g, f):
        required = {m for m in x.subset_masks() if m != ZERO_MASK}
        achieved: set[int] = set()
        for (u, w), s in induced_edge_labels(g, f).items():
            if s.mask not in required:
                violations.append(Violation(
                    "extra-edge-image", f"{u} {w}",
                    f"edge label {s} lies outside P(X) - {{∅, {{0}}}}"))
            else:
                achieved.add(s.mask)
        for m in x.subset_masks():
            if m != ZERO_MASK and m not in achieved:
                violations.append(Violation(
                    "missing-edge-image", str(IntSet.from_mask(m)),
                    "required subset never appears as an edge label"))
    return violations


def verify_iasgl(g: Graph, f: Labeling) -> VerificationReport:
    """Set-graceful: the edge-label image is exactly P(X) - {∅, {0}}.

    The edge count 2^|X| - 2 is enforced as well; together with the image
    equality it makes the induced edge function injective, which is what the
    even-edge and star results silently assume.
    """
    violations = _iasl_violations(g, f)
    violations.extend(_iasgl_extra_violations(g, f))
    return VerificationReport.from_violations(violations)
