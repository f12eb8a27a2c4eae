"""Topologies on a ground set: axioms, enumeration, realisation, verifiers.

A family of subsets of X is a topology when it contains ∅ and X and is closed
under pairwise union and intersection; on a finite carrier that is the whole
story. Any topology containing {0} can be realised as a star whose center
carries {0}, which is what ``realize_topology`` builds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .graphs import Graph
from .intsets import (EnumerationInfeasible, GroundSet, IntSet, ZERO_MASK,
                      subset_sort_key)
from .labelings import (Labeling, VerificationReport, Violation,
                        _iasgl_extra_violations, _iasl_violations,
                        _labels_usable)

TOPOLOGY_GROUND_CAP = 4


class TopologyParseError(ValueError):
    """Malformed topology file; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class NotRealizableError(ValueError):
    """The star construction needs {0} among the opens."""


class DegenerateTopologyError(ValueError):
    """Fewer than three opens leave no edge to label."""


@dataclass(frozen=True)
class Topology:
    """A topology on the ground set, opens kept in canonical order (∅ first)."""

    ground: GroundSet
    opens: tuple

    @classmethod
    def from_family(cls, family: Iterable[IntSet],
                    ground: Optional[GroundSet] = None) -> "Topology":
        """Build and validate; raises ValueError when the axioms fail."""
        members = {s.mask for s in family}
        if ground is None:
            union = 0
            for m in members:
                union |= m
            ground = GroundSet(IntSet.from_mask(union))
        ordered = tuple(IntSet.from_mask(m)
                        for m in sorted(members, key=subset_sort_key))
        check = is_topology(ordered, ground)
        if not check.ok:
            detail = check.reason or "not a topology"
            if check.witness is not None:
                a, b, op, res = check.witness
                detail += f": {op} of {a} and {b} is {res}, which is missing"
            raise ValueError(f"family is not a topology on {ground}: {detail}")
        return cls(ground, ordered)

    @property
    def open_masks(self) -> tuple[int, ...]:
        return tuple(s.mask for s in self.opens)

    def has_zero_singleton(self) -> bool:
        return ZERO_MASK in self.open_masks

    def is_discrete(self) -> bool:
        return len(self.opens) == (1 << self.ground.size)

    def emit(self) -> str:
        return "\n".join(str(s) for s in self.opens) + "\n"

    def to_json(self) -> dict:
        return {"opens": [str(s) for s in self.opens], "is_topology": True}


def parse_topology(text: str) -> Topology:
    """One subset literal per line; ``∅`` or ``{}`` for the empty set."""
    members = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            members.append(IntSet.parse(line))
        except ValueError as exc:
            raise TopologyParseError(lineno, str(exc)) from None
    if not members:
        raise TopologyParseError(0, "empty topology file")
    return Topology.from_family(members)


@dataclass(frozen=True)
class TopologyCheck:
    """Outcome of the axiom check, with a witness when it fails."""

    ok: bool
    reason: Optional[str] = None
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


def is_topology(family: Iterable[IntSet], x: GroundSet) -> TopologyCheck:
    """Check ∅, X membership and pairwise ∪/∩ closure.

    Finiteness makes pairwise closure equivalent to closure under arbitrary
    unions, so nothing more is needed.
    """
    masks = []
    for s in family:
        if s.mask & ~x.mask:
            raise ValueError(f"{s} is not a subset of the ground set {x}")
        masks.append(s.mask)
    present = set(masks)
    if 0 not in present:
        return TopologyCheck(False, "missing the empty set")
    if x.mask not in present:
        return TopologyCheck(False, f"missing the ground set {x}")
    ordered = sorted(present, key=subset_sort_key)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            u = a | b
            if u not in present:
                return TopologyCheck(False, "not closed under union",
                                     (IntSet.from_mask(a), IntSet.from_mask(b),
                                      "union", IntSet.from_mask(u)))
            v = a & b
            if v not in present:
                return TopologyCheck(False, "not closed under intersection",
                                     (IntSet.from_mask(a), IntSet.from_mask(b),
                                      "intersection", IntSet.from_mask(v)))
    return TopologyCheck(True)


@lru_cache(maxsize=None)
def _topology_families(xmask: int) -> tuple[tuple[int, ...], ...]:
    """All topologies on the set with mask ``xmask``, as sorted mask tuples."""
    proper = []
    sub = (xmask - 1) & xmask
    while sub:
        proper.append(sub)
        sub = (sub - 1) & xmask
    proper.sort(key=subset_sort_key)
    k = len(proper)
    out = []
    for choice in range(1 << k):
        members = {0, xmask}
        for i in range(k):
            if choice >> i & 1:
                members.add(proper[i])
        ordered = sorted(members, key=subset_sort_key)
        closed = True
        for i, a in enumerate(ordered):
            if not closed:
                break
            for b in ordered[i + 1:]:
                if (a | b) not in members or (a & b) not in members:
                    closed = False
                    break
        if closed:
            out.append(tuple(ordered))
    out.sort(key=lambda fam: (len(fam), tuple(subset_sort_key(m) for m in fam)))
    return tuple(out)


def enumerate_topologies(x: GroundSet,
                         require_zero_singleton: bool = False) -> list[Topology]:
    """All topologies on X in canonical order, optionally only those with {0}.

    Brute force over the 2^(2^|X|-2) candidate families, so the ground set is
    capped at four elements.
    """
    if x.size > TOPOLOGY_GROUND_CAP:
        raise EnumerationInfeasible(
            f"topology enumeration capped at |X| = {TOPOLOGY_GROUND_CAP}, got {x.size}")
    out = []
    for fam in _topology_families(x.mask):
        if require_zero_singleton and ZERO_MASK not in fam:
            continue
        out.append(Topology(x, tuple(IntSet.from_mask(m) for m in fam)))
    return out


def realize_topology(t: Topology) -> tuple[Graph, Labeling]:
    """Build the star realisation of a topology containing {0}.

    The star K_{1,r-2} (r = number of opens) gets {0} on its center and the
    remaining non-empty opens on the leaves; each edge label then equals its
    leaf label, so the vertex-label family plus ∅ is exactly the topology.
    """
    r = len(t.opens)
    if r <= 2:
        raise DegenerateTopologyError(
            "a topology with fewer than 3 opens leaves no labeled edge to build")
    if not t.has_zero_singleton():
        raise NotRealizableError(
            "the star construction needs {0} among the opens")
    leaf_opens = [s for s in t.opens if s.mask not in (0, ZERO_MASK)]
    names = ["c"] + [f"p{i}" for i in range(1, len(leaf_opens) + 1)]
    g = Graph(names, [("c", name) for name in names[1:]])
    assignment = {"c": IntSet.from_mask(ZERO_MASK)}
    for name, s in zip(names[1:], leaf_opens):
        assignment[name] = s
    return g, Labeling(t.ground, assignment)


def _topology_violations(g: Graph, f: Labeling) -> list:
    violations = []
    usable = (_labels_usable(g, f)
              and all(not f.assignment[v].mask & ~f.ground.mask
                      for v in g.vertices))
    if usable:
        family = {f.assignment[v].mask for v in g.vertices}
        family.add(0)
        check = is_topology([IntSet.from_mask(m) for m in sorted(family, key=subset_sort_key)],
                            f.ground)
        if not check.ok:
            detail = check.reason or "not a topology"
            if check.witness is not None:
                a, b, op, res = check.witness
                detail += f": {op} of {a} and {b} is {res}, which is missing"
            violations.append(Violation("not-a-topology", "labeling", detail))
    return violations


def verify_top_iasl(g: Graph, f: Labeling) -> VerificationReport:
    """An IASL whose vertex-label family plus ∅ is a topology on X."""
    violations = _iasl_violations(g, f)
    violations.extend(_topology_violations(g, f))
    return VerificationReport.from_violations(violations)


def verify_top_iasgl(g: Graph, f: Labeling) -> VerificationReport:
    """Simultaneously a topological IASL and a set-graceful labeling."""
    violations = _iasl_violations(g, f)
    violations.extend(_topology_violations(g, f))
    violations.extend(_iasgl_extra_violations(g, f))
    return VerificationReport.from_violations(violations)
