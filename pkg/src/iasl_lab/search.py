"""Decision procedures for the labeling classes.

Complete backtracking searches for set-graceful, topological, and combined
labelings of a given graph, plus the structural pre-screen derived from the
necessary conditions and the smallest-ground-set search.

Determinism contract: vertices are processed in descending-degree order with
name tie-breaks, candidate labels in canonical subset order ({0} first), so
repeated runs return the identical first-found labeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .graphs import Graph
from .intsets import (EnumerationInfeasible, GroundSet, IntSet,
                      SumsetClassification, ZERO_MASK, classify, sumset_mask)
from .labelings import Labeling
from .topology import TOPOLOGY_GROUND_CAP, Topology, enumerate_topologies

SEARCH_MODES = ("iasgl", "top_iasl", "top_iasgl")


@dataclass(frozen=True)
class StructuralScreen:
    """Necessary-condition report for graceful searches.

    ``edge_count_ok``, ``vertex_count_ok`` and ``pendant_floor_ok`` are
    provably necessary and may be used to skip the search outright. The two
    pendant readings mirror the existence theorem's condition (c), whose
    statement and proof swap the rho' and 1 + rho' bounds; ``max_degree_ok``
    mirrors the degree named in the proof and is informational only.
    """

    edge_count_ok: bool
    vertex_count_ok: bool
    pendant_count_ok_reading_a: bool
    pendant_count_ok_reading_b: bool
    max_degree_ok: bool
    classification: SumsetClassification
    edge_count: int
    required_edges: int
    vertex_count: int
    min_vertices: int
    pendant_count: int
    pendant_floor: int
    pendant_floor_ok: bool
    max_degree: int
    degree_target: int

    def admissible(self) -> bool:
        """True unless a provably necessary condition already fails."""
        return self.edge_count_ok and self.vertex_count_ok and self.pendant_floor_ok

    def to_json(self) -> dict:
        c = self.classification
        return {
            "edge_count_ok": self.edge_count_ok,
            "vertex_count_ok": self.vertex_count_ok,
            "pendant_count_ok_reading_a": self.pendant_count_ok_reading_a,
            "pendant_count_ok_reading_b": self.pendant_count_ok_reading_b,
            "pendant_floor_ok": self.pendant_floor_ok,
            "max_degree_ok": self.max_degree_ok,
            "edge_count": self.edge_count,
            "required_edges": self.required_edges,
            "vertex_count": self.vertex_count,
            "min_vertices": self.min_vertices,
            "pendant_count": self.pendant_count,
            "pendant_floor": self.pendant_floor,
            "max_degree": self.max_degree,
            "degree_target": self.degree_target,
            "classification": {
                "rho": c.rho,
                "rho_prime": c.rho_prime,
                "rho_double_prime": c.rho_double_prime,
                "x_is_sumset": c.x_is_sumset,
            },
        }


def screen(g: Graph, x: GroundSet, mode: str = "iasgl") -> StructuralScreen:
    """Evaluate the necessary conditions for a (topological) graceful labeling."""
    if mode not in ("iasgl", "top_iasgl"):
        raise ValueError(f"screen mode must be 'iasgl' or 'top_iasgl', got {mode!r}")
    cls = classify(x)
    n_subsets = 1 << x.size
    required_edges = n_subsets - 2
    min_vertices = n_subsets - (cls.rho + 1)
    degrees = g.degrees()
    pendant_count = sum(1 for d in degrees.values() if d == 1)
    max_degree = max(degrees.values(), default=0)
    # condition (c): the statement says 1 + rho' pendants when X is a sumset,
    # the proof says the opposite; both are reported.
    bound_a = 1 + cls.rho_prime if cls.x_is_sumset else cls.rho_prime
    bound_b = cls.rho_prime if cls.x_is_sumset else 1 + cls.rho_prime
    pendant_floor = x.size - 1
    degree_target = 1 + (1 << (x.size - 1))
    return StructuralScreen(
        edge_count_ok=g.m == required_edges,
        vertex_count_ok=g.n >= min_vertices,
        pendant_count_ok_reading_a=pendant_count >= bound_a,
        pendant_count_ok_reading_b=pendant_count >= bound_b,
        max_degree_ok=max_degree >= degree_target,
        classification=cls,
        edge_count=g.m,
        required_edges=required_edges,
        vertex_count=g.n,
        min_vertices=min_vertices,
        pendant_count=pendant_count,
        pendant_floor=pendant_floor,
        pendant_floor_ok=pendant_count >= pendant_floor,
        max_degree=max_degree,
        degree_target=degree_target,
    )


@dataclass(frozen=True)
class SearchOutcome:
    found: bool
    labeling: Optional[Labeling]
    nodes_explored: int
    screen: Optional[StructuralScreen]

    def to_json(self) -> dict:
        return {
            "found": self.found,
            "labeling": None if self.labeling is None else self.labeling.to_json(),
            "nodes_explored": self.nodes_explored,
            "screen": None if self.screen is None else self.screen.to_json(),
        }


def _vertex_order(g: Graph) -> list[str]:
    degs = g.degrees()
    return sorted(g.vertices, key=lambda v: (-degs[v], v))


def _sum_table(masks: tuple[int, ...]) -> dict:
    table: dict[tuple[int, int], int] = {}
    for a in masks:
        for b in masks:
            table[(a, b)] = sumset_mask(a, b)
    return table


def iter_iasgl_assignments(g: Graph, x: GroundSet,
                           counter: Optional[list] = None) -> Iterator[dict]:
    """Yield every set-graceful assignment (vertex name -> mask), in order.

    Complete backtracking over injective assignments of non-empty subsets of
    X. A branch dies as soon as an incident edge label leaves
    P(X) - {∅, {0}}, or when fewer undecided edges remain than required
    labels still missing from the image.
    """
    if counter is None:
        counter = [0]
    n_subsets = 1 << x.size
    if g.m != n_subsets - 2 or g.n > n_subsets - 1:
        return
    order = _vertex_order(g)
    pos = {v: i for i, v in enumerate(order)}
    earlier: list[list[int]] = [[] for _ in order]
    for u, w in g.edge_names():
        i, j = pos[u], pos[w]
        if i < j:
            earlier[j].append(i)
        else:
            earlier[i].append(j)
    masks = x.subset_masks()
    table = _sum_table(masks)
    required = frozenset(m for m in masks if m != ZERO_MASK)
    total_edges = g.m

    labels: list[int] = [0] * len(order)
    used: set[int] = set()
    produced: dict[int, int] = {}
    missing: set[int] = set(required)
    decided = 0

    def extend(i: int) -> Iterator[dict]:
        nonlocal decided
        if i == len(order):
            if not missing:
                yield {order[k]: labels[k] for k in range(len(order))}
            return
        for m in masks:
            if m in used:
                continue
            new_labels = []
            ok = True
            for j in earlier[i]:
                s = table[(m, labels[j])]
                if s not in required:
                    ok = False
                    break
                new_labels.append(s)
            if not ok:
                continue
            newly_covered = []
            for s in new_labels:
                produced[s] = produced.get(s, 0) + 1
                if s in missing:
                    missing.remove(s)
                    newly_covered.append(s)
            decided += len(new_labels)
            counter[0] += 1
            if len(missing) <= total_edges - decided:
                labels[i] = m
                used.add(m)
                yield from extend(i + 1)
                used.remove(m)
            for s in new_labels:
                produced[s] -= 1
                if produced[s] == 0:
                    del produced[s]
            for s in newly_covered:
                missing.add(s)
            decided -= len(new_labels)

    yield from extend(0)


def _labeling_from_masks(g: Graph, x: GroundSet, masks: dict) -> Labeling:
    return Labeling(x, {v: IntSet.from_mask(masks[v]) for v in g.vertices})


def search_iasgl(g: Graph, x: GroundSet) -> SearchOutcome:
    """First set-graceful labeling of g over X, or proof of absence."""
    scr = screen(g, x, "iasgl")
    counter = [0]
    if scr.admissible():
        for masks in iter_iasgl_assignments(g, x, counter):
            return SearchOutcome(True, _labeling_from_masks(g, x, masks),
                                 counter[0], scr)
    return SearchOutcome(False, None, counter[0], scr)


def iter_top_iasl_assignments(g: Graph, x: GroundSet,
                              counter: Optional[list] = None
                              ) -> Iterator[tuple[Topology, dict]]:
    """Yield (topology, assignment) for every topological labeling of g.

    For each topology T on X with |T| - 1 = |V|, backtracks over bijections
    from vertices to T - {∅} keeping every edge sumset inside P(X).
    """
    if counter is None:
        counter = [0]
    if x.size > TOPOLOGY_GROUND_CAP:
        raise EnumerationInfeasible(
            f"topological search capped at |X| = {TOPOLOGY_GROUND_CAP}, got {x.size}")
    xmask = x.mask
    order = _vertex_order(g)
    pos = {v: i for i, v in enumerate(order)}
    earlier: list[list[int]] = [[] for _ in order]
    for u, w in g.edge_names():
        i, j = pos[u], pos[w]
        if i < j:
            earlier[j].append(i)
        else:
            earlier[i].append(j)
    for t in enumerate_topologies(x):
        opens = [m for m in t.open_masks if m != 0]
        if len(opens) != g.n:
            continue
        table = _sum_table(tuple(opens))
        labels: list[int] = [0] * len(order)
        used: set[int] = set()

        def extend(i: int) -> Iterator[dict]:
            if i == len(order):
                yield {order[k]: labels[k] for k in range(len(order))}
                return
            for m in opens:
                if m in used:
                    continue
                ok = True
                for j in earlier[i]:
                    if table[(m, labels[j])] & ~xmask:
                        ok = False
                        break
                if not ok:
                    continue
                counter[0] += 1
                labels[i] = m
                used.add(m)
                yield from extend(i + 1)
                used.remove(m)

        for assignment in extend(0):
            yield t, assignment


def search_top_iasl(g: Graph, x: GroundSet) -> SearchOutcome:
    """First topological labeling of g over X, or proof of absence."""
    counter = [0]
    for _t, masks in iter_top_iasl_assignments(g, x, counter):
        return SearchOutcome(True, _labeling_from_masks(g, x, masks),
                             counter[0], None)
    return SearchOutcome(False, None, counter[0], None)


def _family_is_topology_masks(label_masks: set, xmask: int) -> bool:
    family = set(label_masks)
    family.add(0)
    if xmask not in family:
        return False
    members = sorted(family)
    for a, b in combinations(members, 2):
        if (a | b) not in family or (a & b) not in family:
            return False
    return True


def iter_top_iasgl_assignments(g: Graph, x: GroundSet,
                               counter: Optional[list] = None) -> Iterator[dict]:
    """Set-graceful assignments whose vertex-label family plus ∅ is a topology."""
    if counter is None:
        counter = [0]
    xmask = x.mask
    for masks in iter_iasgl_assignments(g, x, counter):
        if _family_is_topology_masks(set(masks.values()), xmask):
            yield masks


def search_top_iasgl(g: Graph, x: GroundSet) -> SearchOutcome:
    """First labeling that is both topological and set-graceful.

    Equivalent to filtering the graceful search's solutions by the topology
    axioms, so the two searches stay consistent by construction.
    """
    scr = screen(g, x, "top_iasgl")
    counter = [0]
    if scr.admissible():
        for masks in iter_top_iasgl_assignments(g, x, counter):
            return SearchOutcome(True, _labeling_from_masks(g, x, masks),
                                 counter[0], scr)
    return SearchOutcome(False, None, counter[0], scr)


def _search_for_mode(g: Graph, x: GroundSet, mode: str) -> SearchOutcome:
    if mode == "iasgl":
        return search_iasgl(g, x)
    if mode == "top_iasl":
        return search_top_iasl(g, x)
    if mode == "top_iasgl":
        return search_top_iasgl(g, x)
    raise ValueError(f"unknown search mode {mode!r}")


def minimal_ground_set(g: Graph, mode: str,
                       element_bound: int = 10) -> Optional[GroundSet]:
    """Smallest ground set (cardinality, then max element, then lexicographic)
    for which g admits a labeling of the requested class.

    Candidates contain 0 and draw their other elements from 1..element_bound.
    Returns None when every candidate within the caps fails.
    """
    if mode not in SEARCH_MODES:
        raise ValueError(f"mode must be one of {SEARCH_MODES}, got {mode!r}")
    if element_bound > 10:
        raise ValueError("element bound capped at 10")
    max_size = TOPOLOGY_GROUND_CAP if mode != "iasgl" else 5
    pool = range(1, element_bound + 1)
    for size in range(1, max_size + 1):
        candidates = [(0,) + combo for combo in combinations(pool, size - 1)]
        candidates.sort(key=lambda c: (c[-1], c))
        for cand in candidates:
            # graceful labelings pin the edge count to 2^|X| - 2, so skip
            # candidate sizes that cannot possibly match
            if mode in ("iasgl", "top_iasgl") and g.m != (1 << size) - 2:
                continue
            if g.n > (1 << size) - 1:
                continue
            x = GroundSet(cand)
            if _search_for_mode(g, x, mode).found:
                return x
    return None
