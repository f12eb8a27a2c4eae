"""Finite simple graphs with string-named vertices.

Covers the edge-list file format, structural predicates used by the labeling
theorems, isomorphism canonical forms, and exhaustive enumeration of small
connected graphs (the substrate for the theorem-checking suite).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Iterator, Optional

from .intsets import EnumerationInfeasible, bits_of

ENUMERATION_VERTEX_CAP = 7


class GraphParseError(ValueError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Graph:
    """Immutable simple undirected graph.

    Vertices keep their insertion order; edges are stored as index pairs
    ``(i, j)`` with ``i < j``, sorted.
    """

    __slots__ = ("vertices", "edges", "_index", "_adj", "_ckey")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]]):
        vs = tuple(vertices)
        index = {}
        for v in vs:
            if v in index:
                raise ValueError(f"duplicate vertex {v!r}")
            index[v] = len(index)
        pairs = set()
        for u, w in edges:
            if u not in index or w not in index:
                raise ValueError(f"edge ({u!r}, {w!r}) uses an undeclared vertex")
            if u == w:
                raise ValueError(f"loop at vertex {u!r}")
            i, j = index[u], index[w]
            pair = (i, j) if i < j else (j, i)
            if pair in pairs:
                raise ValueError(f"duplicate edge ({u!r}, {w!r})")
            pairs.add(pair)
        self.vertices = vs
        self._index = index
        self.edges = tuple(sorted(pairs))
        adj = [[] for _ in vs]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._ckey: Optional[tuple[int, int]] = None

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def index_of(self, v: str) -> int:
        return self._index[v]

    def has_vertex(self, v: str) -> bool:
        return v in self._index

    def neighbors(self, v: str) -> tuple[str, ...]:
        return tuple(self.vertices[j] for j in self._adj[self._index[v]])

    def degree(self, v: str) -> int:
        return len(self._adj[self._index[v]])

    def degrees(self) -> dict[str, int]:
        return {v: len(self._adj[i]) for i, v in enumerate(self.vertices)}

    def edge_names(self) -> list[tuple[str, str]]:
        return [(self.vertices[i], self.vertices[j]) for i, j in self.edges]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for j in self._adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == self.n

    def canonical_key(self) -> tuple[int, int]:
        """Isomorphism-invariant key (vertex count, minimal edge mask)."""
        if self._ckey is None:
            self._ckey = (self.n, canonical_mask(self.n, self.edges))
        return self._ckey

    def emit(self) -> str:
        """Edge-list text that reparses to an identical graph.

        Every vertex is declared on its own line first so insertion order
        survives the round trip.
        """
        lines = list(self.vertices)
        lines.extend(f"{u} {w}" for u, w in self.edge_names())
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices),
                "edges": [[u, w] for u, w in self.edge_names()]}

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Graph)
                and self.vertices == other.vertices
                and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph({self.n} vertices, {self.m} edges)"


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    ``u v`` declares an edge, a single token declares a vertex, ``#`` starts
    a comment, blank lines are ignored. Loops, duplicate edges and extra
    tokens are reported with their line number.
    """
    order: list[str] = []
    seen_vertices: set[str] = set()
    seen_edges: set[tuple[str, str]] = set()
    edges: list[tuple[str, str]] = []

    def declare(v: str) -> None:
        if v not in seen_vertices:
            seen_vertices.add(v)
            order.append(v)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) == 1:
            declare(tokens[0])
        elif len(tokens) == 2:
            u, w = tokens
            if u == w:
                raise GraphParseError(lineno, f"loop at vertex {u!r}")
            declare(u)
            declare(w)
            key = (u, w) if u < w else (w, u)
            if key in seen_edges:
                raise GraphParseError(lineno, f"duplicate edge {u!r} {w!r}")
            seen_edges.add(key)
            edges.append((u, w))
        else:
            raise GraphParseError(lineno, f"expected 1 or 2 tokens, got {len(tokens)}")
    return Graph(order, edges)


@dataclass(frozen=True)
class GraphStructure:
    """Structural facts the labeling theorems talk about."""

    degrees: dict
    pendant_vertices: tuple[str, ...]
    is_connected: bool
    is_regular: Optional[int]
    is_tree: bool
    is_star: bool
    center_if_star: Optional[str]


def structure(g: Graph) -> GraphStructure:
    degs = g.degrees()
    pendants = tuple(v for v in g.vertices if degs[v] == 1)
    connected = g.is_connected()
    values = set(degs.values())
    regular = values.pop() if len(values) == 1 and g.n > 0 else None
    is_tree = connected and g.m == g.n - 1
    center = None
    if is_tree:
        for v in g.vertices:
            if degs[v] == g.n - 1:
                center = v
                break
    is_star = is_tree and center is not None
    return GraphStructure(
        degrees=degs,
        pendant_vertices=pendants,
        is_connected=connected,
        is_regular=regular,
        is_tree=is_tree,
        is_star=is_star,
        center_if_star=center if is_star else None,
    )


# Convenient builders for the standard small graphs used in tests and scripts.

def star(leaves: int) -> Graph:
    names = ["c"] + [f"l{i}" for i in range(1, leaves + 1)]
    return Graph(names, [("c", f"l{i}") for i in range(1, leaves + 1)])


def path(n: int) -> Graph:
    names = [f"v{i}" for i in range(1, n + 1)]
    return Graph(names, list(zip(names, names[1:])))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    names = [f"v{i}" for i in range(1, n + 1)]
    return Graph(names, list(zip(names, names[1:])) + [(names[-1], names[0])])


def complete(n: int) -> Graph:
    names = [f"v{i}" for i in range(1, n + 1)]
    return Graph(names, [(names[i], names[j])
                         for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    left = [f"a{i}" for i in range(1, a + 1)]
    right = [f"b{i}" for i in range(1, b + 1)]
    return Graph(left + right, [(u, w) for u in left for w in right])


# --- canonical forms ---------------------------------------------------------

@lru_cache(maxsize=None)
def _edge_bits(n: int) -> tuple[tuple[int, ...], ...]:
    """bit[i][j] for i < j: position of edge (i, j) in the n-vertex edge mask."""
    bit = [[0] * n for _ in range(n)]
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            bit[i][j] = 1 << k
            k += 1
    return tuple(tuple(row) for row in bit)


@lru_cache(maxsize=None)
def _mask_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def _edges_of_mask(n: int, mask: int) -> tuple[tuple[int, int], ...]:
    pairs = _mask_pairs(n)
    return tuple(pairs[k] for k in range(len(pairs)) if mask >> k & 1)


def _refine_colors(n: int, adj: list[list[int]]) -> list[int]:
    """Iterated degree refinement; the resulting color order is invariant."""
    colors = [0] * n
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v])))
                for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canonical_mask(n: int, edges: Iterable[tuple[int, int]]) -> int:
    """Minimal edge mask over all vertex orderings compatible with refinement.

    Refinement colors are isomorphism-invariant and so is the order of the
    color classes, so restricting the minimum to color-respecting orderings
    yields the same value for isomorphic graphs while skipping most of the
    n! relabellings.
    """
    edges = list(edges)
    if n <= 1:
        return 0
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    colors = _refine_colors(n, adj)
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    blocks = [tuple(classes[c]) for c in sorted(classes)]
    bit = _edge_bits(n)
    best: Optional[int] = None
    place = [0] * n
    for arrangement in product(*(permutations(b) for b in blocks)):
        pos = 0
        for block in arrangement:
            for v in block:
                place[v] = pos
                pos += 1
        m = 0
        for i, j in edges:
            a, b = place[i], place[j]
            m |= bit[a][b] if a < b else bit[b][a]
        if best is None or m < best:
            best = m
    return best if best is not None else 0


def graphs_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.canonical_key() == h.canonical_key()


# --- enumeration -------------------------------------------------------------

def _mask_connected(n: int, mask: int) -> bool:
    if n <= 1:
        return True
    rows = [0] * n
    pairs = _mask_pairs(n)
    for k in range(len(pairs)):
        if mask >> k & 1:
            i, j = pairs[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


@lru_cache(maxsize=None)
def _connected_class_masks(n: int, max_edges: Optional[int]) -> tuple[int, ...]:
    """Canonical edge masks of connected graphs on n vertices, up to iso.

    Built by attaching a new vertex with every non-empty neighborhood to each
    smaller class; every connected graph arises this way because removing a
    non-cut vertex keeps the rest connected.
    """
    if n == 1:
        return (0,)
    inner = None if max_edges is None else max_edges - 1
    seen: set[int] = set()
    for hmask in _connected_class_masks(n - 1, inner):
        h_edges = _edges_of_mask(n - 1, hmask)
        if max_edges is not None and len(h_edges) >= max_edges + 1:
            continue
        room = None if max_edges is None else max_edges - len(h_edges)
        for s in range(1, 1 << (n - 1)):
            if room is not None and s.bit_count() > room:
                continue
            edges = list(h_edges)
            edges.extend((i, n - 1) for i in bits_of(s))
            seen.add(canonical_mask(n, edges))
    return tuple(sorted(seen))


def _graph_from_mask(n: int, mask: int) -> Graph:
    names = [f"v{i}" for i in range(1, n + 1)]
    edges = [(names[i], names[j]) for i, j in _edges_of_mask(n, mask)]
    return Graph(names, edges)


def enumerate_connected_graphs(n: int, dedup: bool = False,
                               max_edges: Optional[int] = None) -> Iterator[Graph]:
    """Yield every connected simple graph on n labeled vertices.

    With ``dedup`` one representative per isomorphism class is produced, in a
    deterministic order. ``max_edges`` restricts the edge count (handy for
    trees: ``max_edges=n-1``).
    """
    if n < 1:
        raise ValueError("vertex count must be positive")
    if n > ENUMERATION_VERTEX_CAP:
        raise EnumerationInfeasible(
            f"enumeration capped at {ENUMERATION_VERTEX_CAP} vertices, got {n}")
    if dedup:
        for mask in _connected_class_masks(n, max_edges):
            yield _graph_from_mask(n, mask)
        return
    total_bits = n * (n - 1) // 2
    for mask in range(1 << total_bits):
        if max_edges is not None and mask.bit_count() > max_edges:
            continue
        if _mask_connected(n, mask):
            yield _graph_from_mask(n, mask)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of trees on n vertices."""
    for g in enumerate_connected_graphs(n, dedup=True, max_edges=n - 1):
        yield g
