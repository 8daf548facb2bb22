"""Graph representation, parsing, and the basic structural operations.

Graphs are simple and undirected with dense 0-based vertex ids. Instances are
immutable by convention: all derived data is computed once and cached.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import ParseError


def mask_of(vertices) -> int:
    """Pack an iterable of vertex ids into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def verts_of(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into a sorted tuple of vertex ids."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Duplicate edges collapse; loops are rejected. `edges` is sorted, each pair
    (u, v) with u < v. `adj` holds sorted neighbour tuples. `bits` (lazy) holds
    one adjacency bitmask per vertex; only touch it for small graphs.
    """

    __slots__ = ("n", "edges", "adj", "_bits", "_cobits", "_edge_set", "_hash")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e} out of range for n={n}")
            seen.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(seen))
        lists = [[] for _ in range(n)]
        for u, v in self.edges:
            lists[u].append(v)
            lists[v].append(u)
        self.adj = tuple(tuple(sorted(l)) for l in lists)
        self._bits = None
        self._cobits = None
        self._edge_set = None
        self._hash = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def bits(self) -> tuple[int, ...]:
        if self._bits is None:
            rows = [0] * self.n
            for u, v in self.edges:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            self._bits = tuple(rows)
        return self._bits

    @property
    def cobits(self) -> tuple[int, ...]:
        """Adjacency rows of the complement graph."""
        if self._cobits is None:
            full = (1 << self.n) - 1
            bits = self.bits
            self._cobits = tuple(
                full & ~bits[v] & ~(1 << v) for v in range(self.n)
            )
        return self._cobits

    def has_edge(self, u: int, v: int) -> bool:
        if self._edge_set is None:
            self._edge_set = frozenset(self.edges)
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.edges))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Bipartition:
    """A proper 2-coloring; each side is a sorted vertex tuple."""

    side_a: tuple[int, ...]
    side_b: tuple[int, ...]


def complement(g: Graph) -> Graph:
    """Complement graph on the same vertex set."""
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)


def induced_subgraph(g: Graph, s) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on `s`, plus the map from new ids to original ids."""
    keep = tuple(sorted(set(s)))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return Graph(len(keep), edges), keep


def connected_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Components as sorted tuples, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def two_coloring(g: Graph) -> Bipartition | None:
    """Proper 2-coloring, or None if some component has an odd cycle.

    Deterministic: the smallest vertex of every component lands on side a.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    side_a = tuple(v for v in range(g.n) if color[v] == 0)
    side_b = tuple(v for v in range(g.n) if color[v] == 1)
    return Bipartition(side_a, side_b)


def classify_set(g: Graph, s) -> str:
    """Classify `s` as "independent", "clique", "both" (|s| <= 1) or "neither"."""
    vs = sorted(set(s))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    if len(vs) <= 1:
        return "both"
    sset = set(vs)
    internal = 0
    for v in vs:
        internal += sum(1 for w in g.adj[v] if w in sset)
    internal //= 2
    full = len(vs) * (len(vs) - 1) // 2
    if internal == 0:
        return "independent"
    if internal == full:
        return "clique"
    return "neither"


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g plus a disjoint copy of h; h's vertex i becomes g.n + i."""
    edges = list(g.edges) + [(g.n + u, g.n + v) for u, v in h.edges]
    return Graph(g.n + h.n, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def parse_graph(text: str, fmt: str = "dimacs", n: int | None = None) -> Graph:
    """Parse DIMACS ("p edge" header, 1-based "e u v" lines) or a plain
    0-based edge list. For edge lists, n defaults to 1 + the largest id."""
    if fmt == "dimacs":
        return _parse_dimacs(text)
    if fmt == "edgelist":
        return _parse_edgelist(text, n)
    raise ValueError(f"unknown format {fmt!r}")


def _parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    line_no = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError(line_no, "duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(line_no, f"malformed problem line {line!r}")
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise ParseError(line_no, f"malformed problem line {line!r}")
            if n < 0:
                raise ParseError(line_no, "negative vertex count")
        elif parts[0] == "e":
            if n is None:
                raise ParseError(line_no, "edge line before problem line")
            if len(parts) != 3:
                raise ParseError(line_no, f"malformed edge line {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(line_no, f"malformed edge line {line!r}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(line_no, f"endpoint out of range in {line!r}")
            if u == v:
                raise ParseError(line_no, f"loop in {line!r}")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(line_no, f"unrecognized line {line!r}")
    if n is None:
        raise ParseError(max(line_no, 1), "no problem line found")
    return Graph(n, edges)


def _parse_edgelist(text: str, n: int | None) -> Graph:
    edges = []
    top = -1
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(line_no, f"malformed edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(line_no, f"malformed edge line {line!r}")
        if u < 0 or v < 0:
            raise ParseError(line_no, f"negative vertex id in {line!r}")
        if u == v:
            raise ParseError(line_no, f"loop in {line!r}")
        top = max(top, u, v)
        edges.append((u, v))
    size = n if n is not None else top + 1
    if top >= size:
        raise ParseError(1, f"vertex {top} out of range for n={size}")
    return Graph(size, edges)


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def to_edgelist(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)
