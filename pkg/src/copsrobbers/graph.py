"""Immutable simple undirected graphs and their metric primitives.

Vertices are exactly the integers ``0..n-1``.  A :class:`VertexSet` is a
fixed-width membership bitmask over those ids, so set algebra costs
O(n/wordsize).  Distances are exact integers; ``UNREACHABLE`` (-1) is the only
sentinel and is never a "large number".

BFS tie-breaking is pinned everywhere: when several predecessors realize a
shortest path, the lowest vertex id wins.  This makes every derived object
(geodesics, transcripts) reproducible.
"""

from __future__ import annotations

import hashlib
import math
from collections import deque
from typing import Iterable, Iterator

from .errors import NoPathError, ParseError

__all__ = [
    "UNREACHABLE",
    "Graph",
    "VertexSet",
    "bfs_distances",
    "ball",
    "shortest_path",
    "diameter",
    "girth",
    "min_degree",
    "delete_vertices",
    "component_of",
    "is_connected",
    "parse_edge_list",
    "format_edge_list",
    "to_dot",
    "graph_hash",
]

UNREACHABLE = -1


class VertexSet:
    """Immutable subset of ``0..n-1`` backed by an integer bitmask."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        if n < 0:
            raise ValueError("universe size must be >= 0")
        if mask < 0 or mask >> n:
            raise ValueError("mask has members outside [0, n)")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} outside [0, {n})")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.mask >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.n == other.n
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def __le__(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ~self.mask & ((1 << self.n) - 1))

    def _check(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError("VertexSets over different universes")

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {{{', '.join(map(str, self))}}})"


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Construction validates the input and rejects (never silently fixes)
    self-loops, duplicate edges, and out-of-range endpoints.  Instances are
    immutable and safe to share across concurrent tasks.
    """

    __slots__ = ("n", "_adj", "_adj_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside vertex range [0,{n})")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))
        masks = []
        for a in self._adj:
            m = 0
            for v in a:
                m |= 1 << v
            masks.append(m)
        object.__setattr__(self, "_adj_masks", tuple(masks))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_adjacency(cls, adj: list[list[int]]) -> "Graph":
        """Build from an adjacency list, rejecting asymmetric input."""
        n = len(adj)
        edges = []
        for u, nbrs in enumerate(adj):
            for v in nbrs:
                if not 0 <= v < n:
                    raise ValueError(f"neighbor {v} of {u} outside range")
                if u not in adj[v]:
                    raise ValueError(f"asymmetric adjacency: {u}->{v} but not {v}->{u}")
                if u < v:
                    edges.append((u, v))
        return cls(n, edges)

    @property
    def vertex_count(self) -> int:
        return self.n

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_mask(self, v: int) -> int:
        return self._adj_masks[v]

    def closed_neighbor_mask(self, v: int) -> int:
        return self._adj_masks[v] | (1 << v)

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def bfs_distances(g: Graph, sources: VertexSet) -> list[int]:
    """Multi-source BFS hop distances; ``UNREACHABLE`` marks the rest."""
    if not sources:
        raise ValueError("sources must be nonempty")
    dist = [UNREACHABLE] * g.n
    q: deque[int] = deque()
    for s in sources:
        dist[s] = 0
        q.append(s)
    while q:
        u = q.popleft()
        du = dist[u] + 1
        for v in g.neighbors(u):
            if dist[v] == UNREACHABLE:
                dist[v] = du
                q.append(v)
    return dist


def ball(g: Graph, a: VertexSet, r: int) -> VertexSet:
    """All vertices within hop distance ``r`` of the set ``a``."""
    if not a:
        raise ValueError("ball center must be nonempty")
    if r < 0:
        raise ValueError("radius must be >= 0")
    mask = a.mask
    frontier = a.mask
    for _ in range(r):
        new = 0
        f = frontier
        while f:
            low = f & -f
            new |= g.neighbor_mask(low.bit_length() - 1)
            f ^= low
        frontier = new & ~mask
        if not frontier:
            break
        mask |= frontier
    return VertexSet(g.n, mask)


def shortest_path(g: Graph, u: int, v: int) -> list[int]:
    """A geodesic from u to v, deterministic via lowest-id predecessors."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("endpoint outside vertex range")
    if u == v:
        return [u]
    dist = bfs_distances(g, VertexSet.of(g.n, [u]))
    if dist[v] == UNREACHABLE:
        raise NoPathError(f"no path between {u} and {v}")
    path = [v]
    cur = v
    while cur != u:
        d = dist[cur]
        # neighbors() is sorted, so the first predecessor is the lowest id
        for w in g.neighbors(cur):
            if dist[w] == d - 1:
                cur = w
                break
        path.append(cur)
    path.reverse()
    return path


def diameter(g: Graph) -> int | float:
    """Max distance over connected pairs; ``math.inf`` if disconnected."""
    best = 0
    for s in range(g.n):
        dist = bfs_distances(g, VertexSet.of(g.n, [s]))
        for d in dist:
            if d == UNREACHABLE:
                return math.inf
            if d > best:
                best = d
    return best


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; ``math.inf`` for forests.

    BFS from every root; a non-tree edge (x,y) seen from root s witnesses a
    closed walk of length dist[x]+dist[y]+1, and the minimum over all roots
    equals the girth.
    """
    best = math.inf
    for s in range(g.n):
        dist = [UNREACHABLE] * g.n
        parent = [UNREACHABLE] * g.n
        dist[s] = 0
        q: deque[int] = deque([s])
        while q:
            x = q.popleft()
            if 2 * dist[x] >= best:
                continue
            for y in g.neighbors(x):
                if dist[y] == UNREACHABLE:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
                elif parent[x] != y and parent[y] != x:
                    cand = dist[x] + dist[y] + 1
                    if cand < best:
                        best = cand
    return best


def min_degree(g: Graph) -> int:
    return min(g.degree(v) for v in range(g.n))


def delete_vertices(g: Graph, s: VertexSet) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on V - s, relabeled compactly; returns old->new map."""
    if s.n != g.n:
        raise ValueError("vertex set over wrong universe")
    survivors = [v for v in range(g.n) if v not in s]
    if not survivors:
        raise ValueError("cannot delete every vertex")
    idmap = {old: new for new, old in enumerate(survivors)}
    edges = [
        (idmap[u], idmap[v])
        for u, v in g.edges()
        if u in idmap and v in idmap
    ]
    return Graph(len(survivors), edges), idmap


def component_of(g: Graph, v: int) -> VertexSet:
    """Maximal connected vertex set containing v."""
    if not 0 <= v < g.n:
        raise ValueError("vertex outside range")
    dist = bfs_distances(g, VertexSet.of(g.n, [v]))
    mask = 0
    for u, d in enumerate(dist):
        if d != UNREACHABLE:
            mask |= 1 << u
    return VertexSet(g.n, mask)


def is_connected(g: Graph) -> bool:
    return len(component_of(g, 0)) == g.n


# ---------------------------------------------------------------------------
# Edge-list text format: line 1 "n m", then m lines "u v" with 0 <= u < v < n.
# Lines whose first non-blank character is '#' are comments.
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {raw!r}", line=lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer token in {raw!r}", line=lineno) from None
        if header is None:
            header = lineno
            n, m = a, b
            if n < 1 or m < 0:
                raise ParseError(f"invalid header n={n} m={m}", line=lineno)
            continue
        if not (0 <= a < b < n):
            raise ParseError(f"edge must satisfy 0 <= u < v < n, got {a} {b}", line=lineno)
        edges.append((a, b))
    if header is None:
        raise ParseError("missing 'n m' header", line=1)
    if len(edges) != m:
        raise ParseError(f"header promises {m} edges, found {len(edges)}")
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges()))
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, name: str = "g") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in sorted(g.edges()))
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_hash(g: Graph) -> str:
    """Stable 16-hex-digit digest of the canonical edge list."""
    return hashlib.sha256(format_edge_list(g).encode()).hexdigest()[:16]
