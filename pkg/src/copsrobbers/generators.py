"""Graph family generators.

Canonical vertex numbering:

* ``gen_path(n)``     -- vertices 0..n-1, edges i -- i+1.
* ``gen_cycle(n)``    -- path plus the closing edge n-1 -- 0.
* ``gen_grid(w, h)``  -- vertex (r, c) has id r*w + c; 4-neighbor lattice.
* ``gen_hypercube(d)``-- ids are bit strings; edge iff ids differ in one bit.
* ``gen_petersen()``  -- outer 5-cycle 0..4, inner pentagram 5..9 (i -- i+2
  mod 5 shifted by 5), spokes i -- i+5.
* ``gen_gnp``         -- G(n, p) with one MT19937 stream over pairs in
  lexicographic order, so a seed pins the edge set bit-exactly.
* ``gen_projective_incidence(q)`` -- bipartite point/line incidence graph of
  the projective plane of prime order q: ids 0..N-1 are points, N..2N-1 lines
  with N = q^2+q+1; a point is joined to a line iff their homogeneous triples
  are orthogonal mod q.  (q+1)-regular with girth 6.
"""

from __future__ import annotations

from .graph import Graph
from .seeds import make_rng

__all__ = [
    "gen_path",
    "gen_cycle",
    "gen_grid",
    "gen_hypercube",
    "gen_petersen",
    "gen_gnp",
    "gen_projective_incidence",
]


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_grid(w: int, h: int) -> Graph:
    if w < 1 or h < 1:
        raise ValueError("grid needs w, h >= 1")
    edges = []
    for r in range(h):
        for c in range(w):
            v = r * w + c
            if c + 1 < w:
                edges.append((v, v + 1))
            if r + 1 < h:
                edges.append((v, v + w))
    return Graph(w * h, edges)


def gen_hypercube(d: int) -> Graph:
    if d < 1:
        raise ValueError("hypercube needs d >= 1")
    n = 1 << d
    edges = [(v, v | (1 << b)) for v in range(n) for b in range(d) if not (v >> b) & 1]
    return Graph(n, edges)


def gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def gen_gnp(n: int, edge_prob: float, seed: int) -> Graph:
    if n < 1:
        raise ValueError("gnp needs n >= 1")
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = make_rng(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < edge_prob
    ]
    return Graph(n, edges)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _projective_points(q: int) -> list[tuple[int, int, int]]:
    # Canonical representatives of the q^2+q+1 lines through the origin of
    # F_q^3: leading nonzero coordinate normalized to 1.
    pts = [(1, a, b) for a in range(q) for b in range(q)]
    pts += [(0, 1, c) for c in range(q)]
    pts.append((0, 0, 1))
    return pts


def gen_projective_incidence(q: int) -> Graph:
    """Point/line incidence graph of PG(2, q) for prime q."""
    if not _is_prime(q):
        raise ValueError(f"{q} is not prime")
    pts = _projective_points(q)
    n = len(pts)
    edges = []
    for i, p in enumerate(pts):
        for j, line in enumerate(pts):
            if (p[0] * line[0] + p[1] * line[1] + p[2] * line[2]) % q == 0:
                edges.append((i, n + j))
    return Graph(2 * n, edges)
