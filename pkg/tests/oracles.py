"""Independent brute-force oracles used to freeze expected test values.

Each oracle deliberately uses a different algorithm than the library code it
checks: distances via Floyd-Warshall instead of BFS, girth via per-edge
removal, Hall's condition and "largest non-expanding subset" by subset
enumeration.
"""

import itertools
import math

INF = math.inf


def fw_distances(g):
    """All-pairs distances by Floyd-Warshall."""
    n = g.n
    dist = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == INF:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def diameter_oracle(g):
    dist = fw_distances(g)
    return max(d for row in dist for d in row)


def ball_oracle(g, center, r):
    dist = fw_distances(g)
    out = set()
    for v in range(g.n):
        if any(dist[c][v] <= r for c in center):
            out.add(v)
    return out


def girth_oracle(g):
    """Shortest cycle via edge removal: cycle through edge (u,v) has length
    1 + d_{G-uv}(u, v)."""
    best = INF
    edges = g.edges()
    for u, v in edges:
        rest = [e for e in edges if e != (u, v)]
        h = type(g)(g.n, rest)
        d = _bfs_len(h, u, v)
        if d is not None:
            best = min(best, d + 1)
    return best


def _bfs_len(g, s, t):
    from collections import deque

    dist = {s: 0}
    q = deque([s])
    while q:
        x = q.popleft()
        if x == t:
            return dist[x]
        for y in g.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    return None


def hall_condition_holds(shell, adjacency):
    """Exhaustive Hall check: every X subset of `shell` needs |N(X)| >= |X|."""
    shell = list(shell)
    for size in range(1, len(shell) + 1):
        for xs in itertools.combinations(shell, size):
            nbrs = set()
            for u in xs:
                nbrs.update(adjacency[u])
            if len(nbrs) < size:
                return False
    return True


def largest_nonexpanding_subset(g, candidate, radius, lam):
    """Largest A inside `candidate` with |B(A, radius)| < lam * |A|.

    Exhaustive over subsets; ties broken toward the lexicographically first
    subset of maximum size.  Returns a (possibly empty) frozenset.
    """
    dist = fw_distances(g)
    cand = sorted(candidate)
    best = frozenset()
    for size in range(1, len(cand) + 1):
        for sub in itertools.combinations(cand, size):
            ball_size = sum(
                1 for v in range(g.n) if any(dist[a][v] <= radius for a in sub)
            )
            if ball_size < lam * len(sub) and size > len(best):
                best = frozenset(sub)
                break
    return best


def two_colorable(g):
    color = [None] * g.n
    for s in range(g.n):
        if color[s] is not None:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if color[y] is None:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return False
    return True
