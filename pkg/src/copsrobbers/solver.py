"""Ground-truth game solver by retrograde analysis.

States are (sorted cop multiset, robber vertex, side to move); sorting the
cop positions quotients the symmetry among cops.  Winning labels are stored
as bitmasks over robber vertices, one per cop multiset.  The fixpoint is
computed by Jacobi-style sweeps -- every sweep reads only the previous
sweep's labels -- so a data-parallel evaluation would be bit-identical to
the sequential one, and each state's first-won sweep is well defined (used
for strategy extraction).

Definitions (cops win a state):
  cops to move:   capture now, or some cop move reaches a winning
                  robber-to-move state;
  robber to move: capture now, or every robber move (incl. staying) lands in
                  a winning cops-to-move state.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ResourceLimitError
from .graph import Graph, is_connected

__all__ = [
    "DEFAULT_STATE_BUDGET",
    "is_k_copwin",
    "k_copwin_placement",
    "cop_number",
    "is_dismantlable",
    "SolverCop",
]

DEFAULT_STATE_BUDGET = 50_000_000


@dataclass(frozen=True)
class _Tables:
    k: int
    msets: tuple
    index: dict
    succ: tuple          # per multiset: tuple of successor multiset indices
    win_cop: tuple       # per multiset: bitmask over robber vertices
    win_rob: tuple
    rob_level: tuple     # per multiset: tuple of first-won sweep per robber (-1 never)
    sweeps: int


def _state_count(n: int, k: int) -> int:
    return math.comb(n + k - 1, k) * n * 2


@lru_cache(maxsize=64)
def _solve(g: Graph, k: int, budget: int) -> _Tables:
    n = g.n
    if k < 1:
        raise ValueError("need k >= 1")
    states = _state_count(n, k)
    if states > budget:
        raise ResourceLimitError(
            f"{states} states exceed the budget of {budget}"
        )
    msets = tuple(itertools.combinations_with_replacement(range(n), k))
    index = {ms: i for i, ms in enumerate(msets)}
    m_count = len(msets)

    options = [tuple(sorted((c,) + g.neighbors(c))) for c in range(n)]
    succ = []
    for ms in msets:
        outs = {tuple(sorted(p)) for p in itertools.product(*(options[c] for c in ms))}
        succ.append(tuple(sorted(index[t] for t in outs)))
    succ = tuple(succ)

    full = (1 << n) - 1
    capture = []
    for ms in msets:
        mask = 0
        for c in ms:
            mask |= 1 << c
        capture.append(mask)

    closed = [g.closed_neighbor_mask(r) for r in range(n)]

    win_cop = list(capture)
    win_rob = list(capture)
    rob_level = [[0 if (capture[ci] >> r) & 1 else -1 for r in range(n)] for ci in range(m_count)]

    sweep = 0
    while True:
        sweep += 1
        changed = False
        new_rob = []
        for ci in range(m_count):
            cur = win_rob[ci]
            if cur == full:
                new_rob.append(cur)
                continue
            wc = win_cop[ci]
            add = 0
            pending = ~cur & full
            while pending:
                low = pending & -pending
                r = low.bit_length() - 1
                pending ^= low
                if closed[r] & ~wc == 0:
                    add |= low
            if add:
                changed = True
                levels = rob_level[ci]
                bits = add
                while bits:
                    low = bits & -bits
                    levels[low.bit_length() - 1] = sweep
                    bits ^= low
            new_rob.append(cur | add)
        new_cop = []
        for ci in range(m_count):
            cur = win_cop[ci]
            if cur == full:
                new_cop.append(cur)
                continue
            acc = cur
            for cj in succ[ci]:
                acc |= win_rob[cj]
                if acc == full:
                    break
            if acc != cur:
                changed = True
            new_cop.append(acc)
        win_rob = new_rob
        win_cop = new_cop
        if not changed:
            break

    return _Tables(
        k=k,
        msets=msets,
        index=index,
        succ=succ,
        win_cop=tuple(win_cop),
        win_rob=tuple(win_rob),
        rob_level=tuple(tuple(l) for l in rob_level),
        sweeps=sweep,
    )


def is_k_copwin(g: Graph, k: int, budget: int = DEFAULT_STATE_BUDGET) -> bool:
    """True iff k cops have a winning strategy on the connected graph g."""
    if not is_connected(g):
        raise ValueError("solver requires a connected graph")
    t = _solve(g, k, budget)
    full = (1 << g.n) - 1
    return any(w == full for w in t.win_cop)


def k_copwin_placement(g: Graph, k: int, budget: int = DEFAULT_STATE_BUDGET):
    """A winning initial placement (lex-smallest multiset), or None."""
    if not is_connected(g):
        raise ValueError("solver requires a connected graph")
    t = _solve(g, k, budget)
    full = (1 << g.n) - 1
    for ci, w in enumerate(t.win_cop):
        if w == full:
            return t.msets[ci]
    return None


def cop_number(g: Graph, k_max: int, budget: int = DEFAULT_STATE_BUDGET):
    """Least k <= k_max with is_k_copwin, else None (exceeds k_max)."""
    for k in range(1, k_max + 1):
        if is_k_copwin(g, k, budget):
            return k
    return None


def is_dismantlable(g: Graph) -> tuple[bool, list[int]]:
    """Corner-elimination test for cop number 1 (classical characterization).

    A corner is a vertex whose closed neighborhood is contained in another
    vertex's closed neighborhood; repeatedly remove the lowest-id corner.
    Returns (emptied, elimination order).
    """
    alive = (1 << g.n) - 1
    closed = [g.closed_neighbor_mask(v) for v in range(g.n)]
    order: list[int] = []
    while alive:
        if alive.bit_count() == 1:
            order.append(alive.bit_length() - 1)
            return True, order
        corner = None
        scan = alive
        while scan and corner is None:
            low = scan & -scan
            v = low.bit_length() - 1
            scan ^= low
            cv = closed[v] & alive
            others = alive ^ low
            while others:
                lo2 = others & -others
                u = lo2.bit_length() - 1
                others ^= lo2
                if cv & ~(closed[u] & alive) == 0:
                    corner = v
                    break
        if corner is None:
            return False, order
        order.append(corner)
        alive &= ~(1 << corner)
    return True, order


class SolverCop:
    """Optimal cop strategy extracted from the retrograde tables.

    From a winning cops-to-move state it plays the successor minimizing
    (first-won sweep of the resulting robber state, successor multiset),
    which strictly decreases the sweep level and therefore forces capture.
    """

    name = "solver-optimal"

    def __init__(self, g: Graph, k: int, budget: int = DEFAULT_STATE_BUDGET):
        if not is_connected(g):
            raise ValueError("solver requires a connected graph")
        self._tables = _solve(g, k, budget)
        self._k = k
        full = (1 << g.n) - 1
        placement = None
        for ci, w in enumerate(self._tables.win_cop):
            if w == full:
                placement = self._tables.msets[ci]
                break
        if placement is None:
            raise ValueError(f"{k} cops do not win on this graph")
        self._placement = placement

    def place(self, g, cfg):
        if cfg.cop_count != self._k:
            raise ValueError("config cop count does not match the solved tables")
        return self._placement

    def initial_state(self):
        return None

    def move(self, g, view, state):
        r = view.robber_position
        if r is None:
            raise ValueError("solver strategy needs a visible robber")
        t = self._tables
        ms = tuple(sorted(view.cop_positions))
        ci = t.index[ms]
        if (t.win_cop[ci] >> r) & 1 == 0:
            # Not a winning state (robber deviated into one we cannot punish);
            # hold position.  Unreachable when play starts from our placement.
            return view.cop_positions, state
        best = None
        best_key = None
        for cj in t.succ[ci]:
            if (t.win_rob[cj] >> r) & 1:
                key = (t.rob_level[cj][r], t.msets[cj])
                if best_key is None or key < best_key:
                    best_key = key
                    best = cj
        target = t.msets[best]
        return _realize(g, view.cop_positions, target), state


def _realize(g: Graph, current: tuple[int, ...], target_ms: tuple[int, ...]) -> tuple[int, ...]:
    """Ordered per-cop moves from `current` realizing the target multiset."""
    k = len(current)
    remaining: list[int | None] = list(target_ms)
    out: list[int | None] = [None] * k

    def bt(i: int) -> bool:
        if i == k:
            return True
        tried = set()
        for idx, tgt in enumerate(remaining):
            if tgt is None or tgt in tried:
                continue
            tried.add(tgt)
            if tgt == current[i] or tgt in g.neighbors(current[i]):
                out[i] = tgt
                remaining[idx] = None
                if bt(i + 1):
                    return True
                remaining[idx] = tgt
        return False

    if not bt(0):
        raise RuntimeError("unrealizable successor multiset (solver bug)")
    return tuple(out)
