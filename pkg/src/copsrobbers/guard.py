"""One cop guarding a geodesic.

The guard projects the robber onto the path P = p_0..p_L through the
*shadow* index j = min(d(p_0, r), L).  Because d(p_0, .) changes by at most
one per robber move, the shadow is 1-Lipschitz, so a cop standing on the
shadow can keep standing on it forever; a robber stepping onto P then stands
on its own shadow and is caught by the next cop move.

The approach phase is pinned as follows: off the path, step along a shortest
route toward p_0 (lowest-id tie-break); once on the path, step toward the
current shadow index.  Both kinds of step are shortest-route steps toward a
path target, and the second is a one-dimensional pursuit that must close
because the shadow is trapped in [0, L].  Together they settle within
diameter(g) + L rounds, the bound exported by :func:`settle_bound`.
(A naive "always chase the current shadow" cop can loop forever on even
cycles when distance ties flip its direction, which is why the p_0 anchor is
part of the construction.)
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    UNREACHABLE,
    Graph,
    VertexSet,
    bfs_distances,
    diameter,
)

__all__ = [
    "PHASE_APPROACHING",
    "PHASE_GUARDING",
    "GuardState",
    "shadow",
    "guard_step",
    "settle_bound",
    "GuardCop",
    "check_guard_soundness",
]

PHASE_APPROACHING = "approaching"
PHASE_GUARDING = "guarding"


@dataclass(frozen=True)
class GuardState:
    path: tuple[int, ...]
    phase: str
    cop_position: int


class _GuardContext:
    """Precomputed data for one guarded geodesic: d(p_0, .) and path indices."""

    __slots__ = ("path", "length", "index_of", "dist0")

    def __init__(self, g: Graph, path):
        path = tuple(path)
        if not path:
            raise ValueError("path must be nonempty")
        for a, b in zip(path, path[1:]):
            if b not in g.neighbors(a):
                raise ValueError(f"path step {a}->{b} is not an edge")
        if len(set(path)) != len(path):
            raise ValueError("path revisits a vertex")
        self.path = path
        self.length = len(path) - 1
        self.index_of = {v: i for i, v in enumerate(path)}
        self.dist0 = bfs_distances(g, VertexSet.of(g.n, [path[0]]))
        if self.dist0[path[-1]] != self.length:
            raise ValueError("path is not a geodesic")

    def shadow_index(self, r: int) -> int:
        d = self.dist0[r]
        if d == UNREACHABLE:
            raise ValueError(f"vertex {r} is not connected to the path")
        return min(d, self.length)

    def move(self, g: Graph, cop: int, robber: int, strict: bool = True) -> int:
        # Capture dominates everything else.
        if robber == cop or robber in g.neighbors(cop):
            return robber
        if self.dist0[robber] == UNREACHABLE:
            if strict:
                raise ValueError(f"robber at {robber} is outside the guarded component")
            return cop  # composite strategies: hold, another guard handles it
        j = self.shadow_index(robber)
        i = self.index_of.get(cop)
        if i is not None:
            if i == j:
                return cop
            return self.path[i + (1 if j > i else -1)]
        d = self.dist0[cop]
        if d == UNREACHABLE:
            raise ValueError(f"cop at {cop} is not connected to the path")
        for w in g.neighbors(cop):  # sorted, so lowest id wins ties
            if self.dist0[w] == d - 1:
                return w
        raise AssertionError("BFS distance field has no descent step")


def shadow(g: Graph, path, r: int) -> int:
    """Shadow index of r on the geodesic `path` (checked)."""
    return _GuardContext(g, path).shadow_index(r)


def guard_step(g: Graph, gs: GuardState, robber: int | None):
    """One guard move; returns (cop move, updated GuardState)."""
    if robber is None:
        raise ValueError("guard requires a visible robber")
    ctx = _GuardContext(g, gs.path)
    move = ctx.move(g, gs.cop_position, robber)
    phase = gs.phase
    if phase != PHASE_GUARDING:
        idx = ctx.index_of.get(move)
        if idx is not None and idx == ctx.shadow_index(robber):
            phase = PHASE_GUARDING
    return move, GuardState(path=gs.path, phase=phase, cop_position=move)


def settle_bound(g: Graph, path) -> int:
    """Rounds after which this guard is guaranteed to be in guarding phase."""
    ctx = _GuardContext(g, path)
    d = diameter(g)
    if d == float("inf"):
        raise ValueError("settle bound requires a connected graph")
    return int(d) + ctx.length


class GuardCop:
    """Engine strategy wrapper around the guard rule (one cop)."""

    name = "guard"

    def __init__(self, g: Graph, path, start: int | None = None):
        self._ctx = _GuardContext(g, path)
        self._start = self._ctx.path[0] if start is None else start

    @property
    def path(self):
        return self._ctx.path

    def place(self, g, cfg):
        if cfg.cop_count != 1:
            raise ValueError("the guard is a single-cop strategy")
        return (self._start,)

    def initial_state(self):
        return None

    def move(self, g, view, state):
        r = view.robber_position
        if r is None:
            raise ValueError("guard requires a visible robber")
        return (self._ctx.move(g, view.cop_positions[0], r),), state


def check_guard_soundness(g: Graph, path, cfg=None, extra_rounds: int = 4, start=None) -> dict:
    """Exhaustively verify the guard promise over every robber line.

    Checks, across all robber behaviors up to settle_bound + extra_rounds:
      * at every cop half-move from round settle_bound on, the cop stands on
        the robber's shadow (or has captured) -- the invariant whose
        persistence the Lipschitz property guarantees;
      * any robber standing on the path after settle_bound is captured on the
        following cop half-move.

    Returns a report dict with a (hopefully empty) violation list.
    """
    from .engine import GameConfig, expand_game_layers

    ctx = _GuardContext(g, path)
    bound = settle_bound(g, path)
    depth = bound + max(2, extra_rounds)
    if cfg is None:
        cfg = GameConfig(cop_count=1, max_rounds=depth, robber_visible=True, seed=0)
    cop = GuardCop(g, path, start=start)
    _, _, layers = expand_game_layers(g, cop, cfg, depth)

    violations = []
    states = 0
    for k in range(depth):
        for node, rec in layers[k].items():
            if rec is None:
                continue
            states += 1
            _, r_pos, _ = node
            cop_after = rec.moves[0]
            if k + 1 >= bound and not rec.caught_cop_half:
                if cop_after != ctx.path[ctx.shadow_index(r_pos)]:
                    violations.append(
                        {"round": k + 1, "robber": r_pos, "cop": cop_after, "kind": "off-shadow"}
                    )
            if k >= bound and r_pos in ctx.index_of and not rec.caught_cop_half:
                violations.append(
                    {"round": k, "robber": r_pos, "cop": cop_after, "kind": "uncaught-on-path"}
                )
    return {
        "path": list(ctx.path),
        "settle_bound": bound,
        "depth": depth,
        "states_checked": states,
        "violations": violations,
    }
