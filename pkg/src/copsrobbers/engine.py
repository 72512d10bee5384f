"""Game mechanics: placement, alternating moves with cops first, capture.

A *round* is one cop half-move followed by one robber half-move.  Capture is
checked after each half-move: a cop stepping onto the robber wins, and so does
the robber stepping onto a cop.  Round 0 is placement (cops first, then the
robber, who sees the cop placement).

Strategies are deterministic functions of the visible history.  Cop
strategies use an explicit functional state so games can be replayed and the
exhaustive robber adversary can memoize:

    place(g, cfg)              -> tuple of k start vertices
    initial_state()            -> hashable state after placement
    move(g, view, state)       -> (tuple of k moves, new state)   # pure

``view.robber_position`` is ``None`` when the config hides the robber.
Robber strategies receive a full view plus the engine-owned RNG:

    place(g, cop_positions, cfg, rng) -> vertex
    move(g, view, rng)                -> vertex
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import StrategyFault
from .graph import (
    UNREACHABLE,
    Graph,
    VertexSet,
    bfs_distances,
    graph_hash,
    is_connected,
)
from .seeds import make_rng

__all__ = [
    "GameConfig",
    "View",
    "GameState",
    "Outcome",
    "Transcript",
    "transcript_states",
    "play",
    "adversarial_robber_search",
    "expand_game_layers",
    "robber_greedy_far",
    "robber_random",
    "GreedyFarRobber",
    "RandomRobber",
    "HoldCop",
    "ChaserCop",
    "validate_transcript",
    "transcript_to_json",
    "TRANSCRIPT_SCHEMA",
]

TRANSCRIPT_SCHEMA = "copsrobbers.transcript/1"


@dataclass(frozen=True)
class GameConfig:
    cop_count: int
    max_rounds: int
    robber_visible: bool = True
    seed: int = 0

    def __post_init__(self):
        if self.cop_count < 1:
            raise ValueError("need at least one cop")
        if self.max_rounds < 1:
            raise ValueError("need at least one round")


@dataclass(frozen=True)
class View:
    """What a strategy sees when asked to move."""

    round: int
    cop_positions: tuple[int, ...]
    robber_position: int | None


@dataclass(frozen=True)
class GameState:
    """A full game position: cops (duplicates allowed), robber, whose turn.

    ``robber_position`` is None only before the robber has placed.
    """

    cop_positions: tuple[int, ...]
    robber_position: int | None
    round: int
    to_move: str  # "cops" | "robber"


def transcript_states(t: "Transcript"):
    """The sequence of GameStates a transcript passes through."""
    states = [GameState(t.cop_placement, None, 0, "robber")]
    cop_pos = t.cop_placement
    states.append(GameState(cop_pos, t.robber_placement, 0, "cops"))
    r_pos = t.robber_placement
    for idx, (moves, r_move) in enumerate(t.rounds):
        rnd = idx + 1
        cop_pos = moves
        states.append(GameState(cop_pos, r_pos, rnd, "robber"))
        if r_move is not None:
            r_pos = r_move
            states.append(GameState(cop_pos, r_pos, rnd, "cops"))
    return states


@dataclass(frozen=True)
class Outcome:
    kind: str  # "caught" | "robber_wins"
    round: int  # capture round, or the cutoff round count


@dataclass(frozen=True)
class Transcript:
    graph_hash: str
    config: GameConfig
    cop_strategy: str
    robber_strategy: str
    cop_placement: tuple[int, ...]
    robber_placement: int
    rounds: tuple[tuple[tuple[int, ...], int | None], ...]
    outcome: Outcome

    @property
    def caught(self) -> bool:
        return self.outcome.kind == "caught"


def _legal_move(g: Graph, src: int, dst: int) -> bool:
    return dst == src or dst in g.neighbors(src)


def _check_cop_moves(g, prev, moves, k, rnd):
    if len(moves) != k:
        raise StrategyFault("cops", rnd, f"returned {len(moves)} moves for {k} cops")
    for i, (a, b) in enumerate(zip(prev, moves)):
        if not (0 <= b < g.n) or not _legal_move(g, a, b):
            raise StrategyFault("cops", rnd, f"cop {i} illegal move {a}->{b}")


def play(g: Graph, cops, robber, cfg: GameConfig) -> Transcript:
    """Run one full game; deterministic given strategies and cfg.seed."""
    if not is_connected(g):
        raise ValueError("play requires a connected graph")
    placement = tuple(cops.place(g, cfg))
    if len(placement) != cfg.cop_count or not all(0 <= v < g.n for v in placement):
        raise StrategyFault("cops", 0, f"bad placement {placement}")
    cop_pos = placement
    state = cops.initial_state()
    rng = make_rng(cfg.seed, "robber")
    r_start = robber.place(g, cop_pos, cfg, rng)
    if not 0 <= r_start < g.n:
        raise StrategyFault("robber", 0, f"bad placement {r_start}")
    r_pos = r_start

    rounds: list[tuple[tuple[int, ...], int | None]] = []
    outcome = None
    if r_pos in cop_pos:
        outcome = Outcome("caught", 0)
    else:
        for rnd in range(1, cfg.max_rounds + 1):
            cop_view = View(
                round=rnd,
                cop_positions=cop_pos,
                robber_position=r_pos if cfg.robber_visible else None,
            )
            moves, state = cops.move(g, cop_view, state)
            moves = tuple(moves)
            _check_cop_moves(g, cop_pos, moves, cfg.cop_count, rnd)
            cop_pos = moves
            if r_pos in cop_pos:
                rounds.append((moves, None))
                outcome = Outcome("caught", rnd)
                break
            r_view = View(round=rnd, cop_positions=cop_pos, robber_position=r_pos)
            m = robber.move(g, r_view, rng)
            if not (0 <= m < g.n) or not _legal_move(g, r_pos, m):
                raise StrategyFault("robber", rnd, f"illegal move {r_pos}->{m}")
            r_pos = m
            rounds.append((moves, m))
            if r_pos in cop_pos:
                outcome = Outcome("caught", rnd)
                break
        if outcome is None:
            outcome = Outcome("robber_wins", cfg.max_rounds)

    return Transcript(
        graph_hash=graph_hash(g),
        config=cfg,
        cop_strategy=getattr(cops, "name", type(cops).__name__),
        robber_strategy=getattr(robber, "name", type(robber).__name__),
        cop_placement=placement,
        robber_placement=r_start,
        rounds=tuple(rounds),
        outcome=outcome,
    )


# ---------------------------------------------------------------------------
# Exhaustive robber adversary.
#
# Against a deterministic cop strategy the game tree branches only on robber
# choices, so the reachable positions form per-round layers of states
# (cop positions, robber position, cop strategy state).  A forward expansion
# with per-layer memoization followed by backward induction finds, for every
# line, the latest capture the robber can force.
# ---------------------------------------------------------------------------

class _Trans(NamedTuple):
    moves: tuple[int, ...]
    state2: object
    caught_cop_half: bool
    children: dict  # robber move -> ("caught" | node key)


def expand_game_layers(g: Graph, cops, cfg: GameConfig, depth: int):
    """Forward-expand all robber lines to the given depth.

    Returns (placement, initial_state, layers) where layers[k] maps node keys
    ``(cop_positions, robber_position, strategy_state)`` -- robber alive after
    round k -- to their outgoing transition record.
    """
    if depth > cfg.max_rounds:
        raise ValueError("depth must not exceed cfg.max_rounds")
    placement = tuple(cops.place(g, cfg))
    if len(placement) != cfg.cop_count:
        raise StrategyFault("cops", 0, f"bad placement {placement}")
    s0 = cops.initial_state()
    layers: list[dict] = [
        {
            (placement, r0, s0): None
            for r0 in range(g.n)
            if r0 not in placement
        }
    ]
    for k in range(depth):
        frontier = layers[k]
        nxt: dict = {}
        for node in frontier:
            cop_pos, r_pos, st = node
            view = View(
                round=k + 1,
                cop_positions=cop_pos,
                robber_position=r_pos if cfg.robber_visible else None,
            )
            moves, st2 = cops.move(g, view, st)
            again = cops.move(g, view, st)
            if (tuple(moves), st2) != (tuple(again[0]), again[1]):
                raise StrategyFault("cops", k + 1, "nondeterministic strategy detected")
            moves = tuple(moves)
            _check_cop_moves(g, cop_pos, moves, cfg.cop_count, k + 1)
            if r_pos in moves:
                frontier[node] = _Trans(moves, st2, True, {})
                continue
            children = {}
            for m in sorted(set(g.neighbors(r_pos)) | {r_pos}):
                if m in moves:
                    children[m] = "caught"
                else:
                    child = (moves, m, st2)
                    children[m] = child
                    if child not in nxt:
                        nxt[child] = None
            frontier[node] = _Trans(moves, st2, False, children)
        layers.append(nxt)
    return placement, s0, layers


def adversarial_robber_search(g: Graph, cops, cfg: GameConfig, depth: int) -> Transcript:
    """Worst-case robber line against a deterministic cop strategy.

    The returned transcript follows the robber line that survives longest
    (ties broken toward the lowest-id move); the outcome is ``caught`` only
    if every robber line is caught within ``depth`` rounds.
    """
    placement, s0, layers = expand_game_layers(g, cops, cfg, depth)

    # value[node] = round of capture under best play from here, or None if
    # the robber survives to the depth cutoff.
    INF = math.inf
    values: list[dict] = [dict() for _ in range(depth + 1)]
    for node in layers[depth]:
        values[depth][node] = None
    best_moves: list[dict] = [dict() for _ in range(depth)]
    for k in range(depth - 1, -1, -1):
        for node, rec in layers[k].items():
            if rec is None:  # layer tail beyond expansion (depth reached)
                continue
            if rec.caught_cop_half:
                values[k][node] = k + 1
                continue
            best_val, best_m = -1, None
            for m, child in rec.children.items():  # insertion order: ascending m
                v = k + 1 if child == "caught" else values[k + 1][child]
                vk = INF if v is None else v
                if vk > best_val:
                    best_val, best_m = vk, m
            values[k][node] = None if best_val == INF else int(best_val)
            best_moves[k][node] = best_m

    # Robber chooses the placement maximizing survival; placing onto a cop
    # (value 0) is dominated but legal, and is the only option when cops
    # cover every vertex.
    best_val, best_r0 = -1, 0
    for r0 in range(g.n):
        if r0 in placement:
            v = 0
        else:
            v = values[0][(placement, r0, s0)]
        vk = INF if v is None else v
        if vk > best_val:
            best_val, best_r0 = vk, r0

    rounds: list[tuple[tuple[int, ...], int | None]] = []
    if best_r0 in placement:
        outcome = Outcome("caught", 0)
    else:
        node = (placement, best_r0, s0)
        outcome = None
        for k in range(depth):
            rec = layers[k][node]
            if rec.caught_cop_half:
                rounds.append((rec.moves, None))
                outcome = Outcome("caught", k + 1)
                break
            m = best_moves[k][node]
            rounds.append((rec.moves, m))
            if rec.children[m] == "caught":
                outcome = Outcome("caught", k + 1)
                break
            node = rec.children[m]
        if outcome is None:
            outcome = Outcome("robber_wins", depth)

    return Transcript(
        graph_hash=graph_hash(g),
        config=cfg,
        cop_strategy=getattr(cops, "name", type(cops).__name__),
        robber_strategy="adversarial-search",
        cop_placement=placement,
        robber_placement=best_r0,
        rounds=tuple(rounds),
        outcome=outcome,
    )


# ---------------------------------------------------------------------------
# Baseline robbers.
# ---------------------------------------------------------------------------

def robber_greedy_far(g: Graph, view: View) -> int:
    """Move (or stay) maximizing the min-distance to the cops; ties -> lowest id."""
    dist = bfs_distances(g, VertexSet.of(g.n, set(view.cop_positions)))
    r = view.robber_position
    best_v, best_d = None, -1.0
    for m in sorted(set(g.neighbors(r)) | {r}):
        d = math.inf if dist[m] == UNREACHABLE else dist[m]
        if d > best_d:
            best_v, best_d = m, d
    return best_v


def robber_random(g: Graph, view: View, rng) -> int:
    """Uniform choice among legal moves (neighbors and staying put)."""
    return rng.choice(sorted(set(g.neighbors(view.robber_position)) | {view.robber_position}))


class GreedyFarRobber:
    name = "greedy-far"

    def place(self, g, cop_positions, cfg, rng):
        dist = bfs_distances(g, VertexSet.of(g.n, set(cop_positions)))
        best_v, best_d = 0, -1.0
        for v in range(g.n):
            d = math.inf if dist[v] == UNREACHABLE else dist[v]
            if d > best_d:
                best_v, best_d = v, d
        return best_v

    def move(self, g, view, rng):
        return robber_greedy_far(g, view)


class RandomRobber:
    name = "random"

    def place(self, g, cop_positions, cfg, rng):
        free = [v for v in range(g.n) if v not in cop_positions]
        return rng.choice(free) if free else rng.randrange(g.n)

    def move(self, g, view, rng):
        return robber_random(g, view, rng)


# ---------------------------------------------------------------------------
# Baseline cops.
# ---------------------------------------------------------------------------

class HoldCop:
    """Cops that never move; useful as a test fixture."""

    name = "hold"

    def __init__(self, placement: Iterable[int]):
        self._placement = tuple(placement)

    def place(self, g, cfg):
        return self._placement

    def initial_state(self):
        return None

    def move(self, g, view, state):
        return view.cop_positions, state


class ChaserCop:
    """Every cop steps along a shortest path toward the visible robber."""

    name = "chaser"

    def __init__(self, placement: Iterable[int] | None = None):
        self._placement = None if placement is None else tuple(placement)

    def place(self, g, cfg):
        if self._placement is not None:
            return self._placement
        return tuple([0] * cfg.cop_count)

    def initial_state(self):
        return None

    def move(self, g, view, state):
        r = view.robber_position
        if r is None:
            raise ValueError("chaser needs a visible robber")
        dist = bfs_distances(g, VertexSet.of(g.n, [r]))
        moves = []
        for c in view.cop_positions:
            best_v, best_d = c, dist[c]
            for w in g.neighbors(c):
                if dist[w] != UNREACHABLE and (best_d == UNREACHABLE or dist[w] < best_d):
                    best_v, best_d = w, dist[w]
            moves.append(best_v)
        return tuple(moves), state


# ---------------------------------------------------------------------------
# Independent legality validation and serialization.
# ---------------------------------------------------------------------------

def validate_transcript(g: Graph, t: Transcript) -> None:
    """Replay a transcript against the raw graph and the stated rules.

    Raises ValueError on the first violation.  Deliberately reimplements the
    rules from the edge set up rather than reusing the engine's step logic.
    """
    edges = {frozenset(e) for e in g.edges()}

    def step_ok(a, b):
        return a == b or frozenset((a, b)) in edges

    k = t.config.cop_count
    if len(t.cop_placement) != k:
        raise ValueError("placement size does not match cop count")
    if not all(0 <= v < g.n for v in t.cop_placement):
        raise ValueError("cop placement out of range")
    if not 0 <= t.robber_placement < g.n:
        raise ValueError("robber placement out of range")

    cop_pos = t.cop_placement
    r_pos = t.robber_placement
    caught_round = None
    if r_pos in cop_pos:
        caught_round = 0
        if t.rounds:
            raise ValueError("moves recorded after a placement capture")
    for idx, (moves, r_move) in enumerate(t.rounds):
        rnd = idx + 1
        if caught_round is not None:
            raise ValueError(f"moves recorded after capture at round {caught_round}")
        if len(moves) != k:
            raise ValueError(f"round {rnd}: wrong number of cop moves")
        for a, b in zip(cop_pos, moves):
            if not step_ok(a, b):
                raise ValueError(f"round {rnd}: illegal cop move {a}->{b}")
        cop_pos = tuple(moves)
        if r_pos in cop_pos:
            if r_move is not None:
                raise ValueError(f"round {rnd}: robber moved after cop-half capture")
            caught_round = rnd
            continue
        if r_move is None:
            raise ValueError(f"round {rnd}: missing robber move without capture")
        if not step_ok(r_pos, r_move):
            raise ValueError(f"round {rnd}: illegal robber move {r_pos}->{r_move}")
        r_pos = r_move
        if r_pos in cop_pos:
            caught_round = rnd

    if t.outcome.kind == "caught":
        if caught_round != t.outcome.round:
            raise ValueError(
                f"outcome says caught at {t.outcome.round}, replay says {caught_round}"
            )
    elif t.outcome.kind == "robber_wins":
        if caught_round is not None:
            raise ValueError("outcome says robber wins but replay shows a capture")
        if len(t.rounds) != t.outcome.round:
            raise ValueError("robber_wins cutoff does not match recorded rounds")
    else:
        raise ValueError(f"unknown outcome kind {t.outcome.kind!r}")


def transcript_to_json(t: Transcript) -> str:
    """Canonical (byte-stable) JSON for a transcript."""
    doc = {
        "schema": TRANSCRIPT_SCHEMA,
        "graph_hash": t.graph_hash,
        "config": {
            "cop_count": t.config.cop_count,
            "max_rounds": t.config.max_rounds,
            "robber_visible": t.config.robber_visible,
            "seed": t.config.seed,
        },
        "cop_strategy": t.cop_strategy,
        "robber_strategy": t.robber_strategy,
        "cop_placement": list(t.cop_placement),
        "robber_placement": t.robber_placement,
        "rounds": [
            {"cops": list(moves), "robber": r_move} for moves, r_move in t.rounds
        ],
        "outcome": {"kind": t.outcome.kind, "round": t.outcome.round},
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))
