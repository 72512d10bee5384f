"""Cop teams built from random vertex sets, scheduled by ball expansion.

The strategy samples t+1 random cop sets ``C_1..C_{t+1}`` (one cop per set
membership, standing on its home vertex).  Around the robber's start v it
peels the reachable region level by level:

  level 1:    candidate = B(v, 1),   matching radius 1,   deadline round 1
  level i:    candidate = B(A_{i-1}, 2^{i-2}), radius = deadline = 2^{i-1}

At each level the candidate set splits into a *shell* D_i that admits a
complete distance-<=radius matching into C_i (those cops walk their routes
and then hold, occupying D_i by the deadline) and a *core* A_i that does not.
The split is computed as the Hall-deficiency closure of a maximum bipartite
matching: A_i is everything reachable by alternating paths from unmatched
candidate vertices, which guarantees the complete matching on the rest.
A surviving robber is confined to A_i at deadline 2^{i-1}; when some A_s is
empty the robber is caught by round 2^{s-1}.

If a vertex has at least ``lam`` closed neighbors and C_1 intersects them,
one adjacent cop simply walks onto the robber in the first move
(immediate-capture plan).

Plan construction is pure given (graph, family, v); a failed plan is a value
(``PlanFailure``), and callers resample the family with fresh derived seeds.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .errors import ResourceLimitError
from .graph import (
    UNREACHABLE,
    Graph,
    VertexSet,
    ball,
    bfs_distances,
    diameter,
    shortest_path,
)
from .seeds import derive_seed, make_rng

__all__ = [
    "StrategyParams",
    "CopSetFamily",
    "sample_cop_sets",
    "desk_params",
    "verify_claim",
    "decompose_level",
    "LevelSplit",
    "PlanLevel",
    "CapturePlan",
    "PlanFailure",
    "build_plan",
    "ExpanderCop",
    "execute_plan",
    "make_expander_cop",
    "InvisibleExpanderCop",
    "invisible_mode",
    "InvisibleResult",
    "plan_summary",
]


@dataclass(frozen=True)
class StrategyParams:
    """Expansion factor, sampling density, level count, resampling budget."""

    lam: float
    density: float
    levels: int
    resample_limit: int = 16

    def __post_init__(self):
        if not self.lam > 1:
            raise ValueError("expansion factor must exceed 1")
        if not 0 < self.density <= 1:
            raise ValueError("density must lie in (0, 1]")
        if self.levels < 1:
            raise ValueError("need at least one level")
        if self.resample_limit < 1:
            raise ValueError("resample limit must be >= 1")


def desk_params(g: Graph, lam: float = 2.0, density: float = 0.5,
                resample_limit: int = 16) -> StrategyParams:
    """Default desk-scale parameters: levels = ceil(log2 diameter)."""
    d = diameter(g)
    if d == math.inf:
        raise ValueError("parameters need a connected graph")
    levels = max(1, math.ceil(math.log2(max(2, d))))
    return StrategyParams(lam=lam, density=density, levels=levels,
                          resample_limit=resample_limit)


@dataclass(frozen=True)
class CopSetFamily:
    """The sampled sets C_1..C_{t+1}; one cop lives on each membership."""

    sets: tuple[VertexSet, ...]
    density: float
    seed: int
    total_cops: int
    oversized: bool  # total exceeds twice its expectation

    def fingerprint(self):
        return (self.seed, self.density, tuple(s.mask for s in self.sets))


def sample_cop_sets(g: Graph, params: StrategyParams, seed: int) -> CopSetFamily:
    """t+1 independent Bernoulli(density) subsets from one seeded stream."""
    rng = make_rng(seed)
    sets = []
    for _ in range(params.levels + 1):
        mask = 0
        for v in range(g.n):
            if rng.random() < params.density:
                mask |= 1 << v
        sets.append(VertexSet(g.n, mask))
    total = sum(len(s) for s in sets)
    expected = (params.levels + 1) * params.density * g.n
    return CopSetFamily(
        sets=tuple(sets),
        density=params.density,
        seed=seed,
        total_cops=total,
        oversized=total > 2 * expected,
    )


# ---------------------------------------------------------------------------
# Exhaustive check of the sampled sets' hitting property.
# ---------------------------------------------------------------------------

def verify_claim(g: Graph, family: CopSetFamily, params: StrategyParams,
                 budget: int = 1 << 20) -> bool:
    """Brute-force over all vertex subsets A with |A| <= n/lam.

    True iff for every such A, every radius 2^i (i <= levels) at which the
    ball B(A, 2^i) has at least lam*|A| vertices, and every sampled set C_j:
    |B(A, 2^i) intersect C_j| >= |A|.
    """
    n = g.n
    if (1 << n) > budget:
        raise ResourceLimitError(f"2^{n} subsets exceed the budget of {budget}")
    radii = [1 << i for i in range(params.levels + 1)]
    single = [VertexSet.of(n, [v]) for v in range(n)]
    # union_ball[ri][mask] built by peeling the lowest bit; O(2^n) per radius
    union_balls = []
    for r in radii:
        per_vertex = [ball(g, single[v], r).mask for v in range(n)]
        table = [0] * (1 << n)
        for mask in range(1, 1 << n):
            low = mask & -mask
            table[mask] = table[mask ^ low] | per_vertex[low.bit_length() - 1]
        union_balls.append(table)
    set_masks = [s.mask for s in family.sets]
    amax = n / params.lam
    for mask in range(1, 1 << n):
        a = mask.bit_count()
        if a > amax:
            continue
        for table in union_balls:
            bmask = table[mask]
            if bmask.bit_count() >= params.lam * a:
                for smask in set_masks:
                    if (bmask & smask).bit_count() < a:
                        return False
    return True


# ---------------------------------------------------------------------------
# Maximum bipartite matching (Hopcroft-Karp) and the deficiency split.
# ---------------------------------------------------------------------------

def _hopcroft_karp(left: list[int], adj: dict[int, list[int]]) -> dict[int, int]:
    """Deterministic maximum matching; adjacency lists must be sorted."""
    INF = math.inf
    pair_l: dict[int, int] = {}
    pair_r: dict[int, int] = {}
    dist: dict[int, float] = {}

    def bfs() -> bool:
        q = deque()
        for u in left:
            if u not in pair_l:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = INF
        found = False
        while q:
            u = q.popleft()
            for w in adj[u]:
                u2 = pair_r.get(w)
                if u2 is None:
                    found = True
                elif dist[u2] == INF:
                    dist[u2] = dist[u] + 1
                    q.append(u2)
        return found

    def dfs(u: int) -> bool:
        for w in adj[u]:
            u2 = pair_r.get(w)
            if u2 is None or (dist[u2] == dist[u] + 1 and dfs(u2)):
                pair_l[u] = w
                pair_r[w] = u
                return True
        dist[u] = INF
        return False

    while bfs():
        for u in left:
            if u not in pair_l:
                dfs(u)
    return pair_l


@dataclass(frozen=True)
class LevelSplit:
    core: VertexSet                     # A: Hall-deficiency closure
    shell: VertexSet                    # D: completely matched remainder
    matching: dict                      # shell vertex -> cop home vertex
    routes: dict                        # shell vertex -> path home..shell


def decompose_level(g: Graph, candidate: VertexSet, cops_available: VertexSet,
                    radius: int, lam: float) -> LevelSplit:
    """Split `candidate` into a matchable shell and a deficiency core.

    Every shell vertex is assigned a distinct cop home within `radius`,
    with the connecting geodesic recorded.  `lam` only scales the logged
    expansion diagnostics; the split itself is purely matching-theoretic.
    """
    if not candidate:
        raise ValueError("candidate set must be nonempty")
    del lam  # recorded by callers via growth diagnostics
    return _decompose(g, candidate, cops_available, radius, {})


def _decompose(g, candidate, cops_available, radius, dist_cache):
    cand = sorted(candidate)
    cops = sorted(cops_available)
    adj = {}
    for u in cand:
        row = dist_cache.get(u)
        if row is None:
            row = bfs_distances(g, VertexSet.of(g.n, [u]))
            dist_cache[u] = row
        adj[u] = [w for w in cops if row[w] != UNREACHABLE and row[w] <= radius]
    matching = _hopcroft_karp(cand, adj)
    matched_by = {w: u for u, w in matching.items()}
    core = set(u for u in cand if u not in matching)
    q = deque(core)
    seen_right = set()
    while q:
        u = q.popleft()
        for w in adj[u]:
            if w in seen_right:
                continue
            seen_right.add(w)
            u2 = matched_by.get(w)
            if u2 is not None and u2 not in core:
                core.add(u2)
                q.append(u2)
    shell = [u for u in cand if u not in core]
    routes = {u: tuple(shortest_path(g, matching[u], u)) for u in shell}
    return LevelSplit(
        core=VertexSet.of(g.n, core),
        shell=VertexSet.of(g.n, shell),
        matching={u: matching[u] for u in shell},
        routes=routes,
    )


# ---------------------------------------------------------------------------
# Plans.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PlanLevel:
    index: int
    candidate: VertexSet
    core: VertexSet
    shell: VertexSet
    matching: dict
    routes: dict
    radius: int
    deadline: int


@dataclass(frozen=True)
class GrowthRecord:
    """Per-level expansion bookkeeping (diagnostic, not an invariant)."""

    level: int
    core_size: int
    ball_size: int
    lam_cap: float
    lam_cap_held: bool


@dataclass(frozen=True)
class CapturePlan:
    kind: str                     # "immediate" | "levels"
    start_vertex: int
    levels: tuple[PlanLevel, ...]
    terminal_level: int
    capture_deadline: int
    family_fingerprint: tuple
    immediate_home: int | None = None
    immediate_route: tuple | None = None
    growth: tuple[GrowthRecord, ...] = ()


@dataclass(frozen=True)
class PlanFailure:
    reason: str
    start_vertex: int
    levels: tuple[PlanLevel, ...]
    growth: tuple[GrowthRecord, ...] = ()


def build_plan(g: Graph, v: int, family: CopSetFamily, params: StrategyParams):
    """Level decomposition around robber start v; Failure is a value."""
    if not 0 <= v < g.n:
        raise ValueError("robber vertex outside range")
    if len(family.sets) != params.levels + 1:
        raise ValueError("family size does not match the level count")
    fp = family.fingerprint()
    b1 = ball(g, VertexSet.of(g.n, [v]), 1)
    hit = b1 & family.sets[0]
    if len(b1) >= params.lam and hit:
        w = min(hit)
        return CapturePlan(
            kind="immediate",
            start_vertex=v,
            levels=(),
            terminal_level=1,
            capture_deadline=1,
            family_fingerprint=fp,
            immediate_home=w,
            immediate_route=tuple(shortest_path(g, w, v)),
        )
    dist_cache: dict = {}
    levels: list[PlanLevel] = []
    growth: list[GrowthRecord] = []
    candidate = b1
    for i in range(1, params.levels + 2):
        radius = 1 << (i - 1)
        split = _decompose(g, candidate, family.sets[i - 1], radius, dist_cache)
        levels.append(PlanLevel(
            index=i,
            candidate=candidate,
            core=split.core,
            shell=split.shell,
            matching=split.matching,
            routes=split.routes,
            radius=radius,
            deadline=radius,
        ))
        if not split.core:
            return CapturePlan(
                kind="levels",
                start_vertex=v,
                levels=tuple(levels),
                terminal_level=i,
                capture_deadline=radius,
                family_fingerprint=fp,
                growth=tuple(growth),
            )
        if i == params.levels + 1:
            break
        nxt = ball(g, split.core, radius)
        cap = params.lam * len(split.core)
        growth.append(GrowthRecord(
            level=i,
            core_size=len(split.core),
            ball_size=len(nxt),
            lam_cap=cap,
            lam_cap_held=len(nxt) <= cap,
        ))
        candidate = nxt
    return PlanFailure(
        reason="levels-exhausted",
        start_vertex=v,
        levels=tuple(levels),
        growth=tuple(growth),
    )


# ---------------------------------------------------------------------------
# Engine strategies.
# ---------------------------------------------------------------------------

def _family_roster(family: CopSetFamily) -> list[tuple[int, int]]:
    """One cop per set membership: (set index, home vertex), stable order."""
    return [(j, w) for j, s in enumerate(family.sets) for w in sorted(s)]


def _plan_scripts(g: Graph, plan: CapturePlan, roster) -> tuple[tuple[int, ...], ...]:
    """Per-cop walk: position at round r is script[min(r, len-1)]."""
    scripts = []
    if plan.kind == "immediate":
        for j, w in roster:
            if j == 0 and w == plan.immediate_home:
                scripts.append(tuple(plan.immediate_route))
            else:
                scripts.append((w,))
        return tuple(scripts)
    by_level: dict[tuple[int, int], tuple[int, ...]] = {}
    for lv in plan.levels:
        for u, w in lv.matching.items():
            by_level[(lv.index - 1, w)] = lv.routes[u]
    for j, w in roster:
        scripts.append(tuple(by_level.get((j, w), (w,))))
    return tuple(scripts)


class ExpanderCop:
    """Scripted cop team: reads the robber's placement, then walks its plan.

    Requires a visible robber on the first move only; the walk itself never
    consults the robber again.
    """

    name = "expander"

    def __init__(self, g: Graph, family: CopSetFamily, plans: dict):
        self._family = family
        self._roster = _family_roster(family)
        self._homes = tuple(w for _, w in self._roster)
        self._scripts = {}
        for v, plan in plans.items():
            if isinstance(plan, CapturePlan):
                if plan.family_fingerprint != family.fingerprint():
                    raise ValueError("plan was built from a different family")
                self._scripts[v] = _plan_scripts(g, plan, self._roster)
        self.plans = dict(plans)

    @property
    def cop_count(self) -> int:
        return len(self._homes)

    def place(self, g, cfg):
        if cfg.cop_count != len(self._homes):
            raise ValueError(f"strategy fields {len(self._homes)} cops")
        return self._homes

    def initial_state(self):
        return None

    def move(self, g, view, state):
        v = state
        if v is None:
            if view.robber_position is None:
                raise ValueError("expander cops read the robber placement once")
            v = view.robber_position
        scripts = self._scripts.get(v)
        if scripts is None:
            return view.cop_positions, v  # no plan for this start: hold
        r = view.round
        return tuple(s[min(r, len(s) - 1)] for s in scripts), v


def execute_plan(g: Graph, plan: CapturePlan, family: CopSetFamily) -> ExpanderCop:
    """Engine strategy walking one successful plan (for its start vertex)."""
    if not isinstance(plan, CapturePlan):
        raise ValueError("cannot execute a failed plan")
    return ExpanderCop(g, family, {plan.start_vertex: plan})


def make_expander_cop(g: Graph, params: StrategyParams, seed: int):
    """Resample families until one yields a successful plan for every start.

    Returns (strategy, family, plans, attempts); raises PlanningError-style
    ValueError if the resample limit is exhausted.
    """
    last_failures = None
    for attempt in range(params.resample_limit):
        family = sample_cop_sets(g, params, derive_seed(seed, f"family:{attempt}"))
        plans = {v: build_plan(g, v, family, params) for v in range(g.n)}
        if all(isinstance(p, CapturePlan) for p in plans.values()):
            return ExpanderCop(g, family, plans), family, plans, attempt + 1
        last_failures = sum(isinstance(p, PlanFailure) for p in plans.values())
    raise ValueError(
        f"no family produced plans for every start within {params.resample_limit} "
        f"resamples (last attempt failed on {last_failures} starts)"
    )


# ---------------------------------------------------------------------------
# Invisible-robber mode: guess, walk the plan, walk home, repeat.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Phase:
    guess: int
    planned: bool
    first_round: int
    last_round: int  # < first_round when the phase spans no rounds


class InvisibleExpanderCop:
    """Fully pre-scripted cop team that never reads the robber's position."""

    name = "expander-invisible"

    def __init__(self, g: Graph, family: CopSetFamily, params: StrategyParams,
                 seed: int, max_repeats: int):
        self._roster = _family_roster(family)
        self._homes = tuple(w for _, w in self._roster)
        rng = make_rng(seed, "guesses")
        tracks: list[list[int]] = [[w] for w in self._homes]
        phases: list[_Phase] = []
        self.guesses: list[int] = []
        plan_cache: dict[int, object] = {}
        for _ in range(max_repeats):
            guess = rng.randrange(g.n)
            self.guesses.append(guess)
            plan = plan_cache.get(guess)
            if plan is None:
                plan = build_plan(g, guess, family, params)
                plan_cache[guess] = plan
            start = len(tracks[0])  # next round index to be filled
            if isinstance(plan, PlanFailure):
                phases.append(_Phase(guess, False, start, start - 1))
                continue
            scripts = _plan_scripts(g, plan, self._roster)
            t_len = plan.capture_deadline
            for track, s in zip(tracks, scripts):
                for r in range(1, t_len + 1):
                    track.append(s[min(r, len(s) - 1)])
                back = list(reversed(s))
                for r in range(1, t_len + 1):
                    track.append(back[min(r, len(back) - 1)])
            phases.append(_Phase(guess, True, start, start + 2 * t_len - 1))
        self._tracks = tuple(tuple(t) for t in tracks)
        self.phases = tuple(phases)
        self.script_rounds = len(tracks[0]) - 1

    def place(self, g, cfg):
        if cfg.cop_count != len(self._homes):
            raise ValueError(f"strategy fields {len(self._homes)} cops")
        return self._homes

    def initial_state(self):
        return None

    def move(self, g, view, state):
        r = view.round
        return tuple(t[min(r, len(t) - 1)] for t in self._tracks), state

    def repeats_until(self, capture_round: int) -> int:
        """How many guesses were consumed by the time of capture."""
        return sum(1 for ph in self.phases if ph.first_round <= capture_round)


@dataclass(frozen=True)
class InvisibleResult:
    transcript: object
    caught: bool
    repeats: int
    guesses: tuple[int, ...]


def invisible_mode(g: Graph, family: CopSetFamily, params: StrategyParams,
                   seed: int, max_repeats: int, robber=None,
                   max_rounds: int | None = None) -> InvisibleResult:
    """Play the guess-and-sweep loop against an invisible robber."""
    from .engine import GameConfig, GreedyFarRobber, play

    if family.total_cops == 0:
        raise ValueError("family has no cops to field")
    cop = InvisibleExpanderCop(g, family, params, seed, max_repeats)
    if robber is None:
        robber = GreedyFarRobber()
    rounds = max_rounds if max_rounds is not None else max(1, cop.script_rounds + g.n + 1)
    cfg = GameConfig(
        cop_count=family.total_cops,
        max_rounds=rounds,
        robber_visible=False,
        seed=seed,
    )
    transcript = play(g, cop, robber, cfg)
    caught = transcript.caught
    if caught:
        repeats = cop.repeats_until(transcript.outcome.round)
    else:
        repeats = max_repeats
    return InvisibleResult(
        transcript=transcript,
        caught=caught,
        repeats=repeats,
        guesses=tuple(cop.guesses),
    )


def plan_summary(plan, family: CopSetFamily) -> dict:
    """JSON-ready overview: set sizes, level sizes, terminal level, deadlines."""
    doc = {
        "set_sizes": [len(s) for s in family.sets],
        "total_cops": family.total_cops,
        "oversized": family.oversized,
        "start_vertex": plan.start_vertex,
    }
    if isinstance(plan, PlanFailure):
        doc["outcome"] = "failure"
        doc["reason"] = plan.reason
    else:
        doc["outcome"] = "plan"
        doc["kind"] = plan.kind
        doc["terminal_level"] = plan.terminal_level
        doc["capture_deadline"] = plan.capture_deadline
    doc["levels"] = [
        {
            "index": lv.index,
            "candidate": len(lv.candidate),
            "core": len(lv.core),
            "shell": len(lv.shell),
            "radius": lv.radius,
            "deadline": lv.deadline,
        }
        for lv in plan.levels
    ]
    doc["growth"] = [
        {
            "level": gr.level,
            "core_size": gr.core_size,
            "ball_size": gr.ball_size,
            "lam_cap": gr.lam_cap,
            "lam_cap_held": gr.lam_cap_held,
        }
        for gr in getattr(plan, "growth", ())
    ]
    return doc
