"""Deletion recursion over long geodesics, ending in an expander sweep.

Above the diameter threshold, pick two vertices realizing the (approximate)
diameter, guard the geodesic between them, treat it as deleted once the guard
has settled, and recurse on the robber's component.  At or below the
threshold, march a sampled cop family onto its home vertices inside the
component, read the robber's position and run the level-decomposition plan.

The whole object is realized inside a single engine game with a fixed pool of
cops placed up front (start positions are irrelevant on a connected graph;
unassigned cops idle).  The recursion is precomputed as a tree over
components -- branching on which component the robber ends up in -- with one
*stage window* per node:

  guard node:  rounds (entry, entry + d(v0, p0) + len(P)]  -- approach+settle
  leaf node:   march window, then plan execution relative to the read round

Stage windows are fixed deadlines, so the cop team's behavior is a
deterministic function of (round, current node, robber view), which keeps
transcripts replayable and the exhaustive adversary's memoization sound.
Every guard keeps shadowing its geodesic forever once deployed; the robber
therefore can never re-cross a deleted path alive, and the active component
shrinks at every recursion step.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import GameConfig, GreedyFarRobber, View, play
from .expander import (
    CapturePlan,
    PlanFailure,
    StrategyParams,
    _family_roster,
    _plan_scripts,
    build_plan,
    sample_cop_sets,
)
from .graph import (
    UNREACHABLE,
    Graph,
    VertexSet,
    bfs_distances,
    delete_vertices,
    diameter,
    is_connected,
    shortest_path,
)
from .seeds import derive_seed

__all__ = [
    "MeynielAnalysis",
    "MeynielCop",
    "MeynielResult",
    "run_meyniel",
]

EXACT_DIAMETER_LIMIT = 500


def _exact_diameter_pair(g: Graph) -> tuple[int, int]:
    best = (-1, 0, 0)
    for u in range(g.n):
        dist = bfs_distances(g, VertexSet.of(g.n, [u]))
        for v in range(u + 1, g.n):
            if dist[v] > best[0]:
                best = (dist[v], u, v)
    return best[1], best[2]


def _double_sweep_pair(g: Graph) -> tuple[int, int]:
    def farthest(src: int) -> int:
        dist = bfs_distances(g, VertexSet.of(g.n, [src]))
        best_v, best_d = src, -1
        for v, d in enumerate(dist):
            if d != UNREACHABLE and d > best_d:
                best_v, best_d = v, d
        return best_v

    a = farthest(0)
    return a, farthest(a)


class _DomainGuard:
    """Shadow guard whose path metric is frozen to one component.

    The cop walks in the full graph (approach distances come from there), but
    the shadow is measured inside the component the geodesic was cut from.
    A robber outside that component is another guard's problem: hold.
    """

    __slots__ = ("path", "length", "index_of", "dist_dom", "dist_g_p0")

    def __init__(self, g: Graph, sub: Graph, rmap: dict[int, int], path_sub):
        self.path = tuple(rmap[p] for p in path_sub)
        self.length = len(self.path) - 1
        self.index_of = {v: i for i, v in enumerate(self.path)}
        dist_sub = bfs_distances(sub, VertexSet.of(sub.n, [path_sub[0]]))
        self.dist_dom = [UNREACHABLE] * g.n
        for new, d in enumerate(dist_sub):
            self.dist_dom[rmap[new]] = d
        self.dist_g_p0 = bfs_distances(g, VertexSet.of(g.n, [self.path[0]]))

    def move(self, g: Graph, cop: int, robber: int) -> int:
        if robber == cop or robber in g.neighbors(cop):
            return robber
        dr = self.dist_dom[robber]
        if dr == UNREACHABLE:
            return cop
        j = min(dr, self.length)
        i = self.index_of.get(cop)
        if i is not None:
            if i == j:
                return cop
            return self.path[i + (1 if j > i else -1)]
        d = self.dist_g_p0[cop]
        for w in g.neighbors(cop):
            if self.dist_g_p0[w] == d - 1:
                return w
        raise AssertionError("no descent step toward the path anchor")


@dataclass
class _Node:
    node_id: int
    depth: int
    kind: str                      # "guard" | "leaf"
    vertices: VertexSet            # component, original ids
    entry: int                     # stage starts at round entry + 1
    duration: int                  # guard: settle window; leaf: march window
    guard: _DomainGuard | None = None
    children: tuple = ()           # (VertexSet, _Node) pairs
    # leaf fields
    broken: bool = False
    family_total: int = 0
    family_set_sizes: tuple = ()
    homes: tuple = ()              # original-id home per fielded cop
    march_routes: tuple = ()       # per fielded cop, route v0 -> home
    scripts: dict | None = None    # robber start (orig id) -> per-cop script
    deadlines: dict | None = None  # robber start -> capture deadline
    resamples: int = 0


class MeynielAnalysis:
    """Precomputed recursion tree, stage windows and cop-pool sizing."""

    def __init__(self, g: Graph, threshold: int, params: StrategyParams,
                 seed: int, start_vertex: int = 0):
        if threshold < 1:
            raise ValueError("diameter threshold must be >= 1")
        if not is_connected(g):
            raise ValueError("recursion requires a connected graph")
        self.g = g
        self.threshold = threshold
        self.params = params
        self.seed = seed
        self.v0 = start_vertex
        self.nodes: list[_Node] = []
        self.root = self._build(VertexSet.full(g.n), depth=0, entry=0, label="r")
        self.pool_size = max(
            max((self._need(n) for n in self.nodes), default=1), 1
        )

    def _need(self, node: _Node) -> int:
        if node.kind == "leaf":
            return node.depth + (0 if node.broken else node.family_total)
        return node.depth + 1

    def _induced(self, comp: VertexSet):
        g = self.g
        if len(comp) == g.n:
            return g, {v: v for v in range(g.n)}, {v: v for v in range(g.n)}
        sub, fmap = delete_vertices(g, comp.complement())
        rmap = {new: old for old, new in fmap.items()}
        return sub, fmap, rmap

    def _build(self, comp: VertexSet, depth: int, entry: int, label: str) -> _Node:
        g = self.g
        sub, fmap, rmap = self._induced(comp)
        node_id = len(self.nodes)
        d = diameter(sub)
        if d <= self.threshold:
            node = self._build_leaf(node_id, comp, sub, fmap, rmap, depth, entry, label)
        else:
            u, v = (
                _exact_diameter_pair(sub)
                if sub.n <= EXACT_DIAMETER_LIMIT
                else _double_sweep_pair(sub)
            )
            path_sub = shortest_path(sub, u, v)
            guard = _DomainGuard(g, sub, rmap, path_sub)
            settle = guard.dist_g_p0[self.v0] + guard.length
            node = _Node(
                node_id=node_id,
                depth=depth,
                kind="guard",
                vertices=comp,
                entry=entry,
                duration=max(1, settle),
                guard=guard,
            )
            self.nodes.append(node)
            path_set = VertexSet.of(g.n, guard.path)
            remainder = comp - path_set
            children = []
            seen = VertexSet(g.n, 0)
            for v0 in sorted(remainder):
                if v0 in seen:
                    continue
                comp_mask = self._component_within(remainder, v0)
                seen = seen | comp_mask
                child = self._build(
                    comp_mask, depth + 1, entry + node.duration,
                    f"{label}.{len(children)}",
                )
                children.append((comp_mask, child))
            node.children = tuple(children)
            return node
        self.nodes.append(node)
        return node

    def _component_within(self, region: VertexSet, v: int) -> VertexSet:
        g = self.g
        mask = 1 << v
        frontier = [v]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.neighbors(u):
                    if w in region and not (mask >> w) & 1:
                        mask |= 1 << w
                        nxt.append(w)
            frontier = nxt
        return VertexSet(g.n, mask)

    def _build_leaf(self, node_id, comp, sub, fmap, rmap, depth, entry, label) -> _Node:
        g = self.g
        params = self.params
        family = None
        plans = None
        attempts = 0
        for attempt in range(params.resample_limit):
            attempts = attempt + 1
            fam = sample_cop_sets(sub, params, derive_seed(self.seed, f"{label}:fam:{attempt}"))
            cand = {v: build_plan(sub, v, fam, params) for v in range(sub.n)}
            if all(isinstance(p, CapturePlan) for p in cand.values()):
                family = fam
                plans = cand
                break
        if family is None:
            return _Node(
                node_id=node_id, depth=depth, kind="leaf", vertices=comp,
                entry=entry, duration=0, broken=True, resamples=attempts,
            )
        roster = _family_roster(family)
        homes = tuple(rmap[w] for _, w in roster)
        march_routes = tuple(
            tuple(shortest_path(g, self.v0, h)) for h in homes
        )
        march = max((len(r) - 1 for r in march_routes), default=0)
        if depth == 0:
            march = 0  # root leaf: cops are placed on their homes directly
        scripts = {}
        deadlines = {}
        for v_sub, plan in plans.items():
            per_cop = _plan_scripts(sub, plan, roster)
            scripts[rmap[v_sub]] = tuple(
                tuple(rmap[p] for p in s) for s in per_cop
            )
            deadlines[rmap[v_sub]] = plan.capture_deadline
        return _Node(
            node_id=node_id, depth=depth, kind="leaf", vertices=comp,
            entry=entry, duration=march, broken=False,
            family_total=family.total_cops,
            family_set_sizes=tuple(len(s) for s in family.sets),
            homes=homes, march_routes=march_routes,
            scripts=scripts, deadlines=deadlines, resamples=attempts,
        )

    def timeline_bound(self) -> int:
        bound = 1
        for node in self.nodes:
            if node.kind == "guard":
                bound = max(bound, node.entry + node.duration + 1)
            elif not node.broken:
                worst_exec = max(node.deadlines.values(), default=1)
                bound = max(bound, node.entry + node.duration + worst_exec)
        return bound + 2


class MeynielCop:
    """Engine strategy walking a precomputed recursion tree."""

    name = "meyniel"

    def __init__(self, analysis: MeynielAnalysis):
        self.analysis = analysis
        root = analysis.root
        self._root_is_leaf = root.kind == "leaf" and not root.broken

    def place(self, g, cfg):
        a = self.analysis
        if cfg.cop_count != a.pool_size:
            raise ValueError(f"strategy fields {a.pool_size} cops")
        if self._root_is_leaf:
            return a.root.homes
        return tuple([a.v0] * a.pool_size)

    def initial_state(self):
        return (self.analysis.root.node_id, None)

    def _advance(self, node: _Node, rnd: int, r: int) -> _Node:
        while node.kind == "guard" and rnd > node.entry + node.duration:
            nxt = None
            for comp_mask, child in node.children:
                if r in comp_mask:
                    nxt = child
                    break
            if nxt is None:
                return node  # robber is on a guarded path; capture is imminent
            node = nxt
        return node

    def move(self, g, view: View, state):
        r = view.robber_position
        if r is None:
            raise ValueError("the recursion strategy needs a visible robber")
        nodes = self.analysis.nodes
        node_id, leaf_v = state
        node = self._advance(nodes[node_id], view.round, r)
        if node.node_id != node_id:
            leaf_v = None
        moves = list(view.cop_positions)

        # Every deployed guard (ancestors and, on a guard node, the node's
        # own) keeps shadowing its geodesic.
        cur = self.analysis.root
        chain = [cur]
        while cur.node_id != node.node_id:
            for comp_mask, child in cur.children:
                if node.vertices <= comp_mask:
                    cur = child
                    chain.append(cur)
                    break
            else:
                raise AssertionError("node is not on the root chain")
        for anc in chain:
            if anc.kind == "guard" and view.round > anc.entry:
                idx = anc.depth
                moves[idx] = anc.guard.move(g, view.cop_positions[idx], r)

        if node.kind == "leaf" and not node.broken:
            base = node.depth
            rel = view.round - node.entry
            if rel <= node.duration and not self._root_is_leaf:
                for i, route in enumerate(node.march_routes):
                    moves[base + i] = route[min(rel, len(route) - 1)]
            else:
                if leaf_v is None:
                    leaf_v = r if r in node.vertices else None
                if leaf_v is not None:
                    scripts = node.scripts[leaf_v]
                    erel = view.round - node.entry - node.duration
                    for i, s in enumerate(scripts):
                        moves[base + i] = s[min(erel, len(s) - 1)]
        return tuple(moves), (node.node_id, leaf_v)


@dataclass(frozen=True)
class MeynielResult:
    transcript: object
    caught: bool
    cops_used: int
    guards_used: int
    expander_cops: int
    pool_size: int
    threshold: int
    regime: str
    final_node: int
    leaf_broken: bool
    leaf_set_sizes: tuple


def _trace_final_state(g, strategy: MeynielCop, transcript):
    state = strategy.initial_state()
    cop_pos = transcript.cop_placement
    r_pos = transcript.robber_placement
    for idx, (moves, r_move) in enumerate(transcript.rounds):
        view = View(round=idx + 1, cop_positions=cop_pos, robber_position=r_pos)
        _, state = strategy.move(g, view, state)
        cop_pos = moves
        if r_move is not None:
            r_pos = r_move
    return state


def run_meyniel(g: Graph, diameter_threshold_override: int,
                expander_params: StrategyParams, cfg: GameConfig,
                robber=None) -> MeynielResult:
    """Play the full recursion against a robber; reports cops consumed.

    The engine config's cop count is replaced by the analysis pool size, and
    max_rounds is raised to the precomputed timeline bound if it is smaller.
    """
    analysis = MeynielAnalysis(
        g, diameter_threshold_override, expander_params, seed=cfg.seed
    )
    strategy = MeynielCop(analysis)
    rounds = max(cfg.max_rounds, analysis.timeline_bound())
    run_cfg = GameConfig(
        cop_count=analysis.pool_size,
        max_rounds=rounds,
        robber_visible=True,
        seed=cfg.seed,
    )
    if robber is None:
        robber = GreedyFarRobber()
    transcript = play(g, strategy, robber, run_cfg)
    node_id, _leaf_v = _trace_final_state(g, strategy, transcript)
    final = analysis.nodes[node_id]
    if final.kind == "leaf":
        guards_used = final.depth
        expander_cops = 0 if final.broken else final.family_total
    else:
        guards_used = final.depth + 1
        expander_cops = 0
    return MeynielResult(
        transcript=transcript,
        caught=transcript.caught,
        cops_used=guards_used + expander_cops,
        guards_used=guards_used,
        expander_cops=expander_cops,
        pool_size=analysis.pool_size,
        threshold=diameter_threshold_override,
        regime=f"desk-scale-override(threshold={diameter_threshold_override})",
        final_node=final.node_id,
        leaf_broken=final.kind == "leaf" and final.broken,
        leaf_set_sizes=final.family_set_sizes if final.kind == "leaf" else (),
    )
