import json

import pytest

from copsrobbers import (
    GameConfig,
    Graph,
    StrategyFault,
    Transcript,
    adversarial_robber_search,
    gen_cycle,
    gen_path,
    play,
    transcript_to_json,
    validate_transcript,
)
from copsrobbers.engine import (
    ChaserCop,
    GreedyFarRobber,
    HoldCop,
    Outcome,
    RandomRobber,
    View,
    robber_greedy_far,
    robber_random,
)
from copsrobbers.seeds import make_rng

from conftest import random_connected


def cfg(k=1, rounds=50, visible=True, seed=0):
    return GameConfig(cop_count=k, max_rounds=rounds, robber_visible=visible, seed=seed)


# ---------------------------------------------------------------------------
# play().
# ---------------------------------------------------------------------------

def test_p2_forced_capture():
    g = gen_path(2)
    t = play(g, ChaserCop([0]), GreedyFarRobber(), cfg())
    assert t.outcome == Outcome("caught", 1)
    assert t.robber_placement == 1
    validate_transcript(g, t)


def test_cops_everywhere_caught_at_placement():
    g = gen_path(3)
    t = play(g, HoldCop([0, 1, 2]), GreedyFarRobber(), cfg(k=3))
    assert t.outcome == Outcome("caught", 0)
    assert t.rounds == ()
    validate_transcript(g, t)


def test_one_cop_loses_c4():
    # the 4-cycle needs two cops, so any single cop fails against greedy
    g = gen_cycle(4)
    t = play(g, ChaserCop([0]), GreedyFarRobber(), cfg(rounds=50))
    assert t.outcome == Outcome("robber_wins", 50)
    validate_transcript(g, t)


def test_play_requires_connected():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        play(g, ChaserCop([0]), GreedyFarRobber(), cfg())


def test_replay_is_byte_identical():
    g = random_connected(9, seed=3)
    c = cfg(k=2, rounds=40, seed=11)
    t1 = play(g, ChaserCop([0, 0]), RandomRobber(), c)
    t2 = play(g, ChaserCop([0, 0]), RandomRobber(), c)
    assert transcript_to_json(t1) == transcript_to_json(t2)
    t3 = play(g, ChaserCop([0, 0]), RandomRobber(), cfg(k=2, rounds=40, seed=12))
    assert transcript_to_json(t1) != transcript_to_json(t3)


def test_illegal_cop_move_faulted():
    class TeleportCop(HoldCop):
        def move(self, g, view, state):
            return (g.n - 1,), state

    g = gen_path(5)
    with pytest.raises(StrategyFault) as exc:
        play(g, TeleportCop([0]), GreedyFarRobber(), cfg())
    assert exc.value.agent == "cops" and exc.value.round == 1


def test_invisible_mode_hides_robber():
    seen = []

    class Spy(HoldCop):
        def move(self, g, view, state):
            seen.append(view.robber_position)
            return view.cop_positions, state

    g = gen_path(4)
    play(g, Spy([0]), GreedyFarRobber(), cfg(rounds=3, visible=False))
    assert seen == [None, None, None]


# ---------------------------------------------------------------------------
# Baseline robbers.
# ---------------------------------------------------------------------------

def test_greedy_far_moves_away():
    g = gen_path(5)
    v = View(round=1, cop_positions=(0,), robber_position=2)
    assert robber_greedy_far(g, v) == 3


def test_greedy_tie_takes_lowest_id():
    # all moves equally bad on a complete graph: stay at the lowest option
    k3 = Graph(3, [(0, 1), (0, 2), (1, 2)])
    v = View(round=1, cop_positions=(0,), robber_position=2)
    assert robber_greedy_far(k3, v) == 1


def test_random_robber_reproducible():
    g = gen_cycle(8)
    v = View(round=1, cop_positions=(0,), robber_position=4)
    a = [robber_random(g, v, make_rng(99)) for _ in range(5)]
    b = [robber_random(g, v, make_rng(99)) for _ in range(5)]
    assert a == b


# ---------------------------------------------------------------------------
# Adversarial search.
# ---------------------------------------------------------------------------

def test_p3_center_catches_all_lines():
    g = gen_path(3)
    t = adversarial_robber_search(g, ChaserCop([1]), cfg(rounds=10), 5)
    assert t.caught and t.outcome.round <= 1


def test_c4_robber_survives_any_single_cop():
    g = gen_cycle(4)
    t = adversarial_robber_search(g, ChaserCop([0]), cfg(rounds=40), 30)
    assert t.outcome == Outcome("robber_wins", 30)
    validate_transcript(g, t)


def test_adversary_at_least_as_good_as_fixed_robbers():
    g = random_connected(8, seed=5)
    c = cfg(rounds=30, seed=2)
    worst = adversarial_robber_search(g, ChaserCop([0]), c, 30)

    def survival(t):
        return float("inf") if not t.caught else t.outcome.round

    for robber in (GreedyFarRobber(), RandomRobber()):
        t = play(g, ChaserCop([0]), robber, c)
        assert survival(worst) >= survival(t)


def test_nondeterministic_strategy_detected():
    class FlipFlop:
        name = "flipflop"

        def __init__(self):
            self.n_calls = 0

        def place(self, g, cfg):
            return (0,)

        def initial_state(self):
            return None

        def move(self, g, view, state):
            self.n_calls += 1
            pos = view.cop_positions[0]
            nbrs = g.neighbors(pos)
            return (nbrs[self.n_calls % len(nbrs)],), state

    g = gen_cycle(5)
    with pytest.raises(StrategyFault) as exc:
        adversarial_robber_search(g, FlipFlop(), cfg(rounds=10), 5)
    assert "nondeterministic" in str(exc.value)


def test_depth_capped_by_max_rounds():
    with pytest.raises(ValueError):
        adversarial_robber_search(gen_path(3), ChaserCop([0]), cfg(rounds=5), 6)


# ---------------------------------------------------------------------------
# Transcript validation and serialization.
# ---------------------------------------------------------------------------

def test_validator_rejects_corruption():
    g = gen_path(4)
    t = play(g, ChaserCop([0]), GreedyFarRobber(), cfg(rounds=20))
    assert t.caught
    # illegal cop jump
    bad_rounds = ((t.cop_placement, 3),) + t.rounds
    bad = Transcript(
        graph_hash=t.graph_hash, config=t.config, cop_strategy=t.cop_strategy,
        robber_strategy=t.robber_strategy, cop_placement=(3,),
        robber_placement=t.robber_placement, rounds=bad_rounds, outcome=t.outcome,
    )
    with pytest.raises(ValueError):
        validate_transcript(g, bad)
    # wrong outcome round
    bad2 = Transcript(
        graph_hash=t.graph_hash, config=t.config, cop_strategy=t.cop_strategy,
        robber_strategy=t.robber_strategy, cop_placement=t.cop_placement,
        robber_placement=t.robber_placement, rounds=t.rounds,
        outcome=Outcome("caught", t.outcome.round + 1),
    )
    with pytest.raises(ValueError):
        validate_transcript(g, bad2)


def test_transcript_json_schema():
    g = gen_path(3)
    t = play(g, ChaserCop([0]), GreedyFarRobber(), cfg())
    doc = json.loads(transcript_to_json(t))
    assert doc["schema"] == "copsrobbers.transcript/1"
    assert set(doc) == {
        "schema", "graph_hash", "config", "cop_strategy", "robber_strategy",
        "cop_placement", "robber_placement", "rounds", "outcome",
    }
    assert doc["config"]["seed"] == 0


def test_transcript_states_sequence():
    from copsrobbers import transcript_states

    g = gen_cycle(5)
    t = play(g, ChaserCop([0]), GreedyFarRobber(), cfg(rounds=12))
    states = transcript_states(t)
    assert states[0].robber_position is None and states[0].to_move == "robber"
    assert states[1].round == 0 and states[1].to_move == "cops"
    # alternation and single-edge moves throughout
    for a, b in zip(states[1:], states[2:]):
        assert {a.to_move, b.to_move} == {"cops", "robber"}
        if a.to_move == "cops":  # cops moved between a and b
            for x, y in zip(a.cop_positions, b.cop_positions):
                assert x == y or y in g.neighbors(x)
        else:
            x, y = a.robber_position, b.robber_position
            assert x == y or y in g.neighbors(x)
    final = states[-1]
    assert t.caught == (final.robber_position in final.cop_positions)
