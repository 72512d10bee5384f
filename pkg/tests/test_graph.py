import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from copsrobbers import (
    UNREACHABLE,
    Graph,
    NoPathError,
    ParseError,
    VertexSet,
    ball,
    bfs_distances,
    component_of,
    delete_vertices,
    diameter,
    format_edge_list,
    gen_cycle,
    gen_gnp,
    gen_path,
    gen_petersen,
    girth,
    graph_hash,
    is_connected,
    min_degree,
    parse_edge_list,
    shortest_path,
    to_dot,
)

from oracles import ball_oracle, diameter_oracle, girth_oracle


def vs(n, members):
    return VertexSet.of(n, members)


# ---------------------------------------------------------------------------
# Construction invariants.
# ---------------------------------------------------------------------------

def test_rejects_self_loop():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])


def test_rejects_duplicate_edge():
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])


def test_rejects_out_of_range():
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])


def test_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError):
        Graph.from_adjacency([[1], []])


def test_adjacency_sorted_and_symmetric():
    g = Graph(4, [(2, 1), (0, 3), (1, 0)])
    for u in range(4):
        assert list(g.neighbors(u)) == sorted(g.neighbors(u))
        for v in g.neighbors(u):
            assert u in g.neighbors(v)


def test_vertexset_ops():
    a = vs(8, [1, 3, 5])
    b = vs(8, [3, 4])
    assert len(a) == 3 and 3 in a and 2 not in a
    assert sorted(a | b) == [1, 3, 4, 5]
    assert sorted(a & b) == [3]
    assert sorted(a - b) == [1, 5]
    assert vs(8, [3]) <= a
    assert sorted(a.complement()) == [0, 2, 4, 6, 7]
    with pytest.raises(ValueError):
        vs(4, [4])
    with pytest.raises(AttributeError):
        a.mask = 0


# ---------------------------------------------------------------------------
# bfs_distances.
# ---------------------------------------------------------------------------

def test_bfs_path_metric():
    g = gen_path(5)
    assert bfs_distances(g, vs(5, [0])) == [0, 1, 2, 3, 4]


def test_bfs_all_sources_zero():
    g = gen_cycle(6)
    assert bfs_distances(g, VertexSet.full(6)) == [0] * 6


def test_bfs_unreachable_sentinel():
    g = Graph(4, [(0, 1), (2, 3)])
    d = bfs_distances(g, vs(4, [0]))
    assert d == [0, 1, UNREACHABLE, UNREACHABLE]


def test_bfs_empty_sources_rejected():
    with pytest.raises(ValueError):
        bfs_distances(gen_path(3), VertexSet(3, 0))


# ---------------------------------------------------------------------------
# ball.
# ---------------------------------------------------------------------------

def test_ball_examples(petersen):
    p5 = gen_path(5)
    assert sorted(ball(p5, vs(5, [0]), 2)) == [0, 1, 2]
    c5 = gen_cycle(5)
    assert sorted(ball(c5, vs(5, [2]), 1)) == [1, 2, 3]
    # Petersen has diameter 2, so radius-2 balls cover everything
    assert sorted(ball(petersen, vs(10, [3]), 2)) == list(range(10))
    assert ball_oracle(petersen, [3], 2) == set(range(10))


def test_ball_zero_radius_and_errors():
    g = gen_path(4)
    assert sorted(ball(g, vs(4, [2]), 0)) == [2]
    with pytest.raises(ValueError):
        ball(g, VertexSet(4, 0), 1)
    with pytest.raises(ValueError):
        ball(g, vs(4, [0]), -1)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 16), st.integers(0, 5), st.data())
def test_ball_properties(n, r, data):
    g = gen_gnp(n, 0.4, data.draw(st.integers(0, 10**6)))
    members = data.draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n))
    a = vs(n, members)
    b_r = ball(g, a, r)
    b_r1 = ball(g, a, r + 1)
    assert b_r <= b_r1
    if r >= 1:
        assert ball(g, ball(g, a, 1), r - 1) == b_r
    assert set(b_r) == ball_oracle(g, members, r)


# ---------------------------------------------------------------------------
# shortest_path.
# ---------------------------------------------------------------------------

def test_shortest_path_examples():
    assert shortest_path(gen_path(5), 0, 4) == [0, 1, 2, 3, 4]
    # both arcs of C6 have length 3; lowest-id predecessors pick 0-1-2-3
    assert shortest_path(gen_cycle(6), 0, 3) == [0, 1, 2, 3]
    assert shortest_path(gen_path(5), 2, 2) == [2]


def test_shortest_path_disconnected():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(NoPathError):
        shortest_path(g, 0, 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 14), st.data())
def test_geodesic_prefixes(n, data):
    g = gen_gnp(n, 0.45, data.draw(st.integers(0, 10**6)))
    u = data.draw(st.integers(0, n - 1))
    v = data.draw(st.integers(0, n - 1))
    dist = bfs_distances(g, vs(n, [u]))
    if dist[v] == UNREACHABLE:
        return
    path = shortest_path(g, u, v)
    assert len(path) - 1 == dist[v]
    for i, w in enumerate(path):
        assert dist[w] == i  # every prefix is itself a geodesic


# ---------------------------------------------------------------------------
# diameter / girth / min_degree.
# ---------------------------------------------------------------------------

def test_diameter_examples(petersen):
    assert diameter(gen_cycle(6)) == 3
    assert diameter(petersen) == 2 == diameter_oracle(petersen)
    assert diameter(Graph(3, [(0, 1)])) == math.inf
    assert diameter(gen_path(1)) == 0


def test_girth_min_degree(petersen):
    assert girth(petersen) == 5 == girth_oracle(petersen)
    assert min_degree(petersen) == 3
    assert girth(gen_path(6)) == math.inf
    k4 = Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert girth(k4) == 3 and min_degree(k4) == 3
    assert girth(gen_cycle(9)) == 9 == girth_oracle(gen_cycle(9))


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 12), st.data())
def test_girth_matches_oracle(n, data):
    g = gen_gnp(n, 0.35, data.draw(st.integers(0, 10**6)))
    assert girth(g) == girth_oracle(g)


# ---------------------------------------------------------------------------
# delete_vertices / component_of.
# ---------------------------------------------------------------------------

def test_delete_path_vertex():
    g, idmap = delete_vertices(gen_path(5), vs(5, [2]))
    assert g.n == 4
    assert sorted(component_of(g, idmap[0])) == sorted([idmap[0], idmap[1]])
    assert sorted(component_of(g, idmap[3])) == sorted([idmap[3], idmap[4]])


def test_delete_nothing_is_identity():
    g0 = gen_cycle(5)
    g, idmap = delete_vertices(g0, VertexSet(5, 0))
    assert g == g0
    assert idmap == {v: v for v in range(5)}


def test_delete_geodesic_from_cycle():
    g, idmap = delete_vertices(gen_cycle(6), vs(6, [0, 1, 2, 3]))
    assert g.n == 2 and g.edge_count == 1
    assert idmap == {4: 0, 5: 1}


def test_delete_everything_rejected():
    with pytest.raises(ValueError):
        delete_vertices(gen_path(3), VertexSet.full(3))


def test_component_examples():
    g = gen_cycle(7)
    assert component_of(g, 3) == VertexSet.full(7)
    h, _ = delete_vertices(gen_path(5), vs(5, [2]))
    assert len(component_of(h, 2)) == 2
    iso = Graph(3, [(0, 1)])
    assert sorted(component_of(iso, 2)) == [2]


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 12), st.data())
def test_delete_components_partition(n, data):
    g = gen_gnp(n, 0.4, data.draw(st.integers(0, 10**6)))
    drop = data.draw(st.sets(st.integers(0, n - 1), max_size=n - 1))
    h, idmap = delete_vertices(g, vs(n, drop))
    seen = VertexSet(h.n, 0)
    for v in range(h.n):
        comp = component_of(h, v)
        if v in seen:
            assert comp <= seen
        else:
            assert not (comp & seen)
            seen = seen | comp
    assert seen == VertexSet.full(h.n)
    # |ball(v, diameter)| equals the component size
    for v in range(h.n):
        comp = component_of(h, v)
        d = diameter(h)
        radius = h.n if d == math.inf else int(d)
        assert len(ball(h, vs(h.n, [v]), radius)) == len(comp)


# ---------------------------------------------------------------------------
# Edge-list format and DOT.
# ---------------------------------------------------------------------------

def test_edge_list_roundtrip(petersen):
    text = format_edge_list(petersen)
    assert parse_edge_list(text) == petersen
    assert text.splitlines()[0] == "10 15"


def test_edge_list_comments_and_errors():
    g = parse_edge_list("# a comment\n3 2\n0 1\n# another\n1 2\n")
    assert g.n == 3 and g.edge_count == 2
    with pytest.raises(ParseError) as exc:
        parse_edge_list("3 1\n1 0\n")
    assert exc.value.line == 2
    with pytest.raises(ParseError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(ParseError):
        parse_edge_list("")
    with pytest.raises(ParseError) as exc:
        parse_edge_list("3 1\nx y\n")
    assert exc.value.line == 2


def test_dot_and_hash():
    g = gen_cycle(3)
    dot = to_dot(g)
    assert "0 -- 1;" in dot and dot.startswith("graph g {")
    assert graph_hash(g) == graph_hash(gen_cycle(3))
    assert graph_hash(g) != graph_hash(gen_path(3))
