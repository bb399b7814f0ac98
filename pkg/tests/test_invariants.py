import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cds3 import (
    Graph,
    bit_list,
    clique_number,
    complete_graph,
    cycle_graph,
    empty_graph,
    find_claw,
    find_induced_cycle,
    has_independent_set,
    hypothesis_report,
    independence_number,
    is_cds,
    is_simplicial,
    iter_cds,
    mask_of,
    max_clique,
    max_independent_set,
    min_cds,
    min_cds_size,
    path_graph,
    simplicial_vertices,
)
from cds3.harness import enumerate_labeled

import oracles
from conftest import random_graph


def graphs_st(max_n=8):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=0, max_value=max_n))
        bits = draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1 if n > 1 else 0))
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        edges = [pairs[k] for k in range(len(pairs)) if (bits >> k) & 1]
        return Graph.from_edges(n, edges)

    return build()


# -- independence / clique ------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 4, 6])
def test_alpha_complete(n):
    assert independence_number(complete_graph(n)) == 1


def test_alpha_c7_and_petersen(petersen):
    assert independence_number(cycle_graph(7)) == oracles.naive_independence_number(cycle_graph(7)) == 3
    assert independence_number(petersen) == 4


def test_omega_spots():
    assert clique_number(complete_graph(4)) == 4
    assert clique_number(cycle_graph(5)) == oracles.naive_clique_number(cycle_graph(5)) == 2
    assert clique_number(cycle_graph(6)) == 2


def test_alpha_omega_witnesses(rng):
    for _ in range(40):
        g = random_graph(rng.randint(1, 9), rng.random(), rng)
        s = max_independent_set(g)
        assert s.bit_count() == independence_number(g)
        assert all(not g.has_edge(a, b) for a in bit_list(s) for b in bit_list(s) if a < b)
        c = max_clique(g)
        assert c.bit_count() == clique_number(g)
        assert all(g.has_edge(a, b) for a in bit_list(c) for b in bit_list(c) if a < b)


def test_alpha_equals_omega_of_complement_exhaustive_small():
    for n in range(5):
        for g in enumerate_labeled(n):
            assert independence_number(g) == clique_number(g.complement())


@settings(max_examples=120, deadline=None)
@given(graphs_st(8))
def test_alpha_equals_omega_of_complement(g):
    assert independence_number(g) == clique_number(g.complement())


@settings(max_examples=80, deadline=None)
@given(graphs_st(7))
def test_alpha_against_bruteforce(g):
    assert independence_number(g) == oracles.naive_independence_number(g)


def test_has_independent_set_is_a_threshold(rng):
    for _ in range(30):
        g = random_graph(rng.randint(0, 8), rng.random(), rng)
        a = independence_number(g)
        for k in range(g.n + 2):
            assert has_independent_set(g, k) == (k <= a)


# -- simplicial vertices --------------------------------------------------------


def test_simplicial_spots():
    assert not is_simplicial(path_graph(3), 1)
    assert all(is_simplicial(complete_graph(4), v) for v in range(4))
    assert is_simplicial(empty_graph(1), 0)
    assert simplicial_vertices(path_graph(3)) == mask_of([0, 2])
    with pytest.raises(ValueError):
        is_simplicial(path_graph(3), 3)


@settings(max_examples=60, deadline=None)
@given(graphs_st(7))
def test_simplicial_against_bruteforce(g):
    for v in range(g.n):
        assert is_simplicial(g, v) == oracles.naive_is_simplicial(g, v)


# -- claw detection --------------------------------------------------------------


def test_claw_star():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert find_claw(star) == (0, (1, 2, 3))


def test_claw_absent_c6_and_present_petersen(petersen):
    assert find_claw(cycle_graph(6)) is None
    got = find_claw(petersen)
    assert got is not None
    center, leaves = got
    assert all(petersen.has_edge(center, x) for x in leaves)
    assert all(not petersen.has_edge(a, b) for a in leaves for b in leaves if a < b)


def test_claw_witness_is_lexicographically_first():
    # two claws; center 0 with leaves (1,2,3) beats center 0 with (1,2,4)
    g = Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (3, 4), (0, 5)])
    assert find_claw(g) == (0, (1, 2, 3))


@settings(max_examples=100, deadline=None)
@given(graphs_st(8))
def test_claw_against_bruteforce(g):
    assert (find_claw(g) is None) == (not oracles.naive_has_claw(g))


# -- induced cycles ---------------------------------------------------------------


def test_induced_cycle_spots(petersen):
    assert find_induced_cycle(cycle_graph(7), 7) == (0, 1, 2, 3, 4, 5, 6)
    assert find_induced_cycle(complete_graph(5), 5) is None
    got = find_induced_cycle(petersen, 5)
    assert got is not None and len(got) == 5


def test_induced_cycle_rejects_small_k():
    with pytest.raises(ValueError):
        find_induced_cycle(cycle_graph(5), 3)


def test_c6_has_no_induced_c4_or_c5():
    c6 = cycle_graph(6)
    assert find_induced_cycle(c6, 4) is None
    assert find_induced_cycle(c6, 5) is None
    assert find_induced_cycle(c6, 6) == (0, 1, 2, 3, 4, 5)


def _cycle_witness_ok(g, cyc, k):
    assert len(cyc) == k and len(set(cyc)) == k
    for i, u in enumerate(cyc):
        for j in range(i + 1, k):
            adjacent = g.has_edge(u, cyc[j])
            consecutive = j - i == 1 or (i == 0 and j == k - 1)
            assert adjacent == consecutive


@settings(max_examples=100, deadline=None)
@given(graphs_st(8), st.integers(min_value=4, max_value=7))
def test_induced_cycle_against_bruteforce(g, k):
    got = find_induced_cycle(g, k)
    assert (got is not None) == oracles.naive_has_induced_cycle(g, k)
    if got is not None:
        _cycle_witness_ok(g, got, k)


# -- connected dominating sets ----------------------------------------------------


def test_is_cds_spots():
    c6 = cycle_graph(6)
    assert is_cds(c6, mask_of([0, 1, 2, 3]))
    assert not is_cds(c6, mask_of([0, 1, 2]))  # vertex 4 undominated
    assert is_cds(c6, c6.vertex_mask)
    assert is_cds(empty_graph(0), 0)
    with pytest.raises(ValueError):
        is_cds(c6, 1 << 10)


def test_is_cds_needs_connectivity_inside_components():
    c6 = cycle_graph(6)
    assert not is_cds(c6, mask_of([0, 2, 4]))  # dominates but induces no edges
    two = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    assert is_cds(two, mask_of([1, 4]))
    assert not is_cds(two, mask_of([1, 3]))  # 5 undominated
    assert not is_cds(two, mask_of([0, 1, 2]))  # second component empty


@settings(max_examples=150, deadline=None)
@given(graphs_st(7), st.integers(min_value=0))
def test_is_cds_against_bruteforce(g, dbits):
    d = dbits % (1 << g.n) if g.n else 0
    assert is_cds(g, d) == oracles.naive_is_cds(g, bit_list(d))


def test_min_cds_spots():
    assert min_cds_size(complete_graph(5)) == 1
    assert min_cds_size(cycle_graph(6)) == 4
    assert min_cds_size(cycle_graph(7)) == 5
    assert min_cds_size(empty_graph(0)) == 0
    assert min_cds_size(empty_graph(3)) == 3  # one vertex per component


def test_min_cds_disconnected_sums_components():
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert min_cds_size(two_triangles) == 2
    assert min_cds(two_triangles) == mask_of([0, 3])


@settings(max_examples=60, deadline=None)
@given(graphs_st(6))
def test_min_cds_against_bruteforce(g):
    if g.n == 0:
        return
    assert min_cds_size(g) == oracles.naive_min_cds_size(g)
    assert is_cds(g, min_cds(g))


def test_iter_cds_order_and_first_five():
    c5 = cycle_graph(5)
    seen = []
    for d in iter_cds(c5):
        seen.append(d)
        if len(seen) == 5:
            break
    sizes = [d.bit_count() for d in seen]
    assert sizes == sorted(sizes)
    assert all(is_cds(c5, d) for d in seen)
    assert seen[0] == min_cds(c5)


# -- hypothesis report -------------------------------------------------------------


def test_report_c6():
    rep = hypothesis_report(cycle_graph(6))
    assert rep.alpha == 3 and rep.connected
    assert rep.claw_witness is None and rep.c7_witness is None
    assert rep.simplicial == 0


def test_report_c7():
    rep = hypothesis_report(cycle_graph(7))
    assert rep.alpha == 3 and rep.c7_witness == (0, 1, 2, 3, 4, 5, 6)


def test_report_star():
    rep = hypothesis_report(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    assert rep.alpha == 3 and rep.claw_witness == (0, (1, 2, 3))
    assert rep.to_json()["claw"] == {"center": 0, "leaves": [1, 2, 3]}
