import itertools

import pytest

import oracles
from midmatch.core import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    edgeless,
    path,
    spider,
    star,
)
from midmatch.enumeration import all_trees, random_connected_graph
from midmatch.middle import middle_graph
from midmatch import solvers as S

BOWTIE = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def small_sweep():
    """Connected graphs to 5 vertices plus assorted shapes; oracle-friendly."""
    from midmatch.enumeration import all_connected_graphs

    out = [g for n in range(1, 6) for g in all_connected_graphs(n)]
    out += [edgeless(4), Graph(5, [(0, 1), (2, 3)]), BOWTIE, star(5), spider(3)]
    out += [random_connected_graph(6, 0.4, seed) for seed in range(4)]
    return out


SWEEP = small_sweep()
SWEEP_IDS = [f"{i}-n{g.n}m{g.edge_count}" for i, g in enumerate(SWEEP)]


# -- isolating sets ---------------------------------------------------------------


def test_is_isolating_examples():
    assert S.is_isolating(path(5), [2])
    assert S.is_isolating(complete(4), range(4))
    assert not S.is_isolating(complete(4), [])
    with pytest.raises(ValueError):
        S.is_isolating(path(3), [7])


def test_isolation_number_examples():
    assert S.isolation_number(path(5)).value == 1
    assert S.isolation_number(edgeless(6)).value == 0
    assert S.isolation_number(middle_graph(cycle(7)).graph).value == 3


@pytest.mark.parametrize("g", SWEEP, ids=SWEEP_IDS)
def test_isolation_number_matches_oracle(g):
    value, witness = oracles.brute_isolation_number(g)
    got = S.isolation_number(g)
    assert got.value == value
    assert got.witness == witness  # lex-smallest minimum witness
    assert S.is_isolating(g, got.witness)


def test_isolation_number_general_reduces_to_plain():
    k2 = complete(2)
    for g in SWEEP[:20]:
        assert S.isolation_number_general(g, [k2]).value == S.isolation_number(g).value


def test_isolation_number_general_k1_is_domination():
    k1 = Graph(1)
    for g in SWEEP[:12]:
        assert S.isolation_number_general(g, [k1]).value == S.domination_number(g).value


def test_isolation_number_general_against_oracle():
    p3 = path(3)
    k3 = complete(3)
    for g in [path(5), cycle(6), BOWTIE, star(4), complete(4)]:
        for fam in ([p3], [k3], [p3, k3]):
            value, witness = oracles.brute_isolation_number_general(g, fam)
            got = S.isolation_number_general(g, fam)
            assert (got.value, got.witness) == (value, witness)


def test_isolation_number_general_rejects_bad_patterns():
    with pytest.raises(ValueError):
        S.isolation_number_general(path(3), [])
    with pytest.raises(ValueError):
        S.isolation_number_general(path(3), [path(6)])


# -- domination and independence -----------------------------------------------------


def test_domination_examples():
    assert S.domination_number(path(5)).value == 2
    assert S.domination_number(edgeless(4)).value == 4
    assert S.independence_number(complete(7)).value == 1
    assert S.independence_number(cycle(6)).value == 3


@pytest.mark.parametrize("g", SWEEP, ids=SWEEP_IDS)
def test_domination_matches_oracle(g):
    value, witness = oracles.brute_domination_number(g)
    got = S.domination_number(g)
    assert (got.value, got.witness) == (value, witness)
    assert S.is_dominating(g, got.witness)


@pytest.mark.parametrize("g", SWEEP, ids=SWEEP_IDS)
def test_independence_matches_oracle(g):
    value, witness = oracles.brute_independence_number(g)
    got = S.independence_number(g)
    assert (got.value, got.witness) == (value, witness)
    assert g.is_independent(got.witness)


# -- matchings -------------------------------------------------------------------------


def test_maximum_matching_examples():
    assert S.maximum_matching(path(4)).value == 2
    assert S.maximum_matching(star(5)).value == 1
    assert S.maximum_matching(cycle(7)).value == 3


@pytest.mark.parametrize("g", SWEEP, ids=SWEEP_IDS)
def test_maximum_matching_matches_oracle(g):
    value, _ = oracles.brute_maximum_matching(g)
    got = S.maximum_matching(g)
    assert got.value == value
    assert len(got.witness) == value
    seen = set()
    for u, v in got.witness:
        assert (u, v) in set(g.edges)
        assert not {u, v} & seen
        seen |= {u, v}


def test_matching_predicates():
    p4 = path(4)
    assert S.is_maximal_matching(p4, [(1, 2)])
    assert not S.is_maximal_matching(p4, [(0, 1)])
    assert S.is_perfect_matching(complete(4), [(0, 1), (2, 3)])
    assert S.is_near_perfect_matching(path(3), [(0, 1)])
    with pytest.raises(ValueError):
        S.is_maximal_matching(p4, [(0, 2)])  # not an edge
    with pytest.raises(ValueError):
        S.is_maximal_matching(p4, [(0, 1), (1, 2)])  # shared endpoint


def test_min_maximal_matching_examples():
    assert S.min_maximal_matching(path(7)).value == 2
    assert S.min_maximal_matching(complete_bipartite(3, 3)).value == 3
    assert S.min_maximal_matching(edgeless(5)).value == 0


@pytest.mark.parametrize("g", SWEEP, ids=SWEEP_IDS)
def test_min_maximal_matching_matches_oracle(g):
    value, witness = oracles.brute_min_maximal_matching(g)
    got = S.min_maximal_matching(g)
    assert got.value == value
    assert got.witness == witness  # lex-smallest minimum witness
    assert S.is_maximal_matching(g, got.witness)


def test_enumerate_maximal_matchings_examples():
    assert list(S.enumerate_maximal_matchings(path(3))) == [((0, 1),), ((1, 2),)]
    assert len(list(S.enumerate_maximal_matchings(Graph(2, [(0, 1)])))) == 1
    assert len(list(S.enumerate_maximal_matchings(cycle(5)))) == 5
    assert list(S.enumerate_maximal_matchings(edgeless(3))) == [()]


@pytest.mark.parametrize("g", SWEEP, ids=SWEEP_IDS)
def test_enumerate_maximal_matchings_matches_oracle(g):
    got = list(S.enumerate_maximal_matchings(g))
    assert len(set(got)) == len(got)
    for m in got:
        assert S.is_maximal_matching(g, m)
    assert sorted(got) == sorted(oracles.brute_all_maximal_matchings(g))
    assert min(len(m) for m in got) == S.min_maximal_matching(g).value
    # stream order is deterministic
    assert got == list(S.enumerate_maximal_matchings(g))


def test_enumerate_matchings_counts():
    # matchings of P_4: {}, {01}, {12}, {23}, {01,23}
    assert len(list(S.enumerate_matchings(path(4)))) == 5


def test_randomly_matchable_and_equimatchable():
    assert S.is_randomly_matchable(complete(4))
    assert S.is_randomly_matchable(complete_bipartite(3, 3))
    assert not S.is_randomly_matchable(path(4))
    assert not S.is_randomly_matchable(cycle(6))
    assert S.is_equimatchable(cycle(5))
    assert not S.is_equimatchable(path(4))


# -- isolating edge sets ------------------------------------------------------------------


def test_isolating_edge_set_examples():
    for k in (1, 3, 5):
        assert S.min_isolating_edge_set(star(k)).value == 1
    assert S.min_isolating_edge_set(path(5)).value == 2
    assert S.min_isolating_edge_set(cycle(4)).value == 2
    assert S.min_isolating_edge_set(path(4)).value == 1


def test_is_isolating_edge_set():
    g = complete(3)
    assert S.is_isolating_edge_set(g, g.edges)
    assert not S.is_isolating_edge_set(g, [])
    with pytest.raises(ValueError):
        S.is_isolating_edge_set(path(4), [(0, 2)])


@pytest.mark.parametrize("g", SWEEP, ids=SWEEP_IDS)
def test_min_isolating_edge_set_matches_oracle(g):
    value, witness = oracles.brute_tau(g)
    got = S.min_isolating_edge_set(g)
    assert got.value == value
    assert got.witness == witness
    assert S.is_isolating_edge_set(g, got.witness)


@pytest.mark.parametrize("g", SWEEP, ids=SWEEP_IDS)
def test_every_maximal_matching_is_isolating_edge_set(g):
    for m in S.enumerate_maximal_matchings(g):
        assert S.is_isolating_edge_set(g, m)


def test_exchange_fixed_point():
    g = star(4)
    witness = S.min_isolating_edge_set(g).witness
    assert S.isolating_edges_to_matching(g, witness) == witness


def test_exchange_rejects_non_minimum():
    with pytest.raises(ValueError, match="not minimum"):
        S.isolating_edges_to_matching(path(4), [(0, 1), (1, 2)])


def test_exchange_rejects_non_member():
    with pytest.raises(ValueError, match="independent"):
        S.isolating_edges_to_matching(path(4), [(0, 1)])


def test_exchange_on_shared_endpoint_member():
    # {(0,2),(2,3)} is a minimum isolating edge set of the bowtie but shares
    # vertex 2; the exchange must produce an equal-size maximal matching
    assert S.min_isolating_edge_set(BOWTIE).value == 2
    assert S.is_isolating_edge_set(BOWTIE, [(0, 2), (2, 3)])
    result = S.isolating_edges_to_matching(BOWTIE, [(0, 2), (2, 3)])
    assert len(result) == 2
    assert S.is_maximal_matching(BOWTIE, result)


@pytest.mark.parametrize("g", SWEEP, ids=SWEEP_IDS)
def test_exchange_on_every_minimum_member(g):
    tau = S.min_isolating_edge_set(g).value
    for subset in itertools.combinations(g.edges, tau):
        if S.is_isolating_edge_set(g, subset):
            matching = S.isolating_edges_to_matching(g, subset)
            assert len(matching) == tau
            assert S.is_maximal_matching(g, matching)


# -- canonicalization of middle-graph isolating sets ----------------------------------------


def test_canonicalize_unchanged_when_off_originals():
    mg = middle_graph(path(3))
    k = S.isolation_number(mg.graph).value
    assert k == 1
    assert S.canonicalize_isolating_set(mg, [3]) == (3,)


def test_canonicalize_moves_original():
    mg = middle_graph(path(3))
    assert S.is_isolating(mg.graph, [1])
    result = S.canonicalize_isolating_set(mg, [1])
    assert len(result) == 1
    assert result[0] >= mg.original_count
    assert S.is_isolating(mg.graph, result)


def test_canonicalize_rejects_bad_inputs():
    mg = middle_graph(path(5))
    with pytest.raises(ValueError, match="not isolating"):
        S.canonicalize_isolating_set(mg, [0])
    with pytest.raises(ValueError, match="not a minimum"):
        S.canonicalize_isolating_set(mg, [5, 6, 7])


def test_canonicalize_every_minimum_set_of_small_trees():
    for n in range(2, 7):
        for t in all_trees(n):
            mg = middle_graph(t)
            k = S.isolation_number(mg.graph).value
            for subset in itertools.combinations(range(mg.graph.n), k):
                if not S.is_isolating(mg.graph, subset):
                    continue
                result = S.canonicalize_isolating_set(mg, subset)
                assert len(result) == k
                assert S.is_isolating(mg.graph, result)
                assert all(v >= mg.original_count for v in result)


# -- pattern containment ----------------------------------------------------------------------


def test_contains_pattern_examples():
    assert not S.contains_pattern(edgeless(4), complete(2))
    assert S.contains_pattern(cycle(3), complete(3))
    assert not S.contains_pattern(star(5), path(4))
    with pytest.raises(ValueError):
        S.contains_pattern(path(3), path(6))


def test_contains_pattern_matches_oracle():
    patterns = [path(2), path(3), path(4), complete(3), star(3), cycle(4), cycle(5)]
    hosts = [path(5), cycle(6), BOWTIE, star(4), complete(5),
             random_connected_graph(7, 0.35, 11), random_connected_graph(7, 0.5, 12)]
    for g in hosts:
        for h in patterns:
            assert S.contains_pattern(g, h) == oracles.brute_contains_pattern(g, h)


# -- cross-invariants ---------------------------------------------------------------------------

RANDOM_78 = [random_connected_graph(7, 0.3, 300 + s) for s in range(6)] + [
    random_connected_graph(8, 0.3, 400 + s) for s in range(6)
]


@pytest.mark.parametrize("g", SWEEP + RANDOM_78, ids=lambda g: f"n{g.n}m{g.edge_count}")
def test_invariant_inequalities(g):
    iota = S.isolation_number(g).value
    gamma = S.domination_number(g).value
    nu = S.maximum_matching(g).value
    nu_prime = S.min_maximal_matching(g).value
    assert iota <= gamma
    assert nu_prime <= nu


def test_solver_determinism():
    g = random_connected_graph(8, 0.35, 77)
    for fn in (S.isolation_number, S.domination_number, S.independence_number,
               S.maximum_matching, S.min_maximal_matching, S.min_isolating_edge_set):
        assert fn(g) == fn(g)
