import pytest

from bergekit.catalog import named
from bergekit.graphs import (
    SimpleGraph,
    chromatic_number,
    clique_number,
    complete,
    components,
    cycle,
    graph_of,
    incidence_matrix,
    independence_number,
    is_bipartite,
    is_bipartite_with_cycle,
    is_forest,
    path,
)
from bergekit.matrix import BitMatrix, canonical_form, identity, ones, product


def test_graph_of_examples():
    assert graph_of(named("G2")) == complete(3)
    assert graph_of(identity(3)).edges() == []
    W = graph_of(product(ones(1), named("C4")))
    assert clique_number(W) == 3 and independence_number(W) == 2
    assert sorted(bin(a).count("1") for a in W.adj) == [3, 3, 3, 3, 4]


def test_invariants():
    C5 = cycle(5)
    assert (clique_number(C5), chromatic_number(C5), independence_number(C5)) == (2, 3, 2)
    K3 = complete(3)
    assert (clique_number(K3), chromatic_number(K3), independence_number(K3)) == (3, 3, 1)
    assert chromatic_number(SimpleGraph(0, ())) == 0
    with pytest.raises(ValueError):
        clique_number(complete(13))


def test_incidence_matrix():
    assert incidence_matrix(path(3)).cols == (0b011, 0b110)
    K22 = SimpleGraph.parse("4;0-2,0-3,1-2,1-3")
    assert canonical_form(incidence_matrix(K22)) == canonical_form(named("C4"))
    star = SimpleGraph.parse("4;0-1,0-2,0-3")
    assert canonical_form(incidence_matrix(star)) == canonical_form(named("H2"))


def test_predicates():
    assert is_forest(path(4))
    assert not is_forest(cycle(4)) and is_bipartite_with_cycle(cycle(4))
    assert not is_bipartite_with_cycle(cycle(5))
    assert not is_bipartite(cycle(5))
    assert len(components(SimpleGraph.parse("5;0-1,2-3"))) == 3


def test_parse_and_str():
    G = SimpleGraph.parse("4;0-1,1-2")
    assert str(G) == "4;0-1,1-2"
    with pytest.raises(ValueError):
        SimpleGraph.parse("3;1-1")
    with pytest.raises(ValueError):
        SimpleGraph(2, (2, 0))


def test_chi_triggers():
    # 1_3, G_2 and the 5-cycle incidence all push the chromatic number to 3
    C5inc = incidence_matrix(cycle(5))
    for F in (ones(3), named("G2"), C5inc):
        assert chromatic_number(graph_of(F)) >= 3
