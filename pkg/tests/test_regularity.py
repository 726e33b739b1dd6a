import pytest

from gqtvc.graph import complement, graph_from_edges
from gqtvc.regularity import (DEGENERATE, SrgParams, check_isoregular,
                              check_k4e_free, check_regular, srg_parameters,
                              subconstituent, triad_center_profile)

from conftest import graph_of


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph_from_edges(10, outer + spokes + inner)


def test_check_regular():
    assert check_regular(petersen()) == 3
    assert check_regular(graph_from_edges(3, [(0, 1)])) is None
    assert check_regular(graph_from_edges(0, [])) == 0


def test_srg_parameters_petersen():
    assert srg_parameters(petersen()) == SrgParams(10, 3, 0, 1)


def test_srg_parameters_degenerate_and_negative():
    k3 = graph_from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert srg_parameters(k3) is DEGENERATE
    assert srg_parameters(graph_from_edges(4, [])) is DEGENERATE
    c6 = graph_from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    assert srg_parameters(c6) is None  # mu is not constant


def test_srg_feasibility_identity():
    assert SrgParams(15, 6, 1, 3).feasible()
    # the same graph with k = (s - 1) t = 2 fails the identity
    assert not SrgParams(15, 2, 1, 3).feasible()


def test_point_graph_srg_parameters(w2_graph, q5_2_graph, gq53_graph):
    assert srg_parameters(w2_graph) == SrgParams(15, 6, 1, 3)
    assert srg_parameters(q5_2_graph) == SrgParams(27, 10, 1, 5)
    assert srg_parameters(gq53_graph) == SrgParams(96, 20, 4, 4)


def test_subconstituent():
    g = petersen()
    g1 = subconstituent(g, 0, 1)
    assert g1.n == 3 and g1.edge_count() == 0  # lambda = 0
    g2 = subconstituent(g, 0, 2)
    assert g2.n == 6 and check_regular(g2) == 2  # a hexagon
    assert subconstituent(g, 0, 3).n == 0


def test_isoregular_levels():
    g = petersen()
    assert check_isoregular(g, 1).ok
    assert check_isoregular(g, 2).ok  # SRG
    rep = check_isoregular(g, 3)
    assert not rep.ok and rep.witness is not None


def test_isoregular_witness_is_concrete(w2_graph):
    rep = check_isoregular(w2_graph, 3)
    assert not rep.ok
    a, b = rep.witness
    assert len(a) == len(b) == 3


def test_isoregular_complement_closure(q5_2_graph):
    # 3-isoregularity is preserved under complement
    assert check_isoregular(q5_2_graph, 3).ok
    assert check_isoregular(complement(q5_2_graph), 3).ok


def test_isoregular_table_values(q5_2_graph):
    # GQ(2, 4): triads have s + 1 = 3 centres, collinear triples s - 2 = 0
    rep = check_isoregular(q5_2_graph, 3)
    by_edges = {}
    for code, val in rep.table.items():
        if code.order == 3:
            by_edges[bin(code.bits).count("1")] = val
    assert by_edges == {0: 3, 1: 1, 2: 0, 3: 0}


def test_check_k4e_free(w2_graph):
    assert check_k4e_free(w2_graph) is None
    k4e = graph_from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    w = check_k4e_free(k4e)
    assert w is not None
    a, b, c, d = w
    assert k4e.has_edge(a, b) and not k4e.has_edge(c, d)
    assert k4e.has_edge(a, c) and k4e.has_edge(b, d)


def test_triad_center_profile(q5_2_graph, w2_graph):
    # all triads of GQ(2, 4) have exactly 3 centres (t = s^2)
    assert triad_center_profile(q5_2_graph) == {3: 720}
    # GQ(2, 2) has both centric and acentric triads
    prof = triad_center_profile(w2_graph)
    assert set(prof) == {1, 3}
