from fractions import Fraction
from pathlib import Path

import pytest

from drgwb import graphs as G
from drgwb.params import ClassicalParams, intersection_array, intersection_tensor, spectrum

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def test_parse_triangle():
    g = G.from_edge_list("3\n0 1\n1 2\n0 2")
    assert g.n == 3 and len(g.edges()) == 3 and g.is_regular()


def test_parse_errors():
    with pytest.raises(G.NotSimple):
        G.from_edge_list("3\n0 1\n1 0\n1 2")
    with pytest.raises(G.NotSimple):
        G.from_edge_list("2\n0 0\n0 1")
    with pytest.raises(G.Disconnected):
        G.from_edge_list("4\n0 1\n2 3")
    with pytest.raises(G.ParseError):
        G.from_edge_list("3\n0 x")
    with pytest.raises(G.ParseError):
        G.from_edge_list("3\n0 7")


def test_edge_list_roundtrip():
    g = G.petersen()
    back = G.from_edge_list(G.to_edge_list(g))
    assert back.adjacency == g.adjacency


def test_generators():
    q4 = G.hypercube(4)
    assert q4.n == 16 and q4.is_regular() and q4.degree(0) == 4 and q4.is_bipartite()
    f5 = G.folded_hypercube(5)
    assert f5.n == 16 and f5.degree(0) == 5 and not f5.is_bipartite() and f5.triangle_free()
    gr = G.grassmann_q(4, 2, 2)
    assert gr.n == 35
    assert G.is_distance_regular(gr) == intersection_array(ClassicalParams(2, 2, 2, 6))
    assert G.from_spec("hamming:3,3").n == 27
    with pytest.raises(ValueError):
        G.from_spec("nonsense:3")


def test_distances():
    assert G.distances(G.cycle(5), 3).sizes == [1, 2, 2]
    part = G.distances(G.hypercube(4), 5)
    assert part.sizes == [1, 4, 6, 4, 1] and part.eccentricity == 4
    assert G.distances(G.folded_hypercube(7), 0).eccentricity == 3


def test_is_distance_regular():
    assert str(G.is_distance_regular(G.petersen())) == "{3,2;1,1}"
    assert str(G.is_distance_regular(G.folded_hypercube(5))) == "{5,4;1,2}"
    bad = G.is_distance_regular(G.path(3))
    assert isinstance(bad, G.NotDistanceRegular)
    assert bad.values[0] != bad.values[1] and bad.first != bad.second
    assert "at pair" in str(bad)


def test_local_graphs():
    loc = G.local_graph(G.folded_hypercube(5), 0)
    assert loc.n == 5 and loc.edges() == []
    loc = G.local_graph(G.grassmann_q(4, 2, 2), 0)
    # a_1 = 9 and b_0 = 18: the local graph is 9-regular on 18 vertices
    assert loc.n == 18 and loc.is_regular() and loc.degree(0) == 9
    loc = G.local_graph(G.complete(3), 0)
    assert loc.n == 2 and loc.edges() == [(0, 1)]


def test_distance_matrices_sum_to_all_ones():
    g = G.petersen()
    total = G.distance_matrix(g, 0) + G.distance_matrix(g, 1) + G.distance_matrix(g, 2)
    assert all(x == 1 for row in total.rows for x in row)
    assert G.distance_matrix(g, 1) == G.adjacency_matrix(g)
    with pytest.raises(IndexError):
        G.distance_matrix(g, 3)


def _manifest():
    rows = []
    for line in (CORPUS / "manifest.tsv").read_text().splitlines():
        if line.startswith("#") or not line.strip():
            continue
        rows.append(line.split("\t"))
    return rows


@pytest.mark.parametrize("name,file,expected", _manifest(), ids=lambda v: v if isinstance(v, str) else "")
def test_corpus_files(name, file, expected):
    g = G.from_edge_list((CORPUS / file).read_text(), name=name)
    res = G.is_distance_regular(g, full=True)
    if expected == "not-drg":
        assert isinstance(res, G.NotDistanceRegular)
    else:
        assert str(res) == expected


def spectra_agree(concrete, recurrence) -> bool:
    if len(concrete) != len(recurrence):
        return False
    for (theta, m), entry in zip(concrete, recurrence):
        if entry.multiplicity != m:
            return False
        if isinstance(theta, Fraction):
            if entry.theta != theta:
                return False
        else:
            factor, lo, hi = theta
            other = entry.theta
            if entry.rational or other.factor != factor or not (max(lo, other.lo) < min(hi, other.hi)):
                return False
    return True


@pytest.mark.parametrize("g", [G.cycle(5), G.petersen(), G.hypercube(3), G.folded_hypercube(5),
                               G.johnson(5, 2), G.hamming(3, 3)], ids=lambda g: g.name)
def test_oracle_equivalence_small(g):
    ia = G.is_distance_regular(g)
    brute = G.intersection_numbers(g)
    assert brute == [[[int(x) for x in row] for row in layer] for layer in intersection_tensor(ia)]
    assert spectra_agree(G.concrete_spectrum(g), spectrum(ia))
