import pytest

from edgerigid import families as fam
from edgerigid.graphs import Graph

# Corpus: (name, graph, expected edge-rigidity). Rigid graphs here are
# edge-transitive or 1-walk-regular; the non-rigid ones fail the constant
# degree-sum condition. tree8 is a seeded Pruefer tree, pinned non-star.
RIGID = [
    ("K3", fam.complete_graph(3)),
    ("K4", fam.complete_graph(4)),
    ("K5", fam.complete_graph(5)),
    ("C4", fam.cycle_graph(4)),
    ("C5", fam.cycle_graph(5)),
    ("C6", fam.cycle_graph(6)),
    ("K1_2", fam.star_graph(2)),
    ("K1_4", fam.star_graph(4)),
    ("K2_3", fam.complete_bipartite_graph(2, 3)),
    ("K3_3", fam.complete_bipartite_graph(3, 3)),
    ("petersen", fam.petersen_graph()),
]

NONRIGID = [
    ("P4", fam.path_graph(4)),
    ("P5", fam.path_graph(5)),
    ("tree8", fam.random_tree(8, seed=0)),
    ("K4_minus_edge", Graph(4, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3)))),
]

CORPUS = [(name, g, True) for name, g in RIGID] + [(name, g, False) for name, g in NONRIGID]


@pytest.fixture(params=CORPUS, ids=[c[0] for c in CORPUS])
def corpus_case(request):
    """(name, graph, expected_rigid) over the whole corpus."""
    return request.param


@pytest.fixture(params=RIGID, ids=[c[0] for c in RIGID])
def rigid_graph(request):
    return request.param[1]


@pytest.fixture(params=NONRIGID, ids=[c[0] for c in NONRIGID])
def nonrigid_graph(request):
    return request.param[1]
