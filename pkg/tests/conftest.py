from functools import lru_cache

import pytest

from gqtvc.geometry import (build_elliptic_gq, build_flock_gq,
                            build_symplectic_gq, build_t2star_gq, dualize,
                            payne_qclan, point_graph)


@lru_cache(maxsize=None)
def geometry(name: str, dual: bool = False):
    builders = {
        "w2": lambda: build_symplectic_gq(2),
        "w3": lambda: build_symplectic_gq(3),
        "q5_2": lambda: build_elliptic_gq(2),
        "q5_3": lambda: build_elliptic_gq(3),
        "t2star": build_t2star_gq,
        "payne": lambda: build_flock_gq(payne_qclan()),
    }
    pls = builders[name]()
    return dualize(pls) if dual else pls


@lru_cache(maxsize=None)
def graph_of(name: str, dual: bool = False):
    return point_graph(geometry(name, dual))


@pytest.fixture
def w2_graph():
    return graph_of("w2")


@pytest.fixture
def q5_2_graph():
    return graph_of("q5_2")


@pytest.fixture
def gq53_graph():
    return graph_of("t2star", dual=True)
