import numpy as np
import pytest

from tetraquadric import Tetrahedron

# Shared fixtures: trirectangular, generic, semi-orthocentric, orthocentric.
# The opposite-edge dot products are (0,0,0), (4,-1,-3), (0,-3,3), (0,0,0).


@pytest.fixture
def t_tri():
    return Tetrahedron(np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]], float))


@pytest.fixture
def t_gen():
    return Tetrahedron(np.array([[0, 0, 0], [4, 0, 0], [1, 3, 0], [2, 1, 2]], float))


@pytest.fixture
def t_semi():
    return Tetrahedron(np.array([[0, 0, 0], [4, 0, 0], [1, 3, 0], [1, 2, 2]], float))


@pytest.fixture
def t_orth():
    return Tetrahedron(np.array([[0, 0, 0], [4, 0, 0], [1, 3, 0], [1, 1, 2]], float))
