"""Shared pytest fixtures for rigged configuration tests."""

from functools import lru_cache

import msgspec
import pytest

from rigged_app.algebra import AlgebraData
from rigged_app.configurations import MultiplicityArray
from rigged_app.crystal import RiggedConfigurationSet, generate_rc_set

pytest_plugins = ["pytest_django"]

A1 = AlgebraData("A", 1)
A2 = AlgebraData("A", 2)
A3 = AlgebraData("A", 3)
D4 = AlgebraData("D", 4)

# (B^{1,1})^{⊗3} of A_2
CUBE = MultiplicityArray.of({(1, 1): 3})
# B^{1,1} ⊗ B^{1,3} ⊗ B^{2,2} of A_2
MIXED = MultiplicityArray.of({(1, 1): 1, (1, 3): 1, (2, 2): 1})
# B^{2,2} of A_3
RECTANGLE = MultiplicityArray.of({(2, 2): 1})
# (B^{1,1})^{⊗3} of A_3
WORDS = MultiplicityArray.of({(1, 1): 3})
# (B^{1,1})^{⊗2} of A_1
PAIR = MultiplicityArray.of({(1, 1): 2})
# (B^{1,1})^{⊗4} of A_1
QUAD = MultiplicityArray.of({(1, 1): 4})
# B^{2,1} of D_4
SPIN_FREE = MultiplicityArray.of({(2, 1): 1})

BATTERY = [
    ("A2 cube", CUBE, A2),
    ("A2 mixed", MIXED, A2),
    ("A3 rectangle", RECTANGLE, A3),
    ("A3 words", WORDS, A3),
    ("A1 quad", QUAD, A1),
]


@lru_cache(maxsize=None)
def rc_set_for(L: MultiplicityArray, alg: AlgebraData) -> RiggedConfigurationSet:
    """Generated once per session; the sets are never mutated."""
    return generate_rc_set(L, alg)


@pytest.fixture
def cube_set():
    return rc_set_for(CUBE, A2)


@pytest.fixture
def mixed_set():
    return rc_set_for(MIXED, A2)


@pytest.fixture
def rectangle_set():
    return rc_set_for(RECTANGLE, A3)


@pytest.fixture
def d4_set():
    return rc_set_for(SPIN_FREE, D4)


@pytest.fixture
def instance_file(tmp_path):
    """Write an InstanceSpec to a JSON file and return its path."""

    def write(spec, name="instance.json"):
        path = tmp_path / name
        path.write_bytes(msgspec.json.encode(spec))
        return str(path)

    return write
