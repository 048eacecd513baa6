import pathlib

import pytest

from ietkit import Diet, Iet, OrderedAlphabet, Permutation, QuadNum

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def abc():
    return OrderedAlphabet("abc")


@pytest.fixture(scope="session")
def golden(abc):
    """The three-interval golden rotation: lengths 1 - 2*alpha, alpha, alpha
    with alpha = (3 - sqrt(5)) / 2, image order b, c, a."""
    alpha = QuadNum(3, -1, 2, 5)
    lengths = {"a": QuadNum(-2, 1, 1, 5), "b": alpha, "c": alpha}
    return Iet(abc, Permutation.from_one_line_letters("bca", abc), lengths)


@pytest.fixture(scope="session")
def seven_diet(abc):
    """Discrete exchange of 7 points with composition (4, 2, 1), reversing permutation."""
    return Diet([4, 2, 1], Permutation.symmetric(3))


@pytest.fixture(scope="session")
def golden_file():
    return str(DATA / "golden.iet")
