import pytest

from layerlen.textio import parse_algebra

A1_TEXT = """\
field p=2
vertices 1
arrows a:1->1
relations a*a*a
"""

A2_TEXT = """\
field p=2
vertices 1 2 3
arrows a:1->2 b:2->3
relations b*a
"""

A3_TEXT = """\
field p=2
vertices 1 2
arrows a:1->2
relations
"""


@pytest.fixture(scope="session")
def A1():
    return parse_algebra(A1_TEXT, name="A1")


@pytest.fixture(scope="session")
def A2():
    return parse_algebra(A2_TEXT, name="A2")


@pytest.fixture(scope="session")
def A3():
    return parse_algebra(A3_TEXT, name="A3")


@pytest.fixture(scope="session")
def A2p3():
    return parse_algebra(A2_TEXT.replace("p=2", "p=3"), name="A2p3")


@pytest.fixture(scope="session")
def algebras(A1, A2, A3):
    return {"A1": A1, "A2": A2, "A3": A3}
