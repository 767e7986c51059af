import pytest

from fpwords.groups import cyclic, elementary_abelian_2
from fpwords.words import FreeProduct


def make_fp(kind):
    return {
        "Z2*Z3": lambda: FreeProduct(cyclic(2, "a"), cyclic(3, "t")),
        "Z3*Z3": lambda: FreeProduct(cyclic(3, "s"), cyclic(3, "t")),
        "Z4*Z3": lambda: FreeProduct(cyclic(4, "c"), cyclic(3, "t")),
        "Z6*Z3": lambda: FreeProduct(cyclic(6, "g"), cyclic(3, "t")),
        "Z2*Z4": lambda: FreeProduct(cyclic(2, "a"), cyclic(4, "s")),
        "Z2*V4": lambda: FreeProduct(cyclic(2, "a"), elementary_abelian_2(2)),
        "Z2*V8": lambda: FreeProduct(cyclic(2, "a"), elementary_abelian_2(3)),
    }[kind]()


def W(fp, text):
    """Parse a space separated word literal such as "a t a t^2"."""
    return fp.parse(text.split())


@pytest.fixture
def z2z3():
    return make_fp("Z2*Z3")


@pytest.fixture
def z3z3():
    return make_fp("Z3*Z3")


@pytest.fixture
def z4z3():
    return make_fp("Z4*Z3")


@pytest.fixture
def z6z3():
    return make_fp("Z6*Z3")


@pytest.fixture
def z2v4():
    return make_fp("Z2*V4")
