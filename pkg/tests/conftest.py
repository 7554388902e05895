"""Shared context builders and polynomial helpers for the test suite."""

import sys
from pathlib import Path

# allow running the tests from a source checkout without installing
_SRC = Path(__file__).resolve().parent.parent / "src"
try:
    import gsb  # noqa: F401
except ImportError:  # pragma: no cover
    sys.path.insert(0, str(_SRC))

import pytest

from gsb.fields import QQ
from gsb.monoids import (
    Alphabet,
    CommUniverse,
    FreeUniverse,
    MixedUniverse,
    TensorUniverse,
)
from gsb.orders import default_order
from gsb.poly import Context
from gsb.presentation import parse_polynomial


def xnames(n):
    return tuple(f"x{i + 1}" for i in range(n))


def ynames(n):
    return tuple(f"y{j + 1}" for j in range(n))


def free_ctx(n=2, order=None, names=None, field=QQ):
    universe = FreeUniverse(Alphabet(names or xnames(n), "X"))
    return Context(field, universe, order or default_order(universe))


def comm_ctx(n=2, order=None, field=QQ):
    universe = CommUniverse(Alphabet(xnames(n), "X"))
    return Context(field, universe, order or default_order(universe))


def tensor_ctx(nx=1, ny=1, order=None, field=QQ, xn=None, yn=None):
    universe = TensorUniverse(
        Alphabet(xn or xnames(nx), "X"), Alphabet(yn or ynames(ny), "Y")
    )
    return Context(field, universe, order or default_order(universe))


def mixed_ctx(nx=2, ny=1, order=None, field=QQ):
    universe = MixedUniverse(
        Alphabet(xnames(nx), "X"), Alphabet(ynames(ny), "Y")
    )
    return Context(field, universe, order or default_order(universe))


def P(ctx, text):
    """Parse a polynomial literal in a context."""
    return parse_polynomial(text, ctx)


@pytest.fixture
def f2ctx():
    return free_ctx(2)
