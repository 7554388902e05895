"""Monomial orders for all four universes.

Every order exposes a sort key; keys compare exactly like the order, so
polynomial normalization is a single ``sorted`` call.  All orders here are
monomial well-orders (property-tested): u > v implies a.u.b > a.v.b.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import OrderMismatch
from .monoids import (
    CommUniverse,
    FreeUniverse,
    MixedUniverse,
    TensorUniverse,
    Universe,
    abelianize,
    comm_degree,
)

LESS, EQUAL, GREATER = -1, 0, 1


class MonomialOrder:
    """Comparison strategy over one monomial universe."""

    #: universe kinds the order can be attached to
    kinds = ()
    spec = "?"

    def key(self, m):
        raise NotImplementedError

    def cmp(self, u, v) -> int:
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return LESS
        if ku > kv:
            return GREATER
        return EQUAL

    def sort_terms(self, monomials):
        return sorted(monomials, key=self.key, reverse=True)

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        return ()

    def __repr__(self):
        return self.spec


class DegLexOrder(MonomialOrder):
    """Degree first, then left-to-right comparison of letter indices."""

    kinds = ("free",)
    spec = "deglex"

    def key(self, m):
        return (len(m), m)


class CommDegLexOrder(MonomialOrder):
    """Commutative deg-lex; higher exponent on the largest differing variable wins."""

    kinds = ("commutative",)
    spec = "deglex"

    def key(self, m):
        # compare from the largest variable down: (index, exp) pairs descending
        return (comm_degree(m), tuple(reversed(m)))


class CommLexOrder(MonomialOrder):
    """Commutative pure lex, largest variable decides first."""

    kinds = ("commutative",)
    spec = "lex"

    def key(self, m):
        return tuple(reversed(m))


class CommDegRevLexOrder(MonomialOrder):
    """Commutative degrevlex: degree, then smaller exponent on the smallest variable."""

    kinds = ("commutative",)
    spec = "degrevlex"

    def key(self, m):
        return (comm_degree(m), tuple((i, -e) for i, e in m))


class TensorOrder(MonomialOrder):
    """Normal words compared by X part, ties broken by Y part."""

    kinds = ("tensor",)

    def __init__(self, order_x: MonomialOrder, order_y: MonomialOrder):
        self.order_x = order_x
        self.order_y = order_y

    def _key(self):
        return (self.order_x, self.order_y)

    @property
    def spec(self):
        return f"tensor({self.order_x.spec},{self.order_y.spec})"

    def key(self, m):
        return (self.order_x.key(m[0]), self.order_y.key(m[1]))


class YFirstOrder(MonomialOrder):
    """Mixed monomials compared by Y word first, ties broken by the X part."""

    kinds = ("mixed",)

    def __init__(self, order_x: MonomialOrder, order_y: MonomialOrder):
        self.order_x = order_x
        self.order_y = order_y

    def _key(self):
        return (self.order_x, self.order_y)

    @property
    def spec(self):
        return f"mixed-yfirst({self.order_x.spec},{self.order_y.spec})"

    def key(self, m):
        return (self.order_y.key(m[1]), self.order_x.key(m[0]))


@lru_cache(maxsize=1 << 16)
def _abelian_cached(word):
    return abelianize(word)


class EpsLiftOrder(MonomialOrder):
    """Free words compared by commutative image, ties by left-to-right lex.

    The lex tie-break makes the ascending word the minimum of each fiber
    of the abelianization, which the lifting constructions rely on.
    """

    kinds = ("free",)

    def __init__(self, comm_order: MonomialOrder | None = None):
        self.comm_order = comm_order or CommDegLexOrder()

    def _key(self):
        return (self.comm_order,)

    @property
    def spec(self):
        if isinstance(self.comm_order, CommDegLexOrder):
            return "eps-lift"
        return f"eps-lift({self.comm_order.spec})"

    def key(self, m):
        return (self.comm_order.key(_abelian_cached(m)), m)


class LiftedTensorOrder(MonomialOrder):
    """Normal words compared by mixed image (Y first), ties by lex on the X word."""

    kinds = ("tensor",)

    def __init__(self, mixed_order: YFirstOrder | None = None):
        self.mixed_order = mixed_order or YFirstOrder(CommDegLexOrder(), DegLexOrder())

    def _key(self):
        return (self.mixed_order,)

    @property
    def spec(self):
        inner = self.mixed_order
        if isinstance(inner.order_x, CommDegLexOrder) and isinstance(
            inner.order_y, DegLexOrder
        ):
            return "lifted-tensor"
        return f"lifted-tensor({inner.order_x.spec},{inner.order_y.spec})"

    def key(self, m):
        return (self.mixed_order.key((_abelian_cached(m[0]), m[1])), m[0])


_COMM_ORDERS = {
    "deglex": CommDegLexOrder,
    "lex": CommLexOrder,
    "degrevlex": CommDegRevLexOrder,
}


def _parse_args(spec: str):
    """Split 'name(a,b)' into ('name', ['a', 'b'])."""
    spec = spec.strip()
    if "(" not in spec:
        return spec, []
    if not spec.endswith(")"):
        raise OrderMismatch(f"malformed order spec {spec!r}")
    head, rest = spec.split("(", 1)
    args = [a.strip() for a in rest[:-1].split(",") if a.strip()]
    return head.strip(), args


def make_order(spec: str, universe: Universe) -> MonomialOrder:
    """Build the order named by a presentation-file spec for a universe."""
    head, args = _parse_args(spec)
    kind = universe.kind

    if kind == "free":
        if head == "deglex" and not args:
            return DegLexOrder()
        if head == "eps-lift":
            comm = _comm_arg(args, 0, "deglex")
            return EpsLiftOrder(comm)
    elif kind == "commutative":
        if head in _COMM_ORDERS and not args:
            return _COMM_ORDERS[head]()
    elif kind == "tensor":
        if head == "tensor":
            ox = _free_arg(args, 0)
            oy = _free_arg(args, 1)
            return TensorOrder(ox, oy)
        if head == "lifted-tensor":
            comm = _comm_arg(args, 0, "deglex")
            oy = _free_arg(args, 1)
            return LiftedTensorOrder(YFirstOrder(comm, oy))
    elif kind == "mixed":
        if head == "mixed-yfirst":
            comm = _comm_arg(args, 0, "deglex")
            oy = _free_arg(args, 1)
            return YFirstOrder(comm, oy)

    raise OrderMismatch(f"order {spec!r} is not valid for the {kind} universe")


def _comm_arg(args, i, default):
    name = args[i] if i < len(args) else default
    if name not in _COMM_ORDERS:
        raise OrderMismatch(f"unknown commutative order {name!r}")
    return _COMM_ORDERS[name]()


def _free_arg(args, i):
    name = args[i] if i < len(args) else "deglex"
    if name != "deglex":
        raise OrderMismatch(f"unknown free-word order {name!r}")
    return DegLexOrder()


def default_order(universe: Universe) -> MonomialOrder:
    if isinstance(universe, FreeUniverse):
        return DegLexOrder()
    if isinstance(universe, CommUniverse):
        return CommDegLexOrder()
    if isinstance(universe, TensorUniverse):
        return TensorOrder(DegLexOrder(), DegLexOrder())
    if isinstance(universe, MixedUniverse):
        return YFirstOrder(CommDegLexOrder(), DegLexOrder())
    raise OrderMismatch(f"no default order for {universe!r}")
