"""Polynomials with exact coefficients over one monomial universe.

A polynomial is an immutable sequence of (monomial, coefficient) terms in
strictly descending monomial order, attached to a context that fixes the
field, the universe, and the active order.  Mixing contexts is a hard
error: leading-term bookkeeping is the soundness root of everything else.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotMonic, UniverseMismatch, ZeroPolynomial
from .fields import Field
from .monoids import Universe
from .orders import MonomialOrder


@dataclass(frozen=True)
class Context:
    """Field + universe + order; every polynomial carries one."""

    field: Field
    universe: Universe
    order: MonomialOrder

    def __post_init__(self):
        if self.universe.kind not in self.order.kinds:
            raise UniverseMismatch(
                f"order {self.order!r} cannot rank {self.universe.kind} monomials"
            )

    def compatible(self, other: "Context") -> bool:
        return (
            self.field == other.field
            and self.universe == other.universe
            and self.order == other.order
        )


class Polynomial:
    """Normalized scalar combination of monomials of one universe."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: Context, terms: tuple):
        # `terms` must already be normalized; use the constructors below.
        self.ctx = ctx
        self.terms = terms

    # ----- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ctx: Context) -> "Polynomial":
        return cls(ctx, ())

    @classmethod
    def from_terms(cls, ctx: Context, pairs) -> "Polynomial":
        """Merge duplicates, drop zeros, sort strictly descending."""
        field = ctx.field
        acc: dict = {}
        for mono, coeff in pairs:
            coeff = field.of(coeff)
            if mono in acc:
                acc[mono] = field.add(acc[mono], coeff)
            else:
                acc[mono] = coeff
        key = ctx.order.key
        terms = tuple(
            (m, acc[m])
            for m in sorted(acc, key=key, reverse=True)
            if acc[m] != field.zero
        )
        return cls(ctx, terms)

    @classmethod
    def monomial(cls, ctx: Context, mono, coeff=1) -> "Polynomial":
        coeff = ctx.field.of(coeff)
        if coeff == ctx.field.zero:
            return cls.zero(ctx)
        return cls(ctx, ((mono, coeff),))

    @classmethod
    def one(cls, ctx: Context) -> "Polynomial":
        return cls.monomial(ctx, ctx.universe.one, 1)

    # ----- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def lead(self):
        """(monomial, coefficient) of the order-maximal term."""
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        return self.terms[0]

    @property
    def lead_monomial(self):
        return self.lead()[0]

    @property
    def lead_coeff(self):
        return self.lead()[1]

    def is_monic(self) -> bool:
        return bool(self.terms) and self.terms[0][1] == self.ctx.field.one

    def degree(self) -> int:
        """Max total degree over the support; -1 for the zero polynomial."""
        deg = self.ctx.universe.degree
        return max((deg(m) for m, _ in self.terms), default=-1)

    def monomials(self):
        return tuple(m for m, _ in self.terms)

    # ----- arithmetic ---------------------------------------------------

    def _require(self, other: "Polynomial"):
        if self.ctx is not other.ctx and not self.ctx.compatible(other.ctx):
            raise UniverseMismatch("polynomials from different contexts")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._require(other)
        field = self.ctx.field
        acc = dict(self.terms)
        for m, c in other.terms:
            if m in acc:
                s = field.add(acc[m], c)
                if s == field.zero:
                    del acc[m]
                else:
                    acc[m] = s
            else:
                acc[m] = c
        key = self.ctx.order.key
        return Polynomial(
            self.ctx, tuple((m, acc[m]) for m in sorted(acc, key=key, reverse=True))
        )

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        neg = self.ctx.field.neg
        return Polynomial(self.ctx, tuple((m, neg(c)) for m, c in self.terms))

    def scalar_mul(self, coeff) -> "Polynomial":
        field = self.ctx.field
        coeff = field.of(coeff)
        if coeff == field.zero:
            return Polynomial.zero(self.ctx)
        mul = field.mul
        return Polynomial(self.ctx, tuple((m, mul(coeff, c)) for m, c in self.terms))

    def make_monic(self) -> "Polynomial":
        if not self.terms:
            raise ZeroPolynomial("cannot scale the zero polynomial monic")
        lc = self.terms[0][1]
        if lc == self.ctx.field.one:
            return self
        return self.scalar_mul(self.ctx.field.inv(lc))

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.terms == other.terms
            and self.ctx.compatible(other.ctx)
        )

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        if not self.terms:
            return "Polynomial(0)"
        return f"Polynomial({self.terms!r})"


def mono_mul(a, f: Polynomial, b) -> Polynomial:
    """a.f.b for universe monomials a, b.

    Monomial orders are multiplication-compatible, so the termwise image
    keeps its strict descending order and no re-sort is needed; in the
    cancellative universes distinct monomials stay distinct.
    """
    mul = f.ctx.universe.mul
    return Polynomial(f.ctx, tuple((mul(mul(a, m), b), c) for m, c in f.terms))


def require_monic(*polys: Polynomial):
    for p in polys:
        if p.is_zero() or not p.is_monic():
            raise NotMonic("operation requires monic nonzero polynomials")


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    """Full product; used by tests and the oracle, not by reduction."""
    f._require(g)
    field = f.ctx.field
    mul = f.ctx.universe.mul
    acc: dict = {}
    for m1, c1 in f.terms:
        for m2, c2 in g.terms:
            m = mul(m1, m2)
            c = field.mul(c1, c2)
            if m in acc:
                acc[m] = field.add(acc[m], c)
            else:
                acc[m] = c
    return Polynomial.from_terms(f.ctx, acc.items())
