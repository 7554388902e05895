"""Brute-force ideal membership and quotient dimensions by exact elimination.

Completely independent of the rewriting engine: the degree-d slice spans
all sandwich products a.s.b whose hull monomial a.lead(s).b has total
degree at most d, triangularized over the monomial basis in descending
order of the active monomial order.  Sound for any input set; complete
relative to the chosen slice degree.
"""

from __future__ import annotations

from .errors import DegreeOutOfBound, ZeroPolynomial
from .poly import Polynomial, mono_mul


class IdealSlice:
    """Row-echelon span of the degree-bounded sandwich products of a basis."""

    def __init__(self, basis, degree: int):
        elements = list(getattr(basis, "elements", basis))
        if not elements:
            ctx = getattr(basis, "ctx", None)
            if ctx is None:
                raise ValueError("IdealSlice needs a context-bearing basis")
        else:
            ctx = elements[0].ctx
        self.ctx = ctx
        self.degree = degree
        self.key = ctx.order.key
        self.pivots: dict = {}
        universe = ctx.universe
        for s in elements:
            room = degree - universe.degree(s.lead_monomial)
            if room < 0:
                continue
            for a, b in universe.sandwich_multipliers(room):
                self._insert(dict(mono_mul(a, s, b).terms))

    def _insert(self, row: dict):
        field = self.ctx.field
        zero = field.zero
        while row:
            lead = max(row, key=self.key)
            pivot = self.pivots.get(lead)
            if pivot is None:
                inv = field.inv(row[lead])
                self.pivots[lead] = {m: field.mul(inv, c) for m, c in row.items()}
                return lead
            c = row[lead]
            for m, pc in pivot.items():
                v = field.sub(row.get(m, zero), field.mul(c, pc))
                if v == zero:
                    row.pop(m, None)
                else:
                    row[m] = v
        return None

    def reduces_to_zero(self, f: Polynomial) -> bool:
        field = self.ctx.field
        zero = field.zero
        row = dict(f.terms)
        while row:
            lead = max(row, key=self.key)
            pivot = self.pivots.get(lead)
            if pivot is None:
                return False
            c = row[lead]
            for m, pc in pivot.items():
                v = field.sub(row.get(m, zero), field.mul(c, pc))
                if v == zero:
                    row.pop(m, None)
                else:
                    row[m] = v
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def pivot_degrees(self) -> dict:
        deg = self.ctx.universe.degree
        out: dict[int, int] = {}
        for m in self.pivots:
            d = deg(m)
            out[d] = out.get(d, 0) + 1
        return out


def member(f: Polynomial, basis, degree: int, slice_: IdealSlice | None = None) -> bool:
    """Whether f lies in the span of the degree-bounded product slice."""
    if not f.is_zero():
        lead_deg = f.ctx.universe.degree(f.lead_monomial)
        if lead_deg > degree:
            raise DegreeOutOfBound(
                f"leading degree {lead_deg} exceeds the slice degree {degree}"
            )
    if slice_ is None:
        slice_ = IdealSlice(basis, degree)
    return slice_.reduces_to_zero(f)


def quotient_dim(basis, degree: int) -> list:
    """Per-degree dimensions of the quotient for degrees 0..degree.

    Exact whenever the order refines total degree or the basis is
    homogeneous; each entry is the monomial count minus the pivot count
    of that degree.
    """
    elements = list(getattr(basis, "elements", basis))
    ctx = getattr(basis, "ctx", None)
    if ctx is None:
        ctx = elements[0].ctx
    universe = ctx.universe
    slice_ = IdealSlice(basis, degree)
    by_degree = slice_.pivot_degrees()
    dims = []
    for d in range(degree + 1):
        count = sum(1 for _ in universe.monomials_of_degree(d))
        dims.append(count - by_degree.get(d, 0))
    return dims


def leading_divisibility(f: Polynomial, basis) -> bool:
    """Whether some basis leading word divides the leading word of f."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no leading word")
    elements = getattr(basis, "elements", basis)
    universe = f.ctx.universe
    lw = f.lead_monomial
    return any(
        universe.contains_factor(lw, s.lead_monomial) for s in elements
    )
