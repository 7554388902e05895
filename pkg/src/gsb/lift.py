"""Transfer between commutative, mixed, and free settings.

The abelianization sends a free word to its letter multiset; its section
sends a commutative monomial to the unique weakly ascending word, which is
the minimum of the fiber under the matching lifted order.  A minimal
Groebner basis in the commutative (or mixed) setting lifts to a
Groebner-Shirshov basis in the free (or tensor) setting by rewriting each
element through the section, multiplying in the interior monomials of its
lead, and adjoining the commutators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotGroebner, NotMinimal
from .monoids import (
    CommUniverse,
    FreeUniverse,
    MixedUniverse,
    TensorUniverse,
    abelianize,
    ascending_word,
    comm_degree,
    exponent_vectors,
)
from .orders import EpsLiftOrder, LiftedTensorOrder, YFirstOrder
from .poly import Context, Polynomial, mono_mul
from .render import format_monomial
from .rewrite import CompletionConfig, check, is_minimal

__all__ = [
    "abelianize_poly",
    "abelianize_mixed_poly",
    "ascending_poly",
    "ascending_mixed_poly",
    "interior_monomials",
    "commutators",
    "tensor_commutators",
    "eps_target_context",
    "tensor_target_context",
    "LiftResult",
    "lift_commutative",
    "lift_mixed",
]


# ---------------------------------------------------------------------------
# the maps, extended linearly to polynomials
# ---------------------------------------------------------------------------

def abelianize_poly(f: Polynomial, target_ctx: Context) -> Polynomial:
    """Commutative image of a free polynomial (fibers merge)."""
    return Polynomial.from_terms(
        target_ctx, ((abelianize(m), c) for m, c in f.terms)
    )


def abelianize_mixed_poly(f: Polynomial, target_ctx: Context) -> Polynomial:
    """Mixed image of a normal-word polynomial; the Y word is untouched."""
    return Polynomial.from_terms(
        target_ctx, (((abelianize(m[0]), m[1]), c) for m, c in f.terms)
    )


def ascending_poly(f: Polynomial, target_ctx: Context) -> Polynomial:
    """Section of the abelianization: each monomial becomes its ascending word."""
    return Polynomial.from_terms(
        target_ctx, ((ascending_word(m), c) for m, c in f.terms)
    )


def ascending_mixed_poly(f: Polynomial, target_ctx: Context) -> Polynomial:
    """Section on mixed polynomials; the Y word is untouched."""
    return Polynomial.from_terms(
        target_ctx, (((ascending_word(m[0]), m[1]), c) for m, c in f.terms)
    )


# ---------------------------------------------------------------------------
# interior monomials of a commutative lead
# ---------------------------------------------------------------------------

def interior_monomials(m: tuple, degree_cap: int, comm_order=None) -> list:
    """Commutative monomials in the variables strictly inside m's index range.

    Contains the identity; for m = 1 or an empty interior range it is just
    the identity.  The full set is infinite whenever the range is nonempty,
    so enumeration stops at the degree cap, ascending in the given order.
    """
    out = [()]
    if not m:
        return out
    lo = m[0][0]
    hi = m[-1][0]
    inner = list(range(lo + 1, hi))
    if not inner or degree_cap < 1:
        return out
    for d in range(1, degree_cap + 1):
        for vec in exponent_vectors(d, len(inner)):
            out.append(tuple((inner[k], e) for k, e in enumerate(vec) if e))
    if comm_order is not None:
        out.sort(key=comm_order.key)
    return out


def has_interior_range(m: tuple) -> bool:
    return bool(m) and m[-1][0] - m[0][0] > 1


# ---------------------------------------------------------------------------
# commutator sets and target contexts
# ---------------------------------------------------------------------------

def commutators(ctx: Context) -> list:
    """x_i.x_j - x_j.x_i for i > j as monic free polynomials."""
    n = ctx.universe.alphabet.size
    out = []
    for i in range(n):
        for j in range(i):
            out.append(
                Polynomial.from_terms(ctx, [((i, j), 1), ((j, i), -1)])
            )
    return out


def tensor_commutators(ctx: Context) -> list:
    """The same commutators with empty Y parts, in the tensor universe."""
    n = ctx.universe.alphabet_x.size
    out = []
    for i in range(n):
        for j in range(i):
            out.append(
                Polynomial.from_terms(
                    ctx, [(((i, j), ()), 1), (((j, i), ()), -1)]
                )
            )
    return out


def eps_target_context(comm_ctx: Context) -> Context:
    """Free-word context whose order refines the given commutative order."""
    universe = comm_ctx.universe
    if not isinstance(universe, CommUniverse):
        raise NotGroebner("expected a commutative context")
    return Context(
        comm_ctx.field,
        FreeUniverse(universe.alphabet),
        EpsLiftOrder(comm_ctx.order),
    )


def tensor_target_context(mixed_ctx: Context) -> Context:
    """Tensor context whose order refines the given Y-first mixed order."""
    universe = mixed_ctx.universe
    if not isinstance(universe, MixedUniverse):
        raise NotGroebner("expected a mixed context")
    order = mixed_ctx.order
    if not isinstance(order, YFirstOrder):
        raise NotGroebner("the mixed basis must be ordered Y-first")
    return Context(
        mixed_ctx.field,
        TensorUniverse(universe.alphabet_x, universe.alphabet_y),
        LiftedTensorOrder(order),
    )


# ---------------------------------------------------------------------------
# the two lifting constructions
# ---------------------------------------------------------------------------

@dataclass
class LiftResult:
    elements: list
    ctx: Context
    degree_cap: int
    truncated: bool

    def warnings(self) -> list:
        if not self.truncated:
            return []
        return [
            "interior multiplier enumeration truncated at degree "
            f"{self.degree_cap}; the lifted basis is verified only within "
            "that scope"
        ]


def _verify_minimal_gsb(elements, cfg: CompletionConfig):
    if not elements:
        return
    universe = elements[0].ctx.universe
    for i, s in enumerate(elements):
        if s.is_zero() or not s.is_monic():
            raise NotMinimal(f"element {i + 1} is not monic")
        for j, t in enumerate(elements):
            if i != j and universe.contains_factor(
                s.lead_monomial, t.lead_monomial
            ):
                raise NotMinimal(
                    f"lead of element {i + 1} contains the lead of "
                    f"element {j + 1}: "
                    f"{format_monomial(s.lead_monomial, universe)} vs "
                    f"{format_monomial(t.lead_monomial, universe)}"
                )
    state = check(elements, cfg)
    if state.failures:
        i, j, fam, param, _ = state.failures[0]
        raise NotGroebner(
            f"pair ({i + 1},{j + 1}) has a non-trivial composition: "
            + fam.describe()
        )


def lift_commutative(
    basis,
    degree_cap: int = 8,
    verify_cfg: CompletionConfig | None = None,
    verify: bool = True,
) -> LiftResult:
    """Lift a minimal commutative Groebner basis to the free algebra.

    Output: the section image of each interior multiple of each element,
    followed by the commutators, monic and ordered under the lifted order.
    The identity multiplier is always included, so the input embeds even
    when the cap is tight.
    """
    elements = list(getattr(basis, "elements", basis))
    ctx = getattr(basis, "ctx", None) or elements[0].ctx
    if verify:
        _verify_minimal_gsb(elements, verify_cfg or CompletionConfig(max_degree=None))
    target = eps_target_context(ctx)
    comm_order = ctx.order
    out = []
    truncated = False
    for s in elements:
        lead = s.lead_monomial
        truncated = truncated or has_interior_range(lead)
        room = degree_cap - comm_degree(lead)
        for u in interior_monomials(lead, max(room, 0), comm_order):
            out.append(ascending_poly(mono_mul(u, s, ()), target))
    out.extend(commutators(target))
    return LiftResult(out, target, degree_cap, truncated)


def lift_mixed(
    basis,
    degree_cap: int = 8,
    verify_cfg: CompletionConfig | None = None,
    verify: bool = True,
) -> LiftResult:
    """Lift a minimal mixed Groebner-Shirshov basis to the tensor algebra.

    Interior multipliers come from the commutative X part of each lead;
    the commutators of the X generators are adjoined with empty Y parts.
    """
    elements = list(getattr(basis, "elements", basis))
    ctx = getattr(basis, "ctx", None) or elements[0].ctx
    if verify:
        _verify_minimal_gsb(elements, verify_cfg or CompletionConfig())
    target = tensor_target_context(ctx)
    comm_order = ctx.order.order_x
    one_y = ()
    out = []
    truncated = False
    for s in elements:
        lead_x = s.lead_monomial[0]
        truncated = truncated or has_interior_range(lead_x)
        room = degree_cap - ctx.universe.degree(s.lead_monomial)
        for u in interior_monomials(lead_x, max(room, 0), comm_order):
            out.append(
                ascending_mixed_poly(mono_mul((u, one_y), s, ctx.universe.one), target)
            )
    out.extend(tensor_commutators(target))
    return LiftResult(out, target, degree_cap, truncated)
