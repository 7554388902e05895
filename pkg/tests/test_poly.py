"""Polynomial normalization, leading data, and ring laws."""

import random
from fractions import Fraction

import pytest

from conftest import P, comm_ctx, free_ctx, mixed_ctx, tensor_ctx
from gsb.errors import UniverseMismatch, ZeroPolynomial
from gsb.orders import EpsLiftOrder
from gsb.poly import Context, Polynomial, mono_mul, poly_mul
from protocol import random_monomial, random_poly, seeded


def test_normalize_cancellation(f2ctx):
    u = (0, 1)
    p = Polynomial.from_terms(f2ctx, [(u, 1), (u, -1)])
    assert p.is_zero()


def test_normalize_sorts_descending(f2ctx):
    u, v = (0,), (0, 1)  # v > u under deglex
    p = Polynomial.from_terms(f2ctx, [(u, 2), (v, 3)])
    assert p.terms == ((v, Fraction(3)), (u, Fraction(2)))


def test_normalize_merges(f2ctx):
    u = (1,)
    p = Polynomial.from_terms(f2ctx, [(u, Fraction(1, 2)), (u, Fraction(1, 2))])
    assert p.terms == ((u, Fraction(1)),)


def test_lead_examples():
    ctx = tensor_ctx(2, 1)
    f = P(ctx, "x2;y1 + x1")
    assert f.lead() == (((1,), (0,)), Fraction(1))
    g = P(ctx, "3*x2;y1 + x1").make_monic()
    assert g.lead_coeff == Fraction(1)
    with pytest.raises(ZeroPolynomial):
        Polynomial.zero(ctx).lead()
    with pytest.raises(ZeroPolynomial):
        Polynomial.zero(ctx).make_monic()


def test_mono_mul_distributes():
    ctx = tensor_ctx(2, 2)
    f = P(ctx, "x2;y1 - y1")
    out = mono_mul(((0,), ()), f, ((), (1,)))
    assert out == P(ctx, "x1*x2;y1*y2 - x1;y1*y2")
    assert mono_mul(ctx.universe.one, f, ctx.universe.one) == f


def test_lead_of_monomial_product_sweep():
    rng = seeded("lemma-lead-of-product")
    contexts = [
        free_ctx(2),
        comm_ctx(3),
        tensor_ctx(2, 2),
        mixed_ctx(2, 2),
        free_ctx(3, order=EpsLiftOrder()),
    ]
    for _ in range(1000):
        ctx = rng.choice(contexts)
        f = random_poly(rng, ctx, monic=True)
        if f.is_zero():
            continue
        u = random_monomial(rng, ctx.universe, 2)
        v = random_monomial(rng, ctx.universe, 2)
        prod = mono_mul(u, f, v)
        assert prod.lead_monomial == ctx.universe.mul(
            u, ctx.universe.mul(f.lead_monomial, v)
        )


def test_ring_axioms():
    rng = seeded("poly-ring-axioms")
    for ctx in (free_ctx(2), comm_ctx(2), tensor_ctx(1, 1), mixed_ctx(1, 1)):
        for _ in range(400):
            f = random_poly(rng, ctx)
            g = random_poly(rng, ctx)
            h = random_poly(rng, ctx)
            assert (f + g) + h == f + (g + h)
            assert f + g == g + f
            assert f - f == Polynomial.zero(ctx)
            assert f.scalar_mul(0).is_zero()
            assert poly_mul(f, g + h) == poly_mul(f, g) + poly_mul(f, h)


def test_context_mismatch_is_hard_error():
    a = free_ctx(2)
    b = free_ctx(3)
    with pytest.raises(UniverseMismatch):
        P(a, "x1") + P(b, "x1")


def test_order_universe_compatibility():
    from gsb.fields import QQ
    from gsb.orders import DegLexOrder

    with pytest.raises(UniverseMismatch):
        Context(QQ, comm_ctx(2).universe, DegLexOrder())


def test_gf_coefficients():
    from gsb.fields import GF

    ctx = free_ctx(2, field=GF(5))
    f = P(ctx, "3*x1 + 4*x1")
    assert f.terms == (((0,), 2),)
    assert (f + f + f).lead_coeff == 1  # 6 mod 5
