"""Composition enumeration: frozen cases, coverage, and invariants."""

import itertools

import pytest

from conftest import P, comm_ctx, free_ctx, mixed_ctx, tensor_ctx
from gsb.compositions import (
    comm_spair,
    free_compositions,
    instantiate,
    mz_compositions,
    pair_families,
    tensor_compositions,
)
from gsb.errors import NotMonic, ParamNotApplicable
from gsb.kernels import factor_positions
from gsb.orders import LESS
from gsb.poly import Polynomial
from protocol import random_poly, seeded


# ---- free algebra ----------------------------------------------------------

def test_free_self_intersection_telescopes(f2ctx):
    f = P(f2ctx, "x1^2 - x1")
    fams = free_compositions(f, f)
    assert [fam.kind for fam in fams] == ["Free-Intersection"]
    w, p = instantiate(fams[0], ())
    assert w == (0, 0, 0)
    assert p.is_zero()


def test_free_two_sided_overlaps(f2ctx):
    f = P(f2ctx, "x1*x2 - x2")
    g = P(f2ctx, "x2*x1 - x1")
    ws = {instantiate(fam, ())[0] for fam in free_compositions(f, g)}
    ws |= {instantiate(fam, ())[0] for fam in free_compositions(g, f)}
    assert ws == {(0, 1, 0), (1, 0, 1)}


def test_free_inclusion(f2ctx):
    f = P(f2ctx, "x1*x2*x1 - x1")
    g = P(f2ctx, "x2 - x1")
    fams = free_compositions(f, g)
    assert [fam.kind for fam in fams] == ["Free-Inclusion"]
    w, p = instantiate(fams[0], ())
    assert w == f.lead_monomial
    # f - a.g.b with a = b = x1
    assert p == P(f2ctx, "x1^3 - x1")


def test_not_monic_rejected(f2ctx):
    f = P(f2ctx, "2*x1*x2 - x2")
    g = P(f2ctx, "x2 - x1")
    with pytest.raises(NotMonic):
        free_compositions(f, g)
    with pytest.raises(NotMonic):
        tensor_compositions(
            P(tensor_ctx(1, 1), "2*x1;y1"), P(tensor_ctx(1, 1), "x1;y1")
        )


# ---- tensor algebra: frozen cases ------------------------------------------

def test_skew_inclusion_worked_example():
    ctx = tensor_ctx(1, 1, xn=("x",), yn=("y",))
    f = P(ctx, "x^2;y - x;y")
    g = P(ctx, "x;y^2 - x;y")
    fams = tensor_compositions(f, g)
    skews = [fam for fam in fams if fam.kind == "XY-SkewInclusion"]
    assert skews
    seen = set()
    for fam in skews:
        w, p = instantiate(fam, ())
        seen.add((w, p))
    target_w = ((0, 0), (0, 0))
    target_p = P(ctx, "x^2;y - x;y^2")
    assert (target_w, target_p) in seen
    # the witness a=1, b=x, c=1, d=y appears among the skew families
    wit = {tuple(wd for _, wd, _ in fam.witness) for fam in skews}
    assert ((), (0,), (), (0,)) in wit


def test_disjoint_leads_no_composition():
    ctx = tensor_ctx(2, 2)
    f = P(ctx, "x1;y1 - 1")
    g = P(ctx, "x2;y2 - 1")
    assert tensor_compositions(f, g) == []
    assert tensor_compositions(g, f) == []


def test_parameterless_family_rejects_parameter():
    ctx = tensor_ctx(1, 1)
    f = P(ctx, "x1^2;y1 - x1;y1")
    g = P(ctx, "x1;y1^2 - x1;y1")
    fam = [x for x in tensor_compositions(f, g) if x.param_axis is None][0]
    with pytest.raises(ParamNotApplicable):
        instantiate(fam, (0,))


def test_parametric_family_accepts_words():
    ctx = tensor_ctx(1, 2)
    f = P(ctx, "x1;y1 - x1")
    fams = [x for x in tensor_compositions(f, f) if x.param_axis == "Y"]
    assert fams
    fam = fams[0]
    w0, _ = instantiate(fam, ())
    w2, _ = instantiate(fam, (0, 1))
    assert ctx.universe.degree(w2) == ctx.universe.degree(w0) + 2
    with pytest.raises(ParamNotApplicable):
        instantiate(fam, (5,))  # letter outside the Y alphabet


def test_self_pair_y_gap_family_is_nontrivial():
    # f with an empty Y lead but Y-bearing tail: f.c - c.f is a real check
    ctx = tensor_ctx(1, 2)
    f = P(ctx, "x1 - y1")
    fams = [x for x in tensor_compositions(f, f) if x.param_axis == "Y"]
    assert fams
    ps = {instantiate(fam, (1,))[1] for fam in fams}
    assert any(not p.is_zero() for p in ps)


def test_lead_below_ambiguity_sweep():
    rng = seeded("compositions-lead-below-w")
    ctx = tensor_ctx(2, 2)
    order = ctx.order
    checked = 0
    while checked < 300:
        f = random_poly(rng, ctx, max_deg=3, monic=True)
        g = random_poly(rng, ctx, max_deg=3, monic=True)
        if f.is_zero() or g.is_zero():
            continue
        for fam in tensor_compositions(f, g):
            params = [()]
            if fam.param_axis:
                alphabet = ctx.universe.param_alphabet(fam.param_axis)
                for plen in (1, 2, 3, 4):
                    params.extend(
                        itertools.product(alphabet.letters(), repeat=plen)
                    )
            for param in params:
                w, p = instantiate(fam, param)  # asserts internally too
                if not p.is_zero():
                    assert order.cmp(p.lead_monomial, w) == LESS
                checked += 1


# ---- tensor algebra: exhaustiveness of the case table ----------------------

def _covered_ambiguities(f, g, bound):
    universe = f.ctx.universe
    covered = set()
    fams = tensor_compositions(f, g)
    if g is not f:
        fams = fams + tensor_compositions(g, f)
    for fam in fams:
        base = fam.base_degree()
        if fam.param_axis is None:
            if base <= bound:
                covered.add(fam.ambiguity(()))
            continue
        alphabet = universe.param_alphabet(fam.param_axis)
        for plen in range(bound - base + 1):
            for param in itertools.product(alphabet.letters(), repeat=plen):
                covered.add(fam.ambiguity(param))
    return covered


def _assert_hulls_covered(f, g, bound):
    universe = f.ctx.universe
    FX, FY = f.lead_monomial
    GX, GY = g.lead_monomial
    covered = _covered_ambiguities(f, g, bound)
    for d in range(bound + 1):
        for wx, wy in universe.monomials_of_degree(d):
            for i1 in factor_positions(wx, FX):
                for j1 in factor_positions(wy, FY):
                    for i2 in factor_positions(wx, GX):
                        for j2 in factor_positions(wy, GY):
                            if f is g and (i1, j1) == (i2, j2):
                                continue
                            x_dis = i1 + len(FX) <= i2 or i2 + len(GX) <= i1
                            y_dis = j1 + len(FY) <= j2 or j2 + len(GY) <= j1
                            if x_dis and y_dis:
                                continue
                            xlo = min(i1, i2)
                            xhi = max(i1 + len(FX), i2 + len(GX))
                            ylo = min(j1, j2)
                            yhi = max(j1 + len(FY), j2 + len(GY))
                            hull = (wx[xlo:xhi], wy[ylo:yhi])
                            assert hull in covered, (
                                (wx, wy),
                                (i1, j1),
                                (i2, j2),
                                hull,
                            )


def test_every_ambiguity_has_a_family():
    rng = seeded("compositions-exhaustive")
    shapes = [(1, 1), (2, 1), (1, 2)]
    done = 0
    while done < 25:
        nx, ny = shapes[done % len(shapes)]
        ctx = tensor_ctx(nx, ny)
        f = random_poly(rng, ctx, max_deg=3, max_terms=1, monic=True)
        g = random_poly(rng, ctx, max_deg=3, max_terms=1, monic=True)
        if f.is_zero() or g.is_zero():
            continue
        _assert_hulls_covered(f, g, 6)
        _assert_hulls_covered(f, f, 5)
        done += 1


# ---- free/tensor consistency when Y is empty --------------------------------

def _embed_free_in_tensor(p, tctx):
    return Polynomial.from_terms(tctx, (((m, ()), c) for m, c in p.terms))


def test_free_equals_tensor_with_empty_y():
    rng = seeded("free-tensor-consistency")
    fctx = free_ctx(2)
    tctx = tensor_ctx(2, 0, yn=())
    done = 0
    while done < 200:
        f = random_poly(rng, fctx, max_deg=3, monic=True)
        g = random_poly(rng, fctx, max_deg=3, monic=True)
        if f.is_zero() or g.is_zero():
            continue
        ft = _embed_free_in_tensor(f, tctx)
        gt = _embed_free_in_tensor(g, tctx)
        free_set = {
            (w, p.terms) for w, p in (instantiate(fam, ()) for fam in free_compositions(f, g))
        }
        tens_set = set()
        for fam in tensor_compositions(ft, gt):
            w, p = instantiate(fam, ())  # only the empty parameter exists
            tens_set.add((w[0], tuple((m[0], c) for m, c in p.terms)))
        assert free_set == tens_set, (f.terms, g.terms)
        done += 1


# ---- commutative S-pairs ----------------------------------------------------

def test_comm_spair_example():
    ctx = comm_ctx(2)
    f = P(ctx, "x1*x2 - x1")
    g = P(ctx, "x2^2 - x2")
    fam = comm_spair(f, g)
    w, p = instantiate(fam, ())
    assert w == ((0, 1), (1, 2))
    assert p.is_zero()  # x2.f - x1.g cancels exactly
    assert not fam.coprime_trivial


def test_comm_spair_coprime_flag():
    ctx = comm_ctx(2)
    fam = comm_spair(P(ctx, "x1 - 1"), P(ctx, "x2 - 1"))
    assert fam.coprime_trivial


def test_comm_spair_self_is_zero():
    ctx = comm_ctx(2)
    f = P(ctx, "x1*x2 - x1")
    _, p = instantiate(comm_spair(f, f), ())
    assert p.is_zero()


def test_comm_pair_families_orientation():
    ctx = comm_ctx(2)
    f = P(ctx, "x1*x2 - x1")
    g = P(ctx, "x2^2 - x2")
    # exactly one orientation feeds the queue
    assert len(pair_families(f, g)) + len(pair_families(g, f)) == 1


# ---- mixed compositions ------------------------------------------------------

def test_mz_inclusion_example():
    ctx = mixed_ctx(2, 2)
    f = P(ctx, "x1*x2;y1*y2 - 1")
    g = P(ctx, "x2;y2 - 1")
    fams = mz_compositions(f, g)
    c1 = [fam for fam in fams if fam.kind == "MZ-C1"]
    assert len(c1) == 1
    w, p = instantiate(c1[0], ())
    assert w == (((0, 1), (1, 1)), (0, 1))
    # p = f - x1.y1.g
    from gsb.poly import mono_mul

    assert p == f - mono_mul((((0, 1),), (0,)), g, ctx.universe.one)


def test_mz_overlap_example():
    ctx = mixed_ctx(1, 2)
    f = P(ctx, "x1;y1*y2 - 1")
    g = P(ctx, "x1;y2*y1 - 1")
    fams = mz_compositions(f, g)
    c2 = [fam for fam in fams if fam.kind == "MZ-C2"]
    assert len(c2) == 1
    w, p = instantiate(c2[0], ())
    assert w == (((0, 1),), (0, 1, 0))  # x1 ; y1 y2 y1
    from gsb.poly import mono_mul

    one = ctx.universe.one
    expected = mono_mul(one, f, ((), (0,))) - mono_mul(((), (0,)), g, one)
    assert p == expected  # f.y1 - y1.g


def test_mz_external_example():
    ctx = mixed_ctx(3, 2)
    f = P(ctx, "x1*x2;y1 - 1")
    g = P(ctx, "x2*x3;y2 - 1")
    fams = mz_compositions(f, g)
    c3 = [fam for fam in fams if fam.kind == "MZ-C3"]
    assert len(c3) == 1
    w0, _ = instantiate(c3[0], ())
    assert w0 == (((0, 1), (1, 1), (2, 1)), (0, 1))  # L=x1x2x3, y1 c0 y2 at c0=1
    w1, _ = instantiate(c3[0], (0,))
    assert w1 == (((0, 1), (1, 1), (2, 1)), (0, 0, 1))


def test_mz_external_requires_shared_variable_and_y_parts():
    ctx = mixed_ctx(2, 1)
    f = P(ctx, "x1;y1 - 1")
    g = P(ctx, "x2;y1 - 1")
    kinds = [fam.kind for fam in mz_compositions(f, g)]
    assert "MZ-C3" not in kinds  # coprime X leads
    f2 = P(ctx, "x1*x2;y1 - 1")
    g2 = P(ctx, "x2 - 1")
    kinds2 = [fam.kind for fam in mz_compositions(f2, g2)]
    assert "MZ-C3" not in kinds2  # empty Y lead on g


def test_mz_forced_left_context_when_g_has_no_y():
    ctx = mixed_ctx(2, 1)
    f = P(ctx, "x1*x2;y1^2 - 1")
    g = P(ctx, "x2 - 1")
    c1 = [fam for fam in mz_compositions(f, g) if fam.kind == "MZ-C1"]
    # only c = 1 is allowed, not one witness per split of y1^2
    assert len(c1) == 1
    assert c1[0].witness[0] == ("c", (), "Y")


def test_mz_equal_y_leads_tie_break():
    ctx = mixed_ctx(2, 1)
    f = P(ctx, "x1;y1 - 1")
    g = P(ctx, "x2;y1 - 1")
    # lead of g is x-larger, so only (g, f) carries the inclusion family
    assert not any(fam.kind == "MZ-C1" for fam in mz_compositions(f, g))
    assert any(fam.kind == "MZ-C1" for fam in mz_compositions(g, f))
