"""Random-basis generation protocols shared by unit and acceptance tests.

Every generator takes an explicit Random instance; sampling that fails a
protocol filter (budget blowups, unit ideals, oversized bases) is
discarded and redrawn, so a fixed seed pins the whole corpus.
"""

import random

from gsb.errors import BudgetExceeded
from gsb.fields import QQ
from gsb.monoids import Alphabet, CommUniverse, FreeUniverse, MixedUniverse, TensorUniverse
from gsb.orders import default_order
from gsb.poly import Context, Polynomial
from gsb.rewrite import CompletionConfig, complete, minimalize

COEFFS = (-2, -1, 1, 2)


def random_free_poly(rng, ctx, max_deg=3, max_terms=3):
    n = ctx.universe.alphabet.size
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(1, max_deg)
        w = tuple(rng.randrange(n) for _ in range(d))
        terms[w] = terms.get(w, 0) + rng.choice(COEFFS)
    return Polynomial.from_terms(ctx, terms.items())


def random_comm_poly(rng, ctx, max_deg=3, max_terms=3, min_deg=0):
    n = ctx.universe.alphabet.size
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(min_deg, max_deg)
        exps = [0] * n
        for _ in range(d):
            exps[rng.randrange(n)] += 1
        m = tuple((i, e) for i, e in enumerate(exps) if e)
        terms[m] = terms.get(m, 0) + rng.choice(COEFFS)
    return Polynomial.from_terms(ctx, terms.items())


def random_homogeneous_mixed_poly(rng, ctx, deg, max_terms=3):
    nx = ctx.universe.alphabet_x.size
    ny = ctx.universe.alphabet_y.size
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        dx = rng.randint(0, deg)
        exps = [0] * nx
        for _ in range(dx):
            exps[rng.randrange(nx)] += 1
        cm = tuple((i, e) for i, e in enumerate(exps) if e)
        yw = tuple(rng.randrange(ny) for _ in range(deg - dx))
        m = (cm, yw)
        terms[m] = terms.get(m, 0) + rng.choice(COEFFS)
    return Polynomial.from_terms(ctx, terms.items())


def random_completed_free_basis(rng, names, max_degree=7, max_elements=6):
    """A completed free-algebra basis from small random inputs."""
    universe = FreeUniverse(Alphabet(names, "X"))
    ctx = Context(QQ, universe, default_order(universe))
    while True:
        polys = [random_free_poly(rng, ctx) for _ in range(rng.randint(1, 2))]
        polys = [p for p in polys if p and len(p.lead_monomial) >= 1]
        if not polys:
            continue
        try:
            state = complete(
                polys,
                CompletionConfig(max_degree=max_degree, param_bound=2, max_steps=1500),
            )
        except BudgetExceeded:
            continue
        if len(state.elements) <= max_elements:
            return state


def random_minimal_comm_basis(rng, nvars, max_elements=6):
    """A minimal commutative basis: completion then minimalization.

    Unit ideals and bases with a degree-1 lead are redrawn to keep the
    lifted quotients nondegenerate.
    """
    universe = CommUniverse(Alphabet(tuple(f"x{i+1}" for i in range(nvars)), "X"))
    ctx = Context(QQ, universe, default_order(universe))
    while True:
        polys = [
            random_comm_poly(rng, ctx, min_deg=0) for _ in range(rng.randint(1, 3))
        ]
        polys = [p for p in polys if p and ctx.universe.degree(p.lead_monomial) >= 2]
        if not polys:
            continue
        try:
            state = complete(polys, CompletionConfig(max_degree=None, max_steps=3000))
        except BudgetExceeded:
            continue
        mst = minimalize(state)
        if any(universe.degree(e.lead_monomial) < 2 for e in mst.elements):
            continue
        if len(mst.elements) > max_elements:
            continue
        return mst


def random_minimal_mixed_basis(rng, nx, ny, max_elements=5):
    """A minimal mixed basis from homogeneous inputs.

    Homogeneity keeps every slice graded, which the dimension comparisons
    rely on because the Y-first order does not refine total degree.
    """
    universe = MixedUniverse(
        Alphabet(tuple(f"x{i+1}" for i in range(nx)), "X"),
        Alphabet(tuple(f"y{j+1}" for j in range(ny)), "Y"),
    )
    ctx = Context(QQ, universe, default_order(universe))
    while True:
        polys = [
            random_homogeneous_mixed_poly(rng, ctx, rng.randint(1, 3))
            for _ in range(rng.randint(1, 2))
        ]
        polys = [p for p in polys if p and universe.degree(p.lead_monomial) >= 1]
        if not polys:
            continue
        try:
            state = complete(
                polys, CompletionConfig(max_degree=6, param_bound=2, max_steps=2000)
            )
        except BudgetExceeded:
            continue
        mst = minimalize(state)
        if any(e.lead_monomial == universe.one for e in mst.elements):
            continue
        if len(mst.elements) > max_elements:
            continue
        return mst


def embed_free_into_tensor(poly, tctx, side):
    """Send a free polynomial over X (side='x') or Y (side='y') into a tensor context."""
    if side == "x":
        return Polynomial.from_terms(tctx, (((m, ()), c) for m, c in poly.terms))
    return Polynomial.from_terms(tctx, ((((), m), c) for m, c in poly.terms))


def union_in_tensor(rng, nx, ny):
    """Two completed one-sided bases and their union in the tensor algebra."""
    s1 = random_completed_free_basis(rng, tuple(f"x{i+1}" for i in range(nx)))
    s2 = random_completed_free_basis(rng, tuple(f"y{j+1}" for j in range(ny)))
    universe = TensorUniverse(
        Alphabet(tuple(f"x{i+1}" for i in range(nx)), "X"),
        Alphabet(tuple(f"y{j+1}" for j in range(ny)), "Y"),
    )
    tctx = Context(QQ, universe, default_order(universe))
    union = [embed_free_into_tensor(p, tctx, "x") for p in s1.elements]
    union += [embed_free_into_tensor(p, tctx, "y") for p in s2.elements]
    return s1, s2, tctx, union


def random_monomial(rng, universe, max_deg):
    """One random monomial of degree <= max_deg, uniform over a simple scheme."""
    d = rng.randint(0, max_deg)
    kind = universe.kind
    if kind == "free":
        n = universe.alphabet.size
        return tuple(rng.randrange(n) for _ in range(d))
    if kind == "commutative":
        n = universe.alphabet.size
        exps = [0] * n
        for _ in range(d):
            exps[rng.randrange(n)] += 1
        return tuple((i, e) for i, e in enumerate(exps) if e)
    nx = universe.alphabet_x.size
    ny = universe.alphabet_y.size
    dx = rng.randint(0, d)
    if kind == "tensor":
        xw = tuple(rng.randrange(nx) for _ in range(dx))
    else:
        exps = [0] * nx
        for _ in range(dx):
            exps[rng.randrange(nx)] += 1
        xw = tuple((i, e) for i, e in enumerate(exps) if e)
    yw = tuple(rng.randrange(ny) for _ in range(d - dx))
    return (xw, yw)


def random_poly(rng, ctx, max_deg=3, max_terms=4, monic=False):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        m = random_monomial(rng, ctx.universe, max_deg)
        terms[m] = terms.get(m, 0) + rng.choice(COEFFS)
    p = Polynomial.from_terms(ctx, terms.items())
    if monic and p:
        p = p.make_monic()
    return p


def seeded(name):
    from seed_manifest import SEEDS

    return random.Random(SEEDS[name])
