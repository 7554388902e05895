"""Composition (critical-pair) enumeration for all four settings.

A composition family packages one overlap geometry between the leading
words of an ordered pair (f, g): the ambiguity monomial w and the two
sandwiching multiplier templates whose difference is the composition
polynomial.  Families whose geometry leaves a gap on one axis carry a
free parameter word filling that gap; all other families are concrete.

Ordered pairs carry the orientation: the mirrored geometries of (f, g)
appear as the families of (g, f), so a completion driver enumerates both.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import ParamNotApplicable
from .monoids import (
    comm_lcm_gcd,
    comm_quotient,
    factorizations,
    overlaps,
)
from .orders import LESS
from .poly import Polynomial, mono_mul, require_monic
from .render import format_monomial, format_word


@dataclass(frozen=True)
class Side:
    """Multiplier template pre.param.post; `param` marks the insertion slot."""

    pre: object
    has_param: bool
    post: object

    def apply(self, universe, param_mono):
        if self.has_param:
            return universe.mul(self.pre, universe.mul(param_mono, self.post))
        return universe.mul(self.pre, self.post)


@dataclass(frozen=True)
class CompositionFamily:
    """One overlap case of an ordered pair (f, g), parameter possibly free."""

    kind: str
    variant: str | None
    f: Polynomial
    g: Polynomial
    lf: Side
    rf: Side
    lg: Side
    rg: Side
    param_axis: str | None = None
    witness: tuple = ()
    coprime_trivial: bool = dc_field(default=False)

    @property
    def ctx(self):
        return self.f.ctx

    def _param_mono(self, param: tuple):
        universe = self.ctx.universe
        if self.param_axis is None:
            if param:
                raise ParamNotApplicable(
                    f"{self.kind} family takes no parameter, got {param!r}"
                )
            return None
        alphabet = universe.param_alphabet(self.param_axis)
        if any(not (0 <= i < alphabet.size) for i in param):
            raise ParamNotApplicable(
                f"parameter {param!r} is not a word over {alphabet!r}"
            )
        return universe.embed_param(param, self.param_axis)

    def ambiguity(self, param: tuple = ()):
        """The ambiguity monomial w for the given parameter word."""
        universe = self.ctx.universe
        pm = self._param_mono(param)
        lead_f = self.f.lead_monomial
        return universe.mul(
            self.lf.apply(universe, pm),
            universe.mul(lead_f, self.rf.apply(universe, pm)),
        )

    def base_degree(self) -> int:
        """Degree of w at the empty parameter; each parameter letter adds 1."""
        return self.ctx.universe.degree(self.ambiguity(()))

    def describe(self) -> str:
        universe = self.ctx.universe
        kind = self.kind if self.variant is None else f"{self.kind}/{self.variant}"
        bits = [f"kind={kind}", f"w={format_monomial(self.ambiguity(()), universe)}"]
        for name, word, axis in self.witness:
            if hasattr(universe, "alphabet"):
                alphabet = universe.alphabet
            elif axis == "X":
                alphabet = universe.alphabet_x
            else:
                alphabet = universe.alphabet_y
            bits.append(f"{name}={format_word(word, alphabet)}")
        if self.param_axis:
            bits.append(f"param={self.param_axis}*")
        if self.coprime_trivial:
            bits.append("coprime-trivial")
        return " ".join(bits)


def instantiate(fam: CompositionFamily, param: tuple = ()):
    """Concrete (w, p) for one parameter word; lead(p) < w holds strictly."""
    universe = fam.ctx.universe
    order = fam.ctx.order
    pm = fam._param_mono(param)
    lfa = fam.lf.apply(universe, pm)
    rfa = fam.rf.apply(universe, pm)
    lga = fam.lg.apply(universe, pm)
    rga = fam.rg.apply(universe, pm)
    w = universe.mul(lfa, universe.mul(fam.f.lead_monomial, rfa))
    w_g = universe.mul(lga, universe.mul(fam.g.lead_monomial, rga))
    assert w == w_g, f"inconsistent ambiguity in {fam.kind}: {w} != {w_g}"
    p = mono_mul(lfa, fam.f, rfa) - mono_mul(lga, fam.g, rga)
    assert p.is_zero() or order.cmp(p.lead_monomial, w) == LESS, (
        f"composition lead not below w in {fam.kind}"
    )
    return w, p


# ---------------------------------------------------------------------------
# free algebra
# ---------------------------------------------------------------------------

def free_compositions(f: Polynomial, g: Polynomial) -> list:
    """Inclusion and intersection families of an ordered pair in a free algebra."""
    require_monic(f, g)
    universe = f.ctx.universe
    one = universe.one
    fixed = lambda m: Side(m, False, one)  # noqa: E731
    lw_f = f.lead_monomial
    lw_g = g.lead_monomial
    out = []
    for a, b in factorizations(lw_f, lw_g):
        if f is g and not a and not b:
            continue  # identity self-inclusion
        out.append(
            CompositionFamily(
                "Free-Inclusion", None, f, g,
                fixed(one), fixed(one), fixed(a), fixed(b),
                witness=(("a", a, "X"), ("b", b, "X")),
            )
        )
    # proper intersections: both leading words stick out, w = lw_f.b = a.lw_g
    for a, b in overlaps(lw_f, lw_g):
        if not b:
            continue  # lw_g inside lw_f: already an inclusion witness
        out.append(
            CompositionFamily(
                "Free-Intersection", None, f, g,
                fixed(one), fixed(b), fixed(a), fixed(one),
                witness=(("a", a, "X"), ("b", b, "X")),
            )
        )
    return out


# ---------------------------------------------------------------------------
# tensor product of two free algebras
# ---------------------------------------------------------------------------

def tensor_compositions(f: Polynomial, g: Polynomial) -> list:
    """All overlap families of an ordered pair of normal-word polynomials.

    The geometry is the product of the X-axis relation and the Y-axis
    relation between the leading words; disjoint placements on one axis
    leave a free parameter word between the two occupants, and fully
    disjoint placements need no composition at all.
    """
    require_monic(f, g)
    universe = f.ctx.universe
    one = universe.one
    fixed = lambda m: Side(m, False, one)  # noqa: E731
    FX, FY = f.lead_monomial
    GX, GY = g.lead_monomial
    self_pair = f is g

    x_incl = factorizations(FX, GX)  # (a, b): FX = a.GX.b
    x_inter = [(a, b) for b, a in overlaps(FX, GX) if a]  # w_X = FX.a = b.GX
    y_incl_fg = factorizations(FY, GY)  # (c, d): FY = c.GY.d
    y_incl_gf = factorizations(GY, FY)  # (c, d): GY = c.FY.d
    y_inter_fg = [(c, d) for d, c in overlaps(FY, GY) if c]  # w_Y = FY.c = d.GY
    y_inter_gf = [(c, d) for c, d in overlaps(GY, FY) if d]  # w_Y = c.FY = GY.d

    out = []

    def emit(kind, variant, lf, rf, lg, rg, param=None, **witness):
        out.append(
            CompositionFamily(
                kind, variant, f, g, lf, rf, lg, rg,
                param_axis=param,
                witness=tuple(
                    (n, w, "Y" if n in ("c", "d") else "X")
                    for n, w in witness.items()
                ),
            )
        )

    for a, b in x_incl:
        # X nested, Y placed disjointly: parameter word between the Y parts.
        # An empty included X lead at a boundary slot leaves both axes
        # disjoint, where no composition is defined.
        if GX or (a and b):
            emit(
                "X-Inclusion-Only", "w1",
                fixed(one), Side(one, True, ((), GY)),
                Side((a, FY), True, one), fixed((b, ())),
                param="Y", a=a, b=b,
            )
            emit(
                "X-Inclusion-Only", "w2",
                Side(((), GY), True, one), fixed(one),
                fixed((a, ())), Side((b, ()), True, ((), FY)),
                param="Y", a=a, b=b,
            )
        for c, d in y_incl_fg:
            if self_pair and not (a or b or c or d):
                continue  # identity self-inclusion
            emit(
                "XY-Inclusion", None,
                fixed(one), fixed(one), fixed((a, c)), fixed((b, d)),
                a=a, b=b, c=c, d=d,
            )
        for c, d in y_incl_gf:
            if not (c or d):
                continue  # equal Y parts: covered by XY-Inclusion
            emit(
                "XY-SkewInclusion", None,
                fixed(((), c)), fixed(((), d)), fixed((a, ())), fixed((b, ())),
                a=a, b=b, c=c, d=d,
            )
        for c, d in y_inter_fg:
            emit(
                "XIncl-YInter", "v1",
                fixed(one), fixed(((), c)), fixed((a, d)), fixed((b, ())),
                a=a, b=b, c=c, d=d,
            )
        for c, d in y_inter_gf:
            emit(
                "XIncl-YInter", "v2",
                fixed(((), c)), fixed(one), fixed((a, ())), fixed((b, d)),
                a=a, b=b, c=c, d=d,
            )

    for a, b in x_inter:
        emit(
            "X-Intersection-Only", "w1",
            fixed(one), Side((a, ()), True, ((), GY)),
            Side((b, FY), True, one), fixed(one),
            param="Y", a=a, b=b,
        )
        emit(
            "X-Intersection-Only", "w2",
            Side(((), GY), True, one), fixed((a, ())),
            fixed((b, ())), Side(one, True, ((), FY)),
            param="Y", a=a, b=b,
        )
        for c, d in y_inter_fg:
            emit(
                "XY-Intersection", None,
                fixed(one), fixed((a, c)), fixed((b, d)), fixed(one),
                a=a, b=b, c=c, d=d,
            )
        for c, d in y_inter_gf:
            emit(
                "XY-SkewIntersection", None,
                fixed(((), c)), fixed((a, ())), fixed((b, ())), fixed(((), d)),
                a=a, b=b, c=c, d=d,
            )
        for c, d in y_incl_fg:
            emit(
                "XInter-YIncl", "v1",
                fixed(one), fixed((a, ())), fixed((b, c)), fixed(((), d)),
                a=a, b=b, c=c, d=d,
            )
        for c, d in y_incl_gf:
            if not (c or d):
                continue  # equal Y parts: covered by XInter-YIncl/v1
            emit(
                "XInter-YIncl", "v2",
                fixed(((), c)), fixed((a, d)), fixed((b, ())), fixed(one),
                a=a, b=b, c=c, d=d,
            )

    # Y nested or overlapping, X placed disjointly: parameter word in X
    for c, d in y_incl_fg:
        if not GY and not (c and d):
            continue  # boundary slot of an empty Y lead: both axes disjoint
        emit(
            "Y-Inclusion-Only", "w1",
            fixed(one), Side(one, True, (GX, ())),
            Side((FX, c), True, one), fixed(((), d)),
            param="X", c=c, d=d,
        )
        emit(
            "Y-Inclusion-Only", "w2",
            Side((GX, ()), True, one), fixed(one),
            fixed(((), c)), Side(((), d), True, (FX, ())),
            param="X", c=c, d=d,
        )
    for c, d in y_inter_fg:
        emit(
            "Y-Intersection-Only", "w1",
            fixed(one), Side(one, True, (GX, c)),
            Side((FX, d), True, one), fixed(one),
            param="X", c=c, d=d,
        )
        emit(
            "Y-Intersection-Only", "w2",
            Side((GX, ()), True, one), fixed(((), c)),
            fixed(((), d)), Side(one, True, (FX, ())),
            param="X", c=c, d=d,
        )
    return out


# ---------------------------------------------------------------------------
# commutative algebra
# ---------------------------------------------------------------------------

def comm_spair(f: Polynomial, g: Polynomial) -> CompositionFamily:
    """The Buchberger S-pair at the lcm of the leading monomials."""
    require_monic(f, g)
    universe = f.ctx.universe
    one = universe.one
    lw_f = f.lead_monomial
    lw_g = g.lead_monomial
    lcm, gcd = comm_lcm_gcd(lw_f, lw_g)
    return CompositionFamily(
        "Comm-SPair", None, f, g,
        Side(comm_quotient(lcm, lw_f), False, one), Side(one, False, one),
        Side(comm_quotient(lcm, lw_g), False, one), Side(one, False, one),
        coprime_trivial=(gcd == ()),
    )


# ---------------------------------------------------------------------------
# mixed algebra (commutative X, free Y)
# ---------------------------------------------------------------------------

def mz_compositions(f: Polynomial, g: Polynomial) -> list:
    """Inclusion, overlap and external families of an ordered mixed pair.

    Inclusion matches every occurrence of the Y lead of g inside the Y
    lead of f (with the forced empty left context when g has no Y part,
    and the X-lead tie-break when the Y leads agree); overlap matches
    every proper two-sided Y overlap; the external family exists once,
    with a free Y-word parameter, whenever the X leads share a variable
    and both Y leads are nonempty.
    """
    require_monic(f, g)
    ctx = f.ctx
    universe = ctx.universe
    one = universe.one
    fixed = lambda m: Side(m, False, one)  # noqa: E731
    FX, FY = f.lead_monomial
    GX, GY = g.lead_monomial
    lcm, gcd = comm_lcm_gcd(FX, GX)
    qf = comm_quotient(lcm, FX)
    qg = comm_quotient(lcm, GX)
    key_x = ctx.order.order_x.key
    out = []

    # inclusion: GY occurs inside FY
    witnesses = factorizations(FY, GY)
    if GY == ():
        witnesses = [w for w in witnesses if w[0] == ()]
    if FY == GY and key_x(FX) < key_x(GX):
        witnesses = []
    for c, d in witnesses:
        if f is g and not (c or d):
            continue  # identity self-inclusion
        out.append(
            CompositionFamily(
                "MZ-C1", None, f, g,
                fixed((qf, ())), fixed(one),
                fixed((qg, c)), fixed(((), d)),
                witness=(("c", c, "Y"), ("d", d, "Y")),
            )
        )

    # overlap: a nonempty proper end of FY equals a nonempty proper start of GY,
    # giving FY.d = c.GY with the shared block c0
    for c, d in overlaps(FY, GY):
        if not d:
            continue  # GY a suffix of FY: already an inclusion witness
        out.append(
            CompositionFamily(
                "MZ-C2", None, f, g,
                fixed((qf, ())), fixed(((), d)),
                fixed((qg, c)), fixed(one),
                witness=(("c", c, "Y"), ("d", d, "Y"), ("c0", FY[len(c):], "Y")),
            )
        )

    # external: shared X variable, both Y leads nonempty, free gap word
    if gcd != () and FY != () and GY != ():
        out.append(
            CompositionFamily(
                "MZ-C3", None, f, g,
                fixed((qf, ())), Side(one, True, ((), GY)),
                Side((qg, FY), True, one), fixed(one),
                param_axis="Y",
            )
        )
    return out


_ENUMERATORS = {
    "free": free_compositions,
    "tensor": tensor_compositions,
    "mixed": mz_compositions,
}


def pair_families(f: Polynomial, g: Polynomial) -> list:
    """Families the completion driver must check for the ordered pair (f, g)."""
    kind = f.ctx.universe.kind
    if kind == "commutative":
        # the S-pair is sign-symmetric; keep the orientation with larger lead
        key = f.ctx.order.key
        if key(f.lead_monomial) < key(g.lead_monomial):
            return []
        return [comm_spair(f, g)]
    return _ENUMERATORS[kind](f, g)
