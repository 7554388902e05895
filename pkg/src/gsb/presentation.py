"""Line-oriented presentation files and the polynomial grammar.

    # comment
    field Q               (or F<p>)
    alphabet X: x1 < x2
    alphabet Y: y1 < y2
    universe tensor       (free | commutative | tensor | mixed)
    order tensor(deglex,deglex)
    rel y1*x1 - x1;y1
    rel x2*x1 = x1*x2     (equations become lhs - rhs)

Monomials: `x1*x2*x1` (free), `x1^2*x3` (commutative), `x1*x2;y1*y1`
(two-part universes, the `;` optional when one part is empty), `1` for the
identity.  Coefficients are integers, fractions `a/b`, or residues.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    AlphabetMismatch,
    OrderMismatch,
    PresentationError,
    UnknownGenerator,
)
from .fields import GF, QQ, Field
from .monoids import (
    Alphabet,
    CommUniverse,
    FreeUniverse,
    MixedUniverse,
    TensorUniverse,
    comm_from_pairs,
)
from .orders import default_order, make_order
from .poly import Context, Polynomial
from .render import format_polynomial

_TOKEN = re.compile(
    r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<sym>[-+*/^;=()]))"
)


@dataclass
class Presentation:
    field: Field
    universe: object
    order: object
    ctx: Context
    relations: list
    field_text: str
    order_text: str

    @property
    def universe_text(self) -> str:
        return self.universe.kind


def _tokenize(text: str, line_no: int, col_base: int):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise PresentationError(
                    f"unexpected character {text[pos:].strip()[0]!r}",
                    line=line_no,
                    column=col_base + pos + 1,
                )
            break
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), col_base + m.start(kind) + 1))
        pos = m.end()
    return tokens


class _PolyParser:
    """Recursive-descent parser for one polynomial expression."""

    def __init__(self, ctx: Context, tokens, line_no):
        self.ctx = ctx
        self.tokens = tokens
        self.i = 0
        self.line = line_no

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, -1)

    def _take(self):
        tok = self._peek()
        self.i += 1
        return tok

    def _fail(self, message, col=None):
        if col is None:
            col = self._peek()[2]
        raise PresentationError(message, line=self.line, column=col)

    def parse(self) -> Polynomial:
        terms = list(self._side())
        kind, _, col = self._peek()
        if kind == "sym" and self.tokens[self.i][1] == "=":
            self._take()
            neg = self._side()
            terms.extend((m, self.ctx.field.neg(c)) for m, c in neg)
            if self.i != len(self.tokens):
                self._fail("trailing input after equation")
        elif self.i != len(self.tokens):
            self._fail("trailing input after polynomial")
        return Polynomial.from_terms(self.ctx, terms)

    def _side(self):
        terms = [self._term(allow_sign=True)]
        while True:
            kind, val, _ = self._peek()
            if kind == "sym" and val in "+-":
                self._take()
                mono, coeff = self._term(allow_sign=False)
                if val == "-":
                    coeff = self.ctx.field.neg(coeff)
                terms.append((mono, coeff))
            else:
                break
        return terms

    def _term(self, allow_sign: bool):
        sign = 1
        kind, val, col = self._peek()
        while allow_sign and kind == "sym" and val in "+-":
            self._take()
            if val == "-":
                sign = -sign
            kind, val, col = self._peek()
        coeff, saw_coeff = self._coefficient()
        kind, val, _ = self._peek()
        if saw_coeff and kind == "sym" and val == "*":
            self._take()
            mono = self._monomial()
        elif saw_coeff:
            mono = self.ctx.universe.one
        else:
            mono = self._monomial()
        if sign < 0:
            coeff = self.ctx.field.neg(coeff)
        return mono, coeff

    def _coefficient(self):
        field = self.ctx.field
        kind, val, col = self._peek()
        if kind != "int":
            return field.one, False
        # a bare `1` may be the identity monomial; treat it as such only
        # when it is the whole factor chain start (no '/', and not like 3*x)
        self._take()
        nxt_kind, nxt_val, _ = self._peek()
        if nxt_kind == "sym" and nxt_val == "/":
            self._take()
            dkind, dval, dcol = self._take()
            if dkind != "int":
                self._fail("expected denominator", dcol)
            try:
                return field.div(field.of(int(val)), field.of(int(dval))), True
            except ZeroDivisionError:
                self._fail("zero denominator", dcol)
        return field.of(int(val)), True

    def _monomial(self):
        universe = self.ctx.universe
        if isinstance(universe, FreeUniverse):
            word = self._factor_chain(universe.alphabet, free=True)
            return word
        if isinstance(universe, CommUniverse):
            pairs = self._factor_chain(universe.alphabet, free=False)
            return comm_from_pairs(pairs)
        # two-part universes: x factors first, optional ';', then y factors
        ax, ay = universe.alphabet_x, universe.alphabet_y
        xfree = isinstance(universe, TensorUniverse)
        xpart, ypart = self._two_part_chain(ax, ay, xfree)
        if xfree:
            return (xpart, ypart)
        return (comm_from_pairs(xpart), ypart)

    def _factor(self, alphabet):
        kind, val, col = self._take()
        if kind == "int" and val == "1":
            return None
        if kind != "name":
            self._fail("expected a generator name", col)
        try:
            idx = alphabet.index(val)
        except AlphabetMismatch:
            raise UnknownGenerator(
                f"unknown generator {val!r}", line=self.line, column=col
            ) from None
        exp = 1
        kind, nval, _ = self._peek()
        if kind == "sym" and nval == "^":
            self._take()
            ekind, eval_, ecol = self._take()
            if ekind != "int":
                self._fail("expected an exponent", ecol)
            exp = int(eval_)
        return idx, exp

    def _factor_chain(self, alphabet, free: bool):
        factors = []
        while True:
            fac = self._factor(alphabet)
            if fac is not None:
                factors.append(fac)
            kind, val, _ = self._peek()
            if kind == "sym" and val == "*":
                self._take()
                continue
            break
        if free:
            word = []
            for idx, exp in factors:
                word.extend([idx] * exp)
            return tuple(word)
        return factors

    def _two_part_chain(self, ax, ay, xfree: bool):
        xfactors = []
        yword = []
        seen_y = False
        while True:
            kind, val, col = self._peek()
            if kind == "int" and val == "1":
                self._take()
            elif kind == "name":
                if val in ay.names:
                    seen_y = True
                    idx, exp = self._factor(ay)
                    yword.extend([idx] * exp)
                elif val in ax.names:
                    if seen_y:
                        self._fail(
                            "normal form puts X generators before Y generators",
                            col,
                        )
                    xfactors.append(self._factor(ax))
                else:
                    raise UnknownGenerator(
                        f"unknown generator {val!r}", line=self.line, column=col
                    )
            else:
                self._fail("expected a generator name", col)
            kind, val, col = self._peek()
            if kind == "sym" and val in ("*", ";"):
                if val == ";":
                    if seen_y:
                        self._fail("more than one ';' in a monomial", col)
                    seen_y = True
                self._take()
                continue
            break
        if xfree:
            word = []
            for idx, exp in xfactors:
                word.extend([idx] * exp)
            return tuple(word), tuple(yword)
        return xfactors, tuple(yword)


def parse_polynomial(text: str, ctx: Context, line_no: int = 1) -> Polynomial:
    tokens = _tokenize(text, line_no, 0)
    if not tokens:
        raise PresentationError("empty polynomial", line=line_no)
    return _PolyParser(ctx, tokens, line_no).parse()


_KINDS = {"free", "commutative", "tensor", "mixed"}


def parse_presentation(text: str) -> Presentation:
    field = None
    field_text = "Q"
    names: dict[str, tuple] = {}
    universe_kind = None
    order_text = None
    rel_lines = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "field":
            field, field_text = _parse_field(rest, line_no)
        elif head == "alphabet":
            role, alpha_names = _parse_alphabet(rest, line_no)
            if role in names:
                raise PresentationError(
                    f"alphabet {role} declared twice", line=line_no
                )
            names[role] = alpha_names
        elif head == "universe":
            if rest not in _KINDS:
                raise PresentationError(
                    f"unknown universe {rest!r}", line=line_no
                )
            universe_kind = rest
        elif head == "order":
            order_text = rest
        elif head == "rel":
            rel_lines.append((line_no, rest))
        else:
            raise PresentationError(f"unknown directive {head!r}", line=line_no)

    if field is None:
        field = QQ
    if "X" not in names:
        raise PresentationError("no alphabet X declared")
    if universe_kind is None:
        universe_kind = "tensor" if "Y" in names else "free"

    if universe_kind in ("tensor", "mixed"):
        if "Y" not in names:
            raise PresentationError(f"universe {universe_kind} needs alphabet Y")
        ax = Alphabet(names["X"], "X")
        ay = Alphabet(names["Y"], "Y")
        if set(ax.names) & set(ay.names):
            raise PresentationError("alphabets X and Y share generator names")
        universe = (
            TensorUniverse(ax, ay)
            if universe_kind == "tensor"
            else MixedUniverse(ax, ay)
        )
    else:
        if "Y" in names:
            raise PresentationError(
                f"universe {universe_kind} uses only alphabet X"
            )
        ax = Alphabet(names["X"], "X")
        universe = (
            FreeUniverse(ax) if universe_kind == "free" else CommUniverse(ax)
        )

    if order_text is None:
        order = default_order(universe)
        order_text = order.spec
    else:
        order = make_order(order_text, universe)

    ctx = Context(field, universe, order)
    relations = [parse_polynomial(expr, ctx, line_no) for line_no, expr in rel_lines]
    return Presentation(field, universe, order, ctx, relations, field_text, order_text)


def _parse_field(rest: str, line_no: int):
    rest = rest.strip()
    if rest in ("Q", "QQ", "q"):
        return QQ, "Q"
    m = re.fullmatch(r"F(\d+)", rest)
    if m:
        try:
            return GF(int(m.group(1))), rest
        except ValueError as exc:
            raise PresentationError(str(exc), line=line_no) from None
    raise PresentationError(f"unknown field {rest!r}", line=line_no)


def _parse_alphabet(rest: str, line_no: int):
    role, sep, decl = rest.partition(":")
    role = role.strip()
    if not sep or role not in ("X", "Y"):
        raise PresentationError(
            "expected `alphabet X: n1 < n2 < ...`", line=line_no
        )
    parts = [p.strip() for p in decl.split("<")]
    if not parts or any(not p for p in parts):
        raise PresentationError("empty generator name", line=line_no)
    for p in parts:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", p):
            raise PresentationError(f"bad generator name {p!r}", line=line_no)
    if len(set(parts)) != len(parts):
        raise PresentationError("duplicate generator names", line=line_no)
    return role, tuple(parts)


def emit_presentation(pres: Presentation, warnings=()) -> str:
    lines = [f"field {pres.field_text}"]
    universe = pres.universe
    if hasattr(universe, "alphabet"):
        lines.append("alphabet X: " + " < ".join(universe.alphabet.names))
    else:
        lines.append("alphabet X: " + " < ".join(universe.alphabet_x.names))
        lines.append("alphabet Y: " + " < ".join(universe.alphabet_y.names))
    lines.append(f"universe {pres.universe_text}")
    lines.append(f"order {pres.order_text}")
    for w in warnings:
        lines.append(f"# warning: {w}")
    for rel in pres.relations:
        lines.append(f"rel {format_polynomial(rel)}")
    return "\n".join(lines) + "\n"


def presentation_from_context(ctx: Context, relations, field_text=None) -> Presentation:
    return Presentation(
        ctx.field,
        ctx.universe,
        ctx.order,
        ctx,
        list(relations),
        field_text or getattr(ctx.field, "name", "Q"),
        ctx.order.spec,
    )
