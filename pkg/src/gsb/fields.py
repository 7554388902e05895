"""Exact coefficient fields: the rationals and prime fields.

Scalars are plain Python values (`fractions.Fraction` for Q, reduced ints
for GF(p)); the field objects carry the arithmetic.  Both representations
are canonical, so structural equality is value equality.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch


class Field:
    """Common interface for exact coefficient fields."""

    name = "?"

    def of(self, value):
        raise NotImplementedError

    def is_element(self, value) -> bool:
        raise NotImplementedError

    def _check(self, *values):
        for v in values:
            if not self.is_element(v):
                raise FieldMismatch(f"{v!r} is not an element of {self.name}")

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b) -> bool:
        self._check(a, b)
        return a == b

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError


class RationalField(Field):
    """The field Q with arbitrary-precision reduced fractions."""

    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def of(self, value):
        if isinstance(value, bool):
            raise FieldMismatch(f"{value!r} is not a rational")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise FieldMismatch(f"{value!r} is not a rational")

    def is_element(self, value) -> bool:
        return isinstance(value, (int, Fraction)) and not isinstance(value, bool)

    def add(self, a, b):
        self._check(a, b)
        return Fraction(a) + b

    def sub(self, a, b):
        self._check(a, b)
        return Fraction(a) - b

    def mul(self, a, b):
        self._check(a, b)
        return Fraction(a) * b

    def neg(self, a):
        self._check(a)
        return -Fraction(a)

    def inv(self, a):
        self._check(a)
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return 1 / Fraction(a)

    def div(self, a, b):
        self._check(a, b)
        if b == 0:
            raise DivisionByZero("division by 0")
        return Fraction(a) / b

    def parse(self, text: str):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))

    def format(self, a) -> str:
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    """The field GF(p); elements are residues in 0..p-1."""

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"
        self.zero = 0
        self.one = 1 % p

    def of(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            if isinstance(value, str):
                return self.parse(value)
            raise FieldMismatch(f"{value!r} is not an integer residue")
        return value % self.p

    def is_element(self, value) -> bool:
        return (
            isinstance(value, int)
            and not isinstance(value, bool)
            and 0 <= value < self.p
        )

    def add(self, a, b):
        self._check(a, b)
        return (a + b) % self.p

    def sub(self, a, b):
        self._check(a, b)
        return (a - b) % self.p

    def mul(self, a, b):
        self._check(a, b)
        return (a * b) % self.p

    def neg(self, a):
        self._check(a)
        return (-a) % self.p

    def inv(self, a):
        self._check(a)
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        if self.of(b) == 0:
            raise DivisionByZero("division by 0")
        return self.mul(a, self.inv(b))

    def parse(self, text: str):
        return int(text.strip()) % self.p

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()

_prime_fields: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """Return the (cached) prime field with p elements."""
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


def scalar_arith(field: Field, op: str, a, b=None):
    """Dispatch a named field operation; `b` is ignored for unary ops."""
    if op in ("neg", "inv"):
        return getattr(field, op)(a)
    if op == "eq":
        return field.eq(a, b)
    if op in ("add", "sub", "mul", "div"):
        return getattr(field, op)(a, b)
    raise ValueError(f"unknown scalar operation {op!r}")
