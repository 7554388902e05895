"""Alphabets and the four monomial universes.

Monomial data is kept as plain hashable tuples so they can serve as dict
keys in polynomial arithmetic:

* free word over one alphabet: ``(i0, i1, ...)`` letter indices,
* commutative monomial: ``((i, e), ...)`` sparse, ascending indices, e > 0,
* normal word of the tensor product: ``(xword, yword)``,
* mixed monomial: ``(commmono, yword)``.

The universe objects carry the alphabets and all structural operations:
multiplication, degree, two-sided divisor search, and monomial enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import AlphabetMismatch
from .kernels import factor_positions, find_factor, is_factor, overlap_lengths

EMPTY_WORD = ()
ONE_COMM = ()


@dataclass(frozen=True)
class Alphabet:
    """An ordered finite set of generator names; order is declaration order."""

    names: tuple[str, ...]
    role: str = "X"

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise AlphabetMismatch(f"duplicate generator names in {self.names}")

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise AlphabetMismatch(f"unknown generator {name!r}") from None

    def name(self, i: int) -> str:
        return self.names[i]

    def letters(self):
        return range(len(self.names))

    def word(self, *names: str) -> tuple:
        return tuple(self.index(n) for n in names)

    def __repr__(self):
        return f"Alphabet({','.join(self.names)})"


# ---------------------------------------------------------------------------
# free words
# ---------------------------------------------------------------------------

def factorizations(u: tuple, v: tuple) -> list:
    """All (a, b) with u = a.v.b, scanning occurrences left to right.

    Returns [((), ())] when u == v; for empty v every split of u counts.
    """
    m = len(v)
    return [(u[:i], u[i + m :]) for i in factor_positions(u, v)]


def overlaps(u: tuple, v: tuple) -> list:
    """All (b, a) with u.a = b.v glued along a proper nonempty suffix of u.

    One entry per proper nonempty suffix of u that is a prefix of v,
    by ascending overlap length; the overlap may be all of v.
    """
    n = len(u)
    return [(u[: n - L], v[L:]) for L in overlap_lengths(u, v)]


# ---------------------------------------------------------------------------
# commutative monomials (sparse exponent tuples)
# ---------------------------------------------------------------------------

def comm_from_pairs(pairs) -> tuple:
    """Canonicalize (index, exp) pairs: merge, drop zeros, sort."""
    acc: dict[int, int] = {}
    for i, e in pairs:
        acc[i] = acc.get(i, 0) + e
    return tuple(sorted((i, e) for i, e in acc.items() if e != 0))


def comm_mul(m: tuple, n: tuple) -> tuple:
    return comm_from_pairs(itertools.chain(m, n))


def comm_degree(m: tuple) -> int:
    return sum(e for _, e in m)


def comm_lcm_gcd(m: tuple, n: tuple) -> tuple:
    """Exponentwise max and min of two commutative monomials."""
    dm = dict(m)
    dn = dict(n)
    lcm = []
    gcd = []
    for i in sorted(set(dm) | set(dn)):
        a = dm.get(i, 0)
        b = dn.get(i, 0)
        lcm.append((i, max(a, b)))
        if min(a, b) > 0:
            gcd.append((i, min(a, b)))
    return tuple(lcm), tuple(gcd)


def comm_divides(m: tuple, n: tuple) -> bool:
    """True when m divides n exponentwise."""
    dn = dict(n)
    return all(dn.get(i, 0) >= e for i, e in m)


def comm_quotient(n: tuple, m: tuple) -> tuple:
    """n / m; caller guarantees divisibility."""
    dn = dict(n)
    for i, e in m:
        dn[i] = dn[i] - e
    return tuple(sorted((i, e) for i, e in dn.items() if e != 0))


def abelianize(word: tuple) -> tuple:
    """Commutative image of a free word (letter multiplicities)."""
    acc: dict[int, int] = {}
    for i in word:
        acc[i] = acc.get(i, 0) + 1
    return tuple(sorted(acc.items()))


def ascending_word(m: tuple) -> tuple:
    """The unique weakly ascending word with commutative image m."""
    out = []
    for i, e in m:
        out.extend([i] * e)
    return tuple(out)


def exponent_vectors(total: int, nvars: int):
    """All exponent vectors of the given total degree (lexicographic)."""
    if nvars == 0:
        if total == 0:
            yield ()
        return
    if nvars == 1:
        yield (total,)
        return
    for e in range(total + 1):
        for rest in exponent_vectors(total - e, nvars - 1):
            yield (e,) + rest


def comm_monomials_of_degree(d: int, nvars: int):
    for vec in exponent_vectors(d, nvars):
        yield tuple((i, e) for i, e in enumerate(vec) if e)


# ---------------------------------------------------------------------------
# universes
# ---------------------------------------------------------------------------

class Universe:
    """Shared interface of the four monomial universes."""

    kind = "?"
    one = None

    def mul(self, a, b):
        raise NotImplementedError

    def degree(self, m) -> int:
        raise NotImplementedError

    def divisions(self, m, t) -> list:
        """All (a, b) with m = a.t.b, in canonical scan order."""
        raise NotImplementedError

    def find_division(self, m, t):
        """Leftmost (a, b) with m = a.t.b, or None."""
        divs = self.divisions(m, t)
        return divs[0] if divs else None

    def contains_factor(self, m, t) -> bool:
        return self.find_division(m, t) is not None

    def monomials_of_degree(self, d: int):
        raise NotImplementedError

    def sandwich_multipliers(self, budget: int):
        """Canonical (a, b) pairs with degree(a) + degree(b) <= budget.

        Commutative slots collapse a.t.b to (a.b).t, so only one side is
        enumerated there; free slots enumerate both sides.
        """
        raise NotImplementedError

    def param_alphabet(self, axis: str):
        """Alphabet in which a composition parameter on the given axis lives."""
        raise NotImplementedError

    def embed_param(self, word: tuple, axis: str):
        """Embed a parameter word on axis 'X' or 'Y' as a universe monomial."""
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        raise NotImplementedError


class FreeUniverse(Universe):
    """Words over one alphabet under concatenation."""

    kind = "free"
    one = EMPTY_WORD

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet

    def _key(self):
        return self.alphabet

    def mul(self, a, b):
        return a + b

    def degree(self, m) -> int:
        return len(m)

    def divisions(self, m, t) -> list:
        return factorizations(m, t)

    def find_division(self, m, t):
        i = find_factor(m, t)
        if i < 0:
            return None
        return m[:i], m[i + len(t) :]

    def contains_factor(self, m, t) -> bool:
        return is_factor(m, t)

    def monomials_of_degree(self, d: int):
        return itertools.product(self.alphabet.letters(), repeat=d)

    def sandwich_multipliers(self, budget: int):
        for total in range(budget + 1):
            for i in range(total + 1):
                for a in self.monomials_of_degree(i):
                    for b in self.monomials_of_degree(total - i):
                        yield a, b

    def param_alphabet(self, axis: str):
        if axis == "X":
            return self.alphabet
        raise AlphabetMismatch("free universe has no Y axis")

    def embed_param(self, word: tuple, axis: str):
        if axis != "X":
            raise AlphabetMismatch("free universe has no Y axis")
        return word

    def __repr__(self):
        return f"FreeUniverse({self.alphabet!r})"


class CommUniverse(Universe):
    """Commutative monomials over one alphabet."""

    kind = "commutative"
    one = ONE_COMM

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet

    def _key(self):
        return self.alphabet

    def mul(self, a, b):
        return comm_mul(a, b)

    def degree(self, m) -> int:
        return comm_degree(m)

    def divisions(self, m, t) -> list:
        if comm_divides(t, m):
            return [(comm_quotient(m, t), ONE_COMM)]
        return []

    def contains_factor(self, m, t) -> bool:
        return comm_divides(t, m)

    def monomials_of_degree(self, d: int):
        return comm_monomials_of_degree(d, self.alphabet.size)

    def sandwich_multipliers(self, budget: int):
        for total in range(budget + 1):
            for a in self.monomials_of_degree(total):
                yield a, ONE_COMM

    def param_alphabet(self, axis: str):
        raise AlphabetMismatch("commutative universe has no parameter axis")

    def embed_param(self, word, axis):
        raise AlphabetMismatch("commutative universe has no parameter axis")

    def __repr__(self):
        return f"CommUniverse({self.alphabet!r})"


class TensorUniverse(Universe):
    """Normal words u = u_X.u_Y of a two-sided free tensor product."""

    kind = "tensor"
    one = (EMPTY_WORD, EMPTY_WORD)

    def __init__(self, alphabet_x: Alphabet, alphabet_y: Alphabet):
        self.alphabet_x = alphabet_x
        self.alphabet_y = alphabet_y

    def _key(self):
        return (self.alphabet_x, self.alphabet_y)

    def mul(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def degree(self, m) -> int:
        return len(m[0]) + len(m[1])

    def divisions(self, m, t) -> list:
        mx, my = m
        tx, ty = t
        xs = factor_positions(mx, tx)
        if not xs:
            return []
        ys = factor_positions(my, ty)
        out = []
        for i in xs:
            ax, bx = mx[:i], mx[i + len(tx) :]
            for j in ys:
                out.append(((ax, my[:j]), (bx, my[j + len(ty) :])))
        return out

    def contains_factor(self, m, t) -> bool:
        return is_factor(m[0], t[0]) and is_factor(m[1], t[1])

    def monomials_of_degree(self, d: int):
        for i in range(d + 1):
            for xw in itertools.product(self.alphabet_x.letters(), repeat=i):
                for yw in itertools.product(self.alphabet_y.letters(), repeat=d - i):
                    yield (xw, yw)

    def sandwich_multipliers(self, budget: int):
        for total in range(budget + 1):
            for da in range(total + 1):
                for a in self.monomials_of_degree(da):
                    for b in self.monomials_of_degree(total - da):
                        yield a, b

    def param_alphabet(self, axis: str):
        return self.alphabet_x if axis == "X" else self.alphabet_y

    def embed_param(self, word: tuple, axis: str):
        if axis == "X":
            return (word, EMPTY_WORD)
        return (EMPTY_WORD, word)

    def __repr__(self):
        return f"TensorUniverse({self.alphabet_x!r}, {self.alphabet_y!r})"


class MixedUniverse(Universe):
    """Monomials u = u_X.u_Y with commutative u_X and free u_Y."""

    kind = "mixed"
    one = (ONE_COMM, EMPTY_WORD)

    def __init__(self, alphabet_x: Alphabet, alphabet_y: Alphabet):
        self.alphabet_x = alphabet_x
        self.alphabet_y = alphabet_y

    def _key(self):
        return (self.alphabet_x, self.alphabet_y)

    def mul(self, a, b):
        return (comm_mul(a[0], b[0]), a[1] + b[1])

    def degree(self, m) -> int:
        return comm_degree(m[0]) + len(m[1])

    def divisions(self, m, t) -> list:
        mx, my = m
        tx, ty = t
        if not comm_divides(tx, mx):
            return []
        q = comm_quotient(mx, tx)
        out = []
        for j in factor_positions(my, ty):
            out.append(((q, my[:j]), (ONE_COMM, my[j + len(ty) :])))
        return out

    def contains_factor(self, m, t) -> bool:
        return comm_divides(t[0], m[0]) and is_factor(m[1], t[1])

    def monomials_of_degree(self, d: int):
        for i in range(d + 1):
            for cm in comm_monomials_of_degree(i, self.alphabet_x.size):
                for yw in itertools.product(self.alphabet_y.letters(), repeat=d - i):
                    yield (cm, yw)

    def sandwich_multipliers(self, budget: int):
        # the commutative slot needs only one side: a.t.b = (a.b).t in X
        for total in range(budget + 1):
            for dx in range(total + 1):
                for q in comm_monomials_of_degree(dx, self.alphabet_x.size):
                    rest = total - dx
                    for dl in range(rest + 1):
                        for ay in itertools.product(
                            self.alphabet_y.letters(), repeat=dl
                        ):
                            for by in itertools.product(
                                self.alphabet_y.letters(), repeat=rest - dl
                            ):
                                yield (q, ay), (ONE_COMM, by)

    def param_alphabet(self, axis: str):
        if axis == "Y":
            return self.alphabet_y
        raise AlphabetMismatch("mixed universe parameters live on the Y axis")

    def embed_param(self, word: tuple, axis: str):
        if axis != "Y":
            raise AlphabetMismatch("mixed universe parameters live on the Y axis")
        return (ONE_COMM, word)

    def __repr__(self):
        return f"MixedUniverse({self.alphabet_x!r}, {self.alphabet_y!r})"
