"""Deterministic textual rendering of monomials and polynomials.

Free words compress letter runs (`x1*x1*x2` -> `x1^2*x2`); two-part
monomials join their X and Y parts with `;`, omitting empty parts; the
identity renders as `1`.
"""

from __future__ import annotations

from .monoids import Alphabet, CommUniverse, FreeUniverse, Universe
from .poly import Polynomial


def format_word(word: tuple, alphabet: Alphabet) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = alphabet.name(word[i])
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(parts)


def format_comm(mono: tuple, alphabet: Alphabet) -> str:
    if not mono:
        return "1"
    parts = []
    for i, e in mono:
        name = alphabet.name(i)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_monomial(mono, universe: Universe) -> str:
    if isinstance(universe, FreeUniverse):
        return format_word(mono, universe.alphabet)
    if isinstance(universe, CommUniverse):
        return format_comm(mono, universe.alphabet)
    # two-part universes
    xpart, ypart = mono
    if universe.kind == "tensor":
        xs = format_word(xpart, universe.alphabet_x)
    else:
        xs = format_comm(xpart, universe.alphabet_x)
    ys = format_word(ypart, universe.alphabet_y)
    if not ypart:
        return xs
    if not xpart:
        return ys
    return f"{xs};{ys}"


def format_polynomial(poly: Polynomial) -> str:
    if poly.is_zero():
        return "0"
    field = poly.ctx.field
    universe = poly.ctx.universe
    chunks = []
    for i, (mono, coeff) in enumerate(poly.terms):
        is_one_mono = mono == universe.one
        ctext = field.format(coeff)
        neg = ctext.startswith("-")
        if neg:
            ctext = ctext[1:]
        mtext = format_monomial(mono, universe)
        if is_one_mono:
            body = ctext
        elif ctext == "1":
            body = mtext
        else:
            body = f"{ctext}*{mtext}"
        if i == 0:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)
