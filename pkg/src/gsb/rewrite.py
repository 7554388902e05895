"""Division with remainder, triviality checks, completion, and queries.

The division algorithm rewrites the largest reducible monomial first,
using the earliest-added basis element and the leftmost occurrence of its
leading word; every run is reproducible and returns a trace that replays
to the input exactly.  Completion processes composition instantiations in
ascending ambiguity degree, appending reduced non-trivial compositions
until the queue drains or a budget trips.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field as dc_field

from .compositions import CompositionFamily, instantiate, pair_families
from .errors import (
    BudgetExceeded,
    DegreeOutOfBound,
    GsbError,
    ZeroInput,
)
from .poly import Polynomial, mono_mul
from .render import format_monomial, format_word

SATURATED = "saturated"
COMPLETE_UP_TO = "complete-up-to-degree"
EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class Step:
    """One elimination f -> f - coeff * left . s . right."""

    coeff: object
    left: object
    index: int
    right: object


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple
    remainder: Polynomial

    def replay(self, basis) -> Polynomial:
        """Reconstruct the input from the trace; equals f for reduce(f, basis)."""
        ctx = self.remainder.ctx
        total = self.remainder
        for st in self.steps:
            total = total + mono_mul(st.left, basis[st.index], st.right).scalar_mul(
                st.coeff
            )
        return total


def reduce(f: Polynomial, basis) -> ReductionTrace:
    """Divide f by a list of monic polynomials; remainder avoids all leads."""
    elements = getattr(basis, "elements", basis)
    ctx = f.ctx
    universe = ctx.universe
    leads = [s.lead_monomial for s in elements]
    steps = []
    rem_terms = []
    work = f
    while work.terms:
        mono, coeff = work.terms[0]
        hit = None
        for idx, lead in enumerate(leads):
            div = universe.find_division(mono, lead)
            if div is not None:
                hit = (idx, div)
                break
        if hit is None:
            rem_terms.append((mono, coeff))
            work = Polynomial(ctx, work.terms[1:])
        else:
            idx, (a, b) = hit
            steps.append(Step(coeff, a, idx, b))
            work = work - mono_mul(a, elements[idx], b).scalar_mul(coeff)
    return ReductionTrace(tuple(steps), Polynomial(ctx, tuple(rem_terms)))


def is_trivial(fam: CompositionFamily, basis, param: tuple = ()):
    """Whether one instantiated composition reduces to zero; returns the trace."""
    _, p = instantiate(fam, param)
    trace = reduce(p, basis)
    return trace.remainder.is_zero(), trace


@dataclass
class CompletionConfig:
    """Bounds that make a completion certificate finite and explicit."""

    max_degree: int | None = 8
    param_bound: int = 2
    max_steps: int = 200_000
    coprime_skip: bool = True


@dataclass
class BasisState:
    """An evolving (or verified) basis with its certificate scope."""

    ctx: object
    elements: list
    config: CompletionConfig
    status: str
    log: list = dc_field(default_factory=list)
    provenance: list = dc_field(default_factory=list)
    checked: int = 0
    truncated: int = 0
    parametric: bool = False
    pending: list = dc_field(default_factory=list)
    failures: list = dc_field(default_factory=list)

    @property
    def added(self) -> int:
        return len(self.provenance)

    def summary(self) -> str:
        lines = [
            f"status: {self.status}",
            f"degree-bound: {self._deg_text()}",
            f"param-bound: {self.config.param_bound}",
            f"elements: {len(self.elements)}",
            f"added: {self.added}",
            f"instantiations-checked: {self.checked}",
            f"truncated: {self.truncated}",
        ]
        return "\n".join(lines)

    def _deg_text(self):
        return "unbounded" if self.config.max_degree is None else str(
            self.config.max_degree
        )


def _enqueue_pair(heap, seq, cfg, elements, i, j, state):
    universe = elements[i].ctx.universe
    for fam in pair_families(elements[i], elements[j]):
        base = fam.base_degree()
        if fam.param_axis is None:
            if cfg.max_degree is not None and base > cfg.max_degree:
                state.truncated += 1
                continue
            heapq.heappush(heap, (base, next(seq), i, j, fam, ()))
        else:
            state.parametric = True
            alphabet = universe.param_alphabet(fam.param_axis)
            for plen in range(cfg.param_bound + 1):
                if cfg.max_degree is not None and base + plen > cfg.max_degree:
                    state.truncated += 1
                    break
                for param in itertools.product(alphabet.letters(), repeat=plen):
                    heapq.heappush(heap, (base + plen, next(seq), i, j, fam, param))


def _log_line(state, i, j, fam, param, outcome):
    universe = state.ctx.universe
    kind = fam.kind if fam.variant is None else f"{fam.kind}/{fam.variant}"
    if fam.param_axis:
        ptxt = format_word(param, universe.param_alphabet(fam.param_axis))
    else:
        ptxt = "1"
    try:
        wtxt = format_monomial(fam.ambiguity(param), universe)
    except Exception:  # pragma: no cover - rendering never fails in practice
        wtxt = "?"
    state.log.append(
        f"pair#({i + 1},{j + 1}) kind={kind} w={wtxt} param={ptxt} -> {outcome}"
    )


def _saturate(inputs, cfg: CompletionConfig, extend: bool) -> BasisState:
    polys = list(inputs)
    for p in polys:
        if p.is_zero():
            raise ZeroInput("completion input contains the zero polynomial")
    if polys:
        ctx = polys[0].ctx
    else:
        raise ZeroInput("completion needs at least one polynomial or a context")
    elements = [p.make_monic() for p in polys]
    state = BasisState(ctx, elements, cfg, SATURATED)
    heap: list = []
    seq = itertools.count()
    for i in range(len(elements)):
        for j in range(len(elements)):
            _enqueue_pair(heap, seq, cfg, elements, i, j, state)

    while heap:
        if state.checked >= cfg.max_steps:
            state.status = EXHAUSTED
            state.pending = sorted(heap)
            raise BudgetExceeded(
                f"completion stopped after {cfg.max_steps} checks "
                f"with {len(heap)} instantiations pending",
                state=state,
            )
        _, _, i, j, fam, param = heapq.heappop(heap)
        if fam.coprime_trivial and cfg.coprime_skip:
            _log_line(state, i, j, fam, param, "trivial (coprime)")
            continue
        state.checked += 1
        trivial, trace = is_trivial(fam, elements, param)
        if trivial:
            _log_line(state, i, j, fam, param, "trivial")
            continue
        if not extend:
            state.failures.append((i, j, fam, param, trace))
            _log_line(state, i, j, fam, param, "NOT trivial")
            continue
        new = trace.remainder.make_monic()
        elements.append(new)
        k = len(elements) - 1
        state.provenance.append((i, j, fam, param, trace))
        _log_line(state, i, j, fam, param, f"added s{k + 1}")
        for e in range(k):
            _enqueue_pair(heap, seq, cfg, elements, k, e, state)
            _enqueue_pair(heap, seq, cfg, elements, e, k, state)
        _enqueue_pair(heap, seq, cfg, elements, k, k, state)

    if state.truncated or state.parametric:
        state.status = COMPLETE_UP_TO
    else:
        state.status = SATURATED
    return state


def complete(inputs, cfg: CompletionConfig | None = None) -> BasisState:
    """Close a finite set under compositions within the configured bounds."""
    return _saturate(inputs, cfg or CompletionConfig(), extend=True)


def check(inputs, cfg: CompletionConfig | None = None) -> BasisState:
    """Verify closure without extending; failures collect on the state."""
    return _saturate(inputs, cfg or CompletionConfig(), extend=False)


def empty_state(ctx, cfg: CompletionConfig | None = None) -> BasisState:
    """The (vacuously saturated) state of the empty basis."""
    return BasisState(ctx, [], cfg or CompletionConfig(), SATURATED)


# ---------------------------------------------------------------------------
# minimalization
# ---------------------------------------------------------------------------

def minimalize(state: BasisState) -> BasisState:
    """Drop elements whose lead contains another's lead; tail-reduce the rest.

    For a verified basis this keeps the ideal and the set of normal forms:
    a dropped element rewrites to zero by the surviving ones.
    """
    ctx = state.ctx
    universe = ctx.universe
    key = ctx.order.key
    ranked = sorted(range(len(state.elements)), key=lambda i: (key(state.elements[i].lead_monomial), i))
    kept = []
    for i in ranked:
        cand = state.elements[i]
        lw = cand.lead_monomial
        if any(universe.contains_factor(lw, s.lead_monomial) for s in kept):
            continue
        kept.append(cand)

    # inter-reduce tails until stable; leads are untouched
    changed = True
    while changed:
        changed = False
        for idx, s in enumerate(kept):
            lead_mono, lead_coeff = s.lead()
            tail = s - Polynomial.monomial(ctx, lead_mono, lead_coeff)
            rest = kept[:idx] + kept[idx + 1 :]
            red = reduce(tail, rest).remainder
            if red != tail:
                kept[idx] = Polynomial.monomial(ctx, lead_mono, lead_coeff) + red
                changed = True

    out = BasisState(ctx, kept, state.config, state.status)
    out.checked = state.checked
    out.truncated = state.truncated
    out.parametric = state.parametric
    return out


def is_minimal(elements, universe) -> bool:
    for i, s in enumerate(elements):
        for j, t in enumerate(elements):
            if i != j and universe.contains_factor(s.lead_monomial, t.lead_monomial):
                return False
    return True


# ---------------------------------------------------------------------------
# irreducible (standard) monomials
# ---------------------------------------------------------------------------

def irr_up_to(basis, dmax: int) -> list:
    """Irreducible monomials per degree 0..dmax, each level order-descending."""
    elements = getattr(basis, "elements", basis)
    ctx = getattr(basis, "ctx", None)
    if ctx is None:
        if not elements:
            raise ValueError("irr_up_to needs a context-bearing basis")
        ctx = elements[0].ctx
    return _irr_levels(ctx, [s.lead_monomial for s in elements], dmax)


def irr_levels_for(ctx, leads, dmax: int) -> list:
    return _irr_levels(ctx, leads, dmax)


def _irr_levels(ctx, leads, dmax: int) -> list:
    universe = ctx.universe
    key = ctx.order.key
    if universe.kind == "free":
        levels = _irr_free_levels(universe, leads, dmax)
    else:
        levels = [
            [
                m
                for m in universe.monomials_of_degree(d)
                if not any(universe.contains_factor(m, t) for t in leads)
            ]
            for d in range(dmax + 1)
        ]
    return [sorted(level, key=key, reverse=True) for level in levels]


def _irr_free_levels(universe, leads, dmax):
    # extend irreducible words letter by letter; only suffixes need checking
    by_len: dict[int, set] = {}
    for t in leads:
        by_len.setdefault(len(t), set()).add(t)
    if () in by_len.get(0, set()):
        return [[] for _ in range(dmax + 1)]
    letters = tuple(universe.alphabet.letters())
    levels = [[()]]
    for _ in range(dmax):
        nxt = []
        for w in levels[-1]:
            for z in letters:
                cand = w + (z,)
                n = len(cand)
                for L, pats in by_len.items():
                    if L <= n and cand[n - L :] in pats:
                        break
                else:
                    nxt.append(cand)
        levels.append(nxt)
    return levels


def irr(basis, d: int) -> list:
    """Irreducible monomials of degree exactly d, order-descending."""
    return irr_up_to(basis, d)[d]


# ---------------------------------------------------------------------------
# the word problem
# ---------------------------------------------------------------------------

def word_problem(f: Polynomial, state: BasisState) -> bool:
    """Ideal membership by reduction; honest only within the verified scope."""
    if state.status not in (SATURATED, COMPLETE_UP_TO):
        raise GsbError(f"basis state {state.status!r} carries no certificate")
    if f.is_zero():
        return True
    if state.status == COMPLETE_UP_TO and state.config.max_degree is not None:
        if state.ctx.universe.degree(f.lead_monomial) > state.config.max_degree:
            raise DegreeOutOfBound(
                f"leading degree exceeds the verified bound {state.config.max_degree}"
            )
    return reduce(f, state.elements).remainder.is_zero()
