"""Sequence families counted by h_n and m_lambda at f(1), ..., f(k).

Ordered-sequence tuples: every index carries k slots, slot p holding a word
(any order, repeats allowed) over {p, ..., k + a_i}; all indices share the
slot lengths.  Monomial sequences: a nondecreasing s_0 whose multiplicities
realize lambda, and for each index a sequence s_i dominating s_0 entrywise
and bounded by k + a_i.

In the shift-symbolic modes the bound k + a_i becomes k + 1 and the statistic
counts occurrences of the letter k + 1.
"""

from __future__ import annotations

import itertools
from collections import Counter

from ..errors import DEFAULT_GUARD
from ..symfunc import as_partition
from .core import MonomialSequences, SequenceTuple, cached_by, integer_shifts, require_nonnegative, tally


def compositions(n, parts):
    """Weak compositions of n into ``parts`` nonnegative parts, lexicographic."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def _tops(k, fv, symbolic):
    if symbolic:
        return (k + 1,) * fv.r
    return tuple(k + a for a in integer_shifts(fv))


def _slot_words(structure, top, marker):
    slots = [itertools.product(range(p, top + 1), repeat=c) for p, c in enumerate(structure, start=1)]
    slots = [list(s) for s in slots]
    for words in itertools.product(*slots):
        stat = sum(w.count(marker) for w in words) if marker else 0
        yield words, stat


def enum_ordered_sequences(n, k, fv, *, symbolic=False, witnesses=False, guard=DEFAULT_GUARD):
    """Tuples of k-slot word sequences with a common slot structure and dimension n.

    The count is h_n(f(1), ..., f(k)); in symbolic mode the histogram is keyed
    by exponent vectors of the shifts.
    """
    require_nonnegative(n=n, k=k)
    tops = _tops(k, fv, symbolic)
    marker = k + 1 if symbolic else None
    comps = cached_by(lambda top: top, lambda structure, top: _slot_words(structure, top, marker))

    def components(structure, budget):
        return [comps(structure, top, budget) for top in tops]

    def assemble(structure, parts, stat):
        return SequenceTuple(tuple(parts), stat)

    mode = "vector" if symbolic else "sum"
    return tally(compositions(n, k), components, assemble, mode, witnesses=witnesses, guard=guard)


def s_lambda_k(lam, k):
    """Nondecreasing n-tuples over {1..k} whose multiplicities are the parts of lambda."""
    lam = as_partition(lam)
    if len(lam) > k:
        return []
    target = sorted(lam)
    out = []
    for s in itertools.combinations_with_replacement(range(1, k + 1), sum(lam)):
        if sorted(Counter(s).values()) == target:
            out.append(s)
    return out


def _dominating(base, top, marker):
    for s in itertools.product(*(range(b, top + 1) for b in base)):
        yield s, (s.count(marker) if marker else 0)


def enum_monomial_sequences(lam, k, fv, *, symbolic=False, witnesses=False, guard=DEFAULT_GUARD):
    """(s_0, s_1, ..., s_r) with s_0 in S_{lambda,k} and s_0 <= s_i <= k + a_i.

    The count is m_lambda(f(1), ..., f(k)).
    """
    require_nonnegative(k=k)
    tops = _tops(k, fv, symbolic)
    marker = k + 1 if symbolic else None
    comps = cached_by(lambda top: top, lambda base, top: _dominating(base, top, marker))

    def components(base, budget):
        return [comps(base, top, budget) for top in tops]

    def assemble(base, seqs, stat):
        return MonomialSequences(base, tuple(seqs), stat)

    mode = "vector" if symbolic else "sum"
    return tally(s_lambda_k(lam, k), components, assemble, mode, witnesses=witnesses, guard=guard)
