"""Tuples of permutations counted by E^f, h^{<|t} and a^{(t)}.

Shared skeletons:

* f-Stirling tuples share the set of cycle maxima not exceeding n;
* r-Stirling tuples share the set of cycle minima;
* the gap- and congruence-constrained tuples share an ordered cycle
  structure (cycle lengths by increasing minimum) up to position K.

In the shift-symbolic modes every permutation acts on k+2 letters, i.e. each
shift is replaced by 1, and the statistic is the number of big numbers
minus one.
"""

from __future__ import annotations

import itertools

from ..errors import DEFAULT_GUARD, UsageError
from . import perms as P
from .core import PermutationTuple, cached_by, integer_shifts, require_nonnegative, tally


def _perms_with_maxima(n, m, maxima):
    """Permutations of {1..m} whose cycle maxima are ``maxima`` plus every value above n.

    Values are placed from m down to 1: a maximum opens a cycle, any other
    value is spliced in after an element already placed.
    """
    succ = {}
    placed = []

    def rec(v):
        if v == 0:
            yield tuple(succ[x] for x in range(1, m + 1))
            return
        if v > n or v in maxima:
            succ[v] = v
            placed.append(v)
            yield from rec(v - 1)
            placed.pop()
            del succ[v]
            return
        for x in list(placed):
            succ[v] = succ[x]
            succ[x] = v
            placed.append(v)
            yield from rec(v - 1)
            placed.pop()
            succ[x] = succ[v]
            del succ[v]

    yield from rec(m)


def enum_f_stirling_perm_tuples(n, j, fv, *, witnesses=False, guard=DEFAULT_GUARD):
    """Histogram of f-Stirling permutation tuples of order (n, j) by total coinversions."""
    require_nonnegative(n=n, j=j)
    shifts = integer_shifts(fv)

    def skeletons():
        if n == 0:
            if j == 0:
                yield frozenset()
            return
        if 1 <= j <= n:
            for rest in itertools.combinations(range(1, n), j - 1):
                yield frozenset(rest + (n,))

    def build(maxima, a):
        for p in _perms_with_maxima(n, n + a, maxima):
            yield p, P.coinv(P.max_word(p))

    comps = cached_by(lambda a: a, build)

    def components(maxima, budget):
        return [comps(maxima, a, budget) for a in shifts]

    def assemble(maxima, perms, stat):
        return PermutationTuple(tuple(perms), "max", stat)

    return tally(skeletons(), components, assemble, "sum", witnesses=witnesses, guard=guard)


def _perms_with_minima(m, minima):
    """Permutations of {1..m} with the given cycle minima, placing values upward."""
    succ = {}
    placed = []

    def rec(v):
        if v > m:
            yield tuple(succ[x] for x in range(1, m + 1))
            return
        if v in minima:
            succ[v] = v
            placed.append(v)
            yield from rec(v + 1)
            placed.pop()
            del succ[v]
            return
        for x in list(placed):
            succ[v] = succ[x]
            succ[x] = v
            placed.append(v)
            yield from rec(v + 1)
            placed.pop()
            succ[x] = succ[v]
            del succ[v]

    yield from rec(1)


def enum_r_stirling_perm_tuples(n, j, r, *, witnesses=False, guard=DEFAULT_GUARD):
    """Histogram of r-Stirling permutation tuples of order (n, j) by (rec - 1) per index."""
    require_nonnegative(n=n, j=j)

    def skeletons():
        if n == 0:
            if j == 0:
                yield frozenset({1})
            return
        if 1 <= j <= n:
            for rest in itertools.combinations(range(3, n + 2), j - 1):
                yield frozenset((1, 2) + rest)

    def build(minima, _):
        for p in _perms_with_minima(n + 1, minima):
            yield p, P.records(p) - 1

    comps = cached_by(lambda _: None, build)

    def components(minima, budget):
        return [comps(minima, i, budget) for i in range(r)]

    def assemble(minima, perms, stat):
        return PermutationTuple(tuple(perms), "min", stat)

    return tally(skeletons(), components, assemble, "vector", witnesses=witnesses, guard=guard)


def perms_with_structure(lengths, m):
    """Permutations of {1..m} whose first cycles (by minimum) have ``lengths``; the rest are fixed points."""

    def rec(pos, unused, cycles):
        if pos == len(lengths):
            full = cycles + [(u,) for u in unused]
            yield P.from_cycles(full, m)
            return
        length = lengths[pos]
        if length > len(unused):
            return
        head, rest = unused[0], unused[1:]
        for tail in itertools.permutations(rest, length - 1):
            left = [x for x in rest if x not in tail]
            yield from rec(pos + 1, left, cycles + [(head,) + tail])

    yield from rec(0, list(range(1, m + 1)), [])


def _sizes(k, fv, symbolic):
    if symbolic:
        return (k + 2,) * fv.r
    return tuple(k + 1 + a for a in integer_shifts(fv))


def _structured_tally(lengths_iter, sizes, symbolic, witnesses, guard):
    def build(lengths, m):
        for p in perms_with_structure(lengths, m):
            yield p, (P.big_numbers(p) - 1 if symbolic else 0)

    comps = cached_by(lambda m: m, build)

    def components(lengths, budget):
        return [comps(lengths, m, budget) for m in sizes]

    def assemble(lengths, perms, stat):
        return PermutationTuple(tuple(perms), "min", stat)

    mode = "vector" if symbolic else "sum"
    return tally(lengths_iter, components, assemble, mode, witnesses=witnesses, guard=guard)


def hrel_structures(n, k, t):
    """Cycle-length sequences up to K = k+1-n: n two-cycles, positions at least t-1 apart."""
    K = k + 1 - n
    if n == 0:
        yield (1,) * K
        return
    if K < n:
        return
    for pos in itertools.combinations(range(K), n):
        if all(b - a >= t - 1 for a, b in zip(pos, pos[1:])):
            lengths = [1] * K
            for p in pos:
                lengths[p] = 2
            yield tuple(lengths)


def enum_hrel_cycle_tuples(n, k, t, fv, *, symbolic=False, witnesses=False, guard=DEFAULT_GUARD):
    """Permutation tuples counted by h_n^{<|t}(f(1), ..., f(k)).

    Numeric mode: the histogram is ``{0: count}``.  Symbolic mode: keyed by
    the exponent vector of the shift monomial.
    """
    require_nonnegative(n=n, k=k)
    if t < 2:
        raise UsageError(f"gap t must be at least 2, got {t}")
    sizes = _sizes(k, fv, symbolic)
    return _structured_tally(hrel_structures(n, k, t), sizes, symbolic, witnesses, guard)


def _distributions(total, slots):
    if slots == 0:
        if total == 0:
            yield ()
        return
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _distributions(total - first, slots - 1):
            yield (first,) + rest


def at_structures(n, k, t):
    """Cycle-length sequences up to K = k+1-n, nontrivial only at positions p = K (mod t)."""
    K = k + 1 - n
    if n == 0:
        yield (1,) * K
        return
    if K < 1:
        return
    allowed = [p for p in range(1, K + 1) if (K - p) % t == 0]
    for extra in _distributions(n, len(allowed)):
        lengths = [1] * K
        for p, e in zip(allowed, extra):
            lengths[p - 1] += e
        yield tuple(lengths)


def enum_a_t_cycle_tuples(n, k, t, fv, *, symbolic=False, witnesses=False, guard=DEFAULT_GUARD):
    """Permutation tuples counted by a_n^{(t)}(f(1), ..., f(k)); see ``enum_hrel_cycle_tuples``."""
    require_nonnegative(n=n, k=k)
    if t < 1:
        raise UsageError(f"modulus t must be positive, got {t}")
    sizes = _sizes(k, fv, symbolic)
    return _structured_tally(at_structures(n, k, t), sizes, symbolic, witnesses, guard)
