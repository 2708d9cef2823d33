"""Labeled set partitions counted by H^f.

f-Stirling partitions carry the between-labels statistic whose distribution
is the q-analogue H^f_{j,n}(q).  r-Stirling partitions carry the 0-subset
multiplicities whose distribution is H^f_{j,n} as a polynomial in the shifts.

In both families the values that open a block (the block minima) are shared
by every index, and each index then places its remaining copies
independently.
"""

from __future__ import annotations

import itertools

from ..errors import DEFAULT_GUARD
from .core import (
    FStirlingPartition,
    RStirlingPartition,
    cached_by,
    integer_shifts,
    require_nonnegative,
    tally,
)


def _block_minima(n, j):
    """Sets of block minima: always contain 1 when n >= 1."""
    if n == 0:
        if j == 0:
            yield ()
        return
    if 1 <= j <= n:
        for rest in itertools.combinations(range(2, n + 1), j - 1):
            yield (1,) + rest


def _f_placements(n, minima, a):
    """Placements of one index's copies of the non-minimum values.

    Each value m goes to a block whose minimum is below m, or to one of
    S_1..S_a.  The statistic counts subsets whose label lies strictly between
    the chosen subset's label and m.
    """
    free = [m for m in range(2, n + 1) if m not in minima]
    options = []
    for m in free:
        below = [b for b in minima if b < m]
        opts = [(("b", b), sum(1 for b2 in below if b2 > b)) for b in below]
        opts += [(("s", p), (p - 1) + len(below)) for p in range(1, a + 1)]
        options.append([(m, target, s) for target, s in opts])
    for choice in itertools.product(*options):
        yield tuple((m, target) for m, target, _ in choice), sum(s for _, _, s in choice)


def enum_f_stirling_partitions(n, j, fv, *, witnesses=False, guard=DEFAULT_GUARD):
    """Histogram of f-Stirling partitions of order (n, j) by their statistic s_P."""
    require_nonnegative(n=n, j=j)
    shifts = integer_shifts(fv)
    r = len(shifts)
    top = shifts[-1]
    placements = cached_by(lambda a: a, lambda minima, a: _f_placements(n, minima, a))

    def components(minima, budget):
        return [placements(minima, a, budget) for a in shifts]

    def assemble(minima, comps, stat):
        blocks = {b: [(b, i) for i in range(1, r + 1)] for b in minima}
        overflow = {p: [] for p in range(1, top + 1)}
        for i, comp in enumerate(comps, start=1):
            for m, (where, at) in comp:
                (blocks[at] if where == "b" else overflow[at]).append((m, i))
        return FStirlingPartition(
            tuple(tuple(sorted(blocks[b])) for b in minima),
            tuple(tuple(sorted(overflow[p])) for p in range(1, top + 1)),
            stat,
        )

    return tally(_block_minima(n, j), components, assemble, "sum", witnesses=witnesses, guard=guard)


def _r_placements(n, minima):
    """Each non-minimum value goes to the 0-subset (target 0) or a lower block."""
    free = [m for m in range(2, n + 1) if m not in minima]
    options = [[0] + [b for b in minima if b < m] for m in free]
    for choice in itertools.product(*options):
        yield tuple(zip(free, choice)), sum(1 for target in choice if target == 0)


def enum_r_stirling_partitions(n, j, r, *, witnesses=False, guard=DEFAULT_GUARD):
    """Histogram of r-Stirling partitions of order (n, j) by 0-subset excess (beta_1..beta_r)."""
    require_nonnegative(n=n, j=j)
    placements = cached_by(lambda _: None, lambda minima, _: _r_placements(n, minima))

    def components(minima, budget):
        return [placements(minima, i, budget) for i in range(r)]

    def assemble(minima, comps, stat):
        zero = [(0, i) for i in range(1, r + 1)]
        blocks = {b: [(b, i) for i in range(1, r + 1)] for b in minima}
        for i, comp in enumerate(comps, start=1):
            for m, target in comp:
                (zero if target == 0 else blocks[target]).append((m, i))
        return RStirlingPartition(
            tuple(sorted(zero)),
            tuple(tuple(sorted(blocks[b])) for b in minima),
            stat,
        )

    return tally(_block_minima(n, j), components, assemble, "vector", witnesses=witnesses, guard=guard)
