"""Shared machinery for the enumerators.

Every witness family here has the same shape: a *skeleton* common to all r
indices (block minima, cycle maxima, an ordered cycle structure, ...) and one
independent *component* per index.  A witness is a skeleton plus one
component per index, and its statistic is the sum (q-statistics) or the
vector (shift exponents) of the component statistics.  Counting therefore
convolves per-index histograms, while witness streams take the full product.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass

from ..errors import DEFAULT_GUARD, GuardError, ModeError
from . import perms as P


class Histogram(Mapping):
    """Immutable map from statistic value to a positive count."""

    def __init__(self, counts=None):
        self._counts = {k: v for k, v in dict(counts or {}).items() if v}

    def __getitem__(self, key):
        return self._counts[key]

    def __iter__(self):
        return iter(sorted(self._counts))

    def __len__(self):
        return len(self._counts)

    @property
    def total(self):
        return sum(self._counts.values())

    def coefficients(self):
        """Counts as a dense list indexed by an integer statistic."""
        top = max(self._counts, default=-1)
        return [self._counts.get(k, 0) for k in range(top + 1)]

    def __eq__(self, other):
        if isinstance(other, Histogram):
            return self._counts == other._counts
        if isinstance(other, Mapping):
            return self._counts == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __repr__(self):
        return f"Histogram({dict(sorted(self._counts.items()))})"


@dataclass(frozen=True)
class Enumeration:
    histogram: Histogram
    witnesses: tuple | None = None

    @property
    def total(self):
        return self.histogram.total


class Budget:
    """Counts visited objects and raises ``GuardError`` past the limit."""

    def __init__(self, guard=DEFAULT_GUARD):
        self.guard = guard
        self.spent = 0

    def spend(self, amount=1):
        self.spent += amount
        if self.guard is not None and self.spent > self.guard:
            raise GuardError(f"enumeration exceeded the guard of {self.guard} objects")

    def track(self, items):
        for item in items:
            self.spend()
            yield item


def integer_shifts(fv):
    return tuple(fv.integer_shifts())


def _combine(stats, mode):
    return sum(stats) if mode == "sum" else tuple(stats)


def _convolve(parts, mode):
    acc = Counter({0 if mode == "sum" else (): 1})
    for part in parts:
        nxt = Counter()
        for k1, c1 in acc.items():
            for k2, c2 in part.items():
                key = k1 + k2 if mode == "sum" else k1 + (k2,)
                nxt[key] += c1 * c2
        acc = nxt
    return acc


def tally(skeletons, components, assemble, mode, *, witnesses=False, guard=DEFAULT_GUARD):
    """Run an enumeration.

    ``components(skeleton, budget)`` returns one list of ``(component, stat)``
    per index; ``assemble(skeleton, comps, stat)`` builds a witness.
    """
    budget = Budget(guard)
    hist = Counter()
    stream = [] if witnesses else None
    for skel in skeletons:
        budget.spend()
        comps = components(skel, budget)
        parts = [Counter(stat for _, stat in comp) for comp in comps]
        hist.update(_convolve(parts, mode))
        if witnesses:
            size = 1
            for comp in comps:
                size *= len(comp)
            budget.spend(size)
            for combo in itertools.product(*comps):
                stat = _combine([s for _, s in combo], mode)
                stream.append(assemble(skel, [c for c, _ in combo], stat))
    if witnesses:
        stream.sort(key=lambda w: json.dumps(w.serialize()))
        stream = tuple(stream)
    return Enumeration(Histogram(hist), stream)


def cached_by(key_fn, build):
    """Memoize per-index component lists within one enumeration call."""
    cache = {}

    def get(skel, param, budget):
        key = (skel, key_fn(param))
        if key not in cache:
            cache[key] = list(budget.track(build(skel, param)))
        return cache[key]

    return get


def require_nonnegative(**kwargs):
    for name, value in kwargs.items():
        if value < 0:
            raise ModeError(f"{name} must be nonnegative, got {value}")


# -- witness records -----------------------------------------------------------


def _token(value, index):
    return f"{value}_{index}"


@dataclass(frozen=True)
class FStirlingPartition:
    """Blocks of pi ordered by minimum value, then the overflow sets S_1..S_{a_r}.

    Elements are ``(value, index)`` pairs.
    """

    blocks: tuple
    overflow: tuple
    stat: int = 0

    def subsets(self):
        return self.blocks + self.overflow

    def serialize(self):
        return [[_token(v, i) for v, i in sorted(s)] for s in self.subsets()]


@dataclass(frozen=True)
class RStirlingPartition:
    """The 0-subset followed by the other blocks ordered by minimum value."""

    zero: tuple
    blocks: tuple
    stat: tuple = ()

    def subsets(self):
        return (self.zero,) + self.blocks

    def serialize(self):
        return [[_token(v, i) for v, i in sorted(s)] for s in self.subsets()]


@dataclass(frozen=True)
class PermutationTuple:
    """One permutation per index; ``convention`` picks the cycle rendering."""

    perms: tuple
    convention: str = "min"
    stat: object = 0

    def serialize(self):
        fmt = P.format_max_first if self.convention == "max" else P.format_min_first
        return [fmt(p) for p in self.perms]


@dataclass(frozen=True)
class SequenceTuple:
    """One tuple of slot sequences per index."""

    seqs: tuple
    stat: object = 0

    def serialize(self):
        return [[list(slot) for slot in s] for s in self.seqs]


@dataclass(frozen=True)
class MonomialSequences:
    """The ordered sequence s_0 and one bounded sequence per index."""

    base: tuple
    seqs: tuple
    stat: object = 0

    def serialize(self):
        return [list(self.base)] + [list(s) for s in self.seqs]
