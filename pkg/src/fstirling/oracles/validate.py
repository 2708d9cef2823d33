"""Independent witness validators and filter-based brute force.

Nothing here reuses the generators.  Each ``*_violation`` function re-checks
the defining conditions of one witness and returns a short reason, or None
when the witness is valid.  The ``brute_*`` functions scan the whole ambient
space (every assignment of labeled elements, every permutation of S_m, every
word) and keep what the validators accept, so they are only usable at the
smallest sizes.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict

from ..errors import DEFAULT_GUARD, check_guard
from ..symfunc import as_partition
from . import perms as P
from .core import Histogram


def labeled(*tokens):
    """``labeled("1_1", "3_2")`` -> frozenset of (value, index) pairs."""
    out = set()
    for tok in tokens:
        v, i = tok.split("_")
        out.add((int(v), int(i)))
    return frozenset(out)


def _as_sets(subsets):
    return [frozenset(s) for s in subsets]


# -- partitions -----------------------------------------------------------------


def f_partition_violation(subsets, n, j, shifts):
    """Check the three f-Stirling conditions on (pi_1..pi_j, S_1..S_{a_r})."""
    subsets = _as_sets(subsets)
    r, top = len(shifts), max(shifts)
    if len(subsets) != j + top:
        return f"expected {j + top} subsets, got {len(subsets)}"
    universe = {(m, i) for m in range(1, n + 1) for i in range(1, r + 1)}
    seen = Counter(x for s in subsets for x in s)
    if set(seen) != universe or any(c > 1 for c in seen.values()):
        return "not a partition of the labeled copies"
    for block in subsets[:j]:
        if not block:
            return "empty block in pi"
        low = min(v for v, _ in block)
        if any((low, i) not in block for i in range(1, r + 1)):
            return f"block minimum {low} is missing an index"
    if n >= 1 and not any(all((1, i) in b for i in range(1, r + 1)) for b in subsets[:j]):
        return "the copies of 1 are not together in a block of pi"
    for pos, s in enumerate(subsets):
        for _, i in s:
            if pos >= j + shifts[i - 1]:
                return f"an element with index {i} lies beyond the first {j + shifts[i - 1]} subsets"
    return None


def subset_labels(subsets, j):
    """Blocks of pi are labeled by their minimum value, S_i by 1 - i."""
    subsets = _as_sets(subsets)
    labels = [min(v for v, _ in b) for b in subsets[:j]]
    labels += [1 - i for i in range(1, len(subsets) - j + 1)]
    return labels


def s_statistic(subsets, j):
    """Sum over labeled elements v_i of #{subsets A : label(A_{v_i}) < label(A) < v}."""
    subsets = _as_sets(subsets)
    labels = subset_labels(subsets, j)
    total = 0
    for lab, s in zip(labels, subsets):
        for v, _ in s:
            total += sum(1 for other in labels if lab < other < v)
    return total


def r_partition_violation(subsets, n, j, r):
    """Check the r-Stirling conditions; the 0-subset must come first."""
    subsets = _as_sets(subsets)
    if len(subsets) != j + 1:
        return f"expected {j + 1} subsets, got {len(subsets)}"
    universe = {(m, i) for m in range(0, n + 1) for i in range(1, r + 1)}
    seen = Counter(x for s in subsets for x in s)
    if set(seen) != universe or any(c > 1 for c in seen.values()):
        return "not a partition of the labeled copies"
    if any((0, i) not in subsets[0] for i in range(1, r + 1)):
        return "the first subset is not the 0-subset"
    for s in subsets:
        if not s:
            return "empty subset"
        low = min(v for v, _ in s)
        if any((low, i) not in s for i in range(1, r + 1)):
            return f"subset minimum {low} is missing an index"
    if n != 0:
        for s in subsets:
            if any((0, i) in s and (1, i) in s for i in range(1, r + 1)):
                return "a subset contains both 0_i and 1_i"
    return None


def zero_subset_excess(subsets, r):
    zero = _as_sets(subsets)[0]
    return tuple(sum(1 for _, i in zero if i == idx) - 1 for idx in range(1, r + 1))


def brute_f_partitions(n, j, shifts, guard=DEFAULT_GUARD):
    """Histogram of s_P over every assignment of labeled copies to j + a_r slots."""
    r, top = len(shifts), max(shifts)
    slots = j + top
    elements = [(m, i) for m in range(1, n + 1) for i in range(1, r + 1)]
    check_guard(slots ** len(elements), guard, "brute-force partition scan")
    hist = Counter()
    if slots == 0:
        if not elements and j == 0:
            hist[0] += 1
        return Histogram(hist)
    for assign in itertools.product(range(slots), repeat=len(elements)):
        subsets = [set() for _ in range(slots)]
        for x, pos in zip(elements, assign):
            subsets[pos].add(x)
        if any(not b for b in subsets[:j]):
            continue
        mins = [min(v for v, _ in b) for b in subsets[:j]]
        if mins != sorted(set(mins)):
            continue
        if f_partition_violation(subsets, n, j, shifts) is None:
            hist[s_statistic(subsets, j)] += 1
    return Histogram(hist)


def brute_r_partitions(n, j, r, guard=DEFAULT_GUARD):
    """Histogram of 0-subset excess vectors over every assignment to j + 1 slots."""
    elements = [(m, i) for m in range(1, n + 1) for i in range(1, r + 1)]
    check_guard((j + 1) ** len(elements), guard, "brute-force partition scan")
    hist = Counter()
    for assign in itertools.product(range(j + 1), repeat=len(elements)):
        subsets = [{(0, i) for i in range(1, r + 1)}] + [set() for _ in range(j)]
        for x, pos in zip(elements, assign):
            subsets[pos].add(x)
        if any(not b for b in subsets[1:]):
            continue
        mins = [min(v for v, _ in b) for b in subsets[1:]]
        if mins != sorted(set(mins)):
            continue
        if r_partition_violation(subsets, n, j, r) is None:
            hist[zero_subset_excess(subsets, r)] += 1
    return Histogram(hist)


# -- permutation tuples -----------------------------------------------------------


def _orbit(p, v):
    out = {v}
    w = p[v - 1]
    while w != v:
        out.add(w)
        w = p[w - 1]
    return frozenset(out)


def f_perm_violation(perms, n, j, shifts):
    """Conditions (a)-(c): cycle counts, common maxima up to n, distinct orbits of n..n+a_i."""
    if len(perms) != len(shifts):
        return "wrong number of permutations"
    keys = set()
    for p, a in zip(perms, shifts):
        if len(p) != n + a or sorted(p) != list(range(1, n + a + 1)):
            return f"not a permutation of {n + a} letters"
        if len(P.cycles_of(p)) != j + a:
            return f"expected {j + a} cycles"
        keys.add(frozenset(m for m in P.cycle_maxima(p) if m <= n))
        if n >= 1:
            orbits = [_orbit(p, v) for v in range(n, n + a + 1)]
            if len(set(orbits)) != len(orbits):
                return "two of n, ..., n + a_i share an orbit"
    if len(keys) > 1:
        return "cycle maxima up to n differ"
    return None


def r_perm_violation(perms, n, j, r):
    """Conditions (a')-(c'): j + 1 cycles, common minima, 1 and 2 in distinct orbits."""
    if len(perms) != r:
        return "wrong number of permutations"
    keys = set()
    for p in perms:
        if len(p) != n + 1 or sorted(p) != list(range(1, n + 2)):
            return f"not a permutation of {n + 1} letters"
        if len(P.cycles_of(p)) != j + 1:
            return f"expected {j + 1} cycles"
        if n != 0 and 2 in _orbit(p, 1):
            return "1 and 2 share an orbit"
        keys.add(frozenset(P.cycle_minima(p)))
    if len(keys) > 1:
        return "cycle minima differ"
    return None


def _structure(p):
    return tuple(len(c) for c in P.cycles_min_first(p))


def structured_violation(p, K, cycles, *, max_len=None, gap=None, modulus=None):
    """Ordered-structure conditions on a single permutation.

    Cycles after position K must be trivial and the total number of cycles
    must be ``cycles``.  ``max_len`` bounds cycle lengths, ``gap`` is the
    minimal distance between two nontrivial cycles, and ``modulus`` t forces
    nontrivial cycles to sit at positions p with p = K (mod t).
    """
    lengths = _structure(p)
    if len(lengths) != cycles:
        return f"expected {cycles} cycles, got {len(lengths)}"
    if any(length != 1 for length in lengths[max(K, 0):]):
        return f"a nontrivial cycle beyond position {K}"
    if max_len is not None and max(lengths, default=1) > max_len:
        return f"a cycle longer than {max_len}"
    big = [pos for pos, length in enumerate(lengths, start=1) if length > 1]
    if gap is not None and any(b - a < gap for a, b in zip(big, big[1:])):
        return f"two nontrivial cycles closer than {gap}"
    if modulus is not None and any((K - pos) % modulus for pos in big):
        return f"a nontrivial cycle off the residue class of {K} mod {modulus}"
    return None


def _common_prefix(perms, K):
    prefixes = {_structure(p)[: max(K, 0)] for p in perms}
    return len(prefixes) <= 1


def cycle_tuple_violation(perms, n, k, sizes, *, t, family):
    """Validate an h^{<|t} (``family="hrel"``) or a^{(t)} (``family="at"``) tuple."""
    K = k + 1 - n
    for p, m in zip(perms, sizes):
        if len(p) != m or sorted(p) != list(range(1, m + 1)):
            return f"not a permutation of {m} letters"
        kw = {"max_len": 2, "gap": t - 1} if family == "hrel" else {"modulus": t}
        reason = structured_violation(p, K, m - n, **kw)
        if reason:
            return reason
    if not _common_prefix(perms, K):
        return f"ordered cycle structures differ up to {K}"
    return None


def _grouped(m, keep, key, stat):
    """Filter S_m and bucket the survivors by ``key``, counting ``stat`` values."""
    buckets = defaultdict(Counter)
    for p in itertools.permutations(range(1, m + 1)):
        if keep(p):
            buckets[key(p)][stat(p)] += 1
    return buckets


def _combine_buckets(bucket_lists, mode):
    keys = set(bucket_lists[0])
    for b in bucket_lists[1:]:
        keys &= set(b)
    hist = Counter()
    for key in keys:
        acc = Counter({0 if mode == "sum" else (): 1})
        for b in bucket_lists:
            nxt = Counter()
            for s1, c1 in acc.items():
                for s2, c2 in b[key].items():
                    nxt[s1 + s2 if mode == "sum" else s1 + (s2,)] += c1 * c2
            acc = nxt
        hist.update(acc)
    return Histogram(hist)


def _factorial_guard(sizes, guard):
    total = 0
    for m in set(sizes):
        f = 1
        for x in range(2, m + 1):
            f *= x
        total += f
    check_guard(total, guard, "brute-force permutation scan")


def brute_f_perm_tuples(n, j, shifts, guard=DEFAULT_GUARD):
    """coinv histogram from every permutation of S_{n+a_i} that passes (a) and (c)."""
    _factorial_guard([n + a for a in shifts], guard)
    by_shift = {}
    for a in set(shifts):
        by_shift[a] = _grouped(
            n + a,
            lambda p, a=a: f_perm_violation([p], n, j, [a]) is None,
            lambda p: frozenset(m for m in P.cycle_maxima(p) if m <= n),
            lambda p: P.coinv(P.max_word(p)),
        )
    return _combine_buckets([by_shift[a] for a in shifts], "sum")


def brute_r_perm_tuples(n, j, r, guard=DEFAULT_GUARD):
    """(rec - 1) vectors from every permutation of S_{n+1} that passes (a') and (c')."""
    _factorial_guard([n + 1], guard)
    bucket = _grouped(
        n + 1,
        lambda p: r_perm_violation([p], n, j, 1) is None,
        lambda p: frozenset(P.cycle_minima(p)),
        lambda p: P.records(p) - 1,
    )
    return _combine_buckets([bucket] * r, "vector")


def brute_cycle_tuples(n, k, t, shifts, *, family, symbolic=False, guard=DEFAULT_GUARD):
    """Histogram for the h^{<|t} / a^{(t)} tuples by scanning S_m for each index."""
    K = k + 1 - n
    sizes = [k + 2] * len(shifts) if symbolic else [k + 1 + a for a in shifts]
    _factorial_guard(sizes, guard)
    stat = (lambda p: P.big_numbers(p) - 1) if symbolic else (lambda p: 0)
    by_size = {}
    for m in set(sizes):
        by_size[m] = _grouped(
            m,
            lambda p, m=m: cycle_tuple_violation([p], n, k, [m], t=t, family=family) is None,
            lambda p: _structure(p)[: max(K, 0)],
            stat,
        )
    return _combine_buckets([by_size[m] for m in sizes], "vector" if symbolic else "sum")


# -- sequences -------------------------------------------------------------------------


def sequence_tuple_violation(seqs, n, k, tops):
    """Every index: k slots, slot p over {p..top_i}; common slot lengths; dimension n."""
    structures = set()
    for slots, top in zip(seqs, tops):
        if len(slots) != k:
            return f"expected {k} slots"
        for p, word in enumerate(slots, start=1):
            if any(not p <= x <= top for x in word):
                return f"slot {p} has an entry outside {p}..{top}"
        structures.add(tuple(len(w) for w in slots))
    if len(structures) > 1:
        return "ordered structures differ"
    if structures and sum(next(iter(structures))) != n:
        return f"dimension is not {n}"
    return None


def brute_ordered_sequences(n, k, tops, *, marker=None, guard=DEFAULT_GUARD):
    """Cut every word of length n over {1..top_i} into k slots and keep the valid ones."""
    check_guard(sum(max(top, 1) ** n for top in tops) * (n + 1) ** k, guard, "brute-force word scan")
    cuts = [c for c in itertools.product(range(n + 1), repeat=k) if sum(c) == n]
    buckets = []
    for top in tops:
        b = defaultdict(Counter)
        for word in itertools.product(range(1, top + 1), repeat=n):
            for c in cuts:
                slots, pos = [], 0
                for length in c:
                    slots.append(word[pos : pos + length])
                    pos += length
                if sequence_tuple_violation([slots], n, k, [top]) is None:
                    b[c][word.count(marker) if marker else 0] += 1
        buckets.append(b)
    return _combine_buckets(buckets, "vector" if marker else "sum")


def monomial_violation(base, seqs, lam, k, tops):
    lam = as_partition(lam)
    size = sum(lam)
    if len(base) != size or list(base) != sorted(base) or any(not 1 <= x <= k for x in base):
        return "s_0 is not a nondecreasing tuple over 1..k"
    if sorted(Counter(base).values()) != sorted(lam):
        return "multiplicities of s_0 do not realize lambda"
    for s, top in zip(seqs, tops):
        if len(s) != size or any(not b <= x <= top for b, x in zip(base, s)):
            return "a sequence does not dominate s_0 within its bound"
    return None


def brute_monomial_sequences(lam, k, tops, *, marker=None, guard=DEFAULT_GUARD):
    """Scan all n-tuples for s_0 and all of {1..top}^n for each s_i."""
    lam = as_partition(lam)
    size = sum(lam)
    check_guard(max(k, 1) ** size + sum(max(t, 1) ** size for t in tops), guard, "brute-force sequence scan")
    hist = Counter()
    for base in itertools.product(range(1, k + 1), repeat=size):
        if monomial_violation(base, [], lam, k, []) is not None:
            continue
        parts = []
        for top in tops:
            c = Counter()
            for s in itertools.product(range(1, top + 1), repeat=size):
                if monomial_violation(base, [s], lam, k, [top]) is None:
                    c[s.count(marker) if marker else 0] += 1
            parts.append(c)
        acc = Counter({0 if marker is None else (): 1})
        for part in parts:
            nxt = Counter()
            for s1, c1 in acc.items():
                for s2, c2 in part.items():
                    nxt[s1 + s2 if marker is None else s1 + (s2,)] += c1 * c2
            acc = nxt
        hist.update(acc)
    return Histogram(hist)


# -- statistics --------------------------------------------------------------------------


def adjacent_transposition_distance(word):
    """Bubble-sort swaps needed to turn ``word`` into its decreasing rearrangement."""
    w = list(word)
    swaps = 0
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i] < w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                swaps += 1
                changed = True
    return swaps
