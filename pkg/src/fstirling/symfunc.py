"""Ring-generic symmetric functions and their brute-force counterparts.

Every evaluator accepts a sequence of ring elements (ints, Fractions,
polynomials) and returns an element of the same ring.  The fast evaluators
use one-pass recurrences; the ``*_by_enumeration`` functions sum over index
tuples straight from the definitions and exist to cross-check them.

The empty-product convention is used throughout: every ``*_0`` is 1, even
for the relation-restricted ``h_0``.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from .algebra import power
from .errors import DEFAULT_GUARD, UsageError, check_guard


def _check_degree(n):
    if n < 0:
        raise UsageError(f"degree must be nonnegative, got {n}")


def _product(values):
    out = 1
    for v in values:
        out = out * v
    return out


def as_partition(parts):
    """Validate an integer partition and return it as a nonincreasing tuple."""
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise UsageError(f"partition parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise UsageError(f"partition parts must be nonincreasing: {parts}")
    return parts


def elementary(r, xs):
    """e_r(xs), the sum of products of r distinct entries."""
    _check_degree(r)
    xs = list(xs)
    if r > len(xs):
        return 0
    e = [1] + [0] * r
    for x in xs:
        for i in range(r, 0, -1):
            e[i] = e[i] + x * e[i - 1]
    return e[r]


def complete(r, xs):
    """h_r(xs), the sum of all degree-r monomials."""
    _check_degree(r)
    h = [1] + [0] * r
    for x in xs:
        for i in range(1, r + 1):
            h[i] = h[i] + x * h[i - 1]
    return h[r]


def h_rel_t(n, t, xs):
    """Sum of x_{i1}...x_{in} over i1 < ... < in with consecutive gaps >= t.

    Uses h_n(x_1..x_k) = h_n(x_1..x_{k-1}) + x_k h_{n-1}(x_1..x_{k-t}).
    With t = 1 this is the elementary function.
    """
    _check_degree(n)
    if t < 1:
        raise UsageError(f"gap t must be at least 1, got {t}")
    xs = list(xs)
    base = [1] + [0] * n
    rows = [base]
    for k in range(1, len(xs) + 1):
        prev = rows[k - 1]
        back = rows[k - t] if k - t >= 0 else base
        rows.append([1] + [prev[m] + xs[k - 1] * back[m - 1] for m in range(1, n + 1)])
    return rows[-1][n]


def h_rel_t_bar(n, t, xs):
    """As ``h_rel_t`` with the extra constraint i1 >= t."""
    if t < 1:
        raise UsageError(f"gap t must be at least 1, got {t}")
    return h_rel_t(n, t, list(xs)[t - 1 :])


def a_t(n, t, xs):
    """Sum over i1 < ... < in with i_j = j (mod t) of x_{i1}...x_{in}.

    Recurses on the maximal run of consecutive indices ending at k.
    """
    _check_degree(n)
    if t < 1:
        raise UsageError(f"modulus t must be positive, got {t}")
    xs = tuple(xs)

    @lru_cache(maxsize=None)
    def a(m, k):
        if m == 0:
            return 1
        if k < m:
            return 0
        if (k - m) % t:
            return a(m, k - 1)
        total = a(m, k - 1)
        run = 1
        for h in range(1, m + 1):
            run = run * xs[k - h]
            total = total + run * a(m - h, k - h - 1)
        return total

    return a(n, len(xs))


def _distinct_arrangements(multiset):
    """Distinct orderings of a multiset, generated without duplicates."""
    counts = {}
    for v in multiset:
        counts[v] = counts.get(v, 0) + 1
    values = sorted(counts)
    size = len(multiset)

    def rec(prefix):
        if len(prefix) == size:
            yield tuple(prefix)
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                yield from rec(prefix)
                prefix.pop()
                counts[v] += 1

    yield from rec([])


def monomial(lam, xs):
    """m_lambda(xs): one term per distinct arrangement of the padded exponents."""
    lam = as_partition(lam)
    xs = list(xs)
    if len(lam) > len(xs):
        return 0
    padded = lam + (0,) * (len(xs) - len(lam))
    total = 0
    for exps in _distinct_arrangements(padded):
        total = total + _product(power(x, e) for x, e in zip(xs, exps) if e)
    return total


def power_sum(n, xs):
    return sum((power(x, n) for x in xs), 0)


# -- direct enumeration ------------------------------------------------------


def elementary_by_enumeration(r, xs, guard=DEFAULT_GUARD):
    _check_degree(r)
    xs = list(xs)
    check_guard(math.comb(len(xs), r), guard, "elementary subsets")
    return sum((_product(c) for c in itertools.combinations(xs, r)), 0)


def complete_by_enumeration(r, xs, guard=DEFAULT_GUARD):
    _check_degree(r)
    xs = list(xs)
    check_guard(math.comb(len(xs) + r - 1, r) if xs else 1, guard, "complete multisets")
    if not xs:
        return 1 if r == 0 else 0
    return sum((_product(c) for c in itertools.combinations_with_replacement(xs, r)), 0)


def _index_tuples(n, k, guard):
    check_guard(math.comb(k, n), guard, "index tuples")
    return itertools.combinations(range(1, k + 1), n)


def h_rel_t_by_enumeration(n, t, xs, guard=DEFAULT_GUARD):
    xs = list(xs)
    total = 0
    for idx in _index_tuples(n, len(xs), guard):
        if all(b - a >= t for a, b in zip(idx, idx[1:])):
            total = total + _product(xs[i - 1] for i in idx)
    return total


def h_rel_t_bar_by_enumeration(n, t, xs, guard=DEFAULT_GUARD):
    xs = list(xs)
    total = 0
    for idx in _index_tuples(n, len(xs), guard):
        if idx and idx[0] < t:
            continue
        if all(b - a >= t for a, b in zip(idx, idx[1:])):
            total = total + _product(xs[i - 1] for i in idx)
    return total


def a_t_by_enumeration(n, t, xs, guard=DEFAULT_GUARD):
    xs = list(xs)
    total = 0
    for idx in _index_tuples(n, len(xs), guard):
        if all((i - j) % t == 0 for j, i in enumerate(idx, start=1)):
            total = total + _product(xs[i - 1] for i in idx)
    return total


def monomial_by_enumeration(lam, xs, guard=DEFAULT_GUARD):
    """m_lambda via the set of all permutations of the padded exponent vector."""
    lam = as_partition(lam)
    xs = list(xs)
    if len(lam) > len(xs):
        return 0
    check_guard(math.factorial(len(xs)), guard, "exponent permutations")
    padded = lam + (0,) * (len(xs) - len(lam))
    total = 0
    for exps in set(itertools.permutations(padded)):
        total = total + _product(power(x, e) for x, e in zip(xs, exps))
    return total
