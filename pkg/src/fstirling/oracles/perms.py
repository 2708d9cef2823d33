"""Permutations of {1..m} as image tuples, plus the cycle statistics used by the oracles.

A permutation ``p`` is a tuple with ``p[v - 1]`` the image of ``v``.  A cycle
``(c1, c2, ..., cl)`` sends c1 -> c2 -> ... -> cl -> c1.
"""

from __future__ import annotations

import re

from ..errors import UsageError


def identity(m):
    return tuple(range(1, m + 1))


def from_cycles(cycles, m):
    img = list(range(1, m + 1))
    seen = set()
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if a in seen or not 1 <= a <= m:
                raise UsageError(f"bad cycle {cyc} for a permutation of {m}")
            seen.add(a)
            img[a - 1] = b
    return tuple(img)


def cycles_of(p):
    """Cycles as tuples, each started at its smallest element, in order of first element."""
    seen = set()
    out = []
    for start in range(1, len(p) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        v = p[start - 1]
        while v != start:
            cyc.append(v)
            seen.add(v)
            v = p[v - 1]
        out.append(tuple(cyc))
    return out


def cycles_min_first(p):
    """Cycles written from their minimum, ordered by increasing minimum."""
    return cycles_of(p)


def cycles_max_first(p):
    """Cycles written from their maximum, ordered by decreasing maximum."""
    out = []
    for cyc in cycles_of(p):
        k = cyc.index(max(cyc))
        out.append(cyc[k:] + cyc[:k])
    out.sort(key=lambda c: -c[0])
    return out


def cycle_maxima(p):
    return {max(c) for c in cycles_of(p)}


def cycle_minima(p):
    return {min(c) for c in cycles_of(p)}


def max_word(p):
    """The word s_p: max-first cycles, by decreasing maxima, brackets dropped."""
    return tuple(v for c in cycles_max_first(p) for v in c)


def min_word(p):
    """Min-first cycles by increasing minima, brackets dropped."""
    return tuple(v for c in cycles_min_first(p) for v in c)


def coinv_at(word, letter):
    """Number of letters larger than ``letter`` to its right."""
    pos = word.index(letter)
    return sum(1 for j in word[pos + 1 :] if j > letter)


def coinv(word):
    """Sum over letters i of the number of larger letters to the right of i."""
    total = 0
    for pos, i in enumerate(word):
        total += sum(1 for j in word[pos + 1 :] if j > i)
    return total


def orbit_word_of_one(p):
    """(p(1), p^2(1), ..., 1)"""
    word = []
    v = p[0]
    while True:
        word.append(v)
        if v == 1:
            return tuple(word)
        v = p[v - 1]


def left_to_right_minima(word):
    count = 0
    best = None
    for v in word:
        if best is None or v < best:
            count += 1
            best = v
    return count


def records(p):
    """Number of records (left-to-right minima) of the orbit word of 1."""
    return left_to_right_minima(orbit_word_of_one(p))


def big_numbers(p):
    """Entries of the min-first cycle word larger than everything to their right."""
    word = min_word(p)
    count = 0
    best = 0
    for v in reversed(word):
        if v > best:
            count += 1
            best = v
    return count


def format_cycles(cycles):
    return "".join("(" + ",".join(str(v) for v in c) + ")" for c in cycles)


def format_max_first(p):
    return format_cycles(cycles_max_first(p))


def format_min_first(p):
    return format_cycles(cycles_min_first(p))


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text, m=None):
    """Parse ``"(4,1)(3)(2)"``; fixed points may be omitted when ``m`` is given."""
    text = text.strip()
    cycles = []
    for body in _CYCLE.findall(text):
        cyc = tuple(int(v) for v in re.split(r"[,\s]+", body.strip()) if v)
        if not cyc:
            raise UsageError(f"empty cycle in {text!r}")
        cycles.append(cyc)
    if _CYCLE.sub("", text).strip():
        raise UsageError(f"cannot parse cycle notation {text!r}")
    if m is None:
        m = max((max(c) for c in cycles), default=0)
    return from_cycles(cycles, m)
