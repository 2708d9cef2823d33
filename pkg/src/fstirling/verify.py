"""Verification suites: every invariant of the library as a named, exact check.

A check is a function returning None on success or a short counterexample.
Suites run their checks in name order so reports are deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import family as fam
from . import identities as ids
from . import symfunc as sf
from .algebra import ShiftPoly, UniPoly
from .errors import UsageError
from .oracles import cycles, partitions, sequences
from .oracles import validate as val

SUITES = ("recurrence", "q1", "oracle", "identities", "all")
DEFAULT_MAX_N = {"recurrence": 10, "q1": 8, "oracle": 5, "identities": 10}
BRUTE_MAX_N = 3


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str | None = None


@dataclass(frozen=True)
class Report:
    suite: str
    max_n: int | None
    results: tuple

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    @property
    def failures(self):
        return [r for r in self.results if not r.ok]


def integer_vectors(max_r, max_shift):
    for r in range(1, max_r + 1):
        for shifts in itertools.combinations_with_replacement(range(max_shift + 1), r):
            yield fam.ShiftVector(shifts)


def identity_vectors():
    return [fam.ShiftVector(s) for s in ((0,), (0, 1), (1, 2), ("1/2", 2))] + [fam.ShiftVector((0, fam.Z))]


def _first(pairs):
    """First (label, got, want) with got != want, rendered; else None."""
    for label, got, want in pairs:
        if got != want:
            return f"{label}: got {got}, expected {want}"
    return None


def _cells(max_n):
    for n in range(max_n + 1):
        for j in range(n + 1):
            yield n, j


def _terms(value, r):
    if not isinstance(value, ShiftPoly):
        value = ShiftPoly.constant(r, value)
    return dict(value.terms)


# -- recurrence suite -----------------------------------------------------------------


def _check_tables_vs_definitions(max_n):
    def pairs():
        for fv in list(integer_vectors(2, 2)) + identity_vectors():
            H, E = fam.h_table(max_n, fv), fam.e_table(max_n, fv)
            for n, j in _cells(max_n):
                yield f"H({j},{n}) f={fv}", H.entry(j, n), fam.H_f(j, n, fv)
                yield f"E({j},{n}) f={fv}", E.entry(j, n), fam.E_f(j, n, fv)

    return _first(pairs())


def _check_jacobi_three_ways(max_n):
    jz = fam.ShiftVector((0, fam.Z))

    def pairs():
        for kind, which in (("JS", "H"), ("Jc", "E")):
            direct = fam.jacobi_recurrence_table(kind, max_n)
            named = fam.named_triangle(kind, max_n)
            for n, j in _cells(max_n):
                spec = fam.H_f(j, n, jz) if which == "H" else fam.E_f(j, n, jz)
                sym = fam.symbolic_H(j, n, 2) if which == "H" else fam.symbolic_E(j, n, 2)
                sub = sym.substitute([0, fam.Z])
                want = direct.entry(j, n)
                yield f"{kind}({n},{j}) specialization", spec, want
                yield f"{kind}({n},{j}) substitution", sub, want
                yield f"{kind}({n},{j}) named table", named.entry(j, n), want

    return _first(pairs())


def _check_triangle_pattern(max_n):
    for fv in list(integer_vectors(2, 2)) + identity_vectors():
        for table in (fam.h_table(max_n, fv), fam.e_table(max_n, fv)):
            for n in range(max_n + 1):
                for j in range(max_n + 1):
                    value = table.entry(j, n)
                    if j > n and value != 0:
                        return f"{table.kind}({j},{n}) f={fv} should vanish"
                    if j <= n and (value == 0) != (j == 0 and n > 0):
                        return f"{table.kind}({j},{n}) f={fv} has the wrong zero pattern"
            if table.entry(0, 0) != 1:
                return f"{table.kind}(0,0) f={fv} is not 1"
    return None


def _check_nonnegative(max_n):
    for fv in integer_vectors(3, 3):
        for which in ("H", "E"):
            table = fam.q_table(which, max_n, fv)
            for n, j, value in table.cells():
                coeffs = value.coeffs if isinstance(value, UniPoly) else (value,)
                if any(c < 0 for c in coeffs):
                    return f"q{which}({j},{n}) f={fv} has a negative coefficient"
    for r in (1, 2, 3):
        for which in ("H", "E"):
            for n, j, value in fam.symbolic_table(which, max_n, r).cells():
                if any(c < 0 for c in _terms(value, r).values()):
                    return f"symbolic {which}({j},{n}) r={r} has a negative coefficient"
    return None


def _check_symfunc_vs_enumeration(max_n):
    k_max = min(max_n, 6)
    xs = [UniPoly((i, 1), "x") for i in range(1, k_max + 1)]

    def pairs():
        for k in range(k_max + 1):
            vals = xs[:k]
            for n in range(k_max + 1):
                yield f"e_{n} k={k}", sf.elementary(n, vals), sf.elementary_by_enumeration(n, vals)
                yield f"h_{n} k={k}", sf.complete(n, vals), sf.complete_by_enumeration(n, vals)
                for t in (1, 2, 3):
                    yield f"h_{n}^<|{t} k={k}", sf.h_rel_t(n, t, vals), sf.h_rel_t_by_enumeration(n, t, vals)
                    yield f"hbar_{n}^<|{t} k={k}", sf.h_rel_t_bar(n, t, vals), sf.h_rel_t_bar_by_enumeration(n, t, vals)
                    yield f"a_{n}^({t}) k={k}", sf.a_t(n, t, vals), sf.a_t_by_enumeration(n, t, vals)
                yield f"a_{n}^(1) = e_{n} k={k}", sf.a_t(n, 1, vals), sf.elementary(n, vals)

    return _first(pairs())


def _check_symbolic_substitution(max_n):
    def pairs():
        for fv in integer_vectors(2, 2):
            for n, j in _cells(min(max_n, 8)):
                yield f"symbolic H({j},{n}) at {fv}", _as_scalar(fam.symbolic_H(j, n, fv.r), fv), fam.H_f(j, n, fv)
                yield f"symbolic E({j},{n}) at {fv}", _as_scalar(fam.symbolic_E(j, n, fv.r), fv), fam.E_f(j, n, fv)

    return _first(pairs())


def _as_scalar(value, fv):
    return value.substitute(fv.shifts) if isinstance(value, ShiftPoly) else value


def _check_row_sums(max_n):
    def pairs():
        for fv in list(integer_vectors(2, 2)) + identity_vectors():
            for n in range(1, max_n + 1):
                prod = 1
                for i in range(1, n):
                    prod = prod * (fv.f(i) + 1)
                yield f"row {n} f={fv}", sum((fam.E_f(j, n, fv) for j in range(n + 1)), 0), prod

    return _first(pairs())


RECURRENCE_CHECKS = {
    "recurrence.jacobi-three-ways": _check_jacobi_three_ways,
    "recurrence.nonnegative-coefficients": _check_nonnegative,
    "recurrence.row-sums": _check_row_sums,
    "recurrence.symbolic-substitution": _check_symbolic_substitution,
    "recurrence.symfunc-vs-enumeration": _check_symfunc_vs_enumeration,
    "recurrence.tables-vs-definitions": _check_tables_vs_definitions,
    "recurrence.zero-pattern": _check_triangle_pattern,
}


# -- q = 1 suite -------------------------------------------------------------------------


def _at_one(value):
    return value.eval(1) if isinstance(value, UniPoly) else value


def _check_q1(max_n):
    def pairs():
        for fv in integer_vectors(3, 3):
            qH, qE = fam.q_table("H", max_n, fv), fam.q_table("E", max_n, fv)
            for n, j in _cells(max_n):
                yield f"qH({j},{n}) f={fv} at q=1", _at_one(qH.entry(j, n)), fam.H_f(j, n, fv)
                yield f"qE({j},{n}) f={fv} at q=1", _at_one(qE.entry(j, n)), fam.E_f(j, n, fv)

    return _first(pairs())


Q1_CHECKS = {"q1.specialization": _check_q1}


# -- oracle suite -------------------------------------------------------------------------


def _partitions_of(m):
    if m == 0:
        yield ()
        return

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail

    yield from rec(m, m)


def _oracle_vectors():
    return list(integer_vectors(2, 2))


def _check_oracle_q(max_n):
    def pairs():
        for fv in _oracle_vectors():
            for n, j in _cells(max_n):
                yield f"fpart ({n},{j}) f={fv}", partitions.enum_f_stirling_partitions(n, j, fv).histogram.coefficients(), \
                    list(fam.q_H(j, n, fv).coeffs)
                yield f"fperm ({n},{j}) f={fv}", cycles.enum_f_stirling_perm_tuples(n, j, fv).histogram.coefficients(), \
                    list(fam.q_E(j, n, fv).coeffs)

    return _first(pairs())


def _check_oracle_shift(max_n):
    def pairs():
        for r in (1, 2):
            for n, j in _cells(max_n):
                yield f"rpart ({n},{j}) r={r}", dict(partitions.enum_r_stirling_partitions(n, j, r).histogram), \
                    _terms(fam.symbolic_H(j, n, r), r)
                yield f"rperm ({n},{j}) r={r}", dict(cycles.enum_r_stirling_perm_tuples(n, j, r).histogram), \
                    _terms(fam.symbolic_E(j, n, r), r)

    return _first(pairs())


def _check_oracle_symmetric(max_n):
    def pairs():
        for fv in _oracle_vectors():
            sym = [fam.shift_value(fv.r, i) for i in range(1, max_n + 1)]
            for k in range(max_n + 1):
                xs, sx = fv.values(k), sym[:k]
                for n in range(max_n + 1):
                    for t in (2, 3):
                        yield f"hrel n={n} k={k} t={t} f={fv}", cycles.enum_hrel_cycle_tuples(n, k, t, fv).total, \
                            sf.h_rel_t(n, t, xs)
                        yield f"hrel symbolic n={n} k={k} t={t} r={fv.r}", \
                            dict(cycles.enum_hrel_cycle_tuples(n, k, t, fv, symbolic=True).histogram), \
                            _terms(sf.h_rel_t(n, t, sx), fv.r)
                    for t in (1, 2, 3):
                        yield f"at n={n} k={k} t={t} f={fv}", cycles.enum_a_t_cycle_tuples(n, k, t, fv).total, \
                            sf.a_t(n, t, xs)
                        yield f"at symbolic n={n} k={k} t={t} r={fv.r}", \
                            dict(cycles.enum_a_t_cycle_tuples(n, k, t, fv, symbolic=True).histogram), \
                            _terms(sf.a_t(n, t, sx), fv.r)
                    yield f"seq n={n} k={k} f={fv}", sequences.enum_ordered_sequences(n, k, fv).total, sf.complete(n, xs)
                    yield f"seq symbolic n={n} k={k} r={fv.r}", \
                        dict(sequences.enum_ordered_sequences(n, k, fv, symbolic=True).histogram), \
                        _terms(sf.complete(n, sx), fv.r)
                for size in range(min(max_n, 4) + 1):
                    for lam in _partitions_of(size):
                        yield f"mono {lam} k={k} f={fv}", sequences.enum_monomial_sequences(lam, k, fv).total, \
                            sf.monomial(lam, xs)
                        yield f"mono symbolic {lam} k={k} r={fv.r}", \
                            dict(sequences.enum_monomial_sequences(lam, k, fv, symbolic=True).histogram), \
                            _terms(sf.monomial(lam, sx), fv.r)

    return _first(pairs())


def _check_oracle_brute(max_n):
    m = min(max_n, BRUTE_MAX_N)

    def pairs():
        for fv in _oracle_vectors():
            s = fv.shifts
            for n, j in _cells(m):
                yield f"fpart brute ({n},{j}) f={fv}", val.brute_f_partitions(n, j, s), \
                    partitions.enum_f_stirling_partitions(n, j, fv).histogram
                yield f"fperm brute ({n},{j}) f={fv}", val.brute_f_perm_tuples(n, j, s), \
                    cycles.enum_f_stirling_perm_tuples(n, j, fv).histogram
            for k in range(m + 1):
                for n in range(m + 1):
                    for t in (2, 3):
                        yield f"hrel brute n={n} k={k} t={t} f={fv}", \
                            val.brute_cycle_tuples(n, k, t, s, family="hrel"), \
                            cycles.enum_hrel_cycle_tuples(n, k, t, fv).histogram
                    for t in (1, 2, 3):
                        yield f"at brute n={n} k={k} t={t} f={fv}", \
                            val.brute_cycle_tuples(n, k, t, s, family="at", symbolic=True), \
                            cycles.enum_a_t_cycle_tuples(n, k, t, fv, symbolic=True).histogram
                    yield f"seq brute n={n} k={k} f={fv}", val.brute_ordered_sequences(n, k, [k + a for a in s]), \
                        sequences.enum_ordered_sequences(n, k, fv).histogram
        for r in (1, 2):
            for n, j in _cells(m):
                yield f"rpart brute ({n},{j}) r={r}", val.brute_r_partitions(n, j, r), \
                    partitions.enum_r_stirling_partitions(n, j, r).histogram
                yield f"rperm brute ({n},{j}) r={r}", val.brute_r_perm_tuples(n, j, r), \
                    cycles.enum_r_stirling_perm_tuples(n, j, r).histogram

    return _first(pairs())


def _check_witnesses(max_n):
    """Every emitted witness passes its validator and carries the right statistic."""
    m = min(max_n, BRUTE_MAX_N)
    for fv in _oracle_vectors():
        s = fv.shifts
        for n, j in _cells(m):
            for w in partitions.enum_f_stirling_partitions(n, j, fv, witnesses=True).witnesses:
                reason = val.f_partition_violation(w.subsets(), n, j, s)
                if reason or val.s_statistic(w.subsets(), j) != w.stat:
                    return f"fpart {w.serialize()}: {reason or 'wrong statistic'}"
            for w in cycles.enum_f_stirling_perm_tuples(n, j, fv, witnesses=True).witnesses:
                reason = val.f_perm_violation(w.perms, n, j, s)
                if reason:
                    return f"fperm {w.serialize()}: {reason}"
    for r in (1, 2):
        for n, j in _cells(m):
            for w in partitions.enum_r_stirling_partitions(n, j, r, witnesses=True).witnesses:
                reason = val.r_partition_violation(w.subsets(), n, j, r)
                if reason or val.zero_subset_excess(w.subsets(), r) != w.stat:
                    return f"rpart {w.serialize()}: {reason or 'wrong statistic'}"
            for w in cycles.enum_r_stirling_perm_tuples(n, j, r, witnesses=True).witnesses:
                reason = val.r_perm_violation(w.perms, n, j, r)
                if reason:
                    return f"rperm {w.serialize()}: {reason}"
    return None


def _check_worked_totals(max_n):
    f12, f01 = fam.ShiftVector((1, 2)), fam.ShiftVector((0, 1))
    return _first(
        [
            ("fpart (3,2) f=1,2", partitions.enum_f_stirling_partitions(3, 2, f12).total, 18),
            ("fperm (3,2) f=1,2", cycles.enum_f_stirling_perm_tuples(3, 2, f12).total, 18),
            ("rpart (3,2) r=2", partitions.enum_r_stirling_partitions(3, 2, 2).total, 13),
            ("rperm (3,2) r=2", cycles.enum_r_stirling_perm_tuples(3, 2, 2).total, 13),
            ("hrel n=2 k=3 t=2", cycles.enum_hrel_cycle_tuples(2, 3, 2, f01).total, 24),
            ("hrel n=2 k=4 t=3", cycles.enum_hrel_cycle_tuples(2, 4, 3, f01).total, 40),
            ("at Lc(3,2)", cycles.enum_a_t_cycle_tuples(1, 2, 1, f01).total, 8),
            ("seq LS(3,2)", sequences.enum_ordered_sequences(1, 2, f01).total, 8),
        ]
    )


ORACLE_CHECKS = {
    "oracle.brute-force": _check_oracle_brute,
    "oracle.q-statistics": _check_oracle_q,
    "oracle.shift-statistics": _check_oracle_shift,
    "oracle.symmetric-functions": _check_oracle_symmetric,
    "oracle.witness-totals": _check_worked_totals,
    "oracle.witness-validity": _check_witnesses,
}


# -- identities suite ------------------------------------------------------------------------


def _check_inverse(max_n):
    for fv in identity_vectors():
        res = ids.matrix_inverse_check(max_n, fv)
        if not res:
            return f"f={fv}: {res.detail}"
    return None


def _check_basis(max_n):
    for fv in identity_vectors():
        bound = min(max_n, 6) if fv.symbolic else max_n
        for n in range(bound + 1):
            res = ids.basis_change_check(n, fv)
            if not res:
                return f"f={fv}: {res.detail}"
    return None


def _check_genfun(max_n):
    def pairs():
        for fv in identity_vectors():
            for n in range(1, max_n + 1):
                poly = ids.genfun_E(n, fv)
                for j in range(n + 1):
                    yield f"genfun_E n={n} [t^{j}] f={fv}", poly.coeff(j), fam.E_f(j, n, fv)
            N = max_n + 2
            for j in range(min(N, 6) + 1):
                series = ids.genfun_H(j, fv, N)
                for n in range(N + 1):
                    yield f"genfun_H j={j} [t^{n}] f={fv}", series.coeff(n), fam.H_f(j, n, fv)

    return _first(pairs())


def _check_newton(max_n):
    def pairs():
        for fv in identity_vectors():
            if fv.symbolic:
                continue
            for j in range(7):
                for n in range(1, max_n + 1):
                    yield f"newton ({j},{n}) f={fv}", ids.newton_explicit_H(j, n, fv), fam.H_f(j, n, fv)

    return _first(pairs())


IDENTITY_CHECKS = {
    "identities.basis-change": _check_basis,
    "identities.generating-functions": _check_genfun,
    "identities.matrix-inverse": _check_inverse,
    "identities.newton-closed-form": _check_newton,
}

SUITE_CHECKS = {
    "recurrence": RECURRENCE_CHECKS,
    "q1": Q1_CHECKS,
    "oracle": ORACLE_CHECKS,
    "identities": IDENTITY_CHECKS,
}


def run_check(name, fn, max_n):
    try:
        detail = fn(max_n)
    except AssertionError as exc:
        detail = f"invariant violated: {exc}"
    return CheckResult(name, detail is None, detail)


def run_suite(suite, max_n=None):
    """Run one suite (or ``"all"``) and return a ``Report``."""
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; expected one of {SUITES}")
    names = [s for s in SUITE_CHECKS if suite in ("all", s)]
    results = []
    for s in names:
        bound = DEFAULT_MAX_N[s] if max_n is None else max_n
        for name, fn in SUITE_CHECKS[s].items():
            results.append(run_check(name, fn, bound))
    results.sort(key=lambda r: r.name)
    return Report(suite, max_n, tuple(results))
