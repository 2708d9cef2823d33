"""H^f and E^f: complete/elementary symmetric functions evaluated at f(1), f(2), ...

Here f(x) = (x + a_1)...(x + a_r) is given by its shift vector.  The numbers
come in four flavours sharing one triangular recurrence:

* numeric (rational shifts, or the indeterminate ``z`` as a shift),
* q-analogues (integer shifts, every factor f(i) replaced by q-brackets),
* shift-symbolic (the a_i themselves are indeterminates, ``ShiftPoly``),
* the named classical triangles S, c, LS, Lc, JS, Jc.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import ShiftPoly, UniPoly, exact
from .errors import InvariantError, ModeError, UsageError
from .symfunc import complete, elementary

Z = UniPoly.variable("z")

KINDS = ("H", "E", "qH", "qE", "symbolicH", "symbolicE", "JS", "Jc", "LS", "Lc", "S", "c")
NAMED_KINDS = ("S", "c", "LS", "Lc", "JS", "Jc")


@dataclass(frozen=True)
class ShiftVector:
    """Shifts a_1 <= ... <= a_r defining f(x) = (x + a_1)...(x + a_r).

    Shifts are nonnegative rationals.  A shift may also be the indeterminate
    ``z`` (``UniPoly`` in z), which turns every value into a z-polynomial;
    such vectors keep the order they were given in.
    """

    shifts: tuple

    def __post_init__(self):
        shifts = []
        for a in self.shifts:
            if isinstance(a, UniPoly):
                if a != Z:
                    raise UsageError(f"only the bare indeterminate z may be used as a shift, got {a}")
                shifts.append(a)
                continue
            a = exact(Fraction(a))
            if a < 0:
                raise UsageError(f"shifts must be nonnegative, got {a}")
            shifts.append(a)
        if not shifts:
            raise UsageError("need at least one shift")
        if not any(isinstance(a, UniPoly) for a in shifts):
            shifts.sort()
        object.__setattr__(self, "shifts", tuple(shifts))

    @classmethod
    def parse(cls, text):
        """Parse ``"0,1"``, ``"1/2,2"`` or the Jacobi form ``"0,z"``."""
        tokens = [tok.strip() for tok in str(text).split(",")]
        if not tokens or any(not tok for tok in tokens):
            raise UsageError(f"malformed shift vector {text!r}")
        if "z" in tokens:
            if tokens != ["0", "z"]:
                raise UsageError("the symbolic shift z is only accepted as '0,z'")
            return cls((0, Z))
        try:
            return cls(tuple(Fraction(tok) for tok in tokens))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"malformed shift vector {text!r}: {exc}") from None

    @property
    def r(self):
        return len(self.shifts)

    @property
    def symbolic(self):
        return any(isinstance(a, UniPoly) for a in self.shifts)

    @property
    def integer_mode(self):
        return all(isinstance(a, int) for a in self.shifts)

    def integer_shifts(self):
        if not self.integer_mode:
            raise ModeError(f"shift vector {self} is not integral; q-analogues and enumerations need integer shifts")
        return self.shifts

    def f(self, i):
        out = 1
        for a in self.shifts:
            out = out * (a + i)
        return out

    def values(self, k):
        """[f(1), ..., f(k)]"""
        return [self.f(i) for i in range(1, k + 1)]

    def __str__(self):
        return ",".join(str(a) for a in self.shifts)


def eval_f(fv, i):
    if i < 1:
        raise UsageError(f"f is evaluated at positive integers, got {i}")
    return fv.f(i)


def H_f(j, n, fv):
    """h_{n-j}(f(1), ..., f(j)); zero when n < j."""
    if n < j:
        return 0
    return complete(n - j, fv.values(j))


def E_f(j, n, fv):
    """e_{n-j}(f(1), ..., f(n-1)); zero when n < j."""
    if n < j:
        return 0
    return elementary(n - j, fv.values(max(n - 1, 0)))


def q_bracket(m):
    """[m] = 1 + q + ... + q^(m-1), with [0] = 0."""
    if m < 0:
        raise UsageError(f"q-bracket of a negative integer: {m}")
    return UniPoly((1,) * m, "q")


def _q_weight(shifts, base):
    out = UniPoly.constant(1, "q")
    for a in shifts:
        out = out * q_bracket(base + a)
    return out


def shift_value(r, i):
    """f(i) = (i + a_1)...(i + a_r) with symbolic shifts."""
    out = ShiftPoly.constant(r, 1)
    for m in range(r):
        out = out * (ShiftPoly.variable(r, m) + i)
    return out


@dataclass(frozen=True)
class TriangleTable:
    """Entries T(j, n) for 0 <= j <= n <= max_n, stored row by row."""

    kind: str
    max_n: int
    rows: tuple

    def entry(self, j, n):
        if j < 0 or n < 0 or n > self.max_n:
            raise UsageError(f"({j}, {n}) outside table of size {self.max_n}")
        if j > n:
            return 0
        return self.rows[n][j]

    def row(self, n):
        return self.rows[n]

    def cells(self):
        """Yield ``(n, j, value)`` in row-major order."""
        for n, row in enumerate(self.rows):
            for j, value in enumerate(row):
                yield n, j, value

    def map(self, fn, kind=None):
        return TriangleTable(kind or self.kind, self.max_n, tuple(tuple(fn(v) for v in row) for row in self.rows))


def recurrence_table(kind, max_n, weight):
    """T(j,n) = T(j-1,n-1) + weight(j,n) T(j,n-1) with T(0,0)=1, T(0,n)=T(j,0)=0."""
    if max_n < 0:
        raise UsageError("max_n must be nonnegative")
    rows = [(1,)]
    for n in range(1, max_n + 1):
        prev = rows[-1]
        row = [0]
        for j in range(1, n + 1):
            value = prev[j - 1]
            if j <= n - 1:
                value = value + weight(j, n) * prev[j]
            row.append(value)
        rows.append(tuple(row))
    return TriangleTable(kind, max_n, tuple(rows))


def h_table(max_n, fv, kind="H"):
    return recurrence_table(kind, max_n, lambda j, n: fv.f(j))


def e_table(max_n, fv, kind="E"):
    return recurrence_table(kind, max_n, lambda j, n: fv.f(n - 1))


def q_table(which, max_n, fv):
    shifts = fv.integer_shifts()
    if which == "H":
        return recurrence_table("qH", max_n, lambda j, n: _q_weight(shifts, j))
    if which == "E":
        return recurrence_table("qE", max_n, lambda j, n: _q_weight(shifts, n - 1))
    raise UsageError(f"unknown q-table {which!r}")


def _as_qpoly(value):
    return value if isinstance(value, UniPoly) else UniPoly.constant(value, "q")


def q_H(j, n, fv):
    """q-analogue of H^f_{j,n} as a polynomial in q."""
    if n < j:
        fv.integer_shifts()
        return UniPoly((), "q")
    return _as_qpoly(q_table("H", n, fv).entry(j, n))


def q_E(j, n, fv):
    """q-analogue of E^f_{j,n} as a polynomial in q."""
    if n < j:
        fv.integer_shifts()
        return UniPoly((), "q")
    return _as_qpoly(q_table("E", n, fv).entry(j, n))


def symbolic_table(which, max_n, r):
    if which == "H":
        return recurrence_table("symbolicH", max_n, lambda j, n: shift_value(r, j))
    if which == "E":
        return recurrence_table("symbolicE", max_n, lambda j, n: shift_value(r, n - 1))
    raise UsageError(f"unknown symbolic table {which!r}")


def _as_shiftpoly(value, r):
    return value if isinstance(value, ShiftPoly) else ShiftPoly.constant(r, value)


def symbolic_H(j, n, r):
    """H^f_{j,n} as a polynomial in a_1..a_r."""
    if n < j:
        return ShiftPoly(r)
    return _as_shiftpoly(complete(n - j, [shift_value(r, i) for i in range(1, j + 1)]), r)


def symbolic_E(j, n, r):
    """E^f_{j,n} as a polynomial in a_1..a_r."""
    if n < j:
        return ShiftPoly(r)
    return _as_shiftpoly(elementary(n - j, [shift_value(r, i) for i in range(1, n)]), r)


def jacobi_recurrence_table(which, max_n):
    """JS / Jc directly from their own recurrences with weights j(j+z), (n-1)(n-1+z)."""
    if which == "JS":
        return recurrence_table("JS", max_n, lambda j, n: j * (Z + j))
    if which == "Jc":
        return recurrence_table("Jc", max_n, lambda j, n: (n - 1) * (Z + (n - 1)))
    raise UsageError(f"unknown Jacobi table {which!r}")


def _as_zpoly(value):
    return value if isinstance(value, UniPoly) else UniPoly.constant(value, "z")


def named_triangle(kind, max_n):
    """Classical triangles; JS/Jc entries are ``UniPoly`` in z.

    JS/Jc come from the r = 2 shift-symbolic table with a_1 := 0, a_2 := z and
    are checked cell by cell against their direct recurrences.
    """
    if kind == "S":
        return h_table(max_n, ShiftVector((0,)), "S")
    if kind == "c":
        return e_table(max_n, ShiftVector((0,)), "c")
    if kind in ("JS", "Jc"):
        table = symbolic_table("H" if kind == "JS" else "E", max_n, 2)
        table = table.map(lambda v: _as_zpoly(_as_shiftpoly(v, 2).substitute([0, Z])), kind)
        direct = jacobi_recurrence_table(kind, max_n)
        for n, j, value in table.cells():
            if value != direct.entry(j, n):
                raise InvariantError(f"{kind}({n},{j}): specialization {value} != recurrence {direct.entry(j, n)}")
        return table
    if kind in ("LS", "Lc"):
        return named_triangle("JS" if kind == "LS" else "Jc", max_n).map(lambda v: _as_zpoly(v).eval(1), kind)
    raise UsageError(f"unknown named triangle {kind!r}; expected one of {NAMED_KINDS}")


def build_triangle(kind, max_n, fv=None, r=None):
    """Dispatch for every table kind in ``KINDS``."""
    if kind in NAMED_KINDS:
        return named_triangle(kind, max_n)
    if kind in ("H", "E", "qH", "qE"):
        if fv is None:
            raise UsageError(f"table kind {kind} needs a shift vector")
        if kind == "H":
            return h_table(max_n, fv)
        if kind == "E":
            return e_table(max_n, fv)
        return q_table(kind[1], max_n, fv)
    if kind in ("symbolicH", "symbolicE"):
        if r is None or r < 1:
            raise UsageError(f"table kind {kind} needs a positive arity r")
        return symbolic_table(kind[-1], max_n, r)
    raise UsageError(f"unknown table kind {kind!r}; expected one of {KINDS}")
