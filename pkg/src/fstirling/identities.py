"""Generating functions, inverse matrices, basis change and a closed form for H^f.

Polynomials in t and x here may have coefficients in the z-polynomial ring
(shift vector ``0,z``), so ring constants are always lifted explicitly with
``_lift`` instead of relying on mixed-variable coercion.

Sign convention: the generalized falling factorial expands as

    <x>_n = sum_j (-1)^(n-j) E^f_{j,n} x^j.

Placing the sign as (-1)^j instead already fails for f = x, n = 3, where
x(x-1)(x-2) = x^3 - 3x^2 + 2x; ``falling_from_E`` keeps both placements
so the tests can show this.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import family as fam
from .algebra import UniPoly, exact, power
from .errors import InvariantError, ModeError, UsageError


@dataclass(frozen=True)
class Check:
    """Verdict of an exact identity check; ``detail`` names the first failure."""

    ok: bool
    detail: str | None = None

    def __bool__(self):
        return self.ok


def _lift(c, var):
    return UniPoly((c,), var)


def _linear(c, var):
    """c + var"""
    return UniPoly((c, 1), var)


def genfun_E(n, fv):
    """t (t + f(1)) ... (t + f(n-1)); its coefficients are the E^f_{j,n}."""
    if n < 1:
        raise UsageError("genfun_E needs n >= 1")
    out = UniPoly.variable("t")
    for i in range(1, n):
        out = out * _linear(fv.f(i), "t")
    return out


def _geometric(c, order):
    """1 + c t + c^2 t^2 + ... up to t^order."""
    coeffs = [1]
    for _ in range(order):
        coeffs.append(coeffs[-1] * c)
    return UniPoly(coeffs, "t")


def genfun_H(j, fv, N):
    """prod_{i<=j} t / (1 - f(i) t) expanded up to t^N."""
    if N < j:
        raise UsageError(f"series order N={N} is below j={j}")
    t = UniPoly.variable("t")
    out = _lift(1, "t")
    for i in range(1, j + 1):
        out = (out * t * _geometric(fv.f(i), N)).truncate(N)
    return out


def _tables(N, fv):
    return fam.h_table(N, fv), fam.e_table(N, fv)


def matrix_inverse_check(N, fv):
    """(H_{j,n}) and ((-1)^(j+n) E_{j,n}) multiply to the identity in both orders."""
    if N < 0:
        raise UsageError("N must be nonnegative")
    H, E = _tables(N, fv)

    def h(j, n):
        return H.entry(j, n)

    def e(j, n):
        value = E.entry(j, n)
        return -value if (j + n) % 2 else value

    for left, right, name in ((h, e, "H*E"), (e, h, "E*H")):
        for row in range(N + 1):
            for col in range(N + 1):
                acc = 0
                for mid in range(row, col + 1):
                    acc = acc + left(row, mid) * right(mid, col)
                if acc != (1 if row == col else 0):
                    return Check(False, f"{name} at ({row},{col}) is {acc}")
    return Check(True)


def falling_basis(j, fv):
    """<x>_j = x (x - f(1)) ... (x - f(j-1)), with <x>_0 = 1."""
    if j < 0:
        raise UsageError("j must be nonnegative")
    if j == 0:
        return _lift(1, "x")
    out = UniPoly.variable("x")
    for i in range(1, j):
        out = out * _linear(-fv.f(i), "x")
    return out


def falling_from_E(n, fv, sign="n-j"):
    """sum_j s_j E_{j,n} x^j with s_j = (-1)^(n-j) (``"n-j"``) or (-1)^j (``"j"``)."""
    coeffs = []
    for j in range(n + 1):
        value = fam.E_f(j, n, fv)
        flip = (n - j) % 2 if sign == "n-j" else j % 2
        coeffs.append(-value if flip else value)
    return UniPoly(coeffs, "x")


def powers_from_H(n, fv):
    """sum_j H_{j,n} <x>_j"""
    out = UniPoly((), "x")
    for j in range(n + 1):
        out = out + falling_basis(j, fv).scale(fam.H_f(j, n, fv))
    return out


def basis_change_check(n, fv):
    """x^n = sum_j H_{j,n} <x>_j and <x>_n = sum_j (-1)^(n-j) E_{j,n} x^j."""
    x_n = UniPoly.monomial(n, "x")
    got = powers_from_H(n, fv)
    if got != x_n:
        return Check(False, f"x^{n} expands to {got}")
    want = falling_basis(n, fv)
    got = falling_from_E(n, fv)
    if got != want:
        return Check(False, f"<x>_{n} is {want} but the E-row gives {got}")
    return Check(True)


def newton_explicit_H(j, n, fv):
    """H_{j,n} = sum_{r<=j} f(r)^(n-1) / prod_{k != r} (f(r) - f(k)), in exact rationals."""
    if n < 1:
        raise UsageError("the closed form needs n >= 1")
    if fv.symbolic:
        raise ModeError("the closed form is evaluated for rational shifts only")
    values = [Fraction(v) for v in fv.values(j)]
    if len(set(values)) != len(values):
        raise InvariantError(f"repeated values of f on 1..{j}")
    total = Fraction(0)
    for r, fr in enumerate(values):
        den = Fraction(1)
        for k, fk in enumerate(values):
            if k != r:
                den *= fr - fk
        total += power(fr, n - 1) / den
    if all(v.denominator == 1 for v in values) and total.denominator != 1:
        raise InvariantError(f"closed form for ({j},{n}) did not clear its denominator: {total}")
    return exact(total)
