"""Exact polynomial arithmetic.

Two immutable polynomial types are provided:

* ``UniPoly`` -- dense univariate polynomial in one of the variables
  ``q``, ``t``, ``x``, ``z``.  Coefficients may live in any commutative ring
  whose elements support ``+``, ``*`` and comparison with ``0``: Python ``int``,
  ``fractions.Fraction``, ``ShiftPoly`` or another ``UniPoly`` in a different
  variable.
* ``ShiftPoly`` -- sparse multivariate polynomial of fixed arity in
  ``a1, ..., ar`` with exact scalar coefficients.

Integers are plain ``int`` and rationals are ``Fraction``; both are exact.
Binary operations between a polynomial and a non-polynomial treat the
latter as a constant.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .errors import UsageError

NEG_INF = float("-inf")
VARIABLES = ("q", "t", "x", "z")


def exact(value):
    """Normalize a rational to ``int`` when it is integral."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def power(base, exponent):
    """``base ** exponent`` for any ring element, with ``power(b, 0) == 1``."""
    if exponent < 0:
        raise UsageError("negative exponent")
    result = 1
    while exponent:
        if exponent & 1:
            result = result * base
        exponent >>= 1
        if exponent:
            base = base * base
    return result


def _is_poly(value):
    return isinstance(value, (UniPoly, ShiftPoly))


def _render_coeff(c):
    """Render a coefficient so it can be followed by ``*monomial``."""
    if _is_poly(c):
        if c.is_constant():
            return _render_coeff(c.constant_term())
        return f"({c})"
    return str(c)


def _join_terms(pieces):
    """Join ``(coefficient, monomial)`` pairs into ``c0 + c1*m1 - ...``."""
    out = []
    for c, mono in pieces:
        negative = not _is_poly(c) and c < 0
        mag = -c if negative else c
        if mono:
            if mag == 1:
                body = mono
            else:
                body = f"{_render_coeff(mag)}*{mono}"
        else:
            body = _render_coeff(mag)
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out) if out else "0"


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^([A-Za-z]+)(\d*)(?:\^(\d+))?$")


def _parse_terms(text):
    """Yield ``(coefficient, [(name, index, exponent), ...])`` for each term."""
    text = text.strip()
    if not text:
        raise UsageError("empty polynomial text")
    if text[0] not in "+-":
        text = "+" + text
    parts = _TERM_SPLIT.split(text)[1:]
    if len(parts) % 2:
        raise UsageError(f"cannot parse polynomial {text!r}")
    for sign, body in zip(parts[::2], parts[1::2]):
        coeff = Fraction(1)
        factors = []
        for factor in body.split("*"):
            factor = factor.strip()
            if not factor:
                raise UsageError(f"empty factor in {body!r}")
            if factor[0].isdigit():
                coeff *= Fraction(factor)
                continue
            m = _FACTOR.match(factor)
            if m is None:
                raise UsageError(f"bad factor {factor!r}")
            name, index, exp = m.groups()
            factors.append((name, int(index) if index else None, int(exp or 1)))
        yield exact(-coeff if sign == "-" else coeff), factors


class UniPoly:
    """Dense univariate polynomial, coefficients stored in ascending degree.

    The zero polynomial has no coefficients and degree ``NEG_INF``.
    """

    __slots__ = ("_coeffs", "_var")

    def __init__(self, coeffs=(), var="q"):
        if var not in VARIABLES:
            raise UsageError(f"unknown variable {var!r}; expected one of {VARIABLES}")
        cs = [exact(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)
        self._var = var

    @classmethod
    def constant(cls, c, var="q"):
        return cls((c,), var)

    @classmethod
    def variable(cls, var="q"):
        return cls((0, 1), var)

    @classmethod
    def monomial(cls, degree, var="q", coeff=1):
        return cls((0,) * degree + (coeff,), var)

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def var(self):
        return self._var

    @property
    def degree(self):
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    def is_zero(self):
        return not self._coeffs

    def is_constant(self):
        return len(self._coeffs) <= 1

    def constant_term(self):
        return self._coeffs[0] if self._coeffs else 0

    def coeff(self, k):
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else 0

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            if other._var != self._var:
                raise UsageError(f"variable mismatch: {self._var} vs {other._var}")
            return other
        if isinstance(other, (Rational, ShiftPoly)):
            return UniPoly((other,), self._var)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out, self._var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self._coeffs], self._var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return UniPoly((), self._var)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for k, cb in enumerate(b):
                out[i + k] = out[i + k] + ca * cb
        return UniPoly(out, self._var)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        return power(self, exponent)

    def scale(self, c):
        """Multiply every coefficient by the ring element ``c``."""
        return UniPoly([c * x for x in self._coeffs], self._var)

    def map_coeffs(self, fn):
        return UniPoly([fn(c) for c in self._coeffs], self._var)

    def __call__(self, value):
        return self.eval(value)

    def eval(self, value):
        """Horner evaluation at ``value``."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def truncate(self, max_degree):
        return UniPoly(self._coeffs[: max_degree + 1], self._var)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            if self.is_constant() and other.is_constant():
                return self.constant_term() == other.constant_term()
            return self._var == other._var and self._coeffs == other._coeffs
        if isinstance(other, (Rational, ShiftPoly)):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_term())
        return hash((self._var, self._coeffs))

    def __bool__(self):
        return bool(self._coeffs)

    def __str__(self):
        v = self._var
        pieces = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else (v if k == 1 else f"{v}^{k}")
            pieces.append((c, mono))
        return _join_terms(pieces)

    def __repr__(self):
        return f"UniPoly({list(self._coeffs)!r}, var={self._var!r})"

    @classmethod
    def parse(cls, text, var="q"):
        """Parse the canonical text form (scalar coefficients only)."""
        out = {}
        for coeff, factors in _parse_terms(text):
            degree = 0
            for name, index, exp in factors:
                if name != var or index is not None:
                    raise UsageError(f"unexpected symbol {name}{index or ''} in {var}-polynomial")
                degree += exp
            out[degree] = out.get(degree, 0) + coeff
        top = max(out, default=-1)
        return cls([out.get(k, 0) for k in range(top + 1)], var)


def _grlex_key(exps):
    # ascending total degree; within a degree a1 outranks a2 outranks ...
    return (sum(exps), tuple(-e for e in exps))


class ShiftPoly:
    """Sparse polynomial in ``a1..ar`` mapping exponent vectors to coefficients."""

    __slots__ = ("_arity", "_terms")

    def __init__(self, arity, terms=None):
        if arity < 1:
            raise UsageError("arity must be positive")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != arity or any(e < 0 for e in exps):
                raise UsageError(f"exponent vector {exps} does not fit arity {arity}")
            c = exact(c)
            if c != 0:
                clean[exps] = clean.get(exps, 0) + c
        self._arity = arity
        self._terms = {e: c for e, c in clean.items() if c != 0}

    @classmethod
    def constant(cls, arity, c):
        return cls(arity, {(0,) * arity: c})

    @classmethod
    def variable(cls, arity, index):
        """The indeterminate ``a_{index+1}`` (``index`` is 0-based)."""
        if not 0 <= index < arity:
            raise UsageError(f"variable index {index} out of range for arity {arity}")
        exps = [0] * arity
        exps[index] = 1
        return cls(arity, {tuple(exps): 1})

    @property
    def arity(self):
        return self._arity

    @property
    def terms(self):
        return dict(self._terms)

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda item: _grlex_key(item[0]))

    @property
    def degree(self):
        return max((sum(e) for e in self._terms), default=NEG_INF)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def constant_term(self):
        return self._terms.get((0,) * self._arity, 0)

    def coeff(self, exps):
        return self._terms.get(tuple(exps), 0)

    def _coerce(self, other):
        if isinstance(other, ShiftPoly):
            if other._arity != self._arity:
                raise UsageError(f"arity mismatch: {self._arity} vs {other._arity}")
            return other
        if isinstance(other, Rational):
            return ShiftPoly.constant(self._arity, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return ShiftPoly(self._arity, out)

    __radd__ = __add__

    def __neg__(self):
        return ShiftPoly(self._arity, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return ShiftPoly(self._arity, out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        return power(self, exponent)

    def substitute(self, values):
        """Evaluate with ``a_i := values[i-1]``.

        Values may be any ring elements, e.g. a ``UniPoly`` in ``z`` to keep
        one shift as an indeterminate.
        """
        values = list(values)
        if len(values) != self._arity:
            raise UsageError(f"need {self._arity} values for substitution, got {len(values)}")
        acc = 0
        for exps, c in self.sorted_terms():
            term = c
            for v, e in zip(values, exps):
                if e:
                    term = term * power(v, e)
            acc = acc + term
        return acc

    def __eq__(self, other):
        if isinstance(other, ShiftPoly):
            if self.is_constant() and other.is_constant():
                return self.constant_term() == other.constant_term()
            return self._arity == other._arity and self._terms == other._terms
        if isinstance(other, Rational):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_term())
        return hash((self._arity, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        pieces = []
        for exps, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(exps, start=1):
                if e == 1:
                    factors.append(f"a{i}")
                elif e > 1:
                    factors.append(f"a{i}^{e}")
            pieces.append((c, "*".join(factors)))
        return _join_terms(pieces)

    def __repr__(self):
        return f"ShiftPoly({self._arity}, {dict(self.sorted_terms())!r})"

    @classmethod
    def parse(cls, text, arity):
        out = {}
        for coeff, factors in _parse_terms(text):
            exps = [0] * arity
            for name, index, exp in factors:
                if name != "a" or index is None or not 1 <= index <= arity:
                    raise UsageError(f"unexpected symbol {name}{index or ''} for arity {arity}")
                exps[index - 1] += exp
            key = tuple(exps)
            out[key] = out.get(key, 0) + coeff
        return cls(arity, out)
