"""JSON / CSV / text rendering of exact values and result documents.

Every number leaves the process as a decimal string (rationals as "p/q"),
so nothing is squeezed through a float or a 64-bit integer downstream.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .algebra import ShiftPoly, UniPoly


def value_json(value):
    if isinstance(value, bool):
        raise TypeError("booleans are not ring values")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, UniPoly):
        return {"var": value.var, "coeffs": [value_json(c) for c in value.coeffs]}
    if isinstance(value, ShiftPoly):
        return {
            "vars": [f"a{i}" for i in range(1, value.arity + 1)],
            "terms": [{"exponents": list(e), "coeff": value_json(c)} for e, c in value.sorted_terms()],
        }
    raise TypeError(f"cannot serialize {type(value).__name__}")


def value_text(value):
    return str(value)


def stat_json(stat):
    if isinstance(stat, tuple):
        return [str(s) for s in stat]
    return str(stat)


def stat_text(stat):
    if isinstance(stat, tuple):
        return "(" + ",".join(str(s) for s in stat) + ")"
    return str(stat)


def dump_json(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def dump_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()
