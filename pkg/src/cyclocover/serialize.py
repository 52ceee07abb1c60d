"""JSON wire formats.

Laurent polynomial: {"val": i, "coeffs": ["c0", "c1", ...]} with exact
coefficients as decimal strings ("a/b" for rationals).  Matrix:
{"rows": r, "cols": c, "entries": [[<laurent>, ...], ...]}.  Integer
matrices are plain nested lists of decimal strings.
"""

import hashlib
import json
from fractions import Fraction

from .errors import PreconditionError
from .matrices import LaurentMatrix
from .modules import ModulePresentation
from .covers import TwistedChainComplex
from .rings import FpElt, LaurentPoly, Poly, ZZ


def scalar_str(x):
    if isinstance(x, FpElt):
        return str(x.v)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def parse_scalar(ring, raw):
    if isinstance(raw, bool):
        raise PreconditionError(f"bad coefficient {raw!r}")
    if isinstance(raw, int):
        return ring.coerce(raw)
    if isinstance(raw, str):
        try:
            return ring.coerce(Fraction(raw))
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise PreconditionError(f"bad coefficient {raw!r}: {exc}")
    raise PreconditionError(f"bad coefficient {raw!r}")


def laurent_to_json(f):
    if isinstance(f, Poly):
        f = LaurentPoly.from_poly(f)
    return {"val": f.val, "coeffs": [scalar_str(c) for c in f.body.coeffs]}


def parse_laurent(obj, ring=ZZ) -> LaurentPoly:
    if not isinstance(obj, dict) or set(obj) - {"val", "coeffs"}:
        raise PreconditionError(f"bad Laurent polynomial {obj!r}")
    val = obj.get("val", 0)
    if not isinstance(val, int) or isinstance(val, bool):
        raise PreconditionError(f"bad valuation {val!r}")
    coeffs = obj.get("coeffs", [])
    if not isinstance(coeffs, list):
        raise PreconditionError("coeffs must be a list")
    return LaurentPoly(ring, val, [parse_scalar(ring, c) for c in coeffs])


def matrix_to_json(m: LaurentMatrix):
    return {"rows": m.nrows, "cols": m.ncols,
            "entries": [[laurent_to_json(e) for e in row] for row in m.entries]}


def parse_matrix(obj, ring=ZZ) -> LaurentMatrix:
    if not isinstance(obj, dict):
        raise PreconditionError(f"bad matrix {obj!r}")
    try:
        rows = obj["rows"]
        cols = obj["cols"]
        entries = obj["entries"]
    except KeyError as exc:
        raise PreconditionError(f"matrix is missing field {exc}")
    if not isinstance(entries, list) or len(entries) != rows:
        raise PreconditionError("matrix entries do not match declared rows")
    grid = []
    for row in entries:
        if not isinstance(row, list) or len(row) != cols:
            raise PreconditionError("matrix entries do not match declared cols")
        grid.append([parse_laurent(e, ring) for e in row])
    return LaurentMatrix(ring, rows, cols, grid)


def int_matrix_to_json(m):
    return [[str(x) for x in row] for row in m]


def parse_int_matrix(obj):
    if not isinstance(obj, list) or any(not isinstance(r, list) for r in obj):
        raise PreconditionError(f"bad integer matrix {obj!r}")
    out = []
    for row in obj:
        orow = []
        for x in row:
            orow.append(parse_int(x))
        out.append(orow)
    return out


def parse_int(raw):
    if isinstance(raw, bool):
        raise PreconditionError(f"bad integer {raw!r}")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, str):
        try:
            return int(raw)
        except ValueError:
            raise PreconditionError(f"bad integer {raw!r}")
    raise PreconditionError(f"bad integer {raw!r}")


def parse_rational_matrix(obj):
    if not isinstance(obj, list) or any(not isinstance(r, list) for r in obj):
        raise PreconditionError(f"bad rational matrix {obj!r}")
    out = []
    for row in obj:
        orow = []
        for x in row:
            if isinstance(x, bool):
                raise PreconditionError(f"bad rational {x!r}")
            if isinstance(x, int):
                orow.append(Fraction(x))
            elif isinstance(x, str):
                try:
                    orow.append(Fraction(x))
                except (ValueError, ZeroDivisionError):
                    raise PreconditionError(f"bad rational {x!r}")
            else:
                raise PreconditionError(f"bad rational {x!r}")
        out.append(orow)
    return out


def presentation_to_json(m: ModulePresentation):
    return {"generators": m.generators, "relations": matrix_to_json(m.relations)}


def parse_presentation(obj) -> ModulePresentation:
    if not isinstance(obj, dict):
        raise PreconditionError(f"bad module presentation {obj!r}")
    try:
        g = obj["generators"]
        rel = obj["relations"]
    except KeyError as exc:
        raise PreconditionError(f"presentation is missing field {exc}")
    if not isinstance(g, int) or isinstance(g, bool) or g < 0:
        raise PreconditionError(f"bad generator count {g!r}")
    try:
        return ModulePresentation(g, parse_matrix(rel, ZZ))
    except (TypeError, ValueError) as exc:
        raise PreconditionError(str(exc))


def complex_to_json(x: TwistedChainComplex):
    return {"ranks": list(x.ranks),
            "boundaries": [matrix_to_json(b) for b in x.boundaries]}


def parse_complex(obj) -> TwistedChainComplex:
    if not isinstance(obj, dict):
        raise PreconditionError(f"bad chain complex {obj!r}")
    try:
        ranks = obj["ranks"]
        bnds = obj["boundaries"]
    except KeyError as exc:
        raise PreconditionError(f"chain complex is missing field {exc}")
    if (not isinstance(ranks, list)
            or any(not isinstance(r, int) or isinstance(r, bool) or r < 0
                   for r in ranks)):
        raise PreconditionError(f"bad rank list {ranks!r}")
    if not isinstance(bnds, list):
        raise PreconditionError("boundaries must be a list")
    try:
        return TwistedChainComplex(ranks, [parse_matrix(b, ZZ) for b in bnds])
    except (TypeError, ValueError) as exc:
        raise PreconditionError(str(exc))


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=True)


def input_digest(obj) -> str:
    return hashlib.sha256(canonical_dumps(obj).encode("ascii")).hexdigest()
