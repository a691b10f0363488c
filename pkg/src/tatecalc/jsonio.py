"""JSON forms for rings, polynomials, series, moment sequences and group laws.

Polynomial JSON is a list of ``{"coeff": "num/den", "monomial": {name: exp}}``
records (``"0"``/``"1"`` in characteristic 2).  Series JSON::

    {"ring": preset-or-descriptor, "variable": "w", "degree": 1,
     "min_exponent": -1, "order": 6,
     "coefficients": [{"exponent": -1, "poly": [...]}]}

Exponents are strictly increasing and zero coefficients are omitted.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import SchemaError, TatecalcError
from .fgl import BivariateTruncation
from .gradedring import PRESETS, GradedPolynomial, RingDescriptor, preset
from .series import LaurentSeries
from .tate import MomentSequence


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise SchemaError(message)


def _int(obj: dict, key: str) -> int:
    _require(key in obj, f"missing field {key!r}")
    value = obj[key]
    _require(isinstance(value, int) and not isinstance(value, bool), f"field {key!r} must be an integer")
    return value


# ------------------------------------------------------------------ rings

def ring_to_json(ring: RingDescriptor) -> Any:
    if ring.name in PRESETS and ring == preset(ring.name):
        return ring.name
    return {
        "characteristic": ring.characteristic,
        "generators": [{"name": g, "degree": d} for g, d in ring.generators],
        "projective_classes": [poly_to_json(ring.designated_class(k))
                               for k in range(ring.max_class_index + 1)],
    }


def ring_from_json(obj: Any) -> RingDescriptor:
    if isinstance(obj, str):
        try:
            return preset(obj)
        except TatecalcError as exc:
            raise SchemaError(str(exc)) from None
    _require(isinstance(obj, dict), "ring must be a preset name or a descriptor object")
    char = _int(obj, "characteristic")
    _require(char in (0, 2), "characteristic must be 0 or 2")
    gens = obj.get("generators")
    _require(isinstance(gens, list), "generators must be a list")
    table = []
    for g in gens:
        _require(isinstance(g, dict) and isinstance(g.get("name"), str), "generator needs a string name")
        table.append((g["name"], _int(g, "degree")))
    classes = obj.get("projective_classes")
    _require(isinstance(classes, list) and classes, "projective_classes must be a non-empty list")
    specs = []
    for entry in classes:
        specs.append([(_parse_coeff(t), _parse_monomial(t)) for t in _terms(entry)])
    try:
        return RingDescriptor(char, table, specs)
    except (ValueError, TatecalcError) as exc:
        raise SchemaError(f"invalid ring descriptor: {exc}") from None


def load_ring_file(path: str | Path) -> RingDescriptor:
    return ring_from_json(_load(path))


# ------------------------------------------------------------ polynomials

def _coeff_text(c) -> str:
    return str(c)


def _terms(entry: Any) -> list:
    _require(isinstance(entry, list), "polynomial JSON must be a list of terms")
    for t in entry:
        _require(isinstance(t, dict), "each term must be an object")
    return entry


def _parse_coeff(term: dict):
    raw = term.get("coeff")
    _require(isinstance(raw, str), "term coeff must be a string like '3/4'")
    try:
        return Fraction(raw.strip())
    except (ValueError, ZeroDivisionError):
        raise SchemaError(f"bad coefficient {raw!r}") from None


def _parse_monomial(term: dict) -> dict:
    mono = term.get("monomial", {})
    _require(isinstance(mono, dict), "term monomial must be an object")
    for name, e in mono.items():
        _require(isinstance(e, int) and not isinstance(e, bool) and e > 0,
                 f"exponent of {name!r} must be a positive integer")
    return mono


def poly_to_json(p: GradedPolynomial) -> list:
    ring = p.ring
    out = []
    for m in sorted(p.terms, key=p._sort_key, reverse=True):
        out.append({"coeff": _coeff_text(p.terms[m]), "monomial": ring.monomial_names(m)})
    return out


def poly_from_json(ring: RingDescriptor, entry: Any, degree: int) -> GradedPolynomial:
    acc: dict = {}
    for t in _terms(entry):
        try:
            m = ring.monomial(_parse_monomial(t))
            c = ring.scalar(_parse_coeff(t))
        except SchemaError:
            raise
        except (ValueError, TatecalcError) as exc:
            raise SchemaError(str(exc)) from None
        acc[m] = acc.get(m, 0) + c
    try:
        return GradedPolynomial(ring, acc, degree)
    except (ValueError, TatecalcError) as exc:
        raise SchemaError(str(exc)) from None


# ----------------------------------------------------------------- series

def series_to_json(s: LaurentSeries, include_ring: bool = True) -> dict:
    out: dict[str, Any] = {}
    if include_ring:
        out["ring"] = ring_to_json(s.ring)
    out.update({
        "variable": s.variable,
        "degree": s.degree,
        "min_exponent": s.min_exponent,
        "order": s.order,
        "coefficients": [{"exponent": n, "poly": poly_to_json(p)} for n, p in s.coeffs.items()],
    })
    return out


def series_from_json(obj: Any, ring: RingDescriptor | None = None) -> LaurentSeries:
    _require(isinstance(obj, dict), "series JSON must be an object")
    if "ring" in obj:
        parsed = ring_from_json(obj["ring"])
        _require(ring is None or parsed == ring, "series ring differs from the requested ring")
        ring = parsed
    _require(ring is not None, "series JSON needs a ring")
    variable = obj.get("variable")
    _require(isinstance(variable, str) and variable, "variable must be a non-empty string")
    degree = _int(obj, "degree")
    order = _int(obj, "order")
    coeff_list = obj.get("coefficients", [])
    _require(isinstance(coeff_list, list), "coefficients must be a list")
    coeffs = {}
    last = None
    for entry in coeff_list:
        _require(isinstance(entry, dict), "coefficient entries must be objects")
        n = _int(entry, "exponent")
        _require(last is None or n > last, "exponents must be strictly increasing")
        _require(n <= order, f"exponent {n} exceeds order {order}")
        last = n
        coeffs[n] = poly_from_json(ring, entry.get("poly", []), degree + n)
    min_exp = obj.get("min_exponent")
    if min_exp is not None:
        min_exp = _int(obj, "min_exponent")
    try:
        return LaurentSeries(ring, variable, degree, coeffs, order, min_exp)
    except (ValueError, TatecalcError) as exc:
        raise SchemaError(str(exc)) from None


# ---------------------------------------------------------------- moments

def moments_to_json(m: MomentSequence) -> dict:
    return {"ring": ring_to_json(m.ring), "degree": m.degree,
            "moments": [poly_to_json(p) for p in m.moments]}


def moments_from_json(obj: Any, ring: RingDescriptor | None = None) -> MomentSequence:
    _require(isinstance(obj, dict), "moment JSON must be an object")
    if "ring" in obj:
        parsed = ring_from_json(obj["ring"])
        _require(ring is None or parsed == ring, "moment ring differs from the requested ring")
        ring = parsed
    _require(ring is not None, "moment JSON needs a ring")
    degree = _int(obj, "degree")
    raw = obj.get("moments")
    _require(isinstance(raw, list) and raw, "moments must be a non-empty list")
    polys = tuple(poly_from_json(ring, entry, degree + k) for k, entry in enumerate(raw))
    return MomentSequence(ring, degree, polys)


# --------------------------------------------------------------- group law

def bivariate_to_json(F: BivariateTruncation) -> dict:
    """Nested form: a series in the second variable whose coefficients are series in the first."""
    _require(len(F.variables) == 2, "nested form needs exactly two variables")
    xname, yname = F.variables
    inner = []
    for b in range(F.order + 1):
        coeffs = {a: p for (a, bb), p in F.coeffs.items() if bb == b}
        if not coeffs:
            continue
        s = LaurentSeries(F.ring, xname, F.degree + b, coeffs, F.order - b, 0)
        inner.append({"exponent": b, "series": series_to_json(s, include_ring=False)})
    return {"ring": ring_to_json(F.ring), "variable": yname, "degree": F.degree,
            "min_exponent": 0, "order": F.order, "coefficients": inner}


def bivariate_from_json(obj: Any) -> BivariateTruncation:
    _require(isinstance(obj, dict), "bivariate JSON must be an object")
    ring = ring_from_json(obj.get("ring"))
    yname = obj.get("variable")
    degree = _int(obj, "degree")
    order = _int(obj, "order")
    coeffs = {}
    xname = "x"
    for entry in obj.get("coefficients", []):
        b = _int(entry, "exponent")
        s = series_from_json(entry.get("series"), ring)
        xname = s.variable
        for a, p in s.coeffs.items():
            coeffs[(a, b)] = p
    return BivariateTruncation(ring, (xname, yname), degree, coeffs, order)


# ------------------------------------------------------------------ files

def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2)


def _load(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from None


def load_series_file(path: str | Path, ring: RingDescriptor | None = None) -> LaurentSeries:
    return series_from_json(_load(path), ring)


def load_moments_file(path: str | Path, ring: RingDescriptor | None = None) -> MomentSequence:
    return moments_from_json(_load(path), ring)
