"""Truncated homogeneous Laurent series in one variable.

A :class:`LaurentSeries` of declared degree ``D`` in a variable of degree -1
has its coefficient at exponent ``n`` homogeneous of ring degree ``D + n``.
Only finitely many negative exponents occur, and every series records the
order ``N`` up to which its coefficients are known; binary operations compute
the largest order at which the result is still guaranteed correct.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .errors import (
    CharacteristicError,
    DegreeMismatchError,
    GradingError,
    NotAUnitError,
    PrecisionError,
    RingMismatchError,
    ValuationError,
)
from .gradedring import (
    UNIT_MONOMIAL,
    GradedPolynomial,
    RingDescriptor,
    mul_terms_into,
    reduce_terms,
)

# Every constructed series checks the grading law; this tallies those checks.
grading_stats = {"checks": 0, "violations": 0}


def reset_grading_stats() -> None:
    grading_stats["checks"] = 0
    grading_stats["violations"] = 0


class LaurentSeries:
    """Immutable truncated Laurent series ``sum a_n var^n + O(var^(order+1))``."""

    __slots__ = ("ring", "variable", "degree", "min_exponent", "order", "coeffs")

    def __init__(
        self,
        ring: RingDescriptor,
        variable: str,
        degree: int,
        coeffs: Mapping[int, GradedPolynomial],
        order: int,
        min_exponent: int | None = None,
    ):
        clean: dict[int, GradedPolynomial] = {}
        for n, p in coeffs.items():
            if n > order or not p.terms:
                continue
            grading_stats["checks"] += 1
            if p.ring != ring:
                grading_stats["violations"] += 1
                raise RingMismatchError(f"coefficient at {variable}^{n} is over a different ring")
            if p.degree != degree + n:
                grading_stats["violations"] += 1
                raise GradingError(
                    f"coefficient at {variable}^{n} has degree {p.degree}, "
                    f"grading law requires {degree + n}"
                )
            clean[n] = p
        if min_exponent is None:
            min_exponent = min(clean) if clean else min(0, order + 1)
        if clean and min(clean) < min_exponent:
            raise ValuationError(f"coefficient below declared min exponent {min_exponent}")
        if min_exponent > order + 1:
            raise ValuationError(f"min exponent {min_exponent} exceeds order {order} + 1")
        self.ring = ring
        self.variable = variable
        self.degree = degree
        self.min_exponent = min_exponent
        self.order = order
        self.coeffs = dict(sorted(clean.items()))

    # ------------------------------------------------------------ builders
    @classmethod
    def zero(cls, ring, variable, degree=0, order=0):
        return cls(ring, variable, degree, {}, order)

    @classmethod
    def one(cls, ring, variable, order=0):
        return cls(ring, variable, 0, {0: ring.one()}, order)

    @classmethod
    def monomial(cls, ring, variable, exponent, order, coeff: GradedPolynomial | None = None):
        """``coeff * variable^exponent`` known to ``order``."""
        if coeff is None:
            coeff = ring.one()
        return cls(ring, variable, coeff.degree - exponent, {exponent: coeff}, order,
                   min_exponent=min(exponent, order + 1))

    @classmethod
    def from_coefficients(cls, ring, variable, degree, coeffs, order, min_exponent=None):
        return cls(ring, variable, degree, coeffs, order, min_exponent)

    # ---------------------------------------------------------- accessors
    @property
    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient, or ``order + 1`` if none."""
        return next(iter(self.coeffs), self.order + 1)

    def coefficient(self, n: int) -> GradedPolynomial:
        if n > self.order:
            raise PrecisionError(f"coefficient at {self.variable}^{n} beyond order {self.order}")
        p = self.coeffs.get(n)
        return p if p is not None else self.ring.zero(self.degree + n)

    __getitem__ = coefficient

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_power_series(self) -> bool:
        return self.valuation >= 0

    def is_principal(self) -> bool:
        return all(n < 0 for n in self.coeffs)

    def truncate(self, order: int) -> "LaurentSeries":
        order = min(order, self.order)
        return LaurentSeries(self.ring, self.variable, self.degree,
                             {n: p for n, p in self.coeffs.items() if n <= order}, order,
                             min(self.min_exponent, order + 1))

    def rename(self, variable: str) -> "LaurentSeries":
        return LaurentSeries(self.ring, variable, self.degree, self.coeffs, self.order, self.min_exponent)

    def with_degree(self, degree: int) -> "LaurentSeries":
        """Re-declare the degree of a zero series."""
        if self.coeffs and degree != self.degree:
            raise DegreeMismatchError("only the zero series can change declared degree")
        return LaurentSeries(self.ring, self.variable, degree, {}, self.order, self.min_exponent)

    def agrees_with(self, other: "LaurentSeries", order: int | None = None) -> bool:
        """Coefficientwise equality through ``order`` (default: common order)."""
        if order is None:
            order = min(self.order, other.order)
        if order > self.order or order > other.order:
            return False
        return self.truncate(order) == other.truncate(order)

    # ---------------------------------------------------------- protocol
    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if (self.ring != other.ring or self.variable != other.variable
                or self.order != other.order or self.coeffs.keys() != other.coeffs.keys()):
            return False
        if self.coeffs and self.degree != other.degree:
            return False
        return all(p == other.coeffs[n] for n, p in self.coeffs.items())

    def __hash__(self):
        return hash((self.variable, self.order, tuple(self.coeffs.items())))

    def __add__(self, other):
        return ser_add(self, other)

    def __sub__(self, other):
        return ser_add(self, -other)

    def __neg__(self):
        if self.ring.characteristic == 2:
            return self
        return LaurentSeries(self.ring, self.variable, self.degree,
                             {n: -p for n, p in self.coeffs.items()}, self.order, self.min_exponent)

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            return ser_mul(self, other)
        if isinstance(other, GradedPolynomial):
            return scale(self, other)
        if isinstance(other, (int, Fraction)):
            return scale(self, self.ring.constant(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (GradedPolynomial, int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, n: int):
        return ser_pow(self, n)

    def __repr__(self):
        return f"LaurentSeries({self.to_text(show_order=True)!r}, degree={self.degree})"

    def __str__(self):
        return self.to_text(show_order=True)

    def to_text(self, show_order: bool = False) -> str:
        """Render, e.g. ``x2*w + (x2^2+x4)*w^3``; exponents ascending."""
        parts: list[str] = []
        for n, p in self.coeffs.items():
            var = "" if n == 0 else (self.variable if n == 1 else f"{self.variable}^{n}")
            if len(p.terms) == 1:
                body = p.to_text()
                if not var:
                    piece = body
                elif body == "1":
                    piece = var
                elif body == "-1":
                    piece = "-" + var
                else:
                    piece = f"{body}*{var}"
            else:
                body = f"({p.to_text(compact=True)})"
                piece = f"{body}*{var}" if var else body
            parts.append(piece)
        if show_order:
            parts.append(f"O({self.variable}^{self.order + 1})")
        if not parts:
            return "0"
        out = parts[0]
        for piece in parts[1:]:
            out += " - " + piece[1:] if piece.startswith("-") else " + " + piece
        return out


# ------------------------------------------------------------ operations

def _check_compatible(a: LaurentSeries, b: LaurentSeries) -> None:
    if a.ring != b.ring:
        raise RingMismatchError("series are over different rings")
    if a.variable != b.variable:
        raise RingMismatchError(f"series in different variables {a.variable!r}, {b.variable!r}")


def ser_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    _check_compatible(a, b)
    if a.coeffs and b.coeffs and a.degree != b.degree:
        raise DegreeMismatchError(f"cannot add series of degree {a.degree} and {b.degree}")
    degree = a.degree if a.coeffs or not b.coeffs else b.degree
    order = min(a.order, b.order)
    out: dict[int, GradedPolynomial] = {}
    for n in set(a.coeffs) | set(b.coeffs):
        if n > order:
            continue
        pa, pb = a.coeffs.get(n), b.coeffs.get(n)
        out[n] = pa + pb if pa is not None and pb is not None else (pa or pb)
    return LaurentSeries(a.ring, a.variable, degree, out, order,
                         min(a.min_exponent, b.min_exponent, order + 1))


def scale(a: LaurentSeries, c: GradedPolynomial) -> LaurentSeries:
    """Multiply every coefficient by the ring element ``c``."""
    if c.ring != a.ring:
        raise RingMismatchError("scalar is over a different ring")
    if not c.terms:
        return LaurentSeries.zero(a.ring, a.variable, a.degree + c.degree, a.order)
    return LaurentSeries(a.ring, a.variable, a.degree + c.degree,
                         {n: p * c for n, p in a.coeffs.items()}, a.order, a.min_exponent)


def shift(a: LaurentSeries, k: int) -> LaurentSeries:
    """Multiply by ``var^k`` exactly (degree drops by ``k``)."""
    return LaurentSeries(a.ring, a.variable, a.degree - k,
                         {n + k: p for n, p in a.coeffs.items()}, a.order + k, a.min_exponent + k)


def ser_mul(a: LaurentSeries, b: LaurentSeries, order: int | None = None) -> LaurentSeries:
    """Cauchy product, reliable through ``min(N_a + v_b, N_b + v_a)``.

    ``v`` is the valuation; ``order`` optionally caps the computation.
    """
    _check_compatible(a, b)
    va, vb = a.valuation, b.valuation
    top = min(a.order + vb, b.order + va)
    if order is not None:
        top = min(top, order)
    degree = a.degree + b.degree
    char = a.ring.characteristic
    a_items = [(n, p.terms) for n, p in a.coeffs.items()]
    b_terms = {n: p.terms for n, p in b.coeffs.items()}
    out: dict[int, GradedPolynomial] = {}
    for m in range(va + vb, top + 1):
        acc: dict = {}
        for i, ta in a_items:
            if i + vb > m:
                break
            tb = b_terms.get(m - i)
            if tb is not None:
                mul_terms_into(acc, ta, tb)
        if acc:
            out[m] = GradedPolynomial(a.ring, reduce_terms(acc, char), degree + m)
    min_exp = min(a.min_exponent + b.min_exponent, top + 1)
    return LaurentSeries(a.ring, a.variable, degree, out, top, min_exp)


def _unit_inverse(p: GradedPolynomial):
    if not p.is_unit() or len(p.terms) != 1:
        raise NotAUnitError(f"leading coefficient {p} is not a unit")
    c = p.terms[UNIT_MONOMIAL]
    return c if p.ring.characteristic == 2 else 1 / c


def ser_invert(a: LaurentSeries) -> LaurentSeries:
    """Multiplicative inverse; the leading coefficient must be a nonzero constant."""
    if not a.coeffs:
        raise NotAUnitError("cannot invert a series with no known nonzero coefficient")
    v = a.valuation
    inv0 = _unit_inverse(a.coeffs[v])
    char = a.ring.characteristic
    rel = a.order - v  # relative precision of the unit part
    u = [a.coeffs[v + k].terms if (v + k) in a.coeffs else None for k in range(rel + 1)]
    b: list[dict] = [{UNIT_MONOMIAL: inv0}]
    for k in range(1, rel + 1):
        acc: dict = {}
        for i in range(1, k + 1):
            if u[i] is not None and b[k - i]:
                mul_terms_into(acc, u[i], b[k - i])
        b.append(reduce_terms({m: -inv0 * c for m, c in acc.items()}, char))
    coeffs = {-v + k: GradedPolynomial(a.ring, t, k) for k, t in enumerate(b) if t}
    return LaurentSeries(a.ring, a.variable, -a.degree, coeffs, rel - v, -v)


def ser_pow(a: LaurentSeries, n: int, order: int | None = None) -> LaurentSeries:
    """``a**n`` for any integer ``n``; ``order`` caps the final result."""
    if n < 0:
        return ser_pow(ser_invert(a), -n, order)
    if n == 0:
        top = a.order - a.valuation if order is None else order
        return LaurentSeries(a.ring, a.variable, 0, {0: a.ring.one()}, top)
    va = a.valuation
    result = a
    for k in range(2, n + 1):
        # later factors each lower the order by va; leave room for them
        cap = None if order is None else order - (n - k) * va
        result = ser_mul(result, a, cap)
    return result if order is None else result.truncate(order)


def ser_derivative(a: LaurentSeries) -> LaurentSeries:
    """Termwise ``n a_n var^(n-1)``; the integer ``n`` acts mod 2 in characteristic 2."""
    coeffs = {}
    for n, p in a.coeffs.items():
        if n % 2 == 0 and a.ring.characteristic == 2:
            continue
        if n:
            coeffs[n - 1] = p.scale(n)
    return LaurentSeries(a.ring, a.variable, a.degree + 1, coeffs, a.order - 1, a.min_exponent - 1)


def ser_residue(a: LaurentSeries) -> GradedPolynomial:
    """Coefficient at exponent -1, homogeneous of degree ``D - 1``."""
    if a.order < -1:
        raise PrecisionError(f"residue unknown: series only known to order {a.order}")
    return a.coefficient(-1)


def _check_substitution(inner: LaurentSeries):
    if any(n < 1 for n in inner.coeffs) or 1 not in inner.coeffs:
        raise ValuationError("inner series must have valuation exactly 1")
    _unit_inverse(inner.coeffs[1])


def ser_compose(outer: LaurentSeries, inner: LaurentSeries, order: int | None = None) -> LaurentSeries:
    """Substitute ``inner`` (valuation 1, unit leading term) into ``outer``.

    The result is a series in ``inner.variable`` with ``outer``'s degree,
    reliable through ``min(N_outer, v_outer + N_inner - 1)``.  Negative powers
    of ``outer`` are expanded through the inverse of ``inner``.
    """
    if outer.ring != inner.ring:
        raise RingMismatchError("series are over different rings")
    _check_substitution(inner)
    vo = outer.valuation
    top = min(outer.order, vo + inner.order - 1)
    if order is not None:
        top = min(top, order)
    ring, var = outer.ring, inner.variable
    if not outer.coeffs or vo > top:
        return LaurentSeries(ring, var, outer.degree, {}, top, min(vo, top + 1))

    # outer = c^vo * P(c) with P a power series; evaluate P(inner) by Horner.
    depth = top - vo
    horner = None
    for k in range(depth, -1, -1):
        a_k = outer.coeffs.get(vo + k)
        deg_k = outer.degree + vo + k
        const = {0: a_k} if a_k is not None else {}
        term = LaurentSeries(ring, var, deg_k, const, depth)
        if horner is None:
            horner = term
        else:
            horner = ser_add(ser_mul(horner, inner, depth), term)
    lead = ser_pow(inner, vo, top) if vo >= 0 else ser_pow(ser_invert(inner), -vo, top)
    result = ser_mul(lead, horner, top)
    if result.order < top:
        raise PrecisionError("internal precision loss in composition")
    return result


def ser_reverse(f: LaurentSeries, variable: str | None = None) -> LaurentSeries:
    """Compositional inverse by degree-by-degree coefficient recursion.

    Solves ``f(g(u)) = u`` one coefficient at a time, keeping a table of the
    coefficients of the powers ``g^k``; works in every characteristic.
    """
    _check_substitution(f)
    if f.degree != -1:
        raise DegreeMismatchError("series to revert must have degree -1")
    ring = f.ring
    char = ring.characteristic
    N = f.order
    inv1 = _unit_inverse(f.coeffs[1])
    a = {n: p.terms for n, p in f.coeffs.items()}
    b: dict[int, dict] = {1: {UNIT_MONOMIAL: inv1}}
    # powers[k][n] = [u^n] g^k
    powers: dict[int, dict[int, dict]] = {1: {1: b[1]}}
    for n in range(2, N + 1):
        powers[n] = {}
        for k in range(n, 1, -1):
            acc: dict = {}
            prev = powers[k - 1]
            for i in range(1, n - k + 2):
                t = prev.get(n - i)
                if t and b.get(i):
                    mul_terms_into(acc, b[i], t)
            powers[k][n] = reduce_terms(acc, char)
        s: dict = {}
        for k in range(2, n + 1):
            if k in a and powers[k][n]:
                mul_terms_into(s, a[k], powers[k][n])
        s = reduce_terms(s, char)
        b[n] = reduce_terms({m: -inv1 * c for m, c in s.items()}, char)
        powers[1][n] = b[n]
    coeffs = {n: GradedPolynomial(ring, t, n - 1) for n, t in b.items() if t}
    return LaurentSeries(ring, variable or f.variable, -1, coeffs, N, 1)


def lagrange_reverse(f: LaurentSeries, variable: str | None = None) -> LaurentSeries:
    """Compositional inverse from residues: ``n [u^n] g = res(f^-n)``.

    Characteristic 0 only (divides by ``n``); used as an independent check on
    :func:`ser_reverse`.
    """
    if f.ring.characteristic != 0:
        raise CharacteristicError("Lagrange inversion divides by n; characteristic 0 only")
    _check_substitution(f)
    if f.degree != -1:
        raise DegreeMismatchError("series to revert must have degree -1")
    N = f.order
    f_inv = ser_invert(f)
    coeffs = {}
    power = f_inv
    for n in range(1, N + 1):
        if n > 1:
            power = ser_mul(power, f_inv)
        r = ser_residue(power)
        if r.terms:
            coeffs[n] = r.scale(Fraction(1, n))
    return LaurentSeries(f.ring, variable or f.variable, -1, coeffs, N, 1)


def holomorphic_part(a: LaurentSeries) -> LaurentSeries:
    """Nonnegative-exponent truncation (a power series)."""
    start = min(max(a.min_exponent, 0), a.order + 1)
    return LaurentSeries(a.ring, a.variable, a.degree,
                         {n: p for n, p in a.coeffs.items() if n >= 0}, a.order, start)


def principal_part(a: LaurentSeries) -> LaurentSeries:
    """Negative-exponent part; finite support, same recorded order."""
    return LaurentSeries(a.ring, a.variable, a.degree,
                         {n: p for n, p in a.coeffs.items() if n < 0}, a.order,
                         min(a.min_exponent, a.order + 1))


def split(a: LaurentSeries) -> tuple[LaurentSeries, LaurentSeries]:
    return holomorphic_part(a), principal_part(a)
