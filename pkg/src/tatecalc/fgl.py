"""Logarithm, exponential and group law of the rational complex-cobordism FGL.

Over ``MU_* (x) Q`` the logarithm has derivative ``sum_k p_k u^k`` with
``p_k = [CP_k]``; the exponential is its compositional inverse and the group
law is ``F(x, y) = exp(log x + log y)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import CharacteristicError, GradingError, PrecisionError, RingMismatchError
from .gradedring import GradedPolynomial, RingDescriptor, mul_terms_into, reduce_terms
from .series import LaurentSeries, ser_compose, ser_reverse
from . import series as _series


def class_series(ring: RingDescriptor, order: int, variable: str) -> LaurentSeries:
    """``sum_{k <= order} p_k var^k``, degree 0.

    This is log' in the complex ring and the series pi in the unoriented one.
    """
    coeffs = {k: ring.designated_class(k) for k in range(order + 1)}
    return LaurentSeries(ring, variable, 0, coeffs, order, 0)


def integrated_class_series(ring: RingDescriptor, order: int, variable: str) -> LaurentSeries:
    """``sum_k p_k u^(k+1) / (k+1)`` through ``u^(order+1)``."""
    if ring.characteristic != 0:
        raise CharacteristicError("the logarithm divides by k+1; characteristic 0 only")
    coeffs = {k + 1: ring.designated_class(k).scale(Fraction(1, k + 1)) for k in range(order + 1)}
    return LaurentSeries(ring, variable, -1, coeffs, order + 1, 1)


class FGLContext:
    """Cached ``log'``, ``log`` (in ``u``) and ``exp`` (in ``z``) to order ``N``.

    ``exp`` may be supplied (e.g. from a cache); it is accepted only if it
    inverts ``log`` and is recomputed otherwise.
    """

    def __init__(self, ring: RingDescriptor, order: int, exp: LaurentSeries | None = None):
        if ring.characteristic != 0:
            raise CharacteristicError("the MU formal group law needs the characteristic-0 ring")
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.ring = ring
        self.order = order
        self.log_prime = class_series(ring, order, "u")
        self.log = integrated_class_series(ring, order, "u")
        self.exp_from_cache = False
        if exp is not None:
            exp = exp.truncate(order + 1)
        if exp is not None and self._inverts_log(exp):
            self.exp = exp
            self.exp_from_cache = True
        else:
            self.exp = ser_reverse(self.log, "z")
            if not self._inverts_log(self.exp):
                raise ArithmeticError("reversion failed to invert the logarithm")

    def _inverts_log(self, exp: LaurentSeries) -> bool:
        if exp.ring != self.ring or exp.variable != "z" or exp.order < self.order + 1:
            return False
        try:
            composite = ser_compose(self.log, exp)
        except (ValueError, ArithmeticError):
            return False
        z = LaurentSeries.monomial(self.ring, "z", 1, composite.order)
        return composite.order >= self.order and composite == z

    def __repr__(self):
        return f"FGLContext(order={self.order})"


@lru_cache(maxsize=32)
def fgl_context(ring: RingDescriptor, order: int) -> FGLContext:
    return FGLContext(ring, order)


def log_prime(ctx: FGLContext) -> LaurentSeries:
    return ctx.log_prime


def mu_log(ctx: FGLContext) -> LaurentSeries:
    return ctx.log


def mu_exp(ctx: FGLContext) -> LaurentSeries:
    return ctx.exp


def to_additive_coordinate(ctx: FGLContext, series: LaurentSeries, order: int | None = None) -> LaurentSeries:
    """Rewrite a series in ``c`` in the additive coordinate ``z``, ``c = exp(z)``."""
    if series.ring != ctx.ring:
        raise RingMismatchError("series is not over the context's ring")
    return ser_compose(series, ctx.exp, order)


# --------------------------------------------------------- group law

class BivariateTruncation:
    """Multivariate series truncated at total degree ``order``.

    Coefficients are keyed by exponent tuples; the coefficient of
    ``x^a y^b ...`` is homogeneous of degree ``degree + a + b + ...``.
    """

    __slots__ = ("ring", "variables", "degree", "order", "coeffs")

    def __init__(self, ring: RingDescriptor, variables: Sequence[str], degree: int,
                 coeffs: Mapping[tuple, GradedPolynomial], order: int):
        self.ring = ring
        self.variables = tuple(variables)
        self.degree = degree
        self.order = order
        clean = {}
        for e, p in coeffs.items():
            if len(e) != len(self.variables):
                raise ValueError(f"exponent {e} does not match variables {self.variables}")
            if sum(e) > order or not p.terms:
                continue
            _series.grading_stats["checks"] += 1
            if p.degree != degree + sum(e):
                _series.grading_stats["violations"] += 1
                raise GradingError(f"coefficient at {e} has degree {p.degree}, expected {degree + sum(e)}")
            clean[e] = p
        self.coeffs = dict(sorted(clean.items()))

    @classmethod
    def variable(cls, ring, variables, index, order):
        e = tuple(1 if i == index else 0 for i in range(len(variables)))
        return cls(ring, variables, -1, {e: ring.one()}, order)

    def coefficient(self, *exponents) -> GradedPolynomial:
        if sum(exponents) > self.order:
            raise PrecisionError("beyond total order")
        return self.coeffs.get(tuple(exponents), self.ring.zero(self.degree + sum(exponents)))

    def __eq__(self, other):
        if not isinstance(other, BivariateTruncation):
            return NotImplemented
        return (self.ring == other.ring and self.variables == other.variables
                and self.order == other.order and self.coeffs == other.coeffs
                and (self.degree == other.degree or not self.coeffs))

    def __add__(self, other: "BivariateTruncation") -> "BivariateTruncation":
        self._check(other)
        order = min(self.order, other.order)
        acc = dict(self.coeffs)
        for e, p in other.coeffs.items():
            acc[e] = acc[e] + p if e in acc else p
        degree = self.degree if self.coeffs else other.degree
        return BivariateTruncation(self.ring, self.variables, degree, acc, order)

    def __mul__(self, other: "BivariateTruncation") -> "BivariateTruncation":
        self._check(other)
        order = min(self.order + other.valuation, other.order + self.valuation)
        char = self.ring.characteristic
        acc: dict[tuple, dict] = {}
        for e1, p1 in self.coeffs.items():
            for e2, p2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if sum(e) <= order:
                    mul_terms_into(acc.setdefault(e, {}), p1.terms, p2.terms)
        degree = self.degree + other.degree
        coeffs = {e: GradedPolynomial(self.ring, reduce_terms(t, char), degree + sum(e))
                  for e, t in acc.items()}
        return BivariateTruncation(self.ring, self.variables, degree, coeffs, order)

    def scale(self, c: GradedPolynomial) -> "BivariateTruncation":
        return BivariateTruncation(self.ring, self.variables, self.degree + c.degree,
                                   {e: p * c for e, p in self.coeffs.items()}, self.order)

    @property
    def valuation(self) -> int:
        return min((sum(e) for e in self.coeffs), default=self.order + 1)

    def _check(self, other):
        if self.ring != other.ring or self.variables != other.variables:
            raise RingMismatchError("incompatible multivariate series")

    def one(self, order=None) -> "BivariateTruncation":
        zero_e = (0,) * len(self.variables)
        return BivariateTruncation(self.ring, self.variables, 0, {zero_e: self.ring.one()},
                                   self.order if order is None else order)

    def slice_series(self, var_index: int, fixed: dict[int, int]) -> LaurentSeries:
        """Univariate slice: fix the other exponents, read off a series in one variable."""
        coeffs = {}
        fixed_total = sum(fixed.values())
        for e, p in self.coeffs.items():
            if all(e[i] == v for i, v in fixed.items()) and all(
                    e[i] == 0 for i in range(len(e)) if i != var_index and i not in fixed):
                coeffs[e[var_index]] = p
        return LaurentSeries(self.ring, self.variables[var_index], self.degree + fixed_total,
                             coeffs, self.order - fixed_total, 0)

    def to_text(self) -> str:
        """Render by total degree, e.g. ``x + y - m1*x*y``."""
        parts = []
        for e in sorted(self.coeffs, key=lambda e: (sum(e), tuple(-a for a in e))):
            p = self.coeffs[e]
            var = "*".join(v + (f"^{a}" if a > 1 else "") for v, a in zip(self.variables, e) if a)
            body = p.to_text() if len(p.terms) == 1 else f"({p.to_text(compact=True)})"
            if not var:
                parts.append(body)
            elif body in ("1", "-1"):
                parts.append(body[:-1] + var)
            else:
                parts.append(f"{body}*{var}")
        if not parts:
            return "0"
        out = parts[0]
        for piece in parts[1:]:
            out += " - " + piece[1:] if piece.startswith("-") else " + " + piece
        return out

    def __repr__(self):
        return f"BivariateTruncation(vars={self.variables}, order={self.order}, terms={len(self.coeffs)})"


def substitute(f: LaurentSeries | BivariateTruncation,
               args: Sequence[BivariateTruncation]) -> BivariateTruncation:
    """Evaluate ``f`` (univariate or multivariate) at series ``args`` without constant terms."""
    if isinstance(f, LaurentSeries):
        f_coeffs = {(n,): p for n, p in f.coeffs.items()}
        f_order, f_degree, nargs = f.order, f.degree, 1
        if any(n < 0 for n in f.coeffs):
            raise ValueError("cannot substitute into a series with negative exponents")
    else:
        f_coeffs, f_order, f_degree, nargs = f.coeffs, f.order, f.degree, len(f.variables)
    if len(args) != nargs:
        raise ValueError(f"expected {nargs} arguments")
    base = args[0]
    for a in args:
        base._check(a)
        if a.valuation < 1:
            raise ValueError("substituted series must have no constant term")
    order = min([a.order for a in args] + [f_order])
    powers: list[list[BivariateTruncation]] = []
    for a in args:
        row = [base.one(order)]
        for _ in range(order):
            row.append(row[-1] * a)
        powers.append(row)
    acc = BivariateTruncation(base.ring, base.variables, f_degree, {}, order)
    for e, p in f_coeffs.items():
        if sum(e) > order:
            continue
        term = powers[0][e[0]]
        for i in range(1, nargs):
            term = term * powers[i][e[i]]
        acc = acc + term.scale(p)
    return BivariateTruncation(acc.ring, acc.variables, f_degree, acc.coeffs, order)


def group_law(ctx: FGLContext, order: int | None = None, variables=("x", "y")) -> BivariateTruncation:
    """``F(x, y) = exp(log x + log y)`` to total order ``order`` (default ``ctx.order``)."""
    N = ctx.order if order is None else order
    if N > ctx.order:
        raise PrecisionError(f"context only supports total order {ctx.order}")
    ring = ctx.ring
    x = BivariateTruncation.variable(ring, variables, 0, N)
    y = BivariateTruncation.variable(ring, variables, 1, N)
    log = ctx.log.truncate(N)
    s = substitute(log, [x]) + substitute(log, [y])
    return substitute(ctx.exp.truncate(N), [s])


def group_law_checks(ctx: FGLContext, order: int) -> dict[str, bool]:
    """Unit, commutativity and associativity of the group law to total ``order``."""
    ring = ctx.ring
    F = group_law(ctx, order)
    unit_x = all(e == (1, 0) for e in F.coeffs if e[1] == 0) and F.coefficient(1, 0) == 1
    unit_y = all(e == (0, 1) for e in F.coeffs if e[0] == 0) and F.coefficient(0, 1) == 1
    symmetric = all(F.coeffs.get((b, a)) == p for (a, b), p in F.coeffs.items())
    names = ("x", "y", "t")
    x, y, t = (BivariateTruncation.variable(ring, names, i, order) for i in range(3))
    left = substitute(F, [x, substitute(F, [y, t])])
    right = substitute(F, [substitute(F, [x, y]), t])
    return {"unit": unit_x and unit_y, "commutative": symmetric, "associative": left == right}
