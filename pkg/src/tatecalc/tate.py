"""Tate-sequence operators: the boundary functional, pi, and Boardman's transform.

The boundary functional is the coefficient-linear map sending ``var^(-k-1)``
to ``p_k`` and every nonnegative power to zero.  Boardman's transform
rebuilds a power series from the moments ``p*d(var^(-k-1) L)``:

    B(L) = pi^-1 * sum_k var^k * p*d(var^(-k-1) L)

which coincides with ``pi^-1 * holomorphic_part(L * pi)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from .errors import CharacteristicError, DegreeMismatchError, PrecisionError, RingMismatchError
from .fgl import class_series, fgl_context, to_additive_coordinate
from .gradedring import GradedPolynomial, RingDescriptor, poly_sum
from .series import (
    LaurentSeries,
    holomorphic_part,
    principal_part,
    ser_invert,
    ser_mul,
    ser_residue,
    shift,
)


def default_variable(ring: RingDescriptor) -> str:
    return "w" if ring.characteristic == 2 else "c"


class TateModel:
    """Ambient Laurent ring ``R((var))`` with cached ``pi`` and ``pi^-1`` to order N."""

    def __init__(self, ring: RingDescriptor, order: int, variable: str | None = None,
                 pi_inverse: LaurentSeries | None = None):
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.ring = ring
        self.order = order
        self.variable = variable or default_variable(ring)
        self.pi = class_series(ring, order, self.variable)
        self.pi_inverse_from_cache = False
        if pi_inverse is not None:
            pi_inverse = pi_inverse.truncate(order)
        if pi_inverse is not None and self._inverts_pi(pi_inverse):
            self.pi_inverse = pi_inverse
            self.pi_inverse_from_cache = True
        else:
            self.pi_inverse = ser_invert(self.pi)
            if not self._inverts_pi(self.pi_inverse):
                raise ArithmeticError("pi * pi^-1 != 1")

    def _inverts_pi(self, candidate: LaurentSeries) -> bool:
        if (candidate.ring != self.ring or candidate.variable != self.variable
                or candidate.order < self.order or candidate.degree != 0):
            return False
        prod = ser_mul(self.pi, candidate, self.order)
        return prod == LaurentSeries.one(self.ring, self.variable, self.order)

    def series(self, coeffs, degree: int, order: int | None = None) -> LaurentSeries:
        """Convenience constructor for a series in the model's variable."""
        return LaurentSeries(self.ring, self.variable, degree, coeffs,
                             self.order if order is None else order)

    def monomial(self, exponent: int, coeff: GradedPolynomial | None = None,
                 order: int | None = None) -> LaurentSeries:
        return LaurentSeries.monomial(self.ring, self.variable, exponent,
                                      self.order if order is None else order, coeff)

    def _check(self, series: LaurentSeries):
        if series.ring != self.ring:
            raise RingMismatchError("series is not over the model's ring")
        if series.variable != self.variable:
            raise RingMismatchError(f"series variable {series.variable!r}, model uses {self.variable!r}")

    def __repr__(self):
        return f"TateModel({self.ring.name or 'custom'}, var={self.variable!r}, order={self.order})"


@dataclass(frozen=True)
class MomentSequence:
    """Boundary data ``m_0 .. m_N`` with ``deg m_k = degree + k``."""

    ring: RingDescriptor
    degree: int
    moments: tuple[GradedPolynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "moments", tuple(self.moments))
        for k, m in enumerate(self.moments):
            if m.ring != self.ring:
                raise RingMismatchError(f"moment {k} is over a different ring")
            if m.terms and m.degree != self.degree + k:
                raise DegreeMismatchError(
                    f"moment {k} has degree {m.degree}, expected {self.degree + k}")

    def __len__(self):
        return len(self.moments)

    def __eq__(self, other):
        if not isinstance(other, MomentSequence):
            return NotImplemented
        return (self.ring == other.ring and self.moments == other.moments
                and (self.degree == other.degree or not any(self.moments)))


@dataclass(frozen=True)
class Holomorphy:
    holomorphic: bool
    witness: int | None = None

    def __bool__(self):
        return self.holomorphic


def pi_series(model: TateModel) -> LaurentSeries:
    return model.pi


def p_star_del(model: TateModel, series: LaurentSeries) -> GradedPolynomial:
    """``sum_{n<0} a_n p_(-n-1)``, of degree ``D - 1``; zero on power series."""
    model._check(series)
    if series.order < -1:
        raise PrecisionError("principal part not fully known")
    ring = model.ring
    terms = (p * ring.designated_class(-n - 1) for n, p in series.coeffs.items() if n < 0)
    return poly_sum(terms, ring, series.degree - 1)


def residue_functional(model: TateModel, series: LaurentSeries) -> GradedPolynomial:
    """Residue at the origin after the substitution ``c = exp_MU(z)``."""
    model._check(series)
    if model.ring.characteristic != 0:
        raise CharacteristicError("the additive coordinate exists only in characteristic 0")
    if series.order < -1:
        raise PrecisionError("principal part not fully known")
    depth = max(-series.valuation, 0)
    ctx = fgl_context(model.ring, max(model.order, depth))
    additive = to_additive_coordinate(ctx, series, order=-1)
    return ser_residue(additive)


def moments_of(model: TateModel, series: LaurentSeries) -> MomentSequence:
    """``m_k = p*d(var^(-k-1) L)`` for ``k = 0 .. min(N_model, N_L)``."""
    model._check(series)
    top = min(model.order, series.order)
    moments = [p_star_del(model, shift(series, -k - 1)) for k in range(top + 1)]
    return MomentSequence(model.ring, series.degree, tuple(moments))


def reconstruct_from_moments(model: TateModel, moments: MomentSequence) -> LaurentSeries:
    """``pi^-1 * sum_k m_k var^k``."""
    if moments.ring != model.ring:
        raise RingMismatchError("moments are over a different ring")
    top = min(len(moments) - 1, model.order)
    gen = LaurentSeries(model.ring, model.variable, moments.degree,
                        {k: m for k, m in enumerate(moments.moments[:top + 1])}, top, 0)
    return ser_mul(model.pi_inverse, gen, top)


def boardman_transform(model: TateModel, series: LaurentSeries) -> LaurentSeries:
    """``pi^-1 * sum_{k <= N} var^k p*d(var^(-k-1) L)``, a power series of L's degree.

    Reliable through ``min(N_model, N_L)``; the moments draw on the ring's
    class table, which must reach ``N + depth of L's principal part``.
    """
    model._check(series)
    top = min(model.order, series.order)
    gen = {k: p_star_del(model, shift(series, -k - 1)) for k in range(top + 1)}
    gen_series = LaurentSeries(model.ring, model.variable, series.degree, gen, top, 0)
    return ser_mul(model.pi_inverse, gen_series, top)


def boardman_by_projection(model: TateModel, series: LaurentSeries) -> LaurentSeries:
    """``pi^-1 * holomorphic_part(L * pi)``, the split-based form of the transform."""
    model._check(series)
    top = min(model.order, series.order)
    depth = max(-series.valuation, 0)
    pi = class_series(model.ring, top + depth, model.variable)
    lifted = holomorphic_part(ser_mul(series, pi, top))
    return ser_mul(model.pi_inverse, lifted, top)


def is_holomorphic(model: TateModel, series: LaurentSeries) -> Holomorphy:
    model._check(series)
    tail = principal_part(series)
    if tail.coeffs:
        return Holomorphy(False, min(tail.coeffs))
    return Holomorphy(True)
