"""Graded polynomial rings over Q and GF(2).

A ring is described by a :class:`RingDescriptor`: its characteristic, a table
of named generators with positive degrees, and a finite table of designated
projective classes ``p_0, p_1, ...`` with ``deg p_k = k``.

Scalars are plain Python values: :class:`fractions.Fraction` in
characteristic 0 (always in lowest terms with positive denominator) and the
integers ``0``/``1`` in characteristic 2.  A monomial is a sorted tuple of
``(generator_index, exponent)`` pairs with positive exponents; the empty tuple
is the unit monomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    CharacteristicError,
    ClassTableError,
    DegreeMismatchError,
    HomogeneityError,
    RingMismatchError,
    TatecalcError,
)

Monomial = tuple  # tuple[tuple[int, int], ...]
UNIT_MONOMIAL: Monomial = ()

DEFAULT_MAX_INDEX = 32


# ---------------------------------------------------------------- kernels

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for i, e in b:
        merged[i] = merged.get(i, 0) + e
    return tuple(sorted(merged.items()))


def mul_terms_into(acc: dict, t1: Mapping, t2: Mapping) -> None:
    """Accumulate the product of two term maps into ``acc`` (no reduction)."""
    for m1, c1 in t1.items():
        for m2, c2 in t2.items():
            m = mono_mul(m1, m2)
            acc[m] = acc.get(m, 0) + c1 * c2


def add_terms_into(acc: dict, t: Mapping, factor=1) -> None:
    for m, c in t.items():
        acc[m] = acc.get(m, 0) + factor * c


def reduce_terms(terms: Mapping, characteristic: int) -> dict:
    """Drop zero coefficients, reducing mod 2 when needed."""
    if characteristic == 2:
        return {m: 1 for m, c in terms.items() if c % 2}
    return {m: c for m, c in terms.items() if c}


# ------------------------------------------------------------------ rings

class RingDescriptor:
    """Coefficient ring preset: characteristic, generators, projective classes.

    ``projective_classes`` is a sequence indexed by ``k``; each entry is an
    iterable of ``(coefficient, {generator_name: exponent})`` pairs describing
    ``p_k``.  An empty entry means ``p_k = 0``.
    """

    def __init__(
        self,
        characteristic: int,
        generators: Sequence[tuple[str, int]],
        projective_classes: Sequence[Iterable[tuple[object, Mapping[str, int]]]],
        name: str | None = None,
    ):
        if characteristic not in (0, 2):
            raise ValueError(f"characteristic must be 0 or 2, got {characteristic}")
        names = [g for g, _ in generators]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        for g, d in generators:
            if not isinstance(d, int) or d < 1:
                raise ValueError(f"generator {g!r} must have degree >= 1, got {d!r}")
        self.characteristic = characteristic
        self.generators: tuple[tuple[str, int], ...] = tuple((str(g), int(d)) for g, d in generators)
        self.name = name
        self._index = {g: i for i, (g, _) in enumerate(self.generators)}
        self._gen_degrees = tuple(d for _, d in self.generators)
        self._monomials_by_degree: dict[int, tuple[Monomial, ...]] = {}

        classes = []
        for k, entry in enumerate(projective_classes):
            terms = {}
            for coeff, powers in entry:
                m = self.monomial(powers)
                terms[m] = terms.get(m, 0) + self.scalar(coeff)
            classes.append(GradedPolynomial(self, terms, k))
        if not classes:
            raise ValueError("projective-class table must contain p_0")
        if classes[0] != self.one():
            raise ValueError("p_0 must equal 1")
        self._classes = tuple(classes)
        self._key = (
            characteristic,
            self.generators,
            tuple(tuple(sorted(p.terms.items())) for p in self._classes),
        )
        self._hash = hash(self._key)

    # identity
    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, RingDescriptor):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        label = self.name or "custom"
        return f"RingDescriptor({label!r}, char={self.characteristic}, gens={len(self.generators)})"

    # scalars
    def scalar(self, value) -> Fraction | int:
        """Normalize ``value`` into this ring's ground field."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.characteristic == 0:
            return Fraction(value)
        q = Fraction(value)
        if q.denominator % 2 == 0:
            raise CharacteristicError(f"{value!r} has no image in GF(2)")
        return q.numerator % 2

    # generators and monomials
    @property
    def max_class_index(self) -> int:
        return len(self._classes) - 1

    def generator_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise TatecalcError(f"unknown generator {name!r}") from None

    def generator_name(self, index: int) -> str:
        return self.generators[index][0]

    def monomial(self, powers: Mapping[str, int]) -> Monomial:
        pairs = []
        for g, e in powers.items():
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponent of {g!r} must be a nonnegative integer")
            if e:
                pairs.append((self.generator_index(g), e))
        return tuple(sorted(pairs))

    def monomial_names(self, m: Monomial) -> dict[str, int]:
        return {self.generators[i][0]: e for i, e in m}

    def monomial_degree(self, m: Monomial) -> int:
        degs = self._gen_degrees
        return sum(degs[i] * e for i, e in m)

    def monomials_of_degree(self, degree: int) -> tuple[Monomial, ...]:
        """All monomials of the given degree, in a fixed order."""
        if degree < 0:
            return ()
        cached = self._monomials_by_degree.get(degree)
        if cached is not None:
            return cached
        out: list[Monomial] = []

        def walk(start: int, remaining: int, prefix: list):
            if remaining == 0:
                out.append(tuple(prefix))
                return
            for i in range(start, len(self._gen_degrees)):
                d = self._gen_degrees[i]
                if d > remaining:
                    continue
                for e in range(1, remaining // d + 1):
                    prefix.append((i, e))
                    walk(i + 1, remaining - d * e, prefix)
                    prefix.pop()

        walk(0, degree, [])
        result = tuple(out)
        self._monomials_by_degree[degree] = result
        return result

    # distinguished elements
    def zero(self, degree: int = 0) -> "GradedPolynomial":
        return GradedPolynomial(self, {}, degree)

    def one(self) -> "GradedPolynomial":
        return GradedPolynomial(self, {UNIT_MONOMIAL: 1}, 0)

    def constant(self, value) -> "GradedPolynomial":
        return GradedPolynomial(self, {UNIT_MONOMIAL: self.scalar(value)}, 0)

    def gen(self, name: str) -> "GradedPolynomial":
        i = self.generator_index(name)
        return GradedPolynomial(self, {((i, 1),): 1}, self._gen_degrees[i])

    def designated_class(self, k: int) -> "GradedPolynomial":
        return designated_class(self, k)


def designated_class(ring: RingDescriptor, k: int) -> "GradedPolynomial":
    """Return ``p_k``, homogeneous of degree ``k``."""
    if k < 0 or k > ring.max_class_index:
        raise ClassTableError(
            f"projective class p_{k} outside configured table 0..{ring.max_class_index}"
        )
    return ring._classes[k]


# ------------------------------------------------------------ polynomials

class GradedPolynomial:
    """Homogeneous polynomial with a declared degree; immutable."""

    __slots__ = ("ring", "degree", "terms", "_hash")

    def __init__(self, ring: RingDescriptor, terms: Mapping[Monomial, object], degree: int | None = None):
        clean = reduce_terms(terms, ring.characteristic)
        if ring.characteristic == 0:
            clean = {m: c if isinstance(c, Fraction) else Fraction(c) for m, c in clean.items()}
        if degree is None:
            if not clean:
                raise HomogeneityError("the zero polynomial needs an explicit degree")
            degree = ring.monomial_degree(next(iter(clean)))
        for m in clean:
            if ring.monomial_degree(m) != degree:
                raise HomogeneityError(
                    f"monomial {ring.monomial_names(m)} has degree "
                    f"{ring.monomial_degree(m)}, declared {degree}"
                )
        self.ring = ring
        self.degree = degree
        self.terms: dict[Monomial, Fraction | int] = clean
        self._hash = None

    # predicates
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return self.degree == 0

    def constant_value(self):
        """Scalar value of a degree-0 polynomial."""
        if self.degree != 0:
            raise DegreeMismatchError("not a constant")
        return self.terms.get(UNIT_MONOMIAL, self.ring.scalar(0))

    def is_unit(self) -> bool:
        return self.degree == 0 and bool(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, object]]:
        return iter(self.terms.items())

    # comparison
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            if self.ring.characteristic == 2:
                other = Fraction(other) % 2
            if not other:
                return not self.terms
            return self.degree == 0 and self.terms == {UNIT_MONOMIAL: other}
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        if self.ring != other.ring:
            return False
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            if not self.terms:
                self._hash = hash(())
            else:
                self._hash = hash((self.degree, frozenset(self.terms.items())))
        return self._hash

    # arithmetic
    def _check_ring(self, other: "GradedPolynomial"):
        if self.ring != other.ring:
            raise RingMismatchError("polynomials belong to different rings")

    def __add__(self, other):
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return poly_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return poly_add(self, -other)

    def __neg__(self):
        if self.ring.characteristic == 2:
            return self
        return GradedPolynomial(self.ring, {m: -c for m, c in self.terms.items()}, self.degree)

    def __mul__(self, other):
        if isinstance(other, GradedPolynomial):
            return poly_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self.ring.one()
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c) -> "GradedPolynomial":
        c = self.ring.scalar(c)
        return GradedPolynomial(self.ring, {m: v * c for m, v in self.terms.items()}, self.degree)

    # display
    def to_text(self, compact: bool = False) -> str:
        """Text form, e.g. ``x2^2 + x4``; ``compact`` drops spaces around signs."""
        if not self.terms:
            return "0"
        pieces = []
        for m in sorted(self.terms, key=self._sort_key, reverse=True):
            pieces.append(_term_text(self.ring, m, self.terms[m]))
        plus, minus = ("+", "-") if compact else (" + ", " - ")
        out = pieces[0]
        for p in pieces[1:]:
            out += minus + p[1:] if p.startswith("-") else plus + p
        return out

    def _sort_key(self, m: Monomial):
        dense = [0] * len(self.ring.generators)
        for i, e in m:
            dense[i] = e
        return tuple(dense)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"GradedPolynomial({self.to_text()!r}, degree={self.degree})"


def _term_text(ring: RingDescriptor, m: Monomial, c) -> str:
    mono = "*".join(
        ring.generator_name(i) + (f"^{e}" if e > 1 else "") for i, e in m
    )
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def poly_add(a: GradedPolynomial, b: GradedPolynomial) -> GradedPolynomial:
    a._check_ring(b)
    if not b.terms:
        return a if a.terms or a.degree == b.degree else b
    if not a.terms:
        return b
    if a.degree != b.degree:
        raise DegreeMismatchError(f"cannot add degree {a.degree} and degree {b.degree}")
    acc = dict(a.terms)
    add_terms_into(acc, b.terms)
    return GradedPolynomial(a.ring, acc, a.degree)


def poly_mul(a: GradedPolynomial, b: GradedPolynomial) -> GradedPolynomial:
    a._check_ring(b)
    acc: dict = {}
    mul_terms_into(acc, a.terms, b.terms)
    return GradedPolynomial(a.ring, acc, a.degree + b.degree)


def poly_sum(polys: Iterable[GradedPolynomial], ring: RingDescriptor, degree: int) -> GradedPolynomial:
    acc: dict = {}
    for p in polys:
        if p.terms and p.degree != degree:
            raise DegreeMismatchError(f"summand of degree {p.degree}, expected {degree}")
        add_terms_into(acc, p.terms)
    return GradedPolynomial(ring, acc, degree)


# ---------------------------------------------------------------- presets

def _is_mersenne(n: int) -> bool:
    return (n + 1) & n == 0


@lru_cache(maxsize=None)
def mu_rational(max_index: int = DEFAULT_MAX_INDEX) -> RingDescriptor:
    """MU_* tensored with Q: free on m_k in degree k, with p_k = m_k = [CP_k]."""
    gens = [(f"m{k}", k) for k in range(1, max_index + 1)]
    classes = [[(1, {})]] + [[(1, {f"m{k}": 1})] for k in range(1, max_index + 1)]
    return RingDescriptor(0, gens, classes, name="mu-rational")


@lru_cache(maxsize=None)
def n_mod2(max_index: int = DEFAULT_MAX_INDEX) -> RingDescriptor:
    """Unoriented cobordism N_*: GF(2)[x_n : n != 2^s - 1], p_k = [RP_k].

    Even ``k >= 2`` uses ``x_k = [RP_k]``; odd projective spaces bound, so
    ``p_k = 0`` for odd ``k``.
    """
    gens = [(f"x{n}", n) for n in range(2, max_index + 1) if not _is_mersenne(n)]
    classes: list[list] = [[(1, {})]]
    for k in range(1, max_index + 1):
        classes.append([(1, {f"x{k}": 1})] if k % 2 == 0 else [])
    return RingDescriptor(2, gens, classes, name="n-mod2")


PRESETS = {"mu-rational": mu_rational, "n-mod2": n_mod2}


def preset(name: str) -> RingDescriptor:
    try:
        factory = PRESETS[name]
    except KeyError:
        raise TatecalcError(f"unknown ring preset {name!r}; choose from {sorted(PRESETS)}") from None
    return factory()
