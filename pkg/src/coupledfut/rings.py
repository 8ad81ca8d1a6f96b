"""Truncated polynomial rings modelling the even cohomology of a compact
fixed-point component, and equivariant classes over them.

A ring is presented by nilpotent generators (each with a truncation order and
an even real degree), a distinguished top monomial, and the component's
complex dimension.  A monomial counts degree/2 per generator factor, so the
top monomial must reach the dimension exactly.  Integration extracts the
coefficient of the top monomial.  An
equivariant class splits as scalar part plus nilpotent part; units are exactly
the classes with nonzero scalar part, inverted through a finite geometric
series that terminates by nilpotency.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Mapping

from .errors import DegenerateDatumError, ParseError, UsageError, ValidationError
from .rationals import ParamPoly, RationalFunction

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class Generator:
    """Nilpotent ring generator: name, truncation order, even real degree."""

    name: str
    order: int
    degree: int


@dataclass(frozen=True)
class Ring:
    """Truncated polynomial ring with a distinguished top monomial."""

    param: str
    generators: tuple[Generator, ...]
    top: Exponents
    dimension: int

    def gen_index(self, name: str) -> int:
        for i, g in enumerate(self.generators):
            if g.name == name:
                return i
        raise UsageError("no generator named %r" % name)

    def monomial_degree(self, exps: Exponents) -> int:
        """Complex degree of a monomial: degree/2 per generator factor."""
        return sum(e * g.degree // 2 for e, g in zip(exps, self.generators))

    def monomial_survives(self, exps: Exponents) -> bool:
        """True when the monomial is not killed by truncation."""
        if any(e >= g.order for e, g in zip(exps, self.generators)):
            return False
        return self.monomial_degree(exps) <= self.dimension


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def ring_create(param: str,
                generators: list[Generator] | tuple[Generator, ...],
                top: Mapping[str, int],
                dimension: int) -> Ring:
    """Validate and build a ring; a point has no generators and dimension 0."""
    gens = tuple(generators)
    names = [g.name for g in gens]
    if len(set(names)) != len(names):
        raise ValidationError("duplicate generator names: %r" % (names,))
    for g in gens:
        if not _NAME_RE.match(g.name):
            raise ValidationError("invalid generator name %r" % g.name)
        if g.name == param:
            raise ValidationError(
                "generator %r collides with the parameter name" % g.name)
        if g.order < 1:
            raise ValidationError(
                "generator %r has truncation order %d; need at least 1"
                % (g.name, g.order))
        if g.degree < 2 or g.degree % 2:
            raise ValidationError(
                "generator %r has degree %d; need an even degree of at least 2"
                % (g.name, g.degree))
    if dimension < 0:
        raise ValidationError("negative dimension %d" % dimension)
    unknown = set(top) - set(names)
    if unknown:
        raise ValidationError("top monomial uses unknown generators %r"
                              % sorted(unknown))
    exps = tuple(int(top.get(g.name, 0)) for g in gens)
    if any(e < 0 for e in exps):
        raise ValidationError("negative exponent in top monomial")
    for e, g in zip(exps, gens):
        if e >= g.order:
            raise ValidationError(
                "top monomial exponent %d of %r reaches truncation order %d"
                % (e, g.name, g.order))
    ring = Ring(param, gens, exps, dimension)
    if ring.monomial_degree(exps) != dimension:
        raise ValidationError(
            "top monomial has degree %d but the dimension is %d"
            % (ring.monomial_degree(exps), dimension))
    return ring


def point_ring(param: str) -> Ring:
    """The ring of an isolated fixed point."""
    return Ring(param, (), (), 0)


@dataclass(frozen=True)
class NilpotentClass:
    """Sum of monomials with rational-function coefficients; no constant term."""

    ring: Ring
    terms: tuple[tuple[Exponents, RationalFunction], ...]

    @staticmethod
    def create(ring: Ring,
               mapping: Mapping[Exponents, RationalFunction]) -> "NilpotentClass":
        kept = {}
        for exps, coeff in mapping.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(ring.generators):
                raise UsageError("exponent tuple %r has wrong length" % (exps,))
            if any(e < 0 for e in exps):
                raise UsageError("negative exponent in %r" % (exps,))
            if all(e == 0 for e in exps):
                raise UsageError("constant term belongs in the scalar part")
            if coeff.is_zero() or not ring.monomial_survives(exps):
                continue
            kept[exps] = kept.get(exps, RationalFunction.const(ring.param, 0)) + coeff
        items = tuple(sorted((e, c) for e, c in kept.items() if not c.is_zero()))
        return NilpotentClass(ring, items)

    @staticmethod
    def zero(ring: Ring) -> "NilpotentClass":
        return NilpotentClass(ring, ())

    def is_zero(self) -> bool:
        return not self.terms

    def as_dict(self) -> dict[Exponents, RationalFunction]:
        return dict(self.terms)

    def coeff(self, exps: Exponents) -> RationalFunction:
        for e, c in self.terms:
            if e == exps:
                return c
        return RationalFunction.const(self.ring.param, 0)

    def __add__(self, other: "NilpotentClass") -> "NilpotentClass":
        _same_ring(self.ring, other.ring)
        merged = self.as_dict()
        for e, c in other.terms:
            merged[e] = merged.get(e, RationalFunction.const(self.ring.param, 0)) + c
        return NilpotentClass.create(self.ring, merged)

    def __neg__(self) -> "NilpotentClass":
        return NilpotentClass(self.ring, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "NilpotentClass") -> "NilpotentClass":
        return self + (-other)

    def __mul__(self, other: "NilpotentClass") -> "NilpotentClass":
        _same_ring(self.ring, other.ring)
        out: dict[Exponents, RationalFunction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                exps = tuple(x + y for x, y in zip(e1, e2))
                if not self.ring.monomial_survives(exps):
                    continue
                prod = c1 * c2
                out[exps] = out.get(exps, RationalFunction.const(self.ring.param, 0)) + prod
        return NilpotentClass.create(self.ring, out)

    def scale(self, q: RationalFunction) -> "NilpotentClass":
        if q.is_zero():
            return NilpotentClass.zero(self.ring)
        return NilpotentClass.create(
            self.ring, {e: c * q for e, c in self.terms})

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in sorted(
                self.terms, key=lambda t: (self.ring.monomial_degree(t[0]), t[0])):
            mono = monomial_text(self.ring, exps)
            cv = coeff.constant_value()
            if cv is not None:
                sgn = "-" if cv < 0 else ("+" if parts else "")
                mag = abs(cv)
                body = mono if mag == 1 else "%s%s" % (
                    RationalFunction.const(self.ring.param, mag).text(), mono)
                parts.append(sgn + body)
            else:
                body = "(%s)%s" % (coeff.text(), mono)
                parts.append(("+" if parts else "") + body)
        return "".join(parts)


def _same_ring(a: Ring, b: Ring) -> None:
    if a != b:
        raise UsageError("classes live in different rings")


def monomial_text(ring: Ring, exps: Exponents) -> str:
    """Render an exponent tuple as 'a*b^2' (or '1' for the empty monomial)."""
    parts = []
    for e, g in zip(exps, ring.generators):
        if e == 1:
            parts.append(g.name)
        elif e > 1:
            parts.append("%s^%d" % (g.name, e))
    return "*".join(parts) if parts else "1"


def parse_monomial(ring: Ring, key: str) -> Exponents:
    """Parse a monomial key like 'a', 'b^2', 'a*b^2' into an exponent tuple."""
    exps = [0] * len(ring.generators)
    key = key.strip()
    if key in ("1", ""):
        raise ParseError("constant monomial %r is not a nilpotent term" % key)
    for piece in key.split("*"):
        piece = piece.strip()
        if "^" in piece:
            name, _, power = piece.partition("^")
            name, power = name.strip(), power.strip()
            if not power.isdigit():
                raise ParseError("bad exponent in monomial %r" % key)
            e = int(power)
        else:
            name, e = piece, 1
        try:
            idx = ring.gen_index(name)
        except UsageError:
            raise ParseError("unknown generator %r in monomial %r" % (name, key))
        exps[idx] += e
    return tuple(exps)


def class_mul(x: NilpotentClass, y: NilpotentClass) -> NilpotentClass:
    """Product of two nilpotent classes with truncation."""
    return x * y


def class_add(x: NilpotentClass, y: NilpotentClass) -> NilpotentClass:
    return x + y


@dataclass(frozen=True)
class EquivariantClass:
    """Scalar part plus nilpotent part over one ring."""

    scalar: RationalFunction
    nilpotent: NilpotentClass

    @property
    def ring(self) -> Ring:
        return self.nilpotent.ring

    @staticmethod
    def create(ring: Ring, scalar: RationalFunction,
               nilpotent: NilpotentClass | None = None) -> "EquivariantClass":
        return EquivariantClass(
            scalar, nilpotent if nilpotent is not None else NilpotentClass.zero(ring))

    @staticmethod
    def one(ring: Ring) -> "EquivariantClass":
        return EquivariantClass(RationalFunction.const(ring.param, 1),
                                NilpotentClass.zero(ring))

    def __add__(self, other: "EquivariantClass") -> "EquivariantClass":
        _same_ring(self.ring, other.ring)
        return EquivariantClass(self.scalar + other.scalar,
                                self.nilpotent + other.nilpotent)

    def __neg__(self) -> "EquivariantClass":
        return EquivariantClass(-self.scalar, -self.nilpotent)

    def __sub__(self, other: "EquivariantClass") -> "EquivariantClass":
        return self + (-other)

    def __mul__(self, other: "EquivariantClass") -> "EquivariantClass":
        _same_ring(self.ring, other.ring)
        nil = (self.nilpotent.scale(other.scalar)
               + other.nilpotent.scale(self.scalar)
               + self.nilpotent * other.nilpotent)
        return EquivariantClass(self.scalar * other.scalar, nil)

    def text(self) -> str:
        s = self.scalar.text()
        if self.nilpotent.is_zero():
            return s
        n = self.nilpotent.text()
        if self.scalar.is_zero():
            return n
        return "%s%s%s" % (s, "" if n.startswith("-") else "+", n)


def equiv_mul(x: EquivariantClass, y: EquivariantClass) -> EquivariantClass:
    return x * y


def equiv_pow(x: EquivariantClass, k: int) -> EquivariantClass:
    """k-th power via the binomial expansion; nilpotent powers terminate."""
    if k < 0:
        raise UsageError("negative power %d; invert the unit first" % k)
    ring = x.ring
    if k == 0:
        return EquivariantClass.one(ring)
    # nilpotent part to the j-th power vanishes once j exceeds the dimension
    max_j = min(k, ring.dimension)
    nil_pows = [NilpotentClass.zero(ring)]
    cur = x.nilpotent
    for j in range(1, max_j + 1):
        nil_pows.append(cur)
        if j < max_j:
            cur = cur * x.nilpotent
    scalar_pows = [RationalFunction.const(ring.param, 1)]
    for _ in range(k):
        scalar_pows.append(scalar_pows[-1] * x.scalar)
    out_scalar = scalar_pows[k]
    out_nil = NilpotentClass.zero(ring)
    for j in range(1, max_j + 1):
        coeff = RationalFunction.const(ring.param, math.comb(k, j)) * scalar_pows[k - j]
        out_nil = out_nil + nil_pows[j].scale(coeff)
    return EquivariantClass(out_scalar, out_nil)


def invert_unit(x: EquivariantClass) -> EquivariantClass:
    """Inverse of a class with nonzero scalar part.

    Writes x = s(1 + n/s) and expands the geometric series, which terminates
    because n is nilpotent of index at most the dimension plus one.
    """
    ring = x.ring
    if x.scalar.is_zero():
        raise DegenerateDatumError(
            "equivariant Euler class with zero scalar part is not invertible")
    inv_s = RationalFunction.const(ring.param, 1) / x.scalar
    # sum_{j>=1} (-1)^j n^j / s^(j+1), stopping at the dimension
    out_nil = NilpotentClass.zero(ring)
    power = x.nilpotent
    sj = inv_s * inv_s
    sign = -1
    for j in range(1, ring.dimension + 1):
        if power.is_zero():
            break
        out_nil = out_nil + power.scale(sj.scale(sign))
        power = power * x.nilpotent
        sj = sj * inv_s
        sign = -sign
    return EquivariantClass(inv_s, out_nil)


def integrate(x: EquivariantClass | NilpotentClass, ring: Ring | None = None) -> RationalFunction:
    """Coefficient of the top monomial; for a point, the scalar part."""
    if isinstance(x, EquivariantClass):
        ring = x.ring
        if not ring.generators:
            return x.scalar
        return x.nilpotent.coeff(ring.top)
    if ring is None:
        ring = x.ring
    if not ring.generators:
        return RationalFunction.const(ring.param, 0)
    return x.coeff(ring.top)
