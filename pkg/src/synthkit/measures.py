"""Finitely supported measures on Z^d and the exponentials they pair with.

A measure is a map from lattice points to nonzero Gaussian-rational
coefficients; convolution makes them a commutative ring with unit delta(0).
An exponential is a character x -> c^x determined by a base vector c with
nonzero coordinates.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import DimensionMismatch, EmptyShiftList, ZeroCoordinate
from .scalars import ONE, GaussianRational, _coerce

Point = tuple  # tuple[int, ...]


def check_point(dim: int, x) -> Point:
    x = tuple(x) if not isinstance(x, tuple) else x
    if len(x) != dim:
        raise DimensionMismatch(f"point {x} has length {len(x)}, expected {dim}")
    for v in x:
        if not isinstance(v, int):
            raise DimensionMismatch(f"point {x} has non-integer coordinate {v!r}")
    return x


def add_points(x: Point, y: Point) -> Point:
    return tuple(a + b for a, b in zip(x, y))


def sub_points(x: Point, y: Point) -> Point:
    return tuple(a - b for a, b in zip(x, y))


def neg_point(x: Point) -> Point:
    return tuple(-a for a in x)


class Exponential:
    """Character x -> c^x on Z^d; every base coordinate must be nonzero."""

    __slots__ = ("dim", "base")

    def __init__(self, base: Iterable):
        coords = []
        for value in base:
            s = _coerce(value)
            if s is None or not isinstance(s, GaussianRational):
                raise TypeError(f"exponential coordinate {value!r} is not a scalar")
            if s.is_zero():
                raise ZeroCoordinate("exponential base has a zero coordinate")
            coords.append(s)
        if not coords:
            raise DimensionMismatch("exponential needs at least one coordinate")
        self.base = tuple(coords)
        self.dim = len(coords)

    def value_at(self, x) -> GaussianRational:
        x = check_point(self.dim, x)
        result = ONE
        for c, e in zip(self.base, x):
            if e:
                result = result * c**e
        return result

    def is_trivial(self) -> bool:
        return all(c.is_one() for c in self.base)

    def inverse(self) -> "Exponential":
        return Exponential([c.inverse() for c in self.base])

    def __eq__(self, other):
        return isinstance(other, Exponential) and self.base == other.base

    def __hash__(self):
        return hash(self.base)

    def sort_key(self):
        return tuple(c.sort_key() for c in self.base)

    def __repr__(self):
        return f"Exponential(({', '.join(str(c) for c in self.base)}))"


def trivial_exponential(dim: int) -> Exponential:
    return Exponential([ONE] * dim)


class Measure:
    """Finitely supported measure; zero coefficients are never stored."""

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim: int, coeffs: Mapping | None = None):
        self.dim = dim
        cleaned: dict = {}
        if coeffs:
            for x, v in coeffs.items():
                x = check_point(dim, x)
                s = _coerce(v)
                if s is None:
                    raise TypeError(f"coefficient {v!r} is not a scalar")
                if s:
                    prev = cleaned.get(x)
                    s = s if prev is None else prev + s
                    if s:
                        cleaned[x] = s
                    else:
                        del cleaned[x]
        self.coeffs = cleaned

    @classmethod
    def _raw(cls, dim: int, coeffs: dict) -> "Measure":
        self = object.__new__(cls)
        self.dim = dim
        self.coeffs = coeffs
        return self

    def support(self) -> list:
        return sorted(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def total_mass(self) -> GaussianRational:
        total = GaussianRational(0)
        for v in self.coeffs.values():
            total = total + v
        return total

    def __eq__(self, other):
        return (
            isinstance(other, Measure)
            and self.dim == other.dim
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.dim, frozenset(self.coeffs.items())))

    def __add__(self, other):
        if not isinstance(other, Measure):
            return NotImplemented
        _same_dim(self, other)
        out = dict(self.coeffs)
        for x, v in other.coeffs.items():
            s = out.get(x)
            s = v if s is None else s + v
            if s:
                out[x] = s
            else:
                del out[x]
        return Measure._raw(self.dim, out)

    def __sub__(self, other):
        if not isinstance(other, Measure):
            return NotImplemented
        return self + other.scaled(-1)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, s) -> "Measure":
        s = _coerce(s)
        if not s:
            return Measure._raw(self.dim, {})
        return Measure._raw(self.dim, {x: v * s for x, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, Measure):
            return convolve(self, other)
        s = _coerce(other)
        if s is not None:
            return self.scaled(s)
        return NotImplemented

    def __rmul__(self, other):
        s = _coerce(other)
        if s is not None:
            return self.scaled(s)
        return NotImplemented

    def translated(self, y) -> "Measure":
        """Convolution with delta(y): mass at x moves to x + y."""
        y = check_point(self.dim, y)
        return Measure._raw(
            self.dim, {add_points(x, y): v for x, v in self.coeffs.items()}
        )

    def __repr__(self):
        items = ", ".join(f"{x}: {v}" for x, v in sorted(self.coeffs.items()))
        return f"Measure(dim={self.dim}, {{{items}}})"


def _same_dim(a, b) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimension {a.dim} vs {b.dim}")


def delta(x) -> Measure:
    """Unit point mass at the lattice point x."""
    x = tuple(x) if isinstance(x, (tuple, list)) else (x,)
    x = check_point(len(x), x)
    return Measure._raw(len(x), {x: ONE})


def convolve(mu: Measure, nu: Measure) -> Measure:
    """Ring product: (mu * nu)(s) = sum over x + y = s of mu(x) nu(y)."""
    _same_dim(mu, nu)
    out: dict = {}
    if len(nu.coeffs) < len(mu.coeffs):
        mu, nu = nu, mu
    for x, a in mu.coeffs.items():
        for y, b in nu.coeffs.items():
            s = add_points(x, y)
            c = a * b
            prev = out.get(s)
            c = c if prev is None else prev + c
            if c:
                out[s] = c
            else:
                del out[s]
    return Measure._raw(mu.dim, out)


def difference_measure(m: Exponential, y) -> Measure:
    """delta(-y) - m(y) delta(0), the building block of higher differences."""
    y = check_point(m.dim, y)
    out = delta(neg_point(y))
    origin = (0,) * m.dim
    out = out + Measure(m.dim, {origin: -m.value_at(y)})
    return out


def difference_product(m: Exponential, ys: Iterable) -> Measure:
    """Convolution product of difference measures, one per shift in ys."""
    ys = list(ys)
    if not ys:
        raise EmptyShiftList("difference product needs at least one shift")
    out = difference_measure(m, ys[0])
    for y in ys[1:]:
        out = convolve(out, difference_measure(m, y))
    return out
