"""Ideals of transforms: membership, roots, multiplicity, dual spaces.

Laurent ideals are handled through their polynomial forms together with
the saturation relation t * z_1 ... z_d - 1, so Laurent units never affect
membership. Local structure at a root is read off moment functionals:
q belongs to the dual space at c when sum mu(x) q(x) c^-x kills every
member of the ideal.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import mpmath

from .derivations import mass, moment
from .errors import (
    DegreeBoundRequired,
    DimensionMismatch,
    InfiniteOrder,
    PositiveDimensional,
)
from .exppoly import ExpPolynomial, translate_closure
from .fourier import LaurentPoly, inverse_transform, transform
from .groebner import (
    GrevlexOrder,
    eliminate,
    groebner_basis,
    normal_form,
    standard_monomials,
)
from .linalg import RowSpace, nullspace
from .measures import Exponential, Measure, neg_point
from .polynomials import Polynomial, grevlex_key, monomials_up_to
from .scalars import ONE, ZERO, GaussianRational
from .univariate import ApproxRoot, find_roots
from .univariate import gcd as dense_gcd


def _embed(poly: Polynomial, extra: int = 1) -> Polynomial:
    """Lift into the ring with `extra` trailing saturation variables."""
    return Polynomial(
        poly.dim + extra,
        {alpha + (0,) * extra: v for alpha, v in poly.terms.items()},
    )


def _saturation_relation(dim: int) -> Polynomial:
    terms = {(1,) * (dim + 1): ONE, (0,) * (dim + 1): -ONE}
    return Polynomial(dim + 1, terms)


class IdealHandle:
    """Finitely generated ideal of Laurent transforms with a cached basis.

    The Groebner basis is computed on first use under a lock, so
    concurrent readers trigger exactly one computation.
    """

    def __init__(self, generators: Iterable):
        gens = list(generators)
        if not gens:
            raise ValueError("ideal needs at least one generator")
        dim = gens[0].dim
        for g in gens:
            if not isinstance(g, LaurentPoly):
                raise TypeError("generators must be Laurent polynomials")
            if g.dim != dim:
                raise DimensionMismatch("generator dimension mismatch")
        self.dim = dim
        self.generators = tuple(gens)
        self._lock = threading.Lock()
        self._basis = None
        self._order = GrevlexOrder(dim + 1)

    def __eq__(self, other):
        if not isinstance(other, IdealHandle):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def _polynomial_generators(self) -> list:
        out = []
        for g in self.generators:
            if g.is_zero():
                continue
            _, poly = g.to_polynomial()
            out.append(_embed(poly))
        out.append(_saturation_relation(self.dim))
        return out

    def groebner(self) -> list:
        basis = self._basis
        if basis is None:
            with self._lock:
                if self._basis is None:
                    self._basis = groebner_basis(
                        self._polynomial_generators(), self._order
                    )
                basis = self._basis
        return basis

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self.generators)

    def contains(self, L: LaurentPoly) -> bool:
        """Laurent membership; unit monomial factors are irrelevant."""
        if L.dim != self.dim:
            raise DimensionMismatch("dimension mismatch")
        if L.is_zero():
            return True
        if self.is_zero():
            return False
        _, poly = L.to_polynomial()
        return normal_form(_embed(poly), self.groebner(), self._order).is_zero()

    def quotient_dimension(self):
        """Dimension of the Laurent quotient, None when infinite."""
        if self.is_zero():
            return None
        monos = standard_monomials(self.groebner(), self._order)
        return None if monos is None else len(monos)

    def is_zero_dimensional(self) -> bool:
        return self.quotient_dimension() is not None

    def root_order(self, c: Exponential) -> int:
        """Minimum vanishing order of the generators at c."""
        if self.is_zero():
            raise InfiniteOrder("zero ideal vanishes to every order")
        return min(
            vanishing_order(g, c) for g in self.generators if not g.is_zero()
        )

    def zero_set(self):
        """Common roots on the torus of exponentials.

        Returns (exact, approximate): exact roots as Exponential bases,
        approximate ones as per-coordinate enclosure reports that are
        never consumed by exact computations.
        """
        if self.is_zero():
            raise PositiveDimensional("zero ideal; supply candidate exponentials")
        if self.dim == 1:
            return self._zero_set_univariate()
        return self._zero_set_elimination()

    def _zero_set_univariate(self):
        dense = []
        for g in self.generators:
            if g.is_zero():
                continue
            _, poly = g.to_polynomial()
            coeffs = [ZERO] * (max(a[0] for a in poly.terms) + 1)
            for alpha, v in poly.terms.items():
                coeffs[alpha[0]] = v
            dense = coeffs if not dense else dense_gcd(dense, coeffs)
        exact, approx = find_roots(dense)
        exact_exps = [Exponential((c,)) for c, _ in exact]
        return exact_exps, [ApproxExponential((a,)) for a in approx]

    def _zero_set_elimination(self):
        if not self.is_zero_dimensional():
            raise PositiveDimensional(
                "infinite zero set; supply candidate exponentials"
            )
        polys = self._polynomial_generators()
        per_coordinate = []
        for i in range(self.dim):
            found = eliminate(polys, self.dim + 1, i)
            if not found:
                raise PositiveDimensional(
                    "infinite zero set; supply candidate exponentials"
                )
            dense = []
            for g in found:
                coeffs = [ZERO] * (max(m[i] for m in g.terms) + 1)
                for mono, v in g.terms.items():
                    coeffs[mono[i]] = v
                dense = coeffs if not dense else dense_gcd(dense, coeffs)
            exact, approx = find_roots(dense)
            per_coordinate.append(
                [("exact", c) for c, _ in exact] + [("approx", a) for a in approx]
            )
        exact_out = []
        approx_out = []
        for combo in _product(per_coordinate):
            if all(kind == "exact" for kind, _ in combo):
                base = Exponential([value for _, value in combo])
                if all(g.evaluate(base).is_zero() for g in self.generators):
                    exact_out.append(base)
            else:
                report = self._verify_numeric_combo(combo)
                if report is not None:
                    approx_out.append(report)
        exact_out.sort(key=lambda e: e.sort_key())
        return exact_out, approx_out

    def _verify_numeric_combo(self, combo):
        coords = []
        with mpmath.workdps(60):
            point = []
            for kind, value in combo:
                if kind == "exact":
                    coords.append(
                        ApproxRoot(
                            re=value.re,
                            im=value.im,
                            radius=Fraction(0),
                            multiplicity=1,
                            certified=True,
                        )
                    )
                    point.append(
                        mpmath.mpc(
                            mpmath.mpf(value.re.numerator) / value.re.denominator,
                            mpmath.mpf(value.im.numerator) / value.im.denominator,
                        )
                    )
                else:
                    coords.append(value)
                    point.append(
                        mpmath.mpc(
                            mpmath.mpf(value.re.numerator) / value.re.denominator,
                            mpmath.mpf(value.im.numerator) / value.im.denominator,
                        )
                    )
            for g in self.generators:
                total = mpmath.mpc(0)
                for alpha, v in g.terms.items():
                    term = mpmath.mpc(
                        mpmath.mpf(v.re.numerator) / v.re.denominator,
                        mpmath.mpf(v.im.numerator) / v.im.denominator,
                    )
                    for x, a in zip(point, alpha):
                        term *= x**a
                    total += term
                if abs(total) > mpmath.mpf(10) ** -25:
                    return None
        return ApproxExponential(tuple(coords))

    def local_dual_space(self, c: Exponential, cutoff: int | None = None):
        """Moment functionals of bounded degree killing the whole ideal."""
        if c.dim != self.dim:
            raise DimensionMismatch("dimension mismatch")
        if cutoff is not None:
            polys = self._dual_polys(c, cutoff)
            low = sum(
                1 for q in polys if (q.degree() or 0) <= cutoff - 1
            )
            return DualSpaceBasis(
                c=c,
                cutoff=cutoff,
                polys=tuple(polys),
                stabilized=(low == len(polys)),
                root_in_zero_set=self._is_root(c),
            )
        qdim = self.quotient_dimension()
        if qdim is None:
            raise DegreeBoundRequired(
                "ideal is not zero dimensional; pass an explicit cutoff"
            )
        previous = len(self._dual_polys(c, 0))
        k = 1
        while k <= qdim + 1:
            polys = self._dual_polys(c, k)
            if len(polys) == previous:
                return DualSpaceBasis(
                    c=c,
                    cutoff=k,
                    polys=tuple(polys),
                    stabilized=True,
                    root_in_zero_set=self._is_root(c),
                )
            previous = len(polys)
            k += 1
        raise AssertionError("dual space failed to stabilize under quotient bound")

    def _is_root(self, c: Exponential) -> bool:
        return all(g.evaluate(c).is_zero() for g in self.generators)

    def _dual_polys(self, c: Exponential, cutoff: int) -> list:
        columns = monomials_up_to(self.dim, cutoff)
        col_index = {m: i for i, m in enumerate(columns)}
        rows = []
        grid = _grid(self.dim, cutoff)
        for g in self.generators:
            if g.is_zero():
                continue
            weighted = [(alpha, v * c.value_at(alpha)) for alpha, v in g.terms.items()]
            for gamma in grid:
                row = [ZERO] * len(columns)
                for alpha, w in weighted:
                    base = tuple(-a - t for a, t in zip(alpha, gamma))
                    for m in columns:
                        value = 1
                        for b, e in zip(base, m):
                            if e:
                                value *= b**e
                        row[col_index[m]] = row[col_index[m]] + w * value
                rows.append(row)
        kernel = nullspace(rows, len(columns))
        polys = []
        for vec in kernel:
            terms = {m: v for m, v in zip(columns, vec) if v}
            polys.append(Polynomial(self.dim, terms))
        polys.sort(key=lambda q: grevlex_key(max(q.terms, key=grevlex_key)))
        return polys


@dataclass(frozen=True)
class ApproxExponential:
    """Numeric enclosure of a non-exact root, report-only."""

    coords: tuple

    @property
    def certified(self) -> bool:
        return all(r.certified for r in self.coords)

    @property
    def radius(self) -> Fraction:
        return max(r.radius for r in self.coords)


@dataclass(frozen=True)
class DualSpaceBasis:
    c: Exponential
    cutoff: int
    polys: tuple
    stabilized: bool
    root_in_zero_set: bool

    @property
    def dimension(self) -> int:
        return len(self.polys)


def _grid(dim: int, cutoff: int) -> list:
    grid = [()]
    for _ in range(dim):
        grid = [g + (v,) for g in grid for v in range(cutoff + 1)]
    return grid


def _product(per_coordinate: list):
    combos = [()]
    for options in per_coordinate:
        combos = [c + (o,) for c in combos for o in options]
    return combos


def member(I: IdealHandle, L: LaurentPoly) -> bool:
    return I.contains(L)


def vanishing_order(L: LaurentPoly, c: Exponential) -> int:
    """Least total order of a nonvanishing mixed partial at c."""
    if L.dim != c.dim:
        raise DimensionMismatch("dimension mismatch")
    if L.is_zero():
        raise InfiniteOrder("zero transform vanishes to every order")
    _, poly = L.to_polynomial()
    bound = poly.degree()
    level = [(L, 0)]
    for n in range(bound + 1):
        if any(not deriv.evaluate(c).is_zero() for deriv, _ in level):
            return n
        level = [
            (deriv.derivative(i), i)
            for deriv, start in level
            for i in range(start, L.dim)
        ]
    raise AssertionError("vanishing order exceeded the degree bound")


def max_ideal_power_member(L: LaurentPoly, c: Exponential, n: int) -> bool:
    """Membership in the (n+1)-st power of the maximal ideal at c.

    Computed from the vanishing order and cross-checked against the
    moment conditions of every monomial of degree at most n.
    """
    if n < 0:
        raise ValueError("power index must be a natural number")
    if L.is_zero():
        return True
    answer = vanishing_order(L, c) >= n + 1
    mu = inverse_transform(L)
    by_moments = all(
        moment(mu, Polynomial(L.dim, {beta: ONE}), c).is_zero()
        for beta in monomials_up_to(L.dim, n)
    )
    if answer != by_moments:
        raise AssertionError("derivative and moment routes disagree")
    return answer


def difference_closure(p: Polynomial) -> list:
    """Basis of the span of all iterated differences of p.

    Seeded by unit-step differences and closed under unit translations;
    the rank fixpoint certifies stabilization.
    """
    if p.is_zero():
        return []
    layout = p.staircase()
    index = {m: i for i, m in enumerate(layout)}
    space = RowSpace(len(layout))
    basis: list = []
    work: list = []

    def vec(q: Polynomial) -> list:
        out = [ZERO] * len(layout)
        for m, v in q.terms.items():
            out[index[m]] = v
        return out

    seeds = []
    for i in range(p.dim):
        e = [0] * p.dim
        e[i] = 1
        seeds.append(p.difference(tuple(e)))
        seeds.append(p.difference(tuple(-v for v in e)))
    for seed in seeds:
        if not seed.is_zero() and space.add(vec(seed)):
            basis.append(seed)
            work.append(seed)
    steps = []
    for i in range(p.dim):
        e = [0] * p.dim
        e[i] = 1
        steps.append(tuple(e))
        steps.append(tuple(-v for v in e))
    while work:
        g = work.pop()
        for step in steps:
            h = g.shift(step)
            if space.add(vec(h)):
                basis.append(h)
                work.append(h)
    return basis


def derivation_ideal_member(
    p: Polynomial, c: Exponential, L: LaurentPoly
) -> bool:
    """Membership in the ideal of transforms killed at c by the derivation
    with generating polynomial p and all its difference companions.

    Two equivalent condition families are evaluated: moments of the
    difference closure itself, and moments of the closure re-based at the
    origin; they must agree whenever the transform vanishes at c.
    """
    if p.dim != c.dim or p.dim != L.dim:
        raise DimensionMismatch("dimension mismatch")
    mu = inverse_transform(L)
    if not mass(mu, c).is_zero():
        return False
    if p.is_zero():
        return True
    closure = difference_closure(p)
    direct = all(moment(mu, w, c).is_zero() for w in closure) and moment(
        mu, p, c
    ).is_zero()
    rebased = all(
        moment(mu, w - Polynomial.constant(p.dim, w.constant_term()), c).is_zero()
        for w in closure
    ) and moment(mu, p, c).is_zero()
    if direct != rebased:
        raise AssertionError("difference closure routes disagree")
    return direct


def annihilates_translates(mu: Measure, f: ExpPolynomial) -> bool:
    """Convolution-pairing check of mu against the translate span of f.

    mu kills the span iff (mu * g)(0) = sum mu(x) g(-x) vanishes for every
    g in a translate-closure basis; translation invariance of the span
    upgrades the single evaluation point to the whole action.
    """
    for g in translate_closure(f):
        total = ZERO
        for x, v in mu.coeffs.items():
            total = total + v * g.evaluate(neg_point(x))
        if total:
            return False
    return True
