"""Inertia sector data and assembly of orbifold Hodge diamonds.

An orbifold is presented here by the components of its inertia stack: one
untwisted sector (the space itself) plus one component per twisted sector.
Each component records the order l of its automorphism, the eigenvalue
exponents a_1..a_n of that automorphism on the ambient tangent space at a
generic point of the component, and the Hodge diamond of the component's
coarse space Z.  Exponents follow the 0-based convention

    eigenvalues = exp(2*pi*i*a_k / l),   0 <= a_k <= l - 1,

with zeros exactly along the directions tangent to the fixed locus, and

    age = (a_1 + ... + a_n) / l.

Convention note (important): some sources state the shift of a sector via
the inverse automorphism, as n' - (1/l) * sum(a_k) over 1-based exponents,
which swaps every sector with its inverse.  The 0-based formula above is
the standard Chen-Ruan age; it is pinned down operationally by two checks
in the test suite: assembled diamonds satisfy Serre duality, and the
Kummer surface assembles to the K3 diamond (h^{1,1} = 4 + 16 = 20).

The orbifold Hodge numbers are assembled by shifting every coarse entry
h^{p',q'}(Z) to (p' + age, q' + age) and summing over sectors; ages are
integers for every sector exactly when the underlying quotient
singularities are Gorenstein, and fractional bidegrees appear otherwise.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Iterable, Sequence

from .diamond import Grade, HodgeDiamond
from .errors import OutOfRangeError, PseudoReflectionError, ValidationError


class InertiaComponent:
    """One sector of the inertia decomposition.

    Validation enforces the pseudo-reflection exclusion (a twisted sector
    has at least two nonzero exponents, i.e. codimension >= 2), that the
    coarse diamond is integer graded of dimension equal to the number of
    zero exponents, and that the tangent eigenvalues generate the full
    cyclic group of order l: the least common multiple of the additive
    orders l/gcd(a_k, l) equals l.  The last condition is faithfulness of
    the isotropy representation; a single exponent coprime to l is
    sufficient but not necessary (e.g. exponents (2,2,3,3) at l = 6 occur
    at isolated fixed points of diagonal actions on P^4).
    """

    __slots__ = ("_order_l", "_exponents", "_coarse_diamond", "_label")

    def __init__(
        self,
        order_l: int,
        exponents: Sequence[int],
        coarse_diamond: HodgeDiamond,
        label: str = "",
    ):
        if not isinstance(order_l, int) or isinstance(order_l, bool) or order_l < 1:
            raise ValidationError(f"sector order must be a positive integer, got {order_l!r}")
        exps = tuple(exponents)
        for a in exps:
            if not isinstance(a, int) or isinstance(a, bool):
                raise ValidationError(f"exponents must be integers, got {a!r}")
            if not (0 <= a <= order_l - 1):
                raise ValidationError(f"exponent {a} outside [0, {order_l - 1}] for order {order_l}")
        nonzero = [a for a in exps if a]
        if order_l == 1 and nonzero:
            raise ValidationError("untwisted sector (order 1) must have all exponents zero")
        if len(nonzero) == 1:
            raise PseudoReflectionError(
                f"sector with exponents {exps} fixes a codimension-one locus"
            )
        if order_l > 1:
            if math.lcm(*(order_l // math.gcd(a, order_l) for a in exps)) != order_l:
                raise ValidationError(
                    f"exponents {exps} do not realize an automorphism of order {order_l}"
                )
        if not isinstance(coarse_diamond, HodgeDiamond):
            raise ValidationError("coarse_diamond must be a HodgeDiamond")
        if not coarse_diamond.is_integer_graded():
            raise ValidationError("coarse-space diamond must have integer grades only")
        n_fixed = len(exps) - len(nonzero)
        if coarse_diamond.dim_n != n_fixed:
            raise ValidationError(
                f"coarse space has dimension {coarse_diamond.dim_n} "
                f"but the exponents fix {n_fixed} directions"
            )
        self._order_l = order_l
        self._exponents = exps
        self._coarse_diamond = coarse_diamond
        self._label = str(label)

    @property
    def order_l(self) -> int:
        return self._order_l

    @property
    def exponents(self) -> tuple[int, ...]:
        return self._exponents

    @property
    def coarse_diamond(self) -> HodgeDiamond:
        return self._coarse_diamond

    @property
    def label(self) -> str:
        return self._label

    @property
    def is_untwisted(self) -> bool:
        return self._order_l == 1

    def age(self) -> Grade:
        """Age (shift number) of the sector: sum of exponents over l."""
        return Fraction(sum(self._exponents), self._order_l)

    def sort_key(self):
        """Canonical ordering key: (order, exponents, label)."""
        return (self._order_l, self._exponents, self._label)

    def __eq__(self, other) -> bool:
        if not isinstance(other, InertiaComponent):
            return NotImplemented
        return (
            self._order_l == other._order_l
            and self._exponents == other._exponents
            and self._coarse_diamond == other._coarse_diamond
            and self._label == other._label
        )

    def __hash__(self) -> int:
        return hash((self._order_l, self._exponents, self._coarse_diamond, self._label))

    def __repr__(self) -> str:
        return (
            f"InertiaComponent(order_l={self._order_l}, exponents={self._exponents}, "
            f"coarse={self._coarse_diamond!r}, label={self._label!r})"
        )


class OrbifoldPresentation:
    """Full inertia data of one orbifold: untwisted sector plus twisted components.

    Exactly one component has order 1, and every component's exponent
    list has length equal to the ambient dimension.  Components standing
    for several isomorphic sectors are simply repeated in the list.
    """

    __slots__ = ("_dim_n", "_components", "_name")

    def __init__(self, dim_n: int, components: Iterable[InertiaComponent], name: str = ""):
        if not isinstance(dim_n, int) or isinstance(dim_n, bool) or dim_n < 0:
            raise ValidationError(f"ambient dimension must be a nonnegative integer, got {dim_n!r}")
        comps = tuple(components)
        if not comps:
            raise ValidationError("a presentation needs at least the untwisted sector")
        for c in comps:
            if not isinstance(c, InertiaComponent):
                raise ValidationError("components must be InertiaComponent instances")
            if len(c.exponents) != dim_n:
                raise ValidationError(
                    f"component {c.label!r} has {len(c.exponents)} exponents, ambient dimension is {dim_n}"
                )
        untwisted = [c for c in comps if c.is_untwisted]
        if len(untwisted) != 1:
            raise ValidationError(
                f"exactly one untwisted sector required, found {len(untwisted)}"
            )
        self._dim_n = dim_n
        self._components = comps
        self._name = str(name)

    @property
    def dim_n(self) -> int:
        return self._dim_n

    @property
    def components(self) -> tuple[InertiaComponent, ...]:
        return self._components

    @property
    def name(self) -> str:
        return self._name

    @property
    def untwisted(self) -> InertiaComponent:
        return next(c for c in self._components if c.is_untwisted)

    @property
    def twisted(self) -> tuple[InertiaComponent, ...]:
        return tuple(c for c in self._components if not c.is_untwisted)

    def __eq__(self, other) -> bool:
        # Component order is presentation-irrelevant: compare as multisets.
        if not isinstance(other, OrbifoldPresentation):
            return NotImplemented
        return (
            self._dim_n == other._dim_n
            and self._name == other._name
            and Counter(self._components) == Counter(other._components)
        )

    def __hash__(self) -> int:
        return hash((self._dim_n, self._name, frozenset(Counter(self._components).items())))

    def __repr__(self) -> str:
        return (
            f"OrbifoldPresentation(name={self._name!r}, dim_n={self._dim_n}, "
            f"{len(self._components)} components)"
        )


def age(c: InertiaComponent) -> Grade:
    """Age of a sector; 0 exactly for the untwisted sector."""
    return c.age()


def is_gorenstein(p: OrbifoldPresentation) -> bool:
    """True iff every sector age is an integer.

    Equivalent to all local groups acting through SL, and to the assembled
    diamond having integer grades only.
    """
    return all(c.age().denominator == 1 for c in p.components)


def assemble_diamond(p: OrbifoldPresentation) -> HodgeDiamond:
    """Orbifold Hodge diamond: coarse entries of all sectors, age-shifted.

    h^{p,q}_orb = sum over sectors Z of h^{p - a(Z), q - a(Z)}(Z), realized
    by adding each coarse entry (p', q') at (p' + a, q' + a).  The level of
    the result is the lcm of the sector orders.

    Raises OutOfRangeError if a shifted grade leaves [0, n].  Data passing
    component validation can never trigger this (the shift is strictly
    smaller than the codimension), so it signals inconsistent input, e.g.
    a sector swapped with its inverse by hand-edited exponents.
    """
    n = p.dim_n
    entries: dict[tuple[Grade, Grade], int] = {}
    level = 1
    for c in p.components:
        level = math.lcm(level, c.order_l)
        a = c.age()
        for (pp, qq), h in c.coarse_diamond.items():
            sp, sq = pp + a, qq + a
            if not (0 <= sp <= n and 0 <= sq <= n):
                raise OutOfRangeError(
                    f"sector {c.label!r} shifts ({pp},{qq}) to "
                    f"({sp},{sq}) outside [0, {n}]"
                )
            entries[(sp, sq)] = entries.get((sp, sq), 0) + h
    return HodgeDiamond(n, entries, level=level)


def extract_h0q(p: OrbifoldPresentation, q: int) -> int:
    """h^{0,q}_orb, read off the untwisted sector.

    Twisted sectors shift by a strictly positive age and therefore never
    reach the p = 0 edge, so h^{0,q}_orb equals h^{0,q} of the untwisted
    coarse space (a birational invariant of it).
    """
    if not isinstance(q, int) or isinstance(q, bool) or not (0 <= q <= p.dim_n):
        raise ValidationError(f"q must be an integer in [0, {p.dim_n}], got {q!r}")
    return p.untwisted.coarse_diamond.entry(0, q)
