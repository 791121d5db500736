"""Automated inertia presentations for two global-quotient families.

* Diagonal actions of finite abelian groups on projective space P^n.
  Sectors are enumerated per group element from the eigenspace
  decomposition of the homogeneous coordinates; for diagonal abelian
  actions the conjugation-invariants step of the global-quotient formula
  is trivial (conjugation is trivial and the action on each fixed
  component's cohomology preserves the hyperplane class), so sectors and
  ages can be listed mechanically.

* Kummer involutions: a complex torus of dimension n modulo negation.
  The untwisted sector carries the (-1)-invariant part of the torus
  cohomology and the twisted data is one order-2 point sector per
  2-torsion point, 2^{2n} in total, each of age n/2.

Anything outside these two families (non-abelian groups, non-diagonal
actions) must be entered as raw inertia data instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .diamond import HodgeDiamond
from .errors import (
    DimensionTooSmallError,
    GroupTooLargeError,
    PseudoReflectionError,
    ScalarActionError,
    ValidationError,
)
from .inertia import InertiaComponent, OrbifoldPresentation

#: Default cap on the group order enumerated by `build_projective_quotient`.
DEFAULT_MAX_GROUP_ORDER = 10_000


@dataclass(frozen=True)
class ProjectiveQuotientSpec:
    """Diagonal action of G = Z/m_1 x ... x Z/m_k on P^n.

    Row j of `weights` lists the exponents of generator j acting on the
    n + 1 homogeneous coordinates; entries are reduced mod m_j.
    """

    proj_dim_n: int
    cyclic_orders: tuple[int, ...]
    weights: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.proj_dim_n
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValidationError(f"projective dimension must be a positive integer, got {n!r}")
        orders = tuple(self.cyclic_orders)
        for m in orders:
            if not isinstance(m, int) or isinstance(m, bool) or m < 1:
                raise ValidationError(f"cyclic orders must be positive integers, got {m!r}")
        rows = tuple(tuple(row) for row in self.weights)
        if len(rows) != len(orders):
            raise ValidationError(
                f"{len(orders)} generators but {len(rows)} weight rows"
            )
        reduced = []
        for m, row in zip(orders, rows):
            if len(row) != n + 1:
                raise ValidationError(
                    f"weight row {row} has {len(row)} entries, expected {n + 1}"
                )
            for w in row:
                if not isinstance(w, int) or isinstance(w, bool):
                    raise ValidationError(f"weights must be integers, got {w!r}")
            reduced.append(tuple(w % m for w in row))
        object.__setattr__(self, "cyclic_orders", orders)
        object.__setattr__(self, "weights", tuple(reduced))

    @property
    def group_order(self) -> int:
        return math.prod(self.cyclic_orders)


@dataclass(frozen=True)
class KummerSpec:
    """A complex torus of dimension n >= 2 modulo the negation involution."""

    torus_dim_n: int

    def __post_init__(self):
        n = self.torus_dim_n
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValidationError(f"torus dimension must be a positive integer, got {n!r}")
        if n < 2:
            raise DimensionTooSmallError(
                "negation on a 1-torus fixes points in codimension one; need dimension >= 2"
            )


def torus_invariant_diamond(n: int) -> HodgeDiamond:
    """Negation-invariant Hodge numbers of an n-torus.

    Negation acts by (-1)^{p+q} on H^{p,q}, so the invariants are the
    binomial numbers C(n,p) C(n,q) at even p + q and zero at odd p + q.
    """
    return HodgeDiamond(
        n,
        {
            (p, q): math.comb(n, p) * math.comb(n, q)
            for p in range(n + 1)
            for q in range(n + 1)
            if (p + q) % 2 == 0
        },
    )


def _eigenvalue_exponents(spec: ProjectiveQuotientSpec, t: tuple[int, ...], big_order: int) -> list[int]:
    # Exponent of the common root of unity zeta_M on each coordinate,
    # for the element with generator powers t.
    n = spec.proj_dim_n
    out = []
    for i in range(n + 1):
        e = 0
        for j, m in enumerate(spec.cyclic_orders):
            e += (big_order // m) * t[j] * spec.weights[j][i]
        out.append(e % big_order)
    return out


def build_projective_quotient(
    spec: ProjectiveQuotientSpec,
    max_group_order: int = DEFAULT_MAX_GROUP_ORDER,
    name: str | None = None,
) -> OrbifoldPresentation:
    """Inertia presentation of P^n by a diagonal abelian action.

    For every group element g the coordinates split into eigenspaces
    V_chi; each nonzero V_chi contributes the fixed component P(V_chi)
    with the diamond of projective space as coarse data.  Writing l for
    the order of g acting on P^n, the tangent exponents at P(V_chi) are
    the differences (chi' - chi) scaled to [0, l - 1], one per coordinate
    in the other eigenspaces, padded with dim V_chi - 1 zeros along the
    component.  The identity element contributes the untwisted P^n sector.

    Raises ScalarActionError if a nonidentity element acts as a scalar
    (the action would not be effective on P^n), PseudoReflectionError if
    some element fixes a hyperplane, and GroupTooLargeError when the group
    order exceeds `max_group_order`.
    """
    n = spec.proj_dim_n
    order = spec.group_order
    if order > max_group_order:
        raise GroupTooLargeError(f"group order {order} exceeds the limit {max_group_order}")
    big = math.lcm(1, *spec.cyclic_orders)

    components: list[InertiaComponent] = []
    for t in product(*(range(m) for m in spec.cyclic_orders)):
        if not any(t):
            components.append(
                InertiaComponent(1, (0,) * n, HodgeDiamond.projective_space(n), label="untwisted")
            )
            continue
        eig = _eigenvalue_exponents(spec, t, big)
        if len(set(eig)) == 1:
            raise ScalarActionError(
                f"element with generator powers {t} acts as a scalar on P^{n}"
            )
        # Projective order l: least d with all pairwise eigenvalue
        # differences killed mod the big order.
        g0 = math.gcd(big, *(((e - eig[0]) % big) for e in eig))
        l = big // g0
        multiplicity: dict[int, int] = {}
        for e in eig:
            multiplicity[e] = multiplicity.get(e, 0) + 1
        if max(multiplicity.values()) == n:
            chi = max(multiplicity, key=multiplicity.get)
            raise PseudoReflectionError(
                f"element with generator powers {t} fixes the hyperplane P(V_{chi}) in P^{n}"
            )
        t_label = ",".join(map(str, t))
        for chi in sorted(multiplicity):
            d = multiplicity[chi]
            exponents = sorted(
                ((chi2 - chi) % big) // g0
                for chi2, d2 in multiplicity.items()
                if chi2 != chi
                for _ in range(d2)
            )
            exponents = [0] * (d - 1) + exponents
            components.append(
                InertiaComponent(
                    l,
                    exponents,
                    HodgeDiamond.projective_space(d - 1),
                    label=f"g=({t_label}) eig={chi}",
                )
            )
    if name is None:
        if spec.cyclic_orders:
            name = f"p{n}_" + "x".join(f"z{m}" for m in spec.cyclic_orders)
        else:
            name = f"p{n}_trivial"
    return OrbifoldPresentation(n, components, name=name)


def build_kummer(spec: KummerSpec | int, name: str | None = None) -> OrbifoldPresentation:
    """Inertia presentation of an n-torus modulo negation, n >= 2.

    The 2^{2n} two-torsion points are the fixed locus of the involution;
    each gives an order-2 point sector with exponents (1, ..., 1) and age
    n/2.  Accepts either a KummerSpec or the dimension n directly.
    """
    if isinstance(spec, int):
        spec = KummerSpec(spec)
    n = spec.torus_dim_n
    components = [
        InertiaComponent(1, (0,) * n, torus_invariant_diamond(n), label="untwisted")
    ]
    point = HodgeDiamond.point()
    components.extend(
        InertiaComponent(2, (1,) * n, point, label="2-torsion point")
        for _ in range(4**n)
    )
    return OrbifoldPresentation(n, components, name=name if name is not None else f"kummer{n}")
