"""Shared fixtures: frozen oracle diamonds, random generators, brute-force oracles.

The oracle diamonds below were computed by hand from first principles
(binomial torus Hodge numbers, eigenspace enumeration on P^2, classical
K3/quintic diamonds) and are frozen here so the tests never trust the code
under test for expected values.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from orbikit import HodgeDiamond, InertiaComponent, OrbifoldPresentation

# K3 surface (also: what the Kummer surface must assemble to).
K3_DIAMOND = HodgeDiamond(2, {(0, 0): 1, (2, 0): 1, (0, 2): 1, (1, 1): 20, (2, 2): 1})

# 3-torus mod negation: invariant torus numbers plus 64 points of age 3/2.
KUMMER3_DIAMOND = HodgeDiamond(
    3,
    {
        (0, 0): 1,
        (2, 0): 3,
        (0, 2): 3,
        (1, 1): 9,
        (Fraction(3, 2), Fraction(3, 2)): 64,
        (2, 2): 9,
        (3, 1): 3,
        (1, 3): 3,
        (3, 3): 1,
    },
)

# P^2 mod Z/3 (weights 0,1,2): P^2 plus six isolated age-1 points; equals
# the diamond of the crepant resolution (three A_2 configurations add 6 to
# h^{1,1} of P^2).
P2_MU3_DIAMOND = HodgeDiamond(2, {(0, 0): 1, (1, 1): 7, (2, 2): 1})

# Quintic threefold.
QUINTIC_DIAMOND = HodgeDiamond(
    3,
    {
        (0, 0): 1, (3, 3): 1,
        (1, 1): 1, (2, 2): 1,
        (2, 1): 101, (1, 2): 101,
        (3, 0): 1, (0, 3): 1,
    },
)


def symmetry_orbits(n: int) -> list[tuple[tuple[int, int], ...]]:
    """Orbits of the (p, q) grid under (p,q)->(q,p) and (p,q)->(n-p,n-q)."""
    seen: set[tuple[int, int]] = set()
    orbits = []
    for p in range(n + 1):
        for q in range(n + 1):
            if (p, q) in seen:
                continue
            orbit = {(p, q), (q, p), (n - p, n - q), (n - q, n - p)}
            seen |= orbit
            orbits.append(tuple(sorted(orbit)))
    return orbits


def random_symmetric_diamond(rng: random.Random, n: int, max_entry: int = 4) -> HodgeDiamond:
    """Random integer diamond with Hodge and Serre symmetry and h^{0,0} = 1."""
    entries: dict[tuple[int, int], int] = {}
    for orbit in symmetry_orbits(n):
        v = 1 if (0, 0) in orbit else rng.randint(0, max_entry)
        for key in orbit:
            entries[key] = v
    return HodgeDiamond(n, entries)


def _random_faithful_exponents(rng: random.Random, l: int, k: int) -> list[int] | None:
    """k nonzero exponents in [1, l-1] whose additive orders jointly realize l."""
    import math

    for _ in range(64):
        nz = [rng.randint(1, l - 1) for _ in range(k)]
        if math.lcm(*(l // math.gcd(a, l) for a in nz)) == l:
            return sorted(nz)
    return None


def random_presentation(
    rng: random.Random, max_sectors: int = 20, max_order: int = 12
) -> OrbifoldPresentation:
    """Random valid presentation: untwisted sector plus inverse-closed twisted pairs.

    Coarse diamonds are sampled with both symmetries, which is what makes
    the assembled diamond provably symmetric (inverse sectors have ages
    summing to the codimension and carry Serre-dual coarse data).
    """
    n = rng.randint(1, 4)
    comps = [
        InertiaComponent(1, (0,) * n, random_symmetric_diamond(rng, n), label="untwisted")
    ]
    if n >= 2:
        target = rng.randint(1, max_sectors)
        while len(comps) < target:
            l = rng.randint(2, max_order)
            dim_z = rng.randint(0, n - 2)
            nz = _random_faithful_exponents(rng, l, n - dim_z)
            if nz is None:
                continue
            exps = [0] * dim_z + nz
            inv = [0] * dim_z + sorted((l - a) % l for a in nz)
            coarse = random_symmetric_diamond(rng, dim_z, max_entry=3)
            tag = f"s{len(comps)}"
            if exps == inv and rng.random() < 0.5:
                comps.append(InertiaComponent(l, exps, coarse, label=tag))
            elif len(comps) + 2 <= target + 1:
                comps.append(InertiaComponent(l, exps, coarse, label=tag + "+"))
                comps.append(InertiaComponent(l, inv, coarse, label=tag + "-"))
            else:
                break
    return OrbifoldPresentation(n, comps, name=f"random-{rng.getrandbits(32):08x}")


def enumerate_matching_diamonds(n, column_vector, h01=None, limit=2):
    """Brute-force every integer diamond with h^{0,0} = 1, both symmetries,
    the given column sums and (optionally) the given (0, 1) entry.

    Independent of the closed-form reconstruction: diamonds are enumerated
    as assignments of one value per symmetry orbit, pruned only by the
    requirement that no column budget goes negative.  Returns at most
    `limit` solutions.
    """
    orbits = symmetry_orbits(n)
    contributions = []
    for orbit in orbits:
        contrib: dict[int, int] = {}
        for p, q in orbit:
            contrib[p - q] = contrib.get(p - q, 0) + 1
        contributions.append(contrib)

    solutions: list[HodgeDiamond] = []
    assignment = [0] * len(orbits)

    def recurse(k: int, remaining: dict[int, int]):
        if len(solutions) >= limit:
            return
        if k == len(orbits):
            if all(v == 0 for v in remaining.values()):
                entries: dict[tuple[int, int], int] = {}
                for orbit, value in zip(orbits, assignment):
                    for key in orbit:
                        entries[key] = value
                solutions.append(HodgeDiamond(n, entries))
            return
        orbit, contrib = orbits[k], contributions[k]
        if (0, 0) in orbit:
            choices = [1]
        elif h01 is not None and (0, 1) in orbit:
            choices = [h01]
        else:
            cap = min(remaining[i] // c for i, c in contrib.items())
            choices = range(cap + 1)
        for value in choices:
            nxt = dict(remaining)
            ok = True
            for i, c in contrib.items():
                nxt[i] -= c * value
                if nxt[i] < 0:
                    ok = False
                    break
            if ok:
                assignment[k] = value
                recurse(k + 1, nxt)
        assignment[k] = 0

    recurse(0, {i: column_vector[i] for i in range(-n, n + 1)})
    return solutions


def find_column_equal_pair():
    """Search small symmetric 4-folds for two distinct diamonds with equal
    columns and equal (0,1), (4,0), (3,0) entries."""
    n = 4
    orbits = symmetry_orbits(n)
    free = [o for o in orbits if (0, 0) not in o]
    by_signature: dict[tuple, HodgeDiamond] = {}
    for values in product(range(3), repeat=len(free)):
        entries: dict[tuple[int, int], int] = {}
        for orbit in orbits:
            v = 1 if (0, 0) in orbit else values[free.index(orbit)]
            for key in orbit:
                entries[key] = v
        d = HodgeDiamond(n, entries)
        cols = tuple(sum(h for (p, q), h in d.items() if p - q == i) for i in range(-n, n + 1))
        signature = (cols, d.entry(0, 1), d.entry(4, 0), d.entry(3, 0))
        if signature in by_signature and by_signature[signature] != d:
            return by_signature[signature], d
        by_signature.setdefault(signature, d)
    raise AssertionError("no column-equal pair found in the search range")
