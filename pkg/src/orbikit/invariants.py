"""Numeric constraints that derived equivalence imposes on orbifold diamonds.

Two orbifolds with equivalent derived categories must share:

* all diagonal column sums (Hochschild homology dimensions),
* h^{0,1} (the dimension of the Picard variety),
* h^{n,0} and h^{n-1,0} (twisted sectors have fixed loci of dimension
  at most n - 2 and cannot reach the |p - q| >= n - 1 diagonals).

These conditions are necessary, never sufficient; `check_partners` reports
them without ever certifying an equivalence.  In the Gorenstein case up to
dimension three the conditions determine the whole diamond, which
`reconstruct_gorenstein` solves for in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .diamond import ColumnVector, HodgeDiamond, columns, format_grade
from .errors import (
    DimensionMismatchError,
    InconsistentError,
    NonGorensteinOrbifoldError,
    ParityError,
    UnsupportedDimensionError,
    ValidationError,
)
from .inertia import OrbifoldPresentation


class Verdict(Enum):
    COMPATIBLE_SO_FAR = "CompatibleSoFar"
    INCOMPATIBLE = "Incompatible"


@dataclass(frozen=True)
class Mismatch:
    """One failed comparison: which constraint, where, and the two values."""

    constraint: str
    index: object
    left: int
    right: int


@dataclass(frozen=True)
class PartnerReport:
    """Outcome of the necessary-condition comparison of two diamonds.

    `strict_equal` is None unless strict mode was applicable and requested
    (both diamonds integer-graded, dimension <= 3), in which case full
    entrywise equality also enters the verdict.  `informational` lists
    h^{0,q} mismatches for 2 <= q <= n-1; these never affect the verdict
    since their invariance is not known in general.
    """

    columns_equal: bool
    h01_equal: bool
    hn0_equal: bool
    hn10_equal: bool
    verdict: Verdict
    failures: tuple[Mismatch, ...] = ()
    informational: tuple[Mismatch, ...] = ()
    strict_equal: Optional[bool] = None


@dataclass(frozen=True)
class McKayReport:
    equal: bool
    differences: tuple[Mismatch, ...] = ()


def check_partners(a: HodgeDiamond, b: HodgeDiamond, strict_dim3: bool = False) -> PartnerReport:
    """Compare the derived-invariant numbers of two diamonds.

    A CompatibleSoFar verdict means no proved invariant distinguishes the
    two; it never asserts derived equivalence.  With `strict_dim3`, both
    diamonds integer-graded and dimension <= 3, full entrywise equality is
    additionally required (in that range the invariants determine every
    Hodge number).
    """
    if a.dim_n != b.dim_n:
        raise DimensionMismatchError(f"dimensions differ: {a.dim_n} vs {b.dim_n}")
    n = a.dim_n

    failures: list[Mismatch] = []
    ca, cb = columns(a), columns(b)
    for i in range(-n, n + 1):
        if ca[i] != cb[i]:
            failures.append(Mismatch("columns", i, ca[i], cb[i]))
    columns_equal = ca == cb

    def compare(constraint: str, p: int, q: int) -> bool:
        left, right = a.entry(p, q), b.entry(p, q)
        if left != right:
            failures.append(Mismatch(constraint, (p, q), left, right))
        return left == right

    h01_equal = compare("h01", 0, 1)
    hn0_equal = compare("hn0", n, 0)
    hn10_equal = compare("hn10", n - 1, 0)

    informational = tuple(
        Mismatch("h0q", (0, q), a.entry(0, q), b.entry(0, q))
        for q in range(2, n)
        if a.entry(0, q) != b.entry(0, q)
    )

    strict_equal: Optional[bool] = None
    if strict_dim3 and n <= 3 and a.is_integer_graded() and b.is_integer_graded():
        diffs = _entry_differences(a, b, "entry")
        failures.extend(diffs)
        strict_equal = not diffs

    booleans = [columns_equal, h01_equal, hn0_equal, hn10_equal]
    if strict_equal is not None:
        booleans.append(strict_equal)
    verdict = Verdict.COMPATIBLE_SO_FAR if all(booleans) else Verdict.INCOMPATIBLE
    return PartnerReport(
        columns_equal=columns_equal,
        h01_equal=h01_equal,
        hn0_equal=hn0_equal,
        hn10_equal=hn10_equal,
        verdict=verdict,
        failures=tuple(failures),
        informational=informational,
        strict_equal=strict_equal,
    )


def _entry_differences(a: HodgeDiamond, b: HodgeDiamond, constraint: str) -> list[Mismatch]:
    diffs = []
    for key in sorted(set(a.keys()) | set(b.keys())):
        left, right = a.entry(*key), b.entry(*key)
        if left != right:
            diffs.append(Mismatch(constraint, key, left, right))
    return diffs


def extract_hn0(c: ColumnVector) -> int:
    """h^{n,0}_orb from the column vector alone.

    Twisted sectors live on fixed loci of dimension <= n - 2, so only the
    untwisted h^{n,0} reaches column n.
    """
    return c[c.dim_n]


def extract_hn10(c: ColumnVector) -> int:
    """h^{n-1,0}_orb from the column vector alone.

    Column n - 1 receives exactly h^{n-1,0} + h^{n,1}, and these agree by
    duality, so the column value is even and half of it is the answer.
    """
    v = c[c.dim_n - 1]
    if v % 2:
        raise ParityError(f"column {c.dim_n - 1} is odd ({v}); duality forces it to be even")
    return v // 2


def hochschild_via_sectors(p: OrbifoldPresentation) -> ColumnVector:
    """Hochschild homology dimensions computed sector by sector.

    Age shifts move entries along diagonals (p - q is unchanged), so the
    column vector of the assembled diamond equals the sum of the column
    vectors of the coarse sector diamonds.
    """
    total: dict[int, int] = {}
    for c in p.components:
        for i, v in columns(c.coarse_diamond).items():
            total[i] = total.get(i, 0) + v
    return ColumnVector(p.dim_n, total)


def reconstruct_gorenstein(
    c: ColumnVector,
    h01: Optional[int] = None,
    n: Optional[int] = None,
) -> HodgeDiamond:
    """The unique integer diamond with the given columns, in dimension <= 3.

    Solves for the diamond with h^{0,0} = 1 satisfying conjugation
    symmetry h^{p,q} = h^{q,p}, Serre duality h^{p,q} = h^{n-p,n-q}, the
    given column sums, and h^{0,1} = h01.  The system is triangular:

        n = 3:  h^{3,0} = c_3,  h^{2,0} = c_2 / 2,  h^{1,0} = h01,
                h^{2,1} = c_1 - 2*h01,  h^{1,1} = (c_0 - 2) / 2
        n = 2:  h^{2,0} = c_2,  h^{1,0} = c_1 / 2,  h^{1,1} = c_0 - 2
        n = 1:  h^{1,0} = c_1,  with c_0 == 2 required
        n = 0:  c_0 == 1 required

    `h01` is needed only for n = 3 (columns alone cannot separate h^{1,0}
    from h^{2,1}); in lower dimension it is determined by the columns and,
    when supplied, verified.  Raises InconsistentError when any solved
    value is negative or fractional or a consistency equation fails, and
    UnsupportedDimensionError for n > 3.
    """
    if n is None:
        n = c.dim_n
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValidationError(f"dimension must be a nonnegative integer, got {n!r}")
    if n != c.dim_n:
        raise InconsistentError(f"columns are for dimension {c.dim_n}, not {n}")
    if n > 3:
        raise UnsupportedDimensionError(
            f"closed-form reconstruction only exists for dimension <= 3, got {n}"
        )
    if h01 is not None and (not isinstance(h01, int) or isinstance(h01, bool) or h01 < 0):
        raise ValidationError(f"h01 must be a nonnegative integer, got {h01!r}")
    for i in range(1, n + 1):
        if c[i] != c[-i]:
            raise InconsistentError(f"columns {i} and {-i} differ ({c[i]} vs {c[-i]})")

    def even_half(value: int, what: str) -> int:
        if value % 2:
            raise InconsistentError(f"{what} must be even, got {value}")
        return value // 2

    def known_h01(value: int):
        if h01 is not None and h01 != value:
            raise InconsistentError(f"h01 given as {h01} but the columns force {value}")

    entries: dict[tuple[int, int], int]
    if n == 0:
        if c[0] != 1:
            raise InconsistentError(f"a point has column sum 1, got {c[0]}")
        known_h01(0)
        entries = {(0, 0): 1}
    elif n == 1:
        if c[0] != 2:
            raise InconsistentError(f"column 0 must be 2 (h^{{0,0}} + h^{{1,1}}), got {c[0]}")
        h10 = c[1]
        known_h01(h10)
        entries = {(0, 0): 1, (1, 1): 1, (1, 0): h10, (0, 1): h10}
    elif n == 2:
        h20 = c[2]
        h10 = even_half(c[1], "column 1")
        known_h01(h10)
        h11 = c[0] - 2
        if h11 < 0:
            raise InconsistentError(f"column 0 must be at least 2, got {c[0]}")
        entries = {
            (0, 0): 1, (2, 2): 1,
            (1, 0): h10, (0, 1): h10, (2, 1): h10, (1, 2): h10,
            (2, 0): h20, (0, 2): h20,
            (1, 1): h11,
        }
    else:
        if h01 is None:
            raise InconsistentError("h01 is required to reconstruct a threefold diamond")
        h30 = c[3]
        h20 = even_half(c[2], "column 2")
        h10 = h01
        h21 = c[1] - 2 * h10
        if h21 < 0:
            raise InconsistentError(
                f"column 1 ({c[1]}) is smaller than 2*h01 ({2 * h10})"
            )
        h11 = even_half(c[0] - 2, "column 0 minus 2")
        if h11 < 0:
            raise InconsistentError(f"column 0 must be at least 2, got {c[0]}")
        entries = {
            (0, 0): 1, (3, 3): 1,
            (1, 0): h10, (0, 1): h10, (2, 3): h10, (3, 2): h10,
            (2, 0): h20, (0, 2): h20, (1, 3): h20, (3, 1): h20,
            (3, 0): h30, (0, 3): h30,
            (1, 1): h11, (2, 2): h11,
            (2, 1): h21, (1, 2): h21,
        }

    result = HodgeDiamond(n, entries)
    # Self-verifying postconditions; the solve above is triangular, so a
    # failure here means a bug, not bad input.
    assert columns(result) == c
    assert all(result.entry(q, p) == h for (p, q), h in result.items())
    assert all(result.entry(n - p, n - q) == h for (p, q), h in result.items())
    return result


def mckay_compare(orb: HodgeDiamond, resolution: HodgeDiamond) -> McKayReport:
    """Compare an orbifold diamond with the diamond of a crepant resolution.

    When a crepant resolution exists the two coincide (cohomological McKay
    correspondence); that statement presumes the Gorenstein case, so a
    fractionally graded orbifold diamond is refused.
    """
    if orb.dim_n != resolution.dim_n:
        raise DimensionMismatchError(f"dimensions differ: {orb.dim_n} vs {resolution.dim_n}")
    if not orb.is_integer_graded():
        fractional = next(k for k in orb.keys() if k[0].denominator != 1 or k[1].denominator != 1)
        raise NonGorensteinOrbifoldError(
            "orbifold diamond has fractional grade "
            f"({format_grade(fractional[0])},{format_grade(fractional[1])}); "
            "the comparison needs Gorenstein singularities"
        )
    if not resolution.is_integer_graded():
        raise ValidationError("a resolution is smooth; its diamond must be integer graded")
    diffs = _entry_differences(orb, resolution, "entry")
    return McKayReport(equal=not diffs, differences=tuple(diffs))
