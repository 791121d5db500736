"""Exact bookkeeping for rationally bigraded Hodge diamonds.

A diamond is a sparse map (p, q) -> h^{p,q} with positive integer values
and exact rational bidegrees 0 <= p, q <= n.  Fractional bidegrees occur
for orbifolds with non-Gorenstein quotient singularities, where twisted
sectors shift cohomology by a fractional age; p - q nevertheless stays an
integer because both coordinates shift by the same amount.  All arithmetic
uses `fractions.Fraction`; no floating point appears anywhere in this
package.

Besides the diamond itself the module provides its two classical
symmetries (Serre duality and conjugation/Hodge symmetry), the diagonal
column sums that compute Hochschild homology dimensions, and the signed
stringy E-polynomial of an orbifold presentation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import TYPE_CHECKING, Iterable, Mapping, Tuple, Union

from .errors import ValidationError

if TYPE_CHECKING:
    from .inertia import OrbifoldPresentation

#: Exact rational bidegree coordinate.
Grade = Fraction

#: Anything `as_grade` accepts: an int, a Fraction, or an "a/b" string.
GradeLike = Union[int, Fraction, str]

GradeKey = Tuple[Grade, Grade]


def as_grade(value: GradeLike) -> Grade:
    """Coerce an int, Fraction or exact "a/b" string to a grade.

    Floats are rejected: decimal notation cannot represent grades like 1/3
    exactly, and silently accepting floats would corrupt exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValidationError(f"not an exact rational grade: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"not an exact rational grade: {value!r}") from exc
    raise ValidationError(f"not an exact rational grade: {value!r} (use int, Fraction or 'a/b')")


def format_grade(g: Grade) -> str:
    """Render a grade exactly: "2" for integers, "3/2" otherwise."""
    return str(g.numerator) if g.denominator == 1 else f"{g.numerator}/{g.denominator}"


class HodgeDiamond:
    """Sparse map of Hodge numbers of one space, possibly rationally graded.

    Invariants enforced at construction:

    * every stored dimension is a positive integer (zeros are dropped);
    * every key satisfies 0 <= p, q <= dim_n;
    * p - q is an integer for every key.

    `level` records the least common multiple of the automorphism orders
    the diamond was assembled from (1 for a plain variety); every grade
    denominator divides it.  Two diamonds are equal when their dimensions
    and normalized entry maps agree; `level` is derived data and ignored.
    Instances are immutable.
    """

    __slots__ = ("_dim_n", "_level", "_entries")

    def __init__(
        self,
        dim_n: int,
        entries: Mapping[Tuple[GradeLike, GradeLike], int] | Iterable[tuple[Tuple[GradeLike, GradeLike], int]],
        level: int = 1,
    ):
        if not isinstance(dim_n, int) or isinstance(dim_n, bool) or dim_n < 0:
            raise ValidationError(f"dimension must be a nonnegative integer, got {dim_n!r}")
        if not isinstance(level, int) or level < 1:
            raise ValidationError(f"level must be a positive integer, got {level!r}")
        items = entries.items() if isinstance(entries, Mapping) else entries
        cleaned: dict[GradeKey, int] = {}
        for (p_raw, q_raw), h in items:
            if not isinstance(h, int) or isinstance(h, bool):
                raise ValidationError(f"dimension h^{{{p_raw},{q_raw}}} must be an integer, got {h!r}")
            if h < 0:
                raise ValidationError(f"negative dimension h^{{{p_raw},{q_raw}}} = {h}")
            if h == 0:
                continue
            p, q = as_grade(p_raw), as_grade(q_raw)
            if not (0 <= p <= dim_n and 0 <= q <= dim_n):
                raise ValidationError(f"grade ({format_grade(p)},{format_grade(q)}) outside [0, {dim_n}]")
            if (p - q).denominator != 1:
                raise ValidationError(
                    f"p - q must be an integer; got ({format_grade(p)},{format_grade(q)})"
                )
            cleaned[(p, q)] = cleaned.get((p, q), 0) + h
        for (p, q) in cleaned:
            level = math.lcm(level, p.denominator, q.denominator)
        self._dim_n = dim_n
        self._level = level
        self._entries = dict(sorted(cleaned.items()))

    @property
    def dim_n(self) -> int:
        return self._dim_n

    @property
    def level(self) -> int:
        return self._level

    @property
    def entries(self) -> Mapping[GradeKey, int]:
        """Read-only view of the normalized (p, q) -> h map."""
        return MappingProxyType(self._entries)

    def entry(self, p: GradeLike, q: GradeLike) -> int:
        """h^{p,q}, with 0 for any absent key."""
        return self._entries.get((as_grade(p), as_grade(q)), 0)

    def items(self):
        return self._entries.items()

    def keys(self):
        return self._entries.keys()

    def total(self) -> int:
        """Total dimension: the sum of all stored Hodge numbers."""
        return sum(self._entries.values())

    def is_integer_graded(self) -> bool:
        """True when every stored bidegree is integral."""
        return all(p.denominator == 1 and q.denominator == 1 for p, q in self._entries)

    @classmethod
    def projective_space(cls, n: int) -> "HodgeDiamond":
        """Diamond of P^n: h^{p,p} = 1 for 0 <= p <= n."""
        return cls(n, {(p, p): 1 for p in range(n + 1)})

    @classmethod
    def point(cls) -> "HodgeDiamond":
        return cls.projective_space(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HodgeDiamond):
            return NotImplemented
        return self._dim_n == other._dim_n and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self._dim_n, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        body = ", ".join(
            f"({format_grade(p)},{format_grade(q)}): {h}" for (p, q), h in self._entries.items()
        )
        return f"HodgeDiamond(dim_n={self._dim_n}, {{{body}}})"


class ColumnVector:
    """Diagonal sums of a diamond: cols[i] = sum of h^{p,q} over p - q = i.

    These are the graded dimensions of Hochschild homology, the basic
    derived-equivalence invariant.  Zero columns are not stored; indexing
    an absent column yields 0.
    """

    __slots__ = ("_dim_n", "_cols")

    def __init__(self, dim_n: int, cols: Mapping[int, int]):
        if not isinstance(dim_n, int) or isinstance(dim_n, bool) or dim_n < 0:
            raise ValidationError(f"dimension must be a nonnegative integer, got {dim_n!r}")
        cleaned: dict[int, int] = {}
        for i, v in cols.items():
            if not isinstance(i, int) or isinstance(i, bool):
                raise ValidationError(f"column index must be an integer, got {i!r}")
            if not (-dim_n <= i <= dim_n):
                raise ValidationError(f"column index {i} outside [-{dim_n}, {dim_n}]")
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValidationError(f"column value at {i} must be a nonnegative integer, got {v!r}")
            if v:
                cleaned[i] = v
        self._dim_n = dim_n
        self._cols = dict(sorted(cleaned.items()))

    @property
    def dim_n(self) -> int:
        return self._dim_n

    @property
    def cols(self) -> Mapping[int, int]:
        return MappingProxyType(self._cols)

    def __getitem__(self, i: int) -> int:
        return self._cols.get(i, 0)

    def items(self):
        return self._cols.items()

    def total(self) -> int:
        return sum(self._cols.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColumnVector):
            return NotImplemented
        return self._dim_n == other._dim_n and self._cols == other._cols

    def __hash__(self) -> int:
        return hash((self._dim_n, frozenset(self._cols.items())))

    def __repr__(self) -> str:
        return f"ColumnVector(dim_n={self._dim_n}, {self._cols})"


class StringyPolynomial:
    """Signed generating polynomial sum of +-h^{p,q} u^p v^q with rational exponents.

    Coefficients may be negative; zero coefficients are not stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Tuple[GradeLike, GradeLike], int]):
        cleaned: dict[GradeKey, int] = {}
        for (p_raw, q_raw), c in terms.items():
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValidationError(f"coefficient at ({p_raw},{q_raw}) must be an integer, got {c!r}")
            if c == 0:
                continue
            cleaned[(as_grade(p_raw), as_grade(q_raw))] = c
        self._terms = dict(sorted(cleaned.items()))

    @property
    def terms(self) -> Mapping[GradeKey, int]:
        return MappingProxyType(self._terms)

    def coefficient(self, p: GradeLike, q: GradeLike) -> int:
        return self._terms.get((as_grade(p), as_grade(q)), 0)

    def items(self):
        return self._terms.items()

    def __eq__(self, other) -> bool:
        if not isinstance(other, StringyPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        body = ", ".join(
            f"({format_grade(p)},{format_grade(q)}): {c}" for (p, q), c in self._terms.items()
        )
        return f"StringyPolynomial({{{body}}})"


@dataclass(frozen=True)
class SymmetryReport:
    serre: bool
    hodge: bool


def serre_dual(d: HodgeDiamond) -> HodgeDiamond:
    """The diamond with entry (p, q) taken from (n-p, n-q) of the input."""
    n = d.dim_n
    return HodgeDiamond(n, {(n - p, n - q): h for (p, q), h in d.items()}, level=d.level)


def check_symmetries(d: HodgeDiamond) -> SymmetryReport:
    """Report whether Serre duality and conjugation symmetry hold.

    `serre` is true iff d equals its Serre dual; `hodge` iff
    h^{p,q} = h^{q,p} for all keys.  Both are reported rather than
    enforced so that raw, possibly non-Kaehler-style data can still be
    inspected.
    """
    hodge = all(d.entry(q, p) == h for (p, q), h in d.items())
    return SymmetryReport(serre=(d == serre_dual(d)), hodge=hodge)


def columns(d: HodgeDiamond) -> ColumnVector:
    """Sum the diamond along diagonals p - q = i.

    Well-defined because p - q is an integer for every stored key.
    """
    cols: dict[int, int] = {}
    for (p, q), h in d.items():
        i = int(p - q)
        cols[i] = cols.get(i, 0) + h
    return ColumnVector(d.dim_n, cols)


def stringy_e(presentation: "OrbifoldPresentation") -> StringyPolynomial:
    """Stringy E-polynomial of an orbifold presentation.

    Each sector with age a and coarse-space Hodge numbers h^{p',q'}
    contributes (-1)^{p'+q'} h^{p',q'} at (p'+a, q'+a).  The sign is taken
    from the integer bidegrees of the underlying variety before shifting,
    since (-1)^{p+q} is ill-defined for fractional exponents.  For
    Gorenstein quotient singularities the result agrees with Batyrev's
    stringy invariant.
    """
    terms: dict[GradeKey, int] = {}
    for c in presentation.components:
        a = c.age()
        for (p, q), h in c.coarse_diamond.items():
            sign = -1 if (int(p) + int(q)) % 2 else 1
            key = (p + a, q + a)
            terms[key] = terms.get(key, 0) + sign * h
    return StringyPolynomial(terms)
