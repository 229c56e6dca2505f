"""Exact calculus of vector bundles on P^1 in Grothendieck normal form.

Every vector bundle on P^1 is a direct sum of line bundles O(d_i), so a
finite multiset of integers pins it down completely.  This module works
with those multisets: cohomology, twisting, symmetric powers, Frobenius
pullback, nefness, and the splitting type of rank-2 extensions.

Multiplicities are kept aggregated, so balanced bundles with
astronomically many summands (high symmetric powers of O(d)^r) stay
constant-sized.  All arithmetic is unbounded-integer exact.

``DegreeForm`` is the symbolic companion: an affine integer form
``c0 + cb*b + cl*l`` in two nonnegative parameters.  When every summand of
a restricted bundle has the same parametric degree, one form certifies
h^0 = 0 for the whole parameter region at once.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Iterator

# Enumerating a symmetric power materializes one degree sum per monomial;
# refuse past this many monomials.  Balanced inputs never enumerate.
_SYM_ENUMERATION_LIMIT = 5_000_000

# degrees() refuses to expand multisets larger than this.
_EXPAND_LIMIT = 1_000_000


class AmbiguousExtensionError(ValueError):
    """Nonsplitness alone does not determine the middle term."""


class SplittingParseError(ValueError):
    """A splitting-type string does not match the ``[d1,d2,...]`` grammar."""


class SplittingType:
    """A finite multiset of integers: the degrees of a direct sum of O(d_i).

    The empty multiset is the zero bundle.  Instances are immutable and
    hashable; equality is multiset equality.
    """

    __slots__ = ("_pairs",)

    def __init__(self, degrees: Iterable[int] = ()):
        counts: Counter[int] = Counter(degrees)
        object.__setattr__(self, "_pairs", tuple(sorted(counts.items())))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "SplittingType":
        """Build from (degree, multiplicity) pairs; multiplicities must be > 0."""
        counts: Counter[int] = Counter()
        for d, r in pairs:
            if r < 0:
                raise ValueError(f"negative multiplicity {r} for degree {d}")
            if r:
                counts[d] += r
        st = cls.__new__(cls)
        object.__setattr__(st, "_pairs", tuple(sorted(counts.items())))
        return st

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Sorted (degree, multiplicity) pairs."""
        return self._pairs

    @property
    def rank(self) -> int:
        return sum(r for _, r in self._pairs)

    def degrees(self) -> tuple[int, ...]:
        """The expanded, sorted degree tuple (small multisets only)."""
        if self.rank > _EXPAND_LIMIT:
            raise ValueError(f"rank {self.rank} too large to expand")
        out: list[int] = []
        for d, r in self._pairs:
            out.extend([d] * r)
        return tuple(out)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SplittingType) and self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash(self._pairs)

    def __repr__(self) -> str:
        if self.rank <= 16:
            return f"SplittingType({list(self.degrees())})"
        return f"SplittingType.from_pairs({list(self._pairs)})"

    def is_zero(self) -> bool:
        return not self._pairs

    def is_balanced(self) -> bool:
        """True when every summand has the same degree (or the bundle is zero)."""
        return len(self._pairs) <= 1

    def min_degree(self) -> int | None:
        return self._pairs[0][0] if self._pairs else None

    def max_degree(self) -> int | None:
        return self._pairs[-1][0] if self._pairs else None

    # -- cohomology and positivity -------------------------------------

    def h0(self) -> int:
        """dim H^0 = sum of (d_i + 1) over summands with d_i >= 0."""
        return sum(r * (d + 1) for d, r in self._pairs if d >= 0)

    def h1(self) -> int:
        """dim H^1 = sum of (-d_i - 1) over summands with d_i <= -2."""
        return sum(r * (-d - 1) for d, r in self._pairs if d <= -2)

    def is_nef(self) -> bool:
        """Nef on P^1 means every summand has nonnegative degree."""
        return all(d >= 0 for d, _ in self._pairs)

    # -- constructions ---------------------------------------------------

    def twist(self, n: int) -> "SplittingType":
        """Tensor with O(n): shift every degree by n."""
        return SplittingType.from_pairs((d + n, r) for d, r in self._pairs)

    def frobenius_pullback(self, q: int) -> "SplittingType":
        """Pull back by the q-power Frobenius: multiply every degree by q."""
        if q < 2:
            raise ValueError(f"Frobenius power must be >= 2, got {q}")
        return SplittingType.from_pairs((d * q, r) for d, r in self._pairs)

    def sym_power(self, m: int) -> "SplittingType":
        """The m-th symmetric power.

        Degrees are the monomial weights: one summand per degree-m monomial
        in rank-many variables of weights d_i, so the rank of the result is
        comb(rank + m - 1, m).  Balanced input short-circuits to a single
        aggregated summand; anything else enumerates the monomials.
        """
        if m < 0:
            raise ValueError(f"symmetric power wants a nonnegative exponent, got {m}")
        if m == 0:
            return SplittingType((0,))
        if m == 1 or not self._pairs:
            return self
        if len(self._pairs) == 1:
            d, r = self._pairs[0]
            return SplittingType.from_pairs([(m * d, comb(r + m - 1, m))])
        n_monomials = comb(self.rank + m - 1, m)
        if n_monomials > _SYM_ENUMERATION_LIMIT:
            raise ValueError(
                f"symmetric power has {n_monomials} summands; refusing to "
                f"enumerate more than {_SYM_ENUMERATION_LIMIT}"
            )
        sums = Counter(
            sum(combo) for combo in combinations_with_replacement(self.degrees(), m)
        )
        return SplittingType.from_pairs(sums.items())


def classify_extension(sub_deg: int, quot_deg: int, nonsplit: bool) -> SplittingType:
    """Splitting type of a rank-2 extension 0 -> O(sub) -> E -> O(quot) -> 0.

    The extension group is H^1(O(sub - quot)).  When it vanishes every
    extension splits, nonsplit request or not.  When the degree gap is
    exactly -2 the group is one-dimensional and the unique nonsplit middle
    term is the balanced type {sub+1, quot-1}.  A wider gap leaves several
    candidate middle terms, so a nonsplit request is refused rather than
    guessed.
    """
    split = SplittingType((sub_deg, quot_deg))
    if not nonsplit:
        return split
    gap = sub_deg - quot_deg
    if gap >= -1:  # H^1(O(gap)) = 0: splitting is forced
        return split
    if gap == -2:
        return SplittingType((sub_deg + 1, quot_deg - 1))
    raise AmbiguousExtensionError(
        f"ambiguous splitting type: a nonsplit extension of O({quot_deg}) by "
        f"O({sub_deg}) is not determined by nonsplitness alone (degree gap {gap})"
    )


@dataclass(frozen=True)
class DegreeForm:
    """Affine integer form ``c0 + cb*b + cl*l`` over parameters b >= 1, l >= 0.

    The parameter region is fixed: b (written beta in prose) ranges over
    integers >= 1 and l over integers >= 0.
    """

    c0: int = 0
    cb: int = 0
    cl: int = 0

    @classmethod
    def constant(cls, c: int) -> "DegreeForm":
        return cls(c, 0, 0)

    def __call__(self, beta: int, ell: int = 0) -> int:
        return self.c0 + self.cb * beta + self.cl * ell

    def __add__(self, other: "DegreeForm") -> "DegreeForm":
        return DegreeForm(self.c0 + other.c0, self.cb + other.cb, self.cl + other.cl)

    def __neg__(self) -> "DegreeForm":
        return DegreeForm(-self.c0, -self.cb, -self.cl)

    def scale(self, n: int) -> "DegreeForm":
        return DegreeForm(n * self.c0, n * self.cb, n * self.cl)

    def is_constant(self) -> bool:
        return self.cb == 0 and self.cl == 0

    def times(self, other: "DegreeForm") -> "DegreeForm":
        """Product of two forms, defined only when it stays affine."""
        if other.is_constant():
            return self.scale(other.c0)
        if self.is_constant():
            return other.scale(self.c0)
        raise ValueError(
            "product of two non-constant degree forms is not affine in (b, l)"
        )

    def is_negative_on_region(self) -> bool:
        """True iff the form is < 0 for every integer b >= 1, l >= 0.

        A positive slope escapes to +infinity along its axis; with both
        slopes nonpositive the supremum over the region sits at (1, 0).
        """
        return self.cl <= 0 and self.cb <= 0 and self.c0 + self.cb < 0

    def nonnegative_witness(self) -> tuple[int, int] | None:
        """A point (b, l) of the region where the form is >= 0, if any."""
        if self.is_negative_on_region():
            return None
        if self(1, 0) >= 0:
            return (1, 0)
        if self.cl > 0:
            need = -(self.c0 + self.cb)  # want cl*l >= need at b = 1
            return (1, -(-need // self.cl))
        # cl <= 0 here, so cb > 0 and l = 0 is optimal
        need = -self.c0
        return (-(-need // self.cb), 0)

    def __str__(self) -> str:
        s = str(self.c0)
        for coeff, var in ((self.cb, "b"), (self.cl, "l")):
            s += f" - {-coeff}*{var}" if coeff < 0 else f" + {coeff}*{var}"
        return s

    def compact(self) -> str:
        """Short human form, e.g. ``-b - 2l`` or ``15b - 2l`` or ``0``."""
        parts: list[str] = []
        for coeff, var in ((self.c0, ""), (self.cb, "b"), (self.cl, "l")):
            if coeff == 0:
                continue
            mag = abs(coeff)
            body = f"{'' if mag == 1 and var else mag}{var}"
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"{'-' if coeff < 0 else '+'} {body}")
        return " ".join(parts) if parts else "0"


# Past this rank the text form aggregates equal degrees as "d x mult".
_FORMAT_EXPAND_LIMIT = 1000


def parse_splitting(text: str) -> SplittingType:
    """Parse ``[d1,d2,...]`` (possibly ``[]``) into a splitting type.

    Whitespace is tolerated around tokens but not inside a number.
    """
    trimmed = text.strip()
    if len(trimmed) < 2 or not (trimmed.startswith("[") and trimmed.endswith("]")):
        raise SplittingParseError(f"expected [d1,d2,...], got {text!r}")
    body = trimmed[1:-1].strip()
    if not body:
        return SplittingType()
    degrees = []
    for token in body.split(","):
        token = token.strip()
        try:
            degrees.append(int(token))
        except ValueError:
            raise SplittingParseError(f"bad degree {token!r} in {text!r}") from None
    return SplittingType(degrees)


def format_splitting(s: SplittingType) -> str:
    """Canonical text form; round-trips through parse_splitting when expanded."""
    if s.rank <= _FORMAT_EXPAND_LIMIT:
        return "[" + ",".join(str(d) for d in s.degrees()) + "]"
    return "[" + ", ".join(f"{d} x {r}" for d, r in s.pairs) + "]"
