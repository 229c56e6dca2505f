"""Picard lattice of the Hirzebruch surface F_e.

F_e is the ruled surface P(O + O(-e)) over P^1.  Its Picard group is free
of rank 2; we fix the basis C, F where C is the section with C.C = -e and
F is the class of a fiber of the ruling.  A divisor class is the exact
integer pair (a, b) standing for a*C + b*F, and the intersection form is
determined by

    C.C = -e,   C.F = 1,   F.F = 0.

The positivity cones of F_e are rational polyhedral in this basis:

    nef:    a >= 0 and b >= e*a     (dual to the Mori cone spanned by C, F)
    ample:  a > 0  and b > e*a      (interior of the nef cone)
    psef:   a >= 0 and b >= 0       (effective cone, spanned by C and F)
    big:    a > 0  and b > 0        (interior of the effective cone)

Everything here is pure integer arithmetic on immutable values; every
function is safe to call from any thread.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class ClassParseError(ValueError):
    """A divisor-class string does not match the ``[n]C±[m]F`` grammar."""


@dataclass(frozen=True)
class DivisorClass:
    """An integral class ``a*C + b*F`` in Pic(F_e)."""

    a: int
    b: int

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.a, -self.b)

    def __mul__(self, n: int) -> "DivisorClass":
        return DivisorClass(self.a * n, self.b * n)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_class(self)


#: The section class (self-intersection -e) and the fiber class.
C = DivisorClass(1, 0)
F = DivisorClass(0, 1)
ZERO = DivisorClass(0, 0)


@dataclass(frozen=True)
class SurfaceContext:
    """The Hirzebruch surface F_e: the twist e plus everything derived from it."""

    e: int = 2

    def __post_init__(self) -> None:
        if self.e < 0:
            raise ValueError(f"Hirzebruch twist must be nonnegative, got e={self.e}")

    @property
    def canonical_class(self) -> DivisorClass:
        return DivisorClass(-2, -(self.e + 2))

    def intersect(self, d1: DivisorClass, d2: DivisorClass) -> int:
        """Symmetric bilinear intersection pairing of two classes."""
        return -self.e * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b

    def is_nef(self, d: DivisorClass) -> bool:
        return d.a >= 0 and d.b >= self.e * d.a

    def is_ample(self, d: DivisorClass) -> bool:
        # On a Hirzebruch surface ample and very ample coincide.
        return d.a > 0 and d.b > self.e * d.a

    def is_psef(self, d: DivisorClass) -> bool:
        return d.a >= 0 and d.b >= 0

    def is_big(self, d: DivisorClass) -> bool:
        return d.a > 0 and d.b > 0


_TERM_RE = re.compile(r"([+-]?)(\d*)([CF])")


def parse_class(text: str) -> DivisorClass:
    """Parse ``[n]C±[m]F`` (each term optional, at most once) into a class.

    Whitespace is ignored.  Terms after the first must carry an explicit
    sign, and repeating a generator is an error, so the map from accepted
    strings to classes is unambiguous.
    """
    compact = "".join(text.split())
    if not compact:
        raise ClassParseError("empty divisor-class string")
    coeffs: dict[str, int | None] = {"C": None, "F": None}
    pos = 0
    first = True
    while pos < len(compact):
        m = _TERM_RE.match(compact, pos)
        if m is None:
            raise ClassParseError(
                f"unexpected token {compact[pos:]!r} at position {pos} in {text!r}"
            )
        sign, digits, gen = m.groups()
        if not first and not sign:
            raise ClassParseError(
                f"missing '+' or '-' before term {m.group(0)!r} in {text!r}"
            )
        if coeffs[gen] is not None:
            raise ClassParseError(f"repeated {gen} term {m.group(0)!r} in {text!r}")
        n = int(digits) if digits else 1
        coeffs[gen] = -n if sign == "-" else n
        pos = m.end()
        first = False
    ca, cf = coeffs["C"], coeffs["F"]
    return DivisorClass(ca if ca is not None else 0, cf if cf is not None else 0)


def format_class(d: DivisorClass) -> str:
    """Canonical text form; ``parse_class(format_class(d)) == d``."""
    if d.a == 0 and d.b == 0:
        return "0C+0F"
    parts: list[str] = []
    for coeff, gen in ((d.a, "C"), (d.b, "F")):
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else ("+" if parts else "")
        mag = abs(coeff)
        parts.append(f"{sign}{'' if mag == 1 else mag}{gen}")
    return "".join(parts)
