"""Exact coefficient arithmetic for the three supported domains.

Scalars are plain Python values: ``int`` for the integers and for prime-field
residues (kept canonical in ``[0, p)``), ``fractions.Fraction`` for the
rationals (Fraction keeps itself in lowest terms with a positive
denominator).  A :class:`Ring` value names the domain and supplies the
operations, so the rest of the package never branches on the kind itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import RingMismatch, UnsupportedRing

Scalar = Union[int, Fraction]

INTEGERS = "Z"
RATIONALS = "Q"
PRIME_FIELD = "GF"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class Ring:
    """Descriptor for the coefficient domain: Z, Q or GF(p) with p prime."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in (INTEGERS, RATIONALS, PRIME_FIELD):
            raise UnsupportedRing(f"unknown ring kind {self.kind!r}")
        if self.kind == PRIME_FIELD:
            if self.p is None or not _is_prime(self.p):
                raise UnsupportedRing(f"GF({self.p}) is not a prime field")
        elif self.p is not None:
            raise UnsupportedRing(f"{self.kind} takes no modulus")

    # -- construction ------------------------------------------------

    @staticmethod
    def integers() -> "Ring":
        return Ring(INTEGERS)

    @staticmethod
    def rationals() -> "Ring":
        return Ring(RATIONALS)

    @staticmethod
    def prime_field(p: int) -> "Ring":
        return Ring(PRIME_FIELD, p)

    @property
    def is_field(self) -> bool:
        return self.kind != INTEGERS

    # -- element handling --------------------------------------------

    def _check(self, x: Scalar) -> Scalar:
        if self.kind == RATIONALS:
            if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
                raise RingMismatch(f"{x!r} is not a rational scalar")
            return Fraction(x)
        if isinstance(x, bool) or not isinstance(x, int):
            raise RingMismatch(f"{x!r} is not a scalar of {self}")
        return x

    def canon(self, x: Scalar) -> Scalar:
        """Canonical form of ``x``: residues land in [0, p), rationals become Fraction."""
        x = self._check(x)
        if self.kind == PRIME_FIELD:
            return x % self.p
        return x

    def zero(self) -> Scalar:
        return Fraction(0) if self.kind == RATIONALS else 0

    def one(self) -> Scalar:
        return Fraction(1) if self.kind == RATIONALS else 1

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return self.canon(self._check(a) + self._check(b))

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return self.canon(self._check(a) * self._check(b))

    def neg(self, a: Scalar) -> Scalar:
        return self.canon(-self._check(a))

    def is_zero(self, a: Scalar) -> bool:
        return self.canon(a) == 0

    def mul_int(self, m: int, a: Scalar) -> Scalar:
        """``m . a`` for an integer multiplier (used by the AR1 rows)."""
        return self.canon(m * self._check(a))

    def render(self, a: Scalar) -> str:
        return str(self.canon(a))

    def parse(self, text: str) -> Scalar:
        """Parse a scalar literal: ``-3``, ``3/4`` (rationals only), residue ints."""
        text = text.strip()
        if self.kind == RATIONALS:
            try:
                return Fraction(text)
            except (ValueError, ZeroDivisionError) as exc:
                raise RingMismatch(f"bad rational literal {text!r}") from exc
        try:
            value = int(text)
        except ValueError as exc:
            raise RingMismatch(f"bad {self.kind} literal {text!r}") from exc
        return self.canon(value)

    def __str__(self):
        if self.kind == PRIME_FIELD:
            return f"GF({self.p})"
        return self.kind


def reduce_mod_order(ring: Ring, x: Scalar, r: int | None) -> tuple[Scalar, Scalar]:
    """Euclidean division of ``x`` by a relative order ``r``.

    Returns ``(quotient, remainder)`` with ``x = quotient*r + remainder`` and
    ``0 <= remainder < r``.  ``r = None`` (infinite order) leaves ``x``
    untouched.  Finite orders are only meaningful over the integers.
    """
    if r is None:
        return ring.zero(), ring.canon(x)
    if ring.kind != INTEGERS:
        raise UnsupportedRing(f"finite relative order {r} over {ring}")
    if r < 1:
        raise UnsupportedRing(f"relative order must be positive, got {r}")
    q, rem = divmod(ring.canon(x), r)
    return q, rem
