"""Exact coefficient fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEFAULT_PRIME = 32003


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """A coefficient field.

    ``p == 0`` means the rationals (elements are :class:`fractions.Fraction`);
    otherwise elements of GF(p) are plain ints in ``range(p)``.
    """

    p: int = 0

    def __post_init__(self):
        if self.p and (not _is_prime(self.p) or self.p <= 2):
            raise ValueError(f"characteristic must be an odd prime, got {self.p}")

    @classmethod
    def rationals(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> "Field":
        return cls(p)

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def __call__(self, value):
        """Coerce an int, Fraction or numeric string into the field."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.p:
            if isinstance(value, Fraction):
                if value.denominator % self.p == 0:
                    raise ZeroDivisionError(f"{value} has no image in GF({self.p})")
                return value.numerator * pow(value.denominator, -1, self.p) % self.p
            return int(value) % self.p
        return Fraction(value)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(a, -1, self.p)
        return 1 / a

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def signed(self, a) -> int | Fraction:
        """Representative used for printing: symmetric residue for GF(p)."""
        if self.p:
            return a - self.p if a > self.p // 2 else a
        return a

    def __str__(self) -> str:
        return f"GF({self.p})" if self.p else "QQ"
