from dataclasses import dataclass
from fractions import Fraction
from math import log10
from typing import Union

Number = Union[int, Fraction]


@dataclass(frozen=True, eq=False)
class ScaledRational:
    """Exact value ``coefficient * base**exponent``.

    Vertex counts of the scanned graphs have exponents far beyond anything that
    can be materialised, so the power is kept symbolic and only the rational
    coefficient is stored.
    """

    coefficient: Fraction
    base: int
    exponent: int

    def __post_init__(self):
        if self.base < 2:
            raise ValueError(f"Base must be at least 2, got {self.base}")
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))

    __hash__ = None

    @classmethod
    def power(cls, base: int, exponent: int) -> "ScaledRational":
        return cls(Fraction(1), base, exponent)

    def scale(self, factor: Number) -> "ScaledRational":
        return ScaledRational(self.coefficient * factor, self.base, self.exponent)

    def __mul__(self, other):
        if isinstance(other, ScaledRational):
            if other.base != self.base:
                return NotImplemented
            return ScaledRational(
                self.coefficient * other.coefficient,
                self.base,
                self.exponent + other.exponent,
            )
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.coefficient == 0

    def is_nonnegative(self) -> bool:
        return self.coefficient >= 0

    def is_integer(self) -> bool:
        """Decide integrality without expanding the power.

        For a non-negative exponent the value is integral iff the reduced
        denominator d divides base**exponent, and d divides a power of the base
        iff it divides base**bitlen(d).
        """
        numerator = self.coefficient.numerator
        denominator = self.coefficient.denominator
        if numerator == 0:
            return True
        if self.exponent >= 0:
            if denominator == 1:
                return True
            steps = min(self.exponent, denominator.bit_length())
            return pow(self.base, steps, denominator) == 0
        # base**|e| > |numerator| once |e| exceeds its bit length
        if -self.exponent > numerator.bit_length():
            return False
        return numerator % (denominator * self.base ** (-self.exponent)) == 0

    def to_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return self.coefficient * self.base**self.exponent
        return self.coefficient / self.base ** (-self.exponent)

    def to_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        value = self.to_fraction()
        return value.numerator

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ScaledRational(Fraction(other), self.base, 0)
        if not isinstance(other, ScaledRational) or other.base != self.base:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if (self.coefficient > 0) != (other.coefficient > 0):
            return False
        high, low = (self, other) if self.exponent >= other.exponent else (other, self)
        gap = high.exponent - low.exponent
        # |high| >= 2**gap / den(high) > |low| beyond this bound
        bound = high.coefficient.denominator.bit_length() + abs(low.coefficient.numerator).bit_length()
        if gap > bound:
            return False
        return high.coefficient * self.base**gap == low.coefficient

    def format(self, max_digits: int = 60) -> str:
        if abs(self.exponent) * log10(self.base) <= max_digits:
            return str(self.to_fraction())
        return f"{self.coefficient}*{self.base}^{self.exponent}"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"ScaledRational({self.coefficient!s}, {self.base}, {self.exponent})"
