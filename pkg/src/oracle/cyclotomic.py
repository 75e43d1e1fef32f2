from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np

from src.core.exceptions import UnsupportedOperationError

# Powers of a primitive q-th root of unity as integer coordinates (x, y),
# meaning (x + y*sqrt(-d)) / scale.
ROOT_COORDINATES = {
    2: np.array([[1, 0], [-1, 0]], dtype=np.int64),
    3: np.array([[2, 0], [-1, 1], [-1, -1]], dtype=np.int64),
    4: np.array([[1, 0], [0, 1], [-1, 0], [0, -1]], dtype=np.int64),
}
ROOT_SCALE = {2: 1, 3: 2, 4: 1}
RADICAND = {2: 1, 3: 3, 4: 1}


def check_alphabet(q: int) -> None:
    if q not in ROOT_COORDINATES:
        raise UnsupportedOperationError(f"Exact character arithmetic is implemented for q in {{2,3,4}}, got q={q}")


@dataclass(frozen=True)
class CycloValue:
    """Exact element real + imag*sqrt(-d) of Q(sqrt(-d)).

    d = 1 holds Q(i) for q = 2, 4; d = 3 holds Q(w) for q = 3.
    """

    real: Fraction
    imag: Fraction
    d: int = 1

    def __post_init__(self):
        object.__setattr__(self, "real", Fraction(self.real))
        object.__setattr__(self, "imag", Fraction(self.imag))

    @classmethod
    def from_coordinates(cls, q: int, x: int, y: int) -> "CycloValue":
        scale = ROOT_SCALE[q]
        return cls(Fraction(int(x), scale), Fraction(int(y), scale), RADICAND[q])

    @classmethod
    def root_of_unity(cls, q: int, power: int) -> "CycloValue":
        """xi_q ** power."""
        check_alphabet(q)
        x, y = ROOT_COORDINATES[q][power % q]
        return cls.from_coordinates(q, x, y)

    @classmethod
    def from_residue_counts(cls, q: int, counts: Sequence[int]) -> "CycloValue":
        """sum_r counts[r] * xi_q**(-r)."""
        check_alphabet(q)
        conjugates = ROOT_COORDINATES[q][(-np.arange(q)) % q]
        x, y = np.asarray(counts, dtype=np.int64) @ conjugates
        return cls.from_coordinates(q, x, y)

    def _coerce(self, other) -> "CycloValue":
        if isinstance(other, CycloValue):
            if other.d != self.d and not (other.imag == 0 or self.imag == 0):
                raise ValueError(f"Cannot combine values over sqrt(-{self.d}) and sqrt(-{other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloValue(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self.d if self.imag != 0 else other.d
        return CycloValue(self.real + other.real, self.imag + other.imag, d)

    __radd__ = __add__

    def __neg__(self):
        return CycloValue(-self.real, -self.imag, self.d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self.d if self.imag != 0 else other.d
        return CycloValue(
            self.real * other.real - d * self.imag * other.imag,
            self.real * other.imag + self.imag * other.real,
            d,
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.real == other.real and self.imag == other.imag

    def __hash__(self):
        return hash((self.real, self.imag))

    def conjugate(self) -> "CycloValue":
        return CycloValue(self.real, -self.imag, self.d)

    def norm(self) -> Fraction:
        """|value|^2."""
        return self.real**2 + self.d * self.imag**2

    def is_zero(self) -> bool:
        return self.real == 0 and self.imag == 0

    def half_integer_form(self) -> Tuple[int, int]:
        """(a, b) with value = (a + b*sqrt(-d)) / 2, if both are integers."""
        a, b = 2 * self.real, 2 * self.imag
        if a.denominator != 1 or b.denominator != 1:
            raise ValueError(f"{self} is not of the form (a + b*sqrt(-{self.d}))/2")
        return a.numerator, b.numerator

    def __str__(self):
        if self.imag == 0:
            return str(self.real)
        root = "i" if self.d == 1 else f"sqrt(-{self.d})"
        sign = "-" if self.imag < 0 else "+"
        return f"{self.real} {sign} {abs(self.imag)}*{root}"

