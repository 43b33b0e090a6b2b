"""
Exact dyadic angle arithmetic.

Synthesis only ever produces rotation angles that are dyadic multiples of pi
(theta = num/den * pi with den a power of two).  Representing them exactly as
integer fractions keeps phase tracking and theta solving free of float error:
equality mod 2*pi is integer arithmetic, and rendering is lossless.

The canonical range is (-pi, pi], i.e. num in (-den, den] after reduction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

MAX_DENOMINATOR = 64


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class Angle:
    """An angle num/den * pi with den a power of two, normalized to (-pi, pi]."""
    num: int
    den: int = 1

    def __post_init__(self):
        num, den = self.num, self.den
        if den == 0:
            raise ValueError("Angle denominator must be nonzero")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num, den)
        if g > 1:
            num, den = num // g, den // g
        if not _is_power_of_two(den) or den > MAX_DENOMINATOR:
            raise ValueError(f"Angle denominator {den} is not a power of two <= {MAX_DENOMINATOR}")
        # Reduce num*pi/den into (-pi, pi]: num into (-den, den].
        num = num % (2 * den)          # [0, 2*den)
        if num > den:
            num -= 2 * den             # (-den, den]
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def zero(cls) -> "Angle":
        return cls(0, 1)

    @classmethod
    def pi(cls) -> "Angle":
        return cls(1, 1)

    @classmethod
    def from_float(cls, theta: float, tol: float = 1e-9) -> "Angle":
        """Snap a float angle (radians) to the nearest dyadic fraction of pi."""
        frac = Fraction(theta / math.pi).limit_denominator(MAX_DENOMINATOR)
        if abs(float(frac) * math.pi - theta) % (2 * math.pi) > tol and \
           abs(abs(float(frac) * math.pi - theta) % (2 * math.pi) - 2 * math.pi) > tol:
            raise ValueError(f"{theta} is not a dyadic multiple of pi within {tol}")
        return cls(frac.numerator, frac.denominator)

    def __add__(self, other: "Angle") -> "Angle":
        return Angle(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "Angle") -> "Angle":
        return Angle(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "Angle":
        return Angle(-self.num, self.den)

    def __float__(self) -> float:
        return self.num * math.pi / self.den

    @property
    def radians(self) -> float:
        return float(self)

    def is_zero(self) -> bool:
        return self.num == 0

    def equals_mod_2pi(self, other: "Angle") -> bool:
        return (self - other).num == 0

    def as_positive(self) -> tuple[int, int]:
        """Return (num, den) with the angle wrapped into [0, 2*pi)."""
        num = self.num % (2 * self.den)
        return num, self.den

    def pi_string(self) -> str:
        """Render in [0, 2*pi) as a human-readable multiple of pi, e.g. '7π/4'."""
        num, den = self.as_positive()
        if num == 0:
            return "0"
        coeff = "" if num == 1 else str(num)
        return f"{coeff}π" if den == 1 else f"{coeff}π/{den}"

    def __str__(self) -> str:
        return f"{self.num}" if self.den == 1 else f"{self.num}/{self.den}"

    @classmethod
    def parse(cls, text: str) -> "Angle":
        """Parse 'num/den' or 'num' (implicit den=1), the circuit-file format."""
        text = text.strip()
        if "/" in text:
            num_s, den_s = text.split("/", 1)
            return cls(int(num_s), int(den_s))
        return cls(int(text), 1)


ZERO = Angle(0, 1)
PI = Angle(1, 1)
PI_2 = Angle(1, 2)
PI_4 = Angle(1, 4)
