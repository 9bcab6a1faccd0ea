"""Exact arithmetic on the lattice ``a + b*sqrt(2)`` with integer ``a, b``.

Every path length and detour penalty on an 8-connected unit grid lives on
this lattice, so searches run in this mode have no rounding at all.
Ordering is decided exactly by sign analysis; a float shortcut is taken
only when the two approximations are far enough apart to be conclusive.
"""

from __future__ import annotations

import math

SQRT2 = math.sqrt(2.0)

# float error of a + b*SQRT2 is ~1e-16 * (|a| + |b|); far below this for
# any coefficient a grid search can produce
_DECISIVE_GAP = 1e-6


def sign(a: int, b: int) -> int:
    """Exact sign of ``a + b*sqrt(2)``."""
    if a >= 0 and b >= 0:
        return 0 if a == 0 and b == 0 else 1
    if a <= 0 and b <= 0:
        return -1
    # opposite signs: compare a^2 with 2*b^2
    lhs, rhs = a * a, 2 * b * b
    if a > 0:
        return 1 if lhs > rhs else -1
    return -1 if lhs > rhs else 1


class Surd:
    __slots__ = ("a", "b", "approx")

    def __init__(self, a: int = 0, b: int = 0):
        self.a = a
        self.b = b
        self.approx = a + b * SQRT2

    def __repr__(self):
        return f"Surd({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = "sqrt2" if abs(self.b) == 1 else f"{abs(self.b)}sqrt2"
        if self.a == 0:
            return root if self.b > 0 else "-" + root
        op = "+" if self.b > 0 else "-"
        return f"{self.a}{op}{root}"

    def __float__(self):
        return self.approx

    def __hash__(self):
        return hash((self.a, self.b))

    def __add__(self, other):
        if other.__class__ is Surd:
            return Surd(self.a + other.a, self.b + other.b)
        if isinstance(other, int):
            return Surd(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if other.__class__ is Surd:
            return Surd(self.a - other.a, self.b - other.b)
        if isinstance(other, int):
            return Surd(self.a - other, self.b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return Surd(other - self.a, -self.b)
        return NotImplemented

    def __neg__(self):
        return Surd(-self.a, -self.b)

    def __mul__(self, k):
        if isinstance(k, int):
            return Surd(self.a * k, self.b * k)
        return NotImplemented

    __rmul__ = __mul__

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def sign(self) -> int:
        return sign(self.a, self.b)

    def _cmp(self, other) -> int:
        if other.__class__ is Surd:
            gap = self.approx - other.approx
            if gap > _DECISIVE_GAP:
                return 1
            if gap < -_DECISIVE_GAP:
                return -1
            return sign(self.a - other.a, self.b - other.b)
        if isinstance(other, int):
            return sign(self.a - other, self.b)
        if isinstance(other, float) and math.isinf(other):
            return -1 if other > 0 else 1
        raise TypeError(f"cannot compare Surd with {type(other).__name__}")

    def __eq__(self, other):
        if other.__class__ is Surd:
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if isinstance(other, float):
            return False if math.isinf(other) else NotImplemented
        return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0


ZERO = Surd(0, 0)
ONE = Surd(1, 0)
ROOT2 = Surd(0, 1)
