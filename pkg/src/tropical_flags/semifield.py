"""Semifields: commutative (+, x) with x-inverses but no zero and no subtraction.

Values are plain Python numbers; a :class:`Semifield` instance supplies the
operations.  Generic code (braid moves, the involution engine) must only call
``add``, ``mul``, ``inv``, ``pow`` and ``one``.

``TROPICAL`` is Z with a (+) b = min(a, b) and a (x) b = a + b, values ``int``.
``RATIONAL`` is the positive rationals with ordinary arithmetic, values
``fractions.Fraction``.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from fractions import Fraction
from functools import reduce
from typing import Any, Iterable


class Semifield(ABC):
    name: str
    one: Any

    @abstractmethod
    def add(self, a, b): ...

    @abstractmethod
    def mul(self, a, b): ...

    @abstractmethod
    def inv(self, a): ...

    def pow(self, a, n: int):
        if n < 0:
            return self.inv(self.pow(a, -n))
        out = self.one
        base = a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def sum(self, values: Iterable):
        """(+)-sum of a nonempty iterable; there is no empty sum."""
        return reduce(self.add, values)

    def prod(self, values: Iterable):
        return reduce(self.mul, values, self.one)

    @abstractmethod
    def coerce(self, value): ...

    @abstractmethod
    def parse(self, text: str): ...

    @abstractmethod
    def format(self, value) -> str: ...

    @abstractmethod
    def random(self, rng: random.Random): ...

    def __repr__(self) -> str:
        return f"<semifield {self.name}>"


class Tropical(Semifield):
    name = "trop"
    one = 0

    def add(self, a: int, b: int) -> int:
        return a if a <= b else b

    def mul(self, a: int, b: int) -> int:
        return a + b

    def inv(self, a: int) -> int:
        return -a

    def pow(self, a: int, n: int) -> int:
        return a * n

    def sum(self, values: Iterable[int]) -> int:
        return min(values)

    def prod(self, values: Iterable[int]) -> int:
        return sum(values)

    def coerce(self, value) -> int:
        if isinstance(value, bool) or int(value) != value:
            raise TypeError(f"tropical values are integers, got {value!r}")
        return int(value)

    def parse(self, text: str) -> int:
        return int(text.strip())

    def format(self, value: int) -> str:
        return str(value)

    def random(self, rng: random.Random, lo: int = -20, hi: int = 20) -> int:
        return rng.randint(lo, hi)


class PositiveRationals(Semifield):
    name = "rat"
    one = Fraction(1)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def inv(self, a: Fraction) -> Fraction:
        return 1 / a

    def pow(self, a: Fraction, n: int) -> Fraction:
        return a**n

    def coerce(self, value) -> Fraction:
        v = Fraction(value)
        if v <= 0:
            raise ValueError(f"positive rationals only, got {value!r}")
        return v

    def parse(self, text: str) -> Fraction:
        return self.coerce(Fraction(text.strip()))

    def format(self, value: Fraction) -> str:
        return str(value)

    def random(self, rng: random.Random, top: int = 9) -> Fraction:
        return Fraction(rng.randint(1, top), rng.randint(1, top))


TROPICAL = Tropical()
RATIONAL = PositiveRationals()

SEMIFIELDS = {"trop": TROPICAL, "rat": RATIONAL}


def get(name: str | Semifield) -> Semifield:
    if isinstance(name, Semifield):
        return name
    try:
        return SEMIFIELDS[name]
    except KeyError:
        raise ValueError(f"unknown semifield {name!r}; choose from {sorted(SEMIFIELDS)}") from None


def is_natural(a: int) -> bool:
    """Membership of a tropical value in the sub-semiring N."""
    return a >= 0
