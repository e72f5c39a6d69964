"""Scalar backends.

All geometry in this package is parameterized over a scalar backend:

* ``rational`` -- exact arithmetic on :class:`fractions.Fraction`.  Every
  identity this library checks (Barbier, area gaps, dual-ball relations, ...)
  holds exactly in this mode, so equality predicates are literal ``==``.
* ``float`` -- binary64 arithmetic with a fixed comparison tolerance.  Useful
  for rendering and long convergence runs where exact coordinates would grow.

Backends own only the *predicates* (equality, sign, zero tests) and the
conversion of raw input values; ordinary ``+ - * /`` is done directly on the
scalars, which works uniformly for ``Fraction`` and ``float``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int, float]

DEFAULT_EPS = 1e-9


class Backend:
    """Base interface; use the RATIONAL / FLOAT singletons or get_backend()."""

    name: str
    exact: bool

    def convert(self, value) -> Scalar:
        raise NotImplementedError

    def eq(self, a: Scalar, b: Scalar) -> bool:
        raise NotImplementedError

    def is_zero(self, a: Scalar) -> bool:
        return self.eq(a, 0)

    def sign(self, a: Scalar) -> int:
        raise NotImplementedError

    def le(self, a: Scalar, b: Scalar) -> bool:
        return self.sign(a - b) <= 0

    def lt(self, a: Scalar, b: Scalar) -> bool:
        return self.sign(a - b) < 0

    def to_json(self, a: Scalar):
        raise NotImplementedError


class RationalBackend(Backend):
    name = "rational"
    exact = True

    def convert(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, bool):
            raise TypeError("boolean is not a coordinate")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, float):
            if not math.isfinite(value):
                raise ValueError(f"non-finite coordinate {value!r}")
            # exact base-10 reading of the shortest decimal repr
            return Fraction(repr(value))
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"cannot convert {type(value).__name__} to rational scalar")

    def eq(self, a, b) -> bool:
        return a == b

    def sign(self, a) -> int:
        if a > 0:
            return 1
        if a < 0:
            return -1
        return 0

    def to_json(self, a):
        f = Fraction(a)
        if f.denominator == 1:
            return int(f)
        return f"{f.numerator}/{f.denominator}"


class FloatBackend(Backend):
    name = "float"
    exact = False

    def __init__(self, eps: float = DEFAULT_EPS):
        self.eps = float(eps)

    def convert(self, value) -> float:
        if isinstance(value, str):
            value = float(Fraction(value))
        out = float(value)
        if not math.isfinite(out):
            raise ValueError(f"non-finite coordinate {value!r}")
        return out

    def eq(self, a, b) -> bool:
        return abs(a - b) <= self.eps

    def sign(self, a) -> int:
        if a > self.eps:
            return 1
        if a < -self.eps:
            return -1
        return 0

    def to_json(self, a):
        return float(a)


RATIONAL = RationalBackend()
FLOAT = FloatBackend()


def get_backend(name: str, eps: float = DEFAULT_EPS) -> Backend:
    if name == "rational":
        return RATIONAL
    if name == "float":
        return FloatBackend(eps) if eps != DEFAULT_EPS else FLOAT
    raise ValueError(f"unknown backend {name!r} (expected 'rational' or 'float')")


def parse_scalar(text, backend: Backend) -> Scalar:
    """Parse a CLI/JSON scalar: int, decimal, or exact 'p/q' string."""
    return backend.convert(text)
