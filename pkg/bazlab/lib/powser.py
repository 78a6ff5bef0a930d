"""Truncated complex Taylor series about 0.

A :class:`Series` of order ``N`` holds the coefficients ``c_0 .. c_N`` of

    f(z) = c_0 + c_1 z + ... + c_N z^N + O(z^(N+1))

Coefficients above ``N`` are unknown, not zero, so every binary operation
truncates to the smaller order of its operands. Series are immutable; every
operation returns a new instance.
"""

from __future__ import annotations

import json
import math
import cmath
import logging
from typing import Any, Union, Iterable, Sequence

import numpy as np
from pydantic import GetCoreSchemaHandler
from pydantic_core import CoreSchema, core_schema

from .._constants import R_MAX, UNIT_TOL, MIN_CIRCLE_POINTS
from .._exceptions import (
    SeriesError,
    QuadratureError,
    RadiusOutOfRange,
    ZeroConstantTerm,
    NonUnitConstantTerm,
    NonzeroInnerConstant,
)

__all__ = [
    "Series",
    "add",
    "sub",
    "mul",
    "div",
    "scale",
    "deriv",
    "antideriv",
    "theta_deriv",
    "times_z",
    "divide_by_z",
    "log_unit",
    "exp_series",
    "pow_real",
    "compose",
    "evaluate",
    "evaluate_points",
    "eval_circle",
]

log: logging.Logger = logging.getLogger(__name__)

Number = Union[int, float, complex]


class Series:
    """Immutable truncated power series with double-precision complex coefficients."""

    __slots__ = ("_c",)

    _c: np.ndarray

    def __init__(self, coeffs: Iterable[Number] | np.ndarray, order: int | None = None) -> None:
        c = np.array(coeffs, dtype=np.complex128)
        if c.ndim != 1 or c.size == 0:
            raise SeriesError("A series needs a one-dimensional, non-empty coefficient list")
        if order is not None:
            if order < 0:
                raise SeriesError(f"order cannot be negative, got {order}")
            if order + 1 <= c.size:
                c = c[: order + 1].copy()
            else:
                c = np.concatenate([c, np.zeros(order + 1 - c.size, dtype=np.complex128)])
        if not np.all(np.isfinite(c)):
            raise SeriesError("Series coefficients must be finite")
        c.setflags(write=False)
        self._c = c

    @classmethod
    def _wrap(cls, c: np.ndarray) -> Series:
        # trusted internal constructor: `c` is a fresh complex128 array
        if not np.all(np.isfinite(c)):
            raise SeriesError("Series arithmetic produced non-finite coefficients")
        obj = cls.__new__(cls)
        c.setflags(write=False)
        obj._c = c
        return obj

    @classmethod
    def constant(cls, value: Number, order: int) -> Series:
        return cls([value], order=order)

    @classmethod
    def identity(cls, order: int) -> Series:
        """The series ``z``."""
        return cls([0.0, 1.0], order=order)

    @classmethod
    def monomial(cls, degree: int, order: int, coefficient: Number = 1.0) -> Series:
        c = np.zeros(order + 1, dtype=np.complex128)
        if degree <= order:
            c[degree] = coefficient
        return cls._wrap(c)

    @classmethod
    def geometric(cls, order: int) -> Series:
        """``1/(1-z) = 1 + z + z^2 + ...``"""
        return cls._wrap(np.ones(order + 1, dtype=np.complex128))

    @property
    def order(self) -> int:
        return self._c.size - 1

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only view of ``c_0 .. c_N``."""
        return self._c

    def __len__(self) -> int:
        return self._c.size

    def __getitem__(self, n: int) -> complex:
        return complex(self._c[n])

    def __iter__(self):  # type: ignore[no-untyped-def]
        return (complex(x) for x in self._c)

    def __repr__(self) -> str:
        shown = ", ".join(f"{x:.6g}" for x in self._c[:6])
        more = ", ..." if self._c.size > 6 else ""
        return f"Series([{shown}{more}], order={self.order})"

    def __add__(self, other: Series | Number) -> Series:
        if isinstance(other, Series):
            return add(self, other)
        c = self._c.copy()
        c[0] += other
        return Series._wrap(c)

    __radd__ = __add__

    def __sub__(self, other: Series | Number) -> Series:
        if isinstance(other, Series):
            return sub(self, other)
        return self + (-other)

    def __rsub__(self, other: Number) -> Series:
        return (-self) + other

    def __neg__(self) -> Series:
        return Series._wrap(-self._c)

    def __mul__(self, other: Series | Number) -> Series:
        if isinstance(other, Series):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: Series | Number) -> Series:
        if isinstance(other, Series):
            return div(self, other)
        return scale(self, 1.0 / other)

    def __call__(self, z: Number) -> complex:
        return evaluate(self, z)

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise SeriesError(f"Cannot raise the order of a truncated series from {self.order} to {order}")
        return Series._wrap(self._c[: order + 1].copy())

    def to_pairs(self) -> list[list[float]]:
        return [[float(x.real), float(x.imag)] for x in self._c]

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[float]]) -> Series:
        try:
            values = [complex(float(re), float(im)) for re, im in pairs]
        except (TypeError, ValueError) as exc:
            raise SeriesError("Series JSON must be a list of [re, im] pairs") from exc
        return cls(values)

    def to_json(self) -> str:
        """JSON array of ``[re, im]`` pairs, index = degree. Floats use the shortest round-trip repr."""
        return json.dumps(self.to_pairs())

    @classmethod
    def from_json(cls, text: str) -> Series:
        return cls.from_pairs(json.loads(text))

    @classmethod
    def _coerce(cls, value: Any) -> Series:
        if isinstance(value, Series):
            return value
        if isinstance(value, (list, tuple)):
            try:
                return cls.from_pairs(value)
            except SeriesError as exc:
                raise ValueError(exc.message) from exc
        raise ValueError(f"Expected a Series or a list of [re, im] pairs, got {type(value).__name__}")

    @classmethod
    def __get_pydantic_core_schema__(cls, source_type: Any, handler: GetCoreSchemaHandler) -> CoreSchema:
        return core_schema.no_info_plain_validator_function(
            cls._coerce,
            serialization=core_schema.plain_serializer_function_ser_schema(
                lambda s: s.to_pairs(), when_used="json"
            ),
        )


def _shared(a: Series, b: Series) -> int:
    return min(a.order, b.order)


def add(a: Series, b: Series) -> Series:
    n = _shared(a, b)
    return Series._wrap(a.coeffs[: n + 1] + b.coeffs[: n + 1])


def sub(a: Series, b: Series) -> Series:
    n = _shared(a, b)
    return Series._wrap(a.coeffs[: n + 1] - b.coeffs[: n + 1])


def scale(a: Series, factor: Number) -> Series:
    return Series._wrap(a.coeffs * factor)


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated at the shared order."""
    n = _shared(a, b)
    return Series._wrap(np.convolve(a.coeffs[: n + 1], b.coeffs[: n + 1])[: n + 1])


def div(a: Series, b: Series) -> Series:
    """The series ``q`` with ``q * b = a`` to the shared order."""
    n = _shared(a, b)
    bc = b.coeffs
    b0 = bc[0]
    if b0 == 0:
        raise ZeroConstantTerm()
    ac = a.coeffs
    q = np.zeros(n + 1, dtype=np.complex128)
    for k in range(n + 1):
        q[k] = (ac[k] - np.dot(q[:k], bc[k:0:-1])) / b0
    return Series._wrap(q)


def deriv(a: Series) -> Series:
    """Termwise ``d/dz``; the result is known to order ``N-1``."""
    if a.order == 0:
        return Series._wrap(np.zeros(1, dtype=np.complex128))
    n = np.arange(1, a.order + 1)
    return Series._wrap(a.coeffs[1:] * n)


def antideriv(a: Series) -> Series:
    """``integral_0^z``. Keeps order ``N``: the top term comes from input degree ``N-1``."""
    c = np.zeros(a.order + 1, dtype=np.complex128)
    if a.order > 0:
        c[1:] = a.coeffs[:-1] / np.arange(1, a.order + 1)
    return Series._wrap(c)


def theta_deriv(a: Series) -> Series:
    """``z * a'(z)`` at full order: degree-n coefficient ``n * a_n``."""
    return Series._wrap(a.coeffs * np.arange(a.order + 1))


def times_z(a: Series) -> Series:
    """``z * a(z)``; exact, so the order grows by one."""
    return Series._wrap(np.concatenate([np.zeros(1, dtype=np.complex128), a.coeffs]))


def divide_by_z(a: Series) -> Series:
    """``a(z) / z`` for a series vanishing at 0; the order drops by one."""
    if a.coeffs[0] != 0:
        raise SeriesError(f"Cannot divide by z: constant term is {a[0]!r}")
    if a.order == 0:
        raise SeriesError("Cannot divide an order-0 series by z")
    return Series._wrap(a.coeffs[1:].copy())


def log_unit(a: Series) -> Series:
    """Principal logarithm of a unit series (constant term 1)."""
    c = a.coeffs
    if abs(c[0] - 1.0) > UNIT_TOL:
        raise NonUnitConstantTerm(complex(c[0]))
    n_max = a.order
    out = np.zeros(n_max + 1, dtype=np.complex128)
    out[0] = cmath.log(c[0])
    kl = np.zeros(n_max + 1, dtype=np.complex128)  # k * L_k
    for n in range(1, n_max + 1):
        acc = np.dot(kl[1:n], c[n - 1 : 0 : -1]) if n > 1 else 0.0
        out[n] = (n * c[n] - acc) / (n * c[0])
        kl[n] = n * out[n]
    return Series._wrap(out)


def exp_series(a: Series) -> Series:
    """``exp(a)``; any constant term is allowed, the result is scaled by ``exp(a_0)``."""
    c = a.coeffs
    n_max = a.order
    ka = c * np.arange(n_max + 1)
    out = np.zeros(n_max + 1, dtype=np.complex128)
    out[0] = cmath.exp(c[0])
    for n in range(1, n_max + 1):
        out[n] = np.dot(ka[1 : n + 1], out[n - 1 :: -1]) / n
    return Series._wrap(out)


def pow_real(a: Series, t: float) -> Series:
    """Principal power ``a^t`` of a unit series; the result has constant term 1."""
    return exp_series(scale(log_unit(a), t))


def compose(outer: Series, inner: Series) -> Series:
    """``outer(inner(z))`` by Horner's scheme; ``inner`` must vanish at 0."""
    if abs(inner.coeffs[0]) > UNIT_TOL:
        raise NonzeroInnerConstant(complex(inner.coeffs[0]))
    n = _shared(outer, inner)
    w = inner.coeffs[: n + 1].copy()
    w[0] = 0.0
    oc = outer.coeffs
    acc = np.zeros(n + 1, dtype=np.complex128)
    for k in range(n, -1, -1):
        acc = np.convolve(acc, w)[: n + 1]
        acc[0] += oc[k]
    return Series._wrap(acc)


def _check_radius(r: float, r_max: float) -> None:
    if not (0.0 <= r <= r_max) or math.isnan(r):
        raise RadiusOutOfRange(r, r_max)


def evaluate(a: Series, z: Number, *, r_max: float = R_MAX) -> complex:
    _check_radius(abs(z), r_max)
    return complex(np.polyval(a.coeffs[::-1], z))


def evaluate_points(a: Series, z: np.ndarray, *, r_max: float = R_MAX) -> np.ndarray:
    """Horner evaluation at an array of points."""
    z = np.asarray(z, dtype=np.complex128)
    if z.size:
        _check_radius(float(np.max(np.abs(z))), r_max)
    return np.polyval(a.coeffs[::-1], z)


def eval_circle(a: Series, r: float, K: int, *, r_max: float = R_MAX) -> np.ndarray:
    """Values at ``z_k = r * exp(2 pi i k / K)``, ``k = 0 .. K-1``.

    Coefficients are folded modulo ``K`` and summed with an inverse FFT, which is
    exact for any order (aliasing is accounted for, not ignored).
    """
    if K < MIN_CIRCLE_POINTS:
        raise QuadratureError(K, MIN_CIRCLE_POINTS)
    _check_radius(r, r_max)
    degrees = np.arange(a.order + 1)
    with np.errstate(under="ignore"):
        weighted = a.coeffs * np.power(float(r), degrees)
    blocks = -(-weighted.size // K)
    padded = np.zeros(blocks * K, dtype=np.complex128)
    padded[: weighted.size] = weighted
    folded = padded.reshape(blocks, K).sum(axis=0)
    return K * np.fft.ifft(folded)
