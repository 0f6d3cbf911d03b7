"""Truncated complex power series arithmetic.

A :class:`PowerSeries` stores the coefficients ``c[0] .. c[N]`` of
``sum_k c_k z^k`` as complex floats, where ``N`` is the truncation order.
Binary operations truncate to the smaller operand order, so a result is
always exact to the order it claims.

``exp``/``log``/``pow`` are computed with the standard formal ODE
recurrences, coefficient by coefficient, not by numerical quadrature.  No
branch tracking is needed: :func:`log_series` requires constant term 1 and
:func:`exp_series` constant term 0, which pins the principal branch.
"""

from __future__ import annotations

import numpy as np

#: Default truncation order for constructors that do not receive one.
DEFAULT_ORDER = 64

#: Tolerance for the constant-term preconditions of log/exp/pow.
NORMALIZATION_TOL = 1e-12


class NormalizationError(ValueError):
    """A constant-term precondition (c0 = 1 for log, c0 = 0 for exp) failed."""


def _coeff_array(coeffs) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(coeffs, dtype=np.complex128))
    if arr.ndim != 1:
        raise ValueError("coefficients must form a one-dimensional sequence")
    if arr.size and not np.all(np.isfinite(arr)):
        raise ValueError("non-finite coefficient rejected")
    return arr


class PowerSeries:
    """Immutable truncated power series with complex coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs, order: int | None = None):
        arr = _coeff_array(coeffs)
        if arr.size == 0:
            raise ValueError("a series needs at least its constant coefficient")
        if order is not None:
            if order < 0:
                raise ValueError("truncation order must be nonnegative")
            padded = np.zeros(order + 1, dtype=np.complex128)
            keep = min(arr.size, order + 1)
            padded[:keep] = arr[:keep]
            arr = padded
        else:
            arr = arr.copy()
        arr.flags.writeable = False
        self._c = arr

    # ------------------------------------------------------------------ data

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient array of length ``order + 1``."""
        return self._c

    @property
    def order(self) -> int:
        return self._c.size - 1

    def __getitem__(self, k: int) -> complex:
        return complex(self._c[k])

    def __len__(self) -> int:
        return self._c.size

    def __repr__(self) -> str:
        return f"PowerSeries({self._c.tolist()!r})"

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls(np.zeros(order + 1))

    @classmethod
    def constant(cls, value, order: int) -> "PowerSeries":
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = value
        return cls(c)

    @classmethod
    def identity(cls, order: int) -> "PowerSeries":
        """The monomial ``z`` at the given truncation order (order >= 1)."""
        if order < 1:
            raise ValueError("identity series needs order >= 1")
        c = np.zeros(order + 1, dtype=np.complex128)
        c[1] = 1.0
        return cls(c)

    # ------------------------------------------------------------ arithmetic

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries(self._c[: n + 1] + other._c[: n + 1])

    def __sub__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries(self._c[: n + 1] - other._c[: n + 1])

    def __neg__(self):
        return PowerSeries(-self._c)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            return PowerSeries(np.convolve(self._c, other._c)[: n + 1])
        scalar = complex(other)
        if not np.isfinite(scalar):
            raise ValueError("non-finite scalar factor rejected")
        return PowerSeries(self._c * scalar)

    def __rmul__(self, other):
        return self.__mul__(other)

    def differentiate(self) -> "PowerSeries":
        """Termwise derivative; the result has order N - 1.

        Raises ValueError on an order-0 series (the derivative would be
        empty).
        """
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 series: empty derivative")
        k = np.arange(1, self.order + 1)
        return PowerSeries(self._c[1:] * k)

    def evaluate(self, z):
        """Horner evaluation of the truncated polynomial.

        Accepts a complex scalar or ndarray.  The series approximates its
        analytic parent only for |z| <= 1; this is documented, not enforced.
        """
        zarr = np.asarray(z, dtype=np.complex128)
        if not np.all(np.isfinite(zarr)):
            raise ValueError("non-finite evaluation point rejected")
        acc = np.full(zarr.shape, self._c[-1])
        for c in self._c[-2::-1]:
            acc = acc * zarr + c
        if zarr.ndim == 0:
            return complex(acc)
        return acc

    __call__ = evaluate

    # ----------------------------------------------------------- index shifts

    def divided_by_z(self) -> "PowerSeries":
        """Drop the (required ~0) constant term; order decreases by one."""
        if abs(self._c[0]) > NORMALIZATION_TOL:
            raise NormalizationError(
                f"series has constant term {self._c[0]}, cannot divide by z"
            )
        if self.order == 0:
            raise ValueError("cannot divide an order-0 series by z")
        return PowerSeries(self._c[1:])

    def times_z(self) -> "PowerSeries":
        """Prepend a zero constant term; order increases by one."""
        return PowerSeries(np.concatenate([np.zeros(1, dtype=np.complex128), self._c]))


def log_series(s: PowerSeries) -> PowerSeries:
    """Formal logarithm of a series with constant term 1.

    Solves ``s * L' = s'`` coefficientwise, which forces L(0) = 0 and the
    principal branch.  ``exp_series(log_series(s)) == s`` to the truncation
    order.
    """
    c = s.coeffs
    if abs(c[0] - 1.0) > NORMALIZATION_TOL:
        raise NormalizationError(
            f"log needs constant term 1, got {c[0]}"
        )
    n_max = s.order
    out = np.zeros(n_max + 1, dtype=np.complex128)
    kl = np.zeros(n_max + 1, dtype=np.complex128)  # kl[k] = k * out[k]
    for n in range(1, n_max + 1):
        # n*s_n = sum_{j=0}^{n-1} s_j (n-j) L_{n-j}; solve for L_n (s_0 = 1).
        inner = np.dot(c[1:n], kl[n - 1 : 0 : -1]) if n > 1 else 0.0
        out[n] = c[n] - inner / n
        kl[n] = n * out[n]
    return PowerSeries(out)


def exp_series(s: PowerSeries) -> PowerSeries:
    """Formal exponential of a series with constant term 0.

    Produces the unique E with E(0) = 1 solving ``E' = s' E``
    coefficientwise.
    """
    c = s.coeffs
    if abs(c[0]) > NORMALIZATION_TOL:
        raise NormalizationError(
            f"exp needs constant term 0, got {c[0]}"
        )
    n_max = s.order
    out = np.zeros(n_max + 1, dtype=np.complex128)
    out[0] = 1.0
    js = np.arange(n_max + 1) * c  # js[j] = j * s_j
    for n in range(1, n_max + 1):
        out[n] = np.dot(js[1 : n + 1], out[:n][::-1]) / n
    return PowerSeries(out)


def pow_series(s: PowerSeries, mu) -> PowerSeries:
    """``s ** mu`` for complex mu, as ``exp(mu * log(s))``; needs s(0) = 1."""
    mu = complex(mu)
    if not np.isfinite(mu):
        raise ValueError("non-finite exponent rejected")
    return exp_series(mu * log_series(s))


def divide(s: PowerSeries, t: PowerSeries) -> PowerSeries:
    """Series quotient s / t; the divisor needs a nonzero constant term."""
    n = min(s.order, t.order)
    sc, tc = s.coeffs, t.coeffs
    if abs(tc[0]) <= NORMALIZATION_TOL:
        raise ZeroDivisionError("series division by a series with ~0 constant term")
    out = np.zeros(n + 1, dtype=np.complex128)
    for k in range(n + 1):
        acc = sc[k]
        if k:
            acc = acc - np.dot(out[:k], tc[k:0:-1])
        out[k] = acc / tc[0]
    return PowerSeries(out)


def log_derivative_ratio(s: PowerSeries) -> PowerSeries:
    """The series of ``z s'(z) / s(z)`` for s with s(0) = 0 and s'(0) != 0.

    Both numerator and denominator share a factor z, so the quotient exists
    as a series with constant term 1; the result has order N - 1.
    """
    c = s.coeffs
    if abs(c[0]) > NORMALIZATION_TOL:
        raise NormalizationError(
            f"log-derivative ratio needs a root at 0, got constant term {c[0]}"
        )
    if s.order < 1 or abs(c[1]) <= NORMALIZATION_TOL:
        raise NormalizationError("log-derivative ratio needs a simple root at 0")
    k = np.arange(1, s.order + 1)
    num = PowerSeries(c[1:] * k)  # (z s')/z
    den = PowerSeries(c[1:])      # s/z
    return divide(num, den)
