"""Deformed binomial powers, the deformed zero, and multinomial numbers.

The degree-n deformed power of (x, y) with deformation pair (u, v) is the
polynomial sum over k of  C(n,k) * u^T(n-k) * v^T(k) * x^(n-k) * y^k,
where C is the Lucasnomial and T(m) = m(m-1)/2.  Zero deformations follow
the limit convention 0^0 = 1, so the k in {0, 1} terms survive u = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import IndexOutOfRange
from .scalars import (
    LucasParams,
    Scalar,
    backend_of,
    backend_one,
    backend_zero,
    binom2,
    common_backend,
    lucasnomial,
    lucastorial,
)


@dataclass(frozen=True)
class DeformedBinomial:
    """Coefficient vector of a degree-n deformed power in the x^(n-k) y^k basis."""

    n: int
    u: Scalar
    v: Scalar
    coeffs: tuple


def deformed_power_coeffs(n: int, u: Scalar, v: Scalar, params: LucasParams) -> DeformedBinomial:
    """Exact coefficients c_k = C(n,k) u^T(n-k) v^T(k), k = 0..n."""
    if n < 0:
        raise IndexOutOfRange("n must be nonnegative")
    common_backend(u, v, params.s)
    coeffs = tuple(
        lucasnomial(n, k, params) * u ** binom2(n - k) * v ** binom2(k) for k in range(n + 1)
    )
    return DeformedBinomial(n, u, v, coeffs)


def deformed_power_value(
    n: int, x: Scalar, y: Scalar, u: Scalar, v: Scalar, params: LucasParams
) -> Scalar:
    """Evaluate the degree-n deformed power at the point (x, y)."""
    common_backend(x, y, u, v, params.s)
    row = deformed_power_coeffs(n, u, v, params).coeffs
    total = backend_zero(params.backend)
    for k, c in enumerate(row):
        total = total + c * x ** (n - k) * y**k
    return total


def phi_product_power(n: int, x: Scalar, y: Scalar, params: LucasParams) -> Scalar:
    """Product of (phi^k x + phi'^k y) over k < n; equals the deformed power at (phi, phi')."""
    if n < 0:
        raise IndexOutOfRange("n must be nonnegative")
    phi, phi_prime = params.require_roots()
    common_backend(x, y, params.s)
    result = backend_one(params.backend)
    px = backend_one(params.backend)
    py = backend_one(params.backend)
    for _ in range(n):
        result = result * (px * x + py * y)
        px = px * phi
        py = py * phi_prime
    return result


def deformed_zero(n: int, u: Scalar, v: Scalar, params: LucasParams) -> Scalar:
    """The alternating deformed power at (1, -1); vanishes for n >= 1 at (u,v) = roots."""
    one = backend_one(params.backend)
    return deformed_power_value(n, one, -one, u, v, params)


def multinomial_number(us: Sequence[Scalar], n: int, params: LucasParams) -> Scalar:
    """Direct multinomial sum over compositions of n into len(us) parts.

    Each composition (k_1, ..., k_m) contributes
    {n}! / ({k_1}! ... {k_m}!) * prod_i u_i^T(k_i).
    """
    return MultinomialWeights(tuple(us), params)(n)


class PowerWeights:
    """Weight family w(n) = u^T(n) used by the plain one-deformation functions."""

    def __init__(self, u: Scalar):
        self.u = u
        self._values = [backend_one(backend_of(u))]

    def __call__(self, n: int) -> Scalar:
        values = self._values
        while len(values) <= n:
            m = len(values) - 1
            values.append(values[-1] * self.u**m)
        return values[n]


class MultinomialWeights:
    """Memoized multinomial numbers for a fixed deformation tuple.

    The value at n is the direct sum over compositions, computed by
    enumerating compositions with a pruned depth-first walk; the factor
    rows u_i^T(k) / {k}! are shared across n.
    """

    def __init__(self, us: Sequence[Scalar], params: LucasParams):
        if not us:
            raise ValueError("at least one deformation parameter is required")
        self.us = tuple(us)
        self.params = params
        common_backend(params.s, *self.us)
        self._rows: list[list[Scalar]] = [[] for _ in self.us]
        self._values: list[Scalar] = [backend_one(params.backend)]

    def _row(self, i: int, upto: int) -> list[Scalar]:
        row = self._rows[i]
        u = self.us[i]
        while len(row) <= upto:
            k = len(row)
            row.append(u ** binom2(k) / lucastorial(k, self.params))
        return row

    def __call__(self, n: int) -> Scalar:
        if n < 0:
            raise IndexOutOfRange("n must be nonnegative")
        values = self._values
        while len(values) <= n:
            m = len(values)
            rows = [self._row(i, m) for i in range(len(self.us))]
            total = backend_zero(self.params.backend)
            last = len(rows) - 1

            def walk(i: int, remaining: int, acc: Scalar):
                nonlocal total
                if i == last:
                    total = total + acc * rows[i][remaining]
                    return
                row = rows[i]
                for k in range(remaining + 1):
                    walk(i + 1, remaining - k, acc * row[k])

            walk(0, m, backend_one(self.params.backend))
            values.append(total * lucastorial(m, self.params))
        return values[n]


class DeformedZeroWeights:
    """Memoized weights w(n) = deformed zero of degree n for a fixed (u, v)."""

    def __init__(self, u: Scalar, v: Scalar, params: LucasParams):
        self.u = u
        self.v = v
        self.params = params
        self._values: list[Scalar] = []

    def __call__(self, n: int) -> Scalar:
        values = self._values
        while len(values) <= n:
            values.append(deformed_zero(len(values), self.u, self.v, self.params))
        return values[n]


class DeformedPowerWeights:
    """Memoized weights w(n) = deformed power of (x, y) at degree n."""

    def __init__(self, x: Scalar, y: Scalar, u: Scalar, v: Scalar, params: LucasParams):
        self.x, self.y, self.u, self.v = x, y, u, v
        self.params = params
        self._values: list[Scalar] = []

    def __call__(self, n: int) -> Scalar:
        values = self._values
        while len(values) <= n:
            values.append(
                deformed_power_value(len(values), self.x, self.y, self.u, self.v, self.params)
            )
        return values[n]
