"""Divided-difference derivative and node-series integral operators.

The derivative of f at x is (f(phi x) - f(phi' x)) / ((phi - phi') x),
exact on truncated series (power rule a_n -> a_n {n}) and numeric on
black-box functions.  The definite integral sums f over the contracting
node family r^k / lead, a geometric-type quadrature that inverts the
derivative for integrable functions.
"""

from __future__ import annotations

from typing import Callable

from .errors import NonContractingNodes, NonConvergent, VanishingFactor
from .scalars import Backend, LucasParams, Scalar, backend_zero, magnitude
from .series import TruncatedSeries, TruncatedSeries2

RealFn = Callable[[Scalar], Scalar]

_ZERO_CUTOFF = 1e-9
_DIFF_STEP = 1e-6
_MAX_TERMS = 10**6


def derivative_value(f: RealFn, x: Scalar, params: LucasParams) -> Scalar:
    """Two-point divided difference of f at x.

    For float arguments with |x| below 1e-9 the symmetric difference
    quotient with step 1e-6 stands in for the derivative at the origin.
    """
    phi, phi_prime = params.require_roots()
    if params.backend is Backend.COMPLEX and magnitude(x) < _ZERO_CUTOFF:
        h = _DIFF_STEP
        return (f(h) - f(-h)) / (2 * h)
    if x == 0:
        raise ZeroDivisionError("exact derivative at 0 needs a series, not a point value")
    return (f(phi * x) - f(phi_prime * x)) / ((phi - phi_prime) * x)


def derivative_series(f: TruncatedSeries, params: LucasParams) -> TruncatedSeries:
    """Power rule on coefficients: a_n z^n -> a_n {n} z^(n-1); order drops by one."""
    cache = params.cache
    if f.order == 0:
        return TruncatedSeries.zero(0, f.backend)
    out = [f.coeffs[n] * cache.u(n) for n in range(1, f.order + 1)]
    return TruncatedSeries(out, f.backend)


def antiderivative_series(f: TruncatedSeries, params: LucasParams) -> TruncatedSeries:
    """Inverse power rule with zero constant term; order grows by one."""
    cache = params.cache
    out = [backend_zero(f.backend)]
    for n, a in enumerate(f.coeffs):
        term = cache.u(n + 1)
        if term == 0:
            raise VanishingFactor(n + 1)
        out.append(a / term)
    return TruncatedSeries(out, f.backend)


def derivative_series2(F: TruncatedSeries2, params: LucasParams, var: int = 0) -> TruncatedSeries2:
    """Partial divided-difference derivative of a bivariate series in one variable."""
    cache = params.cache
    out = {}
    for (j, k), c in F.coeffs.items():
        if var == 0 and j > 0:
            out[(j - 1, k)] = c * cache.u(j)
        elif var == 1 and k > 0:
            out[(j, k - 1)] = c * cache.u(k)
    return TruncatedSeries2(out, max(F.order - 1, 0), F.backend)


def antiderivative_series2(F: TruncatedSeries2, params: LucasParams, var: int = 0) -> TruncatedSeries2:
    """Partial antiderivative in one variable, zero constant slice."""
    cache = params.cache
    out = {}
    for (j, k), c in F.coeffs.items():
        m = (j if var == 0 else k) + 1
        term = cache.u(m)
        if term == 0:
            raise VanishingFactor(m)
        key = (j + 1, k) if var == 0 else (j, k + 1)
        out[key] = c / term
    return TruncatedSeries2(out, F.order + 1, F.backend)


def _node_family(params: LucasParams):
    phi, phi_prime = params.require_roots()
    for lead, other in ((phi, phi_prime), (phi_prime, phi)):
        if lead == 0:
            continue
        ratio = other / lead
        if magnitude(ratio) < 1:
            return lead, other, ratio
    raise NonContractingNodes(
        f"neither root ratio contracts for {params}; the node series cannot converge"
    )


def integral_value(
    f: RealFn, a: Scalar, b: Scalar, params: LucasParams, eps: float = 1e-12
) -> Scalar:
    """Definite integral of f from a to b over the contracting node family.

    The node family is chosen by the contraction test |ratio| < 1 (only a
    contracting family can converge, whichever printed condition a source
    attaches to it).  Partial sums stop once the geometric tail bound drops
    below eps relative to the accumulated scale.
    """
    if params.backend is not Backend.COMPLEX:
        raise NonContractingNodes("the node-series integral runs on the float backend")
    if a == b:
        return 0.0
    lead, other, ratio = _node_family(params)
    prefactor = lead - other
    rmag = magnitude(ratio)
    total = 0.0
    node = 1.0 / lead
    scale = 1.0
    for k in range(_MAX_TERMS):
        fb = b * f(b * node)
        fa = a * f(a * node)
        total = total + prefactor * (fb - fa) * node
        scale = max(scale, magnitude(fb), magnitude(fa), magnitude(total))
        tail = scale * magnitude(prefactor) * (rmag ** (k + 1)) / (magnitude(lead) * (1.0 - rmag))
        if tail < eps * max(1.0, magnitude(total)) and k >= 2:
            return total
        node = node * ratio
    raise NonConvergent("no decay detected within the term budget")


def integration_by_parts_residual(
    f: RealFn, g: RealFn, a: Scalar, b: Scalar, params: LucasParams, eps: float = 1e-12
) -> Scalar:
    """Difference between the two sides of the integration-by-parts formula.

    Integral of (Df)(x) g(phi' x) versus [f g] at the endpoints minus the
    integral of f(phi x) (Dg)(x); zero up to quadrature error for smooth f, g.
    """
    phi, phi_prime = params.require_roots()
    lhs = integral_value(lambda x: derivative_value(f, x, params) * g(phi_prime * x), a, b, params, eps)
    boundary = f(b) * g(b) - f(a) * g(a)
    rhs = boundary - integral_value(
        lambda x: f(phi * x) * derivative_value(g, x, params), a, b, params, eps
    )
    return lhs - rhs
