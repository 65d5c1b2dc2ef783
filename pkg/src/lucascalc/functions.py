"""Deformed exponential, trigonometric, and hyperbolic function families.

Every family is a power series whose degree-m coefficient carries a
deformation weight w(m) divided by the factorial analogue {m}!:

* exp:   all m,       sign +1
* sin:   m = 2j+1,    sign (-1)^j         sinh: same without signs
* cos:   m = 2j,      sign (-1)^j         cosh: same without signs

With power weights w(m) = u^T(m) these are the one-parameter functions;
multinomial, deformed-zero, and binomial-combination variants substitute
the corresponding weight families.  tan/sec (and tanh/sech) are series
quotients; cot/csc/coth/csch have a pole at 0 and exist as values only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .deformed import (
    DeformedZeroWeights,
    MultinomialWeights,
    PowerWeights,
    deformed_power_coeffs,
)
from .errors import (
    DivisionByZeroValue,
    NegativeNormalizer,
    NoRootFound,
    PoleAtOrigin,
    SeriesDiverging,
    VanishingFactor,
)
from .scalars import (
    Backend,
    LucasParams,
    Scalar,
    backend_one,
    backend_zero,
    binom2,
    common_backend,
    lucasnomial,
    magnitude,
)
from .series import TruncatedSeries, TruncatedSeries2


class FnKind(str, enum.Enum):
    EXP = "exp"
    SIN = "sin"
    COS = "cos"
    TAN = "tan"
    COT = "cot"
    SEC = "sec"
    CSC = "csc"
    SINH = "sinh"
    COSH = "cosh"
    TANH = "tanh"
    COTH = "coth"
    SECH = "sech"
    CSCH = "csch"


#: kinds whose series expansion exists (no pole at the origin)
SERIES_KINDS = {
    FnKind.EXP,
    FnKind.SIN,
    FnKind.COS,
    FnKind.TAN,
    FnKind.SEC,
    FnKind.SINH,
    FnKind.COSH,
    FnKind.TANH,
    FnKind.SECH,
}

# primary kinds: (degree of sub-term j, alternating sign?)
_PRIMARY = {
    FnKind.EXP: (lambda j: j, False),
    FnKind.SIN: (lambda j: 2 * j + 1, True),
    FnKind.COS: (lambda j: 2 * j, True),
    FnKind.SINH: (lambda j: 2 * j + 1, False),
    FnKind.COSH: (lambda j: 2 * j, False),
}

# quotient kinds expressed over the primary ones: (numerator, denominator)
_QUOTIENTS = {
    FnKind.TAN: (FnKind.SIN, FnKind.COS),
    FnKind.COT: (FnKind.COS, FnKind.SIN),
    FnKind.SEC: (None, FnKind.COS),
    FnKind.CSC: (None, FnKind.SIN),
    FnKind.TANH: (FnKind.SINH, FnKind.COSH),
    FnKind.COTH: (FnKind.COSH, FnKind.SINH),
    FnKind.SECH: (None, FnKind.COSH),
    FnKind.CSCH: (None, FnKind.SINH),
}

Weights = Callable[[int], Scalar]

_GROWTH_LIMIT = 8
_SMALL_RUN = 3
_MAX_VALUE_TERMS = 512


@dataclass(frozen=True)
class EvalInfo:
    """Adaptive evaluation result with the number of series terms consumed."""

    value: Scalar
    terms_used: int


def _adaptive_sum(terms, eps: float) -> EvalInfo:
    """Sum terms until three consecutive magnitudes drop below eps * scale.

    scale is the running maximum magnitude of the partial sums.  Eight
    consecutive strictly growing term magnitudes raise SeriesDiverging, as
    does exhausting the term budget.
    """
    total = None
    scale = 0.0
    small_run = 0
    grow_run = 0
    prev_mag: Optional[float] = None
    count = 0
    for term in terms:
        count += 1
        total = term if total is None else total + term
        mag = magnitude(term)
        if mag != mag:  # NaN: arithmetic broke down, treat as divergence
            raise SeriesDiverging("non-finite term encountered")
        scale = max(scale, magnitude(total))
        if mag <= eps * scale:
            small_run += 1
            if small_run >= _SMALL_RUN:
                return EvalInfo(total, count)
        else:
            small_run = 0
        if prev_mag is not None and mag > prev_mag and mag > eps * scale:
            grow_run += 1
            if grow_run >= _GROWTH_LIMIT:
                raise SeriesDiverging(
                    f"terms grew for {_GROWTH_LIMIT} consecutive orders"
                )
        else:
            grow_run = 0
        prev_mag = mag
        if count >= _MAX_VALUE_TERMS:
            raise SeriesDiverging("series did not settle within the term budget")
    return EvalInfo(total, count)


def weighted_fn_series(
    kind: FnKind, weights: Weights, params: LucasParams, order: int
) -> TruncatedSeries:
    """Series of the given primary kind with an arbitrary weight family."""
    if kind not in _PRIMARY:
        raise PoleAtOrigin(f"{kind.value} has no series with general weights")
    index, alternating = _PRIMARY[kind]
    zero = backend_zero(params.backend)
    coeffs = [zero] * (order + 1)
    j = 0
    while True:
        m = index(j)
        if m > order:
            break
        c = weights(m) / params.cache.factorial(m)
        if alternating and j % 2 == 1:
            c = -c
        coeffs[m] = c
        j += 1
    return TruncatedSeries(coeffs, params.backend)


def fn_series(kind: FnKind, u: Scalar, params: LucasParams, order: int) -> TruncatedSeries:
    """Power-series expansion of a one-parameter function family member.

    The u = 0 limits come out of the same formula via the 0^0 = 1
    convention: only the degree 0 and 1 weights survive.
    """
    common_backend(u, params.s)
    if kind not in SERIES_KINDS:
        raise PoleAtOrigin(f"{kind.value} has a pole at 0; evaluate it pointwise instead")
    if kind in _PRIMARY:
        return weighted_fn_series(kind, PowerWeights(u), params, order)
    numerator, denominator = _QUOTIENTS[kind]
    recip = fn_series(denominator, u, params, order).reciprocal()
    if numerator is None:
        return recip
    return fn_series(numerator, u, params, order) * recip


def _primary_value_terms(kind: FnKind, x: Scalar, u: Scalar, params: LucasParams):
    """Incremental term generator; consecutive-term ratios avoid huge powers."""
    cache = params.cache

    def seq(i: int) -> Scalar:
        value = cache.u(i)
        if value == 0:
            raise VanishingFactor(i)
        return value

    one = backend_one(params.backend)
    if kind is FnKind.EXP:
        term = one
        u_pow = one
        n = 0
        while True:
            yield term
            term = term * u_pow * x / seq(n + 1)
            u_pow = u_pow * u
            n += 1
        return
    index, alternating = _PRIMARY[kind]
    term = x if index(0) == 1 else one
    j = 0
    while True:
        yield term
        m, m_next = index(j), index(j + 1)
        factor = x * x / (seq(m + 1) * seq(m + 2))
        factor = factor * u ** (binom2(m_next) - binom2(m))
        term = term * (-factor if alternating else factor)
        j += 1


def fn_value_info(
    kind: FnKind, x: Scalar, u: Scalar, params: LucasParams, eps: float = 1e-12
) -> EvalInfo:
    """Adaptive point evaluation, reporting the value and terms consumed."""
    common_backend(x, u, params.s)
    if kind in _PRIMARY:
        return _adaptive_sum(_primary_value_terms(kind, x, u, params), eps)
    numerator, denominator = _QUOTIENTS[kind]
    den = fn_value_info(denominator, x, u, params, eps)
    if den.value == 0:
        raise DivisionByZeroValue(f"{denominator.value}({x}) = 0")
    if numerator is None:
        return EvalInfo(backend_one(params.backend) / den.value, den.terms_used)
    num = fn_value_info(numerator, x, u, params, eps)
    return EvalInfo(num.value / den.value, num.terms_used + den.terms_used)


def fn_value(kind: FnKind, x: Scalar, u: Scalar, params: LucasParams, eps: float = 1e-12) -> Scalar:
    return fn_value_info(kind, x, u, params, eps).value


def weighted_fn_value(
    kind: FnKind, weights: Weights, x: Scalar, params: LucasParams, eps: float = 1e-12
) -> Scalar:
    """Adaptive evaluation of a weighted family at a point."""
    if kind not in _PRIMARY:
        raise PoleAtOrigin(f"{kind.value} has no series with general weights")
    index, alternating = _PRIMARY[kind]

    def terms():
        j = 0
        x_pow = x ** index(0)
        while True:
            m = index(j)
            term = weights(m) * x_pow / params.cache.factorial(m)
            if alternating and j % 2 == 1:
                term = -term
            yield term
            x_pow = x_pow * x ** (index(j + 1) - m)
            j += 1

    return _adaptive_sum(terms(), eps).value


def multinomial_series(
    kind: FnKind, us: Sequence[Scalar], params: LucasParams, order: int
) -> TruncatedSeries:
    return weighted_fn_series(kind, MultinomialWeights(tuple(us), params), params, order)


def multinomial_value(
    kind: FnKind,
    us: Sequence[Scalar],
    x: Scalar,
    params: LucasParams,
    eps: float = 1e-12,
    weights: Optional[MultinomialWeights] = None,
) -> Scalar:
    """Point value of the multinomial-weighted family member.

    Quotient kinds divide the corresponding primary values.
    """
    if weights is None:
        weights = MultinomialWeights(tuple(us), params)
    if kind in _PRIMARY:
        return weighted_fn_value(kind, weights, x, params, eps)
    numerator, denominator = _QUOTIENTS[kind]
    den = weighted_fn_value(denominator, weights, x, params, eps)
    if den == 0:
        raise DivisionByZeroValue(f"{denominator.value} vanished in a quotient")
    if numerator is None:
        return backend_one(params.backend) / den
    return weighted_fn_value(numerator, weights, x, params, eps) / den


def deformed_zero_series(
    kind: FnKind, u: Scalar, v: Scalar, params: LucasParams, order: int
) -> TruncatedSeries:
    return weighted_fn_series(kind, DeformedZeroWeights(u, v, params), params, order)


def deformed_zero_value(
    kind: FnKind, u: Scalar, v: Scalar, x: Scalar, params: LucasParams, eps: float = 1e-12
) -> Scalar:
    return weighted_fn_value(kind, DeformedZeroWeights(u, v, params), x, params, eps)


def binomial_series2(
    kind: FnKind, u: Scalar, v: Scalar, params: LucasParams, order: int
) -> TruncatedSeries2:
    """Bivariate series built from the deformed powers of (x, y)."""
    if kind not in _PRIMARY:
        raise PoleAtOrigin(f"{kind.value} has no bivariate series form")
    index, alternating = _PRIMARY[kind]
    out: dict[tuple[int, int], Scalar] = {}
    j = 0
    while True:
        n = index(j)
        if n > order:
            break
        fact = params.cache.factorial(n)
        row = deformed_power_coeffs(n, u, v, params).coeffs
        sign = -1 if (alternating and j % 2 == 1) else 1
        for k, c in enumerate(row):
            value = c / fact
            out[(n - k, k)] = -value if sign < 0 else value
        j += 1
    return TruncatedSeries2(out, order, params.backend)


def weighted_binomial_value(
    kind: FnKind,
    x_weights: Weights,
    y_weights: Weights,
    x: Scalar,
    y: Scalar,
    params: LucasParams,
    eps: float = 1e-12,
) -> Scalar:
    """Point value of a binomial combination with weight families on both slots.

    Degree N contributes sum over k of C(N,k) xw(N-k) yw(k) x^(N-k) y^k,
    divided by {N}! and signed per the kind's pattern.
    """
    if kind in _QUOTIENTS:
        numerator, denominator = _QUOTIENTS[kind]
        den = weighted_binomial_value(denominator, x_weights, y_weights, x, y, params, eps)
        if den == 0:
            raise DivisionByZeroValue(f"{denominator.value} vanished in a quotient")
        num = (
            backend_one(params.backend)
            if numerator is None
            else weighted_binomial_value(numerator, x_weights, y_weights, x, y, params, eps)
        )
        return num / den
    index, alternating = _PRIMARY[kind]

    def terms():
        j = 0
        while True:
            n = index(j)
            acc = backend_zero(params.backend)
            for k in range(n + 1):
                acc = acc + (
                    lucasnomial(n, k, params)
                    * x_weights(n - k)
                    * y_weights(k)
                    * x ** (n - k)
                    * y**k
                )
            term = acc / params.cache.factorial(n)
            if alternating and j % 2 == 1:
                term = -term
            yield term
            j += 1

    return _adaptive_sum(terms(), eps).value


def binomial_value(
    kind: FnKind,
    x: Scalar,
    y: Scalar,
    u: Scalar,
    v: Scalar,
    params: LucasParams,
    eps: float = 1e-12,
) -> Scalar:
    """Point value of the two-deformation binomial combination of (x, y)."""
    return weighted_binomial_value(kind, PowerWeights(u), PowerWeights(v), x, y, params, eps)


_TILDE_KINDS = {FnKind.SIN, FnKind.COS, FnKind.SEC, FnKind.CSC, FnKind.TAN, FnKind.COT}


def tilde_value(
    kind: FnKind, x: Scalar, u: Scalar, params: LucasParams, eps: float = 1e-12
) -> Scalar:
    """Normalized trigonometric value; sin and cos are divided by the square
    root of the deformed-zero cosine, sec and csc multiplied by it, and
    tan and cot pass through unchanged.

    Restricted to the float backend with a positive normalizer.
    """
    if kind not in _TILDE_KINDS:
        raise ValueError(f"no normalized form for {kind.value}")
    if params.backend is not Backend.COMPLEX:
        raise NegativeNormalizer("normalized functions run on the float backend")
    if kind in (FnKind.TAN, FnKind.COT):
        return fn_value(kind, x, u, params, eps)
    normalizer = deformed_zero_value(FnKind.COS, u, u, x, params, eps)
    if isinstance(normalizer, complex) or normalizer <= 0:
        raise NegativeNormalizer(f"deformed-zero cosine at {x} is {normalizer}")
    root = normalizer**0.5
    if kind is FnKind.SIN:
        return fn_value(FnKind.SIN, x, u, params, eps) / root
    if kind is FnKind.COS:
        return fn_value(FnKind.COS, x, u, params, eps) / root
    base = fn_value(FnKind.COS if kind is FnKind.SEC else FnKind.SIN, x, u, params, eps)
    if base == 0:
        raise DivisionByZeroValue(f"{kind.value} denominator vanished at {x}")
    return root / base


@dataclass(frozen=True)
class PiU:
    """First positive zero of the sine family member, with its residual."""

    params: LucasParams
    u: Scalar
    value: float
    residual: float


def find_pi_u(
    params: LucasParams,
    u: Scalar,
    x_max: float = 10.0,
    step: float = 0.05,
    eps: float = 1e-12,
    bisect_tol: float = 1e-13,
) -> PiU:
    """Scan (0, x_max] for the first sign change of sin and bisect it down.

    Raises NoRootFound when no sign change appears before x_max or before
    the series starts diverging.
    """
    if params.backend is not Backend.COMPLEX:
        raise NoRootFound("root scanning runs on the float backend")

    def s(x: float) -> float:
        return fn_value(FnKind.SIN, x, u, params, eps)

    prev_x = None
    prev_val = None
    x = step
    bracket = None
    while x <= x_max + 1e-12:
        try:
            val = s(x)
        except SeriesDiverging:
            raise NoRootFound(f"series diverges at x={x:.4g} before any sign change") from None
        if val == 0.0:
            return PiU(params, u, x, 0.0)
        if prev_val is not None and (val < 0) != (prev_val < 0):
            bracket = (prev_x, x)
            break
        prev_x, prev_val = x, val
        x += step
    if bracket is None:
        raise NoRootFound(f"no sign change of sin on (0, {x_max}]")
    lo, hi = bracket
    f_lo = s(lo)
    while hi - lo > bisect_tol:
        mid = 0.5 * (lo + hi)
        f_mid = s(mid)
        if f_mid == 0.0:
            lo = hi = mid
            break
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    return PiU(params, u, root, abs(s(root)))
