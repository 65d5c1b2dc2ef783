"""Scalar backends, Lucas parameters, and the core sequence machinery.

Three backends are supported and never mix implicitly:

* exact rationals (``fractions.Fraction``, plain ``int`` accepted),
* exact Gaussian rationals (:class:`GaussianRational`),
* double-precision floats/complex.

Promotion between backends is explicit (:func:`promote`).  All derived
values (sequences, factorials, binomial analogues) are computed in the
backend of their parameters.
"""

from __future__ import annotations

import cmath
import enum
import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .errors import (
    BackendMismatch,
    DivisionByZeroFactor,
    IndexOutOfRange,
    RootsUnavailable,
    VanishingFactor,
    ZeroParameter,
)


class Backend(enum.Enum):
    RATIONAL = "rational"
    GAUSSIAN = "gaussian-rational"
    COMPLEX = "complex-float"


class GaussianRational:
    """Exact element of Q(i), stored as a pair of Fractions.

    Arithmetic with ints and Fractions is supported; floats and complex
    numbers are rejected so the exact backends cannot silently degrade.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("imaginary part must be rational")
            self.re, self.im = re.re, re.im
            return
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by Gaussian zero")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / norm,
            (self.im * o.re - self.re * o.im) / norm,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (GaussianRational(1) / self) ** (-exponent)
        result = GaussianRational(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


Scalar = Union[int, Fraction, GaussianRational, float, complex]

GAUSSIAN_I = GaussianRational(0, 1)


def backend_of(value: Scalar) -> Backend:
    if isinstance(value, (int, Fraction)):
        return Backend.RATIONAL
    if isinstance(value, GaussianRational):
        return Backend.GAUSSIAN
    if isinstance(value, (float, complex)):
        return Backend.COMPLEX
    raise TypeError(f"unsupported scalar type: {type(value).__name__}")


def common_backend(*values: Scalar) -> Backend:
    backends = {backend_of(v) for v in values}
    if len(backends) != 1:
        names = sorted(b.value for b in backends)
        raise BackendMismatch(f"mixed scalar backends: {names}")
    return backends.pop()


_ORDER = {Backend.RATIONAL: 0, Backend.GAUSSIAN: 1, Backend.COMPLEX: 2}


def promote(value: Scalar, backend: Backend) -> Scalar:
    """Convert ``value`` into ``backend``.  Only upward promotion is allowed."""
    have = backend_of(value)
    if _ORDER[have] > _ORDER[backend]:
        raise BackendMismatch(f"cannot demote {have.value} to {backend.value}")
    if backend is Backend.RATIONAL:
        return Fraction(value)
    if backend is Backend.GAUSSIAN:
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(value)
    if isinstance(value, GaussianRational):
        if value.im == 0:
            return float(value.re)
        return complex(value)
    if isinstance(value, (int, Fraction)):
        return float(value)
    return _tidy_complex(value)


def backend_zero(backend: Backend) -> Scalar:
    return {Backend.RATIONAL: Fraction(0), Backend.GAUSSIAN: GaussianRational(0), Backend.COMPLEX: 0.0}[backend]


def backend_one(backend: Backend) -> Scalar:
    return {Backend.RATIONAL: Fraction(1), Backend.GAUSSIAN: GaussianRational(1), Backend.COMPLEX: 1.0}[backend]


def magnitude(value: Scalar) -> float:
    """Absolute value as a float; exact values that overflow map to inf."""
    try:
        if isinstance(value, GaussianRational):
            return abs(complex(value)) if value else 0.0
        return abs(float(value)) if not isinstance(value, complex) else abs(value)
    except OverflowError:
        return math.inf


def _tidy_complex(value):
    if isinstance(value, complex) and value.imag == 0:
        return value.real
    return value


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def gaussian_sqrt(value: GaussianRational) -> Optional[GaussianRational]:
    """Exact square root within Q(i), or None if no such element exists."""
    a, b = value.re, value.im
    if b == 0:
        r = rational_sqrt(a if a >= 0 else -a)
        if r is None:
            return None
        return GaussianRational(r) if a >= 0 else GaussianRational(0, r)
    norm_root = rational_sqrt(a * a + b * b)
    if norm_root is None:
        return None
    x = rational_sqrt((a + norm_root) / 2)
    if x is None or x == 0:
        return None
    y = b / (2 * x)
    root = GaussianRational(x, y)
    return root if root * root == value else None


def exact_sqrt(value: Scalar, backend: Backend) -> Optional[Scalar]:
    if backend is Backend.RATIONAL:
        return rational_sqrt(Fraction(value))
    if backend is Backend.GAUSSIAN:
        return gaussian_sqrt(value if isinstance(value, GaussianRational) else GaussianRational(value))
    raise ValueError("exact_sqrt is only defined for exact backends")


class SeqCache:
    """Grow-only cache of sequence values and factorials for one parameter pair.

    Extension happens under a lock; lists are append-only so concurrent
    readers always observe a consistent prefix.
    """

    def __init__(self, s: Scalar, t: Scalar, backend: Backend):
        self._s = s
        self._t = t
        zero = backend_zero(backend)
        one = backend_one(backend)
        self._u = [zero, one]
        self._v = [one + one, s]
        self._fact = [one]
        self._first_zero: Optional[int] = None
        self._lock = threading.Lock()

    def _extend(self, n: int) -> None:
        with self._lock:
            s, t = self._s, self._t
            u, v = self._u, self._v
            while len(u) <= n:
                u.append(s * u[-1] + t * u[-2])
                v.append(s * v[-1] + t * v[-2])
            fact = self._fact
            while len(fact) <= n:
                k = len(fact)
                term = u[k]
                if self._first_zero is None and term == 0:
                    self._first_zero = k
                fact.append(fact[-1] * term)

    def u(self, n: int) -> Scalar:
        if n >= len(self._u):
            self._extend(n)
        return self._u[n]

    def v(self, n: int) -> Scalar:
        if n >= len(self._v):
            self._extend(n)
        return self._v[n]

    def factorial(self, n: int) -> Scalar:
        if n >= len(self._fact):
            self._extend(n)
        if self._first_zero is not None and self._first_zero <= n:
            raise VanishingFactor(self._first_zero)
        return self._fact[n]

    def first_zero_index(self, upto: int) -> Optional[int]:
        if upto >= len(self._fact):
            self._extend(upto)
        if self._first_zero is not None and self._first_zero <= upto:
            return self._first_zero
        return None


@dataclass(frozen=True)
class LucasParams:
    """Parameter pair (s, t) with the roots of x^2 - s x - t when available."""

    s: Scalar
    t: Scalar
    disc: Scalar
    phi: Optional[Scalar]
    phi_prime: Optional[Scalar]
    backend: Backend
    _cache: SeqCache = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_cache", SeqCache(self.s, self.t, self.backend))

    @property
    def cache(self) -> SeqCache:
        return self._cache

    @property
    def roots_available(self) -> bool:
        return self.phi is not None

    def require_roots(self) -> tuple[Scalar, Scalar]:
        if self.phi is None:
            raise RootsUnavailable(
                f"discriminant {self.disc} has no exact square root in the {self.backend.value} backend"
            )
        return self.phi, self.phi_prime

    def __str__(self):
        return f"(s={self.s}, t={self.t})"


def _normalize(value: Scalar, backend: Backend) -> Scalar:
    if backend is Backend.RATIONAL:
        return Fraction(value)
    if backend is Backend.COMPLEX:
        return _tidy_complex(value)
    return value


def make_params(s: Scalar, t: Scalar) -> LucasParams:
    """Build parameters from (s, t); both must be nonzero and share a backend.

    In the exact backends the roots are stored only when the discriminant
    s^2 + 4t is a perfect square of a field element; otherwise operations
    that need roots raise RootsUnavailable.
    """
    backend = common_backend(s, t)
    s = _normalize(s, backend)
    t = _normalize(t, backend)
    if s == 0 or t == 0:
        raise ZeroParameter("both s and t must be nonzero")
    disc = s * s + 4 * t
    if backend is Backend.COMPLEX:
        if isinstance(disc, complex):
            root = cmath.sqrt(disc)
        elif disc >= 0:
            root = math.sqrt(disc)
        else:
            root = cmath.sqrt(disc)
        phi = _tidy_complex((s + root) / 2)
        phi_prime = _tidy_complex((s - root) / 2)
    else:
        root = exact_sqrt(disc, backend)
        if root is None:
            phi = phi_prime = None
        else:
            two = backend_one(backend) + backend_one(backend)
            phi = (s + root) / two
            phi_prime = (s - root) / two
    return LucasParams(s, t, disc, phi, phi_prime, backend)


def params_from_roots(phi: Scalar, phi_prime: Scalar) -> LucasParams:
    """Build parameters from a root pair, storing the roots exactly.

    s = phi + phi', t = -phi*phi'; rejects pairs giving s = 0 or t = 0.
    """
    backend = common_backend(phi, phi_prime)
    phi = _normalize(phi, backend)
    phi_prime = _normalize(phi_prime, backend)
    s = phi + phi_prime
    t = -(phi * phi_prime)
    if s == 0 or t == 0:
        raise ZeroParameter("root pair yields zero s or t")
    diff = phi - phi_prime
    return LucasParams(_normalize(s, backend), _normalize(t, backend), diff * diff, phi, phi_prime, backend)


def promote_params(params: LucasParams, backend: Backend) -> LucasParams:
    """Re-express parameters in a wider backend, keeping roots when possible."""
    if backend is params.backend:
        return params
    if params.roots_available:
        return params_from_roots(promote(params.phi, backend), promote(params.phi_prime, backend))
    return make_params(promote(params.s, backend), promote(params.t, backend))


def lucas_u(n: int, params: LucasParams) -> Scalar:
    """Term {n} of the two-parameter recurrence 0, 1, s, s^2+t, ..."""
    if n < 0:
        raise IndexOutOfRange("n must be nonnegative")
    return params.cache.u(n)


def lucas_v(n: int, params: LucasParams) -> Scalar:
    """Companion term <n> with seeds 2, s and the same recurrence."""
    if n < 0:
        raise IndexOutOfRange("n must be nonnegative")
    return params.cache.v(n)


_DEGENERATE_REL = 1e-12


def binet(n: int, params: LucasParams) -> Scalar:
    """Closed form (phi^n - phi'^n) / (phi - phi'), with the repeated-root branch.

    When the discriminant vanishes (exactly, or relatively below 1e-12 for
    floats) the limit n*(s/2)^(n-1) is returned instead.
    """
    if n < 0:
        raise IndexOutOfRange("n must be nonnegative")
    if params.backend is Backend.COMPLEX:
        scale = max(magnitude(params.s) ** 2, 4 * magnitude(params.t))
        degenerate = magnitude(params.disc) < _DEGENERATE_REL * scale
    else:
        degenerate = params.disc == 0
    if degenerate:
        if n == 0:
            return backend_zero(params.backend)
        half_s = params.s / 2
        return n * half_s ** (n - 1)
    phi, phi_prime = params.require_roots()
    return (phi**n - phi_prime**n) / (phi - phi_prime)


def lucastorial(n: int, params: LucasParams) -> Scalar:
    """Product {1}{2}...{n}; the empty product for n = 0.

    Raises VanishingFactor(k) if some {k} = 0 for k <= n, which marks the
    parameter point as outside the domain of factorial-based series.
    """
    if n < 0:
        raise IndexOutOfRange("n must be nonnegative")
    return params.cache.factorial(n)


def lucasnomial(n: int, k: int, params: LucasParams) -> Scalar:
    """Binomial analogue computed as the telescoped product of {n-k+j}/{j}.

    The product form is defined at more parameter points than the factorial
    quotient; a vanishing denominator factor raises DivisionByZeroFactor.
    """
    if k < 0 or n < 0 or k > n:
        raise IndexOutOfRange(f"need 0 <= k <= n, got n={n}, k={k}")
    cache = params.cache
    result = backend_one(params.backend)
    for j in range(1, k + 1):
        denom = cache.u(j)
        if denom == 0:
            raise DivisionByZeroFactor(f"{{{j}}} = 0 in the denominator")
        result = result * cache.u(n - k + j) / denom
    return result


def binom2(n: int) -> int:
    """n(n-1)/2 over the integers (valid for negative n as well)."""
    if not isinstance(n, int):
        raise TypeError("binom2 takes an integer")
    return n * (n - 1) // 2
