"""Classical special functions: Gamma, Beta, Pochhammer, 2F1, 1F1, Luke's bound.

The hypergeometric series are summed by term recurrence (ratio form).  For
negative argument the Gauss series goes through the Pfaff transformation
z -> z/(z-1) and the Kummer series through 1F1(b;c;z) = e^z 1F1(c-b;c;-z),
so every summed term is positive and no cancellation occurs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .quadrature import DEFAULT_POLICY, QuadPolicy
from .results import EvalResult

__all__ = [
    "HyperTriple",
    "log_gamma",
    "beta",
    "pochhammer",
    "gauss_2f1",
    "gauss_2f1_raw",
    "kummer_1f1",
    "luke_bound_rhs",
]


@dataclass(frozen=True)
class HyperTriple:
    """Hypergeometric parameter triple (a, b, c) with c > b > 0.

    The first parameter doubles as the series exponent lambda in the
    Mathieu-type kernels and is unrestricted.
    """

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        if not (self.c > self.b > 0.0):
            raise DomainError(f"require c > b > 0, got b={self.b}, c={self.c}")


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if not (x > 0.0 and math.isfinite(x)):
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def beta(x: float, y: float) -> float:
    """Euler Beta function B(x, y) = Gamma(x)Gamma(y)/Gamma(x+y), x, y > 0."""
    if not (x > 0.0 and y > 0.0):
        raise DomainError(f"beta requires positive arguments, got ({x}, {y})")
    return math.exp(math.lgamma(x) + math.lgamma(y) - math.lgamma(x + y))


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise DomainError("pochhammer requires n >= 0")
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


def _positive_series(ratio, rel_tol: float, max_terms: int,
                     rho_floor: float = 0.0) -> tuple[float, float, int, bool]:
    # sum 1 + t_1 + t_2 + ... where t_{n+1} = t_n * ratio(n); the projected
    # geometric tail |t_n| * rho/(1-rho) must stay below rel_tol * |sum|
    # three times in a row.  rho_floor is the known asymptotic term ratio
    # (the series argument), which the running ratio may approach from below.
    term = 1.0
    total = 1.0
    hits = 0
    n = 0
    while n < max_terms:
        term *= ratio(n)
        total += term
        n += 1
        rho = max(abs(ratio(n)), rho_floor)
        if rho < 1.0 and abs(term) * rho / (1.0 - rho) <= rel_tol * abs(total):
            hits += 1
            if hits >= 3:
                break
        else:
            hits = 0
    rho = max(abs(ratio(n)), rho_floor)
    tail = abs(term) * rho / (1.0 - rho) if rho < 1.0 else math.inf
    return total, tail, n + 1, hits >= 3 and math.isfinite(tail)


def gauss_2f1_raw(a: float, b: float, c: float, z: float,
                  policy: QuadPolicy = DEFAULT_POLICY) -> EvalResult:
    """Gauss hypergeometric series 2F1(a, b; c; z) for raw parameters.

    Accepts -1 <= z < 1 and any c that is not a nonpositive integer; callers
    that also need the Euler-integral structure should go through gauss_2f1
    and HyperTriple.  For z < 0 the Pfaff transformation maps onto the
    argument z/(z-1) in [0, 1/2], where all terms are positive for the
    parameter ranges used here.
    """
    if not (-1.0 <= z < 1.0):
        raise DomainError(f"gauss_2f1 requires -1 <= z < 1, got z={z}")
    if c <= 0.0 and c == int(c):
        raise DomainError(f"gauss_2f1 undefined at nonpositive integer c={c}")
    if z < 0.0:
        zp = z / (z - 1.0)
        pref = (1.0 - z) ** (-a)
        bb = c - b
    else:
        zp = z
        pref = 1.0
        bb = b
    total, tail, n, ok = _positive_series(
        lambda k: (a + k) * (bb + k) / ((c + k) * (k + 1.0)) * zp,
        policy.rel_tol, policy.max_evals, rho_floor=max(zp, 0.0))
    return EvalResult(pref * total, pref * tail, n, ok)


def gauss_2f1(triple: HyperTriple, z: float, policy: QuadPolicy = DEFAULT_POLICY) -> EvalResult:
    """2F1(a, b; c; z) on the standing domain c > b > 0, -1 <= z < 1."""
    return gauss_2f1_raw(triple.a, triple.b, triple.c, z, policy)


def kummer_1f1(b: float, c: float, z: float, policy: QuadPolicy = DEFAULT_POLICY) -> EvalResult:
    """Confluent hypergeometric series 1F1(b; c; z) for c > b > 0, real z."""
    if not (c > b > 0.0):
        raise DomainError(f"kummer_1f1 requires c > b > 0, got b={b}, c={c}")
    if z < 0.0:
        w = -z
        bb = c - b
    else:
        w = z
        bb = b
    total, tail, n, ok = _positive_series(
        lambda k: (bb + k) / ((c + k) * (k + 1.0)) * w,
        policy.rel_tol, policy.max_evals)
    if z < 0.0:
        # e^z * total, in log form once the factors leave the comfortable range
        if w < 100.0:
            value = math.exp(z) * total
            tail = math.exp(z) * tail
        else:
            value = math.exp(z + math.log(total))
            tail = value * (tail / total)
        return EvalResult(value, tail, n, ok)
    return EvalResult(total, tail, n, ok)


def luke_bound_rhs(a: float, b: float, c: float, z: float) -> float:
    """Luke's rational upper bound for 2F1(a, b; c; -z).

    Valid for b in (0, 1], c >= a > 0 and z > 0; parameters outside that
    window raise, since the inequality is not guaranteed there.
    """
    if not (0.0 < b <= 1.0):
        raise DomainError(f"luke_bound_rhs requires b in (0, 1], got b={b}")
    if not (c >= a > 0.0):
        raise DomainError(f"luke_bound_rhs requires c >= a > 0, got a={a}, c={c}")
    if not (z > 0.0):
        raise DomainError(f"luke_bound_rhs requires z > 0, got z={z}")
    lead = 2.0 * a * b * (c + 1.0) / (c * (a + 1.0) * (b + 1.0))
    bracket = 1.0 - 2.0 * (c + 1.0) / (2.0 * (c + 1.0) + (a + 1.0) * (b + 1.0) * z)
    return 1.0 - lead * bracket
