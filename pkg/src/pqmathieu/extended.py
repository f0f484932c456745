"""(p,q)-extended Beta, Gauss, and Kummer hypergeometric functions.

The extension weights the Euler integrals with exp(-p/t - q/(1-t)), p, q >= 0.
Two independent evaluation paths exist for the extended Gauss function: the
single Euler-type integral (primary, one quadrature call) and the series whose
coefficients are extended Beta values (one quadrature per coefficient); the
series path is the verification oracle.

All integrands are evaluated in log space from the exact endpoint distances
supplied by the quadrature engine, so (t**(x-1)) and ((1-t)**(y-1)) factors
keep full precision at both endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .classical import HyperTriple, beta, gauss_2f1
from .errors import DomainError
from .quadrature import DEFAULT_POLICY, QuadPolicy, integrate_finite_xc
from .results import EvalResult

__all__ = [
    "PQParams",
    "envelope_factor",
    "extended_beta",
    "extended_gauss_integral",
    "extended_gauss_series",
    "extended_kummer",
    "kummer_coefficient_table",
    "kummer_series_value",
    "gauss_bound_rhs",
]


@dataclass(frozen=True)
class PQParams:
    """The extension pair (p, q) with p, q >= 0."""

    p: float = 0.0
    q: float = 0.0

    def __post_init__(self) -> None:
        if not (self.p >= 0.0 and self.q >= 0.0 and math.isfinite(self.p) and math.isfinite(self.q)):
            raise DomainError(f"extension parameters must satisfy p, q >= 0, got ({self.p}, {self.q})")

    @property
    def envelope(self) -> float:
        """sup of the damping factor over (0,1): exp(-(sqrt(p)+sqrt(q))**2)."""
        return math.exp(-((math.sqrt(self.p) + math.sqrt(self.q)) ** 2))

    @property
    def is_zero(self) -> bool:
        return self.p == 0.0 and self.q == 0.0

    def swapped(self) -> "PQParams":
        return PQParams(self.q, self.p)


def envelope_factor(pq: PQParams) -> float:
    """Envelope factor multiplying classical functions to majorize extensions."""
    return pq.envelope


def _beta_integrand(x: float, y: float, pq: PQParams):
    p, q = pq.p, pq.q

    def g(t: float, dlo: float, dhi: float) -> float:
        lf = 0.0
        if x != 1.0:
            lf += (x - 1.0) * math.log(dlo)
        if y != 1.0:
            lf += (y - 1.0) * math.log(dhi)
        if p != 0.0:
            lf -= p / dlo
        if q != 0.0:
            lf -= q / dhi
        return math.exp(lf)

    return g


def extended_beta(x: float, y: float, pq: PQParams,
                  policy: QuadPolicy = DEFAULT_POLICY) -> EvalResult:
    """Extended Beta B(x, y; p, q) = int_0^1 t^(x-1) (1-t)^(y-1) e^(-p/t - q/(1-t)) dt.

    Reduces to the classical B(x, y) at p = q = 0 (where x, y > 0 is
    required).  With damping present the respective argument may be any real;
    such evaluations are flagged outside_classical_domain.
    """
    if pq.p == 0.0 and x <= 0.0:
        raise DomainError(f"extended_beta requires x > 0 when p = 0, got x={x}")
    if pq.q == 0.0 and y <= 0.0:
        raise DomainError(f"extended_beta requires y > 0 when q = 0, got y={y}")
    res = integrate_finite_xc(_beta_integrand(x, y, pq), 0.0, 1.0, policy)
    return EvalResult(res.value, res.abs_err_est, res.n_evals, res.converged,
                      outside_classical_domain=(x <= 0.0 or y <= 0.0))


def extended_gauss_integral(triple: HyperTriple, z: float, pq: PQParams,
                            policy: QuadPolicy = DEFAULT_POLICY) -> EvalResult:
    """Extended Gauss function by its Euler-type integral, valid for real z < 1.

    F_{p,q}(a,b;c;z) = (1/B(b,c-b)) int_0^1 t^(b-1) (1-t)^(c-b-1) (1-zt)^(-a)
    e^(-p/t - q/(1-t)) dt; strictly positive for a > 0.
    """
    if not z < 1.0:
        raise DomainError(f"extended_gauss_integral requires z < 1, got z={z}")
    a, b, c = triple.a, triple.b, triple.c
    p, q = pq.p, pq.q
    bx, by = b, c - b

    def g(t: float, dlo: float, dhi: float) -> float:
        lf = -a * math.log1p(-z * t)
        if bx != 1.0:
            lf += (bx - 1.0) * math.log(dlo)
        if by != 1.0:
            lf += (by - 1.0) * math.log(dhi)
        if p != 0.0:
            lf -= p / dlo
        if q != 0.0:
            lf -= q / dhi
        return math.exp(lf)

    res = integrate_finite_xc(g, 0.0, 1.0, policy)
    norm = beta(b, c - b)
    return EvalResult(res.value / norm, res.abs_err_est / norm, res.n_evals, res.converged)


def extended_gauss_series(triple: HyperTriple, z: float, pq: PQParams,
                          n_max: int | None = None,
                          policy: QuadPolicy = DEFAULT_POLICY) -> EvalResult:
    """Extended Gauss function by its defining series (the verification path).

    Each coefficient B(b+n, c-b; p, q) costs one quadrature; the truncation
    tail is majorized by the envelope factor times the classical 2F1 tail at
    |z|, which bounds the extended coefficients term by term.
    """
    if not abs(z) < 1.0:
        raise DomainError(f"extended_gauss_series requires |z| < 1, got z={z}")
    a, b, c = triple.a, triple.b, triple.c
    norm = beta(b, c - b)
    env = pq.envelope
    if n_max is None:
        floor_target = max(policy.rel_tol * 1e-2, 1e-15)
        if abs(z) > 0.0:
            n_max = int(math.log(floor_target) / math.log(abs(z))) + 24
        else:
            n_max = 4
        n_max = min(max(n_max, 40), 1000)

    total = 0.0
    err_acc = 0.0
    n_evals = 0
    poch_z = 1.0        # (a)_n z^n / n!
    major = env         # envelope * (a)_n (b)_n / ((c)_n n!) |z|^n
    hits = 0
    converged = False
    tail = math.inf
    n = 0
    while n < n_max:
        coef = extended_beta(b + n, c - b, pq, policy)
        n_evals += coef.n_work
        term = poch_z * coef.value / norm
        total += term
        err_acc += abs(poch_z) / norm * coef.err_est
        # classical majorant of the next terms
        ratio_next = abs(z) * (a + n) * (b + n) / ((c + n) * (n + 1.0))
        rho = max(abs(z), ratio_next)
        major_next = major * ratio_next
        if rho < 1.0:
            tail = major_next / (1.0 - rho)
            if tail <= policy.rel_tol * max(abs(total), 1e-300):
                hits += 1
                if hits >= 2:
                    converged = True
                    n += 1
                    break
            else:
                hits = 0
        poch_z *= (a + n) * z / (n + 1.0)
        major = major_next
        n += 1
    return EvalResult(total, tail + err_acc, n_evals, converged)


def kummer_coefficient_table(b: float, c: float, pq: PQParams, n_terms: int,
                             policy: QuadPolicy = DEFAULT_POLICY) -> list[float]:
    """Coefficients B(b+n, c-b; p, q) / B(b, c-b) for n = 0 .. n_terms-1.

    Computing the table once and reusing it across many series evaluations is
    the supported bulk-evaluation route (the extended Beta itself caches
    nothing).
    """
    if not (c > b > 0.0):
        raise DomainError(f"kummer_coefficient_table requires c > b > 0, got b={b}, c={c}")
    norm = beta(b, c - b)
    return [extended_beta(b + n, c - b, pq, policy).value / norm for n in range(n_terms)]


def kummer_series_value(coeffs: list[float], z: float) -> float:
    """Evaluate sum_n coeffs[n] z^n / n! from a precomputed coefficient table.

    Intended for z >= 0 (all terms positive given positive coefficients); the
    table must extend beyond the peak term index ~ z.
    """
    need = abs(z) + 10.0 * math.sqrt(abs(z) + 1.0) + 15.0
    if len(coeffs) < need:
        raise DomainError(f"coefficient table of length {len(coeffs)} too short for z={z}")
    total = 0.0
    zp = 1.0
    for n, cn in enumerate(coeffs):
        total += cn * zp
        zp *= z / (n + 1.0)
    return total


def extended_kummer(b: float, c: float, z: float, pq: PQParams,
                    policy: QuadPolicy = DEFAULT_POLICY) -> EvalResult:
    """Extended Kummer function Phi_{p,q}(b; c; z), entire in real z.

    For z < 0 the series is summed through the extended Kummer transformation
    Phi_{p,q}(b;c;z) = e^z Phi_{q,p}(c-b;c;-z) (substitute t -> 1-t in the
    Euler integral), which makes every term positive; the raw alternating
    series loses all precision already for moderately negative z.
    """
    if not (c > b > 0.0):
        raise DomainError(f"extended_kummer requires c > b > 0, got b={b}, c={c}")
    if z >= 0.0:
        w, bb, pq_eff = z, b, pq
    else:
        w, bb, pq_eff = -z, c - b, pq.swapped()
    norm = beta(b, c - b)

    total = 0.0
    err_acc = 0.0
    n_evals = 0
    zp = 1.0            # w^n / n!
    hits = 0
    converged = False
    tail = math.inf
    n = 0
    n_cap = int(w + 10.0 * math.sqrt(w + 1.0)) + 60
    while n < n_cap:
        coef = extended_beta(bb + n, c - bb, pq_eff, policy)
        n_evals += coef.n_work
        term = zp * coef.value / norm
        total += term
        err_acc += zp / norm * coef.err_est
        rho = w / (n + 2.0)  # coefficient ratios are < 1, so this majorizes
        if rho < 1.0:
            tail = abs(term) * rho / (1.0 - rho)
            if tail <= policy.rel_tol * max(abs(total), 1e-300):
                hits += 1
                if hits >= 2:
                    converged = True
                    n += 1
                    break
            else:
                hits = 0
        zp *= w / (n + 1.0)
        n += 1

    if z < 0.0:
        if w < 100.0:
            scale = math.exp(z)
            value = scale * total
        else:
            value = math.exp(z + math.log(total))
            scale = value / total
        return EvalResult(value, scale * (tail + err_acc), n_evals, converged)
    return EvalResult(total, tail + err_acc, n_evals, converged)


def gauss_bound_rhs(triple: HyperTriple, z: float, pq: PQParams,
                    policy: QuadPolicy = DEFAULT_POLICY) -> float:
    """Envelope upper bound for |F_{p,q}(a,b;c;z)|: envelope * 2F1(a,b;c;|z|)."""
    return pq.envelope * gauss_2f1(triple, abs(z), policy).value
