"""Shared result container for function evaluations."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EvalResult:
    """Value with an attached error estimate and work counter.

    n_work counts series terms summed or integrand evaluations, whichever
    drives the computation.  outside_classical_domain marks evaluations that
    converge only thanks to the exponential damping factors (for example an
    extended Beta with a nonpositive first argument); downstream identities
    that assume the classical domain should check it.
    """

    value: float
    err_est: float
    n_work: int
    converged: bool
    outside_classical_domain: bool = False
