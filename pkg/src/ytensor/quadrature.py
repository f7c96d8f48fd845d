"""Thin quadrature helpers shared by the variational layer.

Plain adaptive quadrature is scipy's QUADPACK; integrable endpoint
singularities (logarithmic ones in particular) go through scipy's tanh-sinh
rule.  Both are wrapped so callers pass breakpoint lists instead of managing
interval splits by hand.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import integrate

__all__ = ["QuadratureConfig", "quad_breakpoints", "tanh_sinh"]


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-9
    rel_tol: float = 1e-9
    max_subdivisions: int = 400

    def __post_init__(self) -> None:
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be positive")


DEFAULT_QUAD = QuadratureConfig()


def quad_breakpoints(f, a: float, b: float, points=(), cfg: QuadratureConfig = DEFAULT_QUAD) -> float:
    """Adaptive quadrature of a scalar f over [a, b], splitting at breakpoints."""
    if a == b:
        return 0.0
    pts = sorted({float(p) for p in points if a < p < b})
    val, _ = integrate.quad(
        f, a, b,
        points=pts or None,
        epsabs=cfg.abs_tol, epsrel=cfg.rel_tol,
        limit=max(cfg.max_subdivisions, 10 * (len(pts) + 1)),
    )
    return val


def tanh_sinh(f, a: float, b: float, points=(), cfg: QuadratureConfig = DEFAULT_QUAD) -> float:
    """Tanh-sinh quadrature, splitting at interior breakpoints.

    f must accept numpy arrays.  Suited to integrands with integrable endpoint
    singularities (log or inverse square root).
    """
    if a == b:
        return 0.0
    edges = [a] + sorted({float(p) for p in points if a < p < b}) + [b]
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        res = integrate.tanhsinh(f, lo, hi, atol=cfg.abs_tol, rtol=cfg.rel_tol)
        total += float(res.integral)
    return total
