"""The frontal data model: parameter domains, evaluable (f, nu) pairs with
derivatives, sampling, and the tangency-condition verifier.

A frontal is a map f into R^m (m = n+1) together with a unit normal field
nu into S^(m-1) satisfying df_x(v) . nu(x) = 0 for every tangent direction v.
Evaluators are vectorized: they accept parameter arrays of shape (k, n) and
return (k, m) arrays.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import DomainError

DEFAULT_FD_STEP = 1e-5
DEFAULT_FRONTAL_TOL = 1e-6


@dataclass(frozen=True)
class ParamDomain:
    """A box [lo_i, hi_i]^n with optional per-axis periodicity.

    A periodic axis has period hi - lo; points on it are wrapped into
    [lo, hi) before evaluation.
    """

    lo: np.ndarray
    hi: np.ndarray
    periodic: np.ndarray

    def __post_init__(self):
        lo = np.atleast_1d(np.asarray(self.lo, dtype=float))
        hi = np.atleast_1d(np.asarray(self.hi, dtype=float))
        per = np.atleast_1d(np.asarray(self.periodic, dtype=bool))
        if lo.shape != hi.shape or lo.shape != per.shape:
            raise ValueError("lo, hi, periodic must have matching shapes")
        if np.any(hi <= lo):
            raise ValueError("each axis needs lo < hi")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "periodic", per)

    @property
    def dim(self) -> int:
        return self.lo.shape[0]

    def wrap(self, x: np.ndarray) -> np.ndarray:
        """Wrap periodic axes into [lo, hi); non-periodic axes pass through."""
        x = np.atleast_2d(np.asarray(x, dtype=float))
        out = x.copy()
        for j in range(self.dim):
            if self.periodic[j]:
                period = self.hi[j] - self.lo[j]
                out[:, j] = self.lo[j] + np.mod(x[:, j] - self.lo[j], period)
        return out

    def contains(self, x: np.ndarray, atol: float = 1e-12) -> np.ndarray:
        x = self.wrap(x)
        ok = np.ones(x.shape[0], dtype=bool)
        for j in range(self.dim):
            if not self.periodic[j]:
                ok &= (x[:, j] >= self.lo[j] - atol)
                ok &= (x[:, j] <= self.hi[j] + atol)
        return ok

    def grid(self, counts) -> np.ndarray:
        """Regular sample grid, shape (prod(counts), n).

        Periodic axes exclude the right endpoint (it aliases the left one);
        non-periodic axes include both endpoints.
        """
        counts = np.atleast_1d(np.asarray(counts, dtype=int))
        if counts.shape[0] == 1 and self.dim > 1:
            counts = np.full(self.dim, counts[0])
        if counts.shape[0] != self.dim:
            raise ValueError("one sample count per axis required")
        if np.any(counts < 2):
            raise ValueError("need at least 2 samples per axis")
        axes = []
        for j in range(self.dim):
            if self.periodic[j]:
                axes.append(np.linspace(self.lo[j], self.hi[j], counts[j],
                                        endpoint=False))
            else:
                axes.append(np.linspace(self.lo[j], self.hi[j], counts[j]))
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=-1)


def interval(lo: float, hi: float, periodic: bool = False) -> ParamDomain:
    """Convenience constructor for 1-parameter domains."""
    return ParamDomain(np.array([lo]), np.array([hi]), np.array([periodic]))


@dataclass(frozen=True)
class Frontal:
    """An evaluable frontal (f, nu) over a box domain.

    f, nu: vectorized evaluators (k, n) -> (k, m).  jac_f / jac_nu, when
    given, are analytic Jacobian evaluators (k, n) -> (k, m, n); otherwise
    central finite differences with step fd_step are used.
    """

    domain: ParamDomain
    f: Callable[[np.ndarray], np.ndarray]
    nu: Callable[[np.ndarray], np.ndarray]
    ambient_dim: int
    jac_f: Optional[Callable[[np.ndarray], np.ndarray]] = None
    jac_nu: Optional[Callable[[np.ndarray], np.ndarray]] = None
    fd_step: float = DEFAULT_FD_STEP
    name: str = ""
    params: dict = field(default_factory=dict)

    @property
    def param_dim(self) -> int:
        return self.domain.dim

    def eval_f(self, x: np.ndarray) -> np.ndarray:
        return np.asarray(self.f(self.domain.wrap(x)), dtype=float)

    def eval_nu(self, x: np.ndarray) -> np.ndarray:
        return np.asarray(self.nu(self.domain.wrap(x)), dtype=float)


@dataclass(frozen=True)
class SampledMap:
    """Evaluated grid of a map: parameter points, image values, and
    (optionally) Gauss-map values.  The CSV/SVG payload."""

    params: np.ndarray
    values: np.ndarray
    gauss: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.params.shape[0] != self.values.shape[0]:
            raise ValueError("params/values length mismatch")
        if self.gauss is not None and self.gauss.shape != self.values.shape:
            raise ValueError("gauss shape mismatch")
        for a in (self.params, self.values, self.gauss):
            if a is not None and not np.all(np.isfinite(a)):
                raise ValueError("non-finite entries in sampled map")


def sample(F: Frontal, x: np.ndarray, with_gauss: bool = True) -> SampledMap:
    x = F.domain.wrap(x)
    vals = F.eval_f(x)
    gauss = F.eval_nu(x) if with_gauss else None
    return SampledMap(params=x, values=vals, gauss=gauss)


def _fd_jacobian(fun, domain: ParamDomain, x: np.ndarray, h: float) -> np.ndarray:
    """Central-difference Jacobian of a vectorized map, batch shape (k, m, n).

    Points exactly on a non-periodic boundary get second-order one-sided
    stencils; interior points closer than h to such a boundary are rejected.
    """
    x = domain.wrap(np.atleast_2d(np.asarray(x, dtype=float)))
    k, n = x.shape
    f0 = np.asarray(fun(x), dtype=float)
    m = f0.shape[1]

    def ev(pts):
        return np.asarray(fun(pts), dtype=float)

    J = np.empty((k, m, n))
    for j in range(n):
        lo, hi = domain.lo[j], domain.hi[j]
        if domain.periodic[j]:
            xp = x.copy()
            xm = x.copy()
            xp[:, j] += h
            xm[:, j] -= h
            J[:, :, j] = (ev(domain.wrap(xp)) - ev(domain.wrap(xm))) / (2.0 * h)
            continue
        d_lo = x[:, j] - lo
        d_hi = hi - x[:, j]
        on_lo = d_lo <= 1e-14 * max(1.0, abs(lo))
        on_hi = d_hi <= 1e-14 * max(1.0, abs(hi))
        bad = (~on_lo & (d_lo < h)) | (~on_hi & (d_hi < h))
        if np.any(bad):
            raise DomainError(
                f"axis {j}: point within fd_step={h} of a non-periodic "
                f"boundary (first offender {x[np.argmax(bad)]})")
        xp = x.copy()
        xm = x.copy()
        xp[:, j] += h
        xm[:, j] -= h
        xp[on_hi, j] = x[on_hi, j]
        xm[on_lo, j] = x[on_lo, j]
        J[:, :, j] = (ev(xp) - ev(xm)) / (xp[:, j] - xm[:, j])[:, None]
        # upgrade exact-boundary points to (-3 f0 + 4 f1 - f2) / (2h), O(h^2)
        for mask, sgn in ((on_lo, 1.0), (on_hi, -1.0)):
            if not np.any(mask):
                continue
            x1 = x[mask].copy()
            x2 = x[mask].copy()
            x1[:, j] += sgn * h
            x2[:, j] += sgn * 2.0 * h
            J[mask, :, j] = sgn * (-3.0 * f0[mask] + 4.0 * ev(x1)
                                   - ev(x2)) / (2.0 * h)
    return J


def jacobian_f(F: Frontal, x: np.ndarray) -> np.ndarray:
    """Jacobian of f at each point of x, shape (k, m, n)."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    if F.jac_f is not None:
        return np.asarray(F.jac_f(F.domain.wrap(x)), dtype=float)
    return _fd_jacobian(F.f, F.domain, x, F.fd_step)


def jacobian_nu(F: Frontal, x: np.ndarray) -> np.ndarray:
    """Jacobian of nu at each point of x, shape (k, m, n)."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    if F.jac_nu is not None:
        return np.asarray(F.jac_nu(F.domain.wrap(x)), dtype=float)
    return _fd_jacobian(F.nu, F.domain, x, F.fd_step)


@dataclass(frozen=True)
class FrontalCheck:
    """Result of verifying the tangency condition df . nu = 0 on a grid."""

    max_residual: float
    worst_x: np.ndarray
    max_unit_defect: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol


def check_frontal(F: Frontal, grid: np.ndarray,
                  tol: float = DEFAULT_FRONTAL_TOL) -> FrontalCheck:
    """Max over grid points and Jacobian columns of |df_column . nu|.

    Also records how far nu strays from unit norm on the grid.
    """
    grid = F.domain.wrap(np.atleast_2d(np.asarray(grid, dtype=float)))
    if grid.shape[0] == 0:
        raise ValueError("empty grid")
    nu = F.eval_nu(grid)
    unit_defect = float(np.max(np.abs(np.linalg.norm(nu, axis=1) - 1.0)))
    J = jacobian_f(F, grid)
    # residuals[k, j] = | J[k,:,j] . nu[k] |
    res = np.abs(np.einsum("kmj,km->kj", J, nu))
    flat = int(np.argmax(res))
    worst = grid[flat // res.shape[1]]
    return FrontalCheck(max_residual=float(res.max()), worst_x=worst,
                        max_unit_defect=unit_defect, tol=tol)
