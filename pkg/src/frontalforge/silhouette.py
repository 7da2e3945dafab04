"""No-silhouette set of a frontal: pointwise membership with margin, and a
planar raster for curve frontals (ambient dimension 2).

A pole P belongs to the no-silhouette set when the support value
d(x) = (f(x)-P).nu(x) never vanishes over the parameter domain.  Membership
here is certified on a sampled grid only; grid density is the caller's
choice.  Since d is continuous on the connected parameter box, sampled
values of both signs certify a zero between samples, so membership requires
d to keep one sign with margin above a scale-aware threshold.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .frontal import Frontal

DEFAULT_NS_TOL_FRAC = 1e-9


@dataclass(frozen=True)
class NSReport:
    member: bool
    margin: float
    argmin_x: np.ndarray
    tol: float


@dataclass(frozen=True)
class RasterGrid:
    """Boolean membership raster over a planar bounding box; cells[iy, ix]
    is evaluated at the cell center."""

    bbox: tuple  # (xmin, xmax, ymin, ymax)
    resolution: tuple  # (nx, ny)
    cells: np.ndarray  # bool, shape (ny, nx)

    def __post_init__(self):
        xmin, xmax, ymin, ymax = self.bbox
        if not (xmax > xmin and ymax > ymin):
            raise ValueError("degenerate bounding box")
        nx, ny = self.resolution
        if nx < 2 or ny < 2:
            raise ValueError("resolution must be at least 2x2")
        if self.cells.shape != (ny, nx):
            raise ValueError("cells shape does not match resolution")

    def centers(self):
        """Cell-center coordinate axes (xs (nx,), ys (ny,))."""
        xmin, xmax, ymin, ymax = self.bbox
        nx, ny = self.resolution
        xs = xmin + (np.arange(nx) + 0.5) * (xmax - xmin) / nx
        ys = ymin + (np.arange(ny) + 0.5) * (ymax - ymin) / ny
        return xs, ys


def _ns_tol(scale: float, tol_frac: float) -> float:
    return tol_frac * max(scale, 1.0)


def ns_membership(F: Frontal, P, grid: np.ndarray,
                  tol_frac: float = DEFAULT_NS_TOL_FRAC) -> NSReport:
    """Grid-relative no-silhouette membership of the pole P.

    margin = min over grid of |(f(x)-P).nu(x)|; member iff the support value
    keeps one sign on the grid and the margin exceeds a scale-aware
    threshold (tol_frac times the image bbox diagonal).
    """
    grid = F.domain.wrap(np.atleast_2d(np.asarray(grid, dtype=float)))
    if grid.shape[0] == 0:
        raise ValueError("empty grid")
    P = np.asarray(P, dtype=float)
    fv = F.eval_f(grid)
    nv = F.eval_nu(grid)
    d = np.einsum("km,km->k", fv - P, nv)
    scale = float(np.linalg.norm(fv.max(axis=0) - fv.min(axis=0)))
    tol = _ns_tol(scale, tol_frac)
    member = bool(d.min() > tol or d.max() < -tol)
    i = int(np.argmin(np.abs(d)))
    return NSReport(member=member, margin=float(abs(d[i])),
                    argmin_x=grid[i], tol=tol)


def ns_raster(F: Frontal, bbox, resolution, grid: np.ndarray,
              tol_frac: float = DEFAULT_NS_TOL_FRAC,
              backend: str | None = None) -> RasterGrid:
    """Rasterized no-silhouette membership over a planar bounding box.

    bbox = (xmin, xmax, ymin, ymax); resolution = (nx, ny) or a single int.
    Results are deterministic and independent of evaluation order.
    """
    if F.ambient_dim != 2:
        raise ValueError("ns_raster requires ambient dimension 2")
    if np.isscalar(resolution):
        resolution = (int(resolution), int(resolution))
    nx, ny = resolution
    raster = RasterGrid(bbox=tuple(float(v) for v in bbox),
                        resolution=(nx, ny),
                        cells=np.zeros((ny, nx), dtype=bool))
    xs, ys = raster.centers()
    gx, gy = np.meshgrid(xs, ys)  # row-major: y varies by row
    poles = np.stack([gx.ravel(), gy.ravel()], axis=-1)

    grid = F.domain.wrap(np.atleast_2d(np.asarray(grid, dtype=float)))
    fv = F.eval_f(grid)
    nv = F.eval_nu(grid)
    dmin, dmax, _ = _kernels.support_extrema(fv, nv, poles, backend=backend)
    scale = float(np.linalg.norm(fv.max(axis=0) - fv.min(axis=0)))
    tol = _ns_tol(scale, tol_frac)
    cells = ((dmin > tol) | (dmax < -tol)).reshape(ny, nx)
    return RasterGrid(bbox=raster.bbox, resolution=raster.resolution,
                      cells=cells)


def raster_to_pgm(raster: RasterGrid) -> str:
    """Serialize to PGM (P2 ASCII): 255 = member, 0 = outside.  Rows are
    written top-to-bottom (largest y first) so images render upright."""
    nx, ny = raster.resolution
    lines = ["P2", f"{nx} {ny}", "255"]
    for iy in range(ny - 1, -1, -1):
        lines.append(" ".join("255" if v else "0" for v in raster.cells[iy]))
    return "\n".join(lines) + "\n"


def raster_to_csv(raster: RasterGrid) -> str:
    """Serialize to CSV rows `x,y,member` at cell centers, row-major from
    the bottom-left cell."""
    xs, ys = raster.centers()
    lines = ["x,y,member"]
    for iy in range(raster.resolution[1]):
        for ix in range(raster.resolution[0]):
            lines.append(f"{float(xs[ix])!r},{float(ys[iy])!r},"
                         f"{1 if raster.cells[iy, ix] else 0}")
    return "\n".join(lines) + "\n"
