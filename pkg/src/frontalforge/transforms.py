"""The four frontal transforms relative to a pole P.

Forward pair (source frontal written f~ with normal nu~):
  orthotomic   f(x) = 2((f~(x)-P).nu~(x)) nu~(x) + P   (mirror images of P)
  pedal        g(x) =  ((f~(x)-P).nu~(x)) nu~(x) + P   (feet of perpendiculars)

Inverse pair (requires P in the no-silhouette set of the input):
  anti-orthotomic  f~(x) = f(x) - ||f(x)-P||^2 / (2 (f(x)-P).nu(x)) nu(x)
  negative pedal   f~(x) = 2g(x) - P - ||g(x)-P||^2 / ((g(x)-P).nu(x)) nu(x)

Each returns a TransformResult whose `result` is a new lazy Frontal carrying
the induced Gauss map.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import GaussDegenerateError, PoleOnSilhouetteError
from .frontal import Frontal

DEFAULT_DEGENERACY_TOL = 1e-9
POLE_SAMPLER_SEED = 0xF20F7A1
# Composed transform maps pick up ~1/d^2 derivative growth near small
# support margins; a smaller central-difference step keeps truncation error
# below the verification tolerances without hitting roundoff.
TRANSFORM_FD_STEP = 1e-7


class TransformKind(enum.Enum):
    ORTHOTOMIC = "orthotomic"
    PEDAL = "pedal"
    ANTI_ORTHOTOMIC = "anti-orthotomic"
    NEGATIVE_PEDAL = "negative-pedal"


@dataclass(frozen=True)
class TransformResult:
    result: Frontal
    source: Frontal
    pole: np.ndarray
    kind: TransformKind


def _support(F: Frontal, P: np.ndarray, x: np.ndarray):
    """(f(x)-P).nu(x) together with f(x), nu(x)."""
    fv = F.eval_f(x)
    nv = F.eval_nu(x)
    d = np.einsum("km,km->k", fv - P, nv)
    return fv, nv, d


def orthotomic(F: Frontal, P, degeneracy_tol: float = DEFAULT_DEGENERACY_TOL
               ) -> TransformResult:
    """Mirror image of P in the tangent hyperplanes of F.

    The image map evaluates everywhere; the induced Gauss map requires
    (f~(x)-P).nu~(x) != 0 and raises GaussDegenerateError otherwise.
    """
    P = np.asarray(P, dtype=float)

    def f(x):
        fv, nv, d = _support(F, P, x)
        return 2.0 * d[:, None] * nv + P

    def nu(x):
        fv, nv, d = _support(F, P, x)
        bad = np.abs(d) <= degeneracy_tol
        if np.any(bad):
            i = int(np.argmax(bad))
            raise GaussDegenerateError(x[i], float(d[i]))
        diff = 2.0 * d[:, None] * nv + P - fv  # = f(x) - f~(x)
        return diff / np.linalg.norm(diff, axis=1)[:, None]

    out = Frontal(domain=F.domain, f=f, nu=nu, ambient_dim=F.ambient_dim,
                  fd_step=TRANSFORM_FD_STEP, name=f"orthotomic({F.name or 'frontal'})")
    return TransformResult(result=out, source=F, pole=P,
                           kind=TransformKind.ORTHOTOMIC)


def pedal(F: Frontal, P, degeneracy_tol: float = DEFAULT_DEGENERACY_TOL
          ) -> TransformResult:
    """Feet of the perpendiculars from P to the tangent hyperplanes of F."""
    P = np.asarray(P, dtype=float)

    def g(x):
        fv, nv, d = _support(F, P, x)
        return d[:, None] * nv + P

    def nu(x):
        fv, nv, d = _support(F, P, x)
        bad = np.abs(d) <= degeneracy_tol
        if np.any(bad):
            i = int(np.argmax(bad))
            raise GaussDegenerateError(x[i], float(d[i]))
        # 2g - P - f~ = f - f~ with f the orthotomic
        diff = 2.0 * d[:, None] * nv + P - fv
        return diff / np.linalg.norm(diff, axis=1)[:, None]

    out = Frontal(domain=F.domain, f=g, nu=nu, ambient_dim=F.ambient_dim,
                  fd_step=TRANSFORM_FD_STEP, name=f"pedal({F.name or 'frontal'})")
    return TransformResult(result=out, source=F, pole=P,
                           kind=TransformKind.PEDAL)


def _require_no_silhouette(x, d, scale, tol):
    bad = np.abs(d) <= tol * np.maximum(scale, 1e-300)
    if np.any(bad):
        i = int(np.argmax(bad))
        raise PoleOnSilhouetteError(x[i], float(d[i]))


def anti_orthotomic(F: Frontal, P,
                    degeneracy_tol: float = DEFAULT_DEGENERACY_TOL
                    ) -> TransformResult:
    """The unique frontal whose orthotomic relative to P is F.

    Hard error (PoleOnSilhouetteError) at any evaluated x where
    (f(x)-P).nu(x) vanishes relative to ||f(x)-P||.
    """
    P = np.asarray(P, dtype=float)

    def ftilde(x):
        fv, nv, d = _support(F, P, x)
        r2 = np.einsum("km,km->k", fv - P, fv - P)
        _require_no_silhouette(x, d, np.sqrt(r2), degeneracy_tol)
        return fv - (r2 / (2.0 * d))[:, None] * nv

    def nutilde(x):
        fv, _, d = _support(F, P, x)
        diff = fv - P
        r = np.linalg.norm(diff, axis=1)
        _require_no_silhouette(x, d, r, degeneracy_tol)
        return diff / r[:, None]

    out = Frontal(domain=F.domain, f=ftilde, nu=nutilde,
                  ambient_dim=F.ambient_dim, fd_step=TRANSFORM_FD_STEP,
                  name=f"anti-orthotomic({F.name or 'frontal'})")
    return TransformResult(result=out, source=F, pole=P,
                           kind=TransformKind.ANTI_ORTHOTOMIC)


def negative_pedal(G: Frontal, P,
                   degeneracy_tol: float = DEFAULT_DEGENERACY_TOL
                   ) -> TransformResult:
    """The unique frontal whose pedal relative to P is G."""
    P = np.asarray(P, dtype=float)

    def ftilde(x):
        gv, nv, d = _support(G, P, x)
        r2 = np.einsum("km,km->k", gv - P, gv - P)
        _require_no_silhouette(x, d, np.sqrt(r2), degeneracy_tol)
        return 2.0 * gv - P - (r2 / d)[:, None] * nv

    def nutilde(x):
        gv, _, d = _support(G, P, x)
        diff = gv - P
        r = np.linalg.norm(diff, axis=1)
        _require_no_silhouette(x, d, r, degeneracy_tol)
        return diff / r[:, None]

    out = Frontal(domain=G.domain, f=ftilde, nu=nutilde,
                  ambient_dim=G.ambient_dim, fd_step=TRANSFORM_FD_STEP,
                  name=f"negative-pedal({G.name or 'frontal'})")
    return TransformResult(result=out, source=G, pole=P,
                           kind=TransformKind.NEGATIVE_PEDAL)


TRANSFORMS = {
    TransformKind.ORTHOTOMIC: orthotomic,
    TransformKind.PEDAL: pedal,
    TransformKind.ANTI_ORTHOTOMIC: anti_orthotomic,
    TransformKind.NEGATIVE_PEDAL: negative_pedal,
}


def transform(kind: TransformKind, F: Frontal, P, **kw) -> TransformResult:
    return TRANSFORMS[kind](F, P, **kw)


def sample_poles(F: Frontal, grid: np.ndarray, count: int,
                 seed: int = POLE_SAMPLER_SEED,
                 margin_frac: float = 1e-3,
                 max_tries: int = 20000) -> np.ndarray:
    """Rejection-sample `count` poles inside the no-silhouette set of F.

    Candidates are drawn uniformly from the image bounding box inflated by
    half its diagonal; a candidate is accepted iff the support values
    (f(x)-P).nu(x) keep one sign over the grid with margin exceeding
    margin_frac * scale (scale = bounding-box diagonal).  Mixed signs mean a
    silhouette zero lies between samples, so such poles are rejected even
    when the sampled margin is large.
    """
    grid = F.domain.wrap(np.atleast_2d(np.asarray(grid, dtype=float)))
    fv = F.eval_f(grid)
    nv = F.eval_nu(grid)
    lo = fv.min(axis=0)
    hi = fv.max(axis=0)
    diag = float(np.linalg.norm(hi - lo))
    pad = 0.5 * diag + 0.5  # keep the box non-degenerate for point images
    lo = lo - pad
    hi = hi + pad
    scale = max(diag, 1.0)
    rng = np.random.default_rng(seed)
    a = np.einsum("km,km->k", fv, nv)
    poles = []
    for _ in range(max_tries):
        P = rng.uniform(lo, hi)
        d = a - nv @ P
        if float(d.min()) > margin_frac * scale \
                or float(d.max()) < -margin_frac * scale:
            poles.append(P)
            if len(poles) == count:
                return np.array(poles)
    raise RuntimeError(
        f"pole sampler found only {len(poles)}/{count} valid poles "
        f"in {max_tries} tries")
