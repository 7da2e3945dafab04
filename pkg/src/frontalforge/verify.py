"""Named verification suites over catalog frontals and sampled poles.

Each suite returns a plain dict (JSON-serializable) with a boolean "passed",
the residuals it measured, and the tolerances it enforced.  The CLI `verify`
subcommand and the acceptance tests both run these.
"""
from __future__ import annotations

import numpy as np

from .analysis import cahn_hoffman, front_equivalence, opening_residual
from .catalog import catalog, catalog_names
from .errors import DegenerateNu2Error, SingularGaussMapError
from .frontal import Frontal, check_frontal
from .silhouette import ns_membership
from .transforms import (anti_orthotomic, negative_pedal, orthotomic, pedal,
                         sample_poles)

ALL_CATALOG = tuple(catalog_names())


def grid_for(F: Frontal, total: int, interior_margin: float = 0.0) -> np.ndarray:
    """Roughly `total` samples, split evenly across parameter axes.

    interior_margin > 0 insets non-periodic axes by that fraction of their
    length (used where finite differences need room around each point).
    """
    n = F.param_dim
    per_axis = max(2, int(round(total ** (1.0 / n))))
    dom = F.domain
    if interior_margin > 0.0 and np.any(~dom.periodic):
        span = dom.hi - dom.lo
        lo = np.where(dom.periodic, dom.lo, dom.lo + interior_margin * span)
        hi = np.where(dom.periodic, dom.hi, dom.hi - interior_margin * span)
        from .frontal import ParamDomain

        dom = ParamDomain(lo, hi, dom.periodic)
    return dom.grid([per_axis] * n)


def _poles_for(F: Frontal, grid: np.ndarray, count: int, seed=None):
    kw = {} if seed is None else {"seed": seed}
    return sample_poles(F, grid, count, **kw)


def suite_frontal_condition(F: Frontal, samples: int = 2048,
                            tol: float = 1e-6) -> dict:
    """The tangency condition df . nu = 0 on a sample grid."""
    grid = grid_for(F, samples)
    rep = check_frontal(F, grid, tol=tol)
    return {
        "suite": "frontal-condition",
        "frontal": F.name,
        "samples": grid.shape[0],
        "max_residual": rep.max_residual,
        "max_unit_defect": rep.max_unit_defect,
        "worst_x": rep.worst_x.tolist(),
        "tol": tol,
        "passed": rep.passed and rep.max_unit_defect <= 1e-9,
    }


def suite_prop1(F: Frontal, samples: int = 1024, n_poles: int = 5,
                tol: float = 1e-8, frontal_tol: float = 1e-6) -> dict:
    """Orthotomic outputs: frontal condition with the induced Gauss map,
    the support identity ||f-f~|| ((f-P).nu) = 2 ((f~-P).nu~)^2, and
    f(x) != f~(x) wherever the hypothesis margin exceeds 1e-3."""
    grid = grid_for(F, samples, interior_margin=1e-3)
    poles = _poles_for(F, grid, n_poles)
    ft = F.eval_f(grid)
    nt = F.eval_nu(grid)
    worst_identity = 0.0
    worst_frontal = 0.0
    min_separation = np.inf
    for P in poles:
        res = orthotomic(F, P).result
        worst_frontal = max(worst_frontal,
                            check_frontal(res, grid, tol=frontal_tol).max_residual)
        fv = res.eval_f(grid)
        nv = res.eval_nu(grid)
        d_tilde = np.einsum("km,km->k", ft - P, nt)
        lhs = np.linalg.norm(fv - ft, axis=1) \
            * np.einsum("km,km->k", fv - P, nv)
        worst_identity = max(worst_identity,
                             float(np.max(np.abs(lhs - 2.0 * d_tilde**2))))
        sep = np.linalg.norm(fv - ft, axis=1)
        min_separation = min(min_separation,
                             float(np.min(sep[np.abs(d_tilde) > 1e-3])))
    return {
        "suite": "prop1",
        "frontal": F.name,
        "poles": poles.tolist(),
        "max_identity_residual": worst_identity,
        "max_frontal_residual": worst_frontal,
        "min_separation": min_separation,
        "tol": tol,
        "passed": (worst_identity <= tol and worst_frontal <= frontal_tol
                   and min_separation > 1e-3),
    }


def suite_thm1(F: Frontal, samples: int = 1024, n_poles: int = 5) -> dict:
    """Anti-orthotomic identities: induced-normal tangency, the support
    value (f~-P).nu~ = ||f-P||/2, the equidistance ||f~-P|| = ||f~-f||, and
    both round trips with the orthotomic."""
    grid = grid_for(F, samples, interior_margin=1e-3)
    poles = _poles_for(F, grid, n_poles)
    fv = F.eval_f(grid)
    worst = {"frontal": 0.0, "support": 0.0, "equidistance": 0.0,
             "roundtrip": 0.0}
    for P in poles:
        anti = anti_orthotomic(F, P).result
        worst["frontal"] = max(worst["frontal"],
                               check_frontal(anti, grid).max_residual)
        ftv = anti.eval_f(grid)
        ntv = anti.eval_nu(grid)
        r = np.linalg.norm(fv - P, axis=1)
        supp = np.einsum("km,km->k", ftv - P, ntv)
        worst["support"] = max(worst["support"],
                               float(np.max(np.abs(supp - r / 2.0))))
        eq = np.abs(np.linalg.norm(ftv - P, axis=1)
                    - np.linalg.norm(ftv - fv, axis=1))
        worst["equidistance"] = max(worst["equidistance"], float(np.max(eq)))
        # orthotomic of the anti-orthotomic restores F ...
        back1 = orthotomic(anti, P).result.eval_f(grid)
        # ... and anti-orthotomic of the orthotomic restores F
        back2 = anti_orthotomic(orthotomic(F, P).result, P).result.eval_f(grid)
        rt = max(float(np.max(np.linalg.norm(back1 - fv, axis=1))),
                 float(np.max(np.linalg.norm(back2 - fv, axis=1))))
        worst["roundtrip"] = max(worst["roundtrip"], rt)
    tols = {"frontal": 1e-6, "support": 1e-8, "equidistance": 1e-9,
            "roundtrip": 1e-8}
    return {
        "suite": "thm1",
        "frontal": F.name,
        "poles": poles.tolist(),
        "max_residuals": worst,
        "tols": tols,
        "passed": all(worst[k] <= tols[k] for k in worst),
    }


def suite_thm2(G: Frontal, P, samples: int = 1024,
               det_min: float = 1e-3, cond_max: float = 1e3,
               tol: float = 1e-5) -> dict:
    """The vector formula f~ - g = ((J nu~)^-1)^t grad(gamma) (+ nothing
    along nu~) against the direct negative-pedal computation, plus the
    singular-gamma corollary in both directions."""
    grid = grid_for(G, samples, interior_margin=2e-4)
    worst = 0.0
    worst_ortho = 0.0
    corollary_ok = True
    tested = 0
    for x in grid:
        try:
            rep = cahn_hoffman(G, P, x[None, :], jnu_tol=det_min)
        except SingularGaussMapError:
            continue
        if rep.jnu_inv_norm > cond_max:
            continue
        tested += 1
        scale = 1.0 + float(np.linalg.norm(rep.direct))
        worst = max(worst, rep.residual / scale)
        worst_ortho = max(worst_ortho,
                          abs(float(rep.formula @ rep.gauss_direction)))
        gn = float(np.linalg.norm(rep.grad_gamma))
        dn = float(np.linalg.norm(rep.direct))
        if gn <= 1e-7 and dn > 1e-4:
            corollary_ok = False
        if dn <= 1e-7 and gn > 1e-4:
            corollary_ok = False
    return {
        "suite": "thm2",
        "frontal": G.name,
        "pole": np.asarray(P, dtype=float).tolist(),
        "points_tested": tested,
        "max_residual": worst,
        "max_normal_component": worst_ortho,
        "corollary_ok": corollary_ok,
        "tol": tol,
        "passed": worst <= tol and corollary_ok and worst_ortho <= 1e-9
        and tested > 0,
    }


def suite_thm3(F: Frontal, samples: int = 512, n_poles: int = 5,
               nu2_min: float = 1e-3) -> dict:
    """The opening identity: the weighted sum of Gauss-component gradients
    cancels the gradient of the half-distance, wherever the normal
    coefficient is bounded away from zero."""
    grid = grid_for(F, samples, interior_margin=1e-3)
    poles = _poles_for(F, grid, n_poles)
    worst = 0.0
    tested = 0
    for P in poles:
        for x in grid:
            fv = F.eval_f(x[None, :])[0]
            gamma = float(np.linalg.norm(fv - P)) / 2.0
            try:
                res = opening_residual(F, P, x[None, :], nu2_tol=nu2_min)
            except DegenerateNu2Error:
                continue
            tested += 1
            worst = max(worst, res / (1.0 + gamma))
    return {
        "suite": "thm3",
        "frontal": F.name,
        "poles": poles.tolist(),
        "points_tested": tested,
        "max_scaled_residual": worst,
        "tol": 1e-6,
        "passed": worst <= 1e-6 and tested > 0,
    }


def suite_thm4(F: Frontal, samples: int = 256, n_poles: int = 5,
               rank_tol: float = 1e-6) -> dict:
    """Three-way agreement of the front criteria outside the rank-ambiguity
    band."""
    grid = grid_for(F, samples, interior_margin=1e-3)
    poles = _poles_for(F, grid, n_poles)
    tested = 0
    excluded = 0
    inconsistent = 0
    for P in poles:
        for x in grid:
            rep = front_equivalence(F, P, x[None, :], tol=rank_tol)
            if rep.ambiguous:
                excluded += 1
                continue
            tested += 1
            if not rep.consistent:
                inconsistent += 1
    return {
        "suite": "thm4",
        "frontal": F.name,
        "poles": poles.tolist(),
        "points_tested": tested,
        "points_excluded": excluded,
        "inconsistent": inconsistent,
        "passed": inconsistent == 0 and tested > 0,
    }


def suite_square_reconstruction(P=(0.3, -0.2), samples: int = 4096,
                                tol: float = 1e-6) -> dict:
    """The orthotomic of the square frontal: four mirror points, four
    vertex-centered arcs with the predicted radii on the side away from P,
    and the pedal as the 50% shrink toward P."""
    P = np.asarray(P, dtype=float)
    p1, p2 = P
    F = catalog("square")
    ortho = orthotomic(F, P).result
    ped = pedal(F, P).result

    mirror = {
        1: np.array([2.0 - p1, p2]),
        3: np.array([p1, 2.0 - p2]),
        5: np.array([-2.0 - p1, p2]),
        7: np.array([p1, -2.0 - p2]),
    }
    verts = {0: np.array([1.0, -1.0]), 2: np.array([1.0, 1.0]),
             4: np.array([-1.0, 1.0]), 6: np.array([-1.0, -1.0])}
    # arc endpoints: adjacent mirror points in traversal order
    endpoints = {0: (mirror[7], mirror[1]), 2: (mirror[1], mirror[3]),
                 4: (mirror[3], mirror[5]), 6: (mirror[5], mirror[7])}

    t = np.linspace(0.0, 8.0, samples, endpoint=False)[:, None]
    seg = np.floor(t[:, 0]).astype(int) % 8
    fv = ortho.eval_f(t)

    worst_mirror = 0.0
    for k, target in mirror.items():
        pts = fv[seg == k]
        worst_mirror = max(worst_mirror,
                           float(np.max(np.linalg.norm(pts - target, axis=1))))

    worst_radius = 0.0
    side_ok = True
    for k, center in verts.items():
        pts = fv[seg == k]
        radius = float(np.linalg.norm(center - P))
        worst_radius = max(worst_radius, float(np.max(np.abs(
            np.linalg.norm(pts - center, axis=1) - radius))))
        a, b = endpoints[k]
        chord = b - a

        def cross2(v):
            return chord[0] * v[..., 1] - chord[1] * v[..., 0]

        # arc must lie on the opposite side of the chord from P
        side_P = np.sign(cross2(P - a))
        cross = cross2(pts - a)
        if np.any(cross * side_P > tol):
            side_ok = False

    pedv = ped.eval_f(t)
    worst_shrink = float(np.max(np.linalg.norm(pedv - (fv + P) / 2.0, axis=1)))

    return {
        "suite": "square-reconstruction",
        "pole": P.tolist(),
        "max_mirror_residual": worst_mirror,
        "max_radius_residual": worst_radius,
        "hemicircle_side_ok": side_ok,
        "max_pedal_shrink_residual": worst_shrink,
        "tol": tol,
        "passed": (worst_mirror <= tol and worst_radius <= tol and side_ok
                   and worst_shrink <= 1e-10),
    }


SUITES = ("frontal-condition", "thm1", "prop1", "thm2", "thm3", "thm4",
          "square-reconstruction")


def run_suite(name: str, F: Frontal | None = None, pole=None,
              n_poles: int = 5, samples: int | None = None) -> dict:
    """Dispatch a named suite with its default sample count."""
    if name == "square-reconstruction":
        kw = {} if samples is None else {"samples": samples}
        if pole is not None:
            kw["P"] = pole
        return suite_square_reconstruction(**kw)
    if F is None:
        raise ValueError(f"suite {name!r} needs a frontal")
    if name == "frontal-condition":
        return suite_frontal_condition(F, samples=samples or 2048)
    if name == "prop1":
        return suite_prop1(F, samples=samples or 1024, n_poles=n_poles)
    if name == "thm1":
        return suite_thm1(F, samples=samples or 1024, n_poles=n_poles)
    if name == "thm2":
        if pole is None:
            grid = grid_for(F, samples or 256, interior_margin=1e-3)
            pole = sample_poles(F, grid, 1)[0]
        return suite_thm2(F, pole, samples=samples or 256)
    if name == "thm3":
        return suite_thm3(F, samples=samples or 256, n_poles=n_poles)
    if name == "thm4":
        return suite_thm4(F, samples=samples or 256, n_poles=n_poles)
    raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
