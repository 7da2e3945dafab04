"""Catalog of analytic test frontals.

Names: circle, circle-cubic, square, cusp, nonfront, sphere, constant.
All evaluators are vectorized over parameter arrays of shape (k, n).
"""
from __future__ import annotations

import math

import numpy as np

from .errors import CatalogParameterError, UnknownCatalogError
from .frontal import Frontal, ParamDomain, interval

TWO_PI = 2.0 * math.pi


def smooth_step(u: np.ndarray) -> np.ndarray:
    """C-infinity step: 0 for u <= 0, 1 for u >= 1, strictly increasing
    between, flat to all orders at both ends.

    s(u) = sigma(u) / (sigma(u) + sigma(1-u)) with sigma(u) = exp(-1/u).
    """
    u = np.asarray(u, dtype=float)
    a = _bump(u)
    b = _bump(1.0 - u)
    return a / (a + b)


def smooth_step_deriv(u: np.ndarray) -> np.ndarray:
    """Derivative of smooth_step."""
    u = np.asarray(u, dtype=float)
    a = _bump(u)
    b = _bump(1.0 - u)
    inner = (u > 0.0) & (u < 1.0)
    out = np.zeros_like(u)
    uu = np.where(inner, u, 0.5)
    out[inner] = (a * b * (1.0 / uu**2 + 1.0 / (1.0 - uu) ** 2))[inner] \
        / (a + b)[inner] ** 2
    return out


def _bump(u: np.ndarray) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    pos = u > 0.0
    safe = np.where(pos, u, 1.0)
    return np.where(pos, np.exp(-1.0 / safe), 0.0)


def _circle(R: float = 1.0) -> Frontal:
    if R <= 0.0:
        raise CatalogParameterError("circle: R must be positive")

    def f(x):
        t = x[:, 0]
        return R * np.stack([np.cos(t), np.sin(t)], axis=-1)

    def nu(x):
        t = x[:, 0]
        return np.stack([np.cos(t), np.sin(t)], axis=-1)

    def jac_f(x):
        t = x[:, 0]
        return R * np.stack([-np.sin(t), np.cos(t)], axis=-1)[:, :, None]

    def jac_nu(x):
        t = x[:, 0]
        return np.stack([-np.sin(t), np.cos(t)], axis=-1)[:, :, None]

    return Frontal(domain=interval(0.0, TWO_PI, periodic=True), f=f, nu=nu,
                   ambient_dim=2, jac_f=jac_f, jac_nu=jac_nu,
                   name="circle", params={"R": R})


def _circle_cubic(c: float = 1.2) -> Frontal:
    if c <= 0.0:
        raise CatalogParameterError("circle-cubic: c must be positive")

    def f(x):
        t3 = x[:, 0] ** 3
        return np.stack([np.cos(t3), np.sin(t3)], axis=-1)

    def jac_f(x):
        t = x[:, 0]
        t3 = t**3
        return (3.0 * t**2)[:, None, None] \
            * np.stack([-np.sin(t3), np.cos(t3)], axis=-1)[:, :, None]

    return Frontal(domain=interval(-c, c), f=f, nu=f, ambient_dim=2,
                   jac_f=jac_f, jac_nu=jac_f,
                   name="circle-cubic", params={"c": c})


# Per unit-length segment of the period-8 square frontal:
#   corner segments (even) hold f fixed at a vertex while the normal swings;
#   edge segments (odd) hold the normal fixed while f runs along an edge.
_SQUARE_VERTS = {0: (1.0, -1.0), 2: (1.0, 1.0), 4: (-1.0, 1.0), 6: (-1.0, -1.0)}


def _square_xy(t: np.ndarray):
    tau = np.mod(t, 8.0)
    seg = np.floor(tau).astype(int) % 8
    u = tau - np.floor(tau)
    s = smooth_step(u)
    x = np.empty_like(tau)
    y = np.empty_like(tau)
    for k in range(8):
        mk = seg == k
        if not np.any(mk):
            continue
        if k in _SQUARE_VERTS:
            x[mk], y[mk] = _SQUARE_VERTS[k]
        elif k == 1:
            x[mk] = 1.0
            y[mk] = -1.0 + 2.0 * s[mk]
        elif k == 3:
            x[mk] = 1.0 - 2.0 * s[mk]
            y[mk] = 1.0
        elif k == 5:
            x[mk] = -1.0
            y[mk] = 1.0 - 2.0 * s[mk]
        else:  # k == 7
            x[mk] = -1.0 + 2.0 * s[mk]
            y[mk] = -1.0
    return x, y, seg, u, s


def square_normal_components(t: np.ndarray):
    """The raw (n1, n2) normal field of the square frontal (not normalized).

    Never (0, 0): on corner segments it interpolates between adjacent edge
    normals through a diagonal direction.
    """
    t = np.asarray(t, dtype=float)
    tau = np.mod(t, 8.0)
    seg = np.floor(tau).astype(int) % 8
    u = tau - np.floor(tau)
    s = smooth_step(u)
    n1 = np.empty_like(tau)
    n2 = np.empty_like(tau)
    for k in range(8):
        mk = seg == k
        if not np.any(mk):
            continue
        if k == 0:
            n1[mk], n2[mk] = s[mk], s[mk] - 1.0
        elif k == 1:
            n1[mk], n2[mk] = 1.0, 0.0
        elif k == 2:
            n1[mk], n2[mk] = 1.0 - s[mk], s[mk]
        elif k == 3:
            n1[mk], n2[mk] = 0.0, 1.0
        elif k == 4:
            n1[mk], n2[mk] = -s[mk], 1.0 - s[mk]
        elif k == 5:
            n1[mk], n2[mk] = -1.0, 0.0
        elif k == 6:
            n1[mk], n2[mk] = s[mk] - 1.0, -s[mk]
        else:  # k == 7
            n1[mk], n2[mk] = 0.0, -1.0
    return n1, n2


def _square() -> Frontal:
    def f(x):
        px, py, *_ = _square_xy(x[:, 0])
        return np.stack([px, py], axis=-1)

    def nu(x):
        n1, n2 = square_normal_components(x[:, 0])
        nrm = np.hypot(n1, n2)
        return np.stack([n1 / nrm, n2 / nrm], axis=-1)

    def jac_f(x):
        t = x[:, 0]
        tau = np.mod(t, 8.0)
        seg = np.floor(tau).astype(int) % 8
        u = tau - np.floor(tau)
        ds = 2.0 * smooth_step_deriv(u)
        dx = np.zeros_like(tau)
        dy = np.zeros_like(tau)
        dy[seg == 1] = ds[seg == 1]
        dx[seg == 3] = -ds[seg == 3]
        dy[seg == 5] = -ds[seg == 5]
        dx[seg == 7] = ds[seg == 7]
        return np.stack([dx, dy], axis=-1)[:, :, None]

    return Frontal(domain=interval(0.0, 8.0, periodic=True), f=f, nu=nu,
                   ambient_dim=2, jac_f=jac_f, name="square")


def _cusp() -> Frontal:
    def f(x):
        t = x[:, 0]
        return np.stack([t**2, t**3], axis=-1)

    def nu(x):
        t = x[:, 0]
        nrm = np.sqrt(9.0 * t**2 + 4.0)
        return np.stack([3.0 * t / nrm, -2.0 / nrm], axis=-1)

    def jac_f(x):
        t = x[:, 0]
        return np.stack([2.0 * t, 3.0 * t**2], axis=-1)[:, :, None]

    def jac_nu(x):
        t = x[:, 0]
        nrm3 = (9.0 * t**2 + 4.0) ** 1.5
        return np.stack([12.0 / nrm3, 18.0 * t / nrm3], axis=-1)[:, :, None]

    return Frontal(domain=interval(-1.0, 1.0), f=f, nu=nu, ambient_dim=2,
                   jac_f=jac_f, jac_nu=jac_nu, name="cusp")


def _nonfront() -> Frontal:
    def f(x):
        t = x[:, 0]
        return np.stack([t**3, t**6], axis=-1)

    def nu(x):
        t = x[:, 0]
        nrm = np.sqrt(4.0 * t**6 + 1.0)
        return np.stack([-2.0 * t**3 / nrm, 1.0 / nrm], axis=-1)

    def jac_f(x):
        t = x[:, 0]
        return np.stack([3.0 * t**2, 6.0 * t**5], axis=-1)[:, :, None]

    def jac_nu(x):
        t = x[:, 0]
        nrm3 = (4.0 * t**6 + 1.0) ** 1.5
        return np.stack([-6.0 * t**2 / nrm3,
                         -12.0 * t**5 / nrm3], axis=-1)[:, :, None]

    return Frontal(domain=interval(-1.0, 1.0), f=f, nu=nu, ambient_dim=2,
                   jac_f=jac_f, jac_nu=jac_nu, name="nonfront")


def _sphere(polar_margin: float = 0.3) -> Frontal:
    if not 0.0 < polar_margin < math.pi / 2:
        raise CatalogParameterError("sphere: polar_margin must be in (0, pi/2)")

    def f(x):
        az, pol = x[:, 0], x[:, 1]
        sp = np.sin(pol)
        return np.stack([sp * np.cos(az), sp * np.sin(az), np.cos(pol)],
                        axis=-1)

    def jac_f(x):
        az, pol = x[:, 0], x[:, 1]
        sp, cp = np.sin(pol), np.cos(pol)
        ca, sa = np.cos(az), np.sin(az)
        J = np.empty((x.shape[0], 3, 2))
        J[:, 0, 0] = -sp * sa
        J[:, 1, 0] = sp * ca
        J[:, 2, 0] = 0.0
        J[:, 0, 1] = cp * ca
        J[:, 1, 1] = cp * sa
        J[:, 2, 1] = -sp
        return J

    dom = ParamDomain(np.array([0.0, polar_margin]),
                      np.array([TWO_PI, math.pi - polar_margin]),
                      np.array([True, False]))
    return Frontal(domain=dom, f=f, nu=f, ambient_dim=3,
                   jac_f=jac_f, jac_nu=jac_f,
                   name="sphere", params={"polar_margin": polar_margin})


def _constant() -> Frontal:
    def f(x):
        out = np.zeros((x.shape[0], 2))
        out[:, 1] = -1.0
        return out

    def nu(x):
        out = np.zeros((x.shape[0], 2))
        out[:, 0] = -1.0
        return out

    def jac(x):
        return np.zeros((x.shape[0], 2, 1))

    return Frontal(domain=interval(-1.0, 1.0), f=f, nu=nu, ambient_dim=2,
                   jac_f=jac, jac_nu=jac, name="constant")


_BUILDERS = {
    "circle": _circle,
    "circle-cubic": _circle_cubic,
    "square": _square,
    "cusp": _cusp,
    "nonfront": _nonfront,
    "sphere": _sphere,
    "constant": _constant,
}


def catalog_names() -> list[str]:
    return sorted(_BUILDERS)


def catalog(name: str, params: dict | None = None) -> Frontal:
    """Build a named catalog frontal.  params is a JSON-style key/value map
    (e.g. {"R": 2.0} for the circle)."""
    if name not in _BUILDERS:
        raise UnknownCatalogError(
            f"unknown catalog frontal {name!r}; known: {', '.join(catalog_names())}")
    try:
        return _BUILDERS[name](**(params or {}))
    except TypeError as exc:
        raise CatalogParameterError(f"{name}: {exc}") from exc
