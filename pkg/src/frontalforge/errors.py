"""Exception hierarchy for frontalforge."""


class FrontalForgeError(Exception):
    """Base class for all frontalforge errors."""


class DomainError(FrontalForgeError):
    """Parameter point outside the domain, or too close to a non-periodic
    boundary for the requested finite-difference stencil."""


class UnknownCatalogError(FrontalForgeError):
    """Requested catalog frontal does not exist."""


class CatalogParameterError(FrontalForgeError):
    """Invalid parameter passed to a catalog constructor."""


class GaussDegenerateError(FrontalForgeError):
    """The induced Gauss map of an orthotomic/pedal is undefined at a point
    where (f~(x)-P).nu~(x) vanishes (the image point coincides with the
    source point there)."""

    def __init__(self, x, value):
        self.x = x
        self.value = value
        super().__init__(
            f"induced Gauss map degenerate at x={x!r}: support value {value:.3e}"
        )


class PoleOnSilhouetteError(FrontalForgeError):
    """The pole P fails the no-silhouette condition (f(x)-P).nu(x) != 0 at a
    requested point; the inverse-transform formulas divide by that quantity."""

    def __init__(self, x, value):
        self.x = x
        self.value = value
        super().__init__(
            f"pole lies on the silhouette at x={x!r}: (f-P).nu = {value:.3e}"
        )


class PoleAtImageError(FrontalForgeError):
    """The pole P coincides with an image point, so ||g(x)-P|| vanishes."""


class SingularGaussMapError(FrontalForgeError):
    """The induced Gauss map is singular where the vector formula needs its
    Jacobian to be invertible."""

    def __init__(self, x, det):
        self.x = x
        self.det = det
        super().__init__(
            f"Gauss map singular at x={x!r}: |det J| = {abs(det):.3e}"
        )


class DegenerateNu2Error(FrontalForgeError):
    """The normal component of nu along the induced Gauss direction vanishes,
    so the opening identity's coefficient is undefined."""
