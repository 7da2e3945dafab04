"""frontalforge: transforms of frontals (orthotomic, pedal, anti-orthotomic,
negative pedal), no-silhouette sets, the generalized support-vector formula,
and front criteria, with a catalog of analytic test frontals."""

from ._kernels import active_backend
from .analysis import (CahnHoffmanReport, FrontReport, NuSplit, cahn_hoffman,
                       front_equivalence, gamma_gradient, is_front_at,
                       nu_split, opening_residual)
from .catalog import catalog, catalog_names, smooth_step
from .errors import (CatalogParameterError, DegenerateNu2Error, DomainError,
                     FrontalForgeError, GaussDegenerateError,
                     PoleAtImageError, PoleOnSilhouetteError,
                     SingularGaussMapError, UnknownCatalogError)
from .frontal import (Frontal, FrontalCheck, ParamDomain, SampledMap,
                      check_frontal, interval, jacobian_f, jacobian_nu,
                      sample)
from .linalg import (TangentFrame, cofactor, numeric_rank, singular_values,
                     tangent_frame)
from .silhouette import (NSReport, RasterGrid, ns_membership, ns_raster,
                         raster_to_csv, raster_to_pgm)
from .transforms import (TransformKind, TransformResult, anti_orthotomic,
                         negative_pedal, orthotomic, pedal, sample_poles,
                         transform)

__version__ = "0.1.0"
