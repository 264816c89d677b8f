"""Maximal surfaces with planar curvature lines in Lorentz-Minkowski 3-space.

Closed-form conformal factors, the Weierstrass-data catalog with exact
parametrizations, the continuous deformation path through the whole
family, wavefront-singularity classification for the Bonnet normal form,
and conjugate (affine-minimal) counterparts.
"""

from .analysis import (
    AxialData,
    FirstFundamentalForm,
    axial_directions,
    fundamental_form,
    gauss_weingarten_residual,
    mean_curvature_fd,
    normal_from_metric,
    planarity_residual,
    unit_normal,
)
from .deformation import DeformationStage, deformation_family
from .errors import (
    DegenerateCriteria,
    DivisionBySqrtZero,
    InvalidFamilyParameter,
    NoBracketFound,
    NotUnitModulus,
    PoleError,
    PoleOnPathError,
    QuadratureDivergence,
    SingularPointError,
    UnmappedClass,
)
from .export import GridSpec, parse_grid, sample_grid, write_obj
from .families import (
    Bonnet,
    CatLight,
    Lambda,
    PlaneDef,
    SurfaceFamily,
    SurfacePoint,
    Theta,
    WJet,
    associated_transform,
    closed_form_surface,
    conjugate_data,
    eval_weierstrass,
    standard_catalog,
)
from .lorentz import Causality, LVec3, causality_of, det3, lorentz_cross, minkowski_inner
from .metric import (
    Case1,
    Case2,
    MetricFamily,
    MetricSample,
    eval_f,
    eval_g,
    eval_rho,
    gauss_residual,
    ode_residuals,
    ode_residuals_from_values,
)
from .quadrature import integrate_surface
from .singularities import (
    CriteriaValues,
    SingularCurve,
    SingularityClass,
    SingularPoint,
    classify_point,
    closed_form_special_points,
    conjugate_classify,
    count_per_period,
    criteria_eval,
    expected_period_counts,
    singular_u_roots,
    special_points,
    trace_singular_curve,
)
from .verify import run_verify

__version__ = "0.1.0"
