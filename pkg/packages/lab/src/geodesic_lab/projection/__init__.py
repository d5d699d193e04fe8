from .contraction import (
    ContractionCheck,
    ContractionViolation,
    check_contracting,
    check_window,
    contraction_profile,
)
from .geodesic_image import (
    GeodesicImageCheck,
    GeodesicImageProfile,
    GeodesicImageRecord,
    check_geodesic_image,
    geodesic_image_profile,
    record_envelope,
    segment_record,
)
from .project import (
    Projector,
    pair_projection_diameter,
    project,
    projector_for,
    subspace_projection_diameter,
)
from .types import (
    ContractionHypothesis,
    Profile,
    ProfileKind,
    ProfileSample,
    ProjectionParams,
    SamplingMode,
    SamplingPlan,
    radius_grid,
)

__all__ = [
    "check_contracting",
    "check_geodesic_image",
    "check_window",
    "ContractionCheck",
    "ContractionHypothesis",
    "contraction_profile",
    "ContractionViolation",
    "GeodesicImageCheck",
    "geodesic_image_profile",
    "GeodesicImageProfile",
    "GeodesicImageRecord",
    "pair_projection_diameter",
    "Profile",
    "ProfileKind",
    "ProfileSample",
    "project",
    "ProjectionParams",
    "Projector",
    "projector_for",
    "radius_grid",
    "record_envelope",
    "SamplingMode",
    "SamplingPlan",
    "segment_record",
    "subspace_projection_diameter",
]
