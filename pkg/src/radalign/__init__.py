"""Exact combinatorics of genus-one tropical curves: radius functions,
alignment fans, circle contractions and iterated blowups."""

from .alignment import (
    CentralAlignment,
    MinimalMonoid,
    RadialAlignment,
    alignment_cone,
    central_alignments,
    central_fan,
    minimal_monoid,
    radial_fan,
)
from .catalog import Catalog, enumerate_stable, specialization_poset
from .cones import Cone, Fan, deformation_cone, extreme_rays, fans_equal, interior_sample, is_free, refines, subdivide
from .contraction import (
    CircleData,
    SingularPoint,
    SmythGraph,
    circle_data,
    contract_circle,
    contraction_radius,
    delta_m,
    is_m_stable,
    valence_semicontinuity_check,
)
from .curve import (
    Circuit,
    StabilityClass,
    TropicalCurve,
    canonicalize,
    circuit,
    contract_edges,
    genus,
    is_isomorphic,
    stability_class,
    validate,
)
from .errors import IncomparableError, MalformedInputError, PreconditionError, PropertyCheckError, RadalignError
from .linear import Functional
from .pl import PLFunction, degree_on_vertex, lambda_function, mu_function, subdivide_at_radius, total_degree
from .subgraphs import KJSignature, Precontractible, kj_compare, kj_signature, precontractible_subgraphs
from .vz import vz_equivalence, vz_fan

__version__ = "0.1.0"
