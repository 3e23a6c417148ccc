"""diskgeo: exact discrete differential geometry on finite simplicial complexes."""

from .complexes import (
    FVector,
    Graph,
    Simplex,
    SimplicialComplex,
    as_simplex,
    barycentric,
    generate_closure,
    whitney,
)
from .errors import (
    CatalogError,
    DiskGeoError,
    InputFormatError,
    InvalidInputError,
    NonManifoldBoneError,
    NotGeodesicReadyError,
    RecognitionLimitError,
)
from .catalog import catalog_complex, catalog_entries, load_complex
from .curvature import (
    CurvatureReport,
    first_order_curvature,
    gauss_bonnet_2m,
    ih_triangle_curvature,
    partition_curvature,
    partition_scan,
    sphere_degree,
    threshold_verify,
    vertex_curvature_2m,
)
from .flow import (
    FlowPartition,
    Frame,
    Orbit,
    frame_bundle_size,
    involution_factorization,
    orbit,
    orbit_complex,
    orbit_partition,
    step,
    step_inverse,
    wall_map,
)
from .poincare_hopf import (
    Divisor,
    EnergyRule,
    SelfMap,
    min_rule,
    min_rule_from_seed,
    push_energy,
    random_rule,
    vertex_self_map,
)
from .sheets import (
    BoneRing,
    SectionalReport,
    Sheet,
    SheetPatch,
    bone_ring,
    grow_sheet,
    local_disk,
    sectional_curvature,
    sectional_spectrum,
)
from .topology import (
    TopologyVerdict,
    contraction_witness,
    geodesic_readiness,
    is_contractible,
    is_manifold,
    is_sphere,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
