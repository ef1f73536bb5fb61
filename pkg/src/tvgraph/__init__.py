"""Exact construction and analysis of Tverberg partition graphs."""

__version__ = "0.1.0"

from .core import (
    TverbergCertificate,
    TverbergOracle,
    distance_preserving_permutations,
    essential_points,
    essential_set,
    hulls_intersect,
    is_tverberg,
    nerve,
    nerve_census,
    por_reduction,
    radon_partitions_via_kernel,
    tolerance_check,
    tverberg_degree,
    tverberg_number,
    verify_isometry,
)
from .errors import (
    HypothesisViolatedWarning,
    InvalidArguments,
    NoPathFound,
    NotTverberg,
    TooManyPartitions,
    TvGraphError,
)
from .generators import (
    dihedral_permutations,
    perturbed_clusters,
    random_uniform,
    regular_polygon,
)
from .geometry import PointConfig, orientation, rational_config
from .graph import (
    TverbergGraph,
    build_graph,
    export,
    graph_stats,
    is_connected,
    radon_path,
    tverberg_path,
)
from .lift import (
    LiftedConfig,
    mc_max_degree_probability,
    probability_lower_bound,
    sarkaria_lift,
    tolerance_point_bounds,
    tverberg_via_lift,
)
from .lp import lp_feasible
from .partitions import (
    Partition,
    abstract_diameter,
    abstract_edge_count,
    abstract_graph,
    enumerate_r_partitions,
    partition_distance,
    stirling2,
    stirling2_assoc,
)
from .pointio import dump_config, load_config, parse_config, save_config
from .scalars import Cyclo, cyclotomic_field, format_scalar, parse_scalar

__all__ = [name for name in dir() if not name.startswith("_")]
