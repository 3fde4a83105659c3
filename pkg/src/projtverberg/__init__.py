"""Exact projective center point and Tverberg computations in RP^d."""

__version__ = "0.1.0"

from .geometry import (LinSubspace, PointConfig, ProjPoint, annihilator,  # noqa: E402
                       canonicalize, enumerate_open_cells, full_space,
                       general_position, hyperplane_at_infinity, join, meet, span)
from .pieces import (HyperplanePair, PartitionWitness, min_piece_counts,  # noqa: E402
                     piece_sign, verify_center_subspace, verify_transversal_witness,
                     verify_tverberg_witness)
from .centerpoint import (SearchConfig, WeightVector, classical_center_point,  # noqa: E402
                          dual_center_point_search, gram_matrix, min_ray_crossings,
                          search_center_subspace, subspace_from_weights, tukey_depth,
                          w_from_weights)
from .tverberg import (TransversalInstance, count_valid_partitions,  # noqa: E402
                       radon_partition, search_both_subspaces,
                       search_projective_tverberg, search_transversal)
