"""Hierarchical clustering with single, complete and Hausdorff linkage."""

from .analysis import (
    EntropyCurve,
    Partition,
    cluster_entropy,
    cut_at_count,
    cut_at_height,
    detect_backsteps,
    entropy_curve,
)
from .linkage import ClusterState, Dendrogram, Merge, agglomerate, cluster_pair_distance, merge_clusters
from .metric_core import (
    DistanceMatrix,
    PriceTable,
    ReturnSeries,
    build_distance_matrix,
    check_metric_axioms,
    correlation,
    correlation_distance,
    euclidean_distance,
    log_returns,
)
from .set_distance import complete_distance, directed_hausdorff, hausdorff_distance, single_distance

__version__ = "0.1.0"
