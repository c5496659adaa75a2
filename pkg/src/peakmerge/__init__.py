"""Density-peak clustering with mutual-kNN agglomerative merging."""

from .cfsfdp import CenterSet, Labeling, assign, bisect_cluster, select_centers_auto
from .dataset import DcSpec, PointSet, load_points, pairwise_distance, resolve_dc
from .density import (
    DecisionGraphData,
    DensityProfile,
    compute_profile,
    decision_graph,
    delta_and_parent,
    density_order,
    local_density,
)
from .evaluate import EvalReport, adjusted_rand_index, best_match_accuracy, evaluate_labels
from .merge import (
    MergeTrace,
    PairCriteria,
    Termination,
    merge_loop,
    pair_score,
    relative_closeness,
    relative_interconnectivity,
)
from .pipeline import PipelineResult, run
from .simgraph import (
    EdgeAggregate,
    SimilarityGraph,
    aggregate,
    internal_aggregate,
    knn_graph,
    mutual_cross_edges,
)

__version__ = "0.1.0"
