"""Triangles in graphs without the suspension of a path.

Tools for ex(n, K3, P̂_k): extremal constructions, P̂_k-freeness checks,
triangle counting and classification, closed-form bounds, and exact
small-n values by exhaustive isomorph-free search.
"""

from .bounds import (BoundsReport, bounds_report, erdos_gallai_bound, f_function,
                     p5hat_turan_upper, proposition_bounds)
from .constructions import (ConstructionSpec, build_Fnk, build_Hn, build_Hnk,
                            triangles_Fnk_formula, triangles_Hn_formula,
                            triangles_Hnk_formula)
from .errors import (CapacityError, Graph6Error, LoopError, ParameterError,
                     PartitionError, PkTuranError)
from .graph_core import (Graph, add_edge, canonical_form, from_edges, from_graph6,
                         neighborhood_induced, new_graph, to_graph6)
from .patterns import (Bipartition, TriangleClassification, classify_triangles,
                       count_triangles, count_triangles_at, find_path, has_path,
                       is_suspension_pk_free, suspension, suspension_witness)

__version__ = "0.1.0"
