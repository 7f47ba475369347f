"""Nonrepetitive graph colouring toolkit.

Constructions (Thue words, the 4^k treewidth colouring, strong-product
composition, the planar 768-colour pipeline) together with brute-force
verifiers and an exact small-graph oracle that certify every
construction at desk scale.
"""

__version__ = "0.1.0"

from .colouring import Colouring
from .graphs import (Graph, InputError, VertexSet, complete_graph,
                     connected_components, contract_set, cycle_graph,
                     edgeless_graph, icosahedron, induced_subgraph, is_clique,
                     octahedron, parse_graph, path_graph, serialize_graph)
from .layering import Layering, bfs_layering, is_shadow_complete, shadows, validate_layering
from .treedecomp import (TreeDecomposition, chordal_completion, exact_treewidth,
                         heuristic_td, is_chordal, is_r_rich, parse_td,
                         restrict_td, validate_td, width, write_td)
from .twcolour import layer_td, strongly_nonrepetitive_colouring
from .words import (is_squarefree, path_colouring_4, ternary_squarefree,
                    verify_boring, word_to_string)
from .product import (ProductVertexIndex, compose_clique_factor, compose_join,
                      compose_path_factor, compose_product_colouring,
                      join_complete, strong_product)
from .planar import (ProductStructure, StructureColouring, colour_genus,
                     colour_planar, compute_product_structure,
                     parse_product_structure, serialize_product_structure,
                     triangulation_faces, validate_product_structure)
from .verify import (Verdict, exact_pi, find_bad_lazy_walk,
                     find_nonboring_repetitive_walk, find_repetitive_path,
                     is_proper)
from .bounds import (BoundReport, bound_almost_embeddable, bound_genus,
                     bound_minor, bound_planar, bound_report, bound_rich,
                     bound_topological_minor, bound_treewidth)
