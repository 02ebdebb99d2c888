"""Zero forcing and failed zero forcing on small graphs and graph products.

>>> from zforce import cycle, failed_zero_forcing_number
>>> failed_zero_forcing_number(cycle(6)).value
3
"""

from .constructions import (
    ConstructionResult,
    cartesian_lower_bound,
    corona_construction,
    grid_construction,
    known_failed_forcing_number,
    lexicographic_construction,
    prism_construction,
    product_closed_form,
    strong_grid_construction,
    strong_torus_construction,
    torus_construction,
)
from .forcing import (
    ForceChain,
    apply_rule_once,
    derived_coloring,
    is_failed,
    is_maximal_failed,
    is_stalled,
    is_zero_forcing_set,
)
from .graph import (
    FamilySpec,
    Graph,
    ProductSpec,
    VertexSet,
    build,
    build_family,
    cartesian_product,
    complete,
    complete_bipartite,
    connected_component_count,
    corona,
    cycle,
    empty,
    is_complete,
    isolated_vertices,
    lexicographic_product,
    mary_tree,
    modules_of_order_two,
    parse_expression,
    parse_graph,
    path,
    petersen,
    serialize_graph,
    strong_product,
    wheel,
)
from .oracle import (
    Certificate,
    failed_zero_forcing_number,
    thm27_upper_bound,
    verify_sharpness,
    zero_forcing_number,
)

__version__ = "0.1.0"
