"""Edge-disjoint spanning trees in star-product networks."""

from .bounds import BoundReport, sigma_bound, tau_bound, tau_regular, tau_via_mc
from .constructions import (
    TreeSet,
    construct,
    low_depth_construction,
    maximum_construction,
    property1_construction,
    universal_construction,
)
from .graph import Graph, RootedTree
from .packing import max_edst_pack, nash_williams_certificate, select_u_set
from .property1 import property1_search
from .star import StarProduct, build_preset, star_product

__version__ = "0.1.0"
