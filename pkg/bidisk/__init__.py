from .utilities import open_map, fetch_map, map_from_source
from .core import BidiskPoint, BoundaryPoint, Horocycle, Horosphere
from .maps import load_map, map_to_spec, swap_args, eval_slice
from .maps import Rational, Builtin, Blend, SelfMap2
from .boundary import k_value, k_curve, classify_dw, find_constant_A
from .boundary import slice_denjoy_wolff, slice_fixed_point, a_from_xi
from .julia import julia_max_violation, julia_tightness
from .julia import horosphere_invariance_violation, wolff_set_structure
from .dynamics import iterate_orbit, picard_fixed_point, continuation_dw
from .dynamics import herve_case, convergence_report

__author__ = "Sam Ireland"
__version__ = "0.1.0"
