"""Pseudoline arrangements on sorting-network supports, multipseudotriangulations and their enumeration."""

from .arrangement import (Arrangement, Direction, FlipError, InvalidArrangementError, flip,
                          flip_direction, from_contacts, greedy, reduced_arrangement)
from .combinatorics import beam_check, beams, catalan, det_catalan
from .enumeration import (EmptySupportError, SizeLimitError, build_flip_graph, enumerate_bruteforce,
                          enumerate_greedy_flip, find_sub_arrangement, find_with_contacts, graph_stats,
                          iter_greedy_flip)
from .geometry import (PointSet, convex_position, corner_count, dual_network, k_depth, primal_edges,
                       stars, winding_number)
from .multi import compose_check, greedy_multi, horizon_check, horizon_sets, iterated_graph_connected
from .network import Comparator, DegenerateKernelError, Network, kernel, rotate_cut, simulate, validate

__version__ = "0.1.0"
