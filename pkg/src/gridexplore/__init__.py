"""Online exploration of hexagonal and triangular grid polygons."""

from .explore import (
    ComponentType,
    ExplorationError,
    ExplorationTrace,
    SplitEvent,
    explore,
    explore_dfs,
    explore_smartdfs,
)
from .generators import (
    FamilyError,
    FamilySpec,
    comp_hex,
    comp_tri,
    corridor,
    enumerate_simple,
    generate,
    honeycomb,
    random_polygon,
    random_simple,
    random_thick,
    tri_hexagon,
)
from .grid import HEX, TRI, Cell, GridKind, Move, neighbors, touching
from .oracle import TourSolution, TourTooLarge, brute_force_tour_length, competitive_ratio, optimal_tour
from .polygon import GridPolygon, Metrics, PolygonError, holes, layers, metrics, offset
from .render import render_ascii, render_svg
from .textio import FormatError, parse_polygon, parse_trace, serialize_polygon, serialize_trace
from .verify import VerificationReport, run_suite

__all__ = [
    "Cell", "ComponentType", "ExplorationError", "ExplorationTrace", "FamilyError", "FamilySpec",
    "FormatError", "GridKind", "GridPolygon", "HEX", "Metrics", "Move", "PolygonError",
    "SplitEvent", "TRI", "TourSolution", "TourTooLarge", "VerificationReport",
    "brute_force_tour_length", "comp_hex", "comp_tri", "competitive_ratio", "corridor",
    "enumerate_simple", "explore", "explore_dfs", "explore_smartdfs", "generate", "holes",
    "honeycomb", "layers", "metrics", "neighbors", "offset", "optimal_tour", "parse_polygon",
    "parse_trace", "random_polygon", "random_simple", "random_thick", "render_ascii", "render_svg",
    "run_suite", "serialize_polygon", "serialize_trace", "touching", "tri_hexagon",
]
