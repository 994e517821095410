"""Extremal problems for forbidden Berge hypergraphs on small matrices."""
from .catalog import catalog, named
from .classifier import AsymptoticClass, classify_bh, classify_corpus, classify_treeforb
from .constructions import ConstructionRecipe, expand_product, make_generalH, make_H
from .containment import berge_contains, config_contains, contains, contains_t_fold
from .graphs import SimpleGraph, graph_of
from .matrix import BitMatrix
from .solver import SolveResult, solve_bh, solve_bh_unrestricted, solve_forb_family, solve_relative
from .transform import Downset, shift_fixpoint

__version__ = "0.1.0"

__all__ = [
    "AsymptoticClass",
    "BitMatrix",
    "ConstructionRecipe",
    "Downset",
    "SimpleGraph",
    "SolveResult",
    "berge_contains",
    "catalog",
    "classify_bh",
    "classify_corpus",
    "classify_treeforb",
    "config_contains",
    "contains",
    "contains_t_fold",
    "expand_product",
    "graph_of",
    "make_H",
    "make_generalH",
    "named",
    "shift_fixpoint",
    "solve_bh",
    "solve_bh_unrestricted",
    "solve_forb_family",
    "solve_relative",
]
