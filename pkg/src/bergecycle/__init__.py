"""Berge cycles, Dirac-type cycle conditions in bipartite graphs, and exhaustive checks."""

from .canonical import TooLargeError, canonical_form, is_isomorphic
from .constructions import (ConstructionSpec, certify, gen_construction3, gen_construction4,
                            gen_g1, gen_g2, gen_g3)
from .cycles import (find_berge_cycle, find_berge_cycle_with_edges, find_cycle_covering_exactly,
                     has_hamiltonian_berge_cycle, has_spanning_x_cycle, is_super_pancyclic,
                     is_x_super_pancyclic, longest_cycle)
from .io import ParseError, parse, serialize
from .model import (BergeCycleWitness, BipartiteGraph, CycleWitness, GraphError, Hypergraph,
                    dual_incidence_graph, incidence_graph)
from .structure import (are_crossing, check_condition_lll_for, classify_exception, find_tight_pair,
                        is_2connected, is_2connected_hypergraph, satisfies_lll)
from .verify import ParameterBox, enumerate_gnmd, scan, verify_theorem

__version__ = "0.1.0"
