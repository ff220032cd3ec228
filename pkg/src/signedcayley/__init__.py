"""Exact signed domination on Cayley graphs of small finite groups."""

__version__ = "0.1.0"

from .groups import (FiniteGroup, GroupError, catalog_group, element_order, groups_of_order,
                     inverse_closed_subsets, is_generating, left_cosets, make_group,
                     right_cosets)
from .graphs import (Graph, SmallGraphClass, are_isomorphic, classify_triple,
                     complete_multipartite_parts, diameter, distance_matrix, induced_subgraph,
                     regular_degree, standard_graph)
from .cayley import (CayleySpec, ConnectionSetError, build_cayley, cayley_graph,
                     triple_complement_class, verify_coset_multipartite)
from .domination import (CertificateError, GammaResult, SignLabeling, check_negative_pair_distance,
                         closed_neighborhood_sum, construct_high_degree_certificate, gamma_exact,
                         gamma_formula, gamma_naive, is_signed_dominating, max_negative_set,
                         regular_lower_bound)
