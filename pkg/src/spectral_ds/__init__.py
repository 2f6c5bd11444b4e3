"""Exact spectral characterization of near-complete graphs.

Integer characteristic polynomials, cospectral and R-cospectral tests,
complement counting formulas, R-cospectral constructions and exhaustive
"determined by spectrum" checks at small orders.
"""

from .canon import CanonicalForm, canonical_form, canonical_labeling, is_isomorphic
from .constructions import (CospectralPair, PairKind, figure1_family, gm_switch, join_pair,
                            kn_minus_pair, path_mates, union_pair)
from .enumeration import (CospectralClass, SurveyReport, ds_verify, multiplicity_survey,
                          survey_kn_minus)
from .errors import (CapacityError, ClassificationError, ContractViolation, Graph6Error,
                     GraphArgumentError, SpectralDSError, SwitchingSetError)
from .generate import generate_by_edges, generate_graphs
from .graph import (Graph, complement, complete, complete_bipartite, complete_multipartite,
                    cycle, disjoint_union, empty, join, kn_minus, make_named, matching, path,
                    spider222, star, y_graph)
from .graph6 import from_graph6, to_graph6
from .invariants import (InvariantProfile, SubgraphCounts, brute_force_counts,
                         complement_4walks, complement_triangles, profile, subgraph_counts)
from .spectra import (CharPoly, GeneralizedSpectralKey, char_poly, closed_walks,
                      count_roots_greater_than, generalized_key, integer_eigenvalue_multiplicity,
                      is_cospectral, is_r_cospectral, structure_check_one_positive)

__version__ = "0.1.0"
