"""Exact monodromy zeta functions, Milnor numbers and link invariants of
isolated surface singularities q_d(x, y, z) + z^(d+m)."""

from .divring import (LambdaDivisor, ZetaForm, divisor_degree, join_suspension, lambda_mul,
                      milnor_from_zeta, parse_rendered, render, unjoin, zeta_multiplicity)
from .isofam import (IsolationInput, InvariantReport, compose_almost_zeta, isolation_invariants,
                     local_node_zeta, smooth_reference_zeta)
from .newton import (Face, PolySupport, Verdict, WeightVector, all_faces, boundary_facets,
                     face_nondegenerate, restrict_support, support_profile, weight_data)
from .plumb import (CurveConfig, PlumbingGraph, build_graph, compare_pair, graph_invariants,
                    graphs_isomorphic, intersection_matrix, validate_config)
from .varch import (brieskorn_zeta_oracle, cone_normalized_volume, face_chi,
                    torus_euler_characteristic, varchenko_zeta)

__version__ = "0.1.0"
