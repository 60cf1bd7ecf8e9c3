"""Weyl groupoids of finite semi-Cartan graphs, their nil-Hecke algebras,
the polynomial representation on reduced words, and the Bruhat order."""

from .bruhat import (BruhatPoset, GoodSubsequence, bruhat_leq, bruhat_poset, export_dot,
                     good_subsequences, theta_set, verify_bruhat_independence)
from .cartan import (BUILTIN_NAMES, BasicDatum, Covering, SemiCartanGraph, Violation, builtin,
                     disjoint_copies, parse_cartan_graph, serialize_cartan_graph, verify_covering)
from .errors import *  # noqa: F401,F403
from .groupoid import Morphism, WeylGroupoid, Word
from .nilhecke import (INTEGERS, CoefficientRing, NilHeckeAlgebra, NilHeckeElement, covering_embed,
                       lambda_action, multiply, phi, polynomial_ring)
from .polynomial import Polynomial, act, linear_form
from .psi import (beta_sequence, h, p_plus, p_plus_excl, psi_apply, psi_expand,
                  verify_rank2_identity)
from .roots import RootSystem, check_grs_axioms, generate_real_roots, m_entry, simple_reflection


def groupoid(graph) -> WeylGroupoid:
    """Shortcut: the Weyl groupoid of a graph or built-in name."""
    if isinstance(graph, str):
        graph = builtin(graph)
    return WeylGroupoid(generate_real_roots(graph))


__version__ = "0.1.0"
