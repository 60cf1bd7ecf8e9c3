"""
The elements h_i^x(t) and the representation Psi on reduced words.

Coefficients live in ``ZZ[t1..tn]`` with the simple root alpha_i identified
with the variable t_i.  For a reduced word ``(i_1, ..., i_m)`` from ``x`` with
object path ``x_1, ..., x_m`` the expansion is

    h_{i_1}^{x_1}(beta_1) h_{i_2}^{x_2}(beta_2) ... h_{i_m}^{x_m}(beta_m),
    beta_j = s_{i_1}^{x_1} ... s_{i_{j-1}}^{x_{j-1}}(alpha_{i_j}),

where ``h_i^x(t) = e^x + t n_i^x`` if ``rho_i(x) = x`` and ``t n_i^x``
otherwise.
"""

from __future__ import annotations

from functools import reduce
from itertools import product
from operator import mul

from .errors import NotReduced, RankNotTwo, RootNotPresent
from .groupoid import Morphism, WeylGroupoid, Word
from .nilhecke import NilHeckeAlgebra, NilHeckeElement
from .polynomial import Polynomial, act, linear_form
from .roots import RootVector, format_root, identity_matrix, is_positive, mat_mul, mat_vec, simple_root

__all__ = [
    "h", "beta_sequence", "psi_expand", "psi_apply", "p_plus", "p_plus_excl",
    "alternating_word", "subword_expansion", "verify_rank2_identity", "poly_algebra",
]

_ALGEBRAS: dict[int, NilHeckeAlgebra] = {}


def poly_algebra(W: WeylGroupoid) -> NilHeckeAlgebra:
    """The (cached) nil-Hecke algebra of ``W`` over ``ZZ[t1..tn]``."""
    key = id(W)
    A = _ALGEBRAS.get(key)
    if A is None or A.groupoid is not W:
        A = _ALGEBRAS[key] = NilHeckeAlgebra.over_polynomials(W)
    return A


def h(W: WeylGroupoid, x: str, i: int, t: Polynomial) -> NilHeckeElement:
    A = poly_algebra(W)
    tn = t * A.generator(x, i)
    return A.idempotent(x) + tn if W.graph.is_loop(i, x) else tn


def beta_sequence(W: WeylGroupoid, w: Word) -> list[RootVector]:
    """Roots attached to the letters of ``w``; raises NotReduced if one is not positive."""
    n = W.graph.rank
    path = w.path(W.graph)
    prefix = identity_matrix(n)
    out = []
    for k, (i, x) in enumerate(zip(w.letters, path), start=1):
        beta = mat_vec(prefix, simple_root(n, i))
        if not is_positive(beta):
            raise NotReduced(f"word {w} is not reduced (beta_{k} = {format_root(beta)})")
        out.append(beta)
        prefix = mat_mul(prefix, W.rs.reflection(x, i))
    return out


def psi_expand(W: WeylGroupoid, w: Word) -> NilHeckeElement:
    """The ordered h-product of a reduced word (Psi of the word applied to 1)."""
    betas = beta_sequence(W, w)
    A = poly_algebra(W)
    out = A.idempotent(w.start)
    for i, x, beta in zip(w.letters, w.path(W.graph), betas):
        out = out * h(W, x, i, linear_form(beta))
    return out


def psi_apply(W: WeylGroupoid, w: Word, v: NilHeckeElement) -> NilHeckeElement:
    """Psi(w) on a general element ``sum f_u T_u``: ``psi_expand(w) * sum (s_w . f_u) T_u``."""
    s = W.evaluate(w).matrix
    A = poly_algebra(W)
    moved = A.element({u: act(s, f) for u, f in v.terms.items()})
    return psi_expand(W, w) * moved


def _require_rank2(W: WeylGroupoid):
    if W.graph.rank != 2:
        raise RankNotTwo(f"rank is {W.graph.rank}, not 2")


def _product_of_forms(roots, nvars: int = 2) -> Polynomial:
    return reduce(mul, (linear_form(r) for r in roots), Polynomial.one(nvars))


def p_plus(W: WeylGroupoid, x: str) -> Polynomial:
    """Product of the linear forms of all positive roots at ``x`` (rank 2)."""
    _require_rank2(W)
    return _product_of_forms(W.rs.positive(x))


def p_plus_excl(W: WeylGroupoid, x: str, alpha: RootVector) -> Polynomial:
    """Same product with the factor of ``alpha`` left out."""
    _require_rank2(W)
    alpha = tuple(alpha)
    pos = W.rs.positive(x)
    if alpha not in pos:
        raise RootNotPresent(f"{format_root(alpha)} is not a positive root at {x}")
    return _product_of_forms(r for r in pos if r != alpha)


def alternating_word(x: str, i: int, j: int, m: int) -> Word:
    return Word(x, tuple(i if k % 2 == 0 else j for k in range(m)))


def subword_expansion(W: WeylGroupoid, w: Word) -> dict[Morphism, Polynomial]:
    """Expand the h-product by distributing each factor directly.

    Every position either contributes ``beta * n`` or, at a loop letter, the
    idempotent; the chosen letters contribute only when they form a reduced
    word.  Independent of the nil-Hecke multiplication.
    """
    betas = beta_sequence(W, w)
    path = w.path(W.graph)
    loops = [W.graph.is_loop(i, x) for i, x in zip(w.letters, path)]
    acc: dict[Morphism, Polynomial] = {}
    for choice in product((True, False), repeat=len(w)):
        if any(not keep and not loop for keep, loop in zip(choice, loops)):
            continue
        sub = Word(w.start, tuple(i for i, keep in zip(w.letters, choice) if keep))
        if not W.is_reduced(sub):
            continue
        u = W.evaluate(sub)
        coeff = _product_of_forms((b for b, keep in zip(betas, choice) if keep), W.graph.rank)
        acc[u] = acc.get(u, Polynomial.zero(W.graph.rank)) + coeff
    return {u: c for u, c in acc.items() if c}


def verify_rank2_identity(W: WeylGroupoid, x: str) -> bool:
    """Check the two alternating h-products of length m_12^x at ``x``.

    Beyond equality this checks that the top coefficient is P_+^x and that the
    whole expansion matches the direct subword distribution.
    """
    _require_rank2(W)
    m = W.m(x, 1, 2)
    w12, w21 = alternating_word(x, 1, 2, m), alternating_word(x, 2, 1, m)
    lhs, rhs = psi_expand(W, w12), psi_expand(W, w21)
    if lhs != rhs:
        return False
    top = W.evaluate(w12)
    if lhs.coefficient(top) != p_plus(W, x):
        return False
    return lhs.terms == subword_expansion(W, w12)
