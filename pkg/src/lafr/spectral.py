"""Eigenvalue supports, periodicity, and exact strong cospectrality.

The eigenvalue support of a vertex is read off the support polynomial
psi / gcd(psi, psi_a), whose roots are simple.  Strong cospectrality is
decided exactly, but only for vertices whose supports are all-integer:
that is the only case the revival decision ever needs, because a
non-integer support already rules proper revival out.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NonIntegerSupportError, NotApplicableError
from .exactalg import (
    all_roots_integer,
    char_poly,
    char_poly_deleted,
    exact_div,
    integer_roots,
    kernel_basis,
    poly_degree,
    poly_gcd,
    project,
)
from .graphs import Graph, is_connected, laplacian, spanning_tree_count


@dataclass(frozen=True)
class EigenvalueSupport:
    """Integer part of a vertex's eigenvalue support.

    ``support_size`` is the total number of distinct eigenvalues in the
    support (the degree of the support polynomial); ``all_integer`` says
    whether the integer ones account for all of them.
    """

    vertex: int
    integer_eigenvalues: frozenset[int]
    all_integer: bool
    support_size: int


@dataclass(frozen=True)
class PairPartition:
    """The three eigenvalue classes of a strongly cospectral pair.

    ``plus`` and ``minus`` hold the eigenvalues whose projections agree
    respectively with equal and opposite sign at the two vertices; ``zero``
    holds the integer eigenvalues of the Laplacian outside both supports.
    """

    a: int
    b: int
    plus: frozenset[int]
    minus: frozenset[int]
    zero: frozenset[int]


@dataclass(frozen=True)
class Periodicity:
    vertex: int
    periodic: bool
    big_g: int | None


@functools.lru_cache(maxsize=512)
def graph_char_poly(g: Graph):
    return char_poly(laplacian(g))


@functools.lru_cache(maxsize=2048)
def _vertex_deleted_char_poly(g: Graph, a: int):
    return char_poly_deleted(laplacian(g), a)


@functools.lru_cache(maxsize=512)
def laplacian_integer_eigenvalues(g: Graph) -> dict[int, int]:
    """Integer Laplacian eigenvalues with multiplicities (scan range [0, n])."""
    return integer_roots(graph_char_poly(g), 0, g.n)


def support_poly(g: Graph, a: int):
    """Monic squarefree-in-support polynomial whose roots are the support."""
    if not 0 <= a < g.n:
        raise ValueError("vertex out of range")
    psi = graph_char_poly(g)
    psi_a = _vertex_deleted_char_poly(g, a)
    return exact_div(psi, poly_gcd(psi, psi_a))


@functools.lru_cache(maxsize=4096)
def eigenvalue_support(g: Graph, a: int) -> EigenvalueSupport:
    f = support_poly(g, a)
    roots = integer_roots(f, 0, g.n)
    return EigenvalueSupport(
        vertex=a,
        integer_eigenvalues=frozenset(roots),
        all_integer=all_roots_integer(f, roots),
        support_size=poly_degree(f),
    )


def is_periodic(g: Graph, a: int) -> Periodicity:
    """Periodicity at a vertex: all-integer support, minimal period 2*pi/G.

    ``big_g`` is the gcd of the nonzero support eigenvalues; it is ``None``
    for a support of {0} alone (an isolated vertex), where the walk fixes
    the vertex at every time.
    """
    sup = eigenvalue_support(g, a)
    if not sup.all_integer:
        return Periodicity(a, False, None)
    big_g = 0
    for mu in sup.integer_eigenvalues:
        big_g = gcd(big_g, mu)
    return Periodicity(a, True, big_g if big_g > 0 else None)


@functools.lru_cache(maxsize=512)
def _eigenspace_bases(g: Graph) -> dict[int, tuple[tuple[Fraction, ...], ...]]:
    """Exact eigenspace bases of the Laplacian at every integer eigenvalue."""
    lap = laplacian(g)
    bases = {}
    for mu in sorted(laplacian_integer_eigenvalues(g)):
        shifted = [
            [Fraction(mu if i == j else 0) - lap[i][j] for j in range(g.n)]
            for i in range(g.n)
        ]
        bases[mu] = tuple(tuple(vec) for vec in kernel_basis(shifted))
    return bases


def eigenprojection_column(g: Graph, mu: int, a: int) -> list[Fraction]:
    """Exact column of the spectral idempotent of ``mu`` at vertex ``a``."""
    bases = _eigenspace_bases(g)
    if mu not in bases or not bases[mu]:
        raise ValueError(f"{mu} is not an eigenvalue of the Laplacian")
    e_a = [Fraction(int(i == a)) for i in range(g.n)]
    return project([list(vec) for vec in bases[mu]], e_a)


def strong_cospectral(g: Graph, a: int, b: int) -> PairPartition | None:
    """Exact strong-cospectrality test with the induced eigenvalue classes.

    Compares the whole projection column at every integer eigenvalue of the
    Laplacian, and returns ``None`` as soon as one column pair is neither
    equal nor opposite.  Both supports must be all-integer, otherwise the
    exact test is not attempted.
    """
    if a == b:
        raise ValueError("strong cospectrality needs two distinct vertices")
    sup_a = eigenvalue_support(g, a)
    sup_b = eigenvalue_support(g, b)
    if not (sup_a.all_integer and sup_b.all_integer):
        raise NonIntegerSupportError(
            f"vertex {a if not sup_a.all_integer else b} has non-integer support"
        )
    plus, minus, zero = set(), set(), set()
    for mu in sorted(laplacian_integer_eigenvalues(g)):
        col_a = eigenprojection_column(g, mu, a)
        col_b = eigenprojection_column(g, mu, b)
        if not any(col_a):
            if any(col_b):
                return None
            zero.add(mu)
        elif col_a == col_b:
            plus.add(mu)
        elif all(x == -y for x, y in zip(col_a, col_b)):
            minus.add(mu)
        else:
            return None
    return PairPartition(a, b, frozenset(plus), frozenset(minus), frozenset(zero))


def support_product_divides_trees(g: Graph, a: int) -> bool:
    """Whether the product of integer eigenvalues outside the support
    divides the spanning-tree count.

    Applicable only to connected graphs whose spectrum splits over the
    integers and whose vertex support is all-integer.
    """
    if not is_connected(g):
        raise NotApplicableError("graph is disconnected")
    psi = graph_char_poly(g)
    full = laplacian_integer_eigenvalues(g)
    if not all_roots_integer(psi, full):
        raise NotApplicableError("spectrum does not split over the integers")
    sup = eigenvalue_support(g, a)
    if not sup.all_integer:
        raise NotApplicableError("vertex support is not all-integer")
    outside = [mu for mu in full if mu not in sup.integer_eigenvalues]
    product = 1
    for mu in outside:
        product *= mu
    return spanning_tree_count(g) % product == 0
