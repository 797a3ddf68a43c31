"""Generators for the three graph families and the direct-product join.

Canonical indexing:

* cocktail party / supergraph: vertex ``i`` is non-adjacent to its antipode
  ``(i + n/2) mod n``; the supergraph fills the first ``n1`` antipodal pairs.
* two cliques through a cut vertex: small clique ``0..n1-1``, cut vertex
  ``n1``, large clique ``n1+1..n-1``.
* operation D appends its two new vertices at ``n`` and ``n+1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .graph_core import Graph, new_graph


class ParameterError(ValueError):
    """Family parameters outside their admissible range."""


class Family(enum.Enum):
    COCKTAIL_PARTY = "cocktail"
    SUPERGRAPH = "supergraph"
    TWO_CLIQUE = "two-clique"


@dataclass(frozen=True)
class FamilyParams:
    family: Family
    n: int
    n1: int = 0

    def __post_init__(self):
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family(self.family))
        validate_params(self.family, self.n, self.n1)

    def build(self) -> Graph:
        if self.family is Family.COCKTAIL_PARTY:
            return cocktail_party(self.n)
        if self.family is Family.SUPERGRAPH:
            return supergraph(self.n, self.n1)
        return two_clique_cut_vertex(self.n, self.n1)

    def sort_key(self) -> tuple[int, int, int]:
        return (list(Family).index(self.family), self.n, self.n1)

    def label(self) -> str:
        if self.family is Family.COCKTAIL_PARTY:
            return f"{self.family.value}(n={self.n})"
        return f"{self.family.value}(n={self.n}, n1={self.n1})"


def validate_params(family: Family, n: int, n1: int = 0) -> None:
    if family is Family.COCKTAIL_PARTY:
        if n < 4 or n % 2:
            raise ParameterError(f"cocktail party graph needs even n >= 4, got n={n}")
        if n1 != 0:
            raise ParameterError(f"cocktail party graph takes no n1, got n1={n1}")
    elif family is Family.SUPERGRAPH:
        if n < 4 or n % 2:
            raise ParameterError(f"supergraph needs even n >= 4, got n={n}")
        if not 1 <= n1 <= n // 2:
            raise ParameterError(f"n1 out of range: need 1 <= n1 <= {n // 2}, got n1={n1}")
    elif family is Family.TWO_CLIQUE:
        if n < 3:
            raise ParameterError(f"two-clique graph needs n >= 3, got n={n}")
        if not (1 <= n1 and 2 * n1 + 1 <= n):
            raise ParameterError(f"n1 out of range: need 1 <= n1 <= {(n - 1) // 2}, got n1={n1}")
    else:
        raise ParameterError(f"unknown family {family!r}")


def admissible_n1(family: Family, n: int) -> list[int]:
    if family is Family.COCKTAIL_PARTY:
        return [0]
    if family is Family.SUPERGRAPH:
        return list(range(1, n // 2 + 1))
    return list(range(1, (n - 1) // 2 + 1))


def complete(n: int) -> Graph:
    return new_graph(n, combinations(range(n), 2))


def antipode(i: int, n: int) -> int:
    return (i + n // 2) % n


def cocktail_party(n: int) -> Graph:
    """(n-2)-regular graph whose complement is the antipodal perfect matching."""
    validate_params(Family.COCKTAIL_PARTY, n)
    return new_graph(n, ((i, j) for i, j in combinations(range(n), 2) if j != antipode(i, n)))


def supergraph(n: int, n1: int) -> Graph:
    """Cocktail party graph plus the antipodal edges ``{i, i + n/2}`` for ``i < n1``."""
    validate_params(Family.SUPERGRAPH, n, n1)
    return cocktail_party(n).with_edges((i, i + n // 2) for i in range(n1))


def two_clique_cut_vertex(n: int, n1: int) -> Graph:
    validate_params(Family.TWO_CLIQUE, n, n1)
    small = range(n1)
    cut = n1
    large = range(n1 + 1, n)
    edges = list(combinations(small, 2)) + list(combinations(large, 2))
    edges += [(cut, v) for v in range(n) if v != cut]
    return new_graph(n, edges)


def direct_product_join(a: Graph, b: Graph) -> Graph:
    """Keep the edges of ``a`` and ``b`` and join every vertex of ``a`` to every vertex of ``b``.

    ``b`` is re-indexed to follow ``a``.
    """
    shift = a.n
    edges = list(a.edges)
    edges += [(u + shift, v + shift) for u, v in b.edges]
    edges += [(u, v + shift) for u in range(a.n) for v in range(b.n)]
    return new_graph(a.n + b.n, edges)


def operation_d(g: Graph) -> Graph:
    """Join ``g`` with two isolated vertices."""
    return direct_product_join(g, new_graph(2))
