"""Torus-fixed-locus graph sums for degree-1 stable maps to P^1 x BZ_2.

A fixed-locus component is indexed by a two-vertex graph: the vertices sit
over the fixed points 0 and infinity of P^1, one central edge carries the
degree-1 component, and the k twisted marked points split between the two
vertices as labelled half-edges.  A vertex with h >= 2 half-edges carries a
contracted component whose moduli space depends on the parity of h (the node
joining it to the central component is twisted exactly when h is odd):

    h odd  ->  (h+1) twisted points, no untwisted point, dimension h - 2
    h even ->  h twisted points plus 1 untwisted point,  dimension h - 2

A vertex with 0 or 1 half-edges is degenerate: no contracted component, no
moduli, no psi-class.

The inverse Euler class of a graph's normal bundle contributes, per vertex
side s (+1 over 0, -1 over infinity):

    * a numerator factor s*t for each bare vertex (no half-edges),
    * the geometric series 1/(s*t - psi) for each vertex with a contracted
      component, expanded to the vertex dimension (higher psi powers
      integrate to zero),
    * a global 1/(-t^2) for the central component,
    * the gluing factor: 2 per node (one per contracted component) times 1/2
      for the central degree-1 component.

Restriction facts: a point class pulled back from 0 restricts to t on every
graph, from infinity to -t; the Hodge class lambda_i restricts to the sum of
lambda_{i1} x lambda_{i2} over i1 + i2 = i across the two vertex moduli.

Two insertion recipes are wired in: kind "A" integrates
ev_1*(0) ev_2*(0) ev_3*(inf) lambda_i (points 1, 2 over 0, point 3 over
infinity) and kind "B" integrates ev_1*(0) ev_2*(0) lambda_i.  Both live on
a k-dimensional space and sit in degree k - 1 < k resp. k - 2 < k, so the
full graph sum must vanish identically in t; extracting the j = 0 family
from that vanishing reproduces the recursions in values.py.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Literal

from .algebra import HALF, LaurentPolynomial, Rational, ZERO, laurent_sum
from .errors import DomainError, VerificationError
from .values import closed_D, closed_d

Side = Literal["zero", "infty"]
FamilyKind = Literal["A", "B"]


@dataclass(frozen=True)
class LocalizationGraph:
    """Two-vertex graph: marked-point labels split over 0 and infinity."""

    k: int
    over_zero: frozenset[int]
    over_infty: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "over_zero", frozenset(self.over_zero))
        object.__setattr__(self, "over_infty", frozenset(self.over_infty))
        if self.over_zero & self.over_infty:
            raise DomainError("a marked point cannot lie over both 0 and infinity")
        if self.over_zero | self.over_infty != frozenset(range(1, self.k + 1)):
            raise DomainError(f"labels must partition 1..{self.k}")


@dataclass(frozen=True)
class VertexModuli:
    """Moduli space of one vertex's contracted component.

    ``twisted``/``untwisted`` count its marked points, the forced node
    included; both are 0 for a degenerate vertex (0 or 1 half-edges), which
    has no contracted component at all.
    """

    side: Side
    half_edges: int
    twisted: int
    untwisted: int

    @property
    def degenerate(self) -> bool:
        return self.half_edges <= 1

    @property
    def dimension(self) -> int:
        if self.degenerate:
            raise DomainError("degenerate vertex has no moduli space")
        return self.twisted - 3 + self.untwisted

    @property
    def sign(self) -> int:
        """The weight sign s of the fixed point under the vertex: +1 or -1."""
        return 1 if self.side == "zero" else -1


@dataclass(frozen=True)
class ContributionTemplate:
    """A graph's contribution with the lambda splitting left unexpanded.

    ``prefactor`` collects the labelling multiplicity, the gluing factor, the
    insertion and central-component signs and the bare-vertex numerator
    signs; ``t_power_fixed`` the matching powers of t.  ``series_vertices``
    are the vertices carrying a psi geometric series.
    """

    prefactor: Rational
    t_power_fixed: int
    series_vertices: tuple[VertexModuli, ...]


def enumerate_family(kind: FamilyKind, k: int, j: int
                     ) -> tuple[LocalizationGraph, int]:
    """Canonical representative and labelling count of family ``j``.

    Kind "A" (k >= 6): points 1, 2 over 0, point 3 over infinity, j of the
    remaining k-3 points over infinity; C(k-3, j) labellings.  Kind "B"
    (k >= 4): points 1, 2 over 0, j of the remaining k-2 points over
    infinity; C(k-2, j) labellings.
    """
    if kind == "A":
        _check_even_k(k, 6)
        if not 0 <= j <= k - 3:
            raise DomainError(f"family index j={j} outside 0..{k - 3}")
        infty = frozenset({3}) | frozenset(range(k - j + 1, k + 1))
        multiplicity = comb(k - 3, j)
    elif kind == "B":
        _check_even_k(k, 4)
        if not 0 <= j <= k - 2:
            raise DomainError(f"family index j={j} outside 0..{k - 2}")
        infty = frozenset(range(k - j + 1, k + 1))
        multiplicity = comb(k - 2, j)
    else:
        raise DomainError(f"family kind must be 'A' or 'B', not {kind!r}")
    zero = frozenset(range(1, k + 1)) - infty
    return LocalizationGraph(k, zero, infty), multiplicity


def vertex_moduli_of(graph: LocalizationGraph
                     ) -> tuple[VertexModuli, VertexModuli]:
    """Apply the parity rule at each vertex; degenerate vertices pass through."""
    return (_moduli_for("zero", len(graph.over_zero)),
            _moduli_for("infty", len(graph.over_infty)))


def _moduli_for(side: Side, half_edges: int) -> VertexModuli:
    if half_edges <= 1:
        return VertexModuli(side, half_edges, 0, 0)
    if half_edges % 2:
        return VertexModuli(side, half_edges, half_edges + 1, 0)
    return VertexModuli(side, half_edges, half_edges, 1)


def vertex_integral(twisted: int, untwisted: int, psi_power: int,
                    lambda_index: int) -> Rational:
    """Integral of psi**psi_power * lambda_{lambda_index} over vertex moduli.

    Zero off the top degree (psi_power + lambda_index must equal the
    dimension twisted - 3 + untwisted); otherwise a D or d value according to
    whether the space carries an untwisted point.  The 0-dimensional space
    (2 twisted + 1 untwisted) integrates the fundamental class to 1/2.
    """
    if untwisted not in (0, 1):
        raise DomainError("untwisted point count must be 0 or 1")
    if twisted < 2 or twisted % 2:
        raise DomainError("twisted point count must be an even integer >= 2")
    if psi_power < 0 or lambda_index < 0:
        return ZERO
    if psi_power + lambda_index != twisted - 3 + untwisted:
        return ZERO
    if untwisted == 0:
        return closed_D(lambda_index, twisted)
    return closed_d(lambda_index, twisted)


def contribution_template(graph: LocalizationGraph, multiplicity: int,
                          insertion: FamilyKind) -> ContributionTemplate:
    """Assemble every factor of a graph's contribution except the psi series."""
    _check_insertion(graph, insertion)
    prefactor = Rational(multiplicity) * HALF  # central component's 1/2
    t_power = 0
    if insertion == "A":
        prefactor = -prefactor  # t * t * (-t)
        t_power += 3
    else:
        t_power += 2  # t * t
    prefactor = -prefactor  # central 1/(-t^2)
    t_power -= 2
    series = []
    for vertex in vertex_moduli_of(graph):
        if vertex.half_edges == 0:
            # bare vertex: numerator factor s*t, nothing else
            prefactor *= vertex.sign
            t_power += 1
        elif vertex.half_edges >= 2:
            prefactor *= 2  # the node's gluing factor
            series.append(vertex)
        # one half-edge: the point sits on the central component; no factor
    return ContributionTemplate(prefactor, t_power, tuple(series))


def graph_contribution(graph: LocalizationGraph, multiplicity: int,
                       insertion: FamilyKind, i: int) -> LaurentPolynomial:
    """The graph's exact contribution to the kind-``insertion`` integral.

    Expands each vertex's 1/(s*t - psi) to its dimension, splits lambda_i
    across the vertices, and evaluates every psi/lambda pairing through
    vertex_integral.  The result is supported on a single power of t.
    """
    template = contribution_template(graph, multiplicity, insertion)
    if i < 0:
        raise DomainError("lambda index i must be >= 0")
    terms: list[tuple[int, Rational]] = []
    for split in _lambda_splits(len(template.series_vertices), i):
        coefficient = template.prefactor
        t_power = template.t_power_fixed
        for vertex, part in zip(template.series_vertices, split):
            psi_power = vertex.dimension - part
            if psi_power < 0:
                coefficient = ZERO
                break
            value = vertex_integral(vertex.twisted, vertex.untwisted,
                                    psi_power, part)
            if not value:
                coefficient = ZERO
                break
            # 1/(s*t - psi) contributes psi**m * s**(m+1) / t**(m+1)
            if vertex.sign < 0 and psi_power % 2 == 0:
                value = -value
            coefficient *= value
            t_power -= psi_power + 1
        if coefficient:
            terms.append((t_power, coefficient))
    return LaurentPolynomial(terms)


def _lambda_splits(vertex_count: int, i: int):
    # All ways to distribute lambda_i across the series vertices; a split
    # landing on no vertex only supports i == 0 (lambda_0 = 1).
    if vertex_count == 0:
        return [()] if i == 0 else []
    if vertex_count == 1:
        return [(i,)]
    return [(i - ell, ell) for ell in range(i + 1)]


def auxiliary_integral(kind: FamilyKind, k: int, i: int) -> LaurentPolynomial:
    """The full graph sum for the kind-``kind`` integral; must come out zero.

    Returned (rather than asserted) so callers can check emptiness and report
    any survivor terms.
    """
    j_top = k - 3 if kind == "A" else k - 2
    parts = []
    for j in range(j_top + 1):
        graph, multiplicity = enumerate_family(kind, k, j)
        parts.append(graph_contribution(graph, multiplicity, kind, i))
    return laurent_sum(parts)


def localization_D(i: int, k: int) -> Rational:
    """D(i, k) re-derived from the graph sum alone.

    The j = 0 family contributes D(i, k) * t**(i - (k-3)); the vanishing of
    the full sum therefore pins D(i, k) to minus the remaining families'
    coefficient at that power.
    """
    _check_even_k(k, 6)
    return _extract("A", k, i, expected_power=i - (k - 3))


def localization_d(i: int, k: int) -> Rational:
    """d(i, k) re-derived from the graph sum alone (j = 0 family isolated)."""
    _check_even_k(k, 4)
    return _extract("B", k, i, expected_power=i - (k - 2))


def _extract(kind: FamilyKind, k: int, i: int, expected_power: int) -> Rational:
    j_top = k - 3 if kind == "A" else k - 2
    parts = []
    for j in range(1, j_top + 1):
        graph, multiplicity = enumerate_family(kind, k, j)
        parts.append(graph_contribution(graph, multiplicity, kind, i))
    rest = laurent_sum(parts)
    stray = set(rest.support()) - {expected_power}
    if stray:
        raise VerificationError(
            f"graph sum for kind {kind}, k={k}, i={i} has unexpected "
            f"t-powers {sorted(stray)}", key=(kind, k, i), computed=rest)
    return -rest.coefficient(expected_power)


def _check_even_k(k: int, minimum: int) -> None:
    if k % 2:
        raise DomainError(f"k must be even, got {k}")
    if k < minimum:
        raise DomainError(f"k must be >= {minimum}, got {k}")


def _check_insertion(graph: LocalizationGraph, insertion: FamilyKind) -> None:
    if insertion == "A":
        placed = ({1, 2} <= graph.over_zero and 3 in graph.over_infty)
    elif insertion == "B":
        placed = {1, 2} <= graph.over_zero
    else:
        raise DomainError(f"insertion must be 'A' or 'B', not {insertion!r}")
    if not placed:
        raise DomainError(
            f"graph is inconsistent with the kind-{insertion} point placement")
