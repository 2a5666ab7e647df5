"""Graph enumeration, vertex moduli, contributions, and the vanishing sums."""

from fractions import Fraction
from math import comb

import pytest

from hyperhodge.algebra import LaurentPolynomial
from hyperhodge.errors import DomainError
from hyperhodge.localization import (LocalizationGraph, auxiliary_integral,
                                     contribution_template, enumerate_family,
                                     graph_contribution, localization_D,
                                     localization_d, vertex_integral,
                                     vertex_moduli_of)
from hyperhodge.values import closed_D, closed_d, recursive_D, recursive_d


# ---------------------------------------------------------------------------
# graphs and families


def test_graph_partition_validation():
    LocalizationGraph(4, frozenset({1, 2}), frozenset({3, 4}))
    with pytest.raises(DomainError):
        LocalizationGraph(4, frozenset({1, 2, 3}), frozenset({3, 4}))
    with pytest.raises(DomainError):
        LocalizationGraph(4, frozenset({1, 2}), frozenset({4}))


def test_enumerate_family_multiplicities():
    _, mult = enumerate_family("A", 10, 0)
    assert mult == 1
    _, mult = enumerate_family("A", 10, 1)
    assert mult == 10 - 3
    _, mult = enumerate_family("B", 8, 3)
    assert mult == comb(6, 3) == 20


def test_enumerate_family_point_placement():
    graph, _ = enumerate_family("A", 8, 2)
    assert {1, 2} <= graph.over_zero
    assert 3 in graph.over_infty
    assert len(graph.over_infty) == 3
    graph, _ = enumerate_family("B", 8, 2)
    assert {1, 2, 3} <= graph.over_zero
    assert len(graph.over_infty) == 2


def test_enumerate_family_domain_errors():
    with pytest.raises(DomainError):
        enumerate_family("A", 8, 6)  # j > k - 3
    with pytest.raises(DomainError):
        enumerate_family("B", 8, 7)  # j > k - 2
    with pytest.raises(DomainError):
        enumerate_family("A", 4, 0)  # A needs k >= 6
    with pytest.raises(DomainError):
        enumerate_family("A", 7, 0)  # odd k
    with pytest.raises(DomainError):
        enumerate_family("C", 8, 0)


@pytest.mark.parametrize("kind,k", [("A", 6), ("A", 12), ("B", 4), ("B", 12)])
def test_family_multiplicities_cover_all_labelings(kind, k):
    free = k - 3 if kind == "A" else k - 2
    top = free
    total = sum(enumerate_family(kind, k, j)[1] for j in range(top + 1))
    assert total == 2 ** free


# ---------------------------------------------------------------------------
# vertex moduli


def test_vertex_parity_rule():
    graph, _ = enumerate_family("A", 6, 3)  # 2 points over 0, 4 over infinity
    v0, vinf = vertex_moduli_of(graph)
    assert (v0.twisted, v0.untwisted) == (2, 1)
    assert (vinf.twisted, vinf.untwisted) == (4, 1)

    # 3 half-edges force a twisted node: 4 twisted points, dimension 1
    graph = LocalizationGraph(6, frozenset({1, 2, 4}), frozenset({3, 5, 6}))
    v0, vinf = vertex_moduli_of(graph)
    assert (v0.twisted, v0.untwisted) == (4, 0)
    assert v0.dimension == 1
    assert (vinf.twisted, vinf.untwisted) == (4, 0)


def test_degenerate_vertices():
    graph, _ = enumerate_family("B", 6, 0)
    _, vinf = vertex_moduli_of(graph)
    assert vinf.degenerate and vinf.half_edges == 0
    with pytest.raises(DomainError):
        vinf.dimension

    graph, _ = enumerate_family("A", 6, 0)
    v0, vinf = vertex_moduli_of(graph)
    assert vinf.degenerate and vinf.half_edges == 1
    assert not v0.degenerate
    assert (v0.twisted, v0.untwisted) == (6, 0)
    assert v0.dimension == 3


def test_vertex_integral_examples():
    assert vertex_integral(2, 1, 0, 0) == Fraction(1, 2)
    assert vertex_integral(4, 0, 1, 0) == Fraction(1, 2)
    assert vertex_integral(4, 0, 0, 1) == Fraction(1, 4)
    # off the top degree everything vanishes
    assert vertex_integral(4, 0, 0, 0) == 0
    assert vertex_integral(4, 0, 2, 1) == 0
    assert vertex_integral(2, 1, 1, 0) == 0
    assert vertex_integral(6, 1, 4, 0) == closed_d(0, 6)


def test_vertex_integral_validation():
    with pytest.raises(DomainError):
        vertex_integral(4, 2, 0, 0)
    with pytest.raises(DomainError):
        vertex_integral(3, 0, 0, 0)


# ---------------------------------------------------------------------------
# contributions


def test_gluing_factor_in_template():
    # both vertices contracted: 2 * 2 * (1/2) = 2 survives in the prefactor
    graph, mult = enumerate_family("B", 8, 4)
    template = contribution_template(graph, mult, "B")
    assert abs(template.prefactor) == mult * 2
    # one contracted vertex: 2 * (1/2) = 1
    graph, mult = enumerate_family("B", 8, 1)
    template = contribution_template(graph, mult, "B")
    assert abs(template.prefactor) == mult


def test_contribution_of_lead_graphs():
    # single remaining family-0 graph carries exactly the integral itself
    for k in (6, 8, 12):
        for i in range((k - 2) // 2 + 1):
            graph, mult = enumerate_family("A", k, 0)
            assert graph_contribution(graph, mult, "A", i) \
                == LaurentPolynomial.term(i - (k - 3), closed_D(i, k))
    for k in (4, 8, 12):
        for i in range((k - 2) // 2 + 1):
            graph, mult = enumerate_family("B", k, 0)
            assert graph_contribution(graph, mult, "B", i) \
                == LaurentPolynomial.term(i - (k - 2), closed_d(i, k))


def test_contribution_cancels_for_balanced_split():
    # the lambda splitting of A_2 at k=6, i=1 cancels: 1/8 - 1/8
    graph, mult = enumerate_family("A", 6, 2)
    assert graph_contribution(graph, mult, "A", 1).is_zero()


def test_contribution_rejects_inconsistent_placement():
    bad = LocalizationGraph(6, frozenset({3, 4, 5, 6}), frozenset({1, 2}))
    with pytest.raises(DomainError):
        graph_contribution(bad, 1, "A", 0)
    with pytest.raises(DomainError):
        graph_contribution(bad, 1, "B", 0)


@pytest.mark.parametrize("kind,k", [("A", 6), ("A", 10), ("B", 4), ("B", 10)])
def test_each_graph_contributes_a_single_power(kind, k):
    offset = k - 3 if kind == "A" else k - 2
    top = k - 3 if kind == "A" else k - 2
    for j in range(top + 1):
        graph, mult = enumerate_family(kind, k, j)
        for i in range((k - 2) // 2 + 1):
            support = graph_contribution(graph, mult, kind, i).support()
            assert set(support) <= {i - offset}


# ---------------------------------------------------------------------------
# the vanishing integrals and the recursion extraction


@pytest.mark.parametrize("k", range(6, 17, 2))
def test_auxiliary_integral_A_vanishes(k):
    for i in range((k - 2) // 2 + 1):
        assert auxiliary_integral("A", k, i).is_zero()


@pytest.mark.parametrize("k", range(4, 17, 2))
def test_auxiliary_integral_B_vanishes(k):
    for i in range((k - 2) // 2 + 1):
        assert auxiliary_integral("B", k, i).is_zero()


def test_auxiliary_integral_beyond_genus_is_trivially_zero():
    assert auxiliary_integral("A", 8, 12).is_zero()
    assert auxiliary_integral("B", 6, 9).is_zero()


@pytest.mark.parametrize("k", range(6, 21, 2))
def test_graph_sum_rederives_D_recursion(k):
    for i in range((k - 2) // 2 + 1):
        assert localization_D(i, k) == recursive_D(i, k)


@pytest.mark.parametrize("k", range(4, 21, 2))
def test_graph_sum_rederives_d_recursion(k):
    for i in range((k - 2) // 2 + 1):
        assert localization_d(i, k) == recursive_d(i, k)
