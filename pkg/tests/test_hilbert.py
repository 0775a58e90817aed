from fractions import Fraction
from itertools import product
from math import factorial

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from systems import CYCLIC4_POINT, EX1_POINT, SUITE, cyclic4, example1

from localdual import (
    MonomialIdeal,
    Polynomial,
    Strategy,
    TooManyGeneratorsError,
    dual_dimension_profile,
    g_corners,
    hilbert_function_of_dual,
    hilbert_series_data,
    local_dimension_and_multiplicity,
    local_hilbert_regularity,
    s_corners,
    truncated_dual,
)
from localdual.hilbert import minimalize
from localdual.oracle import exact_standard_monomial_count

CYCLIC4_CORNERS = {(0, 0, 0, 1), (0, 0, 1, 0), (0, 2, 0, 0), (1, 1, 0, 0)}


def brute_s_corners(M):
    """Scan a box one larger than the generator bounding box."""
    n = M.nvars
    box = [max((g[j] for g in M.gens), default=0) + 2 for j in range(n)]
    out = set()
    for a in product(*(range(b) for b in box)):
        if a in M:
            continue
        if all((a[:j] + (a[j] + 1,) + a[j + 1:]) in M for j in range(n)):
            out.add(a)
    return out


def test_monomial_ideal_minimality_enforced():
    with pytest.raises(ValueError):
        MonomialIdeal(frozenset({(1, 0), (2, 0)}), 2)
    M = MonomialIdeal.from_generators([(2, 0), (1, 0), (1, 1), (0, 3)], 2)
    assert M.gens == {(1, 0), (0, 3)}
    assert (3, 5) in M and (0, 2) not in M


def test_hilbert_function_of_dual_examples():
    D = truncated_dual(cyclic4(), CYCLIC4_POINT, 6)
    assert hilbert_function_of_dual(D, range(7)) == [1, 2, 1, 1, 1, 1, 1]
    assert hilbert_function_of_dual(D, [0]) == [1]
    x1, x2 = Polynomial.variables(2)
    profile = dual_dimension_profile([x1**2 - x2], (0, 0), 3)
    assert hilbert_function_of_dual(profile, range(4)) == [1, 1, 1, 1]
    with pytest.raises(ValueError):
        hilbert_function_of_dual(D, [7])
    with pytest.raises(ValueError):
        hilbert_function_of_dual(profile, [4])


def test_g_corners_cyclic4():
    G = g_corners(cyclic4(), CYCLIC4_POINT)
    assert G.verified
    assert set(G.ideal.gens) == CYCLIC4_CORNERS


def test_g_corners_simple():
    x1, x2 = Polynomial.variables(2)
    G = g_corners([x1**2, x2], (0, 0))
    assert G.gens == [(2, 0), (0, 1)]
    assert set(g_corners([x1**2 - x2], (0, 0)).ideal.gens) == {(0, 1)}


@pytest.mark.parametrize("tol", [1e-9, 1e-7, 1e-6, 1e-4])
def test_g_corners_monomial_fixed_point(tol):
    x1, x2, x3 = Polynomial.variables(3)
    for gens in ([x1**2, x2], [x1 * x2, x3**3, x2**2], [x1**3, x1 * x2 * x3, x2**2, x3**2]):
        G = g_corners(gens, (0, 0, 0), tol=tol)
        expected = {tuple(next(iter(g.terms))) for g in gens}
        assert set(G.ideal.gens) == set(minimalize(expected))


def test_g_corners_flags_unverified():
    x1, x2 = Polynomial.variables(2)
    G = g_corners([x1**3 - x2**2], (0, 0), max_degree=3)
    assert not G.verified and G.degree == 3
    assert set(G.ideal.gens) == {(0, 2)}


def test_s_corners_examples():
    assert s_corners(MonomialIdeal.from_generators([(1, 0), (0, 1)], 2)) == {(0, 0)}
    M = MonomialIdeal(frozenset(CYCLIC4_CORNERS), 4)
    assert brute_s_corners(M) == {(0, 1, 0, 0)}
    assert s_corners(M) == {(0, 1, 0, 0)}
    assert s_corners(MonomialIdeal(frozenset(), 2)) == set()


def test_hilbert_series_examples():
    data = hilbert_series_data(MonomialIdeal(frozenset(CYCLIC4_CORNERS), 4))
    assert data.hp == (Fraction(1),)
    assert data.regularity == 2
    for n in (1, 2, 4):
        M = MonomialIdeal.from_generators([tuple(int(i == j) for j in range(n)) for i in range(n)], n)
        data = hilbert_series_data(M)
        assert data.hp == ()
        assert data.regularity == 1
        assert data.hf_values[0] == 1 and set(data.hf_values[1:]) == {0}
    data = hilbert_series_data(MonomialIdeal(frozenset(), 2))
    assert data.hp == (Fraction(1), Fraction(1))
    assert data.regularity == 0
    assert data.hp_string() == "d + 1"


def test_hilbert_series_generator_cap():
    gens = [(i, 30 - i) for i in range(25)]
    with pytest.raises(TooManyGeneratorsError):
        hilbert_series_data(MonomialIdeal.from_generators(gens, 2))


monomial_ideals = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.tuples(*[st.integers(0, 4)] * n), max_size=6).map(
        lambda gens: MonomialIdeal.from_generators([g for g in gens if any(g)], n)
    )
)


@settings(max_examples=80, deadline=None)
@given(monomial_ideals)
def test_hilbert_series_against_enumeration(M):
    data = hilbert_series_data(M)
    L = data.lattice_degree
    for d, v in enumerate(data.hf_values):
        assert v == exact_standard_monomial_count(M, d)
    for d in range(L, L + 6):
        assert data.hp_at(d) == exact_standard_monomial_count(M, d)
    assert s_corners(M) == brute_s_corners(M)


def test_regularity_examples():
    assert local_hilbert_regularity(cyclic4(), CYCLIC4_POINT) == 2
    x1, x2 = Polynomial.variables(2)
    assert local_hilbert_regularity([x1, x2], (0, 0)) == 1
    assert local_hilbert_regularity([x1**2 - x2], (0, 0)) == 0


def test_dimension_and_multiplicity_examples():
    assert local_dimension_and_multiplicity(cyclic4(), CYCLIC4_POINT) == (1, 1)
    assert local_dimension_and_multiplicity(example1(), EX1_POINT) == (0, 2)
    x1, x2 = Polynomial.variables(2)
    assert local_dimension_and_multiplicity([x1], (0, 0)) == (1, 1)
    assert local_dimension_and_multiplicity([x1**3 - x2**2], (0, 0)) == (1, 2)


@pytest.mark.parametrize("case", SUITE, ids=lambda c: c.name)
def test_g_corner_duality_and_minimality(case):
    G = g_corners(case.system, case.point)
    assert G.verified
    gens = sorted(G.ideal.gens)
    n = case.system.nvars
    hf = hilbert_function_of_dual(list(G.dual_profile), range(G.degree + 1))
    for d in range(G.degree + 1):
        assert exact_standard_monomial_count(G.ideal, d) == hf[d]
    # dropping any generator changes the staircase
    for g in gens:
        rest = MonomialIdeal(frozenset(h for h in gens if h != g), n)
        assert g not in rest


def test_g_corners_dz_matches_bm():
    for case in SUITE[:8]:
        a = g_corners(case.system, case.point, strategy=Strategy.BM)
        b = g_corners(case.system, case.point, strategy=Strategy.DZ)
        assert a.ideal == b.ideal


def test_initial_terms_form_order_ideal():
    D = truncated_dual(cyclic4(), CYCLIC4_POINT, 5)
    initial = set(D.initial_terms())
    assert len(initial) == D.dim
    for a in initial:
        for j in range(4):
            if a[j]:
                assert a[:j] + (a[j] - 1,) + a[j + 1:] in initial


def test_multiplicity_random_monomial_ideals_are_integral():
    rng = np.random.default_rng(0)
    for _ in range(30):
        n = int(rng.integers(1, 4))
        gens = [tuple(int(v) for v in rng.integers(0, 3, size=n)) for _ in range(3)]
        M = MonomialIdeal.from_generators([g for g in gens if any(g)], n)
        data = hilbert_series_data(M)
        if data.hp:
            mult = data.leading_coefficient * factorial(data.hp_degree)
            assert mult.denominator == 1 and mult > 0
