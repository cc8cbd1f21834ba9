"""
Tests for spectra, Newton polynomials, characters, histograms and sweep tables
"""

import logging

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import EmptyInput, OutOfRange, SymmetryError
from constructions import nanotube_50
from graph_core import adjacency_matrix, is_isomorphic, matrices
from spectral import (
    character,
    character_expm,
    character_gaps,
    character_range,
    character_series,
    goldberg_parameters,
    extreme_bounds,
    histogram,
    monotonicity_table,
    newton,
    normalized_character,
    normalized_newton,
    spectral_summary,
    sweep,
    sym_eigenvalues,
    to_csv,
)

SQRT5 = np.sqrt(5.0)


def test_icosahedron_spectrum(icosahedron):
    eigenvalues = sym_eigenvalues(adjacency_matrix(icosahedron))
    expected = [5.0] + [SQRT5] * 3 + [-1.0] * 5 + [-SQRT5] * 3
    assert np.allclose(eigenvalues, expected)


def test_asymmetric_matrix_is_rejected():
    with pytest.raises(SymmetryError):
        sym_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_newton_counts_closed_walks(icosahedron):
    A = adjacency_matrix(icosahedron)
    assert newton(A, 0).value == 12
    assert newton(A, 1).value == 0
    assert newton(A, 2).value == 60
    # six closed 3-walks per triangle
    assert newton(A, 3).value == 120
    with pytest.raises(ValueError):
        newton(A, -1)


def test_icosahedron_character(icosahedron):
    assert character(icosahedron, 0.5, 0.25) == pytest.approx(88.56, abs=0.01)
    assert character(icosahedron) == pytest.approx(88.56, abs=0.01)


def test_character_oracles_agree(icosahedron, tube30):
    for g in (icosahedron, tube30):
        ch = character(g, 0.5, 0.25)
        assert character_series(g, 0.5, 0.25) == pytest.approx(ch, rel=1e-9)
        assert character_expm(g, 0.5, 0.25) == pytest.approx(ch, rel=1e-9)


def test_character_limits(icosahedron):
    assert character(icosahedron, 1e-9, 1e-9) == pytest.approx(12, rel=1e-6)
    assert character(icosahedron, 0.0, 0.25) == pytest.approx(12 * np.exp(1.25))


def test_spectral_summary(icosahedron):
    summary = spectral_summary(icosahedron, 0.5, 0.25, graph_id='C20')
    data = summary.to_dict()
    assert data['graph_id'] == 'C20'
    assert len(data['eigenvalues']) == 12
    assert data['eigenvalues'][0] == pytest.approx(5 + 0.5 * 5)
    assert data['character'] == pytest.approx(character(icosahedron, 0.5, 0.25))


def test_normalized_character():
    assert normalized_character(1.0, 1.0, 3.0) == 0.0
    assert normalized_character(3.0, 1.0, 3.0) == 1.0
    assert normalized_character(2.0, 1.0, 3.0) == 0.5
    with pytest.raises(OutOfRange):
        normalized_character(4.0, 1.0, 3.0)
    with pytest.raises(ValueError):
        normalized_character(1.0, 2.0, 2.0)


def test_normalized_newton(icosahedron, c60):
    assert normalized_newton(icosahedron, 0) == pytest.approx(1.0)
    assert normalized_newton(icosahedron, 1) == pytest.approx(2.5)
    X = matrices(c60, 1.0, 0.5)
    expected = 2.0 / 64 * np.trace(np.linalg.matrix_power(X, 2))
    assert normalized_newton(c60, 2) == pytest.approx(expected)
    assert normalized_newton(c60, 0, 'primal') == pytest.approx(1.0)
    # every primal vertex has degree 3
    assert normalized_newton(c60, 2, 'primal') == pytest.approx(3.0)
    with pytest.raises(ValueError):
        normalized_newton(c60, 1, 'hex')


def test_histogram_density():
    df = histogram([0.5, 1.5], bins=1, value_range=(0.0, 2.0))
    assert list(df['count']) == [2]
    assert df['density'][0] == pytest.approx(0.5)

    values = np.random.default_rng(7).random(500)
    df = histogram(values, bins=20)
    assert (df['density'] * (df['right'] - df['left'])).sum() == pytest.approx(1.0)
    assert df['count'].sum() == 500


def test_histogram_rejects_bad_input():
    with pytest.raises(EmptyInput):
        histogram([])
    with pytest.raises(ValueError):
        histogram([1.0], bins=0)


def test_goldberg_parameters():
    assert goldberg_parameters(20) == (1, 0)
    assert goldberg_parameters(60) == (1, 1)
    assert goldberg_parameters(80) == (2, 0)
    assert goldberg_parameters(40) is None
    assert goldberg_parameters(30) is None


def test_sweep_single_isomer(icosahedron):
    df = sweep(20, [icosahedron])
    assert list(df.columns) == ['n', 'j', 'character', 'normalized']
    assert list(df['j']) == [1]
    assert df['normalized'][0] == 0.0


def test_sweep_without_bounds_uses_observed_extremes(isomers):
    df = sweep(28, isomers(28))
    assert sorted(df['normalized']) == [0.0, 1.0]


def test_nanotube_has_largest_character(isomers, tube30):
    report = character_range(30, isomers(30), neighbors={28: isomers(28)})
    assert is_isomorphic(isomers(30)[report['argmax'] - 1], tube30)
    assert report['min'] <= report['max']
    assert 28 in report['overlaps']
    with pytest.raises(EmptyInput):
        character_range(30, [])


def test_monotonicity_table(isomers):
    df = monotonicity_table({20: isomers(20), 24: isomers(24), 26: isomers(26)})
    assert list(df['n']) == [24]
    assert df['passes'][0] == (df['max'][0] < df['next_min'][0])


def test_character_gaps(isomers):
    a, b = isomers(28)
    report = character_gaps([a, b])
    assert report['count'] == 2
    assert report['min_gap'] > 0
    assert report['collisions'] == []

    twin = a.relabel(list(reversed(range(a.m))))
    report = character_gaps([a, twin])
    assert report['collisions'] == [(0, 1)]
    assert report['collisions_isomorphic'] is True


def test_csv_output(tmp_path, icosahedron):
    path = tmp_path / 'sweep.csv'
    to_csv(sweep(20, [icosahedron]), path)
    data = path.read_bytes()
    assert data.startswith(b'n,j,character,normalized\n')
    assert b'\r' not in data


@settings(max_examples=40, deadline=None)
@given(alpha=st.floats(0.05, 1.5), beta=st.floats(0.0, 1.5),
       n=st.sampled_from([20, 24, 26, 28, 30]), j=st.integers(0, 2))
def test_character_oracles_agree_over_parameters(isomers, alpha, beta, n, j):
    group = isomers(n)
    g = group[j % len(group)]
    ch = character(g, alpha, beta)
    assert character_expm(g, alpha, beta) == pytest.approx(ch, rel=1e-9)
    assert character_series(g, alpha, beta, terms=80) == pytest.approx(ch, rel=1e-8)


@settings(max_examples=20, deadline=None)
@given(n=st.sampled_from([24, 26, 28, 30]), j=st.integers(0, 2),
       representation=st.sampled_from(['dual', 'hex', 'primal']))
def test_vanishing_parameters_count_vertices(isomers, n, j, representation):
    group = isomers(n)
    g = group[j % len(group)]
    vertices = {'dual': g.m, 'hex': g.m - 12, 'primal': n}[representation]
    assert character(g, 1e-9, 1e-9, representation) == pytest.approx(vertices, rel=1e-6)


def test_sweep_bounds_coincide_at_twenty(icosahedron):
    lo, hi = extreme_bounds(20)
    assert lo == pytest.approx(hi)
    assert is_isomorphic(nanotube_50(0), icosahedron)
    df = sweep(20, [nanotube_50(0)])
    assert df['normalized'][0] == 0.0


def test_clamped_normalized_character_is_logged(caplog):
    with caplog.at_level(logging.DEBUG, logger='spectral'):
        assert normalized_character(3.0 + 1e-10, 1.0, 3.0) == 1.0
    assert 'clamped' in caplog.text
    caplog.clear()
    with caplog.at_level(logging.DEBUG, logger='spectral'):
        normalized_character(2.0, 1.0, 3.0)
    assert 'clamped' not in caplog.text


@pytest.mark.slow
def test_character_gaps_pooled_up_to_forty(isomers):
    pooled = [g for n in range(20, 42, 2) for g in isomers(n)]
    report = character_gaps(pooled)
    assert report['count'] == sum(len(isomers(n)) for n in range(20, 42, 2))
    assert report['min_gap'] > 0
    assert report['collisions'] == []


@pytest.mark.slow
def test_c40_nanotube_is_argmax_and_histogram(isomers):
    group = isomers(40)
    report = character_range(40, group)
    assert is_isomorphic(group[report['argmax'] - 1], nanotube_50(2))
    df = sweep(40, group)
    assert len(df) == 40
    assert df['normalized'].min() == 0.0
    assert df['normalized'].max() == 1.0
    hist = histogram(df['normalized'], bins=10, value_range=(0.0, 1.0))
    assert hist['count'].sum() == 40
