"""Coboundaries, weight schemes, Laplacian assembly, symmetrization."""

import numpy as np
import pytest

from hodgelap.core import from_facets
from hodgelap.errors import WeightError
from hodgelap.operators import (
    WeightScheme,
    coboundary_matrix,
    entrywise_laplacian,
    laplacian,
    normalized_weight_map,
    symmetrize,
    weight_map,
    weight_vector,
)
from hodgelap.theorems import deterministic_custom_scheme

SCHEMES = [WeightScheme.combinatorial(), WeightScheme.normalized()]


def test_coboundary_single_edge():
    k = from_facets([[0, 1]])
    d0 = coboundary_matrix(k, 0).matrix.toarray()
    assert d0.tolist() == [[-1, 1]]
    dm1 = coboundary_matrix(k, -1).matrix.toarray()
    assert dm1.tolist() == [[1], [1]]


def test_coboundary_top_is_empty():
    hollow = from_facets([[0, 1], [1, 2], [0, 2]])
    d1 = coboundary_matrix(hollow, 1).matrix
    assert d1.shape == (0, 3)


def test_coboundary_composition_is_zero(random_complexes):
    for k in random_complexes:
        for i in range(0, k.dim + 1):
            d_i = coboundary_matrix(k, i).matrix
            d_im1 = coboundary_matrix(k, i - 1).matrix
            assert (d_i @ d_im1).nnz == 0  # exact integer arithmetic


def test_normalized_weights_graph_degrees():
    g = from_facets([[0, 1], [0, 2], [0, 3]])
    w = weight_map(g, WeightScheme.normalized())
    assert w[(0,)] == 3 and w[(1,)] == 1
    assert w[(0, 1)] == 1
    assert w[()] == 6


def test_normalized_weights_shared_edge():
    k = from_facets([[0, 1, 2], [1, 2, 3]])
    w = weight_map(k, WeightScheme.normalized())
    assert w[(1, 2)] == 2
    assert w[(0, 1)] == 1
    assert w[(0, 1, 2)] == 1


def test_normalized_weights_filled_triangle_vertices():
    k = from_facets([[0, 1, 2]])
    w = weight_map(k, WeightScheme.normalized())
    assert all(w[(v,)] == 2 for v in range(3))


def test_normalized_weight_map_custom_facet_base():
    k = from_facets([[0, 1, 2]])
    w = normalized_weight_map(k, facet_base={(0, 1, 2): 5.0})
    assert w[(0, 1)] == 5.0 and w[(0,)] == 10.0


def test_zero_degree_faces_flagged():
    k = from_facets([[0, 1, 2], [3]])
    wv = weight_vector(k, 0, WeightScheme.normalized())
    flagged = [f for f, z in zip(k.faces(0), wv.zero_degree) if z]
    assert flagged == [(3,)]
    assert (wv.values > 0).all()  # isolated vertex is a facet: weight 1


def test_custom_scheme_validation():
    k = from_facets([[0, 1]])
    with pytest.raises(WeightError):
        weight_map(k, WeightScheme.from_map({(0,): 1.0}))  # incomplete
    with pytest.raises(WeightError):
        weight_map(
            k, WeightScheme.from_map({(0,): 1.0, (1,): -2.0, (0, 1): 1.0})
        )


def test_laplacian_triangle_graph_normalized():
    k3 = from_facets([[0, 1], [0, 2], [1, 2]])
    lap = laplacian(k3, 0, "up", WeightScheme.normalized())
    np.testing.assert_allclose(np.diag(lap.matrix), 1.0)
    off = lap.matrix[~np.eye(3, dtype=bool)]
    np.testing.assert_allclose(off, -0.5)


def test_laplacian_k3_combinatorial_is_graph_laplacian():
    k3 = from_facets([[0, 1], [0, 2], [1, 2]])
    lap = laplacian(k3, 0, "up", WeightScheme.combinatorial())
    expected = 2 * np.eye(3) - (np.ones((3, 3)) - np.eye(3))
    np.testing.assert_allclose(lap.matrix, expected)


def test_laplacian_minus_one_up_is_one(fixtures):
    for k in fixtures.values():
        lap = laplacian(k, -1, "up", WeightScheme.normalized())
        np.testing.assert_allclose(lap.matrix, [[1.0]])


def test_laplacian_degenerate_top_up(fixtures):
    k = fixtures["filled-triangle"]
    lap = laplacian(k, 2, "up", WeightScheme.normalized())
    assert lap.matrix.shape == (1, 1) and lap.matrix[0, 0] == 0
    assert not lap.domain_mask.any()


def test_symmetrize_k13():
    k13 = from_facets([[0, 1], [0, 2], [0, 3]])
    lap = laplacian(k13, 0, "up", WeightScheme.normalized())
    sym = symmetrize(lap)
    np.testing.assert_allclose(sym, sym.T)
    center = k13.index((0,))
    leaf = k13.index((1,))
    np.testing.assert_allclose(sym[center, leaf], -1 / np.sqrt(3))


def test_symmetrize_combinatorial_identity_weights(fixtures):
    k = fixtures["two-triangles-shared-edge"]
    lap = laplacian(k, 1, "up", WeightScheme.combinatorial())
    np.testing.assert_allclose(symmetrize(lap), lap.matrix, atol=1e-12)


def test_entrywise_equals_product_form(fixtures, random_complexes):
    pool = list(fixtures.values()) + random_complexes[:6]
    for k in pool:
        schemes = SCHEMES + [deterministic_custom_scheme(k, 7)]
        for scheme in schemes:
            for i in range(-1, k.dim + 1):
                for direction in ("up", "down", "full"):
                    a = laplacian(k, i, direction, scheme).matrix
                    b = entrywise_laplacian(k, i, direction, scheme)
                    assert np.abs(a - b).max() <= 1e-12


def test_spectra_nonnegative(fixtures, random_complexes):
    from hodgelap.spectra import spectrum

    for k in list(fixtures.values()) + random_complexes[:6]:
        for scheme in SCHEMES + [deterministic_custom_scheme(k, 3)]:
            for i in range(-1, k.dim + 1):
                for direction in ("up", "down", "full"):
                    s = spectrum(laplacian(k, i, direction, scheme))
                    assert s.values.min() >= -1e-9


def test_normalized_upper_bound_quick(fixtures):
    from hodgelap.spectra import spectrum

    for k in fixtures.values():
        for i in range(0, k.dim):
            s = spectrum(laplacian(k, i, "up", WeightScheme.normalized()))
            assert s.values.max() <= i + 2 + 1e-9
