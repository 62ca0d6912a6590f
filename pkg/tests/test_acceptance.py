"""Acceptance criteria: one test per criterion, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as the
criteria complete.  Every tolerance is pinned here: 1e-7 for eigenvalue
multisets, 1e-9 slack for bounds and interlacing, 1e-8 relative for the
zero threshold, exact integer equality for all counting statements.
"""

import time
from contextlib import contextmanager

import numpy as np
import pytest

from hodgelap import corpus
from hodgelap._kernels import exhaustive_balance
from hodgelap.cli import cli_main
from hodgelap.constructions import (
    FamilySpec,
    duplicate_motif,
    generate,
    reference_spectrum,
)
from hodgelap.core import (
    dual_graph,
    from_facets,
    chromatic_number_1skel,
    motif as make_motif,
    closure_of,
    signed_balance,
)
from hodgelap.operators import WeightScheme, coboundary_matrix, laplacian
from hodgelap.spectra import (
    betti,
    bounds_report,
    eq_mod_zeros,
    multiset_deviation,
    predicted_zero_multiplicity,
    predicted_zero_multiplicity_formulas,
    spectrum,
    union_mod_zeros,
)
from hodgelap.theorems import (
    _component_top_eigenvalue_present,
    check_cone,
    check_duplication,
    check_graph_product,
    check_join,
    check_wedge,
    deterministic_custom_scheme,
)

VALUE_TOL = 1e-7
SLACK = 1e-9
NORM = WeightScheme.normalized()
COMB = WeightScheme.combinatorial()


@contextmanager
def criterion(number, description):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number}: FAIL - {description}")
        raise
    elapsed = time.monotonic() - start
    print(f"ACCEPTANCE {number}: PASS - {description} ({elapsed:.1f}s)")


@pytest.fixture(scope="module")
def full_corpus():
    return corpus.full_corpus(seed=0, random_count=50)


def _schemes(k):
    return [COMB, NORM, deterministic_custom_scheme(k, 0)]


def test_criterion_1_family_closed_forms():
    with criterion(1, "closed-form family spectra (i<=3, m<=12, n<=8) at 1e-7, <10s"):
        start = time.monotonic()
        for spec in corpus.family_specs():
            k = generate(spec)
            if spec.family == "simplex":
                for i in range(-1, spec.n):
                    ref = reference_spectrum(FamilySpec("simplex", n=spec.n, i=i))
                    got = spectrum(laplacian(k, i, "up", NORM))
                    assert multiset_deviation(got.values, ref.values) <= VALUE_TOL
            else:
                i = 2 if spec.family == "moebius-circuit" else spec.i
                ref = reference_spectrum(spec)
                got = spectrum(laplacian(k, i, "down", NORM))
                assert multiset_deviation(got.values, ref.values) <= VALUE_TOL, spec
        # the length-6 2-circuit pins the exact half-integer multiset
        c26 = spectrum(
            laplacian(generate(FamilySpec("circuit", i=2, m=6)), 2, "down", NORM)
        )
        np.testing.assert_allclose(
            c26.values, [1, 1.5, 1.5, 2.5, 2.5, 3], atol=VALUE_TOL
        )
        assert time.monotonic() - start < 10.0


def test_criterion_2_zero_counts(full_corpus):
    with criterion(2, "zero multiplicities equal the counting formulas corpus-wide"):
        for name, k in full_corpus.items():
            profile = betti(k)
            for i in range(-1, k.dim + 1):
                f1, f2 = predicted_zero_multiplicity_formulas(k, i, profile)
                assert f1 == f2, (name, i)
                for scheme in _schemes(k):
                    for direction in ("up", "down", "full"):
                        s = spectrum(laplacian(k, i, direction, scheme))
                        predicted = predicted_zero_multiplicity(k, i, direction, profile)
                        assert s.zero_multiplicity == predicted, (
                            name,
                            i,
                            direction,
                            scheme.kind,
                        )


def test_criterion_3_bounds(full_corpus):
    with criterion(3, "upper/trace/degree bounds hold corpus-wide with 1e-9 slack"):
        for name, k in full_corpus.items():
            for i in range(0, k.dim):
                for scheme in _schemes(k):
                    rep = bounds_report(k, i, scheme, SLACK)
                    if rep.applicable:
                        assert rep.all_satisfied, (name, i, scheme.kind, rep.flags)
        # tightness witnesses
        k3 = from_facets([[0, 1], [0, 2], [1, 2]])
        rep = bounds_report(k3, 0, NORM)
        assert abs(rep.normalized_degree_lower - 1.5) <= SLACK
        assert abs(rep.lambda_max - 1.5) <= SLACK
        for i in range(0, 3):
            simplex = generate(FamilySpec("simplex", n=i + 2))
            rep = bounds_report(simplex, i, NORM)
            assert abs(rep.lambda_max - (i + 2)) <= SLACK
            assert abs(rep.upper_bound - (i + 2)) <= SLACK


def test_criterion_4_structural_identities(full_corpus):
    with criterion(4, "up/down duality, union splitting, and Hodge zero counts"):
        for name, k in full_corpus.items():
            profile = betti(k)
            for scheme in _schemes(k):
                spectra = {
                    (i, d): spectrum(laplacian(k, i, d, scheme))
                    for i in range(-1, k.dim + 1)
                    for d in ("up", "down", "full")
                }
                for i in range(-1, k.dim + 1):
                    up, down, full = (spectra[(i, d)] for d in ("up", "down", "full"))
                    if i < k.dim:
                        assert eq_mod_zeros(
                            up, spectra[(i + 1, "down")], VALUE_TOL
                        ), (name, i, scheme.kind)
                    assert (
                        multiset_deviation(full.nonzero, union_mod_zeros(up, down))
                        <= VALUE_TOL
                    ), (name, i, scheme.kind)
                    assert full.zero_multiplicity == profile[i], (name, i, scheme.kind)


def test_criterion_5_constructions():
    with criterion(5, "wedge/join/cone/duplication/product identities at 1e-7, <60s"):
        start = time.monotonic()
        for name, k1, k2, f1, f2, i in corpus.wedge_instances():
            report = check_wedge(k1, k2, f1, f2, i, name, tol=VALUE_TOL, slack=SLACK)
            assert report.passed, (name, [it.name for it in report.items if not it.passed])
        for name, k1, k2 in corpus.join_instances():
            report = check_join(k1, k2, name, tol=VALUE_TOL)
            assert report.passed, name
        for name, k in corpus.cone_instances():
            report = check_cone(k, name, tol=VALUE_TOL)
            assert report.passed, name
        for name, k, verts in corpus.duplication_instances():
            report = check_duplication(k, verts, name, tol=VALUE_TOL, slack=SLACK)
            assert report.passed, name
        for name, g1, g2 in corpus.product_instances():
            report = check_graph_product(g1, g2, name, tol=VALUE_TOL)
            assert report.passed, name
        # the explicit product witness {0, 1, 1, 2}
        from hodgelap.constructions import cartesian_product, product_tensor_weight_map
        from hodgelap.operators import normalized_weight_map

        k2c = from_facets([[0, 1]])
        prod, pair_id = cartesian_product(k2c, k2c)
        w = product_tensor_weight_map(
            prod, pair_id, k2c, k2c, normalized_weight_map(k2c), normalized_weight_map(k2c)
        )
        s = spectrum(laplacian(prod, 0, "up", WeightScheme.from_map(w)))
        np.testing.assert_allclose(s.values, [0, 1, 1, 2], atol=VALUE_TOL)
        assert time.monotonic() - start < 60.0


def test_criterion_6_boundary_characterizations(full_corpus):
    with criterion(6, "balance<->i+2 both ways, chromatic, duplication, eigenvalue 1"):
        # (a) biconditional corpus-wide, both directions via exact equality
        for name, k in full_corpus.items():
            for i in range(0, k.dim):
                per_comp, present, _ = _component_top_eigenvalue_present(k, i, VALUE_TOL)
                assert any(b for b, _ in per_comp) == present, (name, i)
                for b, p in per_comp:
                    assert b == p, (name, i)
        # positive instances: bipartite graphs, simplices, stars of simplices
        positives = [
            (from_facets([[0, 1], [1, 2]]), 0),
            (from_facets([[0, 1], [1, 2], [2, 3], [0, 3]]), 0),
            (from_facets([[a, b] for a in (0, 1) for b in (2, 3, 4)]), 0),
            (from_facets([[0, 1, 2]]), 1),
            (from_facets([[0, 1, 2, 3]]), 2),
            (generate(FamilySpec("star", i=2, m=3)), 1),
            (generate(FamilySpec("star", i=3, m=4)), 2),
        ]
        for k, i in positives:
            per_comp, present, _ = _component_top_eigenvalue_present(k, i, VALUE_TOL)
            assert present and any(b for b, _ in per_comp)
        # negative instances: odd cycle and the Moebius fixture
        c3 = from_facets([[0, 1], [1, 2], [0, 2]])
        per_comp, present, s = _component_top_eigenvalue_present(c3, 0, VALUE_TOL)
        assert not present and not any(b for b, _ in per_comp)
        moebius = generate(FamilySpec("moebius-circuit"))
        per_comp, present, _ = _component_top_eigenvalue_present(moebius, 2, VALUE_TOL)
        assert not present and per_comp == []

        # (b) chromatic sufficient condition
        for k, i in [
            (from_facets([[0, 1, 2]]), 1),  # chi = 3
            (from_facets([[0, 1, 2, 3]]), 2),  # chi = 4 on the K_4 skeleton
            (from_facets([[0, 1], [1, 2]]), 0),  # bipartite, chi = 2
            (from_facets([[a, b] for a in (0, 1) for b in (2, 3, 4)]), 0),
        ]:
            assert chromatic_number_1skel(k) == i + 2
            s = spectrum(laplacian(k, i, "up", NORM))
            assert s.contains(i + 2, VALUE_TOL)

        # (c) vertex duplication produces i+1 on at least five fixtures
        produced = 0
        for name, k, verts in corpus.duplication_instances():
            if len(verts) != 1:
                continue
            sig = make_motif(k, verts)
            i = sig.link_dim
            closed_star = closure_of(sig.star)
            if closed_star.n_faces(i + 1) == 0:
                continue
            if not signed_balance(closed_star, i + 1, "parallel").balanced:
                continue
            dup, _ = duplicate_motif(k, sig)
            s = spectrum(laplacian(dup, i, "up", NORM))
            assert s.contains(i + 1, VALUE_TOL), name
            produced += 1
        assert produced >= 5, f"only {produced} duplication fixtures produced i+1"

        # (d) eigenvalue-1 equivalence where i+2 is present
        checked = 0
        for k, i in [
            (from_facets([[0, 1], [1, 2]]), 0),
            (from_facets([[0, 1], [1, 2], [2, 3], [0, 3]]), 0),
            (from_facets([[a, b] for a in (0, 1) for b in (2, 3, 4)]), 0),
            (from_facets([[0, 1, 2]]), 1),
            (from_facets([[0, 1, 2, 3]]), 2),
            (generate(FamilySpec("star", i=2, m=3)), 1),
        ]:
            s = spectrum(laplacian(k, i, "up", NORM))
            if not s.contains(i + 2, VALUE_TOL):
                continue
            dual = dual_graph(k, i, "up").to_complex()
            s_dual = spectrum(laplacian(dual, 0, "up", NORM))
            m_k = s.multiplicity_at(1.0, s.zero_tol)
            m_g = s_dual.multiplicity_at(1.0, s_dual.zero_tol)
            assert (m_k > 0) == (m_g > 0)
            assert m_k == m_g
            checked += 1
        assert checked >= 3


def test_criterion_7_oracle_cross_checks(full_corpus):
    with criterion(7, "BFS balance == exhaustive search; exact rank == float rank; Euler"):
        # balance oracle on every corpus complex small enough to enumerate
        checked = 0
        for name, k in full_corpus.items():
            for q in range(1, k.dim + 1):
                if not 1 <= k.n_faces(q) <= 12:
                    continue
                dual = dual_graph(k, q, "down")
                for mode, target in (("antiparallel", -1), ("parallel", 1)):
                    fast = signed_balance(k, q, mode).balanced
                    brute = (
                        exhaustive_balance(len(dual.nodes), list(dual.edges), target)
                        is not None
                    )
                    assert fast == brute, (name, q, mode)
                    checked += 1
        assert checked > 100
        # exact rational rank vs floating rank, and the Euler identity
        from hodgelap._kernels import exact_rank

        for name, k in full_corpus.items():
            profile = betti(k)
            for j in range(-1, k.dim + 1):
                mat = coboundary_matrix(k, j).matrix.toarray()
                float_rank = np.linalg.matrix_rank(mat.astype(float)) if mat.size else 0
                assert exact_rank(mat) == float_rank, (name, j)
            chi_c, chi_b = profile.euler_characteristics()
            assert chi_c == chi_b, name


def test_criterion_8_cli_verify_all(capsys):
    with criterion(8, "CLI `verify --suite all` exits 0 in under 5 minutes"):
        start = time.monotonic()
        code = cli_main(["verify", "--suite", "all"])
        elapsed = time.monotonic() - start
        captured = capsys.readouterr()
        assert code == 0, captured.err[-2000:]
        assert elapsed < 300.0, f"verify took {elapsed:.1f}s"
        lines = captured.out.strip().splitlines()
        assert len(lines) > 2000  # the corpus is genuinely exercised
