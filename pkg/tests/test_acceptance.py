"""Acceptance criteria 1-11, each at its stated tolerance.

Run alone with ``pytest tests/test_acceptance.py -v``; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""
import time

import numpy as np
import pytest

from acceptance_log import record
from wulffkit.cli import run
from wulffkit.euclid_convex import hausdorff_distance
from wulffkit.fixtures import diamond_support, min_counterexample, random_support_integrand, square_support
from wulffkit.integrand import Constant, is_convex_integrand, pointwise_max, pointwise_min
from wulffkit.sphere_core import NORTH, sphere_points, spherical_blowup
from wulffkit.spherical_convex import (
    FiniteSphereSet,
    polar_generators,
    polar_membership,
    random_cap_points,
    random_sphere_points,
    verify_double_polar,
    verify_maehara,
)
from wulffkit.wulff import (
    tol_geom,
    verify_corollary,
    verify_dual_boundary,
    verify_section4,
    verify_theorem1,
    wulff_direct,
    wulff_spherical,
)

pytestmark = pytest.mark.acceptance

K = 1440
SEED = 20240601


def _pairs():
    rng = np.random.default_rng(SEED)
    pairs = [("square/diamond", *min_counterexample())]
    for i in range(20):
        pairs.append((f"random-{i}", random_support_integrand(rng), random_support_integrand(rng)))
    return pairs


@pytest.fixture(scope="module")
def pairs():
    return _pairs()


@pytest.fixture(scope="module")
def theorem1_reports(pairs):
    out = []
    for name, g1, g2 in pairs:
        start = time.perf_counter()
        rep = verify_theorem1(g1, g2, K)
        out.append((name, rep, time.perf_counter() - start))
    return out


def test_criterion_01_max_is_hull_of_union(theorem1_reports):
    ratios = [rep.value("hausdorff_max_vs_hull_of_union") / rep.tolerance for _, rep, _ in theorem1_reports]
    slowest = max(t for _, _, t in theorem1_reports)
    ok = max(ratios) <= 1.0 and slowest < 1.0
    record(1, "W(max) = conv(W1 u W2)", ok,
           f"21 pairs, worst d/tol = {max(ratios):.2e}, slowest pair {slowest:.2f}s")
    assert ok


def test_criterion_02_min_is_intersection(theorem1_reports):
    ratios = [rep.value("hausdorff_min_vs_intersection") / rep.tolerance for _, rep, _ in theorem1_reports]
    ok = max(ratios) <= 1.0
    record(2, "W(min) = W1 n W2", ok, f"21 pairs, worst d/tol = {max(ratios):.2e}")
    assert ok


def test_criterion_03_max_convex_min_not(pairs):
    max_ok = [is_convex_integrand(pointwise_max(g1, g2), K).is_convex for _, g1, g2 in pairs]
    res_min = is_convex_integrand(pointwise_min(*min_counterexample()), K)
    ok = all(max_ok) and not res_min.is_convex and res_min.worst_violation > 1e-3
    record(3, "gamma_max convex, gamma_min counterexample", ok,
           f"{sum(max_ok)}/21 max convex; min worst_violation = {res_min.worst_violation:.3e}")
    assert ok


def test_criterion_04_direct_equals_spherical():
    rng = np.random.default_rng(SEED + 4)
    ratios = []
    for _ in range(25):
        g = random_support_integrand(rng)
        a, b = wulff_direct(g, 720).shape, wulff_spherical(g, 720).shape
        ratios.append(hausdorff_distance(a, b) / a.diameter())
    ok = max(ratios) <= 1e-9
    record(4, "direct vs spherical pipeline", ok, f"25 integrands, worst d/diam = {max(ratios):.2e}")
    assert ok


def test_criterion_05_dual_boundary():
    rng = np.random.default_rng(SEED + 5)
    gs = [Constant(1.0), square_support()] + [random_support_integrand(rng) for _ in range(10)]
    reports = [verify_dual_boundary(g, K) for g in gs]
    worst = max(r.value("max_distance_to_dual_boundary") for r in reports)
    ok = all(r.passed for r in reports)
    record(5, "dual boundary = inverted graph", ok,
           f"{sum(r.passed for r in reports)}/12 pass, worst distance {worst:.2e} (tol {tol_geom(K):.2e})")
    assert ok


@pytest.fixture(scope="module")
def dual_identity_reports(pairs):
    return [verify_section4(g1, g2, K) for _, g1, g2 in pairs]


def test_criterion_06_dual_identities_and_inclusion(dual_identity_reports):
    identities = all(r.passed for r in dual_identity_reports)
    worst = max(max(v for _, v in r.measured) / r.tolerance for r in dual_identity_reports)
    incl = [r.details["inclusion_min_in_dual_of_max"] for r in dual_identity_reports]
    holds = sum(i["holds"] for i in incl)
    ok = identities and holds == len(incl)
    record(6, "dual-side identities and W(min) in D(W(max))", ok,
           f"identities {'hold' if identities else 'fail'} (worst d/tol {worst:.2e}); "
           f"inclusion holds on {holds}/21, worst violation {max(i['violation'] for i in incl):.3e}")
    assert identities
    assert holds == len(incl), "W(min) is not contained in D(W(max)) at tol 1e-6"


def test_criterion_07_corollary(tmp_path):
    disk = verify_corollary(Constant(1.0), Constant(1.0), K)
    sq = verify_corollary(square_support(), diamond_support(1.0), K)
    code = run(["verify", "corollary", "--gamma1", "const 1", "--gamma2", "const 2", "-K", str(K),
                "--report", str(tmp_path / "r.json")])
    ok = disk.passed and sq.passed and code == 2
    record(7, "dual pair: W(max) = D(W(min))", ok,
           f"disk d = {disk.value('hausdorff_max_vs_dual_of_min'):.2e}, "
           f"square/cross d = {sq.value('hausdorff_max_vs_dual_of_min'):.2e}, non-dual pair exit {code}")
    assert ok


def _random_sets(seed):
    rng = np.random.default_rng(seed)
    return [FiniteSphereSet(random_cap_points(int(rng.integers(3, 13)), rng.uniform(0.2, 1.4), rng))
            for _ in range(10)]


def test_criterion_08_maehara():
    reports = [verify_maehara(W, 10_000, seed=i) for i, W in enumerate(_random_sets(SEED + 8))]
    total = sum(r.mismatches for r in reports)
    ok = total == 0
    record(8, "Maehara lemma", ok, f"10 sets x 10^4 samples, {total} mismatches")
    assert ok


def test_criterion_09_double_polar():
    sets = _random_sets(SEED + 9)
    reports = [verify_double_polar(W, 10_000, seed=i) for i, W in enumerate(sets)]
    mism = sum(r.mismatches for r in reports)
    outside = sum(r.value("generators_outside_double_polar") for r in reports)
    rng = np.random.default_rng(SEED + 90)
    reversal = 0
    for W2 in sets:
        W1 = W2.points[: max(1, len(W2) // 2)]
        Q = random_sphere_points(10_000, rng)
        reversal += int(np.sum(polar_membership(W2, Q) & ~polar_membership(W1, Q)))
    in_double = sum(int(np.sum(W.points @ polar_generators(W).points.T < -1e-12)) for W in sets)
    ok = mism == 0 and outside == 0 and reversal == 0 and in_double == 0
    record(9, "s-conv W = W°° and polar lemmas", ok,
           f"{mism} mismatches, {reversal} reversal violations, {outside + in_double} W-outside-W°° violations")
    assert ok


def test_criterion_10_blowup_contract():
    rng = np.random.default_rng(SEED + 10)
    P = sphere_points(rng.normal(size=(10_000, 3)))
    P = P[np.abs(P[:, 2]) < 1 - 1e-6]
    Q = spherical_blowup(P)
    m = np.cross(NORTH, P)
    m /= np.linalg.norm(m, axis=1, keepdims=True)
    errs = {
        "orthogonal": np.abs(np.einsum("ij,ij->i", P, Q)).max(),
        "in span": np.abs(np.einsum("ij,ij->i", m, Q)).max(),
        "unit": np.abs(np.linalg.norm(Q, axis=1) - 1).max(),
    }
    positive = bool(Q[:, 2].min() > 0)

    def upper(n):
        X = sphere_points(rng.normal(size=(n, 3)))
        X[:, 2] = np.abs(X[:, 2])
        return X[(X[:, 2] > 1e-9) & (X[:, 2] < 1 - 1e-9)]

    A, B = upper(10_000), upper(10_000)
    n = min(len(A), len(B))
    A, B = A[:n], B[:n]
    far = np.linalg.norm(A - B, axis=1) > 1e-6
    collisions = int(np.sum(np.linalg.norm(spherical_blowup(A[far]) - spherical_blowup(B[far]), axis=1) == 0.0))
    ok = max(errs.values()) <= 1e-12 and positive and collisions == 0
    record(10, "blow-up properties", ok,
           ", ".join(f"{k} {v:.1e}" for k, v in errs.items()) + f", N-component > 0: {positive}, {collisions} collisions")
    assert ok


def test_criterion_11_disk_discretization():
    w = wulff_direct(Constant(1.0), 720).shape
    _, offsets = w.edges()
    # the polygon contains the unit disk, so the distance is attained at a vertex
    d = float(np.max(np.linalg.norm(w.vertices, axis=1))) - 1.0
    expected = 1 / np.cos(np.pi / 720) - 1
    ok = offsets.min() >= 1 - 1e-12 and abs(d - expected) <= 1e-9
    record(11, "unit disk discretization", ok, f"d = {d:.6e}, closed form {expected:.6e}")
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
