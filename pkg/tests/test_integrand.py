import numpy as np
import pytest

from oracles import support
from wulffkit.exceptions import IntegrandError, NotPositive
from wulffkit.fixtures import CROSS, SQUARE, diamond_support, min_counterexample, random_support_integrand, square_support
from wulffkit.integrand import (
    POSITIVITY_SAMPLES,
    Abs,
    BinOp,
    Constant,
    Expression,
    Max,
    Num,
    Samples,
    SupportPolygon,
    Trig,
    graph_points,
    inverted_graph_points,
    is_convex_integrand,
    pointwise_max,
    pointwise_min,
    uniform_angles,
)

THETA = uniform_angles(POSITIVITY_SAMPLES)


def test_evaluate_examples():
    assert Constant(1)(1.234) == 1.0
    assert square_support()(0.0) == pytest.approx(max(np.asarray(SQUARE) @ (1.0, 0.0)))
    assert Max(Constant(1), Constant(2))(0.7) == 2.0


def test_support_polygon_matches_brute_force(rng):
    for _ in range(10):
        g = random_support_integrand(rng)
        t = rng.uniform(0, 2 * np.pi, 200)
        np.testing.assert_allclose(g(t), support(g.polygon.vertices, t), rtol=0, atol=1e-15)


def test_support_polygon_from_points_takes_hull():
    g = SupportPolygon(list(SQUARE) + [(0.1, 0.2)])
    assert len(g.polygon) == 4


def test_lattice_examples():
    assert np.all(pointwise_max(Constant(1), Constant(2))(THETA) == 2.0)
    assert np.all(pointwise_min(Constant(1), Constant(2))(THETA) == 1.0)
    s, d = min_counterexample()
    assert pointwise_max(s, d)(0.0) == pytest.approx(1.2)
    assert pointwise_min(s, d)(0.0) == pytest.approx(1.0)
    g = Expression(BinOp("+", Num(1.5), BinOp("*", Num(0.3), Trig("cos", 3))))
    assert np.array_equal(pointwise_max(g, g)(THETA), g(THETA))
    assert np.array_equal(pointwise_min(g, g)(THETA), g(THETA))


def test_lattice_order(rng):
    for _ in range(20):
        g1, g2 = random_support_integrand(rng), random_support_integrand(rng)
        hi, lo = pointwise_max(g1, g2)(THETA), pointwise_min(g1, g2)(THETA)
        assert np.all(hi >= g1(THETA)) and np.all(hi >= g2(THETA))
        assert np.all(lo <= g1(THETA)) and np.all(lo <= g2(THETA))


def test_positivity_of_constructed_integrands(rng):
    gs = [Constant(0.5), square_support(), diamond_support()]
    gs += [random_support_integrand(rng) for _ in range(10)]
    gs += [pointwise_min(gs[1], gs[2]), pointwise_max(gs[3], gs[4])]
    for g in gs:
        assert np.all(g(THETA) > 0)


@pytest.mark.parametrize("value", [0.0, -1.0, np.nan])
def test_constant_rejects_non_positive(value):
    with pytest.raises(NotPositive):
        Constant(value)


def test_expression_rejects_sign_change():
    with pytest.raises(NotPositive) as info:
        Expression(BinOp("-", Num(0.5), Trig("cos", 1)))
    # first failing grid angle is theta = 0 where 0.5 - cos(0) < 0
    assert info.value.angle == 0.0


def test_support_polygon_requires_interior_origin():
    with pytest.raises(NotPositive):
        SupportPolygon([(0.5, 0.5), (2, 0.5), (1, 2)])


class TestSamples:
    table = np.column_stack([uniform_angles(8), [1, 2, 1, 2, 1, 2, 1, 2]])

    def test_interpolates_periodically(self):
        g = Samples(self.table)
        assert g(np.pi / 8) == pytest.approx(1.5)
        # wrap-around segment between the last node and 2*pi
        assert g(2 * np.pi - np.pi / 8) == pytest.approx(1.5)
        assert g(2 * np.pi) == pytest.approx(1.0)
        np.testing.assert_array_equal(g.kink_angles(), self.table[:, 0])

    @pytest.mark.parametrize("table", [
        np.column_stack([uniform_angles(7), np.ones(7)]),
        np.column_stack([uniform_angles(8)[::-1], np.ones(8)]),
        np.column_stack([uniform_angles(8) + 1.0, np.ones(8)]),
    ])
    def test_rejects_bad_tables(self, table):
        with pytest.raises(IntegrandError):
            Samples(table)

    def test_from_file(self, tmp_path):
        f = tmp_path / "s.txt"
        lines = ["# angle value"] + [f"{float(a)!r} {float(v)!r}" for a, v in self.table] + [""]
        f.write_text("\n".join(lines))
        g = Samples.from_file(f)
        np.testing.assert_array_equal(g.angles, self.table[:, 0])

    def test_from_file_bad_line(self, tmp_path):
        f = tmp_path / "s.txt"
        f.write_text("0.0 1.0 3.0\n")
        with pytest.raises(IntegrandError):
            Samples.from_file(f)


def test_crossings_are_kinks():
    s, d = min_counterexample()
    kinks = pointwise_max(s, d).kink_angles()
    # support functions cross where cos t + sin t = 1.2 max(cos t, sin t) in the first quadrant
    t0 = np.arctan(0.2)
    assert np.min(np.abs(kinks - t0)) <= 1e-12
    assert np.min(np.abs(kinks - (np.pi / 2 - t0))) <= 1e-12


def test_graph_points():
    np.testing.assert_allclose(graph_points(Constant(1), 4), [(1, 0), (0, 1), (-1, 0), (0, -1)], atol=1e-15)
    np.testing.assert_allclose(graph_points(square_support(), 4), [(1, 0), (0, 1), (-1, 0), (0, -1)], atol=1e-15)
    with pytest.raises(ValueError):
        graph_points(Constant(2), 2)


def test_inverted_graph_points():
    np.testing.assert_allclose(inverted_graph_points(Constant(1), 4), [(-1, 0), (0, -1), (1, 0), (0, 1)], atol=1e-15)
    np.testing.assert_allclose(
        inverted_graph_points(Constant(2), 4), [(-0.5, 0), (0, -0.5), (0.5, 0), (0, 0.5)], atol=1e-15
    )
    np.testing.assert_allclose(inverted_graph_points(square_support(), 8)[1], (-0.5, -0.5), atol=1e-15)


class TestConvexIntegrand:
    def test_constant(self):
        for c in (0.3, 1.0, 7.0):
            assert is_convex_integrand(Constant(c), 256).is_convex

    def test_square_support_with_hull_brute_force(self):
        res = is_convex_integrand(square_support(), 512, 1e-9)
        assert res.is_convex
        # inverted points trace the diamond |x| + |y| = 1
        pts = inverted_graph_points(square_support(), 512)
        np.testing.assert_allclose(np.abs(pts).sum(axis=1), 1.0, atol=1e-12)

    def test_min_counterexample(self):
        res = is_convex_integrand(pointwise_min(*min_counterexample()), 512, 1e-6)
        assert not res.is_convex
        assert res.worst_violation > 1e-3
        # the dent sits at a crossing of the two support functions, off the axes
        assert 0.0 < res.witness % (np.pi / 2) < np.pi / 2

    def test_oscillatory_expression_fails(self):
        g = Expression(BinOp("+", Num(1), BinOp("*", Num(0.9), Trig("cos", 5))))
        assert not is_convex_integrand(g, 720).is_convex

    def test_min_resolution(self):
        with pytest.raises(ValueError):
            is_convex_integrand(Constant(1), 32)

    def test_gamma_max_convex_on_random_pairs(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            g1, g2 = random_support_integrand(rng), random_support_integrand(rng)
            res = is_convex_integrand(pointwise_max(g1, g2), 720, 1e-7)
            assert res.is_convex, res


def test_describe_and_ast_strings():
    g = Expression(BinOp("max", Abs(Trig("sin", 2)), Num(0.5)))
    assert str(g) == "expr max(abs(sin(2t)), 0.5)"
    assert square_support().describe().startswith("poly [")
    assert pointwise_min(Constant(1), Constant(2)).describe() == "min(const 1.0, const 2.0)"


def test_support_polygon_diamond_values():
    d = diamond_support(1.2)
    np.testing.assert_allclose(d(THETA), support(1.2 * np.asarray(CROSS), THETA), atol=1e-15)


def test_samples_file_bad_number(tmp_path):
    f = tmp_path / "s.txt"
    f.write_text("0.0 one\n")
    with pytest.raises(IntegrandError, match=":1:"):
        Samples.from_file(f)
