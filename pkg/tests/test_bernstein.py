import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hankelcert.bernstein import (
    BivariatePoly,
    CornerCertificateError,
    P,
    Rectangle,
    X,
    affine_restrict,
    bernstein_patch,
    bernstein_range,
    certify_upper_bound,
    corner_certificate,
    degree_abs_sums,
    monomial_tail_bound,
    to_bernstein,
)
from hankelcert.pipelines import h3_surfaces

from oracles import bernstein_by_interpolation

SURF = h3_surfaces()
G1 = SURF["G1"].poly
G2 = SURF["G2"].poly
HALF, QUARTER = F(1, 2), F(1, 4)

G2_MATRIX = [
    [0, 144, 288, 316, 112],
    [0, 148, F(904, 3), 340, 112],
    [F(48, 5), F(712, 5), F(4298, 15), F(1022, 3), F(2188, 15)],
    [F(168, 5), F(666, 5), F(1234, 5), F(1566, 5), F(1068, 5)],
    [F(336, 5), F(1271, 10), F(2917, 15), F(7639, 30), F(802, 3)],
    [80, F(215, 2), 127, F(935, 6), F(634, 3)],
    [7, 7, 7, 7, 7],
]

small = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@st.composite
def polys(draw, m=3, n=3):
    return BivariatePoly(tuple(tuple(draw(small) for _ in range(n + 1)) for _ in range(m + 1)))


@st.composite
def rects(draw):
    a = draw(st.fractions(min_value=-2, max_value=2, max_denominator=8))
    c = draw(st.fractions(min_value=-2, max_value=2, max_denominator=8))
    w = draw(st.fractions(min_value=F(1, 8), max_value=2, max_denominator=8))
    h = draw(st.fractions(min_value=F(1, 8), max_value=2, max_denominator=8))
    return Rectangle(a, a + w, c, c + h)


class TestPoly:
    def test_arithmetic(self):
        q = (1 + P) * (1 - P)
        assert q == 1 - P**2
        assert (P + X) ** 2 == P**2 + 2 * P * X + X**2
        assert (P * X)(F(2), F(3)) == 6

    def test_from_terms_and_json(self):
        q = BivariatePoly.from_terms({(2, 1): F(3, 4), (0, 0): -1}, (3, 2))
        assert q.bidegree == (3, 2)
        assert q.true_bidegree() == (2, 1)
        assert BivariatePoly.from_json(q.to_json()) == q
        assert BivariatePoly.from_json(q.to_json()).bidegree == (3, 2)

    def test_from_terms_rejects_excess(self):
        with pytest.raises(ValueError):
            BivariatePoly.from_terms({(3, 0): 1}, (2, 2))

    @pytest.mark.parametrize(
        "obj",
        [{}, {"bidegree": [1, 1], "terms": [{"i": 0, "j": 0, "num": 1, "den": 0}]}, {"bidegree": [-1, 0], "terms": []}],
    )
    def test_json_malformed(self, obj):
        with pytest.raises(ValueError):
            BivariatePoly.from_json(obj)

    def test_float_eval(self):
        assert G1.eval_float(0.3, 0.7) == pytest.approx(float(G1(F(3, 10), F(7, 10))), rel=1e-13)


class TestAffineRestrict:
    def test_scaling(self):
        assert affine_restrict(P, Rectangle(0, HALF, 0, HALF)) == HALF * P

    def test_constant(self):
        assert affine_restrict(BivariatePoly.constant(7), Rectangle(-3, 5, 1, 2)) == 7

    def test_shift(self):
        got = affine_restrict(P**2, Rectangle(HALF, 1, 0, 1))
        assert got == QUARTER + HALF * P + QUARTER * P**2

    @settings(max_examples=30, deadline=None)
    @given(polys(), rects(), st.fractions(0, 1, max_denominator=9), st.fractions(0, 1, max_denominator=9))
    def test_composition(self, q, r, u, v):
        assert affine_restrict(q, r)(u, v) == q(r.a + (r.b - r.a) * u, r.c + (r.d - r.c) * v)
        assert affine_restrict(q, r).bidegree == q.bidegree


class TestToBernstein:
    def test_linear(self):
        assert to_bernstein(P, (1, 0)).coeffs == ((0,), (1,))

    def test_elevation(self):
        assert [row[0] for row in to_bernstein(P**2, (3, 0)).coeffs] == [0, 0, F(1, 3), 1]

    def test_below_degree(self):
        with pytest.raises(ValueError):
            to_bernstein(P**3, (2, 0))

    def test_g2_matrix(self):
        patch = to_bernstein(G2, (6, 4))
        assert [list(r) for r in patch.coeffs] == [[F(c) for c in row] for row in G2_MATRIX]
        assert bernstein_range(patch) == (0, F(1022, 3))

    @settings(max_examples=20, deadline=None)
    @given(polys(2, 3))
    def test_against_interpolation_oracle(self, q):
        got = [list(r) for r in to_bernstein(q, (4, 3)).coeffs]
        assert got == bernstein_by_interpolation(q, 4, 3)

    def test_g1_against_interpolation_oracle(self):
        got = [list(r) for r in to_bernstein(G1, (6, 4)).coeffs]
        assert got == bernstein_by_interpolation(G1, 6, 4)

    def test_constant_range(self):
        assert bernstein_range(bernstein_patch(BivariatePoly.constant(7), Rectangle(0, 1, 2, 3))) == (7, 7)

    @settings(max_examples=25, deadline=None)
    @given(polys(), rects(), st.integers(0, 2**32))
    def test_enclosure(self, q, r, seed):
        lo, hi = bernstein_range(bernstein_patch(q, r))
        rng = random.Random(seed)
        for _ in range(100):
            p = r.a + (r.b - r.a) * F(rng.randint(0, 1000), 1000)
            x = r.c + (r.d - r.c) * F(rng.randint(0, 1000), 1000)
            assert lo <= q(p, x) <= hi

    @settings(max_examples=25, deadline=None)
    @given(polys())
    def test_elevation_tightens(self, q):
        lo0, hi0 = bernstein_range(to_bernstein(q, (3, 3)))
        lo1, hi1 = bernstein_range(to_bernstein(q, (5, 4)))
        assert lo0 <= lo1 and hi1 <= hi0


class TestCertify:
    def test_paper_quadrants(self):
        rep = certify_upper_bound(G1, Rectangle(0, 1, 0, 1), 480, max_depth=2, strategy="paper-quadrants")
        level1 = [n.bernstein_max for n in rep.nodes_at_depth(1)]
        level2 = [n.bernstein_max for n in rep.nodes_at_depth(2)]
        assert level1 == [481, 398, F(75535, 256), F(18463, 64)]
        assert level2 == [F(1921, 4), F(14681, 32), F(13939571, 32768), F(13594541, 32768)]
        q11 = rep.find(Rectangle(0, QUARTER, 0, QUARTER))
        assert q11.status == "failed"
        assert not rep.certified

    def test_paper_quadrants_with_corner(self):
        rep = certify_upper_bound(G1, Rectangle(0, 1, 0, 1), 480, 2, "paper-quadrants", corner_fallback=True)
        assert rep.certified
        q11 = rep.find(Rectangle(0, QUARTER, 0, QUARTER))
        assert (q11.status, q11.corner_margin) == ("certified-by-corner", F(144779, 2048))

    def test_q2_bound(self):
        assert bernstein_range(bernstein_patch(G1, Rectangle(0, HALF, HALF, 1)))[1] == 398

    @pytest.mark.parametrize("strategy", ["paper-quadrants", "bisect-longest", "auto"])
    def test_g2_immediate(self, strategy):
        rep = certify_upper_bound(G2, Rectangle(0, 1, 0, 1), 480, 0, strategy)
        assert rep.certified and rep.root.status == "certified-by-bernstein"

    def test_zero_poly(self):
        assert certify_upper_bound(BivariatePoly.zero(), Rectangle.unit(), 1, 0).certified

    def test_auto_with_corner(self):
        rep = certify_upper_bound(G1, Rectangle.unit(), 480, corner_fallback=True)
        assert rep.certified
        assert any(n.status == "certified-by-corner" for n in rep.root.leaves())

    def test_depth_exhaustion_is_a_verdict(self):
        rep = certify_upper_bound(G1, Rectangle.unit(), 480, max_depth=4)
        assert rep.verdict == "not-certified"
        assert all(n.depth <= 4 for n in rep.root.walk())

    @pytest.mark.parametrize(
        "poly, bound",
        [
            (P * (1 - P) + X * (1 - X), F(51, 100)),  # max 1/2
            (-((P - F(1, 3)) ** 2) - (X - F(2, 3)) ** 2, F(1, 1000)),  # max 0
            (P**3 - X**2 + P * X, F(126, 100)),  # max 5/4 at (1, 1/2)
        ],
    )
    def test_convergence(self, poly, bound):
        assert certify_upper_bound(poly, Rectangle.unit(), bound, max_depth=14).certified

    def test_canonical_order_and_json(self):
        rep = certify_upper_bound(G1, Rectangle.unit(), 480, 2, "paper-quadrants", True)
        d = rep.to_dict()
        assert d["verdict"] == "certified"
        kids = [c["rect"] for c in d["tree"]["children"]]
        assert kids == [["0", "1/2", "0", "1/2"], ["0", "1/2", "1/2", "1"], ["1/2", "1", "0", "1/2"], ["1/2", "1", "1/2", "1"]]

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            certify_upper_bound(G1, Rectangle.unit(), 480, -1)
        with pytest.raises(ValueError):
            certify_upper_bound(G1, Rectangle.unit(), 480, 1, "spiral")
        with pytest.raises(ValueError):
            Rectangle(1, 1, 0, 1)


class TestCorner:
    F_POLY = 480 - G1

    def test_degree_sums_and_tail(self):
        tail = self.F_POLY - self.F_POLY.degree_part(2)
        assert list(degree_abs_sums(tail).items()) == list(
            zip(range(3, 11), [544, 1740, 934, 1279, 826, 588, 256, 96])
        )
        assert monomial_tail_bound(tail, QUARTER) == F(543349, 2048)

    def test_margin(self):
        assert self.F_POLY.degree_part(2) == 960 * P**2 - 96 * P * X + 384 * X**2
        assert corner_certificate(self.F_POLY, QUARTER) == F(144779, 2048)

    def test_simple_tails(self):
        assert monomial_tail_bound(P**3, QUARTER) == QUARTER
        assert monomial_tail_bound(BivariatePoly.zero(), QUARTER) == 0
        with pytest.raises(ValueError):
            monomial_tail_bound(P**2 + P**3, QUARTER)

    def test_simple_certificates(self):
        assert corner_certificate(P**2 + X**2, 1) == 1
        with pytest.raises(CornerCertificateError, match="corner certificate inapplicable"):
            corner_certificate(P**2 + X**2 - 4 * P * X, 1)
        with pytest.raises(CornerCertificateError):
            corner_certificate(P + X**2, 1)

    def test_soundness(self):
        mu = corner_certificate(self.F_POLY, QUARTER)
        for i in range(100):
            for j in range(100):
                p, x = F(i, 396), F(j, 396)
                assert self.F_POLY(p, x) >= mu * (p * p + x * x)
