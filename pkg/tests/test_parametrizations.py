from fractions import Fraction as F

import pytest

from hankelcert.functionals import caratheodory_to_schwarz
from hankelcert.parametrizations import (
    CORNER_LEVELS,
    UNIT_PHASES,
    LZParams,
    PSParams,
    corner_tuples,
    lz_expand,
    params_to_json,
    ps_expand,
    random_exact,
    sample_cuboid,
)
from hankelcert.scalar import GaussianRational as G, exact_abs


class TestExpand:
    @pytest.mark.parametrize("g", [F(0), F(1), G(F(3, 5), F(4, 5))])
    def test_lz_top(self, g):
        assert lz_expand(LZParams(2, g, F(1, 2), F(-1))).as_tuple() == (2, 2, 2, 2)

    def test_lz_gamma_one(self):
        assert lz_expand(LZParams(0, 1, 0, 0)).as_tuple() == (0, 2, 0, 2)

    def test_lz_eta_one(self):
        assert lz_expand(LZParams(0, 0, 1, 0)).as_tuple() == (0, 0, 2, 0)

    def test_ps_examples(self):
        assert ps_expand(PSParams(1, G(0, 1), 1, 1)).as_tuple() == (1, 0, 0, 0)
        assert ps_expand(PSParams(0, 1, 0, 0)).as_tuple() == (0, 1, 0, 0)
        assert ps_expand(PSParams(0, 0, 1, 0)).as_tuple() == (0, 0, 1, 0)

    @pytest.mark.parametrize(
        "kwargs",
        [dict(p1=F(5, 2), gamma=0, eta=0, rho=0), dict(p1=1, gamma=G(1, 1), eta=0, rho=0), dict(p1=-1, gamma=0, eta=0, rho=0)],
    )
    def test_lz_out_of_range(self, kwargs):
        with pytest.raises(ValueError):
            LZParams(**kwargs)

    def test_ps_out_of_range(self):
        with pytest.raises(ValueError):
            PSParams(F(3, 2), 0, 0, 0)
        with pytest.raises(ValueError):
            PSParams(0, 0, 1.5j, 0)

    def test_float_params_give_float_output(self):
        c = ps_expand(PSParams(F(1, 2), 0.3 + 0.4j, -0.5j, 1.0))
        assert all(isinstance(x, (complex, float)) for x in c.as_tuple())
        exact = ps_expand(PSParams(F(1, 2), G(F(3, 10), F(2, 5)), G(0, F(-1, 2)), 1))
        for a, b in zip(c.as_tuple(), exact.as_tuple()):
            assert abs(complex(a) - complex(b)) < 1e-12


class TestSampling:
    def test_phases_unimodular(self):
        assert all(u.abs2() == 1 for u in UNIT_PHASES)
        assert len(set(UNIT_PHASES)) == len(UNIT_PHASES)

    @pytest.mark.parametrize("mode", ["lz", "ps"])
    def test_corners_first(self, mode):
        corners = corner_tuples(mode)
        assert len(corners) == 3**4
        got = sample_cuboid(3, 100, mode)
        assert got[:81] == corners
        top = 2 if mode == "lz" else 1
        first = "p1" if mode == "lz" else "c1"
        levels = {(getattr(s, first) / top, exact_abs(s.gamma), exact_abs(s.eta), exact_abs(s.rho)) for s in corners}
        assert levels == {(a, b, c, d) for a in CORNER_LEVELS for b in CORNER_LEVELS for c in CORNER_LEVELS for d in CORNER_LEVELS}
        assert any(getattr(s, first) == 0 and s.gamma == 1 for s in corners)

    def test_single_sample_valid(self):
        (s,) = sample_cuboid(1, 1, "lz")
        assert 0 <= s.p1 <= 2

    def test_determinism(self):
        a = [params_to_json(s) for s in sample_cuboid(42, 400, "ps")]
        b = [params_to_json(s) for s in sample_cuboid(42, 400, "ps")]
        c = [params_to_json(s) for s in sample_cuboid(43, 400, "ps")]
        assert a == b
        assert a != c

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            sample_cuboid(0, 0, "lz")
        with pytest.raises(ValueError):
            sample_cuboid(0, 5, "xx")
        with pytest.raises(ValueError):
            sample_cuboid(0, 5, "lz", "polar")

    def test_lz_bounds_exact(self):
        for s in sample_cuboid(5, 600, "lz", "exact"):
            assert lz_expand(s).within_bounds()

    def test_ps_bounds_exact(self):
        for s in sample_cuboid(6, 600, "ps", "exact"):
            assert ps_expand(s).within_bounds()

    def test_float_bounds(self):
        for s in sample_cuboid(7, 600, "ps", "float")[81:]:
            assert all(abs(complex(c)) <= 1 + 1e-12 for c in ps_expand(s).as_tuple())

    def test_lemmas_agree_on_first_coefficient(self):
        for s in random_exact(8, 200, "lz"):
            assert caratheodory_to_schwarz(lz_expand(s)).c1 == s.p1 / 2

    def test_random_exact_skips_corners(self):
        got = random_exact(9, 10, "lz")
        assert len(got) == 10
        assert all(s.exact for s in got)
        assert got[0] not in corner_tuples("lz")
