"""Pin the sectional Milnor numbers stored in the catalog, and the local
structure of the cone fixtures, with the exact brute-force oracle."""

from fractions import Fraction

import pytest
import sympy

from localmu import generic_section_milnor, local_milnor, section_milnor
from polardeg.poly import parse


class TestPlaneCurveGerms:
    def test_node(self):
        assert local_milnor(parse("x0^2 - x1^2", 2)) == 1

    def test_cusp(self):
        assert local_milnor(parse("x1^2 - x0^3", 2)) == 2

    def test_tacnode(self):
        assert local_milnor(parse("x1^2 - x0^4", 2)) == 3

    def test_ordinary_triple_point(self):
        assert local_milnor(parse("x0^3 - x0*x1^2", 2)) == 4

    def test_brieskorn(self):
        assert local_milnor(parse("x0^3 + x1^4", 2)) == 6

    def test_nonisolated_rejected(self):
        with pytest.raises(ValueError, match="stabilize"):
            local_milnor(parse("x0^2", 2), max_order=10)


class TestGenericPlaneSections:
    """Milnor numbers of generic plane sections through simple surface
    singularities; these are the mu_section values in the catalog."""

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_a_series_sections_are_nodes(self, k):
        assert generic_section_milnor(parse(f"x0^{k+1} + x1^2 + x2^2", 3)) == 1

    def test_d4_section_is_cusp(self):
        assert generic_section_milnor(parse("x0^3 - x0*x1^2 + x2^2", 3)) == 2

    def test_d5_section_is_cusp(self):
        assert generic_section_milnor(parse("x0^4 + x0*x1^2 + x2^2", 3)) == 2

    def test_e6_section_is_cusp(self):
        assert generic_section_milnor(parse("x0^3 + x1^4 + x2^2", 3)) == 2

    def test_cone_over_smooth_cubic_section(self):
        # three concurrent lines: an ordinary triple point
        assert generic_section_milnor(parse("x0^3 + x1^3 + x2^3", 3)) == 4

    def test_line_special_point_section(self):
        # germ at the degenerate points of the nodal-line cubic surface
        assert generic_section_milnor(parse("x0^2 + x1^2*x2", 3)) == 2

    def test_birational_cubic_special_point_section(self):
        # germ of the one-special-point cubic at its special point
        assert generic_section_milnor(parse("x0^2 + x0*x1*x2 + x1^3", 3)) == 2

    def test_two_independent_slopes_agree(self):
        h = parse("x0^3 + x1^4 + x2^2", 3)
        assert section_milnor(h, Fraction(1, 2), Fraction(1, 3)) == section_milnor(
            h, Fraction(-2, 5), Fraction(3, 7)
        )


class TestConeFixtureBaseCurves:
    """The cone entries are built over plane cubics claimed to have exactly
    one node (resp. one cusp); check both the local type and uniqueness."""

    NODAL = "x2^2*x3 - x1^3 - x1^2*x3"
    CUSPIDAL = "x2^2*x3 - x1^3"

    @staticmethod
    def _projective_singular_points(text: str):
        x1, x2, x3 = sympy.symbols("x1 x2 x3")
        g = sympy.sympify(text.replace("^", "**"))
        partials = [sympy.diff(g, v) for v in (x1, x2, x3)]
        found = set()
        # chart x3 = 1
        for sol in sympy.solve([p.subs(x3, 1) for p in partials], [x1, x2], dict=True):
            found.add((sympy.nsimplify(sol[x1]), sympy.nsimplify(sol[x2]), 1))
        # chart x3 = 0, x2 = 1
        for sol in sympy.solve([p.subs({x3: 0, x2: 1}) for p in partials], [x1], dict=True):
            found.add((sol[x1], 1, 0))
        # remaining point [1:0:0]
        if all(p.subs({x1: 1, x2: 0, x3: 0}) == 0 for p in partials):
            found.add((1, 0, 0))
        return found

    def test_nodal_cubic_has_single_node(self):
        assert self._projective_singular_points(self.NODAL) == {(0, 0, 1)}
        germ = parse(self.NODAL, 4).eliminate(3, 1).eliminate(0, 0)
        assert local_milnor(germ) == 1

    def test_cuspidal_cubic_has_single_cusp(self):
        assert self._projective_singular_points(self.CUSPIDAL) == {(0, 0, 1)}
        germ = parse(self.CUSPIDAL, 4).eliminate(3, 1).eliminate(0, 0)
        assert local_milnor(germ) == 2
