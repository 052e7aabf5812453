import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polardeg.poly import (
    ParseError,
    Polynomial,
    deform,
    evaluate_complex,
    parse,
    substitute_affine_chart,
)


def poly_from_random(rng: random.Random, nvars: int, max_terms: int = 6, max_exp: int = 3) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        terms[exps] = terms.get(exps, Fraction(0)) + Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return Polynomial(terms, nvars)


@st.composite
def polynomials(draw, nvars=None, max_terms=5, max_exp=3):
    m = nvars if nvars is not None else draw(st.integers(1, 4))
    n_terms = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n_terms):
        exps = tuple(draw(st.integers(0, max_exp)) for _ in range(m))
        coeff = Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 4)))
        terms[exps] = terms.get(exps, Fraction(0)) + coeff
    return Polynomial(terms, m)


@st.composite
def poly_triples(draw):
    m = draw(st.integers(1, 3))
    return tuple(draw(polynomials(nvars=m, max_terms=4, max_exp=2)) for _ in range(3))


@st.composite
def homogeneous_polynomials(draw):
    m = draw(st.integers(2, 4))
    d = draw(st.integers(1, 4))
    terms = {}
    for _ in range(draw(st.integers(1, 5))):
        exps = []
        remaining = d
        for _ in range(m - 1):
            e = draw(st.integers(0, remaining))
            exps.append(e)
            remaining -= e
        exps.append(remaining)
        coeff = Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 3)))
        terms[tuple(exps)] = terms.get(tuple(exps), Fraction(0)) + coeff
    return Polynomial(terms, m), d


class TestParse:
    def test_paper_style_example(self):
        f = parse("x0^2*x2 + x1^2*x3", 4)
        assert len(f) == 2
        assert f.degree() == 3
        assert f.is_homogeneous()

    def test_aliases_normalize(self):
        assert parse("x^2*z + y^2*w", 4) == parse("x0^2*x2 + x1^2*x3", 4)
        assert parse("t^3", 5) == parse("x4^3", 5)

    def test_zero(self):
        z = parse("0", 3)
        assert z.is_zero()
        assert z.degree() == 0
        assert str(z) == "0"

    def test_rationals_and_signs(self):
        f = parse("1/2*x0^2 - 3/4*x1 + 2", 2)
        assert f.terms[(2, 0)] == Fraction(1, 2)
        assert f.terms[(0, 1)] == Fraction(-3, 4)
        assert f.terms[(0, 0)] == 2

    def test_leading_minus(self):
        assert parse("-x0^2", 1) == -parse("x0^2", 1)
        assert parse("-2*x0 + x0", 1) == -parse("x0", 1)

    def test_signed_factor(self):
        assert parse("x0*-3", 1) == parse("-3*x0", 1)

    def test_syntax_error_position(self):
        with pytest.raises(ParseError) as err:
            parse("x0 + @", 2)
        assert err.value.position == 5

    def test_variable_out_of_range(self):
        with pytest.raises(ParseError, match="out of range"):
            parse("x5", 3)
        with pytest.raises(ParseError, match="out of range"):
            parse("w", 3)

    def test_zero_denominator(self):
        with pytest.raises(ParseError, match="denominator"):
            parse("1/0", 2)

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse("x0 x1", 2)

    def test_roundtrip_100_random(self):
        rng = random.Random(1234)
        for _ in range(100):
            m = rng.randint(1, 5)
            f = poly_from_random(rng, m)
            assert parse(str(f), m) == f

    @given(polynomials())
    def test_roundtrip_property(self, f):
        assert parse(str(f), f.nvars) == f


class TestPrinting:
    def test_graded_lex_order(self):
        f = parse("x1 + x0 + x0*x1 + 1", 2)
        assert str(f) == "x0*x1 + x0 + x1 + 1"

    def test_unit_coefficients_suppressed(self):
        assert str(parse("1*x0^1", 2)) == "x0"
        assert str(parse("-1*x0", 2)) == "-x0"
        assert str(parse("-1", 2)) == "-1"


class TestArithmetic:
    @settings(deadline=None)
    @given(poly_triples())
    def test_ring_distributivity(self, triple):
        f, g, h = triple
        assert (f + g) * h == f * h + g * h

    @settings(deadline=None)
    @given(poly_triples())
    def test_leibniz_rule(self, triple):
        f, g, _ = triple
        for i in range(f.nvars):
            assert (f * g).diff(i) == f.diff(i) * g + f * g.diff(i)

    @settings(deadline=None)
    @given(homogeneous_polynomials())
    def test_euler_relation(self, poly_and_degree):
        f, d = poly_and_degree
        total = Polynomial.zero(f.nvars)
        for i in range(f.nvars):
            total = total + Polynomial.variable(i, f.nvars) * f.diff(i)
        assert total == f * f.degree() if not f.is_zero() else total.is_zero()

    def test_euler_seeded_50(self):
        rng = random.Random(99)
        checked = 0
        while checked < 50:
            m = rng.randint(2, 4)
            d = rng.randint(1, 4)
            terms = {}
            for _ in range(rng.randint(1, 5)):
                exps = []
                remaining = d
                for _ in range(m - 1):
                    e = rng.randint(0, remaining)
                    exps.append(e)
                    remaining -= e
                exps.append(remaining)
                terms[tuple(exps)] = terms.get(tuple(exps), Fraction(0)) + Fraction(rng.randint(-9, 9))
            f = Polynomial(terms, m)
            if f.is_zero():
                continue
            total = Polynomial.zero(m)
            for i in range(m):
                total = total + Polynomial.variable(i, m) * f.diff(i)
            assert total == f * d
            checked += 1

    def test_no_zero_coefficients_stored(self):
        f = parse("x0 + x1", 2) - parse("x1", 2)
        assert all(c != 0 for c in f.terms.values())
        assert (f - f).is_zero()

    def test_power(self):
        l = parse("x0 + x1", 2)
        assert l**3 == l * l * l
        assert l**0 == Polynomial.constant(1, 2)

    def test_nvars_mismatch(self):
        with pytest.raises(ValueError, match="mismatch"):
            parse("x0", 2) + parse("x0", 3)


class TestDegreesAndGradient:
    def test_degree_homogeneous_example(self):
        f = parse("x0^2*x2 + x1^2*x3", 4)
        assert f.degree() == 3 and f.is_homogeneous()

    def test_not_homogeneous(self):
        f = parse("x0^2 + x1", 2)
        assert f.degree() == 2 and not f.is_homogeneous()

    def test_gradient_fermat(self):
        f = parse("x0^3+x1^3+x2^3+x3^3", 4)
        assert [str(g) for g in f.gradient()] == ["3*x0^2", "3*x1^2", "3*x2^2", "3*x3^2"]

    def test_gradient_two_term(self):
        f = parse("x0^2*x2+x1^2*x3", 4)
        assert [str(g) for g in f.gradient()] == ["2*x0*x2", "2*x1*x3", "x0^2", "x1^2"]

    def test_gradient_constant(self):
        assert all(g.is_zero() for g in Polynomial.constant(5, 3).gradient())


class TestSubstitution:
    def test_index_chart(self):
        f = parse("x0^2*x2 + x1^2*x3", 4)
        # x0 = 1, survivors renumbered x1,x2,x3 -> x0,x1,x2
        assert substitute_affine_chart(f, 0) == parse("x1 + x0^2*x2", 3)

    def test_linear_form_chart(self):
        f = parse("x0^2", 2)
        chart = parse("2*x0", 2)
        # 2*x0 = 1 means x0 = 1/2
        assert substitute_affine_chart(f, chart) == Polynomial.constant(Fraction(1, 4), 1)

    def test_linear_chart_matches_index_chart(self):
        f = parse("x0^2*x2 + x1^2*x3", 4)
        assert substitute_affine_chart(f, parse("x0", 4)) == substitute_affine_chart(f, 0)

    def test_chart_rejects_nonlinear(self):
        with pytest.raises(ValueError):
            substitute_affine_chart(parse("x0^2", 2), parse("x0^2", 2))

    def test_deform_examples(self):
        f = parse("x0^2*x2 + x1^2*x3", 4)
        l = parse("x0+x1+x2+x3", 4)
        g = deform(f, l, 3, 1)
        assert g.is_homogeneous() and g.degree() == 3
        assert g == f + l**3
        assert deform(f, l, 3, 0) == f

    def test_deform_degree_mismatch(self):
        f = parse("x0^2*x2 + x1^2*x3", 4)
        with pytest.raises(ValueError, match="degree mismatch"):
            deform(f, parse("x0", 4), 2, 1)

    def test_deform_rejects_nonhomogeneous(self):
        with pytest.raises(ValueError):
            deform(parse("x0^2 + x1", 2), parse("x0", 2), 2, 1)


class TestEvaluation:
    def test_square(self):
        f = parse("x0^2", 1)
        assert f.evaluate([2 + 0j]) == 4 + 0j

    def test_jacobian_diag(self):
        f0, f1 = parse("x0^2 - 1", 2), parse("x1^2 - 1", 2)
        grads = [[p.diff(j).evaluate([1 + 0j, 1 + 0j]) for j in range(2)] for p in (f0, f1)]
        assert grads == [[2, 0], [0, 2]]

    def test_exact_matches_complex_at_rational_points(self):
        rng = random.Random(4321)
        for _ in range(50):
            m = rng.randint(1, 4)
            f = poly_from_random(rng, m)
            point = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(m)]
            exact = f.evaluate(point)
            approx = evaluate_complex(f, [complex(v) for v in point])
            assert abs(approx - complex(exact)) <= 1e-12 * max(1.0, abs(complex(exact)))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            parse("x0", 2).evaluate([1.0])

    def test_compose_is_substitution(self):
        f = parse("x0^2 + x1", 2)
        g0 = parse("x0 + x1", 2)
        g1 = parse("x0*x1", 2)
        composed = f.compose([g0, g1])
        assert composed == g0 * g0 + g1
