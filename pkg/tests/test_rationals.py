"""Exact scalar layer: rationals, parameter polynomials, rational functions."""

import random
from fractions import Fraction as F

import pytest

from coupledfut import (
    ComputationError,
    ParamPoly,
    ParseError,
    PoleError,
    RationalFunction,
    UsageError,
    interpolate,
    parse_poly,
    poly_arith,
    poly_divmod,
    poly_gcd,
    poly_text,
    rat,
    rat_text,
    ratfun_eval,
    ratfun_reduce,
    render_factored,
)


def c(text):
    return parse_poly(text, "c")


def rf(num, den="1"):
    return ratfun_reduce(c(num), c(den))


def random_poly(rng, max_degree=4, param="c"):
    degree = rng.randint(0, max_degree)
    coeffs = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(degree + 1)]
    return ParamPoly.create(param, coeffs)


def random_ratfun(rng, num_degree=3, den_degree=2):
    den = ParamPoly.zero("c")
    while den.is_zero():
        den = random_poly(rng, den_degree)
    return ratfun_reduce(random_poly(rng, num_degree), den)


class TestRat:
    def test_builds_from_int_fraction_and_string(self):
        assert rat(3) == F(3)
        assert rat(F(-5, 7)) == F(-5, 7)
        assert rat("-1/2") == F(-1, 2)
        assert rat(" 3/4 ") == F(3, 4)

    def test_accepts_unicode_minus(self):
        assert rat("−1/2") == F(-1, 2)

    @pytest.mark.parametrize("bad", ["1//2", "x", "1/0", ""])
    def test_rejects_malformed_strings(self, bad):
        with pytest.raises(ParseError):
            rat(bad)

    def test_text_round_trip(self):
        rng = random.Random(101)
        for _ in range(200):
            q = F(rng.randint(-400, 400), rng.randint(1, 60))
            assert rat(rat_text(q)) == q
        assert rat_text(F(-1, 2)) == "-1/2"
        assert rat_text(F(4, 2)) == "2"


class TestParamPoly:
    def test_create_trims_trailing_zeros(self):
        p = ParamPoly.create("c", [F(1), F(0), F(0)])
        assert p.degree() == 0
        assert p == ParamPoly.const("c", 1)
        assert ParamPoly.create("c", [0, 0]).is_zero()

    def test_eval_and_derivative(self):
        p = c("112c^2-112c+23")
        assert p.eval(F(1, 2)) == F(-5)
        assert p.derivative() == c("224c-112")
        assert ParamPoly.zero("c").derivative().is_zero()

    def test_monic_and_leading(self):
        p = c("56c-3")
        assert p.leading() == 56
        assert p.monic() == c("c-3/56")

    def test_text_descending_order(self):
        assert poly_text(c("23-112c+112c^2")) == "112c^2-112c+23"
        assert poly_text(ParamPoly.zero("c")) == "0"
        assert poly_text(ParamPoly.const("c", F(-1, 4))) == "-1/4"
        assert poly_text(c("-1/4c+1/10")) == "-1/4c+1/10"


class TestParsePoly:
    def test_parses_affine_and_quadratic_forms(self):
        assert c("2c-1/2") == ParamPoly.create("c", [F(-1, 2), F(2)])
        assert c("(3-2c)/2") == ParamPoly.create("c", [F(3, 2), F(-1)])
        assert c("-c") == ParamPoly.create("c", [0, -1])
        assert c("112c^2-112c+23") == ParamPoly.create("c", [23, -112, 112])

    def test_round_trips_through_text(self):
        rng = random.Random(202)
        for _ in range(200):
            p = random_poly(rng)
            assert parse_poly(poly_text(p), "c") == p

    def test_rejects_unknown_symbols(self):
        with pytest.raises(ParseError, match="unknown symbol 'd'"):
            parse_poly("112d^2", "c")

    def test_rejects_dangling_exponent(self):
        with pytest.raises(ParseError, match="exponent"):
            parse_poly("c^", "c")


class TestPolyArith:
    def test_sum_of_reference_volumes_is_constant(self):
        total = poly_arith(c("112c-6"), c("-112c+106"), "add")
        assert total == ParamPoly.const("c", 100)

    def test_cross_multiplied_numerator(self):
        left = poly_arith(c("-30c+12"), c("-56c+53"), "mul")
        right = poly_arith(c("30c-18"), c("56c-3"), "mul")
        total = poly_arith(left, right, "add")
        assert total == c("3360c^2-3360c+690")
        assert total == poly_arith(c("30"), c("112c^2-112c+23"), "mul")

    def test_mismatched_parameters_are_rejected(self):
        with pytest.raises(UsageError, match="mismatched parameter names"):
            poly_arith(c("c"), parse_poly("t", "t"), "add")

    def test_unknown_operation_is_rejected(self):
        with pytest.raises(UsageError, match="unknown polynomial operation"):
            poly_arith(c("c"), c("c"), "pow")

    def test_ring_axioms_randomized(self):
        rng = random.Random(303)
        for _ in range(120):
            p, q, r = (random_poly(rng) for _ in range(3))
            assert p + q == q + p
            assert (p + q) + r == p + (q + r)
            assert p * q == q * p
            assert (p * q) * r == p * (q * r)
            assert p * (q + r) == p * q + p * r
            assert p + ParamPoly.zero("c") == p
            assert p * ParamPoly.const("c", 1) == p
            assert (p - p).is_zero()


class TestPolyDivmod:
    def test_identity_randomized(self):
        rng = random.Random(404)
        for _ in range(120):
            a = random_poly(rng, 6)
            b = random_poly(rng, 3)
            if b.is_zero():
                continue
            q, r = poly_divmod(a, b)
            assert q * b + r == a
            assert r.is_zero() or r.degree() < b.degree()

    def test_division_by_zero(self):
        with pytest.raises(ComputationError, match="division by zero"):
            poly_divmod(c("c"), ParamPoly.zero("c"))


class TestPolyGcd:
    def test_coprime_reference_pair(self):
        assert poly_gcd(c("112c^2-112c+23"), c("56c-3")) == ParamPoly.const("c", 1)

    def test_common_factor_is_extracted_monic(self):
        assert poly_gcd(c("c^2-1"), c("c-1")) == c("c-1")
        assert poly_gcd(c("2c-2"), c("4c-4")) == c("c-1")

    def test_gcd_with_zero(self):
        assert poly_gcd(ParamPoly.zero("c"), c("3c-3")) == c("c-1")
        with pytest.raises(ComputationError, match="undefined"):
            poly_gcd(ParamPoly.zero("c"), ParamPoly.zero("c"))

    def test_divides_both_randomized(self):
        rng = random.Random(505)
        for _ in range(120):
            a = random_poly(rng, 4)
            b = random_poly(rng, 4)
            if a.is_zero() and b.is_zero():
                continue
            g = poly_gcd(a, b)
            assert g.leading() == 1
            for p in (a, b):
                if not p.is_zero():
                    _, rem = poly_divmod(p, g)
                    assert rem.is_zero()


class TestInterpolate:
    def test_recovers_random_polynomials(self):
        rng = random.Random(606)
        for _ in range(120):
            p = random_poly(rng, 5)
            degree = max(p.degree(), 0)
            xs = []
            while len(xs) < degree + 1:
                x = F(rng.randint(-30, 30), rng.randint(1, 8))
                if x not in xs:
                    xs.append(x)
            assert interpolate("c", [(x, p.eval(x)) for x in xs]) == p

    def test_repeated_abscissa_is_rejected(self):
        with pytest.raises(UsageError, match="repeated abscissa"):
            interpolate("c", [(F(0), F(1)), (F(0), F(2))])

    def test_empty_data_gives_zero(self):
        assert interpolate("c", []).is_zero()


class TestRationalFunction:
    def test_reduction_is_canonical(self):
        p = c("112c^2-112c+23")
        assert ratfun_reduce(p, p) == RationalFunction.const("c", 1)
        assert rf("c^2-1", "c-1") == RationalFunction.from_poly(c("c+1"))
        assert rf("0", "56c-3").is_zero()

    def test_denominator_is_made_monic(self):
        f = rf("1", "2c-1")
        assert f.den == c("c-1/2")
        assert f.num == ParamPoly.const("c", F(1, 2))

    def test_zero_denominator_is_rejected(self):
        with pytest.raises(ComputationError, match="zero denominator"):
            ratfun_reduce(c("1"), ParamPoly.zero("c"))

    def test_factored_rendering_of_reference_ratio(self):
        num = poly_arith(c("30"), c("112c^2-112c+23"), "mul")
        den = poly_arith(poly_arith(c("-2"), c("56c-3"), "mul"), c("56c-53"), "mul")
        f = ratfun_reduce(num, den)
        assert render_factored(f) == "-15(112c^2-112c+23)/((56c-3)(56c-53))"
        assert ratfun_eval(f, F(1, 2)) == F(-3, 25)

    def test_eval_and_poles(self):
        assert ratfun_eval(RationalFunction.from_poly(c("112c-6")), F(1, 2)) == 50
        with pytest.raises(PoleError, match="pole at c = 3/56"):
            ratfun_eval(rf("1", "56c-3"), F(3, 56))

    def test_field_axioms_randomized(self):
        rng = random.Random(707)
        count = 0
        while count < 120:
            f = random_ratfun(rng)
            g = random_ratfun(rng)
            h = random_ratfun(rng)
            count += 1
            assert f + g == g + f
            assert (f + g) + h == f + (g + h)
            assert f * g == g * f
            assert f * (g + h) == f * g + f * h
            assert f - f == RationalFunction.const("c", 0)
            if not g.is_zero():
                assert (f / g) * g == f

    def test_reduction_idempotent_randomized(self):
        rng = random.Random(808)
        for _ in range(120):
            num = random_poly(rng, 4)
            den = random_poly(rng, 3)
            if den.is_zero():
                continue
            f = ratfun_reduce(num, den)
            assert ratfun_reduce(f.num, f.den) == f
            assert f.den.leading() == 1

    def test_eval_is_a_homomorphism_randomized(self):
        rng = random.Random(909)
        checked = 0
        while checked < 120:
            f = random_ratfun(rng)
            g = random_ratfun(rng)
            x = F(rng.randint(-20, 20), rng.randint(1, 7))
            try:
                fx = ratfun_eval(f, x)
                gx = ratfun_eval(g, x)
            except PoleError:
                continue
            checked += 1
            assert ratfun_eval(f + g, x) == fx + gx
            assert ratfun_eval(f * g, x) == fx * gx
