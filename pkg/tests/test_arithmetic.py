"""Factorization and multiplicity vectors, checked against direct arithmetic."""

import math

import pytest

from zdgraph.arithmetic import (
    Factorization,
    FpPoly,
    Irreducible,
    factor_integer,
    factor_polynomial,
    format_poly_compact,
    format_poly_pretty,
    gcd_exponents,
    is_prime,
    monic_polys,
    multiplicity_vector,
    parse_poly_compact,
    parse_poly_pretty,
    poly_gcd,
)


def naive_is_prime(n):
    return n >= 2 and all(n % d for d in range(2, n))


class TestIsPrime:
    def test_small_range_against_naive(self):
        for n in range(-3, 500):
            assert is_prime(n) == naive_is_prime(n), n

    def test_known_large(self):
        assert is_prime(9973)
        assert not is_prime(9991)  # 97 * 103


class TestFactorInteger:
    def test_round_trip_dense(self):
        for n in range(2, 3000):
            f = factor_integer(n)
            assert f.value() == n, n
            assert all(is_prime(irr.value) for irr in f.irreducibles()), n
            assert all(e >= 1 for e in f.exponents()), n

    def test_round_trip_sparse_large(self):
        for n in (10**6, 10**9 + 7, 2**20 * 3**5, 999983 * 2, 10**12):
            f = factor_integer(n)
            assert f.value() == n
            assert all(irr.recheck() for irr in f.irreducibles())

    def test_twelve(self):
        f = factor_integer(12)
        assert [(irr.value, e) for irr, e in f.factors] == [(2, 2), (3, 1)]
        assert f.exponents() == (2, 1)

    def test_prime_power(self):
        f = factor_integer(243)
        assert [(irr.value, e) for irr, e in f.factors] == [(3, 5)]

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            factor_integer(1)
        with pytest.raises(ValueError):
            factor_integer(0)
        with pytest.raises(TypeError):
            factor_integer(2.0)


class TestFpPoly:
    def test_canonical_trim_and_reduce(self):
        assert FpPoly(3, (4, 0, 3)) == FpPoly(3, (1,))
        assert FpPoly(2, ()).degree == -1
        assert FpPoly(5, (0, 0, 0)).is_zero

    def test_ring_axioms_exhaustive_f2_deg2(self):
        polys = [FpPoly(2, (a, b, c)) for a in range(2) for b in range(2) for c in range(2)]
        for f in polys:
            for g in polys:
                assert f + g == g + f
                assert f * g == g * f
                for h in polys:
                    assert (f + g) * h == f * h + g * h

    def test_divmod_reconstructs(self):
        for p in (2, 3, 5):
            polys = []
            for d in range(3):
                polys.extend(monic_polys(p, d))
            for f in polys:
                for g in polys:
                    q, r = divmod(f, g)
                    assert q * g + r == f
                    assert r.degree < g.degree

    def test_divmod_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod(FpPoly(2, (1,)), FpPoly(2, ()))

    def test_nonprime_characteristic_rejected(self):
        with pytest.raises(ValueError):
            FpPoly(4, (1,))

    def test_mixed_characteristic_rejected(self):
        with pytest.raises(ValueError):
            FpPoly(2, (1,)) + FpPoly(3, (1,))

    def test_monic(self):
        f = FpPoly(5, (1, 0, 3))
        m = f.monic()
        assert m.leading == 1
        assert m == FpPoly(5, (2, 0, 1))  # 3 * 2 = 6 = 1 mod 5


class TestPolyGcd:
    def test_matches_common_divisor_search(self):
        # gcd over F_2 for all pairs up to degree 3, against a direct search
        p = 2
        polys = []
        for d in range(4):
            polys.extend(monic_polys(p, d))
        for f in polys:
            for g in polys:
                got = poly_gcd(f, g)
                best = None
                for d in range(max(f.degree, g.degree), -1, -1):
                    for cand in monic_polys(p, d):
                        if (f % cand).is_zero and (g % cand).is_zero:
                            best = cand
                            break
                    if best is not None:
                        break
                assert got == best

    def test_zero_cases(self):
        z = FpPoly(3, ())
        f = FpPoly(3, (1, 2))
        assert poly_gcd(z, z).is_zero
        assert poly_gcd(f, z) == f.monic()


class TestFactorPolynomial:
    def brute_irreducible(self, f):
        for d in range(1, f.degree // 2 + 1):
            for cand in monic_polys(f.p, d):
                if (f % cand).is_zero:
                    return False
        return True

    def test_round_trip_all_f2_to_deg4(self):
        for deg in range(1, 5):
            for f in monic_polys(2, deg):
                fact = factor_polynomial(f)
                assert fact.value() == f
                assert all(self.brute_irreducible(irr.value) for irr in fact.irreducibles())

    def test_round_trip_all_f3_to_deg3(self):
        for deg in range(1, 4):
            for f in monic_polys(3, deg):
                fact = factor_polynomial(f)
                assert fact.value() == f
                assert all(self.brute_irreducible(irr.value) for irr in fact.irreducibles())

    def test_round_trip_nonmonic(self):
        f = FpPoly(5, (2, 0, 3))  # 3x^2 + 2
        fact = factor_polynomial(f)
        assert fact.unit == 3
        assert fact.value() == f

    def test_x_squared_plus_x_over_f2(self):
        # x^2 + x = x * (x + 1)
        fact = factor_polynomial(FpPoly(2, (0, 1, 1)))
        assert [(irr.value.coeffs, e) for irr, e in fact.factors] == [
            ((0, 1), 1),
            ((1, 1), 1),
        ]

    def test_x_squared_plus_one_over_f3(self):
        # no roots in F_3: 0^2+1=1, 1^2+1=2, 2^2+1=2; degree 2, so irreducible
        f = FpPoly(3, (1, 0, 1))
        assert all((f % FpPoly(3, (-r, 1))).coeffs for r in range(3))
        fact = factor_polynomial(f)
        assert len(fact.factors) == 1
        assert fact.factors[0] == (Irreducible(f), 1)

    def test_cube_of_x(self):
        fact = factor_polynomial(FpPoly(2, (0, 0, 0, 1)))
        assert [(irr.value.coeffs, e) for irr, e in fact.factors] == [((0, 1), 3)]

    def test_coefficient_sequence_input(self):
        fact = factor_polynomial((0, 1, 1), p=2)
        assert fact.value() == FpPoly(2, (0, 1, 1))

    def test_rejects_constants(self):
        with pytest.raises(ValueError):
            factor_polynomial(FpPoly(2, (1,)))
        with pytest.raises(ValueError):
            factor_polynomial(FpPoly(2, ()))


class TestMultiplicityVector:
    def test_against_gcd_dense(self):
        # for every n <= 300 and every nonzero a < n, the gcd theorem route:
        # prod(p_i ** min(k_i, s_i)) == gcd(a, n)
        for n in range(2, 301):
            fact = factor_integer(n)
            s = fact.exponents()
            for a in range(1, n):
                k, coprime = multiplicity_vector(a, fact)
                assert coprime is True
                clipped = gcd_exponents(k, s)
                assert fact.divisor(clipped) == math.gcd(a, n), (a, n)

    def test_large_fixture(self):
        fact = factor_integer(2**10 * 3**4 * 7)
        k, coprime = multiplicity_vector(2**3 * 3**9 * 5, fact)
        assert k == (3, 9, 0)
        assert coprime

    def test_polynomial_case(self):
        # x^2 + x against x^3 over F_2: exponent of x is 1
        fact = factor_polynomial(FpPoly(2, (0, 0, 0, 1)))
        k, coprime = multiplicity_vector(FpPoly(2, (0, 1, 1)), fact)
        assert k == (1,)
        assert coprime

    def test_polynomial_dense_gcd_agreement(self):
        # same gcd agreement check as the integer case, over F_2 mod x^2(x+1)
        n = FpPoly(2, (0, 1)) * FpPoly(2, (0, 1)) * FpPoly(2, (1, 1))
        fact = factor_polynomial(n)
        s = fact.exponents()
        residues = [FpPoly(2, bits) for bits in __import__("itertools").product(range(2), repeat=3)]
        for a in residues:
            if a.is_zero:
                continue
            k, coprime = multiplicity_vector(a, fact)
            assert coprime
            clipped = gcd_exponents(k, s)
            assert fact.divisor(clipped) == poly_gcd(a, n)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            multiplicity_vector(0, factor_integer(12))
        with pytest.raises(ValueError):
            multiplicity_vector(FpPoly(2, ()), factor_polynomial(FpPoly(2, (0, 0, 1))))


class TestGcdExponents:
    def test_componentwise_min(self):
        assert gcd_exponents((3, 0, 2), (2, 1, 5)) == (2, 0, 2)

    def test_spec_of_lengths(self):
        with pytest.raises(ValueError):
            gcd_exponents((1,), (1, 2))
        with pytest.raises(ValueError):
            gcd_exponents((-1,), (1,))


class TestSerialization:
    def test_compact_round_trip_exhaustive_f3_deg2(self):
        for a in range(3):
            for b in range(3):
                for c in range(3):
                    f = FpPoly(3, (a, b, c))
                    assert parse_poly_compact(format_poly_compact(f)) == f

    def test_compact_zero(self):
        assert format_poly_compact(FpPoly(7, ())) == "0@7"
        assert parse_poly_compact("0@7").is_zero

    def test_compact_rejects_garbage(self):
        for bad in ("1,2", "@3", "1,2@", "1;2@3", "3@3"):
            with pytest.raises(ValueError):
                parse_poly_compact(bad)

    def test_pretty_examples(self):
        assert format_poly_pretty(FpPoly(3, (1, 2, 1))) == "x^2+2*x+1"
        assert format_poly_pretty(FpPoly(2, (0, 1))) == "x"
        assert format_poly_pretty(FpPoly(5, (3,))) == "3"
        assert format_poly_pretty(FpPoly(2, ())) == "0"

    def test_pretty_round_trip_exhaustive_f2_deg3(self):
        for a in range(2):
            for b in range(2):
                for c in range(2):
                    for d in range(2):
                        f = FpPoly(2, (a, b, c, d))
                        assert parse_poly_pretty(format_poly_pretty(f), 2) == f

    def test_pretty_parse_tolerates_spaces(self):
        assert parse_poly_pretty("x^2 + 2*x + 1", 3) == FpPoly(3, (1, 2, 1))

    def test_pretty_parse_rejects_garbage(self):
        for bad in ("x^", "y+1", "x**2", ""):
            with pytest.raises(ValueError):
                parse_poly_pretty(bad, 2)


class TestFactorizationValidation:
    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            Factorization("int", 1, ((Irreducible(3), 1), (Irreducible(2), 1)))

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            Factorization("int", 1, ((Irreducible(2), 1), (Irreducible(2), 1)))

    def test_rejects_bad_unit(self):
        with pytest.raises(ValueError):
            Factorization("int", 2, ((Irreducible(2), 1),))

    def test_irreducible_guards(self):
        with pytest.raises(ValueError):
            Irreducible(1)
        with pytest.raises(ValueError):
            Irreducible(FpPoly(2, (0, 2)))  # reduces to zero
        with pytest.raises(ValueError):
            Irreducible(FpPoly(3, (1, 2)))  # not monic
