"""Sylvester and Macaulay resultants, morphism decisions, field probes."""

from fractions import Fraction as F
from itertools import product
from random import Random

import pytest

from projstab import (BadPrime, SizeLimit, WrongDimension, apply_linear_change,
                      ff_zero_probe, is_morphism, macaulay_resultant,
                      make_linear_change, make_map, sylvester_resultant)
from projstab.linalg import det_rational
from helpers import random_map


def _power_map(n, m):
    return make_map(n, m, [[(tuple(m if i == j else 0 for i in range(n + 1)), 1)]
                           for j in range(n + 1)])


class TestSylvester:
    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_power_map_normalization(self, m):
        assert sylvester_resultant(_power_map(1, m)) == 1

    def test_known_value(self):
        f = make_map(1, 2, [[((2, 0), 1), ((0, 2), -1)],
                            [((2, 0), 1), ((0, 2), 1)]])
        assert sylvester_resultant(f) == 4

    def test_common_zero(self):
        f = make_map(1, 2, [[((2, 0), 1)], [((1, 1), 1)]])
        assert sylvester_resultant(f) == 0

    def test_wrong_dimension(self):
        with pytest.raises(WrongDimension):
            sylvester_resultant(_power_map(2, 2))

    def test_root_product_formula(self):
        # Res(f, g) = lc(f)^m * prod g(roots of f) for split f
        f = make_map(1, 3, [[((3, 0), 1), ((1, 2), -1)],           # x0(x0-x1)(x0+x1)
                            [((3, 0), 1), ((2, 1), 1), ((0, 3), 2)]])
        g = f.components[1]
        expected = F(1)
        for root in ((0, 1), (1, 1), (-1, 1)):
            expected *= g.evaluate([F(x) for x in root])
        assert sylvester_resultant(f) == expected


class TestMacaulay:
    @pytest.mark.parametrize("n,m", [(0, 3), (1, 2), (1, 3), (2, 2), (2, 3), (3, 2)])
    def test_power_map_normalization(self, n, m):
        res = macaulay_resultant(_power_map(n, m))
        assert res.value == 1 and res.retries == 0

    def test_permuted_power_map_uses_retries(self):
        f = make_map(2, 2, [[((0, 2, 0), 1)], [((2, 0, 0), 1)], [((0, 0, 2), 1)]])
        res = macaulay_resultant(f)
        assert not res.is_indeterminate
        assert res.value in (1, -1)
        assert res.retries >= 1

    def test_retry_budget_exhaustion_reports_indeterminate(self):
        f = make_map(2, 2, [[((0, 2, 0), 1)], [((2, 0, 0), 1)], [((0, 0, 2), 1)]])
        res = macaulay_resultant(f, max_retries=0)
        assert res.is_indeterminate and res.retries == 0

    def test_zero_component_short_circuit(self):
        f = make_map(1, 2, [[((2, 0), 1), ((2, 0), -1)], [((0, 2), 1)]])
        res = macaulay_resultant(f)
        assert res.value == 0 and "zero component" in res.note

    def test_uncovered_vertex_short_circuit(self):
        f = make_map(2, 2, [[((2, 0, 0), 1)], [((1, 1, 0), 1)], [((1, 0, 1), 1)]])
        res = macaulay_resultant(f)
        assert res.value == 0

    def test_n2_morphism_example(self):
        f = make_map(2, 2, [[((2, 0, 0), 1)],
                            [((1, 1, 0), 1), ((0, 2, 0), 1)],
                            [((0, 0, 2), 1), ((1, 0, 1), 1)]])
        res = macaulay_resultant(f)
        assert res.value != 0

    def test_agrees_with_sylvester(self):
        rng = Random(101)
        for _ in range(120):
            m = rng.choice((2, 3, 4))
            f = random_map(rng, 1, m)
            res = macaulay_resultant(f)
            assert res.value == sylvester_resultant(f)

    def test_size_limit(self):
        with pytest.raises(SizeLimit):
            macaulay_resultant(_power_map(4, 5))

    def test_determinism(self):
        f = make_map(2, 2, [[((0, 2, 0), 1)], [((2, 0, 0), 1)], [((0, 0, 2), 1)]])
        a = macaulay_resultant(f, seed=5)
        b = macaulay_resultant(f, seed=5)
        assert a == b

    def test_linear_form_product_oracle(self):
        # For components that split into linear forms the resultant factors
        # into 3x3 determinants, one per choice of a factor from each
        # component.  Exercises value and sign of the n=2 construction.
        rng = Random(103)
        checked = 0
        while checked < 12:
            forms = [[[rng.randint(-2, 2) for _ in range(3)] for _ in range(2)]
                     for _ in range(3)]
            if any(not any(row) for f3 in forms for row in f3):
                continue
            comps = []
            for f3 in forms:
                acc = {}
                for e1, e2 in product(range(3), range(3)):
                    c = F(f3[0][e1]) * F(f3[1][e2])
                    if c:
                        e = tuple(int(e1 == i) + int(e2 == i) for i in range(3))
                        acc[e] = acc.get(e, F(0)) + c
                if not acc:
                    break
                comps.append(list(acc.items()))
            else:
                f = make_map(2, 2, comps)
                res = macaulay_resultant(f)
                if res.is_indeterminate:
                    continue
                expected = F(1)
                for a, b, c in product(range(2), repeat=3):
                    expected *= det_rational([
                        [F(x) for x in forms[0][a]],
                        [F(x) for x in forms[1][b]],
                        [F(x) for x in forms[2][c]]])
                assert res.value == expected
                checked += 1

    def test_linearly_dependent_components(self):
        # f1 = -f0: the tuple spans two forms only, so common zeros exist
        # over the closure and the resultant is exactly zero
        f = make_map(2, 2, [[((1, 1, 0), 1), ((0, 2, 0), 1), ((0, 1, 1), 1)],
                            [((1, 1, 0), -1), ((0, 2, 0), -1), ((0, 1, 1), -1)],
                            [((2, 0, 0), -1), ((1, 0, 1), 1), ((0, 2, 0), -1),
                             ((0, 0, 2), -1)]])
        res = macaulay_resultant(f)
        assert res.value == 0 and "dependent" in res.note
        assert not is_morphism(f)

    def test_rational_common_zero_forces_zero(self):
        # every component divisible by x0 - 2x1: zero at (2 : 1)
        f = make_map(1, 2, [[((2, 0), 1), ((1, 1), -2)],
                            [((1, 1), 1), ((0, 2), -2)]])
        assert macaulay_resultant(f).value == 0

    def test_source_covariance(self):
        # Res(f . g) = det(g)^(m^(n+1)) Res(f), the factor behind the
        # retry correction.
        rng = Random(107)
        checked = 0
        while checked < 10:
            n = rng.choice((1, 2))
            m = 2
            f = random_map(rng, n, m)
            g = [[F(rng.randint(-2, 2)) for _ in range(n + 1)]
                 for _ in range(n + 1)]
            d = det_rational([row[:] for row in g])
            if d == 0:
                continue
            eye = [[F(int(i == j)) for j in range(n + 1)] for i in range(n + 1)]
            moved = apply_linear_change(f, make_linear_change(g, eye))
            r1 = macaulay_resultant(f)
            r2 = macaulay_resultant(moved)
            if r1.is_indeterminate or r2.is_indeterminate:
                continue
            assert r2.value == r1.value * d ** (m ** (n + 1))
            checked += 1

    def test_component_scaling_degree(self):
        # scaling one component by u multiplies the resultant by u^(m^n)
        rng = Random(109)
        for _ in range(10):
            n, m = rng.choice(((1, 2), (1, 3), (2, 2)))
            f = random_map(rng, n, m)
            r1 = macaulay_resultant(f)
            if r1.is_indeterminate:
                continue
            u = F(rng.choice((2, 3, -2, 5)))
            comps = [list(comp.terms) for comp in f.components]
            comps[0] = [(e, c * u) for e, c in comps[0]]
            r2 = macaulay_resultant(make_map(n, m, comps))
            if r2.is_indeterminate:
                continue
            assert r2.value == r1.value * u ** (m ** n)


class TestIsMorphism:
    def test_examples(self):
        assert is_morphism(make_map(1, 3, [[((3, 0), 1), ((0, 3), 1)],
                                           [((2, 1), 1)]]))
        assert not is_morphism(make_map(1, 2, [[((2, 0), 1)], [((1, 1), 1)]]))
        assert is_morphism(make_map(1, 3, [[((3, 0), 1)],
                                           [((0, 3), 1), ((1, 2), 1)]]))

    def test_fast_path_matches_exact(self):
        rng = Random(113)
        for _ in range(60):
            n, m = rng.choice(((1, 2), (1, 3), (2, 2)))
            f = random_map(rng, n, m)
            assert is_morphism(f, fast=True) == is_morphism(f, fast=False)


class TestProbe:
    def test_common_zero_found(self):
        f = make_map(1, 2, [[((2, 0), 1)], [((1, 1), 1)]])
        assert ff_zero_probe(f, 5).zeros_found == ((0, 1),)

    def test_power_map_clean(self):
        for p in (5, 101):
            assert ff_zero_probe(_power_map(2, 2), p).zeros_found == ()

    def test_good_reduction_zeros(self):
        # morphism over Q whose reduction mod 5 degenerates: resultant 25
        f = make_map(1, 2, [[((2, 0), 1), ((0, 2), 1)],
                            [((2, 0), -4), ((0, 2), 1)]])
        report = ff_zero_probe(f, 5)
        assert report.zeros_found == ((1, 2), (1, 3))
        res = macaulay_resultant(f).value
        assert res == 25 and res % 5 == 0

    def test_bad_prime(self):
        f = make_map(1, 2, [[((2, 0), F(1, 5))], [((0, 2), 1)]])
        with pytest.raises(BadPrime):
            ff_zero_probe(f, 5)

    def test_soundness_link_sample(self):
        rng = Random(127)
        hits = 0
        for _ in range(40):
            f = random_map(rng, 2, 2)
            res = macaulay_resultant(f)
            if res.is_indeterminate:
                continue
            for p in (101, 103):
                if ff_zero_probe(f, p).zeros_found:
                    hits += 1
                    num = res.value.numerator
                    den = res.value.denominator
                    assert den % p != 0 and num % p == 0
        # the law must have been exercised at least once on this seed
        assert hits >= 1

    def test_canonical_point_order_no_duplicates(self):
        f = make_map(1, 2, [[((2, 0), 1), ((0, 2), -1)],
                            [((2, 0), 1), ((0, 2), -1)]])
        zeros = ff_zero_probe(f, 7).zeros_found
        assert zeros == ((1, 1), (1, 6))
        assert len(set(zeros)) == len(zeros)
        assert all(z[next(i for i, x in enumerate(z) if x)] == 1 for z in zeros)
