import json
import math
from fractions import Fraction

import pytest

from canonpoly.census import (
    DEFAULT_BOUND,
    available_backends,
    brute_force_census,
    candidate_poly,
    census_report,
    convergence_csv,
    convergence_table,
    log_monoid_density,
    monoid_density,
    monoid_order,
    preserving_count,
    unit_density,
    unit_group_order,
)
from canonpoly.errors import DegenerateField, TooLarge
from canonpoly.gf import Field, PrimePoly
from canonpoly.orbits import divisors, irreducible_count


@pytest.mark.parametrize(
    "q,m,expected",
    [(2, 1, 4), (2, 2, 8), (2, 3, 144), (3, 2, 5832), (2, 4, 13824), (4, 2, 764411904)],
)
def test_monoid_order(q, m, expected):
    assert monoid_order(q, m) == expected


@pytest.mark.parametrize(
    "q,m,expected", [(2, 1, 2), (2, 2, 4), (2, 3, 36), (3, 2, 288), (2, 4, 1536)]
)
def test_unit_group_order(q, m, expected):
    assert unit_group_order(q, m) == expected


def test_preserving_count():
    assert preserving_count(2, 2) == 16
    assert preserving_count(2, 3) == 4 * 6**6
    for q in (2, 3, 5):
        assert preserving_count(q, 1) == q**q


def test_per_divisor_factors_are_positive():
    for q, m in [(2, 4), (3, 2), (5, 2)]:
        product = 1
        for k in divisors(m):
            n = irreducible_count(q, k)
            factor = k**n * n**n
            assert factor >= 1
            product *= factor
        assert product == monoid_order(q, m)


def test_density_golden():
    assert monoid_density(2, 2) == Fraction(1, 2)
    assert monoid_density(2, 3) == Fraction(9, 16)
    assert monoid_density(3, 2) == Fraction(8, 27)
    assert monoid_density(2, 1) == Fraction(1, 1)


def test_density_prime_closed_form_runs():
    # the closed form for prime degree is asserted inside
    assert monoid_density(2, 5) == Fraction(monoid_order(2, 5), 2**32)
    assert monoid_density(2, 4) == Fraction(13824, 2**16)


def test_log_density_matches_exact():
    for q, p in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 5), (5, 2)]:
        d = monoid_density(q, p)
        exact = math.log(d.numerator) - math.log(d.denominator)
        stable = log_monoid_density(q, p)
        assert abs(stable - exact) <= 1e-12 * abs(exact)
        assert math.isclose(math.exp(stable), float(d), rel_tol=1e-9)


def test_log_density_golden_values():
    assert math.isclose(log_monoid_density(2, 2), math.log(0.5), rel_tol=1e-15)
    assert math.isclose(log_monoid_density(3, 3), 8 * math.log(8 / 9), rel_tol=1e-12)
    assert math.isclose(
        log_monoid_density(2, 11), (2**11 - 2) / 11 * math.log(1 - 2**-10), rel_tol=1e-12
    )


def test_log_density_extreme_arguments():
    # far beyond exact representability: tends to -q/p without overflow
    big = 2**31 - 1  # a Mersenne prime
    assert math.isclose(log_monoid_density(2, big), -2 / big, rel_tol=1e-6)
    assert log_monoid_density(big, 2) < -1e8


def test_log_density_validation():
    with pytest.raises(DegenerateField):
        log_monoid_density(1, 2)
    with pytest.raises(ValueError):
        log_monoid_density(2, 4)


def test_unit_density_golden():
    assert unit_density(2, 2).exact == Fraction(1, 4)
    assert unit_density(2, 3).exact == Fraction(36, 256)
    assert unit_density(2, 5).exact == Fraction(22500000, 2**32)
    values = [unit_density(2, p) for p in (2, 3, 5)]
    assert values[0].exact > values[1].exact > values[2].exact


def test_unit_density_log_agrees_with_exact():
    for q, p in [(2, 2), (2, 3), (2, 5), (3, 2), (3, 3)]:
        ud = unit_density(q, p)
        exact_log = math.log(ud.exact.numerator) - math.log(ud.exact.denominator)
        assert math.isclose(ud.log_value, exact_log, rel_tol=1e-9)


def test_unit_density_log_only_for_large_degrees():
    ud = unit_density(2, 31)
    assert ud.exact is None
    assert ud.log_value < -1e7


def test_convergence_directions():
    toward_one = convergence_table("fixed_q", [3, 5, 7, 11], fixed=2)
    values = [v for _, _, v in toward_one]
    assert values == sorted(values)  # increasing toward 0
    assert all(v < 0 for v in values)
    toward_zero = convergence_table("fixed_p", [2, 3, 5, 7], fixed=2)
    values = [v for _, _, v in toward_zero]
    assert values == sorted(values, reverse=True)  # decreasing
    diagonal = convergence_table("diagonal", [5, 7, 11, 13])
    for p, p2, v in diagonal:
        assert p == p2
        assert abs(v + 1) < 1e-2


def test_convergence_csv():
    rows = convergence_table("diagonal", [5, 7])
    text = convergence_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == "q,p,log_density"
    assert lines[1].startswith("5,5,-0.999")
    assert len(lines) == 3


def test_convergence_validation():
    with pytest.raises(ValueError):
        convergence_table("sideways", [2])
    with pytest.raises(ValueError):
        convergence_table("fixed_q", [3])


@pytest.mark.parametrize("q,m", [(2, 1), (2, 2), (2, 3), (3, 2)])
def test_brute_force_matches_formulas(q, m):
    report = brute_force_census(Field(q, 1, m))
    assert report.observed_members == report.monoid_order
    assert report.observed_units == report.unit_group_order
    assert report.matches


def test_brute_force_observed_preserving(f2, f4, f8):
    assert brute_force_census(f2).observed_preserving == 4
    assert brute_force_census(f4).observed_preserving == 16
    # 8^8 maps exceed the default bound, so the map scan is skipped
    assert brute_force_census(f8).observed_preserving is None


def test_brute_force_bound():
    with pytest.raises(TooLarge):
        brute_force_census(Field(2, 1, 5))
    with pytest.raises(TooLarge):
        brute_force_census(Field(2, 1, 2), bound=4)


def test_collected_members_decode_to_golden_set(f4):
    report, member_ids, unit_ids = brute_force_census(f4, collect=True)
    members = {str(candidate_poly(f4, c)) for c in member_ids}
    units = {str(candidate_poly(f4, c)) for c in unit_ids}
    assert members == {
        "0,1", "1,1", "0,0,1", "1,0,1", "1,0,1,1", "0,1,0,1", "0,0,1,1", "1,1,0,1",
    }
    assert units == {"0,1", "1,1", "0,0,1", "1,0,1"}
    assert set(unit_ids) <= set(member_ids)
    assert member_ids == sorted(member_ids)


def test_backends_agree(f9, f16):
    backends = available_backends()
    if len(backends) < 2:
        pytest.skip("native backend not built")
    for ctx in (f9, f16):
        results = {
            b: brute_force_census(ctx, collect=True, backend=b) for b in backends
        }
        reports = {b: r[0] for b, r in results.items()}
        assert len({(r.observed_members, r.observed_units) for r in reports.values()}) == 1
        assert len({tuple(r[1]) for r in results.values()}) == 1
        assert len({tuple(r[2]) for r in results.values()}) == 1


def test_representation_independence():
    # same field, two different irreducible quartics
    first = Field(2, 1, 4, PrimePoly((1, 1, 0, 0, 1)))
    second = Field(2, 1, 4, PrimePoly((1, 0, 0, 1, 1)))
    assert first.modulus != second.modulus
    ra, ma, ua = brute_force_census(first, collect=True)
    rb, mb, ub = brute_force_census(second, collect=True)
    assert ra.observed_members == rb.observed_members == 13824
    assert ra.observed_units == rb.observed_units == 1536
    # membership is a property of the coefficient vector, not the modulus
    assert ma == mb
    assert ua == ub


def test_report_invariants_and_json(f4):
    report = brute_force_census(f4)
    assert report.unit_group_order <= report.monoid_order <= report.preserving_count
    data = report.to_json()
    assert data["monoid_order"] == "8"
    assert data["density"] == {"exact": "1/2", "float": 0.5}
    assert data["unit_density"]["exact"] == "1/4"
    assert data["pi"] == {"1": "2", "2": "1"}
    assert data["observed"]["matches"] is True
    json.dumps(data)


def test_report_without_oracle():
    report = census_report(5, 2)
    assert report.monoid_order == 5**5 * 2**10 * 10**10
    assert report.observed_members is None
    assert report.matches  # vacuous without observations
    assert report.log_density is not None
    data = report.to_json()
    assert "observed" not in data


def test_report_composite_degree_has_no_log_density():
    assert census_report(2, 4).log_density is None
    assert census_report(2, 3).log_density is not None
