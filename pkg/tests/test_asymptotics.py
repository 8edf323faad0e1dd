from fractions import Fraction

import pytest

from omegaprimality import (NotAMember, NumericalMonoid, SeriesTooShort, WindowUnstable,
                            asymptotic_ratio, fit_quasilinear, minimal_period, omega, omega_series,
                            period_is_exact, ratio_error_bound)


def test_three_seven_intercepts():
    model = fit_quasilinear(omega_series(NumericalMonoid([3, 7]), 1, 200))
    assert model.intercepts == (0, 5, 3)
    assert model.dissonance == 6
    assert minimal_period(model) == 3


def test_mcnugget_model():
    M = NumericalMonoid([6, 9, 20])
    s = omega_series(M, 1, 600)
    model = fit_quasilinear(s)
    assert 6 % minimal_period(model) == 0
    for n, w in s.entries:
        if n > model.dissonance:
            assert model(n) == w
    assert omega(M, model.dissonance).omega != model(model.dissonance)


def test_series_matches_engine():
    M = NumericalMonoid([5, 7, 11])
    s = omega_series(M, 1, 150)
    assert s.entries == tuple((n, omega(M, n).omega) for n in M.members(1, 150))


def test_short_series():
    with pytest.raises(SeriesTooShort):
        fit_quasilinear(omega_series(NumericalMonoid([3, 7]), 1, 20))


def test_unstable_window():
    # below 280 the top window of <23,24,25> still contains pre-periodic values
    M = NumericalMonoid([23, 24, 25])
    with pytest.raises(WindowUnstable):
        fit_quasilinear(omega_series(M, 1, 250), stability_window=2)
    fit_quasilinear(omega_series(M, 1, 280), stability_window=2)


def test_ratio_and_bound():
    M = NumericalMonoid([6, 9, 20])
    model = fit_quasilinear(omega_series(M, 1, 600))
    r = asymptotic_ratio(M, 1200)
    assert r == Fraction(1, 6)
    assert abs(r - Fraction(1, 6)) <= ratio_error_bound(model, 1200)
    assert asymptotic_ratio(NumericalMonoid([3, 7]), 1000) == Fraction(338, 1000)
    with pytest.raises(NotAMember):
        asymptotic_ratio(NumericalMonoid([3, 7]), 11)


def test_offset_is_integer_free_only_at_zero():
    model = fit_quasilinear(omega_series(NumericalMonoid([3, 7]), 1, 200))
    assert model.offset(0) == 0
    assert model.offset(1) == 5 - Fraction(1, 3)
    assert period_is_exact(model)


def test_model_json_round_trip():
    import json
    model = fit_quasilinear(omega_series(NumericalMonoid([3, 7]), 1, 200))
    data = json.loads(model.to_json())
    assert data["schema_version"] == 1 and data["intercepts"] == [0, 5, 3]


def test_csv_header():
    M = NumericalMonoid([3, 7])
    s = omega_series(M, 1, 200)
    lines = s.to_csv(fit_quasilinear(s)).splitlines()
    assert lines[0] == "n,omega,model,residue"
    assert lines[1] == "3,3,1,0"
