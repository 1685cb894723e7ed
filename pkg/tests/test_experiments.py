import argparse

from dmflip.experiments import (
    BicycleSurveyConfig,
    OrbitSurveyConfig,
    UniformSearchConfig,
    add_config_arguments,
    bicycle_survey,
    config_from_args,
    format_rows,
    orbit_survey,
    uniform_search,
)


def test_config_round_trip_through_argparse():
    p = argparse.ArgumentParser()
    add_config_arguments(p, BicycleSurveyConfig)
    cfg = config_from_args(BicycleSurveyConfig, p.parse_args(["--count", "3", "--max-n", "5", "--field", "GF2"]))
    assert cfg == BicycleSurveyConfig(count=3, max_n=5, field="GF2")


def test_bicycle_survey_is_seeded_and_consistent():
    cfg = BicycleSurveyConfig(count=6, max_n=6)
    rows = bicycle_survey(cfg)
    assert rows == bicycle_survey(cfg)
    assert all(r["equal"] and r["parity_ok"] for r in rows)
    assert all((r["bases"] % 2 == 1) == (r["bd"] == 0) for r in rows)


def test_orbit_survey_all_safe():
    rows = orbit_survey(OrbitSurveyConfig(count=4, max_n=4))
    assert [r["status"] for r in rows] == ["safe"] * 4


def test_uniform_search_first_unsafe_at_six():
    rows = uniform_search(UniformSearchConfig(max_n=6))
    assert [r["status"] for r in rows] == ["safe"] * 4 + ["unsafe"]
    assert "+a" in format_rows(rows)
