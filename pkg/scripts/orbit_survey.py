#!/usr/bin/env python3
"""Vertex-flip orbit sizes of random quaternary matroids."""

import argparse

from dmflip.experiments import OrbitSurveyConfig, add_config_arguments, config_from_args, format_rows, orbit_survey


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    add_config_arguments(p, OrbitSurveyConfig)
    cfg = config_from_args(OrbitSurveyConfig, p.parse_args())
    print(cfg)
    print(format_rows(orbit_survey(cfg)))


if __name__ == "__main__":
    main()
