#!/usr/bin/env python3
"""Bicycle dimension, basis parity and the max(M+V) comparison on random representations."""

import argparse

from dmflip.experiments import BicycleSurveyConfig, add_config_arguments, config_from_args, format_rows, bicycle_survey


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    add_config_arguments(p, BicycleSurveyConfig)
    cfg = config_from_args(BicycleSurveyConfig, p.parse_args())
    print(cfg)
    print(format_rows(bicycle_survey(cfg)))


if __name__ == "__main__":
    main()
