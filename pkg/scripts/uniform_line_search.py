#!/usr/bin/env python3
"""vf-safety of the rank-2 uniform matroids; U(2,6) is the first unsafe one."""

import argparse

from dmflip.experiments import UniformSearchConfig, add_config_arguments, config_from_args, format_rows, uniform_search


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    add_config_arguments(p, UniformSearchConfig)
    cfg = config_from_args(UniformSearchConfig, p.parse_args())
    print(cfg)
    print(format_rows(uniform_search(cfg)))


if __name__ == "__main__":
    main()
