"""Small seeded experiments behind the scripts in ``scripts/``.

Each experiment takes a dataclass config and returns plain rows, so the
scripts only deal with argument parsing and printing.
"""

from __future__ import annotations

import argparse
import dataclasses
import random
import time
from dataclasses import dataclass
from typing import Dict, List, Type, TypeVar

from .deltamatroid import DEFAULT_BUDGET, is_delta_matroid, is_vf_safe, matrix_delta_matroid, uniform_matroid
from .field import GF4, Automorphism, FieldKind
from .generators import random_full_rank
from .subspace import bases_parity_check, bicycle_report, build_r_matrix, standardize

C = TypeVar("C")


@dataclass
class BicycleSurveyConfig:
    seed: int = 0
    count: int = 50
    field: str = "GF4"
    min_rank: int = 1
    max_rank: int = 4
    max_n: int = 8


@dataclass
class OrbitSurveyConfig:
    seed: int = 0
    count: int = 20
    max_rank: int = 3
    max_n: int = 5
    budget: int = DEFAULT_BUDGET


@dataclass
class UniformSearchConfig:
    max_n: int = 7
    budget: int = DEFAULT_BUDGET


def add_config_arguments(parser: argparse.ArgumentParser, cls: Type) -> None:
    for f in dataclasses.fields(cls):
        parser.add_argument(f"--{f.name.replace('_', '-')}", type=type(f.default), default=f.default)


def config_from_args(cls: Type[C], args: argparse.Namespace) -> C:
    return cls(**{f.name: getattr(args, f.name) for f in dataclasses.fields(cls)})


def bicycle_survey(cfg: BicycleSurveyConfig) -> List[Dict[str, object]]:
    """Bicycle dimension, basis count and the max(M+V) comparison on random representations."""
    rng = random.Random(cfg.seed)
    kind = FieldKind.parse(cfg.field)
    rows = []
    for i in range(cfg.count):
        r = rng.randint(cfg.min_rank, cfg.max_rank)
        B = random_full_rank(rng, kind, r, rng.randint(r, cfg.max_n))
        rep = bicycle_report(B)
        parity = bases_parity_check(B)
        rows.append({"i": i, "rank": r, "n": len(B.cols), "bases": parity.bases,
                     "bd": rep.dimension, "equal": rep.equal, "parity_ok": parity.consistent})
    return rows


def orbit_survey(cfg: OrbitSurveyConfig) -> List[Dict[str, object]]:
    """Orbit sizes of random quaternary matroids under vertex flips."""
    rng = random.Random(cfg.seed)
    inv = Automorphism.inversion(GF4)
    rows = []
    for i in range(cfg.count):
        r = rng.randint(1, cfg.max_rank)
        n = rng.randint(r, cfg.max_n)
        std = standardize(random_full_rank(rng, GF4, r, n))
        M = matrix_delta_matroid(build_r_matrix(std, inv)).twist(std.basis)
        t0 = time.perf_counter()
        res = is_vf_safe(M, cfg.budget)
        rows.append({"i": i, "rank": r, "n": n, "bases": len(M), "status": res.status,
                     "orbit": res.explored, "seconds": round(time.perf_counter() - t0, 3)})
    return rows


def uniform_search(cfg: UniformSearchConfig) -> List[Dict[str, object]]:
    """vf-safety of the rank-2 uniform matroids U(2, n) for n up to ``max_n``."""
    rows = []
    for n in range(2, cfg.max_n + 1):
        U = uniform_matroid(2, n)
        t0 = time.perf_counter()
        res = is_vf_safe(U, cfg.budget)
        row = {"n": n, "status": res.status, "explored": res.explored,
               "witness": str(res.witness) if res.witness is not None else "",
               "seconds": round(time.perf_counter() - t0, 3)}
        if res.status == "unsafe":
            row["violation"] = is_delta_matroid(U.apply_word(res.witness)).counterexample
        rows.append(row)
    return rows


def format_rows(rows: List[Dict[str, object]]) -> str:
    if not rows:
        return ""
    keys = list(rows[0])
    for r in rows:
        keys += [k for k in r if k not in keys]
    widths = {k: max(len(k), *(len(str(r.get(k, ""))) for r in rows)) for k in keys}
    lines = ["  ".join(k.ljust(widths[k]) for k in keys)]
    lines += ["  ".join(str(r.get(k, "")).ljust(widths[k]) for k in keys) for r in rows]
    return "\n".join(lines)
