"""Seeded property suites over random and exhaustive instances.

Each suite takes a :class:`random.Random` and a size parameter and returns a
:class:`CheckResult`.  ``ACCEPTANCE`` lists the suites with the instance
counts the library is held to; ``INVARIANTS`` are further consistency
checks.  The ``verify`` CLI command and the acceptance tests both run these.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from . import linalg
from .deltamatroid import (
    Representation,
    is_delta_matroid,
    is_vf_safe,
    matrix_delta_matroid,
    uniform_matroid,
    violates_exchange,
    vf_transport,
)
from .field import GF2, GF3, GF4, W, Automorphism, supported_automorphisms
from .generators import (
    random_alpha_symmetric,
    random_full_rank,
    random_matrix,
    random_word,
)
from .matrix import GroundSet, LabeledMatrix
from .setsystem import (
    DUALP,
    LOOPC,
    OPS,
    TWIST,
    FlipWord,
    all_set_systems,
    dual_pivot_all_explicit,
    loop_complement_all_explicit,
    normalize_word,
    twist_all_explicit,
)
from .subspace import (
    apply_automorphism_subspace,
    bases_parity_check,
    bicycle_report,
    bicycle_space,
    build_r_matrix,
    column_bases,
    kernel,
    matroid_from_subspace,
    orthogonal_complement,
    standardize,
    twist_matroid_check,
)

INV = Automorphism.inversion(GF4)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    extra: Dict[str, object] = field(default_factory=dict)

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark}  {self.name:<34} {self.seconds:7.2f}s  {self.detail}"


def _result(name: str, failures: int, checked: int, t0: float, note: str = "", **extra) -> CheckResult:
    detail = f"{checked} checks, {failures} failures"
    if note:
        detail += f"; {note}"
    return CheckResult(name, failures == 0, detail, time.perf_counter() - t0, dict(extra))


# -- acceptance suites -----------------------------------------------------------

def tucker_identity(rng: random.Random, count: int = 200, max_n: int = 5) -> CheckResult:
    """det((A*X)[Y]) * det(A[X]) == det(A[X ^ Y]) for all feasible X and all Y."""
    t0 = time.perf_counter()
    checked = failures = 0
    for kind in (GF2, GF3, GF4):
        mul = kind.mul
        for _ in range(count):
            A = random_matrix(rng, kind, rng.randint(1, max_n))
            minors = A.principal_minors()
            for x, dx in minors.items():
                if not dx:
                    continue
                pivoted = A.ppt(x).principal_minors()
                for y, dy in pivoted.items():
                    checked += 1
                    failures += mul[dy][dx] != minors[x ^ y]
    return _result("tucker identity", failures, checked, t0)


def automorphism_commutes_with_ppt(rng: random.Random, count: int = 200, max_n: int = 5) -> CheckResult:
    t0 = time.perf_counter()
    checked = failures = 0
    for _ in range(count):
        A = random_matrix(rng, GF4, rng.randint(1, max_n))
        for x, d in A.principal_minors().items():
            if not d:
                continue
            for alpha in supported_automorphisms(GF4):
                checked += 1
                failures += A.ppt(x).apply_automorphism(alpha) != A.apply_automorphism(alpha).ppt(x)
    return _result("automorphism commutes with ppt", failures, checked, t0)


def find_minor_equal_to_w(rng: random.Random, tries: int = 10_000) -> Optional[LabeledMatrix]:
    for _ in range(tries):
        A = random_matrix(rng, GF4, rng.randint(1, 3))
        if A.is_alpha_symmetric(INV):
            continue
        if W in A.principal_minors().values():
            return A
    return None


def inv_symmetric_is_pu(rng: random.Random, count: int = 500, max_n: int = 6) -> CheckResult:
    t0 = time.perf_counter()
    failures = 0
    for _ in range(count):
        A = random_alpha_symmetric(rng, INV, rng.randint(1, max_n))
        failures += not set(A.principal_minors().values()) <= {0, 1}
    witness = find_minor_equal_to_w(rng)
    note = "no non-inv-symmetric matrix with a minor w found" if witness is None else \
        "non-inv-symmetric matrix with minor w: " + repr(witness)
    return _result("inv-symmetric => PU", failures + (witness is None), count + 1, t0, note,
                   witness=witness)


ALPHA_PAIRS = (
    Automorphism.identity(GF2),
    Automorphism.identity(GF3),
    Automorphism.identity(GF4),
    INV,
)


def alpha_symmetric_delta_matroid(rng: random.Random, count: int = 500, max_n: int = 6) -> CheckResult:
    t0 = time.perf_counter()
    failures = 0
    for i in range(count):
        alpha = ALPHA_PAIRS[i % len(ALPHA_PAIRS)]
        A = random_alpha_symmetric(rng, alpha, rng.randint(1, max_n))
        failures += not is_delta_matroid(matrix_delta_matroid(A)).verdict
    return _result("alpha-symmetric M_A is delta-matroid", failures, count, t0)


def loop_complement_matches_identity_shift(rng: random.Random, count: int = 200, max_n: int = 5) -> CheckResult:
    """M_{A+X} == M_A + X, plus det((A+j)[Z]) == det(A[Z]) + det(A[Z-j])."""
    t0 = time.perf_counter()
    checked = failures = 0
    for kind in (GF4, GF2):
        add = kind.add
        for _ in range(count):
            n = rng.randint(1, max_n)
            A = random_alpha_symmetric(rng, INV, n) if kind is GF4 else random_matrix(rng, GF2, n)
            base = matrix_delta_matroid(A)
            for x in range(1 << n):
                checked += 1
                failures += matrix_delta_matroid(A.add_identity_on(x)) != base.apply_bulk(LOOPC, x)
            minors = A.principal_minors()
            for j in range(n):
                shifted = A.add_identity_on(1 << j).principal_minors()
                for z in range(1 << n):
                    if (z >> j) & 1:
                        checked += 1
                        failures += shifted[z] != add[minors[z]][minors[z & ~(1 << j)]]
    return _result("loop complementation = A+X", failures, checked, t0)


def transport_suite(rng: random.Random, count: int = 200, max_n: int = 5, max_len: int = 8) -> CheckResult:
    t0 = time.perf_counter()
    failures = 0
    for alpha in (INV, Automorphism.identity(GF2)):
        for _ in range(count):
            n = rng.randint(1, max_n)
            A = random_alpha_symmetric(rng, alpha, n)
            rep = Representation(A, alpha, rng.randrange(1 << n))
            word = random_word(rng, A.ground.labels, rng.randint(0, max_len))
            moved = vf_transport(rep, word)
            failures += moved.system() != rep.system().apply_word(word)
    return _result("vertex-flip transport", failures, 2 * count, t0)


def random_quaternary_matroid(rng: random.Random, max_rank: int = 3, max_n: int = 5):
    r = rng.randint(1, max_rank)
    n = rng.randint(r, max_n)
    std = standardize(random_full_rank(rng, GF4, r, n))
    R = build_r_matrix(std, INV)
    return std, R, matrix_delta_matroid(R).twist(std.basis)


def quaternary_matroids_vf_safe(rng: random.Random, count: int = 20) -> CheckResult:
    t0 = time.perf_counter()
    failures = 0
    sizes = []
    for _ in range(count):
        std, _, M = random_quaternary_matroid(rng)
        if M != column_bases(std.B):
            failures += 1
            continue
        res = is_vf_safe(M)
        sizes.append(res.explored)
        failures += res.status != "safe"
    return _result("quaternary matroids vf-safe", failures, count, t0,
                   f"orbit sizes {min(sizes, default=0)}..{max(sizes, default=0)}")


def u26_not_vf_safe(rng: random.Random = None) -> CheckResult:
    t0 = time.perf_counter()
    U = uniform_matroid(2, 6)
    res = is_vf_safe(U)
    ok = res.status == "unsafe" and len(U) == 15
    note = f"status {res.status}"
    if ok:
        flipped = U.apply_word(res.witness)
        w = is_delta_matroid(flipped)
        ok = not w.verdict and w.counterexample is not None and violates_exchange(flipped, *w.counterexample)
        note += f", witness '{res.witness}', violation {w.counterexample}"
    seconds = time.perf_counter() - t0
    ok = ok and seconds < 60
    return CheckResult("U26 not vf-safe", ok, note, seconds, {"witness": res.witness})


def find_rescaled_pair(rng: random.Random, tries: int = 500) -> Optional[Tuple[LabeledMatrix, LabeledMatrix]]:
    """Two representations of one matroid whose bicycle spaces differ."""
    for _ in range(tries):
        r = rng.randint(2, 3)
        n = rng.randint(r + 1, 6)
        B = random_full_rank(rng, GF4, r, n)
        G = random_full_rank(rng, GF4, r, r, labels=B.rows.labels)
        scales = [rng.randrange(1, 4) for _ in range(n)]
        mixed = linalg.matmul(G.data, B.data, GF4)
        mul = GF4.mul
        B2 = LabeledMatrix(GF4, B.rows, B.cols, [[mul[x][s] for x, s in zip(row, scales)] for row in mixed])
        if bicycle_space(kernel(B)) != bicycle_space(kernel(B2)):
            return B, B2
    return None


def bicycle_matroid_identity(rng: random.Random, count: int = 100, max_n: int = 8) -> CheckResult:
    t0 = time.perf_counter()
    failures = 0
    for _ in range(count):
        r = rng.randint(2, 4)
        B = random_full_rank(rng, GF4, r, rng.randint(r, max_n))
        failures += not bicycle_report(B).equal
    pair = find_rescaled_pair(rng)
    checked = count + 1
    if pair is None:
        failures += 1
        note = "no representation pair with differing bicycle spaces found"
    else:
        B, B2 = pair
        same = column_bases(B) == column_bases(B2)
        matroids = bicycle_report(B).bicycle_bases == bicycle_report(B2).bicycle_bases
        failures += not (same and matroids)
        note = "rescaled pair: bicycle spaces differ, bicycle matroids " + ("equal" if matroids else "DIFFER")
    return _result("bicycle matroid = max(M+V)", failures, checked, t0, note, pair=pair)


def bases_parity(rng: random.Random, count: int = 100, max_n: int = 8) -> CheckResult:
    t0 = time.perf_counter()
    checked = failures = 0
    for n in range(1, 5):
        cols = GroundSet.of_size(n)
        for r in range(0, n + 1):
            rows = GroundSet(tuple(f"r{i}" for i in range(r)))
            for bits in range(1 << (r * n)):
                data = [[(bits >> (i * n + j)) & 1 for j in range(n)] for i in range(r)]
                if linalg.rank(data, GF2, n) != r:
                    continue
                checked += 1
                failures += not bases_parity_check(LabeledMatrix(GF2, rows, cols, data)).consistent
    exhaustive = checked
    for _ in range(count):
        n = rng.randint(1, max_n)
        r = rng.randint(1, min(4, n))
        checked += 1
        failures += not bases_parity_check(random_full_rank(rng, GF4, r, n)).consistent
    return _result("bases parity <=> bd = 0", failures, checked, t0, f"{exhaustive} exhaustive GF2 cases")


def flip_axioms(rng: random.Random = None, max_word: int = 3) -> CheckResult:
    """Exhaustive over all 16 set systems on a 2-element ground set."""
    t0 = time.perf_counter()
    ground = GroundSet(("a", "b"))
    systems = list(all_set_systems(ground))
    checked = failures = 0

    def check(ok: bool) -> None:
        nonlocal checked, failures
        checked += 1
        failures += not ok

    words = [FlipWord(tuple(w)) for k in range(max_word + 1)
             for w in itertools.product([(op, lab) for op in OPS for lab in ground], repeat=k)]
    order3 = FlipWord.parse("+a *a")
    for M in systems:
        for u in ground:
            for op in OPS:
                check(M.apply_word(FlipWord(((op, u), (op, u)))) == M)
            check(M.apply_word(order3 + order3 + order3) == M)
            check(M.apply_word(FlipWord.parse(f"+{u} *{u} +{u}")) == M.apply_word(FlipWord.parse(f"*{u} +{u} *{u}")))
            check(M.dual_pivot(u) == M.loop_complement(u).twist(u).loop_complement(u))
        for g in OPS:
            for h in OPS:
                check(M.apply_word(FlipWord(((g, "a"), (h, "b")))) == M.apply_word(FlipWord(((h, "b"), (g, "a")))))
        for w in words:
            check(M.apply_word(w) == M.apply_normal_form(normalize_word(w, ground)))
        for x in range(4):
            check(M.max_sets() == M.apply_bulk(DUALP, x).max_sets())
        full = ground.full_mask
        check(M.apply_bulk(TWIST, full) == twist_all_explicit(M))
        check(M.apply_bulk(LOOPC, full) == loop_complement_all_explicit(M))
        check(M.apply_bulk(DUALP, full) == dual_pivot_all_explicit(M))
    # +a*a is a genuine order-3 element: neither it nor its square acts trivially
    check(any(M.apply_word(order3) != M for M in systems))
    check(any(M.apply_word(order3 + order3) != M for M in systems))
    return _result("flip calculus axioms", failures, checked, t0)


# -- further invariants ----------------------------------------------------------

def ppt_laws(rng: random.Random, count: int = 100, max_n: int = 6) -> CheckResult:
    """Involution, transpose law and preservation of alpha-symmetry."""
    t0 = time.perf_counter()
    checked = failures = 0
    for i in range(count):
        kind = (GF2, GF3, GF4)[i % 3]
        A = random_matrix(rng, kind, rng.randint(1, max_n))
        S = random_alpha_symmetric(rng, INV, rng.randint(1, max_n))
        for x, d in A.principal_minors().items():
            if d:
                B = A.ppt(x)
                checked += 2
                failures += B.ppt(x) != A
                failures += -(B.transpose()) != (-A.transpose()).ppt(x)
        for x, d in S.principal_minors().items():
            if d:
                checked += 1
                failures += not S.ppt(x).is_alpha_symmetric(INV)
    return _result("ppt involution/transpose/symmetry", failures, checked, t0)


def twist_closure(rng: random.Random, count: int = 100, max_n: int = 5) -> CheckResult:
    t0 = time.perf_counter()
    checked = failures = 0
    for _ in range(count):
        n = rng.randint(1, max_n)
        M = matrix_delta_matroid(random_alpha_symmetric(rng, rng.choice(ALPHA_PAIRS), n))
        for _ in range(4):
            checked += 1
            failures += not is_delta_matroid(M.twist(rng.randrange(1 << n))).verdict
    return _result("delta-matroids closed under twist", failures, checked, t0)


def strong_principal_minor(rng: random.Random, count: int = 100, max_n: int = 5) -> CheckResult:
    """max(M_A) equals the column-matroid bases of A for inv-symmetric A."""
    t0 = time.perf_counter()
    failures = 0
    for _ in range(count):
        A = random_alpha_symmetric(rng, INV, rng.randint(1, max_n))
        top = matrix_delta_matroid(A).max_sets()
        circuits_bases = matroid_from_subspace(kernel(A))[1]
        failures += not (top == column_bases(A) == circuits_bases)
    return _result("max(M_A) = M(A)", failures, count, t0)


def standard_representation_bridge(rng: random.Random, count: int = 50) -> CheckResult:
    """M_{R(B,id)} = M*X, and R(B,alpha) gives the same set system for every alpha."""
    t0 = time.perf_counter()
    failures = 0
    for _ in range(count):
        kind = rng.choice((GF2, GF3, GF4))
        r = rng.randint(1, 3)
        n = rng.randint(r, 6)
        raw = random_full_rank(rng, kind, r, n)
        std = standardize(raw)
        failures += not twist_matroid_check(std)
        systems = {matrix_delta_matroid(build_r_matrix(std, a)) for a in supported_automorphisms(kind)}
        failures += len(systems) != 1
        failures += kernel(std.B) != kernel(raw)
    return _result("standard representation bridge", failures, count, t0)


def subspace_laws(rng: random.Random, count: int = 100, max_n: int = 8) -> CheckResult:
    t0 = time.perf_counter()
    checked = failures = 0
    for _ in range(count):
        kind = rng.choice((GF2, GF3, GF4))
        n = rng.randint(1, max_n)
        A = random_matrix(rng, kind, rng.randint(0, n), n)
        L = kernel(A)
        perp = orthogonal_complement(L)
        checked += 3
        failures += L.dim + perp.dim != n
        failures += orthogonal_complement(perp) != L
        alpha = Automorphism.inversion(GF4) if kind is GF4 else Automorphism.identity(kind)
        failures += apply_automorphism_subspace(alpha, apply_automorphism_subspace(alpha, L)) != L
        if kind.order ** L.dim <= 4096:
            checked += 1
            failures += matroid_from_subspace(L)[1] != column_bases(A)
    return _result("subspace laws", failures, checked, t0)


Suite = Callable[[random.Random], CheckResult]

ACCEPTANCE: Dict[str, Suite] = {
    "tucker": tucker_identity,
    "automorphism_ppt": automorphism_commutes_with_ppt,
    "inv_symmetric_pu": inv_symmetric_is_pu,
    "alpha_symmetric_dm": alpha_symmetric_delta_matroid,
    "loop_complement": loop_complement_matches_identity_shift,
    "transport": transport_suite,
    "quaternary_vf_safe": quaternary_matroids_vf_safe,
    "u26_unsafe": u26_not_vf_safe,
    "bicycle_matroid": bicycle_matroid_identity,
    "bases_parity": bases_parity,
    "flip_axioms": flip_axioms,
}

INVARIANTS: Dict[str, Suite] = {
    "ppt_laws": ppt_laws,
    "twist_closure": twist_closure,
    "strong_principal_minor": strong_principal_minor,
    "standard_bridge": standard_representation_bridge,
    "subspace_laws": subspace_laws,
}


def run_all(seed: int = 0, names: Optional[List[str]] = None) -> List[CheckResult]:
    """Run suites in name order, each with its own generator derived from ``seed``."""
    suites = {**ACCEPTANCE, **INVARIANTS}
    selected = sorted(suites) if names is None else names
    results = []
    for name in selected:
        rng = random.Random(f"{seed}:{name}")
        results.append(suites[name](rng))
    return results
