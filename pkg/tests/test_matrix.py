import itertools

import pytest
from hypothesis import given, strategies as st

from dmflip import linalg
from dmflip.errors import PivotUndefinedError, StructuralError
from dmflip.field import GF2, GF3, GF4, Automorphism, FieldElement
from dmflip.matrix import (
    GroundSet,
    LabeledMatrix,
    add_identity_on,
    apply_automorphism_matrix,
    det,
    is_alpha_symmetric,
    is_principally_unimodular,
    ppt,
    schur_complement,
    submatrix,
)

from conftest import INV, alpha_symmetric_matrices, laplace_det, square_matrices

ID4 = Automorphism.identity(GF4)


def m4(rows, labels="ab"):
    return LabeledMatrix.from_rows(GF4, rows, tuple(labels))


EXAMPLE = m4([["1", "w"], ["w2", "0"]])


def test_submatrix_examples():
    A = m4([["1", "w"], ["w2", "0"]])
    empty = submatrix(A, ())
    assert empty.shape == (0, 0)
    assert submatrix(A, ["a", "b"], ["a", "b"]) == A
    single = submatrix(A, ["a"], ["b"])
    assert single.shape == (1, 1) and single["a", "b"] == FieldElement(GF4, 2)


def test_submatrix_unknown_label():
    with pytest.raises(StructuralError):
        EXAMPLE.submatrix(["z"])


def test_det_examples():
    assert det(m4([], "")).value == 1
    assert det(LabeledMatrix.identity(GF4, GroundSet(("a", "b")))).value == 1
    A = m4([["w", "1"], ["1", "w2"]])
    assert det(A).value == 0
    assert laplace_det(A.data, GF4) == 0


def test_det_requires_square():
    R = LabeledMatrix.from_rows(GF4, [["1", "1"]], ["r"], ["a", "b"])
    with pytest.raises(StructuralError):
        R.det()


@given(square_matrices(max_n=6))
def test_det_matches_cofactor_expansion(A):
    assert A.det().value == laplace_det(A.data, A.kind)


def test_ppt_examples():
    assert ppt(EXAMPLE, ()) == EXAMPLE
    one = LabeledMatrix.from_rows(GF3, [["2"]], ["u"])
    assert ppt(one, ["u"]) == LabeledMatrix.from_rows(GF3, [["2"]], ["u"])
    assert ppt(m4([["w"]], "u"), "u") == m4([["w2"]], "u")
    assert ppt(EXAMPLE, ["a"]) == m4([["1", "w"], ["w2", "1"]])


def test_ppt_example_principal_minors_by_tucker():
    pivoted = EXAMPLE.ppt("a")
    base = EXAMPLE.principal_minors()
    for y, d in pivoted.principal_minors().items():
        assert GF4.mul[d][base[1]] == base[1 ^ y]


def test_ppt_singular_pivot_is_typed():
    with pytest.raises(PivotUndefinedError) as info:
        EXAMPLE.ppt("b")
    assert info.value.labels == ("b",)
    assert not isinstance(info.value, StructuralError)


def test_schur_complement_examples():
    assert schur_complement(EXAMPLE, ()) == EXAMPLE
    assert schur_complement(EXAMPLE, ["a", "b"]).shape == (0, 0)
    assert schur_complement(EXAMPLE, "a") == m4([["1"]], "b")


def _exchange_holds(A, B, x):
    """B maps (Ax on X, x off X) to (x on X, Ax off X) for every basis vector x."""
    n = len(A.rows)
    kind = A.kind
    cols = [[A.data[i][k] for i in range(n)] for k in range(n)]
    for k in range(n):
        e = [int(i == k) for i in range(n)]
        y = cols[k]
        u = [y[i] if (x >> i) & 1 else e[i] for i in range(n)]
        v = [e[i] if (x >> i) & 1 else y[i] for i in range(n)]
        Bu = [row[0] for row in linalg.matmul(B.data, [[t] for t in u], kind)]
        if Bu != v:
            return False
    return True


@given(square_matrices(max_n=5, min_n=1), st.data())
def test_ppt_is_partial_inversion(A, data):
    feasible = [x for x, d in A.principal_minors().items() if d]
    x = data.draw(st.sampled_from(feasible))
    assert _exchange_holds(A, A.ppt(x), x)


@given(square_matrices(max_n=5, min_n=1))
def test_ppt_involution_and_tucker(A):
    minors = A.principal_minors()
    for x, dx in minors.items():
        if not dx:
            continue
        B = A.ppt(x)
        assert B.ppt(x) == A
        for y, dy in B.principal_minors().items():
            assert A.kind.mul[dy][dx] == minors[x ^ y]
        schur = A.schur_complement(x)
        assert A.det().value == A.kind.mul[dx][schur.det().value]


@given(square_matrices(max_n=5, min_n=1))
def test_transpose_law(A):
    for x, d in A.principal_minors().items():
        if d:
            assert -(A.ppt(x).transpose()) == (-A.transpose()).ppt(x)


@given(square_matrices(kinds=(GF4,), max_n=5, min_n=1))
def test_automorphism_commutes_with_ppt(A):
    for x, d in A.principal_minors().items():
        if d:
            for alpha in (ID4, INV):
                assert A.ppt(x).apply_automorphism(alpha) == A.apply_automorphism(alpha).ppt(x)


def test_add_identity_examples():
    assert add_identity_on(EXAMPLE, ()) == EXAMPLE
    assert EXAMPLE.add_identity_on("a").add_identity_on("a") == EXAMPLE
    assert LabeledMatrix.from_rows(GF2, [["0"]], ["u"]).add_identity_on("u") == LabeledMatrix.from_rows(GF2, [["1"]], ["u"])
    assert EXAMPLE.add_identity_on("b") == m4([["1", "w"], ["w2", "1"]])


def test_apply_automorphism_matrix_examples():
    assert apply_automorphism_matrix(ID4, EXAMPLE) == EXAMPLE
    assert EXAMPLE.apply_automorphism(INV).apply_automorphism(INV) == EXAMPLE
    assert apply_automorphism_matrix(INV, m4([["w"]], "u")) == m4([["w2"]], "u")
    with pytest.raises(StructuralError):
        apply_automorphism_matrix(Automorphism.identity(GF2), EXAMPLE)


def test_alpha_symmetry_examples():
    assert is_alpha_symmetric(m4([["0", "w"], ["w2", "1"]]), INV)
    assert is_alpha_symmetric(m4([["1", "0"], ["0", "0"]]), INV)
    assert not is_alpha_symmetric(m4([["0", "w"], ["w", "0"]]), INV)
    # identity-symmetric means skew-symmetric
    skew = LabeledMatrix.from_rows(GF3, [["0", "1"], ["2", "0"]], "ab")
    assert skew.is_alpha_symmetric(Automorphism.identity(GF3))
    assert not LabeledMatrix.from_rows(GF3, [["1", "1"], ["2", "0"]], "ab").is_alpha_symmetric(Automorphism.identity(GF3))


@given(alpha_symmetric_matrices(max_n=5))
def test_ppt_preserves_alpha_symmetry(A):
    for x, d in A.principal_minors().items():
        if d:
            assert A.ppt(x).is_alpha_symmetric(INV)


@given(square_matrices(kinds=(GF2, GF3), max_n=5))
def test_prime_fields_are_pu(A):
    assert is_principally_unimodular(A)


@given(alpha_symmetric_matrices(max_n=6))
def test_inv_symmetric_is_pu(A):
    assert is_principally_unimodular(A)
    assert set(A.principal_minors().values()) <= {0, 1}


def test_non_symmetric_gf4_can_fail_pu():
    assert not is_principally_unimodular(m4([["w"]], "u"))


def test_principal_minors_cover_all_subsets():
    A = m4([["1", "w", "0"], ["w2", "0", "1"], ["0", "1", "1"]], "abc")
    minors = A.principal_minors()
    assert sorted(minors) == list(range(8))
    for x, d in minors.items():
        assert d == A.principal_minor(x)


def test_label_aware_equality():
    A = m4([["1", "w"], ["w2", "0"]])
    B = A.reorder(["b", "a"])
    assert B.data == ((0, 3), (2, 1))
    assert A == B and hash(A) == hash(B)
    assert A.ppt("a") == B.ppt("a")
    assert A != m4([["1", "w"], ["w2", "1"]])


def test_ground_set_rejects_duplicates_and_bad_labels():
    with pytest.raises(StructuralError):
        GroundSet(("a", "a"))
    for bad in ("", "-", "a b", "a,b"):
        with pytest.raises(StructuralError):
            GroundSet((bad,))


def test_entries_must_match_field():
    with pytest.raises(StructuralError):
        LabeledMatrix(GF2, GroundSet(("a",)), GroundSet(("a",)), [[2]])
