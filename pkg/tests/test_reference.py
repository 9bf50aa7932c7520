import numpy as np
import pytest

from bbdgemm.core import AccessKind, KernelShape, KernelSpec, Layout
from bbdgemm.reference import GemmScalars, _dgemm_flat, batched_ref, dgemm_ref
from bbdgemm.runtime import BatchedOperand
from bbdgemm.vectorize import jit_available, jit_compile

from conftest import copy_operand, make_operands, output_elements


def spec(layout, n, m, k, access):
    return KernelSpec(layout, KernelShape(n, m, k), *(AccessKind(ch) for ch in access))


class TestDgemmRef:
    def test_scalar_product(self):
        c = np.array([999.0])
        dgemm_ref(Layout.ColMajor, 1, 1, 1, 1.0, np.array([2.0]), 1, np.array([3.0]), 1, 0.0, c, 1)
        assert c[0] == 6.0

    def test_alpha_zero_beta_one_is_identity(self):
        rng = np.random.default_rng(0)
        a, b = rng.uniform(-1, 1, 4), rng.uniform(-1, 1, 4)
        c = rng.uniform(-1, 1, 4)
        before = c.copy()
        dgemm_ref(Layout.ColMajor, 2, 2, 2, 0.0, a, 2, b, 2, 1.0, c, 2)
        assert np.array_equal(c, before)

    def test_two_by_two_known_product(self):
        # A = [[1,2],[3,4]], B = [[5,6],[7,8]]; expected A@B computed with a
        # separate dense matmul below and hand-checked: [[19,22],[43,50]].
        a2 = np.array([[1.0, 2.0], [3.0, 4.0]])
        b2 = np.array([[5.0, 6.0], [7.0, 8.0]])
        assert np.array_equal(a2 @ b2, np.array([[19.0, 22.0], [43.0, 50.0]]))
        a = a2.T.reshape(-1).copy()  # column-major flattening
        b = b2.T.reshape(-1).copy()
        c = np.zeros(4)
        dgemm_ref(Layout.ColMajor, 2, 2, 2, 1.0, a, 2, b, 2, 0.0, c, 2)
        assert np.array_equal(c, np.array([19.0, 43.0, 22.0, 50.0]))

    def test_row_major_matches_dense(self):
        rng = np.random.default_rng(3)
        n, m, k = 3, 4, 5
        a2 = rng.uniform(-1, 1, (n, k))
        b2 = rng.uniform(-1, 1, (k, m))
        c = np.zeros(n * m)
        dgemm_ref(
            Layout.RowMajor, n, m, k, 1.0, a2.reshape(-1).copy(), k,
            b2.reshape(-1).copy(), m, 0.0, c, m,
        )
        assert np.allclose(c.reshape(n, m), a2 @ b2, atol=1e-13)

    def test_padded_leading_dims(self):
        # same data written at ld > min rows must give the same result
        rng = np.random.default_rng(4)
        a2 = rng.uniform(-1, 1, (2, 3))
        b2 = rng.uniform(-1, 1, (3, 2))
        a_pad = np.zeros(5 * 3)
        for col in range(3):
            a_pad[col * 5 : col * 5 + 2] = a2[:, col]
        b_flat = b2.T.reshape(-1).copy()
        c_pad = np.full(7 * 2, -1.0)
        dgemm_ref(Layout.ColMajor, 2, 2, 3, 1.0, a_pad, 5, b_flat, 3, 0.0, c_pad, 7)
        got = np.array([[c_pad[col * 7 + r] for col in range(2)] for r in range(2)])
        assert np.allclose(got, a2 @ b2, atol=1e-13)

    def test_ascending_k_accumulation_order(self):
        # contributions [1e16, 1, -1e16]: ascending-order sum is exactly 0.0,
        # any other order leaves 1.0 behind
        a = np.array([1.0, 1.0, 1.0])
        b = np.array([1e16, 1.0, -1e16])
        c = np.array([123.0])
        dgemm_ref(Layout.ColMajor, 1, 1, 3, 1.0, a, 1, b, 3, 0.0, c, 1)
        assert c[0] == 0.0

    def test_beta_zero_overwrites_non_finite(self):
        a, b = np.array([2.0]), np.array([3.0])
        c = np.array([np.nan])
        dgemm_ref(Layout.ColMajor, 1, 1, 1, 1.0, a, 1, b, 1, 0.0, c, 1)
        assert c[0] == 6.0

    def test_ld_violation(self):
        with pytest.raises(ValueError, match="leading dimensions"):
            dgemm_ref(
                Layout.ColMajor, 2, 2, 2, 1.0, np.zeros(4), 1, np.zeros(4), 2, 0.0, np.zeros(4), 2
            )

    def test_bad_dimensions(self):
        with pytest.raises(ValueError, match="positive"):
            dgemm_ref(
                Layout.ColMajor, 0, 2, 2, 1.0, np.zeros(4), 2, np.zeros(4), 2, 0.0, np.zeros(4), 2
            )

    @pytest.mark.skipif(not jit_available(), reason="JIT backend not installed")
    def test_compiled_twin_is_bitwise_identical(self):
        rng = np.random.default_rng(11)
        jitted = jit_compile(_dgemm_flat)
        for layout_flag in (True, False):
            n, m, k = 4, 3, 5
            lda, ldb, ldc = (n, k, n) if layout_flag else (k, m, m)
            a = rng.uniform(-1, 1, 32)
            b = rng.uniform(-1, 1, 32)
            c1 = rng.uniform(-1, 1, 32)
            c2 = c1.copy()
            _dgemm_flat(layout_flag, n, m, k, 1.3, a, lda, b, ldb, 0.7, c1, ldc)
            jitted(layout_flag, n, m, k, 1.3, a, lda, b, ldb, 0.7, c2, ldc)
            assert np.array_equal(c1, c2)


class TestBatchedRef:
    def test_empty_batch_touches_nothing(self):
        s = spec(Layout.ColMajor, 2, 2, 2, "cis")
        a = BatchedOperand.constant(np.full(4, np.nan), 2)
        b = BatchedOperand.indexed([], 2)
        c = BatchedOperand.strided(np.full(8, 7.0), 2, 4)
        batched_ref(s, 0, GemmScalars(1.0, 0.0), a, b, c)
        assert np.all(c.data == 7.0)

    def test_constant_a_repeats_across_batch(self):
        s = spec(Layout.ColMajor, 2, 2, 2, "ccs")
        rng = np.random.default_rng(5)
        a = BatchedOperand.constant(rng.uniform(-1, 1, 4), 2)
        b = BatchedOperand.constant(rng.uniform(-1, 1, 4), 2)
        c = BatchedOperand.strided(np.zeros(12), 2, 4)
        batched_ref(s, 3, GemmScalars(1.0, 0.0), a, b, c)
        first = c.data[0:4].copy()
        assert np.array_equal(c.data[4:8], first)
        assert np.array_equal(c.data[8:12], first)

    def test_large_batch_matches_per_call_loop(self):
        s = spec(Layout.ColMajor, 2, 2, 2, "cis")
        rng = np.random.default_rng(42)
        a, b, c = make_operands(s, 1000, rng)
        c_loop = copy_operand(c)
        batched_ref(s, 1000, GemmScalars(1.0, 1.0), a, b, c)
        for e in range(1000):
            dgemm_ref(
                s.layout, 2, 2, 2, 1.0, a.data, a.ld, b.table[e], b.ld, 1.0,
                c_loop.data[e * 4 : e * 4 + 4], c_loop.ld,
            )
        assert np.array_equal(
            output_elements(s, 1000, c), output_elements(s, 1000, c_loop)
        )

    def test_single_element_is_bitwise_dgemm_ref(self):
        s = spec(Layout.ColMajor, 3, 4, 5, "iii")
        rng = np.random.default_rng(9)
        a, b, c = make_operands(s, 1, rng)
        c_direct = copy_operand(c)
        batched_ref(s, 1, GemmScalars(1.2, 0.4), a, b, c)
        dgemm_ref(
            s.layout, 3, 4, 5, 1.2, a.table[0], a.ld, b.table[0], b.ld, 0.4,
            c_direct.table[0], c_direct.ld,
        )
        assert np.array_equal(np.asarray(c.table[0]), np.asarray(c_direct.table[0]))

    def test_permuting_indexed_batch_permutes_outputs(self):
        s = spec(Layout.ColMajor, 2, 3, 2, "cii")
        rng = np.random.default_rng(13)
        E = 16
        a, b, c = make_operands(s, E, rng)
        c2 = copy_operand(c)
        batched_ref(s, E, GemmScalars(1.0, 0.0), a, b, c)
        perm = rng.permutation(E)
        b_perm = BatchedOperand.indexed([b.table[p] for p in perm], b.ld)
        c_perm = BatchedOperand.indexed([c2.table[p] for p in perm], c2.ld)
        batched_ref(s, E, GemmScalars(1.0, 0.0), a, b_perm, c_perm)
        for e in range(E):
            assert np.array_equal(np.asarray(c.table[e]), np.asarray(c2.table[e]))

    def test_repeated_indexed_input_entries_allowed(self):
        s = spec(Layout.ColMajor, 2, 2, 2, "ics")
        rng = np.random.default_rng(21)
        shared = rng.uniform(-1, 1, 4)
        a = BatchedOperand.indexed([shared, shared, shared], 2)
        b = BatchedOperand.constant(rng.uniform(-1, 1, 4), 2)
        c = BatchedOperand.strided(np.zeros(12), 2, 4)
        batched_ref(s, 3, GemmScalars(1.0, 0.0), a, b, c)
        assert np.array_equal(c.data[0:4], c.data[8:12])

    def test_kind_mismatch_rejected(self):
        s = spec(Layout.ColMajor, 2, 2, 2, "cis")
        a = BatchedOperand.strided(np.zeros(8), 2, 4)
        b = BatchedOperand.indexed([np.zeros(4)], 2)
        c = BatchedOperand.strided(np.zeros(4), 2, 4)
        with pytest.raises(ValueError, match="access kind"):
            batched_ref(s, 1, GemmScalars(1.0, 0.0), a, b, c)

    def test_short_pointer_table_rejected(self):
        s = spec(Layout.ColMajor, 2, 2, 2, "cis")
        a = BatchedOperand.constant(np.zeros(4), 2)
        b = BatchedOperand.indexed([np.zeros(4)], 2)
        c = BatchedOperand.strided(np.zeros(20), 2, 4)
        with pytest.raises(ValueError, match="table"):
            batched_ref(s, 5, GemmScalars(1.0, 0.0), a, b, c)
