import numpy as np
import pytest

from bbdgemm.core import AccessKind, KernelShape, KernelSpec, Layout
from bbdgemm.proxy import (
    ChainStep,
    ProxyConfig,
    build_state,
    compare_dumps,
    compute_local_integration_batched,
    compute_local_integration_ref,
    default_chain,
    dump_state,
    load_dump,
    parse_chain,
    run_proxy,
    run_proxy_state,
)
from bbdgemm.reference import dgemm_ref
from bbdgemm.runtime import KernelRegistry, ScratchBuffer, ensure_scratch
from bbdgemm.vectorize import use_jit

from conftest import build_registry


def spec(layout, n, m, k, access):
    return KernelSpec(layout, KernelShape(n, m, k), *(AccessKind(ch) for ch in access))


def small_chain():
    """Two-step chain shaped like the default one but cheap to compile."""
    return (
        ChainStep(spec(Layout.ColMajor, 4, 2, 3, "cis"), "op1", "qin", "scratch", 1.0, 0.0),
        ChainStep(spec(Layout.ColMajor, 3, 2, 2, "sci"), "scratch", "op2", "qout", 1.0, 1.0),
    )


def small_config(**overrides):
    defaults = dict(
        cells=23, timesteps=2, components=3, rows=3, cols=2, chain=small_chain(),
        mode="scalar", seed=7,
    )
    defaults.update(overrides)
    return ProxyConfig(**defaults)


def small_registry():
    return build_registry(*(step.spec for step in small_chain()))


def qout_snapshot(state):
    return np.stack(
        [np.stack([np.array(c) for c in cell.matrices]) for cell in state.qout]
    )


class TestConfigValidation:
    def test_default_config_is_valid(self):
        config = ProxyConfig()
        assert config.cells == 10000 and config.timesteps == 6
        assert config.components == 4 and (config.rows, config.cols) == (10, 9)
        assert config.scratch_per_element == 180

    def test_unknown_binding(self):
        bad = (ChainStep(spec(Layout.ColMajor, 3, 2, 3, "cii"), "op1", "qin", "bogus", 1.0, 0.0),)
        with pytest.raises(ValueError, match="unknown binding"):
            small_config(chain=bad)

    def test_binding_kind_mismatch(self):
        bad = (ChainStep(spec(Layout.ColMajor, 3, 2, 3, "iii"), "op1", "qin", "qout", 1.0, 0.0),)
        with pytest.raises(ValueError, match="requires a Constant operand"):
            small_config(chain=bad)

    def test_tensor_dims_must_match(self):
        bad = (ChainStep(spec(Layout.ColMajor, 3, 5, 3, "cii"), "op1", "qin", "qout", 1.0, 0.0),)
        with pytest.raises(ValueError, match="tensor components are 3x2"):
            small_config(chain=bad)

    def test_scratch_read_before_write(self):
        bad = (ChainStep(spec(Layout.ColMajor, 3, 2, 2, "sci"), "scratch", "op2", "qout", 1.0, 0.0),)
        with pytest.raises(ValueError, match="read before being written"):
            small_config(chain=bad)

    def test_scratch_read_window_bounded(self):
        bad = (
            ChainStep(spec(Layout.ColMajor, 4, 2, 3, "cis"), "op1", "qin", "scratch", 1.0, 0.0),
            ChainStep(spec(Layout.ColMajor, 5, 2, 2, "sci"), "scratch", "op2", "qout", 1.0, 1.0),
        )
        with pytest.raises(ValueError, match="exceeds written"):
            small_config(chain=bad)

    def test_output_cannot_alias_input(self):
        bad = (ChainStep(spec(Layout.ColMajor, 3, 2, 3, "cii"), "op1", "qout", "qout", 1.0, 0.0),)
        with pytest.raises(ValueError, match="aliases"):
            small_config(chain=bad)

    def test_output_must_be_writable_binding(self):
        bad = (ChainStep(spec(Layout.ColMajor, 3, 2, 3, "cii"), "op1", "qout", "qin", 1.0, 0.0),)
        with pytest.raises(ValueError, match="must bind scratch or qout"):
            small_config(chain=bad)

    def test_constant_dims_must_be_consistent(self):
        bad = (
            ChainStep(spec(Layout.ColMajor, 3, 2, 3, "cii"), "op1", "qin", "qout", 1.0, 0.0),
            ChainStep(spec(Layout.ColMajor, 3, 2, 2, "cii"), "op1", "qin", "qout", 1.0, 1.0),
        )
        with pytest.raises(ValueError, match="used as 3x2 but earlier as 3x3"):
            small_config(chain=bad)

    def test_default_chain_shapes(self):
        chain = default_chain()
        assert chain[0].spec.name == "bbdgemm_ColMajor_20_9_10_cis"
        assert chain[1].spec.name == "bbdgemm_ColMajor_10_9_9_sci"
        assert chain[0].beta == 0.0 and chain[1].beta == 1.0


class TestReferenceVariant:
    def test_degenerate_single_cell_equals_one_gemm(self):
        chain = (ChainStep(spec(Layout.ColMajor, 2, 2, 2, "cii"), "op1", "qin", "qout", 1.0, 0.0),)
        config = ProxyConfig(
            cells=1, timesteps=1, components=1, rows=2, cols=2, chain=chain,
            mode="scalar", seed=42,
        )
        state = build_state(config)
        expected = np.zeros(4)
        dgemm_ref(
            Layout.ColMajor, 2, 2, 2, 1.0,
            state.constants["op1"], 2,
            state.qin[0].component(0), 2,
            0.0, expected, 2,
        )
        compute_local_integration_ref(config, state)
        assert np.array_equal(state.qout[0].component(0), expected)

    def test_deterministic_across_runs(self):
        first = run_proxy(small_config())
        second = run_proxy(small_config())
        assert np.array_equal(qout_snapshot(first), qout_snapshot(second))

    def test_two_timesteps_compose(self):
        double = run_proxy(small_config(timesteps=2))
        config1 = small_config(timesteps=1)
        carried = build_state(config1)
        run_proxy_state(config1, carried)
        run_proxy_state(config1, carried)
        assert np.array_equal(qout_snapshot(double), qout_snapshot(carried))


class TestBatchedVariant:
    def test_matches_reference_bitwise_interpreted(self):
        registry = small_registry()
        ref_state = run_proxy(small_config(mode="scalar"))
        with use_jit(False):
            vec_state = run_proxy(small_config(mode="vector"), registry=registry)
        assert registry.fallback_count == 0
        assert np.array_equal(qout_snapshot(ref_state), qout_snapshot(vec_state))

    def test_matches_reference_under_jit(self):
        registry = small_registry()
        ref_state = run_proxy(small_config(mode="scalar"))
        with use_jit(True):
            vec_state = run_proxy(small_config(mode="vector"), registry=registry)
        diff = np.max(np.abs(qout_snapshot(ref_state) - qout_snapshot(vec_state)))
        assert diff < 1e-6
        assert diff == 0.0  # same summation order on both paths

    def test_single_cell_matches_reference(self):
        registry = small_registry()
        ref_state = run_proxy(small_config(cells=1, mode="scalar"))
        with use_jit(False):
            vec_state = run_proxy(small_config(cells=1, mode="vector"), registry=registry)
        diff = np.max(np.abs(qout_snapshot(ref_state) - qout_snapshot(vec_state)))
        assert diff <= 1e-12

    def test_one_call_per_chain_step_per_component(self):
        calls = []

        class CountingRegistry(KernelRegistry):
            def lookup(self, name):
                calls.append(name)
                return super().lookup(name)

        registry = CountingRegistry(
            {name: small_registry().lookup(name) for name in small_registry().names()}
        )
        config = small_config(mode="vector", timesteps=2)
        with use_jit(False):
            run_proxy(config, registry=registry)
        expected = config.timesteps * config.components * len(config.chain)
        assert len(calls) == expected

    def test_undersized_scratch_is_checked(self):
        config = small_config(mode="vector")
        state = build_state(config)
        scratch = ScratchBuffer()
        with pytest.raises(ValueError, match="scratch undersized"):
            compute_local_integration_batched(config, state, scratch)

    def test_scratch_reused_across_timesteps(self):
        config = small_config(mode="vector", timesteps=3)
        state = build_state(config)
        scratch = ScratchBuffer()
        registry = small_registry()
        with use_jit(False):
            for _ in range(config.timesteps):
                ensure_scratch(scratch, config.cells, config.scratch_per_element)
                backing = scratch.array
                compute_local_integration_batched(config, state, scratch, registry=registry)
                assert scratch.array is backing

    def test_phase_log_records_both_phases(self):
        state = run_proxy(small_config(timesteps=2))
        assert state.phase_log == [
            "local_integration", "neighboring_integration",
        ] * 2


class TestState:
    def test_component_matrices_allocated_independently(self):
        state = build_state(small_config(cells=4))
        addresses = {
            cell.component(i).ctypes.data
            for cell in state.qin + state.qout
            for i in range(len(cell.matrices))
        }
        assert len(addresses) == 2 * 4 * 3  # two tensors, four cells, three components

    def test_seed_controls_state(self):
        a = build_state(small_config(seed=1))
        b = build_state(small_config(seed=2))
        assert not np.array_equal(a.qin[0].component(0), b.qin[0].component(0))


class TestDumps:
    def test_self_compare_is_zero_and_passes(self, tmp_path):
        state = run_proxy(small_config())
        first, second = tmp_path / "a.bin", tmp_path / "b.bin"
        dump_state(state, first)
        dump_state(state, second)
        result = compare_dumps(first, second, tol=0.0)
        assert result.max_abs_diff == 0.0
        assert result.passed

    def test_round_trip_bit_exact(self, tmp_path):
        state = run_proxy(small_config())
        path = tmp_path / "dump.bin"
        dump_state(state, path)
        cells, components, rows, cols, data = load_dump(path)
        config = state.config
        assert (cells, components, rows, cols) == (
            config.cells, config.components, config.rows, config.cols,
        )
        for e in range(cells):
            for s in range(components):
                flat = state.qout[e].component(s)
                dense = flat.reshape(cols, rows).T  # column-major at minimal ld
                assert np.array_equal(data[e, s], dense)
        second = tmp_path / "again.bin"
        dump_state(state, second)
        assert path.read_bytes() == second.read_bytes()

    def test_shape_mismatch_raises(self, tmp_path):
        a, b = tmp_path / "a.bin", tmp_path / "b.bin"
        dump_state(run_proxy(small_config(cells=3)), a)
        dump_state(run_proxy(small_config(cells=4)), b)
        with pytest.raises(ValueError, match="shape mismatch"):
            compare_dumps(a, b, tol=1e-6)

    def test_scalar_vs_vector_dumps_within_tolerance(self, tmp_path):
        registry = small_registry()
        a, b = tmp_path / "scalar.bin", tmp_path / "vector.bin"
        dump_state(run_proxy(small_config(mode="scalar")), a)
        with use_jit(False):
            dump_state(run_proxy(small_config(mode="vector"), registry=registry), b)
        result = compare_dumps(a, b, tol=1e-6)
        assert result.passed

    def test_truncated_dump_rejected(self, tmp_path):
        path = tmp_path / "bad.bin"
        path.write_bytes(b"BBDQ\x01")
        with pytest.raises(ValueError, match="truncated"):
            load_dump(path)

    def test_bad_magic_rejected(self, tmp_path):
        state = run_proxy(small_config(cells=2))
        path = tmp_path / "dump.bin"
        dump_state(state, path)
        corrupted = b"XXXX" + path.read_bytes()[4:]
        path.write_bytes(corrupted)
        with pytest.raises(ValueError, match="magic"):
            load_dump(path)


class TestChainFile:
    CHAIN_TEXT = """
    # projection then accumulate
    ColMajor 4 2 3 cis op1 qin scratch 1.0 0.0
    ColMajor 3 2 2 sci scratch op2 qout 1.0 1.0
    """

    def test_parse_round_trip(self):
        steps = parse_chain(self.CHAIN_TEXT)
        assert steps == small_chain()

    def test_field_count_error(self):
        with pytest.raises(ValueError, match="expected 10 fields"):
            parse_chain("ColMajor 4 2 3 cis op1 qin scratch 1.0\n")

    def test_empty_chain_error(self):
        with pytest.raises(ValueError, match="no steps"):
            parse_chain("# nothing\n")

    def test_bad_scalar_error(self):
        with pytest.raises(ValueError, match="alpha/beta"):
            parse_chain("ColMajor 4 2 3 cis op1 qin scratch one 0.0\n")
