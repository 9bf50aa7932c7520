import pytest

from bbdgemm.bench import (
    BenchRecord,
    FallbackDisallowed,
    amdahl_max_speedup,
    emit_csv,
    format_report,
    read_csv,
    run_benchmark,
    run_correctness,
)
from bbdgemm.core import AccessKind, KernelShape, KernelSpec, Layout, kernel_name
from bbdgemm.runtime import KernelRegistry
from bbdgemm.vectorize import use_jit

from conftest import build_registry


def spec(layout, n, m, k, access):
    return KernelSpec(layout, KernelShape(n, m, k), *(AccessKind(ch) for ch in access))


S222 = spec(Layout.ColMajor, 2, 2, 2, "cis")


def record(name="bbdgemm_ColMajor_2_2_2_cis", speedup=2.0, fallback=False):
    return BenchRecord(
        name=name,
        E=100,
        reps=5,
        median_ns_batched=1000,
        median_ns_percall=int(1000 * speedup),
        speedup=speedup,
        max_abs_diff=1e-15,
        fallback_used=fallback,
    )


class TestCorrectness:
    def test_listing_shape_large_batch(self):
        registry = build_registry(S222)
        assert run_correctness(S222, 1000, seed=42, registry=registry) <= 1e-12

    def test_alpha_zero_beta_one_exact(self):
        registry = build_registry(S222)
        diff = run_correctness(S222, 100, seed=42, registry=registry, alpha=0.0, beta=1.0)
        assert diff == 0.0

    def test_empty_batch_vacuous(self):
        registry = build_registry(S222)
        assert run_correctness(S222, 0, seed=42, registry=registry) == 0.0

    def test_fallback_disallowed(self):
        with pytest.raises(FallbackDisallowed, match="dispatch table"):
            run_correctness(S222, 4, seed=1, registry=KernelRegistry({}))

    def test_fallback_allowed_is_exact(self):
        diff = run_correctness(
            S222, 4, seed=1, registry=KernelRegistry({}), allow_fallback=True
        )
        assert diff == 0.0

    def test_all_access_kind_triples_small(self):
        # one sweep over every triple at a tiny shape; the full lattice is
        # exercised by the acceptance suite
        with use_jit(False):
            for a in "csi":
                for b in "csi":
                    for c in "csi":
                        s = spec(Layout.ColMajor, 2, 1, 3, a + b + c)
                        registry = build_registry(s)
                        assert run_correctness(s, 17, seed=3, registry=registry) <= 1e-12


class TestBenchmark:
    def test_record_fields_and_gate(self):
        registry = build_registry(S222)
        with use_jit(False):
            rec, detail = run_benchmark(S222, 64, reps=3, registry=registry, seed=5)
        assert rec.name == kernel_name(S222)
        assert rec.E == 64 and rec.reps == 3
        assert rec.max_abs_diff <= 1e-12
        assert rec.fallback_used is False
        assert rec.speedup == rec.median_ns_percall / rec.median_ns_batched
        assert len(detail.batched_samples_ns) == 3
        assert len(detail.percall_samples_ns) == 3
        assert detail.batched_inner_iters >= 1
        assert detail.stddev_ns_batched >= 0.0

    def test_broken_kernel_refused(self):
        def wrong(E, alpha, A, lda, B, ldb, beta, C, ldc):
            size = 2 * ldc
            for e in range(E):
                C[e * size] = 1e9

        registry = KernelRegistry({kernel_name(S222): wrong})
        with pytest.raises(ValueError, match="refusing to benchmark"):
            run_benchmark(S222, 16, reps=2, registry=registry)

    def test_fallback_marked_when_allowed(self):
        with use_jit(False):
            rec, _ = run_benchmark(
                S222, 16, reps=2, registry=KernelRegistry({}), allow_fallback=True
            )
        assert rec.fallback_used is True

    def test_external_baseline(self):
        registry = build_registry(S222)
        with use_jit(False):
            rec, _ = run_benchmark(
                S222, 32, reps=2, registry=registry, baseline="external"
            )
        assert rec.median_ns_percall > 0

    def test_unknown_baseline(self):
        registry = build_registry(S222)
        with pytest.raises(ValueError, match="baseline"):
            run_benchmark(S222, 8, reps=2, registry=registry, baseline="fastest")

    def test_reps_must_be_positive(self):
        with pytest.raises(ValueError, match="reps"):
            run_benchmark(S222, 8, reps=0, registry=build_registry(S222))


class TestCsv:
    def test_empty_is_header_only(self, tmp_path):
        path = tmp_path / "empty.csv"
        emit_csv([], path)
        text = path.read_text(encoding="utf-8")
        assert text == (
            "name,E,reps,median_ns_batched,median_ns_percall,speedup,max_abs_diff,fallback_used\n"
        )

    def test_three_records_four_lines(self, tmp_path):
        path = tmp_path / "three.csv"
        emit_csv([record(), record(speedup=3.5), record(fallback=True)], path)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 4

    def test_lf_line_endings(self, tmp_path):
        path = tmp_path / "lf.csv"
        emit_csv([record()], path)
        raw = path.read_bytes()
        assert b"\r" not in raw

    def test_round_trip_equality(self, tmp_path):
        path = tmp_path / "roundtrip.csv"
        records = [
            record(),
            record(name="bbdgemm_ColMajor_20_9_10_csi", speedup=0.731528361),
            record(fallback=True),
        ]
        emit_csv(records, path)
        assert read_csv(path) == records

    def test_header_validated(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("a,b,c\n1,2,3\n", encoding="utf-8")
        with pytest.raises(ValueError, match="header"):
            read_csv(path)


class TestAmdahl:
    def test_published_fraction(self):
        assert abs(amdahl_max_speedup(0.5353) - 2.15) < 0.01

    def test_zero_fraction(self):
        assert amdahl_max_speedup(0.0) == 1.0

    def test_domain(self):
        with pytest.raises(ValueError):
            amdahl_max_speedup(1.0)
        with pytest.raises(ValueError):
            amdahl_max_speedup(-0.1)


class TestReport:
    def test_trend_note_when_small_shape_loses(self):
        records = [
            record(name="bbdgemm_ColMajor_2_2_2_cis", speedup=1.0),
            record(name="bbdgemm_ColMajor_20_9_10_csi", speedup=4.0),
        ]
        assert "did not beat" in format_report(records)

    def test_no_note_when_small_shape_wins(self):
        records = [
            record(name="bbdgemm_ColMajor_2_2_2_cis", speedup=9.0),
            record(name="bbdgemm_ColMajor_20_9_10_csi", speedup=1.1),
        ]
        assert "did not beat" not in format_report(records)

    def test_fallback_rows_excluded_from_trend(self):
        records = [
            record(name="bbdgemm_ColMajor_2_2_2_cis", speedup=1.0, fallback=True),
            record(name="bbdgemm_ColMajor_20_9_10_csi", speedup=4.0),
        ]
        report = format_report(records)
        assert "did not beat" not in report
        assert "[fallback]" in report

    def test_amdahl_line(self):
        report = format_report([record()], gemm_fraction=0.5353)
        assert "2.152" in report
