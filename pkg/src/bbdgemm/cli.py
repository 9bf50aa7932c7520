"""Command-line entry points: ``genkernels``, ``proxy``, and ``bench``."""

from __future__ import annotations

import argparse
import csv
import os
import sys
from pathlib import Path

from . import bench as bench_mod
from . import codegen, proxy as proxy_mod
from .core import kernel_name
from .runtime import default_registry, load_kernel_dir


def genkernels_main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="genkernels",
        description="Generate fully-unrolled batched DGEMM kernels from a manifest.",
    )
    parser.add_argument("--manifest", required=True, help="manifest file, one spec per line")
    parser.add_argument("--out-dir", required=True, help="directory for the generated package")
    parser.add_argument(
        "--max-dim",
        type=int,
        default=codegen.DEFAULT_MAX_DIM,
        help="per-dimension shape bound (default %(default)s)",
    )
    parser.add_argument(
        "--emit-report",
        metavar="CSV-PATH",
        help="also write a per-kernel register-pressure report",
    )
    args = parser.parse_args(argv)

    text = Path(args.manifest).read_text(encoding="utf-8")
    try:
        manifest = codegen.parse_manifest(text, source=args.manifest)
        written = codegen.write_kernel_package(manifest, args.out_dir, max_dim=args.max_dim)
    except ValueError as error:
        print(f"genkernels: {error}", file=sys.stderr)
        return 1
    print(f"generated {len(manifest.entries)} kernels into {args.out_dir}")
    if args.emit_report:
        rows = codegen.pressure_report_rows(manifest, codegen.MachineModel())
        with open(args.emit_report, "w", encoding="utf-8", newline="") as handle:
            writer = csv.DictWriter(
                handle,
                fieldnames=[
                    "name",
                    "n",
                    "m",
                    "k",
                    "access",
                    "scalar_live",
                    "vector_live",
                    "predicted_spills",
                ],
                lineterminator="\n",
            )
            writer.writeheader()
            writer.writerows(rows)
        print(f"pressure report written to {args.emit_report}")
    return 0


def proxy_main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="proxy",
        description="Mini local-integration proxy: per-cell reference loop vs batched kernels.",
    )
    parser.add_argument("--cells", type=int, default=10000)
    parser.add_argument("--timesteps", type=int, default=6)
    parser.add_argument("--mode", choices=["scalar", "vector"], default="vector")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--dump", metavar="PATH", help="write the output tensors to PATH")
    parser.add_argument(
        "--chain", metavar="PATH", help="chain file overriding the built-in two-step chain"
    )
    parser.add_argument(
        "--compare",
        metavar="PATH",
        help="compare this run's dump against an existing dump (requires --dump)",
    )
    parser.add_argument(
        "--tol", type=float, default=1e-6, help="tolerance for --compare (default %(default)s)"
    )
    args = parser.parse_args(argv)

    try:
        kwargs = {}
        if args.chain:
            chain = proxy_mod.parse_chain(Path(args.chain).read_text(encoding="utf-8"))
            kwargs["chain"] = chain
            dims = proxy_mod.infer_tensor_dims(chain)
            if dims is not None:
                kwargs["rows"], kwargs["cols"] = dims
        config = proxy_mod.ProxyConfig(
            cells=args.cells,
            timesteps=args.timesteps,
            mode=args.mode,
            seed=args.seed,
            **kwargs,
        )
    except ValueError as error:
        print(f"proxy: {error}", file=sys.stderr)
        return 1
    registry = default_registry()
    fallback_before = registry.fallback_count
    state = proxy_mod.run_proxy(config, registry=registry)
    fallbacks = registry.fallback_count - fallback_before
    print(
        f"ran {config.timesteps} timesteps over {config.cells} cells in {config.mode} mode "
        f"(chain of {len(config.chain)}, {config.components} components, seed {config.seed})"
    )
    if config.mode == "vector" and fallbacks:
        print(f"warning: {fallbacks} batched calls used the reference fallback")
    if args.dump:
        proxy_mod.dump_state(state, args.dump)
        print(f"dump written to {args.dump}")
        if args.compare:
            result = proxy_mod.compare_dumps(args.dump, args.compare, args.tol)
            verdict = "PASS" if result.passed else "FAIL"
            print(
                f"compare vs {args.compare}: max|diff| = {result.max_abs_diff:.3e} "
                f"(tol {args.tol:g}) {verdict}"
            )
            return 0 if result.passed else 2
    elif args.compare:
        print("proxy: --compare requires --dump", file=sys.stderr)
        return 1
    return 0


def _pin_to_one_cpu() -> None:
    # keeps timing samples on one core; silently skipped where unsupported
    try:
        cpus = os.sched_getaffinity(0)
        os.sched_setaffinity(0, {min(cpus)})
    except (AttributeError, OSError):
        pass


def bench_main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="bench",
        description="Correctness-gated benchmark of batched kernels vs per-call GEMM loops.",
    )
    parser.add_argument("--manifest", required=True, help="manifest of specs to benchmark")
    parser.add_argument("--batch", type=int, default=10000, help="batch size E (default %(default)s)")
    parser.add_argument("--reps", type=int, default=5, help="samples per timing (default %(default)s)")
    parser.add_argument("--baseline", choices=["naive", "external"], default="naive")
    parser.add_argument("--csv", metavar="PATH", help="write records to PATH")
    parser.add_argument(
        "--allow-fallback",
        action="store_true",
        help="benchmark specs missing from the dispatch table via the reference fallback",
    )
    parser.add_argument(
        "--kernel-dir",
        metavar="PATH",
        help="use kernels generated into PATH instead of the installed set",
    )
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args(argv)

    text = Path(args.manifest).read_text(encoding="utf-8")
    try:
        manifest = codegen.parse_manifest(text, source=args.manifest)
    except ValueError as error:
        print(f"bench: {error}", file=sys.stderr)
        return 1
    registry = load_kernel_dir(args.kernel_dir) if args.kernel_dir else default_registry()
    _pin_to_one_cpu()

    records = []
    details = []
    for spec in manifest.entries:
        try:
            record, detail = bench_mod.run_benchmark(
                spec,
                args.batch,
                args.reps,
                registry=registry,
                baseline=args.baseline,
                seed=args.seed,
                allow_fallback=args.allow_fallback,
            )
        except (bench_mod.FallbackDisallowed, ValueError) as error:
            print(f"bench: {kernel_name(spec)}: {error}", file=sys.stderr)
            return 1
        records.append(record)
        details.append(detail)
    print(bench_mod.format_report(records, details))
    if args.csv:
        bench_mod.emit_csv(records, args.csv)
        print(f"csv written to {args.csv}")
    return 0
