"""Kernel source generation, manifests, dispatch tables, register pressure.

Each kernel is emitted as one Python module holding one fully-unrolled,
shape-specialized function: a single loop over the batch index ``e`` whose
body loads every operand element into a named local, runs every
multiply-accumulate in ascending-k order, applies alpha, then combines with
beta and stores.  There are no inner loops over the matrix dimensions and no
platform-specific constructs; the only concession to speed is the portable
:func:`bbdgemm.vectorize.vectorize_batch_loop` hint on the loop function.

Generation is deterministic: the same spec always yields byte-identical
source, and dispatch tables preserve manifest order.
"""

from __future__ import annotations

import os
import re
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .core import (
    AccessKind,
    KernelShape,
    KernelSpec,
    Layout,
    kernel_name,
    operand_dims,
)

__all__ = [
    "DEFAULT_MAX_DIM",
    "KernelManifest",
    "ManifestError",
    "MachineModel",
    "PressureReport",
    "parse_manifest",
    "generate_kernel_source",
    "generate_dispatch_source",
    "write_kernel_package",
    "estimate_pressure",
    "pressure_report_rows",
]

#: Per-dimension cap on generated shapes; unbounded unrolling is unusable.
DEFAULT_MAX_DIM = 64

_GENERATED_HEADER = "# Generated by genkernels. Do not edit by hand.\n"


class ManifestError(ValueError):
    """Manifest syntax/validation error with 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class KernelManifest:
    """Ordered, duplicate-free list of kernel specs to build."""

    entries: tuple[KernelSpec, ...]
    source: str = "<memory>"

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        seen = set()
        for spec in self.entries:
            name = kernel_name(spec)
            if name in seen:
                raise ValueError(f"duplicate kernel spec in manifest: {name}")
            seen.add(name)

    def names(self) -> tuple[str, ...]:
        return tuple(kernel_name(spec) for spec in self.entries)


_TOKEN = re.compile(r"\S+")


def parse_manifest(text: str, source: str = "<memory>") -> KernelManifest:
    """Parse manifest text: one ``<Layout> <N> <M> <K> <abc>`` spec per line.

    ``#`` starts a comment and blank lines are ignored.  Errors carry the
    offending line and column.
    """
    entries: list[KernelSpec] = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = list(_TOKEN.finditer(line))
        if not tokens:
            continue
        if len(tokens) != 5:
            column = tokens[5].start() + 1 if len(tokens) > 5 else len(line.rstrip()) + 1
            raise ManifestError(
                f"expected 5 fields (Layout N M K abc), got {len(tokens)}", lineno, column
            )
        layout_tok, n_tok, m_tok, k_tok, access_tok = tokens
        try:
            layout = Layout(layout_tok.group())
        except ValueError:
            raise ManifestError(
                f"unknown layout {layout_tok.group()!r}", lineno, layout_tok.start() + 1
            ) from None
        dims = []
        for label, tok in (("N", n_tok), ("M", m_tok), ("K", k_tok)):
            value_text = tok.group()
            if not value_text.isdigit():
                raise ManifestError(
                    f"{label} is not a decimal integer: {value_text!r}", lineno, tok.start() + 1
                )
            value = int(value_text)
            if value < 1:
                raise ManifestError(f"{label} must be >= 1", lineno, tok.start() + 1)
            dims.append(value)
        access_text = access_tok.group()
        if len(access_text) != 3 or any(ch not in "csi" for ch in access_text):
            raise ManifestError(
                f"access string must be three of c/s/i, got {access_text!r}",
                lineno,
                access_tok.start() + 1,
            )
        spec = KernelSpec(
            layout,
            KernelShape(*dims),
            *(AccessKind(ch) for ch in access_text),
        )
        name = kernel_name(spec)
        if name in seen:
            raise ManifestError(
                f"duplicate spec {name} (first on line {seen[name]})", lineno, tokens[0].start() + 1
            )
        seen[name] = lineno
        entries.append(spec)
    return KernelManifest(tuple(entries), source=source)


def _offset_expr(layout: Layout, r: int, c: int, ld_var: str) -> str:
    if layout is Layout.ColMajor:
        return f"({c}*{ld_var}+{r})"
    return f"({r}*{ld_var}+{c})"


def _load_expr(kind: AccessKind, operand: str, offset: str) -> str:
    if kind is AccessKind.Constant:
        return f"{operand}[{offset}]"
    if kind is AccessKind.Strided:
        return f"{operand}[e*size{operand}+{offset}]"
    return f"{operand}[e][{offset}]"


def generate_kernel_source(spec: KernelSpec, max_dim: int = DEFAULT_MAX_DIM) -> str:
    """Emit the Python module implementing *spec* as one unrolled kernel."""
    shape = spec.shape
    if max(shape.n, shape.m, shape.k) > max_dim:
        raise ValueError(
            f"shape {shape.n}x{shape.m}x{shape.k} exceeds the per-dimension bound {max_dim}; "
            f"raise max_dim only if the unrolled output size is acceptable"
        )
    name = kernel_name(spec)
    layout = spec.layout
    n, m, k = shape.n, shape.m, shape.k
    kinds = {"A": spec.access_a, "B": spec.access_b, "C": spec.access_c}

    out: list[str] = []
    out.append(_GENERATED_HEADER.rstrip("\n"))
    out.append("")
    out.append("from bbdgemm.vectorize import vectorize_batch_loop")
    out.append("")
    out.append("")
    out.append(f'@vectorize_batch_loop("{name}")')
    out.append(f"def {name}(E, alpha, A, lda, B, ldb, beta, C, ldc):")

    # Strided spans depend only on the leading dimensions; hoist them.
    for operand, ld_var in (("A", "lda"), ("B", "ldb"), ("C", "ldc")):
        if kinds[operand] is AccessKind.Strided:
            dims = operand_dims(spec, operand)
            count = dims.cols if layout is Layout.ColMajor else dims.rows
            out.append(f"    size{operand} = {count} * {ld_var}")

    # A constant across the batch only needs scalar slots: load it once.
    if kinds["A"] is AccessKind.Constant:
        for r in range(n):
            for c in range(k):
                offset = _offset_expr(layout, r, c, "lda")
                out.append(f"    vA_{r}_{c} = A[{offset}]")

    out.append("    for e in range(E):")
    if kinds["A"] is not AccessKind.Constant:
        for r in range(n):
            for c in range(k):
                offset = _offset_expr(layout, r, c, "lda")
                out.append(f"        vA_{r}_{c} = {_load_expr(kinds['A'], 'A', offset)}")
    for r in range(k):
        for c in range(m):
            offset = _offset_expr(layout, r, c, "ldb")
            out.append(f"        vB_{r}_{c} = {_load_expr(kinds['B'], 'B', offset)}")

    # Accumulators in column-outer order so the summation order (and hence
    # the bit pattern of the result) is fixed.
    for c in range(m):
        for r in range(n):
            out.append(f"        rC_{r}_{c} = 0.0")
            for t in range(k):
                out.append(f"        rC_{r}_{c} = vA_{r}_{t} * vB_{t}_{c} + rC_{r}_{c}")
            out.append(f"        rC_{r}_{c} = rC_{r}_{c} * alpha")
    for c in range(m):
        for r in range(n):
            offset = _offset_expr(layout, r, c, "ldc")
            target = _load_expr(kinds["C"], "C", offset)
            out.append(f"        vC_{r}_{c} = {target} if beta != 0.0 else 0.0")
            out.append(f"        rC_{r}_{c} = vC_{r}_{c} * beta + rC_{r}_{c}")
            out.append(f"        {target} = rC_{r}_{c}")
    out.append("")
    return "\n".join(out)


def generate_dispatch_source(manifest: KernelManifest) -> str:
    """Emit the dispatch module mapping kernel names to generated functions."""
    names = manifest.names()
    if len(set(names)) != len(names):  # KernelManifest already forbids this
        raise ValueError("manifest contains duplicate specs")
    out: list[str] = []
    out.append(_GENERATED_HEADER.rstrip("\n"))
    out.append('"""Dispatch table over the generated batched DGEMM kernels."""')
    out.append("")
    for name in names:
        out.append(f"from .{name} import {name}")
    if names:
        out.append("")
    out.append("")
    out.append("KERNELS = {")
    for name in names:
        out.append(f'    "{name}": {name},')
    out.append("}")
    out.append("")
    out.append("REGISTERED_NAMES = (")
    for name in names:
        out.append(f'    "{name}",')
    out.append(")")
    out.append("")
    return "\n".join(out)


def _write_atomic(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_kernel_package(
    manifest: KernelManifest, out_dir: str | Path, max_dim: int = DEFAULT_MAX_DIM
) -> list[Path]:
    """Write one module per kernel plus the dispatch ``__init__.py``.

    Files are written atomically (temp file + rename) so a crashed run never
    leaves a half-written module behind.  Returns the written paths.
    """
    out_path = Path(out_dir)
    out_path.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for spec in manifest.entries:
        module_path = out_path / f"{kernel_name(spec)}.py"
        _write_atomic(module_path, generate_kernel_source(spec, max_dim=max_dim))
        written.append(module_path)
    init_path = out_path / "__init__.py"
    _write_atomic(init_path, generate_dispatch_source(manifest))
    written.append(init_path)
    return written


@dataclass(frozen=True)
class MachineModel:
    """Register-file sizes the pressure estimator reasons about."""

    vector_regs: int = 32
    scalar_fp_regs: int = 32

    def __post_init__(self) -> None:
        if self.vector_regs < 1 or self.scalar_fp_regs < 1:
            raise ValueError("register counts must be positive")

    @classmethod
    def riscv_like(cls) -> "MachineModel":
        return cls(vector_regs=32, scalar_fp_regs=32)

    @classmethod
    def x86_64_like(cls) -> "MachineModel":
        # Same vector register count but a smaller scalar FP file.
        return cls(vector_regs=32, scalar_fp_regs=16)


@dataclass(frozen=True)
class PressureReport:
    """Peak liveness estimate for one kernel under one machine model."""

    scalar_live: int
    vector_live: int
    predicted_spills: int


def estimate_pressure(spec: KernelSpec, model: MachineModel) -> PressureReport:
    """Static register-pressure heuristic for the unrolled loop body.

    Every B element and every C accumulator is live as a vector value across
    the whole body; A elements join them unless A is constant, in which case
    they only occupy scalar slots.  Spills are whatever does not fit:
    ``max(0, vector_live - vector_regs) + max(0, scalar_live - scalar_fp_regs)``.

    This is a peak-liveness model of the generated schema, not a compiler
    simulation: rematerialization and temporaries are ignored.  Its contract
    is monotonicity in the shape and a zero-spill small-shape regime, not
    exact per-compiler spill counts.
    """
    shape = spec.shape
    n, m, k = shape.n, shape.m, shape.k
    if spec.access_a is AccessKind.Constant:
        scalar_live = n * k
        vector_live = k * m + n * m
    else:
        scalar_live = 0
        vector_live = n * k + k * m + n * m
    predicted = max(0, vector_live - model.vector_regs) + max(
        0, scalar_live - model.scalar_fp_regs
    )
    return PressureReport(
        scalar_live=scalar_live, vector_live=vector_live, predicted_spills=predicted
    )


def pressure_report_rows(manifest: KernelManifest, model: MachineModel) -> list[dict]:
    """Per-kernel pressure rows for the ``--emit-report`` CSV."""
    rows = []
    for spec in manifest.entries:
        report = estimate_pressure(spec, model)
        rows.append(
            {
                "name": kernel_name(spec),
                "n": spec.shape.n,
                "m": spec.shape.m,
                "k": spec.shape.k,
                "access": spec.access_string,
                "scalar_live": report.scalar_live,
                "vector_live": report.vector_live,
                "predicted_spills": report.predicted_spills,
            }
        )
    return rows
