import numpy as np
import pytest

from bbdgemm import generate_kernel_source, kernel_name
from bbdgemm.core import AccessKind, matrix_span, operand_dims
from bbdgemm.runtime import BatchedOperand, KernelRegistry
from bbdgemm.vectorize import enable_jit


@pytest.fixture(autouse=True)
def _reset_jit_override():
    yield
    enable_jit(None)


def build_kernel(spec, max_dim=64):
    """Compile the generated source for *spec* and return the kernel callable."""
    source = generate_kernel_source(spec, max_dim=max_dim)
    namespace = {}
    exec(compile(source, f"<generated {kernel_name(spec)}>", "exec"), namespace)
    return namespace[kernel_name(spec)]


def build_registry(*specs, max_dim=64):
    return KernelRegistry({kernel_name(s): build_kernel(s, max_dim) for s in specs})


def make_operands(spec, E, rng):
    """Random operands at minimal leading dimensions.

    Indexed tables are permuted views into one pool so entries are disjoint
    but not in address order.
    """
    operands = []
    for which in "ABC":
        kind = spec.access(which)
        ld = operand_dims(spec, which).min_ld
        span = matrix_span(spec, which, ld)
        if kind is AccessKind.Constant:
            operands.append(BatchedOperand.constant(rng.uniform(-1.0, 1.0, span), ld))
        elif kind is AccessKind.Strided:
            operands.append(BatchedOperand.strided(rng.uniform(-1.0, 1.0, E * span), ld, span))
        else:
            pool = rng.uniform(-1.0, 1.0, max(E, 1) * span)
            order = rng.permutation(E) if E else []
            table = [pool[o * span : (o + 1) * span] for o in order]
            operands.append(BatchedOperand.indexed(table, ld))
    return tuple(operands)


def copy_operand(operand):
    if operand.kind is AccessKind.Indexed:
        return BatchedOperand.indexed([np.array(m) for m in operand.table], operand.ld)
    return BatchedOperand(
        kind=operand.kind, ld=operand.ld, data=np.array(operand.data), span=operand.span
    )


def output_elements(spec, E, c):
    """Flat array of every output element across the batch."""
    span = matrix_span(spec, "C", c.ld)
    if c.kind is AccessKind.Constant:
        return np.array(c.data[:span])
    if c.kind is AccessKind.Strided:
        return np.concatenate(
            [c.data[e * c.span : e * c.span + span] for e in range(E)]
        ) if E else np.empty(0)
    return np.concatenate([np.asarray(c.table[e][:span]) for e in range(E)]) if E else np.empty(0)
