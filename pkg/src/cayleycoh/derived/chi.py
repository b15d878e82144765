"""Euler-characteristic consistency of exact sequences and self-dualities."""
from __future__ import annotations

from typing import Sequence

from ..cg import default_probes
from .complexes import FormalComplex, euler
from .presets import exact_sequences, obj, self_dualities


def probe_objects() -> list[FormalComplex]:
    return [obj(p) for p in default_probes()]


def sequence_defects(seq: Sequence[FormalComplex], probes=None) -> list[int]:
    """sum_i (-1)^i chi(T, X_i) for each probe T; all zero for an exact sequence."""
    probes = probe_objects() if probes is None else probes
    return [
        sum((-1 if i % 2 else 1) * euler(T, X) for i, X in enumerate(seq)) for T in probes
    ]


def sequence_consistent(seq: Sequence[FormalComplex], probes=None) -> bool:
    return not any(sequence_defects(seq, probes))


def same_kclass(X: FormalComplex, Y: FormalComplex, probes=None) -> bool:
    probes = probe_objects() if probes is None else probes
    return all(euler(T, X) == euler(T, Y) for T in probes)


def chi_report() -> dict[str, bool]:
    out = {name: sequence_consistent(seq) for name, seq in exact_sequences().items()}
    out.update({name: same_kclass(a, b) for name, (a, b) in self_dualities().items()})
    return out
