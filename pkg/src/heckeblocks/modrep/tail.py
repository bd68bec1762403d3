"""Restriction of S^{τ̃} to H_a ⊗ H_m along the m-tail tableaux.

For τ ⊢ a and τ̃ = (τ, 1^m), the basis vectors m_t of S^{τ̃} indexed by
tableaux with a+1, ..., a+m in the last m rows span an H_{(a,m)}-submodule
isomorphic to S^τ ⊗ S^{(1^m)}.  When τ is an e-core the block idempotent of τ
in H_a cuts out a piece of S^{τ̃} of dimension exactly dim S^τ.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

import numpy as np

from ..combinat import (
    Partition,
    extend_partition,
    extend_tableau,
    is_e_core,
    m_tail_tableaux,
    standard_tableaux,
)
from ..exactfield import FieldSpec
from ..linalg import matrices_equal, rank
from .blocks import block_idempotents
from .modules import sign_module, tensor_module
from .specht import specht_module

__all__ = ["Report", "verify_submodule_tail", "TAIL_BOUND"]

TAIL_BOUND = 7


@dataclass
class Report:
    """Outcome of a verification, serialisable to JSON."""

    operation: str
    inputs: dict
    verdict: bool
    witness: dict | None = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, default=str)


def verify_submodule_tail(tau, m: int, fs: FieldSpec, bound: int = TAIL_BOUND) -> Report:
    tau = Partition(tau)
    a = tau.n
    n = a + m
    if n > bound:
        raise ValueError(f"|τ| + m = {n} exceeds bound {bound}")
    if a < 1:
        raise ValueError("τ must be nonempty")
    inputs = {"tau": str(tau), "m": m, "p": fs.p, "e": fs.e}
    big = specht_module(extend_partition(tau, m), fs)
    std_big = standard_tableaux(extend_partition(tau, m), bound=max(bound, n))
    pos = {t: k for k, t in enumerate(std_big)}
    small_std = standard_tableaux(tau, bound=max(bound, n))
    tail_idx = [pos[extend_tableau(t, m)] for t in small_std]
    if sorted(tail_idx) != sorted(pos[t] for t in m_tail_tableaux(tau, m, bound=max(bound, n))):
        raise AssertionError("m-tail tableaux do not match the extended tableaux")
    others = [k for k in range(big.dim) if k not in set(tail_idx)]
    gens_mu = [i for i in range(1, n) if i != a]
    details = {"dim_big": big.dim, "dim_tail": len(tail_idx)}

    # (i) closure under H_(a,m)
    for i in gens_mu:
        block = big.gens[i][np.ix_(tail_idx, others)] if others else None
        if block is not None and not fs.is_zero_array(block).all():
            r, c = np.argwhere(~fs.is_zero_array(block))[0]
            return Report(
                "verify_submodule_tail", inputs, False,
                {"check": "closure", "generator": i, "tableau": str(std_big[tail_idx[r]]), "leaks_to": str(std_big[others[c]])},
                details,
            )

    # (ii) the tail submodule matches S^τ ⊗ sign
    if m:
        target = tensor_module(specht_module(tau, fs), sign_module(m, fs))
    else:
        target = specht_module(tau, fs)
    for i in gens_mu:
        sub = big.gens[i][np.ix_(tail_idx, tail_idx)]
        if not matrices_equal(sub, target.gens[i]):
            return Report("verify_submodule_tail", inputs, False, {"check": "isomorphism", "generator": i}, details)

    # (iii) for an e-core τ, the τ-block idempotent of H_a cuts out dim S^τ
    if is_e_core(tau, fs.e):
        idem = [e for label, e in block_idempotents(a, fs) if label.core == tau]
        if len(idem) != 1:
            raise AssertionError(f"no weight-0 block idempotent for {tau}")
        # embed H_a ⊆ H_n by extending permutations
        mat = fs.zeros((big.dim, big.dim))
        for w, c in idem[0].terms.items():
            mat = fs.add(mat, fs.scale(big.word_matrix(w.extend(n)), c))
        r = rank(fs, mat)
        details["summand_dim"] = r
        if r != len(small_std):
            return Report(
                "verify_submodule_tail", inputs, False,
                {"check": "summand_dimension", "rank": r, "expected": len(small_std)},
                details,
            )
    return Report("verify_submodule_tail", inputs, True, None, details)
