"""Restrict S^(τ,1^m) to H_a ⊗ H_m and watch the tableaux with a+1..a+m in the
last m rows span a copy of S^τ ⊗ sign.  For an e-core τ the block idempotent of
τ cuts out exactly dim S^τ.

    python3 demos/specht_tail.py
"""

from heckeblocks import build_field, is_e_core, partitions, verify_submodule_tail

fs = build_field(3, 2)
for a in range(1, 4):
    for tau in partitions(a):
        for m in range(3):
            rep = verify_submodule_tail(tau, m, fs)
            core = "core" if is_e_core(tau, fs.e) else "    "
            print(f"tau={str(tau):6} m={m} {core} {'ok  ' if rep.verdict else 'FAIL'} {rep.details}")
