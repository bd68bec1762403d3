"""Blocks of H_n for small n: count them from the centre, label them by e-cores,
then compare the predicted vertex of each block with what the trace test finds.

    python3 demos/block_census.py
"""

from heckeblocks import (
    block_idempotents,
    block_vertex,
    build_field,
    count_blocks_oracle,
    e_cores,
)
from heckeblocks.modrep import bimodule_block, is_bimodule_rel_projective

for e, p in [(2, 3), (3, 2)]:
    fs = build_field(p, e)
    print(f"e={e}, p={p}, field {fs}")
    for n in range(1, 5):
        blocks = block_idempotents(n, fs)
        print(f"  H_{n}: {len(blocks)} blocks, {len(e_cores(n, e))} e-cores, {count_blocks_oracle(n, fs)} from the centre")
        if n > 3:
            continue
        for label, _ in blocks:
            lam = block_vertex(label, p).left
            B = bimodule_block(n, label, fs)
            ok = is_bimodule_rel_projective(B, lam, lam)
            print(f"    core {label.core}, weight {label.weight}: dim {B.dim}, vertex {lam}, trace test {'passes' if ok else 'FAILS'}")
