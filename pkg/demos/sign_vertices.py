"""Vertices of the sign module S^(1^n), found by brute force and compared with
the standard maximal e-p-parabolic subgroup read off from the e-p-adic digits of n.

    python3 demos/sign_vertices.py
"""

from heckeblocks import build_field, ep_adic_expansion, module_vertex, sign_module, standard_max_ep_parabolic, zP

for e, p in [(2, 0), (3, 2), (2, 3), (2, 2)]:
    fs = build_field(p, e)
    print(f"e={e} p={p}")
    for n in range(1, 7):
        found = module_vertex(sign_module(n, fs))
        x = ep_adic_expansion(n, e, p)
        digits = [x.a_minus1] + list(x.digits)
        print(f"  n={n}  digits {digits}  z(P_n)={zP(n, e, p)}  vertex {sorted(map(str, found))}"
              f"  predicted {standard_max_ep_parabolic(n, e, p)}")
