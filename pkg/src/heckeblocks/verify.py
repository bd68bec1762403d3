"""Invariant suites per module, sized by ``max_n`` and seeded for reproducibility.

Each suite returns a list of :class:`~heckeblocks.acceptance.CheckResult`.
"""

from __future__ import annotations

import random
import time

import numpy as np

from .acceptance import CRITERIA, CheckResult, run_criterion
from .combinat import (
    BlockDescriptor,
    compositions,
    count_standard_tableaux,
    e_core,
    e_cores,
    e_weight,
    hook_lengths,
    lr_coefficient,
    partitions,
    remove_rim_hook,
    standard_tableaux,
)
from .exactfield import Poly, build_field, cyclotomic, poly_gcd, resultant, root_multiplicity
from .hecke import HeckeElement, murphy_element, regular_module
from .linalg import rank
from .modrep import (
    central_idempotents,
    count_blocks_oracle,
    module_vertex,
    sign_module,
    specht_module,
)
from .poincare import (
    block_vertex,
    is_ep_parabolic,
    standard_max_ep_parabolic,
    zP,
    zP_by_division,
    zP_floor_sum,
)
from .symgrp import (
    all_permutations,
    from_word,
    length,
    min_coset_reps,
    min_double_coset_reps,
    parabolic_elements,
    is_fixed_point_free,
    reduced_word,
)

__all__ = ["SUITES", "run_suite"]


def _check(name, fn):
    start = time.perf_counter()
    cases, bad = fn()
    return CheckResult(0, name, not bad, cases, bad, time.perf_counter() - start)


def random_rim_core(lam, e, rng):
    """e-core by removing rim e-hooks in a random order."""
    while True:
        cells = [c for c, h in hook_lengths(lam).items() if h == e]
        if not cells:
            return lam
        lam = remove_rim_hook(lam, *rng.choice(sorted(cells)))


def _random_poly(fs, deg, rng):
    return Poly([fs.element(rng.randrange(fs.p)) for _ in range(deg)] + [fs.one])


def suite_exactfield(max_n, rng):
    out = []

    def cyclo():
        bad = []
        for d in range(1, 61):
            prod = Poly([1])
            for dd in range(1, d + 1):
                if d % dd == 0:
                    prod = prod * cyclotomic(dd)
            if prod != Poly([-1] + [0] * (d - 1) + [1]):
                bad.append(d)
        return 60, bad

    def fields():
        bad, cases = [], 0
        for p, e in [(2, 3), (3, 3), (0, 2), (0, 3), (3, 4), (2, 5), (5, 4), (2, 7), (3, 2), (7, 3)]:
            fs = build_field(p, e)
            cases += 1
            if sum((fs.q ** i for i in range(e)), fs.zero) != 0 or fs.q * fs.q_inv != 1 or fs.q ** e != 1:
                bad.append((p, e))
        return cases, bad

    def multiplicity():
        bad = []
        fs = build_field(2, 3)
        for _ in range(50):
            f, g = _random_poly(fs, rng.randrange(1, 6), rng), _random_poly(fs, rng.randrange(1, 6), rng)
            lhs = root_multiplicity(f * g, fs.q_inv)
            if lhs != root_multiplicity(f, fs.q_inv) + root_multiplicity(g, fs.q_inv):
                bad.append((f, g))
        return 50, bad

    def resultants():
        bad = []
        fs = build_field(3, 2)
        for _ in range(60):
            f, g = _random_poly(fs, rng.randrange(1, 9), rng), _random_poly(fs, rng.randrange(1, 9), rng)
            if (resultant(f, g) == 0) != (poly_gcd(f, g).degree > 0):
                bad.append((f, g))
        return 60, bad

    for name, fn in [("cyclotomic products", cyclo), ("field invariants", fields),
                     ("root multiplicity additive", multiplicity), ("resultant vs gcd", resultants)]:
        out.append(_check(f"exactfield: {name}", fn))
    return out


def suite_combinat(max_n, rng):
    top = min(max(max_n, 1) + 4, 12)

    def cores():
        bad, cases = [], 0
        for e in (2, 3, 4, 5):
            for n in range(top + 1):
                for lam in partitions(n):
                    cases += 1
                    core = e_core(lam, e)
                    if core != random_rim_core(lam, e, rng) or e_core(core, e) != core:
                        bad.append((str(lam), e))
                    if n != sum(core) + e * e_weight(lam, e):
                        bad.append((str(lam), e, "size"))
        return cases, bad

    def hooks():
        bad, cases = [], 0
        for n in range(min(max_n, 8) + 1):
            for lam in partitions(n):
                cases += 1
                if len(standard_tableaux(lam)) != count_standard_tableaux(lam):
                    bad.append(str(lam))
        return cases, bad

    def branching():
        # restricting S^π to S_a × S_{n-a} keeps its dimension
        bad, cases = [], 0
        for n in range(1, min(max_n, 6) + 1):
            for pi in partitions(n):
                f = count_standard_tableaux(pi)
                for a in range(n + 1):
                    cases += 1
                    total = sum(
                        lr_coefficient(pi, lam, nu) * count_standard_tableaux(lam) * count_standard_tableaux(nu)
                        for lam in partitions(a)
                        for nu in partitions(n - a)
                    )
                    if total != f:
                        bad.append((str(pi), a))
        return cases, bad

    return [_check("combinat: core by abacus and by rim hooks", cores), _check("combinat: hook length formula", hooks),
            _check("combinat: Littlewood-Richardson branching", branching)]


def suite_symgrp(max_n, rng):
    n_top = min(max_n, 6)

    def words():
        bad = []
        for _ in range(200):
            n = rng.randrange(1, 8)
            w = rng.choice(all_permutations(n)) if n <= 5 else from_word([rng.randrange(1, n) for _ in range(20)], n)
            word = reduced_word(w)
            if from_word(word, n) != w or len(word) != length(w):
                bad.append(w)
        return 200, bad

    def cosets():
        bad, cases = [], 0
        for n in range(1, min(n_top, 5) + 1):
            group = all_permutations(n)
            for lam in compositions(n):
                cases += 1
                reps = min_coset_reps(lam, (n,))
                H = parabolic_elements(lam)
                covered = {}
                for d in reps:
                    for u in H:
                        w = u * d
                        if length(w) != length(u) + length(d) or w in covered:
                            bad.append((tuple(lam), d))
                        covered[w] = d
                if len(covered) != len(group):
                    bad.append((tuple(lam), "cover"))
        return cases, bad

    def double():
        bad, cases = [], 0
        for n in range(1, min(n_top, 5) + 1):
            group = all_permutations(n)
            comps = list(compositions(n))
            for lam in comps:
                for nu in comps:
                    cases += 1
                    A, B = parabolic_elements(lam), parabolic_elements(nu)
                    seen, count = set(), 0
                    for w in group:
                        if w not in seen:
                            count += 1
                            seen |= {a * w * b for a in A for b in B}
                    if count != len(min_double_coset_reps(lam, nu)):
                        bad.append((tuple(lam), tuple(nu)))
        return cases, bad

    return [_check("symgrp: reduced words", words), _check("symgrp: coset factorisation", cosets),
            _check("symgrp: double coset counts", double)]


def suite_poincare(max_n, rng):
    def forms():
        bad, cases = [], 0
        for e, p in [(3, 2), (2, 3), (4, 3), (2, 2), (3, 3), (2, 0)]:
            fs = build_field(p, e)
            for n in range(max(max_n, 1) * 5 + 1):
                cases += 1
                if not zP(n, e, p) == zP_floor_sum(n, e, p) == zP_by_division(n, fs):
                    bad.append((n, e, p))
        return cases, bad

    def vertices():
        bad, cases = [], 0
        for e, p in [(2, 0), (3, 2), (2, 3), (2, 2), (3, 3)]:
            for n in range(1, max(max_n, 1) * 4 + 1):
                for b in (BlockDescriptor(rho, (n - sum(rho)) // e, e) for rho in e_cores(n, e)):
                    cases += 1
                    v = block_vertex(b, p).left
                    if not is_ep_parabolic(v, e, p) or not is_fixed_point_free(v, sum(b.core)):
                        bad.append((n, str(b.core), e, p))
        return cases, bad

    return [_check("poincare: closed form, floor sum and division", forms),
            _check("poincare: block vertices e-p-parabolic", vertices)]


def suite_hecke(max_n, rng):
    n_top = max(min(max_n, 4), 2)

    def assoc():
        bad = []
        fs = build_field(2, 3)
        for _ in range(30):
            n = rng.randrange(2, n_top + 1)
            group = all_permutations(n)

            def rand_elt():
                return HeckeElement(fs, (n,), {rng.choice(group): fs.element((rng.randrange(2), rng.randrange(2))) for _ in range(3)})

            x, y, z = rand_elt(), rand_elt(), rand_elt()
            if (x * y) * z != x * (y * z) or (x * y).reverse() != y.reverse() * x.reverse():
                bad.append((x, y, z))
        return 30, bad

    def murphy():
        bad = []
        fs = build_field(3, 2)
        for n in range(1, n_top + 1):
            R = regular_module(n, fs)
            vecs = [R.to_vector(murphy_element(s, t, fs)) for lam in partitions(n)
                    for s in standard_tableaux(lam) for t in standard_tableaux(lam)]
            if len(vecs) != R.dim or rank(fs, np.stack(vecs)) != R.dim:
                bad.append(n)
        return n_top, bad

    return [_check("hecke: associativity and anti-automorphism", assoc), _check("hecke: Murphy basis", murphy)]


def suite_modrep(max_n, rng):
    n_top = min(max_n, 6)

    def specht():
        bad, cases = [], 0
        for e, p in [(2, 3), (3, 2), (2, 2)]:
            fs = build_field(p, e)
            for n in range(1, n_top + 1):
                for lam in partitions(n):
                    cases += 1
                    S = specht_module(lam, fs)
                    if S.dim != count_standard_tableaux(lam) or S.relation_failures():
                        bad.append((str(lam), e, p))
        return cases, bad

    def sign():
        bad, cases = [], 0
        for e, p in [(2, 0), (3, 2), (2, 3), (2, 2)]:
            fs = build_field(p, e)
            for n in range(1, n_top + 1):
                cases += 1
                if module_vertex(sign_module(n, fs)) != {standard_max_ep_parabolic(n, e, p)}:
                    bad.append((n, e, p))
        return cases, bad

    def census():
        bad, cases = [], 0
        for e, p in [(2, 3), (3, 2)]:
            fs = build_field(p, e)
            for n in range(1, min(n_top, 5) + 1):
                cases += 1
                k = len(central_idempotents(n, fs))
                if not k == len(e_cores(n, e)) == count_blocks_oracle(n, fs):
                    bad.append((n, e, p))
        return cases, bad

    return [_check("modrep: Specht relations and dimensions", specht), _check("modrep: sign vertices", sign),
            _check("modrep: block census", census)]


def suite_acceptance(max_n, rng):
    return [run_criterion(k) for k in sorted(CRITERIA)]


SUITES = {
    "exactfield": suite_exactfield,
    "combinat": suite_combinat,
    "symgrp": suite_symgrp,
    "poincare": suite_poincare,
    "hecke": suite_hecke,
    "modrep": suite_modrep,
    "acceptance": suite_acceptance,
}

MODULE_SUITES = ["exactfield", "combinat", "symgrp", "poincare", "hecke", "modrep"]


def run_suite(name: str, max_n: int = 5, seed: int = 0):
    """Run a named suite ("all" runs every module suite, not the acceptance run)."""
    rng = random.Random(seed)
    names = MODULE_SUITES if name == "all" else [name]
    results = []
    for nm in names:
        if nm not in SUITES:
            raise KeyError(nm)
        results.extend(SUITES[nm](max_n, rng))
    return results
