"""Fourier matrices, exact minor tests, and exhaustive nonvanishing
verification.

The p x p Fourier matrix has entries omega^(jm) for a primitive p-th
root of unity omega, either the abstract cyclotomic root (characteristic
zero) or a concrete generator of order p in F_{q^r}.  A minor for rows A
and columns B factors as a nonzero Vandermonde term times the
substituted Schur polynomial, so the minor vanishes exactly when the
spec vector of (A, B) is zero in the relevant quotient:

  * char 0:   all p coordinates equal (zero mod the cyclotomic);
  * char q:   the vector evaluates to zero at omega in F_{q^r}.

verify_all_minors sweeps every square minor, level by level in the size
k, walking only canonical pairs: A up to translation, B up to affine
maps b -> l*b + c with l drawn from the scaling group (all units in
char 0, the subgroup generated by q in char q).  Each such map scales
the minor by a unit or applies a field automorphism, so vanishing is
constant on orbits; the per-level identity

    (#A reps x orbit size) x (sum of B orbit sizes) = C(p,k)^2

is asserted on every run.  det_over_field is the independent oracle:
plain Gaussian elimination on the explicitly constructed submatrix.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from multiprocessing import get_context

from .cyclo_factor import FieldSetup, build_field
from .rings import FFElem
from .schur import (
    WorkBudgetError,
    check_pair,
    determinant_plan,
    elem_sym_vectors,
    hom_sym_vectors,
    schur_eval_ones,
    spec_from_plan,
    spec_vector,
)

ROUTINE_P_LIMIT = 11
EXTENDED_P_LIMIT = 13
UNCERTAINTY_BUDGET = 10**7


@dataclass
class MinorReport:
    """Outcome of an exhaustive minor sweep.

    minors_checked counts raw (A, B) pairs covered through the last
    completed level; orbits_pruned is how many of those were settled by
    orbit reasoning rather than a direct spec computation.
    """

    p: int
    q: int | None
    verified: bool
    first_violation: tuple | None
    minors_checked: int
    orbits_pruned: int
    pairs_computed: int
    wall_time: float

    def to_dict(self) -> dict:
        viol = self.first_violation
        return {
            "p": self.p,
            "q": "char 0" if self.q is None else self.q,
            "verified": self.verified,
            "first_violation": None
            if viol is None
            else {"A": list(viol[0]), "B": list(viol[1])},
            "minors_checked": self.minors_checked,
            "orbits_pruned": self.orbits_pruned,
            "pairs_computed": self.pairs_computed,
        }


def fourier_matrix(p: int, setup: FieldSetup | None = None):
    """The full p x p matrix of omega powers.

    Finite characteristic: entries are FFElem.  Char 0: entries are the
    exponents jm mod p (the matrix of a formal root), mainly for tests.
    """
    if setup is None:
        return [[(j * m) % p for m in range(p)] for j in range(p)]
    if setup.p != p:
        raise ValueError("setup was built for a different p")
    F = setup.field
    return [
        [FFElem(F, setup.omega_pow((j * m) % p)) for m in range(p)]
        for j in range(p)
    ]


def fourier_submatrix(p: int, setup: FieldSetup, A, B):
    A, B = check_pair(A, B, p)
    F = setup.field
    return [
        [FFElem(F, setup.omega_pow((a * b) % p)) for b in B] for a in A
    ]


def det_over_field(M) -> FFElem:
    """Exact determinant by Gaussian elimination in F_{q^r}."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    fld = M[0][0].field
    for row in M:
        for x in row:
            if x.field != fld:
                raise ValueError("mixed moduli in matrix")
    W = [list(row) for row in M]
    det = FFElem(fld, fld.one)
    sign = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if W[r][c]), None)
        if piv is None:
            return FFElem(fld, fld.zero)
        if piv != c:
            W[c], W[piv] = W[piv], W[c]
            sign = -sign
        pivval = W[c][c]
        det = det * pivval
        inv = pivval.inverse()
        for r in range(c + 1, n):
            if W[r][c]:
                f = W[r][c] * inv
                W[r] = [x - f * y for x, y in zip(W[r], W[c])]
    if sign < 0:
        det = -det
    return det


def eval_spec_at_omega(vec, setup: FieldSetup) -> tuple:
    """Evaluate a spec vector at omega; returns a field element tuple."""
    F = setup.field
    acc = F.zero
    for t, c in enumerate(vec):
        if c:
            acc = F.add(acc, F.smul(c, setup.omega_pow(t)))
    return acc


def minor_vanishes(A, B, p: int, setup: FieldSetup | None = None) -> bool:
    """Whether the Fourier minor with rows A, columns B is zero."""
    A, B = check_pair(A, B, p)
    if setup is None:
        vec = spec_vector(A, B, p)
        return len(set(vec)) == 1
    vec = spec_vector(A, B, p, setup.q)
    return not any(eval_spec_at_omega(vec, setup))


def scaling_group(p: int, q: int | None = None) -> list:
    """Unit scalings that preserve minor vanishing: all units in char 0,
    the subgroup generated by q mod p otherwise."""
    if q is None:
        return list(range(1, p))
    g = {1}
    x = q % p
    while x not in g:
        g.add(x)
        x = x * q % p
    return sorted(g)


def translation_canonical(A, p: int) -> tuple:
    return min(tuple(sorted((a + c) % p for a in A)) for c in range(p))


def affine_canonical(B, p: int, scalars) -> tuple:
    return min(
        tuple(sorted((l * b + c) % p for b in B))
        for l in scalars
        for c in range(p)
    )


def affine_orbit(B, p: int, scalars) -> set:
    return {
        tuple(sorted((l * b + c) % p for b in B))
        for l in scalars
        for c in range(p)
    }


def level_reps(p: int, k: int, scalars) -> tuple:
    """Canonical representatives at size k: translation reps for rows,
    affine reps (with orbit sizes) for columns.  Asserts full coverage."""
    a_reps = []
    b_reps = []
    covered_b = 0
    for S in combinations(range(p), k):
        if translation_canonical(S, p) == S:
            a_reps.append(S)
        if affine_canonical(S, p, scalars) == S:
            n = len(affine_orbit(S, p, scalars))
            b_reps.append((S, n))
            covered_b += n
    a_orbit = p if k < p else 1
    total = comb(p, k)
    if len(a_reps) * a_orbit != total or covered_b != total:
        raise AssertionError(f"orbit coverage failed at level {k}")
    return a_reps, b_reps


def _a_table(p: int, k: int, a_reps) -> list:
    return [(A, schur_eval_ones(A), determinant_plan(A)) for A in a_reps]


def _scan_chunk(args) -> list:
    """Worker: test every (A rep, B rep) pair in the chunk; return the
    vanishing ones.  B is outer so its h/e vectors are built once."""
    p, q, a_data, b_list, opow = args
    need_h = any(plan[0] == "h" for _, _, plan in a_data)
    need_e = any(plan[0] == "e" for _, _, plan in a_data)
    out = []
    for B in b_list:
        hvecs = hom_sym_vectors(B, p, p - 1, q) if need_h else None
        evecs = elem_sym_vectors(B, p, q) if need_e else None
        for A, ratio, plan in a_data:
            vec = spec_from_plan(plan, hvecs, evecs, p, q, ratio)
            if q is None:
                if len(set(vec)) == 1:
                    out.append((A, B))
            else:
                r = len(opow[0])
                acc = [0] * r
                for t, c in enumerate(vec):
                    if c:
                        w = opow[t]
                        for i in range(r):
                            acc[i] += c * w[i]
                if all(x % q == 0 for x in acc):
                    out.append((A, B))
    return out


def _check_budget(p: int, extended: bool, force: bool) -> None:
    if p <= ROUTINE_P_LIMIT:
        return
    if p <= EXTENDED_P_LIMIT and (extended or force):
        return
    if force:
        return
    flag = "--extended" if p <= EXTENDED_P_LIMIT else "--force"
    raise WorkBudgetError(
        f"p={p} exceeds the routine limit {ROUTINE_P_LIMIT}; rerun with {flag}"
    )


def verify_all_minors(
    p: int,
    q: int | None = None,
    threads: int = 1,
    extended: bool = False,
    force: bool = False,
    seed: int = 0,
) -> MinorReport:
    """Exhaustively verify nonvanishing of all square Fourier minors.

    Levels k = 1..p run in ascending order over canonical pairs; on a
    violation the level is finished, first_violation is the
    lexicographically least vanishing pair (canonical pairs are the lex
    minima of their orbits, so no expansion is needed), and higher
    levels are skipped.  Identical output for any thread count.
    """
    _check_budget(p, extended, force)
    t0 = time.perf_counter()
    setup = build_field(p, q, seed) if q is not None else None
    opow = (
        [setup.omega_pow(t) for t in range(p)] if setup is not None else None
    )
    scalars = scaling_group(p, q)
    checked = 0
    computed = 0
    violation = None
    for k in range(1, p + 1):
        a_reps, b_reps = level_reps(p, k, scalars)
        a_data = _a_table(p, k, a_reps)
        b_list = [B for B, _ in b_reps]
        computed += len(a_data) * len(b_list)
        nw = max(1, min(threads, len(b_list)))
        if nw == 1:
            found = _scan_chunk((p, q, a_data, b_list, opow))
        else:
            step = (len(b_list) + nw - 1) // nw
            jobs = [
                (p, q, a_data, b_list[i : i + step], opow)
                for i in range(0, len(b_list), step)
            ]
            with get_context("fork").Pool(nw) as pool:
                found = [v for part in pool.map(_scan_chunk, jobs) for v in part]
        checked += comb(p, k) ** 2
        if found:
            violation = min(found)
            break
    return MinorReport(
        p=p,
        q=q,
        verified=violation is None,
        first_violation=violation,
        minors_checked=checked,
        orbits_pruned=checked - computed,
        pairs_computed=computed,
        wall_time=time.perf_counter() - t0,
    )


def uncertainty_min(p: int, q: int, budget: int = UNCERTAINTY_BUDGET) -> int:
    """min over nonzero g in F_q^p of ||g||_0 + ||F g||_0, brute force.

    Needs omega of order p inside F_q itself (r = 1).
    """
    import numpy as np

    setup = build_field(p, q)
    if setup.r != 1:
        raise ValueError(
            f"q={q} has order {setup.r} mod {p}; the matrix must live over F_q"
        )
    if q**p > budget:
        raise WorkBudgetError(f"{q}^{p} vectors exceed the budget of {budget}")
    w = setup.omega[0]
    M = np.array(
        [[pow(w, (j * m) % p, q) for m in range(p)] for j in range(p)],
        dtype=np.int64,
    )
    best = 2 * p
    chunk = 1 << 13
    buf = []

    def flush(buf, best):
        G = np.array(buf, dtype=np.int64)
        s = np.count_nonzero(G, axis=1) + np.count_nonzero(
            (G @ M.T) % q, axis=1
        )
        return min(best, int(s.min()))

    vectors = product(range(q), repeat=p)
    next(vectors)
    for g in vectors:
        buf.append(g)
        if len(buf) == chunk:
            best = flush(buf, best)
            buf = []
    if buf:
        best = flush(buf, best)
    return best
