"""Schur polynomials attached to row index sets, and their monomial
substitution into Z[X]/(X^p - 1).

A k-element index set A = {a_1 < ... < a_k} inside {0..p-1} carries the
partition lambda_i = a_{k+1-i} - (k-i).  The generalized Vandermonde
determinant with row exponents A is the plain Vandermonde times the
Schur polynomial s_lambda, so a Fourier minor for rows A and columns B
vanishes exactly when s_lambda does after substituting x_l -> X^(b_l)
with X a p-th root of unity.

The substitution is carried in a length-p "spec" vector c with
c[t] = sum of Schur coefficients c_mu over monomials with
<mu, B> = t mod p.  Two routes compute it:

  * ssyt_expand enumerates semistandard tableaux (the oracle route);
  * spec_vector evaluates a Jacobi-Trudi determinant over the cyclic
    ring, using complete homogeneous or elementary symmetric entries,
    whichever gives the smaller matrix.

Every spec vector is checked on the spot against the closed form
s_lambda(1,...,1) = prod (a_j - a_i) / prod (j - i): entries are
nonnegative and sum to it (mod q on the reduced route).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

DEFAULT_SSYT_CAP = 10**6


class WorkBudgetError(Exception):
    """Raised when an enumeration would exceed its configured budget."""


def check_index_set(A, p: int) -> tuple:
    t = tuple(sorted(A))
    if len(t) == 0:
        raise ValueError("index set must be nonempty")
    if len(set(t)) != len(t):
        raise ValueError("index set has repeated entries")
    if t[0] < 0 or t[-1] >= p:
        raise ValueError(f"index set entries must lie in [0, {p})")
    return t


def check_pair(A, B, p: int) -> tuple:
    A = check_index_set(A, p)
    B = check_index_set(B, p)
    if len(A) != len(B):
        raise ValueError("row and column sets must have equal size")
    return A, B


def partition_of(A) -> tuple:
    """lambda_i = a_(k+1-i) - (k-i), weakly decreasing, possibly zero."""
    A = tuple(sorted(A))
    k = len(A)
    return tuple(A[k - 1 - i] - (k - 1 - i) for i in range(k))


def conjugate_partition(lam) -> tuple:
    if not lam or lam[0] == 0:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def schur_eval_ones(A) -> int:
    """s_lambda(1,...,1) = prod_{i<j} (a_j - a_i) / prod_{i<j} (j - i)."""
    A = tuple(sorted(A))
    k = len(A)
    num = 1
    den = 1
    for i in range(k):
        for j in range(i + 1, k):
            num *= A[j] - A[i]
            den *= j - i
    if num % den:
        raise AssertionError("hook product did not divide")
    return num // den


def ssyt_expand(A, cap: int = DEFAULT_SSYT_CAP) -> dict:
    """Monomial expansion of s_lambda as {mu: coefficient}.

    Enumerates semistandard tableaux of shape lambda with entries in
    1..k: rows weakly increase, columns strictly increase.  mu is the
    content vector (multiplicity of each value).  Refuses when the
    closed-form count exceeds cap.
    """
    A = tuple(sorted(A))
    k = len(A)
    total = schur_eval_ones(A)
    if total > cap:
        raise WorkBudgetError(
            f"schur expansion has {total} tableaux, above the cap of {cap}"
        )
    lam = [x for x in partition_of(A) if x > 0]
    out: dict = {}
    if not lam:
        out[(0,) * k] = 1
        return out

    def fill_rows(i, prev_row, weight):
        if i == len(lam):
            key = tuple(weight)
            out[key] = out.get(key, 0) + 1
            return
        length = lam[i]

        def fill_cells(j, row):
            if j == length:
                fill_rows(i + 1, row, weight)
                return
            lo = row[j - 1] if j else 1
            if prev_row is not None:
                lo = max(lo, prev_row[j] + 1)
            for v in range(lo, k + 1):
                row.append(v)
                weight[v - 1] += 1
                fill_cells(j + 1, row)
                weight[v - 1] -= 1
                row.pop()

        fill_cells(0, [])

    fill_rows(0, None, [0] * k)
    if sum(out.values()) != total:
        raise AssertionError("tableau count mismatch")
    return out


def spec_from_ssyt(A, B, p: int, cap: int = DEFAULT_SSYT_CAP) -> list:
    """Spec vector via tableau enumeration (oracle route)."""
    A, B = check_pair(A, B, p)
    vec = [0] * p
    for mu, c in ssyt_expand(A, cap).items():
        t = sum(m * b for m, b in zip(mu, B)) % p
        vec[t] += c
    return vec


def _rot(v: list, b: int, p: int) -> list:
    if not b:
        return v
    return v[p - b :] + v[: p - b]


def hom_sym_vectors(B, p: int, N: int, q: int | None = None) -> list:
    """h_0..h_N of the monomials X^b, b in B, in Z[X]/(X^p - 1).

    Built by the one-variable-at-a-time recurrence
    h^(l)_n = h^(l-1)_n + X^(b_l) h^(l)_(n-1), which needs only
    rotations and additions.
    """
    H = [[0] * p for _ in range(N + 1)]
    H[0][0] = 1
    for b in B:
        bb = b % p
        for n in range(1, N + 1):
            R = _rot(H[n - 1], bb, p)
            cur = H[n]
            if q is None:
                H[n] = [x + y for x, y in zip(cur, R)]
            else:
                H[n] = [(x + y) % q for x, y in zip(cur, R)]
    return H


def elem_sym_vectors(B, p: int, q: int | None = None) -> list:
    """e_0..e_k of the monomials X^b, b in B, in Z[X]/(X^p - 1)."""
    k = len(B)
    E = [[0] * p for _ in range(k + 1)]
    E[0][0] = 1
    for m, b in enumerate(B, 1):
        bb = b % p
        for n in range(min(m, k), 0, -1):
            R = _rot(E[n - 1], bb, p)
            cur = E[n]
            if q is None:
                E[n] = [x + y for x, y in zip(cur, R)]
            else:
                E[n] = [(x + y) % q for x, y in zip(cur, R)]
    return E


def determinant_plan(A) -> tuple:
    """Determinant plan for an index set: (route, size, index matrix).

    Route 'h' uses complete homogeneous entries (k x k matrix), route
    'e' elementary ones (lambda_1 x lambda_1, chosen when smaller),
    route '1' is the empty partition.  Index matrix entries point into
    the h or e list; -1 marks a structural zero.  Entry index 0 is the
    ring unit on both routes, and no index exceeds p - 1 when the set
    lives in [0, p), so h vectors up to degree p - 1 always suffice.
    """
    lam = partition_of(A)
    k = len(lam)
    lam1 = lam[0]
    if lam1 == 0:
        return ("1", 0, None)
    if lam1 < k:
        lamc = conjugate_partition(lam)
        s = lam1
        idx = [
            [
                (lamc[i] - i + j)
                if 0 <= lamc[i] - i + j <= k
                else -1
                for j in range(s)
            ]
            for i in range(s)
        ]
        return ("e", s, idx)
    s = k
    idx = [
        [(lam[i] - i + j) if lam[i] - i + j >= 0 else -1 for j in range(s)]
        for i in range(s)
    ]
    return ("h", s, idx)


def _det_ring(vecs, idx, s: int, p: int, q: int | None) -> list:
    """Determinant of (vecs[idx[i][j]])_{i,j<s} over the cyclic ring.

    Column-subset dynamic programming: level r maps each (r+1)-subset
    of columns to the minor on rows 0..r.  Index 0 is the unit, so its
    products are free; -1 entries are zero.
    """
    from .rings import cyc_mul

    if s == 1:
        e = idx[0][0]
        return list(vecs[e]) if e >= 0 else [0] * p
    level = {}
    for j in range(s):
        e = idx[0][j]
        level[1 << j] = list(vecs[e]) if e >= 0 else None
    for r in range(1, s):
        nlevel = {}
        row = idx[r]
        for cols in combinations(range(s), r + 1):
            acc = None
            for m, j in enumerate(cols):
                e = row[j]
                if e < 0:
                    continue
                sub = level[(sum(1 << c for c in cols)) ^ (1 << j)]
                if sub is None:
                    continue
                term = sub if e == 0 else cyc_mul(vecs[e], sub, p)
                if acc is None:
                    acc = [0] * p
                if (r + m) % 2 == 0:
                    acc = [x + y for x, y in zip(acc, term)]
                else:
                    acc = [x - y for x, y in zip(acc, term)]
            if acc is not None:
                if q is not None:
                    acc = [x % q for x in acc]
                if not any(acc):
                    acc = None
            nlevel[sum(1 << c for c in cols)] = acc
        level = nlevel
    out = level[(1 << s) - 1]
    return out if out is not None else [0] * p


def spec_from_plan(plan, hvecs, evecs, p: int, q: int | None = None,
                   ratio: int | None = None) -> list:
    """Spec vector from a precomputed plan and h/e vectors of B.

    The batched entry point: callers sweeping many A against one B
    build hvecs (degree p-1) and evecs once and reuse them here.  The
    mass check runs whenever ratio is supplied.
    """
    route, s, idx = plan
    if route == "1":
        vec = [0] * p
        vec[0] = 1 % q if q is not None else 1
        return vec
    vecs = evecs if route == "e" else hvecs
    vec = _det_ring(vecs, idx, s, p, q)
    if ratio is not None:
        if q is None:
            if any(x < 0 for x in vec) or sum(vec) != ratio:
                raise AssertionError("spec vector fails the mass check")
        else:
            if sum(vec) % q != ratio % q:
                raise AssertionError("spec vector fails the mass check mod q")
    return vec


def spec_vector(A, B, p: int, q: int | None = None, _ratio: int | None = None) -> list:
    """Spec vector of (A, B) via the Jacobi-Trudi determinant.

    Exact integers when q is None, residues mod q otherwise.  The
    result is checked against the closed-form mass before returning.
    """
    A, B = check_pair(A, B, p)
    k = len(A)
    plan = determinant_plan(A)
    route, s, idx = plan
    if k == 1 and route != "1":
        vec = [0] * p
        vec[(A[0] * B[0]) % p] = 1 % q if q is not None else 1
        return vec
    if route == "e":
        hvecs = None
        evecs = elem_sym_vectors(B, p, q)
    elif route == "h":
        N = max(max(row) for row in idx)
        hvecs = hom_sym_vectors(B, p, N, q)
        evecs = None
    else:
        hvecs = evecs = None
    ratio = schur_eval_ones(A) if _ratio is None else _ratio
    return spec_from_plan(plan, hvecs, evecs, p, q, ratio)


@dataclass(frozen=True)
class SchurSpec:
    """Exact substitution profile of a pair (A, B) at prime p."""

    p: int
    A: tuple
    B: tuple
    c: tuple

    @property
    def m(self) -> int:
        return self.c[0]


def jacobi_trudi_spec(A, B, p: int) -> SchurSpec:
    A, B = check_pair(A, B, p)
    return SchurSpec(p, A, B, tuple(spec_vector(A, B, p)))


def scale_relabel(c, l: int, p: int) -> list:
    """Spec of (A, l*B) from the spec of (A, B): entry t moves to l*t."""
    if l % p == 0:
        raise ValueError("scaling factor must be a unit mod p")
    linv = pow(l, -1, p)
    return [c[linv * t % p] for t in range(p)]


def m_count(A, B, p: int) -> int:
    """Number of Schur monomials with <mu, B> = 0 mod p, with multiplicity."""
    return spec_vector(A, B, p)[0]


def coset_counts(A, B, p: int, ctab) -> dict:
    """Spec mass per coset of <q>, keyed by coset rep; key 0 is m."""
    vec = spec_vector(A, B, p)
    out = {0: vec[0]}
    for rep in ctab.reps:
        out[rep] = sum(vec[t] for t in ctab.members[rep])
    return out
