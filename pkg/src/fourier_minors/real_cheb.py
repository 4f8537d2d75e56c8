"""The real subfield story: minors of the cosine Vandermonde matrices.

Q(2cos(2pi/p)) is the degree-n real subfield of the p-th cyclotomic
field, n = (p-1)/2.  Its generator t_1 = 2cos(2pi/p) has an explicit
minimal polynomial P (cosine_minpoly); the conjugates t_j = 2cos(2pi
j/p) are polynomials phi_j in t_1, built by the three-term recurrence
phi_1 = X, phi_2 = X^2 - 2, phi_j = X*phi_{j-1} - phi_{j-2}, all
sharing the fixed point phi_j(2) = 2.

Everything here runs exactly in Q[X]/P with rational arithmetic:

  * verify_real_minors checks every square minor of the n x n matrix
    with entries (t_j)^m = phi_j^m mod P, j, m = 1..n;
  * verify_dct_minors does the same for the cosine-table matrix with
    entries t_{fold(k*j mod p)}, fold(m) = min(m, p - m);
  * chebyshev_identity_check validates the degree-p identity
    2(T_p(X/2) - 1) = P(X)^2 (X - 2) that pins P down.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .cyclo_factor import is_prime
from .minors import MinorReport
from .rings import NumberField, poly_eval, poly_mul, poly_sub, poly_trim
from .schur import WorkBudgetError


def cosine_minpoly(p: int) -> list:
    """Minimal polynomial of 2cos(2pi/p), ascending coefficients.

    Closed form: P(X) = sum_{0<=k<=n/2} (-1)^k C(n-k, k) X^(n-2k)
                      + sum_{0<=k<(n+1)/2} (-1)^k C(n-k-1, k) X^(n-2k-1)
    with n = (p-1)/2; monic of degree n with integer coefficients.
    """
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    n = (p - 1) // 2
    P = [0] * (n + 1)
    for k in range(0, n // 2 + 1):
        P[n - 2 * k] += (-1) ** k * comb(n - k, k)
    for k in range(0, (n + 1) // 2):
        P[n - 2 * k - 1] += (-1) ** k * comb(n - k - 1, k)
    return P


def chebyshev_polynomial(m: int) -> list:
    """T_m by the recurrence T_0 = 1, T_1 = x, T_m = 2x T_{m-1} - T_{m-2},
    with rational coefficients."""
    a = [Fraction(1)]
    if m == 0:
        return a
    b = [Fraction(0), Fraction(1)]
    for _ in range(m - 1):
        a, b = b, poly_sub(poly_mul([0, 2], b), a)
    return b


def chebyshev_identity_check(p: int) -> bool:
    """Exact equality 2(T_p(X/2) - 1) = P(X)^2 (X - 2) over Q."""
    P = cosine_minpoly(p)
    T = chebyshev_polynomial(p)
    lhs = [2 * c * Fraction(1, 2) ** i for i, c in enumerate(T)]
    lhs[0] -= 2
    rhs = poly_mul(poly_mul(P, P), [-2, 1])
    return poly_trim([Fraction(c) for c in lhs]) == poly_trim(
        [Fraction(c) for c in rhs]
    )


def phi_sequence(p: int) -> list:
    """[phi_1, ..., phi_n] as raw integer polynomials (not reduced).

    phi_j(2cos t) = 2cos(jt); each has the fixed point phi_j(2) = 2.
    """
    n = (p - 1) // 2
    seq = [[0, 1]]
    if n >= 2:
        seq.append([-2, 0, 1])
    while len(seq) < n:
        seq.append(poly_sub(poly_mul([0, 1], seq[-1]), seq[-2]))
    return seq[:n]


@dataclass
class CosineField:
    """Q[X]/P with the conjugate generators reduced mod P."""

    p: int
    n: int
    P: list
    nf: NumberField
    gens: list

    @classmethod
    def build(cls, p: int) -> "CosineField":
        P = cosine_minpoly(p)
        if poly_eval(P, 2) != p:
            raise AssertionError("minimal polynomial fails P(2) = p")
        nf = NumberField(P)
        gens = [nf.element(f) for f in phi_sequence(p)]
        return cls(p=p, n=(p - 1) // 2, P=P, nf=nf, gens=gens)

    def conjugate(self, j: int):
        """t_j for 1 <= j <= p-1, folding j and p-j together."""
        m = j % self.p
        if m == 0:
            raise ValueError("index 0 has no cosine node")
        return self.gens[min(m, self.p - m) - 1]


def power_matrix(cf: CosineField) -> list:
    """Entries (t_j)^m mod P for j, m = 1..n."""
    out = []
    for j in range(1, cf.n + 1):
        g = cf.conjugate(j)
        row = []
        acc = g
        for _ in range(cf.n):
            row.append(acc)
            acc = cf.nf.mul(acc, g)
        out.append(row)
    return out


def dct_matrix(cf: CosineField) -> list:
    """Entries t_{fold(k j mod p)} for k, j = 1..n."""
    return [
        [cf.conjugate(k * j) for j in range(1, cf.n + 1)]
        for k in range(1, cf.n + 1)
    ]


def det_in_numberfield(nf: NumberField, M) -> list:
    """Exact determinant over Q[X]/P by Gaussian elimination."""
    n = len(M)
    W = [list(row) for row in M]
    det = nf.element([1])
    sign = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if not nf.is_zero(W[r][c])), None)
        if piv is None:
            return nf.element([])
        if piv != c:
            W[c], W[piv] = W[piv], W[c]
            sign = -sign
        pv = W[c][c]
        det = nf.mul(det, pv)
        inv = nf.inv(pv)
        for r in range(c + 1, n):
            if not nf.is_zero(W[r][c]):
                f = nf.mul(W[r][c], inv)
                W[r] = [
                    nf.sub(x, nf.mul(f, y)) for x, y in zip(W[r], W[c])
                ]
    if sign < 0:
        det = nf.neg(det)
    return det


def _verify_matrix_minors(p: int, nf: NumberField, M, limit_n: int = 8):
    n = len(M)
    if n > limit_n:
        raise WorkBudgetError(f"n={n} exceeds the minor sweep limit {limit_n}")
    t0 = time.perf_counter()
    checked = 0
    violation = None
    for k in range(1, n + 1):
        for J in combinations(range(n), k):
            for K in combinations(range(n), k):
                sub = [[M[j][m] for m in K] for j in J]
                checked += 1
                if nf.is_zero(det_in_numberfield(nf, sub)):
                    vj = tuple(x + 1 for x in J)
                    vk = tuple(x + 1 for x in K)
                    if violation is None or (vj, vk) < violation:
                        violation = (vj, vk)
        if violation is not None:
            break
    return MinorReport(
        p=p,
        q=None,
        verified=violation is None,
        first_violation=violation,
        minors_checked=checked,
        orbits_pruned=0,
        pairs_computed=checked,
        wall_time=time.perf_counter() - t0,
    )


def verify_real_minors(p: int) -> MinorReport:
    """All square minors of the conjugate-power matrix are nonzero."""
    cf = CosineField.build(p)
    return _verify_matrix_minors(p, cf.nf, power_matrix(cf))


def verify_dct_minors(p: int) -> MinorReport:
    """All square minors of the folded cosine-table matrix are nonzero."""
    cf = CosineField.build(p)
    return _verify_matrix_minors(p, cf.nf, dct_matrix(cf))
