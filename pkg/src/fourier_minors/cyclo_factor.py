"""Factorization of the prime cyclotomic polynomial over F_q and the
extension-field plumbing built on one of its irreducible factors.

For distinct primes p and q with r = mult_order(q, p), the polynomial
1 + X + ... + X^(p-1) splits over F_q into (p-1)/r irreducible factors
of degree r, one per coset of <q> in (Z/p)^*.  build_field picks a
canonical factor pbar and returns F_q[X]/(pbar) with omega = X, a root
of unity of order p, so Fourier-matrix entries are literal monomials.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .rings import (
    ExtField,
    poly_eval,
    poly_gcd,
    poly_mul,
    poly_sub,
    poly_trim,
    prime_cyclotomic,
)

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 2**64."""
    if n >= 1 << 64:
        raise ValueError("primality test supported only below 2**64")
    if n < 2:
        return False
    for sp in _MR_WITNESSES:
        if n == sp:
            return True
        if n % sp == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict:
    """Trial-division factorization, fine for the small n used here."""
    out: dict = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def mult_order(q: int, p: int) -> int:
    """Least r >= 1 with q^r = 1 mod p, for distinct primes q and p."""
    if not is_prime(p) or not is_prime(q):
        raise ValueError("both arguments must be prime")
    if q == p:
        raise ValueError("q must differ from p")
    r = p - 1
    for f in factorize(p - 1):
        while r % f == 0 and pow(q, r // f, p) == 1:
            r //= f
    return r


@dataclass
class CosetTable:
    """Cosets of <q> inside (Z/p)^*, reps are the smallest members."""

    p: int
    q: int
    r: int
    reps: tuple
    members: dict
    rep_of: tuple


def coset_table(p: int, q: int) -> CosetTable:
    r = mult_order(q, p)
    qm = q % p
    rep_of = [0] * p
    reps = []
    members = {}
    seen = [False] * p
    for n in range(1, p):
        if seen[n]:
            continue
        orbit = []
        m = n
        while not seen[m]:
            seen[m] = True
            orbit.append(m)
            m = m * qm % p
        orbit.sort()
        reps.append(n)
        members[n] = tuple(orbit)
        for m in orbit:
            rep_of[m] = n
    for rep in reps:
        if len(members[rep]) != r:
            raise AssertionError("coset size mismatch")
    return CosetTable(p, q, r, tuple(reps), members, tuple(rep_of))


@dataclass
class FieldSetup:
    """A concrete F_{q^r} with omega = X of multiplicative order p."""

    p: int
    q: int
    r: int
    pbar: tuple
    field: ExtField
    omega: tuple
    _opow: list = field(default=None, repr=False)

    def omega_pow(self, t: int) -> tuple:
        """omega^t for 0 <= t < p, cached."""
        if self._opow is None:
            F = self.field
            pw = [F.one]
            for _ in range(self.p - 1):
                pw.append(F.mul(pw[-1], self.omega))
            self._opow = pw
        return self._opow[t % self.p]


@dataclass
class TraceTable:
    """L[i] = second-highest coefficient of the minimal polynomial of
    omega^i over F_q, equal to minus the Frobenius-orbit sum."""

    p: int
    q: int
    pbar: tuple
    L: tuple


def _poly_is_irreducible(f, q: int) -> bool:
    # distinct-degree criteria: X^{q^r} = X mod f, and no factor of
    # degree dividing a maximal proper divisor r/t
    f = list(f)
    r = len(f) - 1
    x = [0, 1]
    y = x
    powers = []
    for _ in range(r):
        y = _frob_step(y, f, q)
        powers.append(y)
    if poly_trim(poly_sub(powers[-1], x, q)):
        return False
    for t in factorize(r):
        g = poly_gcd(poly_sub(powers[r // t - 1], x, q), f, q)
        if g != [1]:
            return False
    return True


def _frob_step(y, f, q: int):
    """y^q mod f over F_q by square and multiply."""
    res = [1]
    base = y
    e = q
    from .rings import poly_mod

    while e:
        if e & 1:
            res = poly_mod(poly_mul(res, base, q), f, q)
        base = poly_mod(poly_mul(base, base, q), f, q)
        e >>= 1
    return res


def _random_irreducible(q: int, r: int, rng: random.Random) -> list:
    while True:
        f = [rng.randrange(q) for _ in range(r)] + [1]
        if _poly_is_irreducible(f, q):
            return f


def _scratch_root(p: int, q: int, r: int, rng: random.Random):
    """A root of unity of exact order p in a scratch copy of F_{q^r}."""
    scratch = ExtField(q, _random_irreducible(q, r, rng))
    e = (q**r - 1) // p
    while True:
        z = tuple(rng.randrange(q) for _ in range(r))
        if not any(z):
            continue
        w = scratch.pow(z, e)
        if w != scratch.one:
            return scratch, w


def _factor_list(p: int, q: int, rng: random.Random):
    """All irreducible factors of the prime cyclotomic polynomial mod q,
    as ascending coefficient tuples, unordered."""
    r = mult_order(q, p)
    ctab = coset_table(p, q)
    if r == 1:
        e = (q - 1) // p
        while True:
            w = pow(rng.randrange(2, q), e, q)
            if w != 1:
                break
        roots = set()
        x = w
        for _ in range(p - 1):
            roots.add(x)
            x = x * w % q
        if len(roots) != p - 1:
            raise AssertionError("expected p-1 distinct roots")
        return [((q - rt) % q, 1) for rt in sorted(roots)]
    scratch, w = _scratch_root(p, q, r, rng)
    pw = {1: w}
    for i in range(2, p):
        pw[i] = scratch.mul(pw[i - 1], w)
    factors = []
    for rep in ctab.reps:
        prod = [scratch.one]
        for i in ctab.members[rep]:
            root = pw[i]
            prod = _polyx_mul(scratch, prod, [scratch.neg(root), scratch.one])
        coeffs = []
        for c in prod:
            if not scratch.is_scalar(c):
                raise AssertionError("factor coefficient not in the base field")
            coeffs.append(c[0])
        if len(coeffs) != r + 1 or coeffs[-1] != 1:
            raise AssertionError("factor is not monic of degree r")
        factors.append(tuple(coeffs))
    prod = [1]
    for f in factors:
        prod = poly_mul(prod, list(f), q)
    if prod != prime_cyclotomic(p):
        raise AssertionError("factors do not multiply back to the cyclotomic")
    return factors


def _polyx_mul(F: ExtField, a, b):
    """Product of polynomials whose coefficients are F-elements."""
    res = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            res[i + j] = F.add(res[i + j], F.mul(x, y))
    return res


def factor_cyclotomic(p: int, q: int, seed: int = 0) -> list:
    """Sorted list of the irreducible factors of 1 + X + ... + X^(p-1)
    over F_q.  Sorted by coefficient tuples read from the leading term
    down, so the listing is canonical and seed independent."""
    _validate_pq(p, q)
    rng = random.Random(seed)
    factors = _factor_list(p, q, rng)
    return sorted(factors, key=lambda f: tuple(reversed(f)))


def build_field(p: int, q: int, seed: int = 0) -> FieldSetup:
    """Construct F_{q^r} = F_q[X]/(pbar) with omega = X of order p.

    Canonical factor choice, independent of the seed: for r = 1 the
    factor X - w with the smallest integer root w, otherwise the factor
    whose coefficient tuple (leading term first) is lexicographically
    least.
    """
    _validate_pq(p, q)
    rng = random.Random(seed)
    r = mult_order(q, p)
    factors = _factor_list(p, q, rng)
    if r == 1:
        pbar = max(factors, key=lambda f: f[0])  # largest -w means smallest root w
    else:
        pbar = min(factors, key=lambda f: tuple(reversed(f)))
    F = ExtField(q, pbar)
    omega = F.gen
    if F.eval_poly(pbar, omega) != F.zero:
        raise AssertionError("omega is not a root of pbar")
    if F.pow(omega, p) != F.one or omega == F.one:
        raise AssertionError("omega does not have exact order p")
    return FieldSetup(p, q, r, tuple(pbar), F, omega)


def frobenius_orbit(setup: FieldSetup, i: int) -> list:
    """[omega^(i q^l mod p) for l = 0..r-1], all distinct."""
    if not 1 <= i <= setup.p - 1:
        raise ValueError("index out of range")
    out = []
    m = i % setup.p
    for _ in range(setup.r):
        out.append(setup.omega_pow(m))
        m = m * setup.q % setup.p
    if len(set(out)) != setup.r:
        raise AssertionError("orbit elements not distinct")
    return out


def trace_table(setup: FieldSetup) -> TraceTable:
    """L[i] for 1 <= i < p, constant on cosets of <q>.

    The minimal polynomial of omega^i is the product over its Frobenius
    orbit, so its second-highest coefficient is minus the orbit sum.
    A global consistency check, sum of all orbit sums = -1 mod q, is
    enforced before returning.
    """
    p, q = setup.p, setup.q
    F = setup.field
    ctab = coset_table(p, q)
    L = [None] * p
    total = 0
    for rep in ctab.reps:
        s = F.zero
        for m in ctab.members[rep]:
            s = F.add(s, setup.omega_pow(m))
        if not F.is_scalar(s):
            raise AssertionError("orbit sum is not in the base field")
        val = (-s[0]) % q
        total += s[0]
        for m in ctab.members[rep]:
            L[m] = val
    if total % q != (q - 1) % q:
        raise AssertionError("orbit sums do not add to -1")
    return TraceTable(p, q, setup.pbar, tuple(L))


def _validate_pq(p: int, q: int):
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if not is_prime(q):
        raise ValueError(f"q = {q} is not prime")
    if p == q:
        raise ValueError("p and q must be distinct")
