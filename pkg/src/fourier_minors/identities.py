"""Structural sum identities behind the bounds, machine-checked.

Three checks, all exact:

  * substitution_orbit_sum_check: summing the spec vectors of (A, l*B)
    over all units l collapses, modulo the cyclotomic, to the constant
    m_{A,B} * p - s_A(1,...,1).
  * residue_certificate: p never divides s_A(1,...,1) (all pairwise
    gaps inside A are smaller than p), which with the sum identity
    reproves that no char-0 minor vanishes; cross-asserted against the
    spec-vector vanishing test.
  * frobenius_orbit_sum_check: over F_{q^r}, summing the spec vectors
    of (A, q^l * B) for l = 0..r-1 and evaluating at omega equals
    r * m^(0) - sum_i m^(n_i) * L[n_i], assembled from the coset masses
    and the trace table.

Each check recomputes one spec vector and obtains the rest of its orbit
by the scaling relabel, so a sweep costs one determinant per pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .cyclo_factor import FieldSetup, TraceTable, coset_table, trace_table
from .schur import check_pair, scale_relabel, schur_eval_ones, spec_vector


def substitution_orbit_sum_check(A, B, p: int) -> bool:
    """Unit-orbit sum of spec vectors is constant m*p - ratio mod the
    cyclotomic (all coordinates of the difference equal)."""
    A, B = check_pair(A, B, p)
    base = spec_vector(A, B, p)
    total = [0] * p
    for l in range(1, p):
        for t, c in enumerate(scale_relabel(base, l, p)):
            total[t] += c
    rhs = base[0] * p - schur_eval_ones(A)
    total[0] -= rhs
    return len(set(total)) == 1


def residue_certificate(A, B, p: int) -> bool:
    """p does not divide the Schur mass; cross-asserts the char-0
    nonvanishing it implies."""
    from .minors import minor_vanishes

    A, B = check_pair(A, B, p)
    coprime = schur_eval_ones(A) % p != 0
    vanishes = minor_vanishes(A, B, p)
    if coprime and vanishes:
        raise AssertionError(
            "mass coprime to p yet the minor vanished; internal inconsistency"
        )
    return coprime


def frobenius_orbit_sum_check(
    A, B, p: int, setup: FieldSetup, traces: TraceTable | None = None
) -> bool:
    """Frobenius-orbit sum of spec evaluations equals the trace-weighted
    coset masses in F_{q^r}."""
    from .minors import eval_spec_at_omega

    A, B = check_pair(A, B, p)
    q, r = setup.q, setup.r
    if traces is None:
        traces = trace_table(setup)
    ctab = coset_table(p, q)
    base = spec_vector(A, B, p)
    F = setup.field
    lhs = F.zero
    l = 1
    for _ in range(r):
        vec = scale_relabel(base, l, p)
        lhs = F.add(lhs, eval_spec_at_omega(vec, setup))
        l = l * q % p
    rhs_int = r * base[0]
    acc = F.scalar(rhs_int % q)
    for rep in ctab.reps:
        mass = sum(base[t] for t in ctab.members[rep])
        acc = F.sub(acc, F.smul(mass * traces.L[rep], F.one))
    return lhs == acc


@dataclass
class IdentitySweep:
    checked: int
    failed: int
    first_failure: tuple | None

    def to_dict(self) -> dict:
        return {
            "checked": self.checked,
            "failed": self.failed,
            "first_failure": None
            if self.first_failure is None
            else {"A": list(self.first_failure[0]), "B": list(self.first_failure[1])},
        }


def _pairs(p: int, exhaustive: bool, count: int, seed: int):
    from itertools import combinations

    if exhaustive:
        for k in range(1, p + 1):
            for A in combinations(range(p), k):
                for B in combinations(range(p), k):
                    yield A, B
        return
    rng = Random(seed)
    for _ in range(count):
        k = rng.randint(1, p)
        A = tuple(sorted(rng.sample(range(p), k)))
        B = tuple(sorted(rng.sample(range(p), k)))
        yield A, B


def sweep_identities(
    p: int,
    q: int | None = None,
    exhaustive: bool = False,
    count: int = 200,
    seed: int = 0,
) -> IdentitySweep:
    """Run the applicable identity checks over a pair sweep."""
    setup = None
    traces = None
    if q is not None:
        from .cyclo_factor import build_field

        setup = build_field(p, q, 0)
        traces = trace_table(setup)
    checked = 0
    failed = 0
    first = None
    for A, B in _pairs(p, exhaustive, count, seed):
        ok = substitution_orbit_sum_check(A, B, p) and residue_certificate(
            A, B, p
        )
        if ok and setup is not None:
            ok = frobenius_orbit_sum_check(A, B, p, setup, traces)
        checked += 1
        if not ok:
            failed += 1
            if first is None:
                first = (A, B)
    return IdentitySweep(checked=checked, failed=failed, first_failure=first)
