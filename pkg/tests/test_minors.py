"""Minor verification: determinant oracle, vanishing tests, exhaustive sweeps."""

import random
from itertools import combinations
from math import comb

import pytest

from fourier_minors.cyclo_factor import build_field
from fourier_minors.minors import (
    MinorReport,
    affine_canonical,
    affine_orbit,
    det_over_field,
    fourier_matrix,
    fourier_submatrix,
    level_reps,
    minor_vanishes,
    scaling_group,
    translation_canonical,
    uncertainty_min,
    verify_all_minors,
)
from fourier_minors.rings import FFElem
from fourier_minors.schur import WorkBudgetError


def cofactor_det(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    total = None
    for j in range(n):
        sub = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = M[0][j] * cofactor_det(sub)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def test_det_oracle_matches_cofactor_expansion():
    setup = build_field(7, 2)
    F = setup.field
    rng = random.Random(12)
    for _ in range(40):
        n = rng.randint(1, 4)
        M = [
            [FFElem(F, tuple(rng.randrange(2) for _ in range(3))) for _ in range(n)]
            for _ in range(n)
        ]
        assert det_over_field(M) == cofactor_det(M)


def test_det_oracle_rejects_bad_input():
    setup = build_field(7, 2)
    F = setup.field
    a = FFElem(F, (1, 0, 0))
    with pytest.raises(ValueError):
        det_over_field([[a, a]])


def test_full_fourier_det_example_field():
    setup = build_field(5, 11)
    M = fourier_matrix(5, setup)
    assert [e.c[0] for e in M[1]] == [1, 3, 9, 5, 4]
    assert bool(det_over_field(M))


def test_minor_vanishes_matches_det_exhaustive_small():
    for p, q in [(5, 11), (5, 2), (5, 19), (7, 2)]:
        setup = build_field(p, q)
        for k in (1, 2, 3):
            for A in combinations(range(p), k):
                for B in combinations(range(p), k):
                    spec_route = minor_vanishes(A, B, p, setup)
                    det_route = not det_over_field(fourier_submatrix(p, setup, A, B))
                    assert spec_route == det_route, (p, q, A, B)


def test_char0_minors_never_vanish_exhaustive_p5():
    p = 5
    for k in range(1, p + 1):
        for A in combinations(range(p), k):
            for B in combinations(range(p), k):
                assert not minor_vanishes(A, B, p)


def test_canonicalization_laws():
    rng = random.Random(13)
    for _ in range(100):
        p = rng.choice([5, 7, 11])
        k = rng.randint(1, p)
        B = tuple(sorted(rng.sample(range(p), k)))
        scalars = scaling_group(p)
        canon = affine_canonical(B, p, scalars)
        orbit = affine_orbit(B, p, scalars)
        assert canon == min(orbit)
        assert B in orbit
        tc = translation_canonical(B, p)
        assert tc == min(
            tuple(sorted((b + c) % p for b in B)) for c in range(p)
        )


def test_level_reps_cover_all_pairs():
    p = 7
    units = scaling_group(p)
    for k in range(1, p + 1):
        a_reps, b_reps = level_reps(p, k, units)
        assert len(a_reps) * (p if k < p else 1) == comb(p, k)
        assert sum(n for _, n in b_reps) == comb(p, k)


def test_scaling_group_char_q_is_generated_subgroup():
    assert scaling_group(11) == list(range(1, 11))
    assert scaling_group(11, 2) == sorted({pow(2, i, 11) for i in range(10)})
    assert scaling_group(7, 2) == [1, 2, 4]


def test_verify_char0_counts():
    r5 = verify_all_minors(5)
    assert r5.verified and r5.minors_checked == 251
    r7 = verify_all_minors(7)
    assert r7.verified and r7.minors_checked == 3431
    assert r7.first_violation is None
    assert r7.to_dict()["q"] == "char 0"
    assert "wall_time" not in r7.to_dict()


def test_verify_finite_published_rows():
    assert verify_all_minors(5, 7).verified
    assert verify_all_minors(5, 13).verified
    assert verify_all_minors(7, 17).verified
    assert verify_all_minors(7, 89).verified


def test_verify_violation_p11_q2_with_oracle():
    report = verify_all_minors(11, 2, threads=2)
    assert not report.verified
    A, B = report.first_violation
    assert len(A) == len(B) == 5
    setup = build_field(11, 2)
    assert not det_over_field(fourier_submatrix(11, setup, A, B))
    # the count reflects every completed level
    assert report.minors_checked == sum(comb(11, k) ** 2 for k in range(1, 6))


def test_verify_nonprimitive_case_is_honest():
    # ord_7(2) = 3 < 6: vanishing minors exist and are found.
    report = verify_all_minors(7, 2)
    assert not report.verified
    assert report.first_violation == ((0, 1, 3), (0, 1, 3))
    setup = build_field(7, 2)
    assert not det_over_field(fourier_submatrix(7, setup, *report.first_violation))


def test_verify_thread_count_is_invisible():
    a = verify_all_minors(11, 2, threads=1)
    b = verify_all_minors(11, 2, threads=5)
    assert a.to_dict() == b.to_dict()
    c = verify_all_minors(7, 17, threads=3)
    assert c.to_dict() == verify_all_minors(7, 17).to_dict()


def test_verify_smallest_prime():
    report = verify_all_minors(2, 3)
    assert report.verified and report.minors_checked == 5


def test_budget_guardrails():
    with pytest.raises(WorkBudgetError):
        verify_all_minors(13)
    with pytest.raises(WorkBudgetError):
        verify_all_minors(17, extended=True)


def test_uncertainty_example_and_errors():
    assert uncertainty_min(5, 11) == 6
    assert uncertainty_min(2, 3) == 3
    with pytest.raises(ValueError):
        uncertainty_min(7, 2)  # omega of order 7 needs F_8, not a prime field
    with pytest.raises(WorkBudgetError):
        uncertainty_min(11, 23)


def test_minor_report_serialization_round_trip():
    rep = MinorReport(
        p=11,
        q=2,
        verified=False,
        first_violation=((0, 1), (0, 2)),
        minors_checked=10,
        orbits_pruned=4,
        pairs_computed=6,
        wall_time=1.5,
    )
    d = rep.to_dict()
    assert d["first_violation"] == {"A": [0, 1], "B": [0, 2]}
    assert d["q"] == 2
