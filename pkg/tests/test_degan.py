import random

import pytest

from irredcert.degan import (DeganSession, DegreeSet, DeltaBound, PrimeEvidence,
                             analyze_prime, generate_degan, intersect,
                             minimize_evidence, possible_degrees, verify_degan)
from irredcert.errors import VerificationFailure
from irredcert.polymodp import PolyModP, factor_mod_p, reduce
from irredcert.polyz import PolyZ, primitive_part

F1 = PolyZ([4, 3, 0, 1, 1])          # x^4+x^3+3x+4
F2 = PolyZ([4, 0, 6] + [0] * 11 + [4, 0, 1])  # x^16+4x^14+6x^2+4
F3 = PolyZ([-18, -14, 5, 16, 1])     # x^4+16x^3+5x^2-14x-18
X4P1 = PolyZ([1, 0, 0, 0, 1])


def evidence_for(f, p):
    return PrimeEvidence(p, tuple(factor_mod_p(reduce(f, p))))


def _is_prime(n):
    return n >= 2 and all(n % d for d in range(2, n))


def test_possible_degrees():
    assert possible_degrees([1, 3], 4).degrees() == [0, 1, 3, 4]
    assert possible_degrees([2, 2], 4).degrees() == [0, 2, 4]
    assert possible_degrees([1, 1, 1, 1], 4).degrees() == [0, 1, 2, 3, 4]
    with pytest.raises(ValueError):
        possible_degrees([1, 2], 4)


def test_analyze_prime():
    ev, ds = analyze_prime(F1, 2)
    assert ds.degrees() == [0, 1, 3, 4]
    assert ev.p == 2 and [g.degree for g in ev.factors] == [1, 3]
    # x^4+x^3+3x+4 mod 5 = (x^2+3x+3)^2: not squarefree, so skipped
    assert analyze_prime(F1, 5) is None
    ev31, ds31 = analyze_prime(F1, 31)
    assert ds31.degrees() == [0, 2, 4]
    # x^4+1 mod 2 = (x+1)^4
    assert analyze_prime(X4P1, 2) is None
    # prime dividing the leading coefficient
    assert analyze_prime(PolyZ([1, 1, 3]), 3) is None


def test_intersect():
    a = possible_degrees([1, 3], 4)
    b = possible_degrees([2, 2], 4)
    assert intersect([a, b]).degrees() == [0, 4]
    assert intersect([b]).degrees() == [0, 2, 4]
    full = DegreeSet.full(4)
    assert intersect([full, full]).degrees() == [0, 1, 2, 3, 4]
    with pytest.raises(ValueError):
        intersect([a, DegreeSet.full(5)])


def test_generate_degan_concludes_for_f1():
    ds, evidence = generate_degan(F1, 200, seed=1)
    assert ds.conclusive
    recomputed = verify_degan(F1, evidence)
    assert recomputed.bits == ds.bits


def test_generate_degan_never_concludes_for_x4p1():
    ds, _ = generate_degan(X4P1, 60, seed=2)
    assert 2 in ds
    assert not ds.conclusive


def test_generate_degan_deterministic():
    a = generate_degan(F1, 100, seed=99)
    b = generate_degan(F1, 100, seed=99)
    assert a[0].bits == b[0].bits
    assert [e.p for e in a[1]] == [e.p for e in b[1]]


def test_minimize_evidence():
    # 31 gives {0,2,4}; 2 and 7 both give {0,1,3,4}, so 7 is redundant
    evs = [evidence_for(F1, 2), evidence_for(F1, 31), evidence_for(F1, 7)]
    target = intersect([possible_degrees(e.degree_multiset(), 4) for e in evs])
    assert target.degrees() == [0, 4]
    mini = minimize_evidence(evs, target)
    assert len(mini) == 2
    assert verify_degan(F1, mini).bits == target.bits

    single = [evidence_for(F3, 107)]
    assert minimize_evidence(single, verify_degan(F3, single)) == single

    pair = [evidence_for(F1, 2), evidence_for(F1, 31)]
    assert minimize_evidence(pair, target) == pair

    with pytest.raises(ValueError):
        minimize_evidence([evs[0]], target)


def test_verify_degan_paper_lists():
    ds = verify_degan(F2, [evidence_for(F2, 13), evidence_for(F2, 127)])
    assert ds.conclusive
    ds2 = verify_degan(F3, [evidence_for(F3, 107)])
    assert ds2.conclusive


def test_verify_degan_accepts_repeated_factors():
    # x^4-1036x^2+7744 mod 3 = (x^2+1)^2; multiset evidence certifies delta 2
    f = PolyZ([7744, 0, -1036, 0, 1])
    q = PolyModP(3, (1, 0, 1))
    ds = verify_degan(f, [PrimeEvidence(3, (q, q))])
    assert ds.degrees() == [0, 2, 4]
    assert ds.delta == 2


def test_verify_degan_tamper_rejected():
    ev = evidence_for(F3, 107)
    bad_factor = PolyModP(107, tuple((c + 1) % 107 for c in ev.factors[0].coeffs[:-1])
                          + (1,))
    tampered = PrimeEvidence(107, (bad_factor,) + ev.factors[1:])
    with pytest.raises(VerificationFailure) as err:
        verify_degan(F3, [tampered])
    assert err.value.check.startswith("degan.")

    with pytest.raises(VerificationFailure) as err:
        verify_degan(F3, [PrimeEvidence(10403, ev.factors)])  # composite p
    assert err.value.check == "degan.prime"

    with pytest.raises(VerificationFailure) as err:
        verify_degan(PolyZ([1, 107]), [ev])
    assert err.value.check == "degan.leading-coeff"

    reducible = PrimeEvidence(7, (PolyModP(7, (2, 0, 3, 1)), PolyModP(7, (1, 1)),))
    with pytest.raises(VerificationFailure):
        verify_degan(PolyZ([2, 3, 2, 3, 1]), [reducible])


def test_f3_needs_a_prime_above_101():
    sets = []
    for p in range(2, 102):
        if not _is_prime(p):
            continue
        res = analyze_prime(F3, p)
        if res:
            sets.append(res[1])
    assert not intersect(sets).conclusive


def test_degree_set_symmetry_everywhere():
    rng = random.Random(53)
    for _ in range(200):
        f = PolyZ([rng.randint(-30, 30) for _ in range(rng.randint(3, 8))]
                  + [rng.randint(1, 30)])
        p = rng.choice([2, 3, 5, 7, 11, 13, 17])
        res = analyze_prime(f, p)
        if res is None:
            continue
        _, ds = res
        for e in range(ds.d + 1):
            assert (e in ds) == (ds.d - e in ds)
        assert 0 in ds and ds.d in ds


def test_soundness_factor_degree_always_possible():
    rng = random.Random(59)
    checked = 0
    while checked < 200:
        g = PolyZ([rng.randint(-9, 9) for _ in range(rng.randint(2, 5))]
                  + [rng.randint(1, 9)])
        h = PolyZ([rng.randint(-9, 9) for _ in range(rng.randint(2, 5))]
                  + [rng.randint(1, 9)])
        f = primitive_part(g * h)
        p = rng.choice([2, 3, 5, 7, 11, 13, 17, 19, 23])
        res = analyze_prime(f, p)
        if res is None:
            continue
        _, ds = res
        assert g.degree in ds, (g.coeffs, h.coeffs, p)
        checked += 1


def test_session_matches_generate():
    session = DeganSession(F1, seed=1)
    for _ in range(200):
        if session.done:
            break
        session.step()
    ds, evidence = generate_degan(F1, 200, seed=1)
    assert session.degree_set.bits == ds.bits
    assert [e.p for e in session.evidence] == [e.p for e in evidence]
