import random
from fractions import Fraction
from math import gcd

import pytest

from irredcert.polyz import (PolyZ, RootBoundCert, compute_root_bound, content,
                             derivative, eval_rat, fixed_divisor, fstar,
                             graeffe, is_squarefree, poly_gcd, primitive_part,
                             verify_root_bound)

from oracles import fixed_divisor_range, leval, lmul


def test_normalization_and_degree():
    assert PolyZ([1, 2, 0, 0]).coeffs == (1, 2)
    assert PolyZ([]).degree == -1
    assert PolyZ([0, 0]).degree == -1
    assert PolyZ([5]).degree == 0
    assert PolyZ([4, 2]).lc == 2


def test_content():
    assert content(PolyZ([4, 6])) == 2
    assert content(PolyZ([1, 0, 0, 0, 1])) == 1
    assert content(PolyZ([2, 8, 312, 608, 1552])) == 2
    with pytest.raises(ValueError):
        content(PolyZ())


def test_primitive_part():
    assert primitive_part(PolyZ([4, -2])) == PolyZ([-2, 1])
    assert primitive_part(PolyZ([1552, 608, 312, 8, 2])) == PolyZ([776, 304, 156, 4, 1])
    assert primitive_part(PolyZ([1, 0, 0, 0, 1])) == PolyZ([1, 0, 0, 0, 1])


def test_primitive_part_idempotent_and_normalized():
    rng = random.Random(7)
    for _ in range(200):
        f = PolyZ([rng.randint(-40, 40) for _ in range(rng.randint(1, 9))])
        if not f:
            continue
        p = primitive_part(f)
        assert primitive_part(p) == p
        assert content(p) == 1
        assert p.lc > 0


def test_eval_rat():
    f = PolyZ([92] + [0] * 3 + [12] + [0] * 7 + [1])
    assert eval_rat(f, 5) == 244148217  # 3 * 81382739
    phi21 = PolyZ([1, -1, 0, 1, -1, 0, 1, 0, -1, 1, 0, -1, 1])
    assert eval_rat(phi21, 3) == 368089
    assert eval_rat(PolyZ([7, 1]), 0) == 7
    assert eval_rat(PolyZ([1, 2]), Fraction(1, 2)) == 2


def test_derivative():
    assert derivative(PolyZ([1, 0, 0, 0, 1])) == PolyZ([0, 0, 0, 4])
    assert derivative(PolyZ([5])) == PolyZ()
    assert derivative(PolyZ([2, 1, 1])) == PolyZ([1, 2])


def test_is_squarefree():
    assert not is_squarefree(PolyZ([1, 2, 1]))
    assert is_squarefree(PolyZ([1, 0, 0, 0, 1]))
    assert is_squarefree(PolyZ([2, 1, 1]))


def test_poly_gcd():
    f = PolyZ([-2, 1]) * PolyZ([3, 1])
    g = PolyZ([-2, 1]) * PolyZ([7, 0, 1])
    assert poly_gcd(f, g) == PolyZ([-2, 1])
    assert poly_gcd(f, PolyZ()) == primitive_part(f)
    # gcd over Q ignores integer content
    assert poly_gcd(2 * f, 3 * g) == PolyZ([-2, 1])


def test_graeffe_examples():
    assert graeffe(PolyZ([2, -3, 1])) == PolyZ([4, -5, 1])
    assert graeffe(PolyZ([1, 0, 0, 0, 1])) == PolyZ([1, 0, 2, 0, 1])
    assert graeffe(PolyZ([-1, 1])) == PolyZ([-1, 1])


def test_graeffe_squares_roots():
    rng = random.Random(3)
    for _ in range(50):
        roots = [rng.randint(-6, 6) for _ in range(rng.randint(1, 5))]
        f = PolyZ([1])
        g = PolyZ([1])
        for r in roots:
            f = f * PolyZ([-r, 1])
            g = g * PolyZ([-r * r, 1])
        assert graeffe(f) == g


def test_fstar():
    assert fstar(PolyZ([2, -3, 1])) == PolyZ([-2, -3, 1])
    assert fstar(PolyZ([1, 0, 0, 0, 1])) == PolyZ([-1, 0, 0, 0, 1])
    assert fstar(PolyZ([-5, 1, 0, -2])) == PolyZ([-5, -1, 0, 2])


def test_verify_root_bound_examples():
    f = PolyZ([2, -3, 1])
    assert verify_root_bound(f, RootBoundCert(Fraction(4), 0))
    # conservative: 3 is a true root bound, but fstar(3) = -2
    assert not verify_root_bound(f, RootBoundCert(Fraction(3), 0))
    assert verify_root_bound(PolyZ([1, 0, 0, 0, 1]), RootBoundCert(Fraction(17, 16), 0))


def test_verify_root_bound_rejects_bad_certs():
    f = PolyZ([2, -3, 1])
    assert not verify_root_bound(f, RootBoundCert(Fraction(-1), 0))
    assert not verify_root_bound(f, RootBoundCert(Fraction(4), 99))


def test_verify_root_bound_soundness_for_integer_roots():
    rng = random.Random(11)
    for _ in range(100):
        roots = [rng.randint(-9, 9) for _ in range(rng.randint(1, 5))]
        f = PolyZ([1])
        for r in roots:
            f = f * PolyZ([-r, 1])
        rho = Fraction(rng.randint(1, 14), rng.randint(1, 3))
        k = rng.randint(0, 3)
        if verify_root_bound(f, RootBoundCert(rho, k)):
            assert all(abs(r) <= rho for r in roots)


def test_verify_root_bound_monotone_in_rho():
    rng = random.Random(13)
    for _ in range(60):
        f = PolyZ([rng.randint(-20, 20) for _ in range(rng.randint(2, 7))])
        if f.degree < 1:
            continue
        cert = compute_root_bound(f, max_iters=2)
        for bump in (Fraction(1, 7), 1, Fraction(22, 3)):
            assert verify_root_bound(
                f, RootBoundCert(cert.rho + bump, cert.graeffe_iters))


def test_compute_root_bound():
    rb = compute_root_bound(PolyZ([1, 0, 0, 0, 1]), max_iters=0)
    assert verify_root_bound(PolyZ([1, 0, 0, 0, 1]), rb)
    assert rb.rho <= Fraction(9, 8)

    f = PolyZ([7744, 0, -1036, 0, 1])
    rb2 = compute_root_bound(f)
    assert verify_root_bound(f, rb2)
    assert rb2.rho <= 33 or verify_root_bound(f, RootBoundCert(Fraction(33), rb2.graeffe_iters))

    g = PolyZ([-5, 1])
    rb3 = compute_root_bound(g)
    assert rb3.rho >= 5
    assert verify_root_bound(g, rb3)


def test_fixed_divisor_examples():
    assert fixed_divisor(PolyZ([2, 1, 1])) == 2
    assert fixed_divisor(PolyZ([0, 1])) == 1
    assert fixed_divisor(PolyZ([0, 1, 1])) == 2
    with pytest.raises(ValueError):
        fixed_divisor(PolyZ())


def test_fixed_divisor_against_oracle():
    rng = random.Random(17)
    for _ in range(100):
        coeffs = [rng.randint(-50, 50) for _ in range(rng.randint(1, 9))]
        f = PolyZ(coeffs)
        if not f:
            continue
        fd = fixed_divisor(f)
        for n in range(-50, 51):
            assert f(n) % fd == 0
        assert fd == fixed_divisor_range(list(f.coeffs), -100, 100)


def test_arithmetic_matches_oracle():
    rng = random.Random(23)
    for _ in range(100):
        a = [rng.randint(-9, 9) for _ in range(rng.randint(0, 6))]
        b = [rng.randint(-9, 9) for _ in range(rng.randint(0, 6))]
        assert (PolyZ(a) * PolyZ(b)).coeffs == tuple(lmul(a, b))
        n = rng.randint(-5, 5)
        assert PolyZ(a)(n) == leval(a, n)
