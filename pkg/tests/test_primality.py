import random

import pytest

from irredcert.errors import VerificationFailure
from irredcert.primality import (LucasPratt, ProbablePrime, SmallPrime,
                                 check_pratt, gen_pratt, is_probable_prime,
                                 verify_pratt)

from oracles import is_prime_naive


def test_probable_prime_examples():
    assert is_probable_prime(368089)
    assert not is_probable_prime(1)
    assert is_probable_prime(81382739)
    assert not is_probable_prime(0)
    assert is_probable_prime(2)
    assert not is_probable_prime(561)  # Carmichael


def test_probable_prime_agrees_with_trial_division_sample():
    rng = random.Random(37)
    for _ in range(3000):
        n = rng.randrange(0, 10 ** 6)
        assert is_probable_prime(n) == is_prime_naive(n), n


def test_gen_pratt_13():
    cert = gen_pratt(13)
    assert cert == SmallPrime()  # 13 < 2^20 is self-certifying
    # the hand-built witness chain from the spec still verifies
    chain = LucasPratt(2, ((2, 2, SmallPrime()), (3, 1, SmallPrime())))
    assert verify_pratt(13, chain, strict=True)
    assert pow(2, 12, 13) == 1 and pow(2, 6, 13) == 12 and pow(2, 4, 13) == 3


def test_gen_pratt_threshold():
    assert gen_pratt(65537) == SmallPrime()  # 65537 < 2^20
    cert = gen_pratt(1048583)  # first prime above 2^20
    assert isinstance(cert, LucasPratt)
    assert verify_pratt(1048583, cert, strict=True)


def test_gen_pratt_swinnerton_dyer_prime():
    p = 2367715751029
    cert = gen_pratt(p)
    assert isinstance(cert, LucasPratt)
    assert verify_pratt(p, cert, strict=True)


def test_verify_pratt_rejections():
    # 15 is composite: 2^14 mod 15 = 4 != 1
    bad = LucasPratt(2, ((2, 1, SmallPrime()), (7, 1, SmallPrime())))
    with pytest.raises(VerificationFailure) as err:
        check_pratt(15, bad, strict=True)
    assert err.value.check == "pratt.fermat"

    assert not verify_pratt(368089, ProbablePrime(40), strict=True)
    assert verify_pratt(368089, ProbablePrime(40), strict=False)

    # wrong factorization of n-1
    bad2 = LucasPratt(2, ((2, 1, SmallPrime()),))
    assert not verify_pratt(13, bad2)

    # witness of low order
    assert pow(3, (13 - 1) // 3, 13) == 1
    bad3 = LucasPratt(3, ((2, 2, SmallPrime()), (3, 1, SmallPrime())))
    with pytest.raises(VerificationFailure) as err:
        check_pratt(13, bad3)
    assert err.value.check == "pratt.witness-order"

    assert not verify_pratt(1 << 21, SmallPrime())
    assert not verify_pratt(10403, SmallPrime())  # 101 * 103


def test_pratt_round_trip_small_primes_sample():
    rng = random.Random(41)
    for _ in range(400):
        n = rng.randrange(2, 10 ** 6)
        if is_prime_naive(n):
            assert verify_pratt(n, gen_pratt(n), strict=True)


def test_pratt_round_trip_random_large_primes():
    rng = random.Random(43)
    done = 0
    while done < 100:
        n = rng.randrange(2 ** 20, 10 ** 12) | 1
        if not is_probable_prime(n):
            continue
        cert = gen_pratt(n)
        assert cert is not None and verify_pratt(n, cert, strict=True), n
        done += 1


def test_fuzzed_certificates_rejected_for_composites():
    rng = random.Random(47)
    done = 0
    while done < 100:
        c = rng.randrange(4, 10 ** 12)
        if is_probable_prime(c):
            continue
        certs = [
            SmallPrime(),
            ProbablePrime(40),
            LucasPratt(rng.randrange(2, 100),
                       ((2, max((c - 1).bit_length() - 1, 1), SmallPrime()),)),
            LucasPratt(2, ((2, 1, SmallPrime()),
                           ((c - 1) // 2 if c % 2 == 1 else c - 1, 1, ProbablePrime(40)))),
        ]
        for cert in certs:
            assert not verify_pratt(c, cert, strict=True), (c, cert)
        done += 1
