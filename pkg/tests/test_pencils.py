"""Brute-force validation of the symbolic slope-pencil certificates."""

import random
from math import gcd

from sfsnorm.lens import LensCurve, cf_expand, n_genus, normalize_lens
from sfsnorm.pencils import Lin, certified_tail, slope_pencil
from sfsnorm.seifert import complete_matrix


def check_certificate(first, second, horizon=160):
    """Assert the certificate against direct evaluation of the pencil."""
    cert = certified_tail(first, second)
    if cert is None:
        return 0
    checked = 0
    for t in range(cert.t_min, cert.t_min + horizon):
        a, b = first.at(t), second.at(t)
        if a % 2 != 0 or gcd(a, b) != 1:
            continue
        curve = LensCurve(a, b)
        value = n_genus(curve)
        assert value >= cert.bound_at(t), (first, second, t)
        norm = normalize_lens(curve)
        if norm.twok > 0:
            digits = cf_expand(norm.twok, norm.q).digits
            assert cert.matches(digits), (first, second, t, digits,
                                          cert.prefix)
        checked += 1
    return checked


class TestCertifiedTail:
    def test_fiber_pencils_random(self):
        rng = random.Random(20250811)
        checked = 0
        for _ in range(250):
            alpha = rng.randrange(2, 14)
            beta = rng.randrange(-12, 13)
            if beta == 0 or gcd(alpha, beta) != 1:
                continue
            fiber = complete_matrix(alpha, beta)
            lam = rng.choice([1, 2, 3, 4, 6, 8, 12])
            mu0 = rng.randrange(-20, 21)
            step = rng.choice([2, -2])
            first, second = slope_pencil(fiber, lam, mu0, step)
            checked += check_certificate(first, second, horizon=80)
        assert checked > 1500

    def test_growth_means_unbounded(self):
        # (6t+2, -4t-1) normalizes to (6t+2, 2t+1) = [2, 1, 2t]; the
        # growing digit is kept, so the bound is exactly t + 1.
        fiber = complete_matrix(3, 1)
        first, second = slope_pencil(fiber, 1, 1, 2)
        cert = certified_tail(first, second)
        assert cert is not None and cert.grows()
        assert cert.prefix == (2, 1)
        t = cert.t_min
        assert cert.bound_at(t + 100) > cert.bound_at(t) + 50
        for t in range(max(1, cert.t_min), 40):
            mu = 1 + 2 * t
            assert n_genus(LensCurve(3 * mu - 1, 1 - 2 * mu)) \
                == cert.bound_at(t) == t + 1

    def test_plateau_when_skip_rule_fires(self):
        # (16t+2, -14t-1) has stable prefix (7, 1) whose b-sum is even
        # with the last digit kept, so the next digit is skipped and only
        # the constant bound 4 survives; N really does sit at 7 along the
        # coprime steps of this pencil.
        fiber = complete_matrix(8, 1)
        first, second = slope_pencil(fiber, 6, 1, 2)
        cert = certified_tail(first, second)
        assert cert is not None and not cert.grows()
        assert cert.prefix == (7, 1)
        assert cert.bound_at(cert.t_min) == 4

    def test_bound_monotone(self):
        fiber = complete_matrix(5, 2)
        first, second = slope_pencil(fiber, 3, -1, -2)
        cert = certified_tail(first, second)
        assert cert is not None
        values = [cert.bound_at(t) for t in range(cert.t_min,
                                                  cert.t_min + 50)]
        assert all(x <= y for x, y in zip(values, values[1:]))

    def test_constant_first_entry(self):
        # (4, 2t + 1): residues 1 and 3 mod 4 both give N(4, q) = 2.
        cert = certified_tail(Lin(0, 4), Lin(2, 1))
        assert cert is not None
        assert cert.bound_at(0) == 2
        for t in range(40):
            assert n_genus(LensCurve(4, 2 * t + 1)) >= cert.bound_at(t)

    def test_degenerate_pencils(self):
        assert certified_tail(Lin(0, 0), Lin(2, 1)) is None

    def test_negative_slopes_flip(self):
        cert_pos = certified_tail(Lin(4, 2), Lin(2, 1))
        cert_neg = certified_tail(Lin(-4, -2), Lin(-2, -1))
        assert cert_pos == cert_neg

    def test_explicit_family(self):
        # (2n - 12, 13 - 2n) normalizes to (2n - 12, 1): N = n - 6, and
        # the pencil n = 7 + t certifies exactly that growth.
        first, second = Lin(2, 14 - 12), Lin(-2, 13 - 14)
        cert = certified_tail(first, second)
        assert cert is not None
        for t in range(cert.t_min, cert.t_min + 60):
            n = 7 + t
            actual = n_genus(LensCurve(2 * n - 12, 13 - 2 * n))
            assert actual == n - 6
            assert cert.bound_at(t) <= actual
