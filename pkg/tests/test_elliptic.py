import random
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fmpartners.elliptic import (EllipticSurfaceData, RankDegree,
                                 TransformMatrix, enumerate_partners,
                                 fm_action, normalize_jacobian,
                                 validate_transform)
from fmpartners.errors import (CoprimalityViolated, HypothesisViolated,
                               NotSL2)
from conftest import partner_count_oracle

L1 = EllipticSurfaceData(1)
L5 = EllipticSurfaceData(5)
L6 = EllipticSurfaceData(6)


def random_sl2(rng):
    # build from elementary shears, always determinant one
    m = TransformMatrix(((1, 0), (0, 1)))
    for _ in range(rng.randint(1, 6)):
        t = rng.randint(-4, 4)
        if rng.random() < 0.5:
            m = m @ TransformMatrix(((1, t), (0, 1)))
        else:
            m = m @ TransformMatrix(((1, 0), (t, 1)))
    return m


def test_surface_data_validation():
    with pytest.raises(ValueError):
        EllipticSurfaceData(0)
    with pytest.raises(ValueError):
        EllipticSurfaceData(-3)
    assert EllipticSurfaceData(4).kodaira_nonzero


def test_surface_data_round_trip():
    s = EllipticSurfaceData(6, kodaira_nonzero=False)
    assert EllipticSurfaceData.from_dict(s.to_dict()) == s


def test_transform_det_and_inverse():
    m = TransformMatrix(((2, 1), (1, 1)))
    assert m.det == 1
    inv = m.inverse()
    assert (m @ inv).rows == ((1, 0), (0, 1))
    assert (inv @ m).rows == ((1, 0), (0, 1))
    with pytest.raises(NotSL2):
        TransformMatrix(((2, 0), (0, 2))).inverse()


def test_validate_transform_frozen():
    assert validate_transform(TransformMatrix(((1, 1), (0, 1))), L1)
    assert validate_transform(TransformMatrix(((1, 1), (0, 1))), L6)
    # lower-left not divisible by the fibre degree gcd
    assert not validate_transform(TransformMatrix(((2, 1), (1, 1))),
                                  EllipticSurfaceData(2))
    assert validate_transform(TransformMatrix(((2, 1), (1, 1))), L1)
    # upper-right entry must be positive
    assert not validate_transform(TransformMatrix(((1, 0), (0, 1))), L1)
    assert not validate_transform(TransformMatrix(((0, -1), (1, 0))), L1)
    with pytest.raises(NotSL2):
        validate_transform(TransformMatrix(((1, 1), (1, 1))), L1)


def test_validated_transforms_closed_under_product():
    rng = random.Random(31)
    found = 0
    for _ in range(1200):
        lam = rng.randint(1, 6)
        surface = EllipticSurfaceData(lam)
        m1, m2 = random_sl2(rng), random_sl2(rng)
        if validate_transform(m1, surface) and validate_transform(m2, surface):
            found += 1
            prod = m1 @ m2
            assert prod.det == 1
            # divisibility of the lower-left entry survives products
            assert prod.rows[1][0] % lam == 0
    assert found > 20


def test_fm_action_frozen():
    m = TransformMatrix(((0, 1), (-1, 0)))
    assert fm_action(m, RankDegree(1, 0)) == RankDegree(0, -1)
    assert fm_action(m, RankDegree(0, 1)) == RankDegree(1, 0)


@given(st.integers(-9, 9), st.integers(-9, 9))
def test_fm_action_identity(r, d):
    ident = TransformMatrix(((1, 0), (0, 1)))
    assert fm_action(ident, RankDegree(r, d)) == RankDegree(r, d)


def test_fm_action_composition_and_inverse():
    rng = random.Random(32)
    for _ in range(200):
        m1, m2 = random_sl2(rng), random_sl2(rng)
        v = RankDegree(rng.randint(-9, 9), rng.randint(-9, 9))
        assert fm_action(m1 @ m2, v) == fm_action(m1, fm_action(m2, v))
        assert fm_action(m1.inverse(), fm_action(m1, v)) == v


def test_normalize_frozen():
    assert normalize_jacobian(1, 1, L1) == 1
    assert normalize_jacobian(3, 7, L5) == 2
    assert normalize_jacobian(1, 1, L5) == 1
    assert normalize_jacobian(1, 4, L5) == 1
    assert normalize_jacobian(2, 5, L6) == 1


def test_normalize_requires_positive_degree():
    with pytest.raises(ValueError):
        normalize_jacobian(0, 1, L5)
    with pytest.raises(ValueError):
        normalize_jacobian(-2, 1, L5)


def test_normalize_coprimality():
    with pytest.raises(CoprimalityViolated):
        normalize_jacobian(1, 5, L5)
    with pytest.raises(CoprimalityViolated):
        normalize_jacobian(2, 4, L1)
    with pytest.raises(CoprimalityViolated):
        normalize_jacobian(3, 3, L1)


def test_normalize_invariances():
    rng = random.Random(33)
    for _ in range(300):
        lam = rng.randint(1, 12)
        surface = EllipticSurfaceData(lam)
        a = rng.randint(1, 9)
        b = rng.randint(-40, 40)
        if gcd(b, a * lam) != 1:
            continue
        base = normalize_jacobian(a, b, surface)
        # shifting b by the gcd and negating b land on the same Jacobian;
        # shifted values must still satisfy the coprimality precondition
        for other in (b + lam, b - lam, -b):
            if gcd(other, a * lam) == 1:
                assert normalize_jacobian(a, other, surface) == base
        # the label is already canonical
        if base != 0 and gcd(base, a * lam) == 1:
            assert normalize_jacobian(a, base, surface) == base
        assert 0 <= base <= max(1, lam // 2)


def test_enumerate_partners_frozen():
    assert enumerate_partners(L1) == ((1,), 1)
    for lam in (2, 3, 4, 6):
        assert enumerate_partners(EllipticSurfaceData(lam)) == ((1,), 1)
    assert enumerate_partners(L5) == ((1, 2), 2)
    assert enumerate_partners(EllipticSurfaceData(12)) == ((1, 5), 2)


def test_enumerate_partners_vs_oracle():
    for lam in range(1, 31):
        residues, count = enumerate_partners(EllipticSurfaceData(lam))
        assert count == len(residues)
        assert count == partner_count_oracle(lam)
        for r in residues:
            assert 1 <= r <= max(1, lam // 2)
            assert gcd(r, lam) == 1
        assert sorted(set(residues)) == list(residues)


def test_enumerate_partners_labels_are_normal_forms():
    for lam in range(2, 20):
        surface = EllipticSurfaceData(lam)
        residues, _ = enumerate_partners(surface)
        seen = {normalize_jacobian(1, b, surface)
                for b in range(1, 3 * lam) if gcd(b, lam) == 1}
        assert set(residues) == seen


def test_enumerate_partners_requires_nonzero_kodaira():
    with pytest.raises(HypothesisViolated):
        enumerate_partners(EllipticSurfaceData(3, kodaira_nonzero=False))
