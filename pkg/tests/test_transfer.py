import random

import pytest

import subshift as ss
from subshift.errors import (
    DomainMismatch,
    MatrixMismatch,
    NegativeWeight,
    NotTransfer,
    SupportViolation,
)
from support import (
    brute_force_preimage_count,
    masked,
    no_zero_row_matrices,
    random_function,
    random_fraction,
    random_mask,
    random_matrix,
    random_weight,
)


def const_weight(A, value=1):
    return ss.Weight.full(ss.CylinderFunction.constant(A, value))


def test_weight_normalization(golden):
    U = ss.DomainMask.from_words(golden, ["11", "21"])
    carrier = ss.CylinderFunction(golden, 1, {(1,): 2, (2,): 3})
    rho = ss.Weight(carrier, U)
    assert rho.depth == 2  # refined up to the domain depth
    assert rho.carrier.values == {(1, 1): 2, (1, 2): 0, (2, 1): 3}
    # negative values outside the domain are masked away, inside they fail
    negative_outside = ss.CylinderFunction(golden, 2, {(1, 1): 1, (1, 2): -5, (2, 1): 0})
    assert ss.Weight(negative_outside, U).carrier.values[(1, 2)] == 0
    with pytest.raises(NegativeWeight):
        ss.Weight(ss.CylinderFunction(golden, 1, {(1,): -1, (2,): 1}), ss.DomainMask.full(golden))


def test_transfer_apply_examples(golden, full2):
    assert ss.transfer_apply(
        const_weight(full2), ss.CylinderFunction.constant(full2, 1)
    ) == ss.CylinderFunction.constant(full2, 2)
    out = ss.transfer_apply(const_weight(golden), ss.CylinderFunction.indicator(golden, "2"))
    assert out == ss.CylinderFunction.indicator(golden, "1")
    zero = ss.transfer_apply(const_weight(golden, 0), ss.CylinderFunction.constant(golden, 5))
    assert zero.is_zero()


def test_transfer_apply_output_depth(golden):
    rho = ss.Weight.full(random_function(random.Random(0), golden, 3, positive=True))
    f = random_function(random.Random(1), golden, 2)
    assert ss.transfer_apply(rho, f).depth == 2  # max(3, 2) - 1
    shallow = ss.transfer_apply(const_weight(golden), ss.CylinderFunction.constant(golden, 1))
    assert shallow.depth == 1  # floored at 1


def test_transfer_apply_zero_off_image(golden):
    # U = [21]: the image is [1], so the result vanishes on [2]
    U = ss.DomainMask.from_words(golden, ["21"])
    rho = ss.Weight(ss.CylinderFunction.constant(golden, 1), U)
    f = U.indicator()
    out = ss.transfer_apply(rho, f)
    assert ss.evaluate(out, "21") == 0
    assert ss.evaluate(out, "12") == 1


def test_support_violation(golden):
    U = ss.DomainMask.from_words(golden, ["21"])
    rho = ss.Weight(ss.CylinderFunction.constant(golden, 1), U)
    with pytest.raises(SupportViolation):
        ss.transfer_apply(rho, ss.CylinderFunction.constant(golden, 1))


def test_transfer_identity_trivial_cases(golden):
    rho = const_weight(golden)
    f = ss.CylinderFunction.indicator(golden, "12")
    assert ss.verify_transfer_identity(rho, f, ss.CylinderFunction.constant(golden, 1))
    assert ss.verify_transfer_identity(
        rho, ss.CylinderFunction.zero(golden), random_function(random.Random(2), golden, 2)
    )


def test_transfer_identity_random_suite():
    rng = random.Random(13)
    for _ in range(60):
        A = random_matrix(rng, nmax=4)
        rho = random_weight(rng, A, depth_max=3, zero_prob=0.2)
        f = masked(random_function(rng, A, rng.randint(1, 3)), rho.domain)
        g = random_function(rng, A, rng.randint(1, 3))
        assert ss.verify_transfer_identity(rho, f, g)


def test_transfer_linearity_and_positivity():
    rng = random.Random(17)
    for _ in range(40):
        A = random_matrix(rng, nmax=4)
        rho = random_weight(rng, A, zero_prob=0.2)
        f = masked(random_function(rng, A, rng.randint(1, 3)), rho.domain)
        g = masked(random_function(rng, A, rng.randint(1, 3)), rho.domain)
        a, b = random_fraction(rng), random_fraction(rng)
        lhs = ss.transfer_apply(rho, a * f + b * g)
        assert lhs == a * ss.transfer_apply(rho, f) + b * ss.transfer_apply(rho, g)
        nonneg = masked(random_function(rng, A, 2, nonneg=True), rho.domain)
        image = ss.transfer_apply(rho, nonneg)
        assert all(v >= 0 for v in image.values.values())


def test_counting_law_matches_brute_force():
    corpus = [
        ss.AdjacencyMatrix.from_rows([[1, 1], [1, 1]]),
        ss.AdjacencyMatrix.from_rows([[1, 1], [1, 0]]),
        ss.AdjacencyMatrix.from_rows([[0, 1], [1, 0]]),
    ]
    for A in corpus:
        counting = ss.transfer_apply(const_weight(A), ss.CylinderFunction.constant(A, 1))
        assert counting.depth == 1
        for s in A.symbols:
            column_sum = sum(A.rows[a - 1][s - 1] for a in A.symbols)
            assert ss.evaluate(counting, (s,)) == column_sum
            assert column_sum == brute_force_preimage_count(A, s)


def test_recover_weight_examples(full2, golden):
    rho0 = ss.Weight.full(ss.CylinderFunction(full2, 1, {(1,): "1/2", (2,): "1/3"}))
    assert ss.recover_weight(ss.as_operator(rho0), rho0.domain) == rho0

    U = ss.DomainMask.full(golden)
    zero_op = lambda f: ss.CylinderFunction.zero(golden)
    assert ss.recover_weight(zero_op, U) == ss.Weight.full(ss.CylinderFunction.zero(golden))

    counting = const_weight(golden)
    assert ss.recover_weight(ss.as_operator(counting), U) == counting


def test_recover_weight_round_trip_with_zeros_and_domains():
    rng = random.Random(23)
    for _ in range(40):
        A = random_matrix(rng, nmax=3)
        rho = random_weight(rng, A, depth_max=3, zero_prob=0.3)
        recovered = ss.recover_weight(ss.as_operator(rho), rho.domain)
        assert recovered == rho


def test_recover_weight_rejects_non_transfer(golden):
    U = ss.DomainMask.full(golden)
    with pytest.raises(NotTransfer):
        ss.recover_weight(lambda f: ss.CylinderFunction.constant(golden, 1), U)
    with pytest.raises(NotTransfer):
        ss.recover_weight(lambda f: ss.pointwise("mul", f, f), U)


def test_recover_weight_rejects_negative_operator(golden):
    rho = const_weight(golden)
    negated = lambda f: -ss.transfer_apply(rho, f)
    with pytest.raises(NegativeWeight):
        ss.recover_weight(negated, rho.domain)


def test_recover_weight_wrong_matrix(golden, full2):
    with pytest.raises(MatrixMismatch):
        ss.recover_weight(
            lambda f: ss.CylinderFunction.zero(full2), ss.DomainMask.full(golden)
        )


def test_zero_set_examples(golden, full2):
    assert ss.zero_set(const_weight(golden)) == frozenset()
    ind = ss.Weight.full(ss.CylinderFunction.indicator(full2, "1"))
    assert ss.zero_set(ind) == {(2,)}
    zero = ss.Weight.full(ss.CylinderFunction.zero(golden, 2))
    assert ss.zero_set(zero) == set(ss.enumerate_words(golden, 2))


def test_weights_equivalent_examples(golden, full2):
    rng = random.Random(29)
    rho = random_weight(rng, golden, domain=ss.DomainMask.full(golden))
    doubled = ss.Weight(2 * rho.carrier, rho.domain)
    equivalent, r = ss.weights_equivalent(rho, doubled)
    assert equivalent and r == ss.CylinderFunction.constant(golden, "1/2")

    ind = ss.Weight.full(ss.CylinderFunction.indicator(full2, "1"))
    one = const_weight(full2)
    assert ss.weights_equivalent(ind, one) == (False, None)

    positive = ss.Weight.full(ss.CylinderFunction(full2, 1, {(1,): "3/4", (2,): 5}))
    equivalent, r = ss.weights_equivalent(one, positive)
    assert equivalent
    assert ss.pointwise("mul", r, positive.carrier) == one.carrier
    assert all(v != 0 for v in r.values.values())


def test_weights_equivalent_errors(golden, full2):
    with pytest.raises(MatrixMismatch):
        ss.weights_equivalent(const_weight(golden), const_weight(full2))
    with pytest.raises(DomainMismatch):
        ss.weights_equivalent(
            const_weight(golden),
            ss.Weight(
                ss.CylinderFunction.constant(golden, 1),
                ss.DomainMask.from_words(golden, ["21"]),
            ),
        )


def test_weights_equivalent_respects_zero_cylinders(golden):
    U = ss.DomainMask.full(golden, 2)
    base = ss.CylinderFunction(golden, 2, {(1, 1): 0, (1, 2): 2, (2, 1): "1/5"})
    rho = ss.Weight(ss.CylinderFunction(golden, 2, {(1, 1): 0, (1, 2): 1, (2, 1): 3}), U)
    rho2 = ss.Weight(base, U)
    equivalent, r = ss.weights_equivalent(rho, rho2)
    assert equivalent
    assert ss.pointwise("mul", r, rho2.carrier) == rho.carrier
    assert all(v != 0 for v in r.values.values())
    bumped = ss.Weight(
        ss.CylinderFunction(golden, 2, {(1, 1): 1, (1, 2): 1, (2, 1): 3}), U
    )
    assert ss.weights_equivalent(rho, bumped) == (False, None)


def test_weight_file_round_trip(golden):
    U = ss.DomainMask.from_words(golden, ["11", "21"])
    rho = ss.Weight(ss.CylinderFunction(golden, 1, {(1,): "1/2", (2,): 1}), U)
    text = ss.format_weight_file(rho)
    assert ss.parse_weight_file(golden, text) == rho
    full = ss.parse_weight_file(golden, "depth 1\n1 1/2\n2 1\n")
    assert full.domain.is_full()
