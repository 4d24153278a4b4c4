import math
import random

import pytest

import domkit._core_py as core_py
from domkit.model import CirculantInstance, DifferenceSet
from domkit.solver import (
    gamma_bruteforce,
    gamma_exact,
    kernel_name,
    perfect_code_exists,
    reduce_mod,
    verify_witness,
)

try:
    import domkit._core as core_c
except ImportError:
    core_c = None


def random_instance(rng, max_n=18, max_steps=4):
    n = rng.randint(1, max_n)
    count = rng.randint(1, max_steps)
    steps = rng.sample([x for x in range(-30, 31) if x != 0], count)
    return reduce_mod(DifferenceSet(tuple(steps)), n)


def test_reduce_mod_examples():
    inst = reduce_mod(DifferenceSet((1, 4)), 5)
    assert inst.connection == frozenset({1, 4})
    inst = reduce_mod(DifferenceSet((1, 6)), 6)
    assert inst.connection == frozenset({0, 1})
    assert inst.counts() == {0: 2, 1: 1}
    inst = reduce_mod(DifferenceSet((1, 2, 8)), 14)
    assert inst.connection == frozenset({1, 2, 8})
    with pytest.raises(ValueError):
        reduce_mod(DifferenceSet((1,)), 0)


def test_reduce_mod_multiplicity_sums():
    rng = random.Random(31337)
    for _ in range(200):
        count = rng.randint(1, 5)
        steps = DifferenceSet(tuple(rng.sample([x for x in range(-20, 21) if x], count)))
        p = rng.randint(1, 12)
        inst = reduce_mod(steps, p)
        assert sum(inst.counts().values()) == len(steps) + 1
        assert set(inst.counts()) == inst.connection | {0}


@pytest.mark.parametrize(
    "n, connection, expected",
    [
        (5, {1, 2}, 2),
        (11, {1, 6}, 4),
        (14, {1, 2, 8}, 4),
        (1, set(), 1),
        (10, {1, 2, 3}, 3),
        (6, {1, 2, 4}, 2),
        (3, set(), 3),
    ],
)
def test_gamma_exact_examples(n, connection, expected):
    cert = gamma_exact(CirculantInstance(n, frozenset(connection)))
    assert cert.gamma == expected
    assert len(cert.witness) == expected
    assert cert.explored >= 1


def test_gamma_certificate_properties():
    rng = random.Random(5150)
    for _ in range(150):
        inst = random_instance(rng)
        cert = gamma_exact(inst)
        m = len(inst.connection | {0})
        assert cert.gamma >= math.ceil(inst.modulus / m)
        assert len(cert.witness) == cert.gamma
        assert verify_witness(inst, cert.witness)


def test_gamma_matches_bruteforce():
    rng = random.Random(90210)
    for _ in range(120):
        inst = random_instance(rng, max_n=14)
        assert gamma_exact(inst).gamma == gamma_bruteforce(inst)


def test_gamma_monotone_in_connection():
    # adding a residue never increases gamma
    rng = random.Random(246810)
    for _ in range(100):
        n = rng.randint(2, 16)
        base = frozenset(rng.sample(range(1, n), rng.randint(0, min(3, n - 1))))
        extra = rng.randrange(1, n)
        small = gamma_exact(CirculantInstance(n, base | {extra})).gamma
        big = gamma_exact(CirculantInstance(n, base)).gamma
        assert small <= big


def test_bruteforce_size_cap():
    with pytest.raises(ValueError, match="oracle size limit"):
        gamma_bruteforce(CirculantInstance(25, frozenset({1})))


def test_verify_witness():
    inst = CirculantInstance(3, frozenset())
    assert verify_witness(inst, frozenset({0, 1, 2})) is True
    assert verify_witness(inst, frozenset({0, 1})) is False
    inst = CirculantInstance(5, frozenset({1, 2}))
    assert verify_witness(inst, frozenset({0, 2})) is True
    with pytest.raises(ValueError):
        verify_witness(inst, frozenset({5}))


@pytest.mark.parametrize(
    "n, connection, found",
    [
        (4, {1, 2, 3}, True),
        (5, {1, 4}, False),
        (6, {2, 4}, True),
        (6, {0, 1}, False),  # double self-loop can never cover exactly once
        (1, set(), True),
    ],
)
def test_perfect_code_examples(n, connection, found):
    witness = perfect_code_exists(CirculantInstance(n, frozenset(connection)))
    assert (witness is not None) is found


def test_perfect_code_witness_is_exact():
    rng = random.Random(8675309)
    hits = 0
    for _ in range(300):
        inst = random_instance(rng, max_n=16)
        witness = perfect_code_exists(inst)
        if witness is None:
            continue
        hits += 1
        counts = {x: 0 for x in range(inst.modulus)}
        for w in witness:
            for t, c in inst.counts().items():
                counts[(w + t) % inst.modulus] += c
        assert all(c == 1 for c in counts.values())
        assert len(witness) * sum(inst.counts().values()) == inst.modulus
    assert hits > 0


def test_perfect_code_is_minimum_dominating():
    # a perfect code meets the degree lower bound with equality
    for n, conn in [(4, {1, 2, 3}), (6, {2, 4}), (8, {1, 6, 7})]:
        inst = CirculantInstance(n, frozenset(conn))
        witness = perfect_code_exists(inst)
        if witness is not None:
            assert len(witness) == gamma_exact(inst).gamma


def test_kernel_dispatch():
    assert kernel_name() in ("compiled", "pure")


@pytest.mark.skipif(core_c is None, reason="compiled kernel not built")
def test_kernels_agree_bit_for_bit():
    rng = random.Random(13579)
    for _ in range(250):
        n = rng.randint(1, 34)
        conn = frozenset(rng.sample(range(1, max(2, n)), rng.randint(0, min(4, n - 1)))) if n > 1 else frozenset()
        offsets = sorted(conn | {0})
        assert core_py.solve_cover(n, offsets) == core_c.solve_cover(n, offsets)


def test_kernel_rejects_bad_input():
    with pytest.raises(ValueError):
        core_py.solve_cover(0, [0])
    with pytest.raises(ValueError):
        core_py.solve_cover(5, [])
    if core_c is not None:
        with pytest.raises(ValueError):
            core_c.solve_cover(0, [0])
        with pytest.raises(ValueError):
            core_c.solve_cover(5, [])
