import itertools
import random

import pytest
from hypothesis import given, strategies as st

from dyckperm import (
    DyckPath,
    Perm,
    count_ccps,
    enumerate_ccps,
    invert,
    is_ccp,
    is_injective_on_paths,
    parse_perm,
    sigma_path,
    tunneling,
)
from dyckperm import errors, partitions
from dyckperm.ccp import ccp_certificate, invert_steps, iter_ccp_images
from dyckperm.dyck import iter_words
from dyckperm.perm import all_perms
from oracles import is_ccp_literal, random_word


def random_ccp(n, rng):
    """Grow a random block one neighbour at a time."""
    m = 2 * n
    lo = hi = rng.randint(1, m)
    images = [lo]
    for _ in range(m - 1):
        if rng.random() < 0.5:
            lo = (lo - 2) % m + 1
            images.append(lo)
        else:
            hi = hi % m + 1
            images.append(hi)
    return Perm(tuple(images))


@st.composite
def ccp_and_path(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    rng = random.Random(draw(st.integers(0, 2**32)))
    return random_ccp(n, rng), DyckPath(random_word(n, rng))


@pytest.mark.parametrize("sigma, expected", [("213645", True), ("236145", False), ("123456", True)])
def test_is_ccp_examples(sigma, expected):
    assert is_ccp(parse_perm(sigma)) is expected
    assert is_ccp_literal(parse_perm(sigma).images) is expected


def test_certificate():
    cert = ccp_certificate(parse_perm("213645"))
    assert cert is not None
    for k, block in enumerate(cert.blocks, 1):
        assert block.size == k and set(block.members()) == set(cert.perm.images[:k])
    assert ccp_certificate(parse_perm("236145")) is None


@pytest.mark.parametrize("n, expected", [(1, 2), (3, 96), (5, 2560)])
def test_count_ccps(n, expected):
    assert count_ccps(n) == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_count_and_validity(n):
    found = list(iter_ccp_images(n))
    assert len(found) == len(set(found)) == count_ccps(n) == n * 2 ** (2 * n - 1)
    assert all(is_ccp_literal(s) for s in found)


def test_enumerate_small():
    assert [str(s) for s in enumerate_ccps(1)] == ["1,2", "2,1"]
    assert len(list(enumerate_ccps(2))) == 16


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_is_exactly_the_filter(n):
    assert set(iter_ccp_images(n)) == {s for s in all_perms(2 * n) if is_ccp_literal(s)}


def test_invert_examples():
    assert invert(parse_perm("162354"), DyckPath("uududd")).word == "ududud"
    assert invert(parse_perm("234561"), DyckPath("uududd")).word == "ududud"
    for w in iter_words(4):
        assert invert(Perm.identity(8), DyckPath(w)).word == w


def test_invert_iteration_table():
    steps = [(s.k, s.block, s.entry, s.endpoints, s.partner) for s in invert_steps(parse_perm("162354"), DyckPath("uududd"))]
    assert steps == [
        (3, {1, 6}, 2, (1,), 1),
        (5, {1, 2, 3, 6}, 5, (6,), 6),
        (6, {1, 2, 3, 5, 6}, 4, (5, 3), 3),
    ]


def test_invert_errors():
    with pytest.raises(errors.NotCcp):
        invert(parse_perm("236145"), DyckPath("uududd"))
    with pytest.raises(errors.SizeMismatch):
        invert(parse_perm("1234"), DyckPath("uududd"))


@pytest.mark.parametrize("n", range(1, 6))
def test_invert_round_trip_exhaustive(n):
    paths = [DyckPath(w) for w in iter_words(n)]
    for images in iter_ccp_images(n):
        sigma = Perm(images)
        for p in paths:
            q = invert(sigma, p)
            assert sigma_path(sigma, q) == p
            assert invert(sigma, sigma_path(sigma, p)) == p


@given(ccp_and_path())
def test_invert_round_trip_random(case):
    sigma, p = case
    assert sigma_path(sigma, invert(sigma, p)) == p


@given(ccp_and_path())
def test_last_step_endpoint_agreement(case):
    sigma, p = case
    steps = list(invert_steps(sigma, p))
    for st_ in steps[:-1]:
        assert len(st_.endpoints) == 1
    last = steps[-1]
    assert last.k == len(sigma)
    if len(last.endpoints) == 2:
        # only one label is left unpaired, so either walk lands on it
        paired = {x for s in steps[:-1] for x in (s.entry, s.partner)}
        assert set(range(1, len(sigma) + 1)) - paired == {last.entry, last.partner}


def test_both_endpoints_happen():
    seen = {len(s.endpoints) for images in iter_ccp_images(3) for w in iter_words(3)
            for s in invert_steps(Perm(images), DyckPath(w))}
    assert seen == {1, 2}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_characterization(n):
    for images in all_perms(2 * n):
        sigma = Perm(images)
        assert is_injective_on_paths(sigma) == is_ccp(sigma) == is_ccp_literal(images)


@pytest.mark.parametrize(
    "sigma, expected", [("213645", True), ("236145", False), ("123456", True)]
)
def test_injective_examples(sigma, expected):
    assert is_injective_on_paths(parse_perm(sigma), 3) is expected


@pytest.mark.parametrize("n", range(1, 7))
def test_identity_injective(n):
    assert is_injective_on_paths(Perm.identity(2 * n), n)


def test_injective_size_mismatch():
    with pytest.raises(errors.SizeMismatch):
        is_injective_on_paths(Perm.identity(4), 3)


def test_ccps_have_parity_one_one():
    for images in iter_ccp_images(4):
        assert partitions.parity(Perm(images)) == partitions.ParityPair(1, 1)
        assert partitions.class_size(Perm(images)) == 4


def test_invert_output_is_noncrossing():
    # path_from_tunneling would raise on a crossing pairing
    for images in itertools.islice(iter_ccp_images(4), 0, None, 7):
        for w in iter_words(4):
            q = invert(Perm(images), DyckPath(w))
            assert tunneling(q).chords()
