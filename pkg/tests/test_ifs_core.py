import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ifpsoft import (
    DegreePair,
    DomainError,
    FuzzySet,
    IntuitionisticFuzzySet,
    ifs_complement,
    ifs_equal,
    ifs_intersection,
    ifs_product,
    ifs_subset,
    ifs_sum,
    ifs_union,
)

from conftest import TOL, degree_pairs

G = ["x1"]


def one(alpha, beta):
    return IntuitionisticFuzzySet(G, {"x1": (alpha, beta)})


def assert_pair(d, alpha, beta):
    assert d.alpha == pytest.approx(alpha, abs=TOL)
    assert d.beta == pytest.approx(beta, abs=TOL)


class TestDegreePair:
    def test_valid(self):
        d = DegreePair(0.4, 0.6)
        assert d.hesitation == pytest.approx(0.0)

    @pytest.mark.parametrize("alpha,beta", [(0.3, 0.8), (-0.1, 0.2), (0.5, 1.2), (float("nan"), 0.0)])
    def test_rejects(self, alpha, beta):
        with pytest.raises(DomainError):
            DegreePair(alpha, beta)

    def test_tolerance_on_sum(self):
        DegreePair(0.7, 0.3 + 5e-10)
        with pytest.raises(DomainError):
            DegreePair(0.7, 0.3 + 1e-8)


class TestSets:
    def test_absent_reads_non_member(self):
        a = IntuitionisticFuzzySet(["x1", "x2"], {"x1": (0.4, 0.5)})
        assert a["x2"] == DegreePair(0.0, 1.0)

    def test_explicit_default_is_dropped(self):
        a = IntuitionisticFuzzySet(["x1", "x2"], {"x1": (0.4, 0.5), "x2": (0.0, 1.0)})
        assert "x2" not in a.degrees
        assert a == IntuitionisticFuzzySet(["x1", "x2"], {"x1": (0.4, 0.5)})

    def test_unknown_element(self):
        with pytest.raises(DomainError):
            IntuitionisticFuzzySet(["x1"], {"x9": (0.1, 0.1)})

    def test_fuzzy_set_bounds(self):
        with pytest.raises(DomainError):
            FuzzySet(["u1"], {"u1": 1.5})
        assert FuzzySet(["u1", "u2"], {"u1": 0.5})["u2"] == 0.0


class TestSubset:
    def test_componentwise(self):
        assert ifs_subset(one(0.4, 0.6), one(0.5, 0.5))

    def test_reflexive(self):
        a = one(0.4, 0.6)
        assert ifs_subset(a, a)

    def test_beta_rising_breaks_it(self):
        # alpha 0.4 <= 0.5 holds but beta 0.3 >= 0.5 does not
        assert not ifs_subset(one(0.4, 0.3), one(0.5, 0.5))

    def test_ground_mismatch(self):
        with pytest.raises(DomainError):
            ifs_subset(one(0.1, 0.1), IntuitionisticFuzzySet(["x2"]))


class TestComplement:
    def test_swap(self):
        assert_pair(ifs_complement(one(0.4, 0.5))["x1"], 0.5, 0.4)

    def test_involution(self):
        a = one(0.4, 0.5)
        assert ifs_complement(ifs_complement(a)) == a

    def test_boundary(self):
        assert_pair(ifs_complement(one(0.0, 1.0))["x1"], 1.0, 0.0)


class TestLatticeAndAlgebraic:
    def test_union_intersection(self):
        a, b = one(0.4, 0.5), one(0.6, 0.3)
        assert_pair(ifs_union(a, b)["x1"], 0.6, 0.3)
        assert_pair(ifs_intersection(a, b)["x1"], 0.4, 0.5)

    def test_union_idempotent_and_identity(self):
        a = one(0.4, 0.5)
        assert ifs_union(a, a) == a
        assert ifs_union(IntuitionisticFuzzySet(G), a) == a

    def test_sum_product_values(self):
        a, b = one(0.4, 0.5), one(0.6, 0.3)
        # 0.4 + 0.6 - 0.24 = 0.76, 0.5 * 0.3 = 0.15
        assert_pair(ifs_sum(a, b)["x1"], 0.76, 0.15)
        # 0.4 * 0.6 = 0.24, 0.5 + 0.3 - 0.15 = 0.65
        assert_pair(ifs_product(a, b)["x1"], 0.24, 0.65)

    def test_identities_and_absorbing(self):
        a = one(0.4, 0.5)
        assert ifs_sum(a, one(0.0, 1.0)) == a
        assert ifs_product(a, one(1.0, 0.0)) == a
        assert_pair(ifs_sum(a, one(1.0, 0.0))["x1"], 1.0, 0.0)

    def test_ground_mismatch(self):
        for op in (ifs_union, ifs_intersection, ifs_sum, ifs_product, ifs_equal):
            with pytest.raises(DomainError):
                op(one(0.1, 0.1), IntuitionisticFuzzySet(["x2"]))


OPS = [ifs_union, ifs_intersection, ifs_sum, ifs_product]


def random_ifs(rng, ground):
    degrees = {}
    for x in ground:
        a = rng.random()
        degrees[x] = (a, rng.random() * (1 - a))
    return IntuitionisticFuzzySet(ground, degrees)


def test_closure_on_random_pairs():
    rng = random.Random(11)
    ground = ["x1", "x2", "x3"]
    for _ in range(1000):
        a, b = random_ifs(rng, ground), random_ifs(rng, ground)
        for op in OPS + [lambda p, q: ifs_complement(p)]:
            for _, d in op(a, b).items():
                assert d.alpha + d.beta <= 1 + TOL
                assert 0 <= d.alpha <= 1 and 0 <= d.beta <= 1


@given(st.lists(degree_pairs(), min_size=3, max_size=3))
def test_commutative_associative(pairs):
    a, b, c = (one(*p) for p in pairs)
    for op in OPS:
        assert op(a, b) == op(b, a)
        assert op(op(a, b), c) == op(a, op(b, c))


@given(degree_pairs())
def test_complement_involution_exact(p):
    a = one(*p)
    # dataclass equality: exact, no tolerance
    assert ifs_complement(ifs_complement(a))["x1"] == a["x1"]


grid_pairs = st.tuples(st.integers(0, 20), st.integers(0, 20)).filter(
    lambda ij: sum(ij) <= 20
).map(lambda ij: (ij[0] / 20, ij[1] / 20))


# Subset compares at tolerance, so transitivity is checked on the 0.05 grid
# where no chain of near-ties can accumulate.
@given(st.lists(grid_pairs, min_size=3, max_size=3))
def test_subset_is_partial_order(pairs):
    a, b, c = (one(*p) for p in pairs)
    assert ifs_subset(a, a)
    if ifs_subset(a, b) and ifs_subset(b, c):
        assert ifs_subset(a, c)


@given(st.lists(degree_pairs(), min_size=2, max_size=2))
def test_mutual_subset_is_equality(pairs):
    a, b = (one(*p) for p in pairs)
    assert (ifs_subset(a, b) and ifs_subset(b, a)) == ifs_equal(a, b)


def test_subset_order_exhaustive_on_grid():
    grid = [(i / 4, j / 4) for i, j in itertools.product(range(5), repeat=2) if i + j <= 4]
    sets = [one(*p) for p in grid]
    for a, b in itertools.product(sets, repeat=2):
        mutual = ifs_subset(a, b) and ifs_subset(b, a)
        assert mutual == (a == b)
