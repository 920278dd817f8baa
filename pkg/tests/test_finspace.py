import pytest

from latclass.classifying import SpaceKind, build_space
from latclass.errors import (
    MissingEmpty,
    MissingFull,
    NotClosedUnderUnion,
    UnknownPoint,
)
from latclass.finspace import (
    closed_set_lattice,
    closure_of_point,
    homeomorphic,
    kq_vs_K_check,
    load_space,
    make_space,
    t0_quotient,
)
from latclass.lattice import chain, is_distributive, powerset_lattice, find_isomorphism
from latclass.spectra import spectrum_report


class TestLoadSpace:
    def test_sierpinski(self, named_spaces):
        X = named_spaces["sierpinski"]
        assert X.n == 2
        assert frozenset({0}) in X.closed_sets

    def test_union_closure_enforced(self):
        # {0} ∪ {1} is missing; the witness pair is reported
        with pytest.raises(NotClosedUnderUnion) as exc_info:
            make_space(["x", "y", "z"], [[], [0], [1], [0, 1, 2]])
        assert exc_info.value.witness == ((0,), (1,))

    def test_missing_empty_and_full(self):
        with pytest.raises(MissingEmpty):
            make_space(["x"], [[0]])
        with pytest.raises(MissingFull):
            make_space(["x"], [[]])

    def test_discrete_three_points(self, named_spaces):
        assert len(named_spaces["discrete-3"].closed_sets) == 8

    def test_document_round_trip(self, named_spaces):
        from latclass.finspace import space_doc
        X = named_spaces["sierpinski"]
        assert load_space(space_doc(X)) == X


class TestClosedSetLattice:
    def test_sierpinski_is_chain(self, named_spaces):
        L = closed_set_lattice(named_spaces["sierpinski"])
        assert find_isomorphism(L, chain(3)) is not None

    def test_discrete_two_is_powerset(self):
        X = make_space(["x", "y"], [[], [0], [1], [0, 1]])
        L = closed_set_lattice(X)
        assert find_isomorphism(L, powerset_lattice(["x", "y"])) is not None

    def test_always_distributive(self, named_spaces, random_spaces):
        for X in list(named_spaces.values()) + random_spaces[:60]:
            assert is_distributive(closed_set_lattice(X)).distributive

    def test_nondistributive_shape_still_distributive(self):
        X = make_space(["x", "y", "z"], [[], [0], [0, 1], [0, 2], [0, 1, 2]])
        assert is_distributive(closed_set_lattice(X)).distributive


class TestClosureOfPoint:
    def test_sierpinski(self, named_spaces):
        X = named_spaces["sierpinski"]
        assert closure_of_point(X, "y") == {0, 1}
        assert closure_of_point(X, "x") == {0}

    def test_discrete(self, named_spaces):
        X = named_spaces["discrete-3"]
        for i in range(3):
            assert closure_of_point(X, i) == {i}

    def test_chain_space(self, named_spaces):
        X = named_spaces["chain-space-3"]
        assert closure_of_point(X, "c") == {0, 1, 2}

    def test_unknown_point(self, named_spaces):
        with pytest.raises(UnknownPoint):
            closure_of_point(named_spaces["sierpinski"], "zzz")


class TestT0Quotient:
    def test_indiscrete_collapses(self, named_spaces):
        q = t0_quotient(named_spaces["indiscrete-2"])
        assert len(q.classes) == 1
        assert q.quotient.n == 1

    def test_t0_space_identity_partition(self, named_spaces):
        q = t0_quotient(named_spaces["sierpinski"])
        assert all(len(c) == 1 for c in q.classes)

    def test_two_merged_points(self):
        X = make_space(["a", "b", "c"], [[], [0, 1], [0, 1, 2]])
        q = t0_quotient(X)
        assert sorted(map(sorted, q.classes)) == [[0, 1], [2]]
        sier = make_space(["x", "y"], [[], [0], [0, 1]])
        assert homeomorphic(q.quotient, sier) is not None

    def test_idempotent(self, named_spaces, random_spaces):
        for X in list(named_spaces.values()) + random_spaces[:60]:
            q = t0_quotient(X)
            q2 = t0_quotient(q.quotient)
            assert all(len(c) == 1 for c in q2.classes)
            assert homeomorphic(q.quotient, q2.quotient) is not None


class TestKqVsK:
    def test_sierpinski(self, named_spaces):
        r = kq_vs_K_check(named_spaces["sierpinski"])
        assert r.ok and len(r.bijection) == 2

    def test_indiscrete(self):
        X = make_space([f"p{i}" for i in range(4)], [[], [0, 1, 2, 3]])
        r = kq_vs_K_check(X)
        assert r.ok and len(r.bijection) == 1

    def test_random_spaces(self, random_spaces):
        for X in random_spaces:
            r = kq_vs_K_check(X)
            assert r.ok, r.reason

    def test_every_point_has_representative(self, random_spaces):
        # each classifying-space point is the closure of some space point
        for X in random_spaces[:60]:
            L = closed_set_lattice(X)
            space = build_space(L, SpaceKind.K)
            closures = {closure_of_point(X, i) for i in range(X.n)}
            for p in space.points:
                assert X.closed_sets[p] in closures

    def test_kgp_equals_k_for_spaces(self, random_spaces):
        # finite spaces have specialization-closed topology
        for X in random_spaces[:60]:
            rep = spectrum_report(closed_set_lattice(X))
            assert rep.point_sets["kgp"] == rep.point_sets["k"]


class TestHomeomorphic:
    def test_relabeled(self, named_spaces):
        X = named_spaces["sierpinski"]
        Y = make_space(["u", "v"], [[], [1], [0, 1]])
        assert homeomorphic(X, Y) == {0: 1, 1: 0}

    def test_sierpinski_vs_discrete(self, named_spaces):
        Y = make_space(["u", "v"], [[], [0], [1], [0, 1]])
        assert homeomorphic(named_spaces["sierpinski"], Y) is None

    def test_discrete_vs_discrete(self):
        X = make_space(["a", "b", "c"],
                       [[], [0], [1], [2], [0, 1], [0, 2], [1, 2], [0, 1, 2]])
        Y = make_space(["u", "v", "w"],
                       [[], [0], [1], [2], [0, 1], [0, 2], [1, 2], [0, 1, 2]])
        assert homeomorphic(X, Y) is not None
