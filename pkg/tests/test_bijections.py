from itertools import permutations

import pytest

from arnold.bijections import (
    MalformedCycleError,
    MalformedSequenceError,
    NotInFamilyError,
    algo1,
    algo2,
    algo3,
    complement,
    double_bracket,
    phi_cud_b,
    phi_cud_d,
    phi_f,
    phi_vs_b,
    phi_vs_d,
    tau_flip,
)
from arnold.families import enumerate_family, flip_classes
from arnold.signed_perm import Cycle, CycleForm, from_window, peak_values
from arnold.trees import EMPTY, classify, count_empty, serialize


class TestDoubleBracket:
    def test_min_first(self):
        assert double_bracket((1, 3, 2)) == ((), 1, (3, 2))

    def test_min_last(self):
        assert double_bracket((9, 8)) == ((9,), 8, ())

    def test_min_interior(self):
        assert double_bracket((7, 4, 9, 8)) == ((7,), 4, (9, 8))

    def test_empty_rejected(self):
        with pytest.raises(MalformedSequenceError):
            double_bracket(())


class TestComplement:
    def test_pair(self):
        assert complement((9, 8)) == (8, 9)

    def test_singleton_fixed(self):
        assert complement((5,)) == (5,)

    def test_three(self):
        assert complement((2, 6, 3)) == (6, 2, 3)

    def test_involution(self):
        for p in permutations((2, 5, 7, 9)):
            assert complement(complement(p)) == p


class TestAlgo1:
    def chain_labels(self, t):
        out = []
        while t is not EMPTY:
            out.append(t.label)
            kids = [c for c in t.children if c is not EMPTY]
            assert len(kids) <= 1
            t = kids[0] if kids else EMPTY
        return out

    def test_chain_132(self):
        assert self.chain_labels(algo1((1, 3, 2))) == [1, 2, 3]

    def test_chain_56(self):
        assert self.chain_labels(algo1((5, 6))) == [5, 6]

    def test_chain_798(self):
        assert self.chain_labels(algo1((7, 9, 8))) == [7, 8, 9]

    def test_duplicates_rejected(self):
        with pytest.raises(MalformedSequenceError):
            algo1((1, 1))


class TestAlgo2:
    def test_single_positive_keeps_empty_leaves(self):
        assert serialize(algo2((4,))) == "4(.,.)"

    def test_negative_child_goes_right(self):
        assert serialize(algo2((1, -3, -2))) == "1(2(.,3),.)"

    def test_one_negative(self):
        assert serialize(algo2((5, -6))) == "5(6,.)"

    def test_leader_must_be_positive(self):
        with pytest.raises(MalformedCycleError):
            algo2((-1, 2))

    def test_root_right_child_is_empty(self):
        for cf in enumerate_family("cud-b", 4):
            for c in cf.cycles:
                t = algo2(c.entries)
                assert t.children is None or t.children[1] is EMPTY


class TestCycleMaps:
    def test_smallest_case(self):
        t = phi_cud_b(CycleForm((Cycle((1,)),)))
        assert serialize(t) == "1(.,.)"
        c = classify(t)
        assert (c.kind, c.rightmost_label) == ("o", 1)

    def test_type_b_worked_example(self):
        cf = CycleForm((Cycle((1, -3, -2)), Cycle((4,)), Cycle((5, -6)), Cycle((7, 9, -8))))
        c = classify(phi_cud_b(cf))
        assert (c.kind, c.rightmost_label, c.emp) == ("o", 7, 6)

    def test_type_d_worked_example(self):
        cf = CycleForm(
            (Cycle((1, -9, -2)), Cycle((3, 4)), Cycle((5, 8, -6)), Cycle((7, -7), bracket=True))
        )
        c = classify(phi_cud_d(cf))
        assert (c.kind, c.rightmost_label, c.emp) == ("*", 7, 6)

    def test_rejects_non_members(self):
        with pytest.raises(NotInFamilyError):
            phi_cud_b(CycleForm((Cycle((1, 2, 3)),)))  # not up-down
        with pytest.raises(NotInFamilyError):
            phi_cud_d(CycleForm((Cycle((1,)),)))

    def test_small_bijectivity(self):
        for n in range(1, 5):
            for fam_name, mapping, kind in (("cud-b", phi_cud_b, "o"), ("cud-d", phi_cud_d, "*")):
                members = enumerate_family(fam_name, n)
                images = {serialize(mapping(cf)) for cf in members}
                assert len(images) == len(members)
                for cf in members:
                    c = classify(mapping(cf))
                    assert c.kind == kind
                    assert c.rightmost_label == cf.cycles[-1].leader


class TestAlgo3:
    def test_orientation(self):
        t = algo3((7, 5, 1, 3, 4, 2, 6))
        assert t.label == 1
        assert serialize(t.children[1]) == serialize(algo3((7, 5)))
        assert serialize(t.children[0]) == serialize(algo3((3, 4, 2, 6)))

    def test_singleton(self):
        assert serialize(algo3((4,))) == "4(.,.)"

    def test_peak_nodes_have_two_empty_children(self):
        def double_empty_labels(t, acc):
            if t is EMPTY or t.children is None:
                return
            if t.children == (EMPTY, EMPTY):
                acc.add(t.label)
            double_empty_labels(t.children[0], acc)
            double_empty_labels(t.children[1], acc)

        for n in range(1, 7):
            for p in permutations(range(1, n + 1)):
                found = set()
                double_empty_labels(algo3(p), found)
                assert found - {p[0]} == set(peak_values(p))


class TestValleyMaps:
    def test_type_b_worked_example(self):
        # two negated valley successors, so two empty-leaf pairs removed
        c = classify(phi_vs_b(from_window([7, 5, -6, 8, 9, 4, 1, -3, 2])))
        assert (c.kind, c.rightmost_label, c.emp) == ("o", 7, 6)

    def test_type_d_worked_example(self):
        c = classify(phi_vs_d(from_window([-7, 5, 8, 6, 3, 4, 1, -9, 2])))
        assert (c.kind, c.rightmost_label, c.emp) == ("*", 7, 6)

    def test_trivial_member(self):
        t = phi_vs_b(from_window([1]))
        assert serialize(t) == "1(.,.)"

    def test_four_signings_of_51324(self):
        # the valley successors of 51324 carry the free signs
        members = [p for p in enumerate_family("vs-b", 5) if p.abs_window() == (5, 1, 3, 2, 4)]
        assert {p.window for p in members} == {
            (5, 1, 3, 2, 4),
            (5, 1, -3, 2, 4),
            (5, 1, 3, 2, -4),
            (5, 1, -3, 2, -4),
        }

    def test_rejects_non_members(self):
        with pytest.raises(NotInFamilyError):
            phi_vs_b(from_window([-1, 2]))
        with pytest.raises(NotInFamilyError):
            phi_vs_d(from_window([1, 2]))

    def test_small_bijectivity(self):
        for n in range(1, 5):
            for fam_name, mapping, kind in (("vs-b", phi_vs_b, "o"), ("vs-d", phi_vs_d, "*")):
                members = enumerate_family(fam_name, n)
                images = {serialize(mapping(p)) for p in members}
                assert len(images) == len(members)
                for p in members:
                    c = classify(mapping(p))
                    assert c.kind == kind
                    assert c.rightmost_label == abs(p.window[0])


class TestFlipMap:
    def test_explicit_tree(self):
        t = tau_flip(from_window([1, -2, 3]))
        assert serialize(t) == "1(2(.,3(.,.)),.)"
        assert count_empty(t) == 4
        all_members = [[1, -2, 3], [3, -2, 1], [-2, 3, 1], [1, 3, -2]]
        assert {serialize(tau_flip(from_window(w))) for w in all_members} == {serialize(t)}

    def test_four_element_class(self):
        members = [[-2, -4, 1, -3], [-3, 1, -2, -4], [-3, 1, -4, -2], [-4, -2, 1, -3]]
        trees = {serialize(tau_flip(from_window(w))) for w in members}
        assert len(trees) == 1
        c = classify(tau_flip(from_window(members[0])))
        assert (c.kind, c.rightmost_label) == ("*", 3)

    def test_negative_singleton(self):
        assert serialize(tau_flip(from_window([-1]))) == "1"

    def test_class_map_well_defined_small(self):
        for n in range(1, 5):
            for cls in flip_classes(n):
                trees = {serialize(tau_flip(from_window(w))) for w in cls.members}
                assert len(trees) == 1
                c = classify(phi_f(cls))
                assert c.kind == ("o" if cls.smax > 0 else "*")
                assert c.rightmost_label == abs(cls.smax)
