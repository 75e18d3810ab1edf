import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alternator.diagram import (
    EdgeClass,
    Sign,
    Tag,
    build_diagram,
    classification_counts,
    classify_edges,
    end_label,
    is_alternating,
    strand_components,
    trace_faces,
)
from alternator.errors import Disconnected, DuplicateLabelArity, NonPlanar
from alternator.gen import BraidWord, braid_closure, random_diagram

from conftest import alternation_violated, face_nonalt_signs

TREFOIL_TUPLES = [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)]


def seeded_diagrams(n=60):
    for seed in range(n):
        yield random_diagram(2 + seed % 3, 8 + seed % 9, seed)


class TestBuildDiagram:
    def test_trefoil_counts(self, trefoil):
        assert trefoil.num_crossings == 3
        assert trefoil.num_edges == 6
        # V - E + F = 2 forces F = 5
        assert trefoil.num_faces == 5

    def test_label_arity_violation(self):
        with pytest.raises(DuplicateLabelArity):
            build_diagram([(1, 2, 3, 4)])

    def test_opposite_slot_label_rejected(self):
        with pytest.raises(DuplicateLabelArity):
            build_diagram([(1, 2, 1, 2)])

    def test_disconnected(self):
        two = TREFOIL_TUPLES + [tuple(x + 6 for x in t) for t in TREFOIL_TUPLES]
        with pytest.raises(Disconnected):
            build_diagram(two)

    def test_empty_rejected(self):
        from alternator.errors import DiagramError

        with pytest.raises(DiagramError):
            build_diagram([])

    def test_deterministic_dart_ids(self, trefoil):
        # darts dense, sorted by (crossing index, slot)
        assert trefoil.darts() == list(range(12))
        for cid, c in trefoil.crossings.items():
            assert c.rotation == tuple(range(4 * cid, 4 * cid + 4))

    def test_nonplanar_rejected(self):
        # a crossing tuple set that traces to a torus
        with pytest.raises(NonPlanar):
            build_diagram([(1, 2, 3, 4), (3, 4, 1, 2)])


class TestTraceFaces:
    def test_trefoil_five_faces(self, trefoil):
        assert len(trace_faces(trefoil)) == 5

    def test_single_crossing_closure_three_faces(self):
        d = braid_closure(BraidWord(2, ((1, 1),)))
        assert d.num_crossings == 1
        assert d.num_edges == 2
        assert len(trace_faces(d)) == 3

    def test_faces_partition_darts(self):
        for d in seeded_diagrams(20):
            faces = trace_faces(d)
            assert sum(len(f.darts) for f in faces) == 2 * d.num_edges
            seen = [x for f in faces for x in f.darts]
            assert len(seen) == len(set(seen))

    def test_faces_start_at_least_dart(self, trefoil):
        for f in trace_faces(trefoil):
            assert f.darts[0] == min(f.darts)


class TestEndLabel:
    def test_over_axis_slots_are_plus(self, trefoil):
        for c in trefoil.crossings.values():
            for slot, dart in enumerate(c.rotation):
                expected = Sign.PLUS if slot % 2 == c.over_axis else Sign.MINUS
                assert end_label(trefoil, dart) is expected

    def test_alternating_edge_has_opposite_twin(self, trefoil):
        for e in trefoil.edges.values():
            a, b = e.darts
            assert end_label(trefoil, a) is end_label(trefoil, b).opposite()

    def test_kink_loop_edge(self):
        d = braid_closure(BraidWord(2, ((1, 1),)))
        loops = [e for e in d.edges.values()
                 if d.vertex_of(e.darts[0]) == d.vertex_of(e.darts[1])]
        assert loops
        for e in loops:
            signs = {end_label(d, x) for x in e.darts}
            assert signs == {Sign.PLUS, Sign.MINUS}


class TestClassifyEdges:
    def test_trefoil_all_alternating(self, trefoil):
        counts = classification_counts(trefoil)
        assert counts[EdgeClass.ALTERNATING] == 6
        assert counts[EdgeClass.POSITIVE_NON_ALT] == 0
        assert counts[EdgeClass.NEGATIVE_NON_ALT] == 0

    def test_flipped_trefoil_classes(self, flipped_trefoil):
        classes = {
            eid: pair.classification
            for eid, pair in classify_edges(flipped_trefoil).items()
        }
        assert classes[1] is EdgeClass.POSITIVE_NON_ALT
        assert classes[2] is EdgeClass.POSITIVE_NON_ALT
        assert classes[4] is EdgeClass.NEGATIVE_NON_ALT
        assert classes[5] is EdgeClass.NEGATIVE_NON_ALT
        assert classes[3] is EdgeClass.ALTERNATING
        assert classes[6] is EdgeClass.ALTERNATING

    def test_global_balance(self):
        # positive and negative non-alternating edge counts agree globally
        for d in seeded_diagrams():
            counts = classification_counts(d)
            assert (
                counts[EdgeClass.POSITIVE_NON_ALT]
                == counts[EdgeClass.NEGATIVE_NON_ALT]
            )


class TestIsAlternating:
    def test_trefoil(self, trefoil):
        assert is_alternating(trefoil)

    def test_flipped_trefoil(self, flipped_trefoil):
        assert not is_alternating(flipped_trefoil)

    def test_kink(self):
        assert is_alternating(braid_closure(BraidWord(2, ((1, 1),))))


class TestStrandComponents:
    def test_trefoil_single_component(self, trefoil):
        assert len(strand_components(trefoil, Tag.ORIGINAL)) == 1

    def test_hopf_projection_two_components(self):
        d = braid_closure(BraidWord(2, ((1, 1), (1, 1))))
        assert len(strand_components(d, Tag.ORIGINAL)) == 2

    def test_walks_partition_darts(self):
        for d in seeded_diagrams(20):
            walks = strand_components(d)
            darts = [x for w in walks for x in w]
            assert sorted(darts) == d.darts()

    def test_walks_go_through_opposite_slots(self, trefoil):
        for walk in strand_components(trefoil):
            for i in range(1, len(walk) - 1, 2):
                arrive, leave = walk[i], walk[i + 1]
                assert trefoil.vertex_of(arrive) == trefoil.vertex_of(leave)
                assert (trefoil.slot_of(leave) - trefoil.slot_of(arrive)) % 4 == 2


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_twin_involution(seed):
    d = random_diagram(2 + seed % 3, 6 + seed % 10, seed)
    for dart in d.darts():
        assert d.twin(d.twin(dart)) == dart
        assert d.twin(dart) != dart


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_corner_property(seed):
    # consecutive face darts meet at a vertex contributing opposite labels
    d = random_diagram(2 + seed % 3, 6 + seed % 10, seed)
    for f in trace_faces(d):
        for i, dart in enumerate(f.darts):
            nxt = f.darts[(i + 1) % len(f.darts)]
            arrive = d.twin(dart)
            assert d.vertex_of(arrive) == d.vertex_of(nxt)
            assert end_label(d, arrive) is end_label(d, nxt).opposite()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_region_alternation_property(seed):
    d = random_diagram(2 + seed % 3, 6 + seed % 10, seed)
    for f in trace_faces(d):
        assert not alternation_violated(face_nonalt_signs(d, f))


def test_sphere_property():
    for d in seeded_diagrams(30):
        assert d.euler_characteristic() == 2
