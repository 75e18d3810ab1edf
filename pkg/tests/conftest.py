import pytest

from alternator import parse_pd
from alternator.diagram import Crossing, Diagram, Edge, Sign, Tag, end_label
from alternator.gen import BraidWord

# 3-crossing alternating trefoil
TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"

# trefoil with the first crossing switched: 4 non-alternating edges
FLIPPED_TREFOIL = "X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]"

# trefoil connect-summed to an all-crossings-switched trefoil with
# mismatched gluing: exactly two non-alternating edges, one of each sign
GRANNY = "X[1,4,2,5] X[3,6,4,7] X[5,2,6,3] X[10,8,11,7] X[12,10,1,9] X[8,12,9,11]"

# granny with a second plain trefoil spliced into edge 3: augmenting it
# yields two 2-edge circles that share a face
DOUBLED_GRANNY = (
    "X[1,4,2,5] X[3,6,4,7] X[3,16,14,17] X[5,2,6,13] X[8,12,9,11] "
    "X[10,8,11,7] X[12,10,1,9] X[15,18,16,13] X[17,14,18,15]"
)

# braid words of the three 8-crossing non-alternating knots
WORD_8_19 = BraidWord(3, ((1, 1), (2, 1)) * 4)
WORD_8_20 = BraidWord(3, ((1, 1),) * 3 + ((2, -1),) + ((1, -1),) * 3 + ((2, -1),))
WORD_8_21 = BraidWord(3, ((1, 1),) * 3 + ((2, 1),) + ((1, -1),) * 2 + ((2, 1),) * 2)


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL)


@pytest.fixture
def flipped_trefoil():
    return parse_pd(FLIPPED_TREFOIL)


@pytest.fixture
def granny():
    return parse_pd(GRANNY)


@pytest.fixture
def doubled_granny():
    return parse_pd(DOUBLED_GRANNY)


def face_nonalt_signs(d: Diagram, face) -> list[Sign]:
    """Signs of a face's non-alternating incidences, straight from end labels.

    Kept deliberately independent of region_incidences so it can serve as
    its oracle.
    """
    signs = []
    for dart in face.darts:
        s1 = end_label(d, dart)
        s2 = end_label(d, d.twin(dart))
        if s1 is s2:
            signs.append(s1)
    return signs


def alternation_violated(signs: list[Sign]) -> bool:
    if not signs:
        return False
    if len(signs) % 2 != 0:
        return True
    return any(a is b for a, b in zip(signs, signs[1:] + signs[:1]))


def harvest_type_i_sites(aug):
    """All sites pairing arcs of two distinct circles through a shared face."""
    from alternator.diagram import trace_faces
    from alternator.moves import MoveSite

    d = aug.diagram
    edge_circle = {}
    for c in aug.circles:
        for eid in c.edges:
            edge_circle[eid] = c.id
    sites = []
    for face in trace_faces(d):
        by_circle: dict[int, list[int]] = {}
        for dart in face.darts:
            eid = d.edge_of(dart)
            if eid in edge_circle:
                by_circle.setdefault(edge_circle[eid], []).append(dart)
        ids = sorted(by_circle)
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                for da in by_circle[ids[i]]:
                    for db in by_circle[ids[j]]:
                        sites.append(MoveSite(face=face.id, dart_a=da, dart_b=db))
    return sites


def harvest_type_ii_sites(aug):
    """All sites pushing a circle arc across an original edge of its face."""
    from alternator.diagram import trace_faces
    from alternator.moves import MoveSite

    d = aug.diagram
    sites = []
    for face in trace_faces(d):
        arcs = [
            x for x in face.darts
            if d.edges[d.edge_of(x)].tag is Tag.AUGMENT
        ]
        originals = [
            x for x in face.darts
            if d.edges[d.edge_of(x)].tag is Tag.ORIGINAL
        ]
        for a in arcs:
            for b in originals:
                sites.append(MoveSite(face=face.id, dart_a=a, dart_b=b))
    return sites


def toggle_over_axis(d: Diagram, cid: int) -> Diagram:
    c = d.crossings[cid]
    crossings = dict(d.crossings)
    crossings[cid] = Crossing(id=c.id, rotation=c.rotation, over_axis=1 - c.over_axis)
    return Diagram(crossings=crossings, edges=dict(d.edges))


def flip_tag(d: Diagram, eid: int) -> Diagram:
    e = d.edges[eid]
    other = Tag.AUGMENT if e.tag is Tag.ORIGINAL else Tag.ORIGINAL
    edges = dict(d.edges)
    edges[eid] = Edge(id=e.id, darts=e.darts, tag=other)
    return Diagram(crossings=dict(d.crossings), edges=edges)
