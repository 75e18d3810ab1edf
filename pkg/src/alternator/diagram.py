"""Combinatorial-map model of link projections.

A projection is stored as a connected 4-regular map on the sphere.  Each
crossing owns four darts (half-edges) in counterclockwise rotation slots
0..3; the strand runs through opposite slots (0 to 2, 1 to 3).  ``over_axis``
records which of the two slot parities carries the over-strand: 0 means the
strand through slots {0, 2} passes over, 1 means the one through {1, 3}.

Edge-end labels are derived, never stored: the end of an edge is labelled
``Sign.PLUS`` exactly when its strand passes over at the incident crossing.
With this convention an edge labelled with one plus and one minus is an
alternating edge, and a projection is alternating when every edge is.  See
README.md for a discussion of why this is the right reading of the
labelling scheme.

Faces ("regions") are the orbits of ``dart -> rotation_next(twin(dart))``.
Planarity is not a drawing property here: a diagram is planar exactly when
the orbit count satisfies V - E + F = 2, and every constructor checks it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .errors import (
    DiagramError,
    Disconnected,
    DuplicateLabelArity,
    NonPlanar,
)


class Tag(Enum):
    """Component tag of an edge: part of the input projection or added."""

    ORIGINAL = "original"
    AUGMENT = "augment"


class Sign(Enum):
    PLUS = "+"
    MINUS = "-"

    def opposite(self) -> "Sign":
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS


class EdgeClass(Enum):
    ALTERNATING = "alternating"
    POSITIVE_NON_ALT = "positive"
    NEGATIVE_NON_ALT = "negative"


@dataclass(frozen=True)
class Crossing:
    """A 4-valent vertex with its counterclockwise dart rotation.

    ``rotation[s]`` is the dart occupying slot ``s``.  A dart's slot parity
    against ``over_axis`` decides whether its strand passes over here.
    """

    id: int
    rotation: tuple[int, int, int, int]
    over_axis: int  # 0: slots {0,2} over, 1: slots {1,3} over


@dataclass(frozen=True)
class Edge:
    id: int
    darts: tuple[int, int]  # stored (min, max)
    tag: Tag = Tag.ORIGINAL


@dataclass(frozen=True)
class Face:
    """One orbit of the face-tracing permutation, listed from its least dart."""

    id: int
    darts: tuple[int, ...]


@dataclass(frozen=True)
class EdgeLabelPair:
    """The two end signs of an edge, ordered by dart id."""

    signs: tuple[Sign, Sign]

    @property
    def classification(self) -> EdgeClass:
        a, b = self.signs
        if a is not b:
            return EdgeClass.ALTERNATING
        if a is Sign.PLUS:
            return EdgeClass.POSITIVE_NON_ALT
        return EdgeClass.NEGATIVE_NON_ALT

    @property
    def non_alternating_sign(self) -> Sign | None:
        """The common sign of a non-alternating edge, else None."""
        a, b = self.signs
        return a if a is b else None


@dataclass(frozen=True)
class Diagram:
    """Immutable connected 4-regular planar map with over/under data.

    Treat instances as values: operations build new diagrams rather than
    mutating.  Construction validates all structural invariants and raises
    :class:`Disconnected` or :class:`NonPlanar` when they fail.
    """

    crossings: dict[int, Crossing]
    edges: dict[int, Edge]
    _vertex: dict[int, int] = field(
        init=False, repr=False, compare=False, default_factory=dict
    )
    _slot: dict[int, int] = field(
        init=False, repr=False, compare=False, default_factory=dict
    )
    _twin: dict[int, int] = field(
        init=False, repr=False, compare=False, default_factory=dict
    )
    _edge_of: dict[int, int] = field(
        init=False, repr=False, compare=False, default_factory=dict
    )
    _cache: dict = field(init=False, repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        if not self.crossings:
            raise DiagramError("a diagram needs at least one crossing")
        for cid, c in self.crossings.items():
            if cid != c.id:
                raise DiagramError(f"crossing key {cid} does not match id {c.id}")
            if len(c.rotation) != 4 or len(set(c.rotation)) != 4:
                raise DiagramError(f"crossing {cid} must own 4 distinct darts")
            if c.over_axis not in (0, 1):
                raise DiagramError(f"crossing {cid} has invalid over_axis")
            for slot, dart in enumerate(c.rotation):
                if dart in self._vertex:
                    raise DiagramError(f"dart {dart} appears at two crossings")
                self._vertex[dart] = cid
                self._slot[dart] = slot
        for eid, e in self.edges.items():
            if eid != e.id:
                raise DiagramError(f"edge key {eid} does not match id {e.id}")
            a, b = e.darts
            if a == b:
                raise DiagramError(f"edge {eid} twins a dart with itself")
            for dart in e.darts:
                if dart not in self._vertex:
                    raise DiagramError(f"edge {eid} refers to unknown dart {dart}")
                if dart in self._edge_of:
                    raise DiagramError(f"dart {dart} belongs to two edges")
                self._edge_of[dart] = eid
            self._twin[a] = b
            self._twin[b] = a
        if len(self._edge_of) != len(self._vertex):
            missing = sorted(set(self._vertex) - set(self._edge_of))
            raise DiagramError(f"darts without an edge: {missing}")
        self._check_connected()
        if self.euler_characteristic() != 2:
            raise NonPlanar(
                "face trace gives V - E + F = "
                f"{self.euler_characteristic()}, expected 2"
            )

    def _check_connected(self):
        start = next(iter(self.crossings))
        seen = {start}
        stack = [start]
        while stack:
            cid = stack.pop()
            for dart in self.crossings[cid].rotation:
                other = self._vertex[self._twin[dart]]
                if other not in seen:
                    seen.add(other)
                    stack.append(other)
        if len(seen) != len(self.crossings):
            raise Disconnected(
                f"{len(self.crossings) - len(seen)} crossings unreachable"
            )

    # -- dart queries ------------------------------------------------------

    def darts(self) -> list[int]:
        return sorted(self._vertex)

    def twin(self, dart: int) -> int:
        return self._twin[dart]

    def vertex_of(self, dart: int) -> int:
        return self._vertex[dart]

    def slot_of(self, dart: int) -> int:
        return self._slot[dart]

    def edge_of(self, dart: int) -> int:
        return self._edge_of[dart]

    def rotation_next(self, dart: int) -> int:
        """Next dart counterclockwise at the same crossing."""
        c = self.crossings[self._vertex[dart]]
        return c.rotation[(self._slot[dart] + 1) % 4]

    def face_next(self, dart: int) -> int:
        """The face-tracing permutation."""
        return self.rotation_next(self._twin[dart])

    def strand_next(self, dart: int) -> int:
        """Follow the strand through the crossing at the far end of ``dart``."""
        t = self._twin[dart]
        c = self.crossings[self._vertex[t]]
        return c.rotation[(self._slot[t] + 2) % 4]

    # -- counts ------------------------------------------------------------

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_faces(self) -> int:
        return len(trace_faces(self))

    def euler_characteristic(self) -> int:
        return len(self.crossings) - len(self.edges) + len(self._face_orbits())

    def _face_orbits(self) -> list[tuple[int, ...]]:
        if "faces" not in self._cache:
            orbits = []
            seen = set()
            for d0 in sorted(self._vertex):
                if d0 in seen:
                    continue
                orbit = [d0]
                seen.add(d0)
                d = self.face_next(d0)
                while d != d0:
                    orbit.append(d)
                    seen.add(d)
                    d = self.face_next(d)
                orbits.append(tuple(orbit))
            self._cache["faces"] = orbits
        return self._cache["faces"]

    def face_of(self, dart: int) -> int:
        """Id of the face orbit containing ``dart``."""
        if "face_of" not in self._cache:
            table = {}
            for i, orbit in enumerate(self._face_orbits()):
                for d in orbit:
                    table[d] = i
            self._cache["face_of"] = table
        return self._cache["face_of"][dart]

    def max_crossing_id(self) -> int:
        return max(self.crossings)

    def max_edge_id(self) -> int:
        return max(self.edges)

    def max_dart_id(self) -> int:
        return max(self._vertex)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def build_diagram(
    tuples: Sequence[Sequence[int]],
    augment_labels: Iterable[int] = (),
) -> Diagram:
    """Build a diagram from crossing tuples of edge labels.

    Each tuple lists the four edge labels around a crossing in
    counterclockwise order; the strand through positions 0 and 2 passes
    under, the one through positions 1 and 3 passes over.  Every label must
    occur exactly twice.  Labels in ``augment_labels`` are tagged as
    augmenting edges, everything else as original.

    Dart ids are assigned densely, sorted by (crossing index, slot); edge
    ids are the labels themselves; crossing ids are the tuple indices.
    """
    if not tuples:
        raise DiagramError("a diagram needs at least one crossing")
    counts: Counter[int] = Counter()
    for t in tuples:
        if len(t) != 4:
            raise DiagramError(f"crossing tuple {tuple(t)} does not have 4 entries")
        counts.update(t)
    bad = {label: n for label, n in counts.items() if n != 2}
    if bad:
        raise DuplicateLabelArity(
            "each edge label must occur exactly twice, got "
            + ", ".join(f"{label} x{n}" for label, n in sorted(bad.items()))
        )
    for t in tuples:
        if t[0] == t[2] or t[1] == t[3]:
            # A label on opposite slots would make an edge cross its own
            # strand transversally once, which no spherical projection allows.
            raise DuplicateLabelArity(
                f"label occupies opposite slots of one crossing in {tuple(t)}"
            )

    augment = set(augment_labels)
    unknown = augment - set(counts)
    if unknown:
        raise DiagramError(f"augment labels not present in tuples: {sorted(unknown)}")

    crossings = {}
    ends: dict[int, list[int]] = {}
    for i, t in enumerate(tuples):
        rotation = tuple(range(4 * i, 4 * i + 4))
        crossings[i] = Crossing(id=i, rotation=rotation, over_axis=1)
        for slot, label in enumerate(t):
            ends.setdefault(label, []).append(4 * i + slot)
    edges = {}
    for label in sorted(ends):
        a, b = sorted(ends[label])
        tag = Tag.AUGMENT if label in augment else Tag.ORIGINAL
        edges[label] = Edge(id=label, darts=(a, b), tag=tag)
    return Diagram(crossings=crossings, edges=edges)


def trace_faces(diagram: Diagram) -> list[Face]:
    """All face orbits, ordered by least contained dart id."""
    return [Face(id=i, darts=o) for i, o in enumerate(diagram._face_orbits())]


def end_label(diagram: Diagram, dart: int) -> Sign:
    """Sign of an edge end: PLUS when its strand passes over at the crossing."""
    c = diagram.crossings[diagram.vertex_of(dart)]
    return Sign.PLUS if diagram.slot_of(dart) % 2 == c.over_axis else Sign.MINUS


def classify_edges(diagram: Diagram) -> dict[int, EdgeLabelPair]:
    """End-sign pair for every edge, keyed by edge id."""
    out = {}
    for eid, e in diagram.edges.items():
        a, b = e.darts
        out[eid] = EdgeLabelPair(
            signs=(end_label(diagram, a), end_label(diagram, b))
        )
    return out


def classification_counts(diagram: Diagram) -> dict[EdgeClass, int]:
    counts = {cls: 0 for cls in EdgeClass}
    for pair in classify_edges(diagram).values():
        counts[pair.classification] += 1
    return counts


def is_alternating(diagram: Diagram) -> bool:
    return all(
        pair.classification is EdgeClass.ALTERNATING
        for pair in classify_edges(diagram).values()
    )


def non_alternating_edges(diagram: Diagram) -> list[int]:
    """Ids of non-alternating edges, ascending."""
    return sorted(
        eid
        for eid, pair in classify_edges(diagram).items()
        if pair.classification is not EdgeClass.ALTERNATING
    )


def strand_components(diagram: Diagram, tag: Tag | None = None) -> list[tuple[int, ...]]:
    """Closed strand walks, optionally restricted to edges of one tag.

    A walk lists darts in traversal order ``d0, twin(d0), d1, twin(d1), ...``
    so that consecutive pairs enter a crossing at slot ``s`` and leave at
    slot ``(s + 2) % 4``.  Every dart of a matching edge appears in exactly
    one walk.  Walks start at their least dart and are ordered by it.
    """
    seen: set[int] = set()
    walks = []
    for d0 in diagram.darts():
        if d0 in seen:
            continue
        if tag is not None and diagram.edges[diagram.edge_of(d0)].tag is not tag:
            continue
        walk = []
        d = d0
        while True:
            walk.append(d)
            walk.append(diagram.twin(d))
            seen.add(d)
            seen.add(diagram.twin(d))
            d = diagram.strand_next(d)
            if d == d0:
                break
        walks.append(tuple(walk))
    return walks


def walk_edges(diagram: Diagram, walk: Sequence[int]) -> tuple[int, ...]:
    """Edge ids visited by a strand walk, in order, one per traversal."""
    return tuple(diagram.edge_of(d) for d in walk[::2])
