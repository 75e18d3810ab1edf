"""Independent certificate checker for pipeline outputs.

Every claimed property is re-derived from the raw map data using only the
core dart primitives; none of the constructive code paths are reused.
Check failures never raise: they land in the report, so a tampered or
corrupted result produces a readable verdict instead of a stack trace.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import diagram as dgm
from .augment import AugmentedDiagram
from .diagram import Diagram, Edge, Tag
from .errors import DegreeViolation, DiagramError


@dataclass(frozen=True)
class Report:
    """Verification certificate for an augmented diagram."""

    alternating: bool
    planar: bool
    connected: bool
    circle_count: int
    expected_circles: int
    circle_simple: bool
    restriction_ok: bool
    crossing_accounting_ok: bool
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return (
            self.alternating
            and self.planar
            and self.connected
            and self.circle_simple
            and self.restriction_ok
            and self.crossing_accounting_ok
            and self.circle_count == self.expected_circles
        )


def restriction(aug: AugmentedDiagram) -> Diagram:
    """Delete augmenting edges and smooth the leftover degree-2 vertices.

    Midpoints and push vertices lose their augmenting strand and become
    transit points of a single original strand; their two remaining edges
    fuse.  With provenance available the fused edges recover their original
    ids and the result compares equal to the input diagram; without it they
    get fresh ids ordered by least dart.
    """
    d = aug.diagram
    kept = {eid: e for eid, e in d.edges.items() if e.tag is Tag.ORIGINAL}
    kept_darts = {dart for e in kept.values() for dart in e.darts}

    full: set[int] = set()
    transit: dict[int, tuple[int, int]] = {}
    for cid, c in d.crossings.items():
        present = [dart for dart in c.rotation if dart in kept_darts]
        if len(present) == 4:
            full.add(cid)
        elif len(present) == 2:
            s0, s1 = (d.slot_of(x) for x in present)
            if (s0 - s1) % 4 != 2:
                raise DegreeViolation(
                    f"degree-2 vertex {cid} has its strand broken"
                )
            transit[cid] = (present[0], present[1])
        else:
            raise DegreeViolation(
                f"vertex {cid} left with degree {len(present)}"
            )

    chains = []
    consumed: set[int] = set()
    visited_edges: set[int] = set()
    terminals = sorted(
        dart for dart in kept_darts if d.vertex_of(dart) in full
    )
    for start in terminals:
        if start in consumed:
            continue
        pieces = []
        cur = start
        while True:
            pieces.append(d.edge_of(cur))
            far = d.twin(cur)
            v = d.vertex_of(far)
            if v in full:
                end = far
                break
            a, b = transit[v]
            cur = b if far == a else a
        consumed.add(start)
        consumed.add(end)
        visited_edges.update(pieces)
        chains.append((start, end, pieces))
    if visited_edges != set(kept):
        raise DegreeViolation(
            "original edges form a crossingless loop after deletion"
        )

    if aug.provenance is not None:
        ids = []
        for start, end, pieces in chains:
            lineage = {aug.provenance.get(p) for p in pieces}
            if len(lineage) != 1 or None in lineage:
                raise DiagramError(
                    f"smoothing chain {pieces} has mixed provenance {lineage}"
                )
            ids.append(lineage.pop())
        if len(set(ids)) != len(ids):
            raise DiagramError("two smoothing chains share a provenance id")
    else:
        order = sorted(range(len(chains)), key=lambda i: min(chains[i][:2]))
        rank = {chain_idx: i + 1 for i, chain_idx in enumerate(order)}
        ids = [rank[i] for i in range(len(chains))]

    edges = {
        ids[i]: Edge(
            id=ids[i],
            darts=tuple(sorted((start, end))),
            tag=Tag.ORIGINAL,
        )
        for i, (start, end, _) in enumerate(chains)
    }
    crossings = {cid: d.crossings[cid] for cid in full}
    return Diagram(crossings=crossings, edges=edges)


def _connected(d: Diagram) -> bool:
    start = next(iter(d.crossings))
    seen = {start}
    stack = [start]
    while stack:
        cid = stack.pop()
        for dart in d.crossings[cid].rotation:
            other = d.vertex_of(d.twin(dart))
            if other not in seen:
                seen.add(other)
                stack.append(other)
    return len(seen) == len(d.crossings)


def _circle_checks(d: Diagram) -> tuple[int, bool, dict]:
    details: dict = {}
    simple = True
    for c in d.crossings.values():
        tags = [d.edges[d.edge_of(x)].tag for x in c.rotation]
        if tags[0] is not tags[2] or tags[1] is not tags[3]:
            simple = False
            details.setdefault("tag_breaks", []).append(c.id)
        elif all(t is Tag.AUGMENT for t in tags):
            simple = False
            details.setdefault("augment_crossings", []).append(c.id)
    walks = dgm.strand_components(d, Tag.AUGMENT)
    for w in walks:
        walk_tags = {d.edges[d.edge_of(x)].tag for x in w}
        if walk_tags != {Tag.AUGMENT}:
            simple = False
            details.setdefault("mixed_walks", []).append(w[0])
    return len(walks), simple, details


def verify(
    original: Diagram,
    result: AugmentedDiagram,
    expected_circles: int,
    pushes: int | None = None,
) -> Report:
    """Re-derive every certificate field from scratch.

    ``pushes`` tightens the crossing accounting to an exact equation when
    the caller knows how many finger pushes the pipeline performed;
    otherwise the added-crossing surplus only has to be even and
    non-negative.
    """
    d = result.diagram
    details: dict = {}

    alternating = dgm.is_alternating(d)
    planar = d.euler_characteristic() == 2
    connected = _connected(d)
    circle_count, circle_simple, circle_details = _circle_checks(d)
    details.update(circle_details)

    try:
        restricted = restriction(result)
        if result.provenance is not None:
            restriction_ok = restricted == original
            if not restriction_ok:
                details["restriction"] = "restricted diagram differs from input"
        else:
            from .codec import canonical_pd

            restriction_ok = canonical_pd(restricted) == canonical_pd(original)
            if not restriction_ok:
                details["restriction"] = "canonical forms differ"
    except Exception as exc:  # failures become report entries
        restriction_ok = False
        details["restriction"] = f"{type(exc).__name__}: {exc}"

    try:
        non_alt = len(dgm.non_alternating_edges(original))
        delta = d.num_crossings - original.num_crossings - non_alt
        crossing_accounting_ok = delta >= 0 and delta % 2 == 0
        if pushes is not None:
            crossing_accounting_ok = crossing_accounting_ok and delta == 2 * pushes
        details["crossings_added_by_pushes"] = delta
        if delta >= 0 and delta % 2 == 0:
            details["inferred_pushes"] = delta // 2
    except Exception as exc:
        crossing_accounting_ok = False
        details["accounting"] = f"{type(exc).__name__}: {exc}"

    return Report(
        alternating=alternating,
        planar=planar,
        connected=connected,
        circle_count=circle_count,
        expected_circles=expected_circles,
        circle_simple=circle_simple,
        restriction_ok=restriction_ok,
        crossing_accounting_ok=crossing_accounting_ok,
        details=details,
    )
