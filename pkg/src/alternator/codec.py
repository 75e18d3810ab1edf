"""PD-code text and JSON interchange for diagrams and reports.

Grammar::

    pd         ::= crossing+ annotation?
    crossing   ::= "X[" int "," int "," int "," int "]"
    annotation ::= "A{" (int ("," int)*)? "}"

Crossings may be separated by arbitrary whitespace and commas.  A tuple
``(a, b, c, d)`` lists edge labels counterclockwise; the strand through
``a, c`` passes under and the one through ``b, d`` passes over.  Tuples are
unoriented: only the cyclic order and the under/over axis are consumed, so
rotating a tuple by one position flips the crossing.  The optional trailing
``A{...}`` block names the labels of augmenting edges; emission always
writes it, empty for plain projections.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import diagram as dgm
from .diagram import Diagram, Tag
from .errors import PdSyntaxError


@dataclass(frozen=True)
class PdCode:
    """Parsed PD text: crossing tuples plus the augment-label block."""

    crossings: tuple[tuple[int, int, int, int], ...]
    augment_labels: frozenset[int] = frozenset()

    def to_text(self) -> str:
        parts = ["X[%d,%d,%d,%d]" % t for t in self.crossings]
        parts.append("A{%s}" % ",".join(str(x) for x in sorted(self.augment_labels)))
        return " ".join(parts)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def location(self, pos: int | None = None) -> tuple[int, int]:
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        last_nl = self.text.rfind("\n", 0, pos)
        return line, pos - last_nl

    def error(self, message: str) -> PdSyntaxError:
        line, col = self.location()
        return PdSyntaxError(message, line, col)

    def skip_separators(self):
        while self.pos < len(self.text) and (
            self.text[self.pos].isspace() or self.text[self.pos] == ","
        ):
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_separators()
        return self.pos >= len(self.text)

    def expect(self, literal: str):
        if not self.text.startswith(literal, self.pos):
            raise self.error(f"expected {literal!r}")
        self.pos += len(literal)

    def read_int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def skip_spaces(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1


def parse_pd_code(text: str) -> PdCode:
    """Parse PD text into a :class:`PdCode` without building a diagram."""
    sc = _Scanner(text)
    crossings = []
    augment: frozenset[int] = frozenset()
    while not sc.at_end():
        if sc.text.startswith("A{", sc.pos):
            sc.expect("A{")
            labels = []
            sc.skip_spaces()
            if not sc.text.startswith("}", sc.pos):
                while True:
                    sc.skip_spaces()
                    labels.append(sc.read_int())
                    sc.skip_spaces()
                    if sc.text.startswith(",", sc.pos):
                        sc.pos += 1
                        continue
                    break
            sc.expect("}")
            if not sc.at_end():
                raise sc.error("annotation block must be last")
            augment = frozenset(labels)
            break
        sc.expect("X[")
        entries = []
        for i in range(4):
            sc.skip_spaces()
            entries.append(sc.read_int())
            sc.skip_spaces()
            if i < 3:
                sc.expect(",")
        sc.expect("]")
        crossings.append(tuple(entries))
    if not crossings:
        sc.pos = 0
        raise sc.error("no crossings found")
    return PdCode(crossings=tuple(crossings), augment_labels=augment)


def parse_pd(text: str) -> Diagram:
    """Parse PD text into a diagram.

    Build errors (bad arity, disconnected, non-planar) are re-raised with
    the text location of the first crossing for context.
    """
    code = parse_pd_code(text)
    return dgm.build_diagram(code.crossings, augment_labels=code.augment_labels)


# ---------------------------------------------------------------------------
# emission
# ---------------------------------------------------------------------------


def _strand_relabelling(diagram: Diagram) -> dict[int, int]:
    """Map edge ids to 1..2N by strand traversal from the least dart id."""
    labels: dict[int, int] = {}
    next_label = 1
    visited: set[int] = set()
    for d0 in diagram.darts():
        if d0 in visited:
            continue
        d = d0
        while True:
            visited.add(d)
            visited.add(diagram.twin(d))
            eid = diagram.edge_of(d)
            if eid not in labels:
                labels[eid] = next_label
                next_label += 1
            d = diagram.strand_next(d)
            if d == d0:
                break
    return labels


def _crossing_tuple(
    diagram: Diagram, crossing_id: int, labels: dict[int, int]
) -> tuple[int, int, int, int]:
    """Rotate a crossing's label cycle so the under-strand sits at slots 0, 2."""
    c = diagram.crossings[crossing_id]
    cycle = [labels[diagram.edge_of(d)] for d in c.rotation]
    start = 1 - c.over_axis  # slot parity of the under-strand
    first = tuple(cycle[(start + k) % 4] for k in range(4))
    second = tuple(cycle[(start + 2 + k) % 4] for k in range(4))
    return min(first, second)


def to_pd_code(diagram: Diagram) -> PdCode:
    """Canonical PD form of a diagram value (deterministic, not invariant)."""
    labels = _strand_relabelling(diagram)
    tuples = sorted(
        _crossing_tuple(diagram, cid, labels) for cid in diagram.crossings
    )
    augment = frozenset(
        labels[eid] for eid, e in diagram.edges.items() if e.tag is Tag.AUGMENT
    )
    return PdCode(crossings=tuple(tuples), augment_labels=augment)


def emit_pd(diagram: Diagram) -> str:
    """Canonical PD text: edges relabelled 1..2N by strand traversal from
    the least dart, crossings sorted, augment edges named in the A block."""
    return to_pd_code(diagram).to_text()


# ---------------------------------------------------------------------------
# canonical form (isomorphism invariant)
# ---------------------------------------------------------------------------


def _rooted_form(diagram: Diagram, root: int):
    """Serialize the map rooted at a dart.

    The traversal is defined purely by the map structure relative to the
    root, so tag- and over/under-preserving isomorphic diagrams rooted at
    corresponding darts produce equal forms.
    """
    labels: dict[int, int] = {}
    next_label = 1
    entry: dict[int, int] = {}  # crossing id -> dart by which it was first entered
    order: list[int] = []  # crossing ids in first-visit order

    def visit(dart):
        cid = diagram.vertex_of(dart)
        if cid not in entry:
            entry[cid] = dart
            order.append(cid)

    def run_strand(start):
        nonlocal next_label
        visit(start)
        d = start
        while True:
            eid = diagram.edge_of(d)
            if eid not in labels:
                labels[eid] = next_label
                next_label += 1
            visit(diagram.twin(d))
            d = diagram.strand_next(d)
            if d == start:
                break

    run_strand(root)
    while len(labels) < len(diagram.edges):
        nxt = None
        for cid in order:
            d = entry[cid]
            for _ in range(4):
                if diagram.edge_of(d) not in labels:
                    nxt = d
                    break
                d = diagram.rotation_next(d)
            if nxt is not None:
                break
        if nxt is None:  # disconnected; construction forbids it
            raise AssertionError("rooted traversal stalled")
        run_strand(nxt)

    rows = []
    for cid in order:
        c = diagram.crossings[cid]
        d = entry[cid]
        cycle = []
        for _ in range(4):
            cycle.append(labels[diagram.edge_of(d)])
            d = diagram.rotation_next(d)
        over_at_entry = diagram.slot_of(entry[cid]) % 2 == c.over_axis
        rows.append((tuple(cycle), int(over_at_entry)))
    augment = tuple(
        sorted(labels[eid] for eid, e in diagram.edges.items() if e.tag is Tag.AUGMENT)
    )
    return (tuple(rows), augment)


def canonical_form(diagram: Diagram):
    """Least rooted form over all roots: equal for isomorphic diagrams."""
    return min(_rooted_form(diagram, root) for root in diagram.darts())


def canonical_pd(diagram: Diagram) -> str:
    """Text rendering of :func:`canonical_form`; an isomorphism invariant
    that preserves tags and over/under data."""
    rows, augment = canonical_form(diagram)
    parts = [
        "X[%d,%d,%d,%d]%s" % (*cycle, "+" if over else "-") for cycle, over in rows
    ]
    parts.append("A{%s}" % ",".join(str(x) for x in augment))
    return " ".join(parts)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

FORMAT_TAG = "alternator/1"


def report_to_dict(report) -> dict:
    return {
        "alternating": report.alternating,
        "planar": report.planar,
        "connected": report.connected,
        "circle_count": report.circle_count,
        "expected_circles": report.expected_circles,
        "circle_simple": report.circle_simple,
        "restriction_ok": report.restriction_ok,
        "crossing_accounting_ok": report.crossing_accounting_ok,
        "passed": report.passed,
        "details": report.details,
    }


def emit_json(diagram: Diagram, report=None) -> str:
    """Self-describing JSON document for a diagram and optional report.

    Key order is fixed and all collections are sorted, so identical values
    serialize to identical bytes.
    """
    faces = dgm.trace_faces(diagram)
    classes = dgm.classify_edges(diagram)
    circles = [
        {"id": i, "darts": list(w), "edges": sorted(set(dgm.walk_edges(diagram, w)))}
        for i, w in enumerate(dgm.strand_components(diagram, Tag.AUGMENT))
    ]
    doc = {
        "format": FORMAT_TAG,
        "crossings": [
            {
                "id": c.id,
                "rotation": list(c.rotation),
                "over_axis": c.over_axis,
            }
            for c in sorted(diagram.crossings.values(), key=lambda c: c.id)
        ],
        "darts": [
            {
                "id": d,
                "crossing": diagram.vertex_of(d),
                "slot": diagram.slot_of(d),
                "twin": diagram.twin(d),
                "edge": diagram.edge_of(d),
            }
            for d in diagram.darts()
        ],
        "edges": [
            {"id": e.id, "darts": list(e.darts), "tag": e.tag.value}
            for e in sorted(diagram.edges.values(), key=lambda e: e.id)
        ],
        "faces": [{"id": f.id, "darts": list(f.darts)} for f in faces],
        "classifications": [
            {
                "edge": eid,
                "label": classes[eid].classification.value,
                "signs": [s.value for s in classes[eid].signs],
            }
            for eid in sorted(classes)
        ],
        "circles": circles,
    }
    if report is not None:
        doc["report"] = report_to_dict(report)
    return json.dumps(doc, indent=2)


def diagram_from_json(text: str) -> Diagram:
    """Rebuild a diagram from its JSON document."""
    doc = json.loads(text)
    if doc.get("format") != FORMAT_TAG:
        raise PdSyntaxError(f"unsupported format tag {doc.get('format')!r}")
    crossings = {
        c["id"]: dgm.Crossing(
            id=c["id"], rotation=tuple(c["rotation"]), over_axis=c["over_axis"]
        )
        for c in doc["crossings"]
    }
    edges = {
        e["id"]: dgm.Edge(
            id=e["id"],
            darts=tuple(sorted(e["darts"])),
            tag=Tag(e["tag"]),
        )
        for e in doc["edges"]
    }
    return Diagram(crossings=crossings, edges=edges)
