"""Exception types shared across the package.

Two families: input errors (bad PD text, bad tuples) that callers are
expected to handle, and internal assertion errors that signal a bug in a
rewrite operation rather than bad input.  The latter are still typed so the
test suite can pin them down.
"""


class AlternatorError(Exception):
    """Base class for every error raised by this package."""


# --- diagram construction / input errors ---------------------------------

class DiagramError(AlternatorError):
    """A diagram value violates a structural invariant."""


class DuplicateLabelArity(DiagramError):
    """An edge label does not occur exactly twice across the crossing tuples."""


class Disconnected(DiagramError):
    """The crossing tuples describe a disconnected projection."""


class NonPlanar(DiagramError):
    """Face tracing does not satisfy V - E + F = 2."""


class DegreeViolation(DiagramError):
    """Deleting augmenting edges left a vertex of degree other than 2 or 4."""


# --- codec errors ---------------------------------------------------------

class CodecError(AlternatorError):
    """Base class for parse/serialize errors."""


class PdSyntaxError(CodecError):
    """PD text does not match the grammar."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


# --- augmentation errors --------------------------------------------------

class RegionAlternationViolated(AlternatorError):
    """Non-alternating incidences of a region fail to alternate in sign.

    This signals a labelling bug, never valid input.
    """


class PlanarityBroken(AlternatorError):
    """A rewrite produced a non-planar map; signals a rotation-slot bug."""


class CircleNotSimple(AlternatorError):
    """Two augmenting strands cross each other; signals a move bug."""


# --- move errors ----------------------------------------------------------

class MoveError(AlternatorError):
    """A move site is invalid or a move assertion failed."""


class NotSameFace(MoveError):
    """The two site darts do not lie on a common face orbit."""


class SameCircle(MoveError):
    """Band merge requires arcs of two distinct circles."""


class NotAugmentArc(MoveError):
    """The site dart expected to lie on an augmenting edge does not."""


class AlternationBroken(MoveError):
    """A move destroyed alternation; signals a convention bug."""


class NoAlternatingAssignment(MoveError):
    """No over/under choice at the two new crossings restores alternation."""


# --- merge errors ---------------------------------------------------------

class NoPath(AlternatorError):
    """No dual path between two circles of one component; signals a bug."""


class InternalInvariantError(AlternatorError):
    """A structural fact the construction relies on failed; fatal diagnostic."""
