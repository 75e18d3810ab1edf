"""Deterministic test-corpus generation from braid words.

Braid closures are used because connectivity of the projection is
structural: as long as every generator index appears at least once, the
closed diagram is a connected 4-valent graph.  Sampling is seeded and
reproducible; exhaustive enumeration provides the brute-force universe for
property checks.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .diagram import Diagram, build_diagram


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid generators.

    ``letters`` holds (generator index, sign) pairs with indices in
    ``1..strands-1`` and sign +1 or -1.  Every generator index must appear
    at least once so the closure is connected.
    """

    strands: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("a braid needs at least 2 strands")
        if not self.letters:
            raise ValueError("empty braid word")
        used = set()
        for gen, sign in self.letters:
            if not 1 <= gen <= self.strands - 1:
                raise ValueError(f"generator {gen} out of range")
            if sign not in (1, -1):
                raise ValueError(f"sign {sign} must be +1 or -1")
            used.add(gen)
        missing = set(range(1, self.strands)) - used
        if missing:
            raise ValueError(f"generators never used: {sorted(missing)}")


def braid_closure(word: BraidWord) -> Diagram:
    """Close a braid word into a diagram with one crossing per letter.

    Positions carry running edge labels top to bottom; a letter at index i
    crosses the strands at positions i and i+1.  For a positive letter the
    strand entering at position i passes over.  Final labels are merged
    back into the initial ones to close up.
    """
    s = word.strands
    current = {p: p for p in range(1, s + 1)}
    initial = dict(current)
    next_label = s + 1
    tuples = []
    for gen, sign in word.letters:
        a = current[gen]  # incoming at position gen (upper left)
        b = current[gen + 1]  # incoming at position gen + 1 (upper right)
        c = next_label  # outgoing at position gen
        d = next_label + 1  # outgoing at position gen + 1
        next_label += 2
        # counterclockwise cycle around the crossing is (b, a, c, d); the
        # under-strand goes at tuple slots 0 and 2
        if sign > 0:
            tuples.append((b, a, c, d))  # a-d strand over
        else:
            tuples.append((a, c, d, b))  # b-c strand over
        current[gen] = c
        current[gen + 1] = d
    merge = {current[p]: initial[p] for p in range(1, s + 1)}
    closed = [tuple(merge.get(x, x) for x in t) for t in tuples]
    return build_diagram(closed)


def random_word(strands: int, length: int, seed: int) -> BraidWord:
    """Seeded random braid word guaranteed to use every generator."""
    n_gens = strands - 1
    if length < n_gens:
        raise ValueError(f"length {length} cannot cover {n_gens} generators")
    rng = random.Random(seed)
    letters: list[tuple[int, int] | None] = [None] * length
    required = list(range(1, strands))
    rng.shuffle(required)
    for gen, pos in zip(required, rng.sample(range(length), n_gens)):
        letters[pos] = (gen, rng.choice((1, -1)))
    for i in range(length):
        if letters[i] is None:
            letters[i] = (rng.randint(1, n_gens), rng.choice((1, -1)))
    return BraidWord(strands=strands, letters=tuple(letters))


def random_diagram(strands: int, length: int, seed: int) -> Diagram:
    """Closure of :func:`random_word`; identical arguments give identical
    diagrams."""
    return braid_closure(random_word(strands, length, seed))


def enumerate_words(strands: int, length: int):
    """All valid braid words of exactly the given length, lexicographically.

    Letters are ordered by (generator, sign) with +1 before -1.  Words
    missing a generator are skipped, so every yielded word closes to a
    connected diagram.
    """
    alphabet = [
        (gen, sign) for gen in range(1, strands) for sign in (1, -1)
    ]
    for letters in itertools.product(alphabet, repeat=length):
        if len({gen for gen, _ in letters}) == strands - 1:
            yield BraidWord(strands=strands, letters=letters)


def enumerate_diagrams(strands: int, max_length: int):
    """Closures of every valid word with length up to ``max_length``."""
    for length in range(strands - 1, max_length + 1):
        for word in enumerate_words(strands, length):
            yield braid_closure(word)
