"""Brute-force ground truth: breadth-first enumeration of the Cayley graph.

Elements are canonicalized by their normal form string.  The ball stores,
per element, its graph distance from the identity and the generator that
first reached it, which is enough to rebuild a geodesic witness by walking
back to the identity.  Distances come purely from the frontier structure,
so they are an independent check on the weight-table length.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator, Optional

from . import kernel
from .deadend import matches_dead_end_form
from .group_ops import GENERATORS, Generator
from .normal_form import parse_normal_form, to_tree_pair

DEFAULT_RADIUS_CAP = 9
_ELEMENT_LIMIT_ENV = "THOMPSON_F_BALL_LIMIT"
_DEFAULT_ELEMENT_LIMIT = 5_000_000

_DUMP_HEADER = "# thompson-f ball format 1"


class BallLimitError(RuntimeError):
    """The enumeration would exceed the configured element budget."""


@dataclass(slots=True)
class BallEntry:
    distance: int
    parent: Optional[Generator]  # generator whose application reached this element
    enc: bytes


@dataclass(slots=True)
class Ball:
    radius: int
    elements: dict[str, BallEntry]
    sphere_sizes: list[int] = field(default_factory=list)

    def __contains__(self, key: str) -> bool:
        return key in self.elements

    def distance(self, key: str) -> int:
        return self.elements[key].distance

    def sphere(self, r: int) -> Iterator[str]:
        return (k for k, e in self.elements.items() if e.distance == r)

    def witness(self, key: str) -> list[Generator]:
        """A geodesic word for the element, rebuilt by walking parents back."""
        letters: list[Generator] = []
        entry = self.elements[key]
        enc = entry.enc
        while entry.parent is not None:
            letters.append(entry.parent)
            enc = kernel.apply_generator(enc, entry.parent.inverse)
            entry = self.elements[kernel.key(enc)]
        letters.reverse()
        return letters

    def dump(self, path: str) -> None:
        with open(path, "w") as fh:
            fh.write(f"{_DUMP_HEADER}\n")
            fh.write(f"# radius {self.radius}\n")
            fh.write(f"# elements {len(self.elements)}\n")
            for key in sorted(self.elements, key=lambda k: (self.elements[k].distance, k)):
                entry = self.elements[key]
                parent = entry.parent.letter if entry.parent is not None else "-"
                fh.write(f"{key}\t{entry.distance}\t{parent}\n")

    @classmethod
    def load(cls, path: str) -> "Ball":
        with open(path) as fh:
            lines = fh.read().splitlines()
        if not lines or lines[0] != _DUMP_HEADER:
            raise ValueError(f"{path} is not a ball dump")
        radius = int(lines[1].split()[-1])
        elements: dict[str, BallEntry] = {}
        for line in lines[3:]:
            key, dist_text, parent_text = line.split("\t")
            parent = None if parent_text == "-" else Generator.from_letter(parent_text)
            enc = kernel.encode_pair(to_tree_pair(parse_normal_form(key)))
            elements[key] = BallEntry(int(dist_text), parent, enc)
        ball = cls(radius, elements)
        ball.sphere_sizes = [0] * (radius + 1)
        for entry in elements.values():
            ball.sphere_sizes[entry.distance] += 1
        return ball


def _element_limit() -> int:
    return int(os.environ.get(_ELEMENT_LIMIT_ENV, _DEFAULT_ELEMENT_LIMIT))


def bfs_ball(radius: int, max_elements: Optional[int] = None) -> Ball:
    """Exact distances for every element within the given radius.

    Frontiers are expanded in sorted canonical-key order, so two runs always
    produce the same ball.  Exceeding the element budget raises rather than
    returning a silently truncated ball.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    limit = _element_limit() if max_elements is None else max_elements
    identity_key = kernel.key(kernel.IDENTITY)
    elements = {identity_key: BallEntry(0, None, kernel.IDENTITY)}
    sphere_sizes = [1]
    frontier = [(identity_key, kernel.IDENTITY)]
    for r in range(1, radius + 1):
        discovered: dict[str, BallEntry] = {}
        for _, enc in frontier:
            for g in GENERATORS:
                nb = kernel.apply_generator(enc, g)
                k = kernel.key(nb)
                if k in elements or k in discovered:
                    continue
                discovered[k] = BallEntry(r, g, nb)
        if len(elements) + len(discovered) > limit:
            raise BallLimitError(
                f"radius-{r} ball needs {len(elements) + len(discovered)} elements, "
                f"budget is {limit}")
        frontier = sorted((k, e.enc) for k, e in discovered.items())
        elements.update(sorted(discovered.items()))
        sphere_sizes.append(len(discovered))
    return Ball(radius, elements, sphere_sizes)


@dataclass(slots=True)
class VerificationReport:
    checked: int
    violations: list[tuple[str, int, int]]  # key, bfs distance, weight length

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_word_length(ball: Ball) -> VerificationReport:
    """Compare the weight-table length against the BFS distance everywhere.

    The lengths are recomputed through the tree objects, not the kernel, so
    the two sides of the comparison share no code path.
    """
    from .metric import word_length

    violations = []
    for key, entry in ball.elements.items():
        length = word_length(to_tree_pair(parse_normal_form(key)))
        if length != entry.distance:
            violations.append((key, entry.distance, length))
    return VerificationReport(len(ball.elements), violations)


@dataclass(slots=True)
class DeadEndRecord:
    key: str
    length: int
    structural: bool  # matches the structural dead-end form
    escape_lengths: tuple[int, int, int]  # along x0^-1, x1, x1

    @property
    def escape_ok(self) -> bool:
        n = self.length
        return self.escape_lengths == (n - 1, n, n + 1)


def dead_end_census(ball: Ball) -> list[DeadEndRecord]:
    """All dead ends with certified neighborhoods: length below the radius,
    every generator shortening, structural-form agreement, and the
    three-step escape path checked against ball distances."""
    records = []
    for key, entry in ball.elements.items():
        if entry.distance == 0 or entry.distance > ball.radius - 1:
            continue
        neighbour_keys = [kernel.key(nb) for nb in kernel.neighbors(entry.enc)]
        deltas = [ball.distance(k) - entry.distance for k in neighbour_keys]
        if any(d != -1 for d in deltas):
            continue
        step1 = kernel.apply_generator(entry.enc, Generator.X0_INV)
        step2 = kernel.apply_generator(step1, Generator.X1)
        step3 = kernel.apply_generator(step2, Generator.X1)
        escape = tuple(ball.distance(kernel.key(enc)) for enc in (step1, step2, step3))
        structural = matches_dead_end_form(kernel.decode_pair(entry.enc))
        records.append(DeadEndRecord(key, entry.distance, structural, escape))
    records.sort(key=lambda r: (r.length, r.key))
    return records


def census_lines(records: list[DeadEndRecord]) -> list[str]:
    return [f"{r.key}\t{r.length}\t{'yes' if r.structural else 'no'}"
            for r in records]


def shortest_escape(ball: Ball, key: str, max_steps: int = 3) -> Optional[list[Generator]]:
    """A generator word of length <= max_steps from the element to somewhere
    strictly longer, or None if every such path stays within its ball."""
    start = ball.elements[key]
    target = start.distance + 1
    paths: list[tuple[bytes, list[Generator]]] = [(start.enc, [])]
    for _ in range(max_steps):
        next_paths = []
        for enc, word in paths:
            for g in GENERATORS:
                nb = kernel.apply_generator(enc, g)
                k = kernel.key(nb)
                if ball.distance(k) == target:
                    return word + [g]
                next_paths.append((nb, word + [g]))
        paths = next_paths
    return None
