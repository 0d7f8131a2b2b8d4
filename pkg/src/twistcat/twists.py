"""Spherical twist functors and braid words.

The twist of Y by a spherical X is the cone of the evaluation map from
Hom(X, Y) tensor X to Y; the inverse twist is the shifted cone of the
adjoint map from Y into X tensor the dual of Hom(Y, X).  Both are built on
a cohomology retract of the Hom complex: one shifted copy of X per
cohomology basis element, connected by the chosen closed representatives.
Over the rationals the retract has zero internal differential, so the
tensor factor is a plain direct sum of shifts.

Braid words store letters in application order: ``letters[0]`` acts first.
The text syntax mirrors the usual operator order instead, so in
``"s2' s3' s1"`` the rightmost token acts first and an apostrophe marks an
inverse twist.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homcore import (
    Entries,
    Morphism,
    TwistedComplex,
    cone,
    direct_sum,
    HomComplex,
    is_spherical,
    minimize,
    simple_object,
)
from .rootlat import QuiverGraph, Root, reflect
from .zigzag import ZigzagAlgebra


@dataclass(frozen=True)
class BraidWord:
    """Sequence of (vertex, exponent) letters, exponent +1 or -1, applied left to right."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for v, e in self.letters:
            if e not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {e}")

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple((v, -e) for v, e in reversed(self.letters)))

    def then(self, other: "BraidWord") -> "BraidWord":
        """This word applied first, then the other."""
        return BraidWord(self.letters + other.letters)


def parse_braid_word(text: str) -> BraidWord:
    """Parse operator-order text like "s2' s3' s1" (rightmost letter acts first)."""
    letters = []
    for token in text.split():
        body = token
        exp = 1
        if body.endswith("'"):
            exp = -1
            body = body[:-1]
        if not body.startswith("s") or not body[1:].isdigit():
            raise ValueError(f"bad braid letter {token!r}")
        vertex = int(body[1:]) - 1
        if vertex < 0:
            raise ValueError(f"bad braid letter {token!r}")
        letters.append((vertex, exp))
    return BraidWord(tuple(reversed(letters)))


def braid_word_to_text(word: BraidWord) -> str:
    return " ".join(
        f"s{v + 1}'" if e == -1 else f"s{v + 1}" for v, e in reversed(word.letters)
    )


def _require_spherical(x: TwistedComplex, checked: bool) -> None:
    if not checked and not is_spherical(x):
        raise ValueError("twist functors are only defined for spherical objects")


def _evaluation_morphism(x: TwistedComplex, y: TwistedComplex) -> Morphism | None:
    """Evaluation from (cohomology of Hom(x, y)) tensor x into y; None when Hom vanishes."""
    reps = HomComplex(x, y).all_cohomology_reps()
    if not reps:
        return None
    blocks = [x.shift(-d) for d, _ in reps]
    tensor = direct_sum(*blocks)
    entries: Entries = {}
    offset = 0
    for (d, rep), block in zip(reps, blocks):
        for (h, g), elem in rep.entries.items():
            entries[(h, g + offset)] = elem
        offset += len(block.generators)
    return Morphism(tensor, y, 0, entries, validate=False)


def _coevaluation_morphism(x: TwistedComplex, y: TwistedComplex) -> Morphism | None:
    """Adjoint map from y into x tensor the dual of Hom(y, x); None when Hom vanishes."""
    reps = HomComplex(y, x).all_cohomology_reps()
    if not reps:
        return None
    blocks = [x.shift(d) for d, _ in reps]
    tensor = direct_sum(*blocks)
    entries: Entries = {}
    offset = 0
    for (d, rep), block in zip(reps, blocks):
        for (h, g), elem in rep.entries.items():
            entries[(h + offset, g)] = elem
        offset += len(block.generators)
    return Morphism(y, tensor, 0, entries, validate=False)


def twist(x: TwistedComplex, y: TwistedComplex, _spherical_checked: bool = False) -> TwistedComplex:
    """Positive spherical twist of y by x, minimized."""
    _require_spherical(x, _spherical_checked)
    evaluation = _evaluation_morphism(x, y)
    if evaluation is None:
        return minimize(y)
    return minimize(cone(evaluation))


def untwist(x: TwistedComplex, y: TwistedComplex, _spherical_checked: bool = False) -> TwistedComplex:
    """Inverse spherical twist of y by x, minimized; two-sided inverse of twist."""
    _require_spherical(x, _spherical_checked)
    coevaluation = _coevaluation_morphism(x, y)
    if coevaluation is None:
        return minimize(y)
    return minimize(cone(coevaluation).shift(-1))


def twist_triangle(
    x: TwistedComplex, y: TwistedComplex, _spherical_checked: bool = False
) -> tuple[TwistedComplex, TwistedComplex, TwistedComplex] | None:
    """The exact triangle (tensor -> y -> twist) of a positive twist, or None if Hom = 0."""
    _require_spherical(x, _spherical_checked)
    evaluation = _evaluation_morphism(x, y)
    if evaluation is None:
        return None
    return evaluation.source, y, minimize(cone(evaluation))


def untwist_triangle(
    x: TwistedComplex, y: TwistedComplex, _spherical_checked: bool = False
) -> tuple[TwistedComplex, TwistedComplex, TwistedComplex] | None:
    """The exact triangle (untwist -> y -> tensor) of an inverse twist, or None if Hom = 0."""
    _require_spherical(x, _spherical_checked)
    coevaluation = _coevaluation_morphism(x, y)
    if coevaluation is None:
        return None
    return minimize(cone(coevaluation).shift(-1)), y, coevaluation.target


def apply_braid(
    alg: ZigzagAlgebra, word: BraidWord, y: TwistedComplex
) -> TwistedComplex:
    """Apply the word's twists in the simples, first letter first; minimized throughout."""
    cur = y
    for v, e in word.letters:
        p = simple_object(alg, v)
        if e == 1:
            cur = twist(p, cur, _spherical_checked=True)
        else:
            cur = untwist(p, cur, _spherical_checked=True)
    return cur


def braid_class_action(q: QuiverGraph, word: BraidWord, w: Root) -> Root:
    """Induced action on classes: the product of simple reflections."""
    for v, _ in word.letters:
        w = reflect(q, w, v)
    return w
