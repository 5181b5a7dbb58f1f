"""Finite permutations on the points ``0..m-1``.

Composition is apply-right-then-left: ``compose(a, b)(x) == a(b(x))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import IncompatibleDegreeError, InvalidDegreeError


@dataclass(frozen=True)
class Perm:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        m = len(images)
        if m == 0:
            raise InvalidDegreeError("a permutation needs at least one point")
        if sorted(images) != list(range(m)):
            raise ValueError(f"{list(images)} is not a bijection on 0..{m - 1}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Perm) -> Perm:
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def __str__(self):
        return " ".join(map(str, self.images))


def identity(m: int) -> Perm:
    if m < 1:
        raise InvalidDegreeError(f"degree must be positive, got {m}")
    return Perm(tuple(range(m)))


def compose(a: Perm, b: Perm) -> Perm:
    if a.degree != b.degree:
        raise IncompatibleDegreeError(f"cannot compose degrees {a.degree} and {b.degree}")
    ai = a.images
    return Perm(tuple(ai[x] for x in b.images))


def compose_all(perms: Iterable[Perm]) -> Perm:
    """Product of a non-empty sequence, leftmost factor applied last."""
    perms = list(perms)
    out = perms[-1]
    for p in reversed(perms[:-1]):
        out = compose(p, out)
    return out


def inverse(a: Perm) -> Perm:
    inv = [0] * a.degree
    for x, y in enumerate(a.images):
        inv[y] = x
    return Perm(tuple(inv))
