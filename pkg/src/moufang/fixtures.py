"""Deterministic table generators used as test corpora.

``random_loop`` draws from a 64-bit linear congruential generator so that the
same ``(n, seed)`` gives the same table in any language:

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64
    draw  =  state >> 33

starting from ``state = seed mod 2**64``.  ``randbelow(k)`` is ``draw % k``.
Candidate symbols for a cell are listed in increasing order and shuffled by
Fisher-Yates (``for i = len-1 .. 1: swap(i, randbelow(i + 1))``) before the
backtracking search tries them.
"""
from __future__ import annotations

import itertools
from typing import Iterator

from .errors import CertificateInconsistentError, InvalidDegreeError, NotAGroupError
from .magma import CayleyTable, find_unit

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
LCG_MASK = (1 << 64) - 1


class Lcg:
    def __init__(self, seed: int):
        self.state = seed & LCG_MASK

    def next(self) -> int:
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) & LCG_MASK
        return self.state >> 33

    def randbelow(self, k: int) -> int:
        return self.next() % k

    def shuffle(self, items: list) -> list:
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]
        return items


def cyclic_group(n: int) -> CayleyTable:
    if n < 1:
        raise InvalidDegreeError(f"order must be positive, got {n}")
    return CayleyTable(tuple(tuple((g + h) % n for h in range(n)) for g in range(n)))


S3_ELEMENTS = tuple(itertools.permutations(range(3)))
"""Elements of S3 as image tuples in lexicographic order; index 0 is the identity.
The product ``a*b`` applies ``b`` first."""


def symmetric_group_3() -> CayleyTable:
    index = {p: i for i, p in enumerate(S3_ELEMENTS)}
    return CayleyTable(tuple(
        tuple(index[tuple(a[x] for x in b)] for b in S3_ELEMENTS) for a in S3_ELEMENTS
    ))


def direct_product(a: CayleyTable, b: CayleyTable) -> CayleyTable:
    """Componentwise product; pair (x, y) sits at index ``x * b.order + y``."""
    nb = b.order
    n = a.order * nb
    return CayleyTable(tuple(
        tuple(a[g // nb][h // nb] * nb + b[g % nb][h % nb] for h in range(n))
        for g in range(n)
    ))


def chein_double(group_tbl: CayleyTable) -> CayleyTable:
    """The loop on G + Gu; ``g`` sits at index g and ``gu`` at index n + g.

    g*h = gh, g*(hu) = (hg)u, (gu)*h = (gh^-1)u, (gu)*(hu) = h^-1 g
    """
    from .axioms import check_associative, check_moufang, inverse_map

    e = find_unit(group_tbl)
    if e is None or not check_associative(group_tbl).passed:
        raise NotAGroupError("Chein doubling needs a group table")
    n = group_tbl.order
    t = group_tbl.table
    inv = inverse_map(group_tbl)
    rows = []
    for x in range(2 * n):
        row = []
        for y in range(2 * n):
            g, gu = x % n, x >= n
            h, hu = y % n, y >= n
            if not gu and not hu:
                row.append(t[g][h])
            elif not gu:
                row.append(n + t[h][g])
            elif not hu:
                row.append(n + t[g][inv[h]])
            else:
                row.append(t[inv[h]][g])
        rows.append(tuple(row))
    out = CayleyTable(tuple(rows))
    rep = check_moufang(out)
    if not rep.passed:
        raise CertificateInconsistentError(f"Chein double failed its self-check: {rep}")
    return out


def chein_s3() -> CayleyTable:
    return chein_double(symmetric_group_3())


def _complete(n: int, order_candidates) -> Iterator[list[list[int]]]:
    """Yield every completion of a Latin square with identity border row/column 0."""
    grid = [[0] * n for _ in range(n)]
    for i in range(n):
        grid[0][i] = i
        grid[i][0] = i
    row_used = [set(grid[r][:1]) for r in range(n)]
    col_used = [set([c]) for c in range(n)]
    cells = [(r, c) for r in range(1, n) for c in range(1, n)]

    def go(pos):
        if pos == len(cells):
            yield [row[:] for row in grid]
            return
        r, c = cells[pos]
        free = [v for v in range(n) if v not in row_used[r] and v not in col_used[c]]
        for v in order_candidates(free):
            grid[r][c] = v
            row_used[r].add(v)
            col_used[c].add(v)
            yield from go(pos + 1)
            row_used[r].discard(v)
            col_used[c].discard(v)

    yield from go(0)


def random_loop(n: int, seed: int) -> CayleyTable:
    """A loop with unit 0, found by LCG-shuffled backtracking; deterministic in (n, seed)."""
    if n < 1:
        raise InvalidDegreeError(f"order must be positive, got {n}")
    rng = Lcg(seed)
    grid = next(_complete(n, rng.shuffle))
    return CayleyTable(tuple(tuple(row) for row in grid))


def enumerate_loops(n: int) -> Iterator[CayleyTable]:
    """Every loop of order n whose unit is 0 and whose border rows are in natural order."""
    if n < 1:
        raise InvalidDegreeError(f"order must be positive, got {n}")
    for grid in _complete(n, lambda free: free):
        yield CayleyTable(tuple(tuple(row) for row in grid))


def swap_mutations(triple, count: int, seed: int = 0):
    """Yield ``count`` single-permutation corruptions of a triple.

    Each mutation picks a map letter, an element and two distinct points of
    one permutation (all through :class:`Lcg`) and swaps their images, which
    keeps the permutation a bijection while changing exactly two images.
    Yields ``((letter, g, i, j), mutated_triple)``.
    """
    from .perm import Perm

    if triple.m < 2:
        return
    rng = Lcg(seed)
    for _ in range(count):
        letter = "STP"[rng.randbelow(3)]
        g = rng.randbelow(triple.n)
        i = rng.randbelow(triple.m)
        j = (i + 1 + rng.randbelow(triple.m - 1)) % triple.m
        images = list(getattr(triple, letter)[g].images)
        images[i], images[j] = images[j], images[i]
        yield (letter, g, i, j), triple.replace(letter, g, Perm(tuple(images)))
