"""Compositions, partitions and the operators on them.

A composition is stored as an immutable tuple of positive integers.  The
empty composition is a valid value (size 0, length 0) and is written ``e``
in text form.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from math import factorial, prod
from typing import Iterable, Iterator

EMPTY_TOKEN = "e"


class Composition(tuple):
    """Finite sequence of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int):
                raise TypeError(f"composition parts must be int, got {p!r}")
            if p < 1:
                raise ValueError(f"composition parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __add__(self, other):
        # concatenation stays a Composition
        return Composition(tuple(self) + tuple(other))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_composition(self)})"

    def __str__(self) -> str:
        return format_composition(self)

    def sort_key(self) -> tuple:
        """Graded, then lexicographic."""
        return (sum(self), tuple(self))


class Partition(Composition):
    """Composition with weakly decreasing parts."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        if any(self[i] < self[i + 1] for i in range(len(self) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing, got {tuple(self)}")
        return self


def as_composition(alpha: Iterable[int]) -> Composition:
    if isinstance(alpha, Composition):
        return alpha
    return Composition(alpha)


def canonical_order(comps: Iterable[Composition]) -> list[Composition]:
    return sorted(comps, key=lambda c: (sum(c), tuple(c)))


# -- text encoding ----------------------------------------------------------

def parse_composition(text: str) -> Composition:
    """Parse ``"1,2,1"`` (or ``"e"`` for the empty composition)."""
    text = text.strip()
    if text in (EMPTY_TOKEN, ""):
        return Composition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse composition {text!r}") from None
    return Composition(parts)


def format_composition(alpha: Iterable[int]) -> str:
    alpha = tuple(alpha)
    if not alpha:
        return EMPTY_TOKEN
    return ",".join(str(p) for p in alpha)


# -- basic statistics -------------------------------------------------------

def underlying_partition(alpha: Iterable[int]) -> Partition:
    return Partition(sorted(alpha, reverse=True))


def multiplicities(alpha: Iterable[int]) -> Counter:
    return Counter(alpha)


def z_value(alpha: Iterable[int]) -> int:
    """Product over part sizes i of ``i**r_i * r_i!`` with r_i the multiplicity of i."""
    return prod(i**r * factorial(r) for i, r in Counter(alpha).items())


def descent_set(alpha: Iterable[int]) -> frozenset[int]:
    """Partial sums of all parts but the last."""
    alpha = tuple(alpha)
    out = []
    total = 0
    for p in alpha[:-1]:
        total += p
        out.append(total)
    return frozenset(out)


def composition_from_set(s: Iterable[int], n: int) -> Composition:
    """Inverse of :func:`descent_set` for compositions of ``n``."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    cuts = sorted(set(s))
    for c in cuts:
        if c < 1 or c >= n:
            raise ValueError(f"{c} is not in [1, {n - 1}]")
    if n == 0:
        return Composition()
    bounds = [0, *cuts, n]
    return Composition(b - a for a, b in zip(bounds, bounds[1:]))


# -- involutive operators ---------------------------------------------------

def complement(alpha: Iterable[int]) -> Composition:
    alpha = as_composition(alpha)
    n = alpha.size
    return composition_from_set(set(range(1, n)) - descent_set(alpha), n)


def reverse(alpha: Iterable[int]) -> Composition:
    return Composition(tuple(alpha)[::-1])


def transpose(alpha: Iterable[int]) -> Composition:
    return reverse(complement(alpha))


# -- refinement order -------------------------------------------------------

def coarsens(alpha: Iterable[int], beta: Iterable[int]) -> bool:
    """True iff ``alpha`` is a coarsening of ``beta`` (equal size, set(alpha) within set(beta))."""
    alpha, beta = tuple(alpha), tuple(beta)
    return sum(alpha) == sum(beta) and descent_set(alpha) <= descent_set(beta)


def join(alpha: Iterable[int], beta: Iterable[int]) -> Composition:
    """Finest common coarsening of two compositions of the same size."""
    alpha, beta = tuple(alpha), tuple(beta)
    n = sum(alpha)
    if n != sum(beta):
        raise ValueError(f"join needs equal sizes, got {n} and {sum(beta)}")
    return composition_from_set(descent_set(alpha) & descent_set(beta), n)


def compositions_of(n: int) -> list[Composition]:
    """All compositions of ``n`` in canonical (lexicographic) order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return [Composition()]
    out = []
    for k in range(n):
        for cuts in combinations(range(1, n), k):
            out.append(composition_from_set(cuts, n))
    out.sort()
    return out


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n``, lexicographically ascending."""

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first, *tail)

    return sorted(Partition(p) for p in gen(n, n))


def refinements(alpha: Iterable[int]) -> list[Composition]:
    """All beta with ``coarsens(alpha, beta)``."""
    alpha = as_composition(alpha)
    n = alpha.size
    base = descent_set(alpha)
    free = sorted(set(range(1, n)) - base)
    out = [composition_from_set(base | set(extra), n)
           for k in range(len(free) + 1) for extra in combinations(free, k)]
    return canonical_order(out)


def coarsenings(alpha: Iterable[int]) -> list[Composition]:
    """All beta with ``coarsens(beta, alpha)``."""
    alpha = as_composition(alpha)
    n = alpha.size
    base = sorted(descent_set(alpha))
    out = [composition_from_set(sub, n)
           for k in range(len(base) + 1) for sub in combinations(base, k)]
    return canonical_order(out)


def rearrangements(lam: Iterable[int]) -> list[Composition]:
    """Distinct compositions with underlying partition ``lam``."""

    def gen(counts: Counter, left: int) -> Iterator[tuple[int, ...]]:
        if left == 0:
            yield ()
            return
        for part in sorted(counts):
            if counts[part]:
                counts[part] -= 1
                for tail in gen(counts, left - 1):
                    yield (part, *tail)
                counts[part] += 1

    lam = tuple(lam)
    return [Composition(c) for c in gen(Counter(lam), len(lam))]


# -- shuffles and deconcatenation -------------------------------------------

def shuffles(alpha: Iterable[int], beta: Iterable[int]) -> list[Composition]:
    """Multiset of shuffles, with repetitions, alpha-part first at each step."""
    alpha, beta = tuple(alpha), tuple(beta)

    def gen(a: tuple, b: tuple) -> Iterator[tuple]:
        if not a:
            yield b
            return
        if not b:
            yield a
            return
        for tail in gen(a[1:], b):
            yield (a[0], *tail)
        for tail in gen(a, b[1:]):
            yield (b[0], *tail)

    return [Composition(g) for g in gen(alpha, beta)]


def deconcatenations(alpha: Iterable[int]) -> list[tuple[Composition, Composition]]:
    alpha = tuple(alpha)
    return [(Composition(alpha[:i]), Composition(alpha[i:])) for i in range(len(alpha) + 1)]
