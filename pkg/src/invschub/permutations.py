"""Permutations of the integers with finite support.

A permutation is stored sparsely as the set of points it moves, so the same
type covers ordinary permutations of [n], permutations of all of Z obtained
by shifting, and involutions with negative support.  All values are
immutable and hashable; group operations return new objects.

>>> w = Permutation.from_one_line([2, 3, 4, 1])
>>> w(1), w(4), w(100)
(2, 1, 100)
>>> length(w)
3
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence


class EnumerationGuardError(RuntimeError):
    """Raised when an enumeration would exceed its configured guard."""


@dataclass(frozen=True)
class Permutation:
    """A bijection of Z fixing all but finitely many points.

    ``_graph`` holds the sorted pairs (i, w(i)) with w(i) != i.  The empty
    graph is the identity.
    """

    _graph: tuple[tuple[int, int], ...] = ()

    @staticmethod
    def from_map(mapping: dict[int, int]) -> Permutation:
        graph = {i: v for i, v in mapping.items() if i != v}
        if sorted(graph) != sorted(set(graph.values())):
            raise ValueError(f"not a bijection with equal support and image: {mapping}")
        return Permutation(tuple(sorted(graph.items())))

    @staticmethod
    def from_one_line(values: Sequence[int]) -> Permutation:
        """Build from one-line notation on [n]: values[i-1] = w(i)."""
        n = len(values)
        if sorted(values) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [{n}]: {values!r}")
        return Permutation.from_map({i + 1: v for i, v in enumerate(values)})

    @staticmethod
    def from_cycles(cycles: Iterable[Sequence[int]]) -> Permutation:
        mapping: dict[int, int] = {}
        for cyc in cycles:
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"repeated point in cycle {cyc!r}")
            for a in cyc:
                if a in mapping:
                    raise ValueError(f"cycles are not disjoint at {a}")
            for k, a in enumerate(cyc):
                mapping[a] = cyc[(k + 1) % len(cyc)]
        return Permutation.from_map(mapping)

    @staticmethod
    def transposition(a: int, b: int) -> Permutation:
        if a == b:
            raise ValueError("transposition needs two distinct points")
        return Permutation.from_map({a: b, b: a})

    @staticmethod
    def s(i: int) -> Permutation:
        """The simple transposition (i, i+1)."""
        return Permutation.transposition(i, i + 1)

    @staticmethod
    def from_word(word: Sequence[int]) -> Permutation:
        """Product s_{i1} s_{i2} ... s_{ik} of the letters of ``word``."""
        return reduce(lambda u, i: u * Permutation.s(i), word, Permutation())

    def __call__(self, i: int) -> int:
        lo, hi = 0, len(self._graph)
        while lo < hi:
            mid = (lo + hi) // 2
            if self._graph[mid][0] < i:
                lo = mid + 1
            else:
                hi = mid
        if lo < len(self._graph) and self._graph[lo][0] == i:
            return self._graph[lo][1]
        return i

    def __mul__(self, other: Permutation) -> Permutation:
        """Function composition: (u * v)(i) = u(v(i))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        pts = {i for i, _ in self._graph} | {i for i, _ in other._graph}
        return Permutation.from_map({i: self(other(i)) for i in pts})

    def inverse(self) -> Permutation:
        return Permutation(tuple(sorted((v, i) for i, v in self._graph)))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self._graph)

    def is_identity(self) -> bool:
        return not self._graph

    def is_involution(self) -> bool:
        return all(self(v) == i for i, v in self._graph)

    def min_support(self, default: int = 1) -> int:
        return self._graph[0][0] if self._graph else default

    def max_support(self, default: int = 0) -> int:
        return self._graph[-1][0] if self._graph else default

    def one_line(self, n: int | None = None) -> tuple[int, ...]:
        """One-line notation on [n]; requires support inside [n]."""
        if n is None:
            n = max(self.max_support(default=1), 1)
        if self._graph and (self.min_support() < 1 or self.max_support() > n):
            raise ValueError(f"support of {self!r} not contained in [{n}]")
        return tuple(self(i) for i in range(1, n + 1))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each rotated to start at its minimum."""
        seen: set[int] = set()
        out = []
        for i, _ in self._graph:
            if i in seen:
                continue
            cyc = [i]
            j = self(i)
            while j != i:
                cyc.append(j)
                j = self(j)
            seen.update(cyc)
            out.append(tuple(cyc))
        return tuple(out)

    def __repr__(self) -> str:
        if not self._graph:
            return "Permutation()"
        cyc = "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation[{cyc}]"


IDENTITY = Permutation()


def identity() -> Permutation:
    return IDENTITY


def reverse_permutation(n: int) -> Permutation:
    """w_n = n ... 3 2 1, the longest element of S_n."""
    return Permutation.from_map({i: n + 1 - i for i in range(1, n + 1)})


def compose(u: Permutation, v: Permutation) -> Permutation:
    """u after v, i.e. i -> u(v(i))."""
    return u * v


def _window(w: Permutation) -> range:
    if w.is_identity():
        return range(0)
    return range(w.min_support(), w.max_support() + 1)


def length(w: Permutation) -> int:
    """Number of inversions; pairs outside the support window never invert.

    >>> length(Permutation.from_one_line([3, 2, 1]))
    3
    """
    pts = list(_window(w))
    vals = [w(i) for i in pts]
    return sum(
        1 for a in range(len(vals)) for b in range(a + 1, len(vals)) if vals[a] > vals[b]
    )


def inversions(w: Permutation) -> set[tuple[int, int]]:
    pts = list(_window(w))
    return {
        (pts[a], pts[b])
        for a in range(len(pts))
        for b in range(a + 1, len(pts))
        if w(pts[a]) > w(pts[b])
    }


def right_descents(w: Permutation) -> set[int]:
    """{i : w(i) > w(i+1)}.  Nonempty only near the support."""
    cand = set()
    for i in w.support:
        cand.add(i)
        cand.add(i - 1)
    return {i for i in cand if w(i) > w(i + 1)}


def left_descents(w: Permutation) -> set[int]:
    return right_descents(w.inverse())


def first_reduced_word(w: Permutation) -> tuple[int, ...]:
    """One reduced word (i1,...,ik) with w = s_{i1} s_{i2} ... s_{ik}."""
    word: list[int] = []
    ws = w
    while not ws.is_identity():
        i = min(right_descents(ws))
        word.append(i)
        ws = ws * Permutation.s(i)
    return tuple(reversed(word))


def demazure_product(u: Permutation, v: Permutation) -> Permutation:
    """The associative product with s o s = s and u o v = uv when lengths add."""
    w = u
    for i in first_reduced_word(v):
        if w(i) < w(i + 1):
            w = w * Permutation.s(i)
    return w


def reduced_words(
    w: Permutation, guard: int = 16, _memo: dict | None = None
) -> frozenset[tuple[int, ...]]:
    """All reduced words of w.  Refuses when length(w) exceeds ``guard``."""
    if length(w) > guard:
        raise EnumerationGuardError(
            f"length {length(w)} exceeds reduced-word guard {guard}"
        )
    memo: dict[Permutation, frozenset] = {} if _memo is None else _memo

    def rec(u: Permutation) -> frozenset[tuple[int, ...]]:
        got = memo.get(u)
        if got is not None:
            return got
        if u.is_identity():
            res = frozenset({()})
        else:
            res = frozenset(
                word + (i,)
                for i in right_descents(u)
                for word in rec(u * Permutation.s(i))
            )
        memo[u] = res
        return res

    return rec(w)


def bruhat_covers_up(
    w: Permutation, window: tuple[int, int] | None = None
) -> set[tuple[Permutation, tuple[int, int]]]:
    """Covers w < wt with t = (a,b) inside the scan window.

    The criterion is w(a) < w(b) with no a < i < b satisfying
    w(a) < w(i) < w(b).  The default window is one point beyond the support
    on each side; adjacent transpositions of far-away fixed points are
    deliberately out of scope.
    """
    if window is None:
        if w.is_identity():
            return set()
        window = (w.min_support() - 1, w.max_support() + 1)
    lo, hi = window
    out = set()
    for a in range(lo, hi + 1):
        for b in range(a + 1, hi + 1):
            wa, wb = w(a), w(b)
            if wa > wb:
                continue
            if any(wa < w(i) < wb for i in range(a + 1, b)):
                continue
            out.add((w * Permutation.transposition(a, b), (a, b)))
    return out


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Strong Bruhat order, by the sorted-prefix (dot) criterion."""
    if u == w:
        return True
    pts = sorted(set(u.support) | set(w.support))
    if not pts:
        return u == w
    lo, hi = pts[0], pts[-1]
    uvals: list[int] = []
    wvals: list[int] = []
    for k in range(lo, hi + 1):
        uvals.append(u(k))
        wvals.append(w(k))
        for x, y in zip(sorted(uvals), sorted(wvals)):
            if x > y:
                return False
    return True


def shift(w: Permutation, n: int) -> Permutation:
    """The map i -> w(i - n) + n."""
    return Permutation(tuple(sorted((i + n, v + n) for i, v in w._graph)))


def standardize(w: Permutation, points: Iterable[int]) -> Permutation:
    """Relabel w through the order isomorphisms E -> [|E|] and w(E) -> [|E|]."""
    dom = sorted(points)
    img = sorted(w(i) for i in dom)
    rank = {v: k + 1 for k, v in enumerate(img)}
    return Permutation.from_map({k + 1: rank[w(i)] for k, i in enumerate(dom)})


def symmetric_group(n: int) -> Iterator[Permutation]:
    """All elements of S_n (supports inside [n])."""
    for vals in itertools.permutations(range(1, n + 1)):
        yield Permutation.from_one_line(vals)


def code(w: Permutation) -> tuple[int, ...]:
    """Lehmer code: c_i = #{j > i : w(j) < w(i)}, trailing zeros trimmed."""
    if w._graph and w.min_support() < 1:
        raise ValueError("code requires support in the positive integers")
    n = w.max_support(default=0)
    c = [sum(1 for j in range(i + 1, n + 1) if w(j) < w(i)) for i in range(1, n + 1)]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


# -- text formats -------------------------------------------------------------


def parse_one_line(text: str) -> Permutation:
    text = text.strip()
    if "," in text or "[" in text:
        vals = [int(t) for t in text.strip("[]").replace(",", " ").split()]
    else:
        vals = [int(ch) for ch in text]
    return Permutation.from_one_line(vals)


def parse_cycles(text: str) -> Permutation:
    text = text.strip().replace(" ", "")
    if text in ("", "()", "1", "id"):
        return Permutation()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"bad cycle notation: {text!r}")
    cycles = []
    for chunk in text[1:-1].split(")("):
        cycles.append(tuple(int(t) for t in chunk.split(",")))
    return Permutation.from_cycles(cycles)


def parse_word(text: str) -> Permutation:
    toks = text.replace("s", " ").split()
    return Permutation.from_word([int(t) for t in toks])


def parse_permutation(text: str, notation: str = "one-line") -> Permutation:
    if notation == "one-line":
        return parse_one_line(text)
    if notation == "cycles":
        return parse_cycles(text)
    if notation == "word":
        return parse_word(text)
    raise ValueError(f"unknown notation {notation!r}")


def print_one_line(w: Permutation) -> str:
    vals = w.one_line()
    if all(v <= 9 for v in vals):
        return "".join(map(str, vals))
    return ",".join(map(str, vals))


def print_cycles(w: Permutation) -> str:
    if w.is_identity():
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in w.cycles())


def print_word(w: Permutation) -> str:
    return " ".join(f"s{i}" for i in first_reduced_word(w))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
