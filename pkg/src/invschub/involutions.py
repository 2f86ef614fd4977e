"""Involutions in the group of finitely supported permutations of Z.

Covers cycle data, involution length and words, atoms, visible inversions
and descents, involution diagrams/codes, the I-Grassmannian classification
and the staircase-complement involutions attached to skew shapes.
"""

from __future__ import annotations

from typing import Iterator

from invschub.permutations import EnumerationGuardError, Permutation, length


class FalsificationError(AssertionError):
    """A structural fact the engine relies on failed on a concrete input."""


def check_involution(y: Permutation) -> Permutation:
    if not y.is_involution():
        raise ValueError(f"{y!r} is not an involution")
    return y


def cycles(y: Permutation, fixed_window: tuple[int, int] | None = None):
    """Nontrivial cycles (a, b) with a < b, sorted; optionally the fixed
    points inside ``fixed_window`` are interleaved as (a, a) pairs."""
    check_involution(y)
    pairs = sorted((i, y(i)) for i in y.support if i < y(i))
    if fixed_window is not None:
        lo, hi = fixed_window
        fixed = [(i, i) for i in range(lo, hi + 1) if y(i) == i]
        pairs = sorted(pairs + fixed)
    return pairs


def kappa(y: Permutation) -> int:
    """Number of nontrivial cycles."""
    check_involution(y)
    return sum(1 for i in y.support if i < y(i))


def inv_length(y: Permutation) -> int:
    """(length + kappa) / 2, asserted to be an integer."""
    total = length(y) + kappa(y)
    if total % 2:
        raise FalsificationError(f"length + kappa odd for {y!r}")
    return total // 2


def _descend(y: Permutation, i: int) -> Permutation:
    """The involution y' with s_i o y' o s_i = y, for s_i a right descent."""
    s = Permutation.s(i)
    sy, ys = s * y, y * s
    return ys if sy == ys else s * y * s


def ascend(y: Permutation, i: int) -> Permutation:
    """s_i o y o s_i for s_i not a right descent of y."""
    s = Permutation.s(i)
    sy, ys = s * y, y * s
    return ys if sy == ys else s * y * s


def involution_words(
    y: Permutation, guard: int = 12
) -> frozenset[tuple[int, ...]]:
    """All involution words of y, via right-descent peeling."""
    check_involution(y)
    if inv_length(y) > guard:
        raise EnumerationGuardError(
            f"involution length {inv_length(y)} exceeds word guard {guard}"
        )
    memo: dict[Permutation, frozenset] = {}

    def rec(z: Permutation) -> frozenset[tuple[int, ...]]:
        got = memo.get(z)
        if got is not None:
            return got
        if z.is_identity():
            res = frozenset({()})
        else:
            res = frozenset(
                word + (i,)
                for i in _right_descents_inv(z)
                for word in rec(_descend(z, i))
            )
        memo[z] = res
        return res

    return rec(y)


def _right_descents_inv(y: Permutation) -> set[int]:
    cand = set()
    for i in y.support:
        cand.add(i)
        cand.add(i - 1)
    return {i for i in cand if y(i) > y(i + 1)}


def atoms(y: Permutation, guard: int = 12) -> frozenset[Permutation]:
    """The minimal-length w with w^{-1} o w = y (Demazure product)."""
    check_involution(y)
    if inv_length(y) > guard:
        raise EnumerationGuardError(
            f"involution length {inv_length(y)} exceeds atom guard {guard}"
        )
    memo: dict[Permutation, frozenset] = {}

    def rec(z: Permutation) -> frozenset[Permutation]:
        got = memo.get(z)
        if got is not None:
            return got
        if z.is_identity():
            res = frozenset({Permutation()})
        else:
            res = frozenset(
                w * Permutation.s(i)
                for i in _right_descents_inv(z)
                for w in rec(_descend(z, i))
            )
        memo[z] = res
        return res

    return rec(y)


def min_atom(y: Permutation) -> Permutation:
    """The lexicographically minimal atom, built from the sorted cycles.

    Reading the cycles (a_1,b_1), (a_2,b_2), ... of y (fixed points
    included, a_1 < a_2 < ...) as the sequence b_1 a_1 b_2 a_2 ... with a_i
    dropped when a_i = b_i gives the one-line word of the inverse.
    """
    check_involution(y)
    if y.is_identity():
        return Permutation()
    if y.min_support() < 1:
        raise ValueError("min_atom needs support in the positive integers")
    m = y.max_support()
    word: list[int] = []
    for a in range(1, m + 1):
        b = y(a)
        if b == a:
            word.append(a)
        elif a < b:
            word.extend((b, a))
    w = Permutation.from_one_line(word)
    return w.inverse()


def visible_inversions(y: Permutation) -> set[tuple[int, int]]:
    """{(i, j) : i < j and y(j) <= min(i, y(i))}."""
    check_involution(y)
    out = set()
    for j in y.support:
        vj = y(j)
        if vj >= j:
            continue
        for i in range(vj, j):
            if vj <= y(i):
                out.add((i, j))
    return out


def visible_descents(y: Permutation) -> set[int]:
    return {i for (i, j) in visible_inversions(y) if j == i + 1}


def max_visible_inversion(y: Permutation) -> tuple[int, int]:
    vis = visible_inversions(y)
    if not vis:
        raise ValueError("the identity has no visible inversions")
    return max(vis)


def inv_diagram(y: Permutation) -> set[tuple[int, int]]:
    """{(i, j) : j <= i < y(j) and j < y(i)}; has inv_length(y) cells."""
    check_involution(y)
    if y.support and y.min_support() < 1:
        raise ValueError("diagrams need support in the positive integers")
    out = set()
    for j in y.support:
        if y(j) < j:
            continue
        for i in range(j, y(j)):
            if j < y(i):
                out.add((i, j))
    if len(out) != inv_length(y):
        raise FalsificationError(f"|diagram| != involution length for {y!r}")
    return out


def inv_code(y: Permutation) -> tuple[int, ...]:
    """Row counts of the involution diagram, trailing zeros trimmed."""
    diag = inv_diagram(y)
    if not diag:
        return ()
    n = max(i for i, _ in diag)
    c = [0] * n
    for i, _ in diag:
        c[i - 1] += 1
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def shape_mu(y: Permutation) -> tuple[int, ...]:
    """Transpose of the sorted involution code; always a strict partition."""
    from invschub.symfunc import transpose

    mu = transpose(tuple(sorted(inv_code(y), reverse=True)))
    if any(mu[i] <= mu[i + 1] for i in range(len(mu) - 1)):
        raise FalsificationError(f"shape of {y!r} is not strict: {mu}")
    return mu


def is_i_grassmannian(y: Permutation):
    """(flag, data): data = (phi, n, r) with y = (phi_1,n+1)...(phi_r,n+r),
    or ((), 0, 0) for the identity; None when the flag is False."""
    check_involution(y)
    if y.is_identity():
        return True, ((), 0, 0)
    des = visible_descents(y)
    if len(des) != 1:
        return False, None
    cyc = cycles(y)
    phi = tuple(a for a, _ in cyc)
    tops = tuple(b for _, b in sorted(cyc, key=lambda ab: ab[1]))
    n = tops[0] - 1
    r = len(cyc)
    ok = (
        tops == tuple(n + 1 + k for k in range(r))
        and all(phi[k] < phi[k + 1] for k in range(r - 1))
        and phi[-1] <= n
        and phi == tuple(sorted(phi))
    )
    if not ok:
        raise FalsificationError(
            f"{y!r} has one visible descent but no Grassmannian cycle form"
        )
    return True, (phi, n, r)


def igrassmannian_shape(y: Permutation) -> tuple[int, ...]:
    flag, data = is_i_grassmannian(y)
    if not flag:
        raise ValueError(f"{y!r} is not I-Grassmannian")
    phi, n, r = data
    return tuple(n + 1 - p for p in phi)


def is_dominant(y: Permutation) -> bool:
    """132-avoiding as an ordinary pattern on [1, max support]."""
    check_involution(y)
    if y.is_identity():
        return True
    if y.min_support() < 1:
        raise ValueError("dominance is defined for positive support")
    vals = [y(k) for k in range(1, y.max_support() + 1)]
    n = len(vals)
    for a in range(n):
        for b in range(a + 1, n):
            if vals[a] >= vals[b]:
                continue
            # vals[a] < vals[b]: a later value strictly between them is a 132.
            if any(vals[a] < vals[c] < vals[b] for c in range(b + 1, n)):
                return False
    return True


def y_mu_n(mu: tuple[int, ...], n: int) -> Permutation:
    """The fixed-point-free involution whose diagram matches the complement
    of mu inside the (n+1)-staircase; mu must fit strictly below it."""
    from invschub.symfunc import transpose

    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)) or (mu and mu[-1] < 1):
        raise ValueError(f"not a partition: {mu}")
    if len(mu) > n or any(mu[i] >= n + 1 - (i + 1) for i in range(len(mu))):
        raise ValueError(f"{mu} does not sit strictly inside the staircase of {n + 1}")
    mut = transpose(mu)
    mut = mut + (0,) * (n - len(mut))
    b = [n + i + 1 - mut[i] for i in range(n)]
    rest = sorted(set(range(1, 2 * n + 1)) - set(b))
    return Permutation.from_cycles(list(zip(rest, b)))


def involutions(n: int) -> Iterator[Permutation]:
    """All involutions with support inside [n]."""

    def rec(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not points:
            yield ()
            return
        a, rest = points[0], points[1:]
        yield from rec(rest)
        for k, b in enumerate(rest):
            for tail in rec(rest[:k] + rest[k + 1:]):
                yield ((a, b),) + tail

    for matching in rec(tuple(range(1, n + 1))):
        yield Permutation.from_cycles(matching)


def count_involutions(n: int) -> int:
    return sum(1 for _ in involutions(n))


def random_involution(n: int, rng) -> Permutation:
    """Uniform random involution in I_n (rng: random.Random)."""
    points = list(range(1, n + 1))
    pairs = []
    while points:
        a = points.pop(0)
        k = rng.randrange(len(points) + 1)
        if k:
            pairs.append((a, points.pop(k - 1)))
    return Permutation.from_cycles(pairs)


def parse_involution(text: str) -> Permutation:
    from invschub.permutations import parse_cycles

    return check_involution(parse_cycles(text))
