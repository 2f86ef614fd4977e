"""Partitions, dominance order, and truncated symmetric functions.

Symmetric functions are handled through their truncations to finitely many
variables.  Schur and Schur P-functions are produced as tableau generating
functions; expansions into the Schur-P basis run exact integer elimination
in an order compatible with dominance, so back-substitution never divides.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from invschub.permutations import reverse_permutation
from invschub.polynomials import IntPolynomial, prod, x

Partition = tuple[int, ...]


class NotInSpanError(ValueError):
    """The target polynomial is not an integer combination of the basis."""


# -- partitions ----------------------------------------------------------------


def check_partition(lam) -> Partition:
    lam = tuple(int(a) for a in lam if a != 0)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or (lam and lam[-1] < 1):
        raise ValueError(f"not a partition: {lam}")
    return lam


def is_strict(lam: Partition) -> bool:
    return all(lam[i] > lam[i + 1] for i in range(len(lam) - 1))


def check_strict(lam) -> Partition:
    lam = check_partition(lam)
    if not is_strict(lam):
        raise ValueError(f"not a strict partition: {lam}")
    return lam


def transpose(lam: Partition) -> Partition:
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for a in lam if a >= j) for j in range(1, lam[0] + 1))


def contains(lam: Partition, mu: Partition) -> bool:
    """Whether mu fits inside lam."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam, mu))


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """lam <= mu in dominance; False when the sizes differ."""
    lam, mu = check_partition(lam), check_partition(mu)
    if sum(lam) != sum(mu):
        return False
    total_l = total_m = 0
    for k in range(max(len(lam), len(mu))):
        total_l += lam[k] if k < len(lam) else 0
        total_m += mu[k] if k < len(mu) else 0
        if total_l > total_m:
            return False
    return True


def partitions_of(n: int, max_part: int | None = None):
    """All partitions of n, largest part first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def strict_partitions_of(n: int, max_part: int | None = None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in strict_partitions_of(n - first, first - 1):
            yield (first,) + rest


def staircase(n: int) -> Partition:
    """(n-1, n-2, ..., 1)."""
    return tuple(range(n - 1, 0, -1))


def dominance_key(lam: Partition):
    """Sort key putting dominance-larger shapes first, lex as tiebreak."""
    sums = tuple(itertools.accumulate(lam))
    return (-sum(lam), tuple(-s for s in sums), lam)


# -- truncated symmetric functions ----------------------------------------------


@dataclass(frozen=True)
class TruncatedSymFun:
    """A symmetric polynomial in x1..xn recording its width and degree."""

    poly: IntPolynomial
    width: int
    degree: int

    def restrict(self, n: int) -> TruncatedSymFun:
        if n > self.width:
            raise ValueError(f"cannot widen a truncation from {self.width} to {n}")
        return TruncatedSymFun(self.poly.truncate(n), n, self.degree)

    def same(self, other: TruncatedSymFun) -> bool:
        n = min(self.width, other.width)
        return self.restrict(n).poly == other.restrict(n).poly


# -- tableau generating functions -------------------------------------------------


def _shifted_cells(lam: Partition) -> list[tuple[int, int]]:
    """Shifted diagram cells (row, col), row-major; row i starts at column i."""
    return [(i + 1, i + 1 + j) for i, part in enumerate(lam) for j in range(part)]


def _cells(lam: Partition) -> list[tuple[int, int]]:
    return [(i + 1, j + 1) for i, part in enumerate(lam) for j in range(part)]


def schur_to_monomials(lam: Partition, n: int) -> TruncatedSymFun:
    """Generating function over semistandard tableaux with entries <= n."""
    lam = check_partition(lam)
    cells = _cells(lam)
    counts: dict[tuple, int] = {}

    def rec(k: int, filling: dict):
        if k == len(cells):
            exp = [0] * n
            for v in filling.values():
                exp[v - 1] += 1
            key = tuple(exp)
            counts[key] = counts.get(key, 0) + 1
            return
        i, j = cells[k]
        lo = 1
        if (i, j - 1) in filling:
            lo = max(lo, filling[(i, j - 1)])
        if (i - 1, j) in filling:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, n + 1):
            filling[(i, j)] = v
            rec(k + 1, filling)
            del filling[(i, j)]

    rec(0, {})
    return TruncatedSymFun(IntPolynomial(counts), n, sum(lam))


def _prec_rank(v: int) -> int:
    """Rank in the marked order -1 < 1 < -2 < 2 < ..."""
    return 2 * v - 1 if v > 0 else -2 * v - 2


def schurP_to_monomials(lam: Partition, n: int) -> TruncatedSymFun:
    """Generating function over semistandard shifted marked tableaux with
    entries of absolute value <= n.  Negative entries are the marked ones."""
    lam = check_strict(lam)
    cells = _shifted_cells(lam)
    counts: dict[tuple, int] = {}

    def ok(filling, i, j, v) -> bool:
        if i == j and v < 0:
            return False
        for u, strict_pos in (((i, j - 1), False), ((i - 1, j), True)):
            if u in filling:
                w = filling[u]
                if _prec_rank(w) > _prec_rank(v):
                    return False
                if w == v:
                    # equal entries: positives may repeat only along rows,
                    # negatives only along columns
                    if v > 0 and strict_pos:
                        return False
                    if v < 0 and not strict_pos:
                        return False
        return True

    def rec(k: int, filling: dict):
        if k == len(cells):
            exp = [0] * n
            for v in filling.values():
                exp[abs(v) - 1] += 1
            key = tuple(exp)
            counts[key] = counts.get(key, 0) + 1
            return
        i, j = cells[k]
        for a in range(1, n + 1):
            for v in (-a, a):
                if ok(filling, i, j, v):
                    filling[(i, j)] = v
                    rec(k + 1, filling)
                    del filling[(i, j)]

    rec(0, {})
    return TruncatedSymFun(IntPolynomial(counts), n, sum(lam))


def skew_schur(lam: Partition, mu: Partition, n: int) -> TruncatedSymFun:
    """Generating function over semistandard skew tableaux of shape lam/mu."""
    lam, mu = check_partition(lam), check_partition(mu)
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    mu = mu + (0,) * (len(lam) - len(mu))
    cells = [
        (i + 1, j + 1)
        for i in range(len(lam))
        for j in range(mu[i], lam[i])
    ]
    counts: dict[tuple, int] = {}

    def rec(k: int, filling: dict):
        if k == len(cells):
            exp = [0] * n
            for v in filling.values():
                exp[v - 1] += 1
            key = tuple(exp)
            counts[key] = counts.get(key, 0) + 1
            return
        i, j = cells[k]
        lo = 1
        if (i, j - 1) in filling:
            lo = max(lo, filling[(i, j - 1)])
        if (i - 1, j) in filling:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, n + 1):
            filling[(i, j)] = v
            rec(k + 1, filling)
            del filling[(i, j)]

    rec(0, {})
    return TruncatedSymFun(IntPolynomial(counts), n, sum(lam) - sum(mu))


def schurP_via_operators(lam: Partition, n: int) -> TruncatedSymFun:
    """Independent route: the full divided difference of the staircase seed.

    The isobaric operator of the longest element applied to x^lam times the
    product of (1 + x_i^{-1} x_{i+j}) factors equals the divided-difference
    operator applied to the polynomial
    x^lam * prod_{i<=r} prod_{j<=n-i} (x_i + x_{i+j}) * prod_{i>r} x_i^{n-i},
    which avoids Laurent terms altogether.
    """
    lam = check_strict(lam)
    r = len(lam)
    if n < r:
        return TruncatedSymFun(IntPolynomial(), n, sum(lam))
    seed = IntPolynomial.monomial(lam)
    for i in range(1, r + 1):
        seed = seed * prod(x(i) + x(i + j) for j in range(1, n - i + 1))
    for i in range(r + 1, n + 1):
        seed = seed * IntPolynomial.variable(i) ** (n - i)
    res = seed.op_word("d", reverse_permutation(n))
    return TruncatedSymFun(res, n, sum(lam))


@lru_cache(maxsize=None)
def _schurP_cached(lam: Partition, n: int) -> TruncatedSymFun:
    return schurP_to_monomials(lam, n)


# -- formal expansions ------------------------------------------------------------


@dataclass(frozen=True)
class SymFunExpansion:
    """A finite Z-linear combination over a named basis of partitions."""

    basis: str
    coeffs: tuple[tuple[Partition, int], ...] = field(default=())

    @staticmethod
    def from_dict(basis: str, data: dict[Partition, int]) -> SymFunExpansion:
        items = tuple(
            (lam, c)
            for lam, c in sorted(data.items(), key=lambda kv: dominance_key(kv[0]))
            if c != 0
        )
        return SymFunExpansion(basis, items)

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.coeffs)

    def __add__(self, other: SymFunExpansion) -> SymFunExpansion:
        if self.basis != other.basis:
            raise ValueError("cannot add expansions over different bases")
        data = self.as_dict()
        for lam, c in other.coeffs:
            data[lam] = data.get(lam, 0) + c
        return SymFunExpansion.from_dict(self.basis, data)

    def scale(self, k: int) -> SymFunExpansion:
        return SymFunExpansion.from_dict(
            self.basis, {lam: k * c for lam, c in self.coeffs}
        )

    def support(self) -> tuple[Partition, ...]:
        return tuple(lam for lam, _ in self.coeffs)

    def to_payload(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"shape": list(lam), "coeff": c} for lam, c in self.coeffs],
        }

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        letter = {"Schur": "s", "SchurP": "P", "SchurQ": "Q"}.get(self.basis, "b")
        bits = []
        for lam, c in self.coeffs:
            name = f"{letter}({','.join(map(str, lam))})"
            bits.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(bits)


def _eliminate(
    target: IntPolynomial,
    degree: int,
    width: int,
    basis_polys: list[tuple[Partition, IntPolynomial]],
) -> dict[Partition, int]:
    """Peel dominance-maximal leading monomials; exact by unitriangularity."""
    residual = target
    out: dict[Partition, int] = {}
    for lam, p in basis_polys:
        c = residual.coefficient(lam)
        if c:
            out[lam] = c
            residual = residual - p * c
    if residual:
        raise NotInSpanError(
            f"residual of degree-{degree} expansion at width {width} is nonzero"
        )
    return out


def _assert_basis_independent(basis_polys) -> None:
    """Each truncated basis element must show its own leading monomial."""
    for lam, p in basis_polys:
        if p.coefficient(lam) != 1:
            raise NotInSpanError(
                f"basis element {lam} lost its leading monomial; width too small"
            )


def expand_in_schurP(f: TruncatedSymFun) -> SymFunExpansion:
    """Expand a symmetric truncation into Schur P-functions of its degree."""
    if f.degree < 0 or not f.poly:
        return SymFunExpansion.from_dict("SchurP", {})
    basis = [
        (lam, _schurP_cached(lam, f.width).poly)
        for lam in sorted(strict_partitions_of(f.degree), key=dominance_key)
    ]
    _assert_basis_independent(basis)
    return SymFunExpansion.from_dict(
        "SchurP", _eliminate(f.poly, f.degree, f.width, basis)
    )


@lru_cache(maxsize=None)
def _schur_cached(lam: Partition, n: int) -> TruncatedSymFun:
    return schur_to_monomials(lam, n)


def expand_in_schur(f: TruncatedSymFun) -> SymFunExpansion:
    """Expand a symmetric truncation into Schur functions of its degree."""
    if f.degree < 0 or not f.poly:
        return SymFunExpansion.from_dict("Schur", {})
    basis = []
    for lam in sorted(partitions_of(f.degree), key=dominance_key):
        if len(lam) > f.width:
            continue
        basis.append((lam, _schur_cached(lam, f.width).poly))
    _assert_basis_independent(basis)
    return SymFunExpansion.from_dict(
        "Schur", _eliminate(f.poly, f.degree, f.width, basis)
    )


def schurQ_scale(expansion: SymFunExpansion, kappa: int) -> SymFunExpansion:
    """Turn a Schur-P expansion into a Schur-Q one via Q = 2^l(lam) P and a
    global factor 2^kappa; integrality is a theorem, so failure raises."""
    from invschub.involutions import FalsificationError

    if expansion.basis != "SchurP":
        raise ValueError("schurQ_scale expects a SchurP expansion")
    out: dict[Partition, int] = {}
    for lam, c in expansion.coeffs:
        num = c * 2**kappa
        den = 2 ** len(lam)
        if num % den:
            raise FalsificationError(
                f"coefficient {c} of {lam} not divisible after scaling by 2^{kappa}"
            )
        out[lam] = num // den
    return SymFunExpansion.from_dict("SchurQ", out)


# -- quasisymmetric pieces ----------------------------------------------------------


def fundamental_qsym(n: int, strict_rises: frozenset[int] | set[int], width: int) -> IntPolynomial:
    """Truncation of the degree-n fundamental quasisymmetric function whose
    index set forces i_j < i_{j+1} exactly at positions in strict_rises."""
    if n == 0:
        return IntPolynomial.one()
    strict_at = set(strict_rises)
    counts: dict[tuple, int] = {}
    exp = [0] * width

    def rec(pos: int, var: int):
        if pos == n:
            key = tuple(exp)
            counts[key] = counts.get(key, 0) + 1
            return
        start = var + 1 if pos in strict_at else var
        for v in range(max(start, 1), width + 1):
            exp[v - 1] += 1
            rec(pos + 1, v)
            exp[v - 1] -= 1

    rec(0, 1)
    return IntPolynomial(counts)


def word_quasisym_sum(words, width: int) -> TruncatedSymFun:
    """Sum of f_a over the given equal-length words, grouped by rise sets."""
    words = list(words)
    if not words:
        return TruncatedSymFun(IntPolynomial(), width, -1)
    n = len(words[0])
    groups: dict[frozenset, int] = {}
    for a in words:
        if len(a) != n:
            raise ValueError("words must have equal length")
        rises = frozenset(k + 1 for k in range(n - 1) if a[k] < a[k + 1])
        groups[rises] = groups.get(rises, 0) + 1
    total = IntPolynomial()
    for rises, mult in groups.items():
        total = total + fundamental_qsym(n, rises, width) * mult
    return TruncatedSymFun(total, width, n)


# -- diagram equivalence -------------------------------------------------------------


def shapes_equivalent(d1: set[tuple[int, int]], d2: set[tuple[int, int]]) -> bool:
    """Whether two finite cell sets differ only by permuting rows and columns."""
    if len(d1) != len(d2):
        return False
    rows1 = sorted({i for i, _ in d1})
    rows2 = sorted({i for i, _ in d2})
    if len(rows1) != len(rows2):
        return False
    if sorted(sum(1 for i, _ in d1 if i == r) for r in rows1) != sorted(
        sum(1 for i, _ in d2 if i == r) for r in rows2
    ):
        return False
    cols1 = sorted({j for _, j in d1})
    cols2 = sorted({j for _, j in d2})
    if len(cols1) != len(cols2):
        return False

    row_cells2 = {r: frozenset(j for i, j in d2 if i == r) for r in rows2}
    row_cells1 = {r: frozenset(j for i, j in d1 if i == r) for r in rows1}

    def match(rmap: dict[int, int], cmap: dict[int, int], rest: list[int]) -> bool:
        if not rest:
            return True
        r1 = rest[0]
        for r2 in rows2:
            if r2 in rmap.values():
                continue
            if len(row_cells1[r1]) != len(row_cells2[r2]):
                continue
            new_cmap = dict(cmap)
            ok = True
            free_targets = set(row_cells2[r2]) - set(new_cmap.values())
            unmapped = []
            for c1 in row_cells1[r1]:
                if c1 in new_cmap:
                    if new_cmap[c1] not in row_cells2[r2]:
                        ok = False
                        break
                else:
                    unmapped.append(c1)
            if not ok or len(unmapped) != len(free_targets):
                continue
            for assign in itertools.permutations(sorted(free_targets)):
                trial = dict(new_cmap)
                trial.update(zip(sorted(unmapped), assign))
                if match({**rmap, r1: r2}, trial, rest[1:]):
                    return True
        return False

    return match({}, {}, rows1)
