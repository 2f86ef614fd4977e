"""Pfaffians over the integer polynomial ring and the matrix identities for
one- and two-cycle involution Schubert polynomials.

The definitional signed sum over fixed-point-free involutions is kept as
the oracle for small sizes; larger matrices use subset dynamic programming
over a first-row expansion, and the two must agree on the overlap.
"""

from __future__ import annotations

from dataclasses import dataclass

from invschub.involutions import inv_length, involutions
from invschub.permutations import Permutation
from invschub.polynomials import IntPolynomial
from invschub.symfunc import Partition, check_strict

Entry = IntPolynomial | int


def _as_poly(v: Entry) -> IntPolynomial:
    return IntPolynomial.constant(v) if isinstance(v, int) else v


@dataclass(frozen=True)
class SkewSymMatrix:
    """n x n skew-symmetric matrix given by its strictly upper entries."""

    n: int
    upper: tuple[tuple[tuple[int, int], IntPolynomial], ...]

    @staticmethod
    def from_entries(n: int, entries: dict[tuple[int, int], Entry]) -> SkewSymMatrix:
        up = {}
        for (i, j), v in entries.items():
            if not (1 <= i < j <= n):
                raise ValueError(f"entry ({i},{j}) is not strictly upper")
            up[(i, j)] = _as_poly(v)
        return SkewSymMatrix(n, tuple(sorted(up.items())))

    def entry(self, i: int, j: int) -> IntPolynomial:
        if i == j:
            return IntPolynomial.zero()
        table = dict(self.upper)
        if i < j:
            return table.get((i, j), IntPolynomial.zero())
        return -table.get((j, i), IntPolynomial.zero())


def fixed_point_free_involutions(n: int):
    """All perfect matchings of [n] as involutions; empty for n odd."""
    if n % 2:
        return
    for z in involutions(n):
        if all(z(i) != i for i in range(1, n + 1)):
            yield z


def pfaffian_definitional(a: SkewSymMatrix) -> IntPolynomial:
    """Signed sum over fixed-point-free involutions."""
    n = a.n
    if n == 0:
        return IntPolynomial.one()
    if n % 2:
        return IntPolynomial.zero()
    total = IntPolynomial.zero()
    for z in fixed_point_free_involutions(n):
        sign = -1 if (inv_length(z) + n // 2) % 2 else 1
        term = IntPolynomial.constant(sign)
        for i in range(1, n + 1):
            if z(i) < i:
                term = term * a.entry(z(i), i)
        total = total + term
    return total


def pfaffian_recursive(a: SkewSymMatrix) -> IntPolynomial:
    """First-row expansion with memoization over index subsets."""
    n = a.n
    if n % 2:
        return IntPolynomial.zero()
    memo: dict[tuple[int, ...], IntPolynomial] = {(): IntPolynomial.one()}

    def rec(idx: tuple[int, ...]) -> IntPolynomial:
        got = memo.get(idx)
        if got is not None:
            return got
        first = idx[0]
        total = IntPolynomial.zero()
        for pos in range(1, len(idx)):
            rest = idx[1:pos] + idx[pos + 1:]
            coeff = a.entry(first, idx[pos])
            if coeff:
                term = coeff * rec(rest)
                total = total + term if pos % 2 else total - term
        memo[idx] = total
        return total

    return rec(tuple(range(1, n + 1)))


def pfaffian(a: SkewSymMatrix) -> IntPolynomial:
    """pf(A); definitional sum up to 8 rows, recursion beyond."""
    if a.n <= 8:
        return pfaffian_definitional(a)
    return pfaffian_recursive(a)


def determinant(a: SkewSymMatrix) -> IntPolynomial:
    """Exact determinant by cofactor expansion (test oracle sizes only)."""

    def rec(rows: tuple[int, ...], cols: tuple[int, ...]) -> IntPolynomial:
        if not rows:
            return IntPolynomial.one()
        r = rows[0]
        total = IntPolynomial.zero()
        for k, c in enumerate(cols):
            piece = a.entry(r, c)
            if piece:
                term = piece * rec(rows[1:], cols[:k] + cols[k + 1:])
                total = total + term if k % 2 == 0 else total - term
        return total

    idx = tuple(range(1, a.n + 1))
    return rec(idx, idx)


# -- involution Schubert matrices --------------------------------------------------


def ell_plus(phi: tuple[int, ...]) -> int:
    """Pad an odd-length index sequence to even length."""
    r = len(phi)
    return r + 1 if r % 2 else r


def _check_phi(phi: tuple[int, ...], n: int) -> tuple[int, ...]:
    phi = tuple(phi)
    if not phi or any(
        phi[i] >= phi[i + 1] for i in range(len(phi) - 1)
    ) or phi[0] < 1 or phi[-1] > n:
        raise ValueError(f"need 0 < phi_1 < ... < phi_r <= {n}, got {phi}")
    return phi


def igrass_involution(phi: tuple[int, ...], n: int) -> Permutation:
    """(phi_1, n+1)(phi_2, n+2)...(phi_r, n+r)."""
    phi = _check_phi(phi, n)
    return Permutation.from_cycles(
        [(p, n + 1 + k) for k, p in enumerate(phi)]
    )


def grass_entry(a: int, b: int, n: int) -> IntPolynomial:
    """The involution Schubert polynomial of (a, n+1)(b, n+2), with b = 0
    meaning the single cycle (a, n+1)."""
    from invschub.schubert import inv_schubert_poly

    if b == 0:
        return inv_schubert_poly(Permutation.from_cycles([(a, n + 1)]))
    return inv_schubert_poly(igrass_involution((a, b), n))


def pfaffian_schubert_matrix(phi: tuple[int, ...], n: int) -> SkewSymMatrix:
    """The skew-symmetric matrix of one- and two-cycle entries whose
    Pfaffian reproduces the full I-Grassmannian polynomial."""
    phi = _check_phi(phi, n)
    m = ell_plus(phi)
    padded = phi + (0,) * (m - len(phi))
    entries: dict[tuple[int, int], Entry] = {}
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            entries[(i, j)] = grass_entry(padded[i - 1], padded[j - 1], n)
    return SkewSymMatrix.from_entries(m, entries)


def verify_pfaffian_theorem(phi: tuple[int, ...], n: int) -> bool:
    """pf of the two-cycle matrix equals the full polynomial."""
    from invschub.schubert import inv_schubert_poly

    phi = _check_phi(phi, n)
    lhs = inv_schubert_poly(igrass_involution(phi, n))
    rhs = pfaffian(pfaffian_schubert_matrix(phi, n))
    return lhs == rhs


def schurP_pfaffian_check(lam: Partition, width: int) -> bool:
    """The classical two-row Pfaffian identity for Schur P truncations."""
    from invschub.schubert import schurP_truncation

    lam = check_strict(lam)
    if not lam:
        return True
    m = ell_plus(lam)
    padded = lam + (0,) * (m - len(lam))

    def part_trunc(parts: tuple[int, ...]) -> IntPolynomial:
        parts = tuple(p for p in parts if p)
        return schurP_truncation(parts, width).poly

    entries: dict[tuple[int, int], Entry] = {}
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            entries[(i, j)] = part_trunc((padded[i - 1], padded[j - 1]))
    rhs = pfaffian(SkewSymMatrix.from_entries(m, entries))
    return rhs == part_trunc(lam)


def generic_skew_matrix(n: int, var_index) -> SkewSymMatrix:
    """Matrix of distinct variables x_{var_index(i, j)}; a test helper."""
    entries = {
        (i, j): IntPolynomial.variable(var_index(i, j))
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    }
    return SkewSymMatrix.from_entries(n, entries)
