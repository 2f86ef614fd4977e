"""Schubert polynomials, involution Schubert polynomials, stable limits.

Schubert polynomials are generated by descending divided differences from
the staircase monomial; the involution family descends from a dominant
ancestor via the analogous recursion, with the atom sum kept as a second,
independent construction.  Stable limits are delivered as truncations to a
requested number of variables.
"""

from __future__ import annotations

from invschub.involutions import (
    atoms,
    check_involution,
    inv_diagram,
    is_dominant,
)
from invschub.permutations import Permutation, length, reverse_permutation, shift
from invschub.polynomials import IntPolynomial, prod, staircase_monomial, x
from invschub.symfunc import Partition, TruncatedSymFun, check_strict

_schubert_cache: dict[Permutation, IntPolynomial] = {}
_inv_schubert_cache: dict[Permutation, IntPolynomial] = {}


class NotDominantError(ValueError):
    pass


def window(w: Permutation) -> int:
    """Smallest n with support(w) inside [n]."""
    if w.support and w.min_support() < 1:
        raise ValueError("Schubert polynomials need support in the positive integers")
    return w.max_support(default=0)


def schubert_poly(w: Permutation) -> IntPolynomial:
    """The Schubert polynomial of w, cached across calls."""
    got = _schubert_cache.get(w)
    if got is not None:
        return got
    n = window(w)
    if n == 0:
        res = IntPolynomial.one()
    elif w == reverse_permutation(n):
        res = staircase_monomial(n)
    else:
        i = next(i for i in range(1, n) if w(i) < w(i + 1))
        res = schubert_poly(w * Permutation.s(i)).divided_difference(i)
    _schubert_cache[w] = res
    return res


def dominant_inv_schubert(y: Permutation) -> IntPolynomial:
    """Product formula over the involution diagram; requires 132-avoidance."""
    if not is_dominant(y):
        raise NotDominantError(f"{y!r} is not dominant (contains a 132 pattern)")
    return prod(
        x(i) if i == j else x(i) + x(j) for i, j in sorted(inv_diagram(y))
    )


def inv_schubert_poly(y: Permutation, method: str = "recursion") -> IntPolynomial:
    """The involution Schubert polynomial of y.

    method 'recursion' climbs to a dominant ancestor and peels divided
    differences; 'atom-sum' adds the Schubert polynomials of the atoms.
    """
    check_involution(y)
    if method == "atom-sum":
        total = IntPolynomial.zero()
        for w in atoms(y, guard=10**9):
            total = total + schubert_poly(w)
        return total
    if method != "recursion":
        raise ValueError(f"unknown method {method!r}")
    got = _inv_schubert_cache.get(y)
    if got is not None:
        return got
    if is_dominant(y):
        res = dominant_inv_schubert(y)
    else:
        n = window(y)
        i = next(i for i in range(1, n) if y(i) < y(i + 1))
        s = Permutation.s(i)
        sy, ys = s * y, y * s
        above = ys if sy == ys else s * y * s
        res = inv_schubert_poly(above).divided_difference(i)
    _inv_schubert_cache[y] = res
    return res


def _stable_width(w: Permutation, n: int) -> int:
    return max(n, window(w), 1)


def stanley_truncation(w: Permutation, n: int, check: bool = False) -> TruncatedSymFun:
    """First n variables of the Stanley symmetric function of w."""
    m = _stable_width(w, n)
    res = schubert_poly(w).op_word("pi", reverse_permutation(m)).truncate(n)
    if check:
        alt = schubert_poly(shift(w, m)).truncate(n)
        if res != alt:
            raise AssertionError(f"stable routes disagree for {w!r} at width {n}")
    return TruncatedSymFun(res, n, length(w))


def inv_stanley_truncation(y: Permutation, n: int, check: bool = False) -> TruncatedSymFun:
    """First n variables of the involution Stanley symmetric function of y.

    Involutions of Z are shifted into positive support first; the limit is
    shift-invariant.
    """
    from invschub.involutions import inv_length

    check_involution(y)
    if y.support and y.min_support() < 1:
        y = shift(y, 1 - y.min_support())
    m = _stable_width(y, n)
    res = inv_schubert_poly(y).op_word("pi", reverse_permutation(m)).truncate(n)
    if check:
        alt = inv_schubert_poly(shift(y, m)).truncate(n)
        if res != alt:
            raise AssertionError(f"stable routes disagree for {y!r} at width {n}")
    return TruncatedSymFun(res, n, inv_length(y))


def schurP_truncation(lam: Partition, n: int) -> TruncatedSymFun:
    """First n variables of a Schur P-function (tableau route, cached)."""
    from invschub.symfunc import _schurP_cached

    return _schurP_cached(check_strict(lam), n)


def stable_truncation(kind: str, arg, n: int, check: bool = False) -> TruncatedSymFun:
    """Uniform front door: kind is 'F' (Stanley), 'Fhat' (involution
    Stanley) or 'P' (Schur P)."""
    if kind == "F":
        return stanley_truncation(arg, n, check=check)
    if kind == "Fhat":
        return inv_stanley_truncation(arg, n, check=check)
    if kind == "P":
        return schurP_truncation(arg, n)
    raise ValueError(f"unknown stable kind {kind!r}")


def clear_caches() -> None:
    _schubert_cache.clear()
    _inv_schubert_cache.clear()
