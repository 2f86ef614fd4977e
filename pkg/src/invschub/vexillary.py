"""Pattern containment for involutions and the P-/Q-vexillary classifiers.

An involution pattern occurs in z when some z-invariant point set
standardizes to it.  Invariant sets are unions of z-orbits, and fixed
points far below or above the support are interchangeable, so the search
enumerates orbit subsets plus a bounded pool of outer fixed points.
"""

from __future__ import annotations

import itertools

from invschub.involutions import check_involution, kappa
from invschub.permutations import Permutation, standardize


def _pattern_constants(specs: list[list[tuple[int, int]]]) -> tuple[Permutation, ...]:
    return tuple(Permutation.from_cycles(c) for c in specs)


# Involutions whose presence as an invariant-set pattern destroys the
# single-Schur-P property.
ELEVEN_P = _pattern_constants(
    [
        [(1, 2), (3, 5)],
        [(1, 3), (4, 5)],
        [(1, 4), (3, 6)],
        [(1, 4), (2, 3), (5, 6)],
        [(1, 2), (3, 6), (4, 5)],
        [(1, 2), (3, 4), (5, 6)],
        [(1, 5), (2, 4), (3, 7)],
        [(1, 5), (3, 7), (4, 6)],
        [(1, 6), (2, 5), (3, 8), (4, 7)],
        [(1, 6), (2, 4), (3, 8), (5, 7)],
        [(1, 3), (2, 5), (4, 7), (6, 8)],
    ]
)

# Sizes of the pattern windows above, for the search bound.
_PATTERN_SIZES_P = (5, 5, 6, 6, 6, 6, 7, 7, 8, 8, 8)

# The corresponding list for the single-Schur-Q property.
FIVE_Q = _pattern_constants(
    [
        [(1, 2), (3, 4)],
        [(1, 4), (3, 6)],
        [(1, 5), (3, 7), (4, 6)],
        [(1, 5), (2, 4), (3, 7)],
        [(1, 6), (2, 5), (3, 8), (4, 7)],
    ]
)

# The two patterns that remain relevant for 321-avoiding involutions.
TWO_321 = _pattern_constants(
    [
        [(1, 2), (3, 4), (5, 6)],
        [(1, 3), (2, 5), (4, 7), (6, 8)],
    ]
)


def _pattern_window(p: Permutation) -> int:
    """The m with p in I_m: support plus interior fixed points."""
    return p.max_support(default=0)


def contains_inv_pattern(z: Permutation, p: Permutation, witness: bool = False):
    """Whether some z-invariant E standardizes to p; optionally return E."""
    check_involution(z)
    check_involution(p)
    m = _pattern_window(p)
    if m == 0:
        return (True, ()) if witness else True
    p_cycles = kappa(p)
    p_fixed = m - 2 * p_cycles
    zc = [(a, z(a)) for a in z.support if a < z(a)]
    if p_cycles > len(zc):
        return (False, None) if witness else False
    lo = z.min_support(default=1)
    hi = z.max_support(default=0)
    inner_fixed = [a for a in range(lo, hi + 1) if z(a) == a]
    outer = [lo - k for k in range(1, p_fixed + 1)] + [
        hi + k for k in range(1, p_fixed + 1)
    ]
    fixed_pool = sorted(inner_fixed + outer)
    for chosen in itertools.combinations(zc, p_cycles):
        base = [a for ab in chosen for a in ab]
        for extra in itertools.combinations(fixed_pool, p_fixed):
            pts = base + list(extra)
            if standardize(z, pts) == p:
                return (True, tuple(sorted(pts))) if witness else True
    return (False, None) if witness else False


def _avoids_all(z: Permutation, patterns) -> bool:
    return not any(contains_inv_pattern(z, p) for p in patterns)


def contains_2143(z: Permutation) -> bool:
    """Ordinary 2143 pattern containment (vexillarity test)."""
    lo = z.min_support(default=1)
    hi = z.max_support(default=0)
    vals = [z(k) for k in range(lo, hi + 1)]
    n = len(vals)
    for b in range(n):
        for a in range(b):
            if vals[a] <= vals[b]:
                continue
            for d in range(b + 1, n):
                for c in range(b + 1, d):
                    if vals[a] < vals[d] < vals[c]:
                        return True
    return False


def is_p_vexillary(z: Permutation, method: str = "patterns") -> bool:
    """Whether the involution Stanley symmetric function of z is a single
    Schur P-function."""
    check_involution(z)
    if method == "patterns":
        return _avoids_all(z, ELEVEN_P)
    if method == "direct":
        from invschub.transition import expand_Fhat

        exp = expand_Fhat(z).as_dict()
        return len(exp) == 1 and next(iter(exp.values())) == 1
    raise ValueError(f"unknown method {method!r}")


def is_q_vexillary(z: Permutation, method: str = "patterns") -> bool:
    """Whether 2^kappa times the involution Stanley symmetric function of z
    is a single Schur Q-function; equivalently z is 2143-avoiding."""
    check_involution(z)
    if method == "patterns":
        return _avoids_all(z, FIVE_Q)
    if method == "vexillary":
        return not contains_2143(z)
    if method == "direct":
        from invschub.transition import expand_Fhat

        exp = expand_Fhat(z).as_dict()
        if len(exp) != 1:
            return False
        lam, c = next(iter(exp.items()))
        return c == 1 and len(lam) == kappa(z)
    raise ValueError(f"unknown method {method!r}")
