"""Covering transformations on involutions and both transition trees.

tau performs the local Bruhat-covering surgery determined by the four
points {i, j, y(i), y(j)}; eta inverts it at the maximal visible inversion.
Iterating the resulting branching rule produces the involution transition
tree, whose leaves carry the Schur-P expansion of the involution Stanley
symmetric function.  The classical tree plays the same role for Schur
functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from invschub.involutions import (
    FalsificationError,
    check_involution,
    igrassmannian_shape,
    inv_length,
    is_i_grassmannian,
    kappa,
    visible_inversions,
)
from invschub.permutations import Permutation, length, right_descents
from invschub.polynomials import IntPolynomial, x
from invschub.symfunc import SymFunExpansion, dominance_leq, schurQ_scale


# -- tau and eta ---------------------------------------------------------------

# Local moves on the standardized restriction to A = {i, j, y(i), y(j)}.
# Keys: (cycle pattern of [y]_A, standardized (i, j)); values: new pattern.
_TAU_TABLE: dict[tuple[tuple[tuple[int, int], ...], tuple[int, int]], tuple] = {}


def _fill_tau_table():
    t = _TAU_TABLE
    # two fixed points acquire an arc
    t[((), (1, 2))] = ((1, 2),)
    # arc (1,2), third point free: (i,j) = (2,3) or (1,3) -> arc (1,3)
    t[(((1, 2),), (2, 3))] = ((1, 3),)
    t[(((1, 2),), (1, 3))] = ((1, 3),)
    # arc (2,3), first point free: (i,j) = (1,2) or (1,3) -> arc (1,3)
    t[(((2, 3),), (1, 2))] = ((1, 3),)
    t[(((2, 3),), (1, 3))] = ((1, 3),)
    # two disjoint arcs (1,2)(3,4)
    t[(((1, 2), (3, 4)), (2, 3))] = ((1, 3), (2, 4))
    for ij in ((1, 3), (2, 4), (1, 4)):
        t[(((1, 2), (3, 4)), ij)] = ((1, 4),)
    # crossing arcs (1,3)(2,4)
    for ij in ((1, 2), (3, 4), (1, 4)):
        t[(((1, 3), (2, 4)), ij)] = ((1, 4), (2, 3))


_fill_tau_table()


def tau(i: int, j: int, y: Permutation) -> Permutation:
    """The covering transformation at (i, j); returns y when no rule applies."""
    if i >= j:
        raise ValueError("tau needs i < j")
    check_involution(y)
    a_set = sorted({i, j, y(i), y(j)})
    rank = {v: k + 1 for k, v in enumerate(a_set)}
    pattern = tuple(
        sorted((rank[p], rank[y(p)]) for p in a_set if p < y(p))
    )
    key = (pattern, (rank[i], rank[j]))
    new_pattern = _TAU_TABLE.get(key)
    if new_pattern is None:
        return y
    unrank = {k + 1: v for k, v in enumerate(a_set)}
    mapping = {p: p for p in a_set}
    for a, b in new_pattern:
        mapping[unrank[a]] = unrank[b]
        mapping[unrank[b]] = unrank[a]
    full = {p: y(p) for p in y.support if p not in a_set}
    full.update({p: q for p, q in mapping.items()})
    return Permutation.from_map(full)


def eta(z: Permutation) -> tuple[Permutation, tuple[int, int]]:
    """The unique y covered by z with z = tau_{qr}(y), for (q, r) the
    maximal visible inversion of z."""
    check_involution(z)
    if z.is_identity():
        raise ValueError("eta is undefined at the identity")
    q, r = max(visible_inversions(z))
    t = Permutation.transposition(q, r)
    if z(q) == r:
        y = z * t
    else:
        y = t * z * t
    if inv_length(y) != inv_length(z) - 1 or tau(q, r, y) != z:
        raise FalsificationError(f"eta certificate failed for {z!r}")
    if not (y(q) <= q and y(q) < z(q) <= y(r)):
        raise FalsificationError(f"eta inequalities failed for {z!r}")
    return y, (q, r)


# -- covering sets -------------------------------------------------------------


def _scan_bounds(y: Permutation, r: int) -> tuple[int, int]:
    pts = set(y.support) | {r}
    return min(pts), max(pts)


def phi_hat(sign: str, y: Permutation, r: int, margin: int = 1) -> frozenset[Permutation]:
    """The involutions one step above y reachable by tau at r.

    '+' scans tau_{rj} for j > r, '-' scans tau_{ir} for i < r; one point
    beyond the support suffices, but the margin is adjustable so tests can
    confirm that widening changes nothing.
    """
    check_involution(y)
    target = inv_length(y) + 1
    lo, hi = _scan_bounds(y, r)
    out = set()
    if sign == "+":
        candidates = range(r + 1, hi + 1 + margin)
        for j in candidates:
            z = tau(r, j, y)
            if z != y and inv_length(z) == target:
                out.add(z)
    elif sign == "-":
        candidates = range(lo - margin, r)
        for i in candidates:
            z = tau(i, r, y)
            if z != y and inv_length(z) == target:
                out.add(z)
    else:
        raise ValueError("sign must be '+' or '-'")
    return frozenset(out)


def _in_I_infinity(z: Permutation) -> bool:
    return not z.support or z.min_support() >= 1


def transition_identity_check(y: Permutation, cycle: tuple[int, int]) -> bool:
    """Exact polynomial check of the transition identity at one cycle of y:
    x_{(p,q)} * S^(y) = sum over the upper set at q minus sum over the lower
    set at p, with terms outside positive support set to zero."""
    from invschub.schubert import inv_schubert_poly

    p, q = cycle
    if y(p) != q or p > q:
        raise ValueError(f"({p},{q}) is not a cycle of {y!r}")
    xpq = x(p) if p == q else x(p) + x(q)
    lhs = xpq * inv_schubert_poly(y)
    rhs = IntPolynomial.zero()
    for z in phi_hat("+", y, q):
        if _in_I_infinity(z):
            rhs = rhs + inv_schubert_poly(z)
    for z in phi_hat("-", y, p):
        if _in_I_infinity(z):
            rhs = rhs - inv_schubert_poly(z)
    return lhs == rhs


# -- trees ---------------------------------------------------------------------


def render_one_line(w: Permutation) -> str:
    """One-line notation when the support allows it, cycles otherwise."""
    from invschub.permutations import print_cycles, print_one_line

    try:
        return print_one_line(w)
    except ValueError:
        return print_cycles(w)


def render_element(w: Permutation) -> str:
    from invschub.permutations import print_cycles

    if w.is_involution():
        return print_cycles(w)
    return render_one_line(w)


@dataclass
class LSTreeNode:
    """A vertex of a transition tree."""

    element: Permutation
    children: list["LSTreeNode"] = field(default_factory=list)
    branch_label: tuple | None = None

    def leaves(self) -> list[Permutation]:
        if not self.children:
            return [self.element]
        out = []
        for child in self.children:
            out.extend(child.leaves())
        return out

    def node_count(self) -> int:
        return 1 + sum(c.node_count() for c in self.children)

    def to_indented(self, render=None) -> str:
        render = render or render_element

        def rec(node, depth):
            lines = ["  " * depth + render(node.element)]
            for c in node.children:
                lines.extend(rec(c, depth + 1))
            return lines

        return "\n".join(rec(self, 0))

    def to_edges(self, render=None) -> list[tuple[str, str]]:
        render = render or render_element
        edges = []

        def rec(node):
            for c in node.children:
                edges.append((render(node.element), render(c.element)))
                rec(c)

        rec(self)
        return edges


def _sort_key(z: Permutation):
    return tuple(sorted((i, z(i)) for i in z.support))


def inv_tree_children(z: Permutation) -> list[Permutation]:
    """The branching set: empty at I-Grassmannian vertices, otherwise the
    lower covering set of eta(z) at p = eta(z)(q)."""
    flag, _ = is_i_grassmannian(z)
    if flag:
        return []
    y, (q, r) = eta(z)
    p = y(q)
    kids = phi_hat("-", y, p)
    if not kids:
        raise FalsificationError(f"empty branching set at {z!r}")
    return sorted(kids, key=_sort_key)


def inv_ls_tree(z: Permutation, max_nodes: int = 1_000_000) -> LSTreeNode:
    """The involution transition tree rooted at z.

    Termination certificate: along every edge the maximal visible inversion
    strictly decreases lexicographically.
    """
    check_involution(z)
    budget = [max_nodes]

    def build(v: Permutation, parent_maxvis) -> LSTreeNode:
        budget[0] -= 1
        if budget[0] < 0:
            raise RuntimeError("transition tree exceeded the node budget")
        vis = max(visible_inversions(v)) if not v.is_identity() else None
        if parent_maxvis is not None and vis is not None and not vis < parent_maxvis:
            raise FalsificationError(
                f"maximal visible inversion failed to decrease at {v!r}"
            )
        node = LSTreeNode(v, branch_label=vis)
        for child in inv_tree_children(v):
            node.children.append(build(child, vis))
        return node

    root = build(z, None)
    if not all(inv_length(v) == inv_length(z) for v in root.leaves()):
        raise FalsificationError("tree leaves changed rank")
    return root


def expand_Fhat(z: Permutation, basis: str = "P") -> SymFunExpansion:
    """Schur P (or Q) expansion of the involution Stanley symmetric function
    via the transition tree's leaf shapes."""
    tree = inv_ls_tree(z)
    data: dict[tuple, int] = {}
    for leaf in tree.leaves():
        mu = igrassmannian_shape(leaf)
        data[mu] = data.get(mu, 0) + 1
    res = SymFunExpansion.from_dict("SchurP", data)
    if basis == "P":
        return res
    if basis == "Q":
        return schurQ_scale(res, kappa(z))
    raise ValueError(f"unknown basis {basis!r}")


def expand_Ghat_leafwise(z: Permutation) -> SymFunExpansion:
    """Independent Schur-Q route: weight each leaf by 2^(kappa(z)-kappa(leaf))."""
    tree = inv_ls_tree(z)
    kz = kappa(z)
    data: dict[tuple, int] = {}
    for leaf in tree.leaves():
        mu = igrassmannian_shape(leaf)
        kv = kappa(leaf)
        if kv > kz:
            raise FalsificationError("leaf gained cycles along the tree")
        data[mu] = data.get(mu, 0) + 2 ** (kz - kv)
    return SymFunExpansion.from_dict("SchurQ", data)


# -- classical tree -------------------------------------------------------------


def phi_classical(sign: str, w: Permutation, r: int, margin: int = 1) -> frozenset[Permutation]:
    """Permutations one step above w of the form w(i, r) or w(r, j)."""
    target = length(w) + 1
    lo, hi = _scan_bounds(w, r)
    out = set()
    if sign == "+":
        rng = range(r + 1, hi + 1 + margin)
        pairs = ((r, j) for j in rng)
    elif sign == "-":
        rng = range(lo - margin, r)
        pairs = ((i, r) for i in rng)
    else:
        raise ValueError("sign must be '+' or '-'")
    for a, b in pairs:
        z = w * Permutation.transposition(a, b)
        if length(z) == target:
            out.add(z)
    return frozenset(out)


def classical_transition_check(y: Permutation, r: int) -> bool:
    """Monk-style identity x_r * S(y) = sum(+) - sum(-) with out-of-range
    terms set to zero."""
    from invschub.schubert import schubert_poly

    lhs = x(r) * schubert_poly(y)
    rhs = IntPolynomial.zero()
    for z in phi_classical("+", y, r):
        if _in_I_infinity(z):
            rhs = rhs + schubert_poly(z)
    for z in phi_classical("-", y, r):
        if _in_I_infinity(z):
            rhs = rhs - schubert_poly(z)
    return lhs == rhs


def is_grassmannian(w: Permutation) -> bool:
    return len(right_descents(w)) <= 1


def grassmannian_shape(w: Permutation) -> tuple[int, ...]:
    """The shape (w(d)-d, w(d-1)-(d-1), ...) below the unique descent d.

    Shift-invariant, so it applies to Grassmannian elements anywhere in Z.
    The entries weakly decrease, and the first non-positive one ends the
    partition.
    """
    des = right_descents(w)
    if len(des) > 1:
        raise ValueError(f"{w!r} is not Grassmannian")
    if not des:
        return ()
    d = des.pop()
    lam = []
    k = d
    while w(k) - k > 0:
        lam.append(w(k) - k)
        k -= 1
    return tuple(lam)


def classical_tree_children(w: Permutation) -> list[Permutation]:
    from invschub.permutations import inversions

    if is_grassmannian(w):
        return []
    r, s = max(inversions(w))
    v = w * Permutation.transposition(r, s)
    if length(v) != length(w) - 1:
        raise FalsificationError(f"maximal inversion did not cover at {w!r}")
    kids = phi_classical("-", v, r)
    return sorted(kids, key=_sort_key)


def classical_ls_tree(w: Permutation, max_nodes: int = 1_000_000) -> LSTreeNode:
    budget = [max_nodes]

    def build(v: Permutation) -> LSTreeNode:
        budget[0] -= 1
        if budget[0] < 0:
            raise RuntimeError("transition tree exceeded the node budget")
        node = LSTreeNode(v)
        for child in classical_tree_children(v):
            node.children.append(build(child))
        return node

    root = build(w)
    if not all(length(v) == length(w) for v in root.leaves()):
        raise FalsificationError("classical tree leaves changed length")
    return root


def expand_F(w: Permutation) -> SymFunExpansion:
    """Schur expansion of the Stanley symmetric function via tree leaves."""
    tree = classical_ls_tree(w)
    data: dict[tuple, int] = {}
    for leaf in tree.leaves():
        lam = grassmannian_shape(leaf)
        data[lam] = data.get(lam, 0) + 1
    return SymFunExpansion.from_dict("Schur", data)


def expand_Fhat_schur(z: Permutation) -> SymFunExpansion:
    """Schur expansion of the involution Stanley function via atom sums."""
    from invschub.involutions import atoms

    total = SymFunExpansion.from_dict("Schur", {})
    for w in atoms(z, guard=10**9):
        total = total + expand_F(w)
    return total


# -- triangularity certificate -----------------------------------------------------


@dataclass
class TriangularityReport:
    element: str
    shape: tuple[int, ...]
    leading_coefficient: int
    schurp_ok: bool
    schur_window_ok: bool
    expansion: SymFunExpansion
    schur_expansion: SymFunExpansion

    @property
    def ok(self) -> bool:
        return self.schurp_ok and self.schur_window_ok and self.leading_coefficient == 1


def triangularity_certificate(z: Permutation) -> TriangularityReport:
    """Checks that the Schur-P expansion is dominance-triangular with monic
    leading shape mu(z), and that the Schur support lies between mu(z)
    transpose and mu(z)."""
    from invschub.involutions import shape_mu
    from invschub.permutations import print_cycles
    from invschub.symfunc import transpose

    mu = shape_mu(z)
    exp = expand_Fhat(z)
    coeffs = exp.as_dict()
    leading = coeffs.get(mu, 0)
    p_ok = all(lam == mu or dominance_leq(lam, mu) for lam in coeffs)
    schur = expand_Fhat_schur(z)
    mut = transpose(mu)
    s_ok = all(
        dominance_leq(mut, lam) and dominance_leq(lam, mu)
        for lam in schur.as_dict()
    )
    return TriangularityReport(
        element=print_cycles(z),
        shape=mu,
        leading_coefficient=leading,
        schurp_ok=p_ok,
        schur_window_ok=s_ok,
        expansion=exp,
        schur_expansion=schur,
    )
