"""Shifted Hecke insertion and its restriction to involution words.

Tableaux are kept as lists of rows; row i (1-indexed) occupies matrix
columns i .. i+len(row)-1.  Marked entries are negative integers and print
with a trailing apostrophe.  The bumping/insertion/recording algorithms
follow the published pseudocode step for step; comments cite the step
labels so the control flow can be audited against it.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from invschub.involutions import check_involution, inv_length
from invschub.permutations import Permutation, demazure_product
from invschub.symfunc import Partition, check_strict, is_strict


class NotAnInvolutionWord(ValueError):
    pass


# -- shifted tableaux ---------------------------------------------------------


@dataclass(frozen=True)
class ShiftedTableau:
    """Rows of nonzero integers; negative means marked."""

    rows: tuple[tuple[int, ...], ...] = ()

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def cells(self) -> dict[tuple[int, int], int]:
        return {
            (i + 1, i + 1 + j): v
            for i, row in enumerate(self.rows)
            for j, v in enumerate(row)
        }

    def entry(self, i: int, j: int) -> int | None:
        if 1 <= i <= len(self.rows):
            row = self.rows[i - 1]
            if i <= j <= i + len(row) - 1:
                return row[j - i]
        return None

    def column(self, j: int) -> list[tuple[int, int]]:
        """(row, value) pairs of matrix column j, top to bottom."""
        out = []
        for i in range(1, min(j, len(self.rows)) + 1):
            v = self.entry(i, j)
            if v is not None:
                out.append((i, v))
        return out

    def is_increasing(self) -> bool:
        """Positive entries, strictly increasing along rows and columns."""
        cells = self.cells()
        if not is_strict(tuple(p for p in self.shape if p)) or (
            self.shape and 0 in self.shape
        ):
            return False
        for (i, j), v in cells.items():
            if v <= 0:
                return False
            if (i, j + 1) in cells and not v < cells[(i, j + 1)]:
                return False
            if (i + 1, j) in cells and not v < cells[(i + 1, j)]:
                return False
        return True

    def reading_word(self) -> tuple[int, ...]:
        """Rows bottom to top, each left to right."""
        out = []
        for row in reversed(self.rows):
            out.extend(row)
        return tuple(out)

    def render(self) -> str:
        if not self.rows:
            return "(empty)"
        width = max(
            len(entry_str(v)) for row in self.rows for v in row
        ) + 1
        lines = []
        for i, row in enumerate(self.rows):
            pad = " " * (width * i)
            lines.append(pad + "".join(entry_str(v).ljust(width) for v in row))
        return "\n".join(line.rstrip() for line in lines)


def entry_str(v: int) -> str:
    return f"{-v}'" if v < 0 else str(v)


@dataclass(frozen=True)
class SetValuedShiftedTableau:
    """Rows of nonempty entry sets, canonically sorted in the marked order."""

    rows: tuple[tuple[tuple[int, ...], ...], ...] = ()

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def cells(self) -> dict[tuple[int, int], tuple[int, ...]]:
        return {
            (i + 1, i + 1 + j): v
            for i, row in enumerate(self.rows)
            for j, v in enumerate(row)
        }

    def all_values(self) -> list[int]:
        return [v for row in self.rows for cell in row for v in cell]

    def is_standard(self, n: int) -> bool:
        """Every selection semistandard, absolute values biject onto [n]."""
        vals = self.all_values()
        if sorted(abs(v) for v in vals) != list(range(1, n + 1)):
            return False
        cells = self.cells()
        for (i, j), cell in cells.items():
            if i == j and any(v < 0 for v in cell):
                return False
            right = cells.get((i, j + 1))
            if right is not None and not _prec_lt_sets(cell, right, same_row=True):
                return False
            below = cells.get((i + 1, j))
            if below is not None and not _prec_lt_sets(cell, below, same_row=False):
                return False
        return True

    def singletons(self) -> ShiftedTableau | None:
        if any(len(cell) != 1 for row in self.rows for cell in row):
            return None
        return ShiftedTableau(tuple(tuple(c[0] for c in row) for row in self.rows))

    def render(self) -> str:
        if not self.rows:
            return "(empty)"

        def cell_str(cell):
            return "".join(entry_str(v) for v in cell)

        width = max(len(cell_str(c)) for row in self.rows for c in row) + 1
        lines = []
        for i, row in enumerate(self.rows):
            pad = " " * (width * i)
            lines.append(pad + "".join(cell_str(c).ljust(width) for c in row))
        return "\n".join(line.rstrip() for line in lines)


def _prec_rank(v: int) -> int:
    # the marked order -1 < 1 < -2 < 2 < ...
    return 2 * v - 1 if v > 0 else -2 * v - 2


def _prec_lt_sets(a, b, same_row: bool) -> bool:
    """max(a) <= min(b) in the marked order, with the allowed equalities:
    repeated positives along a row, repeated negatives down a column."""
    hi = max(a, key=_prec_rank)
    lo = min(b, key=_prec_rank)
    if _prec_rank(hi) < _prec_rank(lo):
        return True
    if hi != lo:
        return False
    if hi > 0:
        return same_row
    return not same_row


def _sort_marked(values) -> tuple[int, ...]:
    return tuple(sorted(values, key=_prec_rank))


# -- bumping and insertion -----------------------------------------------------


def bump(p: int, direction: int, seq: tuple[int, ...]):
    """One bumping step into the increasing sequence ``seq``.

    Returns (q, direction, seq', used_equal_stop) where q = 0 means nothing
    was bumped out.  ``used_equal_stop`` reports whether the equal-to-last
    shortcut fired; insertion of a reduced involution word never needs it.
    """
    if not seq or p > seq[-1]:  # B1
        return 0, direction, seq + (p,), False
    if p == seq[-1]:  # B2
        return 0, direction, seq, True
    # B3: p < last entry
    i = next(k for k, m in enumerate(seq) if p <= m)  # B4 (0-based)
    if i == 0:
        direction = 1  # B5
    if p == seq[i]:  # B6
        return seq[i + 1], direction, seq, False
    return seq[i], direction, seq[:i] + (p,) + seq[i + 1:], False  # B7


@dataclass
class InsertionOutcome:
    index: int
    direction: int
    tableau: ShiftedTableau
    rejected: bool = False
    equal_stop: bool = False


def insert(p: int, tab: ShiftedTableau) -> InsertionOutcome:
    """Insert p, bumping along rows until the direction flips, then along
    columns; a bump whose result is not increasing leaves the tableau as
    it was (step I10)."""
    rows = [list(r) for r in tab.rows]
    direction = 0
    j = 0
    rejected = False
    equal_stop = False
    while p > 0:
        j += 1
        if direction == 0:
            row = tuple(rows[j - 1]) if j <= len(rows) else ()
            p, direction, new_row, eq = bump(p, direction, row)
            candidate = [list(r) for r in rows]
            while len(candidate) < j:
                candidate.append([])
            candidate[j - 1] = list(new_row)
        else:
            col = ShiftedTableau(tuple(tuple(r) for r in rows)).column(j)
            col_vals = tuple(v for _, v in col)
            p, direction, new_col, eq = bump(p, direction, col_vals)
            candidate = [list(r) for r in rows]
            if len(new_col) == len(col_vals):
                for (i, _), v in zip(col, new_col):
                    candidate[i - 1][j - i] = v
            else:
                for (i, _), v in zip(col, new_col[:-1]):
                    candidate[i - 1][j - i] = v
                i_new = (col[-1][0] + 1) if col else 1
                while len(candidate) < i_new:
                    candidate.append([])
                if len(candidate[i_new - 1]) != j - i_new:
                    raise AssertionError("column append does not extend a row end")
                candidate[i_new - 1].append(new_col[-1])
        equal_stop = equal_stop or eq
        trial = ShiftedTableau(tuple(tuple(r) for r in candidate if r))
        if trial.is_increasing():  # I10
            rows = [list(r) for r in trial.rows]
        else:
            rejected = True
    return InsertionOutcome(
        j, direction, ShiftedTableau(tuple(tuple(r) for r in rows)), rejected, equal_stop
    )


@dataclass
class HeckeResult:
    insertion: ShiftedTableau
    recording: SetValuedShiftedTableau
    trace: list[tuple[ShiftedTableau, SetValuedShiftedTableau]] = field(
        default_factory=list
    )
    used_equal_stop: bool = False
    used_rejection: bool = False


def shifted_hecke_insert(word, keep_trace: bool = False) -> HeckeResult:
    """The full algorithm: insert the letters in order while recording i or
    -i at the matching border cell of the recording tableau."""
    p_tab = ShiftedTableau()
    q_rows: list[list[list[int]]] = []
    trace: list[tuple[ShiftedTableau, SetValuedShiftedTableau]] = []
    used_eq = False
    used_rej = False
    for step, letter in enumerate(word, start=1):
        if letter < 1:
            raise ValueError("letters must be positive integers")
        out = insert(letter, p_tab)
        p_tab = out.tableau
        used_eq = used_eq or out.equal_stop
        used_rej = used_rej or out.rejected
        shape = p_tab.shape
        j = out.index
        if out.direction == 0:
            # S4: recording entry goes to the bottom cell of the column
            # holding the end of row j.
            col = j + shape[j - 1] - 1
            row = max(
                i for i in range(1, len(shape) + 1) if i <= col and i + shape[i - 1] - 1 >= col
            )
            value = step
        else:
            # S5: the mirror rule at the end of column j.
            col_cells = p_tab.column(j)
            row = col_cells[-1][0]
            col = row + shape[row - 1] - 1
            value = -step
        while len(q_rows) < row:
            q_rows.append([])
        target_len = shape[row - 1]
        while len(q_rows[row - 1]) < target_len:
            q_rows[row - 1].append([])
        q_rows[row - 1][col - row].append(value)
        if keep_trace:
            trace.append((p_tab, _freeze_q(q_rows)))
    q_tab = _freeze_q(q_rows)
    if q_tab.shape != p_tab.shape:
        raise AssertionError("recording tableau lost the common shape")
    if not q_tab.is_standard(len(tuple(word))):
        raise AssertionError("recording tableau is not standard")
    return HeckeResult(p_tab, q_tab, trace, used_eq, used_rej)


def _freeze_q(q_rows) -> SetValuedShiftedTableau:
    return SetValuedShiftedTableau(
        tuple(tuple(_sort_marked(c) for c in row) for row in q_rows)
    )


# -- descents -------------------------------------------------------------------


def word_descents(word) -> set[int]:
    word = tuple(word)
    return {i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1]}


def tableau_descents(q: SetValuedShiftedTableau) -> set[int]:
    """Descents of a standard set-valued recording tableau (four cases)."""
    pos: dict[int, tuple[int, int]] = {}
    for (i, j), cell in q.cells().items():
        for v in cell:
            pos[v] = (i, j)
    n = max((abs(v) for v in pos), default=0)
    out = set()
    for i in range(1, n):
        a, b = i, i + 1
        if a in pos and b in pos and pos[a][0] < pos[b][0]:
            out.add(i)
        elif a in pos and -b in pos:
            out.add(i)
        elif -a in pos and -b in pos and pos[-b][0] < pos[-a][0]:
            out.add(i)
        elif -a in pos and -b in pos and pos[-b][0] == pos[-a][0] and pos[-a] != pos[-b]:
            out.add(i)
    return out


def standard_marked_descents(t: ShiftedTableau) -> set[int]:
    """Descents of a standard shifted marked tableau (three cases)."""
    pos: dict[int, tuple[int, int]] = {}
    for (i, j), v in t.cells().items():
        pos[v] = (i, j)
    n = max((abs(v) for v in pos), default=0)
    out = set()
    for i in range(1, n):
        a, b = i, i + 1
        if a in pos and b in pos and pos[a][0] < pos[b][0]:
            out.add(i)
        elif -a in pos and -b in pos and pos[-a][1] < pos[-b][1]:
            out.add(i)
        elif a in pos and -b in pos:
            out.add(i)
    return out


# -- weak K-Knuth equivalence ------------------------------------------------------


def _adjacent_rewrites(word: tuple[int, ...], allow_five: bool):
    """All single weak K-Knuth moves applicable to ``word``."""
    n = len(word)
    out = set()
    if n >= 2:
        out.add((word[1], word[0]) + word[2:])  # (1) initial swap
    for k in range(n - 2):
        head, (u, v, w), tail = word[:k], word[k : k + 3], word[k + 3:]
        a, b, c = sorted({u, v, w}) if len({u, v, w}) == 3 else (None, None, None)
        if a is not None:
            if (u, v, w) == (a, c, b):
                out.add(head + (c, a, b) + tail)  # (2)
            if (u, v, w) == (c, a, b):
                out.add(head + (a, c, b) + tail)  # (2) reversed
            if (u, v, w) == (b, a, c):
                out.add(head + (b, c, a) + tail)  # (3)
            if (u, v, w) == (b, c, a):
                out.add(head + (b, a, c) + tail)  # (3) reversed
        if u == w and u != v:
            out.add(head + (v, u, v) + tail)  # (4) aba ~ bab
    if allow_five:
        for k in range(n - 1):
            if word[k] == word[k + 1]:
                out.add(word[:k] + word[k + 1:])  # (5) contraction
        for k in range(n):
            out.add(word[:k] + (word[k],) + word[k:])  # (5) expansion
    return out


def weak_k_knuth_equivalent(a, b, budget: int | None = None) -> str:
    """Decide weak K-Knuth equivalence within a length budget.

    'equivalent' and 'not-equivalent' are definitive; the latter comes from
    the move-invariant fold of the two words.  Words with equal invariants
    are searched by BFS up to the budget, and a truncated search reports
    'budget-exhausted' instead of guessing.
    """
    a, b = tuple(a), tuple(b)
    if budget is None:
        budget = max(len(a), len(b)) + 2
    if word_involution(a) != word_involution(b):
        return "not-equivalent"
    if max(len(a), len(b)) > budget:
        return "budget-exhausted"
    seen = {a}
    queue = deque([a])
    pruned = False
    while queue:
        cur = queue.popleft()
        if cur == b:
            return "equivalent"
        for nxt in _adjacent_rewrites(cur, allow_five=True):
            if len(nxt) > budget:
                pruned = True
                continue
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return "budget-exhausted" if pruned else "not-equivalent"


def shifted_ck_classes(words) -> list[set[tuple[int, ...]]]:
    """Partition equal-length words by moves (1)-(4) only."""
    words = {tuple(w) for w in words}
    classes = []
    while words:
        start = words.pop()
        comp = {start}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for nxt in _adjacent_rewrites(cur, allow_five=False):
                if nxt in comp:
                    continue
                comp.add(nxt)
                queue.append(nxt)
        classes.append(comp)
        words -= comp
    return classes


# -- involution words ---------------------------------------------------------------


def word_involution(word) -> Permutation:
    """The involution s_{a_k} o ... o s_{a_1} o ... o s_{a_k}."""
    y = Permutation()
    for letter in word:
        s = Permutation.s(letter)
        y = demazure_product(demazure_product(s, y), s)
    return y


def is_involution_word(word) -> bool:
    return inv_length(word_involution(word)) == len(tuple(word))


def involution_ck_insert(word, keep_trace: bool = False):
    """Shifted Hecke insertion restricted to involution words; checks the
    input and the promised simplifications along the way."""
    word = tuple(word)
    if not is_involution_word(word):
        raise NotAnInvolutionWord(f"{word} is not a reduced involution word")
    res = shifted_hecke_insert(word, keep_trace=keep_trace)
    if res.used_equal_stop or res.used_rejection:
        raise AssertionError(
            "involution-word insertion used a branch reserved for general words"
        )
    q_plain = res.recording.singletons()
    if q_plain is None:
        raise AssertionError("recording tableau of an involution word is set-valued")
    if not res.insertion.is_increasing():
        raise AssertionError("insertion tableau is not increasing")
    return res.insertion, q_plain, res


def increasing_tableaux(shape: Partition, max_entry: int):
    """All increasing fillings of a shifted shape with entries <= max_entry."""
    shape = check_strict(shape)
    cells = [
        (i + 1, i + 1 + j) for i, part in enumerate(shape) for j in range(part)
    ]

    def rec(k: int, filling: dict):
        if k == len(cells):
            rows = []
            for i, part in enumerate(shape):
                rows.append(tuple(filling[(i + 1, i + 1 + j)] for j in range(part)))
            yield ShiftedTableau(tuple(rows))
            return
        i, j = cells[k]
        lo = 1
        if (i, j - 1) in filling:
            lo = max(lo, filling[(i, j - 1)] + 1)
        if (i - 1, j) in filling:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, max_entry + 1):
            filling[(i, j)] = v
            yield from rec(k + 1, filling)
            del filling[(i, j)]

    yield from rec(0, {})


def standard_set_valued_tableaux(shape: Partition, n: int):
    """All standard set-valued tableaux of the given shape and rank n.

    Brute force over value placements and signs; intended for test-scale
    enumerations only.
    """
    shape = check_strict(shape)
    cells = [
        (i + 1, i + 1 + j) for i, part in enumerate(shape) for j in range(part)
    ]
    k = len(cells)
    if n < k:
        return
    for assignment in itertools.product(range(k), repeat=n):
        if len(set(assignment)) != k:
            continue
        for signs in itertools.product((1, -1), repeat=n):
            rows: list[list[list[int]]] = [
                [[] for _ in range(part)] for part in shape
            ]
            for v in range(1, n + 1):
                i, j = cells[assignment[v - 1]]
                rows[i - 1][j - i].append(signs[v - 1] * v)
            cand = SetValuedShiftedTableau(
                tuple(tuple(_sort_marked(c) for c in row) for row in rows)
            )
            if cand.is_standard(n):
                yield cand


def beta_coefficients(y: Permutation, guard: int = 12):
    """Schur-P expansion through insertion: count increasing shifted
    tableaux of each strict shape whose reading word is an involution word
    of y."""
    from invschub.involutions import EnumerationGuardError
    from invschub.symfunc import SymFunExpansion, strict_partitions_of

    check_involution(y)
    d = inv_length(y)
    if d > guard:
        raise EnumerationGuardError(f"involution length {d} exceeds guard {guard}")
    if d == 0:
        return SymFunExpansion.from_dict("SchurP", {(): 1})
    max_entry = y.max_support() - 1
    data: dict[Partition, int] = {}
    for lam in strict_partitions_of(d):
        count = 0
        for t in increasing_tableaux(lam, max_entry):
            rho = t.reading_word()
            if len(rho) == d and word_involution(rho) == y:
                count += 1
        if count:
            data[lam] = count
    return SymFunExpansion.from_dict("SchurP", data)


def conjecture_ck_search(max_len: int, alphabet: int):
    """Compare the moves-(1)-(4) classes of involution words with the fibers
    of the insertion tableau; returns any words witnessing a mismatch."""
    bad = []
    for n in range(1, max_len + 1):
        words = [
            w
            for w in itertools.product(range(1, alphabet + 1), repeat=n)
            if is_involution_word(w)
        ]
        by_p: dict[ShiftedTableau, set] = {}
        for w in words:
            p, _, _ = involution_ck_insert(w)
            by_p.setdefault(p, set()).add(w)
        for comp in shifted_ck_classes(words):
            tabs = {p for p in by_p if by_p[p] & comp}
            if len(tabs) != 1 or by_p[next(iter(tabs))] != comp:
                bad.extend(sorted(comp))
    return bad
