"""Sparse multivariate polynomials over Z in the variables x1, x2, ...

Terms are stored as a dict from exponent tuples (trailing zeros trimmed) to
nonzero Python ints, so coefficients are arbitrary precision from the start.
Divided differences are computed monomial by monomial, which keeps them exact
without ever performing a polynomial division.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from invschub.permutations import Permutation, first_reduced_word

Exponents = tuple[int, ...]


def _trim(exp: Sequence[int]) -> Exponents:
    exp = tuple(exp)
    k = len(exp)
    while k and exp[k - 1] == 0:
        k -= 1
    return exp[:k]


class IntPolynomial:
    """An element of Z[x1, x2, ...]."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Exponents, int] | None = None, _clean: bool = False):
        if terms is None:
            self._terms: dict[Exponents, int] = {}
        elif _clean:
            self._terms = terms
        else:
            self._terms = {_trim(e): c for e, c in terms.items() if c != 0}

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero() -> IntPolynomial:
        return IntPolynomial()

    @staticmethod
    def one() -> IntPolynomial:
        return IntPolynomial.constant(1)

    @staticmethod
    def constant(c: int) -> IntPolynomial:
        return IntPolynomial({(): c} if c else {}, _clean=True)

    @staticmethod
    def variable(i: int) -> IntPolynomial:
        """The variable x_i (i >= 1)."""
        if i < 1:
            raise ValueError("variables are indexed by positive integers")
        return IntPolynomial({(0,) * (i - 1) + (1,): 1}, _clean=True)

    @staticmethod
    def monomial(exp: Sequence[int], coeff: int = 1) -> IntPolynomial:
        return IntPolynomial({_trim(exp): coeff})

    # -- ring structure --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return IntPolynomial(out, _clean=True)

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial({e: -c for e, c in self._terms.items()}, _clean=True)

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> IntPolynomial:
        return IntPolynomial.constant(other) - self

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            if other == 0:
                return IntPolynomial()
            return IntPolynomial(
                {e: other * c for e, c in self._terms.items()}, _clean=True
            )
        out: dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                ea, eb = (e1, e2) if len(e1) >= len(e2) else (e2, e1)
                e = _trim(tuple(a + b for a, b in zip(ea, eb)) + ea[len(eb):])
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return IntPolynomial(out, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- inspection -------------------------------------------------------------

    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def coefficient(self, exp: Sequence[int]) -> int:
        return self._terms.get(_trim(exp), 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self._terms}
        return len(degs) <= 1

    def nvariables(self) -> int:
        return max((len(e) for e in self._terms), default=0)

    def least_term(self) -> tuple[int, Exponents]:
        """(coefficient, exponents) of the lexicographically minimal index.

        The zero polynomial yields (0, ()).
        """
        if not self._terms:
            return (0, ())
        e = min(self._terms)
        return (self._terms[e], e)

    # -- substitutions and operators ---------------------------------------------

    def truncate(self, n: int) -> IntPolynomial:
        """Set x_i = 0 for all i > n."""
        return IntPolynomial(
            {e: c for e, c in self._terms.items() if len(e) <= n}, _clean=True
        )

    def act(self, sigma: Permutation) -> IntPolynomial:
        """Permute variables: x_i -> x_{sigma(i)}."""
        if sigma.is_identity():
            return self
        if sigma.min_support() < 1:
            raise ValueError("variable action needs support in the positive integers")
        out: dict[Exponents, int] = {}
        for e, c in self._terms.items():
            img: dict[int, int] = {}
            for k, a in enumerate(e):
                if a:
                    img[sigma(k + 1)] = a
            m = max(img, default=0)
            new = _trim(tuple(img.get(i, 0) for i in range(1, m + 1)))
            out[new] = out.get(new, 0) + c
        return IntPolynomial(out)

    def divided_difference(self, i: int) -> IntPolynomial:
        """(f - s_i f)/(x_i - x_{i+1}), computed monomial by monomial."""
        if i < 1:
            raise ValueError("divided differences are indexed by positive integers")
        out: dict[Exponents, int] = {}
        for e, c in self._terms.items():
            p = e[i - 1] if len(e) >= i else 0
            q = e[i] if len(e) >= i + 1 else 0
            if p == q:
                continue
            base = list(e) + [0] * (i + 1 - len(e))
            sign = 1 if p > q else -1
            lo, hi = min(p, q), max(p, q)
            # x_i^p x_{i+1}^q -> sum of x_i^a x_{i+1}^b with a+b = p+q-1,
            # a and b running strictly between the original exponents.
            for a in range(lo, hi):
                base[i - 1] = a
                base[i] = p + q - 1 - a
                key = _trim(base)
                s = out.get(key, 0) + sign * c
                if s:
                    out[key] = s
                else:
                    del out[key]
        return IntPolynomial(out, _clean=True)

    def isobaric(self, i: int) -> IntPolynomial:
        """pi_i f = d_i(x_i f)."""
        return (IntPolynomial.variable(i) * self).divided_difference(i)

    def op_word(self, kind: str, w: Permutation) -> IntPolynomial:
        """Apply the divided-difference (kind 'd') or isobaric (kind 'pi')
        operator of w along one of its reduced words."""
        if kind not in ("d", "pi"):
            raise ValueError("kind must be 'd' or 'pi'")
        f = self
        for i in reversed(first_reduced_word(w)):
            f = f.divided_difference(i) if kind == "d" else f.isobaric(i)
        return f

    def exact_quotient(self, g: IntPolynomial) -> IntPolynomial:
        """f // g asserting zero remainder (lex term order)."""
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._terms)
        ge = max(g._terms)
        gc = g._terms[ge]
        quo: dict[Exponents, int] = {}
        while rem:
            fe = max(rem)
            fc = rem[fe]
            diff = [a - b for a, b in zip(fe, ge)] + list(fe[len(ge):])
            if any(d < 0 for d in diff) or fc % gc:
                raise ArithmeticError("inexact polynomial division")
            qe = _trim(diff)
            qc = fc // gc
            quo[qe] = quo.get(qe, 0) + qc
            for e, c in g._terms.items():
                key = _trim(
                    tuple(a + b for a, b in zip(qe + (0,) * len(e), e))
                    + qe[len(e):]
                )
                s = rem.get(key, 0) - qc * c
                if s:
                    rem[key] = s
                else:
                    rem.pop(key, None)
        return IntPolynomial(quo)

    def is_symmetric(self, n: int) -> bool:
        return all(self.act(Permutation.s(i)) == self for i in range(1, n))

    # -- formatting ---------------------------------------------------------------

    def _monomial_str(self, e: Exponents) -> str:
        parts = []
        for k, a in enumerate(e):
            if a == 1:
                parts.append(f"x{k + 1}")
            elif a > 1:
                parts.append(f"x{k + 1}^{a}")
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            mono = self._monomial_str(e)
            if mono == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            chunks.append(("- " if c < 0 else "+ ") + body)
        first = chunks[0][2:] if chunks[0].startswith("+") else "-" + chunks[0][2:]
        return " ".join([first] + chunks[1:])

    def __repr__(self) -> str:
        return f"IntPolynomial({self})"

    def to_pairs(self) -> list[tuple[list[int], int]]:
        """Machine format: (exponent-vector, coefficient) pairs, lex-largest first."""
        return [[list(e), self._terms[e]] for e in sorted(self._terms, reverse=True)]


def x(i: int) -> IntPolynomial:
    return IntPolynomial.variable(i)


def prod(factors: Iterable[IntPolynomial | int]) -> IntPolynomial:
    out = IntPolynomial.one()
    for f in factors:
        out = out * f
    return out


def staircase_monomial(n: int) -> IntPolynomial:
    """x^{delta_n} = x1^{n-1} x2^{n-2} ... x_{n-1}."""
    return IntPolynomial.monomial(tuple(n - i for i in range(1, n + 1)))


def vandermonde(n: int) -> IntPolynomial:
    return prod(x(i) - x(j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
