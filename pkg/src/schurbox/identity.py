"""Symbolic verifiers for the determinant-expansion chain behind the box-sum theorem.

Each function here builds both sides of one displayed identity as canonical
Laurent polynomials, so a check is literal equality:

* ``lemma_sides``: the alternating k-sum evaluation
  x1..xn * sum_k (-1)^{k-1} (1-x_k) x_k^-1 prod_{i!=k}(1-x_i x_k)
  prod_{i<j, i,j!=k}(x_j-x_i)  ==  (1 - x1..xn) prod_{i<j}(x_j-x_i).
* ``eq4_sides``: the theorem with denominators cleared,
  det(x_i^{j-1}-x_i^{m+2n-j}) == sum_lambda det(x_i^{lambda_j+n-j})
  * prod(1-x_i) * prod_{i<j}(x_i x_j - 1).
* ``eq5_sides``: the same with every determinant expanded over permutations
  and sign-split binomials expanded over subsets S.
* ``eq6_sides``: the m-free restatement after replacing x_i^{m+1} by
  t_i x_i^{2-2n}; the per-subset geometric-sum denominators (1 - prod x_i)
  are cleared by exact division.
* ``vanishing_det``: det(x_i^{j+1-2n} - x_i^{1-j}), which is identically 0.

Orientation bookkeeping: the lemma uses later-minus-earlier differences
prod_{i<j}(x_j - x_i); Schur alternants use prod_{i<j}(x_i - x_j).
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass

from .poly import (
    DEFAULT_MAX_ORDER,
    LaurentPoly,
    Monomial,
    OrderTooLargeError,
    PolyMatrix,
    determinant,
    exact_div,
    inversion_count,
)
from .combinat import partitions_in_box
from .schur import BoxParams

__all__ = [
    "CheckResult",
    "Permutation",
    "SignedSubset",
    "eq4_sides",
    "eq5_sides",
    "eq6_sides",
    "f_function",
    "lemma_sides",
    "vanishing_det",
]


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1..n}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection on 1..{n}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def inversions(self) -> int:
        return inversion_count(self.images)

    @property
    def sign(self) -> int:
        return -1 if self.inversions & 1 else 1

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @staticmethod
    def all_perms(n: int) -> Iterator[Permutation]:
        """All permutations of {1..n} in lexicographic image order."""
        for images in itertools.permutations(range(1, n + 1)):
            yield Permutation(images)


@dataclass(frozen=True)
class SignedSubset:
    """A subset S of {1..n} with the sign convention eps_i = -1 iff i in S."""

    n: int
    members: frozenset[int]

    def __post_init__(self):
        if not all(1 <= i <= self.n for i in self.members):
            raise ValueError(f"members {set(self.members)} outside 1..{self.n}")

    def epsilon(self, i: int) -> int:
        return -1 if i in self.members else 1

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def sign(self) -> int:
        return -1 if self.size & 1 else 1

    @property
    def complement(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.members

    @property
    def is_proper(self) -> bool:
        return self.size < self.n

    @staticmethod
    def all_subsets(n: int) -> Iterator[SignedSubset]:
        """Subsets as n-bit masks in increasing numeric order (bit i-1 <=> i in S)."""
        for mask in range(1 << n):
            yield SignedSubset(n, frozenset(i for i in range(1, n + 1) if mask >> (i - 1) & 1))


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one identity verification at concrete parameters."""

    identity: str
    m: int | None
    n: int
    lhs: LaurentPoly
    rhs: LaurentPoly
    passed: bool
    elapsed_ms: float

    def to_json_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "m": self.m,
            "n": self.n,
            "pass": self.passed,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if not self.passed:
            out["lhs"] = self.lhs.to_text()
            out["rhs"] = self.rhs.to_text()
        return out


def _x(i: int, exp: int = 1) -> LaurentPoly:
    return LaurentPoly.variable(f"x{i}", exp)


def _x_product(indices) -> LaurentPoly:
    return LaurentPoly.term(Monomial({f"x{i}": 1 for i in indices}))


def _diff_product_reversed(indices) -> LaurentPoly:
    """prod over pairs i<j of (x_j - x_i); later-minus-earlier orientation."""
    indices = sorted(indices)
    out = LaurentPoly.one()
    for a in range(len(indices)):
        for b in range(a + 1, len(indices)):
            out = out * (_x(indices[b]) - _x(indices[a]))
    return out


def _lemma_lhs(n: int) -> LaurentPoly:
    total = LaurentPoly.zero()
    for k in range(1, n + 1):
        term = (1 - _x(k)) * _x(k, -1)
        for i in range(1, n + 1):
            if i != k:
                term = term * (1 - _x(i) * _x(k))
        term = term * _diff_product_reversed(i for i in range(1, n + 1) if i != k)
        total = total + (term if k % 2 else -term)
    return _x_product(range(1, n + 1)) * total


def lemma_sides(n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of the alternating k-sum identity (see module docstring)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rhs = (1 - _x_product(range(1, n + 1))) * _diff_product_reversed(range(1, n + 1))
    return _lemma_lhs(n), rhs


def f_function(n: int) -> LaurentPoly:
    """The lemma's left side divided by prod_{i<j}(x_j - x_i); equals 1 - x1..xn.

    The division is exact because the left side is antisymmetric; a
    NotDivisibleError here would falsify that and is fatal.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return exact_div(_lemma_lhs(n), _diff_product_reversed(range(1, n + 1)))


def _one_minus_x_product(n: int) -> LaurentPoly:
    out = LaurentPoly.one()
    for i in range(1, n + 1):
        out = out * (1 - _x(i))
    return out


def _xx_minus_one_product(n: int) -> LaurentPoly:
    out = LaurentPoly.one()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * (_x(i) * _x(j) - 1)
    return out


def eq4_sides(box: BoxParams, max_order: int = DEFAULT_MAX_ORDER) -> tuple[LaurentPoly, LaurentPoly]:
    """Determinant form of the theorem with the Weyl denominator cleared."""
    m, n = box.m, box.n
    if n < 1:
        raise ValueError("n must be at least 1")
    lhs_rows = [
        [_x(i, j - 1) - _x(i, m + 2 * n - j) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    lhs = determinant(PolyMatrix(tuple(tuple(r) for r in lhs_rows)), max_order)
    alternant_sum = LaurentPoly.zero()
    for lam in partitions_in_box(m, n):
        padded = lam.padded(n)
        rows = [
            [_x(i, padded[j - 1] + n - j) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
        alternant_sum = alternant_sum + determinant(PolyMatrix(tuple(tuple(r) for r in rows)), max_order)
    rhs = alternant_sum * _one_minus_x_product(n) * _xx_minus_one_product(n)
    return lhs, rhs


def eq5_sides(box: BoxParams, max_order: int = DEFAULT_MAX_ORDER) -> tuple[LaurentPoly, LaurentPoly]:
    """Fully expanded form: sums over permutations and subsets on the left,
    over partitions and permutations on the right.
    """
    m, n = box.m, box.n
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > max_order:
        raise OrderTooLargeError(f"n = {n} exceeds bound {max_order}")

    lhs_terms: dict[Monomial, int] = {}
    for sigma in Permutation.all_perms(n):
        for subset in SignedSubset.all_subsets(n):
            exps = {}
            for i in range(1, n + 1):
                e = m + 2 * n - sigma(i) if i in subset.members else sigma(i) - 1
                if e:
                    exps[f"x{i}"] = e
            mono = Monomial(exps)
            c = lhs_terms.get(mono, 0) + sigma.sign * subset.sign
            if c:
                lhs_terms[mono] = c
            elif mono in lhs_terms:
                del lhs_terms[mono]
    lhs = LaurentPoly(lhs_terms)

    inner_terms: dict[Monomial, int] = {}
    for lam in partitions_in_box(m, n):
        padded = lam.padded(n)
        for sigma in Permutation.all_perms(n):
            exps = {}
            for i in range(1, n + 1):
                e = padded[sigma(i) - 1] + n - sigma(i)
                if e:
                    exps[f"x{i}"] = e
            mono = Monomial(exps)
            c = inner_terms.get(mono, 0) + sigma.sign
            if c:
                inner_terms[mono] = c
            elif mono in inner_terms:
                del inner_terms[mono]
    rhs = LaurentPoly(inner_terms) * _one_minus_x_product(n) * _xx_minus_one_product(n)
    return lhs, rhs


def eq6_sides(n: int, max_order: int = DEFAULT_MAX_ORDER) -> tuple[LaurentPoly, LaurentPoly]:
    """The m-free restatement over x1..xn, t1..tn.

    Left side: sum over permutations sigma and subsets S of
    (-1)^{inv+|S|} prod_{i in S} t_i x_i^{1-sigma(i)} prod_{i not in S} x_i^{sigma(i)-1}.

    Right side: sum over k and, for each proper subset S not containing k,
    (-1)^{n+k}(1-x_k) prod_{i!=k}(x_i x_k - 1) times the inner sum over
    bijections {1..n}\\{k} -> {1..n-1}, times the geometric-sum fraction
    (1 - prod_{i not in S} t_i x_i^{2-2n}) / (1 - prod_{i not in S} x_i),
    where "not in S" ranges over the full complement (k included).  The
    fraction abbreviates the finite sum over the smallest part, so the
    k-terms sharing one S are grouped and their sum divided exactly by the
    denominator; a NotDivisibleError is a fatal failure.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > max_order:
        raise OrderTooLargeError(f"n = {n} exceeds bound {max_order}")

    lhs_terms: dict[Monomial, int] = {}
    for sigma in Permutation.all_perms(n):
        for subset in SignedSubset.all_subsets(n):
            exps: dict[str, int] = {}
            for i in range(1, n + 1):
                if i in subset.members:
                    exps[f"t{i}"] = 1
                    e = 1 - sigma(i)
                else:
                    e = sigma(i) - 1
                if e:
                    exps[f"x{i}"] = e
            mono = Monomial(exps)
            c = lhs_terms.get(mono, 0) + sigma.sign * subset.sign
            if c:
                lhs_terms[mono] = c
            elif mono in lhs_terms:
                del lhs_terms[mono]
    lhs = LaurentPoly(lhs_terms)

    rhs = LaurentPoly.zero()
    for subset in SignedSubset.all_subsets(n):
        if not subset.is_proper:
            continue
        comp = sorted(subset.complement)
        t_numerator = 1 - LaurentPoly.term(
            Monomial(
                [(f"t{i}", 1) for i in comp] + [(f"x{i}", 2 - 2 * n) for i in comp]
            )
        )
        denom = 1 - _x_product(comp)
        ksum = LaurentPoly.zero()
        for k in comp:
            prefactor = (1 - _x(k)) if (n + k) % 2 == 0 else -(1 - _x(k))
            for i in range(1, n + 1):
                if i != k:
                    prefactor = prefactor * (_x(i) * _x(k) - 1)
            domain = [i for i in range(1, n + 1) if i != k]
            inner_terms: dict[Monomial, int] = {}
            for images in itertools.permutations(range(1, n)):
                sgn = -1 if inversion_count(images) & 1 else 1
                exps = {}
                for i, j in zip(domain, images):
                    if i in subset.members:
                        exps[f"t{i}"] = 1
                        exps[f"x{i}"] = -j
                    else:
                        exps[f"x{i}"] = j
                mono = Monomial(exps)
                c = inner_terms.get(mono, 0) + sgn
                if c:
                    inner_terms[mono] = c
                elif mono in inner_terms:
                    del inner_terms[mono]
            ksum = ksum + prefactor * LaurentPoly(inner_terms)
        rhs = rhs + subset.sign * exact_div(ksum, denom) * t_numerator
    return lhs, rhs


def vanishing_det(n: int, max_order: int = DEFAULT_MAX_ORDER) -> LaurentPoly:
    """det(x_i^{j+1-2n} - x_i^{1-j}); summing the subset expansion over all
    subsets makes this the obstruction term, and it is identically zero
    (column j = n has equal exponents)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rows = [
        [_x(i, j + 1 - 2 * n) - _x(i, 1 - j) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return determinant(PolyMatrix(tuple(tuple(r) for r in rows)), max_order)
