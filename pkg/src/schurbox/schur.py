"""Schur polynomials two ways, box sums, Weyl denominators, and product formulas.

The central object is the box sum: the sum of Schur polynomials
s_lambda(x_1..x_n) over all partitions lambda fitting in an m x n box.  The
theorem this package verifies states that the box sum equals the ratio of
determinants

    det(x_i^{j-1} - x_i^{m+2n-j}) / det(x_i^{j-1} - x_i^{2n-j}),

whose denominator is the type-B_n Weyl denominator.  Principal
specializations x_i := q^e turn the box sum into the MacMahon and Gordon
q-products.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Sequence

from .combinat import Partition, partitions_in_box, ssyt
from .poly import (
    DEFAULT_MAX_ORDER,
    LaurentPoly,
    Monomial,
    PolyMatrix,
    determinant,
    exact_div,
)

__all__ = [
    "BoxParams",
    "DnReport",
    "box_det_ratio",
    "dn_checks",
    "gordon_product",
    "macmahon_product",
    "principal_specialization",
    "schur_box_sum",
    "schur_via_bialternant",
    "schur_via_tableaux",
    "vandermonde",
    "weyl_denominator",
    "xvars",
]


@dataclass(frozen=True)
class BoxParams:
    """Box dimensions: parts at most m, at most n parts / variables."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("box dimensions must be non-negative")


def xvars(n: int) -> list[str]:
    return [f"x{i}" for i in range(1, n + 1)]


def vandermonde(names: Sequence[str]) -> LaurentPoly:
    """prod_{i<j} (x_i - x_j), the alternant denominator (earlier minus later)."""
    out = LaurentPoly.one()
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            out = out * (LaurentPoly.variable(names[i]) - LaurentPoly.variable(names[j]))
    return out


def schur_via_tableaux(shape: Partition, n: int) -> LaurentPoly:
    """Sum over semistandard tableaux of shape ``shape`` of prod x_entry."""
    acc: dict[Monomial, int] = {}
    for tab in ssyt(shape, n):
        mono = tab.content_monomial()
        acc[mono] = acc.get(mono, 0) + 1
    return LaurentPoly(acc)


def schur_via_bialternant(shape: Partition, n: int) -> LaurentPoly:
    """det(x_i^{lambda_j + n - j}) divided exactly by prod_{i<j}(x_i - x_j)."""
    if len(shape.parts) > n:
        return LaurentPoly.zero()
    if n == 0:
        return LaurentPoly.one()
    lam = shape.padded(n)
    rows = [
        [LaurentPoly.variable(f"x{i}", lam[j - 1] + n - j) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return exact_div(determinant(PolyMatrix.from_rows(rows)), vandermonde(xvars(n)))


def schur_box_sum(box: BoxParams, backend: str = "tableaux") -> LaurentPoly:
    """Sum of s_lambda(x_1..x_n) over all lambda in the m x n box."""
    if backend == "tableaux":
        schur = schur_via_tableaux
    elif backend == "bialternant":
        schur = schur_via_bialternant
    else:
        raise ValueError(f"unknown Schur backend {backend!r}")
    total = LaurentPoly.zero()
    for lam in partitions_in_box(box.m, box.n):
        total = total + schur(lam, box.n)
    return total


def box_det_ratio(box: BoxParams, max_order: int = DEFAULT_MAX_ORDER) -> LaurentPoly:
    """det(x_i^{j-1} - x_i^{m+2n-j}) / det(x_i^{j-1} - x_i^{2n-j}), exactly."""
    m, n = box.m, box.n
    if n == 0:
        return LaurentPoly.one()
    num_rows = [
        [
            LaurentPoly.variable(f"x{i}", j - 1) - LaurentPoly.variable(f"x{i}", m + 2 * n - j)
            for j in range(1, n + 1)
        ]
        for i in range(1, n + 1)
    ]
    num = determinant(PolyMatrix.from_rows(num_rows), max_order)
    den = _weyl_det(xvars(n), max_order)
    return exact_div(num, den)


def _weyl_det(names: Sequence[str], max_order: int = DEFAULT_MAX_ORDER) -> LaurentPoly:
    """det(x_i^{j-1} - x_i^{2n-j}) over the given variables."""
    n = len(names)
    rows = [
        [
            LaurentPoly.variable(v, j - 1) - LaurentPoly.variable(v, 2 * n - j)
            for j in range(1, n + 1)
        ]
        for v in names
    ]
    return determinant(PolyMatrix.from_rows(rows), max_order)


def weyl_denominator(n: int, form: str = "determinant") -> LaurentPoly:
    """Type-B_n Weyl denominator, as a determinant or as the product

    prod_i (1 - x_i) * prod_{i<j} (x_i - x_j)(x_i x_j - 1).
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    if form == "determinant":
        return _weyl_det(xvars(n))
    if form != "product":
        raise ValueError(f"unknown form {form!r}")
    out = LaurentPoly.one()
    for i in range(1, n + 1):
        out = out * (1 - LaurentPoly.variable(f"x{i}"))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            xi, xj = LaurentPoly.variable(f"x{i}"), LaurentPoly.variable(f"x{j}")
            out = out * (xi - xj) * (xi * xj - 1)
    return out


@dataclass(frozen=True)
class DnReport:
    """Root and leading-coefficient checks for the Weyl determinant D_n."""

    n: int
    root_checks: tuple[tuple[str, bool], ...]
    leading_coefficient_ok: bool

    @property
    def all_pass(self) -> bool:
        return self.leading_coefficient_ok and all(ok for _, ok in self.root_checks)


def dn_checks(n: int) -> DnReport:
    """Verify that D_n vanishes at x1 := 1, x_j, x_j^-1 and satisfies

    [x1^{2n-1}] D_n = -x2...xn * D_{n-1}(x2..xn).
    """
    if n < 2:
        raise ValueError("dn_checks needs n >= 2")
    d_n = _weyl_det(xvars(n))
    roots: list[tuple[str, bool]] = []
    roots.append(("x1:=1", d_n.substitute({"x1": 1}).is_zero()))
    for j in range(2, n + 1):
        roots.append((f"x1:=x{j}", d_n.substitute({"x1": f"x{j}"}).is_zero()))
        roots.append(
            (
                f"x1:=x{j}^-1",
                d_n.substitute({"x1": Monomial.variable(f"x{j}", -1)}).is_zero(),
            )
        )
    lead = d_n.coefficient_of("x1", 2 * n - 1)
    tail = LaurentPoly.term(Monomial({f"x{i}": 1 for i in range(2, n + 1)}))
    expected = -tail * _weyl_det([f"x{i}" for i in range(2, n + 1)])
    return DnReport(n, tuple(roots), lead == expected)


def _q_factor_product(exponents: Sequence[int]) -> LaurentPoly:
    out = LaurentPoly.one()
    for e in exponents:
        out = out * (1 - LaurentPoly.variable("q", e))
    return out


def macmahon_product(box: BoxParams) -> LaurentPoly:
    """The symmetric plane partition generating function as a q-product:

    prod_i (1-q^{m+2i-1})/(1-q^{2i-1}) * prod_{i<j} (1-q^{2(m+i+j-1)})/(1-q^{2(i+j-1)}),

    assembled as whole numerator/denominator products and divided once
    (individual factors are not polynomial ratios).
    """
    m, n = box.m, box.n
    num_exps = [m + 2 * i - 1 for i in range(1, n + 1)]
    den_exps = [2 * i - 1 for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            num_exps.append(2 * (m + i + j - 1))
            den_exps.append(2 * (i + j - 1))
    return exact_div(_q_factor_product(num_exps), _q_factor_product(den_exps))


def gordon_product(box: BoxParams) -> LaurentPoly:
    """prod_{1<=i<=j<=n} (1-q^{m+i+j-1})/(1-q^{i+j-1}), as one exact division."""
    m, n = box.m, box.n
    num_exps = [m + i + j - 1 for i in range(1, n + 1) for j in range(i, n + 1)]
    den_exps = [i + j - 1 for i in range(1, n + 1) for j in range(i, n + 1)]
    return exact_div(_q_factor_product(num_exps), _q_factor_product(den_exps))


def principal_specialization(poly: LaurentPoly, exponents: Sequence[int]) -> LaurentPoly:
    """Substitute x_i := q^{exponents[i-1]} for i = 1..len(exponents)."""
    assignments = {
        f"x{i}": Monomial.variable("q", e) for i, e in enumerate(exponents, start=1)
    }
    return poly.substitute(assignments)
