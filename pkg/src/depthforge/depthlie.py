"""Depth-1 generators, the depth-2 bracket matrix, and its relation kernel.

The depth-graded Lie algebra of interest is generated in each odd weight
2m+1 >= 3 by a canonical element whose depth-1 leading term is

    f_{2m+1} = ad(e0)^{2m} (e1)  =  sum_k (-1)^k C(2m, k) e0^{2m-k} e1 e0^k.

For a target weight 2m+2 the Ihara brackets {f_{2i+1}, f_{2j+1}} over pairs
i < j, i + j = m land in the depth-2, weight-(2m+2) word space spanned by
``e0^a e1 e0^b e1 e0^c`` with a + b + c = 2m.  Writing those brackets as the
columns of a matrix, a rational tuple (a_ij) gives a relation

    sum a_ij [sigma_{2i+1}, sigma_{2j+1}] = 0   (depth-graded)

exactly when it lies in the matrix kernel.  The criterion verified by
:func:`verify_brown_criterion` says these relations correspond, via
``(i, j) -> x^2i y^2j - x^2j y^2i``, to the restricted even period
polynomials of weight 2m+2 -- an executable bridge checked here by running
both solvers independently and comparing the spans.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import periodpoly
from .exactla import QMatrix, as_fraction, kernel_basis
from .ncalg import E0, E1, NCPoly, Word, ad_pow, ihara_bracket, letter
from .periodpoly import candidate_pairs


def sigma_leading(m: int) -> NCPoly:
    """The weight-(2m+1), depth-1 leading word expansion ad(e0)^2m (e1)."""
    if m < 1:
        raise ValueError("generators start at weight 3 (m >= 1), got m=%r" % (m,))
    e0 = letter(E0, depth_cap=None)
    e1 = letter(E1, depth_cap=None)
    return ad_pow(e0, 2 * m, e1)


def depth2_word_basis(weight: int) -> list[Word]:
    """All depth-2 words of the given weight, lexicographically ascending."""
    if weight < 2:
        return []
    n = weight - 2
    words = [
        (E0,) * a + (E1,) + (E0,) * b + (E1,) + (E0,) * (n - a - b)
        for a in range(n + 1)
        for b in range(n - a + 1)
    ]
    return sorted(words)


@dataclass
class PairCoefficients:
    """A rational tuple (a_ij) over the pairs i < j, i + j = m."""

    m: int
    coeffs: dict[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), value in self.coeffs.items():
            if not (1 <= i < j and i + j == self.m):
                raise ValueError("pair (%r, %r) violates 1 <= i < j, i + j = %d" % (i, j, self.m))
            c = as_fraction(value)
            if c:
                clean[(i, j)] = c
        self.coeffs = clean

    def to_json_obj(self) -> dict:
        return {
            "m": self.m,
            "coeffs": [
                {"pair": [i, j], "value": str(c)} for (i, j), c in sorted(self.coeffs.items())
            ],
        }


def bracket_matrix(m: int) -> QMatrix:
    """Depth-2 bracket columns over the weight-(2m+2) word basis.

    Columns follow ``candidate_pairs(m)`` (lexicographic pairs (i, j), i < j,
    i + j = m); rows follow :func:`depth2_word_basis`.  Column (i, j) holds
    the depth-2 component of the Ihara bracket {f_{2i+1}, f_{2j+1}}.
    """
    if m < 2:
        raise ValueError("bracket matrix needs m >= 2, got %r" % (m,))
    pairs = candidate_pairs(m)
    words = depth2_word_basis(2 * m + 2)
    columns = []
    for i, j in pairs:
        br = ihara_bracket(sigma_leading(i), sigma_leading(j)).depth_component(2)
        columns.append([br.coefficient(w) for w in words])
    return QMatrix(
        [[col[r] for col in columns] for r in range(len(words))],
        cols=len(pairs),
    )


def relation_kernel(m: int) -> list[PairCoefficients]:
    """Canonical kernel basis of :func:`bracket_matrix`, as pair coefficients."""
    pairs = candidate_pairs(m)
    return [
        PairCoefficients(m, {pair: c for pair, c in zip(pairs, vec) if c})
        for vec in kernel_basis(bracket_matrix(m))
    ]


@dataclass
class BrownReport:
    """Comparison of the bracket-relation kernel with the period-polynomial space."""

    weight: int
    pairs: list[tuple[int, int]]
    kernel_dim: int
    period_dim: int
    in_space: bool
    spans: bool

    @property
    def matches(self) -> bool:
        return self.in_space and self.spans and self.kernel_dim == self.period_dim

    def to_json_obj(self) -> dict:
        return {
            "weight": self.weight,
            "pairs": [list(p) for p in self.pairs],
            "kernel_dim": self.kernel_dim,
            "period_dim": self.period_dim,
            "in_space": self.in_space,
            "spans": self.spans,
        }


def verify_brown_criterion(m: int) -> BrownReport:
    """Check that bracket relations = period polynomials at weight 2m+2.

    Pushes each kernel basis vector through ``pair_to_poly`` and reports
    whether every image satisfies the four period identities (membership is
    decided by the defining equations, not by the period solver) and whether
    the images span the independently solved period space.
    """
    if m < 2:
        raise ValueError("criterion applies from m >= 2, got %r" % (m,))
    kernel = relation_kernel(m)
    images = [periodpoly.pair_to_poly(pc) for pc in kernel]
    space = periodpoly.period_space(2 * m + 2)
    in_space = all(bool(periodpoly.is_period_poly(p)) for p in images)
    spans = periodpoly.subspace_equal(images, space.basis)
    return BrownReport(
        weight=2 * m + 2,
        pairs=candidate_pairs(m),
        kernel_dim=len(kernel),
        period_dim=space.dim,
        in_space=in_space,
        spans=spans,
    )
