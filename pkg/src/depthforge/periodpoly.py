"""Restricted even period polynomials.

A *restricted even period polynomial* of even degree 2m is a homogeneous
``f(x, y)`` with rational coefficients satisfying, as exact polynomial
identities,

    f(x, 0) = 0
    f(-x, y) = f(x, -y) = f(x, y)          (even in each variable)
    f(x, y) + f(y, x) = 0                  (antisymmetry)
    f(x, y) + f(x-y, x) + f(-y, x-y) = 0   (three-term relation)

The space of such polynomials of degree 2m is written ``S_w`` with
w = 2m + 2; its dimension matches the dimension of the space of weight-w
cusp forms, which is how the tests cross-check the solver.

:func:`period_space` solves for a basis.  The first three conditions are
built into the candidate spanning set ``x^(2i) y^(2j) - x^(2j) y^(2i)``
(i + j = m, 1 <= i < j), so only the three-term relation contributes matrix
rows; substitutions are exact binomial expansions, never evaluation tricks.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from .exactla import QMatrix, as_fraction, kernel_basis, rref

Monomial = tuple[int, int]

_MONOMIAL_RE = re.compile(r"^x\^(\d+)\*y\^(\d+)$")


class BivarPoly:
    """Homogeneous two-variable polynomial with Fraction coefficients.

    ``coeffs`` maps ``(a, b)`` with ``a + b == degree`` to the coefficient of
    ``x^a y^b``.  Zero coefficients are never stored; the zero polynomial has
    an empty map but still carries its degree.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Mapping | Iterable | None = None):
        if degree < 0:
            raise ValueError("degree must be >= 0")
        clean: dict[Monomial, Fraction] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else (coeffs or ())
        for key, value in items:
            mono = _parse_monomial(key) if isinstance(key, str) else (int(key[0]), int(key[1]))
            a, b = mono
            if a < 0 or b < 0 or a + b != degree:
                raise ValueError("monomial x^%d*y^%d is not homogeneous of degree %d" % (a, b, degree))
            c = as_fraction(value)
            if c == 0:
                continue
            acc = clean.get(mono, Fraction(0)) + c
            if acc:
                clean[mono] = acc
            else:
                clean.pop(mono, None)
        self.degree = degree
        self.coeffs = clean

    @classmethod
    def monomial(cls, a: int, b: int, coeff=1) -> "BivarPoly":
        return cls(a + b, {(a, b): coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    __hash__ = None

    def __neg__(self) -> "BivarPoly":
        return BivarPoly(self.degree, {m: -c for m, c in self.coeffs.items()})

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        if not isinstance(other, BivarPoly):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError("degree mismatch: %d vs %d" % (self.degree, other.degree))
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            acc = out.get(m, Fraction(0)) + c
            if acc:
                out[m] = acc
            else:
                out.pop(m, None)
        return BivarPoly(self.degree, out)

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        return self + (-other)

    def __mul__(self, scalar) -> "BivarPoly":
        c = as_fraction(scalar)
        return BivarPoly(self.degree, {m: c * v for m, v in self.coeffs.items()})

    __rmul__ = __mul__

    def compose_linear(self, a, b, c, d) -> "BivarPoly":
        """Exact substitution x -> a*x + b*y, y -> c*x + d*y.

        Computed by binomial expansion of the two linear forms and
        convolution of the results; stays homogeneous of the same degree.
        """
        a, b, c, d = (as_fraction(v) for v in (a, b, c, d))
        out: dict[Monomial, Fraction] = {}
        for (p, q), coeff in self.coeffs.items():
            left = _linear_power(a, b, p)
            right = _linear_power(c, d, q)
            for i, ci in enumerate(left):
                if ci == 0:
                    continue
                for j, cj in enumerate(right):
                    if cj == 0:
                        continue
                    mono = (i + j, self.degree - i - j)
                    acc = out.get(mono, Fraction(0)) + coeff * ci * cj
                    if acc:
                        out[mono] = acc
                    else:
                        out.pop(mono, None)
        return BivarPoly(self.degree, out)

    def leading_normalized(self) -> "BivarPoly":
        """Scale so the first nonzero coefficient in graded-lex order is 1.

        Graded-lex with x > y: monomials scan from ``x^deg`` down to
        ``y^deg``.  The zero polynomial is returned unchanged.
        """
        if not self.coeffs:
            return self
        lead = max(self.coeffs)  # largest x-power first, tuples compare lexicographically
        return self * (1 / self.coeffs[lead])

    # -- serialisation -----------------------------------------------------

    def to_json_obj(self) -> dict[str, str]:
        ordered = sorted(self.coeffs.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))
        return {"x^%d*y^%d" % m: str(c) for m, c in ordered}

    @classmethod
    def from_json_obj(cls, data: Mapping[str, str], degree: int | None = None) -> "BivarPoly":
        if degree is None:
            if not data:
                raise ValueError("degree is required for an empty polynomial")
            degree = sum(_parse_monomial(next(iter(data))))
        return cls(degree, {k: Fraction(v) for k, v in data.items()})

    def __repr__(self) -> str:
        if not self.coeffs:
            return "BivarPoly(0, degree=%d)" % self.degree
        bits = ["%s*x^%d*y^%d" % (c, m[0], m[1]) for m, c in sorted(self.coeffs.items(), reverse=True)]
        return "BivarPoly(%s)" % " + ".join(bits)


def _parse_monomial(s: str) -> Monomial:
    m = _MONOMIAL_RE.match(s)
    if not m:
        raise ValueError("bad monomial key %r (expected 'x^a*y^b')" % (s,))
    return int(m.group(1)), int(m.group(2))


def _linear_power(u: Fraction, v: Fraction, n: int) -> list[Fraction]:
    """Coefficients of (u*x + v*y)^n on x^i y^(n-i), index i ascending."""
    return [comb(n, i) * u**i * v ** (n - i) for i in range(n + 1)]


class PeriodCheck:
    """Outcome of :func:`is_period_poly`: truthy iff all four identities hold."""

    __slots__ = ("ok", "failed")

    def __init__(self, ok: bool, failed: str | None = None):
        self.ok = ok
        self.failed = failed

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return "PeriodCheck(ok)" if self.ok else "PeriodCheck(failed=%r)" % self.failed


def is_period_poly(f: BivarPoly) -> PeriodCheck:
    """Test the four defining identities; report the first one violated."""
    if any(b == 0 for (a, b) in f.coeffs):
        return PeriodCheck(False, "f(x,0) = 0")
    if f.compose_linear(-1, 0, 0, 1) != f or f.compose_linear(1, 0, 0, -1) != f:
        return PeriodCheck(False, "evenness in each variable")
    if f + f.compose_linear(0, 1, 1, 0) != BivarPoly(f.degree):
        return PeriodCheck(False, "antisymmetry f(x,y) + f(y,x) = 0")
    if _three_term(f) != BivarPoly(f.degree):
        return PeriodCheck(False, "three-term relation f(x,y) + f(x-y,x) + f(-y,x-y) = 0")
    return PeriodCheck(True)


def _three_term(f: BivarPoly) -> BivarPoly:
    return f + f.compose_linear(1, -1, 1, 0) + f.compose_linear(0, -1, 1, -1)


class PeriodSpace:
    """Canonical basis of the degree-(w-2) restricted even period polynomials."""

    __slots__ = ("weight", "basis")

    def __init__(self, weight: int, basis: Sequence[BivarPoly]):
        self.weight = weight
        self.basis = list(basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_json_obj(self) -> dict:
        return {
            "weight": self.weight,
            "dim": self.dim,
            "basis": [p.to_json_obj() for p in self.basis],
        }


def candidate_pairs(m: int) -> list[tuple[int, int]]:
    """Exponent pairs (i, j), 1 <= i < j, i + j = m, in lexicographic order."""
    return [(i, m - i) for i in range(1, (m + 1) // 2)]


def _pair_poly(i: int, j: int) -> BivarPoly:
    return BivarPoly(2 * (i + j), {(2 * i, 2 * j): 1, (2 * j, 2 * i): -1})


def period_space(weight: int) -> PeriodSpace:
    """Solve for a basis of the weight-``weight`` period-polynomial space.

    Candidates are the antisymmetrized even monomial pairs
    ``x^(2i) y^(2j) - x^(2j) y^(2i)`` (which already satisfy f(x,0)=0,
    evenness and antisymmetry); the three-term relation is imposed as an
    exact linear system and the kernel, in the canonical basis, is mapped
    back to polynomials normalized to leading coefficient 1.
    """
    if weight % 2 != 0 or weight < 4:
        raise ValueError("weight must be an even integer >= 4, got %r" % (weight,))
    m = (weight - 2) // 2
    pairs = candidate_pairs(m)
    degree = 2 * m
    if not pairs:
        return PeriodSpace(weight, [])
    images = [_three_term(_pair_poly(i, j)) for (i, j) in pairs]
    monomials = [(degree - b, b) for b in range(degree + 1)]
    matrix = QMatrix(
        [[img.coeffs.get(mono, Fraction(0)) for img in images] for mono in monomials],
        cols=len(pairs),
    )
    basis = []
    for vec in kernel_basis(matrix):
        poly = BivarPoly(degree)
        for coeff, (i, j) in zip(vec, pairs):
            if coeff:
                poly = poly + coeff * _pair_poly(i, j)
        basis.append(poly.leading_normalized())
    return PeriodSpace(weight, basis)


def pair_to_poly(pc) -> BivarPoly:
    """Map pair coefficients ``(a_ij)`` to ``sum a_ij (x^2i y^2j - x^2j y^2i)``.

    ``pc`` is anything with fields ``m`` and ``coeffs`` (an ordered-pair to
    Fraction map) -- in practice a ``depthlie.PairCoefficients``.
    """
    poly = BivarPoly(2 * pc.m)
    for (i, j), coeff in sorted(pc.coeffs.items()):
        poly = poly + as_fraction(coeff) * _pair_poly(i, j)
    return poly


def subspace_equal(first: Sequence[BivarPoly], second: Sequence[BivarPoly]) -> bool:
    """Decide span(first) == span(second) by comparing canonical RREF rows."""
    polys = [p for p in list(first) + list(second) if not p.is_zero()]
    if not polys:
        return True
    degree = polys[0].degree
    if any(p.degree != degree for p in polys):
        raise ValueError("all polynomials must share one degree")
    monomials = [(degree - b, b) for b in range(degree + 1)]

    def row_space(group: Sequence[BivarPoly]) -> tuple:
        rows = [[p.coeffs.get(mono, Fraction(0)) for mono in monomials] for p in group if not p.is_zero()]
        if not rows:
            return ()
        reduced, pivots = rref(QMatrix(rows, cols=len(monomials)))
        return tuple(reduced.entries[r] for r in range(len(pivots)))

    return row_space(first) == row_space(second)
