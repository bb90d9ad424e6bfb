"""GL2 character calculus: symmetric powers, Tate twists, tensor products.

A representation is tracked purely through its character on the diagonal
torus diag(t1, t2), a Laurent polynomial in t1, t2 with nonnegative integer
coefficients.  The irreducible objects are Sym^u(V)(v) for u >= 0 and an
integer twist v, with

    char(Sym^u(V)(v)) = (t1^u + t1^(u-1) t2 + ... + t2^u) * (t1 t2)^(-v),

i.e. twisting by (v) multiplies by det^(-v); twists add under tensor.  The
sign of the twist is pinned by requiring the Clebsch-Gordan rule to read

    Sym^k tensor Sym^l = Sym^(k+l) + Sym^(k+l-2)(-1) + ... + Sym^(k-l)(-l)

verbatim for k >= l.  Decomposition is by highest-weight peeling: the
lexicographically largest monomial t1^a t2^b of a genuine character always
has a >= b and belongs to Sym^(a-b)(V)(-b); subtract and repeat.

The bigrading view relabels a monomial t1^a t2^b as the pair (2b, a+b)
(twice the lower-triangular grading, total weight), used for dimension
bookkeeping of associated graded pieces.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

TorusMonomial = tuple[int, int]

_LABEL_RE = re.compile(r"^Sym(\d+)\((-?\d+)\)$")


@dataclass(frozen=True, order=True)
class IrrepLabel:
    """The irreducible Sym^u(V)(v): symmetric power u >= 0, twist v."""

    u: int
    v: int = 0

    def __post_init__(self):
        if self.u < 0:
            raise ValueError("symmetric power must be >= 0, got %r" % (self.u,))

    def __str__(self) -> str:
        return "Sym%d(%d)" % (self.u, self.v)

    @classmethod
    def parse(cls, text: str) -> "IrrepLabel":
        m = _LABEL_RE.match(text.strip())
        if not m:
            raise ValueError("bad irrep label %r (expected 'Sym{u}({v})')" % (text,))
        return cls(int(m.group(1)), int(m.group(2)))


class Character:
    """Laurent polynomial in t1, t2 with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping | Iterable | None = None):
        clean: dict[TorusMonomial, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else (coeffs or ())
        for key, value in items:
            mono = (int(key[0]), int(key[1]))
            if value != int(value):
                raise ValueError("character coefficients must be integers, got %r" % (value,))
            v = int(value)
            if not v:
                continue
            acc = clean.get(mono, 0) + v
            if acc:
                clean[mono] = acc
            else:
                clean.pop(mono, None)
        self.coeffs = clean

    @classmethod
    def one(cls) -> "Character":
        return cls({(0, 0): 1})

    def dimension(self) -> int:
        """Coefficient sum: the dimension of the underlying representation."""
        return sum(self.coeffs.values())

    def is_effective(self) -> bool:
        return all(c > 0 for c in self.coeffs.values())

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other: "Character") -> "Character":
        if not isinstance(other, Character):
            return NotImplemented
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            acc = out.get(m, 0) + c
            if acc:
                out[m] = acc
            else:
                out.pop(m, None)
        return Character(out)

    def __sub__(self, other: "Character") -> "Character":
        if not isinstance(other, Character):
            return NotImplemented
        return self + Character({m: -c for m, c in other.coeffs.items()})

    def __mul__(self, other: "Character") -> "Character":
        if not isinstance(other, Character):
            return NotImplemented
        out: dict[TorusMonomial, int] = {}
        for (a1, b1), c1 in self.coeffs.items():
            for (a2, b2), c2 in other.coeffs.items():
                mono = (a1 + a2, b1 + b2)
                acc = out.get(mono, 0) + c1 * c2
                if acc:
                    out[mono] = acc
                else:
                    out.pop(mono, None)
        return Character(out)

    def to_json_obj(self) -> dict[str, int]:
        return {"t1^%d*t2^%d" % m: c for m, c in sorted(self.coeffs.items())}

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Character(0)"
        bits = ["%d*t1^%d*t2^%d" % (c, m[0], m[1]) for m, c in sorted(self.coeffs.items())]
        return "Character(%s)" % " + ".join(bits)


def irrep_char(label: IrrepLabel) -> Character:
    """Character of Sym^u(V)(v): (sum_i t1^(u-i) t2^i) * (t1 t2)^(-v)."""
    u, v = label.u, label.v
    return Character({(u - i - v, i - v): 1 for i in range(u + 1)})


def tensor_decompose(labels: Sequence[IrrepLabel]) -> list[IrrepLabel]:
    """Decompose a tensor product of irreducibles into irreducibles.

    Returns the multiset as a list (repeats allowed), in peeling order, i.e.
    by descending highest weight.  The character sum of the result equals
    the character product of the inputs, exactly.
    """
    if not labels:
        raise ValueError("tensor_decompose needs at least one factor")
    product = Character.one()
    for label in labels:
        product = product * irrep_char(label)
    return character_decompose(product)


def character_decompose(char: Character) -> list[IrrepLabel]:
    """Peel a genuine character into irreducible labels, highest weight first."""
    work = dict(char.coeffs)
    out: list[IrrepLabel] = []
    while work:
        a, b = max(work)
        mult = work[(a, b)]
        if mult < 0 or a < b:
            raise ValueError("not a genuine GL2 character: stuck at t1^%d*t2^%d x %d" % (a, b, mult))
        label = IrrepLabel(a - b, -b)
        for mono, c in irrep_char(label).coeffs.items():
            acc = work.get(mono, 0) - mult * c
            if acc:
                work[mono] = acc
            else:
                work.pop(mono, None)
        out.extend([label] * mult)
    return out


def check_no_eisenstein_component(n: int, factor_labels: Sequence[IrrepLabel]) -> bool:
    """Tensor the factors and test for the absence of Sym^(2n)(V)(2n+1).

    Every factor must look like Sym^(n_i)(V)(n_i + 1 + r_i) with r_i >= 0
    (malformed factors raise).  Returns True iff the forbidden component
    Sym^(2n)(V)(2n+1) is absent AND every component has the shape
    Sym^u(V)(u+1+w) with w >= 1 -- the stronger claim, which implies the
    absence (the forbidden label has w = 0).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if len(factor_labels) < 2:
        raise ValueError("need at least two tensor factors, got %d" % (len(factor_labels),))
    for label in factor_labels:
        if label.v - label.u - 1 < 0:
            raise ValueError("factor %s is not of the form Sym^n(V)(n+1+r), r >= 0" % (label,))
    forbidden = IrrepLabel(2 * n, 2 * n + 1)
    components = tensor_decompose(factor_labels)
    shape_ok = all(comp.v - comp.u - 1 >= 1 for comp in components)
    return shape_ok and forbidden not in components


def bigraded_dims(char: Character) -> dict[tuple[int, int], int]:
    """Relabel t1^a t2^b as the bigrade (2b, a+b) with its coefficient.

    Rejects characters with a negative coefficient (not genuine).  The
    relabeling is injective, so it is exactly inverted by
    :func:`char_from_bigraded`.
    """
    if any(c < 0 for c in char.coeffs.values()):
        raise ValueError("negative coefficient: not a genuine character")
    return {(2 * b, a + b): c for (a, b), c in char.coeffs.items()}


def char_from_bigraded(dims: Mapping[tuple[int, int], int]) -> Character:
    """Inverse of :func:`bigraded_dims`."""
    coeffs = {}
    for (s, t), c in dims.items():
        if s % 2 != 0:
            raise ValueError("first bigrade component must be even, got %r" % (s,))
        b = s // 2
        coeffs[(t - b, b)] = c
    return Character(coeffs)
