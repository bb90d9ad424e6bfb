"""Bernoulli machinery, coset functions on GL2(Z/n), and q-expansions.

Three layers live here because they share the Bernoulli substrate:

* Bernoulli numbers (convention B_1 = -1/2, generating function t/(e^t - 1))
  and Bernoulli polynomials, exact over Fraction, plus the distribution
  relation ``sum_{a<m} B_n(x + a/m) = m^(1-n) B_n(mx)``.

* The coset functions phi_1, phi_2 on GL2(Z/nZ),

      phi_which(g) = (n^(k+1)/(k+2)) * B_{k+2}(<entry/n>),

  entry = c for which=1 and d for which=2, where <.> is the representative
  in [0,1).  They descend from the quotient by +-P (P = upper triangular
  with bottom row (0 1)); :class:`CosetFn` stores the full value table so
  that invariance is a checkable property rather than a chosen
  representative.  :func:`phi_line_sum` is the companion sum of the same
  integrand over all F_p-multiples of one matrix entry, and
  :func:`check_bernoulli_sum_chain` verifies, matrix by matrix over all of
  GL2(F_p), the rewriting of a unit-restricted double Bernoulli sum into
  ``p B_{k+2}/(k+2)`` plus such a line sum.  The chain balances when the
  line sum reads entry d; ``entry`` is a parameter so both variants can be
  exercised (the c-variant fails, e.g. at the identity matrix).

* Exact q-expansions: Eisenstein series E_w with a_0 = -B_w / w and
  a_n = sigma_{w-1}(n), the discriminant cusp form Delta as
  q prod (1-q^n)^24, the Hecke operator T_p, and the scalar factor
  1 - a_p + p^(2m+1) of weight-(2m+2) eigenforms together with the Weil
  bound check a_p^2 < 4 p^(2m+1) that forces it to be nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, floor, gcd, isqrt
from typing import Mapping

from .exactla import as_fraction

Mat = tuple[int, int, int, int]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))

# -- Bernoulli numbers and polynomials ------------------------------------

_BERNOULLI: list[Fraction] = [Fraction(1)]


def bernoulli_number(n: int) -> Fraction:
    """B_n with B_1 = -1/2, from the recurrence sum_{k<=n} C(n+1,k) B_k = 0."""
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    while len(_BERNOULLI) <= n:
        k = len(_BERNOULLI)
        acc = sum(comb(k + 1, i) * _BERNOULLI[i] for i in range(k))
        _BERNOULLI.append(-acc / (k + 1))
    return _BERNOULLI[n]


@dataclass(frozen=True)
class BernPoly:
    """The Bernoulli polynomial B_n(X), coefficients by ascending power."""

    n: int
    coeffs: tuple[Fraction, ...]

    def __call__(self, x) -> Fraction:
        t = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc


@lru_cache(maxsize=None)
def bernoulli_polynomial(n: int) -> BernPoly:
    """B_n(X) = sum_k C(n,k) B_k X^(n-k)."""
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    coeffs = tuple(comb(n, i) * bernoulli_number(n - i) for i in range(n + 1))
    return BernPoly(n, coeffs)


@lru_cache(maxsize=None)
def _bern_value(n: int, x: Fraction) -> Fraction:
    return bernoulli_polynomial(n)(x)


def bernoulli_poly_eval(n: int, x) -> Fraction:
    """Exact value B_n(x) for rational x."""
    return _bern_value(n, as_fraction(x))


def frac(q) -> Fraction:
    """The representative of q mod 1 in [0, 1)."""
    t = as_fraction(q)
    return t - floor(t)


def distribution_check(n: int, m: int, x) -> bool:
    """Verify sum_{a=0}^{m-1} B_n(x + a/m) = m^(1-n) B_n(m x) exactly."""
    if m < 1:
        raise ValueError("m must be >= 1")
    t = as_fraction(x)
    lhs = sum(bernoulli_poly_eval(n, t + Fraction(a, m)) for a in range(m))
    rhs = Fraction(m) ** (1 - n) * bernoulli_poly_eval(n, m * t)
    return lhs == rhs


# -- GL2 over Z/nZ ----------------------------------------------------------


def mat_det(g: Mat, n: int) -> int:
    a, b, c, d = g
    return (a * d - b * c) % n


def is_invertible(g: Mat, n: int) -> bool:
    return gcd(mat_det(g, n), n) == 1


def mat_mul(g: Mat, h: Mat, n: int) -> Mat:
    a, b, c, d = g
    e, f, x, y = h
    return ((a * e + b * x) % n, (a * f + b * y) % n, (c * e + d * x) % n, (c * f + d * y) % n)


def mat_neg(g: Mat, n: int) -> Mat:
    return tuple((-t) % n for t in g)  # type: ignore[return-value]


@lru_cache(maxsize=None)
def gl2_elements(n: int) -> tuple[Mat, ...]:
    """All invertible 2x2 matrices over Z/nZ, in row-major tuple order."""
    if n < 2:
        raise ValueError("level must be >= 2")
    rng = range(n)
    return tuple(
        (a, b, c, d)
        for a in rng
        for b in rng
        for c in rng
        for d in rng
        if gcd((a * d - b * c) % n, n) == 1
    )


def units(n: int) -> list[int]:
    return [u for u in range(n) if gcd(u, n) == 1]


def _check_phi_args(k: int, n: int, g: Mat) -> None:
    if k < 2 or k % 2 != 0:
        raise ValueError("k must be an even integer >= 2, got %r" % (k,))
    if n < 2:
        raise ValueError("level must be >= 2, got %r" % (n,))
    if not is_invertible(g, n):
        raise ValueError("matrix %r is not invertible mod %d" % (g, n))


def phi(k: int, n: int, which: int, g: Mat) -> Fraction:
    """Value of the coset function phi_1 (entry c) or phi_2 (entry d) at g."""
    _check_phi_args(k, n, g)
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    entry = g[2] if which == 1 else g[3]
    return Fraction(n ** (k + 1), k + 2) * bernoulli_poly_eval(k + 2, Fraction(entry % n, n))


@dataclass
class CosetFn:
    """A rational function on GL2(Z/nZ) stored as a full value table."""

    k: int
    n: int
    values: dict[Mat, Fraction]

    @classmethod
    def tabulate(cls, k: int, n: int, which: int) -> "CosetFn":
        return cls(k, n, {g: phi(k, n, which, g) for g in gl2_elements(n)})

    def pm_parabolic_invariant(self) -> bool:
        """True iff the table is invariant under left +-P(Z/nZ) action.

        Checked by full enumeration: value((u v; 0 1) g) == value(g) for
        every unit u and every v, and value(-g) == value(g).
        """
        parabolic = [(u, v, 0, 1) for u in units(self.n) for v in range(self.n)]
        for g, val in self.values.items():
            if self.values[mat_neg(g, self.n)] != val:
                return False
            for pmat in parabolic:
                if self.values[mat_mul(pmat, g, self.n)] != val:
                    return False
        return True

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "values": [
                {"matrix": list(g), "value": str(v)} for g, v in sorted(self.values.items())
            ],
        }


def phi_line_sum(k: int, p: int, g: Mat, entry: str = "c") -> Fraction:
    """-(p^(k+1)/(k+2)) * sum over alpha in F_p of B_{k+2}(<alpha*e/p>).

    ``e`` is the matrix entry named by ``entry`` ("c" or "d").  The value
    depends only on whether e vanishes mod p, by the distribution relation.
    """
    if entry not in ("c", "d"):
        raise ValueError("entry must be 'c' or 'd'")
    if not _is_prime(p):
        raise ValueError("p must be prime, got %r" % (p,))
    _check_phi_args(k, p, g)
    e = g[2] if entry == "c" else g[3]
    total = sum(bernoulli_poly_eval(k + 2, Fraction((alpha * e) % p, p)) for alpha in range(p))
    return -Fraction(p ** (k + 1), k + 2) * total


@dataclass
class ChainCheck:
    """Result of the GL2(F_p)-wide Bernoulli double-sum chain verification."""

    k: int
    p: int
    entry: str
    ok: bool
    checked: int
    first_failure: Mat | None = None

    def __bool__(self) -> bool:
        return self.ok

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "p": self.p,
            "entry": self.entry,
            "ok": self.ok,
            "checked": self.checked,
            "first_failure": list(self.first_failure) if self.first_failure else None,
        }


def check_bernoulli_sum_chain(k: int, p: int, entry: str = "d") -> ChainCheck:
    """Verify, for every g in GL2(F_p), the displayed equality chain

        (p^(k+1)/(k+2)) sum_{alpha in F_p^x, beta in F_p} B_{k+2}(<(alpha c + beta d)/p>)
          = (p^(k+1)/(k+2)) [ sum_{alpha, beta in F_p} - sum_{beta in F_p} B_{k+2}(<beta d/p>) ]
          = p B_{k+2}/(k+2) + phi_line_sum(k, p, g, entry)

    including the intermediate step (the subtracted single sum is the
    alpha = 0 slice, which runs over multiples of d).  The final rewrite
    balances for ``entry="d"``; ``entry="c"`` is accepted so the failing
    variant can be demonstrated.
    """
    if k < 2 or k % 2 != 0:
        raise ValueError("k must be an even integer >= 2")
    if not _is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime, got %r" % (p,))
    bval = [bernoulli_poly_eval(k + 2, Fraction(t, p)) for t in range(p)]
    prefactor = Fraction(p ** (k + 1), k + 2)
    constant = Fraction(p, k + 2) * bernoulli_number(k + 2)

    # The three sums depend on g only through its bottom row; cache per (c, d)
    # so the full GL2 sweep stays cheap at p = 7.
    sums: dict[tuple[int, int], tuple[Fraction, Fraction, Fraction]] = {}

    def row_sums(c: int, d: int) -> tuple[Fraction, Fraction, Fraction]:
        key = (c, d)
        if key not in sums:
            restricted = sum(
                bval[(alpha * c + beta * d) % p] for alpha in range(1, p) for beta in range(p)
            )
            full = sum(bval[(alpha * c + beta * d) % p] for alpha in range(p) for beta in range(p))
            zero_slice = sum(bval[(beta * d) % p] for beta in range(p))
            sums[key] = (restricted, full, zero_slice)
        return sums[key]

    checked = 0
    for g in gl2_elements(p):
        restricted, full, zero_slice = row_sums(g[2], g[3])
        lhs = prefactor * restricted
        middle = prefactor * (full - zero_slice)
        rhs = constant + phi_line_sum(k, p, g, entry)
        checked += 1
        if not (lhs == middle == rhs):
            return ChainCheck(k, p, entry, False, checked, first_failure=g)
    return ChainCheck(k, p, entry, True, checked)


# -- q-expansions and the Hecke operator ------------------------------------


def divisor_power_sum(n: int, k: int) -> int:
    """sigma_k(n) = sum of d^k over positive divisors d of n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d**k
            if d != n // d:
                total += (n // d) ** k
    return total


@dataclass(frozen=True)
class QExpansion:
    """Truncated q-series a_0 + a_1 q + ... + a_{prec-1} q^(prec-1)."""

    weight: int
    prec: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.prec < 1:
            raise ValueError("prec must be >= 1")
        coeffs = tuple(as_fraction(c) for c in self.coeffs)
        if len(coeffs) != self.prec:
            raise ValueError("expected %d coefficients, got %d" % (self.prec, len(coeffs)))
        object.__setattr__(self, "coeffs", coeffs)

    def a(self, n: int) -> Fraction:
        if not 0 <= n < self.prec:
            raise ValueError("coefficient index %d outside precision %d" % (n, self.prec))
        return self.coeffs[n]

    def __add__(self, other: "QExpansion") -> "QExpansion":
        if not isinstance(other, QExpansion):
            return NotImplemented
        if self.weight != other.weight:
            raise ValueError("weights differ: %d vs %d" % (self.weight, other.weight))
        prec = min(self.prec, other.prec)
        return QExpansion(self.weight, prec, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "QExpansion") -> "QExpansion":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, QExpansion):
            prec = min(self.prec, other.prec)
            out = [Fraction(0)] * prec
            for i in range(prec):
                if self.coeffs[i] == 0:
                    continue
                for j in range(prec - i):
                    out[i + j] += self.coeffs[i] * other.coeffs[j]
            return QExpansion(self.weight + other.weight, prec, tuple(out))
        scalar = as_fraction(other)
        return QExpansion(self.weight, self.prec, tuple(scalar * c for c in self.coeffs))

    def __rmul__(self, scalar):
        return self * scalar

    def to_json_obj(self) -> dict:
        return {"weight": self.weight, "prec": self.prec, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_obj(cls, data: Mapping) -> "QExpansion":
        return cls(int(data["weight"]), int(data["prec"]), tuple(Fraction(c) for c in data["coeffs"]))


def eisenstein_qexp(weight: int, prec: int) -> QExpansion:
    """E_weight with a_0 = -B_weight/weight and a_n = sigma_{weight-1}(n)."""
    if weight < 4 or weight % 2 != 0:
        raise ValueError("weight must be an even integer >= 4, got %r" % (weight,))
    if prec < 1:
        raise ValueError("prec must be >= 1")
    coeffs = [-bernoulli_number(weight) / weight]
    coeffs.extend(Fraction(divisor_power_sum(n, weight - 1)) for n in range(1, prec))
    return QExpansion(weight, prec, tuple(coeffs))


def delta_qexp(prec: int) -> QExpansion:
    """The discriminant cusp form q prod_{n>=1} (1 - q^n)^24, weight 12."""
    if prec < 2:
        raise ValueError("prec must be >= 2")
    n_terms = prec - 1  # product truncated where q*(...) reaches prec
    product = [0] * n_terms
    product[0] = 1
    for n in range(1, n_terms):
        for _ in range(24):
            for i in range(n_terms - 1, n - 1, -1):
                product[i] -= product[i - n]
    coeffs = [Fraction(0)] + [Fraction(c) for c in product]
    return QExpansion(12, prec, tuple(coeffs))


def hecke_tp(f: QExpansion, p: int) -> QExpansion:
    """T_p: a_n -> a_{np} + p^(weight-1) a_{n/p} (second term only if p | n).

    The output precision is floor(prec/p); it must stay >= 2 to say anything.
    """
    if not _is_prime(p):
        raise ValueError("p must be prime, got %r" % (p,))
    out_prec = f.prec // p
    if out_prec < 2:
        raise ValueError(
            "precision %d too small for T_%d (output would have %d coefficients)"
            % (f.prec, p, out_prec)
        )
    shift = p ** (f.weight - 1)
    coeffs = []
    for n in range(out_prec):
        value = f.coeffs[n * p]
        if n % p == 0:
            value += shift * f.coeffs[n // p]
        coeffs.append(value)
    return QExpansion(f.weight, out_prec, tuple(coeffs))


def hecke_eigenvalue(f: QExpansion, p: int) -> Fraction:
    """The T_p-eigenvalue of a normalized (a_1 = 1) eigenform.

    Raises ValueError if f is not normalized, if the precision cannot
    support the check, or if T_p f != a_p f on every comparable coefficient.
    """
    if f.prec <= p:
        raise ValueError("precision %d cannot reach a_%d" % (f.prec, p))
    if f.coeffs[1] != 1:
        raise ValueError("not normalized: a_1 = %s != 1" % (f.coeffs[1],))
    lam = f.coeffs[p]
    transformed = hecke_tp(f, p)
    for n in range(transformed.prec):
        if transformed.coeffs[n] != lam * f.coeffs[n]:
            raise ValueError(
                "not a T_%d-eigenform within precision: coefficient %d is %s, expected %s"
                % (p, n, transformed.coeffs[n], lam * f.coeffs[n])
            )
    return lam


@dataclass(frozen=True)
class HeckeFactorResult:
    """The scalar 1 - a_p + p^(2m+1) with the Weil-bound side check."""

    p: int
    m: int
    eigenvalue: Fraction
    value: Fraction
    weil_ok: bool | None  # None when the Weil bound does not apply (Eisenstein)

    def to_json_obj(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "eigenvalue": str(self.eigenvalue),
            "value": str(self.value),
            "weil_ok": self.weil_ok,
        }


def hecke_factor(f: QExpansion, p: int, m: int, eisenstein: bool = False) -> HeckeFactorResult:
    """Evaluate 1 - a_p(f) + p^(2m+1) on a weight-(2m+2) eigenform.

    For cusp forms the Weil bound a_p^2 < 4 p^(2m+1) is checked exactly (by
    squaring, no square roots) and reported; it forces the factor to be
    nonzero.  Eisenstein series are rejected unless ``eisenstein=True``, in
    which case the bound is skipped (it fails for them, and the factor can
    legitimately vanish).
    """
    if f.weight != 2 * m + 2:
        raise ValueError("weight %d does not match 2m+2 = %d" % (f.weight, 2 * m + 2))
    if not eisenstein and f.coeffs[0] != 0:
        raise ValueError("not a cusp form (a_0 != 0); pass eisenstein=True to allow")
    lam = hecke_eigenvalue(f, p)
    value = 1 - lam + p ** (2 * m + 1)
    weil_ok = None if eisenstein else bool(lam * lam < 4 * p ** (2 * m + 1))
    return HeckeFactorResult(p=p, m=m, eigenvalue=lam, value=value, weil_ok=weil_ok)
