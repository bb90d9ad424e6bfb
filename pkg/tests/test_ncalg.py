import random
from fractions import Fraction

import pytest

from depthforge.ncalg import (
    E1,
    NCPoly,
    ad_pow,
    depth_component,
    derivation_apply,
    generators,
    ihara_bracket,
    letter,
    lie_bracket,
    nc_mul,
    weight_component,
    word_depth,
    word_from_str,
    word_to_str,
    word_weight,
)

# ---------------------------------------------------------------------------
# Independent oracle: a tiny, self-contained word-polynomial calculator that
# shares no code with the package.  Polynomials are plain dicts word->Fraction
# (words are strings over "01"); everything is expanded from the definitions.
# ---------------------------------------------------------------------------


def o_add(p, q):
    out = dict(p)
    for w, c in q.items():
        out[w] = out.get(w, Fraction(0)) + c
        if not out[w]:
            del out[w]
    return out


def o_scale(c, p):
    return {w: c * v for w, v in p.items() if c * v}


def o_mul(p, q):
    out = {}
    for w1, c1 in p.items():
        for w2, c2 in q.items():
            w = w1 + w2
            out[w] = out.get(w, Fraction(0)) + c1 * c2
            if not out[w]:
                del out[w]
    return out


def o_bracket(p, q):
    return o_add(o_mul(p, q), o_scale(Fraction(-1), o_mul(q, p)))


def o_derivation(x, y):
    # a(x): e0 -> [e0, x], e1 -> 0, Leibniz on words
    image = o_bracket({"0": Fraction(1)}, x)
    out = {}
    for w, c in y.items():
        for i, ch in enumerate(w):
            if ch != "0":
                continue
            for bw, bc in image.items():
                nw = w[:i] + bw + w[i + 1 :]
                out[nw] = out.get(nw, Fraction(0)) + c * bc
                if not out[nw]:
                    del out[nw]
    return out


def o_ihara(x, y):
    return o_add(o_add(o_derivation(x, y), o_scale(Fraction(-1), o_derivation(y, x))), o_bracket(x, y))


def o_truncate(p, cap):
    return {w: c for w, c in p.items() if w.count("1") <= cap}


def as_oracle(p: NCPoly):
    return {word_to_str(w): c for w, c in p.terms.items()}


def random_poly(rng, max_weight=5, terms=3, cap=None):
    data = {}
    for _ in range(terms):
        w = "".join(rng.choice("01") for _ in range(rng.randint(1, max_weight)))
        data[w] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return NCPoly(data, depth_cap=cap)


# ---------------------------------------------------------------------------
# word helpers
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "text,weight,depth",
    [("0", 1, 0), ("1", 1, 1), ("00101", 5, 2), ("", 0, 0), ("1111", 4, 4)],
)
def test_word_weight_depth(text, weight, depth):
    w = word_from_str(text)
    assert word_weight(w) == weight
    assert word_depth(w) == depth
    assert word_to_str(w) == text


def test_word_rejects_other_letters():
    with pytest.raises(ValueError):
        word_from_str("012")


# ---------------------------------------------------------------------------
# NCPoly construction and arithmetic
# ---------------------------------------------------------------------------


class TestNCPoly:
    def test_zero_coefficients_dropped(self):
        p = NCPoly({"01": 1, "10": 0})
        assert p.terms == {(0, 1): Fraction(1)}

    def test_cap_drops_deep_words_at_construction(self):
        p = NCPoly({"11": 1, "01": 2}, depth_cap=1)
        assert p.to_json_obj() == {"01": "2"}

    def test_bad_cap(self):
        with pytest.raises(ValueError):
            NCPoly({}, depth_cap=0)
        with pytest.raises(ValueError):
            NCPoly({}, depth_cap=-2)

    def test_mul_trivial(self):
        e0, e1 = generators(depth_cap=None)
        assert nc_mul(e0, e1).to_json_obj() == {"01": "1"}

    def test_mul_distributes(self):
        e0, e1 = generators(depth_cap=None)
        assert ((e0 + e1) * e1).to_json_obj() == {"01": "1", "11": "1"}

    def test_mul_truncation_forced_by_cap(self):
        e1 = letter(E1, depth_cap=1)
        assert (e1 * e1).is_zero()

    def test_result_cap_is_min(self):
        a = NCPoly({"0": 1}, depth_cap=2)
        b = NCPoly({"1": 1}, depth_cap=None)
        assert (a * b).depth_cap == 2
        assert (a + b).depth_cap == 2

    def test_scalar_mul(self):
        p = NCPoly({"01": "1/2"})
        assert (2 * p).to_json_obj() == {"01": "1"}
        assert (p * Fraction(-2, 3)).to_json_obj() == {"01": "-1/3"}

    def test_components(self):
        p = NCPoly({"01": 1, "11": 2, "0": 5})
        assert weight_component(p, 2).to_json_obj() == {"01": "1", "11": "2"}
        assert depth_component(p, 2).to_json_obj() == {"11": "2"}
        assert depth_component(p, 3).is_zero()

    def test_json_round_trip(self):
        p = NCPoly({"00101": "3/7", "1": -2}, depth_cap=3)
        assert NCPoly.from_json_obj(p.to_json_obj(), depth_cap=3) == p

    @pytest.mark.parametrize("seed", range(6))
    def test_mul_associative(self, seed):
        rng = random.Random(seed)
        x, y, z = (random_poly(rng, max_weight=4) for _ in range(3))
        assert (x * y) * z == x * (y * z)

    @pytest.mark.parametrize("seed", range(6))
    def test_capped_equals_truncated_uncapped(self, seed):
        rng = random.Random(50 + seed)
        x, y = random_poly(rng), random_poly(rng)
        capped = x.truncated(2) * y.truncated(2)
        assert capped == (x * y).truncated(2)


# ---------------------------------------------------------------------------
# brackets and derivations against frozen values and the oracle
# ---------------------------------------------------------------------------


class TestBrackets:
    def test_self_bracket_vanishes(self):
        e0, _ = generators(depth_cap=None)
        assert lie_bracket(e0, e0).is_zero()

    def test_generator_bracket(self):
        e0, e1 = generators(depth_cap=None)
        assert lie_bracket(e0, e1).to_json_obj() == {"01": "1", "10": "-1"}

    def test_nested_bracket_expansion(self):
        e0, e1 = generators(depth_cap=None)
        nested = lie_bracket(lie_bracket(e0, e1), e1)
        assert nested.to_json_obj() == {"011": "1", "101": "-2", "110": "1"}

    @pytest.mark.parametrize(
        "n,expected",
        [
            (0, {"1": "1"}),
            (1, {"01": "1", "10": "-1"}),
            (2, {"001": "1", "010": "-2", "100": "1"}),
        ],
    )
    def test_ad_pow_small(self, n, expected):
        e0, e1 = generators(depth_cap=None)
        assert ad_pow(e0, n, e1).to_json_obj() == expected

    def test_ad_pow_negative_rejected(self):
        e0, e1 = generators(depth_cap=None)
        with pytest.raises(ValueError):
            ad_pow(e0, -1, e1)

    def test_derivation_on_generators(self):
        e0, e1 = generators(depth_cap=None)
        assert derivation_apply(e1, e1).is_zero()
        assert derivation_apply(e1, e0).to_json_obj() == {"01": "1", "10": "-1"}

    def test_derivation_leibniz_on_square(self):
        e0, e1 = generators(depth_cap=None)
        lhs = derivation_apply(e1, e0 * e0)
        bracket = lie_bracket(e0, e1)
        assert lhs == bracket * e0 + e0 * bracket

    @pytest.mark.parametrize("seed", range(10))
    def test_oracle_agreement(self, seed):
        rng = random.Random(900 + seed)
        x, y = random_poly(rng), random_poly(rng)
        assert as_oracle(nc_mul(x, y)) == o_mul(as_oracle(x), as_oracle(y))
        assert as_oracle(lie_bracket(x, y)) == o_bracket(as_oracle(x), as_oracle(y))
        assert as_oracle(derivation_apply(x, y)) == o_derivation(as_oracle(x), as_oracle(y))
        assert as_oracle(ihara_bracket(x, y)) == o_ihara(as_oracle(x), as_oracle(y))

    @pytest.mark.parametrize("seed", range(6))
    def test_capped_bracket_equals_truncated_oracle(self, seed):
        rng = random.Random(333 + seed)
        x, y = random_poly(rng), random_poly(rng)
        capped = ihara_bracket(x.truncated(2), y.truncated(2))
        full = o_ihara(o_truncate(as_oracle(x), 2), o_truncate(as_oracle(y), 2))
        assert as_oracle(capped) == o_truncate(full, 2)


class TestIharaStructure:
    def test_antisymmetry_on_generator(self):
        e0, e1 = generators(depth_cap=None)
        f = ad_pow(e0, 2, e1)
        assert ihara_bracket(f, f).is_zero()

    def test_depth2_weight8_bracket_matches_oracle(self):
        # the bracket of the weight-3 and weight-5 generator leading terms
        e0, e1 = generators(depth_cap=None)
        f3 = ad_pow(e0, 2, e1)
        f5 = ad_pow(e0, 4, e1)
        value = ihara_bracket(f3, f5)
        expected = o_ihara(as_oracle(f3), as_oracle(f5))
        assert as_oracle(value) == expected
        assert value.depth_component(2) == value  # depth additivity: all depth 2
        assert value.weight_component(8) == value
        assert all(len(w) == 8 for w in value.terms)

    @pytest.mark.parametrize("seed", range(8))
    def test_homomorphism_to_derivations(self, seed):
        rng = random.Random(4000 + seed)
        x = random_poly(rng, max_weight=5, cap=3)
        y = random_poly(rng, max_weight=5, cap=3)
        bracket = ihara_bracket(x, y)
        for g in generators(depth_cap=3):
            lhs = derivation_apply(bracket, g)
            rhs = derivation_apply(x, derivation_apply(y, g)) - derivation_apply(
                y, derivation_apply(x, g)
            )
            assert lhs == rhs

    @pytest.mark.parametrize("seed", range(5))
    def test_jacobi(self, seed):
        rng = random.Random(7000 + seed)
        x, y, z = (random_poly(rng, max_weight=4, terms=2, cap=3) for _ in range(3))
        total = (
            ihara_bracket(x, ihara_bracket(y, z))
            + ihara_bracket(y, ihara_bracket(z, x))
            + ihara_bracket(z, ihara_bracket(x, y))
        )
        assert total.is_zero()

    @pytest.mark.parametrize("seed", range(5))
    def test_antisymmetry_random(self, seed):
        rng = random.Random(8000 + seed)
        x, y = random_poly(rng, cap=3), random_poly(rng, cap=3)
        assert ihara_bracket(x, y) == -ihara_bracket(y, x)

    def test_weight_and_depth_additivity(self):
        rng = random.Random(13)
        for _ in range(10):
            wx, wy = rng.randint(2, 4), rng.randint(2, 4)
            dx, dy = rng.randint(1, wx - 1), rng.randint(1, wy - 1)
            x = _random_bihomogeneous(rng, weight=wx, depth=dx)
            y = _random_bihomogeneous(rng, weight=wy, depth=dy)
            br = ihara_bracket(x, y)
            assert br.weight_component(wx + wy) == br
            assert br.depth_component(dx + dy) == br


def _random_bihomogeneous(rng, weight, depth):
    words = set()
    while len(words) < 2:
        bits = [1] * depth + [0] * (weight - depth)
        rng.shuffle(bits)
        words.add("".join(str(b) for b in bits))
    return NCPoly({w: Fraction(rng.randint(1, 5)) for w in words})
