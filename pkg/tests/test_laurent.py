import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rank2cluster import _packed
from rank2cluster.laurent import LaurentPolynomial, NotDivisible, VariableContext

X = VariableContext(("x1", "x2"))
U = VariableContext(("u_v1", "u_v2", "u_w1", "u_w2", "u_w3"))


def P(terms, ctx=X):
    return LaurentPolynomial(ctx, terms)


def x1():
    return LaurentPolynomial.variable(X, "x1")


def x2():
    return LaurentPolynomial.variable(X, "x2")


# ---------------------------------------------------------------------------
# construction and canonical form

def test_context_validation():
    with pytest.raises(ValueError):
        VariableContext([])
    with pytest.raises(ValueError):
        VariableContext(["a", "a"])
    assert X.arity == 2
    assert X.index("x2") == 1
    with pytest.raises(KeyError):
        X.index("zz")


def test_zero_coefficients_stripped():
    p = P({(1, 0): 1, (0, 1): 0})
    assert p == x1()
    assert len(p) == 1


def test_bad_terms_rejected():
    with pytest.raises(ValueError):
        P({(1,): 1})
    with pytest.raises(TypeError):
        P({(1, 0): 1.5})
    with pytest.raises(ValueError):
        P({(1.0, 0): 1})


def test_immutable():
    p = x1()
    with pytest.raises(AttributeError):
        p.context = U
    with pytest.raises(TypeError):
        p.terms[(5, 5)] = 1


def test_equality_is_structural():
    assert P({(1, 0): 1}) == x1()
    assert P({(1, 0): 1}) != P({(1, 0): 2})
    # same shape over a different context is a different value
    other = LaurentPolynomial(VariableContext(("y1", "y2")), {(1, 0): 1})
    assert x1() != other


def test_constant_and_one():
    assert LaurentPolynomial.constant(X, 0).is_zero
    assert LaurentPolynomial.one(X) == P({(0, 0): 1})
    assert bool(LaurentPolynomial.zero(X)) is False


# ---------------------------------------------------------------------------
# arithmetic

def test_add_cancellation():
    assert (x1() + x2()) + (x1() - x2()) == P({(1, 0): 2})


def test_add_identity():
    p = P({(2, -1): 3, (0, 0): 1})
    assert p + 0 == p
    assert 0 + p == p


def test_add_paper_numerator():
    lhs = P({(0, 0): 1, (2, 0): 1}) + P({(0, 3): 2, (0, 6): 1})
    assert lhs == P({(0, 0): 1, (2, 0): 1, (0, 3): 2, (0, 6): 1})


def test_context_mismatch_raises():
    q = LaurentPolynomial(VariableContext(("y1", "y2")), {(1, 0): 1})
    with pytest.raises(ValueError):
        x1() + q
    with pytest.raises(ValueError):
        x1() * q


def test_mul_against_golden_cube():
    base = LaurentPolynomial(U, {(0, 0, 0, 0, 0): 1, (1, 1, 0, 0, 0): 1})
    cube = base * base * base
    assert cube == LaurentPolynomial(
        U,
        {
            (0, 0, 0, 0, 0): 1,
            (1, 1, 0, 0, 0): 3,
            (2, 2, 0, 0, 0): 3,
            (3, 3, 0, 0, 0): 1,
        },
    )


def test_mul_monomial_shift():
    p = LaurentPolynomial(U, {(0, 0, 0, 0, 0): 1, (1, 1, 0, 0, 0): 1})
    shifted = p * LaurentPolynomial.monomial(U, (0, 0, -1, 0, 0))
    assert shifted == LaurentPolynomial(U, {(0, 0, -1, 0, 0): 1, (1, 1, -1, 0, 0): 1})


def test_pow():
    assert x2() ** 3 == P({(0, 3): 1})
    p = P({(3, -2): 5, (0, 1): -1})
    assert p ** 0 == LaurentPolynomial.one(X)
    assert p ** 1 == p
    assert p ** 3 == p * p * p
    with pytest.raises(ValueError):
        p ** -1


def test_pow_shifted_binomial():
    p = P({(0, -1): 1, (2, -1): 1})  # (1+x1^2)/x2
    assert p ** 3 == P({(0, -3): 1, (2, -3): 3, (4, -3): 3, (6, -3): 1})


# ---------------------------------------------------------------------------
# exact division

def test_exact_div_factorization():
    num = P({(2, 0): 1, (0, 2): -1})
    den = P({(1, 0): 1, (0, 1): -1})
    assert num.exact_div(den) == P({(1, 0): 1, (0, 1): 1})


def test_exact_div_monomial():
    assert (1 + x1()).exact_div(x2()) == P({(0, -1): 1, (1, -1): 1})


def test_exact_div_failure_certificate():
    with pytest.raises(NotDivisible):
        (1 + x1()).exact_div(1 + x2())


def test_exact_div_zero_divisor():
    with pytest.raises(ZeroDivisionError):
        x1().exact_div(LaurentPolynomial.zero(X))
    assert LaurentPolynomial.zero(X).exact_div(x1()).is_zero


def test_exact_div_monomial_coefficient():
    assert P({(1, 0): 6}).exact_div(P({(0, 0): 3})) == P({(1, 0): 2})
    with pytest.raises(NotDivisible):
        P({(1, 0): 5}).exact_div(P({(0, 0): 3}))


# ---------------------------------------------------------------------------
# specialize / permute / evaluate

def _fold_images():
    xx1, xx2 = x1(), x2()
    return {name: (xx1 if name.startswith("u_v") else xx2) for name in U.names}


def test_specialize_folding_golden():
    # character of the third projective class, folded
    p = LaurentPolynomial(
        U,
        {
            (-1, 0, -1, -1, -1): 1,
            (0, 1, -1, -1, -1): 3,
            (1, 2, -1, -1, -1): 3,
            (2, 3, -1, -1, -1): 1,
            (-1, 0, 0, 0, 0): 1,
        },
    )
    folded = p.specialize(X, _fold_images())
    assert folded == P({(-1, -3): 1, (1, -3): 3, (3, -3): 3, (5, -3): 1, (-1, 0): 1})


def test_specialize_identity():
    p = P({(1, -2): 7, (0, 0): -1})
    images = {"x1": x1(), "x2": x2()}
    assert p.specialize(X, images) == p


def test_specialize_collision_merges():
    p = LaurentPolynomial(U, {(0, 0, -1, 0, 0): 1, (0, 0, 0, -1, 0): 1})
    assert p.specialize(X, _fold_images()) == P({(0, -1): 2})


def test_specialize_requires_images_for_used_only():
    p = LaurentPolynomial(U, {(0, 0, 1, 0, 0): 1})
    assert p.specialize(X, {"u_w1": x2()}) == x2()
    with pytest.raises(KeyError):
        p.specialize(X, {"u_v1": x1()})


def test_specialize_sign_images():
    p = P({(1, 0): 1, (0, 1): 1})
    y = VariableContext(("y",))
    neg = LaurentPolynomial(y, {(1,): -1})
    pos = LaurentPolynomial(y, {(2,): 1})
    out = p.specialize(y, {"x1": neg, "x2": pos})
    assert out == LaurentPolynomial(y, {(1,): -1, (2,): 1})
    # odd power of a -1 image flips the sign, even power does not
    q = P({(2, 0): 1, (3, 0): 1})
    assert q.specialize(y, {"x1": neg}) == LaurentPolynomial(y, {(2,): 1, (3,): -1})


def test_specialize_rejects_nonmonomial_image():
    with pytest.raises(ValueError):
        x1().specialize(X, {"x1": 1 + x2(), "x2": x2()})
    with pytest.raises(ValueError):
        x1().specialize(X, {"x1": P({(1, 0): 2}), "x2": x2()})


def test_permute_swap():
    p = LaurentPolynomial(U, {(0, 0, -1, 0, 0): 1, (1, 1, -1, 0, 0): 1})
    swapped = p.permute_variables({"u_w1": "u_w2", "u_w2": "u_w1"})
    assert swapped == LaurentPolynomial(U, {(0, 0, 0, -1, 0): 1, (1, 1, 0, -1, 0): 1})


def test_permute_identity_and_composition():
    p = P({(2, -1): 3, (-1, 4): 2})
    assert p.permute_variables({}) == p
    swap = {"x1": "x2", "x2": "x1"}
    assert p.permute_variables(swap).permute_variables(swap) == p


def test_permute_rejects_non_bijection():
    with pytest.raises(ValueError):
        x1().permute_variables({"x1": "x2"})
    with pytest.raises(ValueError):
        x1().permute_variables({"zz": "x1"})


def test_evaluate():
    p = P({(0, -1): 1, (2, -1): 1})  # (1+x1^2)/x2
    assert p.evaluate((1, 1)) == 2
    assert (x1() * x2()).evaluate({"x1": 2, "x2": 3}) == 6
    assert p.evaluate((Fraction(1, 2), 3)) == Fraction(5, 12)
    with pytest.raises(ZeroDivisionError):
        p.evaluate((0, 1))
    with pytest.raises(KeyError):
        p.evaluate({"x1": 1})


def test_evaluate_paper_point():
    xm1 = P({(-1, -3): 1, (1, -3): 3, (3, -3): 3, (5, -3): 1, (-1, 0): 1})
    assert xm1.evaluate((1, 1)) == 9


# ---------------------------------------------------------------------------
# predicates and extraction

def test_is_positive():
    assert P({(0, -1): 1, (2, -1): 1}).is_positive()
    assert not (x1() - x2()).is_positive()
    assert LaurentPolynomial.zero(X).is_positive()  # vacuous by convention


def test_denominator_exponents():
    xm1 = P({(-1, -3): 1, (1, -3): 3, (3, -3): 3, (5, -3): 1, (-1, 0): 1})
    assert xm1.denominator_exponents() == (1, 3)
    assert x1().denominator_exponents() == (0, 0)
    assert P({(-1, 0): 1, (-1, 3): 1}).denominator_exponents() == (1, 0)
    with pytest.raises(ValueError):
        LaurentPolynomial.zero(X).denominator_exponents()


# ---------------------------------------------------------------------------
# printing

def test_str_fraction_form():
    xm1 = P({(-1, -3): 1, (1, -3): 3, (3, -3): 3, (5, -3): 1, (-1, 0): 1})
    assert str(xm1) == "(1 + 3*x1^2 + 3*x1^4 + x1^6 + x2^3) / (x1*x2^3)"


def test_str_single_variable_denominator():
    assert str(P({(-1, 0): 1, (-1, 3): 1})) == "(1 + x2^3) / x1"


def test_str_plain_polynomial_and_monomials():
    assert str(LaurentPolynomial.zero(X)) == "0"
    assert str(x1()) == "x1"
    assert str(P({(1, 0): 2})) == "2*x1"
    assert str(P({(0, -1): 2})) == "2 / x2"
    assert str(x1() - x2()) == "x1 - x2"
    assert str(P({(0, 0): -1, (1, 0): 1})) == "-1 + x1"


# ---------------------------------------------------------------------------
# serialization

def test_json_schema_and_order():
    p = P({(0, 3): 2, (-1, 0): 1, (0, -2): 5})
    d = p.to_json_dict()
    assert d["variables"] == ["x1", "x2"]
    assert d["terms"] == [
        {"exponents": [-1, 0], "coefficient": "1"},
        {"exponents": [0, -2], "coefficient": "5"},
        {"exponents": [0, 3], "coefficient": "2"},
    ]
    assert LaurentPolynomial.from_json_dict(json.loads(json.dumps(d))) == p


def test_json_big_coefficient_survives():
    p = P({(0, 0): 10 ** 80})
    assert LaurentPolynomial.from_json_dict(p.to_json_dict()) == p


def test_from_json_rejects_duplicates():
    with pytest.raises(ValueError):
        LaurentPolynomial.from_json_dict(
            {
                "variables": ["x1", "x2"],
                "terms": [
                    {"exponents": [0, 0], "coefficient": "1"},
                    {"exponents": [0, 0], "coefficient": "2"},
                ],
            }
        )


# ---------------------------------------------------------------------------
# property-based checks

coeffs = st.integers(-9, 9).filter(lambda n: n != 0)
exps = st.tuples(st.integers(-4, 4), st.integers(-4, 4))


@st.composite
def polys(draw, max_terms=6, positive=False):
    n = draw(st.integers(0, max_terms))
    c = st.integers(1, 9) if positive else coeffs
    return LaurentPolynomial(X, {draw(exps): draw(c) for _ in range(n)})


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys(), polys())
def test_mul_then_div_roundtrip(a, b):
    if b.is_zero:
        return
    assert (a * b).exact_div(b) == a


@given(polys())
def test_json_roundtrip(p):
    d = json.loads(json.dumps(p.to_json_dict()))
    assert LaurentPolynomial.from_json_dict(d) == p


@given(polys(), polys(), st.integers(1, 5), st.integers(1, 5))
def test_evaluate_is_homomorphic(a, b, v1, v2):
    pt = (Fraction(v1), Fraction(v2, 3))
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
    assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)


@given(polys(), polys())
def test_specialize_is_homomorphic(a, b):
    y = VariableContext(("y1", "y2", "y3"))
    images = {
        "x1": LaurentPolynomial.monomial(y, (1, -1, 0)),
        "x2": LaurentPolynomial.monomial(y, (0, 2, 1)),
    }
    f = lambda p: p.specialize(y, images)
    assert f(a * b) == f(a) * f(b)
    assert f(a + b) == f(a) + f(b)


@given(polys())
def test_permute_is_involutive_automorphism(p):
    swap = {"x1": "x2", "x2": "x1"}
    assert p.permute_variables(swap).permute_variables(swap) == p


# the packed kernels below are gated behind size thresholds in normal use,
# so exercise them directly on small inputs here

@st.composite
def positive_term_dicts(draw, max_terms=5):
    n = draw(st.integers(1, max_terms))
    return {draw(exps): draw(st.integers(1, 50)) for _ in range(n)}


def _convolve(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = (ea[0] + eb[0], ea[1] + eb[1])
            out[key] = out.get(key, 0) + ca * cb
    return out


@given(positive_term_dicts(), positive_term_dicts())
@settings(max_examples=200)
def test_packed_mul_matches_convolution(a, b):
    got = _packed.positive_mul(a, b)
    assert got == _convolve(a, b)


@given(positive_term_dicts(), positive_term_dicts())
@settings(max_examples=200)
def test_packed_div_recovers_factor(a, b):
    product = _convolve(a, b)
    got = _packed.positive_exact_div(product, b)
    # the kernel may decline (None) but must never return a wrong quotient
    if got is not None:
        assert got == a


@given(positive_term_dicts(), positive_term_dicts())
@settings(max_examples=200)
def test_packed_div_never_lies(a, b):
    got = _packed.positive_exact_div(a, b)
    if got is not None:
        assert _convolve(got, b) == a


def test_packed_paths_hit_through_public_api():
    # (sum x1^i x2^j) over a 45x45 box crosses the mul gate against a
    # 15-term factor, and the product crosses the division gate
    big = LaurentPolynomial(X, {(i, j): 1 for i in range(45) for j in range(45)})
    small = LaurentPolynomial(X, {(i, 2 * i): i + 1 for i in range(15)})
    expected = LaurentPolynomial._raw(X, _convolve(dict(big.terms), dict(small.terms)))
    product = big * small
    assert product == expected
    assert product.exact_div(small) == big
    assert product.exact_div(big) == small


def test_packed_div_failure_falls_back_to_certificate():
    big = LaurentPolynomial(X, {(i, j): 1 for i in range(30) for j in range(30)})
    bad = big * x1() + 1
    with pytest.raises(NotDivisible):
        bad.exact_div(big)
