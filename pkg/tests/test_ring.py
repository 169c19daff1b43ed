import json
import random
from itertools import product

import pytest
import sympy

from lefschetz.errors import (
    FormInIdeal,
    NotAnOSequence,
    NotArtinianByCap,
    NotHomogeneous,
    NotMonomialIdeal,
    PolynomialSyntaxError,
    UnknownVariable,
    ZeroPolynomial,
)
from lefschetz.fields import PrimeField, Rationals
from lefschetz.macaulay import HilbertFunction, enumerate_o_sequences, macaulay_next_max
from lefschetz.ring import (
    GradedIdeal,
    Polynomial,
    all_forms,
    colon_slice_dim,
    count_forms,
    divides,
    hilbert_function,
    ideal_from_json,
    ideal_slice_dim,
    ideal_slice_span,
    is_stable,
    is_strongly_stable,
    lex_segment_ideal,
    load_ideal,
    monomials_of_degree,
    parse_polynomial,
    quotient_dim,
)

from conftest import GOTZMANN
from oracles import monomial_quotient_hf, pascal


def test_monomials_of_degree_examples():
    assert monomials_of_degree(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert monomials_of_degree(3, 1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert len(monomials_of_degree(3, 3)) == 10
    assert monomials_of_degree(4, 0) == ((0, 0, 0, 0),)


def test_monomials_strictly_lex_descending():
    for r in range(1, 5):
        for d in range(0, 7):
            ms = monomials_of_degree(r, d)
            assert len(ms) == pascal(r + d - 1, d)
            assert all(a > b for a, b in zip(ms, ms[1:]))
            assert all(sum(m) == d for m in ms)


def test_parse_polynomial():
    f = parse_polynomial("x1^2 - 3*x2*x3", 3)
    assert f.as_dict() == {(2, 0, 0): 1, (0, 1, 1): -3}
    assert f.degree == 2
    assert parse_polynomial(" -2 x1 +x2", 2).as_dict() == {(1, 0): -2, (0, 1): 1}
    assert parse_polynomial("x1*x1", 1).as_dict() == {(2,): 1}
    assert parse_polynomial("7*x1 + 3*x2", 2, PrimeField(5)).as_dict() == {(1, 0): 2, (0, 1): 3}


@pytest.mark.parametrize("text, r, fld, exc", [
    ("x1 + x2^2", 2, Rationals, NotHomogeneous),
    ("5*x1", 1, PrimeField(5), ZeroPolynomial),
    ("x1 - x1", 1, Rationals, ZeroPolynomial),
    ("x4", 3, Rationals, UnknownVariable),
    ("x0", 3, Rationals, UnknownVariable),
    ("x1 + ", 2, Rationals, PolynomialSyntaxError),
    ("x1 ** 2", 2, Rationals, PolynomialSyntaxError),
    ("y1", 2, Rationals, PolynomialSyntaxError),
    ("x1^0", 2, Rationals, PolynomialSyntaxError),
    ("", 2, Rationals, PolynomialSyntaxError),
])
def test_parse_errors(text, r, fld, exc):
    with pytest.raises(exc):
        parse_polynomial(text, r, fld)


def test_syntax_error_position():
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_polynomial("x1 + x2 $ x3", 3)
    assert info.value.position == 8


def test_polynomial_print_parse_roundtrip():
    rng = random.Random(5)
    for fld in (Rationals, PrimeField(7), PrimeField(2)):
        for _ in range(30):
            r, d = rng.randint(1, 4), rng.randint(0, 4)
            coeffs = {m: rng.randint(-9, 9) for m in monomials_of_degree(r, d)}
            f = Polynomial.from_dict(fld, r, coeffs)
            if f and d > 0:
                assert parse_polynomial(str(f), r, fld) == f


def test_polynomial_arithmetic():
    L = parse_polynomial("x1 + x2", 2)
    assert (L ** 2).as_dict() == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert (L ** 0).as_dict() == {(0, 0): 1}
    assert not (L - L)
    two = PrimeField(2)
    assert (parse_polynomial("x1 + x2", 2, two) ** 2).as_dict() == {(2, 0): 1, (0, 2): 1}
    with pytest.raises(NotHomogeneous):
        L + parse_polynomial("x1^2", 2)


def test_ideal_slice_span_examples():
    I = GradedIdeal.from_strings(2, ["x1^2", "x1*x2"])
    assert {str(p) for p in ideal_slice_span(I, 2)} == {"x1^2", "x1*x2"}
    assert {str(p) for p in ideal_slice_span(I, 3)} == {"x1^3", "x1^2*x2", "x1*x2^2"}
    assert ideal_slice_dim(I, 3) == 3
    assert ideal_slice_span(I, 0) == []
    assert ideal_slice_span(I, 1) == []


def test_hilbert_function_examples(gotzmann):
    assert hilbert_function(gotzmann) == HilbertFunction([1, 3, 4, 3])
    for r in range(1, 5):
        maximal = GradedIdeal.from_monomials(r, [tuple(int(i == k) for i in range(r)) for k in range(r)])
        assert hilbert_function(maximal) == HilbertFunction([1])
    assert hilbert_function(GradedIdeal.from_strings(2, ["x1^3", "x2^3"])) == HilbertFunction([1, 2, 3, 2, 1])


def test_not_artinian_by_cap():
    I = GradedIdeal.from_strings(2, ["x1^2"])
    with pytest.raises(NotArtinianByCap):
        hilbert_function(I, cap=10)
    with pytest.raises(NotArtinianByCap):
        hilbert_function(GradedIdeal.from_strings(2, ["x1^5", "x2^5"]), cap=7)
    assert hilbert_function(GradedIdeal.from_strings(2, ["x1^5", "x2^5"]), cap=9).e == 8


def _random_monomial_ideal(rng, r, max_power):
    gens = []
    for k in range(r):
        m = [0] * r
        m[k] = rng.randint(1, max_power)
        gens.append(tuple(m))
    for _ in range(rng.randint(0, 4)):
        d = rng.randint(1, max_power)
        gens.append(rng.choice(monomials_of_degree(r, d)))
    return gens


def test_monomial_hilbert_function_matches_counting():
    rng = random.Random(2)
    for _ in range(40):
        r = rng.randint(1, 3)
        gens = _random_monomial_ideal(rng, r, 4)
        I = GradedIdeal.from_monomials(r, gens)
        H = hilbert_function(I)
        counted = monomial_quotient_hf(r, gens, H.e + 1)
        assert list(H) + [0] == counted


def _sympy_hf(r, gens, top):
    xs = sympy.symbols(f"x1:{r + 1}")
    exprs = [sympy.sympify(g.replace("^", "**")) for g in gens]
    G = sympy.groebner(exprs, *xs, order="grevlex", domain="QQ")
    leads = [sympy.Poly(g, *xs).monoms(order="grevlex")[0] for g in G.exprs]
    return monomial_quotient_hf(r, leads, top)


def test_general_hilbert_function_matches_groebner_oracle(gotzmann):
    rng = random.Random(9)
    cases = [
        (3, ["x1^3", "x2^3", "x3^3", "x1^3 + 3*x1^2*x2 + 3*x1^2*x3 + 3*x1*x2^2 + 6*x1*x2*x3 + 3*x1*x3^2"
                                    " + x2^3 + 3*x2^2*x3 + 3*x2*x3^2 + x3^3"]),
        (2, ["x1^2 + x2^2", "x1*x2"]),
    ]
    for _ in range(6):
        r = rng.randint(2, 3)
        gens = [f"x{k + 1}^{rng.randint(2, 3)}" for k in range(r)]
        d = rng.randint(1, 3)
        terms = [f"{rng.randint(-5, 5)}*{'*'.join(f'x{k + 1}^{a}' for k, a in enumerate(m) if a)}"
                 for m in monomials_of_degree(r, d)]
        gens.append(" + ".join(terms).replace("+ -", "- "))
        cases.append((r, gens))
    for r, gens in cases:
        try:
            I = GradedIdeal.from_strings(r, gens)
        except ZeroPolynomial:
            continue
        H = hilbert_function(I)
        assert list(H) + [0] == _sympy_hf(r, gens, H.e + 1), gens


def test_lex_segment_examples():
    I = lex_segment_ideal([1, 3, 4, 3])
    assert [str(g) for g in I.generators] == [
        "x1^2", "x1*x2", "x1*x3^2", "x2^3", "x2^2*x3^2", "x2*x3^3", "x3^4"]
    assert [str(g) for g in lex_segment_ideal([1, 2, 1]).generators] == ["x1^2", "x1*x2", "x2^3"]
    I = lex_segment_ideal([1, 1])
    assert I.r == 1 and [str(g) for g in I.generators] == ["x1^2"]
    with pytest.raises(NotAnOSequence):
        lex_segment_ideal([1, 2, 4])


def _lex_oracle_slices(H, d):
    """The first dim R_d - h_d monomials of degree d, computed from scratch."""
    ms = sorted(
        (m for m in product(range(d + 1), repeat=H.r) if sum(m) == d),
        reverse=True,
    )
    return set(ms[: len(ms) - H[d]])


def test_lex_segments_realize_and_are_minimal():
    for H in enumerate_o_sequences(3, 5, 8):
        I = lex_segment_ideal(H)
        assert hilbert_function(I, H.e + 1) == H
        assert is_strongly_stable(I) and is_stable(I)
        gens = I.monomial_generators()
        for a in gens:
            assert not any(a != b and divides(b, a) for b in gens), (H, a)
        for d in range(1, H.e + 2):
            in_ideal = {m for m in monomials_of_degree(H.r, d) if any(divides(g, m) for g in gens)}
            assert in_ideal == _lex_oracle_slices(H, d), (H, d)


def test_dropping_a_lex_generator_changes_a_slice():
    I = lex_segment_ideal([1, 3, 4, 3])
    H = hilbert_function(I)
    for k in range(len(I.generators)):
        smaller = GradedIdeal(I.r, I.field, I.generators[:k] + I.generators[k + 1:])
        d = I.generators[k].degree
        assert quotient_dim(smaller, d) > H[d]


def test_stability():
    assert is_strongly_stable(lex_segment_ideal([1, 2, 1]))
    assert not is_stable(GradedIdeal.from_strings(2, ["x2^2"]))
    for r in range(1, 4):
        power = GradedIdeal.from_monomials(r, monomials_of_degree(r, 3))
        assert is_stable(power) and is_strongly_stable(power)
    # stable, but moving x2 out of x2*x3 gives x1*x3, which is missing
    I = GradedIdeal.from_strings(3, ["x1^2", "x1*x2", "x2^2", "x2*x3"])
    assert is_stable(I) and not is_strongly_stable(I)
    with pytest.raises(NotMonomialIdeal):
        is_stable(GradedIdeal.from_strings(2, ["x1 + x2"]))


def test_colon_slice_dim():
    I = GradedIdeal.from_strings(2, ["x1^2", "x2^2"])
    assert colon_slice_dim(I, parse_polynomial("x1*x2", 2), 1) == 2
    assert colon_slice_dim(I, parse_polynomial("x1 + x2", 2), 0) == 0
    # R_2 * F lies in I for F = x1 + x2 since A_3 = 0
    assert colon_slice_dim(I, parse_polynomial("x1 + x2", 2), 2) == 3
    with pytest.raises(FormInIdeal):
        colon_slice_dim(I, parse_polynomial("x1^2 - x2^2", 2), 0)


def test_macaulay_bound_on_random_ideals():
    rng = random.Random(4)
    for _ in range(30):
        r = rng.randint(2, 3)
        gens = [parse_polynomial(f"x{k + 1}^{rng.randint(2, 4)}", r) for k in range(r)]
        d = rng.randint(2, 3)
        coeffs = {m: rng.randint(-3, 3) for m in monomials_of_degree(r, d)}
        extra = Polynomial.from_dict(Rationals, r, coeffs)
        if extra:
            gens.append(extra)
        H = hilbert_function(GradedIdeal(r, Rationals, tuple(gens)))
        for k in range(1, H.e + 1):
            assert H[k + 1] <= macaulay_next_max(H[k], k)


def test_ideal_json_roundtrip(tmp_path):
    I = GradedIdeal.from_strings(3, GOTZMANN)
    path = tmp_path / "ideal.json"
    path.write_text(json.dumps(I.to_json()))
    assert load_ideal(path) == I
    J = ideal_from_json('{"vars": 2, "char": 3, "gens": ["x1^3", "x2^3"]}')
    assert J.field == PrimeField(3)
    with pytest.raises(ValueError):
        ideal_from_json({"vars": 2})
    with pytest.raises(ValueError):
        ideal_from_json({"vars": 2, "char": 4, "gens": ["x1"]})


def test_all_forms_up_to_scalar():
    F3 = PrimeField(3)
    forms = list(all_forms(F3, 2, 1))
    assert len(forms) == count_forms(F3, 2, 1) == 4
    assert len(set(forms)) == 4
    assert len(list(all_forms(PrimeField(2), 2, 2))) == 7
    with pytest.raises(ValueError):
        list(all_forms(Rationals, 2, 1))
