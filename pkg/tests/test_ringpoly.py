"""Ring arithmetic, modular reduction, contents, derivatives, squarefree parts."""

import math
import random

import pytest

from sl2char.ringpoly import (
    DomainError,
    RingError,
    arith,
    content_primitive,
    divides,
    exact_div,
    is_prime,
    partial_derivative,
    poly_gcd,
    reduce_mod_p,
    ring,
    squarefree_part,
)

def zring(*names, kind="lex"):
    return ring(0, names, kind)


def test_add_cancellation():
    R = zring("x")
    x = R.var("x")
    assert arith(x + 1, x - 1, "add") == 2 * x
    assert (x + 1) + (x - 1) == 2 * x


def test_freshman_dream_mod_2():
    R = ring(2, ("x",))
    x = R.var("x")
    assert arith(x + 1, x + 1, "mul") == x * x + 1


def test_binomial_square_evaluates_exactly():
    R = zring("a", "b")
    a, b = R.var("a"), R.var("b")
    sq = arith(a + b, a + b, "mul")
    assert sq == a * a + 2 * a * b + b * b
    assert sq.evaluate({"a": 3, "b": 5}) == 64


def test_mixed_ring_arithmetic_rejected():
    with pytest.raises(RingError):
        arith(zring("x").var("x"), ring(3, ("x",)).var("x"), "add")
    with pytest.raises(RingError):
        arith(zring("x").var("x"), zring("y").var("y"), "add")


def test_reduce_mod_p_kills_even_coefficients():
    R = zring("s")
    q = R.parse("2*s^8-10*s^6+18*s^4-12*s^2+1")
    assert reduce_mod_p(q, 2).text() == "1"
    assert reduce_mod_p(zring("x").parse("x+3"), 3).text() == "x"


def test_reduce_mod_p_rejects_composite():
    with pytest.raises(DomainError):
        reduce_mod_p(zring("x").var("x"), 6)


def test_parse_round_trip():
    R = zring("m", "l")
    for text in ("2*m^3-m*l+7", "m^14-3*l^4+l^2-1", "-m-1", "5", "l^2"):
        p = R.parse(text)
        assert p.text() == text
        assert R.parse(p.text()) == p


def test_canonical_order_is_descending():
    R = zring("x", "y")
    p = R.parse("y^3+x") if True else None
    assert p.text() == "x+y^3"  # lex(x > y): x beats any power of y
    G = ring(0, ("x", "y"), kind="grevlex")
    assert G.parse("x+y^3").text() == "y^3+x"


def test_partial_derivative():
    R = zring("x")
    x = R.var("x")
    assert partial_derivative(x**3, "x") == 3 * x * x
    F2 = ring(2, ("x",))
    assert partial_derivative(F2.var("x") ** 2, "x").is_zero()


def test_partial_derivative_of_m188_trace_polynomial():
    # the (t^2-2)(t^4-t^2+1) product expands to t^6-3t^4+3t^2-2
    R = zring("t")
    t = R.var("t")
    mp = (t**2 - 2) * (t**4 - t**2 + 1)
    assert mp == R.parse("t^6-3*t^4+3*t^2-2")
    assert partial_derivative(mp, "t") == R.parse("6*t^5-12*t^3+6*t")


def test_content_primitive():
    R = zring("x", "y")
    c, prim = content_primitive(R.parse("4*x+6*y"))
    assert (c, prim.text()) == (2, "2*x+3*y")
    c, prim = content_primitive(R.parse("-3*x"))
    assert (c, prim.text()) == (3, "x")
    with pytest.raises(DomainError):
        content_primitive(R.zero())


def test_exact_div():
    R = zring("x", "y")
    p = R.parse("x^2-y^2")
    assert exact_div(p, R.parse("x-y")) == R.parse("x+y")
    with pytest.raises(DomainError):
        exact_div(R.parse("x^2+1"), R.parse("x-y"))
    assert divides(R.parse("x+y"), p)
    assert not divides(R.parse("x+2"), p)


def test_squarefree_part_char0():
    R = zring("x")
    x = R.var("x")
    f = (x - 1) ** 2 * (x + 2)
    assert squarefree_part(f) == (x - 1) * (x + 2)


def test_squarefree_part_pth_root_branch():
    F2 = ring(2, ("x",))
    x = F2.var("x")
    assert squarefree_part(x * x) == x
    F3 = ring(3, ("x", "y"))
    x, y = F3.var("x"), F3.var("y")
    assert squarefree_part((x + y) ** 3) == x + y


def test_squarefree_part_multiplicity_shapes():
    # distinct irreducibles with multiplicities <= 3, chars 0 and small p:
    # the squarefree part must divide f, be squarefree, and share f's radical.
    rng = random.Random(40961)
    for char in (0, 2, 3, 5):
        R = ring(char, ("x",))
        x = R.var("x")
        irreducibles = [x + 1, x + 2, x * x + x + 1] if char != 3 else [x + 1, x * x + 1, x + 2]
        for _ in range(25):
            mults = [rng.randint(0, 3) for _ in irreducibles]
            if not any(mults):
                continue
            f = R.one()
            for g, e in zip(irreducibles, mults):
                f = f * g**e
            s = squarefree_part(f)
            assert divides(s, f)
            for v in ("x",):
                assert poly_gcd(s, partial_derivative(s, v)).is_constant()
            assert divides(f, s ** sum(mults))


def test_gcd_univariate_and_bivariate():
    R = zring("x", "y")
    x, y = R.var("x"), R.var("y")
    g = poly_gcd((x + y) * (x - y), (x + y) * (x + 1))
    assert g == x + y
    assert poly_gcd(R.parse("2"), R.parse("4*x")).constant_value() == 2
    q = zring("s").parse("2*s^8-10*s^6+18*s^4-12*s^2+1")
    assert poly_gcd(q, partial_derivative(q, "s")).is_constant()


def test_ring_axioms_random():
    rng = random.Random(1729)

    def random_poly(R, nterms=4, deg=3, cmax=9):
        terms = {}
        for _ in range(nterms):
            mono = tuple(rng.randint(0, deg) for _ in range(R.nvars))
            terms[mono] = rng.randint(-cmax, cmax)
        return R.poly(terms)

    for char in (0, 2, 3, 5):
        R = ring(char, ("x", "y", "z"))
        for _ in range(500):
            p, q, r = (random_poly(R) for _ in range(3))
            assert (p + q) + r == p + (q + r)
            assert p * (q + r) == p * q + p * r
            assert p * q == q * p


def test_reduce_mod_p_is_ring_homomorphism():
    rng = random.Random(271828)

    def random_poly(R):
        return R.poly({(rng.randint(0, 4), rng.randint(0, 4)): rng.randint(-20, 20)
                       for _ in range(5)})

    R = zring("x", "y")
    for p in (2, 3, 5):
        for _ in range(200):
            f, g = random_poly(R), random_poly(R)
            assert reduce_mod_p(f * g, p) == reduce_mod_p(f, p) * reduce_mod_p(g, p)
            assert reduce_mod_p(f + g, p) == reduce_mod_p(f, p) + reduce_mod_p(g, p)


def test_evaluation_is_multiplicative_mod_p():
    rng = random.Random(99)
    R = ring(5, ("x", "y"))
    for _ in range(100):
        f = R.poly({(rng.randint(0, 3), rng.randint(0, 3)): rng.randint(0, 4) for _ in range(4)})
        g = R.poly({(rng.randint(0, 3), rng.randint(0, 3)): rng.randint(0, 4) for _ in range(4)})
        pt = {"x": rng.randint(0, 4), "y": rng.randint(0, 4)}
        lhs = (f * g).evaluate(pt) % 5
        rhs = f.evaluate(pt) * g.evaluate(pt) % 5
        assert lhs == rhs


def test_primality_gate():
    assert is_prime(2) and is_prime(97) and is_prime((1 << 61) - 1)
    assert not is_prime(1) and not is_prime(561) and not is_prime(2047 * 1)
    with pytest.raises(DomainError):
        ring(4, ("x",))
    with pytest.raises(DomainError):
        ring(1 << 64, ("x",))


def test_term_iteration_is_strictly_descending():
    R = zring("x", "y")
    p = R.parse("x^2*y-3*x+y^4-7")
    keys = [R.key(m) for m, _ in p.sorted_terms()]
    assert keys == sorted(keys, reverse=True)
    monos = [m for m, _ in p.iter_terms()]
    assert all(0 not in m.exponents.values() for m in monos)
