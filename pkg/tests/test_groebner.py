"""Groebner engine checks: frozen textbook bases, structural properties of
reduced bases on random input, elimination, saturation, intersection,
gcd/lcm, dimension against a brute-force oracle, and budget behavior."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from jetspace.errors import BudgetExhausted, PreconditionError
from jetspace.groebner import (
    Budget,
    Ideal,
    gcd_poly,
    lcm_poly,
    normal_form,
    reduced_groebner,
)
from jetspace.orders import GREVLEX, LEX, Block
from jetspace.parser import parse_polynomial
from jetspace.poly import Polynomial, Ring


def mk(ring, *exprs):
    return tuple(parse_polynomial(e, ring) for e in exprs)


def ideal(ring, *exprs):
    return Ideal(ring, mk(ring, *exprs))


R2 = Ring(("x", "y"))
R3 = Ring(("x", "y", "z"))


def test_circle_line_lex():
    gb = reduced_groebner(mk(R2, "x^2 + y^2 - 1", "x - y"), LEX)
    assert [str(g) for g in gb] == ["x - y", "y^2 - 1/2"]


def test_twisted_cubic_lex():
    gb = reduced_groebner(mk(R3, "y - x^2", "z - x^3"), LEX)
    assert gb == mk(R3, "x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2")


def test_twisted_cubic_eliminate():
    I = ideal(R3, "y - x^2", "z - x^3")
    J = I.eliminate(1)
    assert J.ring.names == ("y", "z")
    assert [str(g) for g in J.groebner_basis()] == ["y^3 - z^2"]


def test_eliminate_two():
    I = ideal(R3, "x - z^2", "y - z^3")
    J = I.eliminate(2)
    assert J.ring.names == ("z",)
    assert J.groebner_basis() == ()


def test_eliminate_nothing_and_everything():
    I = ideal(R2, "x - y")
    assert I.eliminate(0) is I
    full = I.eliminate(2)
    assert full.ring.names == ()
    assert full.groebner_basis() == ()
    assert ideal(R2, "x", "x - 1").eliminate(2).is_trivial()


def test_zero_and_trivial_ideals():
    Z = Ideal(R2, ())
    assert Z.groebner_basis() == ()
    assert Z.is_zero_ideal()
    assert not Z.is_trivial()
    T = ideal(R2, "x", "x + 1")
    assert [str(g) for g in T.groebner_basis()] == ["1"]
    assert T.is_trivial()


def test_membership_frozen():
    I = ideal(R3, "y - x^2", "z - x^3")
    assert I.contains(parse_polynomial("y^3 - z^2", R3))
    assert not I.contains(parse_polynomial("x + y", R3))
    assert not I.contains(R3.one())


def test_normal_form_properties():
    x, y = R2.gens()
    I = ideal(R2, "x^2 - y", "y^2 - 1")
    f = x**4 + x * y + 3
    r = I.reduce(f)
    assert I.contains(f - r)
    assert I.reduce(r) == r


def test_saturations_frozen():
    x, y = R2.gens()
    assert ideal(R2, "x^2").saturate(x).equals(ideal(R2, "1"))
    assert ideal(R2, "x^2*y").saturate(x).equals(ideal(R2, "y"))
    assert ideal(R2, "x^2", "x*y").saturate(x).is_trivial()
    assert ideal(R2, "y^2").saturate(x).equals(ideal(R2, "y^2"))
    xz = Ring(("x", "y", "z"))
    I = ideal(xz, "x*y", "x*z")
    assert I.saturate(xz.var(0)).equals(ideal(xz, "y", "z"))
    # saturating by a nonzero constant changes nothing
    assert ideal(R2, "x*y").saturate(R2.constant(5)).equals(ideal(R2, "x*y"))
    with pytest.raises(PreconditionError):
        ideal(R2, "x").saturate(R2.zero())


def test_intersections_frozen():
    assert (
        ideal(R2, "x + y").intersect_with(ideal(R2, "x - y")).equals(ideal(R2, "x^2 - y^2"))
    )
    assert ideal(R2, "x").intersect_with(ideal(R2, "y")).equals(ideal(R2, "x*y"))
    assert ideal(R2, "x^2").intersect_with(ideal(R2, "x")).equals(ideal(R2, "x^2"))


def test_gcd_lcm_frozen():
    x, y = R2.gens()
    assert gcd_poly(x**2 - y**2, x**2 + 2 * x * y + y**2) == x + y
    assert gcd_poly(x**2 * y, x * y**2) == x * y
    f = 3 * x**2 + 6 * y
    assert gcd_poly(f, f) == x**2 + 2 * y
    assert lcm_poly(x, y) == x * y
    assert gcd_poly(R2.zero(), f) == x**2 + 2 * y
    assert gcd_poly(x + 1, x) == R2.one()


def random_poly(rng, ring, max_terms=3, max_exp=2):
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        exps = tuple(rng.randrange(max_exp + 1) for _ in ring.names)
        terms[exps] = Fraction(rng.randrange(-4, 5))
    return Polynomial(ring, terms)


def test_gcd_lcm_product_identity():
    rng = random.Random(616)
    done = 0
    while done < 50:
        f = random_poly(rng, R2)
        g = random_poly(rng, R2)
        if f.is_zero() or g.is_zero():
            continue
        done += 1
        d = gcd_poly(f, g)
        m = lcm_poly(f, g)
        assert d * m == (f * g).monic()
        # gcd divides both
        from jetspace.poly import divide_exact

        divide_exact(f, d)
        divide_exact(g, d)


def random_zero_constant_poly(rng, ring):
    """Random poly with zero constant term (keeps the ideal proper)."""
    terms = {}
    for _ in range(rng.randrange(1, 4)):
        exps = tuple(rng.randrange(3) for _ in ring.names)
        if sum(exps) == 0:
            continue
        terms[exps] = Fraction(rng.randrange(-5, 6))
    return Polynomial(ring, terms)


def test_membership_random_round_trips():
    """Combinations of generators always reduce to zero; adding 1 to a
    member of a proper ideal never does."""
    rng = random.Random(112233)
    done = 0
    while done < 100:
        gens = [random_zero_constant_poly(rng, R2) for _ in range(2)]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        done += 1
        I = Ideal(R2, tuple(gens))
        f = R2.zero()
        for g in gens:
            f = f + random_poly(rng, R2) * g
        assert I.contains(f)
        assert not I.contains(f + 1)


def test_reduced_basis_structure_random():
    """Reduced bases are monic, sorted, with pairwise non-divisible leads
    and fully reduced tails."""
    rng = random.Random(9090)
    for _ in range(40):
        gens = [random_poly(rng, R2) for _ in range(rng.randrange(1, 4))]
        gb = reduced_groebner(gens, GREVLEX)
        keys = [GREVLEX.key(g.leading_monomial(GREVLEX)) for g in gb]
        assert keys == sorted(keys, reverse=True)
        for g in gb:
            assert g.leading_coefficient(GREVLEX) == 1
        lms = [g.leading_monomial(GREVLEX) for g in gb]
        for a, b in combinations(range(len(gb)), 2):
            assert not all(p <= q for p, q in zip(lms[a], lms[b]))
            assert not all(q <= p for p, q in zip(lms[a], lms[b]))
        for i, g in enumerate(gb):
            others = [h for j, h in enumerate(gb) if j != i]
            if others:
                assert normal_form(g, others, GREVLEX) == g


def test_groebner_property_spoly_reduction():
    """Every S-polynomial of the output basis reduces to zero."""
    rng = random.Random(777)
    for _ in range(25):
        gens = [random_poly(rng, R2) for _ in range(2)]
        gb = reduced_groebner(gens, GREVLEX)
        for a, b in combinations(gb, 2):
            la = a.leading_monomial(GREVLEX)
            lb = b.leading_monomial(GREVLEX)
            lcm = tuple(max(p, q) for p, q in zip(la, lb))
            sa = a.ring.monomial(tuple(p - q for p, q in zip(lcm, la)))
            sb = b.ring.monomial(tuple(p - q for p, q in zip(lcm, lb)))
            s = sa * a - sb * b
            assert normal_form(s, gb, GREVLEX).is_zero()


def brute_monomial_dimension(supports, n):
    """Largest coordinate subspace avoiding every generator support."""
    best = -1
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if all(not set(sup) <= s for sup in supports):
                return size
    return best


def test_dimension_monomial_oracle():
    rng = random.Random(4321)
    names = ("a", "b", "c", "d")
    for _ in range(60):
        n = rng.randrange(1, 5)
        ring = Ring(names[:n])
        k = rng.randrange(1, 4)
        supports = []
        gens = []
        for _ in range(k):
            exps = tuple(rng.randrange(3) for _ in range(n))
            if sum(exps) == 0:
                continue
            supports.append([i for i, e in enumerate(exps) if e])
            gens.append(ring.monomial(exps))
        I = Ideal(ring, tuple(gens))
        expected = brute_monomial_dimension(supports, n) if gens else n
        res = I.krull_dimension()
        assert res.dimension == expected
        assert len(res.independent_set) == expected


def test_dimension_frozen():
    assert Ideal(R3, ()).krull_dimension().dimension == 3
    R4 = Ring(("x", "y", "z", "w"))
    assert ideal(R4, "x*y - z*w").krull_dimension().dimension == 3
    assert ideal(R2, "x", "y").krull_dimension() .dimension == 0
    assert ideal(R2, "x").krull_dimension().dimension == 1
    assert ideal(R2, "x", "x - 1").krull_dimension().dimension == -1
    assert ideal(R2, "x", "x - 1").krull_dimension().independent_set == ()
    res = ideal(R3, "y - x^2", "z - x^3").krull_dimension()
    assert res.dimension == 1
    assert len(res.independent_set) == 1


def test_dimension_independent_set_is_independent():
    I = ideal(R3, "x*y", "x*z")
    res = I.krull_dimension()
    assert res.dimension == 2
    idx = {R3.names.index(v) for v in res.independent_set}
    for g in I.groebner_basis():
        support = {i for i, e in enumerate(g.leading_monomial()) if e}
        assert not support <= idx


def test_budget_pairs():
    with pytest.raises(BudgetExhausted):
        reduced_groebner(
            mk(R2, "x^2 + y^2 - 1", "x*y - 1"), GREVLEX, Budget(max_pairs=0)
        )


def test_budget_degree():
    with pytest.raises(BudgetExhausted):
        reduced_groebner(mk(R2, "x^9"), GREVLEX, Budget(max_degree=8))
    with pytest.raises(BudgetExhausted):
        # S-pair formation overflows the cap even though inputs fit
        reduced_groebner(
            mk(R2, "x^4 + y^3", "x^3*y^3 + x"), GREVLEX, Budget(max_degree=6)
        )


def test_gb_cache_identity():
    I = ideal(R2, "x^2 - y")
    assert I.groebner_basis() is I.groebner_basis()
    assert I.groebner_basis(LEX) is I.groebner_basis(LEX)


def test_ideal_sum_and_equals():
    A = ideal(R2, "x")
    B = ideal(R2, "y")
    assert (A + B).equals(ideal(R2, "x", "y"))
    assert ideal(R2, "x", "y").equals(ideal(R2, "y", "x"))
    assert not A.equals(B)


def test_translate_ideal():
    I = ideal(R2, "x^2 + y^2 - 1")
    J = I.translate([1, 0])
    assert J.contains(parse_polynomial("x^2 + 2*x + y^2", R2))


def test_block_order_gb_agrees_on_elimination():
    # block order with k=1 puts x-free elements in the basis
    gb = reduced_groebner(mk(R3, "y - x^2", "z - x^3"), Block(1))
    xfree = [g for g in gb if all(e[0] == 0 for e in g.terms)]
    assert any(str(g) == "y^3 - z^2" for g in xfree)
