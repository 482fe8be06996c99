#include <catch2/catch_amalgamated.hpp>

#include <schubertk/ring.hpp>

using namespace schubertk;

TEST_CASE("universe construction and lookup", "[ring]") {
    UniversePtr u = make_universe_a(3);
    REQUIRE(u->size() == 3);
    REQUIRE(u->name(0) == "a1");
    REQUIRE(u->index_of("a3") == 2);
    REQUIRE(u->index_of("a4") == -1);

    UniversePtr xu = make_universe_xa(2, 3);
    REQUIRE(xu->size() == 5);
    REQUIRE(xu->name(0) == "x1");
    REQUIRE(xu->name(2) == "a1");

    UniversePtr uu = make_universe_u(3);
    REQUIRE(uu->policy(0) == exponent_policy::nonnegative);
}

TEST_CASE("arithmetic and equality", "[ring]") {
    UniversePtr u = make_universe_a(2);
    LaurentPoly a1 = LaurentPoly::variable(u, std::size_t(0));
    LaurentPoly a2 = LaurentPoly::variable(u, std::size_t(1));
    LaurentPoly p = (a1 + a2) * (a1 - a2);
    REQUIRE(p == a1 * a1 - a2 * a2);
    REQUIRE((p - p).is_zero());
    REQUIRE(LaurentPoly::one(u).is_one());
    REQUIRE((a1 * Int(3) + a1 * Int(-3)).is_zero());
    REQUIRE(p.term_count() == 2);
}

TEST_CASE("negative exponents and monomial inversion", "[ring]") {
    UniversePtr u = make_universe_a(2);
    LaurentPoly a1 = LaurentPoly::variable(u, std::size_t(0));
    LaurentPoly a2inv = LaurentPoly::variable(u, std::size_t(1), -1);
    LaurentPoly m = a1 * a2inv;
    REQUIRE(m.is_monomial());
    REQUIRE(m * m.monomial_inverse() == LaurentPoly::one(u));
    REQUIRE(m.pow(-2) == m.monomial_inverse() * m.monomial_inverse());
    REQUIRE_THROWS_AS((a1 + a2inv).pow(-1), not_divisible_error);
}

TEST_CASE("nonnegative policy rejects negative exponents", "[ring]") {
    UniversePtr uu = make_universe_u(2);
    Exps e = {1, -1};
    REQUIRE_THROWS_AS(LaurentPoly::monomial(uu, e, 1), not_polynomial_error);
}

TEST_CASE("exact division", "[ring]") {
    UniversePtr u = make_universe_a(2);
    LaurentPoly a1 = LaurentPoly::variable(u, std::size_t(0));
    LaurentPoly a2 = LaurentPoly::variable(u, std::size_t(1));
    LaurentPoly q = LaurentPoly::one(u) - a1 * a2.monomial_inverse();
    LaurentPoly p = q * q * (a1 + a2);
    REQUIRE(p.div_exact(q) == q * (a1 + a2));
    REQUIRE_THROWS_AS((LaurentPoly::one(u) + a1).div_exact(q), not_divisible_error);
}

TEST_CASE("substitution and evaluation", "[ring]") {
    UniversePtr u = make_universe_a(2);
    UniversePtr w = make_universe_a(3);
    LaurentPoly a1 = LaurentPoly::variable(u, std::size_t(0));
    LaurentPoly a2 = LaurentPoly::variable(u, std::size_t(1));
    LaurentPoly p = a1 * a2 + a2;
    std::vector<LaurentPoly> images = {
        LaurentPoly::variable(w, std::size_t(0)) * LaurentPoly::variable(w, std::size_t(1)),
        LaurentPoly::variable(w, std::size_t(2)),
    };
    LaurentPoly q = p.substitute(w, images);
    LaurentPoly b1 = LaurentPoly::variable(w, std::size_t(0));
    LaurentPoly b2 = LaurentPoly::variable(w, std::size_t(1));
    LaurentPoly b3 = LaurentPoly::variable(w, std::size_t(2));
    REQUIRE(q == b1 * b2 * b3 + b3);

    Rat v = p.evaluate({Rat(1, 2), Rat(3)});
    REQUIRE(v == Rat(9, 2));
}

TEST_CASE("transport between universes by name", "[ring]") {
    UniversePtr small = make_universe_a(2);
    UniversePtr big = make_universe_au(3);
    LaurentPoly p = LaurentPoly::variable(small, std::size_t(0)) +
                    LaurentPoly::variable(small, std::size_t(1), -2);
    LaurentPoly q = p.transport(big);
    REQUIRE(q.universe()->same_as(*big));
    REQUIRE(q == LaurentPoly::variable(big, "a1") + LaurentPoly::variable(big, "a2").pow(-2));
    // a value out of the destination's names is rejected
    UniversePtr tiny = make_universe_a(1);
    REQUIRE_THROWS_AS(p.transport(tiny), universe_mismatch_error);
}

TEST_CASE("coefficient extraction and degree ranges", "[ring]") {
    UniversePtr u = make_universe_xa(1, 1);
    LaurentPoly x = LaurentPoly::variable(u, std::size_t(0));
    LaurentPoly a = LaurentPoly::variable(u, std::size_t(1));
    LaurentPoly p = x * x * a + x * (LaurentPoly::one(u) - a) + LaurentPoly::one(u);
    REQUIRE(p.coefficient_of({0}, {2}) == a);
    REQUIRE(p.coefficient_of({0}, {1}) == LaurentPoly::one(u) - a);
    REQUIRE(p.coefficient_of({0}, {0}).is_one());
    REQUIRE(p.max_degree_in({0}) == 2);
    REQUIRE(p.min_degree_in({0}) == 0);
}

TEST_CASE("swap of adjacent variables", "[ring]") {
    UniversePtr u = make_universe_a(3);
    LaurentPoly a1 = LaurentPoly::variable(u, std::size_t(0));
    LaurentPoly a2 = LaurentPoly::variable(u, std::size_t(1));
    LaurentPoly p = a1 * a1 * a2;
    REQUIRE(p.swap_vars(0, 1) == a2 * a2 * a1);
    REQUIRE(p.swap_vars(0, 1).swap_vars(0, 1) == p);
}

TEST_CASE("pretty printing is stable", "[ring]") {
    UniversePtr u = make_universe_a(2);
    LaurentPoly a1 = LaurentPoly::variable(u, std::size_t(0));
    LaurentPoly a2inv = LaurentPoly::variable(u, std::size_t(1), -1);
    LaurentPoly p = LaurentPoly::one(u) - a1 * a2inv;
    REQUIRE(p.to_pretty_string() == p.to_pretty_string());
    REQUIRE_FALSE(p.to_pretty_string().empty());
}

TEST_CASE("monomial maps apply and invert", "[ring]") {
    UniversePtr A = make_universe_A(2);
    UniversePtr a = make_universe_a(2);
    // A1 -> a1*a2, A2 -> a2
    MonomialMap m(A, a, {Exps{1, 1}, Exps{0, 1}});
    REQUIRE(m.lattice_determinant() == 1);
    LaurentPoly A1 = LaurentPoly::variable(A, std::size_t(0));
    LaurentPoly A2 = LaurentPoly::variable(A, std::size_t(1));
    LaurentPoly p = A1 * A2.monomial_inverse() + LaurentPoly::one(A);
    LaurentPoly img = m.apply(p);
    LaurentPoly a1 = LaurentPoly::variable(a, std::size_t(0));
    REQUIRE(img == a1 + LaurentPoly::one(a));
    REQUIRE(m.preimage(img) == p);
}

TEST_CASE("preimage outside the lattice image fails", "[ring]") {
    UniversePtr A = make_universe_A(2);
    UniversePtr a = make_universe_a(2);
    // index-2 sublattice: A1 -> a1^2, A2 -> a2
    MonomialMap m(A, a, {Exps{2, 0}, Exps{0, 1}});
    REQUIRE(m.lattice_determinant() == 2);
    LaurentPoly a1 = LaurentPoly::variable(a, std::size_t(0));
    REQUIRE_THROWS_AS(m.preimage(a1), not_in_image_error);
    REQUIRE(m.preimage(a1 * a1) == LaurentPoly::variable(A, std::size_t(0)));
}
