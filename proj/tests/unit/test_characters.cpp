#include <doctest.h>

#include "delcoh/algebra/random.hpp"
#include "delcoh/algebra/smith.hpp"
#include "delcoh/characters/character.hpp"
#include "delcoh/characters/relative.hpp"
#include "delcoh/errors.hpp"

#include "../support/fixtures.hpp"

using namespace delcoh;
using namespace delcoh::characters;
using simplicial::Chain;
using simplicial::SimplicialComplex;

namespace {

std::size_t idx(const SimplicialComplex& K, simplicial::Simplex s) { return *K.index_of(s); }

RatVector unit(std::size_t n, std::size_t i, Rational v) {
    RatVector out(n);
    out[i] = v;
    return out;
}

// (C, C') = ([0,1,2], minus the equator loop): the upper hemisphere.
RelativeCycle hemisphere(const RelativeCharacterSpace& s) {
    const auto& X = s.map().target();
    const auto& Y = s.map().source();
    IntVector C(X.count(2)), Cp(Y.count(1));
    C[idx(X, {0, 1, 2})] = 1;
    Cp[idx(Y, {0, 1})] = -1;
    Cp[idx(Y, {1, 2})] = -1;
    Cp[idx(Y, {0, 2})] = 1;
    return RelativeCycle{Chain{2, C}, Chain{1, Cp}};
}

RatVector random_rational(Rng& rng, std::size_t n) {
    RatVector v(n);
    for (auto& x : v) x = rng.small_rational();
    return v;
}

IntVector random_integer(Rng& rng, std::size_t n) {
    IntVector v(n);
    for (auto& x : v) x = rng.small_integer();
    return v;
}

RelCharacterRep random_relative(const RelativeCharacterSpace& s, Rng& rng) {
    const auto& K = s.cone().complex();
    int p = s.degree();
    IntMatrix cocycles = integer_kernel_basis(K.coboundary(p + 1));
    IntVector c(K.dim(p + 1));
    for (std::size_t j = 0; j < cocycles.cols(); ++j) c = add(c, scale(cocycles.col(j), rng.small_integer()));
    CharacterRep x{p, random_rational(rng, K.dim(p)), c};
    RelCharacterRep r = s.from_cone(x);
    return s.make_relative(r.T_X, r.T_Y, r.c_X, r.c_Y);
}

std::vector<RelativeCycle> relative_cycles(const RelativeCharacterSpace& s, int n) {
    std::vector<RelativeCycle> out;
    IntMatrix Z = s.cone().relative_cycle_basis(n);
    for (std::size_t j = 0; j < Z.cols(); ++j) {
        auto [C, Cp] = s.cone().split(Z.col(j), n);
        out.push_back(RelativeCycle{Chain{n, C}, Chain{n - 1, Cp}});
    }
    return out;
}

}  // namespace

TEST_CASE("absolute characters: validation, holonomy and gauge") {
    SimplicialComplex S = fixtures::circle(3);
    auto space = character_space(S, 0);
    auto filled = character_space(fixtures::triangle(), 0);
    CHECK_THROWS_WITH_AS(filled.make(RatVector(3), IntVector{1, 0, 0}), doctest::Contains("δc ≠ 0 on simplex [0,1,2]"),
                         ValidationError);
    CharacterRep x = space.make(RatVector{Rational(1, 3), 0, 0}, IntVector(3));
    CHECK(holonomy_string(space.holonomy(x, IntVector{1, 0, 0})) == "1/3");
    CHECK(space.equal(x, space.gauge(x, RatVector{}, IntVector{2, -1, 0})));
    CHECK_FALSE(space.is_trivial(x));

    auto s1 = character_space(S, 1);
    CharacterRep loop = s1.make(RatVector(3), IntVector{});
    IntVector z(3);
    z[idx(S, {0, 1})] = 1;
    z[idx(S, {1, 2})] = 1;
    z[idx(S, {0, 2})] = -1;
    CHECK(s1.holonomy(loop, z) == 0);
    CHECK_THROWS_AS(s1.holonomy(loop, IntVector{1, 0, 0}), PreconditionError);
    CHECK(holonomy_string(Rational(-1, 4)) == "3/4");
    CHECK(holonomy_string(Rational(0)) == "0/1");
}

TEST_CASE("relative holonomy on the upper hemisphere") {
    RelativeCharacterSpace s(fixtures::equator(), 2);
    const auto& X = s.map().target();
    RelCharacterRep r =
        s.make_relative(unit(X.count(2), idx(X, {0, 1, 2}), Rational(1, 4)), RatVector(3), IntVector{}, IntVector{});
    CHECK(holonomy_string(s.rel_holonomy(r, hemisphere(s))) == "1/4");
    CHECK(s.trivialization_kind(r).kind == Trivialization::Geometric);

    // The action of a Y-character of degree 1 shifts by minus its value on C'.
    const auto& Y = s.map().source();
    CharacterRep xi = s.y_lower().make(unit(3, idx(Y, {0, 1}), Rational(1, 3)), IntVector{});
    RelCharacterRep moved = s.act_on_II(xi, r);
    CHECK(holonomy_string(s.rel_holonomy(moved, hemisphere(s))) == "7/12");
    CHECK(s.same_type_III(r, moved).same);
    CHECK_FALSE(s.equal_II(r, moved));
}

TEST_CASE("relative validation names the offending simplex") {
    RelativeCharacterSpace s(fixtures::point_in_circle(), 1);
    CHECK_THROWS_WITH_AS(s.make_relative(RatVector(2), RatVector(1), IntVector{}, IntVector{}),
                         doctest::Contains("T_X needs 3 values"), ValidationError);
    RelativeCharacterSpace e(fixtures::equator(), 1);
    const auto& Y = e.map().source();
    IntVector cy(3);
    cy[idx(Y, {0, 1})] = 1;
    CHECK_NOTHROW(e.make_relative(RatVector(6), RatVector(3), IntVector(4), cy));
    CHECK_THROWS_WITH_AS(e.make_relative(RatVector(6), RatVector(3), IntVector(4), cy, RelType::I),
                         doctest::Contains("simplex [0,1] of Y"), ValidationError);
    // An exact ρ has zero periods; half an edge of the equator does not.
    RatVector ty(3);
    ty[0] = Rational(1, 2);
    CHECK_NOTHROW(e.make_relative(RatVector(6), ty, IntVector(4), IntVector(3), RelType::IIprime));
    RatVector tx(6);
    tx[idx(e.map().target(), {0, 1})] = Rational(1, 2);
    CHECK_THROWS_WITH_AS(e.make_relative(tx, RatVector(3), IntVector(4), IntVector(3), RelType::IIprime),
                         doctest::Contains("integral periods"), ValidationError);
    CHECK_THROWS_AS(RelativeCharacterSpace(fixtures::equator(), 0), ValidationError);
    CHECK(parse_rel_type("II'") == RelType::IIprime);
    CHECK_THROWS_AS(parse_rel_type("V"), ValidationError);
}

TEST_CASE("membership of a curvature pair in the integral lattice") {
    RelativeCharacterSpace s(fixtures::equator(), 1);
    const auto& X = s.map().target();
    std::size_t top = idx(X, {0, 1, 2});
    CHECK_FALSE(s.in_lambda_omega(unit(4, top, Rational(5, 6)), RatVector(3)));
    CHECK(s.in_lambda_omega(unit(4, top, 1), RatVector(3)));
    // 1/3 on the top face is cancelled on the hemisphere by 1/3 on the equator,
    // but the whole sphere still sees 1/3.
    RatVector rho(3);
    rho[0] = Rational(1, 3);
    CHECK_FALSE(s.in_lambda_omega(unit(4, top, Rational(1, 3)), rho));
}

TEST_CASE("type III comparison on a point in the circle") {
    RelativeCharacterSpace s(fixtures::point_in_circle(), 1);
    const auto& X = s.map().target();
    RelCharacterRep a = s.zero(RelType::II);
    RelCharacterRep b = s.make_relative(unit(3, idx(X, {0, 1}), Rational(1, 3)), RatVector(1), IntVector{}, IntVector{});
    auto cmp = s.same_type_III(a, b);
    CHECK_FALSE(cmp.same);
    CHECK_FALSE(cmp.witness.has_value());

    RelCharacterRep c = s.make_relative(RatVector(3), RatVector{Rational(2, 5)}, IntVector{}, IntVector{});
    auto ok = s.same_type_III(a, c);
    REQUIRE(ok.same);
    CHECK(s.equal_II(s.act_on_II(*ok.witness, a), c));
}

TEST_CASE("full type III action kills integral Bocksteins on the torus identity") {
    SimplicialComplex T = fixtures::torus7();
    RelativeCharacterSpace s(fixtures::identity(T), 2);
    IntMatrix cocycles = integer_kernel_basis(s.cone().y().coboundary(2));
    REQUIRE(cocycles.cols() > 0);
    CharacterRep xi{1, RatVector(T.count(1)), cocycles.col(0)};
    RelCharacterRep b = s.bockstein(xi);
    CHECK(s.same_type_III(s.zero(RelType::II), b).same);
    CHECK_FALSE(s.equal_II(s.zero(RelType::II), b));
}

TEST_CASE("phi_f of an exact form and the two denominator routes") {
    RelativeCharacterSpace s(fixtures::equator(), 1);
    const auto& X = s.map().target();
    RatVector half(4);
    half[1] = Rational(1, 2);
    RatVector rt = s.cone().x().coboundary(0) * half;
    RelCharacterRep r = s.phi_f(rt);
    IntVector C(6), Cp(3);
    C[idx(X, {0, 1})] = 1;
    Cp[0] = 1;
    Cp[1] = -1;
    CHECK(holonomy_string(s.rel_holonomy(r, RelativeCycle{Chain{1, C}, Chain{0, Cp}})) == "1/2");
    CHECK(s.hbar_numerator_member(r));
    auto via_denominator = s.hbar_denominator_member(r);
    REQUIRE(via_denominator.has_value());
    CHECK(s.equal_II(r, s.phi_f(*via_denominator)));
    auto via_iv = s.same_type_IV(r, s.zero(RelType::IIprime));
    CHECK(via_iv.same);

    RatVector bad = unit(6, 0, Rational(1, 2));
    CHECK_THROWS_AS(s.phi_f(bad), PreconditionError);
}

TEST_CASE("type IV separates characters with different periods") {
    RelativeCharacterSpace s(fixtures::point_in_circle(), 1);
    const auto& X = s.map().target();
    RelCharacterRep a = s.zero(RelType::IIprime);
    RelCharacterRep b = s.make_relative(unit(3, idx(X, {0, 1}), Rational(1, 3)), RatVector(1), IntVector{}, IntVector{},
                                        RelType::IIprime);
    CHECK_FALSE(s.same_type_IV(a, b).same);
    RelCharacterRep c = s.make_relative(unit(3, idx(X, {0, 1}), 1), RatVector(1), IntVector{}, IntVector{});
    auto w = s.same_type_IV(c, a);
    REQUIRE(w.same);
    CHECK(s.is_integral_form_on_x(*w.rho_tilde));
}

TEST_CASE("completion of a form to a type II character") {
    for (auto f : {fixtures::equator(), fixtures::doubling()}) {
        RelativeCharacterSpace s(f, 1);
        Rng rng(11);
        RatVector rho = random_rational(rng, s.cone().y().dim(1));
        auto r = s.complete_to_type_II(rho);
        REQUIRE(r.has_value());
        CHECK(s.rho(*r) == rho);
    }
}

TEST_CASE("property: gauge invariance of relative holonomy and curvature") {
    for (const auto& [name, f] : fixtures::corpus()) {
        for (int p = 1; p <= 2; ++p) {
            RelativeCharacterSpace s(f, p);
            Rng rng(derive_seed(7, static_cast<std::uint64_t>(p)));
            const auto& K = s.cone().complex();
            auto cycles = relative_cycles(s, p);
            for (int trial = 0; trial < 4; ++trial) {
                RelCharacterRep r = random_relative(s, rng);
                CharacterRep g = s.cone_characters().gauge(s.to_cone(r), random_rational(rng, K.dim(p - 1)),
                                                           random_integer(rng, K.dim(p)));
                RelCharacterRep rg = s.from_cone(g);
                CHECK_MESSAGE(s.omega(rg) == s.omega(r), name);
                CHECK_MESSAGE(s.rho(rg) == s.rho(r), name);
                for (const auto& z : cycles) CHECK_MESSAGE(s.rel_holonomy(rg, z) == s.rel_holonomy(r, z), name);
                CHECK(s.equal_II(r, rg));
            }
        }
    }
}

TEST_CASE("property: holonomy on a relative boundary is the curvature integral") {
    for (const auto& [name, f] : fixtures::corpus()) {
        for (int p = 1; p <= 2; ++p) {
            RelativeCharacterSpace s(f, p);
            Rng rng(derive_seed(13, static_cast<std::uint64_t>(p)));
            const auto& K = s.cone().complex();
            for (int trial = 0; trial < 4; ++trial) {
                RelCharacterRep r = random_relative(s, rng);
                IntVector b = random_integer(rng, K.dim(p + 1));
                IntVector z = K.coboundary(p).transpose() * b;
                auto [C, Cp] = s.cone().split(z, p);
                auto [B, Bp] = s.cone().split(b, p + 1);
                Rational lhs = s.rel_holonomy(r, RelativeCycle{Chain{p, C}, Chain{p - 1, Cp}});
                Rational rhs = frac(Rational(dot(s.omega(r), B) + dot(s.rho(r), Bp)));
                CHECK_MESSAGE(lhs == rhs, name);
            }
        }
    }
}

TEST_CASE("triviality certificates in both directions") {
    SimplicialComplex S = fixtures::circle(3);
    auto s0 = character_space(S, 0);
    TrivialityCertificate c0 = s0.certify_triviality(s0.make(RatVector{2, 2, 2}, IntVector(3)));
    CHECK(c0.trivial);
    CHECK(c0.u == IntVector{2, 2, 2});
    TrivialityCertificate half = s0.certify_triviality(s0.make(RatVector{Rational(1, 2), Rational(1, 2), Rational(1, 2)}, IntVector(3)));
    CHECK_FALSE(half.trivial);
    REQUIRE(half.cycle.has_value());
    CHECK(half.value == Rational(1, 2));

    auto s1 = character_space(S, 1);
    Rng rng(5);
    for (int k = 0; k < 10; ++k) {
        CharacterRep g = s1.gauge(s1.zero(), random_rational(rng, 3), random_integer(rng, 3));
        CHECK(s1.certify_triviality(g).trivial);
    }
    TrivialityCertificate loop = s1.certify_triviality(s1.make(unit(3, idx(S, {0, 1}), Rational(1, 3)), IntVector{}));
    CHECK_FALSE(loop.trivial);
    CHECK(loop.value == Rational(1, 3));

    auto t1 = character_space(fixtures::triangle(), 1);
    TrivialityCertificate curved = t1.certify_triviality(t1.make(RatVector{Rational(1, 5), 0, 0}, IntVector(1)));
    CHECK_FALSE(curved.trivial);
    REQUIRE(curved.curvature_simplex.has_value());
    CHECK(abs(curved.value) == Rational(1, 5));
}
