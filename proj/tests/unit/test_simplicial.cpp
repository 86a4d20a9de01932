#include <doctest.h>

#include "delcoh/errors.hpp"
#include "delcoh/simplicial/cochain_complex.hpp"
#include "delcoh/simplicial/fundamental.hpp"

#include "../support/fixtures.hpp"
#include "../support/oracle.hpp"

using namespace delcoh;
using namespace delcoh::simplicial;

namespace {

std::string h(const SimplicialComplex& K, int n, Coefficients c = Coefficients::Z) {
    return cohomology(K, n, c).to_string();
}

}  // namespace

TEST_CASE("closure under faces and validation") {
    auto K = SimplicialComplex::from_facets({{2, 0, 1}});
    CHECK(K.dimension() == 2);
    CHECK(K.count(0) == 3);
    CHECK(K.count(1) == 3);
    CHECK(K.simplices(1)[0] == Simplex{0, 1});
    CHECK_THROWS_AS(SimplicialComplex::from_facets({{0, 0, 1}}), ValidationError);
    CHECK_THROWS_AS(SimplicialComplex::from_simplices({{0}, {0, 1}}), ValidationError);
    CHECK_NOTHROW(SimplicialComplex::from_simplices({{0}, {1}, {0, 1}}));
}

TEST_CASE("boundary squares to zero and coboundary is its transpose") {
    for (const auto& K : {fixtures::tetrahedron_boundary(), fixtures::torus7(), fixtures::rp2_6(), fixtures::mobius5()}) {
        for (int n = 1; n < K.dimension(); ++n) CHECK((boundary_matrix(K, n) * boundary_matrix(K, n + 1)).is_zero());
        auto C = cochain_complex(K);
        for (int n = 0; n < K.dimension(); ++n) CHECK(C.coboundary(n) == boundary_matrix(K, n + 1).transpose());
    }
    CHECK_THROWS_AS(boundary_matrix(fixtures::circle(3), 2), std::out_of_range);
    CHECK(boundary_matrix(fixtures::circle(3), 0).rows() == 0);
}

TEST_CASE("cohomology of the fixture spaces") {
    CHECK(h(fixtures::circle(3), 0) == "Z");
    CHECK(h(fixtures::circle(3), 1) == "Z");
    CHECK(h(fixtures::tetrahedron_boundary(), 1) == "0");
    CHECK(h(fixtures::tetrahedron_boundary(), 2) == "Z");
    CHECK(h(fixtures::torus7(), 1) == "Z^2");
    CHECK(h(fixtures::torus7(), 2) == "Z");
    CHECK(h(fixtures::mobius5(), 1) == "Z");
    CHECK(h(fixtures::mobius5(), 2) == "0");
    CHECK(h(fixtures::rp2_6(), 1) == "0");
    CHECK(h(fixtures::rp2_6(), 2) == "Z/2");
    CHECK(h(fixtures::rp2_6(), 2, Coefficients::Q) == "0");
    CHECK(h(fixtures::rp2_6(), 1, Coefficients::RZ) == "Z/2");
    CHECK(h(fixtures::rp2_6(), 2, Coefficients::RZ) == "0");
    CHECK(h(fixtures::torus7(), 1, Coefficients::RZ) == "(R/Z)^2");
    CHECK(h(fixtures::torus7(), 1, Coefficients::Q) == "Q^2");
    CHECK(h(fixtures::point(), 0) == "Z");
    CHECK(h(fixtures::empty(), 0) == "0");
}

TEST_CASE("cohomology agrees with the independent oracle") {
    for (const auto& K : {fixtures::circle(3), fixtures::circle(6), fixtures::interval(2), fixtures::tetrahedron_boundary(),
                          fixtures::torus7(), fixtures::mobius5(), fixtures::rp2_6(), fixtures::point()}) {
        for (int n = 0; n <= K.dimension() + 1; ++n) {
            CAPTURE(K.canonical_string());
            CAPTURE(n);
            CHECK(h(K, n) == oracle::integral_cohomology(K, n).to_string());
        }
    }
}

TEST_CASE("generator witnesses are cocycles that are not coboundaries") {
    auto K = fixtures::rp2_6();
    auto C = cochain_complex(K);
    auto g = cohomology(K, 2, Coefficients::Z).group;
    REQUIRE(g.generator_witnesses.size() == 1);
    Subquotient sq(C.coboundary(1), C.coboundary(2));
    CHECK_FALSE(sq.is_trivial(g.generator_witnesses[0]));
    CHECK(sq.is_trivial(add(g.generator_witnesses[0], g.generator_witnesses[0])));
}

TEST_CASE("induced cochain maps commute with coboundaries") {
    for (const auto& f : {fixtures::equator(), fixtures::doubling(), fixtures::loop_in_torus(), fixtures::point_in_circle()}) {
        auto X = cochain_complex(f.target());
        auto Y = cochain_complex(f.source());
        for (int n = 0; n <= f.target().dimension(); ++n)
            CHECK(induced_cochain_map(f, n + 1) * X.coboundary(n) == Y.coboundary(n) * induced_cochain_map(f, n));
    }
}

TEST_CASE("simplicial maps are validated") {
    CHECK_THROWS_AS(make_map(fixtures::circle(3), fixtures::interval(2), {{0, 0}, {1, 1}, {2, 2}}), ValidationError);
    CHECK_THROWS_AS(make_map(fixtures::circle(3), fixtures::circle(3), {{0, 0}, {1, 1}}), ValidationError);
    auto f = fixtures::doubling();
    auto img = f.image({2, 3});
    REQUIRE(img);
    CHECK(img->first == -1);
    CHECK(img->second == Simplex{0, 2});
}

TEST_CASE("fundamental classes") {
    auto T = fixtures::torus7();
    auto o = orient_coherently(T);
    REQUIRE(o);
    auto fund = fundamental_class(T, *o);
    CHECK(is_zero(boundary_chain(T, fund).coefficients));
    CHECK_FALSE(orient_coherently(fixtures::mobius5()));
    CHECK_FALSE(orient_coherently(fixtures::rp2_6()));

    std::vector<int> bad = *o;
    bad[0] = -bad[0];
    CHECK_THROWS_AS(fundamental_class(T, bad), PreconditionError);
    // Three triangles sharing an edge.
    auto book = SimplicialComplex::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    try {
        fundamental_class(book, {1, 1, 1});
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("[0,1]") != std::string::npos);
    }
    CHECK(boundary_complex(fixtures::triangle()) == fixtures::circle(3));
    CHECK(boundary_complex(T).empty());
}

TEST_CASE("pushforward of a disk onto the equator pair") {
    auto f = fixtures::equator();
    auto g = make_map(fixtures::triangle(), fixtures::tetrahedron_boundary(), {{0, 0}, {1, 1}, {2, 2}});
    auto gb = make_map(fixtures::circle(3), fixtures::circle(3), {{0, 0}, {1, 1}, {2, 2}});
    auto z = pushforward_fundamental(f, g, gb);
    CHECK(z.C.degree == 2);
    CHECK(z.C.coefficients[*f.target().index_of({0, 1, 2})] == 1);
    // C' = -([1,2] - [0,2] + [0,1])
    CHECK(z.C_prime.coefficients == IntVector{-1, 1, -1});
}

TEST_CASE("pushforward of an interval onto a loop through the marked point") {
    auto f = fixtures::point_in_circle();
    auto g = make_map(fixtures::interval(3), fixtures::circle(3), {{0, 0}, {1, 1}, {2, 2}, {3, 0}});
    auto gb = make_map(SimplicialComplex::from_facets({{0}, {3}}), fixtures::point(), {{0, 0}, {3, 0}});
    auto z = pushforward_fundamental(f, g, gb);
    // Loop 0 -> 1 -> 2 -> 0: [0,1] + [1,2] - [0,2]
    CHECK(z.C.coefficients == IntVector{1, -1, 1});
    CHECK(z.C_prime.coefficients == IntVector{0});
}

TEST_CASE("pushforward checks the factorization") {
    auto f = fixtures::point_in_circle();
    auto g = make_map(fixtures::interval(3), fixtures::circle(3), {{0, 0}, {1, 1}, {2, 2}, {3, 1}});
    auto gb = make_map(SimplicialComplex::from_facets({{0}, {3}}), fixtures::point(), {{0, 0}, {3, 0}});
    CHECK_THROWS_AS(pushforward_fundamental(f, g, gb), PreconditionError);
}

TEST_CASE("relative cycle validation names the violated condition") {
    auto f = fixtures::equator();
    RelativeCycle z{Chain{2, IntVector(4)}, Chain{1, IntVector{1, 0, 0}}};
    try {
        validate_relative_cycle(f, z);
        FAIL("expected failure");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("∂C + f_*C'") != std::string::npos);
    }
}
