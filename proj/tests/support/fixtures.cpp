#include "fixtures.hpp"

namespace fixtures {

using delcoh::simplicial::make_map;
using delcoh::simplicial::Simplex;

SimplicialComplex point() { return SimplicialComplex::from_facets({{0}}); }

SimplicialComplex empty() { return SimplicialComplex(); }

SimplicialComplex circle(int n) {
    std::vector<Simplex> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return SimplicialComplex::from_facets(edges);
}

SimplicialComplex two_circles() {
    return SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

SimplicialComplex interval(int edges) {
    std::vector<Simplex> e;
    for (int i = 0; i < edges; ++i) e.push_back({i, i + 1});
    return SimplicialComplex::from_facets(e);
}

SimplicialComplex triangle() { return SimplicialComplex::from_facets({{0, 1, 2}}); }

SimplicialComplex tetrahedron_boundary() {
    return SimplicialComplex::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex torus7() {
    std::vector<Simplex> t;
    for (int i = 0; i < 7; ++i) {
        t.push_back({i, (i + 1) % 7, (i + 3) % 7});
        t.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::from_facets(t);
}

SimplicialComplex mobius5() {
    std::vector<Simplex> t;
    for (int i = 0; i < 5; ++i) t.push_back({i, (i + 1) % 5, (i + 2) % 5});
    return SimplicialComplex::from_facets(t);
}

SimplicialComplex rp2_6() {
    return SimplicialComplex::from_facets({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                           {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

SimplicialMap equator() { return make_map(circle(3), tetrahedron_boundary(), {{0, 0}, {1, 1}, {2, 2}}); }

SimplicialMap point_in_circle() { return make_map(point(), circle(3), {{0, 0}}); }

SimplicialMap doubling() {
    std::map<int, int> vm;
    for (int i = 0; i < 6; ++i) vm[i] = i % 3;
    return make_map(circle(6), circle(3), vm);
}

SimplicialMap loop_in_torus() {
    std::map<int, int> vm;
    for (int i = 0; i < 7; ++i) vm[i] = i;
    return make_map(circle(7), torus7(), vm);
}

SimplicialMap identity(const SimplicialComplex& K) {
    std::map<int, int> vm;
    for (int v : K.vertices()) vm[v] = v;
    return make_map(K, K, vm);
}

SimplicialMap empty_into(const SimplicialComplex& K) { return make_map(empty(), K, {}); }

SimplicialMap two_circles_onto_circle() {
    std::map<int, int> vm;
    for (int i = 0; i < 6; ++i) vm[i] = i % 3;
    return make_map(two_circles(), circle(3), vm);
}

std::vector<NamedMap> corpus() {
    return {
        {"equator", equator()},
        {"point_in_circle", point_in_circle()},
        {"doubling", doubling()},
        {"loop_in_torus", loop_in_torus()},
        {"identity_circle", identity(circle(3))},
        {"identity_sphere", identity(tetrahedron_boundary())},
        {"empty_into_torus", empty_into(torus7())},
        {"empty_into_rp2", empty_into(rp2_6())},
    };
}

}  // namespace fixtures
