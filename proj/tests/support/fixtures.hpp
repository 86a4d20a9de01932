#pragma once

#include "delcoh/simplicial/complex.hpp"

#include <string>
#include <vector>

namespace fixtures {

using delcoh::simplicial::SimplicialComplex;
using delcoh::simplicial::SimplicialMap;

SimplicialComplex point();
SimplicialComplex empty();
SimplicialComplex circle(int n);        // n-gon, vertices 0..n-1
SimplicialComplex two_circles();        // triangles on 0,1,2 and 3,4,5
SimplicialComplex interval(int edges);  // path 0-1-...-edges
SimplicialComplex triangle();           // the 2-simplex [0,1,2]
SimplicialComplex tetrahedron_boundary();
SimplicialComplex torus7();
SimplicialComplex mobius5();
SimplicialComplex rp2_6();

// Equator [0,1,2] of the tetrahedron boundary.
SimplicialMap equator();
// Vertex 0 of the triangle circle.
SimplicialMap point_in_circle();
// Hexagon onto triangle, i -> i mod 3.
SimplicialMap doubling();
// Heptagon 0-1-...-6 onto the edges {i,i+1} of the 7-vertex torus.
SimplicialMap loop_in_torus();
SimplicialMap identity(const SimplicialComplex& K);
SimplicialMap empty_into(const SimplicialComplex& K);
// Two triangle circles folded onto one, i -> i mod 3.
SimplicialMap two_circles_onto_circle();

struct NamedMap {
    std::string name;
    SimplicialMap f;
};

// The maps used by the acceptance suite.
std::vector<NamedMap> corpus();

}  // namespace fixtures
