#pragma once

#include "delcoh/simplicial/complex.hpp"

#include <optional>
#include <vector>

namespace delcoh::simplicial {

// Relative p-cycle of f: Y -> X: C in C_p(X), C' in C_{p-1}(Y) with
// ∂C + f_* C' = 0 and ∂C' = 0.
struct RelativeCycle {
    Chain C;
    Chain C_prime;
    int degree() const { return C.degree; }
};

// Throws ValidationError on shape problems and PreconditionError naming the
// violated condition when the pair is not a relative cycle.
void validate_relative_cycle(const SimplicialMap& f, const RelativeCycle& z);

// Sum of the top simplices with the given signs (+1/-1), for a pure complex
// whose codimension-one faces lie in at most two top simplices. Throws
// PreconditionError naming the offending face otherwise, or when the signs are
// not coherent across an interior face.
Chain fundamental_class(const SimplicialComplex& M, const std::vector<int>& orientation);

// Coherent signs for the top simplices (first simplex of each component +1),
// or nullopt when the pseudomanifold is not orientable.
std::optional<std::vector<int>> orient_coherently(const SimplicialComplex& M);

// Subcomplex generated by codimension-one faces lying in exactly one top simplex.
SimplicialComplex boundary_complex(const SimplicialComplex& M);

// For g: M -> X and g': ∂M -> Y with g|∂M = f ∘ g', returns
// (g_*[M], -g'_*[∂M]), a relative cycle of degree dim M.
RelativeCycle pushforward_fundamental(const SimplicialMap& f, const SimplicialMap& g, const SimplicialMap& g_boundary,
                                      std::optional<std::vector<int>> orientation = std::nullopt);

}  // namespace delcoh::simplicial
