#pragma once

#include "delcoh/algebra/abelian.hpp"
#include "delcoh/algebra/matrix.hpp"
#include "delcoh/simplicial/complex.hpp"

#include <string>
#include <vector>

namespace delcoh::simplicial {

// Bounded cochain complex of free abelian groups C^0 .. C^top with integer
// coboundaries. Degrees outside [0, top] are zero groups.
class CochainComplex {
public:
    CochainComplex() = default;
    // coboundaries[n] : C^n -> C^{n+1}, shape dims[n+1] x dims[n] (dims past the end are 0).
    CochainComplex(std::vector<std::size_t> dims, std::vector<IntMatrix> coboundaries);

    std::size_t dim(int n) const;
    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    // dim(n+1) x dim(n); a zero matrix of the right shape outside the stored range.
    IntMatrix coboundary(int n) const;
    // Boundary of the dual chain complex, C_n -> C_{n-1}: the transpose of coboundary(n-1).
    IntMatrix boundary(int n) const { return coboundary(n - 1).transpose(); }
    // Z-basis of the n-cycles of the dual chain complex, one per column.
    IntMatrix cycle_basis(int n) const;

private:
    std::vector<std::size_t> dims_;
    std::vector<IntMatrix> d_;
};

// ∂_n : C_n(K) -> C_{n-1}(K); throws std::out_of_range for n < 0 or n > dim K.
IntMatrix boundary_matrix(const SimplicialComplex& K, int n);

// f^# : C^n(target) -> C^n(source), the transpose of f_*.
IntMatrix induced_cochain_map(const SimplicialMap& f, int n);

CochainComplex cochain_complex(const SimplicialComplex& K);

// Boundary of a chain in K.
Chain boundary_chain(const SimplicialComplex& K, const Chain& c);

struct CohomologyGroup {
    Coefficients coeff = Coefficients::Z;
    FGAbelianGroup group;     // Z: full structure; Q: free_rank only
    RZModuleInvariants rz;    // RZ only
    std::string to_string() const;
};

CohomologyGroup cohomology(const CochainComplex& K, int n, Coefficients coeff);
CohomologyGroup cohomology(const SimplicialComplex& K, int n, Coefficients coeff);

}  // namespace delcoh::simplicial
