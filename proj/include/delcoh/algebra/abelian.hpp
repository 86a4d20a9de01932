#pragma once

#include "delcoh/algebra/matrix.hpp"
#include "delcoh/algebra/smith.hpp"

#include <string>
#include <vector>

namespace delcoh {

// Z^free_rank + Z/t_1 + ... with t_1 | t_2 | ... and every t_i > 1.
struct FGAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;
    // One ambient vector per generator: torsion generators first (matching
    // `torsion`), then the free generators.
    std::vector<IntVector> generator_witnesses;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool same_invariants(const FGAbelianGroup& other) const {
        return free_rank == other.free_rank && torsion == other.torsion;
    }
    // "0", "Z", "Z^2", "Z/2", "Z^2 ⊕ Z/2 ⊕ Z/4"
    std::string to_string() const;
    // Same shape with Q in place of Z; torsion is dropped.
    std::string to_string_rational() const;
};

// (R/Z)^torus_rank + finite torsion.
struct RZModuleInvariants {
    std::size_t torus_rank = 0;
    std::vector<Integer> torsion;

    bool is_trivial() const { return torus_rank == 0 && torsion.empty(); }
    std::string to_string() const;
};

// Structure of Z^rows / im(A).
FGAbelianGroup cokernel_structure(const IntMatrix& A);

// ker(d_out) / im(d_in) for integer matrices with d_out * d_in = 0, with
// coordinates in the Smith-adapted generators.
class Subquotient {
public:
    Subquotient(const IntMatrix& d_in, const IntMatrix& d_out);

    const FGAbelianGroup& structure() const { return group_; }
    std::size_t ambient_dim() const { return ambient_; }
    // Number of generators (torsion first, then free).
    std::size_t generator_count() const { return order_.size(); }
    // Order of generator i, 0 for free generators.
    const Integer& generator_order(std::size_t i) const { return orders_[i]; }
    const IntVector& generator(std::size_t i) const { return group_.generator_witnesses[i]; }

    bool is_cocycle(const IntVector& c) const;
    // Coordinates of a cocycle; torsion coordinates reduced into [0, order).
    // Throws std::invalid_argument if c is not in the kernel.
    IntVector coordinates(const IntVector& c) const;
    bool is_trivial(const IntVector& c) const { return is_zero(coordinates(c)); }

private:
    std::size_t ambient_;
    IntMatrix d_out_;
    IntMatrix kernel_basis_;      // ambient x k
    IntMatrix kernel_left_inv_;   // k x ambient, integral left inverse of kernel_basis_
    SmithDecomposition relation_snf_;
    std::vector<std::size_t> order_;  // indices into the Smith diagonal, in generator order
    std::vector<Integer> orders_;
    FGAbelianGroup group_;
};

}  // namespace delcoh
