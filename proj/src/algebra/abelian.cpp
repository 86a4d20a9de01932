#include "delcoh/algebra/abelian.hpp"

#include <stdexcept>

namespace delcoh {

namespace {

std::string format_group(const char* base, std::size_t free_rank, const std::vector<Integer>& torsion,
                         bool parenthesize_free) {
    std::string out;
    if (free_rank > 0) {
        out = parenthesize_free ? std::string("(") + base + ")" : std::string(base);
        if (free_rank == 1 && parenthesize_free) out = base;
        if (free_rank > 1) out += "^" + std::to_string(free_rank);
    }
    for (const auto& t : torsion) {
        if (!out.empty()) out += " ⊕ ";
        out += "Z/" + t.get_str();
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string FGAbelianGroup::to_string() const { return format_group("Z", free_rank, torsion, false); }

std::string FGAbelianGroup::to_string_rational() const { return format_group("Q", free_rank, {}, false); }

std::string RZModuleInvariants::to_string() const { return format_group("R/Z", torus_rank, torsion, true); }

FGAbelianGroup cokernel_structure(const IntMatrix& A) {
    SmithDecomposition snf = smith_normal_form(A);
    FGAbelianGroup g;
    const std::size_t m = A.rows();
    for (std::size_t i = 0; i < snf.rank; ++i) {
        if (snf.D(i, i) == 1) continue;
        g.torsion.push_back(snf.D(i, i));
        g.generator_witnesses.push_back(snf.U_inv.col(i));
    }
    g.free_rank = m - snf.rank;
    for (std::size_t i = snf.rank; i < m; ++i) g.generator_witnesses.push_back(snf.U_inv.col(i));
    return g;
}

Subquotient::Subquotient(const IntMatrix& d_in, const IntMatrix& d_out)
    : ambient_(d_out.cols()), d_out_(d_out) {
    if (d_in.rows() != ambient_) throw std::invalid_argument("Subquotient: incompatible matrices");
    kernel_basis_ = integer_kernel_basis(d_out);
    const std::size_t k = kernel_basis_.cols();

    SmithDecomposition ksnf = smith_normal_form(kernel_basis_);
    if (ksnf.rank != k) throw std::logic_error("Subquotient: kernel basis is not of full rank");
    for (std::size_t i = 0; i < k; ++i)
        if (ksnf.D(i, i) != 1) throw std::logic_error("Subquotient: kernel basis is not saturated");
    kernel_left_inv_ = ksnf.V * ksnf.U.block(0, 0, k, ambient_);

    IntMatrix relations = kernel_left_inv_ * d_in;
    if (!(kernel_basis_ * relations == d_in))
        throw std::invalid_argument("Subquotient: image of d_in is not inside ker d_out");
    relation_snf_ = smith_normal_form(relations);

    for (std::size_t i = 0; i < relation_snf_.rank; ++i) {
        const Integer& d = relation_snf_.D(i, i);
        if (d == 1) continue;
        order_.push_back(i);
        orders_.push_back(d);
        group_.torsion.push_back(d);
    }
    for (std::size_t i = relation_snf_.rank; i < k; ++i) {
        order_.push_back(i);
        orders_.push_back(0);
    }
    group_.free_rank = k - relation_snf_.rank;
    for (std::size_t idx : order_) group_.generator_witnesses.push_back(kernel_basis_ * relation_snf_.U_inv.col(idx));
}

bool Subquotient::is_cocycle(const IntVector& c) const {
    if (c.size() != ambient_) return false;
    return is_zero(d_out_ * c);
}

IntVector Subquotient::coordinates(const IntVector& c) const {
    if (c.size() != ambient_) throw std::invalid_argument("Subquotient::coordinates: wrong length");
    IntVector x = kernel_left_inv_ * c;
    if (!(kernel_basis_ * x == c)) throw std::invalid_argument("Subquotient::coordinates: not a cocycle");
    IntVector y = relation_snf_.U * x;
    IntVector out(order_.size());
    for (std::size_t g = 0; g < order_.size(); ++g) {
        const Integer& value = y[order_[g]];
        const Integer& d = orders_[g];
        if (d == 0) {
            out[g] = value;
        } else {
            Integer r = value % d;
            if (r < 0) r += d;
            out[g] = r;
        }
    }
    return out;
}

}  // namespace delcoh
