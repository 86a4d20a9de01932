#include "delcoh/simplicial/cochain_complex.hpp"

#include "delcoh/algebra/smith.hpp"
#include "delcoh/errors.hpp"

#include <stdexcept>

namespace delcoh::simplicial {

CochainComplex::CochainComplex(std::vector<std::size_t> dims, std::vector<IntMatrix> coboundaries)
    : dims_(std::move(dims)), d_(std::move(coboundaries)) {
    if (d_.size() != dims_.size()) throw std::invalid_argument("CochainComplex: need one coboundary per degree");
    for (std::size_t n = 0; n < d_.size(); ++n) {
        std::size_t next = n + 1 < dims_.size() ? dims_[n + 1] : 0;
        if (d_[n].rows() != next || d_[n].cols() != dims_[n])
            throw std::invalid_argument("CochainComplex: coboundary " + std::to_string(n) + " has wrong shape");
    }
}

std::size_t CochainComplex::dim(int n) const {
    if (n < 0 || n >= static_cast<int>(dims_.size())) return 0;
    return dims_[static_cast<std::size_t>(n)];
}

IntMatrix CochainComplex::coboundary(int n) const {
    if (n >= 0 && n < static_cast<int>(d_.size())) return d_[static_cast<std::size_t>(n)];
    return IntMatrix(dim(n + 1), dim(n));
}

IntMatrix CochainComplex::cycle_basis(int n) const { return integer_kernel_basis(boundary(n)); }

IntMatrix boundary_matrix(const SimplicialComplex& K, int n) {
    if (n < 0 || n > K.dimension())
        throw std::out_of_range("boundary_matrix: degree " + std::to_string(n) + " outside [0, " +
                                std::to_string(K.dimension()) + "]");
    IntMatrix m(K.count(n - 1), K.count(n));
    if (n == 0) return m;
    const auto& cells = K.simplices(n);
    for (std::size_t j = 0; j < cells.size(); ++j)
        for (std::size_t i = 0; i < cells[j].size(); ++i) {
            Simplex face = cells[j];
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            m(*K.index_of(face), j) = (i % 2 == 0) ? 1 : -1;
        }
    return m;
}

IntMatrix induced_cochain_map(const SimplicialMap& f, int n) { return f.chain_map(n).transpose(); }

CochainComplex cochain_complex(const SimplicialComplex& K) {
    std::vector<std::size_t> dims;
    std::vector<IntMatrix> d;
    for (int n = 0; n <= K.dimension(); ++n) {
        dims.push_back(K.count(n));
        if (n < K.dimension()) d.push_back(boundary_matrix(K, n + 1).transpose());
        else d.emplace_back(0, K.count(n));
    }
    return CochainComplex(std::move(dims), std::move(d));
}

Chain boundary_chain(const SimplicialComplex& K, const Chain& c) {
    if (c.coefficients.size() != K.count(c.degree))
        throw ValidationError("chain of degree " + std::to_string(c.degree) + " has wrong length");
    if (c.degree <= 0 || c.degree > K.dimension()) return Chain{c.degree - 1, IntVector(K.count(c.degree - 1))};
    return Chain{c.degree - 1, boundary_matrix(K, c.degree) * c.coefficients};
}

std::string CohomologyGroup::to_string() const {
    switch (coeff) {
        case Coefficients::Z: return group.to_string();
        case Coefficients::Q: return group.to_string_rational();
        case Coefficients::RZ: return rz.to_string();
    }
    return "?";
}

CohomologyGroup cohomology(const CochainComplex& K, int n, Coefficients coeff) {
    CohomologyGroup out;
    out.coeff = coeff;
    Subquotient h(K.coboundary(n - 1), K.coboundary(n));
    switch (coeff) {
        case Coefficients::Z: out.group = h.structure(); break;
        case Coefficients::Q: {
            const auto& g = h.structure();
            out.group.free_rank = g.free_rank;
            out.group.generator_witnesses.assign(g.generator_witnesses.end() - static_cast<std::ptrdiff_t>(g.free_rank),
                                                 g.generator_witnesses.end());
            break;
        }
        case Coefficients::RZ: {
            out.rz.torus_rank = h.structure().free_rank;
            // Torsion of H^n(K; R/Z) is the torsion of H_n, read off from the invariant factors of δ^n.
            auto snf = smith_normal_form(K.coboundary(n));
            for (std::size_t i = 0; i < snf.rank; ++i)
                if (snf.D(i, i) > 1) out.rz.torsion.push_back(snf.D(i, i));
            break;
        }
    }
    return out;
}

CohomologyGroup cohomology(const SimplicialComplex& K, int n, Coefficients coeff) {
    return cohomology(cochain_complex(K), n, coeff);
}

}  // namespace delcoh::simplicial
