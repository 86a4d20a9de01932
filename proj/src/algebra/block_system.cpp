#include "delcoh/algebra/block_system.hpp"

#include <stdexcept>

namespace delcoh {

std::size_t BlockSystem::unknown(std::size_t size, bool integral) {
    offsets_.push_back(unknown_count());
    sizes_.push_back(size);
    integral_.push_back(integral);
    return offsets_.size() - 1;
}

std::size_t BlockSystem::equations(std::size_t rows, const std::vector<Term>& terms) {
    eqs_.push_back({rows, terms});
    return eqs_.size() - 1;
}

std::size_t BlockSystem::congruences(std::size_t rows, const std::vector<Term>& terms) {
    congs_.push_back({rows, terms});
    return congs_.size() - 1;
}

RatMatrix BlockSystem::build(const std::vector<Group>& groups, bool with_integrality) const {
    std::size_t rows = 0;
    for (const auto& g : groups) rows += g.rows;
    if (with_integrality)
        for (std::size_t b = 0; b < sizes_.size(); ++b)
            if (integral_[b]) rows += sizes_[b];
    RatMatrix m(rows, unknown_count());
    std::size_t r = 0;
    for (const auto& g : groups) {
        for (const auto& [id, mat] : g.terms) {
            if (mat.rows() != g.rows || mat.cols() != sizes_.at(id))
                throw std::invalid_argument("BlockSystem: block has wrong shape");
            m.set_block(r, offsets_[id], mat);
        }
        r += g.rows;
    }
    if (with_integrality)
        for (std::size_t b = 0; b < sizes_.size(); ++b) {
            if (!integral_[b]) continue;
            for (std::size_t i = 0; i < sizes_[b]; ++i) m(r + i, offsets_[b] + i) = 1;
            r += sizes_[b];
        }
    return m;
}

RatMatrix BlockSystem::A() const { return build(eqs_, false); }
RatMatrix BlockSystem::M() const { return build(congs_, true); }

RatVector BlockSystem::stack(const std::vector<Group>& groups, const std::vector<std::pair<std::size_t, RatVector>>& parts,
                             bool with_integrality) const {
    std::vector<std::size_t> start;
    std::size_t rows = 0;
    for (const auto& g : groups) {
        start.push_back(rows);
        rows += g.rows;
    }
    if (with_integrality)
        for (std::size_t b = 0; b < sizes_.size(); ++b)
            if (integral_[b]) rows += sizes_[b];
    RatVector v(rows);
    for (const auto& [id, vals] : parts) {
        if (vals.size() != groups.at(id).rows) throw std::invalid_argument("BlockSystem: rhs block has wrong length");
        for (std::size_t i = 0; i < vals.size(); ++i) v[start[id] + i] = vals[i];
    }
    return v;
}

RatVector BlockSystem::rhs(const std::vector<std::pair<std::size_t, RatVector>>& parts) const {
    return stack(eqs_, parts, false);
}

RatVector BlockSystem::congruence_rhs(const std::vector<std::pair<std::size_t, RatVector>>& parts) const {
    return stack(congs_, parts, true);
}

RatVector BlockSystem::block(const RatVector& y, std::size_t id) const {
    return RatVector(y.begin() + static_cast<std::ptrdiff_t>(offsets_.at(id)),
                     y.begin() + static_cast<std::ptrdiff_t>(offsets_.at(id) + sizes_.at(id)));
}

RatVector BlockSystem::assemble(const std::vector<std::pair<std::size_t, RatVector>>& parts) const {
    RatVector y(unknown_count());
    for (const auto& [id, vals] : parts) {
        if (vals.size() != sizes_.at(id)) throw std::invalid_argument("BlockSystem: block has wrong length");
        for (std::size_t i = 0; i < vals.size(); ++i) y[offsets_[id] + i] = vals[i];
    }
    return y;
}

RatMatrix rat(const IntMatrix& m) { return to_rational(m); }

RatMatrix embed(std::size_t rows, std::size_t cols, std::size_t r0, std::size_t c0, std::size_t k, const Rational& s) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < k; ++i) m(r0 + i, c0 + i) = s;
    return m;
}

}  // namespace delcoh
