#pragma once

#include "delcoh/algebra/block_system.hpp"
#include "delcoh/algebra/mixed.hpp"
#include "delcoh/algebra/random.hpp"
#include "delcoh/cone/cone.hpp"
#include "delcoh/report.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace delcoh::sequences {

// A group given by representatives modulo gauge:
//   elements  x ∈ Q^dim with valid_eq x = 0 and valid_cong x ∈ Z^k,
//   zero      x = gauge s for some s with gauge_eq s = 0 and gauge_cong s ∈ Z.
// Character groups, relative character groups, their quotients and ordinary
// cohomology groups all fit this shape.
struct GroupModel {
    std::string label;
    std::size_t dim = 0;
    RatMatrix valid_eq, valid_cong;
    std::size_t gauge_dim = 0;
    RatMatrix gauge, gauge_eq, gauge_cong;
    // Integer cochain description (d_in, d_out) when the group is H^n(-;Z).
    std::optional<cone::FGNode> fg;

    // Appends constraints or gauge directions; shapes are checked.
    void add_valid_eq(const RatMatrix& rows);
    void add_valid_cong(const RatMatrix& rows);
    // New gauge parameters: x += map * t, subject to eq t = 0 and cong t ∈ Z.
    void add_gauge(const RatMatrix& map, const RatMatrix& eq, const RatMatrix& cong);
};

GroupModel zero_group(const std::string& label);

// Exact solvers for one group: membership, triviality and random elements.
class Group {
public:
    explicit Group(GroupModel model);

    const GroupModel& model() const { return model_; }
    const std::string& label() const { return model_.label; }
    std::size_t dim() const { return model_.dim; }

    bool is_valid(const RatVector& x) const;
    // Gauge parameters s with x = gauge s, or nullopt when x is nonzero in the group.
    std::optional<RatVector> zero_witness(const RatVector& x) const;
    bool is_zero(const RatVector& x) const { return zero_witness(x).has_value(); }

    // Generators (rational directions, then lattice directions) and samples of
    // the valid representatives and of the gauge parameters.
    std::vector<RatVector> generators() const;
    RatVector sample(Rng& rng) const { return elements_.sample(rng); }
    std::vector<RatVector> gauge_generators() const;
    RatVector sample_gauge(Rng& rng) const { return gauge_params_.sample(rng); }

private:
    GroupModel model_;
    MixedSolver elements_, zero_, gauge_params_;
};

// Linear map between representatives. `cochain` is the integer cochain map
// when both ends are finitely generated cohomology groups.
struct Hom {
    std::string label;
    RatMatrix matrix;
    std::optional<IntMatrix> cochain;
};

Hom compose(const Hom& second, const Hom& first, const std::string& label);
Hom difference(const Hom& a, const Hom& b, const std::string& label);

struct CheckOptions {
    std::size_t samples = 20;
    std::uint64_t seed = 0;
};

// x ∈ A valid ⇒ h(x) valid in B, and h(gauge of A) is zero in B.
CheckReport check_map(const Group& A, const Hom& h, const Group& B, const CheckOptions& opt);

// Exactness at B of A -a-> B -b-> C: b∘a = 0 on generators and samples of A;
// every kernel element of b (generators and samples) has a verified preimage.
// When all three groups and both maps are integral cochain data the
// finitely generated invariants are compared too.
CheckReport check_exact(const Group& A, const Hom& a, const Group& B, const Hom& b, const Group& C,
                        const CheckOptions& opt);

// h is zero as a map of groups: h(x) is zero in B for generators and samples.
CheckReport check_zero_map(const Group& A, const Hom& h, const Group& B, const CheckOptions& opt,
                           const std::string& kind, const std::string& label);

// Serialization used in witnesses.
std::string vector_string(const RatVector& v);

// Building blocks for the models over a cochain complex.
namespace models {

using simplicial::CochainComplex;

// Absolute character of degree n: x = [T (K^n); c (K^{n+1})].
GroupModel character(const CochainComplex& K, int n, const std::string& label);
// Flat characters: δT + c = 0. The group is H^n(K; Q/Z) ⊂ H^n(K; R/Z).
GroupModel flat(const CochainComplex& K, int n, const std::string& label);
// H^n(K; Z): x = c ∈ Z^{K^n}, δc = 0, modulo δ of integral cochains.
GroupModel integer(const CochainComplex& K, int n, const std::string& label);

// Layout helpers for characters of degree n: rows selecting T and c.
RatMatrix select_T(const CochainComplex& K, int n);
RatMatrix select_c(const CochainComplex& K, int n);
// Curvature δT + c as a matrix on [T; c].
RatMatrix curvature(const CochainComplex& K, int n);

}  // namespace models

}  // namespace delcoh::sequences
