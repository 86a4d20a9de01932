#include "delcoh/sequences/sequences.hpp"

#include "delcoh/errors.hpp"

#include <json.hpp>

#include <stdexcept>

namespace delcoh::sequences {

using characters::CharacterRep;
using characters::RelCharacterRep;
using characters::RelType;
using characters::TypeIIIComparison;
using characters::TypeIVComparison;
using simplicial::CochainComplex;

std::string to_string(SequenceTag t) {
    switch (t) {
        case SequenceTag::LES1: return "les1";
        case SequenceTag::LES2: return "les2";
        case SequenceTag::LES3: return "les3";
        case SequenceTag::LES4: return "les4";
        case SequenceTag::Diagram: return "diagram";
    }
    return "?";
}

SequenceTag parse_sequence_tag(const std::string& text) {
    if (text == "les1") return SequenceTag::LES1;
    if (text == "les2") return SequenceTag::LES2;
    if (text == "les3") return SequenceTag::LES3;
    if (text == "les4") return SequenceTag::LES4;
    if (text == "diagram") return SequenceTag::Diagram;
    throw ValidationError("unknown sequence \"" + text + "\" (expected les1, les2, les3, les4 or diagram)");
}

namespace {

std::string hat(const char* space, int n) { return std::string("Ĥ^") + std::to_string(n) + "(" + space + ")"; }

std::string coh(const char* space, int n, const char* ring) {
    return "H^" + std::to_string(n) + "(" + space + ";" + ring + ")";
}

IntMatrix pullback(const cone::ConeComplex& c, int n) {
    const IntMatrix& m = c.pullback(n);
    if (m.rows() == c.y().dim(n) && m.cols() == c.x().dim(n)) return m;
    return IntMatrix(c.y().dim(n), c.x().dim(n));
}

RatMatrix negated(RatMatrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
    return m;
}

RatMatrix hcat(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

// Block-diagonal placement of two matrices.
RatMatrix diag2(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

// Cone character of degree n -> X character of degree n.
RatMatrix project_cone_char(const cone::ConeComplex& c, int n) {
    const std::size_t kt = c.dim(n), xt = c.x().dim(n), xc = c.x().dim(n + 1);
    RatMatrix m(xt + xc, kt + c.dim(n + 1));
    for (std::size_t i = 0; i < xt; ++i) m(i, i) = 1;
    for (std::size_t i = 0; i < xc; ++i) m(xt + i, kt + i) = 1;
    return m;
}

// Y character of degree n -> cone character of degree n + 1: (t, e) ↦ (0, -t, 0, e).
RatMatrix bockstein_matrix(const cone::ConeComplex& c, int n) {
    const std::size_t yt = c.y().dim(n), ye = c.y().dim(n + 1);
    const std::size_t kt = c.dim(n + 1);
    RatMatrix m(kt + c.dim(n + 2), yt + ye);
    const std::size_t oT = c.x().dim(n + 1), oC = kt + c.x().dim(n + 2);
    for (std::size_t i = 0; i < yt; ++i) m(oT + i, i) = -1;
    for (std::size_t i = 0; i < ye; ++i) m(oC + i, yt + i) = 1;
    return m;
}

}  // namespace

ModelFactory::ModelFactory(const RelativeCharacterSpace& space) : s_(space) {}

std::size_t ModelFactory::rel_dim() const {
    const auto& c = s_.cone();
    return c.dim(degree()) + c.dim(degree() + 1);
}

RatMatrix ModelFactory::rho_rows() const {
    const auto& c = s_.cone();
    const int p = degree();
    RatMatrix curv = models::curvature(c.complex(), p);
    return curv.block(c.x().dim(p + 1), 0, c.y().dim(p), curv.cols());
}

GroupModel ModelFactory::hat_x(int n) const { return models::character(s_.cone().x(), n, hat("X", n)); }
GroupModel ModelFactory::hat_y(int n) const { return models::character(s_.cone().y(), n, hat("Y", n)); }
GroupModel ModelFactory::flat_x(int n) const { return models::flat(s_.cone().x(), n, coh("X", n, "R/Z")); }
GroupModel ModelFactory::flat_y(int n) const { return models::flat(s_.cone().y(), n, coh("Y", n, "R/Z")); }
GroupModel ModelFactory::flat_rel(int n) const {
    return models::flat(s_.cone().complex(), n, coh("X,Y", n, "R/Z"));
}
GroupModel ModelFactory::int_x(int n) const { return models::integer(s_.cone().x(), n, coh("X", n, "Z")); }
GroupModel ModelFactory::int_y(int n) const { return models::integer(s_.cone().y(), n, coh("Y", n, "Z")); }
GroupModel ModelFactory::int_rel(int n) const {
    return models::integer(s_.cone().complex(), n, coh("X,Y", n, "Z"));
}

GroupModel ModelFactory::type_II() const {
    return models::character(s_.cone().complex(), degree(), "II^" + std::to_string(degree()) + "(X,Y)");
}

GroupModel ModelFactory::type_I() const {
    GroupModel m = type_II();
    m.label = "I^" + std::to_string(degree()) + "(X,Y)";
    m.add_valid_eq(rho_rows());
    return m;
}

GroupModel ModelFactory::type_IIprime() const {
    GroupModel m = type_II();
    m.label = "II'^" + std::to_string(degree()) + "(X,Y)";
    const int p = degree();
    const auto& Y = s_.cone().y();
    RatMatrix rho = rho_rows();
    m.add_valid_eq(rat(Y.coboundary(p)) * rho);
    m.add_valid_cong(rat(Y.cycle_basis(p).transpose()) * rho);
    return m;
}

GroupModel ModelFactory::type_III_D() const {
    GroupModel m = type_II();
    m.label = "III_D^" + std::to_string(degree()) + "(X,Y)";
    const auto& c = s_.cone();
    const int p = degree();
    const std::size_t yt = c.y().dim(p - 1);
    m.add_gauge(embed(m.dim, yt, c.x().dim(p), 0, yt, -1), RatMatrix(0, yt), RatMatrix(0, yt));
    return m;
}

GroupModel ModelFactory::type_III() const {
    GroupModel m = type_II();
    m.label = "III^" + std::to_string(degree()) + "(X,Y)";
    const int p = degree();
    GroupModel y = hat_y(p - 1);
    m.add_gauge(bockstein_matrix(s_.cone(), p - 1), y.valid_eq, y.valid_cong);
    return m;
}

GroupModel ModelFactory::hbar() const {
    GroupModel m = type_IIprime();
    m.label = "H̄^" + std::to_string(degree()) + "(X,Y)";
    const int p = degree();
    GroupModel x = hat_x(p - 1);
    m.add_gauge(bockstein_matrix(s_.cone(), p - 1) * restrict_hat(p - 1).matrix, x.valid_eq, x.valid_cong);
    return m;
}

GroupModel ModelFactory::y_mod_flat_x() const {
    const int p = degree();
    GroupModel m = hat_y(p - 1);
    m.label = hat("Y", p - 1) + "/" + coh("X", p - 1, "R/Z");
    GroupModel fx = flat_x(p - 1);
    m.add_gauge(restrict_hat(p - 1).matrix, fx.valid_eq, fx.valid_cong);
    return m;
}

namespace {

GroupModel omega_node(const GroupModel& II, const RatMatrix& rho, const std::string& label) {
    GroupModel m;
    m.label = label;
    const std::size_t r = rho.rows(), w = II.dim;
    m.dim = r + w;
    m.valid_eq = RatMatrix(0, m.dim);
    m.valid_cong = RatMatrix(0, m.dim);
    m.add_valid_eq(hcat(RatMatrix::identity(r), negated(rho)));
    m.add_valid_eq(hcat(RatMatrix(II.valid_eq.rows(), r), II.valid_eq));
    m.add_valid_cong(hcat(RatMatrix(II.valid_cong.rows(), r), II.valid_cong));
    m.gauge = RatMatrix(m.dim, 0);
    m.gauge_eq = RatMatrix(0, 0);
    m.gauge_cong = RatMatrix(0, 0);
    return m;
}

}  // namespace

GroupModel ModelFactory::omega_f() const {
    GroupModel II = type_II();
    RatMatrix rho = rho_rows();
    GroupModel m = omega_node(II, rho, "Ω_f^" + std::to_string(degree()) + "(Y)");
    // (0, w') for type I representatives w'
    RatMatrix map = vstack(std::vector<RatMatrix>{RatMatrix(rho.rows(), II.dim), RatMatrix::identity(II.dim)});
    m.add_gauge(map, vstack(std::vector<RatMatrix>{II.valid_eq, rho}), II.valid_cong);
    return m;
}

GroupModel ModelFactory::omega_f_mod_int() const {
    GroupModel IIp = type_IIprime();
    RatMatrix rho = rho_rows();
    GroupModel m = omega_node(type_II(), rho, "Ω_f^" + std::to_string(degree()) + "(Y)/Ω_int");
    // (ρ(w'), w') for type II' representatives w'
    RatMatrix map = vstack(std::vector<RatMatrix>{rho, RatMatrix::identity(IIp.dim)});
    m.add_gauge(map, IIp.valid_eq, IIp.valid_cong);
    return m;
}

Hom ModelFactory::restrict_hat(int n) const {
    const auto& c = s_.cone();
    return Hom{"f^*", diag2(rat(pullback(c, n)), rat(pullback(c, n + 1))), std::nullopt};
}

Hom ModelFactory::bockstein_hat() const { return Hom{"β", bockstein_matrix(s_.cone(), degree() - 1), std::nullopt}; }

Hom ModelFactory::bockstein_flat(int n) const { return Hom{"β", bockstein_matrix(s_.cone(), n), std::nullopt}; }

Hom ModelFactory::project_flat_rel(int n) const {
    return Hom{"proj", project_cone_char(s_.cone(), n), std::nullopt};
}

Hom ModelFactory::restrict_flat(int n) const { return restrict_hat(n); }

Hom ModelFactory::project_II() const { return Hom{"proj", project_cone_char(s_.cone(), degree()), std::nullopt}; }

Hom ModelFactory::chern_y_of_x() const {
    const auto& c = s_.cone();
    const int p = degree();
    RatMatrix m(c.y().dim(p + 1), c.x().dim(p) + c.x().dim(p + 1));
    m.set_block(0, c.x().dim(p), rat(pullback(c, p + 1)));
    return Hom{"f^* c", m, std::nullopt};
}

Hom ModelFactory::chern_rel_of_y() const {
    const auto& c = s_.cone();
    const int p = degree();
    const std::size_t yt = c.y().dim(p), yc = c.y().dim(p + 1);
    RatMatrix m(c.dim(p + 2), yt + yc);
    for (std::size_t i = 0; i < yc; ++i) m(c.x().dim(p + 2) + i, yt + i) = 1;
    return Hom{"c ↦ (0, c)", m, std::nullopt};
}

Hom ModelFactory::int_connecting(int n) const {
    const auto& c = s_.cone();
    IntMatrix m(c.dim(n + 1), c.y().dim(n));
    for (std::size_t i = 0; i < c.y().dim(n); ++i) m(c.x().dim(n + 1) + i, i) = 1;
    return Hom{"e ↦ (0, e)", rat(m), m};
}

Hom ModelFactory::int_project(int n) const {
    const auto& c = s_.cone();
    IntMatrix m(c.x().dim(n), c.dim(n));
    for (std::size_t i = 0; i < c.x().dim(n); ++i) m(i, i) = 1;
    return Hom{"proj", rat(m), m};
}

Hom ModelFactory::int_restrict(int n) const {
    IntMatrix m = pullback(s_.cone(), n);
    return Hom{"f^*", rat(m), m};
}

Hom ModelFactory::bockstein_x_to_int_y() const {
    const auto& c = s_.cone();
    const int p = degree();
    RatMatrix m(c.y().dim(p), c.x().dim(p - 1) + c.x().dim(p));
    m.set_block(0, c.x().dim(p - 1), rat(pullback(c, p)));
    return Hom{"f^* c", m, std::nullopt};
}

Hom ModelFactory::int_y_into_II() const {
    const auto& c = s_.cone();
    const int p = degree();
    const std::size_t ye = c.y().dim(p);
    return Hom{"e ↦ (0, 0, 0, e)", embed(rel_dim(), ye, rel_dim() - ye, 0, ye), std::nullopt};
}

Hom ModelFactory::restrict_flat_to_hat() const { return restrict_hat(degree() - 1); }

Hom ModelFactory::identity(std::size_t n, const std::string& label) const {
    return Hom{label, RatMatrix::identity(n), std::nullopt};
}

Hom ModelFactory::rho_map() const {
    return Hom{"w ↦ (ρ(w), w)", vstack(std::vector<RatMatrix>{rho_rows(), RatMatrix::identity(rel_dim())}),
               std::nullopt};
}

namespace {

struct Entry {
    GroupModel model;
    Hom to_next;
};

Hom zero_hom(std::size_t rows, std::size_t cols) { return Hom{"0", RatMatrix(rows, cols), IntMatrix(rows, cols)}; }

void add_parameters(VerificationReport& rep, const SimplicialMap& f, int p, const VerifyOptions& opt) {
    rep.parameters.emplace_back("fixture_hash", cone::ConeComplex(f).fixture_hash());
    rep.parameters.emplace_back("p", std::to_string(p));
    rep.parameters.emplace_back("samples", std::to_string(opt.samples));
    rep.parameters.emplace_back("seed", std::to_string(opt.seed));
}

// Checks the maps leaving nodes first-1 .. n-2 and exactness at nodes first .. n-2.
void check_sequence(VerificationReport& rep, const std::vector<Entry>& seq, std::size_t first,
                    const VerifyOptions& opt) {
    std::vector<Group> groups;
    groups.reserve(seq.size());
    for (const auto& e : seq) groups.emplace_back(e.model);
    for (std::size_t i = first - 1; i + 1 < seq.size(); ++i) {
        CheckOptions o{opt.samples, derive_seed(opt.seed, i)};
        rep.checks.push_back(check_map(groups[i], seq[i].to_next, groups[i + 1], o));
    }
    for (std::size_t i = first; i + 1 < seq.size(); ++i) {
        CheckOptions o{opt.samples, derive_seed(opt.seed, 1000 + i)};
        rep.checks.push_back(check_exact(groups[i - 1], seq[i - 1].to_next, groups[i], seq[i].to_next, groups[i + 1], o));
    }
}

int top_degree(const cone::ConeComplex& c) { return std::max(c.x().top_degree(), c.y().top_degree() + 1); }

// H^{n}(X,Y;Z) -> H^n(X;Z) -> H^n(Y;Z) -> ... for n = from..top, then a zero node.
void integer_tail(std::vector<Entry>& seq, const ModelFactory& F, int from) {
    const int top = std::max(top_degree(F.space().cone()), from);
    for (int n = from; n <= top; ++n) {
        seq.push_back({F.int_rel(n), F.int_project(n)});
        seq.push_back({F.int_x(n), F.int_restrict(n)});
        seq.push_back({F.int_y(n), F.int_connecting(n)});
    }
    seq.back().to_next = zero_hom(0, seq.back().model.dim);
    seq.push_back({zero_group("0"), Hom{"0", RatMatrix(0, 0), std::nullopt}});
}

// 0 -> H^0(X,Y;R/Z) -> H^0(X;R/Z) -> H^0(Y;R/Z) -> ... ending at H^last(Y;R/Z), or at
// H^last(X;R/Z) when include_y_last is false. The last map is left for the caller.
void flat_head(std::vector<Entry>& seq, const ModelFactory& F, int last, bool include_y_last) {
    seq.push_back({zero_group("0"), zero_hom(F.flat_rel(0).dim, 0)});
    for (int n = 0; n <= last; ++n) {
        seq.push_back({F.flat_rel(n), F.project_flat_rel(n)});
        if (n == last && !include_y_last) {
            seq.push_back({F.flat_x(n), Hom{}});
            return;
        }
        seq.push_back({F.flat_x(n), F.restrict_flat(n)});
        seq.push_back({F.flat_y(n), F.bockstein_flat(n)});
    }
}

}  // namespace

VerificationReport verify_mixed_les(const SimplicialMap& f, int p, SequenceTag tag, const VerifyOptions& opt) {
    VerificationReport rep;
    rep.title = to_string(tag);
    add_parameters(rep, f, p, opt);
    if (p < 1) {
        rep.skip_reason = "degree p must be at least 1";
        return rep;
    }
    if (tag == SequenceTag::LES3 && p < 2) {
        rep.skip_reason = "the topological-trivialization sequence is modelled for p >= 2 only";
        return rep;
    }
    RelativeCharacterSpace space(f, p);
    ModelFactory F(space);
    std::vector<Entry> seq;
    const std::size_t first = 1;
    switch (tag) {
        case SequenceTag::LES1: {
            flat_head(seq, F, p - 1, true);
            seq.back().to_next = F.bockstein_flat(p - 1);
            seq.push_back({F.type_I(), F.project_II()});
            seq.push_back({F.hat_x(p), F.restrict_hat(p)});
            seq.push_back({F.hat_y(p), F.chern_rel_of_y()});
            integer_tail(seq, F, p + 2);
            break;
        }
        case SequenceTag::LES2: {
            flat_head(seq, F, p - 1, false);
            seq.back().to_next = F.restrict_flat_to_hat();
            seq.push_back({F.hat_y(p - 1), F.bockstein_hat()});
            seq.push_back({F.type_II(), F.project_II()});
            seq.push_back({F.hat_x(p), F.chern_y_of_x()});
            seq.push_back({F.int_y(p + 1), F.int_connecting(p + 1)});
            integer_tail(seq, F, p + 2);
            break;
        }
        case SequenceTag::LES3: {
            seq.push_back({F.flat_x(p - 1), F.bockstein_x_to_int_y()});
            seq.push_back({F.int_y(p), F.int_y_into_II()});
            seq.push_back({F.type_III_D(), F.project_II()});
            seq.push_back({F.hat_x(p), F.chern_y_of_x()});
            seq.push_back({F.int_y(p + 1), F.int_connecting(p + 1)});
            integer_tail(seq, F, p + 2);
            break;
        }
        default: throw std::invalid_argument("verify_mixed_les: not a mixed sequence");
    }
    check_sequence(rep, seq, first, opt);
    return rep;
}

namespace {

RelCharacterRep rep_of(const RelativeCharacterSpace& space, const RatVector& x, RelType type) {
    const std::size_t nt = space.cone().dim(space.degree());
    RatVector T(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(nt));
    RatVector c(x.begin() + static_cast<std::ptrdiff_t>(nt), x.end());
    return space.from_cone(CharacterRep{space.degree(), std::move(T), to_integer(c)}, type);
}

// Injectivity as exactness of 0 -> A -> B, surjectivity as exactness of A -> B -> 0.
CheckReport check_injective(const Group& A, const Hom& h, const Group& B, const CheckOptions& opt) {
    Group zero(zero_group("0"));
    CheckReport r = check_exact(zero, zero_hom(A.dim(), 0), A, h, B, opt);
    r.kind = "injective";
    r.label = h.label + ": " + A.label() + " -> " + B.label();
    return r;
}

CheckReport check_surjective(const Group& A, const Hom& h, const Group& B, const CheckOptions& opt) {
    Group zero(zero_group("0"));
    CheckReport r = check_exact(A, h, B, zero_hom(0, B.dim()), zero, opt);
    r.kind = "surjective";
    r.label = h.label + ": " + A.label() + " -> " + B.label();
    return r;
}

// 0 -> A -> B -> C -> 0
void short_exact(VerificationReport& rep, const GroupModel& A, const Hom& i, const GroupModel& B, const Hom& pi,
                 const GroupModel& C, const VerifyOptions& opt, std::uint64_t salt) {
    std::vector<Entry> seq;
    seq.push_back({zero_group("0"), zero_hom(A.dim, 0)});
    seq.push_back({A, i});
    seq.push_back({B, pi});
    seq.push_back({C, zero_hom(0, C.dim)});
    seq.push_back({zero_group("0"), Hom{"0", RatMatrix(0, 0), std::nullopt}});
    check_sequence(rep, seq, 1, VerifyOptions{opt.samples, derive_seed(opt.seed, salt)});
}

// The H̄ zero test of the group model against the type IV comparison and
// against membership in the denominator, on samples and on known-trivial elements.
CheckReport hbar_cross_check(const RelativeCharacterSpace& space, const Group& hbar, const VerifyOptions& opt) {
    CheckReport r;
    r.kind = "cross-check";
    r.label = "H̄ zero test";
    Rng rng(derive_seed(opt.seed, 7));
    const std::size_t n = std::max<std::size_t>(50, opt.samples);
    std::vector<RatVector> elems;
    for (std::size_t i = 0; i < n; ++i) elems.push_back(hbar.sample(rng));
    for (std::size_t i = 0; i < n / 2; ++i) elems.push_back(hbar.model().gauge * hbar.sample_gauge(rng));
    std::size_t trivial = 0;
    WitnessLog log;
    for (const auto& x : elems) {
        RelCharacterRep rep = rep_of(space, x, RelType::IIprime);
        const bool model = hbar.is_zero(x);
        const TypeIVComparison iv = space.same_type_IV(rep, space.zero(RelType::IIprime));
        bool quotient = false;
        if (space.hbar_numerator_member(rep)) {
            auto rt = space.hbar_denominator_member(rep);
            quotient = rt.has_value();
            if (rt) log.add(vector_string(*rt));
        }
        if (model) ++trivial;
        if (model != iv.same || model != quotient)
            r.fail("zero tests disagree on " + vector_string(x) + ": model " + std::to_string(model) + ", type IV " +
                   std::to_string(iv.same) + ", quotient " + std::to_string(quotient));
    }
    r.detail("elements", elems.size());
    r.detail("trivial", trivial);
    log.store(r);
    return r;
}

// The III zero test of the group model against the orbit comparison.
CheckReport iii_cross_check(const RelativeCharacterSpace& space, const ModelFactory& F, const Group& III,
                            const VerifyOptions& opt) {
    CheckReport r;
    r.kind = "cross-check";
    r.label = "III zero test";
    Rng rng(derive_seed(opt.seed, 8));
    Group II(F.type_II());
    Group y(F.hat_y(space.degree() - 1));
    const RatMatrix beta = F.bockstein_hat().matrix;
    const std::size_t n = std::max<std::size_t>(20, opt.samples);
    std::size_t same = 0;
    WitnessLog log;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        RatVector a = II.sample(rng);
        RatVector b;
        if (i < n) b = add(add(a, beta * y.sample(rng)), II.model().gauge * II.sample_gauge(rng));
        else b = II.sample(rng);
        const bool model = III.is_zero(sub(b, a));
        const TypeIIIComparison cmp = space.same_type_III(rep_of(space, a, RelType::II), rep_of(space, b, RelType::II));
        if (cmp.same) {
            ++same;
            log.add(vector_string(concat(cmp.witness->T, to_rational(cmp.witness->c))));
        }
        if (model != cmp.same || (i < n && !model))
            r.fail("zero tests disagree on " + vector_string(a) + " and " + vector_string(b));
    }
    r.detail("pairs", 2 * n);
    r.detail("same", same);
    log.store(r);
    return r;
}

CheckReport square(const Group& A, const Hom& lhs, const Hom& rhs, const Group& B, const VerifyOptions& opt,
                   std::uint64_t salt, const std::string& label) {
    return check_zero_map(A, difference(lhs, rhs, label), B, CheckOptions{opt.samples, derive_seed(opt.seed, salt)},
                          "square", label);
}

}  // namespace

VerificationReport verify_les4(const SimplicialMap& f, int p, const VerifyOptions& opt) {
    VerificationReport rep;
    rep.title = to_string(SequenceTag::LES4);
    add_parameters(rep, f, p, opt);
    if (p < 1) {
        rep.skip_reason = "degree p must be at least 1";
        return rep;
    }
    RelativeCharacterSpace space(f, p);
    ModelFactory F(space);
    std::vector<Entry> seq;
    seq.push_back({F.hat_x(p - 1), F.restrict_hat(p - 1)});
    seq.push_back({F.hat_y(p - 1), F.bockstein_hat()});
    seq.push_back({F.hbar(), F.project_II()});
    seq.push_back({F.hat_x(p), F.restrict_hat(p)});
    seq.push_back({F.hat_y(p), Hom{}});
    check_sequence(rep, seq, 1, opt);
    rep.checks.push_back(hbar_cross_check(space, Group(F.hbar()), opt));
    return rep;
}

VerificationReport verify_diagram(const SimplicialMap& f, int p, const VerifyOptions& opt) {
    VerificationReport rep;
    rep.title = to_string(SequenceTag::Diagram);
    add_parameters(rep, f, p, opt);
    if (p < 1) {
        rep.skip_reason = "degree p must be at least 1";
        return rep;
    }
    RelativeCharacterSpace space(f, p);
    ModelFactory F(space);
    const std::size_t n = F.rel_dim();
    const GroupModel I = F.type_I(), II = F.type_II(), IIp = F.type_IIprime(), III = F.type_III();
    const GroupModel Om = F.omega_f(), OmInt = F.omega_f_mod_int(), Yq = F.y_mod_flat_x();
    const Hom i1 = F.identity(n, "i1"), i2 = F.identity(n, "i2");
    Hom i3 = F.bockstein_hat();
    i3.label = "i3";
    Hom pi1 = F.rho_map(), pi2 = F.rho_map();
    pi1.label = "π1";
    pi2.label = "π2";
    const Hom pi3 = F.identity(n, "π3");
    short_exact(rep, I, i1, II, pi1, Om, opt, 11);
    short_exact(rep, IIp, i2, II, pi2, OmInt, opt, 12);
    short_exact(rep, Yq, i3, II, pi3, III, opt, 13);

    const Group gI(I), gII(II), gIIp(IIp), gIII(III), gOm(Om), gOmInt(OmInt), gYq(Yq);
    const Hom iota1 = F.identity(n, "ι1");
    Hom iota2 = F.bockstein_hat();
    iota2.label = "ι2";
    const Hom p1 = F.identity(Om.dim, "p1");
    Hom p2 = F.rho_map();
    p2.label = "p2";
    auto o = [&](std::uint64_t salt) { return CheckOptions{opt.samples, derive_seed(opt.seed, salt)}; };
    rep.checks.push_back(check_map(gI, iota1, gIIp, o(21)));
    rep.checks.push_back(check_map(gYq, iota2, gIIp, o(22)));
    rep.checks.push_back(check_map(gOm, p1, gOmInt, o(23)));
    rep.checks.push_back(check_map(gIII, p2, gOmInt, o(24)));
    rep.checks.push_back(check_injective(gI, iota1, gIIp, o(25)));
    rep.checks.push_back(check_injective(gYq, iota2, gIIp, o(26)));
    rep.checks.push_back(check_surjective(gOm, p1, gOmInt, o(27)));
    rep.checks.push_back(check_surjective(gIII, p2, gOmInt, o(28)));
    rep.checks.push_back(check_injective(gYq, i3, gII, o(29)));
    rep.checks.push_back(check_surjective(gII, pi3, gIII, o(30)));

    rep.checks.push_back(square(gI, compose(i2, iota1, "i2∘ι1"), i1, gII, opt, 31, "i2∘ι1 = i1"));
    rep.checks.push_back(square(gII, compose(p1, pi1, "p1∘π1"), pi2, gOmInt, opt, 32, "p1∘π1 = π2"));
    rep.checks.push_back(square(gYq, compose(i2, iota2, "i2∘ι2"), i3, gII, opt, 33, "i2∘ι2 = i3"));
    rep.checks.push_back(square(gII, compose(p2, pi3, "p2∘π3"), pi2, gOmInt, opt, 34, "p2∘π3 = π2"));
    rep.checks.push_back(iii_cross_check(space, F, gIII, opt));
    return rep;
}

VerificationReport verify(const SimplicialMap& f, int p, SequenceTag tag, const VerifyOptions& opt) {
    switch (tag) {
        case SequenceTag::LES4: return verify_les4(f, p, opt);
        case SequenceTag::Diagram: return verify_diagram(f, p, opt);
        default: return verify_mixed_les(f, p, tag, opt);
    }
}

std::string to_string(SampleKind k) {
    switch (k) {
        case SampleKind::AbsoluteX: return "x";
        case SampleKind::AbsoluteY: return "y";
        case SampleKind::I: return "I";
        case SampleKind::II: return "II";
        case SampleKind::IIprime: return "II'";
    }
    return "?";
}

SampleKind parse_sample_kind(const std::string& text) {
    if (text == "x") return SampleKind::AbsoluteX;
    if (text == "y") return SampleKind::AbsoluteY;
    if (text == "I") return SampleKind::I;
    if (text == "II") return SampleKind::II;
    if (text == "II'" || text == "IIprime") return SampleKind::IIprime;
    throw ValidationError("unknown character kind '" + text + "' (expected x, y, I, II or II')");
}

namespace {

nlohmann::json rationals(const RatVector& v) {
    auto j = nlohmann::json::array();
    for (const auto& q : v) j.push_back(delcoh::to_string(q));
    return j;
}

nlohmann::json integers(const IntVector& v) {
    auto j = nlohmann::json::array();
    for (const auto& z : v) j.push_back(z.get_str());
    return j;
}

}  // namespace

std::string SampledCharacter::to_json() const {
    nlohmann::json j;
    j["kind"] = to_string(kind);
    if (kind == SampleKind::AbsoluteX || kind == SampleKind::AbsoluteY) {
        j["degree"] = absolute.p;
        j["T"] = rationals(absolute.T);
        j["c"] = integers(absolute.c);
    } else {
        j["degree"] = relative.p;
        j["T_X"] = rationals(relative.T_X);
        j["T_Y"] = rationals(relative.T_Y);
        j["c_X"] = integers(relative.c_X);
        j["c_Y"] = integers(relative.c_Y);
    }
    return j.dump(2) + "\n";
}

SampledCharacter sample_character(const SimplicialMap& f, int p, SampleKind kind, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 9));
    SampledCharacter out;
    out.kind = kind;
    if (kind == SampleKind::AbsoluteX || kind == SampleKind::AbsoluteY) {
        cone::ConeComplex c(f);
        const CochainComplex& K = kind == SampleKind::AbsoluteX ? c.x() : c.y();
        Group g(models::character(K, p, "Ĥ"));
        RatVector x = g.sample(rng);
        const std::size_t nt = K.dim(p);
        out.absolute = CharacterRep{p, RatVector(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(nt)),
                                    to_integer(RatVector(x.begin() + static_cast<std::ptrdiff_t>(nt), x.end()))};
        return out;
    }
    RelativeCharacterSpace space(f, p);
    ModelFactory F(space);
    const RelType type = kind == SampleKind::I ? RelType::I : kind == SampleKind::II ? RelType::II : RelType::IIprime;
    Group g(kind == SampleKind::I ? F.type_I() : kind == SampleKind::II ? F.type_II() : F.type_IIprime());
    RelCharacterRep r = rep_of(space, g.sample(rng), type);
    out.relative = space.make_relative(r.T_X, r.T_Y, r.c_X, r.c_Y, type);
    return out;
}

}  // namespace delcoh::sequences
