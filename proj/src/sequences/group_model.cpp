#include "delcoh/sequences/group_model.hpp"

#include <stdexcept>

namespace delcoh::sequences {

namespace {

RatMatrix append_rows(const RatMatrix& a, const RatMatrix& b, std::size_t cols) {
    if (b.cols() != cols) throw std::invalid_argument("GroupModel: constraint has the wrong number of columns");
    if (a.rows() == 0) return b;
    return vstack(std::vector<RatMatrix>{a, b});
}

// Pads a matrix with zero columns on the right.
RatMatrix widen(const RatMatrix& m, std::size_t cols) {
    RatMatrix out(m.rows(), cols);
    out.set_block(0, 0, m);
    return out;
}

RatMatrix shape(const RatMatrix& m, std::size_t cols) { return m.cols() == cols ? m : RatMatrix(0, cols); }

std::vector<RatVector> all_generators(const MixedSolver& s) {
    std::vector<RatVector> out = s.subspace_generators();
    out.insert(out.end(), s.lattice_generators().begin(), s.lattice_generators().end());
    return out;
}

RatVector head(const RatVector& y, std::size_t n) {
    return RatVector(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
}

// {x valid in A, s valid gauge of B} with h x + sign * gauge_B s = rhs.
BlockSystem map_system(const Group& A, const Hom& h, const Group& B, int sign, std::size_t& eq_main) {
    const auto& a = A.model();
    const auto& b = B.model();
    BlockSystem sys;
    auto x = sys.unknown(a.dim);
    auto s = sys.unknown(b.gauge_dim);
    sys.equations(a.valid_eq.rows(), {{x, a.valid_eq}});
    sys.equations(b.gauge_eq.rows(), {{s, b.gauge_eq}});
    RatMatrix g = b.gauge;
    if (sign < 0)
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = -g(i, j);
    eq_main = sys.equations(b.dim, {{x, h.matrix}, {s, g}});
    sys.congruences(a.valid_cong.rows(), {{x, a.valid_cong}});
    sys.congruences(b.gauge_cong.rows(), {{s, b.gauge_cong}});
    return sys;
}

void check_shape(const Group& A, const Hom& h, const Group& B) {
    if (h.matrix.rows() != B.dim() || h.matrix.cols() != A.dim())
        throw std::invalid_argument("map " + h.label + " has shape " + std::to_string(h.matrix.rows()) + "x" +
                                    std::to_string(h.matrix.cols()) + ", expected " + std::to_string(B.dim()) + "x" +
                                    std::to_string(A.dim()));
}

std::vector<RatVector> with_samples(std::vector<RatVector> gens, const MixedSolver* solver, const Group* group,
                                    std::size_t samples, Rng& rng, bool gauge) {
    for (std::size_t i = 0; i < samples; ++i) {
        if (solver) gens.push_back(solver->sample(rng));
        else gens.push_back(gauge ? group->sample_gauge(rng) : group->sample(rng));
    }
    return gens;
}

}  // namespace

void GroupModel::add_valid_eq(const RatMatrix& rows) { valid_eq = append_rows(shape(valid_eq, dim), rows, dim); }

void GroupModel::add_valid_cong(const RatMatrix& rows) {
    valid_cong = append_rows(shape(valid_cong, dim), rows, dim);
}

void GroupModel::add_gauge(const RatMatrix& map, const RatMatrix& eq, const RatMatrix& cong) {
    if (map.rows() != dim) throw std::invalid_argument("GroupModel: gauge map has the wrong number of rows");
    const std::size_t k = map.cols();
    const std::size_t total = gauge_dim + k;
    RatMatrix g(dim, total);
    if (gauge_dim > 0) g.set_block(0, 0, gauge);
    g.set_block(0, gauge_dim, map);
    auto extend = [&](const RatMatrix& old, const RatMatrix& extra) {
        RatMatrix top = widen(shape(old, gauge_dim), total);
        RatMatrix bottom(extra.rows(), total);
        if (extra.rows() > 0) {
            if (extra.cols() != k) throw std::invalid_argument("GroupModel: gauge constraint has the wrong width");
            bottom.set_block(0, gauge_dim, extra);
        }
        if (top.rows() == 0) return bottom;
        if (bottom.rows() == 0) return top;
        return vstack(std::vector<RatMatrix>{top, bottom});
    };
    gauge_eq = extend(gauge_eq, eq);
    gauge_cong = extend(gauge_cong, cong);
    gauge = std::move(g);
    gauge_dim = total;
}

GroupModel zero_group(const std::string& label) {
    GroupModel m;
    m.label = label;
    m.valid_eq = RatMatrix(0, 0);
    m.valid_cong = RatMatrix(0, 0);
    m.gauge = RatMatrix(0, 0);
    m.gauge_eq = RatMatrix(0, 0);
    m.gauge_cong = RatMatrix(0, 0);
    return m;
}

namespace {

GroupModel normalized(GroupModel m) {
    m.valid_eq = shape(m.valid_eq, m.dim);
    m.valid_cong = shape(m.valid_cong, m.dim);
    if (m.gauge.rows() != m.dim || m.gauge.cols() != m.gauge_dim) m.gauge = RatMatrix(m.dim, m.gauge_dim);
    m.gauge_eq = shape(m.gauge_eq, m.gauge_dim);
    m.gauge_cong = shape(m.gauge_cong, m.gauge_dim);
    return m;
}

RatMatrix stacked(const RatMatrix& a, const RatMatrix& b, std::size_t cols) {
    if (a.rows() == 0) return shape(b, cols);
    if (b.rows() == 0) return a;
    return vstack(std::vector<RatMatrix>{a, b});
}

}  // namespace

Group::Group(GroupModel model)
    : model_(normalized(std::move(model))),
      elements_(model_.valid_eq, model_.valid_cong),
      zero_(stacked(model_.gauge, model_.gauge_eq, model_.gauge_dim), model_.gauge_cong),
      gauge_params_(model_.gauge_eq, model_.gauge_cong) {}

bool Group::is_valid(const RatVector& x) const {
    if (x.size() != model_.dim) return false;
    return elements_.satisfies(x, RatVector(model_.valid_eq.rows()), RatVector(model_.valid_cong.rows()));
}

std::optional<RatVector> Group::zero_witness(const RatVector& x) const {
    if (x.size() != model_.dim) throw std::invalid_argument("element of " + label() + " has the wrong length");
    RatVector b = concat(x, RatVector(model_.gauge_eq.rows()));
    auto res = zero_.solve(b, RatVector(model_.gauge_cong.rows()));
    return res.solution;
}

std::vector<RatVector> Group::generators() const { return all_generators(elements_); }
std::vector<RatVector> Group::gauge_generators() const { return all_generators(gauge_params_); }

Hom compose(const Hom& second, const Hom& first, const std::string& label) {
    Hom h{label, second.matrix * first.matrix, std::nullopt};
    if (second.cochain && first.cochain) h.cochain = *second.cochain * *first.cochain;
    return h;
}

Hom difference(const Hom& a, const Hom& b, const std::string& label) {
    if (a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols())
        throw std::invalid_argument("difference of maps with different shapes");
    RatMatrix m = a.matrix;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= b.matrix(i, j);
    return Hom{label, m, std::nullopt};
}

std::string vector_string(const RatVector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + "]";
}

CheckReport check_map(const Group& A, const Hom& h, const Group& B, const CheckOptions& opt) {
    check_shape(A, h, B);
    CheckReport r;
    r.kind = "map";
    r.label = h.label + ": " + A.label() + " -> " + B.label();
    Rng rng(derive_seed(opt.seed, 1));
    auto elems = with_samples(A.generators(), nullptr, &A, opt.samples, rng, false);
    std::size_t checked = 0;
    for (const auto& x : elems) {
        ++checked;
        if (!B.is_valid(h.matrix * x)) r.fail("image of " + vector_string(x) + " is not a valid element of " + B.label());
    }
    r.detail("elements", checked);
    auto gauges = with_samples(A.gauge_generators(), nullptr, &A, opt.samples, rng, true);
    std::size_t trivial = 0;
    for (const auto& s : gauges) {
        ++trivial;
        RatVector x = A.model().gauge * s;
        if (!B.is_zero(h.matrix * x))
            r.fail("a trivial element " + vector_string(x) + " of " + A.label() + " maps to a nonzero element");
    }
    r.detail("gauge_moves", trivial);
    return r;
}

CheckReport check_zero_map(const Group& A, const Hom& h, const Group& B, const CheckOptions& opt,
                           const std::string& kind, const std::string& label) {
    check_shape(A, h, B);
    CheckReport r;
    r.kind = kind;
    r.label = label;
    Rng rng(derive_seed(opt.seed, 2));
    auto elems = with_samples(A.generators(), nullptr, &A, opt.samples, rng, false);
    WitnessLog log;
    for (const auto& x : elems) {
        auto w = B.zero_witness(h.matrix * x);
        if (!w) {
            r.fail("nonzero on " + vector_string(x) + " of " + A.label());
            continue;
        }
        log.add(vector_string(*w));
    }
    r.detail("elements", elems.size());
    log.store(r);
    return r;
}

CheckReport check_exact(const Group& A, const Hom& a, const Group& B, const Hom& b, const Group& C,
                        const CheckOptions& opt) {
    check_shape(A, a, B);
    check_shape(B, b, C);
    CheckReport r;
    r.kind = "node";
    r.label = B.label();
    Rng rng(derive_seed(opt.seed, 3));

    // b ∘ a = 0
    auto elems = with_samples(A.generators(), nullptr, &A, opt.samples, rng, false);
    const RatMatrix ba = b.matrix * a.matrix;
    for (const auto& x : elems)
        if (!C.is_zero(ba * x)) r.fail("composite is nonzero on " + vector_string(x) + " of " + A.label());
    r.detail("composite_checks", elems.size());

    // ker b ⊂ im a
    std::size_t eq_ker = 0, eq_pre = 0;
    BlockSystem ker_sys = map_system(B, b, C, -1, eq_ker);
    MixedSolver ker = ker_sys.solver();
    BlockSystem pre_sys = map_system(A, a, B, 1, eq_pre);
    MixedSolver pre = pre_sys.solver();
    std::vector<RatVector> kernel;
    for (const auto& y : all_generators(ker)) kernel.push_back(head(y, B.dim()));
    for (std::size_t i = 0; i < opt.samples; ++i) kernel.push_back(head(ker.sample(rng), B.dim()));

    WitnessLog log;
    std::size_t preimages = 0;
    for (const auto& y : kernel) {
        auto sol = pre.solve(pre_sys.rhs({{eq_pre, y}}), pre_sys.congruence_rhs({}));
        if (!sol) {
            r.fail("kernel element " + vector_string(y) + " of " + B.label() + " has no preimage in " + A.label() +
                   " (" + sol.obstruction + ")");
            continue;
        }
        RatVector x = head(*sol.solution, A.dim());
        if (!A.is_valid(x) || !B.is_zero(sub(a.matrix * x, y))) {
            r.fail("preimage witness for " + vector_string(y) + " does not verify");
            continue;
        }
        ++preimages;
        log.add(vector_string(x));
    }
    r.detail("kernel_elements", kernel.size());
    r.detail("preimages", preimages);
    log.store(r);

    if (A.model().fg && B.model().fg && C.model().fg && a.cochain && b.cochain) {
        CheckReport fg = cone::check_fg_exactness(*A.model().fg, *B.model().fg, *C.model().fg, *a.cochain, *b.cochain);
        r.invariants = fg.invariants;
        for (const auto& [k, v] : fg.details)
            if (k == "kernel" || k == "image") r.detail(k, v);
        if (fg.status == Status::Fail) r.fail(fg.message);
    }
    return r;
}

namespace models {

RatMatrix select_T(const CochainComplex& K, int n) { return embed(K.dim(n), K.dim(n) + K.dim(n + 1), 0, 0, K.dim(n)); }

RatMatrix select_c(const CochainComplex& K, int n) {
    return embed(K.dim(n + 1), K.dim(n) + K.dim(n + 1), 0, K.dim(n), K.dim(n + 1));
}

RatMatrix curvature(const CochainComplex& K, int n) {
    RatMatrix m(K.dim(n + 1), K.dim(n) + K.dim(n + 1));
    m.set_block(0, 0, rat(K.coboundary(n)));
    for (std::size_t i = 0; i < K.dim(n + 1); ++i) m(i, K.dim(n) + i) = 1;
    return m;
}

GroupModel character(const CochainComplex& K, int n, const std::string& label) {
    GroupModel m;
    m.label = label;
    const std::size_t t = K.dim(n), c = K.dim(n + 1);
    m.dim = t + c;
    m.valid_eq = rat(K.coboundary(n + 1)) * select_c(K, n);
    m.valid_cong = select_c(K, n);
    const std::size_t s = K.dim(n - 1);
    m.gauge_dim = s + t;
    m.gauge = RatMatrix(m.dim, m.gauge_dim);
    m.gauge.set_block(0, 0, rat(K.coboundary(n - 1)));
    for (std::size_t i = 0; i < t; ++i) m.gauge(i, s + i) = 1;
    RatMatrix du = rat(K.coboundary(n));
    for (std::size_t i = 0; i < du.rows(); ++i)
        for (std::size_t j = 0; j < du.cols(); ++j) m.gauge(t + i, s + j) = -du(i, j);
    m.gauge_eq = RatMatrix(0, m.gauge_dim);
    m.gauge_cong = embed(t, m.gauge_dim, 0, s, t);
    return m;
}

GroupModel flat(const CochainComplex& K, int n, const std::string& label) {
    GroupModel m = character(K, n, label);
    m.add_valid_eq(curvature(K, n));
    return m;
}

GroupModel integer(const CochainComplex& K, int n, const std::string& label) {
    GroupModel m;
    m.label = label;
    m.dim = K.dim(n);
    m.valid_eq = rat(K.coboundary(n));
    m.valid_cong = RatMatrix::identity(m.dim);
    m.gauge_dim = K.dim(n - 1);
    m.gauge = rat(K.coboundary(n - 1));
    m.gauge_eq = RatMatrix(0, m.gauge_dim);
    m.gauge_cong = RatMatrix::identity(m.gauge_dim);
    m.fg = cone::FGNode{label, K.coboundary(n - 1), K.coboundary(n)};
    return m;
}

}  // namespace models

}  // namespace delcoh::sequences
