#include "delcoh/simplicial/fundamental.hpp"

#include "delcoh/errors.hpp"
#include "delcoh/simplicial/cochain_complex.hpp"

#include <deque>

namespace delcoh::simplicial {

namespace {

void require_pure(const SimplicialComplex& M) {
    const int m = M.dimension();
    for (int d = 0; d < m; ++d)
        for (const auto& s : M.simplices(d))
            if (M.cofaces_in_top(s).empty())
                throw PreconditionError("simplex " + to_string(s) + " is not a face of any top simplex");
}

Simplex drop(const Simplex& s, std::size_t i) {
    Simplex f = s;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
    return f;
}

// Sign of `face` in the boundary of `top`.
int incidence(const Simplex& top, const Simplex& face) {
    for (std::size_t i = 0; i < top.size(); ++i)
        if (drop(top, i) == face) return i % 2 == 0 ? 1 : -1;
    return 0;
}

}  // namespace

void validate_relative_cycle(const SimplicialMap& f, const RelativeCycle& z) {
    const int p = z.C.degree;
    const auto& X = f.target();
    const auto& Y = f.source();
    if (z.C_prime.degree != p - 1)
        throw ValidationError("relative cycle: C' must have degree " + std::to_string(p - 1));
    if (z.C.coefficients.size() != X.count(p))
        throw ValidationError("relative cycle: C must have " + std::to_string(X.count(p)) + " coefficients");
    if (z.C_prime.coefficients.size() != Y.count(p - 1))
        throw ValidationError("relative cycle: C' must have " + std::to_string(Y.count(p - 1)) + " coefficients");
    if (p >= 1) {
        IntVector lhs = boundary_chain(X, z.C).coefficients;
        if (p - 1 <= Y.dimension()) lhs = add(lhs, f.chain_map(p - 1) * z.C_prime.coefficients);
        for (std::size_t i = 0; i < lhs.size(); ++i)
            if (lhs[i] != 0)
                throw PreconditionError("relative cycle: ∂C + f_*C' is nonzero on " +
                                        to_string(X.simplices(p - 1)[i]));
    }
    if (p - 1 >= 1) {
        IntVector b = boundary_chain(Y, z.C_prime).coefficients;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i] != 0)
                throw PreconditionError("relative cycle: ∂C' is nonzero on " + to_string(Y.simplices(p - 2)[i]));
    }
}

Chain fundamental_class(const SimplicialComplex& M, const std::vector<int>& orientation) {
    const int m = M.dimension();
    if (m < 0) throw PreconditionError("fundamental class of the empty complex");
    if (orientation.size() != M.count(m))
        throw ValidationError("orientation needs one sign per top simplex (" + std::to_string(M.count(m)) + ")");
    for (int s : orientation)
        if (s != 1 && s != -1) throw ValidationError("orientation signs must be +1 or -1");
    require_pure(M);
    const auto& top = M.simplices(m);
    if (m >= 1)
        for (const auto& face : M.simplices(m - 1)) {
            auto cof = M.cofaces_in_top(face);
            if (cof.size() > 2)
                throw PreconditionError("face " + to_string(face) + " lies in " + std::to_string(cof.size()) +
                                        " top simplices");
            if (cof.size() == 2) {
                int total = orientation[cof[0]] * incidence(top[cof[0]], face) +
                            orientation[cof[1]] * incidence(top[cof[1]], face);
                if (total != 0)
                    throw PreconditionError("orientation is incoherent across face " + to_string(face));
            }
        }
    Chain c{m, IntVector(top.size())};
    for (std::size_t i = 0; i < top.size(); ++i) c.coefficients[i] = orientation[i];
    return c;
}

std::optional<std::vector<int>> orient_coherently(const SimplicialComplex& M) {
    const int m = M.dimension();
    if (m < 0) return std::vector<int>{};
    const auto& top = M.simplices(m);
    std::vector<int> sign(top.size(), 0);
    for (std::size_t start = 0; start < top.size(); ++start) {
        if (sign[start] != 0) continue;
        sign[start] = 1;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            std::size_t t = queue.front();
            queue.pop_front();
            if (m == 0) continue;
            for (std::size_t i = 0; i < top[t].size(); ++i) {
                Simplex face = drop(top[t], i);
                auto cof = M.cofaces_in_top(face);
                if (cof.size() > 2) return std::nullopt;
                for (std::size_t u : cof) {
                    if (u == t) continue;
                    int want = -sign[t] * incidence(top[t], face) * incidence(top[u], face);
                    if (sign[u] == 0) {
                        sign[u] = want;
                        queue.push_back(u);
                    } else if (sign[u] != want) {
                        return std::nullopt;
                    }
                }
            }
        }
    }
    return sign;
}

SimplicialComplex boundary_complex(const SimplicialComplex& M) {
    const int m = M.dimension();
    std::vector<Simplex> faces;
    if (m >= 1)
        for (const auto& face : M.simplices(m - 1))
            if (M.cofaces_in_top(face).size() == 1) faces.push_back(face);
    return SimplicialComplex::from_facets(faces);
}

RelativeCycle pushforward_fundamental(const SimplicialMap& f, const SimplicialMap& g, const SimplicialMap& g_boundary,
                                      std::optional<std::vector<int>> orientation) {
    const SimplicialComplex& M = g.source();
    if (!(g.target() == f.target())) throw PreconditionError("g must map into the target of f");
    if (!(g_boundary.target() == f.source())) throw PreconditionError("g' must map into the source of f");
    SimplicialComplex dM = boundary_complex(M);
    if (!(g_boundary.source() == dM))
        throw PreconditionError("g' must be defined on the boundary of the manifold");
    for (int v : dM.vertices())
        if (g(v) != f(g_boundary(v)))
            throw PreconditionError("g and f∘g' disagree on boundary vertex " + std::to_string(v));

    if (!orientation) {
        orientation = orient_coherently(M);
        if (!orientation) throw PreconditionError("manifold is not orientable");
    }
    const int m = M.dimension();
    Chain fund = fundamental_class(M, *orientation);
    Chain C{m, g.chain_map(m) * fund.coefficients};

    Chain dfund = boundary_chain(M, fund);
    IntVector on_boundary(dM.count(m - 1));
    for (std::size_t i = 0; i < dfund.coefficients.size(); ++i) {
        if (dfund.coefficients[i] == 0) continue;
        auto idx = dM.index_of(M.simplices(m - 1)[i]);
        if (!idx) throw PreconditionError("boundary of [M] leaves the boundary complex");
        on_boundary[*idx] = dfund.coefficients[i];
    }
    IntVector img = m - 1 >= 0 ? g_boundary.chain_map(m - 1) * on_boundary : IntVector{};
    RelativeCycle z{C, Chain{m - 1, negate(img)}};
    validate_relative_cycle(f, z);
    return z;
}

}  // namespace delcoh::simplicial
