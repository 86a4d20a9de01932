#include "delcoh/simplicial/complex.hpp"

#include "delcoh/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <set>

namespace delcoh::simplicial {

std::string to_string(Coefficients c) {
    switch (c) {
        case Coefficients::Z: return "Z";
        case Coefficients::Q: return "Q";
        case Coefficients::RZ: return "RZ";
    }
    return "?";
}

Coefficients parse_coefficients(const std::string& text) {
    if (text == "Z") return Coefficients::Z;
    if (text == "Q") return Coefficients::Q;
    if (text == "RZ" || text == "R/Z") return Coefficients::RZ;
    throw ValidationError("unknown coefficient ring '" + text + "' (expected Z, Q or RZ)");
}

std::string to_string(const Simplex& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

namespace {

Simplex normalized(Simplex s) {
    if (s.empty()) throw ValidationError("empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw ValidationError("simplex " + to_string(s) + " repeats a vertex");
    return s;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> facets) {
    std::set<Simplex> all;
    for (auto& f : facets) {
        Simplex s = normalized(f);
        if (s.size() > 24) throw ValidationError("simplex " + to_string(s) + " is too large");
        const std::uint32_t n = static_cast<std::uint32_t>(s.size());
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Simplex face;
            for (std::uint32_t i = 0; i < n; ++i)
                if (mask & (1u << i)) face.push_back(s[i]);
            all.insert(face);
        }
    }
    SimplicialComplex K;
    K.build(std::vector<Simplex>(all.begin(), all.end()));
    return K;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
    std::set<Simplex> all;
    for (auto& s : simplices) all.insert(normalized(s));
    for (const auto& s : all) {
        if (s.size() < 2) continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            if (!all.count(face))
                throw ValidationError("simplex " + to_string(s) + " has face " + to_string(face) +
                                      " missing from the complex");
        }
    }
    SimplicialComplex K;
    K.build(std::vector<Simplex>(all.begin(), all.end()));
    return K;
}

void SimplicialComplex::build(std::vector<Simplex> all) {
    by_dim_.clear();
    index_.clear();
    vertices_.clear();
    for (auto& s : all) {
        std::size_t d = s.size() - 1;
        if (by_dim_.size() <= d) by_dim_.resize(d + 1);
        by_dim_[d].push_back(std::move(s));
    }
    for (auto& level : by_dim_) {
        std::sort(level.begin(), level.end());
        for (std::size_t i = 0; i < level.size(); ++i) index_[level[i]] = i;
    }
    if (!by_dim_.empty())
        for (const auto& v : by_dim_[0]) vertices_.push_back(v[0]);
}

std::size_t SimplicialComplex::count(int n) const {
    if (n < 0 || n > dimension()) return 0;
    return by_dim_[static_cast<std::size_t>(n)].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int n) const {
    static const std::vector<Simplex> none;
    if (n < 0 || n > dimension()) return none;
    return by_dim_[static_cast<std::size_t>(n)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> SimplicialComplex::cofaces_in_top(const Simplex& s) const {
    std::vector<std::size_t> out;
    const auto& top = simplices(dimension());
    for (std::size_t i = 0; i < top.size(); ++i)
        if (std::includes(top[i].begin(), top[i].end(), s.begin(), s.end())) out.push_back(i);
    return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    for (int d = 0; d <= dimension(); ++d)
        for (const auto& s : simplices(d)) {
            bool maximal = true;
            for (const auto& t : simplices(d + 1))
                if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                    maximal = false;
                    break;
                }
            if (maximal) out.push_back(s);
        }
    return out;
}

std::string SimplicialComplex::canonical_string() const {
    std::string out;
    for (int d = 0; d <= dimension(); ++d)
        for (const auto& s : simplices(d)) out += to_string(s);
    return out;
}

Cochain make_cochain(const SimplicialComplex& K, int degree, Coefficients ring, RatVector values) {
    if (values.size() != K.count(degree))
        throw ValidationError("cochain of degree " + std::to_string(degree) + " needs " +
                              std::to_string(K.count(degree)) + " values, got " + std::to_string(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (ring == Coefficients::Z && !is_integer(values[i]))
            throw ValidationError("integer cochain has value " + delcoh::to_string(values[i]) + " on " +
                                  to_string(K.simplices(degree)[i]));
        if (ring == Coefficients::RZ) values[i] = frac(values[i]);
    }
    return Cochain{degree, ring, std::move(values)};
}

SimplicialMap::SimplicialMap(std::shared_ptr<const SimplicialComplex> source,
                             std::shared_ptr<const SimplicialComplex> target, std::map<int, int> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map)) {
    for (const auto& [v, w] : vertex_map_) {
        if (!source_->contains({v}))
            throw ValidationError("vertex map mentions " + std::to_string(v) + ", which is not a source vertex");
        if (!target_->contains({w}))
            throw ValidationError("vertex " + std::to_string(v) + " maps to " + std::to_string(w) +
                                  ", which is not a target vertex");
    }
    for (int v : source_->vertices())
        if (!vertex_map_.count(v)) throw ValidationError("source vertex " + std::to_string(v) + " is not mapped");
    for (int d = 1; d <= source_->dimension(); ++d)
        for (const auto& s : source_->simplices(d)) {
            std::set<int> img;
            for (int v : s) img.insert(vertex_map_.at(v));
            Simplex t(img.begin(), img.end());
            if (!target_->contains(t))
                throw ValidationError("simplex " + to_string(s) + " maps to " + to_string(t) +
                                      ", which is not a target simplex");
        }
}

std::optional<std::pair<int, Simplex>> SimplicialMap::image(const Simplex& s) const {
    Simplex img;
    img.reserve(s.size());
    for (int v : s) img.push_back(vertex_map_.at(v));
    int sign = 1;
    // insertion sort tracking the permutation parity
    for (std::size_t i = 1; i < img.size(); ++i)
        for (std::size_t j = i; j > 0 && img[j - 1] > img[j]; --j) {
            std::swap(img[j - 1], img[j]);
            sign = -sign;
        }
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) return std::nullopt;
    return std::make_pair(sign, img);
}

IntMatrix SimplicialMap::chain_map(int n) const {
    IntMatrix m(target_->count(n), source_->count(n));
    const auto& src = source_->simplices(n);
    for (std::size_t j = 0; j < src.size(); ++j) {
        auto img = image(src[j]);
        if (!img) continue;
        m(*target_->index_of(img->second), j) = img->first;
    }
    return m;
}

std::string SimplicialMap::canonical_string() const {
    std::string out = "S" + source_->canonical_string() + "T" + target_->canonical_string() + "F";
    for (const auto& [v, w] : vertex_map_) out += std::to_string(v) + ">" + std::to_string(w) + ";";
    return out;
}

SimplicialMap make_map(SimplicialComplex source, SimplicialComplex target, std::map<int, int> vertex_map) {
    return SimplicialMap(std::make_shared<const SimplicialComplex>(std::move(source)),
                         std::make_shared<const SimplicialComplex>(std::move(target)), std::move(vertex_map));
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace delcoh::simplicial
