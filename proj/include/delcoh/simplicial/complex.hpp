#pragma once

#include "delcoh/algebra/matrix.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace delcoh::simplicial {

// Strictly increasing vertex labels.
using Simplex = std::vector<int>;

enum class Coefficients { Z, Q, RZ };

std::string to_string(Coefficients c);
// Accepts "Z", "Q", "RZ" (also "R/Z"); throws ValidationError otherwise.
Coefficients parse_coefficients(const std::string& text);

std::string to_string(const Simplex& s);

// Finite abstract simplicial complex, closed under taking faces.
// Simplices of each dimension are kept in lexicographic order; that order
// is the basis order of every chain and cochain group.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Adds every face of every facet. Throws ValidationError on empty facets
    // or repeated vertices.
    static SimplicialComplex from_facets(std::vector<Simplex> facets);
    // Requires the list to be closed under faces already.
    static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const { return by_dim_.empty(); }
    const std::vector<int>& vertices() const { return vertices_; }
    std::size_t count(int n) const;
    const std::vector<Simplex>& simplices(int n) const;
    std::optional<std::size_t> index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s).has_value(); }
    // Top-dimensional simplices that contain s.
    std::vector<std::size_t> cofaces_in_top(const Simplex& s) const;
    // Maximal simplices.
    std::vector<Simplex> facets() const;

    std::string canonical_string() const;
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) { return a.by_dim_ == b.by_dim_; }

private:
    void build(std::vector<Simplex> all);

    std::vector<int> vertices_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::map<Simplex, std::size_t> index_;
};

// Formal integer combination of n-simplices in the complex's basis order.
struct Chain {
    int degree = 0;
    IntVector coefficients;
};

// Cochain with an explicit coefficient tag; Z cochains have integral values.
struct Cochain {
    int degree = 0;
    Coefficients ring = Coefficients::Q;
    RatVector values;
};

// Validates length and ring; RZ values are reduced into [0, 1).
Cochain make_cochain(const SimplicialComplex& K, int degree, Coefficients ring, RatVector values);

// Simplicial map given on vertices. Every simplex must map onto a simplex.
class SimplicialMap {
public:
    SimplicialMap(std::shared_ptr<const SimplicialComplex> source, std::shared_ptr<const SimplicialComplex> target,
                  std::map<int, int> vertex_map);

    const SimplicialComplex& source() const { return *source_; }
    const SimplicialComplex& target() const { return *target_; }
    const std::shared_ptr<const SimplicialComplex>& source_ptr() const { return source_; }
    const std::shared_ptr<const SimplicialComplex>& target_ptr() const { return target_; }
    const std::map<int, int>& vertex_map() const { return vertex_map_; }
    int operator()(int v) const { return vertex_map_.at(v); }

    // Oriented image: (sign, sorted simplex), or nullopt when the image is degenerate.
    std::optional<std::pair<int, Simplex>> image(const Simplex& s) const;
    // f_* : C_n(source) -> C_n(target), shape count_target(n) x count_source(n).
    IntMatrix chain_map(int n) const;

    std::string canonical_string() const;

private:
    std::shared_ptr<const SimplicialComplex> source_;
    std::shared_ptr<const SimplicialComplex> target_;
    std::map<int, int> vertex_map_;
};

// Convenience constructor that takes complexes by value.
SimplicialMap make_map(SimplicialComplex source, SimplicialComplex target, std::map<int, int> vertex_map);

// FNV-1a 64-bit hash rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

}  // namespace delcoh::simplicial
