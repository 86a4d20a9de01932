#include "delcoh/algebra/matrix.hpp"

#include <stdexcept>

namespace delcoh {

namespace {

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

template <typename T, typename V, typename R>
std::vector<R> apply(const Matrix<T>& a, const std::vector<V>& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    std::vector<R> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a(i, k) != 0 && x[k] != 0) out[i] += a(i, k) * x[k];
    return out;
}

template <typename T>
Matrix<T> hstack_impl(const std::vector<Matrix<T>>& blocks) {
    if (blocks.empty()) return {};
    std::size_t rows = blocks.front().rows();
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw std::invalid_argument("hstack: row count mismatch");
        cols += b.cols();
    }
    Matrix<T> out(rows, cols);
    std::size_t c = 0;
    for (const auto& b : blocks) {
        out.set_block(0, c, b);
        c += b.cols();
    }
    return out;
}

template <typename T>
Matrix<T> vstack_impl(const std::vector<Matrix<T>>& blocks) {
    if (blocks.empty()) return {};
    std::size_t cols = blocks.front().cols();
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("vstack: column count mismatch");
        rows += b.rows();
    }
    Matrix<T> out(rows, cols);
    std::size_t r = 0;
    for (const auto& b : blocks) {
        out.set_block(r, 0, b);
        r += b.rows();
    }
    return out;
}

template <typename V>
void check_same_size(const V& a, const V& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return multiply(a, b); }
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return multiply(a, b); }
IntVector operator*(const IntMatrix& a, const IntVector& x) { return apply<Integer, Integer, Integer>(a, x); }
RatVector operator*(const RatMatrix& a, const RatVector& x) { return apply<Rational, Rational, Rational>(a, x); }
RatVector operator*(const IntMatrix& a, const RatVector& x) { return apply<Integer, Rational, Rational>(a, x); }

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

RatVector to_rational(const IntVector& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
    return out;
}

IntVector to_integer(const RatVector& v) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i])) throw std::domain_error("entry " + std::to_string(i) + " is not an integer");
        out[i] = v[i].get_num();
    }
    return out;
}

RatMatrix hstack(const std::vector<RatMatrix>& blocks) { return hstack_impl(blocks); }
RatMatrix vstack(const std::vector<RatMatrix>& blocks) { return vstack_impl(blocks); }
IntMatrix hstack(const std::vector<IntMatrix>& blocks) { return hstack_impl(blocks); }
IntMatrix vstack(const std::vector<IntMatrix>& blocks) { return vstack_impl(blocks); }

Rational dot(const RatVector& a, const RatVector& b) {
    check_same_size(a, b);
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const RatVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0) s += a[i] * b[i];
    return s;
}

Integer dot(const IntVector& a, const IntVector& b) {
    check_same_size(a, b);
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVector add(const RatVector& a, const RatVector& b) {
    check_same_size(a, b);
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVector sub(const RatVector& a, const RatVector& b) {
    check_same_size(a, b);
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVector scale(const RatVector& a, const Rational& k) {
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * k;
    return out;
}

IntVector add(const IntVector& a, const IntVector& b) {
    check_same_size(a, b);
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVector sub(const IntVector& a, const IntVector& b) {
    check_same_size(a, b);
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IntVector negate(const IntVector& a) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

IntVector scale(const IntVector& a, const Integer& k) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * k;
    return out;
}

RatVector concat(const RatVector& a, const RatVector& b) {
    RatVector out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

IntVector concat(const IntVector& a, const IntVector& b) {
    IntVector out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_integral(const RatVector& v) {
    for (const auto& q : v)
        if (!is_integer(q)) return false;
    return true;
}

bool is_zero(const RatVector& v) {
    for (const auto& q : v)
        if (q != 0) return false;
    return true;
}

bool is_zero(const IntVector& v) {
    for (const auto& q : v)
        if (q != 0) return false;
    return true;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Rational frac(const Rational& q) {
    Integer fl = floor_div(q.get_num(), q.get_den());
    Rational r = q - Rational(fl);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto valid = [](const std::string& s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start >= s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!valid(num) || !valid(den)) throw std::invalid_argument("malformed rational '" + text + "'");
    Integer n(num[0] == '+' ? num.substr(1) : num);
    Integer d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const IntVector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s + "]";
}

std::string to_string(const RatVector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + "]";
}

}  // namespace delcoh
