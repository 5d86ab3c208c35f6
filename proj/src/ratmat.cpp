#include "alexpara/ratmat.hpp"

#include <algorithm>
#include <cctype>

#include "alexpara/errors.hpp"

namespace alexpara {

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    std::string t = s;
    for (char c : t)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw ParseError("bad rational: " + s);
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw ParseError("bad rational: " + s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string format_rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return c.get_str();
}

mpz_class parse_integer(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer");
    mpz_class z;
    if (z.set_str(s, 10) != 0) throw ParseError("bad integer: " + s);
    return z;
}

std::vector<std::string> split_top_level(const std::string& body, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : body) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (n_ != o.n_) throw BadParameter("matrix dimension mismatch");
    RatMatrix r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (n_ != o.n_) throw BadParameter("matrix dimension mismatch");
    RatMatrix r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (n_ != o.n_) throw BadParameter("matrix dimension mismatch");
    RatMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::negated() const {
    RatMatrix r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

bool RatMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

mpq_class RatMatrix::trace() const {
    mpq_class t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

mpq_class RatMatrix::det() const {
    // Gaussian elimination over Q.
    RatMatrix m = *this;
    mpq_class d = 1;
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && m.at(pivot, col) == 0) ++pivot;
        if (pivot == n_) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        for (std::size_t row = col + 1; row < n_; ++row) {
            if (m.at(row, col) == 0) continue;
            mpq_class f = m.at(row, col) / m.at(col, col);
            for (std::size_t j = col; j < n_; ++j) m.at(row, j) -= f * m.at(col, j);
        }
    }
    return d;
}

RatMatrix RatMatrix::inverse() const {
    RatMatrix m = *this;
    RatMatrix inv = identity(n_);
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && m.at(pivot, col) == 0) ++pivot;
        if (pivot == n_) throw BadParameter("singular matrix has no inverse");
        if (pivot != col)
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        mpq_class p = m.at(col, col);
        for (std::size_t j = 0; j < n_; ++j) {
            m.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t row = 0; row < n_; ++row) {
            if (row == col || m.at(row, col) == 0) continue;
            mpq_class f = m.at(row, col);
            for (std::size_t j = 0; j < n_; ++j) {
                m.at(row, j) -= f * m.at(col, j);
                inv.at(row, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::string RatMatrix::encode() const {
    std::string s = "[";
    for (std::size_t i = 0; i < n_; ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) s += ",";
            s += format_rational(at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

RatMatrix RatMatrix::parse(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("bad matrix: " + s);
    auto rows = split_top_level(s.substr(1, s.size() - 2));
    const std::size_t n = rows.size();
    RatMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& r = rows[i];
        if (r.size() < 2 || r.front() != '[' || r.back() != ']')
            throw ParseError("bad matrix row: " + r);
        auto cells = split_top_level(r.substr(1, r.size() - 2));
        if (cells.size() != n) throw ParseError("matrix is not square: " + s);
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = parse_rational(cells[j]);
    }
    return m;
}

bool psd_check(const RatMatrix& m) {
    if (!m.is_symmetric()) throw NotSymmetric("psd_check needs a symmetric matrix");
    const std::size_t n = m.dim();
    if (n > 5) throw SizeLimitExceeded("psd_check limited to 5x5 matrices");
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        RatMatrix sub(idx.size());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) sub.at(a, b) = m.at(idx[a], idx[b]);
        if (sub.det() < 0) return false;
    }
    return true;
}

}  // namespace alexpara
