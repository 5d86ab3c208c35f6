#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace alexpara {

/// Canonical reduced "p/q" (or "p" when q = 1). Throws ParseError.
mpq_class parse_rational(const std::string& s);
std::string format_rational(const mpq_class& q);

mpz_class parse_integer(const std::string& s);

/// Splits "a,b,c" at top-level commas (i.e. outside (), [] nesting).
std::vector<std::string> split_top_level(const std::string& body, char sep = ',');

/// Square matrix with exact rational entries.
class RatMatrix {
public:
    RatMatrix() = default;
    explicit RatMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
    static RatMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    mpq_class& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const mpq_class& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool operator==(const RatMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix negated() const;

    bool is_symmetric() const;
    mpq_class trace() const;
    mpq_class det() const;
    /// Throws BadParameter when singular.
    RatMatrix inverse() const;

    /// Row-major "[[a,b],[c,d]]" with canonical rational entries.
    std::string encode() const;
    static RatMatrix parse(const std::string& s);

private:
    std::size_t n_ = 0;
    std::vector<mpq_class> a_;
};

/// True iff every principal minor of the symmetric matrix is >= 0
/// (2^n - 1 minors, exact arithmetic). Throws NotSymmetric, and
/// SizeLimitExceeded for n > 5.
bool psd_check(const RatMatrix& m);

}  // namespace alexpara
