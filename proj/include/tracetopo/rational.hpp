#pragma once
// Exact arithmetic used throughout: arbitrary-precision integers for counts,
// rationals for bounds and consistency ratios. No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tracetopo {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

// Canonical "p/q" form; integers render without the "/1".
inline std::string to_string(const BigRat& v) {
    const BigInt num = boost::multiprecision::numerator(v);
    const BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Routing-consistency parameter: a rational in (0, 1], kept exact so that
// ceiling comparisons at block boundaries never misclassify.
class Alpha {
public:
    Alpha() : num_(1), den_(1) {}
    Alpha(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ <= 0 || num_ <= 0 || num_ > den_)
            throw std::invalid_argument("alpha must be a rational in (0, 1]");
    }

    // Accepts "1" / "3" style integers (must equal 1) or "p/q".
    static Alpha parse(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool operator==(const Alpha& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator<=(const Alpha& o) const { return num_ * o.den_ <= o.num_ * den_; }

    BigRat value() const { return BigRat(num_, den_); }
    std::string str() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }

private:
    std::int64_t num_;
    std::int64_t den_;
};

// ceil(alpha * k) in integer arithmetic.
inline int ceil_alpha(const Alpha& alpha, int k) {
    if (k < 0) throw std::invalid_argument("ceil_alpha: negative hop count");
    const std::int64_t p = alpha.num() * static_cast<std::int64_t>(k);
    return static_cast<int>((p + alpha.den() - 1) / alpha.den());
}

} // namespace tracetopo
