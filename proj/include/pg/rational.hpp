#pragma once

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <string>

namespace pg {

// Exact fraction over int64, always reduced, denominator > 0.
// Charge bookkeeping never touches floating point; in practice the
// denominators stay at 12 or below.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    bool is_zero() const { return num_ == 0; }
    bool negative() const { return num_ < 0; }

    // "-5/4", "2", "0"
    std::string str() const;

private:
    std::int64_t num_;
    std::int64_t den_;
    void reduce();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational frac(std::int64_t n, std::int64_t d) { return Rational(n, d); }

} // namespace pg
