#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace wrac {

// Exact rational scalar, always canonical: gcd(num, den) == 1, den > 0.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d);
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rat(const mpz_class& n) : v_(n) {}

    // Accepts "num" or "num/den" with optional leading '-'; rejects den == 0.
    static std::optional<Rat> parse(std::string_view s);

    // "num" when den == 1, else "num/den".
    std::string str() const;

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    double to_double() const { return v_.get_d(); }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const { return Rat(mpq_class(v_ / o.v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { v_ /= o.v_; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    size_t hash() const;

private:
    mpq_class v_;
};

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

// floor(sqrt(n)); n must be >= 0.
mpz_class isqrt(const mpz_class& n);

// floor(a / b) for b > 0.
mpz_class floor_div(const mpz_class& a, const mpz_class& b);

// Decimal rendering: exact expansion when den == 2^a * 5^b, otherwise rounded
// (half away from zero) to max_sig significant digits. Never scientific notation.
std::string decimal_string(const Rat& r, int max_sig = 12);

}  // namespace wrac

template <>
struct std::hash<wrac::Rat> {
    size_t operator()(const wrac::Rat& r) const { return r.hash(); }
};
