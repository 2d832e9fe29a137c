#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace kecs {

/// Exact non-negative-denominator fraction. A zero denominator encodes +inf,
/// which is how an empty minimum (e.g. beta over an all-regular family) reads.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    static constexpr Rational infinity() { Rational r; r.num_ = 1; r.den_ = 0; return r; }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    bool is_infinite() const noexcept { return den_ == 0; }

    /// Smallest integer c with c >= (*this) * m. Used for "colored >= ceil(r*m)".
    std::int64_t ceil_times(std::int64_t m) const;
    double to_double() const noexcept;
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

Rational min(const Rational& a, const Rational& b);
std::ostream& operator<<(std::ostream& os, const Rational& r);
/// Parses "p/q" or "p"; "inf" yields infinity.
Rational parse_rational(const std::string& text);

} // namespace kecs
