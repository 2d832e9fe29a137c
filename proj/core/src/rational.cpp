#include "kecs/rational.hpp"

#include <numeric>
#include <ostream>

#include "kecs/error.hpp"

namespace kecs {

namespace {
__extension__ using wide = __int128;
}

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw Error(Errc::BadDimensions, "zero denominator; use Rational::infinity()");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = num / g;
    den_ = den / g;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept
{
    if (a.is_infinite() || b.is_infinite()) {
        if (a.is_infinite() && b.is_infinite())
            return std::strong_ordering::equal;
        return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    const wide lhs = static_cast<wide>(a.num_) * b.den_;
    const wide rhs = static_cast<wide>(b.num_) * a.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::int64_t Rational::ceil_times(std::int64_t m) const
{
    if (is_infinite())
        throw Error(Errc::BadDimensions, "ceil_times on infinity");
    const wide p = static_cast<wide>(num_) * m;
    wide q = p / den_;
    if (q * den_ < p)
        ++q;
    return static_cast<std::int64_t>(q);
}

double Rational::to_double() const noexcept
{
    if (is_infinite())
        return 1.0 / 0.0;
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const
{
    if (is_infinite())
        return "inf";
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational parse_rational(const std::string& text)
{
    if (text == "inf")
        return Rational::infinity();
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw Error(Errc::SyntaxError, "not a rational: '" + text + "'");
    }
}

} // namespace kecs
