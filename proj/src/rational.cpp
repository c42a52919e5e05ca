#include "skat/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

namespace skat {

namespace {

using I128 = __int128;

constexpr std::int64_t kMaxI64 = std::numeric_limits<std::int64_t>::max();

std::optional<std::int64_t> narrow(I128 v) {
    if (v > static_cast<I128>(kMaxI64) || v < -static_cast<I128>(kMaxI64)) return std::nullopt;
    return static_cast<std::int64_t>(v);
}

std::optional<Rational> normalize128(I128 num, I128 den) {
    if (den == 0) return std::nullopt;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    I128 a = num < 0 ? -num : num;
    I128 b = den;
    while (b != 0) {
        I128 t = a % b;
        a = b;
        b = t;
    }
    if (a != 0) {
        num /= a;
        den /= a;
    }
    auto n = narrow(num);
    auto d = narrow(den);
    if (!n || !d) return std::nullopt;
    return Rational{*n, *d};
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) {
    auto r = normalize128(num, den);
    return r ? *r : Rational{0, 1};
}

double Rational::to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::optional<Rational> rat_add(const Rational& a, const Rational& b) {
    return normalize128(static_cast<I128>(a.num) * b.den + static_cast<I128>(b.num) * a.den,
                        static_cast<I128>(a.den) * b.den);
}

std::optional<Rational> rat_mul(const Rational& a, const Rational& b) {
    return normalize128(static_cast<I128>(a.num) * b.num,
                        static_cast<I128>(a.den) * b.den);
}

std::optional<Rational> rat_div(const Rational& a, const Rational& b) {
    if (b.num == 0) return std::nullopt;
    return normalize128(static_cast<I128>(a.num) * b.den,
                        static_cast<I128>(a.den) * b.num);
}

std::optional<Rational> rat_pow(const Rational& a, int exponent) {
    if (exponent < 0) return std::nullopt;
    std::optional<Rational> out = Rational{1, 1};
    for (int i = 0; i < exponent && out; ++i) out = rat_mul(*out, a);
    return out;
}

std::optional<Rational> parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == text.size())
        return std::nullopt;
    std::int64_t num = 0, den = 0;
    auto nr = std::from_chars(text.data(), text.data() + slash, num);
    if (nr.ec != std::errc{} || nr.ptr != text.data() + slash) return std::nullopt;
    auto dr = std::from_chars(text.data() + slash + 1, text.data() + text.size(), den);
    if (dr.ec != std::errc{} || dr.ptr != text.data() + text.size()) return std::nullopt;
    if (den <= 0) return std::nullopt;
    return Rational::make(num, den);
}

}  // namespace skat
