#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace skat {

/// Exact fraction carried alongside binary64 probabilities so that table
/// entries loaded as rationals stay printable as rationals. Arithmetic
/// helpers return nullopt on int64 overflow; callers then fall back to
/// the binary64 value.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    // Normalizes sign and reduces by the gcd.
    static Rational make(std::int64_t num, std::int64_t den);

    double to_double() const;
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
};

std::optional<Rational> rat_add(const Rational& a, const Rational& b);
std::optional<Rational> rat_mul(const Rational& a, const Rational& b);
std::optional<Rational> rat_div(const Rational& a, const Rational& b);
std::optional<Rational> rat_pow(const Rational& a, int exponent);

/// Parses "3/4" or "-1/6". Plain integers and decimal strings are not
/// rationals for our purposes and yield nullopt.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace skat
