#pragma once

#include <span>
#include <string>

#include "skat/dist.hpp"

namespace skat {

/// Information quantity in bits (log base 2). The 0 log 0 = 0 convention
/// applies throughout.
struct Bits {
    double value = 0.0;

    friend bool operator==(const Bits&, const Bits&) = default;
    friend auto operator<=>(const Bits&, const Bits&) = default;
};

/// Shannon entropy of the marginal on `vars`.
Bits entropy(const JointDistribution& d, std::span<const std::string> vars);

/// I(x:y) = H(x) + H(y) - H(x,y), clamped to 0 within 1e-12.
Bits mutual_information(const JointDistribution& d, std::span<const std::string> x,
                        std::span<const std::string> y);

/// I(x:y|z) via the four-entropy identity
/// H(x,z) + H(y,z) - H(x,y,z) - H(z); z may be empty.
Bits conditional_mutual_information(const JointDistribution& d,
                                    std::span<const std::string> x,
                                    std::span<const std::string> y,
                                    std::span<const std::string> z);

/// One-way secret-key rate lower bound
/// max(0, I(x:y) - I(x:eve), I(x:y) - I(y:eve)).
/// A lower bound on the distillable key rate, used to certify that
/// filtered distributions carry secret correlations.
Bits ck_lower_bound(const JointDistribution& d, std::span<const std::string> x,
                    std::span<const std::string> y, std::string_view eve);

}  // namespace skat
