#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace rotdil {

// Exact rational number, always in lowest terms with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) {
        if (d == 0) throw std::invalid_argument("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const long long g = std::gcd(n < 0 ? -n : n, d);
        num = g ? n / g : 0;
        den = g ? d / g : 1;
    }

    bool operator==(const Rational&) const = default;

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace rotdil
