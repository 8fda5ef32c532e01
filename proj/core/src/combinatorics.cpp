#include "sunflower/combinatorics.hpp"

#include <limits>

#include "sunflower/errors.hpp"

namespace sunflower {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return acc;
}

std::uint64_t binomial_u64(std::int64_t n, std::int64_t k) {
    BigInt b = binomial(n, k);
    if (b > std::numeric_limits<std::uint64_t>::max()) {
        throw InvalidArgument("C(" + std::to_string(n) + "," + std::to_string(k) +
                              ") does not fit in 64 bits");
    }
    return b.convert_to<std::uint64_t>();
}

BigInt power(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

std::optional<PrimePower> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return PrimePower{q, 1};
    unsigned alpha = 0;
    while (q % p == 0) {
        q /= p;
        ++alpha;
    }
    if (q != 1) return std::nullopt;
    return PrimePower{p, alpha};
}

std::string to_string(const BigInt& value) { return value.str(); }

double to_double(const BigInt& value) { return value.convert_to<double>(); }

}  // namespace sunflower
