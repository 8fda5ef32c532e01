#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sunflower {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k) exactly; zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// C(n, k) in 64 bits; throws InvalidArgument on overflow.
std::uint64_t binomial_u64(std::int64_t n, std::int64_t k);

BigInt power(const BigInt& base, unsigned exponent);

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
};

/// Factorizes q by trial division; nullopt unless q = p^α with α >= 1.
std::optional<PrimePower> prime_power(std::uint64_t q);

std::string to_string(const BigInt& value);

/// Saturating conversion for reporting.
double to_double(const BigInt& value);

}  // namespace sunflower
