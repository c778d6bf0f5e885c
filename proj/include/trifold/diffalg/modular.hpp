#pragma once

#include <cstdint>
#include <vector>

// Arithmetic in Z/pZ and dense univariate polynomials over it. Used only for
// fast necessary-condition tests; every positive verdict is confirmed exactly.
namespace trifold::modp {

inline constexpr std::uint64_t kPrime = 2305843009213693951ull;  // 2^61 - 1

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p = kPrime) {
  std::uint64_t r = a + b;
  return r >= p ? r - p : r;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p = kPrime) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p = kPrime) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t pow(std::uint64_t b, std::uint64_t e, std::uint64_t p = kPrime);
std::uint64_t inv(std::uint64_t a, std::uint64_t p = kPrime);

using UPoly = std::vector<std::uint64_t>;  // index = degree

void trim(UPoly& a);
int degree(const UPoly& a);
UPoly rem(UPoly a, const UPoly& b, std::uint64_t p = kPrime);
UPoly gcd(UPoly a, UPoly b, std::uint64_t p = kPrime);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace trifold::modp
