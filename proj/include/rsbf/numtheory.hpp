#ifndef RSBF_NUMTHEORY_HPP
#define RSBF_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

// Small-integer helpers for the unit group U_n. Inputs are tiny (n in the
// hundreds), so everything is plain trial division.
namespace rsbf::nt {

int euler_phi(int n);

/// Deterministic trial division.
bool is_prime(int n);

/// Residues t in [1, n) with gcd(t, n) = 1, ascending. For n = 1 returns {1}.
std::vector<int> units(int n);

/// (a * b) mod m for non-negative operands.
inline int mul_mod(int a, int b, int m) {
  return static_cast<int>((static_cast<std::int64_t>(a) * b) % m);
}

int pow_mod(int base, int exp, int m);

}  // namespace rsbf::nt

#endif  // RSBF_NUMTHEORY_HPP
