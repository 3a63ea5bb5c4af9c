#include "rsbf/numtheory.hpp"

#include <numeric>

namespace rsbf::nt {

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<int> units(int n) {
  if (n == 1) return {1};
  std::vector<int> out;
  for (int t = 1; t < n; ++t) {
    if (std::gcd(t, n) == 1) out.push_back(t);
  }
  return out;
}

int pow_mod(int base, int exp, int m) {
  std::int64_t result = 1 % m;
  std::int64_t b = base % m;
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<int>(result);
}

}  // namespace rsbf::nt
