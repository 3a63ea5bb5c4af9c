#include "rsbf/quadratic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "rsbf/error.hpp"

namespace rsbf::quad {

using mrs::capital_mod;

RhoCycles rho_cycles(int n, int j) {
  if (n < 3 || j < 2 || j > mrs::max_quad_index(n)) {
    throw DomainError("rho_{n,j} needs 2 <= j <= floor((n+1)/2); got n = " + std::to_string(n) +
                      ", j = " + std::to_string(j));
  }
  RhoCycles out{n, j, std::gcd(n, j - 1), {}};
  std::vector<bool> seen(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int i = start; !seen[i]; i = capital_mod(i + j - 1, n)) {
      seen[i] = true;
      cycle.push_back(i);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

WeightNonlinearity quad_wt_nl(const mrs::QuadIndex& q) {
  const int n = q.n();
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  if (q.is_short()) {
    const std::uint64_t v = half - (std::uint64_t{1} << (n / 2 - 1));
    return {v, v};
  }
  const int k = std::gcd(n, q.j() - 1);
  if ((n / k) % 2 == 0) {
    const std::uint64_t v = half - (std::uint64_t{1} << (n / 2 + k - 1));
    return {v, v};
  }
  return {half, half - (std::uint64_t{1} << ((n + k) / 2 - 1))};
}

bool quad_equivalent(int n, int r, int s) {
  const mrs::QuadIndex qr(n, r);
  const mrs::QuadIndex qs(n, s);
  if (qr.is_short() || qs.is_short()) return r == s;
  return std::gcd(n, r - 1) == std::gcd(n, s - 1);
}

std::vector<int> build_xi(int n, int r, int s) {
  if (!quad_equivalent(n, r, s)) {
    throw DomainError("f_{" + std::to_string(n) + "," + std::to_string(r) + "} and f_{" +
                      std::to_string(n) + "," + std::to_string(s) +
                      "} are not permutation-equivalent");
  }
  std::vector<int> xi(n);
  if (r == s) {
    std::iota(xi.begin(), xi.end(), 1);
    return xi;
  }
  const int k = std::gcd(n, r - 1);
  for (int i = 1; i <= k; ++i) {
    for (int u = 0; u < n / k; ++u) {
      const int from = capital_mod(i + static_cast<std::int64_t>(u) * (r - 1), n);
      xi[from - 1] = capital_mod(i + static_cast<std::int64_t>(u) * (s - 1), n);
    }
  }
  return xi;
}

bool xi_maps_terms(int n, int r, int s, const std::vector<int>& xi) {
  if (xi.size() != static_cast<std::size_t>(n)) return false;
  auto as_set = [](const std::vector<mrs::IndexPair>& terms) {
    std::multiset<mrs::IndexPair> out;
    for (auto [a, b] : terms) out.insert(a < b ? mrs::IndexPair{a, b} : mrs::IndexPair{b, a});
    return out;
  };
  std::vector<mrs::IndexPair> image;
  for (auto [a, b] : mrs::quad_terms(mrs::QuadIndex(n, r))) image.emplace_back(xi[a - 1], xi[b - 1]);
  return as_set(image) == as_set(mrs::quad_terms(mrs::QuadIndex(n, s)));
}

}  // namespace rsbf::quad
