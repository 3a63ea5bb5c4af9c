#ifndef RSBF_QUADRATIC_HPP
#define RSBF_QUADRATIC_HPP

#include <cstdint>
#include <vector>

#include "rsbf/mrs.hpp"

// Quadratic MRS functions f_{n,j}: cycle structure of the shift
// rho_{n,j}(i) = i + j - 1 mod n, closed-form weight and nonlinearity, the gcd
// equivalence criterion and an explicit variable permutation realizing it.
namespace rsbf::quad {

struct RhoCycles {
  int n = 0;
  int j = 0;
  int count = 0;  // gcd(n, j - 1)
  /// Cycle i (1-based) is (i, i+j-1, i+2(j-1), ...) capital-Mod n.
  std::vector<std::vector<int>> cycles;
};

/// Requires 2 <= j <= floor((n+1)/2).
RhoCycles rho_cycles(int n, int j);

struct WeightNonlinearity {
  std::uint64_t weight = 0;
  std::uint64_t nonlinearity = 0;

  friend bool operator==(const WeightNonlinearity&, const WeightNonlinearity&) = default;
};

/// Closed-form weight and nonlinearity of f_{n,j}:
///   k = gcd(n, j-1), n/k even: wt = N = 2^(n-1) - 2^(n/2+k-1)
///   n/k odd:                   wt = 2^(n-1), N = 2^(n-1) - 2^((n+k)/2-1)
///   short function:            wt = N = 2^(n-1) - 2^(n/2-1)
WeightNonlinearity quad_wt_nl(const mrs::QuadIndex& q);

/// Permutation equivalence of f_{n,r} and f_{n,s}: gcd(n, r-1) = gcd(n, s-1).
/// The short function is only equivalent to itself.
bool quad_equivalent(int n, int r, int s);

/// Permutation xi (1-based images) with xi(f_{n,r}) = f_{n,s}, anchored at
/// xi(1) = 1, xi(r) = s:  xi(i + u(r-1)) = i + u(s-1) mod n. Throws DomainError
/// when the two functions are not equivalent.
std::vector<int> build_xi(int n, int r, int s);

/// Relabels the terms of f_{n,r} by xi and reduces them to the normal
/// [i, i+s-1] shape; true iff the result is exactly quad_terms(n, s).
bool xi_maps_terms(int n, int r, int s, const std::vector<int>& xi);

}  // namespace rsbf::quad

#endif  // RSBF_QUADRATIC_HPP
