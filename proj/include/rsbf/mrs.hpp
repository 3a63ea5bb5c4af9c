#ifndef RSBF_MRS_HPP
#define RSBF_MRS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rsbf/bfcore.hpp"

// Monomial rotation symmetric (MRS) functions.
//
// All variable indices in this module are 1-based. A cubic MRS function in n
// variables is the sum of the n cyclic shifts of one monomial x_1 x_j x_k and
// is written (1,j,k).
namespace rsbf::mrs {

/// The representative of a in {1, ..., n}; multiples of n map to n.
int capital_mod(std::int64_t a, int n);

/// Canonical representative (1,j,k) of a cubic MRS function: among the three
/// monomials of the function that contain x_1, the one with least j, then
/// least k. Only obtainable through canonicalize() / from_canonical().
class CubicTriple {
 public:
  int n() const { return n_; }
  int j() const { return j_; }
  int k() const { return k_; }

  /// (1, n/3+1, 2n/3+1): its n shifts collapse to n/3 distinct monomials.
  bool is_short() const { return n_ % 3 == 0 && j_ == n_ / 3 + 1 && k_ == 2 * n_ / 3 + 1; }

  /// Accepts (j,k) only when it already is the canonical triple; throws
  /// DomainError otherwise.
  static CubicTriple from_canonical(int n, int j, int k);

  std::string to_string() const;

  friend bool operator==(const CubicTriple&, const CubicTriple&) = default;
  friend auto operator<=>(const CubicTriple&, const CubicTriple&) = default;

 private:
  friend CubicTriple canonicalize(int n, std::int64_t p, std::int64_t q);
  CubicTriple(int n, int j, int k) : n_(n), j_(j), k_(k) {}

  int n_;
  int j_;
  int k_;
};

using IndexPair = std::pair<int, int>;
using IndexTriple = std::array<int, 3>;

/// Pattern (a;b;c) = (j-i Mod n; k-i Mod n; k-j Mod n) of an ordered term [i,j,k].
struct Pattern {
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// The three pairs (p,q), p < q, for which x_1 x_p x_q is a term of (1,p0,q0).
/// p0 and q0 need not be reduced or ordered. For the short function the three
/// pairs coincide.
std::array<IndexPair, 3> one_terms(int n, std::int64_t p0, std::int64_t q0);
std::array<IndexPair, 3> one_terms(const CubicTriple& f);

/// Canonical triple of the function generated by x_1 x_p x_q. Throws
/// DomainError if 1, p, q are not distinct mod n or n < 3.
CubicTriple canonicalize(int n, std::int64_t p, std::int64_t q);

/// D_n in lexicographic order.
std::vector<CubicTriple> enumerate_dn(int n);

/// |D_n| by closed form.
std::int64_t dn_size(int n);

Pattern pattern(int n, const IndexTriple& term);

/// The n terms [i, i+j-1, i+k-1] (capital-Mod n), i = 1..n, in standard form.
std::vector<IndexTriple> standard_form(const CubicTriple& f);

/// Distinct monomials of f, in standard-form order (n/3 of them for the short
/// function, n otherwise).
std::vector<IndexTriple> cubic_terms(const CubicTriple& f);

/// Quadratic MRS index: f_{n,j} = x_1 x_j + x_2 x_{j+1} + ... with
/// 2 <= j <= floor((n+1)/2), or the short quadratic j = n/2 + 1 for even n.
class QuadIndex {
 public:
  /// Throws DomainError when j is out of range.
  QuadIndex(int n, int j);

  int n() const { return n_; }
  int j() const { return j_; }
  bool is_short() const { return n_ % 2 == 0 && j_ == n_ / 2 + 1; }

  friend bool operator==(const QuadIndex&, const QuadIndex&) = default;

 private:
  int n_;
  int j_;
};

/// Largest non-short quadratic index for n variables.
inline int max_quad_index(int n) { return (n + 1) / 2; }

/// n pairs [i, i+j-1], or n/2 pairs [i, i+n/2] for the short quadratic.
std::vector<IndexPair> quad_terms(const QuadIndex& q);

bf::MonomialSet cubic_monomials(const CubicTriple& f);
bf::MonomialSet quad_monomials(const QuadIndex& q);

}  // namespace rsbf::mrs

#endif  // RSBF_MRS_HPP
