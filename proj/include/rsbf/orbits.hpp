#ifndef RSBF_ORBITS_HPP
#define RSBF_ORBITS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "rsbf/mrs.hpp"

// The group G_n = { sigma_tau : gcd(tau, n) = 1 }, sigma_tau(i) = (i-1) tau + 1 Mod n,
// acting on cubic MRS functions. Its orbits are the equivalence classes under
// rotation-symmetry-preserving variable permutations. G_n is isomorphic to U_n
// via sigma_tau <-> tau, so group elements are handled as their residues tau.
namespace rsbf::orbits {

using mrs::CubicTriple;

class SigmaTau {
 public:
  /// Throws DomainError unless 1 <= tau < n (tau = 1 also for n <= 2) and
  /// gcd(tau, n) = 1.
  SigmaTau(int n, int tau);

  static SigmaTau identity(int n) { return SigmaTau(n, 1); }

  int n() const { return n_; }
  int tau() const { return tau_; }

  /// sigma_tau * sigma_other = sigma_{tau * other Mod n}.
  SigmaTau compose(const SigmaTau& other) const;

  friend bool operator==(const SigmaTau&, const SigmaTau&) = default;

 private:
  int n_;
  int tau_;
};

/// All elements of G_n, ascending by tau.
std::vector<SigmaTau> group_elements(int n);

int sigma_index(const SigmaTau& s, int i);

/// Image of f under s, as a canonical triple.
CubicTriple sigma_apply(const SigmaTau& s, const CubicTriple& f);

/// Orbit of f, sorted. Throws DomainError when f belongs to a different n.
std::vector<CubicTriple> orbit(int n, const CubicTriple& f);

/// Residues tau whose sigma_tau fixes f, ascending.
std::vector<int> stabilizer(int n, const CubicTriple& f);

struct EquivalenceClass {
  std::vector<CubicTriple> members;  // sorted; members.front() is the representative

  std::size_t size() const { return members.size(); }
  const CubicTriple& representative() const { return members.front(); }

  friend bool operator==(const EquivalenceClass&, const EquivalenceClass&) = default;
};

/// Partition of D_n into G_n-orbits, classes ordered by representative.
struct ClassTable {
  int n = 0;
  std::vector<EquivalenceClass> classes;

  /// Index into `classes` of the class containing f.
  std::size_t class_of(const CubicTriple& f) const;

  friend bool operator==(const ClassTable&, const ClassTable&) = default;
};

ClassTable classes(int n);

/// Number of f in D_n fixed by sigma_tau.
std::int64_t fix_count(int n, int tau);

/// Orbit count via Burnside's lemma. Throws InternalError if the fixed-point
/// sum is not divisible by |G_n|.
std::int64_t burnside_count(int n);

/// True iff the variable permutation perm (1-based images, perm[i-1] = mu(i))
/// maps every cubic MRS function to a rotation symmetric one. Checks that
/// mu composed with the rotation taking 1 to mu^{-1}(1) is some sigma_tau.
/// Throws DomainError for n <= 4.
bool preserves_rs(int n, std::span<const int> perm);

}  // namespace rsbf::orbits

#endif  // RSBF_ORBITS_HPP
