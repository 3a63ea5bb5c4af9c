#ifndef RSBF_STRUCTURE_HPP
#define RSBF_STRUCTURE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsbf/bfcore.hpp"
#include "rsbf/orbits.hpp"

// Census verifiers for the class-count theorems, and the Walsh-profile
// evidence run for the permutation-suffices conjecture.
namespace rsbf::structure {

using mrs::CubicTriple;
using orbits::ClassTable;

struct Census {
  int n = 0;
  std::map<std::int64_t, std::int64_t> sizes;  // class size -> number of classes
  std::int64_t total_functions = 0;
  std::int64_t class_count = 0;

  friend bool operator==(const Census&, const Census&) = default;
};

Census census(int n);
Census census_of(const ClassTable& table);

/// Outcome of a theorem check. `summary` is a one-line description of what
/// was observed; `failures` lists every violated assertion.
struct Report {
  bool passed = true;
  std::string summary;
  std::vector<std::string> failures;

  void expect(bool ok, std::string what) {
    if (!ok) {
      passed = false;
      failures.push_back(std::move(what));
    }
  }
};

/// Least k > 1 with k^3 = 1 mod p, or nullopt when p = 5 mod 6 (and for p <= 3).
/// Throws DomainError for composite p.
std::optional<int> cube_root_unity(int p);

/// Class count floor(p/6)+1 and the size profile for prime p >= 7: one class of
/// size (p-1)/2 containing (1,2,3); for p = 1 mod 6 one class of size (p-1)/3
/// containing (1,2,k+2); all others of size p-1. Also checks that every class
/// contains some (1,2,m). Throws DomainError for composite p or p < 7.
Report verify_prime(int p);

inline constexpr int kDefaultMaxPower3 = 5;

/// Class structure for n = 3^k: 3^(k-1) classes; one class of size 3^j with
/// least member (1, 3^(k-j-1)+1, 2*3^(k-j-1)+1) for 0 <= j < k; no class of
/// size 2; 2*3^(j-1)-1 classes of size 2*3^j for 1 <= j < k. Throws
/// ResourceError when k > max_k.
Report verify_power3(int k, int max_k = kDefaultMaxPower3);

/// For n = 3^k: every member (1,r,s) of a class of size 2*3^j, 1 <= j <= k-2,
/// reduces to (1, r/3+1, s/3+1) lying in a class of the same size for 3^(k-1).
Report check_power3_reduction(int k, int max_k = kDefaultMaxPower3);

/// No proper subgroup of G_n yields the same orbits. For n > 8 this is the
/// trivial stabilizer of (1,2,4); small groups are additionally checked by
/// enumerating their subgroups. Throws DomainError for n < 6.
Report verify_smallest_group(int n);

/// Closed-form quadratic weight/nonlinearity against the Walsh transform for
/// every valid j in n variables.
Report verify_quadratic_formulas(int n, bf::VarCap cap = {});

struct ClassInvariants {
  CubicTriple representative;
  std::size_t class_size = 0;
  std::uint64_t weight = 0;
  std::uint64_t nonlinearity = 0;
  bf::WalshProfile profile;
  std::string profile_digest;
};

/// "value:count" pairs sorted by value, comma-joined.
std::string profile_to_string(const bf::WalshProfile& p);

/// FNV-1a 64 of profile_to_string(), as 16 lowercase hex digits.
std::string profile_digest(const bf::WalshProfile& p);

/// One entry per class, in table order, computed on the least member.
/// jobs <= 0 uses the hardware concurrency. Output does not depend on jobs.
std::vector<ClassInvariants> class_invariants(const ClassTable& table, bf::VarCap cap = {},
                                              int jobs = 0);
std::vector<ClassInvariants> class_invariants(int n, bf::VarCap cap = {}, int jobs = 0);

struct Collision {
  std::size_t first = 0;   // class indices (0-based) sharing weight and nonlinearity
  std::size_t second = 0;
  bool separated = false;  // Walsh profiles differ
};

struct ConjectureReport {
  int n = 0;
  std::vector<ClassInvariants> classes;
  std::vector<Collision> collisions;
  bool verdict = true;  // every collision separated by profile
};

ConjectureReport conjecture_check(int n, bf::VarCap cap = {}, int jobs = 0);

}  // namespace rsbf::structure

#endif  // RSBF_STRUCTURE_HPP
