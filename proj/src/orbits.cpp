#include "rsbf/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rsbf/error.hpp"
#include "rsbf/numtheory.hpp"

namespace rsbf::orbits {

SigmaTau::SigmaTau(int n, int tau) : n_(n), tau_(tau) {
  if (n < 2) throw DomainError("G_n needs n >= 2, got " + std::to_string(n));
  if (tau < 1 || tau >= n || std::gcd(tau, n) != 1) {
    throw DomainError("tau = " + std::to_string(tau) + " is not a unit mod " + std::to_string(n));
  }
}

SigmaTau SigmaTau::compose(const SigmaTau& other) const {
  if (other.n_ != n_) throw DomainError("cannot compose elements of different groups");
  return SigmaTau(n_, nt::mul_mod(tau_, other.tau_, n_));
}

std::vector<SigmaTau> group_elements(int n) {
  std::vector<SigmaTau> out;
  for (int t : nt::units(n)) out.emplace_back(n, t);
  return out;
}

int sigma_index(const SigmaTau& s, int i) {
  return mrs::capital_mod(static_cast<std::int64_t>(i - 1) * s.tau() + 1, s.n());
}

CubicTriple sigma_apply(const SigmaTau& s, const CubicTriple& f) {
  if (s.n() != f.n()) throw DomainError("group element and function use different n");
  return mrs::canonicalize(f.n(), sigma_index(s, f.j()), sigma_index(s, f.k()));
}

namespace {

void require_member(int n, const CubicTriple& f) {
  if (f.n() != n) {
    throw DomainError(f.to_string() + " belongs to n = " + std::to_string(f.n()) +
                      ", not n = " + std::to_string(n));
  }
}

}  // namespace

std::vector<CubicTriple> orbit(int n, const CubicTriple& f) {
  require_member(n, f);
  std::vector<CubicTriple> out;
  for (const auto& s : group_elements(n)) out.push_back(sigma_apply(s, f));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> stabilizer(int n, const CubicTriple& f) {
  require_member(n, f);
  std::vector<int> out;
  for (const auto& s : group_elements(n)) {
    if (sigma_apply(s, f) == f) out.push_back(s.tau());
  }
  return out;
}

std::size_t ClassTable::class_of(const CubicTriple& f) const {
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (std::binary_search(classes[c].members.begin(), classes[c].members.end(), f)) return c;
  }
  throw DomainError(f.to_string() + " is not in the class table for n = " + std::to_string(n));
}

ClassTable classes(int n) {
  const auto dn = mrs::enumerate_dn(n);
  const auto group = group_elements(n);
  // Slot (j, k) -> position in dn.
  std::vector<int> slot(static_cast<std::size_t>(n + 1) * (n + 1), -1);
  for (std::size_t i = 0; i < dn.size(); ++i) slot[dn[i].j() * (n + 1) + dn[i].k()] = static_cast<int>(i);

  ClassTable table{n, {}};
  std::vector<bool> assigned(dn.size(), false);
  for (std::size_t i = 0; i < dn.size(); ++i) {
    if (assigned[i]) continue;
    EquivalenceClass cls;
    for (const auto& s : group) {
      const CubicTriple image = sigma_apply(s, dn[i]);
      const int pos = slot[image.j() * (n + 1) + image.k()];
      if (pos < 0) throw InternalError("group image " + image.to_string() + " missing from D_n");
      if (!assigned[pos]) {
        assigned[pos] = true;
        cls.members.push_back(image);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    table.classes.push_back(std::move(cls));
  }
  return table;
}

std::int64_t fix_count(int n, int tau) {
  const SigmaTau s(n, tau);
  std::int64_t count = 0;
  for (const auto& f : mrs::enumerate_dn(n)) {
    if (sigma_apply(s, f) == f) ++count;
  }
  return count;
}

std::int64_t burnside_count(int n) {
  const auto dn = mrs::enumerate_dn(n);
  const auto group = group_elements(n);
  std::int64_t total = 0;
  for (const auto& s : group) {
    for (const auto& f : dn) {
      if (sigma_apply(s, f) == f) ++total;
    }
  }
  const auto order = static_cast<std::int64_t>(group.size());
  if (total % order != 0) {
    throw InternalError("Burnside sum " + std::to_string(total) + " not divisible by |G_" +
                        std::to_string(n) + "| = " + std::to_string(order));
  }
  return total / order;
}

bool preserves_rs(int n, std::span<const int> perm) {
  if (n <= 4) throw DomainError("preserves_rs is only defined for n > 4, got " + std::to_string(n));
  if (perm.size() != static_cast<std::size_t>(n)) {
    throw DomainError("permutation has " + std::to_string(perm.size()) + " entries, expected " +
                      std::to_string(n));
  }
  std::vector<bool> seen(n + 1, false);
  int preimage_of_one = 0;
  for (int i = 1; i <= n; ++i) {
    const int image = perm[i - 1];
    if (image < 1 || image > n || seen[image]) throw DomainError("not a permutation of [1, n]");
    seen[image] = true;
    if (image == 1) preimage_of_one = i;
  }
  // sigma = mu * delta with delta(w) = w + v - 1, so sigma(1) = 1.
  auto sigma = [&](int i) { return perm[mrs::capital_mod(i + preimage_of_one - 1, n) - 1]; };
  const int step = sigma(2) - 1;
  if (std::gcd(step, n) != 1) return false;
  for (int i = 1; i <= n; ++i) {
    if (sigma(i) != mrs::capital_mod(static_cast<std::int64_t>(i - 1) * step + 1, n)) return false;
  }
  return true;
}

}  // namespace rsbf::orbits
