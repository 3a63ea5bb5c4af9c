#include "rsbf/structure.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>

#include "rsbf/error.hpp"
#include "rsbf/hash.hpp"
#include "rsbf/numtheory.hpp"
#include "rsbf/quadratic.hpp"

namespace rsbf::structure {

Census census_of(const ClassTable& table) {
  Census c{table.n, {}, 0, 0};
  for (const auto& cls : table.classes) {
    ++c.sizes[static_cast<std::int64_t>(cls.size())];
    c.total_functions += static_cast<std::int64_t>(cls.size());
  }
  c.class_count = static_cast<std::int64_t>(table.classes.size());
  return c;
}

Census census(int n) { return census_of(orbits::classes(n)); }

namespace {

// "{a:x, b:y}" in the given order, skipping zero counts.
std::string sizes_text(const std::vector<std::pair<std::int64_t, std::int64_t>>& entries) {
  std::string out = "{";
  bool first = true;
  for (auto [size, count] : entries) {
    if (count == 0) continue;
    if (!first) out += ", ";
    out += std::to_string(size) + ":" + std::to_string(count);
    first = false;
  }
  return out + "}";
}

std::int64_t count_of(const Census& c, std::int64_t size) {
  auto it = c.sizes.find(size);
  return it == c.sizes.end() ? 0 : it->second;
}

void require_prime(int p) {
  if (!nt::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

std::optional<int> cube_root_unity(int p) {
  require_prime(p);
  for (int k = 2; k < p; ++k) {
    if (nt::pow_mod(k, 3, p) == 1) return k;
  }
  return std::nullopt;
}

Report verify_prime(int p) {
  require_prime(p);
  if (p < 7) throw DomainError("prime census applies to p >= 7, got " + std::to_string(p));
  const ClassTable table = orbits::classes(p);
  const Census c = census_of(table);
  Report r;

  const std::int64_t half = (p - 1) / 2;
  const std::int64_t third = (p - 1) / 3;
  const std::int64_t full = p - 1;
  const bool has_third = p % 6 == 1;

  r.expect(c.class_count == p / 6 + 1, "E(" + std::to_string(p) + ") = " +
                                           std::to_string(c.class_count) + ", expected " +
                                           std::to_string(p / 6 + 1));
  r.expect(count_of(c, half) == 1, "expected exactly one class of size " + std::to_string(half));
  const auto& f123 = table.classes[table.class_of(mrs::canonicalize(p, 2, 3))];
  r.expect(static_cast<std::int64_t>(f123.size()) == half,
           "class of (1,2,3) has size " + std::to_string(f123.size()));

  std::int64_t expected_full = c.class_count - 1;
  if (has_third) {
    --expected_full;
    const auto k = cube_root_unity(p);
    r.expect(k.has_value(), "no cube root of unity for p = 1 mod 6");
    if (k) {
      const auto g = mrs::canonicalize(p, 2, *k + 2);
      const auto& cls = table.classes[table.class_of(g)];
      r.expect(static_cast<std::int64_t>(cls.size()) == third,
               "class of (1,2," + std::to_string(*k + 2) + ") has size " +
                   std::to_string(cls.size()) + ", expected " + std::to_string(third));
    }
    r.expect(count_of(c, third) == 1, "expected exactly one class of size " + std::to_string(third));
  }
  r.expect(count_of(c, full) == expected_full,
           "expected " + std::to_string(expected_full) + " classes of size " + std::to_string(full) +
               ", found " + std::to_string(count_of(c, full)));
  r.expect(c.total_functions == mrs::dn_size(p), "classes do not cover D_p");

  for (std::size_t i = 0; i < table.classes.size(); ++i) {
    const auto& m = table.classes[i].members;
    const bool has_12m = std::any_of(m.begin(), m.end(), [](const auto& f) { return f.j() == 2; });
    r.expect(has_12m, "class " + std::to_string(i + 1) + " has no member (1,2,m)");
  }

  std::vector<std::pair<std::int64_t, std::int64_t>> order{{half, count_of(c, half)}};
  if (has_third) order.emplace_back(third, count_of(c, third));
  order.emplace_back(full, count_of(c, full));
  r.summary = "E(" + std::to_string(p) + ")=" + std::to_string(c.class_count) + ", sizes " +
              sizes_text(order);
  return r;
}

namespace {

void require_power3_k(int k, int max_k) {
  if (k < 1) throw DomainError("k must be >= 1, got " + std::to_string(k));
  if (k > max_k) {
    throw ResourceError("k = " + std::to_string(k) + " exceeds the power-of-3 cap of " +
                        std::to_string(max_k) + " (use --max-n-override to raise it)");
  }
}

}  // namespace

Report verify_power3(int k, int max_k) {
  require_power3_k(k, max_k);
  const int n = static_cast<int>(ipow(3, k));
  const ClassTable table = orbits::classes(n);
  const Census c = census_of(table);
  Report r;

  r.expect(c.class_count == ipow(3, k - 1), "E(" + std::to_string(n) + ") = " +
                                                std::to_string(c.class_count) + ", expected " +
                                                std::to_string(ipow(3, k - 1)));
  r.expect(c.total_functions == mrs::dn_size(n), "classes do not cover D_n");
  r.expect(count_of(c, 2) == 0, "found a class of size 2");

  std::vector<std::pair<std::int64_t, std::int64_t>> order;
  std::int64_t accounted = 0;
  for (int j = 0; j <= k - 1; ++j) {
    const std::int64_t size = ipow(3, j);
    const std::int64_t step = ipow(3, k - j - 1);
    const auto expected_rep = mrs::canonicalize(n, step + 1, 2 * step + 1);
    r.expect(count_of(c, size) == 1, "expected exactly one class of size " + std::to_string(size));
    const auto& cls = table.classes[table.class_of(expected_rep)];
    r.expect(static_cast<std::int64_t>(cls.size()) == size,
             "class of " + expected_rep.to_string() + " has size " + std::to_string(cls.size()));
    r.expect(cls.representative() == expected_rep,
             "least member of the size-" + std::to_string(size) + " class is " +
                 cls.representative().to_string() + ", expected " + expected_rep.to_string());
    if (j == 0) {
      r.expect(expected_rep.is_short(), "singleton class is not the short function");
    }
    order.emplace_back(size, count_of(c, size));
    accounted += count_of(c, size);
  }
  for (int j = 1; j <= k - 1; ++j) {
    const std::int64_t size = 2 * ipow(3, j);
    const std::int64_t expected = 2 * ipow(3, j - 1) - 1;
    r.expect(count_of(c, size) == expected,
             "expected " + std::to_string(expected) + " classes of size " + std::to_string(size) +
                 ", found " + std::to_string(count_of(c, size)));
    order.emplace_back(size, count_of(c, size));
    accounted += count_of(c, size);
  }
  r.expect(accounted == c.class_count, "classes of unexpected size present");
  r.summary = "E(" + std::to_string(n) + ")=" + std::to_string(c.class_count) + ", sizes " +
              sizes_text(order) + ", functions " + std::to_string(c.total_functions);
  return r;
}

Report check_power3_reduction(int k, int max_k) {
  require_power3_k(k, max_k);
  Report r;
  if (k < 2) {
    r.summary = "n=3: nothing to reduce";
    return r;
  }
  const int n = static_cast<int>(ipow(3, k));
  const int m = n / 3;
  const ClassTable big = orbits::classes(n);
  const ClassTable small = orbits::classes(m);
  std::int64_t checked = 0;
  for (const auto& cls : big.classes) {
    bool in_range = false;
    for (int j = 1; j <= k - 2; ++j) in_range |= static_cast<std::int64_t>(cls.size()) == 2 * ipow(3, j);
    if (!in_range) continue;
    for (const auto& f : cls.members) {
      const std::string g_text = "(1," + std::to_string(f.j() / 3 + 1) + "," +
                                 std::to_string(f.k() / 3 + 1) + ")";
      try {
        const auto g = mrs::canonicalize(m, f.j() / 3 + 1, f.k() / 3 + 1);
        const auto& target = small.classes[small.class_of(g)];
        r.expect(target.size() == cls.size(),
                 f.to_string() + " in a class of size " + std::to_string(cls.size()) + " but " +
                     g_text + " lies in a class of size " + std::to_string(target.size()));
      } catch (const DomainError&) {
        r.expect(false, f.to_string() + " reduces to degenerate " + g_text);
      }
      ++checked;
    }
  }
  r.summary = "n=" + std::to_string(n) + ": " + std::to_string(checked) +
              " members of classes of size 2*3^j (1<=j<=k-2) reduced to n=" + std::to_string(m);
  return r;
}

namespace {

// Orbit partition of D_n under the subgroup of U_n listed in `elements`.
std::vector<std::size_t> orbit_labels(int n, const std::vector<CubicTriple>& dn,
                                      const std::vector<int>& elements) {
  std::vector<std::size_t> label(dn.size(), dn.size());
  for (std::size_t i = 0; i < dn.size(); ++i) {
    if (label[i] != dn.size()) continue;
    for (int t : elements) {
      const auto image = orbits::sigma_apply(orbits::SigmaTau(n, t), dn[i]);
      const auto pos = static_cast<std::size_t>(
          std::lower_bound(dn.begin(), dn.end(), image) - dn.begin());
      label[pos] = i;
    }
  }
  return label;
}

}  // namespace

Report verify_smallest_group(int n) {
  if (n < 6) throw DomainError("the minimality statement applies to n >= 6, got " + std::to_string(n));
  Report r;
  const int phi = nt::euler_phi(n);
  std::string detail;
  if (n > 8) {
    const auto stab = orbits::stabilizer(n, mrs::canonicalize(n, 2, 4));
    r.expect(stab == std::vector<int>{1}, "stabilizer of (1,2,4) is not trivial");
    const auto orb = orbits::orbit(n, mrs::canonicalize(n, 2, 4));
    r.expect(static_cast<int>(orb.size()) == phi,
             "|orbit(1,2,4)| = " + std::to_string(orb.size()) + ", phi(n) = " + std::to_string(phi));
    detail = "|orbit(1,2,4)| = phi(" + std::to_string(n) + ") = " + std::to_string(phi);
  }
  const auto units = nt::units(n);
  if (units.size() <= 12) {
    const auto dn = mrs::enumerate_dn(n);
    const auto full = orbit_labels(n, dn, units);
    int proper_subgroups = 0;
    // Subsets of U_n containing 1, closed under multiplication.
    const std::size_t rest = units.size() - 1;
    for (std::uint32_t mask = 0; mask < (1U << rest); ++mask) {
      if (mask == (1U << rest) - 1) continue;
      std::vector<int> subset{1};
      for (std::size_t b = 0; b < rest; ++b) {
        if ((mask >> b) & 1U) subset.push_back(units[b + 1]);
      }
      const std::set<int> members(subset.begin(), subset.end());
      bool closed = true;
      for (int a : subset) {
        for (int b : subset) closed &= members.count(nt::mul_mod(a, b, n)) > 0;
      }
      if (!closed) continue;
      ++proper_subgroups;
      r.expect(orbit_labels(n, dn, subset) != full,
               "proper subgroup of order " + std::to_string(subset.size()) +
                   " gives the same classes");
    }
    if (!detail.empty()) detail += "; ";
    detail += std::to_string(proper_subgroups) + " proper subgroups of G_" + std::to_string(n) +
              " all give finer classes";
  }
  r.summary = "n=" + std::to_string(n) + ": " + detail;
  return r;
}

Report verify_quadratic_formulas(int n, bf::VarCap cap) {
  if (n < 2) throw DomainError("quadratic MRS functions need n >= 2, got " + std::to_string(n));
  bf::check_cap(n, cap);
  Report r;
  std::vector<int> indices;
  for (int j = 2; j <= mrs::max_quad_index(n); ++j) indices.push_back(j);
  if (n % 2 == 0) indices.push_back(n / 2 + 1);
  for (int j : indices) {
    const mrs::QuadIndex q(n, j);
    const auto formula = quad::quad_wt_nl(q);
    const auto table = bf::tt_from_monomials(mrs::quad_monomials(q), cap);
    const auto s = bf::summarize(table, cap);
    r.expect(formula.weight == s.weight && formula.nonlinearity == s.nonlinearity,
             "f_{" + std::to_string(n) + "," + std::to_string(j) + "}: formula (" +
                 std::to_string(formula.weight) + ", " + std::to_string(formula.nonlinearity) +
                 ") vs transform (" + std::to_string(s.weight) + ", " +
                 std::to_string(s.nonlinearity) + ")");
  }
  r.summary = "n=" + std::to_string(n) + ": " + std::to_string(indices.size()) +
              " quadratic functions checked";
  return r;
}

std::string profile_to_string(const bf::WalshProfile& p) {
  std::string out;
  for (const auto& [value, count] : p.entries) {
    if (!out.empty()) out += ',';
    out += std::to_string(value) + ':' + std::to_string(count);
  }
  return out;
}

std::string profile_digest(const bf::WalshProfile& p) { return fnv1a_hex(profile_to_string(p)); }

std::vector<ClassInvariants> class_invariants(const ClassTable& table, bf::VarCap cap, int jobs) {
  bf::check_cap(table.n, cap);
  const std::size_t count = table.classes.size();
  std::vector<std::optional<ClassInvariants>> slots(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const auto& cls = table.classes[i];
      const auto tt = bf::tt_from_monomials(mrs::cubic_monomials(cls.representative()), cap);
      auto s = bf::summarize(tt, cap);
      std::string digest = profile_digest(s.profile);
      slots[i].emplace(ClassInvariants{cls.representative(), cls.size(), s.weight, s.nonlinearity,
                                       std::move(s.profile), std::move(digest)});
    }
  };
  unsigned threads = jobs > 0 ? static_cast<unsigned>(jobs) : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::vector<ClassInvariants> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<ClassInvariants> class_invariants(int n, bf::VarCap cap, int jobs) {
  bf::check_cap(n, cap);
  return class_invariants(orbits::classes(n), cap, jobs);
}

ConjectureReport conjecture_check(int n, bf::VarCap cap, int jobs) {
  ConjectureReport report{n, class_invariants(n, cap, jobs), {}, true};
  const auto& cls = report.classes;
  for (std::size_t a = 0; a < cls.size(); ++a) {
    for (std::size_t b = a + 1; b < cls.size(); ++b) {
      if (cls[a].weight != cls[b].weight || cls[a].nonlinearity != cls[b].nonlinearity) continue;
      const bool separated = cls[a].profile != cls[b].profile;
      report.collisions.push_back({a, b, separated});
      report.verdict &= separated;
    }
  }
  return report;
}

}  // namespace rsbf::structure
