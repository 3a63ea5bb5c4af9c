// Acceptance suite: one PASS/FAIL line per criterion, each with a wall-clock
// limit. Exit status is 0 only when every criterion passes within its limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "rsbf/bfcore.hpp"
#include "rsbf/cli.hpp"
#include "rsbf/mrs.hpp"
#include "rsbf/numtheory.hpp"
#include "rsbf/orbits.hpp"
#include "rsbf/quadratic.hpp"
#include "rsbf/render.hpp"
#include "rsbf/structure.hpp"

using namespace rsbf;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

oracle::ClassList as_list(const orbits::ClassTable& t) {
  oracle::ClassList out;
  for (const auto& c : t.classes) {
    out.emplace_back();
    for (const auto& f : c.members) out.back().emplace_back(f.j(), f.k());
  }
  return out;
}

/// Class table as emitted by the command line tool.
orbits::ClassTable cli_classes(int n) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"classes", "--n", std::to_string(n), "--format", "json", "--no-cache"}, out, err);
  if (code != 0) throw std::runtime_error("classes --n " + std::to_string(n) + " exited " + std::to_string(code));
  return render::parse_classes_json(out.str());
}

bf::TruthTable quad_table(int n, int j) {
  return bf::tt_from_monomials(mrs::quad_monomials(mrs::QuadIndex(n, j)));
}

std::vector<int> quad_indices(int n) {
  std::vector<int> out;
  for (int j = 2; j <= mrs::max_quad_index(n); ++j) out.push_back(j);
  if (n % 2 == 0) out.push_back(n / 2 + 1);
  return out;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Outcome table_n9() {
  Outcome o;
  const auto got = as_list(cli_classes(9));
  if (got != oracle::table_n9()) o.fail("class list differs from the published n = 9 table");
  o.detail = o.ok ? "3 classes, sizes 3/6/1" : o.detail;
  return o;
}

Outcome table_n27() {
  Outcome o;
  const auto got = as_list(cli_classes(27));
  if (got != oracle::table_n27()) o.fail("class list differs from the published n = 27 table");
  if (o.ok) o.detail = "9 classes, sizes 9,18x5,3,6,1, last class {(1,10,19)}";
  return o;
}

Outcome small_n() {
  Outcome o;
  for (int n = 5; n <= 8; ++n)
    if (oracle::as_partition(as_list(cli_classes(n))) != oracle::as_partition(oracle::small_n(n)))
      o.fail("n = " + std::to_string(n) + " classes differ");
  if (o.ok) o.detail = "n = 5, 6, 7, 8 match";
  return o;
}

Outcome prime_census() {
  Outcome o;
  int primes = 0;
  for (int p = 7; p <= 199; ++p) {
    if (!oracle::prime(p)) continue;
    ++primes;
    const auto report = structure::verify_prime(p);
    if (!report.passed) o.fail("verify_prime(" + std::to_string(p) + ") failed");
    const auto table = orbits::classes(p);
    if (static_cast<int>(table.classes.size()) != p / 6 + 1) o.fail("E(" + std::to_string(p) + ") wrong");
    int half = 0, third = 0, full = 0;
    const auto k = structure::cube_root_unity(p);
    for (const auto& c : table.classes) {
      const auto size = static_cast<int>(c.size());
      auto has = [&](int j, int kk) {
        for (const auto& f : c.members)
          if (f == mrs::canonicalize(p, j, kk)) return true;
        return false;
      };
      if (size == (p - 1) / 2 && has(2, 3)) ++half;
      else if (p % 6 == 1 && size == (p - 1) / 3 && has(2, *k + 2)) ++third;
      else if (size == p - 1) ++full;
      else o.fail("unexpected class size " + std::to_string(size) + " at p = " + std::to_string(p));
    }
    if (half != 1 || third != (p % 6 == 1 ? 1 : 0)) o.fail("size profile wrong at p = " + std::to_string(p));
  }
  if (o.ok) o.detail = std::to_string(primes) + " primes in [7, 199]";
  return o;
}

Outcome power3_census() {
  Outcome o;
  for (int k = 1; k <= 5; ++k)
    if (!structure::verify_power3(k).passed) o.fail("verify_power3(" + std::to_string(k) + ") failed");
  const auto c = structure::census(243);
  const std::map<std::int64_t, std::int64_t> want{{1, 1},  {3, 1},  {9, 1},  {27, 1}, {81, 1},
                                                  {6, 1},  {18, 5}, {54, 17}, {162, 53}};
  if (c.sizes != want) o.fail("census(243) differs");
  std::int64_t total = 0;
  for (const auto& [s, cnt] : c.sizes) total += s * cnt;
  if (total != 9721 || mrs::dn_size(243) != 9721) o.fail("function total is not 9721");
  if (c.class_count != ipow(3, 4)) o.fail("E(243) != 81");
  if (o.ok) o.detail = "k = 1..5; n = 243: 81 classes, 9721 functions";
  return o;
}

Outcome quadratic_formulas() {
  Outcome o;
  int checked = 0;
  for (int n = 2; n <= 20; ++n)
    for (int j : quad_indices(n)) {
      const auto formula = quad::quad_wt_nl(mrs::QuadIndex(n, j));
      const auto s = bf::summarize(quad_table(n, j));
      if (formula.weight != s.weight || formula.nonlinearity != s.nonlinearity)
        o.fail("mismatch at n = " + std::to_string(n) + ", j = " + std::to_string(j));
      ++checked;
    }
  if (o.ok) o.detail = std::to_string(checked) + " (n, j) pairs with n <= 20";
  return o;
}

Outcome xi_construction() {
  Outcome o;
  int pairs = 0;
  for (int n = 3; n <= 16; ++n) {
    const auto idx = quad_indices(n);
    for (int r : idx)
      for (int s : idx) {
        if (!quad::quad_equivalent(n, r, s)) continue;
        const auto xi = quad::build_xi(n, r, s);
        if (bf::apply_affine(quad_table(n, r), bf::AffineMap::from_permutation(xi)) != quad_table(n, s))
          o.fail("xi fails for n = " + std::to_string(n) + ", r = " + std::to_string(r) + ", s = " + std::to_string(s));
        ++pairs;
      }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " equivalent pairs with n <= 16";
  return o;
}

Outcome fixture_maps() {
  Outcome o;
  const auto self = bf::AffineMap::from_linear_forms(4, {{1, 2, 3}, {2, 3, 4}, {1, 3, 4}, {1, 2, 4}});
  if (bf::apply_affine(quad_table(4, 2), self) != quad_table(4, 2)) o.fail("n = 4 self-map");
  const auto eight = bf::AffineMap::from_linear_forms(
      8, {{2, 4, 7}, {5, 7, 8}, {4, 7, 8}, {3, 7, 8}, {4, 6, 7}, {1, 7, 8}, {7}, {8}});
  if (bf::apply_affine(quad_table(8, 2), eight) != quad_table(8, 4)) o.fail("n = 8 map to f_{8,4}");
  if (o.ok) o.detail = "f_{4,2} fixed; f_{8,2} mapped to f_{8,4}";
  return o;
}

Outcome burnside() {
  Outcome o;
  for (int n = 3; n <= 100; ++n)
    if (orbits::burnside_count(n) != static_cast<std::int64_t>(orbits::classes(n).classes.size()))
      o.fail("mismatch at n = " + std::to_string(n));
  if (o.ok) o.detail = "3 <= n <= 100";
  return o;
}

Outcome minimality() {
  Outcome o;
  for (int n = 4; n <= 200; ++n) {
    const auto phi = static_cast<std::size_t>(nt::euler_phi(n));
    if (orbits::orbit(n, mrs::CubicTriple::from_canonical(n, 2, 3)).size() != phi / 2)
      o.fail("|orbit(1,2,3)| at n = " + std::to_string(n));
    if (n > 8 && orbits::orbit(n, mrs::CubicTriple::from_canonical(n, 2, 4)).size() != phi)
      o.fail("|orbit(1,2,4)| at n = " + std::to_string(n));
  }
  if (o.ok) o.detail = "orbit sizes phi(n) and phi(n)/2 up to n = 200";
  return o;
}

Outcome conjecture() {
  Outcome o;
  std::size_t collisions = 0;
  for (int n = 5; n <= 20; ++n) {
    const auto r = structure::conjecture_check(n);
    if (!r.verdict) o.fail("verdict fails at n = " + std::to_string(n));
    collisions += r.collisions.size();
  }
  if (o.ok) o.detail = "5 <= n <= 20, " + std::to_string(collisions) + " (wt, N) collisions all separated";
  return o;
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(2024);
  auto random_table = [&](int n) {
    std::vector<bf::TruthTable::Word> words((std::size_t{1} << n) / 64 + 1, 0);
    const std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < size; ++m)
      if (rng() & 1U) words[m >> 6] |= std::uint64_t{1} << (m & 63);
    words.resize((size + 63) / 64);
    return bf::TruthTable(n, std::move(words));
  };

  for (int n = 1; n <= 16; ++n)
    for (int rep = 0; rep < 4; ++rep) {
      const auto t = random_table(n);
      const auto w = bf::walsh_spectrum(t);
      __int128 sum = 0;
      for (auto v : w) sum += static_cast<__int128>(v) * v;
      if (sum != (static_cast<__int128>(1) << (2 * n))) o.fail("Parseval at n = " + std::to_string(n));
      if (w[0] != static_cast<std::int64_t>(t.size()) - 2 * static_cast<std::int64_t>(bf::weight(t)))
        o.fail("W(0) identity at n = " + std::to_string(n));
    }
  for (int n = 1; n <= 10; ++n)
    for (int rep = 0; rep < 8; ++rep) {
      const auto t = random_table(n);
      const auto m = bf::anf(t);
      if (bf::tt_from_monomials(m) != t || bf::anf(bf::tt_from_monomials(m)) != m)
        o.fail("ANF round trip at n = " + std::to_string(n));
    }
  for (int n = 3; n <= 30; ++n) {
    const auto units = nt::units(n);
    const auto dn = mrs::enumerate_dn(n);
    for (int tau : units)
      for (int delta : units) {
        const orbits::SigmaTau st(n, tau), sd(n, delta), prod(n, (tau * delta) % n);
        for (const auto& f : dn)
          if (orbits::sigma_apply(st, orbits::sigma_apply(sd, f)) != orbits::sigma_apply(prod, f))
            o.fail("group law at n = " + std::to_string(n));
      }
    for (int tau : units) {
      const orbits::SigmaTau s(n, tau);
      for (const auto& f : dn) {
        const auto got = mrs::pattern(n, {1, orbits::sigma_index(s, f.j()), orbits::sigma_index(s, f.k())});
        const mrs::Pattern want{mrs::capital_mod(static_cast<std::int64_t>(tau) * (f.j() - 1), n),
                                mrs::capital_mod(static_cast<std::int64_t>(tau) * (f.k() - 1), n),
                                mrs::capital_mod(static_cast<std::int64_t>(tau) * (f.k() - f.j()), n)};
        if (got != want) o.fail("pattern scaling at n = " + std::to_string(n));
      }
    }
  }
  for (int n = 3; n <= 100; ++n)
    for (const auto& f : mrs::enumerate_dn(n))
      if (orbits::orbit(n, f).size() * orbits::stabilizer(n, f).size() != static_cast<std::size_t>(nt::euler_phi(n)))
        o.fail("orbit-stabilizer at n = " + std::to_string(n));
  if (o.ok) o.detail = "Parseval, W(0), ANF round trip, group law, orbit-stabilizer, pattern scaling";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "n = 9 class table", 1, table_n9},
      {2, "n = 27 class table", 1, table_n27},
      {3, "small-n class lists", 1, small_n},
      {4, "prime census", 10, prime_census},
      {5, "power-of-3 census", 30, power3_census},
      {6, "quadratic closed forms", 120, quadratic_formulas},
      {7, "xi construction", 60, xi_construction},
      {8, "fixed affine maps", 1, fixture_maps},
      {9, "Burnside cross-check", 10, burnside},
      {10, "minimality and stabilizers", 10, minimality},
      {11, "Walsh-profile conjecture evidence", 300, conjecture},
      {12, "property suites", 120, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = out.ok && in_time;
    if (!pass) ++failed;
    std::printf("%s criterion %2d (%s): %s [%.3f s, limit %.0f s]%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                out.detail.c_str(), secs, c.limit_seconds, in_time ? "" : " over time limit");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
