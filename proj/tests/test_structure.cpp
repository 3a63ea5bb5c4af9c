#include <doctest.h>

#include "oracles.hpp"
#include "rsbf/error.hpp"
#include "rsbf/hash.hpp"
#include "rsbf/numtheory.hpp"
#include "rsbf/orbits.hpp"
#include "rsbf/structure.hpp"

using namespace rsbf;
using namespace rsbf::structure;

namespace {

using Sizes = std::map<std::int64_t, std::int64_t>;

CubicTriple triple(int n, int j, int k) { return CubicTriple::from_canonical(n, j, k); }

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("census") {
  CHECK(census(27).sizes == Sizes{{1, 1}, {3, 1}, {6, 1}, {9, 1}, {18, 5}});
  CHECK(census(9).sizes == Sizes{{1, 1}, {3, 1}, {6, 1}});
  CHECK(census(8).sizes == Sizes{{1, 1}, {2, 3}});
  for (int n = 3; n <= 100; ++n) {
    const auto c = census(n);
    std::int64_t total = 0;
    std::int64_t count = 0;
    for (const auto& [size, cnt] : c.sizes) {
      total += size * cnt;
      count += cnt;
      REQUIRE(nt::euler_phi(n) % size == 0);
    }
    REQUIRE(total == mrs::dn_size(n));
    REQUIRE(total == c.total_functions);
    REQUIRE(count == orbits::burnside_count(n));
    REQUIRE(count == c.class_count);
  }
}

TEST_CASE("cube roots of unity") {
  CHECK(cube_root_unity(7) == 2);
  CHECK(cube_root_unity(13) == 3);
  CHECK_FALSE(cube_root_unity(11).has_value());
  CHECK_THROWS_AS(cube_root_unity(15), DomainError);
  for (int p = 5; p < 200; ++p) {
    if (!oracle::prime(p)) continue;
    std::optional<int> brute;
    for (int k = 2; k < p && !brute; ++k)
      if (static_cast<long long>(k) * k * k % p == 1) brute = k;
    CHECK(cube_root_unity(p) == brute);
  }
}

TEST_CASE("prime census") {
  const auto r7 = verify_prime(7);
  CHECK(r7.passed);
  CHECK(r7.summary == "E(7)=2, sizes {3:1, 2:1}");
  const auto t7 = orbits::classes(7);
  REQUIRE(t7.classes.size() == 2);
  CHECK(t7.classes[0].members ==
        std::vector<CubicTriple>{triple(7, 2, 3), triple(7, 2, 5), triple(7, 3, 5)});
  CHECK(t7.classes[1].members == std::vector<CubicTriple>{triple(7, 2, 4), triple(7, 2, 6)});

  CHECK(census(13).sizes == Sizes{{4, 1}, {6, 1}, {12, 1}});
  CHECK(census(13).total_functions == 22);
  CHECK(verify_prime(13).passed);
  CHECK(census(11).sizes == Sizes{{5, 1}, {10, 1}});
  CHECK(verify_prime(11).passed);
  CHECK_THROWS_AS(verify_prime(9), DomainError);
  CHECK_THROWS_AS(verify_prime(5), DomainError);

  for (int p = 7; p <= 199; ++p) {
    if (!oracle::prime(p)) continue;
    INFO("p=" << p);
    REQUIRE(verify_prime(p).passed);
    // Independent restatement of the size profile.
    const auto c = census(p);
    Sizes want;
    want[(p - 1) / 2] += 1;
    std::int64_t remaining = p / 6 + 1 - 1;
    if (p % 6 == 1) {
      want[(p - 1) / 3] += 1;
      --remaining;
    }
    if (remaining > 0) want[p - 1] += remaining;
    REQUIRE(c.sizes == want);
    // Every class holds some (1,2,m).
    for (const auto& cls : orbits::classes(p).classes) {
      bool has = false;
      for (const auto& f : cls.members) has = has || f.j() == 2;
      REQUIRE(has);
    }
  }
}

TEST_CASE("power-of-3 census") {
  for (int k = 1; k <= 5; ++k) {
    INFO("k=" << k);
    REQUIRE(verify_power3(k).passed);
    const int n = static_cast<int>(ipow(3, k));
    const auto table = orbits::classes(n);
    Sizes want;
    for (int j = 0; j < k; ++j) want[ipow(3, j)] += 1;
    for (int j = 1; j < k; ++j) want[2 * ipow(3, j)] += 2 * ipow(3, j - 1) - 1;
    CHECK(census_of(table).sizes == want);
    CHECK(census_of(table).class_count == ipow(3, k - 1));
    // One singleton, the short function; no class of size 2.
    int singletons = 0;
    for (const auto& c : table.classes) {
      CHECK(c.size() != 2);
      if (c.size() == 1) {
        ++singletons;
        CHECK(c.representative().is_short());
      }
      // Classes of size 3^j have the expected least member.
      for (int j = 0; j < k; ++j)
        if (static_cast<std::int64_t>(c.size()) == ipow(3, j)) {
          const int e = static_cast<int>(ipow(3, k - j - 1));
          CHECK(c.representative() == triple(n, e + 1, 2 * e + 1));
        }
    }
    CHECK(singletons == 1);
  }
  CHECK(census(243).sizes == Sizes{{1, 1}, {3, 1}, {9, 1}, {27, 1}, {81, 1}, {6, 1}, {18, 5}, {54, 17}, {162, 53}});
  CHECK(census(243).total_functions == 9721);
  CHECK_THROWS_AS(verify_power3(6), ResourceError);
  CHECK(verify_power3(2).summary.find("E(9)=3") != std::string::npos);
}

TEST_CASE("power-of-3 reduction") {
  for (int k = 2; k <= 4; ++k) CHECK(check_power3_reduction(k).passed);
}

TEST_CASE("smallest group") {
  for (int n = 6; n <= 60; ++n) {
    INFO("n=" << n);
    CHECK(verify_smallest_group(n).passed);
  }
  CHECK_THROWS_AS(verify_smallest_group(5), DomainError);
}

TEST_CASE("quadratic formulas") {
  for (int n = 2; n <= 16; ++n) CHECK(verify_quadratic_formulas(n).passed);
}

TEST_CASE("profile digest") {
  bf::WalshProfile p;
  p.entries = {{0, 7}, {8, 1}};
  CHECK(profile_to_string(p) == "0:7,8:1");
  CHECK(profile_digest(p).size() == 16);
  CHECK(profile_digest(p) == fnv1a_hex("0:7,8:1"));
  // Published FNV-1a 64 test vectors.
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("class invariants") {
  const auto r9 = class_invariants(9);
  REQUIRE(r9.size() == 3);
  CHECK(r9[0].weight != r9[1].weight);
  CHECK(r9[0].weight != r9[2].weight);
  CHECK(r9[1].weight != r9[2].weight);
  CHECK(r9[0].profile != r9[1].profile);
  CHECK(class_invariants(8).size() == 4);
  CHECK(class_invariants(6).size() == 3);
  // Output independent of worker count.
  const auto serial = class_invariants(14, {}, 1);
  const auto parallel = class_invariants(14, {}, 8);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].representative == parallel[i].representative);
    CHECK(serial[i].weight == parallel[i].weight);
    CHECK(serial[i].profile == parallel[i].profile);
    CHECK(serial[i].profile_digest == parallel[i].profile_digest);
  }
  CHECK_THROWS_AS(class_invariants(25), ResourceError);
}

TEST_CASE("conjecture evidence") {
  const auto r9 = conjecture_check(9);
  CHECK(r9.verdict);
  CHECK(r9.collisions.empty());
  CHECK(conjecture_check(3).verdict);
  CHECK(conjecture_check(3).classes.size() == 1);
  for (int n = 5; n <= 16; ++n) {
    const auto r = conjecture_check(n);
    INFO("n=" << n);
    CHECK(r.verdict);
    // Collisions are exactly the pairs sharing (weight, nonlinearity).
    std::size_t expected = 0;
    for (std::size_t a = 0; a < r.classes.size(); ++a)
      for (std::size_t b = a + 1; b < r.classes.size(); ++b)
        expected += r.classes[a].weight == r.classes[b].weight &&
                    r.classes[a].nonlinearity == r.classes[b].nonlinearity;
    CHECK(r.collisions.size() == expected);
  }
}
