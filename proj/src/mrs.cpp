#include "rsbf/mrs.hpp"

#include <algorithm>
#include <set>

#include "rsbf/error.hpp"

namespace rsbf::mrs {

int capital_mod(std::int64_t a, int n) {
  std::int64_t r = a % n;
  if (r <= 0) r += n;
  return static_cast<int>(r);
}

namespace {

IndexPair ordered(int a, int b) { return a < b ? IndexPair{a, b} : IndexPair{b, a}; }

void require_cubic_n(int n) {
  if (n < 3) throw DomainError("n must be ≥ 3, got " + std::to_string(n));
}

}  // namespace

std::array<IndexPair, 3> one_terms(int n, std::int64_t p0, std::int64_t q0) {
  const int p = capital_mod(p0, n);
  const int q = capital_mod(q0, n);
  // Standard form of (1,p,q) has terms [i, i+p-1, i+q-1]. Variable 1 sits in
  // the first slot for i = 1, in the second for i = 2-p, in the third for
  // i = 2-q.
  const int i2 = capital_mod(2 - p, n);
  const int i3 = capital_mod(2 - q, n);
  return {
      ordered(p, q),
      ordered(i2, capital_mod(i2 + q - 1, n)),
      ordered(i3, capital_mod(i3 + p - 1, n)),
  };
}

std::array<IndexPair, 3> one_terms(const CubicTriple& f) { return one_terms(f.n(), f.j(), f.k()); }

CubicTriple canonicalize(int n, std::int64_t p0, std::int64_t q0) {
  require_cubic_n(n);
  const int p = capital_mod(p0, n);
  const int q = capital_mod(q0, n);
  if (p == 1 || q == 1 || p == q) {
    throw DomainError("degenerate cubic triple (1," + std::to_string(p0) + "," +
                      std::to_string(q0) + ") in n = " + std::to_string(n) +
                      ": indices coincide mod n");
  }
  const auto terms = one_terms(n, p, q);
  const auto best = *std::min_element(terms.begin(), terms.end());
  return CubicTriple(n, best.first, best.second);
}

CubicTriple CubicTriple::from_canonical(int n, int j, int k) {
  const CubicTriple c = canonicalize(n, j, k);
  if (c.j() != j || c.k() != k) {
    throw DomainError("(1," + std::to_string(j) + "," + std::to_string(k) +
                      ") is not canonical in n = " + std::to_string(n) + "; canonical form is " +
                      c.to_string());
  }
  return c;
}

std::string CubicTriple::to_string() const {
  return "(1," + std::to_string(j_) + "," + std::to_string(k_) + ")";
}

std::vector<CubicTriple> enumerate_dn(int n) {
  require_cubic_n(n);
  std::vector<CubicTriple> out;
  out.reserve(static_cast<std::size_t>(dn_size(n)));
  for (int j = 2; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      const CubicTriple c = canonicalize(n, j, k);
      if (c.j() == j && c.k() == k) out.push_back(c);
    }
  }
  return out;
}

std::int64_t dn_size(int n) {
  require_cubic_n(n);
  const std::int64_t m = n;
  return n % 3 == 0 ? (m * m - 3 * m + 6) / 6 : (m * m - 3 * m + 2) / 6;
}

Pattern pattern(int n, const IndexTriple& term) {
  const auto [i, j, k] = term;
  return {capital_mod(j - i, n), capital_mod(k - i, n), capital_mod(k - j, n)};
}

std::vector<IndexTriple> standard_form(const CubicTriple& f) {
  const int n = f.n();
  std::vector<IndexTriple> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) {
    out.push_back({i, capital_mod(i + f.j() - 1, n), capital_mod(i + f.k() - 1, n)});
  }
  return out;
}

std::vector<IndexTriple> cubic_terms(const CubicTriple& f) {
  std::vector<IndexTriple> out;
  std::set<IndexTriple> seen;
  for (const auto& term : standard_form(f)) {
    IndexTriple key = term;
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) out.push_back(term);
  }
  return out;
}

QuadIndex::QuadIndex(int n, int j) : n_(n), j_(j) {
  if (n < 2) throw DomainError("quadratic MRS functions need n >= 2, got " + std::to_string(n));
  const bool regular = j >= 2 && j <= max_quad_index(n);
  const bool short_fn = n % 2 == 0 && j == n / 2 + 1;
  if (!regular && !short_fn) {
    throw DomainError("quadratic index j = " + std::to_string(j) + " out of range for n = " +
                      std::to_string(n) + " (expected 2.." + std::to_string(max_quad_index(n)) +
                      (n % 2 == 0 ? " or " + std::to_string(n / 2 + 1) : std::string{}) + ")");
  }
}

std::vector<IndexPair> quad_terms(const QuadIndex& q) {
  const int n = q.n();
  const int count = q.is_short() ? n / 2 : n;
  std::vector<IndexPair> out;
  out.reserve(count);
  for (int i = 1; i <= count; ++i) out.emplace_back(i, capital_mod(i + q.j() - 1, n));
  return out;
}

bf::MonomialSet cubic_monomials(const CubicTriple& f) {
  std::vector<bf::Monomial> terms;
  for (const auto& t : cubic_terms(f)) terms.push_back({t[0], t[1], t[2]});
  return bf::MonomialSet(f.n(), terms);
}

bf::MonomialSet quad_monomials(const QuadIndex& q) {
  std::vector<bf::Monomial> terms;
  for (const auto& [a, b] : quad_terms(q)) terms.push_back({a, b});
  return bf::MonomialSet(q.n(), terms);
}

}  // namespace rsbf::mrs
