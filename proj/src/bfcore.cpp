#include "rsbf/bfcore.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <utility>

#include "rsbf/error.hpp"

namespace rsbf::bf {
namespace {

using Word = TruthTable::Word;

std::size_t word_count(int n) { return n >= 6 ? (std::size_t{1} << (n - 6)) : 1; }

Word tail_mask(int n) {
  return n >= 6 ? ~Word{0} : ((Word{1} << (std::uint64_t{1} << n)) - 1);
}

// Positions whose bit i is clear, for i < 6.
constexpr Word kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

// In-place binary Möbius transform: w[x] <- xor of w[y] over y subset of x.
// It is an involution, so the same routine maps ANF coefficients to values
// and back.
void moebius(std::vector<Word>& w, int n) {
  for (int i = 0; i < std::min(n, 6); ++i) {
    const int stride = 1 << i;
    for (Word& word : w) word ^= (word & kLowHalf[i]) << stride;
  }
  for (int i = 6; i < n; ++i) {
    const std::size_t stride = std::size_t{1} << (i - 6);
    for (std::size_t base = 0; base < w.size(); base += 2 * stride) {
      for (std::size_t j = base; j < base + stride; ++j) w[j + stride] ^= w[j];
    }
  }
}

std::uint64_t index_mask(const Monomial& term, int n) {
  std::uint64_t mask = 0;
  for (int t : term) mask |= std::uint64_t{1} << (n - t);
  return mask;
}

void check_dims(int n) {
  if (n < 1) throw DomainError("variable count must be >= 1, got " + std::to_string(n));
  if (n > kHardMaxVars) {
    throw ResourceError("n = " + std::to_string(n) + " exceeds the hard truth-table cap of " +
                        std::to_string(kHardMaxVars));
  }
}

}  // namespace

void check_cap(int n, VarCap cap) {
  check_dims(n);
  if (n > cap.max_vars) {
    throw ResourceError("n = " + std::to_string(n) + " exceeds the truth-table cap of " +
                        std::to_string(cap.max_vars) +
                        (cap.max_vars < kHardMaxVars ? " (use --max-n-override to raise it to " +
                                                           std::to_string(kHardMaxVars) + ")"
                                                     : std::string{}));
  }
}

// ---------------------------------------------------------------------------
// TruthTable

TruthTable::TruthTable(int n) : n_(n) {
  check_dims(n);
  words_.assign(word_count(n), 0);
}

TruthTable::TruthTable(int n, std::vector<Word> words) : n_(n), words_(std::move(words)) {
  check_dims(n);
  if (words_.size() != word_count(n)) {
    throw DomainError("truth table for n = " + std::to_string(n) + " needs " +
                      std::to_string(word_count(n)) + " words, got " +
                      std::to_string(words_.size()));
  }
  if ((words_.back() & ~tail_mask(n)) != 0) {
    throw DomainError("truth table has bits set beyond 2^n");
  }
}

// ---------------------------------------------------------------------------
// MonomialSet

MonomialSet::MonomialSet(int n, const std::vector<Monomial>& terms) : n_(n) {
  if (n < 1) throw DomainError("variable count must be >= 1");
  std::vector<Monomial> normalized;
  normalized.reserve(terms.size());
  for (Monomial term : terms) {
    for (int t : term) {
      if (t < 1 || t > n) {
        throw DomainError("variable index " + std::to_string(t) + " outside [1, " +
                          std::to_string(n) + "]");
      }
    }
    std::sort(term.begin(), term.end());
    term.erase(std::unique(term.begin(), term.end()), term.end());
    normalized.push_back(std::move(term));
  }
  std::sort(normalized.begin(), normalized.end());
  // Keep monomials occurring an odd number of times.
  for (std::size_t i = 0; i < normalized.size();) {
    std::size_t j = i;
    while (j < normalized.size() && normalized[j] == normalized[i]) ++j;
    if ((j - i) % 2 == 1) terms_.push_back(normalized[i]);
    i = j;
  }
}

int MonomialSet::degree() const {
  std::size_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.size());
  return static_cast<int>(d);
}

// ---------------------------------------------------------------------------
// AffineMap

AffineMap::AffineMap(int n, std::vector<std::uint32_t> rows, std::uint32_t shift)
    : n_(n), rows_(std::move(rows)), shift_(shift) {
  check_dims(n);
  if (rows_.size() != static_cast<std::size_t>(n)) {
    throw DomainError("affine map needs " + std::to_string(n) + " rows, got " +
                      std::to_string(rows_.size()));
  }
  const std::uint32_t full = n == 32 ? ~0U : ((1U << n) - 1);
  if ((shift_ & ~full) != 0) throw DomainError("affine shift has bits beyond n");
  for (auto r : rows_) {
    if ((r & ~full) != 0) throw DomainError("affine row references a variable beyond n");
  }
  // Gaussian elimination over GF(2).
  std::vector<std::uint32_t> m = rows_;
  for (int col = 0; col < n; ++col) {
    const std::uint32_t bit = 1U << col;
    auto pivot = std::find_if(m.begin() + col, m.end(), [&](auto r) { return (r & bit) != 0; });
    if (pivot == m.end()) throw DomainError("affine map matrix is singular over GF(2)");
    std::iter_swap(m.begin() + col, pivot);
    for (int r = 0; r < n; ++r) {
      if (r != col && (m[r] & bit)) m[r] ^= m[col];
    }
  }
}

AffineMap AffineMap::from_linear_forms(int n, const std::vector<std::vector<int>>& forms,
                                       std::uint32_t shift) {
  std::vector<std::uint32_t> rows;
  rows.reserve(forms.size());
  for (const auto& form : forms) {
    std::uint32_t row = 0;
    for (int t : form) {
      if (t < 1 || t > n) throw DomainError("linear form references x" + std::to_string(t));
      row ^= 1U << (t - 1);
    }
    rows.push_back(row);
  }
  return AffineMap(n, std::move(rows), shift);
}

AffineMap AffineMap::from_permutation(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<std::vector<int>> forms;
  forms.reserve(perm.size());
  for (int image : perm) forms.push_back({image});
  return from_linear_forms(n, forms);
}

AffineMap AffineMap::identity(int n) {
  std::vector<std::uint32_t> rows(n);
  for (int r = 0; r < n; ++r) rows[r] = 1U << r;
  return AffineMap(n, std::move(rows));
}

// ---------------------------------------------------------------------------
// Operations

TruthTable tt_from_monomials(const MonomialSet& m, VarCap cap) {
  const int n = m.n();
  check_cap(n, cap);
  std::vector<Word> w(word_count(n), 0);
  for (const auto& term : m.terms()) {
    const std::uint64_t idx = index_mask(term, n);
    w[idx >> 6] ^= Word{1} << (idx & 63);
  }
  moebius(w, n);
  return TruthTable(n, std::move(w));
}

std::uint64_t weight(const TruthTable& t) {
  std::uint64_t total = 0;
  for (Word w : t.words()) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

std::vector<std::int64_t> walsh_spectrum(const TruthTable& t, VarCap cap) {
  check_cap(t.n(), cap);
  const std::uint64_t size = t.size();
  std::vector<std::int64_t> v(size);
  for (std::uint64_t m = 0; m < size; ++m) v[m] = t[m] ? -1 : 1;
  for (std::uint64_t h = 1; h < size; h <<= 1) {
    for (std::uint64_t base = 0; base < size; base += 2 * h) {
      for (std::uint64_t j = base; j < base + h; ++j) {
        const std::int64_t a = v[j];
        const std::int64_t b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
  return v;
}

namespace {

std::uint64_t nonlinearity_of_spectrum(std::span<const std::int64_t> spectrum, int n) {
  std::uint64_t peak = 0;
  for (auto w : spectrum) peak = std::max(peak, static_cast<std::uint64_t>(std::llabs(w)));
  return (std::uint64_t{1} << (n - 1)) - peak / 2;
}

}  // namespace

std::uint64_t nonlinearity(const TruthTable& t, VarCap cap) {
  const auto spectrum = walsh_spectrum(t, cap);
  return nonlinearity_of_spectrum(spectrum, t.n());
}

WalshProfile profile_of_spectrum(std::span<const std::int64_t> spectrum) {
  WalshProfile p;
  for (auto w : spectrum) ++p.entries[static_cast<std::uint64_t>(std::llabs(w))];
  return p;
}

WalshProfile walsh_profile(const TruthTable& t, VarCap cap) {
  return profile_of_spectrum(walsh_spectrum(t, cap));
}

SpectralSummary summarize(const TruthTable& t, VarCap cap) {
  const auto spectrum = walsh_spectrum(t, cap);
  return {weight(t), nonlinearity_of_spectrum(spectrum, t.n()), profile_of_spectrum(spectrum)};
}

MonomialSet anf(const TruthTable& t, VarCap cap) {
  const int n = t.n();
  check_cap(n, cap);
  std::vector<Word> w(t.words().begin(), t.words().end());
  moebius(w, n);
  std::vector<Monomial> terms;
  for (std::size_t wi = 0; wi < w.size(); ++wi) {
    Word word = w[wi];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      word &= word - 1;
      const std::uint64_t idx = (static_cast<std::uint64_t>(wi) << 6) | static_cast<unsigned>(bit);
      Monomial term;
      for (int tvar = 1; tvar <= n; ++tvar) {
        if ((idx >> (n - tvar)) & 1U) term.push_back(tvar);
      }
      terms.push_back(std::move(term));
    }
  }
  return MonomialSet(n, terms);
}

TruthTable apply_affine(const TruthTable& t, const AffineMap& m) {
  const int n = t.n();
  if (m.n() != n) {
    throw DomainError("affine map dimension " + std::to_string(m.n()) +
                      " does not match table dimension " + std::to_string(n));
  }
  // Work in index space: index bit p carries variable x_{n-p}.
  std::vector<std::uint64_t> column(n, 0);  // image of index bit p under A
  std::uint64_t offset = 0;
  for (int r = 0; r < n; ++r) {
    const std::uint64_t out_bit = std::uint64_t{1} << (n - 1 - r);
    for (int tvar = 1; tvar <= n; ++tvar) {
      if ((m.rows()[r] >> (tvar - 1)) & 1U) column[n - tvar] ^= out_bit;
    }
    if ((m.shift() >> r) & 1U) offset ^= out_bit;
  }
  // Gray-code walk: consecutive inputs differ in one bit, so A x + b updates
  // by a single column.
  std::vector<Word> out(word_count(n), 0);
  std::uint64_t x = 0;
  std::uint64_t y = offset;
  const std::uint64_t size = t.size();
  for (std::uint64_t step = 0;; ++step) {
    if (t[y]) out[x >> 6] |= Word{1} << (x & 63);
    if (step + 1 == size) break;
    const int p = std::countr_zero(step + 1);
    x ^= std::uint64_t{1} << p;
    y ^= column[p];
  }
  return TruthTable(n, std::move(out));
}

}  // namespace rsbf::bf
