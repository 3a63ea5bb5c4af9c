#ifndef RSBF_BFCORE_HPP
#define RSBF_BFCORE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

// Exact Boolean-function engine over bit-packed truth tables.
//
// Index convention: entry m of a table in n variables holds f(x_1, ..., x_n)
// with x_t = bit (n - t) of m, i.e. x_1 is the most significant bit. Index 0
// is the all-zero input and index 1 is (0, ..., 0, 1).
namespace rsbf::bf {

inline constexpr int kDefaultMaxVars = 24;
inline constexpr int kHardMaxVars = 28;

/// Upper bound on the variable count for operations that materialize 2^n
/// entries. The default keeps a spectrum buffer at 128 MiB.
struct VarCap {
  int max_vars = kDefaultMaxVars;

  static VarCap standard() { return {}; }
  static VarCap hard() { return {kHardMaxVars}; }
};

/// Throws ResourceError naming the cap when n exceeds it.
void check_cap(int n, VarCap cap);

class TruthTable {
 public:
  using Word = std::uint64_t;

  /// All-zero table in n variables, 1 <= n <= kHardMaxVars.
  explicit TruthTable(int n);

  /// Takes ownership of packed words (bit m of the table is bit m % 64 of
  /// word m / 64). Bits beyond 2^n in the last word must be clear.
  TruthTable(int n, std::vector<Word> words);

  int n() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }
  bool operator[](std::uint64_t m) const { return (words_[m >> 6] >> (m & 63)) & 1U; }
  std::span<const Word> words() const { return words_; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int n_;
  std::vector<Word> words_;
};

/// One monomial: ascending 1-based variable indices. The empty monomial is
/// the constant 1.
using Monomial = std::vector<int>;

/// A reduced mod-2 polynomial. Repeated monomials cancel in pairs at
/// construction, and repeated variables inside a monomial collapse (x*x = x).
class MonomialSet {
 public:
  MonomialSet(int n, const std::vector<Monomial>& terms);

  int n() const { return n_; }
  /// Lexicographically sorted, duplicate-free.
  const std::vector<Monomial>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int degree() const;

  friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

 private:
  int n_;
  std::vector<Monomial> terms_;
};

/// |W(a)| -> number of a attaining it.
struct WalshProfile {
  std::map<std::uint64_t, std::uint64_t> entries;

  friend bool operator==(const WalshProfile&, const WalshProfile&) = default;
  friend auto operator<=>(const WalshProfile&, const WalshProfile&) = default;
};

/// x -> A x + b over GF(2)^n with A invertible.
///
/// Row r (0-based) describes output coordinate r+1: bit (t-1) of rows[r] is
/// set when input variable x_t appears in it. Bit r of `shift` is b_{r+1}.
class AffineMap {
 public:
  AffineMap(int n, std::vector<std::uint32_t> rows, std::uint32_t shift = 0);

  /// Each form lists the 1-based input variables summed into that output
  /// coordinate, e.g. {{1,2,3}, {2,3,4}, ...} for y1 = x1+x2+x3, ...
  static AffineMap from_linear_forms(int n, const std::vector<std::vector<int>>& forms,
                                     std::uint32_t shift = 0);

  /// The substitution x_i -> x_{perm[i-1]}; perm holds 1-based images.
  /// Applying it to a table relabels every variable i of the ANF as perm(i).
  static AffineMap from_permutation(std::span<const int> perm);

  static AffineMap identity(int n);

  int n() const { return n_; }
  const std::vector<std::uint32_t>& rows() const { return rows_; }
  std::uint32_t shift() const { return shift_; }

 private:
  int n_;
  std::vector<std::uint32_t> rows_;
  std::uint32_t shift_;
};

TruthTable tt_from_monomials(const MonomialSet& m, VarCap cap = {});

std::uint64_t weight(const TruthTable& t);

/// W(a) = sum_x (-1)^(f(x) xor a.x), indexed like the table itself.
std::vector<std::int64_t> walsh_spectrum(const TruthTable& t, VarCap cap = {});

/// 2^(n-1) - max|W| / 2.
std::uint64_t nonlinearity(const TruthTable& t, VarCap cap = {});

WalshProfile walsh_profile(const TruthTable& t, VarCap cap = {});

/// Histogram of |W| over an already computed spectrum.
WalshProfile profile_of_spectrum(std::span<const std::int64_t> spectrum);

/// Möbius transform.
MonomialSet anf(const TruthTable& t, VarCap cap = {});

/// g(x) = f(A x + b), evaluated pointwise.
TruthTable apply_affine(const TruthTable& t, const AffineMap& m);

/// Weight, nonlinearity and Walsh profile from a single transform.
struct SpectralSummary {
  std::uint64_t weight = 0;
  std::uint64_t nonlinearity = 0;
  WalshProfile profile;
};

SpectralSummary summarize(const TruthTable& t, VarCap cap = {});

}  // namespace rsbf::bf

#endif  // RSBF_BFCORE_HPP
