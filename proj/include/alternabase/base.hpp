#pragma once

// Alternate bases, digit words, greedy and quasi-greedy expansions, and the
// Parry profile that every later module consumes.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "alternabase/exactreal.hpp"

namespace alternabase {

using Digit = std::int64_t;
using Digits = std::vector<Digit>;

inline constexpr std::size_t kDefaultStateBudget = 4096;
inline constexpr std::size_t kDefaultFracDigits = 64;

/// Eventually periodic right-infinite word `prefix period^w`. An empty period
/// stands for the tail 0^w.
struct InfiniteWord {
  Digits prefix;
  Digits period;

  Digit at(std::size_t k) const;
  /// Drops the first `k` letters.
  InfiniteWord suffix(std::size_t k) const;
};

/// Lexicographic comparison of two eventually periodic infinite words.
std::strong_ordering lex_compare(const InfiniteWord& x, const InfiniteWord& y);

/// A two-way digit string with finitely many integer digits and an eventually
/// periodic fractional part.
///
/// `integer_part` holds a_{N-1} ... a_0 (most significant first, no leading
/// zero); the fractional digits are `preperiod` followed by `period`^w, and an
/// empty period means the expansion terminates. Words built through the
/// factories are canonical: the period is primitive and the preperiod minimal,
/// which makes `==` an equality of digit sequences.
struct DigitWord {
  Digits integer_part;
  Digits preperiod;
  Digits period;

  static DigitWord integer(Digits digits);
  static DigitWord fraction(Digits preperiod, Digits period);
  static DigitWord make(Digits integer_part, Digits preperiod, Digits period);

  bool is_integer() const { return preperiod.empty() && period.empty(); }
  bool terminates() const { return period.empty(); }
  bool empty() const { return integer_part.empty() && preperiod.empty() && period.empty(); }
  /// Fractional digit c_j, j >= 1.
  Digit frac_digit(std::size_t j) const;
  /// The fractional digits as an infinite word c_1 c_2 ...
  InfiniteWord fractional() const { return {preperiod, period}; }

  friend bool operator==(const DigitWord&, const DigitWord&) = default;
};

/// `a_{N-1},...,a_0 . c_1,...,c_r (c_{r+1},...,c_{r+s})^w`. The zero word
/// renders as `ε`.
std::string to_string(const DigitWord& w);
/// Digits concatenated when all are below 10 (as in printed tables),
/// comma-separated otherwise.
std::string to_compact_string(const DigitWord& w);
/// An infinite word alone, e.g. `2,0 (0,1)^w`.
std::string to_string(const InfiniteWord& w);
DigitWord parse_digit_word(std::string_view text);
nlohmann::json to_json(const DigitWord& w);
DigitWord digit_word_from_json(const nlohmann::json& j);

/// Radix order on two-way digit strings: significant length first, then
/// lexicographic from the most significant digit.
std::strong_ordering radix_compare(const DigitWord& x, const DigitWord& y);

/// A periodic two-way Cantor base (beta_{p-1}, ..., beta_0), every entry > 1
/// and all entries in one quadratic field.
class AlternateBase {
 public:
  /// Entries in written order beta_{p-1}, ..., beta_0.
  explicit AlternateBase(std::vector<QuadNum> written_order);

  std::size_t period() const { return betas_.size(); }
  /// beta_n for any integer n (indices are taken mod p).
  const QuadNum& beta(long n) const;
  /// S^i(B): the base whose n-th entry is beta_{n+i}.
  AlternateBase shifted(long i) const;
  long field() const { return field_; }
  /// beta_{p-1} ... beta_0.
  QuadNum product() const;
  /// beta_{n-1} ... beta_0, the weight of integer position n.
  QuadNum weight(std::size_t n) const;
  std::vector<QuadNum> written_order() const;

  friend bool operator==(const AlternateBase&, const AlternateBase&) = default;

 private:
  AlternateBase() = default;
  std::vector<QuadNum> betas_;  // betas_[n] = beta_n
  long field_ = 1;
};

/// Accepts a JSON array of entries (written order) or an object with a
/// `betas` array; entries are expression strings, integers or QuadNum objects.
/// An optional `period_note` string is ignored.
AlternateBase parse_base(const nlohmann::json& j);
AlternateBase parse_base(std::string_view json_text);
nlohmann::json to_json(const AlternateBase& base);

/// val of a digit word in S^shift(B). The period length must be a multiple of p.
QuadNum val(const AlternateBase& base, long shift, const DigitWord& w);

struct Expansion {
  DigitWord word;
  /// False when the fractional digit bound was reached before the expansion
  /// terminated or its period was found; `word` is then a truncation.
  bool exact = true;
};

/// Two-way greedy expansion d_{S^shift(B)}(x) of x >= 0.
Expansion greedy_expand(const AlternateBase& base, long shift, const QuadNum& x,
                        std::size_t frac_digits = kDefaultFracDigits);

/// Quasi-greedy expansion d*_{S^shift(B)}(1) as a pure fraction word. Throws
/// BudgetExhausted once more than `state_budget` distinct states were seen.
DigitWord quasi_greedy_one(const AlternateBase& base, long shift,
                           std::size_t state_budget = kDefaultStateBudget);

/// The quasi-greedy expansions of 1 of S^0(B), ..., S^{p-1}(B) together with
/// the common preperiod ell*p and period m*p. Everything downstream of a
/// certified base (substitutions, automaton) depends on this table only.
struct QuasiGreedyTable {
  std::size_t p = 1;
  std::size_t ell = 0;
  std::size_t em = 1;
  std::vector<DigitWord> qg;  // qg[i] = d*_{S^i(B)}(1), canonical form

  /// ell*p + m*p.
  std::size_t alphabet_size() const { return (ell + em) * p; }
  std::size_t preperiod_length() const { return ell * p; }
  std::size_t period_length() const { return em * p; }
  /// d_{i,j}: j-th digit (j >= 1) of d*_{S^i(B)}(1), i taken mod p.
  Digit digit(long i, std::size_t j) const;
  /// qg[i mod p] written with preperiod ell*p and period m*p.
  InfiniteWord normalized(long i) const;
  /// Table of S^i(B).
  QuasiGreedyTable shifted(long i) const;

  /// Builds the table from p canonical quasi-greedy words, choosing the
  /// minimal ell and m.
  static QuasiGreedyTable from_expansions(std::vector<DigitWord> qg);
};

/// A base certified Parry together with its quasi-greedy table.
struct ParryProfile : QuasiGreedyTable {
  AlternateBase base;

  ParryProfile shifted(long i) const;
};

ParryProfile parry_profile(const AlternateBase& base, std::size_t state_budget = kDefaultStateBudget);

/// Admissibility (greedy condition) of a digit word in base B: each suffix
/// starting at two-way index n-1 must be lexicographically below
/// d*_{S^n(B)}(1).
bool is_admissible(const QuasiGreedyTable& table, const DigitWord& w);

}  // namespace alternabase
