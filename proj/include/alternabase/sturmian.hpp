#pragma once

// Balance, sturmian morphisms over {E, G, G~}, continued fractions and the
// classification of v_B.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "alternabase/substitution.hpp"

namespace alternabase {

inline constexpr std::size_t kDefaultPrefixLength = 2048;

struct ContinuedFraction {
  std::vector<Integer> preperiod;  // a_0, ..., a_i
  std::vector<Integer> period;     // empty for rationals
  bool complete = true;            // false when max_terms ran out first
};

/// a_k = floor(x_k), x_{k+1} = 1/(x_k - a_k); stops on a repeated x_k or a
/// zero remainder.
ContinuedFraction continued_fraction(const QuadNum& x, std::size_t max_terms = 256);
/// `[0; 2, (3)]`.
std::string to_string(const ContinuedFraction& cf);
nlohmann::json to_json(const ContinuedFraction& cf);

struct BalanceViolation {
  std::size_t length = 0;
  std::size_t light_offset = 0;  // window with fewest 1s
  std::size_t heavy_offset = 0;  // window with most 1s
  Word light;
  Word heavy;
};

/// Smallest window length at which the number of 1s varies by two or more,
/// with the first window of each extreme count. Throws NotBinaryWord.
std::optional<BalanceViolation> find_balance_violation(const Word& w);
bool is_balanced(const Word& w);
nlohmann::json to_json(const BalanceViolation& v);

enum class Generator { E, G, Gt };

Substitution generator(Generator g);
/// X_1 o X_2 o ... o X_k; identity over {0, 1} when empty.
Substitution compose_all(const std::vector<Generator>& factors);
/// `E.G~.E.G^2.E`, `id` when empty.
std::string to_string(const std::vector<Generator>& factors);

/// sigma(10010010100101) is balanced and sigma(01) != sigma(10).
bool balance_criterion(const Substitution& s);
/// Strips a generator from the left while its inverse yields a morphism.
std::optional<std::vector<Generator>> peel_factorization(const Substitution& s);

struct MorphismVerdict {
  bool sturmian = false;
  std::vector<Generator> factorization;  // when sturmian
};

/// Runs both procedures; a disagreement is a logic_error. Throws
/// NotBinaryAlphabet.
MorphismVerdict sturmian_morphism_test(const Substitution& s);

struct Frequencies {
  QuadNum rho0;
  QuadNum rho1;
};

/// (rho_0, rho_1) with rho_0 + rho_1 = 1 and M rho = eigenvalue * rho, M the
/// incidence matrix of the binary substitution; nullopt if none exists.
std::optional<Frequencies> eigen_frequencies(const Substitution& s, const QuadNum& eigenvalue);

enum class SturmianCase { Case1, Case2, Case3, NotBinary, BinaryNotSturmian };
std::string to_string(SturmianCase c);

/// Report on the gap-class projection pi(v_B) for alphabets larger than two
/// whose gaps take exactly two values.
struct ProjectionReport {
  std::vector<std::size_t> classes;          // letter -> class
  std::optional<Substitution> substitution;  // induced on classes, if well defined
  std::optional<MorphismVerdict> morphism;
  std::optional<Frequencies> frequency;
  std::optional<ContinuedFraction> cf;
  std::optional<BalanceViolation> violation;
  std::size_t checked_prefix = 0;
};

struct SturmianVerdict {
  SturmianCase case_tag = SturmianCase::NotBinary;
  std::vector<long> parameters;              // (d) or (d, e)
  std::optional<Substitution> substitution;  // composed phi, when binary
  std::optional<Frequencies> frequency;
  std::optional<ContinuedFraction> cf;
  std::optional<BalanceViolation> violation;
  std::size_t checked_prefix = 0;
  std::optional<ProjectionReport> projection;
};

SturmianVerdict classify(const ParryProfile& profile, std::size_t prefix_length = kDefaultPrefixLength);
nlohmann::json to_json(const SturmianVerdict& v);
std::string to_text(const SturmianVerdict& v);

}  // namespace alternabase
