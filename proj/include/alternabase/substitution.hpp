#pragma once

// Substitutions psi_{S^i(B)} and phi_{S^i(B)}, incidence matrices, fixed
// points, the Perron eigen-identity and the automaton of a Parry base.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alternabase/base.hpp"

namespace alternabase {

using Letter = std::size_t;
using Word = std::vector<Letter>;

/// Letters concatenated when all are below 10, comma-separated otherwise.
std::string to_string(const Word& w);
/// Inverse of to_string: "01012" or "0,1,10".
Word parse_word(std::string_view text);

/// Endomorphism of {0, ..., k-1}^* given by k nonempty images.
class Substitution {
 public:
  Substitution(std::size_t alphabet_size, std::vector<Word> images);
  static Substitution identity(std::size_t alphabet_size);

  std::size_t alphabet_size() const { return images_.size(); }
  const Word& image(Letter a) const { return images_.at(a); }
  const std::vector<Word>& images() const { return images_; }
  Word apply(const Word& w) const;
  /// sigma(seed) starts with seed and has length >= 2.
  bool is_prolongable(Letter seed) const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::vector<Word> images_;
};

/// `0->01, 1->2, 2->03, 3->02`.
std::string to_string(const Substitution& s);
/// Parses the to_string form (separators `,` or `;`, arrows `->` or `:`).
Substitution parse_substitution(std::string_view text);
nlohmann::json to_json(const Substitution& s);

/// outer o inner: a -> outer(inner(a)). Throws AlphabetMismatch.
Substitution compose(const Substitution& outer, const Substitution& inner);

/// Dense matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  IntMatrix power(std::size_t exponent) const;
  IntMatrix block(std::size_t row, std::size_t col, std::size_t height, std::size_t width) const;
  bool is_positive() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Row-major TSV.
std::string to_tsv(const IntMatrix& m);
nlohmann::json to_json(const IntMatrix& m);

/// (M)_{i,j} = |sigma(j)|_i.
IntMatrix incidence(const Substitution& s);

/// Smallest n <= (k-1)^2 + 1 with M^n entrywise positive, found with boolean
/// powers; nullopt when none exists (the matrix is not primitive).
std::optional<std::size_t> primitivity_exponent(const IntMatrix& m);
bool is_primitive(const IntMatrix& m);

/// Monic characteristic polynomial det(X*I - M), coefficients from X^k down
/// to X^0, by the Faddeev-LeVerrier recursion.
std::vector<Integer> characteristic_polynomial(const IntMatrix& m);
std::string polynomial_to_string(const std::vector<Integer>& coefficients);
QuadNum evaluate_polynomial(const std::vector<Integer>& coefficients, const QuadNum& x);

/// The first `length` letters of the fixed point of s starting with seed.
/// Throws NotProlongable.
Word fixed_point_prefix(const Substitution& s, Letter seed, std::size_t length);

/// psi_{S^shift(B)}(n) = 0^{m} (n+1) with m = m_{S^shift(B),n+1,0}.
Word psi_image(const QuasiGreedyTable& table, long shift, std::size_t n);
/// psi_{S^shift(B)} applied letterwise.
Word psi_apply(const QuasiGreedyTable& table, long shift, const Word& w);
/// psi_B o psi_{S(B)} o ... o psi_{S^{depth-1}(B)}(0), a prefix of w_B.
Word sadic_prefix(const QuasiGreedyTable& table, std::size_t depth);
/// A prefix of w_B of exactly `length` letters, deepening the S-adic
/// composition until it is long enough.
Word sadic_prefix_of_length(const QuasiGreedyTable& table, std::size_t length);

/// phi_{S^shift(B)} over {0, ..., ell*p + m*p - 1}.
Substitution phi(const QuasiGreedyTable& table, long shift);
/// phi_B o phi_{S(B)} o ... o phi_{S^{p-1}(B)}, which fixes v_B.
Substitution composed_phi(const QuasiGreedyTable& table);

struct PerronCheck {
  std::vector<QuadNum> deltas;  // Delta_0, ..., Delta_{ell*p+m*p-1}
  QuadNum eigenvalue;           // beta_{p-1} ... beta_0
};

/// Verifies sum_b |phi(a)|_b Delta_b = delta * Delta_a for every letter a,
/// i.e. D * Delta^T = delta * Delta^T with D the transposed incidence matrix
/// of the composed substitution. Throws EigenIdentityViolated.
PerronCheck perron_check(const ParryProfile& profile);

struct AutomatonEdge {
  std::size_t from = 0;  // vertex indices, see ParryAutomaton::index
  std::size_t to = 0;
  Digit label = 0;
};

/// Graph on {0..p-1} x {0..ell*p+m*p-1}. Vertices are ordered
/// (p-1,0), ..., (p-1,L-1), ..., (0,0), ..., (0,L-1).
class ParryAutomaton {
 public:
  ParryAutomaton(std::size_t p, std::size_t width, std::vector<AutomatonEdge> edges);

  std::size_t period() const { return p_; }
  std::size_t width() const { return width_; }
  std::size_t vertex_count() const { return p_ * width_; }
  std::size_t index(std::size_t shift, std::size_t level) const { return (p_ - 1 - shift) * width_ + level; }
  std::string vertex_label(std::size_t index) const;
  const std::vector<AutomatonEdge>& edges() const { return edges_; }

  /// Entry (a, b) counts arrows from a to b.
  IntMatrix adjacency() const;
  /// M_i: arrows from (i, r) to (i-1, s).
  IntMatrix block(std::size_t shift) const;
  bool is_strongly_connected() const;
  std::string to_dot() const;

 private:
  std::size_t p_;
  std::size_t width_;
  std::vector<AutomatonEdge> edges_;
};

ParryAutomaton build_automaton(const QuasiGreedyTable& table);

}  // namespace alternabase
