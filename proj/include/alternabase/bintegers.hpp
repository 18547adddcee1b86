#pragma once

// B-integers of a Parry alternate base: the maxima M_{B,n}, the gaps Delta_n,
// the radix successor and the gap words w_B / v_B.

#include <cstddef>
#include <vector>

#include "alternabase/base.hpp"

namespace alternabase {

struct MaxBelow {
  DigitWord expansion;  // d_B(M_{B,n}) = d_{n,1} ... d_{n,n}
  QuadNum value;
};

/// Largest B-integer below beta_{n-1} ... beta_0, read off d*_{S^n(B)}(1).
MaxBelow max_below(const ParryProfile& profile, std::size_t n);

/// Delta_n = beta_{n-1} ... beta_0 - M_{B,n}, computed as val_B(0 . d_{n,n+1} d_{n,n+2} ...).
QuadNum delta(const ParryProfile& profile, std::size_t n);

/// m_{B,n,0} = d_{n,n}: last digit of d_B(M_{B,n}), n >= 1.
Digit last_max_digit(const QuasiGreedyTable& table, std::size_t n);

struct Successor {
  DigitWord expansion;
  std::size_t letter;  // highest index where the two expansions differ
};

/// Next B-integer in radix order. Scans carry positions n = 0, 1, ... and
/// keeps the first one whose increment (with zeros below) is admissible.
Successor successor(const QuasiGreedyTable& table, const DigitWord& expansion);

/// ell*p + ((w - ell*p) mod m*p) for w >= ell*p, identity below.
std::size_t project_letter(const QuasiGreedyTable& table, std::size_t w);

struct BIntegerEntry {
  std::size_t index = 0;
  QuadNum value;
  DigitWord expansion;
  std::size_t gap_letter = 0;        // w_k
  std::size_t projected_letter = 0;  // v_k
};

/// Forward-only generator over x_0 = 0 < x_1 = 1 < x_2 < ...
class BIntegerGenerator {
 public:
  explicit BIntegerGenerator(ParryProfile profile);

  BIntegerEntry next();

 private:
  ParryProfile profile_;
  DigitWord current_;
  std::size_t index_ = 0;
};

std::vector<BIntegerEntry> enumerate(const ParryProfile& profile, std::size_t count);

/// The first `count` letters of w_B, from the successor recurrence.
std::vector<std::size_t> gap_word(const QuasiGreedyTable& table, std::size_t count);
/// The first `count` letters of v_B, projected from gap_word.
std::vector<std::size_t> projected_gap_word(const QuasiGreedyTable& table, std::size_t count);

/// Groups the letters 0 ... ell*p+m*p-1 by equal gap value: letter a maps to
/// the rank of Delta_a among the distinct values, ranked by first appearance.
std::vector<std::size_t> gap_classes(const ParryProfile& profile);

}  // namespace alternabase
