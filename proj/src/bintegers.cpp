#include "alternabase/bintegers.hpp"

#include <utility>

#include "alternabase/errors.hpp"

namespace alternabase {

MaxBelow max_below(const ParryProfile& profile, std::size_t n) {
  Digits digits;
  for (std::size_t j = 1; j <= n; ++j) digits.push_back(profile.digit(static_cast<long>(n), j));
  DigitWord expansion = DigitWord::integer(std::move(digits));
  QuadNum value = val(profile.base, 0, expansion);
  return {std::move(expansion), std::move(value)};
}

QuadNum delta(const ParryProfile& profile, std::size_t n) {
  // Kept with period m*p (not canonicalized) so that val accepts it.
  const InfiniteWord tail = profile.normalized(static_cast<long>(n)).suffix(n);
  return val(profile.base, 0, DigitWord{{}, tail.prefix, tail.period});
}

Digit last_max_digit(const QuasiGreedyTable& table, std::size_t n) { return table.digit(static_cast<long>(n), n); }

Successor successor(const QuasiGreedyTable& table, const DigitWord& expansion) {
  if (!expansion.is_integer() || !is_admissible(table, expansion)) {
    throw NotAdmissible(to_string(expansion) + " is not a B-integer expansion");
  }
  const std::size_t length = expansion.integer_part.size();
  // by_position[n] = a_n
  Digits by_position(expansion.integer_part.rbegin(), expansion.integer_part.rend());
  for (std::size_t n = 0; n <= length; ++n) {
    Digits candidate = by_position;
    if (n == length) candidate.push_back(0);
    candidate[n] += 1;
    for (std::size_t k = 0; k < n; ++k) candidate[k] = 0;
    DigitWord word = DigitWord::integer(Digits(candidate.rbegin(), candidate.rend()));
    if (is_admissible(table, word)) return {std::move(word), n};
  }
  // Unreachable for a valid table: 1 0^N is always admissible.
  throw NotAdmissible("no admissible successor of " + to_string(expansion));
}

std::size_t project_letter(const QuasiGreedyTable& table, std::size_t w) {
  const std::size_t pre = table.preperiod_length();
  if (w < pre) return w;
  return pre + (w - pre) % table.period_length();
}

BIntegerGenerator::BIntegerGenerator(ParryProfile profile) : profile_(std::move(profile)) {}

BIntegerEntry BIntegerGenerator::next() {
  Successor step = successor(profile_, current_);
  BIntegerEntry entry;
  entry.index = index_++;
  entry.value = val(profile_.base, 0, current_);
  entry.expansion = std::move(current_);
  entry.gap_letter = step.letter;
  entry.projected_letter = project_letter(profile_, step.letter);
  current_ = std::move(step.expansion);
  return entry;
}

std::vector<BIntegerEntry> enumerate(const ParryProfile& profile, std::size_t count) {
  BIntegerGenerator generator(profile);
  std::vector<BIntegerEntry> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(generator.next());
  return out;
}

std::vector<std::size_t> gap_word(const QuasiGreedyTable& table, std::size_t count) {
  std::vector<std::size_t> out;
  out.reserve(count);
  DigitWord current;
  for (std::size_t k = 0; k < count; ++k) {
    Successor step = successor(table, current);
    out.push_back(step.letter);
    current = std::move(step.expansion);
  }
  return out;
}

std::vector<std::size_t> projected_gap_word(const QuasiGreedyTable& table, std::size_t count) {
  std::vector<std::size_t> out = gap_word(table, count);
  for (auto& letter : out) letter = project_letter(table, letter);
  return out;
}

std::vector<std::size_t> gap_classes(const ParryProfile& profile) {
  std::vector<QuadNum> distinct;
  std::vector<std::size_t> classes;
  for (std::size_t a = 0; a < profile.alphabet_size(); ++a) {
    const QuadNum gap = delta(profile, a);
    std::size_t c = 0;
    while (c < distinct.size() && !(distinct[c] == gap)) ++c;
    if (c == distinct.size()) distinct.push_back(gap);
    classes.push_back(c);
  }
  return classes;
}

}  // namespace alternabase
