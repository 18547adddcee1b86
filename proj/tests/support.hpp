#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "alternabase/base.hpp"

namespace testing {

using Decimal = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<200>>;

inline Decimal to_decimal(const alternabase::Rational& q) {
  return Decimal(q.get_num().get_str()) / Decimal(q.get_den().get_str());
}

// Independent evaluation of a + b*sqrt(d) with 200 significant digits.
inline Decimal to_decimal(const alternabase::QuadNum& x) {
  Decimal root = sqrt(Decimal(x.d()));
  return to_decimal(x.a()) + to_decimal(x.b()) * root;
}

inline std::string data_path(const std::string& name) { return std::string(ALTERNABASE_TEST_DATA) + "/" + name; }

inline alternabase::AlternateBase load_base(const std::string& name) {
  std::ifstream file(data_path(name));
  std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  return alternabase::parse_base(std::string_view(text));
}

inline alternabase::ParryProfile load_profile(const std::string& name) {
  return alternabase::parry_profile(load_base(name));
}

inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> names = {
      "b13.json",         "b13_shift.json",     "integer2.json",       "integer3.json",
      "golden.json",      "golden_squared.json", "two_plus_sqrt3.json", "case3_d1_e1.json",
      "case3_d1_e2.json", "case3_d2_e1.json",   "case3_d2_e2.json",    "nonsturm.json",
  };
  return names;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240613);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline alternabase::Digit max_digit(const alternabase::AlternateBase& base) {
  alternabase::Digit m = 0;
  for (std::size_t i = 0; i < base.period(); ++i) {
    m = std::max<alternabase::Digit>(m, ceil(base.beta(static_cast<long>(i))).get_si() - 1);
  }
  return m;
}

inline alternabase::Digits random_digits(std::size_t length, alternabase::Digit bound) {
  alternabase::Digits out;
  for (std::size_t k = 0; k < length; ++k) out.push_back(uniform(0, bound));
  return out;
}

// Admissible finite words, integer and fractional parts of up to 6 digits.
inline std::vector<alternabase::DigitWord> random_admissible(const alternabase::ParryProfile& profile, std::size_t count) {
  std::vector<alternabase::DigitWord> out;
  const alternabase::Digit bound = max_digit(profile.base);
  while (out.size() < count) {
    alternabase::DigitWord w = alternabase::DigitWord::make(random_digits(uniform(0, 6), bound),
                                  random_digits(uniform(0, 6), bound), {});
    if (alternabase::is_admissible(profile, w)) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace testing
