#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "alternabase/errors.hpp"
#include "support.hpp"

using namespace alternabase;

namespace {

const AlternateBase& b13() {
  static const AlternateBase base = testing::load_base("b13.json");
  return base;
}

}  // namespace

TEST_CASE("base parsing") {
  CHECK(b13().period() == 2);
  CHECK(b13().beta(0) == parse_quad("(5+sqrt(13))/6"));
  CHECK(b13().beta(1) == parse_quad("(1+sqrt(13))/2"));
  CHECK(b13().beta(-1) == b13().beta(1));
  CHECK(parse_base(std::string_view("[2]")).period() == 1);
  CHECK_THROWS_AS(parse_base(std::string_view("[1]")), BaseNotGreaterThanOne);
  CHECK_THROWS_AS(parse_base(std::string_view("[\"1/2\"]")), BaseNotGreaterThanOne);
  CHECK_THROWS_AS(parse_base(std::string_view("[\"sqrt(2)\", \"sqrt(3)\"]")), MixedFields);
  CHECK_THROWS_AS(parse_base(std::string_view("[2,")), MalformedInput);
  CHECK_THROWS_AS(parse_base(std::string_view("[]")), MalformedInput);
  CHECK(parse_base(to_json(b13())) == b13());
}

TEST_CASE("shift is cyclic") {
  CHECK(b13().shifted(1) == testing::load_base("b13_shift.json"));
  CHECK(b13().shifted(2) == b13());
  CHECK(b13().shifted(-1) == b13().shifted(1));
}

TEST_CASE("digit word canonical form and text") {
  const DigitWord w = DigitWord::make({0, 1, 0}, {1, 0, 1, 0}, {1, 0});
  CHECK(w.integer_part == Digits{1, 0});
  CHECK(w.preperiod.empty());
  CHECK(w.period == Digits{1, 0});
  CHECK(DigitWord::make({}, {2, 0}, {0, 0}) == DigitWord::fraction({2}, {}));
  CHECK(DigitWord::fraction({}, {1, 1}).period == Digits{1});
  CHECK(to_string(DigitWord{}) == "ε");
  CHECK(to_string(DigitWord::make({1, 0, 0}, {1, 0, 1}, {})) == "1,0,0 . 1,0,1");
  CHECK(to_string(DigitWord::fraction({2, 0}, {0, 1})) == "0 . 2,0 (0,1)^w");
  CHECK(to_compact_string(DigitWord::integer({1, 0, 1, 0, 1})) == "10101");
  for (const auto& text : {"1,0,0 . 1,0,1", "0 . 2,0 (0,1)^w", "12,3", "ε", "0 . (1,0)^w"}) {
    const DigitWord parsed = parse_digit_word(text);
    CHECK(parse_digit_word(to_string(parsed)) == parsed);
    CHECK(digit_word_from_json(to_json(parsed)) == parsed);
  }
  CHECK_THROWS_AS(parse_digit_word("1,a"), MalformedInput);
  CHECK_THROWS_AS(parse_digit_word("0 . (1,0"), MalformedInput);
}

TEST_CASE("radix order") {
  auto cmp = [](const char* x, const char* y) { return radix_compare(parse_digit_word(x), parse_digit_word(y)); };
  CHECK(cmp("2,0", "1,0,0") == std::strong_ordering::less);
  CHECK(cmp("1,0,1", "1,0,0") == std::strong_ordering::greater);
  CHECK(cmp("1 . 1", "1 . 0,2") == std::strong_ordering::greater);
  CHECK(cmp("ε", "1") == std::strong_ordering::less);
}

TEST_CASE("val") {
  CHECK(val(b13(), 0, DigitWord::fraction({}, {0, 1})) == parse_quad("(-1+sqrt(13))/6"));
  CHECK(val(b13(), 0, DigitWord{}) == QuadNum(0));
  CHECK(val(b13(), 0, DigitWord::fraction({2, 0}, {0, 1})) == QuadNum(1));
  CHECK(val(b13(), 1, DigitWord::fraction({}, {1, 0})) == QuadNum(1));
  CHECK(val(b13(), 0, DigitWord::integer({2, 0})) == parse_quad("(5+sqrt(13))/3"));
  CHECK_THROWS_AS(val(b13(), 0, DigitWord::fraction({}, {1})), PeriodNotCompatible);
}

TEST_CASE("greedy expansions") {
  const auto e1 = greedy_expand(b13(), 0, parse_quad("(5+sqrt(13))/3"));
  CHECK(e1.exact);
  CHECK(e1.word == DigitWord::integer({2, 0}));
  CHECK(greedy_expand(b13(), 0, QuadNum(1)).word == DigitWord::integer({1}));
  CHECK(greedy_expand(b13(), 0, parse_quad("(8+sqrt(13))/3")).word == DigitWord::make({1, 0, 0}, {1, 0, 1}, {}));
  CHECK(greedy_expand(b13(), 0, QuadNum(0)).word == DigitWord{});
  CHECK_THROWS_AS(greedy_expand(b13(), 0, QuadNum(-1)), NegativeInput);

  const auto third = greedy_expand(parse_base(std::string_view("[2]")), 0, QuadNum(Rational(1, 3)));
  CHECK(third.exact);
  CHECK(third.word == DigitWord::fraction({}, {0, 1}));
  const auto root = greedy_expand(parse_base(std::string_view("[2]")), 0, parse_quad("sqrt(2)"), 20);
  CHECK_FALSE(root.exact);
  // sqrt(2) = 1.0110101000001001111 0... in binary; the trailing zero is dropped.
  CHECK(root.word == DigitWord::make({1}, {0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1}, {}));
}

TEST_CASE("quasi-greedy expansions of one") {
  CHECK(quasi_greedy_one(b13(), 0, 64) == DigitWord::fraction({2, 0}, {0, 1}));
  CHECK(quasi_greedy_one(b13(), 1, 64) == DigitWord::fraction({}, {1, 0}));
  CHECK(quasi_greedy_one(testing::load_base("golden.json"), 0, 8) == DigitWord::fraction({}, {1, 0}));
  CHECK(quasi_greedy_one(parse_base(std::string_view("[2]")), 0, 8) == DigitWord::fraction({}, {1}));
  CHECK_THROWS_AS(quasi_greedy_one(parse_base(std::string_view("[\"sqrt(5)\"]")), 0, 10), BudgetExhausted);
  CHECK_THROWS_AS(quasi_greedy_one(parse_base(std::string_view("[\"3/2\"]")), 0, 10), BudgetExhausted);
}

TEST_CASE("Parry profiles") {
  const ParryProfile p13 = parry_profile(b13());
  CHECK(p13.ell == 1);
  CHECK(p13.em == 1);
  CHECK(p13.alphabet_size() == 4);
  CHECK(to_string(p13.normalized(1)) == "1,0 (1,0)^w");

  const ParryProfile binary = parry_profile(parse_base(std::string_view("[2]")), 8);
  CHECK(binary.ell == 0);
  CHECK(binary.em == 1);
  CHECK(binary.qg[0] == DigitWord::fraction({}, {1}));

  const ParryProfile ns = testing::load_profile("nonsturm.json");
  CHECK(ns.qg[0] == DigitWord::fraction({}, {3, 0, 2, 0}));
  CHECK(ns.qg[1] == DigitWord::fraction({4}, {2, 0, 3, 0}));
  CHECK(ns.ell == 1);
  CHECK(ns.em == 2);

  CHECK_THROWS_AS(parry_profile(parse_base(std::string_view("[\"sqrt(5)\"]")), 10), BudgetExhausted);
}

TEST_CASE("every corpus quasi-greedy word evaluates to one and starts with a positive digit") {
  for (const auto& name : testing::corpus()) {
    const ParryProfile profile = testing::load_profile(name);
    for (std::size_t i = 0; i < profile.p; ++i) {
      const InfiniteWord w = profile.normalized(static_cast<long>(i));
      CHECK(val(profile.base, static_cast<long>(i), DigitWord{{}, w.prefix, w.period}) == QuadNum(1));
      CHECK(profile.digit(static_cast<long>(i), 1) >= 1);
      CHECK_FALSE(profile.qg[i].terminates());
    }
  }
}

TEST_CASE("admissibility") {
  const ParryProfile profile = parry_profile(b13());
  CHECK(is_admissible(profile, DigitWord::integer({1, 0, 1, 0, 1})));
  CHECK_FALSE(is_admissible(profile, DigitWord::integer({2, 1})));
  CHECK(is_admissible(profile, DigitWord{}));
  // The tail (10)^w after the first fractional digit equals d*_{S(B)}(1).
  CHECK(is_admissible(profile, DigitWord::fraction({}, {1, 0})));
  CHECK_FALSE(is_admissible(profile, DigitWord::fraction({}, {0, 1})));
}

TEST_CASE("val and greedy_expand are inverse on 100 random admissible words") {
  for (const char* name : {"b13.json", "nonsturm.json", "golden.json"}) {
    const ParryProfile profile = testing::load_profile(name);
    for (const auto& w : testing::random_admissible(profile, 100)) {
      const Expansion e = greedy_expand(profile.base, 0, val(profile.base, 0, w));
      CHECK(e.exact);
      CHECK(e.word == w);
    }
  }
}

TEST_CASE("numerical order agrees with radix order of expansions") {
  const ParryProfile profile = parry_profile(b13());
  const auto words = testing::random_admissible(profile, 60);
  for (const auto& x : words) {
    for (const auto& y : words) {
      const auto by_value = val(b13(), 0, x) <=> val(b13(), 0, y);
      CHECK(by_value == radix_compare(x, y));
    }
  }
}

TEST_CASE("greedy output is the radix-greatest representation") {
  // All integer words with five digits at most, grouped by value.
  const ParryProfile profile = parry_profile(b13());
  const Digit bound = testing::max_digit(b13());
  std::vector<Digits> words{{}};
  for (int length = 1; length <= 5; ++length) {
    std::vector<Digits> next;
    for (const auto& w : words) {
      if (static_cast<int>(w.size()) != length - 1) continue;
      for (Digit d = 0; d <= bound; ++d) {
        Digits x = w;
        x.push_back(d);
        next.push_back(x);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  std::map<std::string, DigitWord> greatest;
  std::map<std::string, QuadNum> values;
  for (const auto& digits : words) {
    const DigitWord w = DigitWord::integer(digits);
    const QuadNum x = val(b13(), 0, w);
    const std::string key = x.to_string();
    values.emplace(key, x);
    auto it = greatest.find(key);
    if (it == greatest.end() || radix_compare(w, it->second) > 0) greatest[key] = w;
  }
  for (const auto& [key, w] : greatest) {
    const Expansion e = greedy_expand(b13(), 0, values.at(key));
    REQUIRE(e.exact);
    CHECK(radix_compare(e.word, w) >= 0);
    // The greedy word may carry fractional digits, e.g. 100.101 for 11 + 1.
    if (e.word.is_integer() && e.word.integer_part.size() <= 5) CHECK(e.word == w);
    CHECK(is_admissible(profile, e.word));
  }
}

TEST_CASE("expansion in the shifted base moves the last integer digit behind the point") {
  const ParryProfile profile = parry_profile(b13());
  const QuadNum& b0 = b13().beta(0);
  for (const auto& w : testing::random_admissible(profile, 100)) {
    if (w.integer_part.empty()) continue;
    const QuadNum x = val(b13(), 0, w);
    Digits head(w.integer_part.begin(), w.integer_part.end() - 1);
    Digits frac{w.integer_part.back()};
    frac.insert(frac.end(), w.preperiod.begin(), w.preperiod.end());
    const DigitWord expected = DigitWord::make(head, frac, {});
    CHECK(greedy_expand(b13(), 1, x / b0).word == expected);
  }
}
