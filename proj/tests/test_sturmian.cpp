#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "alternabase/errors.hpp"
#include "alternabase/sturmian.hpp"
#include "support.hpp"

using namespace alternabase;

namespace {

Substitution random_binary(std::size_t total) {
  const auto first = static_cast<std::size_t>(testing::uniform(1, static_cast<long>(total) - 1));
  std::vector<Word> images(2);
  for (std::size_t j = 0; j < total; ++j) images[j < first ? 0 : 1].push_back(static_cast<Letter>(testing::uniform(0, 1)));
  return Substitution(2, std::move(images));
}

// All balanced binary words of the given length, by brute force.
std::vector<Word> balanced_words(std::size_t length) {
  std::vector<Word> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << length); ++bits) {
    Word w(length);
    for (std::size_t j = 0; j < length; ++j) w[j] = (bits >> j) & 1;
    if (is_balanced(w)) out.push_back(std::move(w));
  }
  return out;
}

std::string cf_text(const QuadNum& x) { return to_string(continued_fraction(x)); }

}  // namespace

TEST_CASE("balance") {
  CHECK(is_balanced(parse_word("0100101001001")));
  CHECK(is_balanced(Word{}));
  const auto v = find_balance_violation(parse_word("0011"));
  REQUIRE(v);
  CHECK(v->length == 2);
  CHECK(to_string(v->light) == "00");
  CHECK(v->light_offset == 0);
  CHECK(to_string(v->heavy) == "11");
  CHECK(v->heavy_offset == 2);
  CHECK(to_json(*v)["length"] == 2);
  const auto w = find_balance_violation(parse_word("010011"));
  REQUIRE(w);
  CHECK(w->length == 2);
  CHECK(w->light_offset == 2);
  CHECK(w->heavy_offset == 4);
  const auto three = find_balance_violation(parse_word("0001010"));
  CHECK(three->length == 3);
  CHECK(three->light_offset == 0);
  CHECK(three->heavy_offset == 3);
  CHECK_THROWS_AS(is_balanced(Word{0, 2}), NotBinaryWord);
}

TEST_CASE("balance agrees with a direct window comparison") {
  for (int k = 0; k < 300; ++k) {
    const auto len = static_cast<std::size_t>(testing::uniform(1, 14));
    Word w(len);
    for (auto& x : w) x = static_cast<Letter>(testing::uniform(0, 1));
    bool balanced = true;
    for (std::size_t n = 1; n <= len; ++n) {
      for (std::size_t i = 0; i + n <= len; ++i) {
        for (std::size_t j = 0; j + n <= len; ++j) {
          long a = 0, b = 0;
          for (std::size_t t = 0; t < n; ++t) a += static_cast<long>(w[i + t]), b += static_cast<long>(w[j + t]);
          if (std::labs(a - b) > 1) balanced = false;
        }
      }
    }
    CHECK(is_balanced(w) == balanced);
  }
}

TEST_CASE("continued fractions") {
  CHECK(cf_text(parse_quad("-1+sqrt(3)")) == "[0; (1, 2)]");
  CHECK(cf_text(QuadNum(Rational(1, 2))) == "[0; 2]");
  CHECK(cf_text(parse_quad("-1/6+sqrt(13)/6")) == "[0; 2, (3)]");
  CHECK(cf_text(parse_quad("(1+sqrt(5))/2")) == "[1; (1)]");
  CHECK(cf_text(parse_quad("sqrt(2)")) == "[1; (2)]");
  CHECK(cf_text(QuadNum(3)) == "[3]");
  CHECK(cf_text(QuadNum(Rational(-7, 3))) == "[-3; 1, 2]");
  const ContinuedFraction cut = continued_fraction(parse_quad("sqrt(2)"), 1);
  CHECK_FALSE(cut.complete);
  CHECK(to_json(continued_fraction(parse_quad("-1+sqrt(3)")))["text"] == "[0; (1, 2)]");
}

TEST_CASE("continued fraction convergents approach the value") {
  for (const char* text : {"-1+sqrt(3)", "(sqrt(61)-5)/5", "sqrt(13)/6-1/6", "1/7+sqrt(2)"}) {
    const QuadNum x = parse_quad(text);
    const ContinuedFraction cf = continued_fraction(x);
    REQUIRE(cf.complete);
    std::vector<Integer> terms = cf.preperiod;
    while (terms.size() < 80) terms.insert(terms.end(), cf.period.begin(), cf.period.end());
    // Evaluate the truncated fraction from the back.
    Rational value(terms[79]);
    for (std::size_t k = 79; k-- > 0;) value = Rational(terms[k]) + Rational(1) / value;
    const testing::Decimal err = testing::to_decimal(x) - testing::to_decimal(value);
    CHECK(abs(err) < testing::Decimal("1e-25"));
  }
}

TEST_CASE("generators and factorizations") {
  CHECK(to_string(generator(Generator::E)) == "0->1, 1->0");
  CHECK(to_string(generator(Generator::G)) == "0->0, 1->01");
  CHECK(to_string(generator(Generator::Gt)) == "0->0, 1->10");
  const std::vector<Generator> f{Generator::E, Generator::Gt, Generator::E, Generator::G, Generator::G, Generator::E};
  CHECK(to_string(f) == "E.G~.E.G^2.E");
  CHECK(compose_all(f) == parse_substitution("0->01011, 1->01"));
  CHECK(to_string(std::vector<Generator>{}) == "id");
  CHECK(compose_all({}) == Substitution::identity(2));
}

TEST_CASE("sturmian morphism test") {
  const MorphismVerdict running = sturmian_morphism_test(parse_substitution("0->01011, 1->01"));
  CHECK(running.sturmian);
  CHECK(to_string(running.factorization) == "E.G~.E.G^2.E");
  CHECK(sturmian_morphism_test(generator(Generator::E)).sturmian);
  CHECK(sturmian_morphism_test(parse_substitution("0->01, 1->0")).sturmian);
  CHECK_FALSE(sturmian_morphism_test(parse_substitution("0->01, 1->10")).sturmian);
  CHECK_FALSE(sturmian_morphism_test(parse_substitution("0->001, 1->100")).sturmian);
  CHECK_FALSE(sturmian_morphism_test(parse_substitution("0->01, 1->01")).sturmian);
  CHECK_FALSE(balance_criterion(parse_substitution("0->01, 1->10")));
  CHECK_THROWS_AS(sturmian_morphism_test(parse_substitution("0->01, 1->2, 2->0")), NotBinaryAlphabet);
  // Thue-Morse fixed point has both 00 and 11 within 64 letters.
  CHECK_FALSE(is_balanced(fixed_point_prefix(parse_substitution("0->01, 1->10"), 0, 64)));
}

TEST_CASE("both procedures agree on 1000 random binary morphisms") {
  const auto short_balanced = balanced_words(8);
  int sturmian_count = 0;
  for (int k = 0; k < 1000; ++k) {
    const Substitution s = random_binary(static_cast<std::size_t>(testing::uniform(2, 12)));
    MorphismVerdict verdict;
    REQUIRE_NOTHROW(verdict = sturmian_morphism_test(s));
    CHECK(verdict.sturmian == balance_criterion(s));
    CHECK(verdict.sturmian == peel_factorization(s).has_value());
    if (!verdict.sturmian) continue;
    ++sturmian_count;
    CHECK(compose_all(verdict.factorization) == s);
    for (const Word& w : short_balanced) CHECK(is_balanced(s.apply(w)));
    for (Letter seed : {Letter{0}, Letter{1}}) {
      if (s.is_prolongable(seed)) CHECK(is_balanced(fixed_point_prefix(s, seed, 1000)));
    }
  }
  CHECK(sturmian_count > 50);
}

TEST_CASE("classification of the sturmian cases") {
  const SturmianVerdict c1 = classify(testing::load_profile("golden.json"), 2000);
  CHECK(c1.case_tag == SturmianCase::Case1);
  CHECK(c1.parameters == std::vector<long>{1});
  CHECK(to_string(*c1.substitution) == "0->01, 1->0");
  CHECK(to_string(*c1.cf) == "[0; (1)]");
  CHECK_FALSE(c1.violation);

  const SturmianVerdict c2 = classify(testing::load_profile("golden_squared.json"), 2000);
  CHECK(c2.case_tag == SturmianCase::Case2);
  CHECK(c2.parameters == std::vector<long>{1});
  CHECK(to_string(*c2.substitution) == "0->001, 1->01");

  const SturmianVerdict c2b = classify(testing::load_profile("two_plus_sqrt3.json"), 2000);
  CHECK(c2b.case_tag == SturmianCase::Case2);
  CHECK(c2b.parameters == std::vector<long>{2});
  CHECK(to_string(*c2b.substitution) == "0->0001, 1->001");
  CHECK(c2b.frequency->rho0 == parse_quad("-1+sqrt(3)"));

  const SturmianVerdict c3 = classify(testing::load_profile("case3_d1_e2.json"), 2000);
  CHECK(c3.case_tag == SturmianCase::Case3);
  CHECK(c3.parameters == std::vector<long>{1, 2});
  CHECK(to_string(*c3.substitution) == "0->0010, 1->001");
  CHECK(c3.frequency->rho0 == parse_quad("-1+sqrt(3)"));
  CHECK(to_string(*c3.cf) == "[0; (1, 2)]");
  CHECK(c3.checked_prefix == 2000);
  CHECK_FALSE(c3.violation);

  // Case 3 with (d, e): substitution (0^e 1)^d 0, 0^e 1 and cf [0; 1, (e, d)].
  CHECK(to_string(*classify(testing::load_profile("case3_d2_e1.json"), 200).substitution) == "0->01010, 1->01");
  CHECK(to_string(*classify(testing::load_profile("case3_d2_e1.json"), 200).cf) == "[0; 1, (1, 2)]");
  CHECK(to_string(*classify(testing::load_profile("case3_d2_e2.json"), 200).cf) == "[0; 1, (2)]");
  CHECK(to_string(*classify(testing::load_profile("case3_d1_e1.json"), 200).cf) == "[0; (1)]");
}

TEST_CASE("classification of larger alphabets") {
  const SturmianVerdict r = classify(testing::load_profile("b13.json"), 2000);
  CHECK(r.case_tag == SturmianCase::NotBinary);
  REQUIRE(r.projection);
  CHECK(r.projection->classes == std::vector<std::size_t>{0, 1, 1, 1});
  CHECK(to_string(*r.projection->substitution) == "0->01011, 1->01");
  CHECK(r.projection->morphism->sturmian);
  CHECK(to_string(r.projection->morphism->factorization) == "E.G~.E.G^2.E");
  CHECK(r.projection->frequency->rho0 == parse_quad("-1/6+sqrt(13)/6"));
  CHECK(to_string(*r.projection->cf) == "[0; 2, (3)]");
  CHECK_FALSE(r.projection->violation);

  const SturmianVerdict n = classify(testing::load_profile("nonsturm.json"), 2000);
  CHECK(n.case_tag == SturmianCase::NotBinary);
  REQUIRE(n.projection);
  REQUIRE(n.projection->violation);
  const BalanceViolation& v = *n.projection->violation;
  CHECK(to_string(v.light) == "00");
  CHECK(to_string(v.heavy) == "11");
  CHECK(std::max(v.light_offset, v.heavy_offset) + v.length <= 17);
  CHECK_FALSE(n.projection->morphism->sturmian);

  const SturmianVerdict two = classify(testing::load_profile("integer2.json"), 100);
  CHECK(two.case_tag == SturmianCase::NotBinary);
  CHECK_FALSE(two.projection);
}

TEST_CASE("binary but not sturmian") {
  const SturmianVerdict v = classify(parry_profile(parse_base(std::string_view("[\"1+sqrt(3)\"]"))), 500);
  CHECK(v.case_tag == SturmianCase::BinaryNotSturmian);
  CHECK(v.violation.has_value());
  CHECK(to_text(v).find("not balanced") != std::string::npos);
}

TEST_CASE("sturmian prefixes of v_B are balanced over 2000 letters") {
  for (const auto& name : testing::corpus()) {
    const ParryProfile profile = testing::load_profile(name);
    const SturmianVerdict v = classify(profile, 2000);
    if (v.case_tag != SturmianCase::Case1 && v.case_tag != SturmianCase::Case2 && v.case_tag != SturmianCase::Case3) continue;
    CHECK(is_balanced(fixed_point_prefix(*v.substitution, 0, 2000)));
  }
}

TEST_CASE("frequencies") {
  for (const auto& name : testing::corpus()) {
    const ParryProfile profile = testing::load_profile(name);
    const SturmianVerdict v = classify(profile, 100);
    const std::optional<Substitution> s = v.substitution ? v.substitution
                                          : v.projection ? v.projection->substitution
                                                         : std::nullopt;
    const std::optional<Frequencies> f = v.frequency ? v.frequency
                                          : v.projection ? v.projection->frequency
                                                         : std::nullopt;
    if (!s || !f) continue;
    CAPTURE(name);
    const QuadNum delta = profile.base.product();
    CHECK(f->rho0 + f->rho1 == QuadNum(1));
    // Exact eigen-relation M rho = delta rho.
    const IntMatrix m = incidence(*s);
    for (std::size_t i = 0; i < 2; ++i) {
      const QuadNum lhs = QuadNum(Rational(m.at(i, 0))) * f->rho0 + QuadNum(Rational(m.at(i, 1))) * f->rho1;
      CHECK(lhs == delta * (i == 0 ? f->rho0 : f->rho1));
    }
    // Empirical frequency over 10^4 letters.
    const Word w = fixed_point_prefix(*s, 0, 10000);
    const double zeros = static_cast<double>(std::count(w.begin(), w.end(), Letter{0})) / 10000.0;
    CHECK(std::fabs(zeros - std::stod(f->rho0.to_decimal(12))) < 1e-2);
  }
}

TEST_CASE("closed forms of the case frequencies") {
  const ParryProfile g = testing::load_profile("golden.json");
  const QuadNum b = g.base.beta(0);
  CHECK(classify(g, 10).frequency->rho0 == b / (b + QuadNum(1)));
  const ParryProfile g2 = testing::load_profile("golden_squared.json");
  const QuadNum b2 = g2.base.beta(0);
  CHECK(classify(g2, 10).frequency->rho0 == (b2 - QuadNum(1)) / b2);
  for (const char* name : {"case3_d1_e1.json", "case3_d1_e2.json", "case3_d2_e1.json", "case3_d2_e2.json"}) {
    const ParryProfile c = testing::load_profile(name);
    const QuadNum b0 = c.base.beta(0);
    CHECK(classify(c, 10).frequency->rho0 == b0 / (b0 + QuadNum(1)));
  }
}

TEST_CASE("case 3 bases are roots of the stated quadratics") {
  for (const char* name : {"case3_d1_e1.json", "case3_d1_e2.json", "case3_d2_e1.json", "case3_d2_e2.json"}) {
    const ParryProfile profile = testing::load_profile(name);
    const SturmianVerdict v = classify(profile, 10);
    REQUIRE(v.case_tag == SturmianCase::Case3);
    const Integer d = v.parameters[0], e = v.parameters[1];
    const std::vector<Integer> p0{d, -d * e, -e}, p1{e, -d * e, -d}, pd{1, -(d * e + 2), 1};
    CHECK(evaluate_polynomial(p0, profile.base.beta(0)).is_zero());
    CHECK(evaluate_polynomial(p1, profile.base.beta(1)).is_zero());
    CHECK(evaluate_polynomial(pd, profile.base.product()).is_zero());
    // Largest roots: the other root has the opposite sign.
    CHECK(profile.base.beta(0) > QuadNum(1));
    CHECK(profile.base.beta(1) > QuadNum(1));
  }
}

TEST_CASE("verdict serialization") {
  const SturmianVerdict v = classify(testing::load_profile("case3_d1_e2.json"), 100);
  const nlohmann::json j = to_json(v);
  CHECK(j["case"] == "Case3");
  CHECK(to_text(v).find("balanced up to 100") != std::string::npos);
}
