#include "alternabase/sturmian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "alternabase/bintegers.hpp"
#include "alternabase/errors.hpp"

namespace alternabase {

ContinuedFraction continued_fraction(const QuadNum& x, std::size_t max_terms) {
  ContinuedFraction cf;
  std::vector<QuadNum> states;
  std::vector<Integer> terms;
  QuadNum current = x;
  for (std::size_t k = 0; k < max_terms; ++k) {
    for (std::size_t j = 0; j < states.size(); ++j) {
      if (states[j] == current) {
        cf.preperiod.assign(terms.begin(), terms.begin() + static_cast<long>(j));
        cf.period.assign(terms.begin() + static_cast<long>(j), terms.end());
        // Keep a_0 outside the period: [1; (1)] rather than [(1)].
        if (cf.preperiod.empty()) {
          cf.preperiod.push_back(cf.period.front());
          std::rotate(cf.period.begin(), cf.period.begin() + 1, cf.period.end());
        }
        return cf;
      }
    }
    states.push_back(current);
    const Integer a = floor(current);
    terms.push_back(a);
    const QuadNum rest = current - QuadNum(Rational(a));
    if (rest.is_zero()) {
      cf.preperiod = std::move(terms);
      return cf;
    }
    current = QuadNum(1) / rest;
  }
  cf.preperiod = std::move(terms);
  cf.complete = false;
  return cf;
}

std::string to_string(const ContinuedFraction& cf) {
  std::vector<std::string> items;
  for (const auto& a : cf.preperiod) items.push_back(a.get_str());
  if (!cf.period.empty()) {
    std::string period = "(";
    for (std::size_t k = 0; k < cf.period.size(); ++k) {
      if (k) period += ", ";
      period += cf.period[k].get_str();
    }
    items.push_back(period + ")");
  }
  if (!cf.complete) items.push_back("...");
  std::string out = "[";
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k == 1) out += "; ";
    if (k > 1) out += ", ";
    out += items[k];
  }
  return out + "]";
}

nlohmann::json to_json(const ContinuedFraction& cf) {
  auto list = [](const std::vector<Integer>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& a : v) out.push_back(a.get_str());
    return out;
  };
  return {{"preperiod", list(cf.preperiod)},
          {"period", list(cf.period)},
          {"complete", cf.complete},
          {"text", to_string(cf)}};
}

// ---------------------------------------------------------------------------
// Balance

std::optional<BalanceViolation> find_balance_violation(const Word& w) {
  for (Letter a : w) {
    if (a > 1) throw NotBinaryWord("letter " + std::to_string(a));
  }
  std::vector<std::size_t> ones(w.size() + 1, 0);
  for (std::size_t k = 0; k < w.size(); ++k) ones[k + 1] = ones[k] + w[k];
  for (std::size_t n = 1; n <= w.size(); ++n) {
    std::size_t light = 0, heavy = 0;
    for (std::size_t i = 1; i + n <= w.size(); ++i) {
      const std::size_t count = ones[i + n] - ones[i];
      if (count < ones[light + n] - ones[light]) light = i;
      if (count > ones[heavy + n] - ones[heavy]) heavy = i;
    }
    if ((ones[heavy + n] - ones[heavy]) - (ones[light + n] - ones[light]) >= 2) {
      BalanceViolation v;
      v.length = n;
      v.light_offset = light;
      v.heavy_offset = heavy;
      v.light.assign(w.begin() + static_cast<long>(light), w.begin() + static_cast<long>(light + n));
      v.heavy.assign(w.begin() + static_cast<long>(heavy), w.begin() + static_cast<long>(heavy + n));
      return v;
    }
  }
  return std::nullopt;
}

bool is_balanced(const Word& w) { return !find_balance_violation(w).has_value(); }

nlohmann::json to_json(const BalanceViolation& v) {
  return {{"length", v.length},
          {"light", {{"offset", v.light_offset}, {"window", to_string(v.light)}}},
          {"heavy", {{"offset", v.heavy_offset}, {"window", to_string(v.heavy)}}}};
}

// ---------------------------------------------------------------------------
// Sturmian monoid

Substitution generator(Generator g) {
  switch (g) {
    case Generator::E:
      return Substitution(2, {{1}, {0}});
    case Generator::G:
      return Substitution(2, {{0}, {0, 1}});
    case Generator::Gt:
      return Substitution(2, {{0}, {1, 0}});
  }
  throw std::logic_error("unknown generator");
}

Substitution compose_all(const std::vector<Generator>& factors) {
  Substitution out = Substitution::identity(2);
  for (Generator g : factors) out = compose(out, generator(g));
  return out;
}

std::string to_string(const std::vector<Generator>& factors) {
  if (factors.empty()) return "id";
  std::string out;
  for (std::size_t k = 0; k < factors.size();) {
    std::size_t run = 1;
    while (k + run < factors.size() && factors[k + run] == factors[k]) ++run;
    if (!out.empty()) out += ".";
    out += factors[k] == Generator::E ? "E" : factors[k] == Generator::G ? "G" : "G~";
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

namespace {

void require_binary(const Substitution& s) {
  if (s.alphabet_size() != 2) {
    throw NotBinaryAlphabet("substitution over " + std::to_string(s.alphabet_size()) + " letters");
  }
}

// Inverse image under G (1 -> 01) or G~ (1 -> 10), parsing left to right.
std::optional<Word> unpeel(Generator g, const Word& w) {
  Word out;
  for (std::size_t k = 0; k < w.size();) {
    if (g == Generator::G) {
      if (w[k] == 1) return std::nullopt;
      if (k + 1 < w.size() && w[k + 1] == 1) {
        out.push_back(1);
        k += 2;
      } else {
        out.push_back(0);
        k += 1;
      }
    } else {
      if (w[k] == 0) {
        out.push_back(0);
        k += 1;
      } else if (k + 1 < w.size() && w[k + 1] == 0) {
        out.push_back(1);
        k += 2;
      } else {
        return std::nullopt;
      }
    }
  }
  return out;
}

std::optional<Substitution> unpeel(Generator g, const Substitution& s) {
  const bool has_one = std::any_of(s.images().begin(), s.images().end(), [](const Word& img) {
    return std::find(img.begin(), img.end(), Letter{1}) != img.end();
  });
  if (!has_one) return std::nullopt;
  std::vector<Word> images;
  for (const auto& img : s.images()) {
    auto pre = unpeel(g, img);
    if (!pre || pre->empty()) return std::nullopt;
    images.push_back(std::move(*pre));
  }
  return Substitution(2, std::move(images));
}

Substitution swap_letters(const Substitution& s) { return compose(generator(Generator::E), s); }

}  // namespace

bool balance_criterion(const Substitution& s) {
  require_binary(s);
  if (s.apply({0, 1}) == s.apply({1, 0})) return false;
  return is_balanced(s.apply({1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 1}));
}

std::optional<std::vector<Generator>> peel_factorization(const Substitution& s) {
  require_binary(s);
  std::vector<Generator> out;
  Substitution rest = s;
  const Substitution id = Substitution::identity(2);
  const Substitution e = generator(Generator::E);
  // Each G / G~ step shortens the images; E steps never repeat twice in a row.
  while (true) {
    if (rest == id) return out;
    if (rest == e) {
      out.push_back(Generator::E);
      return out;
    }
    bool peeled = false;
    for (Generator g : {Generator::G, Generator::Gt}) {
      if (auto next = unpeel(g, rest)) {
        out.push_back(g);
        rest = std::move(*next);
        peeled = true;
        break;
      }
    }
    if (peeled) continue;
    const Substitution swapped = swap_letters(rest);
    if (unpeel(Generator::G, swapped) || unpeel(Generator::Gt, swapped)) {
      out.push_back(Generator::E);
      rest = swapped;
      continue;
    }
    return std::nullopt;
  }
}

MorphismVerdict sturmian_morphism_test(const Substitution& s) {
  const bool criterion = balance_criterion(s);
  auto factors = peel_factorization(s);
  if (criterion != factors.has_value()) {
    throw std::logic_error("sturmian morphism procedures disagree on " + to_string(s));
  }
  if (factors && !(compose_all(*factors) == s)) {
    throw std::logic_error("factorization " + to_string(*factors) + " does not reproduce " + to_string(s));
  }
  MorphismVerdict v;
  v.sturmian = criterion;
  if (factors) v.factorization = std::move(*factors);
  return v;
}

std::optional<Frequencies> eigen_frequencies(const Substitution& s, const QuadNum& eigenvalue) {
  require_binary(s);
  const IntMatrix m = incidence(s);
  const QuadNum a(Rational(m.at(0, 0))), b(Rational(m.at(0, 1)));
  const QuadNum c(Rational(m.at(1, 0))), e(Rational(m.at(1, 1)));
  // First row: a rho0 + b (1 - rho0) = lambda rho0.
  const QuadNum denominator = eigenvalue - a + b;
  if (denominator.is_zero()) return std::nullopt;
  Frequencies f{b / denominator, QuadNum(1) - b / denominator};
  if (!(c * f.rho0 + e * f.rho1 == eigenvalue * f.rho1)) return std::nullopt;
  if (sign(f.rho0) < 0 || sign(f.rho1) < 0) return std::nullopt;
  return f;
}

// ---------------------------------------------------------------------------
// Classification

std::string to_string(SturmianCase c) {
  switch (c) {
    case SturmianCase::Case1:
      return "Case1";
    case SturmianCase::Case2:
      return "Case2";
    case SturmianCase::Case3:
      return "Case3";
    case SturmianCase::NotBinary:
      return "NotBinary";
    case SturmianCase::BinaryNotSturmian:
      return "BinaryNotSturmian";
  }
  return "?";
}

namespace {

bool is_d0(const DigitWord& w, Digit& d) {
  if (!w.preperiod.empty() || w.period.size() != 2 || w.period[1] != 0 || w.period[0] < 1) return false;
  d = w.period[0];
  return true;
}

ProjectionReport project(const ParryProfile& profile, const Substitution& sigma, std::size_t prefix_length) {
  ProjectionReport r;
  r.classes = gap_classes(profile);
  auto pi = [&](const Word& w) {
    Word out;
    for (Letter a : w) out.push_back(r.classes[a]);
    return out;
  };
  const Word projected = pi(fixed_point_prefix(sigma, 0, prefix_length));
  r.checked_prefix = prefix_length;
  r.violation = find_balance_violation(projected);
  std::vector<std::optional<Word>> images(2);
  bool consistent = true;
  for (Letter a = 0; a < sigma.alphabet_size(); ++a) {
    const Word img = pi(sigma.image(a));
    auto& slot = images[r.classes[a]];
    if (!slot) {
      slot = img;
    } else if (!(*slot == img)) {
      consistent = false;
    }
  }
  if (consistent && images[0] && images[1]) {
    r.substitution = Substitution(2, {*images[0], *images[1]});
    r.morphism = sturmian_morphism_test(*r.substitution);
    r.frequency = eigen_frequencies(*r.substitution, profile.base.product());
    if (r.frequency) r.cf = continued_fraction(r.frequency->rho0);
  }
  return r;
}

}  // namespace

SturmianVerdict classify(const ParryProfile& profile, std::size_t prefix_length) {
  SturmianVerdict v;
  const Substitution sigma = composed_phi(profile);
  if (profile.alphabet_size() != 2) {
    v.case_tag = SturmianCase::NotBinary;
    std::vector<std::size_t> classes = gap_classes(profile);
    if (*std::max_element(classes.begin(), classes.end()) == 1) v.projection = project(profile, sigma, prefix_length);
    return v;
  }
  v.substitution = sigma;
  const QuadNum& b0 = profile.base.beta(0);
  Digit d = 0, e = 0;
  const auto& qg = profile.qg;
  if (profile.p == 1 && is_d0(qg[0], d)) {
    v.case_tag = SturmianCase::Case1;
    v.parameters = {d};
    v.frequency = Frequencies{b0 / (b0 + 1), QuadNum(1) / (b0 + 1)};
  } else if (profile.p == 1 && qg[0].preperiod.size() == 1 && qg[0].period.size() == 1 && qg[0].period[0] >= 1 &&
             qg[0].preperiod[0] == qg[0].period[0] + 1) {
    d = qg[0].period[0];
    v.case_tag = SturmianCase::Case2;
    v.parameters = {d};
    v.frequency = Frequencies{(b0 - 1) / b0, QuadNum(1) / b0};
  } else if (profile.p == 2 && is_d0(qg[0], d) && is_d0(qg[1], e)) {
    v.case_tag = SturmianCase::Case3;
    v.parameters = {d, e};
    v.frequency = Frequencies{b0 / (b0 + 1), QuadNum(1) / (b0 + 1)};
  } else {
    v.case_tag = SturmianCase::BinaryNotSturmian;
    v.frequency = eigen_frequencies(sigma, profile.base.product());
  }
  if (v.frequency) {
    const auto check = eigen_frequencies(sigma, profile.base.product());
    if (!check || !(check->rho0 == v.frequency->rho0)) {
      throw std::logic_error("frequencies of " + to_string(sigma) + " fail the eigen-relation");
    }
    v.cf = continued_fraction(v.frequency->rho0);
  }
  v.checked_prefix = prefix_length;
  v.violation = find_balance_violation(fixed_point_prefix(sigma, 0, prefix_length));
  return v;
}

nlohmann::json to_json(const SturmianVerdict& v) {
  nlohmann::json out = {{"case", to_string(v.case_tag)}, {"parameters", v.parameters}};
  auto frequency_json = [](const Frequencies& f) {
    return nlohmann::json{{"rho0", to_json(f.rho0)}, {"rho1", to_json(f.rho1)},
                          {"rho0_text", f.rho0.to_string()}, {"rho1_text", f.rho1.to_string()}};
  };
  if (v.substitution) out["substitution"] = to_string(*v.substitution);
  if (v.frequency) out["frequency"] = frequency_json(*v.frequency);
  if (v.cf) out["cf"] = to_json(*v.cf);
  if (v.substitution) {
    out["checked_prefix"] = v.checked_prefix;
    out["violation"] = v.violation ? to_json(*v.violation) : nlohmann::json(nullptr);
  }
  if (v.projection) {
    const auto& p = *v.projection;
    nlohmann::json proj = {{"classes", p.classes}, {"checked_prefix", p.checked_prefix}};
    proj["violation"] = p.violation ? to_json(*p.violation) : nlohmann::json(nullptr);
    if (p.substitution) proj["substitution"] = to_string(*p.substitution);
    if (p.morphism) {
      proj["sturmian_morphism"] = p.morphism->sturmian;
      if (p.morphism->sturmian) proj["factorization"] = to_string(p.morphism->factorization);
    }
    if (p.frequency) proj["frequency"] = frequency_json(*p.frequency);
    if (p.cf) proj["cf"] = to_json(*p.cf);
    out["projection"] = proj;
  }
  return out;
}

namespace {

std::string describe(const std::optional<BalanceViolation>& violation, std::size_t prefix) {
  if (!violation) return "balanced up to " + std::to_string(prefix);
  std::ostringstream out;
  out << "not balanced: " << to_string(violation->light) << " at " << violation->light_offset << ", "
      << to_string(violation->heavy) << " at " << violation->heavy_offset;
  return out.str();
}

}  // namespace

std::string to_text(const SturmianVerdict& v) {
  std::ostringstream out;
  out << "case\t" << to_string(v.case_tag) << "\n";
  if (!v.parameters.empty()) {
    out << "parameters";
    for (long x : v.parameters) out << "\t" << x;
    out << "\n";
  }
  if (v.substitution) out << "substitution\t" << to_string(*v.substitution) << "\n";
  if (v.frequency) out << "rho0\t" << v.frequency->rho0.to_string() << "\nrho1\t" << v.frequency->rho1.to_string() << "\n";
  if (v.cf) out << "cf\t" << to_string(*v.cf) << "\n";
  if (v.substitution) {
    out << "balance\t" << describe(v.violation, v.checked_prefix) << "\n";
    if (v.case_tag == SturmianCase::BinaryNotSturmian && !v.violation) {
      out << "note\tno case matched; no violation found up to " << v.checked_prefix << "\n";
    }
  }
  if (v.projection) {
    const auto& p = *v.projection;
    out << "classes\t" << to_string(Word(p.classes.begin(), p.classes.end())) << "\n";
    if (p.substitution) out << "projected substitution\t" << to_string(*p.substitution) << "\n";
    if (p.morphism) {
      out << "sturmian morphism\t" << (p.morphism->sturmian ? "yes" : "no");
      if (p.morphism->sturmian) out << "\t" << to_string(p.morphism->factorization);
      out << "\n";
    }
    if (p.frequency) {
      out << "projected rho0\t" << p.frequency->rho0.to_string() << "\nprojected rho1\t"
          << p.frequency->rho1.to_string() << "\n";
    }
    if (p.cf) out << "projected cf\t" << to_string(*p.cf) << "\n";
    out << "projected balance\t" << describe(p.violation, p.checked_prefix) << "\n";
  }
  return out.str();
}

}  // namespace alternabase
