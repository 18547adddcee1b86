#include "alternabase/base.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "alternabase/errors.hpp"

namespace alternabase {

namespace {

std::size_t positive_mod(long n, std::size_t p) {
  const long m = static_cast<long>(p);
  return static_cast<std::size_t>(((n % m) + m) % m);
}

// Ordering on (position class, remainder) pairs. Remainders of one expansion
// live in a single field, so structural order is a valid total order.
struct StateLess {
  bool operator()(const std::pair<std::size_t, QuadNum>& x, const std::pair<std::size_t, QuadNum>& y) const {
    if (x.first != y.first) return x.first < y.first;
    if (int c = cmp(x.second.a(), y.second.a()); c != 0) return c < 0;
    if (int c = cmp(x.second.b(), y.second.b()); c != 0) return c < 0;
    return x.second.d() < y.second.d();
  }
};

using StateMap = std::map<std::pair<std::size_t, QuadNum>, std::size_t, StateLess>;

std::string join(const Digits& digits, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(digits[k]);
  }
  return out;
}

Digit to_digit(const Integer& z) {
  if (!z.fits_slong_p()) throw MalformedInput("digit out of range: " + z.get_str());
  return z.get_si();
}

}  // namespace

// ---------------------------------------------------------------------------
// Infinite words

Digit InfiniteWord::at(std::size_t k) const {
  if (k < prefix.size()) return prefix[k];
  if (period.empty()) return 0;
  return period[(k - prefix.size()) % period.size()];
}

InfiniteWord InfiniteWord::suffix(std::size_t k) const {
  if (k <= prefix.size()) return {Digits(prefix.begin() + static_cast<long>(k), prefix.end()), period};
  if (period.empty()) return {};
  const std::size_t shift = (k - prefix.size()) % period.size();
  Digits rotated(period.begin() + static_cast<long>(shift), period.end());
  rotated.insert(rotated.end(), period.begin(), period.begin() + static_cast<long>(shift));
  return {{}, std::move(rotated)};
}

std::strong_ordering lex_compare(const InfiniteWord& x, const InfiniteWord& y) {
  // Two eventually periodic words agreeing on this many letters are equal.
  const std::size_t horizon = std::max(x.prefix.size(), y.prefix.size()) +
                              std::lcm(std::max<std::size_t>(x.period.size(), 1),
                                       std::max<std::size_t>(y.period.size(), 1));
  for (std::size_t k = 0; k < horizon; ++k) {
    const Digit a = x.at(k);
    const Digit b = y.at(k);
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Digit words

DigitWord DigitWord::integer(Digits digits) { return make(std::move(digits), {}, {}); }

DigitWord DigitWord::fraction(Digits preperiod, Digits period) {
  return make({}, std::move(preperiod), std::move(period));
}

DigitWord DigitWord::make(Digits integer_part, Digits preperiod, Digits period) {
  DigitWord w;
  auto first = std::find_if(integer_part.begin(), integer_part.end(), [](Digit d) { return d != 0; });
  w.integer_part.assign(first, integer_part.end());

  if (std::all_of(period.begin(), period.end(), [](Digit d) { return d == 0; })) period.clear();
  if (period.empty()) {
    while (!preperiod.empty() && preperiod.back() == 0) preperiod.pop_back();
  } else {
    const std::size_t s = period.size();
    for (std::size_t t = 1; t <= s; ++t) {
      if (s % t != 0) continue;
      bool repeats = true;
      for (std::size_t k = t; k < s && repeats; ++k) repeats = period[k] == period[k - t];
      if (repeats) {
        period.resize(t);
        break;
      }
    }
    while (!preperiod.empty() && preperiod.back() == period.back()) {
      preperiod.pop_back();
      std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    }
  }
  w.preperiod = std::move(preperiod);
  w.period = std::move(period);
  return w;
}

Digit DigitWord::frac_digit(std::size_t j) const { return fractional().at(j - 1); }

std::string to_string(const InfiniteWord& w) {
  std::string out = join(w.prefix, ",");
  if (!out.empty()) out += " ";
  out += "(" + (w.period.empty() ? std::string("0") : join(w.period, ",")) + ")^w";
  return out;
}

std::string to_string(const DigitWord& w) {
  if (w.empty()) return "ε";
  std::string out = w.integer_part.empty() ? std::string("0") : join(w.integer_part, ",");
  if (w.is_integer()) return out;
  out += " . " + join(w.preperiod, ",");
  if (!w.period.empty()) {
    if (!w.preperiod.empty()) out += " ";
    out += "(" + join(w.period, ",") + ")^w";
  }
  return out;
}

std::string to_compact_string(const DigitWord& w) {
  auto small = [](const Digits& ds) { return std::all_of(ds.begin(), ds.end(), [](Digit d) { return d < 10; }); };
  if (!small(w.integer_part) || !small(w.preperiod) || !small(w.period)) return to_string(w);
  if (w.empty()) return "ε";
  std::string out = w.integer_part.empty() ? std::string("0") : join(w.integer_part, "");
  if (w.is_integer()) return out;
  out += "." + join(w.preperiod, "");
  if (!w.period.empty()) out += "(" + join(w.period, "") + ")^w";
  return out;
}

namespace {

Digits parse_digit_list(std::string_view text) {
  Digits out;
  std::string item;
  auto flush = [&]() {
    if (item.empty()) throw MalformedInput("empty digit in '" + std::string(text) + "'");
    out.push_back(std::stoll(item));
    item.clear();
  };
  bool any = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      item += c;
      any = true;
    } else {
      throw MalformedInput("unexpected '" + std::string(1, c) + "' in digit list '" + std::string(text) + "'");
    }
  }
  if (any || !out.empty()) flush();
  return out;
}

}  // namespace

DigitWord parse_digit_word(std::string_view text) {
  std::string s(text);
  if (s.find("ε") != std::string::npos) {
    s.erase(s.find("ε"), std::string("ε").size());
  }
  const auto dot = s.find('.');
  Digits integer_part = parse_digit_list(std::string_view(s).substr(0, dot));
  if (dot == std::string::npos) return DigitWord::integer(std::move(integer_part));
  std::string frac = s.substr(dot + 1);
  Digits period;
  const auto open = frac.find('(');
  if (open != std::string::npos) {
    const auto close = frac.find(")^w", open);
    if (close == std::string::npos) throw MalformedInput("period must be written (..)^w in '" + s + "'");
    if (frac.find_first_not_of(" \t", close + 3) != std::string::npos) {
      throw MalformedInput("trailing text after period in '" + s + "'");
    }
    period = parse_digit_list(std::string_view(frac).substr(open + 1, close - open - 1));
    if (period.empty()) throw MalformedInput("empty period in '" + s + "'");
    frac.resize(open);
  }
  return DigitWord::make(std::move(integer_part), parse_digit_list(frac), std::move(period));
}

nlohmann::json to_json(const DigitWord& w) {
  return {{"int_part", w.integer_part}, {"preperiod", w.preperiod}, {"period", w.period}};
}

DigitWord digit_word_from_json(const nlohmann::json& j) {
  try {
    auto field = [&](const char* key) {
      Digits ds = j.contains(key) ? j.at(key).get<Digits>() : Digits{};
      if (std::any_of(ds.begin(), ds.end(), [](Digit d) { return d < 0; })) {
        throw MalformedInput(std::string("negative digit in ") + key);
      }
      return ds;
    };
    return DigitWord::make(field("int_part"), field("preperiod"), field("period"));
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("digit word: ") + e.what());
  }
}

std::strong_ordering radix_compare(const DigitWord& x, const DigitWord& y) {
  if (x.integer_part.size() != y.integer_part.size()) {
    return x.integer_part.size() <=> y.integer_part.size();
  }
  for (std::size_t k = 0; k < x.integer_part.size(); ++k) {
    if (x.integer_part[k] != y.integer_part[k]) return x.integer_part[k] <=> y.integer_part[k];
  }
  return lex_compare(x.fractional(), y.fractional());
}

// ---------------------------------------------------------------------------
// Bases

AlternateBase::AlternateBase(std::vector<QuadNum> written_order) {
  if (written_order.empty()) throw MalformedInput("a base needs at least one entry");
  betas_.assign(written_order.rbegin(), written_order.rend());
  for (const auto& beta : betas_) {
    if (beta.d() != 1) {
      if (field_ != 1 && field_ != beta.d()) {
        throw MixedFields("base entries in Q(sqrt(" + std::to_string(field_) + ")) and Q(sqrt(" +
                          std::to_string(beta.d()) + "))");
      }
      field_ = beta.d();
    }
    if (beta <= QuadNum(1)) throw BaseNotGreaterThanOne(beta.to_string());
  }
}

const QuadNum& AlternateBase::beta(long n) const { return betas_[positive_mod(n, betas_.size())]; }

AlternateBase AlternateBase::shifted(long i) const {
  AlternateBase out;
  out.field_ = field_;
  out.betas_.reserve(betas_.size());
  for (std::size_t n = 0; n < betas_.size(); ++n) out.betas_.push_back(beta(static_cast<long>(n) + i));
  return out;
}

QuadNum AlternateBase::weight(std::size_t n) const {
  QuadNum w(1);
  for (std::size_t k = 0; k < n; ++k) w *= beta(static_cast<long>(k));
  return w;
}

QuadNum AlternateBase::product() const { return weight(period()); }

std::vector<QuadNum> AlternateBase::written_order() const { return {betas_.rbegin(), betas_.rend()}; }

AlternateBase parse_base(const nlohmann::json& j) {
  const nlohmann::json* entries = &j;
  if (j.is_object()) {
    if (!j.contains("betas")) throw MalformedInput("base object needs a 'betas' array");
    entries = &j.at("betas");
  }
  if (!entries->is_array()) throw MalformedInput("base must be a JSON array of entries");
  std::vector<QuadNum> betas;
  for (const auto& entry : *entries) betas.push_back(quad_from_json(entry));
  return AlternateBase(std::move(betas));
}

AlternateBase parse_base(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(e.what());
  }
  return parse_base(j);
}

nlohmann::json to_json(const AlternateBase& base) {
  nlohmann::json betas = nlohmann::json::array();
  for (const auto& beta : base.written_order()) betas.push_back(to_json(beta));
  return {{"betas", betas}};
}

// ---------------------------------------------------------------------------
// Valuation and expansions

QuadNum val(const AlternateBase& base, long shift, const DigitWord& w) {
  const std::size_t p = base.period();
  if (!w.period.empty() && w.period.size() % p != 0) {
    throw PeriodNotCompatible("period length " + std::to_string(w.period.size()) +
                              " is not a multiple of p = " + std::to_string(p));
  }
  // Integer part by Horner: position n carries beta_{shift+n-1} ... beta_shift.
  QuadNum value;
  const std::size_t n_int = w.integer_part.size();
  for (std::size_t k = 0; k < n_int; ++k) {
    const long position = static_cast<long>(n_int - 1 - k);
    if (k) value *= base.beta(shift + position);
    value += QuadNum(w.integer_part[k]);
  }

  // Fractional digit c_j sits at position -j with weight 1/(beta_{shift-1} ... beta_{shift-j}).
  QuadNum denominator(1);
  long position = shift;
  for (Digit c : w.preperiod) {
    --position;
    denominator *= base.beta(position);
    value += QuadNum(c) / denominator;
  }
  if (!w.period.empty()) {
    // One period block H repeats with scale Q = product over the block:
    // T = H + T/Q, hence T = H*Q/(Q-1).
    QuadNum head;
    QuadNum block(1);
    long pos = position;
    for (Digit c : w.period) {
      --pos;
      block *= base.beta(pos);
      head += QuadNum(c) / block;
    }
    const QuadNum tail = head * block / (block - QuadNum(1));
    value += tail / denominator;
  }
  return value;
}

Expansion greedy_expand(const AlternateBase& base, long shift, const QuadNum& x, std::size_t frac_digits) {
  if (sign(x) < 0) throw NegativeInput(x.to_string());
  if (x.is_zero()) return {};
  auto beta = [&](long n) -> const QuadNum& { return base.beta(shift + n); };

  Digits integer_part;
  QuadNum remainder = x;
  if (x >= QuadNum(1)) {
    // Minimal N with x < beta_N ... beta_0.
    long top = 0;
    QuadNum bound = beta(0);
    while (x >= bound) {
      ++top;
      bound *= beta(top);
    }
    remainder = x / bound;
    for (long n = top; n >= 0; --n) {
      const QuadNum scaled = beta(n) * remainder;
      const Integer digit = floor(scaled);
      integer_part.push_back(to_digit(digit));
      remainder = scaled - QuadNum(Rational(digit));
    }
  }

  Digits fraction;
  StateMap seen;
  const std::size_t p = base.period();
  for (long n = -1;; --n) {
    if (remainder.is_zero()) return {DigitWord::make(std::move(integer_part), std::move(fraction), {}), true};
    const std::size_t emitted = fraction.size();
    auto [it, inserted] = seen.try_emplace({positive_mod(n, p), remainder}, emitted);
    if (!inserted) {
      const std::size_t start = it->second;
      Digits period(fraction.begin() + static_cast<long>(start), fraction.end());
      fraction.resize(start);
      return {DigitWord::make(std::move(integer_part), std::move(fraction), std::move(period)), true};
    }
    if (emitted >= frac_digits) {
      return {DigitWord::make(std::move(integer_part), std::move(fraction), {}), false};
    }
    const QuadNum scaled = beta(n) * remainder;
    const Integer digit = floor(scaled);
    fraction.push_back(to_digit(digit));
    remainder = scaled - QuadNum(Rational(digit));
  }
}

DigitWord quasi_greedy_one(const AlternateBase& base, long shift, std::size_t state_budget) {
  if (state_budget == 0) throw MalformedInput("state budget must be at least 1");
  const std::size_t p = base.period();
  // Strictly positive remainders: a = ceil(beta*r) - 1 keeps r in (0, 1].
  QuadNum remainder(1);
  Digits digits;
  StateMap seen;
  seen.emplace(std::make_pair(std::size_t{0}, remainder), 0);
  for (std::size_t j = 1;; ++j) {
    const QuadNum scaled = base.beta(shift - static_cast<long>(j)) * remainder;
    const Integer digit = ceil(scaled) - 1;
    digits.push_back(to_digit(digit));
    remainder = scaled - QuadNum(Rational(digit));
    auto key = std::make_pair(j % p, remainder);
    if (auto it = seen.find(key); it != seen.end()) {
      const std::size_t start = it->second;
      Digits period(digits.begin() + static_cast<long>(start), digits.end());
      digits.resize(start);
      return DigitWord::fraction(std::move(digits), std::move(period));
    }
    if (seen.size() >= state_budget) {
      throw BudgetExhausted("no repetition among " + std::to_string(state_budget) +
                            " quasi-greedy states of shift " + std::to_string(shift));
    }
    seen.emplace(std::move(key), j);
  }
}

// ---------------------------------------------------------------------------
// Parry profiles

Digit QuasiGreedyTable::digit(long i, std::size_t j) const { return qg[positive_mod(i, p)].frac_digit(j); }

InfiniteWord QuasiGreedyTable::normalized(long i) const {
  const InfiniteWord full = qg[positive_mod(i, p)].fractional();
  InfiniteWord out;
  for (std::size_t k = 0; k < preperiod_length(); ++k) out.prefix.push_back(full.at(k));
  for (std::size_t k = 0; k < period_length(); ++k) out.period.push_back(full.at(preperiod_length() + k));
  return out;
}

QuasiGreedyTable QuasiGreedyTable::shifted(long i) const {
  QuasiGreedyTable out = *this;
  for (std::size_t k = 0; k < p; ++k) out.qg[k] = qg[positive_mod(static_cast<long>(k) + i, p)];
  return out;
}

QuasiGreedyTable QuasiGreedyTable::from_expansions(std::vector<DigitWord> words) {
  if (words.empty()) throw MalformedInput("no quasi-greedy expansions");
  QuasiGreedyTable table;
  table.p = words.size();
  std::size_t max_pre = 0;
  std::size_t period = table.p;
  for (const auto& w : words) {
    if (!w.integer_part.empty() || w.period.empty()) {
      throw MalformedInput("quasi-greedy expansions are infinite pure fractions: " + to_string(w));
    }
    max_pre = std::max(max_pre, w.preperiod.size());
    period = std::lcm(period, w.period.size());
  }
  table.ell = (max_pre + table.p - 1) / table.p;
  table.em = period / table.p;
  table.qg = std::move(words);
  return table;
}

ParryProfile ParryProfile::shifted(long i) const {
  return ParryProfile{QuasiGreedyTable::shifted(i), base.shifted(i)};
}

ParryProfile parry_profile(const AlternateBase& base, std::size_t state_budget) {
  std::vector<DigitWord> qg;
  for (std::size_t i = 0; i < base.period(); ++i) {
    qg.push_back(quasi_greedy_one(base, static_cast<long>(i), state_budget));
  }
  return ParryProfile{QuasiGreedyTable::from_expansions(std::move(qg)), base};
}

bool is_admissible(const QuasiGreedyTable& table, const DigitWord& w) {
  const InfiniteWord fraction = w.fractional();
  // Integer positions j = N-1 ... 0 are checked against d*_{S^{j+1}(B)}(1).
  const std::size_t n_int = w.integer_part.size();
  for (std::size_t k = 0; k < n_int; ++k) {
    const long j = static_cast<long>(n_int - 1 - k);
    InfiniteWord suffix{Digits(w.integer_part.begin() + static_cast<long>(k), w.integer_part.end()), fraction.period};
    suffix.prefix.insert(suffix.prefix.end(), fraction.prefix.begin(), fraction.prefix.end());
    if (lex_compare(suffix, table.qg[positive_mod(j + 1, table.p)].fractional()) >= 0) return false;
  }
  // Fractional position -k against d*_{S^{-k+1}(B)}(1); beyond the preperiod
  // the suffixes cycle with period lcm(|period|, p).
  const std::size_t horizon =
      fraction.prefix.size() + (fraction.period.empty() ? 0 : std::lcm(fraction.period.size(), table.p));
  for (std::size_t k = 1; k <= horizon; ++k) {
    const long j = -static_cast<long>(k);
    if (lex_compare(fraction.suffix(k - 1), table.qg[positive_mod(j + 1, table.p)].fractional()) >= 0) {
      return false;
    }
  }
  return true;
}

}  // namespace alternabase
