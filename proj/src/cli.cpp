#include "alternabase/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "alternabase/bintegers.hpp"
#include "alternabase/errors.hpp"
#include "alternabase/sturmian.hpp"
#include "alternabase/substitution.hpp"

namespace alternabase {

namespace {

std::string first_difference(const Word& x, const Word& y) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k] != y[k]) {
      return "first divergence at position " + std::to_string(k) + ": " + std::to_string(x[k]) + " vs " +
             std::to_string(y[k]);
    }
  }
  if (x.size() != y.size()) return "lengths differ: " + std::to_string(x.size()) + " vs " + std::to_string(y.size());
  return {};
}

Word as_word(const std::vector<std::size_t>& v) { return Word(v.begin(), v.end()); }

Word truncated(Word w, std::size_t n) {
  if (w.size() > n) w.resize(n);
  return w;
}

// True when x occurs in the increasing list.
bool contains(const std::vector<QuadNum>& sorted, const QuadNum& x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x,
                             [](const QuadNum& a, const QuadNum& b) { return (a <=> b) < 0; });
  return it != sorted.end() && *it == x;
}

}  // namespace

std::vector<CheckResult> verify_profile(const ParryProfile& profile, std::size_t prefix_length) {
  std::vector<CheckResult> out;
  auto record = [&](std::string name, bool passed, std::string detail = {}) {
    out.push_back({std::move(name), passed, std::move(detail)});
  };
  const std::size_t n = prefix_length;
  const std::size_t width = profile.alphabet_size();
  const ParryProfile tilde = profile.shifted(1);

  {
    std::string detail;
    for (std::size_t i = 0; i < profile.p && detail.empty(); ++i) {
      const InfiniteWord w = profile.normalized(static_cast<long>(i));
      const QuadNum v = val(profile.base, static_cast<long>(i), DigitWord{{}, w.prefix, w.period});
      if (!(v == QuadNum(1))) detail = "shift " + std::to_string(i) + " evaluates to " + v.to_string();
    }
    record("quasi-greedy expansions evaluate to 1", detail.empty(), detail);
  }

  const Word w_successor = as_word(gap_word(profile, n));
  {
    const std::string d = first_difference(w_successor, sadic_prefix_of_length(profile, n));
    record("w_B: successor enumeration = psi composition", d.empty(), d);
  }
  {
    const Word w_tilde = as_word(gap_word(tilde, n));
    const std::string d = first_difference(w_successor, truncated(psi_apply(profile, 0, w_tilde), n));
    record("w_B = psi_B(w_S(B))", d.empty(), d);
  }
  const Substitution sigma = composed_phi(profile);
  {
    const Word projected = as_word(projected_gap_word(profile, n));
    const std::string d = first_difference(projected, fixed_point_prefix(sigma, 0, n));
    record("v_B: projected successor word = composed phi fixed point", d.empty(), d);
  }
  {
    const auto entries = enumerate(profile, std::min<std::size_t>(n, 1000) + 1);
    std::string detail;
    for (std::size_t k = 0; k + 1 < entries.size() && detail.empty(); ++k) {
      if (!(entries[k + 1].value - entries[k].value == delta(profile, entries[k].gap_letter))) {
        detail = "gap after x_" + std::to_string(k) + " differs from Delta_" + std::to_string(entries[k].gap_letter);
      }
    }
    record("x_{k+1} - x_k = Delta_{w_k}", detail.empty(), detail);
  }
  try {
    const PerronCheck pc = perron_check(profile);
    record("eigen-identity with eigenvalue " + pc.eigenvalue.to_string(), true);
  } catch (const EigenIdentityViolated& e) {
    record("eigen-identity", false, e.what());
  }
  {
    std::string detail;
    const QuadNum& b0 = profile.base.beta(0);
    for (std::size_t k = 0; k < width && detail.empty(); ++k) {
      const QuadNum m(static_cast<long>(last_max_digit(profile, k + 1)));
      if (!(b0 * delta(tilde, k) == delta(profile, k + 1) + m)) detail = "fails at n = " + std::to_string(k);
      const QuadNum lhs = max_below(tilde, k).value;
      if (!(lhs == (max_below(profile, k + 1).value - m) / b0)) detail = "M relation fails at n = " + std::to_string(k);
    }
    record("beta_0 * Delta~_n = Delta_{n+1} + m_{n+1}; M~_n = (M_{n+1} - m_{n+1}) / beta_0", detail.empty(), detail);
  }
  {
    // Both inclusions on the first few hundred integers.
    const std::size_t count = std::min<std::size_t>(n, 200);
    const QuadNum& b0 = profile.base.beta(0);
    std::vector<QuadNum> tilde_values;
    for (const auto& e : enumerate(tilde, count)) tilde_values.push_back(e.value);
    std::vector<QuadNum> values;
    BIntegerGenerator gen(profile);
    const QuadNum bound = b0 * tilde_values.back();
    while (values.empty() || (values.back() <=> bound) < 0) values.push_back(gen.next().value);
    std::string detail;
    for (const auto& x : tilde_values) {
      if (!contains(values, b0 * x)) {
        detail = "beta_0 * " + x.to_string() + " is not a B-integer";
        break;
      }
    }
    const Integer digit_bound = ceil(b0);
    for (std::size_t k = 0; k < values.size() && detail.empty(); ++k) {
      bool found = false;
      for (Integer b = 0; b < digit_bound && !found; ++b) {
        const QuadNum rest = (values[k] - QuadNum(Rational(b))) / b0;
        if (sign(rest) >= 0 && (rest <=> tilde_values.back()) <= 0 && contains(tilde_values, rest)) found = true;
      }
      if (!found) detail = values[k].to_string() + " is not in beta_0 N_S(B) + {0..ceil(beta_0)-1}";
    }
    record("beta_0 N_S(B) in N_B in beta_0 N_S(B) + digits", detail.empty(), detail);
  }
  {
    const ParryAutomaton automaton = build_automaton(profile);
    record("automaton strongly connected", automaton.is_strongly_connected());
    std::string detail;
    for (std::size_t i = 0; i < profile.p && detail.empty(); ++i) {
      if (!(automaton.block(i).transpose() == incidence(phi(profile, static_cast<long>(i))))) {
        detail = "block " + std::to_string(i);
      }
    }
    record("automaton blocks M_i = incidence(phi_S^i(B))^T", detail.empty(), detail);
    const IntMatrix mp = automaton.adjacency().power(profile.p);
    bool diagonal = true;
    for (std::size_t r = 0; r < mp.rows(); ++r)
      for (std::size_t c = 0; c < mp.cols(); ++c)
        if (r / width != c / width && mp.at(r, c) != 0) diagonal = false;
    record("M^p block diagonal", diagonal);
  }
  {
    const auto exponent = primitivity_exponent(incidence(sigma));
    record("composed phi primitive", exponent.has_value(),
           exponent ? "" : "no positive power up to the Wielandt bound");
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Options {
  std::string base;
  long shift = 0;
  std::size_t count = 0;
  std::size_t prefix = 0;
  std::size_t budget = kDefaultStateBudget;
  std::string format;
  int decimals = 2;
  std::string value;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

AlternateBase load_base(const std::string& source, std::istream& in) {
  if (source.empty()) throw UsageError("--base is required");
  const auto first = source.find_first_not_of(" \t\n");
  if (first != std::string::npos && (source[first] == '[' || source[first] == '{')) return parse_base(std::string_view(source));
  if (source == "-") {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_base(std::string_view(text));
  }
  std::ifstream file(source);
  if (!file) throw UsageError("cannot read base file '" + source + "'");
  std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  return parse_base(std::string_view(text));
}

std::string format_or(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed) {
  const std::string f = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  throw UsageError("format '" + f + "' is not supported by this subcommand");
}

void cmd_expand(const Options& o, std::ostream& out, std::istream& in) {
  if (o.value.empty()) throw UsageError("expand needs --value");
  const AlternateBase base = load_base(o.base, in);
  const QuadNum x = parse_quad(o.value);
  const Expansion e = greedy_expand(base, o.shift, x, o.prefix ? o.prefix : kDefaultFracDigits);
  const std::string f = format_or(o, "text", {"text", "json"});
  if (f == "json") {
    out << nlohmann::json{{"value", to_json(x)}, {"expansion", to_json(e.word)}, {"exact", e.exact}}.dump(2) << "\n";
  } else {
    out << to_string(e.word) << (e.exact ? "" : "\t(truncated)") << "\n";
  }
}

void cmd_qg(const Options& o, const ParryProfile& profile, std::ostream& out) {
  const std::string f = format_or(o, "text", {"text", "json"});
  const long p = static_cast<long>(profile.p);
  const DigitWord& w = profile.qg[static_cast<std::size_t>(((o.shift % p) + p) % p)];
  if (f == "json") {
    out << to_json(w).dump(2) << "\n";
  } else {
    out << to_string(w.fractional()) << "\n";
  }
}

void cmd_parry(const Options& o, const ParryProfile& profile, std::ostream& out) {
  const std::string f = format_or(o, "text", {"text", "json"});
  if (f == "json") {
    nlohmann::json qg = nlohmann::json::array();
    for (const auto& w : profile.qg) qg.push_back(to_json(w));
    out << nlohmann::json{{"base", to_json(profile.base)},
                          {"p", profile.p},
                          {"ell", profile.ell},
                          {"m", profile.em},
                          {"alphabet_size", profile.alphabet_size()},
                          {"quasi_greedy", qg}}
               .dump(2)
        << "\n";
    return;
  }
  out << "p\t" << profile.p << "\nell\t" << profile.ell << "\nm\t" << profile.em << "\nalphabet\t"
      << profile.alphabet_size() << "\n";
  for (std::size_t i = 0; i < profile.p; ++i) {
    out << "qg[" << i << "]\t" << to_string(profile.qg[i].fractional()) << "\n";
  }
  for (std::size_t i = 0; i < profile.p; ++i) {
    out << "normalized[" << i << "]\t" << to_string(profile.normalized(static_cast<long>(i))) << "\n";
  }
  out << "product\t" << profile.base.product().to_string() << "\n";
}

void cmd_integers(const Options& o, const ParryProfile& profile, std::ostream& out) {
  const std::string f = format_or(o, "tsv", {"tsv", "json", "text"});
  const auto entries = enumerate(profile, o.count ? o.count : 36);
  if (f == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : entries) {
      rows.push_back({{"k", e.index},
                      {"value", to_json(e.value)},
                      {"decimal", e.value.to_decimal(o.decimals)},
                      {"expansion", to_json(e.expansion)},
                      {"w", e.gap_letter},
                      {"v", e.projected_letter}});
    }
    out << rows.dump(2) << "\n";
    return;
  }
  out << "k\tvalue\tdecimal\texpansion\tw\tv\n";
  for (const auto& e : entries) {
    out << e.index << "\t" << e.value.to_string() << "\t" << e.value.to_decimal(o.decimals) << "\t"
        << to_compact_string(e.expansion) << "\t" << e.gap_letter << "\t" << e.projected_letter << "\n";
  }
}

void cmd_gaps(const Options& o, const ParryProfile& profile, std::ostream& out) {
  const std::string f = format_or(o, "tsv", {"tsv", "json", "text"});
  const std::size_t count = o.count ? o.count : profile.alphabet_size();
  const auto classes = gap_classes(profile);
  nlohmann::json rows = nlohmann::json::array();
  if (f != "json") out << "n\tmax_expansion\tmax_value\tdelta\tdelta_decimal\tclass\n";
  for (std::size_t n = 0; n < count; ++n) {
    const MaxBelow m = max_below(profile, n);
    const QuadNum d = delta(profile, n);
    const std::size_t c = classes[project_letter(profile, n)];
    if (f == "json") {
      rows.push_back({{"n", n},
                      {"max_expansion", to_json(m.expansion)},
                      {"max_value", to_json(m.value)},
                      {"delta", to_json(d)},
                      {"class", c}});
    } else {
      out << n << "\t" << to_compact_string(m.expansion) << "\t" << m.value.to_string() << "\t" << d.to_string()
          << "\t" << d.to_decimal(o.decimals) << "\t" << c << "\n";
    }
  }
  if (f == "json") out << rows.dump(2) << "\n";
}

void cmd_subst(const Options& o, const ParryProfile& profile, std::ostream& out) {
  const std::string f = format_or(o, "text", {"text", "json"});
  const std::size_t count = o.count ? o.count : 8;
  const std::size_t prefix = o.prefix ? o.prefix : 64;
  nlohmann::json psi = nlohmann::json::object();
  std::vector<std::string> psi_lines;
  for (std::size_t n = 0; n < count; ++n) {
    const Word img = psi_image(profile, o.shift, n);
    psi[std::to_string(n)] = img;
    psi_lines.push_back(std::to_string(n) + "->" + to_string(img));
  }
  const Substitution sigma = composed_phi(profile);
  const Word v = fixed_point_prefix(sigma, 0, prefix);
  const Word w = sadic_prefix_of_length(profile, prefix);
  if (f == "json") {
    nlohmann::json phis = nlohmann::json::array();
    for (std::size_t i = 0; i < profile.p; ++i) phis.push_back(to_json(phi(profile, static_cast<long>(i))));
    out << nlohmann::json{{"psi", psi}, {"phi", phis}, {"composed", to_json(sigma)}, {"v_B", v}, {"w_B", w}}.dump(2)
        << "\n";
    return;
  }
  out << "psi[" << o.shift << "]\t";
  for (std::size_t k = 0; k < psi_lines.size(); ++k) out << (k ? ", " : "") << psi_lines[k];
  out << ", ...\n";
  for (std::size_t i = 0; i < profile.p; ++i) {
    out << "phi[" << i << "]\t" << to_string(phi(profile, static_cast<long>(i))) << "\n";
  }
  out << "composed\t" << to_string(sigma) << "\n";
  out << "w_B\t" << to_string(w) << "\n";
  out << "v_B\t" << to_string(v) << "\n";
}

void cmd_matrix(const Options& o, const ParryProfile& profile, std::ostream& out) {
  const std::string f = format_or(o, "tsv", {"tsv", "json", "text"});
  const ParryAutomaton automaton = build_automaton(profile);
  const IntMatrix d = incidence(composed_phi(profile)).transpose();
  const auto exponent = primitivity_exponent(d);
  const auto poly = characteristic_polynomial(d);
  if (f == "json") {
    nlohmann::json blocks = nlohmann::json::object();
    for (std::size_t i = 0; i < profile.p; ++i) blocks[std::to_string(i)] = to_json(automaton.block(i));
    nlohmann::json coefficients = nlohmann::json::array();
    for (const auto& c : poly) coefficients.push_back(c.get_str());
    out << nlohmann::json{{"adjacency", to_json(automaton.adjacency())},
                          {"blocks", blocks},
                          {"D", to_json(d)},
                          {"primitivity_exponent", exponent ? nlohmann::json(*exponent) : nlohmann::json(nullptr)},
                          {"characteristic_polynomial", coefficients},
                          {"characteristic_polynomial_text", polynomial_to_string(poly)}}
               .dump(2)
        << "\n";
    return;
  }
  out << "# adjacency\n" << to_tsv(automaton.adjacency());
  for (std::size_t i = profile.p; i-- > 0;) out << "# M_" << i << "\n" << to_tsv(automaton.block(i));
  out << "# D_" << profile.p - 1 << "\n" << to_tsv(d);
  out << "# primitivity exponent\n" << (exponent ? std::to_string(*exponent) : "none") << "\n";
  out << "# characteristic polynomial\n" << polynomial_to_string(poly) << "\n";
}

void cmd_automaton(const Options& o, const ParryProfile& profile, std::ostream& out) {
  const std::string f = format_or(o, "dot", {"dot", "json", "tsv"});
  const ParryAutomaton automaton = build_automaton(profile);
  if (f == "dot") {
    out << automaton.to_dot();
    return;
  }
  if (f == "json") {
    nlohmann::json vertices = nlohmann::json::array();
    for (std::size_t v = 0; v < automaton.vertex_count(); ++v) vertices.push_back(automaton.vertex_label(v));
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : automaton.edges()) {
      edges.push_back({{"from", automaton.vertex_label(e.from)}, {"to", automaton.vertex_label(e.to)}, {"label", e.label}});
    }
    out << nlohmann::json{{"vertices", vertices},
                          {"edges", edges},
                          {"strongly_connected", automaton.is_strongly_connected()}}
               .dump(2)
        << "\n";
    return;
  }
  out << "from\tto\tlabel\n";
  for (const auto& e : automaton.edges()) {
    out << automaton.vertex_label(e.from) << "\t" << automaton.vertex_label(e.to) << "\t" << e.label << "\n";
  }
}

void cmd_sturmian(const Options& o, const ParryProfile& profile, std::ostream& out) {
  const std::string f = format_or(o, "text", {"text", "json"});
  const SturmianVerdict v = classify(profile, o.prefix ? o.prefix : kDefaultPrefixLength);
  if (f == "json") {
    out << to_json(v).dump(2) << "\n";
  } else {
    out << to_text(v);
  }
}

void cmd_verify(const Options& o, const ParryProfile& profile, std::ostream& out) {
  const std::string f = format_or(o, "text", {"text", "json"});
  const std::size_t prefix = o.prefix ? o.prefix : 500;
  const auto checks = verify_profile(profile, prefix);
  const SturmianVerdict verdict = classify(profile, std::min<std::size_t>(prefix, kDefaultPrefixLength));
  if (f == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : checks) rows.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << nlohmann::json{{"prefix", prefix}, {"checks", rows}, {"sturmian", to_json(verdict)}}.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      out << (c.passed ? "PASS" : "FAIL") << "\t" << c.name;
      if (!c.detail.empty()) out << "\t" << c.detail;
      out << "\n";
    }
    std::istringstream lines(to_text(verdict));
    for (std::string line; std::getline(lines, line);) out << "sturmian\t" << line << "\n";
  }
  for (const auto& c : checks) {
    if (!c.passed) throw VerificationFailed(c.name + (c.detail.empty() ? "" : ": " + c.detail));
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact alternate-base numeration toolkit", "alternabase"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--base", o.base, "base: JSON file, '-' for stdin, or inline JSON");
    sub->add_option("--shift", o.shift, "work with S^i(B)");
    sub->add_option("--count", o.count, "number of rows")->check(CLI::PositiveNumber);
    sub->add_option("--prefix", o.prefix, "word prefix length / fractional digit bound")->check(CLI::PositiveNumber);
    sub->add_option("--budget", o.budget, "quasi-greedy state budget")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "tsv, json, dot or text")
        ->check(CLI::IsMember({"tsv", "json", "dot", "text"}));
    sub->add_option("--decimals", o.decimals, "decimal places of displayed values")->check(CLI::NonNegativeNumber);
  };

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"expand", "greedy expansion of --value"},
      {"qg", "quasi-greedy expansion of 1"},
      {"parry", "Parry profile"},
      {"integers", "B-integers with w_B and v_B"},
      {"gaps", "M_{B,n} and Delta_n"},
      {"subst", "psi, phi and their fixed points"},
      {"matrix", "automaton adjacency, blocks, D and its characteristic polynomial"},
      {"automaton", "automaton (DOT by default)"},
      {"sturmian", "sturmian classification of v_B"},
      {"verify", "cross-oracle consistency suite"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (name == "expand") sub->add_option("--value", o.value, "number to expand, e.g. (1+sqrt(13))/2");
    subs.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    for (CLI::App* sub : subs) {
      if (sub->parsed()) {
        err << e.what() << "\n" << sub->help();
        return kExitUsage;
      }
    }
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  std::string command;
  for (CLI::App* sub : subs) {
    if (sub->parsed()) command = sub->get_name();
  }

  try {
    if (command == "expand") {
      cmd_expand(o, out, in);
      return kExitOk;
    }
    const ParryProfile profile = parry_profile(load_base(o.base, in), o.budget);
    if (command == "qg") cmd_qg(o, profile, out);
    if (command == "parry") cmd_parry(o, profile, out);
    if (command == "integers") cmd_integers(o, profile, out);
    if (command == "gaps") cmd_gaps(o, profile, out);
    if (command == "subst") cmd_subst(o, profile, out);
    if (command == "matrix") cmd_matrix(o, profile, out);
    if (command == "automaton") cmd_automaton(o, profile, out);
    if (command == "sturmian") cmd_sturmian(o, profile, out);
    if (command == "verify") cmd_verify(o, profile, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const VerificationFailed& e) {
    err << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace alternabase
