#include "alternabase/substitution.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "alternabase/bintegers.hpp"
#include "alternabase/errors.hpp"

namespace alternabase {

std::string to_string(const Word& w) {
  const bool small = std::all_of(w.begin(), w.end(), [](Letter a) { return a < 10; });
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!small && k) out += ",";
    out += std::to_string(w[k]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  const bool separated = text.find(',') != std::string_view::npos;
  std::string item;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (separated) {
        item += c;
      } else {
        out.push_back(static_cast<Letter>(c - '0'));
      }
    } else if (c == ',' && separated) {
      if (item.empty()) throw MalformedInput("empty letter in '" + std::string(text) + "'");
      out.push_back(std::stoul(item));
      item.clear();
    } else {
      throw MalformedInput("unexpected '" + std::string(1, c) + "' in word '" + std::string(text) + "'");
    }
  }
  if (separated) {
    if (item.empty()) throw MalformedInput("empty letter in '" + std::string(text) + "'");
    out.push_back(std::stoul(item));
  }
  return out;
}

// ---------------------------------------------------------------------------

Substitution::Substitution(std::size_t alphabet_size, std::vector<Word> images) : images_(std::move(images)) {
  if (alphabet_size == 0 || images_.size() != alphabet_size) {
    throw MalformedInput("a substitution over " + std::to_string(alphabet_size) + " letters needs as many images");
  }
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (images_[a].empty()) throw MalformedInput("empty image of letter " + std::to_string(a));
    for (Letter b : images_[a]) {
      if (b >= alphabet_size) throw MalformedInput("letter " + std::to_string(b) + " outside the alphabet");
    }
  }
}

Substitution Substitution::identity(std::size_t alphabet_size) {
  std::vector<Word> images;
  for (Letter a = 0; a < alphabet_size; ++a) images.push_back({a});
  return Substitution(alphabet_size, std::move(images));
}

Word Substitution::apply(const Word& w) const {
  Word out;
  for (Letter a : w) {
    const Word& img = images_.at(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

bool Substitution::is_prolongable(Letter seed) const {
  if (seed >= images_.size()) return false;
  const Word& img = images_[seed];
  return img.size() >= 2 && img.front() == seed;
}

std::string to_string(const Substitution& s) {
  std::string out;
  for (Letter a = 0; a < s.alphabet_size(); ++a) {
    if (a) out += ", ";
    out += std::to_string(a) + "->" + to_string(s.image(a));
  }
  return out;
}

Substitution parse_substitution(std::string_view text) {
  std::vector<std::pair<Letter, Word>> rules;
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), ';', '|');
  // Rules are separated by '|' or by ", " patterns before a new "x->".
  std::vector<std::string> pieces;
  std::string current;
  for (std::size_t k = 0; k < normalized.size(); ++k) {
    char c = normalized[k];
    if (c == '|') {
      pieces.push_back(current);
      current.clear();
      continue;
    }
    if (c == ',') {
      // A comma ends a rule when the remainder starts with "<letter>->" or "<letter>:".
      std::size_t j = k + 1;
      while (j < normalized.size() && std::isspace(static_cast<unsigned char>(normalized[j]))) ++j;
      std::size_t m = j;
      while (m < normalized.size() && std::isdigit(static_cast<unsigned char>(normalized[m]))) ++m;
      while (m < normalized.size() && std::isspace(static_cast<unsigned char>(normalized[m]))) ++m;
      if (m > j && (normalized.compare(m, 2, "->") == 0 || (m < normalized.size() && normalized[m] == ':'))) {
        pieces.push_back(current);
        current.clear();
        continue;
      }
    }
    current += c;
  }
  pieces.push_back(current);
  for (const auto& piece : pieces) {
    std::size_t arrow = piece.find("->");
    std::size_t skip = 2;
    if (arrow == std::string::npos) {
      arrow = piece.find(':');
      skip = 1;
    }
    if (arrow == std::string::npos) throw MalformedInput("rule without '->': '" + piece + "'");
    Word lhs = parse_word(piece.substr(0, arrow));
    if (lhs.size() != 1) throw MalformedInput("rule must map one letter: '" + piece + "'");
    rules.emplace_back(lhs.front(), parse_word(piece.substr(arrow + skip)));
  }
  std::sort(rules.begin(), rules.end());
  std::vector<Word> images;
  for (std::size_t a = 0; a < rules.size(); ++a) {
    if (rules[a].first != a) throw MalformedInput("rules must cover letters 0..k-1 exactly once");
    images.push_back(rules[a].second);
  }
  const std::size_t k = images.size();
  return Substitution(k, std::move(images));
}

nlohmann::json to_json(const Substitution& s) {
  nlohmann::json images = nlohmann::json::array();
  for (const auto& img : s.images()) images.push_back(img);
  return {{"alphabet_size", s.alphabet_size()}, {"images", images}};
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  if (outer.alphabet_size() != inner.alphabet_size()) {
    throw AlphabetMismatch(std::to_string(outer.alphabet_size()) + " vs " + std::to_string(inner.alphabet_size()));
  }
  std::vector<Word> images;
  for (const auto& img : inner.images()) images.push_back(outer.apply(img));
  return Substitution(outer.alphabet_size(), std::move(images));
}

// ---------------------------------------------------------------------------
// Matrices

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  for (const auto& row : rows) {
    if (row.size() != cols_) throw MalformedInput("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols_ != y.rows_) throw MalformedInput("matrix shapes do not match");
  IntMatrix out(x.rows_, y.cols_);
  for (std::size_t r = 0; r < x.rows_; ++r)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      if (x.at(r, k) == 0) continue;
      for (std::size_t c = 0; c < y.cols_; ++c) out.at(r, c) += x.at(r, k) * y.at(k, c);
    }
  return out;
}

IntMatrix IntMatrix::power(std::size_t exponent) const {
  IntMatrix result = identity(rows_);
  for (std::size_t k = 0; k < exponent; ++k) result = result * *this;
  return result;
}

IntMatrix IntMatrix::block(std::size_t row, std::size_t col, std::size_t height, std::size_t width) const {
  IntMatrix out(height, width);
  for (std::size_t r = 0; r < height; ++r)
    for (std::size_t c = 0; c < width; ++c) out.at(r, c) = at(row + r, col + c);
  return out;
}

bool IntMatrix::is_positive() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v > 0; });
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

std::string to_tsv(const IntMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += "\t";
      out += m.at(r, c).get_str();
    }
    out += "\n";
  }
  return out;
}

nlohmann::json to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer& v = m.at(r, c);
      if (v.fits_slong_p()) {
        row.push_back(v.get_si());
      } else {
        row.push_back(v.get_str());
      }
    }
    rows.push_back(row);
  }
  return rows;
}

IntMatrix incidence(const Substitution& s) {
  const std::size_t k = s.alphabet_size();
  IntMatrix m(k, k);
  for (Letter j = 0; j < k; ++j)
    for (Letter i : s.image(j)) m.at(i, j) += 1;
  return m;
}

std::optional<std::size_t> primitivity_exponent(const IntMatrix& m) {
  const std::size_t k = m.rows();
  if (k == 0 || m.cols() != k) return std::nullopt;
  // Boolean semiring keeps entries at 0/1.
  std::vector<char> base(k * k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) base[r * k + c] = m.at(r, c) > 0;
  std::vector<char> current = base;
  const std::size_t wielandt = (k - 1) * (k - 1) + 1;
  for (std::size_t n = 1; n <= wielandt; ++n) {
    if (std::all_of(current.begin(), current.end(), [](char v) { return v != 0; })) return n;
    std::vector<char> next(k * k, 0);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t j = 0; j < k; ++j) {
        if (!current[r * k + j]) continue;
        for (std::size_t c = 0; c < k; ++c) next[r * k + c] |= base[j * k + c];
      }
    current = std::move(next);
  }
  return std::nullopt;
}

bool is_primitive(const IntMatrix& m) { return primitivity_exponent(m).has_value(); }

std::vector<Integer> characteristic_polynomial(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw MalformedInput("characteristic polynomial needs a square matrix");
  // c[k] is the coefficient of X^k.
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = a * m;
    for (std::size_t d = 0; d < n; ++d) next.at(d, d) += c[n - k + 1];
    m = std::move(next);
    IntMatrix am = a * m;
    Integer trace = 0;
    for (std::size_t d = 0; d < n; ++d) trace += am.at(d, d);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return {c.rbegin(), c.rend()};
}

std::string polynomial_to_string(const std::vector<Integer>& coefficients) {
  std::string out;
  const std::size_t degree = coefficients.empty() ? 0 : coefficients.size() - 1;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const Integer& c = coefficients[k];
    if (c == 0) continue;
    const std::size_t power = degree - k;
    Integer magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (magnitude != 1 || power == 0) out += magnitude.get_str();
    if (power >= 1) out += "X";
    if (power >= 2) out += "^" + std::to_string(power);
  }
  return out.empty() ? "0" : out;
}

QuadNum evaluate_polynomial(const std::vector<Integer>& coefficients, const QuadNum& x) {
  QuadNum acc;
  for (const auto& c : coefficients) acc = acc * x + QuadNum(Rational(c));
  return acc;
}

Word fixed_point_prefix(const Substitution& s, Letter seed, std::size_t length) {
  if (!s.is_prolongable(seed)) throw NotProlongable("letter " + std::to_string(seed) + " in " + to_string(s));
  // u = s(u) = s(u_0) s(u_1) ...: expand u in place, reading it as it grows.
  Word u = s.image(seed);
  for (std::size_t k = 1; u.size() < length; ++k) {
    const Word& img = s.image(u[k]);
    u.insert(u.end(), img.begin(), img.end());
  }
  u.resize(length);
  return u;
}

// ---------------------------------------------------------------------------
// Substitutions of a Parry base

Word psi_image(const QuasiGreedyTable& table, long shift, std::size_t n) {
  const Digit zeros = table.digit(shift + static_cast<long>(n) + 1, n + 1);
  Word out(static_cast<std::size_t>(zeros), 0);
  out.push_back(n + 1);
  return out;
}

Word psi_apply(const QuasiGreedyTable& table, long shift, const Word& w) {
  Word out;
  for (Letter a : w) {
    const Word img = psi_image(table, shift, a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Word sadic_prefix(const QuasiGreedyTable& table, std::size_t depth) {
  Word w{0};
  for (std::size_t s = depth; s-- > 0;) w = psi_apply(table, static_cast<long>(s), w);
  return w;
}

Word sadic_prefix_of_length(const QuasiGreedyTable& table, std::size_t length) {
  for (std::size_t depth = 1;; ++depth) {
    Word w = sadic_prefix(table, depth);
    if (w.size() >= length) {
      w.resize(length);
      return w;
    }
  }
}

Substitution phi(const QuasiGreedyTable& table, long shift) {
  const std::size_t width = table.alphabet_size();
  std::vector<Word> images;
  for (std::size_t r = 0; r < width; ++r) {
    const Digit zeros = table.digit(shift + static_cast<long>(r) + 1, r + 1);
    Word img(static_cast<std::size_t>(zeros), 0);
    img.push_back(r + 1 < width ? r + 1 : table.preperiod_length());
    images.push_back(std::move(img));
  }
  return Substitution(width, std::move(images));
}

Substitution composed_phi(const QuasiGreedyTable& table) {
  Substitution result = phi(table, static_cast<long>(table.p) - 1);
  for (long i = static_cast<long>(table.p) - 2; i >= 0; --i) result = compose(phi(table, i), result);
  return result;
}

PerronCheck perron_check(const ParryProfile& profile) {
  PerronCheck out;
  for (std::size_t n = 0; n < profile.alphabet_size(); ++n) out.deltas.push_back(delta(profile, n));
  out.eigenvalue = profile.base.product();
  const IntMatrix m = incidence(composed_phi(profile));
  for (std::size_t a = 0; a < profile.alphabet_size(); ++a) {
    QuadNum lhs;
    for (std::size_t b = 0; b < profile.alphabet_size(); ++b) lhs += QuadNum(Rational(m.at(b, a))) * out.deltas[b];
    if (!(lhs == out.eigenvalue * out.deltas[a])) {
      throw EigenIdentityViolated("letter " + std::to_string(a) + ": " + lhs.to_string() +
                                  " != " + (out.eigenvalue * out.deltas[a]).to_string());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Automaton

ParryAutomaton::ParryAutomaton(std::size_t p, std::size_t width, std::vector<AutomatonEdge> edges)
    : p_(p), width_(width), edges_(std::move(edges)) {}

std::string ParryAutomaton::vertex_label(std::size_t index) const {
  const std::size_t shift = p_ - 1 - index / width_;
  return std::to_string(shift) + "," + std::to_string(index % width_);
}

IntMatrix ParryAutomaton::adjacency() const {
  IntMatrix m(vertex_count(), vertex_count());
  for (const auto& e : edges_) m.at(e.from, e.to) += 1;
  return m;
}

IntMatrix ParryAutomaton::block(std::size_t shift) const {
  const std::size_t target = (shift + p_ - 1) % p_;
  return adjacency().block(index(shift, 0), index(target, 0), width_, width_);
}

bool ParryAutomaton::is_strongly_connected() const {
  const std::size_t n = vertex_count();
  auto reaches_all = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::deque<std::size_t> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (const auto& e : edges_) {
        const std::size_t src = forward ? e.from : e.to;
        const std::size_t dst = forward ? e.to : e.from;
        if (src == v && !seen[dst]) {
          seen[dst] = 1;
          queue.push_back(dst);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
  };
  return n > 0 && reaches_all(true) && reaches_all(false);
}

std::string ParryAutomaton::to_dot() const {
  std::ostringstream out;
  out << "digraph ParryAutomaton {\n";
  for (std::size_t v = 0; v < vertex_count(); ++v) out << "  \"" << vertex_label(v) << "\";\n";
  for (const auto& e : edges_) {
    out << "  \"" << vertex_label(e.from) << "\" -> \"" << vertex_label(e.to) << "\" [label=\"" << e.label
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

ParryAutomaton build_automaton(const QuasiGreedyTable& table) {
  const std::size_t p = table.p;
  const std::size_t width = table.alphabet_size();
  ParryAutomaton shape(p, width, {});
  std::vector<AutomatonEdge> edges;
  for (std::size_t v = 0; v < p * width; ++v) {
    const std::size_t i = p - 1 - v / width;
    const std::size_t n = v % width;
    const std::size_t prev = (i + p - 1) % p;
    // d_{i+n+1,n+1}; for n = L-1 this is d_{i,L} since L is a multiple of p.
    const Digit label = table.digit(static_cast<long>(i + n + 1), n + 1);
    const std::size_t next_level = n + 1 < width ? n + 1 : table.preperiod_length();
    edges.push_back({v, shape.index(prev, next_level), label});
    for (Digit s = 0; s < label; ++s) edges.push_back({v, shape.index(prev, 0), s});
  }
  return ParryAutomaton(p, width, std::move(edges));
}

}  // namespace alternabase
