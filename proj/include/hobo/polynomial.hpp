/// @file polynomial.hpp
/// @brief Canonical pseudo-Boolean polynomials over binary variables.
///
/// A polynomial is a set of monomials with real coefficients plus a scalar
/// offset.  Monomials are kept canonical: variable indices sorted and
/// duplicate-free (x*x = x for binary x), duplicate monomials merged, zero
/// coefficients dropped.  Everything downstream (tensors, annealing,
/// compression) is built from this representation.

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hobo/random.hpp"

namespace hobo {

/// Binary assignment x in {0,1}^n.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t n, std::uint8_t fill = 0)
      : bits_(n, fill) {
    if (fill > 1) throw std::invalid_argument("assignment bits must be 0 or 1");
  }
  explicit Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
      if (b > 1) throw std::invalid_argument("assignment bits must be 0 or 1");
    }
  }

  /// Parses "101" with character i giving the value of variable i.
  static Assignment from_string(std::string_view s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument("assignment string must contain only 0/1");
      }
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Assignment(std::move(bits));
  }

  std::size_t size() const { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  std::string to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
  }

  bool operator==(const Assignment&) const = default;
  /// Lexicographic order with variable 0 in the most significant position.
  bool operator<(const Assignment& rhs) const { return bits_ < rhs.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
};

/// One monomial: sorted strictly-increasing variable indices and a nonzero
/// coefficient.
struct Term {
  std::vector<int> vars;
  double coef = 0.0;

  bool operator==(const Term&) const = default;
};

namespace detail {

/// Graded lexicographic order used for the canonical term sequence.
inline bool term_vars_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// Shortest decimal form that round-trips through parsing.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace detail

/// Canonical pseudo-Boolean polynomial.  Immutable once constructed; safe to
/// share across threads.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int num_vars, double offset = 0.0)
      : num_vars_(num_vars), offset_(offset) {
    if (num_vars < 0) throw std::invalid_argument("num_vars must be >= 0");
    if (!std::isfinite(offset)) {
      throw std::invalid_argument("offset must be finite");
    }
  }

  /// Builds the canonical form from raw terms: repeated indices within a
  /// term collapse (idempotence), terms with equal support merge, zero
  /// coefficients are dropped and constant terms fold into the offset.
  static Polynomial from_terms(int num_vars, std::span<const Term> raw_terms,
                               double offset = 0.0) {
    if (num_vars < 0) throw std::invalid_argument("num_vars must be >= 0");
    std::map<std::vector<int>, double> acc;
    for (const Term& t : raw_terms) {
      if (!std::isfinite(t.coef)) {
        throw std::invalid_argument("coefficient must be finite");
      }
      std::vector<int> vars = t.vars;
      std::sort(vars.begin(), vars.end());
      vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
      for (int v : vars) {
        if (v < 0) throw std::invalid_argument("negative variable index");
        if (v >= num_vars) {
          throw std::out_of_range("variable index " + std::to_string(v) +
                                  " out of range for " +
                                  std::to_string(num_vars) + " variables");
        }
      }
      if (vars.empty()) {
        offset += t.coef;
      } else {
        acc[std::move(vars)] += t.coef;
      }
    }
    Polynomial p(num_vars, offset);
    p.terms_.reserve(acc.size());
    for (auto& [vars, coef] : acc) {
      if (coef != 0.0) p.terms_.push_back(Term{vars, coef});
    }
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) {
                return detail::term_vars_less(a.vars, b.vars);
              });
    return p;
  }

  static Polynomial from_terms(int num_vars,
                               std::initializer_list<Term> raw_terms,
                               double offset = 0.0) {
    return from_terms(
        num_vars, std::span<const Term>(raw_terms.begin(), raw_terms.size()),
        offset);
  }

  int num_vars() const { return num_vars_; }
  double offset() const { return offset_; }
  const std::vector<Term>& terms() const { return terms_; }

  /// Longest monomial length; 0 for a constant polynomial.
  int degree() const {
    std::size_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.vars.size());
    return static_cast<int>(d);
  }

  bool operator==(const Polynomial&) const = default;

 private:
  int num_vars_ = 0;
  std::vector<Term> terms_;
  double offset_ = 0.0;
};

/// offset + sum over terms of coef * prod of the term's variables.
inline double evaluate(const Polynomial& p, const Assignment& x) {
  if (static_cast<int>(x.size()) != p.num_vars()) {
    throw std::invalid_argument("assignment length does not match num_vars");
  }
  double total = p.offset();
  for (const Term& t : p.terms()) {
    double prod = t.coef;
    for (int v : t.vars) {
      if (!x[static_cast<std::size_t>(v)]) {
        prod = 0.0;
        break;
      }
    }
    total += prod;
  }
  return total;
}

/// Sum of two polynomials over max(n_a, n_b) variables.
inline Polynomial add(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> all(a.terms().begin(), a.terms().end());
  all.insert(all.end(), b.terms().begin(), b.terms().end());
  return Polynomial::from_terms(std::max(a.num_vars(), b.num_vars()), all,
                                a.offset() + b.offset());
}

inline Polynomial scale(const Polynomial& p, double factor) {
  std::vector<Term> terms = p.terms();
  for (Term& t : terms) t.coef *= factor;
  return Polynomial::from_terms(p.num_vars(), terms, p.offset() * factor);
}

/// Error raised by the text parser, carrying a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

namespace detail {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

inline std::vector<Token> split_line(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    tokens.push_back(Token{line.substr(start, i - start),
                           static_cast<int>(start) + 1});
  }
  return tokens;
}

inline bool parse_full_double(std::string_view s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;  // from_chars rejects '+'
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last && std::isfinite(out);
}

// "x<idx>" with a plain non-negative integer index.
inline int parse_var_token(const Token& tok, int line_no) {
  std::string_view s = tok.text;
  if (s.empty() || s.front() != 'x') {
    throw ParseError(line_no, tok.column,
                     "expected variable token 'x<index>', got '" +
                         std::string(s) + "'");
  }
  std::string_view idx = s.substr(1);
  if (!idx.empty() && (idx.front() == '-' || idx.front() == '+')) {
    throw ParseError(line_no, tok.column,
                     "negative variable index in '" + std::string(s) + "'");
  }
  int value = 0;
  auto res = std::from_chars(idx.data(), idx.data() + idx.size(), value);
  if (res.ec != std::errc() || res.ptr != idx.data() + idx.size() ||
      idx.empty()) {
    throw ParseError(line_no, tok.column,
                     "non-integer variable index in '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace detail

/// Parses the plain-text polynomial format:
///
///     # comment
///     vars 3          (optional header; otherwise n = 1 + max index)
///     -10 x0
///     +1 x0 x1
///     2.5             (bare constants accumulate into the offset)
///
/// Returns the canonical polynomial.  Reports syntax problems with the
/// 1-based line and column.
inline Polynomial parse_text(std::string_view source) {
  std::vector<Term> raw;
  double offset = 0.0;
  int declared_vars = -1;
  int max_index = -1;
  bool seen_content = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    std::size_t eol = source.find('\n', pos);
    std::string_view line = source.substr(
        pos, eol == std::string_view::npos ? source.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? source.size() + 1 : eol + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = detail::split_line(line);
    if (tokens.empty()) continue;

    if (tokens[0].text == "vars") {
      if (seen_content) {
        throw ParseError(line_no, tokens[0].column,
                         "'vars' header must precede all terms");
      }
      if (tokens.size() != 2) {
        throw ParseError(line_no, tokens[0].column,
                         "expected 'vars <count>'");
      }
      int n = 0;
      auto res = std::from_chars(tokens[1].text.data(),
                                 tokens[1].text.data() + tokens[1].text.size(),
                                 n);
      if (res.ec != std::errc() ||
          res.ptr != tokens[1].text.data() + tokens[1].text.size() || n < 0) {
        throw ParseError(line_no, tokens[1].column,
                         "variable count must be a non-negative integer");
      }
      declared_vars = n;
      seen_content = true;
      continue;
    }

    seen_content = true;
    double coef = 0.0;
    if (!detail::parse_full_double(tokens[0].text, coef)) {
      throw ParseError(line_no, tokens[0].column,
                       "expected a coefficient, got '" +
                           std::string(tokens[0].text) + "'");
    }
    if (tokens.size() == 1) {
      offset += coef;
      continue;
    }
    Term term;
    term.coef = coef;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      int idx = detail::parse_var_token(tokens[i], line_no);
      if (declared_vars >= 0 && idx >= declared_vars) {
        throw ParseError(line_no, tokens[i].column,
                         "variable index " + std::to_string(idx) +
                             " exceeds declared count " +
                             std::to_string(declared_vars));
      }
      max_index = std::max(max_index, idx);
      term.vars.push_back(idx);
    }
    raw.push_back(std::move(term));
  }

  int num_vars = declared_vars >= 0 ? declared_vars : max_index + 1;
  return Polynomial::from_terms(num_vars, raw, offset);
}

/// Canonical text form; parse_text(to_text(p)) == p.
inline std::string to_text(const Polynomial& p) {
  std::string out = "vars " + std::to_string(p.num_vars()) + "\n";
  if (p.offset() != 0.0) {
    out += detail::format_double(p.offset());
    out += "\n";
  }
  for (const Term& t : p.terms()) {
    out += detail::format_double(t.coef);
    for (int v : t.vars) {
      out += " x";
      out += std::to_string(v);
    }
    out += "\n";
  }
  return out;
}

namespace detail {

/// Number of distinct monomials of degree 1..max_degree over n variables,
/// saturating at `cap`.
inline std::uint64_t count_monomials(int n, int max_degree, std::uint64_t cap) {
  std::uint64_t total = 0;
  std::uint64_t choose = 1;  // C(n, d) built incrementally
  for (int d = 1; d <= max_degree; ++d) {
    choose = choose * static_cast<std::uint64_t>(n - d + 1) /
             static_cast<std::uint64_t>(d);
    total += choose;
    if (total >= cap || choose >= cap) return cap;
  }
  return total;
}

}  // namespace detail

/// Deterministic random instance: `num_terms` distinct monomials of degree
/// <= max_degree with nonzero coefficients drawn uniformly from
/// [coef_min, coef_max] (integers only when integer_coefs is set).
inline Polynomial random_instance(int n, int max_degree, int num_terms,
                                  double coef_min, double coef_max,
                                  std::uint64_t seed,
                                  bool integer_coefs = false) {
  if (n < 1) throw std::invalid_argument("need at least one variable");
  if (max_degree < 1 || max_degree > n) {
    throw std::invalid_argument("max_degree must be in [1, n]");
  }
  if (num_terms < 1) throw std::invalid_argument("need at least one term");
  if (!(coef_min <= coef_max)) {
    throw std::invalid_argument("empty coefficient range");
  }
  std::int64_t int_lo = static_cast<std::int64_t>(std::ceil(coef_min));
  std::int64_t int_hi = static_cast<std::int64_t>(std::floor(coef_max));
  if (integer_coefs && (int_hi < int_lo || (int_lo == 0 && int_hi == 0))) {
    throw std::invalid_argument("no usable integer coefficient in range");
  }
  if (!integer_coefs && coef_min == 0.0 && coef_max == 0.0) {
    throw std::invalid_argument("coefficient range contains only zero");
  }
  const std::uint64_t cap = static_cast<std::uint64_t>(num_terms);
  if (detail::count_monomials(n, max_degree, cap + 1) < cap) {
    throw std::invalid_argument("more terms requested than distinct monomials");
  }

  auto eng = detail::make_engine(seed);
  std::set<std::vector<int>> used;
  std::vector<Term> terms;
  terms.reserve(static_cast<std::size_t>(num_terms));
  std::uint64_t attempts = 0;
  const std::uint64_t max_attempts =
      100000 + 1000 * static_cast<std::uint64_t>(num_terms);
  while (terms.size() < static_cast<std::size_t>(num_terms)) {
    if (++attempts > max_attempts) {
      throw std::runtime_error("instance sampling failed to fill term budget");
    }
    int d = 1 + static_cast<int>(detail::next_index(
                    eng, static_cast<std::uint64_t>(max_degree)));
    std::set<int> picked;
    while (static_cast<int>(picked.size()) < d) {
      picked.insert(static_cast<int>(
          detail::next_index(eng, static_cast<std::uint64_t>(n))));
    }
    std::vector<int> vars(picked.begin(), picked.end());
    if (!used.insert(vars).second) continue;

    double coef = 0.0;
    do {
      if (integer_coefs) {
        std::uint64_t span = static_cast<std::uint64_t>(int_hi - int_lo) + 1;
        coef = static_cast<double>(
            int_lo + static_cast<std::int64_t>(detail::next_index(eng, span)));
      } else {
        coef = coef_min + detail::next_unit(eng) * (coef_max - coef_min);
      }
    } while (coef == 0.0);
    terms.push_back(Term{std::move(vars), coef});
  }
  return Polynomial::from_terms(n, terms);
}

}  // namespace hobo
