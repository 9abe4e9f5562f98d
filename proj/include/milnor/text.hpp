// Line-oriented text formats.
//
//   word        `x1 x2^-1 x1`, the empty word is `e`. On input `x<k>^<m>`
//               with any integer m is accepted.
//   polynomial  `1 + X1X2 - X2X1`, terms in graded-lex order, coefficients
//               other than +-1 written as `3*X1X2`; zero is `0`.
//   .gd         `gauss v1` / `strands <n>` / `arrow t=<s>.<p> h=<s>.<p> s=<+|->`
//   .targets    `strands <n>` / `lambda <i>: <word>` (missing lines mean e)
//   .sd         `spun v1` / `component <id> rank <d>` /
//               `circle over=<i> under=<j> class=<bits>`
//   mu table    `mu <i1i2...ik> = <value>`, by length then lexicographic
//
// In all input files `#` starts a comment and blank lines are ignored.

#ifndef MILNOR_TEXT_HPP_
#define MILNOR_TEXT_HPP_

#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "conj_aut.hpp"
#include "engine.hpp"
#include "error.hpp"
#include "gauss_diagram.hpp"
#include "magnus.hpp"
#include "spun.hpp"
#include "word.hpp"

namespace milnor {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> r;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && (s[k] == ' ' || s[k] == '\t'))
      ++k;
    std::size_t start = k;
    while (k < s.size() && s[k] != ' ' && s[k] != '\t')
      ++k;
    if (k > start)
      r.push_back(s.substr(start, k - start));
  }
  return r;
}

struct Line {
  int number;
  std::string_view text;
};

// Non-blank lines with comments removed.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> r;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty())
      r.push_back({number, line});
    start = end + 1;
  }
  return r;
}

[[noreturn]] inline void parse_error(int line, const std::string& msg) {
  fail(ErrorCode::Parse, "line " + std::to_string(line) + ": " + msg);
}

inline long long parse_int(std::string_view s, int line, std::string_view what) {
  std::size_t k = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+'))
    k = 1;
  if (k == s.size() || s.size() - k > 9 ||
      s.substr(k).find_first_not_of("0123456789") != std::string_view::npos)
    parse_error(line, "bad " + std::string(what) + " '" + std::string(s) + "'");
  return std::stoll(std::string(s));
}

// `key=value`
inline std::string_view keyed(std::string_view tok, std::string_view key, int line) {
  if (tok.size() < key.size() + 1 || tok.substr(0, key.size()) != key || tok[key.size()] != '=')
    parse_error(line, "expected '" + std::string(key) + "=...', got '" + std::string(tok) + "'");
  return tok.substr(key.size() + 1);
}

inline Endpoint parse_endpoint(std::string_view s, int line) {
  const auto dot = s.find('.');
  if (dot == std::string_view::npos)
    parse_error(line, "endpoint '" + std::string(s) + "' must be <strand>.<pos>");
  const long long strand = parse_int(s.substr(0, dot), line, "strand");
  const long long pos = parse_int(s.substr(dot + 1), line, "position");
  if (pos < 1)
    parse_error(line, "positions must be positive");
  return {static_cast<int>(strand), static_cast<int>(pos)};
}

inline int parse_strand_count(const Line& l) {
  const auto t = tokens(l.text);
  if (t.size() != 2 || t[0] != "strands")
    parse_error(l.number, "expected 'strands <n>'");
  const long long n = parse_int(t[1], l.number, "strand count");
  if (n < 0 || n > kMaxVariables)
    parse_error(l.number, "strand count must be 0.." + std::to_string(kMaxVariables));
  return static_cast<int>(n);
}

} // namespace detail

// ---- words ----

inline Word parse_word(std::string_view text, int n) {
  const auto toks = detail::tokens(text);
  if (toks.size() == 1 && toks[0] == "e")
    return Word(n);
  if (toks.empty())
    fail(ErrorCode::Parse, "empty word text (write 'e' for the identity)");
  Word w(n);
  for (std::string_view tok : toks) {
    if (tok.size() < 2 || tok[0] != 'x')
      fail(ErrorCode::Parse, "bad word token '" + std::string(tok) + "'");
    const auto caret = tok.find('^');
    const std::string_view gen = tok.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1);
    if (gen.empty() || gen.find_first_not_of("0123456789") != std::string_view::npos || gen.size() > 4)
      fail(ErrorCode::Parse, "bad generator in '" + std::string(tok) + "'");
    long long exp = 1;
    if (caret != std::string_view::npos)
      exp = detail::parse_int(tok.substr(caret + 1), 0, "exponent");
    const int g = std::stoi(std::string(gen));
    for (long long k = 0; k < (exp < 0 ? -exp : exp); ++k)
      w.push({g, exp < 0 ? -1 : 1});
  }
  return w;
}

inline std::string format_word(const Word& w) {
  if (w.empty())
    return "e";
  std::string s;
  for (const Letter& l : w.letters()) {
    if (!s.empty())
      s += ' ';
    s += 'x' + std::to_string(l.gen);
    if (l.exp < 0)
      s += "^-1";
  }
  return s;
}

// ---- polynomials ----

inline std::string format_monomial(const Monomial& m) {
  std::string s;
  for (int i : m.indices())
    s += 'X' + std::to_string(i);
  return s;
}

inline std::string format_poly(const ReducedPoly& p) {
  if (p.is_zero())
    return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    if (m.degree() == 0)
      s += mag.str();
    else if (mag == 1)
      s += format_monomial(m);
    else
      s += mag.str() + "*" + format_monomial(m);
    first = false;
  }
  return s;
}

// ---- automorphisms ----

inline std::string format_conj_aut(const ConjAut& a) {
  std::string s;
  for (int i = 1; i <= a.n(); ++i)
    s += "lambda " + std::to_string(i) + ": " + format_word(a.conjugator(i)) + "\n";
  return s;
}

// Conjugators followed by the reduced conjugators and their expansions.
inline std::string format_conj_aut_normalized(const ConjAut& a) {
  std::string s = format_conj_aut(a);
  for (int i = 1; i <= a.n(); ++i)
    s += "reduced " + std::to_string(i) + ": " + format_word(a.normal_conjugator(i)) + "\n";
  for (int i = 1; i <= a.n(); ++i)
    s += "expansion " + std::to_string(i) + ": " + format_poly(expand(a.normal_conjugator(i))) + "\n";
  return s;
}

// ---- lambda lines, shared by .targets and automorphism text ----

namespace detail {

inline std::vector<Word> parse_lambda_lines(std::span<const Line> lines, int n) {
  std::vector<Word> r(static_cast<std::size_t>(n), Word(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const Line& l : lines) {
    const auto colon = l.text.find(':');
    if (colon == std::string_view::npos)
      parse_error(l.number, "expected 'lambda <i>: <word>'");
    const auto head = tokens(l.text.substr(0, colon));
    if (head.size() != 2 || head[0] != "lambda")
      parse_error(l.number, "expected 'lambda <i>: <word>'");
    const long long i = parse_int(head[1], l.number, "component");
    if (i < 1 || i > n)
      parse_error(l.number, "component " + std::to_string(i) + " out of range 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(i - 1)])
      parse_error(l.number, "duplicate lambda for component " + std::to_string(i));
    seen[static_cast<std::size_t>(i - 1)] = true;
    try {
      r[static_cast<std::size_t>(i - 1)] = parse_word(l.text.substr(colon + 1), n);
    } catch (const Error& e) {
      // Keep the code: a bad token is a parse error, x_k out of range a word error.
      fail(e.code(), "line " + std::to_string(l.number) + ": " + e.what());
    }
  }
  return r;
}

} // namespace detail

inline ConjAut parse_conj_aut(std::string_view text) {
  const auto lines = detail::content_lines(text);
  return ConjAut(detail::parse_lambda_lines(lines, static_cast<int>(lines.size())));
}

// ---- .targets ----

inline std::vector<Word> parse_targets(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty())
    fail(ErrorCode::Parse, "empty targets file");
  const int n = detail::parse_strand_count(lines[0]);
  return detail::parse_lambda_lines(std::span<const detail::Line>(lines).subspan(1), n);
}

inline std::string format_targets(std::span<const Word> targets) {
  std::string s = "strands " + std::to_string(targets.size()) + "\n";
  for (std::size_t i = 0; i < targets.size(); ++i)
    s += "lambda " + std::to_string(i + 1) + ": " + format_word(targets[i]) + "\n";
  return s;
}

// ---- .gd ----

inline GaussDiagram parse_gauss(std::string_view text) {
  using namespace detail;
  const auto lines = content_lines(text);
  if (lines.empty() || lines[0].text != "gauss v1")
    parse_error(lines.empty() ? 1 : lines[0].number, "expected header 'gauss v1'");
  if (lines.size() < 2)
    parse_error(lines[0].number, "missing 'strands <n>' line");
  const int n = parse_strand_count(lines[1]);
  std::vector<Arrow> arrows;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const auto t = tokens(l.text);
    if (t.size() != 4 || t[0] != "arrow")
      parse_error(l.number, "expected 'arrow t=<s>.<p> h=<s>.<p> s=<+|->'");
    Arrow a{parse_endpoint(keyed(t[1], "t", l.number), l.number),
            parse_endpoint(keyed(t[2], "h", l.number), l.number), 0};
    const auto sign = keyed(t[3], "s", l.number);
    if (sign == "+")
      a.sign = 1;
    else if (sign == "-")
      a.sign = -1;
    else
      parse_error(l.number, "sign must be + or -");
    arrows.push_back(a);
  }
  return GaussDiagram(n, std::move(arrows));
}

inline std::string format_gauss(const GaussDiagram& d) {
  std::string s = "gauss v1\nstrands " + std::to_string(d.n()) + "\n";
  for (const Arrow& a : d.arrows())
    s += "arrow t=" + std::to_string(a.tail.strand) + "." + std::to_string(a.tail.pos) +
         " h=" + std::to_string(a.head.strand) + "." + std::to_string(a.head.pos) +
         " s=" + (a.sign > 0 ? "+" : "-") + "\n";
  return s;
}

// ---- .sd ----

inline SpunSurfaceData parse_spun(std::string_view text) {
  using namespace detail;
  const auto lines = content_lines(text);
  if (lines.empty() || lines[0].text != "spun v1")
    parse_error(lines.empty() ? 1 : lines[0].number, "expected header 'spun v1'");
  std::vector<ComponentSurface> comps;
  std::vector<DoubleCircle> circles;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const auto t = tokens(l.text);
    if (t.size() == 4 && t[0] == "component" && t[2] == "rank") {
      comps.push_back({static_cast<int>(parse_int(t[1], l.number, "component id")),
                       static_cast<int>(parse_int(t[3], l.number, "rank"))});
    } else if ((t.size() == 4 || t.size() == 3) && t[0] == "circle") {
      DoubleCircle c{static_cast<int>(parse_int(keyed(t[1], "over", l.number), l.number, "component id")),
                     static_cast<int>(parse_int(keyed(t[2], "under", l.number), l.number, "component id")),
                     {}};
      // A rank-0 class may be written `class=` or omitted.
      if (t.size() == 4) {
        for (char ch : keyed(t[3], "class", l.number)) {
          if (ch != '0' && ch != '1')
            parse_error(l.number, "class bits must be 0 or 1");
          c.cls.push_back(ch == '1');
        }
      }
      circles.push_back(std::move(c));
    } else {
      parse_error(l.number, "expected 'component <id> rank <d>' or "
                            "'circle over=<i> under=<j> class=<bits>'");
    }
  }
  return SpunSurfaceData(std::move(comps), std::move(circles));
}

inline std::string format_z2(const Z2Class& c) {
  std::string s;
  for (bool b : c)
    s += b ? '1' : '0';
  return s;
}

// ---- mu table ----

inline std::string format_mu_table(const MuTable& t) {
  std::string s;
  for (const auto& [idx, v] : t)
    s += "mu " + idx.to_string() + " = " + v.str() + "\n";
  return s;
}

// Digits, one per index entry (strands 1..9).
inline MilnorIndex parse_milnor_index(std::string_view s) {
  if (s.empty() || s.find_first_not_of("123456789") != std::string_view::npos)
    fail(ErrorCode::Usage, "index '" + std::string(s) + "' must be digits 1-9");
  std::vector<int> seq;
  for (char ch : s)
    seq.push_back(ch - '0');
  try {
    return MilnorIndex(std::move(seq));
  } catch (const Error& e) {
    fail(ErrorCode::Usage, e.what());
  }
}

// ---- files ----

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorCode::Io, "cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents))
    fail(ErrorCode::Io, "cannot write '" + path + "'");
}

} // namespace milnor

#endif
