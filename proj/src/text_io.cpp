#include "orthomat/text_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "orthomat/errors.hpp"

namespace orthomat::text {
namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::size_t width;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, raw.size(), {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      if (i >= raw.size()) break;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
    }
    bool comment = !line.tokens.empty() && line.tokens.front().text.front() == '#';
    if (!line.tokens.empty() && !comment) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const std::string& msg, const Line& line, std::size_t token) {
  // Past the last token: point just after the end of the line.
  std::size_t column = token < line.tokens.size() ? line.tokens[token].column : line.width + 1;
  throw ParseError(msg, line.number, column);
}

std::size_t parse_count(const Line& line, std::size_t token, std::size_t max = 1U << 20) {
  const std::string& t = line.tokens[token].text;
  if (t.empty() || t.size() > 7 || t.find_first_not_of("0123456789") != std::string::npos)
    fail("expected a non-negative integer, got '" + t + "'", line, token);
  std::size_t v = std::stoul(t);
  if (v > max) fail("value " + t + " is too large", line, token);
  return v;
}

void expect_keyword(const Line& line, std::size_t token, const char* word) {
  if (token >= line.tokens.size() || line.tokens[token].text != word)
    fail(std::string("expected '") + word + "'", line, token);
}

const Line& first_line(const std::vector<Line>& lines, const char* what) {
  if (lines.empty()) throw ParseError(std::string("empty input; expected ") + what, 1, 1);
  return lines.front();
}

Rational parse_entry(const Line& line, std::size_t token) {
  auto q = parse_rational(line.tokens[token].text);
  if (!q) fail("malformed entry '" + line.tokens[token].text + "' (integers or p/q only)", line, token);
  return *q;
}

void read_rows(const std::vector<Line>& lines, std::size_t first, std::size_t rows, std::size_t cols,
               RationalMatrix& m) {
  if (lines.size() != first + rows) {
    const Line& where = lines.size() > first + rows ? lines[first + rows] : lines.back();
    if (lines.size() > first + rows) fail("unexpected extra row", where, 0);
    throw ParseError("expected " + std::to_string(rows) + " rows, found " + std::to_string(lines.size() - first),
                     where.number + 1, 1);
  }
  for (std::size_t r = 0; r < rows; ++r) {
    const Line& line = lines[first + r];
    if (line.tokens.size() != cols)
      fail("expected " + std::to_string(cols) + " entries, found " + std::to_string(line.tokens.size()), line,
           std::min(line.tokens.size(), cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_entry(line, c);
  }
}

ElementSet parse_set_tokens(int n, const Line& line, std::size_t begin, std::size_t end) {
  ElementSet s(n);
  if (end - begin == 1 && line.tokens[begin].text == "{}") return s;
  for (std::size_t t = begin; t < end; ++t) {
    GroundElement e;
    try {
      e = parse_element(line.tokens[t].text);
    } catch (const DomainError& err) {
      fail(err.what(), line, t);
    }
    if (e.index > n) fail("element " + line.tokens[t].text + " exceeds n=" + std::to_string(n), line, t);
    if (s.contains(e)) fail("element " + line.tokens[t].text + " repeated", line, t);
    s.insert(e);
  }
  return s;
}

std::string set_line(const ElementSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (auto e : s.elements()) {
    if (!out.empty()) out += ' ';
    out += to_string(e);
  }
  return out;
}

}  // namespace

RationalMatrix parse_matrix(std::string_view text) {
  auto lines = tokenize(text);
  const Line& head = first_line(lines, "`rows cols`");
  if (head.tokens.size() != 2) fail("header must be `rows cols`", head, 0);
  std::size_t rows = parse_count(head, 0, 4096), cols = parse_count(head, 1, 4096);
  RationalMatrix m(rows, cols);
  read_rows(lines, 1, rows, cols, m);
  return m;
}

std::string format_matrix(const RationalMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << to_string(m(r, c));
    out << '\n';
  }
  return out.str();
}

BasisCollection parse_bases(std::string_view text) {
  auto lines = tokenize(text);
  const Line& head = first_line(lines, "`n <n> k <k>`");
  if (head.tokens.size() != 4) fail("header must be `n <n> k <k>`", head, 0);
  expect_keyword(head, 0, "n");
  expect_keyword(head, 2, "k");
  const int n = static_cast<int>(parse_count(head, 1, kMaxAmbient));
  const int k = static_cast<int>(parse_count(head, 3, 2 * kMaxAmbient));
  std::vector<ElementSet> bases;
  std::set<ElementSet> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    ElementSet s = parse_set_tokens(n, line, 0, line.tokens.size());
    if (s.size() != k) fail("basis has " + std::to_string(s.size()) + " elements, expected " + std::to_string(k), line, 0);
    if (!seen.insert(s).second) fail("duplicate basis " + to_string(s), line, 0);
    bases.push_back(s);
  }
  return BasisCollection(n, k, std::move(bases));
}

std::string format_bases(const BasisCollection& c) {
  std::string out = "n " + std::to_string(c.ambient()) + " k " + std::to_string(c.rank()) + "\n";
  for (const auto& b : c.bases()) out += set_line(b) + "\n";
  return out;
}

IsotropicRepresentation parse_isotropic(std::string_view text) {
  auto lines = tokenize(text);
  const Line& head = first_line(lines, "`isotropic n <n> k <k> form <kind>`");
  if (head.tokens.size() != 7) fail("header must be `isotropic n <n> k <k> form <symplectic|orthogonal>`", head, 0);
  expect_keyword(head, 0, "isotropic");
  expect_keyword(head, 1, "n");
  expect_keyword(head, 3, "k");
  expect_keyword(head, 5, "form");
  const std::size_t n = parse_count(head, 2, kMaxAmbient);
  const std::size_t k = parse_count(head, 4, kMaxAmbient);
  FormKind form;
  if (head.tokens[6].text == "symplectic")
    form = FormKind::Symplectic;
  else if (head.tokens[6].text == "orthogonal")
    form = FormKind::Orthogonal;
  else
    fail("form must be symplectic or orthogonal", head, 6);
  if (k > n) fail("k must not exceed n", head, 4);
  RationalMatrix m(k, 2 * n);
  read_rows(lines, 1, k, 2 * n, m);
  return validate_isotropy(m, form);
}

std::string format_isotropic(const IsotropicRepresentation& r) {
  std::string body = format_matrix(r.matrix());
  body.erase(0, body.find('\n') + 1);
  return "isotropic n " + std::to_string(r.ambient()) + " k " + std::to_string(r.rank()) + " form " +
         to_string(r.form()) + "\n" + body;
}

LagrangianSignMap parse_signmap(std::string_view text) {
  auto lines = tokenize(text);
  const Line& head = first_line(lines, "`signmap n <n>`");
  if (head.tokens.size() != 3) fail("header must be `signmap n <n>`", head, 0);
  expect_keyword(head, 0, "signmap");
  expect_keyword(head, 1, "n");
  const int n = static_cast<int>(parse_count(head, 2, kMaxAmbient));
  LagrangianSignMap p(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::size_t last = line.tokens.size() - 1;
    const std::string& sign_token = line.tokens[last].text;
    if (sign_token != "+" && sign_token != "-") fail("line must end with + or -", line, last);
    ElementSet s = parse_set_tokens(n, line, 0, last);
    if (s.size() != n || !is_admissible(s)) fail(to_string(s) + " is not an admissible n-set", line, 0);
    if (p.value(s) != 0) fail("duplicate support set " + to_string(s), line, 0);
    p.set(s, sign_token == "+" ? 1 : -1);
  }
  return p;
}

std::string format_signmap(const LagrangianSignMap& p) {
  std::string out = "signmap n " + std::to_string(p.ambient()) + "\n";
  const LagrangianSignMap c = canonical(p);
  for (const auto& [b, v] : c.nonzero()) out += set_line(b) + (v > 0 ? " +\n" : " -\n");
  return out;
}

ElementSet parse_element_list(int n, std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) return ElementSet(n);
  if (lines.size() != 1) fail("element list must be a single line", lines[1], 0);
  return parse_set_tokens(n, lines.front(), 0, lines.front().tokens.size());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace orthomat::text
