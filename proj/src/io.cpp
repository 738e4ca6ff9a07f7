#include "cmpoly/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "cmpoly/error.hpp"

namespace cmpoly {
namespace {

class MonomialParser {
 public:
  MonomialParser(std::string_view text, std::size_t n, Exponent cap,
                 std::size_t line, std::size_t first_column)
      : text_(text), n_(n), cap_(cap), line_(line), first_column_(first_column) {}

  Monomial parse() {
    Monomial out(n_);
    skip_space();
    if (peek() == '1') {
      ++pos_;
      expect_end();
      return out;
    }
    for (;;) {
      parse_factor(out);
      skip_space();
      if (at_end()) return out;
      if (peek() != '*') fail("expected '*' or end of monomial");
      ++pos_;
    }
  }

 private:
  void parse_factor(Monomial& out) {
    skip_space();
    if (peek() != 'x') fail("expected 'x'");
    ++pos_;
    skip_space();
    const std::size_t var_column = pos_;
    const std::uint64_t index = parse_int();
    if (index > n_) {
      fail_at(var_column, "variable x" + std::to_string(index) + " exceeds n=" +
                              std::to_string(n_));
    }
    std::uint64_t exponent = 1;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      exponent = parse_int();
    }
    const std::size_t i = static_cast<std::size_t>(index - 1);
    const std::uint64_t total = exponent + out[i];
    if (total > cap_) {
      fail_at(var_column, "exponent of x" + std::to_string(index) + " exceeds cap " +
                              std::to_string(cap_));
    }
    out.set(i, static_cast<Exponent>(total), cap_);
  }

  std::uint64_t parse_int() {
    if (!std::isdigit(static_cast<unsigned char>(peek())) || peek() == '0') {
      fail("expected a positive integer");
    }
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > (std::uint64_t{1} << 40)) fail("integer too large");
      ++pos_;
    }
    return value;
  }

  void expect_end() {
    skip_space();
    if (!at_end()) fail("unexpected text after monomial");
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(line_, first_column_ + pos, message);
  }

  std::string_view text_;
  std::size_t n_;
  Exponent cap_;
  std::size_t line_;
  std::size_t first_column_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s, std::size_t& offset) {
  offset = 0;
  while (offset < s.size() && std::isspace(static_cast<unsigned char>(s[offset]))) {
    ++offset;
  }
  std::size_t end = s.size();
  while (end > offset && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(offset, end - offset);
}

// "n=<INT>" with optional whitespace around the tokens.
std::size_t parse_header(std::string_view line, std::size_t line_no,
                         std::size_t offset) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> std::size_t {
    throw ParseError(line_no, offset + pos + 1, what);
  };
  if (line.empty() || line[0] != 'n') return fail("expected header \"n=<INT>\"");
  ++pos;
  skip();
  if (pos >= line.size() || line[pos] != '=') return fail("expected '=' after n");
  ++pos;
  skip();
  if (pos >= line.size() || line[pos] < '1' || line[pos] > '9') {
    return fail("expected a positive integer");
  }
  std::size_t n = 0;
  while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
    n = n * 10 + static_cast<std::size_t>(line[pos] - '0');
    if (n > 4096) return fail("n is too large");
    ++pos;
  }
  skip();
  if (pos != line.size()) return fail("unexpected text after n");
  return n;
}

MonomialIdeal parse_text_ideal(std::string_view text, Exponent cap) {
  std::optional<std::size_t> n;
  std::vector<Monomial> gens;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    const std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    std::size_t offset = 0;
    const std::string_view line = trim(raw, offset);
    if (line.empty() || line.front() == '#') continue;
    if (!n) {
      n = parse_header(line, line_no, offset);
      continue;
    }
    gens.push_back(parse_monomial(line, *n, cap, line_no, offset + 1));
  }
  if (!n) throw ParseError(line_no == 0 ? 1 : line_no, 0, "missing header \"n=<INT>\"");
  return minimalize(std::move(gens), *n);
}

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

Monomial parse_monomial(std::string_view text, std::size_t n, Exponent cap,
                        std::size_t line, std::size_t first_column) {
  return MonomialParser(text, n, cap, line, first_column).parse();
}

MonomialIdeal parse_ideal(std::string_view text, Exponent cap) {
  std::size_t offset = 0;
  const std::string_view body = trim(text, offset);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      const auto [line, column] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
      throw ParseError(line, column, "malformed structured ideal");
    }
    return ideal_from_json(doc, cap);
  }
  return parse_text_ideal(text, cap);
}

MonomialIdeal read_ideal_file(const std::filesystem::path& path, Exponent cap) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kParse, "cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_ideal(buffer.str(), cap);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path.string() + ": " + e.what());
  }
}

std::string format_monomial(const Monomial& u) {
  std::string out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (u[i] > 1) out += '^' + std::to_string(u[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "n=" + std::to_string(ideal.num_vars()) + "\n";
  for (const Monomial& g : ideal.generators()) out += format_monomial(g) + "\n";
  return out;
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Monomial& g : ideal.generators()) {
    gens.push_back(std::vector<Exponent>(g.exponents().begin(), g.exponents().end()));
  }
  return {{"n", ideal.num_vars()}, {"gens", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const nlohmann::json& doc, Exponent cap) {
  auto fail = [](const std::string& what) -> MonomialIdeal {
    throw Error(ErrorKind::kParse, "structured ideal: " + what);
  };
  if (!doc.is_object()) return fail("expected an object");
  if (!doc.contains("n") || !doc["n"].is_number_unsigned() || doc["n"].get<std::uint64_t>() == 0) {
    return fail("field n must be a positive integer");
  }
  const std::size_t n = doc["n"].get<std::size_t>();
  if (!doc.contains("gens") || !doc["gens"].is_array()) {
    return fail("field gens must be a list");
  }
  std::vector<Monomial> gens;
  for (const auto& row : doc["gens"]) {
    if (!row.is_array() || row.size() != n) {
      return fail("each generator must list exactly n exponents");
    }
    Monomial u(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!row[i].is_number_unsigned() && !(row[i].is_number_integer() && row[i].get<std::int64_t>() >= 0)) {
        return fail("exponents must be nonnegative integers");
      }
      const std::uint64_t e = row[i].get<std::uint64_t>();
      if (e > cap) return fail("exponent exceeds cap " + std::to_string(cap));
      u.set(i, static_cast<Exponent>(e), cap);
    }
    gens.push_back(std::move(u));
  }
  return minimalize(std::move(gens), n);
}

}  // namespace cmpoly
