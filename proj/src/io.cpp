#include "cayley/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "cayley/structure.hpp"

namespace cayley {

namespace {

struct LineReader {
  std::istream& in;
  std::size_t line_no = 0;

  // Next line that is neither blank nor a comment.
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      line = line.substr(first);
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
        line.pop_back();
      }
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
  }
};

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t j = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > j) out.push_back(s.substr(j, i - j));
  }
  return out;
}

std::uint64_t to_number(LineReader& r, std::string_view token) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    r.fail("expected a nonnegative integer, got \"" + std::string(token) + "\"");
  }
  return value;
}

CayleyTable read_rows(LineReader& r, std::size_t n) {
  std::vector<Element> entries;
  entries.reserve(n * n);
  std::string line;
  for (std::size_t row = 0; row < n; ++row) {
    if (!r.next(line)) r.fail("expected " + std::to_string(n) + " table rows, got " + std::to_string(row));
    const auto tokens = split(line);
    if (tokens.size() != n) {
      r.fail("row " + std::to_string(row) + " has " + std::to_string(tokens.size()) +
             " entries, expected " + std::to_string(n));
    }
    for (auto tok : tokens) {
      const auto v = to_number(r, tok);
      if (v >= n) r.fail("entry " + std::string(tok) + " is not an element of 0.." + std::to_string(n - 1));
      entries.push_back(static_cast<Element>(v));
    }
  }
  return CayleyTable(n, std::move(entries));
}

}  // namespace

StructureFile parse_structure(std::istream& in) {
  LineReader r{in};
  std::string line;
  if (!r.next(line)) throw InputError("empty input: expected a header such as \"magma 3\"");
  const auto header = split(line);
  if (header.size() != 2) r.fail("header must be \"<kind> <n>\"");
  const std::string hint(header[0]);
  const auto n = to_number(r, header[1]);
  if (n == 0) r.fail("order must be positive");
  if (n > (1u << 16)) r.fail("order too large");

  StructureFile result = [&]() -> StructureFile {
    if (hint == "ring") {
      CayleyTable add = read_rows(r, n);
      std::string sep;
      if (!r.next(sep) || sep != "*") r.fail("expected a line containing only '*' between ring tables");
      CayleyTable mul = read_rows(r, n);
      return validate_ring(std::move(add), std::move(mul));
    }
    if (!parse_kind(hint)) r.fail("unknown structure kind \"" + hint + "\"");
    return TableFile{hint, read_rows(r, n)};
  }();
  std::string extra;
  if (r.next(extra)) r.fail("unexpected trailing content");
  return result;
}

StructureFile parse_structure(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_structure(in);
}

StructureFile load_structure(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return parse_structure(in);
  } catch (const RingAxiomError&) {
    throw;
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

TableFile load_table(const std::filesystem::path& path) {
  auto s = load_structure(path);
  if (auto* t = std::get_if<TableFile>(&s)) return std::move(*t);
  throw InputError(path.string() + ": expected a single Cayley table, found a ring");
}

RingTable load_ring(const std::filesystem::path& path) {
  auto s = load_structure(path);
  if (auto* r = std::get_if<RingTable>(&s)) return std::move(*r);
  throw InputError(path.string() + ": expected a ring file");
}

namespace {

void write_rows(std::ostream& out, const CayleyTable& t) {
  const std::size_t n = t.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (y) out << ' ';
      out << t(x, y);
    }
    out << '\n';
  }
}

}  // namespace

void write_table(std::ostream& out, const CayleyTable& t, std::string_view hint) {
  out << hint << ' ' << t.order() << '\n';
  write_rows(out, t);
}

void write_table(std::ostream& out, const CayleyTable& t) {
  write_table(out, t, to_string(classify(t).kind));
}

void write_ring(std::ostream& out, const RingTable& r) {
  out << "ring " << r.order() << '\n';
  write_rows(out, r.add());
  out << "*\n";
  write_rows(out, r.mul());
}

std::string format_table(const CayleyTable& t) {
  std::ostringstream os;
  write_table(os, t);
  return os.str();
}

std::string format_ring(const RingTable& r) {
  std::ostringstream os;
  write_ring(os, r);
  return os.str();
}

}  // namespace cayley
