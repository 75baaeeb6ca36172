#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "cayley/ring.hpp"
#include "cayley/table.hpp"

namespace cayley {

// Text format:
//
//   # comment lines start with '#'
//   group 3            <- magma|semigroup|monoid|quasigroup|loop|group, an unchecked hint
//   0 1 2
//   1 2 0
//   2 0 1
//
// Rings use `ring <n>`, the additive table, a line holding only `*`, then the
// multiplicative table.

struct TableFile {
  std::string hint;
  CayleyTable table;
};

using StructureFile = std::variant<TableFile, RingTable>;

StructureFile parse_structure(std::istream& in);
StructureFile parse_structure(std::string_view text);
StructureFile load_structure(const std::filesystem::path& path);

// Convenience wrappers that reject the other variant.
TableFile load_table(const std::filesystem::path& path);
RingTable load_ring(const std::filesystem::path& path);

void write_table(std::ostream& out, const CayleyTable& t, std::string_view hint);
// Hint taken from classify().
void write_table(std::ostream& out, const CayleyTable& t);
void write_ring(std::ostream& out, const RingTable& r);

std::string format_table(const CayleyTable& t);
std::string format_ring(const RingTable& r);

}  // namespace cayley
