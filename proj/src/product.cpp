#include "cayley/product.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

namespace cayley {

namespace {

constexpr Element kEmpty = std::numeric_limits<Element>::max();

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) {
      ++pos;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("bad parenthesization \"" + std::string(text) + "\" at offset " +
                     std::to_string(pos) + ": " + what);
  }

  // Returns the subtree; `next_position` tracks the expected in-order leaf.
  Parenthesization tree(std::uint32_t& next_position) {
    skip();
    if (pos >= text.size()) fail("unexpected end");
    if (text[pos] == '(') {
      ++pos;
      Parenthesization lhs = tree(next_position);
      Parenthesization rhs = tree(next_position);
      skip();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      return Parenthesization::join(lhs, rhs);
    }
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected position or '('");
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) fail("position too large");
      ++pos;
    }
    if (value != next_position) {
      fail("leaf/position mismatch: found leaf " + std::to_string(value) + ", expected " +
           std::to_string(next_position));
    }
    ++next_position;
    return Parenthesization();
  }
};

void write_tree(const std::vector<Parenthesization::Node>& nodes, std::int32_t at,
                std::ostream& os) {
  const auto& node = nodes[static_cast<std::size_t>(at)];
  if (node.is_leaf()) {
    os << node.position;
    return;
  }
  os << '(';
  write_tree(nodes, node.left, os);
  os << ' ';
  write_tree(nodes, node.right, os);
  os << ')';
}

}  // namespace

Parenthesization::Parenthesization() : nodes_{Node{}}, leaves_(1), depth_(0) {}

Parenthesization Parenthesization::join(const Parenthesization& lhs,
                                        const Parenthesization& rhs) {
  Parenthesization out;
  out.nodes_.clear();
  out.nodes_.reserve(lhs.nodes_.size() + rhs.nodes_.size() + 1);
  out.nodes_ = lhs.nodes_;
  const auto offset = static_cast<std::int32_t>(lhs.nodes_.size());
  const auto shift = static_cast<std::uint32_t>(lhs.leaves_);
  for (Node n : rhs.nodes_) {
    if (!n.is_leaf()) {
      n.left += offset;
      n.right += offset;
    } else {
      n.position += shift;
    }
    out.nodes_.push_back(n);
  }
  Node root;
  root.left = offset - 1;
  root.right = static_cast<std::int32_t>(out.nodes_.size()) - 1;
  out.nodes_.push_back(root);
  out.leaves_ = lhs.leaves_ + rhs.leaves_;
  out.depth_ = 1 + std::max(lhs.depth_, rhs.depth_);
  return out;
}

Parenthesization Parenthesization::balanced(std::size_t leaves) {
  if (leaves == 0) throw InputError("a parenthesization needs at least one leaf");
  if (leaves == 1) return Parenthesization();
  const std::size_t left = (leaves + 1) / 2;
  return join(balanced(left), balanced(leaves - left));
}

Parenthesization Parenthesization::left_comb(std::size_t leaves) {
  if (leaves == 0) throw InputError("a parenthesization needs at least one leaf");
  Parenthesization p;
  for (std::size_t i = 1; i < leaves; ++i) p = join(p, Parenthesization());
  return p;
}

Parenthesization Parenthesization::right_comb(std::size_t leaves) {
  if (leaves == 0) throw InputError("a parenthesization needs at least one leaf");
  if (leaves == 1) return Parenthesization();
  return join(Parenthesization(), right_comb(leaves - 1));
}

Parenthesization Parenthesization::parse(std::string_view text) {
  Parser parser{text};
  std::uint32_t next = 0;
  Parenthesization p = parser.tree(next);
  parser.skip();
  if (parser.pos != text.size()) parser.fail("trailing input");
  return p;
}

std::string Parenthesization::to_string() const {
  std::ostringstream os;
  write_tree(nodes_, static_cast<std::int32_t>(nodes_.size()) - 1, os);
  return os.str();
}

std::vector<Parenthesization> all_parenthesizations(std::size_t leaves, std::size_t max_depth) {
  static thread_local std::map<std::pair<std::size_t, std::size_t>, std::vector<Parenthesization>>
      memo;
  if (leaves == 0) return {};
  if (leaves == 1) return {Parenthesization()};
  if (max_depth == 0) return {};
  const auto key = std::make_pair(leaves, max_depth);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<Parenthesization> out;
  for (std::size_t left = 1; left < leaves; ++left) {
    const auto lhs = all_parenthesizations(left, max_depth - 1);
    const auto rhs = all_parenthesizations(leaves - left, max_depth - 1);
    for (const auto& l : lhs) {
      for (const auto& r : rhs) out.push_back(Parenthesization::join(l, r));
    }
  }
  memo.emplace(key, out);
  return out;
}

CubeIndex::CubeIndex(std::size_t k, std::uint64_t bits) : k_(k), bits_(bits) {
  if (k > 64) throw BudgetError("cube index longer than 64 bits");
  if (k < 64 && (bits >> k) != 0) throw InputError("cube index has bits beyond its length");
}

CubeIndex::CubeIndex(const std::vector<bool>& eps) : k_(eps.size()), bits_(0) {
  if (k_ > 64) throw BudgetError("cube index longer than 64 bits");
  for (std::size_t i = 0; i < k_; ++i) {
    if (eps[i]) bits_ |= std::uint64_t{1} << i;
  }
}

CubeIndex CubeIndex::all_ones(std::size_t k) {
  return CubeIndex(k, k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
}

Element product(const CayleyTable& t, Element x, Element y) { return t.product(x, y); }

void check_sequence(const CayleyTable& t, const ElementSequence& s) {
  if (s.empty()) throw InputError("element sequences are nonempty");
  for (Element x : s) t.check_element(x);
}

namespace {

void check_shape(const ElementSequence& s, const Parenthesization& p) {
  if (p.leaf_count() != s.size()) {
    throw InputError("leaf/position mismatch: parenthesization has " +
                     std::to_string(p.leaf_count()) + " leaves but the sequence has " +
                     std::to_string(s.size()) + " positions");
  }
}

Element fold(const CayleyTable& t, const ElementSequence& s, const Parenthesization& p,
             std::uint64_t keep_bits, bool keep_all, std::vector<Element>& scratch) {
  const auto& nodes = p.nodes();
  scratch.resize(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    if (n.is_leaf()) {
      const bool keep =
          keep_all || n.position == 0 || ((keep_bits >> (n.position - 1)) & 1u);
      scratch[i] = keep ? s[n.position] : kEmpty;
    } else {
      const Element l = scratch[static_cast<std::size_t>(n.left)];
      const Element r = scratch[static_cast<std::size_t>(n.right)];
      scratch[i] = l == kEmpty ? r : (r == kEmpty ? l : t(l, r));
    }
  }
  return scratch.back();
}

}  // namespace

Element eval_parenthesized(const CayleyTable& t, const ElementSequence& s,
                           const Parenthesization& p) {
  check_sequence(t, s);
  check_shape(s, p);
  std::vector<Element> scratch;
  return fold(t, s, p, 0, true, scratch);
}

Element cube_eval(const CayleyTable& t, const ElementSequence& s, const Parenthesization& p,
                  const CubeIndex& e) {
  check_sequence(t, s);
  check_shape(s, p);
  if (e.size() + 1 != s.size()) {
    throw InputError("cube index has " + std::to_string(e.size()) + " bits, expected " +
                     std::to_string(s.size() - 1));
  }
  std::vector<Element> scratch;
  return fold(t, s, p, e.bits(), false, scratch);
}

ElementSet cube_set(const CayleyTable& t, const ElementSequence& s, const Parenthesization& p,
                    std::size_t max_k) {
  check_sequence(t, s);
  check_shape(s, p);
  const std::size_t k = s.size() - 1;
  if (k > max_k) {
    throw BudgetError("cube over " + std::to_string(k) + " optional positions exceeds the budget of " +
                      std::to_string(max_k));
  }
  // The bits of different subtrees are independent, so each subtree's set of
  // reachable values (plus whether it can vanish) combines pairwise.
  const std::size_t n = t.order();
  const auto& nodes = p.nodes();
  std::vector<ElementSet> values(nodes.size(), ElementSet(n));
  std::vector<bool> can_vanish(nodes.size(), false);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    if (node.is_leaf()) {
      values[i].insert(s[node.position]);
      can_vanish[i] = node.position != 0;
      continue;
    }
    const auto l = static_cast<std::size_t>(node.left);
    const auto r = static_cast<std::size_t>(node.right);
    ElementSet& out = values[i];
    const auto left_elems = values[l].elements();
    const auto right_elems = values[r].elements();
    for (Element x : left_elems) {
      for (Element y : right_elems) out.insert(t(x, y));
    }
    if (can_vanish[l]) out.insert_all(values[r]);
    if (can_vanish[r]) out.insert_all(values[l]);
    can_vanish[i] = can_vanish[l] && can_vanish[r];
  }
  return values.back();
}

std::vector<Element> cube_values(const CayleyTable& t, const ElementSequence& s,
                                 const Parenthesization& p, std::size_t max_k) {
  check_sequence(t, s);
  check_shape(s, p);
  const std::size_t k = s.size() - 1;
  if (k > max_k) {
    throw BudgetError("cube over " + std::to_string(k) + " optional positions exceeds the budget of " +
                      std::to_string(max_k));
  }
  const std::uint64_t count = std::uint64_t{1} << k;
  std::vector<Element> out(count);
  std::vector<Element> scratch;
  for (std::uint64_t mask = 0; mask < count; ++mask) out[mask] = fold(t, s, p, mask, false, scratch);
  return out;
}

}  // namespace cayley
