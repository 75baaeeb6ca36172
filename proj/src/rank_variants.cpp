#include "cayley/rank_variants.hpp"

#include <array>
#include <bit>

#include "cayley/membership.hpp"
#include "cayley/rank.hpp"
#include "cayley/structure.hpp"

namespace cayley {

namespace {

constexpr std::array<std::string_view, 5> kVariantNames = {"large", "upper", "intermediate",
                                                           "lower", "small"};

using Mask = std::uint64_t;

// Closure of every subset of a small table, indexed by bit mask.
class SubsetClosures {
 public:
  SubsetClosures(const CayleyTable& t, unsigned threads) : n_(t.order()) {
    const Mask count = Mask{1} << n_;
    closures_.resize(count);
    parallel_for(count, threads, [&](std::uint64_t mask) {
      const ElementSet c = cayley::closure(t, ElementSet::from_mask(n_, mask));
      Mask out = 0;
      for (Element x : c.elements()) out |= Mask{1} << x;
      closures_[mask] = out;
    });
  }

  std::size_t order() const { return n_; }
  Mask full() const { return (Mask{1} << n_) - 1; }
  Mask closure(Mask m) const { return closures_[m]; }
  bool generates(Mask m) const { return closures_[m] == full(); }
  bool independent(Mask m) const {
    for (Mask rest = m; rest; rest &= rest - 1) {
      const Mask bit = rest & (~rest + 1);
      if (closures_[m ^ bit] & bit) return false;
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<Mask> closures_;
};

RankChain compute_chain(const SubsetClosures& sc) {
  const std::size_t n = sc.order();
  // Per size: does every subset generate / is every subset independent.
  std::vector<bool> all_generate(n + 1, true);
  std::vector<bool> all_independent(n + 1, true);
  RankChain c;
  c.lower = n + 1;
  for (Mask m = 0; m <= sc.full(); ++m) {
    const auto size = static_cast<std::size_t>(std::popcount(m));
    const bool gen = sc.generates(m);
    const bool ind = sc.independent(m);
    if (!gen) all_generate[size] = false;
    if (!ind) all_independent[size] = false;
    if (gen) c.lower = std::min(c.lower, size);
    if (ind) c.upper = std::max(c.upper, size);
    if (gen && ind) c.intermediate = std::max(c.intermediate, size);
  }
  c.large = n;
  for (std::size_t k = 0; k <= n; ++k) {
    if (all_generate[k]) {
      c.large = k;
      break;
    }
  }
  c.small = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (all_independent[k]) c.small = k;
  }
  c.holds = c.small <= c.lower && c.lower <= c.intermediate && c.intermediate <= c.upper &&
            c.upper <= c.large;
  return c;
}

void check_budget(const CayleyTable& t, const SearchConfig& cfg) {
  if (t.order() > cfg.variants_max_n || t.order() > 30) {
    throw BudgetError("rank variants enumerate all 2^n subsets; n = " + std::to_string(t.order()) +
                      " exceeds the limit of " + std::to_string(cfg.variants_max_n));
  }
}

}  // namespace

std::string_view to_string(RankVariant v) { return kVariantNames[static_cast<std::size_t>(v)]; }

std::optional<RankVariant> parse_rank_variant(std::string_view name) {
  for (std::size_t i = 0; i < kVariantNames.size(); ++i) {
    if (kVariantNames[i] == name) return static_cast<RankVariant>(i);
  }
  return std::nullopt;
}

bool is_independent(const CayleyTable& t, const ElementSet& s) {
  t.check_set(s);
  for (Element x : s.elements()) {
    ElementSet rest = s;
    rest.erase(x);
    if (closure(t, rest).contains(x)) return false;
  }
  return true;
}

VariantValue rank_variant(const CayleyTable& t, RankVariant v, const SearchConfig& cfg) {
  if (v == RankVariant::lower) {
    const RankReport rep = lower_rank(t, cfg);
    if (rep.exhausted) return {rep.rank, true, rep.lower_bound, rep.rank};
    return {rep.rank, false, rep.rank, rep.rank};
  }
  if (t.order() > cfg.variants_max_n || t.order() > 30) {
    // Every variant lies in [1, n] for a nonempty structure.
    return {0, true, 1, t.order()};
  }
  const RankChain c = compute_chain(SubsetClosures(t, cfg.threads));
  std::size_t value = 0;
  switch (v) {
    case RankVariant::large:
      value = c.large;
      break;
    case RankVariant::upper:
      value = c.upper;
      break;
    case RankVariant::intermediate:
      value = c.intermediate;
      break;
    case RankVariant::small:
      value = c.small;
      break;
    case RankVariant::lower:
      break;
  }
  return {value, false, value, value};
}

RankChain check_chain(const CayleyTable& t, const SearchConfig& cfg) {
  check_budget(t, cfg);
  return compute_chain(SubsetClosures(t, cfg.threads));
}

IndependenceBound max_independent_bound_check(const CayleyTable& t, const SearchConfig& cfg) {
  if (!is_group(t)) throw InputError("the independent-set bound is checked on group tables");
  check_budget(t, cfg);
  const SubsetClosures sc(t, cfg.threads);
  IndependenceBound out;
  for (Mask m = 0; m <= sc.full(); ++m) {
    const auto size = static_cast<std::size_t>(std::popcount(m));
    if (size > out.upper_rank && sc.independent(m)) out.upper_rank = size;
  }
  out.bound = std::max<std::size_t>(1, ceil_log2(t.order()));
  out.holds = out.upper_rank <= out.bound;
  return out;
}

}  // namespace cayley
