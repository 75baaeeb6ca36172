#include "cayley/rank.hpp"

#include <stdexcept>

#include "cayley/membership.hpp"
#include "cayley/structure.hpp"

namespace cayley {

std::string_view to_string(RankMethod m) {
  switch (m) {
    case RankMethod::exhaustive:
      return "exhaustive";
    case RankMethod::log_bounded:
      return "log-bounded";
    case RankMethod::randomized:
      return "randomized";
  }
  return "exhaustive";
}

namespace {

struct SubsetSearch {
  std::optional<std::vector<Element>> found;
  std::uint64_t examined = 0;
  bool budget_hit = false;
};

std::uint64_t remaining(const SearchConfig& cfg, std::uint64_t spent) {
  return spent >= cfg.max_candidates ? 0 : cfg.max_candidates - spent;
}

// First m-subset of `universe` (lexicographic by position) satisfying pred.
template <class Pred>
SubsetSearch search_subsets(const std::vector<Element>& universe, std::size_t m,
                            const SearchConfig& cfg, std::uint64_t spent, Pred&& pred) {
  SubsetSearch out;
  const auto u = static_cast<std::uint32_t>(universe.size());
  const std::uint64_t total = binomial(u, m);
  const std::uint64_t limit = std::min(total, remaining(cfg, spent));
  auto hit = find_first<std::vector<Element>>(limit, cfg.threads, [&](std::uint64_t i) {
    const auto positions = unrank_combination(u, static_cast<std::uint32_t>(m), i);
    std::vector<Element> subset;
    subset.reserve(m);
    for (auto p : positions) subset.push_back(universe[p]);
    return pred(subset) ? std::optional(std::move(subset)) : std::nullopt;
  });
  if (hit) {
    out.examined = hit->first + 1;
    out.found = std::move(hit->second);
  } else {
    out.examined = limit;
    out.budget_hit = limit < total;
  }
  return out;
}

std::vector<Element> all_elements(std::size_t n) {
  std::vector<Element> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Element>(i);
  return v;
}

std::size_t log_bound(std::size_t n) { return std::max<std::size_t>(1, ceil_log2(n)); }

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

// n^m, saturating.
std::uint64_t power(std::uint64_t n, std::size_t m) {
  unsigned __int128 r = 1;
  for (std::size_t i = 0; i < m; ++i) {
    r *= n;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

ElementSequence sequence_from_index(std::uint64_t index, std::size_t n, std::size_t m) {
  ElementSequence seq(m);
  for (std::size_t i = m; i-- > 0;) {
    seq[i] = static_cast<Element>(index % n);
    index /= n;
  }
  return seq;
}

RankReport set_report(std::size_t n, const std::vector<Element>& witness, RankMethod method,
                      std::uint64_t examined) {
  RankReport r;
  r.rank = witness.size();
  r.lower_bound = witness.size();
  r.witness = ElementSet(n, std::span<const Element>(witness));
  r.method = method;
  r.candidates_examined = examined;
  r.exact = true;
  return r;
}

}  // namespace

bool generates(const CayleyTable& t, const ElementSet& s) { return closure(t, s).is_full(); }

RankDecision rank_decision(const CayleyTable& t, std::size_t k, const SearchConfig& cfg) {
  const std::size_t n = t.order();
  RankDecision out;
  if (k == 0) return out;
  const bool group = is_group(t);
  std::size_t max_size = 0;
  bool complete = true;
  if (group) {
    max_size = std::min(k, log_bound(n));
  } else if (n <= cfg.magma_exhaustive_max_n) {
    max_size = std::min(k, n);
  } else {
    max_size = std::min(k, cfg.magma_max_subset);
    complete = k <= cfg.magma_max_subset;
  }
  const auto universe = all_elements(n);
  auto pred = [&](const std::vector<Element>& s) {
    return generates(t, ElementSet(n, std::span<const Element>(s)));
  };
  for (std::size_t m = 1; m <= max_size; ++m) {
    auto r = search_subsets(universe, m, cfg, out.candidates_examined, pred);
    out.candidates_examined += r.examined;
    if (r.found) {
      out.verdict = Verdict::yes;
      out.witness = ElementSet(n, std::span<const Element>(*r.found));
      return out;
    }
    if (r.budget_hit) {
      out.verdict = Verdict::exhausted;
      return out;
    }
  }
  if (!complete && k >= n) {
    out.verdict = Verdict::yes;
    out.witness = ElementSet::full(n);
    return out;
  }
  out.verdict = complete ? Verdict::no : Verdict::exhausted;
  return out;
}

RankReport group_rank(const CayleyTable& t, const SearchConfig& cfg) {
  if (!is_group(t)) throw InputError("group rank needs a group table");
  const std::size_t n = t.order();
  const auto universe = all_elements(n);
  std::uint64_t spent = 0;
  for (std::size_t m = 1; m <= log_bound(n); ++m) {
    auto r = search_subsets(universe, m, cfg, spent, [&](const std::vector<Element>& s) {
      return generates(t, ElementSet(n, std::span<const Element>(s)));
    });
    spent += r.examined;
    if (r.found) {
      // For n <= 2 the log-bounded space is every subset.
      const auto method = log_bound(n) >= n ? RankMethod::exhaustive : RankMethod::log_bounded;
      RankReport rep = set_report(n, *r.found, method, spent);
      require(verify_witness(t, rep), "group rank witness failed verification");
      return rep;
    }
    if (r.budget_hit) {
      RankReport rep;
      rep.rank = n;
      rep.lower_bound = m;
      rep.witness = ElementSet::full(n);
      rep.method = RankMethod::log_bounded;
      rep.candidates_examined = spent;
      rep.exhausted = true;
      return rep;
    }
  }
  throw std::logic_error("no generating set within the log bound; table is not a group");
}

RankReport lower_rank(const CayleyTable& t, const SearchConfig& cfg) {
  if (is_group(t)) return group_rank(t, cfg);
  const std::size_t n = t.order();
  const auto universe = all_elements(n);
  const bool exhaustive = n <= cfg.magma_exhaustive_max_n;
  const std::size_t max_size = exhaustive ? n : std::min(n, cfg.magma_max_subset);
  std::uint64_t spent = 0;
  for (std::size_t m = 1; m <= max_size; ++m) {
    auto r = search_subsets(universe, m, cfg, spent, [&](const std::vector<Element>& s) {
      return generates(t, ElementSet(n, std::span<const Element>(s)));
    });
    spent += r.examined;
    if (r.found) {
      RankReport rep = set_report(n, *r.found, RankMethod::exhaustive, spent);
      require(verify_witness(t, rep), "rank witness failed verification");
      return rep;
    }
    if (r.budget_hit) {
      RankReport rep;
      rep.rank = n;
      rep.lower_bound = m;
      rep.witness = ElementSet::full(n);
      rep.candidates_examined = spent;
      rep.exhausted = true;
      return rep;
    }
  }
  // Only reachable when the subset size cap was below n.
  RankReport rep;
  rep.rank = n;
  rep.lower_bound = max_size + 1;
  rep.witness = ElementSet::full(n);
  rep.candidates_examined = spent;
  rep.exhausted = true;
  return rep;
}

RankReport quasigroup_cube_rank(const CayleyTable& t, const CubeRankOptions& opts,
                                const SearchConfig& cfg) {
  if (!is_latin_square(t)) throw InputError("cube rank needs a quasigroup (Latin square) table");
  const std::size_t n = t.order();
  // A cube over m positions has at most 2^(m-1) elements.
  const std::size_t min_len = 1 + ceil_log2(n);
  std::size_t max_len = opts.max_len ? opts.max_len : n + 1;
  bool clamped = false;
  if (max_len > cfg.cube_max_k + 1) {
    max_len = cfg.cube_max_k + 1;
    clamped = true;
  }

  RankReport rep;
  rep.lower_bound = min_len;
  auto covers = [&](const ElementSequence& seq) {
    return cube_set(t, seq, Parenthesization::balanced(seq.size()), cfg.cube_max_k).is_full();
  };
  auto accept = [&](ElementSequence seq) {
    rep.rank = seq.size();
    rep.witness = CubeWitness{seq, Parenthesization::balanced(seq.size())};
    require(verify_witness(t, rep), "cube rank witness failed verification");
  };

  if (min_len > max_len) {
    rep.exhausted = clamped;
    return rep;
  }

  std::size_t random_from = min_len;
  if (n <= cfg.cube_rank_exhaustive_max_n) {
    rep.method = RankMethod::exhaustive;
    for (std::size_t m = min_len; m <= max_len; ++m) {
      const std::uint64_t total = power(n, m);
      const std::uint64_t limit = std::min(total, remaining(cfg, rep.candidates_examined));
      auto hit = find_first<ElementSequence>(limit, cfg.threads, [&](std::uint64_t i) {
        auto seq = sequence_from_index(i, n, m);
        return covers(seq) ? std::optional(std::move(seq)) : std::nullopt;
      });
      if (hit) {
        rep.candidates_examined += hit->first + 1;
        rep.lower_bound = m;
        rep.exact = true;
        accept(std::move(hit->second));
        return rep;
      }
      rep.candidates_examined += limit;
      rep.lower_bound = m + 1;
      if (limit < total) {
        rep.lower_bound = m;
        random_from = m;
        break;
      }
      if (m == max_len) {
        rep.exhausted = clamped;
        return rep;
      }
    }
  }

  rep.method = RankMethod::randomized;
  for (std::size_t m = random_from; m <= max_len; ++m) {
    auto hit = find_first<ElementSequence>(opts.tries, cfg.threads, [&](std::uint64_t i) {
      Rng rng(derive_seed(opts.seed, (static_cast<std::uint64_t>(m) << 32) | i));
      ElementSequence seq(m);
      for (auto& x : seq) x = static_cast<Element>(uniform_below(rng, n));
      return covers(seq) ? std::optional(std::move(seq)) : std::nullopt;
    });
    if (hit) {
      rep.candidates_examined += hit->first + 1;
      accept(std::move(hit->second));
      // An exhaustive pass may have cleared every shorter length.
      rep.exact = rep.lower_bound == rep.rank;
      rep.exhausted = false;
      return rep;
    }
    rep.candidates_examined += opts.tries;
  }
  rep.exhausted = true;
  return rep;
}

Verdict quasigroup_rank_decision(const CayleyTable& t, std::size_t k, const CubeRankOptions& opts,
                                 const SearchConfig& cfg) {
  if (!is_latin_square(t)) throw InputError("cube rank needs a quasigroup (Latin square) table");
  if (k == 0) return Verdict::no;
  CubeRankOptions capped = opts;
  capped.max_len = std::min(k, t.order() + 1);
  const RankReport rep = quasigroup_cube_rank(t, capped, cfg);
  if (rep.rank && rep.rank <= k) return Verdict::yes;
  return rep.exhausted ? Verdict::exhausted : Verdict::no;
}

RankDecision generalized_rank(const CayleyTable& t, const ElementSet& target, std::size_t k,
                              const SearchConfig& cfg) {
  t.check_set(target);
  const std::size_t n = t.order();
  const auto universe = target.elements();
  RankDecision out;
  for (std::size_t m = 0; m <= std::min(k, universe.size()); ++m) {
    auto r = search_subsets(universe, m, cfg, out.candidates_examined,
                            [&](const std::vector<Element>& s) {
                              return target.is_subset_of(
                                  closure(t, ElementSet(n, std::span<const Element>(s))));
                            });
    out.candidates_examined += r.examined;
    if (r.found) {
      out.verdict = Verdict::yes;
      out.witness = ElementSet(n, std::span<const Element>(*r.found));
      return out;
    }
    if (r.budget_hit) {
      out.verdict = Verdict::exhausted;
      return out;
    }
  }
  return out;
}

RankReport submagma_rank(const CayleyTable& t, const ElementSet& s, const SearchConfig& cfg) {
  t.check_set(s);
  const std::size_t n = t.order();
  if (s.empty()) {
    RankReport rep;
    rep.witness = ElementSet(n);
    rep.exact = true;
    return rep;
  }
  const auto sub = induced_subtable(t, closure(t, s));
  RankReport rep = lower_rank(sub.table, cfg);
  if (const ElementSet* w = rep.generating_set()) {
    ElementSet lifted(n);
    for (Element x : w->elements()) lifted.insert(sub.labels[x]);
    rep.witness = std::move(lifted);
  }
  return rep;
}

bool membership_via_rank(const CayleyTable& t, Element h, const ElementSet& s,
                         const SearchConfig& cfg) {
  t.check_element(h);
  ElementSet with_h = s;
  with_h.insert(h);
  const RankReport before = submagma_rank(t, s, cfg);
  const RankReport after = submagma_rank(t, with_h, cfg);
  if (before.exhausted || after.exhausted) {
    throw BudgetError("submagma rank search ran out of budget");
  }
  return before.rank == after.rank;
}

RankReport ring_rank(const RingTable& r, const SearchConfig& cfg) {
  const std::size_t n = r.order();
  const auto universe = all_elements(n);
  std::uint64_t spent = 0;
  for (std::size_t m = 1; m <= log_bound(n); ++m) {
    auto hit = search_subsets(universe, m, cfg, spent, [&](const std::vector<Element>& s) {
      return subring_closure(r, ElementSet(n, std::span<const Element>(s))).is_full();
    });
    spent += hit.examined;
    if (hit.found) {
      RankReport rep = set_report(n, *hit.found, RankMethod::log_bounded, spent);
      require(verify_ring_witness(r, rep), "ring rank witness failed verification");
      return rep;
    }
    if (hit.budget_hit) {
      RankReport rep;
      rep.rank = n;
      rep.lower_bound = m;
      rep.witness = ElementSet::full(n);
      rep.method = RankMethod::log_bounded;
      rep.candidates_examined = spent;
      rep.exhausted = true;
      return rep;
    }
  }
  throw std::logic_error("no ring generating set within the log bound");
}

RingRankSummary ring_rank_summary(const RingTable& r, const SearchConfig& cfg) {
  return {ring_rank(r, cfg), group_rank(r.add(), cfg), lower_rank(r.mul(), cfg)};
}

bool verify_witness(const CayleyTable& t, const RankReport& report) {
  if (const ElementSet* s = report.generating_set()) {
    return s->size() == report.rank && generates(t, *s);
  }
  if (const CubeWitness* c = report.cube_witness()) {
    return c->sequence.size() == report.rank &&
           cube_set(t, c->sequence, c->tree, c->sequence.size()).is_full();
  }
  return false;
}

bool verify_ring_witness(const RingTable& r, const RankReport& report) {
  const ElementSet* s = report.generating_set();
  return s && s->size() == report.rank && subring_closure(r, *s).is_full();
}

}  // namespace cayley
