#include "cayley/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cayley/structure.hpp"

namespace cayley {

std::string_view to_string(IsoResult r) {
  switch (r) {
    case IsoResult::isomorphic:
      return "isomorphic";
    case IsoResult::not_isomorphic:
      return "not-isomorphic";
    case IsoResult::exhausted:
      return "exhausted";
  }
  return "exhausted";
}

std::optional<IsoMode> parse_iso_mode(std::string_view name) {
  if (name == "cube") return IsoMode::cube;
  if (name == "brute") return IsoMode::brute;
  return std::nullopt;
}

namespace {

void require_latin(const CayleyTable& t) {
  if (!is_latin_square(t)) throw InputError("table is not a quasigroup (Latin square)");
}

ElementSequence sequence_at(std::uint64_t index, std::size_t n, std::size_t m) {
  ElementSequence seq(m);
  for (std::size_t i = m; i-- > 0;) {
    seq[i] = static_cast<Element>(index % n);
    index /= n;
  }
  return seq;
}

// n^m, or nullopt past 64 bits.
std::optional<std::uint64_t> checked_power(std::uint64_t n, std::size_t m) {
  unsigned __int128 r = 1;
  for (std::size_t i = 0; i < m; ++i) {
    r *= n;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(r);
}

std::optional<std::string> invariant_mismatch(const CayleyTable& g, const CayleyTable& h) {
  if (g.order() != h.order()) return "order";
  const StructureKind kg = classify(g);
  const StructureKind kh = classify(h);
  if (kg.is_associative != kh.is_associative) return "associativity";
  if (kg.is_commutative != kh.is_commutative) return "commutativity";
  if (kg.left_identities.size() != kh.left_identities.size() ||
      kg.right_identities.size() != kh.right_identities.size()) {
    return "identities";
  }
  return std::nullopt;
}

// The map P(g^e) -> P(h^e), if it is well defined and injective.
std::optional<std::vector<Element>> induced_map(std::size_t n, const std::vector<Element>& pg,
                                                const std::vector<Element>& ph) {
  constexpr Element kUnset = std::numeric_limits<Element>::max();
  std::vector<Element> phi(n, kUnset);
  std::vector<Element> inverse(n, kUnset);
  for (std::size_t m = 0; m < pg.size(); ++m) {
    const Element x = pg[m];
    const Element y = ph[m];
    if (phi[x] == kUnset && inverse[y] == kUnset) {
      phi[x] = y;
      inverse[y] = x;
    } else if (phi[x] != y || inverse[y] != x) {
      return std::nullopt;
    }
  }
  if (std::find(phi.begin(), phi.end(), kUnset) != phi.end()) return std::nullopt;
  return phi;
}

// For all index triples: P(g^e) = P(g^a) P(g^b) iff P(h^e) = P(h^a) P(h^b).
bool triple_condition(const CayleyTable& g, const CayleyTable& h, const std::vector<Element>& pg,
                      const std::vector<Element>& ph) {
  const std::size_t count = pg.size();
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      const Element gab = g(pg[a], pg[b]);
      const Element hab = h(ph[a], ph[b]);
      for (std::size_t e = 0; e < count; ++e) {
        if ((pg[e] == gab) != (ph[e] == hab)) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<CubeWitness> find_cube_generating_sequence(const CayleyTable& t, std::size_t length,
                                                         std::uint64_t tries, std::uint64_t seed,
                                                         const SearchConfig& cfg) {
  require_latin(t);
  if (length == 0) throw InputError("sequence length must be positive");
  const std::size_t n = t.order();
  const Parenthesization tree = Parenthesization::balanced(length);
  auto hit = find_first<ElementSequence>(tries, cfg.threads, [&](std::uint64_t i) {
    Rng rng(derive_seed(seed, i));
    ElementSequence seq(length);
    for (auto& x : seq) x = static_cast<Element>(uniform_below(rng, n));
    return cube_set(t, seq, tree, cfg.cube_max_k).is_full() ? std::optional(std::move(seq))
                                                            : std::nullopt;
  });
  if (!hit) return std::nullopt;
  return CubeWitness{std::move(hit->second), tree};
}

std::optional<CubeWitness> find_cube_generating_sequence_exhaustive(const CayleyTable& t,
                                                                    std::size_t length,
                                                                    const SearchConfig& cfg) {
  require_latin(t);
  if (length == 0) throw InputError("sequence length must be positive");
  const std::size_t n = t.order();
  const Parenthesization tree = Parenthesization::balanced(length);
  const std::uint64_t total =
      std::min(checked_power(n, length).value_or(cfg.max_candidates), cfg.max_candidates);
  auto hit = find_first<ElementSequence>(total, cfg.threads, [&](std::uint64_t i) {
    auto seq = sequence_at(i, n, length);
    return cube_set(t, seq, tree, cfg.cube_max_k).is_full() ? std::optional(std::move(seq))
                                                            : std::nullopt;
  });
  if (!hit) return std::nullopt;
  return CubeWitness{std::move(hit->second), tree};
}

bool product_equality(const CayleyTable& t, const ElementSequence& s1, const Parenthesization& p1,
                      const ElementSequence& s2, const Parenthesization& p2) {
  return eval_parenthesized(t, s1, p1) == eval_parenthesized(t, s2, p2);
}

bool is_isomorphism(const CayleyTable& g, const CayleyTable& h, const std::vector<Element>& phi) {
  const std::size_t n = g.order();
  if (h.order() != n || phi.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Element y : phi) {
    if (y >= n || hit[y]) return false;
    hit[y] = true;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (phi[g(x, y)] != h(phi[x], phi[y])) return false;
    }
  }
  return true;
}

IsoVerdict brute_force_isomorphic(const CayleyTable& g, const CayleyTable& h,
                                  const SearchConfig& cfg) {
  IsoVerdict out;
  if (g.order() != h.order()) {
    out.result = IsoResult::not_isomorphic;
    out.rejected_by = "order";
    return out;
  }
  const std::size_t n = g.order();
  if (n > cfg.brute_iso_max_n) {
    throw InputError("brute-force isomorphism is limited to " +
                     std::to_string(cfg.brute_iso_max_n) + " elements");
  }
  std::vector<Element> phi(n);
  std::iota(phi.begin(), phi.end(), Element{0});
  do {
    ++out.candidates_examined;
    if (is_isomorphism(g, h, phi)) {
      out.result = IsoResult::isomorphic;
      out.bijection = phi;
      return out;
    }
  } while (std::next_permutation(phi.begin(), phi.end()));
  out.result = IsoResult::not_isomorphic;
  return out;
}

IsoVerdict quasigroup_isomorphic(const CayleyTable& g, const CayleyTable& h, const IsoOptions& opts,
                                 const SearchConfig& cfg) {
  require_latin(g);
  require_latin(h);
  if (opts.mode == IsoMode::brute) return brute_force_isomorphic(g, h, cfg);

  IsoVerdict out;
  if (auto why = invariant_mismatch(g, h)) {
    out.result = IsoResult::not_isomorphic;
    out.rejected_by = std::move(why);
    return out;
  }
  const std::size_t n = g.order();

  // One cube generating sequence of G; the shortest when that is affordable.
  std::optional<CubeWitness> gw;
  if (n <= cfg.cube_rank_exhaustive_max_n) {
    CubeRankOptions ro;
    ro.max_len = std::min(n + 1, cfg.iso_max_k + 1);
    ro.tries = opts.g_tries;
    ro.seed = opts.seed;
    const RankReport rep = quasigroup_cube_rank(g, ro, cfg);
    if (const CubeWitness* w = rep.cube_witness()) gw = *w;
  } else {
    for (std::size_t len = 1 + ceil_log2(n); len <= cfg.iso_max_k + 1 && !gw; ++len) {
      gw = find_cube_generating_sequence(g, len, opts.g_tries, opts.seed, cfg);
    }
  }
  if (!gw) {
    if (1 + ceil_log2(n) > cfg.iso_max_k + 1) {
      throw BudgetError("cube sequences of G need more than " + std::to_string(cfg.iso_max_k) +
                        " optional positions");
    }
    return out;
  }
  const std::size_t length = gw->sequence.size();
  const Parenthesization& tree = gw->tree;
  const std::vector<Element> pg = cube_values(g, gw->sequence, tree, cfg.iso_max_k);

  const std::uint64_t budget = opts.budget ? opts.budget : cfg.max_candidates;
  const std::optional<std::uint64_t> space = checked_power(n, length);
  const bool exhaustive = space && *space <= budget;
  const std::uint64_t count = exhaustive ? *space : budget;

  struct Candidate {
    ElementSequence h;
    std::vector<Element> phi;
  };
  auto hit = find_first<Candidate>(count, cfg.threads, [&](std::uint64_t i) -> std::optional<Candidate> {
    ElementSequence seq;
    if (exhaustive) {
      seq = sequence_at(i, n, length);
    } else {
      Rng rng(derive_seed(opts.seed, i));
      seq.resize(length);
      for (auto& x : seq) x = static_cast<Element>(uniform_below(rng, n));
    }
    const std::vector<Element> ph = cube_values(h, seq, tree, cfg.iso_max_k);
    auto phi = induced_map(n, pg, ph);
    if (!phi || !is_isomorphism(g, h, *phi)) return std::nullopt;
    if (!triple_condition(g, h, pg, ph)) return std::nullopt;
    return Candidate{std::move(seq), std::move(*phi)};
  });

  if (!hit) {
    out.candidates_examined = count;
    out.result = exhaustive ? IsoResult::not_isomorphic : IsoResult::exhausted;
    return out;
  }
  out.candidates_examined = hit->first + 1;
  // The induced map covers H because it is a bijection, so both cubes are full.
  if (!cube_set(h, hit->second.h, tree, cfg.iso_max_k).is_full() ||
      !is_isomorphism(g, h, hit->second.phi)) {
    throw std::logic_error("cube-mode isomorphism failed re-verification");
  }
  out.result = IsoResult::isomorphic;
  out.bijection = std::move(hit->second.phi);
  out.certificate = IsoCertificate{gw->sequence, std::move(hit->second.h), tree};
  return out;
}

}  // namespace cayley
