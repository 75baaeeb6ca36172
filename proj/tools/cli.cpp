#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "cayley/corpus.hpp"
#include "cayley/io.hpp"
#include "cayley/isomorphism.hpp"
#include "cayley/membership.hpp"
#include "cayley/rank.hpp"
#include "cayley/rank_variants.hpp"
#include "cayley/structure.hpp"

namespace cayley::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  Json doc;
  int code = kDefinitive;
};

// Thrown when a witness fails its own re-check; never expected.
struct VerificationError : std::logic_error {
  using std::logic_error::logic_error;
};

void verified(bool ok, const char* what) {
  if (!ok) throw VerificationError(std::string("witness failed verification: ") + what);
}

Json elements_json(const std::vector<Element>& xs) {
  Json arr = Json::array();
  for (Element x : xs) arr.push_back(x);
  return arr;
}

Json set_json(const ElementSet& s) { return elements_json(s.elements()); }

Json rows_json(const CayleyTable& t) {
  Json rows = Json::array();
  for (Element x = 0; x < t.order(); ++x) {
    const auto row = t.row(x);
    rows.push_back(elements_json(std::vector<Element>(row.begin(), row.end())));
  }
  return rows;
}

Json kind_json(const CayleyTable& t) {
  const StructureKind k = classify(t);
  Json j;
  j["order"] = t.order();
  j["kind"] = std::string(to_string(k.kind));
  j["associative"] = k.is_associative;
  j["latin_square"] = k.is_latin_square;
  j["commutative"] = k.is_commutative;
  j["left_identities"] = elements_json(k.left_identities);
  j["right_identities"] = elements_json(k.right_identities);
  j["identity"] = k.identity ? Json(*k.identity) : Json(nullptr);
  j["inverses"] = k.has_inverses;
  return j;
}

Json report_json(const RankReport& r) {
  Json j;
  j["rank"] = r.rank;
  j["lower_bound"] = r.lower_bound;
  j["exact"] = r.exact;
  j["exhausted"] = r.exhausted;
  j["method"] = std::string(to_string(r.method));
  j["candidates_examined"] = r.candidates_examined;
  if (const ElementSet* s = r.generating_set()) {
    j["witness"] = set_json(*s);
  } else if (const CubeWitness* c = r.cube_witness()) {
    j["witness"] = {{"sequence", elements_json(c->sequence)}, {"tree", c->tree.to_string()}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

std::vector<Element> parse_elements(const std::string& text) {
  std::vector<Element> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::istringstream words(token);
    std::string word;
    while (words >> word) {
      std::size_t used = 0;
      unsigned long value = 0;
      try {
        value = std::stoul(word, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != word.size()) throw InputError("not an element index: \"" + word + "\"");
      out.push_back(static_cast<Element>(value));
    }
  }
  return out;
}

CayleyTable load_plain_table(const std::string& path) {
  auto file = load_structure(path);
  if (auto* t = std::get_if<TableFile>(&file)) return std::move(t->table);
  throw InputError(path + ": expected a table, found a ring");
}

RingTable load_ring_file(const std::string& path) {
  auto file = load_structure(path);
  if (auto* r = std::get_if<RingTable>(&file)) return std::move(*r);
  throw InputError(path + ": expected a ring file (header `ring <n>`)");
}

int code_for(Verdict v) { return v == Verdict::exhausted ? kExhausted : kDefinitive; }

// ---------------------------------------------------------------- classify

Outcome cmd_classify(const std::string& path) {
  Outcome o;
  o.doc["command"] = "classify";
  o.doc["file"] = path;
  auto file = load_structure(path);
  if (auto* t = std::get_if<TableFile>(&file)) {
    o.doc["hint"] = t->hint;
    o.doc["result"] = kind_json(t->table);
  } else {
    const auto& r = std::get<RingTable>(file);
    Json j;
    j["order"] = r.order();
    j["kind"] = "ring";
    j["zero"] = r.zero();
    j["one"] = r.one();
    j["additive"] = kind_json(r.add());
    j["multiplicative"] = kind_json(r.mul());
    o.doc["result"] = j;
  }
  return o;
}

// -------------------------------------------------------------------- rank

struct RankArgs {
  std::string file;
  std::string variant = "lower";
  std::optional<std::size_t> k;
  std::uint64_t seed = 0;
  std::uint64_t tries = 1000;
  std::size_t max_len = 0;
};

Outcome cmd_rank(const RankArgs& a, const SearchConfig& cfg) {
  Outcome o;
  o.doc["command"] = "rank";
  o.doc["file"] = a.file;
  o.doc["variant"] = a.variant;
  const CayleyTable t = load_plain_table(a.file);
  const std::size_t n = t.order();
  if (a.k) o.doc["k"] = *a.k;

  if (a.variant == "cube") {
    o.doc["seed"] = a.seed;
    CubeRankOptions opts;
    opts.seed = a.seed;
    opts.tries = a.tries;
    opts.max_len = a.max_len;
    if (a.k) {
      if (*a.k == 0) {
        o.doc["verdict"] = "no";
        return o;
      }
      opts.max_len = std::min(*a.k, n + 1);
    }
    const RankReport r = quasigroup_cube_rank(t, opts, cfg);
    if (r.cube_witness()) verified(verify_witness(t, r), "cube sequence");
    o.doc["result"] = report_json(r);
    if (a.k) {
      const Verdict v = (r.rank && r.rank <= *a.k) ? Verdict::yes
                        : r.exhausted               ? Verdict::exhausted
                                                    : Verdict::no;
      o.doc["verdict"] = std::string(to_string(v));
      o.code = code_for(v);
    } else {
      o.code = r.exhausted ? kExhausted : kDefinitive;
    }
    return o;
  }

  const auto variant = parse_rank_variant(a.variant);
  if (!variant) throw InputError("unknown rank variant: " + a.variant);

  if (*variant == RankVariant::lower) {
    if (a.k) {
      const RankDecision d = rank_decision(t, *a.k, cfg);
      if (d.witness) verified(closure(t, *d.witness).is_full() && d.witness->size() <= *a.k, "generating set");
      o.doc["verdict"] = std::string(to_string(d.verdict));
      o.doc["witness"] = d.witness ? set_json(*d.witness) : Json(nullptr);
      o.doc["candidates_examined"] = d.candidates_examined;
      o.code = code_for(d.verdict);
      return o;
    }
    const RankReport r = lower_rank(t, cfg);
    verified(verify_witness(t, r), "generating set");
    o.doc["result"] = report_json(r);
    o.code = r.exhausted ? kExhausted : kDefinitive;
    return o;
  }

  if (a.k) throw InputError("--k applies to the lower and cube variants");
  const VariantValue v = rank_variant(t, *variant, cfg);
  Json j;
  j["value"] = v.exhausted ? Json(nullptr) : Json(v.value);
  j["exhausted"] = v.exhausted;
  j["low"] = v.low;
  j["high"] = v.high;
  o.doc["result"] = j;
  o.code = v.exhausted ? kExhausted : kDefinitive;
  return o;
}

// ------------------------------------------------------------------ member

struct MemberArgs {
  std::string file;
  Element target = 0;
  std::string gens;
  std::string algo = "closure";
  std::string tree;
  std::size_t k = 0;
  std::size_t d = 0;
};

Outcome cmd_member(const MemberArgs& a, const SearchConfig& cfg) {
  Outcome o;
  o.doc["command"] = "member";
  o.doc["file"] = a.file;
  o.doc["algo"] = a.algo;
  o.doc["target"] = a.target;
  const std::vector<Element> gens = parse_elements(a.gens);
  o.doc["gens"] = elements_json(gens);

  auto answer = [&](bool yes) {
    o.doc["verdict"] = yes ? "yes" : "no";
    o.doc["member"] = yes;
  };

  auto file = load_structure(a.file);
  if (auto* ring = std::get_if<RingTable>(&file)) {
    const ElementSet s(ring->order(), std::span<const Element>(gens));
    if (a.algo == "closure") {
      answer(subring_membership(*ring, a.target, s));
    } else if (a.algo == "graph") {
      answer(subring_membership_graph(*ring, a.target, s));
    } else {
      throw InputError("algorithm " + a.algo + " does not apply to rings (use closure or graph)");
    }
    return o;
  }

  const CayleyTable& t = std::get<TableFile>(file).table;
  const std::size_t n = t.order();
  if (a.algo == "cube") {
    if (gens.empty()) throw InputError("cube membership needs a nonempty --gens sequence");
    const Parenthesization p =
        a.tree.empty() ? Parenthesization::balanced(gens.size()) : Parenthesization::parse(a.tree);
    o.doc["tree"] = p.to_string();
    answer(cube_membership(t, a.target, gens, p, cfg.cube_max_k));
    return o;
  }
  const ElementSet s(n, std::span<const Element>(gens));
  if (a.algo == "closure") {
    answer(submagma_membership(t, a.target, s));
  } else if (a.algo == "semigroup") {
    answer(subsemigroup_membership(t, a.target, s));
  } else if (a.algo == "group") {
    answer(subgroup_membership(t, a.target, s));
  } else if (a.algo == "via-rank") {
    try {
      answer(membership_via_rank(t, a.target, s, cfg));
    } catch (const BudgetError& e) {
      o.doc["verdict"] = "exhausted";
      o.doc["member"] = nullptr;
      o.doc["reason"] = e.what();
      o.code = kExhausted;
    }
  } else if (a.algo == "bounded") {
    const std::size_t k = a.k ? a.k : n;
    const std::size_t d = a.d ? a.d : k;
    o.doc["k"] = k;
    o.doc["d"] = d;
    const BoundedMembership r = bounded_subquasigroup_membership(t, a.target, s, k, d);
    o.doc["verdict"] = std::string(to_string(r.verdict));
    o.doc["member"] = r.verdict == Verdict::yes;
    if (r.sequence) {
      verified(eval_parenthesized(t, *r.sequence, *r.tree) == a.target &&
                   r.sequence->size() <= k && r.tree->depth() <= d,
               "bounded product");
      o.doc["witness"] = {{"sequence", elements_json(*r.sequence)}, {"tree", r.tree->to_string()}};
    }
  } else if (a.algo == "graph") {
    throw InputError("graph membership needs a ring file");
  } else {
    throw InputError("unknown membership algorithm: " + a.algo);
  }
  return o;
}

// --------------------------------------------------------------- ring-rank

Outcome cmd_ring_rank(const std::string& path, const SearchConfig& cfg) {
  Outcome o;
  o.doc["command"] = "ring-rank";
  o.doc["file"] = path;
  const RingTable r = load_ring_file(path);
  const RingRankSummary s = ring_rank_summary(r, cfg);
  verified(verify_ring_witness(r, s.ring), "ring generating set");
  verified(verify_witness(r.add(), s.additive_group), "additive generating set");
  verified(verify_witness(r.mul(), s.multiplicative_monoid), "multiplicative generating set");
  o.doc["ring"] = report_json(s.ring);
  o.doc["additive_group"] = report_json(s.additive_group);
  o.doc["multiplicative_monoid"] = report_json(s.multiplicative_monoid);
  const bool exhausted =
      s.ring.exhausted || s.additive_group.exhausted || s.multiplicative_monoid.exhausted;
  o.code = exhausted ? kExhausted : kDefinitive;
  return o;
}

// --------------------------------------------------------------------- iso

struct IsoArgs {
  std::string g;
  std::string h;
  std::string mode = "cube";
  std::uint64_t seed = 0;
  std::uint64_t tries = 1000;
};

Outcome cmd_iso(const IsoArgs& a, std::optional<std::uint64_t> budget, const SearchConfig& cfg) {
  Outcome o;
  o.doc["command"] = "iso";
  o.doc["g"] = a.g;
  o.doc["h"] = a.h;
  o.doc["mode"] = a.mode;
  o.doc["seed"] = a.seed;
  const auto mode = parse_iso_mode(a.mode);
  if (!mode) throw InputError("unknown isomorphism mode: " + a.mode);
  const CayleyTable g = load_plain_table(a.g);
  const CayleyTable h = load_plain_table(a.h);
  IsoOptions opts;
  opts.mode = *mode;
  opts.seed = a.seed;
  opts.g_tries = a.tries;
  opts.budget = budget.value_or(0);
  const IsoVerdict v = quasigroup_isomorphic(g, h, opts, cfg);
  if (v.bijection) verified(is_isomorphism(g, h, *v.bijection), "bijection");
  o.doc["result"] = std::string(to_string(v.result));
  o.doc["rejected_by"] = v.rejected_by ? Json(*v.rejected_by) : Json(nullptr);
  o.doc["bijection"] = v.bijection ? elements_json(*v.bijection) : Json(nullptr);
  if (v.certificate) {
    o.doc["certificate"] = {{"g", elements_json(v.certificate->g)},
                            {"h", elements_json(v.certificate->h)},
                            {"tree", v.certificate->tree.to_string()}};
  } else {
    o.doc["certificate"] = nullptr;
  }
  o.doc["candidates_examined"] = v.candidates_examined;
  o.code = v.result == IsoResult::exhausted ? kExhausted : kDefinitive;
  return o;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::string family;
  std::size_t param = 0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> shuffle;
  std::string out;
};

Outcome cmd_generate(const GenerateArgs& a) {
  Outcome o;
  o.doc["command"] = "generate";
  o.doc["family"] = a.family;
  o.doc["param"] = a.param;
  o.doc["seed"] = a.seed;
  std::ostringstream text;
  if (is_ring_family(a.family)) {
    const RingTable r = generate_ring(a.family, a.param);
    write_ring(text, r);
    o.doc["order"] = r.order();
    o.doc["add"] = rows_json(r.add());
    o.doc["mul"] = rows_json(r.mul());
  } else {
    CayleyTable t = generate_table(a.family, a.param, a.seed);
    if (a.shuffle) {
      t = gen_shuffled(t, *a.shuffle);
      o.doc["shuffle"] = *a.shuffle;
    }
    write_table(text, t);
    o.doc["order"] = t.order();
    o.doc["kind"] = std::string(to_string(classify(t).kind));
    o.doc["table"] = rows_json(t);
  }
  if (!a.out.empty()) {
    std::ofstream file(a.out, std::ios::binary);
    if (!file) throw InputError("cannot write " + a.out);
    file << text.str();
    if (!file) throw InputError("failed writing " + a.out);
    o.doc["out"] = a.out;
  }
  return o;
}

// -------------------------------------------------------------- experiment

struct ExperimentArgs {
  std::string name;
  std::size_t max_n = 0;
  std::string sizes = "8,16,32";
  double c = 4.0;
  std::size_t instances = 40;
  std::uint64_t tries = 1000;
  std::uint64_t seed = 0;
  std::size_t max_gens = 2;
};

Json chain_experiment(std::size_t max_n, const SearchConfig& cfg) {
  Json rows = Json::array();
  std::size_t violations = 0;
  const auto structures = corpus_structures(max_n);
  for (const auto& [name, t] : structures) {
    const RankChain c = check_chain(t, cfg);
    if (!c.holds) ++violations;
    rows.push_back({{"name", name},
                    {"order", t.order()},
                    {"small", c.small},
                    {"lower", c.lower},
                    {"intermediate", c.intermediate},
                    {"upper", c.upper},
                    {"large", c.large},
                    {"holds", c.holds}});
  }
  return {{"structures", structures.size()}, {"violations", violations}, {"rows", rows}};
}

std::size_t sequence_length(double c, std::size_t n) {
  // Tolerance keeps exact products such as 4 * log2(8) = 12 from rounding up.
  const double raw = c * std::log2(static_cast<double>(n));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(raw - 1e-9)));
}

Json cube_sweep_experiment(const ExperimentArgs& a, const SearchConfig& cfg) {
  Json rows = Json::array();
  for (Element n : parse_elements(a.sizes)) {
    if (n == 0) throw InputError("orders must be positive");
    const std::size_t length = sequence_length(a.c, n);
    std::size_t successes = 0;
    for (std::size_t i = 0; i < a.instances; ++i) {
      const std::uint64_t stream = (std::uint64_t{n} << 32) | i;
      const CayleyTable t = gen_random_latin_square(n, derive_seed(a.seed, stream));
      const auto found =
          find_cube_generating_sequence(t, length, a.tries, derive_seed(a.seed ^ 0x5eedULL, stream), cfg);
      if (found) {
        verified(cube_set(t, found->sequence, found->tree, length).is_full(), "cube sequence");
        ++successes;
      }
    }
    rows.push_back({{"n", n},
                    {"length", length},
                    {"instances", a.instances},
                    {"successes", successes},
                    {"success_rate", a.instances ? double(successes) / double(a.instances) : 0.0}});
  }
  return {{"c", a.c}, {"tries", a.tries}, {"rows", rows}};
}

Json subring_compare_experiment(std::size_t max_n, std::size_t max_gens) {
  Json rows = Json::array();
  std::uint64_t queries = 0, disagreements = 0;
  for (const auto& [name, r] : corpus_rings(max_n)) {
    const std::size_t n = r.order();
    std::uint64_t q = 0, bad = 0, plain_bad = 0;
    Json examples = Json::array();
    for (std::size_t size = 0; size <= std::min(max_gens, n); ++size) {
      std::vector<std::uint32_t> comb(size);
      for (std::size_t i = 0; i < size; ++i) comb[i] = static_cast<std::uint32_t>(i);
      do {
        ElementSet s(n);
        for (auto x : comb) s.insert(x);
        const ElementSet reach = subring_graph_reachable(r, s);
        const ElementSet unital = unital_subring_closure(r, s);
        const ElementSet plain = subring_closure(r, s);
        for (Element h = 0; h < n; ++h) {
          ++q;
          if (reach.contains(h) != plain.contains(h)) ++plain_bad;
          if (reach.contains(h) == unital.contains(h)) continue;
          ++bad;
          if (examples.size() < 3) {
            examples.push_back({{"gens", set_json(s)},
                                {"target", h},
                                {"graph", reach.contains(h)},
                                {"closure_with_one", unital.contains(h)}});
          }
        }
      } while (size > 0 && next_combination(comb, static_cast<std::uint32_t>(n)));
    }
    queries += q;
    disagreements += bad;
    rows.push_back({{"name", name},
                    {"order", n},
                    {"queries", q},
                    {"disagreements", bad},
                    {"disagreements_with_plain_closure", plain_bad},
                    {"examples", examples}});
  }
  return {{"max_gens", max_gens},
          {"queries", queries},
          {"disagreements", disagreements},
          {"agree", disagreements == 0},
          {"rows", rows}};
}

Json cube_gap_experiment(std::size_t max_n, const SearchConfig& cfg) {
  Json rows = Json::array();
  std::size_t gaps = 0;
  for (const auto& [name, t] : corpus_quasigroups(max_n)) {
    const RankReport lower = lower_rank(t, cfg);
    const RankReport cube = quasigroup_cube_rank(t, {}, cfg);
    const bool gap = cube.exact && lower.exact && lower.rank < cube.rank;
    if (gap) ++gaps;
    rows.push_back({{"name", name},
                    {"order", t.order()},
                    {"rank", lower.rank},
                    {"cube_rank", cube.rank},
                    {"cube_rank_exact", cube.exact},
                    {"smaller_generating_set", gap}});
  }
  return {{"structures_with_gap", gaps}, {"rows", rows}};
}

Outcome cmd_experiment(const ExperimentArgs& a, const SearchConfig& cfg) {
  Outcome o;
  o.doc["command"] = "experiment";
  o.doc["name"] = a.name;
  o.doc["seed"] = a.seed;
  if (a.name == "chain") {
    o.doc["result"] = chain_experiment(a.max_n ? a.max_n : 10, cfg);
  } else if (a.name == "cube-sweep") {
    o.doc["result"] = cube_sweep_experiment(a, cfg);
  } else if (a.name == "subring-compare") {
    o.doc["result"] = subring_compare_experiment(a.max_n ? a.max_n : 16, a.max_gens);
  } else if (a.name == "cube-gap") {
    o.doc["result"] = cube_gap_experiment(a.max_n ? a.max_n : 6, cfg);
  } else {
    throw InputError("unknown experiment: " + a.name +
                     " (chain, cube-sweep, subring-compare, cube-gap)");
  }
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ranks, membership and isomorphism for finite algebraic structures", "cayleyrank"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads (results do not depend on this)")
      ->check(CLI::Range(1u, 1024u));

  std::optional<std::uint64_t> budget;
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "Candidate budget per search (overrides CAYLEYRANK_BUDGET)");
  };

  std::string classify_file;
  auto* classify_cmd = app.add_subcommand("classify", "Structure flags and kind label");
  classify_cmd->add_option("file", classify_file)->required();

  RankArgs rank;
  auto* rank_cmd = app.add_subcommand("rank", "Rank of a table");
  rank_cmd->add_option("file", rank.file)->required();
  rank_cmd->add_option("--variant", rank.variant, "lower|upper|intermediate|small|large|cube")
      ->check(CLI::IsMember({"lower", "upper", "intermediate", "small", "large", "cube"}));
  rank_cmd->add_option("--k", rank.k, "Decide whether the rank is at most k");
  rank_cmd->add_option("--seed", rank.seed);
  rank_cmd->add_option("--tries", rank.tries, "Random sequences per length (cube variant)");
  rank_cmd->add_option("--max-len", rank.max_len, "Longest cube sequence to try");
  add_budget(rank_cmd);

  MemberArgs member;
  auto* member_cmd = app.add_subcommand("member", "Is the target in the generated substructure?");
  member_cmd->add_option("file", member.file)->required();
  member_cmd->add_option("--target", member.target)->required();
  member_cmd->add_option("--gens", member.gens, "Comma-separated generators (a sequence for cube)");
  member_cmd->add_option("--algo", member.algo, "closure|semigroup|group|cube|graph|via-rank|bounded")
      ->check(CLI::IsMember({"closure", "semigroup", "group", "cube", "graph", "via-rank", "bounded"}));
  member_cmd->add_option("--tree", member.tree, "Parenthesization for cube, e.g. \"(0 (1 2))\"");
  member_cmd->add_option("--k", member.k, "Most leaves (bounded)");
  member_cmd->add_option("--d", member.d, "Most depth (bounded)");
  add_budget(member_cmd);

  std::string ring_file;
  auto* ring_cmd = app.add_subcommand("ring-rank", "Ring rank with additive and multiplicative ranks");
  ring_cmd->add_option("file", ring_file)->required();
  add_budget(ring_cmd);

  IsoArgs iso;
  auto* iso_cmd = app.add_subcommand("iso", "Quasigroup isomorphism");
  iso_cmd->add_option("G", iso.g, "First table")->required();
  iso_cmd->add_option("H", iso.h, "Second table")->required();
  iso_cmd->add_option("--mode", iso.mode, "cube|brute")->check(CLI::IsMember({"cube", "brute"}));
  iso_cmd->add_option("--seed", iso.seed);
  iso_cmd->add_option("--tries", iso.tries, "Random attempts per length for G's sequence");
  add_budget(iso_cmd);

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Write a structure from a named family");
  gen_cmd->add_option("family", gen.family)->required();
  gen_cmd->add_option("param", gen.param, "Order, or dimension for elementary-abelian/ring-boolean");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--shuffle", gen.shuffle, "Relabel elements by a random permutation with this seed");
  gen_cmd->add_option("--out", gen.out, "File to write");

  ExperimentArgs exp;
  auto* exp_cmd = app.add_subcommand("experiment", "chain|cube-sweep|subring-compare|cube-gap");
  exp_cmd->add_option("name", exp.name)->required();
  exp_cmd->add_option("--max-n", exp.max_n, "Largest structure order");
  exp_cmd->add_option("--n", exp.sizes, "Orders for cube-sweep, comma-separated");
  exp_cmd->add_option("--c", exp.c, "Length factor for cube-sweep");
  exp_cmd->add_option("--instances", exp.instances);
  exp_cmd->add_option("--tries", exp.tries);
  exp_cmd->add_option("--seed", exp.seed);
  exp_cmd->add_option("--max-gens", exp.max_gens, "Largest generating set for subring-compare");
  add_budget(exp_cmd);

  std::vector<const char*> argv{"cayleyrank"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kDefinitive;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kDefinitive;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    Json doc{{"error", e.what()}};
    out << doc.dump(2) << "\n";
    return kError;
  }

  SearchConfig cfg;
  Outcome result;
  try {
    cfg = SearchConfig::from_environment();
    cfg.threads = threads;
    if (budget) cfg.max_candidates = *budget;
    if (*classify_cmd) {
      result = cmd_classify(classify_file);
    } else if (*rank_cmd) {
      result = cmd_rank(rank, cfg);
    } else if (*member_cmd) {
      result = cmd_member(member, cfg);
    } else if (*ring_cmd) {
      result = cmd_ring_rank(ring_file, cfg);
    } else if (*iso_cmd) {
      result = cmd_iso(iso, budget, cfg);
    } else if (*gen_cmd) {
      result = cmd_generate(gen);
    } else {
      result = cmd_experiment(exp, cfg);
    }
  } catch (const RingAxiomError& e) {
    Json doc{{"error", e.what()}, {"axiom", e.axiom()}};
    if (e.witness()) doc["witness"] = elements_json({(*e.witness())[0], (*e.witness())[1], (*e.witness())[2]});
    err << "error: " << e.what() << "\n";
    out << doc.dump(2) << "\n";
    return kError;
  } catch (const BudgetError& e) {
    Json doc{{"error", e.what()}, {"exhausted", true}};
    err << "budget: " << e.what() << "\n";
    out << doc.dump(2) << "\n";
    return kExhausted;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    out << Json{{"error", e.what()}}.dump(2) << "\n";
    return kError;
  }
  out << result.doc.dump(2) << "\n";
  return result.code;
}

}  // namespace cayley::cli
