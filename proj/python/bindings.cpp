#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cayley/corpus.hpp"
#include "cayley/io.hpp"
#include "cayley/isomorphism.hpp"
#include "cayley/membership.hpp"
#include "cayley/rank.hpp"
#include "cayley/rank_variants.hpp"
#include "cayley/structure.hpp"

namespace py = pybind11;
using namespace cayley;

namespace {

using Rows = std::vector<std::vector<Element>>;

Rows rows_of(const CayleyTable& t) {
  Rows rows;
  for (Element x = 0; x < t.order(); ++x) {
    const auto r = t.row(x);
    rows.emplace_back(r.begin(), r.end());
  }
  return rows;
}

ElementSet set_of(std::size_t n, const std::vector<Element>& xs) {
  return ElementSet(n, std::span<const Element>(xs));
}

py::dict kind_dict(const CayleyTable& t) {
  const StructureKind k = classify(t);
  py::dict d;
  d["order"] = t.order();
  d["kind"] = std::string(to_string(k.kind));
  d["associative"] = k.is_associative;
  d["latin_square"] = k.is_latin_square;
  d["commutative"] = k.is_commutative;
  d["left_identities"] = k.left_identities;
  d["right_identities"] = k.right_identities;
  d["identity"] = k.identity ? py::cast(*k.identity) : py::none();
  d["inverses"] = k.has_inverses;
  return d;
}

py::dict report_dict(const RankReport& r) {
  py::dict d;
  d["rank"] = r.rank;
  d["lower_bound"] = r.lower_bound;
  d["exact"] = r.exact;
  d["exhausted"] = r.exhausted;
  d["method"] = std::string(to_string(r.method));
  d["candidates_examined"] = r.candidates_examined;
  if (const ElementSet* s = r.generating_set()) {
    d["witness"] = s->elements();
  } else if (const CubeWitness* c = r.cube_witness()) {
    d["witness"] = c->sequence;
    d["tree"] = c->tree.to_string();
  } else {
    d["witness"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ranks, membership and isomorphism for finite algebraic structures";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<RingAxiomError>(m, "RingAxiomError", m.attr("InputError"));
  // Registered last, so it runs first and attaches the failed axiom's name.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const RingAxiomError& e) {
      py::object type = py::module_::import("cayleyrank._core").attr("RingAxiomError");
      py::object err = type(e.what());
      err.attr("axiom") = e.axiom();
      PyErr_SetObject(type.ptr(), err.ptr());
    }
  });

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init([] { return SearchConfig::from_environment(); }))
      .def_readwrite("threads", &SearchConfig::threads)
      .def_readwrite("max_candidates", &SearchConfig::max_candidates)
      .def_readwrite("cube_max_k", &SearchConfig::cube_max_k)
      .def_readwrite("magma_exhaustive_max_n", &SearchConfig::magma_exhaustive_max_n)
      .def_readwrite("magma_max_subset", &SearchConfig::magma_max_subset)
      .def_readwrite("variants_max_n", &SearchConfig::variants_max_n)
      .def_readwrite("iso_max_k", &SearchConfig::iso_max_k)
      .def_readwrite("brute_iso_max_n", &SearchConfig::brute_iso_max_n)
      .def_readwrite("cube_rank_exhaustive_max_n", &SearchConfig::cube_rank_exhaustive_max_n);

  py::class_<CayleyTable>(m, "CayleyTable")
      .def(py::init(&CayleyTable::from_rows), py::arg("rows"))
      .def_property_readonly("order", &CayleyTable::order)
      .def("__len__", &CayleyTable::order)
      .def("__call__", &CayleyTable::product, py::arg("x"), py::arg("y"))
      .def("rows", &rows_of)
      .def("__eq__", [](const CayleyTable& a, const CayleyTable& b) { return a == b; })
      .def("__repr__", [](const CayleyTable& t) { return "<CayleyTable order " + std::to_string(t.order()) + ">"; });

  py::class_<RingTable>(m, "RingTable")
      .def(py::init([](const Rows& add, const Rows& mul) {
             return validate_ring(CayleyTable::from_rows(add), CayleyTable::from_rows(mul));
           }),
           py::arg("add"), py::arg("mul"))
      .def_property_readonly("order", &RingTable::order)
      .def_property_readonly("zero", &RingTable::zero)
      .def_property_readonly("one", &RingTable::one)
      .def_property_readonly("add", &RingTable::add)
      .def_property_readonly("mul", &RingTable::mul)
      .def("plus", &RingTable::plus)
      .def("minus", &RingTable::minus)
      .def("times", &RingTable::times);

  m.def("load", [](const std::string& path) -> py::object {
    auto s = load_structure(path);
    if (auto* t = std::get_if<TableFile>(&s)) return py::cast(std::move(t->table));
    return py::cast(std::get<RingTable>(std::move(s)));
  }, py::arg("path"), "Read a table or ring file.");
  m.def("dumps", [](const CayleyTable& t) { return format_table(t); });
  m.def("dumps", [](const RingTable& r) { return format_ring(r); });

  m.def("classify", &kind_dict, py::arg("table"));

  m.def("closure", [](const CayleyTable& t, const std::vector<Element>& gens) {
    return closure(t, set_of(t.order(), gens)).elements();
  }, py::arg("table"), py::arg("gens"));
  m.def("is_member", [](const CayleyTable& t, Element h, const std::vector<Element>& gens) {
    return submagma_membership(t, h, set_of(t.order(), gens));
  }, py::arg("table"), py::arg("target"), py::arg("gens"));
  m.def("subgroup_member", [](const CayleyTable& t, Element h, const std::vector<Element>& gens) {
    return subgroup_membership(t, h, set_of(t.order(), gens));
  }, py::arg("table"), py::arg("target"), py::arg("gens"));
  m.def("cube_member", [](const CayleyTable& t, Element h, const ElementSequence& seq, const std::string& tree) {
    const auto p = tree.empty() ? Parenthesization::balanced(seq.size()) : Parenthesization::parse(tree);
    return cube_membership(t, h, seq, p);
  }, py::arg("table"), py::arg("target"), py::arg("sequence"), py::arg("tree") = "");
  m.def("cube", [](const CayleyTable& t, const ElementSequence& seq, const std::string& tree) {
    const auto p = tree.empty() ? Parenthesization::balanced(seq.size()) : Parenthesization::parse(tree);
    return cube_set(t, seq, p).elements();
  }, py::arg("table"), py::arg("sequence"), py::arg("tree") = "");
  m.def("evaluate", [](const CayleyTable& t, const ElementSequence& seq, const std::string& tree) {
    return eval_parenthesized(t, seq, Parenthesization::parse(tree));
  }, py::arg("table"), py::arg("sequence"), py::arg("tree"));
  m.def("subring_closure", [](const RingTable& r, const std::vector<Element>& gens) {
    return subring_closure(r, set_of(r.order(), gens)).elements();
  }, py::arg("ring"), py::arg("gens"));

  m.def("rank", [](const CayleyTable& t, const SearchConfig& cfg) { return report_dict(lower_rank(t, cfg)); },
        py::arg("table"), py::arg("config") = SearchConfig{});
  m.def("cube_rank", [](const CayleyTable& t, std::uint64_t seed, std::uint64_t tries, std::size_t max_len,
                        const SearchConfig& cfg) {
    CubeRankOptions opts;
    opts.seed = seed;
    opts.tries = tries;
    opts.max_len = max_len;
    return report_dict(quasigroup_cube_rank(t, opts, cfg));
  }, py::arg("table"), py::arg("seed") = 0, py::arg("tries") = 1000, py::arg("max_len") = 0,
     py::arg("config") = SearchConfig{});
  m.def("rank_variant", [](const CayleyTable& t, const std::string& name, const SearchConfig& cfg) -> py::object {
    const auto v = parse_rank_variant(name);
    if (!v) throw InputError("unknown rank variant: " + name);
    const VariantValue r = rank_variant(t, *v, cfg);
    if (r.exhausted) return py::none();
    return py::cast(r.value);
  }, py::arg("table"), py::arg("variant"), py::arg("config") = SearchConfig{});
  m.def("rank_chain", [](const CayleyTable& t, const SearchConfig& cfg) {
    const RankChain c = check_chain(t, cfg);
    py::dict d;
    d["small"] = c.small;
    d["lower"] = c.lower;
    d["intermediate"] = c.intermediate;
    d["upper"] = c.upper;
    d["large"] = c.large;
    d["holds"] = c.holds;
    return d;
  }, py::arg("table"), py::arg("config") = SearchConfig{});
  m.def("ring_rank", [](const RingTable& r, const SearchConfig& cfg) {
    const RingRankSummary s = ring_rank_summary(r, cfg);
    py::dict d;
    d["ring"] = report_dict(s.ring);
    d["additive_group"] = report_dict(s.additive_group);
    d["multiplicative_monoid"] = report_dict(s.multiplicative_monoid);
    return d;
  }, py::arg("ring"), py::arg("config") = SearchConfig{});

  m.def("isomorphic", [](const CayleyTable& g, const CayleyTable& h, const std::string& mode, std::uint64_t seed,
                         const SearchConfig& cfg) {
    const auto parsed = parse_iso_mode(mode);
    if (!parsed) throw InputError("unknown isomorphism mode: " + mode);
    IsoOptions opts;
    opts.mode = *parsed;
    opts.seed = seed;
    const IsoVerdict v = quasigroup_isomorphic(g, h, opts, cfg);
    py::dict d;
    d["result"] = std::string(to_string(v.result));
    d["bijection"] = v.bijection ? py::cast(*v.bijection) : py::none();
    d["rejected_by"] = v.rejected_by ? py::cast(*v.rejected_by) : py::none();
    d["candidates_examined"] = v.candidates_examined;
    return d;
  }, py::arg("g"), py::arg("h"), py::arg("mode") = "cube", py::arg("seed") = 0,
     py::arg("config") = SearchConfig{});

  m.def("generate", [](const std::string& family, std::size_t param, std::uint64_t seed) -> py::object {
    if (is_ring_family(family)) return py::cast(generate_ring(family, param));
    return py::cast(generate_table(family, param, seed));
  }, py::arg("family"), py::arg("param") = 0, py::arg("seed") = 0);
  m.def("families", &family_names);
}
