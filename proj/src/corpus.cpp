#include "cayley/corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cayley/search.hpp"

namespace cayley {

namespace {

template <class Op>
CayleyTable make_table(std::size_t n, Op&& op) {
  if (n == 0) throw InputError("structure order must be positive");
  std::vector<Element> entries(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) entries[x * n + y] = static_cast<Element>(op(x, y));
  }
  return CayleyTable(n, std::move(entries));
}

// Augmenting-path matching of column c to an unused symbol.
bool augment(std::size_t c, const std::vector<std::vector<Element>>& options,
             std::vector<std::int64_t>& owner, std::vector<bool>& visited) {
  for (Element s : options[c]) {
    if (visited[s]) continue;
    visited[s] = true;
    if (owner[s] < 0 || augment(static_cast<std::size_t>(owner[s]), options, owner, visited)) {
      owner[s] = static_cast<std::int64_t>(c);
      return true;
    }
  }
  return false;
}

}  // namespace

CayleyTable gen_cyclic(std::size_t n) {
  return make_table(n, [n](std::size_t x, std::size_t y) { return (x + y) % n; });
}

CayleyTable gen_elementary_abelian(std::size_t k) {
  if (k > 20) throw InputError("elementary abelian rank too large");
  return make_table(std::size_t{1} << k, [](std::size_t x, std::size_t y) { return x ^ y; });
}

CayleyTable gen_right_zero(std::size_t n) {
  return make_table(n, [](std::size_t, std::size_t y) { return y; });
}

CayleyTable gen_quasigroup3() {
  return CayleyTable::from_rows({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}});
}

CayleyTable gen_direct_product(const CayleyTable& t1, const CayleyTable& t2) {
  const std::size_t m = t2.order();
  return make_table(t1.order() * m, [&](std::size_t x, std::size_t y) {
    return t1(static_cast<Element>(x / m), static_cast<Element>(y / m)) * m +
           t2(static_cast<Element>(x % m), static_cast<Element>(y % m));
  });
}

CayleyTable gen_dihedral(std::size_t m) {
  if (m == 0) throw InputError("dihedral parameter must be positive");
  // r^i r^j = r^(i+j), r^i s r^j = s r^(j-i), s r^i r^j = s r^(i+j),
  // s r^i s r^j = r^(j-i).
  return make_table(2 * m, [m](std::size_t x, std::size_t y) {
    const bool xs = x >= m;
    const bool ys = y >= m;
    const std::size_t i = x % m;
    const std::size_t j = y % m;
    const std::size_t sum = (i + j) % m;
    const std::size_t diff = (j + m - i) % m;
    if (!xs && !ys) return sum;
    if (!xs && ys) return m + diff;
    if (xs && !ys) return m + sum;
    return diff;
  });
}

CayleyTable gen_subtraction_quasigroup(std::size_t n) {
  return make_table(n, [n](std::size_t x, std::size_t y) { return (x + n - y) % n; });
}

CayleyTable gen_multiplicative_monoid(std::size_t n) {
  return make_table(n, [n](std::size_t x, std::size_t y) { return (x * y) % n; });
}

CayleyTable gen_max_semilattice(std::size_t n) {
  return make_table(n, [](std::size_t x, std::size_t y) { return std::max(x, y); });
}

CayleyTable gen_random_latin_square(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("structure order must be positive");
  Rng rng(derive_seed(seed, 0));
  std::vector<Element> entries(n * n);
  // used[c][s]: symbol s already appears in column c.
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::vector<Element> symbols(n);
  std::iota(symbols.begin(), symbols.end(), Element{0});
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::vector<Element>> options(n);
    for (std::size_t c = 0; c < n; ++c) {
      for (Element s : symbols) {
        if (!used[c][s]) options[c].push_back(s);
      }
      portable_shuffle(options[c], rng);
    }
    std::vector<std::size_t> columns(n);
    std::iota(columns.begin(), columns.end(), std::size_t{0});
    portable_shuffle(columns, rng);
    std::vector<std::int64_t> owner(n, -1);
    for (std::size_t c : columns) {
      std::vector<bool> visited(n, false);
      if (!augment(c, options, owner, visited)) {
        throw std::logic_error("Latin rectangle could not be extended");
      }
    }
    for (Element s = 0; s < n; ++s) {
      const auto c = static_cast<std::size_t>(owner[s]);
      entries[r * n + c] = s;
      used[c][s] = true;
    }
  }
  return CayleyTable(n, std::move(entries));
}

std::vector<Element> shuffle_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  Rng rng(derive_seed(seed, 1));
  portable_shuffle(perm, rng);
  return perm;
}

CayleyTable gen_shuffled(const CayleyTable& t, std::uint64_t seed) {
  const std::size_t n = t.order();
  const auto perm = shuffle_permutation(n, seed);
  std::vector<Element> entries(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) entries[perm[x] * n + perm[y]] = perm[t(x, y)];
  }
  return CayleyTable(n, std::move(entries));
}

RingTable gen_ring_modular(std::size_t n) {
  return validate_ring(gen_cyclic(n), gen_multiplicative_monoid(n));
}

RingTable gen_ring_boolean_cube(std::size_t k) {
  if (k > 12) throw InputError("boolean cube dimension too large");
  return validate_ring(gen_elementary_abelian(k),
                       make_table(std::size_t{1} << k,
                                  [](std::size_t x, std::size_t y) { return x & y; }));
}

RingTable gen_ring_gf4() {
  // (a + b x)(c + d x) = ac + bd + (ad + bc + bd) x, using x^2 = x + 1.
  auto mul = make_table(4, [](std::size_t u, std::size_t v) {
    const std::size_t a = u & 1, b = u >> 1, c = v & 1, d = v >> 1;
    const std::size_t lo = (a * c + b * d) & 1;
    const std::size_t hi = (a * d + b * c + b * d) & 1;
    return lo | (hi << 1);
  });
  return validate_ring(gen_elementary_abelian(2), std::move(mul));
}

RingTable gen_ring_dual(std::size_t p) {
  if (p == 0) throw InputError("ring parameter must be positive");
  auto add = make_table(p * p, [p](std::size_t u, std::size_t v) {
    return (u % p + v % p) % p + p * ((u / p + v / p) % p);
  });
  auto mul = make_table(p * p, [p](std::size_t u, std::size_t v) {
    const std::size_t a = u % p, b = u / p, c = v % p, d = v / p;
    return (a * c) % p + p * ((a * d + b * c) % p);
  });
  return validate_ring(std::move(add), std::move(mul));
}

RingTable gen_ring_direct_product(const RingTable& r1, const RingTable& r2) {
  return validate_ring(gen_direct_product(r1.add(), r2.add()),
                       gen_direct_product(r1.mul(), r2.mul()));
}

std::vector<NamedTable> corpus_groups(std::size_t max_n) {
  std::vector<NamedTable> out;
  auto add = [&](std::string name, std::function<CayleyTable()> make, std::size_t order) {
    if (order <= max_n) out.push_back({std::move(name), make()});
  };
  for (std::size_t n = 1; n <= 16; ++n) {
    add("Z" + std::to_string(n), [n] { return gen_cyclic(n); }, n);
  }
  for (std::size_t k = 2; k <= 4; ++k) {
    add("Z2^" + std::to_string(k), [k] { return gen_elementary_abelian(k); }, std::size_t{1} << k);
  }
  const std::vector<std::vector<std::size_t>> products = {
      {2, 4}, {3, 3}, {2, 6}, {2, 2, 3}, {2, 8}, {4, 4}, {2, 2, 4}};
  for (const auto& factors : products) {
    std::size_t order = 1;
    std::string name;
    for (std::size_t f : factors) {
      order *= f;
      name += (name.empty() ? "Z" : "xZ") + std::to_string(f);
    }
    add(name,
        [&factors] {
          CayleyTable t = gen_cyclic(factors[0]);
          for (std::size_t i = 1; i < factors.size(); ++i) t = gen_direct_product(t, gen_cyclic(factors[i]));
          return t;
        },
        order);
  }
  for (std::size_t m = 3; m <= 8; ++m) {
    add("D" + std::to_string(m), [m] { return gen_dihedral(m); }, 2 * m);
  }
  add("shuffled-Z6", [] { return gen_shuffled(gen_cyclic(6), 1); }, 6);
  add("shuffled-Z2^3", [] { return gen_shuffled(gen_elementary_abelian(3), 2); }, 8);
  add("shuffled-D4", [] { return gen_shuffled(gen_dihedral(4), 3); }, 8);
  add("shuffled-Z12", [] { return gen_shuffled(gen_cyclic(12), 4); }, 12);
  add("shuffled-Z4xZ4",
      [] { return gen_shuffled(gen_direct_product(gen_cyclic(4), gen_cyclic(4)), 5); }, 16);
  return out;
}

std::vector<NamedTable> corpus_structures(std::size_t max_n) {
  std::vector<NamedTable> out = corpus_groups(max_n);
  for (std::size_t n = 1; n <= std::min<std::size_t>(8, max_n); ++n) {
    out.push_back({"right-zero-" + std::to_string(n), gen_right_zero(n)});
  }
  for (std::size_t n = 2; n <= max_n; ++n) {
    out.push_back({"mul-Z" + std::to_string(n), gen_multiplicative_monoid(n)});
  }
  for (std::size_t n = 2; n <= std::min<std::size_t>(6, max_n); ++n) {
    out.push_back({"max-" + std::to_string(n), gen_max_semilattice(n)});
  }
  if (max_n >= 3) out.push_back({"quasigroup3", gen_quasigroup3()});
  for (std::size_t n = 3; n <= max_n; ++n) {
    out.push_back({"sub-Z" + std::to_string(n), gen_subtraction_quasigroup(n)});
  }
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (std::uint64_t seed : {1, 2}) {
      out.push_back({"latin-" + std::to_string(n) + "-s" + std::to_string(seed),
                     gen_random_latin_square(n, seed)});
    }
  }
  return out;
}

std::vector<NamedTable> corpus_quasigroups(std::size_t max_n) {
  std::vector<NamedTable> out;
  for (auto& g : corpus_groups(max_n)) out.push_back(std::move(g));
  if (max_n >= 3) {
    out.push_back({"quasigroup3", gen_quasigroup3()});
    out.push_back({"shuffled-quasigroup3", gen_shuffled(gen_quasigroup3(), 7)});
  }
  for (std::size_t n = 3; n <= max_n; ++n) {
    out.push_back({"sub-Z" + std::to_string(n), gen_subtraction_quasigroup(n)});
  }
  for (std::size_t n = 4; n <= max_n; ++n) {
    out.push_back({"latin-" + std::to_string(n) + "-s1", gen_random_latin_square(n, 1)});
  }
  return out;
}

std::vector<NamedPair> corpus_iso_pairs() {
  std::vector<NamedPair> out;
  auto pair = [&](std::string name, CayleyTable g, CayleyTable h) {
    out.push_back({std::move(name), std::move(g), std::move(h)});
  };
  const auto z4 = gen_cyclic(4);
  const auto z2z2 = gen_elementary_abelian(2);
  const auto q3 = gen_quasigroup3();
  pair("Z1 vs Z1", gen_cyclic(1), gen_cyclic(1));
  pair("Z3 vs Z3", gen_cyclic(3), gen_cyclic(3));
  pair("Z2 vs shuffled", gen_cyclic(2), gen_shuffled(gen_cyclic(2), 1));
  pair("Z4 vs Z2xZ2", z4, z2z2);
  pair("Z4 vs shuffled", z4, gen_shuffled(z4, 2));
  pair("Z2xZ2 vs shuffled", z2z2, gen_shuffled(z2z2, 3));
  pair("Z5 shuffled twice", gen_shuffled(gen_cyclic(5), 4), gen_shuffled(gen_cyclic(5), 5));
  pair("Z6 vs D3", gen_cyclic(6), gen_dihedral(3));
  pair("Z6 vs shuffled", gen_cyclic(6), gen_shuffled(gen_cyclic(6), 6));
  pair("D3 vs shuffled", gen_dihedral(3), gen_shuffled(gen_dihedral(3), 7));
  pair("quasigroup3 vs Z3", q3, gen_cyclic(3));
  pair("quasigroup3 vs shuffled", q3, gen_shuffled(q3, 8));
  pair("sub-Z4 vs shuffled", gen_subtraction_quasigroup(4),
       gen_shuffled(gen_subtraction_quasigroup(4), 9));
  pair("sub-Z5 vs shuffled", gen_subtraction_quasigroup(5),
       gen_shuffled(gen_subtraction_quasigroup(5), 10));
  pair("sub-Z5 vs Z5", gen_subtraction_quasigroup(5), gen_cyclic(5));
  pair("sub-Z6 vs Z6", gen_subtraction_quasigroup(6), gen_cyclic(6));
  pair("latin-4-s1 vs Z4", gen_random_latin_square(4, 1), z4);
  pair("latin-4-s1 vs latin-4-s3", gen_random_latin_square(4, 1), gen_random_latin_square(4, 3));
  pair("latin-5-s1 vs shuffled", gen_random_latin_square(5, 1),
       gen_shuffled(gen_random_latin_square(5, 1), 11));
  pair("latin-5-s1 vs latin-5-s2", gen_random_latin_square(5, 1), gen_random_latin_square(5, 2));
  pair("latin-6-s1 vs shuffled", gen_random_latin_square(6, 1),
       gen_shuffled(gen_random_latin_square(6, 1), 12));
  pair("latin-6-s1 vs latin-6-s2", gen_random_latin_square(6, 1), gen_random_latin_square(6, 2));
  return out;
}

std::vector<NamedRing> corpus_rings(std::size_t max_n) {
  std::vector<NamedRing> out;
  auto add = [&](std::string name, std::function<RingTable()> make, std::size_t order) {
    if (order <= max_n) out.push_back({std::move(name), make()});
  };
  for (std::size_t n = 1; n <= 16; ++n) {
    add("Z" + std::to_string(n), [n] { return gen_ring_modular(n); }, n);
  }
  for (std::size_t k = 2; k <= 4; ++k) {
    add("F2^" + std::to_string(k), [k] { return gen_ring_boolean_cube(k); }, std::size_t{1} << k);
  }
  add("GF4", [] { return gen_ring_gf4(); }, 4);
  add("Z2[x]/x^2", [] { return gen_ring_dual(2); }, 4);
  add("Z3[x]/x^2", [] { return gen_ring_dual(3); }, 9);
  add("Z2xZ4", [] { return gen_ring_direct_product(gen_ring_modular(2), gen_ring_modular(4)); }, 8);
  add("Z2xGF4", [] { return gen_ring_direct_product(gen_ring_modular(2), gen_ring_gf4()); }, 8);
  add("Z3xZ4", [] { return gen_ring_direct_product(gen_ring_modular(3), gen_ring_modular(4)); }, 12);
  add("Z4xZ4", [] { return gen_ring_direct_product(gen_ring_modular(4), gen_ring_modular(4)); }, 16);
  add("GF4xGF4", [] { return gen_ring_direct_product(gen_ring_gf4(), gen_ring_gf4()); }, 16);
  return out;
}

std::vector<std::string> family_names() {
  return {"cyclic",         "elementary-abelian", "right-zero",   "quasigroup3",
          "dihedral",       "subtraction",        "multiplicative", "semilattice",
          "latin",          "ring-modular",       "ring-boolean", "ring-gf4",
          "ring-dual"};
}

bool is_ring_family(const std::string& family) { return family.rfind("ring-", 0) == 0; }

CayleyTable generate_table(const std::string& family, std::size_t param, std::uint64_t seed) {
  if (family == "cyclic") return gen_cyclic(param);
  if (family == "elementary-abelian") return gen_elementary_abelian(param);
  if (family == "right-zero") return gen_right_zero(param);
  if (family == "quasigroup3") return gen_quasigroup3();
  if (family == "dihedral") return gen_dihedral(param);
  if (family == "subtraction") return gen_subtraction_quasigroup(param);
  if (family == "multiplicative") return gen_multiplicative_monoid(param);
  if (family == "semilattice") return gen_max_semilattice(param);
  if (family == "latin") return gen_random_latin_square(param, seed);
  throw InputError("unknown table family: " + family);
}

RingTable generate_ring(const std::string& family, std::size_t param) {
  if (family == "ring-modular") return gen_ring_modular(param);
  if (family == "ring-boolean") return gen_ring_boolean_cube(param);
  if (family == "ring-gf4") return gen_ring_gf4();
  if (family == "ring-dual") return gen_ring_dual(param);
  throw InputError("unknown ring family: " + family);
}

}  // namespace cayley
