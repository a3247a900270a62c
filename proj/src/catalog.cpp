#include "ybe/catalog.hpp"

#include <algorithm>

#include "ybe/factorization.hpp"

namespace ybe {

namespace {

GroupMap multiply_by(std::size_t n, std::size_t u) {
  GroupMap f;
  for (std::size_t k = 0; k < n; ++k) f.images.push_back(Element(k * u % n));
  return f;
}

std::size_t power_mod(std::size_t b, std::size_t e, std::size_t m) {
  std::size_t r = 1 % m;
  for (b %= m; e; e >>= 1, b = b * b % m) {
    if (e & 1) r = r * b % m;
  }
  return r;
}

std::size_t gcd(std::size_t a, std::size_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::size_t least_primitive_root(std::size_t p) {
  for (std::size_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (std::size_t d = 1; d < p - 1 && primitive; ++d) primitive = power_mod(g, d, p) != 1;
    if (primitive) return g;
  }
  return 1;
}

GroupMap power_map(GroupMap const& a, std::size_t k) {
  GroupMap r = identity_map(a.size());
  for (std::size_t i = 0; i < k; ++i) r = compose(a, r);
  return r;
}

void require(bool ok, std::string const& what) {
  if (!ok) fail(ErrorCode::InvalidArgument, what);
}

std::string join(std::string name, std::vector<std::size_t> const& params) {
  for (auto p : params) name += "-" + std::to_string(p);
  return name;
}

}  // namespace

ExampleInstance trivial_brace_example(std::size_t n, std::size_t kind) {
  require(n >= 1 && n <= kMaxGroupOrder, "order out of range");
  require(kind <= 1, "kind must be 0 (cyclic) or 1 (dihedral)");
  require(kind == 0 || (n % 2 == 0 && n >= 4), "dihedral order must be even and at least 4");
  auto g = kind == 0 ? cyclic_group(n) : dihedral_group(n / 2);
  auto b = trivial_brace(g);
  auto bracoid = brace_as_bracoid(b);
  return ExampleInstance{join("trivial-brace", {n, kind}), std::move(b), std::nullopt,
                         std::nullopt, std::move(bracoid)};
}

ExampleInstance semidirect_example(std::size_t n, std::size_t m) {
  require(n >= 1 && m >= 1 && n * m <= kMaxGroupOrder, "orders out of range");
  std::size_t u = 1;
  for (std::size_t c = 2; c < n; ++c) {
    if (gcd(c, n) == 1 && power_mod(c, m, n) == 1) {
      u = c;
      break;
    }
  }
  auto h = cyclic_group(n);
  auto s = cyclic_group(m);
  std::vector<GroupMap> alpha;
  for (std::size_t k = 0; k < m; ++k) alpha.push_back(multiply_by(n, power_mod(u, k, n)));
  auto b = semidirect_brace(h, s, alpha);
  Subgroup ideal, complement;
  for (Element k = 0; k < m; ++k) ideal.elements.push_back(k);
  for (Element k = 0; k < n; ++k) complement.elements.push_back(Element(k * m));
  auto bracoid = from_strong_left_ideal(b, ideal);
  return ExampleInstance{join("semidirect", {n, m}), std::move(b), std::move(ideal),
                         std::move(complement), std::move(bracoid)};
}

ExampleInstance abelianmap_example(std::size_t p, std::size_t q) {
  require(p != q && p > 2 && q > 2 && is_prime(p) && is_prime(q),
          "p and q must be distinct odd primes");
  require(4 * p * q <= kMaxGroupOrder, "order out of range");
  std::size_t n = p * q;
  auto h = cyclic_group(n);
  auto s = elementary_abelian(2, 2);
  auto inversion = multiply_by(n, n - 1);
  std::vector<GroupMap> alpha{identity_map(n), inversion, inversion, identity_map(n)};
  auto g = semidirect_product(h, s, alpha);
  GroupMap psi;
  for (Element x = 0; x < g.order(); ++x) psi.images.push_back(x % 4);
  auto b = abelian_map_brace(g, psi);
  std::vector<Element> ideal_gens{Element(4 * q), 2};
  std::vector<Element> complement_gens{Element(4 * p), 1};
  auto ideal = subgroup_generated(b.dot(), ideal_gens);
  auto complement = subgroup_generated(b.dot(), complement_gens);
  auto bracoid = from_strong_left_ideal(b, ideal);
  return ExampleInstance{join("abelianmap", {p, q}), std::move(b), std::move(ideal),
                         std::move(complement), std::move(bracoid)};
}

ExampleInstance gl3f2_example(std::uint64_t seed, std::size_t max_attempts) {
  auto hol = holomorph(elementary_abelian(2, 3));
  auto const& g = hol.group;
  std::size_t n = g.order();
  std::vector<Element> candidates;
  for (Element x = 0; x < n; ++x) {
    if (hol.aut_index(x) != 0) candidates.push_back(x);
  }
  std::vector<std::uint64_t> pairs;
  pairs.reserve(candidates.size() * candidates.size() / 2);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      pairs.push_back(std::uint64_t(candidates[i]) * n + candidates[j]);
    }
  }
  Rng rng(seed);
  rng.shuffle(pairs);

  std::size_t limit = std::min(max_attempts, pairs.size());
  for (std::size_t attempt = 0; attempt < limit; ++attempt) {
    Element gens[2] = {Element(pairs[attempt] / n), Element(pairs[attempt] % n)};
    Element base = 0;
    auto closure = closure_with(g, std::span<Element const>(&base, 1), gens, 168);
    if (!closure || closure->size() != 168) continue;
    bool meets_translations = false;
    for (Element x : *closure) meets_translations |= x != 0 && hol.aut_index(x) == 0;
    if (meets_translations) continue;
    Subgroup j{*closure, {gens[0], gens[1]}};
    if (!is_transitive(restrict_action(hol.action, j))) continue;
    auto bracoid = from_holomorph_subgroup(hol, j);
    ExampleInstance out{"gl3f2", std::nullopt, std::nullopt, std::nullopt, std::move(bracoid)};
    out.attempts = attempt + 1;
    return out;
  }
  fail(ErrorCode::SearchExhausted,
       "no transitive GL3(F2) after " + std::to_string(limit) + " attempts; try another seed");
}

ExampleInstance cyclic_pq_example(std::size_t p, std::size_t q) {
  require(is_prime(p) && is_prime(q), "p and q must be prime");
  require(p % (q * q) == 1, "p must be 1 mod q^2");
  std::size_t n = p * q;
  require(n <= kAutomorphismCap, "pq exceeds the automorphism search cap");
  std::size_t a = power_mod(least_primitive_root(p), (p - 1) / (q * q), p);
  std::size_t u = 0;
  while (u % q != 1 % q || u % p != a) ++u;

  auto hol = holomorph(cyclic_group(n));
  auto alpha = multiply_by(n, u);
  Element sigma = hol.element(Element(q), 0);
  Element tau = hol.element(Element(p), hol.aut.index_of(alpha));
  std::vector<Element> gens{sigma, tau};
  auto j = subgroup_generated(hol.group, gens);
  auto bracoid = from_holomorph_subgroup(hol, j);
  return ExampleInstance{join("cyclic-pq", {p, q}), std::nullopt, std::nullopt, std::nullopt,
                         std::move(bracoid)};
}

std::vector<std::string> example_names() {
  return {"trivial-brace", "semidirect", "abelianmap", "gl3f2", "cyclic-pq"};
}

ExampleInstance build_example(std::string const& name, std::vector<std::size_t> const& params,
                              std::uint64_t seed) {
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) {
      fail(ErrorCode::InvalidArgument, name + ": wrong number of parameters");
    }
  };
  if (name == "trivial-brace") {
    arity(1, 2);
    return trivial_brace_example(params[0], params.size() > 1 ? params[1] : 0);
  }
  if (name == "semidirect") {
    arity(0, 2);
    return semidirect_example(params.size() > 0 ? params[0] : 3, params.size() > 1 ? params[1] : 2);
  }
  if (name == "abelianmap") {
    arity(0, 2);
    return abelianmap_example(params.size() > 0 ? params[0] : 3, params.size() > 1 ? params[1] : 5);
  }
  if (name == "gl3f2") {
    arity(0, 0);
    return gl3f2_example(seed);
  }
  if (name == "cyclic-pq") {
    arity(0, 2);
    return cyclic_pq_example(params.size() > 0 ? params[0] : 5, params.size() > 1 ? params[1] : 2);
  }
  fail(ErrorCode::UnknownExample, "unknown example '" + name + "'");
}

std::vector<FiniteGroup> small_groups(std::size_t max_order) {
  std::vector<FiniteGroup> out;
  for (std::size_t n = 1; n <= 16; ++n) out.push_back(cyclic_group(n));
  for (std::size_t m = 2; m <= 8; ++m) out.push_back(dihedral_group(m));
  auto c2 = cyclic_group(2);
  auto c4 = cyclic_group(4);
  out.push_back(quaternion_group());
  out.push_back(elementary_abelian(2, 3));
  out.push_back(elementary_abelian(2, 4));
  out.push_back(elementary_abelian(3, 2));
  out.push_back(direct_product(c2, c4));
  out.push_back(direct_product(c2, cyclic_group(6)));
  out.push_back(direct_product(c2, cyclic_group(8)));
  out.push_back(direct_product(c4, c4));
  out.push_back(direct_product(elementary_abelian(2, 2), c4));
  out.push_back(direct_product(c2, quaternion_group()));
  out.push_back(direct_product(c2, dihedral_group(4)));
  out.push_back(semidirect_product(cyclic_group(3), c4,
                                   {identity_map(3), multiply_by(3, 2), identity_map(3),
                                    multiply_by(3, 2)}));
  std::erase_if(out, [&](FiniteGroup const& g) { return g.order() > max_order; });
  return out;
}

BraceSampler::BraceSampler(std::uint64_t seed)
    : _rng(seed), _groups(small_groups(16)), _regular(_groups.size()) {}

std::vector<Subgroup> const& BraceSampler::regular_subgroups(std::size_t i) {
  if (!_regular[i]) {
    auto hol = holomorph(_groups[i]);
    auto stab = stabilizer(hol.group, hol.action, 0);
    auto regs = find_complements(hol.group, stab);
    _regular[i].emplace(std::move(hol), std::move(regs));
  }
  return _regular[i]->second;
}

SkewBrace BraceSampler::brace(std::string* label) {
  auto pick_group = [&](std::size_t max_order) -> std::size_t {
    std::vector<std::size_t> ok;
    for (std::size_t i = 0; i < _groups.size(); ++i) {
      if (_groups[i].order() <= max_order) ok.push_back(i);
    }
    return ok[_rng.below(ok.size())];
  };
  auto set_label = [&](std::string text) {
    if (label) *label = std::move(text);
  };

  switch (_rng.below(4)) {
    case 0: {
      auto const& g = _groups[pick_group(16)];
      set_label("trivial(" + g.name() + ")");
      return trivial_brace(g);
    }
    case 1: {
      auto const& h = _groups[pick_group(8)];
      std::size_t m = 1 + _rng.below(16 / h.order());
      auto aut = automorphism_group(h);
      std::vector<Element> ok;
      for (Element a = 0; a < aut.maps.size(); ++a) {
        if (power_map(aut.maps[a], m) == identity_map(h.order())) ok.push_back(a);
      }
      auto const& a = aut.maps[ok[_rng.below(ok.size())]];
      std::vector<GroupMap> alpha;
      for (std::size_t k = 0; k < m; ++k) alpha.push_back(power_map(a, k));
      set_label("semidirect(" + h.name() + ",C" + std::to_string(m) + ")");
      return semidirect_brace(h, cyclic_group(m), alpha);
    }
    case 2: {
      auto const& g = _groups[pick_group(16)];
      std::vector<GroupMap> maps;
      for_each_endomorphism(g, false, [&](GroupMap const& f) {
        auto image = sorted_unique(f.images);
        for (Element a : image) {
          for (Element b : image) {
            if (g.mul(a, b) != g.mul(b, a)) return true;
          }
        }
        maps.push_back(f);
        return maps.size() < 4096;
      });
      set_label("abelianmap(" + g.name() + ")");
      return abelian_map_brace(g, maps[_rng.below(maps.size())]);
    }
    default: {
      std::size_t i = pick_group(8);
      auto const& regs = regular_subgroups(i);
      auto const& hol = _regular[i]->first;
      auto const& j = regs[_rng.below(regs.size())];
      auto const& n = _groups[i];
      std::size_t k = n.order();
      std::vector<Element> carrier(k);
      for (Element x : j.elements) carrier[hol.action.act(x, 0)] = x;
      Table dot(k * k);
      for (Element x = 0; x < k; ++x) {
        for (Element y = 0; y < k; ++y) dot[x * k + y] = hol.action.act(carrier[x], y);
      }
      set_label("regular(" + n.name() + ")");
      return SkewBrace::make(n, FiniteGroup::from_table(k, std::move(dot), "J"));
    }
  }
}

SkewBracoid BraceSampler::bracoid(std::string* label) {
  auto b = brace(label);
  if (_rng.below(2) == 0) return brace_as_bracoid(b);
  std::vector<Subgroup> ideals;
  for (auto& s : all_subgroups(b.dot())) {
    if (s.size() > 1 && is_strong_left_ideal(b, s) && !find_complements(b.dot(), s).empty()) {
      ideals.push_back(std::move(s));
    }
  }
  if (ideals.empty()) return brace_as_bracoid(b);
  auto const& s = ideals[_rng.below(ideals.size())];
  if (label) *label += "/S" + std::to_string(s.size());
  return from_strong_left_ideal(b, s);
}

}  // namespace ybe
