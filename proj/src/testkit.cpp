#include "trunkan/testkit.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace trunkan::testkit {

namespace {

Table cyclic(int k) {
  Table t(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[a][b] = (a + b) % k;
  return t;
}

Table klein() {
  Table t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return t;
}

// Permutations of {0,1,2} in lexicographic order; product ab = "a then b".
Table symmetric3() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p = {0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  Table t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[b][perms[a][i]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

int rnd(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

bool is_hom(const Group& A, const Group& B, const std::vector<int>& f) {
  for (int a = 0; a < A.order(); ++a)
    for (int b = 0; b < A.order(); ++b)
      if (f[A.mul[a][b]] != B.mul[f[a]][f[b]]) return false;
  return true;
}

std::string cm_violation(const CrossedModule& cm) {
  const Group &H = cm.H, &Q = cm.Q;
  const int nh = H.order(), nq = Q.order();
  if (static_cast<int>(cm.boundary.size()) != nh) return "boundary has wrong size";
  if (static_cast<int>(cm.action.size()) != nq) return "action has wrong size";
  for (int x : cm.boundary)
    if (x < 0 || x >= nq) return "boundary value out of range";
  for (const auto& row : cm.action) {
    if (static_cast<int>(row.size()) != nh) return "action row has wrong size";
    std::vector<int> seen(nh, 0);
    for (int x : row) {
      if (x < 0 || x >= nh || seen[x]++) return "action is not a permutation";
    }
  }
  if (!is_hom(H, Q, cm.boundary)) return "boundary is not a homomorphism";
  for (int q = 0; q < nq; ++q)
    if (!is_hom(H, H, cm.action[q])) return "q" + std::to_string(q) + " does not act by automorphisms";
  for (int h = 0; h < nh; ++h)
    if (cm.action[0][h] != h) return "unit acts nontrivially";
  for (int p = 0; p < nq; ++p)
    for (int q = 0; q < nq; ++q)
      for (int h = 0; h < nh; ++h)
        if (cm.action[Q.mul[p][q]][h] != cm.action[p][cm.action[q][h]])
          return "action is not a homomorphism at (" + std::to_string(p) + "," + std::to_string(q) + ")";
  for (int q = 0; q < nq; ++q)
    for (int h = 0; h < nh; ++h)
      if (cm.boundary[cm.action[q][h]] != Q.mul[Q.mul[q][cm.boundary[h]]][Q.inv(q)])
        return "boundary not equivariant at q" + std::to_string(q) + ", h" + std::to_string(h);
  for (int h = 0; h < nh; ++h)
    for (int k = 0; k < nh; ++k)
      if (cm.action[cm.boundary[h]][k] != H.mul[H.mul[h][k]][H.inv(h)])
        return "Peiffer identity fails at h" + std::to_string(h) + ", h'" + std::to_string(k);
  return "";
}

}  // namespace

int Group::inv(int a) const {
  for (int b = 0; b < order(); ++b)
    if (mul[a][b] == 0) return b;
  throw Error(ErrorKind::NotAGroup, name + ": no inverse for " + std::to_string(a));
}

void check_group(const Table& mul) {
  const int k = static_cast<int>(mul.size());
  if (k == 0) throw Error(ErrorKind::NotAGroup, "empty table");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != k) throw Error(ErrorKind::NotAGroup, "table is not square");
    for (int x : row)
      if (x < 0 || x >= k) throw Error(ErrorKind::NotAGroup, "entry out of range");
  }
  for (int a = 0; a < k; ++a)
    if (mul[0][a] != a || mul[a][0] != a) throw Error(ErrorKind::NotAGroup, "element 0 is not a unit");
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw Error(ErrorKind::NotAGroup, "not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                                                "," + std::to_string(c) + ")");
  for (int a = 0; a < k; ++a) {
    bool found = false;
    for (int b = 0; b < k; ++b) found = found || (mul[a][b] == 0 && mul[b][a] == 0);
    if (!found) throw Error(ErrorKind::NotAGroup, "element " + std::to_string(a) + " has no inverse");
  }
}

Group group(const std::string& name) {
  if (name.size() == 2 && name[0] == 'Z' && name[1] >= '1' && name[1] <= '6') return {name, cyclic(name[1] - '0')};
  if (name == "V4") return {name, klein()};
  if (name == "S3") return {name, symmetric3()};
  throw Error(ErrorKind::InvalidArgument, "unknown group " + name);
}

std::vector<Group> small_groups(int max_order) {
  std::vector<Group> out;
  for (const char* n : {"Z1", "Z2", "Z3", "Z4", "V4", "Z5", "Z6", "S3"}) {
    Group g = group(n);
    if (g.order() <= max_order) out.push_back(g);
  }
  return out;
}

std::vector<std::vector<int>> homomorphisms(const Group& A, const Group& B) {
  std::vector<std::vector<int>> out;
  const int na = A.order(), nb = B.order();
  std::vector<int> f(na, 0);
  // brute force over all maps with f(0) = 0
  std::function<void(int)> rec = [&](int a) {
    if (a == na) {
      if (is_hom(A, B, f)) out.push_back(f);
      return;
    }
    for (int b = 0; b < nb; ++b) {
      f[a] = b;
      rec(a + 1);
    }
  };
  rec(1);
  return out;
}

std::vector<std::vector<int>> automorphisms(const Group& A) {
  std::vector<std::vector<int>> out;
  for (auto& f : homomorphisms(A, A)) {
    std::vector<int> s = f;
    std::sort(s.begin(), s.end());
    if (std::unique(s.begin(), s.end()) == s.end()) out.push_back(f);
  }
  return out;
}

SSet nerve_group(const Table& mul) {
  check_group(mul);
  return nerve(*connected_groupoid({"*"}, mul), 1);
}

std::string CrossedModule::name() const {
  std::string s = H.name + "->" + Q.name + "[d=";
  for (int x : boundary) s += std::to_string(x);
  s += ";a=";
  for (std::size_t q = 1; q < action.size(); ++q) {
    if (q > 1) s += ",";
    for (int x : action[q]) s += std::to_string(x);
  }
  return s + "]";
}

int CrossedModule::kernel_size() const { return static_cast<int>(std::count(boundary.begin(), boundary.end(), 0)); }

int CrossedModule::cokernel_size() const {
  std::set<int> image(boundary.begin(), boundary.end());
  return Q.order() / static_cast<int>(image.size());
}

void validate(const CrossedModule& cm) {
  try {
    check_group(cm.H.mul);
    check_group(cm.Q.mul);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidCrossedModule, e.what());
  }
  std::string v = cm_violation(cm);
  if (!v.empty()) throw Error(ErrorKind::InvalidCrossedModule, v);
}

std::vector<CrossedModule> crossed_modules(const std::vector<Group>& hs, const std::vector<Group>& qs) {
  std::vector<CrossedModule> out;
  for (const Group& H : hs) {
    const auto auts = automorphisms(H);
    for (const Group& Q : qs) {
      const auto bds = homomorphisms(H, Q);
      // actions: homomorphisms Q -> Aut(H), brute force over assignments
      std::vector<std::vector<std::vector<int>>> actions;
      std::vector<int> ident(H.order());
      for (int h = 0; h < H.order(); ++h) ident[h] = h;
      std::vector<int> pick(Q.order(), static_cast<int>(std::find(auts.begin(), auts.end(), ident) - auts.begin()));
      std::function<void(int)> rec = [&](int q) {
        if (q == Q.order()) {
          for (int p = 0; p < Q.order(); ++p)
            for (int r = 0; r < Q.order(); ++r)
              for (int h = 0; h < H.order(); ++h)
                if (auts[pick[Q.mul[p][r]]][h] != auts[pick[p]][auts[pick[r]][h]]) return;
          std::vector<std::vector<int>> a;
          for (int p = 0; p < Q.order(); ++p) a.push_back(auts[pick[p]]);
          actions.push_back(a);
          return;
        }
        for (int i = 0; i < static_cast<int>(auts.size()); ++i) {
          pick[q] = i;
          rec(q + 1);
        }
      };
      rec(1);  // the unit acts by the identity
      for (const auto& d : bds)
        for (const auto& a : actions) {
          CrossedModule cm{H, Q, d, a};
          if (cm_violation(cm).empty()) out.push_back(cm);
        }
    }
  }
  return out;
}

CrossedModule trivial_crossed_module(const Group& H, const Group& Q) {
  std::vector<int> id(H.order());
  for (int h = 0; h < H.order(); ++h) id[h] = h;
  CrossedModule cm{H, Q, std::vector<int>(H.order(), 0), std::vector<std::vector<int>>(Q.order(), id)};
  validate(cm);
  return cm;
}

CrossedModule identity_crossed_module(const Group& G) {
  std::vector<int> d(G.order());
  std::vector<std::vector<int>> act(G.order(), std::vector<int>(G.order()));
  for (int g = 0; g < G.order(); ++g) {
    d[g] = g;
    for (int h = 0; h < G.order(); ++h) act[g][h] = G.mul[G.mul[g][h]][G.inv(g)];
  }
  CrossedModule cm{G, G, d, act};
  validate(cm);
  return cm;
}

bool isomorphic(const CrossedModule& a, const CrossedModule& b) {
  if (a.H.mul != b.H.mul || a.Q.mul != b.Q.mul) return false;
  for (const auto& al : automorphisms(a.H))
    for (const auto& be : automorphisms(a.Q)) {
      bool ok = true;
      for (int h = 0; h < a.H.order() && ok; ++h) ok = b.boundary[al[h]] == be[a.boundary[h]];
      for (int q = 0; q < a.Q.order() && ok; ++q)
        for (int h = 0; h < a.H.order() && ok; ++h) ok = al[a.action[q][h]] == b.action[be[q]][al[h]];
      if (ok) return true;
    }
  return false;
}

SSet nerve_crossed_module(const CrossedModule& cm) {
  validate(cm);
  const Group &H = cm.H, &Q = cm.Q;
  const int nh = H.order(), nq = Q.order();
  auto idx = [&](int q1, int q2, int h) { return (q1 * nq + q2) * nh + h; };
  RawSSet r;
  r.n = 2;
  r.simplices.resize(3);
  r.simplices[0] = {"*"};
  for (int q = 0; q < nq; ++q) r.simplices[1].push_back("q" + std::to_string(q));
  for (int q1 = 0; q1 < nq; ++q1)
    for (int q2 = 0; q2 < nq; ++q2)
      for (int h = 0; h < nh; ++h)
        r.simplices[2].push_back("(" + std::to_string(q1) + "," + std::to_string(q2) + ";" + std::to_string(h) + ")");
  r.faces.resize(3);
  r.faces[1].assign(2, std::vector<int>(nq, 0));
  r.faces[2].assign(3, std::vector<int>(nq * nq * nh));
  for (int q1 = 0; q1 < nq; ++q1)
    for (int q2 = 0; q2 < nq; ++q2)
      for (int h = 0; h < nh; ++h) {
        const int x = idx(q1, q2, h);
        r.faces[2][0][x] = q2;
        r.faces[2][1][x] = Q.mul[Q.mul[cm.boundary[h]][q1]][q2];
        r.faces[2][2][x] = q1;
      }
  r.degens.resize(2);
  r.degens[0] = {{0}};
  r.degens[1].assign(2, std::vector<int>(nq));
  for (int q = 0; q < nq; ++q) {
    r.degens[1][0][q] = idx(0, q, 0);
    r.degens[1][1][q] = idx(q, 0, 0);
  }
  auto hpart = [&](int x) { return x % nh; };
  auto first_edge = [&](int x) { return x / (nq * nh); };
  RawSSet full = complete_top(r, [&](const std::vector<int>& t) {
    const int h123 = hpart(t[0]), h023 = hpart(t[1]), h013 = hpart(t[2]), h012 = hpart(t[3]);
    const int x01 = first_edge(t[3]);
    return H.mul[h013][cm.action[x01][h123]] == H.mul[h023][h012];
  });
  return make_sset(std::move(full));
}

Gpd random_groupoid(std::uint64_t seed, Bounds b) {
  if (b.max_objects < 1 || b.max_objects > 4 || b.max_hom < 1 || b.max_hom > 6)
    throw Error(ErrorKind::BoundsExceeded, "bounds must keep objects in 1..4 and hom-sets in 1..6");
  std::mt19937_64 rng(seed);
  const auto groups = small_groups(b.max_hom);
  const int total = 1 + rnd(rng, b.max_objects);
  std::vector<Gpd> parts;
  int next = 0;
  while (next < total) {
    const int k = 1 + rnd(rng, total - next);
    const Group& g = groups[rnd(rng, static_cast<int>(groups.size()))];
    std::vector<std::string> objs;
    for (int i = 0; i < k; ++i) objs.push_back("o" + std::to_string(next + i));
    parts.push_back(connected_groupoid(objs, g.mul, k == 1 && g.order() > 1 ? objs[0] + ":" : ""));
    next += k;
  }
  return disjoint_union(parts);
}

GroupoidMap random_functor(std::uint64_t seed, const Gpd& G, const Gpd& H, int cap) {
  FunctorSearch opts;
  opts.limit = static_cast<std::size_t>(cap);
  auto all = find_functors(G, H, opts);
  if (all.empty()) throw Error(ErrorKind::NoCandidate, "no functor between the given groupoids");
  std::mt19937_64 rng(seed);
  return all[rnd(rng, static_cast<int>(all.size()))];
}

GSet random_gset(std::uint64_t seed, const Gpd& G, int max_orbits) {
  std::vector<std::string> carrier;
  std::vector<int> anchor;
  std::vector<std::vector<int>> act(G->num_morphisms());
  if (G->num_objects() == 0) return make_gset(G, carrier, anchor, act);
  std::mt19937_64 rng(seed);
  const int orbits = 1 + rnd(rng, max_orbits);
  std::vector<std::tuple<int, int, int>> moves;
  for (int o = 0; o < orbits; ++o) {
    const int a = rnd(rng, G->num_objects());
    const std::vector<int> aut = G->hom(a, a);
    // subgroups of Aut(a): subsets with the identity, closed under composition
    std::vector<std::vector<int>> subs;
    const int na = static_cast<int>(aut.size());
    for (int mask = 0; mask < (1 << na); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < na; ++i)
        if (mask >> i & 1) s.push_back(aut[i]);
      if (std::find(s.begin(), s.end(), G->ident[a]) == s.end()) continue;
      bool closed = true;
      for (int x : s)
        for (int y : s)
          if (std::find(s.begin(), s.end(), G->comp[x][y]) == s.end()) closed = false;
      if (closed) subs.push_back(s);
    }
    const auto& S = subs[rnd(rng, static_cast<int>(subs.size()))];
    // cosets S x for x : a -> b, represented by the least member
    std::map<int, int> cls;  // morphism -> carrier index
    for (int x = 0; x < G->num_morphisms(); ++x) {
      if (G->dom[x] != a || cls.count(x)) continue;
      const int id = static_cast<int>(carrier.size());
      carrier.push_back("p" + std::to_string(o) + "[" + G->morphisms[x] + "]");
      anchor.push_back(G->cod[x]);
      for (int s : S) cls[G->comp[s][x]] = id;
    }
    for (const auto& [x, id] : cls)
      for (int g = 0; g < G->num_morphisms(); ++g)
        if (G->dom[g] == G->cod[x]) moves.emplace_back(g, id, cls.at(G->comp[x][g]));
  }
  for (auto& row : act) row.assign(carrier.size(), -1);
  for (const auto& [g, x, y] : moves) act[g][x] = y;
  return make_gset(G, carrier, anchor, act);
}

PushoutInstance random_pushout_instance(std::uint64_t seed, Bounds b) {
  std::mt19937_64 rng(seed);
  PushoutInstance inst;
  inst.G = random_groupoid(rng(), b);
  inst.H = random_groupoid(rng(), b);
  const int ng = inst.G->num_objects();
  std::vector<int> objs;
  if (rnd(rng, 2) == 0) {
    // hit every component, so that g is an equivalence
    std::vector<bool> covered(ng, false);
    for (int a = 0; a < ng; ++a) {
      if (covered[a]) continue;
      std::vector<int> comp;
      for (int c = 0; c < ng; ++c)
        if (!inst.G->hom(a, c).empty()) comp.push_back(c), covered[c] = true;
      objs.push_back(comp[rnd(rng, static_cast<int>(comp.size()))]);
    }
  } else {
    for (int a = 0; a < ng; ++a)
      if (rnd(rng, 2)) objs.push_back(a);
    if (objs.empty()) objs.push_back(rnd(rng, ng));
  }
  std::sort(objs.begin(), objs.end());
  std::vector<int> origin;
  auto K = full_subgroupoid(*inst.G, objs, &origin);
  // rename so that K's names are its own
  auto Kc = std::make_shared<FiniteGroupoid>(*K);
  for (auto& o : Kc->objects) o = "k" + o;
  for (auto& m : Kc->morphisms) m = "k" + m;
  Kc->finalize();
  inst.K = Kc;
  inst.g = GroupoidMap{inst.K, inst.G, objs, origin};
  inst.h = random_functor(rng(), inst.K, inst.H);
  return inst;
}

std::vector<NamedSSet> two_groupoids(int max_g1, int max_g2, int max_order) {
  std::vector<NamedSSet> out;
  std::vector<CrossedModule> kept;
  for (const auto& cm : crossed_modules(small_groups(max_order), small_groups(max_order))) {
    const int g1 = cm.Q.order(), g2 = cm.Q.order() * cm.Q.order() * cm.H.order();
    if (g1 > max_g1 || g2 > max_g2) continue;
    bool dup = false;
    for (const auto& k : kept) dup = dup || isomorphic(k, cm);
    if (dup) continue;
    kept.push_back(cm);
    out.push_back({"cm:" + cm.name(), nerve_crossed_module(cm)});
  }
  std::vector<std::pair<std::string, Gpd>> gs = {
      {"gpd:C2", codiscrete_groupoid({"a", "b"})},
      {"gpd:Z2+pt", disjoint_union({connected_groupoid({"a"}, group("Z2").mul, "a:"), discrete_groupoid({"b"})})},
  };
  for (const auto& [name, G] : gs) {
    SSet X = nerve(*G, 2);
    if (X->size(1) <= max_g1 && X->size(2) <= max_g2) out.push_back({name, X});
  }
  return out;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("TRUNKAN_SEED");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end) throw Error(ErrorKind::InvalidArgument, std::string("TRUNKAN_SEED is not a number: ") + s);
  return v;
}

}  // namespace trunkan::testkit
