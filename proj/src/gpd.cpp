#include "trunkan/gpd.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "trunkan/kan.hpp"

namespace trunkan {

int FiniteGroupoid::find_object(const std::string& name) const {
  auto it = std::find(objects.begin(), objects.end(), name);
  return it == objects.end() ? -1 : static_cast<int>(it - objects.begin());
}

int FiniteGroupoid::find_morphism(const std::string& name) const {
  auto it = std::find(morphisms.begin(), morphisms.end(), name);
  return it == morphisms.end() ? -1 : static_cast<int>(it - morphisms.begin());
}

void FiniteGroupoid::finalize() {
  const int no = num_objects(), nm = num_morphisms();
  auto fail = [](const std::string& s) { throw Error(ErrorKind::InvalidArgument, "groupoid: " + s); };
  if (static_cast<int>(dom.size()) != nm || static_cast<int>(cod.size()) != nm) fail("dom/cod not total");
  for (int f = 0; f < nm; ++f)
    if (dom[f] < 0 || dom[f] >= no || cod[f] < 0 || cod[f] >= no) fail("endpoint out of range");
  homs_.assign(static_cast<std::size_t>(no) * no, {});
  for (int f = 0; f < nm; ++f) homs_[dom[f] * no + cod[f]].push_back(f);
  if (static_cast<int>(comp.size()) != nm) fail("composition table has wrong size");
  for (int f = 0; f < nm; ++f) {
    if (static_cast<int>(comp[f].size()) != nm) fail("composition table has wrong size");
    for (int g = 0; g < nm; ++g) {
      const int fg = comp[f][g];
      if (cod[f] != dom[g]) {
        if (fg != -1) fail("composite of non-composable pair " + morphisms[f] + ", " + morphisms[g]);
        continue;
      }
      if (fg < 0 || fg >= nm) fail("composition missing for " + morphisms[f] + " then " + morphisms[g]);
      if (dom[fg] != dom[f] || cod[fg] != cod[g]) fail("composite " + morphisms[fg] + " has wrong endpoints");
    }
  }
  for (int f = 0; f < nm; ++f)
    for (int b = 0; b < no; ++b)
      for (int g : homs_[cod[f] * no + b])
        for (int c = 0; c < no; ++c)
          for (int h : homs_[b * no + c])
            if (comp[comp[f][g]][h] != comp[f][comp[g][h]])
              fail("composition not associative at " + morphisms[f] + ", " + morphisms[g] + ", " + morphisms[h]);
  ident.assign(no, -1);
  for (int a = 0; a < no; ++a) {
    for (int e : homs_[a * no + a]) {
      bool ok = true;
      for (int f = 0; f < nm && ok; ++f) {
        if (dom[f] == a && comp[e][f] != f) ok = false;
        if (cod[f] == a && comp[f][e] != f) ok = false;
      }
      if (ok) {
        ident[a] = e;
        break;
      }
    }
    if (ident[a] < 0) fail("no identity at " + objects[a]);
  }
  inv.assign(nm, -1);
  for (int f = 0; f < nm; ++f) {
    for (int g : homs_[cod[f] * no + dom[f]])
      if (comp[f][g] == ident[dom[f]] && comp[g][f] == ident[cod[f]]) {
        inv[f] = g;
        break;
      }
    if (inv[f] < 0) fail("morphism " + morphisms[f] + " is not invertible");
  }
}

Gpd make_groupoid(const std::vector<std::string>& objects, const std::vector<MorphismSpec>& morphisms,
                  const std::vector<CompSpec>& comp) {
  auto G = std::make_shared<FiniteGroupoid>();
  G->objects = objects;
  std::map<std::string, int> oi, mi;
  for (int a = 0; a < static_cast<int>(objects.size()); ++a)
    if (!oi.emplace(objects[a], a).second) throw Error(ErrorKind::InvalidArgument, "duplicate object " + objects[a]);
  for (const auto& m : morphisms) {
    if (!oi.count(m.dom)) throw Error(ErrorKind::InvalidArgument, "unknown object '" + m.dom + "'");
    if (!oi.count(m.cod)) throw Error(ErrorKind::InvalidArgument, "unknown object '" + m.cod + "'");
    if (!mi.emplace(m.id, static_cast<int>(G->morphisms.size())).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate morphism " + m.id);
    G->morphisms.push_back(m.id);
    G->dom.push_back(oi[m.dom]);
    G->cod.push_back(oi[m.cod]);
  }
  const int nm = static_cast<int>(morphisms.size());
  G->comp.assign(nm, std::vector<int>(nm, -1));
  for (const auto& c : comp) {
    for (const auto* s : {&c.f, &c.g, &c.fg})
      if (!mi.count(*s)) throw Error(ErrorKind::InvalidArgument, "unknown morphism '" + *s + "'");
    int& slot = G->comp[mi[c.f]][mi[c.g]];
    if (slot >= 0 && slot != mi[c.fg])
      throw Error(ErrorKind::InvalidArgument, "conflicting composites for " + c.f + ", " + c.g);
    slot = mi[c.fg];
  }
  G->finalize();
  return G;
}

Gpd connected_groupoid(const std::vector<std::string>& objects, const std::vector<std::vector<int>>& mul,
                       const std::string& tag) {
  auto G = std::make_shared<FiniteGroupoid>();
  const int k = static_cast<int>(objects.size());
  const int m = static_cast<int>(mul.size());
  G->objects = objects;
  auto idx = [&](int a, int b, int x) { return (a * k + b) * m + x; };
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int x = 0; x < m; ++x) {
        std::string name = tag;
        if (k > 1) name += objects[a] + ">" + objects[b];
        if (m > 1) name += (k > 1 ? ":" : "") + std::string("g") + std::to_string(x);
        if (k == 1 && m == 1) name += "1_" + objects[0];
        if (k > 1 && m == 1 && a == b) name = tag + "1_" + objects[a];
        G->morphisms.push_back(name);
        G->dom.push_back(a);
        G->cod.push_back(b);
      }
  const int nm = k * k * m;
  G->comp.assign(nm, std::vector<int>(nm, -1));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y) G->comp[idx(a, b, x)][idx(b, c, y)] = idx(a, c, mul[x][y]);
  G->finalize();
  return G;
}

Gpd codiscrete_groupoid(const std::vector<std::string>& objects) { return connected_groupoid(objects, {{0}}); }

Gpd discrete_groupoid(const std::vector<std::string>& objects) {
  std::vector<Gpd> parts;
  for (const auto& o : objects) parts.push_back(connected_groupoid({o}, {{0}}));
  return disjoint_union(parts);
}

Gpd disjoint_union(const std::vector<Gpd>& parts) {
  auto G = std::make_shared<FiniteGroupoid>();
  int total = 0;
  for (const auto& p : parts) total += p->num_morphisms();
  G->comp.assign(total, std::vector<int>(total, -1));
  int ob = 0, mb = 0;
  for (const auto& p : parts) {
    for (const auto& o : p->objects) G->objects.push_back(o);
    for (int f = 0; f < p->num_morphisms(); ++f) {
      G->morphisms.push_back(p->morphisms[f]);
      G->dom.push_back(ob + p->dom[f]);
      G->cod.push_back(ob + p->cod[f]);
      for (int g = 0; g < p->num_morphisms(); ++g)
        if (p->comp[f][g] >= 0) G->comp[mb + f][mb + g] = mb + p->comp[f][g];
    }
    ob += p->num_objects();
    mb += p->num_morphisms();
  }
  G->finalize();
  return G;
}

Gpd full_subgroupoid(const FiniteGroupoid& G, const std::vector<int>& objs, std::vector<int>* morphism_origin) {
  auto S = std::make_shared<FiniteGroupoid>();
  std::vector<int> pos(G.num_objects(), -1);
  for (int i = 0; i < static_cast<int>(objs.size()); ++i) {
    pos[objs[i]] = i;
    S->objects.push_back(G.objects[objs[i]]);
  }
  std::vector<int> origin, newid(G.num_morphisms(), -1);
  for (int f = 0; f < G.num_morphisms(); ++f)
    if (pos[G.dom[f]] >= 0 && pos[G.cod[f]] >= 0) {
      newid[f] = static_cast<int>(origin.size());
      origin.push_back(f);
      S->morphisms.push_back(G.morphisms[f]);
      S->dom.push_back(pos[G.dom[f]]);
      S->cod.push_back(pos[G.cod[f]]);
    }
  const int nm = static_cast<int>(origin.size());
  S->comp.assign(nm, std::vector<int>(nm, -1));
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      int c = G.comp[origin[f]][origin[g]];
      if (c >= 0) S->comp[f][g] = newid[c];
    }
  S->finalize();
  if (morphism_origin) *morphism_origin = origin;
  return S;
}

// ---- functors ----

bool is_functor(const GroupoidMap& F, std::string* why) {
  const auto& G = *F.source;
  const auto& H = *F.target;
  auto bad = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (static_cast<int>(F.on_objects.size()) != G.num_objects() ||
      static_cast<int>(F.on_morphisms.size()) != G.num_morphisms())
    return bad("map not total");
  for (int a : F.on_objects)
    if (a < 0 || a >= H.num_objects()) return bad("object image out of range");
  for (int f = 0; f < G.num_morphisms(); ++f) {
    int y = F.on_morphisms[f];
    if (y < 0 || y >= H.num_morphisms()) return bad("morphism image out of range");
    if (H.dom[y] != F.on_objects[G.dom[f]] || H.cod[y] != F.on_objects[G.cod[f]])
      return bad("endpoints of " + G.morphisms[f] + " not preserved");
  }
  for (int a = 0; a < G.num_objects(); ++a)
    if (F.on_morphisms[G.ident[a]] != H.ident[F.on_objects[a]]) return bad("identity at " + G.objects[a]);
  for (int f = 0; f < G.num_morphisms(); ++f)
    for (int b = 0; b < G.num_objects(); ++b)
      for (int g : G.hom(G.cod[f], b))
        if (F.on_morphisms[G.comp[f][g]] != H.comp[F.on_morphisms[f]][F.on_morphisms[g]])
          return bad("composition " + G.morphisms[f] + " then " + G.morphisms[g]);
  return true;
}

GroupoidMap identity_functor(const Gpd& G) {
  GroupoidMap F{G, G, std::vector<int>(G->num_objects()), std::vector<int>(G->num_morphisms())};
  std::iota(F.on_objects.begin(), F.on_objects.end(), 0);
  std::iota(F.on_morphisms.begin(), F.on_morphisms.end(), 0);
  return F;
}

GroupoidMap compose(const GroupoidMap& G, const GroupoidMap& F) {
  GroupoidMap R{F.source, G.target, {}, {}};
  for (int a : F.on_objects) R.on_objects.push_back(G.on_objects[a]);
  for (int f : F.on_morphisms) R.on_morphisms.push_back(G.on_morphisms[f]);
  return R;
}

bool is_fully_faithful(const GroupoidMap& F) {
  const auto& G = *F.source;
  const auto& H = *F.target;
  for (int a = 0; a < G.num_objects(); ++a)
    for (int b = 0; b < G.num_objects(); ++b) {
      const auto& src = G.hom(a, b);
      const auto& tgt = H.hom(F.on_objects[a], F.on_objects[b]);
      if (src.size() != tgt.size()) return false;
      std::set<int> img;
      for (int f : src) img.insert(F.on_morphisms[f]);
      if (img.size() != src.size()) return false;
    }
  return true;
}

bool in_essential_image(const GroupoidMap& F, int object) {
  for (int a : F.on_objects)
    if (!F.target->hom(a, object).empty()) return true;
  return false;
}

bool is_essentially_surjective(const GroupoidMap& F) {
  for (int b = 0; b < F.target->num_objects(); ++b)
    if (!in_essential_image(F, b)) return false;
  return true;
}

bool is_equivalence(const GroupoidMap& F) { return is_fully_faithful(F) && is_essentially_surjective(F); }

bool is_isomorphism(const GroupoidMap& F) {
  std::set<int> o(F.on_objects.begin(), F.on_objects.end());
  std::set<int> m(F.on_morphisms.begin(), F.on_morphisms.end());
  return static_cast<int>(o.size()) == F.target->num_objects() &&
         static_cast<int>(F.on_objects.size()) == F.target->num_objects() &&
         static_cast<int>(m.size()) == F.target->num_morphisms() &&
         static_cast<int>(F.on_morphisms.size()) == F.target->num_morphisms();
}

namespace {

struct ComponentPlan {
  int root = 0;
  std::vector<int> order;      // non-root objects in BFS order
  std::vector<int> tree_edge;  // per object in order: morphism parent -> x
  std::vector<int> parent;
  std::vector<int> path;       // per object of G: morphism root -> x (or -1)
  std::vector<int> morphisms;  // all morphisms of the component
};

class Searcher {
 public:
  Searcher(const FiniteGroupoid& G, const FiniteGroupoid& H, const FunctorSearch& o) : G(G), H(H), o(o) {
    obj.assign(G.num_objects(), -1);
    mor.assign(G.num_morphisms(), -1);
    used.assign(H.num_objects(), 0);
    plan_components();
  }

  std::vector<std::pair<std::vector<int>, std::vector<int>>> results;

  void run() { component(0); }

 private:
  const FiniteGroupoid& G;
  const FiniteGroupoid& H;
  const FunctorSearch& o;
  std::vector<ComponentPlan> plans;
  std::vector<int> obj, mor;
  std::vector<int> used;

  bool done() const { return o.limit && results.size() >= o.limit; }

  int fixed_value(int f) const {
    if (!o.mor_fixed.empty()) {
      if (o.mor_fixed[f] >= 0) return o.mor_fixed[f];
      if (o.mor_fixed[G.inv[f]] >= 0) return H.inv[o.mor_fixed[G.inv[f]]];
    }
    return -1;
  }
  int fixed_object(int a) const { return o.obj_fixed.empty() ? -1 : o.obj_fixed[a]; }

  void plan_components() {
    std::vector<int> seen(G.num_objects(), 0);
    for (int r = 0; r < G.num_objects(); ++r) {
      if (seen[r]) continue;
      ComponentPlan p;
      p.root = r;
      p.path.assign(G.num_objects(), -1);
      p.path[r] = G.ident[r];
      seen[r] = 1;
      std::vector<int> inside{r};
      // grow the tree, preferring edges whose image is forced
      for (;;) {
        int best = -1, from = -1, to = -1;
        for (int pass = 0; pass < 2 && best < 0; ++pass)
          for (int y : inside) {
            for (int x = 0; x < G.num_objects() && best < 0; ++x) {
              if (seen[x]) continue;
              for (int f : G.hom(y, x))
                if (pass == 1 || fixed_value(f) >= 0) {
                  best = f;
                  from = y;
                  to = x;
                  break;
                }
            }
            if (best >= 0) break;
          }
        if (best < 0) break;
        seen[to] = 1;
        inside.push_back(to);
        p.order.push_back(to);
        p.tree_edge.push_back(best);
        p.parent.push_back(from);
        p.path[to] = G.comp[p.path[from]][best];
      }
      for (int f = 0; f < G.num_morphisms(); ++f)
        if (p.path[G.dom[f]] >= 0) p.morphisms.push_back(f);
      plans.push_back(p);
    }
  }

  bool place_object(int a, int v) {
    if (o.iso_only && used[v]) return false;
    obj[a] = v;
    used[v]++;
    return true;
  }
  void unplace_object(int a) {
    used[obj[a]]--;
    obj[a] = -1;
  }

  void component(int ci) {
    if (done()) return;
    if (ci == static_cast<int>(plans.size())) {
      finish();
      return;
    }
    const auto& p = plans[ci];
    const int fr = fixed_object(p.root);
    for (int v = 0; v < H.num_objects(); ++v) {
      if (fr >= 0 && v != fr) continue;
      if (!place_object(p.root, v)) continue;
      mor[p.path[p.root]] = H.ident[v];
      tree(ci, 0);
      unplace_object(p.root);
      if (done()) return;
    }
  }

  // image of the path morphism root -> x
  std::vector<int> path_img;

  void tree(int ci, int k) {
    const auto& p = plans[ci];
    if (path_img.size() < static_cast<std::size_t>(G.num_objects())) path_img.assign(G.num_objects(), -1);
    path_img[p.root] = H.ident[obj[p.root]];
    if (k == static_cast<int>(p.order.size())) {
      vertex_group(ci);
      return;
    }
    const int x = p.order[k], e = p.tree_edge[k], y = p.parent[k];
    const int fx = fixed_object(x);
    const int fe = fixed_value(e);
    for (int v = 0; v < H.num_objects(); ++v) {
      if (fx >= 0 && v != fx) continue;
      if (fe >= 0 && H.cod[fe] != v) continue;
      if (!place_object(x, v)) continue;
      const auto& cands = H.hom(obj[y], v);
      for (int img : cands) {
        if (fe >= 0 && img != fe) continue;
        path_img[x] = H.comp[path_img[y]][img];
        tree(ci, k + 1);
        if (done()) break;
      }
      unplace_object(x);
      if (done()) return;
    }
  }

  void vertex_group(int ci) {
    const auto& p = plans[ci];
    const int r = p.root;
    const auto& V = G.hom(r, r);
    const int hr = obj[r];
    // loop element of f: root -> dom f -> cod f -> root
    auto loop_of = [&](int f) { return G.comp[G.comp[p.path[G.dom[f]]][f]][G.inv[p.path[G.cod[f]]]]; };
    auto loop_img = [&](int f, int img) {
      return H.comp[H.comp[path_img[G.dom[f]]][img]][H.inv[path_img[G.cod[f]]]];
    };
    std::map<int, int> forced;  // element of V -> forced image
    for (int f : p.morphisms) {
      int fv = fixed_value(f);
      if (fv < 0) continue;
      if (H.dom[fv] != obj[G.dom[f]] || H.cod[fv] != obj[G.cod[f]]) return;
      int l = loop_of(f), li = loop_img(f, fv);
      auto [it, fresh] = forced.emplace(l, li);
      if (!fresh && it->second != li) return;
    }
    // generators, forced elements first
    std::vector<int> order;
    for (auto& [l, _] : forced) order.push_back(l);
    for (int x : V) order.push_back(x);
    std::vector<int> gens;
    std::set<int> span{G.ident[r]};
    for (int x : order) {
      if (span.count(x)) continue;
      gens.push_back(x);
      std::vector<int> frontier(span.begin(), span.end());
      while (!frontier.empty()) {
        std::vector<int> next;
        for (int s : frontier)
          for (int g : gens) {
            int t = G.comp[s][g];
            if (span.insert(t).second) next.push_back(t);
          }
        frontier = next;
      }
    }
    std::vector<int> gimg(gens.size(), -1);
    const auto& HV = H.hom(hr, hr);
    auto rec = [&](auto&& self, std::size_t gi) -> void {
      if (done()) return;
      if (gi == gens.size()) {
        std::map<int, int> phi{{G.ident[r], H.ident[hr]}};
        std::vector<int> queue{G.ident[r]};
        for (std::size_t q = 0; q < queue.size(); ++q) {
          int s = queue[q];
          for (std::size_t j = 0; j < gens.size(); ++j) {
            int t = G.comp[s][gens[j]];
            int ti = H.comp[phi[s]][gimg[j]];
            auto [it, fresh] = phi.emplace(t, ti);
            if (fresh)
              queue.push_back(t);
            else if (it->second != ti)
              return;
          }
        }
        for (auto& [l, li] : forced)
          if (phi[l] != li) return;
        for (int f : p.morphisms)
          mor[f] = H.comp[H.comp[H.inv[path_img[G.dom[f]]]][phi[loop_of(f)]]][path_img[G.cod[f]]];
        component(ci + 1);
        return;
      }
      auto it = forced.find(gens[gi]);
      for (int y : HV) {
        if (it != forced.end() && y != it->second) continue;
        gimg[gi] = y;
        self(self, gi + 1);
        if (done()) return;
      }
    };
    std::vector<int> saved = path_img;
    rec(rec, 0);
    path_img = saved;
  }

  void finish() {
    if (!o.mor_fixed.empty())
      for (int f = 0; f < G.num_morphisms(); ++f)
        if (o.mor_fixed[f] >= 0 && mor[f] != o.mor_fixed[f]) return;
    if (!o.obj_fixed.empty())
      for (int a = 0; a < G.num_objects(); ++a)
        if (o.obj_fixed[a] >= 0 && obj[a] != o.obj_fixed[a]) return;
    if (o.iso_only) {
      if (G.num_objects() != H.num_objects() || G.num_morphisms() != H.num_morphisms()) return;
      std::vector<char> hit(H.num_morphisms(), 0);
      for (int y : mor) {
        if (hit[y]) return;
        hit[y] = 1;
      }
    }
    results.emplace_back(obj, mor);
  }
};

}  // namespace

std::vector<GroupoidMap> find_functors(const Gpd& G, const Gpd& H, const FunctorSearch& opts) {
  std::vector<GroupoidMap> out;
  if (opts.iso_only && (G->num_objects() != H->num_objects() || G->num_morphisms() != H->num_morphisms()))
    return out;
  if (G->num_objects() > 0 && H->num_objects() == 0) return out;
  Searcher s(*G, *H, opts);
  s.run();
  for (auto& [ob, mo] : s.results) {
    GroupoidMap F{G, H, ob, mo};
    if (!is_functor(F)) throw Error(ErrorKind::InvalidArgument, "functor search produced a non-functor");
    out.push_back(std::move(F));
  }
  return out;
}

std::vector<GroupoidMap> find_isomorphisms(const Gpd& G, const Gpd& H, std::size_t limit) {
  FunctorSearch o;
  o.iso_only = true;
  o.limit = limit;
  return find_functors(G, H, o);
}

// ---- nerves ----

SSet nerve(const FiniteGroupoid& G, int n) {
  RawSSet r;
  r.n = n;
  std::vector<std::vector<std::vector<int>>> chains(n + 2);
  std::vector<std::map<std::vector<int>, int>> index(n + 2);
  for (int a = 0; a < G.num_objects(); ++a) chains[0].push_back({a});
  for (int k = 1; k <= n + 1; ++k) {
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
      if (static_cast<int>(cur.size()) == k) {
        chains[k].push_back(cur);
        return;
      }
      for (int f = 0; f < G.num_morphisms(); ++f)
        if (cur.empty() || G.dom[f] == G.cod[cur.back()]) {
          cur.push_back(f);
          self(self);
          cur.pop_back();
        }
    };
    rec(rec);
  }
  for (int k = 0; k <= n + 1; ++k) {
    std::vector<std::string> names;
    for (int x = 0; x < static_cast<int>(chains[k].size()); ++x) {
      index[k][chains[k][x]] = x;
      if (k == 0) {
        names.push_back(G.objects[chains[0][x][0]]);
        continue;
      }
      std::string s;
      for (std::size_t i = 0; i < chains[k][x].size(); ++i) s += (i ? "|" : "") + G.morphisms[chains[k][x][i]];
      names.push_back(s);
    }
    r.simplices.push_back(names);
  }
  r.faces.assign(n + 2, {});
  for (int m = 1; m <= n + 1; ++m)
    for (int j = 0; j <= m; ++j) {
      std::vector<int> f;
      for (const auto& c : chains[m]) {
        if (m == 1) {
          f.push_back(j == 0 ? G.cod[c[0]] : G.dom[c[0]]);
          continue;
        }
        std::vector<int> d;
        if (j == 0)
          d.assign(c.begin() + 1, c.end());
        else if (j == m)
          d.assign(c.begin(), c.end() - 1);
        else {
          d.assign(c.begin(), c.begin() + (j - 1));
          d.push_back(G.comp[c[j - 1]][c[j]]);
          d.insert(d.end(), c.begin() + j + 1, c.end());
        }
        f.push_back(index[m - 1].at(d));
      }
      r.faces[m].push_back(f);
    }
  r.degens.assign(n + 1, {});
  for (int m = 0; m <= n; ++m)
    for (int j = 0; j <= m; ++j) {
      std::vector<int> s;
      for (const auto& c : chains[m]) {
        if (m == 0) {
          s.push_back(index[1].at({G.ident[c[0]]}));
          continue;
        }
        const int vj = j < m ? G.dom[c[j]] : G.cod[c[m - 1]];
        std::vector<int> d(c.begin(), c.begin() + j);
        d.push_back(G.ident[vj]);
        d.insert(d.end(), c.begin() + j, c.end());
        s.push_back(index[m + 1].at(d));
      }
      r.degens[m].push_back(s);
    }
  return make_sset(r);
}

SSet to_1groupoid(const FiniteGroupoid& G) { return nerve(G, 1); }

Gpd from_1groupoid(const TruncatedSSet& X) {
  if (X.n() != 1) throw Error(ErrorKind::AxiomPrereqFailed, "from_1groupoid needs truncation level 1");
  auto rep = check_n_groupoid(X);
  if (!rep.ok) throw Error(ErrorKind::AxiomPrereqFailed, rep.failures[0].describe(X));
  auto G = std::make_shared<FiniteGroupoid>();
  G->objects = X.names(0);
  G->morphisms = X.names(1);
  for (int f = 0; f < X.size(1); ++f) {
    G->dom.push_back(X.face(1, 1, f));
    G->cod.push_back(X.face(1, 0, f));
  }
  const int nm = X.size(1);
  G->comp.assign(nm, std::vector<int>(nm, -1));
  for (int t = 0; t < X.size(2); ++t) G->comp[X.face(2, 2, t)][X.face(2, 0, t)] = X.face(2, 1, t);
  G->finalize();
  return G;
}

SimplicialMap nerve_map(const GroupoidMap& F, const SSet& src, const SSet& tgt, int n) {
  SimplicialMap m{src, tgt, {}};
  const auto& G = *F.source;
  const auto& H = *F.target;
  std::map<std::string, int> mname;
  for (int f = 0; f < G.num_morphisms(); ++f) mname[G.morphisms[f]] = f;
  for (int k = 0; k <= n + 1; ++k) {
    std::vector<int> c;
    for (int x = 0; x < src->size(k); ++x) {
      const std::string& nm = src->name(k, x);
      std::string out;
      if (k == 0) {
        out = H.objects[F.on_objects[G.find_object(nm)]];
      } else {
        std::size_t start = 0;
        bool first = true;
        while (true) {
          std::size_t bar = nm.find('|', start);
          std::string part = nm.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
          out += (first ? "" : "|") + H.morphisms[F.on_morphisms[mname.at(part)]];
          first = false;
          if (bar == std::string::npos) break;
          start = bar + 1;
        }
      }
      int y = tgt->find(k, out);
      if (y < 0) throw Error(ErrorKind::InvalidArgument, "nerve_map: no simplex " + out);
      c.push_back(y);
    }
    m.components.push_back(c);
  }
  return m;
}

}  // namespace trunkan
