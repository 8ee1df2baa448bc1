#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "trunkan/gpd.hpp"

namespace trunkan {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

bool same_groupoid(const Gpd& a, const Gpd& b) {
  if (a == b) return true;
  return a->objects == b->objects && a->morphisms == b->morphisms && a->dom == b->dom && a->cod == b->cod &&
         a->comp == b->comp;
}

std::string unique_name(std::set<std::string>& taken, std::string s) {
  while (!taken.insert(s).second) s += "'";
  return s;
}

}  // namespace

Pushout pushout(const GroupoidMap& g, const GroupoidMap& h) {
  if (!same_groupoid(g.source, h.source)) throw Error(ErrorKind::InvalidArgument, "pushout legs need a common source");
  std::string why;
  if (!is_functor(g, &why)) throw Error(ErrorKind::InvalidArgument, "g is not a functor: " + why);
  if (!is_functor(h, &why)) throw Error(ErrorKind::InvalidArgument, "h is not a functor: " + why);
  if (!is_fully_faithful(g)) throw Error(ErrorKind::NotFullyFaithful, "g is not bijective on hom-sets");
  const FiniteGroupoid& K = *g.source;
  const FiniteGroupoid& G = *g.target;
  const FiniteGroupoid& H = *h.target;
  const int nG = G.num_objects(), nH = H.num_objects(), nK = K.num_objects();

  std::vector<char> ess(nG, 0);
  for (int a = 0; a < nG; ++a) ess[a] = in_essential_image(g, a);

  // tuples, each prefixed by its kind
  std::vector<std::vector<int>> tuples;
  std::map<std::vector<int>, int> index;
  auto add = [&](std::vector<int> t) {
    index.emplace(t, static_cast<int>(tuples.size()));
    tuples.push_back(std::move(t));
  };
  for (int u = 0; u < G.num_morphisms(); ++u)
    if (!ess[G.dom[u]] && !ess[G.cod[u]]) add({0, u});
  for (int v = 0; v < H.num_morphisms(); ++v) add({1, v});
  for (int c = 0; c < nK; ++c) {
    const int gc = g.on_objects[c], hc = h.on_objects[c];
    for (int u = 0; u < G.num_morphisms(); ++u)
      if (G.cod[u] == gc)
        for (int v = 0; v < H.num_morphisms(); ++v)
          if (H.dom[v] == hc) add({2, u, c, v});
    for (int v = 0; v < H.num_morphisms(); ++v)
      if (H.cod[v] == hc)
        for (int u = 0; u < G.num_morphisms(); ++u)
          if (G.dom[u] == gc) add({3, v, c, u});
  }
  for (int c1 = 0; c1 < nK; ++c1)
    for (int c2 = 0; c2 < nK; ++c2)
      for (int u1 = 0; u1 < G.num_morphisms(); ++u1) {
        if (G.cod[u1] != g.on_objects[c1]) continue;
        for (int v : H.hom(h.on_objects[c1], h.on_objects[c2]))
          for (int u2 = 0; u2 < G.num_morphisms(); ++u2)
            if (G.dom[u2] == g.on_objects[c2]) add({4, u1, c1, v, c2, u2});
      }

  // slide K-morphisms across each junction: u -> u.g(w), v -> h(w)^-1.v
  UnionFind uf(static_cast<int>(tuples.size()));
  for (int t = 0; t < static_cast<int>(tuples.size()); ++t) {
    const auto T = tuples[t];
    for (int w = 0; w < K.num_morphisms(); ++w) {
      const int gw = g.on_morphisms[w], hw = h.on_morphisms[w];
      const int gwi = G.inv[gw], hwi = H.inv[hw];
      const int c = K.dom[w], c2 = K.cod[w];
      std::vector<int> S;
      switch (T[0]) {
        case 2:
          if (T[2] == c) S = {2, G.then(T[1], gw), c2, H.then(hwi, T[3])};
          break;
        case 3:
          if (T[2] == c) S = {3, H.then(T[1], hw), c2, G.then(gwi, T[3])};
          break;
        case 4:
          if (T[2] == c) uf.unite(t, index.at({4, G.then(T[1], gw), c2, H.then(hwi, T[3]), T[4], T[5]}));
          if (T[4] == c) S = {4, T[1], T[2], H.then(T[3], hw), c2, G.then(gwi, T[5])};
          break;
        default:
          break;
      }
      if (!S.empty()) uf.unite(t, index.at(S));
    }
  }

  // classes, least tuple first within each class (tuples were added in
  // increasing order within a kind, and union keeps the least index)
  auto endpoints = [&](const std::vector<int>& T) -> std::pair<int, int> {
    switch (T[0]) {
      case 0: return {G.dom[T[1]], G.cod[T[1]]};
      case 1: return {nG + H.dom[T[1]], nG + H.cod[T[1]]};
      case 2: return {G.dom[T[1]], nG + H.cod[T[3]]};
      case 3: return {nG + H.dom[T[1]], G.cod[T[3]]};
      default: return {G.dom[T[1]], G.cod[T[5]]};
    }
  };
  std::vector<int> roots;
  for (int t = 0; t < static_cast<int>(tuples.size()); ++t)
    if (uf.find(t) == t) roots.push_back(t);
  std::sort(roots.begin(), roots.end(), [&](int a, int b) {
    auto ea = endpoints(tuples[a]), eb = endpoints(tuples[b]);
    if (ea != eb) return ea < eb;
    return tuples[a] < tuples[b];
  });
  std::vector<int> class_id(tuples.size(), -1);
  for (int i = 0; i < static_cast<int>(roots.size()); ++i) class_id[roots[i]] = i;
  auto cls = [&](const std::vector<int>& T) { return class_id[uf.find(index.at(T))]; };

  Pushout po;
  auto P = std::make_shared<FiniteGroupoid>();
  std::set<std::string> taken;
  for (const auto& o : G.objects) P->objects.push_back(unique_name(taken, o));
  for (const auto& o : H.objects) P->objects.push_back(unique_name(taken, o));
  std::set<std::string> mtaken;
  for (int r : roots) {
    const auto& T = tuples[r];
    auto [d, c] = endpoints(T);
    P->dom.push_back(d);
    P->cod.push_back(c);
    std::string name;
    switch (T[0]) {
      case 0: name = G.morphisms[T[1]]; break;
      case 1: name = H.morphisms[T[1]]; break;
      case 2: name = "(" + G.morphisms[T[1]] + "," + K.objects[T[2]] + "," + H.morphisms[T[3]] + ")"; break;
      case 3: name = "(" + H.morphisms[T[1]] + "," + K.objects[T[2]] + "," + G.morphisms[T[3]] + ")"; break;
      default:
        name = "(" + G.morphisms[T[1]] + "," + K.objects[T[2]] + "," + H.morphisms[T[3]] + "," + K.objects[T[4]] +
               "," + G.morphisms[T[5]] + ")";
    }
    P->morphisms.push_back(unique_name(mtaken, name));
    po.kind.push_back(T[0]);
    po.rep.push_back(std::vector<int>(T.begin() + 1, T.end()));
  }

  // w with g(w) = x for x : g(ca) -> g(cb)
  std::map<std::tuple<int, int, int>, int> pre;
  for (int w = 0; w < K.num_morphisms(); ++w) pre[{K.dom[w], K.cod[w], g.on_morphisms[w]}] = w;
  auto merge = [&](int ca, int ua, int ub, int cb) {
    return h.on_morphisms[pre.at({ca, cb, G.then(ua, ub)})];
  };
  auto then_tuple = [&](const std::vector<int>& A, const std::vector<int>& B) -> std::vector<int> {
    const int ka = A[0], kb = B[0];
    if (ka == 0 && kb == 0) return {0, G.then(A[1], B[1])};
    if (ka == 1 && kb == 1) return {1, H.then(A[1], B[1])};
    if (ka == 1 && kb == 3) return {3, H.then(A[1], B[1]), B[2], B[3]};
    if (ka == 2 && kb == 1) return {2, A[1], A[2], H.then(A[3], B[1])};
    if (ka == 2 && kb == 3) return {4, A[1], A[2], H.then(A[3], B[1]), B[2], B[3]};
    // G-G junction
    const int ca = ka == 3 ? A[2] : A[4];
    const int ua = ka == 3 ? A[3] : A[5];
    const int vA = ka == 3 ? A[1] : A[3];
    const int cb = B[2];
    const int ub = B[1];
    const int vB = B[3];
    const int v = H.then(H.then(vA, merge(ca, ua, ub, cb)), vB);
    if (ka == 3 && kb == 2) return {1, v};
    if (ka == 3 && kb == 4) return {3, v, B[4], B[5]};
    if (ka == 4 && kb == 2) return {2, A[1], A[2], v};
    return {4, A[1], A[2], v, B[4], B[5]};
  };
  const int nm = static_cast<int>(roots.size());
  P->comp.assign(nm, std::vector<int>(nm, -1));
  for (int a = 0; a < nm; ++a)
    for (int b = 0; b < nm; ++b)
      if (P->cod[a] == P->dom[b]) P->comp[a][b] = cls(then_tuple(tuples[roots[a]], tuples[roots[b]]));
  P->finalize();
  po.P = P;

  po.h_prime = GroupoidMap{h.target, P, {}, {}};
  for (int b = 0; b < nH; ++b) po.h_prime.on_objects.push_back(nG + b);
  for (int v = 0; v < H.num_morphisms(); ++v) po.h_prime.on_morphisms.push_back(cls({1, v}));

  po.g_prime = GroupoidMap{g.target, P, {}, {}};
  for (int a = 0; a < nG; ++a) po.g_prime.on_objects.push_back(a);
  for (int u = 0; u < G.num_morphisms(); ++u) {
    const int a = G.dom[u];
    if (!ess[a]) {
      po.g_prime.on_morphisms.push_back(cls({0, u}));
      continue;
    }
    int c = -1, up = -1;
    for (int k = 0; k < nK && c < 0; ++k)
      if (!G.hom(a, g.on_objects[k]).empty()) {
        c = k;
        up = G.hom(a, g.on_objects[k])[0];
      }
    const int hc = h.on_objects[c];
    po.g_prime.on_morphisms.push_back(cls({4, up, c, H.ident[hc], c, G.then(G.inv[up], u)}));
  }
  for (int c = 0; c < nK; ++c)
    po.alpha.push_back(cls({3, H.ident[h.on_objects[c]], c, G.ident[g.on_objects[c]]}));
  return po;
}

GroupoidMap pushout_mediator_formula(const Pushout& po, const GroupoidMap& g1, const GroupoidMap& h1,
                                     const std::vector<int>& beta) {
  const FiniteGroupoid& F = *g1.target;
  const int nG = g1.source->num_objects();
  GroupoidMap f{po.P, g1.target, {}, {}};
  for (int a = 0; a < po.P->num_objects(); ++a)
    f.on_objects.push_back(a < nG ? g1.on_objects[a] : h1.on_objects[a - nG]);
  for (int m = 0; m < po.P->num_morphisms(); ++m) {
    const auto& R = po.rep[m];
    int y = -1;
    switch (po.kind[m]) {
      case 0: y = g1.on_morphisms[R[0]]; break;
      case 1: y = h1.on_morphisms[R[0]]; break;
      case 2: y = F.then(F.then(g1.on_morphisms[R[0]], F.inv[beta[R[1]]]), h1.on_morphisms[R[2]]); break;
      case 3: y = F.then(F.then(h1.on_morphisms[R[0]], beta[R[1]]), g1.on_morphisms[R[2]]); break;
      default: {
        y = F.then(g1.on_morphisms[R[0]], F.inv[beta[R[1]]]);
        y = F.then(y, h1.on_morphisms[R[2]]);
        y = F.then(y, beta[R[3]]);
        y = F.then(y, g1.on_morphisms[R[4]]);
      }
    }
    f.on_morphisms.push_back(y);
  }
  return f;
}

GroupoidMap check_pushout_universal(const Pushout& po, const GroupoidMap& g, const GroupoidMap& h,
                                    const GroupoidMap& g1, const GroupoidMap& h1, const std::vector<int>& beta) {
  const FiniteGroupoid& K = *g.source;
  const FiniteGroupoid& F = *g1.target;
  if (!is_functor(g1) || !is_functor(h1)) throw Error(ErrorKind::InvalidArgument, "cone legs are not functors");
  if (static_cast<int>(beta.size()) != K.num_objects()) throw Error(ErrorKind::InvalidArgument, "beta not total");
  for (int c = 0; c < K.num_objects(); ++c) {
    const int b = beta[c];
    if (F.dom[b] != h1.on_objects[h.on_objects[c]] || F.cod[b] != g1.on_objects[g.on_objects[c]])
      throw Error(ErrorKind::InvalidArgument, "beta component at " + K.objects[c] + " has wrong endpoints");
  }
  for (int w = 0; w < K.num_morphisms(); ++w) {
    const int c = K.dom[w], c2 = K.cod[w];
    if (F.then(beta[c], g1.on_morphisms[g.on_morphisms[w]]) != F.then(h1.on_morphisms[h.on_morphisms[w]], beta[c2]))
      throw Error(ErrorKind::InvalidArgument, "beta is not natural at " + K.morphisms[w]);
  }
  FunctorSearch o;
  const int nG = g.target->num_objects();
  for (int a = 0; a < po.P->num_objects(); ++a)
    o.obj_fixed.push_back(a < nG ? g1.on_objects[a] : h1.on_objects[a - nG]);
  o.mor_fixed.assign(po.P->num_morphisms(), -1);
  auto force = [&](int m, int y) {
    if (o.mor_fixed[m] >= 0 && o.mor_fixed[m] != y) return false;
    o.mor_fixed[m] = y;
    return true;
  };
  bool consistent = true;
  for (int u = 0; u < g.target->num_morphisms(); ++u) consistent &= force(po.g_prime.on_morphisms[u], g1.on_morphisms[u]);
  for (int v = 0; v < h.target->num_morphisms(); ++v) consistent &= force(po.h_prime.on_morphisms[v], h1.on_morphisms[v]);
  for (int c = 0; c < K.num_objects(); ++c) consistent &= force(po.alpha[c], beta[c]);
  if (!consistent) throw Error(ErrorKind::NoMediator, "forced values conflict");
  o.limit = 2;
  auto found = find_functors(po.P, g1.target, o);
  if (found.empty()) throw Error(ErrorKind::NoMediator, "no functor satisfies the cone equations");
  if (found.size() > 1) throw Error(ErrorKind::NotUnique, "several mediating functors");
  return found[0];
}

VariantPushout variant_pushout(const Pushout& po, const GroupoidMap& g, const GroupoidMap& h) {
  const FiniteGroupoid& P = *po.P;
  const FiniteGroupoid& K = *g.source;
  const int nP = P.num_objects();
  // alpha edges between h c and g c
  UnionFind uf(nP);
  std::vector<std::vector<std::pair<int, int>>> adj(nP);  // (neighbour, alpha morphism)
  for (int c = 0; c < K.num_objects(); ++c) {
    const int e = po.alpha[c];
    adj[P.dom[e]].push_back({P.cod[e], e});
    adj[P.cod[e]].push_back({P.dom[e], e});
  }
  // tau[x] : x -> rep(x), built along a BFS forest of alpha edges
  std::vector<int> rep(nP, -1), tau(nP, -1);
  std::vector<char> tree_edge_used(P.num_morphisms(), 0);
  for (int r = 0; r < nP; ++r) {
    if (rep[r] >= 0) continue;
    rep[r] = r;
    tau[r] = P.ident[r];
    std::vector<int> q{r};
    for (std::size_t i = 0; i < q.size(); ++i) {
      const int s = q[i];
      for (auto [t, e] : adj[s]) {
        if (rep[t] >= 0) continue;
        rep[t] = r;
        tree_edge_used[e] = 1;
        // e goes s -> t or t -> s
        tau[t] = P.dom[e] == s ? P.then(P.inv[e], tau[s]) : P.then(e, tau[s]);
        q.push_back(t);
      }
    }
  }
  std::vector<int> reps;
  for (int x = 0; x < nP; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<std::set<int>> N(nP);
  for (int r : reps) N[r].insert(P.ident[r]);
  for (int c = 0; c < K.num_objects(); ++c) {
    const int e = po.alpha[c];
    if (tree_edge_used[e]) continue;
    const int s = P.dom[e], t = P.cod[e];
    const int loop = P.then(P.then(P.inv[tau[s]], e), tau[t]);
    N[rep[s]].insert(loop);
  }
  // normal closure across the full subgroupoid on the representatives
  for (bool changed = true; changed;) {
    changed = false;
    for (int r : reps) {
      std::vector<int> cur(N[r].begin(), N[r].end());
      for (int a : cur) {
        changed |= N[r].insert(P.inv[a]).second;
        for (int b : cur) changed |= N[r].insert(P.then(a, b)).second;
        for (int r2 : reps)
          for (int f : P.hom(r, r2)) changed |= N[r2].insert(P.then(P.then(P.inv[f], a), f)).second;
      }
    }
  }
  VariantPushout vp;
  for (int r : reps) vp.collapsed_loops += static_cast<int>(N[r].size()) - 1;

  auto Q = std::make_shared<FiniteGroupoid>();
  std::vector<int> qobj(nP, -1);
  for (int r : reps) {
    qobj[r] = Q->num_objects();
    std::string name;
    for (int x = 0; x < nP; ++x)
      if (rep[x] == r) name += (name.empty() ? "" : "~") + P.objects[x];
    Q->objects.push_back(name);
  }
  // classes of P(r, r2) modulo right multiplication by N[r2]
  std::vector<int> qmor(P.num_morphisms(), -1);
  for (int r : reps)
    for (int r2 : reps)
      for (int f : P.hom(r, r2)) {
        if (qmor[f] >= 0) continue;
        const int id = Q->num_morphisms();
        Q->morphisms.push_back(P.morphisms[f]);
        Q->dom.push_back(qobj[r]);
        Q->cod.push_back(qobj[r2]);
        for (int n : N[r2]) qmor[P.then(f, n)] = id;
      }
  const int nq = Q->num_morphisms();
  Q->comp.assign(nq, std::vector<int>(nq, -1));
  std::vector<int> pick(nq, -1);
  for (int f = 0; f < P.num_morphisms(); ++f)
    if (qmor[f] >= 0 && pick[qmor[f]] < 0) pick[qmor[f]] = f;
  for (int a = 0; a < nq; ++a)
    for (int b = 0; b < nq; ++b)
      if (Q->cod[a] == Q->dom[b]) Q->comp[a][b] = qmor[P.then(pick[a], pick[b])];
  Q->finalize();
  vp.P2 = Q;

  vp.comparison = GroupoidMap{po.P, Q, {}, {}};
  for (int x = 0; x < nP; ++x) vp.comparison.on_objects.push_back(qobj[rep[x]]);
  for (int f = 0; f < P.num_morphisms(); ++f)
    vp.comparison.on_morphisms.push_back(qmor[P.then(P.then(P.inv[tau[P.dom[f]]], f), tau[P.cod[f]])]);
  vp.g2 = compose(vp.comparison, po.g_prime);
  vp.h2 = compose(vp.comparison, po.h_prime);
  (void)h;
  return vp;
}

// ---- co-spans ----

bool is_normal_form(const CoSpan& C) {
  const int nw = C.we_leg.source->num_objects(), no = C.other_leg.source->num_objects();
  if (C.apex->num_objects() != nw + no) return false;
  for (int i = 0; i < nw; ++i)
    if (C.we_leg.on_objects[i] != i) return false;
  for (int j = 0; j < no; ++j)
    if (C.other_leg.on_objects[j] != nw + j) return false;
  return true;
}

void validate_cospan(const CoSpan& C) {
  std::string why;
  if (C.we_leg.target != C.apex || C.other_leg.target != C.apex)
    throw Error(ErrorKind::InvalidArgument, "co-span legs must land in the apex");
  if (!is_functor(C.we_leg, &why)) throw Error(ErrorKind::InvalidArgument, "weak-equivalence leg: " + why);
  if (!is_functor(C.other_leg, &why)) throw Error(ErrorKind::InvalidArgument, "other leg: " + why);
  if (!is_normal_form(C)) throw Error(ErrorKind::InvalidArgument, "apex not in normal form");
  if (!is_equivalence(C.we_leg)) throw Error(ErrorKind::InvalidArgument, "leg is not a weak equivalence");
}

CospanComposite cospan_compose_traced(const CoSpan& K1, const CoSpan& K2) {
  if (!same_groupoid(K1.other_leg.source, K2.we_leg.source))
    throw Error(ErrorKind::MiddleMismatch, "middle groupoids differ");
  validate_cospan(K1);
  validate_cospan(K2);
  GroupoidMap gleg = K2.we_leg;
  GroupoidMap hleg = K1.other_leg;
  hleg.source = gleg.source;
  CospanComposite out;
  out.po = pushout(gleg, hleg);
  const auto& po = out.po;
  const int nK2 = K2.apex->num_objects();
  const int nF = K1.we_leg.source->num_objects();
  const int nG = K2.we_leg.source->num_objects();
  const int nH = K2.other_leg.source->num_objects();
  std::vector<int> keep;
  for (int i = 0; i < nF; ++i) keep.push_back(nK2 + i);
  for (int j = 0; j < nH; ++j) keep.push_back(nG + j);
  std::vector<int> origin;
  Gpd apex = full_subgroupoid(*po.P, keep, &origin);
  out.object_to_result.assign(po.P->num_objects(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) out.object_to_result[keep[i]] = i;
  out.morphism_to_result.assign(po.P->num_morphisms(), -1);
  for (int i = 0; i < static_cast<int>(origin.size()); ++i) out.morphism_to_result[origin[i]] = i;

  CoSpan R;
  R.apex = apex;
  R.we_leg = GroupoidMap{K1.we_leg.source, apex, {}, {}};
  for (int i = 0; i < nF; ++i) R.we_leg.on_objects.push_back(i);
  for (int f : K1.we_leg.on_morphisms) R.we_leg.on_morphisms.push_back(out.morphism_to_result[po.h_prime.on_morphisms[f]]);
  R.other_leg = GroupoidMap{K2.other_leg.source, apex, {}, {}};
  for (int j = 0; j < nH; ++j) R.other_leg.on_objects.push_back(nF + j);
  for (int f : K2.other_leg.on_morphisms)
    R.other_leg.on_morphisms.push_back(out.morphism_to_result[po.g_prime.on_morphisms[f]]);
  validate_cospan(R);
  out.result = R;
  return out;
}

CoSpan cospan_compose(const CoSpan& K1, const CoSpan& K2) { return cospan_compose_traced(K1, K2).result; }

std::vector<GroupoidMap> cospan_isos(const CoSpan& C1, const CoSpan& C2, std::size_t limit) {
  if (!same_groupoid(C1.we_leg.source, C2.we_leg.source) || !same_groupoid(C1.other_leg.source, C2.other_leg.source))
    throw Error(ErrorKind::InvalidArgument, "co-spans have different feet");
  if (!is_normal_form(C1) || !is_normal_form(C2)) throw Error(ErrorKind::InvalidArgument, "co-spans not in normal form");
  FunctorSearch o;
  o.iso_only = true;
  o.limit = limit;
  o.obj_fixed.resize(C1.apex->num_objects());
  std::iota(o.obj_fixed.begin(), o.obj_fixed.end(), 0);
  o.mor_fixed.assign(C1.apex->num_morphisms(), -1);
  auto force = [&](const GroupoidMap& a, const GroupoidMap& b) {
    for (std::size_t f = 0; f < a.on_morphisms.size(); ++f) {
      int& slot = o.mor_fixed[a.on_morphisms[f]];
      if (slot >= 0 && slot != b.on_morphisms[f]) return false;
      slot = b.on_morphisms[f];
    }
    return true;
  };
  if (C1.apex->num_objects() != C2.apex->num_objects()) return {};
  if (!force(C1.we_leg, C2.we_leg) || !force(C1.other_leg, C2.other_leg)) return {};
  return find_functors(C1.apex, C2.apex, o);
}

CoSpan identity_cospan(const Gpd& G) {
  auto A = std::make_shared<FiniteGroupoid>();
  const int no = G->num_objects(), nm = G->num_morphisms();
  for (const auto& o : G->objects) A->objects.push_back(o);
  for (const auto& o : G->objects) A->objects.push_back(o + "'");
  auto idx = [&](int i, int j, int f) { return (i * 2 + j) * nm + f; };
  const char* tags[2][2] = {{"", ">'"}, {"'>", "'"}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int f = 0; f < nm; ++f) {
        A->morphisms.push_back(G->morphisms[f] + tags[i][j]);
        A->dom.push_back(i * no + G->dom[f]);
        A->cod.push_back(j * no + G->cod[f]);
      }
  A->comp.assign(4 * nm, std::vector<int>(4 * nm, -1));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int f = 0; f < nm; ++f)
          for (int g = 0; g < nm; ++g)
            if (G->comp[f][g] >= 0) A->comp[idx(i, j, f)][idx(j, k, g)] = idx(i, k, G->comp[f][g]);
  A->finalize();
  CoSpan C;
  C.apex = A;
  C.we_leg = GroupoidMap{G, A, {}, {}};
  C.other_leg = GroupoidMap{G, A, {}, {}};
  for (int a = 0; a < no; ++a) {
    C.we_leg.on_objects.push_back(a);
    C.other_leg.on_objects.push_back(no + a);
  }
  for (int f = 0; f < nm; ++f) {
    C.we_leg.on_morphisms.push_back(idx(0, 0, f));
    C.other_leg.on_morphisms.push_back(idx(1, 1, f));
  }
  return C;
}

}  // namespace trunkan
