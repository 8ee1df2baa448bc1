#include "trunkan/yoneda2.hpp"

#include <algorithm>
#include <functional>

#include "trunkan/error.hpp"
#include "trunkan/kan.hpp"

namespace trunkan {

namespace {

constexpr int kWord00 = 0, kWord01 = 1, kWord11 = 3;  // D^1_1, base-2 words

void require_2groupoid(const TruncatedSSet& G) {
  if (G.n() != 2) throw Error(ErrorKind::DimensionMismatch, "needs a 2-groupoid (n = 2)");
  auto rep = check_n_groupoid(G);
  if (!rep.ok) throw Error(ErrorKind::AxiomPrereqFailed, rep.failures[0].describe(G));
}

int we_size(const CoSpan& C) { return C.we_leg.source->num_objects(); }

// Morphisms from the weak-equivalence side to the other side of an apex.
bool is_cross(const CoSpan& C, int m) {
  const int nw = we_size(C);
  return C.apex->dom[m] < nw && C.apex->cod[m] >= nw;
}

int first_cross_from(const CoSpan& C, int obj) {
  const int nw = we_size(C);
  for (int b = nw; b < C.apex->num_objects(); ++b)
    for (int m : C.apex->hom(obj, b)) return m;
  return -1;
}

int first_cross_into(const CoSpan& C, int obj) {
  const int nw = we_size(C);
  for (int a = 0; a < nw; ++a)
    for (int m : C.apex->hom(a, obj)) return m;
  return -1;
}

std::vector<int> inverse_of(const std::vector<int>& v, int size) {
  std::vector<int> r(size, -1);
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] >= 0) r[v[i]] = i;
  return r;
}

// Identity on objects, fixed on both feet, cross morphisms from cross(x),
// reverse cross morphisms by inversion.
GroupoidMap fill_cospan_map(const CoSpan& S, const CoSpan& T, const std::function<int(int)>& cross) {
  const FiniteGroupoid& A = *S.apex;
  GroupoidMap F{S.apex, T.apex, {}, std::vector<int>(A.num_morphisms(), -1)};
  for (int o = 0; o < A.num_objects(); ++o) F.on_objects.push_back(o);
  for (std::size_t m = 0; m < S.we_leg.on_morphisms.size(); ++m)
    F.on_morphisms[S.we_leg.on_morphisms[m]] = T.we_leg.on_morphisms[m];
  for (std::size_t m = 0; m < S.other_leg.on_morphisms.size(); ++m)
    F.on_morphisms[S.other_leg.on_morphisms[m]] = T.other_leg.on_morphisms[m];
  for (int m = 0; m < A.num_morphisms(); ++m)
    if (is_cross(S, m)) F.on_morphisms[m] = cross(m);
  for (int m = 0; m < A.num_morphisms(); ++m)
    if (F.on_morphisms[m] < 0 && is_cross(S, A.inv[m])) F.on_morphisms[m] = T.apex->inv[F.on_morphisms[A.inv[m]]];
  for (int m = 0; m < A.num_morphisms(); ++m)
    if (F.on_morphisms[m] < 0) throw Error(ErrorKind::MissingMap, "apex morphism outside feet and cross parts");
  return F;
}

bool is_cospan_iso(const GroupoidMap& F, const CoSpan& S, const CoSpan& T, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (F.on_objects.size() != static_cast<std::size_t>(S.apex->num_objects()) ||
      F.on_morphisms.size() != static_cast<std::size_t>(S.apex->num_morphisms()))
    return fail("wrong size");
  for (int o = 0; o < S.apex->num_objects(); ++o)
    if (F.on_objects[o] != o) return fail("not the identity on objects");
  std::string w;
  if (!is_functor(F, &w)) return fail("not a functor: " + w);
  if (!is_isomorphism(F)) return fail("not an isomorphism");
  for (std::size_t m = 0; m < S.we_leg.on_morphisms.size(); ++m)
    if (F.on_morphisms[S.we_leg.on_morphisms[m]] != T.we_leg.on_morphisms[m]) return fail("moves the first foot");
  for (std::size_t m = 0; m < S.other_leg.on_morphisms.size(); ++m)
    if (F.on_morphisms[S.other_leg.on_morphisms[m]] != T.other_leg.on_morphisms[m]) return fail("moves the second foot");
  return true;
}

std::vector<std::vector<GroupoidMap>> product(const std::vector<std::vector<GroupoidMap>>& parts,
                                              const std::function<bool(const std::vector<GroupoidMap>&)>& keep,
                                              std::size_t limit) {
  std::vector<std::vector<GroupoidMap>> out;
  std::vector<GroupoidMap> cur;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == parts.size()) {
      if (keep(cur)) out.push_back(cur);
      return !(limit && out.size() >= limit);
    }
    for (const auto& F : parts[i]) {
      cur.push_back(F);
      const bool go = rec(i + 1);
      cur.pop_back();
      if (!go) return false;
    }
    return true;
  };
  rec(0);
  return out;
}

}  // namespace

// ---- star extension ----

StarExtension star_extension(const SSet& G, int a, bool check_prereq) {
  const TruncatedSSet& X = *G;
  if (a < 0 || a >= X.size(0)) throw Error(ErrorKind::IndexOutOfRange, "anchor out of range");
  if (check_prereq) {
    auto rep = check_n_groupoid(X);
    if (!rep.ok) throw Error(ErrorKind::AxiomPrereqFailed, rep.failures[0].describe(X));
  }
  const int n = X.n();
  std::string star = "*";
  while (X.find(0, star) >= 0) star += "'";
  // (simplex, mask): bit i set when vertex i is the new object
  std::vector<std::vector<std::pair<int, int>>> cells(n + 2);
  std::vector<std::map<std::pair<int, int>, int>> index(n + 2);
  RawSSet r;
  r.n = n;
  r.simplices.assign(n + 2, {});
  for (int k = 0; k <= n + 1; ++k) {
    for (int x = 0; x < X.size(k); ++x) {
      index[k][{x, 0}] = static_cast<int>(cells[k].size());
      cells[k].push_back({x, 0});
      r.simplices[k].push_back(X.name(k, x));
    }
    for (int x = 0; x < X.size(k); ++x) {
      int free = 0;
      for (int i = 0; i <= k; ++i)
        if (X.vertex(k, x, i) == a) free |= 1 << i;
      for (int mask = free; mask > 0; mask = (mask - 1) & free) {
        index[k][{x, mask}] = static_cast<int>(cells[k].size());
        cells[k].push_back({x, mask});
        if (k == 0) {
          r.simplices[k].push_back(star);
        } else {
          std::string s = X.name(k, x) + "[";
          for (int i = 0; i <= k; ++i) s += (mask >> i & 1) ? "*" : ".";
          r.simplices[k].push_back(s + "]");
        }
      }
    }
  }
  auto drop = [](int mask, int j) { return (mask & ((1 << j) - 1)) | ((mask >> (j + 1)) << j); };
  auto twice = [](int mask, int j) {
    const int low = mask & ((1 << (j + 1)) - 1);
    return low | ((mask >> j) << (j + 1));
  };
  r.faces.assign(n + 2, {});
  for (int m = 1; m <= n + 1; ++m)
    for (int j = 0; j <= m; ++j) {
      std::vector<int> f;
      for (auto [x, mask] : cells[m]) f.push_back(index[m - 1].at({X.face(m, j, x), drop(mask, j)}));
      r.faces[m].push_back(f);
    }
  r.degens.assign(n + 1, {});
  for (int m = 0; m <= n; ++m)
    for (int j = 0; j <= m; ++j) {
      std::vector<int> s;
      for (auto [x, mask] : cells[m]) s.push_back(index[m + 1].at({X.degen(m, j, x), twice(mask, j)}));
      r.degens[m].push_back(s);
    }
  StarExtension E;
  E.base = G;
  E.anchor = a;
  E.extended = make_sset(std::move(r));
  E.star = X.size(0);
  E.inclusion = SimplicialMap{G, E.extended, {}};
  for (int k = 0; k <= n + 1; ++k) {
    std::vector<int> c(X.size(k));
    for (int x = 0; x < X.size(k); ++x) c[x] = x;
    E.inclusion.components.push_back(c);
  }
  return E;
}

// ---- composites ----

Composite make_composite(const CoSpan& K1, const CoSpan& K2) {
  Composite C;
  C.K1 = K1;
  C.K2 = K2;
  C.traced = cospan_compose_traced(K1, K2);
  const auto& po = C.traced.po;
  const int np = po.P->num_morphisms();
  C.result_to_p = inverse_of(C.traced.morphism_to_result, C.apex()->num_morphisms());
  C.k1_from_p = inverse_of(po.h_prime.on_morphisms, np);
  C.k2_from_p = inverse_of(po.g_prime.on_morphisms, np);
  return C;
}

int Composite::join(int m1, int m2) const {
  const auto& po = traced.po;
  const FiniteGroupoid& P = *po.P;
  const int j = K1.apex->cod[m1] - we_size(K1);
  if (j < 0 || K2.apex->dom[m2] != j) throw Error(ErrorKind::InvalidArgument, "pair does not meet in the middle");
  const int p = P.then(P.then(po.h_prime.on_morphisms[m1], po.alpha[j]), po.g_prime.on_morphisms[m2]);
  const int x = traced.morphism_to_result[p];
  if (x < 0) throw Error(ErrorKind::InvalidArgument, "pair does not start and end on the outer feet");
  return x;
}

int Composite::left_factor(int x, int m2) const {
  const auto& po = traced.po;
  const FiniteGroupoid& P = *po.P;
  const int j = K2.apex->dom[m2];
  const int q1 = P.then(result_to_p[x], P.inv[po.g_prime.on_morphisms[m2]]);
  if (q1 < 0 || j >= we_size(K2)) throw Error(ErrorKind::InvalidArgument, "right factor does not end where x ends");
  const int m1 = k1_from_p[P.then(q1, P.inv[po.alpha[j]])];
  if (m1 < 0) throw Error(ErrorKind::MissingMap, "left factor outside the first apex");
  return m1;
}

int Composite::right_factor(int x, int m1) const {
  const auto& po = traced.po;
  const FiniteGroupoid& P = *po.P;
  const int j = K1.apex->cod[m1] - we_size(K1);
  if (j < 0) throw Error(ErrorKind::InvalidArgument, "left factor does not reach the middle");
  const int q1 = P.then(P.inv[po.alpha[j]], P.inv[po.h_prime.on_morphisms[m1]]);
  const int q = P.then(q1, result_to_p[x]);
  if (q < 0) throw Error(ErrorKind::InvalidArgument, "left factor does not start where x starts");
  const int m2 = k2_from_p[q];
  if (m2 < 0) throw Error(ErrorKind::MissingMap, "right factor outside the second apex");
  return m2;
}

// ---- context ----

YonedaContext::YonedaContext(SSet G, bool check_prereq) : G_(std::move(G)) {
  if (G_->n() != 2) throw Error(ErrorKind::DimensionMismatch, "needs a 2-groupoid (n = 2)");
  if (check_prereq) require_2groupoid(*G_);
  const TruncatedSSet& X = *G_;
  const int no = objects();
  hom_.assign(no, std::vector<Gpd>(no));
  hom_data_.assign(no, std::vector<HomGroupoid>(no));
  for (int c = 0; c < no; ++c)
    for (int x = 0; x < no; ++x) {
      hom_data_[c][x] = hom_left(G_, c, x, false);
      hom_[c][x] = hom_groupoid(hom_data_[c][x]);
    }
  for (int g = 0; g < edges(); ++g) loop_.push_back(edge_loop(G_, inverse_witness(X, g)));
  M_.assign(no, std::vector<CoSpan>(edges()));
  M_data_.assign(no, std::vector<HomGroupoid>(edges()));
  for (int x = 0; x < no; ++x)
    for (int g = 0; g < edges(); ++g) {
      const int c = dom(g), d = cod(g);
      HomGroupoid& H = M_data_[x][g];
      H = hom_right_disc(G_, loop_[g], x, false);
      Gpd apex = hom_groupoid(H);
      auto leg = [&](int from, int vertex, int word) {
        const HomGroupoid& F = hom_data_[from][x];
        GroupoidMap L{hom_[from][x], apex, {}, {}};
        for (const auto& [e, unused] : F.pairs[0]) L.on_objects.push_back(H.find(0, e, vertex));
        for (const auto& [s, unused] : F.pairs[1]) L.on_morphisms.push_back(H.find(1, left_to_right(s), word));
        return L;
      };
      CoSpan C{apex, leg(c, 0, kWord00), leg(d, 1, kWord11)};
      validate_cospan(C);
      M_[x][g] = C;
    }
}

int YonedaContext::hom_object(int c, int x, int edge) const { return hom_data_[c][x].find(0, edge, 0); }

int YonedaContext::edge_morphism(int x, int g, int sigma) const { return M_data_[x][g].find(1, sigma, kWord01); }

int YonedaContext::left_to_right(int sigma) const {
  const TruncatedSSet& X = *G_;
  const int p1 = X.face(2, 1, sigma);
  return compose(X, Horn{3, 3, {X.degen(1, 1, p1), sigma, X.degen(1, 0, p1)}});
}

const KFamily& YonedaContext::omega(int f) const {
  auto it = omega_.find(f);
  if (it == omega_.end()) it = omega_.emplace(f, omega_morphism(*this, f)).first;
  return it->second;
}

void YonedaContext::attach_composites(KFamily& KF) const {
  KF.lhs.clear();
  KF.rhs.clear();
  for (int g = 0; g < edges(); ++g) {
    KF.lhs.push_back(make_composite(M_[KF.a][g], KF.K[cod(g)]));
    KF.rhs.push_back(make_composite(KF.K[dom(g)], M_[KF.b][g]));
  }
}

// ---- omega ----

std::vector<Gpd> omega_object(const YonedaContext& ctx, int a) {
  if (a < 0 || a >= ctx.objects()) throw Error(ErrorKind::IndexOutOfRange, "object out of range");
  std::vector<Gpd> out;
  for (int c = 0; c < ctx.objects(); ++c) out.push_back(ctx.hom(c, a));
  return out;
}

KFamily omega_morphism(const YonedaContext& ctx, int f) {
  if (f < 0 || f >= ctx.edges()) throw Error(ErrorKind::IndexOutOfRange, "edge out of range");
  KFamily KF;
  KF.a = ctx.dom(f);
  KF.b = ctx.cod(f);
  KF.edge = f;
  for (int c = 0; c < ctx.objects(); ++c) {
    HomGroupoid H = hom_left_disc(ctx.base(), c, ctx.loop(f), false);
    Gpd apex = hom_groupoid(H);
    auto leg = [&](int x, int vertex, int word) {
      const HomGroupoid& F = ctx.hom_data(c, x);
      GroupoidMap L{ctx.hom(c, x), apex, {}, {}};
      for (const auto& [e, unused] : F.pairs[0]) L.on_objects.push_back(H.find(0, e, vertex));
      for (const auto& [s, unused] : F.pairs[1]) L.on_morphisms.push_back(H.find(1, s, word));
      return L;
    };
    CoSpan C{apex, leg(KF.a, 0, kWord00), leg(KF.b, 1, kWord11)};
    validate_cospan(C);
    KF.K.push_back(C);
    KF.source.push_back(std::move(H));
  }
  ctx.attach_composites(KF);
  for (int g = 0; g < ctx.edges(); ++g) KF.t.push_back(structure_map(ctx, KF, g));
  return KF;
}

GroupoidMap structure_map(const YonedaContext& ctx, const KFamily& KF, int g, bool every_choice) {
  if (KF.source.empty()) throw Error(ErrorKind::InvalidArgument, "structure maps by the horn recipe need omega data");
  const TruncatedSSet& X = *ctx.base();
  const Composite& L = KF.lhs[g];
  const Composite& R = KF.rhs[g];
  const int c = ctx.dom(g), d = ctx.cod(g);
  const CoSpan& Kc = KF.K[c];
  const CoSpan& Kd = KF.K[d];
  const int nL = we_size(L.result());
  const int nKd = we_size(Kd);
  auto image = [&](int x) {
    const int q = L.apex()->cod[x] - nL;
    const int h = L.apex()->dom[x];
    int out = -1;
    for (int u = 0; u < Kd.apex->num_morphisms(); ++u) {
      if (Kd.apex->cod[u] != nKd + q || !is_cross(Kd, u)) continue;
      const int v = L.left_factor(x, u);
      const int su = KF.source[d].pairs[1][u].first;
      const int sv = ctx.edge_hom(KF.a, g).pairs[1][v].first;
      for (int w = 0; w < Kc.apex->num_morphisms(); ++w) {
        if (Kc.apex->dom[w] != h || !is_cross(Kc, w)) continue;
        const int sw = KF.source[c].pairs[1][w].first;
        const int y = compose(X, Horn{3, 2, {su, sw, sv}});
        const int ym = ctx.edge_morphism(KF.b, g, y);
        if (ym < 0) throw Error(ErrorKind::MissingMap, "fourth face is not a cross morphism of M_b(g)");
        const int res = R.join(w, ym);
        if (out < 0) out = res;
        if (out != res)
          throw Error(ErrorKind::NotCoherent, "t depends on the representative at " + L.apex()->morphisms[x]);
        if (!every_choice) return out;
      }
      if (!every_choice && out >= 0) return out;
    }
    if (out < 0) throw Error(ErrorKind::NoCandidate, "no representative for " + L.apex()->morphisms[x]);
    return out;
  };
  return fill_cospan_map(L.result(), R.result(), image);
}

// ---- coherence ----

CoherenceReport check_coherence(const YonedaContext& ctx, const KFamily& KF, bool every_filler) {
  CoherenceReport rep;
  const TruncatedSSet& X = *ctx.base();
  auto fail = [&](const std::string& s, std::vector<int> w) {
    rep.ok = false;
    rep.failure = s;
    rep.witness = std::move(w);
    return rep;
  };
  if (static_cast<int>(KF.t.size()) != ctx.edges()) return fail("one structure map per edge expected", {});
  for (int g = 0; g < ctx.edges(); ++g) {
    std::string why;
    if (!is_cospan_iso(KF.t[g], KF.lhs[g].result(), KF.rhs[g].result(), &why))
      return fail("t at " + X.name(1, g) + " is not a co-span isomorphism: " + why, {g});
  }
  for (int g1 = 0; g1 < ctx.edges(); ++g1)  // g' : c' -> c
    for (int g = 0; g < ctx.edges(); ++g) {  // g : c -> d
      if (ctx.cod(g1) != ctx.dom(g)) continue;
      auto rhos = fillers(X, Horn{2, 1, {g, g1}});
      std::sort(rhos.begin(), rhos.end());
      if (!every_filler && !rhos.empty()) rhos.resize(1);
      const int c1 = ctx.dom(g1), c = ctx.dom(g), d = ctx.cod(g);
      const CoSpan& Ma1 = ctx.edge_cospan(KF.a, g1);
      const CoSpan& Ma = ctx.edge_cospan(KF.a, g);
      for (int rho : rhos) {
        const int h = X.face(2, 1, rho);
        for (int v1 = 0; v1 < Ma1.apex->num_morphisms(); ++v1) {
          if (!is_cross(Ma1, v1)) continue;
          const int p = Ma1.apex->cod[v1] - we_size(Ma1);
          const int sv1 = ctx.edge_hom(KF.a, g1).pairs[1][v1].first;
          for (int v = 0; v < Ma.apex->num_morphisms(); ++v) {
            if (!is_cross(Ma, v) || Ma.apex->dom[v] != p) continue;
            const int r = Ma.apex->cod[v] - we_size(Ma);
            const int sv = ctx.edge_hom(KF.a, g).pairs[1][v].first;
            const int xa = compose(X, Horn{3, 1, {sv, sv1, rho}});
            const int xam = ctx.edge_morphism(KF.a, h, xa);
            for (int u = 0; u < KF.K[d].apex->num_morphisms(); ++u) {
              if (!is_cross(KF.K[d], u) || KF.K[d].apex->dom[u] != r) continue;
              const int x2 = KF.t[g].on_morphisms[KF.lhs[g].join(v, u)];
              const int w = first_cross_from(KF.K[c], p);
              const int y = KF.rhs[g].right_factor(x2, w);
              const int x4 = KF.t[g1].on_morphisms[KF.lhs[g1].join(v1, w)];
              const int w1 = first_cross_from(KF.K[c1], Ma1.apex->dom[v1]);
              const int y1 = KF.rhs[g1].right_factor(x4, w1);
              const int sy = ctx.edge_hom(KF.b, g).pairs[1][y].first;
              const int sy1 = ctx.edge_hom(KF.b, g1).pairs[1][y1].first;
              const int z = compose(X, Horn{3, 1, {sy, sy1, rho}});
              const int zm = ctx.edge_morphism(KF.b, h, z);
              const int one = KF.t[h].on_morphisms[KF.lhs[h].join(xam, u)];
              const int two = KF.rhs[h].join(w1, zm);
              if (one != two)
                return fail("composition law fails for " + X.name(1, g1) + ", " + X.name(1, g) + " through " +
                                X.name(2, rho),
                            {g1, g, rho, v1, v, u});
            }
          }
        }
      }
    }
  return rep;
}

// ---- isomorphisms of families ----

bool intertwines(const YonedaContext& ctx, const KFamily& K1, const KFamily& K2, const std::vector<GroupoidMap>& phi,
                 std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (K1.a != K2.a || K1.b != K2.b) return fail("families between different objects");
  if (static_cast<int>(phi.size()) != ctx.objects()) return fail("one map per object expected");
  for (int c = 0; c < ctx.objects(); ++c) {
    std::string w;
    if (!is_cospan_iso(phi[c], K1.K[c], K2.K[c], &w)) return fail("component " + std::to_string(c) + ": " + w);
  }
  for (int k = 0; k < ctx.edges(); ++k) {
    const int c = ctx.dom(k), d = ctx.cod(k);
    const CoSpan& Ma = ctx.edge_cospan(K1.a, k);
    for (int v = 0; v < Ma.apex->num_morphisms(); ++v) {
      if (!is_cross(Ma, v)) continue;
      const int r = Ma.apex->cod[v] - we_size(Ma);
      for (int u = 0; u < K1.K[d].apex->num_morphisms(); ++u) {
        if (!is_cross(K1.K[d], u) || K1.K[d].apex->dom[u] != r) continue;
        const int x = K1.t[k].on_morphisms[K1.lhs[k].join(v, u)];
        const int w = first_cross_from(K1.K[c], Ma.apex->dom[v]);
        const int y = K1.rhs[k].right_factor(x, w);
        const int one = K2.rhs[k].join(phi[c].on_morphisms[w], y);
        const int two = K2.t[k].on_morphisms[K2.lhs[k].join(v, phi[d].on_morphisms[u])];
        if (one != two) return fail("does not commute with t at " + ctx.base()->name(1, k));
      }
    }
  }
  return true;
}

std::vector<std::vector<GroupoidMap>> kfamily_isos(const YonedaContext& ctx, const KFamily& K1, const KFamily& K2,
                                                   std::size_t limit) {
  if (K1.a != K2.a || K1.b != K2.b) return {};
  std::vector<std::vector<GroupoidMap>> parts;
  for (int c = 0; c < ctx.objects(); ++c) {
    parts.push_back(cospan_isos(K1.K[c], K2.K[c]));
    if (parts.back().empty()) return {};
  }
  return product(parts, [&](const std::vector<GroupoidMap>& phi) { return intertwines(ctx, K1, K2, phi); }, limit);
}

KFamily transport(const YonedaContext& ctx, const KFamily& KF, const std::vector<GroupoidMap>& psi) {
  if (static_cast<int>(psi.size()) != ctx.objects()) throw Error(ErrorKind::InvalidArgument, "one map per object expected");
  KFamily T;
  T.a = KF.a;
  T.b = KF.b;
  std::vector<std::vector<int>> back;
  for (int c = 0; c < ctx.objects(); ++c) {
    const CoSpan& C = KF.K[c];
    if (psi[c].source != C.apex && !(psi[c].source->num_morphisms() == C.apex->num_morphisms()))
      throw Error(ErrorKind::InvalidArgument, "transport map does not start at K(c)");
    if (!is_isomorphism(psi[c])) throw Error(ErrorKind::InvalidArgument, "transport map is not an isomorphism");
    for (int o = 0; o < C.apex->num_objects(); ++o)
      if (psi[c].on_objects[o] != o) throw Error(ErrorKind::InvalidArgument, "transport must fix objects");
    T.K.push_back(CoSpan{psi[c].target, compose(psi[c], C.we_leg), compose(psi[c], C.other_leg)});
    back.push_back(inverse_of(psi[c].on_morphisms, psi[c].target->num_morphisms()));
  }
  ctx.attach_composites(T);
  for (int k = 0; k < ctx.edges(); ++k) {
    const int c = ctx.dom(k), d = ctx.cod(k);
    auto image = [&](int x) {
      const int u1 = first_cross_into(T.K[d], T.lhs[k].apex()->cod[x] - we_size(T.lhs[k].result()) + we_size(T.K[d]));
      const int v = T.lhs[k].left_factor(x, u1);
      const int y0 = KF.t[k].on_morphisms[KF.lhs[k].join(v, back[d][u1])];
      const int w = first_cross_from(KF.K[c], KF.rhs[k].apex()->dom[y0]);
      const int y = KF.rhs[k].right_factor(y0, w);
      return T.rhs[k].join(psi[c].on_morphisms[w], y);
    };
    T.t.push_back(fill_cospan_map(T.lhs[k].result(), T.rhs[k].result(), image));
  }
  return T;
}

// ---- recovery, k = 1 ----

RecoveredMorphism recover_morphism(const YonedaContext& ctx, const KFamily& KF, bool check_pre) {
  const TruncatedSSet& X = *ctx.base();
  if (check_pre) {
    auto rep = check_coherence(ctx, KF);
    if (!rep.ok) throw Error(ErrorKind::NotCoherent, rep.failure);
  }
  const int a = KF.a, b = KF.b;
  const CoSpan& Ka = KF.K[a];
  const int one = ctx.hom_object(a, a, X.constant(1, a));
  const int u = first_cross_from(Ka, one);
  if (u < 0) throw Error(ErrorKind::NoCandidate, "no morphism from the identity into Hom(a,b) in K(a)");
  const int fobj = Ka.apex->cod[u] - we_size(Ka);
  RecoveredMorphism out;
  out.edge = ctx.hom_data(a, b).pairs[0][fobj].first;
  const KFamily& Kf = ctx.omega(out.edge);
  for (int c = 0; c < ctx.objects(); ++c) {
    auto image = [&](int v) {
      const int sv = Kf.source[c].pairs[1][v].first;  // (c, a, b) with face 0 = f
      const int g = X.face(2, 2, sv);                 // c -> a
      const int mv = ctx.edge_morphism(b, g, sv);
      const int mw = ctx.edge_morphism(a, g, X.degen(1, 1, g));
      if (mv < 0 || mw < 0) throw Error(ErrorKind::MissingMap, "edge co-span lacks a canonical morphism");
      const int x2 = KF.t[g].on_morphisms[KF.lhs[g].join(mw, u)];
      return KF.rhs[g].left_factor(x2, mv);
    };
    out.iso.push_back(fill_cospan_map(Kf.K[c], KF.K[c], image));
  }
  out.verified = intertwines(ctx, Kf, KF, out.iso);
  return out;
}

// ---- 2-cells ----

AlphaFamily alpha_frame(const YonedaContext& ctx, int f, int g, int h) {
  if (ctx.cod(f) != ctx.dom(g) || ctx.dom(f) != ctx.dom(h) || ctx.cod(g) != ctx.cod(h))
    throw Error(ErrorKind::InvalidArgument, "edges do not bound a triangle");
  AlphaFamily A;
  A.f = f;
  A.g = g;
  A.h = h;
  for (int x = 0; x < ctx.objects(); ++x) A.source.push_back(make_composite(ctx.omega(f).K[x], ctx.omega(g).K[x]));
  return A;
}

AlphaFamily omega_2cell(const YonedaContext& ctx, int gamma) {
  const TruncatedSSet& X = *ctx.base();
  if (gamma < 0 || gamma >= X.size(2)) throw Error(ErrorKind::IndexOutOfRange, "2-cell out of range");
  AlphaFamily A = alpha_frame(ctx, X.face(2, 2, gamma), X.face(2, 0, gamma), X.face(2, 1, gamma));
  const KFamily& Kf = ctx.omega(A.f);
  const KFamily& Kg = ctx.omega(A.g);
  const KFamily& Kh = ctx.omega(A.h);
  for (int x = 0; x < ctx.objects(); ++x) {
    const Composite& C = A.source[x];
    auto image = [&](int m) {
      const int u = first_cross_from(Kf.K[x], C.apex()->dom[m]);
      const int v = C.right_factor(m, u);
      const int su = Kf.source[x].pairs[1][u].first;
      const int sv = Kg.source[x].pairs[1][v].first;
      const int z = compose(X, Horn{3, 2, {gamma, sv, su}});
      const int zm = Kh.source[x].find(1, z, kWord01);
      if (zm < 0) throw Error(ErrorKind::MissingMap, "2-composite outside K_h");
      return zm;
    };
    A.alpha.push_back(fill_cospan_map(C.result(), Kh.K[x], image));
  }
  return A;
}

bool check_alpha(const YonedaContext& ctx, const AlphaFamily& A, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  const KFamily& Kf = ctx.omega(A.f);
  const KFamily& Kg = ctx.omega(A.g);
  const KFamily& Kh = ctx.omega(A.h);
  if (static_cast<int>(A.alpha.size()) != ctx.objects()) return fail("one map per object expected");
  for (int x = 0; x < ctx.objects(); ++x) {
    std::string w;
    if (!is_cospan_iso(A.alpha[x], A.source[x].result(), Kh.K[x], &w))
      return fail("component " + std::to_string(x) + ": " + w);
  }
  for (int k = 0; k < ctx.edges(); ++k) {
    const int c = ctx.dom(k), d = ctx.cod(k);
    const CoSpan& Ma = ctx.edge_cospan(Kf.a, k);
    for (int v = 0; v < Ma.apex->num_morphisms(); ++v) {
      if (!is_cross(Ma, v)) continue;
      const int p = Ma.apex->dom[v];
      const int r = Ma.apex->cod[v] - we_size(Ma);
      for (int uf = 0; uf < Kf.K[d].apex->num_morphisms(); ++uf) {
        if (!is_cross(Kf.K[d], uf) || Kf.K[d].apex->dom[uf] != r) continue;
        const int q = Kf.K[d].apex->cod[uf] - we_size(Kf.K[d]);
        for (int ug = 0; ug < Kg.K[d].apex->num_morphisms(); ++ug) {
          if (!is_cross(Kg.K[d], ug) || Kg.K[d].apex->dom[ug] != q) continue;
          const int z = A.alpha[d].on_morphisms[A.source[d].join(uf, ug)];
          const int one = Kh.t[k].on_morphisms[Kh.lhs[k].join(v, z)];
          const int x1 = Kf.t[k].on_morphisms[Kf.lhs[k].join(v, uf)];
          const int w1 = first_cross_from(Kf.K[c], p);
          const int y1 = Kf.rhs[k].right_factor(x1, w1);
          const int x2 = Kg.t[k].on_morphisms[Kg.lhs[k].join(y1, ug)];
          const int w2 = first_cross_from(Kg.K[c], Kf.K[c].apex->cod[w1] - we_size(Kf.K[c]));
          const int y2 = Kg.rhs[k].right_factor(x2, w2);
          const int w3 = A.alpha[c].on_morphisms[A.source[c].join(w1, w2)];
          const int two = Kh.rhs[k].join(w3, y2);
          if (one != two) return fail("does not intertwine t at " + ctx.base()->name(1, k));
        }
      }
    }
  }
  return true;
}

std::vector<AlphaFamily> alpha_families(const YonedaContext& ctx, int f, int g, int h, std::size_t limit) {
  AlphaFamily frame = alpha_frame(ctx, f, g, h);
  const KFamily& Kh = ctx.omega(h);
  std::vector<std::vector<GroupoidMap>> parts;
  for (int x = 0; x < ctx.objects(); ++x) {
    parts.push_back(cospan_isos(frame.source[x].result(), Kh.K[x]));
    if (parts.back().empty()) return {};
  }
  std::vector<AlphaFamily> out;
  for (auto& alpha : product(
           parts,
           [&](const std::vector<GroupoidMap>& al) {
             AlphaFamily A = frame;
             A.alpha = al;
             return check_alpha(ctx, A);
           },
           limit)) {
    AlphaFamily A = frame;
    A.alpha = std::move(alpha);
    out.push_back(std::move(A));
  }
  return out;
}

int recover_2cell(const YonedaContext& ctx, const AlphaFamily& A, bool check_pre) {
  const TruncatedSSet& X = *ctx.base();
  std::string why;
  if (check_pre && !check_alpha(ctx, A, &why)) throw Error(ErrorKind::InvalidArgument, "not an intertwining family: " + why);
  const int a = ctx.dom(A.f), b = ctx.cod(A.f);
  const KFamily& Kf = ctx.omega(A.f);
  const KFamily& Kg = ctx.omega(A.g);
  const KFamily& Kh = ctx.omega(A.h);
  const int u = Kf.source[a].find(1, X.degen(1, 0, A.f), kWord01);  // 1_a -> f
  const int v = first_cross_from(Kg.K[a], ctx.hom_object(a, b, A.f));
  if (u < 0 || v < 0) throw Error(ErrorKind::NoCandidate, "no element to evaluate at");
  const int zm = A.alpha[a].on_morphisms[A.source[a].join(u, v)];
  const int su = Kf.source[a].pairs[1][u].first;
  const int sv = Kg.source[a].pairs[1][v].first;
  const int sz = Kh.source[a].pairs[1][zm].first;
  const int gamma = compose(X, Horn{3, 0, {sv, sz, su}});
  AlphaFamily B = omega_2cell(ctx, gamma);
  for (int x = 0; x < ctx.objects(); ++x)
    if (B.alpha[x].on_morphisms != A.alpha[x].on_morphisms)
      throw Error(ErrorKind::NoCandidate, "the 2-cell read at a does not reproduce the family");
  return gamma;
}

}  // namespace trunkan
