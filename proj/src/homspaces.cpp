#include "trunkan/homspaces.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace trunkan {

namespace {

void require_groupoid(const TruncatedSSet& X) {
  auto rep = check_n_groupoid(X);
  if (!rep.ok) throw Error(ErrorKind::AxiomPrereqFailed, rep.failures[0].describe(X));
}

int disc_dim_l(const TruncatedSSet& D) { return D.size(0) - 1; }

bool degenerate_word(const std::vector<int>& w, int* j) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (w[p] == w[p + 1]) {
      if (j) *j = static_cast<int>(p);
      return true;
    }
  return false;
}

HomGroupoid build_hom(const SSet& X, int anchor, const SimplicialMap& f, bool left, bool check) {
  const int n = X->n();
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "Hom needs truncation level >= 1");
  if (anchor < 0 || anchor >= X->size(0)) throw Error(ErrorKind::IndexOutOfRange, "anchor object out of range");
  if (!f.source || !f.target || f.source->n() != n || f.target->n() != n)
    throw Error(ErrorKind::DimensionMismatch, "disc map must live at the level of the base");
  if (check) {
    require_groupoid(*X);
    if (auto v = validate_map(f)) throw Error(ErrorKind::AxiomPrereqFailed, "disc map: " + v->describe(f));
  }
  const TruncatedSSet& G = *X;
  const TruncatedSSet& D = *f.source;
  HomGroupoid H;
  H.base = X;
  H.anchor = anchor;
  H.left = left;
  H.target = f;
  H.l = disc_dim_l(D);
  H.pairs.assign(n + 1, {});
  H.index.assign(n + 1, {});
  RawSSet r;
  r.n = n - 1;
  r.simplices.assign(n + 1, {});
  for (int k = 0; k <= n; ++k) {
    const int r_face = left ? 0 : k + 1;
    const int r_vertex = left ? 0 : k + 1;
    for (int e = 0; e < D.size(k); ++e) {
      const int fe = f(k, e);
      for (int g : G.with_face(k + 1, r_face, fe)) {
        if (G.vertex(k + 1, g, r_vertex) != anchor) continue;
        H.index[k][{g, e}] = static_cast<int>(H.pairs[k].size());
        H.pairs[k].push_back({g, e});
        r.simplices[k].push_back(H.l == 0 ? G.name(k + 1, g) : G.name(k + 1, g) + "@" + D.name(k, e));
      }
    }
  }
  auto look = [&](int k, int g, int e) {
    auto it = H.index[k].find({g, e});
    if (it == H.index[k].end()) throw Error(ErrorKind::MissingMap, "Hom is not closed under structure maps");
    return it->second;
  };
  const int sh = left ? 1 : 0;
  r.faces.assign(n + 1, {});
  for (int k = 1; k <= n; ++k) {
    r.faces[k].assign(k + 1, std::vector<int>(H.pairs[k].size()));
    for (int j = 0; j <= k; ++j)
      for (std::size_t x = 0; x < H.pairs[k].size(); ++x) {
        auto [g, e] = H.pairs[k][x];
        r.faces[k][j][x] = look(k - 1, G.face(k + 1, j + sh, g), D.face(k, j, e));
      }
  }
  r.degens.assign(n, {});
  for (int k = 0; k <= n - 1; ++k) {
    r.degens[k].assign(k + 1, std::vector<int>(H.pairs[k].size()));
    for (int j = 0; j <= k; ++j)
      for (std::size_t x = 0; x < H.pairs[k].size(); ++x) {
        auto [g, e] = H.pairs[k][x];
        r.degens[k][j][x] = look(k + 1, G.degen(k + 1, j + sh, g), D.degen(k, j, e));
      }
  }
  H.result = make_sset(std::move(r));
  SSet Dt = disc(H.l, n - 1);
  H.projection = SimplicialMap{H.result, Dt, {}};
  for (int k = 0; k <= n; ++k) {
    std::vector<int> c;
    for (const auto& [g, e] : H.pairs[k]) c.push_back(e);
    H.projection.components.push_back(c);
  }
  return H;
}

}  // namespace

int HomGroupoid::find(int k, int g, int e) const {
  if (k < 0 || k >= static_cast<int>(index.size())) return -1;
  auto it = index[k].find({g, e});
  return it == index[k].end() ? -1 : it->second;
}

SimplicialMap point_map(const SSet& X, int b) {
  if (b < 0 || b >= X->size(0)) throw Error(ErrorKind::IndexOutOfRange, "object out of range");
  SimplicialMap f{disc(0, X->n()), X, {}};
  for (int k = 0; k <= X->n() + 1; ++k) f.components.push_back({X->constant(k, b)});
  return f;
}

SimplicialMap restrict_disc(const SimplicialMap& f, const std::vector<int>& phi) {
  const int l = disc_dim_l(*f.source);
  SimplicialMap p = disc_map(phi, static_cast<int>(phi.size()) - 1, l, f.source->n());
  SimplicialMap out = compose(f, p);
  out.source = p.source;
  out.target = f.target;
  return out;
}

HomGroupoid hom_left_disc(const SSet& X, int a, const SimplicialMap& f, bool check_prereq) {
  return build_hom(X, a, f, true, check_prereq);
}

HomGroupoid hom_left(const SSet& X, int a, int b, bool check_prereq) {
  return build_hom(X, a, point_map(X, b), true, check_prereq);
}

HomGroupoid hom_right_disc(const SSet& X, const SimplicialMap& f, int x, bool check_prereq) {
  return build_hom(X, x, f, false, check_prereq);
}

HomGroupoid hom_right(const SSet& X, int a, int b, bool check_prereq) {
  return build_hom(X, b, point_map(X, a), false, check_prereq);
}

UnderCategory under(const SSet& X, int v, bool check_prereq) {
  const TruncatedSSet& G = *X;
  const int n = G.n();
  if (v < 0 || v >= G.size(0)) throw Error(ErrorKind::IndexOutOfRange, "object out of range");
  if (check_prereq) {
    auto rep = check_n_category(G);
    if (!rep.ok) throw Error(ErrorKind::AxiomPrereqFailed, rep.failures[0].describe(G));
  }
  UnderCategory U;
  U.extended = extend_dimension(G, n + 2);
  const auto& ext = U.extended.elements;
  RawSSet r;
  r.n = n;
  r.simplices.assign(n + 2, {});
  U.origin.assign(n + 2, {});
  std::vector<std::map<int, int>> pos(n + 2);
  for (int k = 0; k <= n; ++k)
    for (int g = 0; g < G.size(k + 1); ++g)
      if (G.vertex(k + 1, g, 0) == v) {
        pos[k][g] = static_cast<int>(U.origin[k].size());
        U.origin[k].push_back(g);
        r.simplices[k].push_back(G.name(k + 1, g));
      }
  std::map<std::vector<int>, int> ext_index;
  for (int t = 0; t < static_cast<int>(ext.size()); ++t) {
    ext_index[ext[t]] = t;
    // vertex 0 lies on face 1
    if (G.vertex(n + 1, ext[t][1], 0) != v) continue;
    pos[n + 1][t] = static_cast<int>(U.origin[n + 1].size());
    U.origin[n + 1].push_back(t);
    std::string s = "<";
    for (std::size_t j = 0; j < ext[t].size(); ++j) s += (j ? "," : "") + G.name(n + 1, ext[t][j]);
    r.simplices[n + 1].push_back(s + ">");
  }
  r.faces.assign(n + 2, {});
  for (int k = 1; k <= n + 1; ++k) {
    r.faces[k].assign(k + 1, std::vector<int>(U.origin[k].size()));
    for (int j = 0; j <= k; ++j)
      for (std::size_t x = 0; x < U.origin[k].size(); ++x) {
        const int o = U.origin[k][x];
        const int fj = k <= n ? G.face(k + 1, j + 1, o) : ext[o][j + 1];
        r.faces[k][j][x] = pos[k - 1].at(fj);
      }
  }
  r.degens.assign(n + 1, {});
  for (int k = 0; k <= n; ++k) {
    r.degens[k].assign(k + 1, std::vector<int>(U.origin[k].size()));
    for (int j = 0; j <= k; ++j)
      for (std::size_t x = 0; x < U.origin[k].size(); ++x) {
        const int g = U.origin[k][x];
        if (k < n) {
          r.degens[k][j][x] = pos[k + 1].at(G.degen(k + 1, j + 1, g));
          continue;
        }
        // s_{j+1} g in Cyc(n+2), through the simplicial identities
        const int jj = j + 1, m = n + 1;
        std::vector<int> b(m + 2);
        for (int i = 0; i <= m + 1; ++i) {
          if (i < jj)
            b[i] = G.degen(m - 1, jj - 1, G.face(m, i, g));
          else if (i == jj || i == jj + 1)
            b[i] = g;
          else
            b[i] = G.degen(m - 1, jj, G.face(m, i - 1, g));
        }
        auto it = ext_index.find(b);
        if (it == ext_index.end()) throw Error(ErrorKind::MissingMap, "degenerate cycle missing from Cyc(n+2)");
        r.degens[k][j][x] = pos[n + 1].at(it->second);
      }
  }
  U.result = make_sset(std::move(r));
  U.projection = SimplicialMap{U.result, X, {}};
  for (int k = 0; k <= n + 1; ++k) {
    std::vector<int> c;
    for (int o : U.origin[k]) c.push_back(k <= n ? G.face(k + 1, 0, o) : ext[o][0]);
    U.projection.components.push_back(c);
  }
  return U;
}

Gpd hom_groupoid(const HomGroupoid& H) { return from_1groupoid(*H.result); }

GroupoidMap as_functor(const SimplicialMap& f, const Gpd& src, const Gpd& tgt) {
  if (f.source->n() != 1) throw Error(ErrorKind::DimensionMismatch, "as_functor needs level-1 complexes");
  return GroupoidMap{src, tgt, f.components[0], f.components[1]};
}

std::vector<SimplicialMap> disc_maps(const SSet& X, int l, const std::map<std::pair<int, int>, int>& fixed,
                                     std::size_t limit) {
  const TruncatedSSet& G = *X;
  const int n = G.n();
  SSet D = disc(l, n);
  std::vector<std::pair<int, int>> order;
  for (int k = 0; k <= n + 1; ++k)
    for (int w = 0; w < D->size(k); ++w) order.push_back({k, w});
  for (const auto& [kw, val] : fixed)
    if (kw.first < 0 || kw.first > n + 1 || kw.second < 0 || kw.second >= D->size(kw.first) || val < 0 ||
        val >= G.size(kw.first))
      throw Error(ErrorKind::IndexOutOfRange, "fixed disc value out of range");
  std::vector<std::vector<int>> val(n + 2);
  for (int k = 0; k <= n + 1; ++k) val[k].assign(D->size(k), -1);
  // cofaces, to reject a partial assignment as soon as some simplex of the
  // next dimension has all faces chosen but no admissible value
  std::vector<std::vector<std::vector<int>>> cofaces(n + 2);
  for (int k = 0; k <= n; ++k) {
    cofaces[k].assign(D->size(k), {});
    for (int u = 0; u < D->size(k + 1); ++u)
      for (int i = 0; i <= k + 1; ++i) cofaces[k][D->face(k + 1, i, u)].push_back(u);
  }
  auto consistent = [&](int k, int w) {
    if (k > n) return true;
    for (int u : cofaces[k][w]) {
      std::vector<int> b(k + 2);
      bool ready = true;
      for (int i = 0; i <= k + 1 && ready; ++i) {
        b[i] = val[k][D->face(k + 1, i, u)];
        ready = b[i] >= 0;
      }
      if (ready && !G.with_boundary(k + 1, b)) return false;
    }
    return true;
  };
  std::vector<SimplicialMap> out;
  const std::vector<int> none;
  std::vector<int> all_vertices(G.size(0));
  for (int v = 0; v < G.size(0); ++v) all_vertices[v] = v;
  std::function<bool(std::size_t)> rec = [&](std::size_t p) -> bool {
    if (p == order.size()) {
      out.push_back(SimplicialMap{D, X, val});
      return !(limit && out.size() >= limit);
    }
    const auto [k, w] = order[p];
    auto fx = fixed.find({k, w});
    const auto word = disc_word(l, k, w);
    int j = -1;
    if (k >= 1 && degenerate_word(word, &j)) {
      auto shorter = word;
      shorter.erase(shorter.begin() + j);
      const int forced = G.degen(k - 1, j, val[k - 1][disc_word_index(l, shorter)]);
      if (fx != fixed.end() && fx->second != forced) return true;
      val[k][w] = forced;
      const bool go = !consistent(k, w) || rec(p + 1);
      val[k][w] = -1;
      return go;
    }
    const std::vector<int>* cand = &all_vertices;
    if (k >= 1) {
      std::vector<int> b(k + 1);
      for (int i = 0; i <= k; ++i) b[i] = val[k - 1][D->face(k, i, w)];
      cand = G.with_boundary(k, b);
      if (!cand) cand = &none;
    }
    for (int c : *cand) {
      if (fx != fixed.end() && fx->second != c) continue;
      val[k][w] = c;
      if (consistent(k, w) && !rec(p + 1)) return false;
    }
    val[k][w] = -1;
    return true;
  };
  rec(0);
  return out;
}

int inverse_witness(const TruncatedSSet& X, int f) {
  const int b = X.face(1, 0, f);
  for (int h : X.with_face(2, 0, f))
    if (X.face(2, 1, h) == X.constant(1, b)) return h;
  throw Error(ErrorKind::NoFiller, "no inverse witness for edge " + X.name(1, f));
}

SimplicialMap edge_loop(const SSet& X, int h) {
  const int w = disc_word_index(1, {1, 0, 1});
  auto maps = disc_maps(X, 1, {{{2, w}, h}}, 2);
  if (maps.empty()) throw Error(ErrorKind::NoCandidate, "no disc map through " + X->name(2, h));
  if (maps.size() > 1) throw Error(ErrorKind::NotUnique, "several disc maps through " + X->name(2, h));
  return maps[0];
}

FibrationReport is_kan_fibration(const SimplicialMap& p) {
  FibrationReport rep;
  const TruncatedSSet& E = *p.source;
  const TruncatedSSet& B = *p.target;
  const int N = E.n();
  if (B.n() != N) throw Error(ErrorKind::DimensionMismatch, "fibration ends at different levels");
  for (int m = 1; m <= N + 2 && rep.ok; ++m)
    for (int i = 0; i <= m && rep.ok; ++i) {
      const bool top = m >= N + 1;
      const int img_dim = m <= N + 1 ? m : N + 1;
      for_each_horn(E, m, i, [&](const std::vector<int>& x) {
        Horn up{m, i, {}}, down{m, i, {}};
        for (int q = 0; q <= m; ++q)
          if (q != i) {
            up.faces.push_back(x[q]);
            down.faces.push_back(p(m - 1, x[q]));
          }
        const auto lifts = fillers(E, up);
        for (int d : fillers(B, down)) {
          int cnt = 0;
          for (int e : lifts) cnt += p(img_dim, e) == d;
          if (cnt == 0 || (top && cnt > 1)) {
            rep.ok = false;
            rep.m = m;
            rep.i = i;
            rep.witness = up;
            rep.downstairs = d;
            rep.failure = std::string(cnt == 0 ? "no lift" : "several lifts") + " at m=" + std::to_string(m) +
                          ", i=" + std::to_string(i) + " over " + B.name(img_dim, d);
            return false;
          }
        }
        return true;
      });
    }
  return rep;
}

SimplicialMap induced_map(const HomGroupoid& S, const HomGroupoid& T, const std::vector<int>& phi) {
  if (S.base != T.base || S.anchor != T.anchor || S.left != T.left)
    throw Error(ErrorKind::InvalidArgument, "induced map needs Hom objects over the same base and anchor");
  const int r = S.l, l = T.l;
  if (static_cast<int>(phi.size()) != r + 1) throw Error(ErrorKind::InvalidArgument, "phi must be defined on 0..r");
  for (int x : phi)
    if (x < 0 || x > l) throw Error(ErrorKind::InvalidArgument, "phi value out of range");
  const int n = S.base->n();
  auto image = [&](int k, int e) {
    auto w = disc_word(r, k, e);
    for (int& d : w) d = phi[d];
    return disc_word_index(l, w);
  };
  for (int k = 0; k <= n + 1; ++k)
    for (int e = 0; e < S.target.source->size(k); ++e)
      if (S.target(k, e) != T.target(k, image(k, e)))
        throw Error(ErrorKind::InvalidArgument, "source Hom is not taken over f o phi");
  SimplicialMap m{S.result, T.result, {}};
  for (int k = 0; k <= n; ++k) {
    std::vector<int> c;
    for (const auto& [g, e] : S.pairs[k]) {
      const int y = T.find(k, g, image(k, e));
      if (y < 0) throw Error(ErrorKind::MissingMap, "induced map leaves the target Hom");
      c.push_back(y);
    }
    m.components.push_back(c);
  }
  return m;
}

Gpd hom_edge_explicit(const SSet& X, int v, int f, int h, bool check_prereq) {
  const TruncatedSSet& G = *X;
  if (G.n() != 2) throw Error(ErrorKind::DimensionMismatch, "explicit edge Hom needs a 2-groupoid");
  if (check_prereq) require_groupoid(G);
  const int a = G.face(1, 1, f), b = G.face(1, 0, f);
  if (G.face(2, 0, h) != f || G.face(2, 1, h) != G.constant(1, b))
    throw Error(ErrorKind::InvalidArgument, "h does not exhibit an inverse of f");
  const int finv = G.face(2, 2, h);
  const SimplicialMap gamma = edge_loop(X, h);
  const int ends[2] = {a, b};

  auto R = std::make_shared<FiniteGroupoid>();
  std::map<std::pair<int, int>, int> obj;  // (edge v -> end, part)
  for (int part = 0; part < 2; ++part)
    for (int e : G.with_face(1, 0, ends[part]))
      if (G.face(1, 1, e) == v) {
        obj[{e, part}] = R->num_objects();
        R->objects.push_back(std::string(part ? "b:" : "a:") + G.name(1, e));
      }
  struct Mor {
    int g;
    int w0, w1;
  };
  std::vector<Mor> mors;
  std::map<std::tuple<int, int, int>, int> mor_index;
  auto add_part = [&](int face0, int w0, int w1, const char* tag) {
    for (int g : G.with_face(2, 0, face0)) {
      if (G.vertex(2, g, 0) != v) continue;
      mor_index[{g, w0, w1}] = static_cast<int>(mors.size());
      mors.push_back({g, w0, w1});
      R->morphisms.push_back(std::string(tag) + G.name(2, g));
      R->dom.push_back(obj.at({G.face(2, 2, g), w0}));
      R->cod.push_back(obj.at({G.face(2, 1, g), w1}));
    }
  };
  add_part(G.constant(1, a), 0, 0, "a:");
  add_part(G.constant(1, b), 1, 1, "b:");
  add_part(f, 0, 1, "X:");
  add_part(finv, 1, 0, "X'");
  const int nm = static_cast<int>(mors.size());
  R->comp.assign(nm, std::vector<int>(nm, -1));
  for (int p = 0; p < nm; ++p)
    for (int q = 0; q < nm; ++q) {
      if (R->cod[p] != R->dom[q]) continue;
      const std::vector<int> word = {mors[p].w0, mors[p].w1, mors[q].w1};
      const int face0 = gamma(2, disc_word_index(1, word));
      const int filler = fill_top(G, Horn{3, 2, {face0, mors[q].g, mors[p].g}});
      const int c = G.face(3, 2, filler);
      auto it = mor_index.find({c, word[0], word[2]});
      if (it == mor_index.end()) throw Error(ErrorKind::MissingMap, "composite outside the explicit Hom");
      R->comp[p][q] = it->second;
    }
  R->finalize();
  return R;
}

CoSpan hom_cospan(const SSet& X, int a, const SimplicialMap& f, const Gpd& foot0, const Gpd& foot1) {
  HomGroupoid H = hom_left_disc(X, a, f, false);
  HomGroupoid H0 = hom_left_disc(X, a, restrict_disc(f, {0}), false);
  HomGroupoid H1 = hom_left_disc(X, a, restrict_disc(f, {1}), false);
  Gpd apex = hom_groupoid(H);
  return CoSpan{apex, as_functor(induced_map(H0, H, {0}), foot0, apex), as_functor(induced_map(H1, H, {1}), foot1, apex)};
}

CompReport hom_comp_check(const SSet& X, int a, const SimplicialMap& gamma) {
  CompReport rep;
  if (X->n() != 2) throw Error(ErrorKind::DimensionMismatch, "composition check needs a 2-groupoid");
  if (disc_dim_l(*gamma.source) != 2) throw Error(ErrorKind::InvalidArgument, "composition check needs D^2");
  try {
    HomGroupoid full = hom_left_disc(X, a, gamma, false);
    std::vector<HomGroupoid> pt, ed;
    std::vector<Gpd> ptg, edg;
    for (int i = 0; i < 3; ++i) {
      pt.push_back(hom_left_disc(X, a, restrict_disc(gamma, {i}), false));
      ptg.push_back(hom_groupoid(pt.back()));
    }
    const std::vector<std::vector<int>> edges = {{0, 1}, {1, 2}, {0, 2}};
    for (const auto& e : edges) {
      ed.push_back(hom_left_disc(X, a, restrict_disc(gamma, e), false));
      edg.push_back(hom_groupoid(ed.back()));
    }
    Gpd fullg = hom_groupoid(full);
    auto leg = [&](int vtx, int edge, int slot) {
      return as_functor(induced_map(pt[vtx], ed[edge], {slot}), ptg[vtx], edg[edge]);
    };
    auto into = [&](int edge) { return as_functor(induced_map(ed[edge], full, edges[edge]), edg[edge], fullg); };

    // glued along the fibre over the middle vertex
    const GroupoidMap g = leg(1, 0, 1), h = leg(1, 1, 0);
    const GroupoidMap g1 = into(0), h1 = into(1);
    Pushout po = pushout(g, h);
    std::vector<int> beta;
    for (int c = 0; c < g.source->num_objects(); ++c) {
      const int x = g1.on_objects[g.on_objects[c]];
      if (h1.on_objects[h.on_objects[c]] != x) throw Error(ErrorKind::NoMediator, "legs disagree on the middle fibre");
      beta.push_back(fullg->ident[x]);
    }
    GroupoidMap med = check_pushout_universal(po, g, h, g1, h1, beta);
    VariantPushout vp = variant_pushout(po, g, h);
    GroupoidMap m2{vp.P2, fullg, std::vector<int>(vp.P2->num_objects(), -1),
                   std::vector<int>(vp.P2->num_morphisms(), -1)};
    bool defined = true;
    for (int o = 0; o < po.P->num_objects(); ++o) {
      int& t = m2.on_objects[vp.comparison.on_objects[o]];
      if (t >= 0 && t != med.on_objects[o]) defined = false;
      t = med.on_objects[o];
    }
    for (int f = 0; f < po.P->num_morphisms(); ++f) {
      int& t = m2.on_morphisms[vp.comparison.on_morphisms[f]];
      if (t >= 0 && t != med.on_morphisms[f]) defined = false;
      t = med.on_morphisms[f];
    }
    for (int t : m2.on_objects) defined = defined && t >= 0;
    for (int t : m2.on_morphisms) defined = defined && t >= 0;
    rep.pushout_iso = defined && is_functor(m2) && is_isomorphism(m2);
    if (!rep.pushout_iso) rep.failure = "mediator does not descend to an isomorphism from the glued pushout";

    CoSpan K1{edg[0], leg(0, 0, 0), leg(1, 0, 1)};
    CoSpan K2{edg[1], leg(1, 1, 0), leg(2, 1, 1)};
    CoSpan C02{edg[2], leg(0, 2, 0), leg(2, 2, 1)};
    CoSpan C = cospan_compose(K1, K2);
    rep.compose_iso = !cospan_isos(C, C02, 1).empty();
    if (!rep.compose_iso && rep.failure.empty()) rep.failure = "co-span composite is not isomorphic to Hom over 0->2";
  } catch (const Error& e) {
    rep.failure = e.what();
  }
  rep.ok = rep.pushout_iso && rep.compose_iso;
  return rep;
}

}  // namespace trunkan
