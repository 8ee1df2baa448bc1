#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "trunkan/gpd.hpp"
#include "trunkan/kan.hpp"

using namespace trunkan;

namespace {

SSet cat_nerve(const oracle::Cat& c) { return make_sset(oracle::nerve1(c)); }
SSet z2() { return cat_nerve(oracle::group_cat(oracle::cyclic(2))); }
// monoid {1, x} with x x = x
SSet idempotent() { return cat_nerve(oracle::group_cat({{0, 1}, {1, 1}})); }

// Oracle: scan every simplex of dimension m for horn position i and count the
// ones whose other faces match. Horn tuples come from a plain product scan.
struct HornStats {
  long horns = 0, unfillable = 0, multi = 0;
};
HornStats scan_horns(const TruncatedSSet& X, int m, int i) {
  HornStats st;
  const int cnt = X.size(m - 1);
  std::vector<int> x(m + 1, -1);
  std::function<void(int)> rec = [&](int p) {
    if (p > m) {
      for (int a = 0; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
          if (a != i && b != i && m >= 2 && X.face(m - 1, b - 1, x[a]) != X.face(m - 1, a, x[b])) return;
      ++st.horns;
      int fill = 0;
      for (int g = 0; g < X.size(m); ++g) {
        bool ok = true;
        for (int q = 0; q <= m; ++q)
          if (q != i && X.face(m, q, g) != x[q]) ok = false;
        fill += ok;
      }
      if (fill == 0) ++st.unfillable;
      if (fill > 1) ++st.multi;
      return;
    }
    if (p == i) return rec(p + 1);
    for (int v = 0; v < cnt; ++v) {
      x[p] = v;
      rec(p + 1);
    }
  };
  rec(0);
  return st;
}

// Remove one simplex of the top dimension.
RawSSet drop_top(const TruncatedSSet& X, int victim) {
  RawSSet r = X.raw();
  const int t = r.n + 1;
  r.simplices[t].erase(r.simplices[t].begin() + victim);
  for (auto& col : r.faces[t]) col.erase(col.begin() + victim);
  return r;
}

GroupoidMap object_inclusion(const Gpd& G, int a) {
  auto P = discrete_groupoid({"pt"});
  return GroupoidMap{P, G, {a}, {G->ident[a]}};
}

SimplicialMap as_nerve_map(const GroupoidMap& F) {
  return nerve_map(F, to_1groupoid(*F.source), to_1groupoid(*F.target), 1);
}

}  // namespace

TEST_CASE("axiom checks agree with the horn scan") {
  std::vector<SSet> xs = {z2(), idempotent(), cat_nerve(oracle::codiscrete_cat(2)),
                          cat_nerve(oracle::group_cat(oracle::cyclic(3))), disc(1, 1)};
  for (const SSet& X : xs) {
    bool cat_ok = true, gpd_ok = true;
    for (int m = 1; m <= 2; ++m)
      for (int i = 0; i <= m; ++i) {
        auto st = scan_horns(*X, m, i);
        CHECK(static_cast<long>(horns(*X, m, i).size()) == st.horns);
        bool bad = st.unfillable > 0 || (m == 2 && st.multi > 0);
        if (bad) {
          gpd_ok = false;
          if (i != 0 && i != m) cat_ok = false;
        }
      }
    // at m = n+2 = 3 every filler candidate is a 2-simplex completing a cycle
    for (int i = 0; i <= 3; ++i)
      for (const Horn& h : horns(*X, 3, i)) {
        auto f = fillers(*X, h);
        const bool bad = f.size() != 1;
        if (bad) {
          gpd_ok = false;
          if (i != 0 && i != 3) cat_ok = false;
        }
      }
    CHECK(check_n_category(*X).ok == cat_ok);
    CHECK(check_n_groupoid(*X).ok == gpd_ok);
  }
}

TEST_CASE("idempotent monoid is a 1-category but not a 1-groupoid") {
  SSet X = idempotent();
  CHECK(check_n_category(*X).ok);
  auto r = check_n_groupoid(*X);
  REQUIRE_FALSE(r.ok);
  const auto& w = r.failures.front();
  CHECK(w.axiom == "fill");
  CHECK((w.i == 0 || w.i == w.m));
  CHECK(fillers(*X, w.witness).empty());
  CHECK(check_n_groupoid(*z2()).ok);
  CHECK(check_n_groupoid(*point_sset(1)).ok);
  CHECK(check_n_groupoid(*point_sset(2)).ok);
}

TEST_CASE("removing the non-degenerate triangle of Z/2 breaks inner filling") {
  SSet X = z2();
  const int ss = X->find(2, "m1|m1");
  SSet Y = make_sset(drop_top(*X, ss));
  auto r = check_n_category(*Y);
  REQUIRE_FALSE(r.ok);
  CHECK(r.failures.front().axiom == "fill");
  CHECK(r.failures.front().m == 2);
  CHECK(r.failures.front().i == 1);
  CHECK(r.failures.front().witness.faces == std::vector<int>{1, 1});
}

TEST_CASE("composition in Z/2") {
  SSet X = z2();
  const int e = X->find(1, "m0"), s = X->find(1, "m1");
  CHECK(compose(*X, Horn{2, 1, {s, s}}) == e);
  // faces are (d0, d2) = (second, first)
  CHECK(compose(*X, Horn{2, 1, {e, s}}) == s);
  CHECK(compose(*X, Horn{2, 1, {s, e}}) == s);
  SSet P = point_sset(1);
  for (int i = 0; i <= 2; ++i) CHECK(fillers(*P, Horn{2, i, {0, 0}}) == std::vector<int>{0});
  SSet Y = make_sset(drop_top(*X, X->find(2, "m1|m1")));
  CHECK_THROWS_AS(fill_top(*Y, Horn{2, 1, {s, s}}), Error);
}

TEST_CASE("missing face boundary matches the filler boundary") {
  SSet X = disc(2, 1);
  for (int i = 0; i <= 2; ++i)
    for (const Horn& h : horns(*X, 2, i)) {
      auto b = missing_face_boundary(*X, h);
      for (int g : fillers(*X, h)) CHECK(X->boundary(1, X->face(2, i, g)) == b);
    }
}

TEST_CASE("homotopy sets against a direct witness scan") {
  std::vector<SSet> xs = {z2(), cat_nerve(oracle::group_cat(oracle::cyclic(3))),
                          cat_nerve(oracle::codiscrete_cat(3)), disc(2, 1)};
  for (const SSet& X : xs) {
    for (int a = 0; a < X->size(0); ++a) {
      // pi_1: loops at a, related by triangles (alpha, beta, const)
      auto T = pi_k(*X, a, 1);
      CHECK(T.equivalence);
      std::vector<int> loops;
      for (int f = 0; f < X->size(1); ++f)
        if (X->face(1, 0, f) == a && X->face(1, 1, f) == a) loops.push_back(f);
      CHECK(T.members == loops);
      std::set<std::pair<int, int>> rel;
      for (int g = 0; g < X->size(2); ++g)
        if (X->face(2, 2, g) == X->constant(1, a)) rel.insert({X->face(2, 0, g), X->face(2, 1, g)});
      for (int p : loops)
        for (int q : loops) CHECK((T.class_of(p) == T.class_of(q)) == (rel.count({p, q}) > 0));
    }
  }
  // frozen values
  CHECK(pi_k(*z2(), 0, 1).classes.size() == 2);
  CHECK(pi_k(*z2(), 0, 1).classes[0].size() == 1);
  CHECK(pi_k(*cat_nerve(oracle::codiscrete_cat(3)), 0, 0).classes.size() == 1);
  CHECK(pi_k(*point_sset(2), 0, 2).classes.size() == 1);
}

TEST_CASE("relation is equality at m >= n") {
  std::vector<SSet> xs = {z2(), cat_nerve(oracle::codiscrete_cat(2)), disc(2, 1)};
  for (const SSet& X : xs)
    for (const Cycle& b : cycles(*X, 0)) {
      auto T = s_classes(*X, b);
      for (const auto& c : T.classes) CHECK(c.size() == 1);
    }
}

TEST_CASE("weak equivalences between small groupoid nerves") {
  auto C2 = codiscrete_groupoid({"a", "b"});
  auto f = as_nerve_map(object_inclusion(C2, 0));
  auto v = is_weak_equivalence(f);
  CHECK(v.weq);
  CHECK(v.agree);
  auto Z2 = connected_groupoid({"*"}, oracle::cyclic(2));
  auto triv = connected_groupoid({"*"}, oracle::cyclic(1));
  GroupoidMap inc{triv, Z2, {0}, {0}};
  auto w = is_weak_equivalence(as_nerve_map(inc));
  CHECK_FALSE(w.weq);
  CHECK(w.agree);
  CHECK(w.fail_k == 1);
  SSet X = to_1groupoid(*Z2);
  CHECK(is_weak_equivalence(identity_map(X)).weq);
  CHECK_THROWS_AS(is_weak_equivalence(identity_map(idempotent())), Error);
  try {
    is_weak_equivalence(identity_map(idempotent()));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AxiomPrereqFailed);
  }

  CHECK(check_equivalence_witness(identity_map(X), identity_map(X)));
  CHECK(check_equivalence_witness(f, as_nerve_map(object_inclusion(C2, 1))));
  CHECK_FALSE(check_equivalence_witness(as_nerve_map(inc), identity_map(X)));
}

TEST_CASE("empty source convention") {
  auto E = discrete_groupoid({});
  auto C2 = codiscrete_groupoid({"a", "b"});
  GroupoidMap f{E, C2, {}, {}};
  CHECK_FALSE(is_weak_equivalence(as_nerve_map(f)).weq);
  GroupoidMap g{E, E, {}, {}};
  CHECK(is_weak_equivalence(as_nerve_map(g)).weq);
}
