#include <algorithm>
#include <set>

#include "doctest.h"
#include "trunkan/gpd.hpp"
#include "trunkan/homspaces.hpp"
#include "trunkan/kan.hpp"
#include "trunkan/testkit.hpp"

using namespace trunkan;
namespace tk = trunkan::testkit;

namespace {

SSet z2_nerve(int n) { return nerve(*connected_groupoid({"*"}, tk::group("Z2").mul), n); }
SSet codiscrete2(int n) { return nerve(*codiscrete_groupoid({"a", "b"}), n); }
SSet z3_to_1() { return tk::nerve_crossed_module(tk::trivial_crossed_module(tk::group("Z3"), tk::group("Z1"))); }

// Oracle: scan X_{k+1} x D_k for pairs with vertex 0 = a and face 0 = f(e),
// then push every monotone map through the definition (g, e) -> (t+ g, t e).
void check_against_scan(const SSet& X, int a, const SimplicialMap& f) {
  const HomGroupoid H = hom_left_disc(X, a, f);
  const TruncatedSSet& G = *X;
  const TruncatedSSet& D = *f.source;
  const int n = G.n();
  for (int k = 0; k <= n; ++k) {
    std::set<std::pair<int, int>> scan;
    for (int g = 0; g < G.size(k + 1); ++g)
      for (int e = 0; e < D.size(k); ++e)
        if (G.apply(vertex_map(k + 1, 0), g) == a && G.apply(omit(k + 1, 0), g) == f(k, e)) scan.insert({g, e});
    std::set<std::pair<int, int>> got(H.pairs[k].begin(), H.pairs[k].end());
    REQUIRE(got == scan);
    REQUIRE(H.result->size(k) == static_cast<int>(scan.size()));
  }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (const Mono& t : monotone_maps(i, j))
        for (int x = 0; x < H.result->size(j); ++x) {
          auto [g, e] = H.pairs[j][x];
          const int y = H.result->apply(t, x);
          CHECK(H.pairs[i][y] == std::make_pair(G.apply(plus_left(t), g), D.apply(t, e)));
        }
}

// Maps D^l -> nerve(G) are functors from the codiscrete groupoid on l+1
// objects: free choice of the arrows 0 -> i.
long long functor_count(const FiniteGroupoid& G, int l) {
  long long total = 0;
  const int no = G.num_objects();
  std::vector<int> obj(l + 1, 0);
  for (;;) {
    long long p = 1;
    for (int i = 1; i <= l; ++i) {
      int c = 0;
      for (int m = 0; m < G.num_morphisms(); ++m) c += G.dom[m] == obj[0] && G.cod[m] == obj[i];
      p *= c;
    }
    total += p;
    int q = 0;
    while (q <= l && ++obj[q] == no) obj[q++] = 0;
    if (q > l) break;
  }
  return total;
}

SimplicialMap constant_disc(const SSet& X, int l, int c) {
  SSet D = disc(l, X->n());
  SimplicialMap f{D, X, {}};
  for (int k = 0; k <= X->n() + 1; ++k) f.components.push_back(std::vector<int>(D->size(k), X->constant(k, c)));
  return f;
}

bool weq(const SimplicialMap& m) { return is_weak_equivalence(m).weq; }

}  // namespace

TEST_CASE("under-category") {
  auto P = under(point_sset(1), 0);
  for (int k = 0; k <= 2; ++k) CHECK(P.result->size(k) == 1);

  auto X = z2_nerve(1);
  auto U = under(X, 0);
  CHECK(U.result->size(0) == 2);
  CHECK(!validate_map(U.projection));

  for (const auto& inst : tk::two_groupoids()) {
    const SSet& Y = inst.X;
    for (int v = 0; v < Y->size(0); ++v) {
      auto Uv = under(Y, v);
      REQUIRE(!validate_map(Uv.projection));
      for (int b = 0; b < Y->size(0); ++b) {
        auto H = hom_left(Y, v, b);
        for (int k = 0; k <= Y->n(); ++k) {
          std::set<int> fibre, hom;
          for (int x = 0; x < Uv.result->size(k); ++x)
            if (Uv.projection(k, x) == Y->constant(k, b)) fibre.insert(Uv.origin[k][x]);
          for (auto [g, e] : H.pairs[k]) hom.insert(g);
          CHECK_MESSAGE(fibre == hom, inst.name);
        }
      }
    }
  }
}

TEST_CASE("Hom between objects") {
  auto H = hom_left(z2_nerve(1), 0, 0);
  CHECK(H.result->n() == 0);
  CHECK(H.result->size(0) == 2);
  CHECK(check_n_groupoid(*H.result).ok);

  auto K = hom_left(z3_to_1(), 0, 0);
  auto KG = hom_groupoid(K);
  CHECK(KG->num_objects() == 1);
  CHECK(KG->num_morphisms() == 3);
  auto KR = hom_groupoid(hom_right(z3_to_1(), 0, 0));
  CHECK(KR->num_objects() == 1);
  CHECK(KR->num_morphisms() == 3);

  auto Y = nerve(*disjoint_union({discrete_groupoid({"a"}), discrete_groupoid({"b"})}), 2);
  auto E = hom_left(Y, 0, 1);
  CHECK(E.result->empty());

  CHECK_THROWS_AS(hom_left(z3_to_1(), 1, 0), Error);
}

TEST_CASE("Hom needs a groupoid") {
  // idempotent monoid {1, e}: inner horns fill, outer ones do not
  RawSSet r;
  r.n = 1;
  r.simplices = {{"*"}, {"1", "e"}, {}};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) r.simplices[2].push_back(std::to_string(x) + std::to_string(y));
  r.faces = {{}, {{0, 0}, {0, 0}}, {{}, {}, {}}};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      r.faces[2][0].push_back(y);
      r.faces[2][1].push_back(x | y);
      r.faces[2][2].push_back(x);
    }
  r.degens = {{{0}}, {{0, 1}, {0, 2}}};
  auto M = make_sset(r);
  CHECK_THROWS_AS(hom_left(M, 0, 0), Error);
  CHECK_NOTHROW(hom_left(M, 0, 0, false));
}

TEST_CASE("disc maps against the functor count") {
  std::vector<Gpd> gs = {connected_groupoid({"*"}, tk::group("Z2").mul), codiscrete_groupoid({"a", "b"}),
                         connected_groupoid({"x", "y"}, tk::group("Z2").mul),
                         disjoint_union({discrete_groupoid({"p"}), connected_groupoid({"q"}, tk::group("Z3").mul)})};
  for (const auto& G : gs)
    for (int n = 1; n <= 2; ++n) {
      auto X = nerve(*G, n);
      for (int l = 0; l <= 2; ++l) {
        auto maps = disc_maps(X, l);
        CHECK(static_cast<long long>(maps.size()) == functor_count(*G, l));
        std::set<std::vector<std::vector<int>>> seen;
        for (const auto& f : maps) {
          CHECK(!validate_map(f));
          seen.insert(f.components);
        }
        CHECK(seen.size() == maps.size());
      }
    }
  CHECK(disc_maps(codiscrete2(1), 2, {}, 3).size() == 3);
}

TEST_CASE("Hom over discs matches the defining scan") {
  for (const auto& inst : tk::two_groupoids()) {
    const SSet& X = inst.X;
    for (int l = 0; l <= 1; ++l)
      for (const auto& f : disc_maps(X, l))
        for (int a = 0; a < X->size(0); ++a) check_against_scan(X, a, f);
    auto two = disc_maps(X, 2, {}, 6);
    for (const auto& f : two) check_against_scan(X, 0, f);
  }
}

TEST_CASE("Hom over discs: examples") {
  auto X = codiscrete2(2);
  // f: the edge a -> b
  SimplicialMap f;
  for (const auto& m : disc_maps(X, 1))
    if (m(0, 0) == 0 && m(0, 1) == 1) f = m;
  REQUIRE(f.source);
  for (int v = 0; v < 2; ++v) {
    auto H = hom_left_disc(X, v, f);
    auto G = hom_groupoid(H);
    CHECK(G->num_objects() == 2);
    CHECK(G->num_morphisms() == 4);  // connected, all hom-sets singletons
    CHECK(is_kan_fibration(H.projection).ok);
  }

  // l = 0 gives the Hom between objects
  for (const auto& inst : tk::two_groupoids())
    for (int a = 0; a < inst.X->size(0); ++a)
      for (int b = 0; b < inst.X->size(0); ++b) {
        auto P = hom_left_disc(inst.X, a, point_map(inst.X, b));
        auto Q = hom_left(inst.X, a, b);
        CHECK(same_structure(*P.result, *Q.result));
      }

  // constant f: every fibre is Hom(a, a)
  auto Z = z3_to_1();
  for (int l = 0; l <= 2; ++l) {
    auto H = hom_left_disc(Z, 0, constant_disc(Z, l, 0));
    auto base = hom_left(Z, 0, 0);
    for (int e = 0; e < H.projection.target->size(0); ++e) {
      int cnt = 0;
      for (int x = 0; x < H.result->size(0); ++x) cnt += H.projection(0, x) == e;
      CHECK(cnt == base.result->size(0));
    }
    for (int k = 0; k <= 2; ++k) CHECK(H.result->size(k) == base.result->size(k) * H.projection.target->size(k));
  }
}

TEST_CASE("Kan fibrations") {
  for (const auto& X : {z2_nerve(1), codiscrete2(2), z3_to_1()}) CHECK(is_kan_fibration(identity_map(X)).ok);

  auto X = z2_nerve(1);
  auto P = point_sset(1);
  SimplicialMap collapse{X, P, {}};
  for (int k = 0; k <= 2; ++k) collapse.components.push_back(std::vector<int>(X->size(k), 0));
  CHECK(is_kan_fibration(collapse).ok);

  // a point picking out a in {a, b}: no lift of the edge a -> b
  auto C = codiscrete2(1);
  SimplicialMap pick{P, C, {}};
  for (int k = 0; k <= 2; ++k) pick.components.push_back({C->constant(k, 0)});
  auto rep = is_kan_fibration(pick);
  CHECK(!rep.ok);
  CHECK(rep.m == 1);
  CHECK(!rep.failure.empty());

  for (const auto& inst : tk::two_groupoids())
    for (int l = 1; l <= 2; ++l)
      for (const auto& f : disc_maps(inst.X, l, {}, 4)) {
        auto H = hom_left_disc(inst.X, 0, f);
        CHECK_MESSAGE(check_n_groupoid(*H.result).ok, inst.name);
        CHECK_MESSAGE(is_kan_fibration(H.projection).ok, inst.name);
      }
}

TEST_CASE("induced maps") {
  // identity phi gives the identity map
  auto X = z3_to_1();
  for (const auto& f : disc_maps(X, 1, {}, 5)) {
    auto H = hom_left_disc(X, 0, f);
    auto m = induced_map(H, H, {0, 1});
    CHECK(m.components == identity_map(H.result).components);
  }

  // vertex inclusions and constant maps in the codiscrete complex
  auto C = codiscrete2(2);
  for (const auto& f : disc_maps(C, 1))
    for (int v = 0; v < 2; ++v) {
      auto T = hom_left_disc(C, v, f);
      for (int i = 0; i <= 1; ++i) {
        auto S = hom_left_disc(C, v, restrict_disc(f, {i}));
        auto m = induced_map(S, T, {i});
        CHECK(!validate_map(m));
        CHECK(weq(m));
      }
    }

  for (const auto& inst : tk::two_groupoids())
    for (const auto& f : disc_maps(inst.X, 2, {}, 3)) {
      auto T = hom_left_disc(inst.X, 0, f);
      for (const auto& phi : std::vector<std::vector<int>>{{0}, {2}, {0, 2}, {1, 1}, {2, 0}, {0, 1, 2}, {2, 2, 2}}) {
        auto S = hom_left_disc(inst.X, 0, restrict_disc(f, phi));
        auto m = induced_map(S, T, phi);
        CHECK_MESSAGE(!validate_map(m), inst.name);
        CHECK_MESSAGE(weq(m), inst.name);
      }
    }

  auto f = disc_maps(X, 1)[0];
  auto T = hom_left_disc(X, 0, f);
  CHECK_THROWS_AS(induced_map(T, T, {0}), Error);
  CHECK_THROWS_AS(induced_map(T, T, {0, 2}), Error);
}

TEST_CASE("explicit edge Hom") {
  // identity edge: two copies of Hom(v, a)
  auto Z = z3_to_1();
  const int id = Z->constant(1, 0);
  auto E = hom_edge_explicit(Z, 0, id, inverse_witness(*Z, id));
  CHECK(E->num_objects() == 2);
  CHECK(E->num_morphisms() == 4 * 3);

  auto C = codiscrete2(2);
  for (int f = 0; f < C->size(1); ++f)
    for (int v = 0; v < 2; ++v) {
      auto G = hom_edge_explicit(C, v, f, inverse_witness(*C, f));
      for (int x = 0; x < G->num_objects(); ++x)
        for (int y = 0; y < G->num_objects(); ++y) {
          int cnt = 0;
          for (int m = 0; m < G->num_morphisms(); ++m) cnt += G->dom[m] == x && G->cod[m] == y;
          CHECK(cnt == 1);
        }
    }

  // every edge, every inverse witness, every v
  for (const auto& inst : tk::two_groupoids()) {
    const SSet& X = inst.X;
    for (int f = 0; f < X->size(1); ++f) {
      const int b = X->face(1, 0, f);
      for (int h : X->with_face(2, 0, f)) {
        if (X->face(2, 1, h) != X->constant(1, b)) continue;
        for (int v = 0; v < X->size(0); ++v) {
          auto G = hom_edge_explicit(X, v, f, h);
          auto R = hom_groupoid(hom_left_disc(X, v, edge_loop(X, h)));
          CHECK_MESSAGE(!find_isomorphisms(G, R, 1).empty(), inst.name);
        }
      }
    }
  }
  // h must have face 0 = f
  CHECK_THROWS_AS(hom_edge_explicit(C, 0, 1, inverse_witness(*C, 2)), Error);
}

TEST_CASE("composition check") {
  for (const auto& inst : tk::two_groupoids()) {
    const SSet& X = inst.X;
    for (int c = 0; c < X->size(0); ++c) {
      auto rep = hom_comp_check(X, 0, constant_disc(X, 2, c));
      CHECK_MESSAGE(rep.ok, inst.name << ": " << rep.failure);
    }
  }
  auto Z = z3_to_1();
  const int top = disc_word_index(2, {0, 1, 2});
  for (int g = 0; g < Z->size(2); ++g) {
    auto maps = disc_maps(Z, 2, {{{2, top}, g}}, 1);
    REQUIRE(maps.size() == 1);
    auto rep = hom_comp_check(Z, 0, maps[0]);
    CHECK(rep.ok);
    CHECK(rep.pushout_iso);
    CHECK(rep.compose_iso);
  }
  auto C = codiscrete2(2);
  for (const auto& g : disc_maps(C, 2))
    if (g(0, 0) != g(0, 1) || g(0, 1) != g(0, 2))
      for (int a = 0; a < 2; ++a) CHECK(hom_comp_check(C, a, g).ok);
}

TEST_CASE("Hom along an edge is a co-span of equivalences") {
  for (const auto& inst : tk::two_groupoids()) {
    const SSet& X = inst.X;
    for (const auto& f : disc_maps(X, 1)) {
      auto foot0 = hom_groupoid(hom_left_disc(X, 0, restrict_disc(f, {0}), false));
      auto foot1 = hom_groupoid(hom_left_disc(X, 0, restrict_disc(f, {1}), false));
      auto K = hom_cospan(X, 0, f, foot0, foot1);
      CHECK_NOTHROW(validate_cospan(K));
      CHECK(is_equivalence(K.we_leg));
      CHECK(is_equivalence(K.other_leg));
    }
  }
}
