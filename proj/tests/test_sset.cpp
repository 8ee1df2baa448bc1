#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "trunkan/sset.hpp"

using namespace trunkan;

namespace {

SSet z2() { return make_sset(oracle::nerve1(oracle::group_cat(oracle::cyclic(2)))); }

long oracle_cycles(const TruncatedSSet& X, int m) {
  if (m == 0) return static_cast<long>(X.size(0)) * X.size(0);
  return oracle::count_compatible(X.size(m), m + 2, -1, [&](int j, int x) { return X.face(m, j, x); });
}

long oracle_horns(const TruncatedSSet& X, int m, int i) {
  if (m == 1) return static_cast<long>(X.size(0));
  return oracle::count_compatible(X.size(m - 1), m + 1, i, [&](int j, int x) { return X.face(m - 1, j, x); });
}

}  // namespace

TEST_CASE("point complex collapses everything") {
  SSet p = point_sset(2);
  for (int k = 0; k <= 3; ++k) CHECK(p->size(k) == 1);
  for (const Mono& t : monotone_maps(1, 3)) CHECK(p->apply(t, 0) == 0);
  CHECK(cycles(*p, 1).size() == 1);
  for (int m = 1; m <= 4; ++m)
    for (int i = 0; i <= m; ++i) CHECK(horns(*p, m, i).size() == 1);
  CHECK(extend_dimension(*p, 4).elements.size() == 1);
}

TEST_CASE("Z/2 nerve at n=1") {
  SSet X = z2();
  CHECK(X->size(1) == 2);
  CHECK(X->size(2) == 4);
  // oracle first, then the frozen values
  CHECK(static_cast<long>(cycles(*X, 1).size()) == oracle_cycles(*X, 1));
  // one object: every triple of edges is vertex-compatible
  CHECK(cycles(*X, 1).size() == 8);
  CHECK(static_cast<long>(horns(*X, 2, 1).size()) == oracle_horns(*X, 2, 1));
  CHECK(horns(*X, 2, 1).size() == 4);
  // 2-simplex (s,s) has faces (s, e, s)
  const int ss = X->find(2, "m1|m1");
  REQUIRE(ss >= 0);
  CHECK(boundary(*X, 2, ss).faces == std::vector<int>{1, 0, 1});
}

TEST_CASE("cycle and horn enumeration agree with brute force") {
  std::vector<SSet> xs = {z2(), make_sset(oracle::nerve1(oracle::codiscrete_cat(2))),
                          make_sset(oracle::nerve1(oracle::group_cat(oracle::cyclic(3)))), disc(1, 1), disc(2, 1)};
  for (const SSet& X : xs) {
    for (int m = 0; m <= 2; ++m) {
      auto cs = cycles(*X, m);
      CHECK(static_cast<long>(cs.size()) == oracle_cycles(*X, m));
      CHECK(std::is_sorted(cs.begin(), cs.end()));
      for (const auto& c : cs) CHECK(is_cycle(*X, c));
    }
    for (int m = 1; m <= 2; ++m)
      for (int i = 0; i <= m; ++i) {
        auto hs = horns(*X, m, i);
        CHECK(static_cast<long>(hs.size()) == oracle_horns(*X, m, i));
        CHECK(std::is_sorted(hs.begin(), hs.end()));
      }
  }
}

TEST_CASE("frozen counts for D^1 at n=1") {
  SSet D = disc(1, 1);
  // brute-force filter over 4^3 triples
  CHECK(oracle_cycles(*D, 1) == 8);
  CHECK(cycles(*D, 1).size() == 8);
}

TEST_CASE("boundaries land in cycles and horns") {
  std::vector<SSet> xs = {z2(), disc(2, 2), make_sset(oracle::nerve1(oracle::codiscrete_cat(3)))};
  for (const SSet& X : xs)
    for (int m = 1; m <= X->top(); ++m) {
      std::set<Cycle> cs;
      for (auto& c : cycles(*X, m - 1)) cs.insert(c);
      for (int g = 0; g < X->size(m); ++g) {
        CHECK(cs.count(boundary(*X, m, g)) == 1);
        for (int i = 0; i <= m; ++i) CHECK(is_horn(*X, boundary_omit(*X, m, i, g)));
      }
    }
}

TEST_CASE("degenerate simplex over a point has constant boundary") {
  SSet D = disc(2, 2);
  for (int a = 0; a < 3; ++a) {
    Cycle b = boundary(*D, 2, D->constant(2, a));
    for (int f : b.faces) CHECK(f == D->constant(1, a));
  }
}

TEST_CASE("functoriality holds exhaustively on every table") {
  for (const SSet& X : {z2(), disc(2, 2), disc(1, 2)}) {
    const int top = X->top();
    for (int j = 0; j <= top; ++j)
      for (int i = 0; i <= top; ++i)
        for (const Mono& t : monotone_maps(i, j))
          for (int h = 0; h <= top; ++h)
            for (const Mono& s : monotone_maps(h, i)) {
              const auto& dts = X->table(compose(t, s));
              for (int x = 0; x < X->size(j); ++x) REQUIRE(dts[x] == X->apply(s, X->apply(t, x)));
            }
  }
}

TEST_CASE("broken identity is reported") {
  RawSSet r = oracle::nerve1(oracle::codiscrete_cat(2));
  // 2-simplex (o0->o1, o1->o0): redirect its composite face to o0->o1
  int bad = -1;
  for (std::size_t x = 0; x < r.simplices[2].size(); ++x)
    if (r.simplices[2][x] == "m1|m2") bad = static_cast<int>(x);
  REQUIRE(bad >= 0);
  r.faces[2][1][bad] = 1;
  try {
    make_sset(r);
    FAIL("expected IdentityViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IdentityViolation);
    CHECK(std::string(e.what()).find("m1|m2") != std::string::npos);
  }
  RawSSet m = oracle::nerve1(oracle::codiscrete_cat(2));
  m.faces[2][0].pop_back();
  CHECK_THROWS_AS(make_sset(m), Error);
}

TEST_CASE("horn index range") {
  SSet X = z2();
  CHECK_THROWS_AS(horns(*X, 2, 3), Error);
  CHECK_THROWS_AS(horns(*X, 2, -1), Error);
}

TEST_CASE("extended dimensions") {
  SSet X = z2();
  auto L3 = extend_dimension(*X, 3);
  // Cyc(3) over G_2 by brute force
  long expect = oracle::count_compatible(X->size(2), 4, -1, [&](int j, int x) { return X->face(2, j, x); });
  CHECK(static_cast<long>(L3.elements.size()) == expect);
  CHECK(expect == 8);
  auto L4 = extend_dimension(*X, 4);
  auto L4b = extend_from(*X, L3);
  CHECK(L4.elements == L4b.elements);
  long expect4 = oracle::count_compatible(static_cast<int>(L3.elements.size()), 5, -1,
                                          [&](int j, int x) { return L3.elements[x][j]; });
  CHECK(static_cast<long>(L4.elements.size()) == expect4);
  CHECK(static_cast<long>(cycles(*X, 3).size()) == expect4);
}

TEST_CASE("discs") {
  for (int l = 0; l <= 3; ++l) {
    SSet D = disc(l, 2);
    int p = 1;
    for (int k = 0; k <= 3; ++k) {
      p *= (l + 1);
      CHECK(D->size(k) == p);
    }
  }
  CHECK(disc(2, 1)->size(1) == 9);
  SSet D0 = disc(0, 2);
  CHECK(same_structure(*D0, *point_sset(2)) == false);  // names differ
  for (int k = 0; k <= 3; ++k) CHECK(D0->size(k) == 1);

  auto id = disc_map({0, 1}, 1, 1, 2);
  CHECK(id.components == identity_map(disc(1, 2)).components);
  auto c0 = disc_map({0, 0}, 1, 1, 2);
  CHECK(!validate_map(c0));
  for (int k = 0; k <= 3; ++k)
    for (int x : c0.components[k]) CHECK(x == 0);

  // disc_map(phi o psi) = disc_map(phi) o disc_map(psi)
  std::vector<int> psi = {2, 0, 1}, phi = {1, 1, 0};
  std::vector<int> comp = {phi[psi[0]], phi[psi[1]], phi[psi[2]]};
  auto lhs = disc_map(comp, 2, 1, 2);
  auto rhs = compose(disc_map(phi, 2, 1, 2), disc_map(psi, 2, 2, 2));
  CHECK(lhs.components == rhs.components);
  CHECK(!validate_map(lhs));
}

TEST_CASE("map validation") {
  SSet X = make_sset(oracle::nerve1(oracle::codiscrete_cat(2)));
  CHECK(!validate_map(identity_map(X)));
  SSet P = point_sset(1);
  SimplicialMap c{X, P, {}};
  for (int k = 0; k <= 2; ++k) c.components.push_back(std::vector<int>(X->size(k), 0));
  CHECK(!validate_map(c));
  // send the edge o0->o1 to the identity at o0 while keeping vertices
  SimplicialMap bad = identity_map(X);
  bad.components[1][1] = 0;
  auto v = validate_map(bad);
  REQUIRE(v);
  CHECK(v->describe(bad).find("d_") != std::string::npos);
  CHECK_THROWS_AS(validate_map(SimplicialMap{X, point_sset(2), c.components}), Error);
}

TEST_CASE("products and coproducts") {
  SSet X = z2(), Y = make_sset(oracle::nerve1(oracle::codiscrete_cat(2)));
  SSet P = product(X, Y);
  for (int k = 0; k <= 2; ++k) CHECK(P->size(k) == X->size(k) * Y->size(k));
  SSet C = coproduct(X, Y);
  for (int k = 0; k <= 2; ++k) CHECK(C->size(k) == X->size(k) + Y->size(k));
  SSet T = truncate(disc(1, 2), 1);
  CHECK(T->n() == 1);
  CHECK(T->size(2) == 8);
}
