#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trunkan/gpd.hpp"
#include "trunkan/kan.hpp"
#include "trunkan/sset.hpp"

namespace trunkan {

// Hom^L(a, f) for f: D^l -> X, or its mirror Hom^R(f, x). Simplices of
// dimension k are pairs (g in X_{k+1}, e in D^l_k), ordered by e, then g.
struct HomGroupoid {
  SSet base;
  int anchor = -1;
  bool left = true;
  SimplicialMap target;      // D^l -> base
  int l = 0;
  SSet result;               // level n-1
  SimplicialMap projection;  // result -> D^l truncated at n-1
  std::vector<std::vector<std::pair<int, int>>> pairs;

  std::vector<std::map<std::pair<int, int>, int>> index;

  int find(int k, int g, int e) const;  // -1 if absent
};

struct UnderCategory {
  SSet result;               // level n; top dimension taken from Cyc(n+2)
  SimplicialMap projection;  // g |-> face 0 of g
  std::vector<std::vector<int>> origin;  // simplex of X_{k+1} (k <= n), or extended element index
  ExtendedLevel extended;
};

UnderCategory under(const SSet& X, int v, bool check_prereq = true);
HomGroupoid hom_left(const SSet& X, int a, int b, bool check_prereq = true);
HomGroupoid hom_left_disc(const SSet& X, int a, const SimplicialMap& f, bool check_prereq = true);
// Mirror: (g, e) with last vertex x and last face f(e).
HomGroupoid hom_right(const SSet& X, int a, int b, bool check_prereq = true);
HomGroupoid hom_right_disc(const SSet& X, const SimplicialMap& f, int x, bool check_prereq = true);

// The groupoid of a level-1 Hom, with objects and morphisms indexed as the
// 0- and 1-simplices.
Gpd hom_groupoid(const HomGroupoid& H);
// A map of level-1 complexes read as a functor between such groupoids.
GroupoidMap as_functor(const SimplicialMap& f, const Gpd& src, const Gpd& tgt);

// Maps D^l -> X (level n of X). fixed: (dimension, word index) -> simplex.
std::vector<SimplicialMap> disc_maps(const SSet& X, int l, const std::map<std::pair<int, int>, int>& fixed = {},
                                     std::size_t limit = 0);
SimplicialMap point_map(const SSet& X, int b);                   // D^0 -> X
SimplicialMap restrict_disc(const SimplicialMap& f, const std::vector<int>& phi);  // f o phi
// The unique D^1 -> X sending the word 101 to h (h_0hat = f, h_1hat = 1_b).
SimplicialMap edge_loop(const SSet& X, int h);
// Canonical witness for the inverse of an edge f: the least h in X_2 with
// face 0 = f and face 1 = the identity at the target of f.
int inverse_witness(const TruncatedSSet& X, int f);

struct FibrationReport {
  bool ok = true;
  int m = -1, i = -1;
  Horn witness;
  int downstairs = -1;
  std::string failure;
};
FibrationReport is_kan_fibration(const SimplicialMap& p);

// (g, e) |-> (g, phi(e)) from Hom(a, f o phi) to Hom(a, f).
SimplicialMap induced_map(const HomGroupoid& S, const HomGroupoid& T, const std::vector<int>& phi);

// Hom^L(v, gamma) for gamma = edge_loop(h), built by hand from the two
// fibres, the 2-simplices over f and over its inverse, and horn filling.
Gpd hom_edge_explicit(const SSet& X, int v, int f, int h, bool check_prereq = true);

struct CompReport {
  bool ok = false;
  bool pushout_iso = false;   // Hom(a, gamma) is the glued pushout
  bool compose_iso = false;   // Hom(a, gamma o 1hat) is the co-span composite
  std::string failure;
};
CompReport hom_comp_check(const SSet& X, int a, const SimplicialMap& gamma);

// Feet and legs of Hom(a, -) along an edge map f: D^1 -> X: we leg from the
// fibre over 0, other leg from the fibre over 1.
CoSpan hom_cospan(const SSet& X, int a, const SimplicialMap& f, const Gpd& foot0, const Gpd& foot1);

}  // namespace trunkan
