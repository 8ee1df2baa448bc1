#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trunkan/gpd.hpp"
#include "trunkan/sset.hpp"

namespace trunkan::testkit {

// Multiplication table with identity at index 0; mul[a][b] is the product ab.
using Table = std::vector<std::vector<int>>;

struct Group {
  std::string name;
  Table mul;

  int order() const { return static_cast<int>(mul.size()); }
  int inv(int a) const;
};

// Throws NotAGroup.
void check_group(const Table& mul);
Group group(const std::string& name);  // Z1..Z6, V4, S3
std::vector<Group> small_groups(int max_order);

std::vector<std::vector<int>> homomorphisms(const Group& A, const Group& B);
std::vector<std::vector<int>> automorphisms(const Group& A);

// One object, G_1 = elements, G_2 = pairs (a, b) with faces (b, ab, a).
SSet nerve_group(const Table& mul);

struct CrossedModule {
  Group H, Q;
  std::vector<int> boundary;       // H -> Q
  std::vector<std::vector<int>> action;  // action[q][h] = q.h

  std::string name() const;
  int kernel_size() const;
  int cokernel_size() const;
};

// Throws InvalidCrossedModule with the first violated law.
void validate(const CrossedModule& cm);
// All valid crossed modules over the listed groups.
std::vector<CrossedModule> crossed_modules(const std::vector<Group>& hs, const std::vector<Group>& qs);
bool isomorphic(const CrossedModule& a, const CrossedModule& b);
CrossedModule trivial_crossed_module(const Group& H, const Group& Q);  // trivial action, trivial boundary
CrossedModule identity_crossed_module(const Group& G);                // conjugation, boundary id

// n=2. Edges are Q; a 2-simplex (q1, q2, h) has faces (q2, d(h) q1 q2, q1).
// 3-simplices are the cycles with h013 (q01 . h123) = h023 h012.
SSet nerve_crossed_module(const CrossedModule& cm);

struct Bounds {
  int max_objects = 4;
  int max_hom = 6;
};
// Disjoint union of connected pieces, each a group table on a block of
// objects. Throws BoundsExceeded outside objects <= 4, hom-sets <= 6.
Gpd random_groupoid(std::uint64_t seed, Bounds b = {});
// Uniform choice among the functors G -> H (enumeration capped at cap).
GroupoidMap random_functor(std::uint64_t seed, const Gpd& G, const Gpd& H, int cap = 256);
// Transitive pieces G(a,-)/S for random objects a and subgroups S of Aut(a).
GSet random_gset(std::uint64_t seed, const Gpd& G, int max_orbits = 2);

struct PushoutInstance {
  Gpd K, G, H;
  GroupoidMap g, h;  // g fully faithful, injective on objects
};
PushoutInstance random_pushout_instance(std::uint64_t seed, Bounds b = {3, 6});

struct NamedSSet {
  std::string name;
  SSet X;
};
// Desk-scale 2-groupoids: crossed-module nerves (one per isomorphism class,
// groups of order <= max_order) within the size limits, and nerves of small
// groupoids at n=2.
std::vector<NamedSSet> two_groupoids(int max_g1 = 8, int max_g2 = 27, int max_order = 3);

// TRUNKAN_SEED when set, otherwise fallback.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace trunkan::testkit
