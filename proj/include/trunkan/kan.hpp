#pragma once

#include <string>
#include <vector>

#include "trunkan/sset.hpp"

namespace trunkan {

// axiom is "fill" (some horn has no filler) or "unique" (a top-dimensional
// horn has more than one). witness is the lexicographically least offending
// horn for that (axiom, m, i).
struct AxiomFailure {
  std::string axiom;
  int m = 0;
  int i = 0;
  Horn witness;
  int fillers = 0;
  std::string describe(const TruncatedSSet& X) const;
};

struct AxiomReport {
  bool ok = true;
  std::vector<AxiomFailure> failures;
};

AxiomReport check_n_category(const TruncatedSSet& X);
AxiomReport check_n_groupoid(const TruncatedSSet& X);

// Boundary of the missing face of a horn, computed from the horn faces.
std::vector<int> missing_face_boundary(const TruncatedSSet& X, const Horn& h);

// For h.m <= n+1: simplices of dimension h.m with boundary_omit = h.
// For h.m = n+2: simplices of dimension n+1 completing h to a cycle.
std::vector<int> fillers(const TruncatedSSet& X, const Horn& h);

// The missing face of the unique filler of a horn of (n+1)-simplices.
int compose(const TruncatedSSet& X, const Horn& h);
// Unique filler of a horn of (n+1)-simplices.
int fill_top(const TruncatedSSet& X, const Horn& h);

// Constant boundary at a in Cyc(k): faces a^{k-1}. For k = 0 the empty cycle.
Cycle constant_cycle(const TruncatedSSet& X, int k, int a);

struct HomotopyClassTable {
  Cycle base;
  int k = 0;                              // dimension of the members
  std::vector<int> members;               // S(X, base), ascending
  std::vector<std::vector<int>> classes;  // blocks, each ascending, ordered by least member
  bool equivalence = true;                // reflexive, symmetric and transitive
  int class_of(int x) const;              // -1 if x is not a member
  std::vector<int> block_index;           // parallel to members
};

// Is there a homotopy alpha ~ beta relative to the common boundary?
// alpha, beta have dimension k <= n+1.
bool homotopic(const TruncatedSSet& X, int k, int alpha, int beta);

HomotopyClassTable s_classes(const TruncatedSSet& X, const Cycle& b);
HomotopyClassTable pi_k(const TruncatedSSet& X, int a, int k);

struct WeqVerdict {
  bool weq = false;
  bool criterion_pi = false;      // pi_k bijective for all k, a
  bool criterion_explicit = false;  // injective and surjective up to ~
  bool criterion_classes = false;   // surjective on S-classes
  bool agree = false;
  int fail_k = -1;
  int fail_a = -1;
  std::string diagnostic;
};

// Throws AxiomPrereqFailed unless both ends pass check_n_groupoid (skipped
// when check_prereq is false).
WeqVerdict is_weak_equivalence(const SimplicialMap& f, bool check_prereq = true);
bool check_equivalence_witness(const SimplicialMap& f1, const SimplicialMap& f2, bool check_prereq = true);

}  // namespace trunkan
