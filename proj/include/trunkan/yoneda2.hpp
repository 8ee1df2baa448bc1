#pragma once

#include <map>
#include <string>
#include <vector>

#include "trunkan/gpd.hpp"
#include "trunkan/homspaces.hpp"
#include "trunkan/sset.hpp"

namespace trunkan {

// G* : G with one extra object isomorphic to the anchor. A k-simplex is a
// simplex of G together with a lift of each vertex along * |-> anchor.
struct StarExtension {
  SSet base;
  SSet extended;
  int anchor = -1;
  int star = -1;  // object index in extended
  SimplicialMap inclusion;
};
StarExtension star_extension(const SSet& G, int a, bool check_prereq = true);

// K1 ; K2 with element access. Result morphisms are classes of pairs
// (m1 in K1, m2 in K2) meeting at a middle object.
struct Composite {
  CoSpan K1, K2;
  CospanComposite traced;
  std::vector<int> result_to_p;
  std::vector<int> k1_from_p, k2_from_p;  // inverses of h', g' (-1 outside)

  const CoSpan& result() const { return traced.result; }
  const Gpd& apex() const { return traced.result.apex; }
  int join(int m1, int m2) const;
  int left_factor(int x, int m2) const;   // m1 with join(m1, m2) = x
  int right_factor(int x, int m1) const;  // m2 with join(m1, m2) = x
};
Composite make_composite(const CoSpan& K1, const CoSpan& K2);

// Everything derived from one 2-groupoid that the families below share.
class YonedaContext;

// An equivalence between omega_a and omega_b in normal form.
struct KFamily {
  int a = -1, b = -1;
  int edge = -1;                    // set for omega_morphism output
  std::vector<CoSpan> K;            // per object c: Hom(c,a) ~> K(c) <- Hom(c,b)
  std::vector<HomGroupoid> source;  // Hom^L(c, gamma_f) behind K(c), omega output only
  std::vector<Composite> lhs, rhs;  // per edge g: c -> d: M_a(g);K(d) and K(c);M_b(g)
  std::vector<GroupoidMap> t;       // per edge: lhs apex -> rhs apex
};

class YonedaContext {
 public:
  explicit YonedaContext(SSet G, bool check_prereq = true);

  const SSet& base() const { return G_; }
  int objects() const { return G_->size(0); }
  int edges() const { return G_->size(1); }
  int dom(int g) const { return G_->face(1, 1, g); }
  int cod(int g) const { return G_->face(1, 0, g); }

  const Gpd& hom(int c, int x) const { return hom_[c][x]; }  // Hom^L(c, x)
  const HomGroupoid& hom_data(int c, int x) const { return hom_data_[c][x]; }
  int hom_object(int c, int x, int edge) const;  // object index of an edge c -> x
  const SimplicialMap& loop(int g) const { return loop_[g]; }
  // M_x(g) for g: c -> d, apex from the mirror Hom over loop(g) at x; the
  // feet are Hom^L(c,x), Hom^L(d,x) through the canonical comparison.
  const CoSpan& edge_cospan(int x, int g) const { return M_[x][g]; }
  const HomGroupoid& edge_hom(int x, int g) const { return M_data_[x][g]; }
  int edge_morphism(int x, int g, int sigma) const;  // cross morphism of M_x(g) for a 2-simplex, -1 if none

  // Canonical Hom^L(c,x) -> Hom^R(c,x) on 2-simplices: face 3 of the 3-simplex
  // with faces (s1 p', sigma, s0 p', -).
  int left_to_right(int sigma) const;

  // omega_morphism, cached.
  const KFamily& omega(int f) const;

  // Co-spans over each edge for a family with the given K(c).
  void attach_composites(KFamily& KF) const;

 private:
  SSet G_;
  std::vector<std::vector<Gpd>> hom_;
  std::vector<std::vector<HomGroupoid>> hom_data_;
  std::vector<SimplicialMap> loop_;
  std::vector<std::vector<CoSpan>> M_;
  std::vector<std::vector<HomGroupoid>> M_data_;
  mutable std::map<int, KFamily> omega_;
};

// Hom^L(c,a) for every object c.
std::vector<Gpd> omega_object(const YonedaContext& ctx, int a);
KFamily omega_morphism(const YonedaContext& ctx, int f);

// Structure map t_{g,f} by the horn recipe: (u, v) |-> (y, w) with y the
// missing face of the 3-simplex (u, w, -, v). With every_choice, all
// representatives and all w are tried and must agree.
GroupoidMap structure_map(const YonedaContext& ctx, const KFamily& KF, int g, bool every_choice = false);

struct CoherenceReport {
  bool ok = true;
  std::string failure;
  std::vector<int> witness;  // edges g', g, the filler, then elements
};
// Each t_g is a co-span isomorphism and the composition law holds for
// every composable pair. every_filler: all composites h, else the least.
CoherenceReport check_coherence(const YonedaContext& ctx, const KFamily& KF, bool every_filler = true);

// Isomorphisms phi_c: K1(c) -> K2(c) of co-spans intertwining the t-maps.
bool intertwines(const YonedaContext& ctx, const KFamily& K1, const KFamily& K2, const std::vector<GroupoidMap>& phi,
                 std::string* why = nullptr);
std::vector<std::vector<GroupoidMap>> kfamily_isos(const YonedaContext& ctx, const KFamily& K1, const KFamily& K2,
                                                   std::size_t limit = 0);
// KF transported along groupoid isomorphisms psi_c: K(c) apex -> new apex.
KFamily transport(const YonedaContext& ctx, const KFamily& KF, const std::vector<GroupoidMap>& psi);

struct RecoveredMorphism {
  int edge = -1;
  std::vector<GroupoidMap> iso;  // omega(edge).K[c] apex -> KF.K[c] apex
  bool verified = false;
};
// Throws NotCoherent, NoCandidate.
RecoveredMorphism recover_morphism(const YonedaContext& ctx, const KFamily& KF, bool check_pre = true);

struct AlphaFamily {
  int f = -1, g = -1, h = -1;     // f: a -> b, g: b -> c, h: a -> c
  std::vector<Composite> source;  // per object x: K_f(x) ; K_g(x)
  std::vector<GroupoidMap> alpha; // per x: source apex -> K_h(x) apex
};
AlphaFamily omega_2cell(const YonedaContext& ctx, int gamma);
// Same edges, alpha left empty.
AlphaFamily alpha_frame(const YonedaContext& ctx, int f, int g, int h);
bool check_alpha(const YonedaContext& ctx, const AlphaFamily& A, std::string* why = nullptr);
// All intertwining families over the frame.
std::vector<AlphaFamily> alpha_families(const YonedaContext& ctx, int f, int g, int h, std::size_t limit = 0);
// Throws InvalidArgument when A does not intertwine, NoCandidate otherwise.
int recover_2cell(const YonedaContext& ctx, const AlphaFamily& A, bool check_pre = true);

}  // namespace trunkan
