#pragma once

#include <memory>
#include <string>
#include <vector>

#include "trunkan/sset.hpp"

namespace trunkan {

// Finite groupoid. comp[f][g] is "f then g" (g o f) when cod f = dom g,
// otherwise -1.
class FiniteGroupoid {
 public:
  std::vector<std::string> objects;
  std::vector<std::string> morphisms;
  std::vector<int> dom, cod;
  std::vector<int> ident;  // per object
  std::vector<int> inv;
  std::vector<std::vector<int>> comp;

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms.size()); }
  int then(int f, int g) const { return comp[f][g]; }
  const std::vector<int>& hom(int a, int b) const { return homs_[a * num_objects() + b]; }
  int find_object(const std::string& name) const;
  int find_morphism(const std::string& name) const;

  // Fills homs; checks category axioms and invertibility. Throws InvalidArgument.
  void finalize();

 private:
  std::vector<std::vector<int>> homs_;
};

using Gpd = std::shared_ptr<const FiniteGroupoid>;

struct MorphismSpec {
  std::string id, dom, cod;
};
struct CompSpec {
  std::string f, g, fg;  // fg = g o f
};

// Identities and inverses are inferred from the composition table.
Gpd make_groupoid(const std::vector<std::string>& objects, const std::vector<MorphismSpec>& morphisms,
                  const std::vector<CompSpec>& comp);
Gpd codiscrete_groupoid(const std::vector<std::string>& objects);
Gpd discrete_groupoid(const std::vector<std::string>& objects);
// One object per name in objects, vertex group given by mul (element 0 the unit).
Gpd connected_groupoid(const std::vector<std::string>& objects, const std::vector<std::vector<int>>& mul,
                       const std::string& tag = "");
Gpd disjoint_union(const std::vector<Gpd>& parts);
// Full subgroupoid on the listed objects (in that order).
Gpd full_subgroupoid(const FiniteGroupoid& G, const std::vector<int>& objs, std::vector<int>* morphism_origin = nullptr);

struct GroupoidMap {
  Gpd source, target;
  std::vector<int> on_objects, on_morphisms;
};

bool is_functor(const GroupoidMap& F, std::string* why = nullptr);
GroupoidMap identity_functor(const Gpd& G);
GroupoidMap compose(const GroupoidMap& G, const GroupoidMap& F);  // G o F
bool is_fully_faithful(const GroupoidMap& F);
bool is_essentially_surjective(const GroupoidMap& F);
bool is_equivalence(const GroupoidMap& F);
bool is_isomorphism(const GroupoidMap& F);
bool in_essential_image(const GroupoidMap& F, int object);

// Functor search. obj_fixed / mor_fixed give forced values (-1 = free).
struct FunctorSearch {
  std::vector<int> obj_fixed;
  std::vector<int> mor_fixed;
  bool iso_only = false;
  std::size_t limit = 0;  // 0 = all
};
std::vector<GroupoidMap> find_functors(const Gpd& G, const Gpd& H, const FunctorSearch& opts);
std::vector<GroupoidMap> find_isomorphisms(const Gpd& G, const Gpd& H, std::size_t limit = 0);

// Nerves.
SSet nerve(const FiniteGroupoid& G, int n);
SSet to_1groupoid(const FiniteGroupoid& G);
Gpd from_1groupoid(const TruncatedSSet& X);
SimplicialMap nerve_map(const GroupoidMap& F, const SSet& src, const SSet& tgt, int n);

// Pushout along a fully faithful g: K -> G. Objects are G_0 then H_0.
struct Pushout {
  Gpd P;
  GroupoidMap g_prime;     // G -> P
  GroupoidMap h_prime;     // H -> P
  std::vector<int> alpha;  // per K-object: h'(h c) -> g'(g c)
  // representative tuple per morphism, application order:
  // kind 0 (G, outside the essential image): (u)
  // kind 1 (H to H): (v)
  // kind 2 (G to H): (u, c, v)
  // kind 3 (H to G): (v, c, u)
  // kind 4 (G to G): (u1, c1, v, c2, u2)
  std::vector<int> kind;
  std::vector<std::vector<int>> rep;
};

Pushout pushout(const GroupoidMap& g, const GroupoidMap& h);

// Unique f: P -> F with f g' = g1, f h' = h1 and f alpha = beta; throws
// NoMediator / NotUnique. beta[c] : h1(h c) -> g1(g c).
GroupoidMap check_pushout_universal(const Pushout& po, const GroupoidMap& g, const GroupoidMap& h,
                                    const GroupoidMap& g1, const GroupoidMap& h1, const std::vector<int>& beta);
// Closed formula for the mediator, used as a cross-check of the search.
GroupoidMap pushout_mediator_formula(const Pushout& po, const GroupoidMap& g1, const GroupoidMap& h1,
                                     const std::vector<int>& beta);

struct VariantPushout {
  Gpd P2;
  GroupoidMap comparison;    // P -> P2
  GroupoidMap g2, h2;        // G -> P2, H -> P2
  int collapsed_loops = 0;   // loop elements forced to identities
};
VariantPushout variant_pushout(const Pushout& po, const GroupoidMap& g, const GroupoidMap& h);

// Co-spans in normal form: apex objects are the weak-equivalence foot
// objects followed by the other foot objects.
struct CoSpan {
  Gpd apex;
  GroupoidMap we_leg;     // weak equivalence
  GroupoidMap other_leg;
};
bool is_normal_form(const CoSpan& C);
void validate_cospan(const CoSpan& C);  // throws InvalidArgument

struct CospanComposite {
  CoSpan result;
  Pushout po;                       // pushout of (K2 we_leg, K1 other_leg)
  std::vector<int> object_to_result;    // P object -> result object or -1
  std::vector<int> morphism_to_result;  // P morphism -> result morphism or -1
};
// K1: F ~> . <- G, K2: G ~> . <- H; result F ~> . <- H.
CospanComposite cospan_compose_traced(const CoSpan& K1, const CoSpan& K2);
CoSpan cospan_compose(const CoSpan& K1, const CoSpan& K2);
std::vector<GroupoidMap> cospan_isos(const CoSpan& C1, const CoSpan& C2, std::size_t limit = 0);
// Identity co-span on G: apex is the cylinder G x codiscrete(2).
CoSpan identity_cospan(const Gpd& G);

// G-sets.
struct GSet {
  Gpd G;
  std::vector<std::string> carrier;
  std::vector<int> anchor;
  std::vector<std::vector<int>> act;  // act[g][x], -1 unless dom g = anchor x
  int size() const { return static_cast<int>(carrier.size()); }
};
bool is_gset(const GSet& X, std::string* why = nullptr);
GSet make_gset(const Gpd& G, const std::vector<std::string>& carrier, const std::vector<int>& anchor,
               const std::vector<std::vector<int>>& act);
GSet terminal_gset(const Gpd& G);
GSet regular_gset(const Gpd& G);  // morphisms with anchor = cod, action by composition
// All equivariant maps X -> Y.
std::vector<std::vector<int>> gset_maps(const GSet& X, const GSet& Y);
bool is_gset_map(const GSet& X, const GSet& Y, const std::vector<int>& phi);

struct Pushforward {
  GSet result;
  std::vector<std::vector<int>> cls;  // cls[h][x] = class of (h, x) or -1
};
Pushforward gset_pushforward_traced(const GroupoidMap& i, const GSet& X);
GSet gset_pushforward(const GroupoidMap& i, const GSet& X);
struct Pullback {
  GSet result;
  std::vector<std::pair<int, int>> pairs;  // (object of G, element of Y)
};
Pullback gset_pullback_traced(const GroupoidMap& i, const GSet& Y);
GSet gset_pullback(const GroupoidMap& i, const GSet& Y);

struct AdjunctionReport {
  bool ok = true;
  std::size_t left_maps = 0;   // |Hom_H(i_! X, Y)|
  std::size_t right_maps = 0;  // |Hom_G(X, i* Y)|
  std::size_t naturality_checks = 0;
  std::string failure;
};
AdjunctionReport check_adjunction(const GroupoidMap& i, const GSet& X, const GSet& Y);

}  // namespace trunkan
