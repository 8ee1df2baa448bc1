#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "trunkan/error.hpp"

namespace trunkan {

// Weakly increasing map t:[i]->[j], stored by its values t(0),...,t(i).
struct Mono {
  int cod = 0;
  std::vector<int> v;

  int dom() const { return static_cast<int>(v.size()) - 1; }
  bool operator==(const Mono& o) const { return cod == o.cod && v == o.v; }
  bool operator<(const Mono& o) const { return cod != o.cod ? cod < o.cod : v < o.v; }
  bool is_identity() const;
  std::string str() const;
};

Mono omit(int m, int k);          // k-hat : [m-1] -> [m]
Mono vertex_map(int m, int k);    // [0] -> [m], 0 |-> k
Mono codegeneracy(int m, int k);  // [m+1] -> [m], hits k twice
Mono identity_map(int m);
Mono constant_map(int i, int j, int value);
Mono compose(const Mono& t, const Mono& s);  // t o s
Mono plus_left(const Mono& t);   // t+ : 0 |-> 0, i+1 |-> t(i)+1
Mono plus_right(const Mono& t);  // mirror: i |-> t(i), last |-> cod+1
std::vector<Mono> monotone_maps(int i, int j);

// Unvalidated input: simplex names per dimension 0..n+1 and the elementary
// structure maps. faces[m][j][x] is the index of d_jhat(x) in dimension m-1
// (1 <= m <= n+1); degens[m][j][x] is the index of s_j(x) in dimension m+1
// (0 <= m <= n).
struct RawSSet {
  int n = 1;
  std::vector<std::vector<std::string>> simplices;
  std::vector<std::vector<std::vector<int>>> faces;
  std::vector<std::vector<std::vector<int>>> degens;
};

struct Cycle {
  int m = 0;               // dimension of the faces
  std::vector<int> faces;  // m+2 entries
  bool operator==(const Cycle& o) const { return m == o.m && faces == o.faces; }
  bool operator<(const Cycle& o) const { return m != o.m ? m < o.m : faces < o.faces; }
};

struct Horn {
  int m = 0;               // dimension of the simplex being filled
  int i = 0;               // omitted face
  std::vector<int> faces;  // m entries of dimension m-1, position i skipped
  bool operator==(const Horn& o) const { return m == o.m && i == o.i && faces == o.faces; }
  bool operator<(const Horn& o) const {
    if (m != o.m) return m < o.m;
    if (i != o.i) return i < o.i;
    return faces < o.faces;
  }
};

class TruncatedSSet {
 public:
  // Validates totality and the simplicial identities; throws Error.
  static TruncatedSSet build(RawSSet raw);

  int n() const { return n_; }
  int top() const { return n_ + 1; }
  int size(int k) const { return static_cast<int>(names_[k].size()); }
  bool empty() const { return names_[0].empty(); }
  const std::string& name(int k, int x) const { return names_[k][x]; }
  const std::vector<std::string>& names(int k) const { return names_[k]; }
  int find(int k, const std::string& name) const;  // -1 if absent

  int face(int m, int j, int x) const { return faces_[m][j][x]; }
  int degen(int m, int j, int x) const { return degens_[m][j][x]; }
  int vertex(int m, int x, int k) const { return vertices_[m][k][x]; }
  int apply(const Mono& t, int x) const;
  const std::vector<int>& table(const Mono& t) const;

  // a^k: the constant k-simplex at the object a.
  int constant(int k, int a) const { return constants_[k][a]; }

  std::vector<int> boundary(int m, int x) const;
  std::vector<int> boundary_omit(int m, int i, int x) const;

  // Simplices of dimension m with face r equal to v.
  const std::vector<int>& with_face(int m, int r, int v) const;
  // Simplices of dimension m with face r equal to v and face t equal to w.
  const std::vector<int>& with_faces(int m, int r, int v, int t, int w) const;
  // All simplices of dimension m with the given boundary (m >= 1).
  const std::vector<int>* with_boundary(int m, const std::vector<int>& b) const;

  const RawSSet& raw() const { return raw_; }

 private:
  int n_ = 0;
  RawSSet raw_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::unordered_map<std::string, int>> index_;
  std::vector<std::vector<std::vector<int>>> faces_;
  std::vector<std::vector<std::vector<int>>> degens_;
  std::vector<std::vector<std::vector<int>>> vertices_;
  std::vector<std::vector<int>> constants_;
  std::map<Mono, int> table_index_;
  std::vector<std::vector<int>> tables_;
  // face_index_[m][r] : CSR buckets by value of face r
  struct Buckets {
    std::vector<std::vector<int>> by_value;
  };
  std::vector<std::vector<Buckets>> face_index_;
  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
      std::size_t h = v.size();
      for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x) * 0x9e3779b97f4a7c15ull;
      return h;
    }
  };
  std::vector<std::unordered_map<std::vector<int>, std::vector<int>, VecHash>> boundary_index_;
  std::vector<std::unordered_map<std::uint64_t, std::vector<int>>> coded_index_;
  std::vector<bool> coded_;
  static std::uint64_t pair_key(int r, int v, int t, int w) {
    return (static_cast<std::uint64_t>(r * 64 + t) << 48) ^ (static_cast<std::uint64_t>(v) << 24) ^
           static_cast<std::uint64_t>(w);
  }
  std::vector<std::unordered_map<std::uint64_t, std::vector<int>>> pair_index_;
};

using SSet = std::shared_ptr<const TruncatedSSet>;

SSet make_sset(RawSSet raw);
SSet point_sset(int n);

// Enumeration of compatible face tuples. cycles(X, m): Cyc(m+1), tuples of
// m+2 faces of dimension m. horns(X, m, i): horns of m-simplices, tuples of
// m faces of dimension m-1 with position i omitted. Both lexicographically
// sorted. Face dimensions above n+1 use the extended levels.
std::vector<Cycle> cycles(const TruncatedSSet& X, int m);
std::vector<Horn> horns(const TruncatedSSet& X, int m, int i);
// Streaming form for stored face dimensions: visit gets the full tuple with
// -1 at position i and returns false to stop.
void for_each_horn(const TruncatedSSet& X, int m, int i, const std::function<bool(const std::vector<int>&)>& visit);
Cycle boundary(const TruncatedSSet& X, int m, int g);
Horn boundary_omit(const TruncatedSSet& X, int m, int i, int g);
bool is_cycle(const TruncatedSSet& X, const Cycle& c);
bool is_horn(const TruncatedSSet& X, const Horn& h);

// Extended level G_m = Cyc(m) for m > n+1. Each element is a tuple of m+1
// indices into level m-1 (stored simplices when m-1 <= n+1).
struct ExtendedLevel {
  int m = 0;
  std::vector<std::vector<int>> elements;
};
ExtendedLevel extend_dimension(const TruncatedSSet& X, int m);
// Computes level m+1 from an already computed level m (m > n+1).
ExtendedLevel extend_from(const TruncatedSSet& X, const ExtendedLevel& prev);

// Generic tuple enumeration over any level given by a face accessor.
// Visits tuples of length len (one entry per position, omitted position -1)
// satisfying face_{l-1}(x_j) = face_j(x_l) for j < l.
template <class FaceFn, class Visit>
void for_each_compatible(int count, int len, int omit, const FaceFn& face, const Visit& visit);

// Maps of truncated simplicial sets.
struct SimplicialMap {
  SSet source;
  SSet target;
  std::vector<std::vector<int>> components;  // per dimension 0..n+1

  int operator()(int k, int x) const { return components[k][x]; }
};

struct MapViolation {
  Mono t;
  int dim = 0;
  int simplex = -1;
  std::string describe(const SimplicialMap& f) const;
};

std::optional<MapViolation> validate_map(const SimplicialMap& f);
SimplicialMap identity_map(const SSet& X);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);  // g o f
// Builds a map from its vertex-level and higher components given by name.
SimplicialMap map_from_components(const SSet& src, const SSet& tgt,
                                  std::vector<std::vector<int>> components);

// Discs: D^l_k = all functions [k] -> [l].
SSet disc(int l, int n);
int disc_word_index(int l, const std::vector<int>& word);
std::vector<int> disc_word(int l, int k, int index);
SimplicialMap disc_map(const std::vector<int>& phi, int r, int l, int n);

// Constructions.
SSet product(const SSet& X, const SSet& Y);
SSet coproduct(const SSet& X, const SSet& Y);
SSet truncate(const SSet& X, int n);
SSet relabel(const SSet& X, const std::string& prefix);

// Given structure through dimension n (faces for m <= n, degeneracies for
// m <= n-1), adds G_{n+1} as the cycles accepted by keep. Names of the new
// simplices are "<f0,f1,...>" over face names.
template <class Keep>
RawSSet complete_top(RawSSet partial, const Keep& keep);

bool same_structure(const TruncatedSSet& a, const TruncatedSSet& b);

}  // namespace trunkan

#include "trunkan/sset_impl.hpp"
