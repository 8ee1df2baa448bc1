#include "trunkan/sset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <type_traits>

namespace trunkan {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::MissingMap: return "MissingMap";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AxiomPrereqFailed: return "AxiomPrereqFailed";
    case ErrorKind::NoFiller: return "NoFiller";
    case ErrorKind::NotUnique: return "NotUnique";
    case ErrorKind::NotFullyFaithful: return "NotFullyFaithful";
    case ErrorKind::NoMediator: return "NoMediator";
    case ErrorKind::MiddleMismatch: return "MiddleMismatch";
    case ErrorKind::NotCoherent: return "NotCoherent";
    case ErrorKind::NoCandidate: return "NoCandidate";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::InvalidCrossedModule: return "InvalidCrossedModule";
    case ErrorKind::BoundsExceeded: return "BoundsExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

// ---- monotone maps ----

bool Mono::is_identity() const {
  if (dom() != cod) return false;
  for (int i = 0; i <= cod; ++i)
    if (v[i] != i) return false;
  return true;
}

std::string Mono::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]->[" + std::to_string(cod) + "]";
}

Mono omit(int m, int k) {
  Mono t{m, {}};
  for (int i = 0; i <= m; ++i)
    if (i != k) t.v.push_back(i);
  return t;
}

Mono vertex_map(int m, int k) { return Mono{m, {k}}; }

Mono codegeneracy(int m, int k) {
  Mono t{m, {}};
  for (int i = 0; i <= m + 1; ++i) t.v.push_back(i <= k ? i : i - 1);
  return t;
}

Mono identity_map(int m) {
  Mono t{m, std::vector<int>(m + 1)};
  std::iota(t.v.begin(), t.v.end(), 0);
  return t;
}

Mono constant_map(int i, int j, int value) { return Mono{j, std::vector<int>(i + 1, value)}; }

Mono compose(const Mono& t, const Mono& s) {
  Mono r{t.cod, {}};
  for (int x : s.v) r.v.push_back(t.v[x]);
  return r;
}

Mono plus_left(const Mono& t) {
  Mono r{t.cod + 1, {0}};
  for (int x : t.v) r.v.push_back(x + 1);
  return r;
}

Mono plus_right(const Mono& t) {
  Mono r{t.cod + 1, t.v};
  r.v.push_back(t.cod + 1);
  return r;
}

std::vector<Mono> monotone_maps(int i, int j) {
  std::vector<Mono> out;
  std::vector<int> v(i + 1, 0);
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos > i) {
      out.push_back(Mono{j, v});
      return;
    }
    for (int x = lo; x <= j; ++x) {
      v[pos] = x;
      self(self, pos + 1, x);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// ---- building ----

namespace {

std::string dim_label(int m) { return "dimension " + std::to_string(m); }

}  // namespace

int TruncatedSSet::find(int k, const std::string& name) const {
  if (k < 0 || k > top()) return -1;
  auto it = index_[k].find(name);
  return it == index_[k].end() ? -1 : it->second;
}

const std::vector<int>& TruncatedSSet::table(const Mono& t) const {
  auto it = table_index_.find(t);
  if (it == table_index_.end())
    throw Error(ErrorKind::IndexOutOfRange, "no structure map " + t.str());
  return tables_[it->second];
}

int TruncatedSSet::apply(const Mono& t, int x) const { return table(t)[x]; }

std::vector<int> TruncatedSSet::boundary(int m, int x) const {
  std::vector<int> b(m + 1);
  for (int j = 0; j <= m; ++j) b[j] = faces_[m][j][x];
  return b;
}

std::vector<int> TruncatedSSet::boundary_omit(int m, int i, int x) const {
  std::vector<int> b;
  for (int j = 0; j <= m; ++j)
    if (j != i) b.push_back(faces_[m][j][x]);
  return b;
}

const std::vector<int>& TruncatedSSet::with_face(int m, int r, int v) const {
  return face_index_[m][r].by_value[v];
}

const std::vector<int>& TruncatedSSet::with_faces(int m, int r, int v, int t, int w) const {
  static const std::vector<int> none;
  if (r > t) std::swap(r, t), std::swap(v, w);
  auto it = pair_index_[m].find(pair_key(r, v, t, w));
  return it == pair_index_[m].end() ? none : it->second;
}

const std::vector<int>* TruncatedSSet::with_boundary(int m, const std::vector<int>& b) const {
  if (coded_[m]) {
    std::uint64_t key = 0;
    const std::uint64_t radix = static_cast<std::uint64_t>(size(m - 1));
    for (int v : b) {
      if (v < 0 || v >= size(m - 1)) return nullptr;
      key = key * radix + static_cast<std::uint64_t>(v);
    }
    auto it = coded_index_[m].find(key);
    return it == coded_index_[m].end() ? nullptr : &it->second;
  }
  auto it = boundary_index_[m].find(b);
  return it == boundary_index_[m].end() ? nullptr : &it->second;
}

TruncatedSSet TruncatedSSet::build(RawSSet raw) {
  TruncatedSSet X;
  const int n = raw.n;
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "truncation level must be >= 0");
  if (static_cast<int>(raw.simplices.size()) != n + 2)
    throw Error(ErrorKind::MissingMap, "expected simplex lists for dimensions 0.." + std::to_string(n + 1));
  X.n_ = n;
  X.names_ = raw.simplices;
  X.index_.resize(n + 2);
  for (int k = 0; k <= n + 1; ++k) {
    for (int x = 0; x < static_cast<int>(X.names_[k].size()); ++x) {
      if (!X.index_[k].emplace(X.names_[k][x], x).second)
        throw Error(ErrorKind::InvalidArgument, "duplicate simplex '" + X.names_[k][x] + "' in " + dim_label(k));
    }
  }
  auto sz = [&](int k) { return static_cast<int>(X.names_[k].size()); };

  raw.faces.resize(std::max<std::size_t>(raw.faces.size(), n + 2));
  raw.degens.resize(std::max<std::size_t>(raw.degens.size(), n + 1));
  X.faces_.assign(n + 2, {});
  for (int m = 1; m <= n + 1; ++m) {
    if (static_cast<int>(raw.faces[m].size()) != m + 1)
      throw Error(ErrorKind::MissingMap, "face maps d^j@" + std::to_string(m) + " incomplete");
    for (int j = 0; j <= m; ++j) {
      const auto& f = raw.faces[m][j];
      if (static_cast<int>(f.size()) != sz(m))
        throw Error(ErrorKind::MissingMap, "d^" + std::to_string(j) + "@" + std::to_string(m) + " not total");
      for (int x = 0; x < sz(m); ++x)
        if (f[x] < 0 || f[x] >= sz(m - 1))
          throw Error(ErrorKind::MissingMap, "d^" + std::to_string(j) + "@" + std::to_string(m) +
                                                 " undefined on '" + X.names_[m][x] + "'");
    }
    X.faces_[m] = raw.faces[m];
  }
  X.degens_.assign(n + 1, {});
  for (int m = 0; m <= n; ++m) {
    if (static_cast<int>(raw.degens[m].size()) != m + 1)
      throw Error(ErrorKind::MissingMap, "degeneracies s^j@" + std::to_string(m) + " incomplete");
    for (int j = 0; j <= m; ++j) {
      const auto& s = raw.degens[m][j];
      if (static_cast<int>(s.size()) != sz(m))
        throw Error(ErrorKind::MissingMap, "s^" + std::to_string(j) + "@" + std::to_string(m) + " not total");
      for (int x = 0; x < sz(m); ++x)
        if (s[x] < 0 || s[x] >= sz(m + 1))
          throw Error(ErrorKind::MissingMap, "s^" + std::to_string(j) + "@" + std::to_string(m) +
                                                 " undefined on '" + X.names_[m][x] + "'");
    }
    X.degens_[m] = raw.degens[m];
  }

  // All d_t by epi-mono factorization: apply faces for the indices missing
  // from the image (largest first), then degeneracies for repeated values.
  for (int j = 0; j <= n + 1; ++j) {
    for (int i = 0; i <= n + 1; ++i) {
      for (const Mono& t : monotone_maps(i, j)) {
        std::vector<int> image = t.v;
        image.erase(std::unique(image.begin(), image.end()), image.end());
        std::vector<int> missing;
        for (int r = 0, p = 0; r <= j; ++r) {
          if (p < static_cast<int>(image.size()) && image[p] == r)
            ++p;
          else
            missing.push_back(r);
        }
        std::vector<int> mult(image.size(), 0);
        for (int x : t.v) mult[std::lower_bound(image.begin(), image.end(), x) - image.begin()]++;
        std::vector<int> tab(sz(j));
        for (int x = 0; x < sz(j); ++x) {
          int y = x, dim = j;
          for (auto it = missing.rbegin(); it != missing.rend(); ++it) y = X.faces_[dim--][*it][y];
          for (int r = static_cast<int>(image.size()) - 1; r >= 0; --r)
            for (int c = 1; c < mult[r]; ++c) y = X.degens_[dim++][r][y];
          tab[x] = y;
        }
        X.table_index_.emplace(t, static_cast<int>(X.tables_.size()));
        X.tables_.push_back(std::move(tab));
      }
    }
  }

  // Functoriality: d_{t o s} = d_s o d_t for every t and every elementary s
  // (cofaces and codegeneracies), which by induction covers all composable
  // pairs; d_id = id is checked as well.
  for (const auto& [t, ti] : X.table_index_) {
    const int i = t.dom();
    const auto& dt = X.tables_[ti];
    if (t.is_identity()) {
      for (int x = 0; x < sz(t.cod); ++x)
        if (dt[x] != x)
          throw Error(ErrorKind::IdentityViolation, "d_id moves '" + X.names_[t.cod][x] + "'");
    }
    std::vector<Mono> elementary;
    if (i >= 1)
      for (int k = 0; k <= i; ++k) elementary.push_back(omit(i, k));
    if (i + 1 <= n + 1)
      for (int k = 0; k <= i; ++k) elementary.push_back(codegeneracy(i, k));
    for (const Mono& s : elementary) {
      const auto& ds = X.tables_[X.table_index_.at(s)];
      const auto& dts = X.tables_[X.table_index_.at(compose(t, s))];
      for (int x = 0; x < sz(t.cod); ++x) {
        if (dts[x] != ds[dt[x]])
          throw Error(ErrorKind::IdentityViolation,
                      "d_{t.s} != d_s.d_t for t=" + t.str() + ", s=" + s.str() + " at simplex '" +
                          X.names_[t.cod][x] + "' (dimension " + std::to_string(t.cod) + ")");
      }
    }
  }

  X.vertices_.assign(n + 2, {});
  X.constants_.assign(n + 2, {});
  for (int m = 0; m <= n + 1; ++m) {
    for (int k = 0; k <= m; ++k) X.vertices_[m].push_back(X.tables_[X.table_index_.at(vertex_map(m, k))]);
    X.constants_[m] = X.tables_[X.table_index_.at(constant_map(m, 0, 0))];
  }

  X.face_index_.assign(n + 2, {});
  X.boundary_index_.assign(n + 2, {});
  X.coded_index_.assign(n + 2, {});
  X.coded_.assign(n + 2, false);
  X.pair_index_.assign(n + 2, {});
  for (int m = 1; m <= n + 1; ++m) {
    X.face_index_[m].resize(m + 1);
    for (int r = 0; r <= m; ++r) {
      auto& b = X.face_index_[m][r].by_value;
      b.assign(sz(m - 1), {});
      for (int x = 0; x < sz(m); ++x) b[X.faces_[m][r][x]].push_back(x);
    }
    // boundaries packed into one integer when the mixed-radix code fits
    const double bits = (m + 1) * std::log2(std::max(2, sz(m - 1)));
    X.coded_[m] = bits < 62;
    for (int x = 0; x < sz(m); ++x) {
      if (X.coded_[m]) {
        std::uint64_t key = 0;
        for (int r = 0; r <= m; ++r) key = key * static_cast<std::uint64_t>(sz(m - 1)) + X.faces_[m][r][x];
        X.coded_index_[m][key].push_back(x);
      } else {
        X.boundary_index_[m][X.boundary(m, x)].push_back(x);
      }
    }
    auto& pairs = X.pair_index_[m];
    for (int r = 0; r <= m; ++r)
      for (int t = r + 1; t <= m; ++t)
        for (int x = 0; x < sz(m); ++x)
          pairs[pair_key(r, X.faces_[m][r][x], t, X.faces_[m][t][x])].push_back(x);
  }
  X.raw_ = std::move(raw);
  X.raw_.faces.resize(n + 2);
  X.raw_.degens.resize(n + 1);
  return X;
}

SSet make_sset(RawSSet raw) { return std::make_shared<const TruncatedSSet>(TruncatedSSet::build(std::move(raw))); }

SSet point_sset(int n) {
  RawSSet r;
  r.n = n;
  r.simplices.assign(n + 2, {"*"});
  r.faces.assign(n + 2, {});
  for (int m = 1; m <= n + 1; ++m) r.faces[m].assign(m + 1, {0});
  r.degens.assign(n + 1, {});
  for (int m = 0; m <= n; ++m) r.degens[m].assign(m + 1, {0});
  return make_sset(r);
}

bool same_structure(const TruncatedSSet& a, const TruncatedSSet& b) {
  return a.n() == b.n() && a.raw().simplices == b.raw().simplices && a.raw().faces == b.raw().faces &&
         a.raw().degens == b.raw().degens;
}

// ---- cycles and horns ----

namespace {

// Backtracking over stored simplices of dimension m, pruned through the
// face buckets of the first chosen position.
template <class Visit>
bool enumerate_stored(const TruncatedSSet& X, int m, int len, int omit_pos, const Visit& visit) {
  std::vector<int> pos;
  for (int p = 0; p < len; ++p)
    if (p != omit_pos) pos.push_back(p);
  std::vector<int> x(len, -1);
  const int depth = static_cast<int>(pos.size());
  const int count = X.size(m);
  std::vector<int> all(count);
  std::iota(all.begin(), all.end(), 0);
  bool go = true;
  auto rec = [&](auto&& self, int d) -> void {
    if (d == depth) {
      if constexpr (std::is_same_v<decltype(visit(x)), bool>)
        go = visit(x);
      else
        visit(x);
      return;
    }
    const int l = pos[d];
    const std::vector<int>* cand = &all;
    int first = 1;
    if (d == 1 && m >= 1) {
      const int j = pos[0];
      cand = &X.with_face(m, j, X.face(m, l - 1, x[j]));
    } else if (d > 1 && m >= 1) {
      const int j = pos[0], k = pos[1];
      cand = &X.with_faces(m, j, X.face(m, l - 1, x[j]), k, X.face(m, l - 1, x[k]));
      first = 2;
    }
    for (int c : *cand) {
      bool ok = true;
      if (m >= 1) {
        for (int e = first; e < d && ok; ++e) {
          const int j = pos[e];
          if (X.face(m, l - 1, x[j]) != X.face(m, j, c)) ok = false;
        }
      }
      if (!ok) continue;
      x[l] = c;
      self(self, d + 1);
      if (!go) break;
    }
    x[l] = -1;
  };
  rec(rec, 0);
  return go;
}

template <class Visit>
void enumerate_level(const TruncatedSSet& X, int m, int len, int omit_pos, const Visit& visit) {
  if (m <= X.top()) {
    enumerate_stored(X, m, len, omit_pos, visit);
    return;
  }
  const ExtendedLevel L = extend_dimension(X, m);
  auto face = [&](int j, int x) { return L.elements[x][j]; };
  for_each_compatible(static_cast<int>(L.elements.size()), len, omit_pos, face, visit);
}

}  // namespace

std::vector<Cycle> cycles(const TruncatedSSet& X, int m) {
  if (m < 0) throw Error(ErrorKind::IndexOutOfRange, "cycle dimension must be >= 0");
  std::vector<Cycle> out;
  enumerate_level(X, m, m + 2, -1, [&](const std::vector<int>& x) { out.push_back(Cycle{m, x}); });
  return out;
}

std::vector<Horn> horns(const TruncatedSSet& X, int m, int i) {
  if (m < 1) throw Error(ErrorKind::IndexOutOfRange, "horns need simplex dimension >= 1");
  if (i < 0 || i > m) throw Error(ErrorKind::IndexOutOfRange, "horn index " + std::to_string(i) + " not in [0," + std::to_string(m) + "]");
  std::vector<Horn> out;
  enumerate_level(X, m - 1, m + 1, i, [&](const std::vector<int>& x) {
    Horn h{m, i, {}};
    for (int p = 0; p <= m; ++p)
      if (p != i) h.faces.push_back(x[p]);
    out.push_back(std::move(h));
  });
  return out;
}

void for_each_horn(const TruncatedSSet& X, int m, int i, const std::function<bool(const std::vector<int>&)>& visit) {
  if (m < 1) throw Error(ErrorKind::IndexOutOfRange, "horns need simplex dimension >= 1");
  if (i < 0 || i > m) throw Error(ErrorKind::IndexOutOfRange, "horn index out of range");
  if (m - 1 > X.top()) throw Error(ErrorKind::IndexOutOfRange, "streaming horns need stored faces");
  enumerate_stored(X, m - 1, m + 1, i, visit);
}

Cycle boundary(const TruncatedSSet& X, int m, int g) {
  if (m == 0) return Cycle{-1, {}};
  return Cycle{m - 1, X.boundary(m, g)};
}

Horn boundary_omit(const TruncatedSSet& X, int m, int i, int g) {
  if (i < 0 || i > m) throw Error(ErrorKind::IndexOutOfRange, "horn index out of range");
  return Horn{m, i, X.boundary_omit(m, i, g)};
}

bool is_cycle(const TruncatedSSet& X, const Cycle& c) {
  const int m = c.m;
  if (m < 0) return c.faces.empty();
  if (static_cast<int>(c.faces.size()) != m + 2) return false;
  if (m > X.top()) throw Error(ErrorKind::IndexOutOfRange, "is_cycle above stored dimensions");
  for (int x : c.faces)
    if (x < 0 || x >= X.size(m)) return false;
  if (m == 0) return true;
  for (int j = 0; j < m + 2; ++j)
    for (int l = j + 1; l < m + 2; ++l)
      if (X.face(m, l - 1, c.faces[j]) != X.face(m, j, c.faces[l])) return false;
  return true;
}

bool is_horn(const TruncatedSSet& X, const Horn& h) {
  const int m = h.m;
  if (h.i < 0 || h.i > m || static_cast<int>(h.faces.size()) != m) return false;
  if (m - 1 > X.top()) throw Error(ErrorKind::IndexOutOfRange, "is_horn above stored dimensions");
  std::vector<int> x(m + 1, -1);
  for (int p = 0, q = 0; p <= m; ++p)
    if (p != h.i) x[p] = h.faces[q++];
  for (int p = 0; p <= m; ++p)
    if (p != h.i && (x[p] < 0 || x[p] >= X.size(m - 1))) return false;
  if (m - 1 == 0) return true;
  for (int j = 0; j <= m; ++j)
    for (int l = j + 1; l <= m; ++l) {
      if (j == h.i || l == h.i) continue;
      if (X.face(m - 1, l - 1, x[j]) != X.face(m - 1, j, x[l])) return false;
    }
  return true;
}

ExtendedLevel extend_from(const TruncatedSSet&, const ExtendedLevel& prev) {
  ExtendedLevel next{prev.m + 1, {}};
  auto face = [&](int j, int x) { return prev.elements[x][j]; };
  for_each_compatible(static_cast<int>(prev.elements.size()), prev.m + 2, -1, face,
                      [&](const std::vector<int>& x) { next.elements.push_back(x); });
  return next;
}

ExtendedLevel extend_dimension(const TruncatedSSet& X, int m) {
  if (m <= X.top()) throw Error(ErrorKind::IndexOutOfRange, "extend_dimension needs m > n+1");
  ExtendedLevel L{X.top() + 1, {}};
  enumerate_stored(X, X.top(), X.top() + 2, -1, [&](const std::vector<int>& x) { L.elements.push_back(x); });
  while (L.m < m) L = extend_from(X, L);
  return L;
}

// ---- maps ----

std::string MapViolation::describe(const SimplicialMap& f) const {
  std::ostringstream os;
  os << "map does not commute with d_" << t.str() << " at '" << f.source->name(dim, simplex) << "' (dimension "
     << dim << ")";
  return os.str();
}

std::optional<MapViolation> validate_map(const SimplicialMap& f) {
  const auto& X = *f.source;
  const auto& Y = *f.target;
  if (X.n() != Y.n()) throw Error(ErrorKind::DimensionMismatch, "source and target truncation levels differ");
  if (static_cast<int>(f.components.size()) != X.top() + 1)
    throw Error(ErrorKind::DimensionMismatch, "map needs one component per dimension");
  for (int k = 0; k <= X.top(); ++k) {
    if (static_cast<int>(f.components[k].size()) != X.size(k))
      throw Error(ErrorKind::DimensionMismatch, "component in dimension " + std::to_string(k) + " not total");
    for (int y : f.components[k])
      if (y < 0 || y >= Y.size(k))
        throw Error(ErrorKind::DimensionMismatch, "component value out of range in dimension " + std::to_string(k));
  }
  for (int j = 0; j <= X.top(); ++j)
    for (int i = 0; i <= X.top(); ++i)
      for (const Mono& t : monotone_maps(i, j)) {
        const auto& tx = X.table(t);
        const auto& ty = Y.table(t);
        for (int x = 0; x < X.size(j); ++x)
          if (f.components[i][tx[x]] != ty[f.components[j][x]]) return MapViolation{t, j, x};
      }
  return std::nullopt;
}

SimplicialMap identity_map(const SSet& X) {
  SimplicialMap f{X, X, {}};
  for (int k = 0; k <= X->top(); ++k) {
    std::vector<int> c(X->size(k));
    std::iota(c.begin(), c.end(), 0);
    f.components.push_back(c);
  }
  return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  SimplicialMap h{f.source, g.target, {}};
  for (std::size_t k = 0; k < f.components.size(); ++k) {
    std::vector<int> c;
    for (int x : f.components[k]) c.push_back(g.components[k][x]);
    h.components.push_back(c);
  }
  return h;
}

SimplicialMap map_from_components(const SSet& src, const SSet& tgt, std::vector<std::vector<int>> components) {
  SimplicialMap f{src, tgt, std::move(components)};
  if (auto v = validate_map(f)) throw Error(ErrorKind::IdentityViolation, v->describe(f));
  return f;
}

// ---- discs ----

int disc_word_index(int l, const std::vector<int>& word) {
  int idx = 0;
  for (int x : word) idx = idx * (l + 1) + x;
  return idx;
}

std::vector<int> disc_word(int l, int k, int index) {
  std::vector<int> w(k + 1);
  for (int p = k; p >= 0; --p) {
    w[p] = index % (l + 1);
    index /= (l + 1);
  }
  return w;
}

namespace {
SSet build_disc(int l, int n) {
  RawSSet r;
  r.n = n;
  std::vector<int> count(n + 2);
  for (int k = 0; k <= n + 1; ++k) {
    int c = 1;
    for (int p = 0; p <= k; ++p) c *= (l + 1);
    count[k] = c;
    std::vector<std::string> names;
    for (int x = 0; x < c; ++x) {
      std::string s;
      for (int d : disc_word(l, k, x)) s += (l < 10 ? std::to_string(d) : std::to_string(d) + ".");
      names.push_back(s);
    }
    r.simplices.push_back(names);
  }
  r.faces.assign(n + 2, {});
  for (int m = 1; m <= n + 1; ++m)
    for (int j = 0; j <= m; ++j) {
      std::vector<int> f(count[m]);
      for (int x = 0; x < count[m]; ++x) {
        auto w = disc_word(l, m, x);
        w.erase(w.begin() + j);
        f[x] = disc_word_index(l, w);
      }
      r.faces[m].push_back(f);
    }
  r.degens.assign(n + 1, {});
  for (int m = 0; m <= n; ++m)
    for (int j = 0; j <= m; ++j) {
      std::vector<int> s(count[m]);
      for (int x = 0; x < count[m]; ++x) {
        auto w = disc_word(l, m, x);
        w.insert(w.begin() + j, w[j]);
        s[x] = disc_word_index(l, w);
      }
      r.degens[m].push_back(s);
    }
  return make_sset(r);
}

}  // namespace

// Discs are immutable and rebuilt often; keep one per (l, n).
SSet disc(int l, int n) {
  if (l < 0) throw Error(ErrorKind::InvalidArgument, "disc needs l >= 0");
  static std::mutex mu;
  static std::map<std::pair<int, int>, SSet> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{l, n}];
  if (!slot) slot = build_disc(l, n);
  return slot;
}

SimplicialMap disc_map(const std::vector<int>& phi, int r, int l, int n) {
  if (static_cast<int>(phi.size()) != r + 1) throw Error(ErrorKind::InvalidArgument, "disc_map needs phi on 0..r");
  for (int x : phi)
    if (x < 0 || x > l) throw Error(ErrorKind::InvalidArgument, "disc_map value out of range");
  SSet src = disc(r, n), tgt = disc(l, n);
  SimplicialMap f{src, tgt, {}};
  for (int k = 0; k <= n + 1; ++k) {
    std::vector<int> c(src->size(k));
    for (int x = 0; x < src->size(k); ++x) {
      auto w = disc_word(r, k, x);
      for (int& d : w) d = phi[d];
      c[x] = disc_word_index(l, w);
    }
    f.components.push_back(c);
  }
  return f;
}

// ---- constructions ----

SSet product(const SSet& X, const SSet& Y) {
  if (X->n() != Y->n()) throw Error(ErrorKind::DimensionMismatch, "product of different truncation levels");
  const int n = X->n();
  RawSSet r;
  r.n = n;
  for (int k = 0; k <= n + 1; ++k) {
    std::vector<std::string> names;
    for (int x = 0; x < X->size(k); ++x)
      for (int y = 0; y < Y->size(k); ++y) names.push_back("(" + X->name(k, x) + "," + Y->name(k, y) + ")");
    r.simplices.push_back(names);
  }
  auto pair = [&](int k, int x, int y) { return x * Y->size(k) + y; };
  r.faces.assign(n + 2, {});
  for (int m = 1; m <= n + 1; ++m)
    for (int j = 0; j <= m; ++j) {
      std::vector<int> f;
      for (int x = 0; x < X->size(m); ++x)
        for (int y = 0; y < Y->size(m); ++y) f.push_back(pair(m - 1, X->face(m, j, x), Y->face(m, j, y)));
      r.faces[m].push_back(f);
    }
  r.degens.assign(n + 1, {});
  for (int m = 0; m <= n; ++m)
    for (int j = 0; j <= m; ++j) {
      std::vector<int> s;
      for (int x = 0; x < X->size(m); ++x)
        for (int y = 0; y < Y->size(m); ++y) s.push_back(pair(m + 1, X->degen(m, j, x), Y->degen(m, j, y)));
      r.degens[m].push_back(s);
    }
  return make_sset(r);
}

SSet coproduct(const SSet& X, const SSet& Y) {
  if (X->n() != Y->n()) throw Error(ErrorKind::DimensionMismatch, "coproduct of different truncation levels");
  const int n = X->n();
  RawSSet r;
  r.n = n;
  for (int k = 0; k <= n + 1; ++k) {
    std::vector<std::string> names;
    for (const auto& s : X->names(k)) names.push_back("L." + s);
    for (const auto& s : Y->names(k)) names.push_back("R." + s);
    r.simplices.push_back(names);
  }
  r.faces.assign(n + 2, {});
  for (int m = 1; m <= n + 1; ++m)
    for (int j = 0; j <= m; ++j) {
      std::vector<int> f;
      for (int x = 0; x < X->size(m); ++x) f.push_back(X->face(m, j, x));
      for (int y = 0; y < Y->size(m); ++y) f.push_back(X->size(m - 1) + Y->face(m, j, y));
      r.faces[m].push_back(f);
    }
  r.degens.assign(n + 1, {});
  for (int m = 0; m <= n; ++m)
    for (int j = 0; j <= m; ++j) {
      std::vector<int> s;
      for (int x = 0; x < X->size(m); ++x) s.push_back(X->degen(m, j, x));
      for (int y = 0; y < Y->size(m); ++y) s.push_back(X->size(m + 1) + Y->degen(m, j, y));
      r.degens[m].push_back(s);
    }
  return make_sset(r);
}

SSet truncate(const SSet& X, int n) {
  if (n > X->n() || n < 0) throw Error(ErrorKind::DimensionMismatch, "truncate needs 0 <= n <= level");
  RawSSet r;
  r.n = n;
  for (int k = 0; k <= n + 1; ++k) r.simplices.push_back(X->names(k));
  r.faces.assign(n + 2, {});
  for (int m = 1; m <= n + 1; ++m) r.faces[m] = X->raw().faces[m];
  r.degens.assign(n + 1, {});
  for (int m = 0; m <= n; ++m) r.degens[m] = X->raw().degens[m];
  return make_sset(r);
}

SSet relabel(const SSet& X, const std::string& prefix) {
  RawSSet r = X->raw();
  for (auto& dim : r.simplices)
    for (auto& s : dim) s = prefix + s;
  return make_sset(r);
}

}  // namespace trunkan
