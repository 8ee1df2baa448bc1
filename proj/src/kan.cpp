#include "trunkan/kan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace trunkan {

namespace {

std::string tuple_names(const TruncatedSSet& X, int dim, const std::vector<int>& xs) {
  std::string s = "(";
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (j) s += ", ";
    s += dim <= X.top() && xs[j] >= 0 ? X.name(dim, xs[j]) : std::to_string(xs[j]);
  }
  return s + ")";
}

// full tuple with -1 at the omitted slot
std::vector<int> horn_full(const Horn& h) {
  std::vector<int> x(h.m + 1, -1);
  for (int p = 0, q = 0; p <= h.m; ++p)
    if (p != h.i) x[p] = h.faces[q++];
  return x;
}

std::vector<int> missing_boundary_full(const TruncatedSSet& X, int m, int i, const std::vector<int>& x) {
  std::vector<int> b(m);
  for (int j = 0; j < i; ++j) b[j] = X.face(m - 1, i - 1, x[j]);
  for (int l = i + 1; l <= m; ++l) b[l - 1] = X.face(m - 1, i, x[l]);
  return b;
}

int count_fillers_full(const TruncatedSSet& X, int m, int i, const std::vector<int>& x, int cap) {
  if (m == X.top() + 1) {
    thread_local std::vector<int> b;
    b.resize(m);
    for (int j = 0; j < i; ++j) b[j] = X.face(m - 1, i - 1, x[j]);
    for (int l = i + 1; l <= m; ++l) b[l - 1] = X.face(m - 1, i, x[l]);
    const auto* c = X.with_boundary(X.top(), b);
    return c ? std::min<int>(cap, static_cast<int>(c->size())) : 0;
  }
  const int r = i == 0 ? 1 : 0;
  int cnt = 0;
  for (int g : X.with_face(m, r, x[r])) {
    bool ok = true;
    for (int p = r + 1; p <= m && ok; ++p)
      if (p != i && X.face(m, p, g) != x[p]) ok = false;
    if (ok && ++cnt >= cap) break;
  }
  return cnt;
}

AxiomReport check_axioms(const TruncatedSSet& X, bool groupoid) {
  AxiomReport rep;
  const int n = X.n();
  for (int m = 1; m <= n + 2; ++m) {
    const bool top = m >= n + 1;
    for (int i = 0; i <= m; ++i) {
      if (!groupoid && (i == 0 || i == m)) continue;
      bool fill_seen = false, unique_seen = false;
      for_each_horn(X, m, i, [&](const std::vector<int>& x) {
        const int cnt = count_fillers_full(X, m, i, x, 2);
        auto record = [&](const char* axiom) {
          Horn h{m, i, {}};
          for (int p = 0; p <= m; ++p)
            if (p != i) h.faces.push_back(x[p]);
          rep.failures.push_back(AxiomFailure{axiom, m, i, h, cnt});
        };
        if (cnt == 0 && !fill_seen) {
          fill_seen = true;
          record("fill");
        }
        if (top && cnt > 1 && !unique_seen) {
          unique_seen = true;
          record("unique");
        }
        return !(fill_seen && (unique_seen || !top));
      });
    }
  }
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace

std::string AxiomFailure::describe(const TruncatedSSet& X) const {
  std::ostringstream os;
  os << (axiom == "fill" ? "horn without filler" : "horn with several fillers") << " at m=" << m << ", i=" << i
     << ": " << tuple_names(X, m - 1, witness.faces);
  if (axiom == "unique") os << " (" << fillers << "+ fillers)";
  return os.str();
}

AxiomReport check_n_category(const TruncatedSSet& X) { return check_axioms(X, false); }
AxiomReport check_n_groupoid(const TruncatedSSet& X) { return check_axioms(X, true); }

std::vector<int> missing_face_boundary(const TruncatedSSet& X, const Horn& h) {
  if (h.m < 2) throw Error(ErrorKind::IndexOutOfRange, "missing face boundary needs m >= 2");
  return missing_boundary_full(X, h.m, h.i, horn_full(h));
}

std::vector<int> fillers(const TruncatedSSet& X, const Horn& h) {
  if (h.i < 0 || h.i > h.m || static_cast<int>(h.faces.size()) != h.m)
    throw Error(ErrorKind::IndexOutOfRange, "malformed horn");
  const auto x = horn_full(h);
  std::vector<int> out;
  if (h.m == X.top() + 1) {
    if (const auto* c = X.with_boundary(X.top(), missing_boundary_full(X, h.m, h.i, x))) out = *c;
    return out;
  }
  if (h.m > X.top() + 1 || h.m < 1) throw Error(ErrorKind::IndexOutOfRange, "fillers above n+2");
  const int r = h.i == 0 ? 1 : 0;
  for (int g : X.with_face(h.m, r, x[r])) {
    bool ok = true;
    for (int p = r + 1; p <= h.m && ok; ++p)
      if (p != h.i && X.face(h.m, p, g) != x[p]) ok = false;
    if (ok) out.push_back(g);
  }
  return out;
}

int fill_top(const TruncatedSSet& X, const Horn& h) {
  if (h.m != X.top()) throw Error(ErrorKind::IndexOutOfRange, "fill_top needs a horn of (n+1)-simplices");
  auto f = fillers(X, h);
  if (f.empty()) throw Error(ErrorKind::NoFiller, "no filler for " + tuple_names(X, h.m - 1, h.faces));
  if (f.size() > 1) throw Error(ErrorKind::NotUnique, "several fillers for " + tuple_names(X, h.m - 1, h.faces));
  return f[0];
}

int compose(const TruncatedSSet& X, const Horn& h) { return X.face(h.m, h.i, fill_top(X, h)); }

Cycle constant_cycle(const TruncatedSSet& X, int k, int a) {
  if (k == 0) return Cycle{-1, {}};
  return Cycle{k - 1, std::vector<int>(k + 1, X.constant(k - 1, a))};
}

bool homotopic(const TruncatedSSet& X, int k, int alpha, int beta) {
  std::vector<int> w{alpha, beta};
  for (int i = 2; i <= k + 1; ++i) w.push_back(X.degen(k - 1, 0, X.face(k, i - 1, alpha)));
  if (k + 1 <= X.top()) return X.with_boundary(k + 1, w) != nullptr;
  if (k + 1 == X.top() + 1) return is_cycle(X, Cycle{k, w});
  throw Error(ErrorKind::IndexOutOfRange, "homotopy above n+2");
}

int HomotopyClassTable::class_of(int x) const {
  auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || *it != x) return -1;
  return block_index[it - members.begin()];
}

HomotopyClassTable s_classes(const TruncatedSSet& X, const Cycle& b) {
  HomotopyClassTable T;
  T.base = b;
  T.k = b.m + 1;
  if (T.k > X.top()) throw Error(ErrorKind::IndexOutOfRange, "S-classes above dimension n+1");
  if (b.m < 0) {
    T.members.resize(X.size(0));
    std::iota(T.members.begin(), T.members.end(), 0);
  } else if (const auto* s = X.with_boundary(T.k, b.faces)) {
    T.members = *s;
  }
  const int N = static_cast<int>(T.members.size());
  std::vector<std::vector<char>> R(N, std::vector<char>(N));
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) R[p][q] = homotopic(X, T.k, T.members[p], T.members[q]);
  for (int p = 0; p < N && T.equivalence; ++p) {
    if (!R[p][p]) T.equivalence = false;
    for (int q = 0; q < N && T.equivalence; ++q) {
      if (R[p][q] != R[q][p]) T.equivalence = false;
      for (int r = 0; r < N && T.equivalence; ++r)
        if (R[p][q] && R[q][r] && !R[p][r]) T.equivalence = false;
    }
  }
  // blocks of the generated equivalence relation
  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q)
      if (R[p][q]) parent[find(p)] = find(q);
  T.block_index.assign(N, -1);
  std::vector<int> block_of_root(N, -1);
  for (int p = 0; p < N; ++p) {
    int r = find(p);
    if (block_of_root[r] < 0) {
      block_of_root[r] = static_cast<int>(T.classes.size());
      T.classes.emplace_back();
    }
    T.block_index[p] = block_of_root[r];
    T.classes[block_of_root[r]].push_back(T.members[p]);
  }
  return T;
}

HomotopyClassTable pi_k(const TruncatedSSet& X, int a, int k) {
  if (k < 0 || k > X.n()) throw Error(ErrorKind::IndexOutOfRange, "pi_k needs 0 <= k <= n");
  if (a < 0 || a >= X.size(0)) throw Error(ErrorKind::IndexOutOfRange, "base point out of range");
  return s_classes(X, constant_cycle(X, k, a));
}

WeqVerdict is_weak_equivalence(const SimplicialMap& f, bool check_prereq) {
  const TruncatedSSet& X = *f.source;
  const TruncatedSSet& Y = *f.target;
  if (X.n() != Y.n()) throw Error(ErrorKind::DimensionMismatch, "weak equivalence between different levels");
  if (check_prereq) {
    auto rx = check_n_groupoid(X);
    if (!rx.ok) throw Error(ErrorKind::AxiomPrereqFailed, "source: " + rx.failures[0].describe(X));
    auto ry = check_n_groupoid(Y);
    if (!ry.ok) throw Error(ErrorKind::AxiomPrereqFailed, "target: " + ry.failures[0].describe(Y));
  }
  WeqVerdict v;
  const int n = X.n();
  if (X.empty()) {
    v.weq = v.criterion_pi = v.criterion_explicit = v.criterion_classes = Y.empty();
    v.agree = true;
    if (!v.weq) v.diagnostic = "empty source, non-empty target";
    return v;
  }

  // Def: pi_k bijective everywhere.
  v.criterion_pi = true;
  for (int k = 0; k <= n && v.criterion_pi; ++k) {
    for (int a = 0; a < X.size(0) && v.criterion_pi; ++a) {
      auto tx = pi_k(X, a, k);
      auto ty = pi_k(Y, f(0, a), k);
      std::vector<int> hit(ty.classes.size(), 0);
      bool inj = true;
      for (const auto& block : tx.classes) {
        int c = ty.class_of(f(k, block[0]));
        if (hit[c]++) inj = false;
      }
      bool sur = std::all_of(hit.begin(), hit.end(), [](int h) { return h > 0; });
      if (!inj || !sur) {
        v.criterion_pi = false;
        v.fail_k = k;
        v.fail_a = a;
        v.diagnostic = "pi_" + std::to_string(k) + " at '" + X.name(0, a) + "' is " +
                       (inj ? "not surjective" : "not injective") + " (" + std::to_string(tx.classes.size()) +
                       " vs " + std::to_string(ty.classes.size()) + " classes)";
      }
    }
  }

  // Explicit form: injective and surjective up to the relation.
  v.criterion_explicit = true;
  for (int k = 0; k <= n && v.criterion_explicit; ++k) {
    for (int a = 0; a < X.size(0) && v.criterion_explicit; ++a) {
      Cycle bx = constant_cycle(X, k, a);
      Cycle by = constant_cycle(Y, k, f(0, a));
      std::vector<int> sx, sy;
      if (k == 0) {
        sx.resize(X.size(0));
        std::iota(sx.begin(), sx.end(), 0);
        sy.resize(Y.size(0));
        std::iota(sy.begin(), sy.end(), 0);
      } else {
        if (auto* p = X.with_boundary(k, bx.faces)) sx = *p;
        if (auto* p = Y.with_boundary(k, by.faces)) sy = *p;
      }
      for (int g1 : sx)
        for (int g2 : sx)
          if (homotopic(Y, k, f(k, g1), f(k, g2)) && !homotopic(X, k, g1, g2)) v.criterion_explicit = false;
      for (int h : sy) {
        bool found = false;
        for (int g : sx)
          if (homotopic(Y, k, f(k, g), h)) {
            found = true;
            break;
          }
        if (!found) v.criterion_explicit = false;
      }
    }
  }

  // Surjectivity on S-classes over every cycle of X.
  v.criterion_classes = true;
  for (int m = -1; m <= n && v.criterion_classes; ++m) {
    std::vector<Cycle> bs = m < 0 ? std::vector<Cycle>{Cycle{-1, {}}} : cycles(X, m);
    const int k = m + 1;
    for (const Cycle& b : bs) {
      std::vector<int> su, sv;
      if (m < 0) {
        su.resize(X.size(0));
        std::iota(su.begin(), su.end(), 0);
        sv.resize(Y.size(0));
        std::iota(sv.begin(), sv.end(), 0);
      } else {
        std::vector<int> fb;
        for (int x : b.faces) fb.push_back(f(m, x));
        if (auto* p = X.with_boundary(k, b.faces)) su = *p;
        if (auto* p = Y.with_boundary(k, fb)) sv = *p;
      }
      for (int y : sv) {
        bool found = false;
        for (int u : su)
          if (homotopic(Y, k, f(k, u), y)) {
            found = true;
            break;
          }
        if (!found) {
          v.criterion_classes = false;
          break;
        }
      }
      if (!v.criterion_classes) break;
    }
  }

  v.weq = v.criterion_pi;
  v.agree = v.criterion_pi == v.criterion_explicit && v.criterion_pi == v.criterion_classes;
  if (!v.agree) v.diagnostic += (v.diagnostic.empty() ? "" : "; ") + std::string("criteria disagree");
  return v;
}

bool check_equivalence_witness(const SimplicialMap& f1, const SimplicialMap& f2, bool check_prereq) {
  if (f1.target != f2.target && !same_structure(*f1.target, *f2.target))
    throw Error(ErrorKind::InvalidArgument, "equivalence witnesses need a shared target");
  return is_weak_equivalence(f1, check_prereq).weq && is_weak_equivalence(f2, check_prereq).weq;
}

}  // namespace trunkan
