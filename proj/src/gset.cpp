#include <map>
#include <numeric>

#include "trunkan/gpd.hpp"

namespace trunkan {

bool is_gset(const GSet& X, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  const FiniteGroupoid& G = *X.G;
  const int n = X.size();
  if (static_cast<int>(X.anchor.size()) != n) return fail("anchor size");
  if (static_cast<int>(X.act.size()) != G.num_morphisms()) return fail("action table size");
  for (int x = 0; x < n; ++x)
    if (X.anchor[x] < 0 || X.anchor[x] >= G.num_objects()) return fail("anchor out of range for " + X.carrier[x]);
  for (int g = 0; g < G.num_morphisms(); ++g) {
    if (static_cast<int>(X.act[g].size()) != n) return fail("action row size");
    for (int x = 0; x < n; ++x) {
      const int y = X.act[g][x];
      if (G.dom[g] != X.anchor[x]) {
        if (y != -1) return fail("action defined off its anchor");
        continue;
      }
      if (y < 0 || y >= n) return fail(G.morphisms[g] + " does not act on " + X.carrier[x]);
      if (X.anchor[y] != G.cod[g]) return fail("action lands on the wrong anchor");
    }
  }
  for (int x = 0; x < n; ++x)
    if (X.act[G.ident[X.anchor[x]]][x] != x) return fail("identity moves " + X.carrier[x]);
  for (int f = 0; f < G.num_morphisms(); ++f)
    for (int g = 0; g < G.num_morphisms(); ++g) {
      if (G.cod[f] != G.dom[g]) continue;
      const int fg = G.then(f, g);
      for (int x = 0; x < n; ++x)
        if (X.anchor[x] == G.dom[f] && X.act[g][X.act[f][x]] != X.act[fg][x])
          return fail("action not associative at " + X.carrier[x]);
    }
  return true;
}

GSet make_gset(const Gpd& G, const std::vector<std::string>& carrier, const std::vector<int>& anchor,
               const std::vector<std::vector<int>>& act) {
  GSet X{G, carrier, anchor, act};
  std::string why;
  if (!is_gset(X, &why)) throw Error(ErrorKind::InvalidArgument, "not a G-set: " + why);
  return X;
}

GSet terminal_gset(const Gpd& G) {
  GSet X{G, G->objects, {}, {}};
  X.anchor.resize(G->num_objects());
  std::iota(X.anchor.begin(), X.anchor.end(), 0);
  X.act.assign(G->num_morphisms(), std::vector<int>(G->num_objects(), -1));
  for (int g = 0; g < G->num_morphisms(); ++g) X.act[g][G->dom[g]] = G->cod[g];
  return X;
}

GSet regular_gset(const Gpd& G) {
  const int nm = G->num_morphisms();
  GSet X{G, G->morphisms, G->cod, {}};
  X.act.assign(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int x = 0; x < nm; ++x)
      if (G->cod[x] == G->dom[g]) X.act[g][x] = G->then(x, g);
  return X;
}

bool is_gset_map(const GSet& X, const GSet& Y, const std::vector<int>& phi) {
  if (static_cast<int>(phi.size()) != X.size()) return false;
  for (int x = 0; x < X.size(); ++x)
    if (phi[x] < 0 || phi[x] >= Y.size() || Y.anchor[phi[x]] != X.anchor[x]) return false;
  for (int g = 0; g < X.G->num_morphisms(); ++g)
    for (int x = 0; x < X.size(); ++x)
      if (X.act[g][x] >= 0 && phi[X.act[g][x]] != Y.act[g][phi[x]]) return false;
  return true;
}

std::vector<std::vector<int>> gset_maps(const GSet& X, const GSet& Y) {
  const FiniteGroupoid& G = *X.G;
  // orbit representatives with, per element, a morphism reaching it
  std::vector<int> orbit(X.size(), -1), via(X.size(), -1), reps;
  for (int x = 0; x < X.size(); ++x) {
    if (orbit[x] >= 0) continue;
    const int r = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int g = 0; g < G.num_morphisms(); ++g)
      if (G.dom[g] == X.anchor[x]) {
        const int y = X.act[g][x];
        if (orbit[y] < 0) {
          orbit[y] = r;
          via[y] = g;
        }
      }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> phi(X.size(), -1);
  std::function<void(std::size_t)> go = [&](std::size_t r) {
    if (r == reps.size()) {
      out.push_back(phi);
      return;
    }
    const int x0 = reps[r];
    for (int y0 = 0; y0 < Y.size(); ++y0) {
      if (Y.anchor[y0] != X.anchor[x0]) continue;
      bool ok = true;
      for (int x = 0; x < X.size(); ++x)
        if (orbit[x] == static_cast<int>(r)) phi[x] = Y.act[via[x]][y0];
      for (int g = 0; g < G.num_morphisms() && ok; ++g)
        for (int x = 0; x < X.size() && ok; ++x)
          if (orbit[x] == static_cast<int>(r) && X.act[g][x] >= 0 && phi[X.act[g][x]] != Y.act[g][phi[x]]) ok = false;
      if (ok) go(r + 1);
    }
    for (int x = 0; x < X.size(); ++x)
      if (orbit[x] == static_cast<int>(r)) phi[x] = -1;
  };
  go(0);
  return out;
}

Pushforward gset_pushforward_traced(const GroupoidMap& i, const GSet& X) {
  const FiniteGroupoid& G = *i.source;
  const FiniteGroupoid& H = *i.target;
  const int nH = H.num_morphisms(), nX = X.size();
  auto id = [&](int h, int x) { return h * nX + x; };
  std::vector<int> parent(nH * nX);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  auto valid = [&](int h, int x) { return H.dom[h] == i.on_objects[X.anchor[x]]; };
  for (int g = 0; g < G.num_morphisms(); ++g)
    for (int x = 0; x < nX; ++x) {
      if (X.anchor[x] != G.dom[g]) continue;
      const int gx = X.act[g][x];
      for (int h = 0; h < nH; ++h) {
        if (!valid(h, gx)) continue;
        int a = find(id(h, gx)), b = find(id(H.then(i.on_morphisms[g], h), x));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  Pushforward pf;
  pf.cls.assign(nH, std::vector<int>(nX, -1));
  std::map<int, int> root_class;
  GSet& R = pf.result;
  R.G = i.target;
  for (int h = 0; h < nH; ++h)
    for (int x = 0; x < nX; ++x) {
      if (!valid(h, x)) continue;
      const int r = find(id(h, x));
      auto it = root_class.find(r);
      if (it == root_class.end()) {
        // least pair of the class is r itself (unions keep the minimum)
        it = root_class.emplace(r, 0).first;
      }
    }
  int next = 0;
  for (auto& [r, c] : root_class) {
    c = next++;
    const int h = r / nX, x = r % nX;
    R.carrier.push_back("[" + H.morphisms[h] + "," + X.carrier[x] + "]");
    R.anchor.push_back(H.cod[h]);
  }
  for (int h = 0; h < nH; ++h)
    for (int x = 0; x < nX; ++x)
      if (valid(h, x)) pf.cls[h][x] = root_class.at(find(id(h, x)));
  R.act.assign(nH, std::vector<int>(R.size(), -1));
  for (auto& [r, c] : root_class) {
    const int h = r / nX, x = r % nX;
    for (int k = 0; k < nH; ++k)
      if (H.dom[k] == H.cod[h]) R.act[k][c] = pf.cls[H.then(h, k)][x];
  }
  return pf;
}

GSet gset_pushforward(const GroupoidMap& i, const GSet& X) { return gset_pushforward_traced(i, X).result; }

Pullback gset_pullback_traced(const GroupoidMap& i, const GSet& Y) {
  const FiniteGroupoid& G = *i.source;
  Pullback pb;
  GSet& R = pb.result;
  R.G = i.source;
  std::map<std::pair<int, int>, int> index;
  for (int a = 0; a < G.num_objects(); ++a)
    for (int y = 0; y < Y.size(); ++y)
      if (Y.anchor[y] == i.on_objects[a]) {
        index[{a, y}] = static_cast<int>(pb.pairs.size());
        pb.pairs.push_back({a, y});
        R.carrier.push_back("(" + G.objects[a] + "," + Y.carrier[y] + ")");
        R.anchor.push_back(a);
      }
  R.act.assign(G.num_morphisms(), std::vector<int>(R.size(), -1));
  for (int g = 0; g < G.num_morphisms(); ++g)
    for (int p = 0; p < R.size(); ++p) {
      auto [a, y] = pb.pairs[p];
      if (G.dom[g] == a) R.act[g][p] = index.at({G.cod[g], Y.act[i.on_morphisms[g]][y]});
    }
  return pb;
}

GSet gset_pullback(const GroupoidMap& i, const GSet& Y) { return gset_pullback_traced(i, Y).result; }

AdjunctionReport check_adjunction(const GroupoidMap& i, const GSet& X, const GSet& Y) {
  AdjunctionReport rep;
  const FiniteGroupoid& H = *i.target;
  const Pushforward pf = gset_pushforward_traced(i, X);
  const Pullback pb = gset_pullback_traced(i, Y);
  std::map<std::pair<int, int>, int> pb_index;
  for (int p = 0; p < pb.result.size(); ++p) pb_index[pb.pairs[p]] = p;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    if (rep.failure.empty()) rep.failure = s;
  };
  std::string why;
  if (!is_gset(pf.result, &why)) fail("pushforward: " + why);
  if (!is_gset(pb.result, &why)) fail("pullback: " + why);
  if (!rep.ok) return rep;

  auto left = gset_maps(pf.result, Y);
  auto right = gset_maps(X, pb.result);
  rep.left_maps = left.size();
  rep.right_maps = right.size();
  if (left.size() != right.size()) fail("hom-set sizes differ");

  auto Phi = [&](const std::vector<int>& psi) {
    std::vector<int> phi(X.size());
    for (int x = 0; x < X.size(); ++x) {
      const int a = X.anchor[x];
      phi[x] = pb_index.at({a, psi[pf.cls[H.ident[i.on_objects[a]]][x]]});
    }
    return phi;
  };
  auto Psi = [&](const std::vector<int>& phi) {
    std::vector<int> psi(pf.result.size(), -1);
    for (int h = 0; h < H.num_morphisms(); ++h)
      for (int x = 0; x < X.size(); ++x) {
        const int c = pf.cls[h][x];
        if (c < 0) continue;
        const int y = Y.act[h][pb.pairs[phi[x]].second];
        if (psi[c] >= 0 && psi[c] != y) return std::vector<int>{};
        psi[c] = y;
      }
    return psi;
  };
  for (const auto& psi : left) {
    auto phi = Phi(psi);
    if (!is_gset_map(X, pb.result, phi)) fail("Phi(psi) is not equivariant");
    else if (Psi(phi) != psi) fail("Psi(Phi(psi)) differs from psi");
  }
  for (const auto& phi : right) {
    auto psi = Psi(phi);
    if (psi.empty() || !is_gset_map(pf.result, Y, psi)) fail("Psi(phi) is not equivariant");
    else if (Phi(psi) != phi) fail("Phi(Psi(phi)) differs from phi");
  }
  if (!rep.ok) return rep;

  // naturality in X and Y along equivariant endomaps
  auto endX = gset_maps(X, X);
  auto endY = gset_maps(Y, Y);
  for (const auto& a : endX)
    for (const auto& b : endY)
      for (const auto& psi : left) {
        // b . psi . i_!(a)
        std::vector<int> lhs(pf.result.size());
        for (int h = 0; h < H.num_morphisms(); ++h)
          for (int x = 0; x < X.size(); ++x)
            if (pf.cls[h][x] >= 0) lhs[pf.cls[h][x]] = b[psi[pf.cls[h][a[x]]]];
        auto l = Phi(lhs);
        auto phi = Phi(psi);
        std::vector<int> r(X.size());
        for (int x = 0; x < X.size(); ++x) {
          auto [o, y] = pb.pairs[phi[a[x]]];
          r[x] = pb_index.at({o, b[y]});
        }
        ++rep.naturality_checks;
        if (l != r) {
          fail("naturality fails");
          return rep;
        }
      }
  return rep;
}

}  // namespace trunkan
