#pragma once

// Brute-force helpers shared by the unit tests. Nothing here uses the
// enumeration code of the library; nerves are built from raw composition
// tables and cycles are found by scanning every tuple.

#include <functional>
#include <string>
#include <vector>

#include "trunkan/sset.hpp"

namespace oracle {

// Small category: morphisms given by dom/cod and a composition table
// comp[f][g] = g o f (f first), -1 when not composable.
struct Cat {
  int objects = 1;
  std::vector<int> dom, cod, ident;
  std::vector<std::vector<int>> comp;
};

inline Cat group_cat(const std::vector<std::vector<int>>& mul) {
  Cat c;
  const int k = static_cast<int>(mul.size());
  c.dom.assign(k, 0);
  c.cod.assign(k, 0);
  c.ident = {0};
  c.comp.assign(k, std::vector<int>(k));
  for (int f = 0; f < k; ++f)
    for (int g = 0; g < k; ++g) c.comp[f][g] = mul[f][g];  // f then g written f*g
  return c;
}

inline Cat codiscrete_cat(int objs) {
  Cat c;
  c.objects = objs;
  for (int a = 0; a < objs; ++a)
    for (int b = 0; b < objs; ++b) {
      c.dom.push_back(a);
      c.cod.push_back(b);
    }
  const int k = objs * objs;
  for (int a = 0; a < objs; ++a) c.ident.push_back(a * objs + a);
  c.comp.assign(k, std::vector<int>(k, -1));
  for (int f = 0; f < k; ++f)
    for (int g = 0; g < k; ++g)
      if (c.cod[f] == c.dom[g]) c.comp[f][g] = c.dom[f] * objs + c.cod[g];
  return c;
}

// Nerve truncated at n=1: 2-simplices are composable pairs (f, g) with faces
// (g, g o f, f).
inline trunkan::RawSSet nerve1(const Cat& c) {
  trunkan::RawSSet r;
  r.n = 1;
  const int k = static_cast<int>(c.dom.size());
  std::vector<std::string> v, e, t;
  for (int a = 0; a < c.objects; ++a) v.push_back("o" + std::to_string(a));
  for (int f = 0; f < k; ++f) e.push_back("m" + std::to_string(f));
  std::vector<std::pair<int, int>> pairs;
  for (int f = 0; f < k; ++f)
    for (int g = 0; g < k; ++g)
      if (c.cod[f] == c.dom[g]) {
        pairs.push_back({f, g});
        t.push_back("m" + std::to_string(f) + "|m" + std::to_string(g));
      }
  r.simplices = {v, e, t};
  r.faces.assign(3, {});
  r.faces[1] = {c.cod, c.dom};
  std::vector<int> f0, f1, f2;
  for (auto [f, g] : pairs) {
    f0.push_back(g);
    f1.push_back(c.comp[f][g]);
    f2.push_back(f);
  }
  r.faces[2] = {f0, f1, f2};
  auto pair_index = [&](int f, int g) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i] == std::make_pair(f, g)) return static_cast<int>(i);
    return -1;
  };
  r.degens.assign(2, {});
  r.degens[0] = {c.ident};
  std::vector<int> s0, s1;
  for (int f = 0; f < k; ++f) {
    s0.push_back(pair_index(c.ident[c.dom[f]], f));
    s1.push_back(pair_index(f, c.ident[c.cod[f]]));
  }
  r.degens[1] = {s0, s1};
  return r;
}

inline std::vector<std::vector<int>> cyclic(int k) {
  std::vector<std::vector<int>> m(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) m[a][b] = (a + b) % k;
  return m;
}

// Every tuple of len entries in [0,count) with position omit ignored,
// filtered by face_{l-1}(x_j) = face_j(x_l) for all j < l.
inline long count_compatible(int count, int len, int omit, const std::function<int(int, int)>& face) {
  long total = 0;
  std::vector<int> x(len, 0);
  std::vector<int> pos;
  for (int p = 0; p < len; ++p)
    if (p != omit) pos.push_back(p);
  long space = 1;
  for (std::size_t i = 0; i < pos.size(); ++i) space *= count;
  for (long code = 0; code < space; ++code) {
    long c = code;
    for (int p : pos) {
      x[p] = static_cast<int>(c % count);
      c /= count;
    }
    bool ok = true;
    for (std::size_t a = 0; a < pos.size() && ok; ++a)
      for (std::size_t b = a + 1; b < pos.size() && ok; ++b)
        if (face(pos[b] - 1, x[pos[a]]) != face(pos[a], x[pos[b]])) ok = false;
    if (ok) ++total;
  }
  return total;
}

}  // namespace oracle
