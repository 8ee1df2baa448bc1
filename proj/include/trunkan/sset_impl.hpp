#pragma once

// Template definitions for sset.hpp.

#include <algorithm>
#include <map>

namespace trunkan {

template <class FaceFn, class Visit>
void for_each_compatible(int count, int len, int omit, const FaceFn& face, const Visit& visit) {
  std::vector<int> x(len, -1);
  std::vector<int> pos;
  for (int p = 0; p < len; ++p)
    if (p != omit) pos.push_back(p);
  const int depth = static_cast<int>(pos.size());
  if (depth == 0) {
    visit(x);
    return;
  }
  auto rec = [&](auto&& self, int d) -> void {
    if (d == depth) {
      visit(x);
      return;
    }
    const int l = pos[d];
    for (int c = 0; c < count; ++c) {
      bool ok = true;
      for (int e = 0; e < d && ok; ++e) {
        const int j = pos[e];
        if (face(l - 1, x[j]) != face(j, c)) ok = false;
      }
      if (!ok) continue;
      x[l] = c;
      self(self, d + 1);
    }
    x[l] = -1;
  };
  rec(rec, 0);
}

template <class Keep>
RawSSet complete_top(RawSSet partial, const Keep& keep) {
  const int n = partial.n;
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "complete_top needs n >= 1");
  RawSSet low;
  low.n = n - 1;
  low.simplices.assign(partial.simplices.begin(), partial.simplices.begin() + n + 1);
  low.faces.assign(partial.faces.begin(), partial.faces.begin() + n + 1);
  low.degens.assign(partial.degens.begin(), partial.degens.begin() + n);
  const TruncatedSSet tmp = TruncatedSSet::build(low);

  std::vector<std::vector<int>> top;
  for (const Cycle& c : cycles(tmp, n))
    if (keep(c.faces)) top.push_back(c.faces);
  std::map<std::vector<int>, int> where;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < top.size(); ++i) {
    where[top[i]] = static_cast<int>(i);
    std::string s = "<";
    for (std::size_t j = 0; j < top[i].size(); ++j) {
      if (j) s += ",";
      s += tmp.name(n, top[i][j]);
    }
    names.push_back(s + ">");
  }

  RawSSet out = low;
  out.n = n;
  out.simplices.push_back(names);
  std::vector<std::vector<int>> f(n + 2, std::vector<int>(top.size()));
  for (std::size_t x = 0; x < top.size(); ++x)
    for (int j = 0; j <= n + 1; ++j) f[j][x] = top[x][j];
  out.faces.resize(n + 2);
  out.faces[n + 1] = f;

  const int cnt = tmp.size(n);
  std::vector<std::vector<int>> s(n + 1, std::vector<int>(cnt, -1));
  for (int j = 0; j <= n; ++j) {
    for (int x = 0; x < cnt; ++x) {
      std::vector<int> b(n + 2);
      for (int i = 0; i <= n + 1; ++i) {
        if (i < j)
          b[i] = tmp.degen(n - 1, j - 1, tmp.face(n, i, x));
        else if (i == j || i == j + 1)
          b[i] = x;
        else
          b[i] = tmp.degen(n - 1, j, tmp.face(n, i - 1, x));
      }
      auto it = where.find(b);
      if (it == where.end())
        throw Error(ErrorKind::MissingMap, "degenerate simplex s^" + std::to_string(j) + "(" +
                                               tmp.name(n, x) + ") rejected by top filter");
      s[j][x] = it->second;
    }
  }
  out.degens.resize(n + 1);
  out.degens[n] = s;
  return out;
}

}  // namespace trunkan
