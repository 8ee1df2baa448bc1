#include "trunkan/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>
#include <unordered_map>

#include "trunkan/error.hpp"

namespace trunkan::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::string id_of(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  bad(where + ": ids must be strings or integers");
}

int dim_key(const std::string& s, int top) {
  if (s.empty() || s.size() > 2 || !std::all_of(s.begin(), s.end(), ::isdigit) || (s.size() > 1 && s[0] == '0'))
    bad("dimension key \"" + s + "\" is not a natural number");
  const int k = std::stoi(s);
  if (k > top) bad("dimension " + s + " above n+1");
  return k;
}

// {id: id} into a vector over the source ids.
std::vector<int> table(const json& j, const std::string& where, const std::vector<std::string>& src,
                       const std::function<int(const std::string&)>& target) {
  if (!j.is_object()) bad(where + " must be an object");
  std::unordered_map<std::string, int> pos;
  for (int x = 0; x < static_cast<int>(src.size()); ++x) pos[src[x]] = x;
  std::vector<int> out(src.size(), -1);
  for (const auto& [k, v] : j.items()) {
    auto it = pos.find(k);
    if (it == pos.end()) bad(where + ": unknown id \"" + k + "\"");
    const std::string t = id_of(v, where);
    const int y = target(t);
    if (y < 0) bad(where + ": unknown target \"" + t + "\"");
    out[it->second] = y;
  }
  for (int x = 0; x < static_cast<int>(src.size()); ++x)
    if (out[x] < 0) bad(where + " not defined on \"" + src[x] + "\"");
  return out;
}

}  // namespace

bool parse_key(const std::string& key, char letter, int& i, int& m) {
  static const std::regex re(R"(([ds])\^(0|[1-9][0-9]?)@(0|[1-9][0-9]?))");
  std::smatch mt;
  if (!std::regex_match(key, mt, re) || mt[1].str()[0] != letter) return false;
  i = std::stoi(mt[2]);
  m = std::stoi(mt[3]);
  return true;
}

json to_json(const TruncatedSSet& X) {
  json j;
  j["n"] = X.n();
  json simp = json::object(), faces = json::object(), degens = json::object();
  for (int k = 0; k <= X.top(); ++k) simp[std::to_string(k)] = X.names(k);
  for (int m = 1; m <= X.top(); ++m)
    for (int i = 0; i <= m; ++i) {
      json t = json::object();
      for (int x = 0; x < X.size(m); ++x) t[X.name(m, x)] = X.name(m - 1, X.face(m, i, x));
      faces["d^" + std::to_string(i) + "@" + std::to_string(m)] = t;
    }
  for (int m = 0; m <= X.n(); ++m)
    for (int i = 0; i <= m; ++i) {
      json t = json::object();
      for (int x = 0; x < X.size(m); ++x) t[X.name(m, x)] = X.name(m + 1, X.degen(m, i, x));
      degens["s^" + std::to_string(i) + "@" + std::to_string(m)] = t;
    }
  j["simplices"] = simp;
  j["faces"] = faces;
  j["degeneracies"] = degens;
  return j;
}

SSet sset_from_json(const json& j) {
  const json& n_ = field(j, "n");
  if (!n_.is_number_integer() || n_.get<int>() < 0 || n_.get<int>() > 6) bad("\"n\" must be an integer in 0..6");
  RawSSet r;
  r.n = n_.get<int>();
  const int top = r.n + 1;
  r.simplices.assign(top + 1, {});
  const json& simp = field(j, "simplices");
  if (!simp.is_object()) bad("\"simplices\" must be an object");
  std::vector<bool> seen(top + 1, false);
  for (const auto& [k, ids] : simp.items()) {
    const int d = dim_key(k, top);
    if (!ids.is_array()) bad("simplices of dimension " + k + " must be a list");
    for (const auto& v : ids) r.simplices[d].push_back(id_of(v, "simplices"));
    seen[d] = true;
  }
  for (int d = 0; d <= top; ++d)
    if (!seen[d]) bad("no simplex list for dimension " + std::to_string(d));
  std::vector<std::unordered_map<std::string, int>> index(top + 1);
  for (int d = 0; d <= top; ++d)
    for (int x = 0; x < static_cast<int>(r.simplices[d].size()); ++x)
      if (!index[d].emplace(r.simplices[d][x], x).second)
        bad("duplicate id \"" + r.simplices[d][x] + "\" in dimension " + std::to_string(d));
  auto lookup = [&](int d) {
    return [&index, d](const std::string& s) {
      auto it = index[d].find(s);
      return it == index[d].end() ? -1 : it->second;
    };
  };
  r.faces.assign(top + 1, {});
  for (int m = 1; m <= top; ++m) r.faces[m].assign(m + 1, {});
  r.degens.assign(r.n + 1, {});
  for (int m = 0; m <= r.n; ++m) r.degens[m].assign(m + 1, {});
  const json& faces = field(j, "faces");
  if (!faces.is_object()) bad("\"faces\" must be an object");
  for (const auto& [key, t] : faces.items()) {
    int i = 0, m = 0;
    if (!parse_key(key, 'd', i, m) || m < 1 || m > top || i > m) bad("bad face key \"" + key + "\"");
    r.faces[m][i] = table(t, key, r.simplices[m], lookup(m - 1));
  }
  const json& degens = field(j, "degeneracies");
  if (!degens.is_object()) bad("\"degeneracies\" must be an object");
  for (const auto& [key, t] : degens.items()) {
    int i = 0, m = 0;
    if (!parse_key(key, 's', i, m) || m > r.n || i > m) bad("bad degeneracy key \"" + key + "\"");
    r.degens[m][i] = table(t, key, r.simplices[m], lookup(m + 1));
  }
  for (int m = 1; m <= top; ++m)
    for (int i = 0; i <= m; ++i)
      if (r.faces[m][i].size() != r.simplices[m].size())
        bad("missing d^" + std::to_string(i) + "@" + std::to_string(m));
  for (int m = 0; m <= r.n; ++m)
    for (int i = 0; i <= m; ++i)
      if (r.degens[m][i].size() != r.simplices[m].size())
        bad("missing s^" + std::to_string(i) + "@" + std::to_string(m));
  for (const auto& [k, unused] : j.items())
    if (k != "n" && k != "simplices" && k != "faces" && k != "degeneracies") bad("unexpected key \"" + k + "\"");
  return make_sset(std::move(r));
}

json to_json(const FiniteGroupoid& G) {
  json j;
  j["objects"] = G.objects;
  json ms = json::array();
  for (int m = 0; m < G.num_morphisms(); ++m)
    ms.push_back({{"id", G.morphisms[m]}, {"dom", G.objects[G.dom[m]]}, {"cod", G.objects[G.cod[m]]}});
  j["morphisms"] = ms;
  json comp = json::array();
  for (int f = 0; f < G.num_morphisms(); ++f)
    for (int g = 0; g < G.num_morphisms(); ++g)
      if (G.comp[f][g] >= 0) comp.push_back({G.morphisms[f], G.morphisms[g], G.morphisms[G.comp[f][g]]});
  j["comp"] = comp;
  return j;
}

Gpd gpd_from_json(const json& j) {
  const json& objs = field(j, "objects");
  const json& mors = field(j, "morphisms");
  const json& comp = field(j, "comp");
  if (!objs.is_array() || !mors.is_array() || !comp.is_array()) bad("objects, morphisms and comp must be lists");
  std::vector<std::string> objects;
  for (const auto& o : objs) objects.push_back(id_of(o, "objects"));
  std::vector<MorphismSpec> ms;
  for (const auto& m : mors) {
    if (!m.is_object()) bad("each morphism is an object {id, dom, cod}");
    ms.push_back({id_of(field(m, "id"), "morphism"), id_of(field(m, "dom"), "dom"), id_of(field(m, "cod"), "cod")});
  }
  std::vector<CompSpec> cs;
  for (const auto& c : comp) {
    if (!c.is_array() || c.size() != 3) bad("each comp entry is [f, g, fg]");
    cs.push_back({id_of(c[0], "comp"), id_of(c[1], "comp"), id_of(c[2], "comp")});
  }
  try {
    return make_groupoid(objects, ms, cs);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    bad(std::string("not a groupoid: ") + e.what());
  }
}

json to_json(const SimplicialMap& f) {
  json j;
  j["source"] = to_json(*f.source);
  j["target"] = to_json(*f.target);
  json comps = json::object();
  for (int k = 0; k < static_cast<int>(f.components.size()); ++k) {
    json t = json::object();
    for (int x = 0; x < f.source->size(k); ++x) t[f.source->name(k, x)] = f.target->name(k, f(k, x));
    comps[std::to_string(k)] = t;
  }
  j["components"] = comps;
  return j;
}

SimplicialMap map_from_json(const json& j) {
  SimplicialMap f;
  f.source = sset_from_json(field(j, "source"));
  f.target = sset_from_json(field(j, "target"));
  if (f.source->n() != f.target->n()) bad("source and target have different n");
  const int top = f.source->top();
  const json& comps = field(j, "components");
  if (!comps.is_object()) bad("\"components\" must be an object");
  f.components.assign(top + 1, {});
  std::vector<bool> seen(top + 1, false);
  for (const auto& [k, t] : comps.items()) {
    const int d = dim_key(k, top);
    const TruncatedSSet& T = *f.target;
    f.components[d] = table(t, "component " + k, f.source->names(d), [&](const std::string& s) { return T.find(d, s); });
    seen[d] = true;
  }
  for (int d = 0; d <= top; ++d)
    if (!seen[d]) bad("no component in dimension " + std::to_string(d));
  if (auto v = validate_map(f)) bad("not a simplicial map: " + v->describe(f));
  return f;
}

json functor_to_json(const GroupoidMap& F) {
  json o = json::object(), m = json::object();
  for (int x = 0; x < F.source->num_objects(); ++x) o[F.source->objects[x]] = F.target->objects[F.on_objects[x]];
  for (int x = 0; x < F.source->num_morphisms(); ++x)
    m[F.source->morphisms[x]] = F.target->morphisms[F.on_morphisms[x]];
  return {{"objects", o}, {"morphisms", m}};
}

GroupoidMap functor_from_json(const json& j, const Gpd& source, const Gpd& target) {
  GroupoidMap F{source, target, {}, {}};
  F.on_objects = table(field(j, "objects"), "functor objects", source->objects,
                       [&](const std::string& s) { return target->find_object(s); });
  F.on_morphisms = table(field(j, "morphisms"), "functor morphisms", source->morphisms,
                         [&](const std::string& s) { return target->find_morphism(s); });
  std::string why;
  if (!is_functor(F, &why)) bad("not a functor: " + why);
  return F;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace trunkan::io
