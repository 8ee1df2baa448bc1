#pragma once

#include <string>

#include "json.hpp"
#include "trunkan/gpd.hpp"
#include "trunkan/sset.hpp"

namespace trunkan::io {

using json = nlohmann::json;

// Simplicial set:
//   { "n": 2,
//     "simplices": { "0": [ids], ..., "<n+1>": [ids] },
//     "faces": { "d^i@m": { id: id } },          1 <= m <= n+1, 0 <= i <= m
//     "degeneracies": { "s^i@m": { id: id } } }  0 <= m <= n,   0 <= i <= m
// d^i@m sends an m-simplex to the face opposite vertex i; s^i@m repeats
// vertex i. Every map must be total. Ids are strings, unique per dimension.
json to_json(const TruncatedSSet& X);
SSet sset_from_json(const json& j);  // ParseError on shape, simplicial errors as thrown by make_sset

// Groupoid: { "objects": [ids], "morphisms": [{"id","dom","cod"}], "comp": [[f, g, fg]] }
// with fg = g o f. Identities and inverses are inferred.
json to_json(const FiniteGroupoid& G);
Gpd gpd_from_json(const json& j);

// Simplicial map: { "source": sset, "target": sset, "components": { "<k>": { id: id } } }
json to_json(const SimplicialMap& f);
SimplicialMap map_from_json(const json& j);  // ParseError unless simplicial

// Functor between known groupoids: { "objects": { id: id }, "morphisms": { id: id } }
json functor_to_json(const GroupoidMap& F);
GroupoidMap functor_from_json(const json& j, const Gpd& source, const Gpd& target);

// Stable text form: two-space indent, sorted keys, trailing newline.
std::string dump(const json& j);
json parse(const std::string& text);      // ParseError
json read_file(const std::string& path);  // ParseError, also for unreadable files

// "d^i@m" / "s^i@m" -> (i, m); false when the key does not match.
bool parse_key(const std::string& key, char letter, int& i, int& m);

}  // namespace trunkan::io
