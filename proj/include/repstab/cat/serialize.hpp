#pragma once

// Canonical JSON for morphisms of every category. Layout (keys in this
// order):
//   FI / OI : {"cat","d","src","tgt","f":[...],"g":{"<pos>":color,...}}
//   V       : {"cat","r","src":[d,m],"tgt":[e,n],"a1":[...],
//              "a2":{"<pos>":[...],...},"a3":[[...],...]}
//   M / OM  : {"cat","d","src","tgt","f":[...],"blocks":[[...],...]}
// Maps are keyed by decimal positions listed in increasing numeric order.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "repstab/cat/colored_injection.hpp"
#include "repstab/cat/matching.hpp"
#include "repstab/cat/veronese.hpp"
#include "repstab/errors.hpp"

namespace repstab::cat {

using Json = nlohmann::ordered_json;

using AnyMorphism =
    std::variant<FIdMorphism, OIdMorphism, VeroneseMorphism, MatchingMorphism, OrderedMatchingMorphism>;

template <class Order>
Json to_json(const ColoredInjection<Order>& phi) {
  Json g = Json::object();
  for (auto [u, c] : phi.coloring()) g[std::to_string(u)] = c;
  return Json{{"cat", Order::tag}, {"d", phi.colors()}, {"src", phi.src()},
              {"tgt", phi.tgt()},  {"f", phi.injection()}, {"g", g}};
}

inline Json to_json(const VeroneseMorphism& a) {
  Json a2 = Json::object();
  for (const auto& [i, c] : a.alpha2_map()) a2[std::to_string(i)] = c.parts();
  Json a3 = Json::array();
  for (const auto& c : a.alpha3()) a3.push_back(c.parts());
  return Json{{"cat", "V"},
              {"r", a.r()},
              {"src", {a.src().degree, a.src().length}},
              {"tgt", {a.tgt().degree, a.tgt().length}},
              {"a1", a.alpha1()},
              {"a2", a2},
              {"a3", a3}};
}

template <class Order>
Json to_json(const Matching<Order>& m) {
  return Json{{"cat", Order::order_preserving ? "OM" : "M"},
              {"d", m.block_size()},
              {"src", m.src()},
              {"tgt", m.tgt()},
              {"f", m.injection()},
              {"blocks", m.blocks()}};
}

inline Json to_json(const AnyMorphism& m) {
  return std::visit([](const auto& x) { return to_json(x); }, m);
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("morphism JSON: missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw parse_error(std::string("morphism JSON: field '") + key + "' has the wrong type");
  }
}

template <class V>
std::map<int, V> int_keyed(const Json& j, const char* key) {
  const Json& obj = field(j, key);
  if (!obj.is_object()) throw parse_error(std::string("morphism JSON: field '") + key + "' must be an object");
  std::map<int, V> out;
  for (const auto& [k, v] : obj.items()) {
    int pos = 0;
    try {
      std::size_t used = 0;
      pos = std::stoi(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
      out.emplace(pos, v.template get<V>());
    } catch (const std::exception&) {
      throw parse_error(std::string("morphism JSON: bad entry in '") + key + "'");
    }
  }
  return out;
}

}  // namespace detail

/// Parses any canonical morphism. Malformed JSON and values violating a
/// morphism invariant both raise parse_error.
inline AnyMorphism parse_morphism(const Json& j) {
  using detail::get;
  const std::string tag = get<std::string>(j, "cat");
  try {
    if (tag == "FI" || tag == "OI") {
      auto d = get<int>(j, "d"), n = get<int>(j, "src"), m = get<int>(j, "tgt");
      auto f = get<std::vector<int>>(j, "f");
      auto g = detail::int_keyed<int>(j, "g");
      if (tag == "FI") return FIdMorphism(d, n, m, f, g);
      return OIdMorphism(d, n, m, f, g);
    }
    if (tag == "V") {
      auto r = get<int>(j, "r");
      auto src = get<std::vector<int>>(j, "src"), tgt = get<std::vector<int>>(j, "tgt");
      if (src.size() != 2 || tgt.size() != 2) throw parse_error("morphism JSON: V objects are [degree, length]");
      std::map<int, MultiIndex> a2;
      for (auto& [i, parts] : detail::int_keyed<std::vector<int>>(j, "a2")) a2.emplace(i, MultiIndex(parts));
      std::vector<MultiIndex> a3;
      for (auto& parts : get<std::vector<std::vector<int>>>(j, "a3")) a3.emplace_back(parts);
      return VeroneseMorphism(r, {src[0], src[1]}, {tgt[0], tgt[1]}, get<std::vector<int>>(j, "a1"), a2,
                              std::move(a3));
    }
    if (tag == "M" || tag == "OM") {
      auto d = get<int>(j, "d"), n = get<int>(j, "src"), m = get<int>(j, "tgt");
      auto f = get<std::vector<int>>(j, "f");
      auto blocks = get<std::vector<std::vector<int>>>(j, "blocks");
      if (tag == "M") return MatchingMorphism(d, n, m, f, blocks);
      return OrderedMatchingMorphism(d, n, m, f, blocks);
    }
  } catch (const domain_error& e) {
    throw parse_error(std::string("invalid morphism: ") + e.what());
  }
  throw parse_error("morphism JSON: unknown category '" + tag + "'");
}

inline AnyMorphism parse_morphism(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
  return parse_morphism(j);
}

inline AnyMorphism parse_morphism(const char* text) { return parse_morphism(std::string(text)); }

/// second ∘ first for morphisms of the same category.
inline AnyMorphism compose_any(const AnyMorphism& second, const AnyMorphism& first) {
  if (second.index() != first.index()) throw domain_error("composition domain mismatch: different categories");
  return std::visit(
      [&](const auto& s) -> AnyMorphism {
        using T = std::decay_t<decltype(s)>;
        return compose(s, std::get<T>(first));
      },
      second);
}

}  // namespace repstab::cat
