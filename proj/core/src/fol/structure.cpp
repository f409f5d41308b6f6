#include "latlab/fol/structure.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace latlab::fol {

namespace {
// Packs small tuples into one word so the hot evaluation path avoids
// allocating set<vector> comparisons.
bool packable(const FiniteStructure::Tuple& t) {
  if (t.size() > 8) return false;
  for (auto x : t)
    if (x > 0xfe) return false;
  return true;
}

std::uint64_t pack(const FiniteStructure::Tuple& t) {
  std::uint64_t key = 0;
  for (auto x : t) key = (key << 8) | (static_cast<std::uint64_t>(x) + 1);
  return key;
}
}  // namespace

bool FiniteStructure::Relation::contains(const Tuple& t) const {
  if (packable(t)) return packed.count(pack(t)) != 0;
  return tuples.count(t) != 0;
}

void FiniteStructure::Relation::insert(const Tuple& t) {
  tuples.insert(t);
  if (packable(t)) packed.insert(pack(t));
}

FiniteStructure::FiniteStructure(std::vector<std::string> universe)
    : universe_(std::move(universe)) {
  if (universe_.empty()) throw std::invalid_argument("universe must be non-empty");
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    auto [it, inserted] = index_.emplace(universe_[i], i);
    if (!inserted) throw std::invalid_argument("duplicate universe id: " + universe_[i]);
  }
}

std::size_t FiniteStructure::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("unknown element id: " + id);
  return it->second;
}

void FiniteStructure::declare_relation(const std::string& name, std::size_t arity) {
  auto [it, inserted] = relations_.emplace(name, Relation{arity, {}, {}});
  if (!inserted && it->second.arity != arity)
    throw std::invalid_argument("relation '" + name + "' re-declared with different arity");
}

void FiniteStructure::add_tuple(const std::string& name, const std::vector<std::string>& ids) {
  Tuple t;
  t.reserve(ids.size());
  for (const auto& id : ids) t.push_back(index_of(id));
  add_tuple_indices(name, t);
}

void FiniteStructure::add_tuple_indices(const std::string& name, const Tuple& t) {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw std::out_of_range("unknown relation: " + name);
  if (t.size() != it->second.arity)
    throw std::invalid_argument("tuple arity mismatch for relation '" + name + "'");
  for (auto x : t)
    if (x >= universe_.size()) throw std::out_of_range("tuple element out of universe");
  it->second.insert(t);
}

const FiniteStructure::Relation& FiniteStructure::relation(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw std::out_of_range("unknown relation: " + name);
  return it->second;
}

bool FiniteStructure::holds(const std::string& name, const Tuple& t) const {
  return relation(name).contains(t);
}

FiniteStructure structure_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (!j.contains("universe") || !j["universe"].is_array())
    throw std::invalid_argument("structure JSON needs a \"universe\" array");
  std::vector<std::string> universe;
  for (const auto& e : j["universe"]) universe.push_back(e.get<std::string>());
  FiniteStructure s(std::move(universe));
  if (j.contains("relations")) {
    for (const auto& [name, rel] : j["relations"].items()) {
      std::size_t arity = rel.at("arity").get<std::size_t>();
      s.declare_relation(name, arity);
      for (const auto& tup : rel.at("tuples")) {
        std::vector<std::string> ids;
        for (const auto& e : tup) ids.push_back(e.get<std::string>());
        if (ids.size() != arity)
          throw std::invalid_argument("tuple of wrong length in relation '" + name + "'");
        s.add_tuple(name, ids);
      }
    }
  }
  return s;
}

std::string structure_to_json(const FiniteStructure& s) {
  nlohmann::ordered_json j;
  j["universe"] = s.universe();
  nlohmann::ordered_json rels = nlohmann::ordered_json::object();
  for (const auto& [name, rel] : s.relations()) {
    nlohmann::ordered_json rj;
    rj["arity"] = rel.arity;
    nlohmann::ordered_json tuples = nlohmann::ordered_json::array();
    for (const auto& t : rel.tuples) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (auto x : t) row.push_back(s.id_of(x));
      tuples.push_back(row);
    }
    rj["tuples"] = tuples;
    rels[name] = rj;
  }
  j["relations"] = rels;
  return j.dump(2);
}

}  // namespace latlab::fol
