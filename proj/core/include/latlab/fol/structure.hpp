#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

namespace latlab::fol {

// Finite universe of opaque element ids plus extensional named relations.
// Tuples are stored index-based; ids map bijectively to indices.
class FiniteStructure {
 public:
  using Tuple = std::vector<std::size_t>;

  struct Relation {
    std::size_t arity = 0;
    std::set<Tuple> tuples;
    // packed lookup for arities <= 8 with universe <= 255
    std::unordered_set<std::uint64_t> packed;
    bool contains(const Tuple& t) const;
    void insert(const Tuple& t);
  };

  explicit FiniteStructure(std::vector<std::string> universe);

  std::size_t size() const { return universe_.size(); }
  const std::vector<std::string>& universe() const { return universe_; }
  const std::string& id_of(std::size_t index) const { return universe_.at(index); }
  std::size_t index_of(const std::string& id) const;  // throws on unknown id
  bool has_element(const std::string& id) const { return index_.count(id) != 0; }

  void declare_relation(const std::string& name, std::size_t arity);
  void add_tuple(const std::string& name, const std::vector<std::string>& ids);
  void add_tuple_indices(const std::string& name, const Tuple& t);

  bool has_relation(const std::string& name) const { return relations_.count(name) != 0; }
  const Relation& relation(const std::string& name) const;  // throws on unknown
  const std::map<std::string, Relation>& relations() const { return relations_; }

  bool holds(const std::string& name, const Tuple& t) const;

 private:
  std::vector<std::string> universe_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, Relation> relations_;
};

// JSON format: {"universe": ["a","b",...],
//               "relations": {"leq": {"arity": 2, "tuples": [["a","b"],...]}}}
FiniteStructure structure_from_json(const std::string& json_text);
std::string structure_to_json(const FiniteStructure& s);

}  // namespace latlab::fol
