#include "latlab/monadic/weak_power.hpp"

#include <sstream>
#include <stdexcept>

#include "latlab/monadic/definability.hpp"

namespace latlab::monadic {

std::vector<Mask> subsets_up_to(std::size_t n, std::size_t cap) {
  if (n > 63) throw std::invalid_argument("base universe too large for mask sets");
  std::vector<Mask> out;
  Mask full = (n == 63) ? ~0ULL >> 1 : ((1ULL << n) - 1);
  for (Mask m = 0;; ++m) {
    if (mask_size(m) <= cap) out.push_back(m);
    if (m == full) break;
  }
  return out;
}

WeakPowerUniverse::WeakPowerUniverse(std::vector<std::string> base_labels, std::size_t cap)
    : base_labels_(std::move(base_labels)), cap_(cap) {
  if (base_labels_.empty()) throw std::invalid_argument("base universe must be non-empty");
  sets_ = subsets_up_to(base_labels_.size(), cap_);
  for (std::size_t i = 0; i < sets_.size(); ++i) index_[sets_[i]] = i;
}

std::size_t WeakPowerUniverse::index_of(Mask m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw std::out_of_range("set not in truncation");
  return it->second;
}

std::string WeakPowerUniverse::set_id(Mask m) const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (std::size_t i = 0; i < base_labels_.size(); ++i) {
    if (m & (1ULL << i)) {
      if (!first) out << ",";
      out << base_labels_[i];
      first = false;
    }
  }
  out << "}";
  return out.str();
}

fol::FiniteStructure WeakPowerUniverse::to_structure(const StructureOptions& opts) const {
  std::vector<std::string> ids;
  ids.reserve(sets_.size());
  for (Mask m : sets_) ids.push_back(set_id(m));
  fol::FiniteStructure s(std::move(ids));

  s.declare_relation("subseteq", 2);
  for (std::size_t i = 0; i < sets_.size(); ++i)
    for (std::size_t j = 0; j < sets_.size(); ++j)
      if ((sets_[i] & ~sets_[j]) == 0) s.add_tuple_indices("subseteq", {i, j});

  if (opts.include_atoms) {
    s.declare_relation("isAtom", 1);
    for (std::size_t i = 0; i < sets_.size(); ++i)
      if (mask_size(sets_[i]) == 1) s.add_tuple_indices("isAtom", {i});
  }

  if (opts.include_equal_size) {
    s.declare_relation("E", 2);
    for (std::size_t i = 0; i < sets_.size(); ++i)
      for (std::size_t j = 0; j < sets_.size(); ++j)
        if ((sets_[i] & sets_[j]) == 0 && mask_size(sets_[i]) == mask_size(sets_[j]))
          s.add_tuple_indices("E", {i, j});
  }

  for (const auto& [name, tuples] : opts.atom_relations) {
    if (tuples.empty()) continue;
    std::size_t arity = tuples.front().size();
    s.declare_relation(name, arity);
    for (const auto& t : tuples) {
      if (t.size() != arity)
        throw std::invalid_argument("atom relation '" + name + "' has ragged tuples");
      std::vector<std::size_t> lifted;
      lifted.reserve(t.size());
      for (std::size_t b : t) {
        if (b >= base_labels_.size())
          throw std::out_of_range("atom relation tuple out of base universe");
        lifted.push_back(index_of(1ULL << b));
      }
      s.add_tuple_indices(name, lifted);
    }
  }

  if (opts.product != nullptr) {
    if (opts.product->size() != base_labels_.size())
      throw std::invalid_argument("product semigroup size does not match base universe");
    s.declare_relation("prod", 3);
    for (std::size_t i = 0; i < sets_.size(); ++i)
      for (std::size_t j = 0; j < sets_.size(); ++j) {
        Mask xy;
        try {
          xy = set_product(*opts.product, sets_[i], sets_[j]);
        } catch (const TruncationError&) {
          continue;  // product escapes the truncation; graph omits the pair
        }
        auto it = index_.find(xy);
        if (it == index_.end()) continue;  // product exceeds the size cap
        s.add_tuple_indices("prod", {i, j, it->second});
      }
  }

  return s;
}

}  // namespace latlab::monadic
