#include "latlab/monadic/semigroup.hpp"

namespace latlab::monadic {

void PartialSemigroup::finish_construction(bool require_total) {
  const std::size_t n = labels_.size();
  if (n == 0) throw std::invalid_argument("semigroup universe must be non-empty");
  if (table_.size() != n * n) throw std::invalid_argument("operation table has wrong shape");

  total_ = true;
  for (std::size_t x : table_) {
    if (x == kUndefined) {
      total_ = false;
    } else if (x >= n) {
      throw std::invalid_argument("operation table entry out of range");
    }
  }
  if (require_total && !total_)
    throw std::invalid_argument("operation table must be total");

  // weak associativity: whenever both sides are defined they agree; for total
  // tables this is full associativity
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        auto ab = product(a, b);
        auto bc = product(b, c);
        std::optional<std::size_t> left = ab ? product(*ab, c) : std::nullopt;
        std::optional<std::size_t> right = bc ? product(a, *bc) : std::nullopt;
        if (left && right && *left != *right)
          throw std::invalid_argument("operation is not associative");
        if (total_ && (!left || !right))
          throw std::invalid_argument("operation is not associative");
      }

  strictly_increasing_ = true;
  for (std::size_t a = 0; a < n && strictly_increasing_; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto p = product(a, b);
      if (p && (*p <= a || *p <= b)) {
        strictly_increasing_ = false;
        break;
      }
    }
}

PartialSemigroup PartialSemigroup::from_table(std::vector<std::string> labels,
                                              std::vector<std::vector<std::size_t>> table,
                                              bool require_total) {
  PartialSemigroup s;
  s.labels_ = std::move(labels);
  const std::size_t n = s.labels_.size();
  if (table.size() != n) throw std::invalid_argument("operation table has wrong shape");
  s.table_.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("operation table has wrong shape");
    for (std::size_t x : row) s.table_.push_back(x);
  }
  s.finish_construction(require_total);
  return s;
}

PartialSemigroup PartialSemigroup::truncated_nat(std::size_t bound) {
  if (bound < 1) throw std::invalid_argument("truncation bound must be >= 1");
  PartialSemigroup s;
  s.labels_.reserve(bound);
  for (std::size_t v = 1; v <= bound; ++v) s.labels_.push_back(std::to_string(v));
  s.table_.assign(bound * bound, kUndefined);
  for (std::size_t a = 0; a < bound; ++a)
    for (std::size_t b = 0; b < bound; ++b) {
      std::size_t sum = (a + 1) + (b + 1);
      if (sum <= bound) s.table_[a * bound + b] = sum - 1;
    }
  s.is_truncated_nat_ = true;
  s.finish_construction(/*require_total=*/false);
  return s;
}

PartialSemigroup PartialSemigroup::cyclic_group(std::size_t k) {
  if (k < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  PartialSemigroup s;
  for (std::size_t v = 0; v < k; ++v) s.labels_.push_back(std::to_string(v));
  s.table_.assign(k * k, kUndefined);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) s.table_[a * k + b] = (a + b) % k;
  s.finish_construction(true);
  return s;
}

PartialSemigroup PartialSemigroup::right_zero(std::size_t n) {
  PartialSemigroup s;
  for (std::size_t v = 0; v < n; ++v) s.labels_.push_back("r" + std::to_string(v));
  s.table_.assign(n * n, kUndefined);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) s.table_[a * n + b] = b;
  s.finish_construction(true);
  return s;
}

PartialSemigroup PartialSemigroup::from_structure(const fol::FiniteStructure& st,
                                                  const std::string& relation) {
  const auto& rel = st.relation(relation);
  if (rel.arity != 3)
    throw std::invalid_argument("operation relation must have arity 3");
  const std::size_t n = st.size();
  PartialSemigroup s;
  s.labels_ = st.universe();
  s.table_.assign(n * n, kUndefined);
  for (const auto& t : rel.tuples) {
    std::size_t& cell = s.table_[t[0] * n + t[1]];
    if (cell != kUndefined && cell != t[2])
      throw std::invalid_argument("operation relation is not functional");
    cell = t[2];
  }
  s.finish_construction(/*require_total=*/true);
  return s;
}

std::optional<std::size_t> PartialSemigroup::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::size_t PartialSemigroup::nat_index(long long v) const {
  if (!is_truncated_nat_)
    throw std::logic_error("nat_index is only meaningful for truncated_nat semigroups");
  if (v < 1 || static_cast<std::size_t>(v) > size())
    throw TruncationError("value " + std::to_string(v) + " outside truncation bound " +
                          std::to_string(size()));
  return static_cast<std::size_t>(v - 1);
}

}  // namespace latlab::monadic
