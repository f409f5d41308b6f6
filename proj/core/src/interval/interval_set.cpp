#include "latlab/interval/interval_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace latlab::interval {

IntervalSet IntervalSet::of(std::vector<Interval> parts) {
  for (const auto& p : parts)
    if (p.lo > p.hi) throw std::invalid_argument("interval with lo > hi");
  std::sort(parts.begin(), parts.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalSet out;
  for (const auto& p : parts) {
    if (!out.parts_.empty() && p.lo <= out.parts_.back().hi) {
      // overlapping or touching closed intervals merge
      if (p.hi > out.parts_.back().hi) out.parts_.back().hi = p.hi;
    } else {
      out.parts_.push_back(p);
    }
  }
  return out;
}

IntervalSet IntervalSet::single(Rat lo, Rat hi) {
  return of({Interval{std::move(lo), std::move(hi)}});
}

IntervalSet IntervalSet::parse(const std::string& text) {
  std::vector<Interval> parts;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '[') throw std::invalid_argument("expected '[' in interval set");
    ++i;
    auto comma = text.find(',', i);
    if (comma == std::string::npos) throw std::invalid_argument("expected ',' in interval");
    auto close = text.find(']', comma);
    if (close == std::string::npos) throw std::invalid_argument("expected ']' in interval");
    Rat lo = parse_rat(text.substr(i, comma - i));
    Rat hi = parse_rat(text.substr(comma + 1, close - comma - 1));
    parts.push_back(Interval{std::move(lo), std::move(hi)});
    i = close + 1;
    skip_ws();
  }
  return of(std::move(parts));
}

std::string IntervalSet::str() const {
  if (parts_.empty()) return "{}";
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << " ";
    out << "[" << rat_str(parts_[i].lo) << "," << rat_str(parts_[i].hi) << "]";
  }
  return out.str();
}

bool IntervalSet::contains(const Rat& x) const {
  for (const auto& p : parts_)
    if (p.lo <= x && x <= p.hi) return true;
  return false;
}

bool IntervalSet::is_atom() const {
  return parts_.size() == 1 && parts_[0].lo == parts_[0].hi;
}

std::vector<IntervalSet> IntervalSet::components() const {
  std::vector<IntervalSet> out;
  out.reserve(parts_.size());
  for (const auto& p : parts_) {
    IntervalSet c;
    c.parts_.push_back(p);
    out.push_back(std::move(c));
  }
  return out;
}

bool IntervalSet::operator<(const IntervalSet& o) const {
  auto cmp = [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo ? -1 : 1;
    if (a.hi != b.hi) return a.hi < b.hi ? -1 : 1;
    return 0;
  };
  std::size_t n = std::min(parts_.size(), o.parts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(parts_[i], o.parts_[i]);
    if (c != 0) return c < 0;
  }
  return parts_.size() < o.parts_.size();
}

IntervalSet join(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return IntervalSet::of(std::move(parts));
}

IntervalSet meet(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> parts;
  for (const auto& p : a.parts())
    for (const auto& q : b.parts()) {
      Rat lo = std::max(p.lo, q.lo);
      Rat hi = std::min(p.hi, q.hi);
      if (lo <= hi) parts.push_back(Interval{std::move(lo), std::move(hi)});
    }
  return IntervalSet::of(std::move(parts));
}

bool leq(const IntervalSet& a, const IntervalSet& b) {
  // every component of a must fit inside one component of b
  for (const auto& p : a.parts()) {
    bool covered = false;
    for (const auto& q : b.parts())
      if (q.lo <= p.lo && p.hi <= q.hi) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

bool is_connected(const IntervalSet& a) { return a.parts().size() == 1; }

bool atom_between(const Rat& u, const Rat& v, const Rat& w) {
  return std::min(v, w) <= u && u <= std::max(v, w);
}

}  // namespace latlab::interval
