#include "latlab/interval/betweenness.hpp"

#include <algorithm>
#include <stdexcept>

namespace latlab::interval {

BetweennessReport betweenness_axioms(
    std::size_t n, const std::function<bool(std::size_t, std::size_t, std::size_t)>& B) {
  BetweennessReport rep;
  if (n == 0) {
    rep.failing_clause = "empty carrier";
    return rep;
  }
  std::string last_failure = "no endpoint pair works";
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b && n > 1) continue;
      auto leq1 = [&](std::size_t x, std::size_t y) { return B(a, x, y); };
      auto leq2 = [&](std::size_t x, std::size_t y) { return B(x, y, b); };
      bool ok = true;
      // (a): both relations agree and form a total order with min a, max b
      for (std::size_t x = 0; x < n && ok; ++x)
        for (std::size_t y = 0; y < n && ok; ++y) {
          if (leq1(x, y) != leq2(x, y)) { ok = false; last_failure = "orders differ"; }
        }
      if (!ok) continue;
      for (std::size_t x = 0; x < n && ok; ++x) {
        if (!leq1(x, x)) { ok = false; last_failure = "not reflexive"; }
        if (!leq1(a, x) || !leq1(x, b)) { ok = false; last_failure = "endpoints not extreme"; }
      }
      for (std::size_t x = 0; x < n && ok; ++x)
        for (std::size_t y = 0; y < n && ok; ++y) {
          if (x != y && leq1(x, y) && leq1(y, x)) { ok = false; last_failure = "not antisymmetric"; }
          if (!leq1(x, y) && !leq1(y, x)) { ok = false; last_failure = "not total"; }
          for (std::size_t z = 0; z < n && ok; ++z)
            if (leq1(x, y) && leq1(y, z) && !leq1(x, z)) { ok = false; last_failure = "not transitive"; }
        }
      if (!ok) continue;
      // (b): B is the betweenness relation of the recovered order
      for (std::size_t x = 0; x < n && ok; ++x)
        for (std::size_t y = 0; y < n && ok; ++y)
          for (std::size_t z = 0; z < n && ok; ++z) {
            bool btw = (leq1(x, y) && leq1(y, z)) || (leq1(z, y) && leq1(y, x));
            if (B(x, y, z) != btw) { ok = false; last_failure = "B is not the betweenness of the order"; }
          }
      if (!ok) continue;

      rep.bounded_betweenness = true;
      rep.endpoint_min = a;
      rep.endpoint_max = b;
      rep.order.resize(n);
      for (std::size_t i = 0; i < n; ++i) rep.order[i] = i;
      std::sort(rep.order.begin(), rep.order.end(),
                [&](std::size_t x, std::size_t y) { return x != y && leq1(x, y); });
      // literal density of the finite relation: strictly-between witnesses
      rep.dense_on_finite = true;
      for (std::size_t x = 0; x < n && rep.dense_on_finite; ++x)
        for (std::size_t y = 0; y < n && rep.dense_on_finite; ++y) {
          if (x == y) continue;
          bool witness = false;
          for (std::size_t z = 0; z < n; ++z)
            if (z != x && z != y && B(x, z, y)) witness = true;
          if (!witness) rep.dense_on_finite = false;
        }
      return rep;
    }
  rep.failing_clause = last_failure;
  return rep;
}

EndpointClosedUniverse::EndpointClosedUniverse(std::vector<Rat> grid) : grid_(std::move(grid)) {
  std::sort(grid_.begin(), grid_.end());
  grid_.erase(std::unique(grid_.begin(), grid_.end()), grid_.end());
  if (grid_.empty()) throw std::invalid_argument("universe grid must be non-empty");
  // enumerate all interval sets with endpoints in the grid: pick component
  // index pairs left to right, next component starting strictly after
  std::vector<Interval> acc;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    members_.push_back(IntervalSet::of(acc));
    for (std::size_t i = start; i < grid_.size(); ++i)
      for (std::size_t j = i; j < grid_.size(); ++j) {
        acc.push_back(Interval{grid_[i], grid_[j]});
        rec(j + 1);
        acc.pop_back();
      }
  };
  rec(0);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool EndpointClosedUniverse::contains(const IntervalSet& a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

std::vector<Rat> EndpointClosedUniverse::atoms_of(const IntervalSet& a) const {
  std::vector<Rat> out;
  for (const auto& g : grid_)
    if (a.contains(g)) out.push_back(g);
  return out;
}

std::optional<IntervalSet> EndpointClosedUniverse::smallest_connected_within(
    const IntervalSet& a, const Rat& v, const Rat& w) const {
  std::optional<IntervalSet> best;
  for (const auto& m : members_) {
    if (!is_connected(m) || !leq(m, a)) continue;
    if (!m.contains(v) || !m.contains(w)) continue;
    if (!best || leq(m, *best)) best = m;
  }
  if (!best) return std::nullopt;
  // must be the unique minimum, not just a minimal candidate
  for (const auto& m : members_) {
    if (!is_connected(m) || !leq(m, a) || !m.contains(v) || !m.contains(w)) continue;
    if (!leq(*best, m)) return std::nullopt;
  }
  return best;
}

namespace {

// members of the universe below a
std::vector<IntervalSet> sub_members(const EndpointClosedUniverse& u, const IntervalSet& a) {
  std::vector<IntervalSet> out;
  for (const auto& m : u.members())
    if (leq(m, a)) out.push_back(m);
  return out;
}

}  // namespace

CheckIReport check_I(const IntervalSet& a, const EndpointClosedUniverse& u) {
  CheckIReport rep;
  rep.semantic = a.parts().size() == 1 && a.parts()[0].lo < a.parts()[0].hi;

  // I1: connected (no decomposition into two nonzero members with bottom
  // meet and join a) and not an atom; bottom is not connected by convention
  const auto subs = sub_members(u, a);
  bool decomposable = false;
  for (std::size_t i = 0; i < subs.size() && !decomposable; ++i) {
    if (subs[i].empty()) continue;
    for (std::size_t j = i + 1; j < subs.size() && !decomposable; ++j) {
      if (subs[j].empty()) continue;
      if (meet(subs[i], subs[j]).empty() && join(subs[i], subs[j]) == a) decomposable = true;
    }
  }
  bool connected = !a.empty() && !decomposable;
  rep.clause_i1 = connected && !a.is_atom();

  const auto atoms = u.atoms_of(a);
  const std::size_t n = atoms.size();

  // I2: betweenness relation of smallest connected subsets, on the atom grid
  auto B = [&](std::size_t x, std::size_t y, std::size_t z) {
    auto c = u.smallest_connected_within(a, atoms[x], atoms[z]);
    return c && c->contains(atoms[y]);
  };
  auto axioms = betweenness_axioms(n, B);
  bool dense_symbolic = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!a.contains(midpoint(atoms[i], atoms[j]))) dense_symbolic = false;
  rep.clause_i2 = axioms.bounded_betweenness && n >= 2 && dense_symbolic;
  rep.note = axioms.bounded_betweenness
                 ? (dense_symbolic ? "density via midpoint witnesses over Q"
                                   : "midpoint witness missing")
                 : axioms.failing_clause;

  // I3: neighborhoods avoiding y, half-open at the two order endpoints
  bool i3 = rep.clause_i2;  // needs the order from I2 to make sense
  if (i3) {
    const auto& ord = axioms.order;  // indices into atoms, ascending
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[ord[i]] = i;
    for (std::size_t ui = 0; ui < n && i3; ++ui) {
      for (const auto& y : subs) {
        if (y.contains(atoms[ui])) continue;  // only u not below y
        bool found = false;
        std::size_t up = pos[ui];
        // interior neighborhoods ((v,w))
        for (std::size_t vp = 0; vp < up && !found; ++vp)
          for (std::size_t wp = up + 1; wp < n && !found; ++wp) {
            bool clear = true;
            for (std::size_t t = vp + 1; t < wp && clear; ++t) {
              if (t == up) continue;
              if (y.contains(atoms[ord[t]])) clear = false;
            }
            if (clear) found = true;
          }
        // half-open neighborhood at the smallest element: [[u, w))
        if (!found && up == 0) {
          for (std::size_t wp = 1; wp < n && !found; ++wp) {
            bool clear = true;
            for (std::size_t t = 0; t < wp; ++t)
              if (y.contains(atoms[ord[t]])) clear = false;
            if (clear) found = true;
          }
          if (n == 1) found = true;
        }
        // half-open neighborhood at the largest element: ((v, u]]
        if (!found && up == n - 1) {
          for (std::size_t vp = 0; vp + 1 < n && !found; ++vp) {
            bool clear = true;
            for (std::size_t t = vp + 1; t < n; ++t)
              if (y.contains(atoms[ord[t]])) clear = false;
            if (clear) found = true;
          }
        }
        if (!found) {
          i3 = false;
          break;
        }
      }
    }
  }
  rep.clause_i3 = i3;
  return rep;
}

}  // namespace latlab::interval
