#include "joinmeet/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace joinmeet {

namespace {

constexpr std::size_t kMaxElements = 64;

}  // namespace

ElementSet Sublattice::members() const {
  ElementSet s;
  s.insert(bottom);
  s.insert(top);
  for (Element m : middle) s.insert(m);
  return s;
}

Lattice Lattice::from_covers(const std::vector<std::string>& labels,
                             const std::vector<std::pair<std::string, std::string>>& covers) {
  std::map<std::string, Element> index;
  for (Element i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw LatticeError("empty element label");
    if (!index.emplace(labels[i], i).second) {
      throw LatticeError("duplicate element label '" + labels[i] + "'");
    }
  }
  const std::size_t n = labels.size();
  std::vector<std::vector<Element>> succ(n);
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) throw LatticeError("cover references unknown element '" + lo + "'");
    if (b == index.end()) throw LatticeError("cover references unknown element '" + hi + "'");
    if (a->second == b->second) throw CyclicCovers("cover (" + lo + ", " + hi + ") is a loop");
    succ[a->second].push_back(b->second);
  }

  // Kahn's algorithm detects cycles; reachability then gives the order.
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& out : succ) {
    for (Element b : out) ++indegree[b];
  }
  std::vector<Element> topo;
  std::set<Element> ready;
  for (Element i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.insert(i);
  }
  while (!ready.empty()) {
    Element a = *ready.begin();
    ready.erase(ready.begin());
    topo.push_back(a);
    for (Element b : succ[a]) {
      if (--indegree[b] == 0) ready.insert(b);
    }
  }
  if (topo.size() != n) throw CyclicCovers("cover relation contains a cycle");

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Element a = *it;
    leq[a][a] = true;
    for (Element b : succ[a]) {
      for (Element c = 0; c < n; ++c) {
        if (leq[b][c]) leq[a][c] = true;
      }
    }
  }
  return from_order(labels, leq);
}

Lattice Lattice::from_order(const std::vector<std::string>& labels,
                            const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = labels.size();
  if (n == 0) throw LatticeError("a lattice needs at least one element");
  if (n > kMaxElements) throw LatticeError("lattices are limited to 64 elements");
  if (leq.size() != n) throw LatticeError("order table has the wrong size");
  for (const auto& row : leq) {
    if (row.size() != n) throw LatticeError("order table has the wrong size");
  }
  {
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) throw LatticeError("duplicate element label '" + l + "'");
    }
  }
  for (Element a = 0; a < n; ++a) {
    if (!leq[a][a]) throw LatticeError("order is not reflexive at '" + labels[a] + "'");
    for (Element b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) throw CyclicCovers("order is not antisymmetric");
      for (Element c = 0; c < n; ++c) {
        if (leq[a][b] && leq[b][c] && !leq[a][c]) throw LatticeError("order is not transitive");
      }
    }
  }

  Lattice l;
  l.labels_ = labels;
  l.leq_.assign(n * n, false);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) l.leq_[a * n + b] = leq[a][b];
  }
  l.derive_tables();
  return l;
}

void Lattice::derive_tables() {
  const std::size_t n = size();
  join_.assign(n * n, 0);
  meet_.assign(n * n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      std::vector<Element> upper;
      std::vector<Element> lower;
      for (Element c = 0; c < n; ++c) {
        if (leq(a, c) && leq(b, c)) upper.push_back(c);
        if (leq(c, a) && leq(c, b)) lower.push_back(c);
      }
      if (upper.empty()) throw NotALattice(labels_[a], labels_[b], "no upper bound");
      if (lower.empty()) throw NotALattice(labels_[a], labels_[b], "no lower bound");
      auto least = std::find_if(upper.begin(), upper.end(), [&](Element u) {
        return std::all_of(upper.begin(), upper.end(), [&](Element v) { return leq(u, v); });
      });
      auto greatest = std::find_if(lower.begin(), lower.end(), [&](Element u) {
        return std::all_of(lower.begin(), lower.end(), [&](Element v) { return leq(v, u); });
      });
      if (least == upper.end()) throw NotALattice(labels_[a], labels_[b], "no least upper bound");
      if (greatest == lower.end()) {
        throw NotALattice(labels_[a], labels_[b], "no greatest lower bound");
      }
      join_[a * n + b] = join_[b * n + a] = *least;
      meet_[a * n + b] = meet_[b * n + a] = *greatest;
    }
  }

  bottom_ = 0;
  top_ = 0;
  for (Element a = 1; a < n; ++a) {
    bottom_ = meet(bottom_, a);
    top_ = join(top_, a);
  }

  covers_.clear();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool direct = true;
      for (Element c = 0; c < n && direct; ++c) {
        if (less(a, c) && less(c, b)) direct = false;
      }
      if (direct) covers_.emplace_back(a, b);
    }
  }

  // Smallest-index-first topological sort of the order.
  linear_extension_.clear();
  std::vector<bool> placed(n, false);
  while (linear_extension_.size() < n) {
    for (Element a = 0; a < n; ++a) {
      if (placed[a]) continue;
      bool ready = true;
      for (Element b = 0; b < n && ready; ++b) {
        if (!placed[b] && less(b, a)) ready = false;
      }
      if (ready) {
        placed[a] = true;
        linear_extension_.push_back(a);
        break;
      }
    }
  }
  position_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) position_[linear_extension_[i]] = i;

  rank_.assign(n, 0);
  for (Element b : linear_extension_) {
    for (const auto& [lo, hi] : covers_) {
      if (hi == b) rank_[b] = std::max(rank_[b], rank_[lo] + 1);
    }
  }
  pure_ = std::all_of(covers_.begin(), covers_.end(),
                      [&](const auto& c) { return rank_[c.second] == rank_[c.first] + 1; });
}

std::optional<Element> Lattice::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

Element Lattice::index_of(const std::string& label) const {
  auto a = find(label);
  if (!a) throw LatticeError("unknown element '" + label + "'");
  return *a;
}

bool Lattice::covered_by(Element a, Element b) const {
  return std::find(covers_.begin(), covers_.end(), std::pair{a, b}) != covers_.end();
}

std::vector<std::pair<Element, Element>> Lattice::incomparable_pairs() const {
  std::vector<std::pair<Element, Element>> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Element a = linear_extension_[i];
      Element b = linear_extension_[j];
      if (!comparable(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

bool Lattice::is_modular() const {
  const std::size_t n = size();
  for (Element x = 0; x < n; ++x) {
    for (Element b = 0; b < n; ++b) {
      if (!leq(x, b)) continue;
      for (Element a = 0; a < n; ++a) {
        if (join(x, meet(a, b)) != meet(join(x, a), b)) return false;
      }
    }
  }
  return true;
}

bool Lattice::is_distributive() const {
  const std::size_t n = size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
        if (join(x, meet(y, z)) != meet(join(x, y), join(x, z))) return false;
      }
    }
  }
  return true;
}

// y < x on the long side, z incomparable to both; the five elements are
// closed exactly when z meets and joins the two sides identically. The visitor
// returns true to stop.
template <typename Visit>
void Lattice::visit_pentagons(Visit&& visit) const {
  for (Element x : linear_extension_) {
    for (Element y : linear_extension_) {
      if (!less(y, x)) continue;
      for (Element z : linear_extension_) {
        if (comparable(z, x) || comparable(z, y)) continue;
        if (join(y, z) == join(x, z) && meet(y, z) == meet(x, z)) {
          if (visit(Sublattice{Sublattice::Shape::kPentagon, meet(x, z), join(x, z), {x, y, z}})) {
            return;
          }
        }
      }
    }
  }
}

template <typename Visit>
void Lattice::visit_diamonds(Visit&& visit) const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    Element x = linear_extension_[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      Element y = linear_extension_[j];
      if (comparable(x, y)) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        Element z = linear_extension_[k];
        if (comparable(x, z) || comparable(y, z)) continue;
        Element f = join(x, y);
        Element e = meet(x, y);
        if (join(x, z) == f && join(y, z) == f && meet(x, z) == e && meet(y, z) == e) {
          if (visit(Sublattice{Sublattice::Shape::kDiamond, e, f, {x, y, z}})) return;
        }
      }
    }
  }
}

std::optional<Sublattice> Lattice::find_pentagon() const {
  std::optional<Sublattice> out;
  visit_pentagons([&](Sublattice s) {
    out = std::move(s);
    return true;
  });
  return out;
}

std::optional<Sublattice> Lattice::find_diamond() const {
  std::optional<Sublattice> out;
  visit_diamonds([&](Sublattice s) {
    out = std::move(s);
    return true;
  });
  return out;
}

std::vector<Sublattice> Lattice::pentagons() const {
  std::vector<Sublattice> out;
  visit_pentagons([&](Sublattice s) {
    out.push_back(std::move(s));
    return false;
  });
  return out;
}

std::vector<Sublattice> Lattice::diamonds() const {
  std::vector<Sublattice> out;
  visit_diamonds([&](Sublattice s) {
    out.push_back(std::move(s));
    return false;
  });
  return out;
}

Rank2Diamond Lattice::find_rank2_diamond() const {
  Rank2Diamond out;
  if (!is_modular()) {
    out.reason = "lattice is not modular";
    return out;
  }
  if (is_distributive()) {
    out.reason = "lattice is distributive";
    return out;
  }
  for (Element e : linear_extension_) {
    for (Element f : linear_extension_) {
      if (!less(e, f) || rank(f) != rank(e) + 2) continue;
      std::vector<Element> interval;
      for (Element c : linear_extension_) {
        if (less(e, c) && less(c, f)) interval.push_back(c);
      }
      if (interval.size() < 3) continue;
      bool ok = true;
      for (std::size_t i = 0; i < interval.size() && ok; ++i) {
        for (std::size_t j = i + 1; j < interval.size() && ok; ++j) {
          Element a = interval[i];
          Element b = interval[j];
          ok = !comparable(a, b) && join(a, b) == f && meet(a, b) == e;
        }
      }
      if (!ok) continue;
      out.diamond = Sublattice{Sublattice::Shape::kDiamond, e, f,
                               {interval[0], interval[1], interval[2]}};
      out.interval = std::move(interval);
      return out;
    }
  }
  out.reason = "no diamond with rank gap 2 found";
  return out;
}

bool Lattice::is_poset_ideal(ElementSet s) const {
  for (Element b : s.elements()) {
    for (Element a = 0; a < size(); ++a) {
      if (leq(a, b) && !s.contains(a)) return false;
    }
  }
  return true;
}

bool Lattice::is_sublattice(ElementSet s) const {
  if (s.empty()) return false;
  auto members = s.elements();
  for (Element a : members) {
    for (Element b : members) {
      if (!s.contains(join(a, b)) || !s.contains(meet(a, b))) return false;
    }
  }
  return true;
}

std::vector<PosetIdeal> Lattice::poset_ideals() const {
  std::vector<PosetIdeal> out;
  // Decide elements bottom-up; an element may join once everything below it has.
  auto recurse = [&](auto&& self, std::size_t i, ElementSet current) -> void {
    if (i == size()) {
      out.push_back(current);
      return;
    }
    Element a = linear_extension_[i];
    self(self, i + 1, current);
    bool allowed = true;
    for (Element b = 0; b < size() && allowed; ++b) {
      if (less(b, a) && !current.contains(b)) allowed = false;
    }
    if (allowed) self(self, i + 1, current.with(a));
  };
  recurse(recurse, 0, ElementSet{});

  auto key = [&](ElementSet s) {
    std::vector<std::size_t> pos;
    for (Element a : s.elements()) pos.push_back(position_[a]);
    std::sort(pos.begin(), pos.end());
    return std::pair{s.size(), pos};
  };
  std::sort(out.begin(), out.end(), [&](ElementSet a, ElementSet b) { return key(a) < key(b); });
  return out;
}

std::vector<Element> Lattice::maximal_elements(ElementSet s) const {
  std::vector<Element> out;
  for (Element a : linear_extension_) {
    if (!s.contains(a)) continue;
    bool maximal = true;
    for (Element b : s.elements()) {
      if (less(a, b)) maximal = false;
    }
    if (maximal) out.push_back(a);
  }
  return out;
}

std::vector<std::string> Lattice::labels_of(ElementSet s) const {
  std::vector<std::string> out;
  for (Element a : linear_extension_) {
    if (s.contains(a)) out.push_back(labels_[a]);
  }
  return out;
}

std::string Lattice::format(ElementSet s) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& l : labels_of(s)) {
    if (!first) os << ", ";
    os << l;
    first = false;
  }
  os << '}';
  return os.str();
}

namespace lattices {

Lattice chain(std::size_t n) {
  if (n == 0) throw LatticeError("chain needs at least one element");
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    if (i > 0) covers.emplace_back(labels[i - 1], labels[i]);
  }
  return Lattice::from_covers(labels, covers);
}

Lattice boolean(std::size_t n) {
  if (n > 6) throw LatticeError("boolean lattice is limited to n <= 6");
  const std::size_t size = std::size_t{1} << n;
  auto name = [](std::size_t mask) {
    if (mask == 0) return std::string("o");
    std::string s;
    for (std::size_t i = 0; (mask >> i) != 0; ++i) {
      if ((mask >> i) & 1U) s += static_cast<char>('a' + i);
    }
    return s;
  };
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t m = 0; m < size; ++m) labels.push_back(name(m));
  for (std::size_t m = 0; m < size; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!((m >> i) & 1U)) covers.emplace_back(name(m), name(m | (std::size_t{1} << i)));
    }
  }
  return Lattice::from_covers(labels, covers);
}

Lattice divisor_lattice(std::size_t n) {
  if (n == 0) throw LatticeError("divisor lattice needs n >= 1");
  std::vector<std::size_t> divisors;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0) divisors.push_back(d);
  }
  if (divisors.size() > kMaxElements) throw LatticeError("too many divisors");
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t d : divisors) labels.push_back("d" + std::to_string(d));
  for (std::size_t a : divisors) {
    for (std::size_t b : divisors) {
      if (a != b && b % a == 0) covers.emplace_back("d" + std::to_string(a), "d" + std::to_string(b));
    }
  }
  return Lattice::from_covers(labels, covers);
}

Lattice pentagon() {
  return Lattice::from_covers({"e", "x", "y", "z", "f"},
                              {{"e", "y"}, {"y", "x"}, {"x", "f"}, {"e", "z"}, {"z", "f"}});
}

Lattice diamond() {
  return Lattice::from_covers(
      {"e", "x", "y", "z", "f"},
      {{"e", "x"}, {"e", "y"}, {"e", "z"}, {"x", "f"}, {"y", "f"}, {"z", "f"}});
}

}  // namespace lattices

}  // namespace joinmeet
