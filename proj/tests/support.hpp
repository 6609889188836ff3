#pragma once

// Independent oracles for the test suites. Nothing here calls into the
// library's derived tables, Gröbner code or search: they recompute from the
// raw order relation or by dense linear algebra.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "joinmeet/hibi.hpp"
#include "joinmeet/lattice.hpp"
#include "joinmeet/polynomial.hpp"

namespace support {

using joinmeet::Element;
using joinmeet::ElementSet;
using joinmeet::Lattice;
using joinmeet::Polynomial;
using joinmeet::Rational;
using joinmeet::RingPtr;
using Order = std::vector<std::vector<bool>>;

/// leq relation of a lattice read back through leq() only.
inline Order order_of(const Lattice& l) {
  Order leq(l.size(), std::vector<bool>(l.size()));
  for (Element a = 0; a < l.size(); ++a) {
    for (Element b = 0; b < l.size(); ++b) leq[a][b] = l.leq(a, b);
  }
  return leq;
}

struct Tables {
  std::vector<std::vector<Element>> join;
  std::vector<std::vector<Element>> meet;
};

/// Join and meet by scanning bounds; nullopt when some pair has no least
/// upper or greatest lower bound.
inline std::optional<Tables> brute_tables(const Order& leq) {
  const std::size_t n = leq.size();
  Tables t{std::vector(n, std::vector<Element>(n)), std::vector(n, std::vector<Element>(n))};
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      std::optional<Element> lub;
      std::optional<Element> glb;
      for (Element c = 0; c < n; ++c) {
        if (leq[a][c] && leq[b][c]) {
          bool least = true;
          for (Element d = 0; d < n; ++d) {
            if (leq[a][d] && leq[b][d] && !leq[c][d]) least = false;
          }
          if (least) lub = c;
        }
        if (leq[c][a] && leq[c][b]) {
          bool greatest = true;
          for (Element d = 0; d < n; ++d) {
            if (leq[d][a] && leq[d][b] && !leq[d][c]) greatest = false;
          }
          if (greatest) glb = c;
        }
      }
      if (!lub || !glb) return std::nullopt;
      t.join[a][b] = *lub;
      t.meet[a][b] = *glb;
    }
  }
  return t;
}

inline bool brute_modular(const Tables& t) {
  const std::size_t n = t.join.size();
  for (Element x = 0; x < n; ++x) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (t.join[x][b] != b) continue;  // x <= b
        if (t.join[x][t.meet[a][b]] != t.meet[t.join[x][a]][b]) return false;
      }
    }
  }
  return true;
}

inline bool brute_distributive(const Tables& t) {
  const std::size_t n = t.join.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (t.meet[x][t.join[y][z]] != t.join[t.meet[x][y]][t.meet[x][z]]) return false;
        if (t.join[x][t.meet[y][z]] != t.meet[t.join[x][y]][t.join[x][z]]) return false;
      }
    }
  }
  return true;
}

/// Whether some 5-subset closed under join and meet is isomorphic to N5
/// (pentagon) or M3 (diamond). Checks the shape on the induced order only.
struct ShapeCount {
  bool pentagon = false;
  bool diamond = false;
};

inline ShapeCount brute_shapes(const Order& leq, const Tables& t) {
  const std::size_t n = leq.size();
  ShapeCount out;
  if (n < 5) return out;
  std::vector<Element> pick(5);
  std::function<void(std::size_t, Element)> rec = [&](std::size_t depth, Element from) {
    if (depth == 5) {
      for (Element a : pick) {
        for (Element b : pick) {
          if (std::find(pick.begin(), pick.end(), t.join[a][b]) == pick.end()) return;
          if (std::find(pick.begin(), pick.end(), t.meet[a][b]) == pick.end()) return;
        }
      }
      // A 5-element lattice is N5 iff it has exactly one comparable pair
      // among the three middle elements, M3 iff it has none.
      std::size_t bottom_count = 0;
      std::size_t top_count = 0;
      std::vector<Element> middle;
      for (Element a : pick) {
        bool is_bottom = true;
        bool is_top = true;
        for (Element b : pick) {
          if (!leq[a][b]) is_bottom = false;
          if (!leq[b][a]) is_top = false;
        }
        bottom_count += is_bottom;
        top_count += is_top;
        if (!is_bottom && !is_top) middle.push_back(a);
      }
      if (bottom_count != 1 || top_count != 1 || middle.size() != 3) return;
      int comparable = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
          if (leq[middle[i]][middle[j]] || leq[middle[j]][middle[i]]) ++comparable;
        }
      }
      if (comparable == 0) out.diamond = true;
      if (comparable == 1) out.pentagon = true;
      return;
    }
    for (Element a = from; a < n; ++a) {
      pick[depth] = a;
      rec(depth + 1, a + 1);
    }
  };
  rec(0, 0);
  return out;
}

/// All bounded posets on `n` labelled points (0 bottom, n-1 top) that are
/// lattices. Labelled, so isomorphic copies repeat; fine at this size.
inline std::vector<Lattice> all_lattices(std::size_t n) {
  std::vector<Lattice> out;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i));
  if (n == 1) {
    out.push_back(Lattice::from_order(labels, {{true}}));
    return out;
  }
  const std::size_t m = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  }
  std::size_t total = 1;
  for (std::size_t k = 0; k < pairs.size(); ++k) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    Order lt(m, std::vector<bool>(m, false));
    std::size_t c = code;
    for (auto [i, j] : pairs) {
      std::size_t r = c % 3;
      c /= 3;
      if (r == 1) lt[i][j] = true;
      if (r == 2) lt[j][i] = true;
    }
    bool transitive = true;
    for (std::size_t i = 0; i < m && transitive; ++i) {
      for (std::size_t j = 0; j < m && transitive; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
          if (lt[i][j] && lt[j][k] && !lt[i][k]) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (!transitive) continue;
    Order leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      leq[0][i] = true;
      leq[i][n - 1] = true;
      leq[i][i] = true;
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) leq[i + 1][j + 1] = leq[i + 1][j + 1] || lt[i][j];
    }
    if (!brute_tables(leq)) continue;
    out.push_back(Lattice::from_order(labels, leq));
  }
  return out;
}

inline std::vector<Lattice> all_lattices_up_to(std::size_t max_n) {
  std::vector<Lattice> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto batch = all_lattices(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

/// M3 with one element added below and one above: 7 elements, modular,
/// the diamond sits between ranks 1 and 3.
inline Lattice stacked_diamond() {
  return Lattice::from_covers({"o", "e", "x", "y", "z", "f", "t"},
                              {{"o", "e"}, {"e", "x"}, {"e", "y"}, {"e", "z"},
                               {"x", "f"}, {"y", "f"}, {"z", "f"}, {"f", "t"}});
}

/// Named lattices used throughout: distributive ones first.
inline std::vector<std::pair<std::string, Lattice>> named_corpus() {
  using namespace joinmeet::lattices;
  return {{"chain(2)", chain(2)},          {"chain(3)", chain(3)},
          {"chain(4)", chain(4)},          {"chain(5)", chain(5)},
          {"boolean(2)", boolean(2)},      {"boolean(3)", boolean(3)},
          {"divisor(12)", divisor_lattice(12)}, {"divisor(30)", divisor_lattice(30)},
          {"pentagon", pentagon()},        {"diamond", diamond()},
          {"stacked diamond", stacked_diamond()}};
}

/// Poset ideals by filtering all subsets for downward closure.
inline std::vector<ElementSet> brute_poset_ideals(const Lattice& l) {
  std::vector<ElementSet> out;
  const std::uint64_t total = std::uint64_t{1} << l.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    ElementSet s(mask);
    bool closed = true;
    for (Element b : s.elements()) {
      for (Element a = 0; a < l.size(); ++a) {
        if (l.leq(a, b) && !s.contains(a)) closed = false;
      }
    }
    if (closed) out.push_back(s);
  }
  return out;
}

/// Incomparable pairs by scanning every pair of the raw order.
inline std::vector<std::pair<std::string, std::string>> brute_incomparable(const Lattice& l) {
  std::vector<std::pair<std::string, std::string>> out;
  for (Element a = 0; a < l.size(); ++a) {
    for (Element b = a + 1; b < l.size(); ++b) {
      if (!l.leq(a, b) && !l.leq(b, a)) out.emplace_back(l.label(a), l.label(b));
    }
  }
  return out;
}

inline std::vector<std::vector<std::uint32_t>> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> e(nvars, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[i] = left - k;
      rec(i + 1, k);
    }
  };
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  rec(0, d);
  return out;
}

/// Membership in a homogeneous ideal by linear algebra: f of degree d lies in
/// (g_1..g_k) iff it is in the span of m*g_i over monomials m of degree
/// d - deg g_i. Exact rational elimination, no monomial order involved.
class MacaulayOracle {
 public:
  MacaulayOracle(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {}

  bool member(const Polynomial& f) {
    std::uint32_t top = f.is_zero() ? 0 : f.total_degree();
    for (std::uint32_t d = 0; d <= top; ++d) {
      Polynomial part = f.degree_part(d);
      if (part.is_zero()) continue;
      if (!in_span(d, part)) return false;
    }
    return true;
  }

 private:
  struct Echelon {
    std::map<std::vector<std::uint32_t>, std::size_t> column;
    // pivot column -> row normalised to 1 at the pivot
    std::map<std::size_t, std::vector<Rational>> rows;
  };

  std::vector<Rational> to_row(const Echelon& ech, const Polynomial& p) const {
    std::vector<Rational> row(ech.column.size());
    for (const auto& t : p.terms()) row[ech.column.at(t.monomial.exponents())] += t.coefficient;
    return row;
  }

  static void reduce(const Echelon& ech, std::vector<Rational>& row) {
    for (const auto& [pivot, r] : ech.rows) {
      if (row[pivot] == 0) continue;
      Rational c = row[pivot];
      for (std::size_t j = 0; j < row.size(); ++j) row[j] -= c * r[j];
    }
  }

  const Echelon& echelon(std::uint32_t d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    Echelon ech;
    for (auto& e : monomials_of_degree(ring_->num_variables(), d)) ech.column.emplace(e, ech.column.size());
    for (const auto& g : gens_) {
      if (g.is_zero() || g.total_degree() > d) continue;
      for (auto& e : monomials_of_degree(ring_->num_variables(), d - g.total_degree())) {
        Polynomial row_poly = g.multiply(1, joinmeet::Monomial(e));
        std::vector<Rational> row = to_row(ech, row_poly);
        reduce(ech, row);
        auto nz = std::find_if(row.begin(), row.end(), [](const Rational& c) { return c != 0; });
        if (nz == row.end()) continue;
        std::size_t pivot = static_cast<std::size_t>(nz - row.begin());
        Rational inv = 1 / row[pivot];
        for (auto& c : row) c *= inv;
        for (auto& [p, other] : ech.rows) {
          if (other[pivot] == 0) continue;
          Rational c = other[pivot];
          for (std::size_t j = 0; j < other.size(); ++j) other[j] -= c * row[j];
        }
        ech.rows.emplace(pivot, std::move(row));
      }
    }
    return cache_.emplace(d, std::move(ech)).first->second;
  }

  bool in_span(std::uint32_t d, const Polynomial& part) {
    const Echelon& ech = echelon(d);
    std::vector<Rational> row = to_row(ech, part);
    reduce(ech, row);
    return std::all_of(row.begin(), row.end(), [](const Rational& c) { return c == 0; });
  }

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::map<std::uint32_t, Echelon> cache_;
};

/// Random homogeneous polynomial of degree d with up to `terms` terms and
/// small integer coefficients.
inline Polynomial random_homogeneous(const RingPtr& ring, std::uint32_t d, std::size_t terms, std::mt19937& rng) {
  auto monos = monomials_of_degree(ring->num_variables(), d);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  Polynomial out(ring);
  for (std::size_t k = 0; k < terms; ++k) {
    int c = coef(rng);
    if (c == 0) continue;
    out = out + Polynomial::monomial(ring, c, joinmeet::Monomial(monos[pick(rng)]));
  }
  return out;
}

inline Polynomial random_linear_form(const RingPtr& ring, std::mt19937& rng) {
  Polynomial f(ring);
  while (f.is_zero()) f = random_homogeneous(ring, 1, 3, rng);
  return f;
}

}  // namespace support
