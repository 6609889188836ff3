#include "joinmeet/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace joinmeet {

bool GroebnerBasis::is_unit_ideal() const {
  return basis_.size() == 1 && basis_.front().is_constant();
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (g.ring()->num_variables() != ring_->num_variables()) {
      throw std::invalid_argument("generator belongs to a different ring");
    }
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

// ---------------------------------------------------------------------------
// Division

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  const auto& field = f.ring()->field();
  Polynomial h = f;
  std::vector<Term> remainder;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    const Polynomial* divisor = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(lt.monomial)) {
        divisor = &g;
        break;
      }
    }
    if (divisor != nullptr) {
      Rational c = field.div(lt.coefficient, divisor->leading_coefficient());
      h = h.sub_multiple(c, lt.monomial / divisor->leading_monomial(), *divisor);
    } else {
      remainder.push_back(lt);
      h = h.tail();
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(remainder));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  return normal_form(f, std::span<const Polynomial>(g.basis()));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& field = f.ring()->field();
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial a = f.multiply(field.inverse(f.leading_coefficient()), l / f.leading_monomial());
  return a.sub_multiple(field.inverse(g.leading_coefficient()), l / g.leading_monomial(), g);
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw ZeroDivisorArgument();
  const auto& field = f.ring()->field();
  Polynomial r = f;
  std::vector<Term> quotient;
  while (!r.is_zero()) {
    const Term& lt = r.leading_term();
    if (!g.leading_monomial().divides(lt.monomial)) {
      throw std::domain_error(g.to_string() + " does not divide " + f.to_string());
    }
    Term q{field.div(lt.coefficient, g.leading_coefficient()), lt.monomial / g.leading_monomial()};
    r = r.sub_multiple(q.coefficient, q.monomial, g);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(f.ring(), std::move(quotient));
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

struct SPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::size_t serial;
};

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> generators,
                         PairStrategy strategy, BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats != nullptr ? *stats : local;

  std::vector<Polynomial> basis;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return GroebnerBasis(ring, {Polynomial::constant(ring, 1)}, false);
    basis.push_back(g.monic());
  }

  std::vector<SPair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;
  std::size_t serial = 0;
  auto add_pairs = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      pending.push_back(
          SPair{k, n, basis[k].leading_monomial().lcm(basis[n].leading_monomial()), serial++});
      pending_keys.emplace(k, n);
    }
  };
  for (std::size_t n = 0; n < basis.size(); ++n) add_pairs(n);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending_keys.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!pending.empty()) {
    auto best = pending.begin();
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      bool better = false;
      if (strategy == PairStrategy::kNormal) {
        better = it->lcm.degree() < best->lcm.degree() ||
                 (it->lcm.degree() == best->lcm.degree() && it->serial < best->serial);
      } else {
        better = it->serial < best->serial;
      }
      if (better) best = it;
    }
    SPair pair = std::move(*best);
    pending.erase(best);
    pending_keys.erase({pair.i, pair.j});
    ++st.pairs_considered;

    const Polynomial& fi = basis[pair.i];
    const Polynomial& fj = basis[pair.j];
    if (fi.leading_monomial().coprime(fj.leading_monomial())) {
      ++st.product_criterion;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = basis[k].leading_monomial().divides(pair.lcm) && !is_pending(pair.i, k) &&
              !is_pending(pair.j, k);
    }
    if (chain) {
      ++st.chain_criterion;
      continue;
    }

    ++st.pairs_reduced;
    Polynomial r = normal_form(s_polynomial(fi, fj), std::span<const Polynomial>(basis));
    if (r.is_zero()) continue;
    if (r.is_constant()) return GroebnerBasis(ring, {Polynomial::constant(ring, 1)}, false);
    basis.push_back(r.monic());
    add_pairs(basis.size() - 1);
  }
  return GroebnerBasis(ring, std::move(basis), false);
}

GroebnerBasis reduce_basis(const GroebnerBasis& g) {
  const RingPtr& ring = g.ring();
  const auto& order = ring->order();
  std::vector<Polynomial> polys;
  for (const auto& p : g.basis()) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return GroebnerBasis(ring, {Polynomial::constant(ring, 1)}, true);
    polys.push_back(p.monic());
  }
  std::stable_sort(polys.begin(), polys.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (auto& p : polys) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& m) {
      return m.leading_monomial().divides(p.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(p));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Polynomial lead = Polynomial::monomial(ring, 1, minimal[i].leading_monomial());
    reduced.push_back(lead + normal_form(minimal[i].tail(), std::span<const Polynomial>(others)));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return GroebnerBasis(ring, std::move(reduced), true);
}

GroebnerBasis groebner_basis(const Ideal& ideal, PairStrategy strategy) {
  return reduce_basis(buchberger(ideal.ring(), ideal.generators(), strategy));
}

bool satisfies_buchberger_criterion(const GroebnerBasis& g) {
  const auto& b = g.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (!normal_form(s_polynomial(b[i], b[j]), g).is_zero()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Ideal operations

bool ideal_member(const Polynomial& f, const GroebnerBasis& g) { return normal_form(f, g).is_zero(); }

bool ideal_member(const Polynomial& f, const Ideal& ideal) {
  return ideal_member(f, groebner_basis(ideal));
}

bool ideal_equal(const Ideal& a, const Ideal& b) { return groebner_basis(a) == groebner_basis(b); }

bool ideal_contains(const Ideal& outer, const Ideal& inner) {
  GroebnerBasis g = groebner_basis(outer);
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Polynomial& p) { return ideal_member(p, g); });
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

namespace {

bool is_unit(const Ideal& ideal) {
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Polynomial& g) { return g.is_constant(); });
}

/// Ring with one extra variable t placed in front, under an order that eliminates t.
RingPtr elimination_ring(const PolyRing& base) {
  std::vector<std::string> names{"_t"};
  names.insert(names.end(), base.names().begin(), base.names().end());
  std::vector<std::size_t> priority{0};
  for (std::size_t p : base.order().priority()) priority.push_back(p + 1);
  return std::make_shared<const PolyRing>(
      std::move(names), MonomialOrder::block_elimination(1, std::move(priority)), base.field());
}

Polynomial lift_to(const RingPtr& target, const Polynomial& f, std::uint32_t t_exponent) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e{t_exponent};
    e.insert(e.end(), t.monomial.exponents().begin(), t.monomial.exponents().end());
    terms.push_back(Term{t.coefficient, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial project_from(const RingPtr& target, const Polynomial& f) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(t.monomial.exponents().begin() + 1, t.monomial.exponents().end());
    terms.push_back(Term{t.coefficient, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  const RingPtr& ring = a.ring();
  if (a.generators().empty() || b.generators().empty()) return Ideal(ring);
  if (is_unit(a)) return b;
  if (is_unit(b)) return a;

  RingPtr aux = elimination_ring(*ring);
  std::vector<Polynomial> gens;
  Polynomial one_minus_t = Polynomial::constant(aux, 1) - lift_to(aux, Polynomial::constant(ring, 1), 1);
  for (const auto& g : a.generators()) gens.push_back(lift_to(aux, g, 1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * lift_to(aux, g, 0));

  GroebnerBasis gb = reduce_basis(buchberger(aux, std::move(gens)));
  std::vector<Polynomial> out;
  for (const auto& g : gb.basis()) {
    if (g.leading_monomial()[0] == 0) out.push_back(project_from(ring, g));
  }
  return Ideal(ring, std::move(out));
}

Ideal colon_element(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw ZeroDivisorArgument();
  return colon_element(groebner_basis(ideal), f);
}

Ideal colon_element(const GroebnerBasis& g, const Polynomial& f) {
  if (f.is_zero()) throw ZeroDivisorArgument();
  const RingPtr& ring = g.ring();
  if (ideal_member(f, g)) return Ideal::unit(ring);
  Ideal meet = intersect(Ideal(ring, g.basis()), Ideal(ring, {f}));
  std::vector<Polynomial> gens;
  GroebnerBasis meet_basis = groebner_basis(meet);
  for (const auto& h : meet_basis.basis()) gens.push_back(divide_exact(h, f));
  return Ideal(ring, std::move(gens));
}

Ideal colon_ideal(const Ideal& ideal, const Ideal& by) {
  Ideal result = Ideal::unit(ideal.ring());
  for (const auto& g : by.generators()) result = intersect(result, colon_element(ideal, g));
  return result;
}

std::vector<Polynomial> degree1_part(const GroebnerBasis& reduced) {
  const RingPtr& ring = reduced.ring();
  std::vector<Polynomial> out;
  if (reduced.is_unit_ideal()) {
    for (std::size_t v = 0; v < ring->num_variables(); ++v) out.push_back(Polynomial::variable(ring, v));
    return out;
  }
  for (const auto& g : reduced.basis()) {
    if (!g.is_homogeneous()) throw NotHomogeneous(g.to_string());
    if (g.total_degree() == 1) out.push_back(g);
  }
  return out;
}

std::vector<Polynomial> degree1_part(const Ideal& ideal) {
  for (const auto& g : ideal.generators()) {
    if (!g.is_homogeneous()) throw NotHomogeneous(g.to_string());
  }
  return degree1_part(groebner_basis(ideal));
}

bool is_generated_by_linear_forms(const Ideal& ideal) {
  return ideal_equal(ideal, Ideal(ideal.ring(), degree1_part(ideal)));
}

// ---------------------------------------------------------------------------
// Cache

std::string GroebnerCache::key(const Ideal& ideal) {
  std::vector<std::string> parts;
  for (const auto& g : ideal.generators()) parts.push_back(g.monic().to_string());
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::ostringstream os;
  os << static_cast<const void*>(ideal.ring().get());
  for (const auto& p : parts) os << '|' << p;
  return os.str();
}

std::shared_ptr<const GroebnerBasis> GroebnerCache::get(const Ideal& ideal) {
  std::string k = key(ideal);
  {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(k);
    if (it != entries_.end()) {
      ++hits_;
      return it->second;
    }
  }
  auto gb = std::make_shared<const GroebnerBasis>(groebner_basis(ideal));
  std::lock_guard lock(mutex_);
  return entries_.emplace(std::move(k), std::move(gb)).first->second;
}

std::size_t GroebnerCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::size_t GroebnerCache::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

}  // namespace joinmeet
