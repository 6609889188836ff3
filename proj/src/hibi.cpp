#include "joinmeet/hibi.hpp"

#include <algorithm>
#include <sstream>

namespace joinmeet {

std::vector<std::size_t> lattice_variable_priority(const Lattice& lattice) {
  const auto& ext = lattice.linear_extension();
  return {ext.rbegin(), ext.rend()};
}

HibiRing::HibiRing(Lattice lattice, CoefficientField field)
    : lattice_(std::move(lattice)),
      ring_(std::make_shared<const PolyRing>(
          lattice_.labels(), MonomialOrder::degrevlex(lattice_variable_priority(lattice_)), field)),
      join_meet_lift_(ring_),
      cache_(std::make_unique<GroebnerCache>()) {
  for (const auto& [a, b] : lattice_.incomparable_pairs()) {
    Polynomial rel = variable(a) * variable(b) -
                     variable(lattice_.join(a, b)) * variable(lattice_.meet(a, b));
    join_meet_.pairs.emplace_back(a, b);
    join_meet_.generators.push_back(std::move(rel));
  }
  join_meet_lift_ = Ideal(ring_, join_meet_.generators);
  join_meet_basis_ = basis_of(join_meet_lift_);
}

std::shared_ptr<const GroebnerBasis> HibiRing::basis_of(const Ideal& ideal) const {
  return cache_->get(ideal);
}

std::optional<ElementSet> HibiRing::variable_set(const std::vector<Polynomial>& degree1) const {
  ElementSet s;
  for (const auto& g : degree1) {
    if (g.size() != 1) return std::nullopt;
    const auto& e = g.leading_monomial().exponents();
    s.insert(static_cast<Element>(std::find(e.begin(), e.end(), 1U) - e.begin()));
  }
  return s;
}

ResidueIdeal HibiRing::residue_ideal(std::vector<Polynomial> linear_forms) const {
  std::vector<Polynomial> gens = join_meet_.generators;
  for (const auto& f : linear_forms) {
    if (!f.is_linear_form()) throw NotLinear(f.to_string());
    gens.push_back(f);
  }
  Ideal lift(ring_, std::move(gens));
  auto basis = basis_of(lift);
  std::vector<Polynomial> deg1 = degree1_part(*basis);
  auto vars = variable_set(deg1);
  return ResidueIdeal{std::move(linear_forms), std::move(lift), std::move(basis), std::move(deg1), vars};
}

ResidueIdeal HibiRing::residue_ideal(ElementSet variables) const {
  std::vector<Polynomial> gens;
  for (Element a : lattice_.linear_extension()) {
    if (variables.contains(a)) gens.push_back(variable(a));
  }
  return residue_ideal(std::move(gens));
}

ResidueColonReport HibiRing::analyse(Ideal lifted_colon) const {
  ResidueColonReport report;
  report.lifted = std::make_shared<const GroebnerBasis>(groebner_basis(lifted_colon));
  if (report.lifted->is_unit_ideal()) {
    report.unit = true;
    return report;
  }
  report.degree1 = degree1_part(*report.lifted);

  std::vector<Polynomial> gens = join_meet_.generators;
  gens.insert(gens.end(), report.degree1.begin(), report.degree1.end());
  auto linear_part = basis_of(Ideal(ring_, std::move(gens)));
  for (const auto& g : report.lifted->basis()) {
    if (!ideal_member(g, *linear_part)) {
      report.nonlinear_element = g;
      break;
    }
  }
  report.linear_generated = !report.nonlinear_element.has_value();
  if (report.linear_generated) {
    report.variables = variable_set(report.degree1);
    report.variable_generated = report.variables.has_value();
  }
  return report;
}

ResidueColonReport HibiRing::colon(const ResidueIdeal& j, const Polynomial& f) const {
  if (!f.is_linear_form()) throw NotLinear(f.to_string());
  return analyse(colon_element(*j.basis, f));
}

ResidueColonReport HibiRing::colon(const ResidueIdeal& j, const ResidueIdeal& i) const {
  Ideal result = Ideal::unit(ring_);
  for (const auto& g : i.linear_generators) {
    if (ideal_member(g, *j.basis)) continue;
    result = intersect(result, colon_element(*j.basis, g));
  }
  return analyse(std::move(result));
}

bool HibiRing::degree1_span_claim_check(PosetIdeal ideal, Element e) const {
  if (!lattice_.is_poset_ideal(ideal)) throw std::invalid_argument("not a poset ideal");
  auto maxima = lattice_.maximal_elements(ideal);
  if (std::find(maxima.begin(), maxima.end(), e) == maxima.end()) {
    throw std::invalid_argument("element is not maximal in the poset ideal");
  }
  ElementSet expected;
  for (Element a = 0; a < lattice_.size(); ++a) {
    if (!lattice_.leq(e, a)) expected.insert(a);
  }
  ResidueColonReport report = colon(residue_ideal(ideal.without(e)), variable(e));
  if (report.unit) return false;
  auto spanned = variable_set(report.degree1);
  return spanned.has_value() && *spanned == expected;
}

std::string HibiRing::format_variables(ElementSet s) const {
  std::vector<Polynomial> gens;
  for (Element a : lattice_variable_priority(lattice_)) {
    if (s.contains(a)) gens.push_back(variable(a));
  }
  return format_ideal(gens);
}

std::string HibiRing::format_ideal(const std::vector<Polynomial>& gens) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) os << ", ";
    os << gens[i].to_string();
  }
  if (gens.empty()) os << '0';
  os << ')';
  return os.str();
}

}  // namespace joinmeet
