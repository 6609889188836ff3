#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "joinmeet/groebner.hpp"
#include "joinmeet/lattice.hpp"
#include "joinmeet/polynomial.hpp"

namespace joinmeet {

class NotLinear : public std::invalid_argument {
 public:
  explicit NotLinear(const std::string& poly)
      : std::invalid_argument("generator is not a linear form: " + poly) {}
};

/// The join-meet ideal I_L: one binomial ab - (a∨b)(a∧b) per incomparable pair.
struct JoinMeetIdeal {
  std::vector<std::pair<Element, Element>> pairs;
  std::vector<Polynomial> generators;
};

/// An ideal of H[L] = K[L]/I_L given by linear forms, represented by its lift
/// (I_L, generators) to K[L]. Identity is the reduced Gröbner basis of the lift.
struct ResidueIdeal {
  std::vector<Polynomial> linear_generators;
  Ideal lift;
  std::shared_ptr<const GroebnerBasis> basis;
  /// Reduced echelon basis of the degree-1 part of the lift.
  std::vector<Polynomial> degree1;
  /// Set when the degree-1 part is spanned by variables.
  std::optional<ElementSet> variables;

  std::size_t dimension() const { return degree1.size(); }
  bool same_as(const ResidueIdeal& other) const { return *basis == *other.basis; }
};

/// Outcome of a colon J : f (or J : I) computed in H[L] through lifts.
struct ResidueColonReport {
  /// Reduced Gröbner basis of ((I_L, J) : f) in K[L].
  std::shared_ptr<const GroebnerBasis> lifted;
  std::vector<Polynomial> degree1;
  bool unit = false;
  /// The lifted colon equals (I_L, degree-1 part).
  bool linear_generated = false;
  /// Linearly generated and the degree-1 part is spanned by variables.
  bool variable_generated = false;
  std::optional<ElementSet> variables;
  /// A basis element of the lifted colon outside (I_L, degree-1 part).
  std::optional<Polynomial> nonlinear_element;
};

/// K[L] together with I_L and cached Gröbner computations for lifts of
/// ideals of H[L]. Safe to share between threads.
class HibiRing {
 public:
  explicit HibiRing(Lattice lattice, CoefficientField field = CoefficientField::rational());

  const Lattice& lattice() const { return lattice_; }
  const RingPtr& ring() const { return ring_; }
  const JoinMeetIdeal& join_meet_ideal() const { return join_meet_; }
  const Ideal& join_meet_lift() const { return join_meet_lift_; }
  const GroebnerBasis& join_meet_basis() const { return *join_meet_basis_; }

  Polynomial variable(Element a) const { return Polynomial::variable(ring_, a); }
  Polynomial parse(const std::string& text) const { return parse_polynomial(ring_, text); }

  /// Throws NotLinear if some generator is not a linear form.
  ResidueIdeal residue_ideal(std::vector<Polynomial> linear_forms) const;
  ResidueIdeal residue_ideal(ElementSet variables) const;
  ResidueIdeal zero_ideal() const { return residue_ideal(ElementSet{}); }
  ResidueIdeal maximal_ideal() const { return residue_ideal(ElementSet::full(lattice_.size())); }

  /// (J) : f in H[L]. Throws NotLinear unless f is a linear form.
  ResidueColonReport colon(const ResidueIdeal& j, const Polynomial& f) const;
  /// (J) : (I) in H[L], the intersection of the colons by generators of I.
  ResidueColonReport colon(const ResidueIdeal& j, const ResidueIdeal& i) const;

  /// For a poset ideal I with maximal element e and J = I minus e: the degree-1
  /// part of ((I_L, J) : e) equals the span of {a : a ≱ e}.
  bool degree1_span_claim_check(PosetIdeal ideal, Element e) const;

  /// Reduced basis of an ideal of K[L], memoised.
  std::shared_ptr<const GroebnerBasis> basis_of(const Ideal& ideal) const;
  std::size_t cache_size() const { return cache_->size(); }

  std::string format_variables(ElementSet s) const;
  std::string format_ideal(const std::vector<Polynomial>& gens) const;

 private:
  ResidueColonReport analyse(Ideal lifted_colon) const;
  std::optional<ElementSet> variable_set(const std::vector<Polynomial>& degree1) const;

  Lattice lattice_;
  RingPtr ring_;
  JoinMeetIdeal join_meet_;
  Ideal join_meet_lift_;
  std::unique_ptr<GroebnerCache> cache_;
  std::shared_ptr<const GroebnerBasis> join_meet_basis_;
};

/// Variable priority for K[L]: top largest, bottom smallest, following the
/// lattice's linear extension.
std::vector<std::size_t> lattice_variable_priority(const Lattice& lattice);

}  // namespace joinmeet
