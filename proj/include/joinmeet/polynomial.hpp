#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace joinmeet {

using Rational = mpq_class;

/// Coefficient arithmetic: exact rationals, or integers modulo a prime.
///
/// Prime mode exists only as a fast cross-check; results computed in it are
/// never used as verdicts.
class CoefficientField {
 public:
  static constexpr unsigned long kDefaultPrime = 32003;

  static CoefficientField rational() { return CoefficientField(0); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static CoefficientField prime(unsigned long p = kDefaultPrime);

  bool is_rational() const { return prime_ == 0; }
  unsigned long characteristic() const { return prime_; }

  Rational normalize(const Rational& c) const;
  Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
  Rational sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
  Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
  Rational neg(const Rational& a) const { return normalize(-a); }
  Rational inverse(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inverse(b)); }

  friend bool operator==(const CoefficientField&, const CoefficientField&) = default;

 private:
  explicit CoefficientField(unsigned long p) : prime_(p) {}
  unsigned long prime_;
};

/// Exponent vector over the ring's variables (ring index order).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t num_variables() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents_ == b.exponents_; }

 private:
  std::vector<std::uint32_t> exponents_;
  std::uint32_t degree_ = 0;
};

/// Term order on monomials.
///
/// `priority` lists variable indices from largest to smallest. A block
/// elimination order compares the first `block` variables of the priority list
/// by degrevlex and breaks ties by degrevlex on the rest, so any monomial
/// involving the block beats every monomial free of it.
class MonomialOrder {
 public:
  enum class Kind { kDegRevLex, kLex, kBlockElimination };

  static MonomialOrder degrevlex(std::vector<std::size_t> priority);
  static MonomialOrder lex(std::vector<std::size_t> priority);
  static MonomialOrder block_elimination(std::size_t block, std::vector<std::size_t> priority);
  /// Variables ordered by index: x0 > x1 > ... > x(n-1).
  static std::vector<std::size_t> identity_priority(std::size_t nvars);

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  bool is_degree_compatible() const { return kind_ != Kind::kLex; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

 private:
  MonomialOrder(Kind kind, std::size_t block, std::vector<std::size_t> priority);
  std::strong_ordering degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                       std::size_t hi) const;

  Kind kind_;
  std::size_t block_;
  std::vector<std::size_t> priority_;
};

/// K[x_0, ..., x_(n-1)] with named variables, a term order and a coefficient field.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, MonomialOrder order,
           CoefficientField field = CoefficientField::rational());

  std::size_t num_variables() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> find(std::string_view name) const;
  const MonomialOrder& order() const { return order_; }
  const CoefficientField& field() const { return field_; }

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
  CoefficientField field_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Rational coefficient;
  Monomial monomial;

  friend bool operator==(const Term& a, const Term& b) {
    return a.coefficient == b.coefficient && a.monomial == b.monomial;
  }
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial in canonical form: nonzero terms, strictly decreasing in the
/// ring's term order.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Rational& c, Monomial m);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const& { return terms_; }
  std::vector<Term> terms() && { return std::move(terms_); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.size() == 1 && terms_[0].monomial.is_one(); }

  /// Precondition: nonzero.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coefficient() const { return leading_term().coefficient; }

  std::uint32_t total_degree() const;
  bool is_homogeneous() const;
  /// True iff nonzero and every term has total degree 1.
  bool is_linear_form() const;
  Polynomial degree_part(std::uint32_t d) const;
  /// Coefficient of `m`, zero when absent.
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial scale(const Rational& c) const;
  Polynomial multiply(const Rational& c, const Monomial& m) const;
  /// this - c * m * g, computed in one merge pass.
  Polynomial sub_multiple(const Rational& c, const Monomial& m, const Polynomial& g) const;
  /// Scaled so that the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;
  /// All terms but the leading one.
  Polynomial tail() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  void check_same_ring(const Polynomial& g) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);
Polynomial scale(const Rational& c, const Polynomial& f);

/// Parses `x*z - e*f`, `2 x^2 - 3/2 y`, `xz - ef`. Variable names are matched
/// greedily by longest label, so juxtaposed multi-letter labels resolve to the
/// longest known name; use `*` to separate when that is not intended.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace joinmeet
