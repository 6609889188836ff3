#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "joinmeet/polynomial.hpp"

namespace joinmeet {

class ZeroDivisorArgument : public std::invalid_argument {
 public:
  ZeroDivisorArgument() : std::invalid_argument("colon by the zero polynomial") {}
};

class NotHomogeneous : public std::invalid_argument {
 public:
  explicit NotHomogeneous(const std::string& poly)
      : std::invalid_argument("ideal is not homogeneous: " + poly) {}
};

/// Order in which S-pairs are processed. Both yield the same reduced basis.
enum class PairStrategy {
  kNormal,  ///< smallest lcm degree first
  kFifo,    ///< oldest pair first
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t product_criterion = 0;
  std::size_t chain_criterion = 0;
};

class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> basis, bool reduced)
      : ring_(std::move(ring)), basis_(std::move(basis)), reduced_(reduced) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& basis() const& { return basis_; }
  std::vector<Polynomial> basis() && { return std::move(basis_); }
  bool reduced() const { return reduced_; }
  bool is_zero_ideal() const { return basis_.empty(); }
  bool is_unit_ideal() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.basis_ == b.basis_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> basis_;
  bool reduced_;
};

/// An ideal given by generators. Equality is semantic: see ideal_equal().
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});

  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const& { return generators_; }
  std::vector<Polynomial> generators() && { return std::move(generators_); }
  bool is_homogeneous() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

/// Remainder of full division of `f` by `divisors`: no term of the result is
/// divisible by any leading monomial of the divisors.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger's algorithm with the product and chain criteria. The result is
/// a Gröbner basis but not yet reduced.
GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> generators,
                         PairStrategy strategy = PairStrategy::kNormal,
                         BuchbergerStats* stats = nullptr);
/// Minimal, interreduced, monic; sorted by decreasing leading monomial.
GroebnerBasis reduce_basis(const GroebnerBasis& g);
GroebnerBasis groebner_basis(const Ideal& ideal, PairStrategy strategy = PairStrategy::kNormal);

/// True iff every S-polynomial reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& g);

/// Exact quotient f / g; throws std::domain_error if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

bool ideal_member(const Polynomial& f, const Ideal& ideal);
bool ideal_member(const Polynomial& f, const GroebnerBasis& g);
bool ideal_equal(const Ideal& a, const Ideal& b);
bool ideal_contains(const Ideal& outer, const Ideal& inner);
Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// a ∩ b, by eliminating t from t·a + (1 − t)·b.
Ideal intersect(const Ideal& a, const Ideal& b);
/// {g : g·f ∈ ideal}. Throws ZeroDivisorArgument if f = 0.
Ideal colon_element(const Ideal& ideal, const Polynomial& f);
/// Same, with the ideal given by a Gröbner basis already at hand.
Ideal colon_element(const GroebnerBasis& ideal, const Polynomial& f);
/// ideal : by = ⋂ over generators g of `by` of ideal : g.
Ideal colon_ideal(const Ideal& ideal, const Ideal& by);

/// Basis of the degree-1 component of a homogeneous ideal, read off its
/// reduced Gröbner basis. Throws NotHomogeneous.
std::vector<Polynomial> degree1_part(const Ideal& ideal);
std::vector<Polynomial> degree1_part(const GroebnerBasis& reduced);
bool is_generated_by_linear_forms(const Ideal& ideal);

/// Thread-safe memo of reduced Gröbner bases keyed by canonical generator text.
class GroebnerCache {
 public:
  std::shared_ptr<const GroebnerBasis> get(const Ideal& ideal);
  std::size_t size() const;
  std::size_t hits() const;

 private:
  static std::string key(const Ideal& ideal);

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const GroebnerBasis>> entries_;
  std::size_t hits_ = 0;
};

}  // namespace joinmeet
