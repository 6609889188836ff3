#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace joinmeet {

using Element = std::size_t;

/// Subset of the elements of a lattice with at most 64 elements, stored as a bit mask.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t mask) : mask_(mask) {}

  static ElementSet full(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static ElementSet single(Element a) { return ElementSet(std::uint64_t{1} << a); }

  bool contains(Element a) const { return (mask_ >> a) & 1U; }
  void insert(Element a) { mask_ |= std::uint64_t{1} << a; }
  void erase(Element a) { mask_ &= ~(std::uint64_t{1} << a); }
  bool empty() const { return mask_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  std::uint64_t mask() const { return mask_; }

  bool is_subset_of(ElementSet other) const { return (mask_ & ~other.mask_) == 0; }
  ElementSet without(Element a) const { return ElementSet(mask_ & ~(std::uint64_t{1} << a)); }
  ElementSet with(Element a) const { return ElementSet(mask_ | (std::uint64_t{1} << a)); }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(static_cast<Element>(std::countr_zero(m)));
    }
    return out;
  }

  friend bool operator==(ElementSet, ElementSet) = default;
  friend auto operator<=>(ElementSet, ElementSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when some pair has no least upper bound or no greatest lower bound.
class NotALattice : public LatticeError {
 public:
  NotALattice(std::string a, std::string b, const std::string& what)
      : LatticeError("not a lattice: " + what + " of (" + a + ", " + b + ")"),
        pair_(std::move(a), std::move(b)) {}
  const std::pair<std::string, std::string>& pair() const { return pair_; }

 private:
  std::pair<std::string, std::string> pair_;
};

class CyclicCovers : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

/// Five-element sublattice shaped like the pentagon N5 or the diamond M3.
///
/// Roles follow the usual drawing: `bottom` < `middle` < `top`. For a pentagon
/// `middle[1] < middle[0]` and `middle[2]` is the short side; for a diamond the
/// three middle elements are pairwise incomparable.
struct Sublattice {
  enum class Shape { kPentagon, kDiamond };
  Shape shape;
  Element bottom;
  Element top;
  std::vector<Element> middle;

  ElementSet members() const;
};

struct Rank2Diamond {
  std::optional<Sublattice> diamond;
  /// All elements of the open interval (bottom, top) of the returned diamond.
  std::vector<Element> interval;
  /// Why no diamond was returned.
  std::string reason;
};

using PosetIdeal = ElementSet;

/// Finite lattice with precomputed order, join and meet tables.
///
/// Elements are identified by index in input order; labels are for display
/// only. Immutable after construction.
class Lattice {
 public:
  /// Builds a lattice from labels and (a, b) pairs meaning a < b. The pairs
  /// need not be a minimal cover relation; the Hasse diagram is recomputed.
  static Lattice from_covers(const std::vector<std::string>& labels,
                             const std::vector<std::pair<std::string, std::string>>& covers);
  /// Builds a lattice from a reflexive partial order table `leq[a][b]`.
  static Lattice from_order(const std::vector<std::string>& labels,
                            const std::vector<std::vector<bool>>& leq);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element a) const { return labels_[a]; }
  std::optional<Element> find(const std::string& label) const;
  Element index_of(const std::string& label) const;

  bool leq(Element a, Element b) const { return leq_[a * size() + b]; }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  /// Hasse diagram as (lower, upper) pairs.
  const std::vector<std::pair<Element, Element>>& covers() const { return covers_; }
  bool covered_by(Element a, Element b) const;

  /// Topological order of the covers with ties broken by input order; bottom first.
  const std::vector<Element>& linear_extension() const { return linear_extension_; }
  std::size_t position(Element a) const { return position_[a]; }

  std::vector<std::pair<Element, Element>> incomparable_pairs() const;

  bool is_modular() const;
  bool is_distributive() const;
  std::optional<Sublattice> find_pentagon() const;
  std::optional<Sublattice> find_diamond() const;
  /// Every N5 (resp. M3) sublattice, each listed once.
  std::vector<Sublattice> pentagons() const;
  std::vector<Sublattice> diamonds() const;

  /// Length of the longest chain from bottom to `a`. Defined on every lattice;
  /// only meaningful as a rank when is_pure() holds.
  std::size_t rank(Element a) const { return rank_[a]; }
  bool is_pure() const { return pure_; }

  /// Diamond sublattice whose top and bottom differ in rank by exactly 2.
  /// Only searched for modular non-distributive lattices.
  Rank2Diamond find_rank2_diamond() const;

  bool is_poset_ideal(ElementSet s) const;
  bool is_sublattice(ElementSet s) const;
  /// All downward-closed subsets, including the empty set and the whole
  /// lattice, sorted by size and then by linear-extension positions.
  std::vector<PosetIdeal> poset_ideals() const;
  std::vector<Element> maximal_elements(ElementSet s) const;
  /// Elements of `s` as labels, in linear-extension order.
  std::vector<std::string> labels_of(ElementSet s) const;
  std::string format(ElementSet s) const;

 private:
  Lattice() = default;
  void derive_tables();
  template <typename Visit>
  void visit_pentagons(Visit&& visit) const;
  template <typename Visit>
  void visit_diamonds(Visit&& visit) const;

  std::vector<std::string> labels_;
  std::vector<bool> leq_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  std::vector<std::pair<Element, Element>> covers_;
  std::vector<Element> linear_extension_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> rank_;
  Element bottom_ = 0;
  Element top_ = 0;
  bool pure_ = true;
};

namespace lattices {

/// Chain c0 < c1 < ... < c(n-1).
Lattice chain(std::size_t n);
/// Subsets of an n-set. The empty set is "o"; other subsets are spelled by
/// their letters, e.g. "ab".
Lattice boolean(std::size_t n);
/// Divisors of n under divisibility, labelled d1, d2, ..., dn.
Lattice divisor_lattice(std::size_t n);
/// N5 with labels e < y < x < f and e < z < f.
Lattice pentagon();
/// M3 with labels e < x, y, z < f.
Lattice diamond();

}  // namespace lattices

}  // namespace joinmeet
