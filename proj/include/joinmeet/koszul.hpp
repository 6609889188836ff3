#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "joinmeet/hibi.hpp"

namespace joinmeet {

/// A family of ideals of H[L], each given by linear-form generators.
struct FiltrationSpec {
  std::vector<ResidueIdeal> members;

  /// Every member is generated by variables.
  bool combinatorial() const;
};

FiltrationSpec make_filtration(const HibiRing& ring,
                               const std::vector<std::vector<Polynomial>>& generators);
FiltrationSpec make_filtration(const HibiRing& ring, const std::vector<ElementSet>& variable_sets);

/// Certificate for one nonzero member I: J ⊂ I with I = J + (generator) and
/// J : I equal to member `colon`.
struct FiltrationWitness {
  std::size_t member;
  std::size_t sub;
  Polynomial generator;
  std::size_t colon;
};

/// Why a candidate J failed for a member I.
struct CandidateFailure {
  std::size_t sub;
  std::string reason;
  std::optional<Polynomial> nonlinear_element;
  std::vector<Polynomial> colon_degree1;
};

struct MemberFailure {
  std::size_t member;
  std::vector<CandidateFailure> candidates;
};

struct VerificationReport {
  bool passed = false;
  bool linear_forms = false;     ///< every member generated by linear forms
  bool has_zero_and_maximal = false;
  bool colon_condition = false;  ///< every nonzero member has a witness
  std::vector<std::pair<std::size_t, std::size_t>> duplicates;
  std::optional<std::size_t> zero_member;
  std::optional<std::size_t> maximal_member;
  std::vector<FiltrationWitness> witnesses;
  std::vector<MemberFailure> failures;
  std::vector<std::string> messages;
};

/// Checks the three Koszul filtration conditions: linear generation, presence
/// of 0 and the maximal ideal, and for each nonzero I a J ⊂ I with I/J cyclic
/// and J : I in the family.
VerificationReport verify_filtration(const HibiRing& ring, const FiltrationSpec& family);

/// Recomputes every colon in a passing report; true iff all of them match.
bool replay(const HibiRing& ring, const FiltrationSpec& family, const VerificationReport& report);

/// One member per poset ideal of the lattice, generated by its variables.
FiltrationSpec poset_ideal_filtration(const HibiRing& ring);

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t size, std::size_t cap)
      : std::runtime_error("lattice has " + std::to_string(size) +
                           " elements, above the search cap of " + std::to_string(cap)) {}
};

struct SearchOptions {
  std::size_t cap = 12;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct SearchResult {
  /// Witness closure of the surviving family, when the maximal ideal survives.
  std::optional<FiltrationSpec> filtration;
  std::vector<ElementSet> family;
  std::optional<VerificationReport> verification;
  std::size_t subsets_examined = 0;
  std::size_t colon_computations = 0;
  std::size_t admissible_moves = 0;
  std::size_t deletion_rounds = 0;
  std::size_t survivors = 0;
};

/// Exhaustive search for a Koszul filtration whose members are generated by
/// variables. A move (S, x) is admissible when (S - x) : x is generated by the
/// variables T(S, x); subsets are deleted until every survivor has a move with
/// S - x and T(S, x) surviving. Absence of a result is a proof that no such
/// filtration exists.
SearchResult search_combinatorial(const HibiRing& ring, const SearchOptions& options = {});

struct ClaimReport {
  bool element_is_maximal = false;
  /// e is the bottom of some pentagon or diamond sublattice.
  bool element_is_obstruction_bottom = false;
  bool linear_generated = false;
  std::optional<Polynomial> nonlinear_element;
  bool span_matches = false;
  ResidueColonReport colon;
};

/// Evaluates (J) : e for J = I - e, where e is maximal in the poset ideal I.
ClaimReport claim_check(const HibiRing& ring, PosetIdeal ideal, Element e);

}  // namespace joinmeet
