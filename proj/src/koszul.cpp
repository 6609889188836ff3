#include "joinmeet/koszul.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace joinmeet {

bool FiltrationSpec::combinatorial() const {
  return std::all_of(members.begin(), members.end(), [](const ResidueIdeal& m) {
    return std::all_of(m.linear_generators.begin(), m.linear_generators.end(),
                       [](const Polynomial& g) { return g.size() == 1 && g.leading_coefficient() == 1; });
  });
}

FiltrationSpec make_filtration(const HibiRing& ring,
                               const std::vector<std::vector<Polynomial>>& generators) {
  FiltrationSpec spec;
  for (const auto& gens : generators) spec.members.push_back(ring.residue_ideal(gens));
  return spec;
}

FiltrationSpec make_filtration(const HibiRing& ring, const std::vector<ElementSet>& variable_sets) {
  FiltrationSpec spec;
  for (ElementSet s : variable_sets) spec.members.push_back(ring.residue_ideal(s));
  return spec;
}

namespace {

bool contains_span(const ResidueIdeal& outer, const ResidueIdeal& inner) {
  return std::all_of(inner.degree1.begin(), inner.degree1.end(),
                     [&](const Polynomial& g) { return ideal_member(g, *outer.basis); });
}

std::optional<std::size_t> find_member(const FiltrationSpec& family, const GroebnerBasis& basis) {
  for (std::size_t k = 0; k < family.members.size(); ++k) {
    if (*family.members[k].basis == basis) return k;
  }
  return std::nullopt;
}

/// J is a codimension-one subspace of I in degree 1.
bool is_cyclic_step(const ResidueIdeal& i, const ResidueIdeal& j) {
  return j.dimension() + 1 == i.dimension() && contains_span(i, j);
}

Polynomial cyclic_generator(const ResidueIdeal& i, const ResidueIdeal& j) {
  for (const auto& g : i.linear_generators) {
    if (!ideal_member(g, *j.basis)) return g;
  }
  return i.degree1.front();
}

}  // namespace

VerificationReport verify_filtration(const HibiRing& ring, const FiltrationSpec& family) {
  VerificationReport report;
  const auto& members = family.members;
  const std::size_t n = ring.lattice().size();

  report.linear_forms = std::all_of(members.begin(), members.end(), [](const ResidueIdeal& m) {
    return std::all_of(m.linear_generators.begin(), m.linear_generators.end(),
                       [](const Polynomial& g) { return g.is_linear_form(); });
  });
  if (!report.linear_forms) report.messages.push_back("a member has a generator that is not a linear form");

  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i].same_as(members[j])) report.duplicates.emplace_back(i, j);
    }
  }
  if (!report.duplicates.empty()) report.messages.push_back("family lists the same ideal more than once");

  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!report.zero_member && members[i].dimension() == 0) report.zero_member = i;
    if (!report.maximal_member && members[i].dimension() == n) report.maximal_member = i;
  }
  report.has_zero_and_maximal = report.zero_member && report.maximal_member;
  if (!report.zero_member) report.messages.push_back("the zero ideal is missing");
  if (!report.maximal_member) report.messages.push_back("the maximal graded ideal is missing");

  report.colon_condition = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const ResidueIdeal& outer = members[i];
    if (outer.dimension() == 0) continue;
    MemberFailure failure{i, {}};
    bool witnessed = false;
    for (std::size_t j = 0; j < members.size() && !witnessed; ++j) {
      const ResidueIdeal& inner = members[j];
      if (!is_cyclic_step(outer, inner)) continue;
      ResidueColonReport colon = ring.colon(inner, outer);
      if (colon.unit) {
        failure.candidates.push_back({j, "colon is the unit ideal", std::nullopt, {}});
        continue;
      }
      if (!colon.linear_generated) {
        failure.candidates.push_back(
            {j, "colon is not generated by linear forms", colon.nonlinear_element, colon.degree1});
        continue;
      }
      if (auto k = find_member(family, *colon.lifted)) {
        report.witnesses.push_back({i, j, cyclic_generator(outer, inner), *k});
        witnessed = true;
      } else {
        failure.candidates.push_back({j, "colon is not a member of the family", std::nullopt, colon.degree1});
      }
    }
    if (!witnessed) {
      if (failure.candidates.empty()) {
        failure.candidates.push_back({i, "no member J inside I with I/J cyclic", std::nullopt, {}});
      }
      report.failures.push_back(std::move(failure));
      report.colon_condition = false;
    }
  }
  if (!report.colon_condition) report.messages.push_back("some nonzero member has no colon witness");

  report.passed = report.linear_forms && report.duplicates.empty() && report.has_zero_and_maximal &&
                  report.colon_condition;
  return report;
}

bool replay(const HibiRing& ring, const FiltrationSpec& family, const VerificationReport& report) {
  if (!report.passed || !report.zero_member || !report.maximal_member) return false;
  const auto& members = family.members;
  if (members.at(*report.zero_member).dimension() != 0) return false;
  if (members.at(*report.maximal_member).dimension() != ring.lattice().size()) return false;
  std::vector<bool> covered(members.size(), false);
  for (const auto& w : report.witnesses) {
    const ResidueIdeal& outer = members.at(w.member);
    const ResidueIdeal& inner = members.at(w.sub);
    if (!is_cyclic_step(outer, inner)) return false;
    if (ideal_member(w.generator, *inner.basis) || !ideal_member(w.generator, *outer.basis)) return false;
    ResidueColonReport colon = ring.colon(inner, outer);
    if (colon.unit || !(*colon.lifted == *members.at(w.colon).basis)) return false;
    covered[w.member] = true;
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].dimension() > 0 && !covered[i]) return false;
  }
  return true;
}

FiltrationSpec poset_ideal_filtration(const HibiRing& ring) {
  return make_filtration(ring, ring.lattice().poset_ideals());
}

SearchResult search_combinatorial(const HibiRing& ring, const SearchOptions& options) {
  const Lattice& lattice = ring.lattice();
  const std::size_t n = lattice.size();
  if (n > options.cap || n > 30) throw CapExceeded(n, std::min<std::size_t>(options.cap, 30));

  const std::size_t total = std::size_t{1} << n;
  constexpr std::uint64_t kNotAdmissible = ~std::uint64_t{0};
  // targets[S * n + x] = T(S, x), or kNotAdmissible.
  std::vector<std::uint64_t> targets(total * n, kNotAdmissible);
  std::vector<std::optional<ResidueIdeal>> ideals(total);

  unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  auto parallel_for = [&](std::size_t count, auto&& body) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          body(k);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    };
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
  };

  parallel_for(total, [&](std::size_t s) { ideals[s] = ring.residue_ideal(ElementSet(s)); });
  parallel_for(total, [&](std::size_t s) {
    ElementSet set(s);
    for (Element x : set.elements()) {
      ResidueColonReport colon = ring.colon(*ideals[set.without(x).mask()], ring.variable(x));
      if (colon.variable_generated) targets[s * n + x] = colon.variables->mask();
    }
  });

  SearchResult result;
  result.subsets_examined = total;
  for (std::size_t s = 0; s < total; ++s) result.colon_computations += ElementSet(s).size();
  result.admissible_moves = static_cast<std::size_t>(
      std::count_if(targets.begin(), targets.end(), [](std::uint64_t t) { return t != kNotAdmissible; }));

  // Greatest fixpoint: drop subsets with no surviving move.
  std::vector<bool> alive(total, true);
  auto has_move = [&](std::size_t s) -> std::optional<Element> {
    ElementSet set(s);
    for (Element x : lattice.linear_extension()) {
      if (!set.contains(x)) continue;
      std::uint64_t t = targets[s * n + x];
      if (t != kNotAdmissible && alive[set.without(x).mask()] && alive[t]) return x;
    }
    return std::nullopt;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    ++result.deletion_rounds;
    for (std::size_t s = 1; s < total; ++s) {
      if (alive[s] && !has_move(s)) {
        alive[s] = false;
        changed = true;
      }
    }
  }
  result.survivors = static_cast<std::size_t>(std::count(alive.begin(), alive.end(), true));

  const std::size_t full = total - 1;
  if (!alive[full]) return result;

  std::vector<bool> in_closure(total, false);
  std::vector<std::size_t> stack{full, 0};
  in_closure[full] = in_closure[0] = true;
  while (!stack.empty()) {
    std::size_t s = stack.back();
    stack.pop_back();
    if (s == 0) continue;
    Element x = *has_move(s);
    for (std::size_t next : {static_cast<std::size_t>(ElementSet(s).without(x).mask()),
                             static_cast<std::size_t>(targets[s * n + x])}) {
      if (!in_closure[next]) {
        in_closure[next] = true;
        stack.push_back(next);
      }
    }
  }
  for (std::size_t s = 0; s < total; ++s) {
    if (in_closure[s]) result.family.push_back(ElementSet(s));
  }
  auto key = [&](ElementSet s) {
    std::vector<std::size_t> pos;
    for (Element a : s.elements()) pos.push_back(lattice.position(a));
    std::sort(pos.begin(), pos.end());
    return std::pair{s.size(), pos};
  };
  std::sort(result.family.begin(), result.family.end(),
            [&](ElementSet a, ElementSet b) { return key(a) < key(b); });

  FiltrationSpec spec;
  for (ElementSet s : result.family) spec.members.push_back(*ideals[s.mask()]);
  result.verification = verify_filtration(ring, spec);
  if (!result.verification->passed) {
    throw std::logic_error("search produced a family that fails verification");
  }
  result.filtration = std::move(spec);
  return result;
}

ClaimReport claim_check(const HibiRing& ring, PosetIdeal ideal, Element e) {
  const Lattice& lattice = ring.lattice();
  ClaimReport report;
  auto maxima = lattice.maximal_elements(ideal);
  report.element_is_maximal = lattice.is_poset_ideal(ideal) &&
                              std::find(maxima.begin(), maxima.end(), e) != maxima.end();
  for (const auto& s : lattice.pentagons()) {
    if (s.bottom == e) report.element_is_obstruction_bottom = true;
  }
  for (const auto& s : lattice.diamonds()) {
    if (s.bottom == e) report.element_is_obstruction_bottom = true;
  }
  report.colon = ring.colon(ring.residue_ideal(ideal.without(e)), ring.variable(e));
  report.linear_generated = report.colon.linear_generated;
  report.nonlinear_element = report.colon.nonlinear_element;
  report.span_matches = report.element_is_maximal && ring.degree1_span_claim_check(ideal, e);
  return report;
}

}  // namespace joinmeet
