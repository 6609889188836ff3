#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "joinmeet/groebner.hpp"
#include "joinmeet/hibi.hpp"
#include "support.hpp"

using namespace joinmeet;

namespace {

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(P(r, s));
  return Ideal(r, std::move(g));
}

RingPtr xyz_ring() {
  return std::make_shared<const PolyRing>(std::vector<std::string>{"x", "y", "z"}, MonomialOrder::degrevlex({0, 1, 2}));
}

/// Reduced GB postconditions checked directly.
void check_reduced(const GroebnerBasis& g) {
  const auto& b = g.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(b[i].leading_coefficient() == 1);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : b[j].terms()) CHECK_FALSE(b[i].leading_monomial().divides(t.monomial));
    }
  }
  CHECK(satisfies_buchberger_criterion(g));
}

}  // namespace

TEST_CASE("normal form examples") {
  HibiRing h(lattices::pentagon());
  auto r = h.ring();
  std::vector<Polynomial> one{P(r, "x*z - e*f")};
  CHECK(normal_form(P(r, "x*z"), one) == P(r, "e*f"));
  for (const auto& g : h.join_meet_basis().basis()) CHECK(normal_form(g, h.join_meet_basis()).is_zero());
  // e(fx - fy) lies in I_L.
  CHECK(normal_form(P(r, "e*f*x - e*f*y"), h.join_meet_basis()).is_zero());
  CHECK(normal_form(P(r, "e") * P(r, "f*x - f*y"), h.join_meet_basis()).is_zero());
  CHECK(ideal_member(P(r, "e*f*x - e*f*y"), h.join_meet_lift()));
}

TEST_CASE("normal form leaves no divisible term and differs by an ideal element") {
  HibiRing h(lattices::diamond());
  auto r = h.ring();
  std::mt19937 rng(3);
  const auto& g = h.join_meet_basis();
  for (int i = 0; i < 200; ++i) {
    Polynomial f = support::random_homogeneous(r, 2 + i % 2, 4, rng);
    Polynomial nf = normal_form(f, g);
    for (const auto& t : nf.terms()) {
      for (const auto& b : g.basis()) CHECK_FALSE(b.leading_monomial().divides(t.monomial));
    }
    support::MacaulayOracle oracle(r, h.join_meet_ideal().generators);
    CHECK(oracle.member(f - nf));
  }
}

TEST_CASE("buchberger examples") {
  HibiRing h(lattices::pentagon());
  auto r = h.ring();
  GroebnerBasis gb = buchberger(r, {P(r, "x*z - e*f"), P(r, "y*z - e*f")});
  CHECK(satisfies_buchberger_criterion(gb));
  GroebnerBasis reduced = reduce_basis(gb);
  check_reduced(reduced);
  CHECK(ideal_member(P(r, "x*z - e*f"), reduced));
  CHECK(ideal_member(P(r, "y*z - e*f"), reduced));

  auto s = xyz_ring();
  CHECK(groebner_basis(I(s, {"x"})).basis() == std::vector<Polynomial>{P(s, "x")});
  CHECK(groebner_basis(Ideal(s)).is_zero_ideal());
  CHECK(groebner_basis(I(s, {"x", "1"})).is_unit_ideal());
}

TEST_CASE("ideal equality and membership") {
  auto s = xyz_ring();
  CHECK(ideal_equal(I(s, {"x", "y"}), I(s, {"y", "x"})));
  CHECK(ideal_equal(I(s, {"x", "y"}), I(s, {"x + y", "x - y"})));
  CHECK_FALSE(ideal_equal(I(s, {"x"}), I(s, {"x", "y"})));
  Ideal a = I(s, {"x^2 - y*z", "x*y"});
  CHECK(ideal_equal(a, a));
  CHECK(ideal_contains(I(s, {"x", "y"}), I(s, {"x*z", "y^2"})));
  CHECK(ideal_equal(ideal_sum(I(s, {"x"}), I(s, {"y"})), I(s, {"x", "y"})));

  // In the diamond, x*y is not in (I_L): the relations only identify it with e*f.
  HibiRing d(lattices::diamond());
  auto r = d.ring();
  CHECK_FALSE(ideal_member(P(r, "x*y"), d.join_meet_lift()));
  CHECK(ideal_member(P(r, "x*y - y*z"), d.join_meet_lift()));
}

TEST_CASE("intersection examples") {
  auto s = xyz_ring();
  CHECK(ideal_equal(intersect(I(s, {"x"}), I(s, {"y"})), I(s, {"x*y"})));
  Ideal a = I(s, {"x^2", "y*z"});
  CHECK(ideal_equal(intersect(a, Ideal::unit(s)), a));
  CHECK(ideal_equal(intersect(I(s, {"x"}), I(s, {"x", "y"})), I(s, {"x"})));
  CHECK(intersect(I(s, {"x"}), Ideal(s)).generators().empty());
}

TEST_CASE("intersection double inclusion") {
  std::mt19937 rng(29);
  for (auto l : {lattices::pentagon(), lattices::diamond(), lattices::boolean(2)}) {
    HibiRing h(l);
    auto r = h.ring();
    for (int i = 0; i < 15; ++i) {
      std::vector<Polynomial> ga = h.join_meet_ideal().generators;
      std::vector<Polynomial> gb{support::random_linear_form(r, rng), support::random_homogeneous(r, 2, 2, rng)};
      ga.push_back(support::random_linear_form(r, rng));
      Ideal a(r, ga);
      Ideal b(r, gb);
      Ideal both = intersect(a, b);
      for (const auto& g : groebner_basis(both).basis()) {
        CHECK(ideal_member(g, a));
        CHECK(ideal_member(g, b));
      }
      // Products of members are common members.
      for (int k = 0; k < 5; ++k) {
        Polynomial pa = ga[k % ga.size()] * support::random_homogeneous(r, 1, 2, rng);
        Polynomial pb = gb[k % gb.size()] * support::random_homogeneous(r, 1, 2, rng);
        CHECK(ideal_member(pa * pb, both));
      }
    }
  }
}

TEST_CASE("colon examples") {
  HibiRing p(lattices::pentagon());
  auto r = p.ring();
  Ideal lhs = colon_element(Ideal(r, [&] {
                              auto g = p.join_meet_ideal().generators;
                              g.push_back(P(r, "x"));
                              return g;
                            }()),
                            P(r, "y"));
  Ideal rhs(r, [&] {
    auto g = p.join_meet_ideal().generators;
    g.push_back(P(r, "z"));
    g.push_back(P(r, "x"));
    return g;
  }());
  CHECK(ideal_equal(lhs, rhs));

  HibiRing d(lattices::diamond());
  auto rd = d.ring();
  Ideal got = colon_element(d.join_meet_lift(), P(rd, "x"));
  Ideal want(rd, [&] {
    auto g = d.join_meet_ideal().generators;
    g.push_back(P(rd, "y - z"));
    return g;
  }());
  CHECK(ideal_equal(got, want));

  Ideal any = d.join_meet_lift();
  CHECK(ideal_equal(colon_element(any, Polynomial::constant(rd, 1)), any));
  CHECK_THROWS_AS(colon_element(any, Polynomial(rd)), ZeroDivisorArgument);
  CHECK(ideal_equal(colon_element(any, P(rd, "x*y - e*f")), Ideal::unit(rd)));
}

TEST_CASE("colon by an ideal is the intersection of element colons") {
  auto s = xyz_ring();
  Ideal a = I(s, {"x*y", "x*z"});
  Ideal by = I(s, {"y", "z"});
  CHECK(ideal_equal(colon_ideal(a, by), I(s, {"x"})));
}

TEST_CASE("colon contract on sampled probes") {
  std::mt19937 rng(41);
  std::size_t probes = 0;
  for (auto l : {lattices::pentagon(), lattices::diamond(), lattices::boolean(2), lattices::chain(3)}) {
    HibiRing h(l);
    auto r = h.ring();
    for (int i = 0; i < 6; ++i) {
      auto gens = h.join_meet_ideal().generators;
      gens.push_back(Polynomial::variable(r, i % l.size()));
      Ideal base(r, gens);
      Polynomial f = support::random_linear_form(r, rng);
      Ideal colon = colon_element(base, f);
      // I ⊆ I:f and f·(I:f) ⊆ I.
      CHECK(ideal_contains(colon, base));
      for (const auto& g : groebner_basis(colon).basis()) CHECK(ideal_member(g * f, base));
      for (int k = 0; k < 30; ++k, ++probes) {
        Polynomial g = support::random_homogeneous(r, 1 + k % 2, 3, rng);
        CHECK(ideal_member(g, colon) == ideal_member(g * f, base));
      }
    }
  }
  CHECK(probes >= 500);
}

TEST_CASE("degree-1 part") {
  auto s = xyz_ring();
  auto part = degree1_part(I(s, {"x", "y - z", "x*y"}));
  CHECK(part.size() == 2);
  CHECK(ideal_equal(Ideal(s, part), I(s, {"x", "y - z"})));
  CHECK(is_generated_by_linear_forms(I(s, {"x", "y"})));
  CHECK_FALSE(is_generated_by_linear_forms(I(s, {"x", "y*z"})));
  CHECK_THROWS_AS(degree1_part(I(s, {"x + y*z"})), NotHomogeneous);

  // (I_L) : e in the pentagon has no linear part and is not generated by it.
  HibiRing p(lattices::pentagon());
  auto r = p.ring();
  Ideal colon = colon_element(p.join_meet_lift(), P(r, "e"));
  CHECK(degree1_part(colon).empty());
  CHECK_FALSE(ideal_equal(colon, p.join_meet_lift()));
}

TEST_CASE("reduced bases are unique across pair strategies") {
  std::mt19937 rng(5);
  for (const auto& [name, l] : support::named_corpus()) {
    CAPTURE(name);
    if (l.size() > 8) continue;
    HibiRing h(l);
    auto r = h.ring();
    for (int i = 0; i < 4; ++i) {
      auto gens = h.join_meet_ideal().generators;
      gens.push_back(support::random_linear_form(r, rng));
      if (i % 2) gens.push_back(support::random_homogeneous(r, 2, 3, rng));
      Ideal ideal(r, gens);
      GroebnerBasis normal = groebner_basis(ideal, PairStrategy::kNormal);
      GroebnerBasis fifo = groebner_basis(ideal, PairStrategy::kFifo);
      CHECK(normal == fifo);
      check_reduced(normal);
      // Reversing the generator list changes the run, not the answer.
      std::reverse(gens.begin(), gens.end());
      CHECK(groebner_basis(Ideal(r, gens)) == normal);
    }
  }
}

TEST_CASE("membership agrees with the Macaulay matrix oracle") {
  std::mt19937 rng(23);
  for (const auto& l : support::all_lattices_up_to(5)) {
    HibiRing h(l);
    auto r = h.ring();
    auto gens = h.join_meet_ideal().generators;
    gens.push_back(Polynomial::variable(r, rng() % l.size()));
    Ideal ideal(r, gens);
    auto gb = groebner_basis(ideal);
    support::MacaulayOracle oracle(r, gens);
    for (std::uint32_t d = 1; d <= 3; ++d) {
      for (auto& e : support::monomials_of_degree(l.size(), d)) {
        Polynomial m = Polynomial::monomial(r, 1, Monomial(e));
        CHECK(ideal_member(m, gb) == oracle.member(m));
      }
      for (int k = 0; k < 20; ++k) {
        Polynomial f = support::random_homogeneous(r, d, 3, rng);
        CHECK(ideal_member(f, gb) == oracle.member(f));
      }
    }
  }
}

TEST_CASE("cache returns the same basis for permuted generators") {
  HibiRing h(lattices::diamond());
  auto r = h.ring();
  GroebnerCache cache;
  auto a = cache.get(Ideal(r, {P(r, "x"), P(r, "2y")}));
  auto b = cache.get(Ideal(r, {P(r, "y"), P(r, "x")}));
  CHECK(*a == *b);
  CHECK(cache.hits() == 1);
  CHECK(cache.size() == 1);
}

TEST_CASE("exact division") {
  auto s = xyz_ring();
  CHECK(divide_exact(P(s, "x^2*y - x*y*z"), P(s, "x - z")) == P(s, "x*y"));
  CHECK_THROWS(divide_exact(P(s, "x^2 + 1"), P(s, "x")));
}
