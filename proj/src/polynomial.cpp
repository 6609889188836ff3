#include "joinmeet/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace joinmeet {

// ---------------------------------------------------------------------------
// CoefficientField

CoefficientField CoefficientField::prime(unsigned long p) {
  if (p < 2 || p >= (1UL << 31)) throw std::invalid_argument("prime must lie in [2, 2^31)");
  for (unsigned long d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  return CoefficientField(p);
}

Rational CoefficientField::normalize(const Rational& c) const {
  if (prime_ == 0) {
    Rational out(c);
    out.canonicalize();
    return out;
  }
  Rational q(c);
  q.canonicalize();
  mpz_class p(prime_);
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  if (q.get_den() == 1) return Rational(num);
  mpz_class den = q.get_den() % p;
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw std::domain_error("denominator vanishes modulo " + std::to_string(prime_));
  }
  mpz_class r = (num * inv) % p;
  return Rational(r);
}

Rational CoefficientField::inverse(const Rational& a) const {
  if (a == 0) throw std::domain_error("division by zero coefficient");
  if (prime_ == 0) return 1 / a;
  mpz_class p(prime_);
  mpz_class v = normalize(a).get_num();
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return Rational(inv);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  std::vector<std::uint32_t> e(nvars, 0);
  e.at(index) = 1;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] += other.exponents_[i];
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] -= divisor.exponents_[i];
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<std::uint32_t> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exponents_[i], other.exponents_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// MonomialOrder

MonomialOrder::MonomialOrder(Kind kind, std::size_t block, std::vector<std::size_t> priority)
    : kind_(kind), block_(block), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw std::invalid_argument("variable priority is not a permutation");
  }
  if (block_ > priority_.size()) throw std::invalid_argument("elimination block too large");
}

MonomialOrder MonomialOrder::degrevlex(std::vector<std::size_t> priority) {
  return MonomialOrder(Kind::kDegRevLex, 0, std::move(priority));
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> priority) {
  return MonomialOrder(Kind::kLex, 0, std::move(priority));
}

MonomialOrder MonomialOrder::block_elimination(std::size_t block,
                                               std::vector<std::size_t> priority) {
  return MonomialOrder(Kind::kBlockElimination, block, std::move(priority));
}

std::vector<std::size_t> MonomialOrder::identity_priority(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

std::strong_ordering MonomialOrder::degrevlex_range(const Monomial& a, const Monomial& b,
                                                    std::size_t lo, std::size_t hi) const {
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (std::size_t k = lo; k < hi; ++k) {
    da += a[priority_[k]];
    db += b[priority_[k]];
  }
  if (da != db) return da <=> db;
  for (std::size_t k = hi; k-- > lo;) {
    std::uint32_t ea = a[priority_[k]];
    std::uint32_t eb = b[priority_[k]];
    if (ea != eb) return eb <=> ea;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = priority_.size();
  switch (kind_) {
    case Kind::kDegRevLex:
      return degrevlex_range(a, b, 0, n);
    case Kind::kLex:
      for (std::size_t k = 0; k < n; ++k) {
        std::uint32_t ea = a[priority_[k]];
        std::uint32_t eb = b[priority_[k]];
        if (ea != eb) return ea <=> eb;
      }
      return std::strong_ordering::equal;
    case Kind::kBlockElimination: {
      auto c = degrevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return degrevlex_range(a, b, block_, n);
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// PolyRing

PolyRing::PolyRing(std::vector<std::string> names, MonomialOrder order, CoefficientField field)
    : names_(std::move(names)), order_(std::move(order)), field_(field) {
  if (order_.priority().size() != names_.size()) {
    throw std::invalid_argument("monomial order does not match variable count");
  }
}

std::optional<std::size_t> PolyRing::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  std::size_t n = ring->num_variables();
  return monomial(std::move(ring), c, Monomial(n));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  std::size_t n = ring->num_variables();
  return monomial(std::move(ring), 1, Monomial::variable(n, index));
}

Polynomial Polynomial::monomial(RingPtr ring, const Rational& c, Monomial m) {
  Polynomial p(std::move(ring));
  Rational v = p.ring_->field().normalize(c);
  if (v != 0) p.terms_.push_back(Term{v, std::move(m)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const auto& order = p.ring_->order();
  const auto& field = p.ring_->field();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  for (auto& t : terms) {
    if (t.monomial.num_variables() != p.ring_->num_variables()) {
      throw std::invalid_argument("monomial has the wrong number of variables");
    }
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient = field.add(p.terms_.back().coefficient, t.coefficient);
      if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
      continue;
    }
    Rational c = field.normalize(t.coefficient);
    if (c != 0) p.terms_.push_back(Term{std::move(c), std::move(t.monomial)});
  }
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.monomial.degree() == terms_.front().monomial.degree();
  });
}

bool Polynomial::is_linear_form() const {
  return !terms_.empty() &&
         std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.monomial.degree() == 1; });
}

Polynomial Polynomial::degree_part(std::uint32_t d) const {
  Polynomial p(ring_);
  for (const auto& t : terms_) {
    if (t.monomial.degree() == d) p.terms_.push_back(t);
  }
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coefficient;
  }
  return 0;
}

void Polynomial::check_same_ring(const Polynomial& g) const {
  if (ring_ != g.ring_ && ring_->num_variables() != g.ring_->num_variables()) {
    throw std::invalid_argument("polynomials belong to different rings");
  }
}

Polynomial Polynomial::operator-() const { return scale(-1); }

Polynomial Polynomial::operator+(const Polynomial& g) const {
  return sub_multiple(-1, Monomial(ring_->num_variables()), g);
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  return sub_multiple(1, Monomial(ring_->num_variables()), g);
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  check_same_ring(g);
  Polynomial acc(ring_);
  for (const auto& t : terms_) acc = acc.sub_multiple(ring_->field().neg(t.coefficient), t.monomial, g);
  return acc;
}

Polynomial Polynomial::scale(const Rational& c) const {
  const auto& field = ring_->field();
  Polynomial p(ring_);
  Rational v = field.normalize(c);
  if (v == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{field.mul(t.coefficient, v), t.monomial});
  return p;
}

Polynomial Polynomial::multiply(const Rational& c, const Monomial& m) const {
  const auto& field = ring_->field();
  Polynomial p(ring_);
  Rational v = field.normalize(c);
  if (v == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{field.mul(t.coefficient, v), t.monomial * m});
  return p;
}

Polynomial Polynomial::sub_multiple(const Rational& c, const Monomial& m, const Polynomial& g) const {
  check_same_ring(g);
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  Polynomial out(ring_);
  if (c == 0 || g.is_zero()) {
    out.terms_ = terms_;
    return out;
  }
  out.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.terms_.push_back(terms_[i++]);
      continue;
    }
    Monomial gm = g.terms_[j].monomial * m;
    auto cmp = i < terms_.size() ? order.compare(terms_[i].monomial, gm) : std::strong_ordering::less;
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back(Term{field.neg(field.mul(c, g.terms_[j].coefficient)), std::move(gm)});
      ++j;
    } else {
      Rational v = field.sub(terms_[i].coefficient, field.mul(c, g.terms_[j].coefficient));
      if (v != 0) out.terms_.push_back(Term{std::move(v), std::move(gm)});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(ring_->field().inverse(leading_coefficient()));
}

Polynomial Polynomial::tail() const {
  Polynomial p(ring_);
  if (terms_.size() > 1) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    bool has_vars = !t.monomial.is_one();
    if (c != 1 || !has_vars) {
      os << c.get_str();
      if (has_vars) os << '*';
    }
    bool first_var = true;
    for (std::size_t v = 0; v < t.monomial.num_variables(); ++v) {
      std::uint32_t e = t.monomial[v];
      if (e == 0) continue;
      if (!first_var) os << '*';
      os << ring_->name(v);
      if (e > 1) os << '^' << e;
      first_var = false;
    }
    first = false;
  }
  return os.str();
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }
Polynomial scale(const Rational& c, const Polynomial& f) { return f.scale(c); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) throw error("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      Term t = parse_term();
      t.coefficient *= sign;
      terms.push_back(std::move(t));
      first = false;
      skip_space();
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term parse_term() {
    Rational coeff = 1;
    Monomial mono(ring_->num_variables());
    bool any = false;
    while (true) {
      skip_space();
      if (at_end() || peek() == '+' || peek() == '-') break;
      if (peek() == '*') {
        if (!any) throw error("unexpected '*'");
        ++pos_;
        skip_space();
        if (at_end()) throw error("dangling '*'");
      }
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_number();
      } else {
        std::size_t v = parse_variable();
        std::uint32_t e = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          e = static_cast<std::uint32_t>(parse_integer().get_ui());
        }
        std::vector<std::uint32_t> ex = mono.exponents();
        ex[v] += e;
        mono = Monomial(std::move(ex));
      }
      any = true;
    }
    if (!any) throw error("expected a term");
    return Term{coeff, std::move(mono)};
  }

  Rational parse_number() {
    mpz_class num = parse_integer();
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      mpz_class den = parse_integer();
      if (den == 0) throw error("zero denominator");
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  mpz_class parse_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw error("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::size_t parse_variable() {
    std::optional<std::size_t> best;
    std::size_t best_len = 0;
    for (std::size_t v = 0; v < ring_->num_variables(); ++v) {
      const std::string& name = ring_->name(v);
      if (name.size() > best_len && text_.substr(pos_, name.size()) == name) {
        best = v;
        best_len = name.size();
      }
    }
    if (!best) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      throw error("unknown variable '" + std::string(text_.substr(pos_, std::max(end, pos_ + 1) - pos_)) + "'");
    }
    pos_ += best_len;
    return *best;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  ParseError error(const std::string& what) const {
    return ParseError("cannot parse polynomial '" + std::string(text_) + "' at offset " +
                      std::to_string(pos_) + ": " + what);
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return Parser(ring, text).parse();
}

}  // namespace joinmeet
