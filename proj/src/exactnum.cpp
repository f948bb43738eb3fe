#include "supchar/exactnum.hpp"

#include <map>
#include <numeric>

namespace supchar {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

int euler_phi(int n) {
  if (n < 1) throw ArgumentError("euler_phi: n must be positive");
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact quotient of num by a monic divisor; the remainder must vanish.
IntPolynomial divide_exact(IntPolynomial num, const IntPolynomial& den) {
  const std::size_t dd = den.size() - 1;
  IntPolynomial quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const BigInt c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
  }
  for (std::size_t k = 0; k < dd; ++k) {
    if (num[k] != 0) throw Error("cyclotomic_polynomial: inexact division");
  }
  return quot;
}

IntPolynomial cyclotomic_memo(int n, std::map<int, IntPolynomial>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  IntPolynomial poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_exact(std::move(poly), cyclotomic_memo(d, memo));
  }
  memo.emplace(n, poly);
  return poly;
}

}  // namespace

IntPolynomial cyclotomic_polynomial(int n) {
  if (n < 1) throw ArgumentError("cyclotomic_polynomial: N must be positive");
  std::map<int, IntPolynomial> memo;
  return cyclotomic_memo(n, memo);
}

CyclotomicField::CyclotomicField(int order) : order_(order) {
  if (order < 1) throw ArgumentError("cyclotomic field order must be positive");
  modulus_ = cyclotomic_polynomial(order);
  degree_ = static_cast<int>(modulus_.size()) - 1;
  const auto d = static_cast<std::size_t>(degree_);

  powers_.reserve(static_cast<std::size_t>(order));
  for (int e = 0; e < std::min(order, degree_); ++e) {
    std::vector<BigInt> unit(d, 0);
    unit[static_cast<std::size_t>(e)] = 1;
    powers_.push_back(std::move(unit));
  }
  if (degree_ >= order) return;  // only N = 1 reaches here with degree 1
  // zeta^d = -(phi_0 + ... + phi_{d-1} zeta^{d-1}); then multiply by zeta repeatedly.
  std::vector<BigInt> current = powers_.back();
  for (int e = degree_; e < order; ++e) {
    std::vector<BigInt> next(d, 0);
    const BigInt top = current[d - 1];
    for (std::size_t k = d - 1; k > 0; --k) next[k] = current[k - 1];
    next[0] = 0;
    if (top != 0) {
      for (std::size_t k = 0; k < d; ++k) next[k] -= top * modulus_[k];
    }
    powers_.push_back(next);
    current = std::move(next);
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::make(int order) {
  return std::make_shared<const CyclotomicField>(order);
}

Cyclotomic::Cyclotomic() : field_(CyclotomicField::make(1)) {}

Cyclotomic::Cyclotomic(FieldPtr field, const Rational& value) : field_(std::move(field)) {
  if (value != 0) terms_.push_back({0, value});
}

Cyclotomic Cyclotomic::reduce_dense(FieldPtr field, std::vector<Rational>& acc) {
  const int n = field->order();
  const int d = field->degree();
  for (int e = n - 1; e >= d; --e) {
    const Rational c = acc[static_cast<std::size_t>(e)];
    if (c == 0) continue;
    const auto& p = field->power(e);
    for (int k = 0; k < d; ++k) {
      if (p[static_cast<std::size_t>(k)] != 0) acc[static_cast<std::size_t>(k)] += c * p[static_cast<std::size_t>(k)];
    }
  }
  std::vector<Term> terms;
  for (int k = 0; k < std::min(d, n); ++k) {
    if (acc[static_cast<std::size_t>(k)] != 0) terms.push_back({k, acc[static_cast<std::size_t>(k)]});
  }
  return Cyclotomic(std::move(field), std::move(terms));
}

Cyclotomic Cyclotomic::from_terms(FieldPtr field, const std::vector<Term>& terms) {
  const long n = field->order();
  std::vector<Rational> acc(static_cast<std::size_t>(n));
  for (const auto& t : terms) {
    const long e = ((t.exponent % n) + n) % n;
    Rational c = t.coeff;
    c.canonicalize();
    acc[static_cast<std::size_t>(e)] += c;
  }
  return reduce_dense(std::move(field), acc);
}

Cyclotomic Cyclotomic::root(FieldPtr field, long k) {
  const long n = field->order();
  const int e = static_cast<int>(((k % n) + n) % n);
  return from_terms(std::move(field), {{e, Rational(1)}});
}

Cyclotomic root_of_unity(int order, long k) { return Cyclotomic::root(CyclotomicField::make(order), k); }

bool Cyclotomic::is_rational() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent == 0);
}

Rational Cyclotomic::as_rational() const {
  if (!is_rational()) throw ArgumentError("cyclotomic value is not rational: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.front().coeff;
}

std::vector<Rational> Cyclotomic::coordinates() const {
  std::vector<Rational> out(static_cast<std::size_t>(field_->degree()));
  for (const auto& t : terms_) out[static_cast<std::size_t>(t.exponent)] = t.coeff;
  return out;
}

void Cyclotomic::require_same_field(const Cyclotomic& other) const {
  if (order() != other.order()) throw OrderMismatch(order(), other.order());
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& other) const {
  require_same_field(other);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->exponent < a->exponent) {
      out.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->exponent, std::move(c)});
      ++a;
      ++b;
    }
  }
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& other) const { return *this + (-other); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& other) const {
  require_same_field(other);
  if (is_zero() || other.is_zero()) return Cyclotomic(field_, std::vector<Term>{});
  const int n = order();
  std::vector<Rational> acc(static_cast<std::size_t>(n));
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      acc[static_cast<std::size_t>((a.exponent + b.exponent) % n)] += a.coeff * b.coeff;
    }
  }
  return reduce_dense(field_, acc);
}

Cyclotomic Cyclotomic::scale(const Rational& r) const {
  if (r == 0) return Cyclotomic(field_, std::vector<Term>{});
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= r;
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::conjugate() const {
  const int n = order();
  std::vector<Rational> acc(static_cast<std::size_t>(n));
  for (const auto& t : terms_) acc[static_cast<std::size_t>((n - t.exponent) % n)] += t.coeff;
  return reduce_dense(field_, acc);
}

bool Cyclotomic::equals(const Cyclotomic& other) const {
  require_same_field(other);
  return terms_ == other.terms_;
}

std::string Cyclotomic::canonical_key() const {
  std::string key = std::to_string(order());
  key += '|';
  for (const auto& t : terms_) {
    key += std::to_string(t.exponent);
    key += ':';
    key += t.coeff.get_str();
    key += ';';
  }
  return key;
}

std::string Cyclotomic::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    const Rational mag = abs(t.coeff);
    if (!out.empty() || negative) out += negative ? "-" : "+";
    if (t.exponent == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "z" + std::to_string(order());
    if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
  }
  return out;
}

Cyclotomic add(const Cyclotomic& a, const Cyclotomic& b) { return a + b; }
Cyclotomic mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }
Cyclotomic scale(const Cyclotomic& a, const Rational& r) { return a.scale(r); }
Cyclotomic negate(const Cyclotomic& a) { return -a; }
Cyclotomic conjugate(const Cyclotomic& a) { return a.conjugate(); }
bool equals(const Cyclotomic& a, const Cyclotomic& b) { return a.equals(b); }
std::string canonical_key(const Cyclotomic& a) { return a.canonical_key(); }

namespace {

nlohmann::ordered_json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

BigInt bigint_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? BigInt(std::to_string(v.get<std::uint64_t>()))
                                  : BigInt(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    BigInt out;
    if (out.set_str(v.get<std::string>(), 10) != 0) throw ParseError("malformed integer string: " + v.get<std::string>());
    return out;
  }
  throw ParseError("expected an integer, got " + v.dump());
}

}  // namespace

nlohmann::ordered_json to_json(const Cyclotomic& value) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& t : value.terms()) {
    out.push_back({bigint_to_json(t.coeff.get_num()), bigint_to_json(t.coeff.get_den()), t.exponent});
  }
  return out;
}

Cyclotomic cyclotomic_from_json(const FieldPtr& field, const nlohmann::json& doc) {
  if (!doc.is_array()) throw ParseError("cyclotomic value must be an array of [num, den, exp] terms");
  std::vector<Cyclotomic::Term> terms;
  for (const auto& term : doc) {
    if (!term.is_array() || term.size() != 3) throw ParseError("cyclotomic term must be [num, den, exp]: " + term.dump());
    if (!term[2].is_number_integer()) throw ParseError("cyclotomic exponent must be an integer: " + term.dump());
    const BigInt den = bigint_from_json(term[1]);
    if (den <= 0) throw ParseError("cyclotomic term denominator must be positive: " + term.dump());
    const long e = term[2].get<long>();
    const long n = field->order();
    terms.push_back({static_cast<int>(((e % n) + n) % n), make_rational(bigint_from_json(term[0]), den)});
  }
  return Cyclotomic::from_terms(field, terms);
}

}  // namespace supchar
