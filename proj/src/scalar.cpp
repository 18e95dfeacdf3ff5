#include "ctc/scalar.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace ctc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NoEmbedding: return "NoEmbedding";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidCategory: return "InvalidCategory";
    case ErrorCode::CategoryMismatch: return "CategoryMismatch";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::UnitMultiplicityNotOne: return "UnitMultiplicityNotOne";
    case ErrorCode::NotRigidSelfDual: return "NotRigidSelfDual";
    case ErrorCode::NonUnique: return "NonUnique";
    case ErrorCode::NotScalarMultiple: return "NotScalarMultiple";
    case ErrorCode::InvalidGroupTable: return "InvalidGroupTable";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::MissingStructure: return "MissingStructure";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NotAlgebraAutomorphism: return "NotAlgebraAutomorphism";
    case ErrorCode::IndexZero: return "IndexZero";
    case ErrorCode::NotASection: return "NotASection";
    case ErrorCode::NotALift: return "NotALift";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::RadicalAlgorithmUnavailable: return "RadicalAlgorithmUnavailable";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

using Poly = std::vector<mpz_class>;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Exact quotient of integer polynomials; divisor must be monic.
Poly poly_divide_exact(Poly num, const Poly& den) {
  const std::size_t dd = den.size() - 1;
  Poly quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const mpz_class c = num[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  return quot;
}

Poly cyclotomic_poly(std::uint32_t n, std::map<std::uint32_t, Poly>& cache) {
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide_exact(p, cyclotomic_poly(d, cache));
  cache[n] = p;
  return p;
}

// Reduces a rational polynomial in place modulo the monic `modulus`.
void reduce_mod(std::vector<mpq_class>& coeffs, const Poly& modulus) {
  const std::size_t deg = modulus.size() - 1;
  for (std::size_t k = coeffs.size(); k-- > deg;) {
    const mpq_class c = coeffs[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) coeffs[k - deg + j] -= c * modulus[j];
  }
  coeffs.resize(deg);
}

const detail::CyclotomicData* cyclotomic_registry(std::uint32_t n) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::unique_ptr<detail::CyclotomicData>> registry;
  static std::map<std::uint32_t, Poly> poly_cache;
  std::lock_guard lock(mutex);
  auto& slot = registry[n];
  if (!slot) {
    auto data = std::make_unique<detail::CyclotomicData>();
    data->n = n;
    data->poly = cyclotomic_poly(n, poly_cache);
    data->phi = data->poly.size() - 1;
    data->powers.reserve(n);
    for (std::uint32_t k = 0; k < n; ++k) {
      std::vector<mpq_class> v(std::max<std::size_t>(k + 1, data->phi), 0);
      v[k] = 1;
      reduce_mod(v, data->poly);
      data->powers.push_back(std::move(v));
    }
    slot = std::move(data);
  }
  return slot.get();
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a == 0) raise(ErrorCode::DivisionByZero, "inverse of 0 in F_" + std::to_string(p));
  __int128 t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t residue_of(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

// Solves a dense rational system M x = b (M square, invertible).
std::vector<mpq_class> solve_rational(std::vector<std::vector<mpq_class>> m,
                                      std::vector<mpq_class> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) raise(ErrorCode::DivisionByZero, "singular multiplication matrix");
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    const mpq_class inv = 1 / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const mpq_class f = m[r][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

std::vector<mpq_class> cyclo_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                                 const detail::CyclotomicData& data) {
  std::vector<mpq_class> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  reduce_mod(prod, data.poly);
  return prod;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::rational() { return FieldSpec(); }

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) raise(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 62)) raise(ErrorCode::InvalidField, "prime too large");
  FieldSpec f;
  f.kind_ = FieldKind::prime;
  f.param_ = p;
  return f;
}

FieldSpec FieldSpec::cyclotomic(std::uint32_t n) {
  if (n < 1) raise(ErrorCode::InvalidField, "cyclotomic order must be positive");
  if (n > 4096) raise(ErrorCode::InvalidField, "cyclotomic order too large");
  FieldSpec f;
  f.kind_ = FieldKind::cyclotomic;
  f.param_ = n;
  f.cyclo_ = cyclotomic_registry(n);
  return f;
}

std::size_t FieldSpec::degree() const { return kind_ == FieldKind::cyclotomic ? cyclo_->phi : 1; }

const detail::CyclotomicData& FieldSpec::cyclotomic_data() const {
  if (kind_ != FieldKind::cyclotomic) raise(ErrorCode::InvalidField, to_string() + " is not cyclotomic");
  return *cyclo_;
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case FieldKind::rational: return "Q";
    case FieldKind::prime: return "F_" + std::to_string(param_);
    case FieldKind::cyclotomic: return "Q(zeta_" + std::to_string(param_) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Scalar construction

Scalar Scalar::zero(const FieldSpec& field) { return from_int(field, 0); }
Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, long value) {
  return from_integer(field, mpz_class(value));
}

Scalar Scalar::from_integer(const FieldSpec& field, const mpz_class& value) {
  switch (field.kind()) {
    case FieldKind::rational: return Scalar(field, mpq_class(value));
    case FieldKind::prime: return Scalar(field, residue_of(value, field.param()));
    case FieldKind::cyclotomic: {
      std::vector<mpq_class> v(field.degree(), 0);
      v[0] = value;
      // degree-1 cyclotomic fields still need z reduced, but constants are fine
      return Scalar(field, std::move(v));
    }
  }
  return Scalar();
}

Scalar Scalar::from_rational(const FieldSpec& field, const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  if (field.kind() == FieldKind::prime) {
    const std::uint64_t p = field.param();
    const std::uint64_t den = residue_of(q.get_den(), p);
    if (den == 0)
      raise(ErrorCode::NoEmbedding, q.get_str() + " has denominator divisible by " + std::to_string(p));
    return Scalar(field, mod_mul(residue_of(q.get_num(), p), mod_inverse(den, p), p));
  }
  if (field.kind() == FieldKind::rational) return Scalar(field, q);
  std::vector<mpq_class> v(field.degree(), 0);
  v[0] = q;
  return Scalar(field, std::move(v));
}

Scalar Scalar::zeta(const FieldSpec& field, long k) {
  const auto& data = field.cyclotomic_data();
  const long n = data.n;
  const long r = ((k % n) + n) % n;
  return Scalar(field, data.powers[static_cast<std::size_t>(r)]);
}

// ---------------------------------------------------------------------------
// Arithmetic

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_)
    raise(ErrorCode::FieldMismatch, field_.to_string() + " vs " + other.field_.to_string());
}

void Scalar::normalize() {
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    if (*q == 0) value_ = std::monostate();
  } else if (const auto* r = std::get_if<std::uint64_t>(&value_)) {
    if (*r == 0) value_ = std::monostate();
  } else if (const auto* v = std::get_if<std::vector<mpq_class>>(&value_)) {
    for (const auto& x : *v)
      if (x != 0) return;
    value_ = std::monostate();
  }
}

mpq_class Scalar::rat() const {
  const auto* q = std::get_if<mpq_class>(&value_);
  return q ? *q : mpq_class(0);
}

std::uint64_t Scalar::res() const {
  const auto* r = std::get_if<std::uint64_t>(&value_);
  return r ? *r : 0;
}

std::vector<mpq_class> Scalar::cyc() const {
  const auto* v = std::get_if<std::vector<mpq_class>>(&value_);
  return v ? *v : std::vector<mpq_class>(field_.degree(), 0);
}

bool Scalar::is_zero() const { return std::holds_alternative<std::monostate>(value_); }

bool Scalar::is_one() const {
  switch (field_.kind()) {
    case FieldKind::rational: {
      const auto* q = std::get_if<mpq_class>(&value_);
      return q && *q == 1;
    }
    case FieldKind::prime: return res() == 1;
    case FieldKind::cyclotomic: {
      const auto* v = std::get_if<std::vector<mpq_class>>(&value_);
      if (!v || (*v)[0] != 1) return false;
      for (std::size_t i = 1; i < v->size(); ++i)
        if ((*v)[i] != 0) return false;
      return true;
    }
  }
  return false;
}

Scalar Scalar::operator-() const {
  if (is_zero()) return *this;
  switch (field_.kind()) {
    case FieldKind::rational: return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
    case FieldKind::prime: return Scalar(field_, field_.param() - std::get<std::uint64_t>(value_));
    case FieldKind::cyclotomic: {
      auto v = std::get<std::vector<mpq_class>>(value_);
      for (auto& c : v) c = -c;
      return Scalar(field_, std::move(v));
    }
  }
  return *this;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (other.is_zero()) return *this;
  if (is_zero()) {
    value_ = other.value_;
    return *this;
  }
  switch (field_.kind()) {
    case FieldKind::rational: std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_); break;
    case FieldKind::prime: {
      auto& v = std::get<std::uint64_t>(value_);
      v = (v + std::get<std::uint64_t>(other.value_)) % field_.param();
      break;
    }
    case FieldKind::cyclotomic: {
      auto& v = std::get<std::vector<mpq_class>>(value_);
      const auto& w = std::get<std::vector<mpq_class>>(other.value_);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
      break;
    }
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (is_zero()) return *this;
  if (other.is_zero()) {
    value_ = std::monostate();
    return *this;
  }
  switch (field_.kind()) {
    case FieldKind::rational: std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_); break;
    case FieldKind::prime: {
      auto& v = std::get<std::uint64_t>(value_);
      v = mod_mul(v, std::get<std::uint64_t>(other.value_), field_.param());
      break;
    }
    case FieldKind::cyclotomic: {
      auto& v = std::get<std::vector<mpq_class>>(value_);
      v = cyclo_mul(v, std::get<std::vector<mpq_class>>(other.value_), field_.cyclotomic_data());
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero in " + field_.to_string());
  switch (field_.kind()) {
    case FieldKind::rational: return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
    case FieldKind::prime:
      return Scalar(field_, mod_inverse(std::get<std::uint64_t>(value_), field_.param()));
    case FieldKind::cyclotomic: {
      // Column j of the multiplication matrix is (x * z^j) mod Phi_n.
      const auto& data = field_.cyclotomic_data();
      const auto& x = std::get<std::vector<mpq_class>>(value_);
      const std::size_t phi = data.phi;
      std::vector<std::vector<mpq_class>> m(phi, std::vector<mpq_class>(phi, 0));
      for (std::size_t j = 0; j < phi; ++j) {
        std::vector<mpq_class> zj(phi, 0);
        zj[j] = 1;
        const auto col = cyclo_mul(x, zj, data);
        for (std::size_t i = 0; i < phi; ++i) m[i][j] = col[i];
      }
      std::vector<mpq_class> e0(phi, 0);
      e0[0] = 1;
      return Scalar(field_, solve_rational(std::move(m), std::move(e0)));
    }
  }
  return *this;
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Scalar result = one(field_);
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Scalar Scalar::embed(const FieldSpec& target) const {
  if (field_ == target) return *this;
  const auto fail = [&]() -> Scalar {
    raise(ErrorCode::NoEmbedding, "no canonical embedding " + field_.to_string() + " -> " + target.to_string());
  };
  switch (field_.kind()) {
    case FieldKind::rational: return from_rational(target, rat());
    case FieldKind::prime: return fail();
    case FieldKind::cyclotomic: {
      if (target.kind() != FieldKind::cyclotomic || target.param() % field_.param() != 0) return fail();
      const std::uint64_t step = target.param() / field_.param();
      const auto v = cyc();
      Scalar out = zero(target);
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        out += zeta(target, static_cast<long>(k * step)) * from_rational(target, v[k]);
      }
      return out;
    }
  }
  return fail();
}

bool operator==(const Scalar& a, const Scalar& b) { return a.field_ == b.field_ && a.value_ == b.value_; }

std::vector<mpq_class> Scalar::rational_coefficients() const {
  switch (field_.kind()) {
    case FieldKind::rational: return {rat()};
    case FieldKind::cyclotomic: return cyc();
    case FieldKind::prime: break;
  }
  raise(ErrorCode::InvalidArgument, "prime-field scalar has no rational coefficients");
}

std::uint64_t Scalar::residue() const {
  if (field_.kind() != FieldKind::prime) raise(ErrorCode::InvalidArgument, "not a prime-field scalar");
  return res();
}

// ---------------------------------------------------------------------------
// Literal syntax

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  switch (field_.kind()) {
    case FieldKind::rational: return std::get<mpq_class>(value_).get_str();
    case FieldKind::prime: return std::to_string(std::get<std::uint64_t>(value_));
    case FieldKind::cyclotomic: break;
  }
  const auto& v = std::get<std::vector<mpq_class>>(value_);
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    const bool negative = v[k] < 0;
    const mpq_class mag = abs(v[k]);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += k == 1 ? "z" : "z^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

namespace {

class LiteralParser {
 public:
  LiteralParser(std::string_view text, const FieldSpec& field) : text_(text), field_(field) {}

  Scalar parse() {
    Scalar value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    raise(ErrorCode::ParseError,
          "scalar literal \"" + std::string(text_) + "\" at column " + std::to_string(pos_ + 1) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Scalar expr() {
    Scalar value = Scalar::zero(field_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Scalar t = term();
    value = negate ? -t : t;
    while (true) {
      if (accept('+'))
        value += term();
      else if (accept('-'))
        value -= term();
      else
        break;
    }
    return value;
  }

  Scalar term() {
    Scalar value = factor();
    while (true) {
      if (accept('*')) {
        value *= factor();
      } else if (accept('/')) {
        const Scalar d = factor();
        if (d.is_zero()) fail("division by zero");
        value *= d.inverse();
      } else if (const char c = peek(); c == 'z' || c == '(') {
        value *= factor();  // implicit product, e.g. 2z
      } else {
        break;
      }
    }
    return value;
  }

  Scalar factor() {
    Scalar base = primary();
    if (accept('^')) {
      bool neg = false;
      if (accept('-')) neg = true;
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      long e = std::stol(std::string(text_.substr(start, pos_ - start)));
      if (neg) {
        if (base.is_zero()) fail("zero to a negative power");
        e = -e;
      }
      base = base.pow(e);
    }
    return base;
  }

  Scalar primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'z') {
      ++pos_;
      if (field_.kind() != FieldKind::cyclotomic) fail("'z' is only valid in cyclotomic fields");
      return Scalar::zeta(field_, 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar::from_integer(field_, mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  FieldSpec field_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text, const FieldSpec& field) {
  return LiteralParser(text, field).parse();
}

std::complex<double> Scalar::approximate() const {
  if (is_zero()) return 0;
  switch (field_.kind()) {
    case FieldKind::rational: return {std::get<mpq_class>(value_).get_d(), 0.0};
    case FieldKind::prime: return {static_cast<double>(std::get<std::uint64_t>(value_)), 0.0};
    case FieldKind::cyclotomic: break;
  }
  const auto& v = std::get<std::vector<mpq_class>>(value_);
  const double n = static_cast<double>(field_.param());
  std::complex<double> sum = 0;
  for (std::size_t k = 0; k < v.size(); ++k)
    sum += v[k].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / n);
  return sum;
}

std::string Scalar::approximate_string(int digits) const {
  const auto z = approximate();
  std::ostringstream os;
  os.precision(digits);
  os << "~" << z.real();
  if (std::abs(z.imag()) > 1e-12) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace ctc
