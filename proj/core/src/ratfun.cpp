#include <ostream>
#include <sstream>
#include <stdexcept>

#include "lindiff/errors.hpp"
#include "lindiff/scalars.hpp"

namespace lindiff {

DiffFieldConfig::DiffFieldConfig(int num_derivations, int num_vars)
    : m_(num_derivations), v_(num_vars) {
  if (num_derivations < 1) {
    throw std::invalid_argument("a differential field needs at least one derivation");
  }
  if (num_vars < 0 || num_vars > num_derivations) {
    throw std::invalid_argument("number of field variables must lie in [0, m]");
  }
}

std::string to_string(const DiffFieldConfig& cfg) {
  std::ostringstream os;
  os << "Q(" << cfg.num_vars() << " vars; m=" << cfg.num_derivations() << ')';
  return os.str();
}

RatFun::RatFun(DiffFieldConfig cfg)
    : cfg_(cfg),
      num_(cfg.num_vars()),
      den_(MPoly::constant(cfg.num_vars(), Rational(1))) {}

RatFun::RatFun(DiffFieldConfig cfg, const Rational& c)
    : cfg_(cfg),
      num_(MPoly::constant(cfg.num_vars(), c)),
      den_(MPoly::constant(cfg.num_vars(), Rational(1))) {}

RatFun RatFun::variable(DiffFieldConfig cfg, int index) {
  return RatFun(cfg, MPoly::variable(cfg.num_vars(), index),
                MPoly::constant(cfg.num_vars(), Rational(1)));
}

RatFun RatFun::normalize(DiffFieldConfig cfg, MPoly num, MPoly den) {
  if (num.num_vars() != cfg.num_vars() || den.num_vars() != cfg.num_vars()) {
    throw ConfigMismatch("polynomial ring does not match field configuration");
  }
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return RatFun(cfg);
  if (!den.is_constant()) {
    MPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = divide_exact(num, g);
      den = divide_exact(den, g);
    }
  }
  const Rational lc = den.leading().second;
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num *= inv;
    den *= inv;
  }
  return RatFun(cfg, std::move(num), std::move(den));
}

bool RatFun::is_one() const {
  return den_.is_constant() && num_.is_constant() && num_.constant_value() == 1;
}

void RatFun::check_same(const RatFun& other) const {
  if (!(cfg_ == other.cfg_)) {
    throw ConfigMismatch("field elements from different configurations: " +
                         lindiff::to_string(cfg_) + " vs " +
                         lindiff::to_string(other.cfg_));
  }
}

RatFun RatFun::coprime(DiffFieldConfig cfg, MPoly num, MPoly den) {
  if (num.is_zero()) return RatFun(cfg);
  const Rational lc = den.leading().second;
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num *= inv;
    den *= inv;
  }
  return RatFun(cfg, std::move(num), std::move(den));
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return coprime(cfg_, den_, num_);
}

RatFun RatFun::derive(int index) const {
  if (index < 0 || index >= cfg_.num_derivations()) {
    throw BadDerivation("derivation index " + std::to_string(index + 1) +
                        " outside 1.." + std::to_string(cfg_.num_derivations()));
  }
  if (index >= cfg_.num_vars() || is_zero()) return RatFun(cfg_);
  if (den_.is_constant()) {
    return RatFun(cfg_, num_.derivative(index), den_);
  }
  MPoly top = num_.derivative(index) * den_ - num_ * den_.derivative(index);
  return normalize(cfg_, std::move(top), den_ * den_);
}

RatFun RatFun::operator-() const { return RatFun(cfg_, -num_, den_); }

// Addition and multiplication take gcds of the smaller pieces only
// (Henrici); the results are coprime without a final gcd.
RatFun& RatFun::operator+=(const RatFun& other) {
  check_same(other);
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_.is_constant() && other.den_.is_constant()) {
    num_ += other.num_;
    return *this;
  }
  const MPoly g = gcd(den_, other.den_);
  if (g.is_constant()) {
    MPoly top = num_ * other.den_ + other.num_ * den_;
    *this = coprime(cfg_, std::move(top), den_ * other.den_);
    return *this;
  }
  const MPoly b1 = divide_exact(den_, g);
  const MPoly d1 = divide_exact(other.den_, g);
  MPoly top = num_ * d1 + other.num_ * b1;
  if (top.is_zero()) return *this = RatFun(cfg_);
  const MPoly g2 = gcd(top, g);
  if (!g2.is_constant()) {
    top = divide_exact(top, g2);
    *this = coprime(cfg_, std::move(top), b1 * divide_exact(other.den_, g2));
  } else {
    *this = coprime(cfg_, std::move(top), b1 * other.den_);
  }
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& other) { return *this += -other; }

RatFun& RatFun::operator*=(const RatFun& other) {
  check_same(other);
  if (is_zero() || other.is_zero()) return *this = RatFun(cfg_);
  MPoly a = num_;
  MPoly b = den_;
  MPoly c = other.num_;
  MPoly d = other.den_;
  if (!d.is_constant()) {
    const MPoly g = gcd(a, d);
    if (!g.is_constant()) {
      a = divide_exact(a, g);
      d = divide_exact(d, g);
    }
  }
  if (!b.is_constant()) {
    const MPoly g = gcd(c, b);
    if (!g.is_constant()) {
      c = divide_exact(c, g);
      b = divide_exact(b, g);
    }
  }
  *this = coprime(cfg_, a * c, b * d);
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& other) {
  check_same(other);
  if (other.is_zero()) throw DivisionByZero();
  return *this *= other.inverse();
}

namespace {

bool is_single_power(const MPoly& p) {
  if (p.size() != 1) return false;
  const auto& [e, c] = p.leading();
  if (c != 1) return false;
  int nonzero = 0;
  for (auto x : e) nonzero += x != 0 ? 1 : 0;
  return nonzero <= 1;
}

}  // namespace

std::string RatFun::to_string(std::span<const std::string> names) const {
  std::string top = num_.to_string(names);
  if (den_.is_constant()) return top;
  if (num_.size() > 1) top = "(" + top + ")";
  std::string bottom = den_.to_string(names);
  if (!is_single_power(den_)) bottom = "(" + bottom + ")";
  return top + "/" + bottom;
}

std::string RatFun::to_string() const {
  return to_string(default_field_names(cfg_.num_vars()));
}

RatFun arith(ArithOp op, const RatFun& a, const RatFun& b) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::logic_error("unknown arithmetic operation");
}

RatFun derive(const RatFun& a, int index) { return a.derive(index); }

RatFun pow(const RatFun& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  RatFun result(base.config(), Rational(1));
  RatFun b = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e > 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return result;
}

}  // namespace lindiff

namespace lindiff {

std::ostream& operator<<(std::ostream& os, const RatFun& a) { return os << a.to_string(); }

}  // namespace lindiff
