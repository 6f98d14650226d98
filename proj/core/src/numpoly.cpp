#include "lindiff/numpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lindiff/errors.hpp"

namespace lindiff {

NumericalPolynomial::NumericalPolynomial(std::vector<Integer> binomial_coeffs,
                                         std::int64_t valid_from)
    : coeffs_(std::move(binomial_coeffs)), valid_from_(valid_from) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer NumericalPolynomial::binomial_coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Integer binomial_poly(std::int64_t x, int k) {
  if (k < 0) return 0;
  // (x+1)(x+2)...(x+k) / k!
  Integer num = 1;
  Integer fact = 1;
  for (int j = 1; j <= k; ++j) {
    num *= Integer(static_cast<long>(x + j));
    fact *= j;
  }
  return num / fact;
}

Integer NumericalPolynomial::operator()(std::int64_t t) const {
  Integer acc = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    acc += coeffs_[i] * binomial_poly(t, static_cast<int>(i));
  }
  return acc;
}

std::vector<Rational> NumericalPolynomial::monomial_coeffs() const {
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    // C(t+i, i) = prod_{j=1..i} (t + j) / i!
    std::vector<Rational> basis{Rational(1)};
    for (std::size_t j = 1; j <= i; ++j) {
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] += basis[k] * Rational(static_cast<long>(j));
      }
      basis = std::move(next);
    }
    Integer fact = 1;
    for (std::size_t j = 2; j <= i; ++j) fact *= static_cast<unsigned long>(j);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      out[k] += Rational(coeffs_[i]) * basis[k] / Rational(fact);
    }
  }
  for (auto& c : out) c.canonicalize();
  return out;
}

NumericalPolynomial NumericalPolynomial::difference() const {
  // C(t+i, i) - C(t-1+i, i) = C(t+i-1, i-1)
  std::vector<Integer> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i]);
  return NumericalPolynomial(std::move(out), valid_from_ + 1);
}

std::string NumericalPolynomial::to_string() const {
  const auto mono = monomial_coeffs();
  if (mono.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = mono.size(); k-- > 0;) {
    const Rational& c = mono[k];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      os << mag.get_num();
      if (mag.get_den() != 1) os << '/' << mag.get_den();
      if (k > 0) os << '*';
    }
    if (k > 0) os << 't';
    if (k > 1) os << '^' << k;
  }
  return first ? "0" : os.str();
}

namespace {

bool leq(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::uint64_t weight(const ExponentVector& v) {
  std::uint64_t s = 0;
  for (auto x : v) s += x;
  return s;
}

// Values at t = -1, -2, ..., -(m+1) determine the binomial-basis coefficients
// by forward substitution: C(-j+i, i) = 0 for 1 <= j <= i.
std::vector<Integer> binomial_coeffs_from_values(const std::vector<Integer>& values_at_neg) {
  std::vector<Integer> a;
  for (std::size_t j = 0; j < values_at_neg.size(); ++j) {
    const std::int64_t t = -static_cast<std::int64_t>(j) - 1;
    Integer rest = values_at_neg[j];
    for (std::size_t i = 0; i < a.size(); ++i) rest -= a[i] * binomial_poly(t, static_cast<int>(i));
    // Coefficient of a_j at t = -(j+1) is C(-1, j) = (-1)^j.
    a.push_back(j % 2 == 0 ? rest : Integer(-rest));
  }
  return a;
}

}  // namespace

void validate_antichain(const Antichain& e) {
  if (e.m < 1) throw NotAntichain("antichain needs m >= 1");
  for (std::size_t c = 0; c < e.components.size(); ++c) {
    const auto& set = e.components[c];
    for (const auto& v : set) {
      if (v.size() != e.m) {
        throw NotAntichain("exponent vector of length " + std::to_string(v.size()) +
                           " in an m = " + std::to_string(e.m) + " antichain");
      }
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = 0; j < set.size(); ++j) {
        if (i != j && leq(set[i], set[j])) {
          throw NotAntichain("component " + std::to_string(c + 1) +
                             " contains comparable exponent vectors");
        }
      }
    }
  }
}

NumericalPolynomial count_cofilter(const Antichain& e) {
  validate_antichain(e);
  const int m = static_cast<int>(e.m);
  // Collect (sign, |join S|) over all subsets S of each component.
  std::vector<std::pair<int, std::int64_t>> shifts;
  std::int64_t valid_from = 0;
  for (const auto& set : e.components) {
    if (set.size() > 24) throw std::length_error("too many leaders in one component");
    const std::uint64_t subsets = std::uint64_t{1} << set.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      ExponentVector join(e.m, 0);
      int size = 0;
      for (std::size_t k = 0; k < set.size(); ++k) {
        if ((mask >> k) & 1U) {
          ++size;
          for (std::size_t i = 0; i < e.m; ++i) join[i] = std::max(join[i], set[k][i]);
        }
      }
      const auto w = static_cast<std::int64_t>(weight(join));
      shifts.emplace_back(size % 2 == 0 ? 1 : -1, w);
      valid_from = std::max(valid_from, w);
    }
  }
  // phi(t) = sum sign * C(t - w + m, m) as a polynomial in t.
  std::vector<Integer> values;
  for (int j = 1; j <= m + 1; ++j) {
    Integer v = 0;
    for (const auto& [sign, w] : shifts) v += sign * binomial_poly(-j - w, m);
    values.push_back(v);
  }
  return NumericalPolynomial(binomial_coeffs_from_values(values), valid_from);
}

Integer brute_count(const Antichain& e, std::uint32_t t) {
  validate_antichain(e);
  Integer total = 0;
  ExponentVector v(e.m, 0);
  // Odometer over the box [0, t]^m, keeping |v| <= t.
  for (;;) {
    if (weight(v) <= t) {
      for (const auto& set : e.components) {
        const bool excluded =
            std::any_of(set.begin(), set.end(), [&](const ExponentVector& lead) { return leq(lead, v); });
        if (!excluded) ++total;
      }
    }
    std::size_t i = 0;
    while (i < e.m && v[i] == t) v[i++] = 0;
    if (i == e.m) break;
    ++v[i];
  }
  return total;
}

TypeAndHeights type_and_heights(const NumericalPolynomial& p, int m) {
  if (p.degree() > m) throw std::invalid_argument("numerical polynomial degree exceeds m");
  TypeAndHeights out{std::nullopt, 0, 0};
  if (p.is_zero()) return out;
  // The t^l coefficient of a_l C(t+l, l) is a_l / l!, so l! times the
  // leading coefficient is a_l itself.
  out.type = p.degree();
  out.typical_height = p.binomial_coeffs().back();
  out.diff_height = p.binomial_coeff(static_cast<std::size_t>(m));
  return out;
}

}  // namespace lindiff
