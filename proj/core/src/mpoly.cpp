#include <ostream>
#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "lindiff/scalars.hpp"

namespace lindiff {

namespace {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponent exp_sub(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Exponent exp_add(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// Coefficients of p viewed as a univariate polynomial in `var`; the `var`
// exponent is zeroed in every coefficient.
std::map<std::uint32_t, MPoly> coefficients_in(const MPoly& p, int var) {
  std::map<std::uint32_t, MPoly> out;
  for (const auto& [exps, c] : p.terms()) {
    Exponent e = exps;
    const std::uint32_t d = e[var];
    e[var] = 0;
    auto it = out.try_emplace(d, MPoly(p.num_vars())).first;
    it->second.add_term(e, c);
  }
  return out;
}

MPoly leading_coefficient_in(const MPoly& p, int var) {
  auto coeffs = coefficients_in(p, var);
  return coeffs.rbegin()->second;
}

MPoly var_power(int num_vars, int var, std::uint32_t k) {
  Exponent e(num_vars, 0);
  e[var] = k;
  return MPoly::monomial(std::move(e), Rational(1));
}

MPoly make_monic(const MPoly& p) {
  if (p.is_zero()) return p;
  Rational lc = p.leading().second;
  return p * Rational(1 / lc);
}

// Highest variable index appearing in a or b, or -1.
int main_variable(const MPoly& a, const MPoly& b) {
  for (int var = a.num_vars() - 1; var >= 0; --var) {
    if (a.involves(var) || b.involves(var)) return var;
  }
  return -1;
}

bool involves_below(const MPoly& p, int var) {
  for (int i = 0; i < var; ++i) {
    if (p.involves(i)) return true;
  }
  return false;
}

// Pseudo-remainder of a by b with respect to var: lc(b)^(deg a - deg b + 1) * a
// modulo b.
MPoly pseudo_remainder(const MPoly& a, const MPoly& b, int var) {
  const int db = b.degree_in(var);
  const MPoly lcb = leading_coefficient_in(b, var);
  MPoly r = a;
  int e = a.degree_in(var) - db + 1;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const int dr = r.degree_in(var);
    MPoly lcr = leading_coefficient_in(r, var);
    r = lcb * r - lcr * var_power(a.num_vars(), var, dr - db) * b;
    --e;
  }
  if (e > 0) r = pow(lcb, e) * r;
  return r;
}

MPoly univariate_gcd(MPoly a, MPoly b, int var) {
  while (!b.is_zero()) {
    const int db = b.degree_in(var);
    const Rational lcb = leading_coefficient_in(b, var).constant_value();
    while (!a.is_zero() && a.degree_in(var) >= db) {
      const int da = a.degree_in(var);
      const Rational lca = leading_coefficient_in(a, var).constant_value();
      a -= (lca / lcb) * var_power(a.num_vars(), var, da - db) * b;
    }
    std::swap(a, b);
  }
  return make_monic(a);
}

MPoly content_in(const MPoly& p, int var);

MPoly gcd_rec(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return MPoly::constant(a.num_vars(), Rational(1));
  if (a.size() == b.size() && make_monic(a) == make_monic(b)) return make_monic(a);
  const int var = main_variable(a, b);
  if (var < 0) return MPoly::constant(a.num_vars(), Rational(1));
  if (!a.involves(var)) return gcd_rec(a, content_in(b, var));
  if (!b.involves(var)) return gcd_rec(content_in(a, var), b);
  if (!involves_below(a, var) && !involves_below(b, var)) {
    return univariate_gcd(a, b, var);
  }

  // Subresultant PRS over Q[t1..t(var-1)].
  MPoly ca = content_in(a, var);
  MPoly cb = content_in(b, var);
  MPoly content_gcd = gcd_rec(ca, cb);
  MPoly pa = divide_exact(a, ca);
  MPoly pb = divide_exact(b, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

  const int nv = a.num_vars();
  MPoly g = MPoly::constant(nv, Rational(1));
  MPoly h = MPoly::constant(nv, Rational(1));
  for (;;) {
    const int delta = pa.degree_in(var) - pb.degree_in(var);
    MPoly r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      pb = MPoly::constant(nv, Rational(1));
      break;
    }
    pa = pb;
    pb = divide_exact(r, g * pow(h, delta));
    g = leading_coefficient_in(pa, var);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_exact(pow(g, delta), pow(h, delta - 1));
    }
  }
  MPoly primitive = divide_exact(pb, content_in(pb, var));
  return make_monic(content_gcd * primitive);
}

MPoly content_in(const MPoly& p, int var) {
  MPoly acc(p.num_vars());
  for (const auto& [deg, coeff] : coefficients_in(p, var)) {
    acc = gcd_rec(acc, coeff);
    if (acc.is_constant()) break;
  }
  return acc;
}

// Heuristic gcd over Z[t1..tv]: evaluate the last active variable at a large
// integer xi, recurse, rebuild the candidate from its symmetric xi-adic digits
// and accept it only if it divides both inputs.

using ZPoly = std::map<Exponent, Integer>;

ZPoly to_z(const MPoly& p) {
  Integer l = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly out;
  for (const auto& [e, c] : p.terms()) out.emplace(e, c.get_num() * (l / c.get_den()));
  return out;
}

MPoly from_z(int num_vars, const ZPoly& p) {
  MPoly out(num_vars);
  for (const auto& [e, c] : p) out.add_term(e, Rational(c));
  return out;
}

Integer z_content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& [e, c] : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void z_divide_ground(ZPoly& p, const Integer& c) {
  if (c == 1) return;
  for (auto& [e, x] : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

void z_multiply_ground(ZPoly& p, const Integer& c) {
  if (c == 1) return;
  for (auto& [e, x] : p) x *= c;
}

Integer z_norm(const ZPoly& p) {
  Integer best = 0;
  for (const auto& [e, c] : p) best = std::max(best, Integer(abs(c)));
  return best;
}

bool z_involves(const ZPoly& p, int var) {
  return std::any_of(p.begin(), p.end(), [&](const auto& t) { return t.first[var] > 0; });
}

ZPoly z_eval(const ZPoly& p, int var, const Integer& xi) {
  std::vector<Integer> powers{Integer(1)};
  ZPoly out;
  for (const auto& [e, c] : p) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * xi);
    Exponent f = e;
    f[var] = 0;
    out[f] += c * powers[e[var]];
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

ZPoly z_interpolate(const ZPoly& h, int var, const Integer& xi) {
  const Integer half = xi / 2;
  ZPoly out;
  for (const auto& [e, c] : h) {
    Integer a = c;
    Integer r;
    for (std::uint32_t k = 0; a != 0; ++k) {
      mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) {
        Exponent f = e;
        f[var] = k;
        out.emplace(std::move(f), r);
      }
      a -= r;
      mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), xi.get_mpz_t());
    }
  }
  return out;
}

// Trial division of b by a over Z.
bool z_divides(const ZPoly& a, ZPoly b) {
  const auto& [la, ca] = *a.rbegin();
  while (!b.empty()) {
    const auto lead = std::prev(b.end());
    if (!divides(la, lead->first) || !mpz_divisible_p(lead->second.get_mpz_t(), ca.get_mpz_t())) {
      return false;
    }
    const Exponent shift = exp_sub(lead->first, la);
    Integer q;
    mpz_divexact(q.get_mpz_t(), lead->second.get_mpz_t(), ca.get_mpz_t());
    for (const auto& [e, c] : a) {
      Exponent key = exp_add(e, shift);
      auto it = b.try_emplace(std::move(key), 0).first;
      it->second -= q * c;
      if (it->second == 0) b.erase(it);
    }
  }
  return true;
}

void z_normalize_sign(ZPoly& p) {
  if (!p.empty() && p.rbegin()->second < 0) {
    for (auto& [e, c] : p) c = -c;
  }
}

// Variables with index >= active are absent. std::nullopt when the
// heuristic gives up.
std::optional<ZPoly> z_heu_gcd(ZPoly f, ZPoly g, int active) {
  if (f.empty() || g.empty()) {
    ZPoly out = f.empty() ? std::move(g) : std::move(f);
    z_normalize_sign(out);
    return out;
  }
  const Integer cf = z_content(f);
  const Integer cg = z_content(g);
  Integer c;
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  z_divide_ground(f, cf);
  z_divide_ground(g, cg);
  const Exponent zero(f.begin()->first.size(), 0);
  while (active > 0 && !z_involves(f, active - 1) && !z_involves(g, active - 1)) --active;
  if (active == 0) return ZPoly{{zero, c}};
  const int var = active - 1;

  const Integer fn = z_norm(f);
  const Integer gn = z_norm(g);
  const Integer bound = 2 * std::min(fn, gn) + 29;
  Integer xi = std::min(bound, Integer(99 * sqrt(bound)));
  const Integer lead_ratio = std::min(Integer(fn / abs(f.rbegin()->second)),
                                     Integer(gn / abs(g.rbegin()->second)));
  xi = std::max(xi, Integer(2 * lead_ratio + 2));
  for (int attempt = 0; attempt < 6; ++attempt) {
    ZPoly fe = z_eval(f, var, xi);
    ZPoly ge = z_eval(g, var, xi);
    if (!fe.empty() && !ge.empty()) {
      const std::optional<ZPoly> h = z_heu_gcd(std::move(fe), std::move(ge), var);
      if (!h) return std::nullopt;
      ZPoly candidate = z_interpolate(*h, var, xi);
      if (!candidate.empty()) {
        z_divide_ground(candidate, z_content(candidate));
        z_normalize_sign(candidate);
        if (z_divides(candidate, f) && z_divides(candidate, g)) {
          z_multiply_ground(candidate, c);
          return candidate;
        }
      }
    }
    xi = 73794 * xi * Integer(sqrt(Integer(sqrt(xi)))) / 27011;
  }
  return std::nullopt;
}

void append_rational(std::ostringstream& os, const Rational& c) {
  os << c.get_num();
  if (c.get_den() != 1) os << '/' << c.get_den();
}

}  // namespace

MPoly MPoly::constant(int num_vars, const Rational& c) {
  MPoly p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

MPoly MPoly::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) {
    throw std::out_of_range("variable index out of range");
  }
  return var_power(num_vars, index, 1);
}

MPoly MPoly::monomial(Exponent exps, const Rational& c) {
  MPoly p(static_cast<int>(exps.size()));
  p.add_term(exps, c);
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

Rational MPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

int MPoly::degree_in(int var) const {
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return static_cast<int>(d);
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  std::uint32_t best = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t s = 0;
    for (auto x : e) s += x;
    best = std::max(best, s);
  }
  return static_cast<int>(best);
}

void MPoly::add_term(const Exponent& exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != num_vars_) {
    throw std::invalid_argument("exponent vector length does not match num_vars");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::derivative(int var) const {
  MPoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    out.add_term(d, c * Rational(e[var]));
  }
  return out;
}

Rational MPoly::evaluate(std::span<const Rational> point) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    }
    acc += term;
  }
  return acc;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out(a.num_vars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      out.add_term(exp_add(ea, eb), ca * cb);
    }
  }
  return out;
}

MPoly pow(const MPoly& base, unsigned exponent) {
  MPoly result = MPoly::constant(base.num_vars(), Rational(1));
  MPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

MPoly divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact by zero polynomial");
  MPoly q(a.num_vars());
  MPoly r = a;
  const auto& [lb_exp, lb_coef] = b.leading();
  while (!r.is_zero()) {
    const auto& [lr_exp, lr_coef] = r.leading();
    if (!divides(lb_exp, lr_exp)) {
      throw std::domain_error("divide_exact: divisor does not divide dividend");
    }
    MPoly t = MPoly::monomial(exp_sub(lr_exp, lb_exp), lr_coef / lb_coef);
    q += t;
    r -= t * b;
  }
  return q;
}

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.num_vars() != b.num_vars()) {
    throw std::invalid_argument("gcd of polynomials in different rings");
  }
  if (a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant()) return gcd_rec(a, b);
  if (auto h = z_heu_gcd(to_z(a), to_z(b), a.num_vars())) return make_monic(from_z(a.num_vars(), *h));
  return gcd_rec(a, b);
}

MPoly gcd_prs(const MPoly& a, const MPoly& b) {
  if (a.num_vars() != b.num_vars()) {
    throw std::invalid_argument("gcd of polynomials in different rings");
  }
  return gcd_rec(a, b);
}

std::string MPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool is_unit_monomial =
        std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (is_unit_monomial || mag != 1) {
      append_rational(os, mag);
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << names[i];
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::vector<std::string> default_field_names(int num_vars) {
  std::vector<std::string> names;
  if (num_vars == 1) {
    names.emplace_back("t");
    return names;
  }
  for (int i = 1; i <= num_vars; ++i) names.push_back("t" + std::to_string(i));
  return names;
}

}  // namespace lindiff

namespace lindiff {

std::ostream& operator<<(std::ostream& os, const MPoly& p) {
  return os << p.to_string(default_field_names(p.num_vars()));
}

}  // namespace lindiff
