#include "eacp/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eacp {

Polynomial::Polynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::x() {
  return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + it->to_double();
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d.push_back(coeffs_[k] * Rational(static_cast<std::int64_t>(k)));
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Rational inv = Rational(1) / leading();
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x *= inv;
  return Polynomial(std::move(c));
}

std::vector<mpz_class> Polynomial::primitive_integer_form() const {
  mpz_class denom_lcm = 1;
  for (const auto& c : coeffs_) {
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
            c.denominator().get_mpz_t());
  }
  std::vector<mpz_class> out;
  mpz_class content = 0;
  for (const auto& c : coeffs_) {
    mpz_class v = c.numerator() * (denom_lcm / c.denominator());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (content != 0) {
    if (sgn(out.back()) < 0) content = -content;
    for (auto& v : out) v /= content;
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) os << mag;
    if (k > 0) {
      if (!unit) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv_lead = Rational(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational q = rem[static_cast<std::size_t>(k)] * inv_lead;
    quot[static_cast<std::size_t>(k - db)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -=
          q * b.coefficient(static_cast<std::size_t>(j));
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

Polynomial interpolate(const std::vector<Rational>& xs,
                       const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("interpolate: size mismatch");
  }
  // Newton divided differences.
  std::vector<Rational> dd = ys;
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  Polynomial result;
  Polynomial basis = Polynomial::constant(Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    result += Polynomial::constant(dd[i]) * basis;
    basis *= Polynomial::x() - Polynomial::constant(xs[i]);
  }
  return result;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class v) {
  if (v < 0) v = -v;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0) {
      small.push_back(d);
      mpz_class other = v / d;
      if (other != d) large.push_back(std::move(other));
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// sum_i c_i p^i q^(d-i) == 0, i.e. the integer form vanishes at p/q.
bool vanishes_at(const std::vector<mpz_class>& c, const mpz_class& p,
                 const mpz_class& q) {
  mpz_class acc = 0;
  mpz_class qpow = 1;
  // Horner in p with compensating powers of q.
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * p + c[k] * qpow;
    qpow *= q;
  }
  return acc == 0;
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    Polynomial r = -divmod(a, b).second;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

std::size_t sign_changes(const std::vector<Polynomial>& chain,
                         const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational cauchy_bound(const Polynomial& p) {
  Rational m(0);
  const Rational lead = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) {
    m = std::max(m, abs(p.coefficient(static_cast<std::size_t>(k))) / lead);
  }
  return m + Rational(1);
}

// A point strictly inside (lo, hi) where p does not vanish.
Rational split_point(const Polynomial& p, const Rational& lo,
                     const Rational& hi) {
  for (std::int64_t den = 2;; ++den) {
    for (std::int64_t num = 1; num < den; ++num) {
      Rational m = lo + (hi - lo) * Rational(num, den);
      if (!p(m).is_zero()) return m;
    }
  }
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<mpz_class> c = p.primitive_integer_form();
  std::vector<Rational> roots;
  std::size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  if (shift > 0) {
    roots.emplace_back(0);
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  if (c.size() >= 2) {
    const auto ps = positive_divisors(c.front());
    const auto qs = positive_divisors(c.back());
    for (const auto& q : qs) {
      for (const auto& num : ps) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
        if (g != 1) continue;
        for (int s : {1, -1}) {
          const mpz_class signed_num = s * num;
          if (vanishes_at(c, signed_num, q)) roots.emplace_back(signed_num, q);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::size_t count_real_roots(const Polynomial& p, const Rational& lo,
                             const Rational& hi) {
  const auto chain = sturm_chain(square_free_part(p));
  const std::size_t a = sign_changes(chain, lo);
  const std::size_t b = sign_changes(chain, hi);
  return a >= b ? a - b : 0;
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p,
                                             const Rational& max_width) {
  if (p.is_zero()) {
    throw std::invalid_argument("isolate_real_roots: zero polynomial");
  }
  const Polynomial q = square_free_part(p);
  std::vector<RootInterval> out;
  if (q.degree() <= 0) return out;
  const auto chain = sturm_chain(q);
  const Rational bound = cauchy_bound(q);

  struct Work {
    Rational lo, hi;
    std::size_t vlo, vhi;
  };
  std::vector<Work> stack{
      {-bound, bound, sign_changes(chain, -bound), sign_changes(chain, bound)}};
  while (!stack.empty()) {
    Work w = stack.back();
    stack.pop_back();
    const std::size_t count = w.vlo - w.vhi;
    if (count == 0) continue;
    if (count == 1 && w.hi - w.lo <= max_width) {
      out.push_back({w.lo, w.hi});
      continue;
    }
    const Rational mid = split_point(q, w.lo, w.hi);
    const std::size_t vmid = sign_changes(chain, mid);
    // Push the upper half first so roots come out in increasing order.
    stack.push_back({mid, w.hi, vmid, w.vhi});
    stack.push_back({w.lo, mid, w.vlo, vmid});
  }
  return out;
}

}  // namespace eacp
