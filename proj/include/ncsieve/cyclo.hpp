#ifndef NCSIEVE_CYCLO_HPP
#define NCSIEVE_CYCLO_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ncsieve {

using Rational = mpq_class;
using Integer = mpz_class;

namespace detail {

inline std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// Per-conductor data: Phi_n and the reductions of x^k for phi(n) <= k < n.
struct FieldInfo {
  int n = 1;
  int phi = 1;
  std::vector<std::int64_t> cyclo;                     // Phi_n, low degree first, monic
  std::vector<std::vector<std::int64_t>> high_powers;  // x^(phi+i) mod Phi_n
};

class FieldRegistry {
 public:
  static FieldRegistry& instance() {
    static FieldRegistry reg;
    return reg;
  }

  const std::vector<std::int64_t>& cyclotomic_poly(int n) {
    {
      std::shared_lock lock(mu_);
      auto it = polys_.find(n);
      if (it != polys_.end()) return *it->second;
    }
    // Build outside the lock; recursion needs proper divisors first.
    std::vector<std::int64_t> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d : divisors(n)) {
      if (d == n) continue;
      num = divide_exact(num, cyclotomic_poly(d));
    }
    std::unique_lock lock(mu_);
    auto [it, inserted] = polys_.emplace(n, std::make_unique<std::vector<std::int64_t>>(num));
    return *it->second;
  }

  const FieldInfo* field(int n) {
    {
      std::shared_lock lock(mu_);
      auto it = fields_.find(n);
      if (it != fields_.end()) return it->second.get();
    }
    auto info = std::make_unique<FieldInfo>();
    info->n = n;
    info->cyclo = cyclotomic_poly(n);
    info->phi = static_cast<int>(info->cyclo.size()) - 1;
    const int phi = info->phi;
    // x^phi = -sum_{j<phi} cyclo[j] x^j, then shift upward.
    std::vector<std::int64_t> cur(phi);
    for (int j = 0; j < phi; ++j) cur[j] = -info->cyclo[j];
    const int top = std::max(n, 2 * phi);
    for (int k = phi; k < top; ++k) {
      info->high_powers.push_back(cur);
      std::vector<std::int64_t> next(phi, 0);
      std::int64_t lead = cur[phi - 1];
      for (int j = phi - 1; j >= 1; --j) next[j] = cur[j - 1];
      next[0] = 0;
      for (int j = 0; j < phi; ++j) next[j] -= lead * info->cyclo[j];
      cur = std::move(next);
    }
    std::unique_lock lock(mu_);
    auto [it, inserted] = fields_.emplace(n, std::move(info));
    return it->second.get();
  }

 private:
  static std::vector<std::int64_t> divide_exact(const std::vector<std::int64_t>& a,
                                                const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> rem = a;
    const int db = static_cast<int>(b.size()) - 1;
    const int da = static_cast<int>(a.size()) - 1;
    std::vector<std::int64_t> q(da - db + 1, 0);
    for (int k = da - db; k >= 0; --k) {
      std::int64_t coef = rem[k + db];  // b is monic
      q[k] = coef;
      for (int j = 0; j <= db; ++j) rem[k + j] -= coef * b[j];
    }
    for (int j = 0; j < db; ++j)
      if (rem[j] != 0) throw std::logic_error("cyclotomic division left a remainder");
    return q;
  }

  std::shared_mutex mu_;
  std::unordered_map<int, std::unique_ptr<std::vector<std::int64_t>>> polys_;
  std::unordered_map<int, std::unique_ptr<FieldInfo>> fields_;
};

inline int canonical_conductor(int n) { return (n % 4 == 2) ? n / 2 : n; }

}  // namespace detail

inline const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  return detail::FieldRegistry::instance().cyclotomic_poly(n);
}

// Element of Q(zeta_n) in the power basis, reduced mod Phi_n.
class Cyclotomic {
 public:
  Cyclotomic() : info_(field_for(1)), c_(1) {}
  static Cyclotomic zero(int conductor) { return Cyclotomic(FieldTag{}, conductor); }
  Cyclotomic(const Rational& q) : info_(field_for(1)), c_(1, q) { c_[0].canonicalize(); }  // NOLINT
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}                   // NOLINT
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}                    // NOLINT

  static Cyclotomic from_coeffs(int conductor, std::vector<Rational> coeffs) {
    for (auto& x : coeffs) x.canonicalize();
    int n = detail::canonical_conductor(conductor);
    if (n != conductor) {
      // Rewrite in Q(zeta_{n}) via zeta_{2n} = -zeta_n^{(n+1)/2}.
      Cyclotomic out = Cyclotomic::zero(n);
      Cyclotomic z = root_of_unity(conductor, 1);
      Cyclotomic pw = Cyclotomic::zero(n);
      pw.c_[0] = 1;
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] != 0) out += pw * Cyclotomic(coeffs[j]);
        pw *= z;
      }
      return out;
    }
    Cyclotomic out = Cyclotomic::zero(n);
    out.reduce_into(coeffs);
    return out;
  }

  static Cyclotomic root_of_unity(int n, std::int64_t k) {
    if (n < 1) throw std::invalid_argument("root_of_unity: n must be positive");
    k = detail::mod_floor(k, n);
    int base = detail::canonical_conductor(n);
    if (base != n) {
      // zeta_n^k = (-1)^k zeta_base^(k(base+1)/2)
      std::int64_t e = detail::mod_floor(k * ((base + 1) / 2), base);
      Cyclotomic out = root_of_unity(base, e);
      if (k % 2 == 1) out = -out;
      return out;
    }
    Cyclotomic out = Cyclotomic::zero(n);
    const auto* info = out.info_;
    if (k < info->phi) {
      out.c_[k] = 1;
    } else {
      const auto& row = info->high_powers[k - info->phi];
      for (int j = 0; j < info->phi; ++j) out.c_[j] = row[j];
    }
    return out;
  }

  int conductor() const { return info_->n; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
      if (c_[j] != 0) return false;
    return true;
  }

  Rational rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
    return c_[0];
  }

  Cyclotomic embed(int target) const {
    target = detail::canonical_conductor(target);
    if (target == info_->n) return *this;
    if (target % info_->n != 0)
      throw std::invalid_argument("embed: conductor does not divide target");
    const int step = target / info_->n;
    Cyclotomic out = Cyclotomic::zero(target);
    std::vector<Rational> wide(static_cast<std::size_t>(step) * (c_.size() - 1) + 1);
    for (std::size_t j = 0; j < c_.size(); ++j) wide[j * step] = c_[j];
    out.reduce_into(wide);
    return out;
  }

  Cyclotomic conj() const {
    const int n = info_->n;
    if (n == 1) return *this;
    std::vector<Rational> wide(n);
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0) continue;
      wide[(n - static_cast<int>(j)) % n] += c_[j];
    }
    Cyclotomic out = Cyclotomic::zero(n);
    out.reduce_into(wide);
    return out;
  }

  Cyclotomic operator-() const {
    Cyclotomic out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    if (o.info_ == info_) {
      for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
      return *this;
    }
    int l = std::lcm(info_->n, o.info_->n);
    *this = embed(l);
    Cyclotomic b = o.embed(l);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += b.c_[j];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this += -o; }

  Cyclotomic& operator*=(const Cyclotomic& o) {
    if (o.info_ != info_) {
      int l = std::lcm(info_->n, o.info_->n);
      Cyclotomic a = embed(l);
      Cyclotomic b = o.embed(l);
      *this = a * b;
      return *this;
    }
    if (info_->phi == 1) {
      c_[0] *= o.c_[0];
      return *this;
    }
    std::vector<Rational> prod(2 * c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) {
        if (o.c_[j] == 0) continue;
        prod[i + j] += c_[i] * o.c_[j];
      }
    }
    reduce_into(prod);
    return *this;
  }

  Cyclotomic inverse() const;

  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.info_ == b.info_) return a.c_ == b.c_;
    int l = std::lcm(a.info_->n, b.info_->n);
    return a.embed(l).c_ == b.embed(l).c_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Exact text key; only comparable between values of the same conductor.
  std::string key() const {
    std::string s = std::to_string(info_->n);
    for (const auto& x : c_) {
      s += ',';
      s += x.get_str();
    }
    return s;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << c_[j];
      if (j > 0) os << "*z" << info_->n << "^" << j;
    }
    if (first) os << "0";
    return os.str();
  }

  // Numeric value for test cross-checks only.
  std::pair<double, double> approx() const {
    double re = 0, im = 0;
    const double two_pi = 6.283185307179586476925286766559;
    for (std::size_t j = 0; j < c_.size(); ++j) {
      double v = c_[j].get_d();
      re += v * std::cos(two_pi * j / info_->n);
      im += v * std::sin(two_pi * j / info_->n);
    }
    return {re, im};
  }

 private:
  struct FieldTag {};
  Cyclotomic(FieldTag, int conductor) : info_(field_for(conductor)), c_(info_->phi) {}

  static const detail::FieldInfo* field_for(int n) {
    if (n < 1) throw std::invalid_argument("conductor must be positive");
    return detail::FieldRegistry::instance().field(detail::canonical_conductor(n));
  }

  // Reduce a wide coefficient vector (degree < n or < 2 phi) into c_.
  void reduce_into(std::vector<Rational>& wide) {
    const int phi = info_->phi;
    c_.assign(phi, Rational(0));
    const int limit = static_cast<int>(wide.size());
    for (int j = 0; j < std::min(limit, phi); ++j) c_[j] = wide[j];
    for (int k = phi; k < limit; ++k) {
      if (wide[k] == 0) continue;
      std::size_t idx = static_cast<std::size_t>(k - phi);
      if (idx >= info_->high_powers.size()) throw std::logic_error("reduction degree out of range");
      const auto& row = info_->high_powers[idx];
      for (int j = 0; j < phi; ++j)
        if (row[j] != 0) c_[j] += wide[k] * row[j];
    }
  }

  const detail::FieldInfo* info_;
  std::vector<Rational> c_;
};

namespace detail {

using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Returns (q, r) with a = q*b + r.
inline std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational coef = a[k + b.size() - 1] / b.back();
    q[k] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= coef * b[j];
  }
  a.resize(b.size() - 1);
  trim(a);
  return {q, a};
}

inline QPoly poly_sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly out(std::max(a.size(), q.size() + b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  trim(out);
  return out;
}

}  // namespace detail

inline Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  if (info_->phi == 1) return Cyclotomic(Rational(1) / c_[0]);
  // Extended Euclid: find s with s*a = 1 mod Phi_n.
  detail::QPoly r0(info_->cyclo.begin(), info_->cyclo.end());
  detail::QPoly r1 = c_;
  detail::trim(r1);
  detail::QPoly s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, r] = detail::poly_divmod(r0, r1);
    detail::QPoly s2 = detail::poly_sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw std::logic_error("non-invertible element: Phi_n not irreducible?");
  }
  Rational lead = r1[0];
  for (auto& x : s1) x /= lead;
  return from_coeffs(info_->n, s1);
}

// constant * prod_d Phi_d(q)^{e_d}
struct QFactored {
  Rational constant{1};
  std::map<int, int> factors;

  bool is_polynomial() const {
    for (const auto& [d, e] : factors)
      if (e < 0) return false;
    return true;
  }

  int degree() const {
    int deg = 0;
    for (const auto& [d, e] : factors) deg += e * detail::euler_phi(d);
    return deg;
  }

  QFactored& operator*=(const QFactored& o) {
    constant *= o.constant;
    for (const auto& [d, e] : o.factors) bump(d, e);
    return *this;
  }
  QFactored& operator/=(const QFactored& o) {
    if (o.constant == 0) throw std::domain_error("QFactored division by zero constant");
    constant /= o.constant;
    for (const auto& [d, e] : o.factors) bump(d, -e);
    return *this;
  }
  friend QFactored operator*(QFactored a, const QFactored& b) { return a *= b; }
  friend QFactored operator/(QFactored a, const QFactored& b) { return a /= b; }
  friend bool operator==(const QFactored& a, const QFactored& b) {
    return a.constant == b.constant && a.factors == b.factors;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << constant;
    for (const auto& [d, e] : factors) {
      os << "*Phi" << d;
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

  // Dense integer-coefficient expansion (on demand only).
  std::vector<Rational> expand() const {
    if (!is_polynomial()) throw std::domain_error("expand: negative exponent present");
    std::vector<Rational> poly{constant};
    for (const auto& [d, e] : factors) {
      const auto& phi = cyclotomic_polynomial(d);
      for (int k = 0; k < e; ++k) {
        std::vector<Rational> next(poly.size() + phi.size() - 1);
        for (std::size_t i = 0; i < poly.size(); ++i)
          for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += poly[i] * phi[j];
        poly = std::move(next);
      }
    }
    return poly;
  }

 private:
  void bump(int d, int e) {
    int v = (factors[d] += e);
    if (v == 0) factors.erase(d);
  }
};

inline QFactored q_integer(std::int64_t a) {
  if (a < 1) throw std::invalid_argument("q_integer: argument must be positive");
  QFactored out;
  for (int d : detail::divisors(static_cast<int>(a)))
    if (d > 1) out.factors[d] = 1;
  return out;
}

struct FactoredValue {
  bool zero = false;
  Cyclotomic value;
};

// Phi_d evaluated at a primitive M-th root of unity given as an element of Q(zeta_M).
inline Cyclotomic eval_cyclotomic_at(int d, const Cyclotomic& z) {
  const auto& poly = cyclotomic_polynomial(d);
  Cyclotomic acc = Cyclotomic::zero(z.conductor());
  for (std::size_t k = poly.size(); k-- > 0;) {
    acc *= z;
    acc += Cyclotomic(static_cast<long>(poly[k]));
  }
  return acc;
}

// Evaluates f at q = zeta_n^k; zero exactly when Phi_M divides f, M the order of q.
inline FactoredValue eval_factored(const QFactored& f, int n, std::int64_t k) {
  if (!f.is_polynomial())
    throw std::domain_error("eval_factored: negative exponent, quotient was not a polynomial");
  if (n < 1) throw std::invalid_argument("eval_factored: n must be positive");
  std::int64_t kk = detail::mod_floor(k, n);
  int M = static_cast<int>(n / std::gcd<std::int64_t>(kk, n));
  FactoredValue out;
  auto it = f.factors.find(M);
  if (it != f.factors.end() && it->second > 0) {
    out.zero = true;
    out.value = Cyclotomic();
    return out;
  }
  // zeta_n^k = zeta_M^(k/g), g = n/M
  Cyclotomic z = Cyclotomic::root_of_unity(M, kk / (n / M));
  Cyclotomic val(f.constant);
  for (const auto& [d, e] : f.factors) {
    Cyclotomic phi = eval_cyclotomic_at(d, z);
    for (int j = 0; j < e; ++j) val *= phi;
  }
  out.value = val;
  return out;
}

}  // namespace ncsieve

#endif
