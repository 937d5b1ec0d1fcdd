#include "ttstar/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ttstar {

namespace {

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// t^n - 1 divided by every Phi_d with d | n, d < n. Exact over the integers
// because each divisor is monic.
std::vector<long> compute_cyclotomic(int n) {
  std::vector<Integer> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    int dd = static_cast<int>(div.size()) - 1;
    int deg = static_cast<int>(poly.size()) - 1;
    std::vector<Integer> quot(deg - dd + 1, 0);
    for (int k = deg; k >= dd; --k) {
      Integer c = poly[k];
      quot[k - dd] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dd; ++j) poly[k - dd + j] -= c * div[j];
    }
    for (int j = 0; j < dd; ++j)
      if (poly[j] != 0) throw std::logic_error("cyclotomic division left a remainder");
    poly = std::move(quot);
  }
  std::vector<long> out;
  out.reserve(poly.size());
  for (const auto& c : poly) {
    if (!c.fits_slong_p()) throw std::overflow_error("cyclotomic coefficient too large");
    out.push_back(c.get_si());
  }
  return out;
}

struct PolyCache {
  std::mutex mu;
  std::map<int, std::unique_ptr<std::vector<long>>> polys;
};

PolyCache& poly_cache() {
  static PolyCache cache;
  return cache;
}

// Reduces a coefficient vector (indices taken mod m) modulo Phi_m.
std::vector<Integer> reduce(std::vector<Integer> v, int m) {
  const auto& phi_poly = cyclotomic_polynomial(m);
  int phi = static_cast<int>(phi_poly.size()) - 1;
  if (static_cast<int>(v.size()) > m) {
    for (std::size_t i = m; i < v.size(); ++i) v[i % m] += v[i];
    v.resize(m);
  }
  for (int k = static_cast<int>(v.size()) - 1; k >= phi; --k) {
    if (v[k] == 0) continue;
    Integer c = v[k];
    for (int j = 0; j <= phi; ++j) {
      long pj = phi_poly[j];
      if (pj == 0) continue;
      if (pj > 0)
        mpz_submul_ui(v[k - phi + j].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(pj));
      else
        mpz_addmul_ui(v[k - phi + j].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-pj));
    }
  }
  v.resize(phi, 0);
  return v;
}

// If num/den (in Q(zeta_m)) lies in Q(zeta_{m/p}), returns its numerators in
// the power basis of zeta_{m/p}; den_out receives the denominator.
//
// p^2 | m: Phi_m(x) = Phi_{m/p}(x^p), so the subfield is spanned by the powers
// divisible by p.  Otherwise m = p n with gcd(p, n) = 1 and Q(zeta_m) is the
// tensor product of Q(zeta_n) and Q(zeta_p): writing zeta_m^i as
// zeta_n^{iu} zeta_p^{iv} (u p + v n = 1) and reducing in both factors, the
// element descends iff every zeta_p^j component with j >= 1 vanishes.
std::optional<std::vector<Integer>> project(const std::vector<Integer>& num, const Integer& den, int m,
                                            int p, Integer& den_out) {
  const int n = m / p;
  den_out = den;
  if (n % p == 0) {
    for (std::size_t i = 0; i < num.size(); ++i)
      if (i % p != 0 && num[i] != 0) return std::nullopt;
    std::vector<Integer> out(totient(n));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = num[i * p];
    return out;
  }
  long u = 0, v = 0;
  for (long t = 1; t < n || n == 1; ++t)
    if ((t * p) % n == 1 % n) {
      u = t;
      break;
    }
  v = (1 - u * p) / n;
  v = ((v % p) + p) % p;
  std::vector<std::vector<Integer>> part(p, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    long il = static_cast<long>(i);
    part[(il * v) % p][(il * u) % n] += num[i];
  }
  // zeta_p^{p-1} = -(1 + zeta_p + ... + zeta_p^{p-2})
  for (int k = 0; k < n; ++k) {
    if (part[p - 1][k] == 0) continue;
    for (int j = 0; j + 1 < p; ++j) part[j][k] -= part[p - 1][k];
  }
  for (int j = 1; j + 1 < p; ++j) {
    auto r = reduce(std::move(part[j]), n);
    for (const auto& c : r)
      if (c != 0) return std::nullopt;
  }
  return reduce(std::move(part[0]), n);
}

double neumaier_sum(const std::vector<double>& terms) {
  double sum = 0.0, comp = 0.0;
  for (double t : terms) {
    double s = sum + t;
    if (std::abs(sum) >= std::abs(t))
      comp += (sum - s) + t;
    else
      comp += (t - s) + sum;
    sum = s;
  }
  return sum + comp;
}

}  // namespace

int totient(int n) {
  int result = n;
  for (int p : prime_factors(n)) result -= result / p;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  auto& cache = poly_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.polys.find(n);
    if (it != cache.polys.end()) return *it->second;
  }
  std::vector<long> poly = (n == 1) ? std::vector<long>{-1, 1} : compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(cache.mu);
  auto& slot = cache.polys[n];
  if (!slot) slot = std::make_unique<std::vector<long>>(std::move(poly));
  return *slot;
}

AlgReal::AlgReal(const Rational& q) : conductor_(2), num_{q.num()}, den_(q.den()) {}

AlgReal::AlgReal(int conductor, std::vector<Integer> num, Integer den)
    : conductor_(conductor), num_(std::move(num)), den_(std::move(den)) {
  normalize();
  minimize_conductor();
}

AlgReal AlgReal::from_coefficients(int conductor, const std::vector<Rational>& coeffs) {
  if (conductor < 2 || conductor % 2 != 0) throw std::invalid_argument("AlgReal: conductor must be even and >= 2");
  Integer common = 1;
  for (const auto& c : coeffs) common = lcm(common, c.den());
  std::vector<Integer> num(conductor, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) num[i % conductor] += coeffs[i].num() * (common / coeffs[i].den());
  AlgReal x(conductor, reduce(std::move(num), conductor), common);
  if (!x.is_conjugation_fixed()) throw std::invalid_argument("AlgReal: element is not real");
  return x;
}

void AlgReal::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) g = gcd(g, c);
  }
  bool all_zero = true;
  for (const auto& c : num_)
    if (c != 0) { all_zero = false; break; }
  if (all_zero) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    den_ /= g;
    for (auto& c : num_) c /= g;
  }
}

void AlgReal::minimize_conductor() {
  bool changed = true;
  while (changed && conductor_ > 2) {
    changed = false;
    for (int p : prime_factors(conductor_)) {
      int sub = conductor_ / p;
      if (sub % 2 != 0) continue;
      Integer new_den;
      if (auto r = project(num_, den_, conductor_, p, new_den)) {
        conductor_ = sub;
        num_ = std::move(*r);
        den_ = std::move(new_den);
        normalize();
        changed = true;
        break;
      }
    }
  }
}

AlgReal AlgReal::lifted(int m) const {
  if (m % conductor_ != 0) throw std::logic_error("AlgReal::lifted: conductor does not divide target");
  if (m == conductor_) return *this;
  int step = m / conductor_;
  std::vector<Integer> v(m, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) v[(i * step) % m] += num_[i];
  AlgReal out;
  out.conductor_ = m;
  out.num_ = reduce(std::move(v), m);
  out.den_ = den_;
  return out;
}

std::vector<Rational> AlgReal::coefficients() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) out.emplace_back(c, den_);
  return out;
}

std::optional<Rational> AlgReal::as_rational() const {
  if (conductor_ != 2) return std::nullopt;
  return Rational(num_[0], den_);
}

std::optional<Integer> AlgReal::as_integer() const {
  if (conductor_ != 2 || den_ != 1) return std::nullopt;
  return num_[0];
}

double AlgReal::to_double() const {
  std::vector<double> terms;
  terms.reserve(num_.size());
  const double d = den_.get_d();
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    // cos(2 pi i / M), evaluated on the folded angle for accuracy.
    long k = static_cast<long>(i);
    long m = conductor_;
    long folded = std::min(k, m - k);
    double c = std::cos(2.0 * M_PI * static_cast<double>(folded) / static_cast<double>(m));
    terms.push_back(num_[i].get_d() / d * c);
  }
  return neumaier_sum(terms);
}

AlgReal AlgReal::conjugate() const {
  std::vector<Integer> v(conductor_, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) v[(conductor_ - static_cast<long>(i)) % conductor_] += num_[i];
  return AlgReal(conductor_, reduce(std::move(v), conductor_), den_);
}

bool AlgReal::is_conjugation_fixed() const { return conjugate() == *this; }

AlgReal& AlgReal::operator+=(const AlgReal& o) {
  int m = std::lcm(conductor_, o.conductor_);
  AlgReal a = lifted(m), b = o.lifted(m);
  std::vector<Integer> num(a.num_.size());
  for (std::size_t i = 0; i < num.size(); ++i) num[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
  *this = AlgReal(m, std::move(num), a.den_ * b.den_);
  return *this;
}

AlgReal& AlgReal::operator-=(const AlgReal& o) { return *this += -o; }

AlgReal& AlgReal::operator*=(const AlgReal& o) {
  int m = std::lcm(conductor_, o.conductor_);
  AlgReal a = lifted(m), b = o.lifted(m);
  std::vector<Integer> acc(m, 0);
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j) {
      if (b.num_[j] == 0) continue;
      mpz_addmul(acc[(i + j) % m].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  *this = AlgReal(m, reduce(std::move(acc), m), a.den_ * b.den_);
  return *this;
}

AlgReal& AlgReal::operator*=(const Rational& q) {
  for (auto& c : num_) c *= q.num();
  den_ *= q.den();
  normalize();
  if (q.is_zero()) {
    conductor_ = 2;
    num_.assign(1, 0);
    den_ = 1;
  }
  return *this;
}

AlgReal operator-(AlgReal a) {
  for (auto& c : a.num_) c = -c;
  return a;
}

std::string AlgReal::debug_string() const {
  std::ostringstream os;
  os << "[M=" << conductor_ << "] (";
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (i) os << " + ";
    os << num_[i] << "*z^" << i;
  }
  os << ")/" << den_;
  return os.str();
}

AlgReal cos2(const Rational& r) {
  // 2cos(pi p/q) = zeta_{2q}^p + zeta_{2q}^{-p}.
  Rational reduced = r.mod(Rational(2));
  Integer q = reduced.den();
  if (!q.fits_sint_p() || q > 1 << 20) throw std::overflow_error("cos2: denominator too large");
  int m = 2 * static_cast<int>(q.get_si());
  long p = reduced.num().get_si();
  std::vector<Integer> v(m, 0);
  v[p % m] += 1;
  v[(m - p % m) % m] += 1;
  return AlgReal::from_coefficients(m, [&] {
    std::vector<Rational> c;
    c.reserve(m);
    for (auto& x : v) c.emplace_back(x);
    return c;
  }());
}

}  // namespace ttstar
