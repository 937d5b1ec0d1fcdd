#include "ttstar/theta.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "ttstar/cyclotomic.hpp"

namespace ttstar {

namespace {

constexpr std::string_view kTheta = "θ";

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(std::string_view tok) {
    skip_ws();
    if (s.substr(pos, tok.size()) == tok) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  bool eat_theta() { return eat(kTheta) || eat("t"); }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse operator '" + std::string(s) + "': " + what + " at offset " +
                                std::to_string(pos));
  }
  std::string_view number_token() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    return s.substr(start, pos - start);
  }
  int exponent() {
    if (!eat("^")) return 1;
    bool braced = eat("{");
    auto tok = number_token();
    if (tok.empty() || tok.find('/') != std::string_view::npos) fail("bad exponent");
    if (braced && !eat("}")) fail("unclosed exponent");
    return std::stoi(std::string(tok));
  }
};

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::string latex_fraction(const Rational& r) {
  std::string p = r.num().get_str(), q = r.den().get_str();
  auto wrap = [](const std::string& x) { return x.size() == 1 ? x : "{" + x + "}"; };
  return "\\tfrac" + wrap(p) + wrap(q);
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(std::stoi(cur));
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("bad integer list '" + std::string(s) + "'");
    }
  }
  if (cur.empty()) throw std::invalid_argument("bad integer list '" + std::string(s) + "'");
  out.push_back(std::stoi(cur));
  return out;
}

// Multiset difference a - b; empty if b is not contained in a.
std::optional<std::vector<Rational>> multiset_minus(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i < a.size() && a[i] == b[j]) {
      ++i, ++j;
    } else {
      return std::nullopt;
    }
  }
  return out;
}

std::vector<Rational> multiset_intersection(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

ThetaPoly::ThetaPoly(std::vector<Rational> roots, Rational coeff) : coeff_(std::move(coeff)), roots_(std::move(roots)) {
  if (coeff_.is_zero()) throw std::invalid_argument("ThetaPoly: zero leading coefficient");
  std::sort(roots_.begin(), roots_.end());
}

ThetaPoly ThetaPoly::parse(std::string_view text) {
  Cursor c{text};
  Rational coeff(1);
  c.skip_ws();
  if (c.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[c.pos]))) {
    coeff = Rational::parse(c.number_token());
    c.eat("·") || c.eat("*");
  }
  std::vector<Rational> roots;
  while (!c.done()) {
    if (c.eat_theta()) {
      roots.insert(roots.end(), c.exponent(), Rational(0));
      continue;
    }
    if (!c.eat("(")) c.fail("expected factor");
    if (!c.eat_theta()) c.fail("expected theta");
    int sign;
    if (c.eat("-") || c.eat("−"))
      sign = 1;
    else if (c.eat("+"))
      sign = -1;
    else
      c.fail("expected sign");
    auto tok = c.number_token();
    if (tok.empty()) c.fail("expected root");
    Rational r = Rational::parse(tok) * Rational(sign);
    if (!c.eat(")")) c.fail("expected ')'");
    roots.insert(roots.end(), c.exponent(), r);
  }
  return ThetaPoly(std::move(roots), coeff);
}

ThetaPoly ThetaPoly::operator*(const ThetaPoly& o) const {
  std::vector<Rational> r = roots_;
  r.insert(r.end(), o.roots_.begin(), o.roots_.end());
  return ThetaPoly(std::move(r), coeff_ * o.coeff_);
}

std::string ThetaPoly::str() const {
  std::ostringstream os;
  if (!is_monic()) os << coeff_ << "·";
  if (roots_.empty() && is_monic()) return "1";
  for (std::size_t i = 0; i < roots_.size();) {
    std::size_t j = i;
    while (j < roots_.size() && roots_[j] == roots_[i]) ++j;
    const Rational& r = roots_[i];
    if (r.is_zero())
      os << "θ";
    else if (r.sign() > 0)
      os << "(θ-" << r << ")";
    else
      os << "(θ+" << r.abs() << ")";
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

std::string ThetaPoly::latex() const {
  std::ostringstream os;
  if (!is_monic()) os << coeff_ << "\\,";
  for (std::size_t i = 0; i < roots_.size();) {
    std::size_t j = i;
    while (j < roots_.size() && roots_[j] == roots_[i]) ++j;
    const Rational& r = roots_[i];
    if (r.is_zero())
      os << "\\b";
    else
      os << "(\\b" << (r.sign() > 0 ? "-" : "+") << latex_fraction(r.abs()) << ")";
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

ThetaPoly fractional_factor(int v) {
  std::vector<Rational> roots;
  for (int j = 0; j < v; ++j) roots.emplace_back(j, v);
  return ThetaPoly(std::move(roots));
}

std::string QDO::str() const { return "λ^" + std::to_string(lambda_power) + " " + theta.str() + " - z"; }

void CISpec::validate() const {
  if (weights.empty()) throw std::invalid_argument("complete intersection needs at least one weight");
  for (int w : weights)
    if (w <= 0) throw std::invalid_argument("weights must be positive");
  for (int d : degrees)
    if (d <= 0) throw std::invalid_argument("degrees must be positive");
  if (weight_sum() <= degree_sum())
    throw std::invalid_argument("sum of weights (" + std::to_string(weight_sum()) +
                                ") must exceed sum of degrees (" + std::to_string(degree_sum()) + ")");
}

int CISpec::weight_sum() const { return std::accumulate(weights.begin(), weights.end(), 0); }
int CISpec::degree_sum() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }

std::string CISpec::name() const {
  if (degrees.empty()) return "P^{" + join_ints(weights) + "}";
  return "X^{" + join_ints(weights) + "}_{" + join_ints(degrees) + "}";
}

CISpec CISpec::parse(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("bad complete intersection '" + std::string(text) + "'"); };
  if (text.size() < 3 || (text[0] != 'P' && text[0] != 'X') || text[1] != '^') fail();
  bool projective = text[0] == 'P';
  std::string_view rest = text.substr(2);
  CISpec spec;
  if (rest.empty()) fail();
  if (rest[0] == '{') {
    auto close = rest.find('}');
    if (close == std::string_view::npos) fail();
    spec.weights = parse_int_list(rest.substr(1, close - 1));
    rest = rest.substr(close + 1);
  } else {
    std::size_t n = 0;
    while (n < rest.size() && std::isdigit(static_cast<unsigned char>(rest[n]))) ++n;
    if (n == 0) fail();
    spec.weights.assign(std::stoi(std::string(rest.substr(0, n))) + 1, 1);
    rest = rest.substr(n);
  }
  if (!projective) {
    if (rest.size() < 2 || rest[0] != '_') fail();
    rest = rest.substr(1);
    if (rest[0] == '{') {
      auto close = rest.find('}');
      if (close == std::string_view::npos) fail();
      spec.degrees = parse_int_list(rest.substr(1, close - 1));
      rest = rest.substr(close + 1);
    } else {
      spec.degrees = parse_int_list(rest);
      rest = {};
    }
  }
  if (!rest.empty()) fail();
  return spec;
}

QdoConstruction qdo_construction(const CISpec& spec) {
  spec.validate();
  QdoConstruction out;
  std::vector<Rational> a_roots, b_roots;
  Rational a_coeff(1), b_coeff(1);
  for (int v : spec.weights) {
    auto f = fractional_factor(v);
    a_roots.insert(a_roots.end(), f.roots().begin(), f.roots().end());
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), v, v);
    a_coeff *= Rational(p);
  }
  for (int d : spec.degrees) {
    auto f = fractional_factor(d);
    b_roots.insert(b_roots.end(), f.roots().begin(), f.roots().end());
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), d, d);
    b_coeff *= Rational(p);
  }
  out.first = ThetaPoly(a_roots, a_coeff);
  out.second = ThetaPoly(b_roots, b_coeff);
  out.common = ThetaPoly(multiset_intersection(out.first.roots(), out.second.roots()));
  if (out.common.roots() != out.second.roots())
    throw NotReducibleError(spec.name() + ": the z-summand is not absorbed by the common factor, so the "
                            "operator is not of the form lambda^h T - z");
  auto rest = multiset_minus(out.first.roots(), out.common.roots());
  out.result = QDO{spec.weight_sum() - spec.degree_sum(), ThetaPoly(std::move(*rest))};
  return out;
}

QDO qdo_from_ci(const CISpec& spec) { return qdo_construction(spec).result; }

ThetaPoly tk_from_gaps(const std::vector<Rational>& gaps) {
  const std::size_t n = gaps.size();
  if (n == 0) throw std::invalid_argument("tk_from_gaps: empty gap list");
  std::vector<Rational> best;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> rot(n);
    for (std::size_t i = 0; i < n; ++i) rot[i] = gaps[(j + i) % n];
    if (best.empty() || rot < best) best = std::move(rot);
  }
  std::vector<Rational> roots{Rational(0)};
  Rational s;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    s += best[i];
    roots.push_back(s);
  }
  return ThetaPoly(std::move(roots));
}

ThetaPoly tk_from_k(const KVector& k) {
  if (k.N() != Rational(1)) throw std::domain_error("T_k is defined for the normalization N = 1");
  if (!k.admissible()) throw std::domain_error("T_k needs k_i >= -1 for all i");
  return tk_from_gaps(k.shifted());
}

std::vector<Rational> k_from_tk(const ThetaPoly& t, int n_plus_1) {
  if (!t.is_monic()) throw std::invalid_argument("k_from_tk: operator must be monic");
  if (t.degree() != n_plus_1)
    throw std::invalid_argument("k_from_tk: degree " + std::to_string(t.degree()) + " does not match n+1 = " +
                                std::to_string(n_plus_1));
  const auto& r = t.roots();
  if (r.front() != Rational(0)) throw std::invalid_argument("k_from_tk: smallest root must be 0");
  if (r.back() >= Rational(1)) throw std::invalid_argument("k_from_tk: roots must lie in [0,1)");
  std::vector<Rational> gaps;
  for (std::size_t i = 1; i < r.size(); ++i) gaps.push_back(r[i] - r[i - 1]);
  gaps.push_back(Rational(1) - r.back());
  std::sort(gaps.begin(), gaps.end());
  return gaps;
}

bool check_Q(const std::vector<Rational>& gaps) {
  return std::any_of(gaps.begin(), gaps.end(), [](const Rational& g) { return g.is_zero(); });
}

bool check_G(const ThetaPoly& t) {
  const auto& r = t.roots();
  if (r.size() < 2) return true;
  std::vector<Rational> exps(r.begin() + 1, r.end());
  std::vector<Rational> mirrored;
  for (const auto& x : exps) mirrored.push_back((Rational(1) - x).mod(Rational(1)));
  std::sort(exps.begin(), exps.end());
  std::sort(mirrored.begin(), mirrored.end());
  return exps == mirrored;
}

std::optional<CISpec> find_ci(const ThetaPoly& target, int max_weight_sum) {
  // The roots of fractional_factor(v) are exactly the x in [0,1) whose
  // reduced denominator divides v, so the theta part is determined by
  // r(q) = multiplicity of the roots with reduced denominator q.
  std::map<int, std::map<Rational, int>> by_den;
  for (const auto& x : target.roots()) {
    if (x.sign() < 0 || x >= Rational(1)) return std::nullopt;
    if (!x.den().fits_sint_p()) return std::nullopt;
    by_den[static_cast<int>(x.den().get_si())][x] += 1;
  }
  std::map<int, int> r;
  for (const auto& [q, roots] : by_den) {
    if (static_cast<int>(roots.size()) != totient(q)) return std::nullopt;
    int mult = roots.begin()->second;
    for (const auto& [x, m] : roots)
      if (m != mult) return std::nullopt;
    r[q] = mult;
  }
  if (r.empty()) return std::nullopt;
  const int top = r.rbegin()->first;
  CISpec spec;
  for (int m = top; m >= 1; --m) {
    int e = 0;
    for (int k = m; k <= top; k += m) {
      auto it = r.find(k);
      if (it != r.end()) e += moebius(k / m) * it->second;
    }
    for (int i = 0; i < e; ++i) spec.weights.push_back(m);
    for (int i = 0; i < -e; ++i) spec.degrees.push_back(m);
  }
  std::sort(spec.weights.begin(), spec.weights.end());
  std::sort(spec.degrees.begin(), spec.degrees.end());
  if (spec.weights.empty() || spec.weight_sum() > max_weight_sum) return std::nullopt;
  QDO check = qdo_from_ci(spec);
  if (check.theta != target.monic()) throw std::logic_error("find_ci produced an inconsistent complete intersection");
  return spec;
}

}  // namespace ttstar
