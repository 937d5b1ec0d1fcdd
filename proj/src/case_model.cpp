#include "ttstar/case_model.hpp"

#include <algorithm>
#include <numeric>

namespace ttstar {

namespace {

const std::array<CaseDescriptor, 10>& table() {
  using G = CaseGroup;
  static const std::array<CaseDescriptor, 10> t = {{
      {CaseId::k4a, 4, 4, 0, 1, {2, 2}, {{1, 3}}, {3, -2, -1, 0}, {1, 2, -3, 0}, {0, 2}, {1, 1}, G::g4},
      {CaseId::k4b, 4, 2, 3, 0, {2, 2}, {{0, 2}}, {-2, -1, 0, 3}, {2, -3, 0, 1}, {3, 1}, {1, 1}, G::g4},
      {CaseId::k5a, 5, 5, 0, 1, {2, 1}, {{1, 4}, {2, 3}}, {4, -2, -2, 0, 0}, {2, 4, -6, 0, 0}, {0, 2}, {1, 2},
       G::g5ab},
      {CaseId::k5b, 5, 3, 4, 0, {2, 1}, {{0, 3}, {1, 2}}, {-2, -2, 0, 0, 4}, {4, -6, 0, 0, 2}, {4, 1}, {1, 2},
       G::g5ab},
      {CaseId::k5c, 5, 4, 0, 1, {1, 2}, {{1, 3}, {0, 4}}, {6, -4, -2, 0, 0}, {2, 2, -4, 0, 0}, {0, 2}, {2, 1},
       G::g5cde},
      {CaseId::k5d, 5, 1, 1, 2, {1, 2}, {{2, 4}, {0, 1}}, {6, 0, -4, -2, 0}, {2, 0, 2, -4, 0}, {0, 3}, {2, 1},
       G::g5cde},
      {CaseId::k5e, 5, 2, 4, 0, {1, 2}, {{0, 2}, {3, 4}}, {-4, -2, 0, 6, 0}, {2, -4, 0, 2, 0}, {3, 1}, {2, 1},
       G::g5cde},
      {CaseId::k6a, 6, 5, 0, 1, {1, 1}, {{1, 4}, {0, 5}, {2, 3}}, {8, -4, -4, 0, 0, 0}, {4, 4, -8, 0, 0, 0},
       {0, 2}, {2, 2}, G::g6},
      {CaseId::k6b, 6, 1, 1, 2, {1, 1}, {{2, 5}, {0, 1}, {3, 4}}, {8, 0, -4, -4, 0, 0}, {4, 0, 4, -8, 0, 0},
       {0, 3}, {2, 2}, G::g6},
      {CaseId::k6c, 6, 3, 5, 0, {1, 1}, {{0, 3}, {4, 5}, {1, 2}}, {-4, -4, 0, 0, 8, 0}, {4, -8, 0, 0, 4, 0},
       {4, 1}, {2, 2}, G::g6},
  }};
  return t;
}

void check_symmetry(const CaseDescriptor& d, const std::vector<Rational>& k) {
  if (static_cast<int>(k.size()) != d.n_plus_1)
    throw SymmetryError("case " + std::string(to_string(d.id)) + " needs " + std::to_string(d.n_plus_1) +
                        " entries, got " + std::to_string(k.size()));
  for (auto [i, j] : d.symmetry)
    if (k[i] != k[j])
      throw SymmetryError("case " + std::string(to_string(d.id)) + " requires k_" + std::to_string(i) + " = k_" +
                          std::to_string(j));
}

Rational dot(const std::vector<int>& row, const std::vector<Rational>& k) {
  Rational s;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) s += Rational(row[i]) * k[i];
  return s;
}

}  // namespace

std::string_view to_string(CaseId id) {
  static constexpr std::array<std::string_view, 10> names = {"4a", "4b", "5a", "5b", "5c",
                                                             "5d", "5e", "6a", "6b", "6c"};
  return names[static_cast<int>(id)];
}

std::string_view to_string(CaseGroup g) {
  switch (g) {
    case CaseGroup::g4: return "4";
    case CaseGroup::g5ab: return "5ab";
    case CaseGroup::g5cde: return "5cde";
    case CaseGroup::g6: return "6";
  }
  return "?";
}

CaseId parse_case(std::string_view text) {
  for (CaseId id : kAllCases)
    if (to_string(id) == text) return id;
  throw std::invalid_argument("unknown case '" + std::string(text) + "' (expected one of 4a,4b,5a..5e,6a..6c)");
}

CaseGroup parse_group(std::string_view text) {
  for (CaseGroup g : kAllGroups)
    if (to_string(g) == text) return g;
  throw std::invalid_argument("unknown case group '" + std::string(text) + "'");
}

std::vector<CaseId> cases_in(CaseGroup g) {
  std::vector<CaseId> out;
  for (CaseId id : kAllCases)
    if (descriptor(id).group == g) out.push_back(id);
  return out;
}

const CaseDescriptor& descriptor(CaseId id) { return table()[static_cast<int>(id)]; }

std::vector<std::vector<int>> CaseDescriptor::classes() const {
  std::vector<int> parent(n_plus_1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [i, j] : symmetry) parent[find(i)] = find(j);
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n_plus_1, -1);
  for (int i = 0; i < n_plus_1; ++i) {
    int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

int CaseDescriptor::class_of(int index) const {
  auto cls = classes();
  for (std::size_t c = 0; c < cls.size(); ++c)
    if (std::find(cls[c].begin(), cls[c].end(), index) != cls[c].end()) return static_cast<int>(c);
  throw std::out_of_range("index outside case");
}

KVector::KVector(CaseId id, std::vector<Rational> entries) : case_(id), entries_(std::move(entries)) {
  check_symmetry(descriptor(id), entries_);
  for (const auto& k : entries_) n_ += k + Rational(1);
  if (n_.sign() <= 0) throw std::domain_error("holomorphic data must have N = n+1+sum k_i > 0");
}

KVector KVector::from_shifted(CaseId id, const std::vector<Rational>& k_plus_1) {
  std::vector<Rational> k;
  k.reserve(k_plus_1.size());
  for (const auto& x : k_plus_1) k.push_back(x - Rational(1));
  return KVector(id, std::move(k));
}

std::vector<Rational> KVector::shifted() const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const auto& k : entries_) out.push_back(k + Rational(1));
  return out;
}

bool KVector::admissible() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& k) { return k >= Rational(-1); });
}

AsymptoticData k_to_asymptotic(const KVector& k) {
  const auto& d = descriptor(k.case_id());
  return {dot(d.gamma_row, k.entries()) / k.N(), dot(d.delta_row, k.entries()) / k.N()};
}

KVector asymptotic_to_k(CaseId id, const AsymptoticData& a, const Rational& N) {
  if (N.sign() <= 0) throw std::domain_error("N must be positive");
  const auto& d = descriptor(id);
  const int n = d.n_plus_1;
  std::vector<std::vector<Rational>> m;
  std::vector<Rational> rhs;
  auto row_of = [&](const std::vector<int>& r) {
    std::vector<Rational> out(n);
    for (int i = 0; i < n; ++i) out[i] = Rational(r[i]);
    return out;
  };
  m.push_back(row_of(d.gamma_row));
  rhs.push_back(N * a.gamma);
  m.push_back(row_of(d.delta_row));
  rhs.push_back(N * a.delta);
  m.emplace_back(n, Rational(1));
  rhs.push_back(N - Rational(n));
  for (auto [i, j] : d.symmetry) {
    std::vector<Rational> r(n);
    r[i] = Rational(1);
    r[j] = Rational(-1);
    m.push_back(std::move(r));
    rhs.emplace_back(0);
  }
  auto sol = solve_linear(std::move(m), std::move(rhs));
  if (!sol) throw std::logic_error("holomorphic-data system is singular for case " + std::string(to_string(id)));
  return KVector(id, std::move(*sol));
}

bool in_region(CaseId id, const AsymptoticData& a) {
  auto [ea, eb] = descriptor(id).ab;
  return a.gamma >= Rational(-2, ea) && a.delta <= Rational(2, eb) && a.gamma - a.delta <= Rational(2);
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace ttstar
