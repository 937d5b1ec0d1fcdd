#include "ttstar/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <thread>
#include <tuple>

namespace ttstar {

namespace {

struct DictEntry {
  Rational label;
  double value;
};

// 2cos(pi j/q) for q <= 6. A root of a monic integer quadratic has degree at
// most 2, and 2cos(pi j/q) has degree phi(2q)/2 (for q>1), so this covers
// every candidate.
const std::vector<DictEntry>& cos_dictionary() {
  static const std::vector<DictEntry> dict = [] {
    std::vector<DictEntry> d;
    for (int q = 1; q <= 6; ++q)
      for (int j = 0; j <= q; ++j) {
        Rational r(j, q);
        if (std::any_of(d.begin(), d.end(), [&](const DictEntry& e) { return e.label == r; })) continue;
        d.push_back({r, 2 * std::cos(M_PI * j / q)});
      }
    return d;
  }();
  return dict;
}

const DictEntry* match_dictionary(double x) {
  for (const auto& e : cos_dictionary())
    if (std::abs(e.value - x) < 1e-9) return &e;
  return nullptr;
}

int block_index(Block b) { return static_cast<int>(b); }

// Fixed order of the four remaining interior points, as in the tables.
const std::array<Label, 4>& other_order() {
  static const std::array<Label, 4> order = {{{Rational(1, 2), Rational(1, 3)},
                                              {Rational(2, 5), Rational(1, 5)},
                                              {Rational(1, 5), Rational(2, 5)},
                                              {Rational(1, 3), Rational(1, 2)}}};
  return order;
}

// Sort key inside a block. Top edge and center line list a descending, the
// left edge lists b ascending, the diagonal lists a ascending.
Rational within_block_key(const SolutionRecord& r) {
  switch (r.block) {
    case Block::top_edge: return -r.label.a;
    case Block::left_edge: return r.label.b;
    case Block::diagonal_edge: return r.label.a;
    case Block::center_line: return -r.label.a;
    case Block::other_interior: {
      const auto& order = other_order();
      auto it = std::find(order.begin(), order.end(), r.label);
      if (it == order.end())
        throw std::logic_error("unexpected interior point (" + r.label.a.str() + "," + r.label.b.str() + ")");
      return Rational(static_cast<long>(it - order.begin()));
    }
  }
  return {};
}

bool integral_within(double s) { return std::abs(s - std::nearbyint(s)) <= 1e-6; }

}  // namespace

std::vector<CosPair> enumerate_cos_pairs() {
  std::vector<CosPair> out;
  for (int m = -4; m <= 4; ++m) {
    for (int p = -4; p <= 4; ++p) {
      const int disc = m * m + 4 * p;
      if (disc < 0) continue;
      const double sq = std::sqrt(static_cast<double>(disc));
      for (double root : {(m + sq) / 2, (m - sq) / 2}) {
        const double yf = root - m;
        if (std::abs(root) > 2 + 1e-9 || std::abs(yf) > 2 + 1e-9) continue;
        const DictEntry* ex = match_dictionary(root);
        const DictEntry* ey = match_dictionary(yf);
        if (!ex || !ey) throw std::logic_error("quadratic root outside the cosine dictionary");
        AlgReal x = cos2(ex->label);
        AlgReal y = cos2(ey->label);
        // Exact confirmation: x solves t^2 - m t - p and y = x - m.
        if (!(x * x - x * Rational(m) - AlgReal(p) == AlgReal(0)) || !(y == x - AlgReal(m)))
          throw std::logic_error("cosine dictionary match failed exact confirmation");
        bool seen = std::any_of(out.begin(), out.end(), [&](const CosPair& c) { return c.x == x && c.y == y; });
        if (!seen) out.push_back({x, y, ex->label, ey->label, m, p});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CosPair& l, const CosPair& r) {
    return std::tie(l.a_label, l.b_label) < std::tie(r.a_label, r.b_label);
  });
  return out;
}

std::vector<Label> admissible_points() {
  std::vector<Label> out;
  for (const auto& c : enumerate_cos_pairs())
    if (c.a_label + c.b_label <= Rational(1)) out.push_back({c.a_label, c.b_label});
  return out;
}

std::string_view to_string(Block b) {
  switch (b) {
    case Block::top_edge: return "top-edge";
    case Block::left_edge: return "left-edge";
    case Block::diagonal_edge: return "diagonal-edge";
    case Block::center_line: return "center-line";
    case Block::other_interior: return "other-interior";
  }
  return "?";
}

Block parse_block(std::string_view text) {
  for (Block b : kAllBlocks)
    if (to_string(b) == text) return b;
  throw std::invalid_argument("unknown block '" + std::string(text) + "'");
}

Rational center_axis(CaseGroup g) {
  switch (g) {
    case CaseGroup::g4:
    case CaseGroup::g6: return Rational(0);
    case CaseGroup::g5ab: return Rational(1);
    case CaseGroup::g5cde: return Rational(-1);
  }
  return {};
}

Block classify_block(CaseId id, const AsymptoticData& a) {
  const auto& d = descriptor(id);
  auto [ea, eb] = d.ab;
  if (a.delta == Rational(2, eb)) return Block::top_edge;
  if (a.gamma == Rational(-2, ea)) return Block::left_edge;
  if (a.gamma - a.delta == Rational(2)) return Block::diagonal_edge;
  if (a.gamma + a.delta == center_axis(d.group)) return Block::center_line;
  return Block::other_interior;
}

KVector k_from_label(CaseId id, const Label& label) {
  const auto& d = descriptor(id);
  const auto cls = d.classes();
  const int ck = d.class_of(d.kl_index.first);
  const int cl = d.class_of(d.kl_index.second);
  std::vector<Rational> shifted(d.n_plus_1);
  Rational rest = Rational(1) - label.a - label.b;
  std::vector<int> free_classes;
  for (int c = 0; c < static_cast<int>(cls.size()); ++c) {
    Rational each;
    if (c == ck)
      each = label.a / Rational(d.angle_mult.first);
    else if (c == cl)
      each = label.b / Rational(d.angle_mult.second);
    else {
      free_classes.push_back(c);
      continue;
    }
    for (int i : cls[c]) shifted[i] = each;
  }
  if (free_classes.size() != 1) throw std::logic_error("case descriptor must leave exactly one free class");
  const auto& fc = cls[free_classes.front()];
  for (int i : fc) shifted[i] = rest / Rational(static_cast<long>(fc.size()));
  return KVector::from_shifted(id, shifted);
}

SolutionRecord make_record(CaseId id, const Label& label) {
  KVector k = k_from_label(id, label);
  AsymptoticData a = k_to_asymptotic(k);
  auto s = integral(stokes_from_k(k));
  if (!s)
    throw std::logic_error("non-integral Stokes data at (" + label.a.str() + "," + label.b.str() + ") in case " +
                           std::string(to_string(id)));
  ThetaPoly tk = tk_from_k(k);
  Block block = classify_block(id, a);
  return SolutionRecord{id, label, a, *s, std::move(k), std::move(tk), block};
}

std::vector<SolutionRecord> integral_solutions(CaseId id) {
  std::vector<SolutionRecord> out;
  for (const auto& l : admissible_points()) out.push_back(make_record(id, l));
  std::vector<std::pair<Rational, std::size_t>> keys;
  for (std::size_t i = 0; i < out.size(); ++i) keys.emplace_back(within_block_key(out[i]), i);
  std::vector<std::size_t> order(out.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    int bl = block_index(out[l].block), br = block_index(out[r].block);
    if (bl != br) return bl < br;
    return keys[l].first < keys[r].first;
  });
  std::vector<SolutionRecord> sorted;
  sorted.reserve(out.size());
  for (auto i : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

std::vector<SolutionRecord> appendix_rows(CaseId id) {
  auto all = integral_solutions(id);
  if (descriptor(id).n_plus_1 % 2 != 0) return all;
  std::vector<SolutionRecord> out;
  for (auto& r : all)
    if ((r.asymptotic.gamma + r.asymptotic.delta).sign() >= 0) out.push_back(std::move(r));
  return out;
}

unsigned worker_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TTSTAR_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(std::min<long>(n, 256));
  }
  return hw;
}

namespace {

// Runs job(i) for i in [0, n) on up to worker_threads() threads.
template <class Job>
void parallel_for(std::size_t n, Job job) {
  const unsigned workers = std::min<std::size_t>(worker_threads(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<std::vector<SolutionRecord>> integral_solutions_parallel(const std::vector<CaseId>& ids) {
  std::vector<std::vector<SolutionRecord>> out(ids.size());
  parallel_for(ids.size(), [&](std::size_t i) { out[i] = integral_solutions(ids[i]); });
  return out;
}

std::vector<AsymptoticData> brute_force_integral_points(CaseId id, int max_den) {
  if (max_den < 1) throw std::invalid_argument("max_den must be positive");
  const auto& d = descriptor(id);
  auto [ea, eb] = d.ab;
  // Closed region: gamma >= -2/a, delta <= 2/b, gamma - delta <= 2.
  const Rational g_lo(-2, ea), d_hi(2, eb);
  const Rational g_hi = d_hi + Rational(2), d_lo = g_lo - Rational(2);

  struct Frac {
    long p, q;
  };
  auto fractions_in = [max_den](const Rational& lo, const Rational& hi) {
    std::vector<Frac> v;
    for (long q = 1; q <= max_den; ++q) {
      long p_lo = (lo * Rational(q)).floor().get_si(), p_hi = (hi * Rational(q)).floor().get_si() + 1;
      for (long p = p_lo; p <= p_hi; ++p) {
        if (std::gcd(p, q) != 1) continue;
        Rational r(p, q);
        if (r >= lo && r <= hi) v.push_back({p, q});
      }
    }
    std::sort(v.begin(), v.end(), [](const Frac& l, const Frac& r) { return l.p * r.q < r.p * l.q; });
    return v;
  };
  const auto gammas = fractions_in(g_lo, g_hi);
  const auto deltas = fractions_in(d_lo, d_hi);

  std::vector<std::vector<AsymptoticData>> hits(gammas.size());
  parallel_for(gammas.size(), [&](std::size_t gi) {
    const Frac g = gammas[gi];
    for (const Frac& dl : deltas) {
      // Region test in exact integer arithmetic: g - dl <= 2.
      if ((g.p * dl.q - dl.p * g.q) > 2 * g.q * dl.q) continue;
      auto [s1, s2] = stokes_float(d.group, static_cast<double>(g.p) / g.q, static_cast<double>(dl.p) / dl.q);
      // Rounding error is far below 1e-6 here, so a larger distance from
      // the nearest integer proves non-integrality.
      if (!integral_within(s1) || !integral_within(s2)) continue;
      AsymptoticData a{Rational(g.p, g.q), Rational(dl.p, dl.q)};
      if (integral(stokes_from_asymptotic(id, a))) hits[gi].push_back(a);
    }
  });
  std::vector<AsymptoticData> out;
  for (auto& h : hits) out.insert(out.end(), h.begin(), h.end());
  std::sort(out.begin(), out.end(), [](const AsymptoticData& l, const AsymptoticData& r) {
    return std::tie(l.gamma, l.delta) < std::tie(r.gamma, r.delta);
  });
  return out;
}

}  // namespace ttstar
