#include "ttstar/corollary.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

namespace ttstar {

namespace {

std::vector<std::string_view> catalog_names(CaseGroup g) {
  switch (g) {
    case CaseGroup::g4:
      return {"P^{1,1,1,1}", "X^{1,1,1,6}_{2,3}", "X^{1,1,4}_{2}", "P^{1,3}", "P^{2,2}",
              "P^{1,3}", "X^{1,1,4}_{2}", "X^{1,1,1,6}_{2,3}", "P^{1,1,1,1}"};
    case CaseGroup::g5ab:
      return {"P^{1,1,1,1,1}", "X^{1,1,1,1,6}_{2,3}", "X^{1,1,1,4}_{2}", "P^{1,1,3}", "P^{1,2,2}",
              "P^{2,3}", "P^{1,4}", "X^{1,1,6}_{3}", "P^{1,1,1,2}"};
    case CaseGroup::g5cde:
      return {"P^{1,1,1,2}", "X^{1,1,6}_{3}", "P^{1,4}", "P^{2,3}", "P^{1,2,2}",
              "P^{1,1,3}", "X^{1,1,1,4}_{2}", "X^{1,1,1,1,6}_{2,3}", "P^{1,1,1,1,1}"};
    case CaseGroup::g6:
      return {"P^{1,1,1,1,2}", "X^{1,1,1,6}_{3}", "P^{1,1,4}", "P^{1,2,3}", "P^{2,2,2}",
              "P^{1,2,3}", "P^{1,1,4}", "X^{1,1,1,6}_{3}", "P^{1,1,1,1,2}"};
  }
  return {};
}

std::vector<Rational> unit_fractions_upto(int bound) {
  std::vector<Rational> out;
  for (int q = 1; q <= bound; ++q)
    for (int p = 0; p <= q; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  std::sort(out.begin(), out.end());
  return out;
}

struct SweepHit {
  ThetaPoly tk;
  bool integral;
  std::optional<CISpec> ci;
};

}  // namespace

std::vector<CatalogEntry> catalog(CaseGroup g) {
  std::vector<CatalogEntry> out;
  auto names = catalog_names(g);
  for (std::size_t i = 0; i < names.size(); ++i) {
    bool top = i < 5;
    out.push_back({CISpec::parse(names[i]), top ? Block::top_edge : Block::left_edge,
                   static_cast<int>(top ? i : i - 5)});
  }
  return out;
}

const SolutionRecord& catalog_record(const std::vector<SolutionRecord>& records, const CatalogEntry& e) {
  int seen = 0;
  for (const auto& r : records)
    if (r.block == e.block && seen++ == e.position) return r;
  throw std::out_of_range("catalog entry refers to a missing record");
}

bool CorollaryReport::ok() const { return first_failure() == nullptr; }

const CheckItem* CorollaryReport::first_failure() const {
  for (const auto& i : items)
    if (!i.passed) return &i;
  return nullptr;
}

ThetaPoly counterexample_operator() {
  return ThetaPoly({Rational(0), Rational(0), Rational(1, 10), Rational(9, 10)});
}

ThetaPoly a_n_operator(int n_plus_1) {
  std::vector<Rational> roots;
  for (int j = 0; j < n_plus_1; ++j) roots.emplace_back(j, n_plus_1 + 1);
  return ThetaPoly(std::move(roots));
}

CorollaryReport verify_corollary(CaseId id, int search_bound, bool inject_fault) {
  if (search_bound < 6) throw std::invalid_argument("search bound must be at least 6");
  const auto& d = descriptor(id);
  const int n1 = d.n_plus_1;
  CorollaryReport rep{id, search_bound, {}};
  const auto records = integral_solutions(id);

  // Forward direction: every catalog space yields the operator of its record.
  auto entries = catalog(d.group);
  if (inject_fault) entries.front().spec.weights.push_back(1);
  for (const auto& e : entries) {
    const auto& rec = catalog_record(records, e);
    std::string label = e.spec.name() + " -> " + std::string(to_string(e.block)) + " #" + std::to_string(e.position + 1);
    QDO expected{n1, rec.tk};
    try {
      QDO got = qdo_from_ci(e.spec);
      bool match = got == expected;
      rep.items.push_back({"catalog " + label, match,
                           match ? got.str() : "got " + got.str() + ", expected " + expected.str()});
    } catch (const std::exception& ex) {
      rep.items.push_back({"catalog " + label, false, ex.what()});
    }
  }

  // Converse sweep over symmetric k-vectors with small gap denominators.
  const auto cls = d.classes();
  const int ck = d.class_of(d.kl_index.first), cl = d.class_of(d.kl_index.second);
  int cf = 0;
  while (cf == ck || cf == cl) ++cf;
  const Rational sk(static_cast<long>(cls[ck].size())), sl(static_cast<long>(cls[cl].size())),
      sf(static_cast<long>(cls[cf].size()));
  const auto fracs = unit_fractions_upto(search_bound);
  const int max_weight_sum = search_bound * n1;

  std::vector<std::vector<SweepHit>> hits(fracs.size());
  std::vector<int> visited(fracs.size(), 0);
  auto job = [&](std::size_t xi) {
    const Rational& x = fracs[xi];
    for (const Rational& y : fracs) {
      Rational z = (Rational(1) - sk * x - sl * y) / sf;
      if (z.sign() < 0 || z.den() > search_bound) continue;
      std::vector<Rational> shifted(n1);
      for (int i : cls[ck]) shifted[i] = x;
      for (int i : cls[cl]) shifted[i] = y;
      for (int i : cls[cf]) shifted[i] = z;
      ++visited[xi];
      if (!check_Q(shifted)) continue;
      ThetaPoly tk = tk_from_gaps(shifted);
      if (!check_G(tk)) continue;
      KVector k = KVector::from_shifted(id, shifted);
      bool integral_stokes = integral(stokes_from_k(k)).has_value();
      hits[xi].push_back({tk, integral_stokes, find_ci(tk, max_weight_sum)});
    }
  };
  {
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::max(1u, std::min<unsigned>(worker_threads(), fracs.size()));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < fracs.size();) job(i);
      });
    for (std::size_t i; (i = next++) < fracs.size();) job(i);
    for (auto& t : pool) t.join();
  }

  std::map<std::string, const SweepHit*> distinct;
  for (std::size_t xi = 0; xi < fracs.size(); ++xi) {
    rep.swept += visited[xi];
    for (const auto& h : hits[xi]) {
      ++rep.qg;
      ++(h.integral ? rep.qg_integral : rep.qg_nonintegral);
      distinct.emplace(h.tk.str(), &h);
    }
  }
  const ThetaPoly cex = counterexample_operator();
  std::vector<std::string> converse_bad, forward_bad;
  for (const auto& [name, h] : distinct) {
    if (h->integral && !h->ci) forward_bad.push_back(name);
    if (!h->integral && h->ci) converse_bad.push_back(name + " matches " + h->ci->name());
    if (!h->integral) {
      rep.abstract_only.push_back(h->tk);
      if (h->tk == cex) rep.counterexample_seen = true;
    }
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
    return s;
  };
  rep.items.push_back({"converse: non-integral (Q),(G) operators match no complete intersection with weight sum <= " +
                           std::to_string(max_weight_sum),
                       converse_bad.empty(),
                       converse_bad.empty() ? std::to_string(rep.abstract_only.size()) + " distinct operators checked"
                                            : join(converse_bad)});
  rep.items.push_back({"forward: integral (Q),(G) operators come from a complete intersection", forward_bad.empty(),
                       forward_bad.empty() ? std::to_string(rep.qg_integral) + " k-vectors checked" : join(forward_bad)});

  // The counterexample itself, whenever its degree fits this case.
  if (n1 == 4) {
    auto gaps = k_from_tk(cex, 4);
    bool q = check_Q(gaps), g = check_G(cex);
    auto ci = find_ci(cex, 72);
    bool in_sweep = search_bound < 10 || rep.counterexample_seen;
    rep.items.push_back({"counterexample " + cex.str(), q && g && !ci && in_sweep,
                         std::string("(Q) ") + (q ? "holds" : "fails") + ", (G) " + (g ? "holds" : "fails") +
                             ", complete intersection with weight sum <= 72: " + (ci ? ci->name() : "none") +
                             (search_bound >= 10 ? (rep.counterexample_seen ? ", found with non-integral Stokes data"
                                                                            : ", not found in sweep")
                                                 : "")});
  }

  const ThetaPoly an = a_n_operator(n1);
  for (const auto& r : records)
    if (r.tk == an) rep.a_n_block = r.block;
  return rep;
}

}  // namespace ttstar
