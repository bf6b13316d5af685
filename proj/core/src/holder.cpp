#include "bts/holder.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace bts {

size_t common_prefix_len(const CertValue& t, const CertValue& u,
                         const BetaSpec& beta, const Limits& lim) {
  if (cert_cmp(t, u, lim) == Ordering::Equal)
    throw IdenticalInputs("common_prefix_len: t == u");
  auto in_domain = [&](const CertValue& x) {
    return cert_cmp(x, CertValue::point(Rat(0)), lim) == Ordering::Greater &&
           cert_cmp(x, CertValue::point(Rat(1)), lim) != Ordering::Greater;
  };
  if (!in_domain(t) || !in_domain(u))
    throw DomainError("common_prefix_len: arguments must lie in (0, 1]");
  size_t budget = static_cast<size_t>(lim.admissibility_depth);
  // t != u, so the expansions split after roughly log_beta(1/|t-u|)
  // digits; grow the window geometrically instead of paying for the full
  // depth up front.
  for (size_t n = 8; n / 2 < budget; n *= 2) {
    size_t take = std::min(n, budget);
    Word dt = quasi_greedy_digits(t, beta, take, lim);
    Word du = quasi_greedy_digits(u, beta, take, lim);
    for (size_t i = 0; i < take; ++i) {
      if (dt.at(i) != du.at(i)) return i;
    }
    if (take == budget) break;
  }
  throw InconclusiveAtDepth(
      "quasi-greedy expansions agree past the configured depth");
}

std::vector<Rat> geometric_offsets(const Rat& base, int count) {
  if (base <= 0 || count < 1)
    throw DomainError("offset ladder needs base > 0 and count >= 1");
  std::vector<Rat> out;
  Rat h = base;
  for (int j = 1; j <= count; ++j) {
    h /= 2;
    out.push_back(h);
  }
  return out;
}

namespace {

// Refined midpoint and width of a dimension value.
struct EtaPoint {
  Rat mid;
  Rat width;
};

EtaPoint refined_eta(const DimResult& d, const Limits& lim) {
  static const Rat kTarget = Rat(1, Int("1000000000000"));  // 1e-12
  CertValue v = d.dim.refined_to_width(kTarget, lim);
  return {v.mid(), v.width()};
}

}  // namespace

HolderEstimate holder_estimate(const BetaSpec& beta, const CertValue& t,
                               const std::vector<Rat>& offsets,
                               const Limits& lim) {
  if (offsets.empty()) throw DomainError("holder_estimate: empty offset list");
  for (size_t i = 0; i + 1 < offsets.size(); ++i) {
    if (!(offsets[i] > offsets[i + 1]) || offsets[i + 1] <= 0)
      throw DomainError("offsets must be positive and strictly decreasing");
  }
  DimResult at_t = hausdorff_dim(beta, t, lim);
  EtaPoint base = refined_eta(at_t, lim);

  HolderEstimate out;
  out.eta_t = at_t.dim;
  size_t finest_from = offsets.size() / 2;
  std::optional<double> best;
  bool finest_has_finite = false;
  for (size_t j = 0; j < offsets.size(); ++j) {
    const Rat& h = offsets[j];
    for (int sign : {+1, -1}) {
      Rat delta = sign > 0 ? h : Rat(-h);
      CertValue tp = cert_add(t, CertValue::point(delta));
      // Stay inside [0, 1).
      if (cert_cmp(tp, CertValue::point(Rat(0)), lim) == Ordering::Less)
        continue;
      if (cert_cmp(tp, CertValue::point(Rat(1)), lim) != Ordering::Less)
        continue;
      DimResult at_tp = hausdorff_dim(beta, tp, lim);
      EtaPoint ep = refined_eta(at_tp, lim);
      HolderSample sample;
      sample.offset = delta;
      Rat diff = rat_abs(ep.mid - base.mid);
      Rat threshold = 10 * std::max(ep.width, base.width);
      if (diff <= threshold) {
        sample.eta_diff = 0;
        sample.treated_zero = true;
      } else {
        sample.eta_diff = diff;
        double r = std::log(rat_double(diff)) / std::log(rat_double(h));
        sample.ratio = r;
        if (j >= finest_from) {
          finest_has_finite = true;
          if (!best || r < *best) best = r;
        }
      }
      out.samples.push_back(std::move(sample));
    }
  }
  out.infinite = !finest_has_finite;
  out.estimate = out.infinite ? std::nullopt : best;
  return out;
}

std::vector<SweepRow> eta_sweep(const BetaSpec& beta,
                                const std::vector<Rat>& grid, int jobs,
                                const Limits& lim) {
  static const Rat kLambdaTarget = Rat(1, Int("10000000000"));  // 1e-10
  std::vector<SweepRow> rows(grid.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= grid.size()) break;
      SweepRow& row = rows[i];
      row.t = grid[i];
      try {
        DimResult d = hausdorff_dim(beta, CertValue::point(grid[i]), lim);
        if (d.lambda) {
          CertValue l = d.lambda->refined_to_width(kLambdaTarget, lim);
          row.lambda = std::make_pair(l.lo(), l.hi());
        }
        CertValue e = d.dim.refined_to_width(kLambdaTarget, lim);
        row.eta = e.mid();
        row.hypothesis = hypothesis_str(d.hypothesis_main1);
        row.status = "ok";
      } catch (const Error& e) {
        row.hypothesis = "";
        row.status = e.what();
      }
    }
  };
  size_t n_workers = jobs > 0 ? static_cast<size_t>(jobs)
                              : std::max(1u, std::thread::hardware_concurrency());
  n_workers = std::min(n_workers, grid.size() == 0 ? size_t{1} : grid.size());
  std::vector<std::thread> pool;
  for (size_t w = 0; w + 1 < n_workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

}  // namespace bts
