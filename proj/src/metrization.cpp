#include "mspace/metrization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace mspace {

double choose_eta(double c) {
  if (!(c >= 0.5) || !std::isfinite(c)) {
    std::ostringstream os;
    os << "quasimetric constant " << c << " is below 1/2";
    throw Error(Errc::ConstantTooSmall, os.str());
  }
  if (c <= 1.0) return 1.0;
  return std::min(1.0, std::log(2.0) / std::log(2.0 * c));
}

MetrizationResult chain_metric(const DistanceMatrix& rho, double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) throw Error(Errc::InvalidEta, "eta must lie in (0, 1]");

  const std::size_t n = rho.size();
  std::vector<double> hop(rho.flat().begin(), rho.flat().end());
  if (eta != 1.0)
    for (double& v : hop) v = v == 0.0 ? 0.0 : std::pow(v, eta);

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> delta(n * n, 0.0);
  std::vector<double> dist(n);
  std::vector<bool> done(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(done.begin(), done.end(), false);
    dist[s] = 0.0;
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t v = n;
      for (std::size_t x = 0; x < n; ++x)
        if (!done[x] && (v == n || dist[x] < dist[v])) v = x;
      done[v] = true;
      const double* row = hop.data() + v * n;
      for (std::size_t x = 0; x < n; ++x) {
        if (done[x]) continue;
        const double cand = dist[v] + row[x];
        if (cand < dist[x]) dist[x] = cand;
      }
    }
    for (std::size_t j = s + 1; j < n; ++j) {
      delta[s * n + j] = dist[j];
      delta[j * n + s] = dist[j];
    }
  }

  MetrizationResult out{eta, validate_matrix(n, delta, rho.labels()), 1.0, 1.0, std::nullopt};
  if (n >= 2) {
    out.ratio_min = kInf;
    out.ratio_max = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double r = delta[i * n + j] / hop[i * n + j];
        out.ratio_min = std::min(out.ratio_min, r);
        out.ratio_max = std::max(out.ratio_max, r);
      }
  }
  return out;
}

MetrizationResult metrize(const DistanceMatrix& rho, std::optional<double> c_override) {
  // a constant within the axiom tolerance of 1 counts as a metric
  const AxiomAudit report = audit(rho);
  const double audited = report.metric ? 1.0 : report.quasi_constant;
  double c = audited;
  if (c_override) {
    c = *c_override;
    if (audited > 1.0 && c < audited * (1.0 - kAxiomTolerance)) {
      std::ostringstream os;
      os << "override " << c << " is below the audited constant " << audited;
      throw Error(Errc::ConstantBelowAudit, os.str());
    }
  }
  const double eta = choose_eta(c);
  if (eta == 1.0 && report.metric) {
    // no chain beats a single hop; Dijkstra would only add rounding noise
    MetrizationResult out{1.0, rho, 1.0, 1.0, c};
    return out;
  }
  MetrizationResult out = chain_metric(rho, eta);
  out.c_used = c;
  return out;
}

}  // namespace mspace
