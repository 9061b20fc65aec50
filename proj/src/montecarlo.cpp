#include "ccs/montecarlo.hpp"

#include <cmath>
#include <omp.h>

namespace ccs {

namespace {

double uniform01(std::mt19937_64& rng) {
  return (rng() >> 11) * 0x1.0p-53;
}

std::mt19937_64 stream_rng(unsigned long long seed, int stream) {
  std::seed_seq seq{static_cast<unsigned long long>(seed),
                    static_cast<unsigned long long>(stream) + 0x9e3779b9ull};
  return std::mt19937_64(seq);
}

long stream_count(long total, int stream) {
  if (total <= stream) return 0;
  return (total - 1 - stream) / mc_streams + 1;
}

}  // namespace

Mat2 mc_propose(std::mt19937_64& rng) {
  Mat2 z;
  for (int v = 0; v < 4; ++v) {
    double r = std::sqrt(uniform01(rng));
    double th = 2.0 * pi * uniform01(rng);
    z.e[v] = cplx(r * std::cos(th), r * std::sin(th));
  }
  return z;
}

McEstimate mc_inner_product(const PointEvaluator& f, const PointEvaluator& h,
                            const McOptions& opt) {
  if (opt.lambda < 4)
    throw InvalidScaleDimension("normalized measure requires lambda >= 4");
  if (opt.samples <= 0) throw InvalidIndex("sample count must be positive");
  const double c = measure_normalization(opt.lambda);
  const double pi4 = pi * pi * pi * pi;

  cplx sum[mc_streams];
  double sumsq[mc_streams];
  long acc[mc_streams];
#pragma omp parallel for schedule(static) if (opt.parallel)
  for (int t = 0; t < mc_streams; ++t) {
    auto rng = stream_rng(opt.seed, t);
    cplx s = 0.0;
    double sq = 0.0;
    long a = 0;
    long n = stream_count(opt.samples, t);
    for (long i = 0; i < n; ++i) {
      Mat2 z = mc_propose(rng);
      Mat2 g = Mat2::identity() - z.adjoint() * z;
      double ev[2];
      {
        auto e = hermitian_eigenvalues(g);
        ev[0] = e[0];
        ev[1] = e[1];
      }
      if (ev[0] <= 0.0) continue;
      ++a;
      double w = pi4 * c * std::pow(ev[0] * ev[1], opt.lambda - 4);
      cplx v = w * std::conj(f(z)) * h(z);
      s += v;
      sq += std::norm(v);
    }
    sum[t] = s;
    sumsq[t] = sq;
    acc[t] = a;
  }
  McEstimate out;
  cplx s = 0.0;
  double sq = 0.0;
  for (int t = 0; t < mc_streams; ++t) {
    s += sum[t];
    sq += sumsq[t];
    out.accepted += acc[t];
  }
  out.samples = opt.samples;
  out.value = s / static_cast<double>(opt.samples);
  double var = sq / opt.samples - std::norm(out.value);
  out.std_error = std::sqrt(std::max(0.0, var / opt.samples));
  return out;
}

McGram mc_gram(const std::vector<BasisIndex>& basis, const McOptions& opt) {
  if (opt.lambda < 4)
    throw InvalidScaleDimension("normalized measure requires lambda >= 4");
  if (opt.samples <= 0) throw InvalidIndex("sample count must be positive");
  const int n = static_cast<int>(basis.size());
  int max_deg = 0;
  for (const auto& idx : basis) max_deg = std::max(max_deg, idx.degree());
  const double c = measure_normalization(opt.lambda);
  const double pi4 = pi * pi * pi * pi;

  std::vector<std::vector<cplx>> sum(mc_streams);
  std::vector<std::vector<double>> sumsq(mc_streams);
  std::vector<long> acc(mc_streams, 0);
#pragma omp parallel for schedule(static) if (opt.parallel)
  for (int t = 0; t < mc_streams; ++t) {
    auto rng = stream_rng(opt.seed, t);
    std::vector<cplx> s(n * n, 0.0);
    std::vector<double> sq(n * n, 0.0);
    std::vector<cplx> phi(n);
    long a = 0;
    long cnt = stream_count(opt.samples, t);
    for (long i = 0; i < cnt; ++i) {
      Mat2 z = mc_propose(rng);
      Mat2 g = Mat2::identity() - z.adjoint() * z;
      auto ev = hermitian_eigenvalues(g);
      if (ev[0] <= 0.0) continue;
      ++a;
      double w = pi4 * c * std::pow(ev[0] * ev[1], opt.lambda - 4);
      BasisEvaluator be(z, max_deg);
      for (int k = 0; k < n; ++k) phi[k] = be.eval(basis[k]);
      for (int r = 0; r < n; ++r)
        for (int col = 0; col < n; ++col) {
          cplx v = w * std::conj(phi[r]) * phi[col];
          s[r * n + col] += v;
          sq[r * n + col] += std::norm(v);
        }
    }
    sum[t] = std::move(s);
    sumsq[t] = std::move(sq);
    acc[t] = a;
  }
  McGram out;
  out.dim = n;
  out.samples = opt.samples;
  out.value.assign(n * n, 0.0);
  out.std_error.assign(n * n, 0.0);
  std::vector<double> sq(n * n, 0.0);
  for (int t = 0; t < mc_streams; ++t) {
    out.accepted += acc[t];
    for (int k = 0; k < n * n; ++k) {
      out.value[k] += sum[t][k];
      sq[k] += sumsq[t][k];
    }
  }
  for (int k = 0; k < n * n; ++k) {
    out.value[k] /= static_cast<double>(opt.samples);
    double var = sq[k] / opt.samples - std::norm(out.value[k]);
    out.std_error[k] = std::sqrt(std::max(0.0, var / opt.samples));
  }
  return out;
}

}  // namespace ccs
