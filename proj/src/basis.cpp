#include "ccs/basis.hpp"

#include <cmath>

#include "ccs/intmath.hpp"

namespace ccs {

void BasisIndex::validate(int min_lambda) const {
  if (lambda < min_lambda)
    throw InvalidScaleDimension("lambda too small for this operation");
  if (two_j < 0) throw InvalidSpin("basis index requires 2j >= 0");
  if (m < 0) throw InvalidIndex("basis index requires m >= 0");
  if (std::abs(two_qa) > two_j || std::abs(two_qb) > two_j ||
      (two_j - two_qa) % 2 != 0 || (two_j - two_qb) % 2 != 0)
    throw InvalidIndex("q labels out of range for j");
}

bool BasisIndex::in_lattice() const {
  return two_j >= 0 && m >= 0 && std::abs(two_qa) <= two_j &&
         std::abs(two_qb) <= two_j && (two_j - two_qa) % 2 == 0 &&
         (two_j - two_qb) % 2 == 0;
}

std::vector<BasisIndex> enumerate_basis(int lambda, int max_degree) {
  if (lambda < 2) throw InvalidScaleDimension("basis requires lambda >= 2");
  if (max_degree < 0) throw InvalidIndex("max_degree must be >= 0");
  std::vector<BasisIndex> out;
  for (int n = 0; n <= max_degree; ++n)
    for (int tj = n % 2; tj <= n; tj += 2) {
      int m = (n - tj) / 2;
      for (int tqa = tj; tqa >= -tj; tqa -= 2)
        for (int tqb = tj; tqb >= -tj; tqb -= 2)
          out.push_back({lambda, tj, m, tqa, tqb});
    }
  return out;
}

double basis_prefactor(const BasisIndex& idx) {
  idx.validate();
  long l = idx.lambda;
  mpq_class r(mpz_class(idx.two_j + 1) * binomial(idx.m + l - 2, l - 2) *
                  binomial(idx.m + idx.two_j + l - 1, l - 2),
              l - 1);
  r.canonicalize();
  return std::sqrt(r.get_d());
}

Polynomial basis_poly(const BasisIndex& idx) {
  idx.validate();
  Polynomial det_m = Polynomial::constant(1.0);
  {
    // det in the entry variables: z11 z22 - z12 z21.
    Polynomial det;
    det.add_term({1, 0, 0, 1}, 1.0);
    det.add_term({0, 1, 1, 0}, -1.0);
    det_m = det.pow(idx.m);
  }
  Polynomial p =
      det_m * wigner_entry_poly(idx.two_j, idx.two_qa, idx.two_qb);
  return entries_to_z(p) * basis_prefactor(idx);
}

cplx basis_eval(const BasisIndex& idx, const Mat2& z) {
  idx.validate();
  WignerMatrix d = wigner_d(SpinLabel(idx.two_j), z);
  return basis_prefactor(idx) * int_pow(z.det(), idx.m) *
         d.at(idx.two_qa, idx.two_qb);
}

BasisEvaluator::BasisEvaluator(const Mat2& z, int max_degree) {
  cplx det = z.det();
  det_pow_.resize(max_degree / 2 + 1);
  det_pow_[0] = 1.0;
  for (size_t k = 1; k < det_pow_.size(); ++k)
    det_pow_[k] = det_pow_[k - 1] * det;
  wig_.reserve(max_degree + 1);
  for (int tj = 0; tj <= max_degree; ++tj)
    wig_.push_back(wigner_d(SpinLabel(tj), z));
}

cplx BasisEvaluator::eval(const BasisIndex& idx) const {
  if (idx.two_j >= static_cast<int>(wig_.size()) ||
      idx.m >= static_cast<int>(det_pow_.size()))
    throw InvalidIndex("index beyond evaluator degree");
  return basis_prefactor(idx) * det_pow_[idx.m] *
         wig_[idx.two_j].at(idx.two_qa, idx.two_qb);
}

cplx int_pow(cplx base, int n) {
  if (n < 0) return 1.0 / int_pow(base, -n);
  cplx r = 1.0;
  while (n-- > 0) r *= base;
  return r;
}

cplx bergman_kernel(const CartanPoint& z, const CartanPoint& zp, int lambda) {
  if (lambda < 2) throw InvalidScaleDimension("kernel requires lambda >= 2");
  cplx det = (Mat2::identity() - z.Z.adjoint() * zp.Z).det();
  return int_pow(det, -lambda);
}

cplx kernel_partial_sum(const CartanPoint& z, const CartanPoint& zp, int lambda,
                        int max_degree) {
  if (lambda < 2) throw InvalidScaleDimension("kernel requires lambda >= 2");
  if (max_degree < 0) throw InvalidIndex("max_degree must be >= 0");
  // sum_{qa qb} conj(phi(Z)) phi(Z') collapses to the character of
  // D^j(Z^dag Z'), so one trace per (j, m) suffices.
  Mat2 x = z.Z.adjoint() * zp.Z;
  cplx detx = x.det();
  long l = lambda;
  cplx sum = 0.0;
  for (int tj = 0; tj <= max_degree; ++tj) {
    cplx chi = wigner_character(SpinLabel(tj), x);
    cplx det_m = 1.0;
    for (int m = 0; tj + 2 * m <= max_degree; ++m) {
      mpq_class w(mpz_class(tj + 1) * binomial(m + l - 2, l - 2) *
                      binomial(m + tj + l - 1, l - 2),
                  l - 1);
      w.canonicalize();
      sum += w.get_d() * det_m * chi;
      det_m *= detx;
    }
  }
  return sum;
}

cplx kernel_partial_sum_direct(const CartanPoint& z, const CartanPoint& zp,
                               int lambda, int max_degree) {
  BasisEvaluator ez(z.Z, max_degree), ezp(zp.Z, max_degree);
  cplx sum = 0.0;
  for (const auto& idx : enumerate_basis(lambda, max_degree))
    sum += std::conj(ez.eval(idx)) * ezp.eval(idx);
  return sum;
}

cplx cs_overlap(const CartanPoint& z, const CartanPoint& zp, int lambda) {
  if (lambda < 2) throw InvalidScaleDimension("overlap requires lambda >= 2");
  double nz = (Mat2::identity() - z.Z.adjoint() * z.Z).det().real();
  double nzp = (Mat2::identity() - zp.Z.adjoint() * zp.Z).det().real();
  cplx cross = (Mat2::identity() - z.Z.adjoint() * zp.Z).det();
  return std::pow(nz * nzp, 0.5 * lambda) * int_pow(cross, -lambda);
}

Mat2 rep_action_argument(const GroupElement& g, const Mat2& z) {
  Mat2 denom = g.D.adjoint() - g.B.adjoint() * z;
  return (g.A.adjoint() * z - g.C.adjoint()) * denom.inverse();
}

cplx rep_action_eval(const GroupElement& g, const PointEvaluator& phi,
                     int lambda, const Mat2& z) {
  if (lambda < 2) throw InvalidScaleDimension("action requires lambda >= 2");
  Mat2 denom = g.D.adjoint() - g.B.adjoint() * z;
  cplx det = denom.det();
  if (std::abs(det) < 1e-14)
    throw SingularMatrix("multiplier singular at this point");
  return int_pow(det, -lambda) * phi((g.A.adjoint() * z - g.C.adjoint()) *
                                     denom.inverse());
}

std::map<BasisIndex, cplx> rep_action_coeffs(const GroupElement& g, int lambda,
                                             int max_degree) {
  if (lambda < 2) throw InvalidScaleDimension("action requires lambda >= 2");
  Mat2 w = g.B * g.D.inverse();
  cplx mult = int_pow(g.D.adjoint().det(), -lambda);
  BasisEvaluator ew(w, max_degree);
  std::map<BasisIndex, cplx> out;
  for (const auto& idx : enumerate_basis(lambda, max_degree))
    out[idx] = mult * std::conj(ew.eval(idx));
  return out;
}

namespace {

// Dense complex linear solve, Gaussian elimination with partial pivoting.
std::vector<cplx> solve_dense(std::vector<cplx> a, std::vector<cplx> b,
                              int n) {
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    if (std::abs(a[piv * n + c]) < 1e-13)
      throw SingularMatrix("degenerate basis block");
    if (piv != c) {
      for (int k = 0; k < n; ++k) std::swap(a[piv * n + k], a[c * n + k]);
      std::swap(b[piv], b[c]);
    }
    for (int r = c + 1; r < n; ++r) {
      cplx f = a[r * n + c] / a[c * n + c];
      if (f == cplx(0.0)) continue;
      for (int k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
      b[r] -= f * b[c];
    }
  }
  std::vector<cplx> x(n);
  for (int r = n - 1; r >= 0; --r) {
    cplx s = b[r];
    for (int k = r + 1; k < n; ++k) s -= a[r * n + k] * x[k];
    x[r] = s / a[r * n + r];
  }
  return x;
}

}  // namespace

std::map<BasisIndex, cplx> expand_in_basis(const Polynomial& p, int lambda) {
  std::map<BasisIndex, cplx> out;
  if (p.empty()) return out;
  int deg = p.degree();
  // Split into homogeneous components; each degree block is a square
  // system (both spaces have dimension C(n+3,3)).
  for (int n = 0; n <= deg; ++n) {
    std::vector<Polynomial::Exponents> monos;
    for (int e0 = n; e0 >= 0; --e0)
      for (int e1 = n - e0; e1 >= 0; --e1)
        for (int e2 = n - e0 - e1; e2 >= 0; --e2)
          monos.push_back({e0, e1, e2, n - e0 - e1 - e2});
    std::vector<cplx> rhs(monos.size(), 0.0);
    bool any = false;
    for (size_t r = 0; r < monos.size(); ++r) {
      rhs[r] = p.coeff(monos[r]);
      if (rhs[r] != cplx(0.0)) any = true;
    }
    if (!any) continue;
    std::vector<BasisIndex> block;
    for (const auto& idx : enumerate_basis(lambda, n))
      if (idx.degree() == n) block.push_back(idx);
    int dim = static_cast<int>(monos.size());
    if (static_cast<int>(block.size()) != dim)
      throw InvalidIndex("degree block dimension mismatch");
    std::vector<cplx> a(dim * dim, 0.0);
    std::vector<Polynomial> cols;
    cols.reserve(dim);
    for (int c = 0; c < dim; ++c) cols.push_back(basis_poly(block[c]));
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) a[r * dim + c] = cols[c].coeff(monos[r]);
    std::vector<cplx> x = solve_dense(a, rhs, dim);
    // Residual guard: reconstruct and compare.
    Polynomial rec;
    for (int c = 0; c < dim; ++c) rec += cols[c] * x[c];
    Polynomial comp;
    for (size_t r = 0; r < monos.size(); ++r) comp.add_term(monos[r], rhs[r]);
    if (rec.max_coeff_distance(comp) > 1e-9)
      throw DomainViolation("expansion residual too large");
    for (int c = 0; c < dim; ++c)
      if (std::abs(x[c]) > 1e-12) out[block[c]] = x[c];
  }
  return out;
}

// ---- disk analogue ----

void DiskIndex::validate() const {
  if (!(kappa > 0.5)) throw InvalidScaleDimension("disk requires kappa > 1/2");
  if (n < 0) throw InvalidIndex("disk index requires n >= 0");
}

double disk_basis_coeff(double kappa, int n) {
  DiskIndex{kappa, n}.validate();
  // C(2k+n-1, n) as a running product; n is small in practice.
  double c = 1.0;
  for (int k = 1; k <= n; ++k) c *= (2.0 * kappa + k - 1) / k;
  return std::sqrt(c);
}

cplx disk_overlap(cplx z, cplx zp, double kappa) {
  DiskIndex{kappa, 0}.validate();
  if (std::abs(z) >= 1.0 || std::abs(zp) >= 1.0)
    throw DomainViolation("disk point outside the unit disk");
  double nz = 1.0 - std::norm(z), nzp = 1.0 - std::norm(zp);
  return std::pow(nz * nzp, kappa) *
         std::pow(cplx(1.0) - std::conj(zp) * z, -2.0 * kappa);
}

cplx disk_partial_kernel(cplx z, cplx zp, double kappa, int max_degree) {
  DiskIndex{kappa, 0}.validate();
  cplx t = std::conj(z) * zp, tp = 1.0, sum = 0.0;
  double c = 1.0;
  for (int n = 0; n <= max_degree; ++n) {
    sum += c * tp;
    tp *= t;
    c *= (2.0 * kappa + n) / (n + 1);
  }
  return sum;
}

double disk_identity_quadrature(double kappa, int n, int radial_nodes,
                                int angular_nodes) {
  DiskIndex{kappa, n}.validate();
  // |phi_n|^2 depends on r only, so the angular integral contributes 2*pi
  // exactly; keep the trapezoid anyway as a cheap consistency layer.
  double angular = 0.0;
  for (int k = 0; k < angular_nodes; ++k) angular += 2.0 * pi / angular_nodes;

  // Radial part in u = r^2: (2k-1) * C(2k+n-1,n) * int_0^1 u^n (1-u)^{2k-2} du
  // by Gauss-Legendre on [0,1].
  int gn = radial_nodes;
  std::vector<double> node(gn), weight(gn);
  for (int i = 0; i < gn; ++i) {
    // Newton on Legendre P_gn with Chebyshev initial guess.
    double x = std::cos(pi * (i + 0.75) / (gn + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= gn; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = gn * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= gn; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = gn * (x * p1 - p0) / (x * x - 1.0);
    node[i] = 0.5 * (x + 1.0);
    weight[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  double c2 = disk_basis_coeff(kappa, n);
  c2 *= c2;
  double radial = 0.0;
  for (int i = 0; i < gn; ++i) {
    double u = node[i];
    radial += weight[i] * std::pow(u, n) * std::pow(1.0 - u, 2.0 * kappa - 2.0);
  }
  return (2.0 * kappa - 1.0) / (2.0 * pi) * c2 * angular * radial;
}

}  // namespace ccs
