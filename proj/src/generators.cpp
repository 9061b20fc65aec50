#include "ccs/generators.hpp"

#include <cmath>
#include <map>

namespace ccs {

GeneratorName GeneratorName::parse(const std::string& s) {
  GeneratorName g;
  if (s == "D") {
    g.kind = Kind::D;
    return g;
  }
  if (s.size() == 2 && (s[0] == 'P' || s[0] == 'K') && s[1] >= '0' &&
      s[1] <= '3') {
    g.kind = s[0] == 'P' ? Kind::P : Kind::K;
    g.mu = s[1] - '0';
    return g;
  }
  if (s.size() == 3 && s[0] == 'M' && s[1] >= '0' && s[1] <= '3' &&
      s[2] >= '0' && s[2] <= '3' && s[1] < s[2]) {
    g.kind = Kind::M;
    g.mu = s[1] - '0';
    g.nu = s[2] - '0';
    return g;
  }
  if (s.size() == 3 && s[0] == 'S' && (s[1] == 'a' || s[1] == 'b')) {
    g.ell = s[1];
    if (s[2] == '3') {
      g.kind = Kind::S3;
      return g;
    }
    if (s[2] == '+') {
      g.kind = Kind::SPlus;
      return g;
    }
    if (s[2] == '-') {
      g.kind = Kind::SMinus;
      return g;
    }
  }
  throw InvalidIndex("unknown generator name: " + s);
}

std::string GeneratorName::str() const {
  switch (kind) {
    case Kind::D:
      return "D";
    case Kind::P:
      return "P" + std::to_string(mu);
    case Kind::K:
      return "K" + std::to_string(mu);
    case Kind::M:
      return "M" + std::to_string(mu) + std::to_string(nu);
    case Kind::S3:
      return std::string("S") + ell + "3";
    case Kind::SPlus:
      return std::string("S") + ell + "+";
    case Kind::SMinus:
      return std::string("S") + ell + "-";
  }
  return "?";
}

namespace {

const cplx I(0.0, 1.0);

// z^mu as a polynomial (index raised with eta).
Polynomial z_upper(int mu) {
  return Polynomial::variable(mu) * cplx(eta(mu, mu));
}

Polynomial euler(const Polynomial& p) {
  Polynomial r;
  for (int mu = 0; mu < 4; ++mu)
    r += Polynomial::variable(mu) * p.derivative(mu);
  return r;
}

Polynomial dil_diff(const Polynomial& p, int lambda) {
  return euler(p) + p * cplx(static_cast<double>(lambda));
}

// M^{mu nu} = z^mu d^nu - z^nu d^mu (antisymmetric, any pair).
Polynomial m_diff(int mu, int nu, const Polynomial& p) {
  return z_upper(mu) * p.derivative(nu) - z_upper(nu) * p.derivative(mu);
}

Polynomial k_diff(int mu, const Polynomial& p, int lambda) {
  return det_poly_z() * p.derivative(mu) -
         z_upper(mu) * dil_diff(p, lambda) * 2.0;
}

// S_{ell j} = (M^{0j} -/+ i M^{kl}) / 2 with (j,k,l) cyclic; '-' for a.
Polynomial s_diff(char ell, int j, const Polynomial& p) {
  static const int cyc[4][2] = {{0, 0}, {2, 3}, {3, 1}, {1, 2}};
  cplx sgn = ell == 'a' ? -I : I;
  return (m_diff(0, j, p) + m_diff(cyc[j][0], cyc[j][1], p) * sgn) * 0.5;
}

}  // namespace

Polynomial apply_generator_diff(const GeneratorName& g, const Polynomial& p,
                                int lambda) {
  using K = GeneratorName::Kind;
  switch (g.kind) {
    case K::D:
      return dil_diff(p, lambda);
    case K::P:
      return p.derivative(g.mu);
    case K::K:
      return k_diff(g.mu, p, lambda);
    case K::M:
      return m_diff(g.mu, g.nu, p);
    case K::S3:
      return s_diff(g.ell, 3, p);
    case K::SPlus:
      // Sa+ = Sa1 - i Sa2, Sb+ = Sb1 + i Sb2.
      return s_diff(g.ell, 1, p) +
             s_diff(g.ell, 2, p) * (g.ell == 'a' ? -I : I);
    case K::SMinus:
      return s_diff(g.ell, 1, p) +
             s_diff(g.ell, 2, p) * (g.ell == 'a' ? I : -I);
  }
  throw InvalidIndex("unreachable generator kind");
}

namespace {

// C with the printed arguments; j = 0 takes the (vanishing) limit.
double coeff_c_lim(int two_j, int m, int two_qa, int two_qb, int lambda) {
  if (two_j == 0) return 0.0;
  double fa = 0.5 * (two_j + two_qa);
  double fb = 0.5 * (two_j + two_qb);
  double num = fa * fb * m * (lambda + m - 2);
  if (num <= 0.0) return 0.0;
  return std::sqrt(num / (two_j * (two_j + 1.0)));
}

}  // namespace

double coeff_C(int two_j, int m, int two_qa, int two_qb, int lambda) {
  if (two_j == 0) throw InvalidSpin("C coefficient undefined at j = 0");
  return coeff_c_lim(two_j, m, two_qa, two_qb, lambda);
}

namespace {

using RowMap = std::map<BasisIndex, cplx>;

void add_target(RowMap& row, const BasisIndex& idx, cplx c) {
  if (std::abs(c) < 1e-15) return;
  if (!idx.in_lattice())
    throw InvalidIndex("nonzero coefficient on out-of-lattice target");
  row[idx] += c;
  if (std::abs(row[idx]) < 1e-15) row.erase(idx);
}

RowMap p_row(int mu, const BasisIndex& s) {
  int tj = s.two_j, m = s.m, qa = s.two_qa, qb = s.two_qb, l = s.lambda;
  int mm = m + tj + 1;  // the printed m + 2j + 1 slot
  RowMap r;
  auto T = [&](int dja, int dm, int dqa, int dqb, cplx c) {
    add_target(r, {l, tj + dja, m + dm, qa + dqa, qb + dqb}, c);
  };
  switch (mu) {
    case 0:
      T(-1, 0, -1, -1, coeff_c_lim(tj, mm, qa, qb, l));
      T(+1, -1, -1, -1, coeff_c_lim(tj + 1, m, -qa + 1, -qb + 1, l));
      T(-1, 0, +1, +1, coeff_c_lim(tj, mm, -qa, -qb, l));
      T(+1, -1, +1, +1, coeff_c_lim(tj + 1, m, qa + 1, qb + 1, l));
      break;
    case 1:
      T(-1, 0, +1, -1, coeff_c_lim(tj, mm, -qa, qb, l));
      T(+1, -1, +1, -1, -coeff_c_lim(tj + 1, m, qa + 1, -qb + 1, l));
      T(-1, 0, -1, +1, coeff_c_lim(tj, mm, qa, -qb, l));
      T(+1, -1, -1, +1, -coeff_c_lim(tj + 1, m, -qa + 1, qb + 1, l));
      break;
    case 2:
      T(-1, 0, +1, -1, I * coeff_c_lim(tj, mm, -qa, qb, l));
      T(+1, -1, +1, -1, -I * coeff_c_lim(tj + 1, m, qa + 1, -qb + 1, l));
      T(-1, 0, -1, +1, -I * coeff_c_lim(tj, mm, qa, -qb, l));
      T(+1, -1, -1, +1, I * coeff_c_lim(tj + 1, m, -qa + 1, qb + 1, l));
      break;
    case 3:
      T(-1, 0, -1, -1, coeff_c_lim(tj, mm, qa, qb, l));
      T(+1, -1, -1, -1, coeff_c_lim(tj + 1, m, -qa + 1, -qb + 1, l));
      T(-1, 0, +1, +1, -coeff_c_lim(tj, mm, -qa, -qb, l));
      T(+1, -1, +1, +1, -coeff_c_lim(tj + 1, m, qa + 1, qb + 1, l));
      break;
    default:
      throw InvalidIndex("P index out of range");
  }
  return r;
}

RowMap k_row(int mu, const BasisIndex& s) {
  int tj = s.two_j, m = s.m, qa = s.two_qa, qb = s.two_qb, l = s.lambda;
  // The spin-raising terms carry m + 2j + 2, the adjoint of the p_row
  // slot read from the target side.
  int mm = m + tj + 2;
  RowMap r;
  auto T = [&](int dja, int dm, int dqa, int dqb, cplx c) {
    add_target(r, {l, tj + dja, m + dm, qa + dqa, qb + dqb}, c);
  };
  switch (mu) {
    case 0:
      T(-1, +1, -1, -1, -coeff_c_lim(tj, m + 1, qa, qb, l));
      T(-1, +1, +1, +1, -coeff_c_lim(tj, m + 1, -qa, -qb, l));
      T(+1, 0, -1, -1, -coeff_c_lim(tj + 1, mm, -qa + 1, -qb + 1, l));
      T(+1, 0, +1, +1, -coeff_c_lim(tj + 1, mm, qa + 1, qb + 1, l));
      break;
    case 1:
      T(+1, 0, -1, +1, coeff_c_lim(tj + 1, mm, -qa + 1, qb + 1, l));
      T(+1, 0, +1, -1, coeff_c_lim(tj + 1, mm, qa + 1, -qb + 1, l));
      T(-1, +1, -1, +1, -coeff_c_lim(tj, m + 1, qa, -qb, l));
      T(-1, +1, +1, -1, -coeff_c_lim(tj, m + 1, -qa, qb, l));
      break;
    case 2:
      T(+1, 0, -1, +1, -I * coeff_c_lim(tj + 1, mm, -qa + 1, qb + 1, l));
      T(+1, 0, +1, -1, I * coeff_c_lim(tj + 1, mm, qa + 1, -qb + 1, l));
      T(-1, +1, -1, +1, I * coeff_c_lim(tj, m + 1, qa, -qb, l));
      T(-1, +1, +1, -1, -I * coeff_c_lim(tj, m + 1, -qa, qb, l));
      break;
    case 3:
      T(+1, 0, +1, +1, coeff_c_lim(tj + 1, mm, qa + 1, qb + 1, l));
      T(+1, 0, -1, -1, -coeff_c_lim(tj + 1, mm, -qa + 1, -qb + 1, l));
      T(-1, +1, +1, +1, coeff_c_lim(tj, m + 1, -qa, -qb, l));
      T(-1, +1, -1, -1, -coeff_c_lim(tj, m + 1, qa, qb, l));
      break;
    default:
      throw InvalidIndex("K index out of range");
  }
  return r;
}

RowMap s_row(const GeneratorName& g, const BasisIndex& s) {
  using K = GeneratorName::Kind;
  int tj = s.two_j;
  int tq = g.ell == 'a' ? s.two_qa : s.two_qb;
  RowMap r;
  auto shift = [&](int dq) {
    BasisIndex t = s;
    (g.ell == 'a' ? t.two_qa : t.two_qb) += dq;
    return t;
  };
  if (g.kind == K::S3) {
    add_target(r, s, 0.5 * tq);
  } else if (g.kind == K::SPlus) {
    double c = std::sqrt(0.5 * (tj - tq) * (0.5 * (tj + tq) + 1.0));
    add_target(r, shift(+2), c);
  } else {
    double c = std::sqrt(0.5 * (tj + tq) * (0.5 * (tj - tq) + 1.0));
    add_target(r, shift(-2), c);
  }
  return r;
}

void row_accumulate(RowMap& dst, const RowMap& src, cplx scale) {
  for (const auto& [idx, c] : src) add_target(dst, idx, scale * c);
}

RowMap m_row(int mu, int nu, const BasisIndex& s);

// S_{ell 1} and S_{ell 2} from the ladder rows.
RowMap s_cartesian_row(char ell, int comp, const BasisIndex& s) {
  GeneratorName plus{GeneratorName::Kind::SPlus, 0, 0, ell};
  GeneratorName minus{GeneratorName::Kind::SMinus, 0, 0, ell};
  RowMap rp = s_row(plus, s), rm = s_row(minus, s), r;
  if (comp == 1) {
    row_accumulate(r, rp, 0.5);
    row_accumulate(r, rm, 0.5);
  } else {
    // Sa2 = i(Sa+ - Sa-)/2, Sb2 = -i(Sb+ - Sb-)/2.
    cplx f = (ell == 'a' ? I : -I) * 0.5;
    row_accumulate(r, rp, f);
    row_accumulate(r, rm, -f);
  }
  return r;
}

RowMap s_component_row(char ell, int comp, const BasisIndex& s) {
  if (comp == 3)
    return s_row({GeneratorName::Kind::S3, 0, 0, ell}, s);
  return s_cartesian_row(ell, comp, s);
}

RowMap m_row(int mu, int nu, const BasisIndex& s) {
  RowMap r;
  if (mu == 0) {
    // M^{0j} = S_{aj} + S_{bj}.
    row_accumulate(r, s_component_row('a', nu, s), 1.0);
    row_accumulate(r, s_component_row('b', nu, s), 1.0);
    return r;
  }
  // M^{kl} (cyclic j,k,l) = i(S_{aj} - S_{bj}); M^{13} = -M^{31}.
  int j;
  cplx sgn = 1.0;
  if (mu == 1 && nu == 2) j = 3;
  else if (mu == 2 && nu == 3) j = 1;
  else if (mu == 1 && nu == 3) {
    j = 2;
    sgn = -1.0;
  } else
    throw InvalidIndex("M pair must satisfy mu < nu");
  row_accumulate(r, s_component_row('a', j, s), sgn * I);
  row_accumulate(r, s_component_row('b', j, s), -sgn * I);
  return r;
}

MatrixElementRow to_row(const BasisIndex& s, const RowMap& m) {
  MatrixElementRow out;
  out.source = s;
  for (const auto& [idx, c] : m) out.targets.emplace_back(idx, c);
  return out;
}

}  // namespace

MatrixElementRow generator_matrix_elements(const GeneratorName& g,
                                           const BasisIndex& idx) {
  idx.validate();
  using K = GeneratorName::Kind;
  switch (g.kind) {
    case K::D: {
      RowMap r;
      add_target(r, idx,
                 static_cast<double>(idx.two_j + 2 * idx.m + idx.lambda));
      return to_row(idx, r);
    }
    case K::P:
      return to_row(idx, p_row(g.mu, idx));
    case K::K:
      return to_row(idx, k_row(g.mu, idx));
    case K::M:
      return to_row(idx, m_row(g.mu, g.nu, idx));
    case K::S3:
    case K::SPlus:
    case K::SMinus:
      return to_row(idx, s_row(g, idx));
  }
  throw InvalidIndex("unreachable generator kind");
}

QuadraticName parse_quadratic(const std::string& s) {
  if (s == "MM") return QuadraticName::MM;
  if (s == "P2" || s == "PP") return QuadraticName::PP;
  if (s == "K2" || s == "KK") return QuadraticName::KK;
  if (s == "KP") return QuadraticName::KP;
  if (s == "PK") return QuadraticName::PK;
  if (s == "D2" || s == "DD") return QuadraticName::DD;
  throw InvalidIndex("unknown quadratic name: " + s);
}

MatrixElementRow quadratic_action(QuadraticName q, const BasisIndex& idx) {
  idx.validate();
  double j = 0.5 * idx.two_j;
  double m = idx.m;
  double l = idx.lambda;
  RowMap r;
  BasisIndex t = idx;
  switch (q) {
    case QuadraticName::MM:
      add_target(r, idx, -8.0 * j * (j + 1.0));
      break;
    case QuadraticName::PP:
      t.m -= 1;
      add_target(r, t,
                 4.0 * std::sqrt(m * (2 * j + m + 1) * (l + m - 2) *
                                 (l + 2 * j + m - 1)));
      break;
    case QuadraticName::KK:
      t.m += 1;
      add_target(r, t,
                 4.0 * std::sqrt((m + 1) * (2 * j + m + 2) * (l + m - 1) *
                                 (l + 2 * j + m)));
      break;
    case QuadraticName::KP:
      add_target(r, idx,
                 -4.0 * (2 * j * j + m * (m + l - 2) + j * (2 * m + l - 1)));
      break;
    case QuadraticName::PK:
      add_target(r, idx,
                 -4.0 * (2 * j * j + (m + 2) * (m + l) + j * (2 * m + l + 3)));
      break;
    case QuadraticName::DD: {
      double d = idx.two_j + 2 * idx.m + idx.lambda;
      add_target(r, idx, d * d);
      break;
    }
  }
  return to_row(idx, r);
}

namespace {

double diagonal_of(const MatrixElementRow& row) {
  for (const auto& [idx, c] : row.targets)
    if (idx == row.source) return c.real();
  return 0.0;
}

}  // namespace

double casimir2(const BasisIndex& idx) {
  double dd = diagonal_of(quadratic_action(QuadraticName::DD, idx));
  double mm = diagonal_of(quadratic_action(QuadraticName::MM, idx));
  double kp = diagonal_of(quadratic_action(QuadraticName::KP, idx));
  double pk = diagonal_of(quadratic_action(QuadraticName::PK, idx));
  double c2 = dd - 0.5 * mm + 0.5 * (kp + pk);
  double expect = static_cast<double>(idx.lambda) * (idx.lambda - 4);
  if (std::abs(c2 - expect) > 1e-9)
    throw DomainViolation("Casimir assembly deviates from lambda(lambda-4)");
  return c2;
}

namespace {

struct SymbolContext {
  double F, S, l;
  cplx d;
  std::array<cplx, 4> zl;  // z_mu
  cplx zu(int mu) const { return eta(mu, mu) * zl[mu]; }

  SymbolContext(const CartanPoint& z, int lambda) {
    if (lambda < 2)
      throw InvalidScaleDimension("symbols require lambda >= 2");
    F = (Mat2::identity() - z.Z.adjoint() * z.Z).det().real();
    S = (z.Z.adjoint() * z.Z).trace().real();
    d = z.Z.det();
    zl = z_coords(z.Z);
    l = lambda;
  }

  cplx sym_D() const { return l * (1.0 - std::norm(d)) / F; }
  cplx sym_P(int mu) const {
    return 2.0 * l * (std::conj(zl[mu]) - std::conj(d) * zu(mu)) / F;
  }
  cplx sym_K(int mu) const {
    return d * sym_P(mu) - 2.0 * zu(mu) * sym_D();
  }
  cplx sym_M(int mu, int nu) const {
    return zu(mu) * sym_P(nu) - zu(nu) * sym_P(mu);
  }
  cplx sym_DD() const {
    cplx sd = sym_D();
    return (l + 1.0) / l * sd * sd - l * (1.0 + std::norm(d)) / F;
  }
  cplx sym_PP() const { return 4.0 * l * (l - 1.0) * std::conj(d) / F; }
  cplx sym_KK() const { return 4.0 * l * (l - 1.0) * d / F; }
  cplx sym_PK() const {
    cplx sd = sym_D();
    return 2.0 * (l * (l - 3.0 + S + (1.0 + l) * std::norm(d)) / F -
                  (l + 1.0) / l * sd * sd);
  }
  cplx sym_KP() const { return sym_PK() + 8.0 * sym_D(); }
  cplx sym_MM() const {
    return 2.0 * sym_DD() + sym_KP() + sym_PK() - 2.0 * l * (l - 4.0);
  }
};

// "P2"/"K2" are reserved for the linear generators here; the quadratics
// go by "PP"/"KK" (parse_quadratic still accepts both in its own context).
bool is_quadratic_name(const std::string& s) {
  return s == "D2" || s == "DD" || s == "PP" || s == "KK" || s == "PK" ||
         s == "KP" || s == "MM";
}

MatrixElementRow row_for_name(const std::string& name, const BasisIndex& idx) {
  if (is_quadratic_name(name))
    return quadratic_action(parse_quadratic(name), idx);
  return generator_matrix_elements(GeneratorName::parse(name), idx);
}

}  // namespace

cplx symbol(const std::string& name, const CartanPoint& z, int lambda) {
  SymbolContext c(z, lambda);
  if (name == "D") return c.sym_D();
  if (name == "D2" || name == "DD") return c.sym_DD();
  if (name == "PP") return c.sym_PP();
  if (name == "KK") return c.sym_KK();
  if (name == "PK") return c.sym_PK();
  if (name == "KP") return c.sym_KP();
  if (name == "MM") return c.sym_MM();
  GeneratorName g = GeneratorName::parse(name);
  using K = GeneratorName::Kind;
  switch (g.kind) {
    case K::P:
      return c.sym_P(g.mu);
    case K::K:
      return c.sym_K(g.mu);
    case K::M:
      return c.sym_M(g.mu, g.nu);
    default:
      throw InvalidIndex("no closed-form symbol for " + name);
  }
}

cplx symbol_expansion_oracle(const std::string& name, const CartanPoint& z,
                             int lambda, int max_degree) {
  // <G> = F^lambda sum_i conj(phi_i(Z)) (G phi_i)(Z); targets can raise
  // the degree by two, hence the evaluator headroom.
  BasisEvaluator be(z.Z, max_degree + 2);
  cplx sum = 0.0;
  for (const auto& idx : enumerate_basis(lambda, max_degree)) {
    MatrixElementRow row = row_for_name(name, idx);
    cplx g_phi = 0.0;
    for (const auto& [t, c] : row.targets) g_phi += c * be.eval(t);
    sum += std::conj(be.eval(idx)) * g_phi;
  }
  double F = (Mat2::identity() - z.Z.adjoint() * z.Z).det().real();
  return std::pow(F, lambda) * sum;
}

cplx symbol_product_oracle(const std::string& n1, const std::string& n2,
                           const CartanPoint& z, int lambda, int max_degree) {
  BasisEvaluator be(z.Z, max_degree + 4);
  cplx sum = 0.0;
  for (const auto& idx : enumerate_basis(lambda, max_degree)) {
    MatrixElementRow row2 = row_for_name(n2, idx);
    cplx val = 0.0;
    for (const auto& [t2, c2] : row2.targets) {
      MatrixElementRow row1 = row_for_name(n1, t2);
      for (const auto& [t1, c1] : row1.targets) val += c2 * c1 * be.eval(t1);
    }
    sum += std::conj(be.eval(idx)) * val;
  }
  double F = (Mat2::identity() - z.Z.adjoint() * z.Z).det().real();
  return std::pow(F, lambda) * sum;
}

}  // namespace ccs
