#include "ccs/fock.hpp"

#include <algorithm>
#include <cmath>

#include "ccs/intmath.hpp"

namespace ccs {

namespace {
const cplx I(0.0, 1.0);
}

FockVector FockVector::vacuum(int modes) {
  FockVector v;
  v.modes = modes;
  v.amps[Occupation(modes, 0)] = 1.0;
  return v;
}

FockVector& FockVector::add(const Occupation& occ, cplx a) {
  if (static_cast<int>(occ.size()) != modes)
    throw ModeMismatch("occupation length does not match mode count");
  auto [it, inserted] = amps.try_emplace(occ, a);
  if (!inserted) it->second += a;
  if (std::abs(it->second) < amp_floor) amps.erase(it);
  return *this;
}

double FockVector::norm() const {
  double s = 0.0;
  for (const auto& [occ, a] : amps) s += std::norm(a);
  return std::sqrt(s);
}

FockVector& FockVector::scale(cplx s) {
  for (auto& [occ, a] : amps) a *= s;
  prune();
  return *this;
}

FockVector& FockVector::accumulate(const FockVector& o, cplx s) {
  if (modes == 0 && amps.empty()) modes = o.modes;
  if (o.modes != modes) throw ModeMismatch("mode counts differ");
  for (const auto& [occ, a] : o.amps) add(occ, s * a);
  return *this;
}

void FockVector::prune(double tol) {
  for (auto it = amps.begin(); it != amps.end();)
    it = std::abs(it->second) < tol ? amps.erase(it) : std::next(it);
}

double FockVector::distance(const FockVector& o) const {
  double m = 0.0;
  for (const auto& [occ, a] : amps) {
    auto it = o.amps.find(occ);
    m = std::max(m, std::abs(a - (it == o.amps.end() ? cplx(0.0) : it->second)));
  }
  for (const auto& [occ, a] : o.amps)
    if (!amps.count(occ)) m = std::max(m, std::abs(a));
  return m;
}

cplx inner(const FockVector& x, const FockVector& y) {
  if (x.modes != y.modes) throw ModeMismatch("mode counts differ");
  cplx s = 0.0;
  for (const auto& [occ, a] : x.amps) {
    auto it = y.amps.find(occ);
    if (it != y.amps.end()) s += std::conj(a) * it->second;
  }
  return s;
}

QuadraticOperator& QuadraticOperator::add_term(std::vector<int> cr,
                                               std::vector<int> an, cplx c) {
  if (cr.size() > 2 || an.size() > 2)
    throw InvalidIndex("operator is not quadratic");
  if (std::abs(c) < 1e-15) return *this;
  terms.push_back({std::move(cr), std::move(an), c});
  return *this;
}

QuadraticOperator QuadraticOperator::operator+(
    const QuadraticOperator& o) const {
  if (modes != o.modes) throw ModeMismatch("mode counts differ");
  QuadraticOperator r = *this;
  r.constant += o.constant;
  r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
  return r;
}

QuadraticOperator QuadraticOperator::operator*(cplx s) const {
  QuadraticOperator r = *this;
  r.constant *= s;
  for (auto& t : r.terms) t.coeff *= s;
  return r;
}

FockVector apply(const QuadraticOperator& op, const FockVector& v) {
  if (op.modes != v.modes) throw ModeMismatch("mode counts differ");
  FockVector out;
  out.modes = v.modes;
  if (op.constant != cplx(0.0)) out.accumulate(v, op.constant);
  for (const auto& t : op.terms) {
    for (const auto& [occ, a] : v.amps) {
      Occupation o = occ;
      double f = 1.0;
      bool dead = false;
      for (int m : t.annihilate) {
        if (o[m] == 0) {
          dead = true;
          break;
        }
        f *= std::sqrt(static_cast<double>(o[m]));
        o[m] -= 1;
      }
      if (dead) continue;
      for (int m : t.create) {
        o[m] += 1;
        f *= std::sqrt(static_cast<double>(o[m]));
      }
      out.add(o, t.coeff * a * f);
    }
  }
  return out;
}

FockVector apply_commutator(const QuadraticOperator& x,
                            const QuadraticOperator& y, const FockVector& v) {
  FockVector r = apply(x, apply(y, v));
  r.accumulate(apply(y, apply(x, v)), -1.0);
  return r;
}

namespace {

struct ZComp {
  int mode;
  bool dag;  // true if the column entry is a creation operator
};

// Z^dag (X Gamma) Z for one column of Z, normal ordered.
void sandwich_column(QuadraticOperator& op, const std::array<ZComp, 4>& col,
                     const Mat4& x) {
  static const double gam[4] = {-1.0, -1.0, 1.0, 1.0};
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) {
      cplx c = x(r, s) * gam[s];
      if (std::abs(c) < 1e-15) continue;
      ZComp left{col[r].mode, !col[r].dag};  // conjugated
      ZComp right = col[s];
      if (!left.dag && right.dag) {
        if (left.mode == right.mode) {
          op.add_term({left.mode}, {left.mode}, c);
          op.constant += c;
        } else {
          op.add_term({right.mode}, {left.mode}, c);
        }
      } else if (left.dag && right.dag) {
        op.add_term({left.mode, right.mode}, {}, c);
      } else if (!left.dag && !right.dag) {
        op.add_term({}, {left.mode, right.mode}, c);
      } else {
        op.add_term({left.mode}, {right.mode}, c);
      }
    }
}

const std::array<ZComp, 4> col_4mode = {
    ZComp{0, true}, ZComp{1, true}, ZComp{2, false}, ZComp{3, false}};
// Eq. 61 columns: (a0+, a1+, b0, b2) and (a2+, a3+, b1, b3).
const std::array<ZComp, 4> col_8mode[2] = {
    {ZComp{0, true}, ZComp{1, true}, ZComp{4, false}, ZComp{6, false}},
    {ZComp{2, true}, ZComp{3, true}, ZComp{5, false}, ZComp{7, false}}};

Mat4 generator_matrix(const std::string& name) {
  const auto& g = conformal_generators();
  if (name == "D") return g.dil;
  if (name == "I4") return g.unit;
  if (name.size() == 2 && name[0] == 'P') return g.momentum[name[1] - '0'];
  if (name.size() == 2 && name[0] == 'K') return g.accel[name[1] - '0'];
  if (name.size() == 3 && name[0] == 'M')
    return g.boost[name[1] - '0'][name[2] - '0'];
  if (name.size() == 3 && name[0] == 'S') {
    static const int cyc[4][2] = {{0, 0}, {2, 3}, {3, 1}, {1, 2}};
    cplx sgn = name[1] == 'a' ? -I : I;
    auto s_j = [&](int j) {
      return 0.5 * (g.boost[0][j] + sgn * g.boost[cyc[j][0]][cyc[j][1]]);
    };
    if (name[2] == '3') return s_j(3);
    // Sa+- = Sa1 -+ i Sa2, Sb+- = Sb1 +- i Sb2.
    cplx f = (name[2] == '+') == (name[1] == 'a') ? -I : I;
    return s_j(1) + f * s_j(2);
  }
  throw InvalidIndex("unknown generator name: " + name);
}

}  // namespace

QuadraticOperator quad_sandwich_4mode(const Mat4& x) {
  QuadraticOperator op;
  op.modes = 4;
  sandwich_column(op, col_4mode, x);
  return op;
}

QuadraticOperator quad_sandwich_8mode(const Mat4& x) {
  QuadraticOperator op;
  op.modes = 8;
  sandwich_column(op, col_8mode[0], x);
  sandwich_column(op, col_8mode[1], x);
  return op;
}

QuadraticOperator quad_sandwich_constituent(const Mat4& x, int p) {
  if (p != 1 && p != 2) throw InvalidIndex("constituent must be 1 or 2");
  QuadraticOperator op;
  op.modes = 8;
  sandwich_column(op, col_8mode[p - 1], x);
  return op;
}

QuadraticOperator fock_generator(const std::string& name, int modes) {
  Mat4 x = generator_matrix(name);
  if (modes == 4) return quad_sandwich_4mode(x);
  if (modes == 8) return quad_sandwich_8mode(x);
  throw ModeMismatch("generator realizations exist for 4 or 8 modes");
}

QuadraticOperator fock_generator_constituent(const std::string& name, int p) {
  return quad_sandwich_constituent(generator_matrix(name), p);
}

QuadraticOperator constraint_entry_8mode(int r, int c) {
  if (r < 0 || r > 1 || c < 0 || c > 1)
    throw InvalidIndex("constraint entry index out of range");
  static const double gam[4] = {-1.0, -1.0, 1.0, 1.0};
  QuadraticOperator op;
  op.modes = 8;
  for (int k = 0; k < 4; ++k) {
    ZComp left{col_8mode[r][k].mode, !col_8mode[r][k].dag};
    ZComp right = col_8mode[c][k];
    cplx coef = gam[k];
    if (!left.dag && right.dag) {
      if (left.mode == right.mode) {
        op.add_term({left.mode}, {left.mode}, coef);
        op.constant += coef;
      } else {
        op.add_term({right.mode}, {left.mode}, coef);
      }
    } else if (left.dag && right.dag) {
      op.add_term({left.mode, right.mode}, {}, coef);
    } else if (!left.dag && !right.dag) {
      op.add_term({}, {left.mode, right.mode}, coef);
    } else {
      op.add_term({left.mode}, {right.mode}, coef);
    }
  }
  return op;
}

FockVector apply_pauli_lubanski(int mu, const FockVector& v, int constituent,
                                int modes) {
  if (mu < 0 || mu > 3) throw InvalidIndex("index out of range");
  auto op_of = [&](const Mat4& x) {
    if (constituent != 0) return quad_sandwich_constituent(x, constituent);
    return modes == 4 ? quad_sandwich_4mode(x) : quad_sandwich_8mode(x);
  };
  const auto& g = conformal_generators();
  // eps_{0123} = +1; W_mu = (i/2) eps_{mu nu rho beta} M^{nu rho} P^beta.
  FockVector out;
  out.modes = v.modes;
  static const int perm[24][4] = {
      {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2},
      {0, 3, 2, 1}, {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0},
      {1, 3, 0, 2}, {1, 3, 2, 0}, {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3},
      {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0}, {3, 0, 1, 2}, {3, 0, 2, 1},
      {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};
  static const int sign[24] = {+1, -1, -1, +1, +1, -1, -1, +1, +1, -1, -1, +1,
                               +1, -1, -1, +1, +1, -1, -1, +1, +1, -1, -1, +1};
  for (int k = 0; k < 24; ++k) {
    if (perm[k][0] != mu) continue;
    int nu = perm[k][1], rho = perm[k][2], beta = perm[k][3];
    FockVector term =
        apply(op_of(g.boost[nu][rho]), apply(op_of(g.momentum[beta]), v));
    out.accumulate(term, 0.5 * I * static_cast<double>(sign[k]));
  }
  out.scale(eta(mu, mu));  // raise the free index
  return out;
}

// ---- su(1,1) ----

Su11Generators su11_generators() {
  Su11Generators g;
  for (auto* op : {&g.q3, &g.qplus, &g.qminus, &g.q0}) op->modes = 2;
  g.q3.add_term({0}, {0}, 0.5).add_term({1}, {1}, 0.5);
  g.q3.constant = 0.5;
  g.qplus.add_term({0, 1}, {}, 1.0);
  g.qminus.add_term({}, {0, 1}, 1.0);
  g.q0.add_term({1}, {1}, 0.5).add_term({0}, {0}, -0.5);
  g.q0.constant = -0.5;
  return g;
}

namespace {

void check_kappa(int two_kappa) {
  if (two_kappa < 1)
    throw InvalidIndex("Fock realization requires 2 kappa - 1 >= 0");
}

Occupation maybe_reverse(Occupation occ, bool negative) {
  if (negative) std::reverse(occ.begin(), occ.end());
  return occ;
}

}  // namespace

FockVector su11_basis(int two_kappa, int n, bool negative) {
  check_kappa(two_kappa);
  if (n < 0) throw InvalidIndex("exciton number must be >= 0");
  FockVector v;
  v.modes = 2;
  v.add(maybe_reverse({n, n + two_kappa - 1}, negative), 1.0);
  return v;
}

FockVector su11_cs(int two_kappa, cplx z, int cutoff, bool negative) {
  check_kappa(two_kappa);
  if (std::abs(z) >= 1.0) throw DomainViolation("|z| must be < 1");
  double pref = std::pow(1.0 - std::norm(z), 0.5 * two_kappa);
  FockVector v;
  v.modes = 2;
  cplx zn = 1.0;
  for (int n = 0; n <= cutoff; ++n) {
    double c = std::sqrt(binomial_d(two_kappa - 1 + n, n));
    v.add(maybe_reverse({n, n + two_kappa - 1}, negative), pref * c * zn);
    zn *= z;
  }
  return v;
}

// ---- four-mode ladder ----

FockVector ladder_basis(int two_kappa, int n1, int n2, int n3, bool negative) {
  check_kappa(two_kappa);
  if (n1 < 0 || n2 < 0 || n3 < 0)
    throw InvalidIndex("occupations must be >= 0");
  // b2 carries 2k-1 + n1 + n2 - n3 quanta: every algebra bilinear
  // conserves the b-over-a excess, so the whole kappa multiplet keeps
  // it at 2k-1 (the linear Casimir 2k-3).
  int nb2 = two_kappa - 1 + n1 + n2 - n3;
  if (nb2 < 0) throw InvalidIndex("n3 exceeds the available b2 quanta");
  FockVector v;
  v.modes = 4;
  v.add(maybe_reverse({n1, n2, n3, nb2}, negative), 1.0);
  return v;
}

namespace {

double ladder_prefactor(int two_kappa, cplx z1, cplx z2, cplx z3) {
  double s = 1.0 + std::norm(z1) - std::norm(z2) - std::norm(z3);
  if (s <= 0.0)
    throw DomainViolation("1 + |z1|^2 - |z2|^2 - |z3|^2 must be positive");
  return std::pow(s, 0.5 * two_kappa);
}

}  // namespace

FockVector ladder_cs(int two_kappa, cplx z1, cplx z2, cplx z3, int cutoff,
                     bool negative) {
  check_kappa(two_kappa);
  double pref = ladder_prefactor(two_kappa, z1, z2, z3);
  FockVector v;
  v.modes = 4;
  // Degree-n coefficient sqrt(C(2k+n-1,n) C(n,m) C(m,l)) (i z1)^{n-m}
  // (i z2)^{m-l} (i z3)^l; the uniform i-per-quantum phase is what the
  // exponential construction produces.
  for (int n = 0; n <= cutoff; ++n)
    for (int m = 0; m <= n; ++m)
      for (int l = 0; l <= m; ++l) {
        double c = std::sqrt(binomial_d(two_kappa - 1 + n, n) *
                             binomial_d(n, m) * binomial_d(m, l));
        cplx val = c * int_pow(I * z1, n - m) * int_pow(I * z2, m - l) *
                   int_pow(I * z3, l);
        v.add(maybe_reverse({n - m, m - l, l, two_kappa - 1 + n}, negative),
              pref * val);
      }
  return v;
}

FockVector ladder_cs_exponential(int two_kappa, cplx z1, cplx z2, cplx z3,
                                 int cutoff, bool negative) {
  check_kappa(two_kappa);
  double pref = ladder_prefactor(two_kappa, z1, z2, z3);
  QuadraticOperator q;
  q.modes = 4;
  q.add_term({0, 3}, {}, I * z1);  // a1+ b2+
  q.add_term({1, 3}, {}, I * z2);  // a2+ b2+
  q.add_term({2, 3}, {}, I * z3);  // b1+ b2+
  FockVector term = ladder_basis(two_kappa, 0, 0, 0);
  FockVector sum = term;
  for (int n = 1; n <= cutoff; ++n) {
    term = apply(q, term);
    term.scale(1.0 / n);
    sum.accumulate(term);
  }
  sum.scale(pref);
  if (negative) {
    FockVector flipped;
    flipped.modes = 4;
    for (const auto& [occ, a] : sum.amps)
      flipped.add(maybe_reverse(occ, true), a);
    return flipped;
  }
  return sum;
}

// ---- eight-mode compound ----

FockVector lowest_weight(int lambda) {
  if (lambda < 2)
    throw InvalidScaleDimension("lowest weight requires lambda >= 2");
  FockVector v;
  v.modes = 8;
  double norm = 1.0 / std::sqrt(static_cast<double>(lambda - 1));
  for (int k = 0; k <= lambda - 2; ++k) {
    Occupation occ{0, 0, 0, 0, lambda - 2 - k, k, k, lambda - 2 - k};
    v.add(occ, (k % 2 == 0 ? 1.0 : -1.0) * norm);
  }
  return v;
}

namespace {

// Multiply a creation-only polynomial (entry variables z11,z12,z21,z22
// mapped to the given modes) onto a state.
FockVector apply_creation_poly(const Polynomial& entry_poly,
                               const std::array<int, 4>& mode_of,
                               const FockVector& base) {
  FockVector out;
  out.modes = base.modes;
  for (const auto& [e, c] : entry_poly.terms()) {
    for (const auto& [occ, a] : base.amps) {
      Occupation o = occ;
      double f = 1.0;
      for (int v = 0; v < 4; ++v)
        for (int k = 0; k < e[v]; ++k) {
          o[mode_of[v]] += 1;
          f *= std::sqrt(static_cast<double>(o[mode_of[v]]));
        }
      out.add(o, c * a * f);
    }
  }
  return out;
}

// Entry layout of Eq. 61: a+ = [[a0+, a2+], [a1+, a3+]] and
// b+ = [[b0+, b2+], [b1+, b3+]] (the adjoint of b = [[b0,b1],[b2,b3]]).
constexpr std::array<int, 4> a_entry_modes{0, 2, 1, 3};
constexpr std::array<int, 4> b_entry_modes{4, 6, 5, 7};

}  // namespace

FockVector compound_basis(const BasisIndex& idx) {
  idx.validate();
  int l = idx.lambda, tj = idx.two_j, m = idx.m;
  // Eq. 67 normalizations, read with the Eq. 50 orientation (divide by
  // the large-over-small factorial ratio).
  double na = sqrt_factorial_ratio(l - 2, l + tj + m - 1, l - 1, l + m - 2);
  double nb =
      sqrt_factorial_ratio(l - 2, 2 * l + tj + m - 3, l - 1, 2 * l + m - 4);
  FockVector vac = FockVector::vacuum(8);
  FockVector out;
  out.modes = 8;
  for (int tq = -tj; tq <= tj; tq += 2) {
    Polynomial pa =
        z_to_entries(basis_poly({l, tj, m, idx.two_qa, tq}));
    Polynomial pb =
        z_to_entries(basis_poly({l, tj, l + m - 2, tq, idx.two_qb}));
    FockVector s = apply_creation_poly(pb, b_entry_modes, vac);
    s = apply_creation_poly(pa, a_entry_modes, s);
    out.accumulate(s);
  }
  out.scale(na * nb / std::sqrt(tj + 1.0));
  return out;
}

namespace {

OccupancyReport occupancy_impl(const FockVector& v, int lambda, bool have_idx,
                               const BasisIndex& idx) {
  if (v.modes != 8) throw ModeMismatch("constraints apply to 8-mode states");
  OccupancyReport rep;
  for (const auto& [o, a] : v.amps) {
    OccupancyReport::Tuple t;
    t.occ = o;
    t.excess_left = (o[4] + o[6]) - (o[0] + o[1]);
    t.excess_right = (o[5] + o[7]) - (o[2] + o[3]);
    t.two_qa = o[0] - o[1] + o[2] - o[3];
    t.two_qb = o[4] + o[5] - o[6] - o[7];
    int total = 0;
    for (int k = 0; k < 8; ++k) total += o[k];
    t.degree = 2 + total / 2 - lambda;  // 2j + 2m via Eq. 65
    t.pass = t.excess_left == lambda - 2 && t.excess_right == lambda - 2 &&
             total % 2 == 0;
    if (have_idx)
      t.pass = t.pass && t.two_qa == idx.two_qa && t.two_qb == idx.two_qb &&
               t.degree == idx.degree();
    rep.all_pass = rep.all_pass && t.pass;
    rep.tuples.push_back(std::move(t));
  }
  return rep;
}

}  // namespace

OccupancyReport occupancy_constraints(const FockVector& v, int lambda) {
  return occupancy_impl(v, lambda, false, BasisIndex{});
}

OccupancyReport occupancy_constraints(const FockVector& v,
                                      const BasisIndex& idx) {
  return occupancy_impl(v, idx.lambda, true, idx);
}

FockVector exchange(const FockVector& v) {
  if (v.modes != 8) throw ModeMismatch("exchange applies to 8-mode states");
  // a rows swapped, b columns swapped.
  static const int perm[8] = {2, 3, 0, 1, 5, 4, 7, 6};
  FockVector out;
  out.modes = 8;
  for (const auto& [occ, a] : v.amps) {
    Occupation o(8);
    for (int k = 0; k < 8; ++k) o[perm[k]] = occ[k];
    out.add(o, a);
  }
  return out;
}

QuadraticOperator exciton_creator(const Mat2& z) {
  // -A = -1/2 tr(Z^t K) with K^mu the 8-mode sandwich of the matrix K^mu.
  const auto& g = conformal_generators();
  QuadraticOperator op;
  op.modes = 8;
  for (int mu = 0; mu < 4; ++mu) {
    cplx c = -0.5 * (z.transpose() * pauli_lower(mu)).trace();
    if (std::abs(c) < 1e-15) continue;
    op = op + quad_sandwich_8mode(g.accel[mu]) * c;
  }
  return op;
}

FockVector exciton_order_term(const Mat2& z, int lambda, int n) {
  QuadraticOperator creator = exciton_creator(z);
  FockVector term = lowest_weight(lambda);
  for (int k = 1; k <= n; ++k) {
    term = apply(creator, term);
    term.scale(1.0 / k);
  }
  return term;
}

FockVector exciton_cs(const CartanPoint& z, int lambda, int cutoff) {
  if (lambda < 2)
    throw InvalidScaleDimension("exciton CS require lambda >= 2");
  QuadraticOperator creator = exciton_creator(z.Z);
  FockVector term = lowest_weight(lambda);
  FockVector sum = term;
  for (int n = 1; n <= cutoff; ++n) {
    term = apply(creator, term);
    term.scale(1.0 / n);
    sum.accumulate(term);
  }
  double f = (Mat2::identity() - z.Z.adjoint() * z.Z).det().real();
  sum.scale(std::pow(f, 0.5 * lambda));
  return sum;
}

ExcitonCommutator exciton_commutator_expectation(const BasisIndex& idx,
                                                 int mu) {
  idx.validate();
  if (idx.lambda <= 2)
    throw InvalidScaleDimension("exciton renormalization needs lambda > 2");
  if (mu < 0 || mu > 3) throw InvalidIndex("index out of range");
  const auto& g = conformal_generators();
  double e = eta(mu, mu);
  // K_mu, P_mu with the index lowered.
  QuadraticOperator kop = quad_sandwich_8mode(g.accel[mu]) * e;
  QuadraticOperator pop = quad_sandwich_8mode(g.momentum[mu]) * e;
  FockVector v = compound_basis(idx);
  ExcitonCommutator out;
  out.fock_value =
      (inner(v, apply_commutator(kop, pop, v)) / (2.0 * (idx.lambda - 2)))
          .real();
  int ne = idx.degree();
  out.closed_form =
      2.0 * e * (idx.lambda + ne) / (2.0 * (idx.lambda - 2));
  return out;
}

MassSpectrumResult mass_spectrum_action(const BasisIndex& idx) {
  idx.validate();
  const auto& g = conformal_generators();
  FockVector v = compound_basis(idx);
  FockVector p2v;
  p2v.modes = 8;
  for (int mu = 0; mu < 4; ++mu) {
    QuadraticOperator pop = quad_sandwich_8mode(g.momentum[mu]);
    p2v.accumulate(apply(pop, apply(pop, v)), eta(mu, mu));
  }
  MassSpectrumResult res;
  res.target = idx;
  res.target.m = std::max(0, idx.m - 1);
  double j = 0.5 * idx.two_j, m = idx.m, l = idx.lambda;
  res.closed_form = idx.m == 0 ? 0.0
                               : 4.0 * std::sqrt(m * (2 * j + m + 1) *
                                                 (l + m - 2) *
                                                 (l + 2 * j + m - 1));
  if (idx.m == 0) {
    res.coefficient = 0.0;
    res.residual = p2v.norm();
    return res;
  }
  FockVector t = compound_basis(res.target);
  res.coefficient = inner(t, p2v).real();
  FockVector diff = p2v;
  diff.accumulate(t, -res.coefficient);
  res.residual = diff.norm();
  return res;
}

}  // namespace ccs
