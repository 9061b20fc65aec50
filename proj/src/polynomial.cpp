#include "ccs/polynomial.hpp"

#include <cmath>

namespace ccs {

Polynomial Polynomial::constant(cplx c) {
  Polynomial p;
  p.add_term({0, 0, 0, 0}, c);
  return p;
}

Polynomial Polynomial::variable(int mu) {
  Polynomial p;
  Exponents e{0, 0, 0, 0};
  e[mu] = 1;
  p.add_term(e, 1.0);
  return p;
}

Polynomial Polynomial::monomial(const Exponents& e, cplx c) {
  Polynomial p;
  p.add_term(e, c);
  return p;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
  return d;
}

cplx Polynomial::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? cplx(0.0) : it->second;
}

Polynomial& Polynomial::add_term(const Exponents& e, cplx c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (std::abs(it->second) < coeff_floor) terms_.erase(it);
  } else if (std::abs(c) < coeff_floor) {
    terms_.erase(it);
  }
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator*(cplx s) const {
  Polynomial r;
  if (std::abs(s) < coeff_floor) return r;
  for (const auto& [e, c] : terms_) r.add_term(e, s * c);
  return r;
}

Polynomial Polynomial::derivative(int mu) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    if (e[mu] == 0) continue;
    Exponents d = e;
    d[mu] -= 1;
    r.add_term(d, c * static_cast<double>(e[mu]));
  }
  return r;
}

cplx Polynomial::evaluate(const std::array<cplx, 4>& x) const {
  cplx sum = 0.0;
  for (const auto& [e, c] : terms_) {
    cplx t = c;
    for (int mu = 0; mu < 4; ++mu)
      for (int k = 0; k < e[mu]; ++k) t *= x[mu];
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::substitute_linear(
    const std::array<std::array<cplx, 4>, 4>& map) const {
  std::array<Polynomial, 4> images;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu)
      if (map[mu][nu] != cplx(0.0))
        images[mu] += Polynomial::variable(nu) * map[mu][nu];
  }
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    Polynomial t = Polynomial::constant(c);
    for (int mu = 0; mu < 4; ++mu)
      for (int k = 0; k < e[mu]; ++k) t = t * images[mu];
    r += t;
  }
  return r;
}

Polynomial Polynomial::pow(int n) const {
  Polynomial r = Polynomial::constant(1.0);
  for (int k = 0; k < n; ++k) r = r * (*this);
  return r;
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double Polynomial::max_coeff_distance(const Polynomial& o) const {
  return (*this - o).max_abs_coeff();
}

void Polynomial::prune(double tol) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = std::abs(it->second) < tol ? terms_.erase(it) : std::next(it);
}

Polynomial z_to_entries(const Polynomial& p) {
  const cplx i(0.0, 1.0);
  // z0 = (z11+z22)/2, z1 = (z12+z21)/2, z2 = i(z12-z21)/2, z3 = (z11-z22)/2
  std::array<std::array<cplx, 4>, 4> map{};
  map[0] = {0.5, 0.0, 0.0, 0.5};
  map[1] = {0.0, 0.5, 0.5, 0.0};
  map[2] = {0.0, 0.5 * i, -0.5 * i, 0.0};
  map[3] = {0.5, 0.0, 0.0, -0.5};
  return p.substitute_linear(map);
}

Polynomial entries_to_z(const Polynomial& p) {
  const cplx i(0.0, 1.0);
  // z11 = z0+z3, z12 = z1-iz2, z21 = z1+iz2, z22 = z0-z3
  std::array<std::array<cplx, 4>, 4> map{};
  map[0] = {1.0, 0.0, 0.0, 1.0};
  map[1] = {0.0, 1.0, -i, 0.0};
  map[2] = {0.0, 1.0, i, 0.0};
  map[3] = {1.0, 0.0, 0.0, -1.0};
  return p.substitute_linear(map);
}

cplx evaluate_at_matrix(const Polynomial& p, const Mat2& z) {
  return p.evaluate(z_coords(z));
}

Polynomial det_poly_z() {
  Polynomial d;
  d.add_term({2, 0, 0, 0}, 1.0);
  d.add_term({0, 2, 0, 0}, -1.0);
  d.add_term({0, 0, 2, 0}, -1.0);
  d.add_term({0, 0, 0, 2}, -1.0);
  return d;
}

}  // namespace ccs
