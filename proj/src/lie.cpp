#include "qeala/lie.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qeala {

namespace {

void check_matrix_index(int i, int j) {
  if (i < 1 || i > 2 || j < 1 || j > 2) {
    throw std::invalid_argument("matrix unit indices must be 1 or 2");
  }
}

// Bracket of two matrix-unit basis elements with unit coefficients.
LieElement bracket_units(const MatrixKey& a, const MatrixKey& b) {
  const int m1 = a.idx.m, n1 = a.idx.n, m2 = b.idx.m, n2 = b.idx.n;
  const IndexPair sum = a.idx + b.idx;
  LieElement out;
  if (a.j == b.i) out += LieElement::E(a.i, b.j, sum.m, sum.n, Scalar::q_power(n1 * m2));
  if (a.i == b.j) out -= LieElement::E(b.i, a.j, sum.m, sum.n, Scalar::q_power(n2 * m1));
  if (a.j == b.i && a.i == b.j && sum.m == 0 && sum.n == 0) {
    out += LieElement::cs(Scalar::term(n1 * m2, 0, GaussianRational(m1)));
    out += LieElement::ct(Scalar::term(n1 * m2, 0, GaussianRational(n1)));
  }
  return out;
}

// [D, x] where D = ds_coeff * d_s + dt_coeff * d_t acts diagonally on the
// matrix part.
LieElement derivation_action(const Scalar& ds, const Scalar& dt, const LieElement& x) {
  LieElement out;
  for (const auto& [k, c] : x.matrix_part()) {
    Scalar weight = ds * GaussianRational(k.idx.m) + dt * GaussianRational(k.idx.n);
    out += LieElement::E(k.i, k.j, k.idx.m, k.idx.n, weight * c);
  }
  return out;
}

}  // namespace

LieElement LieElement::E(int i, int j, int m, int n, Scalar coeff) {
  check_matrix_index(i, j);
  LieElement x;
  x.add_matrix(MatrixKey{i, j, IndexPair{m, n}}, coeff);
  return x;
}

LieElement LieElement::E(int i, int j, const TorusElement& a) {
  check_matrix_index(i, j);
  LieElement x;
  for (const auto& [p, c] : a.terms()) x.add_matrix(MatrixKey{i, j, p}, c);
  return x;
}

LieElement LieElement::cs(Scalar coeff) {
  LieElement x;
  x.cs_ = std::move(coeff);
  return x;
}

LieElement LieElement::ct(Scalar coeff) {
  LieElement x;
  x.ct_ = std::move(coeff);
  return x;
}

LieElement LieElement::ds(Scalar coeff) {
  LieElement x;
  x.ds_ = std::move(coeff);
  return x;
}

LieElement LieElement::dt(Scalar coeff) {
  LieElement x;
  x.dt_ = std::move(coeff);
  return x;
}

bool LieElement::is_zero() const {
  return matrix_.empty() && cs_.is_zero() && ct_.is_zero() && ds_.is_zero() && dt_.is_zero();
}

Scalar LieElement::matrix_coefficient(const MatrixKey& k) const {
  auto it = matrix_.find(k);
  return it == matrix_.end() ? Scalar() : it->second;
}

void LieElement::add_matrix(const MatrixKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = matrix_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) matrix_.erase(it);
  }
}

LieElement LieElement::operator-() const {
  LieElement out;
  for (const auto& [k, c] : matrix_) out.matrix_.emplace(k, -c);
  out.cs_ = -cs_;
  out.ct_ = -ct_;
  out.ds_ = -ds_;
  out.dt_ = -dt_;
  return out;
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [k, c] : o.matrix_) add_matrix(k, c);
  cs_ += o.cs_;
  ct_ += o.ct_;
  ds_ += o.ds_;
  dt_ += o.dt_;
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) { return *this += -o; }

LieElement& LieElement::operator*=(const Scalar& c) {
  LieElement out;
  for (const auto& [k, v] : matrix_) out.add_matrix(k, v * c);
  out.cs_ = cs_ * c;
  out.ct_ = ct_ * c;
  out.ds_ = ds_ * c;
  out.dt_ = dt_ * c;
  return *this = std::move(out);
}

std::string LieElement::to_string() const {
  std::vector<std::pair<std::string, const Scalar*>> parts;
  for (const auto& [k, c] : matrix_) {
    parts.emplace_back("E" + std::to_string(k.i) + std::to_string(k.j) + "[" + std::to_string(k.idx.m) + "," +
                           std::to_string(k.idx.n) + "]",
                       &c);
  }
  const std::pair<const char*, const Scalar*> extras[] = {{"cs", &cs_}, {"ct", &ct_}, {"ds", &ds_}, {"dt", &dt_}};
  for (const auto& [name, c] : extras) {
    if (!c->is_zero()) parts.emplace_back(name, c);
  }
  if (parts.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) os << " + ";
    const Scalar& c = *parts[k].second;
    if (!(c == Scalar(1))) os << "(" << c.to_string() << ")*";
    os << parts[k].first;
  }
  return os.str();
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  LieElement out;
  for (const auto& [kx, cx] : x.matrix_part()) {
    for (const auto& [ky, cy] : y.matrix_part()) {
      out += (cx * cy) * bracket_units(kx, ky);
    }
  }
  out += derivation_action(x.ds_coeff(), x.dt_coeff(), y);
  out -= derivation_action(y.ds_coeff(), y.dt_coeff(), x);
  return out;
}

LieElement omega(const LieElement& x) {
  LieElement out;
  for (const auto& [k, c] : x.matrix_part()) {
    Scalar sign = ((k.i + k.j) % 2 == 0) ? Scalar(1) : Scalar(-1);
    out += sign * LieElement::E(k.j, k.i, torus_bar(TorusElement::monomial(k.idx.m, k.idx.n, c)));
  }
  out += LieElement::cs(x.cs_coeff().conj());
  out += LieElement::ct(x.ct_coeff().conj());
  out += LieElement::ds(x.ds_coeff().conj());
  out += LieElement::dt(x.dt_coeff().conj());
  return out;
}

Scalar invariant_form(const LieElement& x, const LieElement& y) {
  Scalar out;
  for (const auto& [kx, cx] : x.matrix_part()) {
    for (const auto& [ky, cy] : y.matrix_part()) {
      // tr(E_ij E_kl) = delta_jk delta_il
      if (kx.j != ky.i || kx.i != ky.j) continue;
      out += kappa(TorusElement::monomial(kx.idx.m, kx.idx.n) * TorusElement::monomial(ky.idx.m, ky.idx.n)) * cx * cy;
    }
  }
  out += x.cs_coeff() * y.ds_coeff() + x.ds_coeff() * y.cs_coeff();
  out += x.ct_coeff() * y.dt_coeff() + x.dt_coeff() * y.ct_coeff();
  return out;
}

LieElement jacobi_sum(const LieElement& x, const LieElement& y, const LieElement& z) {
  return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
}

bool check_jacobi(const LieElement& x, const LieElement& y, const LieElement& z) {
  return jacobi_sum(x, y, z).is_zero();
}

}  // namespace qeala
