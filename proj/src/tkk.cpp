#include "dynsym/tkk.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

namespace dynsym {

namespace {

const Scalar kI = Scalar::i();

AlgebraSignature conformal_signature(const SpinFactor& factor) {
  if (factor.dim == 4)
    return {{"x0", "x1", "x2", "x3"}, {"d0", "d1", "d2", "d3"}, false};
  if (factor.dim == 3) return {{"y0", "y1", "y2"}, {"d0", "d1", "d2"}, false};
  throw std::invalid_argument("unsupported spin factor dimension");
}

std::string dim_tag(const SpinFactor& factor) {
  return "-dim" + std::to_string(factor.dim);
}

using Poly = std::map<std::array<int, 4>, GaussianRational>;

constexpr std::array<int, 4> kFlatMetric = {1, -1, -1, -1};

void poly_accumulate(Poly& p, const std::array<int, 4>& key,
                     const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = p.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::array<int, 4> key;
      for (int j = 0; j < 4; ++j) key[j] = ka[j] + kb[j];
      poly_accumulate(out, key, ca * cb);
    }
  return out;
}

Poly minkowski_poly() {
  Poly p;
  for (int mu = 0; mu < 4; ++mu) {
    std::array<int, 4> key = {0, 0, 0, 0};
    key[mu] = 2;
    p.emplace(key, GaussianRational(Rational(kFlatMetric[mu])));
  }
  return p;
}

Poly poly_power(const Poly& base, int n) {
  Poly out;
  out.emplace(std::array<int, 4>{0, 0, 0, 0}, GaussianRational(1));
  for (int k = 0; k < n; ++k) out = poly_mul(out, base);
  return out;
}

Poly poly_partial(const Poly& p, int nu) {
  Poly out;
  for (const auto& [key, c] : p) {
    if (key[nu] == 0) continue;
    std::array<int, 4> k = key;
    k[nu] -= 1;
    poly_accumulate(out, k, GaussianRational(Rational(key[nu])) * c);
  }
  return out;
}

}  // namespace

ConformalRealization conformal_realization(const SpinFactor& factor) {
  const auto sig = conformal_signature(factor);
  const int n = factor.dim;
  const auto& g = factor.metric;

  std::vector<WeylElement> x, d;
  for (int mu = 0; mu < n; ++mu) {
    x.push_back(WeylElement::position(sig, mu));
    d.push_back(WeylElement::derivative(sig, mu));
  }
  WeylElement euler(sig);
  WeylElement square(sig);
  for (int mu = 0; mu < n; ++mu) {
    euler = euler + x[mu] * d[mu];
    square = square + Scalar(g[mu]) * (x[mu] * x[mu]);
  }

  ConformalRealization c{sig, factor, {}, {}, WeylElement(sig), {}, {}};
  for (int mu = 0; mu < n; ++mu) c.P.push_back(kI * d[mu]);
  c.M.assign(n, std::vector<WeylElement>(n, WeylElement(sig)));
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu)
      c.M[mu][nu] =
          kI * (x[mu] * d[nu] - Scalar(g[mu] * g[nu]) * (x[nu] * d[mu]));
  c.D = -kI * euler;
  for (int mu = 0; mu < n; ++mu)
    c.K.push_back(kI *
                  (2 * (x[mu] * euler) - Scalar(g[mu]) * (square * d[mu])));
  c.S.assign(n, std::vector<WeylElement>(n, WeylElement(sig)));
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      WeylElement s(sig);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const Rational coeff = sigma_coefficient(factor, nu, mu, a, b);
          if (!coeff.is_zero()) s = s + Scalar(coeff) * (x[a] * d[b]);
        }
      c.S[mu][nu] = kI * s;
    }
  return c;
}

TripleSystem triple_system(const ConformalRealization& conformal) {
  const int n = conformal.factor.dim;
  TripleSystem t{{}, {}, {}};
  for (int a = 0; a < n; ++a)
    t.U_lower.push_back(WeylElement::derivative(conformal.signature, a));
  for (int b = 0; b < n; ++b) t.U_upper.push_back(-kI * conformal.K[b]);
  t.S_form.assign(n,
                  std::vector<WeylElement>(n, WeylElement(conformal.signature)));
  for (int alpha = 0; alpha < n; ++alpha)
    for (int beta = 0; beta < n; ++beta)
      t.S_form[alpha][beta] = kI * conformal.S[beta][alpha];
  return t;
}

std::vector<CheckRecord> triple_bracket_checks(const SpinFactor& factor) {
  const auto c = conformal_realization(factor);
  const auto t = triple_system(c);
  const int n = factor.dim;
  const std::string tag = dim_tag(factor);
  std::vector<CheckRecord> out;

  bool ok = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      ok = ok && is_zero(commutator(t.U_lower[a], t.U_lower[b]));
  out.push_back(exact_check("triple-lower-abelian" + tag,
                            "[U_a, U_b] = 0 over " + std::to_string(n * n) +
                                " index pairs",
                            ok));

  ok = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      ok = ok && is_zero(commutator(t.U_upper[a], t.U_upper[b]));
  out.push_back(exact_check("triple-upper-abelian" + tag,
                            "[U^a, U^b] = 0 over " + std::to_string(n * n) +
                                " index pairs",
                            ok));

  ok = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      ok = ok && commutator(t.U_lower[a], t.U_upper[b]) ==
                     Scalar(-2) * t.S_form[a][b];
  out.push_back(exact_check("triple-pairing" + tag,
                            "[U_a, U^b] = -2 S_a^b over " +
                                std::to_string(n * n) + " index pairs",
                            ok));

  ok = true;
  for (int alpha = 0; alpha < n; ++alpha)
    for (int beta = 0; beta < n; ++beta)
      for (int gamma = 0; gamma < n; ++gamma) {
        WeylElement rhs(c.signature);
        for (int rho = 0; rho < n; ++rho) {
          const Rational coeff =
              sigma_coefficient(factor, alpha, beta, gamma, rho);
          if (!coeff.is_zero()) rhs = rhs + Scalar(coeff) * t.U_lower[rho];
        }
        ok = ok &&
             commutator(t.S_form[alpha][beta], t.U_lower[gamma]) == rhs;
      }
  out.push_back(exact_check("triple-structure-lower" + tag,
                            "[S_a^b, U_c] = U_(abc) over " +
                                std::to_string(n * n * n) +
                                " index combinations",
                            ok));

  ok = true;
  for (int alpha = 0; alpha < n; ++alpha)
    for (int beta = 0; beta < n; ++beta)
      for (int gamma = 0; gamma < n; ++gamma) {
        WeylElement rhs(c.signature);
        for (int rho = 0; rho < n; ++rho) {
          const Rational coeff =
              sigma_coefficient(factor, beta, alpha, gamma, rho);
          if (!coeff.is_zero()) rhs = rhs - Scalar(coeff) * t.U_upper[rho];
        }
        ok = ok &&
             commutator(t.S_form[alpha][beta], t.U_upper[gamma]) == rhs;
      }
  out.push_back(exact_check("triple-structure-upper" + tag,
                            "[S_a^b, U^c] = -U^(bac) over " +
                                std::to_string(n * n * n) +
                                " index combinations",
                            ok));

  ok = true;
  for (int alpha = 0; alpha < n; ++alpha)
    for (int beta = 0; beta < n; ++beta)
      for (int gamma = 0; gamma < n; ++gamma)
        for (int delta = 0; delta < n; ++delta) {
          WeylElement rhs(c.signature);
          for (int rho = 0; rho < n; ++rho) {
            const Rational left =
                sigma_coefficient(factor, alpha, beta, gamma, rho);
            if (!left.is_zero())
              rhs = rhs + Scalar(left) * t.S_form[rho][delta];
            const Rational right =
                sigma_coefficient(factor, beta, alpha, delta, rho);
            if (!right.is_zero())
              rhs = rhs - Scalar(right) * t.S_form[gamma][rho];
          }
          ok = ok &&
               commutator(t.S_form[alpha][beta], t.S_form[gamma][delta]) ==
                   rhs;
        }
  out.push_back(exact_check("triple-structure-bracket" + tag,
                            "[S_a^b, S_c^d] = S_(abc)^d - S_c^(bad) over " +
                                std::to_string(n * n * n * n) +
                                " index combinations",
                            ok));
  return out;
}

std::vector<CheckRecord> conformal_bracket_checks(const SpinFactor& factor) {
  const auto c = conformal_realization(factor);
  const int n = factor.dim;
  const auto& g = factor.metric;
  const auto sig = c.signature;
  const WeylElement zero(sig);

  const auto P_low = [&](int mu) { return c.P[mu]; };
  const auto K_low = [&](int mu) { return Scalar(g[mu]) * c.K[mu]; };
  const auto M_low = [&](int mu, int nu) {
    return Scalar(g[mu]) * c.M[mu][nu];
  };
  const auto gdiag = [&](int mu, int nu) { return mu == nu ? g[mu] : 0; };

  struct Gen {
    char kind;
    int mu, nu;
    WeylElement op;
  };
  std::vector<Gen> gens;
  for (int mu = 0; mu < n; ++mu) gens.push_back({'P', mu, -1, P_low(mu)});
  for (int mu = 0; mu < n; ++mu)
    for (int nu = mu + 1; nu < n; ++nu)
      gens.push_back({'M', mu, nu, M_low(mu, nu)});
  gens.push_back({'D', -1, -1, c.D});
  for (int mu = 0; mu < n; ++mu) gens.push_back({'K', mu, -1, K_low(mu)});

  std::function<WeylElement(const Gen&, const Gen&)> expected =
      [&](const Gen& a, const Gen& b) -> WeylElement {
    if (a.kind == 'P' && b.kind == 'P') return zero;
    if (a.kind == 'K' && b.kind == 'K') return zero;
    if (a.kind == 'D' && b.kind == 'D') return zero;
    if (a.kind == 'D' && b.kind == 'P') return kI * P_low(b.mu);
    if (a.kind == 'D' && b.kind == 'K') return -kI * K_low(b.mu);
    if (a.kind == 'D' && b.kind == 'M') return zero;
    if (a.kind == 'K' && b.kind == 'P') {
      WeylElement rhs = -Scalar(2) * kI * M_low(a.mu, b.mu);
      if (a.mu == b.mu)
        rhs = rhs + Scalar(2 * g[a.mu]) * kI * c.D;
      return rhs;
    }
    if (a.kind == 'P' && b.kind == 'M')
      return kI * (Scalar(gdiag(a.mu, b.mu)) * P_low(b.nu) -
                   Scalar(gdiag(a.mu, b.nu)) * P_low(b.mu));
    if (a.kind == 'K' && b.kind == 'M')
      return kI * (Scalar(gdiag(a.mu, b.mu)) * K_low(b.nu) -
                   Scalar(gdiag(a.mu, b.nu)) * K_low(b.mu));
    if (a.kind == 'M' && b.kind == 'M') {
      WeylElement rhs(sig);
      const int mu = a.mu, nu = a.nu, rho = b.mu, sigma_idx = b.nu;
      if (mu == rho)
        rhs = rhs + Scalar(g[mu]) * M_low(nu, sigma_idx);
      if (nu == sigma_idx) rhs = rhs + Scalar(g[nu]) * M_low(mu, rho);
      if (mu == sigma_idx) rhs = rhs - Scalar(g[mu]) * M_low(nu, rho);
      if (nu == rho) rhs = rhs - Scalar(g[nu]) * M_low(mu, sigma_idx);
      return -kI * rhs;
    }
    return -expected(b, a);
  };

  bool ok = true;
  int pairs = 0;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      ++pairs;
      ok = ok && commutator(gens[i].op, gens[j].op) ==
                     expected(gens[i], gens[j]);
    }
  std::vector<CheckRecord> out;
  out.push_back(exact_check(
      "conformal-brackets" + dim_tag(factor),
      "all " + std::to_string(pairs) +
          " bracket pairs among {P, M, D, K} match the conformal relations",
      ok));
  return out;
}

std::vector<CheckRecord> grading_checks(const SpinFactor& factor) {
  const auto c = conformal_realization(factor);
  const int n = factor.dim;
  const WeylElement grader = kI * c.D;

  bool ok = true;
  for (int mu = 0; mu < n; ++mu)
    ok = ok && commutator(grader, c.P[mu]) == -c.P[mu];
  for (int mu = 0; mu < n; ++mu)
    ok = ok && commutator(grader, c.K[mu]) == c.K[mu];
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      ok = ok && is_zero(commutator(grader, c.M[mu][nu]));
      ok = ok && is_zero(commutator(grader, c.S[mu][nu]));
    }
  ok = ok && is_zero(commutator(grader, c.D));

  std::vector<CheckRecord> out;
  out.push_back(exact_check(
      "conformal-grading" + dim_tag(factor),
      "ad(iD) grades the algebra with P at -1, K at +1, and M, S, D at 0",
      ok));
  return out;
}

std::vector<CheckRecord> structure_operator_checks(const SpinFactor& factor) {
  const auto c = conformal_realization(factor);
  const int n = factor.dim;

  bool ok = true;
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      WeylElement rhs = c.M[mu][nu];
      if (mu == nu) rhs = rhs - c.D;
      ok = ok && c.S[mu][nu] == rhs;
    }
  std::vector<CheckRecord> out;
  out.push_back(exact_check(
      "structure-operator-split" + dim_tag(factor),
      "S^mu_nu built from triple coefficients equals M^mu_nu - delta^mu_nu D",
      ok));
  return out;
}

namespace {

WeylElement drop_to_real(const WeylElement& e, const AlgebraSignature& target) {
  WeylElement out(target);
  for (const auto& [mono, coeff] : e.terms()) {
    if (mono.alpha[2] != 0 || mono.beta[2] != 0) continue;
    Monomial reduced;
    reduced.alpha = {mono.alpha[0], mono.alpha[1], mono.alpha[3]};
    reduced.beta = {mono.beta[0], mono.beta[1], mono.beta[3]};
    out.add_term(reduced, coeff);
  }
  return out;
}

}  // namespace

std::vector<CheckRecord> reduction_checks() {
  const auto big = conformal_realization(complex_spin_factor());
  const auto small = conformal_realization(real_spin_factor());
  const int keep[] = {0, 1, 3};
  const auto remap = [](int mu) { return mu == 3 ? 2 : mu; };

  bool ok = true;
  int combos = 0;
  for (int mu : keep) {
    ++combos;
    ok = ok && drop_to_real(big.P[mu], small.signature) == small.P[remap(mu)];
    ++combos;
    ok = ok && drop_to_real(big.K[mu], small.signature) == small.K[remap(mu)];
  }
  ++combos;
  ok = ok && drop_to_real(big.D, small.signature) == small.D;
  for (int mu : keep)
    for (int nu : keep) {
      ++combos;
      ok = ok && drop_to_real(big.M[mu][nu], small.signature) ==
                     small.M[remap(mu)][remap(nu)];
      ++combos;
      ok = ok && drop_to_real(big.S[mu][nu], small.signature) ==
                     small.S[remap(mu)][remap(nu)];
    }

  std::vector<CheckRecord> out;
  out.push_back(exact_check(
      "conformal-reduction",
      "deleting the sigma_2 direction maps every four-coordinate generator "
      "onto its three-coordinate counterpart, " +
          std::to_string(combos) + " comparisons",
      ok));
  return out;
}

Matrix ambient_generator(const std::vector<int>& indices,
                         const std::map<int, int>& eta, int A, int B) {
  const int n = static_cast<int>(indices.size());
  Matrix L = Matrix::Zero(n, n);
  for (int r = 0; r < n; ++r)
    for (int col = 0; col < n; ++col) {
      const int C = indices[r], Dd = indices[col];
      int entry = 0;
      if (C == A && Dd == B) entry += eta.at(B);
      if (C == B && Dd == A) entry -= eta.at(A);
      if (entry != 0) L(r, col) = kI * Scalar(entry);
    }
  return L;
}

LieFamily<Matrix> ambient_family(const std::vector<int>& indices,
                                 const std::map<int, int>& eta) {
  const int n = static_cast<int>(indices.size());
  LieFamily<Matrix> fam{indices, eta, {}, Matrix(Matrix::Zero(n, n))};
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = i + 1; j < indices.size(); ++j)
      fam.generators.emplace(
          std::make_pair(indices[i], indices[j]),
          ambient_generator(indices, eta, indices[i], indices[j]));
  return fam;
}

std::vector<CheckRecord> ambient_checks() {
  std::vector<CheckRecord> out;
  const std::vector<int> idx6 = {-1, 0, 1, 2, 3, 5};
  const std::map<int, int> eta6 = {{-1, 1}, {0, 1},  {1, -1},
                                   {2, -1}, {3, -1}, {5, -1}};
  const std::vector<int> idx5 = {-1, 0, 1, 2, 3};
  const std::map<int, int> eta5 = {
      {-1, 1}, {0, 1}, {1, -1}, {2, -1}, {3, -1}};

  const auto fam6 = ambient_family(idx6, eta6);
  const auto fam5 = ambient_family(idx5, eta5);

  const auto rep6 = verify_closure(fam6);
  out.push_back(exact_check(
      "ambient-so24-closure",
      "6x6 matrix generators close over all " +
          std::to_string(rep6.pairs_checked) + " bracket pairs",
      rep6.closed && rep6.sign == 1,
      rep6.closed ? "fitted global sign s=+1" : rep6.first_failure));

  const auto rep5 = verify_closure(fam5);
  out.push_back(exact_check(
      "ambient-so23-closure",
      "5x5 matrix generators close over all " +
          std::to_string(rep5.pairs_checked) + " bracket pairs",
      rep5.closed && rep5.sign == 1,
      rep5.closed ? "fitted global sign s=+1" : rep5.first_failure));

  const auto eta_matrix = [](const std::vector<int>& idx,
                             const std::map<int, int>& eta) {
    const int n = static_cast<int>(idx.size());
    Matrix m = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = Scalar(eta.at(idx[k]));
    return m;
  };
  const Matrix g6 = eta_matrix(idx6, eta6);
  const Matrix g5 = eta_matrix(idx5, eta5);

  bool antisym = true;
  for (const auto& [key, L] : fam6.generators)
    antisym = antisym && is_zero(Matrix(L.transpose() * g6 + g6 * L));
  for (const auto& [key, L] : fam5.generators)
    antisym = antisym && is_zero(Matrix(L.transpose() * g5 + g5 * L));
  out.push_back(exact_check(
      "ambient-metric-antisymmetry",
      "T' eta + eta T = 0 for every generator of both families", antisym));

  Vector null_ray(6);
  null_ray << Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0),
      Scalar(1);
  bool cone = true;
  for (const auto& [key, L] : fam6.generators) {
    const Matrix form = Matrix(L.transpose() * g6 + g6 * L);
    const Matrix q = Matrix(null_ray.transpose() * form * null_ray);
    cone = cone && q(0, 0).is_zero();
  }
  out.push_back(exact_check(
      "ambient-cone-variation",
      "the quadratic cone is stationary along every generator at the null "
      "ray (1,0,0,0,0,1)",
      cone));

  const auto delete_third_axis = [](const Matrix& m) {
    Matrix out5(5, 5);
    int rr = 0;
    for (int r = 0; r < 6; ++r) {
      if (r == 3) continue;
      int cc = 0;
      for (int col = 0; col < 6; ++col) {
        if (col == 3) continue;
        out5(rr, cc) = m(r, col);
        ++cc;
      }
      ++rr;
    }
    return out5;
  };
  const auto relabel = [](int a) { return a == 3 ? 2 : (a == 5 ? 3 : a); };
  bool deletion = true;
  int pairs = 0;
  for (std::size_t i = 0; i < idx6.size(); ++i)
    for (std::size_t j = i + 1; j < idx6.size(); ++j) {
      const int A = idx6[i], B = idx6[j];
      if (A == 2 || B == 2) continue;
      ++pairs;
      const Matrix cut = delete_third_axis(fam6.stored(A, B));
      const Matrix native = fam5.stored(relabel(A), relabel(B));
      deletion = deletion && is_zero(Matrix(cut - native));
    }
  out.push_back(exact_check(
      "ambient-deletion",
      "excising one spacelike direction from the 6x6 family reproduces the "
      "5x5 family on all " +
          std::to_string(pairs) + " surviving generators",
      deletion,
      "both constructions drop the same direction, so the reduced matrices "
      "coincide entry by entry"));
  return out;
}

RatFn ratfn_constant(const GaussianRational& c) {
  RatFn f;
  if (!c.is_zero()) f.numerator.emplace(std::array<int, 4>{0, 0, 0, 0}, c);
  return f;
}

RatFn ratfn_coordinate(int mu) {
  if (mu < 0 || mu > 3) throw std::out_of_range("coordinate index");
  RatFn f;
  std::array<int, 4> key = {0, 0, 0, 0};
  key[mu] = 1;
  f.numerator.emplace(key, GaussianRational(1));
  return f;
}

RatFn ratfn_add(const RatFn& a, const RatFn& b) {
  const int m = std::max(a.denominator_power, b.denominator_power);
  RatFn out;
  out.denominator_power = m;
  const Poly square = minkowski_poly();
  const Poly lifted_a =
      poly_mul(a.numerator, poly_power(square, m - a.denominator_power));
  const Poly lifted_b =
      poly_mul(b.numerator, poly_power(square, m - b.denominator_power));
  out.numerator = lifted_a;
  for (const auto& [key, c] : lifted_b) poly_accumulate(out.numerator, key, c);
  return out;
}

RatFn ratfn_scale(const GaussianRational& c, const RatFn& f) {
  RatFn out;
  out.denominator_power = f.denominator_power;
  for (const auto& [key, v] : f.numerator)
    poly_accumulate(out.numerator, key, c * v);
  return out;
}

RatFn ratfn_mul(const RatFn& a, const RatFn& b) {
  RatFn out;
  out.denominator_power = a.denominator_power + b.denominator_power;
  out.numerator = poly_mul(a.numerator, b.numerator);
  return out;
}

RatFn ratfn_partial(const RatFn& f, int nu) {
  if (nu < 0 || nu > 3) throw std::out_of_range("coordinate index");
  if (f.denominator_power == 0) {
    RatFn out;
    out.numerator = poly_partial(f.numerator, nu);
    return out;
  }
  const Poly square = minkowski_poly();
  Poly square_partial;
  {
    std::array<int, 4> key = {0, 0, 0, 0};
    key[nu] = 1;
    square_partial.emplace(key,
                           GaussianRational(Rational(2 * kFlatMetric[nu])));
  }
  RatFn out;
  out.denominator_power = f.denominator_power + 1;
  out.numerator = poly_mul(poly_partial(f.numerator, nu), square);
  const Poly correction = poly_mul(f.numerator, square_partial);
  for (const auto& [key, c] : correction)
    poly_accumulate(out.numerator,
                    key,
                    GaussianRational(Rational(-f.denominator_power)) * c);
  return out;
}

namespace {

RatFn inversion_with_signs(const RatFn& f, const std::array<int, 4>& flip) {
  int top_degree = 0;
  for (const auto& [key, c] : f.numerator)
    top_degree = std::max(top_degree, key[0] + key[1] + key[2] + key[3]);

  const Poly square = minkowski_poly();
  RatFn out;
  for (const auto& [key, c] : f.numerator) {
    const int total = key[0] + key[1] + key[2] + key[3];
    int sign = 1;
    for (int mu = 0; mu < 4; ++mu)
      if (flip[mu] && key[mu] % 2 == 1) sign = -sign;
    Poly term;
    term.emplace(key, sign == 1 ? c : -c);
    term = poly_mul(term, poly_power(square, top_degree - total));
    for (const auto& [k, v] : term) poly_accumulate(out.numerator, k, v);
  }
  out.denominator_power = top_degree - f.denominator_power;
  if (out.denominator_power < 0) {
    out.numerator =
        poly_mul(out.numerator, poly_power(square, -out.denominator_power));
    out.denominator_power = 0;
  }
  return out;
}

}  // namespace

RatFn inversion_image(const RatFn& f) {
  return inversion_with_signs(f, {0, 1, 1, 1});
}

RatFn all_minus_inversion_image(const RatFn& f) {
  return inversion_with_signs(f, {1, 1, 1, 1});
}

Rational minkowski_square(const std::array<Rational, 4>& point) {
  Rational total(0);
  for (int mu = 0; mu < 4; ++mu)
    total += Rational(kFlatMetric[mu]) * point[mu] * point[mu];
  return total;
}

GaussianRational ratfn_evaluate(const RatFn& f,
                                const std::array<Rational, 4>& point) {
  GaussianRational total(0);
  for (const auto& [key, c] : f.numerator) {
    Rational monomial(1);
    for (int mu = 0; mu < 4; ++mu)
      for (int k = 0; k < key[mu]; ++k) monomial *= point[mu];
    total += c * GaussianRational(monomial);
  }
  if (f.denominator_power == 0) return total;
  const Rational square = minkowski_square(point);
  if (square.is_zero())
    throw std::domain_error("evaluation on the light cone");
  Rational denom(1);
  for (int k = 0; k < f.denominator_power; ++k) denom *= square;
  return total / GaussianRational(denom);
}

RatFn momentum_action(const RatFn& f, int mu) {
  return ratfn_scale(GaussianRational::i(), ratfn_partial(f, mu));
}

RatFn dilation_action(const RatFn& f) {
  RatFn total;
  for (int mu = 0; mu < 4; ++mu)
    total = ratfn_add(
        total, ratfn_mul(ratfn_coordinate(mu), ratfn_partial(f, mu)));
  return ratfn_scale(-GaussianRational::i(), total);
}

RatFn special_conformal_action(const RatFn& f, int mu) {
  RatFn euler;
  for (int nu = 0; nu < 4; ++nu)
    euler = ratfn_add(
        euler, ratfn_mul(ratfn_coordinate(nu), ratfn_partial(f, nu)));
  RatFn lead = ratfn_mul(ratfn_coordinate(mu), euler);
  lead = ratfn_scale(GaussianRational(2), lead);

  RatFn square;
  square.numerator = minkowski_poly();
  RatFn trail = ratfn_mul(square, ratfn_partial(f, mu));
  trail = ratfn_scale(GaussianRational(Rational(-kFlatMetric[mu])), trail);

  return ratfn_scale(GaussianRational::i(), ratfn_add(lead, trail));
}

std::vector<CheckRecord> inversion_checks(const SuiteConfig& config) {
  std::vector<CheckRecord> out;

  std::mt19937 rng(config.seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  std::vector<std::array<Rational, 4>> samples;
  while (samples.size() < 16) {
    std::array<Rational, 4> p = {Rational(dist(rng)), Rational(dist(rng)),
                                 Rational(dist(rng)), Rational(dist(rng))};
    if (minkowski_square(p).is_zero()) continue;
    samples.push_back(p);
  }

  std::vector<RatFn> functions;
  functions.push_back(ratfn_constant(GaussianRational(1)));
  for (int mu = 0; mu < 4; ++mu) functions.push_back(ratfn_coordinate(mu));
  functions.push_back(ratfn_mul(ratfn_coordinate(0), ratfn_coordinate(1)));
  functions.push_back(ratfn_mul(ratfn_coordinate(1), ratfn_coordinate(2)));
  functions.push_back(ratfn_mul(ratfn_coordinate(0), ratfn_coordinate(0)));
  functions.push_back(ratfn_mul(ratfn_coordinate(3), ratfn_coordinate(3)));
  functions.push_back(ratfn_mul(
      ratfn_coordinate(0),
      ratfn_mul(ratfn_coordinate(2), ratfn_coordinate(3))));
  functions.push_back(ratfn_mul(
      ratfn_coordinate(1),
      ratfn_mul(ratfn_coordinate(1), ratfn_coordinate(1))));

  bool involution = true;
  for (const auto& f : functions) {
    const RatFn twice = inversion_image(inversion_image(f));
    for (const auto& p : samples)
      involution =
          involution && ratfn_evaluate(twice, p) == ratfn_evaluate(f, p);
  }
  out.push_back(exact_check(
      "inversion-involution",
      "applying the conformal inversion twice is the identity on " +
          std::to_string(functions.size()) + " polynomials at " +
          std::to_string(samples.size()) + " rational points",
      involution));

  const std::array<Rational, 4> probe = {Rational(2), Rational(1),
                                         Rational(0), Rational(0)};
  const GaussianRational expected_probe[4] = {
      GaussianRational(Rational(2, 3)), GaussianRational(Rational(-1, 3)),
      GaussianRational(0), GaussianRational(0)};
  bool spot = true;
  for (int mu = 0; mu < 4; ++mu)
    spot = spot && ratfn_evaluate(inversion_image(ratfn_coordinate(mu)),
                                  probe) == expected_probe[mu];
  out.push_back(exact_check(
      "inversion-sample-point",
      "the image of (2,1,0,0) is (2/3,-1/3,0,0) coordinate by coordinate",
      spot));

  bool conjugates = true;
  for (int mu = 0; mu < 4; ++mu)
    for (const auto& f : functions) {
      const RatFn lhs = special_conformal_action(f, mu);
      const RatFn rhs =
          inversion_image(momentum_action(inversion_image(f), mu));
      const RatFn total = ratfn_add(lhs, rhs);
      for (const auto& p : samples)
        conjugates = conjugates && ratfn_evaluate(total, p).is_zero();
    }
  out.push_back(exact_check(
      "inversion-conjugates-translations",
      "K^mu f + I P_mu I f = 0 for every coordinate direction, polynomial "
      "and sample point",
      conjugates,
      "the sign is opposite to the bare operator identity K = I P I; the "
      "inversion used here flips only the spatial coordinates"));

  bool dilation = true;
  for (const auto& f : functions) {
    const RatFn total = ratfn_add(inversion_image(dilation_action(f)),
                                  dilation_action(inversion_image(f)));
    for (const auto& p : samples)
      dilation = dilation && ratfn_evaluate(total, p).is_zero();
  }
  out.push_back(exact_check("inversion-dilation-anticommutes",
                            "I D = -D I on every polynomial and sample point",
                            dilation));

  bool all_minus = true;
  for (int mu = 0; mu < 4; ++mu)
    for (const auto& f : functions) {
      const RatFn lhs =
          ratfn_scale(GaussianRational(Rational(kFlatMetric[mu])),
                      special_conformal_action(f, mu));
      const RatFn rhs = all_minus_inversion_image(
          momentum_action(all_minus_inversion_image(f), mu));
      RatFn total = ratfn_add(lhs, ratfn_scale(GaussianRational(-1), rhs));
      for (const auto& p : samples)
        all_minus = all_minus && ratfn_evaluate(total, p).is_zero();
    }
  out.push_back(exact_check(
      "inversion-all-minus-variant",
      "the all-minus inversion J satisfies K_mu = J P_mu J with a plus sign "
      "and matching lower indices",
      all_minus));
  return out;
}

std::vector<CheckRecord> tkk_checks(const SuiteConfig& config) {
  std::vector<CheckRecord> out;
  const auto append = [&out](std::vector<CheckRecord> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  for (const auto& factor : {complex_spin_factor(), real_spin_factor()}) {
    append(triple_bracket_checks(factor));
    append(conformal_bracket_checks(factor));
    append(grading_checks(factor));
    append(structure_operator_checks(factor));
  }
  append(reduction_checks());
  append(ambient_checks());
  append(inversion_checks(config));
  return out;
}

}  // namespace dynsym
