#include "dynsym/spinor.hpp"

#include <random>
#include <string>
#include <utility>

#include "dynsym/landau.hpp"

namespace dynsym {

namespace {

const Scalar kI = Scalar::i();
const Scalar kHalf = Scalar(Rational(1, 2));

bool same_matrix(const Matrix& a, const Matrix& b) {
  return is_zero(Matrix(a - b));
}

Matrix pauli_block(int k) {
  Matrix s(2, 2);
  switch (k) {
    case 1:
      s << Scalar(0), Scalar(1), Scalar(1), Scalar(0);
      break;
    case 2:
      s << Scalar(0), -kI, kI, Scalar(0);
      break;
    default:
      s << Scalar(1), Scalar(0), Scalar(0), Scalar(-1);
      break;
  }
  return s;
}

const std::vector<int> kExtendedIndices = {-1, 0, 1, 2, 3, 5};
const std::map<int, int> kExtendedEta = {{-1, 1}, {0, 1},  {1, -1},
                                         {2, -1}, {3, -1}, {5, -1}};

Matrix extended_gamma(const GammaBasis& basis, int A) {
  if (A == -1) return Matrix(kI * Matrix::Identity(4, 4));
  if (A == 5) return basis.gamma5;
  return basis.gamma[A];
}

}  // namespace

GammaBasis gamma_basis() {
  GammaBasis basis;
  Matrix g0 = Matrix::Zero(4, 4);
  g0(0, 0) = Scalar(1);
  g0(1, 1) = Scalar(1);
  g0(2, 2) = Scalar(-1);
  g0(3, 3) = Scalar(-1);
  basis.gamma.push_back(g0);
  for (int k = 1; k <= 3; ++k) {
    const Matrix s = pauli_block(k);
    Matrix g = Matrix::Zero(4, 4);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        g(r, c + 2) = s(r, c);
        g(r + 2, c) = -s(r, c);
      }
    basis.gamma.push_back(g);
  }
  basis.gamma5 =
      basis.gamma[0] * basis.gamma[1] * basis.gamma[2] * basis.gamma[3];
  basis.beta = basis.gamma[0];
  basis.charge_conjugation = kI * (basis.gamma[0] * basis.gamma[2]);
  return basis;
}

Matrix sigma_generator(const GammaBasis& basis, int A, int B) {
  if (A == -1 && B == 5) return Matrix(-kHalf * basis.gamma5);
  if (A == -1) return Matrix(-kHalf * basis.gamma[B]);
  if (B == 5)
    return Matrix(Scalar(Rational(1, 4)) * kI *
                  commutator(basis.gamma[A], basis.gamma5));
  return Matrix(Scalar(Rational(1, 4)) * kI *
                commutator(basis.gamma[A], basis.gamma[B]));
}

LieFamily<Matrix> sigma_family(const GammaBasis& basis) {
  LieFamily<Matrix> fam{kExtendedIndices, kExtendedEta, {},
                        Matrix(Matrix::Zero(4, 4))};
  for (std::size_t i = 0; i < kExtendedIndices.size(); ++i)
    for (std::size_t j = i + 1; j < kExtendedIndices.size(); ++j) {
      const int A = kExtendedIndices[i], B = kExtendedIndices[j];
      fam.generators.emplace(std::make_pair(A, B),
                             sigma_generator(basis, A, B));
    }
  return fam;
}

LadderSpinor ladder_spinor() {
  const AlgebraSignature sig{{"z1", "z2", "zb1", "zb2"},
                             {"d1", "d2", "db1", "db2"},
                             false};
  const auto pos = [&](int k) { return WeylElement::position(sig, k); };
  const auto der = [&](int k) { return WeylElement::derivative(sig, k); };
  LadderSpinor s{sig, {}, {}};
  s.psi = {pos(2), pos(3), der(0), der(1)};
  s.psi_bar = {-der(2), -der(3), pos(0), pos(1)};
  return s;
}

LadderSpinor majorana_spinor() {
  const auto w = weyl_spinor();
  const AlgebraSignature sig = w.chi[0].signature();
  LadderSpinor s{sig, {}, {}};
  s.psi = {w.chi[0], w.chi[1], -w.chi_star[1], w.chi_star[0]};
  s.psi_bar = {w.chi_star[0], w.chi_star[1], w.chi[1], -w.chi[0]};
  return s;
}

WeylElement spinor_bilinear(const LadderSpinor& spinor, const Matrix& m) {
  WeylElement out(spinor.signature);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (m(a, b).is_zero()) continue;
      out = out + m(a, b) * (spinor.psi_bar[a] * spinor.psi[b]);
    }
  return out;
}

WeylElement casimir_bilinear(const LadderSpinor& spinor) {
  return spinor_bilinear(spinor, Matrix(Matrix::Identity(4, 4)));
}

LieFamily<WeylElement> bilinear_family(const LadderSpinor& spinor,
                                       const GammaBasis& basis) {
  LieFamily<WeylElement> fam{kExtendedIndices, kExtendedEta, {},
                             WeylElement(spinor.signature)};
  for (std::size_t i = 0; i < kExtendedIndices.size(); ++i)
    for (std::size_t j = i + 1; j < kExtendedIndices.size(); ++j) {
      const int A = kExtendedIndices[i], B = kExtendedIndices[j];
      fam.generators.emplace(
          std::make_pair(A, B),
          spinor_bilinear(spinor, sigma_generator(basis, A, B)));
    }
  return fam;
}

std::vector<CheckRecord> gamma_checks() {
  std::vector<CheckRecord> out;
  const auto basis = gamma_basis();
  const int metric[4] = {1, -1, -1, -1};
  const Matrix unit = Matrix::Identity(4, 4);

  bool clifford = true;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Matrix anti = basis.gamma[mu] * basis.gamma[nu] +
                          basis.gamma[nu] * basis.gamma[mu];
      const Matrix expected =
          Matrix(Scalar(mu == nu ? 2 * metric[mu] : 0) * unit);
      clifford = clifford && same_matrix(anti, expected);
    }
  out.push_back(exact_check(
      "clifford-anticommutators",
      "gamma^mu gamma^nu + gamma^nu gamma^mu = 2 g^{mu nu} over all 16 "
      "index pairs",
      clifford));

  bool chirality = same_matrix(Matrix(basis.gamma5 * basis.gamma5),
                               Matrix(Scalar(-1) * unit));
  for (int mu = 0; mu < 4; ++mu)
    chirality = chirality &&
                is_zero(Matrix(basis.gamma5 * basis.gamma[mu] +
                               basis.gamma[mu] * basis.gamma5));
  out.push_back(exact_check(
      "chirality-product",
      "the product of all four gammas squares to -1 and anticommutes with "
      "each of them",
      chirality));

  const Matrix& C = basis.charge_conjugation;
  bool conjugation = same_matrix(Matrix(C.transpose()), Matrix(-C)) &&
                     same_matrix(Matrix(C * C), Matrix(Scalar(-1) * unit));
  for (int mu = 0; mu < 4; ++mu) {
    const Matrix conjugated = Matrix(C * basis.gamma[mu] * (Scalar(-1) * C));
    conjugation = conjugation &&
                  same_matrix(conjugated,
                              Matrix(Scalar(-1) *
                                     basis.gamma[mu].transpose().eval()));
  }
  out.push_back(exact_check(
      "charge-conjugation-properties",
      "C is antisymmetric, squares to -1, and sends each gamma^mu to minus "
      "its transpose",
      conjugation));

  bool uniform = true;
  for (std::size_t i = 0; i < kExtendedIndices.size(); ++i)
    for (std::size_t j = i + 1; j < kExtendedIndices.size(); ++j) {
      const int A = kExtendedIndices[i], B = kExtendedIndices[j];
      const Matrix product =
          Matrix(kHalf * kI * (extended_gamma(basis, A) *
                               extended_gamma(basis, B)));
      uniform = uniform && same_matrix(sigma_generator(basis, A, B), product);
    }
  out.push_back(exact_check(
      "spin-generators-uniform-product",
      "every generator equals (i/2) gamma^A gamma^B with gamma^{-1} = i, "
      "all 15 pairs",
      uniform));

  bool pseudo = true;
  for (std::size_t i = 0; i < kExtendedIndices.size(); ++i)
    for (std::size_t j = i + 1; j < kExtendedIndices.size(); ++j) {
      const Matrix s =
          sigma_generator(basis, kExtendedIndices[i], kExtendedIndices[j]);
      pseudo = pseudo &&
               same_matrix(Matrix(basis.beta * s * basis.beta), dagger(s));
    }
  out.push_back(exact_check(
      "spin-generators-pseudo-hermitian",
      "beta sigma beta^{-1} equals the conjugate transpose for all 15 "
      "generators",
      pseudo));

  const auto rep = verify_closure(sigma_family(basis));
  out.push_back(exact_check(
      "spin-generators-closure",
      "the 15 matrix generators close over all " +
          std::to_string(rep.pairs_checked) + " bracket pairs",
      rep.closed && rep.sign == 1,
      rep.closed ? "fitted global sign s=+1" : rep.first_failure));
  return out;
}

std::vector<CheckRecord> ladder_representation_checks(
    const SuiteConfig& config) {
  std::vector<CheckRecord> out;
  const auto basis = gamma_basis();
  const auto spinor = ladder_spinor();
  const auto& sig = spinor.signature;

  bool ccr = true;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const WeylElement expected =
          WeylElement::constant(sig, Scalar(a == b ? 1 : 0));
      ccr = ccr &&
            commutator(spinor.psi[a], spinor.psi_bar[b]) == expected;
    }
  out.push_back(exact_check(
      "ladder-spinor-ccr",
      "[psi^a, psi_bar_b] = delta^a_b over all 16 component pairs", ccr));

  const auto fam = bilinear_family(spinor, basis);
  const auto rep = verify_closure(fam);
  out.push_back(exact_check(
      "spinor-bilinear-closure",
      "the bilinears psi_bar sigma^{AB} psi close over all " +
          std::to_string(rep.pairs_checked) + " bracket pairs",
      rep.closed && rep.sign == 1,
      rep.closed ? "fitted global sign s=+1" : rep.first_failure));

  std::mt19937 rng(config.seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  const auto random_matrix = [&]() {
    Matrix m(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        m(r, c) = Scalar(GaussianRational(Rational(entry(rng)),
                                          Rational(entry(rng))));
    return m;
  };
  bool homomorphism = true;
  for (int trial = 0; trial < 8; ++trial) {
    const Matrix m = random_matrix();
    const Matrix n = random_matrix();
    homomorphism =
        homomorphism &&
        commutator(spinor_bilinear(spinor, m), spinor_bilinear(spinor, n)) ==
            spinor_bilinear(spinor, commutator(m, n));
  }
  out.push_back(exact_check(
      "bilinear-homomorphism",
      "[psi_bar M psi, psi_bar N psi] = psi_bar [M,N] psi for 8 random "
      "matrix pairs",
      homomorphism));

  const WeylElement c1 = casimir_bilinear(spinor);
  const WeylElement two = WeylElement::constant(sig, Scalar(2));
  WeylElement number_split(sig);
  for (int k = 0; k < 2; ++k)
    number_split =
        number_split +
        WeylElement::position(sig, k) * WeylElement::derivative(sig, k) -
        WeylElement::position(sig, k + 2) * WeylElement::derivative(sig, k + 2);
  out.push_back(exact_check(
      "casimir-number-identity",
      "psi_bar psi + 2 equals the holomorphic minus antiholomorphic number "
      "operator",
      c1 + two == number_split));

  bool central = true;
  for (const auto& [key, generator] : fam.generators)
    central = central && is_zero(commutator(c1, generator));
  out.push_back(exact_check(
      "casimir-central",
      "psi_bar psi commutes with all 15 bilinear generators", central));

  const WeylElement weight = -kHalf * (c1 + two);
  const WeylElement unit = WeylElement::constant(sig, Scalar(1));
  const WeylElement z1 = WeylElement::position(sig, 0);
  const bool lowest = apply(weight, unit).is_zero() &&
                      apply(weight, z1) == -kHalf * z1;
  out.push_back(exact_check(
      "lowest-weight-action",
      "the weight operator -(psi_bar psi + 2)/2 annihilates 1 and gives "
      "-1/2 on z1",
      lowest));
  return out;
}

std::vector<CheckRecord> majorana_checks() {
  std::vector<CheckRecord> out;
  const auto basis = gamma_basis();
  const auto spinor = majorana_spinor();
  const auto& sig = spinor.signature;

  bool ccr = true;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const WeylElement expected =
          WeylElement::constant(sig, Scalar(a == b ? 1 : 0));
      ccr = ccr &&
            commutator(spinor.psi[a], spinor.psi_bar[b]) == expected;
    }
  out.push_back(exact_check(
      "majorana-ccr",
      "the two-mode spinor keeps [psi^a, psi_bar_b] = delta^a_b", ccr));

  bool fifth = true;
  for (int A : {-1, 0, 1, 2, 3})
    fifth = fifth &&
            spinor_bilinear(spinor, sigma_generator(basis, A, 5)).is_zero();
  out.push_back(exact_check(
      "majorana-fifth-column-vanishes",
      "all five bilinears pairing a vector index with index 5 are "
      "identically zero",
      fifth));

  const WeylElement c1 = casimir_bilinear(spinor);
  out.push_back(exact_check(
      "majorana-casimir-value",
      "psi_bar psi collapses to the constant -2, placing the weight at 0",
      c1 == WeylElement::constant(sig, Scalar(-2))));

  const auto reference = dirac_generators(Presentation::holomorphic).family();
  const auto ref_pairs = reference.pairs();
  std::vector<WeylElement> ref_basis;
  for (const auto& [A, B] : ref_pairs) ref_basis.push_back(reference.stored(A, B));

  const std::vector<int> reduced_indices = {-1, 0, 1, 2, 3};
  bool matched = true;
  std::map<std::pair<int, int>, std::pair<std::pair<int, int>, Scalar>>
      correspondence;
  std::string recorded;
  for (std::size_t i = 0; i < reduced_indices.size(); ++i)
    for (std::size_t j = i + 1; j < reduced_indices.size(); ++j) {
      const int A = reduced_indices[i], B = reduced_indices[j];
      const WeylElement J =
          spinor_bilinear(spinor, sigma_generator(basis, A, B));
      const auto coords = solve_in_span(ref_basis, J);
      if (!coords.has_value()) {
        matched = false;
        continue;
      }
      int hits = 0;
      std::size_t which = 0;
      for (std::size_t k = 0; k < coords->size(); ++k)
        if (!(*coords)[k].is_zero()) {
          ++hits;
          which = k;
        }
      if (hits != 1) {
        matched = false;
        continue;
      }
      const Scalar c = (*coords)[which];
      matched = matched && (c == Scalar(2) || c == Scalar(-2));
      correspondence[{A, B}] = {ref_pairs[which], c};
      if (!recorded.empty()) recorded += "; ";
      recorded += "J(" + std::to_string(A) + "," + std::to_string(B) +
                  ") = " + c.str() + " m(" +
                  std::to_string(ref_pairs[which].first) + "," +
                  std::to_string(ref_pairs[which].second) + ")";
    }
  std::map<std::pair<int, int>, int> usage;
  for (const auto& [key, target] : correspondence) ++usage[target.first];
  bool bijective = correspondence.size() == 10 && usage.size() == 10;
  out.push_back(exact_check(
      "majorana-generator-correspondence",
      "each reduced bilinear is exactly +-2 times one distinct generator of "
      "the holomorphic family",
      matched && bijective, recorded));

  LieFamily<WeylElement> reduced{reduced_indices,
                                 {{-1, 1}, {0, 1}, {1, -1}, {2, -1}, {3, -1}},
                                 {},
                                 WeylElement(sig)};
  for (std::size_t i = 0; i < reduced_indices.size(); ++i)
    for (std::size_t j = i + 1; j < reduced_indices.size(); ++j) {
      const int A = reduced_indices[i], B = reduced_indices[j];
      reduced.generators.emplace(
          std::make_pair(A, B),
          kHalf * spinor_bilinear(spinor, sigma_generator(basis, A, B)));
    }
  const auto rep = verify_closure(reduced);
  out.push_back(exact_check(
      "majorana-reduced-closure",
      "the halved bilinears on the surviving indices close over all " +
          std::to_string(rep.pairs_checked) + " bracket pairs",
      rep.closed && rep.sign == 1,
      rep.closed ? "fitted global sign s=+1; with index 5 collapsed, label "
                   "3 doubles as the fifth direction"
                 : rep.first_failure));
  return out;
}

std::vector<CheckRecord> spinor_checks(const SuiteConfig& config) {
  std::vector<CheckRecord> out;
  for (auto& r : gamma_checks()) out.push_back(std::move(r));
  for (auto& r : ladder_representation_checks(config))
    out.push_back(std::move(r));
  for (auto& r : majorana_checks()) out.push_back(std::move(r));
  return out;
}

}  // namespace dynsym
