#include "dynsym/landau.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace dynsym {

namespace {

const Scalar kHalf(Rational(1, 2));
const Scalar kQuarter(Rational(1, 4));
const Scalar kI = Scalar::i();

WeylElement pos(const AlgebraSignature& sig, int k) {
  return WeylElement::position(sig, k);
}
WeylElement der(const AlgebraSignature& sig, int k) {
  return WeylElement::derivative(sig, k);
}
WeylElement one(const AlgebraSignature& sig) {
  return WeylElement::constant(sig, Scalar(1));
}

using MemberTable =
    std::vector<std::pair<std::string, WeylElement DiracGenerators::*>>;

const MemberTable& member_table() {
  static const MemberTable table = {
      {"m12", &DiracGenerators::m12},   {"m23", &DiracGenerators::m23},
      {"m31", &DiracGenerators::m31},   {"m1m1", &DiracGenerators::m1m1},
      {"m2m1", &DiracGenerators::m2m1}, {"m3m1", &DiracGenerators::m3m1},
      {"m01", &DiracGenerators::m01},   {"m02", &DiracGenerators::m02},
      {"m03", &DiracGenerators::m03},   {"mm10", &DiracGenerators::mm10}};
  return table;
}

DiracGenerators phase_presentation() {
  const auto sig = phase_signature();
  const WeylElement xi = pos(sig, 0), eta = pos(sig, 1);
  const WeylElement pxi = -kI * der(sig, 0), peta = -kI * der(sig, 1);
  return {Presentation::phase,
          sig,
          kHalf * (xi * peta - eta * pxi),
          kQuarter * (pxi * pxi - peta * peta + xi * xi - eta * eta),
          -kHalf * (xi * eta + pxi * peta),
          kHalf * (xi * eta - pxi * peta),
          kQuarter * (xi * xi - eta * eta + peta * peta - pxi * pxi),
          kHalf * (xi * pxi + eta * peta) -
              WeylElement::constant(sig, kI * kHalf),
          kHalf * (xi * peta + eta * pxi),
          kHalf * (xi * pxi - eta * peta),
          kQuarter * (pxi * pxi + peta * peta - xi * xi - eta * eta),
          kQuarter * (pxi * pxi + peta * peta + xi * xi + eta * eta)};
}

DiracGenerators holomorphic_presentation() {
  const auto sig = holomorphic_signature();
  const WeylElement z = pos(sig, 0), zb = pos(sig, 1);
  const WeylElement dz = der(sig, 0), dzb = der(sig, 1);
  return {Presentation::holomorphic,
          sig,
          kHalf * (z * dz - zb * dzb),
          kQuarter * (z * z + zb * zb - dz * dz - dzb * dzb),
          (kI * kQuarter) * (z * z - zb * zb + dz * dz - dzb * dzb),
          (-kI * kQuarter) * (z * z - zb * zb - dz * dz + dzb * dzb),
          kQuarter * (z * z + zb * zb + dz * dz + dzb * dzb),
          (-kI * kHalf) * (z * dz + zb * dzb + one(sig)),
          -kHalf * (z * dzb - zb * dz),
          (-kI * kHalf) * (zb * dz + z * dzb),
          -kHalf * (z * zb + dz * dzb),
          kHalf * (z * zb - dz * dzb)};
}

DiracGenerators oscillator_presentation() {
  const auto sig = oscillator_signature();
  const WeylElement ap = pos(sig, 0), bp = pos(sig, 1);
  const WeylElement am = der(sig, 0), bm = der(sig, 1);
  return {Presentation::oscillator,
          sig,
          kQuarter * (anticommutator(bm, bp) - anticommutator(am, ap)),
          kQuarter * (anticommutator(am, bp) + anticommutator(ap, bm)),
          (kI * kQuarter) * (anticommutator(am, bp) - anticommutator(ap, bm)),
          (kI * kQuarter) * (ap * ap - am * am + bm * bm - bp * bp),
          kQuarter * (am * am + ap * ap + bm * bm + bp * bp),
          (-kI * kQuarter) * (anticommutator(am, bm) - anticommutator(ap, bp)),
          -kQuarter * (am * am + ap * ap - bm * bm - bp * bp),
          (-kI * kQuarter) * (am * am - ap * ap + bm * bm - bp * bp),
          -kQuarter * (anticommutator(ap, bp) + anticommutator(am, bm)),
          kQuarter * (anticommutator(am, ap) + anticommutator(bm, bp))};
}

DiracGenerators cartesian_presentation() {
  const auto sig = phase_signature();
  const Scalar r = Scalar::inv_sqrt2();
  const WeylElement xi = pos(sig, 0), eta = pos(sig, 1);
  const WeylElement dxi = der(sig, 0), deta = der(sig, 1);
  const WeylElement axp = r * (xi - dxi), axm = r * (xi + dxi);
  const WeylElement ayp = r * (eta - deta), aym = r * (eta + deta);
  return {Presentation::cartesian,
          sig,
          (-kI * kHalf) * (axp * aym - ayp * axm),
          kHalf * (axp * axm - ayp * aym),
          -kHalf * (axp * aym + ayp * axm),
          kHalf * (axm * aym + axp * ayp),
          kQuarter * (axm * axm + axp * axp - aym * aym - ayp * ayp),
          (kI * kQuarter) * (axp * axp - axm * axm + ayp * ayp - aym * aym),
          (kI * kHalf) * (axp * ayp - axm * aym),
          (kI * kQuarter) * (axp * axp - axm * axm - ayp * ayp + aym * aym),
          -kQuarter * (axp * axp + axm * axm + ayp * ayp + aym * aym),
          kHalf * (axp * axm + aym * ayp)};
}

using Mat2 = std::array<std::array<Scalar, 2>, 2>;

Mat2 pauli(int k) {
  const Scalar z(0), u(1);
  switch (k) {
    case 1: return {{{z, u}, {u, z}}};
    case 2: return {{{z, -kI}, {kI, z}}};
    default: return {{{u, z}, {z, -u}}};
  }
}

Mat2 symplectic_unit() {
  const Scalar z(0), u(1);
  return {{{z, u}, {-u, z}}};
}

Mat2 transpose(const Mat2& m) {
  return {{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}};
}

Mat2 matmul(const Mat2& a, const Mat2& b) {
  Mat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

WeylElement quad(const std::array<WeylElement, 2>& left, const Mat2& m,
                 const std::array<WeylElement, 2>& right) {
  WeylElement out(left[0].signature());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      if (!m[a][b].is_zero()) out = out + m[a][b] * (left[a] * right[b]);
  return out;
}

DiracGenerators spinorial_presentation() {
  const auto sig = oscillator_signature();
  const std::array<WeylElement, 2> chi = {der(sig, 1), der(sig, 0)};
  const std::array<WeylElement, 2> chi_star = {pos(sig, 1), pos(sig, 0)};
  const Mat2 eps = symplectic_unit();

  const WeylElement m23 = kHalf * quad(chi_star, transpose(pauli(1)), chi);
  const WeylElement m31 = kHalf * quad(chi_star, transpose(pauli(2)), chi);
  const WeylElement m12 = kHalf * quad(chi_star, transpose(pauli(3)), chi);

  std::array<WeylElement, 3> boosts = {WeylElement(sig), WeylElement(sig),
                                       WeylElement(sig)};
  std::array<WeylElement, 3> rotations = boosts;
  for (int i = 1; i <= 3; ++i) {
    const WeylElement a =
        quad(chi_star, matmul(transpose(pauli(i)), transpose(eps)), chi_star);
    const WeylElement b = quad(chi, matmul(eps, transpose(pauli(i))), chi);
    boosts[i - 1] = (kI * kQuarter) * (a - b);
    rotations[i - 1] = kQuarter * (a + b);
  }

  const WeylElement mm10 =
      kHalf * (chi_star[0] * chi[0] + chi_star[1] * chi[1] + one(sig));

  return {Presentation::spinorial,
          sig,
          m12,
          m23,
          m31,
          -boosts[0],
          -boosts[1],
          -boosts[2],
          rotations[0],
          rotations[1],
          rotations[2],
          mm10};
}

DiracGenerators substitute_all(const DiracGenerators& g,
                               const GeneratorMap& map) {
  return {g.presentation,
          map.target,
          substitute(g.m12, map),
          substitute(g.m23, map),
          substitute(g.m31, map),
          substitute(g.m1m1, map),
          substitute(g.m2m1, map),
          substitute(g.m3m1, map),
          substitute(g.m01, map),
          substitute(g.m02, map),
          substitute(g.m03, map),
          substitute(g.mm10, map)};
}

double max_abs(const FockOperator& op) {
  double worst = 0.0;
  for (int k = 0; k < op.outerSize(); ++k)
    for (FockOperator::InnerIterator it(op, k); it; ++it)
      worst = std::max(worst, std::abs(it.value()));
  return worst;
}

}  // namespace

LandauFrame LandauFrame::from_omega(double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  LandauFrame frame;
  frame.omega = omega;
  frame.magnetic_length = 0.0;
  return frame;
}

LandauFrame LandauFrame::from_gaussian(double field_gauss, double mass_gram,
                                       double charge_esu) {
  if (!(field_gauss > 0.0) || !(mass_gram > 0.0) || !(charge_esu > 0.0))
    throw std::invalid_argument("field, mass and charge must be positive");
  constexpr double kLightSpeed = 2.99792458e10;
  constexpr double kHbar = 1.054571817e-27;
  LandauFrame frame;
  frame.omega = charge_esu * field_gauss / (mass_gram * kLightSpeed);
  frame.magnetic_length =
      std::sqrt(kHbar * kLightSpeed / (charge_esu * field_gauss));
  return frame;
}

std::string presentation_name(Presentation p) {
  switch (p) {
    case Presentation::phase: return "phase";
    case Presentation::holomorphic: return "holomorphic";
    case Presentation::oscillator: return "oscillator";
    case Presentation::spinorial: return "spinorial";
    case Presentation::cartesian: return "cartesian";
  }
  throw std::invalid_argument("unknown presentation");
}

std::optional<Presentation> presentation_from_name(const std::string& name) {
  for (Presentation p :
       {Presentation::phase, Presentation::holomorphic,
        Presentation::oscillator, Presentation::spinorial,
        Presentation::cartesian})
    if (presentation_name(p) == name) return p;
  return std::nullopt;
}

AlgebraSignature phase_signature() {
  return {{"xi", "eta"}, {"dxi", "deta"}, false};
}

AlgebraSignature holomorphic_signature() {
  return {{"z", "zb"}, {"dz", "dzb"}, false};
}

AlgebraSignature oscillator_signature() {
  return {{"a+", "b+"}, {"a-", "b-"}, false};
}

PhaseOperators build_phase_operators() {
  const auto sig = phase_signature();
  const Scalar r = Scalar::inv_sqrt2();
  const WeylElement xi = pos(sig, 0), eta = pos(sig, 1);
  const WeylElement pxi = -kI * der(sig, 0), peta = -kI * der(sig, 1);
  const WeylElement Px = r * (pxi + eta);
  const WeylElement Py = r * (peta - xi);
  const WeylElement X = r * (xi + peta);
  const WeylElement Y = r * (eta - pxi);
  const WeylElement H = kHalf * (Px * Px + Py * Py);
  const WeylElement Lz = xi * peta - eta * pxi;
  return {Px, Py, X, Y, H, Lz};
}

Oscillators build_oscillators() {
  const auto sig = holomorphic_signature();
  const Scalar r = Scalar::inv_sqrt2();
  const WeylElement z = pos(sig, 0), zb = pos(sig, 1);
  const WeylElement dz = der(sig, 0), dzb = der(sig, 1);
  Oscillators o{r * (zb - dz), r * (z + dzb), r * (z - dzb), r * (zb + dz)};
  const WeylElement unit = one(sig);
  const bool ok = commutator(o.a_minus, o.a_plus) == unit &&
                  commutator(o.b_minus, o.b_plus) == unit &&
                  is_zero(commutator(o.a_minus, o.b_minus)) &&
                  is_zero(commutator(o.a_minus, o.b_plus)) &&
                  is_zero(commutator(o.a_plus, o.b_minus)) &&
                  is_zero(commutator(o.a_plus, o.b_plus));
  if (!ok) throw std::logic_error("ladder normalization broken");
  return o;
}

LieFamily<WeylElement> DiracGenerators::family() const {
  LieFamily<WeylElement> fam{{-1, 0, 1, 2, 3},
                             {{-1, 1}, {0, 1}, {1, -1}, {2, -1}, {3, -1}},
                             {},
                             WeylElement(signature)};
  fam.generators.emplace(std::make_pair(-1, 0), mm10);
  fam.generators.emplace(std::make_pair(-1, 1), -m1m1);
  fam.generators.emplace(std::make_pair(-1, 2), -m2m1);
  fam.generators.emplace(std::make_pair(-1, 3), -m3m1);
  fam.generators.emplace(std::make_pair(0, 1), m01);
  fam.generators.emplace(std::make_pair(0, 2), m02);
  fam.generators.emplace(std::make_pair(0, 3), m03);
  fam.generators.emplace(std::make_pair(1, 2), m12);
  fam.generators.emplace(std::make_pair(1, 3), -m31);
  fam.generators.emplace(std::make_pair(2, 3), m23);
  return fam;
}

WeylElement DiracGenerators::stored(int a, int b) const {
  if (a == b) return WeylElement(signature);
  if (a > b) return Scalar(-1) * stored(b, a);
  if (a == -1 && b == 0) return mm10;
  if (a == -1 && b == 1) return -m1m1;
  if (a == -1 && b == 2) return -m2m1;
  if (a == -1 && b == 3) return -m3m1;
  if (a == 0 && b == 1) return m01;
  if (a == 0 && b == 2) return m02;
  if (a == 0 && b == 3) return m03;
  if (a == 1 && b == 2) return m12;
  if (a == 1 && b == 3) return -m31;
  if (a == 2 && b == 3) return m23;
  throw std::out_of_range("generator index pair");
}

DiracGenerators dirac_generators(Presentation p) {
  switch (p) {
    case Presentation::phase: return phase_presentation();
    case Presentation::holomorphic: return holomorphic_presentation();
    case Presentation::oscillator: return oscillator_presentation();
    case Presentation::spinorial: return spinorial_presentation();
    case Presentation::cartesian: return cartesian_presentation();
  }
  throw std::invalid_argument("unknown presentation");
}

GeneratorMap holomorphic_to_phase_map() {
  const auto ph = phase_signature();
  const Scalar r = Scalar::inv_sqrt2();
  const WeylElement xi = pos(ph, 0), eta = pos(ph, 1);
  const WeylElement dxi = der(ph, 0), deta = der(ph, 1);
  return {ph,
          {r * (xi + kI * eta), r * (xi - kI * eta)},
          {r * (dxi - kI * deta), r * (dxi + kI * deta)}};
}

GeneratorMap oscillator_to_holomorphic_map() {
  const auto ho = holomorphic_signature();
  const Scalar r = Scalar::inv_sqrt2();
  const WeylElement z = pos(ho, 0), zb = pos(ho, 1);
  const WeylElement dz = der(ho, 0), dzb = der(ho, 1);
  return {ho,
          {r * (zb - dz), r * (z - dzb)},
          {r * (z + dzb), r * (zb + dz)}};
}

GeneratorMap landau_gauge_map() {
  const auto ph = phase_signature();
  const WeylElement xi = pos(ph, 0), eta = pos(ph, 1);
  const WeylElement dxi = der(ph, 0), deta = der(ph, 1);
  return {ph, {xi, eta}, {dxi - kI * eta, deta - kI * xi}};
}

WeylElement landau_gauge_hamiltonian() {
  const auto sig = phase_signature();
  const WeylElement eta = pos(sig, 1);
  const WeylElement pxi = -kI * der(sig, 0), peta = -kI * der(sig, 1);
  const WeylElement shifted = pxi + 2 * eta;
  return kQuarter * (shifted * shifted + peta * peta);
}

DiracGenerators map_to_phase(const DiracGenerators& g) {
  if (g.signature == phase_signature()) return g;
  if (g.signature == holomorphic_signature())
    return substitute_all(g, holomorphic_to_phase_map());
  return map_to_phase(substitute_all(g, oscillator_to_holomorphic_map()));
}

WeylSpinor weyl_spinor() {
  const auto o = build_oscillators();
  return {{o.b_minus, o.a_minus}, {o.b_plus, o.a_plus}};
}

std::vector<CheckRecord> verify_so23(const DiracGenerators& g) {
  const auto report = verify_closure(g.family());
  const std::string name = presentation_name(g.presentation);
  std::string notes;
  if (report.closed) {
    notes = "fitted global sign s=" + std::to_string(report.sign) +
            " in [g_AB,g_CD] = s(-i)(eta_AC g_BD + eta_BD g_AC - eta_AD g_BC" +
            " - eta_BC g_AD), metric diag(+,+,-,-,-) on indices {-1,0,1,2,3}";
  } else {
    notes = report.first_failure;
  }
  std::vector<CheckRecord> out;
  out.push_back(exact_check(
      "so23-closure-" + name,
      name + " generators close on so(2,3) across all " +
          std::to_string(report.pairs_checked) + " bracket pairs",
      report.closed, notes));
  return out;
}

std::vector<CheckRecord> cross_presentation_check() {
  std::vector<CheckRecord> out;
  const auto phase = phase_presentation();
  const auto holo = holomorphic_presentation();
  const auto osc = oscillator_presentation();
  const auto spin = spinorial_presentation();
  const auto cart = cartesian_presentation();

  const auto holo_in_phase = map_to_phase(holo);
  const auto osc_in_holo = substitute_all(osc, oscillator_to_holomorphic_map());
  const auto osc_in_phase = map_to_phase(osc);

  const auto compare = [&out](const std::string& tag, const std::string& what,
                              const DiracGenerators& a,
                              const DiracGenerators& b) {
    for (const auto& [name, member] : member_table())
      out.push_back(
          exact_check("xpres-" + tag + "-" + name, name + ": " + what,
                      a.*member == b.*member));
  };

  compare("holo-phase",
          "holomorphic element rewritten in phase variables equals the phase "
          "element",
          holo_in_phase, phase);
  compare("osc-holo",
          "ladder element rewritten in holomorphic variables equals the "
          "holomorphic element",
          osc_in_holo, holo);
  compare("osc-phase",
          "ladder element rewritten in phase variables equals the phase "
          "element",
          osc_in_phase, phase);
  compare("spin-osc",
          "spinor bilinear equals the explicit ladder quadratic", spin, osc);
  compare("cart-phase",
          "cartesian ladder combination equals the phase element", cart,
          phase);
  return out;
}

std::vector<CheckRecord> hamiltonian_identities(const SuiteConfig& config) {
  std::vector<CheckRecord> out;
  const auto sig = phase_signature();
  const auto ops = build_phase_operators();
  const auto phase = phase_presentation();

  const WeylElement xi = pos(sig, 0), eta = pos(sig, 1);
  const WeylElement pxi = -kI * der(sig, 0), peta = -kI * der(sig, 1);
  const WeylElement quadratic =
      kQuarter * (pxi * pxi + peta * peta + xi * xi + eta * eta);
  out.push_back(exact_check(
      "ham-split", "H = (p^2 + q^2)/4 - L_z/2 in guiding-centre variables",
      ops.H == quadratic - kHalf * ops.L_z));
  out.push_back(exact_check("ham-commutes-lz", "[H, L_z] = 0",
                            is_zero(commutator(ops.H, ops.L_z))));
  out.push_back(exact_check("ham-generator-split", "H = m(-1,0) - m(1,2)",
                            ops.H == phase.mm10 - phase.m12));

  const auto holo = holomorphic_presentation();
  const auto oscs = build_oscillators();
  const auto hsig = holomorphic_signature();
  const WeylElement Hh = holo.mm10 - holo.m12;
  const WeylElement Lh = 2 * holo.m12;
  out.push_back(exact_check(
      "ham-number-form", "H = a+ a- + 1/2",
      Hh == oscs.a_plus * oscs.a_minus + kHalf * one(hsig)));
  out.push_back(exact_check("ham-raises", "[H, a+] = a+",
                            commutator(Hh, oscs.a_plus) == oscs.a_plus));
  out.push_back(exact_check("ham-lowers", "[H, a-] = -a-",
                            commutator(Hh, oscs.a_minus) == -oscs.a_minus));
  out.push_back(exact_check("ham-guiding-raise", "[H, b+] = 0",
                            is_zero(commutator(Hh, oscs.b_plus))));
  out.push_back(exact_check("ham-guiding-lower", "[H, b-] = 0",
                            is_zero(commutator(Hh, oscs.b_minus))));
  out.push_back(exact_check("lz-ladder-ap", "[L_z, a+] = -a+",
                            commutator(Lh, oscs.a_plus) == -oscs.a_plus));
  out.push_back(exact_check("lz-ladder-am", "[L_z, a-] = a-",
                            commutator(Lh, oscs.a_minus) == oscs.a_minus));
  out.push_back(exact_check("lz-ladder-bp", "[L_z, b+] = b+",
                            commutator(Lh, oscs.b_plus) == oscs.b_plus));
  out.push_back(exact_check("lz-ladder-bm", "[L_z, b-] = -b-",
                            commutator(Lh, oscs.b_minus) == -oscs.b_minus));

  const auto spinor = weyl_spinor();
  const WeylElement pairing = spinor.chi_star[0] * spinor.chi[0] +
                              spinor.chi_star[1] * spinor.chi[1];
  out.push_back(exact_check("compact-generator-spinor-form",
                            "m(-1,0) = (chi* chi + 1)/2",
                            holo.mm10 == kHalf * (pairing + one(hsig))));

  out.push_back(exact_check("rotation-block-m12", "[m(1,2), m(-1,0)] = 0",
                            is_zero(commutator(phase.m12, phase.mm10))));
  out.push_back(exact_check("rotation-block-m23", "[m(2,3), m(-1,0)] = 0",
                            is_zero(commutator(phase.m23, phase.mm10))));
  out.push_back(exact_check("rotation-block-m31", "[m(3,1), m(-1,0)] = 0",
                            is_zero(commutator(phase.m31, phase.mm10))));

  const std::vector<WeylElement> triple = {phase.mm10, -phase.m3m1,
                                           phase.m03};
  bool triple_closes = true;
  for (std::size_t i = 0; i < triple.size() && triple_closes; ++i)
    for (std::size_t j = i + 1; j < triple.size() && triple_closes; ++j)
      triple_closes =
          solve_in_span(triple, commutator(triple[i], triple[j])).has_value();
  out.push_back(exact_check(
      "radial-triple",
      "brackets of {m(-1,0), m(-1,3), m(0,3)} stay in their own span",
      triple_closes));

  out.push_back(exact_check(
      "gauge-equivalence",
      "Landau-gauge H maps onto symmetric-gauge H under the gauge shift",
      substitute(landau_gauge_hamiltonian(), landau_gauge_map()) == ops.H));

  CheckRecord adjoint;
  adjoint.id = "adjoint-classification";
  adjoint.description =
      "adjoint type of each generator under ladder conjugation (recorded, "
      "not asserted)";
  adjoint.status = CheckStatus::pass;
  adjoint.convention_notes = oscillator_adjoint_summary();
  out.push_back(adjoint);

  const FockBasis basis(2, config.fock_cutoff_2mode);
  const auto hdict = oscillator_dictionary(basis, hsig);
  const FockOperator Hreal = realize(Hh, hdict);
  const FockOperator Lreal = realize(Lh, hdict);
  out.push_back(numeric_check(
      "fock-h-hermitian", "realized H equals its conjugate transpose",
      max_abs(FockOperator(Hreal - FockOperator(Hreal.adjoint()))),
      config.tolerance_numeric));
  out.push_back(numeric_check(
      "fock-h-lz-commute",
      "realized [H, L_z] vanishes on the truncation-safe block",
      interior_residual(FockOperator(Hreal * Lreal - Lreal * Hreal), basis),
      config.tolerance_numeric));
  const FockOperator cyc_raise = ladder_raise(basis, 0);
  const FockOperator cyc_lower = ladder_lower(basis, 0);
  const FockOperator number_form = FockOperator(
      std::complex<double>(0.5, 0.0) *
      (cyc_raise * cyc_lower + cyc_lower * cyc_raise));
  out.push_back(numeric_check(
      "fock-h-number-form",
      "realized H equals the cyclotron number operator on the full matrix",
      max_abs(FockOperator(Hreal - number_form)), config.tolerance_numeric,
      "guiding-centre contributions cancel identically even at the "
      "truncation boundary"));
  const auto pdict = oscillator_dictionary(basis, sig);
  const FockOperator Hp = realize(ops.H, pdict);
  const FockOperator Lp = realize(ops.L_z, pdict);
  out.push_back(numeric_check(
      "fock-h-lz-commute-phase",
      "phase-variable realization of [H, L_z] vanishes on the "
      "truncation-safe block",
      interior_residual(FockOperator(Hp * Lp - Lp * Hp), basis),
      config.tolerance_numeric));
  return out;
}

std::vector<SpectrumLevel> landau_spectrum(int cutoff) {
  const auto holo = holomorphic_presentation();
  const WeylElement Hh = holo.mm10 - holo.m12;
  const FockBasis basis(2, cutoff);
  const auto dict = oscillator_dictionary(basis, holomorphic_signature());
  return cluster_spectrum(hermitian_spectrum(realize(Hh, dict)), 1e-8);
}

std::string oscillator_adjoint_summary() {
  const auto osc = oscillator_presentation();
  const auto sig = oscillator_signature();
  const GeneratorMap star{
      sig,
      {der(sig, 0), der(sig, 1)},
      {pos(sig, 0), pos(sig, 1)}};
  std::string out;
  for (const auto& [name, member] : member_table()) {
    const WeylElement& g = osc.*member;
    const WeylElement adj = adjoint_with(g, star);
    const char* kind =
        adj == g ? "hermitian" : (adj == -g ? "antihermitian" : "neither");
    if (!out.empty()) out += ", ";
    out += name;
    out += ":";
    out += kind;
  }
  return out;
}

}  // namespace dynsym
