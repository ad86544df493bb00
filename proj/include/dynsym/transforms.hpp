#pragma once

#include <array>
#include <vector>

#include "dynsym/rational.hpp"
#include "dynsym/report.hpp"

namespace dynsym {

// First-order jet of a phase-space function of (u1..u4, w1..w4): exact value
// together with all eight partial derivatives, propagated through rational
// arithmetic.
struct PhaseJet {
  Rational value;
  std::array<Rational, 8> partial{};
};

// Phase-space point with spinor coordinates u and conjugate momenta w.
struct SpinorPoint {
  std::array<Rational, 4> u{};
  std::array<Rational, 4> w{};
};

PhaseJet jet_constant(const Rational& c);
PhaseJet coordinate_jet(const SpinorPoint& point, int slot);

PhaseJet operator-(const PhaseJet& f);
PhaseJet operator+(const PhaseJet& f, const PhaseJet& g);
PhaseJet operator-(const PhaseJet& f, const PhaseJet& g);
PhaseJet operator*(const PhaseJet& f, const PhaseJet& g);
PhaseJet operator/(const PhaseJet& f, const PhaseJet& g);
PhaseJet operator*(const Rational& c, const PhaseJet& f);

Rational poisson_bracket(const PhaseJet& f, const PhaseJet& g);

enum class KsPositions { hopf_normalized, as_written };
enum class KsMomenta { as_printed, canonical };

struct KsImage {
  std::array<PhaseJet, 3> x;
  std::array<PhaseJet, 3> p;
  PhaseJet constraint;
  PhaseJet spinor_norm;
};

KsImage kustaanheimo_stiefel(
    const SpinorPoint& point,
    KsPositions positions = KsPositions::hopf_normalized,
    KsMomenta momenta = KsMomenta::as_printed);

struct LcImage {
  PhaseJet xi;
  PhaseJet eta;
  PhaseJet p_xi;
  PhaseJet p_eta;
};

// Reads only the first and third coordinate pairs, so it restricts to the
// plane u2 = u4 = w2 = w4 = 0.
LcImage levi_civita(const SpinorPoint& point);

std::vector<SpinorPoint> sample_points(unsigned seed, int count);
std::vector<SpinorPoint> constrained_sample_points(unsigned seed, int count);
std::vector<SpinorPoint> planar_sample_points(unsigned seed, int count);

std::vector<CheckRecord> ks_checks(const SuiteConfig& config);
std::vector<CheckRecord> lc_checks(const SuiteConfig& config);
std::vector<CheckRecord> transform_checks(const SuiteConfig& config);

}  // namespace dynsym
