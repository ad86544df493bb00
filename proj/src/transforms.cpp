#include "dynsym/transforms.hpp"

#include <random>
#include <string>

namespace dynsym {

PhaseJet jet_constant(const Rational& c) {
  PhaseJet f;
  f.value = c;
  return f;
}

PhaseJet coordinate_jet(const SpinorPoint& point, int slot) {
  PhaseJet f;
  f.value = slot < 4 ? point.u[slot] : point.w[slot - 4];
  f.partial[slot] = Rational(1);
  return f;
}

PhaseJet operator-(const PhaseJet& f) {
  PhaseJet out;
  out.value = -f.value;
  for (int k = 0; k < 8; ++k) out.partial[k] = -f.partial[k];
  return out;
}

PhaseJet operator+(const PhaseJet& f, const PhaseJet& g) {
  PhaseJet out;
  out.value = f.value + g.value;
  for (int k = 0; k < 8; ++k) out.partial[k] = f.partial[k] + g.partial[k];
  return out;
}

PhaseJet operator-(const PhaseJet& f, const PhaseJet& g) {
  PhaseJet out;
  out.value = f.value - g.value;
  for (int k = 0; k < 8; ++k) out.partial[k] = f.partial[k] - g.partial[k];
  return out;
}

PhaseJet operator*(const PhaseJet& f, const PhaseJet& g) {
  PhaseJet out;
  out.value = f.value * g.value;
  for (int k = 0; k < 8; ++k)
    out.partial[k] = f.value * g.partial[k] + g.value * f.partial[k];
  return out;
}

PhaseJet operator/(const PhaseJet& f, const PhaseJet& g) {
  PhaseJet out;
  out.value = f.value / g.value;
  const Rational square = g.value * g.value;
  for (int k = 0; k < 8; ++k)
    out.partial[k] =
        (f.partial[k] * g.value - f.value * g.partial[k]) / square;
  return out;
}

PhaseJet operator*(const Rational& c, const PhaseJet& f) {
  PhaseJet out;
  out.value = c * f.value;
  for (int k = 0; k < 8; ++k) out.partial[k] = c * f.partial[k];
  return out;
}

Rational poisson_bracket(const PhaseJet& f, const PhaseJet& g) {
  Rational total(0);
  for (int k = 0; k < 4; ++k)
    total += f.partial[k] * g.partial[k + 4] - f.partial[k + 4] * g.partial[k];
  return total;
}

namespace {

struct Jets {
  std::array<PhaseJet, 4> u;
  std::array<PhaseJet, 4> w;
};

Jets lift(const SpinorPoint& point) {
  Jets j;
  for (int k = 0; k < 4; ++k) {
    j.u[k] = coordinate_jet(point, k);
    j.w[k] = coordinate_jet(point, k + 4);
  }
  return j;
}

}  // namespace

KsImage kustaanheimo_stiefel(const SpinorPoint& point, KsPositions positions,
                             KsMomenta momenta) {
  const auto j = lift(point);
  const auto& u = j.u;
  const auto& w = j.w;

  KsImage img;
  img.x[0] = u[0] * u[2] + u[1] * u[3];
  img.x[1] = u[1] * u[2] - u[0] * u[3];
  if (positions == KsPositions::hopf_normalized) {
    img.x[0] = Rational(2) * img.x[0];
    img.x[1] = Rational(2) * img.x[1];
  }
  img.x[2] = u[2] * u[2] + u[3] * u[3] - u[0] * u[0] - u[1] * u[1];

  img.spinor_norm = u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3];
  img.p[0] = -(u[0] * w[2] + w[0] * u[2] + u[1] * w[3] + w[1] * u[3]) /
             img.spinor_norm;
  img.p[1] = -(u[1] * w[2] + w[1] * u[2] - w[0] * u[3] - u[0] * w[3]) /
             img.spinor_norm;
  img.p[2] = (u[0] * w[0] + u[1] * w[1] - u[2] * w[2] - u[3] * w[3]) /
             img.spinor_norm;
  if (momenta == KsMomenta::canonical)
    for (auto& component : img.p)
      component = Rational(-1, 2) * component;

  img.constraint = u[0] * w[1] - u[1] * w[0] + u[2] * w[3] - u[3] * w[2];
  return img;
}

LcImage levi_civita(const SpinorPoint& point) {
  const PhaseJet u1 = coordinate_jet(point, 0);
  const PhaseJet u3 = coordinate_jet(point, 2);
  const PhaseJet w1 = coordinate_jet(point, 4);
  const PhaseJet w3 = coordinate_jet(point, 6);
  const PhaseJet norm = u1 * u1 + u3 * u3;

  LcImage img;
  img.xi = u1 * u1 - u3 * u3;
  img.eta = Rational(2) * (u1 * u3);
  img.p_xi = (u1 * w1 - u3 * w3) / norm;
  img.p_eta = -(u1 * w3 + w1 * u3) / norm;
  return img;
}

std::vector<SpinorPoint> sample_points(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  std::vector<SpinorPoint> out;
  while (out.size() < static_cast<std::size_t>(count)) {
    SpinorPoint pt;
    bool nonzero = false;
    for (int k = 0; k < 4; ++k) {
      pt.u[k] = Rational(dist(rng));
      pt.w[k] = Rational(dist(rng));
      nonzero = nonzero || !pt.u[k].is_zero();
    }
    if (!nonzero) continue;
    out.push_back(pt);
  }
  return out;
}

std::vector<SpinorPoint> constrained_sample_points(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  std::vector<SpinorPoint> out;
  while (out.size() < static_cast<std::size_t>(count)) {
    SpinorPoint pt;
    bool nonzero = false;
    for (int k = 0; k < 4; ++k) {
      pt.u[k] = Rational(dist(rng));
      nonzero = nonzero || !pt.u[k].is_zero();
    }
    if (!nonzero) continue;

    const Rational coefficient[4] = {-pt.u[1], pt.u[0], -pt.u[3], pt.u[2]};
    int pivot = -1;
    for (int k = 0; k < 4 && pivot < 0; ++k)
      if (!coefficient[k].is_zero()) pivot = k;

    Rational rest(0);
    for (int k = 0; k < 4; ++k) {
      if (k == pivot) continue;
      pt.w[k] = Rational(dist(rng));
      rest += coefficient[k] * pt.w[k];
    }
    pt.w[pivot] = -rest / coefficient[pivot];
    out.push_back(pt);
  }
  return out;
}

std::vector<SpinorPoint> planar_sample_points(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  std::vector<SpinorPoint> out;
  while (out.size() < static_cast<std::size_t>(count)) {
    SpinorPoint pt;
    pt.u[0] = Rational(dist(rng));
    pt.u[2] = Rational(dist(rng));
    pt.w[0] = Rational(dist(rng));
    pt.w[2] = Rational(dist(rng));
    if (pt.u[0].is_zero() && pt.u[2].is_zero()) continue;
    out.push_back(pt);
  }
  return out;
}

std::vector<CheckRecord> ks_checks(const SuiteConfig& config) {
  std::vector<CheckRecord> out;
  const auto points = sample_points(config.seed, config.trials);
  const auto constrained =
      constrained_sample_points(config.seed, config.trials);
  const std::string sample_note =
      std::to_string(config.trials) + " exact rational points";

  bool canonical = true;
  for (const auto& pt : points) {
    const auto img = kustaanheimo_stiefel(pt);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        canonical = canonical &&
                    poisson_bracket(img.x[i], img.p[j]) ==
                        Rational(i == j ? -2 : 0);
  }
  out.push_back(exact_check(
      "ks-hopf-canonical-brackets",
      "{x_i, p_j} = -2 delta_ij with the doubled planar coordinates at " +
          sample_note,
      canonical,
      "one common constant across all three coordinates, with the momenta "
      "kept as written"));

  bool commuting_positions = true;
  for (const auto& pt : points)
    for (KsPositions mode :
         {KsPositions::hopf_normalized, KsPositions::as_written}) {
      const auto img = kustaanheimo_stiefel(pt, mode);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          commuting_positions =
              commuting_positions &&
              poisson_bracket(img.x[i], img.x[j]).is_zero();
    }
  out.push_back(exact_check("ks-position-brackets-vanish",
                            "{x_i, x_j} = 0 in both position conventions at " +
                                sample_note,
                            commuting_positions));

  bool central = true;
  for (const auto& pt : points) {
    const auto img = kustaanheimo_stiefel(pt);
    for (int i = 0; i < 3; ++i)
      central =
          central && poisson_bracket(img.constraint, img.x[i]).is_zero();
  }
  out.push_back(exact_check(
      "ks-constraint-commutes-with-positions",
      "the bilinear constraint has vanishing bracket with every coordinate "
      "at " + sample_note,
      central));

  bool norm = true;
  for (const auto& pt : points) {
    const auto img = kustaanheimo_stiefel(pt);
    const Rational radius = img.x[0].value * img.x[0].value +
                            img.x[1].value * img.x[1].value +
                            img.x[2].value * img.x[2].value;
    const Rational quartic = img.spinor_norm.value * img.spinor_norm.value;
    norm = norm && radius == quartic;
  }
  out.push_back(exact_check(
      "ks-hopf-norm",
      "|x|^2 = |z|^4 with the doubled planar coordinates at " + sample_note,
      norm));

  bool rescaled = true;
  for (const auto& pt : points) {
    const auto img = kustaanheimo_stiefel(pt, KsPositions::hopf_normalized,
                                          KsMomenta::canonical);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        rescaled = rescaled &&
                   poisson_bracket(img.x[i], img.p[j]) ==
                       Rational(i == j ? 1 : 0);
  }
  out.push_back(exact_check(
      "ks-canonical-momenta-option",
      "rescaling the momenta by -1/2 turns the bracket constant into "
      "+delta_ij at " + sample_note,
      rescaled));

  bool momenta_commute = true;
  for (const auto& pt : constrained) {
    const auto img = kustaanheimo_stiefel(pt);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        momenta_commute = momenta_commute &&
                          poisson_bracket(img.p[i], img.p[j]).is_zero();
  }
  out.push_back(exact_check(
      "ks-momentum-brackets-on-constraint",
      "{p_i, p_j} = 0 on the zero set of the bilinear constraint at " +
          sample_note,
      momenta_commute));

  bool deviates = false;
  for (const auto& pt : points) {
    const auto img = kustaanheimo_stiefel(pt, KsPositions::as_written);
    const Rational radius = img.x[0].value * img.x[0].value +
                            img.x[1].value * img.x[1].value +
                            img.x[2].value * img.x[2].value;
    const Rational quartic = img.spinor_norm.value * img.spinor_norm.value;
    if (radius != quartic) deviates = true;
  }
  CheckRecord as_written_norm;
  as_written_norm.id = "ks-as-written-norm";
  as_written_norm.description =
      "|x|^2 = |z|^4 with the planar coordinates kept as written";
  as_written_norm.status =
      deviates ? CheckStatus::expected_fail : CheckStatus::fail;
  as_written_norm.convention_notes =
      "known deviation: at u=(1,0,1,0), w=0 the squared radius is 1 while "
      "|z|^4 = 4; doubling the planar coordinates repairs the identity";
  out.push_back(as_written_norm);

  bool deficit = true;
  for (const auto& pt : points) {
    const auto img = kustaanheimo_stiefel(pt, KsPositions::as_written);
    const Rational radius = img.x[0].value * img.x[0].value +
                            img.x[1].value * img.x[1].value +
                            img.x[2].value * img.x[2].value;
    const Rational quartic = img.spinor_norm.value * img.spinor_norm.value;
    const Rational planar = pt.u[0] * pt.u[0] + pt.u[1] * pt.u[1];
    const Rational axial = pt.u[2] * pt.u[2] + pt.u[3] * pt.u[3];
    deficit = deficit && radius - quartic == Rational(-3) * planar * axial;
  }
  out.push_back(exact_check(
      "ks-as-written-norm-deficit",
      "the norm deviation equals -3(u1^2+u2^2)(u3^2+u4^2) exactly at " +
          sample_note,
      deficit));

  bool diagonal = true;
  const Rational expected_diagonal[3] = {Rational(-1), Rational(-1),
                                         Rational(-2)};
  for (const auto& pt : constrained) {
    const auto img = kustaanheimo_stiefel(pt, KsPositions::as_written);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        diagonal = diagonal &&
                   poisson_bracket(img.x[i], img.p[j]) ==
                       (i == j ? expected_diagonal[i] : Rational(0));
  }
  out.push_back(exact_check(
      "ks-as-written-diagonal-brackets",
      "as-written coordinates give bracket constants (-1, -1, -2) on the "
      "constraint surface",
      diagonal,
      "the planar pairs carry -1 while the axial pair keeps -2, so no "
      "single momentum rescaling makes all three canonical"));

  return out;
}

std::vector<CheckRecord> lc_checks(const SuiteConfig& config) {
  std::vector<CheckRecord> out;
  const auto points = planar_sample_points(config.seed, config.trials);
  const std::string sample_note =
      std::to_string(config.trials) + " exact rational points";

  bool brackets = true;
  for (const auto& pt : points) {
    const auto img = levi_civita(pt);
    brackets = brackets && poisson_bracket(img.xi, img.p_xi) == Rational(2) &&
               poisson_bracket(img.eta, img.p_eta) == Rational(-2) &&
               poisson_bracket(img.xi, img.p_eta).is_zero() &&
               poisson_bracket(img.eta, img.p_xi).is_zero() &&
               poisson_bracket(img.xi, img.eta).is_zero() &&
               poisson_bracket(img.p_xi, img.p_eta).is_zero();
  }
  out.push_back(exact_check(
      "lc-conjugate-brackets",
      "{xi, p_xi} = +2 and {eta, p_eta} = -2 with vanishing cross brackets "
      "at " + sample_note,
      brackets,
      "the two conjugate pairs close with opposite constants"));

  bool cover = true;
  for (const auto& pt : points) {
    SpinorPoint mirrored;
    for (int k = 0; k < 4; ++k) {
      mirrored.u[k] = -pt.u[k];
      mirrored.w[k] = -pt.w[k];
    }
    const auto a = levi_civita(pt);
    const auto b = levi_civita(mirrored);
    cover = cover && a.xi.value == b.xi.value && a.eta.value == b.eta.value &&
            a.p_xi.value == b.p_xi.value && a.p_eta.value == b.p_eta.value;
  }
  out.push_back(exact_check(
      "lc-double-cover",
      "negating both spinor coordinates and momenta leaves the image fixed "
      "at " + sample_note,
      cover));

  bool restricted = true;
  for (const auto& pt : points) {
    const auto planar = levi_civita(pt);
    const auto full = kustaanheimo_stiefel(pt);
    restricted = restricted && full.x[0].value == planar.eta.value &&
                 full.x[1].value.is_zero() &&
                 full.x[2].value == -planar.xi.value &&
                 full.p[0].value == planar.p_eta.value &&
                 full.p[1].value.is_zero() &&
                 full.p[2].value == planar.p_xi.value;
  }
  out.push_back(exact_check(
      "lc-restriction-of-ks",
      "on the plane u2 = u4 = w2 = w4 = 0 the four-component map collapses "
      "onto the planar one",
      restricted,
      "the identification flips one sign: x3 = -xi"));

  return out;
}

std::vector<CheckRecord> transform_checks(const SuiteConfig& config) {
  std::vector<CheckRecord> out;
  for (auto& r : ks_checks(config)) out.push_back(std::move(r));
  for (auto& r : lc_checks(config)) out.push_back(std::move(r));
  return out;
}

}  // namespace dynsym
