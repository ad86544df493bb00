#pragma once

#include <array>
#include <map>
#include <vector>

#include "dynsym/jordan.hpp"
#include "dynsym/lie.hpp"
#include "dynsym/matrix.hpp"
#include "dynsym/report.hpp"
#include "dynsym/weyl.hpp"

namespace dynsym {

// Conformal generators realized as polynomial differential operators on the
// coordinates of a spin factor: translations, Lorentz rotations, dilation,
// special conformal transformations, and the structure operators built from
// the closed-form triple coefficients.
struct ConformalRealization {
  AlgebraSignature signature;
  SpinFactor factor;
  std::vector<WeylElement> P;
  std::vector<std::vector<WeylElement>> M;
  WeylElement D;
  std::vector<WeylElement> K;
  std::vector<std::vector<WeylElement>> S;
};

ConformalRealization conformal_realization(const SpinFactor& factor);

// Basis forms of the triple system sitting inside the conformal algebra:
// U_alpha = d_alpha, U^alpha = -i K^alpha, S_alpha^beta = i S^beta_alpha.
struct TripleSystem {
  std::vector<WeylElement> U_lower;
  std::vector<WeylElement> U_upper;
  std::vector<std::vector<WeylElement>> S_form;
};

TripleSystem triple_system(const ConformalRealization& conformal);

std::vector<CheckRecord> triple_bracket_checks(const SpinFactor& factor);
std::vector<CheckRecord> conformal_bracket_checks(const SpinFactor& factor);
std::vector<CheckRecord> grading_checks(const SpinFactor& factor);
std::vector<CheckRecord> structure_operator_checks(const SpinFactor& factor);
std::vector<CheckRecord> reduction_checks();

Matrix ambient_generator(const std::vector<int>& indices,
                         const std::map<int, int>& eta, int A, int B);
LieFamily<Matrix> ambient_family(const std::vector<int>& indices,
                                 const std::map<int, int>& eta);
std::vector<CheckRecord> ambient_checks();

// Rational function N(x) / (x^2)^m with Minkowski square in the denominator.
// Terms are kept as written; equality of two functions is always decided by
// exact evaluation on sample points, never structurally.
struct RatFn {
  std::map<std::array<int, 4>, GaussianRational> numerator;
  int denominator_power = 0;
};

RatFn ratfn_constant(const GaussianRational& c);
RatFn ratfn_coordinate(int mu);
RatFn ratfn_add(const RatFn& a, const RatFn& b);
RatFn ratfn_scale(const GaussianRational& c, const RatFn& f);
RatFn ratfn_mul(const RatFn& a, const RatFn& b);
RatFn ratfn_partial(const RatFn& f, int nu);

RatFn inversion_image(const RatFn& f);
RatFn all_minus_inversion_image(const RatFn& f);

GaussianRational ratfn_evaluate(const RatFn& f,
                                const std::array<Rational, 4>& point);
Rational minkowski_square(const std::array<Rational, 4>& point);

RatFn momentum_action(const RatFn& f, int mu);
RatFn special_conformal_action(const RatFn& f, int mu);
RatFn dilation_action(const RatFn& f);

std::vector<CheckRecord> inversion_checks(const SuiteConfig& config);

std::vector<CheckRecord> tkk_checks(const SuiteConfig& config);

}  // namespace dynsym
