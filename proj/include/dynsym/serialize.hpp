#pragma once

#include <json.hpp>

#include "dynsym/lie.hpp"
#include "dynsym/matrix.hpp"
#include "dynsym/weyl.hpp"

namespace dynsym {

// Rationals render as "p/q" strings, complex values as [re, im] pairs.
nlohmann::ordered_json json_rational(const Rational& q);
nlohmann::ordered_json json_complex(const GaussianRational& z);

// Pure Gaussian scalars render as [re, im]; scalars with a sqrt(2) part as
// {"one": [re, im], "sqrt2": [re, im]}.
nlohmann::ordered_json json_scalar(const Scalar& c);

// One record per normal-form term: coefficient, position exponents, radial
// flag, inverse-square power, derivative exponents.
nlohmann::ordered_json json_weyl_element(const WeylElement& e);

nlohmann::ordered_json json_matrix(const Matrix& m);

// Rows keyed by the bracketed generator pairs, each row listing the pairs
// that appear on the right side with their coefficients.
nlohmann::ordered_json json_structure_table(const StructureTable& table);

}  // namespace dynsym
