#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dynsym/rational.hpp"
#include "dynsym/report.hpp"

namespace dynsym {

// Generator set of a Weyl algebra: paired position/derivative symbols with
// [d_j, x_k] = delta_jk, optionally extended by r = sqrt(x1^2+...+xn^2) and
// its inverse.
struct AlgebraSignature {
  std::vector<std::string> position_names;
  std::vector<std::string> derivative_names;
  bool radial = false;

  int vars() const { return static_cast<int>(position_names.size()); }
  friend bool operator==(const AlgebraSignature&,
                         const AlgebraSignature&) = default;
};

// Normal-form monomial x^alpha * r^eps * (x2)^-m * d^beta with all
// derivatives on the right; eps in {0,1}, m >= 0.
struct Monomial {
  std::vector<int> alpha;
  int eps = 0;
  int m = 0;
  std::vector<int> beta;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Finite Scalar-linear combination of normal-form monomials.  Immutable in
// practice: all algebra goes through the free functions below, which return
// fresh values.
class WeylElement {
 public:
  explicit WeylElement(AlgebraSignature sig);

  static WeylElement constant(const AlgebraSignature& sig, const Scalar& c);
  static WeylElement position(const AlgebraSignature& sig, int index);
  static WeylElement derivative(const AlgebraSignature& sig, int index);
  static WeylElement radial(const AlgebraSignature& sig);
  static WeylElement inverse_radial(const AlgebraSignature& sig);

  const AlgebraSignature& signature() const { return sig_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Monomial& mono) const;

  // Accumulates c * x^alpha r^eps (x2)^-m d^beta, reducing the radial part to
  // canonical form first.
  void add_term(const Monomial& mono, const Scalar& c);

  // Max over terms of |alpha| + eps - 2m + |beta|; zero element gives INT_MIN.
  int degree() const;

  friend WeylElement operator-(const WeylElement& e);
  friend WeylElement operator+(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator-(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator*(const Scalar& c, const WeylElement& e);
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b);

 private:
  void check_monomial(const Monomial& mono) const;

  AlgebraSignature sig_;
  std::map<Monomial, Scalar> terms_;
};

inline WeylElement operator*(std::int64_t c, const WeylElement& e) {
  return Scalar(c) * e;
}
inline bool is_zero(const WeylElement& e) { return e.is_zero(); }

WeylElement multiply(const WeylElement& a, const WeylElement& b);
WeylElement commutator(const WeylElement& a, const WeylElement& b);
WeylElement anticommutator(const WeylElement& a, const WeylElement& b);
WeylElement pow(const WeylElement& e, int n);

// Re-runs the canonical radial reduction on every term; idempotent, and the
// identity on elements already in normal form.
WeylElement radial_reduce(const WeylElement& e);

// Linear change of generators into a (possibly different) signature.
struct GeneratorMap {
  AlgebraSignature target;
  std::vector<WeylElement> position_images;
  std::vector<WeylElement> derivative_images;
};

// True iff every image is a homogeneous linear combination of target
// generators and the images reproduce the canonical commutators of the
// source signature.
bool is_canonical(const AlgebraSignature& source, const GeneratorMap& map,
                  std::string* why = nullptr);

// Rewrites e through the map; throws std::invalid_argument when the map fails
// the canonical-commutator check or e carries radial factors.
WeylElement substitute(const WeylElement& e, const GeneratorMap& map);

// Image of the polynomial p under the operator op (derivatives acting on p).
WeylElement apply(const WeylElement& op, const WeylElement& p);

// Formal adjoint: conjugates coefficients, maps each generator through the
// given images, and reverses factor order.  The images are not required to be
// canonical (the adjoint is an antihomomorphism).
WeylElement adjoint_with(const WeylElement& e, const GeneratorMap& involution);

std::string to_text(const WeylElement& e);
std::string to_text(const Monomial& mono, const AlgebraSignature& sig);

WeylElement random_polynomial(const AlgebraSignature& sig, std::mt19937& rng,
                              int max_degree, int term_count);

// Exact coordinates of target in the linear span of basis, if any.
std::optional<std::vector<Scalar>> solve_in_span(
    const std::vector<WeylElement>& basis, const WeylElement& target);

// Algebra kernel self-checks: canonical commutators, associativity, Jacobi,
// radial calculus, substitution homomorphism, span solver round trip.
std::vector<CheckRecord> weyl_checks(const SuiteConfig& config);

}  // namespace dynsym
