#include "dynsym/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace dynsym {

namespace {

constexpr int kDegreeCap = 16;

int total(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

void check_signatures(const AlgebraSignature& a, const AlgebraSignature& b,
                      const char* op) {
  if (!(a == b))
    throw std::invalid_argument(std::string(op) +
                                ": operands carry different signatures");
}

}  // namespace

WeylElement::WeylElement(AlgebraSignature sig) : sig_(std::move(sig)) {
  if (sig_.position_names.size() != sig_.derivative_names.size())
    throw std::invalid_argument("signature requires paired generators");
}

WeylElement WeylElement::constant(const AlgebraSignature& sig,
                                  const Scalar& c) {
  WeylElement e(sig);
  Monomial one;
  one.alpha.assign(sig.position_names.size(), 0);
  one.beta.assign(sig.position_names.size(), 0);
  e.add_term(one, c);
  return e;
}

WeylElement WeylElement::position(const AlgebraSignature& sig, int index) {
  if (index < 0 || index >= sig.vars())
    throw std::out_of_range("position index out of range");
  WeylElement e(sig);
  Monomial mono;
  mono.alpha.assign(sig.vars(), 0);
  mono.beta.assign(sig.vars(), 0);
  mono.alpha[index] = 1;
  e.add_term(mono, Scalar(1));
  return e;
}

WeylElement WeylElement::derivative(const AlgebraSignature& sig, int index) {
  if (index < 0 || index >= sig.vars())
    throw std::out_of_range("derivative index out of range");
  WeylElement e(sig);
  Monomial mono;
  mono.alpha.assign(sig.vars(), 0);
  mono.beta.assign(sig.vars(), 0);
  mono.beta[index] = 1;
  e.add_term(mono, Scalar(1));
  return e;
}

WeylElement WeylElement::radial(const AlgebraSignature& sig) {
  if (!sig.radial)
    throw std::invalid_argument("signature has no radial extension");
  WeylElement e(sig);
  Monomial mono;
  mono.alpha.assign(sig.vars(), 0);
  mono.beta.assign(sig.vars(), 0);
  mono.eps = 1;
  e.add_term(mono, Scalar(1));
  return e;
}

WeylElement WeylElement::inverse_radial(const AlgebraSignature& sig) {
  if (!sig.radial)
    throw std::invalid_argument("signature has no radial extension");
  WeylElement e(sig);
  Monomial mono;
  mono.alpha.assign(sig.vars(), 0);
  mono.beta.assign(sig.vars(), 0);
  mono.eps = 1;
  mono.m = 1;
  e.add_term(mono, Scalar(1));
  return e;
}

Scalar WeylElement::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void WeylElement::check_monomial(const Monomial& mono) const {
  if (static_cast<int>(mono.alpha.size()) != sig_.vars() ||
      static_cast<int>(mono.beta.size()) != sig_.vars())
    throw std::invalid_argument("monomial arity does not match signature");
  if ((mono.eps != 0 || mono.m != 0) && !sig_.radial)
    throw std::invalid_argument("radial factor in a non-radial signature");
  if (total(mono.alpha) > kDegreeCap || total(mono.beta) > kDegreeCap ||
      mono.m > kDegreeCap)
    throw std::overflow_error("weyl degree cap (16) exceeded: " +
                              to_text(mono, sig_));
}

void WeylElement::add_term(const Monomial& mono, const Scalar& c) {
  if (c.is_zero()) return;
  check_monomial(mono);
  const int n = sig_.vars();
  const int d = n - 1;

  // Reduce r^eps to eps in {0,1}; each removed r^2 cancels one (x2) power.
  Monomial cur = mono;
  while (cur.eps >= 2) {
    cur.eps -= 2;
    cur.m -= 1;
  }

  // A negative m is a leftover numerator factor (x2)^-m; expand it.
  if (cur.m < 0) {
    cur.m += 1;
    for (int i = 0; i < n; ++i) {
      Monomial part = cur;
      part.alpha[i] += 2;
      add_term(part, c);
    }
    return;
  }

  // Canonical radial numerator: with m > 0, the last position variable
  // appears to degree < 2, via x_d^2 = (x2) - sum of the other squares.
  // This makes the normal form unique (a numerator of x_d-degree < 2 that is
  // divisible by (x2) must vanish).
  if (cur.m > 0 && cur.alpha[d] >= 2) {
    cur.alpha[d] -= 2;
    Monomial cancelled = cur;
    cancelled.m -= 1;
    add_term(cancelled, c);
    for (int i = 0; i < d; ++i) {
      Monomial part = cur;
      part.alpha[i] += 2;
      add_term(part, -c);
    }
    return;
  }

  auto [it, inserted] = terms_.try_emplace(cur, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int WeylElement::degree() const {
  if (terms_.empty()) return std::numeric_limits<int>::min();
  int deg = std::numeric_limits<int>::min();
  for (const auto& [mono, c] : terms_)
    deg = std::max(deg,
                   total(mono.alpha) + mono.eps - 2 * mono.m + total(mono.beta));
  return deg;
}

WeylElement operator-(const WeylElement& e) {
  WeylElement out(e.sig_);
  for (const auto& [mono, c] : e.terms_) out.terms_.emplace(mono, -c);
  return out;
}

WeylElement operator+(const WeylElement& a, const WeylElement& b) {
  check_signatures(a.sig_, b.sig_, "add");
  WeylElement out = a;
  for (const auto& [mono, c] : b.terms_) out.add_term(mono, c);
  return out;
}

WeylElement operator-(const WeylElement& a, const WeylElement& b) {
  check_signatures(a.sig_, b.sig_, "subtract");
  WeylElement out = a;
  for (const auto& [mono, c] : b.terms_) out.add_term(mono, -c);
  return out;
}

WeylElement operator*(const Scalar& c, const WeylElement& e) {
  WeylElement out(e.sig_);
  if (c.is_zero()) return out;
  for (const auto& [mono, coeff] : e.terms_) out.terms_.emplace(mono, c * coeff);
  return out;
}

bool operator==(const WeylElement& a, const WeylElement& b) {
  return a.sig_ == b.sig_ && a.terms_ == b.terms_;
}

WeylElement multiply(const WeylElement& a, const WeylElement& b) {
  check_signatures(a.signature(), b.signature(), "multiply");
  const AlgebraSignature& sig = a.signature();
  const int n = sig.vars();
  WeylElement out(sig);

  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      // Push the left factor's derivatives through the right factor's
      // position core, one derivative at a time:
      //   d_i (x^a r^e (x2)^-m d^b) = a_i x^(a-e_i) r^e (x2)^-m d^b
      //                             + (e-2m) x^(a+e_i) r^e (x2)^-(m+1) d^b
      //                             + x^a r^e (x2)^-m d^(b+e_i).
      std::vector<std::pair<Monomial, Scalar>> state;
      Monomial core = mb;
      core.beta.assign(n, 0);
      state.emplace_back(core, ca * cb);

      for (int i = 0; i < n; ++i) {
        for (int rep = 0; rep < ma.beta[i]; ++rep) {
          std::vector<std::pair<Monomial, Scalar>> next;
          next.reserve(state.size() * 3);
          for (const auto& [mono, c] : state) {
            if (mono.alpha[i] > 0) {
              Monomial lower = mono;
              lower.alpha[i] -= 1;
              next.emplace_back(lower, Scalar(mono.alpha[i]) * c);
            }
            const int radial_weight = mono.eps - 2 * mono.m;
            if (radial_weight != 0) {
              Monomial deeper = mono;
              deeper.alpha[i] += 1;
              deeper.m += 1;
              next.emplace_back(deeper, Scalar(radial_weight) * c);
            }
            Monomial passed = mono;
            passed.beta[i] += 1;
            next.emplace_back(passed, c);
          }
          state = std::move(next);
        }
      }

      for (auto& [mono, c] : state) {
        for (int i = 0; i < n; ++i) {
          mono.alpha[i] += ma.alpha[i];
          mono.beta[i] += mb.beta[i];
        }
        mono.eps += ma.eps;
        mono.m += ma.m;
        out.add_term(mono, c);
      }
    }
  }
  return out;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  return multiply(a, b);
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) {
  return multiply(a, b) - multiply(b, a);
}

WeylElement anticommutator(const WeylElement& a, const WeylElement& b) {
  return multiply(a, b) + multiply(b, a);
}

WeylElement pow(const WeylElement& e, int n) {
  if (n < 0) throw std::invalid_argument("negative operator power");
  WeylElement out = WeylElement::constant(e.signature(), Scalar(1));
  for (int k = 0; k < n; ++k) out = multiply(out, e);
  return out;
}

WeylElement radial_reduce(const WeylElement& e) {
  WeylElement out(e.signature());
  for (const auto& [mono, c] : e.terms()) out.add_term(mono, c);
  return out;
}

bool is_canonical(const AlgebraSignature& source, const GeneratorMap& map,
                  std::string* why) {
  const int n = source.vars();
  if (static_cast<int>(map.position_images.size()) != n ||
      static_cast<int>(map.derivative_images.size()) != n) {
    if (why) *why = "image count does not match source signature";
    return false;
  }
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (int i = 0; i < n; ++i) {
    for (const WeylElement* im :
         {&map.position_images[i], &map.derivative_images[i]}) {
      if (!(im->signature() == map.target))
        return fail("image lives outside the target signature");
      for (const auto& [mono, c] : im->terms()) {
        if (mono.eps != 0 || mono.m != 0 ||
            total(mono.alpha) + total(mono.beta) != 1)
          return fail("image of " + source.position_names[i] +
                      "-pair is not a homogeneous linear combination");
      }
    }
  }
  const WeylElement one = WeylElement::constant(map.target, Scalar(1));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const WeylElement dx =
          commutator(map.derivative_images[j], map.position_images[k]);
      const WeylElement expected = j == k ? one : Scalar(0) * one;
      if (!(dx == expected))
        return fail("[image " + source.derivative_names[j] + ", image " +
                    source.position_names[k] + "] != " +
                    (j == k ? "1" : "0"));
      if (!commutator(map.position_images[j], map.position_images[k]).is_zero())
        return fail("position images do not commute");
      if (!commutator(map.derivative_images[j], map.derivative_images[k])
               .is_zero())
        return fail("derivative images do not commute");
    }
  }
  return true;
}

WeylElement substitute(const WeylElement& e, const GeneratorMap& map) {
  std::string why;
  if (!is_canonical(e.signature(), map, &why))
    throw std::invalid_argument("non-canonical generator map: " + why);
  const int n = e.signature().vars();
  WeylElement out(map.target);
  for (const auto& [mono, c] : e.terms()) {
    if (mono.eps != 0 || mono.m != 0)
      throw std::invalid_argument("substitute does not cover radial factors");
    WeylElement product = WeylElement::constant(map.target, c);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < mono.alpha[i]; ++k)
        product = multiply(product, map.position_images[i]);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < mono.beta[i]; ++k)
        product = multiply(product, map.derivative_images[i]);
    out = out + product;
  }
  return out;
}

WeylElement apply(const WeylElement& op, const WeylElement& p) {
  check_signatures(op.signature(), p.signature(), "apply");
  for (const auto& [mono, c] : p.terms())
    if (total(mono.beta) != 0)
      throw std::invalid_argument("apply expects a multiplication operand");
  const WeylElement product = multiply(op, p);
  WeylElement out(op.signature());
  for (const auto& [mono, c] : product.terms())
    if (total(mono.beta) == 0) out.add_term(mono, c);
  return out;
}

WeylElement adjoint_with(const WeylElement& e, const GeneratorMap& involution) {
  const int n = e.signature().vars();
  if (static_cast<int>(involution.position_images.size()) != n ||
      static_cast<int>(involution.derivative_images.size()) != n)
    throw std::invalid_argument("involution image count mismatch");
  WeylElement out(involution.target);
  for (const auto& [mono, c] : e.terms()) {
    if (mono.eps != 0 || mono.m != 0)
      throw std::invalid_argument("adjoint does not cover radial factors");
    WeylElement product = WeylElement::constant(involution.target, c.conj());
    for (int i = n - 1; i >= 0; --i)
      for (int k = 0; k < mono.beta[i]; ++k)
        product = multiply(product, involution.derivative_images[i]);
    for (int i = n - 1; i >= 0; --i)
      for (int k = 0; k < mono.alpha[i]; ++k)
        product = multiply(product, involution.position_images[i]);
    out = out + product;
  }
  return out;
}

std::string to_text(const Monomial& mono, const AlgebraSignature& sig) {
  std::string s;
  auto emit = [&s](const std::string& name, int power) {
    if (power == 0) return;
    if (!s.empty()) s += " ";
    s += name;
    if (power != 1) s += "^" + std::to_string(power);
  };
  for (int i = 0; i < sig.vars(); ++i) emit(sig.position_names[i], mono.alpha[i]);
  emit("r", mono.eps);
  if (mono.m != 0) {
    if (!s.empty()) s += " ";
    s += "(x2)^-" + std::to_string(mono.m);
  }
  for (int i = 0; i < sig.vars(); ++i)
    emit(sig.derivative_names[i], mono.beta[i]);
  return s;
}

std::string to_text(const WeylElement& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [mono, c] : e.terms()) {
    if (!s.empty()) s += " + ";
    const std::string factors = to_text(mono, e.signature());
    s += c.str();
    if (!factors.empty()) s += " * " + factors;
  }
  return s;
}

WeylElement random_polynomial(const AlgebraSignature& sig, std::mt19937& rng,
                              int max_degree, int term_count) {
  const int n = sig.vars();
  std::uniform_int_distribution<int> pick_degree(0, max_degree);
  std::uniform_int_distribution<int> pick_slot(0, 2 * n - 1);
  std::uniform_int_distribution<int> pick_num(-3, 3);
  std::uniform_int_distribution<int> pick_den(1, 2);
  std::uniform_int_distribution<int> pick_part(0, 3);

  WeylElement out(sig);
  for (int t = 0; t < term_count; ++t) {
    Monomial mono;
    mono.alpha.assign(n, 0);
    mono.beta.assign(n, 0);
    const int deg = pick_degree(rng);
    for (int k = 0; k < deg; ++k) {
      const int slot = pick_slot(rng);
      if (slot < n)
        mono.alpha[slot] += 1;
      else
        mono.beta[slot - n] += 1;
    }
    const Rational re(pick_num(rng), pick_den(rng));
    const Rational im(pick_num(rng), pick_den(rng));
    Scalar c{GaussianRational(re, im)};
    if (pick_part(rng) == 0)
      c += Scalar{GaussianRational(0), GaussianRational(Rational(pick_num(rng)))};
    out.add_term(mono, c);
  }
  return out;
}

std::optional<std::vector<Scalar>> solve_in_span(
    const std::vector<WeylElement>& basis, const WeylElement& target) {
  if (basis.empty()) {
    if (target.is_zero()) return std::vector<Scalar>{};
    return std::nullopt;
  }
  std::map<Monomial, int> row_of;
  auto index_terms = [&row_of](const WeylElement& e) {
    for (const auto& [mono, c] : e.terms())
      row_of.try_emplace(mono, static_cast<int>(row_of.size()));
  };
  for (const auto& b : basis) index_terms(b);
  index_terms(target);

  const int rows = static_cast<int>(row_of.size());
  const int cols = static_cast<int>(basis.size());
  std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(cols + 1, Scalar(0)));
  for (int j = 0; j < cols; ++j)
    for (const auto& [mono, c] : basis[j].terms()) a[row_of[mono]][j] = c;
  for (const auto& [mono, c] : target.terms()) a[row_of[mono]][cols] = c;

  std::vector<int> pivot_col_of_row;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int row = rank; row < rows; ++row)
      if (!a[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    const Scalar inv = Scalar(1) / a[rank][col];
    for (int j = col; j <= cols; ++j) a[rank][j] = inv * a[rank][j];
    for (int row = 0; row < rows; ++row) {
      if (row == rank || a[row][col].is_zero()) continue;
      const Scalar f = a[row][col];
      for (int j = col; j <= cols; ++j) a[row][j] -= f * a[rank][j];
    }
    pivot_col_of_row.push_back(col);
    ++rank;
  }
  for (int row = rank; row < rows; ++row)
    if (!a[row][cols].is_zero()) return std::nullopt;

  std::vector<Scalar> solution(cols, Scalar(0));
  for (int row = 0; row < rank; ++row)
    solution[pivot_col_of_row[row]] = a[row][cols];
  return solution;
}

std::vector<CheckRecord> weyl_checks(const SuiteConfig& config) {
  std::vector<CheckRecord> out;
  const AlgebraSignature plain{{"x1", "x2"}, {"d1", "d2"}, false};
  const AlgebraSignature ball{{"x1", "x2", "x3"}, {"d1", "d2", "d3"}, true};
  const std::string trials_note =
      std::to_string(config.trials) + " random triples, seed " +
      std::to_string(config.seed);

  bool canonical_ok = true;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      const WeylElement xj = WeylElement::position(ball, j);
      const WeylElement xk = WeylElement::position(ball, k);
      const WeylElement dj = WeylElement::derivative(ball, j);
      const WeylElement dk = WeylElement::derivative(ball, k);
      const WeylElement delta = j == k
                                    ? WeylElement::constant(ball, Scalar(1))
                                    : WeylElement(ball);
      canonical_ok = canonical_ok && commutator(dj, xk) == delta &&
                     commutator(xj, xk).is_zero() &&
                     commutator(dj, dk).is_zero();
    }
  out.push_back(exact_check("weyl-canonical-commutators",
                            "generators obey [d_j, x_k] = delta_jk with "
                            "commuting positions and commuting derivatives",
                            canonical_ok));

  std::mt19937 rng(config.seed);
  bool assoc_ok = true;
  bool jacobi_ok = true;
  bool reduce_ok = true;
  for (int t = 0; t < config.trials; ++t) {
    const WeylElement f = random_polynomial(ball, rng, 3, 3);
    const WeylElement g = random_polynomial(ball, rng, 3, 3);
    const WeylElement h = random_polynomial(ball, rng, 3, 3);
    assoc_ok = assoc_ok &&
               multiply(multiply(f, g), h) == multiply(f, multiply(g, h));
    const WeylElement cyclic = commutator(commutator(f, g), h) +
                               commutator(commutator(g, h), f) +
                               commutator(commutator(h, f), g);
    jacobi_ok = jacobi_ok && cyclic.is_zero();
    reduce_ok = reduce_ok && radial_reduce(f) == f &&
                radial_reduce(multiply(f, g)) == multiply(f, g);
  }
  out.push_back(exact_check("weyl-product-associativity",
                            "operator product is associative on random "
                            "radial polynomials",
                            assoc_ok, trials_note));
  out.push_back(exact_check("weyl-commutator-jacobi",
                            "commutator satisfies the Jacobi identity on "
                            "random radial polynomials",
                            jacobi_ok, trials_note));
  out.push_back(exact_check("weyl-normal-form-stable",
                            "products land in normal form: the radial "
                            "reduction is the identity on every result",
                            reduce_ok, trials_note));

  const WeylElement r = WeylElement::radial(ball);
  const WeylElement rinv = WeylElement::inverse_radial(ball);
  const WeylElement one = WeylElement::constant(ball, Scalar(1));
  WeylElement x2(ball);
  for (int k = 0; k < 3; ++k) {
    const WeylElement xk = WeylElement::position(ball, k);
    x2 = x2 + multiply(xk, xk);
  }
  bool radial_ok = multiply(r, r) == x2 && multiply(r, rinv) == one &&
                   multiply(rinv, r) == one;
  for (int k = 0; k < 3; ++k) {
    const WeylElement dk = WeylElement::derivative(ball, k);
    const WeylElement xk = WeylElement::position(ball, k);
    radial_ok = radial_ok && commutator(dk, r) == multiply(xk, rinv) &&
                commutator(dk, rinv) == -multiply(xk, pow(rinv, 3));
  }
  out.push_back(exact_check(
      "weyl-radial-calculus",
      "r^2 = x^2, r r^-1 = 1, [d_k, r] = x_k / r, [d_k, r^-1] = -x_k / r^3",
      radial_ok));

  GeneratorMap squeeze;
  squeeze.target = plain;
  squeeze.position_images = {2 * WeylElement::position(plain, 0),
                             WeylElement::position(plain, 1)};
  squeeze.derivative_images = {
      Scalar(Rational(1, 2)) * WeylElement::derivative(plain, 0),
      WeylElement::derivative(plain, 1)};
  bool subst_ok = is_canonical(plain, squeeze);
  for (int t = 0; t < config.trials; ++t) {
    const WeylElement f = random_polynomial(plain, rng, 3, 3);
    const WeylElement g = random_polynomial(plain, rng, 3, 3);
    subst_ok = subst_ok &&
               substitute(multiply(f, g), squeeze) ==
                   multiply(substitute(f, squeeze), substitute(g, squeeze)) &&
               substitute(f + g, squeeze) ==
                   substitute(f, squeeze) + substitute(g, squeeze);
  }
  out.push_back(exact_check("weyl-substitution-homomorphism",
                            "canonical generator maps respect sums and "
                            "operator products",
                            subst_ok, trials_note));

  const WeylElement unit = WeylElement::constant(plain, Scalar(1));
  const WeylElement p1 = WeylElement::position(plain, 0);
  const WeylElement p2 = WeylElement::position(plain, 1);
  const WeylElement q1 = WeylElement::derivative(plain, 0);
  const WeylElement q2 = WeylElement::derivative(plain, 1);
  const std::vector<WeylElement> basis = {unit, p1, q2, multiply(p1, q1),
                                          multiply(p2, q2)};
  std::uniform_int_distribution<int> pick(-4, 4);
  bool span_ok = !solve_in_span(basis, multiply(p1, p1)).has_value();
  for (int t = 0; t < config.trials; ++t) {
    std::vector<Scalar> wanted;
    WeylElement target(plain);
    for (const auto& member : basis) {
      const Scalar c(pick(rng));
      wanted.push_back(c);
      target = target + c * member;
    }
    const auto found = solve_in_span(basis, target);
    span_ok = span_ok && found.has_value() && *found == wanted;
  }
  out.push_back(exact_check("weyl-span-solver",
                            "exact span coordinates are recovered and "
                            "non-members are rejected",
                            span_ok, trials_note));
  return out;
}

}  // namespace dynsym
