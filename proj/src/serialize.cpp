#include "dynsym/serialize.hpp"

namespace dynsym {

nlohmann::ordered_json json_rational(const Rational& q) { return q.str(); }

nlohmann::ordered_json json_complex(const GaussianRational& z) {
  return nlohmann::ordered_json::array(
      {json_rational(z.re()), json_rational(z.im())});
}

nlohmann::ordered_json json_scalar(const Scalar& c) {
  if (c.surd_part().is_zero()) return json_complex(c.rat_part());
  nlohmann::ordered_json out;
  out["one"] = json_complex(c.rat_part());
  out["sqrt2"] = json_complex(c.surd_part());
  return out;
}

nlohmann::ordered_json json_weyl_element(const WeylElement& e) {
  const auto& sig = e.signature();
  nlohmann::ordered_json out;
  out["positions"] = sig.position_names;
  out["derivatives"] = sig.derivative_names;
  out["radial"] = sig.radial;
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [mono, coeff] : e.terms()) {
    nlohmann::ordered_json term;
    term["coeff"] = json_scalar(coeff);
    term["alpha"] = mono.alpha;
    term["r"] = mono.eps;
    term["x2_inverse_power"] = mono.m;
    term["beta"] = mono.beta;
    term["text"] = to_text(mono, sig);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  out["text"] = to_text(e);
  return out;
}

nlohmann::ordered_json json_matrix(const Matrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(json_scalar(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json json_structure_table(const StructureTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [lhs, terms] : table) {
    nlohmann::ordered_json row;
    row["bracket"] = nlohmann::ordered_json::array(
        {nlohmann::ordered_json::array({lhs.first.first, lhs.first.second}),
         nlohmann::ordered_json::array(
             {lhs.second.first, lhs.second.second})});
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    for (const auto& [pair, coeff] : terms) {
      nlohmann::ordered_json part;
      part["pair"] = nlohmann::ordered_json::array({pair.first, pair.second});
      part["coeff"] = json_scalar(coeff);
      parts.push_back(std::move(part));
    }
    row["terms"] = std::move(parts);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dynsym
