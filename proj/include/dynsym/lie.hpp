#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dynsym/rational.hpp"

namespace dynsym {

// Antisymmetric generator family g_AB over a diagonal-metric index set.
// Closure is tested against the rule
//   [g_AB, g_CD] = s * (-i) * (eta_AC g_BD + eta_BD g_AC
//                              - eta_AD g_BC - eta_BC g_AD)
// with one global sign s fitted over all pairs.
template <typename E>
struct LieFamily {
  std::vector<int> indices;
  std::map<int, int> eta;
  std::map<std::pair<int, int>, E> generators;
  E zero;

  const E& stored(int A, int B) const { return generators.at({A, B}); }

  E get(int A, int B) const {
    if (A == B) return zero;
    auto it = generators.find({A, B});
    if (it != generators.end()) return it->second;
    return Scalar(-1) * generators.at({B, A});
  }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < indices.size(); ++i)
      for (std::size_t j = i + 1; j < indices.size(); ++j)
        out.emplace_back(indices[i], indices[j]);
    return out;
  }
};

template <typename E>
E bracket_rule_rhs(const LieFamily<E>& fam, int A, int B, int C, int D) {
  E rhs = fam.zero;
  if (A == C) rhs = rhs + Scalar(fam.eta.at(A)) * fam.get(B, D);
  if (B == D) rhs = rhs + Scalar(fam.eta.at(B)) * fam.get(A, C);
  if (A == D) rhs = rhs - Scalar(fam.eta.at(A)) * fam.get(B, C);
  if (B == C) rhs = rhs - Scalar(fam.eta.at(B)) * fam.get(A, D);
  return -Scalar::i() * rhs;
}

struct ClosureReport {
  bool closed = false;
  int sign = 0;
  int pairs_checked = 0;
  std::string first_failure;
};

template <typename E>
ClosureReport verify_closure(const LieFamily<E>& fam) {
  ClosureReport report;
  const auto ps = fam.pairs();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      const auto [A, B] = ps[i];
      const auto [C, D] = ps[j];
      const E comm = commutator(fam.stored(A, B), fam.stored(C, D));
      const E rhs = bracket_rule_rhs(fam, A, B, C, D);
      const bool plus = is_zero(comm - rhs);
      const bool minus = is_zero(comm + rhs);
      ++report.pairs_checked;
      if (!plus && !minus) {
        report.first_failure = "[g(" + std::to_string(A) + "," +
                               std::to_string(B) + "), g(" +
                               std::to_string(C) + "," + std::to_string(D) +
                               ")] matches neither sign";
        return report;
      }
      if (plus != minus) {
        const int s = plus ? 1 : -1;
        if (report.sign == 0) {
          report.sign = s;
        } else if (report.sign != s) {
          report.first_failure = "global sign flips at [g(" +
                                 std::to_string(A) + "," + std::to_string(B) +
                                 "), g(" + std::to_string(C) + "," +
                                 std::to_string(D) + ")]";
          return report;
        }
      }
    }
  }
  if (report.sign == 0) report.sign = 1;
  report.closed = true;
  return report;
}

// Structure constants f with [g_AB, g_CD] = sum f^(EF) g_EF over sorted
// pairs, read off from the closure rule once the global sign is known.
using PairKey = std::pair<int, int>;
using StructureTable = std::map<std::pair<PairKey, PairKey>, std::map<PairKey, Scalar>>;

template <typename E>
StructureTable structure_constants(const LieFamily<E>& fam, int sign) {
  StructureTable table;
  auto order = [&fam](int X, int Y, Scalar& s) {
    for (int idx : fam.indices) {
      if (idx == X) return PairKey{X, Y};
      if (idx == Y) {
        s = -s;
        return PairKey{Y, X};
      }
    }
    return PairKey{X, Y};
  };
  for (const auto& [AB, CD] : [&fam] {
         std::vector<std::pair<PairKey, PairKey>> out;
         const auto ps = fam.pairs();
         for (std::size_t i = 0; i < ps.size(); ++i)
           for (std::size_t j = i + 1; j < ps.size(); ++j)
             out.emplace_back(ps[i], ps[j]);
         return out;
       }()) {
    const auto [A, B] = AB;
    const auto [C, D] = CD;
    std::map<PairKey, Scalar> row;
    auto put = [&](int X, int Y, Scalar c) {
      if (X == Y || c.is_zero()) return;
      const PairKey key = order(X, Y, c);
      auto [it, fresh] = row.try_emplace(key, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) row.erase(it);
      }
    };
    const Scalar front = Scalar(sign) * -Scalar::i();
    if (A == C) put(B, D, front * Scalar(fam.eta.at(A)));
    if (B == D) put(A, C, front * Scalar(fam.eta.at(B)));
    if (A == D) put(B, C, -front * Scalar(fam.eta.at(A)));
    if (B == C) put(A, D, -front * Scalar(fam.eta.at(B)));
    table[{AB, CD}] = std::move(row);
  }
  return table;
}

}  // namespace dynsym
