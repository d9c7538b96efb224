// Copyright 2026 chancomp contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chancomp/groups.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

namespace chancomp {

namespace {

// Global-phase canonical form: rotate so the first entry above threshold is
// real positive (scan in storage order).
ComplexMatrix canonical_phase(const ComplexMatrix& u) {
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    Complex v = u.data()[k];
    if (std::abs(v) > 1e-8) return u * (std::abs(v) / v);
  }
  return u;
}

std::string matrix_key(const ComplexMatrix& u) {
  std::string key;
  key.reserve(static_cast<size_t>(u.size()) * 24);
  char buf[32];
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    Complex v = u.data()[k];
    // 1e-8 rounding grid; avoid the -0.0 / 0.0 key split
    double re = std::round(v.real() * 1e8) / 1e8 + 0.0;
    double im = std::round(v.imag() * 1e8) / 1e8 + 0.0;
    std::snprintf(buf, sizeof buf, "%.8f,%.8f;", re, im);
    key += buf;
  }
  return key;
}

}  // namespace

std::optional<GroupTable> group_closure(const std::vector<ComplexMatrix>& generators,
                                        int max_order) {
  if (generators.empty()) throw InputError("group_closure: no generators");
  const int d = static_cast<int>(generators.front().rows());
  std::vector<ComplexMatrix> gens;
  for (const auto& g : generators) {
    if (g.rows() != d || g.cols() != d) throw InputError("group_closure: dimension mismatch");
    if ((g * g.adjoint() - identity(d)).norm() > 1e-9)
      throw InputError("group_closure: generator is not unitary");
    gens.push_back(g);
    gens.push_back(g.adjoint());
  }

  GroupTable table;
  table.dim = d;
  std::unordered_map<std::string, int> seen;
  ComplexMatrix e = canonical_phase(identity(d));
  seen[matrix_key(e)] = 0;
  table.elements.push_back(e);
  table.word_length.push_back(0);

  std::deque<int> queue = {0};
  while (!queue.empty()) {
    int idx = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      ComplexMatrix next = canonical_phase(g * table.elements[idx]);
      std::string key = matrix_key(next);
      if (seen.count(key)) continue;
      if (static_cast<int>(table.elements.size()) >= max_order) return std::nullopt;
      seen[key] = static_cast<int>(table.elements.size());
      table.elements.push_back(next);
      table.word_length.push_back(table.word_length[idx] + 1);
      queue.push_back(static_cast<int>(table.elements.size()) - 1);
    }
  }
  table.diameter = *std::max_element(table.word_length.begin(), table.word_length.end());
  return table;
}

LengthStats length_statistics(const GroupTable& g) {
  LengthStats st;
  st.diameter = g.diameter;
  st.counts.assign(g.diameter + 1, 0);
  long total = 0;
  for (int l : g.word_length) {
    ++st.counts[l];
    total += l;
  }
  st.mean = double(total) / double(g.word_length.size());
  return st;
}

std::optional<double> mean_word_length(const ResourceSet& s, int max_order) {
  if (s.kind != ResourceSet::Kind::Discrete) return std::nullopt;
  auto table = group_closure(s.elements, max_order);
  if (!table) return std::nullopt;
  return length_statistics(*table).mean;
}

namespace {

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

std::vector<int> invert_perm(const std::vector<int>& a) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
  return out;
}

std::string perm_key(const std::vector<int>& a) {
  std::string key;
  for (int v : a) {
    key += std::to_string(v);
    key += ',';
  }
  return key;
}

}  // namespace

CommutativeLengthCheck verify_expected_length_commutative(
    const std::vector<std::vector<int>>& generator_perms, const SolveOptions& opts) {
  if (generator_perms.empty())
    throw InputError("verify_expected_length_commutative: no generators");
  const size_t npts = generator_perms.front().size();
  std::vector<std::vector<int>> gens;
  for (const auto& p : generator_perms) {
    if (p.size() != npts)
      throw InputError("verify_expected_length_commutative: inconsistent point count");
    std::vector<bool> hit(npts, false);
    for (int v : p) {
      if (v < 0 || v >= static_cast<int>(npts) || hit[v])
        throw InputError("verify_expected_length_commutative: not a permutation");
      hit[v] = true;
    }
    gens.push_back(p);
    std::vector<int> inv = invert_perm(p);
    if (inv != p) gens.push_back(inv);
  }

  // abstract closure with word lengths
  std::vector<std::vector<int>> elements;
  std::vector<int> length;
  std::unordered_map<std::string, int> seen;
  std::vector<int> e(npts);
  std::iota(e.begin(), e.end(), 0);
  elements.push_back(e);
  length.push_back(0);
  seen[perm_key(e)] = 0;
  std::deque<int> queue = {0};
  while (!queue.empty()) {
    int idx = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      std::vector<int> next = compose_perm(g, elements[idx]);
      std::string key = perm_key(next);
      if (seen.count(key)) continue;
      if (elements.size() >= 64)
        throw InputError("verify_expected_length_commutative: group order exceeds 64");
      seen[key] = static_cast<int>(elements.size());
      elements.push_back(next);
      length.push_back(length[idx] + 1);
      queue.push_back(static_cast<int>(elements.size()) - 1);
    }
  }

  const int order = static_cast<int>(elements.size());
  CommutativeLengthCheck check;
  check.order = order;
  check.diameter = *std::max_element(length.begin(), length.end());
  check.mean_length =
      std::accumulate(length.begin(), length.end(), 0.0) / double(order);

  // translation unitaries on C^G: P_s |g> = |s g>
  ResourceSet rs;
  rs.kind = ResourceSet::Kind::Discrete;
  rs.dim = order;
  for (const auto& g : gens) {
    ComplexMatrix p = ComplexMatrix::Zero(order, order);
    for (int j = 0; j < order; ++j) {
      int target = seen.at(perm_key(compose_perm(g, elements[j])));
      p(target, j) = 1.0;
    }
    rs.elements.push_back(p);
  }

  // exact witness: the centered word-length function as a diagonal matrix
  ComplexMatrix witness = ComplexMatrix::Zero(order, order);
  for (int j = 0; j < order; ++j) witness(j, j) = check.mean_length - length[j];

  SolveOptions o = opts;
  o.extra_starts.push_back(witness);
  check.estimate = expected_length(build_structure(rs), o);
  check.width = check.estimate.upper - check.estimate.lower;
  return check;
}

AveragingBoundReport averaging_channel_bound(const GroupTable& g, const std::vector<double>& f,
                                             const SolveOptions& opts) {
  if (f.size() != g.elements.size())
    throw InputError("averaging_channel_bound: one weight per group element required");

  AveragingBoundReport rep;
  rep.diameter = g.diameter;
  for (size_t i = 0; i < f.size(); ++i) rep.length_average += f[i] * g.word_length[i];

  ResourceSet rs;
  rs.kind = ResourceSet::Kind::Discrete;
  rs.dim = g.dim;
  for (size_t i = 0; i < g.elements.size(); ++i)
    if (g.word_length[i] == 1) rs.elements.push_back(g.elements[i]);
  if (rs.elements.empty())
    throw InputError("averaging_channel_bound: group has no length-one elements");

  QuantumChannel phi = unitary_mixture(g.elements, f);
  SolveOptions o = opts;
  o.extra_certificates.push_back({"word_length_average", rep.length_average});
  rep.estimate = complexity_estimate(phi, build_structure(rs), o);
  rep.holds = rep.estimate.upper <= rep.length_average + 1e-9 &&
              rep.length_average <= rep.diameter + 1e-9;
  return rep;
}

}  // namespace chancomp
