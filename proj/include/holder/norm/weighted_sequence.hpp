// Copyright 2026 The holder-bounds Authors
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
#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "holder/numerics/real.hpp"

namespace holder {

struct Atom {
  Real value;
  Real weight;
};

/**
 * A finite weighted counting measure: atoms (value >= 0, weight > 0).
 * Unit weights give the plain counting measure. May be empty.
 */
class WeightedSequence {
 public:
  explicit WeightedSequence(Bits prec = kDefaultPrecision) : precision_(prec) {}

  /// Unit weights.
  WeightedSequence(std::span<const Real> values, Bits prec) : precision_(prec) {
    atoms_.reserve(values.size());
    for (const Real& v : values) push_back(v, Real(1, prec));
  }

  WeightedSequence(std::span<const Real> values, std::span<const Real> weights, Bits prec) : precision_(prec) {
    if (values.size() != weights.size()) throw std::invalid_argument("values and weights differ in length");
    atoms_.reserve(values.size());
    for (size_t i = 0; i < values.size(); ++i) push_back(values[i], weights[i]);
  }

  static WeightedSequence from_doubles(std::span<const double> values, Bits prec = kDefaultPrecision) {
    WeightedSequence f(prec);
    for (double v : values) f.push_back(Real(v, prec), Real(1, prec));
    return f;
  }

  void push_back(const Real& value, const Real& weight) {
    if (!(value.is_finite() && value >= 0)) throw std::invalid_argument("sequence values must be finite and >= 0");
    if (!(weight.is_finite() && weight > 0)) throw std::invalid_argument("sequence weights must be finite and > 0");
    atoms_.push_back({value.with_precision(precision_), weight.with_precision(precision_)});
  }

  const std::vector<Atom>& atoms() const { return atoms_; }
  size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  Bits precision() const { return precision_; }

  bool has_unit_weights() const {
    for (const Atom& a : atoms_)
      if (!(a.weight == 1)) return false;
    return true;
  }

  /// Same length and identical weights, atom by atom.
  bool same_measure(const WeightedSequence& other) const {
    if (size() != other.size()) return false;
    for (size_t i = 0; i < size(); ++i)
      if (!(atoms_[i].weight == other.atoms_[i].weight)) return false;
    return true;
  }

  /// Pointwise product on the shared measure.
  WeightedSequence pointwise_product(const WeightedSequence& other) const {
    if (!same_measure(other)) throw std::invalid_argument("pointwise product needs the same weights");
    WeightedSequence out(std::max(precision_, other.precision_));
    for (size_t i = 0; i < size(); ++i) out.push_back(atoms_[i].value * other.atoms_[i].value, atoms_[i].weight);
    return out;
  }

  Real max_value() const {
    Real m(precision_);
    for (const Atom& a : atoms_) m = max(m, a.value);
    return m;
  }

 private:
  Bits precision_;
  std::vector<Atom> atoms_;
};

}  // namespace holder
