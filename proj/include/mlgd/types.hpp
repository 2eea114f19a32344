// Copyright 2026 The mlg-design Authors
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

#ifndef MLGD_TYPES_HPP_
#define MLGD_TYPES_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlgd {

// Money is kept in minor currency units and bandwidth in abstract units;
// both are exact integers so optimization results are reproducible.
using Money = std::int64_t;
using Bandwidth = std::int64_t;

// Layer ordinals: 0 = transport, 1 = MPLS/logical, 2.. = one per demand.
using LayerId = int;

// Hard failures. Data-level diagnostics (validation reports, capacity
// reports, infeasibility certificates) are values, not exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad instance files, bad arguments, broken preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

// Broken graph or design structure (unknown ids, dangling references, ...).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Oracle size or time limits exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

// One simple transport path realizing a logical edge.
struct TransportPath {
  std::vector<std::string> nodes;  // transport node ids, endpoints first/last
  std::vector<std::string> links;  // transport edge ids, size == nodes.size()-1
  Money fixed_cost = 0;            // sum of the link fixed costs

  int hops() const { return static_cast<int>(links.size()); }
  bool operator==(const TransportPath&) const = default;
};

}  // namespace mlgd

#endif  // MLGD_TYPES_HPP_
