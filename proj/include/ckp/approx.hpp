// Copyright 2026 The ckp Authors
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

#ifndef CKP_APPROX_HPP_
#define CKP_APPROX_HPP_

#include "ckp/core.hpp"
#include "ckp/ncr.hpp"

namespace ckp {

/// A-posteriori quality of a rounded solution against the relaxation bound.
struct ApproxCertificate {
  double z_A = 0.0;
  double z_NC = 0.0;
  double ratio = 0.0;  // z_A / z_NC, at least 1/2
};

struct ApproxResult {
  BinarySolution x;
  ApproxCertificate certificate;
  NcrResult relaxation;
};

/// Floor of every coordinate.
BinarySolution round_down(const Instance& inst, const FractionalSolution& x);

/// Indicator of the fractional coordinate, or all zeros when x is integral.
BinarySolution single_item(const Instance& inst, const FractionalSolution& x);

/// Better of round_down and single_item applied to the relaxation optimum;
/// ties keep the rounded-down solution. Objective >= z_NC / 2 >= z_OPT / 2.
ApproxResult solve_approx(const Instance& inst, const NcrOptions& options = {});

}  // namespace ckp

#endif  // CKP_APPROX_HPP_
