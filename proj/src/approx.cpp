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

#include "ckp/approx.hpp"

#include <utility>

namespace ckp {

BinarySolution round_down(const Instance& inst, const FractionalSolution& x) {
  std::vector<std::uint8_t> bits(x.x.size(), 0);
  for (std::size_t j = 0; j < x.x.size(); ++j) {
    bits[j] = x.x[j] >= 1.0 ? 1 : 0;
  }
  return make_binary(inst, std::move(bits));
}

BinarySolution single_item(const Instance& inst, const FractionalSolution& x) {
  std::vector<std::uint8_t> bits(x.x.size(), 0);
  if (x.frac_index) bits[*x.frac_index] = 1;
  return make_binary(inst, std::move(bits));
}

ApproxResult solve_approx(const Instance& inst, const NcrOptions& options) {
  ApproxResult out;
  out.relaxation = solve_ncr(inst, options);
  const FractionalSolution& xs = out.relaxation.x;

  BinarySolution down = round_down(inst, xs);
  if (!xs.frac_index) {
    out.x = std::move(down);
  } else {
    BinarySolution up = single_item(inst, xs);
    out.x = up.objective <= down.objective ? std::move(down) : std::move(up);
  }

  out.certificate.z_A = out.x.objective;
  out.certificate.z_NC = out.relaxation.z;
  out.certificate.ratio =
      out.relaxation.z > 0.0 ? out.x.objective / out.relaxation.z : 1.0;
  return out;
}

}  // namespace ckp
