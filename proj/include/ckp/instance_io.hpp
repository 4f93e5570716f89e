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

#ifndef CKP_INSTANCE_IO_HPP_
#define CKP_INSTANCE_IO_HPP_

#include <filesystem>
#include <string>

#include "ckp/core.hpp"

namespace ckp {

// JSON instance schema:
//   {"name": str, "n": int, "rho": number|null, "kappa": number, "b": number,
//    "items": [{"c": number, "a": number, "sigma2": number}, ...]}
// Doubles are written in shortest round-trip form, so reading back is exact.

std::string to_json(const Instance& inst);
Instance from_json(const std::string& text);

void write_instance(const Instance& inst, const std::filesystem::path& path);
Instance read_instance(const std::filesystem::path& path);

/// Thrown for unreadable files and malformed documents.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ckp

#endif  // CKP_INSTANCE_IO_HPP_
