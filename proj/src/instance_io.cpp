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

#include "ckp/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ckp {

using nlohmann::json;

std::string to_json(const Instance& inst) {
  json doc;
  doc["name"] = inst.name();
  doc["n"] = inst.size();
  doc["rho"] = inst.rho() ? json(*inst.rho()) : json(nullptr);
  doc["kappa"] = inst.kappa();
  doc["b"] = inst.capacity();
  json items = json::array();
  for (const Item& it : inst.items()) {
    items.push_back({{"c", it.c}, {"a", it.a}, {"sigma2", it.sigma2}});
  }
  doc["items"] = std::move(items);
  return doc.dump(1) + "\n";
}

Instance from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("instance JSON: ") + e.what());
  }
  try {
    std::vector<Item> items;
    for (const auto& it : doc.at("items")) {
      items.push_back(Item{it.at("c").get<double>(), it.at("a").get<double>(),
                           it.at("sigma2").get<double>()});
    }
    if (doc.contains("n") && doc.at("n").get<std::size_t>() != items.size()) {
      throw IoError("instance JSON: field n disagrees with items length");
    }
    std::optional<double> rho;
    if (doc.contains("rho") && !doc.at("rho").is_null()) {
      rho = doc.at("rho").get<double>();
    }
    return Instance(doc.value("name", std::string("unnamed")), std::move(items),
                    doc.at("b").get<double>(), doc.at("kappa").get<double>(),
                    rho);
  } catch (const json::exception& e) {
    throw IoError(std::string("instance JSON: ") + e.what());
  }
}

void write_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << to_json(inst);
  if (!out) throw IoError("failed writing " + path.string());
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

}  // namespace ckp
