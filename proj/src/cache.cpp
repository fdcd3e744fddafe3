/*
   Copyright 2026 The qkgv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qkgv/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qkgv {

using nlohmann::json;

namespace {

constexpr const char* kFormatTag = "qkgv-cache";

json poly_to_json(const Poly& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(to_string(p.coeff(i)));
  return a;
}

Poly poly_from_json(const json& a) {
  std::vector<Rat> c;
  for (const auto& s : a) c.push_back(parse_rat(s.get<std::string>()));
  return Poly::from_coeffs(c);
}

// num/den as integer-coefficient polynomials with a positive leading denominator coefficient.
json qrat_to_json(const QRat& f) {
  const Int l = lcm(f.num().denominator(), f.den().denominator());
  auto ints = [&l](const Poly& p) {
    json a = json::array();
    const Poly s = p * Rat(l);
    for (const Int& c : s.int_coeffs()) a.push_back(c.get_str());
    return a;
  };
  return json{{"num", ints(f.num())}, {"den", ints(f.den())}};
}

QRat qrat_from_json(const json& j) {
  auto poly = [](const json& a) {
    std::vector<Int> c;
    for (const auto& s : a) c.push_back(parse_int(s.get<std::string>()));
    return Poly::from_int_coeffs(std::move(c), Int(1));
  };
  return QRat(poly(j.at("num")), poly(j.at("den")));
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json payload_of(const CacheData& data) {
  const int D = data.state.max_degree;
  json table = json::array();
  for (int d = 1; d <= data.table.max_degree; ++d)
    table.push_back({{"degree", d}, {"gw", to_string(data.table.gw.at(d))}, {"gv", to_string(data.table.gv.at(d))}});
  json levels = json::array();
  const NovSeries<KQRat> js = jk_small(data.state);
  for (int m = 0; m <= D; ++m) {
    json eps = json::array(), r = json::array(), f = json::array(), jk = json::array();
    for (int i = 0; i < 4; ++i) {
      eps.push_back(to_string(data.state.epsilon[i][m]));
      r.push_back(poly_to_json(data.state.rpoly[i][m]));
      f.push_back(poly_to_json(data.state.fpoly[i][m]));
      jk.push_back(qrat_to_json(js[m][i]));
    }
    levels.push_back({{"degree", m}, {"epsilon", eps}, {"r", r}, {"f", f}, {"jk_small", jk}});
  }
  return json{{"max_degree", D},
              {"gw_convention", data.table.convention == GwConvention::kOneFifth ? "one_fifth" : "unscaled"},
              {"table", table},
              {"levels", levels}};
}

CacheData data_of(const json& p) {
  CacheData out;
  const int D = p.at("max_degree").get<int>();
  if (D < 1) throw CacheError(CacheError::Kind::kFormat, "cache: max_degree must be positive");
  out.table.max_degree = D;
  out.table.convention =
      p.at("gw_convention").get<std::string>() == "one_fifth" ? GwConvention::kOneFifth : GwConvention::kUnscaled;
  for (const auto& row : p.at("table")) {
    const int d = row.at("degree").get<int>();
    out.table.gw[d] = parse_rat(row.at("gw").get<std::string>());
    out.table.gv[d] = parse_rat(row.at("gv").get<std::string>());
  }
  ReconState& s = out.state;
  s.max_degree = D;
  s.jk = NovSeries<KQRat>(D);
  for (int i = 0; i < 4; ++i) {
    s.epsilon[i] = NovSeries<Rat>(D);
    s.rpoly[i].assign(D + 1, Poly());
    s.fpoly[i].assign(D + 1, Poly());
  }
  const auto& levels = p.at("levels");
  if (static_cast<int>(levels.size()) != D + 1) throw CacheError(CacheError::Kind::kFormat, "cache: level count");
  const QRat one_minus_q(Poly(Rat(1)) - Poly::variable());
  for (const auto& lv : levels) {
    const int m = lv.at("degree").get<int>();
    if (m < 0 || m > D) throw CacheError(CacheError::Kind::kFormat, "cache: level out of range");
    for (int i = 0; i < 4; ++i) {
      s.epsilon[i][m] = parse_rat(lv.at("epsilon").at(i).get<std::string>());
      s.rpoly[i][m] = poly_from_json(lv.at("r").at(i));
      s.fpoly[i][m] = poly_from_json(lv.at("f").at(i));
      s.jk[m][i] = qrat_from_json(lv.at("jk_small").at(i)) * one_minus_q;
    }
  }
  return out;
}

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string serialize_cache(const CacheData& data) {
  const json payload = payload_of(data);
  const json doc{{"format", kFormatTag},
                 {"version", kCacheVersion},
                 {"checksum", "fnv1a64:" + hex64(fnv1a64(payload.dump()))},
                 {"payload", payload}};
  return doc.dump(1) + "\n";
}

namespace {

json parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw CacheError(CacheError::Kind::kFormat, std::string("cache: not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != kFormatTag)
    throw CacheError(CacheError::Kind::kFormat, "cache: missing format tag");
  return doc;
}

void validate(const json& doc) {
  if (!doc.contains("version") || !doc["version"].is_number_integer())
    throw CacheError(CacheError::Kind::kFormat, "cache: missing version");
  const int v = doc["version"].get<int>();
  if (v != kCacheVersion)
    throw CacheError(CacheError::Kind::kVersion, "cache: version " + std::to_string(v) + " is not supported (expected " +
                                                     std::to_string(kCacheVersion) + ")");
  if (!doc.contains("payload") || !doc.contains("checksum"))
    throw CacheError(CacheError::Kind::kFormat, "cache: missing payload or checksum");
  const std::string want = "fnv1a64:" + hex64(fnv1a64(doc["payload"].dump()));
  if (doc["checksum"] != want) throw CacheError(CacheError::Kind::kChecksum, "cache: checksum mismatch");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError(CacheError::Kind::kIo, "cache: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

CacheData parse_cache(const std::string& text) {
  const json doc = parse_document(text);
  validate(doc);
  try {
    return data_of(doc["payload"]);
  } catch (const json::exception& e) {
    throw CacheError(CacheError::Kind::kFormat, std::string("cache: malformed payload: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw CacheError(CacheError::Kind::kFormat, std::string("cache: malformed number: ") + e.what());
  }
}

void write_cache(const std::string& path, const CacheData& data) {
  const std::string text = serialize_cache(data);
  const std::filesystem::path target(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError(CacheError::Kind::kIo, "cache: cannot write " + tmp);
    out << text;
    if (!out) throw CacheError(CacheError::Kind::kIo, "cache: short write to " + tmp);
  }
  std::filesystem::rename(tmp, target);
}

CacheData read_cache(const std::string& path) { return parse_cache(slurp(path)); }

CacheInfo inspect_cache(const std::string& path) {
  const std::string text = slurp(path);
  CacheInfo info;
  try {
    const json doc = parse_document(text);
    info.version = doc.value("version", 0);
    info.checksum = doc.value("checksum", "");
    if (doc.contains("payload") && doc["payload"].is_object())
      info.max_degree = doc["payload"].value("max_degree", 0);
    validate(doc);
    info.status = "ok";
  } catch (const CacheError& e) {
    info.status = e.what();
  }
  return info;
}

}  // namespace qkgv
