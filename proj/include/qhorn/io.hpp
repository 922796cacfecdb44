// Copyright 2026 The qhorn Authors
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

// Text and JSON forms of the library types, and the on-disk B-table cache.
//
// Text: lists are comma-separated within a marked point and
// semicolon-separated between points, e.g. "1,3;2,4" for two subsets or
// "1/4,-1/4;0,0" for two classes. The empty partition is "".

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qhorn/horn.hpp"
#include "qhorn/quantum.hpp"
#include "qhorn/rational.hpp"
#include "qhorn/schubert.hpp"
#include "qhorn/state.hpp"
#include "qhorn/witness.hpp"

namespace qhorn {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr int kBTableCacheVersion = 1;

// ---------------------------------------------------------------------------
// Text

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.emplace_back(detail::trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline int parse_int(std::string_view text) {
  const std::string_view s = detail::trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("malformed integer '" + std::string(text) + "'");
  return value;
}

/// "3,1,1" -> {3,1,1}; "" -> {}.
inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (detail::trim(text).empty()) return out;
  for (const auto& item : split(text, ',')) out.push_back(parse_int(item));
  return out;
}

inline Partition parse_partition(std::string_view text) { return Partition(parse_int_list(text)); }

inline SchubertSubset parse_subset(std::string_view text, int n) { return SchubertSubset(n, parse_int_list(text)); }

inline std::vector<SchubertSubset> parse_subsets(std::string_view text, int n) {
  std::vector<SchubertSubset> out;
  for (const auto& item : split(text, ';')) out.push_back(parse_subset(item, n));
  return out;
}

inline ConjugacyClass parse_class(std::string_view text) {
  std::vector<Rational> delta;
  for (const auto& item : split(text, ',')) delta.push_back(parse_rational(item));
  return ConjugacyClass(std::move(delta));
}

inline ClassTuple parse_classes(std::string_view text) {
  std::vector<ConjugacyClass> out;
  for (const auto& item : split(text, ';')) out.push_back(parse_class(item));
  return ClassTuple(std::move(out));
}

template <class Range>
std::string join_ints(const Range& xs, char sep = ',') {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += sep;
    out += std::to_string(x);
  }
  return out;
}

inline std::string format_partition(const Partition& p) { return join_ints(p.parts()); }
inline std::string format_subset(const SchubertSubset& I) { return join_ints(I.elems()); }

inline std::string format_subsets(const std::vector<SchubertSubset>& subsets) {
  std::string out;
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    if (j) out += ';';
    out += format_subset(subsets[j]);
  }
  return out;
}

inline std::string format_class(const ConjugacyClass& c) {
  std::string out;
  for (int b = 0; b < c.rank(); ++b) {
    if (b) out += ',';
    out += format_rational(c[b]);
  }
  return out;
}

/// "d=1,r=2,D=0,n=4;I=1,2|1,3|2,4": subsets in marked-point order.
inline SchubertState parse_state(std::string_view text) {
  const auto halves = split(text, ';');
  if (halves.size() != 2) throw DomainError("state must look like 'd=..,r=..,D=..,n=..;I=..|..'");
  std::map<std::string, Int> fields;
  for (const auto& item : split(halves[0], ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("malformed state field '" + item + "'");
    const std::string key(detail::trim(std::string_view(item).substr(0, eq)));
    if (fields.count(key)) throw DomainError("duplicate state field '" + key + "'");
    fields[key] = parse_int(std::string_view(item).substr(eq + 1));
  }
  for (const char* key : {"d", "r", "D", "n"})
    if (!fields.count(key)) throw DomainError(std::string("state is missing field '") + key + "'");
  if (fields.size() != 4) throw DomainError("state has unknown fields");
  const std::string_view tail = detail::trim(halves[1]);
  if (tail.substr(0, 2) != "I=") throw DomainError("state subsets must start with 'I='");
  const int n = static_cast<int>(fields["n"]);
  std::vector<SchubertSubset> subsets;
  for (const auto& item : split(tail.substr(2), '|')) subsets.push_back(parse_subset(item, n));
  return SchubertState(fields["d"], static_cast<int>(fields["r"]), fields["D"], n, std::move(subsets));
}

inline std::string format_state(const SchubertState& s) {
  std::string out = "d=" + std::to_string(s.d()) + ",r=" + std::to_string(s.r()) + ",D=" + std::to_string(s.D()) +
                    ",n=" + std::to_string(s.n()) + ";I=";
  for (std::size_t p = 0; p < s.num_points(); ++p) {
    if (p) out += '|';
    out += format_subset(s.subsets()[p]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline Json subsets_json(const std::vector<SchubertSubset>& subsets) {
  Json out = Json::array();
  for (const auto& I : subsets) out.push_back(I.elems());
  return out;
}

inline Json to_json(const QuantumElement& x) {
  Json terms = Json::array();
  for (const auto& [key, c] : x.terms())
    terms.push_back({{"d", key.first}, {"partition", format_partition(key.second)}, {"coeff", c}});
  return {{"terms", std::move(terms)}};
}

inline Json to_json(const SchurExpansion& e) {
  Json terms = Json::array();
  for (const auto& [nu, c] : e) terms.push_back({{"partition", format_partition(nu)}, {"coeff", c}});
  return {{"terms", std::move(terms)}};
}

/// gw is null for entries certified recursively.
inline Json to_json(const HornInequality& h) {
  return {{"r", h.r}, {"d", h.d}, {"subsets", subsets_json(h.subsets)}, {"gw", h.gw == 0 ? Json(nullptr) : Json(h.gw)}};
}

inline Json to_json(const SchubertState& s) {
  return {{"d", s.d()},      {"r", s.r()},
          {"D", s.D()},      {"n", s.n()},
          {"subsets", subsets_json(s.subsets())}, {"points", s.points()},
          {"text", format_state(s)}};
}

inline Json to_json(const ClassTuple& t) {
  Json out = Json::array();
  for (const auto& c : t.classes()) {
    Json row = Json::array();
    for (const auto& x : c.delta()) row.push_back(format_rational(x));
    out.push_back(std::move(row));
  }
  return out;
}

inline Json to_json(const WitnessResult& w) {
  Json mats = Json::array();
  for (const auto& A : w.matrices) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index k = 0; k < A.cols(); ++k) row.push_back({A(i, k).real(), A(i, k).imag()});
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  return {{"found", w.found},
          {"residual", w.residual},
          {"seed", w.seed},
          {"restarts_used", w.restarts_used},
          {"iterations_used", w.iterations_used},
          {"matrices", std::move(mats)}};
}

// ---------------------------------------------------------------------------
// B-table cache

inline Json btable_to_json(int r, int n, int s, const detail::BTable& table) {
  Json ineqs = Json::array();
  for (const auto& h : table) ineqs.push_back(to_json(h));
  return {{"version", kBTableCacheVersion}, {"r", r}, {"n", n}, {"s", s}, {"inequalities", std::move(ineqs)}};
}

/// Parses and validates a cached B(r,n,s). Throws DomainError on any
/// mismatch, including entries that fail the grading or are out of order.
inline detail::BTable btable_from_json(const Json& j, int r, int n, int s) {
  try {
    if (j.at("version").get<int>() != kBTableCacheVersion) throw DomainError("unsupported cache version");
    if (j.at("r").get<int>() != r || j.at("n").get<int>() != n || j.at("s").get<int>() != s)
      throw DomainError("cache header does not match its key");
    detail::BTable table;
    for (const auto& e : j.at("inequalities")) {
      HornInequality h;
      h.r = e.at("r").get<int>();
      h.d = e.at("d").get<Int>();
      if (h.r != r || h.d < 0) throw DomainError("cache entry has the wrong rank or degree");
      if (!e.at("gw").is_null()) throw DomainError("cache entry carries a GW value");
      for (const auto& sub : e.at("subsets")) h.subsets.emplace_back(n, sub.get<std::vector<int>>());
      if (static_cast<int>(h.subsets.size()) != s) throw DomainError("cache entry has the wrong length");
      if (!a_member(h.d, r, n, h.subsets)) throw DomainError("cache entry fails the grading");
      if (!table.empty()) {
        const auto& prev = table.back();
        if (std::tie(prev.d, prev.subsets) >= std::tie(h.d, h.subsets)) throw DomainError("cache entries out of order");
      }
      table.push_back(std::move(h));
    }
    return table;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed cache: ") + e.what());
  }
}

inline std::filesystem::path btable_cache_file(const std::filesystem::path& dir, int r, int n, int s) {
  return dir / ("btable_r" + std::to_string(r) + "_n" + std::to_string(n) + "_s" + std::to_string(s) + ".json");
}

/// Installs every valid cache file found in `dir`. Invalid files are
/// reported on `warn` and left for save_btable_cache to overwrite.
/// Returns the number of tables installed.
inline int load_btable_cache(const std::filesystem::path& dir, std::ostream* warn = nullptr) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return 0;
  static const std::regex name_re(R"(btable_r(\d+)_n(\d+)_s(\d+)\.json)");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  int loaded = 0;
  for (const auto& path : files) {
    std::smatch m;
    const std::string name = path.filename().string();
    if (!std::regex_match(name, m, name_re)) continue;
    const int r = std::stoi(m[1]), n = std::stoi(m[2]), s = std::stoi(m[3]);
    try {
      std::ifstream in(path);
      Json j = Json::parse(in);
      auto table = btable_from_json(j, r, n, s);
      if (r <= 0 || r >= n || s < 1) throw DomainError("bad cache key");
      install_btable(r, n, s, std::move(table));
      ++loaded;
    } catch (const std::exception& e) {
      if (warn) *warn << "warning: ignoring corrupt cache file " << path.string() << ": " << e.what() << "; rebuilding\n";
    }
  }
  return loaded;
}

/// Writes every memoized B-table to `dir`, creating it if needed.
inline int save_btable_cache(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  int written = 0;
  for (const auto& [key, table] : detail::btable_memo().snapshot()) {
    const auto [r, n, s] = key;
    const fs::path path = btable_cache_file(dir, r, n, s);
    const fs::path tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << btable_to_json(r, n, s, *table).dump() << '\n';
      if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    fs::rename(tmp, path);
    ++written;
  }
  return written;
}

}  // namespace qhorn
