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

#include "qkgv/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qkgv/cache.hpp"
#include "qkgv/errors.hpp"
#include "qkgv/gwside.hpp"
#include "qkgv/qkside.hpp"
#include "qkgv/verify.hpp"

namespace qkgv {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Computed {
  GwTable table;
  ReconState state;
  int levels_reused = 0;
  int levels_computed = 0;
  bool cache_written = false;
};

GwTable truncate_table(const GwTable& t, int D) {
  GwTable out = t;
  out.max_degree = D;
  out.gw.erase(out.gw.upper_bound(D), out.gw.end());
  out.gv.erase(out.gv.upper_bound(D), out.gv.end());
  return out;
}

ReconState truncate_state(const ReconState& s, int D) {
  ReconState out;
  out.max_degree = D;
  out.levels_computed = s.levels_computed;
  out.jk = s.jk.truncated(D);
  for (int i = 0; i < 4; ++i) {
    out.epsilon[i] = s.epsilon[i].truncated(D);
    out.rpoly[i].assign(s.rpoly[i].begin(), s.rpoly[i].begin() + D + 1);
    out.fpoly[i].assign(s.fpoly[i].begin(), s.fpoly[i].begin() + D + 1);
  }
  return out;
}

// Reconstruct through D, reusing and refreshing the cache when a path is set.
// With `tolerate_bad_cache`, an unreadable cache is replaced instead of refused.
Computed compute(int D, const std::string& cache_path, bool tolerate_bad_cache = false) {
  Computed c;
  if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
    try {
      CacheData data = read_cache(cache_path);
      if (data.state.max_degree >= D) {
        c.table = truncate_table(data.table, D);
        c.state = truncate_state(data.state, D);
        c.levels_reused = D;
        return c;
      }
      c.levels_reused = data.state.max_degree;
      c.state = reconstruct_jk(D, data.state);
      c.table = gw_invariants(D);
      c.levels_computed = c.state.levels_computed;
      write_cache(cache_path, {c.table, c.state});
      c.cache_written = true;
      return c;
    } catch (const CacheError&) {
      if (!tolerate_bad_cache) throw;
    }
  }
  c.table = gw_invariants(D);
  c.state = reconstruct_jk(D);
  c.levels_computed = c.state.levels_computed;
  if (!cache_path.empty()) {
    write_cache(cache_path, {c.table, c.state});
    c.cache_written = true;
  }
  return c;
}

json poly_json(const Poly& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(to_string(p.coeff(i)));
  return a;
}

json qrat_json(const QRat& f) { return json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}}; }

json reconstruction_json(const Computed& c) {
  return json{{"levels_reused", c.levels_reused}, {"levels_computed", c.levels_computed},
              {"cache_written", c.cache_written}};
}

json verdict_json(const Verdict& v) {
  json j{{"check", v.check}, {"M", v.M}, {"pass", v.pass}};
  if (v.r >= 0) j["r"] = v.r;
  if (v.component >= 0) j["component"] = v.component;
  if (!v.pass) {
    j["expected"] = v.expected;
    j["actual"] = v.actual;
  }
  return j;
}

json group_json(const std::vector<Verdict>& vs) {
  json list = json::array();
  bool pass = true;
  for (const auto& v : vs) {
    list.push_back(verdict_json(v));
    pass = pass && v.pass;
  }
  return json{{"pass", pass}, {"checked", vs.size()}, {"verdicts", list}};
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void require_format(const RunConfig& cfg, std::initializer_list<OutputFormat> allowed) {
  for (auto f : allowed)
    if (cfg.format == f) return;
  throw UsageError("output format not supported by '" + cfg.command + "'");
}

int cmd_gw(const RunConfig& cfg, std::ostream& out) {
  const Computed c = compute(cfg.max_degree, cfg.cache_path);
  const GwTable& t = c.table;
  switch (cfg.format) {
    case OutputFormat::kJson: {
      json rows = json::array();
      for (int d = 1; d <= t.max_degree; ++d)
        rows.push_back({{"degree", d}, {"gw", to_string(t.gw.at(d))}, {"gv", to_string(t.gv.at(d))}});
      emit_json(out, {{"max_degree", t.max_degree},
                      {"gw_convention", t.convention == GwConvention::kOneFifth ? "one_fifth" : "unscaled"},
                      {"invariants", rows}});
      break;
    }
    case OutputFormat::kCsv:
      out << "degree,gw,gv\n";
      for (int d = 1; d <= t.max_degree; ++d) out << d << "," << to_string(t.gw.at(d)) << "," << to_string(t.gv.at(d)) << "\n";
      break;
    case OutputFormat::kPretty: {
      size_t w = 4;
      for (const auto& [d, v] : t.gw) w = std::max(w, to_string(v).size());
      out << std::left << std::setw(4) << "d" << "  " << std::setw(static_cast<int>(w)) << "GW_d" << "  GV_d\n";
      for (int d = 1; d <= t.max_degree; ++d)
        out << std::setw(4) << d << "  " << std::setw(static_cast<int>(w)) << to_string(t.gw.at(d)) << "  "
            << to_string(t.gv.at(d)) << "\n";
      break;
    }
  }
  return kExitOk;
}

int cmd_jk(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {OutputFormat::kJson, OutputFormat::kPretty});
  const Computed c = compute(cfg.max_degree, cfg.cache_path);
  const ReconState& s = c.state;
  const NovSeries<KQRat> js = jk_small(s);
  if (cfg.format == OutputFormat::kPretty) {
    for (int m = 0; m <= s.max_degree; ++m) {
      out << "Q^" << m << "\n";
      out << "  eps  = [";
      for (int i = 0; i < 4; ++i) out << (i ? ", " : "") << to_string(s.epsilon[i][m]);
      out << "]\n";
      for (int i = 0; i < 4; ++i) out << "  x^" << i << "   " << js[m][i].to_string() << "\n";
    }
    return kExitOk;
  }
  json levels = json::array();
  for (int m = 0; m <= s.max_degree; ++m) {
    json eps = json::array(), r = json::array(), comps = json::array();
    for (int i = 0; i < 4; ++i) {
      eps.push_back(to_string(s.epsilon[i][m]));
      r.push_back(poly_json(s.rpoly[i][m]));
      comps.push_back(qrat_json(js[m][i]));
    }
    levels.push_back({{"degree", m}, {"epsilon", eps}, {"r", r}, {"jk_small", comps}});
  }
  emit_json(out, {{"max_degree", s.max_degree}, {"reconstruction", reconstruction_json(c)}, {"levels", levels}});
  return kExitOk;
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {OutputFormat::kJson, OutputFormat::kPretty});
  if (cfg.degree < 1) throw UsageError("--degree must be at least 1");
  if (cfg.root_order < 1 || cfg.root_order > cfg.degree) throw UsageError("--root-order must satisfy 1 <= r <= M");
  const Computed c = compute(cfg.degree, cfg.cache_path);
  const CoeffRecord rec = extract_coefficients(jk_small(c.state), cfg.degree, cfg.root_order);
  const std::pair<const char*, const Rat*> fields[] = {{"a", &rec.a}, {"b", &rec.b}, {"c", &rec.c},
                                                        {"d", &rec.d}, {"e", &rec.e}, {"f", &rec.f}};
  if (cfg.format == OutputFormat::kPretty) {
    out << "M = " << rec.M << ", r = " << rec.r << "\n";
    for (const auto& [k, v] : fields) out << "  " << k << " = " << to_string(*v) << "\n";
    return kExitOk;
  }
  json j{{"M", rec.M}, {"r", rec.r}};
  for (const auto& [k, v] : fields) j[k] = to_string(*v);
  emit_json(out, j);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {OutputFormat::kJson, OutputFormat::kPretty});
  std::set<std::string> groups = cfg.checks.empty() ? all_check_groups() : cfg.checks;
  for (const auto& g : groups)
    if (!all_check_groups().count(g)) throw UsageError("unknown check group '" + g + "'");
  const Computed c = compute(cfg.max_degree, cfg.cache_path);
  const VerifyReport rep = run_checks(cfg.max_degree, jk_small(c.state), c.table, groups);
  const std::pair<const char*, const std::vector<Verdict>*> parts[] = {
      {"coeffs", &rep.coefficients}, {"identity", &rep.identity}, {"structure", &rep.structure}};
  if (cfg.format == OutputFormat::kPretty) {
    for (const auto& [name, vs] : parts) {
      if (!groups.count(name)) continue;
      size_t bad = 0;
      for (const auto& v : *vs) bad += v.pass ? 0 : 1;
      out << std::left << std::setw(10) << name << (bad ? "FAIL" : "pass") << "  " << vs->size() - bad << "/"
          << vs->size();
      if (cfg.timing) out << "  " << std::fixed << std::setprecision(3) << rep.seconds.at(name) << " s";
      out << "\n";
      for (const auto& v : *vs)
        if (!v.pass)
          out << "  " << v.check << " M=" << v.M << (v.r >= 0 ? " r=" + std::to_string(v.r) : "")
              << (v.component >= 0 ? " x^" + std::to_string(v.component) : "") << ": expected " << v.expected
              << ", got " << v.actual << "\n";
    }
  } else {
    json g = json::object();
    for (const auto& [name, vs] : parts)
      if (groups.count(name)) g[name] = group_json(*vs);
    json j{{"max_degree", rep.max_degree}, {"pass", rep.all_pass()}, {"failures", rep.failures()}, {"groups", g},
           {"reconstruction", reconstruction_json(c)}};
    if (cfg.timing) j["seconds"] = rep.seconds;
    emit_json(out, j);
  }
  return rep.all_pass() ? kExitOk : kExitMismatch;
}

int cmd_cache(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {OutputFormat::kJson, OutputFormat::kPretty});
  const std::string& path = cfg.cache_path;
  json j{{"path", path}};
  if (cfg.cache_action == "info") {
    if (!std::filesystem::exists(path)) throw CacheError(CacheError::Kind::kIo, "cache: no file at " + path);
    const CacheInfo info = inspect_cache(path);
    j.update({{"status", info.status}, {"version", info.version}, {"max_degree", info.max_degree},
              {"checksum", info.checksum}, {"supported_version", kCacheVersion}});
  } else if (cfg.cache_action == "write") {
    const Computed c = compute(cfg.max_degree, path, true);
    if (!c.cache_written) write_cache(path, {truncate_table(c.table, cfg.max_degree), c.state});
    j.update({{"max_degree", cfg.max_degree}, {"reconstruction", reconstruction_json(c)}, {"status", "ok"}});
  } else if (cfg.cache_action == "read") {
    const CacheData data = read_cache(path);
    int D = data.state.max_degree;
    json recon{{"levels_reused", D}, {"levels_computed", 0}, {"cache_written", false}};
    if (cfg.max_degree_given && cfg.max_degree > D) {
      const Computed c = compute(cfg.max_degree, path);
      recon = reconstruction_json(c);
      D = cfg.max_degree;
    }
    j.update({{"status", "ok"}, {"version", kCacheVersion}, {"max_degree", D}, {"reconstruction", recon}});
  } else {
    throw UsageError("cache needs one of write, read, info");
  }
  if (cfg.format == OutputFormat::kPretty) {
    for (const auto& [k, v] : j.items()) out << std::left << std::setw(16) << k << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  } else {
    emit_json(out, j);
  }
  return kExitOk;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.max_degree < 1) throw UsageError("--max-degree must be at least 1");
    if (cfg.command == "gw") return cmd_gw(cfg, out);
    if (cfg.command == "jk") return cmd_jk(cfg, out);
    if (cfg.command == "coeffs") return cmd_coeffs(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "cache") return cmd_cache(cfg, out);
    throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CacheError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format = "json";
  std::string checks;

  CLI::App app{"Exact quantum K-theory and Gromov-Witten computations for the quintic threefold", "qkgv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--cache", cfg.cache_path, std::string("Cache file (overrides $") + kCacheEnvVar + ")");

  auto add_degree = [&cfg](CLI::App* sub) {
    sub->add_option("--max-degree", cfg.max_degree, "Truncation order D in the Novikov variable")
        ->check(CLI::Range(1, 1000))
        ->capture_default_str();
  };
  CLI::App* gw = app.add_subcommand("gw", "Gromov-Witten and Gopakumar-Vafa invariants");
  add_degree(gw);
  CLI::App* jk = app.add_subcommand("jk", "Reconstructed small J^K function");
  add_degree(jk);
  CLI::App* coeffs = app.add_subcommand("coeffs", "Pole coefficients at primitive r-th roots of unity");
  coeffs->add_option("--degree", cfg.degree, "Novikov degree M")->required()->check(CLI::Range(1, 1000));
  coeffs->add_option("--root-order", cfg.root_order, "Root order r")->required()->check(CLI::Range(1, 1000));
  CLI::App* verify = app.add_subcommand("verify", "Check the identity, coefficient formulas and structure");
  add_degree(verify);
  verify->add_option("--checks", checks, "Comma-separated subset of identity,coeffs,structure");
  verify->add_flag("--timing", cfg.timing, "Include wall-clock timings (output is then not reproducible)");
  CLI::App* cache = app.add_subcommand("cache", "Manage the reconstruction cache");
  cache->require_subcommand(1);
  CLI::App* cw = cache->add_subcommand("write", "Compute through --max-degree and write the cache");
  add_degree(cw);
  CLI::App* cr = cache->add_subcommand("read", "Validate the cache, extending it to --max-degree if given");
  CLI::Option* read_degree =
      cr->add_option("--max-degree", cfg.max_degree, "Extend the cache to this order")->check(CLI::Range(1, 1000));
  cache->add_subcommand("info", "Show the cache header and validation status");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    for (CLI::App* sub : app.get_subcommands()) {
      err << sub->help();
      return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  if (cfg.command == "cache") {
    cfg.cache_action = sub->get_subcommands().front()->get_name();
    cfg.max_degree_given = cfg.cache_action == "write" || read_degree->count() > 0;
  }
  cfg.format = format == "csv" ? OutputFormat::kCsv : format == "pretty" ? OutputFormat::kPretty : OutputFormat::kJson;
  if (cfg.cache_path.empty())
    if (const char* env = std::getenv(kCacheEnvVar); env && *env) cfg.cache_path = env;
  if (cfg.command == "cache" && cfg.cache_path.empty()) cfg.cache_path = kDefaultCachePath;
  std::stringstream ss(checks);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) cfg.checks.insert(item);
  return run(cfg, out, err);
}

}  // namespace qkgv
