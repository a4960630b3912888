/* Copyright 2026 The chevalley authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "chevalley/sample.hpp"
#include "chevalley/weilrep.hpp"

namespace chevalley::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string group;
  std::string inner_class = "split";
  std::string param_file;
  std::uint64_t seed = 1;
  int count = 100;
  int jobs = 0;
  bool json = false;
};

class Report {
 public:
  void line(std::string s) {
    lines_.push_back(std::move(s));
  }
  void check(const CheckResult& c) {
    checks_.push_back(c);
    line(std::string(c.passed ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : ": " + c.detail));
  }
  json& data() { return data_; }
  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; }));
  }
  std::size_t total() const { return checks_.size(); }
  bool all_passed() const { return passed() == total(); }

  void emit(std::ostream& out, const std::string& command, bool as_json, int code, const std::string& summary) const {
    if (as_json) {
      json j;
      j["command"] = command;
      j["lines"] = lines_;
      json cs = json::array();
      for (const auto& c : checks_) cs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      j["checks"] = cs;
      j["data"] = data_;
      j["result"] = {{"code", code}, {"summary", summary}};
      out << j.dump() << "\n";
    } else {
      for (const auto& l : lines_) out << l << "\n";
    }
    out << "RESULT " << code << " " << summary << "\n";
  }

 private:
  std::vector<std::string> lines_;
  std::vector<CheckResult> checks_;
  json data_ = json::object();
};

json rat_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json gauss_json(const GaussVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json word_json(const WeylElem& w) {
  json a = json::array();
  for (int i : w.word()) a.push_back(i + 1);
  return a;
}

json param_json(const LParam& p) { return {{"lambda", gauss_json(p.lambda)}, {"mu", rat_json(p.mu)}, {"w", word_json(p.w)}}; }

std::string entry_text(const json& x) {
  if (x.is_string()) return x.get<std::string>();
  if (x.is_number_integer()) return std::to_string(x.get<std::int64_t>());
  throw Error(ErrorKind::ParseError, "vector entries must be strings or integers, got " + x.dump());
}

GaussVec parse_gauss_vec(const json& a) {
  if (!a.is_array()) throw Error(ErrorKind::ParseError, "expected an array, got " + a.dump());
  GaussVec v;
  for (const auto& x : a) v.push_back(Gaussian::parse(entry_text(x)));
  return v;
}

RatVec parse_rat_vec(const json& a) {
  if (!a.is_array()) throw Error(ErrorKind::ParseError, "expected an array, got " + a.dump());
  RatVec v;
  for (const auto& x : a) v.push_back(Rational::parse(entry_text(x)));
  return v;
}

IntMat parse_matrix(const json& a) {
  if (!a.is_array() || a.empty()) throw Error(ErrorKind::ParseError, "expected a matrix, got " + a.dump());
  const int rows = static_cast<int>(a.size());
  IntMat m(rows, rows);
  for (int r = 0; r < rows; ++r) {
    if (!a[r].is_array() || static_cast<int>(a[r].size()) != rows)
      throw Error(ErrorKind::ParseError, "matrix must be square, got " + a.dump());
    for (int c = 0; c < rows; ++c) {
      if (!a[r][c].is_number_integer()) throw Error(ErrorKind::ParseError, "matrix entries must be integers");
      m(r, c) = a[r][c].get<std::int64_t>();
    }
  }
  return m;
}

/// "split", "compact", or a JSON matrix for the inner class on X^*(G).
LGroupPtr make_lgroup(const std::string& group, const json& inner) {
  RootDatum g = build_datum(group);
  if (inner.is_string()) {
    std::string s = inner.get<std::string>();
    if (!s.empty() && s.front() == '[') return make_lgroup(group, json::parse(s));
    return build_lgroup(g, s);
  }
  return build_lgroup(g, make_based_aut(g, parse_matrix(inner)));
}

std::string inner_text(const json& inner) { return inner.is_string() ? inner.get<std::string>() : inner.dump(); }

struct LoadedParam {
  std::string group;
  std::string inner;
  LGroupPtr L;
  GaussVec lambda;
  RatVec mu;
  WeylElem w;
};

LoadedParam load_param(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read parameter file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, "'" + path + "': " + e.what());
  }
  for (const char* key : {"group", "lambda", "mu", "w"})
    if (!j.contains(key)) throw Error(ErrorKind::ParseError, std::string("parameter file lacks '") + key + "'");
  LoadedParam p;
  p.group = j["group"].get<std::string>();
  json inner = j.contains("inner_class") ? j["inner_class"] : json("split");
  p.inner = inner_text(inner);
  p.L = make_lgroup(p.group, inner);
  p.lambda = parse_gauss_vec(j["lambda"]);
  p.mu = parse_rat_vec(j["mu"]);
  std::vector<int> word;
  for (const auto& x : j["w"]) {
    if (!x.is_number_integer()) throw Error(ErrorKind::ParseError, "w must list 1-based simple indices");
    word.push_back(x.get<int>() - 1);
  }
  if (static_cast<int>(p.lambda.size()) != p.L->rank() || static_cast<int>(p.mu.size()) != p.L->rank())
    throw Error(ErrorKind::ParseError, "lambda and mu need " + std::to_string(p.L->rank()) + " entries");
  for (int i : word)
    if (i < 0 || i >= p.L->dual.num_simple()) throw Error(ErrorKind::ParseError, "w index out of range");
  p.w = p.L->weyl->from_word(word);
  return p;
}

std::string param_path(const Options& o) {
  std::string path = o.param_file.empty() ? o.input : o.param_file;
  if (path.empty()) throw Error(ErrorKind::ParseError, "a parameter file is required");
  return path;
}

void header(Report& r, const LoadedParam& lp) {
  r.line("group: " + lp.group);
  r.line("inner class: " + lp.inner);
  r.data()["group"] = lp.group;
  r.data()["inner_class"] = lp.inner;
}

std::string fraction(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

int cmd_check_tits(const Options& o, Report& r, std::string& summary) {
  std::string spec = o.group.empty() ? o.input : o.group;
  if (spec.empty()) throw Error(ErrorKind::ParseError, "check-tits needs a datum");
  RootDatum d = build_datum(spec);
  auto weyl = WeylGroup::create(d);
  r.line("datum: " + datum_str(d));
  r.line("weyl group order: " + std::to_string(weyl->order()));
  r.data()["datum"] = datum_str(d);
  r.data()["weyl_order"] = weyl->order();
  for (const auto& c : tits_suite(d)) r.check(c);
  summary = "check-tits " + spec + ": " + fraction(r.passed(), r.total()) + " PASS, " + std::to_string(weyl->order()) +
            " Weyl elements";
  return r.all_passed() ? kOk : kCheckFailed;
}

int cmd_validate(const Options& o, Report& r, std::string& summary) {
  LoadedParam lp = load_param(param_path(o));
  header(r, lp);
  r.line("parameter: lambda=" + vec_str(lp.lambda) + " mu=" + vec_str(lp.mu) + " w=" + word_str(lp.w));
  std::string failed;
  for (const auto& v : check_validity(lp.L, lp.lambda, lp.mu, lp.w)) {
    r.check({"(" + v.clause + ")", v.ok, v.detail});
    if (!v.ok && failed.empty()) failed = v.clause;
  }
  if (failed.empty()) {
    summary = "validate-param: valid";
    return kOk;
  }
  summary = "validate-param: clause (" + failed + ") FAIL";
  return kCheckFailed;
}

LParam load_valid(const Options& o, Report& r) {
  LoadedParam lp = load_param(param_path(o));
  header(r, lp);
  LParam p = make_param(lp.L, lp.lambda, lp.mu, lp.w);
  r.line("parameter: " + param_str(p));
  r.data()["parameter"] = param_json(p);
  return p;
}

int cmd_invariants(const Options& o, Report& r, std::string& summary) {
  LParam p = load_valid(o, r);
  GaussVec ic = inf_char(p);
  TorusCharData rc = rad_char(p);
  CentralChar cc = central_char(p);
  bool ds = is_discrete_series(p);
  r.line("inf_char: " + vec_str(ic));
  r.line("rad_char: lambda=" + vec_str(rc.lambda) + " kappa=" + vec_str(rc.kappa));
  r.line("central_char: tau=" + vec_str(cc.tau) + " class=" + vec_str(cc.canonical));
  r.line("discrete_series: " + std::string(ds ? "yes" : "no"));
  r.data()["inf_char"] = gauss_json(ic);
  r.data()["rad_char"] = {{"lambda", gauss_json(rc.lambda)}, {"kappa", rat_json(rc.kappa)}};
  r.data()["central_char"] = {{"tau", rat_json(cc.tau)}, {"class", rat_json(cc.canonical)}};
  r.data()["discrete_series"] = ds;
  LeviReduction lr = levi_of(p);
  r.line("levi: " + levi_str(lr.levi) + " conjugator " + word_str(lr.conjugator));
  r.line("levi parameter: " + param_str(lr.param));
  r.data()["levi"] = levi_str(lr.levi);
  r.data()["levi_parameter"] = param_json(lr.param);
  summary = "invariants: computed";
  return kOk;
}

int cmd_contragredient(const Options& o, Report& r, std::string& summary) {
  LParam p = load_valid(o, r);
  LParam c = contragredient_param(p);
  LParam t = tau_twist_param(p);
  bool eq = params_equivalent(c, t);
  r.line("C.phi: " + param_str(c));
  r.line("phi.tau: " + param_str(t));
  r.line("conjugate: " + std::string(eq ? "yes" : "no"));
  r.data()["contragredient"] = param_json(c);
  r.data()["tau_twist"] = param_json(t);
  r.data()["conjugate"] = eq;
  summary = eq ? "contragredient: C.phi and phi.tau are conjugate" : "contragredient: C.phi and phi.tau differ";
  return eq ? kOk : kCheckFailed;
}

int cmd_verify(const Options& o, Report& r, std::string& summary) {
  LParam p = load_valid(o, r);
  ContragredientReport rep = verify_contragredient(p);
  r.line("C.phi: " + param_str(rep.dual));
  r.line("phi.tau: " + param_str(rep.twisted));
  r.line("levi: " + levi_str(rep.descriptor.levi));
  for (const auto& c : rep.checks) r.check(c);
  summary = "verify-theorem: " + fraction(r.passed(), r.total()) + " PASS";
  return r.all_passed() ? kOk : kCheckFailed;
}

std::string multiset_str(const std::vector<Gaussian>& xs) {
  std::string s = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + xs[k].str();
  return s + "}";
}

int cmd_weilrep(const Options& o, Report& r, std::string& summary) {
  if (o.input.empty()) throw Error(ErrorKind::ParseError, "weilrep needs a representation literal");
  WeilRep rep = parse_weilrep(o.input);
  WeilRep d = weil_dual(rep);
  WeilRep h = weil_hermitian_dual(rep);
  auto ic = weil_inf_char(rep);
  r.line("rep: " + weil_str(rep));
  r.line("dim: " + std::to_string(rep.dim()));
  r.line("dual: " + weil_str(d));
  r.line("hermitian dual: " + weil_str(h));
  r.line("hermitian: " + std::string(weil_is_hermitian(rep) ? "yes" : "no"));
  r.line("unitary: " + std::string(weil_is_unitary(rep) ? "yes" : "no"));
  r.line("inf_char: " + multiset_str(ic));
  LParam p = weil_to_lparam(rep);
  r.line("parameter: " + param_str(p));
  r.data()["rep"] = weil_str(rep);
  r.data()["dual"] = weil_str(d);
  r.data()["hermitian_dual"] = weil_str(h);
  r.data()["hermitian"] = weil_is_hermitian(rep);
  r.data()["unitary"] = weil_is_unitary(rep);
  r.data()["parameter"] = param_json(p);

  r.check({"hermitian dual is an involution", weil_hermitian_dual(h) == rep, weil_str(weil_hermitian_dual(h))});
  std::vector<Gaussian> expected;
  for (const auto& x : ic) expected.push_back(-x.conj());
  std::sort(expected.begin(), expected.end());
  r.check({"inf_char of hermitian dual", weil_inf_char(h) == expected, multiset_str(weil_inf_char(h))});
  r.check({"unitary implies hermitian", !weil_is_unitary(rep) || weil_is_hermitian(rep),
           std::string("unitary ") + (weil_is_unitary(rep) ? "yes" : "no")});
  LParam pd = weil_to_lparam(d);
  LParam cp = contragredient_param(p);
  r.check({"dual matches contragredient parameter", params_equivalent(pd, cp), param_str(pd) + " vs " + param_str(cp)});
  summary = "weilrep: " + fraction(r.passed(), r.total()) + " PASS";
  return r.all_passed() ? kOk : kCheckFailed;
}

int cmd_fuzz(const Options& o, Report& r, std::string& summary) {
  std::string group = o.group.empty() ? o.input : o.group;
  if (group.empty()) throw Error(ErrorKind::ParseError, "fuzz needs --group");
  if (o.count < 0) throw Error(ErrorKind::ParseError, "--count must be non-negative");
  LGroupPtr L = make_lgroup(group, json(o.inner_class));
  r.line("group: " + group);
  r.line("inner class: " + o.inner_class);
  r.line("seed: " + std::to_string(o.seed));
  ParamSampler sampler(L, o.seed);
  std::vector<LParam> params;
  for (int k = 0; k < o.count; ++k) params.push_back(sampler.next_normal());

  // Verification fans out; each instance's lines are buffered and emitted in order.
  std::vector<std::string> lines(params.size());
  std::vector<char> ok(params.size(), 0);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      ContragredientReport rep = verify_contragredient(params[k]);
      ok[k] = rep.all_passed();
      std::string s = "instance " + std::to_string(k + 1) + ": " + (ok[k] ? "PASS " : "FAIL ") + param_str(params[k]);
      for (const auto& c : rep.checks)
        if (!c.passed) s += "\n  FAIL " + c.name + ": " + c.detail;
      lines[k] = s;
    }
  };
  std::size_t jobs = o.jobs > 0 ? static_cast<std::size_t>(o.jobs) : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<std::size_t>(jobs, std::max<std::size_t>(1, params.size()));
  std::vector<std::future<void>> futures;
  std::size_t chunk = (params.size() + jobs - 1) / jobs;
  for (std::size_t b = 0; b < params.size(); b += chunk)
    futures.push_back(std::async(std::launch::async, work, b, std::min(params.size(), b + chunk)));
  for (auto& f : futures) f.get();

  std::size_t passed = 0;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    r.line(lines[k]);
    passed += ok[k];
  }
  r.data()["instances"] = params.size();
  r.data()["passed"] = passed;
  summary = "fuzz: " + fraction(passed, params.size()) + " instances PASS";
  return passed == params.size() ? kOk : kCheckFailed;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidSpec:
    case ErrorKind::InvalidCartan:
    case ErrorKind::RankMismatch:
    case ErrorKind::NotBasedAut:
    case ErrorKind::NotInvolution:
    case ErrorKind::DimensionMismatch:
      return kParseError;
    case ErrorKind::NormalizationRequired:
      return kNormalization;
    default:
      return kCheckFailed;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of Tits groups, L-parameters and the contragredient.", "chevalley"};
  app.require_subcommand(1);
  Options o;
  struct Command {
    const char* name;
    const char* help;
    int (*fn)(const Options&, Report&, std::string&);
  };
  const Command commands[] = {
      {"check-tits", "Tits group identities on a root datum", cmd_check_tits},
      {"validate-param", "validity clauses of a parameter file", cmd_validate},
      {"invariants", "infinitesimal, radical and central characters, Levi, discrete series", cmd_invariants},
      {"contragredient", "C.phi and phi.tau in normal form", cmd_contragredient},
      {"verify-theorem", "the four-point contragredient report", cmd_verify},
      {"weilrep", "W_R representation literal: duals, unitarity, parameter", cmd_weilrep},
      {"fuzz", "random valid parameters checked against the theorem", cmd_fuzz},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("input", o.input, "datum spec, parameter file or representation literal");
    sub->add_option("--group", o.group, "datum spec, e.g. \"A2 sc\" or \"GL(3)\"");
    sub->add_option("--inner-class", o.inner_class, "split, compact, or a JSON matrix");
    sub->add_option("--param", o.param_file, "parameter file");
    sub->add_option("--seed", o.seed, "fuzz seed");
    sub->add_option("--count", o.count, "fuzz instance count");
    sub->add_option("--jobs", o.jobs, "fuzz worker threads (0 = hardware)");
    sub->add_flag("--json", o.json, "machine-readable report");
    subs.emplace_back(sub, &c);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    out << "RESULT " << kParseError << " parse error: " << e.what() << "\n";
    return kParseError;
  }

  for (const auto& [sub, cmd] : subs) {
    if (!sub->parsed()) continue;
    Report report;
    std::string summary;
    int code = kOk;
    try {
      code = cmd->fn(o, report, summary);
    } catch (const Error& e) {
      code = exit_code_for(e.kind());
      report.line(std::string("error: ") + e.what());
      summary = std::string(cmd->name) + ": " + std::string(to_string(e.kind()));
    } catch (const nlohmann::json::exception& e) {
      code = kParseError;
      report.line(std::string("error: ") + e.what());
      summary = std::string(cmd->name) + ": ParseError";
    }
    report.emit(out, cmd->name, o.json, code, summary);
    return code;
  }
  return kParseError;
}

}  // namespace chevalley::cli
