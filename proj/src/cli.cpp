// Copyright 2026 The qifl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qifl/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qifl/csv_io.hpp"
#include "qifl/dalenius.hpp"
#include "qifl/gains.hpp"
#include "qifl/propcheck.hpp"

namespace qifl::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::array<std::pair<Measure, std::string_view>, 8> kMeasureNames{{
    {Measure::kPriorVulnerability, "prior-vulnerability"},
    {Measure::kPosteriorVulnerability, "posterior-vulnerability"},
    {Measure::kMaxPosteriorVulnerability, "max-posterior-vulnerability"},
    {Measure::kAvgLeakage, "avg-leakage"},
    {Measure::kMaxCaseLeakage, "max-case-leakage"},
    {Measure::kLift, "lift"},
    {Measure::kBayesCapacity, "bayes-capacity"},
    {Measure::kLiftCapacity, "lift-capacity"},
}};

constexpr std::array<std::pair<LiftFormula, std::string_view>, 3> kFormulaNames{{
    {LiftFormula::kChannelOverMarginal, "channel-over-marginal"},
    {LiftFormula::kPosteriorOverPrior, "posterior-over-prior"},
    {LiftFormula::kJointOverProduct, "joint-over-product"},
}};

std::string_view formula_name(LiftFormula f) {
  for (const auto& [k, name] : kFormulaNames) {
    if (k == f) return name;
  }
  return "";
}

bool needs_prior(Measure m) {
  return m != Measure::kBayesCapacity && m != Measure::kLiftCapacity;
}

bool needs_gain(Measure m) { return needs_prior(m) && m != Measure::kLift; }

bool is_capacity(Measure m) {
  return m == Measure::kBayesCapacity || m == Measure::kLiftCapacity;
}

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorKind::kInvalidArgument, message);
}

// ---------------------------------------------------------------------------
// Input loading.

Channel load_channel(const std::string& path) {
  return parse_channel_csv(read_text_file(path));
}

Prior load_prior(const std::string& spec, const Labels& secrets) {
  if (spec == "uniform") return Prior::uniform(secrets);
  Prior pi = parse_prior_csv(read_text_file(spec));
  require_same_labels(pi.support(), secrets, "prior support vs channel secrets");
  return pi;
}

GainFunction load_gain(const std::string& spec, const Labels& secrets,
                       const std::optional<Prior>& pi) {
  if (spec == "gid") return gid(secrets);
  if (spec == "reciprocal") {
    if (!pi) invalid("the reciprocal gain needs a prior");
    return reciprocal_gain(*pi);
  }
  GainFunction g = parse_gain_csv(read_text_file(spec));
  require_same_labels(g.secrets(), secrets, "gain secrets vs channel secrets");
  return g;
}

ExtRational parse_factor(const std::string& text) {
  if (text == "inf") return ExtRational::infinity();
  auto r = Rational::parse(text);
  if (!r) invalid("--factor must be a rational or 'inf', got '" + text + "'");
  return ExtRational(*r);
}

std::string channel_name(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

// ---------------------------------------------------------------------------
// Rendering.

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string ln_of(const ExtRational& v) {
  if (v.is_infinite()) return "inf";
  return fixed4(std::log(v.to_double()));
}

// "19/11 (1.7273)"
std::string show_value(const ExtRational& v) {
  if (v.is_infinite()) return "inf";
  return v.str() + " (" + v.decimal(4) + ")";
}

// "4 (ln = 1.3863)"
std::string show_factor(const ExtRational& v) {
  return v.str() + " (ln = " + ln_of(v) + ")";
}

std::string show_witness(const std::optional<Witness>& w) {
  if (!w) return "";
  std::string out = " witness";
  auto add = [&](const char* key, const std::optional<std::string>& v) {
    if (v) out += std::string(" ") + key + "=" + *v;
  };
  add("secret", w->secret);
  add("other_secret", w->other_secret);
  add("obs", w->observation);
  add("action", w->action);
  return out;
}

ordered_json integer_json(const std::optional<std::int64_t>& fits,
                          const std::string& text) {
  if (fits) return *fits;
  return text;
}

ordered_json value_json(const ExtRational& v) {
  if (v.is_infinite()) {
    return {{"num", nullptr}, {"den", nullptr}, {"infinite", true}};
  }
  const Rational& r = v.value();
  return {{"num", integer_json(r.numerator_int64(), r.numerator_string())},
          {"den", integer_json(r.denominator_int64(), r.denominator_string())},
          {"infinite", false}};
}

ordered_json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  ordered_json out = ordered_json::object();
  if (w->secret) out["secret"] = *w->secret;
  if (w->other_secret) out["other_secret"] = *w->other_secret;
  if (w->observation) out["obs"] = *w->observation;
  if (w->action) out["action"] = *w->action;
  return out;
}

ordered_json report_json(std::string_view measure, const ExtRational& value,
                         const std::optional<Witness>& witness, bool factor) {
  ordered_json out;
  out["measure"] = measure;
  out["value"] = value_json(value);
  out["decimal"] = value.decimal(4);
  if (factor) out["ln"] = ln_of(value);
  out["witness"] = witness_json(witness);
  return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Subcommands.

LeakageReport compute(const AnalysisRequest& req, const Channel& c,
                      const std::optional<Prior>& pi,
                      const std::optional<GainFunction>& g) {
  auto plain = [](const Rational& r) {
    return LeakageReport{ExtRational(r), std::nullopt};
  };
  switch (req.measure) {
    case Measure::kPriorVulnerability:
      return plain(prior_vulnerability(*g, *pi));
    case Measure::kPosteriorVulnerability:
      return plain(posterior_vulnerability(*g, *pi, c));
    case Measure::kMaxPosteriorVulnerability:
      return plain(max_posterior_vulnerability(*g, *pi, c));
    case Measure::kAvgLeakage:
      return plain(mult_leakage(*g, *pi, c));
    case Measure::kMaxCaseLeakage:
      return max_case_leakage_report(*g, *pi, c);
    case Measure::kLift:
      return lift(*pi, c, req.formula);
    case Measure::kBayesCapacity:
      return plain(bayes_capacity(c));
    case Measure::kLiftCapacity:
      return lift_capacity_report(c);
  }
  invalid("unknown measure");
}

RunResult run_capacity(const std::string& channel_path, const std::string& kind,
                       Format format) {
  const Channel c = load_channel(channel_path);
  const LeakageReport r = kind == "lift"
                              ? lift_capacity_report(c)
                              : LeakageReport{ExtRational(bayes_capacity(c)),
                                              std::nullopt};
  RunResult out;
  if (format == Format::kJson) {
    ordered_json j = report_json(kind + "-capacity", r.value, r.witness, true);
    j["inputs"] = {{"channel", channel_path}};
    out.out = dump(j);
  } else {
    out.out = show_factor(r.value) + "\n";
  }
  return out;
}

struct CompareRow {
  std::string name;
  Rational avg;
  Rational max_case;
  Rational bayes;
  ExtRational cap;
};

RunResult run_compare(const std::vector<std::string>& channels,
                      const std::string& prior_spec,
                      const std::string& gain_spec, Format format) {
  std::vector<CompareRow> rows;
  for (const auto& path : channels) {
    const Channel c = load_channel(path);
    const Prior pi = load_prior(prior_spec, c.secrets());
    const GainFunction g = load_gain(gain_spec, c.secrets(), pi);
    rows.push_back({channel_name(path), mult_leakage(g, pi, c),
                    max_case_leakage(g, pi, c), bayes_capacity(c),
                    lift_capacity(c)});
  }
  RunResult out;
  if (format == Format::kJson) {
    ordered_json list = ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      list.push_back({{"channel", r.name},
                      {"path", channels[i]},
                      {"avg_leakage", report_json("avg-leakage", r.avg, {}, false)},
                      {"max_case_leakage",
                       report_json("max-case-leakage", r.max_case, {}, false)},
                      {"bayes_capacity",
                       report_json("bayes-capacity", r.bayes, {}, true)},
                      {"lift_capacity",
                       report_json("lift-capacity", r.cap, {}, true)}});
    }
    ordered_json j;
    j["inputs"] = {{"prior", prior_spec}, {"gain", gain_spec}};
    j["channels"] = std::move(list);
    out.out = dump(j);
    return out;
  }
  std::vector<std::array<std::string, 5>> table;
  table.push_back({"channel", "avg_leakage", "max_case_leakage",
                   "bayes_capacity", "lift_capacity"});
  for (const auto& r : rows) {
    table.push_back({r.name, show_value(r.avg), show_value(r.max_case),
                     show_value(r.bayes), show_factor(r.cap)});
  }
  std::array<std::size_t, 5> width{};
  for (const auto& line : table) {
    for (std::size_t k = 0; k < 5; ++k) {
      width[k] = std::max(width[k], line[k].size());
    }
  }
  std::ostringstream text;
  for (const auto& line : table) {
    std::string s;
    for (std::size_t k = 0; k < 5; ++k) {
      s += line[k];
      if (k + 1 < 5) s += std::string(width[k] - line[k].size() + 2, ' ');
    }
    text << s << '\n';
  }
  out.out = text.str();
  return out;
}

RunResult run_verify_ldp(const std::string& channel_path,
                         const std::string& factor_text, Format format) {
  const Channel c = load_channel(channel_path);
  const ExtRational factor = parse_factor(factor_text);
  const bool holds = verify_ldp(c, factor);
  const ExtRational cap = lift_capacity(c);
  RunResult out;
  out.exit_code = holds ? kExitOk : kExitPredicateFalse;
  if (format == Format::kJson) {
    ordered_json j;
    j["check"] = "ldp";
    j["factor"] = value_json(factor);
    j["holds"] = holds;
    j["lift_capacity"] = value_json(cap);
    j["inputs"] = {{"channel", channel_path}};
    out.out = dump(j);
  } else {
    out.out = "ldp factor " + factor.str() + ": " + (holds ? "true" : "false") +
              " (lift capacity " + show_factor(cap) + ")\n";
  }
  return out;
}

RunResult run_verify_lip(const std::string& channel_path,
                         const std::string& prior_spec,
                         const std::string& factor_text, Format format) {
  const Channel c = load_channel(channel_path);
  const Prior pi = load_prior(prior_spec, c.secrets());
  const ExtRational factor = parse_factor(factor_text);
  // An infinite factor bounds nothing.
  const bool holds = factor.is_infinite() ? (verify_lip(pi, c, Rational(1)), true)
                                          : verify_lip(pi, c, factor.value());
  RunResult out;
  out.exit_code = holds ? kExitOk : kExitPredicateFalse;
  if (format == Format::kJson) {
    ordered_json j;
    j["check"] = "lip";
    j["factor"] = value_json(factor);
    j["holds"] = holds;
    j["inputs"] = {{"channel", channel_path}, {"prior", prior_spec}};
    out.out = dump(j);
  } else {
    out.out = "lip factor " + factor.str() + ": " + (holds ? "true" : "false") +
              "\n";
  }
  return out;
}

RunResult run_dalenius(const std::string& joint_path,
                       const std::string& channel_path,
                       const std::optional<std::string>& gain_spec,
                       Format format) {
  const Correlation corr(parse_joint_csv(read_text_file(joint_path)));
  const Channel c = load_channel(channel_path);
  const DaleniusLift dl = dalenius_lift(corr, c);
  std::optional<DaleniusCapacity> dc;
  if (gain_spec) {
    const GainFunction g =
        load_gain(*gain_spec, corr.z_labels(), corr.factors().rho);
    dc = dalenius_capacity_bound(corr, c, g);
  }
  const bool holds = dl.holds && (!dc || dc->holds);
  RunResult out;
  out.exit_code = holds ? kExitOk : kExitPredicateFalse;
  if (format == Format::kJson) {
    ordered_json j;
    j["lift"] = {{"lift_rho_dc", value_json(dl.lhs)},
                 {"lift_rho_d", value_json(dl.lift_rho_d)},
                 {"lift_pi_c", value_json(dl.lift_pi_c)},
                 {"bound", value_json(dl.bound)},
                 {"holds", dl.holds}};
    if (dc) {
      j["capacity"] = {{"max_case_leakage", value_json(dc->leak)},
                       {"lift_capacity_dc", value_json(dc->cap_dc)},
                       {"lift_capacity_c", value_json(dc->cap_c)},
                       {"holds", dc->holds}};
    }
    j["holds"] = holds;
    ordered_json inputs = {{"joint", joint_path}, {"channel", channel_path}};
    if (gain_spec) inputs["gain"] = *gain_spec;
    j["inputs"] = std::move(inputs);
    out.out = dump(j);
    return out;
  }
  std::vector<std::pair<std::string, std::string>> lines{
      {"lift(rho, DC)", show_value(dl.lhs)},
      {"lift(rho, D)", show_value(dl.lift_rho_d)},
      {"lift(pi, C)", show_value(dl.lift_pi_c)},
      {"bound", show_value(dl.bound)},
      {"lift bound holds", dl.holds ? "true" : "false"}};
  if (dc) {
    lines.insert(lines.end(),
                 {{"max_case_leakage(rho, DC)", show_value(dc->leak)},
                  {"lift_capacity(DC)", show_factor(dc->cap_dc)},
                  {"lift_capacity(C)", show_factor(dc->cap_c)},
                  {"capacity bound holds", dc->holds ? "true" : "false"}});
  }
  std::size_t width = 0;
  for (const auto& [k, v] : lines) width = std::max(width, k.size());
  for (const auto& [k, v] : lines) {
    out.out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  }
  return out;
}

struct FuzzOptions {
  propcheck::InstanceSpec spec;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> properties;
  Format format = Format::kJson;
};

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used, 0);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  invalid("QIF_SEED must be an unsigned integer, got '" + text + "'");
}

ordered_json failure_json(const propcheck::Failure& f) {
  return {{"trial_index", f.trial_index},
          {"shrink_steps", f.shrink_steps},
          {"relation", f.violation.relation},
          {"lhs", f.violation.lhs},
          {"rhs", f.violation.rhs},
          {"instance",
           {{"prior", to_csv(f.shrunk.prior)},
            {"channel", to_csv(f.shrunk.channel)},
            {"gain", to_csv(f.shrunk.gain)},
            {"post", to_csv(f.shrunk.post)}}}};
}

RunResult run_fuzz(FuzzOptions opts, const std::optional<std::string>& env) {
  if (opts.seed) {
    opts.spec.seed = *opts.seed;
  } else if (env) {
    opts.spec.seed = parse_seed(*env);
  }
  opts.spec.validate();
  std::vector<propcheck::CheckResult> results;
  if (opts.properties.empty()) {
    results = propcheck::run_registry(opts.spec);
  } else {
    for (const auto& name : opts.properties) {
      const auto* p = propcheck::find_property(name);
      if (!p) invalid("unknown property '" + name + "'");
      results.push_back(propcheck::run_property(*p, opts.spec));
    }
  }
  const bool all_passed = std::all_of(
      results.begin(), results.end(), [](const auto& r) { return r.passed; });
  RunResult out;
  out.exit_code = all_passed ? kExitOk : kExitPredicateFalse;
  if (opts.format == Format::kJson) {
    ordered_json list = ordered_json::array();
    for (const auto& r : results) {
      ordered_json item = {{"property", r.property},
                           {"trials_run", r.trials_run},
                           {"discarded", r.discarded},
                           {"passed", r.passed}};
      item["failure"] = r.failure ? failure_json(*r.failure) : nullptr;
      list.push_back(std::move(item));
    }
    ordered_json j;
    j["seed"] = opts.spec.seed;
    j["trials"] = opts.spec.trials;
    j["passed"] = all_passed;
    j["results"] = std::move(list);
    out.out = dump(j);
    return out;
  }
  std::ostringstream text;
  text << "seed " << opts.spec.seed << ", " << opts.spec.trials
       << " trials per property\n";
  for (const auto& r : results) {
    text << (r.passed ? "PASS " : "FAIL ") << r.property << " ("
         << r.trials_run << " run, " << r.discarded << " discarded)\n";
    if (r.failure) {
      const auto& f = *r.failure;
      text << "  trial " << f.trial_index << ", " << f.shrink_steps
           << " shrink steps: " << f.violation.relation << " with lhs "
           << f.violation.lhs << ", rhs " << f.violation.rhs << "\n"
           << to_csv(f.shrunk.prior) << to_csv(f.shrunk.channel);
    }
  }
  out.out = text.str();
  return out;
}

int exit_code_for(const Error& e) {
  return e.kind() == ErrorKind::kParseError ? kExitParse : kExitValidation;
}

RunResult guarded(const std::function<RunResult()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {exit_code_for(e), "", std::string("error: ") + e.what() + "\n"};
  }
}

void add_format_option(CLI::App* app, Format* format) {
  app->add_option("--format", *format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::kText},
                                        {"json", Format::kJson}}));
}

}  // namespace

std::string_view to_string(Measure m) {
  for (const auto& [k, name] : kMeasureNames) {
    if (k == m) return name;
  }
  return "";
}

std::optional<Measure> parse_measure(std::string_view name) {
  for (const auto& [k, n] : kMeasureNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::vector<std::string> measure_names() {
  std::vector<std::string> out;
  for (const auto& [k, n] : kMeasureNames) out.emplace_back(n);
  return out;
}

void AnalysisRequest::validate() const {
  const std::string name(to_string(measure));
  if (channel_path.empty()) invalid("a channel is required");
  if (needs_prior(measure) && !prior) invalid(name + " needs --prior");
  if (needs_gain(measure) && !gain) invalid(name + " needs --gain");
}

RunResult run(const AnalysisRequest& req) {
  return guarded([&] {
    req.validate();
    const Channel c = load_channel(req.channel_path);
    std::optional<Prior> pi;
    std::optional<GainFunction> g;
    if (needs_prior(req.measure)) pi = load_prior(*req.prior, c.secrets());
    if (needs_gain(req.measure)) g = load_gain(*req.gain, c.secrets(), pi);
    const LeakageReport r = compute(req, c, pi, g);

    RunResult out;
    if (req.format == Format::kJson) {
      ordered_json j = report_json(to_string(req.measure), r.value, r.witness,
                                   is_capacity(req.measure));
      ordered_json inputs = {{"channel", req.channel_path}};
      if (pi) inputs["prior"] = *req.prior;
      if (g) inputs["gain"] = *req.gain;
      if (req.measure == Measure::kLift) {
        inputs["formula"] = formula_name(req.formula);
      }
      j["inputs"] = std::move(inputs);
      out.out = dump(j);
    } else if (is_capacity(req.measure)) {
      out.out = show_factor(r.value) + show_witness(r.witness) + "\n";
    } else {
      out.out = show_value(r.value) + show_witness(r.witness) + "\n";
    }
    return out;
  });
}

RunResult run_command_line(const std::vector<std::string>& args,
                           const std::optional<std::string>& seed_env) {
  CLI::App app{"Exact leakage analysis of finite channels", "qifl"};
  app.require_subcommand(1);

  AnalysisRequest analyze;
  std::string measure = "lift";
  auto* a = app.add_subcommand("analyze", "Compute one leakage measure");
  a->add_option("--channel", analyze.channel_path, "Channel CSV")->required();
  a->add_option("--prior", analyze.prior, "Prior CSV or 'uniform'");
  a->add_option("--gain", analyze.gain, "Gain CSV, 'gid' or 'reciprocal'");
  a->add_option("--measure", measure, "Measure to compute")
      ->check(CLI::IsMember(measure_names()));
  a->add_option("--formula", analyze.formula, "Lift evaluation route")
      ->transform(CLI::CheckedTransformer(std::map<std::string, LiftFormula>{
          {"channel-over-marginal", LiftFormula::kChannelOverMarginal},
          {"posterior-over-prior", LiftFormula::kPosteriorOverPrior},
          {"joint-over-product", LiftFormula::kJointOverProduct}}));
  add_format_option(a, &analyze.format);

  std::string cap_channel;
  std::string cap_kind = "lift";
  Format cap_format = Format::kText;
  auto* cap = app.add_subcommand("capacity", "Lift or Bayes capacity");
  cap->add_option("--channel", cap_channel, "Channel CSV")->required();
  cap->add_option("--kind", cap_kind, "lift or bayes")
      ->check(CLI::IsMember({"lift", "bayes"}));
  add_format_option(cap, &cap_format);

  std::vector<std::string> cmp_channels;
  std::string cmp_prior = "uniform";
  std::string cmp_gain = "gid";
  Format cmp_format = Format::kText;
  auto* cmp = app.add_subcommand("compare", "Tabulate leakage across channels");
  cmp->add_option("--channel", cmp_channels, "Channel CSV (repeatable)")
      ->required();
  cmp->add_option("--prior", cmp_prior, "Prior CSV or 'uniform'");
  cmp->add_option("--gain", cmp_gain, "Gain CSV, 'gid' or 'reciprocal'");
  add_format_option(cmp, &cmp_format);

  auto* verify = app.add_subcommand("verify", "Check a privacy guarantee");
  verify->require_subcommand(1);
  std::string v_channel;
  std::string v_prior;
  std::string v_factor;
  Format v_format = Format::kText;
  auto* ldp = verify->add_subcommand("ldp", "Local differential privacy");
  ldp->add_option("--channel", v_channel, "Channel CSV")->required();
  ldp->add_option("--factor", v_factor, "e^eps factor or 'inf'")->required();
  add_format_option(ldp, &v_format);
  auto* lip = verify->add_subcommand("lip", "Local information privacy");
  lip->add_option("--channel", v_channel, "Channel CSV")->required();
  lip->add_option("--prior", v_prior, "Prior CSV or 'uniform'")->required();
  lip->add_option("--factor", v_factor, "e^eps factor or 'inf'")->required();
  add_format_option(lip, &v_format);

  std::string d_joint;
  std::string d_channel;
  std::optional<std::string> d_gain;
  Format d_format = Format::kText;
  auto* dal = app.add_subcommand("dalenius", "Leakage about a correlated secret");
  dal->add_option("--joint", d_joint, "Joint CSV over Z x X")->required();
  dal->add_option("--channel", d_channel, "Channel CSV over X")->required();
  dal->add_option("--gain", d_gain, "Gain over Z: CSV, 'gid' or 'reciprocal'");
  add_format_option(dal, &d_format);

  FuzzOptions fz;
  auto* fuzz = app.add_subcommand("fuzz", "Run the property registry");
  fuzz->add_option("--trials", fz.spec.trials, "Instances per property");
  fuzz->add_option("--seed", fz.seed, "Seed (overrides QIF_SEED)");
  fuzz->add_option("--property", fz.properties, "Property name (repeatable)");
  fuzz->add_option("--max-secrets", fz.spec.max_secrets);
  fuzz->add_option("--max-observations", fz.spec.max_observations);
  fuzz->add_option("--max-actions", fz.spec.max_actions);
  fuzz->add_option("--denominator-bound", fz.spec.denominator_bound);
  add_format_option(fuzz, &fz.format);

  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? kExitOk : kExitValidation, out.str(), err.str()};
  }

  if (a->parsed()) {
    analyze.measure = *parse_measure(measure);
    return run(analyze);
  }
  return guarded([&]() -> RunResult {
    if (cap->parsed()) return run_capacity(cap_channel, cap_kind, cap_format);
    if (cmp->parsed()) {
      return run_compare(cmp_channels, cmp_prior, cmp_gain, cmp_format);
    }
    if (ldp->parsed()) return run_verify_ldp(v_channel, v_factor, v_format);
    if (lip->parsed()) {
      return run_verify_lip(v_channel, v_prior, v_factor, v_format);
    }
    if (dal->parsed()) return run_dalenius(d_joint, d_channel, d_gain, d_format);
    return run_fuzz(fz, seed_env);
  });
}

}  // namespace qifl::cli
