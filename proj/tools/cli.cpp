// Copyright 2026 The spinor_secant Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <exception>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "spinor_secant/certificates.hpp"
#include "spinor_secant/errors.hpp"
#include "spinor_secant/terracini.hpp"

namespace spinor_secant::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string defective_label(const SecantReport& r) {
  if (r.status == SecantStatus::kCertifiedDefective) return "YES";
  if (r.status == SecantStatus::kLowerBoundOnly && r.defect_lower_bound > 0) return "MAYBE";
  return "NO";
}

ordered_json report_json(const SecantReport& r) {
  ordered_json j;
  j["h"] = r.h;
  j["k"] = r.k;
  j["p"] = chart_dimension(r.h);
  j["N"] = ambient_dimension(r.h);
  j["prime"] = r.prime;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["rank"] = r.affine_rank;
  j["dimension"] = r.dimension;
  j["expected"] = r.expected;
  j["defect_lower_bound"] = r.defect_lower_bound;
  j["status"] = std::string(to_string(r.status));
  j["certificate"] = r.certificate ? ordered_json(*r.certificate) : ordered_json(nullptr);
  return j;
}

constexpr const char* kCsvHeader = "h,p,N,expected,dimension,defective";

std::string csv_row(const SecantReport& r) {
  return fmt::format("{},{},{},{},{},{}", r.h, chart_dimension(r.h), ambient_dimension(r.h), r.expected, r.dimension,
                     defective_label(r));
}

ordered_json verdict_json(const CertificateVerdict& v) {
  ordered_json j;
  j["name"] = v.name;
  j["status"] = std::string(to_string(v.status));
  j["failed_check"] = v.failed_check ? ordered_json(*v.failed_check) : ordered_json(nullptr);
  j["dimension"] = v.dimension ? ordered_json(*v.dimension) : ordered_json(nullptr);
  j["defect"] = v.defect ? ordered_json(*v.defect) : ordered_json(nullptr);
  j["note"] = v.note;
  ordered_json checks = ordered_json::array();
  for (const auto& c : v.checks) {
    ordered_json cj;
    cj["label"] = c.label;
    cj["description"] = c.description;
    cj["observed"] = c.observed;
    cj["required"] = c.required;
    cj["ok"] = c.ok;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

void print_verdict(const CertificateVerdict& v, Format format, std::ostream& out) {
  switch (format) {
    case Format::kJson:
      out << verdict_json(v).dump() << '\n';
      return;
    case Format::kCsv:
      for (const auto& c : v.checks) {
        fmt::print(out, "{},{},{},{},{}\n", v.name, c.label, c.observed, c.required, c.ok ? "OK" : "FAIL");
      }
      return;
    case Format::kText:
      fmt::print(out, "{}: {}\n", v.name, to_string(v.status));
      for (const auto& c : v.checks) {
        fmt::print(out, "  {} {}/{} {}  ({})\n", c.label, c.observed, c.required, c.ok ? "OK" : "FAIL",
                   c.description);
      }
      if (v.dimension) fmt::print(out, "  dimension {}\n", *v.dimension);
      if (v.defect) fmt::print(out, "  defect {}\n", *v.defect);
      if (!v.note.empty()) fmt::print(out, "  note: {}\n", v.note);
      return;
  }
}

int run_dim(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (!c.h || !c.k) {
    err << "dim requires --h and --k\n";
    return kExitUsage;
  }
  SecantReport r = secant_dimension_estimate(*c.h, *c.k, c.seed, c.trials, c.threads);
  if (c.attach_certificates) attach_known_certificate(r, c.seed);

  std::optional<RationalCrossCheck> rational;
  if (c.rational) rational = rational_cross_check(*c.h, *c.k, c.seed);

  switch (c.format) {
    case Format::kJson: {
      ordered_json j = report_json(r);
      if (rational) {
        j["rational_rank"] = rational->rational_rank;
        j["modular_rank_integer_points"] = rational->modular_rank;
      }
      out << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      out << kCsvHeader << (rational ? ",rational_rank,modular_rank_integer_points" : "") << '\n';
      out << csv_row(r);
      if (rational) out << ',' << rational->rational_rank << ',' << rational->modular_rank;
      out << '\n';
      break;
    case Format::kText:
      fmt::print(out, "sigma_{}(S_{}): dimension {} (expected {}, rank {}/{}), {}\n", r.k, r.h, r.dimension,
                 r.expected, r.affine_rank, r.k * (chart_dimension(r.h) + 1), to_string(r.status));
      fmt::print(out, "  p={} N={} prime={} seed={} trials={} defect_lower_bound={}\n", chart_dimension(r.h),
                 ambient_dimension(r.h), r.prime, r.seed, r.trials, r.defect_lower_bound);
      if (r.certificate) fmt::print(out, "  certificate: {}\n", *r.certificate);
      if (rational) {
        fmt::print(out, "  rational cross-check: rank over Q {} vs over F_P {} ({})\n", rational->rational_rank,
                   rational->modular_rank, rational->rational_rank == rational->modular_rank ? "agree" : "DIFFER");
      }
      break;
  }
  if (rational && rational->rational_rank != rational->modular_rank) return kExitFailed;
  return kExitOk;
}

int run_table(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (!c.k) {
    err << "table requires --k\n";
    return kExitUsage;
  }
  TableRequest req;
  req.k = *c.k;
  req.seed = c.seed;
  req.trials = c.trials;
  req.threads = c.threads;
  const auto range = default_h_range(*c.k);
  if (c.h_min) {
    req.h_min = *c.h_min;
  } else if (range) {
    req.h_min = range->first;
  } else {
    err << "no default h range for k = " << *c.k << "; pass --h-min and --h-max\n";
    return kExitUsage;
  }
  if (c.h_max) {
    req.h_max = *c.h_max;
  } else if (range) {
    req.h_max = range->second;
  } else {
    err << "no default h range for k = " << *c.k << "; pass --h-min and --h-max\n";
    return kExitUsage;
  }
  if (req.h_min > req.h_max) {
    err << "--h-min exceeds --h-max\n";
    return kExitUsage;
  }

  const std::uint64_t seed = c.seed;
  const auto rows = reproduce_tables(req, [seed](SecantReport& r) { attach_known_certificate(r, seed); });

  switch (c.format) {
    case Format::kJson:
      for (const auto& r : rows) out << report_json(r).dump() << '\n';
      break;
    case Format::kCsv:
      out << kCsvHeader << '\n';
      for (const auto& r : rows) out << csv_row(r) << '\n';
      break;
    case Format::kText:
      fmt::print(out, "k={}\n", req.k);
      fmt::print(out, "{:>3} {:>4} {:>8} {:>8} {:>9}  {}\n", "h", "p", "N", "expected", "dimension", "defective");
      for (const auto& r : rows) {
        fmt::print(out, "{:>3} {:>4} {:>8} {:>8} {:>9}  {}\n", r.h, chart_dimension(r.h), ambient_dimension(r.h),
                   r.expected, r.dimension, defective_label(r));
      }
      break;
  }
  return kExitOk;
}

int run_certify(const RunConfig& c, std::ostream& out) {
  std::vector<CertificateVerdict> verdicts;
  switch (c.certify_target) {
    case CertifyTarget::kRnc:
      verdicts.push_back(rnc_certificate(c.h.value_or(8), c.k.value_or(3)));
      break;
    case CertifyTarget::kS7:
      verdicts.push_back(s7_certificate(c.seed));
      break;
    case CertifyTarget::kBase12:
      verdicts.push_back(base12_certificate());
      break;
    case CertifyTarget::kOrbit:
      if (c.h) {
        verdicts.push_back(orbit_certificate(*c.h));
      } else {
        for (std::size_t h : {2, 4, 6, 8}) verdicts.push_back(orbit_certificate(h));
      }
      break;
    case CertifyTarget::kStability:
      if (c.s) {
        verdicts.push_back(stability_certificate(*c.s));
      } else {
        for (std::size_t s : {12, 13, 14}) verdicts.push_back(stability_certificate(s));
      }
      break;
  }
  if (c.format == Format::kCsv) out << "certificate,check,observed,required,result\n";
  bool ok = true;
  for (const auto& v : verdicts) {
    print_verdict(v, c.format, out);
    ok = ok && v.passed();
  }
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    ModulusScope scope(config.prime);
    switch (config.command) {
      case Command::kDim: return run_dim(config, out, err);
      case Command::kTable: return run_table(config, out, err);
      case Command::kCertify: return run_certify(config, out);
      case Command::kSelftest: return run_selftest(out) ? kExitOk : kExitFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimensions and defects of secant varieties of spinor varieties"};
  app.require_subcommand(1);
  // --h names a size, so help is long-form only.
  app.set_help_flag("--help", "print help");

  RunConfig config;
  if (const char* env = std::getenv("SPINOR_SECANT_THREADS")) {
    try {
      config.threads = static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      err << "SPINOR_SECANT_THREADS must be a non-negative integer\n";
      return kExitUsage;
    }
  }

  const std::map<std::string, Format> formats{{"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  const std::map<std::string, CertifyTarget> targets{{"rnc", CertifyTarget::kRnc},
                                                     {"s7", CertifyTarget::kS7},
                                                     {"base12", CertifyTarget::kBase12},
                                                     {"orbit", CertifyTarget::kOrbit},
                                                     {"stability", CertifyTarget::kStability}};

  std::size_t h = 0, k = 0, h_min = 0, h_max = 0, s = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "master seed for random points");
    sub->add_option("--trials", config.trials, "independent trials; the best rank is kept")
        ->check(CLI::PositiveNumber);
    sub->add_option("--prime", config.prime, "prime modulus in (2^40, 2^63)");
    sub->add_option("--format", config.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  CLI::App* dim = app.add_subcommand("dim", "estimate dim sigma_k(S_h) at random points");
  dim->set_help_flag("--help", "print help");
  CLI::Option* dim_h = dim->add_option("--h", h, "spinor variety S_h")->required();
  CLI::Option* dim_k = dim->add_option("--k", k, "number of secant points")->required()->check(CLI::PositiveNumber);
  dim->add_flag("--rational", config.rational, "cross-check the rank over Q at integer points");
  dim->add_flag("--certify", config.attach_certificates, "attach a deterministic certificate when one applies");
  add_common(dim);

  CLI::App* table = app.add_subcommand("table", "reproduce a table of secant dimensions");
  table->set_help_flag("--help", "print help");
  CLI::Option* table_k = table->add_option("--k", k, "number of secant points")->required()->check(CLI::PositiveNumber);
  CLI::Option* opt_hmin = table->add_option("--h-min", h_min, "first h (default depends on k)");
  CLI::Option* opt_hmax = table->add_option("--h-max", h_max, "last h (default depends on k)");
  add_common(table);

  CLI::App* certify = app.add_subcommand("certify", "run a deterministic certificate");
  certify->set_help_flag("--help", "print help");
  certify->add_option("target", config.certify_target, "rnc | s7 | base12 | orbit | stability")
      ->required()
      ->transform(CLI::CheckedTransformer(targets, CLI::ignore_case));
  CLI::Option* cert_h = certify->add_option("--h", h, "h for rnc (default 8) or orbit (default 2,4,6,8)");
  CLI::Option* cert_k = certify->add_option("--k", k, "k for rnc (default 3)");
  CLI::Option* cert_s = certify->add_option("--s", s, "s for stability (default 12,13,14)");
  add_common(certify);

  CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suite");
  selftest->set_help_flag("--help", "print help");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    err << msg.str();
    return kExitUsage;
  }

  if (dim->parsed()) {
    config.command = Command::kDim;
    if (*dim_h) config.h = h;
    if (*dim_k) config.k = k;
  } else if (table->parsed()) {
    config.command = Command::kTable;
    if (*table_k) config.k = k;
    if (*opt_hmin) config.h_min = h_min;
    if (*opt_hmax) config.h_max = h_max;
  } else if (certify->parsed()) {
    config.command = Command::kCertify;
    if (*cert_h) config.h = h;
    if (*cert_k) config.k = k;
    if (*cert_s) config.s = s;
  } else {
    config.command = Command::kSelftest;
  }

  if (!is_valid_modulus(config.prime)) {
    err << "--prime " << config.prime << " is not a prime in (2^40, 2^63)\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace spinor_secant::cli
