#include "ruledcone/cli.hpp"

#include "ruledcone/errors.hpp"
#include "ruledcone/figure.hpp"
#include "ruledcone/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

namespace ruledcone {

namespace {

struct Flags {
  std::string u, from, to, z, t, label = "open", mu_max = "6", step = "1/8", mu_min = "0",
                                     format = "text", out_file;
  int g = 1;
  int k_max = -1;
  int x = -1;
  long cod_max = -1;
  int wide = 0;
  int p = 1, q = 0;
  int q_bound = -1, r_bound = 1;
  int scale = 100;
  unsigned threads = 0;
  bool json = false;
  bool report_sections = false;
};

OutputFormat parse_format(const Flags& f) {
  if (f.json) return OutputFormat::Json;
  if (f.format == "text") return OutputFormat::Text;
  if (f.format == "json") return OutputFormat::Json;
  if (f.format == "csv") return OutputFormat::Csv;
  if (f.format == "svg") return OutputFormat::Svg;
  throw InputError("unknown format '" + f.format + "'");
}

RunConfig make_config(const Flags& f) {
  RunConfig c;
  c.g = f.g;
  c.n = 1;
  c.mu_max = parse_rational(f.mu_max);
  c.cod_max = f.cod_max;
  c.grid_step = parse_rational(f.step);
  c.format = parse_format(f);
  if (c.g < 0) throw InputError("g must be non-negative");
  return c;
}

std::optional<std::int64_t> cod_bound(const RunConfig& c) {
  if (c.cod_max < 0) return std::nullopt;
  return c.cod_max;
}

std::optional<int> x_option(const Flags& f) {
  if (f.x < 0) return std::nullopt;
  return f.x;
}

StratumLabel parse_label(const std::string& text, const SurfaceParams& params) {
  if (text == "open") return open_label();
  return single_label(parse_class(text, 1), params);
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_chamber(const Flags& f, const RunConfig& cfg, std::ostream& out) {
  auto u = parse_normalized(f.u);
  auto validity = check_validity(u);
  if (!validity.ok()) {
    std::string msg = "invalid normalized class " + to_string(u) + ", violates:";
    for (const auto& v : validity.violations) msg += " [" + v + "]";
    throw InputError(msg);
  }
  auto id = chamber_of(u);
  int k_max = f.k_max >= 0 ? f.k_max : static_cast<int>(ceil(u.mu).get_si()) + 1;
  auto walls = active_walls(u, k_max);
  if (cfg.format == OutputFormat::Json) {
    Json ineq = Json::array(), w = Json::array();
    for (const auto& i : defining_inequalities(id)) ineq.push_back(i.to_string());
    for (const auto& wall : walls) w.push_back(to_string(wall.cls));
    print_json(out, Json{{"u", to_json(u)},
                         {"chamber", id.index},
                         {"inequalities", ineq},
                         {"active_walls", w}});
    return kExitOk;
  }
  out << "chamber " << id.index << '\n';
  for (const auto& i : defining_inequalities(id)) out << "  " << i.to_string() << '\n';
  out << "  0 < u.[E] < 1\n";
  for (const auto& wall : walls) {
    out << "active wall " << to_string(wall.cls) << (wall.boundary ? " (boundary)" : "") << '\n';
  }
  return kExitOk;
}

int cmd_walls(const Flags& f, const RunConfig& cfg, std::ostream& out) {
  auto u = parse_normalized(f.u);
  int k_max = f.k_max >= 0 ? f.k_max : static_cast<int>(ceil(u.mu).get_si()) + 1;
  auto walls = active_walls(u, k_max);
  if (cfg.format == OutputFormat::Json) {
    Json w = Json::array();
    for (const auto& wall : walls) {
      w.push_back(Json{{"class", to_string(wall.cls)}, {"boundary", wall.boundary}});
    }
    print_json(out, Json{{"u", to_json(u)}, {"walls", w}});
    return kExitOk;
  }
  if (walls.empty()) out << "no active walls\n";
  for (const auto& wall : walls) {
    out << to_string(wall.cls) << (wall.boundary ? " (boundary)" : "") << '\n';
  }
  return kExitOk;
}

int cmd_strata(const Flags& f, const RunConfig& cfg, std::ostream& out) {
  auto u = parse_normalized(f.u);
  SurfaceParams params{cfg.g, 1};
  auto id = chamber_of(u);
  auto labels = stratum_labels(u, params, cod_bound(cfg), f.wide);
  auto classes = f.wide > 0 ? wide_negative_classes(u, params, cod_bound(cfg), f.wide)
                            : negative_classes(u, params, cod_bound(cfg));
  if (cfg.format == OutputFormat::Json) {
    Json j = strata_json(id, labels);
    Json cl = Json::array();
    for (const auto& c : classes) {
      cl.push_back(Json{{"class", to_string(c)},
                        {"codim", codim(c, params)},
                        {"genus", *adjunction_genus(c, params)},
                        {"area", to_string(area(u, c))}});
    }
    j["classes"] = cl;
    print_json(out, j);
    return kExitOk;
  }
  out << "chamber " << id.index << '\n';
  for (const auto& l : labels) out << l.name() << "  codim " << l.codim << '\n';
  return kExitOk;
}

int cmd_inflate(const Flags& f, const RunConfig& cfg, std::ostream& out) {
  auto u = parse_normalized(f.u);
  InflationStep step{parse_class(f.z, u.n()), parse_rational(f.t)};
  auto range = t_range(u, step.z);
  auto raw = inflate(u, step);
  auto normalized = normalize(raw);
  if (cfg.format == OutputFormat::Json) {
    print_json(out, Json{{"start", to_json(u)},
                         {"step", to_json(step)},
                         {"t_upper", range.upper ? Json(to_string(*range.upper)) : Json("inf")},
                         {"raw", to_json(raw)},
                         {"normalized", to_json(normalized)}});
    return kExitOk;
  }
  out << "t range " << range.to_string() << '\n';
  out << "raw " << to_string(raw.b_area) << ", " << to_string(raw.f_area);
  for (const auto& e : raw.e_area) out << ", " << to_string(e);
  out << "\nnormalized " << to_string(normalized) << '\n';
  return kExitOk;
}

int cmd_plan(const Flags& f, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SurfaceParams params{cfg.g, 1};
  auto u1 = parse_normalized(f.from);
  auto u2 = parse_normalized(f.to);
  auto label = parse_label(f.label, params);
  PlannerOptions options;
  options.x = x_option(f);
  InflationPlan p;
  try {
    p = plan(u1, u2, label, params, options);
  } catch (const PlanError& e) {
    if (cfg.format == OutputFormat::Json) {
      print_json(out, Json{{"error", "no-plan"},
                           {"recipe", e.recipe()},
                           {"constraint", e.constraint()}});
    }
    err << "no plan: " << e.what() << '\n';
    return kExitCounterexample;
  }
  auto r = replay(p);
  if (!r.ok) throw std::logic_error("emitted plan fails replay: " + r.failure);
  if (cfg.format == OutputFormat::Json) {
    print_json(out, to_json(p));
    return kExitOk;
  }
  out << "recipe " << p.recipe << " (" << p.steps.size() << " steps)\n";
  for (const auto& s : p.steps) {
    out << "  inflate " << to_string(s.step.z) << " by t = " << to_string(s.step.t) << "  ["
        << to_string(s.assumption) << "]\n";
  }
  out << "end " << to_string(p.end) << '\n';
  return kExitOk;
}

int cmd_verify(const Flags& f, const RunConfig& cfg, std::ostream& out) {
  SurfaceParams params{cfg.g, 1};
  StabilityOptions opts;
  opts.mu_min = parse_rational(f.mu_min);
  opts.x = x_option(f);
  opts.threads = f.threads;
  auto report = verify_stability(params, cfg.mu_max, cfg.grid_step, opts);
  if (cfg.format == OutputFormat::Json) {
    print_json(out, to_json(report));
  } else {
    for (const auto& c : report.chambers) {
      out << "chamber " << c.chamber.index << ": ";
      if (c.skipped) {
        out << "skipped (below chamber " << 2 * cfg.g << ")\n";
        continue;
      }
      out << c.passed << "/" << c.checks << " passed";
      if (c.first_failure) {
        out << "; first counterexample " << to_string(c.first_failure->from) << " -> "
            << to_string(c.first_failure->to) << " [" << c.first_failure->label.name()
            << "]: " << c.first_failure->constraint;
      }
      out << '\n';
    }
    out << "policy-skipped points " << report.policy_skipped_points << ", cross-chamber pairs "
        << report.cross_chamber_pairs << '\n';
  }
  return report.all_passed() ? kExitOk : kExitCounterexample;
}

int cmd_gromov(const Flags& f, const RunConfig& cfg, std::ostream& out) {
  SurfaceParams params{cfg.g, 1};
  auto r = gromov_invariant(f.p, f.q, params);
  if (cfg.format == OutputFormat::Json) {
    print_json(out, Json{{"p", f.p},
                         {"q", f.q},
                         {"g", cfg.g},
                         {"k", to_string(r.k)},
                         {"gr", r.value.get_str()},
                         {"q_criterion", r.q_criterion}});
    return kExitOk;
  }
  out << "Gr(" << to_string(ClassVector::of(f.p, f.q, 0)) << ") = " << r.value.get_str()
      << "  (k = " << to_string(r.k) << (r.q_criterion ? ", q >= g-1" : "") << ")\n";
  return kExitOk;
}

int cmd_decompose(const Flags& f, const RunConfig& cfg, std::ostream& out) {
  SurfaceParams params{cfg.g, 1};
  DecompositionOptions opts;
  opts.q_bound = f.q_bound >= 0 ? f.q_bound : cfg.g + 2;
  opts.r_bound = f.r_bound;
  if (!f.u.empty()) opts.u = parse_normalized(f.u);
  auto ds = section_decompositions(params, opts);
  std::vector<std::string> non_bxf;
  for (const auto& d : ds) {
    if (!d.section_is_bxf) {
      auto s = to_string(d.section);
      if (std::find(non_bxf.begin(), non_bxf.end(), s) == non_bxf.end()) non_bxf.push_back(s);
    }
  }
  if (cfg.format == OutputFormat::Json) {
    Json list = Json::array();
    for (const auto& d : ds) list.push_back(to_json(d));
    Json j{{"g", cfg.g}, {"q_bound", opts.q_bound}, {"r_bound", opts.r_bound},
           {"count", ds.size()}, {"decompositions", list}};
    if (f.report_sections) j["non_bxf_sections"] = non_bxf;
    print_json(out, j);
    return kExitOk;
  }
  for (const auto& d : ds) {
    std::string line;
    for (const auto& p : d.parts) line += (line.empty() ? "" : " + ") + ("(" + to_string(p) + ")");
    out << line << '\n';
  }
  out << ds.size() << " decompositions\n";
  if (f.report_sections) {
    out << "section parts not of the form B+xF:";
    for (const auto& s : non_bxf) out << ' ' << s;
    out << '\n';
  }
  return kExitOk;
}

int cmd_figure(const Flags& f, const RunConfig& cfg, std::ostream& out) {
  std::optional<int> k_max;
  if (f.k_max >= 0) k_max = f.k_max;
  auto model = figure_data(cfg.mu_max, k_max);
  std::string text = cfg.format == OutputFormat::Csv ? to_csv(model) : to_svg(model, f.scale);
  if (!f.out_file.empty()) {
    std::ofstream file(f.out_file, std::ios::binary);
    if (!file) throw InputError("cannot write " + f.out_file);
    file << text;
  } else {
    out << text;
  }
  return kExitOk;
}

int cmd_report(const Flags& f, const RunConfig& cfg, std::ostream& out) {
  ReportConfig rc;
  rc.params = SurfaceParams{cfg.g, 1};
  rc.mu_max = cfg.mu_max;
  rc.step = cfg.grid_step;
  rc.mu_min = parse_rational(f.mu_min);
  rc.x = x_option(f);
  rc.threads = f.threads;
  bool failed = false;
  print_json(out, build_report(rc, &failed));
  return failed ? kExitCounterexample : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chamber structure, strata and inflation plans for one-point blow-ups of "
               "irrational ruled surfaces",
               "ruledcone"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--g", f.g, "genus of the base surface");
    sub->add_option("--format", f.format, "text, json, csv or svg");
    sub->add_flag("--json", f.json, "shorthand for --format json");
  };

  auto* chamber = app.add_subcommand("chamber", "chamber index, inequalities and active walls");
  chamber->add_option("--u", f.u, "normalized class mu,c")->required();
  chamber->add_option("--k-max", f.k_max, "largest k scanned for walls");
  add_common(chamber);

  auto* walls = app.add_subcommand("walls", "walls through a point");
  walls->add_option("--u", f.u, "normalized class mu,c")->required();
  walls->add_option("--k-max", f.k_max, "largest k scanned for walls");
  add_common(walls);

  auto* strata = app.add_subcommand("strata", "negative classes and stratum labels");
  strata->add_option("--u", f.u, "normalized class mu,c")->required();
  strata->add_option("--cod-max", f.cod_max, "codimension bound (default unbounded)");
  strata->add_option("--wide", f.wide, "brute-force search bound on |p|,|q|,|r|");
  add_common(strata);

  auto* inflate_cmd = app.add_subcommand("inflate", "one inflation step");
  inflate_cmd->add_option("--u", f.u, "normalized class mu,c")->required();
  inflate_cmd->add_option("--z", f.z, "class to inflate along")->required();
  inflate_cmd->add_option("--t", f.t, "parameter p/q")->required();
  add_common(inflate_cmd);

  auto* plan_cmd = app.add_subcommand("plan", "same-chamber inflation plan");
  plan_cmd->add_option("--from", f.from, "start mu,c")->required();
  plan_cmd->add_option("--to", f.to, "target mu,c")->required();
  plan_cmd->add_option("--label", f.label, "open or a class such as B-2F-E");
  plan_cmd->add_option("--x", f.x, "open-stratum section coefficient (default g)");
  add_common(plan_cmd);

  auto* verify = app.add_subcommand("verify-stability", "grid check of same-chamber transport");
  verify->add_option("--mu-max", f.mu_max, "largest mu on the grid");
  verify->add_option("--mu-min", f.mu_min, "grid starts strictly above this mu");
  verify->add_option("--step", f.step, "grid step p/q");
  verify->add_option("--x", f.x, "open-stratum section coefficient (default g)");
  verify->add_option("--threads", f.threads, "worker threads (default: all cores)");
  add_common(verify);

  auto* gromov = app.add_subcommand("gromov", "Gromov invariant of pB+qF");
  gromov->add_option("--p", f.p, "B coefficient");
  gromov->add_option("--q", f.q, "F coefficient");
  add_common(gromov);

  auto* decompose = app.add_subcommand("decompose", "stable decompositions of B+gF");
  decompose->add_option("--q-bound", f.q_bound, "largest F coefficient of a part (default g+2)");
  decompose->add_option("--r-bound", f.r_bound, "largest |E coefficient| of a part");
  decompose->add_option("--u", f.u, "area class used for the positivity filter");
  decompose->add_flag("--report-sections", f.report_sections,
                      "list section parts that are not of the form B+xF");
  add_common(decompose);

  auto* figure = app.add_subcommand("figure", "wall diagram as SVG or CSV");
  figure->add_option("--mu-max", f.mu_max, "right edge of the diagram");
  figure->add_option("--k-max", f.k_max, "largest wall index");
  figure->add_option("--scale", f.scale, "pixels per unit");
  figure->add_option("--out", f.out_file, "write to a file instead of stdout");
  add_common(figure);

  auto* report = app.add_subcommand("report", "consolidated JSON report");
  report->add_option("--mu-max", f.mu_max, "largest mu");
  report->add_option("--mu-min", f.mu_min, "stability grid starts strictly above this mu");
  report->add_option("--step", f.step, "stability grid step");
  report->add_option("--x", f.x, "open-stratum section coefficient (default g)");
  report->add_option("--threads", f.threads, "worker threads");
  add_common(report);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    auto cfg = make_config(f);
    if (figure->parsed() && cfg.format == OutputFormat::Text) cfg.format = OutputFormat::Svg;
    if (chamber->parsed()) return cmd_chamber(f, cfg, out);
    if (walls->parsed()) return cmd_walls(f, cfg, out);
    if (strata->parsed()) return cmd_strata(f, cfg, out);
    if (inflate_cmd->parsed()) return cmd_inflate(f, cfg, out);
    if (plan_cmd->parsed()) return cmd_plan(f, cfg, out, err);
    if (verify->parsed()) return cmd_verify(f, cfg, out);
    if (gromov->parsed()) return cmd_gromov(f, cfg, out);
    if (decompose->parsed()) return cmd_decompose(f, cfg, out);
    if (figure->parsed()) return cmd_figure(f, cfg, out);
    if (report->parsed()) return cmd_report(f, cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace ruledcone
