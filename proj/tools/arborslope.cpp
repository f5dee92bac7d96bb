// arborslope: candidate boundary slopes of arborescent knots.
//
// Exit codes: 0 ok, 1 verification failure or internal error, 2 usage or
// parse error, 3 empty result, 4 I/O error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "arborslope/parser.hpp"
#include "arborslope/plot.hpp"
#include "arborslope/report_json.hpp"
#include "arborslope/solver.hpp"
#include "arborslope/verify.hpp"

namespace {

using namespace arborslope;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kEmpty = 3, kIo = 4 };

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("arborslope");
  logger->set_pattern("%l: %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("LOG_LEVEL")) {
    const std::string v = env;
    if (v == "error") spdlog::set_level(spdlog::level::err);
    else if (v == "warn") spdlog::set_level(spdlog::level::warn);
    else if (v == "info") spdlog::set_level(spdlog::level::info);
    else if (v == "debug") spdlog::set_level(spdlog::level::debug);
    else spdlog::warn("ignoring LOG_LEVEL={}, expected error, warn, info or debug", v);
  }
}

struct BoundFlags {
  std::optional<std::int64_t> c_bound;
  std::optional<std::int64_t> scale_bound;

  void attach(CLI::App* cmd) {
    cmd->add_option("--c-bound", c_bound, "bound on |m| of integer endpoints and constant weights")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--scale-bound", scale_bound, "largest rescaling factor when gluing")->check(CLI::PositiveNumber);
  }

  SolveBounds resolve(const TangleExpr& e) const {
    SolveBounds b = default_bounds(e);
    if (c_bound) b.c_bound = *c_bound;
    if (scale_bound) b.scale_bound = *scale_bound;
    return b;
  }
};

std::string table(const SlopeReport& r) {
  auto opt = [](const std::optional<Fraction>& f) { return f ? f->str() : std::string("null"); };
  std::ostringstream os;
  os << "expr       " << render(r.expr) << '\n'
     << "solver     " << r.solver << '\n'
     << "bounds     c_bound=" << r.bounds.c_bound << " scale_bound=" << r.bounds.scale_bound << '\n'
     << "crossings  " << r.crossings << " (" << to_string(r.crossing_source) << ")\n"
     << "diameter   " << opt(r.diameter) << '\n'
     << "ratio      " << opt(r.ratio) << "\n\n";
  std::size_t w = 5;
  for (Fraction s : r.slopes) w = std::max(w, s.str().size());
  os << "slope" << std::string(w - 5 + 2, ' ') << "systems  note\n";
  for (Fraction s : r.slopes) {
    std::size_t count = 0;
    bool own = false;
    for (const auto& sys : r.systems) {
      if (sys.slope != s) continue;
      ++count;
      own = own || !sys.via_achirality;
    }
    std::string note;
    if (std::binary_search(r.certified.begin(), r.certified.end(), s)) note = "certified";
    if (!own) note += note.empty() ? "via achirality" : ", via achirality";
    const std::string c = std::to_string(count);
    os << s.str() << std::string(w - s.str().size() + 2, ' ') << c << std::string(9 - std::min<std::size_t>(c.size(), 8), ' ')
       << note << '\n';
  }
  return os.str();
}

std::string trace_table(const std::vector<TraceCheck>& trace) {
  std::ostringstream os;
  std::size_t w = 4, x = 8;
  for (const auto& c : trace) {
    w = std::max(w, c.name.size());
    x = std::max(x, c.expected.size());
  }
  for (const auto& c : trace)
    os << c.name << std::string(w - c.name.size() + 2, ' ') << c.expected << std::string(x - c.expected.size() + 2, ' ')
       << c.actual << (c.ok ? "  ok" : "  MISMATCH") << '\n';
  return os.str();
}

int emit(const SlopeReport& r, const std::string& format, const std::vector<TraceCheck>& trace = {}) {
  for (const auto& d : r.diagnostics) spdlog::info("{}", d);
  if (format == "table") {
    if (!trace.empty()) std::cout << trace_table(trace) << '\n';
    std::cout << table(r);
  } else {
    ReportDocument doc = to_document(r);
    doc.trace = to_document(trace);
    std::cout << dump(doc);
  }
  if (r.slopes.empty()) {
    for (const auto& d : r.diagnostics) spdlog::warn("{}", d);
    spdlog::error("no candidate slopes for {}", render(r.expr));
    return kEmpty;
  }
  return kOk;
}

int write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    spdlog::error("cannot open {} for writing", path);
    return kIo;
  }
  out << text;
  out.flush();
  if (!out) {
    spdlog::error("failed writing {}", path);
    return kIo;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Candidate boundary slopes of arborescent knots from edgepath systems"};
  app.require_subcommand(1);

  std::string expr_text, format = "json", out_path;
  std::int64_t n = 0, n_max = 0;
  BoundFlags slopes_bounds, kn_bounds, verify_bounds, plot_bounds;

  auto* slopes = app.add_subcommand("slopes", "candidate slopes of N(expr)");
  slopes->add_option("expr", expr_text, "tangle expression, e.g. \"(-1/2 + 1/3) o (-1/2 + 1/3)\"")->required();
  slopes->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
  slopes_bounds.attach(slopes);

  auto* kn_cmd = app.add_subcommand("kn", "the knot K_n with its distinguished system");
  kn_cmd->add_option("--n", n, "family index, n >= 2")->required();
  kn_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
  kn_bounds.attach(kn_cmd);

  auto* verify = app.add_subcommand("verify", "check K_2 .. K_nmax against their closed forms");
  verify->add_option("--n-max", n_max, "largest family index")->required();
  verify_bounds.attach(verify);

  auto* plot = app.add_subcommand("plot", "draw the diagram with a report's edgepaths");
  plot->add_option("expr", expr_text, "tangle expression");
  auto* plot_n = plot->add_option("--n", n, "plot K_n's distinguished system and its mirror");
  plot->add_option("--out", out_path, "output file (default: stdout)");
  std::string plot_format = "svg";
  plot->add_option("--format", plot_format)->check(CLI::IsMember({"svg", "tsv"}));
  plot_bounds.attach(plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (slopes->parsed()) {
      const TangleExpr e = parse(expr_text);
      return emit(solve(e, slopes_bounds.resolve(e)), format);
    }
    if (kn_cmd->parsed()) {
      const TangleExpr e = kn(n);
      SlopeReport r = solve(e, kn_bounds.resolve(e));
      return emit(r, format, kn_trace(n));
    }
    if (verify->parsed()) {
      const VerifyOutcome v = verify_family(n_max, verify_bounds.c_bound, verify_bounds.scale_bound);
      std::cout << render_verify(v);
      if (!v.pass()) {
        spdlog::error("verification failed: {}", v.first_failure());
        return kVerifyFailed;
      }
      return kOk;
    }
    if (plot->parsed()) {
      if (expr_text.empty() == (plot_n->count() == 0)) {
        spdlog::error("plot needs exactly one of an expression or --n");
        return kUsage;
      }
      std::vector<CandidateSystem> systems;
      std::string title;
      if (plot_n->count() > 0) {
        const CandidateSystem s = kn_system(n);
        systems = {s, mirror_system(s)};
        title = "K_" + std::to_string(n) + ": " + render(s.expr);
      } else {
        const TangleExpr e = parse(expr_text);
        SlopeReport r = solve(e, plot_bounds.resolve(e));
        for (const auto& d : r.diagnostics) spdlog::info("{}", d);
        if (!r.slopes.empty()) systems = std::move(r.systems);
        title = render(e);
      }
      if (systems.empty()) {
        spdlog::error("no candidate slopes to plot; nothing written");
        return kEmpty;
      }
      return write_output(out_path, plot_format == "tsv" ? render_tsv(systems) : render_svg(systems, title));
    }
  } catch (const ParseError& e) {
    spdlog::error("parse error: {}", e.what());
    return kUsage;
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    spdlog::error("internal error: {}", e.what());
    return kVerifyFailed;
  }
  return kUsage;
}
