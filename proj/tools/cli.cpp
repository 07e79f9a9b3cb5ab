#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "gbx/errors.hpp"
#include "gbx/groebner.hpp"
#include "gbx/planarity.hpp"
#include "gbx/scene.hpp"
#include "gbx/textio.hpp"

namespace gbx::cli {

namespace {

enum class TraceFormat { Text, Json, Off };

struct RunConfig {
  std::string input;
  TraceFormat trace = TraceFormat::Text;
  Mode mode = Mode::Faithful;
  std::string report = "text";
  std::string out_dir;
  std::string bounds = "-5:5";
  int resolution = 64;
};

GeneratorSet load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open input file");
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw IoError(path, "read failed");
  return parse_generators(text.str());
}

void print_trace(const Trace& trace, TraceFormat format, std::ostream& out) {
  if (format == TraceFormat::Off) return;
  out << "== trace ==\n";
  out << (format == TraceFormat::Json ? format_trace_json(trace) : format_trace_text(trace));
}

void print_input(const GeneratorSet& input, std::ostream& out) {
  out << "== start ==\n";
  for (std::size_t i = 0; i < input.size(); ++i)
    out << input.labels[i] << " = " << print_polynomial(input.generators[i]) << "\n";
}

void print_basis(const char* title, const std::vector<Polynomial>& basis, std::ostream& out) {
  out << "== " << title << " ==\n";
  for (const auto& p : basis) out << print_polynomial(p) << "\n";
}

geom::Region parse_region(const std::string& bounds, int resolution) {
  auto colon = bounds.find(':');
  if (colon == std::string::npos) throw UsageError("--bounds expects LO:HI");
  double lo = 0, hi = 0;
  try {
    std::size_t used = 0;
    lo = std::stod(bounds.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("trailing");
    std::string rest = bounds.substr(colon + 1);
    hi = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing");
  } catch (const std::logic_error&) {
    throw UsageError("--bounds expects LO:HI with numeric bounds, got '" + bounds + "'");
  }
  return geom::Region::cube(lo, hi, resolution);
}

int cmd_compute(const RunConfig& config, std::ostream& out) {
  GeneratorSet input = load(config.input);
  GbResult result = groebner_full(input, {config.mode});
  print_input(input, out);
  print_trace(result.trace, config.trace, out);
  out << "== gb ==\n";
  for (std::size_t i = 0; i < result.gb.size(); ++i)
    out << "g" << i + 1 << " = " << print_polynomial(result.gb[i]) << "\n";
  print_basis("mgb", result.mgb, out);
  print_basis("rgb", result.rgb, out);
  return kOk;
}

int cmd_planarity(const RunConfig& config, std::ostream& out) {
  GeneratorSet input = load(config.input);
  GbResult result = groebner_full(input, {config.mode});
  PlanarityReport report = analyze(result);
  if (config.trace != TraceFormat::Off) {
    print_input(input, out);
    print_trace(result.trace, config.trace, out);
    print_basis("rgb", result.rgb, out);
    out << "== report ==\n";
  }
  out << (config.report == "json" ? format_report_json(report) + "\n" : format_report_text(report));
  if (!report.consistent) return kInconsistent;
  return report.planar_detected ? kOk : kNotPlanar;
}

int cmd_export(const RunConfig& config, std::ostream& out, std::ostream& err) {
  geom::Region region = parse_region(config.bounds, config.resolution);
  GeneratorSet input = load(config.input);
  GbResult result = groebner_full(input, {config.mode});
  PlanarityReport report = analyze(result);

  auto surfaces = [&](const std::vector<Polynomial>& polys) {
    std::vector<geom::TriangleMesh> meshes;
    for (const auto& p : polys) meshes.push_back(geom::mesh_implicit_surface(p, region));
    return meshes;
  };
  std::vector<geom::ScenePhase> phases = {
      {"start", "start.obj", surfaces(input.generators)},
      {"gb", "gb.obj", surfaces(result.gb)},
      {"rgb", "rgb.obj", surfaces(result.rgb)},
  };
  if (!report.consistent) {
    err << "warning: system is inconsistent (RGB = {1}); no intersection plane exported\n";
  } else if (report.witness) {
    auto plane = geom::mesh_plane(report.witness->form, region);
    if (plane.empty())
      err << "warning: plane " << plane.label << " does not meet the export region\n";
    phases.back().meshes.push_back(std::move(plane));
  }
  for (const auto& path : geom::write_scene(config.out_dir, phases, region)) out << path.string() << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases step by step, planarity of surface intersections, mesh export", "gbx"};
  app.require_subcommand(1);
  RunConfig config;

  const std::map<std::string, TraceFormat> trace_formats{
      {"text", TraceFormat::Text}, {"json", TraceFormat::Json}, {"off", TraceFormat::Off}};
  const std::map<std::string, Mode> modes{{"faithful", Mode::Faithful}, {"optimized", Mode::Optimized}};

  auto* compute = app.add_subcommand("compute", "Print the start basis, the step trace, GB, MGB and RGB");
  compute->add_option("FILE", config.input, "Generator file, one polynomial per line")->required();
  compute->add_option("--trace", config.trace, "Trace format")
      ->transform(CLI::CheckedTransformer(trace_formats, CLI::ignore_case))
      ->option_text("text|json|off");
  compute->add_option("--mode", config.mode, "Buchberger pair strategy")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
      ->option_text("faithful|optimized");

  auto* planarity = app.add_subcommand("planarity", "Decide consistency and detect a planar intersection");
  planarity->add_option("FILE", config.input, "Generator file")->required();
  planarity->add_option("--trace", config.trace, "Also print input, trace and RGB")
      ->transform(CLI::CheckedTransformer(trace_formats, CLI::ignore_case))
      ->option_text("text|json|off");
  planarity->add_option("--mode", config.mode, "Buchberger pair strategy")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
      ->option_text("faithful|optimized");
  planarity->add_option("--report", config.report, "Report format")->check(CLI::IsMember({"text", "json"}))
      ->option_text("text|json");

  auto* exporter = app.add_subcommand("export", "Write start.obj, gb.obj, rgb.obj and scene.manifest");
  exporter->add_option("FILE", config.input, "Generator file")->required();
  exporter->add_option("--out", config.out_dir, "Output directory")->required();
  exporter->add_option("--bounds", config.bounds, "Cubic region LO:HI (default -5:5)")->option_text("LO:HI");
  exporter->add_option("--res", config.resolution, "Cells per axis, 2..4096 (default 64)")
      ->check(CLI::Range(2, 4096))
      ->option_text("N");
  exporter->add_option("--mode", config.mode, "Buchberger pair strategy")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
      ->option_text("faithful|optimized");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  if (!argv_rev.empty()) argv_rev.pop_back();  // program name
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, ebuf;
    int code = app.exit(e, o, ebuf);
    out << o.str();
    err << ebuf.str();
    return code == 0 ? kOk : kParseError;
  }

  if (*planarity && planarity->count("--trace") == 0) config.trace = TraceFormat::Off;

  try {
    if (*compute) return cmd_compute(config, out);
    if (*planarity) return cmd_planarity(config, out);
    return cmd_export(config, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
}

}  // namespace gbx::cli
