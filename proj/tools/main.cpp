#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tropitheta/reports.hpp"

using namespace tropitheta;
namespace fs = std::filesystem;

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string mode = "exact";
  long resolution = 20;
  long window = 6;
  std::string varpi = "12";
  long d = 2;
};

// Artifacts are staged in a sibling directory and renamed into place.
class Artifacts {
 public:
  void add(const std::string& name, const std::string& content) { files_.emplace_back(name, content); }

  void write(const std::string& dir, const json& report) {
    std::string text = report.dump(2) + "\n";
    if (dir.empty()) {
      std::cout << text;
      return;
    }
    fs::path target(dir);
    fs::path stage = target;
    stage += ".tmp";
    fs::remove_all(stage);
    fs::create_directories(stage);
    emit(stage / "report.json", text);
    for (const auto& [name, content] : files_) emit(stage / name, content);
    if (fs::exists(target)) {
      for (const auto& entry : fs::directory_iterator(stage)) fs::rename(entry.path(), target / entry.path().filename());
      fs::remove_all(stage);
    } else {
      if (target.has_parent_path()) fs::create_directories(target.parent_path());
      fs::rename(stage, target);
    }
  }

 private:
  static void emit(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    require(out.good(), ErrorKind::PreconditionViolated, "cannot write " + path.string());
  }
  std::vector<std::pair<std::string, std::string>> files_;
};

json read_input(const Options& opt) {
  require(!opt.input.empty(), ErrorKind::Schema, "--input is required");
  std::ifstream in(opt.input);
  require(in.good(), ErrorKind::Schema, "cannot read " + opt.input);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

ReportOptions report_options(const Options& opt) {
  return {opt.mode, opt.resolution, opt.window};
}

int emit(const Options& opt, const Report& r) {
  Artifacts art;
  for (const auto& [name, content] : r.files) art.add(name, content);
  art.write(opt.output, r.body);
  return r.status;
}

int cmd_type(const Options& opt) { return emit(opt, type_report(read_input(opt))); }
int cmd_theta(const Options& opt) { return emit(opt, theta_report(read_input(opt))); }
int cmd_embed(const Options& opt) { return emit(opt, embed_report(read_input(opt))); }
int cmd_certify(const Options& opt) { return emit(opt, certify_report(read_input(opt), report_options(opt))); }
int cmd_voronoi(const Options& opt) { return emit(opt, voronoi_report(read_input(opt))); }
int cmd_lift(const Options& opt) { return emit(opt, lift_report(read_input(opt), report_options(opt))); }

int cmd_example45(const Options& opt) {
  return emit(opt, example_report(opt.d, parse_rational(opt.varpi), report_options(opt)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tropical theta functions, faithful embeddings and nonarchimedean lifts"};
  app.require_subcommand(1);
  Options opt;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "JSON payload");
    sub->add_option("--output", opt.output, "output directory (stdout when omitted)");
    sub->add_option("--mode", opt.mode, "exact|sampled");
    sub->add_option("--resolution", opt.resolution, "grid resolution per axis");
    sub->add_option("--window", opt.window, "Fourier window radius");
    sub->add_option("--varpi", opt.varpi, "period P/Q");
    sub->add_option("--d", opt.d, "degree of the polarization");
  };
  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands = {
      {app.add_subcommand("type", "polarization type and representatives"), cmd_type},
      {app.add_subcommand("theta", "evaluate theta functions"), cmd_theta},
      {app.add_subcommand("embed", "linearity cells, image complex and figures"), cmd_embed},
      {app.add_subcommand("certify", "faithfulness report"), cmd_certify},
      {app.add_subcommand("voronoi", "Voronoi cell, decomposition and certificates"), cmd_voronoi},
      {app.add_subcommand("lift", "Fourier lifts of theta functions"), cmd_lift},
      {app.add_subcommand("example45", "elliptic curve examples with period varpi"), cmd_example45},
  };
  for (auto& [sub, fn] : commands) common(sub);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  try {
    for (auto& [sub, fn] : commands)
      if (sub->parsed()) return fn(opt);
  } catch (const Error& e) {
    std::cerr << error_to_json(e).dump(2) << "\n";
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << json{{"error", "Schema"}, {"message", e.what()}}.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InternalInvariantViolated"}, {"message", e.what()}}.dump(2) << "\n";
    return 3;
  }
  return 1;
}
