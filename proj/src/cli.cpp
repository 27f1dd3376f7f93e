#include "census/cli.hpp"

#include <chrono>
#include <ostream>

#include <CLI11.hpp>

#include "census/common.hpp"
#include "census/report.hpp"

namespace census::cli {

namespace {

struct Options {
  int k = 0;
  int limit_k = 8;
  bool list_classes = false;
  std::string format = "json";
  std::string cache_path;
  unsigned jobs = 1;
  std::string octa_kind;
};

void emit(const CensusReport& report, const Options& opt, std::ostream& out) {
  out << (opt.format == "csv" ? emit_csv(report) : emit_json(report));
}

int run_octa(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<ClassRecord> records;
  if (!opt.cache_path.empty()) {
    std::string note;
    if (auto cached = load_cache(opt.cache_path, note)) {
      records = std::move(*cached);
      err << note << '\n';
    } else {
      err << note << '\n';
      records = compute_class_records(opt.jobs);
      save_cache(opt.cache_path, records);
      err << "cache: wrote " << opt.cache_path << '\n';
    }
  } else {
    records = compute_class_records(opt.jobs);
  }

  CensusReport report;
  if (opt.octa_kind == "boundary")
    report = boundary_report(records);
  else if (opt.octa_kind == "capped")
    report = capped_report(records);
  else if (opt.octa_kind == "homology")
    report = homology_report(records);
  else
    report = classes_report(records);
  emit(report, opt, out);

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  err << "octa " << opt.octa_kind << ": " << records.size() << " classes in " << elapsed.count()
      << " ms\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"census of orientation-reversing gluings: polygon edges and octahedron faces",
               "census"};
  app.require_subcommand(1);

  auto* polygon = app.add_subcommand("polygon", "classify edge gluings of the 2k-gon");
  polygon->add_option("--k", opt.k, "half the number of polygon edges")
      ->required()
      ->check(CLI::PositiveNumber);
  polygon->add_option("--limit-k", opt.limit_k, "largest k accepted")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  polygon->add_flag("--list-classes", opt.list_classes, "list one row per gluing class");
  polygon->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  auto* octa = app.add_subcommand("octa", "classify face gluings of the octahedron");
  octa->require_subcommand(1);
  octa->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  octa->add_option("--cache", opt.cache_path, "class-record cache file");
  octa->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  octa->add_subcommand("boundary", "counts by boundary surface type")->fallthrough();
  octa->add_subcommand("capped", "counts by boundary type after capping spheres")->fallthrough();
  octa->add_subcommand("homology", "counts by capped boundary and first homology")->fallthrough();
  octa->add_subcommand("classes", "one row per gluing class")->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 1;
  }

  try {
    if (polygon->parsed()) {
      if (opt.k > opt.limit_k) {
        err << "error: k = " << opt.k << " exceeds --limit-k = " << opt.limit_k << '\n';
        return 1;
      }
      emit(polygon_report(opt.k, opt.list_classes), opt, out);
      return 0;
    }
    for (auto* sub : octa->get_subcommands()) opt.octa_kind = sub->get_name();
    return run_octa(opt, out, err);
  } catch (const invariant_error& e) {
    err << "internal invariant violation: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace census::cli
