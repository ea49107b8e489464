// Command-line front end: dataset generation, hull computation, verification
// against the reference construction, stage benchmarking and SVG rendering.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polarhull/polarhull.hpp"

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

const std::vector<std::string> kAlgoNames = {"graham",  "jarvis",      "horizon",
                                             "contour", "dnc_ordered", "dnc_unordered"};

struct AlgoOptions {
  double bin_interval_deg = 2.0;
  double initial_interval_deg = 1.0;
  std::size_t max_halvings = polarhull::kDefaultMaxHalvings;
  std::size_t leaf_size = polarhull::kDefaultLeafSize;
  std::string final_algorithm = "graham";
};

polarhull::PipelineResult run_algorithm(const std::string& algo,
                                        const std::vector<polarhull::Point>& points,
                                        const AlgoOptions& opt) {
  using namespace polarhull;
  if (algo == "horizon") {
    const FinalAlgorithm fin =
        opt.final_algorithm == "jarvis" ? FinalAlgorithm::Jarvis : FinalAlgorithm::Graham;
    return hull_via_horizon_reduction(points, opt.bin_interval_deg / kDegPerRad, fin);
  }
  if (algo == "contour") {
    return hull_via_contour_scanning(points, opt.initial_interval_deg / kDegPerRad,
                                     opt.max_halvings);
  }
  if (algo == "dnc_ordered") {
    return divide_and_conquer(points, SplitScheme::OrderedPolar, opt.leaf_size);
  }
  if (algo == "dnc_unordered") {
    return divide_and_conquer(points, SplitScheme::Unordered, opt.leaf_size);
  }
  // Plain constructions: no reduction, every point is a candidate.
  PipelineResult result;
  result.report.input_size = points.size();
  if (points.empty()) throw EmptyInput();
  result.reduced.resize(points.size());
  std::iota(result.reduced.begin(), result.reduced.end(), std::size_t{0});
  result.report.reduced_size = points.size();
  polarhull::detail::StageClock clock;
  if (algo == "graham") {
    result.hull = graham_scan(points);
  } else if (algo == "jarvis") {
    result.hull = jarvis_march(points);
  } else {
    throw ConfigError("unknown algorithm: " + algo);
  }
  result.report.seconds.construct = clock.lap();
  polarhull::detail::finalize_report(result, result.report.seconds.construct);
  return result;
}

void write_hull_file(const std::string& path, const polarhull::Hull& hull,
                     const std::vector<polarhull::Point>& points) {
  std::ofstream out(path);
  if (!out) throw polarhull::IoError("cannot open for writing: " + path);
  out << "# index x y\n";
  for (std::size_t idx : hull.vertices) {
    out << idx << ' ' << polarhull::detail::format_double(points[idx].x) << ' '
        << polarhull::detail::format_double(points[idx].y) << '\n';
  }
  out.flush();
  if (!out) throw polarhull::IoError("write failed: " + path);
}

void print_report(const std::string& algo, const polarhull::PipelineResult& result) {
  const polarhull::PipelineReport& r = result.report;
  std::ostringstream out;
  out << "algo=" << algo << '\n';
  out << "input_size=" << r.input_size << '\n';
  out << "reduced_size=" << r.reduced_size << '\n';
  out << "hull_size=" << r.hull_size << '\n';
  out << "reduction_percent=" << r.reduction_percent << '\n';
  out << "iterations=" << r.iterations << '\n';
  out << "final_interval_deg=" << r.final_interval * kDegPerRad << '\n';
  out << "horizon_candidates=" << r.horizon_candidates << '\n';
  out << "combine_work=" << r.combine_work << '\n';
  out << "visits_binning=" << r.work.binning << '\n';
  out << "visits_boundary=" << r.work.boundary << '\n';
  out << "visits_fencing=" << r.work.fencing << '\n';
  out << "visits_horizon=" << r.work.horizon << '\n';
  out << "visits_total=" << r.work.total() << '\n';
  out << "seconds_center=" << r.seconds.center << '\n';
  out << "seconds_polar=" << r.seconds.polar << '\n';
  out << "seconds_binning=" << r.seconds.binning << '\n';
  out << "seconds_boundary=" << r.seconds.boundary << '\n';
  out << "seconds_fencing=" << r.seconds.fencing << '\n';
  out << "seconds_horizon=" << r.seconds.horizon << '\n';
  out << "seconds_construct=" << r.seconds.construct << '\n';
  out << "seconds_solve=" << r.seconds.solve << '\n';
  out << "seconds_combine=" << r.seconds.combine << '\n';
  out << "seconds_total=" << r.seconds.total << '\n';
  std::cout << out.str();
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<polarhull::Point> load_input(const std::string& in_path, const std::string& format) {
  const polarhull::FileFormat fmt = format.empty() ? polarhull::format_from_path(in_path)
                                                   : polarhull::format_from_name(format);
  return polarhull::load_points(in_path, fmt);
}

int run(int argc, char** argv) {
  CLI::App app{"planar convex hulls via polar reduction pipelines"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a seeded dataset");
  std::string gen_family = "disk_uniform";
  std::size_t gen_count = 1000;
  std::uint64_t gen_seed = 42;
  std::string gen_out;
  std::string gen_format;
  gen->add_option("--family", gen_family, "dataset family")
      ->check(CLI::IsMember(std::vector<std::string>(polarhull::kDatasetFamilyNames.begin(),
                                                     polarhull::kDatasetFamilyNames.end())))
      ->capture_default_str();
  gen->add_option("--count", gen_count, "number of points")->capture_default_str();
  gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  gen->add_option("--out", gen_out, "output file")->required();
  gen->add_option("--format", gen_format, "xy or csv (default: from extension)");

  // ---- hull ----
  auto* hull = app.add_subcommand("hull", "compute a hull and print a report");
  std::string hull_in;
  std::string hull_format;
  std::string hull_algo = "horizon";
  std::string hull_out;
  AlgoOptions hull_opt;
  hull->add_option("--in", hull_in, "input dataset")->required();
  hull->add_option("--format", hull_format, "xy or csv (default: from extension)");
  hull->add_option("--algo", hull_algo, "hull algorithm")
      ->check(CLI::IsMember(kAlgoNames))
      ->capture_default_str();
  hull->add_option("--bin-interval-deg", hull_opt.bin_interval_deg, "horizon bin interval")
      ->capture_default_str();
  hull->add_option("--initial-interval-deg", hull_opt.initial_interval_deg,
                   "contour starting interval")
      ->capture_default_str();
  hull->add_option("--max-halvings", hull_opt.max_halvings, "contour halving budget")
      ->capture_default_str();
  hull->add_option("--leaf-size", hull_opt.leaf_size, "split size solved directly")
      ->capture_default_str();
  hull->add_option("--final", hull_opt.final_algorithm, "construction after horizon reduction")
      ->check(CLI::IsMember({"graham", "jarvis"}))
      ->capture_default_str();
  hull->add_option("--out", hull_out, "write hull vertices to this file");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "compare algorithms against the reference");
  std::string verify_in;
  std::string verify_format;
  std::vector<std::string> verify_algos = kAlgoNames;
  AlgoOptions verify_opt;
  bool inject_corruption = false;
  verify->add_option("--in", verify_in, "input dataset")->required();
  verify->add_option("--format", verify_format, "xy or csv (default: from extension)");
  verify->add_option("--algo", verify_algos, "algorithms to verify")
      ->check(CLI::IsMember(kAlgoNames));
  verify->add_option("--bin-interval-deg", verify_opt.bin_interval_deg, "horizon bin interval")
      ->capture_default_str();
  verify->add_option("--initial-interval-deg", verify_opt.initial_interval_deg,
                     "contour starting interval")
      ->capture_default_str();
  verify->add_flag("--inject-corruption", inject_corruption)->group("");

  // ---- bench ----
  auto* bench = app.add_subcommand("bench", "stage timings as TSV (median of repeats)");
  std::string bench_in;
  std::string bench_format;
  std::string bench_family = "disk_uniform";
  std::size_t bench_count = 100000;
  std::uint64_t bench_seed = 42;
  std::vector<std::string> bench_algos = kAlgoNames;
  std::size_t bench_repeats = 3;
  AlgoOptions bench_opt;
  bench->add_option("--in", bench_in, "input dataset (overrides --family)");
  bench->add_option("--format", bench_format, "xy or csv (default: from extension)");
  bench->add_option("--family", bench_family, "generated dataset family")
      ->check(CLI::IsMember(std::vector<std::string>(polarhull::kDatasetFamilyNames.begin(),
                                                     polarhull::kDatasetFamilyNames.end())))
      ->capture_default_str();
  bench->add_option("--count", bench_count, "generated dataset size")->capture_default_str();
  bench->add_option("--seed", bench_seed, "generator seed")->capture_default_str();
  bench->add_option("--algo", bench_algos, "algorithms to time")->check(CLI::IsMember(kAlgoNames));
  bench->add_option("--repeats", bench_repeats, "runs per algorithm")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--bin-interval-deg", bench_opt.bin_interval_deg, "horizon bin interval")
      ->capture_default_str();
  bench->add_option("--initial-interval-deg", bench_opt.initial_interval_deg,
                    "contour starting interval")
      ->capture_default_str();
  bench->add_option("--leaf-size", bench_opt.leaf_size, "split size solved directly")
      ->capture_default_str();

  // ---- render ----
  auto* render = app.add_subcommand("render", "draw the dataset and hull as SVG");
  std::string render_in;
  std::string render_format;
  std::string render_algo = "horizon";
  std::string render_out;
  bool render_fence = false;
  bool render_rays = false;
  double render_width = 800.0;
  AlgoOptions render_opt;
  render->add_option("--in", render_in, "input dataset")->required();
  render->add_option("--format", render_format, "xy or csv (default: from extension)");
  render->add_option("--algo", render_algo, "hull algorithm")
      ->check(CLI::IsMember(kAlgoNames))
      ->capture_default_str();
  render->add_option("--out", render_out, "output SVG file")->required();
  render->add_flag("--fence", render_fence, "draw the reduction candidates");
  render->add_flag("--rays", render_rays, "draw the polar bin rays");
  render->add_option("--width", render_width, "image width in pixels")->capture_default_str();
  render->add_option("--bin-interval-deg", render_opt.bin_interval_deg, "horizon bin interval")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the usage error
    return code == 0 ? 0 : 2;
  }

  if (gen->parsed()) {
    const polarhull::DatasetFamily family = polarhull::family_from_name(gen_family);
    const std::vector<polarhull::Point> points =
        polarhull::generate_dataset(family, gen_count, gen_seed);
    const polarhull::FileFormat fmt = gen_format.empty()
                                          ? polarhull::format_from_path(gen_out)
                                          : polarhull::format_from_name(gen_format);
    polarhull::save_points(gen_out, points, fmt);
    std::cout << "wrote " << points.size() << " points to " << gen_out << '\n';
    return 0;
  }

  if (hull->parsed()) {
    const std::vector<polarhull::Point> points = load_input(hull_in, hull_format);
    const polarhull::PipelineResult result = run_algorithm(hull_algo, points, hull_opt);
    print_report(hull_algo, result);
    if (!hull_out.empty()) write_hull_file(hull_out, result.hull, points);
    return 0;
  }

  if (verify->parsed()) {
    const std::vector<polarhull::Point> points = load_input(verify_in, verify_format);
    const polarhull::Hull reference = polarhull::brute_force_hull(points);
    bool all_ok = true;
    for (const std::string& algo : verify_algos) {
      polarhull::PipelineResult result = run_algorithm(algo, points, verify_opt);
      if (inject_corruption && !result.hull.vertices.empty()) {
        result.hull.vertices.erase(result.hull.vertices.begin() +
                                   static_cast<std::ptrdiff_t>(result.hull.vertices.size() / 2));
      }
      if (result.hull.vertices == reference.vertices) {
        std::cout << "verify algo=" << algo << " status=ok hull_size="
                  << result.hull.vertices.size() << '\n';
        continue;
      }
      all_ok = false;
      const std::size_t n =
          std::min(result.hull.vertices.size(), reference.vertices.size());
      std::size_t pos = 0;
      while (pos < n && result.hull.vertices[pos] == reference.vertices[pos]) ++pos;
      std::cout << "verify algo=" << algo << " status=mismatch position=" << pos << " expected=";
      if (pos < reference.vertices.size()) {
        std::cout << reference.vertices[pos];
      } else {
        std::cout << "end";
      }
      std::cout << " got=";
      if (pos < result.hull.vertices.size()) {
        std::cout << result.hull.vertices[pos];
      } else {
        std::cout << "end";
      }
      std::cout << '\n';
    }
    return all_ok ? 0 : 1;
  }

  if (bench->parsed()) {
    std::vector<polarhull::Point> points;
    if (!bench_in.empty()) {
      points = load_input(bench_in, bench_format);
    } else {
      points = polarhull::generate_dataset(polarhull::family_from_name(bench_family), bench_count,
                                           bench_seed);
    }
    std::cout << "algo\tn\treduced\thull\treduction_pct\titerations\tcenter\tpolar\tbinning\t"
                 "boundary\tfencing\thorizon\tconstruct\tsolve\tcombine\ttotal\n";
    for (const std::string& algo : bench_algos) {
      std::vector<polarhull::PipelineResult> runs;
      runs.reserve(bench_repeats);
      for (std::size_t r = 0; r < bench_repeats; ++r) {
        runs.push_back(run_algorithm(algo, points, bench_opt));
      }
      auto col = [&](auto getter) {
        std::vector<double> values;
        values.reserve(runs.size());
        for (const auto& run : runs) values.push_back(getter(run.report));
        return median(std::move(values));
      };
      const polarhull::PipelineReport& first = runs.front().report;
      std::cout << algo << '\t' << first.input_size << '\t' << first.reduced_size << '\t'
                << first.hull_size << '\t' << first.reduction_percent << '\t' << first.iterations
                << '\t' << col([](const auto& r) { return r.seconds.center; }) << '\t'
                << col([](const auto& r) { return r.seconds.polar; }) << '\t'
                << col([](const auto& r) { return r.seconds.binning; }) << '\t'
                << col([](const auto& r) { return r.seconds.boundary; }) << '\t'
                << col([](const auto& r) { return r.seconds.fencing; }) << '\t'
                << col([](const auto& r) { return r.seconds.horizon; }) << '\t'
                << col([](const auto& r) { return r.seconds.construct; }) << '\t'
                << col([](const auto& r) { return r.seconds.solve; }) << '\t'
                << col([](const auto& r) { return r.seconds.combine; }) << '\t'
                << col([](const auto& r) { return r.seconds.total; }) << '\n';
    }
    return 0;
  }

  if (render->parsed()) {
    const std::vector<polarhull::Point> points = load_input(render_in, render_format);
    const polarhull::PipelineResult result = run_algorithm(render_algo, points, render_opt);
    polarhull::RenderScene scene;
    scene.points = &points;
    scene.hull = &result.hull;
    if (render_fence) scene.fence = &result.reduced;
    polarhull::Center center{};
    if (render_rays) {
      center = polarhull::compute_center(points);
      scene.center = &center;
      scene.ray_interval = render_opt.bin_interval_deg / kDegPerRad;
      const std::vector<polarhull::PolarView> polar = polarhull::to_polar(points, center);
      scene.frame_offset = polar.front().frame_offset;
    }
    polarhull::save_svg(render_out, polarhull::render_svg(scene, render_width));
    std::cout << "wrote " << render_out << '\n';
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const polarhull::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const polarhull::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const polarhull::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const polarhull::EmptyInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const polarhull::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
