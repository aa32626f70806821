// btz: classify points of the BTZ causal structure on the AdS quadric,
// scan random samples, generate horizon orbits and run verification suites.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "btz/ads.hpp"
#include "btz/causal.hpp"
#include "btz/horizon.hpp"
#include "btz/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BTZ_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

std::vector<double> parse_components(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    out.push_back(std::stod(item, &pos));
  }
  return out;
}

// Points within 1e-6 of the quadric are reprojected by rescaling the (u,t)
// radius; anything further off is rejected.
btz::AdSPoint parse_point(int dim, const std::string& text) {
  auto comps = parse_components(text);
  if (static_cast<int>(comps.size()) != dim + 1)
    throw std::invalid_argument("expected " + std::to_string(dim + 1) +
                                " components");
  btz::Vec v = Eigen::Map<btz::Vec>(comps.data(), comps.size());
  const double q = btz::q_norm(v);
  if (std::abs(q - 1.0) > 1e-6)
    throw std::invalid_argument("point off quadric: Q(p,p) = " + fmt17(q));
  double spatial = 0.0;
  for (int i = 2; i <= dim; ++i) spatial += v(i) * v(i);
  const double r2 = v(0) * v(0) + v(1) * v(1);
  if (r2 <= 0.0) throw std::invalid_argument("degenerate (u,t) radius");
  const double scale = std::sqrt((1.0 + spatial) / r2);
  v(0) *= scale;
  v(1) *= scale;
  return btz::AdSPoint::checked(std::move(v));
}

std::vector<std::string> coord_names(int dim) {
  std::vector<std::string> names = {"u", "t", "x", "y"};
  for (int i = 1; i <= dim - 3; ++i) names.push_back("z" + std::to_string(i));
  return names;
}

struct ScanRecord {
  btz::AdSPoint point;
  btz::CausalClass cls;
  double horizon_res = 0.0;
  std::uint64_t seed = 0;
};

void write_records(std::ostream& os, int dim,
                   const std::vector<ScanRecord>& records,
                   const std::string& format) {
  const auto names = coord_names(dim);
  if (format == "csv") {
    for (const auto& n : names) os << n << ",";
    os << "tag,horizon_residual,singular_residual,cap_gap,seed\n";
    for (const auto& r : records) {
      for (int i = 0; i <= dim; ++i) os << fmt17(r.point.v(i)) << ",";
      os << btz::to_string(r.cls.tag) << "," << fmt17(r.horizon_res) << ","
         << fmt17(r.cls.sing_residual) << "," << fmt17(r.cls.cap_gap) << ","
         << r.seed << "\n";
    }
  } else {
    for (const auto& r : records) {
      os << "{";
      for (int i = 0; i <= dim; ++i)
        os << "\"" << names[i] << "\":" << fmt17(r.point.v(i)) << ",";
      os << "\"tag\":\"" << btz::to_string(r.cls.tag) << "\","
         << "\"horizon_residual\":" << fmt17(r.horizon_res) << ","
         << "\"singular_residual\":" << fmt17(r.cls.sing_residual) << ","
         << "\"cap_gap\":" << fmt17(r.cls.cap_gap) << ","
         << "\"seed\":" << r.seed << "}\n";
    }
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"BTZ causal structure on the anti-de Sitter quadric"};
  app.require_subcommand(1);

  int dim = 3;
  std::string point_text, out_path, format = "text";
  std::uint64_t seed = default_seed();
  int samples = 1000, count = 100, n_dirs = 4096;
  double sigma = 1.0;
  std::string suite = "all", dir_text;

  auto* c_classify = app.add_subcommand("classify", "classify a single point");
  c_classify->add_option("--dim", dim)->check(CLI::Range(3, 5));
  c_classify->add_option("--point", point_text)->required();
  c_classify->add_option("--seed", seed);
  c_classify->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  auto* c_scan = app.add_subcommand("scan", "classify seeded random samples");
  c_scan->add_option("--dim", dim)->check(CLI::Range(3, 5));
  c_scan->add_option("--samples", samples)->check(CLI::PositiveNumber);
  c_scan->add_option("--seed", seed);
  c_scan->add_option("--sigma", sigma)->check(CLI::NonNegativeNumber);
  c_scan->add_option("--out", out_path);
  std::string scan_format = "csv";
  c_scan->add_option("--format", scan_format)
      ->check(CLI::IsMember({"csv", "jsonl"}));

  auto* c_orbit =
      app.add_subcommand("orbit", "generate AdS4 horizon lateral classes");
  int orbit_dim = 4;
  c_orbit->add_option("--dim", orbit_dim)->check(CLI::IsMember({4}));
  c_orbit->add_option("--count", count)->check(CLI::PositiveNumber);
  c_orbit->add_option("--seed", seed);
  c_orbit->add_option("--out", out_path);

  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("--suite", suite)
      ->check(CLI::IsMember(
          {"algebra", "ads3", "ads4", "inclusion", "lemmas", "all"}));
  c_verify->add_option("--seed", seed);

  auto* c_geodesic =
      app.add_subcommand("geodesic", "singularity roots of null rays");
  c_geodesic->add_option("--dim", dim)->check(CLI::Range(3, 5));
  c_geodesic->add_option("--point", point_text)->required();
  c_geodesic->add_option("--dir", dir_text);
  c_geodesic->add_option("--n-dirs", n_dirs)->check(CLI::PositiveNumber);
  c_geodesic->add_option("--seed", seed);

  auto* c_conjecture =
      app.add_subcommand("conjecture", "AdS5 horizon equation probe");
  c_conjecture->add_option("--samples", samples)->check(CLI::PositiveNumber);
  c_conjecture->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_classify->parsed()) {
      const btz::AdSPoint p = parse_point(dim, point_text);
      const btz::CausalClass c = btz::classify(p, seed);
      const double hres = btz::horizon_residual(p).value;
      if (format == "json") {
        std::cout << "{\"tag\":\"" << btz::to_string(c.tag) << "\","
                  << "\"horizon_residual\":" << fmt17(hres) << ","
                  << "\"singular_residual\":" << fmt17(c.sing_residual) << ","
                  << "\"cap_gap\":" << fmt17(c.cap_gap) << "}\n";
      } else {
        std::cout << "tag=" << btz::to_string(c.tag)
                  << " horizon_residual=" << fmt17(hres)
                  << " singular_residual=" << fmt17(c.sing_residual)
                  << " cap_gap=" << fmt17(c.cap_gap) << "\n";
      }
      return kExitOk;
    }

    if (c_scan->parsed()) {
      std::vector<ScanRecord> records;
      records.reserve(samples);
      std::map<std::string, int> counts;
      for (int i = 0; i < samples; ++i) {
        const std::uint64_t si = btz::mix_seed(seed, i);
        ScanRecord r{btz::random_point(dim, si, sigma), {}, 0.0, si};
        r.cls = btz::classify(r.point, si);
        r.horizon_res = btz::horizon_residual(r.point).value;
        ++counts[btz::to_string(r.cls.tag)];
        records.push_back(std::move(r));
      }
      if (out_path.empty()) {
        write_records(std::cout, dim, records, scan_format);
      } else {
        std::ofstream os(out_path);
        if (!os) {
          std::cerr << "cannot write " << out_path << "\n";
          return kExitUsage;
        }
        write_records(os, dim, records, scan_format);
      }
      std::cout << "scanned " << samples << ":";
      for (const auto& [tag, n] : counts) std::cout << " " << tag << "=" << n;
      std::cout << "\n";
      return kExitOk;
    }

    if (c_orbit->parsed()) {
      const auto pts = btz::h4_generate(count, seed);
      std::ostream* os = &std::cout;
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
          std::cerr << "cannot write " << out_path << "\n";
          return kExitUsage;
        }
        os = &file;
      }
      *os << "u,t,x,y,z1,branch,alpha,horizon_residual\n";
      for (const auto& s : pts) {
        for (int i = 0; i <= 4; ++i) *os << fmt17(s.point.v(i)) << ",";
        *os << (s.params.branch == btz::LateralBranch::plus ? "plus" : "minus")
            << "," << fmt17(s.params.alpha) << ","
            << fmt17(btz::horizon_residual(s.point).value) << "\n";
      }
      return kExitOk;
    }

    if (c_verify->parsed()) {
      const auto results = btz::verify::run_suite(suite, seed);
      bool all_pass = true;
      for (const auto& r : results) {
        const char* mark = r.informational ? "INFO" : (r.pass ? "PASS" : "FAIL");
        std::cout << "[" << mark << "] " << r.name << " — " << r.detail << "\n";
        if (!r.informational && !r.pass) all_pass = false;
      }
      return all_pass ? kExitOk : kExitVerifyFail;
    }

    if (c_geodesic->parsed()) {
      const btz::AdSPoint p = parse_point(dim, point_text);
      if (btz::is_singular(p)) {
        std::cout << "point is singular; no branch data\n";
        return kExitOk;
      }
      const btz::Representative rep = btz::seeded_representative(p, seed);
      const btz::BranchData bd = btz::branch_data(rep);
      auto report = [&](const btz::Vec& w) {
        const btz::BranchRoots r = btz::branch_roots(bd, w);
        std::cout << "w=(";
        for (int i = 0; i < w.size(); ++i)
          std::cout << (i ? "," : "") << fmt17(w(i));
        std::cout << ") s+=" << (r.plus ? fmt17(*r.plus) : "none")
                  << " s-=" << (r.minus ? fmt17(*r.minus) : "none")
                  << " escapes="
                  << (((r.plus && *r.plus > 0) || (r.minus && *r.minus > 0))
                          ? "no"
                          : "yes")
                  << "\n";
      };
      if (!dir_text.empty()) {
        auto comps = parse_components(dir_text);
        btz::Vec w = Eigen::Map<btz::Vec>(comps.data(), comps.size());
        if (w.size() != dim - 1)
          throw std::invalid_argument("direction needs dim-1 components");
        w.normalize();
        report(w);
      } else {
        int escapes = 0;
        const auto dirs = btz::sample_directions(dim, n_dirs, seed);
        for (const auto& w : dirs) {
          const btz::BranchRoots r = btz::branch_roots(bd, w);
          if (!((r.plus && *r.plus > 0) || (r.minus && *r.minus > 0)))
            ++escapes;
        }
        std::cout << "escaping directions " << escapes << "/" << n_dirs
                  << "\n";
      }
      return kExitOk;
    }

    if (c_conjecture->parsed()) {
      const auto r = btz::verify::check_ads5_conjecture(seed, samples);
      std::cout << "[INFO] " << r.name << " — " << r.detail << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
