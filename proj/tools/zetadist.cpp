// zetadist: command-line front end.
//
//   zetadist <subcommand> [--gen SPEC | --input FILE] [options] [--out DIR]
//
// Results go to stdout, or to DIR/<subcommand>.<ext> plus
// DIR/<subcommand>.manifest.json when --out is given. Errors are reported as
// one JSON object on stderr; exit code 1 for domain errors, 2 when the
// truncation cap is hit, 3 for I/O failures.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zetadist/dirichlet.hpp"
#include "zetadist/generators.hpp"
#include "zetadist/levy.hpp"
#include "zetadist/reference_tables.hpp"
#include "zetadist/serialize.hpp"
#include "zetadist/series.hpp"
#include "zetadist/zero_scan.hpp"
#include "zetadist/zeta_dist.hpp"

namespace zd = zetadist;

namespace {

constexpr const char* kVersion = "zetadist 0.1.0";

struct Input {
  std::string gen;
  std::string file;
  std::size_t N = 0;  // 0: subcommand default

  std::string label() const { return file.empty() ? gen : "file:" + file; }
};

struct Global {
  std::string out_dir;
  unsigned threads = 1;
  std::vector<std::string> argv;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw zd::Error(zd::ErrorKind::io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

zd::ExactFunction exact_input(const Input& in, std::size_t default_N, zd::RunManifest& m) {
  m.input = in.label();
  if (!in.file.empty()) {
    const std::string text = read_file(in.file);
    m.input_hash = zd::fnv1a64_hex(text);
    zd::Json j;
    try {
      j = zd::Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw zd::Error(zd::ErrorKind::invalid_argument, "input is not JSON: " + std::string(e.what()));
    }
    auto a = zd::function_from_json(j);
    if (in.N != 0 && in.N < a.size()) a = a.truncated(in.N);
    m.truncation = a.size();
    return a;
  }
  if (in.gen.empty()) throw zd::Error(zd::ErrorKind::invalid_argument, "need --gen or --input");
  const std::size_t N = in.N ? in.N : default_N;
  m.truncation = N;
  return zd::generate<zd::Rational>(zd::parse_generator(in.gen), N);
}

zd::NumericFunction numeric_input(const Input& in, std::size_t default_N, zd::RunManifest& m) {
  if (!in.file.empty()) return zd::to_numeric(exact_input(in, default_N, m));
  if (in.gen.empty()) throw zd::Error(zd::ErrorKind::invalid_argument, "need --gen or --input");
  m.input = in.label();
  const std::size_t N = in.N ? in.N : default_N;
  if (N > zd::truncation_cap()) {
    throw zd::Error(zd::ErrorKind::resource,
                    "N = " + std::to_string(N) + " exceeds the truncation cap " +
                        std::to_string(zd::truncation_cap()));
  }
  m.truncation = N;
  return zd::generate<double>(zd::parse_generator(in.gen), N);
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw zd::Error(zd::ErrorKind::invalid_argument, "not a number: '" + item + "'");
    }
  }
  if (out.empty()) throw zd::Error(zd::ErrorKind::invalid_argument, "empty list");
  return out;
}

zd::Rectangle parse_rect(const std::string& text) {
  const auto v = parse_list(text);
  if (v.size() != 4) {
    throw zd::Error(zd::ErrorKind::invalid_argument, "--rect needs sigma1,sigma2,t1,t2");
  }
  zd::Rectangle r{v[0], v[1], v[2], v[3]};
  if (!(r.sigma_min < r.sigma_max) || !(r.t_min < r.t_max)) {
    throw zd::Error(zd::ErrorKind::invalid_argument, "--rect needs sigma1 < sigma2 and t1 < t2");
  }
  return r;
}

std::string csv(double x) { return zd::format_double(x); }

void emit(const Global& g, const std::string& name, const std::string& ext,
          const std::string& body, zd::RunManifest m) {
  if (g.out_dir.empty()) {
    std::cout << body;
    std::cout.flush();
    if (!std::cout) throw zd::Error(zd::ErrorKind::io, "cannot write to stdout");
    return;
  }
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(g.out_dir, ec);
  if (ec) throw zd::Error(zd::ErrorKind::io, "cannot create " + g.out_dir + ": " + ec.message());
  const fs::path out = fs::path(g.out_dir) / (name + "." + ext);
  const fs::path manifest = fs::path(g.out_dir) / (name + ".manifest.json");
  m.command_line = g.argv;
  m.output = out.filename().string();
  m.tool_version = kVersion;
  m.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - g.start).count();
  auto write = [](const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
    if (!f) throw zd::Error(zd::ErrorKind::io, "cannot write " + p.string());
  };
  write(out, body);
  write(manifest, zd::to_json(m).dump(2) + "\n");
}

// Length for a distribution built from --tol: from the generator's certificate
// (every family has a(1) = 1, so tail <= tol bounds the tail mass), or the file
// length for JSON input.
zd::NumericFunction distribution_input(const Input& in, double sigma, double tol,
                                       zd::RunManifest& m) {
  if (in.N || !in.file.empty()) return numeric_input(in, in.N, m);
  const auto spec = zd::parse_generator(in.gen);
  zd::validate(spec);
  const auto N = zd::required_truncation(zd::growth_certificate(spec), sigma, tol,
                                         zd::truncation_cap(), 0);
  return numeric_input(in, N, m);
}

std::string rational_or_empty(const std::optional<zd::Rational>& r) {
  return r ? zd::to_string(*r) : std::string();
}

void add_input(CLI::App* sub, Input& in, const char* n_help) {
  auto* gen = sub->add_option("--gen", in.gen, "generator: ones, pow:A, dk:K, oneplusq:Q[:C], absmu, ezstar");
  auto* file = sub->add_option("--input", in.file, "arithmetic function JSON file");
  gen->excludes(file);
  sub->add_option("--N", in.N, n_help);
}

}  // namespace

int main(int argc, char** argv) {
  Global g;
  g.argv.assign(argv, argv + argc);

  CLI::App app{"Zeta distributions, Dirichlet inverses and quasi-Levy measures"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  app.add_option("--out", g.out_dir, "write <subcommand> output and manifest into this directory");
  app.add_option("--threads", g.threads, "worker cap for zero scans and sampling")
      ->check(CLI::Range(1u, 256u));

  Input in, in2;
  double sigma = 2.0, tol = 0.0, height = 30.0, sigma_hi = 4.0, max_tail = 1e-12, min_size = 0.0;
  std::string t_list = "0", sigma_list, rect_text, method = "both", format = "csv";
  int order = 0;
  std::size_t count = 0, head = 20, max_n = 512, depth = 512;
  std::uint64_t seed = 0;

  auto* gen = app.add_subcommand("gen", "emit coefficients as JSON");
  add_input(gen, in, "length (default 64)");

  auto* convolve = app.add_subcommand("convolve", "Dirichlet convolution a * b");
  add_input(convolve, in, "length (default 64)");
  convolve->add_option("--with", in2.gen, "generator for b");
  convolve->add_option("--input2", in2.file, "JSON file for b");

  auto* inverse = app.add_subcommand("inverse", "Dirichlet inverse");
  add_input(inverse, in, "length (default 64)");

  auto* acoeffs = app.add_subcommand("acoeffs", "exact A(n) = (a# * a^-1)(n)");
  add_input(acoeffs, in, "alias for --max");
  acoeffs->add_option("--max", max_n, "largest n (default 512)");
  acoeffs->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* eval = app.add_subcommand("eval", "truncated Z(s) and derivatives with tail bounds");
  add_input(eval, in, "truncation (default 100000)");
  eval->add_option("--sigma", sigma_list, "comma-separated sigma values")->required();
  eval->add_option("--t", t_list, "comma-separated t values (default 0)");
  eval->add_option("--order", order, "derivative order 0, 1 or 2")->check(CLI::Range(0, 2));

  auto* cf = app.add_subcommand("cf", "Z(sigma + it) / Z(sigma)");
  add_input(cf, in, "truncation (default 100000)");
  cf->add_option("--sigma", sigma, "sigma > 1")->required();
  cf->add_option("--t", t_list, "comma-separated t values (default 0)");

  auto* zeros = app.add_subcommand("zeros", "certified zero count in a rectangle");
  add_input(zeros, in, "truncation (default 100000)");
  zeros->add_option("--rect", rect_text, "sigma1,sigma2,t1,t2")->required();
  zeros->add_option("--min-size", min_size, "localise zeros down to this side length");
  zeros->add_option("--tol", tol, "winding tolerance (default 1e-3)");

  auto* sigma0 = app.add_subcommand("sigma0", "bounded-height bracket for the zero-free abscissa");
  add_input(sigma0, in, "truncation (default 100000)");
  sigma0->add_option("--height", height, "T (default 30)");
  sigma0->add_option("--sigma-hi", sigma_hi, "right edge of the strip (default 4)");
  sigma0->add_option("--tol", tol, "bracket width (default 1e-3)");

  auto* dist = app.add_subcommand("dist", "PMF head of the zeta distribution");
  add_input(dist, in, "fixed truncation (default: chosen from --tol)");
  dist->add_option("--sigma", sigma, "sigma")->required();
  dist->add_option("--tol", tol, "tail mass tolerance (default 1e-10)");
  dist->add_option("--head", head, "rows to print (default 20)");

  auto* moments = app.add_subcommand("moments", "mean and variance");
  add_input(moments, in, "truncation (default 100000)");
  moments->add_option("--sigma", sigma, "sigma")->required();
  moments->add_option("--method", method, "analytic, direct or both")
      ->check(CLI::IsMember({"analytic", "direct", "both"}));

  auto* sample = app.add_subcommand("sample", "draws of -log n");
  add_input(sample, in, "fixed truncation (default: chosen from --max-tail-mass)");
  sample->add_option("--sigma", sigma, "sigma")->required();
  sample->add_option("--count", count, "number of draws")->required();
  sample->add_option("--seed", seed, "64-bit seed (default 0)");
  sample->add_option("--max-tail-mass", max_tail, "refuse above this tail mass (default 1e-12)");

  auto* levy = app.add_subcommand("levy", "atoms of the quasi-Levy measure");
  add_input(levy, in, "length (default 512)");
  levy->add_option("--sigma", sigma, "sigma")->required();

  auto* classify = app.add_subcommand("classify", "case1 / case2_1 / case2_2 verdict");
  add_input(classify, in, "truncation of the zero scan (default 100000)");
  classify->add_option("--height", height, "T (default 30)");
  classify->add_option("--sigma-hi", sigma_hi, "right edge of the strip (default 4)");
  classify->add_option("--tol", tol, "bracket width (default 1e-3)");
  classify->add_option("--depth", depth, "exact A-sign scan depth (default 512)");

  auto* tables = app.add_subcommand("paper-tables", "recompute the worked example values");
  tables->add_option("--max", max_n, "largest n for the pattern families (default 512)");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      std::cout << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      std::cout << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::CallForVersion&) {
      std::cout << kVersion << "\n";
      return 0;
    } catch (const CLI::ParseError& e) {
      throw zd::Error(zd::ErrorKind::invalid_argument, e.what());
    }

    zd::RunManifest m;
    std::ostringstream out;

    if (*gen) {
      auto a = exact_input(in, 64, m);
      out << zd::to_json(a).dump() << "\n";
      emit(g, "gen", "json", out.str(), m);
    } else if (*convolve) {
      auto a = exact_input(in, 64, m);
      zd::RunManifest m2;
      Input b = in2;
      b.N = a.size();
      auto bf = exact_input(b, a.size(), m2);
      m.input += " * " + m2.input;
      if (!m2.input_hash.empty()) m.input_hash += m2.input_hash;
      out << zd::to_json(zd::dirichlet_convolve(a, bf)).dump() << "\n";
      emit(g, "convolve", "json", out.str(), m);
    } else if (*inverse) {
      auto a = exact_input(in, 64, m);
      out << zd::to_json(zd::dirichlet_inverse(a)).dump() << "\n";
      emit(g, "inverse", "json", out.str(), m);
    } else if (*acoeffs) {
      if (in.N) max_n = in.N;
      Input i = in;
      i.N = max_n;
      auto A = zd::compute_A(exact_input(i, max_n, m));
      if (format == "json") {
        zd::Json j = zd::Json::object();
        for (std::size_t n = 2; n <= A.size(); ++n) j[std::to_string(n)] = zd::to_json(A(n));
        out << j.dump() << "\n";
      } else {
        out << "n,A,A_over_log_n,value\n";
        for (std::size_t n = 2; n <= A.size(); ++n) {
          out << n << ',' << A(n).to_string() << ',' << rational_or_empty(A(n).ratio_to_log(n))
              << ',' << csv(A(n).to_double()) << '\n';
        }
      }
      emit(g, "acoeffs", format, out.str(), m);
    } else if (*eval) {
      auto a = numeric_input(in, zd::kDefaultTruncation, m);
      const zd::SeriesEvaluator ev(a);
      out << "sigma,t,re,im,tail_bound,N\n";
      for (double s : parse_list(sigma_list)) {
        for (double t : parse_list(t_list)) {
          auto r = zd::evaluate_Z(a, {s, t}, order);
          out << csv(s) << ',' << csv(t) << ',' << csv(r.value.real()) << ','
              << csv(r.value.imag()) << ',' << csv(r.tail_bound) << ',' << r.n_used << '\n';
        }
      }
      m.tolerances["order"] = order;
      emit(g, "eval", "csv", out.str(), m);
    } else if (*cf) {
      auto a = numeric_input(in, zd::kDefaultTruncation, m);
      out << "sigma,t,re,im,characteristic\n";
      for (double t : parse_list(t_list)) {
        auto r = zd::evaluate_cf(a, sigma, t);
        out << csv(sigma) << ',' << csv(t) << ',' << csv(r.value.real()) << ','
            << csv(r.value.imag()) << ',' << (r.characteristic ? "true" : "false") << '\n';
      }
      emit(g, "cf", "csv", out.str(), m);
    } else if (*zeros) {
      auto a = numeric_input(in, zd::kDefaultTruncation, m);
      zd::ScanOptions opts;
      opts.threads = g.threads;
      if (tol > 0) opts.winding_tol = tol;
      m.tolerances["winding_tol"] = opts.winding_tol;
      const auto rect = parse_rect(rect_text);
      zd::Json j;
      if (min_size > 0) {
        m.tolerances["min_size"] = min_size;
        zd::Json leaves = zd::Json::array();
        for (const auto& r : zd::localize_zeros(a, rect, a.size(), min_size, opts)) {
          leaves.push_back(zd::to_json(r));
        }
        j["parent"] = zd::to_json(zd::count_zeros(a, rect, a.size(), opts));
        j["zeros"] = std::move(leaves);
      } else {
        j = zd::to_json(zd::count_zeros(a, rect, a.size(), opts));
      }
      out << j.dump(2) << "\n";
      emit(g, "zeros", "json", out.str(), m);
    } else if (*sigma0) {
      auto a = numeric_input(in, zd::kDefaultTruncation, m);
      zd::ScanOptions opts;
      opts.threads = g.threads;
      if (tol <= 0) tol = 1e-3;
      m.tolerances["tol"] = tol;
      m.tolerances["height_T"] = height;
      out << zd::to_json(zd::estimate_sigma0(a, height, sigma_hi, tol, opts)).dump(2) << "\n";
      emit(g, "sigma0", "json", out.str(), m);
    } else if (*dist) {
      if (tol <= 0) tol = 1e-10;
      auto a = distribution_input(in, sigma, tol, m);
      auto d = in.N ? zd::build_distribution_truncated(a, sigma, a.size())
                    : zd::build_distribution(a, sigma, tol);
      m.truncation = d.truncation();
      m.tolerances["tail_mass"] = tol;
      out << "n,x,pmf\n";
      for (std::size_t n = 1; n <= std::min(head, d.truncation()); ++n) {
        out << n << ',' << csv(0.0 - std::log(static_cast<double>(n))) << ',' << csv(d.pmf(n))
            << '\n';
      }
      emit(g, "dist", "csv", out.str(), m);
    } else if (*moments) {
      auto a = numeric_input(in, zd::kDefaultTruncation, m);
      zd::Json j;
      if (method == "analytic" || method == "both") {
        auto mo = zd::moments_analytic(zd::compute_A(a), sigma);
        j["analytic"] = {{"mean", mo.mean}, {"variance", mo.variance}, {"method", "analytic"}};
      }
      if (method == "direct" || method == "both") {
        auto mo = zd::moments_direct(zd::build_distribution_truncated(a, sigma, a.size()));
        j["direct"] = {{"mean", mo.mean}, {"variance", mo.variance}, {"method", "direct"}};
      }
      if (method != "both") j = j[method];
      out << j.dump(2) << "\n";
      emit(g, "moments", "json", out.str(), m);
    } else if (*sample) {
      auto a = distribution_input(in, sigma, max_tail, m);
      auto d = in.N ? zd::build_distribution_truncated(a, sigma, a.size())
                    : zd::build_distribution(a, sigma, max_tail);
      m.truncation = d.truncation();
      m.seed = seed;
      m.tolerances["max_tail_mass"] = max_tail;
      m.input += " | sampler: " + std::string(zd::kSamplerAlgorithm);
      zd::SampleOptions opts;
      opts.max_tail_mass = max_tail;
      opts.threads = g.threads;
      for (double x : zd::sample(d, count, seed, opts)) out << csv(x) << '\n';
      emit(g, "sample", "txt", out.str(), m);
    } else if (*levy) {
      auto a = exact_input(in, 512, m);
      auto q = zd::quasi_levy_measure(zd::compute_A(a), sigma);
      out << "n,position,mass\n";
      for (const auto& atom : q.atoms) {
        out << atom.n << ',' << csv(atom.position) << ',' << csv(atom.mass) << '\n';
      }
      emit(g, "levy", "csv", out.str(), m);
    } else if (*classify) {
      Input exact_in = in;
      exact_in.N = std::min(depth, in.N ? in.N : depth);
      zd::RunManifest scratch;
      auto a = exact_input(exact_in, depth, scratch);
      auto scan_fn = numeric_input(in, zd::kDefaultTruncation, m);
      zd::ClassifyOptions opts;
      opts.height = height;
      opts.sigma_hi = sigma_hi;
      if (tol > 0) opts.tol = tol;
      opts.scan.threads = g.threads;
      m.tolerances["tol"] = opts.tol;
      m.tolerances["height_T"] = height;
      m.tolerances["depth"] = static_cast<double>(a.size());
      out << zd::to_json(zd::classify(a, scan_fn, opts)).dump(2) << "\n";
      emit(g, "classify", "json", out.str(), m);
    } else if (*tables) {
      m.input = "reference families";
      m.truncation = max_n;
      const auto report = zd::reference_tables(max_n);
      out << "family,quantity,n,stated,computed,status,note\n";
      for (const auto& r : report.rows) {
        out << r.family << ',' << r.quantity << ',' << r.n << ',' << r.stated << ','
            << r.computed << ',' << zd::to_string(r.status) << ",\"" << r.note << "\"\n";
      }
      emit(g, "paper-tables", "csv", out.str(), m);
      std::cerr << "rows: " << report.rows.size()
                << ", match: " << report.count(zd::RowStatus::match)
                << ", flagged: " << report.count(zd::RowStatus::flagged)
                << ", mismatch: " << report.count(zd::RowStatus::mismatch) << "\n";
      return report.ok() ? 0 : 1;
    }
    return 0;
  } catch (const zd::Error& e) {
    zd::Json j{{"error", std::string(zd::to_string(e.kind()))}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return zd::exit_code(e.kind());
  } catch (const std::bad_alloc&) {
    std::cerr << zd::Json{{"error", "resource"}, {"message", "out of memory"}}.dump() << "\n";
    return 2;
  }
}
