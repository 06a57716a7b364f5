// Command-line front end: classify parameter points, sweep grids to CSV, run
// the verification suite, export regions/decompositions/zero-mode reports.
//
// Exit codes: 0 success, 1 verification failure, 2 bad arguments, 3 I/O
// failure, 4 domain precondition failure.

#include "posmap/checks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using nlohmann::json;
using namespace posmap;

struct GlobalOpts {
  std::uint64_t seed = 0;
  int restarts = 32;
  double tol = 1e-9;
  std::string out;
  bool as_json = false;
};

// "x,y" with each side either an exact rational literal or a decimal (which
// is rationalized, so 1.5 -> 3/2 and 0.02 -> 1/50).
RationalPoint parse_point(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
    throw std::invalid_argument("point must be 'x,y'");
  const auto part = [](const std::string& t) {
    try {
      return parse_rational(t);
    } catch (const std::invalid_argument&) {
      std::size_t used = 0;
      const double v = std::stod(t, &used);
      if (used != t.size()) throw std::invalid_argument("bad coordinate '" + t + "'");
      return rationalize(v);
    }
  };
  return {part(s.substr(0, comma)), part(s.substr(comma + 1))};
}

Family parse_family(const std::string& s) {
  if (s == "phi") return Family::Phi;
  if (s == "lambda") return Family::Lambda;
  throw std::invalid_argument("family must be 'phi' or 'lambda'");
}

const char* family_name(Family f) { return f == Family::Phi ? "phi" : "lambda"; }

const char* status_name(CertStatus s) {
  switch (s) {
    case CertStatus::CertifiedAnalytic: return "certified-analytic";
    case CertStatus::NumericallySupported: return "numerically-supported";
    case CertStatus::Refuted: return "refuted";
  }
  return "unknown";
}

int thread_budget(int cells) {
  int t = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("POSMAP_THREADS")) {
    const int req = std::atoi(env);
    if (req >= 1) t = req;
  }
  return std::max(1, std::min(t == 0 ? 1 : t, cells));
}

// Round-trip-exact double formatting, identical across runs.
std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return 0;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "cannot open '" << out_path << "' for writing\n";
    return 3;
  }
  os << text << '\n';
  os.flush();
  if (!os) {
    std::cerr << "write to '" << out_path << "' failed\n";
    return 3;
  }
  return 0;
}

json rational_json(const Rational& q) { return to_string(q); }

json point_json(const RationalPoint& pt) {
  return json{{"x", rational_json(pt.x)}, {"y", rational_json(pt.y)}};
}

json cmatrix_json(const CMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

json region_json(const ParamRegion& r) {
  json vertices = json::array();
  for (const auto& v : r.vertices) vertices.push_back(json::array({rational_json(v.x), rational_json(v.y)}));
  json halfplanes = json::array();
  for (const auto& h : r.halfplanes)
    halfplanes.push_back(json::array({rational_json(h.p), rational_json(h.q), rational_json(h.r)}));
  return json{{"schema_version", 1},
              {"label", r.label},
              {"family", family_name(r.family)},
              {"d", r.d},
              {"k", r.k},
              {"conjectural", r.conjectural},
              {"vertices", vertices},
              {"halfplanes", halfplanes}};
}

// The conjectural flag of a classification: some k-verdict rests on the
// unproven part of a conjectural region (strictly above the beta = 0 slice).
bool point_is_conjectural(Family f, int d, const RationalPoint& pt) {
  if (f != Family::Phi || pt.y <= 0) return false;
  for (int k = 2; k < d; ++k) {
    const ParamRegion r = region(f, RegionKind::KPos, d, k);
    if (r.conjectural && contains(r, pt)) return true;
  }
  return false;
}

bool point_on_some_boundary(Family f, int d, const RationalPoint& pt) {
  if (on_boundary(region(f, RegionKind::CP, d), pt)) return true;
  for (int k = 1; k <= d; ++k)
    if (on_boundary(region(f, RegionKind::KPos, d, k), pt)) return true;
  return false;
}

int cmd_classify(const GlobalOpts& g, Family f, int d, const RationalPoint& pt, int k_opt, bool numeric) {
  if (k_opt != 0 && (k_opt < 1 || k_opt > d)) throw std::invalid_argument("--k must satisfy 1 <= k <= d");
  json rec;
  rec["schema_version"] = 1;
  rec["family"] = family_name(f);
  rec["d"] = d;
  rec["point"] = point_json(pt);
  rec["cp"] = is_completely_positive_exact(f, d, pt.x, pt.y);
  json kpos = json::array();
  for (int k = 1; k <= d; ++k) kpos.push_back(contains(region(f, RegionKind::KPos, d, k), pt));
  rec["positive"] = kpos[0];
  rec["kpos"] = kpos;
  rec["conjectural"] = point_is_conjectural(f, d, pt);
  rec["boundary"] = point_on_some_boundary(f, d, pt);
  if (numeric) {
    json num = json::array();
    const double x = to_double(pt.x), y = to_double(pt.y);
    for (int k = k_opt == 0 ? 1 : k_opt; k <= (k_opt == 0 ? d : k_opt); ++k) {
      SeesawOptions so;
      so.restarts = g.restarts;
      so.seed = mix_seed(g.seed, static_cast<std::uint64_t>(k));
      so.tol = g.tol;
      const CertVerdict v = certify(f, d, k, x, y, so);
      num.push_back(json{{"k", k},
                         {"status", status_name(v.status)},
                         {"method", v.method},
                         {"min_value", v.min_value},
                         {"conjectural", v.conjectural}});
    }
    rec["numeric"] = num;
  }
  return emit(rec.dump(2), g.out);
}

struct SweepSpec {
  Family family = Family::Phi;
  int d = 3;
  int k = 1;
  double xmin = -1, xmax = 2, ymin = -1, ymax = 2;
  int nx = 21, ny = 21;
  std::string mode = "exact";
};

int cmd_sweep(const GlobalOpts& g, const SweepSpec& s) {
  if (s.nx < 2 || s.ny < 2) throw std::invalid_argument("sweep: nx, ny must be >= 2");
  if (!(s.xmin < s.xmax) || !(s.ymin < s.ymax)) throw std::invalid_argument("sweep: empty grid range");
  if (s.k < 1 || s.k > s.d) throw std::invalid_argument("sweep: k must satisfy 1 <= k <= d");
  // Exact verdict columns are always present; mode only gates the see-saw column.
  const bool want_numeric = s.mode != "exact";

  const Rational x0 = rationalize(s.xmin), x1 = rationalize(s.xmax);
  const Rational y0 = rationalize(s.ymin), y1 = rationalize(s.ymax);
  const Rational dx(Rational(x1 - x0) / (s.nx - 1)), dy(Rational(y1 - y0) / (s.ny - 1));

  std::vector<ParamRegion> kreg;
  for (int k = 1; k <= s.d; ++k) kreg.push_back(region(s.family, RegionKind::KPos, s.d, k));

  struct Cell {
    RationalPoint pt;
    bool cp = false, conjectural = false;
    std::vector<bool> kpos;
    double min_numeric = std::numeric_limits<double>::quiet_NaN();
  };
  const int total = s.nx * s.ny;
  std::vector<Cell> cells(static_cast<std::size_t>(total));
  std::atomic<int> next{0};
  const auto worker = [&] {
    for (int idx; (idx = next.fetch_add(1)) < total;) {
      const int ix = idx / s.ny, iy = idx % s.ny;
      Cell& c = cells[static_cast<std::size_t>(idx)];
      c.pt = {Rational(x0 + ix * dx), Rational(y0 + iy * dy)};
      c.cp = is_completely_positive_exact(s.family, s.d, c.pt.x, c.pt.y);
      c.kpos.resize(static_cast<std::size_t>(s.d));
      for (int k = 1; k <= s.d; ++k) {
        const ParamRegion& r = kreg[static_cast<std::size_t>(k - 1)];
        const bool in = contains(r, c.pt);
        c.kpos[static_cast<std::size_t>(k - 1)] = in;
        if (in && r.conjectural && c.pt.y > 0) c.conjectural = true;
      }
      if (want_numeric) {
        SeesawOptions so;
        so.restarts = g.restarts;
        so.seed = mix_seed(mix_seed(mix_seed(mix_seed(g.seed, static_cast<std::uint64_t>(ix)),
                                             static_cast<std::uint64_t>(iy)),
                                    static_cast<std::uint64_t>(s.k)),
                           static_cast<std::uint64_t>(s.d));
        so.tol = g.tol;
        c.min_numeric =
            seesaw_min_blockform(build_choi(family_combination(s.family, s.d, to_double(c.pt.x), to_double(c.pt.y))),
                                 s.k, so)
                .min_value;
      }
    }
  };
  std::vector<std::thread> pool;
  const int nthreads = thread_budget(total);
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ostringstream csv;
  csv << "x,y,cp,pos";
  for (int k = 1; k <= s.d; ++k) csv << ",kpos_" << k;
  csv << ",conjectural,min_numeric\n";
  for (const Cell& c : cells) {
    csv << num17(to_double(c.pt.x)) << ',' << num17(to_double(c.pt.y));
    csv << ',' << (c.cp ? 1 : 0) << ',' << (c.kpos[0] ? 1 : 0);
    for (int k = 1; k <= s.d; ++k) csv << ',' << (c.kpos[static_cast<std::size_t>(k - 1)] ? 1 : 0);
    csv << ',' << (c.conjectural ? 1 : 0) << ',' << num17(c.min_numeric) << '\n';
  }
  std::string text = csv.str();
  text.pop_back();  // emit() appends the final newline
  return emit(text, g.out);
}

int cmd_verify_paper(const GlobalOpts& g, int d_max, int k_max, bool printed_eq_beta) {
  CheckOptions opts;
  opts.d_max = d_max;
  opts.k_max = k_max;
  opts.chain_line = printed_eq_beta ? ChainLine::Alternate : ChainLine::Consistent;
  opts.seed = g.seed;
  opts.restarts = g.restarts;
  const auto results = run_verification_suite(opts);

  json checks = json::array();
  json failures = json::array();
  for (const auto& r : results) {
    std::fprintf(stderr, "[%s] %-28s measured=%.3g (limit %.3g)  %s\n", r.pass ? "PASS" : "FAIL",
                 r.name.c_str(), r.measured, r.expected, r.note.c_str());
    checks.push_back(json{{"name", r.name},
                          {"pass", r.pass},
                          {"measured", r.measured},
                          {"expected", r.expected},
                          {"note", r.note}});
    if (!r.pass) failures.push_back(r.name);
  }
  json rep;
  rep["schema_version"] = 1;
  rep["d_max"] = d_max;
  rep["k_max"] = k_max;
  rep["seed"] = g.seed;
  rep["restarts"] = g.restarts;
  rep["use_printed_eq_beta"] = printed_eq_beta;
  rep["checks"] = checks;
  rep["failures"] = failures;
  rep["pass"] = failures.empty();
  const int io = emit(rep.dump(2), g.out);
  if (io != 0) return io;
  return failures.empty() ? 0 : 1;
}

int cmd_decompose(const GlobalOpts& g, int d, const RationalPoint& pt) {
  const ParamRegion pos = region(Family::Phi, RegionKind::Positive, d);
  if (!contains(pos, pt)) {
    std::cerr << "point (" << to_string(pt.x) << ", " << to_string(pt.y)
              << ") lies outside the positivity region of the first family; violated edges:\n";
    for (const auto& h : pos.halfplanes) {
      const Rational lhs(h.p * pt.x + h.q * pt.y);
      if (lhs > h.r)
        std::cerr << "  " << to_string(h.p) << "*x + " << to_string(h.q) << "*y <= " << to_string(h.r)
                  << "  (lhs = " << to_string(lhs) << ")\n";
    }
    return 4;
  }
  const double x = to_double(pt.x), y = to_double(pt.y);
  const DecompositionPair dec = boundary_decomposition(d, x, y);
  json rep;
  rep["schema_version"] = 1;
  rep["d"] = d;
  rep["point"] = point_json(pt);
  rep["residual"] = dec.residual;
  rep["p_min_eigenvalue"] = min_eigenvalue(dec.p);
  rep["q_min_eigenvalue"] = min_eigenvalue(dec.q);
  rep["p"] = cmatrix_json(dec.p);
  rep["q"] = cmatrix_json(dec.q);
  return emit(rep.dump(2), g.out);
}

int cmd_zero_mode(const GlobalOpts& g, int k) {
  const ZeroModeReport rep = verify_zero_mode(k);
  if (g.as_json) {
    json j;
    j["schema_version"] = 1;
    j["k"] = rep.k;
    j["d"] = rep.d;
    j["a_zero"] = rep.a_zero;
    j["b_zero"] = rep.b_zero;
    j["mirror_ok"] = rep.mirror_ok;
    j["gcd_one"] = rep.gcd_one;
    j["first_failing_row"] = rep.first_failing_row;
    j["joint_nullspace_dim"] = rep.joint_nullspace_dim;
    j["in_joint_nullspace"] = rep.in_joint_nullspace;
    j["ok"] = rep.ok();
    const int io = emit(j.dump(2), g.out);
    if (io != 0) return io;
  } else {
    std::ostringstream os;
    os << "zero mode k=" << rep.k << " (d=" << rep.d << ")\n";
    os << "  A*psi == 0:          " << (rep.a_zero ? "yes" : "no") << '\n';
    os << "  B*psi == 0:          " << (rep.b_zero ? "yes" : "no") << '\n';
    os << "  mirror symmetry:     " << (rep.mirror_ok ? "yes" : "no") << '\n';
    os << "  coprime entries:     " << (rep.gcd_one ? "yes" : "no") << '\n';
    os << "  joint nullspace dim: " << rep.joint_nullspace_dim << '\n';
    os << "  psi in nullspace:    " << (rep.in_joint_nullspace ? "yes" : "no") << '\n';
    if (rep.first_failing_row >= 0) os << "  first failing row:   " << rep.first_failing_row << '\n';
    os << (rep.ok() ? "OK" : "FAILED");
    const int io = emit(os.str(), g.out);
    if (io != 0) return io;
  }
  return rep.ok() ? 0 : 1;
}

int cmd_regions(const GlobalOpts& g, Family f, int d, int k, const std::string& kind) {
  RegionKind rk = RegionKind::KPos;
  if (kind == "cp") rk = RegionKind::CP;
  else if (kind == "positive") rk = RegionKind::Positive;
  else if (kind != "kpos") throw std::invalid_argument("--kind must be one of cp, positive, kpos");
  return emit(region_json(region(f, rk, d, k)).dump(2), g.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positivity classifier for the diagonal-perturbed map families on M_d"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "Base seed for every randomized step")->capture_default_str();
  app.add_option("--restarts", g.restarts, "See-saw restarts")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--tol", g.tol, "Negativity threshold for numeric verdicts")->capture_default_str();
  app.add_option("--out", g.out, "Write the primary artifact to this path instead of stdout");
  app.add_flag("--json", g.as_json, "JSON output for subcommands that default to text");

  std::string cl_family = "phi", cl_point = "0,0";
  int cl_d = 3, cl_k = 0;
  bool cl_numeric = false;
  auto* classify = app.add_subcommand("classify", "Exact verdicts (CP and k = 1..d) at one parameter point");
  classify->add_option("family", cl_family, "phi | lambda")->required()->check(CLI::IsMember({"phi", "lambda"}));
  classify->add_option("--d", cl_d, "Matrix dimension")->required()->check(CLI::Range(2, 64));
  classify->add_option("--point", cl_point, "Parameter point 'x,y'")->required();
  classify->add_option("--k", cl_k, "Restrict numeric certification to this k");
  classify->add_flag("--numeric", cl_numeric, "Add certify() corroboration per k");

  SweepSpec sw;
  std::string sw_family = "phi";
  auto* sweep = app.add_subcommand("sweep", "Classify a parameter grid and write CSV");
  sweep->add_option("family", sw_family, "phi | lambda")->required()->check(CLI::IsMember({"phi", "lambda"}));
  sweep->add_option("--d", sw.d, "Matrix dimension")->required()->check(CLI::Range(2, 64));
  sweep->add_option("--k", sw.k, "Schmidt rank for the numeric column")->capture_default_str();
  sweep->add_option("--xmin", sw.xmin)->capture_default_str();
  sweep->add_option("--xmax", sw.xmax)->capture_default_str();
  sweep->add_option("--ymin", sw.ymin)->capture_default_str();
  sweep->add_option("--ymax", sw.ymax)->capture_default_str();
  sweep->add_option("--nx", sw.nx, "Grid columns")->check(CLI::Range(2, 100000))->capture_default_str();
  sweep->add_option("--ny", sw.ny, "Grid rows")->check(CLI::Range(2, 100000))->capture_default_str();
  sweep->add_option("--mode", sw.mode, "exact | numeric | both")
      ->check(CLI::IsMember({"exact", "numeric", "both"}))
      ->capture_default_str();

  int vp_dmax = 6, vp_kmax = 6;
  bool vp_printed = false;
  auto* verify = app.add_subcommand("verify-paper", "Run the named verification checks and report JSON");
  verify->add_option("--d-max", vp_dmax, "Largest dimension exercised")->check(CLI::Range(2, 16))->capture_default_str();
  verify->add_option("--k-max", vp_kmax, "Largest Schmidt rank exercised")->check(CLI::Range(1, 16))->capture_default_str();
  verify->add_flag("--use-printed-eq-beta", vp_printed,
                   "Use the alternate boundary-line coefficient (k^2+k+1)/k^2; the chain checks then fail");

  int dc_d = 3;
  std::string dc_point = "0,0";
  auto* decompose = app.add_subcommand("decompose", "Split the Choi matrix as P + PT(Q) with P, Q PSD");
  decompose->add_option("--d", dc_d, "Matrix dimension")->required()->check(CLI::Range(2, 64));
  decompose->add_option("--point", dc_point, "Parameter point 'x,y'")->required();

  int zm_k = 0;
  auto* zero = app.add_subcommand("zero-mode", "Verify the exact kernel vector of the boundary pencil");
  zero->add_option("k", zm_k, "Chain size (d = k+1)")->required()->check(CLI::Range(2, 64));

  std::string rg_family = "phi", rg_kind = "kpos";
  int rg_d = 3, rg_k = 1;
  auto* regions_cmd = app.add_subcommand("regions", "Emit a region polygon as JSON");
  regions_cmd->add_option("--family", rg_family, "phi | lambda")->required()->check(CLI::IsMember({"phi", "lambda"}));
  regions_cmd->add_option("--d", rg_d, "Matrix dimension")->required()->check(CLI::Range(2, 64));
  regions_cmd->add_option("--k", rg_k, "Schmidt rank for kind=kpos")->capture_default_str();
  regions_cmd->add_option("--kind", rg_kind, "cp | positive | kpos")->capture_default_str();

  // Accept the global flags after the subcommand name as well.
  for (CLI::App* s : {classify, sweep, verify, decompose, zero, regions_cmd}) s->fallthrough();

  try {
    app.parse(argc, argv);
    if (classify->parsed()) return cmd_classify(g, parse_family(cl_family), cl_d, parse_point(cl_point), cl_k, cl_numeric);
    if (sweep->parsed()) {
      sw.family = parse_family(sw_family);
      return cmd_sweep(g, sw);
    }
    if (verify->parsed()) return cmd_verify_paper(g, vp_dmax, vp_kmax, vp_printed);
    if (decompose->parsed()) return cmd_decompose(g, dc_d, parse_point(dc_point));
    if (zero->parsed()) return cmd_zero_mode(g, zm_k);
    if (regions_cmd->parsed()) return cmd_regions(g, parse_family(rg_family), rg_d, rg_k, rg_kind);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad arguments: " << e.what() << '\n';
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
