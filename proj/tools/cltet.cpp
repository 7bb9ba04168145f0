// cltet: build, inspect, dualize and measure lightlike and ideal tetrahedra.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cltet/descriptor.hpp"
#include "cltet/suites.hpp"
#include "cltet/volumes.hpp"

using namespace cltet;

namespace {

enum Exit { ok = 0, input = 2, verification = 3, io = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string out;
  std::string format = "json";
  double tol = 1e-8;
  std::uint64_t seed = 42;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw IoError("cannot write " + g.out);
  f << text;
  if (!f) throw IoError("write failed for " + g.out);
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

std::string gc_text(const GC& z) {
  std::ostringstream os;
  os << std::setprecision(10) << z.re << (z.im < 0 ? " - " : " + ") << std::abs(z.im) << "l";
  return os.str();
}

struct Inline {
  int lambda = 1;
  std::string kind = "lightlike";
  double alpha = 0, beta = 0;
  std::string in;
  std::string pose;
};

void add_inline(CLI::App* c, Inline& v, bool with_input) {
  c->add_option("--lambda", v.lambda, "curvature sign")->check(CLI::IsMember({-1, 0, 1}));
  c->add_option("--kind", v.kind, "lightlike or ideal")->check(CLI::IsMember({"lightlike", "ideal"}));
  c->add_option("--alpha", v.alpha, "first parameter");
  c->add_option("--beta", v.beta, "second parameter");
  if (with_input) c->add_option("--in", v.in, "descriptor file");
}

TetDescriptor resolve(const Inline& v) {
  if (!v.in.empty()) return parse_descriptor(read_file(v.in));
  TetDescriptor d;
  d.lam = to_lambda(v.lambda);
  d.kind = parse_kind(v.kind);
  d.alpha = v.alpha;
  d.beta = v.beta;
  d.pose = Mat2::identity(d.lam);
  if (!v.pose.empty()) {
    const auto j = nlohmann::json::parse(read_file(v.pose), nullptr, false);
    if (j.is_discarded()) fail(Errc::ParseError, "pose file is not JSON");
    d.pose = pose_from_json(j.is_object() && j.contains("pose") ? j["pose"] : j, d.lam);
  }
  return d;
}

std::string vertex_text(const Tetrahedron& t, int i) {
  std::ostringstream os;
  os << std::setprecision(10);
  if (t.kind == Kind::lightlike) {
    const Vec4 v = t.xs[i].vec();
    os << "(" << v[0] << ", " << v[1] << ", " << v[2] << ", " << v[3] << ")";
  } else {
    const auto y = t.ys[i].canonical();
    os << "[" << gc_text(y.v1()) << " : " << gc_text(y.v2()) << "]";
  }
  return os.str();
}

std::string summary(const Tetrahedron& t) {
  std::ostringstream os;
  os << kind_name(t.kind) << " tetrahedron, Lambda = " << to_int(t.lam) << ", alpha = " << num(t.alpha)
     << ", beta = " << num(t.beta) << ", gamma = " << num(t.gamma()) << "\n";
  os << (t.kind == Kind::lightlike ? "vertices (ambient R^4):\n" : "vertices (projective line over C_Lambda):\n");
  for (int i = 0; i < 4; ++i) os << "  " << i + 1 << ": " << vertex_text(t, i) << "\n";
  os << (t.kind == Kind::lightlike ? "edge  length" : "edge  angle") << "        z                              |z|          phi          sigma\n";
  for (const auto& e : edge_data(t)) {
    os << "  " << e.label << "  " << std::left << std::setw(12) << num(e.value) << std::setw(31) << gc_text(e.z)
       << std::setw(13) << num(e.modulus) << std::setw(13) << num(e.phi) << std::right << e.sigma << "\n";
  }
  const double v = t.kind == Kind::lightlike ? lightlike_volume(t.lam, t.alpha, t.beta) : ideal_volume(t.lam, t.alpha, t.beta);
  os << "volume " << num(v) << "\n";
  return os.str();
}

nlohmann::ordered_json info_json(const Tetrahedron& t, const Recovery& r) {
  auto j = to_json(describe(t));
  j["recovered"] = {{"alpha", r.alpha}, {"beta", r.beta}};
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : edge_data(t)) {
    edges.push_back({{"edge", e.label}, {"value", e.value}, {"z", {e.z.re, e.z.im}}, {"modulus", e.modulus},
                     {"phi", e.phi}, {"sigma", e.sigma}});
  }
  j["edges"] = edges;
  auto verts = nlohmann::ordered_json::array();
  for (int i = 0; i < 4; ++i) {
    if (t.kind == Kind::lightlike) {
      const Vec4 v = t.xs[i].vec();
      verts.push_back({v[0], v[1], v[2], v[3]});
    } else {
      const auto y = t.ys[i].canonical();
      verts.push_back({{y.v1().re, y.v1().im}, {y.v2().re, y.v2().im}});
    }
  }
  j["vertices"] = verts;
  j["volume"] = t.kind == Kind::lightlike ? lightlike_volume(t.lam, t.alpha, t.beta) : ideal_volume(t.lam, t.alpha, t.beta);
  return j;
}

std::string volume_output(const VolumeReport& r, const std::string& format) {
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(); };
  if (format == "csv") {
    auto cell = [](const std::optional<double>& v) {
      if (!v) return std::string();
      std::ostringstream os;
      os << std::setprecision(17) << *v;
      return os.str();
    };
    std::ostringstream os;
    os << std::setprecision(17);
    os << "kind,lambda,alpha,beta,closed_form,oracle,oracle_error,series,series_order,rel_discrepancy\n";
    os << kind_name(r.kind) << "," << to_int(r.lam) << "," << r.alpha << "," << r.beta << "," << r.closed_form << ","
       << cell(r.oracle) << "," << cell(r.oracle_error) << "," << cell(r.series) << "," << r.series_order << ","
       << cell(r.rel_discrepancy) << "\n";
    return os.str();
  }
  if (format == "text") {
    std::ostringstream os;
    os << kind_name(r.kind) << " volume, Lambda = " << to_int(r.lam) << ", alpha = " << num(r.alpha)
       << ", beta = " << num(r.beta) << "\n";
    os << "  closed form     " << std::setprecision(15) << r.closed_form << "\n";
    if (r.oracle) os << "  cubature        " << *r.oracle << " +- " << std::setprecision(3) << *r.oracle_error << "\n";
    if (r.series) os << "  series (K=" << r.series_order << ")  " << std::setprecision(15) << *r.series << "\n";
    if (r.rel_discrepancy) os << "  rel discrepancy " << std::setprecision(3) << *r.rel_discrepancy << "\n";
    return os.str();
  }
  nlohmann::ordered_json j;
  j["kind"] = kind_name(r.kind);
  j["lambda"] = to_int(r.lam);
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["closed_form"] = r.closed_form;
  j["oracle"] = opt(r.oracle);
  j["oracle_error"] = opt(r.oracle_error);
  j["series"] = opt(r.series);
  j["series_order"] = r.series_order;
  j["rel_discrepancy"] = opt(r.rel_discrepancy);
  return j.dump(2) + "\n";
}

/// Klein chart: x2 = 1 in X, y1 = 1 in Y.
std::string mesh_text(const Tetrahedron& t, int density) {
  std::array<Vec4, 4> v;
  for (int i = 0; i < 4; ++i) {
    if (t.kind == Kind::lightlike) {
      v[i] = t.xs[i].vec();
    } else {
      v[i] = t.ys[i].vec();
      if (v[i][0] < 0) v[i] = -v[i];
    }
  }
  const int chart = t.kind == Kind::lightlike ? 1 : 0;
  std::ostringstream os;
  os << std::setprecision(10);
  os << "# cltet mesh lambda=" << to_int(t.lam) << " kind=" << kind_name(t.kind) << " alpha=" << t.alpha
     << " beta=" << t.beta << "\n";
  os << "# chart " << (chart == 1 ? "x2 = 1" : "y1 = 1") << ", density " << density << "\n";
  int base = 1;
  for (int f = 0; f < 4; ++f) {
    const auto o = detail::others(f);
    std::vector<std::vector<int>> index(density + 1);
    int next = base;
    for (int i = 0; i <= density; ++i) {
      for (int j = 0; i + j <= density; ++j) {
        const int k = density - i - j;
        const Vec4 p = (i * v[o[0]] + j * v[o[1]] + k * v[o[2]]) / double(density);
        if (std::abs(p[chart]) < 1e-12 * p.norm()) fail(Errc::DomainError, "face crosses the chart boundary");
        Eigen::Vector3d q;
        int m = 0;
        for (int c = 0; c < 4; ++c)
          if (c != chart) q[m++] = p[c] / p[chart];
        os << "v " << q[0] << " " << q[1] << " " << q[2] << "\n";
        index[i].push_back(next++);
      }
    }
    for (int i = 0; i < density; ++i) {
      for (int j = 0; i + j < density; ++j) {
        os << "f " << index[i][j] << " " << index[i + 1][j] << " " << index[i][j + 1] << "\n";
        if (i + j + 1 < density) os << "f " << index[i + 1][j] << " " << index[i + 1][j + 1] << " " << index[i][j + 1] << "\n";
      }
    }
    base = next;
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lightlike and generalized ideal tetrahedra in 3d Lorentzian and dual geometries"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--format", g.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--tol", g.tol, "tolerance for volume checks");
  app.add_option("--seed", g.seed, "random seed");

  Inline b;
  auto* build_cmd = app.add_subcommand("build", "build a tetrahedron descriptor");
  add_inline(build_cmd, b, false);
  build_cmd->add_option("--pose", b.pose, "JSON file with a 2x2 pose");
  build_cmd->get_option("--lambda")->required();
  build_cmd->get_option("--alpha")->required();
  build_cmd->get_option("--beta")->required();

  std::string info_in;
  auto* info_cmd = app.add_subcommand("info", "recover parameters and print edge data");
  info_cmd->add_option("--in,in", info_in, "descriptor file")->required();

  Inline v;
  std::string oracle = "off";
  int series = 0;
  auto* volume_cmd = app.add_subcommand("volume", "closed-form volume with optional oracle and series");
  add_inline(volume_cmd, v, true);
  volume_cmd->add_option("--oracle", oracle, "on or off")->check(CLI::IsMember({"on", "off"}));
  volume_cmd->add_option("--series", series, "series order K (lightlike only)");

  std::string dual_in;
  auto* dual_cmd = app.add_subcommand("dual", "projective dual descriptor");
  dual_cmd->add_option("--in,in", dual_in, "descriptor file")->required();

  std::string mesh_in;
  int density = 8;
  auto* mesh_cmd = app.add_subcommand("mesh", "Klein-chart triangle mesh");
  mesh_cmd->add_option("--in,in", mesh_in, "descriptor file")->required();
  mesh_cmd->add_option("--density", density, "subdivisions per face edge")->check(CLI::Range(1, 1000));

  int plot_lambda = 1, grid = 20;
  double plot_max = 1.5;
  auto* plot_cmd = app.add_subcommand("plot", "CSV of volumes over an (alpha, beta) grid");
  plot_cmd->add_option("--lambda", plot_lambda, "curvature sign")->required()->check(CLI::IsMember({-1, 0, 1}));
  plot_cmd->add_option("--grid", grid, "grid points per axis")->check(CLI::Range(1, 10000));
  plot_cmd->add_option("--max", plot_max, "largest parameter value")->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "run every invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : input;
  }

  try {
    if (*build_cmd) {
      const auto d = resolve(b);
      const auto t = build(d);
      if (g.format == "text") {
        emit(g, summary(t));
      } else {
        emit(g, dump(describe(t)));
        if (!g.out.empty()) std::cout << summary(t);
      }
    } else if (*info_cmd) {
      const auto t = build(parse_descriptor(read_file(info_in)));
      const auto r = recover_parameters(t);
      if (g.format == "text") {
        std::ostringstream os;
        os << "recovered alpha = " << num(r.alpha) << ", beta = " << num(r.beta) << "\n" << summary(t);
        emit(g, os.str());
      } else {
        emit(g, info_json(t, r).dump(2) + "\n");
      }
    } else if (*volume_cmd) {
      const auto d = resolve(v);
      const auto r = volume_report(d.kind, d.lam, d.alpha, d.beta, oracle == "on", std::max(g.tol, min_quadrature_tol), series);
      emit(g, volume_output(r, g.format));
      if (r.rel_discrepancy && *r.rel_discrepancy > g.tol) {
        std::cerr << "ToleranceNotReached: relative discrepancy " << *r.rel_discrepancy << " exceeds " << g.tol << "\n";
        return verification;
      }
    } else if (*dual_cmd) {
      const auto t = build(parse_descriptor(read_file(dual_in)));
      emit(g, dump(describe(dualize_tet(t))));
    } else if (*mesh_cmd) {
      const auto t = build(parse_descriptor(read_file(mesh_in)));
      emit(g, mesh_text(t, density));
    } else if (*plot_cmd) {
      const Lambda l = to_lambda(plot_lambda);
      std::ostringstream os;
      os << std::setprecision(17) << "alpha,beta,ideal_volume,lightlike_volume\n";
      for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
          const double a = plot_max * (i + 1) / grid, bb = plot_max * (j + 1) / grid;
          os << a << "," << bb << ",";
          if (l == Lambda::plus && !(a + bb < std::numbers::pi)) {
            os << ",\n";
            continue;
          }
          os << ideal_volume(l, a, bb) << "," << lightlike_volume(l, a, bb) << "\n";
        }
      emit(g, os.str());
    } else if (*verify_cmd) {
      std::ostringstream os;
      bool all = true;
      auto suites_list = suites::acceptance_suites();
      for (auto& s : suites::module_suites()) suites_list.push_back(s);
      for (const auto& s : suites_list) {
        const auto r = suites::run(s, g.seed);
        all = all && r.passed;
        os << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.passed) os << ": " << r.detail;
        os << "\n";
      }
      emit(g, os.str());
      return all ? ok : verification;
    }
  } catch (const cltet::ToleranceNotReached& e) {
    std::cerr << e.what() << " (best estimate " << e.best_estimate() << ", error " << e.error_estimate() << ")\n";
    return verification;
  } catch (const cltet::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == Errc::ToleranceNotReached ? verification : input;
  } catch (const IoError& e) {
    std::cerr << "IOError: " << e.what() << "\n";
    return io;
  }
  return ok;
}
