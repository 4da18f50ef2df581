// Command-line surface: distance queries, exponential round-trips,
// maximizer sampling, sphere/beak emission and the invariant suite.
// Output is CSV (default) or JSON, deterministic and locale-free.
//
// Exit codes: 0 ok, 1 bad input, 2 unreachable/empty target, 3 failed
// invariant check.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "heis/causal.hpp"
#include "heis/check.hpp"
#include "heis/distance.hpp"
#include "heis/exponential.hpp"
#include "heis/group.hpp"
#include "heis/spheres.hpp"
#include "heis/synthesis.hpp"
#include "heis/types.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Cell {
  std::string text;
  bool quoted = false;
};

// Non-finite values are quoted so the JSON stays parseable.
Cell num(double v) { return {fmt17(v), !std::isfinite(v)}; }
Cell str(std::string s) { return {std::move(s), true}; }

struct Output {
  std::string command;
  std::vector<std::pair<std::string, Cell>> meta;
  std::vector<std::string> comments;  // CSV-only annotation lines
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_meta(const std::string& k, Cell v) { meta.emplace_back(k, std::move(v)); }
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') {
      out += '\\';
      out += ch;
    } else if (ch == '\n') {
      out += "\\n";
    } else {
      out += ch;
    }
  }
  return out;
}

void write_csv(const Output& o, std::ostream& os) {
  for (const auto& c : o.comments) os << "# " << c << "\n";
  for (std::size_t i = 0; i < o.columns.size(); ++i)
    os << (i ? "," : "") << o.columns[i];
  os << "\n";
  for (const auto& row : o.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << row[i].text;
    os << "\n";
  }
}

void write_json(const Output& o, std::ostream& os) {
  auto put_cell = [&](const Cell& c) {
    if (c.quoted)
      os << '"' << json_escape(c.text) << '"';
    else
      os << c.text;
  };
  os << "{\"meta\":{\"command\":\"" << o.command << "\",\"tool_version\":\""
     << kVersion << '"';
  for (const auto& [k, v] : o.meta) {
    os << ",\"" << k << "\":";
    put_cell(v);
  }
  os << "},\"data\":[";
  for (std::size_t r = 0; r < o.rows.size(); ++r) {
    os << (r ? ",{" : "{");
    for (std::size_t i = 0; i < o.rows[r].size(); ++i) {
      os << (i ? ",\"" : "\"") << o.columns[i] << "\":";
      put_cell(o.rows[r][i]);
    }
    os << '}';
  }
  os << "]}\n";
}

void emit(const Output& o, const std::string& format, const std::string& out_path) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw heis::Error("cannot open output file: " + out_path);
    os = &file;
  }
  if (format == "json")
    write_json(o, *os);
  else
    write_csv(o, *os);
}

const char* membership_name(heis::CausalMembership m) {
  switch (m) {
    case heis::CausalMembership::Interior: return "Interior";
    case heis::CausalMembership::Boundary: return "Boundary";
    case heis::CausalMembership::Origin: return "Origin";
    case heis::CausalMembership::Outside: return "Outside";
  }
  return "?";
}

struct CommonOpts {
  std::string format = "csv";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "Write to file instead of stdout");
}

int cmd_dist(double x, double y, double z, std::optional<double> tol,
             const CommonOpts& common) {
  const heis::Point q{x, y, z};
  const heis::CausalMembership m =
      tol ? heis::membership(q, *tol) : heis::membership(q);
  if (m == heis::CausalMembership::Outside) {
    std::cerr << "dist: (" << fmt17(x) << ", " << fmt17(y) << ", " << fmt17(z)
              << ") is outside J+\n";
    return 2;
  }
  const heis::DistanceResult d = tol ? heis::distance(q, *tol) : heis::distance(q);
  const auto [lo, hi] = heis::distance_bounds(q);
  Output o;
  o.command = "dist";
  o.add_meta("x", num(x));
  o.add_meta("y", num(y));
  o.add_meta("z", num(z));
  o.columns = {"membership", "d", "lower_bound", "upper_bound", "p"};
  o.rows.push_back({str(membership_name(m)), num(d.value), num(lo), num(hi), num(d.p)});
  emit(o, common.format, common.out);
  return 0;
}

int cmd_exp(double psi, double c, double t, const CommonOpts& common) {
  const heis::Point q = heis::exp_map({psi, c, t});
  Output o;
  o.command = "exp";
  o.add_meta("psi", num(psi));
  o.add_meta("c", num(c));
  o.add_meta("t", num(t));
  o.columns = {"x", "y", "z"};
  o.rows.push_back({num(q.x), num(q.y), num(q.z)});
  emit(o, common.format, common.out);
  return 0;
}

int cmd_invexp(double x, double y, double z, const CommonOpts& common) {
  const heis::Point q{x, y, z};
  const heis::ExpCoords lc = heis::exp_inverse(q);
  const heis::Point back = heis::exp_map(lc);
  const double residual =
      std::hypot(back.x - q.x, back.y - q.y, back.z - q.z);
  Output o;
  o.command = "invexp";
  o.add_meta("x", num(x));
  o.add_meta("y", num(y));
  o.add_meta("z", num(z));
  o.columns = {"psi", "c", "t", "residual"};
  o.rows.push_back({num(lc.psi), num(lc.c), num(lc.t), num(residual)});
  emit(o, common.format, common.out);
  return 0;
}

int cmd_maximizer(double x, double y, double z, int samples,
                  const CommonOpts& common) {
  const heis::Trajectory tr = heis::maximizer({x, y, z}, samples);
  Output o;
  o.command = "maximizer";
  o.add_meta("x", num(x));
  o.add_meta("y", num(y));
  o.add_meta("z", num(z));
  switch (tr.kind) {
    case heis::TrajectoryKind::TimelikeNormal:
      o.add_meta("kind", str("timelike_normal"));
      o.add_meta("psi", num(tr.coords.psi));
      o.add_meta("c", num(tr.coords.c));
      o.add_meta("t", num(tr.coords.t));
      o.comments.push_back("kind=timelike_normal psi=" + fmt17(tr.coords.psi) +
                           " c=" + fmt17(tr.coords.c) + " t=" + fmt17(tr.coords.t));
      break;
    case heis::TrajectoryKind::LightlikeSingle:
      o.add_meta("kind", str("lightlike_single"));
      o.add_meta("sign", num(tr.light_sign));
      o.comments.push_back(std::string("kind=lightlike_single sign=") +
                           (tr.light_sign > 0 ? "+1" : "-1"));
      break;
    case heis::TrajectoryKind::LightlikeBroken: {
      const char* order = tr.order == heis::BrokenOrder::MinusThenPlus
                              ? "minus_then_plus"
                              : "plus_then_minus";
      o.add_meta("kind", str("lightlike_broken"));
      o.add_meta("order", str(order));
      o.add_meta("tau1", num(tr.tau1));
      o.add_meta("tau2", num(tr.tau2));
      o.comments.push_back(std::string("kind=lightlike_broken order=") + order +
                           " tau1=" + fmt17(tr.tau1) + " tau2=" + fmt17(tr.tau2));
      break;
    }
  }
  o.add_meta("length", num(tr.length));
  o.comments.push_back("length=" + fmt17(tr.length));
  o.columns = {"t", "x", "y", "z"};
  for (const auto& [s, p] : tr.samples)
    o.rows.push_back({num(s), num(p.x), num(p.y), num(p.z)});
  emit(o, common.format, common.out);
  return 0;
}

// Section specs look like "z=0", "x=1.5" or "y=0.3" (the plane y = 0.3 x
// through the z-axis; only such planes meet every sphere).
heis::SectionPlane parse_section(const std::string& s) {
  if (s.size() < 3 || s[1] != '=')
    throw heis::Error("section spec must look like z=<v>, x=<v> or y=<slope>");
  heis::SectionPlane plane;
  switch (s[0]) {
    case 'z': plane.type = heis::SectionPlane::Type::ZConst; break;
    case 'x': plane.type = heis::SectionPlane::Type::XConst; break;
    case 'y': plane.type = heis::SectionPlane::Type::YSlope; break;
    default:
      throw heis::Error("section spec must start with x, y or z");
  }
  std::size_t used = 0;
  plane.value = std::stod(s.substr(2), &used);
  if (used != s.size() - 2) throw heis::Error("bad number in section spec: " + s);
  return plane;
}

int cmd_sphere(double R, const std::string& section, int n, double span,
               const std::vector<int>& grid, const std::vector<double>& yrange,
               const std::vector<double>& zrange, const CommonOpts& common) {
  Output o;
  o.command = "sphere";
  o.add_meta("R", num(R));
  if (!section.empty()) {
    const heis::SectionPlane plane = parse_section(section);
    const auto pts = heis::sphere_section(R, plane, n, span);
    o.add_meta("section", str(section));
    o.add_meta("n", num(n));
    o.comments.push_back("section " + section + " of the sphere R=" + fmt17(R));
    o.columns = {"x", "y", "z"};
    for (const auto& p : pts) o.rows.push_back({num(p.x), num(p.y), num(p.z)});
    emit(o, common.format, common.out);
    return 0;
  }
  const heis::SphereMesh mesh = heis::sphere_mesh(
      R, {yrange[0], yrange[1]}, {zrange[0], zrange[1]}, grid[0], grid[1]);
  o.add_meta("ny", num(mesh.ny));
  o.add_meta("nz", num(mesh.nz));
  o.comments.push_back("mesh of the sphere R=" + fmt17(R) + "; vertex index iy*nz+iz");
  o.comments.push_back("quads: (iy,iz) (iy,iz+1) (iy+1,iz+1) (iy+1,iz)");
  o.columns = {"iy", "iz", "x", "y", "z"};
  for (int iy = 0; iy < mesh.ny; ++iy)
    for (int iz = 0; iz < mesh.nz; ++iz) {
      const heis::Point& p = mesh.vertices[iy * mesh.nz + iz];
      o.rows.push_back({num(iy), num(iz), num(p.x), num(p.y), num(p.z)});
    }
  emit(o, common.format, common.out);
  return 0;
}

int cmd_check(const std::string& level, std::uint64_t seed,
              const CommonOpts& common) {
  const heis::CheckLevel lv =
      level == "full" ? heis::CheckLevel::Full : heis::CheckLevel::Fast;
  const auto results = heis::run_checks(lv, seed);
  Output o;
  o.command = "check";
  o.add_meta("level", str(level));
  o.add_meta("seed", num(static_cast<double>(seed)));
  o.columns = {"group", "pass", "detail"};
  bool all = true;
  for (const auto& r : results) {
    o.rows.push_back({str(r.group), str(r.pass ? "pass" : "fail"), str(r.detail)});
    all = all && r.pass;
  }
  emit(o, common.format, common.out);
  return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sub-Lorentzian geometry of the Heisenberg group"};
  app.require_subcommand(1);

  double x = 0, y = 0, z = 0, psi = 0, c = 0, t = 0;
  std::optional<double> tol;
  int samples = 33;
  double R = 1.0;
  std::string section;
  int n = 101;
  double span = 3.0;
  std::vector<int> grid{41, 41};
  std::vector<double> yrange{-3.0, 3.0};
  std::vector<double> zrange{-3.0, 3.0};
  std::string level = "fast";
  std::uint64_t seed = 42;
  CommonOpts common_dist, common_exp, common_invexp, common_max, common_sphere,
      common_check;

  CLI::App* cd = app.add_subcommand("dist", "Distance from the identity");
  cd->add_option("x", x)->required();
  cd->add_option("y", y)->required();
  cd->add_option("z", z)->required();
  cd->add_option("--tol", tol, "Membership tolerance override");
  add_common(cd, common_dist);

  CLI::App* ce = app.add_subcommand("exp", "Exponential map (psi, c, t) -> point");
  ce->add_option("psi", psi)->required();
  ce->add_option("c", c)->required();
  ce->add_option("t", t)->required();
  add_common(ce, common_exp);

  CLI::App* ci = app.add_subcommand("invexp", "Inverse exponential map");
  ci->add_option("x", x)->required();
  ci->add_option("y", y)->required();
  ci->add_option("z", z)->required();
  add_common(ci, common_invexp);

  CLI::App* cm = app.add_subcommand("maximizer", "Optimal trajectory to a target");
  cm->add_option("x", x)->required();
  cm->add_option("y", y)->required();
  cm->add_option("z", z)->required();
  cm->add_option("--samples", samples, "Sample count")->capture_default_str();
  add_common(cm, common_max);

  CLI::App* cs = app.add_subcommand("sphere", "Sphere mesh or plane section");
  cs->add_option("--R", R, "Radius (0 emits the boundary surface)")->required();
  cs->add_option("--section", section, "Plane spec: z=<v>, x=<v> or y=<slope>");
  cs->add_option("--n", n, "Section sample count")->capture_default_str();
  cs->add_option("--span", span, "Section parameter half-range")->capture_default_str();
  cs->add_option("--grid", grid, "Mesh resolution ny nz")->expected(2);
  cs->add_option("--yrange", yrange, "Mesh y range")->expected(2);
  cs->add_option("--zrange", zrange, "Mesh z range")->expected(2);
  add_common(cs, common_sphere);

  CLI::App* cc = app.add_subcommand("check", "Run the invariant suite");
  cc->add_option("--level", level, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}))
      ->capture_default_str();
  cc->add_option("--seed", seed, "RNG seed")->capture_default_str();
  add_common(cc, common_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cd->parsed()) return cmd_dist(x, y, z, tol, common_dist);
    if (ce->parsed()) return cmd_exp(psi, c, t, common_exp);
    if (ci->parsed()) return cmd_invexp(x, y, z, common_invexp);
    if (cm->parsed()) return cmd_maximizer(x, y, z, samples, common_max);
    if (cs->parsed())
      return cmd_sphere(R, section, n, span, grid, yrange, zrange, common_sphere);
    if (cc->parsed()) return cmd_check(level, seed, common_check);
  } catch (const heis::UnreachableError& e) {
    std::cerr << e.what() << " (outside J+)\n";
    return 2;
  } catch (const heis::NotInteriorError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const heis::EmptySectionError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const heis::DegenerateTargetError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const heis::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
