#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "hypertile/hypertoric.hpp"
#include "hypertile/io.hpp"
#include "hypertile/support.hpp"

namespace hypertile::cli {

namespace {

std::string str(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string str(const SubLattice& l) {
  std::string out = "rank " + std::to_string(l.rank());
  if (!l.is_zero()) {
    out += ":";
    for (const auto& b : l.basis()) out += " " + to_string(b);
  }
  return out;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string power(char var, std::size_t e, const Integer& k) {
  if (k == 0) return "";
  std::string out = std::string(1, var) + std::to_string(e + 1);
  if (k != 1) out += "^" + k.get_str();
  return out;
}

std::string monomial(const IntVector& p, const IntVector& q) {
  std::string out;
  for (std::size_t e = 0; e < p.size(); ++e) {
    const auto t = power('z', e, p[e]);
    if (!t.empty()) out += (out.empty() ? "" : " ") + t;
  }
  for (std::size_t e = 0; e < q.size(); ++e) {
    const auto t = power('w', e, q[e]);
    if (!t.empty()) out += (out.empty() ? "" : " ") + t;
  }
  return out.empty() ? "1" : out;
}

std::string relation(const IntVector& lambda) {
  std::string out;
  for (std::size_t e = 0; e < lambda.size(); ++e) {
    if (lambda[e] == 0) continue;
    const Integer mag = abs(lambda[e]);
    const bool neg = lambda[e] < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != 1) out += mag.get_str() + " ";
    out += "z" + std::to_string(e + 1) + "w" + std::to_string(e + 1);
  }
  return out + " = 0";
}

IntVector parse_csv(const std::string& text) {
  IntVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer x;
    if (item.empty() || x.set_str(item, 10) != 0) throw InputError("-r: \"" + item + "\" is not an integer");
    out.push_back(x);
  }
  return out;
}

// Tiling of the document, rejected unless it passes validate_tiling.
Tiling checked_tiling(const ProblemDocument& doc) {
  Tiling t = doc.tiling();
  const auto violations = validate_tiling(t);
  if (!violations.empty())
    throw InputError("input is not a tiling (" + violations.front().kind + ": " + violations.front().message + ")");
  return t;
}

struct Options {
  std::string file;
  bool strict = false;
  std::string divisor;
  std::string output;
};

using Handler = std::function<int(const ProblemDocument&, const Options&, std::ostream&)>;

int cmd_faces(const ProblemDocument& doc, const Options&, std::ostream& out) {
  auto fs = faces(doc.base());
  std::sort(fs.begin(), fs.end(), [](const Zonotope& a, const Zonotope& b) {
    const auto da = a.dimension(), db = b.dimension();
    return da != db ? da < db : a.sign < b.sign;
  });
  out << fs.size() << " faces\n";
  for (const auto& f : fs) {
    out << f.sign.str() << " dim " << f.dimension() << ":";
    for (const auto& v : vertices(f)) out << ' ' << to_string(v);
    out << '\n';
  }
  return 0;
}

int cmd_covectors(const ProblemDocument& doc, const Options&, std::ostream& out) {
  const auto cs = covectors(doc.config());
  out << cs.size() << " covectors\n";
  for (const auto& c : cs) out << c.str() << '\n';
  return 0;
}

int cmd_tile_from_lift(const ProblemDocument& doc, const Options&, std::ostream& out) {
  if (!doc.lift) throw InputError("tile-from-lift needs a \"lift\" field");
  const auto res = tiling_from_lift(doc.config(), *doc.lift);
  const auto maximal = maximal_tiles(res.tiling);
  out << res.tiling.size() << " tiles (" << maximal.size() << " maximal)\n";
  for (auto i : maximal) out << "maximal " << res.tiling.tiles[i].str() << '\n';
  for (const auto& [p, v] : res.psi) out << "psi " << to_string(p) << " = " << v << '\n';
  return 0;
}

int cmd_enumerate(const ProblemDocument& doc, const Options&, std::ostream& out) {
  const auto all = enumerate_tilings(doc.config());
  std::size_t trivial = 0, cubical = 0, other = 0, regular = 0;
  std::vector<std::string> lines;
  for (const auto& t : all) {
    const auto maximal = maximal_tiles(t);
    bool cubes = true;
    for (auto i : maximal) cubes = cubes && classify_block(t.tile(i)) == BlockKind::cube;
    std::string kind = maximal.size() == 1 ? "trivial" : (cubes ? "cubical" : "other");
    (kind == "trivial" ? trivial : kind == "cubical" ? cubical : other) += 1;
    const bool reg = regularity(t).has_value();
    regular += reg;
    std::string line = kind + (reg ? " regular:" : " irregular:");
    for (auto i : maximal) line += " " + t.tiles[i].str();
    lines.push_back(line);
  }
  out << all.size() << (all.size() == 1 ? " tiling (" : " tilings (") << trivial << " trivial, " << cubical
      << " cubical";
  if (other) out << ", " << other << " other";
  out << "; ";
  if (regular == all.size())
    out << "all regular";
  else if (regular == 0)
    out << "none regular";
  else
    out << regular << " regular";
  out << ")\n";
  for (const auto& l : lines) out << l << '\n';
  return 0;
}

int cmd_validate(const ProblemDocument& doc, const Options& opt, std::ostream& out) {
  const Tiling t = doc.tiling();
  const auto violations = validate_tiling(t);
  if (violations.empty()) {
    out << "valid: " << t.size() << " tiles (" << maximal_tiles(t).size() << " maximal)\n";
    return 0;
  }
  out << "invalid: " << violations.size() << " violations\n";
  for (const auto& v : violations) {
    out << v.kind;
    for (auto i : v.tiles) out << ' ' << t.tiles[i].str();
    out << ": " << v.message << '\n';
  }
  return opt.strict ? 1 : 0;
}

int cmd_regularity(const ProblemDocument& doc, const Options& opt, std::ostream& out) {
  const Tiling t = checked_tiling(doc);
  if (const auto r = regularity(t)) {
    out << "regular: lift " << to_string(*r) << '\n';
    return 0;
  }
  out << "irregular: strict system infeasible\n";
  return opt.strict ? 1 : 0;
}

int cmd_support_lattice(const ProblemDocument& doc, const Options&, std::ostream& out) {
  const auto l = tiling_lattices(checked_tiling(doc));
  out << "Lambda " << str(l.lambda) << '\n';
  out << "Lambda_T " << str(l.lambda_t) << '\n';
  out << "P_T " << str(l.p_t) << '\n';
  return 0;
}

int cmd_classify_divisor(const ProblemDocument& doc, const Options& opt, std::ostream& out) {
  const IntVector r = parse_csv(opt.divisor);
  out << to_string(r) << ' ' << to_string(classify_divisor(checked_tiling(doc), r)) << '\n';
  return 0;
}

int cmd_core_report(const ProblemDocument& doc, const Options&, std::ostream& out) {
  const Tiling t = checked_tiling(doc);
  const auto h = is_hypertoric(t);
  out << "hypertoric " << yes_no(h.ok);
  for (const auto& r : h.reasons) out << "; " << r;
  out << '\n';
  out << "weights " << to_string(weight_profile(t.base)) << '\n';
  const auto core = extended_core(t);
  out << "core " << (core.core_nonempty ? "nonempty" : "empty") << '\n';
  out << core.components.size() << " components\n";
  for (auto i : core.components) {
    const auto& c = core.strata[i];
    out << "vertex " << to_string(*c.gm_weight) << " tile " << c.sign.str() << " proper " << yes_no(c.is_proper)
        << " in_core " << yes_no(c.in_core) << " cones " << c.local_fan.fan.cones.size() << '\n';
  }
  out << core.strata.size() << " strata\n";
  for (const auto& c : core.strata)
    out << "stratum " << c.sign.str() << " dim " << c.dimension << " proper " << yes_no(c.is_proper) << " in_core "
        << yes_no(c.in_core) << '\n';
  out << core.closure_order.size() << " closure relations\n";
  return 0;
}

int cmd_class_groups(const ProblemDocument& doc, const Options&, std::ostream& out) {
  const auto g = class_groups(checked_tiling(doc));
  out << "Cl_T Z^" << g.cl_t_rank << '\n';
  out << "ker_forget " << str(g.ker_forget) << '\n';
  out << "Cl Z^" << g.cl_free_rank;
  for (const auto& d : g.cl_torsion) out << " + Z/" << d;
  out << '\n';
  out << "Pic_T " << str(g.pic_t) << '\n';
  return 0;
}

int cmd_geometry_flags(const ProblemDocument& doc, const Options&, std::ostream& out) {
  const auto f = geometry_flags(checked_tiling(doc));
  out << "smooth " << yes_no(f.smooth) << '\n';
  out << "qfactorial_terminal_sufficient " << yes_no(f.qfactorial_terminal_sufficient) << '\n';
  out << "projective_over_affinization " << yes_no(f.projective_over_affinization) << '\n';
  return 0;
}

int cmd_lawrence_fan(const ProblemDocument& doc, const Options&, std::ostream& out) {
  const Tiling t = checked_tiling(doc);
  const auto d = lawrence_fan(t);
  out << "rank " << d.rank << '\n';
  for (std::size_t e = 0; e < d.rho_plus.size(); ++e)
    out << "rho" << e + 1 << " + " << to_string(d.rho_plus[e]) << " - " << to_string(d.rho_minus[e]) << '\n';
  out << "sigma";
  for (const auto& g : d.base_cone.generators) out << ' ' << to_string(g);
  out << '\n';
  out << d.extremal_rays.size() << " extremal rays\n";
  out << d.fan.cones.size() << " cones\n";
  for (std::size_t i = 0; i < d.fan.cones.size(); ++i) {
    out << "cone " << t.tiles[i].str() << ':';
    for (const auto& g : d.fan.cones[i].generators) out << ' ' << to_string(g);
    out << '\n';
  }
  out << "refines_base " << yes_no(d.refines_base) << '\n';
  out << "rays_extremal " << yes_no(d.rays_extremal) << '\n';
  return 0;
}

int cmd_ring_generators(const ProblemDocument& doc, const Options&, std::ostream& out) {
  const auto ring = invariant_ring_data(doc.config(), doc.base().sign);
  out << "units " << str(ring.units) << '\n';
  out << ring.generators.size() << " generators\n";
  for (const auto& g : ring.generators)
    out << monomial(g.p, g.q) << " weight " << str(g.t_weight) << ' ' << g.gm_weight << '\n';
  out << ring.moment_relations.size() << " relations\n";
  for (const auto& l : ring.moment_relations) out << relation(l) << '\n';
  return 0;
}

int cmd_render_svg(const ProblemDocument& doc, const Options& opt, std::ostream& out) {
  const Tiling t = checked_tiling(doc);
  const std::string svg = render_svg(t);
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw InputError("cannot write " + opt.output);
  file << svg;
  out << "wrote " << opt.output << ": " << maximal_tiles(t).size() << " polygons, " << tiling_vertices(t).size()
      << " vertex marks\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zonotopal tilings and hypertoric invariants", "hypertile"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--strict", opt.strict, "exit 1 when the answer is negative (invalid or irregular tiling)");

  const std::vector<std::pair<std::string, std::pair<std::string, Handler>>> commands{
      {"faces", {"faces of Z(a, sign) + translation", cmd_faces}},
      {"covectors", {"covectors of the configuration", cmd_covectors}},
      {"tile-from-lift", {"regular tiling induced by the lift", cmd_tile_from_lift}},
      {"enumerate-tilings", {"all tilings of Z(a)", cmd_enumerate}},
      {"validate-tiling", {"check the tiling axioms", cmd_validate}},
      {"regularity", {"find a lift inducing the tiling", cmd_regularity}},
      {"support-lattice", {"Lambda, Lambda_T and P_T", cmd_support_lattice}},
      {"classify-divisor", {"Cartier / trivial / ample / nef test for r", cmd_classify_divisor}},
      {"core-report", {"extended core strata and components", cmd_core_report}},
      {"class-groups", {"Cl_T, its forgetful kernel, Cl and Pic_T", cmd_class_groups}},
      {"geometry-flags", {"smoothness, terminality and projectivity flags", cmd_geometry_flags}},
      {"lawrence-fan", {"Lawrence cone and fan", cmd_lawrence_fan}},
      {"ring-generators", {"generators of the invariant ring", cmd_ring_generators}},
      {"render-svg", {"draw a rank-2 tiling", cmd_render_svg}},
  };
  std::map<CLI::App*, Handler> handlers;
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    sub->fallthrough();
    sub->add_option("file", opt.file, "problem document (JSON)")->required();
    if (name == "classify-divisor") sub->add_option("-r", opt.divisor, "divisor class, comma separated")->required();
    if (name == "render-svg") sub->add_option("-o", opt.output, "output path")->required();
    handlers[sub] = entry.second;
  }

  std::vector<std::string> argv_storage{"hypertile"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    for (auto* sub : app.get_subcommands()) {
      const ProblemDocument doc = read_document(opt.file);
      return handlers.at(sub)(doc, opt, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace hypertile::cli
