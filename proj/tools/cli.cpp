#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "slcinv/error.hpp"
#include "slcinv/finite_group.hpp"
#include "slcinv/fourlines.hpp"
#include "slcinv/gluing.hpp"
#include "slcinv/invariants.hpp"
#include "slcinv/json_io.hpp"
#include "slcinv/topology.hpp"
#include "slcinv/words.hpp"

namespace slcinv::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string format = "text";
  std::uint64_t budget = kDefaultHomBudget;
  std::vector<std::string> catalog;
  bool fingerprint = false;
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::SchemaError:
    case Errc::NonInvolutive:
    case Errc::FixedMarkedPoint:
    case Errc::ComponentMismatch:
    case Errc::DanglingPoint:
    case Errc::DuplicateId:
    case Errc::UnknownComponent:
    case Errc::FixedComponent:
    case Errc::MissingField:
    case Errc::UnknownGroup:
    case Errc::NotInD4:
    case Errc::UnpairedPoint:
      return kInputError;
    case Errc::GenusNotZero:
    case Errc::DbarDisconnected:
    case Errc::NotSimplyConnected:
    case Errc::UnsupportedNormalHomology:
    case Errc::NormalizationIrregular:
    case Errc::XDisconnected:
    case Errc::GeometricGenusNonzero:
      return kUnsupported;
    case Errc::BudgetExceeded:
      return kBudgetExceeded;
    case Errc::NegativeResult:
    case Errc::LabelAmbiguous:
      return kInternal;
  }
  return kInternal;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ValidatedGluing load_gluing(const std::string& path) {
  try {
    return validate_gluing(parse_gluing_json(read_file(path)));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + std::string(e.what()).substr(errc_name(e.code()).size() + 2));
  }
}

ReportOptions report_options(const Config& cfg) {
  ReportOptions o;
  o.with_fingerprint = cfg.fingerprint;
  if (!cfg.catalog.empty()) o.catalog = cfg.catalog;
  o.budget = cfg.budget;
  return o;
}

std::string node_label(const std::string& point) {
  // "P12" -> "P(12)"; other names are left alone.
  if (point.size() == 3 && point[0] == 'P') return "P(" + point.substr(1) + ")";
  return point;
}

std::string cusp_text(const std::vector<std::string>& cusp) {
  std::string s = "{";
  for (std::size_t i = 0; i < cusp.size(); ++i) s += (i ? "," : "") + node_label(cusp[i]);
  return s + "}";
}

std::string presentation_text(const GroupPresentation& p) {
  std::string s = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) s += (i ? ", " : "") + p.generators[i];
  s += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    s += (i ? ", " : "") + format_word(p.relators[i], p.generators);
  return s + ">";
}

void print_fingerprint(std::ostream& out, const Fingerprint& fp) {
  out << "  group   homs  surjections\n";
  for (const auto& e : fp.entries)
    out << "  " << std::left << std::setw(6) << e.group << std::right << std::setw(6)
        << e.count.total << std::setw(13) << e.count.surjective << "\n";
}

void print_homology(std::ostream& out, const HomologyOfX& h) {
  for (std::size_t i = 0; i < 5; ++i) out << "H" << i << "     " << h[i].to_string() << "\n";
}

json abelian_json(const AbelianGroup& a) {
  json t = json::array();
  for (const auto& d : a.torsion) {
    if (d <= std::numeric_limits<std::int64_t>::max())
      t.push_back(d.convert_to<std::int64_t>());
    else
      t.push_back(d.str());
  }
  return json{{"rank", a.free_rank}, {"torsion", t}};
}

json homcount_json(const HomCount& c) {
  return json{{"homs", c.total}, {"surjections", c.surjective}};
}

void emit(std::ostream& out, const json& v) { out << v.dump(2) << "\n"; }

int cmd_classify(const Config& cfg, std::ostream& out) {
  auto records = fourlines::enumerate_orbits(report_options(cfg));
  if (cfg.format == "json") {
    out << orbits_to_json(records);
    return kOk;
  }
  out << std::left << std::setw(7) << "label" << std::setw(6) << "size" << std::setw(5) << "chi"
      << std::setw(4) << "q" << std::setw(6) << "|Aut|" << std::setw(26) << "Aut generators"
      << "degenerate cusps\n";
  std::size_t total = 0;
  for (const auto& rec : records) {
    std::string gens;
    for (const auto& g : fourlines::generators_of(rec.stabilizer))
      gens += (gens.empty() ? "" : ",") + fourlines::format_permutation(g);
    if (gens.empty()) gens = "{0}";
    std::string cusps;
    for (const auto& c : rec.report.cusps) cusps += (cusps.empty() ? "" : " ") + cusp_text(c);
    out << std::left << std::setw(7) << rec.table_label.value_or("?") << std::setw(6)
        << rec.orbit_size << std::setw(5) << rec.report.chi << std::setw(4) << rec.report.q
        << std::setw(6) << rec.stabilizer.size() << std::setw(26) << gens << cusps << "\n";
    total += rec.orbit_size;
  }
  out << records.size() << " orbits, " << total << " gluings\n";
  if (cfg.fingerprint) {
    for (const auto& rec : records) {
      if (!rec.report.pi1 || !rec.report.pi1->fingerprint) continue;
      out << "\n" << rec.table_label.value_or("?") << "  pi1 = "
          << presentation_text(rec.report.pi1->simplified) << "\n";
      print_fingerprint(out, *rec.report.pi1->fingerprint);
    }
  }
  return kOk;
}

int cmd_invariants(const Config& cfg, const std::string& path, std::ostream& out) {
  auto g = load_gluing(path);
  auto report = invariant_report(g, report_options(cfg));
  if (cfg.format == "json") {
    out << report_to_json(report);
    return kOk;
  }
  out << "chi    " << report.chi << "\n"
      << "q      " << report.q << "\n"
      << "p_g    " << report.p_g << "\n"
      << "K^2    " << (report.k_squared ? std::to_string(*report.k_squared) : "unknown") << "\n"
      << "cusps ";
  for (const auto& c : report.cusps) out << " " << cusp_text(c);
  out << "\n";
  print_homology(out, report.homology);
  if (report.pi1) {
    out << "pi1    " << presentation_text(report.pi1->simplified) << "\n"
        << "pi1ab  " << report.pi1->abelianization.to_string() << "\n";
    if (report.pi1->fingerprint) print_fingerprint(out, *report.pi1->fingerprint);
  } else {
    out << "pi1    not computed (Dbar disconnected)\n";
  }
  return kOk;
}

int cmd_pi1(const Config& cfg, const std::string& path, std::ostream& out) {
  auto g = load_gluing(path);
  auto raw = pi1_presentation(g);
  auto simplified = tietze_simplify(raw);
  auto ab = abelianization(simplified);
  std::optional<Fingerprint> fp;
  if (cfg.fingerprint) fp = fingerprint(simplified, catalog(report_options(cfg).catalog), cfg.budget);
  if (cfg.format == "json") {
    json v{{"presentation", json::parse(presentation_to_json(raw))},
           {"simplified", json::parse(presentation_to_json(simplified))},
           {"abelianization", abelian_json(ab)}};
    if (fp) {
      json entries = json::array();
      for (const auto& e : fp->entries) {
        json row = homcount_json(e.count);
        row["group"] = e.group;
        entries.push_back(row);
      }
      v["fingerprint"] = entries;
    }
    emit(out, v);
    return kOk;
  }
  out << "presentation  " << presentation_text(raw) << "\n"
      << "simplified    " << presentation_text(simplified) << "\n"
      << "abelianized   " << ab.to_string() << "\n";
  if (fp) print_fingerprint(out, *fp);
  return kOk;
}

int cmd_homology(const Config& cfg, const std::string& path, std::ostream& out) {
  auto h = homology_of_X(load_gluing(path));
  if (cfg.format == "json") {
    json groups = json::array();
    for (const auto& a : h.groups) groups.push_back(abelian_json(a));
    emit(out, json{{"homology", groups}});
    return kOk;
  }
  print_homology(out, h);
  return kOk;
}

int cmd_distinguish(const Config& cfg, const std::string& path1, const std::string& path2,
                    std::ostream& out, std::ostream& err) {
  auto p1 = tietze_simplify(pi1_presentation(load_gluing(path1)));
  auto p2 = tietze_simplify(pi1_presentation(load_gluing(path2)));
  auto groups = catalog(report_options(cfg).catalog);
  std::optional<std::string> witness;
  HomCount c1, c2;
  std::vector<std::string> skipped;
  for (const auto& group : groups) {
    try {
      c1 = hom_count(p1, group, cfg.budget);
      c2 = hom_count(p2, group, cfg.budget);
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded) throw;
      skipped.push_back(group.name());
      continue;
    }
    if (!(c1 == c2)) {
      witness = group.name();
      break;
    }
  }
  for (const auto& name : skipped) err << "note: skipped " << name << " (budget exceeded)\n";
  if (cfg.format == "json") {
    json v{{"verdict", witness ? "DISTINGUISHED" : "INCONCLUSIVE"},
           {"first", json::parse(presentation_to_json(p1))},
           {"second", json::parse(presentation_to_json(p2))},
           {"skipped", skipped}};
    if (witness) {
      v["group"] = *witness;
      v["counts"] = json::array({homcount_json(c1), homcount_json(c2)});
    } else {
      v["group"] = nullptr;
    }
    emit(out, v);
    return kOk;
  }
  out << "first   " << presentation_text(p1) << "\n"
      << "second  " << presentation_text(p2) << "\n";
  if (witness) {
    out << "DISTINGUISHED at " << *witness << ": " << c1.total << " homs / " << c1.surjective
        << " surjections vs " << c2.total << " homs / " << c2.surjective << " surjections\n";
  } else {
    out << "INCONCLUSIVE: fingerprints agree on every catalog group tried\n";
  }
  return kOk;
}

int cmd_homcount(const Config& cfg, const std::string& path, std::ostream& out) {
  auto p = parse_presentation_json(read_file(path));
  auto fp = fingerprint(p, catalog(report_options(cfg).catalog), cfg.budget);
  if (cfg.format == "json") {
    json entries = json::array();
    for (const auto& e : fp.entries) {
      json row = homcount_json(e.count);
      row["group"] = e.group;
      entries.push_back(row);
    }
    emit(out, json{{"presentation", json::parse(presentation_to_json(p))}, {"fingerprint", entries}});
    return kOk;
  }
  out << "presentation  " << presentation_text(p) << "\n";
  print_fingerprint(out, fp);
  return kOk;
}

std::vector<std::string> split_catalog(const std::string& text) {
  std::vector<std::string> names;
  std::stringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ','))
    if (!name.empty()) names.push_back(name);
  return names;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of glued stable surfaces", "slcinv"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string catalog_text;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", cfg.budget, "Maximum |G|^generators per homomorphism search")
      ->check(CLI::PositiveNumber);
  app.add_option("--catalog", catalog_text, "Comma separated finite groups, e.g. C2,S3,A4");
  app.add_flag("--fingerprint", cfg.fingerprint, "Count homomorphisms into the catalog groups");

  std::string path1, path2;
  auto* classify = app.add_subcommand("classify-four-lines", "Orbits of gluings of (P2, four lines)");
  auto* invariants = app.add_subcommand("invariants", "Full invariant report of a gluing");
  invariants->add_option("gluing", path1, "GluingData JSON file")->required();
  auto* pi1 = app.add_subcommand("pi1", "Presentation of the fundamental group");
  pi1->add_option("gluing", path1, "GluingData JSON file")->required();
  auto* homology = app.add_subcommand("homology", "Integral homology H0..H4");
  homology->add_option("gluing", path1, "GluingData JSON file")->required();
  auto* distinguish = app.add_subcommand("distinguish", "Compare two fundamental groups");
  distinguish->add_option("first", path1, "GluingData JSON file")->required();
  distinguish->add_option("second", path2, "GluingData JSON file")->required();
  auto* homcount = app.add_subcommand("homcount", "Homomorphism counts of a presentation");
  homcount->add_option("presentation", path1, "Presentation JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    cfg.catalog = split_catalog(catalog_text);
    if (!cfg.catalog.empty()) catalog(cfg.catalog);  // reject unknown names early
    if (classify->parsed()) return cmd_classify(cfg, out);
    if (invariants->parsed()) return cmd_invariants(cfg, path1, out);
    if (pi1->parsed()) return cmd_pi1(cfg, path1, out);
    if (homology->parsed()) return cmd_homology(cfg, path1, out);
    if (distinguish->parsed()) return cmd_distinguish(cfg, path1, path2, out, err);
    if (homcount->parsed()) return cmd_homcount(cfg, path1, out);
  } catch (const Error& e) {
    err << "slcinv: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "slcinv: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace slcinv::cli
