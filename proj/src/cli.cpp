#include "swfold/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "swfold/error.hpp"
#include "swfold/fold.hpp"
#include "swfold/knot_io.hpp"
#include "swfold/obstruction.hpp"

namespace swfold::cli {

using nlohmann::json;

namespace {

std::string monomial_text(const Basis& basis, const ExponentVector& e) {
  return to_text(monomial(basis, 1, e));
}

std::string join_names(const Basis& basis) {
  std::string s;
  for (const auto& n : basis.names()) s += (s.empty() ? "" : " ") + n;
  return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* bool_text(bool b) { return b ? "true" : "false"; }

json manifold_json(const ThreeManifold& m) {
  return json{{"manifold", m.name},     {"provenance", m.provenance},
              {"basis", m.basis.names()}, {"b1", m.b1},
              {"fibered", m.fibered}};
}

std::string manifold_header(const ThreeManifold& m) {
  std::ostringstream s;
  s << "manifold: " << m.name << '\n'
    << "basis: " << join_names(m.basis) << '\n'
    << "b1: " << m.b1 << '\n'
    << "fibered: " << bool_text(m.fibered) << '\n';
  return s.str();
}

json unit_classes_json(const std::vector<ExponentVector>& classes) {
  json arr = json::array();
  for (const auto& e : classes) arr.push_back(e);
  return arr;
}

// Shared state of one invocation, filled in by CLI11.
struct Invocation {
  bool json = false;
  bool quiet = false;
  std::string knot_name;
  std::string file;
  std::string chi;
  std::int64_t genus = 0;
  std::int64_t euler = 0;
  std::string method = "both";
  std::int64_t box = 5;
};

KnotTable startup_table() {
  std::vector<std::string> failures = validate_builtin_table();
  if (!failures.empty()) {
    throw DomainError("knot table self-check failed: " + failures.front());
  }
  KnotTable table = KnotTable::with_builtins();
  if (const char* extra = std::getenv("SWFOLD_KNOT_TABLE");
      extra != nullptr && *extra != '\0') {
    for (auto& k : load_knot_file(extra)) table.add(std::move(k));
  }
  return table;
}

void run_knot_list(const Invocation& inv, const KnotTable& table,
                   OutputRecord& rec) {
  std::ostringstream s;
  json knots = json::array();
  for (const auto& name : table.names()) {
    const KnotRecord& k = table.lookup(name);
    knots.push_back(knot_to_json(k));
    if (inv.quiet) {
      s << name << '\n';
    } else {
      s << name << "  " << (k.fibered ? "fibered" : "not fibered") << "  "
        << to_text(k.alexander) << '\n';
    }
  }
  rec.text = s.str();
  rec.payload = json{{"command", "knot list"}, {"knots", knots}};
}

std::string knot_text(const KnotRecord& k, bool quiet) {
  if (quiet) return to_text(k.alexander) + "\n";
  std::ostringstream s;
  s << "knot: " << k.name << '\n'
    << "fibered: " << bool_text(k.fibered) << '\n';
  if (k.seifert) {
    s << "seifert:";
    for (const auto& row : k.seifert->rows()) {
      s << " [";
      for (std::size_t i = 0; i < row.size(); ++i) s << (i ? " " : "") << row[i];
      s << ']';
    }
    if (k.seifert->size() == 0) s << " []";
    s << '\n';
  }
  s << "alexander: " << to_text(k.alexander) << '\n';
  return s.str();
}

void run_knot_show(const Invocation& inv, const KnotTable& table,
                   OutputRecord& rec) {
  const KnotRecord& k = table.lookup(inv.knot_name);
  rec.text = knot_text(k, inv.quiet);
  rec.payload = json{{"command", "knot show"}, {"knot", knot_to_json(k)}};
}

void run_knot_register(const Invocation& inv, KnotTable& table,
                       OutputRecord& rec) {
  json registered = json::array();
  std::string text;
  for (auto& k : load_knot_file(inv.file)) {
    registered.push_back(knot_to_json(k));
    text += inv.quiet ? k.name + "\n" : "registered " + knot_text(k, false);
    table.add(std::move(k));
  }
  rec.text = text;
  rec.payload = json{{"command", "knot register"}, {"knots", registered}};
}

void run_sw3(const Invocation& inv, KnotTable& table, OutputRecord& rec) {
  ThreeManifold m = load_spec(inv.file, table);
  rec.text = inv.quiet ? to_text(m.sw3) + "\n"
                       : manifold_header(m) + "sw3: " + to_text(m.sw3) + "\n";
  rec.payload = manifold_json(m);
  rec.payload["command"] = "sw3";
  rec.payload["sw3"] = to_text(m.sw3);
}

void run_fold(const Invocation& inv, KnotTable& table, OutputRecord& rec,
              bool obstruct) {
  ThreeManifold m = load_spec(inv.file, table);
  ExponentVector chi = parse_linear_form(inv.chi, m.basis);
  auto outcome = fold_or_product(m, chi);

  std::ostringstream s;
  json p = manifold_json(m);
  p["command"] = obstruct ? "obstruct" : "fold";
  p["chi"] = linear_form_text(m.basis, chi);
  p["chi_vector"] = chi;
  if (!inv.quiet) s << manifold_header(m) << "chi: " << p["chi"].get<std::string>() << '\n';

  LaurentPoly sw4(m.basis);
  ObstructionReport report;
  if (const auto* product = std::get_if<ProductCaseSW>(&outcome)) {
    sw4 = product->poly;
    report = taubes_report_product(m);
    p["product_case"] = true;
    p["injective"] = true;
    if (!inv.quiet) {
      s << "product case: chi = 0, so X = M x S1 and SW4 = SW3\n";
    }
  } else {
    const auto& folded = std::get<FoldedSW>(outcome);
    EulerClass euler(m.basis, chi);
    sw4 = folded.poly;
    report = taubes_report(folded, m);
    p["product_case"] = false;
    p["pivot"] = m.basis.name(folded.quotient.pivot());
    p["modulus"] = folded.quotient.modulus();
    p["injective"] = is_injective_fold(m, euler);
    if (!inv.quiet) {
      s << "hypotheses: " << fold_hypotheses(m, chi).summary() << '\n'
        << "quotient: " << m.basis.name(folded.quotient.pivot()) << " mod "
        << folded.quotient.modulus() << '\n'
        << "injective: " << yes_no(p["injective"].get<bool>()) << '\n';
    }
  }
  p["sw4"] = to_text(sw4);

  if (!obstruct) {
    s << (inv.quiet ? "" : "sw4: ") << to_text(sw4) << '\n';
  } else {
    p["obstructed"] = report.obstructed;
    p["unit_classes"] = unit_classes_json(report.unit_classes);
    p["fibered_orbit"] = report.fibered_orbit;
    p["source"] = report.source;
    if (!inv.quiet) s << "sw4: " << to_text(sw4) << '\n';
    if (report.obstructed) {
      s << "verdict: OBSTRUCTED (no coefficient is +1 or -1; no symplectic "
           "structure with either orientation)\n";
    } else {
      s << "verdict: NOT OBSTRUCTED (unit classes:";
      for (const auto& e : report.unit_classes) {
        s << ' ' << monomial_text(m.basis, e);
      }
      s << ")\n";
    }
  }
  rec.text = s.str();
  rec.payload = std::move(p);
}

void run_bundle(const Invocation& inv, OutputRecord& rec) {
  const bool direct = inv.method == "direct" || inv.method == "both";
  const bool closed = inv.method == "closed" || inv.method == "both";

  std::ostringstream s;
  json p{{"command", "bundle"},
         {"genus", inv.genus},
         {"euler", inv.euler},
         {"method", inv.method}};
  std::optional<FoldedSW> d;
  std::optional<FoldedSW> c;
  if (direct) d = circle_bundle_sw_direct(inv.genus, inv.euler);
  if (closed) c = circle_bundle_sw_closed_form(inv.genus, inv.euler);
  const FoldedSW& any = d ? *d : *c;
  p["modulus"] = any.quotient.modulus();
  if (!inv.quiet) s << "bundle: " << any.source << '\n';
  if (d) {
    p["direct"] = to_text(d->poly);
    s << "direct: " << to_text(d->poly) << '\n';
  }
  if (c) {
    p["closed"] = to_text(c->poly);
    s << "closed: " << to_text(c->poly) << '\n';
  }
  if (d && c) {
    const bool match = equal_up_to_sign(*d, *c);
    p["match"] = match;
    s << (match ? "MATCH (up to sign)" : "MISMATCH") << '\n';
    if (!match) {
      rec.status = 1;
      rec.error = "error: DOMAIN: direct and closed-form results differ";
    }
  }
  rec.text = s.str();
  rec.payload = std::move(p);
}

void run_search(const Invocation& inv, KnotTable& table, OutputRecord& rec) {
  ThreeManifold m = load_spec(inv.file, table);
  SearchResult result = euler_search(m, inv.box);
  StabilizationNote note = stabilization_note(m, inv.box);

  std::ostringstream s;
  json entries = json::array();
  std::size_t width = 3;
  for (const auto& e : result.entries) {
    width = std::max(width, e.chi.to_text().size());
  }
  if (!inv.quiet) {
    s << manifold_header(m) << "box: " << result.box
      << "  entries: " << result.entries.size() << '\n';
    s << "chi" << std::string(width - 3 + 2, ' ')
      << "injective  obstructed  coefficients\n";
  }
  for (const auto& e : result.entries) {
    const std::string chi = e.chi.to_text();
    entries.push_back(json{{"chi", chi},
                           {"obstructed", e.obstructed},
                           {"injective", e.injective},
                           {"unit_classes", unit_classes_json(e.unit_classes)},
                           {"digest", e.digest}});
    if (!inv.quiet) {
      s << chi << std::string(width - chi.size() + 2, ' ')
        << yes_no(e.injective) << std::string(e.injective ? 8 : 9, ' ')
        << yes_no(e.obstructed) << std::string(e.obstructed ? 9 : 10, ' ')
        << e.digest << '\n';
    }
  }
  s << "all_obstructed: " << bool_text(result.all_obstructed) << '\n';
  if (!inv.quiet) s << note.text(m.basis) << '\n';

  json p = manifold_json(m);
  p["command"] = "search";
  p["box"] = result.box;
  p["all_obstructed"] = result.all_obstructed;
  p["entries"] = std::move(entries);
  p["note"] = note.text(m.basis);
  rec.text = s.str();
  rec.payload = std::move(p);
}

}  // namespace

ThreeManifold manifold_from_spec(const json& spec, KnotTable& knots,
                                 const std::string& default_name,
                                 const std::string& path) {
  if (!spec.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected object");
  for (const auto& [key, value] : spec.items()) {
    if (key != "name" && key != "base" && key != "sums" && key != "knots") {
      throw SchemaError(path + "/" + key, "unknown field");
    }
  }

  if (spec.contains("knots")) {
    const json& ks = spec["knots"];
    if (!ks.is_array()) throw SchemaError(path + "/knots", "expected array");
    for (std::size_t i = 0; i < ks.size(); ++i) {
      knots.add(knot_from_json(ks[i], path + "/knots/" + std::to_string(i)));
    }
  }

  if (!spec.contains("base")) throw SchemaError(path + "/base", "missing field");
  const json& base = spec["base"];
  ThreeManifold m = [&] {
    if (base.is_string()) {
      if (base.get<std::string>() != "t3") {
        throw SchemaError(path + "/base", "expected \"t3\" or {\"surface_x_s1\": g}");
      }
      return three_torus();
    }
    if (base.is_object() && base.size() == 1 && base.contains("surface_x_s1")) {
      if (!base["surface_x_s1"].is_number_integer()) {
        throw SchemaError(path + "/base/surface_x_s1", "expected integer");
      }
      return surface_times_circle(base["surface_x_s1"].get<std::int64_t>());
    }
    throw SchemaError(path + "/base", "expected \"t3\" or {\"surface_x_s1\": g}");
  }();

  if (spec.contains("sums")) {
    const json& sums = spec["sums"];
    if (!sums.is_array()) throw SchemaError(path + "/sums", "expected array");
    for (std::size_t i = 0; i < sums.size(); ++i) {
      const std::string at = path + "/sums/" + std::to_string(i);
      const json& s = sums[i];
      if (!s.is_object()) throw SchemaError(at, "expected object");
      for (const auto& [key, value] : s.items()) {
        if (key != "knot" && key != "meridian") {
          throw SchemaError(at + "/" + key, "unknown field");
        }
      }
      if (!s.contains("knot") || !s["knot"].is_string()) {
        throw SchemaError(at + "/knot", "expected string");
      }
      if (!s.contains("meridian") || !s["meridian"].is_string()) {
        throw SchemaError(at + "/meridian", "expected string");
      }
      m = fiber_sum_with_knot(m, knots.lookup(s["knot"].get<std::string>()),
                              s["meridian"].get<std::string>());
    }
  }

  if (spec.contains("name")) {
    if (!spec["name"].is_string()) throw SchemaError(path + "/name", "expected string");
    m.name = spec["name"].get<std::string>();
  } else if (!default_name.empty()) {
    m.name = default_name;
  }
  return m;
}

ThreeManifold load_spec(const std::string& file, KnotTable& knots) {
  json spec = read_json_file(file);
  return manifold_from_spec(spec, knots,
                            std::filesystem::path(file).stem().string(),
                            file + ":");
}

OutputRecord execute(const std::vector<std::string>& args) {
  OutputRecord rec;
  for (const auto& a : args) rec.command += (rec.command.empty() ? "" : " ") + a;

  Invocation inv;
  CLI::App app{"Seiberg-Witten polynomials of 3-manifolds and of 4-manifolds "
               "with free circle actions",
               "swfold"};
  app.add_flag("--json", inv.json, "Emit a JSON payload");
  app.add_flag("--quiet", inv.quiet, "Print only the essential result");
  app.require_subcommand(1);
  app.fallthrough();

  auto* knot = app.add_subcommand("knot", "Inspect or register knots");
  knot->require_subcommand(1);
  knot->fallthrough();
  auto* knot_list = knot->add_subcommand("list", "List known knots");
  knot_list->fallthrough();
  auto* knot_show = knot->add_subcommand("show", "Show one knot");
  knot_show->add_option("name", inv.knot_name, "Knot name")->required();
  knot_show->fallthrough();
  auto* knot_register =
      knot->add_subcommand("register", "Validate and register knots from a file");
  knot_register->add_option("file", inv.file, "Registration JSON")->required();
  knot_register->fallthrough();

  auto* sw3 = app.add_subcommand("sw3", "Seiberg-Witten polynomial of a 3-manifold");
  sw3->add_option("spec", inv.file, "Manifold spec JSON")->required();
  sw3->fallthrough();

  auto* fold_cmd = app.add_subcommand("fold", "Fold SW3 by an Euler class");
  fold_cmd->add_option("spec", inv.file, "Manifold spec JSON")->required();
  fold_cmd->add_option("--chi", inv.chi, "Euler class, e.g. \"4*m1\"")->required();
  fold_cmd->fallthrough();

  auto* bundle = app.add_subcommand("bundle", "Circle bundle over a surface");
  bundle->add_option("--genus", inv.genus, "Surface genus g >= 1")->required();
  bundle->add_option("--euler", inv.euler, "Euler number n != 0")->required();
  bundle->add_option("--method", inv.method, "direct, closed or both")
      ->check(CLI::IsMember({"direct", "closed", "both"}));
  bundle->fallthrough();

  auto* obstruct = app.add_subcommand("obstruct", "Taubes obstruction for one fold");
  obstruct->add_option("spec", inv.file, "Manifold spec JSON")->required();
  obstruct->add_option("--chi", inv.chi, "Euler class")->required();
  obstruct->fallthrough();

  auto* search = app.add_subcommand("search", "Obstruction search over Euler classes");
  search->add_option("spec", inv.file, "Manifold spec JSON")->required();
  search->add_option("--box", inv.box, "Coordinate bound B >= 1");
  search->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    rec.text = (app.get_subcommands().empty() ? &app : app.get_subcommands().front())->help();
    return rec;
  } catch (const CLI::ParseError& e) {
    rec.status = 2;
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    rec.error = "error: USAGE: " + msg;
    rec.text = app.help();
    return rec;
  }
  rec.json = inv.json;

  try {
    KnotTable table = startup_table();
    if (knot->parsed()) {
      if (knot_list->parsed()) run_knot_list(inv, table, rec);
      if (knot_show->parsed()) run_knot_show(inv, table, rec);
      if (knot_register->parsed()) run_knot_register(inv, table, rec);
    } else if (sw3->parsed()) {
      run_sw3(inv, table, rec);
    } else if (fold_cmd->parsed()) {
      run_fold(inv, table, rec, false);
    } else if (obstruct->parsed()) {
      run_fold(inv, table, rec, true);
    } else if (bundle->parsed()) {
      run_bundle(inv, rec);
    } else if (search->parsed()) {
      run_search(inv, table, rec);
    }
  } catch (const Error& e) {
    rec.status = exit_status(e.kind());
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    rec.error = std::string("error: ") + error_code(e.kind()) + ": " + msg;
    rec.text.clear();
    rec.payload = json();
  }
  return rec;
}

void emit(const OutputRecord& record, bool json, std::ostream& out,
          std::ostream& err) {
  if (!record.error.empty()) {
    std::string buffer = record.error + "\n";
    if (record.status == 2 && !record.text.empty()) buffer += record.text;
    err << buffer << std::flush;
    return;
  }
  if (json && !record.payload.is_null()) {
    out << record.payload.dump(2) + "\n" << std::flush;
  } else {
    out << record.text << std::flush;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  OutputRecord record = execute(args);
  emit(record, record.json, out, err);
  return record.status;
}

}  // namespace swfold::cli
