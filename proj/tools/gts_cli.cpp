// Command-line surface over the library: property checks, constructions,
// witness searches, law verification, and canonical formatting. Exit code
// 0 when the query holds or the construction succeeds, 1 on a legitimate
// negative verdict, 2 on any error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gts/connectives.hpp"
#include "gts/duality.hpp"
#include "gts/error.hpp"
#include "gts/format.hpp"
#include "gts/morphisms.hpp"
#include "gts/properties.hpp"
#include "gts/relations.hpp"

using gts::Space;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Space load_space(const std::string& path) { return gts::parse_space(read_file(path)); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

bool report_mode = false;

void emit(const json& doc, const std::string& human) {
  if (report_mode)
    std::cout << doc.dump() << '\n';
  else
    std::cout << human;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::runtime_error("bad index list '" + text + "' (expected i,j,k)");
    out.push_back(std::stoull(item));
  }
  if (out.empty()) throw std::runtime_error("empty index list");
  return out;
}

std::string witness_line(const Space& space, const gts::PropertyReport& report) {
  if (report.holds || report.witnesses.empty()) return "";
  const gts::PropertyWitness& w = report.witnesses.front();
  if (const auto* f = std::get_if<gts::SgtsFailure>(&w))
    return "  no " + std::string(f->is_max ? "max" : "min") + " witness for opens '" +
           space.open_label(f->i) + "', '" + space.open_label(f->j) + "'\n";
  if (const auto* h = std::get_if<gts::HausdorffPair>(&w))
    return "  points '" + space.point_label(h->x1) + "', '" + space.point_label(h->x2) +
           "' admit no disjoint positive opens\n";
  return "";
}

json witnesses_json(const gts::PropertyReport& report) {
  json out = json::array();
  for (const auto& w : report.witnesses) {
    if (const auto* f = std::get_if<gts::SgtsFailure>(&w))
      out.push_back({{"i", f->i}, {"j", f->j}, {"missing", f->is_max ? "max" : "min"}});
    else if (const auto* h = std::get_if<gts::HausdorffPair>(&w)) {
      json entry{{"x1", h->x1}, {"x2", h->x2}};
      if (h->opens) entry["opens"] = {h->opens->first, h->opens->second};
      out.push_back(entry);
    } else if (const auto* c = std::get_if<gts::ConnectednessWitness>(&w))
      out.push_back({{"g", c->g}, {"g_bar", c->g_bar}});
    else if (const auto* r = std::get_if<gts::RegularPair>(&w)) {
      json entry{{"x", r->x}, {"k", r->k}, {"vacuous", r->vacuous}};
      if (r->opens) entry["opens"] = {r->opens->first, r->opens->second};
      out.push_back(entry);
    }
  }
  return out;
}

int run_check(const std::string& file, const std::string& property) {
  Space space = load_space(file);
  gts::PropertyReport report;
  if (property == "sgts")
    report = gts::check_sgts(space);
  else if (property == "compact")
    report = gts::check_compact(space);
  else if (property == "connected")
    report = gts::check_connected(space);
  else
    report = gts::check_hausdorff(space);

  std::string human = property + ": " + (report.holds ? "holds" : "fails") + "\n";
  if (!report.holds) {
    human += witness_line(space, report);
    if (const auto* c = std::get_if<gts::ConnectednessWitness>(
            report.witnesses.empty() ? nullptr : &report.witnesses.front())) {
      std::string left, right;
      for (std::size_t x = 0; x < space.point_count(); ++x)
        (c->g[x] == 0 ? left : right) += " " + space.point_label(x);
      human += "  disconnection:" + left + " |" + right + "\n";
    }
  }
  emit(json{{"command", "check"},
            {"file", file},
            {"property", property},
            {"holds", report.holds},
            {"note", report.note},
            {"witnesses", witnesses_json(report)}},
       human);
  return report.holds ? 0 : 1;
}

int run_check_regular(const std::string& file, const std::string& phi_file) {
  Space space = load_space(file);
  gts::ClosedLink link =
      phi_file.empty()
          ? gts::closed_of(space)
          : [&] {
              gts::PhiDocument doc = gts::parse_phi(read_file(phi_file), space);
              return gts::closed_of(space, doc.closed_labels, doc.phi);
            }();
  gts::PropertyReport report = gts::check_regular(link);

  std::string human = std::string("regular: ") + (report.holds ? "holds" : "fails") + "\n";
  if (!report.holds && !report.witnesses.empty()) {
    const auto& r = std::get<gts::RegularPair>(report.witnesses.front());
    human += "  point '" + space.point_label(r.x) + "' and closed set '" +
             link.closed_space.open_label(r.k) + "' admit no separation\n";
  }
  emit(json{{"command", "check-regular"},
            {"file", file},
            {"phi", phi_file},
            {"holds", report.holds},
            {"witnesses", witnesses_json(report)}},
       human);
  return report.holds ? 0 : 1;
}

int run_op(const std::string& op, const std::vector<std::string>& files,
           const std::string& out_path, std::size_t cap) {
  const bool unary = op == "dual" || op == "closed";
  if (files.size() != (unary ? 1u : 2u))
    throw std::runtime_error("op " + op + " takes " + (unary ? "1 file" : "2 files"));

  Space result = [&] {
    if (op == "dual") return gts::dual(load_space(files[0]));
    if (op == "closed") return gts::closed_of(load_space(files[0])).closed_space;
    Space a = load_space(files[0]);
    Space b = load_space(files[1]);
    if (op == "limp") return gts::limp(a, b, cap);
    if (op == "tensor") return gts::tensor(a, b, cap);
    if (op == "tsum") return gts::tensor_sum(a, b, cap);
    if (op == "sum") return gts::sum(a, b);
    return gts::product(a, b);
  }();

  write_file(out_path, gts::serialize_space(result));
  emit(json{{"command", "op"},
            {"op", op},
            {"out", out_path},
            {"points", result.point_count()},
            {"opens", result.open_count()}},
       "wrote " + out_path + " (" + std::to_string(result.point_count()) + " points, " +
           std::to_string(result.open_count()) + " opens)\n");
  return 0;
}

int run_iso(const std::string& file_a, const std::string& file_b) {
  Space a = load_space(file_a);
  Space b = load_space(file_b);
  auto iso = gts::find_isomorphism(a, b);
  if (!iso) {
    emit(json{{"command", "iso"}, {"isomorphic", false}}, "not isomorphic\n");
    return 1;
  }
  std::string human = "isomorphic\n";
  json points = json::array(), opens = json::array();
  for (std::size_t x = 0; x < a.point_count(); ++x) {
    human += "  point " + a.point_label(x) + " -> " + b.point_label(iso->map.f[x]) + "\n";
    points.push_back({{"from", a.point_label(x)}, {"to", b.point_label(iso->map.f[x])}});
  }
  // f_bar maps b-opens back to a-opens; report it in the forward direction
  for (std::size_t k = 0; k < b.open_count(); ++k) {
    human += "  open " + a.open_label(iso->map.f_bar[k]) + " -> " + b.open_label(k) + "\n";
    opens.push_back({{"from", a.open_label(iso->map.f_bar[k])}, {"to", b.open_label(k)}});
  }
  emit(json{{"command", "iso"}, {"isomorphic", true}, {"points", points}, {"opens", opens}},
       human);
  return 0;
}

int run_subspace(const std::string& sub_file, const std::string& super_file) {
  Space sub = load_space(sub_file);
  Space super = load_space(super_file);
  auto witness = gts::find_subspace_witness(sub, super);
  if (!witness) {
    emit(json{{"command", "subspace"}, {"subspace", false}}, "not a subspace\n");
    return 1;
  }
  std::string human = "subspace\n";
  for (std::size_t y = 0; y < sub.point_count(); ++y)
    human += "  point " + sub.point_label(y) + " embeds at " +
             super.point_label(witness->point_embedding[y]) + "\n";
  for (std::size_t j = 0; j < super.open_count(); ++j)
    human += "  open " + super.open_label(j) + " restricts to " +
             sub.open_label(witness->nu[j]) + "\n";
  emit(json{{"command", "subspace"},
            {"subspace", true},
            {"point_embedding", witness->point_embedding},
            {"nu", witness->nu}},
       human);
  return 0;
}

int run_cover(const std::string& file, const std::string& family_list, bool minimal) {
  Space space = load_space(file);
  gts::OpenFamily family(space, parse_index_list(family_list));
  bool covers = gts::check_cover(family);
  json doc{{"command", "cover"}, {"family", family.indices}, {"covers", covers}};
  std::string human = std::string(covers ? "covers" : "does not cover") + "\n";
  if (minimal) {
    auto sub = gts::minimal_positive_subcover(family);
    if (sub) {
      human += "  minimal subcover positions:";
      json labels = json::array();
      for (std::size_t p : *sub) {
        human += " " + std::to_string(p) + " ('" +
                 space.open_label(family.indices[p]) + "')";
        labels.push_back(space.open_label(family.indices[p]));
      }
      human += "\n";
      doc["minimal_positions"] = *sub;
      doc["minimal_opens"] = labels;
    }
  }
  emit(doc, human);
  return covers ? 0 : 1;
}

int run_laws(const std::string& file_a, const std::string& file_b, std::size_t cap) {
  Space a = load_space(file_a);
  Space b = load_space(file_b);
  gts::LawReport report = gts::verify_identities(a, b, cap);
  std::string human;
  json laws = json::array();
  for (const auto& law : report.laws) {
    human += law.law + ": " +
             (law.skipped ? "skipped (over cap)" : law.holds ? "holds" : "fails") + "\n";
    laws.push_back({{"law", law.law}, {"holds", law.holds}, {"skipped", law.skipped}});
  }
  emit(json{{"command", "laws"},
            {"all_hold", report.all_hold},
            {"any_skipped", report.any_skipped},
            {"laws", laws}},
       human);
  return report.all_hold ? 0 : 1;
}

int run_fmt(const std::string& file) {
  std::string canonical = gts::serialize_space(load_space(file));
  emit(json{{"command", "fmt"}, {"canonical", canonical}}, canonical);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact finite spaces as rational membership matrices"};
  app.require_subcommand(1);
  app.add_flag("--report", report_mode, "one JSON document per command on stdout");
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized subcommands (reserved)");

  auto* check = app.add_subcommand("check", "verify a property of a space");
  std::string check_file, check_property;
  check->add_option("file", check_file, "space document")->required();
  check->add_option("--property", check_property, "property to verify")
      ->required()
      ->check(CLI::IsMember({"sgts", "compact", "connected", "hausdorff"}));

  auto* check_regular = app.add_subcommand("check-regular", "verify regularity over a link");
  std::string regular_file, regular_phi;
  check_regular->add_option("file", regular_file, "space document")->required();
  check_regular->add_option("--phi", regular_phi, "open-to-closed bijection file");

  auto* op = app.add_subcommand("op", "build a derived space and write it");
  std::string op_name, op_out;
  std::vector<std::string> op_files;
  std::size_t op_cap = gts::default_cap();
  op->add_option("operation", op_name, "dual|closed|limp|tensor|tsum|sum|product")
      ->required()
      ->check(CLI::IsMember({"dual", "closed", "limp", "tensor", "tsum", "sum", "product"}));
  op->add_option("files", op_files, "operand documents")->required();
  op->add_option("-o,--out", op_out, "output document")->required();
  op->add_option("--cap", op_cap, "carrier cap for function-space operations");

  auto* iso = app.add_subcommand("iso", "search for an isomorphism");
  std::string iso_a, iso_b;
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();

  auto* subspace = app.add_subcommand("subspace", "search for a subspace witness");
  std::string sub_file, super_file;
  subspace->add_option("sub", sub_file)->required();
  subspace->add_option("super", super_file)->required();

  auto* cover = app.add_subcommand("cover", "check a positive cover");
  std::string cover_file, cover_family;
  bool cover_minimal = false;
  cover->add_option("file", cover_file)->required();
  cover->add_option("--family", cover_family, "comma-separated open indices")->required();
  cover->add_flag("--minimal", cover_minimal, "also compute a minimum subcover");

  auto* laws = app.add_subcommand("laws", "verify the algebraic law suite on a pair");
  std::string laws_a, laws_b;
  std::size_t laws_cap = gts::default_cap();
  laws->add_option("a", laws_a)->required();
  laws->add_option("b", laws_b)->required();
  laws->add_option("--cap", laws_cap, "carrier cap for function-space laws");

  auto* fmt = app.add_subcommand("fmt", "print the canonical form of a document");
  std::string fmt_file;
  fmt->add_option("file", fmt_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(check_file, check_property);
    if (check_regular->parsed()) return run_check_regular(regular_file, regular_phi);
    if (op->parsed()) return run_op(op_name, op_files, op_out, op_cap);
    if (iso->parsed()) return run_iso(iso_a, iso_b);
    if (subspace->parsed()) return run_subspace(sub_file, super_file);
    if (cover->parsed()) return run_cover(cover_file, cover_family, cover_minimal);
    if (laws->parsed()) return run_laws(laws_a, laws_b, laws_cap);
    if (fmt->parsed()) return run_fmt(fmt_file);
  } catch (const gts::Error& e) {
    if (report_mode) {
      json doc{{"error", gts::to_string(e.kind())}, {"message", e.what()}};
      if (e.line) doc["line"] = e.line;
      if (e.col) doc["col"] = e.col;
      std::cout << doc.dump() << '\n';
    }
    std::cerr << "error: " << e.what();
    if (e.line) std::cerr << " (line " << e.line << ")";
    std::cerr << "\n";
    return 2;
  } catch (const std::exception& e) {
    if (report_mode) std::cout << json{{"error", "io"}, {"message", e.what()}}.dump() << '\n';
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
