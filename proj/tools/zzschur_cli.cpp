// Command-line front end: construct, dump, and verify extended zigzag Schur
// algebras. Exit codes: 0 all checks pass, 1 usage error, 2 check failure.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zzschur/oracle.hpp"
#include "zzschur/report.hpp"
#include "zzschur/tilting.hpp"

using namespace zzschur;
using nlohmann::json;

namespace {

struct Output {
  bool as_json = false;
  std::string path;

  void emit(const json& j, const std::string& text) const {
    std::string payload = as_json ? j.dump(2) + "\n" : text;
    if (path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream out(path);
      out << payload;
    }
  }
};

Multipartition parse_multipartition(const std::string& spec, int ell) {
  Multipartition mp;
  mp.parts.assign(ell + 1, {});
  std::stringstream ss(spec);
  std::string comp;
  int i = 0;
  while (std::getline(ss, comp, '/')) {
    if (i > ell) throw CLI::ValidationError("too many components in " + spec);
    if (comp != "-" && !comp.empty()) {
      std::stringstream cs(comp);
      std::string part;
      while (std::getline(cs, part, ',')) mp.parts[i].push_back(std::stoi(part));
    }
    ++i;
  }
  for (const auto& p : mp.parts)
    if (!is_partition(p))
      throw CLI::ValidationError("component is not a partition in " + spec);
  return mp;
}

// an eta basis element: entries "name@r,s" joined by ';'
int parse_eta_index(const SchurAlgebra& s, const std::string& spec) {
  std::vector<int> tuple;
  std::stringstream ss(spec);
  std::string entry;
  while (std::getline(ss, entry, ';')) {
    auto at = entry.find('@');
    auto comma = entry.find(',', at);
    if (at == std::string::npos || comma == std::string::npos)
      throw CLI::ValidationError("bad basis entry '" + entry +
                                 "' (want name@r,s)");
    std::string name = entry.substr(0, at);
    int r = std::stoi(entry.substr(at + 1, comma - at - 1));
    int sc = std::stoi(entry.substr(comma + 1));
    int b = s.base().index_of(name);
    if (r < 1 || r > s.n() || sc < 1 || sc > s.n())
      throw CLI::ValidationError("matrix index out of range in '" + entry + "'");
    tuple.push_back(s.matrix_index(b, r - 1, sc - 1));
  }
  std::sort(tuple.begin(), tuple.end());
  return s.gamma().index_of(tuple);
}

json weight_to_json(const Weight& w) {
  json out = json::array();
  for (const auto& c : w.comp) out.push_back(c);
  return out;
}

int emit_reports(const std::vector<VerifyReport>& reports, const Output& out) {
  bool pass = true;
  json arr = json::array();
  std::string text;
  for (const auto& r : reports) {
    pass = pass && r.all_pass();
    arr.push_back(report_to_json(r));
    text += report_to_text(r);
  }
  json j;
  j["schema"] = 1;
  j["pass"] = pass;
  j["reports"] = arr;
  out.emit(j, text);
  if (!pass) {
    for (const auto& r : reports)
      for (const auto& c : r.checks)
        if (!c.pass)
          std::cerr << "FAIL: " << r.title << ": " << c.name << " " << c.detail
                    << "\n";
  }
  return pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extended zigzag Schur algebra toolkit"};
  app.require_subcommand(1);

  int n = 2, d = 2, ell = 1, jobs = 1;
  std::string field_spec = "Q";
  Output out;

  auto add_common = [&](CLI::App* cmd, bool with_field = false) {
    cmd->add_option("-n", n, "matrix size n");
    cmd->add_option("-d", d, "divided power degree d");
    cmd->add_option("-l,--ell", ell, "zigzag length (number of vertices - 1)");
    if (with_field) cmd->add_option("-F,--field", field_spec, "Q or F<p>");
    cmd->add_flag("--json", out.as_json, "machine-readable output");
    cmd->add_option("--out", out.path, "write output to a file");
    cmd->add_option("--jobs", jobs, "worker threads for independent solves");
  };

  auto* cmd_dim = app.add_subcommand("dim", "algebra and module dimensions");
  add_common(cmd_dim);

  auto* cmd_basis = app.add_subcommand("basis", "dump the eta basis");
  add_common(cmd_basis);

  std::string lhs_spec, rhs_spec;
  auto* cmd_mult = app.add_subcommand("mult", "one eta-basis product");
  add_common(cmd_mult);
  cmd_mult->add_option("--lhs", lhs_spec, "left factor, entries name@r,s joined by ';'")
      ->required();
  cmd_mult->add_option("--rhs", rhs_spec, "right factor")->required();

  auto* cmd_kostka = app.add_subcommand("kostka", "k-matrix of tableau counts");
  add_common(cmd_kostka);

  std::vector<int> la_parts, mu_parts, nu_parts;
  auto* cmd_lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
  cmd_lr->add_option("--la", la_parts, "first partition")->required();
  cmd_lr->add_option("--mu", mu_parts, "second partition")->required();
  cmd_lr->add_option("--nu", nu_parts, "target partition (else a table)");
  cmd_lr->add_option("-n", n, "bound on the number of parts of nu");
  cmd_lr->add_flag("--json", out.as_json, "machine-readable output");
  cmd_lr->add_option("--out", out.path, "write output to a file");

  std::string la_spec;
  auto* cmd_char = app.add_subcommand("char-delta", "standard-module characters");
  add_common(cmd_char);
  cmd_char->add_option("--la", la_spec,
                       "multipartition, components '/'-separated, parts ','");

  std::string what;
  auto* cmd_dump = app.add_subcommand("dump", "JSON dump of a constructed object");
  cmd_dump->add_option("what", what, "algebra|dual|tilting")->required();
  cmd_dump->add_option("-l,--ell", ell, "zigzag length");
  cmd_dump->add_option("--out", out.path, "write output to a file");

  std::string leg;
  auto* cmd_verify = app.add_subcommand("verify", "run one verification leg");
  cmd_verify
      ->add_option("leg", leg,
                   "heredity|lzprime|integrality|forms|chars|kostka|dims|"
                   "tilting|ringel|props")
      ->required();
  add_common(cmd_verify, true);

  auto* cmd_report = app.add_subcommand("report", "run the full acceptance suite");
  cmd_report->add_flag("--json", out.as_json, "machine-readable output");
  cmd_report->add_option("--out", out.path, "write output to a file");
  cmd_report->add_option("--jobs", jobs, "worker threads for independent solves");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;  // all usage errors exit 1; --help exits 0
  }

  try {
    if (cmd_dim->parsed()) {
      auto z = zigzag(ell);
      SchurAlgebra s(&z, n, d);
      TiltingBimodule tilt(&z);
      long scrt = 0;
      if (d <= n) {
        SchurAlgebra sd(&tilt.dual_algebra(), n, d);
        scrt = build_scrT(s, sd, tilt).dim();
      }
      json j;
      j["schema"] = 1;
      j["n"] = n;
      j["d"] = d;
      j["ell"] = ell;
      j["dim_T"] = std::to_string(s.dim());
      j["dim_MnZ"] = std::to_string(s.matrix_algebra().dim());
      j["dim_tilting"] = std::to_string(tilt.dim());
      if (d <= n) j["dim_scrT"] = std::to_string(scrt);
      std::string text = "dim T^Z(" + std::to_string(n) + "," +
                         std::to_string(d) + ") = " + std::to_string(s.dim()) +
                         "  (ell = " + std::to_string(ell) + ")\n";
      out.emit(j, text);
      return 0;
    }
    if (cmd_basis->parsed()) {
      auto z = zigzag(ell);
      SchurAlgebra s(&z, n, d);
      json items = json::array();
      std::string text;
      for (int i = 0; i < s.dim(); ++i) {
        json e;
        e["name"] = s.index_name(i);
        e["parity"] = is_odd(s.parity(i)) ? "odd" : "even";
        e["left_weight"] = weight_to_json(s.left_weight(i));
        e["right_weight"] = weight_to_json(s.right_weight(i));
        items.push_back(e);
        text += s.index_name(i) + "\n";
      }
      json j;
      j["schema"] = 1;
      j["dim"] = std::to_string(s.dim());
      j["basis"] = items;
      out.emit(j, text);
      return 0;
    }
    if (cmd_mult->parsed()) {
      auto z = zigzag(ell);
      SchurAlgebra s(&z, n, d);
      int a = parse_eta_index(s, lhs_spec);
      int b = parse_eta_index(s, rhs_spec);
      Expansion p = s.mult(a, b);
      json terms = json::array();
      std::string text;
      for (const auto& [i, c] : p) {
        terms.push_back({{"coeff", c.get_str()}, {"basis", s.index_name(i)}});
        text += c.get_str() + " * " + s.index_name(i) + "\n";
      }
      if (p.empty()) text = "0\n";
      json j;
      j["schema"] = 1;
      j["product"] = terms;
      out.emit(j, text);
      return 0;
    }
    if (cmd_kostka->parsed()) {
      auto z = zigzag(ell);
      auto alph = colored_alphabets(z);
      auto doms = dominant_weights(n, d, ell);
      auto weights = all_weights(n, d, ell);
      json rows = json::array();
      std::string text;
      for (const auto& la : doms) {
        Character ch = kostka_character(alph, la, n);
        json row;
        row["la"] = la.str();
        json vals = json::array();
        text += la.str() + ":";
        for (const auto& mu : weights) {
          auto it = ch.find(mu);
          long k = it == ch.end() ? 0 : it->second;
          vals.push_back(std::to_string(k));
          text += " " + std::to_string(k);
        }
        text += "\n";
        row["k"] = vals;
        rows.push_back(row);
      }
      json j;
      j["schema"] = 1;
      json mus = json::array();
      for (const auto& mu : weights) mus.push_back(mu.str());
      j["mu_order"] = mus;
      j["rows"] = rows;
      out.emit(j, text);
      return 0;
    }
    if (cmd_lr->parsed()) {
      Partition la = trim(la_parts), mu = trim(mu_parts);
      json j;
      j["schema"] = 1;
      std::string text;
      if (!nu_parts.empty()) {
        long c = lr_coeff(la, mu, trim(nu_parts));
        j["coefficient"] = std::to_string(c);
        text = std::to_string(c) + "\n";
      } else {
        int total = 0;
        for (int p : la) total += p;
        for (int p : mu) total += p;
        json tbl = json::array();
        for (const auto& nu : partitions_of(total, n)) {
          long c = lr_coeff(la, mu, nu);
          if (c == 0) continue;
          json row;
          row["nu"] = nu;
          row["coeff"] = std::to_string(c);
          tbl.push_back(row);
          text += "c^{";
          for (size_t k = 0; k < nu.size(); ++k)
            text += (k ? "," : "") + std::to_string(nu[k]);
          text += "} = " + std::to_string(c) + "\n";
        }
        j["table"] = tbl;
      }
      out.emit(j, text);
      return 0;
    }
    if (cmd_char->parsed()) {
      auto z = zigzag(ell);
      auto alph = colored_alphabets(z);
      std::vector<Multipartition> las;
      if (la_spec.empty())
        las = dominant_weights(n, d, ell);
      else
        las.push_back(parse_multipartition(la_spec, ell));
      json rows = json::array();
      std::string text;
      for (const auto& la : las) {
        Character ch = delta_character(alph, la, n);
        json row;
        row["la"] = la.str();
        json terms = json::array();
        text += "ch Delta(" + la.str() + ") =";
        for (const auto& [w, c] : ch) {
          terms.push_back({{"weight", w.str()}, {"dim", std::to_string(c)}});
          text += " " + std::to_string(c) + "*z^(" + w.str() + ")";
        }
        text += "\n";
        row["character"] = terms;
        rows.push_back(row);
      }
      json j;
      j["schema"] = 1;
      j["characters"] = rows;
      out.emit(j, text);
      return 0;
    }
    if (cmd_dump->parsed()) {
      auto z = zigzag(ell);
      out.as_json = true;
      if (what == "algebra") {
        out.emit(algebra_to_json(z), "");
      } else if (what == "tilting") {
        TiltingBimodule t(&z);
        out.emit(tilting_to_json(t), "");
      } else if (what == "dual") {
        TiltingBimodule t(&z);
        out.emit(algebra_to_json(t.dual_algebra()), "");
      } else {
        std::cerr << "unknown dump target '" << what << "'\n";
        return 1;
      }
      return 0;
    }
    if (cmd_verify->parsed()) {
      std::vector<VerifyReport> reports;
      if (leg == "heredity") {
        reports.push_back(check_heredity(ell));
      } else if (leg == "lzprime") {
        reports.push_back(check_lzprime(ell));
      } else if (leg == "integrality") {
        reports.push_back(check_integrality(n, d, ell));
      } else if (leg == "forms") {
        reports.push_back(check_forms(ell));
      } else if (leg == "chars") {
        reports.push_back(check_characters(3, 2));
      } else if (leg == "kostka") {
        reports.push_back(check_kostka(n, d, ell));
      } else if (leg == "dims") {
        reports.push_back(check_dimension_identity(n, d, ell));
      } else if (leg == "tilting") {
        reports.push_back(check_tilting(n, d, ell));
      } else if (leg == "ringel") {
        reports.push_back(
            verify_ringel(n, d, ell, Field::parse(field_spec), jobs));
      } else if (leg == "props") {
        reports.push_back(check_properties());
      } else {
        std::cerr << "unknown verification leg '" << leg << "'\n";
        return 1;
      }
      return emit_reports(reports, out);
    }
    if (cmd_report->parsed()) {
      return emit_reports(acceptance_suite(jobs), out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency fault: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
