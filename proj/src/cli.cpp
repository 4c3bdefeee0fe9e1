#include "hopfq/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>

#include "hopfq/galois.hpp"
#include "hopfq/hopfmod.hpp"
#include "hopfq/io.hpp"

namespace hopfq {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kInputError = 2;

json witness_json(const Witness& w) {
  json j;
  j["basis"] = w.basis_index;
  json lhs = json::array(), rhs = json::array();
  for (const auto& s : w.lhs) lhs.push_back(s.to_literal());
  for (const auto& s : w.rhs) rhs.push_back(s.to_literal());
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  return j;
}

json report_json(const AxiomReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks()) {
    json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    if (c.witness) j["witness"] = witness_json(*c.witness);
    checks.push_back(j);
  }
  return checks;
}

void print_report(std::ostream& out, const std::string& prefix,
                  const AxiomReport& report) {
  for (const auto& c : report.checks()) {
    out << "axiom " << prefix << c.name << ": " << (c.passed ? "PASS" : "FAIL");
    if (c.witness) out << " at " << c.witness->to_string();
    out << "\n";
  }
}

Field parse_field_flag(const std::string& text) {
  if (text == "QQ") return Field::rationals();
  std::string digits;
  if (text.rfind("GF", 0) == 0) {
    digits = text.substr(2);
    if (!digits.empty() && (digits[0] == ':' || digits[0] == ' '))
      digits = digits.substr(1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("unknown field '" + text + "', expected QQ or GF<p>");
  return Field::prime(static_cast<std::uint32_t>(std::stoul(digits)));
}

struct StructureInput {
  StructureDocument doc;
  HopfLike structure;
};

StructureInput load_structure(const std::string& path) {
  StructureDocument doc = parse_structure_file(path);
  HopfLike h = HopfLike::build(doc.structure);
  return {std::move(doc), std::move(h)};
}

int cmd_verify(const std::string& path, const std::string& flavor, bool as_json,
               std::ostream& out, std::ostream& err) {
  StructureDocument doc = parse_structure_file(path);

  AxiomReport preamble = preamble_report(doc.structure);
  AxiomReport suites;
  std::vector<std::string> flavors_run;
  bool flavor_found = true;

  if (preamble.all_passed()) {
    HopfLike h = HopfLike::build(doc.structure);
    bool coassoc = check_coassociativity(h).all_passed();
    bool assoc = check_associativity(h).all_passed();
    bool want_quasi = flavor == "quasi" || (flavor == "auto" && coassoc);
    bool want_coquasi = flavor == "coquasi" || (flavor == "auto" && assoc);
    if (flavor == "auto" && !coassoc && !assoc) {
      flavor_found = false;
      suites.append(check_coassociativity(h));
      suites.append(check_associativity(h));
    }
    if (want_quasi) {
      flavors_run.push_back("quasi");
      suites.append(check_coassociativity(h));
      suites.append(check_quasigroup_axioms(h));
    }
    if (want_coquasi) {
      flavors_run.push_back("coquasi");
      suites.append(check_associativity(h));
      suites.append(check_coquasigroup_axioms(h));
    }
  }

  bool ok = flavor_found && preamble.all_passed() && suites.all_passed();
  if (as_json) {
    json j;
    j["command"] = "verify";
    j["file"] = path;
    j["flavors"] = flavors_run;
    j["preamble"] = report_json(preamble);
    j["checks"] = report_json(suites);
    j["passed"] = ok;
    out << j.dump(2) << "\n";
  } else {
    print_report(out, "preamble/", preamble);
    print_report(out, "", suites);
    if (!flavor_found)
      err << "error: neither coassociative nor associative; no flavor applies\n";
    out << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kOk : kMathFailure;
}

int cmd_decide(const std::string& path, bool as_json, std::ostream& out,
               std::ostream& err) {
  StructureInput in = load_structure(path);
  DecisionVerdict verdict = decide(in.structure);

  std::string stored_antipode = "absent";
  if (in.structure.antipode() && verdict.antipode)
    stored_antipode =
        *in.structure.antipode() == *verdict.antipode ? "matches" : "differs";

  bool ok = verdict.classification != StructureClass::Neither &&
            !verdict.internal_inconsistency && stored_antipode != "differs";

  if (as_json) {
    json j;
    j["command"] = "decide";
    j["file"] = path;
    j["classification"] = structure_class_name(verdict.classification);
    j["also_hopf_algebra"] = verdict.also_hopf_algebra;
    json steps = json::array();
    for (const auto& s : verdict.trail) {
      json sj;
      sj["name"] = s.name;
      sj["passed"] = s.passed;
      if (!s.detail.empty()) sj["detail"] = s.detail;
      if (s.witness) sj["witness"] = witness_json(*s.witness);
      steps.push_back(sj);
    }
    j["trail"] = steps;
    if (!verdict.reason.empty()) j["reason"] = verdict.reason;
    if (verdict.antipode) j["antipode"] = verdict.antipode->to_text();
    j["stored_antipode"] = stored_antipode;
    if (verdict.internal_inconsistency)
      j["internal_inconsistency"] = *verdict.internal_inconsistency;
    out << j.dump(2) << "\n";
  } else {
    out << "classification: " << structure_class_name(verdict.classification)
        << "\n";
    if (verdict.also_hopf_algebra)
      out << "note: also a Hopf coquasigroup, i.e. an ordinary Hopf algebra\n";
    for (const auto& s : verdict.trail) {
      out << "step " << s.name << ": " << (s.passed ? "PASS" : "FAIL");
      if (!s.detail.empty()) out << " (" << s.detail << ")";
      if (s.witness) out << " at " << s.witness->to_string();
      out << "\n";
    }
    if (!verdict.reason.empty()) out << "reason: " << verdict.reason << "\n";
    if (verdict.antipode) {
      out << "reconstructed antipode:\n" << verdict.antipode->to_text();
      out << "stored antipode: " << stored_antipode << "\n";
    }
    if (verdict.internal_inconsistency)
      err << "internal inconsistency: " << *verdict.internal_inconsistency
          << "\n";
  }
  return ok ? kOk : kMathFailure;
}

int cmd_fundamental(const std::string& path, const std::string& module_name,
                    bool as_json, std::ostream& out, std::ostream& err) {
  StructureInput in = load_structure(path);
  const HopfLike& h = in.structure;
  if (!h.antipode()) {
    err << "error: structure carries no antipode\n";
    return kInputError;
  }

  Flavor flavor;
  if (check_coassociativity(h).all_passed() &&
      check_quasigroup_axioms(h).all_passed()) {
    flavor = Flavor::Quasigroup;
  } else if (check_associativity(h).all_passed() &&
             check_coquasigroup_axioms(h).all_passed()) {
    flavor = Flavor::Coquasigroup;
  } else {
    err << "error: structure is neither a Hopf quasigroup nor a Hopf "
           "coquasigroup; no fundamental decomposition applies\n";
    return kMathFailure;
  }

  HopfModule m = [&]() {
    if (module_name == "H") return regular_module(h, flavor);
    if (module_name == "HtensorH") return tensor_module(regular_module(h, flavor));
    for (const ModuleEntry& entry : in.doc.modules)
      if (entry.name == module_name)
        return HopfModule::build(h, flavor, entry.action, entry.coaction);
    throw ParseError("module '" + module_name +
                     "' not found (built-ins: H, HtensorH)");
  }();

  json j;
  j["command"] = "fundamental";
  j["file"] = path;
  j["module"] = module_name;
  j["dim"] = m.dim();

  if (flavor == Flavor::Quasigroup) {
    FundamentalQuasi fq = fundamental_iso_quasi(m);
    std::size_t d = fq.coinv.dim();
    bool dims_ok = m.dim() == d * h.dim();
    bool beta_matches = true;
    bool is_tensor_square = module_name == "HtensorH";
    if (is_tensor_square) {
      // identify H with H (x) 1 inside the coinvariants, then compare with beta
      LinMap into_coinv = compose(
          fq.coinv.coordinates(),
          tensor(h.id(), h.unit()).reshaped({h.dim()}, {h.dim() * h.dim()}));
      beta_matches =
          compose(fq.sigma, tensor(into_coinv, h.id())) == build_beta(h);
    }
    if (as_json) {
      j["flavor"] = "quasigroup";
      j["coinvariants_dim"] = d;
      j["dim_product_identity"] = dims_ok;
      j["round_trip"] = true;  // fundamental_iso_quasi verifies or throws
      if (is_tensor_square) j["beta_equals_sigma"] = beta_matches;
      out << j.dump(2) << "\n";
    } else {
      out << "flavor: quasigroup\n";
      out << "dim M = " << m.dim() << "\n";
      out << "dim coinvariants = " << d << "\n";
      out << "dim M = dim coinvariants * dim H: " << (dims_ok ? "yes" : "no")
          << "\n";
      out << "sigma o sigma_inv = id: yes\n";
      out << "sigma_inv o sigma = id: yes\n";
      if (is_tensor_square)
        out << "beta = sigma: " << (beta_matches ? "yes" : "no") << "\n";
    }
    return dims_ok && beta_matches ? kOk : kMathFailure;
  }

  FundamentalCoquasi fc = fundamental_iso_coquasi(m);
  std::size_t q = fc.quot.projection.rows();
  bool dims_ok = m.dim() == q * h.dim();
  if (as_json) {
    j["flavor"] = "coquasigroup";
    j["invariants_dim"] = q;
    j["dim_product_identity"] = dims_ok;
    j["eta_inv_well_defined"] = true;  // verified or thrown
    j["round_trip"] = true;
    out << j.dump(2) << "\n";
  } else {
    out << "flavor: coquasigroup\n";
    out << "dim M = " << m.dim() << "\n";
    out << "dim invariants = " << q << "\n";
    out << "dim M = dim invariants * dim H: " << (dims_ok ? "yes" : "no") << "\n";
    out << "eta_inv well-defined on relations: yes\n";
    out << "eta_inv o eta = id: yes\n";
    out << "eta o eta_inv = id: yes\n";
  }
  return dims_ok ? kOk : kMathFailure;
}

int cmd_dualize(const std::string& in_path, const std::string& out_path,
                std::ostream& out, std::ostream& err) {
  StructureInput in = load_structure(in_path);
  if (!in.doc.modules.empty())
    err << "warning: attached modules are not carried over to the dual\n";
  HopfLike dual = dualize(in.structure);
  StructureDocument doc{dual.raw(), {}};
  std::ofstream file(out_path);
  if (!file) {
    err << "error: cannot write '" << out_path << "'\n";
    return kInputError;
  }
  file << render_structure(doc);
  out << "wrote " << out_path << "\n";
  return kOk;
}

int cmd_loop(const std::string& table_path, const std::string& out_path,
             const std::string& field_flag, std::ostream& out,
             std::ostream& err) {
  Field field = parse_field_flag(field_flag);
  LoopTable table = parse_loop_table_file(table_path);
  HopfLike algebra = loop_algebra(table, field);
  StructureDocument doc{algebra.raw(), {}};
  std::ofstream file(out_path);
  if (!file) {
    err << "error: cannot write '" << out_path << "'\n";
    return kInputError;
  }
  file << render_structure(doc);
  out << "loop class: " << loop_class_name(classify_loop(table)) << "\n";
  out << "wrote " << out_path << "\n";
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"structure-constant toolkit for Hopf quasigroups and "
               "coquasigroups"};
  app.require_subcommand(1);

  std::string path, out_path, flavor = "auto", module_name = "H",
              field_flag = "QQ";
  bool as_json = false;

  CLI::App* verify = app.add_subcommand(
      "verify", "run the axiom suites on a structure file");
  verify->add_option("path", path)->required();
  verify->add_option("--flavor", flavor)
      ->check(CLI::IsMember({"quasi", "coquasi", "auto"}));
  verify->add_flag("--json", as_json);

  CLI::App* decide_cmd = app.add_subcommand(
      "decide", "classify a structure from its Galois maps, ignoring any "
                "stored antipode");
  decide_cmd->add_option("path", path)->required();
  decide_cmd->add_flag("--json", as_json);

  CLI::App* fundamental = app.add_subcommand(
      "fundamental", "decompose a Hopf module as (co)invariants tensor H");
  fundamental->add_option("path", path)->required();
  fundamental->add_option("--module", module_name);
  fundamental->add_flag("--json", as_json);

  CLI::App* dualize_cmd =
      app.add_subcommand("dualize", "write the dual structure");
  dualize_cmd->add_option("input", path)->required();
  dualize_cmd->add_option("output", out_path)->required();

  CLI::App* loop = app.add_subcommand(
      "loop", "build the loop algebra of a loop table file");
  loop->add_option("table", path)->required();
  loop->add_option("output", out_path)->required();
  loop->add_option("--field", field_flag);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*verify) return cmd_verify(path, flavor, as_json, out, err);
    if (*decide_cmd) return cmd_decide(path, as_json, out, err);
    if (*fundamental)
      return cmd_fundamental(path, module_name, as_json, out, err);
    if (*dualize_cmd) return cmd_dualize(path, out_path, out, err);
    if (*loop) return cmd_loop(path, out_path, field_flag, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << "\n";
    err << e.report().to_string();
    return kMathFailure;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kMathFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace hopfq
