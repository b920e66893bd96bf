// mtcm: Mumford-Tate lattices, reflex data and theorem checks for CM types.
//
// Exit codes: 0 ok, 1 invalid input, 2 internal invariant violated, 64 usage error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mtcm/atlas.hpp"
#include "mtcm/error.hpp"
#include "mtcm/io.hpp"
#include "mtcm/mumford_tate.hpp"

namespace {

using namespace mtcm;

constexpr int kExitInvalid = 1;
constexpr int kExitInternal = 2;
constexpr int kExitUsage = 64;

std::string join(const auto& xs, const char* sep = " ") {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : xs) {
    if (!first) out << sep;
    out << x;
    first = false;
  }
  return out.str();
}

void print_lattice(std::ostream& out, const IntegerLattice& lattice) {
  for (const auto& row : lattice.basis().to_rows()) out << "  [" << join(row) << "]\n";
}

CmType require_type(const io::ResolvedInput& in) {
  if (!in.type) fail(ErrorCode::ParseError, "input has no CM type (fields 'c' and 'phi' are required)");
  return *in.type;
}

int cmd_validate(const std::string& file, std::size_t cap) {
  std::cout << "file: " << std::filesystem::path(file).filename().string() << "\n";
  io::InputDocument doc;
  try {
    doc = io::load_input(file);
  } catch (const Error& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return kExitInvalid;
  }

  GroupPtr group;
  try {
    group = make_group(doc.group, cap);
  } catch (const Error& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return kExitInvalid;
  }
  std::cout << "group: " << group->description() << " (order " << group->order() << ")\n";
  std::cout << "elements:\n";
  for (Element a = 0; a < group->order(); ++a)
    std::cout << "  " << a << ": " << group->label(a) << "\n";

  try {
    const io::ResolvedInput in = io::resolve(doc, cap);
    if (!in.datum) {
      std::cout << "status: valid group (no CM datum given)\n";
      return 0;
    }
    const CmFieldDatum& d = *in.datum;
    std::cout << "H: " << join(d.h.elements()) << "\n";
    std::cout << "c: " << d.c << "\n";
    std::cout << "cosets: " << d.sigma.size() << " (reps " << join(d.sigma.reps()) << ")\n";
    std::cout << "g: " << d.g_dim << "\n";
    if (in.type) {
      std::cout << "phi: " << join(in.type->phi) << "\n";
      std::cout << "status: valid CM type\n";
    } else {
      std::cout << "status: valid CM datum\n";
    }
    return 0;
  } catch (const Error& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return is_internal(e.code()) ? kExitInternal : kExitInvalid;
  }
}

int cmd_mt(const std::string& file, bool json, std::size_t cap) {
  const CmType t = require_type(io::resolve(io::load_input(file), cap));
  if (json) {
    std::cout << io::render(io::mt_json(t));
    return 0;
  }
  const IntegerLattice mt = mt_lattice(t);
  const auto descent = primitive_descent(t);
  std::cout << "group: " << t.datum.group->description() << "  g: " << t.datum.g_dim << "\n";
  std::cout << "phi: " << join(t.phi) << "\n";
  std::cout << "mt_rank: " << mt.rank() << "\n";
  std::cout << "mt_lattice (HNF basis):\n";
  print_lattice(std::cout, mt);
  std::cout << "degenerate: " << (mt.rank() < t.datum.g_dim + 1 ? "yes" : "no")
            << " (convention: rank < g + 1 = " << t.datum.g_dim + 1 << ")\n";
  if (descent) {
    std::cout << "primitive: no (descends to H' = {" << join(descent->h_prime.elements(), ", ")
              << "}, phi' = " << join(descent->type.phi) << ")\n";
  } else {
    std::cout << "primitive: yes\n";
  }
  return 0;
}

int cmd_reflex(const std::string& file, bool json, std::size_t cap) {
  const CmType t = require_type(io::resolve(io::load_input(file), cap));
  const ReflexData r = reflex_type(t);
  if (json) {
    std::cout << io::render(io::reflex_json(r));
    return 0;
  }
  std::cout << "H_E: " << join(r.h_e.elements()) << "\n";
  std::cout << "reflex_degree: " << r.reflex_degree << "\n";
  std::cout << "phi_E: " << join(r.phi_e.phi) << " (coset reps of G/H_E: "
            << join(r.phi_e.datum.sigma.reps()) << ")\n";
  return 0;
}

int cmd_check(const std::string& file, bool json, std::size_t cap) {
  const CmType t = require_type(io::resolve(io::load_input(file), cap));
  const MtReport report = check_main_theorem(t);
  if (json) {
    std::cout << io::render(io::report_json(report));
  } else {
    std::cout << "group: " << t.datum.group->description() << " (order "
              << t.datum.group->order() << ")  H: " << join(t.datum.h.elements())
              << "  c: " << t.datum.c << "  g: " << t.datum.g_dim << "\n";
    std::cout << "phi: " << join(t.phi) << "\n";
    std::cout << "mu: [" << join(hodge_cocharacter(t)) << "]\n";
    std::cout << "mt_rank: " << report.mt_rank << "\n";
    std::cout << "degenerate: " << (report.degenerate ? "yes" : "no") << "\n";
    std::cout << "mt_lattice:\n";
    print_lattice(std::cout, report.mt_lattice);
    std::cout << "t0_lattice:\n";
    print_lattice(std::cout, report.t0_lattice);
    std::cout << "H_E: " << join(report.reflex.h_e.elements())
              << "  reflex_degree: " << report.reflex.reflex_degree
              << "  phi_E: " << join(report.reflex.phi_e.phi) << "\n";
    std::cout << "theorem (MT = T0): " << (report.theorem_holds ? "holds" : "FAILS") << "\n";
    std::cout << "factorization: " << (report.factorization_holds ? "holds" : "FAILS") << "\n";
    std::cout << "column identity: " << (report.column_identity_holds ? "holds" : "FAILS")
              << "\n";
    for (const auto& v : report.violations) std::cout << "violation: " << v << "\n";
  }
  const bool ok = report.theorem_holds && report.factorization_holds &&
                  report.column_identity_holds;
  return ok ? 0 : kExitInternal;
}

struct EnumerateArgs {
  std::string file;
  std::string family;
  std::size_t max_order = 0;
  bool dedupe = false;
  bool all_subfields = false;
  std::size_t threads = 0;
  std::string csv;
  std::string json;
};

int cmd_enumerate(const EnumerateArgs& a, std::size_t cap) {
  AtlasOptions opts;
  opts.dedupe = a.dedupe;
  opts.all_subfields = a.all_subfields;
  opts.threads = a.threads;
  opts.order_cap = cap;

  std::vector<AtlasRecord> records;
  if (!a.file.empty()) {
    const io::ResolvedInput in = io::resolve(io::load_input(a.file), cap);
    if (!in.datum) fail(ErrorCode::ParseError, "input has no CM datum (field 'c' is required)");
    records = tabulate_data({*in.datum}, opts);
  } else {
    records = tabulate_family(parse_family(a.family), a.max_order, opts);
  }

  if (!a.csv.empty()) write_file_atomic(a.csv, atlas_csv(records));
  if (!a.json.empty()) write_file_atomic(a.json, io::render(io::records_json(records)));
  if (a.csv.empty() && a.json.empty()) std::cout << atlas_csv(records);

  std::size_t failures = 0;
  for (const auto& r : records)
    if (!r.theorem || !r.factorization || !r.error.empty()) ++failures;
  std::cerr << records.size() << " records, " << failures << " failures\n";
  return failures == 0 ? 0 : kExitInternal;
}

struct WeightsArgs {
  std::string file;
  std::size_t m = 0, n = 0;
  long long r = 0;
  bool classes = false;
  bool json = false;
};

int cmd_weights(const WeightsArgs& a, std::size_t cap) {
  const CmType t = require_type(io::resolve(io::load_input(a.file), cap));
  const WeightMultiset w = motive_weights(t, a.m, a.n, a.r);
  std::optional<std::uint64_t> hodge, tate;
  if (a.classes) {
    hodge = invariant_class_dimension(t, a.m, a.n, a.r, ClassRoute::Hodge);
    tate = invariant_class_dimension(t, a.m, a.n, a.r, ClassRoute::Tate);
  }
  if (a.json) {
    io::Json j = io::weights_json(w);
    if (a.classes) {
      j["hodge_classes"] = *hodge;
      j["tate_classes"] = *tate;
      j["agree"] = *hodge == *tate;
    }
    std::cout << io::render(j);
  } else {
    std::cout << "V(" << a.m << "," << a.n << "," << a.r << "): " << w.total()
              << " weights, " << w.entries.size() << " distinct (last coordinate = Tate slot)\n";
    for (const auto& [weight, mult] : w.entries)
      std::cout << "  [" << join(weight) << "] x" << mult << "\n";
    if (a.classes) {
      std::cout << "hodge_classes: " << *hodge << "\n";
      std::cout << "tate_classes: " << *tate << "\n";
      std::cout << "agree: " << (*hodge == *tate ? "yes" : "no") << "\n";
    }
  }
  return (!a.classes || *hodge == *tate) ? 0 : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mumford-Tate lattices of CM types"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;

  auto* validate = app.add_subcommand("validate", "Validate an input file and print the element order");
  validate->add_option("FILE", file, "input JSON")->required();

  auto* mt = app.add_subcommand("mt", "Mumford-Tate lattice of a CM type");
  mt->add_option("FILE", file, "input JSON")->required();
  mt->add_flag("--json", json, "JSON output");

  auto* reflex = app.add_subcommand("reflex", "Reflex subgroup, degree and reflex type");
  reflex->add_option("FILE", file, "input JSON")->required();
  reflex->add_flag("--json", json, "JSON output");

  auto* check = app.add_subcommand("check", "Compare the MT lattice with the reflex-norm image");
  check->add_option("FILE", file, "input JSON")->required();
  check->add_flag("--json", json, "JSON output");

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Tabulate all CM types over a datum or family");
  auto* efile = enumerate->add_option("--file", ea.file, "input JSON with group, H, c");
  auto* efamily = enumerate->add_option("--family", ea.family,
                                        "cyclic | abelian-products | dihedral | dicyclic")
                      ->check(CLI::IsMember({"cyclic", "abelian-products", "abelian", "dihedral",
                                             "dicyclic"}));
  auto* emax = enumerate->add_option("--max-order", ea.max_order, "largest group order");
  efile->excludes(efamily);
  efamily->needs(emax);
  enumerate->add_flag("--dedupe", ea.dedupe, "one type per left-translation orbit");
  enumerate->add_flag("--all-subfields", ea.all_subfields, "let H range over all subgroups");
  enumerate->add_option("--threads", ea.threads, "worker threads (0 = all cores)");
  auto* ecsv = enumerate->add_option("--csv", ea.csv, "write CSV here");
  auto* ejson = enumerate->add_option("--json", ea.json, "write JSON here");
  ecsv->excludes(ejson);

  WeightsArgs wa;
  auto* weights = app.add_subcommand("weights", "Weights of V(m,n,r) and invariant classes");
  weights->add_option("FILE", wa.file, "input JSON")->required();
  weights->add_option("-m", wa.m, "copies of V")->required();
  weights->add_option("-n", wa.n, "copies of the dual of V")->required();
  weights->add_option("-r", wa.r, "Tate twist")->required();
  weights->add_flag("--classes", wa.classes, "print Hodge and Tate class dimensions");
  weights->add_flag("--json", wa.json, "JSON output");

  try {
    app.parse(argc, argv);
    if (enumerate->parsed() && ea.file.empty() && ea.family.empty())
      throw CLI::RequiredError("enumerate needs --file or --family");
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const std::size_t cap = io::order_cap_from_env();
    if (validate->parsed()) return cmd_validate(file, cap);
    if (mt->parsed()) return cmd_mt(file, json, cap);
    if (reflex->parsed()) return cmd_reflex(file, json, cap);
    if (check->parsed()) return cmd_check(file, json, cap);
    if (enumerate->parsed()) return cmd_enumerate(ea, cap);
    if (weights->parsed()) return cmd_weights(wa, cap);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_internal(e.code()) ? kExitInternal : kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
