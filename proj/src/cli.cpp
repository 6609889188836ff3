#include "joinmeet/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "joinmeet/hibi.hpp"
#include "joinmeet/koszul.hpp"

namespace joinmeet::cli {

using nlohmann::json;

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string builtin;
  std::size_t n = 0;
  std::string lattice_file;
  std::string format = "text";
  std::string field = "rational";
  unsigned long prime = CoefficientField::kDefaultPrime;
  std::size_t cap = 12;
  unsigned threads = 0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  bool structured() const { return format == "json"; }
  bool exact() const { return field == "rational"; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Lattice load_lattice(const RunConfig& config) {
  if (!config.builtin.empty() && !config.lattice_file.empty()) {
    throw InputError("give either --builtin or --lattice, not both");
  }
  if (!config.builtin.empty()) return builtin_lattice(config.builtin, config.n);
  if (!config.lattice_file.empty()) return parse_lattice_document(read_file(config.lattice_file));
  throw InputError("no lattice given; use --builtin NAME or --lattice FILE");
}

CoefficientField field_of(const RunConfig& config) {
  if (config.field == "rational") return CoefficientField::rational();
  if (config.field == "prime") return CoefficientField::prime(config.prime);
  throw InputError("unknown field mode '" + config.field + "'");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    auto last = item.find_last_not_of(" \t");
    out.push_back(item.substr(first, last - first + 1));
  }
  return out;
}

/// Linear forms from a comma list; `m` expands to every variable.
std::vector<Polynomial> parse_generators(const HibiRing& ring, const std::vector<std::string>& items) {
  std::vector<Polynomial> gens;
  for (const auto& item : items) {
    if (item == "m" && !ring.lattice().find("m")) {
      for (Element a : ring.lattice().linear_extension()) gens.push_back(ring.variable(a));
      continue;
    }
    Polynomial p = ring.parse(item);
    if (!p.is_linear_form()) throw NotLinear(p.to_string());
    gens.push_back(std::move(p));
  }
  return gens;
}

json labels_json(const Lattice& lattice, ElementSet s) { return lattice.labels_of(s); }

json polys_json(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

json lattice_json(const Lattice& lattice) {
  json covers = json::array();
  for (const auto& [a, b] : lattice.covers()) covers.push_back({lattice.label(a), lattice.label(b)});
  return {{"elements", lattice.labels()}, {"covers", covers}};
}

json sublattice_json(const Lattice& lattice, const Sublattice& s) {
  json middle = json::array();
  for (Element m : s.middle) middle.push_back(lattice.label(m));
  return {{"shape", s.shape == Sublattice::Shape::kPentagon ? "pentagon" : "diamond"},
          {"bottom", lattice.label(s.bottom)},
          {"top", lattice.label(s.top)},
          {"middle", middle},
          {"members", labels_json(lattice, s.members())}};
}

std::string describe(const Lattice& lattice, const Sublattice& s) {
  std::ostringstream os;
  os << lattice.format(s.members()) << " with bottom " << lattice.label(s.bottom) << ", top "
     << lattice.label(s.top);
  if (s.shape == Sublattice::Shape::kPentagon) {
    os << ", chain " << lattice.label(s.middle[1]) << " < " << lattice.label(s.middle[0]) << ", side "
       << lattice.label(s.middle[2]);
  }
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Ideal of H[L] as printed: variables when it is variable-generated,
/// otherwise the degree-1 basis.
std::string format_colon(const HibiRing& ring, const ResidueColonReport& r) {
  if (r.unit) return "(1)";
  if (r.variables) return ring.format_variables(*r.variables);
  return ring.format_ideal(r.degree1);
}

json colon_json(const HibiRing& ring, const ResidueColonReport& r) {
  json out{{"unit", r.unit},
           {"linear_generated", r.linear_generated},
           {"variable_generated", r.variable_generated},
           {"lifted_basis", polys_json(r.lifted->basis())},
           {"degree1", polys_json(r.degree1)},
           {"ideal", format_colon(ring, r)}};
  if (r.variables) out["variables"] = labels_json(ring.lattice(), *r.variables);
  if (r.nonlinear_element) out["nonlinear_element"] = r.nonlinear_element->to_string();
  return out;
}

std::vector<std::string> generator_strings(const ResidueIdeal& m) {
  std::vector<std::string> out;
  for (const auto& g : m.linear_generators) out.push_back(g.to_string());
  return out;
}

struct Emitter {
  const RunConfig& config;
  std::ostream& out;
  json doc;

  Emitter(const RunConfig& c, std::ostream& o) : config(c), out(o) {
    doc["command"] = c.command;
    doc["config"] = {{"builtin", c.builtin}, {"n", c.n},           {"lattice_file", c.lattice_file},
                     {"format", c.format},   {"field", c.field},   {"prime", c.prime},
                     {"cap", c.cap}};
    doc["arithmetic"] = c.exact() ? "exact" : "unverified arithmetic (mod " + std::to_string(c.prime) + ")";
    if (!c.exact() && !c.structured()) {
      out << "warning: unverified arithmetic modulo " << c.prime << "; rerun with --field rational to confirm\n";
    }
  }

  std::ostream& text() {
    static std::ostringstream sink;
    sink.str("");
    return config.structured() ? sink : out;
  }

  int finish(int code) {
    if (config.structured()) {
      auto elapsed = std::chrono::steady_clock::now() - config.start;
      doc["elapsed_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
      doc["exit_code"] = code;
      out << doc.dump(2) << '\n';
    }
    return code;
  }
};

// ---------------------------------------------------------------------------
// Commands

int cmd_check(const RunConfig& config, std::ostream& out) {
  Lattice lattice = load_lattice(config);
  Emitter em(config, out);
  bool modular = lattice.is_modular();
  bool distributive = lattice.is_distributive();
  auto pentagon = lattice.find_pentagon();
  auto diamond = lattice.find_diamond();
  Rank2Diamond rank2 = lattice.find_rank2_diamond();

  auto& t = em.text();
  t << "elements: " << lattice.format(ElementSet::full(lattice.size())) << " (" << lattice.size() << ")\n";
  t << "modular: " << (modular ? "true" : "false") << '\n';
  t << "distributive: " << (distributive ? "true" : "false") << '\n';
  t << "pure: " << (lattice.is_pure() ? "true" : "false") << '\n';
  t << "rank:";
  for (Element a : lattice.linear_extension()) t << ' ' << lattice.label(a) << '=' << lattice.rank(a);
  t << (lattice.is_pure() ? "\n" : "  (longest chain; lattice is not pure)\n");
  t << "pentagon sublattice: " << (pentagon ? describe(lattice, *pentagon) : "none") << '\n';
  t << "diamond sublattice: " << (diamond ? describe(lattice, *diamond) : "none") << '\n';
  if (rank2.diamond) {
    t << "rank-2 diamond: " << describe(lattice, *rank2.diamond) << ", rank gap "
      << lattice.rank(rank2.diamond->top) - lattice.rank(rank2.diamond->bottom) << '\n';
  } else {
    t << "rank-2 diamond: none (" << rank2.reason << ")\n";
  }

  em.doc["lattice"] = lattice_json(lattice);
  em.doc["modular"] = modular;
  em.doc["distributive"] = distributive;
  em.doc["pure"] = lattice.is_pure();
  json ranks;
  for (Element a = 0; a < lattice.size(); ++a) ranks[lattice.label(a)] = lattice.rank(a);
  em.doc["rank"] = ranks;
  em.doc["pentagon"] = pentagon ? sublattice_json(lattice, *pentagon) : json(nullptr);
  em.doc["diamond"] = diamond ? sublattice_json(lattice, *diamond) : json(nullptr);
  if (rank2.diamond) {
    em.doc["rank2_diamond"] = sublattice_json(lattice, *rank2.diamond);
    std::vector<std::string> interval;
    for (Element a : rank2.interval) interval.push_back(lattice.label(a));
    em.doc["rank2_diamond"]["interval"] = interval;
  } else {
    em.doc["rank2_diamond"] = nullptr;
    em.doc["rank2_diamond_reason"] = rank2.reason;
  }
  return em.finish(kOk);
}

int cmd_ideal(const RunConfig& config, std::ostream& out) {
  HibiRing ring(load_lattice(config), field_of(config));
  Emitter em(config, out);
  const auto& jm = ring.join_meet_ideal();
  auto& t = em.text();
  t << "join-meet ideal: " << jm.generators.size() << " binomial"
    << (jm.generators.size() == 1 ? "" : "s") << '\n';
  for (const auto& g : jm.generators) t << "  " << g.to_string() << '\n';
  t << "reduced Groebner basis (degrevlex): " << ring.join_meet_basis().basis().size() << " element"
    << (ring.join_meet_basis().basis().size() == 1 ? "" : "s") << '\n';
  for (const auto& g : ring.join_meet_basis().basis()) t << "  " << g.to_string() << '\n';

  em.doc["lattice"] = lattice_json(ring.lattice());
  em.doc["generators"] = polys_json(jm.generators);
  em.doc["reduced_basis"] = polys_json(ring.join_meet_basis().basis());
  return em.finish(kOk);
}

int cmd_colon(const RunConfig& config, const std::string& j_text, const std::string& by_text,
              std::ostream& out) {
  HibiRing ring(load_lattice(config), field_of(config));
  auto j_items = split_list(j_text);
  auto by_items = split_list(by_text);
  if (by_items.empty()) throw InputError("--by needs at least one linear form");
  ResidueIdeal j = ring.residue_ideal(parse_generators(ring, j_items));
  std::vector<Polynomial> by = parse_generators(ring, by_items);
  ResidueColonReport r = by.size() == 1 ? ring.colon(j, by.front()) : ring.colon(j, ring.residue_ideal(by));

  Emitter em(config, out);
  auto& t = em.text();
  t << ring.format_ideal(j.linear_generators) << " : " << ring.format_ideal(by) << " = ";
  if (r.unit) {
    t << "(1)\n";
  } else if (r.linear_generated) {
    t << format_colon(ring, r) << '\n';
  } else {
    t << "NOT generated by linear forms\n";
  }
  t << "  generated by linear forms: " << yes_no(r.linear_generated) << '\n';
  t << "  generated by variables: " << yes_no(r.variable_generated) << '\n';
  t << "  degree-1 part: " << ring.format_ideal(r.degree1) << '\n';
  if (r.nonlinear_element) t << "  basis element outside (I_L, degree-1 part): " << r.nonlinear_element->to_string() << '\n';
  t << "  lifted colon, reduced basis:\n";
  for (const auto& g : r.lifted->basis()) t << "    " << g.to_string() << '\n';

  em.doc["lattice"] = lattice_json(ring.lattice());
  em.doc["j"] = polys_json(j.linear_generators);
  em.doc["by"] = polys_json(by);
  em.doc["colon"] = colon_json(ring, r);
  return em.finish(kOk);
}

FiltrationSpec parse_filtration_document(const HibiRing& ring, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("filtration file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("ideals") || !doc["ideals"].is_array()) {
    throw InputError("filtration file needs an \"ideals\" array");
  }
  std::vector<std::vector<Polynomial>> members;
  for (const auto& entry : doc["ideals"]) {
    std::vector<std::string> items;
    if (entry.is_string()) {
      items.push_back(entry.get<std::string>());
    } else if (entry.is_array()) {
      for (const auto& g : entry) {
        if (!g.is_string()) throw InputError("filtration generators must be strings");
        items.push_back(g.get<std::string>());
      }
    } else {
      throw InputError("each ideal must be a list of polynomial strings");
    }
    members.push_back(parse_generators(ring, items));
  }
  return make_filtration(ring, members);
}

void print_family(std::ostream& t, const HibiRing& ring, const FiltrationSpec& family) {
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    t << "  [" << i << "] " << ring.format_ideal(family.members[i].linear_generators) << '\n';
  }
}

json family_json(const FiltrationSpec& family) {
  json ideals = json::array();
  for (const auto& m : family.members) ideals.push_back(generator_strings(m));
  return ideals;
}

json report_json(const HibiRing& ring, const FiltrationSpec& family, const VerificationReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"member", w.member},
                         {"sub", w.sub},
                         {"generator", w.generator.to_string()},
                         {"colon", w.colon},
                         {"equality", ring.format_ideal(family.members[w.sub].linear_generators) + " : " +
                                          ring.format_ideal(family.members[w.member].linear_generators) +
                                          " = " +
                                          ring.format_ideal(family.members[w.colon].linear_generators)}});
  }
  json failures = json::array();
  for (const auto& f : r.failures) {
    json candidates = json::array();
    for (const auto& c : f.candidates) {
      json entry{{"sub", c.sub}, {"reason", c.reason}, {"colon_degree1", polys_json(c.colon_degree1)}};
      if (c.nonlinear_element) entry["nonlinear_element"] = c.nonlinear_element->to_string();
      candidates.push_back(entry);
    }
    failures.push_back({{"member", f.member}, {"candidates", candidates}});
  }
  json dups = json::array();
  for (const auto& [a, b] : r.duplicates) dups.push_back({a, b});
  return {{"passed", r.passed},
          {"linear_forms", r.linear_forms},
          {"zero_and_maximal", r.has_zero_and_maximal},
          {"colon_condition", r.colon_condition},
          {"duplicates", dups},
          {"witnesses", witnesses},
          {"failures", failures},
          {"messages", r.messages}};
}

void print_report(std::ostream& t, const HibiRing& ring, const FiltrationSpec& family,
                  const VerificationReport& r) {
  auto pf = [](bool b) { return b ? "pass" : "FAIL"; };
  t << "condition 1, generated by linear forms: " << pf(r.linear_forms) << '\n';
  t << "condition 2, contains 0 and m: " << pf(r.has_zero_and_maximal) << '\n';
  t << "condition 3, cyclic step with colon in family: " << pf(r.colon_condition) << '\n';
  for (const auto& m : r.messages) t << "  note: " << m << '\n';
  t << "witnesses (" << r.witnesses.size() << "):\n";
  for (const auto& w : r.witnesses) {
    t << "  " << ring.format_ideal(family.members[w.sub].linear_generators) << " : "
      << w.generator.to_string() << " = " << ring.format_ideal(family.members[w.colon].linear_generators)
      << "   [member " << w.member << " from " << w.sub << ", colon is member " << w.colon << "]\n";
  }
  for (const auto& f : r.failures) {
    t << "no witness for " << ring.format_ideal(family.members[f.member].linear_generators) << ":\n";
    for (const auto& c : f.candidates) {
      t << "    via [" << c.sub << "]: " << c.reason;
      if (c.nonlinear_element) t << " (e.g. " << c.nonlinear_element->to_string() << ")";
      if (!c.colon_degree1.empty()) t << "; degree-1 part " << ring.format_ideal(c.colon_degree1);
      t << '\n';
    }
  }
  t << "verdict: " << (r.passed ? "pass" : "FAIL") << '\n';
}

int cmd_filtration_verify(const RunConfig& config, const std::string& path, std::ostream& out) {
  HibiRing ring(load_lattice(config), field_of(config));
  FiltrationSpec family = parse_filtration_document(ring, read_file(path));
  VerificationReport report = verify_filtration(ring, family);

  Emitter em(config, out);
  auto& t = em.text();
  t << "filtration: " << family.members.size() << " members"
    << (family.combinatorial() ? " (combinatorial)" : "") << '\n';
  print_family(t, ring, family);
  print_report(t, ring, family, report);

  em.doc["lattice"] = lattice_json(ring.lattice());
  em.doc["ideals"] = family_json(family);
  em.doc["combinatorial"] = family.combinatorial();
  em.doc["verification"] = report_json(ring, family, report);
  em.doc["verdict"] = report.passed ? "pass" : "fail";
  return em.finish(report.passed ? kOk : kVerdictFailed);
}

int cmd_filtration_search(const RunConfig& config, std::ostream& out) {
  HibiRing ring(load_lattice(config), field_of(config));
  SearchResult result = search_combinatorial(ring, {config.cap, config.threads});

  Emitter em(config, out);
  auto& t = em.text();
  em.doc["lattice"] = lattice_json(ring.lattice());
  em.doc["subsets_examined"] = result.subsets_examined;
  em.doc["colon_computations"] = result.colon_computations;
  em.doc["admissible_moves"] = result.admissible_moves;
  em.doc["survivors"] = result.survivors;
  if (!result.filtration) {
    t << "none (certified, " << result.subsets_examined << " subsets examined)\n";
    t << "  colon computations: " << result.colon_computations << ", admissible moves: "
      << result.admissible_moves << ", surviving subsets: " << result.survivors << '\n';
    em.doc["verdict"] = "none";
    return em.finish(kVerdictFailed);
  }
  t << "found combinatorial Koszul filtration with " << result.filtration->members.size() << " members ("
    << result.subsets_examined << " subsets examined)\n";
  print_family(t, ring, *result.filtration);
  print_report(t, ring, *result.filtration, *result.verification);
  em.doc["verdict"] = "found";
  em.doc["ideals"] = family_json(*result.filtration);
  em.doc["verification"] = report_json(ring, *result.filtration, *result.verification);
  return em.finish(kOk);
}

int cmd_poset_ideals(const RunConfig& config, bool verify, std::ostream& out) {
  HibiRing ring(load_lattice(config), field_of(config));
  const Lattice& lattice = ring.lattice();
  auto ideals = lattice.poset_ideals();

  Emitter em(config, out);
  auto& t = em.text();
  t << ideals.size() << " poset ideals\n";
  json list = json::array();
  for (auto s : ideals) {
    t << "  " << lattice.format(s) << '\n';
    list.push_back(labels_json(lattice, s));
  }
  em.doc["lattice"] = lattice_json(lattice);
  em.doc["poset_ideals"] = list;
  int code = kOk;
  if (verify) {
    FiltrationSpec family = poset_ideal_filtration(ring);
    VerificationReport report = verify_filtration(ring, family);
    t << "Koszul filtration: " << (report.passed ? "pass" : "FAIL") << '\n';
    print_report(t, ring, family, report);
    em.doc["verification"] = report_json(ring, family, report);
    code = report.passed ? kOk : kVerdictFailed;
  }
  return em.finish(code);
}

int cmd_claim(const RunConfig& config, const std::string& ideal_text, const std::string& element,
              std::ostream& out) {
  HibiRing ring(load_lattice(config), field_of(config));
  const Lattice& lattice = ring.lattice();
  ElementSet ideal;
  for (const auto& l : split_list(ideal_text)) ideal.insert(lattice.index_of(l));
  Element e = lattice.index_of(element);
  if (!ideal.contains(e)) throw InputError("element must belong to the poset ideal");
  ClaimReport report = claim_check(ring, ideal, e);

  Emitter em(config, out);
  auto& t = em.text();
  t << "I = " << lattice.format(ideal) << ", e = " << element << ", J = " << lattice.format(ideal.without(e)) << '\n';
  t << "  e maximal in poset ideal I: " << yes_no(report.element_is_maximal) << '\n';
  t << "  e is the bottom of a pentagon/diamond: " << yes_no(report.element_is_obstruction_bottom) << '\n';
  t << "  (J) : e generated by linear forms: " << yes_no(report.linear_generated) << '\n';
  if (report.nonlinear_element) t << "  basis element outside the linear part: " << report.nonlinear_element->to_string() << '\n';
  t << "  degree-1 part equals span{a : a not >= e}: " << yes_no(report.span_matches) << '\n';
  em.doc["lattice"] = lattice_json(lattice);
  em.doc["ideal"] = labels_json(lattice, ideal);
  em.doc["element"] = element;
  em.doc["element_is_maximal"] = report.element_is_maximal;
  em.doc["element_is_obstruction_bottom"] = report.element_is_obstruction_bottom;
  em.doc["linear_generated"] = report.linear_generated;
  em.doc["span_matches"] = report.span_matches;
  em.doc["colon"] = colon_json(ring, report.colon);
  return em.finish(kOk);
}

}  // namespace

Lattice builtin_lattice(const std::string& name, std::size_t n) {
  if (name == "pentagon") return lattices::pentagon();
  if (name == "diamond") return lattices::diamond();
  if (name == "chain") return lattices::chain(n == 0 ? 3 : n);
  if (name == "boolean") return lattices::boolean(n == 0 ? 2 : n);
  if (name == "divisor") return lattices::divisor_lattice(n == 0 ? 12 : n);
  throw InputError("unknown builtin lattice '" + name + "'");
}

Lattice parse_lattice_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("lattice file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array()) {
    throw InputError("lattice file needs an \"elements\" array");
  }
  std::vector<std::string> labels;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw InputError("element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array()) throw InputError("\"covers\" must be an array");
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
        throw InputError("each cover must be a pair of labels");
      }
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  return Lattice::from_covers(labels, covers);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  if (const char* env = std::getenv("JOINMEET_SEARCH_CAP")) {
    try {
      config.cap = std::stoul(env);
    } catch (const std::exception&) {
      err << "error: JOINMEET_SEARCH_CAP is not a number\n";
      return kInputError;
    }
  }

  CLI::App app{"Join-meet ideals of finite lattices and Koszul filtrations of H[L]"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--builtin", config.builtin, "pentagon | diamond | chain | boolean | divisor");
    sub->add_option("--n", config.n, "size parameter for chain, boolean and divisor");
    sub->add_option("--lattice", config.lattice_file, "lattice file {\"elements\": [...], \"covers\": [...]}");
    sub->add_option("--format", config.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--field", config.field, "rational | prime")->check(CLI::IsMember({"rational", "prime"}));
    sub->add_option("--prime", config.prime, "modulus for --field prime");
    sub->add_option("--cap", config.cap, "largest lattice size the search accepts");
    sub->add_option("--threads", config.threads, "worker threads for the search (0 = all cores)");
  };

  auto* check = app.add_subcommand("check", "order-theoretic properties of a lattice");
  add_common(check);
  auto* ideal = app.add_subcommand("ideal", "join-meet ideal and its reduced Groebner basis");
  add_common(ideal);
  auto* colon = app.add_subcommand("colon", "colon ideal (J) : f in H[L]");
  add_common(colon);
  std::string j_text;
  std::string by_text;
  colon->add_option("--j", j_text, "comma-separated linear forms generating J (empty for 0, m for all)");
  colon->add_option("--by", by_text, "linear form, or comma-separated list for a colon by an ideal")->required();
  auto* filtration = app.add_subcommand("filtration", "verify or search Koszul filtrations");
  filtration->require_subcommand(1);
  auto* verify = filtration->add_subcommand("verify", "check a filtration file");
  add_common(verify);
  std::string filtration_file;
  verify->add_option("file", filtration_file, "filtration file {\"ideals\": [[...], ...]}")->required();
  auto* search = filtration->add_subcommand("search", "search for a combinatorial Koszul filtration");
  add_common(search);
  auto* posets = app.add_subcommand("posetideals", "list poset ideals");
  add_common(posets);
  bool verify_posets = false;
  posets->add_flag("--verify", verify_posets, "verify that the poset ideals form a Koszul filtration");
  auto* claim = app.add_subcommand("claim", "colon (J) : e for J = I minus a maximal element e");
  add_common(claim);
  std::string claim_ideal;
  std::string claim_element;
  claim->add_option("--ideal", claim_ideal, "comma-separated labels of the poset ideal I")->required();
  claim->add_option("--element", claim_element, "maximal element e of I")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    field_of(config);
    if (*check) return (config.command = "check", cmd_check(config, out));
    if (*ideal) return (config.command = "ideal", cmd_ideal(config, out));
    if (*colon) return (config.command = "colon", cmd_colon(config, j_text, by_text, out));
    if (*verify) return (config.command = "filtration verify", cmd_filtration_verify(config, filtration_file, out));
    if (*search) return (config.command = "filtration search", cmd_filtration_search(config, out));
    if (*posets) return (config.command = "posetideals", cmd_poset_ideals(config, verify_posets, out));
    if (*claim) return (config.command = "claim", cmd_claim(config, claim_ideal, claim_element, out));
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const LatticeError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NotLinear& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace joinmeet::cli
