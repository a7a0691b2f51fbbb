// Command-line frontend: count, enumerate, verify, mutate, export-ar.

#include "siltsms/classify.hpp"
#include "siltsms/errors.hpp"
#include "siltsms/root_data.hpp"

#include "CLI11.hpp"

#include <climits>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace siltsms;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
  std::string type_label;
  int d = 1;
  std::string field = "rationals";
  std::string format = "json";
  int workers = default_workers();
  long budget = 0;
  std::string output;
  std::string orientation;
  std::string kind = "sms";
  std::string input;
  std::string ambient = "derived";
  int max_nodes = 200;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

nlohmann::json big_json(const BigInt& v) {
  if (v <= BigInt(LLONG_MAX) && v >= BigInt(LLONG_MIN)) return v.convert_to<long long>();
  return v.str();
}

Field parse_field(const std::string& text) {
  if (text == "rationals" || text == "Q") return Field::rationals();
  std::string digits = text;
  if (!digits.empty() && (digits[0] == 'F' || digits[0] == 'p')) digits = digits.substr(1);
  if (!digits.empty() && digits[0] == '=') digits = digits.substr(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("field must be 'rationals' or a prime such as 7 or F7");
  return Field::prime(static_cast<std::uint32_t>(std::stoul(digits)));
}

// "1>2,3>2" with 1-based vertices.
std::vector<Arrow> parse_orientation(const std::string& text) {
  std::vector<Arrow> arrows;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto gt = item.find('>');
    if (gt == std::string::npos) throw UsageError("orientation entries look like 1>2");
    try {
      arrows.push_back({std::stoi(item.substr(0, gt)) - 1, std::stoi(item.substr(gt + 1)) - 1});
    } catch (const std::logic_error&) {
      throw UsageError("orientation entries look like 1>2");
    }
  }
  return arrows;
}

RootDatum require_type(const RunConfig& cfg) {
  if (cfg.type_label.empty()) throw UsageError("--type is required for this command");
  return make_root_datum(cfg.type_label);
}

std::shared_ptr<const DerivedCategory> derived_for(const RunConfig& cfg, const RootDatum& datum) {
  if (!datum.simply_laced) throw UnsupportedError("enumeration requires simply-laced; use `count`");
  const Quiver q = cfg.orientation.empty() ? Quiver::default_orientation(datum)
                                           : Quiver::with_orientation(datum, parse_orientation(cfg.orientation));
  return make_derived(q, parse_field(cfg.field));
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageError("format '" + cfg.format + "' is not available for this command; use one of " + list);
}

struct Output {
  std::string text;
  int status = kExitOk;
};

Output run_count(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv", "text"});
  std::vector<DynkinType> types;
  if (cfg.type_label.empty())
    types = all_types_up_to_rank(8);
  else
    types.push_back(DynkinType::parse(cfg.type_label));
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream csv, text;
  csv << "type,rank,coxeter_number,d,fuss_catalan,fuss_catalan_positive\n";
  for (const auto& t : types) {
    const RootDatum datum = make_root_datum(t);
    const BigInt full = fuss_catalan(datum, cfg.d, CountVariant::full);
    const BigInt pos = fuss_catalan(datum, cfg.d, CountVariant::positive);
    if (full != family_closed_form(datum, cfg.d, CountVariant::full) ||
        pos != family_closed_form(datum, cfg.d, CountVariant::positive))
      throw TheoremViolation("closed form disagrees with the product formula for " + t.label());
    rows.push_back({{"type", t.label()},
                    {"rank", datum.rank},
                    {"coxeter_number", datum.coxeter_number},
                    {"exponents", datum.exponents},
                    {"fuss_catalan", big_json(full)},
                    {"fuss_catalan_positive", big_json(pos)}});
    csv << t.label() << ',' << datum.rank << ',' << datum.coxeter_number << ',' << cfg.d << ',' << full << ',' << pos
        << '\n';
    text << t.label() << " d=" << cfg.d << ": full " << full << ", positive " << pos << '\n';
  }
  if (cfg.format == "csv") return {csv.str()};
  if (cfg.format == "text") return {text.str()};
  return {nlohmann::json{{"command", "count"}, {"d", cfg.d}, {"results", rows}}.dump(2) + "\n"};
}

Output run_enumerate(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv", "text"});
  const Kind kind = parse_kind(cfg.kind);
  const RootDatum datum = require_type(cfg);
  auto dc = derived_for(cfg, datum);
  Classifier c(dc, cfg.d);
  const auto sets = c.enumerate(kind, {cfg.workers, cfg.budget});
  if (cfg.format == "csv") return {object_sets_csv(*dc, sets)};
  if (cfg.format == "text") {
    std::ostringstream out;
    for (const auto& s : sets) {
      for (std::size_t i = 0; i < s.elements.size(); ++i) out << (i ? " " : "") << dc->describe(s.elements[i]);
      out << '\n';
    }
    out << sets.size() << " sets\n";
    return {out.str()};
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : sets) arr.push_back(object_set_json(*dc, s));
  nlohmann::json j = {{"command", "enumerate"}, {"type", datum.type.label()}, {"d", cfg.d},
                      {"kind", to_string(kind)},  {"count", sets.size()},        {"sets", arr}};
  return {j.dump(2) + "\n"};
}

Output run_verify(const RunConfig& cfg) {
  require_format(cfg, {"json", "text"});
  const RootDatum datum = require_type(cfg);
  auto dc = derived_for(cfg, datum);
  Classifier c(dc, cfg.d);
  const Report r = verify_bijections(c, {cfg.workers, cfg.budget});
  const int status = r.all_pass() ? kExitOk : kExitCheckFailed;
  if (cfg.format == "text") {
    std::ostringstream out;
    for (const auto& [k, v] : r.counts) out << k << ": " << v << '\n';
    out << "fuss_catalan: " << r.fuss_catalan << "\nfuss_catalan_positive: " << r.fuss_catalan_positive << '\n';
    for (const auto& chk : r.checks)
      out << (chk.pass ? "PASS " : "FAIL ") << chk.name << (chk.pass ? "" : " " + chk.witness.dump()) << '\n';
    return {out.str(), status};
  }
  nlohmann::json j = r.to_json();
  j["command"] = "verify";
  return {j.dump(2) + "\n", status};
}

Output run_mutate(const RunConfig& cfg) {
  require_format(cfg, {"json", "dot"});
  if (cfg.input.empty()) throw UsageError("--input is required for mutate");
  std::ifstream in(cfg.input);
  if (!in) throw UsageError("cannot read " + cfg.input);
  nlohmann::json payload;
  try {
    payload = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("input is not valid JSON: ") + e.what());
  }
  RunConfig local = cfg;
  if (local.type_label.empty()) local.type_label = payload.value("type", "");
  const RootDatum datum = require_type(local);
  auto dc = derived_for(local, datum);
  const ExcSequence start = sequence_from_json(*dc, payload.at("sequence"));
  if (auto chk = is_exceptional_sequence(*dc, start); !chk.ok)
    throw UsageError("input is not an exceptional sequence: " + chk.witness);
  if (cfg.format == "dot") return {braid_orbit_dot(*dc, start, cfg.max_nodes)};

  std::vector<ExcSequence> trace = {start};
  for (const auto& step : payload.value("steps", nlohmann::json::array())) {
    const std::string dir = step.at("direction").get<std::string>();
    if (dir != "left" && dir != "right") throw UsageError("direction must be left or right");
    trace.push_back(mutate(*dc, trace.back(), step.at("position").get<int>(),
                           dir == "left" ? MutationDirection::left : MutationDirection::right));
  }
  if (payload.contains("mu_rev")) {
    const std::string sign = payload["mu_rev"].get<std::string>();
    if (sign != "plus" && sign != "minus") throw UsageError("mu_rev must be plus or minus");
    auto rev = mu_rev_trace(*dc, trace.back(), sign == "plus" ? Sign::plus : Sign::minus);
    trace.insert(trace.end(), rev.begin() + 1, rev.end());
  }
  nlohmann::json j = {{"command", "mutate"}, {"type", datum.type.label()}, {"trace", trace_json(*dc, trace)}};
  return {j.dump(2) + "\n"};
}

Output run_export_ar(const RunConfig& cfg) {
  require_format(cfg, {"dot", "json"});
  const RootDatum datum = require_type(cfg);
  auto dc = derived_for(cfg, datum);
  if (cfg.ambient == "derived") {
    const WindowSpec w{WindowKind::plain, 1 - cfg.d, 0};
    if (cfg.format == "dot") return {dc->ar_quiver_dot(w)};
    nlohmann::json objs = nlohmann::json::array();
    for (const auto& s : dc->indecomposables_in(w))
      objs.push_back({{"dim_vector", dc->catalog().dim_vector(s.ind)}, {"shift", s.shift}});
    nlohmann::json j = {{"command", "export-ar"}, {"type", datum.type.label()}, {"ambient", "derived"},
                        {"d", cfg.d}, {"size", objs.size()}, {"objects", objs}};
    return {j.dump(2) + "\n"};
  }
  if (cfg.ambient != "minus" && cfg.ambient != "plus") throw UsageError("ambient must be derived, minus or plus");
  OrbitCategory oc(dc, cfg.ambient == "minus" ? Ambient::minus : Ambient::plus, cfg.d);
  if (cfg.format == "dot") return {oc.ar_quiver_dot()};
  nlohmann::json j = oc.census_json();
  j["command"] = "export-ar";
  j["type"] = datum.type.label();
  return {j.dump(2) + "\n"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Silting objects, simple-minded collections and systems for Dynkin quivers"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto common = [&](CLI::App* sub, bool type_required) {
    auto* t = sub->add_option("--type", cfg.type_label, "Dynkin type such as A3, D4, E6");
    if (type_required) t->required();
    sub->add_option("--d", cfg.d, "Degree parameter d >= 1")->check(CLI::PositiveNumber);
    sub->add_option("--field", cfg.field, "'rationals' or a prime p");
    sub->add_option("--format", cfg.format, "json, csv, dot or text");
    sub->add_option("--workers", cfg.workers, "Worker threads (default from SILTSMS_WORKERS)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget", cfg.budget, "Maximum search nodes")->check(CLI::PositiveNumber);
    sub->add_option("--output", cfg.output, "Write the artifact here instead of stdout");
    sub->add_option("--orientation", cfg.orientation, "Arrow list such as 1>2,3>2 (1-based)");
  };

  auto* count = app.add_subcommand("count", "Fuss-Catalan counts from the product and closed formulas");
  common(count, false);
  auto* enumerate = app.add_subcommand("enumerate", "List all sets of one kind");
  common(enumerate, true);
  enumerate->add_option("--kind", cfg.kind, "silting, d_term_silting, smc, smc_plain, sms, ct, homleq0, homleq0_plain")
      ->required();
  auto* verify = app.add_subcommand("verify", "Enumerate every family and cross-check the bijections");
  common(verify, true);
  auto* mut = app.add_subcommand("mutate", "Apply mutations to an exceptional sequence read from JSON");
  common(mut, false);
  mut->add_option("--input", cfg.input, "JSON with type, sequence, steps and optional mu_rev")->required();
  mut->add_option("--max-nodes", cfg.max_nodes, "Node limit for the braid orbit graph (dot format)")
      ->check(CLI::PositiveNumber);
  auto* ar = app.add_subcommand("export-ar", "AR quiver of a window or an orbit category");
  common(ar, true);
  ar->add_option("--ambient", cfg.ambient, "derived, minus or plus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Output out;
    if (*count) {
      out = run_count(cfg);
    } else if (*enumerate) {
      out = run_enumerate(cfg);
    } else if (*verify) {
      out = run_verify(cfg);
    } else if (*mut) {
      if (mut->count("--format") == 0) cfg.format = "json";
      out = run_mutate(cfg);
    } else {
      if (ar->count("--format") == 0) cfg.format = "dot";
      out = run_export_ar(cfg);
    }
    if (cfg.output.empty()) {
      std::cout << out.text;
    } else {
      std::ofstream file(cfg.output);
      if (!file) throw UsageError("cannot write " + cfg.output);
      file << out.text;
    }
    return out.status;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    // Usage errors, unknown types and unsupported requests.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}
