// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "siltsms/classify.hpp"
#include "siltsms/errors.hpp"
#include "siltsms/root_data.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace siltsms;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::shared_ptr<const DerivedCategory> derived_for(const std::string& label) {
  return make_derived(Quiver::default_orientation(make_root_datum(label)), Field::rationals());
}

const SearchOptions kSearch{default_workers(), 0};

// Cases of the desk-scale classification check.
std::vector<std::pair<std::string, int>> desk_cases() {
  std::vector<std::pair<std::string, int>> out;
  for (const char* a : {"A1", "A2", "A3", "A4"})
    for (int d = 1; d <= 3; ++d) out.emplace_back(a, d);
  out.emplace_back("D4", 1);
  out.emplace_back("D4", 2);
  return out;
}

// verify_bijections results are shared by several criteria.
const std::map<std::pair<std::string, int>, Report>& desk_reports() {
  static const auto reports = [] {
    std::map<std::pair<std::string, int>, Report> m;
    for (const auto& [label, d] : desk_cases()) {
      Classifier c(derived_for(label), d);
      m.emplace(std::make_pair(label, d), verify_bijections(c, kSearch));
    }
    return m;
  }();
  return reports;
}

bool check_passed(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.pass;
  return false;
}

std::string where(const std::string& label, int d) { return label + " d=" + std::to_string(d); }

Outcome formula_identity() {
  Outcome o;
  long n = 0;
  for (const auto& t : all_types_up_to_rank(8)) {
    const RootDatum datum = make_root_datum(t);
    for (int d = 1; d <= 12; ++d)
      for (auto v : {CountVariant::full, CountVariant::positive}) {
        ++n;
        if (family_closed_form(datum, d, v) != fuss_catalan(datum, d, v)) o.fail(where(t.label(), d));
      }
  }
  if (o.pass) o.detail = std::to_string(n) + " (type, d, variant) triples agree";
  return o;
}

Outcome small_example(const std::string& label, int d, long expected) {
  Outcome o;
  Classifier c(derived_for(label), d);
  const auto sms = c.enumerate(Kind::sms, kSearch);
  if (static_cast<long>(sms.size()) != expected)
    o.fail("found " + std::to_string(sms.size()) + " sets, expected " + std::to_string(expected));
  const Report r = verify_bijections(c, kSearch);
  for (const auto& chk : r.checks)
    if (!chk.pass) o.fail(chk.name + " " + chk.witness.dump());
  if (o.pass) o.detail = std::to_string(expected) + " sets, " + std::to_string(r.checks.size()) + " checks pass";
  return o;
}

Outcome desk_counts() {
  Outcome o;
  for (const auto& [key, r] : desk_reports()) {
    for (const char* k : {"sms", "smc_minus_window", "silting"})
      if (BigInt(r.counts.at(k)) != r.fuss_catalan_positive) o.fail(where(key.first, key.second) + " " + k);
    if (BigInt(r.counts.at("cluster_tilting")) != r.fuss_catalan) o.fail(where(key.first, key.second) + " ct");
  }
  if (o.pass) o.detail = std::to_string(desk_reports().size()) + " cases";
  return o;
}

Outcome desk_checks(const std::vector<std::string>& names) {
  Outcome o;
  for (const auto& [key, r] : desk_reports())
    for (const auto& n : names)
      if (!check_passed(r, n)) o.fail(where(key.first, key.second) + " " + n);
  if (o.pass) o.detail = std::to_string(desk_reports().size()) + " cases";
  return o;
}

Outcome homleq0_equals_smc() {
  Outcome o;
  for (const char* label : {"A3", "A4"})
    for (int d = 1; d <= 2; ++d) {
      Classifier c(derived_for(label), d);
      for (auto [h, s] : {std::pair{Kind::homleq0_plain, Kind::smc_plain}, std::pair{Kind::homleq0_minus, Kind::smc_minus}}) {
        const auto a = c.enumerate(h, kSearch);
        const auto b = c.enumerate(s, kSearch);
        std::set<std::vector<Stalk>> ka, kb;
        for (const auto& x : a) ka.insert(x.elements);
        for (const auto& x : b) kb.insert(x.elements);
        if (ka != kb) o.fail(where(label, d) + " " + to_string(s));
      }
    }
  if (o.pass) o.detail = "A3, A4 at d = 1, 2 in both windows";
  return o;
}

Outcome mutation_properties() {
  Outcome o;
  long sequences = 0;
  for (const char* label : {"A3", "D4"}) {
    auto dc = derived_for(label);
    const int n = dc->rank();
    std::mt19937 rng(label[0] == 'A' ? 7001 : 7002);
    std::vector<Stalk> projectives;
    for (int v = 0; v < n; ++v) projectives.push_back({dc->catalog().projective_id(v), 0});
    const ExcSequence base = order_into_exceptional(*dc, projectives);
    for (int trial = 0; trial < 120; ++trial) {
      ExcSequence s = base;
      for (int k = 0; k < 8; ++k) {
        const int i = 1 + static_cast<int>(rng() % (n - 1));
        s = mutate(*dc, s, i, rng() % 2 ? MutationDirection::left : MutationDirection::right);
      }
      ++sequences;
      const std::string at = std::string(label) + " trial " + std::to_string(trial);
      if (!is_exceptional_sequence(*dc, s).ok) o.fail(at + " not exceptional");
      for (int i = 1; i < n; ++i) {
        if (mutate(*dc, mutate(*dc, s, i, MutationDirection::left), i, MutationDirection::right) != s)
          o.fail(at + " left then right");
        if (mutate(*dc, mutate(*dc, s, i, MutationDirection::right), i, MutationDirection::left) != s)
          o.fail(at + " right then left");
      }
      for (int i = 1; i + 1 < n; ++i)
        for (auto dir : {MutationDirection::left, MutationDirection::right}) {
          auto lhs = mutate(*dc, mutate(*dc, mutate(*dc, s, i, dir), i + 1, dir), i, dir);
          auto rhs = mutate(*dc, mutate(*dc, mutate(*dc, s, i + 1, dir), i, dir), i + 1, dir);
          if (lhs != rhs) o.fail(at + " braid relation at " + std::to_string(i));
        }
      const ExcSequence dual = mu_rev(*dc, s, Sign::plus);
      if (mu_rev(*dc, dual, Sign::minus) != s) o.fail(at + " mu_rev inverse");
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int m = -4; m <= 4; ++m)
            if (dc->graded_hom(s[a], dual[n - 1 - b], m) != (a == b && m == 0 ? 1 : 0))
              o.fail(at + " orthogonality");
    }
  }
  if (o.pass) o.detail = std::to_string(sequences) + " sequences";
  return o;
}

Outcome homological_core() {
  Outcome o;
  for (const char* label : {"A1", "A2", "A3", "A4", "D4", "E6"}) {
    auto dc = derived_for(label);
    const IndCatalog& c = dc->catalog();
    const Quiver& q = c.quiver();
    const int m = c.size(), n = c.rank();
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        if (c.hom(a, b) - c.ext(a, b) != euler_form(q, c.dim_vector(a), c.dim_vector(b)))
          o.fail(std::string(label) + " Euler form");
        if (!c.is_projective(a)) {
          const Rep t = translate(c.rep(a), TranslateDirection::tau, c);
          if (c.ext(a, b) != hom_dim(c.field(), q, c.rep(b), t)) o.fail(std::string(label) + " AR duality");
        }
        for (int l = -2; l <= 2; ++l) {
          const Stalk x{a, 0}, y{b, 0};
          if (dc->graded_hom(x, dc->nakayama(y, NakayamaDirection::nu), l) != dc->graded_hom(y, x, -l))
            o.fail(std::string(label) + " Serre duality");
        }
      }
    for (int a = 0; a < m; ++a) {
      if (c.is_projective(a)) continue;
      const Rep t = translate(c.rep(a), TranslateDirection::tau, c);
      const auto id = c.find(t.dims);
      if (!id || dc->nakayama(Stalk{a, 0}, NakayamaDirection::nu) != Stalk{*id, 1})
        o.fail(std::string(label) + " nu = tau[1]");
    }
    for (int d = 1; d <= 3; ++d) {
      if (OrbitCategory(dc, Ambient::minus, d).size() != d * m + (m - n)) o.fail(where(label, d) + " minus census");
      if (OrbitCategory(dc, Ambient::plus, d).size() != d * m + n) o.fail(where(label, d) + " plus census");
    }
  }
  if (o.pass) o.detail = "A1-A4, D4, E6";
  return o;
}

Outcome two_term_formula() {
  Outcome o;
  long pairs = 0;
  for (const char* label : {"A2", "A3"}) {
    auto dc = derived_for(label);
    for (int d = 1; d <= 3; ++d) {
      OrbitCategory oc(dc, Ambient::minus, d);
      for (const auto& x : oc.domain())
        for (const auto& y : oc.domain()) {
          ++pairs;
          for (int i = 0; i <= d; ++i)
            if (oc.orbit_sum(x, y, -i) != dc->graded_hom(x, y, -i) + dc->graded_hom(y, x, i - d))
              o.fail(where(label, d) + " " + dc->describe(x) + ", " + dc->describe(y));
        }
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0 means no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "closed forms equal the product formula", 1.0, formula_identity},
      {2, "A3 d=1: five d-SMSs, verification passes", 10.0, [] { return small_example("A3", 1, 5); }},
      {3, "A2 d=2: seven d-SMSs, verification passes", 10.0, [] { return small_example("A2", 2, 7); }},
      {4, "desk-scale counts equal Fuss-Catalan numbers", 0.0, desk_counts},
      {5, "projection is a bijection from SMCs to d-SMSs", 0.0, [] { return desk_checks({"smc_to_sms_bijection"}); }},
      {6, "silting to SMC map is an order isomorphism", 0.0,
       [] { return desk_checks({"silting_to_smc_bijection", "silting_to_smc_order"}); }},
      {7, "SMCs equal Hom<=0 configurations", 0.0, homleq0_equals_smc},
      {8, "mutation braid relations, inverses and orthogonality", 0.0, mutation_properties},
      {9, "homological invariants of the catalogs", 60.0, homological_core},
      {10, "two-term formula equals the truncated orbit sum", 0.0, two_term_formula},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) o.fail("took longer than the time limit");
    all = all && o.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << o.detail << "] ("
         << secs << " s)";
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
