#pragma once

// Predicates and exhaustive enumerators for silting objects, simple-minded
// collections, d-simple-minded systems, cluster tilting objects and
// Hom_{<=0}-configurations, plus the cross-verification report.

#include "siltsms/clique.hpp"
#include "siltsms/exceptional.hpp"
#include "siltsms/orbit_cat.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace siltsms {

enum class Kind {
  silting,          // silting objects in D^[1-d,0]
  d_term_silting,   // Hom(H[<0], P) = 0 = Hom(P, H[>=d])
  smc_plain,        // SMCs in D^[1-d,0]
  smc_minus,        // SMCs in D_-^[-d,0]
  sms,              // d-SMSs of C_{-d}(H)
  cluster_tilting,  // d-cluster tilting objects of C_{d+1}(H)
  homleq0_plain,    // Hom_{<=0}-configurations in D^[1-d,0]
  homleq0_minus,    // Hom_{<=0}-configurations in D_-^[-d,0]
};

std::string to_string(Kind k);
/// Accepts the names above plus the short aliases "smc" (smc_minus) and "ct".
Kind parse_kind(const std::string& name);

struct ObjectSet {
  Kind kind = Kind::silting;
  int d = 1;
  /// Canonical order; orbit kinds hold fundamental-domain representatives.
  std::vector<Stalk> elements;
  bool operator==(const ObjectSet&) const = default;
};

class Classifier {
 public:
  Classifier(std::shared_ptr<const DerivedCategory> derived, int d);

  const DerivedCategory& derived() const { return *derived_; }
  const OrbitCategory& minus() const { return minus_; }
  const OrbitCategory& plus() const { return plus_; }
  int d() const { return d_; }
  int rank() const { return derived_->rank(); }

  Check is_silting_set(const std::vector<Stalk>& s) const;
  Check is_smc_set(const std::vector<Stalk>& s) const;
  /// Elements are projected to the minus fundamental domain first.
  Check is_sms_set(const std::vector<Stalk>& s) const;
  /// Elements are projected to the plus fundamental domain first.
  Check is_cluster_tilting_set(const std::vector<Stalk>& s) const;
  Check is_homleq0_config(const std::vector<Stalk>& s) const;
  /// Classes (-1)^shift dim M span the Grothendieck group.
  bool k_theory_spans(const std::vector<Stalk>& s) const;
  /// No nonzero module lies in the left perpendicular category of s.
  Check generates(const std::vector<Stalk>& s) const;
  Check predicate(Kind kind, const std::vector<Stalk>& s) const;

  /// Candidate indecomposables, canonical order.
  std::vector<Stalk> pool(Kind kind) const;
  /// Cliques of the pairwise-compatibility graph before the global filter.
  std::vector<std::vector<Stalk>> raw_cliques(Kind kind, const SearchOptions& options) const;
  std::vector<ObjectSet> enumerate(Kind kind, const SearchOptions& options) const;

  /// A <= B in the silting order (silting kinds) or the heart order (SMC kinds).
  bool order_leq(const ObjectSet& a, const ObjectSet& b) const;

  std::vector<Stalk> canonical(std::vector<Stalk> s) const;

 private:
  bool compatible(Kind kind, const Stalk& x, const Stalk& y) const;
  bool self_compatible(Kind kind, const Stalk& x) const;

  std::shared_ptr<const DerivedCategory> derived_;
  int d_;
  OrbitCategory minus_;
  OrbitCategory plus_;
};

struct CheckRecord {
  std::string name;
  bool pass = true;
  nlohmann::json witness;
};

struct Report {
  std::string type;
  int d = 1;
  std::map<std::string, long> counts;
  BigInt fuss_catalan;
  BigInt fuss_catalan_positive;
  std::vector<CheckRecord> checks;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

/// Enumerates every family at (quiver, d) and cross-checks the bijections.
Report verify_bijections(const Classifier& c, const SearchOptions& options);

nlohmann::json object_set_json(const DerivedCategory& dc, const ObjectSet& s);
/// One row per set: kind, d, and "dimvector@shift" entries separated by spaces.
std::string object_sets_csv(const DerivedCategory& dc, const std::vector<ObjectSet>& sets);

/// Catalog plus derived category for a quiver.
std::shared_ptr<const DerivedCategory> make_derived(const Quiver& q, const Field& f);

}  // namespace siltsms
