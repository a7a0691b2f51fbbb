#pragma once

// Exceptional sequences in D^b(H) and their left/right mutations. Positions
// are 1-based as in mu_i, acting on the pair (X_i, X_{i+1}).

#include "siltsms/derived_cat.hpp"

#include <string>
#include <vector>

namespace siltsms {

using ExcSequence = std::vector<Stalk>;

struct Check {
  bool ok = true;
  std::string witness;
};

enum class MutationDirection { left, right };
enum class Sign { plus, minus };

/// Entries exceptional and Hom(X_i, X_j[l]) = 0 for j < i; fullness via the perp test when the length is n.
Check is_exceptional_sequence(const DerivedCategory& dc, const ExcSequence& seq);

/// Y' = cone of the evaluation map from (+)_l Hom(X[l], Y) (x) X[l] to Y.
Stalk left_mutation_object(const DerivedCategory& dc, const Stalk& x, const Stalk& y);
/// X' = cone of the coevaluation map from X to (+)_l D Hom(X, Y[l]) (x) Y[l], shifted by -1.
Stalk right_mutation_object(const DerivedCategory& dc, const Stalk& x, const Stalk& y);

/// left: (X_i, X_{i+1}) -> (Y', X_i); right: (X_i, X_{i+1}) -> (X_{i+1}, X').
ExcSequence mutate(const DerivedCategory& dc, const ExcSequence& seq, int position, MutationDirection direction);

/// mu_1 (mu_2 mu_1) ... (mu_{n-1} ... mu_1), rightmost factor first.
ExcSequence mu_rev(const DerivedCategory& dc, const ExcSequence& seq, Sign sign);
/// Every intermediate sequence of mu_rev, starting with the input.
std::vector<ExcSequence> mu_rev_trace(const DerivedCategory& dc, const ExcSequence& seq, Sign sign);

/// Topological order of the "Hom in some degree" digraph; throws TheoremViolation on a cycle.
ExcSequence order_into_exceptional(const DerivedCategory& dc, const std::vector<Stalk>& set);

/// order_into_exceptional, then mu_rev(plus), returned in canonical order.
std::vector<Stalk> silting_to_smc(const DerivedCategory& dc, const std::vector<Stalk>& silting);

nlohmann::json sequence_json(const DerivedCategory& dc, const ExcSequence& seq);
ExcSequence sequence_from_json(const DerivedCategory& dc, const nlohmann::json& j);
nlohmann::json trace_json(const DerivedCategory& dc, const std::vector<ExcSequence>& trace);
/// Graph of sequences reachable by single mutations, explored breadth first up to max_nodes.
std::string braid_orbit_dot(const DerivedCategory& dc, const ExcSequence& start, int max_nodes);

}  // namespace siltsms
