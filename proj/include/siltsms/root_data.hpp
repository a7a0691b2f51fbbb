#pragma once

// Dynkin/Weyl numerics: exponents, Coxeter numbers, positive roots and the
// two Fuss-Catalan counts. Everything here is exact.

#include "siltsms/linalg.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace siltsms {

enum class Family { A, B, C, D, E, F, G };

struct DynkinType {
  Family family = Family::A;
  int rank = 1;

  /// Accepts "A3", "A_3", "e8", "E_8", ... Throws ClassificationError.
  static DynkinType parse(std::string_view label);
  std::string label() const;  // "A3", "E8"
  bool simply_laced() const { return family == Family::A || family == Family::D || family == Family::E; }

  bool operator==(const DynkinType&) const = default;
};

struct RootDatum {
  DynkinType type;
  int rank = 0;
  int coxeter_number = 0;
  std::vector<int> exponents;
  /// cartan[i][j] = <alpha_i^vee, alpha_j>.
  std::vector<std::vector<int>> cartan;
  long positive_root_count = 0;
  bool simply_laced = false;
};

enum class CountVariant { full, positive };

RootDatum make_root_datum(const DynkinType& type);
inline RootDatum make_root_datum(std::string_view label) { return make_root_datum(DynkinType::parse(label)); }

/// Positive roots in simple-root coordinates, ordered by height then lex.
std::vector<std::vector<int>> positive_roots(const RootDatum& datum);

/// prod_i (d h + e_i + 1)/(e_i + 1) (full) or prod_i (d h + e_i - 1)/(e_i + 1) (positive).
BigInt fuss_catalan(const RootDatum& datum, int d, CountVariant variant);

/// Closed forms per family. The full variant has closed forms for A/B/C only
/// and falls back to the product elsewhere.
BigInt family_closed_form(const RootDatum& datum, int d, CountVariant variant);

/// Every Dynkin type with rank <= max_rank, in family order.
std::vector<DynkinType> all_types_up_to_rank(int max_rank);

BigInt binomial(long n, long k);

}  // namespace siltsms
