#pragma once

// The bounded derived category of a Dynkin path algebra. Every object is a
// finite direct sum of shifted indecomposable modules M[i], so objects are
// stored as multisets of (catalog id, shift) with multiplicities.

#include "siltsms/quiver_rep.hpp"

#include "json.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace siltsms {

/// An indecomposable object M[shift]; M lives in cohomological degree -shift.
struct Stalk {
  int ind = 0;
  int shift = 0;
  bool operator==(const Stalk&) const = default;
  auto operator<=>(const Stalk&) const = default;
};

struct Summand {
  int ind = 0;
  int shift = 0;
  int mult = 1;
  bool operator==(const Summand&) const = default;
};

/// Canonical form: summands sorted by (shift, lex rank of the dimension
/// vector) with duplicates merged. Build through DerivedCategory::make.
class DObject {
 public:
  DObject() = default;

  const std::vector<Summand>& summands() const { return summands_; }
  bool is_zero() const { return summands_.empty(); }
  /// Exactly one summand of multiplicity one.
  bool is_indecomposable() const { return summands_.size() == 1 && summands_[0].mult == 1; }
  Stalk as_stalk() const;
  /// Summands repeated according to multiplicity.
  std::vector<Stalk> expanded() const;
  int min_shift() const;
  int max_shift() const;

  bool operator==(const DObject&) const = default;

 private:
  friend class DerivedCategory;
  std::vector<Summand> summands_;
};

/// A morphism between decomposed objects. Rows follow target.expanded(),
/// columns follow source.expanded(). For a pair with equal shifts the entry
/// holds coordinates in the cached Hom basis; for target shift = source shift
/// + 1 it holds coordinates in the cached Ext^1 basis; otherwise it is empty.
struct DMap {
  DObject source;
  DObject target;
  std::vector<std::vector<std::vector<Scalar>>> coeff;
};

enum class WindowKind { plain, minus, plus };

/// D^[m,n], D_-^[m,n] = D^{<=n} cap nu D^{>=m+1}, D_+^[m,n] = D^{<=n} cap nu^-1 D^{>=m-1}.
struct WindowSpec {
  WindowKind kind = WindowKind::plain;
  int m = 0;
  int n = 0;
};

enum class NakayamaDirection { nu, nu_inverse };

class DerivedCategory {
 public:
  explicit DerivedCategory(std::shared_ptr<const IndCatalog> catalog);

  const IndCatalog& catalog() const { return *catalog_; }
  const Field& field() const { return catalog_->field(); }
  int rank() const { return catalog_->rank(); }

  DObject make(std::vector<Summand> summands) const;
  DObject stalk(int ind, int shift = 0) const { return make({{ind, shift, 1}}); }
  DObject stalk(Stalk s) const { return stalk(s.ind, s.shift); }
  DObject shifted(const DObject& x, int k) const;
  DObject sum(const DObject& x, const DObject& y) const;
  /// Canonical comparison of stalks: shift, then dimension vector.
  bool stalk_less(const Stalk& a, const Stalk& b) const;

  /// dim Hom(X, Y[l]).
  long graded_hom(const DObject& x, const DObject& y, int l) const;
  long graded_hom(const Stalk& x, const Stalk& y, int l) const;
  /// Sum over all l of dim Hom(X, Y[l]).
  long total_hom(const Stalk& x, const Stalk& y) const;
  /// Sum of dim Hom(X, Y[l]) over lo <= l <= hi.
  long hom_in_range(const Stalk& x, const Stalk& y, int lo, int hi) const;

  DObject nakayama(const DObject& x, NakayamaDirection direction) const;
  Stalk nakayama(const Stalk& x, NakayamaDirection direction) const;
  /// AR translate of D^b, nu[-1], and its inverse.
  Stalk ar_translate(const Stalk& x, int power) const;

  DObject cone(const DMap& f) const;

  bool in_window(const DObject& x, const WindowSpec& w) const;
  bool in_window(const Stalk& x, const WindowSpec& w) const;
  /// Indecomposables of the window in canonical order.
  std::vector<Stalk> indecomposables_in(const WindowSpec& w) const;

  /// Fixed bases, computed once per pair and shared between threads.
  const HomBasis& hom_basis(int a, int b) const;
  const ExtClasses& ext_basis(int a, int b) const;

  /// Realizes the morphism as a map of complexes and checks the shapes.
  void validate(const DMap& f) const;

  nlohmann::json to_json(const DObject& x) const;
  DObject from_json(const nlohmann::json& j) const;
  std::string describe(const DObject& x) const;
  std::string describe(const Stalk& x) const;

  /// AR quiver of D^b restricted to the stalks of a window, as DOT.
  std::string ar_quiver_dot(const WindowSpec& w) const;
  /// Arrows of the AR quiver leaving x (irreducible maps), with multiplicity one each.
  std::vector<Stalk> ar_successors(const Stalk& x) const;

 private:
  std::shared_ptr<const IndCatalog> catalog_;
  // nu and nu^-1 of each module, as a stalk (ind, shift offset).
  std::vector<Stalk> nu_, nu_inv_;
  std::vector<int> lex_rank_;

  mutable std::mutex cache_mutex_;
  mutable std::vector<std::unique_ptr<HomBasis>> hom_cache_;
  mutable std::vector<std::unique_ptr<ExtClasses>> ext_cache_;
};

}  // namespace siltsms
