#pragma once

// Representations of simply-laced Dynkin quivers over an exact field.
//
// Conventions: vertices are 0-based internally (printed 1-based), every
// arrow map of a Rep has shape dims[target] x dims[source], and a RepMap
// stores one dims_target[v] x dims_source[v] matrix per vertex.

#include "siltsms/linalg.hpp"
#include "siltsms/root_data.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace siltsms {

struct Arrow {
  int source = 0;
  int target = 0;
  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  /// Validates that the underlying graph is a tree without loops.
  Quiver(int vertex_count, std::vector<Arrow> arrows, std::optional<DynkinType> type = std::nullopt);

  /// Arrows i -> j for every Dynkin edge {i, j} with i < j.
  static Quiver default_orientation(const RootDatum& datum);
  /// `arrows` must orient exactly the edges of the Dynkin diagram of `datum`.
  static Quiver with_orientation(const RootDatum& datum, std::vector<Arrow> arrows);

  int vertex_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::optional<DynkinType>& type() const { return type_; }
  Quiver opposite() const;
  /// Same arrow list with every arrow touching `k` reversed.
  Quiver reflected_at(int k) const;

  bool is_sink(int v) const;
  bool is_source(int v) const;
  /// Directed path from -> to exists (from == to counts).
  bool reaches(int from, int to) const { return reach_[from][to]; }
  /// Arrow indices along the unique directed path from -> to.
  const std::vector<int>& path(int from, int to) const { return paths_[from][to]; }
  std::vector<int> out_arrows(int v) const;
  std::vector<int> in_arrows(int v) const;

 private:
  int n_;
  std::vector<Arrow> arrows_;
  std::optional<DynkinType> type_;
  std::vector<std::vector<bool>> reach_;
  std::vector<std::vector<std::vector<int>>> paths_;
};

struct Rep {
  std::vector<int> dims;
  std::vector<Matrix> maps;

  bool is_zero() const;
  int total_dim() const;
};

struct RepMap {
  std::vector<Matrix> components;
};

Rep zero_rep(const Quiver& q);
Rep simple_rep(const Quiver& q, int vertex);
Rep projective_rep(const Quiver& q, int vertex);
Rep injective_rep(const Quiver& q, int vertex);
Rep direct_sum(const Quiver& q, const std::vector<Rep>& parts);
/// Rep of q.opposite() with transposed maps.
Rep dual_rep(const Quiver& q, const Rep& m);

/// Map along the directed path from -> to (identity when from == to).
Matrix path_action(const Field& f, const Quiver& q, const Rep& m, int from, int to);
RepMap compose(const Field& f, const RepMap& g, const RepMap& h);
RepMap identity_map(const Rep& m);
RepMap zero_map(const Rep& source, const Rep& target);
bool is_morphism(const Field& f, const Quiver& q, const RepMap& h, const Rep& source, const Rep& target);

/// Direct sum of P(g) over generators g, in generator order.
Rep projective_sum(const Quiver& q, const std::vector<int>& gens);
Rep injective_sum(const Quiver& q, const std::vector<int>& gens);
/// coeff(r, s) is the coefficient of the basic map P(src[s]) -> P(tgt[r]).
RepMap projective_map(const Quiver& q, const std::vector<int>& src, const std::vector<int>& tgt, const Matrix& coeff);
/// coeff(r, s) is the coefficient of the basic map I(src[s]) -> I(tgt[r]).
RepMap injective_map(const Quiver& q, const std::vector<int>& src, const std::vector<int>& tgt, const Matrix& coeff);
/// The map from projective_sum(gens) sending the generator of summand r to vectors[r] in m at gens[r].
RepMap projective_sum_to_module(const Field& f, const Quiver& q, const std::vector<int>& gens,
                                const std::vector<Matrix>& vectors, const Rep& m);

struct HomBasis {
  int dimension = 0;
  std::vector<RepMap> basis;
};

/// Solution space of N_a f_s(a) = f_t(a) M_a over all arrows.
HomBasis hom_basis(const Field& f, const Quiver& q, const Rep& m, const Rep& n);
int hom_dim(const Field& f, const Quiver& q, const Rep& m, const Rep& n);

/// Minimal projective presentation 0 -> P1 -d-> P0 -cover-> M -> 0.
struct Presentation {
  std::vector<int> gens0;
  std::vector<int> gens1;
  Matrix coeff;  // gens0.size() x gens1.size()
  Rep p0;
  Rep p1;
  RepMap d;
  RepMap cover;
};

Presentation projective_presentation(const Field& f, const Quiver& q, const Rep& m);

/// Minimal injective copresentation 0 -> M -> I0 -d-> I1 -> 0 (maps only
/// through the coefficient matrix; coeff(s, r) is I(gens0[r]) -> I(gens1[s])).
struct Copresentation {
  std::vector<int> gens0;
  std::vector<int> gens1;
  Matrix coeff;  // gens1.size() x gens0.size()
};

Copresentation injective_copresentation(const Field& f, const Quiver& q, const Rep& m);

struct ExtClasses {
  int dimension = 0;
  /// Maps P1(M) -> N representing a basis of Ext^1(M, N).
  std::vector<RepMap> representatives;
};

/// Cokernel of Hom(P0, N) -> Hom(P1, N) for the presentation of M.
ExtClasses ext_classes(const Field& f, const Quiver& q, const Presentation& pres, const Rep& n);
int ext1_dim(const Field& f, const Quiver& q, const Rep& m, const Rep& n);

/// sum_i a_i b_i - sum_{arrows i->j} a_i b_j. Throws on length mismatch.
long euler_form(const Quiver& q, const std::vector<int>& alpha, const std::vector<int>& beta);

/// Complex of representations; differential n maps terms[n] -> terms[n+1].
struct Complex {
  std::map<int, Rep> terms;
  std::map<int, RepMap> differentials;
};

/// H^n as a representation.
Rep homology(const Field& f, const Quiver& q, const Complex& c, int degree);
Rep kernel_rep(const Field& f, const Quiver& q, const RepMap& h, const Rep& source);
Rep cokernel_rep(const Field& f, const Quiver& q, const RepMap& h, const Rep& target);

class IndCatalog {
 public:
  IndCatalog(Quiver q, Field f, std::vector<Rep> reps);

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  int size() const { return static_cast<int>(reps_.size()); }
  int rank() const { return quiver_.vertex_count(); }

  const Rep& rep(int id) const { return reps_[id]; }
  const std::vector<int>& dim_vector(int id) const { return reps_[id].dims; }
  std::optional<int> find(const std::vector<int>& dim_vector) const;
  /// 1-based label like "(1,1,0)".
  std::string name(int id) const;

  int hom(int a, int b) const { return hom_[a][b]; }
  int ext(int a, int b) const { return ext_[a][b]; }
  const std::vector<std::vector<int>>& hom_matrix() const { return hom_; }

  bool is_projective(int id) const { return proj_vertex_[id] >= 0; }
  bool is_injective(int id) const { return inj_vertex_[id] >= 0; }
  int projective_vertex(int id) const { return proj_vertex_[id]; }
  int injective_vertex(int id) const { return inj_vertex_[id]; }
  int projective_id(int vertex) const { return proj_id_[vertex]; }
  int injective_id(int vertex) const { return inj_id_[vertex]; }
  int simple_id(int vertex) const { return simple_id_[vertex]; }
  /// Position of the dimension vector in lexicographic order.
  int lex_rank(int id) const { return lex_rank_[id]; }

  const Presentation& presentation(int id) const { return pres_[id]; }
  const Copresentation& copresentation(int id) const { return copres_[id]; }

 private:
  Quiver quiver_;
  Field field_;
  std::vector<Rep> reps_;
  std::map<std::vector<int>, int> by_dim_;
  std::vector<std::vector<int>> hom_, ext_;
  std::vector<int> proj_vertex_, inj_vertex_, proj_id_, inj_id_, simple_id_, lex_rank_;
  std::vector<Presentation> pres_;
  std::vector<Copresentation> copres_;
};

/// One representation per positive root, built with BGP reflection functors
/// and ordered by a linear extension of "Hom(X, Y) != 0".
IndCatalog build_catalog(const Quiver& q, const Field& f);

/// Krull-Schmidt multiplicities (catalog id, multiplicity) sorted by lex rank.
std::vector<std::pair<int, int>> decompose(const Rep& m, const IndCatalog& catalog);

enum class TranslateDirection { tau, tau_inverse };
Rep translate(const Rep& m, TranslateDirection direction, const IndCatalog& catalog);

}  // namespace siltsms
