#include "siltsms/quiver_rep.hpp"

#include "siltsms/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace siltsms {

// ---------------------------------------------------------------- Quiver

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows, std::optional<DynkinType> type)
    : n_(vertex_count), arrows_(std::move(arrows)), type_(type) {
  if (n_ < 1) throw std::invalid_argument("quiver needs at least one vertex");
  if (static_cast<int>(arrows_.size()) != n_ - 1)
    throw std::invalid_argument("a Dynkin quiver on " + std::to_string(n_) + " vertices has " +
                                std::to_string(n_ - 1) + " arrows");
  std::vector<std::vector<int>> adj(n_);
  for (const auto& a : arrows_) {
    if (a.source < 0 || a.source >= n_ || a.target < 0 || a.target >= n_)
      throw std::invalid_argument("arrow endpoint out of range");
    if (a.source == a.target) throw std::invalid_argument("loops are not allowed");
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }
  std::vector<bool> seen(n_, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  if (count != n_) throw std::invalid_argument("underlying graph is not connected");

  reach_.assign(n_, std::vector<bool>(n_, false));
  paths_.assign(n_, std::vector<std::vector<int>>(n_));
  for (int s = 0; s < n_; ++s) {
    std::vector<int> via(n_, -1);
    std::queue<int> bfs;
    bfs.push(s);
    reach_[s][s] = true;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int a : out_arrows(v)) {
        int w = arrows_[a].target;
        if (reach_[s][w]) continue;
        reach_[s][w] = true;
        via[w] = a;
        bfs.push(w);
      }
    }
    for (int t = 0; t < n_; ++t) {
      if (!reach_[s][t] || t == s) continue;
      std::vector<int> p;
      for (int v = t; v != s; v = arrows_[via[v]].source) p.push_back(via[v]);
      std::reverse(p.begin(), p.end());
      paths_[s][t] = std::move(p);
    }
  }
}

namespace {

std::set<std::pair<int, int>> dynkin_edges(const RootDatum& datum) {
  if (!datum.simply_laced)
    throw UnsupportedError("quiver representations require a simply-laced type; " + datum.type.label() +
                           " is supported by the closed-form counts only");
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < datum.rank; ++i)
    for (int j = i + 1; j < datum.rank; ++j)
      if (datum.cartan[i][j] != 0) edges.emplace(i, j);
  return edges;
}

}  // namespace

Quiver Quiver::default_orientation(const RootDatum& datum) {
  std::vector<Arrow> arrows;
  for (auto [i, j] : dynkin_edges(datum)) arrows.push_back({i, j});
  return Quiver(datum.rank, std::move(arrows), datum.type);
}

Quiver Quiver::with_orientation(const RootDatum& datum, std::vector<Arrow> arrows) {
  auto edges = dynkin_edges(datum);
  std::set<std::pair<int, int>> given;
  for (const auto& a : arrows) given.emplace(std::min(a.source, a.target), std::max(a.source, a.target));
  if (given != edges || arrows.size() != edges.size())
    throw std::invalid_argument("orientation does not match the Dynkin diagram of " + datum.type.label());
  return Quiver(datum.rank, std::move(arrows), datum.type);
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  for (const auto& a : arrows_) rev.push_back({a.target, a.source});
  return Quiver(n_, std::move(rev), type_);
}

Quiver Quiver::reflected_at(int k) const {
  std::vector<Arrow> out = arrows_;
  for (auto& a : out)
    if (a.source == k || a.target == k) std::swap(a.source, a.target);
  return Quiver(n_, std::move(out), type_);
}

bool Quiver::is_sink(int v) const { return out_arrows(v).empty(); }
bool Quiver::is_source(int v) const { return in_arrows(v).empty(); }

std::vector<int> Quiver::out_arrows(int v) const {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(arrows_.size()); ++a)
    if (arrows_[a].source == v) out.push_back(a);
  return out;
}

std::vector<int> Quiver::in_arrows(int v) const {
  std::vector<int> in;
  for (int a = 0; a < static_cast<int>(arrows_.size()); ++a)
    if (arrows_[a].target == v) in.push_back(a);
  return in;
}

// ---------------------------------------------------------------- Rep basics

bool Rep::is_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](int d) { return d == 0; });
}

int Rep::total_dim() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

Rep zero_rep(const Quiver& q) {
  Rep r;
  r.dims.assign(q.vertex_count(), 0);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) r.maps.emplace_back(0, 0);
  return r;
}

Rep simple_rep(const Quiver& q, int vertex) {
  Rep r = zero_rep(q);
  r.dims[vertex] = 1;
  for (std::size_t a = 0; a < q.arrows().size(); ++a)
    r.maps[a] = Matrix(r.dims[q.arrows()[a].target], r.dims[q.arrows()[a].source]);
  return r;
}

namespace {

// Summands of a projective sum present at v, in summand order.
std::vector<int> proj_present(const Quiver& q, const std::vector<int>& gens, int v) {
  std::vector<int> out;
  for (int r = 0; r < static_cast<int>(gens.size()); ++r)
    if (q.reaches(gens[r], v)) out.push_back(r);
  return out;
}

std::vector<int> inj_present(const Quiver& q, const std::vector<int>& gens, int v) {
  std::vector<int> out;
  for (int r = 0; r < static_cast<int>(gens.size()); ++r)
    if (q.reaches(v, gens[r])) out.push_back(r);
  return out;
}

int position(const std::vector<int>& list, int value) {
  auto it = std::find(list.begin(), list.end(), value);
  return it == list.end() ? -1 : static_cast<int>(it - list.begin());
}

Rep sum_rep(const Quiver& q, const std::vector<int>& gens, bool projective) {
  Rep r;
  const int n = q.vertex_count();
  std::vector<std::vector<int>> present(n);
  for (int v = 0; v < n; ++v) {
    present[v] = projective ? proj_present(q, gens, v) : inj_present(q, gens, v);
    r.dims.push_back(static_cast<int>(present[v].size()));
  }
  for (const auto& a : q.arrows()) {
    Matrix m(r.dims[a.target], r.dims[a.source]);
    const auto& src = present[a.source];
    const auto& tgt = present[a.target];
    for (int i = 0; i < static_cast<int>(tgt.size()); ++i) {
      int j = position(src, tgt[i]);
      if (j >= 0) m(i, j) = 1;
    }
    r.maps.push_back(std::move(m));
  }
  return r;
}

RepMap sum_map(const Quiver& q, const std::vector<int>& src, const std::vector<int>& tgt, const Matrix& coeff,
               bool projective) {
  if (coeff.rows() != tgt.size() || coeff.cols() != src.size())
    throw std::invalid_argument("coefficient matrix shape does not match generator lists");
  RepMap h;
  for (int v = 0; v < q.vertex_count(); ++v) {
    auto rows = projective ? proj_present(q, tgt, v) : inj_present(q, tgt, v);
    auto cols = projective ? proj_present(q, src, v) : inj_present(q, src, v);
    Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = coeff(rows[i], cols[j]);
    h.components.push_back(std::move(m));
  }
  return h;
}

}  // namespace

Rep projective_rep(const Quiver& q, int vertex) { return sum_rep(q, {vertex}, true); }
Rep injective_rep(const Quiver& q, int vertex) { return sum_rep(q, {vertex}, false); }
Rep projective_sum(const Quiver& q, const std::vector<int>& gens) { return sum_rep(q, gens, true); }
Rep injective_sum(const Quiver& q, const std::vector<int>& gens) { return sum_rep(q, gens, false); }

RepMap projective_map(const Quiver& q, const std::vector<int>& src, const std::vector<int>& tgt, const Matrix& coeff) {
  return sum_map(q, src, tgt, coeff, true);
}

RepMap injective_map(const Quiver& q, const std::vector<int>& src, const std::vector<int>& tgt, const Matrix& coeff) {
  return sum_map(q, src, tgt, coeff, false);
}

Rep direct_sum(const Quiver& q, const std::vector<Rep>& parts) {
  Rep r = zero_rep(q);
  for (const auto& p : parts)
    for (int v = 0; v < q.vertex_count(); ++v) r.dims[v] += p.dims[v];
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrows()[a];
    Matrix m(r.dims[arr.target], r.dims[arr.source]);
    std::size_t ro = 0, co = 0;
    for (const auto& p : parts) {
      place(m, p.maps[a], ro, co);
      ro += p.dims[arr.target];
      co += p.dims[arr.source];
    }
    r.maps[a] = std::move(m);
  }
  return r;
}

Rep dual_rep(const Quiver& q, const Rep& m) {
  Rep d;
  d.dims = m.dims;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) d.maps.push_back(m.maps[a].transpose());
  return d;
}

Matrix path_action(const Field& f, const Quiver& q, const Rep& m, int from, int to) {
  if (!q.reaches(from, to)) throw std::invalid_argument("no directed path");
  Matrix acc = Matrix::identity(m.dims[from]);
  for (int a : q.path(from, to)) acc = multiply(f, m.maps[a], acc);
  return acc;
}

RepMap compose(const Field& f, const RepMap& g, const RepMap& h) {
  RepMap out;
  for (std::size_t v = 0; v < g.components.size(); ++v)
    out.components.push_back(multiply(f, g.components[v], h.components[v]));
  return out;
}

RepMap identity_map(const Rep& m) {
  RepMap out;
  for (int d : m.dims) out.components.push_back(Matrix::identity(d));
  return out;
}

RepMap zero_map(const Rep& source, const Rep& target) {
  RepMap out;
  for (std::size_t v = 0; v < source.dims.size(); ++v) out.components.emplace_back(target.dims[v], source.dims[v]);
  return out;
}

bool is_morphism(const Field& f, const Quiver& q, const RepMap& h, const Rep& source, const Rep& target) {
  for (int v = 0; v < q.vertex_count(); ++v) {
    const auto& c = h.components[v];
    if (static_cast<int>(c.rows()) != target.dims[v] || static_cast<int>(c.cols()) != source.dims[v]) return false;
  }
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrows()[a];
    Matrix lhs = multiply(f, target.maps[a], h.components[arr.source]);
    Matrix rhs = multiply(f, h.components[arr.target], source.maps[a]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

RepMap projective_sum_to_module(const Field& f, const Quiver& q, const std::vector<int>& gens,
                                const std::vector<Matrix>& vectors, const Rep& m) {
  RepMap h;
  for (int v = 0; v < q.vertex_count(); ++v) {
    auto present = proj_present(q, gens, v);
    Matrix c(m.dims[v], present.size());
    for (std::size_t j = 0; j < present.size(); ++j) {
      int r = present[j];
      place(c, multiply(f, path_action(f, q, m, gens[r], v), vectors[r]), 0, j);
    }
    h.components.push_back(std::move(c));
  }
  return h;
}

// ---------------------------------------------------------------- Hom

namespace {

struct HomSystem {
  Matrix equations;
  std::vector<std::size_t> offset;
};

HomSystem hom_system(const Quiver& q, const Rep& m, const Rep& n) {
  HomSystem sys;
  std::size_t unknowns = 0;
  for (int v = 0; v < q.vertex_count(); ++v) {
    sys.offset.push_back(unknowns);
    unknowns += static_cast<std::size_t>(n.dims[v]) * m.dims[v];
  }
  std::size_t eqs = 0;
  for (const auto& a : q.arrows()) eqs += static_cast<std::size_t>(n.dims[a.target]) * m.dims[a.source];
  sys.equations = Matrix(eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrows()[ai];
    const int s = a.source, t = a.target;
    const Matrix& na = n.maps[ai];
    const Matrix& ma = m.maps[ai];
    // (N_a f_s - f_t M_a)(r, c) = 0
    for (int r = 0; r < n.dims[t]; ++r)
      for (int c = 0; c < m.dims[s]; ++c, ++row) {
        for (int k = 0; k < n.dims[s]; ++k)
          if (na(r, k) != 0) sys.equations(row, sys.offset[s] + k * m.dims[s] + c) += na(r, k);
        for (int k = 0; k < m.dims[t]; ++k)
          if (ma(k, c) != 0) sys.equations(row, sys.offset[t] + r * m.dims[t] + k) -= ma(k, c);
      }
  }
  return sys;
}

}  // namespace

HomBasis hom_basis(const Field& f, const Quiver& q, const Rep& m, const Rep& n) {
  HomSystem sys = hom_system(q, m, n);
  for (std::size_t i = 0; i < sys.equations.rows(); ++i)
    for (std::size_t j = 0; j < sys.equations.cols(); ++j) sys.equations(i, j) = f.reduce(sys.equations(i, j));
  Matrix ker = kernel(f, sys.equations);
  HomBasis hb;
  hb.dimension = static_cast<int>(ker.cols());
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    RepMap h;
    for (int v = 0; v < q.vertex_count(); ++v) {
      Matrix c(n.dims[v], m.dims[v]);
      for (int r = 0; r < n.dims[v]; ++r)
        for (int cc = 0; cc < m.dims[v]; ++cc) c(r, cc) = ker(sys.offset[v] + r * m.dims[v] + cc, k);
      h.components.push_back(std::move(c));
    }
    hb.basis.push_back(std::move(h));
  }
  return hb;
}

int hom_dim(const Field& f, const Quiver& q, const Rep& m, const Rep& n) {
  HomSystem sys = hom_system(q, m, n);
  for (std::size_t i = 0; i < sys.equations.rows(); ++i)
    for (std::size_t j = 0; j < sys.equations.cols(); ++j) sys.equations(i, j) = f.reduce(sys.equations(i, j));
  return static_cast<int>(sys.equations.cols() - rank(f, sys.equations));
}

// ---------------------------------------------------------------- subquotients

namespace {

// Z / B where Z (columns, independent) spans a subrep of v and B lies in Z.
Rep subquotient(const Field& f, const Quiver& q, const Rep& v, const std::vector<Matrix>& z,
                const std::vector<Matrix>& b) {
  const int n = q.vertex_count();
  std::vector<Matrix> bz(n), cz(n), full(n);
  Rep out;
  for (int i = 0; i < n; ++i) {
    const std::size_t zdim = z[i].cols();
    if (b[i].cols() > 0 && zdim > 0) {
      auto s = solve(f, z[i], b[i]);
      if (!s) throw ConstructionError("boundary does not lie in cycles");
      bz[i] = *s;
    } else {
      bz[i] = Matrix(zdim, 0);
    }
    cz[i] = column_complement(f, bz[i], zdim);
    full[i] = hconcat(bz[i], cz[i]);
    out.dims.push_back(static_cast<int>(cz[i].cols()));
  }
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrows()[ai];
    const int s = a.source, t = a.target;
    Matrix m(out.dims[t], out.dims[s]);
    if (out.dims[t] > 0 && out.dims[s] > 0) {
      auto x = solve(f, z[t], multiply(f, v.maps[ai], z[s]));
      if (!x) throw ConstructionError("cycle space is not a subrepresentation");
      Matrix y = multiply(f, *x, cz[s]);
      auto coords = solve(f, full[t], y);
      if (!coords) throw ConstructionError("quotient coordinates failed");
      m = coords->rows_range(bz[t].cols(), out.dims[t]);
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

}  // namespace

Rep kernel_rep(const Field& f, const Quiver& q, const RepMap& h, const Rep& source) {
  std::vector<Matrix> z, b;
  for (int v = 0; v < q.vertex_count(); ++v) {
    const Matrix& c = h.components[v];
    z.push_back(c.rows() == 0 ? Matrix::identity(source.dims[v]) : kernel(f, c));
    b.emplace_back(source.dims[v], 0);
  }
  return subquotient(f, q, source, z, b);
}

Rep cokernel_rep(const Field& f, const Quiver& q, const RepMap& h, const Rep& target) {
  std::vector<Matrix> z, b;
  for (int v = 0; v < q.vertex_count(); ++v) {
    z.push_back(Matrix::identity(target.dims[v]));
    b.push_back(h.components[v]);
  }
  return subquotient(f, q, target, z, b);
}

Rep homology(const Field& f, const Quiver& q, const Complex& c, int degree) {
  auto term = c.terms.find(degree);
  if (term == c.terms.end()) return zero_rep(q);
  const Rep& v = term->second;
  std::vector<Matrix> z, b;
  auto out = c.differentials.find(degree);
  auto in = c.differentials.find(degree - 1);
  for (int i = 0; i < q.vertex_count(); ++i) {
    if (out != c.differentials.end() && out->second.components[i].rows() > 0)
      z.push_back(kernel(f, out->second.components[i]));
    else
      z.push_back(Matrix::identity(v.dims[i]));
    if (in != c.differentials.end())
      b.push_back(in->second.components[i]);
    else
      b.emplace_back(v.dims[i], 0);
  }
  return subquotient(f, q, v, z, b);
}

// ---------------------------------------------------------------- presentations

namespace {

// Generators of the top: per vertex, a complement of the radical.
void top_vectors(const Field& f, const Quiver& q, const Rep& m, std::vector<int>& gens, std::vector<Matrix>& vecs) {
  for (int w = 0; w < q.vertex_count(); ++w) {
    if (m.dims[w] == 0) continue;
    Matrix rad(m.dims[w], 0);
    for (int a : q.in_arrows(w)) rad = hconcat(rad, m.maps[a]);
    Matrix comp = column_complement(f, rad, m.dims[w]);
    for (std::size_t k = 0; k < comp.cols(); ++k) {
      gens.push_back(w);
      vecs.push_back(comp.column(k));
    }
  }
}

}  // namespace

Presentation projective_presentation(const Field& f, const Quiver& q, const Rep& m) {
  Presentation p;
  std::vector<Matrix> tops0;
  top_vectors(f, q, m, p.gens0, tops0);
  p.p0 = projective_sum(q, p.gens0);
  p.cover = projective_sum_to_module(f, q, p.gens0, tops0, m);

  // Kernel of the cover as a subrepresentation of P0.
  const int n = q.vertex_count();
  std::vector<Matrix> kb(n);
  Rep k;
  for (int v = 0; v < n; ++v) {
    const Matrix& c = p.cover.components[v];
    kb[v] = c.rows() == 0 ? Matrix::identity(p.p0.dims[v]) : kernel(f, c);
    k.dims.push_back(static_cast<int>(kb[v].cols()));
  }
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrows()[ai];
    Matrix km(k.dims[a.target], k.dims[a.source]);
    if (km.rows() > 0 && km.cols() > 0) {
      auto x = solve(f, kb[a.target], multiply(f, p.p0.maps[ai], kb[a.source]));
      if (!x) throw ConstructionError("kernel of projective cover is not a subrepresentation");
      km = *x;
    }
    k.maps.push_back(std::move(km));
  }

  std::vector<Matrix> tops1;
  top_vectors(f, q, k, p.gens1, tops1);
  p.coeff = Matrix(p.gens0.size(), p.gens1.size());
  for (std::size_t s = 0; s < p.gens1.size(); ++s) {
    const int g = p.gens1[s];
    Matrix in_p0 = multiply(f, kb[g], tops1[s]);
    auto present = proj_present(q, p.gens0, g);
    for (std::size_t i = 0; i < present.size(); ++i) p.coeff(present[i], s) = in_p0(i, 0);
  }
  p.p1 = projective_sum(q, p.gens1);
  p.d = projective_map(q, p.gens1, p.gens0, p.coeff);
  return p;
}

Copresentation injective_copresentation(const Field& f, const Quiver& q, const Rep& m) {
  Quiver op = q.opposite();
  Presentation p = projective_presentation(f, op, dual_rep(q, m));
  return Copresentation{p.gens0, p.gens1, p.coeff.transpose()};
}

ExtClasses ext_classes(const Field& f, const Quiver& q, const Presentation& pres, const Rep& n) {
  std::vector<std::size_t> row_off, col_off;
  std::size_t rows = 0, cols = 0;
  for (int g : pres.gens1) {
    row_off.push_back(rows);
    rows += n.dims[g];
  }
  for (int g : pres.gens0) {
    col_off.push_back(cols);
    cols += n.dims[g];
  }
  // h -> h o d, from (+)_r N_{gens0[r]} to (+)_s N_{gens1[s]}.
  Matrix l(rows, cols);
  for (std::size_t s = 0; s < pres.gens1.size(); ++s)
    for (std::size_t r = 0; r < pres.gens0.size(); ++r) {
      const Scalar& c = pres.coeff(r, s);
      if (c == 0 || !q.reaches(pres.gens0[r], pres.gens1[s])) continue;
      place(l, scale(f, c, path_action(f, q, n, pres.gens0[r], pres.gens1[s])), row_off[s], col_off[r]);
    }
  Matrix comp = column_complement(f, l, rows);
  ExtClasses out;
  out.dimension = static_cast<int>(comp.cols());
  for (std::size_t k = 0; k < comp.cols(); ++k) {
    std::vector<Matrix> vecs;
    for (std::size_t s = 0; s < pres.gens1.size(); ++s) {
      Matrix v(n.dims[pres.gens1[s]], 1);
      for (std::size_t i = 0; i < v.rows(); ++i) v(i, 0) = comp(row_off[s] + i, k);
      vecs.push_back(std::move(v));
    }
    out.representatives.push_back(projective_sum_to_module(f, q, pres.gens1, vecs, n));
  }
  return out;
}

int ext1_dim(const Field& f, const Quiver& q, const Rep& m, const Rep& n) {
  return ext_classes(f, q, projective_presentation(f, q, m), n).dimension;
}

long euler_form(const Quiver& q, const std::vector<int>& alpha, const std::vector<int>& beta) {
  const auto n = static_cast<std::size_t>(q.vertex_count());
  if (alpha.size() != n || beta.size() != n) throw std::invalid_argument("euler_form: vector length mismatch");
  long s = 0;
  for (std::size_t i = 0; i < n; ++i) s += static_cast<long>(alpha[i]) * beta[i];
  for (const auto& a : q.arrows()) s -= static_cast<long>(alpha[a.source]) * beta[a.target];
  return s;
}

// ---------------------------------------------------------------- catalog

namespace {

// BGP reflection S^-_k at a source k: V'_k = coker(V_k -> (+) V_j).
Rep reflect_at_source(const Field& f, const Quiver& q, const Rep& v, int k) {
  if (!q.is_source(k)) throw ConstructionError("reflection vertex is not a source");
  auto outs = q.out_arrows(k);
  std::size_t total = 0;
  for (int a : outs) total += v.dims[q.arrows()[a].target];
  Matrix phi(total, v.dims[k]);
  std::size_t off = 0;
  std::vector<std::size_t> block;
  for (int a : outs) {
    block.push_back(off);
    place(phi, v.maps[a], off, 0);
    off += v.dims[q.arrows()[a].target];
  }
  // Rows of c span the left kernel of phi, so ker c = im phi.
  Matrix c = phi.cols() == 0 ? Matrix::identity(total) : kernel(f, phi.transpose()).transpose();
  Rep out = v;
  out.dims[k] = static_cast<int>(c.rows());
  for (std::size_t i = 0; i < outs.size(); ++i) {
    int a = outs[i];
    out.maps[a] = c.columns(block[i], v.dims[q.arrows()[a].target]);
  }
  return out;
}

std::vector<int> sink_sequence(const Quiver& q) {
  std::vector<int> seq;
  std::vector<bool> used(q.vertex_count(), false);
  Quiver cur = q;
  for (int step = 0; step < q.vertex_count(); ++step) {
    int pick = -1;
    for (int v = 0; v < q.vertex_count() && pick < 0; ++v)
      if (!used[v] && cur.is_sink(v)) pick = v;
    if (pick < 0) throw ConstructionError("no admissible sink ordering");
    used[pick] = true;
    seq.push_back(pick);
    cur = cur.reflected_at(pick);
  }
  return seq;
}

}  // namespace

IndCatalog build_catalog(const Quiver& q, const Field& f) {
  if (!q.type()) throw ConstructionError("catalog construction needs the Dynkin type of the quiver");
  const RootDatum datum = make_root_datum(*q.type());
  if (!datum.simply_laced)
    throw UnsupportedError("enumeration requires simply-laced type; " + datum.type.label() + " is not");
  const int n = q.vertex_count();
  const auto seq = sink_sequence(q);
  std::vector<Quiver> stages = {q};
  for (int s = 1; s < n; ++s) stages.push_back(stages.back().reflected_at(seq[s - 1]));

  // Indecomposables are S^-_{k1} ... S^-_{k(t-1)} (S_{kt}), with the
  // admissible sink sequence repeated periodically.
  std::vector<Rep> reps;
  std::set<std::vector<int>> seen;
  const int limit = n * (datum.coxeter_number + 2);
  for (int t = 1; t <= limit && static_cast<long>(reps.size()) < datum.positive_root_count; ++t) {
    Rep v = simple_rep(stages[(t - 1) % n], seq[(t - 1) % n]);
    for (int s = t - 1; s >= 1 && !v.is_zero(); --s) v = reflect_at_source(f, stages[s % n], v, seq[(s - 1) % n]);
    if (v.is_zero()) continue;
    if (!seen.insert(v.dims).second) throw ConstructionError("reflection functors produced a repeated dimension vector");
    reps.push_back(std::move(v));
  }
  if (static_cast<long>(reps.size()) != datum.positive_root_count)
    throw ConstructionError("found " + std::to_string(reps.size()) + " indecomposables, expected " +
                            std::to_string(datum.positive_root_count));
  return IndCatalog(q, f, std::move(reps));
}

IndCatalog::IndCatalog(Quiver q, Field f, std::vector<Rep> reps) : quiver_(std::move(q)), field_(f) {
  const int m = static_cast<int>(reps.size());
  const int n = quiver_.vertex_count();
  std::vector<std::vector<int>> h(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) h[a][b] = hom_dim(field_, quiver_, reps[a], reps[b]);

  // Linear extension of Hom != 0, smallest dimension vector first among ready nodes.
  std::vector<int> indeg(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && h[a][b] != 0) ++indeg[b];
  auto cmp = [&](int x, int y) { return reps[x].dims > reps[y].dims; };
  std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
  for (int a = 0; a < m; ++a)
    if (indeg[a] == 0) ready.push(a);
  std::vector<int> order;
  while (!ready.empty()) {
    int a = ready.top();
    ready.pop();
    order.push_back(a);
    for (int b = 0; b < m; ++b)
      if (a != b && h[a][b] != 0 && --indeg[b] == 0) ready.push(b);
  }
  if (static_cast<int>(order.size()) != m) throw ConstructionError("Hom digraph of indecomposables has a cycle");

  for (int i = 0; i < m; ++i) reps_.push_back(std::move(reps[order[i]]));
  hom_.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) hom_[i][j] = h[order[i]][order[j]];
  for (int i = 0; i < m; ++i) {
    if (hom_[i][i] != 1) throw ConstructionError("endomorphism ring of an indecomposable is not the base field");
    for (int j = 0; j < i; ++j)
      if (hom_[i][j] != 0) throw ConstructionError("Hom matrix is not unitriangular");
  }

  std::vector<int> lex(m);
  for (int i = 0; i < m; ++i) {
    by_dim_[reps_[i].dims] = i;
    lex[i] = i;
  }
  std::sort(lex.begin(), lex.end(), [&](int x, int y) { return reps_[x].dims < reps_[y].dims; });
  lex_rank_.assign(m, 0);
  for (int r = 0; r < m; ++r) lex_rank_[lex[r]] = r;

  proj_vertex_.assign(m, -1);
  inj_vertex_.assign(m, -1);
  proj_id_.assign(n, -1);
  inj_id_.assign(n, -1);
  simple_id_.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    auto p = find(projective_rep(quiver_, v).dims);
    auto i = find(injective_rep(quiver_, v).dims);
    auto s = find(simple_rep(quiver_, v).dims);
    if (!p || !i || !s) throw ConstructionError("projective, injective or simple missing from catalog");
    proj_id_[v] = *p;
    inj_id_[v] = *i;
    simple_id_[v] = *s;
    proj_vertex_[*p] = v;
    inj_vertex_[*i] = v;
  }

  for (int i = 0; i < m; ++i) {
    pres_.push_back(projective_presentation(field_, quiver_, reps_[i]));
    copres_.push_back(injective_copresentation(field_, quiver_, reps_[i]));
  }
  ext_.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ext_[i][j] = ext_classes(field_, quiver_, pres_[i], reps_[j]).dimension;
}

std::optional<int> IndCatalog::find(const std::vector<int>& dim_vector) const {
  auto it = by_dim_.find(dim_vector);
  if (it == by_dim_.end()) return std::nullopt;
  return it->second;
}

std::string IndCatalog::name(int id) const {
  std::ostringstream os;
  os << '(';
  const auto& d = reps_[id].dims;
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ')';
  return os.str();
}

std::vector<std::pair<int, int>> decompose(const Rep& m, const IndCatalog& catalog) {
  const int size = catalog.size();
  std::vector<long> homs(size), mult(size, 0);
  for (int j = 0; j < size; ++j) homs[j] = hom_dim(catalog.field(), catalog.quiver(), catalog.rep(j), m);
  // Back-substitution: Hom(I_j, M) = sum_i m_i Hom(I_j, I_i), unitriangular.
  for (int j = size - 1; j >= 0; --j) {
    long v = homs[j];
    for (int i = j + 1; i < size; ++i) v -= static_cast<long>(catalog.hom(j, i)) * mult[i];
    if (v < 0) throw ConstructionError("negative multiplicity in Krull-Schmidt decomposition");
    mult[j] = v;
  }
  std::vector<int> total(m.dims.size(), 0);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size; ++i) {
    if (mult[i] == 0) continue;
    out.emplace_back(i, static_cast<int>(mult[i]));
    for (std::size_t v = 0; v < total.size(); ++v) total[v] += static_cast<int>(mult[i]) * catalog.dim_vector(i)[v];
  }
  if (total != m.dims) throw ConstructionError("decomposition does not account for the dimension vector");
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return catalog.lex_rank(a.first) < catalog.lex_rank(b.first); });
  return out;
}

Rep translate(const Rep& m, TranslateDirection direction, const IndCatalog& catalog) {
  const Quiver& q = catalog.quiver();
  const Field& f = catalog.field();
  if (direction == TranslateDirection::tau) {
    Presentation p = projective_presentation(f, q, m);
    RepMap nu_d = injective_map(q, p.gens1, p.gens0, p.coeff);
    return kernel_rep(f, q, nu_d, injective_sum(q, p.gens1));
  }
  Copresentation c = injective_copresentation(f, q, m);
  RepMap nu_inv_d = projective_map(q, c.gens0, c.gens1, c.coeff);
  return cokernel_rep(f, q, nu_inv_d, projective_sum(q, c.gens1));
}

}  // namespace siltsms
