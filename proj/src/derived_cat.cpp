#include "siltsms/derived_cat.hpp"

#include "siltsms/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace siltsms {

Stalk DObject::as_stalk() const {
  if (!is_indecomposable()) throw std::invalid_argument("object is not indecomposable");
  return {summands_[0].ind, summands_[0].shift};
}

std::vector<Stalk> DObject::expanded() const {
  std::vector<Stalk> out;
  for (const auto& s : summands_)
    for (int k = 0; k < s.mult; ++k) out.push_back({s.ind, s.shift});
  return out;
}

int DObject::min_shift() const {
  if (summands_.empty()) throw std::invalid_argument("zero object has no shifts");
  return summands_.front().shift;
}

int DObject::max_shift() const {
  if (summands_.empty()) throw std::invalid_argument("zero object has no shifts");
  return summands_.back().shift;
}

namespace {

// Pieces of a complex of representations glued by blocks between adjacent degrees.
struct Piece {
  int degree;
  Rep rep;
};

struct Block {
  int from;
  int to;
  RepMap map;
};

Complex assemble(const Quiver& q, const std::vector<Piece>& pieces, const std::vector<Block>& blocks) {
  const int n = q.vertex_count();
  std::map<int, std::vector<int>> by_degree;
  for (int p = 0; p < static_cast<int>(pieces.size()); ++p) by_degree[pieces[p].degree].push_back(p);
  std::vector<std::vector<std::size_t>> offset(pieces.size(), std::vector<std::size_t>(n, 0));
  Complex c;
  for (auto& [deg, list] : by_degree) {
    std::vector<Rep> parts;
    std::vector<std::size_t> run(n, 0);
    for (int p : list) {
      for (int v = 0; v < n; ++v) {
        offset[p][v] = run[v];
        run[v] += pieces[p].rep.dims[v];
      }
      parts.push_back(pieces[p].rep);
    }
    c.terms[deg] = direct_sum(q, parts);
  }
  for (auto& [deg, term] : c.terms) {
    auto next = c.terms.find(deg + 1);
    if (next == c.terms.end()) continue;
    RepMap d;
    for (int v = 0; v < n; ++v) d.components.emplace_back(next->second.dims[v], term.dims[v]);
    c.differentials[deg] = std::move(d);
  }
  for (const auto& b : blocks) {
    const int deg = pieces[b.from].degree;
    if (pieces[b.to].degree != deg + 1) throw ConstructionError("block does not raise degree by one");
    auto& d = c.differentials.at(deg);
    for (int v = 0; v < n; ++v) place(d.components[v], b.map.components[v], offset[b.to][v], offset[b.from][v]);
  }
  return c;
}

RepMap combine(const Field& f, const std::vector<RepMap>& basis, const std::vector<Scalar>& coeff, const Rep& src,
               const Rep& tgt) {
  RepMap out = zero_map(src, tgt);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeff[k] == 0) continue;
    for (std::size_t v = 0; v < out.components.size(); ++v)
      out.components[v] = add(f, out.components[v], scale(f, coeff[k], basis[k].components[v]));
  }
  return out;
}

bool all_zero(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

}  // namespace

DerivedCategory::DerivedCategory(std::shared_ptr<const IndCatalog> catalog) : catalog_(std::move(catalog)) {
  const IndCatalog& cat = *catalog_;
  const Quiver& q = cat.quiver();
  const Field& f = cat.field();
  const int m = cat.size();
  hom_cache_.resize(static_cast<std::size_t>(m) * m);
  ext_cache_.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) lex_rank_.push_back(cat.lex_rank(i));

  auto single = [&](const std::vector<std::pair<Rep, int>>& homology) {
    std::vector<Stalk> found;
    for (const auto& [rep, shift] : homology)
      for (auto [id, mult] : decompose(rep, cat))
        for (int k = 0; k < mult; ++k) found.push_back({id, shift});
    if (found.size() != 1) throw TheoremViolation("Nakayama functor did not send an indecomposable to a stalk");
    return found[0];
  };
  for (int i = 0; i < m; ++i) {
    // nu of the projective presentation: I(gens1) -> I(gens0) in degrees -1, 0.
    const Presentation& p = cat.presentation(i);
    RepMap nd = injective_map(q, p.gens1, p.gens0, p.coeff);
    nu_.push_back(single({{kernel_rep(f, q, nd, injective_sum(q, p.gens1)), 1},
                          {cokernel_rep(f, q, nd, injective_sum(q, p.gens0)), 0}}));
    // nu^-1 of the injective copresentation: P(gens0) -> P(gens1) in degrees 0, 1.
    const Copresentation& c = cat.copresentation(i);
    RepMap pd = projective_map(q, c.gens0, c.gens1, c.coeff);
    nu_inv_.push_back(single({{kernel_rep(f, q, pd, projective_sum(q, c.gens0)), 0},
                              {cokernel_rep(f, q, pd, projective_sum(q, c.gens1)), -1}}));
  }
}

bool DerivedCategory::stalk_less(const Stalk& a, const Stalk& b) const {
  if (a.shift != b.shift) return a.shift < b.shift;
  return lex_rank_[a.ind] < lex_rank_[b.ind];
}

DObject DerivedCategory::make(std::vector<Summand> summands) const {
  std::map<std::pair<int, int>, long> acc;
  for (const auto& s : summands) {
    if (s.ind < 0 || s.ind >= catalog_->size()) throw std::out_of_range("indecomposable id out of range");
    if (s.mult < 0) throw std::invalid_argument("negative multiplicity");
    if (s.mult > 0) acc[{s.shift, lex_rank_[s.ind]}] += s.mult;
  }
  std::vector<int> by_lex(catalog_->size());
  for (int i = 0; i < catalog_->size(); ++i) by_lex[lex_rank_[i]] = i;
  DObject out;
  for (auto& [key, mult] : acc) out.summands_.push_back({by_lex[key.second], key.first, static_cast<int>(mult)});
  return out;
}

DObject DerivedCategory::shifted(const DObject& x, int k) const {
  DObject out = x;
  for (auto& s : out.summands_) s.shift += k;
  return out;
}

DObject DerivedCategory::sum(const DObject& x, const DObject& y) const {
  std::vector<Summand> all = x.summands();
  all.insert(all.end(), y.summands().begin(), y.summands().end());
  return make(std::move(all));
}

long DerivedCategory::graded_hom(const Stalk& x, const Stalk& y, int l) const {
  const int e = y.shift + l - x.shift;
  if (e == 0) return catalog_->hom(x.ind, y.ind);
  if (e == 1) return catalog_->ext(x.ind, y.ind);
  return 0;
}

long DerivedCategory::graded_hom(const DObject& x, const DObject& y, int l) const {
  long total = 0;
  for (const auto& a : x.summands())
    for (const auto& b : y.summands())
      total += static_cast<long>(a.mult) * b.mult * graded_hom(Stalk{a.ind, a.shift}, Stalk{b.ind, b.shift}, l);
  return total;
}

long DerivedCategory::total_hom(const Stalk& x, const Stalk& y) const {
  return catalog_->hom(x.ind, y.ind) + catalog_->ext(x.ind, y.ind);
}

long DerivedCategory::hom_in_range(const Stalk& x, const Stalk& y, int lo, int hi) const {
  const int l0 = x.shift - y.shift;
  long total = 0;
  if (lo <= l0 && l0 <= hi) total += catalog_->hom(x.ind, y.ind);
  if (lo <= l0 + 1 && l0 + 1 <= hi) total += catalog_->ext(x.ind, y.ind);
  return total;
}

Stalk DerivedCategory::nakayama(const Stalk& x, NakayamaDirection direction) const {
  const Stalk& image = direction == NakayamaDirection::nu ? nu_[x.ind] : nu_inv_[x.ind];
  return {image.ind, image.shift + x.shift};
}

DObject DerivedCategory::nakayama(const DObject& x, NakayamaDirection direction) const {
  std::vector<Summand> out;
  for (const auto& s : x.summands()) {
    Stalk t = nakayama(Stalk{s.ind, s.shift}, direction);
    out.push_back({t.ind, t.shift, s.mult});
  }
  return make(std::move(out));
}

Stalk DerivedCategory::ar_translate(const Stalk& x, int power) const {
  Stalk cur = x;
  for (int k = 0; k < power; ++k) {
    cur = nakayama(cur, NakayamaDirection::nu);
    cur.shift -= 1;
  }
  for (int k = 0; k < -power; ++k) {
    cur = nakayama(cur, NakayamaDirection::nu_inverse);
    cur.shift += 1;
  }
  return cur;
}

const HomBasis& DerivedCategory::hom_basis(int a, int b) const {
  const std::size_t key = static_cast<std::size_t>(a) * catalog_->size() + b;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (hom_cache_[key]) return *hom_cache_[key];
  }
  auto computed = std::make_unique<HomBasis>(
      siltsms::hom_basis(field(), catalog_->quiver(), catalog_->rep(a), catalog_->rep(b)));
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!hom_cache_[key]) hom_cache_[key] = std::move(computed);
  return *hom_cache_[key];
}

const ExtClasses& DerivedCategory::ext_basis(int a, int b) const {
  const std::size_t key = static_cast<std::size_t>(a) * catalog_->size() + b;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (ext_cache_[key]) return *ext_cache_[key];
  }
  auto computed = std::make_unique<ExtClasses>(
      ext_classes(field(), catalog_->quiver(), catalog_->presentation(a), catalog_->rep(b)));
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!ext_cache_[key]) ext_cache_[key] = std::move(computed);
  return *ext_cache_[key];
}

void DerivedCategory::validate(const DMap& f) const {
  auto src = f.source.expanded();
  auto tgt = f.target.expanded();
  if (f.coeff.size() != tgt.size()) throw std::invalid_argument("DMap: row count differs from target summands");
  for (std::size_t t = 0; t < tgt.size(); ++t) {
    if (f.coeff[t].size() != src.size()) throw std::invalid_argument("DMap: column count differs from source summands");
    for (std::size_t s = 0; s < src.size(); ++s) {
      const int diff = tgt[t].shift - src[s].shift;
      std::size_t expected = 0;
      if (diff == 0) expected = hom_basis(src[s].ind, tgt[t].ind).basis.size();
      if (diff == 1) expected = ext_basis(src[s].ind, tgt[t].ind).representatives.size();
      if (f.coeff[t][s].size() != expected && !(expected == 0 && f.coeff[t][s].empty()))
        throw std::invalid_argument("DMap: component has the wrong number of coordinates");
    }
  }
}

DObject DerivedCategory::cone(const DMap& f) const {
  validate(f);
  const IndCatalog& cat = *catalog_;
  const Quiver& q = cat.quiver();
  const Field& fld = field();
  auto src = f.source.expanded();
  auto tgt = f.target.expanded();

  // Source stalk M[i] -> resolution P1 -> P0 in degrees -i-1, -i; in the cone
  // these sit one degree lower. Target stalk N[j] is N in degree -j.
  std::vector<Piece> pieces;
  std::vector<Block> blocks;
  std::vector<int> p1_piece(src.size(), -1), p0_piece(src.size(), -1), tgt_piece(tgt.size());
  for (std::size_t s = 0; s < src.size(); ++s) {
    const Presentation& p = cat.presentation(src[s].ind);
    const int deg0 = -src[s].shift - 1;
    p0_piece[s] = static_cast<int>(pieces.size());
    pieces.push_back({deg0, p.p0});
    if (p.p1.total_dim() > 0) {
      p1_piece[s] = static_cast<int>(pieces.size());
      pieces.push_back({deg0 - 1, p.p1});
      RepMap neg = p.d;
      for (auto& c : neg.components) c = scale(fld, -1, c);
      blocks.push_back({p1_piece[s], p0_piece[s], std::move(neg)});
    }
  }
  for (std::size_t t = 0; t < tgt.size(); ++t) {
    tgt_piece[t] = static_cast<int>(pieces.size());
    pieces.push_back({-tgt[t].shift, cat.rep(tgt[t].ind)});
  }
  for (std::size_t t = 0; t < tgt.size(); ++t)
    for (std::size_t s = 0; s < src.size(); ++s) {
      const auto& c = f.coeff[t][s];
      if (c.empty() || all_zero(c)) continue;
      const int a = src[s].ind, b = tgt[t].ind;
      const Presentation& p = cat.presentation(a);
      const int diff = tgt[t].shift - src[s].shift;
      if (diff == 0) {
        RepMap phi = combine(fld, hom_basis(a, b).basis, c, cat.rep(a), cat.rep(b));
        blocks.push_back({p0_piece[s], tgt_piece[t], compose(fld, phi, p.cover)});
      } else if (diff == 1) {
        if (p1_piece[s] < 0) continue;
        blocks.push_back({p1_piece[s], tgt_piece[t], combine(fld, ext_basis(a, b).representatives, c, p.p1, cat.rep(b))});
      }
    }

  Complex cx = assemble(q, pieces, blocks);
  for (const auto& [deg, d] : cx.differentials) {
    auto next = cx.differentials.find(deg + 1);
    if (next == cx.differentials.end()) continue;
    for (int v = 0; v < q.vertex_count(); ++v)
      if (!multiply(fld, next->second.components[v], d.components[v]).is_zero())
        throw ConstructionError("cone differential does not square to zero");
  }
  std::vector<Summand> out;
  for (const auto& [deg, term] : cx.terms) {
    Rep h = homology(fld, q, cx, deg);
    if (h.is_zero()) continue;
    for (auto [id, mult] : decompose(h, cat)) out.push_back({id, -deg, mult});
  }
  return make(std::move(out));
}

bool DerivedCategory::in_window(const Stalk& x, const WindowSpec& w) const {
  const int degree = -x.shift;
  switch (w.kind) {
    case WindowKind::plain: return w.m <= degree && degree <= w.n;
    case WindowKind::minus: return degree <= w.n && -nakayama(x, NakayamaDirection::nu_inverse).shift >= w.m + 1;
    case WindowKind::plus: return degree <= w.n && -nakayama(x, NakayamaDirection::nu).shift >= w.m - 1;
  }
  return false;
}

bool DerivedCategory::in_window(const DObject& x, const WindowSpec& w) const {
  for (const auto& s : x.summands())
    if (!in_window(Stalk{s.ind, s.shift}, w)) return false;
  return true;
}

std::vector<Stalk> DerivedCategory::indecomposables_in(const WindowSpec& w) const {
  if (w.m > w.n) throw std::invalid_argument("window with m > n");
  std::vector<Stalk> out;
  // nu and nu^-1 move degrees by at most one, so nothing lies beyond m - 2.
  for (int shift = -w.n; shift <= -w.m + 2; ++shift)
    for (int i = 0; i < catalog_->size(); ++i)
      if (in_window(Stalk{i, shift}, w)) out.push_back({i, shift});
  std::sort(out.begin(), out.end(), [&](const Stalk& a, const Stalk& b) { return stalk_less(a, b); });
  return out;
}

nlohmann::json DerivedCategory::to_json(const DObject& x) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : x.summands())
    arr.push_back({{"dim_vector", catalog_->dim_vector(s.ind)}, {"shift", s.shift}, {"mult", s.mult}});
  return arr;
}

DObject DerivedCategory::from_json(const nlohmann::json& j) const {
  if (!j.is_array()) throw std::invalid_argument("object must be a JSON array of summands");
  std::vector<Summand> out;
  for (const auto& e : j) {
    auto dims = e.at("dim_vector").get<std::vector<int>>();
    auto id = catalog_->find(dims);
    if (!id) throw std::invalid_argument("dimension vector is not a positive root of this quiver");
    out.push_back({*id, e.value("shift", 0), e.value("mult", 1)});
  }
  return make(std::move(out));
}

std::string DerivedCategory::describe(const Stalk& x) const {
  std::string s = catalog_->name(x.ind);
  if (x.shift != 0) s += "[" + std::to_string(x.shift) + "]";
  return s;
}

std::string DerivedCategory::describe(const DObject& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : x.summands()) {
    if (!first) os << " + ";
    first = false;
    if (s.mult > 1) os << s.mult << "*";
    os << describe(Stalk{s.ind, s.shift});
  }
  return os.str();
}

std::vector<Stalk> DerivedCategory::ar_successors(const Stalk& x) const {
  // Locate x = tau^k P(v) in ZQ; every tau-orbit meets exactly one P(v)[0].
  const IndCatalog& cat = *catalog_;
  const Quiver& q = cat.quiver();
  int k = 0, v = -1;
  Stalk fwd = x, back = x;
  const int limit = 4 * (cat.size() + 2) * (std::abs(x.shift) + 2);
  for (int step = 0; step <= limit && v < 0; ++step) {
    if (fwd.shift == 0 && cat.is_projective(fwd.ind)) {
      k = -step;
      v = cat.projective_vertex(fwd.ind);
    } else if (back.shift == 0 && cat.is_projective(back.ind)) {
      k = step;
      v = cat.projective_vertex(back.ind);
    }
    fwd = ar_translate(fwd, 1);
    back = ar_translate(back, -1);
  }
  if (v < 0) throw ConstructionError("stalk does not lie in a tau-orbit of a projective");
  std::vector<Stalk> out;
  for (int a : q.in_arrows(v)) out.push_back(ar_translate({cat.projective_id(q.arrows()[a].source), 0}, k));
  for (int a : q.out_arrows(v)) out.push_back(ar_translate({cat.projective_id(q.arrows()[a].target), 0}, k - 1));
  std::sort(out.begin(), out.end(), [&](const Stalk& a, const Stalk& b) { return stalk_less(a, b); });
  return out;
}

std::string DerivedCategory::ar_quiver_dot(const WindowSpec& w) const {
  auto nodes = indecomposables_in(w);
  std::set<Stalk> present(nodes.begin(), nodes.end());
  std::ostringstream os;
  os << "digraph AR {\n  rankdir=LR;\n";
  for (const auto& s : nodes) os << "  \"" << describe(s) << "\";\n";
  for (const auto& s : nodes)
    for (const auto& t : ar_successors(s))
      if (present.count(t)) os << "  \"" << describe(s) << "\" -> \"" << describe(t) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace siltsms
