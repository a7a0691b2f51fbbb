#include "siltsms/orbit_cat.hpp"

#include "siltsms/errors.hpp"

#include <set>
#include <sstream>

namespace siltsms {

std::string to_string(Ambient a) { return a == Ambient::minus ? "minus" : "plus"; }

OrbitCategory::OrbitCategory(std::shared_ptr<const DerivedCategory> derived, Ambient ambient, int d)
    : derived_(std::move(derived)), ambient_(ambient), d_(d) {
  if (d_ < 1) throw std::invalid_argument("d must be >= 1");
  domain_ = derived_->indecomposables_in(window());
  for (int i = 0; i < size(); ++i) index_[domain_[i]] = i;

  lmin_ = -d_ - 1;
  lmax_ = d_ + 1;
  const int width = lmax_ - lmin_ + 1;
  table_.assign(static_cast<std::size_t>(size()) * size() * width, 0);
  for (int x = 0; x < size(); ++x)
    for (int y = 0; y < size(); ++y)
      for (int l = lmin_; l <= lmax_; ++l)
        table_[(static_cast<std::size_t>(x) * size() + y) * width + (l - lmin_)] = orbit_sum(domain_[x], domain_[y], l);

  const int cy = cy_dimension();
  for (int x = 0; x < size(); ++x)
    for (int y = 0; y < size(); ++y)
      if (orbit_hom(x, y, cy) != orbit_hom(y, x, 0))
        throw TheoremViolation("orbit category " + to_string(ambient_) + " with d=" + std::to_string(d_) +
                               " is not " + std::to_string(cy) + "-Calabi-Yau at " +
                               derived_->describe(domain_[x]) + ", " + derived_->describe(domain_[y]));
}

WindowSpec OrbitCategory::window() const {
  if (ambient_ == Ambient::minus) return {WindowKind::minus, -d_, 0};
  return {WindowKind::plus, 1 - d_, 0};
}

std::optional<int> OrbitCategory::index_of(const Stalk& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Stalk OrbitCategory::generator(const Stalk& x, int power) const {
  const auto fwd = ambient_ == Ambient::minus ? NakayamaDirection::nu : NakayamaDirection::nu_inverse;
  const auto bwd = ambient_ == Ambient::minus ? NakayamaDirection::nu_inverse : NakayamaDirection::nu;
  const int step = ambient_ == Ambient::minus ? d_ : d_ + 1;
  Stalk cur = x;
  for (int k = 0; k < power; ++k) {
    cur = derived_->nakayama(cur, fwd);
    cur.shift += step;
  }
  for (int k = 0; k < -power; ++k) {
    cur.shift -= step;
    cur = derived_->nakayama(cur, bwd);
  }
  return cur;
}

int OrbitCategory::project_index(const Stalk& x) const {
  // Each generator step moves the shift by at least d >= 1.
  const int bound = std::abs(x.shift) + 4;
  for (int k = 0; k <= bound; ++k) {
    if (auto i = index_of(generator(x, k))) return *i;
    if (auto i = index_of(generator(x, -k))) return *i;
  }
  throw ConstructionError("orbit of " + derived_->describe(x) + " misses the fundamental domain");
}

DObject OrbitCategory::project(const DObject& x) const {
  std::vector<Summand> out;
  for (const auto& s : x.summands()) {
    Stalk p = project(Stalk{s.ind, s.shift});
    out.push_back({p.ind, p.shift, s.mult});
  }
  return derived_->make(std::move(out));
}

long OrbitCategory::orbit_sum(const Stalk& x, const Stalk& y, int l) const {
  // Hom_D(X, F^n Y[l]) needs F^n Y[l] to sit 0 or 1 degree from X. Shifts of
  // F^n Y are strictly monotone in n, so stop past that band after three zeros.
  long total = 0;
  for (int dir : {1, -1}) {
    int zeros = 0;
    for (int n = dir == 1 ? 0 : -1;; n += dir) {
      Stalk t = generator(y, n);
      const long term = derived_->graded_hom(x, t, l);
      total += term;
      const int e = t.shift + l - x.shift;
      zeros = term == 0 ? zeros + 1 : 0;
      const bool past = dir == 1 ? e > 1 : e < 0;
      if (past && zeros >= 3) break;
    }
  }
  return total;
}

long OrbitCategory::orbit_hom(int x, int y, int l) const {
  if (l < lmin_ || l > lmax_) return orbit_sum(domain_[x], domain_[y], l);
  const int width = lmax_ - lmin_ + 1;
  return table_[(static_cast<std::size_t>(x) * size() + y) * width + (l - lmin_)];
}

long OrbitCategory::orbit_hom(const Stalk& x, const Stalk& y, int l) const {
  return orbit_hom(project_index(x), project_index(y), l);
}

std::string OrbitCategory::ar_quiver_dot() const {
  std::ostringstream os;
  os << "digraph AR {\n  rankdir=LR;\n";
  for (const auto& s : domain_) os << "  \"" << derived_->describe(s) << "\";\n";
  for (const auto& s : domain_) {
    std::set<Stalk> targets;
    for (const auto& t : derived_->ar_successors(s)) targets.insert(project(t));
    for (const auto& t : targets)
      os << "  \"" << derived_->describe(s) << "\" -> \"" << derived_->describe(t) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json OrbitCategory::census_json() const {
  nlohmann::json objs = nlohmann::json::array();
  const auto& cat = derived_->catalog();
  for (const auto& s : domain_) objs.push_back({{"dim_vector", cat.dim_vector(s.ind)}, {"shift", s.shift}});
  return {{"ambient", to_string(ambient_)}, {"d", d_}, {"size", size()}, {"objects", objs}};
}

}  // namespace siltsms
