#pragma once

// Orbit categories of D^b(H): C_{-d}(H) = D^b(H)/nu[d] (ambient minus) and
// the (d+1)-Calabi-Yau cluster category C_{d+1}(H) = D^b(H)/nu^{-1}[d+1]
// (ambient plus). Objects are represented by fundamental-domain stalks.

#include "siltsms/derived_cat.hpp"

#include <map>
#include <optional>

namespace siltsms {

enum class Ambient { minus, plus };

std::string to_string(Ambient a);

class OrbitCategory {
 public:
  /// Throws TheoremViolation if the computed Serre functor is not the expected shift.
  OrbitCategory(std::shared_ptr<const DerivedCategory> derived, Ambient ambient, int d);

  const DerivedCategory& derived() const { return *derived_; }
  Ambient ambient() const { return ambient_; }
  int d() const { return d_; }
  /// D_-^[-d,0] or D_+^[1-d,0].
  WindowSpec window() const;

  /// Fundamental domain in canonical order.
  const std::vector<Stalk>& domain() const { return domain_; }
  int size() const { return static_cast<int>(domain_.size()); }
  std::optional<int> index_of(const Stalk& x) const;

  /// F^power for the generator F (nu[d] or nu^{-1}[d+1]).
  Stalk generator(const Stalk& x, int power) const;
  /// Domain index of the orbit of x.
  int project_index(const Stalk& x) const;
  Stalk project(const Stalk& x) const { return domain_[project_index(x)]; }
  DObject project(const DObject& x) const;

  /// dim Hom_C(X, Y[l]) for domain indices.
  long orbit_hom(int x, int y, int l) const;
  long orbit_hom(const Stalk& x, const Stalk& y, int l) const;
  /// The truncated orbit sum sum_n dim Hom_D(X, F^n Y [l]), computed without the cache.
  long orbit_sum(const Stalk& x, const Stalk& y, int l) const;

  /// Calabi-Yau dimension: -d (minus) or d+1 (plus).
  int cy_dimension() const { return ambient_ == Ambient::minus ? -d_ : d_ + 1; }

  std::string ar_quiver_dot() const;
  nlohmann::json census_json() const;

 private:
  std::shared_ptr<const DerivedCategory> derived_;
  Ambient ambient_;
  int d_;
  std::vector<Stalk> domain_;
  std::map<Stalk, int> index_;
  int lmin_, lmax_;
  std::vector<long> table_;
};

}  // namespace siltsms
