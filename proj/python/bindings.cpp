// Python bindings. Objects cross the boundary as (dimension vector, shift)
// tuples; reports travel as JSON text decoded on the Python side.

#include "siltsms/classify.hpp"
#include "siltsms/errors.hpp"
#include "siltsms/root_data.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace siltsms;

namespace {

using PyStalk = std::pair<std::vector<int>, int>;

Field field_from(unsigned prime) { return prime == 0 ? Field::rationals() : Field::prime(prime); }

class Session {
 public:
  Session(const std::string& type, int d, std::vector<std::pair<int, int>> orientation, unsigned prime) {
    const RootDatum datum = make_root_datum(type);
    if (!datum.simply_laced) throw UnsupportedError("enumeration requires simply-laced; use `count`");
    Quiver q = Quiver::default_orientation(datum);
    if (!orientation.empty()) {
      std::vector<Arrow> arrows;
      for (auto [s, t] : orientation) arrows.push_back({s - 1, t - 1});
      q = Quiver::with_orientation(datum, arrows);
    }
    derived_ = make_derived(q, field_from(prime));
    classifier_ = std::make_unique<Classifier>(derived_, d);
  }

  int rank() const { return derived_->rank(); }
  int d() const { return classifier_->d(); }

  std::vector<std::vector<int>> modules() const {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < derived_->catalog().size(); ++i) out.push_back(derived_->catalog().dim_vector(i));
    return out;
  }

  long graded_hom(const PyStalk& x, const PyStalk& y, int l) const {
    return derived_->graded_hom(to_stalk(x), to_stalk(y), l);
  }

  std::vector<std::vector<PyStalk>> enumerate(const std::string& kind, int workers, long budget) const {
    std::vector<std::vector<PyStalk>> out;
    for (const auto& s : classifier_->enumerate(parse_kind(kind), {workers, budget})) out.push_back(from_stalks(s.elements));
    return out;
  }

  std::pair<bool, std::string> check(const std::string& kind, const std::vector<PyStalk>& set) const {
    auto c = classifier_->predicate(parse_kind(kind), to_stalks(set));
    return {c.ok, c.witness};
  }

  std::string verify(int workers, long budget) const {
    return verify_bijections(*classifier_, {workers, budget}).to_json().dump();
  }

  std::vector<PyStalk> mutate_at(const std::vector<PyStalk>& seq, int position, const std::string& direction) const {
    if (direction != "left" && direction != "right") throw std::invalid_argument("direction must be left or right");
    return from_stalks(mutate(*derived_, to_stalks(seq), position,
                              direction == "left" ? MutationDirection::left : MutationDirection::right));
  }

  std::vector<PyStalk> reverse_mutation(const std::vector<PyStalk>& seq, const std::string& sign) const {
    if (sign != "plus" && sign != "minus") throw std::invalid_argument("sign must be plus or minus");
    return from_stalks(mu_rev(*derived_, to_stalks(seq), sign == "plus" ? Sign::plus : Sign::minus));
  }

  std::vector<PyStalk> to_smc(const std::vector<PyStalk>& set) const {
    return from_stalks(classifier_->canonical(silting_to_smc(*derived_, to_stalks(set))));
  }

  std::vector<PyStalk> orbit_domain(const std::string& ambient) const {
    if (ambient == "minus") return from_stalks(classifier_->minus().domain());
    if (ambient == "plus") return from_stalks(classifier_->plus().domain());
    throw std::invalid_argument("ambient must be minus or plus");
  }

 private:
  Stalk to_stalk(const PyStalk& s) const {
    auto id = derived_->catalog().find(s.first);
    if (!id) throw std::invalid_argument("dimension vector is not a positive root of this quiver");
    return {*id, s.second};
  }
  std::vector<Stalk> to_stalks(const std::vector<PyStalk>& v) const {
    std::vector<Stalk> out;
    for (const auto& s : v) out.push_back(to_stalk(s));
    return out;
  }
  std::vector<PyStalk> from_stalks(const std::vector<Stalk>& v) const {
    std::vector<PyStalk> out;
    for (const auto& s : v) out.emplace_back(derived_->catalog().dim_vector(s.ind), s.shift);
    return out;
  }

  std::shared_ptr<const DerivedCategory> derived_;
  std::unique_ptr<Classifier> classifier_;
};

CountVariant variant_from(const std::string& v) {
  if (v == "full") return CountVariant::full;
  if (v == "positive") return CountVariant::positive;
  throw std::invalid_argument("variant must be full or positive");
}

// Decimal text keeps arbitrarily large counts exact; Python converts with int().
std::string count_text(const std::string& type, int d, const std::string& variant, bool closed) {
  const RootDatum datum = make_root_datum(type);
  const BigInt v = closed ? family_closed_form(datum, d, variant_from(variant)) : fuss_catalan(datum, d, variant_from(variant));
  return v.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of siltsms";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_ValueError);
  py::register_exception<TheoremViolation>(m, "TheoremViolation", PyExc_AssertionError);

  m.def("fuss_catalan_text", [](const std::string& t, int d, const std::string& v) { return count_text(t, d, v, false); });
  m.def("closed_form_text", [](const std::string& t, int d, const std::string& v) { return count_text(t, d, v, true); });
  m.def("root_datum", [](const std::string& type) {
    const RootDatum r = make_root_datum(type);
    py::dict out;
    out["type"] = r.type.label();
    out["rank"] = r.rank;
    out["coxeter_number"] = r.coxeter_number;
    out["exponents"] = r.exponents;
    out["positive_root_count"] = r.positive_root_count;
    out["simply_laced"] = r.simply_laced;
    return out;
  });

  py::class_<Session>(m, "Session")
      .def(py::init<const std::string&, int, std::vector<std::pair<int, int>>, unsigned>(), py::arg("type"),
           py::arg("d") = 1, py::arg("orientation") = std::vector<std::pair<int, int>>{}, py::arg("prime") = 0u)
      .def_property_readonly("rank", &Session::rank)
      .def_property_readonly("d", &Session::d)
      .def("modules", &Session::modules)
      .def("graded_hom", &Session::graded_hom)
      .def("enumerate", &Session::enumerate, py::arg("kind"), py::arg("workers") = 1, py::arg("budget") = 0,
           py::call_guard<py::gil_scoped_release>())
      .def("check", &Session::check)
      .def("verify_json", &Session::verify, py::arg("workers") = 1, py::arg("budget") = 0,
           py::call_guard<py::gil_scoped_release>())
      .def("mutate", &Session::mutate_at)
      .def("mu_rev", &Session::reverse_mutation)
      .def("silting_to_smc", &Session::to_smc)
      .def("orbit_domain", &Session::orbit_domain);
}
