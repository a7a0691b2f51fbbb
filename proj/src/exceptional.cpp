#include "siltsms/exceptional.hpp"

#include "siltsms/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace siltsms {

namespace {

std::vector<Scalar> unit(std::size_t size, std::size_t k) {
  std::vector<Scalar> v(size, 0);
  v[k] = 1;
  return v;
}

Stalk single(const DerivedCategory& dc, const DObject& obj, const char* what) {
  if (!obj.is_indecomposable())
    throw TheoremViolation(std::string(what) + " produced a non-indecomposable object: " + dc.describe(obj));
  return obj.as_stalk();
}

std::string describe_seq(const DerivedCategory& dc, const ExcSequence& seq) {
  std::string s = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? ", " : "") + dc.describe(seq[i]);
  return s + ")";
}

}  // namespace

Check is_exceptional_sequence(const DerivedCategory& dc, const ExcSequence& seq) {
  const IndCatalog& cat = dc.catalog();
  for (const auto& x : seq)
    if (cat.hom(x.ind, x.ind) != 1 || cat.ext(x.ind, x.ind) != 0)
      return {false, dc.describe(x) + " is not exceptional"};
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (dc.total_hom(seq[i], seq[j]) != 0)
        return {false, "Hom(" + dc.describe(seq[i]) + ", " + dc.describe(seq[j]) + "[l]) != 0 for some l"};
  if (static_cast<int>(seq.size()) == dc.rank()) {
    for (int m = 0; m < cat.size(); ++m) {
      bool perp = true;
      for (const auto& x : seq)
        if (dc.total_hom(Stalk{m, 0}, x) != 0) perp = false;
      if (perp) return {false, "not full: " + cat.name(m) + " lies in the left perpendicular category"};
    }
  }
  return {};
}

Stalk left_mutation_object(const DerivedCategory& dc, const Stalk& x, const Stalk& y) {
  const IndCatalog& cat = dc.catalog();
  const int h = cat.hom(x.ind, y.ind), e = cat.ext(x.ind, y.ind);
  DMap f;
  f.source = dc.make({{x.ind, y.shift, h}, {x.ind, y.shift - 1, e}});
  f.target = dc.stalk(y);
  std::vector<std::vector<Scalar>> row;
  for (int k = 0; k < e; ++k) row.push_back(unit(e, k));
  for (int k = 0; k < h; ++k) row.push_back(unit(h, k));
  f.coeff = {row};
  return single(dc, dc.cone(f), "left mutation");
}

Stalk right_mutation_object(const DerivedCategory& dc, const Stalk& x, const Stalk& y) {
  const IndCatalog& cat = dc.catalog();
  const int h = cat.hom(x.ind, y.ind), e = cat.ext(x.ind, y.ind);
  DMap f;
  f.source = dc.stalk(x);
  f.target = dc.make({{y.ind, x.shift, h}, {y.ind, x.shift + 1, e}});
  for (int k = 0; k < h; ++k) f.coeff.push_back({unit(h, k)});
  for (int k = 0; k < e; ++k) f.coeff.push_back({unit(e, k)});
  return single(dc, dc.shifted(dc.cone(f), -1), "right mutation");
}

ExcSequence mutate(const DerivedCategory& dc, const ExcSequence& seq, int position, MutationDirection direction) {
  if (position < 1 || position >= static_cast<int>(seq.size()))
    throw std::out_of_range("mutation position " + std::to_string(position) + " outside 1.." +
                            std::to_string(static_cast<int>(seq.size()) - 1));
  ExcSequence out = seq;
  const Stalk x = seq[position - 1], y = seq[position];
  if (direction == MutationDirection::left) {
    out[position - 1] = left_mutation_object(dc, x, y);
    out[position] = x;
  } else {
    out[position - 1] = y;
    out[position] = right_mutation_object(dc, x, y);
  }
  Check c = is_exceptional_sequence(dc, out);
  if (!c.ok) throw TheoremViolation("mutation of " + describe_seq(dc, seq) + " is not exceptional: " + c.witness);
  return out;
}

std::vector<ExcSequence> mu_rev_trace(const DerivedCategory& dc, const ExcSequence& seq, Sign sign) {
  const auto dir = sign == Sign::plus ? MutationDirection::left : MutationDirection::right;
  const int n = static_cast<int>(seq.size());
  std::vector<ExcSequence> trace = {seq};
  for (int top = n - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) trace.push_back(mutate(dc, trace.back(), i, dir));
  return trace;
}

ExcSequence mu_rev(const DerivedCategory& dc, const ExcSequence& seq, Sign sign) {
  return mu_rev_trace(dc, seq, sign).back();
}

ExcSequence order_into_exceptional(const DerivedCategory& dc, const std::vector<Stalk>& set) {
  const int m = static_cast<int>(set.size());
  std::vector<int> indeg(m, 0);
  std::vector<std::vector<bool>> edge(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && dc.total_hom(set[a], set[b]) != 0) {
        edge[a][b] = true;
        ++indeg[b];
      }
  auto later = [&](int a, int b) { return dc.stalk_less(set[b], set[a]); };
  std::vector<int> ready;
  for (int a = 0; a < m; ++a)
    if (indeg[a] == 0) ready.push_back(a);
  ExcSequence out;
  while (!ready.empty()) {
    auto it = std::min_element(ready.begin(), ready.end(), [&](int a, int b) { return later(b, a); });
    int a = *it;
    ready.erase(it);
    out.push_back(set[a]);
    for (int b = 0; b < m; ++b)
      if (edge[a][b] && --indeg[b] == 0) ready.push_back(b);
  }
  if (static_cast<int>(out.size()) != m) {
    std::vector<Stalk> copy = set;
    throw TheoremViolation("Hom digraph has a cycle on " + describe_seq(dc, copy));
  }
  Check c = is_exceptional_sequence(dc, out);
  if (!c.ok) throw TheoremViolation("ordered set is not exceptional: " + c.witness);
  return out;
}

std::vector<Stalk> silting_to_smc(const DerivedCategory& dc, const std::vector<Stalk>& silting) {
  ExcSequence seq = mu_rev(dc, order_into_exceptional(dc, silting), Sign::plus);
  std::sort(seq.begin(), seq.end(), [&](const Stalk& a, const Stalk& b) { return dc.stalk_less(a, b); });
  return seq;
}

nlohmann::json sequence_json(const DerivedCategory& dc, const ExcSequence& seq) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : seq) arr.push_back({{"dim_vector", dc.catalog().dim_vector(s.ind)}, {"shift", s.shift}});
  return arr;
}

ExcSequence sequence_from_json(const DerivedCategory& dc, const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("sequence must be a JSON array");
  ExcSequence out;
  for (const auto& e : j) {
    auto id = dc.catalog().find(e.at("dim_vector").get<std::vector<int>>());
    if (!id) throw std::invalid_argument("dimension vector is not a positive root of this quiver");
    out.push_back({*id, e.value("shift", 0)});
  }
  return out;
}

nlohmann::json trace_json(const DerivedCategory& dc, const std::vector<ExcSequence>& trace) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : trace) arr.push_back(sequence_json(dc, s));
  return arr;
}

std::string braid_orbit_dot(const DerivedCategory& dc, const ExcSequence& start, int max_nodes) {
  std::map<ExcSequence, int> ids;
  std::deque<ExcSequence> queue = {start};
  ids[start] = 0;
  std::vector<std::string> labels = {describe_seq(dc, start)};
  std::ostringstream edges;
  while (!queue.empty()) {
    ExcSequence cur = queue.front();
    queue.pop_front();
    for (int i = 1; i < static_cast<int>(cur.size()); ++i)
      for (auto dir : {MutationDirection::left, MutationDirection::right}) {
        ExcSequence next = mutate(dc, cur, i, dir);
        auto it = ids.find(next);
        if (it == ids.end()) {
          if (static_cast<int>(ids.size()) >= max_nodes) continue;
          it = ids.emplace(next, static_cast<int>(ids.size())).first;
          labels.push_back(describe_seq(dc, next));
          queue.push_back(next);
        }
        edges << "  n" << ids[cur] << " -> n" << it->second << " [label=\"" << (dir == MutationDirection::left ? '+' : '-')
              << i << "\"];\n";
      }
  }
  std::ostringstream os;
  os << "digraph braid {\n";
  for (std::size_t k = 0; k < labels.size(); ++k) os << "  n" << k << " [label=\"" << labels[k] << "\"];\n";
  os << edges.str() << "}\n";
  return os.str();
}

}  // namespace siltsms
