#include "siltsms/root_data.hpp"

#include "siltsms/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

namespace siltsms {

namespace {

Family family_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw ClassificationError(std::string("unknown Dynkin family '") + c + "'");
  }
}

char family_char(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

void check_rank(const DynkinType& t) {
  const int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B:
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok) throw ClassificationError("rank " + std::to_string(n) + " is not valid for family " + family_char(t.family));
}

std::vector<std::vector<int>> simply_laced_cartan(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (auto [i, j] : edges) a[i][j] = a[j][i] = -1;
  return a;
}

std::vector<std::pair<int, int>> chain(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

Scalar product_formula(const RootDatum& r, int d, int offset) {
  Scalar acc = 1;
  for (int e : r.exponents) acc *= Scalar(d * r.coxeter_number + e + offset) / Scalar(e + 1);
  return acc;
}

BigInt require_integral(const Scalar& q, const std::string& what) {
  if (denominator(q) != 1) throw ArithmeticError(what + " is not integral: " + q.str());
  return numerator(q);
}

}  // namespace

DynkinType DynkinType::parse(std::string_view label) {
  if (label.empty()) throw ClassificationError("empty Dynkin label");
  DynkinType t;
  t.family = family_from_char(label.front());
  std::string_view rest = label.substr(1);
  if (!rest.empty() && rest.front() == '_') rest.remove_prefix(1);
  int n = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size())
    throw ClassificationError("cannot parse Dynkin label '" + std::string(label) + "'");
  t.rank = n;
  check_rank(t);
  return t;
}

std::string DynkinType::label() const { return std::string(1, family_char(family)) + std::to_string(rank); }

RootDatum make_root_datum(const DynkinType& type) {
  check_rank(type);
  RootDatum r;
  r.type = type;
  const int n = type.rank;
  r.rank = n;
  r.simply_laced = type.simply_laced();
  switch (type.family) {
    case Family::A:
      r.coxeter_number = n + 1;
      for (int i = 1; i <= n; ++i) r.exponents.push_back(i);
      r.cartan = simply_laced_cartan(n, chain(n));
      break;
    case Family::B:
    case Family::C:
      r.coxeter_number = 2 * n;
      for (int i = 1; i <= 2 * n - 1; i += 2) r.exponents.push_back(i);
      r.cartan = simply_laced_cartan(n, chain(n));
      // alpha_n short for B, long for C.
      if (type.family == Family::B) r.cartan[n - 1][n - 2] = -2;
      else r.cartan[n - 2][n - 1] = -2;
      break;
    case Family::D: {
      r.coxeter_number = 2 * (n - 1);
      for (int i = 1; i <= 2 * n - 3; i += 2) r.exponents.push_back(i);
      r.exponents.push_back(n - 1);
      std::sort(r.exponents.begin(), r.exponents.end());
      auto e = chain(n - 1);
      e.emplace_back(n - 3, n - 1);
      r.cartan = simply_laced_cartan(n, e);
      break;
    }
    case Family::E: {
      static const std::map<int, std::pair<int, std::vector<int>>> table = {
          {6, {12, {1, 4, 5, 7, 8, 11}}},
          {7, {18, {1, 5, 7, 9, 11, 13, 17}}},
          {8, {30, {1, 7, 11, 13, 17, 19, 23, 29}}},
      };
      r.coxeter_number = table.at(n).first;
      r.exponents = table.at(n).second;
      // Bourbaki: 1-3-4-5-6(-7-8), 2-4.
      std::vector<std::pair<int, int>> e = {{0, 2}, {1, 3}};
      for (int i = 2; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      r.cartan = simply_laced_cartan(n, e);
      break;
    }
    case Family::F:
      r.coxeter_number = 12;
      r.exponents = {1, 5, 7, 11};
      r.cartan = simply_laced_cartan(4, chain(4));
      r.cartan[2][1] = -2;
      break;
    case Family::G:
      r.coxeter_number = 6;
      r.exponents = {1, 5};
      r.cartan = {{2, -3}, {-1, 2}};
      break;
  }
  r.positive_root_count = static_cast<long>(n) * r.coxeter_number / 2;
  return r;
}

std::vector<std::vector<int>> positive_roots(const RootDatum& datum) {
  const int n = datum.rank;
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> a(n, 0);
    a[i] = 1;
    found.insert(a);
    frontier.push_back(a);
  }
  // Root strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
  // where p is the length of the downward alpha_i-string through beta.
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * datum.cartan[i][j];
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (!found.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (found.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> roots(found.begin(), found.end());
  std::stable_sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    return ha < hb;
  });
  return roots;
}

BigInt fuss_catalan(const RootDatum& datum, int d, CountVariant variant) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  return require_integral(product_formula(datum, d, variant == CountVariant::full ? 1 : -1),
                          "Fuss-Catalan product for " + datum.type.label());
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt acc = 1;
  for (long i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

BigInt family_closed_form(const RootDatum& datum, int d, CountVariant variant) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  const long n = datum.rank;
  const long D = d;
  Scalar v;
  if (variant == CountVariant::positive) {
    switch (datum.type.family) {
      case Family::A: v = Scalar(binomial((D + 1) * n + D - 1, n)) / (n + 1); break;
      case Family::B:
      case Family::C: v = Scalar(binomial((D + 1) * n - 1, n)); break;
      case Family::D:
        v = Scalar((2 * D + 1) * n - 2 * D - 2) / n * Scalar(binomial((n - 1) * (D + 1) - 1, n - 1));
        break;
      case Family::E:
        if (n == 6) {
          v = Scalar(BigInt(D) * (2 * D + 1) * (3 * D + 1) * (4 * D + 1) * (6 * D + 5) * (12 * D + 7)) / 30;
        } else if (n == 7) {
          v = Scalar(BigInt(D) * (3 * D + 1) * (3 * D + 2) * (9 * D + 2) * (9 * D + 4) * (9 * D + 5) * (9 * D + 8)) /
              280;
        } else {
          v = Scalar(BigInt(D) * (3 * D + 1) * (5 * D + 1) * (5 * D + 2) * (5 * D + 3) * (15 * D + 8) *
                     (15 * D + 11) * (15 * D + 14)) /
              1344;
        }
        break;
      case Family::F: v = Scalar(BigInt(D) * (2 * D + 1) * (3 * D + 1) * (6 * D + 5)) / 2; break;
      case Family::G: v = Scalar(3 * D * D + 2 * D); break;
    }
  } else {
    switch (datum.type.family) {
      case Family::A: v = Scalar(binomial((D + 1) * (n + 1), n)) / (n + 1); break;
      case Family::B:
      case Family::C: v = Scalar(binomial((D + 1) * n, n)); break;
      default: return fuss_catalan(datum, d, variant);
    }
  }
  return require_integral(v, "closed form for " + datum.type.label());
}

std::vector<DynkinType> all_types_up_to_rank(int max_rank) {
  std::vector<DynkinType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({Family::E, n});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

}  // namespace siltsms
