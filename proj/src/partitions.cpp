#include "qcong/partitions.hpp"

#include <algorithm>

namespace qcong {

bool QuadrupleConstraint::admits(const Partition& p1, const Partition& p2, const Partition& p3,
                                 const Partition& p4) const {
  auto s1 = smallest_part(p1);
  if (!s1) return false;
  for (const Partition* p : {&p2, &p3, &p4}) {
    auto s = smallest_part(*p);
    if (s && *s < *s1) return false;  // an empty partition has s = infinity
  }
  if (largest_part(p4) > 2 * *s1) return false;
  if (variant == Variant::V) {
    if (std::count(p1.begin(), p1.end(), *s1) < 2) return false;
  }
  return true;
}

namespace {

void gen_partitions(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

/// count[w] = partitions of w into parts from [lo, hi], for w <= n.
std::vector<Integer> parts_in_range(int n, int lo, int hi) {
  std::vector<Integer> c(static_cast<std::size_t>(n + 1), 0);
  c[0] = 1;
  for (int k = lo; k <= hi && k <= n; ++k) {
    for (int w = k; w <= n; ++w) c[w] += c[w - k];
  }
  return c;
}

std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  if (n >= 0) gen_partitions(n, n, cur, out);
  return out;
}

std::vector<Integer> p_table(int n_max) {
  std::vector<Integer> p(static_cast<std::size_t>(std::max(n_max, 0) + 1), 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    Integer acc = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      int g2 = k * (3 * k + 1) / 2;
      Integer t = p[n - g1];
      if (g2 <= n) t += p[n - g2];
      if (k % 2 == 1) acc += t;
      else acc -= t;
    }
    p[n] = acc;
  }
  return p;
}

Integer p_count(int n) {
  if (n < 0) return 0;
  return p_table(n)[n];
}

Integer uv_count(Variant variant, int n) {
  if (n <= 0) return 0;
  Integer total = 0;
  const int need = variant == Variant::U ? 1 : 2;  // copies of m forced into pi1
  for (int m = 1; need * m <= n; ++m) {
    auto ge_m = parts_in_range(n, m, n);
    // pi1: `need` copies of m plus any partition into parts >= m
    std::vector<Integer> a(static_cast<std::size_t>(n + 1), 0);
    for (int w = need * m; w <= n; ++w) a[w] = ge_m[w - need * m];
    auto r = convolve(a, ge_m);
    r = convolve(r, ge_m);
    r = convolve(r, parts_in_range(n, m, 2 * m));
    total += r[n];
  }
  return total;
}

Integer u_count(int n) { return uv_count(Variant::U, n); }
Integer v_count(int n) { return uv_count(Variant::V, n); }

Integer quadruple_count_brute(Variant variant, int n) {
  if (n <= 0) return 0;
  QuadrupleConstraint rule{variant};
  std::vector<std::vector<Partition>> by_weight;
  for (int w = 0; w <= n; ++w) by_weight.push_back(partitions_of(w));
  Integer count = 0;
  for (int w1 = 1; w1 <= n; ++w1) {
    for (int w2 = 0; w1 + w2 <= n; ++w2) {
      for (int w3 = 0; w1 + w2 + w3 <= n; ++w3) {
        const int w4 = n - w1 - w2 - w3;
        for (const auto& p1 : by_weight[w1])
          for (const auto& p2 : by_weight[w2])
            for (const auto& p3 : by_weight[w3])
              for (const auto& p4 : by_weight[w4])
                if (rule.admits(p1, p2, p3, p4)) ++count;
      }
    }
  }
  return count;
}

std::string to_string(Origin o) {
  switch (o) {
    case Origin::Enumerated: return "enumerated";
    case Origin::SeriesDef: return "series_def";
    case Origin::SeriesLambert: return "series_lambert";
  }
  return "unknown";
}

void SequenceTable::write(std::ostream& os) const {
  os << "# " << name << ' ' << (values.empty() ? 0 : values.size() - 1) << ' ' << to_string(origin)
     << '\n';
  for (const auto& v : values) os << v.get_str() << '\n';
}

}  // namespace qcong
