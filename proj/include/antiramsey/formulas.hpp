#pragma once

// Closed-form anti-Ramsey values and extremal bounds. Integer arithmetic
// only; every floor and ceiling is done on non-negative integers.

#include <cstdint>
#include <optional>
#include <string>

#include "antiramsey/coloring.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/family.hpp"
#include "antiramsey/host_graph.hpp"

namespace antiramsey {

using Count = std::int64_t;

struct ArResult {
  enum class Method { closed_form, exhaustive };

  Count value = 0;
  Method method = Method::closed_form;
  std::optional<EdgeColoring> witness;
};

inline std::string_view to_string(ArResult::Method m) {
  return m == ArResult::Method::closed_form ? "closed-form" : "exhaustive";
}

struct BoundInterval {
  Count lower = 0;
  Count upper = 0;

  BoundInterval(Count lo, Count hi) : lower(lo), upper(hi) {
    if (lo > hi)
      throw InvariantFailure("bound interval with lower > upper");
  }
  bool exact() const { return lower == upper; }
  friend bool operator==(const BoundInterval &, const BoundInterval &) = default;
};

enum class Forbidden { multipartite_p3, multipartite_cycle };

namespace detail {

inline Count choose2(Count x) { return x * (x - 1) / 2; }
inline Count ceil_div(Count a, Count b) { return (a + b - 1) / b; }

inline void require_multipartite(const PartSizes &parts) {
  if (parts.count() < 3)
    throw InvalidInput("needs at least 3 parts, got " + std::to_string(parts.count()));
}

/// n_1 n_2 + n_3 n_4 + ... over the pairs that fit; for odd r the last part
/// is left out.
inline Count paired_products(const PartSizes &parts) {
  Count sum = 0;
  for (int i = 0; i + 1 < parts.count(); i += 2)
    sum += Count{parts[i]} * parts[i + 1];
  return sum;
}

} // namespace detail

/// ar(K_n, C_k) for n >= k >= 3.
inline Count ar_complete(Count n, Count k) {
  if (k < 3 || n < k)
    throw InvalidInput("ar_complete needs n >= k >= 3");
  const Count q = n / (k - 1);
  const Count rem = n % (k - 1);
  return q * detail::choose2(k - 1) + detail::choose2(rem) + detail::ceil_div(n, k - 1) - 1;
}

/// ar(K_{m,n}, C_{2k}) for n >= m >= 1, k >= 2. The three ranges touch at
/// m = k-1 and m = 2k-1; at those points both neighbouring branches must agree.
inline Count ar_bipartite_even(Count m, Count n, Count k) {
  if (m < 1 || k < 2)
    throw InvalidInput("ar_bipartite_even needs m >= 1 and k >= 2");
  if (m > n)
    throw InvalidInput("ar_bipartite_even needs m <= n");
  const auto high = [&] { return (k - 1) * (m + n) - 2 * (k - 1) * (k - 1) + 1; };
  const auto middle = [&] { return (k - 1) * n + m - (k - 1); };
  const auto low = [&] { return m * n; };
  if (m == 2 * k - 1 && high() != middle())
    throw InvariantFailure("ar_bipartite_even branches disagree at m = 2k-1");
  if (m == k - 1 && middle() != low())
    throw InvariantFailure("ar_bipartite_even branches disagree at m = k-1");
  if (m >= 2 * k - 1)
    return high();
  if (m >= k - 1)
    return middle();
  return low();
}

/// ar(K_n + complement(K_s), C_3).
inline Count ar_split_c3(Count n, Count s) {
  if (n < 2 || s < 1)
    throw InvalidInput("ar_split_c3 needs n >= 2 and s >= 1");
  return n + s - 1;
}

/// The older interval for ar(K_n + complement(K_s), C_4), valid for s >= n >= 4.
inline BoundInterval split_c4_interval(Count n, Count s) {
  if (n < 4 || s < n)
    throw InvalidInput("interval bound needs s >= n >= 4");
  return {4 * n / 3 + s - 1, 7 * n / 3 + s - 3};
}

/// ar(K_n + complement(K_s), C_4). Exact (degenerate interval) when 2s >= n;
/// nothing when the parameters fall outside every known result.
inline std::optional<BoundInterval> ar_split_c4(Count n, Count s) {
  if (n < 4 || s < 1)
    throw InvalidInput("ar_split_c4 needs n >= 4 and s >= 1");
  if (2 * s >= n) {
    const Count v = 3 * n / 2 + s - 1;
    return BoundInterval{v, v};
  }
  // s >= n implies 2s >= n, so this is only reachable if the exact case
  // above is ever narrowed.
  if (s >= n)
    return split_c4_interval(n, s);
  return std::nullopt;
}

/// Maximum number of vertex-disjoint triangles in K_{n_1,...,n_r}.
inline Count max_independent_triangles(const PartSizes &parts) {
  detail::require_multipartite(parts);
  Count all = 0, from_second = 0, from_third = 0;
  for (int i = 0; i < parts.count(); ++i) {
    all += parts[i];
    if (i >= 1)
      from_second += parts[i];
    if (i >= 2)
      from_third += parts[i];
  }
  return std::min({all / 3, from_second / 2, from_third});
}

/// ar(K_{n_1,...,n_r}, {C3, C4}) = n - 1.
inline Count ar_rpartite_c3c4(const PartSizes &parts) {
  detail::require_multipartite(parts);
  return Count{parts.total()} - 1;
}

/// ar(K_{n_1,...,n_r}, C3): paired products, plus n_r for odd r, plus
/// floor(r/2) - 1.
inline Count ar_rpartite_c3(const PartSizes &parts) {
  detail::require_multipartite(parts);
  const int r = parts.count();
  Count value = detail::paired_products(parts) + r / 2 - 1;
  if (r % 2 == 1)
    value += parts[r - 1];
  return value;
}

/// ar(K_{n_1,...,n_r}, C4) = n + t - 1 with t the triangle packing number.
inline Count ar_rpartite_c4(const PartSizes &parts) {
  detail::require_multipartite(parts);
  return Count{parts.total()} + max_independent_triangles(parts) - 1;
}

/// Largest edge count of a subgraph of the host avoiding the configuration.
inline Count extremal_edge_bound(const PartSizes &parts, Forbidden forbidden) {
  detail::require_multipartite(parts);
  if (forbidden == Forbidden::multipartite_p3)
    return detail::paired_products(parts);
  const int r = parts.count();
  Count value = detail::paired_products(parts) + r / 2 - 1;
  if (r % 2 == 1)
    value += parts[r - 1];
  return value;
}

/// Closed form for the three cycle families with a known r-partite answer.
inline Count closed_form_ar(const PartSizes &parts, const CycleFamily &family) {
  if (family == CycleFamily{3})
    return ar_rpartite_c3(parts);
  if (family == CycleFamily{4})
    return ar_rpartite_c4(parts);
  if (family == CycleFamily{3, 4})
    return ar_rpartite_c3c4(parts);
  throw InvalidInput("no closed form for family " + family.name());
}

} // namespace antiramsey
