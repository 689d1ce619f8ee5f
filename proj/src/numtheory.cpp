#include "ratde/numtheory.hpp"

#include <limits>
#include <numeric>
#include <vector>

namespace ratde {

int gcd_set(const std::set<int>& s) {
  int g = 0;
  for (int v : s) g = std::gcd(g, v);
  return g;
}

bool representable(long n, const std::set<int>& s) {
  if (s.empty()) throw NotApplicable("representable over an empty generator set");
  if (n < 0) return false;
  std::vector<char> reach(static_cast<std::size_t>(n) + 1, 0);
  reach[0] = 1;
  for (long m = 1; m <= n; ++m)
    for (int g : s)
      if (g <= m && reach[m - g]) {
        reach[m] = 1;
        break;
      }
  return reach[n] != 0;
}

long frobenius_number(const std::set<int>& s) {
  if (gcd_set(s) != 1) throw NotCoprime();
  const long m = *s.begin();
  if (m == 1) return -1;
  // dist[r] = least representable integer congruent to r mod m. Relax in
  // rounds; the graph is tiny (m-1 nodes), so Bellman-Ford style sweeps are
  // fine.
  const long inf = std::numeric_limits<long>::max() / 2;
  std::vector<long> dist(static_cast<std::size_t>(m), inf);
  dist[0] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (long r = 0; r < m; ++r) {
      if (dist[r] == inf) continue;
      for (int g : s) {
        long nr = (r + g) % m;
        long nd = dist[r] + g;
        if (nd < dist[nr]) {
          dist[nr] = nd;
          changed = true;
        }
      }
    }
  }
  long best = 0;
  for (long r = 0; r < m; ++r)
    if (dist[r] > best) best = dist[r];
  return best - m;
}

NumericalSemigroupInfo semigroup_info(const std::set<int>& s) {
  NumericalSemigroupInfo info;
  info.generators = s;
  info.gcd = gcd_set(s);
  if (info.gcd == 1) info.frobenius = frobenius_number(s);
  return info;
}

}  // namespace ratde
