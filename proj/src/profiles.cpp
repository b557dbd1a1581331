#include "ramsey/profiles.hpp"

#include "ramsey/detail/profile_dfs.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

ProfileStats profile_stats(const OverlapProfile& p) {
  const int nmasks = (1 << p.r) - 1;
  if (static_cast<int>(p.cell_sizes.size()) != nmasks)
    throw DomainError("profile has wrong number of cells");
  ProfileStats st;
  st.symmetry_denominator = 1;
  for (int T = 1; T <= nmasks; ++T) {
    int a = p.cell(T);
    st.total_vertices += a;
    st.edge_count += static_cast<long>(a) * (a - 1) / 2;
    st.symmetry_denominator *= factorial(static_cast<unsigned long>(a));
  }
  for (int T = 1; T <= nmasks; ++T) {
    for (int U = T + 1; U <= nmasks; ++U) {
      if (T & U) st.edge_count += static_cast<long>(p.cell(T)) * p.cell(U);
    }
  }
  // coupling graph: i ~ j iff |S_i cap S_j| >= 2
  std::vector<int> parent(p.r);
  for (int i = 0; i < p.r; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < p.r; ++i) {
    for (int j = i + 1; j < p.r; ++j) {
      long shared = 0;
      for (int T = 1; T <= nmasks; ++T)
        if ((T >> i & 1) && (T >> j & 1)) shared += p.cell(T);
      if (shared >= 2) {
        int a = find(i), b = find(j);
        if (a != b) parent[a] = b;
      }
    }
  }
  for (int i = 0; i < p.r; ++i)
    if (find(i) == i) ++st.component_count;
  return st;
}

BigRational tuple_probability(const OverlapProfile& p) {
  ProfileStats st = profile_stats(p);
  return BigRational(pow2(static_cast<unsigned long>(st.component_count)),
                     pow2(static_cast<unsigned long>(st.edge_count)));
}

std::uint64_t enumerate_profiles(int r, int k,
                                 const std::function<void(const OverlapProfile&)>& visit,
                                 const EnumerationLimits& limits) {
  OverlapProfile prof;
  prof.r = r;
  prof.k = k;
  prof.cell_sizes.assign((1u << r) - 1, 0);
  auto leaf = [&](int /*v*/, long /*e*/, int /*c*/, const unsigned __int128& /*den*/,
                  const auto& aval) {
    for (int T = 1; T <= static_cast<int>(prof.cell_sizes.size()); ++T)
      prof.cell_sizes[T - 1] = aval[T];
    visit(prof);
  };
  detail::ProfileWalk<unsigned __int128, false, false, decltype(leaf)> walk(r, k,
                                                                            limits.max_nodes,
                                                                            leaf);
  walk.run();
  return walk.leaves();
}

std::vector<OverlapProfile> list_profiles(int r, int k, const EnumerationLimits& limits) {
  std::vector<OverlapProfile> out;
  enumerate_profiles(
      r, k, [&](const OverlapProfile& p) { out.push_back(p); }, limits);
  return out;
}

}  // namespace ramsey
