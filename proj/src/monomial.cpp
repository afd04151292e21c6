#include "starq/monomial.hpp"

#include <sstream>

namespace starq {

namespace {

mpz_class binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

void split_rec(const MultiIndex& I, int var, std::vector<MultiIndex>& parts, mpz_class mult,
               const std::function<void(const std::vector<MultiIndex>&, const mpz_class&)>& fn) {
  while (var < kMaxVars && I[var] == 0) ++var;
  if (var == kMaxVars) {
    fn(parts, mult);
    return;
  }
  int m = I[var];
  int n = static_cast<int>(parts.size());
  // distribute m copies of `var` over the n parts
  std::vector<int> take(static_cast<std::size_t>(n), 0);
  std::function<void(int, int, mpz_class)> dist = [&](int slot, int left, mpz_class acc) {
    if (slot == n - 1) {
      take[static_cast<std::size_t>(slot)] = left;
      // multinomial = prod of successive binomials
      for (int s = 0; s < n; ++s)
        if (take[static_cast<std::size_t>(s)] > 0)
          parts[static_cast<std::size_t>(s)] =
              parts[static_cast<std::size_t>(s)].times_var(var, take[static_cast<std::size_t>(s)]);
      split_rec(I, var + 1, parts, mult * acc, fn);
      for (int s = 0; s < n; ++s)
        if (take[static_cast<std::size_t>(s)] > 0)
          parts[static_cast<std::size_t>(s)] = parts[static_cast<std::size_t>(s)].quotient(
              MultiIndex::var(var, take[static_cast<std::size_t>(s)]));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      take[static_cast<std::size_t>(slot)] = k;
      dist(slot + 1, left - k, acc * binom(left, k));
    }
  };
  dist(0, m, 1);
}

}  // namespace

void for_each_split(const MultiIndex& I, int nparts,
                    const std::function<void(const std::vector<MultiIndex>&, const mpz_class&)>& fn) {
  std::vector<MultiIndex> parts(static_cast<std::size_t>(nparts));
  split_rec(I, 0, parts, 1, fn);
}

void for_each_two_split(const MultiIndex& I,
                        const std::function<void(const MultiIndex&, const MultiIndex&, const mpz_class&)>& fn) {
  for_each_split(I, 2, [&](const std::vector<MultiIndex>& parts, const mpz_class& mult) {
    fn(parts[0], parts[1], mult);
  });
}

std::vector<MultiIndex> submultisets(const MultiIndex& I) {
  std::vector<MultiIndex> out;
  out.push_back(MultiIndex::one());
  for (int v = 0; v < kMaxVars; ++v) {
    int m = I[v];
    if (m == 0) continue;
    std::size_t base = out.size();
    for (int k = 1; k <= m; ++k)
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i].times_var(v, k));
  }
  return out;
}

std::vector<MultiIndex> multiindices_of_order(int nvars, int order) {
  std::vector<MultiIndex> out;
  MultiIndex cur;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      out.push_back(left > 0 ? cur.times_var(var, left) : cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      MultiIndex saved = cur;
      if (k > 0) cur = cur.times_var(var, k);
      rec(var + 1, left - k);
      cur = saved;
    }
  };
  if (nvars <= 0) {
    if (order == 0) out.push_back(MultiIndex::one());
    return out;
  }
  rec(0, order);
  return out;
}

std::string multiindex_str(const MultiIndex& I) {
  std::ostringstream os;
  os << "d[";
  bool first = true;
  for (int idx : I.indices()) {
    if (!first) os << " ";
    os << (idx + 1);
    first = false;
  }
  os << "]";
  return os.str();
}

}  // namespace starq
