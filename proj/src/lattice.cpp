#include "gbs/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>

#include "gbs/errors.hpp"
#include "gbs/rational_lp.hpp"

namespace gbs {

namespace {

const std::int64_t kTrialLimit = 10'000'000;

Label floordiv(const Label& a, const Label& b) {
  // b > 0 here. cpp_int division truncates toward zero.
  Label q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace

std::vector<Label> prime_factors(const Label& n) {
  Label m = abs(n);
  std::vector<Label> out;
  if (m <= 1) return out;
  auto strip = [&](const Label& p) {
    if (m % p != 0) return;
    out.push_back(p);
    while (m % p == 0) m /= p;
  };
  strip(2);
  for (std::int64_t d = 3; d <= kTrialLimit && Label(d) * d <= m; d += 2)
    strip(d);
  if (m > 1) {
    if (m > Label(kTrialLimit) * kTrialLimit)
      throw TooLargeError("cannot certify primality of cofactor " +
                          m.str());
    out.push_back(m);
  }
  return out;
}

int valuation(Label n, const Label& p) {
  n = abs(n);
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

ModulusLattice modular_image(const GbsGraph& g) {
  ModulusLattice out;
  std::set<Label> primes;
  for (const auto& [e, vw] : g.graph().edges()) {
    (void)vw;
    for (int side = 0; side < 2; ++side)
      for (const Label& p : prime_factors(g.label(e, side)))
        primes.insert(p);
  }
  out.primes.assign(primes.begin(), primes.end());

  for (const auto& cycle : cycle_basis(g.graph())) {
    std::vector<Label> row(out.primes.size(), 0);
    for (const OrientedEdge& oe : cycle) {
      const Label& num = g.label(oe.edge, oe.terminus_side());
      const Label& den = g.label(oe.edge, oe.origin_side());
      for (std::size_t j = 0; j < out.primes.size(); ++j)
        row[j] += valuation(num, out.primes[j]) -
                  valuation(den, out.primes[j]);
    }
    out.basis.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<Label>> hermite_normal_form(
    std::vector<std::vector<Label>> rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    // Euclid over the rows at and below r until one nonzero entry remains.
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (rows[i][col] == 0) continue;
        if (best == m || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == m) break;
      std::swap(rows[r], rows[best]);
      bool lone = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (rows[i][col] == 0) continue;
        Label q = rows[i][col] / rows[r][col];
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][col] != 0) lone = false;
      }
      if (lone) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (auto& v : rows[r]) v = -v;
    for (std::size_t i = 0; i < r; ++i) {
      Label q = floordiv(rows[i][col], rows[r][col]);
      if (q == 0) continue;
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

bool same_subgroup(const ModulusLattice& a, const ModulusLattice& b) {
  std::set<Label> union_primes(a.primes.begin(), a.primes.end());
  union_primes.insert(b.primes.begin(), b.primes.end());
  std::vector<Label> primes(union_primes.begin(), union_primes.end());

  auto embed = [&](const ModulusLattice& l) {
    std::vector<std::size_t> at(l.primes.size());
    for (std::size_t j = 0; j < l.primes.size(); ++j)
      at[j] = std::lower_bound(primes.begin(), primes.end(), l.primes[j]) -
              primes.begin();
    std::vector<std::vector<Label>> rows;
    for (const auto& row : l.basis) {
      std::vector<Label> wide(primes.size(), 0);
      for (std::size_t j = 0; j < row.size(); ++j) wide[at[j]] = row[j];
      rows.push_back(std::move(wide));
    }
    return hermite_normal_form(std::move(rows));
  };
  return embed(a) == embed(b);
}

IntegerModulus has_integer_modulus(const ModulusLattice& m) {
  IntegerModulus result;
  const std::size_t k = m.basis.size();
  const std::size_t n = m.primes.size();
  if (k == 0 || n == 0) return result;

  std::vector<std::vector<Rational>> rows(k, std::vector<Rational>(n));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m.basis[i][j];
  auto y = nonneg_combination(rows);
  if (!y) return result;
  result.yes = true;

  auto value_of = [&](const std::vector<Label>& w) {
    Label v = 1;
    for (std::size_t j = 0; j < n; ++j)
      v *= pow(m.primes[j], w[j].convert_to<unsigned>());
    return v;
  };

  // Prefer the smallest witness reachable with small integer coefficients;
  // valuations are tiny so plain int64 accumulation cannot overflow.
  const int kBox = 6;
  if (k <= 6) {
    std::vector<std::vector<std::int64_t>> basis(k,
                                                 std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j)
        basis[i][j] = m.basis[i][j].convert_to<std::int64_t>();
    std::vector<int> c(k, -kBox);
    bool done = false;
    while (!done) {
      std::vector<std::int64_t> w(n, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) w[j] += c[i] * basis[i][j];
      bool nonneg = true, nonzero = false;
      for (auto v : w) {
        if (v < 0) nonneg = false;
        if (v != 0) nonzero = true;
      }
      if (nonneg && nonzero) {
        std::vector<Label> wl(w.begin(), w.end());
        Label val = value_of(wl);
        if (result.witness == 0 || val < result.witness) {
          result.witness = val;
          result.exponents = std::move(wl);
        }
      }
      std::size_t i = 0;
      while (i < k && c[i] == kBox) c[i++] = -kBox;
      if (i == k)
        done = true;
      else
        ++c[i];
    }
  }
  if (result.witness != 0) return result;

  // Fall back to the LP certificate: clear denominators, divide the
  // coefficient vector by its gcd, and take that integer combination.
  Label denom = 1;
  for (const auto& q : *y) denom = lcm(denom, Label(denominator(q)));
  std::vector<Label> c(k);
  Label g = 0;
  for (std::size_t i = 0; i < k; ++i) {
    c[i] = Label(numerator((*y)[i])) * (denom / Label(denominator((*y)[i])));
    g = gcd(g, c[i]);
  }
  if (g > 1)
    for (auto& v : c) v /= g;
  std::vector<Label> w(n, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) w[j] += c[i] * m.basis[i][j];
  result.witness = value_of(w);
  result.exponents = std::move(w);
  return result;
}

}  // namespace gbs
