#include "curvop/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "curvop/errors.hpp"
#include "curvop/numerics.hpp"

namespace curvop {

FirstKindEigs3::FirstKindEigs3(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
  if (!(a <= b && b <= c))
    throw InvalidInput("FirstKindEigs3: eigenvalues must satisfy a <= b <= c");
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
    throw InvalidInput("FirstKindEigs3: non-finite eigenvalue");
}

SchoutenSpectrum::SchoutenSpectrum(std::size_t dim, std::vector<Entry> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidInput("SchoutenSpectrum: no eigenvalues");
  int total = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].mult < 1)
      throw InvalidInput("SchoutenSpectrum: multiplicities must be positive");
    if (i > 0 && !(entries_[i - 1].mu < entries_[i].mu))
      throw InvalidInput("SchoutenSpectrum: eigenvalues must be strictly increasing");
    total += entries_[i].mult;
  }
  if (std::size_t(total) != dim_)
    throw InvalidInput("SchoutenSpectrum: multiplicities must sum to the dimension");
}

SchoutenSpectrum SchoutenSpectrum::from_values(std::span<const double> values,
                                               double coalesce_tol) {
  if (values.empty()) throw InvalidInput("SchoutenSpectrum: no eigenvalues");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  std::vector<Entry> entries;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= v.size(); ++i) {
    if (i == v.size() || v[i] - v[i - 1] > coalesce_tol) {
      double mean = 0.0;
      for (std::size_t j = start; j < i; ++j) mean += v[j];
      mean /= double(i - start);
      entries.push_back({mean, int(i - start)});
      start = i;
    }
  }
  return SchoutenSpectrum(v.size(), std::move(entries));
}

std::vector<double> SchoutenSpectrum::expanded() const {
  std::vector<double> out;
  out.reserve(dim_);
  for (const auto& e : entries_)
    out.insert(out.end(), std::size_t(e.mult), e.mu);
  return out;
}

SecondKindSpectrum::SecondKindSpectrum(std::vector<SpectrumEntry> entries,
                                       double coalesce_tol) {
  if (entries.empty()) throw InvalidInput("SecondKindSpectrum: no entries");
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
    if (x.value != y.value) return x.value < y.value;
    return x.provenance < y.provenance;
  });
  for (const auto& e : entries) {
    if (e.multiplicity < 1)
      throw InvalidInput("SecondKindSpectrum: multiplicities must be positive");
    values_.insert(values_.end(), std::size_t(e.multiplicity), e.value);
  }
  std::size_t start = 0;
  for (std::size_t i = 1; i <= entries.size(); ++i) {
    if (i == entries.size() || entries[i].value - entries[i - 1].value > coalesce_tol) {
      double mean = 0.0;
      int mult = 0;
      for (std::size_t j = start; j < i; ++j) {
        mean += entries[j].value * entries[j].multiplicity;
        mult += entries[j].multiplicity;
      }
      mean /= double(mult);
      entries_.push_back({mean, mult, entries[start].provenance});
      start = i;
    }
  }
}

int SecondKindSpectrum::total_multiplicity() const {
  int t = 0;
  for (const auto& e : entries_) t += e.multiplicity;
  return t;
}

std::pair<double, double> extreme_eigenvalues_3d(const FirstKindEigs3& e) {
  const double s = e.a + e.b + e.c;
  // 3(a^2+b^2+c^2) - (a+b+c)^2 rewritten as a sum of squared differences:
  // nonnegative by construction and exact on the diagonal a = b = c.
  const double radicand = (e.a - e.b) * (e.a - e.b) + (e.b - e.c) * (e.b - e.c) +
                          (e.a - e.c) * (e.a - e.c);
  const double w = std::sqrt(2.0 * radicand);
  return {(s - w) / 3.0, (s + w) / 3.0};
}

SecondKindSpectrum spectrum_3d(const FirstKindEigs3& e) {
  const auto [lm, lp] = extreme_eigenvalues_3d(e);
  return SecondKindSpectrum({{lm, 1, Provenance::Secular},
                             {e.a, 1, Provenance::CrossPair},
                             {e.b, 1, Provenance::CrossPair},
                             {e.c, 1, Provenance::CrossPair},
                             {lp, 1, Provenance::Secular}});
}

std::array<double, 3> schouten_eigenvalues_3d(const FirstKindEigs3& e) {
  return {0.5 * (e.a + e.b - e.c), 0.5 * (e.a + e.c - e.b), 0.5 * (e.b + e.c - e.a)};
}

std::vector<std::pair<double, int>> secular_roots(const SchoutenSpectrum& s) {
  const auto& es = s.entries();
  const std::size_t k = es.size();
  if (k == 0) throw InvalidInput("secular_roots: empty spectrum");
  if (k == 1) return {};

  const double n = double(s.dim());
  auto f = [&](double lam) {
    double v = -0.5 * n;
    for (const auto& e : es) v += double(e.mult) * e.mu / (2.0 * e.mu - lam);
    return v;
  };

  bool has_zero_mu = false;
  double inv_sum = 0.0;
  double inv_abs = 0.0;
  for (const auto& e : es) {
    if (e.mu == 0.0) {
      has_zero_mu = true;
    } else {
      inv_sum += double(e.mult) / e.mu;
      inv_abs += std::abs(double(e.mult) / e.mu);
    }
  }
  const bool zero_sum = !has_zero_mu && std::abs(inv_sum) <= 1e-12 * inv_abs;

  auto inset = [](double bp) { return 1e-12 * std::max(1.0, std::abs(bp)); };

  std::vector<std::pair<double, int>> roots;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const double bp_lo = 2.0 * es[i].mu;
    const double bp_hi = 2.0 * es[i + 1].mu;
    double lo = bp_lo + inset(bp_lo);
    double hi = bp_hi - inset(bp_hi);
    // With no zero eigenvalue, f(0) = 0 identically; the interval around
    // the origin holds either the zero eigenvalue (zero-sum branch) or a
    // nonzero root on the side selected by the sign of sum n_i/mu_i.
    const bool contains_origin = !has_zero_mu && bp_lo < 0.0 && bp_hi > 0.0;
    if (contains_origin) {
      if (zero_sum) {
        roots.emplace_back(0.0, 1);
        continue;
      }
      if (inv_sum > 0.0)
        hi = -1e-12;
      else
        lo = 1e-12;
    }
    double r;
    try {
      r = bracketed_root(f, {lo, hi}, 1e-15);
    } catch (const BadBracket&) {
      if (contains_origin) {
        // Root indistinguishable from 0 at the bracket inset.
        roots.emplace_back(0.0, 1);
        continue;
      }
      throw;
    }
    roots.emplace_back(r, 1);
  }
  return roots;
}

SecondKindSpectrum spectrum_general(const SchoutenSpectrum& s) {
  const auto& es = s.entries();
  std::vector<SpectrumEntry> entries;
  for (std::size_t i = 0; i + 1 < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      entries.push_back({es[i].mu + es[j].mu, es[i].mult * es[j].mult,
                         Provenance::CrossPair});
  for (const auto& e : es) {
    if (e.mult < 2) continue;
    entries.push_back({2.0 * e.mu, e.mult * (e.mult - 1) / 2, Provenance::BlockPair});
    entries.push_back({2.0 * e.mu, e.mult - 1, Provenance::BlockDiagonal});
  }
  for (const auto& [root, mult] : secular_roots(s))
    entries.push_back({root, mult,
                       root == 0.0 ? Provenance::ZeroSecular : Provenance::Secular});
  return SecondKindSpectrum(std::move(entries));
}

}  // namespace curvop
