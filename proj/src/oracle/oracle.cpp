#include "oracle/oracle.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "common/error.hpp"
#include "common/parallel.hpp"
#include "fqlinalg/rowspace.hpp"

namespace starprod::oracle {

namespace {

fq::FieldPtr field_of(std::uint64_t q) {
  require(q <= fq::kMaxFieldOrder, ErrorCode::kTooLarge, "field order exceeds 2^16");
  return fq::Field::of_order(static_cast<std::uint32_t>(q));
}

// All generators of one side of a pair enumeration, flattened.
struct GeneratorList {
  std::size_t k = 0;
  std::uint64_t count = 0;
  std::vector<Elem> data;

  const Elem* at(std::uint64_t i) const { return data.data() + i * k * stride; }
  std::size_t stride = 0;  // n
};

GeneratorList list_generators(const fq::FieldPtr& field, std::size_t n, std::size_t k, RandomModel model,
                              const EnumBudget& budget) {
  GeneratorList out;
  out.k = k;
  out.stride = n;
  if (model == RandomModel::kSystematic) {
    SystematicEnumerator en(field, n, k, budget);
    out.count = en.count();
    out.data.resize(out.count * k * n);
    for (std::uint64_t i = 0; i < out.count; ++i) en.decode(i, out.data.data() + i * k * n);
  } else {
    SubspaceEnumerator en(field, n, k, budget);
    out.count = en.count();
    out.data.reserve(out.count * k * n);
    en.for_each(0, en.count(), [&](const Elem* b) { out.data.insert(out.data.end(), b, b + k * n); });
  }
  return out;
}

using Histogram = std::vector<std::uint64_t>;

Histogram merge(const std::vector<Histogram>& parts) {
  Histogram total(parts.front().size(), 0);
  for (const auto& h : parts) {
    for (std::size_t i = 0; i < h.size(); ++i) total[i] += h[i];
  }
  return total;
}

// Histogram of outcome(g1, g2, scratch) over the full product of two lists.
Histogram pair_histogram(const GeneratorList& a, const GeneratorList& b, std::size_t outcomes, unsigned threads,
                         const EnumBudget& budget, const std::string& what,
                         const std::function<std::size_t(const Elem*, const Elem*, std::vector<Elem>&)>& outcome) {
  budget.check(BigInt(static_cast<unsigned long>(a.count)) * static_cast<unsigned long>(b.count), what);
  const unsigned workers = resolve_threads(threads);
  std::vector<Histogram> parts(std::max(1u, workers), Histogram(outcomes, 0));
  parallel_blocks(a.count, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    std::vector<Elem> scratch;
    for (std::uint64_t i = begin; i < end; ++i) {
      for (std::uint64_t j = 0; j < b.count; ++j) ++parts[w][outcome(a.at(i), b.at(j), scratch)];
    }
  });
  return merge(parts);
}

BigRat histogram_mean(const Histogram& h, const std::function<BigInt(std::size_t)>& value) {
  BigInt sum = 0, count = 0;
  for (std::size_t d = 0; d < h.size(); ++d) {
    if (h[d] == 0) continue;
    const BigInt c(static_cast<unsigned long>(h[d]));
    sum += c * value(d);
    count += c;
  }
  return exact::make_rational(sum, count);
}

BigInt as_big(std::size_t v) { return BigInt(static_cast<unsigned long>(v)); }

Histogram star_pair_histogram(const exact::Params& p, RandomModel model, unsigned threads,
                              const EnumBudget& budget) {
  const auto field = field_of(p.q);
  const auto a = list_generators(field, p.n, p.k1, model, budget);
  const auto b = list_generators(field, p.n, p.k2, model, budget);
  const fq::Field& f = *field;
  const std::size_t n = p.n, k1 = p.k1, k2 = p.k2;
  return pair_histogram(a, b, std::min(n, k1 * k2) + 1, threads, budget, "generator pairs",
                        [&](const Elem* g1, const Elem* g2, std::vector<Elem>& scratch) {
                          return fq::star_rank(f, n, g1, k1, g2, k2, scratch);
                        });
}

}  // namespace

BigRat exact_expected_kernel(const exact::Params& p, unsigned threads, const EnumBudget& budget) {
  const auto h = star_pair_histogram(p, RandomModel::kSystematic, threads, budget);
  return histogram_mean(h, [&](std::size_t d) { return exact::pow_int(p.q, p.k1 * p.k2 - d); });
}

BigRat exact_expected_star_dim(const exact::Params& p, RandomModel model, unsigned threads,
                               const EnumBudget& budget) {
  const auto h = star_pair_histogram(p, model, threads, budget);
  return histogram_mean(h, as_big);
}

BigRat exact_expected_star_dim_fixed(const codes::LinearCode& c, std::size_t l, unsigned threads,
                                     const EnumBudget& budget) {
  const auto& field = c.field();
  const std::size_t n = c.length(), k = c.dim();
  SubspaceEnumerator en(field, n, l, budget);
  const std::vector<Elem> g(c.basis().data().begin(), c.basis().data().end());
  const unsigned workers = resolve_threads(threads);
  std::vector<Histogram> parts(std::max(1u, workers), Histogram(n + 1, 0));
  parallel_blocks(en.count(), workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    std::vector<Elem> scratch;
    en.for_each(begin, end, [&](const Elem* d) { ++parts[w][fq::star_rank(*field, n, g.data(), k, d, l, scratch)]; });
  });
  return histogram_mean(merge(parts), as_big);
}

BigRat exact_expected_intersection(const exact::Params& p, unsigned threads, const EnumBudget& budget) {
  const auto field = field_of(p.q);
  const auto a = list_generators(field, p.n, p.k1, RandomModel::kUniformSubspace, budget);
  const auto b = list_generators(field, p.n, p.k2, RandomModel::kUniformSubspace, budget);
  const fq::Field& f = *field;
  const std::size_t n = p.n, k1 = p.k1, k2 = p.k2;
  const auto h = pair_histogram(a, b, k1 + 1, threads, budget, "subspace pairs",
                                [&](const Elem* g1, const Elem* g2, std::vector<Elem>& scratch) {
                                  return k1 + k2 - fq::stacked_rank(f, n, g1, k1, g2, k2, scratch);
                                });
  return histogram_mean(h, as_big);
}

ZeroDiagCounts count_zero_diag_oracle(std::size_t k1, std::size_t k2, std::uint64_t q, const EnumBudget& budget) {
  require(k1 >= 1 && k1 <= k2, ErrorCode::kInvalidArgument, "need 1 <= k1 <= k2");
  require(k2 - k1 < 32, ErrorCode::kTooLarge, "too many off-diagonal columns");
  budget.check(exact::pow_int(q, k1 * k2), "k1 x k2 matrices");
  const auto field = field_of(q);
  // Off-diagonal cells, odometer-enumerated.
  std::vector<std::size_t> cells;
  for (std::size_t r = 0; r < k1; ++r) {
    for (std::size_t c = 0; c < k2; ++c) {
      if (r != c) cells.push_back(r * k2 + c);
    }
  }
  std::vector<Elem> a(k1 * k2, 0), scratch;
  std::map<std::size_t, std::uint64_t> by_rank;
  std::map<std::pair<std::size_t, std::uint32_t>, std::uint64_t> by_set;
  for (bool more = true; more;) {
    const std::size_t r = fq::buffer_rank(*field, k1, k2, a.data(), scratch);
    std::uint32_t zero_set = 0;
    for (std::size_t c = k1; c < k2; ++c) {
      bool zero = true;
      for (std::size_t row = 0; row < k1 && zero; ++row) zero = a[row * k2 + c] == 0;
      if (zero) zero_set |= 1u << (c - k1);
    }
    ++by_rank[r];
    ++by_set[{r, zero_set}];
    more = false;
    for (std::size_t d = cells.size(); d-- > 0;) {
      if (++a[cells[d]] < q) {
        more = true;
        break;
      }
      a[cells[d]] = 0;
    }
  }
  ZeroDiagCounts out;
  for (const auto& [r, c] : by_rank) out.by_rank[r] = BigInt(static_cast<unsigned long>(c));
  for (const auto& [key, c] : by_set) out.by_rank_zero_set[key] = BigInt(static_cast<unsigned long>(c));
  return out;
}

BigInt count_subspaces_with_support_oracle(std::uint64_t q, std::size_t n, std::size_t l, std::size_t s,
                                           const EnumBudget& budget) {
  require(s <= n, ErrorCode::kBadRange, "support size exceeds n");
  const auto field = field_of(q);
  SubspaceEnumerator en(field, n, l, budget);
  std::uint64_t count = 0;
  en.for_each(0, en.count(), [&](const Elem* b) {
    for (std::size_t c = 0; c < n; ++c) {
      bool nonzero = false;
      for (std::size_t r = 0; r < l && !nonzero; ++r) nonzero = b[r * n + c] != 0;
      if (nonzero != (c < s)) return;
    }
    ++count;
  });
  return BigInt(static_cast<unsigned long>(count));
}

MonomialCheck monomial_invariance_check(const codes::LinearCode& c, const fq::Mat& m, std::size_t l,
                                        unsigned threads, const EnumBudget& budget) {
  const auto transformed = codes::apply_monomial(c, m);
  MonomialCheck out;
  out.original = exact_expected_star_dim_fixed(c, l, threads, budget);
  out.transformed = exact_expected_star_dim_fixed(transformed, l, threads, budget);
  out.equal = out.original == out.transformed;
  return out;
}

}  // namespace starprod::oracle
