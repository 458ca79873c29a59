#include <doctest.h>

#include <algorithm>
#include <iterator>
#include <optional>
#include <random>
#include <vector>

#include "codes/linear_code.hpp"
#include "common/error.hpp"
#include "fqlinalg/field.hpp"

using namespace starprod;
using codes::LinearCode;
using fq::Elem;
using fq::Field;
using fq::Mat;

namespace {

LinearCode code(std::uint32_t q, std::size_t rows, std::size_t cols, std::vector<Elem> e) {
  return LinearCode::from_matrix(Mat(Field::of_order(q), rows, cols, std::move(e)));
}

LinearCode hamming74() {
  return code(2, 4, 7,
              {1, 0, 0, 0, 1, 1, 0,  //
               0, 1, 0, 0, 0, 1, 1,  //
               0, 0, 1, 0, 1, 1, 1,  //
               0, 0, 0, 1, 1, 0, 1});
}

LinearCode grs_5_2() {
  const std::vector<Elem> points{0, 1, 2, 3, 4};
  return codes::evaluation_code(Field::of_order(5), points, 2);
}

LinearCode example_c() {
  return code(7, 3, 6, {1, 0, 0, 4, 5, 2, 0, 1, 0, 6, 1, 1, 0, 0, 1, 5, 6, 5});
}

LinearCode example_c_prime() {
  return code(7, 3, 6, {1, 0, 0, 1, 1, 6, 0, 1, 0, 4, 1, 4, 0, 0, 1, 6, 2, 4});
}

// All codewords by enumerating messages.
std::vector<std::vector<Elem>> codewords(const LinearCode& c) {
  const Field& f = *c.field();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> msg(c.dim(), 0);
  while (true) {
    std::vector<Elem> w(c.length(), 0);
    for (std::size_t i = 0; i < c.dim(); ++i)
      for (std::size_t j = 0; j < c.length(); ++j) w[j] = f.add(w[j], f.mul(msg[i], c.basis().at(i, j)));
    out.push_back(std::move(w));
    std::size_t i = 0;
    while (i < msg.size() && ++msg[i] == f.q()) msg[i++] = 0;
    if (i == msg.size()) break;
  }
  return out;
}

std::size_t weight(const std::vector<Elem>& w) {
  std::size_t n = 0;
  for (auto x : w) n += x != 0;
  return n;
}

std::optional<ErrorCode> code_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

LinearCode random_code(const fq::FieldPtr& f, std::size_t n, std::size_t k, std::mt19937_64& rng) {
  while (true) {
    std::vector<Elem> e(k * n);
    for (auto& x : e) x = static_cast<Elem>(rng() % f->q());
    Mat m(f, k, n, e);
    if (fq::rank(m) == k) return LinearCode::from_matrix(m);
  }
}

}  // namespace

TEST_CASE("from_matrix") {
  auto c = code(2, 2, 4, {1, 0, 1, 1, 0, 1, 0, 1});
  CHECK(c.dim() == 2);
  CHECK(c.systematic().has_value());
  CHECK(code(2, 2, 3, {1, 1, 0, 1, 1, 0}).dim() == 1);
  CHECK(code_of([] { code(3, 2, 2, {0, 0, 0, 0}); }) == ErrorCode::kZeroCode);

  const auto ex = example_c();
  CHECK(ex.dim() == 3);
  CHECK(ex.systematic().has_value());
  CHECK(ex.basis() == Mat(Field::of_order(7), 3, 6, {1, 0, 0, 4, 5, 2, 0, 1, 0, 6, 1, 1, 0, 0, 1, 5, 6, 5}));

  // Without pivots in the leading columns there is no systematic form.
  CHECK_FALSE(code(2, 1, 3, {0, 1, 1}).systematic().has_value());
}

TEST_CASE("star product examples") {
  auto f5 = Field::of_order(5);
  CHECK(codes::star_product(codes::full_space(f5, 4), codes::full_space(f5, 4)) == codes::full_space(f5, 4));
  const auto h = hamming74();
  CHECK(codes::star_product(codes::repetition_code(Field::of_order(2), 7), h) == h);

  const auto grs = grs_5_2();
  const auto sq = codes::star_product(grs, grs);
  CHECK(sq.dim() == 3);
  // Oracle: the span of all four pairwise row products.
  Mat prods(f5, 4, 5);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t c = 0; c < 5; ++c) prods.set(i * 2 + j, c, f5->mul(grs.basis().at(i, c), grs.basis().at(j, c)));
  CHECK(sq == LinearCode::from_matrix(prods));
  CHECK(sq == codes::evaluation_code(f5, std::vector<Elem>{0, 1, 2, 3, 4}, 3));

  CHECK(code_of([&] { codes::star_product(h, codes::full_space(Field::of_order(2), 5)); }) == ErrorCode::kLengthMismatch);
  CHECK(code_of([&] { codes::star_product(h, codes::full_space(Field::of_order(3), 7)); }) ==
        ErrorCode::kFieldMismatch);
}

TEST_CASE("dual") {
  auto f2 = Field::of_order(2);
  const auto even = codes::dual(codes::repetition_code(f2, 3));
  CHECK(even.dim() == 2);
  for (const auto& w : codewords(even)) CHECK(weight(w) % 2 == 0);

  const auto simplex = codes::dual(hamming74());
  CHECK(simplex.dim() == 3);
  const auto words = codewords(simplex);
  CHECK(words.size() == 8);
  for (const auto& w : words) {
    if (weight(w) != 0) CHECK(weight(w) == 4);
  }
  CHECK(code_of([&] { codes::dual(codes::full_space(f2, 3)); }) == ErrorCode::kZeroDual);
}

TEST_CASE("minimum distance") {
  auto f3 = Field::of_order(3);
  CHECK(codes::min_distance(codes::full_space(f3, 4)) == 1);
  CHECK(codes::min_distance(codes::repetition_code(f3, 5)) == 5);
  CHECK(codes::min_distance(hamming74()) == 3);
  CHECK(codes::dual_distance(hamming74()) == 4);
  CHECK(code_of([] { codes::min_distance(codes::full_space(Field::of_order(7), 20), 1000); }) ==
        ErrorCode::kBudgetExceeded);
}

TEST_CASE("support and projection") {
  auto f2 = Field::of_order(2);
  CHECK(codes::support(codes::full_space(f2, 3)) == std::vector<std::size_t>{0, 1, 2});
  CHECK_FALSE(codes::is_degenerate(codes::full_space(f2, 3)));
  const auto e1 = code(2, 1, 3, {1, 0, 0});
  CHECK(codes::support(e1) == std::vector<std::size_t>{0});
  CHECK(codes::is_degenerate(e1));
  CHECK(codes::support(code(2, 2, 3, {1, 1, 0, 0, 1, 1})) == std::vector<std::size_t>{0, 1, 2});

  const std::vector<std::size_t> all{0, 1, 2, 3, 4, 5, 6};
  CHECK(codes::project(hamming74(), all) == hamming74());
  const std::vector<std::size_t> first{0};
  CHECK(codes::project(e1, first) == codes::full_space(f2, 1));
  const std::vector<std::size_t> four{0, 1, 2, 3};
  CHECK(codes::project(hamming74(), four) == codes::full_space(f2, 4));
  const std::vector<std::size_t> bad{9};
  CHECK(code_of([&] { codes::project(e1, bad); }) == ErrorCode::kBadRange);
  const std::vector<std::size_t> tail{1, 2};
  CHECK(code_of([&] { codes::project(e1, tail); }) == ErrorCode::kZeroCode);
}

TEST_CASE("MDS detection") {
  auto f7 = Field::of_order(7);
  CHECK(codes::is_mds(codes::full_space(f7, 4)));
  CHECK(codes::is_mds(codes::repetition_code(f7, 4)));
  CHECK(codes::is_mds(example_c()));
  CHECK(codes::is_mds(example_c_prime()));
  CHECK(codes::is_mds(grs_5_2()));
  CHECK_FALSE(codes::is_mds(hamming74()));

  // Cross-check against d(C) = n - k + 1 by codeword enumeration.
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    auto f = Field::of_order(q);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 2 + rng() % 4, k = 1 + rng() % (n - 1);
      const auto c = random_code(f, n, k, rng);
      std::size_t d = n;
      for (const auto& w : codewords(c))
        if (weight(w) != 0) d = std::min(d, weight(w));
      CHECK(codes::is_mds(c) == (d == n - k + 1));
      CHECK(codes::min_distance(c) == d);
    }
  }
}

TEST_CASE("intersection and containment") {
  auto f2 = Field::of_order(2);
  const auto h = hamming74();
  CHECK(codes::intersection_dim(h, h) == 4);
  CHECK(codes::intersection_dim(code(2, 1, 3, {1, 0, 0}), code(2, 1, 3, {0, 1, 0})) == 0);
  CHECK_FALSE(codes::intersection(code(2, 1, 3, {1, 0, 0}), code(2, 1, 3, {0, 1, 0})).has_value());
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_code(f2, 3, 2, rng), b = random_code(f2, 3, 2, rng);
    const auto d = codes::intersection_dim(a, b);
    CHECK(d >= 1);
    const auto i = codes::intersection(a, b);
    REQUIRE(i.has_value());
    CHECK(i->dim() == d);
    CHECK(codes::contains(a, *i));
    CHECK(codes::contains(b, *i));
  }
  CHECK(codes::contains(codes::full_space(f2, 7), h));
  CHECK_FALSE(codes::contains(h, codes::full_space(f2, 7)));
}

TEST_CASE("star dimension lower bounds") {
  const auto h = hamming74();
  CHECK(codes::star_lower_bound_dual_distance(h, h) == 6);
  CHECK(codes::star_product(h, h).dim() >= 6);
  auto f2 = Field::of_order(2);
  CHECK(code_of([&] { codes::star_lower_bound_dual_distance(codes::full_space(f2, 3), codes::full_space(f2, 3)); }) ==
        ErrorCode::kZeroDual);
  CHECK(code_of([&] { codes::star_lower_bound_dual_distance(code(2, 1, 3, {1, 0, 0}), code(2, 1, 3, {1, 1, 1})); }) ==
        ErrorCode::kDegenerateInput);

  const auto grs = grs_5_2();
  CHECK(codes::star_lower_bound_dual_distance(grs, grs) == 3);
  CHECK(codes::star_lower_bound_mds(grs, grs) == 3);
  CHECK(codes::star_product(grs, grs).dim() == 3);
  CHECK(codes::star_lower_bound_mds(code(2, 1, 3, {1, 1, 1}), code(2, 1, 3, {1, 1, 1})) == 1);
  CHECK(code_of([&] { codes::star_lower_bound_mds(h, h); }) == ErrorCode::kNeitherMds);

  std::mt19937_64 rng(17);
  const auto ex = example_c();
  auto f7 = Field::of_order(7);
  int checked = 0;
  while (checked < 30) {
    const auto partner = random_code(f7, 6, 3, rng);
    if (codes::is_degenerate(partner)) continue;
    CHECK(codes::star_lower_bound_mds(ex, partner) == 5);
    CHECK(codes::star_product(ex, partner).dim() >= 5);
    ++checked;
  }
}

TEST_CASE("star product invariants on random codes") {
  std::mt19937_64 rng(23);
  for (std::uint32_t q : {2u, 3u, 4u, 7u, 8u, 25u}) {
    auto f = Field::of_order(q);
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 2 + rng() % 6, k1 = 1 + rng() % n, k2 = 1 + rng() % n;
      const auto a = random_code(f, n, k1, rng), b = random_code(f, n, k2, rng);
      const bool degenerate = codes::is_degenerate(a) || codes::is_degenerate(b);
      if (degenerate) {
        const auto sa = codes::support(a), sb = codes::support(b);
        std::vector<std::size_t> common;
        std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
        if (common.empty()) {
          CHECK(code_of([&] { codes::star_product(a, b); }) == ErrorCode::kZeroCode);
          continue;
        }
      }
      const auto s = codes::star_product(a, b);
      CHECK(s == codes::star_product(b, a));
      CHECK(s.dim() <= std::min(n, k1 * k2));
      if (!degenerate) CHECK(s.dim() >= std::max(k1, k2));
      if (k1 < n) CHECK(codes::dual(codes::dual(a)) == a);
      if (!codes::is_degenerate(a) && !codes::is_degenerate(b) && k1 < n && k2 < n) {
        CHECK(s.dim() >= codes::star_lower_bound_dual_distance(a, b));
      }
    }
  }
}

TEST_CASE("monomial transforms") {
  auto f7 = Field::of_order(7);
  const auto ex = example_c();
  CHECK(codes::apply_monomial(ex, Mat::identity(f7, 6)) == ex);
  Mat m(f7, 6, 6);
  const std::size_t perm[6] = {3, 0, 5, 1, 4, 2};
  for (std::size_t i = 0; i < 6; ++i) m.set(i, perm[i], static_cast<Elem>(1 + i));
  const auto t = codes::apply_monomial(ex, m);
  CHECK(t.dim() == 3);
  CHECK(codes::is_mds(t));
  CHECK(codes::star_product(t, t).dim() == codes::star_product(ex, ex).dim());

  Mat bad = Mat::identity(f7, 6);
  bad.set(0, 1, 1);
  CHECK(code_of([&] { codes::apply_monomial(ex, bad); }) == ErrorCode::kNotMonomial);
}
