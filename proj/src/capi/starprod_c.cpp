#include "starprod/starprod.h"

#include <cstdlib>
#include <cstring>
#include <initializer_list>
#include <new>
#include <string>

#include "apps/apps.hpp"
#include "codes/linear_code.hpp"
#include "common/error.hpp"
#include "common/report_json.hpp"
#include "exactcomb/formulas.hpp"
#include "fqlinalg/matrix_io.hpp"
#include "oracle/checks.hpp"
#include "oracle/oracle.hpp"
#include "sampling/monte_carlo.hpp"
#include "sampling/table1.hpp"

namespace sp = starprod;

struct sp_field {
  sp::fq::FieldPtr field;
};
struct sp_mat {
  sp::fq::Mat mat;
};
struct sp_code {
  sp::codes::LinearCode code;
};

namespace {

thread_local std::string g_last_error;

sp_status status_of(sp::ErrorCode code) {
  using sp::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return SP_ERR_INVALID_ARGUMENT;
    case ErrorCode::kNotPrime: return SP_ERR_NOT_PRIME;
    case ErrorCode::kTooLarge: return SP_ERR_TOO_LARGE;
    case ErrorCode::kNoModulusTableEntry: return SP_ERR_NO_MODULUS;
    case ErrorCode::kDivisionByZero: return SP_ERR_DIVISION_BY_ZERO;
    case ErrorCode::kZeroCode: return SP_ERR_ZERO_CODE;
    case ErrorCode::kLengthMismatch: return SP_ERR_LENGTH_MISMATCH;
    case ErrorCode::kFieldMismatch: return SP_ERR_FIELD_MISMATCH;
    case ErrorCode::kZeroDual: return SP_ERR_ZERO_DUAL;
    case ErrorCode::kBudgetExceeded: return SP_ERR_BUDGET_EXCEEDED;
    case ErrorCode::kDegenerateInput: return SP_ERR_DEGENERATE_INPUT;
    case ErrorCode::kNeitherMds: return SP_ERR_NEITHER_MDS;
    case ErrorCode::kUncoveredCase: return SP_ERR_UNCOVERED_CASE;
    case ErrorCode::kBadRange: return SP_ERR_BAD_RANGE;
    case ErrorCode::kRejectionBudgetExceeded: return SP_ERR_REJECTION_BUDGET;
    case ErrorCode::kNotMonomial: return SP_ERR_NOT_MONOMIAL;
    case ErrorCode::kNotBinary: return SP_ERR_NOT_BINARY;
    case ErrorCode::kIo: return SP_ERR_IO;
    case ErrorCode::kParse: return SP_ERR_PARSE;
  }
  return SP_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes plus a message.
template <class Fn>
sp_status guard(Fn&& body) noexcept {
  try {
    body();
    return SP_OK;
  } catch (const sp::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SP_ERR_TOO_LARGE;
  } catch (const std::exception& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return SP_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "internal error";
    return SP_ERR_INTERNAL;
  }
}

template <class... Ptrs>
void need(const Ptrs*... ptrs) {
  const bool ok = ((ptrs != nullptr) && ...);
  sp::require(ok, sp::ErrorCode::kInvalidArgument, "null pointer argument");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) { *out = dup_string(s); }
void put(char** out, const sp::exact::BigRat& r) { *out = dup_string(sp::exact::to_fraction_string(r)); }
void put(char** out, const sp::exact::BigInt& v) { *out = dup_string(v.get_str()); }

std::uint64_t code_budget(std::uint64_t b) { return b == 0 ? sp::codes::kDefaultEnumerationBudget : b; }
sp::oracle::EnumBudget oracle_budget(std::uint64_t b) { return {b == 0 ? sp::oracle::kDefaultBudget : b}; }

sp::sampling::RandomModel model_of(sp_model m) {
  sp::require(m == SP_MODEL_SYSTEMATIC || m == SP_MODEL_UNIFORM, sp::ErrorCode::kInvalidArgument, "unknown model");
  return m == SP_MODEL_SYSTEMATIC ? sp::sampling::RandomModel::kSystematic
                                  : sp::sampling::RandomModel::kUniformSubspace;
}

void put_code(sp_code** out, sp::codes::LinearCode c) { *out = new sp_code{std::move(c)}; }

void check_elems(const sp::fq::Field& f, std::initializer_list<uint16_t> xs) {
  for (auto x : xs) sp::require(f.contains(x), sp::ErrorCode::kInvalidArgument, "element outside " + f.name());
}

}  // namespace

extern "C" {

const char* sp_version(void) { return "0.1.0"; }

const char* sp_status_name(sp_status status) {
  switch (status) {
    case SP_OK: return "OK";
    case SP_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SP_ERR_NOT_PRIME: return "NotPrime";
    case SP_ERR_TOO_LARGE: return "TooLarge";
    case SP_ERR_NO_MODULUS: return "NoModulusTableEntry";
    case SP_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
    case SP_ERR_ZERO_CODE: return "ZeroCode";
    case SP_ERR_LENGTH_MISMATCH: return "LengthMismatch";
    case SP_ERR_FIELD_MISMATCH: return "FieldMismatch";
    case SP_ERR_ZERO_DUAL: return "ZeroDual";
    case SP_ERR_BUDGET_EXCEEDED: return "BudgetExceeded";
    case SP_ERR_DEGENERATE_INPUT: return "DegenerateInput";
    case SP_ERR_NEITHER_MDS: return "NeitherMDS";
    case SP_ERR_UNCOVERED_CASE: return "UncoveredCase";
    case SP_ERR_BAD_RANGE: return "BadRange";
    case SP_ERR_REJECTION_BUDGET: return "RejectionBudgetExceeded";
    case SP_ERR_NOT_MONOMIAL: return "NotMonomial";
    case SP_ERR_NOT_BINARY: return "NotBinary";
    case SP_ERR_IO: return "Io";
    case SP_ERR_PARSE: return "Parse";
    case SP_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* sp_last_error(void) { return g_last_error.c_str(); }

void sp_string_free(char* s) { std::free(s); }

/* fields */

sp_status sp_field_new(uint32_t q, sp_field** out) {
  return guard([&] {
    need(out);
    *out = new sp_field{sp::fq::Field::of_order(q)};
  });
}

void sp_field_free(sp_field* f) { delete f; }
uint32_t sp_field_order(const sp_field* f) { return f ? f->field->q() : 0; }
uint32_t sp_field_characteristic(const sp_field* f) { return f ? f->field->p() : 0; }

sp_status sp_field_add(const sp_field* f, uint16_t a, uint16_t b, uint16_t* out) {
  return guard([&] {
    need(f, out);
    check_elems(*f->field, {a, b});
    *out = f->field->add(a, b);
  });
}

sp_status sp_field_mul(const sp_field* f, uint16_t a, uint16_t b, uint16_t* out) {
  return guard([&] {
    need(f, out);
    check_elems(*f->field, {a, b});
    *out = f->field->mul(a, b);
  });
}

sp_status sp_field_inv(const sp_field* f, uint16_t a, uint16_t* out) {
  return guard([&] {
    need(f, out);
    check_elems(*f->field, {a});
    *out = f->field->inv(a);
  });
}

/* matrices */

sp_status sp_mat_new(const sp_field* f, size_t rows, size_t cols, const uint16_t* entries, sp_mat** out) {
  return guard([&] {
    need(f, out);
    if (entries == nullptr) {
      *out = new sp_mat{sp::fq::Mat(f->field, rows, cols)};
    } else {
      *out = new sp_mat{sp::fq::Mat(f->field, rows, cols, std::vector<uint16_t>(entries, entries + rows * cols))};
    }
  });
}

sp_status sp_mat_parse(const char* text, sp_mat** out) {
  return guard([&] {
    need(text, out);
    *out = new sp_mat{sp::fq::parse_matrix(text)};
  });
}

sp_status sp_mat_read_file(const char* path, sp_mat** out) {
  return guard([&] {
    need(path, out);
    *out = new sp_mat{sp::fq::read_matrix_file(path)};
  });
}

void sp_mat_free(sp_mat* m) { delete m; }
size_t sp_mat_rows(const sp_mat* m) { return m ? m->mat.rows() : 0; }
size_t sp_mat_cols(const sp_mat* m) { return m ? m->mat.cols() : 0; }
uint32_t sp_mat_field_order(const sp_mat* m) { return m ? m->mat.field()->q() : 0; }

sp_status sp_mat_get(const sp_mat* m, size_t r, size_t c, uint16_t* out) {
  return guard([&] {
    need(m, out);
    sp::require(r < m->mat.rows() && c < m->mat.cols(), sp::ErrorCode::kBadRange, "index out of range");
    *out = m->mat.at(r, c);
  });
}

sp_status sp_mat_rank(const sp_mat* m, size_t* out) {
  return guard([&] {
    need(m, out);
    *out = sp::fq::rank(m->mat);
  });
}

sp_status sp_mat_rref(const sp_mat* m, sp_mat** out) {
  return guard([&] {
    need(m, out);
    *out = new sp_mat{sp::fq::rref(m->mat).reduced};
  });
}

sp_status sp_mat_to_string(const sp_mat* m, char** out) {
  return guard([&] {
    need(m, out);
    put(out, sp::fq::format_matrix(m->mat));
  });
}

/* codes */

sp_status sp_code_from_mat(const sp_mat* generator, sp_code** out) {
  return guard([&] {
    need(generator, out);
    put_code(out, sp::codes::LinearCode::from_matrix(generator->mat));
  });
}

sp_status sp_code_full_space(const sp_field* f, size_t n, sp_code** out) {
  return guard([&] {
    need(f, out);
    put_code(out, sp::codes::full_space(f->field, n));
  });
}

sp_status sp_code_repetition(const sp_field* f, size_t n, sp_code** out) {
  return guard([&] {
    need(f, out);
    put_code(out, sp::codes::repetition_code(f->field, n));
  });
}

sp_status sp_code_evaluation(const sp_field* f, const uint16_t* points, size_t npoints, size_t k, sp_code** out) {
  return guard([&] {
    need(f, points, out);
    put_code(out, sp::codes::evaluation_code(f->field, std::span<const uint16_t>(points, npoints), k));
  });
}

void sp_code_free(sp_code* c) { delete c; }
size_t sp_code_length(const sp_code* c) { return c ? c->code.length() : 0; }
size_t sp_code_dim(const sp_code* c) { return c ? c->code.dim() : 0; }
uint32_t sp_code_field_order(const sp_code* c) { return c ? c->code.field()->q() : 0; }

sp_status sp_code_basis(const sp_code* c, sp_mat** out) {
  return guard([&] {
    need(c, out);
    *out = new sp_mat{c->code.basis()};
  });
}

sp_status sp_code_equal(const sp_code* a, const sp_code* b, int* out) {
  return guard([&] {
    need(a, b, out);
    *out = a->code == b->code ? 1 : 0;
  });
}

sp_status sp_code_star(const sp_code* a, const sp_code* b, sp_code** out) {
  return guard([&] {
    need(a, b, out);
    put_code(out, sp::codes::star_product(a->code, b->code));
  });
}

sp_status sp_code_dual(const sp_code* c, sp_code** out) {
  return guard([&] {
    need(c, out);
    put_code(out, sp::codes::dual(c->code));
  });
}

sp_status sp_code_min_distance(const sp_code* c, uint64_t budget, size_t* out) {
  return guard([&] {
    need(c, out);
    *out = sp::codes::min_distance(c->code, code_budget(budget));
  });
}

sp_status sp_code_dual_distance(const sp_code* c, uint64_t budget, size_t* out) {
  return guard([&] {
    need(c, out);
    *out = sp::codes::dual_distance(c->code, code_budget(budget));
  });
}

sp_status sp_code_is_mds(const sp_code* c, uint64_t budget, int* out) {
  return guard([&] {
    need(c, out);
    *out = sp::codes::is_mds(c->code, code_budget(budget)) ? 1 : 0;
  });
}

sp_status sp_code_is_degenerate(const sp_code* c, int* out) {
  return guard([&] {
    need(c, out);
    *out = sp::codes::is_degenerate(c->code) ? 1 : 0;
  });
}

sp_status sp_code_intersection_dim(const sp_code* a, const sp_code* b, size_t* out) {
  return guard([&] {
    need(a, b, out);
    *out = sp::codes::intersection_dim(a->code, b->code);
  });
}

sp_status sp_code_contains(const sp_code* c, const sp_code* sub, int* out) {
  return guard([&] {
    need(c, sub, out);
    *out = sp::codes::contains(c->code, sub->code) ? 1 : 0;
  });
}

sp_status sp_code_star_bound_dual_distance(const sp_code* a, const sp_code* b, size_t* out) {
  return guard([&] {
    need(a, b, out);
    *out = sp::codes::star_lower_bound_dual_distance(a->code, b->code);
  });
}

sp_status sp_code_star_bound_mds(const sp_code* a, const sp_code* b, size_t* out) {
  return guard([&] {
    need(a, b, out);
    *out = sp::codes::star_lower_bound_mds(a->code, b->code);
  });
}

sp_status sp_code_apply_monomial(const sp_code* c, const sp_mat* monomial, sp_code** out) {
  return guard([&] {
    need(c, monomial, out);
    put_code(out, sp::codes::apply_monomial(c->code, monomial->mat));
  });
}

/* exact formulas */

sp_status sp_qbinom(long n, long k, uint64_t q, char** out) {
  return guard([&] {
    need(out);
    sp::exact::require_prime_power(q);
    put(out, sp::exact::qbinom(n, k, q));
  });
}

sp_status sp_zero_diag_count(long k1, long k2, long r, uint64_t q, char** out) {
  return guard([&] {
    need(out);
    sp::exact::require_prime_power(q);
    put(out, sp::exact::count_zero_diag_rank(k1, k2, r, q));
  });
}

sp_status sp_zero_diag_count_zerocols(long k1, long k2, long r, long l, uint64_t q, char** out) {
  return guard([&] {
    need(out);
    sp::exact::require_prime_power(q);
    put(out, sp::exact::count_zero_diag_rank_zerocols(k1, k2, r, l, q));
  });
}

sp_status sp_zeros_of_form(long r, long k1, long k2, uint64_t q, char** out) {
  return guard([&] {
    need(out);
    sp::exact::require_prime_power(q);
    put(out, sp::exact::zeros_of_form(r, k1, k2, q));
  });
}

sp_status sp_expected_kernel(uint64_t q, size_t n, size_t k1, size_t k2, char** out) {
  return guard([&] {
    need(out);
    put(out, sp::exact::expected_kernel_size(sp::exact::Params::make(q, n, k1, k2)));
  });
}

sp_status sp_star_dim_bound(uint64_t q, size_t n, size_t k1, size_t k2, double* bound, char** expected_kernel) {
  return guard([&] {
    need(bound);
    const auto b = sp::exact::star_dim_lower_bound(sp::exact::Params::make(q, n, k1, k2));
    if (expected_kernel) put(expected_kernel, b.expected_kernel);
    *bound = b.value;
  });
}

sp_status sp_expected_star_dim_mds(uint64_t q, size_t n, size_t k_mds, size_t k_random, char** out) {
  return guard([&] {
    need(out);
    put(out, sp::exact::expected_star_dim_mds(q, n, k_mds, k_random));
  });
}

sp_status sp_count_subspaces_with_support(uint64_t q, long n, long l, long s, char** out) {
  return guard([&] {
    need(out);
    sp::exact::require_prime_power(q);
    put(out, sp::exact::count_subspaces_with_support(q, n, l, s));
  });
}

sp_status sp_expected_intersection(uint64_t q, size_t n, size_t k1, size_t k2, char** out) {
  return guard([&] {
    need(out);
    put(out, sp::exact::expected_intersection_dim(sp::exact::Params::make(q, n, k1, k2)));
  });
}

sp_status sp_kernel_limit(uint64_t q, size_t n, size_t k1, size_t k2, char** out) {
  return guard([&] {
    need(out);
    put(out, sp::exact::kernel_limit_value(sp::exact::Params::make(q, n, k1, k2)));
  });
}

sp_status sp_full_dim_probability_bound(uint64_t q, long exponent, double* out) {
  return guard([&] {
    need(out);
    sp::exact::require_prime_power(q);
    *out = sp::exact::full_dim_probability_bound(q, exponent);
  });
}

sp_status sp_kernel_conjecture(uint64_t q, size_t k1, size_t k2, double* out) {
  return guard([&] {
    need(out);
    sp::exact::require_prime_power(q);
    *out = sp::exact::kernel_conjecture_value(q, k1, k2);
  });
}

sp_status sp_rational_to_decimal(const char* rational, int digits, char** out) {
  return guard([&] {
    need(rational, out);
    sp::require(digits >= 1 && digits <= 1000, sp::ErrorCode::kBadRange, "digits must be in [1, 1000]");
    put(out, sp::exact::to_decimal_string(sp::exact::parse_rational(rational), digits));
  });
}

/* Monte Carlo */

sp_status sp_mc_json(sp_quantity quantity, uint64_t q, size_t n, size_t k1, size_t k2, sp_model model,
                     uint64_t samples, uint64_t seed, unsigned threads, char** out) {
  return guard([&] {
    need(out);
    using sp::sampling::Quantity;
    Quantity qty;
    switch (quantity) {
      case SP_QTY_STAR_DIM: qty = Quantity::kStarDim; break;
      case SP_QTY_KERNEL_SIZE: qty = Quantity::kKernelSize; break;
      case SP_QTY_FULL_DIM: qty = Quantity::kFullDim; break;
      case SP_QTY_INTERSECTION_DIM: qty = Quantity::kIntersectionDim; break;
      default: sp::fail(sp::ErrorCode::kInvalidArgument, "unknown quantity");
    }
    const auto p = sp::exact::Params::make(q, n, k1, k2);
    const auto e = sp::sampling::mc_estimate(qty, p, model_of(model), samples, seed, threads);
    std::optional<double> bound;
    if (qty == Quantity::kStarDim) bound = sp::exact::star_dim_lower_bound(p).value;
    if (qty == Quantity::kKernelSize) bound = sp::exact::to_double(sp::exact::expected_kernel_size(p));
    if (qty == Quantity::kIntersectionDim) bound = sp::exact::to_double(sp::exact::expected_intersection_dim(p));
    put(out, sp::report::estimate_to_json(e, bound).dump());
  });
}

sp_status sp_table1_csv(uint64_t samples, uint64_t seed, unsigned threads, char** out) {
  return guard([&] {
    need(out);
    put(out, sp::sampling::table1_csv(sp::sampling::reproduce_table1(samples, seed, threads)));
  });
}

/* oracle */

sp_status sp_oracle_expected_kernel(uint64_t q, size_t n, size_t k1, size_t k2, unsigned threads, uint64_t budget,
                                    char** out) {
  return guard([&] {
    need(out);
    put(out, sp::oracle::exact_expected_kernel(sp::exact::Params::make(q, n, k1, k2), threads,
                                               oracle_budget(budget)));
  });
}

sp_status sp_oracle_expected_star_dim(uint64_t q, size_t n, size_t k1, size_t k2, sp_model model, unsigned threads,
                                      uint64_t budget, char** out) {
  return guard([&] {
    need(out);
    put(out, sp::oracle::exact_expected_star_dim(sp::exact::Params::make(q, n, k1, k2), model_of(model), threads,
                                                 oracle_budget(budget)));
  });
}

sp_status sp_oracle_expected_star_dim_fixed(const sp_code* c, size_t l, unsigned threads, uint64_t budget,
                                            char** out) {
  return guard([&] {
    need(c, out);
    put(out, sp::oracle::exact_expected_star_dim_fixed(c->code, l, threads, oracle_budget(budget)));
  });
}

sp_status sp_oracle_expected_intersection(uint64_t q, size_t n, size_t k1, size_t k2, unsigned threads,
                                          uint64_t budget, char** out) {
  return guard([&] {
    need(out);
    put(out, sp::oracle::exact_expected_intersection(sp::exact::Params::make(q, n, k1, k2), threads,
                                                     oracle_budget(budget)));
  });
}

sp_status sp_oracle_monomial_check(const sp_code* c, const sp_mat* monomial, size_t l, unsigned threads,
                                   uint64_t budget, int* equal, char** json) {
  return guard([&] {
    need(c, monomial, equal);
    const auto r = sp::oracle::monomial_invariance_check(c->code, monomial->mat, l, threads, oracle_budget(budget));
    *equal = r.equal ? 1 : 0;
    if (json) {
      sp::report::Json j;
      j["equal"] = r.equal;
      j["original"] = sp::exact::to_fraction_string(r.original);
      j["transformed"] = sp::exact::to_fraction_string(r.transformed);
      put(json, j.dump());
    }
  });
}

sp_status sp_oracle_check_json(const char* check, uint64_t qmax, size_t nmax, unsigned threads, uint64_t budget,
                               int* all_pass, char** json) {
  return guard([&] {
    need(check, all_pass);
    sp::oracle::CheckGrid grid;
    grid.qmax = qmax;
    grid.nmax = nmax;
    grid.threads = threads;
    grid.budget = oracle_budget(budget);
    const auto cases = sp::oracle::run_check(check, grid);
    std::size_t passed = 0;
    sp::report::Json list = sp::report::Json::array();
    for (const auto& c : cases) {
      passed += c.pass ? 1 : 0;
      list.push_back({{"case", c.label}, {"pass", c.pass}, {"detail", c.detail}});
    }
    *all_pass = passed == cases.size() ? 1 : 0;
    if (json) {
      sp::report::Json j;
      j["check"] = check;
      j["passed"] = passed;
      j["failed"] = cases.size() - passed;
      j["cases"] = std::move(list);
      put(json, j.dump());
    }
  });
}

/* applications */

sp_status sp_apps_pir_json(const sp_code* c, const sp_code* d, uint64_t budget, char** out) {
  return guard([&] {
    need(c, d, out);
    put(out, sp::report::pir_to_json(sp::apps::pir_rate_bounds(c->code, d->code, code_budget(budget))).dump());
  });
}

sp_status sp_apps_sdmm_json(const sp_code* ca, const sp_code* cb, uint64_t budget, char** out) {
  return guard([&] {
    need(ca, cb, out);
    put(out, sp::report::sdmm_to_json(sp::apps::sdmm_thresholds(ca->code, cb->code, code_budget(budget))).dump());
  });
}

sp_status sp_apps_csst_json(const sp_code* c1, const sp_code* c2, uint64_t budget, char** out) {
  return guard([&] {
    need(c1, out);
    std::optional<sp::codes::LinearCode> second;
    if (c2) second = c2->code;
    put(out, sp::report::csst_to_json(sp::apps::csst_envelope(c1->code, second, code_budget(budget))).dump());
  });
}

}  // extern "C"
