// Command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starprod/starprod.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

// A library call failed; carries the status for the exit code.
struct ApiError {
  sp_status status;
  std::string message;
};

void check(sp_status s) {
  if (s != SP_OK) throw ApiError{s, sp_last_error()};
}

int exit_code_for(sp_status s) {
  switch (s) {
    case SP_ERR_BUDGET_EXCEEDED:
    case SP_ERR_REJECTION_BUDGET:
      return kExitBudget;
    case SP_ERR_IO:
      return kExitIo;
    default:
      return kExitUsage;
  }
}

struct StringDeleter {
  void operator()(char* s) const { sp_string_free(s); }
};
struct MatDeleter {
  void operator()(sp_mat* m) const { sp_mat_free(m); }
};
struct CodeDeleter {
  void operator()(sp_code* c) const { sp_code_free(c); }
};
using MatPtr = std::unique_ptr<sp_mat, MatDeleter>;
using CodePtr = std::unique_ptr<sp_code, CodeDeleter>;

// Calls fn(char**) and takes ownership of the returned string.
template <class Fn>
std::string take_string(Fn&& fn) {
  char* raw = nullptr;
  check(fn(&raw));
  std::unique_ptr<char, StringDeleter> owned(raw);
  return raw ? std::string(raw) : std::string();
}

std::string decimal(const std::string& rational) {
  return take_string([&](char** out) { return sp_rational_to_decimal(rational.c_str(), 10, out); });
}

CodePtr code_from_text(const std::string& text) {
  sp_mat* m = nullptr;
  check(sp_mat_parse(text.c_str(), &m));
  MatPtr mat(m);
  sp_code* c = nullptr;
  check(sp_code_from_mat(mat.get(), &c));
  return CodePtr(c);
}

CodePtr code_from_file(const std::string& path) {
  sp_mat* m = nullptr;
  check(sp_mat_read_file(path.c_str(), &m));
  MatPtr mat(m);
  sp_code* c = nullptr;
  check(sp_code_from_mat(mat.get(), &c));
  return CodePtr(c);
}

void emit(const std::string& line) {
  std::fputs(line.c_str(), stdout);
  std::fputc('\n', stdout);
}

// Generator matrices of the two [6,3] MDS codes over GF(7) used by example-mds.
constexpr const char* kExampleCodeC =
    "7 3 6\n"
    "1 0 0 4 5 2\n"
    "0 1 0 6 1 1\n"
    "0 0 1 5 6 5\n";
constexpr const char* kExampleCodeCPrime =
    "7 3 6\n"
    "1 0 0 1 1 6\n"
    "0 1 0 4 1 4\n"
    "0 0 1 6 2 4\n";

struct Dims {
  std::uint64_t q = 0;
  std::size_t n = 0, k1 = 0, k2 = 0;
};

void add_dims(CLI::App* cmd, Dims& d, bool with_q = true) {
  if (with_q) cmd->add_option("-q", d.q, "field order (prime power)")->required();
  cmd->add_option("-n", d.n, "code length")->required();
  cmd->add_option("--k1", d.k1, "dimension of the first code")->required();
  cmd->add_option("--k2", d.k2, "dimension of the second code")->required();
}

// "-k1 2" reads naturally but CLI11 would split it into "-k" "1"; rewrite the
// two multi-letter single-dash flags before parsing.
std::vector<std::string> normalize_args(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "-k1" || a == "-k2" || a.rfind("-k1=", 0) == 0 || a.rfind("-k2=", 0) == 0) a = "-" + a;
    args.push_back(std::move(a));
  }
  std::reverse(args.begin(), args.end());
  return args;
}

unsigned resolve_threads(unsigned flag) {
  if (const char* env = std::getenv("STARPROD_THREADS"); env && *env) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0') return static_cast<unsigned>(v);
  }
  return flag;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);

  CLI::App app{"starprod: star products of random linear codes"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "plain";
  unsigned threads_flag = 0;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--threads", threads_flag, "worker threads (0 = all cores; STARPROD_THREADS overrides)");

  Dims bound_dims;
  auto* bound = app.add_subcommand("bound", "exact E|ker psi| and the Jensen lower bound on E dim(C1*C2)");
  add_dims(bound, bound_dims);

  Dims ek_dims;
  bool ek_oracle = false;
  std::uint64_t budget = 0;
  auto* ek = app.add_subcommand("expect-kernel", "exact E|ker psi|, optionally checked by enumeration");
  add_dims(ek, ek_dims);
  ek->add_flag("--oracle", ek_oracle, "also enumerate all systematic pairs");
  ek->add_option("--budget", budget, "enumeration budget (0 = default)");

  Dims mc_dims;
  std::uint64_t samples = 100000, seed = 42;
  std::string model = "systematic", quantity = "star_dim";
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate (JSON)");
  add_dims(mc, mc_dims);
  mc->add_option("--samples", samples, "number of sampled pairs")->check(CLI::PositiveNumber);
  mc->add_option("--seed", seed, "64-bit seed");
  mc->add_option("--model", model, "random code model")->check(CLI::IsMember({"systematic", "uniform"}));
  mc->add_option("--quantity", quantity, "estimated quantity")
      ->check(CLI::IsMember({"star_dim", "kernel_size", "full_dim", "intersection_dim"}));

  std::uint64_t t1_samples = 100000, t1_seed = 42;
  auto* table1 = app.add_subcommand("table1", "36-row comparison of Monte Carlo means and the Jensen bound (CSV)");
  table1->add_option("--samples", t1_samples, "samples per row")->check(CLI::PositiveNumber);
  table1->add_option("--seed", t1_seed, "64-bit seed");

  std::string check_name = "all";
  std::uint64_t qmax = 3;
  std::size_t nmax = 5;
  auto* oracle = app.add_subcommand("oracle", "compare closed forms against exhaustive enumeration");
  oracle->add_option("--check", check_name, "kernel, zerodiag, intersection, mds, support, jensen or all");
  oracle->add_option("--qmax", qmax, "largest field order in the grid");
  oracle->add_option("--nmax", nmax, "largest length in the grid");
  oracle->add_option("--budget", budget, "enumeration budget (0 = default)");

  Dims mds_dims;
  std::string mds_code;
  auto* mds = app.add_subcommand("mds", "E dim(C1*C2) for an MDS C1 (dimension k1) and uniform C2 (dimension k2)");
  add_dims(mds, mds_dims);
  mds->add_option("--code", mds_code, "MDS generator matrix file; adds the enumeration value");

  Dims int_dims;
  bool int_oracle = false;
  auto* intersect = app.add_subcommand("intersect", "E dim(C1 ∩ C2) for uniform subspaces");
  add_dims(intersect, int_dims);
  intersect->add_flag("--oracle", int_oracle, "also enumerate all subspace pairs");
  intersect->add_option("--budget", budget, "enumeration budget (0 = default)");

  Dims lim_dims;
  std::string lim_qs = "2,3,4,5,7,8,9,11,13";
  auto* limit = app.add_subcommand("limit-q", "E|ker psi| against its large-q limit 1 + q^(k1 k2 - n)");
  add_dims(limit, lim_dims, false);
  limit->add_option("--qs", lim_qs, "comma-separated field orders");

  auto* apps = app.add_subcommand("apps", "figures of merit for PIR, SDMM and CSS-T");
  apps->require_subcommand(1);
  std::string path_a, path_b;
  auto* pir = apps->add_subcommand("pir", "PIR rate bounds for (C, D)");
  pir->add_option("--c", path_a, "matrix file of C")->required();
  pir->add_option("--d", path_b, "matrix file of D")->required();
  auto* sdmm = apps->add_subcommand("sdmm", "SDMM recovery threshold for (C_A, C_B)");
  sdmm->add_option("--a", path_a, "matrix file of C_A")->required();
  sdmm->add_option("--b", path_b, "matrix file of C_B")->required();
  auto* csst = apps->add_subcommand("csst", "CSS-T envelope of a binary C1, optionally testing C2");
  csst->add_option("--c1", path_a, "matrix file of C1")->required();
  csst->add_option("--c2", path_b, "matrix file of C2");
  for (auto* sub : {pir, sdmm, csst}) sub->add_option("--budget", budget, "enumeration budget (0 = default)");

  std::string ex_code, ex_ls = "2,3";
  auto* example = app.add_subcommand("example-mds", "E dim(C*D) over all D for the two GF(7) [6,3] MDS codes");
  example->add_option("--code", ex_code, "use this generator matrix file instead");
  example->add_option("--l", ex_ls, "comma-separated dimensions of D");
  example->add_option("--budget", budget, "enumeration budget (0 = default)");

  try {
    app.parse(normalize_args(argc, argv));
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  const unsigned threads = resolve_threads(threads_flag);
  const bool json = format == "json";

  try {
    if (*bound) {
      const auto& d = bound_dims;
      double value = 0;
      char* raw = nullptr;
      check(sp_star_dim_bound(d.q, d.n, d.k1, d.k2, &value, &raw));
      const std::string e(raw);
      sp_string_free(raw);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.10g", value);
      if (json) {
        emit(Json{{"q", d.q}, {"n", d.n}, {"k1", d.k1}, {"k2", d.k2}, {"expected_kernel", e},
                  {"expected_kernel_f64", std::stod(decimal(e))}, {"bound", value}}
                 .dump());
      } else {
        emit("E|ker psi| = " + e + " (" + decimal(e) + ")");
        emit("bound = " + std::string(buf));
      }
      return kExitOk;
    }

    if (*ek) {
      const auto& d = ek_dims;
      const std::string e = take_string([&](char** o) { return sp_expected_kernel(d.q, d.n, d.k1, d.k2, o); });
      const std::string lim = take_string([&](char** o) { return sp_kernel_limit(d.q, d.n, d.k1, d.k2, o); });
      std::string oracle_value;
      if (ek_oracle) {
        oracle_value = take_string(
            [&](char** o) { return sp_oracle_expected_kernel(d.q, d.n, d.k1, d.k2, threads, budget, o); });
      }
      if (json) {
        Json j{{"q", d.q}, {"n", d.n}, {"k1", d.k1}, {"k2", d.k2}, {"expected_kernel", e}, {"limit", lim}};
        if (ek_oracle) {
          j["oracle"] = oracle_value;
          j["match"] = oracle_value == e;
        }
        emit(j.dump());
      } else {
        emit("E|ker psi| = " + e + " (" + decimal(e) + ")");
        emit("limit 1 + q^(k1k2-n) = " + lim + " (" + decimal(lim) + ")");
        if (ek_oracle) emit("oracle = " + oracle_value + (oracle_value == e ? " (match)" : " (MISMATCH)"));
      }
      return ek_oracle && oracle_value != e ? kExitCheckFailed : kExitOk;
    }

    if (*mc) {
      const auto& d = mc_dims;
      const sp_quantity qty = quantity == "star_dim"      ? SP_QTY_STAR_DIM
                              : quantity == "kernel_size" ? SP_QTY_KERNEL_SIZE
                              : quantity == "full_dim"    ? SP_QTY_FULL_DIM
                                                          : SP_QTY_INTERSECTION_DIM;
      const sp_model m = model == "uniform" ? SP_MODEL_UNIFORM : SP_MODEL_SYSTEMATIC;
      emit(take_string(
          [&](char** o) { return sp_mc_json(qty, d.q, d.n, d.k1, d.k2, m, samples, seed, threads, o); }));
      return kExitOk;
    }

    if (*table1) {
      std::fputs(take_string([&](char** o) { return sp_table1_csv(t1_samples, t1_seed, threads, o); }).c_str(),
                 stdout);
      return kExitOk;
    }

    if (*oracle) {
      std::vector<std::string> names;
      if (check_name == "all") {
        names = {"kernel", "zerodiag", "intersection", "mds", "support", "jensen"};
      } else {
        names = split_csv(check_name);
      }
      bool all_pass = true, budget_failure = false;
      Json reports = Json::array();
      for (const auto& name : names) {
        int pass = 0;
        const std::string report = take_string([&](char** o) {
          return sp_oracle_check_json(name.c_str(), qmax, nmax, threads, budget, &pass, o);
        });
        const Json j = Json::parse(report);
        all_pass = all_pass && pass;
        for (const auto& c : j["cases"]) {
          if (!c["pass"].get<bool>() && c["detail"].get<std::string>().rfind("BudgetExceeded", 0) == 0) {
            budget_failure = true;
          }
        }
        if (json) {
          reports.push_back(j);
        } else {
          for (const auto& c : j["cases"]) {
            emit(std::string(c["pass"].get<bool>() ? "PASS " : "FAIL ") + name + " " +
                 c["case"].get<std::string>() + ": " + c["detail"].get<std::string>());
          }
          emit(name + ": " + std::to_string(j["passed"].get<std::size_t>()) + " passed, " +
               std::to_string(j["failed"].get<std::size_t>()) + " failed");
        }
      }
      if (json) emit(reports.dump());
      if (all_pass) return kExitOk;
      return budget_failure ? kExitBudget : kExitCheckFailed;
    }

    if (*mds) {
      const auto& d = mds_dims;
      const std::string f =
          take_string([&](char** o) { return sp_expected_star_dim_mds(d.q, d.n, d.k1, d.k2, o); });
      std::string enumerated;
      if (!mds_code.empty()) {
        auto code = code_from_file(mds_code);
        int is_mds = 0;
        check(sp_code_is_mds(code.get(), 0, &is_mds));
        if (sp_code_field_order(code.get()) != d.q || sp_code_length(code.get()) != d.n ||
            sp_code_dim(code.get()) != d.k1 || !is_mds) {
          throw ApiError{SP_ERR_INVALID_ARGUMENT, "--code must be an MDS [n, k1] code over GF(q)"};
        }
        enumerated = take_string(
            [&](char** o) { return sp_oracle_expected_star_dim_fixed(code.get(), d.k2, threads, budget, o); });
      }
      if (json) {
        Json j{{"q", d.q}, {"n", d.n}, {"k1", d.k1}, {"k2", d.k2}, {"expected_star_dim", f}};
        if (!enumerated.empty()) j["enumerated"] = enumerated;
        emit(j.dump());
      } else {
        emit("E dim(C1*C2) = " + f + " (" + decimal(f) + ")");
        if (!enumerated.empty()) emit("enumerated = " + enumerated + (enumerated == f ? " (match)" : " (MISMATCH)"));
      }
      return !enumerated.empty() && enumerated != f ? kExitCheckFailed : kExitOk;
    }

    if (*intersect) {
      const auto& d = int_dims;
      const std::string f =
          take_string([&](char** o) { return sp_expected_intersection(d.q, d.n, d.k1, d.k2, o); });
      std::string enumerated;
      if (int_oracle) {
        enumerated = take_string(
            [&](char** o) { return sp_oracle_expected_intersection(d.q, d.n, d.k1, d.k2, threads, budget, o); });
      }
      if (json) {
        Json j{{"q", d.q}, {"n", d.n}, {"k1", d.k1}, {"k2", d.k2}, {"expected_intersection_dim", f}};
        if (int_oracle) j["oracle"] = enumerated;
        emit(j.dump());
      } else {
        emit("E dim(C1 ∩ C2) = " + f + " (" + decimal(f) + ")");
        if (int_oracle) emit("oracle = " + enumerated + (enumerated == f ? " (match)" : " (MISMATCH)"));
      }
      return int_oracle && enumerated != f ? kExitCheckFailed : kExitOk;
    }

    if (*limit) {
      const auto& d = lim_dims;
      Json rows = Json::array();
      if (!json) emit("q,expected_kernel,limit,abs_gap,conjecture");
      for (const auto& qs : split_csv(lim_qs)) {
        const std::uint64_t q = std::stoull(qs);
        const std::string e = take_string([&](char** o) { return sp_expected_kernel(q, d.n, d.k1, d.k2, o); });
        const std::string l = take_string([&](char** o) { return sp_kernel_limit(q, d.n, d.k1, d.k2, o); });
        double conj = 0;
        check(sp_kernel_conjecture(q, d.k1, d.k2, &conj));
        const double gap = std::abs(std::stod(decimal(e)) - std::stod(decimal(l)));
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s,%s,%.10g,%.10g", decimal(e).c_str(), decimal(l).c_str(), gap, conj);
        if (json) {
          rows.push_back({{"q", q}, {"expected_kernel", e}, {"limit", l}, {"abs_gap", gap}, {"conjecture", conj}});
        } else {
          emit(qs + "," + buf);
        }
      }
      if (json) emit(rows.dump());
      return kExitOk;
    }

    if (*apps) {
      auto a = code_from_file(path_a);
      if (*pir || *sdmm) {
        auto b = code_from_file(path_b);
        emit(take_string([&](char** o) {
          return *pir ? sp_apps_pir_json(a.get(), b.get(), budget, o) : sp_apps_sdmm_json(a.get(), b.get(), budget, o);
        }));
      } else {
        CodePtr b;
        if (!path_b.empty()) b = code_from_file(path_b);
        emit(take_string([&](char** o) { return sp_apps_csst_json(a.get(), b.get(), budget, o); }));
      }
      return kExitOk;
    }

    if (*example) {
      std::vector<std::pair<std::string, CodePtr>> codes;
      if (ex_code.empty()) {
        codes.emplace_back("C", code_from_text(kExampleCodeC));
        codes.emplace_back("C'", code_from_text(kExampleCodeCPrime));
      } else {
        codes.emplace_back(ex_code, code_from_file(ex_code));
      }
      Json rows = Json::array();
      for (const auto& ls : split_csv(ex_ls)) {
        const std::size_t l = std::stoul(ls);
        for (const auto& [name, code] : codes) {
          const std::string v = take_string(
              [&](char** o) { return sp_oracle_expected_star_dim_fixed(code.get(), l, threads, budget, o); });
          if (json) {
            rows.push_back({{"code", name}, {"l", l}, {"expected_star_dim", v}});
          } else {
            emit("l=" + ls + " " + name + ": " + v + " (" + decimal(v) + ")");
          }
        }
      }
      if (json) emit(rows.dump());
      return kExitOk;
    }
  } catch (const ApiError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return exit_code_for(e.status);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitOk;
}
