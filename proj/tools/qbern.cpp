// qbern: compute q-Bernoulli numbers, Hankel determinants and S-fraction
// coefficients, and run the acceptance suite.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error (including a
// pole at the requested --at-q value), 3 internal error.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "qbern/bernoulli.hpp"
#include "qbern/contfrac.hpp"
#include "qbern/errors.hpp"
#include "qbern/hankel.hpp"
#include "qbern/render.hpp"
#include "qbern/verify.hpp"

namespace {

using namespace qbern;

constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

mpq_class parse_rational(const std::string& s) {
  mpq_class v;
  if (s.empty() || v.set_str(s, 10) != 0 || v.get_den() == 0) {
    throw UsageError("--at-q: not a rational number: " + s);
  }
  v.canonicalize();
  return v;
}

int cmd_beta(long n_max, const std::optional<std::string>& at_q, const std::string& format) {
  const auto beta = beta_numbers(n_max);
  std::optional<mpq_class> v;
  if (at_q) v = parse_rational(*at_q);
  std::vector<mpq_class> values;
  if (v) {
    for (const auto& b : beta) {
      try {
        values.push_back(b.eval(*v));
      } catch (const PoleError&) {
        throw UsageError("pole at q = " + v->get_str() + " in beta_" + std::to_string(values.size()));
      }
    }
  }
  if (format == "json") {
    Json out;
    out["beta"] = Json::array();
    for (const auto& b : beta) out["beta"].push_back(to_json(b));
    if (v) {
      out["q"] = to_json(*v);
      out["at_q"] = Json::array();
      for (const auto& x : values) out["at_q"].push_back(to_json(x));
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  for (std::size_t n = 0; n < beta.size(); ++n) {
    std::cout << "beta_" << n << " = " << to_text(beta[n]);
    if (v) std::cout << "    [q = " << v->get_str() << ": " << to_text(values[n]) << "]";
    std::cout << "\n";
  }
  return 0;
}

int cmd_hankel(long shift, long n, bool verify, const std::string& format) {
  const auto beta = beta_numbers(std::max(0L, 2 * n - 2 + shift));
  const FieldQ det = hankel_det(beta, static_cast<std::size_t>(n), static_cast<std::size_t>(shift));
  std::string status;
  if (verify) {
    if (shift <= 3) {
      status = det == closed_form_shift(shift, n) ? "EQUAL" : "DIFFER";
    } else {
      status = "NO CLOSED FORM";
    }
  }
  if (format == "json") {
    Json out;
    out["shift"] = shift;
    out["n"] = n;
    out["det"] = to_json(det);
    if (verify) out["verify"] = status;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "det = " << to_text(det) << "\n";
    if (verify) std::cout << "closed form: " << status << "\n";
  }
  return status == "DIFFER" ? kMismatch : 0;
}

template <class K>
int print_cfrac(const SFraction<K>& s, const std::string& name, std::size_t order, bool check,
                const std::function<Series<K>()>& target, const std::string& format) {
  std::string status;
  if (check) status = sfraction_series(s, order) == target() ? "OK" : "MISMATCH";
  if (format == "json") {
    Json out;
    out["series"] = name;
    out["c"] = Json::array();
    for (std::size_t k = 1; k <= order; ++k) out["c"].push_back(to_json(s.c(static_cast<long>(k))));
    if (check) out["check"] = status;
    std::cout << out.dump() << "\n";
  } else {
    for (std::size_t k = 1; k <= order; ++k) {
      std::cout << "c_" << k << " = " << to_text(s.c(static_cast<long>(k))) << "\n";
    }
    if (check) std::cout << "check: " << status << "\n";
  }
  return status == "MISMATCH" ? kMismatch : 0;
}

int cmd_cfrac(const std::string& series, std::size_t order, bool check, const std::string& format) {
  SeriesId id;
  try {
    id = parse_series_id(series);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (id == SeriesId::Bz) {
    return print_cfrac<FieldQZ>(closed_sfraction_z(), series, order, check,
                                [order] { return target_series_z(order); }, format);
  }
  return print_cfrac<FieldQ>(closed_sfraction(id), series, order, check,
                             [id, order] { return target_series(id, order); }, format);
}

int cmd_verify(const std::string& profile_name) {
  Profile profile;
  try {
    profile = parse_profile(profile_name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  int failures = 0;
  run_acceptance(profile, [&](const CriterionResult& r) {
    failures += !r.passed;
    std::cout << format_result(r) << std::endl;
  });
  if (failures == 0) {
    std::cout << "all " << criterion_count() << " criteria passed\n";
    return 0;
  }
  std::cout << failures << " of " << criterion_count() << " criteria failed\n";
  return kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-Bernoulli numbers, Hankel determinants and continued fractions"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"text", "json"};

  long beta_n = 0;
  std::optional<std::string> at_q;
  std::string beta_format = "text";
  auto* beta = app.add_subcommand("beta", "Print beta_0 .. beta_n");
  beta->add_option("--n", beta_n, "largest index")->required()->check(CLI::NonNegativeNumber);
  beta->add_option("--at-q", at_q, "also evaluate at this rational q");
  beta->add_option("--format", beta_format, "text or json")->check(CLI::IsMember(formats));

  long h_shift = 0;
  long h_n = 0;
  bool h_verify = false;
  std::string h_format = "text";
  auto* hankel = app.add_subcommand("hankel", "Hankel determinant det(beta_{i+j+shift})_{i,j<n}");
  hankel->add_option("--shift", h_shift, "index shift")->check(CLI::NonNegativeNumber);
  hankel->add_option("--n", h_n, "matrix size")->required()->check(CLI::NonNegativeNumber);
  hankel->add_flag("--verify", h_verify, "compare with the closed form (shifts 0-3)");
  hankel->add_option("--format", h_format, "text or json")->check(CLI::IsMember(formats));

  std::string c_series;
  std::size_t c_order = 12;
  bool c_check = false;
  std::string c_format = "text";
  auto* cfrac = app.add_subcommand("cfrac", "S-fraction coefficients c_1 .. c_order");
  cfrac->add_option("--series", c_series, "B, B1, B2 or Bz")->required();
  cfrac->add_option("--order", c_order, "number of coefficients")->check(CLI::PositiveNumber);
  cfrac->add_flag("--check", c_check, "expand the S-fraction and compare with the moments");
  cfrac->add_option("--format", c_format, "text or json")->check(CLI::IsMember(formats));

  std::string profile = "quick";
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--profile", profile, "quick or full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*beta) return cmd_beta(beta_n, at_q, beta_format);
    if (*hankel) return cmd_hankel(h_shift, h_n, h_verify, h_format);
    if (*cfrac) return cmd_cfrac(c_series, c_order, c_check, c_format);
    if (*verify) return cmd_verify(profile);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
