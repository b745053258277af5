#include "qbern/verify.hpp"

#include <chrono>
#include <exception>
#include <sstream>
#include <stdexcept>

#include "qbern/bernoulli.hpp"
#include "qbern/contfrac.hpp"
#include "qbern/hankel.hpp"
#include "qbern/orthopoly.hpp"
#include "qbern/qcombinat.hpp"
#include "qbern/render.hpp"

namespace qbern {

namespace {

struct Bounds {
  long classical_n;       // 2
  long relation_n;        // 3
  std::size_t gf_order;   // 4
  long lemma_d;           // 5
  long lemma_de;          // 5
  long hahn_moments_n;    // 6
  long legendre_n;        // 7
  long hankel_n;          // 8
  long hankel_z_n;        // 8
  long product_n;         // 8
  long shifted_n;         // 9
  long qn_n;              // 9
  long contraction_n;     // 10
  std::size_t cf_order;   // 10
  long general_moment_n;  // 11
  long general_det_n;     // 11
  long hyper_n;           // 12
  long orth_n;            // 12
  long vandermonde_n;     // 13
};

Bounds bounds(Profile p) {
  if (p == Profile::Full) return {12, 20, 12, 6, 4, 16, 10, 7, 5, 7, 6, 8, 12, 12, 8, 4, 8, 6, 10};
  return {8, 10, 8, 4, 3, 10, 6, 5, 4, 5, 4, 6, 8, 8, 5, 3, 5, 4, 6};
}

/// Counts checks and keeps the first failure.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool passed() const { return failure_.empty(); }
  std::string detail() const {
    if (!passed()) return "first mismatch: " + failure_;
    return std::to_string(checks_) + " identities";
  }

 private:
  long checks_ = 0;
  std::string failure_;
};

std::string idx(const std::string& name, long n) { return name + "(" + std::to_string(n) + ")"; }

FieldQ qp(long e) { return FieldQ::q_power(e); }

const std::vector<GeneralParams>& small_params() {
  static const std::vector<GeneralParams> ps = [] {
    std::vector<GeneralParams> v;
    for (long a = 1; a <= 2; ++a)
      for (long b = 1; b <= 2; ++b)
        for (long c = 0; c <= 1; ++c)
          for (long d = 0; d <= 1; ++d) v.push_back({a, b, c, d});
    return v;
  }();
  return ps;
}

std::string params_name(const GeneralParams& p) {
  std::ostringstream s;
  s << "(" << p.a << "," << p.b << "," << p.c << "," << p.d << ")";
  return s.str();
}

struct HahnCase {
  long c, d, shift;
  Recurrence<FieldQ> (*simplified)();
};

const HahnCase kHahnCases[] = {{0, 0, 0, hahn_recurrence_00},
                               {0, 1, 1, hahn_recurrence_01},
                               {1, 1, 2, hahn_recurrence_11}};

std::vector<FieldQ> shifted_betas(long shift, long count) {
  const auto beta = beta_numbers(count + shift);
  std::vector<FieldQ> m;
  for (long n = 0; n < count; ++n) m.push_back(beta[n + shift] / beta[shift]);
  return m;
}

void criterion1(Tally& t, const Bounds&) {
  const FieldQ q = FieldQ::q();
  const FieldQ one(1);
  const FieldQ p1 = q + one;
  const FieldQ p2 = q * q + q + one;
  const FieldQ p3 = q * q + one;
  const FieldQ p4 = q.pow(4) + q.pow(3) + q * q + q + one;
  const FieldQ displayed[] = {
      one,
      FieldQ(-1) / p1,
      q / (p1 * p2),
      -(q * (q - one)) / (p1 * p2 * p3),
      q * (q.pow(4) - q.pow(3) - FieldQ(2) * q * q - q + one) / (p1 * p2 * p3 * p4),
  };
  for (long n = 0; n <= 4; ++n) t.expect(beta_number(n) == displayed[n], idx("beta", n));
  // The representation is canonical: the denominator of beta_4 is the expanded product.
  t.expect(beta_number(4).denominator() == (p1 * p2 * p3 * p4).numerator(), "beta_4 denominator");
}

void criterion2(Tally& t, const Bounds& b) {
  const auto classical = classical_bernoulli(b.classical_n);
  for (long n = 0; n <= b.classical_n; ++n) {
    t.expect(beta_number(n).eval(1) == classical[n], idx("beta at q=1", n));
  }
}

void criterion3(Tally& t, const Bounds& b) {
  const FieldQ q = FieldQ::q();
  for (long n = 0; n <= b.relation_n; ++n) {
    const FieldQ expected = n == 0 ? q - FieldQ(1) : FieldQ(n == 1 ? 1 : 0);
    t.expect(defining_relation_residual(n) == expected, idx("residual", n));
  }
}

void criterion4(Tally& t, const Bounds& b) {
  Series<FieldQ> expected(b.gf_order);
  expected[0] = FieldQ::q() - FieldQ(1);
  expected[1] = FieldQ(1);
  t.expect(functional_residual_ogf(b.gf_order) == expected, "ordinary generating series");
  t.expect(functional_residual_egf(b.gf_order) == expected, "exponential generating series");
}

void criterion5(Tally& t, const Bounds& b) {
  for (long d = 0; d <= b.lemma_d; ++d) {
    for (long i = 0; i <= d; ++i) {
      t.expect(psi(qbase(i, d)) == lemma_beta_rhs(i, d), "one factor i=" + std::to_string(i) +
                                                              " d=" + std::to_string(d));
    }
  }
  for (long d = 0; d <= b.lemma_de; ++d) {
    for (long e = 0; e <= b.lemma_de; ++e) {
      for (long i = 0; i <= d; ++i) {
        for (long j = 0; j <= e; ++j) {
          t.expect(psi(qbase(i, d) * qbase(j, e)) == lemma_alpha_rhs(i, d, j, e),
                   "two factors (" + std::to_string(i) + "," + std::to_string(d) + "," +
                       std::to_string(j) + "," + std::to_string(e) + ")");
        }
      }
    }
  }
}

void criterion6(Tally& t, const Bounds& b) {
  const auto count = static_cast<std::size_t>(b.hahn_moments_n) + 1;
  for (const auto& hc : kHahnCases) {
    const std::string name = "hahn(" + std::to_string(hc.c) + "," + std::to_string(hc.d) + ")";
    const auto target = shifted_betas(hc.shift, static_cast<long>(count));
    const Recurrence<FieldQ> simplified = hc.simplified();
    const Recurrence<FieldQ> general = hahn_recurrence(hc.c, hc.d);
    t.expect(moments_from_recurrence(simplified, count) == target, name + " moments");
    t.expect(moments_from_recurrence(general, count) == target, name + " moments from A_n, C_n");
    for (long n = 0; n <= b.hahn_moments_n; ++n) {
      t.expect(simplified.a(n) == general.a(n), idx(name + " a", n));
      if (n >= 1) t.expect(simplified.b(n) == general.b(n), idx(name + " b", n));
    }
  }
}

void criterion7(Tally& t, const Bounds& b) {
  const auto count = static_cast<std::size_t>(b.legendre_n) + 1;
  const auto closed = moments_from_recurrence(legendre_recurrence(), count);
  const auto raw = moments_from_recurrence(legendre_recurrence_from_raw(), count);
  const FieldQ q = FieldQ::q();
  const auto jackson = affine_moments(legendre_jackson_moments(count),
                                      FieldQZ(q * (q - FieldQ(1))), FieldQZ(q));
  for (long n = 0; n <= b.legendre_n; ++n) {
    const PolyZ integral = legendre_moment(n);
    const FieldQZ expected(integral);
    t.expect(closed[n] == expected, idx("recurrence moment", n));
    t.expect(raw[n] == expected, idx("moment from A_n, C_n", n));
    t.expect(jackson[n] == expected, idx("Jackson moment", n));
    t.expect(legendre_moment_closed(n) == integral, idx("closed moment", n));
    t.expect(closed[n].eval_z(FieldQ(0)) == beta_number(n), idx("moment at z=0", n));
  }
}

void criterion8(Tally& t, const Bounds& b) {
  const auto beta = beta_numbers(2 * b.hankel_n + 2);
  for (long k = 0; k <= 3; ++k) {
    for (long n = 0; n <= b.hankel_n; ++n) {
      t.expect(hankel_det(beta, n, k) == closed_form_shift(k, n),
               "shift " + std::to_string(k) + " n=" + std::to_string(n));
    }
  }
  const auto zcount = static_cast<std::size_t>(2 * b.hankel_z_n);
  std::vector<FieldQZ> lm;
  for (std::size_t n = 0; n < zcount; ++n) lm.push_back(legendre_moment_qz(static_cast<long>(n)));
  for (long n = 0; n <= b.hankel_z_n; ++n) {
    t.expect(hankel_det(lm, n, 0) == closed_form_z(n), idx("z-case n", n));
  }
  // Product formula for the four families.
  const auto pcount = static_cast<std::size_t>(2 * b.product_n);
  for (const auto& hc : kHahnCases) {
    const Recurrence<FieldQ> rec = hc.simplified();
    const auto mu = moments_from_recurrence(rec, pcount);
    for (long n = 0; n <= b.product_n; ++n) {
      t.expect(hankel_det(mu, n, 0) == product_formula(rec, n),
               "product formula, shift " + std::to_string(hc.shift) + " n=" + std::to_string(n));
    }
  }
  const Recurrence<FieldQZ> lrec = legendre_recurrence();
  const auto lmu = moments_from_recurrence(lrec, pcount);
  for (long n = 0; n <= b.product_n; ++n) {
    t.expect(hankel_det(lmu, n, 0) == product_formula(lrec, n), idx("product formula, z-case n", n));
  }
}

void criterion9(Tally& t, const Bounds& b) {
  for (const auto& hc : kHahnCases) {
    const std::string name = "shift " + std::to_string(hc.shift);
    const Recurrence<FieldQ> rec = hc.simplified();
    const auto mu = moments_from_recurrence(rec, static_cast<std::size_t>(2 * b.shifted_n + 1));
    const auto qn = qn_sequence(rec, static_cast<std::size_t>(b.qn_n) + 1);
    const auto polys = generate_polys(rec, static_cast<std::size_t>(b.qn_n) + 1);
    for (long n = 0; n <= b.qn_n; ++n) {
      const FieldQ p0 = polys[n].coeff(0);
      const FieldQ sgn = FieldQ(n % 2 == 0 ? 1 : -1);
      t.expect(qn[n] == sgn * p0, idx(name + " q_n = (-1)^n p_n(0), n", n));
      t.expect(p0 == hahn_pn_at_zero_closed(hc.shift, n), idx(name + " closed p_n(0), n", n));
    }
    const auto beta = beta_numbers(2 * b.shifted_n + 3);
    for (long n = 0; n <= b.shifted_n; ++n) {
      const FieldQ direct = hankel_det(mu, n, 1);
      const FieldQ sgn = FieldQ(n % 2 == 0 ? 1 : -1);
      t.expect(direct == shifted_det_formula(rec, n), idx(name + " via q_n, n", n));
      t.expect(direct == hankel_det(mu, n, 0) * sgn * polys[n].coeff(0), idx(name + " via p_n(0), n", n));
      // The unnormalized determinants of beta step from one shift to the next.
      t.expect(hankel_det(beta, n, hc.shift + 1) ==
                   hankel_det(beta, n, hc.shift) * sgn * hahn_pn_at_zero_closed(hc.shift, n),
               idx(name + " d_n(k+1) = d_n(k) (-1)^n p_n(0), n", n));
    }
  }
}

void criterion10(Tally& t, const Bounds& b) {
  for (SeriesId id : {SeriesId::B, SeriesId::B1, SeriesId::B2}) {
    const std::string name = series_name(id);
    const SFraction<FieldQ> s = closed_sfraction(id);
    t.expect(same_coefficients(contract(s), jfraction_from(target_recurrence(id)), b.contraction_n),
             name + " contraction");
    t.expect(sfraction_series(s, b.cf_order) == target_series(id, b.cf_order), name + " series");
  }
  const SFraction<FieldQZ> sz = closed_sfraction_z();
  t.expect(same_coefficients(contract(sz), jfraction_from(legendre_recurrence()), b.contraction_n),
           "Bz contraction");
  t.expect(sfraction_series(sz, b.cf_order) == target_series_z(b.cf_order), "Bz series");
  for (long k = 1; k <= 2 * b.contraction_n + 1; ++k) {
    t.expect(sz.c(k).eval_z(FieldQ(0)) == closed_sfraction(SeriesId::B).c(k), idx("Bz at z=0, c", k));
  }

  // B and B1 specialize at q = 1; B2 does not (c_2 has a pole there).
  auto has_pole_at_one = [](const FieldQ& v) {
    try {
      v.eval(1);
      return false;
    } catch (const PoleError&) {
      return true;
    }
  };
  for (long k = 1; k <= 2 * b.contraction_n + 1; ++k) {
    t.expect(!has_pole_at_one(closed_sfraction(SeriesId::B).c(k)), idx("B at q=1, c", k));
    t.expect(!has_pole_at_one(closed_sfraction(SeriesId::B1).c(k)), idx("B1 at q=1, c", k));
  }
  t.expect(has_pole_at_one(closed_sfraction(SeriesId::B2).c(2)), "B2 c_2 pole at q=1");

  // B = 1 + beta_1 x B1.
  const std::size_t order = b.cf_order;
  const auto x = Series<FieldQ>::variable(order);
  t.expect(ogf_truncation(order) == Series<FieldQ>::constant(FieldQ(1), order) +
                                        x * shifted_ogf(order, 1) * beta_number(1),
           "B = 1 + beta_1 x B1");
}

void criterion11(Tally& t, const Bounds& b) {
  const auto count = static_cast<std::size_t>(b.general_moment_n) + 1;
  for (const auto& p : small_params()) {
    const std::string name = params_name(p);
    const Recurrence<FieldQ> rec = jacobi_recurrence(p);
    const auto mu = moments_from_recurrence(rec, count);
    const GeneralParams swap_ab{p.b, p.a, p.c, p.d};
    const GeneralParams swap_cd{p.a, p.b, p.d, p.c};
    for (long n = 0; n <= b.general_moment_n; ++n) {
      const FieldQ m = moment_general(n, p);
      t.expect(m == mu[n], idx(name + " moment", n));
      t.expect(m == moment_general(n, swap_ab), idx(name + " a<->b", n));
      t.expect(m == moment_general(n, swap_cd), idx(name + " c<->d", n));
      if (n >= 1) t.expect(rec.b(n) == jacobi_b_closed(p, n), idx(name + " b", n));
    }
    t.expect(general_moment_unnormalized(0, p) == normalization_constant(p), name + " C");
    for (long n = 0; n <= b.general_det_n; ++n) {
      t.expect(general_moment_matrix_det(p, n) == general_det_closed_form(p, n), idx(name + " det M", n));
    }
  }
  // Specializations to the three q-Hahn cases.
  for (const auto& hc : kHahnCases) {
    const GeneralParams p{1, 1, hc.c, hc.d};
    const FieldQ sgn = FieldQ(hc.shift == 1 ? -1 : 1);
    t.expect(normalization_constant(p) == sgn * beta_number(hc.shift), params_name(p) + " C");
    const auto target = shifted_betas(hc.shift, b.general_moment_n + 1);
    for (long n = 0; n <= b.general_moment_n; ++n) {
      t.expect(moment_general(n, p) == target[n], idx(params_name(p) + " shifted beta", n));
    }
  }
  for (long n = 0; n <= b.general_det_n; ++n) {
    t.expect(general_det_closed_form({1, 1, 0, 0}, n) == closed_form_shift(0, n), idx("(1,1,0,0) = shift 0, n", n));
    t.expect(general_det_closed_form({1, 1, 1, 1}, n) == closed_form_shift(2, n), idx("(1,1,1,1) = shift 2, n", n));
  }
}

template <class K>
bool annihilates(const std::function<K(const Poly<K>&)>& functional, const Poly<K>& p, long n) {
  Poly<K> xp = p;
  const Poly<K> x = Poly<K>::variable();
  for (long j = 0; j < n; ++j) {
    if (!qbern::is_zero(functional(xp))) return false;
    xp = xp * x;
  }
  return true;
}

void criterion12(Tally& t, const Bounds& b) {
  for (const auto& hc : kHahnCases) {
    const HahnFamily fam{hc.c, hc.d};
    const std::string name = "hahn(" + std::to_string(hc.c) + "," + std::to_string(hc.d) + ")";
    const auto polys = generate_polys(hc.simplified(), static_cast<std::size_t>(b.hyper_n) + 1);
    const std::function<FieldQ(const PolyX&)> functional = [&](const PolyX& f) {
      return family_functional(fam, f);
    };
    for (long n = 0; n <= b.hyper_n; ++n) {
      const PolyX pn = hypergeometric_pn(fam, n);
      t.expect(pn.monic() == polys[n], idx(name + " P_n", n));
      t.expect(pn.lead() == hahn_leading_coefficient(hc.c, hc.d, n), idx(name + " leading coefficient", n));
      if (n >= 1 && n <= b.orth_n) t.expect(annihilates(functional, pn, n), idx(name + " orthogonality", n));
    }
  }
  {
    const auto polys = generate_polys(legendre_recurrence(), static_cast<std::size_t>(b.orth_n) + 1);
    const std::function<FieldQZ(const PolyXZ&)> functional = [](const PolyXZ& f) {
      return family_functional(LegendreFamily{}, f);
    };
    for (long n = 0; n <= b.orth_n; ++n) {
      const PolyXZ pn = hypergeometric_pn(LegendreFamily{}, n);
      t.expect(pn.monic() == polys[n], idx("legendre P_n", n));
      if (n >= 1) t.expect(annihilates(functional, pn, n), idx("legendre orthogonality", n));
    }
  }
  for (const auto& p : small_params()) {
    const JacobiFamily fam{p};
    const auto polys = generate_polys(jacobi_recurrence(p), static_cast<std::size_t>(b.orth_n) + 1);
    const std::function<FieldQ(const PolyX&)> functional = [&](const PolyX& f) {
      return family_functional(fam, f);
    };
    for (long n = 0; n <= b.orth_n; ++n) {
      const PolyX pn = hypergeometric_pn(fam, n);
      t.expect(pn.monic() == polys[n], idx(params_name(p) + " P_n", n));
      if (n >= 1) t.expect(annihilates(functional, pn, n), idx(params_name(p) + " orthogonality", n));
    }
  }
}

void criterion13(Tally& t, const Bounds& b) {
  for (long n = 1; n <= b.vandermonde_n; ++n) {
    for (long m = 1; m <= 3; ++m) {
      t.expect(phi21_terminating(n, n + m, m + 1).is_zero(),
               "n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  }
}

struct Criterion {
  const char* title;
  void (*run)(Tally&, const Bounds&);
};

const Criterion kCriteria[] = {
    {"first q-Bernoulli numbers", criterion1},
    {"q = 1 gives the Bernoulli numbers", criterion2},
    {"defining relation residuals", criterion3},
    {"generating series functional equations", criterion4},
    {"Psi of q-binomial polynomials", criterion5},
    {"q-Hahn moments", criterion6},
    {"big q-Legendre moments", criterion7},
    {"Hankel determinants", criterion8},
    {"shifted Hankel determinants", criterion9},
    {"S-fractions and contraction", criterion10},
    {"big q-Jacobi moments and determinants", criterion11},
    {"hypergeometric forms and orthogonality", criterion12},
    {"q-Vandermonde vanishing", criterion13},
};

}  // namespace

Profile parse_profile(const std::string& name) {
  if (name == "quick") return Profile::Quick;
  if (name == "full") return Profile::Full;
  throw std::invalid_argument("unknown profile '" + name + "' (expected quick or full)");
}

int criterion_count() { return static_cast<int>(std::size(kCriteria)); }

CriterionResult run_criterion(int id, Profile profile) {
  if (id < 1 || id > criterion_count()) throw std::out_of_range("no such criterion");
  const Criterion& c = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = c.title;
  const auto start = std::chrono::steady_clock::now();
  try {
    Tally t;
    c.run(t, bounds(profile));
    r.passed = t.passed();
    r.detail = t.detail();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(Profile profile,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count(); ++id) {
    out.push_back(run_criterion(id, profile));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.passed ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.title
    << "  (" << r.detail << ")";
  return s.str();
}

}  // namespace qbern
