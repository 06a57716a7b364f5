#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "posmap/certify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

using namespace posmap;

namespace {

// Independent oracle: exact-rational map application on an exact projector,
// eigensolved after conversion.  The witness functions use the double path,
// so agreement here checks both routes.
RVector oracle_spectrum(Family f, int d, int k, const Rational& x, const Rational& y, const QMatrix& proj) {
  return hermitian_spectrum(extend_and_apply(family_map(f, d, x, y), k, proj).to_complex());
}

QMatrix q_outer(const QVector& v) {
  QMatrix m(static_cast<int>(v.size()), static_cast<int>(v.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
  return m;
}

double choi_value(Family f, int d, double x, double y, const CVector& z) {
  const ChoiMatrix c = build_choi(family_combination(f, d, x, y));
  return (z.adjoint() * c.m * z)(0).real();
}

std::vector<RationalPoint> sample_grid() {
  std::vector<RationalPoint> pts;
  for (int ix = -3; ix <= 7; ++ix)
    for (int iy = -4; iy <= 6; ++iy) pts.push_back({rat(ix, 4), rat(iy, 4)});
  return pts;
}

}  // namespace

TEST_CASE("mix_seed is deterministic and spreads nearby inputs") {
  CHECK(mix_seed(0, 0) == mix_seed(0, 0));
  CHECK(mix_seed(0, 0) != mix_seed(0, 1));
  CHECK(mix_seed(0, 0) != mix_seed(1, 0));
  CHECK(mix_seed(7, 3) != mix_seed(3, 7));
}

TEST_CASE("all-ones witness spectrum matches the exact oracle") {
  for (int d = 2; d <= 5; ++d)
    for (const auto& [x, y] : std::vector<std::pair<Rational, Rational>>{
             {rat(0), rat(0)}, {rat(1), rat(1, 3)}, {rat(3, 2), rat(1, 2)}, {rat(-1, 2), rat(2)}}) {
      QVector ones(static_cast<std::size_t>(d), Rational(1));
      const RVector oracle = oracle_spectrum(Family::Phi, d, 1, x, y, q_outer(ones));
      const auto lines = witness_allones_spectrum(d, to_double(x), to_double(y));
      std::vector<double> vals;
      for (const auto& l : lines) vals.insert(vals.end(), static_cast<std::size_t>(l.multiplicity), l.value);
      std::sort(vals.begin(), vals.end());
      REQUIRE(static_cast<int>(vals.size()) == d);
      for (int i = 0; i < d; ++i) CHECK(vals[static_cast<std::size_t>(i)] == doctest::Approx(oracle(i)).epsilon(1e-12));
    }
}

TEST_CASE("rank-one difference witness spectrum matches the exact oracle") {
  for (int d = 2; d <= 5; ++d)
    for (const auto& [x, y] : std::vector<std::pair<Rational, Rational>>{
             {rat(1, 2), rat(-1, 2)}, {rat(1), rat(-3, 4)}, {rat(2), rat(0)}}) {
      QVector v(static_cast<std::size_t>(d), Rational(0));
      v.front() = 1;
      v.back() = -1;
      const RVector oracle = oracle_spectrum(Family::Phi, d, 1, x, y, q_outer(v));
      const auto lines = witness_rankone_spectrum(d, to_double(x), to_double(y));
      std::vector<double> vals;
      for (const auto& l : lines) vals.insert(vals.end(), static_cast<std::size_t>(l.multiplicity), l.value);
      std::sort(vals.begin(), vals.end());
      REQUIRE(static_cast<int>(vals.size()) == d);
      for (int i = 0; i < d; ++i) CHECK(vals[static_cast<std::size_t>(i)] == doctest::Approx(oracle(i)).epsilon(1e-12));
    }
}

TEST_CASE("diagonal witness triple matches the exact oracle and its exact variant") {
  for (int d = 2; d <= 5; ++d)
    for (int k = 1; k <= d; ++k)
      for (const auto& [x, y] : std::vector<std::pair<Rational, Rational>>{
               {rat(1, 2), rat(1, 4)}, {rat(9, 8), rat(-1, 8)}, {rat(13, 8), rat(1, 8)}}) {
        QVector v(static_cast<std::size_t>(k * d), Rational(0));
        for (int a = 0; a < k; ++a) v[static_cast<std::size_t>(a * d + a)] = 1;
        const RVector oracle = oracle_spectrum(Family::Phi, d, k, x, y, q_outer(v));
        const DiagWitness w = kpos_witness_diag(d, k, to_double(x), to_double(y));
        const auto exact = kpos_witness_diag_exact(d, k, x, y);
        CHECK(w.lines[0].value == doctest::Approx(to_double(exact[0])).epsilon(1e-12));
        CHECK(w.lines[1].value == doctest::Approx(to_double(exact[1])).epsilon(1e-12));
        CHECK(w.lines[2].value == doctest::Approx(to_double(exact[2])).epsilon(1e-12));
        std::vector<double> vals;
        for (const auto& l : w.lines) vals.insert(vals.end(), static_cast<std::size_t>(l.multiplicity), l.value);
        std::sort(vals.begin(), vals.end());
        REQUIRE(static_cast<int>(vals.size()) == k * d);
        for (int i = 0; i < k * d; ++i)
          CHECK(vals[static_cast<std::size_t>(i)] == doctest::Approx(oracle(i)).epsilon(1e-12));
        // The carried witness reproduces its claimed Choi-form value.
        CHECK(choi_value(Family::Phi, d, to_double(x), to_double(y), w.witness) ==
              doctest::Approx(w.min_value).epsilon(1e-9));
        CHECK(schmidt_rank(w.witness, d) <= k);
      }
}

TEST_CASE("a negative witness value implies the point is outside the exact region") {
  for (int d = 2; d <= 5; ++d)
    for (int k = 1; k <= d; ++k) {
      const ParamRegion reg = region(Family::Phi, RegionKind::KPos, d, k);
      for (const auto& pt : sample_grid()) {
        const auto diag = kpos_witness_diag_exact(d, k, pt.x, pt.y);
        bool negative = diag[0] < 0 || (k >= 2 && diag[1] < 0) || diag[2] < 0;
        if (d % k == 0) negative = negative || kpos_witness_grouped_exact(d, k, pt.x, pt.y) < 0;
        if (k == d - 1 && d >= 3) negative = negative || kpos_chain_form_exact(d, pt.x, pt.y) < 0;
        if (negative) CHECK(!contains(reg, pt));
      }
    }
}

TEST_CASE("first-family k=1 witnesses exactly cover the positivity region") {
  for (int d = 2; d <= 5; ++d) {
    const ParamRegion reg = region(Family::Phi, RegionKind::Positive, d);
    for (const auto& pt : sample_grid()) {
      const auto diag = kpos_witness_diag_exact(d, 1, pt.x, pt.y);
      const Rational sum(pt.x + pt.y);
      const bool witness_clean = diag[0] >= 0 && diag[2] >= 0 && sum >= 0 &&
                                 Rational(d - (d - 1) * sum) >= 0 && Rational(2 * pt.x + d * pt.y) >= 0;
      CHECK(witness_clean == contains(reg, pt));
    }
  }
}

TEST_CASE("grouped witness: row-sum eigenvalue, exact agreement, region coverage") {
  CHECK(kpos_witness_grouped(4, 2, 0, 0).lambda == doctest::Approx(4.0));
  {
    const auto t2 = named_point(NamedMap::Tk, 4, 2);
    CHECK(kpos_witness_grouped_exact(4, 2, t2.first, t2.second) == 0);
  }
  for (const auto& [d, k] : std::vector<std::pair<int, int>>{{4, 2}, {6, 2}, {6, 3}}) {
    const ParamRegion reg = region(Family::Phi, RegionKind::KPos, d, k);
    for (const auto& pt : sample_grid()) {
      const auto diag = kpos_witness_diag_exact(d, k, pt.x, pt.y);
      const bool witness_clean = diag[0] >= 0 && (k < 2 || diag[1] >= 0) && diag[2] >= 0 &&
                                 kpos_witness_grouped_exact(d, k, pt.x, pt.y) >= 0;
      CHECK(witness_clean == contains(reg, pt));
    }
  }
  // Numeric side: witness value and Schmidt rank.
  const GroupedWitness w = kpos_witness_grouped(4, 2, 1.2, 0.3);
  CHECK(w.lambda == doctest::Approx(1.2 / 2 + 0.3 + 4 * (1 - 1.2 - 0.3)));
  CHECK(w.verdict == CertStatus::Refuted);
  CHECK(w.min_value == doctest::Approx(w.lambda / 2));
  CHECK(choi_value(Family::Phi, 4, 1.2, 0.3, w.witness) == doctest::Approx(w.min_value).epsilon(1e-9));
  CHECK(schmidt_rank(w.witness, 4) == 2);
  CHECK_THROWS_AS((void)kpos_witness_grouped(5, 2, 0.5, 0.0), std::domain_error);
}

TEST_CASE("chain witness pencil is PSD with an exact kernel along the boundary edge") {
  for (int d = 3; d <= 6; ++d) {
    const int k = d - 1;
    const std::vector<long long> psi = build_psi(k);
    for (double alpha : {0.0, 0.3, to_double(rat(k * d, k * d - 1))}) {
      const ChainWitness w = kpos_witness_chain(d, alpha);
      REQUIRE(w.x.rows() == k * d);
      CVector pc(k * d);
      for (int i = 0; i < k * d; ++i) pc(i) = Cx(static_cast<double>(psi[static_cast<std::size_t>(i)]), 0);
      CHECK((w.x * pc).cwiseAbs().maxCoeff() <= 1e-9);
      CHECK(w.min_eig >= -1e-9);  // on the edge up to the interval endpoint the pencil stays PSD
      CHECK(w.min_eig <= 1e-9);
    }
  }
  CHECK_THROWS_AS((void)kpos_witness_chain(2, 0.5), std::domain_error);
  CHECK_THROWS_AS((void)kpos_witness_chain(3, -0.2), std::domain_error);
  CHECK_THROWS_AS((void)kpos_witness_chain(3, 1.6), std::domain_error);
}

TEST_CASE("chain form: zero on the line, negative above, positive below, matches the Choi form") {
  for (int d = 3; d <= 6; ++d) {
    const int k = d - 1;
    for (const Rational& alpha : {rat(0), rat(1, 2), rat(1)}) {
      const Rational beta = chain_beta(k, alpha);
      CHECK(kpos_chain_form_exact(d, alpha, beta) == 0);
      CHECK(kpos_chain_form_exact(d, alpha, Rational(beta + rat(1, 100))) < 0);
      CHECK(kpos_chain_form_exact(d, alpha, Rational(beta - rat(1, 100))) > 0);
    }
  }
  // Independent numeric route: assemble z = sum_i x_i (x) psi_i and evaluate
  // the Choi form directly.
  const int d = 4, k = 3;
  const Rational ax = rat(1, 2);
  const Rational ay(chain_beta(k, ax) + rat(1, 50));
  const std::vector<long long> psi = build_psi(k);
  CVector z = CVector::Zero(d * d);
  for (int i = 0; i < k; ++i)
    for (int m = 0; m < d; ++m) {
      const Cx pim(static_cast<double>(psi[static_cast<std::size_t>(i * d + m)]), 0);
      z(i * d + m) += pim;
      z((i + 1) * d + m) += pim;
    }
  z.normalize();
  CHECK(choi_value(Family::Phi, d, to_double(ax), to_double(ay), z) ==
        doctest::Approx(to_double(kpos_chain_form_exact(d, ax, ay))).epsilon(1e-10));
  CHECK(schmidt_rank(z, d) <= k);
}

TEST_CASE("second-family pair witness matches the oracle and covers the CP complement") {
  for (int d = 2; d <= 5; ++d) {
    for (const auto& [x, y] : std::vector<std::pair<Rational, Rational>>{
             {rat(1, 2), rat(0)}, {rat(5, 4), rat(1, 4)}, {rat(1, 4), rat(-1)}}) {
      QVector v(static_cast<std::size_t>(2 * d), Rational(0));
      v[0] = 1;
      v[static_cast<std::size_t>(2 * d - 1)] = 1;
      const RVector full = oracle_spectrum(Family::Lambda, d, 2, x, y, q_outer(v));
      const auto exact = lambda_2pos_witness_exact(d, x, y);
      const Lambda2Witness w = lambda_2pos_witness(d, to_double(x), to_double(y));
      for (int i = 0; i < 3; ++i)
        CHECK(w.values[static_cast<std::size_t>(i)] ==
              doctest::Approx(to_double(exact[static_cast<std::size_t>(i)])).epsilon(1e-12));
      // Every support eigenvalue shows up in the full spectrum.
      for (double val : w.values) {
        bool found = false;
        for (int i = 0; i < full.size(); ++i) found = found || std::abs(full(i) - val) <= 1e-9;
        CHECK(found);
      }
      CHECK(choi_value(Family::Lambda, d, to_double(x), to_double(y), w.witness) ==
            doctest::Approx(w.min_value).epsilon(1e-9));
      CHECK(schmidt_rank(w.witness, d) <= 2);
    }
    const ParamRegion cp = region(Family::Lambda, RegionKind::CP, d);
    for (const auto& pt : sample_grid()) {
      const auto exact = lambda_2pos_witness_exact(d, pt.x, pt.y);
      const bool clean = exact[0] >= 0 && exact[1] >= 0 && exact[2] >= 0;
      CHECK(clean == contains(cp, pt));
    }
  }
}

TEST_CASE("second-family k=1 witnesses exactly cover the positivity region") {
  for (int d = 2; d <= 5; ++d) {
    const ParamRegion reg = region(Family::Lambda, RegionKind::Positive, d);
    for (const auto& pt : sample_grid()) {
      const auto diag = kpos_witness_diag_exact(d, 1, pt.x, pt.y);  // same diagonal-unit spectrum
      const Rational sum(pt.x + pt.y);
      const bool clean = diag[0] >= 0 && diag[2] >= 0 && sum >= 0 && Rational(d - (d - 1) * sum) >= 0 &&
                         Rational(2 * pt.x + d * pt.y) >= 0;
      CHECK(clean == contains(reg, pt));
    }
  }
}

TEST_CASE("see-saw at k=d reproduces the full Choi minimum") {
  for (int d = 2; d <= 3; ++d) {
    for (const auto& [x, y] : std::vector<std::pair<double, double>>{{0.4, 0.2}, {1.2, 0.4}, {1.6, -0.1}}) {
      const ChoiMatrix c = build_choi(phi_combination(d, x, y));
      SeesawOptions opts;
      opts.restarts = 8;
      const CertVerdict v = seesaw_min_blockform(c, d, opts);
      CHECK(v.min_value == doctest::Approx(min_eigenvalue(c.m)).epsilon(1e-8));
      CHECK(v.restarts_used == 8);
      CHECK(v.schmidt_rank_bound == d);
      REQUIRE(v.witness.has_value());
      CHECK(std::abs(v.witness->norm() - 1.0) <= 1e-10);
      CHECK((v.witness->adjoint() * c.m * *v.witness)(0).real() == doctest::Approx(v.min_value).epsilon(1e-9));
    }
  }
}

TEST_CASE("see-saw at k=1 finds the zero product minimum of the trace-minus-identity point") {
  const auto t1 = named_point(NamedMap::T1, 2);
  const ChoiMatrix c = build_choi(phi_combination(2, to_double(t1.first), to_double(t1.second)));
  SeesawOptions opts;
  opts.restarts = 8;
  const CertVerdict v = seesaw_min_blockform(c, 1, opts);
  CHECK(std::abs(v.min_value) <= 1e-8);  // positive map: product minimum is exactly zero
  CHECK(v.status == CertStatus::NumericallySupported);
  CHECK(min_eigenvalue(c.m) < -0.4);  // while the unrestricted minimum is clearly negative
  REQUIRE(v.witness.has_value());
  CHECK(schmidt_rank(*v.witness, 2) == 1);
}

TEST_CASE("see-saw refutes at least as strongly as the analytic witnesses") {
  // d=3, k=2 above the boundary line: the chain form gives an exact negative
  // value; the see-saw minimum over Schmidt rank <= 2 can only be lower.
  const Rational ax = rat(1, 2);
  const Rational ay(chain_beta(2, ax) + rat(1, 20));
  const double exact = to_double(kpos_chain_form_exact(3, ax, ay));
  REQUIRE(exact < 0);
  const ChoiMatrix c = build_choi(phi_combination(3, to_double(ax), to_double(ay)));
  SeesawOptions opts;
  opts.restarts = 8;
  const CertVerdict v = seesaw_min_blockform(c, 2, opts);
  CHECK(v.status == CertStatus::Refuted);
  CHECK(v.min_value <= exact + 1e-9);
  REQUIRE(v.witness.has_value());
  CHECK(schmidt_rank(*v.witness, 3) <= 2);
  CHECK((v.witness->adjoint() * c.m * *v.witness)(0).real() == doctest::Approx(v.min_value).epsilon(1e-9));
}

TEST_CASE("see-saw is deterministic for a fixed seed and monotone under restarts") {
  const ChoiMatrix c = build_choi(phi_combination(3, 1.1, 0.25));
  SeesawOptions a;
  a.restarts = 6;
  a.seed = 42;
  const CertVerdict first = seesaw_min_blockform(c, 2, a);
  const CertVerdict second = seesaw_min_blockform(c, 2, a);
  CHECK(first.min_value == second.min_value);
  CHECK(first.seed == 42);
  SeesawOptions b = a;
  b.restarts = 12;
  const CertVerdict wider = seesaw_min_blockform(c, 2, b);
  CHECK(wider.min_value <= first.min_value + 1e-15);  // superset of the same restart streams
  CHECK_THROWS_AS((void)seesaw_min_blockform(c, 0, a), std::domain_error);
  SeesawOptions bad;
  bad.restarts = 0;
  CHECK_THROWS_AS((void)seesaw_min_blockform(c, 2, bad), std::domain_error);
}

TEST_CASE("certify: complete positivity points are certified for every k") {
  SeesawOptions opts;
  opts.restarts = 4;
  for (int d = 2; d <= 4; ++d)
    for (int k = 1; k <= d; ++k) {
      const CertVerdict v = certify(Family::Phi, d, k, 0.5, 0.1, opts);
      CHECK(v.status == CertStatus::CertifiedAnalytic);
      CHECK(!v.conjectural);
      CHECK(v.method == "exact-region");
    }
}

TEST_CASE("certify: interval endpoints refute outward and hold inward") {
  SeesawOptions opts;
  opts.restarts = 4;
  for (int d = 2; d <= 5; ++d)
    for (int k = 1; k <= d; ++k) {
      const double edge = to_double(rat(k * d, k * d - 1));
      const CertVerdict out = certify(Family::Phi, d, k, edge + 0.03, 0.0, opts);
      CHECK(out.status == CertStatus::Refuted);
      CHECK(out.min_value < 0);
      const CertVerdict in = certify(Family::Phi, d, k, edge - 0.03, 0.0, opts);
      CHECK(in.status == CertStatus::CertifiedAnalytic);  // y <= 0 side is fully proven
    }
  // Second family, k >= 2: the interval opens at d/(d+1) from the left.
  for (int d = 2; d <= 5; ++d)
    for (int k = 2; k <= d; ++k) {
      const double edge = to_double(rat(d, d + 1));
      const CertVerdict out = certify(Family::Lambda, d, k, edge - 0.03, 0.0, opts);
      CHECK(out.status == CertStatus::Refuted);
      CHECK(out.method == "pair-witness");
      const CertVerdict in = certify(Family::Lambda, d, k, edge + 0.03, 0.0, opts);
      CHECK(in.status == CertStatus::CertifiedAnalytic);
    }
}

TEST_CASE("certify: refutation methods match the served edge") {
  SeesawOptions opts;
  opts.restarts = 4;
  CHECK(certify(Family::Phi, 3, 1, -0.1, 0.5, opts).method == "diag-witness");
  CHECK(certify(Family::Phi, 3, 1, 0.5, 1.3, opts).method == "allones-witness");
  CHECK(certify(Family::Phi, 3, 1, 0.3, -0.3, opts).method == "rankone-witness");
  CHECK(certify(Family::Phi, 3, 3, 1.0, 0.5, opts).method == "choi-spectrum");  // outside CP, k = d
  CHECK(certify(Family::Phi, 4, 2, 0.6, 0.7, opts).method == "grouped-witness");
  CHECK(certify(Family::Phi, 3, 2, 0.5, to_double(chain_beta(2, rat(1, 2))) + 0.05, opts).method ==
        "chain-witness");
  CHECK(certify(Family::Lambda, 3, 2, 0.5, 0.0, opts).method == "pair-witness");
  CHECK(certify(Family::Lambda, 3, 1, -0.1, 0.5, opts).method == "diag-witness");
  CHECK(certify(Family::Lambda, 3, 1, 0.5, 1.2, opts).method == "allones-witness");
  CHECK(certify(Family::Lambda, 3, 1, 0.9, -0.7, opts).method == "rankone-witness");
}

TEST_CASE("certify: refuted verdicts carry consistent witnesses") {
  SeesawOptions opts;
  opts.restarts = 4;
  for (const auto& [f, d, k, x, y] : std::vector<std::tuple<Family, int, int, double, double>>{
           {Family::Phi, 3, 1, 1.6, 0.0},
           {Family::Phi, 4, 2, 1.0, 0.4},
           {Family::Phi, 3, 2, 0.5, 1.1},
           {Family::Phi, 3, 3, 1.0, 0.5},
           {Family::Lambda, 4, 2, 0.5, 0.0},
           {Family::Lambda, 3, 1, 1.6, 0.0}}) {
    const CertVerdict v = certify(f, d, k, x, y, opts);
    REQUIRE(v.status == CertStatus::Refuted);
    REQUIRE(v.witness.has_value());
    CHECK(std::abs(v.witness->norm() - 1.0) <= 1e-10);
    CHECK(schmidt_rank(*v.witness, d) <= k);
    CHECK(choi_value(f, d, x, y, *v.witness) == doctest::Approx(v.min_value).epsilon(1e-9));
    CHECK(v.min_value < -1e-6);
    CHECK(!v.conjectural);
  }
}

TEST_CASE("certify: unproven interior points are conjectural and see-saw clean") {
  SeesawOptions opts;
  opts.restarts = 6;
  const CertVerdict v = certify(Family::Phi, 5, 2, 1.0, 0.05, opts);
  CHECK(v.status == CertStatus::NumericallySupported);
  CHECK(v.conjectural);
  CHECK(v.method == "seesaw-support");
  CHECK(v.min_value >= -1e-9);
  CHECK(v.restarts_used == 6);

  // The same point's region bookkeeping agrees.
  const ParamRegion reg = region(Family::Phi, RegionKind::KPos, 5, 2);
  CHECK(reg.conjectural);
  CHECK(contains(reg, {rationalize(1.0), rationalize(0.05)}));
}

TEST_CASE("certify: outside the region with no analytic witness falls back to see-saw") {
  SeesawOptions opts;
  opts.restarts = 8;
  // d=5, k=3: k does not divide d and k != d-1, above the top edge only.
  const ParamRegion reg = region(Family::Phi, RegionKind::KPos, 5, 3);
  const RationalPoint pt{rat(9, 10), rat(11, 50)};
  REQUIRE(!contains(reg, pt));
  const auto diag = kpos_witness_diag_exact(5, 3, pt.x, pt.y);
  REQUIRE(diag[0] >= 0);
  REQUIRE(diag[1] >= 0);
  REQUIRE(diag[2] >= 0);
  const CertVerdict v = certify(Family::Phi, 5, 3, 0.9, 0.22, opts);
  CHECK((v.method == "seesaw" || v.method == "seesaw-support"));
  if (v.status == CertStatus::Refuted) {
    CHECK(!v.conjectural);
    CHECK(schmidt_rank(*v.witness, 5) <= 3);
  } else {
    CHECK(v.conjectural);
  }
}

TEST_CASE("certify rejects invalid dimensions") {
  CHECK_THROWS_AS((void)certify(Family::Phi, 1, 1, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS((void)certify(Family::Phi, 3, 0, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS((void)certify(Family::Phi, 3, 4, 0.0, 0.0), std::domain_error);
}
