#pragma once
// Certification layer: analytic k-positivity witnesses with closed-form
// values, a see-saw minimizer of the Choi form over Schmidt-rank-bounded
// vectors, and the combined exact+numeric dispatcher.

#include "posmap/choi.hpp"
#include "posmap/zeromode.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace posmap {

inline constexpr double SEESAW_IMPROVE_TOL = 1e-12;
inline constexpr int SEESAW_MAX_ITERS = 500;
inline constexpr int SEESAW_DEFAULT_RESTARTS = 32;

enum class CertStatus { CertifiedAnalytic, NumericallySupported, Refuted };

struct CertVerdict {
  CertStatus status = CertStatus::NumericallySupported;
  double min_value = 0;            // lowest Choi-form value encountered (0 for pure region proofs)
  std::optional<CVector> witness;  // normalized Choi-space vector achieving min_value
  int schmidt_rank_bound = 0;
  int restarts_used = 0;
  std::uint64_t seed = 0;
  bool conjectural = false;
  std::string method;
};

struct SeesawOptions {
  int restarts = SEESAW_DEFAULT_RESTARTS;
  std::uint64_t seed = 0;
  double tol = PSD_TOL;  // refutation threshold on the minimized value
};

// Deterministic seed mixing for per-restart / per-grid-cell streams.
[[nodiscard]] std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

// ---------------------------------------------------------------------------
// Analytic witnesses.  Each self-checks its closed form against the
// eigensolver (std::logic_error on mismatch) and carries a normalized
// Choi-space witness vector of the advertised Schmidt rank.
// ---------------------------------------------------------------------------

// First family on the all-ones matrix J: spectrum
// { x + y (mult d-1), d - (d-1)(x+y) (mult 1) }.
[[nodiscard]] std::array<SpectrumLine, 2> witness_allones_spectrum(int d, double x, double y);

// First family on v v† for v = e_1 - e_d: spectrum
// { 2x/d + y, 2 - (2d-2)x/d - y, 2x/d (mult d-2) }.
[[nodiscard]] std::array<SpectrumLine, 3> witness_rankone_spectrum(int d, double x, double y);

// Diagonal-support witness v = sum_{i<k} e_i (x) e_i; the extended map on
// v v† has spectrum { x/d (mult k(d-1)), x/d + y (mult k-1),
// (k d - (k d - 1) x - d (k-1) y)/d (mult 1) }.
struct DiagWitness {
  std::array<SpectrumLine, 3> lines;
  CertStatus verdict = CertStatus::NumericallySupported;  // Refuted iff some value < -PSD_TOL
  double min_value = 0;
  CVector witness;  // Schmidt rank <= k
};
[[nodiscard]] DiagWitness kpos_witness_diag(int d, int k, double x, double y);
[[nodiscard]] std::array<Rational, 3> kpos_witness_diag_exact(int d, int k, const Rational& x, const Rational& y);

// Grouped witness for d = k*l: the principal submatrix keeping, in block row
// i, the coordinates of group i has constant row sum
// lambda = x/k + y + d(1 - x - y); the all-ones vector is an eigenvector and
// lambda < 0 refutes k-positivity.
struct GroupedWitness {
  double lambda = 0;
  CertStatus verdict = CertStatus::NumericallySupported;
  double min_value = 0;  // Choi-form value lambda / l
  CVector witness;       // Schmidt rank <= k
};
[[nodiscard]] GroupedWitness kpos_witness_grouped(int d, int k, double x, double y);
[[nodiscard]] Rational kpos_witness_grouped_exact(int d, int k, const Rational& x, const Rational& y);

// Chain witness at k = d-1: the pencil X = A + alpha*B on the boundary line.
// Requires d >= 3 and alpha in [0, d/(d-1)].
struct ChainWitness {
  CMatrix x, a, b;
  double min_eig = 0;
};
[[nodiscard]] ChainWitness kpos_witness_chain(int d, double alpha);

// Exact Choi-form value of the chain kernel vector at an arbitrary point;
// negative iff the point lies strictly above the boundary line.
[[nodiscard]] Rational kpos_chain_form_exact(int d, const Rational& x, const Rational& y);

// Second family, k >= 2: witness w = e_1 (x) e_1 + e_2 (x) e_d.  The support
// eigenvalues are { 1 - (d-1)x/d, 1 - (d-1)x/d - y, (d+1)x/d + y - 1 };
// some value is negative exactly when the point leaves the CP triangle.
struct Lambda2Witness {
  std::array<double, 3> values;
  CertStatus verdict = CertStatus::NumericallySupported;
  double min_value = 0;
  CVector witness;  // Schmidt rank <= 2
};
[[nodiscard]] Lambda2Witness lambda_2pos_witness(int d, double x, double y);
[[nodiscard]] std::array<Rational, 3> lambda_2pos_witness_exact(int d, const Rational& x, const Rational& y);

// ---------------------------------------------------------------------------
// See-saw minimization of <w|C|w> over unit vectors of Schmidt rank <= k.
// Alternates exact half-steps (each a bottom eigenpair of the Choi matrix
// contracted against the orthonormalized fixed factor), so the value is
// monotone nonincreasing; best over `restarts` random starts, deterministic
// for a fixed seed.
// ---------------------------------------------------------------------------
[[nodiscard]] CertVerdict seesaw_min_blockform(const ChoiMatrix& c, int k, const SeesawOptions& opts = {});

// ---------------------------------------------------------------------------
// Dispatcher: exact region classification first; analytic witnesses for
// refutation; see-saw corroboration where no proof is known (verdict then
// carries conjectural = true).
// ---------------------------------------------------------------------------
[[nodiscard]] CertVerdict certify(Family f, int d, int k, double x, double y, const SeesawOptions& opts = {});

}  // namespace posmap
