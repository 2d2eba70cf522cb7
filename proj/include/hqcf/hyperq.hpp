#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hqcf/contfrac.hpp"

namespace hqcf {

// Defining data of an element of the family E(p, k, l): l initial quotients
// lambda_i * T together with the relation
//   alpha^p = u1 * K_{1,2k} * alpha_{l+1} + u2 * K_{1,2k-1}.
struct HyperParams {
  uint32_t p = 0;
  uint32_t k = 0;
  uint32_t l = 0;
  std::vector<Fe> lambdas;  // l nonzero constants
  Fe u1 = kFeZero;
  Fe u2 = kFeZero;
  const FieldSpec* spec = nullptr;
};

HyperParams make_hyper_params(uint32_t p, uint32_t k, uint32_t l, std::vector<Fe> lambdas, Fe u1,
                              Fe u2);

// True when alpha * (C alpha^r + D) - (A alpha^r + B) vanishes on the whole
// certified window; a necessary condition verified at finite precision.
bool is_hyperquadratic_witness(const LaurentSeries& alpha, uint64_t r, const TPoly& A,
                               const TPoly& B, const TPoly& C, const TPoly& D);

// v_1 = 2k-1 and v_{i+1} v_i = (2k-2i-1)(2k-2i+1) / (i(2k-i)); the full
// 2k-tuple, all entries nonzero for 1 <= k < p/2.
std::vector<Fe> v_sequence(uint32_t p, uint32_t k);

// K_{m,n} = <v_m T, ..., v_n T>, with K_{1,0} = 1.
TPoly K_continuant(uint32_t p, uint32_t k, uint32_t m, uint32_t n);

// A_0 = T, A_{m+1} = integer part of A_m^p / (T^2-1)^k.
std::vector<TPoly> A_sequence(uint32_t p, uint32_t k, uint32_t m_max);

// Exact m-adic valuation of n, and i(n) = v_{4j+1}[4n - 1].
int padic_valuation(uint64_t m, uint64_t n);
int i_of_n(uint32_t j, uint64_t n);

// The perfectness test
//   [l1, ..., l_{l-1}, l_l - 2k (u1/u2)(v_{2k}/v_1)] = k 2^{1-2k} C(2k,k) u2.
// Throws BracketZeroError when the constant continued fraction on the left
// is undefined.
bool condition_star(const HyperParams& params);

// Eliminates alpha_{l+1} between the convergent relation and the defining
// Frobenius relation; the result has nonzero coefficients only at X-degrees
// p+1, p, 1, 0.
XPoly build_E_equation(const HyperParams& params);

// --- the quartic family -------------------------------------------------

// (9/32) X^4 - T X^3 + X^2 - 8/27, constants reduced mod p. p > 3.
XPoly rqe_P(uint32_t p);

// Observation attached to the quartic: the hypothesis 12A + C^2 = 0 as
// displayed (A = 9/32, C = 1) holds only when p | 35, but it holds for
// every p once the quartic is rescaled so that its constant term is 1.
struct RqeTheoremObservation {
  Fe raw_value;          // 12*(9/32) + 1 in F_p
  bool raw_holds;        // raw_value == 0
  bool rescaled_holds;   // always true; asserted
};
RqeTheoremObservation rqe_theorem_observation(uint32_t p);

// epsilon = 32/(9 v_{j+1}),
// epsilon' = (-16)^{j+1} / (3 v_{j+1} C(4j,2j)) * [v_{j+1},...,v_{4j-1}, 3v_{4j}/5].
std::pair<Fe, Fe> rqe_epsilons(uint32_t p);

// H(X) = K_{j+2,4j} X^{p+1} - eps K_{j+1,4j} X^p + eps' (K_{1,j} X + eps K_{1,j-1}).
XPoly rqe_H(uint32_t p);

// Everything the quartic pipeline derives for one prime p = 6j + 1.
struct RqeData {
  uint32_t p = 0;
  uint32_t j = 0;
  const FieldSpec* spec = nullptr;
  std::vector<Fe> v;  // 4j-tuple
  Fe epsilon = kFeZero, epsilon_prime = kFeZero;
  XPoly P, H;
  HyperParams params;  // the E(p,2j,3j) tuple attached to the root
  RqeTheoremObservation observation;
};
RqeData rqe_data(uint32_t p);

struct DivisionCheck {
  bool divides = false;
  XPoly quotient;
  XPoly remainder;
  bool remul_ok = false;  // quotient * P == H, re-verified exactly
};
DivisionCheck rqe_divides(uint32_t p);

struct ScanEntry {
  uint32_t p = 0;
  bool divides = false;
  bool remul_ok = false;
  bool raw_hypothesis_holds = false;  // the 12A + C^2 observation, as displayed
  double millis = 0.0;
};
struct ScanReport {
  uint32_t p_max = 0;
  std::vector<ScanEntry> entries;  // ordered by p regardless of scheduling
  bool all_ok = true;
};
// Every prime p = 1 mod 3 in [7, p_max]; entries are computed in parallel
// (one prime per task) and merged in order.
ScanReport scan_primes(uint32_t p_max, bool parallel = true);

// Constructive solver behind the divisibility statements: given
// 12A + C^2 = 0 and P = AX^4+BX^3+CX^2+1 squarefree, finds a nonzero
// H = U X^{r+1} + V X^r + W X + Z with P | H, where r = p or p^2 according
// to p mod 3. An empty kernel would falsify the statement; it is returned
// as a certificate rather than an exception.
struct Theorem1Result {
  std::optional<XPoly> H;
  uint64_t r = 0;
  std::string failure;  // nonempty on certificate-of-failure
};
Theorem1Result theorem1_solve(const RationalFunc& A, const RationalFunc& B,
                              const RationalFunc& C, const FieldSpec* spec);

// Shape certification of an expansion of the quartic root: a_n must be a
// nonzero constant multiple of A_{i(n)} with the degree law
// deg a_n = (p^{i(n)} + 2)/3, the first 3j lambdas must match
// v_{j+i} eps^{(-1)^{i+1}}, and the constructed tuple must satisfy the
// perfectness condition.
struct PatternEntry {
  uint64_t n = 0;    // 1-based index into the expansion
  int i = 0;         // i(n)
  long long expected_degree = 0;
  long long actual_degree = 0;
  Fe lambda = kFeZero;
  bool shape_ok = false;
  bool degree_ok = false;
};
struct PatternReport {
  uint32_t p = 0;
  size_t checked = 0;
  bool all_shapes_ok = false;
  bool all_degrees_ok = false;
  bool lambda_law_ok = false;     // lambda_i = v_{j+i} eps^{(-1)^{i+1}}, i <= 3j
  bool u_law_ok = false;          // u2 = (-1)^j eps', u1 = u2 eps^{(-1)^{j+1}}
  bool condition_star_ok = false;
  std::vector<PatternEntry> entries;
  std::string first_mismatch;  // human-readable counterexample, empty if none
  bool ok() const {
    return all_shapes_ok && all_degrees_ok && lambda_law_ok && u_law_ok && condition_star_ok;
  }
};
PatternReport certify_pattern(uint32_t p, const Expansion& expansion);

// Expands the quartic root at p to `terms` certified quotients (series
// precision chosen internally; grows until the quotient budget is met).
Expansion rqe_expand(uint32_t p, size_t terms);

// Growth target (p - 2k - 1)/l compared against the exact window-sup of the
// expansion's growth statistic. Non-attainment is reported, not failed.
struct GrowthCheck {
  Rat64 target;
  Rat64 window_sup;
  bool window_valid = false;
  bool attained = false;  // window_sup == target exactly
};
GrowthCheck perfect_growth_check(uint32_t p, uint32_t k, uint32_t l, const Expansion& e);

// The characteristic-13 change of variables 1/beta(T) = v alpha(vT) linking
// the quartic root to the root of X^4 + X^2 - TX + 1. The displayed scaling
// v^2 = 5 provably sends the root to the companion X^4 - X^2 + TX + 1
// instead; v^2 = -5 yields the quoted equation, so that is what this check
// uses (see the scaling_squared field).
struct MillsRobbinsResult {
  bool ok = false;
  bool beta_in_prime_field = false;
  long long scaling_squared = 0;  // the value v^2 actually used
};
MillsRobbinsResult mills_robbins_check(size_t precision);

}  // namespace hqcf
