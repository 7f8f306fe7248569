#ifndef GENBINOM_IDENTITIES_HPP
#define GENBINOM_IDENTITIES_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "genbinom/rational.hpp"
#include "genbinom/report.hpp"

namespace genbinom {

/// Selects the identity as stated or a deliberately broken variant used to
/// show the check can fail.
enum class Variant { faithful, negative_control };

class UnknownIdentity : public std::invalid_argument {
public:
  explicit UnknownIdentity(const std::string& id) : std::invalid_argument("unknown identity: " + id) {}
};

class PoleInSummand : public std::domain_error {
public:
  explicit PoleInSummand(const std::string& what) : std::domain_error(what) {}
};

// Generalized coefficients, first values.
IdentityReport check_golden_values(int k, Variant v = Variant::faithful);

// Series G and H.
IdentityReport check_theorem1(int order, Variant v = Variant::faithful);
IdentityReport check_g_derivative(int order, Variant v = Variant::faithful);
IdentityReport check_corollary1(int order, Variant v = Variant::faithful);

/// sum_{k=0}^n A/(A+Bk) binom(A+Bk,k) binom(C-Bk,n-k) == binom(A+C,n).
/// Throws PoleInSummand when some A + Bk vanishes.
IdentityReport check_rothe(const Rational& a, const Rational& b, const Rational& c, int n,
                           Variant v = Variant::faithful);
/// Rothe at A = 1 + 1/(t-2), B = -1/(t-2), C = -1 - (n+1)/(t-2) for a
/// rational t != 2. The summand is taken in the pole-free form
/// (A/k) binom(A+Bk-1, k-1), which equals the original wherever A+Bk != 0.
IdentityReport check_rothe_at_t(const Rational& t, int n, Variant v = Variant::faithful);
/// The specialized form in X_k = -(k+1)/(t-2), Y_k = X_{k-2}:
/// (1-t)/(2-t) sum_k binom(Y_k+1,k)/(Y_k+1) binom(X_{n-k}-1,n-k) == binom(X_{n-1},n).
IdentityReport check_rothe_xy(const Rational& t, int n, Variant v = Variant::faithful);

// Generating function.
IdentityReport check_theorem2(int n, int order, Variant v = Variant::faithful);
IdentityReport check_theorem2_symbolic(int max_k, Variant v = Variant::faithful);

// Corollaries.
IdentityReport check_corollary2(int k, Variant v = Variant::faithful);
IdentityReport check_chu_vandermonde(int k, Variant v = Variant::faithful);
IdentityReport check_chu_vandermonde_weighted(int k, Variant v = Variant::faithful);
IdentityReport check_corollary5(int n, Variant v = Variant::faithful);
IdentityReport check_pascal_down(int m, Variant v = Variant::faithful);
IdentityReport check_pascal_up(int m, Variant v = Variant::faithful);

// Values at positive integers.
IdentityReport check_diagonal(int n, Variant v = Variant::faithful);
/// (1-t) divides <n,k>; the negative control asks the same of <n,n>.
IdentityReport check_divisibility(int n, int k, Variant v = Variant::faithful);
IdentityReport check_relation_41(int n, int k, Variant v = Variant::faithful);
/// The displayed n = 1..4 cases of binom(k,n) <n,k> = (1-t) f_{n,k} <-1,k-n-1>.
IdentityReport check_small_n_display(int n, int k, Variant v = Variant::faithful);
IdentityReport check_prop_n_nplus1(int n, Variant v = Variant::faithful);

// Binomial expansion.
IdentityReport check_expansion_methods(int k, Variant v = Variant::faithful);
/// c_{k-1}(k) .. c_{k-5}(k) against the displayed closed rows, k >= 6.
IdentityReport check_expansion_display(int k, Variant v = Variant::faithful);
/// The displayed relations for c_1(k) .. c_4(k).
IdentityReport check_explicit_display(int k, Variant v = Variant::faithful);

// Hook solutions (beyond the verify_* reports in hook_psi.hpp).
IdentityReport check_psi_golden(int r, Variant v = Variant::faithful);
/// -4 c_0^(r) == 2 r (r+1) <r,r>.
IdentityReport check_psi_c0(int r, Variant v = Variant::faithful);
/// The s = 2 relation with the printed psi_{r,1^2}; holds only for r = 1.
IdentityReport check_printed_psi_r11(int r);
IdentityReport check_ode(int s, int r, Variant v = Variant::faithful);

/// Ranges for the sweep; defaults are the documented acceptance ranges.
struct SweepLimits {
  int order = 40;   // thm1, thm1_derivative, cor1
  int max_k = 10;   // cor3, cor4, pascal_down, pascal_up
  int max_n = 20;   // cor5, prop_n_nplus1
  int max_r = 10;   // s = 0, 1 hook checks; s = 2 stops at max_r - 2
};

/// Stable identity ids, in sweep order.
const std::vector<std::string>& identity_ids();

/// Runs every case of one identity (or of all of them for id "all").
/// Cases run concurrently; the returned order is deterministic. With
/// negative_controls set, the mutated variants are run instead and each
/// report's `holds` is expected to be false.
std::vector<IdentityReport> run_sweep(std::string_view id, const SweepLimits& limits = {},
                                      bool negative_controls = false, unsigned threads = 0);

}  // namespace genbinom

#endif  // GENBINOM_IDENTITIES_HPP
