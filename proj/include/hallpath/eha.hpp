#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hallpath/partition.hpp"
#include "hallpath/polyrep.hpp"
#include "hallpath/series.hpp"
#include "hallpath/word.hpp"

namespace hallpath {

// 1_0 d- z1^m d+ 1_0
Word e_word(int m);
// 1_0 d+ z1^m d- 1_0
Word f_word(int m);
// 1_0 d- z1^m1 phi z1^m2 ... phi z1^mn 1_1
Word a_word(const std::vector<int>& m);
// a_word(m) followed by d+, a loop at level 0.
Word y_word(const std::vector<int>& m);
// (q-1)^-1 (d+ d- - d- d+) at the given level.
Expr phi_expr(int level);

// z_1^a1 ... z_k^ak at level `level` (sign of level picks the tower).
Word z_monomial(const std::vector<int>& exps, int level);
// f(z_i, z_{i+1}) as a combination of z-words; BivarPoly keys are (power of z_i, power of z_{i+1}).
Expr zpoly_expr(const BivarPoly& f, int level, int i = 1);

// Sum-over-boxes actions on level 0, independent of the tower construction:
//   e~_m I_lambda = -((1-q)(1-t))^-1 sum_x c(lambda; x) x^m I_{lambda+x}
//   f~_m I_mu     = sum_x c*(mu; x) x^m I_{mu-x}
template <class F>
Vect<typename F::Scalar> ft_e_act(PolyRep<F>& rep, int m, const Vect<typename F::Scalar>& v);
template <class F>
Vect<typename F::Scalar> ft_f_act(PolyRep<F>& rep, int m, const Vect<typename F::Scalar>& v);

enum class PsiSign { Plus, Minus };

// psi+: coefficients of z^-j, the product expanded at infinity.
// psi-: coefficients of z^j (that is psi-_{-j}), the product expanded at zero.
Series psi_rational(PsiSign sign, const Partition& lambda, int order);
// Same coefficients from exp of the power sums with Delta / DeltaStar eigenvalues.
Series psi_exponential(PsiSign sign, const Partition& lambda, int order);
// Both methods; throws ConsistencyError when they disagree.
Series psi_coeffs(PsiSign sign, const Partition& lambda, int order);

// h_n(z1, z2) = (z1^(n+1) - z2^(n+1)) / (z1 - z2), extended by h_-1 = 0 and
// h_n = -(z1 z2)^(n+1) h_{-n-2} for n <= -2.
BivarPoly h_poly(int n);

// alpha, beta with z1^m1 z2^m2 = (q^-1 z1 - t z2) alpha + (z1 - q z2) beta and beta symmetric.
std::pair<BivarPoly, BivarPoly> alpha_beta(int m1, int m2);

// Global signs relating e_m, f_m to e~_m, f~_m: e_m = s (1-q)(1-t) e~_m, f_m = s' f~_m.
struct SignConstants {
  int s = 0;
  int s_prime = 0;
};
// Reads the signs off e_0 I_empty and f_0 I_(1); throws ConsistencyError if they are not +-1.
SignConstants discover_signs();

// Operator named on the command line: e[m], f[m], Y[m1,..], A[m1,..], phi, psi+[m], psi-[m], or a word.
// psi operators are diagonal on level 0 and carry no word.
struct NamedOperator {
  std::string name;
  std::optional<Expr> expr;
  std::optional<PsiSign> psi;
  int psi_index = 0;

  int source() const { return expr ? expr->source() : 0; }
  int target() const { return expr ? expr->target() : 0; }
};
// `level` is the source level for phi and for words without a trailing 1_k.
NamedOperator parse_operator(const std::string& text, int level = 0);

template <class F>
Vect<typename F::Scalar> apply_operator(PolyRep<F>& rep, const NamedOperator& op, const Vect<typename F::Scalar>& v);

}  // namespace hallpath
