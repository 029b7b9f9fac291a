#include "hallpath/checker.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <thread>

#include "hallpath/coefficients.hpp"
#include "hallpath/eha.hpp"
#include "hallpath/errors.hpp"
#include "hallpath/polyrep.hpp"
#include "hallpath/rewriter.hpp"
#include "hallpath/series.hpp"

namespace hallpath {

namespace {

const RatFunc& Q() {
  static const RatFunc v = RatFunc::q();
  return v;
}
const RatFunc& T() {
  static const RatFunc v = RatFunc::t();
  return v;
}

std::string str(int x) { return std::to_string(x); }

RelationReport make(const std::string& id, const std::string& family, const std::string& params) {
  RelationReport r;
  r.id = id;
  r.family = family;
  r.params = params;
  return r;
}

std::string list_str(const std::vector<int>& m) {
  std::string s;
  for (int x : m) s += (s.empty() ? "" : ",") + str(x);
  return "(" + s + ")";
}

Expr W(const std::string& text, int source) { return Expr(parse_word(text, source)); }

std::string zt(int i, int a) { return a == 0 ? " " : " z" + str(i) + "^" + str(a) + " "; }

Expr zero(int source, int target) { return Expr(source, target); }

struct Instance {
  std::string params;
  Expr lhs;
  Expr rhs;
};
using Instances = std::vector<Instance>;

struct Relation {
  RelationInfo info;
  std::function<Instances(const CheckConfig&)> gen;
  std::function<std::vector<RelationReport>(Checker&)> custom;
};

bool fits(const Instance& in, int K) {
  for (const Expr* e : {&in.lhs, &in.rhs}) {
    auto [lo, hi] = e->level_range();
    if (lo < -K || hi > K) return false;
  }
  return true;
}

// ---------- affine Hecke relations on either tower ----------

Instances hecke_quadratic(const CheckConfig& c, int sign) {
  Instances out;
  for (int k = 2; k <= c.policy.max_level; ++k)
    for (int i = 1; i < k; ++i) {
      const int L = sign * k;
      const RatFunc p = hecke_parameter(L);
      const std::string Ti = "T" + str(i);
      Expr lhs = W(Ti + " " + Ti, L) + W(Ti, L) * (p - 1) - Expr::identity(L) * p;
      out.push_back({"k=" + str(L) + ",i=" + str(i), lhs, zero(L, L)});
    }
  return out;
}

Instances hecke_inverse(const CheckConfig& c, int sign) {
  Instances out;
  for (int k = 2; k <= c.policy.max_level; ++k)
    for (int i = 1; i < k; ++i) {
      const int L = sign * k;
      const std::string Ti = "T" + str(i);
      out.push_back({"k=" + str(L) + ",i=" + str(i) + ",T*T^-1", W(Ti + " " + Ti + "^-1", L), Expr::identity(L)});
      out.push_back({"k=" + str(L) + ",i=" + str(i) + ",T^-1*T", W(Ti + "^-1 " + Ti, L), Expr::identity(L)});
    }
  return out;
}

Instances hecke_braid(const CheckConfig& c, int sign) {
  Instances out;
  for (int k = 3; k <= c.policy.max_level; ++k)
    for (int i = 1; i + 1 < k; ++i) {
      const int L = sign * k;
      const std::string a = "T" + str(i), b = "T" + str(i + 1);
      out.push_back({"k=" + str(L) + ",i=" + str(i), W(a + " " + b + " " + a, L), W(b + " " + a + " " + b, L)});
    }
  return out;
}

Instances hecke_far(const CheckConfig& c, int sign) {
  Instances out;
  for (int k = 4; k <= c.policy.max_level; ++k)
    for (int i = 1; i < k; ++i)
      for (int j = i + 2; j < k; ++j) {
        const int L = sign * k;
        const std::string a = "T" + str(i), b = "T" + str(j);
        out.push_back({"k=" + str(L) + ",i=" + str(i) + ",j=" + str(j), W(a + " " + b, L), W(b + " " + a, L)});
      }
  return out;
}

Instances bernstein(const CheckConfig& c, int sign) {
  Instances out;
  for (int k = 2; k <= c.policy.max_level; ++k)
    for (int i = 1; i < k; ++i) {
      const int L = sign * k;
      const std::string Ti = "T" + str(i) + "^-1";
      out.push_back({"k=" + str(L) + ",i=" + str(i), W(Ti + " z" + str(i + 1) + " " + Ti, L),
                     W("z" + str(i), L) * hecke_parameter(L).inv()});
    }
  return out;
}

Instances z_T_commute(const CheckConfig& c, int sign) {
  Instances out;
  for (int k = 3; k <= c.policy.max_level; ++k)
    for (int i = 1; i < k; ++i)
      for (int j = 1; j <= k; ++j) {
        if (j == i || j == i + 1) continue;
        const int L = sign * k;
        const std::string a = "z" + str(j), b = "T" + str(i);
        out.push_back({"k=" + str(L) + ",i=" + str(i) + ",j=" + str(j), W(a + " " + b, L), W(b + " " + a, L)});
      }
  return out;
}

Instances z_z_commute(const CheckConfig& c, int sign) {
  Instances out;
  for (int k = 2; k <= c.policy.max_level; ++k)
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        const int L = sign * k;
        const std::string a = "z" + str(i), b = "z" + str(j);
        out.push_back({"k=" + str(L) + ",i=" + str(i) + ",j=" + str(j), W(a + " " + b, L), W(b + " " + a, L)});
      }
  return out;
}

// Delta letters commute with each other and with the given loop/arrow letters.
Instances delta_commute(const CheckConfig& c, int sign) {
  Instances out;
  const int K = c.policy.max_level;
  const std::vector<std::string> deltas{"Delta[1]", "Delta[2]", "DeltaStar[1]", "DeltaStar[2]"};
  for (size_t a = 0; a < deltas.size(); ++a) {
    for (size_t b = a + 1; b < deltas.size(); ++b)
      for (int k = 0; k <= K; ++k) {
        const int L = sign * k;
        out.push_back({"level=" + str(L) + "," + deltas[a] + "," + deltas[b], W(deltas[a] + " " + deltas[b], L),
                       W(deltas[b] + " " + deltas[a], L)});
      }
    for (int k = 1; k <= K; ++k) {
      const int L = sign * k;
      for (int i = 1; i <= k; ++i)
        out.push_back({"level=" + str(L) + "," + deltas[a] + ",z" + str(i), W(deltas[a] + " z" + str(i), L),
                       W("z" + str(i) + " " + deltas[a], L)});
      for (int i = 1; i < k; ++i)
        out.push_back({"level=" + str(L) + "," + deltas[a] + ",T" + str(i), W(deltas[a] + " T" + str(i), L),
                       W("T" + str(i) + " " + deltas[a], L)});
      // d- on the plus tower, d+ on the minus tower
      const std::string d = sign > 0 ? "d-" : "d+";
      out.push_back({"source=" + str(L) + "," + deltas[a] + "," + d, W(deltas[a] + " " + d, L),
                     W(d + " " + deltas[a], L)});
    }
  }
  return out;
}

// [Delta_m, d] = sgn z1^(+-m) d for d = d+ (plus tower) or d- (minus tower).
Instances delta_arrow(const CheckConfig& c, int sign, bool star) {
  Instances out;
  const std::string d = sign > 0 ? "d+" : "d-";
  const RatFunc sgn = sign > 0 ? RatFunc(1) : RatFunc(-1);
  for (int k = 0; k < c.policy.max_level; ++k)
    for (int m = 1; m <= 3; ++m) {
      const int L = sign * k;
      const std::string D = (star ? "DeltaStar[" : "Delta[") + str(m) + "]";
      Expr lhs = W(D + " " + d, L) - W(d + " " + D, L);
      Expr rhs = W("z1^" + str(star ? -m : m) + " " + d, L) * sgn;
      out.push_back({"source=" + str(L) + ",m=" + str(m), lhs, rhs});
    }
  return out;
}

// ---------- plus tower ----------

Instances dminus2_T_plus(const CheckConfig& c) {
  Instances out;
  for (int k = 2; k <= c.policy.max_level; ++k)
    out.push_back({"k=" + str(k), W("d- d- T" + str(k - 1), k), W("d- d-", k)});
  return out;
}

Instances dminus_T_plus(const CheckConfig& c) {
  Instances out;
  for (int k = 3; k <= c.policy.max_level; ++k)
    for (int i = 1; i <= k - 2; ++i)
      out.push_back({"k=" + str(k) + ",i=" + str(i), W("d- T" + str(i), k), W("T" + str(i) + " d-", k)});
  return out;
}

Instances T_dplus2_plus(const CheckConfig& c) {
  Instances out;
  for (int k = 0; k + 2 <= c.policy.max_level; ++k) out.push_back({"k=" + str(k), W("T1 d+ d+", k), W("d+ d+", k)});
  return out;
}

Instances dplus_T_plus(const CheckConfig& c) {
  Instances out;
  for (int k = 2; k + 1 <= c.policy.max_level; ++k)
    for (int i = 1; i <= k - 1; ++i)
      out.push_back({"k=" + str(k) + ",i=" + str(i), W("d+ T" + str(i), k), W("T" + str(i + 1) + " d+", k)});
  return out;
}

Instances phi_dminus_plus(const CheckConfig& c) {
  Instances out;
  for (int k = 2; k <= c.policy.max_level; ++k)
    out.push_back({"k=" + str(k), W("phi d-", k) * Q(), W("d- phi T" + str(k - 1), k)});
  return out;
}

Instances T_phi_dplus_plus(const CheckConfig& c) {
  Instances out;
  for (int k = 1; k <= c.policy.max_level; ++k)
    out.push_back({"k=" + str(k), W("T1 phi d+", k), W("d+ phi", k) * Q()});
  return out;
}

Instances z_dminus_plus(const CheckConfig& c) {
  Instances out;
  for (int k = 2; k <= c.policy.max_level; ++k)
    for (int i = 1; i <= k - 1; ++i)
      out.push_back({"k=" + str(k) + ",i=" + str(i), W("z" + str(i) + " d-", k), W("d- z" + str(i), k)});
  return out;
}

Instances dplus_z_plus(const CheckConfig& c) {
  Instances out;
  for (int k = 1; k + 1 <= c.policy.max_level; ++k)
    for (int i = 1; i <= k; ++i)
      out.push_back({"k=" + str(k) + ",i=" + str(i), W("d+ z" + str(i), k), W("z" + str(i + 1) + " d+", k)});
  return out;
}

Instances qphi_plus(const CheckConfig& c) {
  Instances out;
  for (int k = 1; k <= c.policy.max_level; ++k) {
    const Expr pm = W("d+ d-", k), mp = W("d- d+", k);
    Expr lhs = W("z1", k) * (pm * Q() - mp);
    Expr rhs = (pm - mp) * W("z" + str(k), k) * (Q() * T());
    out.push_back({"k=" + str(k), lhs, rhs});
  }
  return out;
}

// ---------- minus tower ----------

Instances dplus2_T_minus(const CheckConfig& c) {
  Instances out;
  for (int k = 2; k <= c.policy.max_level; ++k)
    out.push_back({"k=" + str(-k), W("d+ d+ T" + str(k - 1), -k), W("d+ d+", -k)});
  return out;
}

Instances dplus_T_minus(const CheckConfig& c) {
  Instances out;
  for (int k = 3; k <= c.policy.max_level; ++k)
    for (int i = 1; i <= k - 2; ++i)
      out.push_back({"k=" + str(-k) + ",i=" + str(i), W("d+ T" + str(i), -k), W("T" + str(i) + " d+", -k)});
  return out;
}

Instances T_dminus2_minus(const CheckConfig& c) {
  Instances out;
  for (int k = 0; k + 2 <= c.policy.max_level; ++k)
    out.push_back({"k=" + str(-k), W("T1 d- d-", -k), W("d- d-", -k)});
  return out;
}

Instances dminus_T_minus(const CheckConfig& c) {
  Instances out;
  for (int k = 2; k + 1 <= c.policy.max_level; ++k)
    for (int i = 1; i <= k - 1; ++i)
      out.push_back({"k=" + str(-k) + ",i=" + str(i), W("d- T" + str(i), -k), W("T" + str(i + 1) + " d-", -k)});
  return out;
}

Instances phi_dplus_minus(const CheckConfig& c) {
  Instances out;
  for (int k = 2; k <= c.policy.max_level; ++k)
    out.push_back({"k=" + str(-k), W("phi d+", -k) * Q().inv(), W("d+ phi T" + str(k - 1), -k)});
  return out;
}

Instances T_phi_dminus_minus(const CheckConfig& c) {
  Instances out;
  for (int k = 1; k <= c.policy.max_level; ++k)
    out.push_back({"k=" + str(-k), W("T1 phi d-", -k), W("d- phi", -k) * Q().inv()});
  return out;
}

Instances z_dplus_minus(const CheckConfig& c) {
  Instances out;
  for (int k = 2; k <= c.policy.max_level; ++k)
    for (int i = 1; i <= k - 1; ++i)
      out.push_back({"k=" + str(-k) + ",i=" + str(i), W("z" + str(i) + " d+", -k), W("d+ z" + str(i), -k)});
  return out;
}

Instances dminus_z_minus(const CheckConfig& c) {
  Instances out;
  for (int k = 1; k + 1 <= c.policy.max_level; ++k)
    for (int i = 1; i <= k; ++i)
      out.push_back({"k=" + str(-k) + ",i=" + str(i), W("d- z" + str(i), -k), W("z" + str(i + 1) + " d-", -k)});
  return out;
}

Instances qphi_minus(const CheckConfig& c) {
  Instances out;
  for (int k = 1; k <= c.policy.max_level; ++k) {
    const Expr mp = W("d- d+", -k), pm = W("d+ d-", -k);
    Expr lhs = W("z1", -k) * (mp * Q().inv() - pm);
    Expr rhs = (mp - pm) * W("z" + str(k), -k) * (Q() * T()).inv();
    out.push_back({"k=" + str(-k), lhs, rhs});
  }
  return out;
}

// ---------- spherical relations ----------

Expr E(int m) { return Expr(e_word(m)); }
Expr F(int m) { return Expr(f_word(m)); }
Expr Y(const std::vector<int>& m) { return Expr(y_word(m)); }
Expr A(const std::vector<int>& m) { return Expr(a_word(m)); }

// G(z,w) X(z) X(w) = -G(w,z) X(w) X(z), coefficient of z^-n w^-m.
Instance quadratic(bool f_side, int n, int m) {
  const BivarPoly G = f_side ? g_poly().swapped() : g_poly();
  auto X = f_side ? F : E;
  Expr lhs(0, 0), rhs(0, 0);
  for (const auto& [k, c] : G.coeffs()) {
    lhs += X(n + k.first) * X(m + k.second) * c;
    rhs -= X(m + k.first) * X(n + k.second) * c;
  }
  return {"n=" + str(n) + ",m=" + str(m), lhs, rhs};
}

Instances quadratic_family(const CheckConfig& c, bool f_side) {
  Instances out;
  for (int n = -c.grid; n <= c.grid; ++n)
    for (int m = n; m <= c.grid; ++m) out.push_back(quadratic(f_side, n, m));
  return out;
}

Instances delta_e_family(const CheckConfig& c, bool f_side, bool star) {
  Instances out;
  for (int m = 1; m <= 3; ++m)
    for (int k = -c.grid; k <= c.grid; ++k) {
      const Expr D = W(std::string(star ? "DeltaStar[" : "Delta[") + str(m) + "]", 0);
      const int shift = star ? k - m : k + m;
      Expr lhs = commutator(D, f_side ? F(k) : E(k));
      Expr rhs = f_side ? F(shift) * RatFunc(-1) : E(shift);
      out.push_back({"m=" + str(m) + ",k=" + str(k), lhs, rhs});
    }
  return out;
}

void all_lists(int n, int lo, int hi, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(n, lo);
  for (;;) {
    out.push_back(cur);
    int j = n - 1;
    while (j >= 0 && cur[j] == hi) cur[j--] = lo;
    if (j < 0) return;
    ++cur[j];
  }
}

Instances y_relation_1(const CheckConfig& c) {
  Instances out;
  for (int n = 2; n <= c.y_arity; ++n) {
    std::vector<std::vector<int>> ms;
    all_lists(n, -c.y_grid, c.y_grid, ms);
    for (const auto& m : ms)
      for (int i = 1; i < n; ++i) {
        std::vector<int> shifted = m;
        shifted[i - 1] -= 1;
        shifted[i] += 1;
        const std::vector<int> left(m.begin(), m.begin() + i), right(m.begin() + i, m.end());
        Expr lhs = Y(m) - Y(shifted) * (Q() * T());
        Expr rhs = (Y(left) * Y(right)) * RatFunc(-1);
        out.push_back({"m=" + list_str(m) + ",i=" + str(i), lhs, rhs});
      }
  }
  return out;
}

Instances y_relation_2(const CheckConfig& c) {
  Instances out;
  for (int n = 1; n <= c.y_arity; ++n) {
    std::vector<std::vector<int>> ms;
    all_lists(n, -c.y_grid, c.y_grid, ms);
    for (const auto& m : ms)
      for (int k = -c.y_grid; k <= c.y_grid; ++k) {
        Expr rhs(0, 0);
        for (int i = 0; i < n; ++i) {
          auto ins = [&](int x, int y) {
            std::vector<int> r(m.begin(), m.begin() + i);
            r.push_back(x);
            r.push_back(y);
            r.insert(r.end(), m.begin() + i + 1, m.end());
            return Y(r);
          };
          if (k > m[i])
            for (int a = 1; a <= k - m[i]; ++a) rhs += ins(k - a, m[i] + a);
          else if (k < m[i])
            for (int a = 1; a <= m[i] - k; ++a) rhs -= ins(m[i] - a, k + a);
        }
        rhs *= (T() - 1) * (Q() - 1);
        out.push_back({"k=" + str(k) + ",m=" + list_str(m), commutator(E(k), Y(m)), rhs});
      }
  }
  return out;
}

Instances a_relation_1(const CheckConfig& c) {
  Instances out;
  for (int n = 1; n <= std::max(1, c.y_arity - 1); ++n) {
    std::vector<std::vector<int>> ms;
    all_lists(n, -c.y_grid, c.y_grid, ms);
    for (const auto& m : ms) {
      std::vector<int> a0 = m, a1 = m;
      a0.push_back(0);
      a1.back() -= 1;
      a1.push_back(1);
      Expr lhs = A(a0) - A(a1) * (Q() * T());
      Expr rhs = A(m) * W("d+ d-", 1) * RatFunc(-1);
      out.push_back({"m=" + list_str(m), lhs, rhs});
    }
  }
  return out;
}

// d- (z1 z2)^k h_{m-k-1}(z1, z2) z1 d+ as a loop at level 1.
Expr bracket_D(int m, int k) {
  const BivarPoly f = BivarPoly::monomial(k, k) * h_poly(m - k - 1) * BivarPoly::monomial(1, 0);
  return W("d-", 2) * zpoly_expr(f, 2) * W("d+", 1);
}

// q A_{..,k,m_i} - q A_{..,m_i,k} + q(t-1) (telescoped sum); `wrap` turns an index list into A or Y.
Expr a_relation_2_rhs(const std::vector<int>& prefix, int mi, int k, const std::function<Expr(std::vector<int>)>& wrap,
                      const std::vector<int>& suffix) {
  auto idx = [&](int x, int y) {
    std::vector<int> r = prefix;
    r.push_back(x);
    r.push_back(y);
    r.insert(r.end(), suffix.begin(), suffix.end());
    return wrap(r);
  };
  Expr rhs = (idx(k, mi) - idx(mi, k)) * Q();
  if (mi > k)
    for (int a = 1; a <= mi - k; ++a) rhs += idx(mi - a, k + a) * (Q() * (T() - 1));
  else if (mi < k)
    for (int a = 1; a <= k - mi; ++a) rhs -= idx(k - a, mi + a) * (Q() * (T() - 1));
  return rhs;
}

Instances a_relation_2(const CheckConfig& c) {
  Instances out;
  for (int n = 1; n <= 2; ++n) {
    std::vector<std::vector<int>> ms;
    all_lists(n, -c.y_grid, c.y_grid, ms);
    for (const auto& m : ms)
      for (int k = -c.y_grid; k <= c.y_grid; ++k) {
        const std::vector<int> prefix(m.begin(), m.end() - 1);
        std::vector<int> a0 = prefix;
        a0.push_back(0);
        Expr lhs = A(a0) * bracket_D(m.back(), k);
        Expr rhs = a_relation_2_rhs(prefix, m.back(), k, A, {});
        out.push_back({"m=" + list_str(m) + ",k=" + str(k), lhs, rhs});
      }
  }
  return out;
}

Instances di_to_y(const CheckConfig& c) {
  Instances out;
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::vector<int>> ms;
    all_lists(n, -c.y_grid, c.y_grid, ms);
    for (const auto& m : ms)
      for (int i = 1; i <= n; ++i)
        for (int k = -c.y_grid; k <= c.y_grid; ++k) {
          const std::vector<int> prefix(m.begin(), m.begin() + i - 1), suffix(m.begin() + i, m.end());
          // d- z1^m1 phi ... z1^m_{i-1} phi [D] phi z1^m_{i+1} ... phi z1^mn d+
          Expr left = i == 1 ? W("d-", 1) : [&] {
            std::vector<int> a0 = prefix;
            a0.push_back(0);
            return A(a0);
          }();
          Expr right = W("d+", 0);
          if (!suffix.empty()) {
            std::string s = "d- ";
            for (int x : suffix) s += "phi" + zt(1, x);
            s += " d+";
            Word w = parse_word(s, 0);
            w.letters.erase(w.letters.begin());
            right = Expr(w);
          }
          Expr lhs = left * bracket_D(m[i - 1], k) * right;
          if (i == 1 && prefix.empty()) lhs = W("d-", 1) * bracket_D(m[0], k) * right;
          Expr rhs = a_relation_2_rhs(prefix, m[i - 1], k, Y, suffix);
          out.push_back({"m=" + list_str(m) + ",i=" + str(i) + ",k=" + str(k), lhs, rhs});
        }
  }
  return out;
}

Instances push_T_left(const CheckConfig& c) {
  Instances out;
  const RatFunc coef = Q().inv() * (1 - Q());
  for (int k = -c.grid; k <= c.grid; ++k) {
    const Expr core = W("d- T1^-1" + zt(1, k) + "d+", 1);
    Expr lhs = W("phi", 1) * core;
    Expr rhs = core * W("phi", 1) + W("d-", 2) * zpoly_expr(h_poly(k - 1) * BivarPoly::monomial(1, 0), 2) *
                                        W("d+ phi", 1) * coef;
    out.push_back({"k=" + str(k), lhs, rhs});
  }
  return out;
}

Instances push_T_left_corollary(const CheckConfig& c) {
  Instances out;
  const RatFunc coef = Q().inv() * (1 - Q());
  for (int m = -c.grid; m <= c.grid; ++m)
    for (int k = -c.grid; k <= c.grid; ++k) {
      const Expr core = W("d- T1^-1" + zt(1, k) + "d+", 1);
      const Expr zm = m == 0 ? Expr::identity(1) : W("z1^" + str(m), 1);
      Expr lhs = zm * W("phi", 1) * core;
      Expr rhs = core * zm * W("phi", 1) - bracket_D(m, k) * W("phi", 1) * coef;
      out.push_back({"m=" + str(m) + ",k=" + str(k), lhs, rhs});
    }
  return out;
}

Instances right_end(const CheckConfig& c) {
  Instances out;
  const RatFunc coef = Q().inv() * (1 - Q());
  for (int m = -c.grid; m <= c.grid; ++m)
    for (int k = -c.grid; k <= c.grid; ++k) {
      const Expr zm = m == 0 ? Expr::identity(1) : W("z1^" + str(m), 1);
      Expr lhs = zm * W("d+ d-" + zt(1, k) + "d+", 0);
      Expr rhs = zm * W("phi" + zt(1, k) + "d+", 0) * (Q() - 1) + W("d- T1^-1" + zt(1, k) + "d+", 1) * zm * W("d+", 0);
      const BivarPoly f = BivarPoly::monomial(k, k) * h_poly(m - k - 1) * BivarPoly::monomial(1, 0);
      rhs -= W("d-", 2) * zpoly_expr(f, 2) * W("d+ d+", 0) * coef;
      out.push_back({"m=" + str(m) + ",k=" + str(k), lhs, rhs});
    }
  return out;
}

Instances level2_zero(const CheckConfig&) {
  Instances out;
  const std::vector<std::pair<std::string, BivarPoly>> sym{
      {"1", BivarPoly::monomial(0, 0)},
      {"z1+z2", BivarPoly::monomial(1, 0) + BivarPoly::monomial(0, 1)},
      {"z1z2+1", BivarPoly::monomial(1, 1) + BivarPoly::monomial(0, 0)},
      {"z1^2+z2^2", BivarPoly::monomial(2, 0) + BivarPoly::monomial(0, 2)},
      {"z1^-1+z2^-1", BivarPoly::monomial(-1, 0) + BivarPoly::monomial(0, -1)},
      {"(z1z2)^-1", BivarPoly::monomial(-1, -1)},
      {"z1^2z2+z1z2^2", BivarPoly::monomial(2, 1) + BivarPoly::monomial(1, 2)},
  };
  const BivarPoly lin = BivarPoly::monomial(1, 0) - BivarPoly::monomial(0, 1, Q());
  for (const auto& [name, a] : sym)
    out.push_back({"a=" + name, W("d- d-", 2) * zpoly_expr(lin * a, 2) * W("d+ d+", 0), zero(0, 0)});
  return out;
}

Instances ee_to_level2(const CheckConfig& c) {
  Instances out;
  const BivarPoly lin = BivarPoly::monomial(1, 0, Q().inv()) - BivarPoly::monomial(0, 1, T());
  for (int k = -c.grid; k <= c.grid; ++k)
    for (int m = -c.grid; m <= c.grid; ++m) {
      Expr lhs = E(k + 1) * E(m) - E(k) * E(m + 1) * T();
      Expr rhs = W("d- d-", 2) * zpoly_expr(lin * BivarPoly::monomial(k, m), 2) * W("d+ d+", 0);
      out.push_back({"k=" + str(k) + ",m=" + str(m), lhs, rhs});
    }
  return out;
}

Instances alpha_beta_operator(const CheckConfig& c) {
  Instances out;
  const BivarPoly lin = BivarPoly::monomial(1, 0, Q().inv()) - BivarPoly::monomial(0, 1, T());
  for (int m1 = -c.grid; m1 <= c.grid; ++m1)
    for (int m2 = -c.grid; m2 <= c.grid; ++m2) {
      const auto [alpha, beta] = alpha_beta(m1, m2);
      Expr lhs = W("d- d-", 2) * zpoly_expr(BivarPoly::monomial(m1, m2), 2) * W("d+ d+", 0);
      Expr rhs = W("d- d-", 2) * zpoly_expr(lin * alpha, 2) * W("d+ d+", 0);
      out.push_back({"m1=" + str(m1) + ",m2=" + str(m2), lhs, rhs});
    }
  return out;
}

Instances phi_commute_z(const CheckConfig& c) {
  Instances out;
  for (int k = 2; k <= c.policy.max_level; ++k)
    for (int i = 2; i <= k; ++i)
      out.push_back({"k=" + str(k) + ",i=" + str(i), W("z" + str(i) + " phi", k), W("phi z" + str(i - 1), k)});
  return out;
}

Instances phi_commute_T(const CheckConfig& c) {
  Instances out;
  for (int k = 3; k <= c.policy.max_level; ++k)
    for (int i = 2; i <= k - 1; ++i)
      out.push_back({"k=" + str(k) + ",i=" + str(i), W("T" + str(i) + " phi", k), W("phi T" + str(i - 1), k)});
  return out;
}

Instances phi2_T(const CheckConfig& c) {
  Instances out;
  for (int k = 2; k <= c.policy.max_level; ++k)
    out.push_back({"k=" + str(k), W("phi phi T" + str(k - 1), k), W("T1 phi phi", k)});
  return out;
}

Instances z_through_Tinv(const CheckConfig& c) {
  Instances out;
  for (int k = 2; k <= c.policy.max_level; ++k)
    for (int sign : {1, -1})
      for (int a = -c.grid; a <= c.grid; ++a) {
        const auto rules = push_z_through_Tinv(sign * k, 1, a);
        out.push_back({"level=" + str(sign * k) + ",a=" + str(a) + ",z1", rules[0].lhs, rules[0].rhs});
        out.push_back({"level=" + str(sign * k) + ",a=" + str(a) + ",z2", rules[1].lhs, rules[1].rhs});
      }
  return out;
}

// ---------- registry ----------

std::vector<Relation> build_registry();

const std::vector<Relation>& registry() {
  static const std::vector<Relation> r = build_registry();
  return r;
}

}  // namespace

// ---------- checker implementation ----------

struct Checker::Impl {
  CheckConfig cfg;
  unsigned nthreads = 1;
  std::vector<std::unique_ptr<PolyRep<ExactField>>> exact;
  std::vector<std::unique_ptr<PolyRep<PointField>>> point;

  explicit Impl(CheckConfig c) : cfg(std::move(c)) {
    nthreads = cfg.threads;
    if (nthreads == 0) {
      if (const char* env = std::getenv("HALLPATH_THREADS")) nthreads = static_cast<unsigned>(std::max(1, std::atoi(env)));
    }
    if (nthreads == 0) nthreads = std::max(1u, std::thread::hardware_concurrency());
    for (unsigned i = 0; i < nthreads; ++i) {
      exact.push_back(std::make_unique<PolyRep<ExactField>>(ExactField{}, cfg.policy));
      point.push_back(std::make_unique<PolyRep<PointField>>(PointField{cfg.q0, cfg.t0}, cfg.policy));
    }
  }

  // Index of the first domain state where diff does not vanish, or domain.size().
  template <class F>
  size_t first_failure(std::vector<std::unique_ptr<PolyRep<F>>>& reps, const std::vector<State>& domain,
                       const Expr& diff) {
    using S = typename F::Scalar;
    std::atomic<size_t> best{domain.size()};
    const unsigned T = domain.size() < 2 * static_cast<size_t>(nthreads) ? 1 : nthreads;
    std::vector<std::exception_ptr> errors(T);
    auto work = [&](unsigned tid) {
      try {
        for (size_t i = tid; i < domain.size(); i += T) {
          if (i >= best.load()) return;
          if (!reps[tid]->act(diff, Vect<S>(domain[i])).is_zero()) {
            size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
        }
      } catch (...) {
        errors[tid] = std::current_exception();
      }
    };
    if (T == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < T; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    return best.load();
  }
};

Checker::Checker(CheckConfig cfg) : impl_(std::make_unique<Impl>(std::move(cfg))) {}
Checker::~Checker() = default;

const CheckConfig& Checker::config() const { return impl_->cfg; }
unsigned Checker::threads() const { return impl_->nthreads; }
std::string Checker::mode() const {
  return impl_->cfg.fast ? PointField{impl_->cfg.q0, impl_->cfg.t0}.name() : ExactField{}.name();
}

RelationReport Checker::check_identity(const std::string& id, const std::string& family, const std::string& params,
                                       const Expr& lhs, const Expr& rhs) {
  RelationReport r = make(id, family, params);
  const int margin = std::max(lhs.margin(), rhs.margin());
  const int boxes = impl_->cfg.policy.max_boxes - margin;
  const std::vector<State> domain = boxes >= 0 ? enumerate_states(lhs.source(), boxes) : std::vector<State>{};
  r.domain_size = domain.size();
  const Expr diff = lhs - rhs;
  if (diff.is_zero()) return r;
  try {
    size_t bad = domain.size();
    bool exact = !impl_->cfg.fast;
    if (impl_->cfg.fast) {
      try {
        bad = impl_->first_failure(impl_->point, domain, diff);
      } catch (const PoleError&) {
        exact = true;
        r.note = "pole at the evaluation point; checked exactly";
      }
    }
    if (exact) bad = impl_->first_failure(impl_->exact, domain, diff);
    if (bad < domain.size()) {
      r.status = Status::Fail;
      r.witness = domain[bad].to_string();
      auto& rep = *impl_->exact[0];
      r.lhs = rep.act(lhs, Vect<RatFunc>(domain[bad])).to_string();
      r.rhs = rep.act(rhs, Vect<RatFunc>(domain[bad])).to_string();
    }
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.note = std::string("error: ") + e.what();
  }
  return r;
}

namespace {

bool selected(const CheckConfig& c, const RelationInfo& info) {
  if (c.select.empty()) return true;
  for (const auto& s : c.select)
    if (s == "all" || s == info.id || s == info.family) return true;
  return false;
}

std::vector<RelationReport> run_relation(Checker& ch, const Relation& rel) {
  std::vector<RelationReport> out;
  if (rel.custom) return rel.custom(ch);
  size_t kept = 0;
  for (const auto& in : rel.gen(ch.config())) {
    if (!fits(in, ch.config().policy.max_level)) continue;
    ++kept;
    out.push_back(ch.check_identity(rel.info.id, rel.info.family, in.params, in.lhs, in.rhs));
  }
  if (kept == 0) {
    RelationReport r = make(rel.info.id, rel.info.family, "-");
    r.note = "no instance fits the level cap " + str(ch.config().policy.max_level);
    out.push_back(r);
  }
  return out;
}

}  // namespace

std::vector<RelationReport> Checker::run() {
  std::vector<RelationReport> out;
  for (const auto& rel : registry())
    if (selected(impl_->cfg, rel.info)) {
      auto r = run_relation(*this, rel);
      out.insert(out.end(), r.begin(), r.end());
    }
  return out;
}

std::vector<RelationReport> Checker::run(const std::string& id_or_family) {
  std::vector<RelationReport> out;
  bool found = false;
  for (const auto& rel : registry())
    if (rel.info.id == id_or_family || rel.info.family == id_or_family || id_or_family == "all") {
      found = true;
      auto r = run_relation(*this, rel);
      out.insert(out.end(), r.begin(), r.end());
    }
  if (!found) throw InvalidInput("unknown relation or family '" + id_or_family + "'");
  return out;
}

std::vector<RelationInfo> list_relations() {
  std::vector<RelationInfo> out;
  for (const auto& r : registry()) out.push_back(r.info);
  return out;
}

bool all_passed(const std::vector<RelationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == Status::Pass; });
}

// ---------- custom checks ----------

namespace {


void fail(RelationReport& r, const std::string& witness, const std::string& lhs, const std::string& rhs) {
  if (r.status == Status::Fail) return;
  r.status = Status::Fail;
  r.witness = witness;
  r.lhs = lhs;
  r.rhs = rhs;
}

std::vector<RelationReport> coefficient_forms(Checker& ch) {
  const int N = ch.config().policy.max_boxes + 1;
  RelationReport c = make("c_forms", "coefficients", "|mu|<=" + str(N));
  RelationReport cs = make("cstar_forms", "coefficients", "|mu|<=" + str(N));
  RelationReport ratio = make("coefficient_ratio", "coefficients", "|mu|<=" + str(N));
  for (const auto& lam : partitions_up_to(N - 1))
    for (const auto& x : addable_boxes(lam)) {
      ++c.domain_size;
      ++ratio.domain_size;
      const RatFunc a = c_lambda_form(lam, x), b = c_product_form(lam, x);
      if (!(a == b)) fail(c, lam.to_string() + " + " + x.to_string(), a.to_string(), b.to_string());
      const auto id = coefficient_ratio(lam, x);
      if (!id.holds()) fail(ratio, lam.to_string() + " + " + x.to_string(), id.lhs.to_string(), id.rhs.to_string());
    }
  for (const auto& mu : partitions_up_to(N))
    for (const auto& x : removable_boxes(mu)) {
      ++cs.domain_size;
      const RatFunc a = cstar_lambda_form(mu, x), b = cstar_product_form(mu, x);
      if (!(a == b)) fail(cs, mu.to_string() + " - " + x.to_string(), a.to_string(), b.to_string());
    }
  return {c, cs, ratio};
}

std::vector<RelationReport> monodromy_checks(Checker& ch) {
  const int N = ch.config().policy.max_boxes;
  RelationReport m = make("monodromy", "coefficients", "|lambda|<=" + str(N));
  RelationReport d = make("dual_monodromy", "coefficients", "|mu|<=" + str(N));
  for (const auto& lam : partitions_up_to(N)) {
    const auto add = addable_boxes(lam);
    for (const auto& x : add)
      for (const auto& y : add) {
        if (x == y) continue;
        ++m.domain_size;
        const auto id = monodromy(lam, x, y);
        if (!id.holds())
          fail(m, lam.to_string() + " x=" + x.to_string() + " y=" + y.to_string(), id.lhs.to_string(),
               id.rhs.to_string());
      }
    const auto rem = removable_boxes(lam);
    for (const auto& x : rem)
      for (const auto& y : rem) {
        if (x == y) continue;
        ++d.domain_size;
        const auto id = dual_monodromy(lam, x, y);
        if (!id.holds())
          fail(d, lam.to_string() + " x=" + x.to_string() + " y=" + y.to_string(), id.lhs.to_string(),
               id.rhs.to_string());
      }
  }
  return {m, d};
}

std::vector<RelationReport> psi_dual(Checker& ch) {
  const int M = ch.config().series_order;
  const int N = ch.config().policy.max_boxes - 1;
  std::vector<RelationReport> out;
  for (PsiSign s : {PsiSign::Plus, PsiSign::Minus}) {
    RelationReport r = make("psi_dual_method", "DB0", std::string(s == PsiSign::Plus ? "psi+" : "psi-") +
                                                          ",order=" + str(M) + ",|lambda|<=" + str(N));
    for (const auto& lam : partitions_up_to(N)) {
      ++r.domain_size;
      const Series a = psi_rational(s, lam, M), b = psi_exponential(s, lam, M);
      for (int j = 0; j <= M; ++j)
        if (!(a[j] == b[j])) fail(r, "I_" + lam.to_string() + " order " + str(j), a[j].to_string(), b[j].to_string());
    }
    out.push_back(r);
  }
  return out;
}

std::vector<RelationReport> psi0_invertible(Checker& ch) {
  RelationReport r = make("psi0_invertible", "DB0", "|lambda|<=" + str(ch.config().policy.max_boxes));
  for (const auto& lam : partitions_up_to(ch.config().policy.max_boxes))
    for (PsiSign s : {PsiSign::Plus, PsiSign::Minus}) {
      ++r.domain_size;
      if (psi_rational(s, lam, 0)[0].is_zero()) fail(r, "I_" + lam.to_string(), "0", "invertible");
    }
  return {r};
}

std::vector<RelationReport> exp_identity(Checker& ch) {
  // exp[-sum u^m/m K_m] = -g(u,1)/g(1,u), u = w/z
  const int M = ch.config().series_order;
  RelationReport r = make("exp_identity", "DB0", "order=" + str(M));
  const RatFunc q3 = (Q() * T()).inv();
  Series log(M + 1);
  for (int m = 1; m <= M; ++m)
    log[m] = -(1 - Q().pow(m)) * (1 - T().pow(m)) * (1 - q3.pow(m)) * RatFunc(mpq_class(1, m));
  const Series lhs = series_exp(log, M);
  const AuxPoly u = AuxPoly::var();
  AuxRatFunc f{AuxPoly(RatFunc(-1)) * (u - AuxPoly(Q())) * (u - AuxPoly(T())) * (u - AuxPoly(q3)),
               (AuxPoly(RatFunc(1)) - u * AuxPoly(Q())) * (AuxPoly(RatFunc(1)) - u * AuxPoly(T())) *
                   (AuxPoly(RatFunc(1)) - u * AuxPoly(q3))};
  const Series rhs = series_expand(f, ExpandAt::Zero, M);
  r.domain_size = static_cast<size_t>(M + 1);
  for (int j = 0; j <= M; ++j)
    if (!(lhs[j] == rhs[j])) fail(r, "order " + str(j), lhs[j].to_string(), rhs[j].to_string());
  return {r};
}

template <class F>
std::vector<RelationReport> ft_comparison_impl(Checker& ch, PolyRep<F>& rep) {
  using S = typename F::Scalar;
  const SignConstants sc = discover_signs();
  const int N = ch.config().policy.max_boxes;
  const int g = ch.config().grid;
  RelationReport re = make("ft_comparison", "EHA", "e-side,|lambda|<=" + str(N - 1) + ",m in [" + str(-g) + "," + str(g) + "]");
  RelationReport rf = make("ft_comparison", "EHA", "f-side,|mu|<=" + str(N) + ",m in [" + str(-g) + "," + str(g) + "]");
  re.note = "s=" + std::string(sc.s > 0 ? "+1" : "-1");
  rf.note = "s'=" + std::string(sc.s_prime > 0 ? "+1" : "-1");
  const S es = rep.lift(RatFunc(sc.s) * (1 - Q()) * (1 - T()));
  const S fs = rep.lift(RatFunc(sc.s_prime));
  for (int m = -g; m <= g; ++m) {
    for (const auto& lam : partitions_up_to(N - 1)) {
      ++re.domain_size;
      const Vect<S> v(State::level0(lam));
      const auto a = rep.act(Expr(e_word(m)), v);
      const auto b = ft_e_act(rep, m, v) * es;
      if (!(a == b)) fail(re, "m=" + str(m) + " I_" + lam.to_string(), a.to_string(), b.to_string());
    }
    for (const auto& mu : partitions_up_to(N)) {
      ++rf.domain_size;
      const Vect<S> v(State::level0(mu));
      const auto a = rep.act(Expr(f_word(m)), v);
      const auto b = ft_f_act(rep, m, v) * fs;
      if (!(a == b)) fail(rf, "m=" + str(m) + " I_" + mu.to_string(), a.to_string(), b.to_string());
    }
  }
  return {re, rf};
}

// psi^+-_j on I_lambda: j >= 0 reads psi+_j, j <= 0 reads psi-_j (coefficient of z^-j).
struct PsiTable {
  int order;
  std::map<Partition, std::pair<Series, Series>> cache;
  const Series& get(PsiSign s, const Partition& lam) {
    auto it = cache.find(lam);
    if (it == cache.end())
      it = cache.emplace(lam, std::make_pair(psi_coeffs(PsiSign::Plus, lam, order), psi_coeffs(PsiSign::Minus, lam, order)))
               .first;
    return s == PsiSign::Plus ? it->second.first : it->second.second;
  }
};

template <class F>
std::vector<RelationReport> ef_commutator_impl(Checker& ch, PolyRep<F>& rep) {
  using S = typename F::Scalar;
  const SignConstants sc = discover_signs();
  const int N = ch.config().policy.max_boxes;
  const int g = ch.config().grid;
  PsiTable psi{2 * g, {}};
  const RatFunc pre = RatFunc(sc.s * sc.s_prime) * (1 - (Q() * T()).inv()).inv();
  std::vector<RelationReport> out;
  for (int n = -g; n <= g; ++n)
    for (int m = -g; m <= g; ++m) {
      RelationReport r = make("ef_commutator", "DB0", "n=" + str(n) + ",m=" + str(m));
      r.note = "s*s'=" + std::string(sc.s * sc.s_prime > 0 ? "+1" : "-1");
      const Expr lhs = commutator(Expr(e_word(n)), Expr(f_word(m)));
      for (const auto& lam : partitions_up_to(N - 1)) {
        ++r.domain_size;
        const State st = State::level0(lam);
        const auto a = rep.act(lhs, Vect<S>(st));
        RatFunc d;
        const int j = n + m;
        if (j >= 0) d += psi.get(PsiSign::Plus, lam)[j];
        if (j <= 0) d -= psi.get(PsiSign::Minus, lam)[-j];
        const Vect<S> b(st, rep.lift(pre * d));
        if (!(a == b)) fail(r, st.to_string(), a.to_string(), b.to_string());
      }
      out.push_back(r);
    }
  return out;
}

// G(z,w) psi(z) X(w) = -G(w,z) X(w) psi(z) coefficient-wise, X = e (G = g) or f (G = g swapped).
template <class F>
std::vector<RelationReport> psi_x_impl(Checker& ch, PolyRep<F>& rep, bool f_side) {
  using S = typename F::Scalar;
  const int N = ch.config().policy.max_boxes;
  const int g = ch.config().grid;
  const int order = ch.config().series_order - 1;
  PsiTable psi{order, {}};
  const BivarPoly G = f_side ? g_poly().swapped() : g_poly();
  std::vector<RelationReport> out;
  for (PsiSign sign : {PsiSign::Plus, PsiSign::Minus}) {
    RelationReport r = make(f_side ? "psi_f" : "psi_e", "EHA",
                            std::string(sign == PsiSign::Plus ? "psi+" : "psi-") + ",order=" + str(order) +
                                ",w-window=[" + str(-g) + "," + str(g) + "]");
    const int maxbox = f_side ? N : N - 1;
    for (const auto& lam : partitions_up_to(maxbox)) {
      const State st = State::level0(lam);
      std::map<int, Vect<S>> xv;
      auto X = [&](int b) -> const Vect<S>& {
        auto it = xv.find(b);
        if (it == xv.end())
          it = xv.emplace(b, rep.act(Expr(f_side ? f_word(b) : e_word(b)), Vect<S>(st))).first;
        return it->second;
      };
      auto psi_apply = [&](int a, const Vect<S>& v) {
        Vect<S> o;
        for (const auto& [s, c] : v) o.add(s, c * rep.lift(psi.get(sign, s.lambda)[a]));
        return o;
      };
      for (int A = 0; A <= order; ++A)
        for (int B = -g; B <= g; ++B) {
          ++r.domain_size;
          Vect<S> lhs, rhs;
          for (const auto& [k, c] : G.coeffs()) {
            const int i = k.first, j = k.second;
            const int al = sign == PsiSign::Plus ? i - 3 + A : A - i;
            const int ar = sign == PsiSign::Plus ? j - 3 + A : A - j;
            if (al >= 0 && al <= order) lhs.add_scaled(psi_apply(al, X(B + j)), rep.lift(c));
            if (ar >= 0 && ar <= order)
              rhs.add_scaled(X(B + i), rep.lift(-c * psi.get(sign, lam)[ar]));
          }
          if (!(lhs == rhs))
            fail(r, "I_" + lam.to_string() + " A=" + str(A) + " B=" + str(B), lhs.to_string(), rhs.to_string());
        }
    }
    out.push_back(r);
  }
  return out;
}

template <class Fn>
std::vector<RelationReport> with_field(Checker& ch, Fn fn) {
  if (ch.config().fast) {
    PolyRep<PointField> rep(PointField{ch.config().q0, ch.config().t0}, ch.config().policy);
    try {
      return fn(rep);
    } catch (const PoleError&) {
    }
  }
  PolyRep<ExactField> rep(ExactField{}, ch.config().policy);
  return fn(rep);
}

std::vector<RelationReport> alpha_beta_decomposition(Checker& ch) {
  const int g = ch.config().grid;
  RelationReport r = make("alpha_beta_decomposition", "lemma", "m1,m2 in [" + str(-g) + "," + str(g) + "]");
  const BivarPoly l1 = BivarPoly::monomial(1, 0, Q().inv()) - BivarPoly::monomial(0, 1, T());
  const BivarPoly l2 = BivarPoly::monomial(1, 0) - BivarPoly::monomial(0, 1, Q());
  for (int m1 = -g; m1 <= g; ++m1)
    for (int m2 = -g; m2 <= g; ++m2) {
      ++r.domain_size;
      const auto [alpha, beta] = alpha_beta(m1, m2);
      const BivarPoly lhs = BivarPoly::monomial(m1, m2);
      const BivarPoly rhs = l1 * alpha + l2 * beta;
      const std::string w = "m1=" + str(m1) + ",m2=" + str(m2);
      if (!(lhs == rhs)) fail(r, w, lhs.to_string("z1", "z2"), rhs.to_string("z1", "z2"));
      if (!(beta == beta.swapped())) fail(r, w + " (beta not symmetric)", beta.to_string("z1", "z2"), "");
    }
  return {r};
}

// Deterministic draw in [0, n).
struct Draw {
  std::mt19937_64 rng;
  explicit Draw(std::uint64_t seed) : rng(seed) {}
  int operator()(int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }
};

// Random word of 1_0 B 1_k: built left to right from level 0, k <= max_source.
std::optional<Word> random_b_word(Draw& d, int max_len, int max_source, int K) {
  const int len = 1 + d(max_len);
  std::vector<Letter> ls;
  int l = 0;
  for (int j = 0; j < len; ++j) {
    std::vector<Letter> opts;
    if (l + 1 <= K) opts.push_back(Letter::dminus());
    if (l >= 1) opts.push_back(Letter::dplus());
    if (l >= 1 && l + 1 <= K) opts.push_back(Letter::phi());
    if (l >= 1) {
      int a = d(5) - 2;
      if (a == 0) a = 1;
      opts.push_back(Letter::z(1 + d(l), a));
    }
    if (l >= 2) {
      const int i = 1 + d(l - 1);
      opts.push_back(d(2) ? Letter::T(i) : Letter::Tinv(i));
    }
    const Letter x = opts[d(static_cast<int>(opts.size()))];
    ls.push_back(x);
    l -= x.level_change();
  }
  if (l > max_source) return std::nullopt;
  return Word(std::move(ls), l);
}

std::vector<RelationReport> rewriter_soundness(Checker& ch) {
  const auto& c = ch.config();
  RelationReport r = make("rewriter_soundness", "rewriter", "");
  Draw d(c.seed);
  int words = 0;
  long calls = 0, violations = 0;
  while (words < c.random_words) {
    auto w = random_b_word(d, 6, 2, c.policy.max_level);
    if (!w) continue;
    ++words;
    SpecialRewriter rw;
    NormalForm nf;
    try {
      nf = rw.to_special(*w);
    } catch (const std::exception& e) {
      fail(r, w->to_string(), std::string("error: ") + e.what(), "");
      continue;
    }
    calls += rw.stats().lemma_calls;
    violations += rw.stats().measure_violations;
    const RelationReport one = ch.check_identity("rewriter_soundness", "rewriter", w->to_string(), Expr(*w),
                                                 to_expr(nf, w->source));
    r.domain_size += one.domain_size;
    if (one.status == Status::Fail) fail(r, w->to_string() + " at " + one.witness, one.lhs, one.rhs);
  }
  r.params = str(words) + " words,seed=" + std::to_string(c.seed);
  r.note = "lemma calls " + std::to_string(calls) + ", measure violations " + std::to_string(violations);
  if (violations > 0) fail(r, "induction measure", std::to_string(violations) + " violations", "0");
  return {r};
}

std::vector<RelationReport> hecke_normalize_soundness(Checker& ch) {
  const auto& c = ch.config();
  RelationReport r = make("hecke_normalize_soundness", "rewriter", "");
  Draw d(c.seed + 1);
  int words = 0;
  for (; words < 50; ++words) {
    const int k = 2 + d(std::max(1, c.policy.max_level - 1));
    const int L = d(2) ? k : -k;
    std::vector<Letter> ls;
    const int len = 1 + d(5);
    for (int j = 0; j < len; ++j) {
      if (d(2)) {
        int a = d(5) - 2;
        if (a == 0) a = -1;
        ls.push_back(Letter::z(1 + d(k), a));
      } else {
        const int i = 1 + d(k - 1);
        ls.push_back(d(2) ? Letter::T(i) : Letter::Tinv(i));
      }
    }
    const Word w(ls, L);
    const Expr n = hecke_normalize(Expr(w));
    const RelationReport one = ch.check_identity(r.id, r.family, w.to_string(), Expr(w), n);
    r.domain_size += one.domain_size;
    if (one.status == Status::Fail) fail(r, w.to_string() + " at " + one.witness, one.lhs, one.rhs);
    if (!(hecke_normalize(n) == n)) fail(r, w.to_string() + " (not idempotent)", n.to_string(), "");
  }
  r.params = str(words) + " words,seed=" + std::to_string(c.seed + 1);
  return {r};
}

std::vector<RelationReport> theta_ef(Checker& ch) {
  std::vector<RelationReport> out;
  for (int m = -ch.config().grid; m <= ch.config().grid; ++m) {
    const ThetaImage th = theta(e_word(m));
    RelationReport r = ch.check_identity("theta_ef", "theta", "m=" + str(m), th.expr, Expr(f_word(m)));
    if (th.half != 0) fail(r, "scalar", "half power of q", "1");
    if (!(th.expr == Expr(f_word(m)))) fail(r, "word image", th.expr.to_string(), Expr(f_word(m)).to_string());
    out.push_back(r);
  }
  return out;
}

std::vector<RelationReport> theta_involution(Checker& ch) {
  const auto& c = ch.config();
  RelationReport r = make("theta_involution", "theta", "");
  Draw d(c.seed + 2);
  const int K = c.policy.max_level;
  int words = 0;
  while (words < 100) {
    // random walk over all letters on both towers
    int l = d(2 * K + 1) - K;
    const int source = l;
    std::vector<Letter> rev;
    const int len = 1 + d(5);
    for (int j = 0; j < len; ++j) {
      const int k = std::abs(l);
      std::vector<Letter> opts;
      if (l + 1 <= K) opts.push_back(Letter::dplus());
      if (l - 1 >= -K) opts.push_back(Letter::dminus());
      if (l + 1 <= K && l - 1 >= -K) opts.push_back(Letter::phi());
      if (k >= 1) opts.push_back(Letter::z(1 + d(k), d(2) ? 1 : -1));
      if (k >= 2) opts.push_back(d(2) ? Letter::T(1 + d(k - 1)) : Letter::Tinv(1 + d(k - 1)));
      opts.push_back(d(2) ? Letter::delta(1 + d(2)) : Letter::delta_star(1 + d(2)));
      const Letter x = opts[d(static_cast<int>(opts.size()))];
      rev.push_back(x);
      l += x.level_change();
    }
    const Word w(std::vector<Letter>(rev.rbegin(), rev.rend()), source);
    ++words;
    const ThetaImage a = theta(w);
    const ThetaImage b = theta(a.expr);
    const int half = a.half + b.half;
    if (half % 2 != 0) {
      fail(r, w.to_string(), "odd total half power", "");
      continue;
    }
    const Expr back = b.expr * Q().pow(half / 2);
    const RelationReport one = ch.check_identity(r.id, r.family, w.to_string(), back, Expr(w));
    r.domain_size += one.domain_size;
    if (one.status == Status::Fail) fail(r, w.to_string() + " at " + one.witness, one.lhs, one.rhs);
  }
  r.params = str(words) + " words,seed=" + std::to_string(c.seed + 2);
  return {r};
}

std::vector<RelationReport> theta_transport(Checker& ch) {
  std::vector<RelationReport> out;
  for (const auto& rel : registry()) {
    if (rel.info.family != "DB+" || !rel.gen) continue;
    for (const auto& in : rel.gen(ch.config())) {
      if (!fits(in, ch.config().policy.max_level)) continue;
      const ThetaImage a = theta(in.lhs), b = theta(in.rhs);
      const std::string id = "theta:" + rel.info.id;
      if (a.half != b.half && !(a.expr.is_zero() && b.expr.is_zero())) {
        RelationReport r = make(id, "theta", in.params);
        fail(r, "scalar", "half power " + str(a.half), "half power " + str(b.half));
        out.push_back(r);
        continue;
      }
      out.push_back(ch.check_identity(id, "theta", in.params, a.expr, b.expr));
    }
  }
  return out;
}

Relation G(std::string id, std::string family, std::string statement, std::function<Instances(const CheckConfig&)> gen) {
  return Relation{{std::move(id), std::move(family), std::move(statement)}, std::move(gen), nullptr};
}
Relation C(std::string id, std::string family, std::string statement,
           std::function<std::vector<RelationReport>(Checker&)> fn) {
  return Relation{{std::move(id), std::move(family), std::move(statement)}, nullptr, std::move(fn)};
}

std::vector<Relation> build_registry() {
  using Cfg = const CheckConfig&;
  std::vector<Relation> r;
  // coefficients
  r.push_back(C("coefficient_forms", "coefficients", "c and c* agree in both forms; c/c* closed form", coefficient_forms));
  r.push_back(C("monodromy", "coefficients", "monodromy and dual monodromy identities", monodromy_checks));
  // plus tower
  r.push_back(G("hecke_quadratic+", "DB+", "(T_i - 1)(T_i + q) = 0", [](Cfg c) { return hecke_quadratic(c, 1); }));
  r.push_back(G("hecke_inverse+", "DB+", "T_i T_i^-1 = T_i^-1 T_i = 1", [](Cfg c) { return hecke_inverse(c, 1); }));
  r.push_back(G("hecke_braid+", "DB+", "T_i T_i+1 T_i = T_i+1 T_i T_i+1", [](Cfg c) { return hecke_braid(c, 1); }));
  r.push_back(G("hecke_far+", "DB+", "T_i T_j = T_j T_i for |i-j| > 1", [](Cfg c) { return hecke_far(c, 1); }));
  r.push_back(G("bernstein+", "DB+", "T_i^-1 z_i+1 T_i^-1 = q^-1 z_i", [](Cfg c) { return bernstein(c, 1); }));
  r.push_back(G("z_T_commute+", "DB+", "z_j T_i = T_i z_j for j != i, i+1", [](Cfg c) { return z_T_commute(c, 1); }));
  r.push_back(G("z_z_commute+", "DB+", "z_i z_j = z_j z_i", [](Cfg c) { return z_z_commute(c, 1); }));
  r.push_back(G("dminus2_T+", "DB+", "d-^2 T_k-1 = d-^2", dminus2_T_plus));
  r.push_back(G("dminus_T+", "DB+", "d- T_i = T_i d- (i <= k-2)", dminus_T_plus));
  r.push_back(G("T_dplus2+", "DB+", "T_1 d+^2 = d+^2", T_dplus2_plus));
  r.push_back(G("dplus_T+", "DB+", "d+ T_i = T_i+1 d+", dplus_T_plus));
  r.push_back(G("phi_dminus+", "DB+", "q phi d- = d- phi T_k-1", phi_dminus_plus));
  r.push_back(G("T_phi_dplus+", "DB+", "T_1 phi d+ = q d+ phi", T_phi_dplus_plus));
  r.push_back(G("z_dminus+", "DB+", "z_i d- = d- z_i", z_dminus_plus));
  r.push_back(G("dplus_z+", "DB+", "d+ z_i = z_i+1 d+", dplus_z_plus));
  r.push_back(G("qphi+", "DB+", "z_1(q d+d- - d-d+) = qt(d+d- - d-d+)z_k", qphi_plus));
  r.push_back(G("delta_commute+", "DB+", "Delta, DeltaStar commute with each other, z, T and d-",
                [](Cfg c) { return delta_commute(c, 1); }));
  r.push_back(G("delta_dplus+", "DB+", "[Delta_m, d+] = z_1^m d+", [](Cfg c) { return delta_arrow(c, 1, false); }));
  r.push_back(G("deltastar_dplus+", "DB+", "[DeltaStar_m, d+] = z_1^-m d+", [](Cfg c) { return delta_arrow(c, 1, true); }));
  // minus tower
  r.push_back(G("hecke_quadratic-", "DB-", "(T_i - 1)(T_i + q^-1) = 0", [](Cfg c) { return hecke_quadratic(c, -1); }));
  r.push_back(G("hecke_inverse-", "DB-", "T_i T_i^-1 = T_i^-1 T_i = 1", [](Cfg c) { return hecke_inverse(c, -1); }));
  r.push_back(G("hecke_braid-", "DB-", "T_i T_i+1 T_i = T_i+1 T_i T_i+1", [](Cfg c) { return hecke_braid(c, -1); }));
  r.push_back(G("hecke_far-", "DB-", "T_i T_j = T_j T_i for |i-j| > 1", [](Cfg c) { return hecke_far(c, -1); }));
  r.push_back(G("bernstein-", "DB-", "T_i^-1 z_i+1 T_i^-1 = q z_i", [](Cfg c) { return bernstein(c, -1); }));
  r.push_back(G("z_T_commute-", "DB-", "z_j T_i = T_i z_j for j != i, i+1", [](Cfg c) { return z_T_commute(c, -1); }));
  r.push_back(G("z_z_commute-", "DB-", "z_i z_j = z_j z_i", [](Cfg c) { return z_z_commute(c, -1); }));
  r.push_back(G("dplus2_T-", "DB-", "d+^2 T_|k|-1 = d+^2", dplus2_T_minus));
  r.push_back(G("dplus_T-", "DB-", "d+ T_i = T_i d+ (i <= |k|-2)", dplus_T_minus));
  r.push_back(G("T_dminus2-", "DB-", "T_1 d-^2 = d-^2", T_dminus2_minus));
  r.push_back(G("dminus_T-", "DB-", "d- T_i = T_i+1 d-", dminus_T_minus));
  r.push_back(G("phi_dplus-", "DB-", "q^-1 phi d+ = d+ phi T_|k|-1", phi_dplus_minus));
  r.push_back(G("T_phi_dminus-", "DB-", "T_1 phi d- = q^-1 d- phi", T_phi_dminus_minus));
  r.push_back(G("z_dplus-", "DB-", "z_i d+ = d+ z_i", z_dplus_minus));
  r.push_back(G("dminus_z-", "DB-", "d- z_i = z_i+1 d-", dminus_z_minus));
  r.push_back(G("qphi-", "DB-", "z_1(q^-1 d-d+ - d+d-) = q^-1 t^-1 (d-d+ - d+d-) z_|k|", qphi_minus));
  r.push_back(G("delta_commute-", "DB-", "Delta, DeltaStar commute with each other, z, T and d+",
                [](Cfg c) { return delta_commute(c, -1); }));
  r.push_back(G("delta_dminus-", "DB-", "[Delta_m, d-] = -z_1^m d-", [](Cfg c) { return delta_arrow(c, -1, false); }));
  r.push_back(G("deltastar_dminus-", "DB-", "[DeltaStar_m, d-] = -z_1^-m d-", [](Cfg c) { return delta_arrow(c, -1, true); }));
  // level 0
  r.push_back(C("ef_commutator", "DB0", "[e_n, f_m] = s s' (1 - q^-1 t^-1)^-1 (psi+_n+m - psi-_n+m)",
                [](Checker& ch) { return with_field(ch, [&](auto& rep) { return ef_commutator_impl(ch, rep); }); }));
  r.push_back(C("psi_dual_method", "DB0", "psi from the product formula equals psi from Delta eigenvalues", psi_dual));
  r.push_back(C("psi0_invertible", "DB0", "psi+-_0 is invertible on every I_lambda", psi0_invertible));
  r.push_back(C("exp_identity", "DB0", "exp[-sum u^m K_m / m] = -g(u,1)/g(1,u)", exp_identity));
  // spherical relations
  r.push_back(G("quadratic_e", "EHA", "g(z,w) e(z)e(w) = -g(w,z) e(w)e(z), 8-term form",
                [](Cfg c) { return quadratic_family(c, false); }));
  r.push_back(G("quadratic_f", "EHA", "g(w,z) f(z)f(w) = -g(z,w) f(w)f(z), 8-term form",
                [](Cfg c) { return quadratic_family(c, true); }));
  r.push_back(G("cubic_e", "EHA", "[e_0, [e_1, e_-1]] = 0",
                [](Cfg) { return Instances{{"-", commutator(E(0), commutator(E(1), E(-1))), zero(0, 0)}}; }));
  r.push_back(G("cubic_f", "EHA", "[f_0, [f_1, f_-1]] = 0",
                [](Cfg) { return Instances{{"-", commutator(F(0), commutator(F(1), F(-1))), zero(0, 0)}}; }));
  r.push_back(G("cubic_e_rewritten", "EHA", "d-^2 d+^2 d- d+ = d- d+ d-^2 d+^2",
                [](Cfg) { return Instances{{"-", W("d- d- d+ d+ d- d+", 0), W("d- d+ d- d- d+ d+", 0)}}; }));
  r.push_back(G("Y00_example", "EHA", "d-^2 d+^2 = (1-t^2)/((t+q^-1)(1-t)) e_0^2 + t/((t+q^-1)(1-t)) [e_1, e_-1]",
                [](Cfg) {
                  const RatFunc D = ((T() + Q().inv()) * (1 - T())).inv();
                  Expr rhs = E(0) * E(0) * ((1 - T() * T()) * D) + commutator(E(1), E(-1)) * (T() * D);
                  return Instances{{"-", W("d- d- d+ d+", 0), rhs}};
                }));
  r.push_back(G("Y_degree2", "EHA", "Y_0,0 = (q-1)^-1 (e_0^2 - d-^2 d+^2)", [](Cfg) {
    return Instances{{"-", Y({0, 0}), (E(0) * E(0) - W("d- d- d+ d+", 0)) * (Q() - 1).inv()}};
  }));
  r.push_back(G("delta_e", "EHA", "[Delta_m, e_k] = e_k+m", [](Cfg c) { return delta_e_family(c, false, false); }));
  r.push_back(G("deltastar_e", "EHA", "[DeltaStar_m, e_k] = e_k-m", [](Cfg c) { return delta_e_family(c, false, true); }));
  r.push_back(G("delta_f", "EHA", "[Delta_m, f_k] = -f_k+m", [](Cfg c) { return delta_e_family(c, true, false); }));
  r.push_back(G("deltastar_f", "EHA", "[DeltaStar_m, f_k] = -f_k-m", [](Cfg c) { return delta_e_family(c, true, true); }));
  r.push_back(C("psi_e", "EHA", "g(z,w) psi(z) e(w) = -g(w,z) e(w) psi(z)",
                [](Checker& ch) { return with_field(ch, [&](auto& rep) { return psi_x_impl(ch, rep, false); }); }));
  r.push_back(C("psi_f", "EHA", "g(w,z) psi(z) f(w) = -g(z,w) f(w) psi(z)",
                [](Checker& ch) { return with_field(ch, [&](auto& rep) { return psi_x_impl(ch, rep, true); }); }));
  r.push_back(C("ft_comparison", "EHA", "e_m = s(1-q)(1-t) e~_m and f_m = s' f~_m",
                [](Checker& ch) { return with_field(ch, [&](auto& rep) { return ft_comparison_impl(ch, rep); }); }));
  // Y elements
  r.push_back(G("Y_relation_1", "Y", "Y_..mi,mi+1.. - qt Y_..mi-1,mi+1+1.. = -Y_m1..mi Y_mi+1..mn", y_relation_1));
  r.push_back(G("Y_relation_2", "Y", "[e_k, Y_m] = (t-1)(q-1) sum of shifted Y", y_relation_2));
  r.push_back(G("e1_em1_Y", "Y", "[e_1, e_-1] = (q-1)(t-1)(Y_0,0 + Y_-1,1)", [](Cfg) {
    return Instances{{"-", commutator(E(1), E(-1)), (Y({0, 0}) + Y({-1, 1})) * ((Q() - 1) * (T() - 1))}};
  }));
  // lemmas
  r.push_back(G("level2_zero", "lemma", "d-^2 (z1 - q z2) a d+^2 = 0 for symmetric a", level2_zero));
  r.push_back(G("ee_to_level2", "lemma", "e_k+1 e_m - t e_k e_m+1 = d-^2 (q^-1 z1 - t z2) z1^k z2^m d+^2", ee_to_level2));
  r.push_back(C("alpha_beta_decomposition", "lemma", "z1^m1 z2^m2 = (q^-1 z1 - t z2) alpha + (z1 - q z2) beta",
                alpha_beta_decomposition));
  r.push_back(G("alpha_beta_operator", "lemma", "d-^2 z1^m1 z2^m2 d+^2 = d-^2 (q^-1 z1 - t z2) alpha d+^2",
                alpha_beta_operator));
  r.push_back(G("phi_commute_z", "lemma", "z_i phi = phi z_i-1", phi_commute_z));
  r.push_back(G("phi_commute_T", "lemma", "T_i phi = phi T_i-1", phi_commute_T));
  r.push_back(G("phi2_T", "lemma", "phi^2 T_k-1 = T_1 phi^2", phi2_T));
  r.push_back(G("z_through_Tinv", "lemma", "z1^a T1^-1 and z2^a T1^-1 pushed through", z_through_Tinv));
  r.push_back(G("push_T_left", "lemma", "phi d- T1^-1 z1^k d+ = d- T1^-1 z1^k d+ phi + q^-1(1-q) d- h_k-1 z1 d+ phi",
                push_T_left));
  r.push_back(G("push_T_left_corollary", "lemma", "z1^m phi [d- T1^-1 z1^k d+] rewritten", push_T_left_corollary));
  r.push_back(G("A_relation_1", "lemma", "A_m,0 - qt A_..mi-1,1 = -A_m d+ d-", a_relation_1));
  r.push_back(G("A_relation_2", "lemma", "A_..,0 [d- (z1z2)^k h z1 d+] in terms of A", a_relation_2));
  r.push_back(G("Di_to_Y", "lemma", "D_i in terms of Y", di_to_y));
  r.push_back(G("right_end", "lemma", "z1^m d+ d- z1^k d+ rewritten", right_end));
  // anti-involution and rewriting
  r.push_back(C("theta_ef", "theta", "Theta(e_m) = f_m with scalar 1", theta_ef));
  r.push_back(C("theta_transport", "theta", "Theta maps each plus-tower relation to a minus-tower identity",
                theta_transport));
  r.push_back(C("theta_involution", "theta", "Theta^2 = id on random words", theta_involution));
  r.push_back(C("rewriter_soundness", "rewriter", "to_special(w) = w on the oracle", rewriter_soundness));
  r.push_back(C("hecke_normalize_soundness", "rewriter", "hecke_normalize(w) = w on the oracle, idempotent",
                hecke_normalize_soundness));
  return r;
}

}  // namespace

}  // namespace hallpath
