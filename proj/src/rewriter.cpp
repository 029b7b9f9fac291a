#include "hallpath/rewriter.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "hallpath/eha.hpp"
#include "hallpath/errors.hpp"

namespace hallpath {

namespace {

const RatFunc& Q() {
  static const RatFunc v = RatFunc::q();
  return v;
}

using ZTerms = std::map<std::vector<int>, RatFunc>;

void add_to(ZTerms& m, const std::vector<int>& k, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, ins] = m.emplace(k, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

void add_to(NormalForm& nf, const NormalTerm& t, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, ins] = nf.emplace(t, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) nf.erase(it);
  }
}

NormalForm scaled(const NormalForm& nf, const RatFunc& c) {
  NormalForm out;
  for (const auto& [t, x] : nf) add_to(out, t, x * c);
  return out;
}

void add_all(NormalForm& out, const NormalForm& nf, const RatFunc& c = RatFunc(1)) {
  for (const auto& [t, x] : nf) add_to(out, t, x * c);
}

NormalForm single(const SpecialWord& s, const RatFunc& c = RatFunc(1)) {
  NormalForm nf;
  add_to(nf, NormalTerm{{}, s}, c);
  return nf;
}

SpecialWord append_dminus(SpecialWord s) {
  s.steps.push_back({LetterKind::Dminus, 0});
  s.tail.push_back(0);
  return s;
}

SpecialWord append_phi(SpecialWord s) {
  if (s.tail.empty()) throw UnsupportedScope("phi at level 0 passes through the minus tower");
  s.steps.push_back({LetterKind::Phi, s.tail[0]});
  s.tail.erase(s.tail.begin());
  s.tail.push_back(0);
  return s;
}

SpecialWord append_z(SpecialWord s, const std::vector<int>& exps) {
  for (size_t j = 0; j < exps.size(); ++j) s.tail[j] += exps[j];
  return s;
}

SpecialWord with_tail(SpecialWord s, std::vector<int> tail) {
  s.tail = std::move(tail);
  return s;
}

// Drops the last d- or phi; the remaining word gets a zero tail at its own level.
SpecialWord drop_last(const SpecialWord& s) {
  SpecialWord b;
  b.steps.assign(s.steps.begin(), s.steps.end() - 1);
  const int k = s.steps.back().kind == LetterKind::Dminus ? s.level() - 1 : s.level();
  b.tail.assign(k, 0);
  return b;
}

NormalForm append_dminus_all(const NormalForm& nf) {
  NormalForm out;
  for (const auto& [t, c] : nf)
    add_to(out, NormalTerm{t.ys, t.tail ? append_dminus(*t.tail) : SpecialWord{{{LetterKind::Dminus, 0}}, {0}}}, c);
  return out;
}

template <class Fn>
NormalForm map_tails(const NormalForm& nf, Fn fn) {
  NormalForm out;
  for (const auto& [t, c] : nf) {
    if (!t.tail) throw ConsistencyError("expected a special tail");
    NormalTerm n{t.ys, fn(*t.tail)};
    add_to(out, n, c);
  }
  return out;
}

// Lexicographically least reduced word of a permutation in one-line notation.
std::vector<int> reduced_word(std::vector<int> w) {
  std::vector<int> out;
  for (;;) {
    std::vector<int> pos(w.size());
    for (size_t j = 0; j < w.size(); ++j) pos[w[j]] = static_cast<int>(j);
    int i = -1;
    for (size_t v = 0; v + 1 < w.size(); ++v)
      if (pos[v] > pos[v + 1]) {
        i = static_cast<int>(v);
        break;
      }
    if (i < 0) return out;
    out.push_back(i + 1);
    std::swap(w[pos[i]], w[pos[i + 1]]);
  }
}

}  // namespace

RatFunc hecke_parameter(int level) { return level >= 0 ? Q() : Q().inv(); }

PushedThroughT push_monomial_through_T(const std::vector<int>& exps, int i, bool inverse, const RatFunc& p) {
  if (i < 1 || i >= static_cast<int>(exps.size())) throw LevelError("T" + std::to_string(i) + " out of range");
  PushedThroughT r;
  r.swapped = exps;
  std::swap(r.swapped[i - 1], r.swapped[i]);
  const int a = exps[i - 1], b = exps[i];
  ZTerms D;
  auto put = [&](const BivarPoly& h, int shift, const RatFunc& sign) {
    for (const auto& [key, c] : h.coeffs()) {
      std::vector<int> e = exps;
      e[i - 1] = key.first + shift;
      e[i] = key.second;
      add_to(D, e, c * sign);
    }
  };
  put(h_poly(b - 1), a + 1, RatFunc(1));
  put(h_poly(a - 1), b + 1, RatFunc(-1));
  if (inverse) {
    const RatFunc c = p.inv() * (1 - p);
    for (const auto& [e, x] : D) add_to(r.rest, e, x * c);
  } else {
    const RatFunc c = 1 - p;
    for (const auto& [e, x] : D) add_to(r.rest, e, x * c);
    add_to(r.rest, exps, c);
    add_to(r.rest, r.swapped, -c);
  }
  return r;
}

std::vector<RewriteRule> push_z_through_Tinv(int level, int i, int a) {
  const int k = std::abs(level);
  if (i < 1 || i > k - 1) throw LevelError("T" + std::to_string(i) + " does not exist at level " + std::to_string(level));
  const RatFunc p = hecke_parameter(level);
  std::vector<RewriteRule> rules;
  for (int slot : {i, i + 1}) {
    std::vector<int> exps(k, 0);
    exps[slot - 1] = a;
    Word lhs = z_monomial(exps, level);
    lhs.letters.push_back(Letter::Tinv(i));
    const auto pushed = push_monomial_through_T(exps, i, true, p);
    Word lead = z_monomial(pushed.swapped, level);
    lead.letters.insert(lead.letters.begin(), Letter::Tinv(i));
    Expr rhs(lead);
    for (const auto& [e, c] : pushed.rest) rhs.add(z_monomial(e, level), c);
    rules.push_back({Expr(lhs), rhs});
  }
  return rules;
}

Expr hecke_normalize(const Expr& e) {
  const int level = e.source();
  if (e.target() != level) throw InvalidInput("hecke_normalize needs a loop at one level");
  const int k = std::abs(level);
  const RatFunc p = hecke_parameter(level);
  using Key = std::pair<std::vector<int>, std::vector<int>>;  // (permutation, z exponents)
  std::map<Key, RatFunc> total;
  auto add = [](std::map<Key, RatFunc>& m, const Key& key, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, ins] = m.emplace(key, c);
    if (!ins) {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  };
  std::vector<int> id(k);
  std::iota(id.begin(), id.end(), 0);
  for (const auto& [w, coef] : e.terms()) {
    std::map<Key, RatFunc> cur;
    cur.emplace(Key{id, std::vector<int>(k, 0)}, coef);
    for (const auto& x : w.letters) {
      std::map<Key, RatFunc> next;
      if (x.kind == LetterKind::Z) {
        for (const auto& [k0, c] : cur) {
          Key key = k0;
          key.second[x.index - 1] += x.exp;
          add(next, key, c);
        }
      } else if (x.kind == LetterKind::T || x.kind == LetterKind::Tinv) {
        const int i = x.index;
        const bool inv = x.kind == LetterKind::Tinv;
        for (const auto& [key, c] : cur) {
          const auto pushed = push_monomial_through_T(key.second, i, inv, p);
          for (const auto& [ze, zc] : pushed.rest) add(next, Key{key.first, ze}, c * zc);
          std::vector<int> ws = key.first;
          std::swap(ws[i - 1], ws[i]);
          const bool up = key.first[i - 1] < key.first[i];
          if (!inv) {
            if (up) {
              add(next, Key{ws, pushed.swapped}, c);
            } else {
              add(next, Key{key.first, pushed.swapped}, c * (1 - p));
              add(next, Key{ws, pushed.swapped}, c * p);
            }
          } else {
            if (!up) {
              add(next, Key{ws, pushed.swapped}, c);
            } else {
              add(next, Key{ws, pushed.swapped}, c * p.inv());
              add(next, Key{key.first, pushed.swapped}, -c * p.inv() * (1 - p));
            }
          }
        }
      } else {
        throw InvalidInput("hecke_normalize accepts only z and T letters, got " + x.to_string());
      }
      cur = std::move(next);
    }
    for (const auto& [key, c] : cur) add(total, key, c);
  }
  Expr out(level, level);
  for (const auto& [key, c] : total) {
    Word w = z_monomial(key.second, level);
    std::vector<Letter> ts;
    for (int i : reduced_word(key.first)) ts.push_back(Letter::T(i));
    w.letters.insert(w.letters.begin(), ts.begin(), ts.end());
    out.add(w, c);
  }
  return out;
}

Word SpecialWord::to_word() const {
  std::vector<Letter> ls;
  for (const auto& s : steps) {
    if (s.z1 != 0) ls.push_back(Letter::z(1, s.z1));
    ls.push_back(s.kind == LetterKind::Dminus ? Letter::dminus() : Letter::phi());
  }
  for (size_t j = 0; j < tail.size(); ++j)
    if (tail[j] != 0) ls.push_back(Letter::z(static_cast<int>(j) + 1, tail[j]));
  return Word(std::move(ls), level());
}

Word NormalTerm::to_word() const {
  Word w({}, 0);
  for (const auto& m : ys) w = compose(w, y_word(m));
  if (tail) w = compose(w, tail->to_word());
  return w;
}

std::string NormalTerm::to_string() const {
  std::string s;
  for (const auto& m : ys) {
    std::string idx;
    for (int x : m) idx += (idx.empty() ? "" : ",") + std::to_string(x);
    s += (s.empty() ? "" : " * ") + std::string("Y[") + idx + "]";
  }
  if (tail) s += (s.empty() ? "" : " * ") + std::string("(") + tail->to_string() + ")";
  return s.empty() ? "1_0" : s;
}

Expr to_expr(const NormalForm& nf, int level) {
  Expr out(level, 0);
  for (const auto& [t, c] : nf) out.add(t.to_word(), c);
  return out;
}

std::string to_string(const NormalForm& nf) {
  if (nf.empty()) return "0";
  std::string s;
  for (const auto& [t, c] : nf) s += (s.empty() ? "" : " + ") + std::string("(") + c.to_string() + ")*" + t.to_string();
  return s;
}

void SpecialRewriter::enter(int measure, int parent) {
  ++stats_.lemma_calls;
  if (parent >= 0 && measure >= parent) ++stats_.measure_violations;
  stats_.max_depth = std::max(stats_.max_depth, depth_);
}

NormalForm SpecialRewriter::special_T(const SpecialWord& s, int i, bool inverse, int parent) {
  enter(s.measure(), parent);
  const auto key = std::make_pair(s, inverse ? -i : i);
  if (auto it = t_memo_.find(key); it != t_memo_.end()) return it->second;
  ++depth_;
  const int k = s.level();
  if (i < 1 || i > k - 1) throw LevelError("T" + std::to_string(i) + " does not exist at level " + std::to_string(k));
  NormalForm out;
  if (inverse) {
    // T^-1 = q^-1 T - q^-1 (1 - q)
    out = scaled(special_T(s, i, false, parent), Q().inv());
    add_to(out, NormalTerm{{}, s}, -Q().inv() * (1 - Q()));
  } else {
    const auto pushed = push_monomial_through_T(s.tail, i, false, Q());
    const SpecialWord s0 = with_tail(s, std::vector<int>(k, 0));
    for (const auto& [e, c] : pushed.rest) add_to(out, NormalTerm{{}, with_tail(s0, e)}, c);
    const auto last = s0.steps.back();
    const SpecialWord b = drop_last(s0);
    const int me = s.measure();
    NormalForm core;
    if (last.kind == LetterKind::Dminus) {
      if (i < k - 1) {
        core = map_tails(special_T(b, i, false, me), append_dminus);
      } else {
        const auto prev = b.steps.back();
        if (prev.kind == LetterKind::Dminus) {
          core = single(s0);
        } else {
          std::vector<int> t(k - 1, 0);
          t[0] = prev.z1;
          const SpecialWord x = with_tail(drop_last(b), t);
          core = single(append_phi(append_dminus(x)));
          add_to(core, NormalTerm{{}, s0}, 1 - Q());
        }
      }
    } else {
      if (i < k - 1) {
        std::vector<int> t(k, 0);
        t[0] = last.z1;
        core = map_tails(special_T(with_tail(b, t), i + 1, false, me), append_phi);
      } else {
        const auto prev = b.steps.back();
        const SpecialWord bb = drop_last(b);
        if (prev.kind == LetterKind::Dminus) {
          std::vector<int> t(k - 1, 0);
          t[0] = last.z1;
          core = single(append_dminus(append_phi(with_tail(bb, t))), Q());
        } else {
          std::vector<int> t(k, 0);
          t[0] = prev.z1;
          t[1] = last.z1;
          core = map_tails(special_T(with_tail(bb, t), 1, false, me),
                           [](const SpecialWord& w) { return append_phi(append_phi(w)); });
        }
      }
    }
    add_all(out, map_tails(core, [&](const SpecialWord& w) { return append_z(w, pushed.swapped); }));
  }
  --depth_;
  return t_memo_.emplace(key, out).first->second;
}

NormalForm SpecialRewriter::special_dplus(const SpecialWord& s, int parent) {
  enter(s.measure(), parent);
  if (auto it = dplus_memo_.find(s); it != dplus_memo_.end()) return it->second;
  ++depth_;
  const int k = s.level();
  NormalForm out;
  if (k == 1) {
    std::vector<int> m;
    for (size_t j = 1; j < s.steps.size(); ++j) {
      if (s.steps[j].kind != LetterKind::Phi) throw ConsistencyError("special word at level 1 with an inner d-");
      m.push_back(s.steps[j].z1);
    }
    m.push_back(s.tail[0]);
    add_to(out, NormalTerm{{m}, std::nullopt}, RatFunc(1));
  } else {
    const int me = s.measure();
    const int a1 = s.tail[0];
    const std::vector<int> rest(s.tail.begin() + 1, s.tail.end());
    const auto last = s.steps.back();
    const SpecialWord b = drop_last(s);
    NormalForm r;
    if (last.kind == LetterKind::Dminus) {
      std::vector<int> t(k - 1, 0);
      t[0] = a1;
      const SpecialWord b1 = with_tail(b, t);
      // d- d+ = d+ d- - (q - 1) phi
      r = append_dminus_all(special_dplus(b1, me));
      add_to(r, NormalTerm{{}, append_phi(b1)}, -(Q() - 1));
    } else {
      std::vector<int> t(k, 0);
      t[0] = last.z1;
      t[1] = a1;
      // phi d+ = q T1^-1 d+ phi
      const NormalForm tt = special_T(with_tail(b, t), 1, true, me);
      for (const auto& [term, c] : tt) add_all(r, map_tails(special_dplus(*term.tail, me), append_phi), c * Q());
    }
    out = map_tails(r, [&](const SpecialWord& w) { return append_z(w, rest); });
  }
  --depth_;
  return dplus_memo_.emplace(s, out).first->second;
}

NormalForm SpecialRewriter::rmul(const NormalForm& nf, const Letter& x) {
  NormalForm out;
  for (const auto& [term, c] : nf) {
    NormalForm r;
    if (!term.tail) {
      if (x.kind != LetterKind::Dminus)
        throw UnsupportedScope("letter " + x.to_string() + " at level 0 leaves the nonnegative levels");
      r = single(SpecialWord{{{LetterKind::Dminus, 0}}, {0}});
    } else {
      const SpecialWord& s = *term.tail;
      switch (x.kind) {
        case LetterKind::Dminus:
          r = single(append_dminus(s));
          break;
        case LetterKind::Phi:
          r = single(append_phi(s));
          break;
        case LetterKind::Z: {
          std::vector<int> e(s.level(), 0);
          e[x.index - 1] = x.exp;
          r = single(append_z(s, e));
          break;
        }
        case LetterKind::T:
        case LetterKind::Tinv:
          r = special_T(s, x.index, x.kind == LetterKind::Tinv, -1);
          break;
        case LetterKind::Dplus:
          r = special_dplus(s, -1);
          break;
        default:
          throw UnsupportedScope("letter " + x.to_string() + " is outside the rewriter's alphabet");
      }
    }
    for (const auto& [t, cc] : r) {
      NormalTerm n = t;
      n.ys.insert(n.ys.begin(), term.ys.begin(), term.ys.end());
      add_to(out, n, c * cc);
    }
  }
  return out;
}

NormalForm SpecialRewriter::to_special(const Word& w) {
  w.validate();
  if (w.target() != 0) throw UnsupportedScope("word must end at level 0: " + w.to_string());
  const auto [lo, hi] = w.level_range();
  if (lo < 0) throw UnsupportedScope("word visits negative levels: " + w.to_string());
  NormalForm nf;
  add_to(nf, NormalTerm{}, RatFunc(1));
  for (const auto& x : w.letters) nf = rmul(nf, x);
  return nf;
}

NormalForm SpecialRewriter::to_special(const Expr& e) {
  NormalForm out;
  for (const auto& [w, c] : e.terms()) add_all(out, to_special(w), c);
  return out;
}

namespace {

// Image of one letter acting on level l, with the exponent numerator of q^(E/2).
std::pair<Expr, int> theta_letter(const Letter& x, int l) {
  const int k = std::abs(l);
  switch (x.kind) {
    case LetterKind::Dplus:
      return {Expr(Word({Letter::dplus()}, -l - 1)), l >= 0 ? l : l + 1};
    case LetterKind::Dminus:
      return {Expr(Word({Letter::dminus()}, -l + 1)), l > 0 ? l - 1 : l};
    case LetterKind::Phi: {
      const ThetaImage a = theta(Word({Letter::dplus(), Letter::dminus()}, l));
      const ThetaImage b = theta(Word({Letter::dminus(), Letter::dplus()}, l));
      if (a.half || b.half) throw ConsistencyError("phi image carries a half power of q");
      return {(a.expr - b.expr) * (Q() - 1).inv(), 0};
    }
    case LetterKind::Z:
      return {Expr(Word({Letter::z(k + 1 - x.index, x.exp)}, -l)), 0};
    case LetterKind::T:
      return {Expr(Word({Letter::Tinv(k - x.index)}, -l)), 0};
    case LetterKind::Tinv:
      return {Expr(Word({Letter::T(k - x.index)}, -l)), 0};
    case LetterKind::Delta:
    case LetterKind::DeltaStar: {
      Expr e(Word({x}, -l));
      const int p = x.kind == LetterKind::Delta ? x.index : -x.index;
      const RatFunc eps = l >= 0 ? RatFunc(1) : RatFunc(-1);
      for (int i = 1; i <= k; ++i) e.add(Word({Letter::z(i, p)}, -l), eps);
      return {e, 0};
    }
  }
  throw InvalidInput("unknown letter");
}

}  // namespace

ThetaImage theta(const Word& w) {
  w.validate();
  const auto lv = w.source_levels();
  Expr r = Expr::identity(-w.source);
  int E = 0;
  for (size_t j = w.letters.size(); j-- > 0;) {
    auto [img, e] = theta_letter(w.letters[j], lv[j]);
    r = j + 1 == w.letters.size() ? img : r * img;
    E += e;
  }
  const int half = ((E % 2) + 2) % 2;
  ThetaImage out{r * Q().pow((E - half) / 2), half};
  return out;
}

ThetaImage theta(const Expr& e) {
  ThetaImage out{Expr(-e.target(), -e.source()), -1};
  for (const auto& [w, c] : e.terms()) {
    ThetaImage t = theta(w);
    if (out.half >= 0 && t.half != out.half)
      throw InvalidInput("terms of " + e.to_string() + " have different half powers of q under Theta");
    out.half = t.half;
    out.expr += t.expr * c;
  }
  if (out.half < 0) out.half = 0;
  return out;
}

}  // namespace hallpath
