#include "hallpath/polyrep.hpp"

#include "hallpath/errors.hpp"

#include <cstdlib>

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

}  // namespace

template <class F>
PolyRep<F>::PolyRep(F field, TruncationPolicy policy) : field_(std::move(field)), policy_(policy) {}

template <class F>
const RatFunc& PolyRep<F>::c(const Partition& lambda, const BoxPos& x) {
  auto key = std::make_pair(lambda, x);
  auto it = c_cache_.find(key);
  if (it == c_cache_.end()) it = c_cache_.emplace(key, c_lambda_form(lambda, x)).first;
  return it->second;
}

template <class F>
const RatFunc& PolyRep<F>::cstar(const Partition& mu, const BoxPos& x) {
  auto key = std::make_pair(mu, x);
  auto it = cstar_cache_.find(key);
  if (it == cstar_cache_.end()) it = cstar_cache_.emplace(key, cstar_coeff(mu, x)).first;
  return it->second;
}

template <class F>
void PolyRep<F>::check_cap(const State& s) const {
  if (s.total_boxes() > policy_.max_boxes)
    throw TruncationOverflow("state " + s.to_string() + " exceeds the box cap " + std::to_string(policy_.max_boxes));
  if (std::abs(s.level()) > policy_.max_level)
    throw TruncationOverflow("state " + s.to_string() + " exceeds the level cap " + std::to_string(policy_.max_level));
}

template <class F>
typename PolyRep<F>::V PolyRep<F>::act_dplus(const State& s) {
  V out;
  if (s.side == Side::Minus) {
    std::vector<BoxPos> w(s.w.begin(), s.w.end() - 1);
    State n = State::make(Side::Minus, s.lambda.remove(s.w.back()), std::move(w));
    check_cap(n);
    out.add(n, S(1));
    return out;
  }
  const int k = s.k();
  const Partition mu = s.outer();
  for (const auto& x : addable_boxes(mu)) {
    const RatFunc X = content_of(x);
    RatFunc coef = -RatFunc::monomial(k, 0) * c(mu, x);
    bool zero = false;
    for (const auto& wi : s.w) {
      const RatFunc W = content_of(wi);
      const RatFunc num = X - T() * W;
      if (num.is_zero()) {
        zero = true;
        break;
      }
      coef *= num / (X - Q() * T() * W);
    }
    if (zero) continue;
    std::vector<BoxPos> w{x};
    w.insert(w.end(), s.w.begin(), s.w.end());
    State n = State::make(Side::Plus, s.lambda, std::move(w));
    check_cap(n);
    out.add(n, lift(coef));
  }
  return out;
}

template <class F>
typename PolyRep<F>::V PolyRep<F>::act_dminus(const State& s) {
  V out;
  if (s.side == Side::Plus && s.k() > 0) {
    std::vector<BoxPos> w(s.w.begin(), s.w.end() - 1);
    State n = State::make(Side::Plus, s.lambda.add(s.w.back()), std::move(w));
    check_cap(n);
    out.add(n, S(1));
    return out;
  }
  const int k = s.k();
  const Partition mu = s.outer();
  const RatFunc tinv = T().inv(), qtinv = (Q() * T()).inv();
  for (const auto& x : removable_boxes(mu)) {
    const RatFunc X = content_of(x);
    RatFunc coef = -RatFunc::monomial(-k, 0) * cstar(mu, x);
    bool zero = false;
    for (const auto& wi : s.w) {
      const RatFunc W = content_of(wi);
      const RatFunc num = X - tinv * W;
      if (num.is_zero()) {
        zero = true;
        break;
      }
      coef *= num / (X - qtinv * W);
    }
    if (zero) continue;
    std::vector<BoxPos> w{x};
    w.insert(w.end(), s.w.begin(), s.w.end());
    State n = State::make(Side::Minus, s.lambda, std::move(w));
    check_cap(n);
    out.add(n, lift(coef));
  }
  return out;
}

template <class F>
typename PolyRep<F>::V PolyRep<F>::act_T(const State& s, int i, bool inverse) {
  const RatFunc p = s.side == Side::Plus ? Q() : Q().inv();
  const RatFunc Wi = content_of(s.w[i - 1]), Wj = content_of(s.w[i]);
  const RatFunc diag = (p - 1) * Wj / (Wi - Wj);
  const RatFunc off = (Wi - p * Wj) / (Wi - Wj);
  V out;
  if (!inverse) {
    out.add(s, lift(diag));
  } else {
    // T^-1 = p^-1 T + (1 - p^-1)
    const RatFunc pinv = p.inv();
    out.add(s, lift(pinv * diag + 1 - pinv));
  }
  if (!off.is_zero()) {
    State sw = s;
    std::swap(sw.w[i - 1], sw.w[i]);
    if (!is_valid_state(sw)) throw ConsistencyError("T" + std::to_string(i) + " reaches invalid state " + sw.to_string());
    out.add(sw, lift(inverse ? off * p.inv() : off));
  }
  return out;
}

RatFunc delta_eigenvalue(const State& s, int m) {
  LaurentPoly sum;
  for (const auto& b : s.lambda.boxes()) {
    const Exp e = b.content();
    sum += LaurentPoly::monomial(m * e.a, m * e.b);
  }
  const mpq_class sign = s.side == Side::Plus ? 1 : -1;
  for (const auto& b : s.w) {
    const Exp e = b.content();
    sum += LaurentPoly::monomial(m * e.a, m * e.b, sign);
  }
  return RatFunc(sum);
}

template <class F>
typename PolyRep<F>::V PolyRep<F>::compute(const Letter& x, const State& s) {
  const int k = s.k();
  V out;
  switch (x.kind) {
    case LetterKind::Dplus:
      return act_dplus(s);
    case LetterKind::Dminus:
      return act_dminus(s);
    case LetterKind::Phi: {
      V v(s);
      V a = act(Letter::dplus(), act(Letter::dminus(), v));
      a -= act(Letter::dminus(), act(Letter::dplus(), v));
      a *= lift((Q() - 1).inv());
      return a;
    }
    case LetterKind::Z: {
      if (x.index < 1 || x.index > k) throw LevelError("z" + std::to_string(x.index) + " on " + s.to_string());
      out.add(s, lift(content_of(s.w[x.index - 1]).pow(x.exp)));
      return out;
    }
    case LetterKind::T:
    case LetterKind::Tinv:
      if (x.index < 1 || x.index > k - 1) throw LevelError("T" + std::to_string(x.index) + " on " + s.to_string());
      return act_T(s, x.index, x.kind == LetterKind::Tinv);
    case LetterKind::Delta:
      out.add(s, lift(delta_eigenvalue(s, x.index)));
      return out;
    case LetterKind::DeltaStar:
      out.add(s, lift(delta_eigenvalue(s, -x.index)));
      return out;
  }
  return out;
}

template <class F>
const typename PolyRep<F>::V& PolyRep<F>::act(const Letter& x, const State& s) {
  auto key = std::make_pair(s, x);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  V v = compute(x, s);
  return cache_.emplace(std::move(key), std::move(v)).first->second;
}

template <class F>
typename PolyRep<F>::V PolyRep<F>::act(const Letter& x, const V& v) {
  V out;
  for (const auto& [s, c] : v) out.add_scaled(act(x, s), c);
  return out;
}

template <class F>
typename PolyRep<F>::V PolyRep<F>::act(const Word& w, const V& v) {
  for (const auto& [s, c] : v)
    if (s.level() != w.source)
      throw LevelError("word " + w.to_string() + " applied to " + s.to_string() + " at level " +
                       std::to_string(s.level()));
  V cur = v;
  for (size_t j = w.letters.size(); j-- > 0;) {
    if (cur.is_zero()) break;
    cur = act(w.letters[j], cur);
  }
  return cur;
}

template <class F>
typename PolyRep<F>::V PolyRep<F>::act(const Expr& e, const V& v) {
  V out;
  for (const auto& [w, c] : e.terms()) out.add_scaled(act(w, v), lift(c));
  return out;
}

template class PolyRep<ExactField>;
template class PolyRep<PointField>;

}  // namespace hallpath
