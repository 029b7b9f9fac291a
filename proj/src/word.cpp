#include "hallpath/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <variant>

#include "hallpath/errors.hpp"

namespace hallpath {

std::string Letter::to_string() const {
  switch (kind) {
    case LetterKind::Dplus:
      return "d+";
    case LetterKind::Dminus:
      return "d-";
    case LetterKind::Phi:
      return "phi";
    case LetterKind::Z:
      return "z" + std::to_string(index) + (exp == 1 ? "" : "^" + std::to_string(exp));
    case LetterKind::T:
      return "T" + std::to_string(index);
    case LetterKind::Tinv:
      return "T" + std::to_string(index) + "^-1";
    case LetterKind::Delta:
      return "Delta[" + std::to_string(index) + "]";
    case LetterKind::DeltaStar:
      return "DeltaStar[" + std::to_string(index) + "]";
  }
  return "?";
}

int Word::target() const {
  int l = source;
  for (const auto& x : letters) l += x.level_change();
  return l;
}

std::vector<int> Word::source_levels() const {
  std::vector<int> out(letters.size());
  int l = source;
  for (size_t j = letters.size(); j-- > 0;) {
    out[j] = l;
    l += letters[j].level_change();
  }
  return out;
}

void Word::validate() const {
  const auto lv = source_levels();
  for (size_t j = 0; j < letters.size(); ++j) {
    const Letter& x = letters[j];
    const int k = std::abs(lv[j]);
    switch (x.kind) {
      case LetterKind::Z:
        if (x.index < 1 || x.index > k)
          throw LevelError("z" + std::to_string(x.index) + " does not exist at level " + std::to_string(lv[j]));
        break;
      case LetterKind::T:
      case LetterKind::Tinv:
        if (x.index < 1 || x.index > k - 1)
          throw LevelError("T" + std::to_string(x.index) + " does not exist at level " + std::to_string(lv[j]));
        break;
      case LetterKind::Delta:
      case LetterKind::DeltaStar:
        if (x.index < 1) throw LevelError("Delta index must be positive");
        break;
      default:
        break;
    }
  }
}

int Word::margin() const {
  // Each entry: (boxes gained so far, peak so far) for one expansion path of phi.
  std::set<std::pair<int, int>> paths{{0, 0}};
  int level = source;
  auto step_dplus = [](int lvl, std::pair<int, int> p) {
    p.first += lvl >= 0 ? 1 : -1;
    p.second = std::max(p.second, p.first);
    return p;
  };
  for (size_t j = letters.size(); j-- > 0;) {
    const Letter& x = letters[j];
    if (x.kind == LetterKind::Dplus) {
      std::set<std::pair<int, int>> n;
      for (auto p : paths) n.insert(step_dplus(level, p));
      paths = std::move(n);
    } else if (x.kind == LetterKind::Phi) {
      std::set<std::pair<int, int>> n;
      for (auto p : paths) {
        n.insert(step_dplus(level - 1, p));  // d+ d-
        n.insert(step_dplus(level, p));      // d- d+
      }
      paths = std::move(n);
    }
    level += x.level_change();
  }
  int m = 0;
  for (const auto& p : paths) m = std::max(m, p.second);
  return m;
}

std::pair<int, int> Word::level_range() const {
  int lo = source, hi = source, level = source;
  for (size_t j = letters.size(); j-- > 0;) {
    if (letters[j].kind == LetterKind::Phi) {
      lo = std::min(lo, level - 1);
      hi = std::max(hi, level + 1);
    }
    level += letters[j].level_change();
    lo = std::min(lo, level);
    hi = std::max(hi, level);
  }
  return {lo, hi};
}

std::string Word::to_string() const {
  std::string s = "1_" + std::to_string(target());
  for (const auto& x : letters) s += " " + x.to_string();
  return s + " 1_" + std::to_string(source);
}

Word compose(const Word& left, const Word& right) {
  if (right.target() != left.source)
    throw LevelError("cannot compose: " + right.to_string() + " ends at level " + std::to_string(right.target()) +
                     " but " + left.to_string() + " starts at " + std::to_string(left.source));
  Word w;
  w.source = right.source;
  w.letters = left.letters;
  w.letters.insert(w.letters.end(), right.letters.begin(), right.letters.end());
  return w;
}

namespace {

struct Token {
  std::string text;
  size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*') {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '*') ++j;
    out.push_back({s.substr(i, j - i), i});
    i = j;
  }
  return out;
}

int parse_int(const std::string& s, size_t pos) {
  if (s.empty()) throw ParseError("expected an integer", pos);
  size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) throw ParseError("expected an integer", pos);
  for (size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw ParseError("expected an integer, got '" + s + "'", pos);
  return std::stoi(s);
}

bool starts_with(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

// Parses a letter token, or returns the level of an idempotent 1_k.
std::variant<Letter, int> parse_token(const Token& tok) {
  const std::string& s = tok.text;
  if (starts_with(s, "1_")) return parse_int(s.substr(2), tok.pos + 2);
  if (s == "d+") return Letter::dplus();
  if (s == "d-") return Letter::dminus();
  if (s == "phi") return Letter::phi();
  auto bracket = [&](size_t start) {
    if (s.back() != ']') throw ParseError("expected ']' in '" + s + "'", tok.pos);
    return parse_int(s.substr(start, s.size() - start - 1), tok.pos + start);
  };
  if (starts_with(s, "DeltaStar[")) return Letter::delta_star(bracket(10));
  if (starts_with(s, "Delta[")) return Letter::delta(bracket(6));
  if (s[0] == 'z' || s[0] == 'T') {
    const size_t caret = s.find('^');
    const std::string idx = s.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    const int i = parse_int(idx, tok.pos + 1);
    int e = 1;
    if (caret != std::string::npos) e = parse_int(s.substr(caret + 1), tok.pos + caret + 1);
    if (s[0] == 'z') return Letter::z(i, e);
    if (e == 1) return Letter::T(i);
    if (e == -1) return Letter::Tinv(i);
    throw ParseError("only T_i and T_i^-1 are supported", tok.pos);
  }
  throw ParseError("unknown letter '" + s + "'", tok.pos);
}

}  // namespace

Word parse_word(const std::string& text, std::optional<int> source) {
  const auto toks = tokenize(text);
  std::vector<std::variant<Letter, int>> items;
  for (const auto& t : toks) items.push_back(parse_token(t));
  Word w;
  std::optional<int> src = source;
  if (!items.empty() && std::holds_alternative<int>(items.back())) {
    const int k = std::get<int>(items.back());
    if (src && *src != k)
      throw ParseError("idempotent 1_" + std::to_string(k) + " contradicts source level " + std::to_string(*src),
                       toks.back().pos);
    src = k;
  }
  if (!src) throw ParseError("cannot infer the source level; end the word with 1_k", text.size());
  w.source = *src;
  int level = *src;
  std::vector<Letter> rev;
  for (size_t j = items.size(); j-- > 0;) {
    if (std::holds_alternative<int>(items[j])) {
      const int k = std::get<int>(items[j]);
      if (k != level)
        throw ParseError("idempotent 1_" + std::to_string(k) + " does not match level " + std::to_string(level),
                         toks[j].pos);
      continue;
    }
    const Letter& x = std::get<Letter>(items[j]);
    rev.push_back(x);
    level += x.level_change();
  }
  w.letters.assign(rev.rbegin(), rev.rend());
  w.validate();
  return w;
}

Expr::Expr(const Word& w, const RatFunc& c) : source_(w.source), target_(w.target()) { add(w, c); }

int Expr::margin() const {
  int m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.margin());
  return m;
}

void Expr::add(const Word& w, const RatFunc& c) {
  if (w.source != source_ || w.target() != target_) {
    if (!terms_.empty())
      throw LevelError("word " + w.to_string() + " does not fit " + std::to_string(source_) + " -> " +
                       std::to_string(target_));
    source_ = w.source;
    target_ = w.target();
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Expr::check_levels(const Expr& o) const {
  if (o.source_ != source_ || o.target_ != target_)
    throw LevelError("expressions have different levels: " + std::to_string(source_) + "->" +
                     std::to_string(target_) + " vs " + std::to_string(o.source_) + "->" +
                     std::to_string(o.target_));
}

Expr& Expr::operator+=(const Expr& o) {
  if (terms_.empty() && (o.source_ != source_ || o.target_ != target_)) {
    source_ = o.source_;
    target_ = o.target_;
  }
  if (o.terms_.empty()) return *this;
  check_levels(o);
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Expr& Expr::operator-=(const Expr& o) {
  if (terms_.empty() && (o.source_ != source_ || o.target_ != target_)) {
    source_ = o.source_;
    target_ = o.target_;
  }
  if (o.terms_.empty()) return *this;
  check_levels(o);
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Expr& Expr::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.source_ != b.target_)
    throw LevelError("cannot compose: right factor ends at " + std::to_string(b.target_) + ", left starts at " +
                     std::to_string(a.source_));
  Expr r(b.source_, a.target_);
  for (const auto& [w1, c1] : a.terms_)
    for (const auto& [w2, c2] : b.terms_) r.add(compose(w1, w2), c1 * c2);
  return r;
}

std::pair<int, int> Expr::level_range() const {
  std::pair<int, int> r{std::min(source_, target_), std::max(source_, target_)};
  for (const auto& [w, c] : terms_) {
    auto [lo, hi] = w.level_range();
    r.first = std::min(r.first, lo);
    r.second = std::max(r.second, hi);
  }
  return r;
}

std::string Expr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*[" + w.to_string() + "]";
  }
  return s;
}

Expr commutator(const Expr& a, const Expr& b) { return a * b - b * a; }

}  // namespace hallpath
