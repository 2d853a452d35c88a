#include "knotguts/notation.hpp"

#include "knotguts/error.hpp"

#include <cctype>
#include <limits>
#include <map>

namespace knotguts {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_space();
    return i_ >= s_.size();
  }
  char peek() {
    skip_space();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  std::size_t pos() const { return i_; }

  [[noreturn]] void fail(ErrorCode code, const std::string& what) const {
    throw Error(code, what + " at position " + std::to_string(i_), i_);
  }

  void expect(char c, ErrorCode code = ErrorCode::SyntaxError) {
    if (!accept(c)) fail(code, std::string("expected '") + c + "'");
  }

  // Optionally signed decimal integer; no whitespace between sign and digits.
  BigInt integer(ErrorCode code = ErrorCode::SyntaxError) {
    skip_space();
    std::size_t start = i_;
    bool neg = false;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) {
      neg = s_[i_] == '-';
      ++i_;
    }
    std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == digits) {
      i_ = start;
      fail(code, "expected integer");
    }
    BigInt v(std::string(s_.substr(digits, i_ - digits)));
    return neg ? BigInt(-v) : v;
  }

  long long small_integer(ErrorCode code = ErrorCode::SyntaxError) {
    std::size_t start = pos();
    BigInt v = integer(code);
    if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min()) {
      i_ = start;
      fail(code, "integer out of range");
    }
    return static_cast<long long>(v);
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

bool blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

PDCode parse_pd(std::string_view text) {
  if (blank(text)) throw Error(ErrorCode::EmptyInput, "empty PD code");
  Cursor cur(text);
  PDCode pd;
  while (!cur.done()) {
    char c = cur.peek();
    if (c == ',') {
      cur.accept(',');
      continue;
    }
    if (c != 'X' && c != 'x') cur.fail(ErrorCode::SyntaxError, "expected 'X'");
    cur.accept(c);
    char close = ')';
    if (cur.accept('[')) {
      close = ']';
    } else {
      cur.expect('(');
    }
    std::array<int, 4> labels{};
    for (int k = 0; k < 4; ++k) {
      if (k > 0) cur.expect(',');
      std::size_t at = cur.pos();
      long long v = cur.small_integer();
      if (v <= 0) throw Error(ErrorCode::SyntaxError, "arc labels must be positive at position " + std::to_string(at), at);
      labels[k] = static_cast<int>(v);
    }
    cur.expect(close);
    pd.crossings.push_back(labels);
  }
  if (pd.crossings.empty()) throw Error(ErrorCode::EmptyInput, "PD code has no crossings");
  std::map<int, int> count;
  for (const auto& x : pd.crossings)
    for (int l : x) ++count[l];
  for (const auto& [label, n] : count) {
    if (n != 2)
      throw Error(ErrorCode::ArcCount, "arc label " + std::to_string(label) + " appears " + std::to_string(n) +
                                           " times; every label must appear exactly twice");
  }
  return pd;
}

std::string to_string(const PDCode& pd) {
  std::string out;
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& x = pd.crossings[i];
    if (i) out += ' ';
    out += "X(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + "," +
           std::to_string(x[3]) + ")";
  }
  return out;
}

BraidWord merge_letters(const BraidWord& word) {
  BraidWord out;
  out.strands = word.strands;
  for (const auto& l : word.letters) {
    if (l.exponent == 0) continue;
    if (!out.letters.empty() && out.letters.back().generator == l.generator) {
      out.letters.back().exponent += l.exponent;
      if (out.letters.back().exponent == 0) out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

BraidWord parse_braid(std::string_view text) {
  if (blank(text)) throw Error(ErrorCode::EmptyInput, "empty braid word");
  Cursor cur(text);
  if (!cur.accept('B') && !cur.accept('b'))
    cur.fail(ErrorCode::MissingStrandCount, "braid word must start with 'B<n>:'");
  std::size_t at = cur.pos();
  long long n = cur.small_integer(ErrorCode::MissingStrandCount);
  if (n < 1) throw Error(ErrorCode::MissingStrandCount, "strand count must be positive", at);
  cur.expect(':', ErrorCode::MissingStrandCount);
  BraidWord word;
  word.strands = static_cast<int>(n);
  while (!cur.done()) {
    if (!cur.accept('s') && !cur.accept('S')) cur.fail(ErrorCode::SyntaxError, "expected generator 's<i>'");
    std::size_t gpos = cur.pos();
    long long g = cur.small_integer();
    if (g < 1 || g >= n)
      throw Error(ErrorCode::GeneratorOutOfRange,
                  "generator s" + std::to_string(g) + " needs 1 <= i < " + std::to_string(n), gpos);
    long long e = 1;
    if (cur.accept('^')) {
      bool brace = cur.accept('{');
      std::size_t epos = cur.pos();
      e = cur.small_integer();
      if (brace) cur.expect('}');
      if (e == 0) throw Error(ErrorCode::ZeroExponent, "zero exponent", epos);
    }
    word.letters.push_back({static_cast<int>(g), static_cast<int>(e)});
  }
  return merge_letters(word);
}

std::string to_string(const BraidWord& word) {
  std::string out = "B" + std::to_string(word.strands) + ":";
  for (const auto& l : word.letters) {
    out += " s" + std::to_string(l.generator);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

bool is_positive(const BraidWord& word) {
  for (const auto& l : word.letters)
    if (l.exponent < 0) return false;
  return true;
}

int crossing_count(const BraidWord& word) {
  int c = 0;
  for (const auto& l : word.letters) c += l.exponent < 0 ? -l.exponent : l.exponent;
  return c;
}

namespace {

Rational parse_rational_at(Cursor& cur) {
  std::size_t start = cur.pos();
  BigInt p = cur.integer(ErrorCode::MalformedRational);
  BigInt q = 1;
  if (cur.accept('/')) {
    cur.skip_space();
    std::size_t qpos = cur.pos();
    if (cur.peek() == '-' || cur.peek() == '+') cur.fail(ErrorCode::MalformedRational, "signed denominator");
    q = cur.integer(ErrorCode::MalformedRational);
    if (q == 0) throw Error(ErrorCode::InfiniteSlope, "zero denominator at position " + std::to_string(qpos), qpos);
  }
  (void)start;
  return Rational(p, q);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) throw Error(ErrorCode::MalformedRational, "empty rational");
  Rational r = parse_rational_at(cur);
  if (!cur.done()) cur.fail(ErrorCode::MalformedRational, "trailing characters");
  return r;
}

MontesinosVector parse_montesinos(std::string_view text) {
  if (blank(text)) throw Error(ErrorCode::EmptyInput, "empty Montesinos vector");
  Cursor cur(text);
  if (!cur.accept('M') && !cur.accept('m')) cur.fail(ErrorCode::SyntaxError, "expected 'M('");
  cur.expect('(');
  MontesinosVector m;
  if (!cur.accept(')')) {
    while (true) {
      std::size_t at = cur.pos();
      Rational q = parse_rational_at(cur);
      if (is_integer(q))
        throw Error(ErrorCode::IntegerSlope, "integer slope " + to_string(q) + " at position " + std::to_string(at), at);
      m.slopes.push_back(q);
      if (cur.accept(')')) break;
      cur.expect(',', ErrorCode::MalformedRational);
    }
  }
  if (!cur.done()) cur.fail(ErrorCode::SyntaxError, "trailing characters");
  if (m.slopes.size() < 3)
    throw Error(ErrorCode::LengthTooSmall,
                "Montesinos vector needs at least 3 slopes, got " + std::to_string(m.slopes.size()));
  return m;
}

std::string to_string(const MontesinosVector& m) {
  std::string out = "M(";
  for (std::size_t i = 0; i < m.slopes.size(); ++i) {
    if (i) out += ", ";
    out += to_string(m.slopes[i]);
  }
  return out + ")";
}

std::vector<long long> continued_fraction(const Rational& q) {
  const bool neg = q < 0;
  BigInt p = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  if (neg) p = -p;
  std::vector<long long> terms;
  while (true) {
    BigInt a = p / d;
    if (a > std::numeric_limits<int>::max()) throw Error(ErrorCode::InvalidArgument, "continued fraction term too large");
    terms.push_back(neg ? -static_cast<long long>(a) : static_cast<long long>(a));
    BigInt r = p - a * d;
    if (r == 0) break;
    p = d;
    d = r;
  }
  return terms;
}

Rational evaluate_continued_fraction(const std::vector<long long>& terms) {
  if (terms.empty()) throw Error(ErrorCode::InvalidArgument, "empty continued fraction");
  Rational v = terms.back();
  for (std::size_t i = terms.size() - 1; i-- > 0;) v = Rational(terms[i]) + 1 / v;
  return v;
}

}  // namespace knotguts
