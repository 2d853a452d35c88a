#include "knotguts_cli/corpus.hpp"

#include "knotguts/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace knotguts::cli {

namespace {

constexpr int kAttempts = 20000;

// Raw engine output reduced modulo n keeps sequences identical across standard libraries.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  long long below(long long n) { return static_cast<long long>(engine() % static_cast<std::uint64_t>(n)); }
  long long between(long long lo, long long hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 1; }
};

int cf_crossings(const std::vector<Rational>& slopes) {
  int c = 0;
  for (const auto& q : slopes)
    for (long long a : continued_fraction(q)) c += static_cast<int>(a < 0 ? -a : a);
  return c;
}

Rational proper_fraction(Rng& rng, int max_den) {
  long long den = rng.between(2, max_den);
  long long num = rng.between(1, den - 1);
  while (std::gcd(num, den) != 1) num = rng.between(1, den - 1);
  return Rational(num, den);
}

std::optional<BraidWord> braid_word(Rng& rng, int strands, int cap) {
  BraidWord w;
  w.strands = strands;
  if (strands == 2) {
    w.letters.push_back({1, static_cast<int>(rng.between(3, 5))});
    if (crossing_count(w) > cap) return std::nullopt;
    return w;
  }
  const int shortest = 2 * (strands - 1);
  const int length = static_cast<int>(rng.between(shortest, std::max(shortest, std::min(2 * strands + 2, cap / 3))));
  for (int k = 0; k < length; ++k) {
    int g = static_cast<int>(rng.between(1, strands - 1));
    while (!w.letters.empty() && g == w.letters.back().generator) g = static_cast<int>(rng.between(1, strands - 1));
    w.letters.push_back({g, static_cast<int>(rng.between(3, 5))});
  }
  if (w.letters.size() > 1 && w.letters.front().generator == w.letters.back().generator) return std::nullopt;
  // A generator used once gives a composite closure; ask for two of each.
  for (int g = 1; g < strands; ++g)
    if (std::count_if(w.letters.begin(), w.letters.end(), [g](const BraidLetter& l) { return l.generator == g; }) < 2)
      return std::nullopt;
  if (crossing_count(w) > cap) return std::nullopt;
  return w;
}

std::optional<CorpusItem> positive_braid(Rng& rng, int cap) {
  const long long pick = rng.below(6);
  const int strands = pick == 0 ? 2 : (pick < 3 ? 3 : 4);
  std::optional<BraidWord> w;
  for (int attempt = 0; attempt < 200 && !w; ++attempt) w = braid_word(rng, strands, cap);
  if (!w) return std::nullopt;
  CorpusItem item;
  item.family = "positive-braids";
  item.source = to_string(*w);
  item.diagram = LinkDiagram::from_braid(*w);
  item.braid = *w;
  return item;
}

std::optional<CorpusItem> from_slopes(const std::string& family, const std::vector<Rational>& slopes, int cap) {
  if (cf_crossings(slopes) > cap) return std::nullopt;
  MontesinosVector v{slopes};
  CorpusItem item;
  item.family = family;
  item.montesinos = normalize(v);
  if (cf_crossings(item.montesinos->slopes) > cap) return std::nullopt;
  item.source = to_string(MontesinosVector{item.montesinos->slopes});
  item.diagram = build_diagram(*item.montesinos).diagram;
  return item;
}

std::optional<CorpusItem> mixed_montesinos(Rng& rng, int cap) {
  const int length = static_cast<int>(rng.between(6, 7));
  std::vector<Rational> slopes;
  for (int i = 0; i < length; ++i) {
    Rational q = proper_fraction(rng, 5);
    bool negative = i >= 3 && (i < 6 ? true : rng.coin());
    slopes.push_back(negative ? Rational(-q) : q);
  }
  for (int i = length - 1; i > 0; --i) std::swap(slopes[i], slopes[rng.below(i + 1)]);
  return from_slopes("montesinos", slopes, cap);
}

std::optional<CorpusItem> pretzel(Rng& rng, int cap) {
  const int length = static_cast<int>(rng.between(3, 6));
  std::vector<Rational> slopes;
  for (int i = 0; i < length; ++i) {
    Rational q(1, rng.between(2, 5));
    slopes.push_back(rng.coin() ? Rational(-q) : q);
  }
  return from_slopes("pretzels", slopes, cap);
}

std::optional<CorpusItem> alternating_montesinos(Rng& rng, int cap) {
  const int length = static_cast<int>(rng.between(3, 5));
  const bool negative = rng.coin();
  std::vector<Rational> slopes;
  for (int i = 0; i < length; ++i) {
    long long den = rng.between(2, 6);
    long long num = rng.between(1, 2 * den);
    while (std::gcd(num, den) != 1) num = rng.between(1, 2 * den);
    Rational q(num, den);
    slopes.push_back(negative ? Rational(-q) : q);
  }
  return from_slopes("alternating-montesinos", slopes, cap);
}

std::optional<CorpusItem> one(const std::string& family, Rng& rng, int cap);

std::optional<CorpusItem> cabled(Rng& rng, int cap) {
  const int n = static_cast<int>(rng.between(2, 3));
  static const std::vector<std::string> bases = {"positive-braids", "pretzels", "alternating-montesinos"};
  const std::string& family = bases[rng.below(static_cast<long long>(bases.size()))];
  auto base = one(family, rng, cap / (n * n));
  if (!base) return std::nullopt;
  CorpusItem item;
  item.family = "cables";
  item.source = "cable " + std::to_string(n) + " of " + base->source;
  item.diagram = cable(base->diagram, n);
  item.cable_strands = n;
  item.base = base->diagram;
  item.braid = base->braid;
  item.montesinos = base->montesinos;
  return item;
}

std::optional<CorpusItem> one(const std::string& family, Rng& rng, int cap) {
  if (family == "positive-braids") return positive_braid(rng, cap);
  if (family == "montesinos") return mixed_montesinos(rng, cap);
  if (family == "pretzels") return pretzel(rng, cap);
  if (family == "alternating-montesinos") return alternating_montesinos(rng, cap);
  if (family == "cables") return cabled(rng, cap);
  throw Error(ErrorCode::InvalidArgument, "unknown corpus family " + family);
}

}  // namespace

const std::vector<std::string>& corpus_families() {
  static const std::vector<std::string> families = {"positive-braids", "montesinos", "pretzels",
                                                    "alternating-montesinos", "cables"};
  return families;
}

std::vector<CorpusItem> generate_corpus(const std::string& family, std::uint64_t seed, int count, int cap) {
  if (std::find(corpus_families().begin(), corpus_families().end(), family) == corpus_families().end())
    throw Error(ErrorCode::InvalidArgument, "unknown corpus family " + family);
  if (count < 0) throw Error(ErrorCode::InvalidArgument, "negative item count");
  Rng rng(seed);
  std::vector<CorpusItem> out;
  int misses = 0;
  while (static_cast<int>(out.size()) < count) {
    auto item = one(family, rng, cap);
    if (!item) {
      if (++misses > kAttempts)
        throw Error(ErrorCode::InvalidArgument,
                    "crossing cap " + std::to_string(cap) + " is too small for family " + family);
      continue;
    }
    misses = 0;
    out.push_back(std::move(*item));
  }
  return out;
}

}  // namespace knotguts::cli
