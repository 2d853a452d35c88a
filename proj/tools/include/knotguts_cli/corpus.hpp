#pragma once

#include "knotguts/diagram.hpp"
#include "knotguts/montesinos.hpp"
#include "knotguts/notation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace knotguts::cli {

struct CorpusItem {
  std::string family;
  std::string source;  // braid word, Montesinos vector or cable description
  LinkDiagram diagram;
  std::optional<BraidWord> braid;
  std::optional<MontesinosNormalForm> montesinos;
  int cable_strands = 1;
  std::optional<LinkDiagram> base;  // uncabled diagram for the cables family
};

// positive-braids, montesinos, pretzels, alternating-montesinos, cables.
// Positive braids use exponents 3 to 5 and every generator at least twice.
const std::vector<std::string>& corpus_families();

// Deterministic for a given (family, seed, count, cap). Every diagram has at most
// `cap` crossings. Throws InvalidArgument for an unknown family or a cap too small
// for the family.
std::vector<CorpusItem> generate_corpus(const std::string& family, std::uint64_t seed, int count, int cap = 18);

}  // namespace knotguts::cli
