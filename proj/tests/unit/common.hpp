#pragma once

#include "knotguts/diagram.hpp"
#include "knotguts/error.hpp"
#include "knotguts/notation.hpp"

#include <doctest.h>

#include <string>

namespace fixtures {

inline const char* kTrefoilPd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
inline const char* kFigureEightPd = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
inline const char* kKinkPd = "X(1,2,2,1)";
// Connected two-crossing diagram of the two-component unlink.
inline const char* kUnlinkPd = "X(1,3,2,4) X(2,3,1,4)";

inline std::string table_path() { return std::string(KNOTGUTS_FIXTURE_DIR) + "/knotinfo_sample.csv"; }

inline knotguts::LinkDiagram pd(const std::string& text) {
  return knotguts::LinkDiagram::from_pd(knotguts::parse_pd(text));
}
inline knotguts::LinkDiagram braid(const std::string& text) {
  return knotguts::LinkDiagram::from_braid(knotguts::parse_braid(text));
}

}  // namespace fixtures

#define CHECK_ERROR_CODE(expr, expected)                       \
  do {                                                         \
    bool thrown_ = false;                                      \
    try {                                                      \
      (void)(expr);                                            \
    } catch (const knotguts::Error& e) {                       \
      thrown_ = true;                                          \
      CHECK(e.code() == knotguts::ErrorCode::expected);        \
    }                                                          \
    CHECK_MESSAGE(thrown_, "expected error " #expected);       \
  } while (0)
