#pragma once

// Fixed parameters of the verification suites. Bump kManifestVersion whenever
// any value here changes so that reports from different builds stay comparable.

#include <array>
#include <cstdint>
#include <string_view>

namespace stingray::manifest {

inline constexpr std::string_view kManifestVersion = "v1";

// ---- PERMMOD ----

enum class PermShape {
  FullCycle,      // n-cycle, p does not divide n
  CycleFixOne,    // (n-1)-cycle with one fixed point, p divides n
  CycleFixed,     // r-cycle with n - r fixed points
  TwoCycles,      // product of two disjoint r-cycles, n = 2r
};

struct PermCase {
  std::string_view id;
  unsigned table_line;
  PermShape shape;
  unsigned r;  // cycle length
  unsigned n;
  std::uint64_t p;
  bool stingray;  // expected verdict
};

inline constexpr std::array<PermCase, 8> kPermCases{{
    {"L1-9cyc-n9-p2", 1, PermShape::FullCycle, 9, 9, 2, false},
    {"L2-9cyc-n10-p2", 2, PermShape::CycleFixOne, 9, 10, 2, false},
    {"L3-5cyc-n9-p2", 3, PermShape::CycleFixed, 5, 9, 2, true},
    {"L4-5cyc-n10-p2", 4, PermShape::CycleFixed, 5, 10, 2, true},
    {"L5-5x5-n10-p2", 5, PermShape::TwoCycles, 5, 10, 2, false},
    {"L1-7cyc-n7-p2", 1, PermShape::FullCycle, 7, 7, 2, false},
    {"L2-7cyc-n8-p2", 2, PermShape::CycleFixOne, 7, 8, 2, false},
    {"L3-7cyc-n13-p3", 3, PermShape::CycleFixed, 7, 13, 3, true},
}};

// ---- PSL2 ----

struct Sl2Case {
  std::string_view id;
  std::uint64_t q;
  std::string_view module;  // Sl2Spec text
  unsigned r;
  bool stingray_exists;
};

inline constexpr std::array<Sl2Case, 6> kSl2Cases{{
    {"symcube-q5", 5, "symcube", 3, true},
    {"symcube-q11", 11, "symcube", 3, true},
    {"symcube-q7", 7, "symcube", 3, false},
    {"twist01-q8", 8, "twist:0,1", 3, true},
    {"twist02-q64", 64, "twist:0,2", 5, true},
    {"twist01-q16", 16, "twist:0,1", 3, false},
}};

inline constexpr std::uint64_t kSl2Seed = 0x5EED0002;
// Draws of random elements while hunting for a witness.
inline constexpr unsigned kSl2WitnessTrials = 2000;
// Order-r samples required before a non-existence verdict is reported.
inline constexpr unsigned kSl2NegativeSamples = 1000;
// Hard cap on draws while collecting those samples.
inline constexpr unsigned kSl2NegativeMaxDraws = 50000;

// ---- PROP122 ----

inline constexpr unsigned kProp122N = 14;
inline constexpr std::uint64_t kProp122P = 2;
inline constexpr unsigned kProp122Order = 9;
inline constexpr unsigned kProp122MaxFixed = 4;

// ---- PPDTABLE ----

inline constexpr std::uint64_t kPpdMaxQ = 32;
inline constexpr unsigned kPpdMaxE = 20;

struct ConstructCase {
  unsigned d;
  std::uint64_t q;
};

inline constexpr std::array<ConstructCase, 4> kConstructCases{{{4, 4}, {8, 2}, {8, 3}, {10, 3}}};
inline constexpr ConstructCase kConstructException{12, 2};

}  // namespace stingray::manifest
