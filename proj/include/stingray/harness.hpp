#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stingray/classify.hpp"
#include "stingray/groups.hpp"

namespace stingray::harness {

using groups::MatrixGroup;
using mat::DenseMatrix;

// ---- MGRP v1 ----
//
//   MGRP v1
//   p 2
//   a 2
//   modulus 1 1 1        (ascending, only when a > 1)
//   dim 4
//   ngens 2
//   gen 1
//   <dim rows of dim encodings>
//   gen 2
//   ...
//   # optional trailing comments

struct MgrpFile {
  MatrixGroup group;
  std::vector<std::string> comments;  // without the leading "# "
};

/// Errors: ParseError (message carries the line number), SingularGenerator,
/// ReducibleModulus.
MgrpFile parse_mgrp_text(const std::string& text);
MgrpFile parse_mgrp(const std::string& path);

std::string format_mgrp(const MatrixGroup& grp, const std::vector<std::string>& comments = {});
/// Errors: ParseError when the file cannot be written.
void write_mgrp(const MatrixGroup& grp, const std::string& path, const std::vector<std::string>& comments = {});

// ---- reports ----

struct Check {
  std::string id;
  std::string description;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const;
  /// PASS iff expected == observed.
  void add(std::string id, std::string description, std::string expected, std::string observed);
  /// For checks whose expectation is not an exact value, e.g. a bound.
  void add(std::string id, std::string description, std::string expected, std::string observed, bool pass);
  /// Appends another report's checks and notes.
  void merge(const VerifyReport& other);
  /// CHECK lines, then a RESULT line; descriptions and notes as '#' lines when verbose.
  std::string to_string(bool verbose = false) const;
};

enum class Suite { PermMod, Psl2, Prop122, Characters, PpdTable, All };

/// Errors: InvalidArgument.
Suite parse_suite(const std::string& name);
std::string to_string(Suite s);

/// Runs the fixed check list with the manifest's parameters.
VerifyReport verify_suite(Suite s);

// ---- random search ----

struct SampleReport {
  unsigned trials = 0;
  unsigned order_r = 0;  // draws whose order is divisible by r
  std::map<std::string, unsigned> tags;  // tag string -> count, over order_r draws
  std::optional<DenseMatrix> witness;  // first STINGRAY(e) element of order r

  std::string to_string() const;
};

/// Draws random elements, raises each to |g|/r when r divides |g| and
/// classifies the result with respect to e.
/// Errors: InvalidArgument (trials == 0, r not prime).
SampleReport sample_stingray(const MatrixGroup& grp, unsigned r, unsigned e, unsigned trials, std::uint64_t seed);

/// Random element of order r via the power trick, or nullopt if g has order
/// prime to r.
std::optional<DenseMatrix> power_to_order(const DenseMatrix& g, unsigned r);

/// Minimal polynomial splits into distinct linear factors over the field.
bool is_diagonalizable(const DenseMatrix& g);

// ---- optional signature suite ----

/// One user-supplied group: generators on file plus the signature to check.
/// List file syntax, one entry per line ('#' starts a comment):
///   <label> <mgrp path> <order> <r> <e> <yes|no> [trials]
/// Relative paths are taken from the list file's directory.
struct SignatureEntry {
  std::string label;
  std::string path;
  BigInt order;
  unsigned r = 0;
  unsigned e = 0;
  bool stingray = false;
  unsigned trials = 2000;
};

/// Errors: ParseError.
std::vector<SignatureEntry> parse_signature_list(const std::string& path);

/// Checks order, irreducibility and stingray existence. A found witness is a
/// proof of existence; absence is reported only as a bounded random search.
VerifyReport verify_signatures(const std::vector<SignatureEntry>& entries, std::uint64_t seed);

}  // namespace stingray::harness
