#include <charconv>
#include <fstream>
#include <sstream>

#include "stingray/error.hpp"
#include "stingray/harness.hpp"
#include "stingray/numtheory.hpp"

namespace stingray::harness {

namespace {

class LineReader {
 public:
  explicit LineReader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines_.push_back(std::move(line));
    }
  }

  bool done() const { return pos_ >= lines_.size(); }
  std::size_t line_no() const { return pos_; }  // 1-based number of the line last returned

  const std::string& next(const char* what) {
    if (done()) error(std::string("unexpected end of file, expected ") + what, lines_.size() + 1);
    return lines_[pos_++];
  }

  const std::string& peek() const { return lines_[pos_]; }

  [[noreturn]] void error(const std::string& msg) const { error(msg, pos_); }
  [[noreturn]] static void error(const std::string& msg, std::size_t line) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
  }

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::uint64_t to_u64(const std::string& tok, const LineReader& rd) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) rd.error("not a nonnegative integer: '" + tok + "'");
  return v;
}

// "key value..." with an exact key and count of values.
std::vector<std::uint64_t> keyed(LineReader& rd, const char* key, std::size_t count) {
  const auto toks = split(rd.next(key));
  if (toks.empty() || toks[0] != key) rd.error(std::string("expected '") + key + "'");
  if (toks.size() != count + 1) rd.error(std::string("wrong number of values after '") + key + "'");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i < toks.size(); ++i) out.push_back(to_u64(toks[i], rd));
  return out;
}

}  // namespace

MgrpFile parse_mgrp_text(const std::string& text) {
  LineReader rd(text);
  if (rd.next("header") != "MGRP v1") rd.error("expected 'MGRP v1'");

  const std::uint64_t p = keyed(rd, "p", 1)[0];
  if (!nt::is_prime(p)) rd.error("p = " + std::to_string(p) + " is not prime");
  const std::uint64_t a = keyed(rd, "a", 1)[0];
  if (a < 1 || a > 64) rd.error("a must be between 1 and 64");

  std::optional<std::vector<std::uint64_t>> modulus;
  if (!rd.done() && split(rd.peek()).size() > 0 && split(rd.peek())[0] == "modulus") {
    if (a == 1) {
      rd.next("modulus");
      rd.error("modulus line given for a prime field");
    }
  }
  if (a > 1) {
    modulus = keyed(rd, "modulus", a + 1);
    for (auto c : *modulus)
      if (c >= p) rd.error("modulus coefficient out of range");
    if (modulus->back() != 1) rd.error("modulus must be monic");
  }
  // ReducibleModulus and FieldTooLarge propagate unchanged
  const ff::FieldSpec F = ff::make_field(p, static_cast<unsigned>(a), modulus);

  const std::uint64_t d = keyed(rd, "dim", 1)[0];
  if (d < 1 || d > 4096) rd.error("dim out of range");
  const std::uint64_t ngens = keyed(rd, "ngens", 1)[0];
  if (ngens < 1) rd.error("ngens must be positive");

  std::vector<DenseMatrix> gens;
  for (std::uint64_t k = 1; k <= ngens; ++k) {
    const auto idx = keyed(rd, "gen", 1)[0];
    if (idx != k) rd.error("expected 'gen " + std::to_string(k) + "'");
    std::vector<mat::Vec> rows;
    for (std::uint64_t i = 0; i < d; ++i) {
      const auto toks = split(rd.next("matrix row"));
      if (toks.size() != d) rd.error("matrix row must have " + std::to_string(d) + " entries");
      mat::Vec row;
      for (const auto& t : toks) {
        const auto x = to_u64(t, rd);
        if (!F.contains(x)) rd.error("entry " + t + " is not an element of " + F.name());
        row.push_back(x);
      }
      rows.push_back(std::move(row));
    }
    DenseMatrix g = DenseMatrix::from_rows(F, rows);
    require(g.is_invertible(), ErrorCode::SingularGenerator, "generator " + std::to_string(k) + " is singular");
    gens.push_back(std::move(g));
  }

  std::vector<std::string> comments;
  while (!rd.done()) {
    const std::string& line = rd.next("comment");
    if (line.empty() || line[0] != '#') rd.error("only '#' comment lines may follow the generators");
    std::string c = line.substr(1);
    if (!c.empty() && c[0] == ' ') c.erase(0, 1);
    comments.push_back(std::move(c));
  }
  return MgrpFile{MatrixGroup(F, d, std::move(gens)), std::move(comments)};
}

MgrpFile parse_mgrp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mgrp_text(buf.str());
}

std::string format_mgrp(const MatrixGroup& grp, const std::vector<std::string>& comments) {
  const auto& F = grp.field;
  std::ostringstream out;
  out << "MGRP v1\n";
  out << "p " << F.characteristic() << "\n";
  out << "a " << F.degree() << "\n";
  if (F.degree() > 1) {
    out << "modulus";
    for (auto c : F.modulus()) out << ' ' << c;
    out << "\n";
  }
  out << "dim " << grp.dim << "\n";
  out << "ngens " << grp.generators.size() << "\n";
  for (std::size_t k = 0; k < grp.generators.size(); ++k) {
    out << "gen " << k + 1 << "\n";
    const auto& g = grp.generators[k];
    for (std::size_t i = 0; i < g.rows(); ++i) {
      for (std::size_t j = 0; j < g.cols(); ++j) out << (j ? " " : "") << g.at(i, j);
      out << "\n";
    }
  }
  for (const auto& c : comments) out << "# " << c << "\n";
  return out.str();
}

void write_mgrp(const MatrixGroup& grp, const std::string& path, const std::vector<std::string>& comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot write " + path);
  out << format_mgrp(grp, comments);
  if (!out) fail(ErrorCode::ParseError, "write failed for " + path);
}

}  // namespace stingray::harness
