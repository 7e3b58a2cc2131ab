#include <filesystem>
#include <fstream>
#include <sstream>

#include "stingray/error.hpp"
#include "stingray/harness.hpp"
#include "stingray/numtheory.hpp"

namespace stingray::harness {

// ---- reports ----

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerifyReport::add(std::string id, std::string description, std::string expected, std::string observed) {
  const bool pass = expected == observed;
  add(std::move(id), std::move(description), std::move(expected), std::move(observed), pass);
}

void VerifyReport::add(std::string id, std::string description, std::string expected, std::string observed,
                       bool pass) {
  checks.push_back(Check{std::move(id), std::move(description), std::move(expected), std::move(observed), pass});
}

void VerifyReport::merge(const VerifyReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string VerifyReport::to_string(bool verbose) const {
  std::ostringstream out;
  std::size_t npass = 0;
  for (const auto& c : checks) {
    out << "CHECK " << c.id << ' ' << (c.pass ? "PASS" : "FAIL") << " expected=" << c.expected
        << " observed=" << c.observed << "\n";
    if (verbose && !c.description.empty()) out << "# " << c.description << "\n";
    npass += c.pass;
  }
  for (const auto& n : notes) out << "# " << n << "\n";
  out << "RESULT " << suite << ' ' << (passed() ? "PASS" : "FAIL") << ' ' << npass << '/' << checks.size() << "\n";
  return out.str();
}

Suite parse_suite(const std::string& name) {
  if (name == "PERMMOD") return Suite::PermMod;
  if (name == "PSL2") return Suite::Psl2;
  if (name == "PROP122") return Suite::Prop122;
  if (name == "CHARACTERS") return Suite::Characters;
  if (name == "PPDTABLE") return Suite::PpdTable;
  if (name == "ALL") return Suite::All;
  fail(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::PermMod: return "PERMMOD";
    case Suite::Psl2: return "PSL2";
    case Suite::Prop122: return "PROP122";
    case Suite::Characters: return "CHARACTERS";
    case Suite::PpdTable: return "PPDTABLE";
    case Suite::All: return "ALL";
  }
  return "?";
}

// ---- random search ----

std::optional<DenseMatrix> power_to_order(const DenseMatrix& g, unsigned r) {
  const BigInt o = mat::matrix_order(g);
  if (o % r != 0) return std::nullopt;
  return g.pow(o / r);
}

bool is_diagonalizable(const DenseMatrix& g) {
  const auto fac = poly::factor(mat::min_poly(g));
  for (const auto& [f, m] : fac.factors)
    if (f.degree() != 1 || m != 1) return false;
  return true;
}

std::string SampleReport::to_string() const {
  std::ostringstream out;
  out << "trials=" << trials << " order_r=" << order_r;
  for (const auto& [tag, n] : tags) out << ' ' << tag << '=' << n;
  out << " witness=" << (witness ? "found" : "none") << "\n";
  if (witness) out << witness->to_string();
  return out.str();
}

SampleReport sample_stingray(const MatrixGroup& grp, unsigned r, unsigned e, unsigned trials, std::uint64_t seed) {
  require(trials >= 1, ErrorCode::InvalidArgument, "trials must be at least 1");
  require(nt::is_prime(std::uint64_t{r}), ErrorCode::InvalidArgument, "r must be prime");
  require(e >= 1 && e <= grp.dim, ErrorCode::InvalidArgument, "e must lie in 1..dim");
  SampleReport rep;
  rep.trials = trials;
  groups::RandomWalkState walk(grp, seed);
  for (unsigned i = 0; i < trials; ++i) {
    const auto h = power_to_order(walk.next(), r);
    if (!h) continue;
    ++rep.order_r;
    const auto c = classify::classify_element(*h, e);
    ++rep.tags[c.tag_string()];
    if (!rep.witness && c.tag == classify::Tag::Stingray) rep.witness = *h;
  }
  return rep;
}

// ---- optional signature suite ----

std::vector<SignatureEntry> parse_signature_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  const auto dir = std::filesystem::path(path).parent_path();
  std::vector<SignatureEntry> out;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const auto bad = [&](const std::string& why) {
      fail(ErrorCode::ParseError, path + " line " + std::to_string(no) + ": " + why);
    };
    if (tok.size() != 6 && tok.size() != 7) bad("expected: label path order r e yes|no [trials]");
    SignatureEntry s;
    s.label = tok[0];
    const std::filesystem::path p(tok[1]);
    s.path = p.is_absolute() ? p.string() : (dir / p).string();
    try {
      s.order = BigInt(tok[2]);
      s.r = static_cast<unsigned>(std::stoul(tok[3]));
      s.e = static_cast<unsigned>(std::stoul(tok[4]));
      if (tok.size() == 7) s.trials = static_cast<unsigned>(std::stoul(tok[6]));
    } catch (const std::exception&) {
      bad("malformed number");
    }
    if (tok[5] != "yes" && tok[5] != "no") bad("expected yes or no");
    s.stingray = tok[5] == "yes";
    out.push_back(std::move(s));
  }
  return out;
}

VerifyReport verify_signatures(const std::vector<SignatureEntry>& entries, std::uint64_t seed) {
  VerifyReport rep;
  rep.suite = "SIGNATURE";
  for (const auto& s : entries) {
    const std::string id = "SIGNATURE." + s.label;
    const auto file = parse_mgrp(s.path);
    const auto& grp = file.group;

    std::string order;
    try {
      order = nt::to_string(groups::group_order(grp));
    } catch (const Error& err) {
      if (err.code() != ErrorCode::ActionTooLarge) throw;
      order = "too-large";
    }
    rep.add(id + ".order", "group order by Schreier-Sims", nt::to_string(s.order), order);
    rep.add(id + ".irreducible", "meataxe verdict", "YES", groups::is_irreducible(grp, seed).to_string());

    const auto sample = sample_stingray(grp, s.r, s.e, s.trials, seed);
    const std::string want = s.stingray ? "found" : "none";
    const std::string got = sample.witness ? "found" : "none";
    rep.add(id + ".stingray", "STINGRAY(" + std::to_string(s.e) + ") of order " + std::to_string(s.r), want, got);
    if (!s.stingray && !sample.witness) {
      rep.notes.push_back(s.label + ": no stingray witness among " + std::to_string(sample.order_r) +
                          " order-" + std::to_string(s.r) + " samples from " + std::to_string(s.trials) +
                          " draws; bounded search, not a proof");
    }
    if (rep.checks.size() >= 3 && rep.checks[rep.checks.size() - 3].pass && rep.checks[rep.checks.size() - 2].pass &&
        rep.checks.back().pass) {
      rep.notes.push_back(s.label + ": signature-consistent");
    }
  }
  return rep;
}

}  // namespace stingray::harness
