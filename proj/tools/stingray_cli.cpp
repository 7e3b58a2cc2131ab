// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 internal error or computational limit, 3 empty result, 64 usage error.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "stingray/classify.hpp"
#include "stingray/error.hpp"
#include "stingray/groups.hpp"
#include "stingray/harness.hpp"
#include "stingray/numtheory.hpp"
#include "stingray/ppd.hpp"

namespace {

using namespace stingray;
using mat::DenseMatrix;

constexpr int kExitFail = 1;
constexpr int kExitInternal = 2;
constexpr int kExitEmpty = 3;
constexpr int kExitUsage = 64;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoSolution:
    case ErrorCode::NoPpdPrime:
    case ErrorCode::NoUnimodularFactor: return kExitEmpty;
    case ErrorCode::ActionTooLarge:
    case ErrorCode::TooLarge:
    case ErrorCode::FieldTooLarge: return kExitInternal;
    default: return kExitUsage;
  }
}

// Integer, comma list b_0,...,b_{r-1}, or one of b5, -b5, c13, -1-c13.
cyclo::CyclotomicInt parse_chi(const std::string& text, unsigned r) {
  using cyclo::CyclotomicInt;
  if (text == "b5" || text == "-b5") {
    require(r == 5, ErrorCode::InvalidArgument, "b5 needs r = 5");
    return text[0] == '-' ? -CyclotomicInt::b5() : CyclotomicInt::b5();
  }
  if (text == "c13" || text == "-1-c13") {
    require(r == 13, ErrorCode::InvalidArgument, "c13 needs r = 13");
    return text == "c13" ? CyclotomicInt::c13() : CyclotomicInt::integer(13, -1) - CyclotomicInt::c13();
  }
  std::vector<std::int64_t> coeffs;
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    try {
      std::size_t used = 0;
      coeffs.push_back(std::stoll(tok, &used));
      require(used == tok.size(), ErrorCode::InvalidArgument, "bad character value '" + text + "'");
    } catch (const std::logic_error&) {
      fail(ErrorCode::InvalidArgument, "bad character value '" + text + "'");
    }
  }
  if (coeffs.size() == 1) return CyclotomicInt::integer(r, coeffs[0]);
  require(coeffs.size() == r, ErrorCode::InvalidArgument, "expected an integer or r comma-separated coefficients");
  return CyclotomicInt(r, coeffs);
}

void write_single(const DenseMatrix& g, const std::string& out, const std::string& comment) {
  groups::MatrixGroup grp(g.field(), g.rows(), {g});
  harness::write_mgrp(grp, out, {comment});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stingray elements in finite linear groups"};
  app.require_subcommand(1);
  std::uint64_t seed = default_seed();
  app.add_option("--seed", seed, "Random seed (default 0xC0FFEE or $STINGRAY_SEED)");

  // ppd
  auto* ppd_cmd = app.add_subcommand("ppd", "Primitive prime divisors of q^e - 1");
  std::string ppd_q;
  unsigned ppd_e = 0;
  ppd_cmd->add_option("--q", ppd_q, "Prime power q")->required();
  ppd_cmd->add_option("--e", ppd_e, "Exponent e >= 2")->required();

  // classify
  auto* cls_cmd = app.add_subcommand("classify", "Classify one generator of an MGRP file");
  std::string cls_file;
  std::size_t cls_gen = 1;
  unsigned cls_e = 0;
  cls_cmd->add_option("--file", cls_file, "MGRP file")->required();
  cls_cmd->add_option("--gen", cls_gen, "Generator index (1-based)")->check(CLI::PositiveNumber);
  cls_cmd->add_option("--e", cls_e, "e (default dim/2)");

  // construct
  auto* con_cmd = app.add_subcommand("construct", "Build generators and write an MGRP file");
  con_cmd->require_subcommand(1);
  std::string out;

  auto* con_st = con_cmd->add_subcommand("stingray", "Explicit (d/2)-stingray element");
  std::uint64_t st_q = 0, st_r = 0;
  unsigned st_d = 0;
  bool st_det = false;
  con_st->add_option("--q", st_q)->required();
  con_st->add_option("--d", st_d)->required();
  con_st->add_option("--r", st_r, "ppd prime (default smallest)");
  con_st->add_flag("--det1,--det-one", st_det, "Element of SL_d(q)");
  con_st->add_option("--out", out)->required();

  auto* con_dp = con_cmd->add_subcommand("delperm", "A_n on the deleted permutation module");
  unsigned dp_n = 0;
  std::uint64_t dp_p = 0;
  con_dp->add_option("--n", dp_n)->required();
  con_dp->add_option("--p", dp_p)->required();
  con_dp->add_option("--out", out)->required();

  auto* con_sl = con_cmd->add_subcommand("sl2", "SL_2(q) module");
  std::uint64_t sl_q = 0;
  std::string sl_module = "natural";
  con_sl->add_option("--q", sl_q)->required();
  con_sl->add_option("--module", sl_module, "natural | symcube | twist:S,T");
  con_sl->add_option("--out", out)->required();

  auto* con_cl = con_cmd->add_subcommand("classical", "GL, SL or Sp generators");
  std::string cl_family;
  unsigned cl_d = 0;
  std::uint64_t cl_q = 0;
  con_cl->add_option("--family", cl_family)->required()->check(CLI::IsMember({"GL", "SL", "SP"}));
  con_cl->add_option("--d", cl_d)->required();
  con_cl->add_option("--q", cl_q)->required();
  con_cl->add_option("--out", out)->required();

  // order / irreducible
  auto* ord_cmd = app.add_subcommand("order", "Group order by Schreier-Sims");
  std::string ord_file;
  bool ord_proj = false;
  ord_cmd->add_option("--file", ord_file)->required();
  ord_cmd->add_flag("--projective", ord_proj, "Order of the image in PGL");

  auto* irr_cmd = app.add_subcommand("irreducible", "Meataxe irreducibility test");
  std::string irr_file;
  unsigned irr_rounds = groups::kDefaultMeataxeRounds;
  irr_cmd->add_option("--file", irr_file)->required();
  irr_cmd->add_option("--rounds", irr_rounds)->check(CLI::PositiveNumber);

  // solve-mult
  auto* sm_cmd = app.add_subcommand("solve-mult", "Eigenvalue multiplicities from a Brauer character value");
  std::string sm_chi;
  unsigned sm_d = 0, sm_r = 0;
  sm_cmd->add_option("--chi", sm_chi, "integer, b_0,...,b_{r-1}, b5, -b5, c13 or -1-c13")->required();
  sm_cmd->add_option("--d", sm_d)->required();
  sm_cmd->add_option("--r", sm_r)->required();

  // sample-stingray
  auto* ss_cmd = app.add_subcommand("sample-stingray", "Random search for stingray elements");
  std::string ss_file;
  unsigned ss_r = 0, ss_e = 0, ss_trials = 0;
  ss_cmd->add_option("--file", ss_file)->required();
  ss_cmd->add_option("--r", ss_r)->required();
  ss_cmd->add_option("--e", ss_e)->required();
  ss_cmd->add_option("--trials", ss_trials)->required()->check(CLI::PositiveNumber);

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string ver_suite;
  std::string ver_list;
  bool ver_verbose = false;
  ver_cmd->add_option("--suite", ver_suite, "PERMMOD | PSL2 | PROP122 | CHARACTERS | PPDTABLE | ALL | SIGNATURE")
      ->required();
  ver_cmd->add_option("--signatures", ver_list, "Group list for the SIGNATURE suite");
  ver_cmd->add_flag("--verbose", ver_verbose, "Print check descriptions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*ppd_cmd) {
      require(!ppd_q.empty() && ppd_q.find_first_not_of("0123456789") == std::string::npos,
              ErrorCode::InvalidArgument, "q must be a positive integer");
      const BigInt q(ppd_q);
      const auto res = ppd::primitive_prime_divisors(q, ppd_e);
      for (const auto& r : res.primes) std::cout << r << "\n";
      if (!res.certain) std::cerr << "note: some primes certified probabilistically\n";
      return res.exists ? 0 : kExitEmpty;
    }
    if (*cls_cmd) {
      const auto file = harness::parse_mgrp(cls_file);
      const auto& gens = file.group.generators;
      require(cls_gen <= gens.size(), ErrorCode::InvalidArgument, "no generator " + std::to_string(cls_gen));
      const unsigned e = cls_e ? cls_e : static_cast<unsigned>(file.group.dim / 2);
      std::cout << classify::classify_element(gens[cls_gen - 1], e).report() << "\n";
      return 0;
    }
    if (*con_st) {
      const auto r = st_r ? std::optional<std::uint64_t>(st_r) : std::nullopt;
      const DenseMatrix g = classify::construct_stingray(st_q, st_d, r, st_det);
      const auto c = classify::classify_element(g, st_d / 2);
      write_single(g, out, c.report());
      std::cout << c.report() << "\n";
      return 0;
    }
    if (*con_dp) {
      const auto mod = groups::deleted_perm_module(dp_n, dp_p);
      harness::write_mgrp(mod.group(), out,
                          {"A" + std::to_string(dp_n) + " on the deleted permutation module over F" +
                           std::to_string(dp_p)});
      std::cout << "dim=" << mod.dim() << " ngens=" << mod.group().generators.size() << "\n";
      return 0;
    }
    if (*con_sl) {
      const auto mod = groups::sl2_module(sl_q, groups::Sl2Spec::parse(sl_module));
      harness::write_mgrp(mod.group(), out, {mod.group().label});
      std::cout << "dim=" << mod.dim() << " ngens=" << mod.group().generators.size() << "\n";
      return 0;
    }
    if (*con_cl) {
      const auto family = cl_family == "GL" ? groups::Classical::GL
                          : cl_family == "SL" ? groups::Classical::SL
                                              : groups::Classical::SP;
      const auto grp = groups::classical_generators(family, cl_d, cl_q);
      harness::write_mgrp(grp, out, {grp.label});
      std::cout << "dim=" << grp.dim << " ngens=" << grp.generators.size() << "\n";
      return 0;
    }
    if (*ord_cmd) {
      const auto file = harness::parse_mgrp(ord_file);
      const auto action = ord_proj ? groups::Action::Projective : groups::Action::Vectors;
      std::cout << groups::group_order(file.group, action, seed) << "\n";
      return 0;
    }
    if (*irr_cmd) {
      const auto file = harness::parse_mgrp(irr_file);
      const auto res = groups::is_irreducible(file.group, seed, irr_rounds);
      std::cout << res.to_string();
      if (res.witness) std::cout << " witness_dim=" << res.witness->dim();
      if (res.absolutely_irreducible) std::cout << " absolutely";
      std::cout << " rounds=" << res.rounds << "\n";
      return 0;
    }
    if (*sm_cmd) {
      const auto chi = parse_chi(sm_chi, sm_r);
      cyclo::MultiplicitySolution sol;
      try {
        sol = cyclo::solve_multiplicities(chi, sm_d, sm_r);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoSolution) throw;
        std::cout << "NO SOLUTION\n";
        return kExitEmpty;
      }
      std::cout << "mults=" << sol.to_string();
      if (sm_d % 2 == 0 && (sm_r == sm_d / 2 + 1 || sm_r == sm_d + 1))
        std::cout << " criterion=" << cyclo::to_string(cyclo::stingray_criterion(sm_r, sm_d, chi));
      std::cout << "\n";
      return 0;
    }
    if (*ss_cmd) {
      const auto file = harness::parse_mgrp(ss_file);
      std::cout << harness::sample_stingray(file.group, ss_r, ss_e, ss_trials, seed).to_string();
      return 0;
    }
    if (*ver_cmd) {
      harness::VerifyReport rep;
      if (ver_suite == "SIGNATURE") {
        require(!ver_list.empty(), ErrorCode::InvalidArgument, "SIGNATURE needs --signatures FILE");
        rep = harness::verify_signatures(harness::parse_signature_list(ver_list), seed);
      } else {
        rep = harness::verify_suite(harness::parse_suite(ver_suite));
      }
      std::cout << rep.to_string(ver_verbose);
      return rep.passed() ? 0 : kExitFail;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
