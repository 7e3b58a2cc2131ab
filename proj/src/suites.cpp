#include <numeric>

#include "stingray/error.hpp"
#include "stingray/harness.hpp"
#include "stingray/manifest.hpp"
#include "stingray/numtheory.hpp"
#include "stingray/ppd.hpp"

namespace stingray::harness {

namespace {

using poly::DensePoly;
namespace mf = manifest;

// ---- polynomial text ----

// "t^4+t^3+2t+1" with coefficients as field encodings.
std::string poly_text(const DensePoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (int i = f.degree(); i >= 0; --i) {
    const ff::Elt c = f[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!s.empty()) s += '+';
    if (c != 1 || i == 0) s += std::to_string(c);
    if (i >= 1) s += 't';
    if (i >= 2) s += '^' + std::to_string(i);
  }
  return s;
}

// "(t^4+t^3+t^2+t+1)(t+1)^4" in canonical factor order.
std::string factored_text(const DensePoly& f) {
  const auto fac = poly::factor(f);
  std::string s;
  if (fac.unit.encode() != 1) s += std::to_string(fac.unit.encode());
  for (const auto& [g, m] : fac.factors) {
    s += '(' + poly_text(g) + ')';
    if (m > 1) s += '^' + std::to_string(m);
  }
  return s.empty() ? "1" : s;
}

DensePoly t_pow_minus_one(const ff::FieldSpec& F, unsigned k) {
  return DensePoly::monomial(F, k) - DensePoly::constant(F, 1);
}

// (t^r - 1)/(t - 1)
DensePoly repunit(const ff::FieldSpec& F, unsigned r) { return t_pow_minus_one(F, r) / DensePoly::linear(F, 1); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

bool is_tag(const classify::ElementClassification& c, classify::Tag t) { return c.tag == t; }

// ---- PERMMOD ----

groups::Perm case_perm(const mf::PermCase& c) {
  std::vector<std::vector<unsigned>> cycles;
  auto cycle = [](unsigned from, unsigned len) {
    std::vector<unsigned> cyc(len);
    std::iota(cyc.begin(), cyc.end(), from);
    return cyc;
  };
  switch (c.shape) {
    case mf::PermShape::FullCycle:
    case mf::PermShape::CycleFixOne:
    case mf::PermShape::CycleFixed: cycles.push_back(cycle(1, c.r)); break;
    case mf::PermShape::TwoCycles:
      cycles.push_back(cycle(1, c.r));
      cycles.push_back(cycle(c.r + 1, c.r));
      break;
  }
  return groups::perm_from_cycles(c.n, cycles);
}

void run_permmod(VerifyReport& rep) {
  for (const auto& c : mf::kPermCases) {
    const std::string id = "PERMMOD." + std::string(c.id);
    const auto mod = groups::deleted_perm_module(c.n, c.p);
    const auto& F = mod.field();
    const unsigned d = mod.dim();
    const unsigned e = d / 2;
    const bool p_divides_n = c.n % c.p == 0;
    const groups::Perm sigma = case_perm(c);
    const DenseMatrix g = mod.map(sigma);
    const DenseMatrix y = groups::perm_matrix(F, sigma);

    rep.add(id + ".even", groups::cycle_type(sigma).to_string() + " lies in A_n", "yes", yes_no(groups::is_even(sigma)));
    rep.add(id + ".dim", "deleted module dimension n - delta", std::to_string(c.n - (p_divides_n ? 2 : 1)),
            std::to_string(d));

    // closed forms on V and on the permutation module Y
    const DensePoly f = repunit(F, c.r);
    const DensePoly lin = DensePoly::linear(F, 1);
    DensePoly on_v(F), on_y(F);
    switch (c.shape) {
      case mf::PermShape::FullCycle:
        on_v = f;
        on_y = t_pow_minus_one(F, c.n);
        break;
      case mf::PermShape::CycleFixOne:
        on_v = f;
        on_y = t_pow_minus_one(F, c.n - 1) * lin;
        break;
      case mf::PermShape::CycleFixed:
        on_v = f * poly::pow(lin, d + 1 - c.r);
        on_y = f * poly::pow(lin, c.n - c.r + 1);
        break;
      case mf::PermShape::TwoCycles:
        on_v = f * f;
        on_y = t_pow_minus_one(F, c.r) * t_pow_minus_one(F, c.r);
        break;
    }
    const DensePoly cv = mat::char_poly(g);
    const DensePoly cy = mat::char_poly(y);
    rep.add(id + ".charpoly-V", "characteristic polynomial on the deleted module", factored_text(on_v),
            factored_text(cv), cv == on_v);
    rep.add(id + ".charpoly-Y", "characteristic polynomial on the permutation module", factored_text(on_y),
            factored_text(cy), cy == on_y);

    const auto cls = classify::classify_element(g, e);
    rep.add(id + ".order", "element order", std::to_string(c.r), nt::to_string(cls.order));
    const bool r_prime = nt::is_prime(std::uint64_t{c.r});
    rep.add(id + ".ppd", "order is a (d/2)-ppd prime", yes_no(r_prime), yes_no(cls.ppd));
    const bool stingray = is_tag(cls, classify::Tag::Stingray);
    rep.add(id + ".verdict", "table verdict: (d/2)-stingray", yes_no(c.stingray), yes_no(stingray));
    rep.add(id + ".oracle", "oracle agrees with classifier", yes_no(stingray),
            yes_no(classify::is_stingray_oracle(g, e)));
  }
}

// ---- PSL2 ----

bool form_preserved(const DenseMatrix& g, const DenseMatrix& J) { return g.transpose() * J * g == J; }

void run_psl2(VerifyReport& rep) {
  std::uint64_t seed = mf::kSl2Seed;
  for (const auto& c : mf::kSl2Cases) {
    const std::string id = "PSL2." + std::string(c.id);
    const auto spec = groups::Sl2Spec::parse(std::string(c.module));
    const auto mod = groups::sl2_module(c.q, spec);
    const auto& F = mod.field();
    const auto& grp = mod.group();
    constexpr unsigned e = 2;

    // the arithmetic condition separating the two outcomes
    bool predicted = false;
    std::string condition;
    if (spec.kind == groups::Sl2Kind::SymCube) {
      predicted = c.q % 3 == 2;
      condition = "q=" + std::to_string(c.q % 3) + "mod3";
    } else {
      // q0 = p^(t-s); order-r elements are diagonalizable over F_q iff F_{q0^2} lies in F_q
      const unsigned twist = spec.t - spec.s;
      predicted = F.degree() % (2 * twist) != 0;
      condition = std::string(predicted ? "F_{q0^2}-not-in-F_q" : "F_{q0^2}-in-F_q");
    }
    rep.add(id + ".condition", "arithmetic criterion " + condition, yes_no(c.stingray_exists), yes_no(predicted));

    if (mod.gram()) {
      bool all = true;
      for (const auto& g : grp.generators) all = all && form_preserved(g, *mod.gram());
      rep.add(id + ".sp4", "generators preserve the alternating form", "yes", yes_no(all));
    }

    groups::RandomWalkState walk(grp, seed++);
    if (c.stingray_exists) {
      std::optional<DenseMatrix> witness;
      unsigned draws = 0;
      while (!witness && draws < mf::kSl2WitnessTrials) {
        ++draws;
        const auto h = power_to_order(walk.next(), c.r);
        if (h && is_tag(classify::classify_element(*h, e), classify::Tag::Stingray)) witness = h;
      }
      rep.add(id + ".witness", "order-" + std::to_string(c.r) + " STINGRAY(2) found by random search", "found",
              witness ? "found" : "none-in-" + std::to_string(draws));
      if (witness) {
        rep.add(id + ".witness-order", "witness order", std::to_string(c.r), nt::to_string(mat::matrix_order(*witness)));
        rep.add(id + ".witness-oracle", "oracle confirms the witness", "yes",
                yes_no(classify::is_stingray_oracle(*witness, e)));
        if (mod.gram()) {
          rep.add(id + ".witness-sp4", "witness preserves the form", "yes", yes_no(form_preserved(*witness, *mod.gram())));
        }
      }
    } else {
      unsigned samples = 0, draws = 0, stingrays = 0, diagonalizable = 0;
      while (samples < mf::kSl2NegativeSamples && draws < mf::kSl2NegativeMaxDraws) {
        ++draws;
        const auto h = power_to_order(walk.next(), c.r);
        if (!h) continue;
        ++samples;
        stingrays += is_tag(classify::classify_element(*h, e), classify::Tag::Stingray);
        diagonalizable += is_diagonalizable(*h);
      }
      rep.add(id + ".samples", "order-" + std::to_string(c.r) + " elements sampled",
              ">=" + std::to_string(mf::kSl2NegativeSamples), std::to_string(samples),
              samples >= mf::kSl2NegativeSamples);
      rep.add(id + ".stingray-count", "STINGRAY(2) among the samples", "0", std::to_string(stingrays));
      rep.add(id + ".diagonalizable", "samples diagonalizable over F_q", std::to_string(samples),
              std::to_string(diagonalizable));
      // certificate: all r-th roots of unity lie in F_q, so every semisimple
      // order-r element is diagonalizable and none has an irreducible quadratic block
      const auto roots = poly::roots(repunit(F, c.r));
      rep.add(id + ".certificate", "nontrivial " + std::to_string(c.r) + "-th roots of unity in F_q",
              std::to_string(c.r - 1), std::to_string(roots.size()));
      rep.notes.push_back(std::string(c.id) + ": " + std::to_string(samples) + " order-" + std::to_string(c.r) +
                          " samples from " + std::to_string(draws) + " draws");
    }
  }
}

// ---- PROP122 ----

// Partitions of n (parts descending) whose lcm equals order.
void partitions_with_order(unsigned n, unsigned max_part, unsigned order, std::vector<unsigned>& cur,
                           std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    unsigned l = 1;
    for (auto x : cur) l = std::lcm(l, x);
    if (l == order) out.push_back(cur);
    return;
  }
  for (unsigned k = std::min(n, max_part); k >= 1; --k) {
    if (order % k != 0) continue;
    cur.push_back(k);
    partitions_with_order(n - k, k, order, cur, out);
    cur.pop_back();
  }
}

void run_prop122(VerifyReport& rep) {
  const auto mod = groups::deleted_perm_module(mf::kProp122N, mf::kProp122P);
  const unsigned d = mod.dim();
  const unsigned e = d / 2;
  rep.add("PROP122.dim", "deleted module dimension", "12", std::to_string(d));

  std::vector<std::vector<unsigned>> types;
  std::vector<unsigned> cur;
  partitions_with_order(mf::kProp122N, mf::kProp122N, mf::kProp122Order, cur, types);
  unsigned checked = 0;
  for (const auto& type : types) {
    std::vector<std::vector<unsigned>> cycles;
    unsigned next = 1;
    for (auto len : type) {
      if (len > 1) {
        std::vector<unsigned> cyc(len);
        std::iota(cyc.begin(), cyc.end(), next);
        cycles.push_back(std::move(cyc));
      }
      next += len;
    }
    const auto sigma = groups::perm_from_cycles(mf::kProp122N, cycles);
    if (!groups::is_even(sigma)) continue;
    ++checked;
    const std::string ct = groups::cycle_type(sigma).to_string();
    const std::string id = "PROP122." + ct;
    const DenseMatrix g = mod.map(sigma);
    const auto cls = classify::classify_element(g, e);
    rep.add(id + ".order", "element order", std::to_string(mf::kProp122Order), nt::to_string(cls.order));
    rep.add(id + ".fixed-dim", "fixed space dimension", "<=" + std::to_string(mf::kProp122MaxFixed),
            std::to_string(cls.fixed_dim), cls.fixed_dim <= mf::kProp122MaxFixed);
    rep.add(id + ".stingray", "is a 6-stingray element", "no", yes_no(is_tag(cls, classify::Tag::Stingray)));
    rep.add(id + ".oracle", "oracle verdict", "no", yes_no(classify::is_stingray_oracle(g, e)));
  }
  // 9.1^5 and 9.3.1^2 are the only order-9 types in S_14, both even
  rep.add("PROP122.types", "even order-9 cycle types in S_14", "2", std::to_string(checked));
}

// ---- CHARACTERS ----

void run_characters(VerifyReport& rep) {
  using cyclo::CyclotomicInt;
  const auto sol = cyclo::solve_multiplicities(-CyclotomicInt::b5(), 8, 5);
  rep.add("CHARACTERS.b5-multiplicities", "eigenvalue multiplicities for chi = -b5, d = 8", "(2,1,2,2,1)",
          sol.to_string());

  const auto chi13 = CyclotomicInt::integer(13, -1) - CyclotomicInt::c13();
  const auto classes = cyclo::power_classes(chi13);
  rep.add("CHARACTERS.c13-classes", "power classes of chi = -1-c13", "3", std::to_string(classes.size()));
  const auto triv = cyclo::trivial_multiplicity(classes, 8, 13);
  std::string tm = std::to_string(triv.numerator());
  if (triv.denominator() != 1) tm += "/" + std::to_string(triv.denominator());
  rep.add("CHARACTERS.c13-trivial", "multiplicity of the trivial character", "0", tm);

  const auto v3 = cyclo::stingray_criterion(5, 8, CyclotomicInt::integer(5, 3));
  rep.add("CHARACTERS.r5-chi3", "criterion at r = 5, d = 8, chi = 3", "STINGRAY", cyclo::to_string(v3));
  const auto vm2 = cyclo::stingray_criterion(5, 8, CyclotomicInt::integer(5, -2));
  rep.add("CHARACTERS.r5-chi-2", "criterion at r = 5, d = 8, chi = -2", "not-STINGRAY", cyclo::to_string(vm2),
          vm2 != cyclo::Verdict::Stingray);
  const auto v1 = cyclo::stingray_criterion(3, 4, CyclotomicInt::integer(3, 1));
  rep.add("CHARACTERS.r3-chi1", "criterion at r = 3, d = 4, chi = 1", "STINGRAY", cyclo::to_string(v1));
}

// ---- PPDTABLE ----

void run_ppdtable(VerifyReport& rep) {
  const auto join = [](const ppd::PpdResult& res) {
    std::string s = "{";
    for (std::size_t i = 0; i < res.primes.size(); ++i) s += (i ? "," : "") + nt::to_string(res.primes[i]);
    return s + "}";
  };
  rep.add("PPDTABLE.q2-e6", "ppd primes of 2^6 - 1", "{}", join(ppd::primitive_prime_divisors(2, 6)));
  rep.add("PPDTABLE.q2-e4", "ppd primes of 2^4 - 1", "{5}", join(ppd::primitive_prime_divisors(2, 4)));

  unsigned pairs = 0, primes = 0, bad = 0;
  for (std::uint64_t q = 2; q <= mf::kPpdMaxQ; ++q) {
    if (!nt::prime_power_decompose(q)) continue;
    for (unsigned e = 2; e <= mf::kPpdMaxE; ++e) {
      const auto res = ppd::primitive_prime_divisors(q, e);
      ++pairs;
      for (const auto& r : res.primes) {
        ++primes;
        if (r % e != 1 || ppd::multiplicative_order(r, q) != e) ++bad;
      }
    }
  }
  rep.add("PPDTABLE.congruence", "r = 1 mod e and o_r(q) = e over " + std::to_string(pairs) + " pairs, " +
                                      std::to_string(primes) + " primes",
          "0", std::to_string(bad));

  for (const auto& c : mf::kConstructCases) {
    const std::string id = "PPDTABLE.construct-d" + std::to_string(c.d) + "-q" + std::to_string(c.q);
    const unsigned e = c.d / 2;
    const DenseMatrix g = classify::construct_stingray(c.q, c.d, std::nullopt, true);
    const auto cls = classify::classify_element(g, e);
    rep.add(id + ".tag", "classifier verdict", "STINGRAY(" + std::to_string(e) + ")", cls.tag_string());
    rep.add(id + ".oracle", "oracle verdict", "yes", yes_no(classify::is_stingray_oracle(g, e)));
    rep.add(id + ".det", "determinant", "1", std::to_string(g.det()));
  }

  const auto& x = mf::kConstructException;
  std::string got = "constructed";
  try {
    classify::construct_stingray(x.q, x.d);
  } catch (const Error& err) {
    got = std::string(stingray::to_string(err.code()));
  }
  rep.add("PPDTABLE.construct-d12-q2", "no 6-ppd prime for q = 2", "NoPpdPrime", got);
}

}  // namespace

VerifyReport verify_suite(Suite s) {
  VerifyReport rep;
  rep.suite = to_string(s);
  rep.notes.push_back("manifest " + std::string(mf::kManifestVersion));
  switch (s) {
    case Suite::PermMod: run_permmod(rep); break;
    case Suite::Psl2: run_psl2(rep); break;
    case Suite::Prop122: run_prop122(rep); break;
    case Suite::Characters: run_characters(rep); break;
    case Suite::PpdTable: run_ppdtable(rep); break;
    case Suite::All:
      run_permmod(rep);
      run_psl2(rep);
      run_prop122(rep);
      run_characters(rep);
      run_ppdtable(rep);
      break;
  }
  return rep;
}

}  // namespace stingray::harness
