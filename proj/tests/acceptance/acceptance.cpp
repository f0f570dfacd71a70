// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"

using namespace skewminor;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Records the first failure and keeps counting.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  bool ok() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string summary(const std::string& detail) const {
    if (ok()) return detail;
    return detail + "; " + std::to_string(failures_) + " violation(s), first: " + first_;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

std::string str(std::size_t v) { return std::to_string(v); }

const FieldSpec Q = FieldSpec::rationals();

bool same_up_to_global_sign(const std::vector<int>& a, const std::vector<int>& b) {
  if (a == b) return true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != -b[i]) return false;
  }
  return true;
}

SkewMatrix sign_pattern(const SkewMatrix& a, std::uint64_t bits) {
  LabeledMatrix m = a.matrix();
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j, ++k) {
      if ((bits >> k) & 1U) {
        m.set(i, j, -a(i, j));
        m.set(j, i, a(i, j));
      }
    }
  }
  return SkewMatrix(m);
}

bool infinity_equivalent(const SkewMatrix& a, const SkewMatrix& b) {
  return hl_equivalent(extend_infinity(a), extend_infinity(b), 4).equivalent;
}

// ---------------------------------------------------------------------------

Outcome skew_cycles() {
  Tally t;
  for (std::size_t n : {6, 8}) {
    const auto a = principal_minors(skew_cycle(n, CycleVariant::A), n);
    const auto b = principal_minors(skew_cycle(n, CycleVariant::B), n);
    std::size_t proper = 0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
      const auto& ea = a.entries()[i];
      const auto& eb = b.entries()[i];
      if (ea.subset == Subset::full(n)) continue;
      ++proper;
      t.check(ea.value == eb.value, "n=" + str(n) + " minor differs on a proper subset");
    }
    t.check(proper == (std::size_t{1} << n) - 1, "n=" + str(n) + " sweep incomplete");
    t.check(a.value(Subset::full(n)).is_zero(), "det(A_" + str(n) + ") != 0");
    t.check(b.value(Subset::full(n)) == FieldElement(Q, 4L), "det(B_" + str(n) + ") != 4");
  }
  return {t.ok(), t.summary("n=6,8: proper minors equal, det(A)=0, det(B)=4")};
}

Outcome symmetric_cycles() {
  Tally t;
  std::string values;
  for (std::size_t n : {4, 5}) {
    const auto a = sym_cycle(n, CycleVariant::A);
    const auto b = sym_cycle(n, CycleVariant::B);
    for (std::uint64_t bits = 0; bits + 1 < (std::uint64_t{1} << n); ++bits) {
      t.check(principal_minor(a, Subset(bits)) == principal_minor(b, Subset(bits)), "proper minor differs");
    }
    const auto da = determinant(a);
    const auto db = determinant(b);
    t.check(!(da == db), "det(A_" + str(n) + ") == det(B_" + str(n) + ")");
    t.check(da == oracle::leibniz_det(a) && db == oracle::leibniz_det(b), "determinant disagrees with Leibniz");
    if (n == 4) t.check(da.is_zero() && db == FieldElement(Q, 4L), "n=4 values are not 0 vs 4");
    values += " n=" + str(n) + ": " + da.to_string() + " vs " + db.to_string();
  }
  return {t.ok(), t.summary("proper minors equal;" + values)};
}

Outcome witness_round_trip() {
  Tally t;
  const std::uint64_t primes[] = {5, 7, 11, 13};
  std::size_t trials = 0;
  std::size_t transposed = 0;
  SplitMix64 rng(20240601);
  for (std::uint64_t seed = 0; trials < 240; ++seed) {
    const FieldSpec spec = FieldSpec::prime(primes[seed % 4]);
    const std::size_t n = 4 + rng.below(5);
    const auto a = random_dense(spec, n, seed);
    if (hl_indecomposable(a).kind != ClanKind::hl_indecomposable) continue;
    Witness planted{std::vector<int>(n), rng.below(2) == 1};
    for (auto& s : planted.signs) s = rng.below(2) == 1 ? -1 : 1;
    const auto b = apply_witness(a, planted);
    ++trials;
    transposed += planted.transposed ? 1 : 0;
    try {
      const auto w = recover_witness(a, b);
      t.check(apply_witness(a, w) == b, "verification does not reproduce B");
      t.check(w.transposed == planted.transposed && same_up_to_global_sign(w.signs, planted.signs), "unexpected witness");
    } catch (const Error& e) {
      t.check(false, std::string("recover_witness threw: ") + e.what());
    }
  }
  return {t.ok(), t.summary(str(trials) + " trials (" + str(transposed) + " transposed), 100% recovered")};
}

Outcome exhaustive_gf3() {
  Tally t;
  const auto F = FieldSpec::prime(3);
  std::vector<SkewMatrix> all;
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    std::vector<long> upper(6);
    for (std::size_t k = 0; k < 6; ++k) upper[k] = (bits >> k) & 1U ? 2 : 1;
    all.push_back(SkewMatrix::from_upper(F, 4, upper));
  }
  std::vector<MinorTable> tables;
  std::vector<bool> indecomposable;
  for (const auto& a : all) {
    tables.push_back(principal_minors(a, 4));
    indecomposable.push_back(hl_indecomposable(a).kind == ClanKind::hl_indecomposable);
  }
  std::size_t pairs = 0;
  std::size_t indec = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    indec += indecomposable[i] ? 1 : 0;
    if (!indecomposable[i]) continue;
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (!(tables[i] == tables[j])) continue;
      ++pairs;
      const auto w = diag_similar_up_to_transposition(all[i], all[j]);
      t.check(w.has_value() && apply_witness(all[i], *w) == all[j], "equivalent pair without a verifying witness");
    }
  }
  t.check(pairs > 0, "no qualifying pairs");
  return {t.ok(), t.summary("64 matrices, " + str(indec) + " HL-indecomposable, " + str(pairs) + " ordered pairs all witnessed")};
}

Outcome unimodular_criterion() {
  Tally t;
  std::size_t exhaustive = 0;
  std::size_t unimodular = 0;
  // n = 5 with the first row gauged to +1: D A D can make every a_1j = 1.
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    std::vector<long> upper{1, 1, 1, 1};
    for (std::size_t k = 0; k < 6; ++k) upper.push_back((bits >> k) & 1U ? -1 : 1);
    const auto a = SkewMatrix::from_upper(Q, 5, upper);
    const bool pu = is_principally_unimodular(a);
    t.check(pu == wesp_check(a), "disagreement at n=5");
    ++exhaustive;
    unimodular += pu ? 1 : 0;
  }
  SplitMix64 rng(7);
  std::size_t sampled = 0;
  for (; sampled < 300; ++sampled) {
    const std::size_t n = 6 + rng.below(3);
    std::vector<long> upper(n * (n - 1) / 2);
    for (auto& v : upper) v = rng.below(2) == 1 ? -1 : 1;
    // Every other sample is D (all-ones upper) D, which is unimodular.
    if (sampled % 2 == 0) {
      std::fill(upper.begin(), upper.end(), 1);
      std::vector<int> d(n);
      for (auto& s : d) s = rng.below(2) == 1 ? -1 : 1;
      std::size_t k = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++k) upper[k] *= d[i] * d[j];
      }
    }
    const auto a = SkewMatrix::from_upper(Q, n, upper);
    const bool pu = is_principally_unimodular(a);
    t.check(pu == wesp_check(a), "disagreement at n=" + str(n));
    unimodular += pu ? 1 : 0;
  }
  return {t.ok(), t.summary(str(exhaustive) + " exhaustive (n=5) + " + str(sampled) + " random (n=6..8), " + str(unimodular) +
                                " unimodular, 0 disagreements")};
}

Outcome flip_counterexample() {
  Tally t;
  oracle::Rng rng(6);
  std::size_t instances = 0;
  std::size_t not_similar = 0;
  for (; instances < 30; ++instances) {
    const std::size_t n = 5 + instances % 4;
    const std::size_t k = 2 + instances % (n - 3);
    const FieldSpec spec = instances % 2 == 0 ? Q : FieldSpec::prime(13);
    const auto a = oracle::planted_hl_clan(spec, n, k, rng);
    Subset x;
    for (std::size_t i = 0; i < k; ++i) x = x.with(i);
    t.check(is_dense(a) && is_hl_clan(a, x) && !is_trivial_hl_clan(x, n), "planted set is not a nontrivial HL-clan");
    t.check(hl_indecomposable(a).kind == ClanKind::hl_clan, "planted matrix is HL-indecomposable");
    const auto b = flip_on_set(a, x);
    t.check(principal_minors(a, n) == principal_minors(b, n), "flip changed a principal minor");
    const auto w = diag_similar_up_to_transposition(a, b);
    const bool exhaustive = oracle::similar_by_exhaustion(a, b);
    t.check(w.has_value() == exhaustive, "similarity verdict disagrees with exhaustive search");
    if (!w && !exhaustive) ++not_similar;
  }
  t.check(not_similar > 0, "no verified non-similar instance");
  return {t.ok(), t.summary(str(instances) + " instances, full minor tables equal, " + str(not_similar) +
                                " verified not similar up to transposition")};
}

Outcome pfaffian_identity() {
  Tally t;
  oracle::Rng rng(7);
  std::size_t count = 0;
  for (const FieldSpec& spec : {Q, FieldSpec::prime(7)}) {
    for (int i = 0; i < 60; ++i, ++count) {
      const std::size_t n = 2 * (1 + i % 5);
      const auto a = oracle::random_skew(spec, n, rng, i % 3 != 0);
      const auto pf = pfaffian(a);
      t.check(pf * pf == determinant(a), "pf^2 != det at n=" + str(n));
    }
  }
  return {t.ok(), t.summary(str(count) + " matrices over Q and GF(7), n in {2..10}")};
}

Outcome reconstruction() {
  Tally t;
  const auto F = FieldSpec::prime(7);
  std::size_t instances = 0;
  std::size_t representatives = 0;
  for (std::uint64_t seed = 1000; instances < 50; ++seed) {
    const std::size_t n = 4 + seed % 4;
    const auto a = random_dense(F, n, seed);
    if (hl_indecomposable(a).kind != ClanKind::hl_indecomposable) continue;
    ++instances;
    const auto solutions = reconstruct_from_minors(principal_minors(a, 4), F);
    t.check(!solutions.empty(), "empty reconstruction");
    for (const auto& r : solutions) {
      ++representatives;
      t.check(diag_similar_up_to_transposition(r, a).has_value(), "representative not similar to the source");
    }
  }
  const auto fixture = SkewMatrix::from_upper(Q, 4, {1, 1, 1, 1, 2, 3});
  const auto two = reconstruct_from_minors(principal_minors(fixture, 4), Q);
  t.check(two.size() == 2, "fixture gives " + str(two.size()) + " representatives");
  if (two.size() == 2) {
    t.check(two[0] == fixture, "first fixture representative");
    t.check(two[1] == SkewMatrix::from_upper(Q, 4, {1, 1, 1, -1, -2, -3}), "second fixture representative");
  }
  return {t.ok(), t.summary(str(instances) + " GF(7) instances, " + str(representatives) +
                                " representatives all similar; fixture gives the two expected matrices")};
}

// Criterion 9 pieces. Each returns the number of instances examined.

std::size_t clan_closure_laws(Tally& t, oracle::Rng& rng) {
  std::size_t instances = 0;
  for (; instances < 100; ++instances) {
    const std::size_t n = 4 + instances % 4;
    const LabeledMatrix a = oracle::planted_clans(FieldSpec::prime(3), n, rng, instances % 2 == 0);
    const auto clans = oracle::all_clans(a);
    for (Subset x : clans) {
      for (Subset y : clans) {
        t.check(oracle::clan_by_definition(a, x & y), "intersection of clans");
        if (!(x & y).empty()) t.check(oracle::clan_by_definition(a, x | y), "union of overlapping clans");
        if (!(x - y).empty()) t.check(oracle::clan_by_definition(a, y - x), "difference of clans");
      }
      const Subset y(rng() & ((std::uint64_t{1} << n) - 1));
      if (!y.empty()) {
        std::uint64_t local = 0;
        std::size_t k = 0;
        for (std::size_t i : y.members()) {
          if (x.contains(i)) local |= std::uint64_t{1} << k;
          ++k;
        }
        t.check(is_clan(principal_submatrix(a, y), Subset(local)), "restriction of a clan");
      }
      if (x.empty()) continue;
      const auto members = x.members();
      for (Subset inner : oracle::all_clans(principal_submatrix(a, x))) {
        std::vector<std::size_t> lifted;
        for (std::size_t i : inner.members()) lifted.push_back(members[i]);
        t.check(is_clan(a, Subset::from_positions(lifted)), "clan of a clan");
      }
    }
  }
  return instances;
}

std::size_t scaled_hl_clans(Tally& t, oracle::Rng& rng) {
  const auto F = FieldSpec::prime(13);
  std::size_t instances = 0;
  for (; instances < 100; ++instances) {
    const std::size_t n = 4 + instances % 3;
    const LabeledMatrix a = instances % 2 == 0 ? LabeledMatrix(oracle::planted_hl_clan(F, n, 2, rng)) : oracle::random_general(F, n, rng);
    LabeledMatrix dad = a;
    std::vector<FieldElement> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(oracle::random_element(F, rng, true));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) dad.set(i, j, d[i] * a(i, j) * d[j]);
    }
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      t.check(is_hl_clan(a, Subset(bits)) == is_hl_clan(dad, Subset(bits)), "DAD changes an HL-clan");
    }
  }
  return instances;
}

std::size_t constant_row(Tally& t, oracle::Rng& rng) {
  const auto F = FieldSpec::prime(3);
  std::size_t instances = 0;
  for (; instances < 100; ++instances) {
    const std::size_t n = 4 + instances % 3;
    const std::size_t v = rng() % n;
    LabeledMatrix a = instances % 2 == 0 ? oracle::random_general(F, n, rng) : LabeledMatrix(oracle::planted_clans(F, n, rng, false));
    const FieldElement lambda = oracle::random_element(F, rng, true);
    const FieldElement kappa = oracle::random_element(F, rng, true);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == v) continue;
      a.set(v, j, lambda);
      a.set(j, v, kappa);
    }
    const bool hl = hl_indecomposable(a).kind == ClanKind::hl_clan;
    const bool rest = find_nontrivial_clan(principal_submatrix(a, Subset::full(n).without(v))).kind == ClanKind::clan;
    t.check(hl == rest, "constant row: HL-decomposable != rest decomposable");
  }
  return instances;
}

std::size_t peeling(Tally& t, oracle::Rng& rng) {
  std::size_t instances = 0;
  while (instances < 100) {
    const std::size_t n = 5 + instances % 4;
    const auto a = oracle::random_skew(FieldSpec::prime(3), n, rng, false);
    if (is_separable(a).kind == ClanKind::separable) continue;
    ++instances;
    const std::size_t x = peel_inseparable(a);
    t.check(is_separable(principal_submatrix(a, Subset::full(n).without(x))).kind == ClanKind::inseparable, "peeled matrix is separable");
  }
  return instances;
}

/// Sign classes are clans, an inseparable A splits E or D, and an
/// indecomposable A admits only B = A or A^t.
std::pair<std::size_t, std::size_t> sign_classes(Tally& t, oracle::Rng& rng) {
  const auto F = FieldSpec::prime(7);
  std::size_t matrices = 0;
  std::size_t indecomposable = 0;
  while (matrices < 100 || indecomposable < 100) {
    const std::size_t n = 3 + matrices % 3;
    const auto a = matrices % 3 == 2 ? oracle::planted_clans(F, n, rng, true) : oracle::random_skew(F, n, rng);
    ++matrices;
    const bool indec = find_nontrivial_clan(a).kind == ClanKind::indecomposable;
    const bool inseparable = is_separable(a).kind == ClanKind::inseparable;
    indecomposable += indec ? 1 : 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * (n - 1) / 2)); ++bits) {
      const auto b = sign_pattern(a, bits);
      if (!infinity_equivalent(a, b)) continue;
      t.check(check_lopez(a, b), "sign class is not a clan");
      if (inseparable) {
        t.check(equivalence_classes(a, b, SignRelation::E).classes.size() >= 2 ||
                    equivalence_classes(a, b, SignRelation::D).classes.size() >= 2,
                "inseparable A with a single E class and a single D class");
      }
      if (indec) t.check(b == a || b == a.transpose(), "B is neither A nor A^t");
    }
  }
  return {matrices, indecomposable};
}

std::size_t three_point(Tally& t, oracle::Rng& rng) {
  const auto F = FieldSpec::prime(5);
  std::size_t instances = 0;
  while (instances < 100) {
    const FieldElement aij = oracle::random_element(F, rng, true);
    const FieldElement aik = oracle::random_element(F, rng, true);
    const FieldElement ajk = oracle::random_element(F, rng, true);
    const auto a = SkewMatrix::from_upper(F, 3, std::vector<FieldElement>{aij, aik, ajk});
    const auto b = SkewMatrix::from_upper(F, 3, std::vector<FieldElement>{aij, -aik, -ajk});
    if (!(determinant(extend_infinity(a)) == determinant(extend_infinity(b)))) continue;
    ++instances;
    t.check(a(0, 2) == a(1, 2) && b(0, 2) == b(1, 2), "three-point entries differ");
  }
  return instances;
}

Outcome structural_suite() {
  Tally t;
  oracle::Rng rng(9);
  const auto p6 = clan_closure_laws(t, rng);
  const auto mc = scaled_hl_clans(t, rng);
  const auto ic = constant_row(t, rng);
  const auto mo = peeling(t, rng);
  const auto [lb, indec] = sign_classes(t, rng);
  const auto ih = three_point(t, rng);
  return {t.ok(), t.summary("clan laws " + str(p6) + ", DAD HL-clans " + str(mc) + ", constant row " + str(ic) + ", peeling " + str(mo) +
                                ", sign classes " + str(lb) + ", indecomposable dichotomy " + str(indec) + ", three-point " + str(ih) + " instances; " +
                                str(t.checks()) + " checks")};
}

Outcome performance() {
  using clock = std::chrono::steady_clock;
  const auto a = random_dense(FieldSpec::prime(7), 16, 16);
  const auto t0 = clock::now();
  const auto table = principal_minors(a, 16, {1});
  const double sweep = std::chrono::duration<double>(clock::now() - t0).count();
  const auto t1 = clock::now();
  const auto report = hl_indecomposable(a);
  const double search = std::chrono::duration<double>(clock::now() - t1).count();
  const bool ok = table.entries().size() == 65536 && sweep < 60.0 && search < 60.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "n=16 GF(7): 65536 minors in %.2f s (1 thread), hl_indecomposable (%s) in %.3f s", sweep,
                to_string(report.kind).c_str(), search);
  return {ok, buf};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "skew cycle pair", 5.0, skew_cycles},
      {2, "symmetric cycle pair", 0.0, symmetric_cycles},
      {3, "sign witness round trip", 30.0, witness_round_trip},
      {4, "exhaustive GF(3) n=4", 10.0, exhaustive_gf3},
      {5, "order-4 unimodularity test", 0.0, unimodular_criterion},
      {6, "flip counterexample", 0.0, flip_counterexample},
      {7, "Pfaffian identity", 0.0, pfaffian_identity},
      {8, "reconstruction round trip", 0.0, reconstruction},
      {9, "structural properties", 0.0, structural_suite},
      {10, "performance envelope", 120.0, performance},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    std::printf("[%s] criterion %2d %-28s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, seconds, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
