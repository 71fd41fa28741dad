#pragma once

#include "ppg/game.hpp"
#include "ppg/oracle.hpp"
#include "ppg/reductions.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ppg {

struct CheckResult {
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> notes;  // first failures, capped

    bool ok() const { return failures == 0; }
    void fail(const std::string& what) {
        ++failures;
        if (notes.size() < 20) notes.push_back(what);
    }
};

// Brute-force referees, independent of every game solver.
bool cnf_satisfiable(const CnfFormula& f);
bool qbf_true(const QbfFormula& q);
bool cover_exists(const CoverInstance& c);
MMResult avoid_true_referee(const AvoidTrueFormula& d);

// Oracle outcomes of the witness catalog against their labels.
CheckResult verify_witnesses();

// The component-pair identities against the oracle and their table cells.
CheckResult verify_union_identities();

// Random pairs: the union's oracle outcome must sit in the looked-up cell.
CheckResult verify_union_soundness(int samples = 1000, int max_component = 8,
                                   std::uint64_t seed = 2024);

// Solver-vs-oracle equivalence.  Families and their scale parameter:
//   height2-single  exhaustive height-<=2 pointed posets, scale = max n (7)
//   all-tops        exhaustive height-<=2 posets, scale = max n (6)
//   chains-ws1      chain partitions x singleton subsets, scale = max n (8)
//   chains-h2-ws2   height-<=2 chains, <= 3 sets of size <= 2, scale = max n (8)
//   dp              random games, scale = samples (500)
//   chains-ws2      random chain games with sets of size <= 2, scale = samples (500)
CheckResult verify_solver_family(const std::string& family, int scale = 0);

// Reduction equivalences at micro scale, per the theorems' statements.
CheckResult verify_sat_micro();
CheckResult verify_setcover_micro();
CheckResult verify_qbf_micro();
CheckResult verify_avoidtrue_micro();

// Lemma spot checks on random instances.
CheckResult verify_lemma1(int samples = 200, std::uint64_t seed = 7);
CheckResult verify_lemma2(int samples = 100, std::uint64_t seed = 11);
CheckResult verify_reduc_ws1(int samples = 100, std::uint64_t seed = 13);

}  // namespace ppg
