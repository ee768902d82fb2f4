#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ei/edge_ideal.hpp"

namespace ei {

struct VerifyFailure {
    std::string check;    // name of the violated property
    std::string input;    // witness
    std::string expected;
    std::string got;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    long long trials = 0;
    long long checks = 0;
    std::vector<VerifyFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Exhaustive induced-matching search over edge subsets; |E| <= 24.
int im_bruteforce(const Graph& g);

// Exhaustive matching search over edge subsets; |E| <= 24.
int matching_bruteforce(const Graph& g);

// Hilbert function of R/I(G) by counting exponent vectors whose support
// contains no edge; n <= 10, max_degree <= 8.
std::vector<long long> hilbert_by_monomial_count(const Graph& g, int max_degree);

// Randomized check of the suspension, additivity and regularity properties
// on graphs with up to nmax vertices (nmax <= 10), cross-checked against the
// brute-force oracles and both homology backends. Deterministic in seed.
VerifyReport verify_lemma_suite(std::uint64_t seed, long long trials, int nmax,
                                const FieldSpec& field);

std::string verify_report_to_json(const VerifyReport& rep);

} // namespace ei
