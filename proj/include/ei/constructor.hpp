#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ei/edge_ideal.hpp"
#include "ei/suspension.hpp"

namespace ei {

// Serves connected graphs with im = 1 and reg = dim = r. Built-in entries
// cover r = 1 (K2) and r = 2 (C5); for larger r a candidate is loaded from
// the external directory (file L_<r>.json) or found by randomized search
// within the trial budget. Every graph is re-verified before being served.
class BaseGraphProvider {
public:
    BaseGraphProvider();

    void set_directory(std::string dir) { dir_ = std::move(dir); }
    void set_search_budget(long long trials) { budget_ = trials; }
    void set_seed(std::uint64_t seed) { seed_ = seed; }
    std::uint64_t seed() const { return seed_; }

    // Throws BaseUnavailable if no verified candidate exists for r.
    Graph get(int r, const FieldSpec& field);

private:
    struct Entry {
        Graph graph;
        std::string note;
    };
    std::map<int, Entry> registry_;
    std::string dir_;
    long long budget_ = 0;
    std::uint64_t seed_ = 0;
};

struct CertificateStep {
    SuspensionStep step;
    HilbertSeries predicted;
    HilbertSeries computed;
};

struct Certificate {
    int a = 0, r = 0, s = 0; // target triple
    Graph base;              // starting graph; replaying steps reproduces result
    Graph result;
    std::vector<CertificateStep> steps;
    InvariantReport report; // recomputed from scratch on the result
    FieldSpec field;
    std::uint64_t seed = 0;
};

// Star K_{1,s} with center 1 and leaves 2..s+1.
Graph star_graph(int s);

Graph base_gap_free(int r, BaseGraphProvider& provider, const FieldSpec& field);

// One suspension over the lexicographically least maximum independent set:
// deg h and dpow both increase by exactly 1, im and reg are unchanged, and
// the output is connected. All of this is verified by computation. If `log`
// is given, the applied step is appended to it.
Graph increase_deg_step(const Graph& g, const FieldSpec& field,
                        std::vector<CertificateStep>* log = nullptr);

// Drives the top coefficient of h to zero with suspensions (single ones or
// three-step edge rounds, depending on its sign and the parity of deg h),
// leaving im, reg, and dpow unchanged while deg h strictly decreases. Each
// intermediate series is checked against the symbolic prediction.
Graph decrease_deg_step(const Graph& g, const FieldSpec& field,
                        std::vector<CertificateStep>* log = nullptr);

// Builds a connected graph with induced matching number a, regularity r and
// deg h = s, together with the step log and a recomputed invariant report.
Certificate build(int a, int r, int s, BaseGraphProvider& provider, const FieldSpec& field);

} // namespace ei
