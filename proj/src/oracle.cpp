#include "ei/oracle.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "ei/suspension.hpp"

namespace ei {

namespace {

constexpr std::size_t kMaxOracleEdges = 24;

Vmask edge_mask(std::pair<int, int> e) { return vbit(e.first) | vbit(e.second); }

// True iff no edge of g meets two distinct edges of the matching.
bool induced_ok(const Graph& g, const std::vector<Vmask>& chosen) {
    for (auto e : g.edges()) {
        Vmask em = edge_mask(e);
        int touched = 0;
        for (Vmask c : chosen)
            if (em & c) ++touched;
        if (touched >= 2) return false;
    }
    return true;
}

void im_rec(const Graph& g, const std::vector<Vmask>& emasks, std::size_t idx,
            std::vector<Vmask>& chosen, Vmask used, int& best) {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (std::size_t k = idx; k < emasks.size(); ++k) {
        if (emasks[k] & used) continue;
        chosen.push_back(emasks[k]);
        if (induced_ok(g, chosen)) im_rec(g, emasks, k + 1, chosen, used | emasks[k], best);
        chosen.pop_back();
    }
}

void matching_rec_oracle(const std::vector<Vmask>& emasks, std::size_t idx, int size, Vmask used,
                         int& best) {
    best = std::max(best, size);
    for (std::size_t k = idx; k < emasks.size(); ++k) {
        if (emasks[k] & used) continue;
        matching_rec_oracle(emasks, k + 1, size + 1, used | emasks[k], best);
    }
}

void monomial_rec(const Graph& g, int v, int sum, int max_degree, Vmask support,
                  std::vector<long long>& counts) {
    if (v > g.vertex_count()) {
        for (auto [i, j] : g.edges())
            if (vhas(support, i) && vhas(support, j)) return;
        ++counts[static_cast<std::size_t>(sum)];
        return;
    }
    for (int e = 0; sum + e <= max_degree; ++e)
        monomial_rec(g, v + 1, sum + e, max_degree, e > 0 ? support | vbit(v) : support, counts);
}

std::string describe(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.vertex_count() << " edges=";
    for (auto [i, j] : g.edges()) out << "(" << i << "," << j << ")";
    return out.str();
}

std::string describe_set(Vmask m) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int v : vmembers(m)) {
        if (!first) out << ",";
        out << v;
        first = false;
    }
    out << "}";
    return out.str();
}

Vmask random_independent_subset(const Graph& g, Vmask allowed, std::mt19937_64& rng) {
    std::vector<int> members = vmembers(allowed);
    std::shuffle(members.begin(), members.end(), rng);
    Vmask s = 0;
    for (int v : members) {
        if (g.neighbors(v) & s) continue;
        if (rng() & 1) s |= vbit(v);
    }
    return s;
}

std::optional<Graph> sample_graph(std::mt19937_64& rng, int nmin, int nmax, double p) {
    std::uniform_int_distribution<int> pick_n(nmin, nmax);
    std::bernoulli_distribution coin(p);
    for (int attempt = 0; attempt < 100; ++attempt) {
        int n = pick_n(rng);
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (coin(rng)) edges.emplace_back(i, j);
        if (edges.empty()) continue;
        Graph g = Graph::from_edges(n, edges);
        if (has_isolated_vertex(g)) continue;
        return g;
    }
    return std::nullopt;
}

HilbertSeries series_from_report(const InvariantReport& rep) {
    HilbertSeries h;
    h.numerator = rep.hcoeffs;
    h.dpow = rep.dim;
    return h;
}

struct SuiteState {
    VerifyReport report;
    const FieldSpec* field = nullptr;

    void expect(bool ok, const std::string& check, const std::string& input,
                const std::string& expected, const std::string& got) {
        ++report.checks;
        if (!ok) report.failures.push_back({check, input, expected, got});
    }
};

void run_trial(SuiteState& st, std::uint64_t seed, long long t, int nmax) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t + 1)));
    const double probs[3] = {0.2, 0.4, 0.6};
    double p = probs[t % 3];
    std::optional<Graph> maybe = sample_graph(rng, 4, nmax, p);
    if (!maybe) return;
    const Graph g = *maybe;
    const std::string id = "trial " + std::to_string(t) + ": " + describe(g);
    const FieldSpec& field = *st.field;

    InvariantReport rep = invariant_report(g, field);
    st.expect(rep.im <= rep.reg && rep.reg <= rep.m, "sandwich", id,
              "im <= reg <= m",
              "im=" + std::to_string(rep.im) + " reg=" + std::to_string(rep.reg) +
                  " m=" + std::to_string(rep.m));

    // Brute-force oracles.
    if (g.edges().size() <= kMaxOracleEdges) {
        st.expect(im_bruteforce(g) == rep.im, "oracle_im", id, std::to_string(im_bruteforce(g)),
                  std::to_string(rep.im));
        st.expect(matching_bruteforce(g) == rep.m, "oracle_matching", id,
                  std::to_string(matching_bruteforce(g)), std::to_string(rep.m));
    }
    if (g.vertex_count() <= 10) {
        std::vector<long long> counted = hilbert_by_monomial_count(g, 6);
        std::vector<mpz_class> expanded = series_expansion(series_from_report(rep), 6);
        bool same = counted.size() == expanded.size();
        for (std::size_t i = 0; same && i < counted.size(); ++i)
            same = mpz_class(static_cast<long>(counted[i])) == expanded[i];
        st.expect(same, "oracle_hilbert", id, "monomial counts", "series expansion");
    }

    // Both homology backends on every induced subcomplex.
    if (g.vertex_count() <= 8) {
        bool agree = true;
        for (Vmask w = 1; w <= g.vertex_mask(); ++w) {
            SimplicialComplex k = independence_complex(induced_subgraph(g, w).graph);
            if (reduced_homology_ranks(k, field) != reduced_homology_ranks_snf(k)) {
                agree = false;
                break;
            }
        }
        st.expect(agree, "homology_backends", id, "field ranks = integer ranks", "mismatch");
    }

    // Suspension over a random independent set.
    {
        Vmask s = random_independent_subset(g, g.vertex_mask(), rng);
        InvariantReport reps = invariant_report(s_suspension(g, s), field);
        std::string sid = id + " S=" + describe_set(s);
        st.expect(reps.im == rep.im, "s_susp_im", sid, std::to_string(rep.im),
                  std::to_string(reps.im));
        st.expect(reps.reg == rep.reg, "s_susp_reg", sid, std::to_string(rep.reg),
                  std::to_string(reps.reg));
        HilbertSeries predicted = predict_s_suspension(series_from_report(rep), vcount(s));
        st.expect(series_from_report(reps) == predicted, "s_susp_series", sid,
                  predicted.numerator.to_string(), reps.hcoeffs.to_string());
    }

    // Suspension over a random edge and compatible independent set, when the
    // domination hypothesis holds.
    {
        std::uniform_int_distribution<std::size_t> pick(0, g.edges().size() - 1);
        auto e = g.edges()[pick(rng)];
        Vmask banned = g.neighbors(e.first) | g.neighbors(e.second) | edge_mask(e);
        Vmask s = random_independent_subset(g, g.vertex_mask() & ~banned, rng);
        if (check_domination_hypothesis(g, e, s)) {
            InvariantReport repe = invariant_report(edge_s_suspension(g, e, s), field);
            std::string sid = id + " e=(" + std::to_string(e.first) + "," +
                              std::to_string(e.second) + ") S=" + describe_set(s);
            st.expect(repe.im == rep.im, "edge_susp_im", sid, std::to_string(rep.im),
                      std::to_string(repe.im));
            if (rep.reg >= 2)
                st.expect(repe.reg == rep.reg, "edge_susp_reg", sid, std::to_string(rep.reg),
                          std::to_string(repe.reg));
            HilbertSeries predicted =
                predict_edge_s_suspension(series_from_report(rep), vcount(s));
            st.expect(series_from_report(repe) == predicted, "edge_susp_series", sid,
                      predicted.numerator.to_string(), repe.hcoeffs.to_string());
        }
    }

    // Additivity over a disjoint union with a second sample.
    if (std::optional<Graph> maybe2 = sample_graph(rng, 2, std::min(6, nmax), p)) {
        const Graph& g2 = *maybe2;
        InvariantReport rep2 = invariant_report(g2, field);
        InvariantReport repu = invariant_report(disjoint_union({g, g2}), field);
        std::string uid = id + " + " + describe(g2);
        st.expect(repu.im == rep.im + rep2.im && repu.reg == rep.reg + rep2.reg &&
                      repu.dim == rep.dim + rep2.dim && repu.s == rep.s + rep2.s,
                  "union_additivity", uid, "componentwise sums", "union invariants");
    }

    // Colon/sum regularity disjunction and Hilbert additivity at one vertex.
    {
        std::uniform_int_distribution<int> pick(1, g.vertex_count());
        int v = pick(rng);
        AdditivityReport ar = check_colon_sum_additivity(edge_ideal(g), v, field);
        std::string vid = id + " v=" + std::to_string(v);
        st.expect(ar.hilbert_ok, "colon_sum_hilbert", vid, "H = H_sum + t*H_colon", "mismatch");
        st.expect(ar.regularity_ok, "colon_sum_regularity", vid,
                  "reg(I) = reg(I:v)+1 or reg(I+v)",
                  "reg(I)=" + std::to_string(ar.reg_ideal) +
                      " reg(I:v)=" + std::to_string(ar.reg_colon) +
                      " reg(I+v)=" + std::to_string(ar.reg_added));
    }
}

} // namespace

int im_bruteforce(const Graph& g) {
    if (g.edges().size() > kMaxOracleEdges)
        throw TooLarge("induced matching oracle handles at most 24 edges");
    std::vector<Vmask> emasks;
    for (auto e : g.edges()) emasks.push_back(edge_mask(e));
    std::vector<Vmask> chosen;
    int best = 0;
    im_rec(g, emasks, 0, chosen, 0, best);
    return best;
}

int matching_bruteforce(const Graph& g) {
    if (g.edges().size() > kMaxOracleEdges)
        throw TooLarge("matching oracle handles at most 24 edges");
    std::vector<Vmask> emasks;
    for (auto e : g.edges()) emasks.push_back(edge_mask(e));
    int best = 0;
    matching_rec_oracle(emasks, 0, 0, 0, best);
    return best;
}

std::vector<long long> hilbert_by_monomial_count(const Graph& g, int max_degree) {
    if (g.vertex_count() > 10 || max_degree > 8)
        throw TooLarge("monomial-count oracle handles n <= 10 and degree <= 8");
    if (max_degree < 0)
        throw InvalidParameter("degree must be nonnegative");
    std::vector<long long> counts(static_cast<std::size_t>(max_degree) + 1, 0);
    monomial_rec(g, 1, 0, max_degree, 0, counts);
    return counts;
}

VerifyReport verify_lemma_suite(std::uint64_t seed, long long trials, int nmax,
                                const FieldSpec& field) {
    if (nmax < 4 || nmax > 10)
        throw InvalidParameter("suite needs 4 <= nmax <= 10");
    SuiteState st;
    st.report.seed = seed;
    st.report.trials = trials;
    st.field = &field;
    for (long long t = 0; t < trials; ++t) {
        try {
            run_trial(st, seed, t, nmax);
        } catch (const std::exception& ex) {
            st.report.failures.push_back(
                {"exception", "trial " + std::to_string(t), "no exception", ex.what()});
        }
    }
    return st.report;
}

std::string verify_report_to_json(const VerifyReport& rep) {
    nlohmann::ordered_json j;
    j["seed"] = rep.seed;
    j["trials"] = rep.trials;
    j["checks"] = rep.checks;
    j["failures"] = nlohmann::ordered_json::array();
    for (const VerifyFailure& f : rep.failures)
        j["failures"].push_back({{"check", f.check},
                                 {"input", f.input},
                                 {"expected", f.expected},
                                 {"got", f.got}});
    return j.dump(2) + "\n";
}

} // namespace ei
