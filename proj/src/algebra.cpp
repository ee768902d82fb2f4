#include "ei/algebra.hpp"

#include <algorithm>
#include <string>

namespace ei {

namespace {

void sort_generators(std::vector<Vmask>& gens) {
    std::sort(gens.begin(), gens.end(), [](Vmask a, Vmask b) {
        int ca = vcount(a), cb = vcount(b);
        if (ca != cb) return ca < cb;
        return a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

// keep only inclusion-minimal supports
void minimalize(std::vector<Vmask>& gens) {
    sort_generators(gens);
    std::vector<Vmask> keep;
    for (Vmask g : gens) {
        bool redundant = false;
        for (Vmask h : keep)
            if ((h & ~g) == 0) { redundant = true; break; }
        if (!redundant) keep.push_back(g);
    }
    gens = std::move(keep);
}

} // namespace

SquarefreeMonomialIdeal SquarefreeMonomialIdeal::make(int ambient, std::vector<Vmask> gens) {
    if (ambient < 0 || ambient > kMaxVertices)
        throw CapacityExceeded("ambient variable count out of range");
    Vmask amask = ambient == 0 ? 0 : (~Vmask{0} >> (64 - ambient));
    for (Vmask g : gens) {
        if (g == 0)
            throw IdealImproper("generator with empty support (unit ideal)");
        if (g & ~amask)
            throw InvalidVertex("generator uses a variable outside the ambient ring");
    }
    minimalize(gens);
    SquarefreeMonomialIdeal out;
    out.ambient = ambient;
    out.generators = std::move(gens);
    return out;
}

HilbertSeries hilbert_series_of_complex(const SimplicialComplex& k) {
    FVector fv = f_vector(k);
    int d = static_cast<int>(fv.f.size()) - 1; // max face cardinality
    IntegerPolynomial num;
    for (int i = 0; i <= d; ++i) {
        // f_{i-1} λ^i (1-λ)^{d-i}
        std::vector<mpz_class> shift(static_cast<std::size_t>(i) + 1, 0);
        shift.back() = static_cast<long>(fv.f[static_cast<std::size_t>(i)]);
        num = num + IntegerPolynomial(std::move(shift)).times_one_minus_lambda(d - i);
    }
    HilbertSeries h;
    h.numerator = std::move(num);
    h.dpow = d;
    if (h.numerator.at_one() == 0)
        throw Error("internal: Stanley-Reisner numerator vanished at 1");
    return h;
}

HPolynomial h_polynomial(const HilbertSeries& h) {
    HPolynomial out;
    out.coeffs = h.numerator;
    out.degree = h.numerator.degree();
    return out;
}

std::vector<mpz_class> series_expansion(const HilbertSeries& h, int max_degree) {
    if (max_degree < 0)
        throw InvalidParameter("negative expansion degree");
    std::vector<mpz_class> out(static_cast<std::size_t>(max_degree) + 1, 0);
    const auto& num = h.numerator.coeffs();
    for (int t = 0; t <= max_degree; ++t) {
        mpz_class v = 0;
        for (int i = 0; i <= t && i < static_cast<int>(num.size()); ++i) {
            if (h.dpow == 0) {
                if (i == t) v += num[static_cast<std::size_t>(i)];
            } else {
                mpz_class bin;
                mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(t - i + h.dpow - 1),
                             static_cast<unsigned long>(h.dpow - 1));
                v += num[static_cast<std::size_t>(i)] * bin;
            }
        }
        out[static_cast<std::size_t>(t)] = v;
    }
    return out;
}

SimplicialComplex stanley_reisner_complex(const SquarefreeMonomialIdeal& ideal) {
    for (Vmask g : ideal.generators)
        if (g == 0) throw IdealImproper("unit ideal has no Stanley-Reisner complex");
    // faces = subsets containing no generator support; DFS adds vertices in
    // increasing order so each face is visited exactly once
    std::vector<Vmask> faces;
    struct Frame { Vmask face; Vmask cands; };
    Vmask all = ideal.ambient == 0 ? 0 : (~Vmask{0} >> (64 - ideal.ambient));
    std::vector<Frame> stack = {{0, all}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        faces.push_back(f.face);
        Vmask cands = f.cands;
        while (cands) {
            int v = vlowest(cands);
            cands &= cands - 1;
            Vmask cand = f.face | vbit(v);
            bool bad = false;
            for (Vmask g : ideal.generators)
                if (vhas(g, v) && (g & ~cand) == 0) { bad = true; break; }
            if (!bad) stack.push_back({cand, cands});
        }
    }
    return SimplicialComplex::from_facets(ideal.ambient, faces);
}

HilbertSeries hilbert_series_of_ideal(const SquarefreeMonomialIdeal& ideal) {
    return hilbert_series_of_complex(stanley_reisner_complex(ideal));
}

SquarefreeMonomialIdeal colon_by_variable(const SquarefreeMonomialIdeal& ideal, int v) {
    if (v < 1 || v > ideal.ambient)
        throw VariableAbsent("variable out of range: " + std::to_string(v));
    bool appears = false;
    for (Vmask g : ideal.generators)
        if (vhas(g, v)) { appears = true; break; }
    if (!appears)
        throw VariableAbsent("variable x" + std::to_string(v) + " appears in no minimal generator");
    std::vector<Vmask> gens;
    for (Vmask g : ideal.generators) {
        Vmask h = g & ~vbit(v);
        if (h == 0)
            throw IdealImproper("colon by a variable generator yields the unit ideal");
        gens.push_back(h);
    }
    return SquarefreeMonomialIdeal::make(ideal.ambient, std::move(gens));
}

SquarefreeMonomialIdeal add_variable(const SquarefreeMonomialIdeal& ideal, int v) {
    if (v < 1 || v > ideal.ambient)
        throw VariableAbsent("variable out of range: " + std::to_string(v));
    std::vector<Vmask> gens = ideal.generators;
    gens.push_back(vbit(v));
    return SquarefreeMonomialIdeal::make(ideal.ambient, std::move(gens));
}

namespace {

constexpr int kHochsterAmbientCap = 30;

// Hochster subset scan over W ⊆ {1..ambient}. For each W whose restricted
// Stanley-Reisner complex is not an obvious cone, reports every nonzero
// reduced homology rank via emit(|W|, k, rank).
template <class Emit>
void hochster_scan(const SquarefreeMonomialIdeal& ideal, const FieldSpec& field, Emit&& emit) {
    if (ideal.is_zero()) throw IdealZero("Betti numbers of the zero ideal are not defined here");
    if (ideal.ambient > kHochsterAmbientCap)
        throw TooLarge("Hochster scan over more than 2^" + std::to_string(kHochsterAmbientCap) +
                       " subsets is not attempted");
    const int m = ideal.ambient;
    const bool quadratic = std::all_of(ideal.generators.begin(), ideal.generators.end(),
                                       [](Vmask g) { return vcount(g) == 2; });
    // adjacency masks for the quadratic (edge ideal) fast path
    std::vector<Vmask> adj(static_cast<std::size_t>(m) + 1, 0);
    if (quadratic)
        for (Vmask g : ideal.generators) {
            int i = vlowest(g);
            int j = vlowest(g & (g - 1));
            adj[static_cast<std::size_t>(i)] |= vbit(j);
            adj[static_cast<std::size_t>(j)] |= vbit(i);
        }
    // per-vertex generator lists for the general path
    std::vector<std::vector<Vmask>> by_vertex(static_cast<std::size_t>(m) + 1);
    if (!quadratic)
        for (Vmask g : ideal.generators)
            for (Vmask t = g; t; t &= t - 1)
                by_vertex[static_cast<std::size_t>(vlowest(t))].push_back(g);

    detail::HomologyScratch scratch;
    std::vector<long long> ranks;
    std::vector<Vmask>& faces = scratch.faces;

    const Vmask total = m == 0 ? 0 : (~Vmask{0} >> (64 - m));
    for (Vmask w = 1; w <= total; ++w) {
        // cone pruning: skip W containing a vertex in every facet of the
        // restriction (no generator inside W uses it)
        bool cone = false;
        for (Vmask t = w; t; t &= t - 1) {
            int v = vlowest(t);
            if (quadratic) {
                if ((adj[static_cast<std::size_t>(v)] & w) == 0) { cone = true; break; }
            } else {
                bool used = false;
                for (Vmask g : by_vertex[static_cast<std::size_t>(v)])
                    if ((g & ~w) == 0) { used = true; break; }
                if (!used) { cone = true; break; }
            }
        }
        if (cone) continue;

        // enumerate the faces of the restriction to W
        faces.clear();
        struct Frame { Vmask face; Vmask cands; };
        std::vector<Frame> stack;
        stack.push_back({0, w});
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            faces.push_back(f.face);
            Vmask cands = f.cands;
            while (cands) {
                int v = vlowest(cands);
                cands &= cands - 1;
                Vmask cand = f.face | vbit(v);
                if (quadratic) {
                    stack.push_back({cand, cands & ~adj[static_cast<std::size_t>(v)]});
                } else {
                    bool bad = false;
                    for (Vmask g : by_vertex[static_cast<std::size_t>(v)])
                        if ((g & ~cand) == 0) { bad = true; break; }
                    if (!bad) stack.push_back({cand, cands});
                }
            }
        }
        std::sort(faces.begin(), faces.end(), [](Vmask a, Vmask b) {
            int ca = vcount(a), cb = vcount(b);
            if (ca != cb) return ca < cb;
            return a < b;
        });

        detail::homology_ranks_sorted(faces, field, ranks, scratch);
        int j = vcount(w);
        for (int k = -1; k + 1 < static_cast<int>(ranks.size()); ++k) {
            long long r = ranks[static_cast<std::size_t>(k + 1)];
            if (r != 0) emit(j, k, r);
        }
    }
}

} // namespace

BettiTable graded_betti(const SquarefreeMonomialIdeal& ideal, const FieldSpec& field) {
    BettiTable table;
    hochster_scan(ideal, field, [&](int j, int k, long long r) {
        int i = j - k - 1;
        if (i >= 1) table.entries[{i, j}] += r;
    });
    return table;
}

int regularity_quotient(const SquarefreeMonomialIdeal& ideal, const FieldSpec& field) {
    int reg = 0;
    hochster_scan(ideal, field, [&](int j, int k, long long) {
        if (j - k - 1 >= 1) reg = std::max(reg, k + 1);
    });
    return reg;
}

namespace {

HilbertSeries reduce_lowest_terms(IntegerPolynomial num, int dpow) {
    while (num.at_one() == 0 && dpow > 0) {
        num = num.divide_one_minus_lambda();
        --dpow;
    }
    HilbertSeries h;
    h.numerator = std::move(num);
    h.dpow = dpow;
    return h;
}

} // namespace

AdditivityReport check_colon_sum_additivity(const SquarefreeMonomialIdeal& ideal, int v,
                                            const FieldSpec& field) {
    SquarefreeMonomialIdeal colon = colon_by_variable(ideal, v);
    SquarefreeMonomialIdeal added = add_variable(ideal, v);

    HilbertSeries lhs = hilbert_series_of_ideal(ideal);
    HilbertSeries h_added = hilbert_series_of_ideal(added);
    HilbertSeries h_colon = hilbert_series_of_ideal(colon);

    // H_{R/I} = H_{R/(I+(v))} + λ H_{R/(I:(v))} over a common denominator
    int d = std::max(h_added.dpow, h_colon.dpow);
    std::vector<mpz_class> shifted = {0, 1};
    IntegerPolynomial lambda(std::move(shifted));
    IntegerPolynomial rhs_num =
        h_added.numerator.times_one_minus_lambda(d - h_added.dpow) +
        (lambda * h_colon.numerator).times_one_minus_lambda(d - h_colon.dpow);
    HilbertSeries rhs = reduce_lowest_terms(std::move(rhs_num), d);

    AdditivityReport report;
    report.hilbert_ok = (rhs == lhs);
    report.reg_ideal = regularity_ideal(ideal, field);
    report.reg_colon = regularity_ideal(colon, field);
    report.reg_added = regularity_ideal(added, field);
    report.regularity_ok = (report.reg_ideal == report.reg_colon + 1) ||
                           (report.reg_ideal == report.reg_added);
    return report;
}

} // namespace ei
