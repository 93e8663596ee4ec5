#include "lrc/analysis.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace lrc {
namespace {

// Index-coded field tables for the distance kernels (element = enumeration
// index, so multiplication is additive in the exponent).
struct ByteField {
    std::uint32_t q;
    std::vector<std::uint8_t> add_tbl;  // q*q
    std::vector<std::uint8_t> mul_tbl;  // q*q

    explicit ByteField(const FieldSpec& f) : q(static_cast<std::uint32_t>(f.q())) {
        if (q > 256) throw InvalidArgument("distance engines support q <= 256");
        std::vector<std::uint32_t> packed(q);
        std::vector<std::uint8_t> idx_of(f.q(), 0);
        packed[0] = 0;
        for (std::uint32_t i = 1; i < q; ++i) packed[i] = f.exp(i - 1);
        for (std::uint32_t i = 0; i < q; ++i) idx_of[packed[i]] = static_cast<std::uint8_t>(i);
        add_tbl.resize(std::size_t(q) * q);
        mul_tbl.resize(std::size_t(q) * q);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                add_tbl[a * q + b] = idx_of[f.add(packed[a], packed[b])];
                mul_tbl[a * q + b] =
                    (a && b) ? static_cast<std::uint8_t>((a - 1 + b - 1) % (q - 1) + 1) : 0;
            }
        }
    }
    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_tbl[a * q + b]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_tbl[a * q + b]; }
};

std::vector<std::uint8_t> row_indices(const Mat& g, std::size_t r) {
    std::vector<std::uint8_t> out(g.cols());
    for (std::size_t c = 0; c < g.cols(); ++c)
        out[c] = static_cast<std::uint8_t>(g.at(r, c).index());
    return out;
}

std::vector<FieldElement> indices_to_elements(const FieldPtr& f,
                                              const std::vector<std::uint8_t>& idx) {
    std::vector<FieldElement> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(f->from_index(i));
    return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > cap / b) return cap + 1;
        r *= b;
    }
    return r;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (r > cap) return cap + 1;
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace

LinearCode measure(const Mat& raw) {
    bool nonzero = false;
    for (std::size_t r = 0; r < raw.rows() && !nonzero; ++r)
        for (std::size_t c = 0; c < raw.cols(); ++c)
            if (!raw.at(r, c).is_zero()) {
                nonzero = true;
                break;
            }
    if (!nonzero) throw InvalidArgument("zero evaluation matrix");
    Mat work = raw;
    std::size_t k = rref(work).size();
    Mat gen(raw.field(), k, raw.cols());
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < raw.cols(); ++c) gen.at(r, c) = work.at(r, c);
    return LinearCode{raw.field(), std::move(gen), raw.cols(), k, raw.rows()};
}

LinearCode code_from_blueprint(const CodeBlueprint& bp) {
    return measure(evaluation_matrix(bp));
}

DistanceResult min_distance_exhaustive(const LinearCode& code) {
    ByteField bf(*code.field);
    const std::size_t k = code.k, n = code.n;
    const std::uint32_t q = bf.q;
    std::vector<std::vector<std::uint8_t>> rows(k);
    for (std::size_t r = 0; r < k; ++r) rows[r] = row_indices(code.gen, r);
    // scaled[r][a] = a * row r
    std::vector<std::vector<std::vector<std::uint8_t>>> scaled(k);
    for (std::size_t r = 0; r < k; ++r) {
        scaled[r].assign(q, std::vector<std::uint8_t>(n));
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::size_t c = 0; c < n; ++c) scaled[r][a][c] = bf.mul(static_cast<std::uint8_t>(a), rows[r][c]);
    }

    DistanceResult res;
    res.method = "exhaustive";
    res.hi = n + 1;
    std::vector<std::vector<std::uint8_t>> stack(k + 1, std::vector<std::uint8_t>(n, 0));
    std::vector<std::uint8_t> best_word(n, 0);

    // depth-first over coefficients; first nonzero coefficient fixed to 1
    struct Frame {
        std::size_t level;
        bool started;
    };
    std::vector<std::uint32_t> coeff(k, 0);
    std::uint64_t visited = 0;

    auto weight_of = [&](const std::vector<std::uint8_t>& w) {
        std::size_t cnt = 0;
        for (auto v : w) cnt += (v != 0);
        return cnt;
    };

    // recursive lambda via explicit function
    std::function<void(std::size_t, bool)> rec = [&](std::size_t level, bool started) {
        if (level == k) {
            if (!started) return;
            ++visited;
            std::size_t w = weight_of(stack[k]);
            if (w > 0 && w < res.hi) {
                res.hi = w;
                best_word = stack[k];
            }
            return;
        }
        // coefficient 0: carry partial sum forward unchanged
        stack[level + 1] = stack[level];
        rec(level + 1, started);
        const std::uint32_t amax = started ? q - 1 : 1;
        for (std::uint32_t a = 1; a <= amax; ++a) {
            const auto& s = scaled[level][a];
            auto& dst = stack[level + 1];
            const auto& src = stack[level];
            for (std::size_t c = 0; c < n; ++c) dst[c] = bf.add(src[c], s[c]);
            rec(level + 1, true);
        }
    };
    rec(0, false);

    res.exact = true;
    res.lo = res.hi;
    res.enumerated = visited;
    res.witness = indices_to_elements(code.field, best_word);
    res.method = "exhaustive";
    return res;
}

namespace {

struct InfoSet {
    std::vector<std::size_t> cols;   // the set's column indices
    std::size_t rank = 0;            // k_i
    std::vector<std::vector<std::uint8_t>> rows_full;  // k_i adapted rows, length n
    std::vector<std::vector<std::uint8_t>> rows_rest;  // same rows restricted off the set
    std::vector<std::size_t> rest_cols;
};

// Column-permuted elimination: pivots among `allowed` columns only,
// lowest index first. Returns adapted full-row matrix and pivot columns.
std::vector<std::size_t> eliminate_on(Mat& g, const std::vector<std::size_t>& allowed) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c : allowed) {
        if (r >= g.rows()) break;
        std::size_t sel = r;
        while (sel < g.rows() && g.at(sel, c).is_zero()) ++sel;
        if (sel == g.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < g.cols(); ++j) std::swap(g.at(sel, j), g.at(r, j));
        FieldElement inv = g.at(r, c).inv();
        for (std::size_t j = 0; j < g.cols(); ++j) g.at(r, j) *= inv;
        for (std::size_t i = 0; i < g.rows(); ++i) {
            if (i == r || g.at(i, c).is_zero()) continue;
            FieldElement f = g.at(i, c);
            for (std::size_t j = 0; j < g.cols(); ++j) g.at(i, j) -= f * g.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

DistanceResult min_distance_bz(const LinearCode& code, std::uint64_t budget,
                               std::uint64_t external_lb) {
    ByteField bf(*code.field);
    const std::size_t k = code.k, n = code.n;
    const std::uint32_t q = bf.q;

    // greedy disjoint information sets
    std::vector<InfoSet> sets;
    std::vector<bool> used(n, false);
    while (true) {
        std::vector<std::size_t> allowed;
        for (std::size_t c = 0; c < n; ++c)
            if (!used[c]) allowed.push_back(c);
        if (allowed.empty()) break;
        Mat work = code.gen;
        auto pivots = eliminate_on(work, allowed);
        if (pivots.empty()) break;
        InfoSet s;
        s.cols = pivots;
        s.rank = pivots.size();
        for (auto c : pivots) used[c] = true;
        std::vector<bool> inset(n, false);
        for (auto c : pivots) inset[c] = true;
        for (std::size_t c = 0; c < n; ++c)
            if (!inset[c]) s.rest_cols.push_back(c);
        for (std::size_t r = 0; r < s.rank; ++r) {
            s.rows_full.push_back(row_indices(work, r));
            std::vector<std::uint8_t> rest(s.rest_cols.size());
            for (std::size_t j = 0; j < s.rest_cols.size(); ++j)
                rest[j] = s.rows_full.back()[s.rest_cols[j]];
            s.rows_rest.push_back(std::move(rest));
        }
        sets.push_back(std::move(s));
    }

    DistanceResult res;
    res.method = "brouwer-zimmermann";
    res.hi = n + 1;
    std::vector<std::uint8_t> best_word;
    std::uint64_t enumerated = 0;
    std::uint64_t lb_completed = std::max<std::uint64_t>(external_lb, 1);

    auto certified = [&]() { return res.hi <= lb_completed; };

    std::size_t max_rank = 0;
    for (const auto& s : sets) max_rank = std::max(max_rank, s.rank);

    std::size_t w = 0;
    bool out_of_budget = false;
    while (!certified() && w < max_rank) {
        ++w;
        // cost estimate for this pass
        std::uint64_t pass_cost = 0;
        for (const auto& s : sets) {
            std::uint64_t c = binom(s.rank, w, budget);
            std::uint64_t scale = ipow(q - 1, w ? w - 1 : 0, budget);
            if (c > budget / (scale ? scale : 1))
                pass_cost = budget + 1;
            else
                pass_cost += c * scale;
            if (pass_cost > budget) break;
        }
        if (enumerated + pass_cost > budget) {
            out_of_budget = true;
            break;
        }

        for (const auto& s : sets) {
            if (s.rank < w) continue;
            const std::size_t nr = s.rest_cols.size();
            std::vector<std::size_t> support(w);
            std::vector<std::vector<std::uint8_t>> partial(w + 1,
                                                           std::vector<std::uint8_t>(nr, 0));
            std::vector<std::uint8_t> chosen(w, 0);

            // enumerate supports lexicographically, coefficients depth-first
            std::function<void(std::size_t, std::size_t)> rec_support =
                [&](std::size_t pos, std::size_t start) {
                    if (certified()) return;
                    if (pos == w) {
                        // coefficients: first = 1, rest over 1..q-1
                        std::function<void(std::size_t)> rec_coeff = [&](std::size_t i) {
                            if (certified()) return;
                            if (i == w) {
                                ++enumerated;
                                std::size_t wt = w;
                                for (std::size_t j = 0; j < nr; ++j) wt += (partial[w][j] != 0);
                                if (wt < res.hi) {
                                    res.hi = wt;
                                    // rebuild the full codeword for the witness
                                    std::vector<std::uint8_t> full(n, 0);
                                    for (std::size_t t = 0; t < w; ++t) {
                                        const auto& rowf = s.rows_full[support[t]];
                                        for (std::size_t c2 = 0; c2 < n; ++c2)
                                            full[c2] = bf.add(full[c2],
                                                              bf.mul(chosen[t], rowf[c2]));
                                    }
                                    best_word = std::move(full);
                                }
                                return;
                            }
                            const std::uint32_t lo_a = (i == 0) ? 1 : 1;
                            const std::uint32_t hi_a = (i == 0) ? 1 : q - 1;
                            for (std::uint32_t a = lo_a; a <= hi_a && !certified(); ++a) {
                                chosen[i] = static_cast<std::uint8_t>(a);
                                const auto& rr = s.rows_rest[support[i]];
                                auto& dst = partial[i + 1];
                                const auto& src = partial[i];
                                for (std::size_t j = 0; j < nr; ++j)
                                    dst[j] = bf.add(src[j], bf.mul(chosen[i], rr[j]));
                                rec_coeff(i + 1);
                            }
                        };
                        rec_coeff(0);
                        return;
                    }
                    for (std::size_t c2 = start; c2 + (w - pos) <= s.rank && !certified(); ++c2) {
                        support[pos] = c2;
                        rec_support(pos + 1, c2 + 1);
                    }
                };
            rec_support(0, 0);
            if (certified()) break;
        }
        if (certified()) break;

        // lower bound accrued by completing weight w on every set
        std::uint64_t lb = 0;
        for (const auto& s : sets) {
            std::uint64_t penalty = k - s.rank;
            if (w + 1 > penalty) lb += (w + 1) - penalty;
        }
        lb_completed = std::max(lb_completed, lb);
    }

    res.enumerated = enumerated;
    if (res.hi == n + 1 && !best_word.empty()) res.hi = n;  // unreachable guard
    if (certified() && res.hi <= n) {
        res.exact = true;
        res.lo = res.hi;
    } else {
        res.exact = false;
        res.lo = std::min<std::uint64_t>(lb_completed, res.hi);
        (void)out_of_budget;
    }
    if (!best_word.empty())
        res.witness = indices_to_elements(code.field, best_word);
    else if (res.hi == n + 1)
        res.hi = n;  // no witness found within budget; n is always an upper bound
    return res;
}

DistanceResult min_distance(const LinearCode& code, std::uint64_t budget,
                            std::uint64_t external_lb) {
    std::uint64_t size = ipow(code.field->q(), code.k, kExhaustiveLimit);
    if (size <= kExhaustiveLimit) return min_distance_exhaustive(code);
    return min_distance_bz(code, budget, external_lb);
}

LinearCode dual_code(const LinearCode& code) {
    Mat ns = null_space(code.gen);
    if (ns.rows() == 0) {
        // full space: dual is the zero code
        return LinearCode{code.field, Mat(code.field, 0, code.n), code.n, 0, 0};
    }
    return measure(ns);
}

DualDistanceResult dual_distance(const LinearCode& code, std::uint64_t budget) {
    LinearCode dual = dual_code(code);
    if (dual.k == 0) {
        DistanceResult d;
        d.exact = true;
        d.lo = d.hi = code.n + 1;  // convention for the zero dual, flagged
        d.method = "degenerate";
        return {d, true};
    }
    return {min_distance(dual, budget), false};
}

LRCProfile profile_of(const CodeBlueprint& bp) {
    LRCProfile p;
    p.structures.push_back(
        RecoveryStructure{bp.fibres, bp.locality, bp.capability, bp.mode, "primary"});
    for (const auto& alt : bp.availability) p.structures.push_back(alt);
    return p;
}

const char* to_string(OptClass c) {
    switch (c) {
        case OptClass::optimal: return "optimal";
        case OptClass::almost_optimal: return "almost-optimal";
        default: return "defect";
    }
}

BoundReport bound_report(const LinearCode& code, std::uint32_t r, std::uint64_t exact_d,
                         std::optional<std::int64_t> goppa_lower) {
    if (r < 1) throw InvalidArgument("locality must be >= 1");
    BoundReport b;
    b.n = code.n;
    b.k = code.k;
    b.d = exact_d;
    b.r = r;
    b.lhs = static_cast<std::int64_t>((code.k + r - 1) / r);
    b.rhs = static_cast<std::int64_t>(code.n) - static_cast<std::int64_t>(code.k) -
            static_cast<std::int64_t>(exact_d) + 2;
    b.defect = b.rhs - b.lhs;
    if (b.defect < 0)
        throw Error("Singleton-like bound violated: upstream construction bug");
    // almost-optimal: no ([n,k+1,d],r) code may exist, i.e. (k+1)/r > n-(k+1)-d+2
    std::int64_t rhs_next = static_cast<std::int64_t>(code.n) -
                            static_cast<std::int64_t>(code.k + 1) -
                            static_cast<std::int64_t>(exact_d) + 2;
    b.almost_condition = static_cast<std::int64_t>(code.k + 1) > rhs_next * static_cast<std::int64_t>(r);
    if (b.defect == 0)
        b.classification = OptClass::optimal;
    else if (b.almost_condition)
        b.classification = OptClass::almost_optimal;
    else
        b.classification = OptClass::defect_n;
    b.goppa_lower = goppa_lower;
    if (goppa_lower && *goppa_lower > 0 &&
        exact_d < static_cast<std::uint64_t>(*goppa_lower))
        throw Error("measured distance below the Goppa bound: upstream construction bug");
    return b;
}

RecoveryOutcome recover(const ErasableWord& word, const LRCProfile& profile,
                        std::size_t structure) {
    if (structure >= profile.structures.size())
        throw InvalidArgument("no such availability structure");
    const RecoveryStructure& rs = profile.structures[structure];
    const FibreStructure& fs = rs.fs;
    if (word.values.size() != word.erased.size() || word.values.size() != fs.nodes.size())
        throw DimensionMismatch("word length does not match the fibre structure");

    RecoveryOutcome out;
    out.values = word.values;
    for (std::size_t fi = 0; fi < fs.fibres.size(); ++fi) {
        const Fibre& f = fs.fibres[fi];
        std::vector<std::size_t> missing;
        for (auto i : f.members)
            if (word.erased[i]) missing.push_back(i);
        if (missing.empty()) continue;
        if (missing.size() > rs.rho)
            throw RecoveryError("fibre " + std::to_string(fi) + " has " +
                                    std::to_string(missing.size()) +
                                    " erasures, capability is " + std::to_string(rs.rho),
                                fi);
        RecoveryStep step;
        step.fibre = fi;
        step.mode = rs.mode;
        if (rs.mode == RecoveryMode::checksum) {
            FieldElement s = word.values[f.members[0]].spec()->zero();
            for (auto i : f.members) {
                if (word.erased[i]) continue;
                s += out.values[i];
                step.nodes_used.push_back(fs.nodes[i]);
            }
            out.values[missing[0]] = -s;
            step.detail = "erased symbol = -(sum of " +
                          std::to_string(f.members.size() - 1) + " fibre survivors)";
        } else {
            std::vector<FieldElement> nodes, values;
            for (auto i : f.members) {
                if (word.erased[i]) continue;
                bool dup = false;
                for (const auto& nd : nodes)
                    if (nd == fs.nodes[i]) dup = true;
                if (dup) continue;
                nodes.push_back(fs.nodes[i]);
                values.push_back(out.values[i]);
                if (nodes.size() == rs.r) break;
            }
            if (nodes.size() < rs.r)
                throw RecoveryError("fibre " + std::to_string(fi) +
                                        " has fewer than r surviving distinct nodes",
                                    fi);
            UniPoly fit = lagrange_interpolate(nodes, values);
            for (auto i : missing) out.values[i] = fit.evaluate(fs.nodes[i]);
            step.nodes_used = nodes;
            std::ostringstream os;
            os << "degree<=" << (rs.r - 1) << " fit through " << nodes.size() << " nodes";
            step.detail = os.str();
        }
        out.trace.push_back(std::move(step));
    }
    return out;
}

RecoveryCheck verify_recovery(const LinearCode& code, const LRCProfile& profile,
                              std::uint64_t randomized_trials, std::uint64_t seed) {
    RecoveryCheck rc;
    const std::uint64_t space = ipow(code.field->q(), code.k, 100'000);
    const bool exhaustive = space <= 100'000;

    auto check_word = [&](const std::vector<FieldElement>& cw) -> bool {
        ++rc.words_checked;
        for (std::size_t si = 0; si < profile.structures.size(); ++si) {
            const auto& rs = profile.structures[si];
            const auto& fs = rs.fs;
            for (std::size_t fi = 0; fi < fs.fibres.size(); ++fi) {
                const auto& f = fs.fibres[fi];
                // every erasure subset of size 1..rho
                std::vector<std::size_t> idx(f.members.begin(), f.members.end());
                std::vector<std::size_t> comb;
                std::function<bool(std::size_t, std::size_t)> patterns =
                    [&](std::size_t start, std::size_t want) -> bool {
                    if (comb.size() == want) {
                        ++rc.patterns_checked;
                        ErasableWord w = ErasableWord::from_codeword(cw);
                        for (auto i : comb) {
                            w.erased[i] = true;
                            w.values[i] = code.field->zero();
                        }
                        auto rec = recover(w, profile, si);
                        for (std::size_t i = 0; i < cw.size(); ++i) {
                            if (rec.values[i] != cw[i]) {
                                std::ostringstream os;
                                os << "structure " << si << " fibre " << fi
                                   << ": recovered coordinate " << i << " differs";
                                rc.counterexample = os.str();
                                rc.pass = false;
                                return false;
                            }
                        }
                        return true;
                    }
                    for (std::size_t c = start; c < idx.size(); ++c) {
                        comb.push_back(idx[c]);
                        if (!patterns(c + 1, want)) return false;
                        comb.pop_back();
                    }
                    return true;
                };
                for (std::size_t sz = 1; sz <= std::min<std::size_t>(rs.rho, idx.size()); ++sz)
                    if (!patterns(0, sz)) return false;
            }
        }
        return true;
    };

    if (exhaustive) {
        std::vector<std::uint64_t> msg(code.k, 0);
        while (true) {
            std::vector<FieldElement> m;
            m.reserve(code.k);
            for (auto v : msg) m.push_back(code.field->from_index(v));
            if (!check_word(encode(code.gen, m))) return rc;
            std::size_t i = 0;
            while (i < code.k && ++msg[i] == code.field->q()) msg[i++] = 0;
            if (i == code.k) break;
        }
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t t = 0; t < randomized_trials; ++t) {
            std::vector<FieldElement> m;
            m.reserve(code.k);
            for (std::size_t i = 0; i < code.k; ++i)
                m.push_back(code.field->from_index(rng() % code.field->q()));
            if (!check_word(encode(code.gen, m))) return rc;
        }
    }
    return rc;
}

}  // namespace lrc
