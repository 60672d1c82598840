#include "hlkit/formulas.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace hlkit {

namespace {

std::vector<TPoly> one_minus_t_powers(std::size_t max_e) {
    std::vector<TPoly> p(max_e + 1);
    p[0] = TPoly::one();
    for (std::size_t i = 1; i <= max_e; ++i) p[i] = p[i - 1] * TPoly::one_minus_t();
    return p;
}

/// DFS over one start permutation, accumulating Schwer-formula terms with an
/// incrementally maintained walk translation vector.
struct AlcoveDfs {
    const LambdaChain& chain;
    const std::vector<int>& lambda_pad;
    const std::vector<TPoly>& omt;  // (1-t)^e table
    std::atomic<std::uint64_t>& counter;
    std::uint64_t budget;
    SymPoly& out;
    std::uint64_t& local_count;

    Permutation cur;
    std::vector<int> v;  // translation part of w rhat_{j_1}...rhat_{j_i}
    int start_len = 0;
    int taken = 0;

    void run(int pos) {
        if (pos > chain.size()) {
            emit();
            return;
        }
        run(pos + 1);  // skip
        const auto& t = chain.entry(pos);
        if (cur.drops(t.a, t.b)) {
            int l = chain.level_of(pos);
            int ca = cur(t.a), cb = cur(t.b);
            v[ca - 1] += l;
            v[cb - 1] -= l;
            cur.apply_transposition_inplace(t.a, t.b);
            ++taken;
            run(pos + 1);
            --taken;
            cur.apply_transposition_inplace(t.a, t.b);
            v[ca - 1] -= l;
            v[cb - 1] += l;
        }
    }

    void emit() {
        if (counter.fetch_add(1, std::memory_order_relaxed) >= budget)
            throw BudgetExceeded(budget);
        ++local_count;
        int e = (start_len + cur.length() - taken) / 2;
        std::vector<int> weight = cur.act(lambda_pad);
        for (std::size_t i = 0; i < weight.size(); ++i) weight[i] += v[i];
        out.accumulate(weight, TPoly::monomial(1, e) * omt[taken]);
    }
};

}  // namespace

FormulaResult p_alcove(const Partition& lambda, int n, const EnumOptions& opts) {
    LambdaChain chain = LambdaChain::lambda_chain(lambda, n);
    std::vector<int> lambda_pad = lambda.padded(n);
    auto omt = one_minus_t_powers(chain.size());
    auto starts = min_coset_reps(lambda, n);
    std::atomic<std::uint64_t> counter{0};

    auto run_start = [&](const Permutation& w, SymPoly& poly, std::uint64_t& cnt) {
        AlcoveDfs dfs{chain,  lambda_pad,        omt,
                      counter, opts.budget,      poly,
                      cnt,     w,                std::vector<int>(n, 0),
                      w.length(), 0};
        dfs.run(1);
    };

    FormulaResult res{SymPoly(static_cast<std::size_t>(n)), 0, "p-alcove"};
    unsigned workers = std::max(1u, opts.threads);
    if (workers == 1 || starts.size() <= 1) {
        for (const auto& w : starts) run_start(w, res.poly, res.term_count);
    } else {
        workers = std::min<unsigned>(workers, starts.size());
        std::vector<SymPoly> polys(workers, SymPoly(static_cast<std::size_t>(n)));
        std::vector<std::uint64_t> counts(workers, 0);
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < starts.size(); i += workers)
                        run_start(starts[i], polys[t], counts[t]);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (unsigned t = 0; t < workers; ++t)
            if (errors[t]) std::rethrow_exception(errors[t]);
        for (unsigned t = 0; t < workers; ++t) {
            res.poly += polys[t];
            res.term_count += counts[t];
        }
    }
    return res;
}

namespace {

FormulaResult filling_formula(const Partition& lambda, int n, FillingClass cls,
                              int extra_one_minus_t, const char* method,
                              const EnumOptions& opts) {
    FormulaResult res{SymPoly(static_cast<std::size_t>(n)), 0, method};
    auto omt = one_minus_t_powers(static_cast<std::size_t>(
        std::max(0, lambda.first() - 1) * static_cast<int>(lambda.length()) +
        extra_one_minus_t + 1));
    for_each_filling(lambda, n, cls, [&](const Filling& f) {
        if (++res.term_count > opts.budget) throw BudgetExceeded(opts.budget);
        res.poly.accumulate(
            f.content(n),
            TPoly::monomial(1, f.cinv()) * omt[f.des() + extra_one_minus_t]);
    });
    return res;
}

}  // namespace

FormulaResult q_hhl(const Partition& lambda, int n, const EnumOptions& opts) {
    return filling_formula(lambda, n, FillingClass::all_valid,
                           static_cast<int>(lambda.length()), "q-hhl", opts);
}

FormulaResult p_fillings(const Partition& lambda, int n, const EnumOptions& opts) {
    return filling_formula(lambda, n, FillingClass::fhat, 0, "p-fillings", opts);
}

SymPoly p_from_q(const SymPoly& q, const Partition& lambda, int n) {
    TPoly divisor = TPoly::one_minus_t().pow(lambda.length());
    std::map<int, int> multiplicity;
    for (int p : lambda.parts()) ++multiplicity[p];
    for (auto [part, m] : multiplicity)
        divisor *= TPoly::t_quantum_factorial(static_cast<std::size_t>(m));
    SymPoly out = q;
    out.exact_div_all(divisor);
    (void)n;
    return out;
}

namespace {

void ssyt_dfs(const Partition& lambda, int n, std::vector<IntSequence>& rows,
              std::size_t i, std::size_t j, SymPoly& out) {
    if (i == lambda.length()) {
        ExponentVector ct(n, 0);
        for (const auto& r : rows)
            for (int e : r) ++ct[e - 1];
        out.accumulate(ct, TPoly::one());
        return;
    }
    std::size_t ni = i, nj = j + 1;
    if (nj == static_cast<std::size_t>(lambda.part(i + 1))) {
        ni = i + 1;
        nj = 0;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, rows[i][j - 1]);                       // weak rows
    if (i > 0 && j < rows[i - 1].size()) lo = std::max(lo, rows[i - 1][j] + 1);  // strict cols
    for (int e = lo; e <= n; ++e) {
        rows[i][j] = e;
        ssyt_dfs(lambda, n, rows, ni, nj, out);
    }
}

}  // namespace

SymPoly schur_ssyt(const Partition& lambda, int n) {
    SymPoly out(static_cast<std::size_t>(n));
    if (lambda.empty()) {
        out.accumulate(ExponentVector(n, 0), TPoly::one());
        return out;
    }
    std::vector<IntSequence> rows;
    for (std::size_t i = 1; i <= lambda.length(); ++i)
        rows.emplace_back(lambda.part(i));
    ssyt_dfs(lambda, n, rows, 0, 0, out);
    return out;
}

SymPoly monomial_sym(const Partition& lambda, int n) {
    SymPoly out(static_cast<std::size_t>(n));
    std::vector<int> v = lambda.padded(static_cast<std::size_t>(n));
    std::sort(v.begin(), v.end());
    do {
        out.accumulate(v, TPoly::one());
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

SymPoly specialize_t(const SymPoly& p, int t) {
    SymPoly out(p.num_vars());
    for (const auto& [e, c] : p.terms()) {
        BigInt val = c.eval(t);
        if (val != 0) out.accumulate(e, TPoly({val}));
    }
    return out;
}

std::string round_one_decimal(std::uint64_t num, std::uint64_t den) {
    std::uint64_t tenths = (20 * num + den) / (2 * den);
    std::ostringstream os;
    os << tenths / 10 << "." << tenths % 10;
    return os.str();
}

TableRow table_row(const Partition& lambda, int n, const EnumOptions& opts) {
    TableRow row;
    LambdaChain chain = LambdaChain::lambda_chain(lambda, n);
    for_each_admissible(chain, WalkOrientation::decreasing,
                        CosetChoice::w_lambda_min,
                        [&](const AdmissiblePair&, const Permutation&) {
                            if (++row.pairs > opts.budget)
                                throw BudgetExceeded(opts.budget);
                        });
    for_each_filling(lambda, n, FillingClass::all_valid,
                     [&](const Filling&) { ++row.fillings; });
    row.factor = round_one_decimal(row.pairs, row.fillings);
    return row;
}

CompressionReport compression_report(const Partition& lambda, int n,
                                     const EnumOptions& opts) {
    CompressionReport rep;
    LambdaChain chain = LambdaChain::lambda_chain(lambda, n);
    auto omt = one_minus_t_powers(chain.size());
    std::map<Filling, TPoly> groups;
    std::uint64_t pairs = 0;
    for_each_admissible(
        chain, WalkOrientation::decreasing, CosetChoice::w_lambda_min,
        [&](const AdmissiblePair& pair, const Permutation& end) {
            if (++pairs > opts.budget) throw BudgetExceeded(opts.budget);
            int e = (pair.w.length() + end.length() -
                     static_cast<int>(pair.positions.size())) / 2;
            groups[filling_map(chain, pair, FillingMode::f)] +=
                TPoly::monomial(1, e) * omt[pair.positions.size()];
        });
    rep.pair_count = pairs;
    rep.pass = true;
    for_each_filling(lambda, n, FillingClass::all_valid, [&](const Filling& f) {
        ++rep.filling_count;
        TPoly expected = TPoly::monomial(1, f.cinv()) *
                         TPoly::one_minus_t().pow(f.des());
        auto it = groups.find(f);
        if (it == groups.end()) {
            rep.pass = false;
            rep.missed_fillings.push_back(f);
        } else if (it->second != expected) {
            rep.pass = false;
            rep.failures.push_back({f, it->second, expected});
        }
    });
    if (groups.size() != rep.filling_count) rep.pass = false;  // image outside F
    rep.factor_num = rep.pair_count;
    rep.factor_den = rep.filling_count;
    rep.factor_rounded = round_one_decimal(rep.factor_num, rep.factor_den);
    return rep;
}

VerifyResult verify_cross(const Partition& lambda, int n, const EnumOptions& opts) {
    VerifyResult r;
    SymPoly a = p_alcove(lambda, n, opts).poly;
    SymPoly b = p_fillings(lambda, n, opts).poly;
    SymPoly c = p_from_q(q_hhl(lambda, n, opts).poly, lambda, n);
    std::string tag = "lambda=(" + lambda.to_string() + "), n=" + std::to_string(n);
    if (a != b) r.fail("p_alcove != p_fillings at " + tag);
    if (a != c) r.fail("p_alcove != p_from_q(q_hhl) at " + tag);
    return r;
}

VerifyResult verify_specialize(const Partition& lambda, int n,
                               const EnumOptions& opts) {
    VerifyResult r;
    SymPoly p = p_alcove(lambda, n, opts).poly;
    std::string tag = "lambda=(" + lambda.to_string() + "), n=" + std::to_string(n);
    if (specialize_t(p, 0) != schur_ssyt(lambda, n))
        r.fail("P at t=0 != Schur oracle at " + tag);
    if (specialize_t(p, 1) != monomial_sym(lambda, n))
        r.fail("P at t=1 != monomial oracle at " + tag);
    return r;
}

VerifyResult verify_levels(const Partition& lambda, int n) {
    VerifyResult r;
    LambdaChain chain = LambdaChain::lambda_chain(lambda, n);
    for_each_admissible(
        chain, WalkOrientation::decreasing, CosetChoice::w_lambda_min,
        [&](const AdmissiblePair& pair, const Permutation&) {
            Filling sigma = filling_map(chain, pair, FillingMode::f);
            for (int k = 1; k <= chain.size(); ++k) {
                FoldedHyperplane h = folded_hyperplane_level(chain, pair, k);
                int q = chain.column_of(k);
                int nc = 0, nd = 0;  // entry counts in sigma[q] = columns lambda_1..q
                for (int j = q; j <= sigma.num_columns(); ++j)
                    for (int e : sigma.column(j)) {
                        if (e == h.c) ++nc;
                        if (e == h.d) ++nd;
                    }
                if (h.level != nc - nd)
                    r.fail("level mismatch at w=" + pair.w.to_string() +
                           " k=" + std::to_string(k));
            }
        });
    return r;
}

namespace {

TPoly schwer_term(int start_len, int end_len, int size,
                  const std::vector<TPoly>& omt) {
    return TPoly::monomial(1, (start_len + end_len - size) / 2) * omt[size];
}

}  // namespace

VerifyResult verify_segments(int n) {
    VerifyResult r;
    auto omt = one_minus_t_powers(static_cast<std::size_t>(n) * n);
    auto perms = all_permutations(n);

    // (a): full-segment sum t^{l(w1)+l(w2 w3)+N_{w(1)}(w3)}
    for (int k = 1; k <= n - 1; ++k)
        for (int p = 0; p <= n - k; ++p) {
            auto seq = segment_gamma(k, p, n);
            for (const auto& w : perms) {
                TPoly sum;
                for_each_admissible_subset(
                    seq, w, WalkOrientation::decreasing,
                    [&](const std::vector<int>& J, const Permutation& end) {
                        sum += schwer_term(w.length(), end.length(),
                                           static_cast<int>(J.size()), omt);
                    });
                IntSequence w1 = w.subword(1, k);
                IntSequence w3 = w.subword(n - p + 1, n);
                IntSequence w23 = w.subword(k + 1, n - p);
                w23.insert(w23.end(), w3.begin(), w3.end());
                int e = inversions(w1) + inversions(w23) + count_below(w3, w(1));
                if (sum != TPoly::monomial(1, e))
                    r.fail("segment (a) fails at w=" + w.to_string() +
                           " k=" + std::to_string(k) + " p=" + std::to_string(p));
            }
        }

    // (b): single-row sum t^{N_{ab}(w[2,p+1])} (1-t)^{1-delta_ab}
    for (const auto& w : perms) {
        int a = w(1);
        for (int b = a; b <= n; ++b) {
            int pos_b = w.inverse()(b);
            for (int p = 0; p <= pos_b - 2; ++p) {
                auto seq = segment_gamma_r(1, p, n);
                TPoly sum;
                for_each_admissible_subset(
                    seq, w, WalkOrientation::increasing,
                    [&](const std::vector<int>& J, const Permutation& end) {
                        if (end(1) != b) return;
                        std::vector<Transposition> ts;
                        for (int j : J) ts.push_back(seq[j - 1]);
                        sum += TPoly::monomial(1, n_stat(w, ts)) * omt[ts.size()];
                    });
                TPoly expected =
                    TPoly::monomial(1, count_between(w.subword(2, p + 1), a, b)) *
                    omt[a == b ? 0 : 1];
                if (sum != expected)
                    r.fail("segment (b) fails at w=" + w.to_string() +
                           " b=" + std::to_string(b) + " p=" + std::to_string(p));
            }
        }
    }

    // (c): two-column sum t^{cinv(C2C1)-l(C1)} (1-t)^{des(C2C1)}, where cinv
    // of the filling already includes the left-column inversions l(C2)
    for (int k = 1; k <= n - 1; ++k) {
        auto seq = segment_gamma_r(k, 0, n);
        Partition two_cols(std::vector<int>(static_cast<std::size_t>(k), 2));
        for (const auto& w : perms) {
            IntSequence c1 = w.subword(1, k);
            std::map<IntSequence, TPoly> by_c2;
            for_each_admissible_subset(
                seq, w, WalkOrientation::increasing,
                [&](const std::vector<int>& J, const Permutation& end) {
                    std::vector<Transposition> ts;
                    for (int j : J) ts.push_back(seq[j - 1]);
                    by_c2[end.subword(1, k)] +=
                        TPoly::monomial(1, n_stat(w, ts)) * omt[ts.size()];
                });
            for (const auto& [c2, sum] : by_c2) {
                for (int i = 0; i < k; ++i)
                    if (c2[i] < c1[i])
                        r.fail("segment (c): C2 not >= C1 at w=" + w.to_string());
                Filling f(two_cols, {c1, c2});
                TPoly expected =
                    TPoly::monomial(1, f.cinv() - inversions(c1)) * omt[f.des()];
                if (sum != expected)
                    r.fail("segment (c) fails at w=" + w.to_string() +
                           " k=" + std::to_string(k));
            }
        }
    }

    // (d): fiber sums of f^r equal t^{cinv(sigma)-l(C)} (1-t)^{des(sigma)}
    std::vector<Partition> shapes;
    for (const auto& parts : std::vector<std::vector<int>>{
             {1}, {2}, {1, 1}, {2, 1}, {2, 2}, {3, 1}, {2, 1, 1}})
        if (static_cast<int>(parts.size()) <= n - 1) shapes.emplace_back(parts);
    for (const auto& lambda : shapes) {
        LambdaChain rev = LambdaChain::lambda_chain(lambda, n).reversed();
        int c1len = static_cast<int>(lambda.length());
        auto fillings = enumerate_fillings(lambda, n, FillingClass::all_valid);
        for (const auto& w : perms) {
            std::map<Filling, TPoly> by_filling;
            for_each_admissible_subset(
                rev.entries(), w, WalkOrientation::increasing,
                [&](const std::vector<int>& J, const Permutation&) {
                    AdmissiblePair pair{w, J};
                    by_filling[filling_map(rev, pair, FillingMode::f_reverse)] +=
                        TPoly::monomial(1, n_stat(w, subsequence(rev, J))) *
                        omt[J.size()];
                });
            IntSequence c = w.subword(1, c1len);
            for (const auto& sigma : fillings) {
                if (sigma.column(1) != c) continue;
                TPoly expected =
                    TPoly::monomial(1, sigma.cinv() - inversions(c)) *
                    omt[sigma.des()];
                auto it = by_filling.find(sigma);
                if (it == by_filling.end() || it->second != expected)
                    r.fail("segment (d) fails at lambda=(" + lambda.to_string() +
                           ") w=" + w.to_string());
            }
        }
    }
    return r;
}

}  // namespace hlkit
