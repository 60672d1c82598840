#include "hlkit/bijection.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hlkit {

namespace {

/// Marker geometry of rev(Gamma)_j. In the column-major segments (i <=
/// lambda_j) a start marker is the adjacent pair ((j+1,c),(j,c)) and an end
/// marker is (j,c); in the remaining segments the roles of the row and column
/// index swap: start ((m,j),(m,j+1)), end (m,j+1). Conjugation by (j,j+1)
/// exchanges the two elements of each such pair in place.
struct PhiContext {
    const LambdaChain& chain;
    int j;

    bool tilde(int pos) const {
        return chain.column_of(pos) <= chain.lambda().part(j);
    }
    bool touches(const Transposition& t) const {
        return t.a == j || t.a == j + 1 || t.b == j || t.b == j + 1;
    }
    Transposition conj(const Transposition& t) const {
        auto sw = [&](int x) { return x == j ? j + 1 : x == j + 1 ? j : x; };
        int a = sw(t.a), b = sw(t.b);
        if (a > b) std::swap(a, b);
        return {a, b};
    }
    /// Position of the conjugate transposition; adjacent by construction.
    int conj_pos(int pos) const {
        const auto& t = chain.entry(pos);
        if (!touches(t)) return pos;
        int q = tilde(pos) ? (t.a == j ? pos - 1 : pos + 1)
                           : (t.b == j ? pos + 1 : pos - 1);
        if (q < 1 || q > chain.size() || !(chain.entry(q) == conj(t)) ||
            chain.column_of(q) != chain.column_of(pos))
            throw std::logic_error("phi_j: conjugate position not adjacent");
        return q;
    }
    /// First element of a (potential) start-marker pair; equivalently the
    /// shape of a conjugated end marker.
    bool first_slot(int pos) const {
        const auto& t = chain.entry(pos);
        if (!touches(t)) return false;
        return tilde(pos) ? t.a == j + 1 : t.b == j;
    }

    void require(bool cond, const char* msg) const {
        if (!cond) throw std::domain_error(std::string("phi_j: ") + msg);
    }
    void check_position(int pos) const {
        require(chain.column_of(pos) != 1, "T_1 not empty");
    }
    void rising_apply(Permutation& u, int pos) const {
        const auto& t = chain.entry(pos);
        require(u(t.a) < u(t.b), "input pair not admissible");
        u.apply_transposition_inplace(t.a, t.b);
    }
};

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[i - 1])
            throw std::logic_error("phi_j: marker rewrite collision");
    return v;
}

/// A_j^R -> A_j^L: left-to-right scan of T' building the splitting
/// T' = U_1 s_{m_1} W_1 e_{k_1} ... U_{t+1}, rewritten to
/// T = U_1^c e_{m_1}^c W_1 s_{k_1} ... U_{t+1}^c.
AdmissiblePair phi_r_to_l(const PhiContext& c, const AdmissiblePair& in) {
    const int j = c.j;
    Permutation u = in.w;
    c.require(u(j) < u(j + 1), "R side requires w(j) < w(j+1)");
    const auto& P = in.positions;
    for (int p : P) c.check_position(p);
    std::vector<int> out;
    out.reserve(P.size());
    std::size_t i = 0;
    while (i < P.size()) {
        int p = P[i];
        bool start = c.first_slot(p) && i + 1 < P.size() && P[i + 1] == p + 1;
        if (!start) {
            out.push_back(c.conj_pos(p));
            c.rising_apply(u, p);
            ++i;
            continue;
        }
        // start marker at (p, p+1) becomes its conjugated end marker at p
        out.push_back(p);
        c.rising_apply(u, p);
        c.rising_apply(u, p + 1);
        i += 2;
        // W runs until the first crossing; the crossing entry is the
        // complementary end marker and becomes a start-marker pair
        for (;;) {
            c.require(i < P.size(), "unmatched start marker");
            int q = P[i];
            c.rising_apply(u, q);
            ++i;
            if (u(j) > u(j + 1)) {
                if (c.first_slot(q) || !c.touches(c.chain.entry(q)))
                    throw std::logic_error("phi_j: crossing not at an end marker");
                out.push_back(q - 1);
                out.push_back(q);
                break;
            }
            out.push_back(q);
        }
    }
    c.require(u(j) > u(j + 1), "R side requires w'T'(j) > w'T'(j+1)");
    return {in.w.apply_transposition(j, j + 1), sorted_unique(std::move(out))};
}

/// A_j^L -> A_j^R: the inverse right-to-left scan. The rightmost marker pair
/// closes a region whose left end is the first entry (scanning leftward)
/// entered from a state with v(j) > v(j+1).
AdmissiblePair phi_l_to_r(const PhiContext& c, const AdmissiblePair& in) {
    const int j = c.j;
    const auto& P = in.positions;
    std::vector<Permutation> v;  // v[i] = state before applying P[i]
    v.reserve(P.size() + 1);
    v.push_back(in.w);
    for (int p : P) {
        c.check_position(p);
        Permutation next = v.back();
        c.rising_apply(next, p);
        v.push_back(std::move(next));
    }
    c.require(in.w(j) > in.w(j + 1), "L side requires w(j) > w(j+1)");
    c.require(v.back()(j) < v.back()(j + 1), "L side requires wT(j) < wT(j+1)");
    std::vector<int> out;
    out.reserve(P.size());
    int i = static_cast<int>(P.size()) - 1;
    while (i >= 0) {
        int p = P[i];
        bool pair_here = i >= 1 && P[i - 1] + 1 == p && c.first_slot(P[i - 1]);
        if (!pair_here) {
            out.push_back(c.conj_pos(p));
            --i;
            continue;
        }
        // marker pair at (p-1, p) reverts to the end marker at p
        out.push_back(p);
        i -= 2;
        for (;;) {
            c.require(i >= 0, "unmatched marker pair");
            int q = P[i];
            if (v[i](j) > v[i](j + 1)) {
                // q is the conjugated end marker; restore the start pair
                if (!c.first_slot(q))
                    throw std::logic_error("phi_j: crossing not at a marker");
                out.push_back(q);
                out.push_back(q + 1);
                --i;
                break;
            }
            out.push_back(q);
            --i;
        }
    }
    return {in.w.apply_transposition(j, j + 1), sorted_unique(std::move(out))};
}

}  // namespace

AdmissiblePair phi_j(const LambdaChain& chain_j, const AdmissiblePair& pair,
                     PhiDirection dir) {
    if (chain_j.orientation() != ChainOrientation::reversed_reordered)
        throw std::logic_error("phi_j: expects a reversed reordered chain");
    int j = chain_j.reorder_row();
    if (chain_j.lambda().part(j) != chain_j.lambda().part(j + 1))
        throw std::domain_error("phi_j: requires lambda_j = lambda_{j+1}");
    PhiContext c{chain_j, j};
    return dir == PhiDirection::R_to_L ? phi_r_to_l(c, pair)
                                       : phi_l_to_r(c, pair);
}

namespace {

Permutation end_permutation(const LambdaChain& chain, const AdmissiblePair& pair) {
    Permutation e = pair.w;
    for (int p : pair.positions)
        e.apply_transposition_inplace(chain.entry(p).a, chain.entry(p).b);
    return e;
}

}  // namespace

AdmissiblePair full_bijection(const LambdaChain& rev_chain,
                              const AdmissiblePair& pair, PhiDirection dir) {
    if (rev_chain.orientation() != ChainOrientation::reversed)
        throw std::logic_error("full_bijection: expects a reversed chain");
    const Partition& lambda = rev_chain.lambda();
    int n = rev_chain.n();
    for (int p : pair.positions)
        if (rev_chain.column_of(p) == 1)
            throw std::domain_error("full_bijection: T_1 not empty");
    LambdaChain forward = LambdaChain::lambda_chain(lambda, n);
    std::map<int, LambdaChain> reordered;
    auto chain_for = [&](int j) -> const LambdaChain& {
        auto it = reordered.find(j);
        if (it == reordered.end())
            it = reordered.emplace(j, forward.reversed_reordered(j)).first;
        return it->second;
    };

    AdmissiblePair cur = pair;
    auto step = [&](int j) {
        const LambdaChain& cj = chain_for(j);
        std::vector<int> local = cur.positions;
        for (int& p : local) p = cj.position_from_reversed(p);
        std::sort(local.begin(), local.end());
        AdmissiblePair mapped =
            phi_j(cj, {cur.w, std::move(local)},
                  dir == PhiDirection::L_to_R ? PhiDirection::L_to_R
                                              : PhiDirection::R_to_L);
        for (int& p : mapped.positions) p = cj.position_in_reversed(p);
        std::sort(mapped.positions.begin(), mapped.positions.end());
        cur = std::move(mapped);
    };

    auto blocks = lambda.equal_part_blocks(static_cast<std::size_t>(n));
    if (dir == PhiDirection::L_to_R) {
        if (min_coset_rep(end_permutation(rev_chain, pair), lambda) !=
            end_permutation(rev_chain, pair))
            throw std::domain_error("full_bijection: wT not in S_n^lambda");
        for (auto [a, b] : blocks)
            for (;;) {
                int j = 0;
                for (int i = a; i < b; ++i)
                    if (cur.w(i) > cur.w(i + 1)) { j = i; break; }
                if (j == 0) break;
                step(j);
            }
    } else {
        if (min_coset_rep(pair.w, lambda) != pair.w)
            throw std::domain_error("full_bijection: w not in S_n^lambda");
        for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
            auto [a, b] = *it;
            for (;;) {
                Permutation e = end_permutation(rev_chain, cur);
                int j = 0, best = 0;
                for (int i = a; i < b; ++i)
                    if (e(i) > e(i + 1) && e(i) > best) { best = e(i); j = i; }
                if (j == 0) break;
                step(j);
            }
        }
    }
    return cur;
}

namespace {

std::string witness(const AdmissiblePair& pair) {
    std::ostringstream os;
    os << "w=" << pair.w.to_string() << " J={";
    for (std::size_t i = 0; i < pair.positions.size(); ++i)
        os << (i ? "," : "") << pair.positions[i];
    os << "}";
    return os.str();
}

using PairKey = std::pair<std::vector<int>, std::vector<int>>;

PairKey key_of(const AdmissiblePair& p) { return {p.w.word(), p.positions}; }

}  // namespace

std::string BijectionReport::to_json_string() const {
    std::ostringstream os;
    os << "{\"pass\":" << (pass ? "true" : "false") << ",\"size_l\":" << size_l
       << ",\"size_r\":" << size_r << ",\"failures\":[";
    for (std::size_t i = 0; i < failures.size(); ++i) {
        if (i) os << ",";
        os << "\"" << failures[i] << "\"";
    }
    os << "]}";
    return os.str();
}

BijectionReport bijection_report(const Partition& lambda, int n) {
    BijectionReport rep;
    LambdaChain rev = LambdaChain::lambda_chain(lambda, n).reversed();
    std::vector<AdmissiblePair> side_l, side_r;
    for (const auto& w : all_permutations(static_cast<std::size_t>(n))) {
        bool w_min = min_coset_rep(w, lambda) == w;
        for_each_admissible(
            rev, WalkOrientation::increasing, w,
            [&](const AdmissiblePair& pair, const Permutation& end) {
                for (int p : pair.positions)
                    if (rev.column_of(p) == 1) return;
                if (min_coset_rep(end, lambda) == end) side_l.push_back(pair);
                if (w_min) side_r.push_back(pair);
            });
    }
    rep.size_l = side_l.size();
    rep.size_r = side_r.size();
    rep.pass = true;
    auto fail = [&](std::string msg) {
        rep.pass = false;
        if (rep.failures.size() < 50) rep.failures.push_back(std::move(msg));
    };
    if (rep.size_l != rep.size_r) fail("|A^L| != |A^R|");

    std::set<PairKey> r_keys, l_keys, images;
    for (const auto& p : side_r) r_keys.insert(key_of(p));
    for (const auto& p : side_l) l_keys.insert(key_of(p));

    for (const auto& p : side_l) {
        AdmissiblePair img, back;
        try {
            img = full_bijection(rev, p, PhiDirection::L_to_R);
            back = full_bijection(rev, img, PhiDirection::R_to_L);
        } catch (const std::exception& e) {
            fail(std::string(e.what()) + " at " + witness(p));
            continue;
        }
        if (!r_keys.count(key_of(img)))
            fail("image not in A^R at " + witness(p));
        if (!images.insert(key_of(img)).second)
            fail("image collision at " + witness(p));
        if (!(key_of(back) == key_of(p)))
            fail("round trip fails at " + witness(p));
        if (img.w != min_coset_rep(p.w, lambda))
            fail("u != lowest coset rep at " + witness(p));
        if (img.positions.size() != p.positions.size())
            fail("|V| != |T| at " + witness(p));
        if (filling_map(rev, p, FillingMode::f_reverse).content(n) !=
            filling_map(rev, img, FillingMode::f_reverse).content(n))
            fail("content not preserved at " + witness(p));
        int nl = n_stat(p.w, subsequence(rev, p.positions));
        int nr = n_stat(img.w, subsequence(rev, img.positions));
        if (nl != nr - (p.w.length() - img.w.length()))
            fail("N statistic shift fails at " + witness(p));
    }
    if (images.size() != r_keys.size()) fail("full_bijection not surjective");
    for (const auto& p : side_r) {
        try {
            AdmissiblePair img = full_bijection(rev, p, PhiDirection::R_to_L);
            if (!l_keys.count(key_of(img)))
                fail("reverse image not in A^L at " + witness(p));
        } catch (const std::exception& e) {
            fail(std::string(e.what()) + " at " + witness(p));
        }
    }
    return rep;
}

}  // namespace hlkit
