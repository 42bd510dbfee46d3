#include "coxspec/canonical.hpp"

#include <algorithm>
#include <vector>

namespace coxspec {

namespace {

using i64 = std::int64_t;

// Working copy with plain int64 entries (orbit keys must fit; matrices at any
// depth we store have tiny entries, and the conversion checks).
struct Work {
    std::array<i64, kDim * kDim> m;
    i64 at(int i, int j) const { return m[i * kDim + j]; }
};

// Ordered partition of columns 1..10 into groups, stored flat: cols is a
// permutation of 1..10 and gid labels each position's group, nondecreasing.
// The final column order is any order consistent with the group sequence.
struct ColState {
    std::array<std::int8_t, 10> cols;
    std::array<std::int8_t, 10> gid;
};

// Best achievable content of row r given the current column groups: within
// each group entries may be permuted freely, so sort each group's entries
// descending.  Compared groupwise, which equals comparing the concatenation.
void row_profile(const Work& w, int r, const ColState& st, i64* out) {
    int p = 0;
    while (p < 10) {
        int q = p;
        while (q < 10 && st.gid[q] == st.gid[p]) ++q;
        for (int k = p; k < q; ++k) out[k] = w.at(r, st.cols[k]);
        std::sort(out + p, out + q, std::greater<i64>());
        p = q;
    }
}

ColState refine_by_row(const Work& w, int r, const ColState& st) {
    ColState ns = st;
    int p = 0;
    while (p < 10) {
        int q = p;
        while (q < 10 && st.gid[q] == st.gid[p]) ++q;
        std::sort(ns.cols.begin() + p, ns.cols.begin() + q,
                  [&](std::int8_t a, std::int8_t b) { return w.at(r, a) > w.at(r, b); });
        p = q;
    }
    int g = -1;
    for (int k = 0; k < 10; ++k) {
        if (k == 0 || st.gid[k] != st.gid[k - 1] ||
            w.at(r, ns.cols[k]) != w.at(r, ns.cols[k - 1]))
            ++g;
        ns.gid[k] = static_cast<std::int8_t>(g);
    }
    return ns;
}

struct Search {
    const Work& w;
    CanonicalKey best{};
    bool have_best = false;
    std::array<int, 10> placed{};
    // Number of leading placed rows whose key entries equal best's.  Once a
    // row is placed its key entries are frozen (later refinements only
    // reorder columns the row is constant on), so along any path the placed
    // prefix is either equal to best (eq_depth == depth) or strictly greater
    // (eq_depth < depth); lexicographically smaller prefixes are pruned.
    int eq_depth = 0;

    explicit Search(const Work& ww) : w(ww) {}

    void leaf(const ColState& st) {
        if (have_best && eq_depth >= 10) return;  // identical to best
        std::array<int, kDim> cols;
        cols[0] = 0;
        for (int j = 0; j < 10; ++j) cols[j + 1] = st.cols[j];
        std::array<int, kDim> rows;
        rows[0] = 0;
        for (int i = 0; i < 10; ++i) rows[i + 1] = placed[i];
        int t = 0;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) best[t++] = w.at(rows[i], cols[j]);
        have_best = true;
        eq_depth = 10;
    }

    // rows_left is a bitmask over rows 1..10.
    void rec(unsigned rows_left, const ColState& st, int depth) {
        if (rows_left == 0) {
            leaf(st);
            return;
        }
        int cands[10];
        int ncand = 0;
        i64 bestprof[10];
        for (int r = 1; r <= 10; ++r) {
            if (!(rows_left & (1u << r))) continue;
            i64 prof[10];
            row_profile(w, r, st, prof);
            int c = ncand == 0 ? 1 : 0;
            for (int t = 0; t < 10 && c == 0; ++t)
                c = prof[t] < bestprof[t] ? -1 : (prof[t] > bestprof[t] ? 1 : 0);
            if (c > 0) {
                std::copy(prof, prof + 10, bestprof);
                ncand = 0;
                cands[ncand++] = r;
            } else if (c == 0) {
                cands[ncand++] = r;
            }
        }

        // Rows with entrywise-identical raw vectors lead to identical
        // subtrees; explore one of each.
        std::array<i64, 10> seen[10];
        int nseen = 0;
        for (int ci = 0; ci < ncand; ++ci) {
            int r = cands[ci];
            std::array<i64, 10> raw;
            for (int j = 1; j < kDim; ++j) raw[j - 1] = w.at(r, j);
            bool dup = false;
            for (int s = 0; s < nseen && !dup; ++s)
                if (seen[s] == raw) dup = true;
            if (dup) continue;
            seen[nseen++] = raw;

            if (have_best && eq_depth == depth) {
                const i64* b = best.data() + (depth + 1) * kDim;
                i64 rk[kDim];
                rk[0] = w.at(r, 0);
                for (int t = 0; t < 10; ++t) rk[t + 1] = bestprof[t];
                int c = 0;
                for (int t = 0; t < kDim && c == 0; ++t)
                    c = rk[t] < b[t] ? -1 : (rk[t] > b[t] ? 1 : 0);
                if (c < 0) continue;  // prefix falls below best
                if (c == 0) eq_depth = depth + 1;
            }

            placed[depth] = r;
            rec(rows_left & ~(1u << r), refine_by_row(w, r, st), depth + 1);
            eq_depth = std::min(eq_depth, depth);
        }
    }
};

CanonicalKey monomial_key(const std::vector<mpz_class>& vals) {
    std::vector<i64> v;
    for (const auto& x : vals) v.push_back(x.get_si());
    std::sort(v.begin(), v.end(), std::greater<i64>());
    CanonicalKey k{};
    k[0] = 1;
    for (int i = 1; i < kDim; ++i) k[i * kDim + i] = v[i - 1];
    return k;
}

}  // namespace

CanonicalKey canonical_key(const Mat11& m) {
    std::vector<mpz_class> vals;
    if (m.is_monomial(&vals)) return monomial_key(vals);

    if (!m.fits_i64())
        throw std::overflow_error("canonical_key: entry exceeds 64-bit range");
    Work w{m.to_i64()};

    // Row 0 is fixed; its content under a column order is maximized by
    // sorting columns descending on the row-0 entry.
    ColState st;
    for (int j = 0; j < 10; ++j) st.cols[j] = static_cast<std::int8_t>(j + 1);
    std::sort(st.cols.begin(), st.cols.end(),
              [&](std::int8_t a, std::int8_t b) { return w.at(0, a) > w.at(0, b); });
    int g = -1;
    for (int k = 0; k < 10; ++k) {
        if (k == 0 || w.at(0, st.cols[k]) != w.at(0, st.cols[k - 1])) ++g;
        st.gid[k] = static_cast<std::int8_t>(g);
    }

    Search s(w);
    unsigned rows_left = 0;
    for (int i = 1; i < kDim; ++i) rows_left |= 1u << i;
    s.rec(rows_left, st, 0);
    return s.best;
}

CanonicalKey canonical_class_key(const Mat11& m) {
    CanonicalKey a = canonical_key(m);
    CanonicalKey b = canonical_key(m.form_inverse());
    return a > b ? a : b;
}

}  // namespace coxspec
