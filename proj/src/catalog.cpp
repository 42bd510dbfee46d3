#include "coxspec/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <json.hpp>

namespace coxspec {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

using i64 = std::int64_t;
using i128 = __int128;

const std::array<std::uint64_t, 11> kFactorial = {1,     1,      2,      6,
                                                 24,    120,    720,    5040,
                                                 40320, 362880, 3628800};

}  // namespace

std::uint64_t perm_rank(const Perm10& p) {
    std::uint64_t r = 0;
    for (int i = 0; i < 10; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < 10; ++j)
            if (p[j] < p[i]) ++smaller;
        r += smaller * kFactorial[9 - i];
    }
    return r;
}

Perm10 perm_unrank(std::uint64_t rank) {
    std::array<int, 10> pool;
    for (int i = 0; i < 10; ++i) pool[i] = i + 1;
    Perm10 p;
    int avail = 10;
    for (int i = 0; i < 10; ++i) {
        std::uint64_t f = kFactorial[9 - i];
        int idx = static_cast<int>(rank / f);
        rank %= f;
        p[i] = pool[idx];
        for (int j = idx; j + 1 < avail; ++j) pool[j] = pool[j + 1];
        --avail;
    }
    return p;
}

std::vector<std::vector<int>> stabilizer_cells(const TripleTuple& tuple) {
    std::array<unsigned, 11> sig{};
    for (std::size_t j = 0; j < tuple.size(); ++j)
        for (int x : tuple[j].m) sig[x] |= 1u << j;
    std::map<unsigned, std::vector<int>> cells;
    for (int x = 1; x <= 10; ++x) cells[sig[x]].push_back(x);
    std::vector<std::vector<int>> out;
    for (auto& [s, c] : cells) out.push_back(std::move(c));
    return out;
}

namespace {

std::vector<Perm10> stabilizer_elements(const TripleTuple& tuple) {
    auto cells = stabilizer_cells(tuple);
    std::vector<std::vector<int>> imgs = cells;
    std::vector<Perm10> out;
    while (true) {
        Perm10 p;
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (std::size_t i = 0; i < cells[c].size(); ++i)
                p[cells[c][i] - 1] = imgs[c][i];
        out.push_back(p);
        std::size_t c = 0;
        while (c < imgs.size() && !std::next_permutation(imgs[c].begin(), imgs[c].end()))
            ++c;
        if (c == imgs.size()) break;
    }
    return out;
}

// --- per-permutation characteristic polynomial -------------------------------

// Ascending coefficients of the degree-11 charpoly; c[11] = 1 always.
using Coeffs12 = std::array<i64, 12>;

struct Coeffs12Hash {
    std::size_t operator()(const Coeffs12& c) const {
        std::size_t h = 1469598103934665603ull;
        for (auto v : c) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Entry bound under which the all-machine-integer route is safe: powers up to
// A^6 stay below 2^63 (11^5 * a^6) and the i128 trace dot products below
// 2^127 (121 * (11^5 a^6)^2).
constexpr i64 kFastEntryBound = 124;

struct RepData {
    TripleTuple tuple;
    Mat11 exact;
    std::array<i64, 121> t;
    bool fast = false;
};

RepData make_rep_data(const CosetRecord& rec) {
    RepData r;
    r.tuple = rec.tuple;
    r.exact = trans(rec.tuple);
    if (r.exact.fits_i64() && r.exact.max_abs() <= kFastEntryBound) {
        auto e = r.exact.to_i64();
        std::copy(e.begin(), e.end(), r.t.begin());
        r.fast = true;
    }
    return r;
}

void matmul11(const std::array<i64, 121>& a, const std::array<i64, 121>& b,
              std::array<i64, 121>& c) {
    for (int i = 0; i < 11; ++i)
        for (int j = 0; j < 11; ++j) {
            i64 acc = 0;
            const i64* ai = &a[i * 11];
            for (int t = 0; t < 11; ++t) acc += ai[t] * b[t * 11 + j];
            c[i * 11 + j] = acc;
        }
}

i64 trace11(const std::array<i64, 121>& a) {
    i64 t = 0;
    for (int i = 0; i < 11; ++i) t += a[i * 12];
    return t;
}

i128 trace_dot(const std::array<i64, 121>& a, const std::array<i64, 121>& b) {
    i128 t = 0;
    for (int i = 0; i < 11; ++i)
        for (int j = 0; j < 11; ++j)
            t += static_cast<i128>(a[i * 11 + j]) * b[j * 11 + i];
    return t;
}

Coeffs12 newton_coeffs(const std::array<i128, 12>& p) {
    std::array<i128, 12> e{};
    e[0] = 1;
    for (int k = 1; k <= 11; ++k) {
        i128 acc = 0;
        for (int i = 1; i <= k; ++i)
            acc += (i % 2 == 1 ? e[k - i] * p[i] : -e[k - i] * p[i]);
        if (acc % k != 0) throw std::logic_error("newton_coeffs: inexact division");
        e[k] = acc / k;
    }
    Coeffs12 c;
    for (int k = 0; k <= 11; ++k) {
        i128 v = (k % 2 == 0 ? e[k] : -e[k]);
        i64 vv = static_cast<i64>(v);
        if (static_cast<i128>(vv) != v)
            throw std::logic_error("newton_coeffs: coefficient overflow");
        c[11 - k] = vv;
    }
    return c;
}

// charpoly of T * P_sigma; column j of the product is column sigma[j-1] of T.
Coeffs12 charpoly_fast(const std::array<i64, 121>& t, const Perm10& sigma) {
    std::array<i64, 121> m;
    for (int i = 0; i < 11; ++i) {
        m[i * 11] = t[i * 11];
        for (int j = 1; j <= 10; ++j) m[i * 11 + j] = t[i * 11 + sigma[j - 1]];
    }
    std::array<i64, 121> a2, a3, a4, a5, a6;
    matmul11(m, m, a2);
    matmul11(a2, m, a3);
    matmul11(a3, m, a4);
    matmul11(a4, m, a5);
    matmul11(a5, m, a6);
    std::array<i128, 12> p{};
    p[1] = trace11(m);
    p[2] = trace11(a2);
    p[3] = trace11(a3);
    p[4] = trace11(a4);
    p[5] = trace11(a5);
    p[6] = trace11(a6);
    p[7] = trace_dot(a3, a4);
    p[8] = trace_dot(a4, a4);
    p[9] = trace_dot(a4, a5);
    p[10] = trace_dot(a5, a5);
    p[11] = trace_dot(a5, a6);
    return newton_coeffs(p);
}

Coeffs12 charpoly_exact(const Mat11& t, const Perm10& sigma) {
    Mat11 m;
    for (int i = 0; i < 11; ++i) {
        m.at(i, 0) = t.at(i, 0);
        for (int j = 1; j <= 10; ++j) m.at(i, j) = t.at(i, sigma[j - 1]);
    }
    IntPoly cp = charpoly(m);
    Coeffs12 c{};
    for (int k = 0; k <= 11; ++k) {
        const mpz_class& v = cp[k];
        if (!v.fits_slong_p()) throw std::logic_error("charpoly coefficient overflow");
        c[k] = v.get_si();
    }
    return c;
}

Coeffs12 charpoly_of(const RepData& rep, const Perm10& sigma) {
    return rep.fast ? charpoly_fast(rep.t, sigma) : charpoly_exact(rep.exact, sigma);
}

// --- enumeration bookkeeping -------------------------------------------------

struct Found {
    std::vector<i64> coeffs;  // ascending Salem coefficients
    std::size_t rep_idx = 0;
    std::uint64_t rank = 0;
};

std::vector<i64> poly_key(const IntPoly& p) {
    std::vector<i64> k;
    for (const auto& c : p.coeffs()) {
        if (!c.fits_slong_p()) throw std::logic_error("salem coefficient overflow");
        k.push_back(c.get_si());
    }
    return k;
}

IntPoly poly_from_key(const std::vector<i64>& k) {
    std::vector<mpz_class> c(k.begin(), k.end());
    return IntPoly(std::move(c));
}

struct ChunkResult {
    std::vector<Found> found;
    std::vector<Found> non_salem;  // coeffs = stripped non-Salem part
};

// Processes permutation ranks [r0, r1) for one representative.  Local dedup
// only; the caller merges chunks in order, so duplicated work across chunk
// boundaries is harmless and the merged result is order-deterministic.
ChunkResult process_range(const RepData& rep, std::size_t rep_idx,
                          std::uint64_t r0, std::uint64_t r1,
                          const Catalog& cat) {
    ChunkResult out;
    std::unordered_set<Coeffs12, Coeffs12Hash> seen_cp;
    std::set<std::vector<i64>> seen_salem;
    Perm10 sigma = perm_unrank(r0);
    for (std::uint64_t r = r0; r < r1; ++r) {
        Coeffs12 cp = charpoly_of(rep, sigma);
        if (seen_cp.insert(cp).second) {
            std::vector<mpz_class> cv(cp.begin(), cp.end());
            auto [salem, cyc] = strip_cyclotomic(IntPoly(std::move(cv)));
            if (salem.degree() > 0) {
                if (!is_salem(salem)) {
                    out.non_salem.push_back({poly_key(salem), rep_idx, r});
                } else {
                    std::vector<i64> key = poly_key(salem);
                    if (!cat.find(salem) && seen_salem.insert(key).second)
                        out.found.push_back({std::move(key), rep_idx, r});
                }
            }
        }
        std::next_permutation(sigma.begin(), sigma.end());
    }
    return out;
}

// Same handling for a single permutation; used on the symmetry-reduced path
// where the caller owns the dedup state.
void process_one(const RepData& rep, std::size_t rep_idx, const Perm10& sigma,
                 std::uint64_t rank, const Catalog& cat,
                 std::unordered_set<Coeffs12, Coeffs12Hash>& seen_cp,
                 std::set<std::vector<i64>>& seen_salem, ChunkResult& out) {
    Coeffs12 cp = charpoly_of(rep, sigma);
    if (!seen_cp.insert(cp).second) return;
    std::vector<mpz_class> cv(cp.begin(), cp.end());
    auto [salem, cyc] = strip_cyclotomic(IntPoly(std::move(cv)));
    if (salem.degree() <= 0) return;
    if (!is_salem(salem)) {
        out.non_salem.push_back({poly_key(salem), rep_idx, rank});
        return;
    }
    std::vector<i64> key = poly_key(salem);
    if (!cat.find(salem) && seen_salem.insert(key).second)
        out.found.push_back({std::move(key), rep_idx, rank});
}

// --- checkpointing -----------------------------------------------------------

struct CheckpointState {
    std::uint64_t next_unit = 0;  // chunk index (full scan) or rep index (reduced)
    std::vector<Found> found;
    std::vector<Found> non_salem;
};

std::string checkpoint_path(const std::string& dir, int level) {
    return (fs::path(dir) / ("level_" + std::to_string(level) + ".ckpt.json")).string();
}

json found_to_json(const std::vector<Found>& v) {
    json a = json::array();
    for (const auto& f : v) {
        json j;
        j["coeffs"] = f.coeffs;
        j["rep"] = f.rep_idx;
        j["rank"] = std::to_string(f.rank);
        a.push_back(std::move(j));
    }
    return a;
}

std::vector<Found> found_from_json(const json& a) {
    std::vector<Found> v;
    for (const auto& j : a) {
        Found f;
        f.coeffs = j.at("coeffs").get<std::vector<i64>>();
        f.rep_idx = j.at("rep").get<std::size_t>();
        f.rank = std::stoull(j.at("rank").get<std::string>());
        v.push_back(std::move(f));
    }
    return v;
}

void write_checkpoint(const std::string& dir, int level, std::uint64_t fingerprint,
                      bool reduced, const CheckpointState& st) {
    json j;
    j["fingerprint"] = std::to_string(fingerprint);
    j["level"] = level;
    j["symmetry_reduction"] = reduced;
    j["next_unit"] = st.next_unit;
    j["found"] = found_to_json(st.found);
    j["non_salem"] = found_to_json(st.non_salem);
    std::string tmp = checkpoint_path(dir, level) + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump() << '\n';
    }
    fs::rename(tmp, checkpoint_path(dir, level));
}

std::optional<CheckpointState> read_checkpoint(const std::string& dir, int level,
                                               std::uint64_t fingerprint,
                                               bool reduced) {
    std::string path = checkpoint_path(dir, level);
    if (!fs::exists(path)) return std::nullopt;
    json j;
    try {
        std::ifstream in(path);
        in >> j;
        CheckpointState st;
        if (j.at("fingerprint").get<std::string>() != std::to_string(fingerprint))
            throw checkpoint_corruption_error(
                "checkpoint store fingerprint mismatch: " + path);
        if (j.at("level").get<int>() != level ||
            j.at("symmetry_reduction").get<bool>() != reduced)
            throw checkpoint_corruption_error("checkpoint options mismatch: " + path);
        st.next_unit = j.at("next_unit").get<std::uint64_t>();
        st.found = found_from_json(j.at("found"));
        st.non_salem = found_from_json(j.at("non_salem"));
        return st;
    } catch (const json::exception& e) {
        throw checkpoint_corruption_error("unreadable checkpoint " + path + ": " +
                                          e.what());
    }
}

constexpr std::uint64_t kChunk = 1000000;

}  // namespace

// --- Catalog -----------------------------------------------------------------

int Catalog::max_enumerated_level() const {
    return enumerated_.empty() ? 0 : *enumerated_.rbegin();
}

std::vector<std::size_t> Catalog::level_indices(int n) const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < records_.size(); ++i)
        if (records_[i].first_level == n) idx.push_back(i);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        mpq_class ma = records_[a].salem.radius.midpoint();
        mpq_class mb = records_[b].salem.radius.midpoint();
        if (ma != mb) return ma < mb;
        return records_[a].salem.poly.coeffs() < records_[b].salem.poly.coeffs();
    });
    return idx;
}

std::optional<std::size_t> Catalog::find(const IntPoly& salem_poly) const {
    auto it = by_coeffs_.find(poly_key(salem_poly));
    if (it == by_coeffs_.end()) return std::nullopt;
    return it->second;
}

std::size_t Catalog::insert(SalemPolynomial sp, int level, Witness w) {
    auto key = poly_key(sp.poly);
    auto [it, fresh] = by_coeffs_.emplace(std::move(key), records_.size());
    if (!fresh) return it->second;
    SalemRecord rec{std::move(sp), level, true, -1, 0, std::move(w)};
    records_.push_back(std::move(rec));
    return records_.size() - 1;
}

std::size_t Catalog::enumerate_level(const LevelStore& store, int n,
                                     const EnumerateOptions& opts) {
    if (n < 1) throw std::invalid_argument("enumerate_level: level must be >= 1");
    if (level_enumerated(n))
        throw std::invalid_argument("level " + std::to_string(n) + " already enumerated");
    if (max_enumerated_level() != n - 1)
        throw std::invalid_argument("levels must be enumerated in order");
    auto reps_ptrs = store.class_representatives(n);  // throws if not built

    std::vector<RepData> reps;
    reps.reserve(reps_ptrs.size());
    for (const auto* r : reps_ptrs) reps.push_back(make_rep_data(*r));

    const bool ckpt = !opts.checkpoint_dir.empty();
    const std::uint64_t fp = store.fingerprint();
    CheckpointState st;
    if (ckpt) {
        fs::create_directories(opts.checkpoint_dir);
        if (auto resumed =
                read_checkpoint(opts.checkpoint_dir, n, fp, opts.symmetry_reduction))
            st = std::move(*resumed);
    }
    std::set<std::vector<i64>> seen_salem;
    for (const auto& f : st.found) seen_salem.insert(f.coeffs);

    auto merge = [&](ChunkResult&& cr) {
        for (auto& f : cr.found)
            if (seen_salem.insert(f.coeffs).second) st.found.push_back(std::move(f));
        for (auto& a : cr.non_salem) st.non_salem.push_back(std::move(a));
    };

    const std::uint64_t total = reps.size() * kPermCount;

    if (opts.symmetry_reduction) {
        // Sequential orbit walk per representative; sigma is processed only
        // when it is the rank-minimal member of its stabilizer-conjugation
        // orbit, which is exactly the first member the full scan would meet.
        std::unordered_set<Coeffs12, Coeffs12Hash> seen_cp;
        for (std::size_t ri = st.next_unit; ri < reps.size(); ++ri) {
            auto stab = stabilizer_elements(reps[ri].tuple);
            std::vector<bool> marked(kPermCount, false);
            ChunkResult cr;
            Perm10 sigma;
            for (int i = 0; i < 10; ++i) sigma[i] = i + 1;
            for (std::uint64_t r = 0; r < kPermCount; ++r) {
                if (!marked[r]) {
                    process_one(reps[ri], ri, sigma, r, *this, seen_cp, seen_salem, cr);
                    for (const auto& pi : stab) {
                        Perm10 inv, tau;
                        for (int i = 0; i < 10; ++i) inv[pi[i] - 1] = i + 1;
                        for (int i = 0; i < 10; ++i) tau[i] = pi[sigma[inv[i] - 1] - 1];
                        marked[perm_rank(tau)] = true;
                    }
                }
                std::next_permutation(sigma.begin(), sigma.end());
            }
            for (auto& f : cr.found) st.found.push_back(std::move(f));
            for (auto& a : cr.non_salem) st.non_salem.push_back(std::move(a));
            st.next_unit = ri + 1;
            if (ckpt) write_checkpoint(opts.checkpoint_dir, n, fp, true, st);
            if (opts.progress) opts.progress((ri + 1) * kPermCount, total);
        }
    } else {
        const std::uint64_t chunks_per_rep = (kPermCount + kChunk - 1) / kChunk;
        const std::uint64_t nchunks = reps.size() * chunks_per_rep;
        const int nthreads = std::max(1, opts.threads);
        std::uint64_t c = st.next_unit;
        while (c < nchunks) {
            int batch = static_cast<int>(
                std::min<std::uint64_t>(nthreads, nchunks - c));
            std::vector<ChunkResult> results(batch);
            std::vector<std::thread> workers;
            for (int b = 0; b < batch; ++b) {
                std::uint64_t chunk = c + b;
                std::size_t ri = chunk / chunks_per_rep;
                std::uint64_t r0 = (chunk % chunks_per_rep) * kChunk;
                std::uint64_t r1 = std::min(r0 + kChunk, kPermCount);
                workers.emplace_back([&, b, ri, r0, r1] {
                    results[b] = process_range(reps[ri], ri, r0, r1, *this);
                });
            }
            for (auto& w : workers) w.join();
            for (auto& res : results) merge(std::move(res));
            c += batch;
            st.next_unit = c;
            if (ckpt) write_checkpoint(opts.checkpoint_dir, n, fp, false, st);
            if (opts.progress)
                opts.progress(std::min<std::uint64_t>(c * kChunk, total), total);
        }
    }

    std::size_t new_count = 0;
    for (const auto& f : st.found) {
        SalemPolynomial sp = SalemPolynomial::make(poly_from_key(f.coeffs));
        Witness w{reps[f.rep_idx].tuple, perm_unrank(f.rank)};
        insert(std::move(sp), n, std::move(w));
        ++new_count;
    }
    for (const auto& a : st.non_salem)
        non_salem_.push_back({reps[a.rep_idx].tuple, perm_unrank(a.rank)});
    enumerated_.insert(n);
    if (ckpt) fs::remove(checkpoint_path(opts.checkpoint_dir, n));
    return new_count;
}

void Catalog::mark_primitive() {
    for (auto& r : records_) {
        r.primitive = true;
        r.base_index = -1;
        r.exponent = 0;
    }
    if (records_.empty()) return;
    std::vector<std::size_t> order(records_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return records_[a].salem.radius.midpoint() < records_[b].salem.radius.midpoint();
    });
    double max_radius = records_[order.back()].radius();
    for (std::size_t base : order) {
        double r = records_[base].radius();
        for (int k = 2; std::pow(r, k) <= max_radius + 1e-6; ++k) {
            SalemPolynomial pk = minpoly_power(records_[base].salem, k);
            auto hit = find(pk.poly);
            if (hit && *hit != base && records_[*hit].primitive) {
                records_[*hit].primitive = false;
                records_[*hit].base_index = static_cast<int>(base);
                records_[*hit].exponent = k;
            }
        }
    }
}

EnvelopeSummary Catalog::envelopes() const {
    EnvelopeSummary s;
    std::optional<std::size_t> running_max;
    std::map<int, double> m_tilde;
    for (int n : enumerated_) {
        auto idx = level_indices(n);
        if (idx.empty()) continue;
        EnvelopeRow row;
        row.level = n;
        row.min_new_index = idx.front();
        m_tilde[n] = records_[idx.front()].radius();
        for (std::size_t i : idx) {
            if (!running_max ||
                records_[i].salem.radius.midpoint() >
                    records_[*running_max].salem.radius.midpoint())
                running_max = i;
        }
        row.max_index = *running_max;
        s.rows.push_back(row);
    }
    // delta = m~_3 / M_2
    const EnvelopeRow* r2 = nullptr;
    for (const auto& r : s.rows)
        if (r.level == 2) r2 = &r;
    if (r2 && m_tilde.count(3))
        s.delta = m_tilde[3] / records_[r2->max_index].radius();
    return s;
}

GapRow Catalog::gap_stats(int level) const {
    auto idx = level_indices(level);
    if (idx.size() < 2)
        throw std::invalid_argument("gap_stats: fewer than 2 new records at level " +
                                    std::to_string(level));
    std::vector<double> radii;
    for (std::size_t i : idx) radii.push_back(std::stod(records_[i].salem.radius.decimal()));
    std::vector<double> gaps;
    for (std::size_t i = 1; i < radii.size(); ++i)
        gaps.push_back(radii[i] - radii[i - 1]);
    GapRow row;
    row.level = level;
    row.count = gaps.size();
    for (double g : gaps) row.mean += g;
    row.mean /= gaps.size();
    if (gaps.size() > 1) {
        double ss = 0;
        for (double g : gaps) ss += (g - row.mean) * (g - row.mean);
        row.stddev = std::sqrt(ss / (gaps.size() - 1));
    }
    return row;
}

namespace {

std::vector<std::size_t> radius_order(const std::vector<SalemRecord>& records) {
    std::vector<std::size_t> order(records.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        mpq_class ma = records[a].salem.radius.midpoint();
        mpq_class mb = records[b].salem.radius.midpoint();
        if (ma != mb) return ma < mb;
        return records[a].salem.poly.coeffs() < records[b].salem.poly.coeffs();
    });
    return order;
}

json descending_coeffs(const IntPoly& p) {
    json a = json::array();
    for (int i = p.degree(); i >= 0; --i) {
        if (!p[i].fits_slong_p()) throw std::logic_error("coefficient overflow");
        a.push_back(p[i].get_si());
    }
    return a;
}

}  // namespace

void Catalog::export_jsonl(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    for (std::size_t i : radius_order(records_)) {
        const SalemRecord& r = records_[i];
        json j;
        j["coeffs"] = descending_coeffs(r.salem.poly);
        j["degree"] = r.salem.degree();
        j["radius"] = r.salem.radius.decimal();
        j["enclosure"] = {r.salem.radius.lower.get_str(), r.salem.radius.upper.get_str()};
        j["first_level"] = r.first_level;
        j["primitive"] = r.primitive;
        json tup = json::array();
        for (const auto& t : r.witness.tuple) tup.push_back({t.m[0], t.m[1], t.m[2]});
        j["witness"] = {{"tuple", tup},
                        {"perm", std::vector<int>(r.witness.perm.begin(),
                                                  r.witness.perm.end())}};
        if (!r.primitive) {
            j["base"] = descending_coeffs(records_[r.base_index].salem.poly);
            j["exponent"] = r.exponent;
        }
        out << j.dump() << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void Catalog::export_csv(const std::string& path, int level,
                         bool primitive_only) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "k,radius,degree,half_coeffs\n";
    std::size_t k = 0;
    for (std::size_t i : radius_order(records_)) {
        const SalemRecord& r = records_[i];
        if (level >= 0 && r.first_level != level) continue;
        if (primitive_only && !r.primitive) continue;
        auto half = half_coefficients(r.salem.poly);
        std::ostringstream hs;
        for (std::size_t h = 0; h < half.size(); ++h) {
            if (h) hs << ';';
            hs << half[h].get_str();
        }
        out << ++k << ',' << r.salem.radius.decimal() << ',' << r.salem.degree()
            << ',' << hs.str() << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

Catalog Catalog::load_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog: " + path);
    Catalog cat;
    struct Pending {
        std::size_t idx;
        std::vector<i64> base_key;  // ascending
        int exponent;
    };
    std::vector<Pending> pending;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        auto desc = j.at("coeffs").get<std::vector<i64>>();
        std::vector<mpz_class> asc(desc.rbegin(), desc.rend());
        SalemPolynomial sp = SalemPolynomial::make(IntPoly(std::move(asc)));
        Witness w;
        for (const auto& t : j.at("witness").at("tuple"))
            w.tuple.emplace_back(t[0].get<int>(), t[1].get<int>(), t[2].get<int>());
        auto pv = j.at("witness").at("perm").get<std::vector<int>>();
        if (pv.size() != 10) throw std::runtime_error("bad witness permutation");
        std::copy(pv.begin(), pv.end(), w.perm.begin());
        int lvl = j.at("first_level").get<int>();
        std::size_t idx = cat.insert(std::move(sp), lvl, std::move(w));
        cat.records_[idx].primitive = j.at("primitive").get<bool>();
        if (!cat.records_[idx].primitive) {
            auto bdesc = j.at("base").get<std::vector<i64>>();
            pending.push_back(
                {idx, std::vector<i64>(bdesc.rbegin(), bdesc.rend()), j.at("exponent").get<int>()});
        }
    }
    for (const auto& p : pending) {
        auto it = cat.by_coeffs_.find(p.base_key);
        if (it == cat.by_coeffs_.end())
            throw std::runtime_error("catalog base record missing");
        cat.records_[p.idx].base_index = static_cast<int>(it->second);
        cat.records_[p.idx].exponent = p.exponent;
    }
    for (const auto& r : cat.records_)
        for (int n = 1; n <= r.first_level; ++n) cat.enumerated_.insert(n);
    return cat;
}

}  // namespace coxspec
