// The Salem-radius catalog: level-wise enumeration of spectral supersets,
// deduplicated Salem records with witnesses, primitivity marking, envelope
// and gap summaries, and JSONL/CSV persistence.
//
// Enumeration per level-n inversion class with representative tuple I:
// the Salem part of charpoly(trans(I) * permutation_matrix(sigma)) over all
// sigma in S_10, deduplicated by exact coefficient vector.  The witness of a
// record is the first (representative, permutation rank) that produced it;
// chunked processing keeps that choice independent of thread count.

#ifndef COXSPEC_CATALOG_HPP
#define COXSPEC_CATALOG_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxspec/salem.hpp"
#include "coxspec/store.hpp"

namespace coxspec {

struct checkpoint_corruption_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct missing_witness_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Perm10 = std::array<int, 10>;  // 1-based images of 1..10

std::uint64_t perm_rank(const Perm10& p);       // lexicographic, 0-based
Perm10 perm_unrank(std::uint64_t rank);
constexpr std::uint64_t kPermCount = 3628800;   // 10!

struct Witness {
    TripleTuple tuple;
    Perm10 perm;
};

struct SalemRecord {
    SalemPolynomial salem;
    int first_level = 0;
    bool primitive = true;
    int base_index = -1;  // catalog index of the base Salem when a power
    int exponent = 0;     // k >= 2 with minpoly_power(base, k) = salem.poly
    Witness witness;

    double radius() const { return salem.radius.to_double(); }
};

struct EnvelopeRow {
    int level = 0;
    std::size_t min_new_index = 0;  // record attaining m~_n
    std::size_t max_index = 0;      // record attaining M_n
};

struct EnvelopeSummary {
    std::vector<EnvelopeRow> rows;
    std::optional<double> delta;  // m~_3 / M_2 once level 3 is built
};

struct GapRow {
    int level = 0;
    std::size_t count = 0;  // gaps, i.e. new records minus one
    double mean = 0;
    double stddev = 0;  // sample convention (divide by count - 1)
};

struct EnumerateOptions {
    int threads = 1;
    bool symmetry_reduction = false;
    std::string checkpoint_dir;  // empty disables checkpointing
    std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

class Catalog {
  public:
    std::size_t size() const { return records_.size(); }
    const SalemRecord& record(std::size_t i) const { return records_[i]; }
    const std::vector<SalemRecord>& records() const { return records_; }

    bool level_enumerated(int n) const { return enumerated_.count(n) > 0; }
    int max_enumerated_level() const;

    // Indices with first_level == n, sorted ascending by radius.
    std::vector<std::size_t> level_indices(int n) const;
    // Lookup by exact ascending coefficient vector; nullopt when absent.
    std::optional<std::size_t> find(const IntPoly& salem_poly) const;

    // Enumerates level n (store must be built through n); returns the number
    // of newly emerged records.  Levels must be enumerated in order.
    std::size_t enumerate_level(const LevelStore& store, int n,
                                const EnumerateOptions& opts = {});

    // Witnesses whose stripped charpoly part is reciprocal but not Salem.
    // These are quadratic unit radii (t^2 - at + 1, first seen at level 3 as
    // t^2 - 3t + 1); spectral radii of degree < 4 fall outside the Salem
    // catalog and are surfaced here instead of being recorded.
    const std::vector<Witness>& non_salem() const { return non_salem_; }

    void mark_primitive();

    EnvelopeSummary envelopes() const;
    GapRow gap_stats(int level) const;

    void export_jsonl(const std::string& path) const;
    // level = -1 exports everything; otherwise only first_level == level.
    void export_csv(const std::string& path, int level = -1,
                    bool primitive_only = false) const;
    static Catalog load_jsonl(const std::string& path);

  private:
    std::size_t insert(SalemPolynomial sp, int level, Witness w);

    std::vector<SalemRecord> records_;
    std::map<std::vector<std::int64_t>, std::size_t> by_coeffs_;  // ascending
    std::vector<Witness> non_salem_;
    std::set<int> enumerated_;
};

// Setwise stabilizer of the tuple's triple pattern: all permutations fixing
// every triple of the tuple setwise, as the cells of the membership-signature
// partition of {1..10}.
std::vector<std::vector<int>> stabilizer_cells(const TripleTuple& tuple);

}  // namespace coxspec

#endif
