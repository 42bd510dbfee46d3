// Double-coset level structure: the recursive builder T_n -> T_{n+1}, the
// growth DAG between inversion classes of consecutive levels, the Demazure
// projection onto minimal representatives, and JSONL persistence.
//
// The store keeps one record per double coset.  A coset and its inverse have
// equal spectral sets, so reporting and enumeration work with inversion
// classes: the class key is the greater of the coset key and the inverse
// coset key, and class counts collapse mutually inverse cosets.

#ifndef COXSPEC_STORE_HPP
#define COXSPEC_STORE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxspec/canonical.hpp"
#include "coxspec/lorentz.hpp"

namespace coxspec {

struct incomplete_store_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct out_of_depth_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct store_corruption_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CosetRecord {
    int level = 0;
    TripleTuple tuple;                  // representative; empty = identity
    CanonicalKey key{};                 // canonical_key(trans(tuple))
    CanonicalKey inv_key{};             // canonical_key of the inverse coset
    std::vector<CanonicalKey> parents;  // class keys of level-1 parents

    CanonicalKey class_key() const { return key > inv_key ? key : inv_key; }
};

class LevelStore {
  public:
    // Seeds level 0 (identity) and level 1 (coset of kappa_{1,2,3}).
    LevelStore();

    int built_depth() const { return static_cast<int>(levels_.size()) - 1; }

    // Builds level built_depth()+1 from the current top level; returns the
    // number of inversion classes at the new level.
    std::size_t build_next_level();
    void build_to(int max_level);

    const std::vector<CosetRecord>& level(int n) const;
    std::size_t coset_count(int n) const { return level(n).size(); }
    std::size_t class_count(int n) const;

    // One record per inversion class (the member with the greater coset key
    // when both are stored), in deterministic order.
    std::vector<const CosetRecord*> class_representatives(int n) const;

    const CosetRecord* find(const CanonicalKey& key) const;

    // Level at which the coset of trans(tuple) lives.
    int s0_level(const TripleTuple& tuple) const;

    // Minimal representative of the double coset of m; the empty tuple is the
    // identity marker (m in W(A9)).  Throws out_of_depth_error if unknown.
    const CosetRecord& demazure_project(const Mat11& m) const;
    const CosetRecord& demazure_product(const TripleTuple& x,
                                        const TripleTuple& y) const;

    // Hash of all level key sets; embedded in enumeration checkpoints.
    std::uint64_t fingerprint() const;

    void save(const std::string& dir) const;
    static LevelStore load(const std::string& dir);

  private:
    void index_record(int lv, std::size_t idx);
    std::vector<std::vector<CosetRecord>> levels_;
    std::unordered_map<CanonicalKey, std::pair<int, std::size_t>, KeyHash> index_;
};

}  // namespace coxspec

#endif
