#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "coxspec/catalog.hpp"

using namespace coxspec;
namespace fs = std::filesystem;

namespace {

const LevelStore& store1() {
    static LevelStore st;
    return st;
}

struct interrupt_for_test {};

bool same_catalog(const Catalog& a, const Catalog& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const SalemRecord& x = a.record(i);
        const SalemRecord& y = b.record(i);
        if (!(x.salem.poly == y.salem.poly)) return false;
        if (x.first_level != y.first_level) return false;
        if (!(x.witness.tuple == y.witness.tuple)) return false;
        if (x.witness.perm != y.witness.perm) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("permutation ranking is a bijection") {
    Perm10 id{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    CHECK(perm_rank(id) == 0);
    CHECK(perm_unrank(0) == id);
    Perm10 last{10, 9, 8, 7, 6, 5, 4, 3, 2, 1};
    CHECK(perm_rank(last) == kPermCount - 1);
    for (std::uint64_t r : {std::uint64_t(1), std::uint64_t(123456),
                            std::uint64_t(3628799)})
        CHECK(perm_rank(perm_unrank(r)) == r);
}

TEST_CASE("stabilizer cells partition the ground set by membership signature") {
    auto cells = stabilizer_cells({Triple(1, 4, 5), Triple(1, 2, 3)});
    // signatures: {1} in both, {2,3} first only, {4,5} second only, rest none
    std::size_t total = 0;
    for (const auto& c : cells) total += c.size();
    CHECK(total == 10);
    bool has23 = false, has45 = false, has1 = false;
    for (const auto& c : cells) {
        if (c == std::vector<int>{1}) has1 = true;
        if (c == std::vector<int>{2, 3}) has23 = true;
        if (c == std::vector<int>{4, 5}) has45 = true;
    }
    CHECK(has1);
    CHECK(has23);
    CHECK(has45);
}

TEST_CASE("level-1 enumeration finds the eleven radii") {
    Catalog cat;
    EnumerateOptions opts;
    opts.symmetry_reduction = true;
    CHECK(cat.enumerate_level(store1(), 1, opts) == 11);
    CHECK(cat.level_enumerated(1));
    CHECK(cat.non_salem().empty());

    auto idx = cat.level_indices(1);
    REQUIRE(idx.size() == 11);
    CHECK(cat.record(idx.front()).salem.radius.decimal() == "1.17628");
    CHECK(cat.record(idx.back()).salem.radius.decimal() == "1.43100");
    for (std::size_t i = 1; i < idx.size(); ++i)
        CHECK(cat.record(idx[i - 1]).radius() < cat.record(idx[i]).radius());

    cat.mark_primitive();
    int primitive = 0;
    for (const auto& r : cat.records()) primitive += r.primitive ? 1 : 0;
    CHECK(primitive == 10);
    // the eighth radius is the square of the first
    const SalemRecord& eighth = cat.record(idx[7]);
    CHECK(!eighth.primitive);
    CHECK(eighth.exponent == 2);
    CHECK(eighth.base_index == static_cast<int>(idx[0]));

    GapRow g = cat.gap_stats(1);
    CHECK(g.count == 10);
    CHECK(g.mean == doctest::Approx(0.0255).epsilon(0.02));

    SUBCASE("jsonl roundtrip preserves records") {
        fs::path path = fs::temp_directory_path() / "coxspec_cat_test.jsonl";
        cat.export_jsonl(path.string());
        Catalog back = Catalog::load_jsonl(path.string());
        CHECK(same_catalog(cat, back));
        CHECK(back.record(back.level_indices(1)[7]).exponent == 2);
        fs::remove(path);
    }

    SUBCASE("csv export writes one row per record") {
        fs::path path = fs::temp_directory_path() / "coxspec_cat_test.csv";
        cat.export_csv(path.string(), 1, false);
        std::ifstream in(path.string());
        std::string line;
        int rows = 0;
        while (std::getline(in, line))
            if (!line.empty()) ++rows;
        CHECK(rows == 12);  // header + 11
        fs::remove(path);
    }
}

TEST_CASE("enumeration order is enforced") {
    Catalog cat;
    LevelStore st;
    st.build_to(2);
    CHECK_THROWS_AS(cat.enumerate_level(st, 2, {}), std::invalid_argument);
}

TEST_CASE("full scan, threading, and checkpoint resume agree with the reduced walk") {
    Catalog reduced;
    EnumerateOptions ropts;
    ropts.symmetry_reduction = true;
    reduced.enumerate_level(store1(), 1, ropts);

    fs::path ckdir = fs::temp_directory_path() / "coxspec_ckpt_test";
    fs::remove_all(ckdir);

    Catalog resumed;
    EnumerateOptions opts;
    opts.threads = 2;
    opts.checkpoint_dir = ckdir.string();
    opts.progress = [](std::uint64_t done, std::uint64_t) {
        if (done >= 1000000) throw interrupt_for_test{};
    };
    CHECK_THROWS_AS(resumed.enumerate_level(store1(), 1, opts),
                    interrupt_for_test);
    CHECK(fs::exists(ckdir / "level_1.ckpt.json"));

    opts.progress = nullptr;
    opts.threads = 3;
    CHECK(resumed.enumerate_level(store1(), 1, opts) == 11);
    CHECK(same_catalog(reduced, resumed));
    CHECK(!fs::exists(ckdir / "level_1.ckpt.json"));  // removed on completion

    // a corrupt checkpoint is rejected loudly
    fs::create_directories(ckdir);
    {
        std::ofstream out(ckdir / "level_1.ckpt.json");
        out << "not a checkpoint\n";
    }
    Catalog fresh;
    CHECK_THROWS_AS(fresh.enumerate_level(store1(), 1, opts),
                    checkpoint_corruption_error);
    fs::remove_all(ckdir);
}
