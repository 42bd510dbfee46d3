#include "coxspec/store.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace coxspec {

namespace fs = std::filesystem;
using nlohmann::json;

LevelStore::LevelStore() {
    levels_.resize(2);
    CosetRecord id;
    id.level = 0;
    id.key = id.inv_key = canonical_key(Mat11::identity());
    levels_[0].push_back(id);
    index_record(0, 0);

    CosetRecord s0;
    s0.level = 1;
    s0.tuple = {Triple(1, 2, 3)};
    Mat11 m = trans(s0.tuple);
    s0.key = canonical_key(m);
    s0.inv_key = s0.key;  // reflection, self-inverse
    s0.parents = {id.key};
    levels_[1].push_back(s0);
    index_record(1, 0);
}

void LevelStore::index_record(int lv, std::size_t idx) {
    index_[levels_[lv][idx].key] = {lv, idx};
}

const std::vector<CosetRecord>& LevelStore::level(int n) const {
    if (n < 0 || n > built_depth())
        throw incomplete_store_error("level " + std::to_string(n) + " not built");
    return levels_[n];
}

std::size_t LevelStore::class_count(int n) const {
    std::set<CanonicalKey> cls;
    for (const auto& r : level(n)) cls.insert(r.class_key());
    return cls.size();
}

std::vector<const CosetRecord*> LevelStore::class_representatives(int n) const {
    std::map<CanonicalKey, const CosetRecord*> byclass;
    for (const auto& r : level(n)) {
        auto ck = r.class_key();
        auto it = byclass.find(ck);
        if (it == byclass.end() || r.key > it->second->key) byclass[ck] = &r;
    }
    std::vector<const CosetRecord*> out;
    for (auto& [k, r] : byclass) out.push_back(r);
    return out;
}

std::size_t LevelStore::build_next_level() {
    int n = built_depth();
    const auto triples = all_triples();
    std::vector<CosetRecord> next;
    std::unordered_map<CanonicalKey, std::size_t, KeyHash> local;

    for (const auto& parent : levels_[n]) {
        CanonicalKey pk = parent.class_key();
        const Triple* first = parent.tuple.empty() ? nullptr : &parent.tuple.front();
        for (const auto& tri : triples) {
            if (first && intersection_size(tri, *first) > 1) continue;
            TripleTuple nt;
            nt.reserve(parent.tuple.size() + 1);
            nt.push_back(tri);
            nt.insert(nt.end(), parent.tuple.begin(), parent.tuple.end());
            Mat11 m = trans(nt);
            CanonicalKey k = canonical_key(m);
            if (auto it = index_.find(k); it != index_.end()) continue;  // lower coset
            if (auto it = local.find(k); it != local.end()) {
                auto& ps = next[it->second].parents;
                if (std::find(ps.begin(), ps.end(), pk) == ps.end()) ps.push_back(pk);
                continue;
            }
            CosetRecord rec;
            rec.level = n + 1;
            rec.tuple = std::move(nt);
            rec.key = k;
            rec.inv_key = canonical_key(m.form_inverse());
            rec.parents = {pk};
            local[k] = next.size();
            next.push_back(std::move(rec));
        }
    }
    levels_.push_back(std::move(next));
    for (std::size_t i = 0; i < levels_.back().size(); ++i)
        index_record(n + 1, i);
    return class_count(n + 1);
}

void LevelStore::build_to(int max_level) {
    while (built_depth() < max_level) build_next_level();
}

const CosetRecord* LevelStore::find(const CanonicalKey& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? nullptr : &levels_[it->second.first][it->second.second];
}

int LevelStore::s0_level(const TripleTuple& tuple) const {
    if (static_cast<int>(tuple.size()) > built_depth())
        throw incomplete_store_error("store shallower than tuple length");
    const CosetRecord* r = find(canonical_key(trans(tuple)));
    if (!r) throw out_of_depth_error("tuple key not present at any built level");
    return r->level;
}

const CosetRecord& LevelStore::demazure_project(const Mat11& m) const {
    const CosetRecord* r = find(canonical_key(m));
    if (!r)
        throw out_of_depth_error(
            "element's s0-length exceeds the built depth of the store");
    return *r;
}

const CosetRecord& LevelStore::demazure_product(const TripleTuple& x,
                                                const TripleTuple& y) const {
    return demazure_project(trans(x) * trans(y));
}

std::uint64_t LevelStore::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& lv : levels_) {
        std::vector<CanonicalKey> keys;
        for (const auto& r : lv) keys.push_back(r.key);
        std::sort(keys.begin(), keys.end());
        for (const auto& k : keys)
            for (auto v : k) {
                h ^= static_cast<std::uint64_t>(v);
                h *= 1099511628211ull;
            }
    }
    return h;
}

namespace {

json key_to_json(const CanonicalKey& k) {
    json a = json::array();
    for (auto v : k) a.push_back(std::to_string(v));
    return a;
}

CanonicalKey key_from_json(const json& a) {
    if (!a.is_array() || a.size() != kDim * kDim)
        throw store_corruption_error("bad key array");
    CanonicalKey k;
    for (int i = 0; i < kDim * kDim; ++i)
        k[i] = std::stoll(a[i].get<std::string>());
    return k;
}

}  // namespace

void LevelStore::save(const std::string& dir) const {
    fs::create_directories(dir);
    for (int n = 0; n <= built_depth(); ++n) {
        std::ofstream out(fs::path(dir) / ("level_" + std::to_string(n) + ".jsonl"));
        for (const auto& r : levels_[n]) {
            json j;
            j["level"] = std::to_string(r.level);
            json tup = json::array();
            for (const auto& t : r.tuple)
                tup.push_back({std::to_string(t.m[0]), std::to_string(t.m[1]),
                               std::to_string(t.m[2])});
            j["tuple"] = tup;
            j["key"] = key_to_json(r.key);
            j["inv_key"] = key_to_json(r.inv_key);
            json ps = json::array();
            for (const auto& p : r.parents) ps.push_back(key_to_json(p));
            j["parents"] = ps;
            std::string line = j.dump();
            out << line.size() << ' ' << line << '\n';
        }
    }
}

LevelStore LevelStore::load(const std::string& dir) {
    LevelStore st;
    for (int n = 2;; ++n) {
        fs::path p = fs::path(dir) / ("level_" + std::to_string(n) + ".jsonl");
        if (!fs::exists(p)) break;
        std::ifstream in(p);
        std::vector<CosetRecord> recs;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto sp = line.find(' ');
            if (sp == std::string::npos) throw store_corruption_error("missing length prefix");
            std::size_t len = std::stoull(line.substr(0, sp));
            std::string body = line.substr(sp + 1);
            if (body.size() != len) throw store_corruption_error("length prefix mismatch");
            json j = json::parse(body);
            CosetRecord r;
            r.level = std::stoi(j["level"].get<std::string>());
            if (r.level != n) throw store_corruption_error("record level mismatch");
            for (const auto& t : j["tuple"])
                r.tuple.emplace_back(std::stoi(t[0].get<std::string>()),
                                     std::stoi(t[1].get<std::string>()),
                                     std::stoi(t[2].get<std::string>()));
            r.key = key_from_json(j["key"]);
            r.inv_key = key_from_json(j["inv_key"]);
            for (const auto& p : j["parents"]) r.parents.push_back(key_from_json(p));
            // cross-check the stored key against the tuple
            if (canonical_key(trans(r.tuple)) != r.key)
                throw store_corruption_error("key does not match tuple");
            recs.push_back(std::move(r));
        }
        st.levels_.push_back(std::move(recs));
        for (std::size_t i = 0; i < st.levels_.back().size(); ++i)
            st.index_record(n, i);
    }
    return st;
}

}  // namespace coxspec
