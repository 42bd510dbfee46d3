// Canonical forms of element matrices under the double action
//   M  ~  P * M * Q
// where P permutes rows 1..10 and Q permutes columns 1..10 (row/col 0 fixed).
// The canonical form is the lexicographically greatest matrix in the orbit,
// read row-major; two matrices get equal keys iff they lie in the same orbit.

#ifndef COXSPEC_CANONICAL_HPP
#define COXSPEC_CANONICAL_HPP

#include <array>
#include <cstdint>
#include <functional>

#include "coxspec/lorentz.hpp"

namespace coxspec {

using CanonicalKey = std::array<std::int64_t, kDim * kDim>;

CanonicalKey canonical_key(const Mat11& m);

// Key of the inversion class {M, M^{-1}}: the greater of the two coset keys.
// Used where cosets are identified with their inverses (spectra are equal).
CanonicalKey canonical_class_key(const Mat11& m);

struct KeyHash {
    std::size_t operator()(const CanonicalKey& k) const {
        std::size_t h = 1469598103934665603ull;
        for (auto v : k) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace coxspec

#endif
