#include "coxspec/salem.hpp"

#include <algorithm>
#include <sstream>

namespace coxspec {

namespace {

using QPoly = std::vector<mpq_class>;  // ascending, trimmed

QPoly to_q(const IntPoly& p) {
    QPoly q;
    for (const auto& c : p.coeffs()) q.emplace_back(c);
    return q;
}

void q_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int q_sign_at(const QPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return sgn(acc);
}

// -rem(a, b)
QPoly q_neg_rem(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        q_trim(a);
    }
    for (auto& c : a) c = -c;
    return a;
}

std::vector<QPoly> sturm_chain(const IntPoly& p) {
    std::vector<QPoly> chain;
    chain.push_back(to_q(p));
    chain.push_back(to_q(p.derivative()));
    q_trim(chain[0]);
    q_trim(chain[1]);
    while (!chain.back().empty() && chain.back().size() > 1) {
        QPoly r = q_neg_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int variations(const std::vector<QPoly>& chain, const mpq_class& x) {
    int v = 0, prev = 0;
    for (const auto& f : chain) {
        if (f.empty()) continue;
        int s = q_sign_at(f, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

struct SturmCtx {
    IntPoly sf;
    std::vector<QPoly> chain;
    explicit SturmCtx(const IntPoly& p) : sf(squarefree_part(p)), chain(sturm_chain(sf)) {}
    int count(const mpq_class& a, const mpq_class& b) const {
        return variations(chain, a) - variations(chain, b);
    }
};

mpq_class root_bound(const IntPoly& p) {
    // Cauchy bound: 1 + max |c_i| / |lead|
    mpq_class m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        mpq_class a = mpq_class(abs(p[i])) / abs(p.leading());
        if (a > m) m = a;
    }
    return m + 1;
}

}  // namespace

IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() <= 1) return p;
    // gcd over Q via the Euclidean algorithm, then exact division
    QPoly a = to_q(p), b = to_q(p.derivative());
    while (!b.empty()) {
        QPoly r = q_neg_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    // a ~ gcd; normalize to a primitive integer polynomial (monic over Q)
    if (a.size() <= 1) return p;
    mpq_class lead = a.back();
    std::vector<mpz_class> g;
    mpz_class den = 1;
    for (auto& c : a) c /= lead;
    for (const auto& c : a) den = den * c.get_den() / gcd(den, mpz_class(c.get_den()));
    for (const auto& c : a) g.push_back(mpz_class(c * den));
    // make monic integer gcd: scale so leading = den -> divide content
    mpz_class content = 0;
    for (const auto& c : g) content = gcd(content, c);
    if (content > 1)
        for (auto& c : g) c /= content;
    IntPoly gi{std::move(g)};
    if (!gi.monic()) {
        // p primitive parts: fall back to rational division below anyway
    }
    // exact division p / gcd over Q
    QPoly num = to_q(p), div = to_q(gi);
    std::vector<mpq_class> quot(num.size() - div.size() + 1, mpq_class(0));
    for (int i = static_cast<int>(num.size()) - 1;
         i >= static_cast<int>(div.size()) - 1; --i) {
        mpq_class f = num[i] / div.back();
        quot[i - (div.size() - 1)] = f;
        std::size_t off = i - (div.size() - 1);
        for (std::size_t j = 0; j < div.size(); ++j) num[off + j] -= f * div[j];
    }
    mpz_class den2 = 1;
    for (auto& c : quot) c.canonicalize();
    for (const auto& c : quot) den2 = den2 * c.get_den() / gcd(den2, mpz_class(c.get_den()));
    std::vector<mpz_class> out;
    for (const auto& c : quot) out.push_back(mpz_class(c * den2));
    mpz_class cont = 0;
    for (const auto& c : out) cont = gcd(cont, c);
    if (cont > 1)
        for (auto& c : out) c /= cont;
    IntPoly res{std::move(out)};
    if (res.leading() < 0) {
        std::vector<mpz_class> neg;
        for (const auto& c : res.coeffs()) neg.push_back(-c);
        res = IntPoly(std::move(neg));
    }
    return res;
}

int sturm_count(const IntPoly& p, const mpq_class& a, const mpq_class& b) {
    SturmCtx ctx(p);
    return ctx.count(a, b);
}

std::string RootEnclosure::decimal(int places) const {
    mpq_class mid = midpoint();
    mpz_class scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    mpq_class scaled = mid * scale + mpq_class(1, 2);
    mpz_class n = scaled.get_num() / scaled.get_den();  // floor for positive values
    std::string digits = n.get_str();
    while (static_cast<int>(digits.size()) <= places) digits.insert(digits.begin(), '0');
    digits.insert(digits.end() - places, '.');
    return digits;
}

IntPoly trace_transform(const IntPoly& p) {
    int d = p.degree();
    if (d % 2 != 0 || !p.palindromic())
        throw non_reciprocal_error("trace_transform: need palindromic even degree");
    int m = d / 2;
    // x^k + x^-k in terms of y = x + 1/x: C_0 = 2, C_1 = y, C_k = y C_{k-1} - C_{k-2}
    std::vector<IntPoly> C(m + 1);
    C[0] = IntPoly({mpz_class(2)});
    if (m >= 1) C[1] = IntPoly({mpz_class(0), mpz_class(1)});
    IntPoly y = IntPoly({mpz_class(0), mpz_class(1)});
    for (int k = 2; k <= m; ++k) C[k] = y * C[k - 1] - C[k - 2];
    IntPoly q = IntPoly({p[m]});
    for (int k = 1; k <= m; ++k) q = q + C[k] * IntPoly({p[m + k]});
    return q;
}

bool is_salem(const IntPoly& p) {
    if (!p.monic()) return false;
    int d = p.degree();
    if (d < 4 || d % 2 != 0 || !p.palindromic()) return false;
    int m = d / 2;
    IntPoly q = trace_transform(p);
    if (q.sign_at(2) == 0 || q.sign_at(-2) == 0) return false;  // root at x = +-1
    mpq_class bound = root_bound(q);
    SturmCtx ctx(q);
    if (ctx.sf.degree() != q.degree()) return false;  // repeated factors
    int above = ctx.count(2, bound);
    int inside = ctx.count(-2, 2);
    return above == 1 && inside == m - 1;
}

RootEnclosure largest_real_root(const IntPoly& p) {
    IntPoly f = squarefree_part(p);
    SturmCtx ctx(f);
    mpq_class lo = 1, hi = root_bound(f);
    if (ctx.count(lo, hi) == 0)
        throw no_root_above_one_error("no real root greater than 1");
    // keep the rightmost interval containing at least one root
    while (ctx.count(lo, hi) > 1) {
        mpq_class mid = (lo + hi) / 2;
        if (ctx.count(mid, hi) > 0) lo = mid;
        else hi = mid;
    }
    // single root in (lo, hi]; bisect on sign
    mpq_class width_target(1, mpz_class(1) << 40);
    int s_hi = f.sign_at(hi);
    if (s_hi == 0) {
        // rational root exactly at hi
        mpq_class eps = width_target / 4;
        return {hi - eps, hi + eps};
    }
    // f changes sign across the root
    while (hi - lo > width_target) {
        mpq_class mid = (lo + hi) / 2;
        int s = f.sign_at(mid);
        if (s == 0) {
            mpq_class eps = width_target / 4;
            return {mid - eps, mid + eps};
        }
        if (s == s_hi) hi = mid;
        else lo = mid;
    }
    return {lo, hi};
}

SalemPolynomial SalemPolynomial::make(IntPoly p) {
    if (!is_salem(p)) throw std::invalid_argument("not a Salem polynomial: " + p.str());
    RootEnclosure r = largest_real_root(p);
    return {std::move(p), std::move(r)};
}

SalemPolynomial minpoly_power(const SalemPolynomial& q, int k) {
    if (k < 1) throw std::invalid_argument("minpoly_power: k >= 1");
    if (k == 1) return q;
    int d = q.degree();
    // companion matrix C of q, then charpoly(C^k)
    std::vector<mpz_class> c(d * d, mpz_class(0));
    for (int i = 1; i < d; ++i) c[i * d + (i - 1)] = 1;
    for (int i = 0; i < d; ++i) c[i * d + (d - 1)] = -q.poly[i];
    // power by repeated multiplication (k is small)
    std::vector<mpz_class> pw(d * d, mpz_class(0));
    for (int i = 0; i < d; ++i) pw[i * d + i] = 1;
    std::vector<mpz_class> tmp(d * d);
    for (int e = 0; e < k; ++e) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                mpz_class acc = 0;
                for (int t = 0; t < d; ++t) acc += pw[i * d + t] * c[t * d + j];
                tmp[i * d + j] = acc;
            }
        pw.swap(tmp);
    }
    return SalemPolynomial::make(charpoly_dense(pw, d));
}

std::vector<mpz_class> half_coefficients(const IntPoly& p) {
    int deg = p.degree();
    if (deg % 2 != 0 || !p.palindromic())
        throw non_reciprocal_error("half_coefficients: not reciprocal of even degree");
    int d = deg / 2;
    std::vector<mpz_class> out;
    for (int i = 0; i <= d; ++i) out.push_back(p[deg - i]);  // descending prefix
    return out;
}

IntPoly from_half_coefficients(const std::vector<mpz_class>& half) {
    int d = static_cast<int>(half.size()) - 1;
    std::vector<mpz_class> c(2 * d + 1);
    for (int i = 0; i <= d; ++i) {
        c[2 * d - i] = half[i];
        c[i] = half[i];
    }
    return IntPoly(std::move(c));
}

}  // namespace coxspec
