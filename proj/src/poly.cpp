#include "coxspec/poly.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxspec {

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::from_descending(const std::vector<long>& desc) {
    std::vector<mpz_class> c(desc.rbegin(), desc.rend());
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return IntPoly();
    std::vector<mpz_class> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * mpz_class(static_cast<long>(i));
    return IntPoly(std::move(r));
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& d) const {
    if (!d.monic()) throw std::invalid_argument("divide_exact: divisor must be monic");
    if (degree() < d.degree()) return std::nullopt;
    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> quot(degree() - d.degree() + 1, mpz_class(0));
    for (int i = degree(); i >= d.degree(); --i) {
        mpz_class q = rem[i];
        if (q == 0) continue;
        quot[i - d.degree()] = q;
        for (int j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= q * d.c_[j];
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPoly::sign_at(const mpq_class& x) const {
    if (is_zero()) return 0;
    // sum c_i a^i b^(n-i) with x = a/b in lowest terms
    mpz_class a = x.get_num(), b = x.get_den();
    mpz_class acc = 0, apow = 1;
    std::vector<mpz_class> bpow(c_.size());
    bpow[c_.size() - 1] = 1;
    for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i) bpow[i] = bpow[i + 1] * b;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        acc += c_[i] * apow * bpow[i];
        apow *= a;
    }
    return sgn(acc);
}

bool IntPoly::palindromic() const {
    int d = degree();
    for (int i = 0; 2 * i <= d; ++i)
        if (c_[i] != c_[d - i]) return false;
    return true;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        mpz_class a = c_[i];
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        mpz_class m = abs(a);
        if (m != 1 || i == 0) os << m.get_str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// Newton's identities: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i, with
// p_i = tr(M^i).  Then charpoly coefficient of x^{n-k} is (-1)^k e_k.
IntPoly charpoly_from_traces(const std::vector<mpz_class>& p, int n) {
    std::vector<mpz_class> e(n + 1);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        mpz_class acc = 0;
        for (int i = 1; i <= k; ++i) {
            if (i % 2 == 1) acc += e[k - i] * p[i];
            else acc -= e[k - i] * p[i];
        }
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(),
                    mpz_class(k).get_mpz_t());
        if (r != 0) throw std::logic_error("charpoly: Newton division not exact");
        e[k] = q;
    }
    std::vector<mpz_class> c(n + 1);
    for (int k = 0; k <= n; ++k) c[n - k] = (k % 2 == 0 ? e[k] : mpz_class(-e[k]));
    return IntPoly(std::move(c));
}

}  // namespace

IntPoly charpoly_dense(const std::vector<mpz_class>& m, int n) {
    std::vector<mpz_class> pw = m, traces(n + 1);
    auto trace = [&](const std::vector<mpz_class>& a) {
        mpz_class t = 0;
        for (int i = 0; i < n; ++i) t += a[i * n + i];
        return t;
    };
    traces[1] = trace(pw);
    std::vector<mpz_class> nxt(n * n);
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                mpz_class acc = 0;
                for (int t = 0; t < n; ++t) acc += pw[i * n + t] * m[t * n + j];
                nxt[i * n + j] = acc;
            }
        pw.swap(nxt);
        traces[k] = trace(pw);
    }
    return charpoly_from_traces(traces, n);
}

IntPoly charpoly(const Mat11& m) {
    std::vector<mpz_class> flat(m.entries().begin(), m.entries().end());
    return charpoly_dense(flat, kDim);
}

namespace {

std::vector<std::pair<int, IntPoly>> build_cyclotomic_table(int max_phi) {
    auto phi = [](int n) {
        int r = n;
        for (int p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                r -= r / p;
                while (n % p == 0) n /= p;
            }
        if (n > 1) r -= r / n;
        return r;
    };
    // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
    std::vector<IntPoly> all(1);
    std::vector<std::pair<int, IntPoly>> out;
    int limit = 3 * max_phi * max_phi;  // safe upper bound for n with phi(n)<=max_phi
    for (int n = 1; n <= limit; ++n) {
        std::vector<mpz_class> xn(n + 1, mpz_class(0));
        xn[0] = -1;
        xn[n] = 1;
        IntPoly p{std::move(xn)};
        for (int d = 1; d < n; ++d)
            if (n % d == 0) p = *p.divide_exact(all[d]);
        all.push_back(p);
        if (phi(n) <= max_phi) out.emplace_back(n, p);
    }
    return out;
}

}  // namespace

const std::vector<std::pair<int, IntPoly>>& cyclotomic_table(int max_phi) {
    static std::mutex mu;
    static std::vector<std::pair<int, IntPoly>> table;
    std::scoped_lock lk(mu);
    if (table.empty() || max_phi != 10)
        table = build_cyclotomic_table(max_phi);
    return table;
}

std::pair<IntPoly, IntPoly> strip_cyclotomic(const IntPoly& p) {
    if (!p.monic()) throw std::invalid_argument("strip_cyclotomic: input must be monic");
    IntPoly salem = p;
    IntPoly cyc = IntPoly::one();
    bool changed = true;
    while (changed && salem.degree() > 0) {
        changed = false;
        for (const auto& [n, phi_n] : cyclotomic_table()) {
            if (phi_n.degree() > salem.degree()) continue;
            if (auto q = salem.divide_exact(phi_n)) {
                salem = *q;
                cyc = cyc * phi_n;
                changed = true;
            }
        }
    }
    return {salem, cyc};
}

}  // namespace coxspec
