#include "escalier/qpolys.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace esc {

namespace {

int combine(int t1, int t2) {
    if (t1 < 0) return t2;
    if (t2 < 0) return t1;
    return std::min(t1, t2);
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs, int trunc) : c_(std::move(coeffs)), trunc_(trunc < 0 ? kNoTrunc : trunc) {
    strip();
}

IntPoly IntPoly::constant(const BigInt& c, int trunc) { return IntPoly({c}, trunc); }

IntPoly IntPoly::monomial(int degree, const BigInt& c, int trunc) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return IntPoly(std::move(v), trunc);
}

IntPoly IntPoly::q_number(int n, int trunc) {
    if (n < 0) throw std::invalid_argument("q_number of negative argument");
    return constant(1, trunc) - monomial(n, 1, trunc);
}

void IntPoly::strip() {
    if (trunc_ >= 0 && c_.size() > static_cast<std::size_t>(trunc_) + 1) c_.resize(static_cast<std::size_t>(trunc_) + 1);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(k)];
}

BigInt IntPoly::eval_at_one() const {
    BigInt s = 0;
    for (const auto& x : c_) s += x;
    return s;
}

IntPoly IntPoly::truncated(int t) const { return IntPoly(c_, combine(trunc_, t)); }

IntPoly IntPoly::shifted(int k) const {
    if (is_zero()) return *this;
    if (k >= 0) {
        std::vector<BigInt> v(static_cast<std::size_t>(k));
        v.insert(v.end(), c_.begin(), c_.end());
        return IntPoly(std::move(v), trunc_ < 0 ? kNoTrunc : trunc_ + k);
    }
    std::size_t drop = static_cast<std::size_t>(-k);
    for (std::size_t i = 0; i < std::min(drop, c_.size()); ++i)
        if (c_[i] != 0) throw std::domain_error("shift would produce a negative exponent");
    if (drop >= c_.size()) return IntPoly({}, trunc_ < 0 ? kNoTrunc : std::max(0, trunc_ + k));
    std::vector<BigInt> v(c_.begin() + static_cast<long>(drop), c_.end());
    return IntPoly(std::move(v), trunc_ < 0 ? kNoTrunc : std::max(0, trunc_ + k));
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return IntPoly(std::move(v), combine(a.trunc_, b.trunc_));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    int t = combine(a.trunc_, b.trunc_);
    if (a.is_zero() || b.is_zero()) return IntPoly({}, t);
    std::size_t len = a.c_.size() + b.c_.size() - 1;
    if (t >= 0) len = std::min(len, static_cast<std::size_t>(t) + 1);
    std::vector<BigInt> v(len);
    for (std::size_t i = 0; i < a.c_.size() && i < len; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size() && i + j < len; ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(v), t);
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& x = c_[static_cast<std::size_t>(k)];
        if (x == 0) continue;
        BigInt mag = x < 0 ? BigInt(-x) : x;
        if (!s.empty()) s += x < 0 ? "-" : "+";
        else if (x < 0) s += "-";
        if (mag != 1 || k == 0) s += mag.str();
        if (k >= 1) s += "x";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.trunc() >= 0 || b.trunc() >= 0) throw std::logic_error("exact division needs untruncated operands");
    if (a.is_zero()) return a;
    std::vector<BigInt> rem = a.coeffs();
    const auto& d = b.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db) throw std::logic_error("nonzero remainder in exact division");
    std::vector<BigInt> q(static_cast<std::size_t>(da - db) + 1);
    for (int k = da - db; k >= 0; --k) {
        BigInt& top = rem[static_cast<std::size_t>(k + db)];
        if (top == 0) continue;
        if (top % d.back() != 0) throw std::logic_error("nonzero remainder in exact division");
        BigInt f = top / d.back();
        q[static_cast<std::size_t>(k)] = f;
        for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k + i)] -= f * d[static_cast<std::size_t>(i)];
    }
    for (const auto& x : rem)
        if (x != 0) throw std::logic_error("nonzero remainder in exact division");
    return IntPoly(std::move(q));
}

IntPoly gauss_binomial(int n, int k) {
    if (k == 0) return IntPoly::constant(1);
    if (k < 0 || n < k) return IntPoly();
    k = std::min(k, n - k);
    if (k == 0) return IntPoly::constant(1);
    IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1);
    for (int i = 0; i < k; ++i) {
        num *= IntPoly::q_number(n - i);
        den *= IntPoly::q_number(i + 1);
    }
    return divide_exact(num, den);
}

IntPoly gauss_binomial_pascal(int n, int k) {
    if (k == 0) return IntPoly::constant(1);
    if (k < 0 || n < k) return IntPoly();
    // row[j] holds [m j] while m climbs from 0 to n
    std::vector<IntPoly> row(static_cast<std::size_t>(k) + 1);
    row[0] = IntPoly::constant(1);
    for (int m = 1; m <= n; ++m)
        for (int j = std::min(m, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] +
                                               row[static_cast<std::size_t>(j)].shifted(j);
    return row[static_cast<std::size_t>(k)];
}

namespace {

void check_square(const PolyMatrix& m) {
    if (m.empty()) throw std::invalid_argument("determinant of an empty matrix");
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
}

}  // namespace

IntPoly det_cofactor(const PolyMatrix& m, int trunc) {
    check_square(m);
    const std::size_t r = m.size();
    if (r > 24) throw std::invalid_argument("matrix too large for cofactor expansion");
    // minors[S] = determinant of rows 0..|S|-1 against the column set S
    std::vector<IntPoly> minors(std::size_t{1} << r);
    minors[0] = IntPoly::constant(1, trunc);
    for (std::size_t mask = 1; mask < minors.size(); ++mask) {
        std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
        IntPoly acc({}, trunc);
        for (std::size_t j = 0; j < r; ++j) {
            if (!(mask >> j & 1U)) continue;
            const IntPoly& sub = minors[mask & ~(std::size_t{1} << j)];
            if (sub.is_zero() || m[row][j].is_zero()) continue;
            int above = std::popcount(mask >> (j + 1));
            IntPoly term = m[row][j].truncated(trunc) * sub;
            if (above % 2) acc -= term;
            else acc += term;
        }
        minors[mask] = std::move(acc);
    }
    return minors.back();
}

IntPoly det_bareiss(const PolyMatrix& in) {
    check_square(in);
    PolyMatrix m = in;
    const std::size_t r = m.size();
    int sign = 1;
    IntPoly prev = IntPoly::constant(1);
    for (std::size_t k = 0; k + 1 < r; ++k) {
        std::size_t piv = k;
        while (piv < r && m[piv][k].is_zero()) ++piv;
        if (piv == r) return IntPoly();
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < r; ++i) {
            for (std::size_t j = k + 1; j < r; ++j)
                m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = IntPoly();
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[r - 1][r - 1] : -m[r - 1][r - 1];
}

IntPoly det(const PolyMatrix& m, int trunc) {
    check_square(m);
    bool truncated = trunc >= 0;
    for (const auto& row : m)
        for (const auto& x : row) truncated = truncated || x.trunc() >= 0;
    if (truncated || m.size() <= 6) return det_cofactor(m, trunc);
    return det_bareiss(m);
}

long choose2(long n) { return n * (n - 1) / 2; }

namespace {

// Entries x^{e_st} g_st, some e_st possibly negative. Pull the smallest
// exponent out of every row, take the determinant, and shift back.
IntPoly monomial_scaled_det(const std::vector<std::vector<long>>& ex, const PolyMatrix& g, long extra, int trunc) {
    const std::size_t r = g.size();
    long total = extra;
    PolyMatrix m(r, std::vector<IntPoly>(r));
    for (std::size_t s = 0; s < r; ++s) {
        bool any = false;
        long lo = 0;
        for (std::size_t t = 0; t < r; ++t) {
            if (g[s][t].is_zero()) continue;
            lo = any ? std::min(lo, ex[s][t]) : ex[s][t];
            any = true;
        }
        if (!any) return IntPoly({}, trunc);
        for (std::size_t t = 0; t < r; ++t)
            if (!g[s][t].is_zero()) m[s][t] = g[s][t].shifted(static_cast<int>(ex[s][t] - lo));
        total += lo;
    }
    if (trunc >= 0 && trunc - total < 0) return IntPoly({}, trunc);
    IntPoly d = trunc >= 0 ? det(m, static_cast<int>(trunc - total)) : det(m);
    IntPoly out = d.shifted(static_cast<int>(total));
    return trunc >= 0 ? out.truncated(trunc) : out;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::domain_error(what);
}

}  // namespace

IntPoly gf_strict(const std::vector<int>& lambda, const std::vector<int>& mu_in, const std::vector<long>& a,
                  const std::vector<long>& b, int c, int d, int trunc) {
    const std::size_t r = lambda.size();
    require(r > 0, "empty shape");
    std::vector<int> mu = mu_in.empty() ? std::vector<int>(r, 0) : mu_in;
    require(mu.size() == r && a.size() == r && b.size() == r, "shape, inner shape, a and b must have equal length");
    for (std::size_t i = 0; i < r; ++i) {
        require(mu[i] >= 0 && mu[i] <= lambda[i], "inner shape must satisfy 0 <= mu_i <= lambda_i");
        if (i + 1 < r) require(lambda[i] >= lambda[i + 1] && mu[i] >= mu[i + 1], "shapes must be weakly decreasing");
    }
    for (std::size_t i = 0; i + 1 < r; ++i) {
        require(a[i] - static_cast<long>(c) * (mu[i] - mu[i + 1]) + (1 - d) >= a[i + 1],
                "a violates a_i - c(mu_i - mu_{i+1}) + (1-d) >= a_{i+1} at i=" + std::to_string(i + 1));
        require(b[i] + static_cast<long>(c) * (lambda[i] - lambda[i + 1]) + (1 - d) >= b[i + 1],
                "b violates b_i + c(lambda_i - lambda_{i+1}) + (1-d) >= b_{i+1} at i=" + std::to_string(i + 1));
    }
    std::vector<std::vector<long>> ex(r, std::vector<long>(r));
    PolyMatrix g(r, std::vector<IntPoly>(r));
    for (std::size_t si = 0; si < r; ++si)
        for (std::size_t ti = 0; ti < r; ++ti) {
            long s = static_cast<long>(si) + 1, t = static_cast<long>(ti) + 1;
            long k = lambda[si] - s - mu[ti] + t;
            long top = static_cast<long>(1 - c) * (lambda[si] - mu[ti]) - static_cast<long>(d) * (s - t) + a[ti] -
                       b[si] + c;
            ex[si][ti] = b[si] * k + static_cast<long>(1 - c - d) * (choose2(mu[ti] + s - t) - choose2(mu[ti])) +
                         static_cast<long>(c) * choose2(k);
            g[si][ti] = gauss_binomial(static_cast<int>(top), static_cast<int>(k));
        }
    return monomial_scaled_det(ex, g, 0, trunc);
}

long gf_shifted_offset(const std::vector<int>& lambda, const std::vector<long>& a, const std::vector<long>& b,
                       int c) {
    long n1 = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        long k = lambda[i] - static_cast<long>(i) - 1;
        n1 += b[i] * k + a[i] + static_cast<long>(c) * choose2(k);
    }
    return n1;
}

IntPoly gf_shifted(const std::vector<int>& lambda, const std::vector<long>& a, const std::vector<long>& b, int c,
                   int d, int trunc) {
    const std::size_t r = lambda.size();
    require(r > 0, "empty shape");
    require(a.size() == r && b.size() == r, "shape, a and b must have equal length");
    require(lambda[r - 1] >= static_cast<int>(r), "shifted shape needs lambda_r >= r");
    for (std::size_t i = 0; i + 1 < r; ++i) {
        require(lambda[i] >= lambda[i + 1], "shape must be weakly decreasing");
        require(a[i] - c - d >= a[i + 1], "a violates a_i - c - d >= a_{i+1} at i=" + std::to_string(i + 1));
        require(b[i] + static_cast<long>(c) * (lambda[i] - lambda[i + 1]) + (1 - d) >= b[i + 1],
                "b violates b_i + c(lambda_i - lambda_{i+1}) + (1-d) >= b_{i+1} at i=" + std::to_string(i + 1));
    }
    std::vector<std::vector<long>> ex(r, std::vector<long>(r, 0));
    PolyMatrix g(r, std::vector<IntPoly>(r));
    for (std::size_t si = 0; si < r; ++si)
        for (std::size_t ti = 0; ti < r; ++ti) {
            long s = static_cast<long>(si) + 1, t = static_cast<long>(ti) + 1;
            long k = lambda[si] - s;
            long top = k * (1 - c) + static_cast<long>(1 - c - d) * (s - t) + a[ti] - b[si];
            g[si][ti] = gauss_binomial(static_cast<int>(top), static_cast<int>(k));
        }
    // A one-cell row holds a_i and nothing else. The binomial there is [.,0] = 1
    // whatever a_i and b_i are, so a_i < b_i has to be caught by hand.
    for (std::size_t i = 0; i < r; ++i)
        if (lambda[i] == static_cast<int>(i) + 1 && a[i] < b[i]) return IntPoly({}, trunc);
    return monomial_scaled_det(ex, g, gf_shifted_offset(lambda, a, b, c), trunc);
}

}  // namespace esc
