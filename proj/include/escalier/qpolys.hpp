#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace esc {

using BigInt = boost::multiprecision::cpp_int;

// Dense polynomial in x with big-integer coefficients, index = degree.
// A non-negative trunc means arithmetic modulo x^{trunc+1}.
class IntPoly {
public:
    static constexpr int kNoTrunc = -1;

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs, int trunc = kNoTrunc);
    static IntPoly constant(const BigInt& c, int trunc = kNoTrunc);
    static IntPoly monomial(int degree, const BigInt& c = 1, int trunc = kNoTrunc);
    // [n] = 1 - x^n
    static IntPoly q_number(int n, int trunc = kNoTrunc);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    int trunc() const { return trunc_; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(int k) const;
    BigInt eval_at_one() const;

    IntPoly truncated(int t) const;
    IntPoly shifted(int k) const;  // times x^k; k < 0 requires the low coefficients to vanish

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator+=(const IntPoly& b) { return *this = *this + b; }
    IntPoly& operator-=(const IntPoly& b) { return *this = *this - b; }
    IntPoly& operator*=(const IntPoly& b) { return *this = *this * b; }

    // Coefficient equality; the truncation setting is not compared.
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    void strip();
    std::vector<BigInt> c_;
    int trunc_ = kNoTrunc;
};

// Exact quotient of untruncated polynomials. Throws std::logic_error on a
// nonzero remainder, because every caller expects exact division.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

IntPoly gauss_binomial(int n, int k);
IntPoly gauss_binomial_pascal(int n, int k);

using PolyMatrix = std::vector<std::vector<IntPoly>>;

// Memoized cofactor expansion when r <= 6 or any entry is truncated,
// fraction-free elimination otherwise.
IntPoly det(const PolyMatrix& m, int trunc = IntPoly::kNoTrunc);
IntPoly det_cofactor(const PolyMatrix& m, int trunc = IntPoly::kNoTrunc);
IntPoly det_bareiss(const PolyMatrix& m);

// n(n-1)/2 as a polynomial in n, so choose2(-1) = 1.
long choose2(long n);

// Norm generating function of (c,d)-plane partitions of skew shape lambda/mu,
// first part of row i at most a_i, last part at least b_i. Pass mu empty for a
// straight shape. Throws std::domain_error when the inequality chains on a and
// b fail.
IntPoly gf_strict(const std::vector<int>& lambda, const std::vector<int>& mu, const std::vector<long>& a,
                  const std::vector<long>& b, int c, int d, int trunc = IntPoly::kNoTrunc);

// Shifted version: first part of row i equal to a_i.
IntPoly gf_shifted(const std::vector<int>& lambda, const std::vector<long>& a, const std::vector<long>& b, int c,
                   int d, int trunc = IntPoly::kNoTrunc);

long gf_shifted_offset(const std::vector<int>& lambda, const std::vector<long>& a, const std::vector<long>& b,
                       int c);

}  // namespace esc
