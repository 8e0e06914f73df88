#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "rng.hpp"

namespace superfat::exactcore {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// ===== Integer combinatorics ================================================

[[nodiscard]] inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

/// Binomial coefficient C(n, k); zero outside the Pascal triangle.
[[nodiscard]] inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j; // exact at every step: r is C(n-k+j, j)
    }
    return r;
}

/// Number of bits of |v|; 0 for v == 0.  Used as a pivot-size heuristic.
[[nodiscard]] inline std::size_t bit_count(const BigInt& v) {
    if (v.is_zero()) return 0;
    const BigInt a = boost::multiprecision::abs(v);
    return boost::multiprecision::msb(a) + 1;
}

/// Floor square root of a non-negative integer paired with an exactness flag.
[[nodiscard]] inline std::optional<BigInt> exact_isqrt(const BigInt& v) {
    if (v < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(v);
    if (r * r != v) return std::nullopt;
    return r;
}

// ===== Rational numbers =====================================================

/// Arbitrary-precision rational number, kept in lowest terms with a positive
/// denominator.  All operations are exact; division by zero throws
/// std::domain_error.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {} // NOLINT: implicit by design, K(0)/K(1)
    Rational(const BigInt& num, const BigInt& den) {
        if (den.is_zero()) throw std::domain_error("rational with zero denominator");
        v_ = BigRational(num) / BigRational(den); // normalizes sign and gcd
    }
    explicit Rational(BigRational v) : v_(std::move(v)) {}

    [[nodiscard]] static Rational from_integer(const BigInt& n) { return Rational(BigRational(n)); }
    [[nodiscard]] static constexpr std::uint64_t characteristic() { return 0; }

    [[nodiscard]] BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    [[nodiscard]] BigInt denominator() const { return boost::multiprecision::denominator(v_); }
    [[nodiscard]] bool is_zero() const { return v_.is_zero(); }
    [[nodiscard]] bool is_one() const { return v_ == 1; }
    [[nodiscard]] int sign() const { return v_.sign(); }

    [[nodiscard]] Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    [[nodiscard]] Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    [[nodiscard]] Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    [[nodiscard]] Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero");
        return Rational(v_ / o.v_);
    }
    [[nodiscard]] Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    [[nodiscard]] bool operator==(const Rational& o) const = default;
    [[nodiscard]] bool operator<(const Rational& o) const { return v_ < o.v_; }

    [[nodiscard]] Rational inverse() const { return Rational(1) / *this; }

    /// Exact square root if one exists in Q (the non-negative one).
    [[nodiscard]] std::optional<Rational> sqrt() const {
        if (sign() < 0) return std::nullopt;
        const auto rn = exact_isqrt(numerator());
        const auto rd = exact_isqrt(denominator());
        if (!rn || !rd) return std::nullopt;
        return Rational(*rn, *rd);
    }

    /// Size heuristic for pivot selection: total bits of numerator and
    /// denominator.
    [[nodiscard]] std::size_t bit_size() const {
        return bit_count(numerator()) + bit_count(denominator());
    }

    [[nodiscard]] std::string str() const { return v_.str(); }

private:
    BigRational v_;
};

[[nodiscard]] inline bool canonical_less(const Rational& a, const Rational& b) { return a < b; }

// ===== Gaussian rationals ===================================================

/// Element of Q(i): re + im*i with exact rational components.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long long n) : re_(n) {} // NOLINT: implicit by design
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    [[nodiscard]] static GaussianRational i() { return {Rational(0), Rational(1)}; }
    [[nodiscard]] static GaussianRational from_integer(const BigInt& n) {
        return {Rational::from_integer(n), Rational(0)};
    }
    [[nodiscard]] static constexpr std::uint64_t characteristic() { return 0; }

    [[nodiscard]] const Rational& re() const { return re_; }
    [[nodiscard]] const Rational& im() const { return im_; }
    [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] bool is_one() const { return re_.is_one() && im_.is_zero(); }

    [[nodiscard]] GaussianRational conjugate() const { return {re_, -im_}; }
    [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }

    [[nodiscard]] GaussianRational operator+(const GaussianRational& o) const {
        return {re_ + o.re_, im_ + o.im_};
    }
    [[nodiscard]] GaussianRational operator-(const GaussianRational& o) const {
        return {re_ - o.re_, im_ - o.im_};
    }
    [[nodiscard]] GaussianRational operator*(const GaussianRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    [[nodiscard]] GaussianRational operator/(const GaussianRational& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero");
        const Rational n = o.norm();
        const GaussianRational t = *this * o.conjugate();
        return {t.re_ / n, t.im_ / n};
    }
    [[nodiscard]] GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    [[nodiscard]] bool operator==(const GaussianRational& o) const = default;

    [[nodiscard]] GaussianRational inverse() const { return GaussianRational(1) / *this; }

    /// Exact square root if one exists in Q(i).  Writing the root as c + d*i,
    /// both c^2 = (re + |z|)/2 and the norm |z|^2 = re^2 + im^2 must be
    /// rational squares.  The returned root is canonical: positive real part,
    /// or zero real part and non-negative imaginary part.
    [[nodiscard]] std::optional<GaussianRational> sqrt() const {
        const Rational two(2);
        if (im_.is_zero()) {
            if (auto r = re_.sqrt()) return GaussianRational(*r, Rational(0));
            if (auto r = (-re_).sqrt()) return GaussianRational(Rational(0), *r);
            return std::nullopt;
        }
        const auto r = norm().sqrt();
        if (!r) return std::nullopt;
        const auto c = ((re_ + *r) / two).sqrt();
        if (!c || c->is_zero()) return std::nullopt; // im != 0 forces c > 0
        const Rational d = im_ / (two * *c);
        return GaussianRational(*c, d);
    }

    [[nodiscard]] std::size_t bit_size() const { return re_.bit_size() + im_.bit_size(); }

    [[nodiscard]] std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string imag;
        if (im_.is_one()) imag = "i";
        else if (im_ == Rational(-1)) imag = "-i";
        else imag = im_.str() + "*i";
        if (re_.is_zero()) return imag;
        if (im_.sign() > 0) return re_.str() + "+" + imag;
        return re_.str() + imag; // imag already carries the minus sign
    }

private:
    Rational re_, im_;
};

/// Lexicographic on (re, im); used only to make output orderings reproducible.
[[nodiscard]] inline bool canonical_less(const GaussianRational& a, const GaussianRational& b) {
    if (a.re() == b.re()) return a.im() < b.im();
    return a.re() < b.re();
}

// ===== Prime fields =========================================================

/// Z/p for an odd word-sized prime p, default 32003.  The modulus is a
/// process-wide setting: call Fp::set_modulus once before constructing
/// elements; changing it invalidates previously built elements.
class Fp {
public:
    Fp() : v_(0) {}
    Fp(long long n) : v_(reduce(n)) {} // NOLINT: implicit by design

    /// Installs a new modulus after checking 2 <= p <= 2^31 - 1 and primality.
    static void set_modulus(std::uint64_t p) {
        if (p < 2 || p > 0x7fffffffULL) throw std::invalid_argument("modulus out of range");
        if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
        p_ = p;
    }
    [[nodiscard]] static std::uint64_t modulus() { return p_; }
    [[nodiscard]] static std::uint64_t characteristic() { return p_; }

    [[nodiscard]] static Fp from_integer(const BigInt& n) {
        BigInt r = n % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return Fp(r.convert_to<long long>());
    }

    [[nodiscard]] std::uint64_t value() const { return v_; }
    [[nodiscard]] bool is_zero() const { return v_ == 0; }
    [[nodiscard]] bool is_one() const { return v_ == 1; }

    [[nodiscard]] Fp operator+(const Fp& o) const { return raw((v_ + o.v_) % p_); }
    [[nodiscard]] Fp operator-(const Fp& o) const { return raw((v_ + p_ - o.v_) % p_); }
    [[nodiscard]] Fp operator*(const Fp& o) const { return raw(v_ * o.v_ % p_); }
    [[nodiscard]] Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    [[nodiscard]] Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_); }
    Fp& operator+=(const Fp& o) { v_ = (v_ + o.v_) % p_; return *this; }
    Fp& operator-=(const Fp& o) { v_ = (v_ + p_ - o.v_) % p_; return *this; }
    Fp& operator*=(const Fp& o) { v_ = v_ * o.v_ % p_; return *this; }

    [[nodiscard]] bool operator==(const Fp& o) const = default;

    [[nodiscard]] Fp inverse() const {
        if (v_ == 0) throw std::domain_error("division by zero");
        return pow(p_ - 2);
    }

    [[nodiscard]] Fp pow(std::uint64_t e) const {
        Fp base = *this, r = raw(1);
        while (e != 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    /// Exact square root if v is a quadratic residue (Tonelli-Shanks for
    /// p = 1 mod 4, the direct exponent formula for p = 3 mod 4).  The
    /// smaller of the two roots is returned to keep output deterministic.
    [[nodiscard]] std::optional<Fp> sqrt() const {
        if (v_ == 0) return raw(0);
        if (p_ == 2) return *this;
        if (pow((p_ - 1) / 2).v_ != 1) return std::nullopt;
        Fp root = raw(0);
        if (p_ % 4 == 3) {
            root = pow((p_ + 1) / 4);
        } else {
            // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
            std::uint64_t q = p_ - 1, s = 0;
            while (q % 2 == 0) { q /= 2; ++s; }
            Fp z = raw(2);
            while (z.pow((p_ - 1) / 2).v_ == 1) z += raw(1);
            std::uint64_t m = s;
            Fp c = z.pow(q), t = pow(q), r = pow((q + 1) / 2);
            while (t.v_ != 1) {
                std::uint64_t i = 0;
                for (Fp u = t; u.v_ != 1; u *= u) ++i;
                Fp b = c;
                for (std::uint64_t j = 0; j + i + 1 < m; ++j) b *= b;
                m = i;
                c = b * b;
                t *= c;
                r *= b;
            }
            root = r;
        }
        return std::min(root.v_, p_ - root.v_) == root.v_ ? root : -root;
    }

    [[nodiscard]] std::size_t bit_size() const { return v_ == 0 ? 0 : 1; }

    [[nodiscard]] std::string str() const { return std::to_string(v_); }

private:
    [[nodiscard]] static Fp raw(std::uint64_t v) {
        Fp r;
        r.v_ = v;
        return r;
    }
    [[nodiscard]] static std::uint64_t reduce(long long n) {
        long long m = n % static_cast<long long>(p_);
        if (m < 0) m += static_cast<long long>(p_);
        return static_cast<std::uint64_t>(m);
    }
    [[nodiscard]] static bool is_prime(std::uint64_t p) {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    static inline std::uint64_t p_ = 32003;
    std::uint64_t v_;
};

[[nodiscard]] inline bool canonical_less(const Fp& a, const Fp& b) { return a.value() < b.value(); }

// ===== Field concept and generic helpers ====================================

template <class K>
concept FieldType = requires(const K a, const K b) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.bit_size() } -> std::convertible_to<std::size_t>;
    { a.str() } -> std::convertible_to<std::string>;
    { K::characteristic() } -> std::convertible_to<std::uint64_t>;
    { K::from_integer(BigInt(0)) } -> std::convertible_to<K>;
    K(0);
};

/// Uniform scalar for randomized constructions: characteristic zero draws
/// integers from [-bound, bound]; prime fields draw uniformly from the field.
template <FieldType K>
[[nodiscard]] K random_scalar(Rng& rng, long long bound = 50) {
    const std::uint64_t p = K::characteristic();
    if (p == 0) return K(rng.uniform_int(-bound, bound));
    return K(rng.uniform_int(0, static_cast<std::int64_t>(p) - 1));
}

template <FieldType K>
[[nodiscard]] K random_nonzero_scalar(Rng& rng, long long bound = 50) {
    for (;;) {
        K v = random_scalar<K>(rng, bound);
        if (!v.is_zero()) return v;
    }
}

} // namespace superfat::exactcore
