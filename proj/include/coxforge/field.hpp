/*
   Copyright 2026 The coxforge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "coxforge/errors.hpp"

namespace coxforge {

/// Runtime description of the coefficient field: a prime field F_p or the
/// rationals. All exact linear algebra and polynomial arithmetic is generic
/// over the two scalar types below; this tag is what travels through configs,
/// instance files and reports.
struct FieldChoice {
    enum class Kind { prime, rational };

    Kind kind = Kind::prime;
    std::uint64_t p = 32003;  // only meaningful for Kind::prime

    static FieldChoice fp(std::uint64_t p) {
        validate_prime(p);
        return FieldChoice{Kind::prime, p};
    }

    static FieldChoice qq() { return FieldChoice{Kind::rational, 0}; }

    bool operator==(const FieldChoice&) const = default;

    std::string to_string() const {
        return kind == Kind::prime ? "fp:" + std::to_string(p) : "qq";
    }

    /// Accepts "fp:P" or "qq".
    static FieldChoice parse(const std::string& s) {
        if (s == "qq") return qq();
        if (s.rfind("fp:", 0) == 0) {
            std::uint64_t p = 0;
            try {
                p = std::stoull(s.substr(3));
            } catch (const std::exception&) {
                throw UsageError("bad field spec '" + s + "'");
            }
            return fp(p);
        }
        throw UsageError("bad field spec '" + s + "' (expected fp:P or qq)");
    }

    // The double-based elimination kernel accumulates p^2-sized products, so
    // moduli are capped well below 2^26 to keep everything inside exact
    // double range. Trial division is plenty at that size.
    static void validate_prime(std::uint64_t p) {
        if (p < 2) throw UsageError("field modulus must be a prime >= 2");
        if (p >= (1ull << 26)) throw UsageError("field modulus too large (need p < 2^26)");
        for (std::uint64_t q = 2; q * q <= p; ++q)
            if (p % q == 0) throw UsageError("field modulus " + std::to_string(p) + " is not prime");
    }
};

/// Element of a prime field F_p. Values are kept canonical in [0, p); the
/// modulus rides along so mixed-modulus arithmetic can be rejected.
class Fp {
  public:
    Fp() = default;
    Fp(std::uint64_t p, std::int64_t value) : p_(p) {
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint64_t>(r);
    }

    static Fp zero(const FieldChoice& fc) { return Fp(fc.p, 0); }
    static Fp one(const FieldChoice& fc) { return Fp(fc.p, 1); }
    static Fp from_int(const FieldChoice& fc, std::int64_t n) { return Fp(fc.p, n); }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return Fp(p_, v_ == 0 ? 0 : static_cast<std::int64_t>(p_ - v_)); }

    Fp& operator+=(const Fp& o) {
        check(o);
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        check(o);
        v_ += p_ - o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        check(o);
        v_ = (v_ * o.v_) % p_;
        return *this;
    }
    Fp& operator/=(const Fp& o) {
        check(o);
        return *this *= o.inv();
    }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }

    /// Multiplicative inverse by extended Euclid.
    Fp inv() const {
        if (v_ == 0) throw DivisionByZeroError("inverse of 0 in F_" + std::to_string(p_));
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v_);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        return Fp(p_, t);
    }

    /// Balanced representative: values above p/2 print as negative integers,
    /// so reductions of small-integer coefficients stay readable.
    std::string to_string() const {
        if (v_ > p_ / 2) return "-" + std::to_string(p_ - v_);
        return std::to_string(v_);
    }

  private:
    void check(const Fp& o) const {
        if (p_ != o.p_)
            throw FieldMismatchError("mixed moduli " + std::to_string(p_) + " and " +
                                     std::to_string(o.p_));
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 32003;
};

/// Arbitrary-precision rational, backed by GMP. mpq_class keeps values in
/// lowest terms with positive denominator, which is exactly the canonical
/// form we promise.
class Rat {
  public:
    Rat() = default;
    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    Rat(std::int64_t num, std::int64_t den) : q_(static_cast<long>(num), static_cast<long>(den)) {
        if (den == 0) throw DivisionByZeroError("rational with zero denominator");
        q_.canonicalize();
    }

    static Rat zero(const FieldChoice&) { return Rat(); }
    static Rat one(const FieldChoice&) { return Rat(1, 1); }
    static Rat from_int(const FieldChoice&, std::int64_t n) { return Rat(n, 1); }

    const mpq_class& value() const { return q_; }
    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }

    Rat operator-() const { return Rat(mpq_class(-q_)); }

    Rat& operator+=(const Rat& o) {
        q_ += o.q_;
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        q_ -= o.q_;
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        q_ *= o.q_;
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw DivisionByZeroError("division by zero rational");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    bool operator==(const Rat& o) const { return q_ == o.q_; }

    Rat inv() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero rational");
        return Rat(mpq_class(1) / q_);
    }

    std::string to_string() const { return q_.get_str(); }

  private:
    mpq_class q_;
};

template <typename K>
concept Scalar = requires(K a, K b, const FieldChoice& fc) {
    { K::zero(fc) } -> std::same_as<K>;
    { K::one(fc) } -> std::same_as<K>;
    { K::from_int(fc, std::int64_t{}) } -> std::same_as<K>;
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a* b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.inv() } -> std::same_as<K>;
    { a.to_string() } -> std::same_as<std::string>;
};

static_assert(Scalar<Fp>);
static_assert(Scalar<Rat>);

}  // namespace coxforge
