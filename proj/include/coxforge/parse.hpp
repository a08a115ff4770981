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

#include <cctype>
#include <string>

#include "coxforge/poly.hpp"

namespace coxforge {

/// Recursive-descent parser for the polynomial text format:
///     3*y0^2*y1 - y2*y3^2 + 5
/// Variables must be generators of the ring (x0, x1, y0..yn, w1..wl /
/// z1..zd); anything else is rejected with a line/column position.
/// Rational coefficients are written num/den.
template <Scalar K>
class PolyParser {
  public:
    PolyParser(RingPtr ring, const std::string& text, int line = 1)
        : ring_(std::move(ring)), text_(text), line_(line) {}

    Poly<K> parse() {
        Poly<K> result(ring_);
        skip_ws();
        if (eof()) throw error("empty polynomial");
        bool negative = take_sign(true);
        for (;;) {
            result += parse_term(negative);
            skip_ws();
            if (eof()) break;
            negative = take_sign(false);
        }
        return result;
    }

  private:
    Poly<K> parse_term(bool negative) {
        K coeff = K::one(ring_->field());
        Monomial mono = Monomial::one(*ring_);
        bool saw_factor = false;
        for (;;) {
            skip_ws();
            if (eof()) break;
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parse_number();
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                auto [idx, e] = parse_power();
                mono[idx] += e;
            } else {
                break;
            }
            saw_factor = true;
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!saw_factor) throw error("expected a term");
        if (negative) coeff = -coeff;
        return Poly<K>::term(ring_, mono, coeff);
    }

    K parse_number() {
        std::int64_t num = parse_integer();
        skip_ws();
        if (!eof() && peek() == '/') {
            ++pos_;
            skip_ws();
            int at = pos_;
            std::int64_t den = parse_integer();
            if (den == 0) throw error_at("zero denominator", at);
            return K::from_int(ring_->field(), num) / K::from_int(ring_->field(), den);
        }
        return K::from_int(ring_->field(), num);
    }

    std::int64_t parse_integer() {
        int start = pos_;
        std::int64_t v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > (1ll << 62)) throw error_at("integer literal too large", start);
            ++pos_;
        }
        if (pos_ == start) throw error("expected an integer");
        return v;
    }

    std::pair<int, int> parse_power() {
        int start = pos_;
        std::string name;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())))) name += text_[pos_++];
        int idx = ring_->find(name);
        if (idx < 0) throw error_at("unknown symbol '" + name + "'", start);
        int e = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
            ++pos_;
            skip_ws();
            int at = pos_;
            e = static_cast<int>(parse_integer());
            if (e < 0) throw error_at("negative exponent", at);
        }
        return {idx, e};
    }

    bool take_sign(bool optional) {
        skip_ws();
        if (!eof() && (peek() == '+' || peek() == '-')) {
            bool neg = peek() == '-';
            ++pos_;
            return neg;
        }
        if (!optional) throw error("expected '+' or '-' between terms");
        return false;
    }

    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_;
    }
    bool eof() const { return pos_ >= static_cast<int>(text_.size()); }
    char peek() const { return text_[pos_]; }

    ParseError error(const std::string& msg) const { return error_at(msg, pos_); }
    ParseError error_at(const std::string& msg, int at) const {
        return ParseError(msg, line_, at + 1);
    }

    RingPtr ring_;
    const std::string& text_;
    int pos_ = 0;
    int line_;
};

template <Scalar K>
Poly<K> parse_poly(const RingPtr& ring, const std::string& text, int line = 1) {
    return PolyParser<K>(ring, text, line).parse();
}

}  // namespace coxforge
