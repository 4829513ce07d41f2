/*
   Copyright 2026 The tpinv Authors

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

#ifndef TPINV_RING_HPP
#define TPINV_RING_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "error.hpp"

namespace tpinv {

using Integer = boost::multiprecision::cpp_int;

namespace detail {

// Optionally signed decimal integer spanning the whole of text. Leading zeros
// are accepted and never trigger octal interpretation.
inline Integer parse_decimal(std::string_view text, std::size_t offset = 0) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw ParseError(offset + i, "expected decimal digits");
    Integer value = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(offset + i, std::string("unexpected character '") + c + "' in integer");
        value *= 10;
        value += c - '0';
    }
    return negative ? Integer(-value) : value;
}

}  // namespace detail

/// A commutative ring with 1 chosen at runtime: the integers or a residue ring.
/// The interface is additive and multiplicative only; there is no division.
class RingSpec {
   public:
    enum class Kind { Integers, IntegersMod };

    RingSpec() = default;

    static RingSpec integers() { return RingSpec(); }

    static RingSpec integers_mod(Integer modulus) {
        if (modulus < 2) throw RangeError("modulus must be at least 2");
        RingSpec r;
        r.kind_ = Kind::IntegersMod;
        r.modulus_ = std::move(modulus);
        return r;
    }

    /// `z` or `zmod:M` with M >= 2 in decimal.
    static RingSpec parse(std::string_view text) {
        if (text == "z") return integers();
        constexpr std::string_view prefix = "zmod:";
        if (text.substr(0, prefix.size()) != prefix)
            throw ParseError(0, "ring must be 'z' or 'zmod:M'");
        const auto digits = text.substr(prefix.size());
        if (digits.empty() || digits.front() == '+' || digits.front() == '-')
            throw ParseError(prefix.size(), "modulus must be an unsigned decimal integer");
        Integer m = detail::parse_decimal(digits, prefix.size());
        if (m < 2) throw RangeError("modulus must be at least 2");
        return integers_mod(std::move(m));
    }

    Kind kind() const noexcept { return kind_; }
    /// Zero for the integers.
    const Integer& modulus() const noexcept { return modulus_; }

    std::string to_string() const { return kind_ == Kind::Integers ? "z" : "zmod:" + modulus_.str(); }

    bool operator==(const RingSpec& other) const noexcept {
        return kind_ == other.kind_ && modulus_ == other.modulus_;
    }

    /* raw arithmetic on canonical representatives */
    Integer canonical(Integer v) const {
        if (kind_ == Kind::Integers) return v;
        v %= modulus_;
        if (v < 0) v += modulus_;
        return v;
    }
    Integer add(const Integer& a, const Integer& b) const { return canonical(a + b); }
    Integer sub(const Integer& a, const Integer& b) const { return canonical(a - b); }
    Integer mul(const Integer& a, const Integer& b) const { return canonical(a * b); }
    Integer neg(const Integer& a) const { return canonical(-a); }

    Integer parse_value(std::string_view text) const { return canonical(detail::parse_decimal(text)); }

   private:
    Kind kind_ = Kind::Integers;
    Integer modulus_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const RingSpec& r) { return os << r.to_string(); }

/// An element of a RingSpec, always held in canonical form (least
/// nonnegative residue for residue rings).
class RingElement {
   public:
    RingElement(RingSpec spec, Integer value) : spec_(std::move(spec)), value_(spec_.canonical(std::move(value))) {}

    static RingElement zero(const RingSpec& spec) { return {spec, 0}; }
    static RingElement one(const RingSpec& spec) { return {spec, 1}; }

    static RingElement parse(const RingSpec& spec, std::string_view text) { return {spec, spec.parse_value(text)}; }

    const RingSpec& spec() const noexcept { return spec_; }
    const Integer& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    std::string to_string() const { return value_.str(); }

    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        check_same(a, b);
        return {a.spec_, a.value_ + b.value_};
    }
    friend RingElement operator-(const RingElement& a, const RingElement& b) {
        check_same(a, b);
        return {a.spec_, a.value_ - b.value_};
    }
    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        check_same(a, b);
        return {a.spec_, a.value_ * b.value_};
    }
    RingElement operator-() const { return {spec_, -value_}; }

    friend bool operator==(const RingElement& a, const RingElement& b) noexcept {
        return a.spec_ == b.spec_ && a.value_ == b.value_;
    }

   private:
    static void check_same(const RingElement& a, const RingElement& b) {
        if (!(a.spec_ == b.spec_))
            throw SpecMismatch("ring mismatch: " + a.spec_.to_string() + " vs " + b.spec_.to_string());
    }

    RingSpec spec_;
    Integer value_;
};

inline std::ostream& operator<<(std::ostream& os, const RingElement& a) { return os << a.to_string(); }

}  // namespace tpinv

#endif
