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

#ifndef TPINV_POLY_HPP
#define TPINV_POLY_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "json.hpp"
#include "ring.hpp"

namespace tpinv {

using Exponent = std::uint32_t;

/// Exponent vector over x_1..x_n. exps()[i] is the exponent of x_{i+1}.
class Monomial {
   public:
    explicit Monomial(std::size_t nvars = 0) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    /// x_k, 1-based.
    static Monomial variable(std::size_t nvars, std::size_t k) {
        if (k < 1 || k > nvars) throw RangeError("variable index " + std::to_string(k) + " outside 1.." + std::to_string(nvars));
        Monomial m(nvars);
        m.exps_[k - 1] = 1;
        return m;
    }

    std::size_t nvars() const noexcept { return exps_.size(); }
    std::span<const Exponent> exps() const noexcept { return exps_; }
    /// Exponent of x_k, 1-based.
    Exponent exponent(std::size_t k) const { return exps_.at(k - 1); }

    std::uint64_t total_degree() const noexcept {
        std::uint64_t d = 0;
        for (auto e : exps_) d += e;
        return d;
    }
    bool is_constant() const noexcept {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        if (a.nvars() != b.nvars()) throw SpecMismatch("monomials over different variable counts");
        Monomial r = a;
        for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// x1^2*x3; "1" for the constant monomial.
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (!out.empty()) out += '*';
            out += 'x' + std::to_string(i + 1);
            if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
        }
        return out.empty() ? "1" : out;
    }

   private:
    std::vector<Exponent> exps_;
};

/// Graded lexicographic order, descending: higher total degree first, ties
/// broken lexicographically with x1 most significant.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        const auto da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        const auto ea = a.exps(), eb = b.exps();
        return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
    }
};

/// Sum of exps[i]*weights[i].
inline std::uint64_t weighted_degree(const Monomial& m, std::span<const unsigned> weights) {
    if (weights.size() != m.nvars())
        throw RangeError("weight vector has length " + std::to_string(weights.size()) + ", expected " + std::to_string(m.nvars()));
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] == 0) throw RangeError("weights must be positive");
        d += static_cast<std::uint64_t>(m.exps()[i]) * weights[i];
    }
    return d;
}

/// Element of R[x_1..x_n] in canonical sparse form: every stored coefficient
/// is a nonzero canonical representative, and iteration over terms() runs in
/// descending graded lexicographic order. Two polynomials are equal iff their
/// term maps are equal.
class Polynomial {
   public:
    using TermMap = std::map<Monomial, Integer, GrlexGreater>;

    /* constructors */
    Polynomial() = default;
    /// Zero polynomial.
    Polynomial(RingSpec ring, std::size_t nvars) : ring_(std::move(ring)), nvars_(nvars) {}

    static Polynomial constant(const RingSpec& ring, std::size_t nvars, const Integer& c) {
        Polynomial p(ring, nvars);
        p.accumulate(Monomial(nvars), c);
        p.canonicalize();
        return p;
    }
    static Polynomial one(const RingSpec& ring, std::size_t nvars) { return constant(ring, nvars, 1); }
    /// The generator x_k, 1-based.
    static Polynomial variable(const RingSpec& ring, std::size_t nvars, std::size_t k) {
        return monomial(ring, nvars, Monomial::variable(nvars, k), 1);
    }
    static Polynomial monomial(const RingSpec& ring, std::size_t nvars, Monomial m, const Integer& c) {
        if (m.nvars() != nvars) throw SpecMismatch("monomial length does not match nvars");
        Polynomial p(ring, nvars);
        p.accumulate(std::move(m), c);
        p.canonicalize();
        return p;
    }
    /// Merges repeated monomials and prunes zero coefficients.
    static Polynomial from_terms(const RingSpec& ring, std::size_t nvars, std::vector<std::pair<Monomial, Integer>> terms) {
        Polynomial p(ring, nvars);
        for (auto& [m, c] : terms) {
            if (m.nvars() != nvars) throw SpecMismatch("monomial length does not match nvars");
            p.accumulate(std::move(m), c);
        }
        p.canonicalize();
        return p;
    }

    /* getters */
    const RingSpec& ring() const noexcept { return ring_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    RingElement coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return {ring_, it == terms_.end() ? Integer(0) : it->second};
    }

    std::uint64_t total_degree() const noexcept { return terms_.empty() ? 0 : terms_.begin()->first.total_degree(); }

    /// Largest k such that x_k occurs; 0 for constants.
    std::size_t max_variable() const noexcept {
        std::size_t k = 0;
        for (const auto& [m, c] : terms_)
            for (std::size_t i = m.nvars(); i > k; --i)
                if (m.exps()[i - 1] != 0) {
                    k = i;
                    break;
                }
        return k;
    }

    /* arithmetic */
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [m, c] : r.terms_) c = ring_.neg(c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        check_compatible(rhs);
        for (const auto& [m, c] : rhs.terms_) add_canonical(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& rhs) {
        check_compatible(rhs);
        for (const auto& [m, c] : rhs.terms_) add_canonical(m, ring_.neg(c));
        return *this;
    }
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        Polynomial r(a.ring_, a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.accumulate(ma * mb, ca * cb);
        r.canonicalize();
        return r;
    }

    Polynomial scaled(const Integer& s) const {
        Polynomial r(ring_, nvars_);
        for (const auto& [m, c] : terms_) r.accumulate(m, c * s);
        r.canonicalize();
        return r;
    }

    Polynomial pow(unsigned e) const {
        Polynomial result = one(ring_, nvars_), base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ring_ == b.ring_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

    void check_compatible(const Polynomial& other) const {
        if (!(ring_ == other.ring_))
            throw SpecMismatch("ring mismatch: " + ring_.to_string() + " vs " + other.ring_.to_string());
        if (nvars_ != other.nvars_)
            throw SpecMismatch("variable count mismatch: " + std::to_string(nvars_) + " vs " + std::to_string(other.nvars_));
    }

   private:
    // Raw accumulation; canonicalize() must follow before the value escapes.
    void accumulate(Monomial m, const Integer& c) {
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) it->second += c;
    }

    void canonicalize() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second = ring_.canonical(std::move(it->second));
            it = it->second == 0 ? terms_.erase(it) : std::next(it);
        }
    }

    void add_canonical(const Monomial& m, const Integer& c) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (inserted) return;
        it->second = ring_.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }

    RingSpec ring_;
    std::size_t nvars_ = 0;
    TermMap terms_;
};

inline std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Integer magnitude = negative ? Integer(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (m.is_constant())
            out += magnitude.str();
        else if (magnitude == 1)
            out += m.to_string();
        else
            out += magnitude.str() + "*" + m.to_string();
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

/// Image of p under the quotient map onto `target`. Defined when p is over
/// the integers, or trivially when the rings already agree.
inline Polynomial change_ring(const Polynomial& p, const RingSpec& target) {
    if (!(p.ring() == target) && p.ring().kind() != RingSpec::Kind::Integers)
        throw SpecMismatch("no quotient map from " + p.ring().to_string() + " to " + target.to_string());
    std::vector<std::pair<Monomial, Integer>> terms(p.terms().begin(), p.terms().end());
    return Polynomial::from_terms(target, p.nvars(), std::move(terms));
}

/* text form */

namespace detail {

class PolyParser {
   public:
    PolyParser(const RingSpec& ring, std::size_t nvars, std::string_view text) : ring(ring), nvars(nvars), text(text) {}

    Polynomial parse() {
        std::vector<std::pair<Monomial, Integer>> terms;
        skip_ws();
        if (at_end()) throw ParseError(pos, "empty polynomial");
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos;
        }
        terms.push_back(term(negate));
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char op = peek();
            if (op != '+' && op != '-') throw ParseError(pos, std::string("expected '+' or '-', found '") + op + "'");
            ++pos;
            terms.push_back(term(op == '-'));
        }
        return Polynomial::from_terms(ring, nvars, std::move(terms));
    }

   private:
    bool at_end() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    bool digit_at(std::size_t i) const { return i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }

    std::pair<Monomial, Integer> term(bool negate) {
        skip_ws();
        if (at_end()) throw ParseError(pos, "expected a term");
        Integer coeff = 1;
        const char c = peek();
        if (digit_at(pos) || ((c == '+' || c == '-') && digit_at(pos + 1))) {
            const std::size_t start = pos;
            ++pos;
            while (digit_at(pos)) ++pos;
            coeff = parse_decimal(text.substr(start, pos - start), start);
            skip_ws();
            if (at_end() || peek() != '*') return {Monomial(nvars), negate ? Integer(-coeff) : coeff};
            ++pos;
            skip_ws();
        }
        Monomial m = monom();
        return {std::move(m), negate ? Integer(-coeff) : coeff};
    }

    Monomial monom() {
        std::vector<Exponent> exps(nvars, 0);
        for (;;) {
            var(exps);
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos;
            skip_ws();
        }
        return Monomial(std::move(exps));
    }

    void var(std::vector<Exponent>& exps) {
        if (at_end() || peek() != 'x') throw ParseError(pos, "expected a variable x<index>");
        const std::size_t start = pos++;
        if (!digit_at(pos)) throw ParseError(pos, "expected a variable index after 'x'");
        const auto index = unsigned_number(start, true);
        if (index < 1 || index > nvars)
            throw VariableOutOfRange(start, "variable x" + std::to_string(index) + " outside x1..x" + std::to_string(nvars));
        Exponent e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos;
            skip_ws();
            if (!digit_at(pos)) throw ParseError(pos, "expected an exponent after '^'");
            const std::size_t epos = pos;
            const auto value = unsigned_number(epos, false);
            if (value > std::numeric_limits<Exponent>::max()) throw ParseError(epos, "exponent too large");
            e = static_cast<Exponent>(value);
        }
        if (std::numeric_limits<Exponent>::max() - exps[index - 1] < e) throw ParseError(start, "exponent too large");
        exps[index - 1] += e;
    }

    std::uint64_t unsigned_number(std::size_t where, bool is_index) {
        std::uint64_t v = 0;
        for (; digit_at(pos); ++pos) {
            const unsigned d = static_cast<unsigned>(text[pos] - '0');
            if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
                if (is_index) throw VariableOutOfRange(where, "variable index too large");
                throw ParseError(where, "number too large");
            }
            v = v * 10 + d;
        }
        return v;
    }

    const RingSpec& ring;
    std::size_t nvars;
    std::string_view text;
    std::size_t pos = 0;
};

}  // namespace detail

/// Parses the ASCII grammar
///   poly  := term (("+" | "-") term)* | "0"
///   term  := coeff | coeff "*" monom | monom
///   monom := var ("*" var)*
///   var   := "x" index ("^" exponent)?
/// with whitespace around tokens and an optional leading "-".
inline Polynomial parse_polynomial(const RingSpec& ring, std::size_t nvars, std::string_view text) {
    return detail::PolyParser(ring, nvars, text).parse();
}

/* JSON form */

inline nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back({{"coeff", c.str()}, {"exps", std::vector<Exponent>(m.exps().begin(), m.exps().end())}});
    return {{"ring", p.ring().to_string()}, {"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

inline Polynomial polynomial_from_json(const nlohmann::json& j) {
    try {
        const RingSpec ring = RingSpec::parse(j.at("ring").get<std::string>());
        const auto nvars = j.at("nvars").get<std::size_t>();
        std::vector<std::pair<Monomial, Integer>> terms;
        for (const auto& t : j.at("terms")) {
            auto exps = t.at("exps").get<std::vector<Exponent>>();
            if (exps.size() != nvars) throw SpecMismatch("term exponent vector length does not match nvars");
            terms.emplace_back(Monomial(std::move(exps)), detail::parse_decimal(t.at("coeff").get<std::string>()));
        }
        return Polynomial::from_terms(ring, nvars, std::move(terms));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("malformed polynomial JSON: ") + e.what());
    }
}

/* substitution */

/// Ring endomorphism of R[x_1..x_n] fixing R and sending x_k to images()[k-1].
class Homomorphism {
   public:
    Homomorphism(RingSpec ring, std::size_t nvars, std::vector<Polynomial> images)
        : ring_(std::move(ring)), nvars_(nvars), images_(std::move(images)) {
        if (images_.size() != nvars_)
            throw SpecMismatch("homomorphism needs " + std::to_string(nvars_) + " images, got " + std::to_string(images_.size()));
        for (const auto& img : images_)
            if (!(img.ring() == ring_) || img.nvars() != nvars_) throw SpecMismatch("homomorphism image over a different ring");
    }

    const RingSpec& ring() const noexcept { return ring_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<Polynomial>& images() const noexcept { return images_; }
    /// Image of x_k, 1-based.
    const Polynomial& image(std::size_t k) const { return images_.at(k - 1); }

   private:
    RingSpec ring_;
    std::size_t nvars_;
    std::vector<Polynomial> images_;
};

/// Image of p under h. Expands each term directly, with powers of every image
/// cached for the duration of the call.
inline Polynomial substitute(const Polynomial& p, const Homomorphism& h) {
    if (!(p.ring() == h.ring()) || p.nvars() != h.nvars()) throw SpecMismatch("polynomial and homomorphism disagree on ring or nvars");
    const auto& ring = p.ring();
    const auto n = p.nvars();
    std::vector<std::vector<Polynomial>> powers(n);
    auto power = [&](std::size_t i, Exponent e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::one(ring, n));
        while (cache.size() <= e) cache.push_back(cache.back() * h.images()[i]);
        return cache[e];
    };
    Polynomial result(ring, n);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(ring, n, c);
        for (std::size_t i = 0; i < n && !t.is_zero(); ++i)
            if (m.exps()[i] != 0) t *= power(i, m.exps()[i]);
        result += t;
    }
    return result;
}

}  // namespace tpinv

#endif
