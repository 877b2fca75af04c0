#pragma once

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mik/clutter.hpp"
#include "mik/ideal.hpp"
#include "mik/monomial.hpp"

namespace mik {

/// Syntax error with a 0-based position into the offending input.
struct ParseError : std::runtime_error {
    ParseError(std::string message, std::size_t position)
        : std::runtime_error(std::move(message) + " at position " +
                             std::to_string(position)),
          position(position) {}

    std::size_t position;
};

namespace detail {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::size_t pos() const { return pos_; }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("expected ") + what, pos_);
    }

    /// Unsigned decimal integer; overflow past size_t is a syntax error.
    std::size_t number() {
        skip_ws();
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected a number", pos_);
        std::size_t start = pos_;
        std::size_t value = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::size_t digit = static_cast<std::size_t>(text_[pos_] - '0');
            if (value > (SIZE_MAX - digit) / 10)
                throw ParseError("number too large", start);
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: generators separated by commas; a generator is `x<k>` factors
/// joined by `*`, each with an optional `^<exp>`; `1` is the unit ideal and
/// `0` the zero ideal.  The ambient is `vars` when given (indices must fit)
/// or the largest index seen.
inline MonomialIdeal parse_ideal(const std::string& text,
                                 std::optional<std::size_t> vars = std::nullopt) {
    detail::Cursor cur(text);
    if (cur.done()) throw ParseError("empty input", cur.pos());

    // Factors as (index, exponent) pairs; the ambient is fixed afterwards.
    struct RawGen {
        std::vector<std::pair<std::size_t, unsigned long long>> factors;
        bool is_one = false;
    };
    std::vector<RawGen> raw;
    bool zero = false;
    std::size_t max_index = 0;

    do {
        RawGen gen;
        if (cur.eat('0')) {
            if (raw.empty() && cur.done() && !zero) {
                zero = true;
                break;
            }
            throw ParseError("'0' must be the whole input", cur.pos());
        }
        if (cur.eat('1')) {
            gen.is_one = true;
        } else {
            do {
                cur.expect('x', "'x'");
                std::size_t idx_pos = cur.pos();
                std::size_t index = cur.number();
                if (index < 1) throw ParseError("variable indices start at 1", idx_pos);
                unsigned long long exp = 1;
                if (cur.eat('^')) {
                    std::size_t exp_pos = cur.pos();
                    exp = cur.number();
                    if (exp < 1) throw ParseError("exponents must be positive", exp_pos);
                }
                gen.factors.emplace_back(index, exp);
                max_index = std::max(max_index, index);
            } while (cur.eat('*'));
        }
        raw.push_back(std::move(gen));
    } while (cur.eat(','));

    if (!cur.done()) throw ParseError("unexpected trailing input", cur.pos());

    std::size_t ambient = vars.value_or(std::max<std::size_t>(max_index, 1));
    if (ambient < 1) throw ParseError("variable count must be positive", 0);
    if (max_index > ambient)
        throw ParseError("variable index exceeds the declared count", 0);

    if (zero) return MonomialIdeal::zero(ambient);
    std::vector<Monomial> gens;
    gens.reserve(raw.size());
    for (const auto& gen : raw) {
        std::vector<Exponent> exps(ambient, Exponent(0));
        if (!gen.is_one)
            for (const auto& [index, exp] : gen.factors)
                exps[index - 1] += exp;
        gens.push_back(Monomial(exps));
    }
    return MonomialIdeal::make(ambient, std::move(gens));
}

/// Grammar: `{1,2},{2,3}` — comma-separated brace-delimited vertex lists.
inline Clutter parse_clutter(const std::string& text,
                             std::optional<std::size_t> vars = std::nullopt) {
    detail::Cursor cur(text);
    if (cur.done()) throw ParseError("empty input", cur.pos());

    std::vector<Edge> edges;
    std::size_t max_index = 0;
    do {
        cur.expect('{', "'{'");
        Edge e;
        if (cur.peek() != '}') {
            do {
                std::size_t idx_pos = cur.pos();
                std::size_t v = cur.number();
                if (v < 1) throw ParseError("vertex indices start at 1", idx_pos);
                e.push_back(v);
                max_index = std::max(max_index, v);
            } while (cur.eat(','));
        }
        cur.expect('}', "'}'");
        if (e.empty()) throw ParseError("empty edge", cur.pos());
        edges.push_back(std::move(e));
    } while (cur.eat(','));

    if (!cur.done()) throw ParseError("unexpected trailing input", cur.pos());

    std::size_t ambient = vars.value_or(std::max<std::size_t>(max_index, 1));
    if (max_index > ambient)
        throw ParseError("vertex index exceeds the declared count", 0);
    return Clutter(ambient, std::move(edges));
}

}  // namespace mik
