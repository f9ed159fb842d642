#pragma once

#include "cayley_dickson.hpp"
#include "group_algebra.hpp"
#include "matrix.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliffordforge {

// Reported with the byte offset (after minus-sign normalization) at which
// scanning stopped, so callers can echo "at position N".
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

  private:
    std::size_t pos_ = 0;
};

namespace parsing {

// The documentation typesets minus as U+2212; accept it as '-'.
inline std::string normalize_minus(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t k = 0; k < text.size();) {
        if (k + 2 < text.size() && static_cast<unsigned char>(text[k]) == 0xE2 &&
            static_cast<unsigned char>(text[k + 1]) == 0x88 &&
            static_cast<unsigned char>(text[k + 2]) == 0x92) {
            out.push_back('-');
            k += 3;
        } else {
            out.push_back(text[k]);
            ++k;
        }
    }
    return out;
}

class Cursor {
  public:
    explicit Cursor(std::string text) : text_(std::move(text)) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c))
            fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    std::size_t position() const { return pos_; }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) fail("expected identifier");
        return text_.substr(start, pos_ - start);
    }

    Rational rational() {
        skip_ws();
        bool neg = false;
        if (consume('-'))
            neg = true;
        else
            consume('+');
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_) fail("expected number");
        BigInt num(text_.substr(start, pos_ - start));
        BigInt den(1);
        if (consume('/')) {
            skip_ws();
            std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (dstart == pos_) fail("expected denominator");
            den = BigInt(text_.substr(dstart, pos_ - dstart));
            if (den == 0) fail("zero denominator");
        }
        Rational r(num, den);
        return neg ? -r : r;
    }

  private:
    std::string text_;
    std::size_t pos_ = 0;
};

} // namespace parsing

inline Rational parse_rational(const std::string& text) {
    parsing::Cursor cur(parsing::normalize_minus(text));
    Rational r = cur.rational();
    if (!cur.at_end()) cur.fail("trailing input");
    return r;
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
    parsing::Cursor cur(parsing::normalize_minus(text));
    std::vector<Rational> out;
    out.push_back(cur.rational());
    while (cur.consume(',')) out.push_back(cur.rational());
    if (!cur.at_end()) cur.fail("trailing input");
    return out;
}

namespace parsing {

inline Iterant iterant_body(Cursor& cur) {
    cur.expect('[');
    std::vector<GaussianRational> comps;
    comps.emplace_back(cur.rational());
    while (cur.consume(',')) comps.emplace_back(cur.rational());
    cur.expect(']');
    return Iterant(std::move(comps));
}

// expr    := ['-'] mterm (('+'|'-') mterm)*
// mterm   := factor ('*' factor)*
// factor  := '(' expr ')' | iterant | number | 'i' | group label
class GaExprParser {
  public:
    GaExprParser(Cursor& cur, GroupPtr group) : cur_(cur), group_(std::move(group)) {}

    GroupAlgebraElement expr() {
        bool neg = false;
        if (cur_.peek() == '-') {
            cur_.consume('-');
            neg = true;
        }
        GroupAlgebraElement acc = mterm();
        if (neg) acc = -acc;
        while (true) {
            if (cur_.consume('+')) {
                acc += mterm();
            } else if (cur_.consume('-')) {
                acc -= mterm();
            } else {
                break;
            }
        }
        return acc;
    }

  private:
    GroupAlgebraElement mterm() {
        GroupAlgebraElement acc = factor();
        while (cur_.consume('*')) acc *= factor();
        return acc;
    }

    GroupAlgebraElement factor() {
        char c = cur_.peek();
        if (c == '(') {
            cur_.consume('(');
            GroupAlgebraElement inner = expr();
            cur_.expect(')');
            return inner;
        }
        if (c == '[') {
            Iterant v = iterant_body(cur_);
            if (v.size() != group_->degree())
                cur_.fail("iterant length " + std::to_string(v.size()) +
                          " does not match the algebra's slot count " +
                          std::to_string(group_->degree()));
            return GroupAlgebraElement::term(group_, group_->identity(), v);
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return GroupAlgebraElement::scalar(group_, GaussianRational(cur_.rational()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = cur_.position();
            std::string name = cur_.identifier();
            if (name == "i")
                return GroupAlgebraElement::scalar(group_, GaussianRational::i());
            if (auto g = group_->find_label(name))
                return GroupAlgebraElement::term(group_, *g,
                                                 Iterant::ones(group_->degree()));
            throw ParseError("unknown element '" + name + "'", at);
        }
        cur_.fail("expected '(', '[', a number, or an element label");
    }

    Cursor& cur_;
    GroupPtr group_;
};

} // namespace parsing

inline GroupAlgebraElement parse_ga_expr(const std::string& text, const GroupPtr& group) {
    parsing::Cursor cur(parsing::normalize_minus(text));
    parsing::GaExprParser p(cur, group);
    GroupAlgebraElement result = p.expr();
    if (!cur.at_end()) cur.fail("trailing input");
    return result;
}

inline Iterant parse_iterant(const std::string& text) {
    parsing::Cursor cur(parsing::normalize_minus(text));
    Iterant v = parsing::iterant_body(cur);
    if (!cur.at_end()) cur.fail("trailing input");
    return v;
}

inline Matrix parse_matrix(const std::string& text) {
    parsing::Cursor cur(parsing::normalize_minus(text));
    cur.expect('[');
    std::vector<std::vector<Rational>> rows;
    do {
        cur.expect('[');
        std::vector<Rational> row;
        row.push_back(cur.rational());
        while (cur.consume(',')) row.push_back(cur.rational());
        cur.expect(']');
        rows.push_back(std::move(row));
    } while (cur.consume(','));
    cur.expect(']');
    if (!cur.at_end()) cur.fail("trailing input");
    std::size_t n = rows.size();
    for (const auto& row : rows)
        if (row.size() != n)
            throw ParseError("matrix must be square", 0);
    Matrix m(static_cast<int>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = GaussianRational(rows[r][c]);
    return m;
}

inline CDElement parse_cd_tuple(const std::string& text) {
    parsing::Cursor cur(parsing::normalize_minus(text));
    cur.expect('(');
    std::vector<Rational> comps;
    comps.push_back(cur.rational());
    while (cur.consume(',')) comps.push_back(cur.rational());
    cur.expect(')');
    if (!cur.at_end()) cur.fail("trailing input");
    int level = 0;
    while ((std::size_t(1) << level) < comps.size()) ++level;
    if ((std::size_t(1) << level) != comps.size() || level > 4)
        throw ParseError("component count must be a power of two, at most 16", 0);
    return CDElement(level, std::move(comps));
}

} // namespace cliffordforge
