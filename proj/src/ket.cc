// Copyright 2026 The kuniform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kuniform/ket.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "kuniform/catalog.h"
#include "kuniform/error.h"

namespace kuniform {

namespace {

class Cursor {
   public:
    explicit Cursor(const std::string &text) : text_(text) {
    }

    // Skips whitespace and comments.
    void skip() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance();
                }
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }
    bool done() const {
        return pos_ >= text_.size();
    }
    char peek() const {
        return done() ? '\0' : text_[pos_];
    }
    bool starts_with(const char *s) const {
        return text_.compare(pos_, std::char_traits<char>::length(s), s) == 0;
    }
    void advance() {
        if (text_[pos_] == '\n') {
            line_++;
            col_ = 1;
        } else {
            col_++;
        }
        pos_++;
    }
    void advance(size_t n) {
        for (size_t i = 0; i < n; i++) {
            advance();
        }
    }
    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(line_, col_, msg);
    }
    const char *here() const {
        return text_.c_str() + pos_;
    }

   private:
    const std::string &text_;
    size_t pos_ = 0;
    size_t line_ = 1;
    size_t col_ = 1;
};

int digit_value(char c) {
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    if (c >= 'a' && c <= 'z') {
        return c - 'a' + 10;
    }
    if (c >= 'A' && c <= 'Z') {
        return c - 'A' + 10;
    }
    return -1;
}

}  // namespace

PureState parse_ket(const std::string &text, std::optional<uint32_t> levels) {
    Cursor cur(text);
    std::vector<Term> terms;
    std::optional<size_t> width;
    Symbol max_symbol = 0;

    cur.skip();
    while (!cur.done()) {
        double sign = 1.0;
        if (cur.peek() == '+' || cur.peek() == '-') {
            sign = cur.peek() == '-' ? -1.0 : 1.0;
            cur.advance();
            cur.skip();
        } else if (!terms.empty()) {
            cur.fail("expected '+' or '-' between terms");
        }
        Phase phase(sign, 0.0);
        if (cur.starts_with("e^{i")) {
            cur.advance(4);
            cur.skip();
            char *end = nullptr;
            double theta = std::strtod(cur.here(), &end);
            if (end == cur.here()) {
                cur.fail("expected a phase angle");
            }
            cur.advance((size_t)(end - cur.here()));
            cur.skip();
            if (cur.peek() != '}') {
                cur.fail("expected '}' after phase angle");
            }
            cur.advance();
            cur.skip();
            phase *= std::polar(1.0, theta);
        }
        if (cur.peek() != '|') {
            cur.fail("expected '|' to open a ket");
        }
        cur.advance();
        Word word;
        while (!cur.done() && cur.peek() != '>') {
            int v = digit_value(cur.peek());
            if (v < 0) {
                cur.fail(std::string("unexpected character '") + cur.peek() + "' in ket");
            }
            if (levels.has_value() && (uint32_t)v >= *levels) {
                std::stringstream ss;
                ss << "symbol '" << cur.peek() << "' is not below d=" << *levels;
                cur.fail(ss.str());
            }
            word.push_back((Symbol)v);
            max_symbol = std::max(max_symbol, (Symbol)v);
            cur.advance();
        }
        if (cur.done()) {
            cur.fail("unterminated ket, expected '>'");
        }
        if (word.empty()) {
            cur.fail("empty ket");
        }
        if (width.has_value() && word.size() != *width) {
            std::stringstream ss;
            ss << "ket has " << word.size() << " symbols, earlier kets have " << *width;
            cur.fail(ss.str());
        }
        width = word.size();
        cur.advance();
        terms.push_back(Term{std::move(word), phase});
        cur.skip();
    }
    if (terms.empty()) {
        throw ParseError(1, 1, "no terms");
    }
    uint32_t d = levels.value_or(std::max<uint32_t>(2, (uint32_t)max_symbol + 1));
    try {
        return PureState(*width, d, std::move(terms));
    } catch (const Error &e) {
        throw ParseError(1, 1, e.what());
    }
}

std::string write_ket(const PureState &state) {
    std::string out;
    for (size_t i = 0; i < state.size(); i++) {
        const Term &t = state.term(i);
        if (i > 0) {
            out.push_back(' ');
        }
        if (std::abs(t.phase - Phase(1.0, 0.0)) < 1e-12) {
            out += "+";
        } else if (std::abs(t.phase + Phase(1.0, 0.0)) < 1e-12) {
            out += "-";
        } else {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "+e^{i %.17g}", std::arg(t.phase));
            out += buf;
        }
        out.push_back('|');
        for (Symbol s : t.word) {
            out.push_back(symbol_char(s));
        }
        out.push_back('>');
    }
    out.push_back('\n');
    return out;
}

}  // namespace kuniform
