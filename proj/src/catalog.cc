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

#include "kuniform/catalog.h"

#include <charconv>
#include <sstream>
#include <vector>

#include "kuniform/error.h"

namespace kuniform {

namespace {

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

bool is_blank(char c) {
    return c == ' ' || c == '\t' || c == '\r';
}

struct Line {
    size_t number;
    std::string text;
};

// Lines with comments stripped; blank lines skipped.
std::vector<Line> content_lines(const std::string &text) {
    std::vector<Line> out;
    std::stringstream in(text);
    std::string raw;
    size_t number = 0;
    while (std::getline(in, raw)) {
        number++;
        auto hash = raw.find('#');
        if (hash != std::string::npos) {
            raw.resize(hash);
        }
        bool blank = true;
        for (char c : raw) {
            blank = blank && is_blank(c);
        }
        if (!blank) {
            out.push_back(Line{number, raw});
        }
    }
    return out;
}

}  // namespace

char symbol_char(Symbol s) {
    if (s >= 36) {
        throw Error(ErrorCode::kSymbolOutOfRange, "symbols above 35 have no base-36 digit");
    }
    return (char)(s < 10 ? '0' + s : 'a' + (s - 10));
}

OrthogonalArray parse_oa_file(const std::string &text) {
    auto lines = content_lines(text);
    if (lines.empty()) {
        throw ParseError(1, 1, "missing 'oa r N d [k]' header");
    }

    const Line &head = lines[0];
    std::vector<std::pair<uint64_t, size_t>> numbers;
    size_t pos = 0;
    const std::string &h = head.text;
    while (pos < h.size() && is_blank(h[pos])) {
        pos++;
    }
    if (h.compare(pos, 2, "oa") != 0 || (pos + 2 < h.size() && !is_blank(h[pos + 2]))) {
        throw ParseError(head.number, pos + 1, "expected header 'oa r N d [k]'");
    }
    pos += 2;
    while (pos < h.size()) {
        if (is_blank(h[pos])) {
            pos++;
            continue;
        }
        uint64_t v = 0;
        auto [end, ec] = std::from_chars(h.data() + pos, h.data() + h.size(), v);
        if (ec != std::errc() || (end < h.data() + h.size() && !is_blank(*end))) {
            throw ParseError(head.number, pos + 1, "expected a non-negative integer");
        }
        numbers.emplace_back(v, pos + 1);
        pos = (size_t)(end - h.data());
    }
    if (numbers.size() < 3 || numbers.size() > 4) {
        throw ParseError(head.number, 1, "header needs 3 or 4 numbers: r N d [k]");
    }
    const uint64_t runs = numbers[0].first;
    const uint64_t factors = numbers[1].first;
    const uint64_t levels = numbers[2].first;
    if (levels < 1 || levels > 36) {
        throw ParseError(head.number, numbers[2].second, "d must lie in [1, 36]");
    }
    if (factors < 1) {
        throw ParseError(head.number, numbers[1].second, "N must be positive");
    }
    std::optional<size_t> strength;
    if (numbers.size() == 4) {
        strength = numbers[3].first;
        if (*strength > factors) {
            throw ParseError(head.number, numbers[3].second, "k exceeds N");
        }
    }

    if (lines.size() - 1 != runs) {
        size_t where = lines.size() > runs + 1 ? lines[runs + 1].number : lines.back().number + 1;
        std::stringstream ss;
        ss << "header declares " << runs << " rows, found " << lines.size() - 1;
        throw ParseError(where, 1, ss.str());
    }
    std::vector<Symbol> cells;
    cells.reserve(runs * factors);
    for (size_t r = 1; r < lines.size(); r++) {
        const Line &line = lines[r];
        size_t count = 0;
        for (size_t c = 0; c < line.text.size(); c++) {
            char ch = line.text[c];
            if (is_blank(ch)) {
                continue;
            }
            int v = digit_value(ch);
            if (v < 0) {
                throw ParseError(line.number, c + 1, std::string("unexpected character '") + ch + "'");
            }
            if ((uint64_t)v >= levels) {
                std::stringstream ss;
                ss << "symbol '" << ch << "' is not below d=" << levels;
                throw ParseError(line.number, c + 1, ss.str());
            }
            if (++count > factors) {
                throw ParseError(line.number, c + 1, "row has more than N symbols");
            }
            cells.push_back((Symbol)v);
        }
        if (count != factors) {
            std::stringstream ss;
            ss << "row has " << count << " symbols, expected " << factors;
            throw ParseError(line.number, line.text.size() + 1, ss.str());
        }
    }
    try {
        return OrthogonalArray(runs, factors, (uint32_t)levels, std::move(cells), strength);
    } catch (const Error &e) {
        if (e.code() == ErrorCode::kParameterMismatch) {
            throw;
        }
        throw ParseError(head.number, 1, e.what());
    }
}

std::string write_oa_file(const OrthogonalArray &a) {
    if (a.levels() > 36) {
        throw Error(ErrorCode::kSymbolOutOfRange, "catalog format supports d <= 36");
    }
    size_t k = a.declared_strength().has_value() ? *a.declared_strength() : max_strength(a);
    std::string out = "oa " + std::to_string(a.runs()) + " " + std::to_string(a.factors()) + " " +
                      std::to_string(a.levels()) + " " + std::to_string(k) + "\n";
    for (size_t i = 0; i < a.runs(); i++) {
        for (Symbol s : a.row(i)) {
            out.push_back(symbol_char(s));
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace kuniform
