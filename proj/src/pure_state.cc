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

#include "kuniform/pure_state.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kuniform/error.h"

namespace kuniform {

namespace {
constexpr double kPhaseTol = 1e-12;

std::string word_text(const Word &w) {
    std::string s;
    for (Symbol c : w) {
        s.push_back((char)(c < 10 ? '0' + c : 'a' + c - 10));
    }
    return s;
}
}  // namespace

PureState::PureState(size_t qudits, uint32_t levels, std::vector<Term> terms)
    : qudits_(qudits), levels_(levels), terms_(std::move(terms)) {
    if (levels_ == 0) {
        throw Error(ErrorCode::kInvalidArgument, "a state needs at least one level");
    }
    for (const auto &t : terms_) {
        if (t.word.size() != qudits_) {
            std::stringstream ss;
            ss << "word of length " << t.word.size() << " in a " << qudits_ << "-qudit state";
            throw Error(ErrorCode::kShapeMismatch, ss.str());
        }
        for (Symbol s : t.word) {
            if (s >= levels_) {
                std::stringstream ss;
                ss << "symbol " << s << " is not below d=" << levels_;
                throw Error(ErrorCode::kSymbolOutOfRange, ss.str());
            }
        }
        if (std::abs(std::abs(t.phase) - 1.0) > kPhaseTol) {
            std::stringstream ss;
            ss << "phase of |" << word_text(t.word) << "> has modulus " << std::abs(t.phase);
            throw Error(ErrorCode::kInvalidArgument, ss.str());
        }
    }
    std::sort(terms_.begin(), terms_.end(), [](const Term &a, const Term &b) { return a.word < b.word; });
    for (size_t i = 1; i < terms_.size(); i++) {
        if (terms_[i].word == terms_[i - 1].word) {
            throw Error(ErrorCode::kDuplicateRows, "repeated word |" + word_text(terms_[i].word) + ">");
        }
    }
}

bool PureState::all_phases_equal() const {
    for (const auto &t : terms_) {
        if (std::abs(t.phase - terms_[0].phase) > kPhaseTol) {
            return false;
        }
    }
    return true;
}

bool PureState::operator==(const PureState &other) const {
    return qudits_ == other.qudits_ && levels_ == other.levels_ && terms_ == other.terms_;
}

std::vector<Phase> signs_to_phases(std::span<const uint8_t> bits) {
    std::vector<Phase> out;
    out.reserve(bits.size());
    for (uint8_t b : bits) {
        out.emplace_back(b ? -1.0 : 1.0, 0.0);
    }
    return out;
}

PureState state_from_oa(const OrthogonalArray &a, std::optional<std::span<const Phase>> phases) {
    if (phases.has_value() && phases->size() != a.runs()) {
        std::stringstream ss;
        ss << "expected " << a.runs() << " phases, got " << phases->size();
        throw Error(ErrorCode::kPhaseLengthMismatch, ss.str());
    }
    std::vector<Term> terms;
    terms.reserve(a.runs());
    for (size_t i = 0; i < a.runs(); i++) {
        auto r = a.row(i);
        terms.push_back(Term{Word(r.begin(), r.end()), phases.has_value() ? (*phases)[i] : Phase(1.0, 0.0)});
    }
    return PureState(a.factors(), a.levels(), std::move(terms));
}

PureState orbit_state(const PureState &state, std::span<const double> angles) {
    if (state.size() == 0 || angles.size() != state.size() - 1) {
        std::stringstream ss;
        ss << "expected " << (state.size() == 0 ? 0 : state.size() - 1) << " angles, got " << angles.size();
        throw Error(ErrorCode::kLengthMismatch, ss.str());
    }
    std::vector<Term> terms = state.terms();
    for (size_t i = 1; i < terms.size(); i++) {
        terms[i].phase *= std::polar(1.0, angles[i - 1]);
    }
    return PureState(state.qudits(), state.levels(), std::move(terms));
}

PureState layered_state(std::span<const PureState> parts) {
    if (parts.empty()) {
        throw Error(ErrorCode::kShapeMismatch, "no parts to layer");
    }
    const size_t n = parts[0].qudits();
    const uint32_t d = parts[0].levels();
    if (parts.size() > d) {
        std::stringstream ss;
        ss << parts.size() << " parts but only " << d << " levels";
        throw Error(ErrorCode::kShapeMismatch, ss.str());
    }
    std::vector<Term> terms;
    for (size_t i = 0; i < parts.size(); i++) {
        if (parts[i].qudits() != n || parts[i].levels() != d) {
            throw Error(ErrorCode::kShapeMismatch, "layered parts need equal N and d");
        }
        for (const auto &t : parts[i].terms()) {
            Word w;
            w.reserve(n + 1);
            w.push_back((Symbol)i);
            w.insert(w.end(), t.word.begin(), t.word.end());
            terms.push_back(Term{std::move(w), t.phase});
        }
    }
    return PureState(n + 1, d, std::move(terms));
}

}  // namespace kuniform
