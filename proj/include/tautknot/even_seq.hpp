// Copyright 2026 The tautknot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "tautknot/errors.hpp"

namespace tautknot {

// Odd-length sequence of even integers describing a rational-link diagram.
// Odd positions (0-based indices 0,2,4,...) are the inter-component crossing
// counts c_i; even positions are the self-crossing counts d_j.
//
// Strict form: every term nonzero.  Expanded form: every c-position term is
// +2 or -2 and d-position terms may be zero.
struct EvenSeq {
    std::vector<long long> terms;

    EvenSeq() = default;
    explicit EvenSeq(std::vector<long long> t) : terms(std::move(t)) { check_shape(); }
    EvenSeq(std::initializer_list<long long> t) : terms(t) { check_shape(); }

    void check_shape() const {
        if (terms.empty() || terms.size() % 2 == 0)
            throw InvalidSequence("even sequence must have odd length");
        for (long long v : terms)
            if (v % 2 != 0) throw InvalidSequence("even sequence has an odd entry");
    }

    bool is_strict() const {
        for (long long v : terms)
            if (v == 0) return false;
        return true;
    }

    bool is_expanded() const {
        for (std::size_t i = 0; i < terms.size(); i += 2)
            if (terms[i] != 2 && terms[i] != -2) return false;
        return true;
    }

    std::size_t c_count() const { return terms.size() / 2 + 1; }

    // Text form "(c1,d1,...,cn+1)".
    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(terms[i]);
        }
        out += ')';
        return out;
    }

    static EvenSeq parse(const std::string& text) {
        std::vector<long long> vals;
        std::string cur;
        for (char ch : text) {
            if (ch == '(' || ch == ')' || ch == ' ') continue;
            if (ch == ',') {
                if (!cur.empty()) vals.push_back(std::stoll(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) vals.push_back(std::stoll(cur));
        return EvenSeq(std::move(vals));
    }

    friend bool operator==(const EvenSeq& a, const EvenSeq& b) { return a.terms == b.terms; }
    friend bool operator!=(const EvenSeq& a, const EvenSeq& b) { return !(a == b); }
};

} // namespace tautknot
