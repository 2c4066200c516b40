// Copyright 2026 The tautknot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "tautknot/errors.hpp"

namespace tautknot {

// One slope-and-winding step of a tight parameterization.
struct ParamTriple {
    long long p = 0;
    long long q = 0;
    long long m = 0;

    friend bool operator==(const ParamTriple& a, const ParamTriple& b) {
        return a.p == b.p && a.q == b.q && a.m == b.m;
    }
};

// The integer tuple (p1,q1,m1,...,mn,p_{n+1},q_{n+1}) read off a simplified
// taut path: n slope/winding triples followed by the final slope pair.
struct ParamSequence {
    std::vector<ParamTriple> triples;
    long long tail_p = 0;
    long long tail_q = 0;

    std::size_t n() const { return triples.size(); }

    std::vector<long long> flat() const {
        std::vector<long long> out;
        out.reserve(3 * triples.size() + 2);
        for (const auto& t : triples) {
            out.push_back(t.p);
            out.push_back(t.q);
            out.push_back(t.m);
        }
        out.push_back(tail_p);
        out.push_back(tail_q);
        return out;
    }

    // Canonical text form, e.g. "(2,1,1,1,0,-3,1)".
    std::string str() const {
        std::string out = "(";
        bool first = true;
        for (long long v : flat()) {
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        }
        out += ')';
        return out;
    }

    static ParamSequence from_flat(const std::vector<long long>& vals) {
        if (vals.size() < 2 || vals.size() % 3 != 2)
            throw InvalidSequence("parameter list must have length 3n+2");
        ParamSequence seq;
        std::size_t n = (vals.size() - 2) / 3;
        seq.triples.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            seq.triples.push_back({vals[3 * i], vals[3 * i + 1], vals[3 * i + 2]});
        seq.tail_p = vals[vals.size() - 2];
        seq.tail_q = vals[vals.size() - 1];
        return seq;
    }

    static ParamSequence parse(const std::string& text) {
        std::vector<long long> vals;
        std::string cur;
        auto flush = [&] {
            if (!cur.empty()) {
                vals.push_back(std::stoll(cur));
                cur.clear();
            }
        };
        for (char ch : text) {
            if (ch == '(' || ch == ')' || ch == ' ') continue;
            if (ch == ',')
                flush();
            else
                cur += ch;
        }
        flush();
        return from_flat(vals);
    }

    // Sum of all slope pairs; equals the whole-tile displacement from the
    // start circle to the end circle of any geometric realization.
    std::pair<long long, long long> total_displacement() const {
        long long dp = tail_p, dq = tail_q;
        for (const auto& t : triples) {
            dp += t.p;
            dq += t.q;
        }
        return {dp, dq};
    }

    friend bool operator==(const ParamSequence& a, const ParamSequence& b) {
        return a.triples == b.triples && a.tail_p == b.tail_p && a.tail_q == b.tail_q;
    }
    friend bool operator!=(const ParamSequence& a, const ParamSequence& b) { return !(a == b); }
};

struct Violation {
    std::size_t index; // 1-based slope-pair index
    std::string clause;
};

// Integer-side validity of a parameter sequence.  The winding clause (m = 0
// only at an inflection tangency) is geometric and checked on reconstruction,
// not here.
inline std::vector<Violation> validate(const ParamSequence& seq) {
    std::vector<Violation> out;
    std::vector<std::pair<long long, long long>> pairs;
    for (const auto& t : seq.triples) pairs.emplace_back(t.p, t.q);
    pairs.emplace_back(seq.tail_p, seq.tail_q);

    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [p, q] = pairs[i];
        std::size_t idx = i + 1;
        if (p == 0 && q == 0) {
            out.push_back({idx, "slope pair is (0,0)"});
            continue;
        }
        if (p == 0 && (q != 1 && q != -1)) {
            out.push_back({idx, "p=0 requires q=+-1"});
            continue;
        }
        if (q == 0 && (p != 1 && p != -1)) {
            out.push_back({idx, "q=0 requires p=+-1"});
            continue;
        }
        if (p != 0 && q != 0) {
            if ((p == q || p == -q) && !(p == 1 || p == -1)) {
                out.push_back({idx, "p=+-q requires values in {1,-1}"});
                continue;
            }
            if (std::gcd(p, q) != 1) {
                out.push_back({idx, "coprimality: gcd(|p|,|q|) != 1"});
                continue;
            }
        }
    }
    return out;
}

} // namespace tautknot
