// Copyright 2026 The tautknot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "tautknot/errors.hpp"
#include "tautknot/even_seq.hpp"
#include "tautknot/rational.hpp"

namespace tautknot {

// Finite continued fraction [a1,a2,...,an] = a1 + 1/(a2 + 1/(... + 1/an)).
// Every term must be nonzero.
struct CFSequence {
    std::vector<BigInt> terms;

    CFSequence() = default;
    explicit CFSequence(std::vector<BigInt> t) : terms(std::move(t)) { check(); }
    CFSequence(std::initializer_list<long long> t) {
        for (long long v : t) terms.emplace_back(v);
        check();
    }

    void check() const {
        if (terms.empty()) throw InvalidSequence("empty continued fraction");
        for (const BigInt& a : terms)
            if (a == 0) throw InvalidSequence("continued fraction has a zero term");
    }

    CFSequence prefix(std::size_t k) const {
        return CFSequence(std::vector<BigInt>(terms.begin(), terms.begin() + k));
    }

    CFSequence reversed_prefix(std::size_t k) const {
        std::vector<BigInt> rev(terms.rend() - k, terms.rend());
        return CFSequence(std::move(rev));
    }

    // Text form "[a1,a2,...]".
    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i) out += ',';
            out += terms[i].str();
        }
        out += ']';
        return out;
    }

    static CFSequence parse(const std::string& text) {
        std::vector<BigInt> vals;
        std::string cur;
        for (char ch : text) {
            if (ch == '[' || ch == ']' || ch == '(' || ch == ')' || ch == ' ') continue;
            if (ch == ',') {
                if (!cur.empty()) vals.emplace_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) vals.emplace_back(cur);
        return CFSequence(std::move(vals));
    }
};

inline CFSequence to_cf(const EvenSeq& a) {
    std::vector<BigInt> t(a.terms.begin(), a.terms.end());
    return CFSequence(std::move(t));
}

// Nested evaluation, right to left.  Throws DivisionByZero naming the suffix
// that evaluates to zero one level down.
inline Rational cf_eval(const CFSequence& cf) {
    cf.check();
    Rational acc(cf.terms.back());
    for (std::size_t i = cf.terms.size() - 1; i-- > 0;) {
        if (acc.is_zero()) {
            std::string suffix = "[";
            for (std::size_t j = i + 1; j < cf.terms.size(); ++j) {
                if (j > i + 1) suffix += ',';
                suffix += cf.terms[j].str();
            }
            suffix += ']';
            throw DivisionByZero("continued fraction suffix " + suffix + " evaluates to zero");
        }
        acc = Rational(cf.terms[i]) + acc.reciprocal();
    }
    return acc;
}

inline Rational cf_eval(const EvenSeq& a) { return cf_eval(to_cf(a)); }

struct ConvergentPair {
    BigInt p;
    BigInt q;
};

// Raw convergent recurrence p_{k+1} = a_{k+1} p_k + p_{k-1} (and same for q),
// seeded with (p0,q0) = (1,0).  Never divides, so it is total.
inline std::vector<ConvergentPair> convergent_pairs(const CFSequence& cf) {
    cf.check();
    std::vector<ConvergentPair> out;
    out.reserve(cf.terms.size());
    BigInt p_prev = 1, q_prev = 0;
    BigInt p_cur = cf.terms[0], q_cur = 1;
    out.push_back({p_cur, q_cur});
    for (std::size_t k = 1; k < cf.terms.size(); ++k) {
        BigInt p_next = cf.terms[k] * p_cur + p_prev;
        BigInt q_next = cf.terms[k] * q_cur + q_prev;
        out.push_back({p_next, q_next});
        p_prev = std::move(p_cur);
        q_prev = std::move(q_cur);
        p_cur = std::move(p_next);
        q_cur = std::move(q_next);
    }
    return out;
}

// Convergent values p_k/q_k as normalized rationals.  A prefix whose
// recurrence denominator vanishes has no finite value.
inline std::vector<Rational> convergents(const CFSequence& cf) {
    std::vector<Rational> out;
    std::size_t k = 1;
    for (const ConvergentPair& c : convergent_pairs(cf)) {
        if (c.q == 0)
            throw DivisionByZero("convergent " + std::to_string(k) + " is infinite (q_k = 0)");
        out.emplace_back(c.p, c.q);
        ++k;
    }
    return out;
}

struct PalindromeResult {
    Rational reversed_value; // [a_k,...,a_1]
    bool congruence_holds;   // q_k p_{k-1} = (-1)^{k-1}  mod |p_k|
    bool value_matches;      // reversed_value == p_k / p_{k-1}
};

// Verification harness for the Palindrome Theorem at prefix length k
// (1-based, 2 <= k <= n): the reversed prefix equals p_k/p_{k-1} and
// q_k p_{k-1} is congruent to (-1)^{k-1} modulo |p_k|.
inline PalindromeResult palindrome_check(const CFSequence& cf, std::size_t k) {
    if (k < 2 || k > cf.terms.size())
        throw InputError("palindrome_check index out of range");
    Rational reversed = cf_eval(cf.reversed_prefix(k));
    auto pairs = convergent_pairs(cf);
    const BigInt& pk = pairs[k - 1].p;
    const BigInt& qk = pairs[k - 1].q;
    const BigInt& pk1 = pairs[k - 2].p;

    bool value_ok = (pk1 != 0) && reversed == Rational(pk, pk1);

    BigInt lhs = qk * pk1;
    BigInt rhs = (k % 2 == 0) ? BigInt(-1) : BigInt(1); // (-1)^(k-1)
    bool cong_ok;
    if (pk == 0) {
        cong_ok = (lhs == rhs); // congruence mod 0 is equality
    } else {
        cong_ok = ((lhs - rhs) % pk == 0);
    }
    return {reversed, cong_ok, value_ok && cong_ok};
}

// Unique expansion of a rational into an odd-length sequence of nonzero even
// integers, by repeated division with the even quotient of least remainder.
// Requires num even and |num| > den (so the leading term has magnitude >= 2);
// the parity of numerator/denominator then alternates down the recursion and
// forces termination at an odd position.
inline EvenSeq even_expand(const Rational& r) {
    if (r.num() % 2 != 0)
        throw NotExpandable("even expansion needs an even numerator, got " + r.str());
    if (big_abs(r.num()) <= r.den())
        throw NotExpandable("even expansion needs |alpha| > |beta|, got " + r.str());

    std::vector<long long> out;
    BigInt a = r.num(), b = r.den();
    while (true) {
        if (b == 1) {
            if (a < LLONG_MIN || a > LLONG_MAX) throw NotExpandable("expansion term overflows");
            out.push_back(a.convert_to<long long>());
            break;
        }
        BigInt two_b = 2 * b;
        BigInt rho = a % two_b;
        if (rho < 0) rho += two_b;    // now in [0, 2b)
        if (2 * rho > two_b) rho -= two_b; // least absolute remainder; |rho| < b since gcd(rho,b)=1
        BigInt c = (a - rho) / b;     // even by construction, nonzero since |a| > b
        if (c < LLONG_MIN || c > LLONG_MAX) throw NotExpandable("expansion term overflows");
        out.push_back(c.convert_to<long long>());
        a = b;
        b = rho;
        if (b < 0) {
            a = -a;
            b = -b;
        }
    }
    EvenSeq result(std::move(out));
    if (!result.is_strict())
        throw NotExpandable("internal: expansion produced a zero term");
    return result;
}

} // namespace tautknot
