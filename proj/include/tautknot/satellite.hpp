// Copyright 2026 The tautknot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tautknot/contfrac.hpp"
#include "tautknot/errors.hpp"
#include "tautknot/even_seq.hpp"
#include "tautknot/param_seq.hpp"
#include "tautknot/rational.hpp"

namespace tautknot {

// --- Diagram rewriting on even sequences -----------------------------------

// Replace every c-position term with |c| > 2 by the alternating run
// (sgn(c)*2, 0, ..., 0, sgn(c)*2) of length |c| - 1.  d-position terms are
// kept.  This is a diagram move; the continued-fraction value changes.
inline EvenSeq expand_form(const EvenSeq& a) {
    if (!a.is_strict()) throw InvalidSequence("expand_form needs a strict sequence");
    std::vector<long long> out;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        long long v = a.terms[i];
        if (i % 2 == 1 || (v == 2 || v == -2)) {
            out.push_back(v);
            continue;
        }
        long long unit = v > 0 ? 2 : -2;
        long long count = (v > 0 ? v : -v) / 2; // run has `count` copies of unit
        for (long long j = 0; j < count; ++j) {
            if (j) out.push_back(0);
            out.push_back(unit);
        }
    }
    return EvenSeq(std::move(out));
}

// Replace every maximal run (s*2, 0, s*2, ..., 0, s*2) of k >= 2 equal-sign
// units by the single term s*2k, repeating until no run remains.  Runs are
// always aligned to c-positions: zeros can only sit at d-positions.
inline EvenSeq contract_form(const EvenSeq& a) {
    std::vector<long long> cur = a.terms;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<long long> out;
        std::size_t i = 0;
        while (i < cur.size()) {
            if (i % 2 == 1) { // d-position, copy
                out.push_back(cur[i]);
                ++i;
                continue;
            }
            long long v = cur[i];
            if (v == 2 || v == -2) {
                std::size_t j = i;
                while (j + 2 < cur.size() && cur[j + 1] == 0 && cur[j + 2] == v) j += 2;
                std::size_t k = (j - i) / 2 + 1;
                if (k >= 2) {
                    out.push_back(sgn(v) * 2 * static_cast<long long>(k));
                    i = j + 1;
                    changed = true;
                    continue;
                }
            }
            out.push_back(v);
            ++i;
        }
        cur = std::move(out);
    }
    return EvenSeq(std::move(cur));
}

// Negate every g and add (g_i + g_{i+1})/2 (of the original g's) to each h_i.
inline EvenSeq f_transform(const EvenSeq& a) {
    if (!a.is_expanded()) throw InvalidSequence("f_transform needs an expanded sequence");
    std::vector<long long> out = a.terms;
    for (std::size_t i = 0; i < out.size(); i += 2) out[i] = -a.terms[i];
    for (std::size_t i = 1; i < out.size(); i += 2)
        out[i] = a.terms[i] + (a.terms[i - 1] + a.terms[i + 1]) / 2;
    return EvenSeq(std::move(out));
}

// (f(A_e))_c, the sequence of the swapped-bridge diagram of the same link.
inline EvenSeq associated_sequence(const EvenSeq& a) {
    EvenSeq result = contract_form(f_transform(expand_form(a)));
    if (!result.is_strict())
        throw ComputeError("associated sequence came out non-strict for " + a.str());
    return result;
}

// --- Satellite (1,1)-knots --------------------------------------------------

// K(alpha, beta; p, q): the satellite of the (p,q)-torus knot with the
// (alpha,beta) rational-link pattern.  p,q may be left unbound for symbolic
// output.
struct SatelliteSpec {
    long long alpha = 0;
    long long beta = 0;
    std::optional<std::pair<long long, long long>> pq;

    void check() const {
        if (alpha < 4 || alpha % 2 != 0)
            throw InputError("alpha must be even and >= 4");
        if (beta == 0 || std::abs(beta) >= alpha)
            throw InputError("beta must satisfy 0 < |beta| < alpha");
        if (std::gcd(alpha, std::abs(beta)) != 1)
            throw InputError("alpha and beta must be coprime");
        if (pq) {
            auto [p, q] = *pq;
            if (std::abs(p) < 2 || std::abs(q) < 2 || std::gcd(std::abs(p), std::abs(q)) != 1)
                throw InputError("(p,q) must be a nontrivial torus-knot pair: coprime, |p|,|q| >= 2");
        }
    }

    Rational pattern_fraction() const { return Rational(BigInt(alpha), BigInt(beta)); }
};

// A tight parameterization of length 3l+2 whose slope pairs are e_k*(p,q);
// p and q can stay symbolic.
struct TightParameterization {
    std::vector<int> slope_signs;     // e_1..e_{l+1}, each +-1
    std::vector<long long> windings;  // m_1..m_l

    std::string text_symbolic() const {
        std::string out = "(";
        for (std::size_t k = 0; k < slope_signs.size(); ++k) {
            if (k) out += ',';
            out += slope_signs[k] > 0 ? "p,q" : "-p,-q";
            if (k < windings.size()) {
                out += ',';
                out += std::to_string(windings[k]);
            }
        }
        out += ')';
        return out;
    }

    ParamSequence bind(long long p, long long q) const {
        ParamSequence seq;
        for (std::size_t k = 0; k < windings.size(); ++k)
            seq.triples.push_back({slope_signs[k] * p, slope_signs[k] * q, windings[k]});
        seq.tail_p = slope_signs.back() * p;
        seq.tail_q = slope_signs.back() * q;
        return seq;
    }

    std::string text(const std::optional<std::pair<long long, long long>>& pq) const {
        if (!pq) return text_symbolic();
        return bind(pq->first, pq->second).str();
    }

    friend bool operator==(const TightParameterization& a, const TightParameterization& b) {
        return a.slope_signs == b.slope_signs && a.windings == b.windings;
    }
};

namespace detail {

// Winding at the first/last contact: outer is the g on the anchor side
// (g_1 for k=1, g_{l+1} for k=l), inner the one toward the interior.
inline long long end_winding(long long g_outer, long long g_inner, long long h) {
    if (h == 0) return sgn(g_outer);
    if (sgn(g_outer) == sgn(g_inner))
        return sgn(h) == sgn(g_outer) ? h + sgn(h) : h - sgn(h);
    return h;
}

// Winding at contact k, 2 <= k <= l-1, with both h-neighbors available.
inline long long middle_winding(long long g_k, long long g_k1, long long h_prev, long long h_k,
                                long long h_next) {
    if (sgn(g_k) == sgn(g_k1)) {
        if (h_k == 0) {
            if ((h_prev != 0 && sgn(h_prev) != sgn(g_k)) || (h_next != 0 && sgn(h_next) != sgn(g_k)))
                return sgn(g_k);
            return 0;
        }
        if (sgn(h_k) != sgn(g_k)) {
            if (sgn(h_prev) != sgn(h_k) || sgn(h_next) != sgn(h_k)) return h_k - sgn(h_k);
            return h_k - 2 * sgn(h_k);
        }
        // sgn(h_k) == sgn(g_k)
        if ((h_prev != 0 && sgn(h_prev) != sgn(h_k)) || (h_next != 0 && sgn(h_next) != sgn(g_k)))
            return h_k + sgn(h_k);
        return h_k;
    }
    // sgn(g_k) != sgn(g_{k+1}); h_k is nonzero whenever the input expands a
    // strict sequence, since only expansion runs create zero h's.
    if (sgn(h_k) == sgn(g_k)) {
        if ((h_prev != 0 && sgn(h_prev) != sgn(h_k)) || sgn(h_next) != sgn(h_k)) return h_k;
        return h_k - sgn(h_k);
    }
    if (sgn(h_k) == sgn(g_k1)) {
        if ((h_next != 0 && sgn(h_next) != sgn(h_k)) || sgn(h_prev) != sgn(h_k)) return h_k;
        return h_k - sgn(h_k);
    }
    return h_k; // h_k == 0 between opposite g's: unreachable from strict input
}

} // namespace detail

// The tight parameterization of K(alpha,beta;p,q) read off the even sequence
// describing its rational-link pattern.
inline TightParameterization algorithm1(const EvenSeq& a) {
    if (!a.is_strict()) throw InvalidSequence("algorithm1 needs a strict sequence");
    EvenSeq e = expand_form(a);
    std::vector<long long> g, h;
    for (std::size_t i = 0; i < e.terms.size(); ++i)
        (i % 2 == 0 ? g : h).push_back(e.terms[i]);
    std::size_t l = h.size();

    TightParameterization tp;
    for (long long gi : g) tp.slope_signs.push_back(gi > 0 ? 1 : -1);
    tp.windings.resize(l);
    for (std::size_t k = 1; k <= l; ++k) {
        long long m;
        if (k == 1)
            m = detail::end_winding(g[0], g[1], h[0]);
        else if (k == l)
            m = detail::end_winding(g[l], g[l - 1], h[l - 1]);
        else
            m = detail::middle_winding(g[k - 1], g[k], h[k - 2], h[k - 1], h[k]);
        tp.windings[k - 1] = m;
    }
    return tp;
}

inline TightParameterization algorithm1(const EvenSeq& a, const SatelliteSpec& spec) {
    spec.check();
    return algorithm1(a);
}

// Schubert's classification of two-bridge links: (alpha,beta) and
// (alpha',beta') give the same link iff alpha = alpha' and beta' is congruent
// to beta or to beta^{-1} modulo alpha.
inline bool schubert_equivalent(const BigInt& alpha1, const BigInt& beta1, const BigInt& alpha2,
                                const BigInt& beta2) {
    if (alpha1 != alpha2) return false;
    const BigInt& alpha = alpha1;
    if (alpha == 0) return beta1 == beta2;
    BigInt d = (beta1 - beta2) % alpha;
    if (d == 0) return true;
    BigInt prod = (beta1 * beta2 - 1) % alpha;
    return prod == 0;
}

inline bool schubert_equivalent(const std::pair<long long, long long>& r1,
                                const std::pair<long long, long long>& r2) {
    return schubert_equivalent(BigInt(r1.first), BigInt(r1.second), BigInt(r2.first),
                               BigInt(r2.second));
}

// Extract (alpha, beta) with alpha > 0 from a continued-fraction value.
inline std::pair<BigInt, BigInt> fraction_pair(const Rational& r) {
    if (r.num() < 0) return {-r.num(), -r.den()};
    return {r.num(), r.den()};
}

struct TightPair {
    EvenSeq pattern;            // A
    EvenSeq associated;         // A' = (f(A_e))_c
    TightParameterization first;
    TightParameterization second;
};

// The two tight parameterizations of a satellite (1,1)-knot: from the even
// sequence of alpha/beta and from its associated sequence.  They coincide up
// to negating every slope sign.
inline TightPair tight_pair(const SatelliteSpec& spec) {
    spec.check();
    EvenSeq a = even_expand(spec.pattern_fraction());
    EvenSeq a_assoc = associated_sequence(a);
    return {a, a_assoc, algorithm1(a), algorithm1(a_assoc)};
}

} // namespace tautknot
