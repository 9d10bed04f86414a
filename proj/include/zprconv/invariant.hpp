/*
   Copyright 2026 the zprconv authors

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

#ifndef ZPRCONV_INVARIANT_HPP
#define ZPRCONV_INVARIANT_HPP

#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"
#include "ridm.hpp"

namespace zprconv {

/// Monic GCD over F_p[D] of the projected maximal minors. Only defined on a
/// RIDM; the code-level version reduces first.
inline Poly delta_of_ridm(const PolyMatrix& g) {
    if (!is_ridm(g)) throw NotRidmError("delta_of_ridm requires a RIDM");
    if (g.rows() == 0) return Poly::one(g.ctx().residue_field());
    std::vector<Poly> projected;
    for (const Poly& m : maximal_minors(g).minors) {
        Poly mbar = m.project();
        if (!mbar.is_zero()) projected.push_back(mbar);
    }
    return gcd_fp(projected);
}

/// The residual structural polynomial of the code generated by G: reduce to
/// a RIDM, then take the monic F_p GCD of its projected minors.
inline Poly delta_of_code(const PolyMatrix& g) {
    return delta_of_ridm(ridm_reduce(g).matrix);
}

/// True iff f = D^s for some s >= 0 (monic, all lower coefficients zero).
inline bool is_power_of_d(const Poly& f) {
    if (f.is_zero() || !f.is_monic()) return false;
    for (int i = 0; i < f.deg(); ++i)
        if (f.coeff(i) != 0) return false;
    return true;
}

/// Massey-Sain style encoder test through the projection: the encoder is
/// catastrophic iff the F_p GCD of its projected maximal minors is not of
/// the form D^s.
inline bool encoder_is_catastrophic(const PolyMatrix& g) {
    if (!is_full_row_rank(g)) throw NotFullRankError("encoder_is_catastrophic requires full row rank");
    std::vector<Poly> projected;
    for (const Poly& m : maximal_minors(g).minors) {
        Poly mbar = m.project();
        if (!mbar.is_zero()) projected.push_back(mbar);
    }
    return !is_power_of_d(gcd_fp(projected));
}

/// A constructive catastrophicity certificate: an input vector with an
/// infinite-weight component whose encoding is a finite-weight polynomial
/// codeword. All three claims are verified exactly before a witness is
/// returned.
struct Witness {
    std::vector<Rational> input;
    std::vector<Poly> output;
    int infinite_component = 0;
    WeightClassification input_weight_cert;
    int output_weight = 0;

    std::string to_text() const {
        std::string s;
        for (size_t i = 0; i < input.size(); ++i) s += "input[" + std::to_string(i) + "] = " + input[i].to_text() + "\n";
        for (size_t j = 0; j < output.size(); ++j) s += "output[" + std::to_string(j) + "] = " + output[j].to_text() + "\n";
        s += "infinite component " + std::to_string(infinite_component) + ": preperiod " +
             std::to_string(input_weight_cert.preperiod) + " period " + std::to_string(input_weight_cert.period) +
             " block ";
        for (size_t i = 0; i < input_weight_cert.periodic_block.size(); ++i)
            s += (i ? "," : "") + std::to_string(input_weight_cert.periodic_block[i]);
        s += "\noutput weight " + std::to_string(output_weight) + "\n";
        return s;
    }
};

struct CatastrophicityVerdict {
    bool catastrophic = false;
    int s = 0;   // delta = D^s when non-catastrophic
    Poly delta;  // always the monic code invariant
    std::optional<Witness> witness;

    std::string to_text() const {
        if (!catastrophic) return "NONCATASTROPHIC s=" + std::to_string(s) + "\n";
        std::string out = "CATASTROPHIC delta=" + delta.to_text() + "\n";
        if (witness) out += witness->to_text();
        return out;
    }
};

namespace detail {

/// Arithmetic in the field F_p[D]/(qbar), elements as residues of degree
/// < deg qbar.
struct QuotientField {
    Poly qbar;

    Poly reduce(const Poly& f) const { return divrem_monic(f, qbar).second; }
    Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }
    Poly inv(const Poly& a) const {
        auto [g, x, y] = xgcd_fp(a, qbar);
        if (g.deg() != 0) throw PreconditionError("element not invertible in quotient field");
        return reduce(x.scaled(a.ctx().inv(g.coeff(0))));
    }
};

/// One nonzero vector of the right kernel of an m x c matrix over
/// F_p[D]/(qbar), or nullopt when the kernel is trivial.
inline std::optional<std::vector<Poly>> quotient_field_kernel_vector(std::vector<std::vector<Poly>> m,
                                                                     const QuotientField& field) {
    if (m.empty()) return std::nullopt;
    const RingContext& fp = m.front().front().ctx();
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m.front().size());
    for (auto& row : m)
        for (auto& e : row) e = field.reduce(e);

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int i = row; i < rows; ++i)
            if (!m[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[row], m[piv]);
        Poly inv = field.inv(m[row][col]);
        for (int j = col; j < cols; ++j) m[row][j] = field.mul(m[row][j], inv);
        for (int i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Poly f = m[i][col];
            for (int j = col; j < cols; ++j) m[i][j] = field.reduce(m[i][j] - field.mul(f, m[row][j]));
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (static_cast<int>(pivot_col.size()) == cols) return std::nullopt;

    int free_col = 0;
    while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
    std::vector<Poly> x(cols, Poly::zero(fp));
    x[free_col] = Poly::one(fp);
    for (int i = static_cast<int>(pivot_col.size()) - 1; i >= 0; --i) {
        Poly acc = Poly::zero(fp);
        for (int j = pivot_col[i] + 1; j < cols; ++j) acc = field.reduce(acc + field.mul(m[i][j], x[j]));
        x[pivot_col[i]] = -acc;
    }
    return x;
}

}  // namespace detail

/// Build a catastrophic witness for an encoder whose invariant delta has an
/// irreducible factor other than D: take a mod-q kernel vector of the
/// projected matrix, lift it, and scale by p^{r-1} over the monic lift of q.
inline Witness witness_for(const PolyMatrix& g, const Poly& delta) {
    const RingContext& ctx = g.ctx();
    RingContext fp = ctx.residue_field();
    const int k = g.rows();
    const int n = g.cols();
    const Poly d_mono = Poly::monomial(fp, 1);
    const int64_t pr1 = ipow(ctx.p(), ctx.r() - 1);

    // candidate irreducible factors: those of delta first, then those of the
    // encoder-level projected-minor GCD (the two coincide on RIDMs)
    std::vector<Poly> candidates;
    auto add_factors = [&](const Poly& f) {
        for (const Poly& q : factor_fp(f)) {
            if (q == d_mono) continue;
            if (std::find(candidates.begin(), candidates.end(), q) == candidates.end()) candidates.push_back(q);
        }
    };
    add_factors(delta);
    if (candidates.empty()) throw NoSuitableFactorError("delta is a power of D; no witness exists");
    std::vector<Poly> projected;
    for (const Poly& m : maximal_minors(g).minors)
        if (!m.project().is_zero()) projected.push_back(m.project());
    add_factors(gcd_fp(projected));

    for (const Poly& qbar : candidates) {
        detail::QuotientField field{qbar};
        // left kernel of the projected matrix = right kernel of its transpose
        std::vector<std::vector<Poly>> mt(n, std::vector<Poly>(k, Poly::zero(fp)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) mt[j][i] = g.at(i, j).project();
        auto wbar = detail::quotient_field_kernel_vector(mt, field);
        if (!wbar) continue;

        Poly q(ctx, qbar.coeffs());
        Witness wit;
        for (int i = 0; i < k; ++i) {
            Poly wi(ctx, (*wbar)[i].coeffs());
            wit.input.push_back(Rational(wi.scaled(pr1), q));
        }
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            Poly acc = Poly::zero(ctx);
            for (int i = 0; i < k; ++i) acc = acc + Poly(ctx, (*wbar)[i].coeffs()) * g.at(i, j);
            auto [quot, rem] = divrem_monic(acc.scaled(pr1), q);
            if (!rem.is_zero()) {
                ok = false;
                break;
            }
            wit.output.push_back(quot);
        }
        if (!ok) continue;

        // exactness check 1: input * G = output in the total quotient ring
        for (int j = 0; j < n && ok; ++j) {
            Rational acc = Rational::zero(ctx);
            for (int i = 0; i < k; ++i) acc = acc + wit.input[i] * Rational(g.at(i, j));
            if (acc != Rational(wit.output[j])) ok = false;
        }
        if (!ok) throw VerificationFailedError("witness product identity failed");

        // exactness check 2: some input component has infinite weight
        int inf_idx = -1;
        for (int i = 0; i < k; ++i) {
            WeightClassification cls = classify_weight(wit.input[i]);
            if (!cls.finite) {
                inf_idx = i;
                wit.input_weight_cert = cls;
                break;
            }
        }
        if (inf_idx < 0) continue;  // kernel vector unlucky; try the next factor
        wit.infinite_component = inf_idx;

        // exactness check 3: outputs are polynomials, so the weight is finite
        wit.output_weight = 0;
        for (const Poly& o : wit.output)
            for (int64_t c : o.coeffs())
                if (c != 0) ++wit.output_weight;
        return wit;
    }
    throw VerificationFailedError("no verifiable witness found despite a non-monomial delta");
}

/// Full code-level classification: reduce to a RIDM, read off delta, and
/// attach a verified witness when the code is catastrophic.
inline CatastrophicityVerdict classify_code(const PolyMatrix& g) {
    if (!is_full_row_rank(g)) throw NotFullRankError("classify_code requires full row rank");
    Poly delta = delta_of_code(g);
    CatastrophicityVerdict v{false, 0, delta, std::nullopt};
    if (is_power_of_d(delta)) {
        v.s = delta.deg();
        return v;
    }
    v.catastrophic = true;
    v.witness = witness_for(g, delta);
    return v;
}

}  // namespace zprconv

#endif
