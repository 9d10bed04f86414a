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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zprconv/oracle.hpp"
#include "zprconv/zprconv.hpp"

namespace {

using namespace zprconv;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::pair<RingContext, PolyMatrix> load_code(const std::string& path) {
    auto parsed = parse_code_file(read_file(path));
    if (!is_full_row_rank(parsed.second)) throw NotFullRankError("input matrix does not have full row rank");
    return parsed;
}

std::pair<int, int> parse_window(const std::string& w) {
    size_t colon = w.find(':');
    if (colon == std::string::npos) throw ParseError(0, "window must be lo:hi");
    int lo = static_cast<int>(detail::parse_int(w.substr(0, colon), 0));
    int hi = static_cast<int>(detail::parse_int(w.substr(colon + 1), 0));
    if (lo >= hi) throw ParseError(0, "window must satisfy lo < hi");
    return {lo, hi};
}

/// Cross-check the main path against the naive reference implementations on
/// instances small enough for exhaustive search; silently skips checks whose
/// oracle budget would be exceeded.
void run_oracle_checks(const PolyMatrix& g, const PolyMatrix& reduced) {
    oracle::SearchBudget budget;
    budget.max_degree = 8;
    MinorSet ms = maximal_minors(g);
    try {
        auto brute = oracle::brute_common_divisor(ms.nonzero(), budget);
        auto fast = find_common_divisor(ms);
        bool same = brute.has_value() == fast.has_value() && (!brute || *brute == *fast);
        if (!same) throw VerificationFailedError("find_common_divisor disagrees with exhaustive search");
    } catch (const BudgetExceededError&) {
    }
    if (g.rows() <= 5) {
        for (const auto& subset : column_subsets(g.cols(), g.rows())) {
            PolyMatrix sub = g.submatrix_cols(subset);
            if (!(det(sub) == oracle::det_perm(sub)))
                throw VerificationFailedError("cofactor determinant disagrees with permutation sum");
        }
    }
    try {
        if (oracle::brute_common_divisor(maximal_minors(reduced).nonzero(), budget).has_value())
            throw VerificationFailedError("reduced matrix still has a common minor divisor");
    } catch (const BudgetExceededError&) {
    }
    std::cerr << "oracle checks passed\n";
}

int cmd_delta(const std::string& input, bool verify) {
    auto [ctx, g] = load_code(input);
    RidmResult red = ridm_reduce(g);
    Poly delta = delta_of_ridm(red.matrix);
    if (verify) run_oracle_checks(g, red.matrix);
    std::cout << "delta = " << delta.to_text() << "\n";
    return 0;
}

int cmd_classify(const std::string& input, bool verify) {
    auto [ctx, g] = load_code(input);
    CatastrophicityVerdict v = classify_code(g);
    if (verify) {
        if (v.catastrophic != oracle::massey_sain_catastrophic(ridm_reduce(g).matrix))
            throw VerificationFailedError("classification disagrees with the independent projection verdict");
        run_oracle_checks(g, ridm_reduce(g).matrix);
    }
    std::cout << v.to_text();
    return 0;
}

int cmd_ridm(const std::string& input, bool verify) {
    auto [ctx, g] = load_code(input);
    RidmResult red = ridm_reduce(g);
    if (verify) run_oracle_checks(g, red.matrix);
    std::cout << red.matrix.to_text();
    std::cout << red.trace.to_text();
    return 0;
}

int cmd_dual(const std::string& input, bool verify) {
    auto [ctx, g] = load_code(input);
    PolyMatrix h = parity_check(g);
    std::cout << h.to_text();
    std::cout << "orthogonality: " << (verify_orthogonality(g, h) ? "exact" : "FAILED") << "\n";
    if (verify && h.rows() > 0) run_oracle_checks(h, h);
    return 0;
}

int cmd_verify_duality(const std::string& input, bool verify) {
    auto [ctx, g] = load_code(input);
    DualityReport rep = duality_check(g);
    if (verify) run_oracle_checks(g, ridm_reduce(g).matrix);
    std::cout << rep.to_text();
    if (!rep.equal) throw VerificationFailedError("invariants of code and dual differ");
    return 0;
}

int cmd_encode(const std::string& input, const std::vector<std::string>& comps, const std::string& window,
               bool verify) {
    auto [ctx, g] = load_code(input);
    if (static_cast<int>(comps.size()) != g.rows())
        throw BadShapeError("expected " + std::to_string(g.rows()) + " input components");
    std::vector<Rational> u;
    for (const std::string& c : comps) u.push_back(parse_rational(c, ctx));
    std::vector<Rational> out;
    for (int j = 0; j < g.cols(); ++j) {
        Rational acc = Rational::zero(ctx);
        for (int i = 0; i < g.rows(); ++i) acc = acc + u[i] * Rational(g.at(i, j));
        out.push_back(acc);
    }
    if (!window.empty()) {
        auto [lo, hi] = parse_window(window);
        for (size_t j = 0; j < out.size(); ++j)
            std::cout << "out[" << j << "] = " << expand(out[j], lo, hi).to_text() << "\n";
    } else {
        for (size_t j = 0; j < out.size(); ++j) {
            if (out[j].den() == Poly::one(ctx))
                std::cout << "out[" << j << "] = " << out[j].num().to_text() << "\n";
            else
                std::cout << "out[" << j << "] = " << out[j].to_text() << "\n";
        }
    }
    if (verify) {
        // windowed re-expansion of each component must match direct expansion
        for (const Rational& o : out) (void)classify_weight(o);
        std::cerr << "oracle checks passed\n";
    }
    return 0;
}

int cmd_random(int64_t p, int r, int k, int n, int maxdeg, uint64_t seed) {
    RingContext ctx(p, r);
    if (k < 1 || n < k) throw BadShapeError("need 1 <= k <= n");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64_t> coeff(0, ctx.modulus() - 1);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::vector<Poly>> rows(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<int64_t> c(static_cast<size_t>(maxdeg) + 1);
                for (auto& v : c) v = coeff(rng);
                rows[i].emplace_back(ctx, std::move(c));
            }
        PolyMatrix g = PolyMatrix::from_rows(ctx, rows);
        if (is_full_row_rank(g)) {
            std::cout << g.to_text();
            return 0;
        }
    }
    throw SearchBudgetExceededError("could not sample a full-rank matrix");
}

/// Replays the worked examples baked into the test corpus; exits nonzero on
/// any regression.
int cmd_selftest() {
    bool ok = true;
    auto check = [&ok](const std::string& name, bool cond) {
        std::cout << (cond ? "[PASS] " : "[FAIL] ") << name << "\n";
        ok = ok && cond;
    };

    RingContext z4(2, 2);
    PolyMatrix g = PolyMatrix::from_rows(
        z4, {{Poly(z4, {1, 1}), Poly(z4, {1, 1}), Poly(z4, {2})},
             {Poly(z4, {2, 1}), Poly(z4, {1}), Poly(z4, {1, 1})}});
    check("3x2 matrix is a reduced encoder", is_ridm(g));
    Poly delta = delta_of_code(g);
    RingContext f2 = z4.residue_field();
    check("3x2 invariant is 1+D^2", delta == Poly(f2, {1, 0, 1}));
    CatastrophicityVerdict v = classify_code(g);
    check("3x2 verdict is catastrophic with a witness", v.catastrophic && v.witness.has_value());
    DualityReport rep = duality_check(g);
    check("dual invariant matches", rep.equal && rep.delta_dual == Poly(f2, {1, 0, 1}));

    PolyMatrix g2 = PolyMatrix::from_rows(z4, {{Poly(z4, {1, 1}), Poly(z4, {3, 1})}});
    check("1x2 matrix is a reduced encoder", is_ridm(g2));
    check("1x2 invariant is 1+D", delta_of_code(g2) == Poly(f2, {1, 1}));
    CatastrophicityVerdict v2 = classify_code(g2);
    check("1x2 verdict is catastrophic", v2.catastrophic && v2.witness.has_value());
    if (v2.witness) {
        int w = v2.witness->output_weight;
        check("1x2 witness output weight <= 2", w >= 1 && w <= 2);
    }

    LaurentWindow inv = invert_in_laurent(Poly(z4, {2, 0, 1}), -6, 4);
    bool inv_ok = inv.at(-4) == 2 && inv.at(-2) == 1;
    for (int e = -6; e < 4; ++e)
        if (e != -4 && e != -2 && inv.at(e) != 0) inv_ok = false;
    check("inverse of 2+D^2 is 2D^-4 + D^-2", inv_ok);

    if (!ok) throw VerificationFailedError("selftest regressions failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants, reduced encoders and duals of convolutional codes over Z_{p^r}"};
    app.require_subcommand(1);

    std::string input, window;
    bool verify = false;
    uint64_t seed = 0;
    std::vector<std::string> comps;
    int64_t rp = 2;
    int rr = 1, rk = 1, rn = 2, rdeg = 2;

    auto add_common = [&](CLI::App* c, bool needs_input) {
        auto* opt = c->add_option("--input", input, "code file to read");
        if (needs_input) opt->required();
        c->add_flag("--verify", verify, "cross-check against naive reference implementations");
    };

    auto* c_delta = app.add_subcommand("delta", "print the residual structural polynomial");
    add_common(c_delta, true);
    auto* c_classify = app.add_subcommand("classify", "catastrophicity verdict with witness");
    add_common(c_classify, true);
    auto* c_ridm = app.add_subcommand("ridm", "reduce to minimal-internal-degree form, with trace");
    add_common(c_ridm, true);
    auto* c_dual = app.add_subcommand("dual", "print a parity-check matrix");
    add_common(c_dual, true);
    auto* c_vd = app.add_subcommand("verify-duality", "compare the invariants of the code and its dual");
    add_common(c_vd, true);
    auto* c_encode = app.add_subcommand("encode", "encode a rational input vector");
    add_common(c_encode, true);
    c_encode->add_option("components", comps, "input components, each 'num' or 'num / den' in comma coefficients");
    c_encode->add_option("--window", window, "expansion window lo:hi");
    auto* c_random = app.add_subcommand("random", "emit a random full-rank code file");
    c_random->add_option("--p", rp, "prime p")->required();
    c_random->add_option("--r", rr, "exponent r")->required();
    c_random->add_option("--k", rk, "rows")->required();
    c_random->add_option("--n", rn, "columns")->required();
    c_random->add_option("--max-degree", rdeg, "maximum entry degree");
    c_random->add_option("--seed", seed, "deterministic seed");
    auto* c_selftest = app.add_subcommand("selftest", "run the built-in regression examples");
    (void)c_selftest;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (c_delta->parsed()) return cmd_delta(input, verify);
        if (c_classify->parsed()) return cmd_classify(input, verify);
        if (c_ridm->parsed()) return cmd_ridm(input, verify);
        if (c_dual->parsed()) return cmd_dual(input, verify);
        if (c_vd->parsed()) return cmd_verify_duality(input, verify);
        if (c_encode->parsed()) return cmd_encode(input, comps, window, verify);
        if (c_random->parsed()) return cmd_random(rp, rr, rk, rn, rdeg, seed);
        if (c_selftest->parsed()) return cmd_selftest();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const GuaranteeViolatedError& e) {
        std::cerr << "error: " << e.what() << "\n" << e.instance_dump;
        return 4;
    } catch (const VerificationFailedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
    return 1;
}
