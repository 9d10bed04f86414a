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

#ifndef ZPRCONV_IO_HPP
#define ZPRCONV_IO_HPP

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace zprconv {

namespace detail {

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline int64_t parse_int(const std::string& s, int line) {
    std::string t = trim(s);
    if (t.empty()) throw ParseError(line, "empty number");
    size_t pos = 0;
    int64_t v;
    try {
        v = std::stoll(t, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "not an integer: '" + t + "'");
    }
    if (pos != t.size()) throw ParseError(line, "trailing junk after integer: '" + t + "'");
    return v;
}

}  // namespace detail

/// Parse the comma coefficient syntax into a polynomial, range-checking every
/// coefficient against [0, p^r).
inline Poly parse_poly(const std::string& text, const RingContext& ctx, int line = 0) {
    std::vector<int64_t> coeffs;
    for (const std::string& tok : detail::split(text, ',')) {
        int64_t v = detail::parse_int(tok, line);
        if (v < 0 || v >= ctx.modulus())
            throw OutOfRangeCoefficientError(line, "coefficient " + std::to_string(v) + " outside [0, " +
                                                       std::to_string(ctx.modulus()) + ")");
        coeffs.push_back(v);
    }
    return Poly(ctx, std::move(coeffs));
}

/// Rational text form `num / den` (or a bare polynomial).
inline Rational parse_rational(const std::string& text, const RingContext& ctx, int line = 0) {
    size_t slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_poly(detail::trim(text), ctx, line));
    Poly num = parse_poly(detail::trim(text.substr(0, slash)), ctx, line);
    Poly den = parse_poly(detail::trim(text.substr(slash + 1)), ctx, line);
    return Rational(num, den);
}

/// Parse a code file: `#` starts a comment, the first significant line is
/// `p=<int> r=<int> k=<int> n=<int>`, followed by k lines
/// `row: e1 | e2 | ... | en` in comma coefficient syntax.
inline std::pair<RingContext, PolyMatrix> parse_code_file(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::optional<RingContext> ctx;
    int k = 0, n = 0;
    std::vector<std::vector<Poly>> rows;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;

        if (!ctx) {
            int64_t p = -1;
            int r = -1;
            k = -1;
            n = -1;
            std::istringstream hs(line);
            std::string tok;
            while (hs >> tok) {
                size_t eq = tok.find('=');
                if (eq == std::string::npos) throw ParseError(lineno, "expected key=value in header, got '" + tok + "'");
                std::string key = tok.substr(0, eq);
                int64_t val = detail::parse_int(tok.substr(eq + 1), lineno);
                if (key == "p")
                    p = val;
                else if (key == "r")
                    r = static_cast<int>(val);
                else if (key == "k")
                    k = static_cast<int>(val);
                else if (key == "n")
                    n = static_cast<int>(val);
                else
                    throw ParseError(lineno, "unknown header key '" + key + "'");
            }
            if (p < 0 || r < 0 || k < 0 || n < 0) throw ParseError(lineno, "header must set p, r, k and n");
            if (!RingContext::is_prime(p)) throw NotPrimeError(lineno, "p = " + std::to_string(p) + " is not prime");
            if (r < 1) throw ParseError(lineno, "r must be >= 1");
            if (k < 1 || n < 1) throw ShapeMismatchError(lineno, "k and n must be >= 1");
            ctx.emplace(p, r);
            continue;
        }

        if (line.rfind("row:", 0) != 0) throw ParseError(lineno, "expected 'row:' line");
        if (static_cast<int>(rows.size()) == k) throw ShapeMismatchError(lineno, "more than k rows");
        std::string body = line.substr(4);
        std::vector<std::string> entries = detail::split(body, '|');
        if (static_cast<int>(entries.size()) != n)
            throw ShapeMismatchError(lineno, "expected " + std::to_string(n) + " entries, got " +
                                                 std::to_string(entries.size()));
        std::vector<Poly> row;
        for (const std::string& e : entries) row.push_back(parse_poly(detail::trim(e), *ctx, lineno));
        rows.push_back(std::move(row));
    }
    if (!ctx) throw ParseError(lineno, "missing header line");
    if (static_cast<int>(rows.size()) != k) throw ShapeMismatchError(lineno, "expected k rows");
    return {*ctx, PolyMatrix::from_rows(*ctx, rows)};
}

}  // namespace zprconv

#endif
