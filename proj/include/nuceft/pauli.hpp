// SPDX-License-Identifier: MIT
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nuceft/errors.hpp"

namespace nuceft {

using cplx = std::complex<double>;

// Bit vector over qubit indices, 64 qubits per word.
class BitMask {
public:
    BitMask() = default;
    explicit BitMask(std::size_t n_bits) : n_(n_bits), w_((n_bits + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t q) const { return (w_[q >> 6] >> (q & 63)) & 1u; }
    void set(std::size_t q, bool v = true) {
        const std::uint64_t bit = std::uint64_t{1} << (q & 63);
        if (v)
            w_[q >> 6] |= bit;
        else
            w_[q >> 6] &= ~bit;
    }
    void flip(std::size_t q) { w_[q >> 6] ^= std::uint64_t{1} << (q & 63); }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        return std::any_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w != 0; });
    }
    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

    // Low 64 bits; callers guarantee size() <= 64.
    std::uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }

    friend bool operator==(const BitMask&, const BitMask&) = default;
    friend auto operator<=>(const BitMask& a, const BitMask& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.w_ <=> b.w_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Phase-exact Pauli string i^phase * prod_q sigma(x_q, z_q), where (1,1) is Y.
class PauliString {
public:
    PauliString() = default;
    explicit PauliString(std::size_t n_qubits) : x_(n_qubits), z_(n_qubits) {}

    static PauliString identity(std::size_t n) { return PauliString(n); }

    static PauliString single(std::size_t n, std::size_t q, char op) {
        PauliString p(n);
        p.set(q, op);
        return p;
    }

    // "+XIZY" style; qubit 0 is leftmost; '_' is accepted for identity.
    static PauliString from_str(std::string_view s) {
        unsigned ph = 0;
        if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
            ph = s[0] == '-' ? 2 : 0;
            s.remove_prefix(1);
            if (!s.empty() && s[0] == 'i') {
                ph += 1;
                s.remove_prefix(1);
            }
        }
        PauliString p(s.size());
        for (std::size_t q = 0; q < s.size(); ++q) p.set(q, s[q]);
        p.phase_ = ph & 3u;
        return p;
    }

    std::size_t n_qubits() const { return x_.size(); }
    unsigned phase() const { return phase_; }
    const BitMask& x_mask() const { return x_; }
    const BitMask& z_mask() const { return z_; }

    char get(std::size_t q) const {
        const bool xb = x_.get(q), zb = z_.get(q);
        return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }

    void set(std::size_t q, char op) {
        switch (op) {
            case 'I': case '_': x_.set(q, false); z_.set(q, false); break;
            case 'X': x_.set(q, true); z_.set(q, false); break;
            case 'Y': x_.set(q, true); z_.set(q, true); break;
            case 'Z': x_.set(q, false); z_.set(q, true); break;
            default: throw domain_error(std::string("bad Pauli letter '") + op + "'");
        }
    }

    void set_phase(unsigned k) { phase_ = k & 3u; }

    std::size_t weight() const {
        std::size_t w = 0;
        const auto& xw = x_.words();
        const auto& zw = z_.words();
        for (std::size_t i = 0; i < xw.size(); ++i) w += static_cast<std::size_t>(std::popcount(xw[i] | zw[i]));
        return w;
    }

    BitMask support() const {
        BitMask s(n_qubits());
        for (std::size_t i = 0; i < s.words().size(); ++i) s.words()[i] = x_.words()[i] | z_.words()[i];
        return s;
    }

    bool is_identity() const { return !x_.any() && !z_.any(); }

    bool commutes_with(const PauliString& o) const {
        check_same(o);
        unsigned parity = 0;
        for (std::size_t i = 0; i < x_.words().size(); ++i) {
            const auto a = (x_.words()[i] & o.z_.words()[i]) ^ (z_.words()[i] & o.x_.words()[i]);
            parity ^= static_cast<unsigned>(std::popcount(a)) & 1u;
        }
        return parity == 0;
    }

    friend PauliString operator*(const PauliString& a, const PauliString& b) {
        a.check_same(b);
        PauliString r(a.n_qubits());
        int k = static_cast<int>(a.phase_ + b.phase_);
        for (std::size_t i = 0; i < a.x_.words().size(); ++i) {
            const auto x1 = a.x_.words()[i], z1 = a.z_.words()[i];
            const auto x2 = b.x_.words()[i], z2 = b.z_.words()[i];
            const auto aX = x1 & ~z1, aY = x1 & z1, aZ = ~x1 & z1;
            const auto bX = x2 & ~z2, bY = x2 & z2, bZ = ~x2 & z2;
            // XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
            const auto plus = (aX & bY) | (aY & bZ) | (aZ & bX);
            const auto minus = (aY & bX) | (aZ & bY) | (aX & bZ);
            k += std::popcount(plus) - std::popcount(minus);
            r.x_.words()[i] = x1 ^ x2;
            r.z_.words()[i] = z1 ^ z2;
        }
        r.phase_ = static_cast<unsigned>(((k % 4) + 4) % 4);
        return r;
    }

    PauliString adjoint() const {
        PauliString r = *this;
        r.phase_ = (4u - phase_) & 3u;
        return r;
    }

    std::string str() const {
        static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
        std::string s = kPrefix[phase_];
        for (std::size_t q = 0; q < n_qubits(); ++q) s += get(q);
        return s;
    }

    // Same masks, ignoring phase.
    bool same_letters(const PauliString& o) const { return x_ == o.x_ && z_ == o.z_; }
    auto letters_key() const { return std::tie(x_, z_); }

    friend bool operator==(const PauliString&, const PauliString&) = default;

private:
    void check_same(const PauliString& o) const {
        if (n_qubits() != o.n_qubits())
            throw dimension_error("Pauli qubit counts differ: " + std::to_string(n_qubits()) + " vs " +
                                  std::to_string(o.n_qubits()));
    }

    BitMask x_, z_;
    unsigned phase_ = 0;
};

inline cplx phase_value(unsigned k) {
    static const cplx kVals[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kVals[k & 3u];
}

// Weighted sum of phase-free Pauli strings, kept canonical.
class PauliSum {
public:
    struct Term {
        cplx coeff;
        PauliString str;
    };

    static constexpr double kDropTol = 1e-13;

    PauliSum() = default;
    explicit PauliSum(std::size_t n_qubits) : n_(n_qubits) {}
    PauliSum(cplx c, const PauliString& p) : n_(p.n_qubits()) {
        add(c, p);
        canonicalize();
    }

    static PauliSum identity(std::size_t n, cplx c = 1.0) { return PauliSum(c, PauliString(n)); }

    std::size_t n_qubits() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    // Accumulates without canonicalizing; call canonicalize() afterwards.
    void add(cplx c, const PauliString& p) {
        if (p.n_qubits() != n_) throw dimension_error("PauliSum qubit count mismatch");
        PauliString s = p;
        const cplx f = c * phase_value(p.phase());
        s.set_phase(0);
        terms_.push_back({f, std::move(s)});
    }

    PauliSum& canonicalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.str.letters_key() < b.str.letters_key(); });
        std::vector<Term> out;
        for (auto& t : terms_) {
            if (!out.empty() && out.back().str.same_letters(t.str))
                out.back().coeff += t.coeff;
            else
                out.push_back(std::move(t));
        }
        double scale = 0.0;
        for (const auto& t : out) scale = std::max(scale, std::abs(t.coeff));
        const double tol = kDropTol * std::max(1.0, scale);
        std::erase_if(out, [tol](const Term& t) { return std::abs(t.coeff) <= tol; });
        terms_ = std::move(out);
        return *this;
    }

    std::size_t max_weight() const {
        std::size_t w = 0;
        for (const auto& t : terms_) w = std::max(w, t.str.weight());
        return w;
    }

    BitMask support() const {
        BitMask s(n_);
        for (const auto& t : terms_) {
            const auto sp = t.str.support();
            for (std::size_t i = 0; i < s.words().size(); ++i) s.words()[i] |= sp.words()[i];
        }
        return s;
    }

    PauliSum adjoint() const {
        PauliSum r(n_);
        for (const auto& t : terms_) r.terms_.push_back({std::conj(t.coeff), t.str});
        return r;
    }

    bool is_hermitian(double tol = 1e-12) const { return (*this - adjoint()).max_abs_coeff() <= tol; }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff));
        return m;
    }

    // True when the sum equals c times identity.
    bool is_scalar(cplx c, double tol = 0.0) const {
        if (terms_.empty()) return std::abs(c) <= tol;
        if (terms_.size() != 1 || !terms_[0].str.is_identity()) return false;
        return std::abs(terms_[0].coeff - c) <= tol;
    }

    PauliSum& operator+=(const PauliSum& o) {
        check_same(o);
        for (const auto& t : o.terms_) terms_.push_back(t);
        return canonicalize();
    }
    PauliSum& operator-=(const PauliSum& o) {
        check_same(o);
        for (const auto& t : o.terms_) terms_.push_back({-t.coeff, t.str});
        return canonicalize();
    }
    PauliSum& operator*=(cplx c) {
        for (auto& t : terms_) t.coeff *= c;
        return canonicalize();
    }

    friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
    friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
    friend PauliSum operator*(PauliSum a, cplx c) { return a *= c; }
    friend PauliSum operator*(cplx c, PauliSum a) { return a *= c; }

    friend PauliSum operator*(const PauliSum& a, const PauliSum& b) {
        a.check_same(b);
        PauliSum r(a.n_);
        r.terms_.reserve(a.size() * b.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) r.add(ta.coeff * tb.coeff, ta.str * tb.str);
        return r.canonicalize();
    }

    friend bool operator==(const PauliSum& a, const PauliSum& b) {
        if (a.n_ != b.n_ || a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a.terms_[i].coeff != b.terms_[i].coeff || !a.terms_[i].str.same_letters(b.terms_[i].str)) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        for (const auto& t : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + std::to_string(t.coeff.real()) + "," + std::to_string(t.coeff.imag()) + ")" + t.str.str();
        }
        return s.empty() ? "0" : s;
    }

private:
    void check_same(const PauliSum& o) const {
        if (n_ != o.n_)
            throw dimension_error("PauliSum qubit counts differ: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    }

    std::size_t n_ = 0;
    std::vector<Term> terms_;
};

inline PauliString multiply(const PauliString& a, const PauliString& b) { return a * b; }

inline PauliSum commutator_sum(const PauliSum& a, const PauliSum& b) {
    // Only anticommuting string pairs survive: [P,Q] = 2PQ when PQ = -QP.
    if (a.n_qubits() != b.n_qubits()) throw dimension_error("commutator operands differ in qubit count");
    PauliSum r(a.n_qubits());
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            if (!ta.str.commutes_with(tb.str)) r.add(2.0 * ta.coeff * tb.coeff, ta.str * tb.str);
    return r.canonicalize();
}

inline PauliSum anticommutator_sum(const PauliSum& a, const PauliSum& b) {
    if (a.n_qubits() != b.n_qubits()) throw dimension_error("anticommutator operands differ in qubit count");
    PauliSum r(a.n_qubits());
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            if (ta.str.commutes_with(tb.str)) r.add(2.0 * ta.coeff * tb.coeff, ta.str * tb.str);
    return r.canonicalize();
}

// Greedy first-fit: a term joins the first layer whose members it shares no qubit with.
// Disjoint support implies commutation, so each layer is also mutually commuting.
inline std::vector<std::size_t> partition_commuting_layers(const std::vector<PauliSum>& terms) {
    std::vector<std::size_t> layer_of(terms.size());
    std::vector<BitMask> occupied;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const BitMask s = terms[i].support();
        std::size_t L = 0;
        for (; L < occupied.size(); ++L) {
            bool clash = false;
            for (std::size_t w = 0; w < s.words().size() && !clash; ++w) clash = (s.words()[w] & occupied[L].words()[w]) != 0;
            if (!clash) break;
        }
        if (L == occupied.size()) occupied.emplace_back(s.size());
        for (std::size_t w = 0; w < s.words().size(); ++w) occupied[L].words()[w] |= s.words()[w];
        layer_of[i] = L;
    }
    return layer_of;
}

inline constexpr std::size_t kDenseQubitCap = 14;

// Action of a single string on a computational basis state (n <= 64).
inline std::pair<std::uint64_t, cplx> apply_string(const PauliString& p, std::uint64_t basis) {
    const std::uint64_t x = p.x_mask().low_word(), z = p.z_mask().low_word();
    const unsigned y_count = static_cast<unsigned>(std::popcount(x & z));
    const unsigned sign = static_cast<unsigned>(std::popcount(z & basis)) & 1u;
    return {basis ^ x, phase_value(p.phase() + y_count + 2 * sign)};
}

inline Eigen::MatrixXcd dense_matrix(const PauliSum& p, std::size_t max_qubits = kDenseQubitCap) {
    const std::size_t n = p.n_qubits();
    if (n > max_qubits)
        throw size_error("dense matrix requested for " + std::to_string(n) + " qubits; cap is " + std::to_string(max_qubits));
    const std::uint64_t dim = std::uint64_t{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto& t : p.terms())
        for (std::uint64_t b = 0; b < dim; ++b) {
            const auto [out, f] = apply_string(t.str, b);
            m(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(b)) += t.coeff * f;
        }
    return m;
}

// Applies a PauliSum to a sparse vector given as (basis, amplitude) pairs; requires n <= 64.
inline std::vector<std::pair<std::uint64_t, cplx>> apply_sparse(const PauliSum& p,
                                                                 const std::vector<std::pair<std::uint64_t, cplx>>& v) {
    if (p.n_qubits() > 64) throw size_error("sparse application limited to 64 qubits");
    std::vector<std::pair<std::uint64_t, cplx>> out;
    for (const auto& t : p.terms())
        for (const auto& [b, amp] : v) {
            const auto [o, f] = apply_string(t.str, b);
            out.emplace_back(o, t.coeff * f * amp);
        }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::uint64_t, cplx>> merged;
    for (const auto& e : out) {
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(e);
    }
    std::erase_if(merged, [](const auto& e) { return std::abs(e.second) < 1e-14; });
    return merged;
}

}  // namespace nuceft
