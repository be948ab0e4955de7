// SPDX-License-Identifier: MIT
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nuceft/errors.hpp"
#include "nuceft/pauli.hpp"

namespace nuceft {

enum class Ladder : std::uint8_t { create, annihilate };

struct LadderOp {
    int mode;
    Ladder kind;
};

inline LadderOp cre(int m) { return {m, Ladder::create}; }
inline LadderOp ann(int m) { return {m, Ladder::annihilate}; }

// Canonical NPFO: a+(cre...) a(ann...) N(num...), each list ascending, lists pairwise disjoint.
struct Npfo {
    std::vector<int> cre, ann, num;

    std::size_t locality() const { return cre.size() + ann.size() + num.size(); }
    bool is_identity() const { return cre.empty() && ann.empty() && num.empty(); }

    // Ladder word equivalent to this term (numbers expand to a+ a).
    std::vector<LadderOp> word() const {
        std::vector<LadderOp> w;
        for (int m : cre) w.push_back(cre_op(m));
        for (int m : ann) w.push_back(ann_op(m));
        for (int m : num) {
            w.push_back(cre_op(m));
            w.push_back(ann_op(m));
        }
        return w;
    }

    std::string str() const {
        std::string s;
        for (int m : cre) s += "a+" + std::to_string(m) + " ";
        for (int m : ann) s += "a" + std::to_string(m) + " ";
        for (int m : num) s += "N" + std::to_string(m) + " ";
        return s.empty() ? "1" : s.substr(0, s.size() - 1);
    }

    friend auto operator<=>(const Npfo&, const Npfo&) = default;
    friend bool operator==(const Npfo&, const Npfo&) = default;

private:
    static LadderOp cre_op(int m) { return {m, Ladder::create}; }
    static LadderOp ann_op(int m) { return {m, Ladder::annihilate}; }
};

class FermionSum {
public:
    static constexpr double kDropTol = 1e-13;

    FermionSum() = default;
    FermionSum(const Npfo& t, cplx w) { add(t, w); }

    static FermionSum identity(cplx w = 1.0) { return FermionSum(Npfo{}, w); }
    static FermionSum number(int m, cplx w = 1.0) { return FermionSum(Npfo{{}, {}, {m}}, w); }
    // a+_i a_j + a+_j a_i
    static FermionSum hop(int i, int j, cplx w = 1.0);

    void add(const Npfo& t, cplx w) {
        auto [it, inserted] = terms_.try_emplace(t, w);
        if (!inserted) it->second += w;
    }

    const std::map<Npfo, cplx>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    FermionSum& prune() {
        double scale = 0.0;
        for (const auto& [t, w] : terms_) scale = std::max(scale, std::abs(w));
        const double tol = kDropTol * std::max(1.0, scale);
        std::erase_if(terms_, [tol](const auto& e) { return std::abs(e.second) <= tol; });
        return *this;
    }

    int max_mode() const {
        int m = -1;
        for (const auto& [t, w] : terms_) {
            for (int x : t.cre) m = std::max(m, x);
            for (int x : t.ann) m = std::max(m, x);
            for (int x : t.num) m = std::max(m, x);
        }
        return m;
    }

    FermionSum adjoint() const {
        FermionSum r;
        for (const auto& [t, w] : terms_) r.add(Npfo{t.ann, t.cre, t.num}, std::conj(w));
        return r;
    }

    FermionSum& operator+=(const FermionSum& o) {
        for (const auto& [t, w] : o.terms_) add(t, w);
        return prune();
    }
    FermionSum& operator-=(const FermionSum& o) {
        for (const auto& [t, w] : o.terms_) add(t, -w);
        return prune();
    }
    FermionSum& operator*=(cplx c) {
        for (auto& [t, w] : terms_) w *= c;
        return prune();
    }
    friend FermionSum operator+(FermionSum a, const FermionSum& b) { return a += b; }
    friend FermionSum operator-(FermionSum a, const FermionSum& b) { return a -= b; }
    friend FermionSum operator*(FermionSum a, cplx c) { return a *= c; }
    friend FermionSum operator*(cplx c, FermionSum a) { return a *= c; }
    friend FermionSum operator*(const FermionSum& a, const FermionSum& b);

    double max_abs_weight() const {
        double m = 0.0;
        for (const auto& [t, w] : terms_) m = std::max(m, std::abs(w));
        return m;
    }

    bool is_hermitian(double tol = 1e-10) const {
        const double s = std::max(1.0, max_abs_weight());
        return (*this - adjoint()).max_abs_weight() <= tol * s;
    }

private:
    std::map<Npfo, cplx> terms_;
};

namespace detail {

// Sorts modes ascending, returning the permutation sign, or 0 if a mode repeats.
inline int sort_with_sign(std::vector<int>& v) {
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
            if (v[j - 1] == v[j]) return 0;
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    return sign;
}

// Word with every creation left of every annihilation.
inline void emit_ordered(std::vector<LadderOp> word, cplx w, FermionSum& out) {
    std::vector<int> c, a;
    for (const auto& op : word) (op.kind == Ladder::create ? c : a).push_back(op.mode);
    const int sc = sort_with_sign(c);
    const int sa = sort_with_sign(a);
    if (sc == 0 || sa == 0) return;
    w *= static_cast<double>(sc * sa);

    Npfo t;
    // Each shared mode m becomes N_m: move a+_m to the end of the creation block
    // and a_m to the front of the annihilation block, then lift the even pair out.
    while (true) {
        auto it = std::find_if(c.begin(), c.end(), [&](int m) { return std::binary_search(a.begin(), a.end(), m); });
        if (it == c.end()) break;
        const int m = *it;
        const auto after = static_cast<long>(c.end() - it) - 1;
        const auto ja = std::lower_bound(a.begin(), a.end(), m);
        const auto before = static_cast<long>(ja - a.begin());
        if ((after + before) & 1) w = -w;
        c.erase(it);
        a.erase(ja);
        t.num.push_back(m);
    }
    std::sort(t.num.begin(), t.num.end());
    t.cre = std::move(c);
    t.ann = std::move(a);
    out.add(t, w);
}

inline void normal_order_into(std::vector<LadderOp> word, cplx w, FermionSum& out) {
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i].kind == Ladder::annihilate && word[i + 1].kind == Ladder::create) {
            // a_i a+_j = delta_ij - a+_j a_i
            if (word[i].mode == word[i + 1].mode) {
                std::vector<LadderOp> contracted;
                contracted.reserve(word.size() - 2);
                contracted.insert(contracted.end(), word.begin(), word.begin() + static_cast<long>(i));
                contracted.insert(contracted.end(), word.begin() + static_cast<long>(i) + 2, word.end());
                normal_order_into(std::move(contracted), w, out);
            }
            std::swap(word[i], word[i + 1]);
            normal_order_into(std::move(word), -w, out);
            return;
        }
    }
    emit_ordered(std::move(word), w, out);
}

}  // namespace detail

// Canonical NPFO expansion of an arbitrary ladder product, using the CAR.
inline FermionSum normal_order(const std::vector<LadderOp>& word, cplx w = 1.0) {
    FermionSum out;
    detail::normal_order_into(word, w, out);
    return out.prune();
}

// :word: -- reorder with anticommutation signs only, dropping every contraction.
inline FermionSum wick_normal(std::vector<LadderOp> word, cplx w = 1.0) {
    std::vector<LadderOp> c, a;
    // Stable partition with sign from the number of (annihilation, creation) inversions.
    long inversions = 0, ann_seen = 0;
    for (const auto& op : word) {
        if (op.kind == Ladder::create) {
            inversions += ann_seen;
            c.push_back(op);
        } else {
            ++ann_seen;
            a.push_back(op);
        }
    }
    if (inversions & 1) w = -w;
    c.insert(c.end(), a.begin(), a.end());
    FermionSum out;
    detail::emit_ordered(std::move(c), w, out);
    return out.prune();
}

inline FermionSum FermionSum::hop(int i, int j, cplx w) {
    FermionSum r = normal_order({cre(i), ann(j)}, w);
    r += normal_order({cre(j), ann(i)}, std::conj(w));
    return r;
}

inline FermionSum operator*(const FermionSum& a, const FermionSum& b) {
    FermionSum out;
    for (const auto& [ta, wa] : a.terms_)
        for (const auto& [tb, wb] : b.terms_) {
            auto word = ta.word();
            const auto wbw = tb.word();
            word.insert(word.end(), wbw.begin(), wbw.end());
            detail::normal_order_into(std::move(word), wa * wb, out);
        }
    return out.prune();
}

inline FermionSum fermion_commutator(const FermionSum& a, const FermionSum& b) { return a * b - b * a; }

// ---- dense eta-sector backend ----

inline constexpr std::size_t kDenseModeCap = 16;

class EtaSector {
public:
    EtaSector(std::size_t n_modes, std::size_t eta) : n_(n_modes), eta_(eta) {
        if (eta > n_modes) throw domain_error("eta exceeds mode count");
        if (n_modes > 63) throw size_error("eta sector limited to 63 modes");
        // Gosper's hack enumerates popcount-eta patterns in increasing order.
        if (eta == 0) {
            basis_.push_back(0);
        } else {
            std::uint64_t v = (std::uint64_t{1} << eta) - 1;
            const std::uint64_t limit = std::uint64_t{1} << n_modes;
            while (v < limit) {
                basis_.push_back(v);
                const std::uint64_t c = v & (~v + 1);
                const std::uint64_t r = v + c;
                v = (((r ^ v) >> 2) / c) | r;
            }
        }
        for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
    }

    std::size_t n_modes() const { return n_; }
    std::size_t eta() const { return eta_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::uint64_t>& basis() const { return basis_; }
    std::size_t index_of(std::uint64_t b) const { return index_.at(b); }

private:
    std::size_t n_, eta_;
    std::vector<std::uint64_t> basis_;
    std::map<std::uint64_t, std::size_t> index_;
};

// Applies a ladder word (rightmost factor first) with Jordan-Wigner ordering signs.
inline bool apply_word(const std::vector<LadderOp>& word, std::uint64_t& state, int& sign) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const std::uint64_t bit = std::uint64_t{1} << it->mode;
        const bool occ = (state & bit) != 0;
        if ((it->kind == Ladder::annihilate) != occ) return false;
        if (std::popcount(state & (bit - 1)) & 1) sign = -sign;
        state ^= bit;
    }
    return true;
}

inline Eigen::MatrixXcd sector_matrix(const FermionSum& h, const EtaSector& sec) {
    const auto d = static_cast<Eigen::Index>(sec.dim());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    if (h.max_mode() >= static_cast<int>(sec.n_modes())) throw dimension_error("operator acts outside the mode universe");
    for (const auto& [t, w] : h.terms()) {
        const auto word = t.word();
        for (std::size_t j = 0; j < sec.dim(); ++j) {
            std::uint64_t s = sec.basis()[j];
            int sign = 1;
            if (!apply_word(word, s, sign)) continue;
            m(static_cast<Eigen::Index>(sec.index_of(s)), static_cast<Eigen::Index>(j)) += w * static_cast<double>(sign);
        }
    }
    return m;
}

// Full 2^n Fock matrix, used for cross-checks against qubit encodings.
inline Eigen::MatrixXcd fock_matrix(const FermionSum& h, std::size_t n_modes, std::size_t cap = kDenseQubitCap) {
    if (n_modes > cap) throw size_error("Fock matrix requested for " + std::to_string(n_modes) + " modes; cap is " + std::to_string(cap));
    const auto d = static_cast<Eigen::Index>(std::uint64_t{1} << n_modes);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (const auto& [t, w] : h.terms()) {
        const auto word = t.word();
        for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(d); ++j) {
            std::uint64_t s = j;
            int sign = 1;
            if (!apply_word(word, s, sign)) continue;
            m(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(j)) += w * static_cast<double>(sign);
        }
    }
    return m;
}

inline double spectral_norm(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) return 0.0;
    if (m.isApprox(m.adjoint(), 1e-12)) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
        return es.eigenvalues().cwiseAbs().maxCoeff();
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
}

inline double eta_seminorm(const FermionSum& h, std::size_t n_modes, std::size_t eta, std::size_t cap = kDenseModeCap) {
    if (n_modes > cap) throw size_error("seminorm requested for " + std::to_string(n_modes) + " modes; cap is " + std::to_string(cap));
    return spectral_norm(sector_matrix(h, EtaSector(n_modes, eta)));
}

// exp(-i H s) for Hermitian H via eigendecomposition.
inline Eigen::MatrixXcd unitary_exp(const Eigen::MatrixXcd& h, double s) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const Eigen::VectorXcd ph = (es.eigenvalues().cast<cplx>() * cplx(0, -s)).array().exp();
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

// || e^{-iHt} - P_p(t/r)^r ||_eta with P_1(s) = e^{-iH_G s}...e^{-iH_1 s} and the symmetric P_2.
inline double exact_evolution_error(const std::vector<FermionSum>& layers, double t, int order, int r, std::size_t n_modes,
                                    std::size_t eta, std::size_t cap = kDenseModeCap) {
    if (n_modes > cap) throw size_error("evolution requested for " + std::to_string(n_modes) + " modes; cap is " + std::to_string(cap));
    if (order != 1 && order != 2) throw domain_error("exact evolution supports order 1 or 2");
    if (r < 1) throw domain_error("step count must be positive");
    const EtaSector sec(n_modes, eta);
    const auto d = static_cast<Eigen::Index>(sec.dim());
    std::vector<Eigen::MatrixXcd> mats;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
    for (const auto& l : layers) {
        if (!l.is_hermitian()) throw contract_error("non-Hermitian layer passed to exact evolution");
        mats.push_back(sector_matrix(l, sec));
        h += mats.back();
    }
    const double s = t / r;
    Eigen::MatrixXcd step = Eigen::MatrixXcd::Identity(d, d);
    if (order == 1) {
        for (const auto& m : mats) step = unitary_exp(m, s) * step;
    } else {
        for (const auto& m : mats) step = unitary_exp(m, s / 2) * step;
        for (auto it = mats.rbegin(); it != mats.rend(); ++it) step = unitary_exp(*it, s / 2) * step;
    }
    Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(d, d);
    for (int k = 0; k < r; ++k) prod = step * prod;
    return spectral_norm(unitary_exp(h, t) - prod);
}

}  // namespace nuceft
