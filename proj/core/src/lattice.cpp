#include "fermibasis/lattice.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "fermibasis/matrix.hpp"
#include "fermibasis/poly.hpp"

namespace fermibasis::lattice {

using exactmath::Polynomial;

exactmath::VarId y_var() {
    static exactmath::VarId v = exactmath::variable("y");
    return v;
}

Scalar y_pow(int k) {
    if (k >= 0) return Scalar(Polynomial::var(y_var(), k));
    return Scalar(Polynomial(GaussianRational(1)), Polynomial::var(y_var(), -k));
}

Scalar tau(int spin) { return y_pow(1) * Scalar(GaussianRational::i_pow(-spin)); }

namespace {

Scalar tau_inv(int spin) { return y_pow(-1) * Scalar(GaussianRational::i_pow(spin)); }

void prune(QuasiLocalOp::Entries& e) {
    for (auto it = e.begin(); it != e.end();) it = it->second.is_zero() ? e.erase(it) : std::next(it);
}

}  // namespace

QuasiLocalOp QuasiLocalOp::from_entries(int spin, int left, int width, Entries entries) {
    prune(entries);
    QuasiLocalOp op;
    if (entries.empty()) return op;
    op.spin_ = spin;
    op.left_ = left;
    op.width_ = width;
    op.entries_ = std::move(entries);
    return op;
}

QuasiLocalOp QuasiLocalOp::pure_tail(int boundary, int spin, Scalar coefficient) {
    Entries e;
    if (!coefficient.is_zero()) e.emplace(Key{0, 0}, std::move(coefficient));
    return from_entries(spin, boundary + 1, 0, std::move(e));
}

QuasiLocalOp QuasiLocalOp::embedded(int L, int R) const {
    if (is_zero()) return *this;
    if (L > left_ || R < right() || R < L - 1)
        throw std::invalid_argument("QuasiLocalOp::embedded: window must contain the current one");
    int kr = R - right();
    int kl = left_ - L;
    Entries cur = entries_;
    int w = width_;
    if (kr > 0) {
        Entries next;
        for (std::uint32_t hi = 0; hi < (1u << kr); ++hi)
            for (const auto& [key, v] : cur)
                next.emplace(Key{key.first | (hi << w), key.second | (hi << w)}, v);
        cur = std::move(next);
        w += kr;
    }
    if (kl > 0) {
        // per-site tail factors on the new low bits (0 = up -> tau_s)
        std::vector<Scalar> diag(1u << kl);
        for (std::uint32_t t = 0; t < (1u << kl); ++t) {
            Scalar f(1);
            for (int b = 0; b < kl; ++b) f = f * ((t >> b) & 1u ? tau_inv(spin_) : tau(spin_));
            diag[t] = f;
        }
        Entries next;
        for (const auto& [key, v] : cur)
            for (std::uint32_t t = 0; t < (1u << kl); ++t)
                next.emplace(Key{(key.first << kl) | t, (key.second << kl) | t}, v * diag[t]);
        cur = std::move(next);
        w += kl;
    }
    return from_entries(spin_, L, w, std::move(cur));
}

QuasiLocalOp QuasiLocalOp::trimmed() const {
    if (is_zero() || width_ == 0) return *this;
    QuasiLocalOp t = *this;
    bool shrunk = true;
    while (shrunk && t.width_ > 0) {
        shrunk = false;
        // right edge: identity factor
        {
            std::uint32_t mask = 1u << (t.width_ - 1);
            Entries low, high;
            bool ok = true;
            for (const auto& [key, v] : t.entries_) {
                if ((key.first & mask) != (key.second & mask)) {
                    ok = false;
                    break;
                }
                if (key.first & mask)
                    high.emplace(Key{key.first ^ mask, key.second ^ mask}, v);
                else
                    low.emplace(key, v);
            }
            if (ok && low == high) {
                t.entries_ = std::move(low);
                --t.width_;
                shrunk = true;
                if (t.entries_.empty()) return QuasiLocalOp();
                continue;
            }
        }
        // left edge: diag(tau_s, tau_s^{-1}) factor
        {
            Entries up, down;
            bool ok = true;
            for (const auto& [key, v] : t.entries_) {
                if ((key.first & 1u) != (key.second & 1u)) {
                    ok = false;
                    break;
                }
                if (key.first & 1u)
                    down.emplace(Key{key.first >> 1, key.second >> 1}, v);
                else
                    up.emplace(Key{key.first >> 1, key.second >> 1}, v);
            }
            if (ok && up.size() == down.size()) {
                Scalar t2 = tau(t.spin_) * tau(t.spin_);
                bool match = true;
                for (const auto& [key, v] : up) {
                    auto it = down.find(key);
                    if (it == down.end() || !(v == it->second * t2)) {
                        match = false;
                        break;
                    }
                }
                if (match) {
                    Scalar ti = tau_inv(t.spin_);
                    Entries reduced;
                    for (const auto& [key, v] : up) reduced.emplace(key, v * ti);
                    t.entries_ = std::move(reduced);
                    --t.width_;
                    ++t.left_;
                    shrunk = true;
                    if (t.entries_.empty()) return QuasiLocalOp();
                }
            }
        }
    }
    return t;
}

std::optional<std::pair<int, int>> QuasiLocalOp::support() const {
    QuasiLocalOp t = trimmed();
    if (t.is_zero() || t.width_ == 0) return std::nullopt;
    return std::make_pair(t.left_, t.right());
}

QuasiLocalOp QuasiLocalOp::scaled(const Scalar& c) const {
    if (is_zero() || c.is_zero()) return QuasiLocalOp();
    Entries e;
    for (const auto& [key, v] : entries_) e.emplace(key, v * c);
    return from_entries(spin_, left_, width_, std::move(e));
}

QuasiLocalOp operator+(const QuasiLocalOp& a, const QuasiLocalOp& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.spin_ != b.spin_) throw std::invalid_argument("QuasiLocalOp: adding different spin grades");
    int L = std::min(a.left_, b.left_);
    int R = std::max(a.right(), b.right());
    QuasiLocalOp ea = a.embedded(L, R), eb = b.embedded(L, R);
    QuasiLocalOp::Entries out = std::move(ea.entries_);
    for (const auto& [key, v] : eb.entries_) {
        auto [it, inserted] = out.emplace(key, v);
        if (!inserted) it->second += v;
    }
    return QuasiLocalOp::from_entries(a.spin_, L, R - L + 1, std::move(out)).trimmed();
}

QuasiLocalOp operator-(const QuasiLocalOp& a, const QuasiLocalOp& b) { return a + (-b); }

bool operator==(const QuasiLocalOp& a, const QuasiLocalOp& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.spin_ != b.spin_) return false;
    int L = std::min(a.left_, b.left_);
    int R = std::max(a.right(), b.right());
    return a.embedded(L, R).entries_ == b.embedded(L, R).entries_;
}

QuasiLocalOp QuasiLocalOp::translated(int k) const {
    QuasiLocalOp t = *this;
    t.left_ += k;
    return t;
}

bool QuasiLocalOp::weight_blocks_consistent() const {
    for (const auto& [key, v] : entries_) {
        int diff = std::popcount(key.second) - std::popcount(key.first);
        if (diff != spin_) return false;
    }
    return true;
}

std::optional<Scalar> QuasiLocalOp::vacuum_multiple() const {
    if (is_zero()) return Scalar(0);
    QuasiLocalOp t = trimmed();
    if (t.is_zero()) return Scalar(0);
    if (t.width_ == 0 && t.left_ == 1 && t.spin_ == 0) return t.entries_.begin()->second;
    return std::nullopt;
}

QuasiLocalOp psi_mul(int eps, int site, Side side, const QuasiLocalOp& x) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("psi_mul: eps must be +-1");
    if (x.is_zero()) return x;
    int L = std::min(x.left(), site);
    int R = std::max(x.right(), site);
    QuasiLocalOp e = x.embedded(L, R);
    int w = R - L + 1;
    int bit = site - L;
    std::uint32_t mask = 1u << bit;

    // string phase over the in-window sites strictly left of `site`; the
    // tail part of the string is absorbed by the spin relabeling
    auto phase = [&](std::uint32_t state) {
        int ups = 0, downs = 0;
        for (int b = 0; b < bit; ++b) ((state >> b) & 1u ? downs : ups)++;
        // psi^+ string: up -> -i, down -> +i; psi^- is the conjugate
        return GaussianRational::i_pow(eps == 1 ? downs - ups : ups - downs);
    };

    QuasiLocalOp::Entries out;
    for (const auto& [key, v] : e.entries()) {
        auto [r, c] = key;
        if (side == Side::left) {
            bool occupied = (r & mask) != 0;  // bit 1 = down
            if (eps == 1 ? !occupied : occupied) continue;
            std::uint32_t nr = r ^ mask;
            Scalar nv = v * Scalar(phase(r));
            auto [it, inserted] = out.emplace(QuasiLocalOp::Key{nr, c}, nv);
            if (!inserted) it->second += nv;
        } else {
            bool occupied = (c & mask) != 0;
            if (eps == 1 ? occupied : !occupied) continue;
            std::uint32_t nc = c ^ mask;
            Scalar nv = v * Scalar(phase(c));
            auto [it, inserted] = out.emplace(QuasiLocalOp::Key{r, nc}, nv);
            if (!inserted) it->second += nv;
        }
    }
    return QuasiLocalOp::from_entries(x.spin() + eps, L, w, std::move(out)).trimmed();
}

QuasiLocalOp Psi(int eps, int site, const QuasiLocalOp& x) {
    if (x.is_zero()) return x;
    QuasiLocalOp lm = psi_mul(eps, site, Side::left, x);
    QuasiLocalOp rm = psi_mul(eps, site, Side::right, x);
    return x.spin() % 2 == 0 ? lm - rm : lm + rm;
}

QuasiLocalOp Phi(int eps, int site, const QuasiLocalOp& x) {
    if (x.is_zero()) return x;
    QuasiLocalOp lm = psi_mul(eps, site, Side::left, x);
    QuasiLocalOp rm = psi_mul(eps, site, Side::right, x);
    Scalar y2 = y_pow(-2 * eps);
    Scalar inner_sign = x.spin() % 2 == 0 ? y2 : -y2;
    return (lm - rm.scaled(inner_sign)).scaled((Scalar(1) - y2).inv());
}

namespace {

QuasiLocalOp ab_left(int i, const QuasiLocalOp& y) {
    QuasiLocalOp b = psi_mul(-1, i, Side::left, y) - psi_mul(-1, i + 1, Side::left, y);
    return psi_mul(1, i, Side::left, b) + psi_mul(1, i + 1, Side::left, b);
}

QuasiLocalOp ab_right(int i, const QuasiLocalOp& y) {
    QuasiLocalOp a = psi_mul(1, i, Side::right, y) + psi_mul(1, i + 1, Side::right, y);
    return psi_mul(-1, i, Side::right, a) - psi_mul(-1, i + 1, Side::right, a);
}

}  // namespace

std::array<QuasiLocalOp, 3> r_adjoint(int i, const QuasiLocalOp& x) {
    if (x.is_zero()) return {x, x, x};
    QuasiLocalOp abx = ab_left(i, x);
    QuasiLocalOp xab = ab_right(i, x);
    QuasiLocalOp c1 = abx - xab;
    QuasiLocalOp c2 = -ab_left(i, xab);
    return {x, c1, c2};
}

OperatorSeries hstar_series(const QuasiLocalOp& x, int order, int extra_sites) {
    if (order < 0) throw std::invalid_argument("hstar_series: order must be >= 0");
    OperatorSeries s;
    s.coeffs.assign(static_cast<std::size_t>(order) + 1, QuasiLocalOp());
    if (x.is_zero()) return s;
    s.coeffs[0] = x;
    int first = x.left() - 1;
    int last = x.right() + order - 1 + extra_sites;
    for (int i = first; i <= last; ++i) {
        std::vector<QuasiLocalOp> next(static_cast<std::size_t>(order) + 1);
        for (int q = 0; q <= order; ++q) {
            const QuasiLocalOp& y = s.coeffs[static_cast<std::size_t>(q)];
            if (y.is_zero()) continue;
            auto rq = r_adjoint(i, y);
            next[static_cast<std::size_t>(q)] = next[static_cast<std::size_t>(q)] + rq[0];
            if (q + 1 <= order) next[static_cast<std::size_t>(q) + 1] = next[static_cast<std::size_t>(q) + 1] + rq[1];
            if (q + 2 <= order) next[static_cast<std::size_t>(q) + 2] = next[static_cast<std::size_t>(q) + 2] + rq[2];
        }
        s.coeffs = std::move(next);
    }
    return s;
}

std::vector<QuasiLocalOp> hstar_u_coeffs(const QuasiLocalOp& x, int order) {
    OperatorSeries zs = hstar_series(x, order);
    auto z = exactmath::z_of_u(order);
    // triangle of coefficients of z(u)^q
    std::vector<exactmath::TruncatedSeries<GaussianRational>> zpow;
    zpow.push_back(exactmath::TruncatedSeries<GaussianRational>::constant(exactmath::SeriesVar::u, order,
                                                                          GaussianRational(1)));
    for (int q = 1; q <= order; ++q) zpow.push_back(zpow.back() * z);
    std::vector<QuasiLocalOp> out(static_cast<std::size_t>(order) + 1);
    for (int p = 0; p <= order; ++p) {
        QuasiLocalOp acc;
        for (int q = 0; q <= order; ++q) {
            const GaussianRational& c = zpow[static_cast<std::size_t>(q)][p];
            if (c.is_zero() || zs[q].is_zero()) continue;
            acc = acc + zs[q].scaled(Scalar(c));
        }
        out[static_cast<std::size_t>(p)] = acc;
    }
    return out;
}

QuasiLocalOp hstar_coeff(int p, const QuasiLocalOp& x) {
    if (p < 0) throw std::invalid_argument("hstar_coeff: p must be >= 0");
    return hstar_u_coeffs(x, p)[static_cast<std::size_t>(p)];
}

OperatorSeries hstar_inverse_series(const QuasiLocalOp& x, int order) {
    OperatorSeries inv;
    inv.coeffs.assign(static_cast<std::size_t>(order) + 1, QuasiLocalOp());
    inv.coeffs[0] = x;
    for (int p = 1; p <= order; ++p) {
        QuasiLocalOp acc;
        for (int q = 1; q <= p; ++q) {
            const QuasiLocalOp& lower = inv.coeffs[static_cast<std::size_t>(p - q)];
            if (lower.is_zero()) continue;
            acc = acc + hstar_series(lower, q)[q];
        }
        inv.coeffs[static_cast<std::size_t>(p)] = -acc;
    }
    return inv;
}

bool conjugation_check(int p, int order, const std::vector<QuasiLocalOp>& panel) {
    for (const QuasiLocalOp& x : panel) {
        for (bool is_phi : {true, false}) {
            for (int eps : {1, -1}) {
                auto apply = [&](int site, const QuasiLocalOp& y) {
                    return is_phi ? Phi(eps, site, y) : Psi(eps, site, y);
                };
                OperatorSeries u = hstar_inverse_series(x, order);
                std::vector<QuasiLocalOp> v(static_cast<std::size_t>(order) + 1);
                for (int b = 0; b <= order; ++b) v[static_cast<std::size_t>(b)] = apply(p, u[b]);
                for (int q = 0; q <= order; ++q) {
                    QuasiLocalOp lhs;
                    for (int b = 0; q - b >= 0 && b <= order; ++b) {
                        const QuasiLocalOp& vb = v[static_cast<std::size_t>(b)];
                        if (vb.is_zero()) continue;
                        lhs = lhs + hstar_series(vb, q - b)[q - b];
                    }
                    QuasiLocalOp rhs = apply(p + q, x);
                    if (q >= 1) rhs = rhs - apply(p + q - 2, x);
                    if (!(lhs == rhs)) return false;
                }
            }
        }
    }
    return true;
}

QuasiLocalOp I_nu(int nu, const QuasiLocalOp& x) {
    if (x.is_zero()) return x;
    QuasiLocalOp acc;
    int k = x.left(), m = x.right();
    if (nu != 0) {
        for (int p = k; p <= m - nu; ++p)
            for (int eps : {1, -1}) acc = acc + Phi(eps, p, Psi(-eps, p + nu, x));
        return acc;
    }
    for (int p = k; p <= m; ++p)
        for (int eps : {1, -1}) {
            if (p >= 1)
                acc = acc + Phi(eps, p, Psi(-eps, p, x));
            else
                acc = acc - Psi(-eps, p, Phi(eps, p, x));
        }
    return acc;
}

QuasiLocalOp creator_monomial(const std::vector<FermionMode>& modes) {
    QuasiLocalOp x = QuasiLocalOp::vacuum();
    for (auto it = modes.rbegin(); it != modes.rend(); ++it)
        x = it->is_phi ? Phi(it->eps, it->site, x) : Psi(it->eps, it->site, x);
    return x;
}

std::vector<FermionMode> modes_for_window(int A, int B) {
    std::vector<FermionMode> modes;
    for (int j = 1; j <= B; ++j)
        for (int eps : {1, -1}) modes.push_back({true, eps, j});
    for (int j = 0; j >= A; --j)
        for (int eps : {1, -1}) modes.push_back({false, eps, j});
    return modes;
}

namespace {

QuasiLocalOp apply_dual_word(const std::vector<FermionMode>& creators, const QuasiLocalOp& y) {
    // annihilator word dual to the creator list, fully contracting it
    QuasiLocalOp acc = y;
    for (const auto& mode : creators) {
        if (acc.is_zero()) break;
        acc = mode.is_phi ? Psi(-mode.eps, mode.site, acc) : Phi(-mode.eps, mode.site, acc);
    }
    return acc;
}

int mode_spin(const std::vector<FermionMode>& modes) {
    int s = 0;
    for (const auto& m : modes) s += m.eps;
    return s;
}

}  // namespace

Scalar vacuum_component(const QuasiLocalOp& x, const std::vector<FermionMode>& modes) {
    QuasiLocalOp rem = x;
    const std::size_t n = modes.size();
    if (n > 20) throw std::invalid_argument("vacuum_component: mode set too large");
    // subsets grouped by degree, highest first; annihilator surplus kills
    // every lower-degree component, so each pairing reads one coefficient
    std::vector<std::vector<std::uint32_t>> by_degree(n + 1);
    for (std::uint32_t s = 1; s < (1u << n); ++s)
        by_degree[static_cast<std::size_t>(std::popcount(s))].push_back(s);
    for (std::size_t deg = n; deg >= 1; --deg) {
        for (std::uint32_t sub : by_degree[deg]) {
            std::vector<FermionMode> chosen;
            for (std::size_t i = 0; i < n; ++i)
                if (sub & (1u << i)) chosen.push_back(modes[i]);
            if (rem.is_zero()) break;
            if (mode_spin(chosen) != rem.spin()) continue;
            QuasiLocalOp paired = apply_dual_word(chosen, rem);
            auto c = paired.vacuum_multiple();
            if (!c) throw std::domain_error("vacuum_component: operand not in the Fock span");
            if (c->is_zero()) continue;
            QuasiLocalOp mono = creator_monomial(chosen);
            auto kappa = apply_dual_word(chosen, mono).vacuum_multiple();
            if (!kappa || kappa->is_zero())
                throw std::domain_error("vacuum_component: degenerate dual pairing");
            rem = rem - mono.scaled(*c * kappa->inv());
        }
    }
    auto c0 = rem.vacuum_multiple();
    if (!c0) throw std::domain_error("vacuum_component: remainder not proportional to the vacuum");
    return *c0;
}

std::vector<Scalar> expectation_series(int order) {
    OperatorSeries hs = hstar_series(QuasiLocalOp::vacuum(), order);
    std::vector<Scalar> out;
    for (int q = 0; q <= order; ++q)
        out.push_back(vacuum_component(hs[q], modes_for_window(0, std::max(q, 1))));
    return out;
}

namespace {

/// z-coefficients of exp(sum_{nu>=1} f_nu z^nu)(x) through z^order, where
/// f(nu, .) applies the nu-th mode, expanded by ordered compositions.
template <class F>
std::vector<QuasiLocalOp> exp_series_apply(const F& f, const QuasiLocalOp& x, int order) {
    std::vector<QuasiLocalOp> e(static_cast<std::size_t>(order) + 1);
    e[0] = x;
    std::vector<std::vector<int>> compositions;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int left) -> void {
        if (left == 0) {
            compositions.push_back(cur);
            return;
        }
        for (int nu = 1; nu <= left; ++nu) {
            cur.push_back(nu);
            self(self, left - nu);
            cur.pop_back();
        }
    };
    for (int q = 1; q <= order; ++q) {
        compositions.clear();
        gen(gen, q);
        QuasiLocalOp acc;
        for (const auto& comp : compositions) {
            QuasiLocalOp term = x;
            for (auto it = comp.rbegin(); it != comp.rend(); ++it) term = f(*it, term);
            unsigned long fact = 1;
            for (std::size_t r = 2; r <= comp.size(); ++r) fact *= r;
            acc = acc + term.scaled(Scalar(GaussianRational(1, fact)));
        }
        e[static_cast<std::size_t>(q)] = acc;
    }
    return e;
}

}  // namespace

bool bosonization_check(int order, const std::vector<QuasiLocalOp>& panel) {
    for (const QuasiLocalOp& x : panel) {
        OperatorSeries lhs = hstar_series(x, order);

        // normal-ordered exponential: creation modes applied after the
        // annihilation ones, with the (1-z^2) prefactor
        auto creators = [](int nu, const QuasiLocalOp& y) {
            return I_nu(-nu, y).scaled(Scalar(GaussianRational(1, static_cast<unsigned long>(nu))));
        };
        auto annihilators = [](int nu, const QuasiLocalOp& y) {
            return I_nu(nu, y).scaled(Scalar(GaussianRational(-1, static_cast<unsigned long>(nu))));
        };
        std::vector<QuasiLocalOp> inner = exp_series_apply(annihilators, x, order);
        std::vector<QuasiLocalOp> ordered(static_cast<std::size_t>(order) + 1);
        for (int b = 0; b <= order; ++b) {
            if (inner[static_cast<std::size_t>(b)].is_zero()) continue;
            auto outer = exp_series_apply(creators, inner[static_cast<std::size_t>(b)], order - b);
            for (int a = 0; a + b <= order; ++a)
                ordered[static_cast<std::size_t>(a + b)] =
                    ordered[static_cast<std::size_t>(a + b)] + outer[static_cast<std::size_t>(a)];
        }

        // the same series through the unordered exponential; the central
        // Heisenberg commutator makes exp(A-B) = (1-z^2) exp(A) exp(-B)
        auto both = [](int nu, const QuasiLocalOp& y) {
            return (I_nu(-nu, y) - I_nu(nu, y)).scaled(Scalar(GaussianRational(1, static_cast<unsigned long>(nu))));
        };
        std::vector<QuasiLocalOp> plain = exp_series_apply(both, x, order);

        for (int q = 0; q <= order; ++q) {
            QuasiLocalOp rhs = ordered[static_cast<std::size_t>(q)];
            if (q >= 2) rhs = rhs - ordered[static_cast<std::size_t>(q) - 2];
            if (!(lhs[q] == rhs)) return false;
            if (!(lhs[q] == plain[static_cast<std::size_t>(q)])) return false;
        }
    }
    return true;
}

SchurRank schur_monomial_rank(int weight_cap, const GaussianRational& y_value) {
    if (y_value.is_zero() || y_value == GaussianRational(1) || y_value == GaussianRational(-1))
        throw std::domain_error("schur_monomial_rank: singular y specialization");

    // all multiplicity vectors with sum p*m_p <= weight_cap
    std::vector<std::vector<int>> partitions;  // partitions[i] = list of parts
    std::vector<int> parts;
    auto gen = [&](auto&& self, int maxpart, int left) -> void {
        partitions.push_back(parts);
        for (int p = std::min(maxpart, left); p >= 1; --p) {
            parts.push_back(p);
            self(self, p, left - p);
            parts.pop_back();
        }
    };
    gen(gen, weight_cap, weight_cap);

    std::vector<QuasiLocalOp> ops;
    for (const auto& mu : partitions) {
        QuasiLocalOp x = QuasiLocalOp::vacuum();
        for (int p : mu) x = hstar_coeff(p, x);
        ops.push_back(x.trimmed());
    }

    // flatten on the common window [-w, w] at the specialized y
    int W = weight_cap;
    std::map<exactmath::VarId, GaussianRational> point{{y_var(), y_value}};
    std::map<QuasiLocalOp::Key, std::size_t> columns;
    std::vector<std::map<std::size_t, GaussianRational>> rows;
    for (const auto& op : ops) {
        std::map<std::size_t, GaussianRational> row;
        if (!op.is_zero()) {
            QuasiLocalOp e = op.embedded(-W, W);
            for (const auto& [key, v] : e.entries()) {
                auto [it, inserted] = columns.emplace(key, columns.size());
                GaussianRational val = v.eval(point);
                if (!val.is_zero()) row[it->second] = val;
            }
        }
        rows.push_back(std::move(row));
    }
    exactmath::ExactMatrix m(rows.size(), columns.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [cidx, val] : rows[r]) m(r, cidx) = val;

    SchurRank out;
    out.monomials = ops.size();
    out.rank = exactmath::exact_rank(m);
    return out;
}

}  // namespace fermibasis::lattice
