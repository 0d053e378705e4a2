#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fermibasis/ratfun.hpp"
#include "fermibasis/series.hpp"

namespace fermibasis::lattice {

using exactmath::GaussianRational;
using Scalar = exactmath::RatFun;

/// The variable y = q^alpha of the scalar field; q itself is fixed at i.
exactmath::VarId y_var();
/// y^k as an exact rational function (negative k allowed).
Scalar y_pow(int k);
/// tail entry tau_s = y * i^{-s}
Scalar tau(int spin);

/// Spin-graded operator on the infinite chain, equal to the diagonal tail
/// diag(tau_s, tau_s^{-1}) on every site left of the window and to the
/// identity right of it. The window may be empty, in which case only the
/// tail/identity boundary position remains.
class QuasiLocalOp {
public:
    using Key = std::pair<std::uint32_t, std::uint32_t>;
    using Entries = std::map<Key, Scalar>;

    QuasiLocalOp() = default;  // the zero operator

    /// c * q^{2 alpha S(boundary)}-type element: empty window, given spin
    /// tail up to `boundary`, identity beyond.
    static QuasiLocalOp pure_tail(int boundary, int spin, Scalar coefficient);
    static QuasiLocalOp vacuum() { return pure_tail(0, 0, Scalar(1)); }

    bool is_zero() const { return entries_.empty(); }
    int spin() const { return spin_; }
    int left() const { return left_; }
    int right() const { return left_ + width_ - 1; }  // left-1 when empty
    int width() const { return width_; }
    const Entries& entries() const { return entries_; }

    /// Extends the window; L <= left, R >= right are required.
    QuasiLocalOp embedded(int L, int R) const;
    /// Shrinks the window to the minimal interval (support).
    QuasiLocalOp trimmed() const;
    /// nullopt for an operator of empty support, else the minimal window.
    std::optional<std::pair<int, int>> support() const;

    QuasiLocalOp scaled(const Scalar& c) const;
    QuasiLocalOp operator-() const { return scaled(Scalar(-1)); }
    friend QuasiLocalOp operator+(const QuasiLocalOp& a, const QuasiLocalOp& b);
    friend QuasiLocalOp operator-(const QuasiLocalOp& a, const QuasiLocalOp& b);

    /// Equality on the common refinement of the two windows.
    friend bool operator==(const QuasiLocalOp& a, const QuasiLocalOp& b);

    /// Shifts the whole operator k sites to the right.
    QuasiLocalOp translated(int k) const;

    /// True iff every entry connects column/row weights differing by the
    /// spin grade.
    bool weight_blocks_consistent() const;

    /// The scalar c with *this == c * pure_tail(0, 0, 1); nullopt otherwise.
    std::optional<Scalar> vacuum_multiple() const;

    /// Raw matrix access used by the engine and the dump format.
    static QuasiLocalOp from_entries(int spin, int left, int width, Entries entries);

private:
    int spin_ = 0;
    int left_ = 1;   // window start; boundary = left_ - 1 when width_ == 0
    int width_ = 0;  // number of explicit sites
    Entries entries_;
};

enum class Side { left, right };

/// Multiplication by the string fermion psi^{eps}_j = sigma^{eps}_j
/// e^{-eps pi i S(j-1)} on the chosen side, with the infinite string
/// absorbed into the tail relabeling. eps is +1 or -1.
QuasiLocalOp psi_mul(int eps, int site, Side side, const QuasiLocalOp& x);

/// Psi^{eps}_j(X) = psi_j X - (-1)^s X psi_j
QuasiLocalOp Psi(int eps, int site, const QuasiLocalOp& x);
/// Phi^{eps}_j(X) = (1 - y^{-2 eps})^{-1} (psi_j X - y^{-2 eps} (-1)^s X psi_j)
QuasiLocalOp Phi(int eps, int site, const QuasiLocalOp& x);

/// Adjoint action of the free-fermion R matrix across (i, i+1):
/// (1 + H) X (1 - H) with H = z (psi^+_i + psi^+_{i+1})(psi^-_i - psi^-_{i+1}),
/// exact because H^2 = 0. Returned as the z^0, z^1, z^2 coefficients.
std::array<QuasiLocalOp, 3> r_adjoint(int i, const QuasiLocalOp& x);

/// Operator-valued truncated series in z, represented through its action.
struct OperatorSeries {
    std::vector<QuasiLocalOp> coeffs;  // index = z power
    int cap() const { return static_cast<int>(coeffs.size()) - 1; }
    const QuasiLocalOp& operator[](int k) const { return coeffs.at(static_cast<size_t>(k)); }
};

/// The stabilized product of r_adjoint factors from site left-1 through
/// right+order, as a z-series through z^order. extra_sites extends the
/// product further (the coefficients must not change; used by the
/// stabilization check).
OperatorSeries hstar_series(const QuasiLocalOp& x, int order, int extra_sites = 0);

/// u-expansion coefficients of the same product, u = zeta^2 - 1.
std::vector<QuasiLocalOp> hstar_u_coeffs(const QuasiLocalOp& x, int order);
QuasiLocalOp hstar_coeff(int p, const QuasiLocalOp& x);

/// Coefficients of h*(zeta)^{-1}(X) as a z-series.
OperatorSeries hstar_inverse_series(const QuasiLocalOp& x, int order);

/// Verifies the conjugation identities
///   h* Phi^{+-}_p h*^{-1} = -Phi^{+-}_{p-1} z + (1-z^2) sum_{k>=p} Phi^{+-}_k z^{k-p}
/// (and the Psi analogue) order-by-order on the panel.
bool conjugation_check(int p, int order, const std::vector<QuasiLocalOp>& panel);

/// Normal-ordered fermion bilinear mode sum_eps sum_p :Phi^eps_p Psi^{-eps}_{p+nu}:,
/// finite on every quasi-local operand.
QuasiLocalOp I_nu(int nu, const QuasiLocalOp& x);

/// One fermion creation mode over the vacuum: Phi^{eps}_{site} with
/// site >= 1, or Psi^{eps}_{site} with site <= 0.
struct FermionMode {
    bool is_phi;
    int eps;
    int site;
    friend auto operator<=>(const FermionMode&, const FermionMode&) = default;
};

/// Applies the creation modes right-to-left to the vacuum.
QuasiLocalOp creator_monomial(const std::vector<FermionMode>& modes);

/// Coefficient of the vacuum in the Fock expansion of x, extracted by
/// pairing with dual annihilator words over the given modes. Throws
/// std::domain_error if x does not lie in the span.
Scalar vacuum_component(const QuasiLocalOp& x, const std::vector<FermionMode>& modes);

/// Creation modes spanning spin-graded operators supported in [A, B].
std::vector<FermionMode> modes_for_window(int A, int B);

/// Vacuum expectation of h*(zeta) as a z-series (exact scalars).
std::vector<Scalar> expectation_series(int order);

/// Checks h*(zeta) = (1-z^2) exp(sum_{nu>=1} z^nu/nu (I_{-nu} - I_nu))
/// through z^order on the panel of Fock-space elements.
bool bosonization_check(int order, const std::vector<QuasiLocalOp>& panel);

/// Exact rank of the h*-monomial family (h*_1)^{m1} (h*_2)^{m2} ... (vac)
/// over all weights sum p m_p <= weight_cap, with y specialized.
struct SchurRank {
    std::size_t rank = 0;
    std::size_t monomials = 0;
};
SchurRank schur_monomial_rank(int weight_cap, const GaussianRational& y_value);

}  // namespace fermibasis::lattice
