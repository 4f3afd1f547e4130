#pragma once

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>

namespace isokit {

/// Dual number re + im*eps with eps^2 = 0. The ring behind Galilean
/// rotations of the isotropic plane.
struct DualNumber {
    double re = 0.0;
    double im = 0.0;

    /// Seminorm |re|; the isotropic length of the plane vector (re, im).
    double seminorm() const;
    /// Zero divisors are exactly the numbers with re == 0.
    bool is_zero_divisor() const { return re == 0.0; }
    DualNumber conj() const { return {re, -im}; }
};

DualNumber operator+(DualNumber p, DualNumber q);
DualNumber operator-(DualNumber p, DualNumber q);
DualNumber operator*(DualNumber p, DualNumber q);

/// Lorentz (hyperbolic) number re + im*l with l^2 = +1, canonical {1, l}
/// basis. The light-cone components are views, not stored state.
struct LorentzNumber {
    double re = 0.0;
    double im = 0.0;

    double plus() const { return re + im; }    // coefficient of e+ = (1+l)/2
    double minus() const { return re - im; }   // coefficient of e- = (1-l)/2
    static LorentzNumber from_lightcone(double plus, double minus);

    /// Quadratic form p * conj(p) = re^2 - im^2 = plus * minus.
    double quadratic_form() const;
    LorentzNumber conj() const { return {re, -im}; }
    bool is_zero_divisor() const { return plus() == 0.0 || minus() == 0.0; }
};

LorentzNumber operator+(LorentzNumber p, LorentzNumber q);
LorentzNumber operator-(LorentzNumber p, LorentzNumber q);
LorentzNumber operator*(LorentzNumber p, LorentzNumber q);

/// 2x2 real matrix, row major.
struct Mat2 {
    double a11 = 1.0, a12 = 0.0;
    double a21 = 0.0, a22 = 1.0;

    static Mat2 identity() { return {}; }
    static Mat2 diagonal(double d1, double d2) { return {d1, 0.0, 0.0, d2}; }

    void apply(double& x, double& y) const;
    double det() const { return a11 * a22 - a12 * a21; }
    Mat2 inverse() const;  // throws SingularParameter when det == 0
};

Mat2 operator*(const Mat2& m, const Mat2& n);
Mat2 operator-(const Mat2& m, const Mat2& n);
double frobenius_norm(const Mat2& m);

/// Linear representations; both are ring homomorphisms.
Mat2 dual_rep(DualNumber p);       // [[re, 0], [im, re]]
Mat2 lorentz_rep(LorentzNumber p); // [[re, im], [im, re]]
/// Representation in the light-cone basis: diag(plus, minus).
Mat2 lorentz_rep_lightcone(LorentzNumber p);

/// Change of frame taking {1, l} coordinates to light-cone coordinates,
/// (plus, minus) = S (re, im). Conjugation by it diagonalizes lorentz_rep.
Mat2 lightcone_basis_change();

/// Galilean rotation [[1, 0], [phi, 1]]: the representation of the unit dual
/// 1 + phi*eps, using cosg phi = 1 and sing phi = phi literally.
Mat2 galilean_rotation(double phi);

/// Hyperbolic rotation [[cosh, sinh], [sinh, cosh]]: the representation of
/// the unit Lorentz number cosh phi + l sinh phi.
Mat2 hyperbolic_rotation(double phi);

void to_json(nlohmann::json& j, const DualNumber& p);
void from_json(const nlohmann::json& j, DualNumber& p);
void to_json(nlohmann::json& j, const LorentzNumber& p);
void from_json(const nlohmann::json& j, LorentzNumber& p);

std::ostream& operator<<(std::ostream& os, DualNumber p);
std::ostream& operator<<(std::ostream& os, LorentzNumber p);

}  // namespace isokit
