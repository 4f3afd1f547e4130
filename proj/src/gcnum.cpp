#include "isokit/gcnum.hpp"

#include "isokit/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <ostream>

namespace isokit {

double DualNumber::seminorm() const { return std::abs(re); }

DualNumber operator+(DualNumber p, DualNumber q) { return {p.re + q.re, p.im + q.im}; }
DualNumber operator-(DualNumber p, DualNumber q) { return {p.re - q.re, p.im - q.im}; }

DualNumber operator*(DualNumber p, DualNumber q) {
    return {p.re * q.re, p.re * q.im + q.re * p.im};
}

LorentzNumber LorentzNumber::from_lightcone(double plus, double minus) {
    return {0.5 * (plus + minus), 0.5 * (plus - minus)};
}

double LorentzNumber::quadratic_form() const { return re * re - im * im; }

LorentzNumber operator+(LorentzNumber p, LorentzNumber q) { return {p.re + q.re, p.im + q.im}; }
LorentzNumber operator-(LorentzNumber p, LorentzNumber q) { return {p.re - q.re, p.im - q.im}; }

LorentzNumber operator*(LorentzNumber p, LorentzNumber q) {
    return {p.re * q.re + p.im * q.im, p.re * q.im + q.re * p.im};
}

void Mat2::apply(double& x, double& y) const {
    const double nx = a11 * x + a12 * y;
    const double ny = a21 * x + a22 * y;
    x = nx;
    y = ny;
}

Mat2 Mat2::inverse() const {
    const double d = det();
    if (d == 0.0) throw Error(ErrorCode::SingularParameter, "Mat2::inverse: singular matrix");
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a11 * n.a11 + m.a12 * n.a21, m.a11 * n.a12 + m.a12 * n.a22,
            m.a21 * n.a11 + m.a22 * n.a21, m.a21 * n.a12 + m.a22 * n.a22};
}

Mat2 operator-(const Mat2& m, const Mat2& n) {
    return {m.a11 - n.a11, m.a12 - n.a12, m.a21 - n.a21, m.a22 - n.a22};
}

double frobenius_norm(const Mat2& m) {
    return std::sqrt(m.a11 * m.a11 + m.a12 * m.a12 + m.a21 * m.a21 + m.a22 * m.a22);
}

Mat2 dual_rep(DualNumber p) { return {p.re, 0.0, p.im, p.re}; }

Mat2 lorentz_rep(LorentzNumber p) { return {p.re, p.im, p.im, p.re}; }

Mat2 lorentz_rep_lightcone(LorentzNumber p) { return Mat2::diagonal(p.plus(), p.minus()); }

Mat2 lightcone_basis_change() { return {1.0, 1.0, 1.0, -1.0}; }

Mat2 galilean_rotation(double phi) { return dual_rep({1.0, phi}); }

Mat2 hyperbolic_rotation(double phi) { return lorentz_rep({std::cosh(phi), std::sinh(phi)}); }

void to_json(nlohmann::json& j, const DualNumber& p) { j = {{"re", p.re}, {"im", p.im}}; }

void from_json(const nlohmann::json& j, DualNumber& p) {
    j.at("re").get_to(p.re);
    j.at("im").get_to(p.im);
}

void to_json(nlohmann::json& j, const LorentzNumber& p) { j = {{"re", p.re}, {"im", p.im}}; }

void from_json(const nlohmann::json& j, LorentzNumber& p) {
    j.at("re").get_to(p.re);
    j.at("im").get_to(p.im);
}

std::ostream& operator<<(std::ostream& os, DualNumber p) {
    return os << p.re << (p.im < 0 ? " - " : " + ") << std::abs(p.im) << "*eps";
}

std::ostream& operator<<(std::ostream& os, LorentzNumber p) {
    return os << p.re << (p.im < 0 ? " - " : " + ") << std::abs(p.im) << "*l";
}

}  // namespace isokit
