#include "symclass/rotation.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace symclass {

namespace {

Eigen::Vector4d coeffs_wxyz(const Eigen::Quaterniond& q) {
  return {q.w(), q.x(), q.y(), q.z()};
}

template <class V>
V sign_fixed(V v, double tol) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > tol)
      return v[i] < 0 ? V(-v) : v;
  }
  return v;
}

Eigen::Vector3d any_perpendicular(const Eigen::Vector3d& v) {
  const Eigen::Vector3d trial =
      std::abs(v.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
  return v.cross(trial).normalized();
}

} // namespace

Rotation::Rotation(const Eigen::Quaterniond& q) : q_(q.normalized()) {}

Rotation Rotation::about(const Eigen::Vector3d& axis, double angle) {
  return Rotation(Eigen::Quaterniond(Eigen::AngleAxisd(angle, axis.normalized())));
}

Rotation Rotation::aligning(const Eigen::Vector3d& from1, const Eigen::Vector3d& from2,
                            const Eigen::Vector3d& to1, const Eigen::Vector3d& to2) {
  auto frame = [](const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    Eigen::Matrix3d m;
    const Eigen::Vector3d e1 = a.normalized();
    const Eigen::Vector3d e2 = (b - b.dot(e1) * e1).normalized();
    m.col(0) = e1;
    m.col(1) = e2;
    m.col(2) = e1.cross(e2);
    return m;
  };
  const Eigen::Matrix3d r = frame(to1, to2) * frame(from1, from2).transpose();
  return Rotation(Eigen::Quaterniond(r));
}

Rotation Rotation::mapping(const Eigen::Vector3d& from, const Eigen::Vector3d& to) {
  const Eigen::Vector3d f = from.normalized();
  const Eigen::Vector3d t = to.normalized();
  if (f.dot(t) < -1 + 1e-12)
    return about(any_perpendicular(f), std::numbers::pi);
  return Rotation(Eigen::Quaterniond::FromTwoVectors(f, t));
}

Rotation Rotation::operator*(const Rotation& rhs) const { return Rotation(q_ * rhs.q_); }

Rotation Rotation::inverse() const { return Rotation(q_.conjugate()); }

Rotation Rotation::conjugated_by(const Rotation& g) const {
  return Rotation(g.q_ * q_ * g.q_.conjugate());
}

bool Rotation::is_identity(double tol) const { return std::abs(std::abs(q_.w()) - 1.0) <= tol; }

double Rotation::angle() const {
  const double w = std::min(1.0, std::abs(q_.w()));
  return 2.0 * std::acos(w);
}

Eigen::Vector3d Rotation::axis() const {
  return canonical_line(q_.vec());
}

Eigen::Vector4d Rotation::canonical() const {
  return sign_fixed<Eigen::Vector4d>(coeffs_wxyz(q_), rotation_tolerance);
}

std::string Rotation::str() const {
  const Eigen::Vector4d c = canonical();
  std::ostringstream os;
  os << "(" << c[0] << ", " << c[1] << ", " << c[2] << ", " << c[3] << ")";
  return os.str();
}

bool Rotation::approx_equal(const Rotation& other, double tol) const {
  const Eigen::Vector4d a = coeffs_wxyz(q_);
  const Eigen::Vector4d b = coeffs_wxyz(other.q_);
  return (a - b).cwiseAbs().maxCoeff() <= tol || (a + b).cwiseAbs().maxCoeff() <= tol;
}

Eigen::Vector3d canonical_line(const Eigen::Vector3d& v) {
  return sign_fixed<Eigen::Vector3d>(v.normalized(), 1e-9);
}

bool same_line(const Eigen::Vector3d& a, const Eigen::Vector3d& b, double tol) {
  return a.normalized().cross(b.normalized()).norm() <= tol;
}

} // namespace symclass
