#pragma once

#include <string>
#include <vector>

#include <Eigen/Geometry>

namespace symclass {

// Element comparison tolerance, componentwise on unit quaternions.
inline constexpr double rotation_tolerance = 1e-9;

// A rotation stored as a unit quaternion. q and -q denote the same rotation;
// comparisons account for that.
class Rotation {
public:
  Rotation() : q_(Eigen::Quaterniond::Identity()) {}
  explicit Rotation(const Eigen::Quaterniond& q);

  // Q(axis; angle). The axis need not be normalized.
  static Rotation about(const Eigen::Vector3d& axis, double angle);
  // Rotation taking the orthonormalized frame (from1, from2) to (to1, to2).
  // The angle between from1/from2 must match the angle between to1/to2.
  static Rotation aligning(const Eigen::Vector3d& from1, const Eigen::Vector3d& from2,
                           const Eigen::Vector3d& to1, const Eigen::Vector3d& to2);
  // Some rotation taking `from` onto `to`.
  static Rotation mapping(const Eigen::Vector3d& from, const Eigen::Vector3d& to);

  const Eigen::Quaterniond& quaternion() const noexcept { return q_; }

  Rotation operator*(const Rotation& rhs) const;
  Rotation inverse() const;
  Eigen::Vector3d apply(const Eigen::Vector3d& v) const { return q_ * v; }
  // g * this * g^-1
  Rotation conjugated_by(const Rotation& g) const;

  bool is_identity(double tol = rotation_tolerance) const;
  // Rotation angle in [0, pi].
  double angle() const;
  // Unit axis with a canonical sign: first component with magnitude above
  // tolerance is positive. Undefined for the identity.
  Eigen::Vector3d axis() const;

  // Quaternion with the first significant component positive.
  Eigen::Vector4d canonical() const;
  std::string str() const;

  bool approx_equal(const Rotation& other, double tol = rotation_tolerance) const;

private:
  Eigen::Quaterniond q_;
};

// Canonical representative of the line spanned by v (unit, sign fixed).
Eigen::Vector3d canonical_line(const Eigen::Vector3d& v);
bool same_line(const Eigen::Vector3d& a, const Eigen::Vector3d& b, double tol = 1e-7);

} // namespace symclass
