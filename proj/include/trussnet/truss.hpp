#pragma once

#include <array>
#include <vector>

#include "trussnet/graph.hpp"

namespace trussnet {

struct Member {
  int i = 0;
  int j = 0;
  int type_id = 0;

  bool operator==(const Member&) const = default;
};

/// Planar pin-jointed truss. Coordinates are in consistent but unnamed
/// length units; fixities flag per-node support of the x and y DOF.
struct Truss {
  std::vector<std::array<double, 2>> nodes;
  std::vector<std::array<bool, 2>> fixities;
  std::vector<Member> members;

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  int num_members() const { return static_cast<int>(members.size()); }
};

/// Throws InvalidTruss / DegenerateMember on: member i == j, duplicate
/// {i,j} pair, endpoint out of range, fewer than 3 constrained DOFs, or a
/// zero-length member.
void validate_truss(const Truss& truss);

/// Axial stiffness EA as a function of temperature. `coeff` is the linear
/// slope factor alpha or the quadratic factor beta depending on kind; the
/// constant law ignores it. Valid over [t_min, t_max].
struct TemperatureLaw {
  enum class Kind { Constant, Linear, Nonlinear };

  Kind kind = Kind::Constant;
  double base_ea = 1.0e4;
  double coeff = 0.0;
  double t_ref = 20.0;
  double t_min = 20.0;
  double t_max = 40.0;

  static TemperatureLaw constant(double base_ea);
  // EA(T) = base * (1 - alpha * (T - t_ref))
  static TemperatureLaw linear(double base_ea, double alpha, double t_ref);
  // EA(T) = base * (1 - beta * (T - t_ref)^2)
  static TemperatureLaw nonlinear(double base_ea, double beta, double t_ref);
};

struct MemberType {
  int type_id = 0;
  TemperatureLaw law;
};

/// Default member catalogues. Case study one: a single type with constant
/// EA = 1e4. Case study two: one linearly and one quadratically softening
/// type, both decreasing by 10% over [20, 40] C.
std::vector<MemberType> member_types_case_one();
std::vector<MemberType> member_types_case_two();

/// Evaluate EA(T). Throws TemperatureOutOfRange outside [t_min, t_max] and
/// NonpositiveStiffness if the law ever returns EA <= 0.
double ea_at(const TemperatureLaw& law, double temperature);
double ea_at(const MemberType& type, double temperature);

struct MemberGeometry {
  double length = 0.0;
  double sin_theta = 0.0;
  double cos_theta = 0.0;
};

/// Length and direction of member `member_index`, with the angle measured
/// from the +x axis along the member's i -> j direction.
MemberGeometry member_geometry(const Truss& truss, int member_index);

/// K = EA(T) / L for one member.
double member_axial_stiffness(const Truss& truss,
                              const std::vector<MemberType>& types,
                              int member_index, double temperature);

/// Feature layout applied by encode_truss. Case study one uses
/// (false, false, 1), case study two (true, true, 2).
struct EncodingConfig {
  bool include_member_onehot = false;
  bool include_temperature_global = false;
  int n_member_types = 1;
};

/// Deterministic truss -> graph encoding. Node attrs are [x, y, fix_x,
/// fix_y]; every member becomes two directed edges (i->j then j->i) with
/// attrs [L, sin, cos] in the edge's own direction plus an optional
/// member-type one-hot; the global vector is [T] or empty.
AttributedGraph encode_truss(const Truss& truss, double temperature,
                             const EncodingConfig& cfg);

}  // namespace trussnet
