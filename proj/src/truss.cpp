#include "trussnet/truss.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace trussnet {

void validate_truss(const Truss& truss) {
  const int n = truss.num_nodes();
  if (truss.fixities.size() != truss.nodes.size()) {
    throw InvalidTruss("fixity list not aligned with node list");
  }
  std::set<std::pair<int, int>> seen;
  for (std::size_t m = 0; m < truss.members.size(); ++m) {
    const Member& mem = truss.members[m];
    if (mem.i < 0 || mem.i >= n || mem.j < 0 || mem.j >= n) {
      throw InvalidTruss("member " + std::to_string(m) +
                         " endpoint out of range");
    }
    if (mem.i == mem.j) {
      throw InvalidTruss("member " + std::to_string(m) +
                         " connects a node to itself");
    }
    auto key = std::minmax(mem.i, mem.j);
    if (!seen.insert(key).second) {
      throw InvalidTruss("duplicate member {" + std::to_string(key.first) +
                         "," + std::to_string(key.second) + "}");
    }
    member_geometry(truss, static_cast<int>(m));  // throws on zero length
  }
  int constrained = 0;
  for (const auto& f : truss.fixities) constrained += int(f[0]) + int(f[1]);
  if (constrained < 3) {
    throw InvalidTruss("only " + std::to_string(constrained) +
                       " constrained DOFs; at least 3 are required");
  }
}

TemperatureLaw TemperatureLaw::constant(double base_ea) {
  return TemperatureLaw{Kind::Constant, base_ea, 0.0, 20.0, 20.0, 40.0};
}

TemperatureLaw TemperatureLaw::linear(double base_ea, double alpha,
                                      double t_ref) {
  return TemperatureLaw{Kind::Linear, base_ea, alpha, t_ref, 20.0, 40.0};
}

TemperatureLaw TemperatureLaw::nonlinear(double base_ea, double beta,
                                         double t_ref) {
  return TemperatureLaw{Kind::Nonlinear, base_ea, beta, t_ref, 20.0, 40.0};
}

std::vector<MemberType> member_types_case_one() {
  return {MemberType{0, TemperatureLaw::constant(1.0e4)}};
}

std::vector<MemberType> member_types_case_two() {
  return {MemberType{0, TemperatureLaw::linear(1.0e4, 0.005, 20.0)},
          MemberType{1, TemperatureLaw::nonlinear(1.0e4, 0.00025, 20.0)}};
}

double ea_at(const TemperatureLaw& law, double temperature) {
  if (temperature < law.t_min || temperature > law.t_max) {
    throw TemperatureOutOfRange("temperature " + std::to_string(temperature) +
                                " outside [" + std::to_string(law.t_min) +
                                ", " + std::to_string(law.t_max) + "]");
  }
  double ea = law.base_ea;
  switch (law.kind) {
    case TemperatureLaw::Kind::Constant:
      break;
    case TemperatureLaw::Kind::Linear:
      ea = law.base_ea * (1.0 - law.coeff * (temperature - law.t_ref));
      break;
    case TemperatureLaw::Kind::Nonlinear: {
      const double dt = temperature - law.t_ref;
      ea = law.base_ea * (1.0 - law.coeff * dt * dt);
      break;
    }
  }
  if (!(ea > 0.0)) {
    throw NonpositiveStiffness("EA(" + std::to_string(temperature) +
                               ") = " + std::to_string(ea));
  }
  return ea;
}

double ea_at(const MemberType& type, double temperature) {
  return ea_at(type.law, temperature);
}

MemberGeometry member_geometry(const Truss& truss, int member_index) {
  const Member& m = truss.members.at(member_index);
  const auto& a = truss.nodes.at(m.i);
  const auto& b = truss.nodes.at(m.j);
  const double dx = b[0] - a[0];
  const double dy = b[1] - a[1];
  const double length = std::hypot(dx, dy);
  if (length <= 0.0) {
    throw DegenerateMember("member " + std::to_string(member_index) +
                           " has zero length");
  }
  return MemberGeometry{length, dy / length, dx / length};
}

double member_axial_stiffness(const Truss& truss,
                              const std::vector<MemberType>& types,
                              int member_index, double temperature) {
  const Member& m = truss.members.at(member_index);
  const MemberGeometry geom = member_geometry(truss, member_index);
  return ea_at(types.at(m.type_id), temperature) / geom.length;
}

AttributedGraph encode_truss(const Truss& truss, double temperature,
                             const EncodingConfig& cfg) {
  const int n = truss.num_nodes();
  const int n_members = truss.num_members();
  const int de = 3 + (cfg.include_member_onehot ? cfg.n_member_types : 0);

  Eigen::MatrixXd nodes(n, 4);
  for (int i = 0; i < n; ++i) {
    nodes(i, 0) = truss.nodes[i][0];
    nodes(i, 1) = truss.nodes[i][1];
    nodes(i, 2) = truss.fixities[i][0] ? 1.0 : 0.0;
    nodes(i, 3) = truss.fixities[i][1] ? 1.0 : 0.0;
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(2 * n_members);
  Eigen::MatrixXd edge_attrs = Eigen::MatrixXd::Zero(2 * n_members, de);
  for (int m = 0; m < n_members; ++m) {
    const Member& mem = truss.members[m];
    if (cfg.include_member_onehot &&
        (mem.type_id < 0 || mem.type_id >= cfg.n_member_types)) {
      throw DimensionMismatch("member type id " + std::to_string(mem.type_id) +
                              " does not fit a one-hot of length " +
                              std::to_string(cfg.n_member_types));
    }
    const MemberGeometry geom = member_geometry(truss, m);
    const int fwd = 2 * m;
    const int rev = 2 * m + 1;
    edges.emplace_back(mem.i, mem.j);
    edges.emplace_back(mem.j, mem.i);
    edge_attrs(fwd, 0) = geom.length;
    edge_attrs(fwd, 1) = geom.sin_theta;
    edge_attrs(fwd, 2) = geom.cos_theta;
    edge_attrs(rev, 0) = geom.length;
    edge_attrs(rev, 1) = -geom.sin_theta;
    edge_attrs(rev, 2) = -geom.cos_theta;
    if (cfg.include_member_onehot) {
      edge_attrs(fwd, 3 + mem.type_id) = 1.0;
      edge_attrs(rev, 3 + mem.type_id) = 1.0;
    }
  }

  Eigen::VectorXd global;
  if (cfg.include_temperature_global) {
    global.resize(1);
    global(0) = temperature;
  }
  return build_graph(std::move(nodes), std::move(edges), std::move(edge_attrs),
                     std::move(global));
}

}  // namespace trussnet
