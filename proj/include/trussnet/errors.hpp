#pragma once

#include <stdexcept>

namespace trussnet {

// Graph construction / manipulation
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct InvalidPermutation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Truss domain
struct DegenerateMember : std::domain_error {
  using std::domain_error::domain_error;
};
struct TemperatureOutOfRange : std::domain_error {
  using std::domain_error::domain_error;
};
struct NonpositiveStiffness : std::domain_error {
  using std::domain_error::domain_error;
};
struct InvalidTruss : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Synthesis
struct CollinearInput : std::domain_error {
  using std::domain_error::domain_error;
};
struct DuplicatePoints : std::domain_error {
  using std::domain_error::domain_error;
};
struct SeparationUnachievable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GenerationExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// FEM oracle
struct IsolatedNode : std::domain_error {
  using std::domain_error::domain_error;
};
struct AllDofsFixed : std::domain_error {
  using std::domain_error::domain_error;
};
struct MassNotPD : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EigenNoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RigidBodyMode : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// GNN engine / training
struct TapeMismatch : std::logic_error {
  using std::logic_error::logic_error;
};
struct NonFiniteLoss : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateTargets : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace trussnet
