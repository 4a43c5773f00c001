#pragma once

#include <stdexcept>
#include <string>

namespace cstardyn {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by sectionalize when the supplied data violates a module axiom.
class NotAModule : public std::runtime_error {
 public:
  NotAModule(std::string axiom, const std::string& what)
      : std::runtime_error(what), axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

/// The base permutation of a group part does not agree with the action.
class NotCompatible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A named defining relation fails beyond tolerance.
class RelationViolation : public std::runtime_error {
 public:
  RelationViolation(std::string relation, double residual, const std::string& what)
      : std::runtime_error(what), relation_(std::move(relation)), residual_(residual) {}
  const std::string& relation() const { return relation_; }
  double residual() const { return residual_; }

 private:
  std::string relation_;
  double residual_;
};

class NotBanachStoneForm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInAlgebra : public std::runtime_error {
 public:
  NotInAlgebra(double residual, const std::string& what)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace cstardyn
