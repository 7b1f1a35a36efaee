#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace diffvar {

// Mean function g on [0,1]. The sinusoid A sin(w pi x) carries exact
// derivatives of every order; a tabulated function differentiates by repeated
// central differences on its uniform grid (O(h^2), one-sided at the ends).
class MeanFunction {
 public:
  enum class Kind { Sinusoid, Tabulated };

  static MeanFunction sinusoid(double amplitude, double frequency);
  static MeanFunction tabulated(Eigen::VectorXd values, std::string label = "tabulated");

  Kind kind() const { return kind_; }
  double amplitude() const { return amplitude_; }
  double frequency() const { return frequency_; }
  const std::string& description() const { return description_; }

  double value(double x) const;

  // g(i/n) for i = 1..n.
  Eigen::VectorXd sample(int n) const;

  // J_p = integral over [0,1] of g^(p)(x)^2; closed form for the sinusoid,
  // trapezoid on the differenced table otherwise.
  double derivative_l2sq(int p) const;

 private:
  MeanFunction() = default;

  Kind kind_ = Kind::Sinusoid;
  double amplitude_ = 0;
  double frequency_ = 0;
  Eigen::VectorXd values_;
  std::string description_;
};

double j_functional(const MeanFunction& g, int p);

}  // namespace diffvar
