#ifndef FRACDIFF_EVALUATION_HPP
#define FRACDIFF_EVALUATION_HPP

#include <stdexcept>
#include <string>

namespace fracdiff {

/// How a numeric result was obtained.
enum class Method { series, asymptotic, contour, closed_form, quadrature };

const char* method_name(Method m);

/// A numeric value together with an absolute-error estimate and the
/// method that produced it.
struct Evaluation {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  Method method = Method::closed_form;
};

/// Parameter outside the admissible region (invalid alpha/beta/theta/nu,
/// bad grid, nonpositive time, ...). Maps to process exit code 2.
class domain_error : public std::domain_error {
public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// A numerical method failed to reach its target accuracy (quadrature
/// budget exhausted, non-decaying contour integrand, series blow-up).
/// Maps to process exit code 3.
class convergence_error : public std::runtime_error {
public:
  explicit convergence_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace fracdiff

#endif
